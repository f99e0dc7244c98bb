//! Curve classes of the special fiber, written in the Schubert-line basis
//! `L_1, ..., L_m`.
//!
//! An admissible sequence `I = (i_1 < ... < i_r)` labels the invariant curve
//! `L_I`. Its class is `sum_j d_{i_j} L_{i_j}` with `d_{i_1} = 1` and
//! `d_{i_k} = -sum_{j<k} d_{i_j} (i_k, i_j)`. Three independent routes to
//! these coefficients are provided: the linear recursion ([`expand`]), the
//! two-term surface relation ([`expand_oracle`]), and dual-root pairings
//! ([`expand_coroot`]).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::Coroot;
use crate::scalar::{self, Scalar};
use crate::word::{AdmissibleSeq, Word};

/// Integer vector over the Schubert-line basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CurveClass<T> {
    pub coeffs: Vec<T>,
}

impl<T: Scalar> CurveClass<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn zero(m: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); m],
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `L_pos` (1-based).
    pub fn coeff(&self, pos: usize) -> &T {
        &self.coeffs[pos - 1]
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, T::one())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -T::one())
    }

    /// `self + k * other`.
    pub fn combine(&self, other: &Self, k: T) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| scalar::add(a, &scalar::mul(&k, b)?))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }
}

impl<T: Scalar> fmt::Display for CurveClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "L_{}", k + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expansion route selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Linear recursion on the coefficients.
    #[default]
    Fast,
    /// Literal two-term recursion; exponential in `|I|`.
    Oracle,
    /// Pairings of iterated dual roots.
    Coroot,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Method::Fast),
            "oracle" => Ok(Method::Oracle),
            "coroot" => Ok(Method::Coroot),
            other => Err(Error::Precondition(format!("unknown expansion method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Fast => "fast",
            Method::Oracle => "oracle",
            Method::Coroot => "coroot",
        })
    }
}

pub fn schubert_line<T: Scalar>(w: &Word, r: usize) -> Result<CurveClass<T>> {
    let r0 = w.check_pos(r)?;
    let mut c = CurveClass::zero(w.len());
    c.coeffs[r0] = T::one();
    Ok(c)
}

/// 0-based positions of a nonempty sequence that fits in `w`.
fn positions0(w: &Word, seq: &AdmissibleSeq) -> Result<Vec<usize>> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    seq.positions().iter().map(|&p| w.check_pos(p)).collect()
}

/// `-sum_j d[j] (p, i_j)`: the coefficient `p` would receive if appended to
/// the sequence `pos0` whose coefficients are `d`.
pub(crate) fn next_coefficient<T: Scalar>(w: &Word, pos0: &[usize], d: &[T], p0: usize) -> Result<T> {
    let s = pos0
        .iter()
        .zip(d)
        .try_fold(T::zero(), |acc, (&i0, di)| scalar::add_scaled(&acc, di, w.pp0(p0, i0)))?;
    scalar::neg(&s)
}

/// Coefficients `d_{i_1}, ..., d_{i_r}` by the linear recursion.
pub(crate) fn coefficients<T: Scalar>(w: &Word, pos0: &[usize]) -> Result<Vec<T>> {
    let mut d: Vec<T> = Vec::with_capacity(pos0.len());
    for (k, &p0) in pos0.iter().enumerate() {
        let dk = if k == 0 {
            T::one()
        } else {
            next_coefficient(w, &pos0[..k], &d, p0)?
        };
        d.push(dk);
    }
    Ok(d)
}

fn scatter<T: Scalar>(m: usize, pos0: &[usize], vals: Vec<T>) -> CurveClass<T> {
    let mut c = CurveClass::zero(m);
    for (&p0, v) in pos0.iter().zip(vals) {
        c.coeffs[p0] = v;
    }
    c
}

/// Class of `L_I` by the linear coefficient recursion.
pub fn expand<T: Scalar>(w: &Word, seq: &AdmissibleSeq) -> Result<CurveClass<T>> {
    let pos0 = positions0(w, seq)?;
    let d = coefficients(w, &pos0)?;
    Ok(scatter(w.len(), &pos0, d))
}

/// Class of `L_I` from `L_I = L_{i_1 I'} - (i_2, i_1) L_{i_2 I'}`, recursively.
pub fn expand_oracle<T: Scalar>(w: &Word, seq: &AdmissibleSeq) -> Result<CurveClass<T>> {
    fn rec<T: Scalar>(w: &Word, pos0: &[usize]) -> Result<CurveClass<T>> {
        match pos0 {
            [] => unreachable!(),
            [p0] => {
                let mut c = CurveClass::zero(w.len());
                c.coeffs[*p0] = T::one();
                Ok(c)
            }
            [i1, i2, rest @ ..] => {
                let mut head = vec![*i1];
                head.extend_from_slice(rest);
                let mut tail = vec![*i2];
                tail.extend_from_slice(rest);
                let a = rec::<T>(w, &head)?;
                let b = rec::<T>(w, &tail)?;
                a.combine(&b, T::from(-w.pp0(*i2, *i1)))
            }
        }
    }
    let pos0 = positions0(w, seq)?;
    rec(w, &pos0)
}

/// Class of `L_I` with `d_{i_j} = -<alpha^vee_{i_1 ... i_{j-1}}, alpha_{i_j}>`.
pub fn expand_coroot<T: Scalar>(w: &Word, seq: &AdmissibleSeq) -> Result<CurveClass<T>> {
    let pos0 = positions0(w, seq)?;
    let rs = w.root_system();
    let mut running: Coroot<T> = rs.simple_coroot(w.root0(pos0[0]) + 1)?;
    let mut d = vec![T::one()];
    for &p0 in &pos0[1..] {
        let root0 = w.root0(p0);
        d.push(scalar::neg(&rs.coroot_pairing0(&running, root0)?)?);
        running = rs.dual_reflect0(&running, root0)?;
    }
    Ok(scatter(w.len(), &pos0, d))
}

/// Literal repeated-root formula: for `beta(i_1) = beta(i_2)` it returns
/// `sum_{j >= 2} c_{i_j} L_{i_j}` with `c_{i_2} = -1` and
/// `c_{i_j} = <alpha^vee_{i_2 ... i_{j-1}}, alpha_{i_j}>`.
///
/// This equals `-expand(I')` for the tail `I' = (i_2, ..., i_r)`. It does not
/// agree with [`expand`] on `I` (the leading `L_{i_1}` term and the `L_{i_2}`
/// coefficient differ), so nothing downstream relies on it.
pub fn expand_repeated<T: Scalar>(w: &Word, seq: &AdmissibleSeq) -> Result<CurveClass<T>> {
    let pos0 = positions0(w, seq)?;
    if pos0.len() < 2 {
        return Err(Error::Precondition("repeated-root formula needs |I| >= 2".into()));
    }
    if w.root0(pos0[0]) != w.root0(pos0[1]) {
        return Err(Error::Precondition(
            "repeated-root formula needs the first two positions to carry the same root".into(),
        ));
    }
    let rs = w.root_system();
    let mut running: Coroot<T> = rs.simple_coroot(w.root0(pos0[1]) + 1)?;
    let mut c = vec![T::zero(), -T::one()];
    for &p0 in &pos0[2..] {
        let root0 = w.root0(p0);
        c.push(rs.coroot_pairing0(&running, root0)?);
        running = rs.dual_reflect0(&running, root0)?;
    }
    Ok(scatter(w.len(), &pos0, c))
}

pub fn expand_with<T: Scalar>(w: &Word, seq: &AdmissibleSeq, method: Method) -> Result<CurveClass<T>> {
    match method {
        Method::Fast => expand(w, seq),
        Method::Oracle => expand_oracle(w, seq),
        Method::Coroot => expand_coroot(w, seq),
    }
}

/// Report-only size check: `Some(bound)` when some coefficient exceeds
/// `2 * max|cartan|^(|I|-1)` in absolute value.
pub fn soft_bound_violation<T: Scalar>(w: &Word, seq: &AdmissibleSeq, class: &CurveClass<T>) -> Option<T> {
    let max_entry = w
        .root_system()
        .cartan()
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or(2);
    let mut bound = T::from(2);
    for _ in 1..seq.len() {
        bound = bound.checked_mul(&T::from(max_entry))?;
    }
    class.coeffs.iter().any(|c| c.abs() > bound).then_some(bound)
}
