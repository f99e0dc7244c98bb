//! Root-system data and coroot-lattice arithmetic.
//!
//! The Cartan matrix is stored with the convention
//! `cartan[i][j] = <alpha_j, alpha_i^vee>`, i.e. row `i` lists how the simple
//! roots pair against the `i`-th simple coroot. Public methods take 1-based
//! root indices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Cartan type letter of a finite irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }

    /// Whether `rank` gives a valid finite type for this family.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Family::from_letter(c).ok_or(Error::InvalidType {
                family: c,
                rank: 0,
            }),
            _ => Err(Error::InvalidType {
                family: '?',
                rank: 0,
            }),
        }
    }
}

/// A validated (generalized) Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSystem {
    cartan: Vec<Vec<i32>>,
    finite: bool,
    name: Option<(Family, usize)>,
}

impl RootSystem {
    /// Standard Bourbaki Cartan matrix of a finite type.
    pub fn named(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::InvalidType {
                family: family.letter(),
                rank,
            });
        }
        let n = rank;
        let mut c = vec![vec![0i32; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, cij: i32, cji: i32| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        match family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::B | Family::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // B: alpha_n short; C: alpha_n long.
                if family == Family::B {
                    link(n - 2, n - 1, -1, -2);
                } else {
                    link(n - 2, n - 1, -2, -1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => {
                // alpha_1 short.
                link(0, 1, -3, -1);
            }
        }
        let mut rs = Self::from_cartan(c.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect())?;
        debug_assert!(rs.finite);
        rs.name = Some((family, rank));
        Ok(rs)
    }

    /// Validates an arbitrary generalized Cartan matrix.
    ///
    /// Indices in error values are 1-based. Non-finite matrices are accepted
    /// and flagged through [`RootSystem::is_finite`].
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 {
            return Err(Error::EmptyCartan);
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        let mut small = vec![vec![0i32; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = cartan[i][j];
                if i == j {
                    if v != 2 {
                        return Err(Error::BadDiagonal { index: i + 1, value: v });
                    }
                } else {
                    if v > 0 {
                        return Err(Error::PositiveOffDiagonal {
                            row: i + 1,
                            col: j + 1,
                            value: v,
                        });
                    }
                    if (v == 0) != (cartan[j][i] == 0) {
                        let (row, col) = if v == 0 { (i, j) } else { (j, i) };
                        return Err(Error::AsymmetricZero {
                            row: row + 1,
                            col: col + 1,
                        });
                    }
                }
                small[i][j] = i32::try_from(v).map_err(|_| Error::EntryTooLarge {
                    row: i + 1,
                    col: j + 1,
                    value: v,
                })?;
            }
        }
        let finite = is_finite_type(&small);
        Ok(Self {
            cartan: small,
            finite,
            name: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// `(family, rank)` when built by [`RootSystem::named`].
    pub fn name(&self) -> Option<(Family, usize)> {
        self.name
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// `<alpha_j, alpha_i^vee>` for 0-based indices; callers guarantee range.
    #[inline]
    pub(crate) fn entry(&self, j0: usize, i0: usize) -> i32 {
        self.cartan[i0][j0]
    }

    pub(crate) fn check_root(&self, index: usize) -> Result<usize> {
        if index == 0 || index > self.rank() {
            Err(Error::OutOfRange {
                what: "root index",
                index,
                bound: self.rank(),
            })
        } else {
            Ok(index - 1)
        }
    }

    /// `<alpha_j, alpha_i^vee>`, the integer written `(j, i)` for simple roots.
    pub fn pairing(&self, j_root: usize, i_root: usize) -> Result<i32> {
        let j0 = self.check_root(j_root)?;
        let i0 = self.check_root(i_root)?;
        Ok(self.entry(j0, i0))
    }

    pub fn simple_coroot<T: Scalar>(&self, i_root: usize) -> Result<Coroot<T>> {
        let i0 = self.check_root(i_root)?;
        let mut coeffs = vec![T::zero(); self.rank()];
        coeffs[i0] = T::one();
        Ok(Coroot { coeffs })
    }

    fn check_coroot<T: Scalar>(&self, g: &Coroot<T>) -> Result<()> {
        if g.coeffs.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: g.coeffs.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn coroot_pairing0<T: Scalar>(&self, g: &Coroot<T>, j0: usize) -> Result<T> {
        g.coeffs
            .iter()
            .zip(&self.cartan)
            .try_fold(T::zero(), |acc, (gi, row)| scalar::add_scaled(&acc, gi, row[j0]))
    }

    /// `<g, alpha_j>` for a coroot `g = sum_i g_i alpha_i^vee`.
    pub fn coroot_pairing<T: Scalar>(&self, g: &Coroot<T>, j_root: usize) -> Result<T> {
        self.check_coroot(g)?;
        let j0 = self.check_root(j_root)?;
        self.coroot_pairing0(g, j0)
    }

    pub(crate) fn dual_reflect0<T: Scalar>(&self, x: &Coroot<T>, i0: usize) -> Result<Coroot<T>> {
        let p = self.coroot_pairing0(x, i0)?;
        let mut out = x.clone();
        out.coeffs[i0] = scalar::sub(&out.coeffs[i0], &p)?;
        Ok(out)
    }

    /// `s_{alpha_i^vee}(x) = x - <x, alpha_i> alpha_i^vee`.
    pub fn dual_reflect<T: Scalar>(&self, x: &Coroot<T>, i_root: usize) -> Result<Coroot<T>> {
        self.check_coroot(x)?;
        let i0 = self.check_root(i_root)?;
        self.dual_reflect0(x, i0)
    }

    /// `s_{j_r} ... s_{j_2} (alpha_{j_1}^vee)`.
    pub fn iterated_coroot<T: Scalar>(&self, roots: &[usize]) -> Result<Coroot<T>> {
        let (&first, rest) = roots.split_first().ok_or(Error::EmptySequence)?;
        let mut g = self.simple_coroot(first)?;
        for &r in rest {
            let r0 = self.check_root(r)?;
            g = self.dual_reflect0(&g, r0)?;
        }
        Ok(g)
    }
}

impl RootSystem {
    /// Orbit of `alpha_i^vee` under the dual reflections, by breadth-first
    /// closure. `None` once more than `limit` elements have been found, which
    /// happens for every non-finite system given a large enough limit.
    pub fn dual_orbit<T: Scalar>(&self, i_root: usize, limit: usize) -> Result<Option<Vec<Coroot<T>>>> {
        let start: Coroot<T> = self.simple_coroot(i_root)?;
        let mut seen = std::collections::HashSet::new();
        let mut order = vec![start.clone()];
        seen.insert(start);
        let mut next = 0;
        while next < order.len() {
            let x = order[next].clone();
            next += 1;
            for k in 0..self.rank() {
                let y = self.dual_reflect0(&x, k)?;
                if seen.insert(y.clone()) {
                    if order.len() == limit {
                        return Ok(None);
                    }
                    order.push(y);
                }
            }
        }
        Ok(Some(order))
    }
}

/// Positive-definiteness of the symmetrized matrix, via Sylvester's criterion.
/// Non-symmetrizable matrices are never finite type.
fn is_finite_type(c: &[Vec<i32>]) -> bool {
    let n = c.len();
    // Positive weights d with d_i c_ij = d_j c_ji, built per connected component.
    let mut d: Vec<Option<BigInt>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(BigInt::from(1));
        let mut component = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j == i || c[i][j] == 0 || d[j].is_some() {
                    continue;
                }
                // d_j / d_i = c_ij / c_ji
                let di = d[i].clone().unwrap();
                let num = BigInt::from(c[i][j].abs());
                let den = BigInt::from(c[j][i].abs());
                for &k in &component {
                    let dk = d[k].take().unwrap();
                    d[k] = Some(dk * &den);
                }
                d[j] = Some(di * num);
                component.push(j);
                stack.push(j);
            }
        }
    }
    let d: Vec<BigInt> = d.into_iter().map(Option::unwrap).collect();
    let mut b: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| &d[i] * BigInt::from(c[i][j])).collect())
        .collect();
    for i in 0..n {
        for j in 0..i {
            if b[i][j] != b[j][i] {
                return false;
            }
        }
    }
    // Fraction-free elimination: after step k the pivot is the k-th leading minor.
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if !b[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &b[i][j] * &b[k][k] - &b[i][k] * &b[k][j];
                debug_assert!((&v % &prev).is_zero());
                b[i][j] = v / &prev;
            }
        }
        prev = b[k][k].clone();
    }
    true
}

/// A coroot-lattice vector `sum_i coeffs[i] alpha_i^vee`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coroot<T> {
    pub coeffs: Vec<T>,
}

impl<T: Scalar> Coroot<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); rank],
        }
    }

    /// Signed sum of the coefficients.
    pub fn height(&self) -> Result<T> {
        scalar::sum(&self.coeffs)
    }
}

/// Root-system JSON fragment: `{"type": {"family":"A","rank":3}}` or
/// `{"cartan": [[2,-1],[-1,2]]}`. Exactly one key may be present.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemSpec {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub named: Option<NamedType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn build(&self) -> Result<RootSystem> {
        match (&self.named, &self.cartan) {
            (Some(t), None) => RootSystem::named(t.family, t.rank),
            (None, Some(c)) => RootSystem::from_cartan(c.clone()),
            (Some(_), Some(_)) => Err(Error::Precondition(
                "root system must give exactly one of \"type\" and \"cartan\"".into(),
            )),
            (None, None) => Err(Error::Precondition(
                "root system needs a \"type\" or a \"cartan\" key".into(),
            )),
        }
    }
}
