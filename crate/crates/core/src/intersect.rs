//! Divisors, intersection numbers with curves, the canonical class, Mori
//! rays, and ampleness tests.
//!
//! Two divisor bases are supported. The boundary basis consists of the
//! Schubert boundary divisors `D_i` and the non-Schubert ones `D'_i`; the LT
//! basis is `𝓛_1, ..., 𝓛_m`, pulled back from fundamental-weight bundles.
//! Primitive intersection numbers with Schubert lines:
//!
//! | divisor | `· L_r`                                          |
//! |---------|--------------------------------------------------|
//! | `D_i`   | `0` if `i < r`, `1` if `i = r`, `(i, r)` if `i > r` |
//! | `D'_i`  | `1` if `i = r`, else `0`                          |
//! | `𝓛_j`  | `1` if `j >= r` and `beta(j) = beta(r)`, else `0`  |

use serde::{Deserialize, Serialize};

use crate::chow::CurveClass;
use crate::error::{Error, Result};
use crate::extremal::{self, ExtremalBasis};
use crate::scalar::{self, Scalar};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "basis")]
pub enum DivisorClass<T> {
    /// Coefficients on `𝓛_1, ..., 𝓛_m`.
    #[serde(rename = "LT")]
    Lt { coeffs: Vec<T> },
    /// Coefficients on `D_1, ..., D_m` and `D'_1, ..., D'_m`.
    #[serde(rename = "boundary")]
    Boundary { schubert: Vec<T>, nonschubert: Vec<T> },
}

impl<T: Scalar> DivisorClass<T> {
    pub fn lt(coeffs: Vec<T>) -> Self {
        DivisorClass::Lt { coeffs }
    }

    pub fn boundary(schubert: Vec<T>, nonschubert: Vec<T>) -> Self {
        DivisorClass::Boundary { schubert, nonschubert }
    }

    /// Boundary divisor `sum_i a_i D_i` with no `D'` part.
    pub fn schubert_boundary(a: Vec<T>) -> Self {
        let m = a.len();
        DivisorClass::Boundary {
            schubert: a,
            nonschubert: vec![T::zero(); m],
        }
    }

    pub fn basis_name(&self) -> &'static str {
        match self {
            DivisorClass::Lt { .. } => "LT",
            DivisorClass::Boundary { .. } => "boundary",
        }
    }

    fn check_len(&self, m: usize) -> Result<()> {
        let lens: &[usize] = match self {
            DivisorClass::Lt { coeffs } => &[coeffs.len()],
            DivisorClass::Boundary { schubert, nonschubert } => &[schubert.len(), nonschubert.len()],
        };
        match lens.iter().find(|&&l| l != m) {
            Some(&found) => Err(Error::LengthMismatch { expected: m, found }),
            None => Ok(()),
        }
    }

    /// The same class in the boundary basis.
    pub fn to_boundary(&self, w: &Word) -> Result<Self> {
        self.check_len(w.len())?;
        match self {
            DivisorClass::Boundary { .. } => Ok(self.clone()),
            DivisorClass::Lt { coeffs } => {
                let m = w.len();
                let mut schubert = vec![T::zero(); m];
                for (j, aj) in coeffs.iter().enumerate() {
                    if aj.is_zero() {
                        continue;
                    }
                    let col = lt_to_boundary::<T>(w, j + 1)?;
                    for (s, c) in schubert.iter_mut().zip(&col) {
                        *s = scalar::add(s, &scalar::mul(aj, c)?)?;
                    }
                }
                Ok(DivisorClass::Boundary {
                    schubert,
                    nonschubert: vec![T::zero(); m],
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// `D_i`, pulled back from the Schubert section.
    Schubert,
    /// `D'_i`, pulled back from the non-Schubert section.
    NonSchubert,
}

/// `𝓛_j · L_r`.
pub fn lt_dot_schubert(w: &Word, j: usize, r: usize) -> Result<i32> {
    let j0 = w.check_pos(j)?;
    let r0 = w.check_pos(r)?;
    Ok(i32::from(j0 >= r0 && w.root0(j0) == w.root0(r0)))
}

fn boundary_dot0(w: &Word, i0: usize, r0: usize, kind: BoundaryKind) -> i32 {
    use std::cmp::Ordering::*;
    match (i0.cmp(&r0), kind) {
        (Less, _) => 0,
        (Equal, _) => 1,
        (Greater, BoundaryKind::Schubert) => w.pp0(i0, r0),
        (Greater, BoundaryKind::NonSchubert) => 0,
    }
}

/// `D_i · L_r` or `D'_i · L_r`.
pub fn boundary_dot_schubert(w: &Word, i: usize, r: usize, kind: BoundaryKind) -> Result<i32> {
    let i0 = w.check_pos(i)?;
    let r0 = w.check_pos(r)?;
    Ok(boundary_dot0(w, i0, r0, kind))
}

/// `D · L_r` for a Schubert line, 0-based `r0`.
fn divisor_dot_line<T: Scalar>(w: &Word, d: &DivisorClass<T>, r0: usize) -> Result<T> {
    let m = w.len();
    let mut acc = T::zero();
    match d {
        DivisorClass::Lt { coeffs } => {
            for (j0, a) in coeffs.iter().enumerate().skip(r0) {
                if w.root0(j0) == w.root0(r0) {
                    acc = scalar::add(&acc, a)?;
                }
            }
        }
        DivisorClass::Boundary { schubert, nonschubert } => {
            for i0 in r0..m {
                acc = scalar::add_scaled(&acc, &schubert[i0], boundary_dot0(w, i0, r0, BoundaryKind::Schubert))?;
            }
            acc = scalar::add(&acc, &nonschubert[r0])?;
        }
    }
    Ok(acc)
}

/// Intersection number `D · c`.
pub fn divisor_dot_curve<T: Scalar>(w: &Word, d: &DivisorClass<T>, c: &CurveClass<T>) -> Result<T> {
    d.check_len(w.len())?;
    if c.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            found: c.len(),
        });
    }
    let mut acc = T::zero();
    for (r0, cr) in c.coeffs.iter().enumerate() {
        if cr.is_zero() {
            continue;
        }
        acc = scalar::add(&acc, &scalar::mul(cr, &divisor_dot_line(w, d, r0)?)?)?;
    }
    Ok(acc)
}

/// `K = -sum_i (D_i + D'_i)`.
pub fn canonical_class<T: Scalar>(w: &Word) -> DivisorClass<T> {
    let m = w.len();
    DivisorClass::Boundary {
        schubert: vec![-T::one(); m],
        nonschubert: vec![-T::one(); m],
    }
}

/// `K · L_r = -2 - sum_{j > r} (j, r)`.
pub fn canonical_dot_schubert<T: Scalar>(w: &Word, r: usize) -> Result<T> {
    let r0 = w.check_pos(r)?;
    let mut acc = T::from(-2);
    for j0 in r0 + 1..w.len() {
        acc = scalar::sub(&acc, &T::from(w.pp0(j0, r0)))?;
    }
    Ok(acc)
}

/// Boundary coordinates `(a_{1j}, ..., a_{jj}, 0, ..., 0)` of `𝓛_j`.
pub fn lt_to_boundary<T: Scalar>(w: &Word, j: usize) -> Result<Vec<T>> {
    let j0 = w.check_pos(j)?;
    let mut a = vec![T::zero(); w.len()];
    a[j0] = T::one();
    for r0 in (0..j0).rev() {
        let mut v = T::from(i32::from(w.root0(j0) == w.root0(r0)));
        for i0 in r0 + 1..=j0 {
            v = scalar::sub(&v, &scalar::scale(&a[i0], w.pp0(i0, r0))?)?;
        }
        a[r0] = v;
    }
    Ok(a)
}

/// Why a Schubert line is or is not a Mori ray.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineStatus {
    pub position: usize,
    pub extremal: bool,
    /// First later position `j` with `(j, r) > 0`, and that value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<(usize, i32)>,
    /// `K · L_r`; only evaluated for extremal lines.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_degree: Option<i64>,
    pub mori: bool,
}

/// Mori diagnosis of the Schubert line `L_r`.
pub fn line_status(w: &Word, r: usize) -> Result<LineStatus> {
    let r0 = w.check_pos(r)?;
    let obstruction = (r0 + 1..w.len())
        .map(|j0| (j0 + 1, w.pp0(j0, r0)))
        .find(|&(_, v)| v > 0);
    if obstruction.is_some() {
        return Ok(LineStatus {
            position: r,
            extremal: false,
            obstruction,
            canonical_degree: None,
            mori: false,
        });
    }
    let k: i64 = canonical_dot_schubert(w, r)?;
    Ok(LineStatus {
        position: r,
        extremal: true,
        obstruction: None,
        canonical_degree: Some(k),
        mori: k < 0,
    })
}

/// `L_r` is Mori iff `(j, r) <= 0` for all `j > r` and at most one of them
/// is negative, that one being `-1`.
pub fn is_mori_ray(w: &Word, r: usize) -> Result<bool> {
    let r0 = w.check_pos(r)?;
    let mut negative_sum = 0i64;
    for j0 in r0 + 1..w.len() {
        let v = w.pp0(j0, r0);
        if v > 0 {
            return Ok(false);
        }
        negative_sum += i64::from(v);
        if negative_sum < -1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Positions `r` whose Schubert line is a Mori ray, ascending.
pub fn mori_rays(w: &Word) -> Vec<usize> {
    (1..=w.len())
        .filter(|&r| is_mori_ray(w, r).expect("position in range"))
        .collect()
}

/// Fano iff every Schubert line is a Mori ray.
pub fn is_fano(w: &Word) -> bool {
    (1..=w.len()).all(|r| is_mori_ray(w, r).expect("position in range"))
}

/// `D · L_j(w)` for every basis ray.
pub fn ray_degrees<T: Scalar>(w: &Word, basis: &ExtremalBasis<T>, d: &DivisorClass<T>) -> Result<Vec<T>> {
    basis.rays.iter().map(|ray| divisor_dot_curve(w, d, ray)).collect()
}

/// Ampleness on the toric fiber: `D · L_j(w) > 0` for every basis ray.
pub fn toric_ample<T: Scalar>(w: &Word, d: &DivisorClass<T>) -> Result<bool> {
    let basis = extremal::extremal_basis::<T>(w)?;
    toric_ample_with(w, &basis, d)
}

/// [`toric_ample`] against a precomputed basis.
pub fn toric_ample_with<T: Scalar>(w: &Word, basis: &ExtremalBasis<T>, d: &DivisorClass<T>) -> Result<bool> {
    Ok(ray_degrees(w, basis, d)?.iter().all(|x| x.is_positive()))
}

/// Ampleness on the Bott-Samelson variety: all LT coefficients positive.
pub fn bsdh_ample<T: Scalar>(d: &DivisorClass<T>) -> Result<bool> {
    match d {
        DivisorClass::Lt { coeffs } => Ok(coeffs.iter().all(|a| a.is_positive())),
        DivisorClass::Boundary { .. } => Err(Error::WrongBasis { expected: "LT" }),
    }
}

/// Divisor JSON fragment: `{"divisor": {"basis": "LT", "coeffs": [...]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorSpec {
    pub divisor: DivisorClass<i64>,
}
