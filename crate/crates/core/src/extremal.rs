//! The extremal-ray basis `L_1(w), ..., L_m(w)` of the curve group.
//!
//! `L_j(w)` is the first basis curve of the suffix word `[j-1]w`, shifted
//! back into the numbering of `w`. Two selection rules produce its label:
//!
//! * [`Algorithm::Comp`] walks the positions after the start and appends a
//!   position exactly when its coefficient in the extended expansion would be
//!   negative.
//! * [`Algorithm::Weyl`] looks for the first repeat of the starting root and
//!   then appends a position exactly when the dual reflection it carries
//!   raises the height of the running dual root.
//!
//! Both rules always select the same positions; [`extremal_basis`] checks it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chow::{self, CurveClass};
use crate::error::{Error, Result};
use crate::rootsys::Coroot;
use crate::scalar::{self, Scalar};
use crate::word::{AdmissibleSeq, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    #[default]
    Comp,
    Weyl,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "comp" => Ok(Algorithm::Comp),
            "weyl" => Ok(Algorithm::Weyl),
            other => Err(Error::Precondition(format!("unknown basis algorithm {other:?}"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Comp => "comp",
            Algorithm::Weyl => "weyl",
        })
    }
}

/// Label of `L_1(w)` by the coefficient-sign rule. 0-based positions.
fn first_ray_comp<T: Scalar>(w: &Word) -> Result<Vec<usize>> {
    let mut pos0 = vec![0];
    let mut d = vec![T::one()];
    for p0 in 1..w.len() {
        let c = chow::next_coefficient(w, &pos0, &d, p0)?;
        if c.is_negative() {
            pos0.push(p0);
            d.push(c);
        }
    }
    Ok(pos0)
}

/// Label of `L_1(w)` by the height rule. 0-based positions.
fn first_ray_weyl<T: Scalar>(w: &Word) -> Result<Vec<usize>> {
    let rs = w.root_system();
    let first = w.root0(0);
    let Some(i2) = (1..w.len()).find(|&p0| w.root0(p0) == first) else {
        return Ok(vec![0]);
    };
    let mut pos0 = vec![0, i2];
    let mut running: Coroot<T> = rs.simple_coroot(first + 1)?;
    let mut height = running.height()?;
    for p0 in i2 + 1..w.len() {
        let candidate = rs.dual_reflect0(&running, w.root0(p0))?;
        let h = candidate.height()?;
        if h > height {
            pos0.push(p0);
            running = candidate;
            height = h;
        }
    }
    Ok(pos0)
}

/// Label `I([start-1]w)` of the basis curve `L_start(w)`, in the positions of `w`.
pub fn basis_subsequence<T: Scalar>(w: &Word, start: usize, algorithm: Algorithm) -> Result<AdmissibleSeq> {
    w.check_pos(start)?;
    let suffix = w.suffix(start - 1)?;
    let pos0 = match algorithm {
        Algorithm::Comp => first_ray_comp::<T>(&suffix)?,
        Algorithm::Weyl => first_ray_weyl::<T>(&suffix)?,
    };
    Ok(AdmissibleSeq::from_sorted_unchecked(
        pos0.into_iter().map(|p0| p0 + start).collect(),
    ))
}

/// The basis `L_j(w)` with the labels selecting each ray.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalBasis<T> {
    pub rays: Vec<CurveClass<T>>,
    pub subsequences: Vec<AdmissibleSeq>,
}

impl<T: Scalar> ExtremalBasis<T> {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }
}

/// Computes every basis ray, running both selection rules and failing with
/// [`Error::AlgorithmDisagreement`] if they ever differ.
///
/// The empty word has the empty basis.
pub fn extremal_basis<T: Scalar>(w: &Word) -> Result<ExtremalBasis<T>> {
    let m = w.len();
    let mut rays = Vec::with_capacity(m);
    let mut subsequences = Vec::with_capacity(m);
    for start in 1..=m {
        let comp = basis_subsequence::<T>(w, start, Algorithm::Comp)?;
        let weyl = basis_subsequence::<T>(w, start, Algorithm::Weyl)?;
        if comp != weyl {
            return Err(Error::AlgorithmDisagreement {
                start,
                comp: comp.positions().to_vec(),
                weyl: weyl.positions().to_vec(),
            });
        }
        rays.push(chow::expand(w, &comp)?);
        subsequences.push(comp);
    }
    Ok(ExtremalBasis { rays, subsequences })
}

/// Coordinates of `c` in the (unitriangular) ray basis.
pub fn express_in_basis<T: Scalar>(basis: &ExtremalBasis<T>, c: &CurveClass<T>) -> Result<Vec<T>> {
    let m = basis.len();
    if c.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            found: c.len(),
        });
    }
    let mut x: Vec<T> = Vec::with_capacity(m);
    for k in 0..m {
        let mut v = c.coeffs[k].clone();
        for (j, xj) in x.iter().enumerate() {
            let r = &basis.rays[j].coeffs[k];
            if !r.is_zero() {
                v = scalar::sub(&v, &scalar::mul(xj, r)?)?;
            }
        }
        x.push(v);
    }
    Ok(x)
}

/// Whether `c` lies in the nonnegative integer span of the basis.
pub fn is_nonnegatively_generated<T: Scalar>(basis: &ExtremalBasis<T>, c: &CurveClass<T>) -> Result<bool> {
    Ok(express_in_basis(basis, c)?.iter().all(|x| !x.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootSystem};
    use std::sync::Arc;

    fn word(f: Family, n: usize, roots: &[usize]) -> Word {
        Word::new(Arc::new(RootSystem::named(f, n).unwrap()), roots).unwrap()
    }

    fn sub(w: &Word, start: usize, a: Algorithm) -> Vec<usize> {
        basis_subsequence::<i64>(w, start, a).unwrap().positions().to_vec()
    }

    #[test]
    fn a2_subsequences() {
        let w = word(Family::A, 2, &[1, 2, 1]);
        for a in [Algorithm::Comp, Algorithm::Weyl] {
            assert_eq!(sub(&w, 1, a), vec![1, 3]);
            assert_eq!(sub(&w, 2, a), vec![2]);
            assert_eq!(sub(&w, 3, a), vec![3]);
        }
        assert!(basis_subsequence::<i64>(&w, 4, Algorithm::Comp).is_err());
        assert!(basis_subsequence::<i64>(&w, 0, Algorithm::Weyl).is_err());
    }

    #[test]
    fn a3_staircase() {
        let w = word(Family::A, 3, &[1, 2, 3, 1, 2, 1]);
        let expected: [&[usize]; 6] = [&[1, 4, 5], &[2, 5, 6], &[3], &[4, 6], &[5], &[6]];
        for (j, e) in expected.iter().enumerate() {
            assert_eq!(sub(&w, j + 1, Algorithm::Comp), e.to_vec());
            assert_eq!(sub(&w, j + 1, Algorithm::Weyl), e.to_vec());
        }
        let basis = extremal_basis::<i64>(&w).unwrap();
        let rays: Vec<Vec<i64>> = basis.rays.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(
            rays,
            vec![
                vec![1, 0, 0, -2, -1, 0],
                vec![0, 1, 0, 0, -2, -1],
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 1, 0, -2],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 1],
            ]
        );
    }

    #[test]
    fn a2_basis_and_coordinates() {
        let w = word(Family::A, 2, &[1, 2, 1]);
        let basis = extremal_basis::<i64>(&w).unwrap();
        let rays: Vec<Vec<i64>> = basis.rays.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(rays, vec![vec![1, 0, -2], vec![0, 1, 0], vec![0, 0, 1]]);

        for (j, r) in basis.rays.iter().enumerate() {
            let mut e = vec![0i64; 3];
            e[j] = 1;
            assert_eq!(express_in_basis(&basis, r).unwrap(), e);
        }
        let l1 = CurveClass::new(vec![1i64, 0, 0]);
        assert_eq!(express_in_basis(&basis, &l1).unwrap(), vec![1, 0, 2]);
        let l123 = CurveClass::new(vec![1i64, 1, -1]);
        assert_eq!(express_in_basis(&basis, &l123).unwrap(), vec![1, 1, 1]);
        assert!(express_in_basis(&basis, &CurveClass::new(vec![1i64])).is_err());
    }

    #[test]
    fn distinct_roots_give_identity() {
        let w = word(Family::A, 4, &[4, 2, 3, 1]);
        let basis = extremal_basis::<i64>(&w).unwrap();
        for (j, r) in basis.rays.iter().enumerate() {
            for (k, c) in r.coeffs.iter().enumerate() {
                assert_eq!(*c, i64::from(j == k));
            }
        }
    }

    #[test]
    fn empty_word_has_empty_basis() {
        let w = word(Family::A, 2, &[]);
        assert!(extremal_basis::<i64>(&w).unwrap().is_empty());
    }

    #[test]
    fn algorithm_names() {
        assert_eq!("comp".parse::<Algorithm>().unwrap(), Algorithm::Comp);
        assert_eq!("weyl".parse::<Algorithm>().unwrap(), Algorithm::Weyl);
        assert!("other".parse::<Algorithm>().is_err());
    }
}
