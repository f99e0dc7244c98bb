//! Brute-force model of the special fiber as a tower of `P^1`-bundles.
//!
//! A torus-fixed point is a choice of section (Schubert `0` or non-Schubert
//! `1`) at every level. An invariant curve frees one level `k` and fixes the
//! others; its class depends only on `k` and the bits above it, and equals the
//! class of the label `(k, {j > k : bit_j = 1})`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chow::{self, CurveClass};
use crate::error::{Error, Result};
use crate::extremal;
use crate::intersect;
use crate::scalar::{self, Scalar};
use crate::word::{AdmissibleSeq, Word};

/// Default largest word length accepted for enumeration.
pub const DEFAULT_CAP: usize = 20;
/// Bit vectors are packed in a `u64`.
pub const HARD_CAP: usize = 63;

/// A torus-fixed point; bit `k` (0-based) is the section choice at level `k+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPoint {
    pub bits: u64,
    pub len: usize,
}

impl FixedPoint {
    pub fn bit(&self, level: usize) -> bool {
        self.bits >> (level - 1) & 1 == 1
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (1..=self.len).map(|l| u8::from(self.bit(l))).collect()
    }
}

/// A torus-invariant curve: free at `level`, fixed bits elsewhere.
/// The bit at `level` itself is always stored as 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantCurve {
    pub level: usize,
    pub bits: u64,
    pub len: usize,
}

impl InvariantCurve {
    pub fn endpoints(&self) -> (FixedPoint, FixedPoint) {
        let p = FixedPoint {
            bits: self.bits,
            len: self.len,
        };
        let q = FixedPoint {
            bits: self.bits | 1 << (self.level - 1),
            len: self.len,
        };
        (p, q)
    }

    /// `(level, j > level with bit_j = 1)`.
    pub fn label(&self) -> AdmissibleSeq {
        let high = self.bits >> self.level << self.level;
        AdmissibleSeq::from_mask(high | 1 << (self.level - 1))
    }
}

fn check_cap(w: &Word, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_CAP);
    if w.len() > cap {
        return Err(Error::EnumerationCap { len: w.len(), cap });
    }
    Ok(())
}

/// All `2^m` fixed points in increasing bit order.
pub fn all_fixed_points(w: &Word, cap: usize) -> Result<impl Iterator<Item = FixedPoint>> {
    check_cap(w, cap)?;
    let len = w.len();
    Ok((0..1u64 << len).map(move |bits| FixedPoint { bits, len }))
}

/// All `m 2^(m-1)` invariant curves, ordered by level then bits.
pub fn all_invariant_curves(w: &Word, cap: usize) -> Result<impl Iterator<Item = InvariantCurve>> {
    check_cap(w, cap)?;
    let len = w.len();
    let others = len.saturating_sub(1);
    Ok((1..=len).flat_map(move |level| {
        (0..1u64 << others).map(move |rest| {
            // spread `rest` around the hole at `level`
            let low_mask = (1u64 << (level - 1)) - 1;
            let bits = (rest & low_mask) | (rest & !low_mask) << 1;
            InvariantCurve { level, bits, len }
        })
    }))
}

pub fn curve_class_of<T: Scalar>(w: &Word, c: &InvariantCurve) -> Result<CurveClass<T>> {
    if c.len != w.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            found: c.len,
        });
    }
    w.check_pos(c.level)?;
    chow::expand(w, &c.label())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub fixed_points: u64,
    pub curves: u64,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn clause(name: &'static str, witness: Option<String>) -> Clause {
    Clause {
        name,
        pass: witness.is_none(),
        witness,
        detail: None,
    }
}

/// Enumerates the fiber and cross-checks counts, nonnegative generation and
/// the Fano criterion against a direct Nakai test on every curve class.
pub fn verify_report<T: Scalar>(w: &Word, cap: usize) -> Result<Report> {
    let m = w.len();
    let n_points = all_fixed_points(w, cap)?.count() as u64;
    let expected_points = 1u64 << m;

    // label key: (level, bits above level)
    let mut multiplicity: BTreeMap<(usize, u64), u64> = BTreeMap::new();
    let mut n_curves = 0u64;
    let mut bad_endpoints = None;
    for c in all_invariant_curves(w, cap)? {
        n_curves += 1;
        let (p, q) = c.endpoints();
        if bad_endpoints.is_none() && (p.bits ^ q.bits) != 1 << (c.level - 1) {
            bad_endpoints = Some(format!("curve at level {} has endpoints {:?}, {:?}", c.level, p.to_vec(), q.to_vec()));
        }
        *multiplicity.entry((c.level, c.bits >> c.level)).or_default() += 1;
    }
    let expected_curves = if m == 0 { 0 } else { m as u64 * (1u64 << (m - 1)) };

    let mut clauses = vec![
        clause(
            "fixed_points",
            (n_points != expected_points).then(|| format!("found {n_points}, expected 2^{m} = {expected_points}")),
        ),
        clause(
            "curves",
            (n_curves != expected_curves)
                .then(|| format!("found {n_curves}, expected m 2^(m-1) = {expected_curves}"))
                .or(bad_endpoints),
        ),
    ];

    let mut labels_witness = None;
    let expected_labels = expected_points - 1;
    if multiplicity.len() as u64 != expected_labels {
        labels_witness = Some(format!("{} distinct labels, expected {expected_labels}", multiplicity.len()));
    }
    for (&(level, high), &count) in &multiplicity {
        if labels_witness.is_some() {
            break;
        }
        let expected = 1u64 << (level - 1);
        if count != expected {
            let label = AdmissibleSeq::from_mask(high << level | 1 << (level - 1));
            labels_witness = Some(format!("{} realized by {count} curves, expected {expected}", label.label()));
        }
    }
    clauses.push(clause("label_multiplicity", labels_witness));

    let basis = extremal::extremal_basis::<T>(w)?;
    let anticanonical: Vec<T> = (1..=m)
        .map(|r| scalar::neg(&intersect::canonical_dot_schubert::<T>(w, r)?))
        .collect::<Result<_>>()?;
    let mut negative_coords = None;
    let mut nakai_failure = None;
    for &(level, high) in multiplicity.keys() {
        let label = AdmissibleSeq::from_mask(high << level | 1 << (level - 1));
        let class = chow::expand::<T>(w, &label)?;
        if negative_coords.is_none() {
            let coords = extremal::express_in_basis(&basis, &class)?;
            if coords.iter().any(|x| x.is_negative()) {
                negative_coords = Some(format!("{} has basis coordinates {:?}", label.label(), coords));
            }
        }
        if nakai_failure.is_none() {
            let degree = class
                .coeffs
                .iter()
                .zip(&anticanonical)
                .try_fold(T::zero(), |acc, (c, k)| scalar::add(&acc, &scalar::mul(c, k)?))?;
            if !degree.is_positive() {
                nakai_failure = Some(format!("-K·{} = {degree}", label.label()));
            }
        }
    }
    clauses.push(clause("nonnegative_generation", negative_coords));

    let fano = intersect::is_fano(w);
    let nakai = nakai_failure.is_none();
    let mut fano_clause = clause(
        "fano_nakai",
        (fano != nakai).then(|| {
            format!(
                "all Schubert lines Mori: {fano}; -K positive on all curves: {nakai}{}",
                nakai_failure.as_deref().map(|s| format!(" ({s})")).unwrap_or_default()
            )
        }),
    );
    fano_clause.detail = Some(format!("schubert_lines_mori={fano} anticanonical_positive={nakai}"));
    clauses.push(fano_clause);

    Ok(Report {
        fixed_points: n_points,
        curves: n_curves,
        clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootSystem};
    use std::collections::HashSet;
    use std::sync::Arc;

    fn word(f: Family, n: usize, roots: &[usize]) -> Word {
        Word::new(Arc::new(RootSystem::named(f, n).unwrap()), roots).unwrap()
    }

    #[test]
    fn counts() {
        let w1 = word(Family::A, 2, &[1]);
        assert_eq!(all_fixed_points(&w1, DEFAULT_CAP).unwrap().count(), 2);
        assert_eq!(all_invariant_curves(&w1, DEFAULT_CAP).unwrap().count(), 1);
        let w2 = word(Family::A, 2, &[1, 2]);
        assert_eq!(all_invariant_curves(&w2, DEFAULT_CAP).unwrap().count(), 4);
        let w3 = word(Family::A, 2, &[1, 2, 1]);
        assert_eq!(all_fixed_points(&w3, DEFAULT_CAP).unwrap().count(), 8);
        assert_eq!(all_invariant_curves(&w3, DEFAULT_CAP).unwrap().count(), 12);
    }

    #[test]
    fn curves_are_distinct_edges() {
        let w = word(Family::A, 3, &[1, 2, 3, 1]);
        let curves: Vec<_> = all_invariant_curves(&w, DEFAULT_CAP).unwrap().collect();
        let unique: HashSet<_> = curves.iter().collect();
        assert_eq!(unique.len(), curves.len());
        for c in &curves {
            assert_eq!(c.bits >> (c.level - 1) & 1, 0);
            let (p, q) = c.endpoints();
            assert_eq!(p.bits ^ q.bits, 1 << (c.level - 1));
        }
    }

    #[test]
    fn cap() {
        let w = word(Family::A, 1, &[1; 21]);
        assert!(matches!(
            all_fixed_points(&w, DEFAULT_CAP),
            Err(Error::EnumerationCap { len: 21, cap: 20 })
        ));
        assert!(all_fixed_points(&w, 21).is_ok());
        let long = word(Family::A, 1, &[1; 64]);
        assert!(matches!(
            all_invariant_curves(&long, 100),
            Err(Error::EnumerationCap { cap: HARD_CAP, .. })
        ));
    }

    #[test]
    fn classes() {
        let w = word(Family::A, 2, &[1, 2, 1]);
        for bits in [0b000, 0b011, 0b001, 0b010] {
            let c = InvariantCurve { level: 3, bits, len: 3 };
            assert_eq!(curve_class_of::<i64>(&w, &c).unwrap().coeffs, vec![0, 0, 1]);
        }
        let c = InvariantCurve { level: 1, bits: 0b110, len: 3 };
        assert_eq!(c.label().positions(), &[1, 2, 3]);
        assert_eq!(curve_class_of::<i64>(&w, &c).unwrap().coeffs, vec![1, 1, -1]);
        // bits below the level do not change the label
        let a = InvariantCurve { level: 2, bits: 0b100, len: 3 };
        let b = InvariantCurve { level: 2, bits: 0b101, len: 3 };
        assert_eq!(a.label().positions(), &[2, 3]);
        assert_eq!(a.label(), b.label());
        assert_eq!(
            curve_class_of::<i64>(&w, &a).unwrap(),
            curve_class_of::<i64>(&w, &b).unwrap()
        );
    }

    #[test]
    fn reports() {
        let r = verify_report::<i64>(&word(Family::A, 2, &[1, 2, 1]), DEFAULT_CAP).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(
            r.clause("fano_nakai").unwrap().detail.as_deref(),
            Some("schubert_lines_mori=false anticanonical_positive=false")
        );
        let r = verify_report::<i64>(&word(Family::A, 2, &[1, 2]), DEFAULT_CAP).unwrap();
        assert!(r.all_pass());
        assert_eq!(
            r.clause("fano_nakai").unwrap().detail.as_deref(),
            Some("schubert_lines_mori=true anticanonical_positive=true")
        );
        let r = verify_report::<i64>(&word(Family::G, 2, &[2]), DEFAULT_CAP).unwrap();
        assert!(r.all_pass());
        assert_eq!((r.fixed_points, r.curves), (2, 1));
    }
}
