//! Words of simple reflections and admissible position sequences.
//!
//! Positions and root indices are 1-based in every public signature.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// Which end of a word [`Word::truncate`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `w[r]`: positions `1..=r`.
    Prefix,
    /// `[r]w`: positions `r+1..=m`, renumbered from 1.
    Suffix,
}

/// A finite, not necessarily reduced, sequence of simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rs: Arc<RootSystem>,
    // 0-based root indices
    roots: Vec<usize>,
}

impl Word {
    pub fn new(rs: Arc<RootSystem>, roots: &[usize]) -> Result<Self> {
        let roots = roots
            .iter()
            .map(|&r| rs.check_root(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rs, roots })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn shared_root_system(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// 1-based root indices, left to right.
    pub fn roots(&self) -> Vec<usize> {
        self.roots.iter().map(|r| r + 1).collect()
    }

    pub(crate) fn check_pos(&self, pos: usize) -> Result<usize> {
        if pos == 0 || pos > self.len() {
            Err(Error::OutOfRange {
                what: "position",
                index: pos,
                bound: self.len(),
            })
        } else {
            Ok(pos - 1)
        }
    }

    /// Simple-root index carried by position `pos`.
    pub fn root_at(&self, pos: usize) -> Result<usize> {
        Ok(self.roots[self.check_pos(pos)?] + 1)
    }

    /// 0-based root at 0-based position.
    #[inline]
    pub(crate) fn root0(&self, p0: usize) -> usize {
        self.roots[p0]
    }

    /// `(j, r) = <alpha_{beta(j)}, alpha_{beta(r)}^vee>` for 0-based positions.
    #[inline]
    pub(crate) fn pp0(&self, j0: usize, r0: usize) -> i32 {
        self.rs.entry(self.roots[j0], self.roots[r0])
    }

    /// The integer `(j, r)` attached to a pair of positions.
    pub fn pos_pairing(&self, j_pos: usize, r_pos: usize) -> Result<i32> {
        let j0 = self.check_pos(j_pos)?;
        let r0 = self.check_pos(r_pos)?;
        Ok(self.pp0(j0, r0))
    }

    pub fn truncate(&self, r: usize, side: Side) -> Result<Word> {
        if r > self.len() {
            return Err(Error::OutOfRange {
                what: "truncation length",
                index: r,
                bound: self.len(),
            });
        }
        let roots = match side {
            Side::Prefix => self.roots[..r].to_vec(),
            Side::Suffix => self.roots[r..].to_vec(),
        };
        Ok(Word {
            rs: Arc::clone(&self.rs),
            roots,
        })
    }

    pub fn prefix(&self, r: usize) -> Result<Word> {
        self.truncate(r, Side::Prefix)
    }

    pub fn suffix(&self, r: usize) -> Result<Word> {
        self.truncate(r, Side::Suffix)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r + 1)?;
        }
        write!(f, ")")
    }
}

/// Strictly increasing positions `i_1 < ... < i_r` of a word of length `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AdmissibleSeq {
    positions: Vec<usize>,
}

impl AdmissibleSeq {
    pub fn new(positions: Vec<usize>, m: usize) -> Result<Self> {
        if let Some(&bad) = positions.iter().find(|&&p| p == 0 || p > m) {
            return Err(Error::OutOfRange {
                what: "position",
                index: bad,
                bound: m,
            });
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(positions));
        }
        Ok(Self { positions })
    }

    pub fn empty() -> Self {
        Self { positions: vec![] }
    }

    /// Positions whose bits are set in `mask` (bit `k` is position `k+1`).
    pub fn from_mask(mask: u64) -> Self {
        let positions = (0..64).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        Self { positions }
    }

    pub(crate) fn from_sorted_unchecked(positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        Self { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.positions.first().copied()
    }

    /// Shift every position by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        Self {
            positions: self.positions.iter().map(|p| p + offset).collect(),
        }
    }

    /// Curve label in the notation `L_{135}`; positions are comma separated
    /// once any of them has more than one digit.
    pub fn label(&self) -> String {
        let sep = if self.positions.iter().any(|&p| p >= 10) { "," } else { "" };
        let inner: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        format!("L_{{{}}}", inner.join(sep))
    }
}

impl fmt::Display for AdmissibleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Word JSON fragment: `{"word": [1,2,1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordSpec {
    pub word: Vec<usize>,
}
