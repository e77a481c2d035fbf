//! Deterministic subset streams with rank-addressable positions.
//!
//! Every stream walks a combination space in lexicographic order. A position
//! in that space is a rank in `0..total_ranks()`, so a stream can be cut into
//! disjoint contiguous chunks and resumed from a [`Cursor`].

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::canonical::is_canonical;
use super::modulus::Modulus;
use super::set::ResidueSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerationMode {
    /// Every subset of the given size.
    All,
    /// Subsets containing residue 0.
    ContainingZero,
    /// One representative per affine class (the canonical form).
    CanonicalOnly,
}

/// Resume token: subset size and rank into the combination space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cursor {
    pub size: usize,
    pub rank: u64,
}

impl fmt::Display for Cursor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.size, self.rank)
    }
}

impl FromStr for Cursor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { text: s.to_string(), reason: "cursor must be `<size>:<rank>`".into() };
        let (a, b) = s.trim().split_once(':').ok_or_else(bad)?;
        Ok(Cursor { size: a.parse().map_err(|_| bad())?, rank: b.parse().map_err(|_| bad())? })
    }
}

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

#[derive(Debug, Clone)]
pub struct SubsetStream {
    modulus: Modulus,
    size: usize,
    mode: EnumerationMode,
    fixed: Vec<u32>,
    pool_start: u32,
    choose: usize,
    total: u64,
    combo: Vec<u32>,
    rank: u64,
    end: u64,
}

/// Streams subsets of `Z/pZ` of the given size.
pub fn enumerate_subsets(modulus: Modulus, size: usize, mode: EnumerationMode) -> Result<SubsetStream> {
    SubsetStream::new(modulus, size, mode, None)
}

impl SubsetStream {
    /// A stream restricted to ranks in `range` (clamped to the total).
    pub fn new(modulus: Modulus, size: usize, mode: EnumerationMode, range: Option<Range<u64>>) -> Result<Self> {
        let p = modulus.get();
        if size > p as usize {
            return Err(Error::SizeTooLarge { size, p });
        }
        let (fixed, pool_start): (Vec<u32>, u32) = match (mode, size) {
            (EnumerationMode::All, _) => (vec![], 0),
            (EnumerationMode::ContainingZero, _) => (vec![0], 1),
            (EnumerationMode::CanonicalOnly, 0) => (vec![], p),
            (EnumerationMode::CanonicalOnly, 1) => (vec![0], p),
            (EnumerationMode::CanonicalOnly, _) => (vec![0, 1], 2),
        };
        let pool = (p - pool_start) as u64;
        let (choose, total) = if size < fixed.len() {
            (0, 0)
        } else {
            let c = size - fixed.len();
            let t = binomial(pool, c as u64)
                .ok_or_else(|| Error::TooLarge(format!("C({pool},{c}) does not fit in u64")))?;
            (c, t)
        };
        let range = range.unwrap_or(0..total);
        let start = range.start.min(total);
        let end = range.end.min(total).max(start);
        let mut s = SubsetStream {
            modulus,
            size,
            mode,
            fixed,
            pool_start,
            choose,
            total,
            combo: Vec::new(),
            rank: start,
            end,
        };
        if start < end {
            s.combo = s.unrank(start);
        }
        Ok(s)
    }

    /// Resumes at `cursor.rank` for `cursor.size`.
    pub fn resume(modulus: Modulus, mode: EnumerationMode, cursor: Cursor) -> Result<Self> {
        Self::new(modulus, cursor.size, mode, Some(cursor.rank..u64::MAX))
    }

    pub fn total_ranks(&self) -> u64 {
        self.total
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mode(&self) -> EnumerationMode {
        self.mode
    }

    /// The rank of the next combination to be examined.
    pub fn position(&self) -> Cursor {
        Cursor { size: self.size, rank: self.rank }
    }

    /// Splits the full rank space into at most `parts` contiguous chunks.
    pub fn chunks(&self, parts: usize) -> Vec<Range<u64>> {
        let parts = parts.max(1) as u64;
        let step = self.total.div_ceil(parts).max(1);
        (0..self.total).step_by(step as usize).map(|lo| lo..(lo + step).min(self.total)).collect()
    }

    fn pool_len(&self) -> u32 {
        self.modulus.get() - self.pool_start
    }

    fn unrank(&self, mut rank: u64) -> Vec<u32> {
        let n = self.pool_len() as u64;
        let k = self.choose as u64;
        let mut out = Vec::with_capacity(self.choose);
        let mut next = 0u64;
        for i in 0..k {
            loop {
                let count = binomial(n - next - 1, k - i - 1).expect("fits: bounded by total");
                if rank < count {
                    break;
                }
                rank -= count;
                next += 1;
            }
            out.push(next as u32);
            next += 1;
        }
        out
    }

    fn advance(&mut self) {
        let n = self.pool_len();
        let k = self.choose;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.combo[i] < n - (k - i) as u32 {
                self.combo[i] += 1;
                for j in i + 1..k {
                    self.combo[j] = self.combo[j - 1] + 1;
                }
                return;
            }
        }
    }

    fn current(&self) -> ResidueSet {
        let members = self.fixed.iter().copied().chain(self.combo.iter().map(|&c| c + self.pool_start));
        ResidueSet::from_residues(self.modulus, members).expect("members below p")
    }
}

impl Iterator for SubsetStream {
    type Item = ResidueSet;

    fn next(&mut self) -> Option<ResidueSet> {
        while self.rank < self.end {
            let set = self.current();
            self.rank += 1;
            if self.rank < self.end {
                self.advance();
            }
            if self.mode == EnumerationMode::CanonicalOnly && !is_canonical(&set) {
                continue;
            }
            return Some(set);
        }
        None
    }
}
