use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::literal;
use crate::error::{Error, Result};

/// A finite set of non-negative integers, summed in `Z` with no wraparound.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntegerSetView {
    members: Vec<u64>,
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl IntegerSetView {
    pub fn new<I: IntoIterator<Item = u64>>(members: I) -> Self {
        let set: BTreeSet<u64> = members.into_iter().collect();
        IntegerSetView { members: set.into_iter().collect() }
    }

    /// The set whose bit `i` is set in `mask`.
    pub fn from_mask(mask: u64) -> Self {
        IntegerSetView { members: super::bits::ones64(mask).map(u64::from).collect() }
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// The largest member `b`.
    pub fn max_member(&self) -> Option<u64> {
        self.members.last().copied()
    }

    pub fn min_member(&self) -> Option<u64> {
        self.members.first().copied()
    }

    /// gcd of all members (0 for `{}` and `{0}`).
    pub fn gcd(&self) -> u64 {
        self.members.iter().fold(0, |g, &x| gcd(g, x))
    }

    pub fn sumset(&self, other: &IntegerSetView) -> IntegerSetView {
        let mut out = BTreeSet::new();
        for &a in &self.members {
            for &b in &other.members {
                out.insert(a + b);
            }
        }
        IntegerSetView { members: out.into_iter().collect() }
    }

    pub fn union(&self, other: &IntegerSetView) -> IntegerSetView {
        IntegerSetView::new(self.members.iter().chain(other.members.iter()).copied())
    }

    /// `X + t`.
    pub fn shift(&self, t: u64) -> IntegerSetView {
        IntegerSetView { members: self.members.iter().map(|x| x + t).collect() }
    }

    /// Length of the shortest progression of difference `r` containing the
    /// set, or `None` when the members are not all congruent mod `r`.
    pub fn ell(&self, r: u64) -> Option<u64> {
        if r == 0 {
            return None;
        }
        let (lo, hi) = (self.min_member()?, self.max_member()?);
        if self.members.iter().any(|x| (x - lo) % r != 0) {
            return None;
        }
        Some((hi - lo) / r + 1)
    }
}

impl fmt::Display for IntegerSetView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Z:{")?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IntegerSetView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IntegerSetView {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match literal::parse_set_literal(s)? {
            literal::SetLiteral::Integer(z) => Ok(z),
            literal::SetLiteral::Residue(_) => Err(Error::Parse {
                text: s.to_string(),
                reason: "expected an integer set `Z:{...}`".into(),
            }),
        }
    }
}

impl Serialize for IntegerSetView {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntegerSetView {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
