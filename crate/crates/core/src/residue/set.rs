use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::bits::{self, Ones, Words};
use super::literal;
use super::modulus::Modulus;
use crate::error::{Error, Result};

/// A subset of `Z/pZ`, stored as a `p`-bit membership mask.
///
/// Sets are ordered by modulus first and then by their membership bit string
/// read from residue 0 upward, where a present residue sorts before an absent
/// one. Among sets of equal size this is lexicographic order on the ascending
/// member lists, so `{0,1,...,L-1}` is the least set of size `L`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: Modulus,
    words: Words,
}

impl ResidueSet {
    pub fn empty(modulus: Modulus) -> Self {
        ResidueSet { modulus, words: bits::zeros(modulus.get()) }
    }

    pub fn full(modulus: Modulus) -> Self {
        ResidueSet { modulus, words: bits::full(modulus.get()) }
    }

    pub fn singleton(modulus: Modulus, x: i64) -> Self {
        let mut s = Self::empty(modulus);
        bits::set(&mut s.words, modulus.reduce(x));
        s
    }

    /// Builds a set from residues in `[0, p)`; repeated residues collapse.
    pub fn from_residues<I: IntoIterator<Item = u32>>(modulus: Modulus, residues: I) -> Result<Self> {
        let mut s = Self::empty(modulus);
        for r in residues {
            if r >= modulus.get() {
                return Err(Error::ResidueOutOfRange { value: r as i64, p: modulus.get() });
            }
            bits::set(&mut s.words, r);
        }
        Ok(s)
    }

    /// Builds a set from arbitrary integers, reducing each mod `p`.
    pub fn from_integers<I: IntoIterator<Item = i64>>(modulus: Modulus, values: I) -> Self {
        let mut s = Self::empty(modulus);
        for v in values {
            bits::set(&mut s.words, modulus.reduce(v));
        }
        s
    }

    /// `{start, start+1, ..., start+len-1}`.
    pub fn interval(modulus: Modulus, start: i64, len: u32) -> Self {
        Self::progression(modulus, start, 1, len)
    }

    /// `{a, a+r, ..., a+(len-1)r}`.
    pub fn progression(modulus: Modulus, a: i64, r: i64, len: u32) -> Self {
        Self::from_integers(modulus, (0..len as i64).map(|i| a + i * r))
    }

    /// Single-word constructor for `p < 64`.
    pub(crate) fn from_mask64(modulus: Modulus, mask: u64) -> Self {
        debug_assert!(modulus.get() < 64);
        debug_assert_eq!(mask & !bits::full64(modulus.get()), 0);
        ResidueSet { modulus, words: smallvec::smallvec![mask] }
    }

    pub(crate) fn from_words(modulus: Modulus, mut words: Words) -> Self {
        debug_assert_eq!(words.len(), bits::word_count(modulus.get()));
        bits::trim(&mut words, modulus.get());
        ResidueSet { modulus, words }
    }

    /// The membership mask when `p < 64`.
    #[inline]
    pub fn mask64(&self) -> Option<u64> {
        if self.modulus.get() < 64 {
            Some(self.words[0])
        } else {
            None
        }
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.modulus.get()
    }

    #[inline]
    pub fn len(&self) -> usize {
        bits::count(&self.words) as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.p() as usize
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        x < self.p() && bits::test(&self.words, x)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        Ones::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<u32> {
        self.iter().next()
    }

    pub(crate) fn same_modulus(&self, other: &ResidueSet) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.p(), other.p()));
        }
        Ok(())
    }

    fn zip_with(&self, other: &ResidueSet, f: impl Fn(u64, u64) -> u64) -> Result<ResidueSet> {
        self.same_modulus(other)?;
        let words = self.words.iter().zip(other.words.iter()).map(|(&a, &b)| f(a, b)).collect();
        Ok(ResidueSet::from_words(self.modulus, words))
    }

    pub fn union(&self, other: &ResidueSet) -> Result<ResidueSet> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &ResidueSet) -> Result<ResidueSet> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ResidueSet) -> Result<ResidueSet> {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &ResidueSet) -> Result<bool> {
        self.same_modulus(other)?;
        Ok(self.words.iter().zip(other.words.iter()).all(|(&a, &b)| a & !b == 0))
    }

    pub fn insert(&mut self, x: i64) {
        bits::set(&mut self.words, self.modulus.reduce(x));
    }

    pub fn remove(&mut self, x: i64) {
        let r = self.modulus.reduce(x);
        self.words[(r / 64) as usize] &= !(1u64 << (r % 64));
    }

    /// `X + Y = {x + y}`.
    pub fn sumset(&self, other: &ResidueSet) -> Result<ResidueSet> {
        self.same_modulus(other)?;
        let out = self.sumset_unchecked(other);
        debug_assert!(
            self.is_empty()
                || other.is_empty()
                || out.len() >= (self.p() as usize).min(self.len() + other.len() - 1),
            "Cauchy-Davenport bound violated for {self} + {other}"
        );
        Ok(out)
    }

    pub(crate) fn sumset_unchecked(&self, other: &ResidueSet) -> ResidueSet {
        let p = self.p();
        if let (Some(a), Some(b)) = (self.mask64(), other.mask64()) {
            return ResidueSet::from_mask64(self.modulus, bits::sumset64(a, b, p));
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = bits::zeros(p);
        for s in small.iter() {
            let r = bits::rotl(&large.words, p, s);
            for (a, b) in acc.iter_mut().zip(r.iter()) {
                *a |= *b;
            }
        }
        ResidueSet::from_words(self.modulus, acc)
    }

    /// `X - Y = X + (-Y)`.
    pub fn difference_set(&self, other: &ResidueSet) -> Result<ResidueSet> {
        self.sumset(&other.negate())
    }

    /// `X + X + ... + X` (`h` copies; `h = 0` gives `{0}`).
    pub fn multiple(&self, h: usize) -> ResidueSet {
        let mut acc = ResidueSet::singleton(self.modulus, 0);
        for _ in 0..h {
            acc = acc.sumset_unchecked(self);
        }
        acc
    }

    /// `-X`.
    pub fn negate(&self) -> ResidueSet {
        let m = self.modulus;
        let mut out = ResidueSet::empty(m);
        for x in self.iter() {
            bits::set(&mut out.words, m.neg(x));
        }
        out
    }

    /// `Z/pZ \ X`.
    pub fn complement(&self) -> ResidueSet {
        let words = self.words.iter().map(|w| !w).collect();
        ResidueSet::from_words(self.modulus, words)
    }

    /// `X + v`.
    pub fn translate(&self, v: i64) -> ResidueSet {
        let s = self.modulus.reduce(v);
        if s == 0 {
            return self.clone();
        }
        ResidueSet { modulus: self.modulus, words: bits::rotl(&self.words, self.p(), s) }
    }

    /// `u * X`; fails when `u = 0 (mod p)`.
    pub fn dilate(&self, u: i64) -> Result<ResidueSet> {
        let m = self.modulus;
        let u = m.reduce(u);
        if u == 0 {
            return Err(Error::ZeroMultiplier(m.get()));
        }
        Ok(self.dilate_unchecked(u))
    }

    pub(crate) fn dilate_unchecked(&self, u: u32) -> ResidueSet {
        let m = self.modulus;
        let mut out = ResidueSet::empty(m);
        for x in self.iter() {
            bits::set(&mut out.words, m.mul(u, x));
        }
        out
    }

    /// Elements of `X + Y` with exactly one representation `x + y`.
    pub(crate) fn unique_sums_unchecked(&self, other: &ResidueSet) -> ResidueSet {
        let p = self.p();
        let mut ones = bits::zeros(p);
        let mut twos = bits::zeros(p);
        for y in other.iter() {
            let r = bits::rotl(&self.words, p, y);
            for i in 0..ones.len() {
                twos[i] |= ones[i] & r[i];
                ones[i] |= r[i];
            }
        }
        let words = ones.iter().zip(twos.iter()).map(|(o, t)| o & !t).collect();
        ResidueSet::from_words(self.modulus, words)
    }

    /// Set literal `p=<p>:{a,b,...}`.
    pub fn to_literal(&self) -> String {
        self.to_string()
    }
}

impl Ord for ResidueSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.modulus.cmp(&other.modulus) {
            Ordering::Equal => {}
            o => return o,
        }
        for (&a, &b) in self.words.iter().zip(other.words.iter()) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for ResidueSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}:{{", self.p())?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ResidueSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        literal::parse_residue_literal(s, false)
    }
}

impl Serialize for ResidueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ResidueSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
