//! Cyclic bitmask primitives over `p` bits.
//!
//! Residue `i` lives at bit `i % 64` of word `i / 64`. For every prime below 64
//! the whole set fits in one word and the `*64` helpers apply; wider moduli go
//! through the word-slice versions.

use smallvec::SmallVec;

pub(crate) type Words = SmallVec<[u64; 1]>;

#[inline]
pub(crate) fn word_count(p: u32) -> usize {
    (p as usize).div_ceil(64)
}

#[inline]
pub(crate) fn full64(p: u32) -> u64 {
    debug_assert!(p < 64);
    (1u64 << p) - 1
}

/// Rotation `x -> x + s (mod p)` of a single-word mask.
#[inline]
pub(crate) fn rotl64(x: u64, p: u32, s: u32) -> u64 {
    debug_assert!(s < p);
    ((x << s) | (x >> (p - s))) & full64(p)
}

/// Sumset of two single-word masks.
#[inline]
pub(crate) fn sumset64(a: u64, b: u64, p: u32) -> u64 {
    let (small, large) = if a.count_ones() <= b.count_ones() { (a, b) } else { (b, a) };
    let mut acc = 0u64;
    let mut rest = small;
    while rest != 0 {
        let s = rest.trailing_zeros();
        rest &= rest - 1;
        acc |= rotl64(large, p, s);
    }
    acc
}

pub(crate) fn zeros(p: u32) -> Words {
    SmallVec::from_elem(0, word_count(p))
}

pub(crate) fn full(p: u32) -> Words {
    let mut w = SmallVec::from_elem(u64::MAX, word_count(p));
    trim(&mut w, p);
    w
}

/// Clears bits at positions `>= p`.
#[inline]
pub(crate) fn trim(w: &mut [u64], p: u32) {
    let tail = p as usize % 64;
    if tail != 0 {
        if let Some(last) = w.last_mut() {
            *last &= (1u64 << tail) - 1;
        }
    }
}

#[inline]
pub(crate) fn test(w: &[u64], i: u32) -> bool {
    w[(i / 64) as usize] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(w: &mut [u64], i: u32) {
    w[(i / 64) as usize] |= 1u64 << (i % 64);
}

#[inline]
pub(crate) fn count(w: &[u64]) -> u32 {
    w.iter().map(|x| x.count_ones()).sum()
}

fn shl(w: &[u64], s: u32) -> Words {
    let n = w.len();
    let q = (s / 64) as usize;
    let r = s % 64;
    let mut out: Words = SmallVec::from_elem(0, n);
    for i in (q..n).rev() {
        let src = i - q;
        let mut v = w[src] << r;
        if r > 0 && src > 0 {
            v |= w[src - 1] >> (64 - r);
        }
        out[i] = v;
    }
    out
}

fn shr(w: &[u64], s: u32) -> Words {
    let n = w.len();
    let q = (s / 64) as usize;
    let r = s % 64;
    let mut out: Words = SmallVec::from_elem(0, n);
    for i in 0..n.saturating_sub(q) {
        let src = i + q;
        let mut v = w[src] >> r;
        if r > 0 && src + 1 < n {
            v |= w[src + 1] << (64 - r);
        }
        out[i] = v;
    }
    out
}

/// Rotation `x -> x + s (mod p)` of a multi-word mask.
pub(crate) fn rotl(w: &[u64], p: u32, s: u32) -> Words {
    debug_assert!(s < p);
    if w.len() == 1 {
        return SmallVec::from_elem(rotl64(w[0], p, s), 1);
    }
    if s == 0 {
        return SmallVec::from_slice(w);
    }
    let mut hi = shl(w, s);
    trim(&mut hi, p);
    let lo = shr(w, p - s);
    for (a, b) in hi.iter_mut().zip(lo.iter()) {
        *a |= *b;
    }
    hi
}

/// Iterator over set bit positions in ascending order.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones { words, idx: 0, cur: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for Ones<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros();
                self.cur &= self.cur - 1;
                return Some(self.idx as u32 * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Iterator over the set bits of a single word.
#[inline]
pub(crate) fn ones64(mut x: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros();
            x &= x - 1;
            Some(b)
        }
    })
}
