//! Brute-force reference implementations over `BTreeSet<u32>`.
//!
//! Nothing here touches the library's bitmask code; every quantity is
//! computed from its definition with plain loops.

#![allow(dead_code)]

use std::collections::BTreeSet;

use critpair::{Modulus, ResidueSet};

pub type Set = BTreeSet<u32>;

pub fn set(xs: &[u32]) -> Set {
    xs.iter().copied().collect()
}

pub fn to_lib(p: u32, x: &Set) -> ResidueSet {
    ResidueSet::from_residues(Modulus::new(p as u64).unwrap(), x.iter().copied()).unwrap()
}

pub fn from_lib(x: &ResidueSet) -> Set {
    x.iter().collect()
}

pub fn sumset(a: &Set, b: &Set, p: u32) -> Set {
    let mut out = Set::new();
    for &x in a {
        for &y in b {
            out.insert((x + y) % p);
        }
    }
    out
}

/// Every subset of `Z/pZ` with exactly `size` elements, in mask order.
pub fn subsets_of_size(p: u32, size: usize) -> Vec<Set> {
    (0u64..1 << p)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..p).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

pub fn all_nonempty_subsets(p: u32) -> Vec<Set> {
    (1u64..1 << p).map(|m| (0..p).filter(|i| m >> i & 1 == 1).collect()).collect()
}

pub fn affine_image(x: &Set, u: u32, v: u32, p: u32) -> Set {
    x.iter().map(|&t| (u as u64 * t as u64 % p as u64) as u32).map(|t| (t + v) % p).collect()
}

/// One representative per affine class of `size`-subsets: the class member
/// whose sorted element vector is lexicographically smallest.
pub fn affine_class_reps(p: u32, size: usize) -> Vec<Set> {
    let mut reps = BTreeSet::new();
    for x in subsets_of_size(p, size) {
        let mut best: Option<Vec<u32>> = None;
        for u in 1..p {
            for v in 0..p {
                let img: Vec<u32> = affine_image(&x, u, v, p).into_iter().collect();
                if best.as_ref().is_none_or(|b| img < *b) {
                    best = Some(img);
                }
            }
        }
        reps.insert(best.unwrap());
    }
    reps.into_iter().map(|v| v.into_iter().collect()).collect()
}

/// Length of the shortest progression of difference `r` containing `x`.
pub fn ell(x: &Set, r: u32, p: u32) -> u32 {
    let mut best = p;
    for a in 0..p {
        for len in 1..=p {
            let ap: Set = (0..len).map(|i| (a + i * r) % p).collect();
            if x.is_subset(&ap) {
                best = best.min(len);
                break;
            }
        }
    }
    best
}

/// Smallest `ℓ_r(x)` over `r = 1..p-1`, with the least `r` attaining it.
pub fn best_ell(x: &Set, p: u32) -> (u32, u32) {
    (1..p).map(|r| (ell(x, r, p), r)).min().map(|(l, r)| (r, l)).unwrap()
}

/// Residues with exactly one representation `x + y`.
pub fn unique_sums(x: &Set, y: &Set, p: u32) -> Set {
    let mut count = vec![0u32; p as usize];
    for &a in x {
        for &b in y {
            count[((a + b) % p) as usize] += 1;
        }
    }
    (0..p).filter(|&z| count[z as usize] == 1).collect()
}

/// Number of maximal progressions of difference `d` inside `z`.
pub fn components(z: &Set, d: u32, p: u32) -> usize {
    if z.len() as u32 == p {
        return 1;
    }
    z.iter().filter(|&&x| !z.contains(&((x + p - d % p) % p))).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa {
    pub kappa: u32,
    pub atom_size: Option<u32>,
    /// Every atom, sorted.
    pub atoms: Vec<Set>,
    pub fragments: u64,
}

/// `κ_k(B)` by scanning every subset of `Z/pZ`.
pub fn kappa(b: &Set, k: u32, p: u32) -> Kappa {
    kappa_table(b, k, p).pop().unwrap()
}

/// `κ_1(B), ..., κ_kmax(B)` from one scan of every subset.
pub fn kappa_table(b: &Set, kmax: u32, p: u32) -> Vec<Kappa> {
    let scanned: Vec<(u32, Set)> = all_nonempty_subsets(p)
        .into_iter()
        .map(|x| (sumset(&x, b, p).len() as u32, x))
        .collect();
    (1..=kmax)
        .map(|k| {
            let feasible: Vec<(u32, &Set)> = scanned
                .iter()
                .filter(|(n, x)| x.len() as u32 >= k && n + k <= p)
                .map(|(n, x)| (n - x.len() as u32, x))
                .collect();
            let Some(kappa) = feasible.iter().map(|f| f.0).min() else {
                return Kappa { kappa: p, atom_size: None, atoms: Vec::new(), fragments: 0 };
            };
            let frags: Vec<&Set> = feasible.iter().filter(|f| f.0 == kappa).map(|f| f.1).collect();
            let size = frags.iter().map(|f| f.len()).min().unwrap();
            let mut atoms: Vec<Set> = frags.iter().filter(|f| f.len() == size).map(|f| (*f).clone()).collect();
            atoms.sort();
            Kappa { kappa, atom_size: Some(size as u32), atoms, fragments: frags.len() as u64 }
        })
        .collect()
}

/// Layers `N_0 = X, N_1, ...` up to the first empty one (or full reach).
pub fn layers(x: &Set, y: &Set, p: u32) -> Vec<Set> {
    let mut out = vec![x.clone()];
    let mut reach = x.clone();
    loop {
        let grown = sumset(&reach, y, p);
        let next: Set = grown.difference(&reach).copied().collect();
        if next.is_empty() {
            return out;
        }
        reach = grown;
        out.push(next);
        if reach.len() as u32 == p {
            return out;
        }
    }
}

/// `{u ∈ Y : z - u ∈ prev}`.
pub fn signature(z: u32, y: &Set, prev: &Set, p: u32) -> Set {
    y.iter().copied().filter(|&u| prev.contains(&((z + p - u) % p))).collect()
}

/// `|(z + Y) ∩ next|`.
pub fn out_degree(z: u32, y: &Set, next: &Set, p: u32) -> u32 {
    y.iter().filter(|&&u| next.contains(&((z + u) % p))).count() as u32
}

fn mask_sum(x: u64, b: &[u32], p: u32) -> u64 {
    let full = (1u64 << p) - 1;
    b.iter().fold(0, |acc, &s| acc | ((x << s) | (x >> ((p - s) % 64))) & full)
}

/// `(κ_k, atom size, atoms containing 0)` scanning only sets that contain 0.
/// Plain mask arithmetic, usable up to `p` around 23.
pub fn kappa_zero_based(b: &Set, k: u32, p: u32) -> (u32, Option<u32>, Vec<Set>) {
    let bs: Vec<u32> = b.iter().copied().collect();
    let mut best: Option<(u32, u32)> = None;
    let mut atoms = Vec::new();
    for rest in 0u64..1 << (p - 1) {
        let x = rest << 1 | 1;
        let s = x.count_ones();
        if s < k {
            continue;
        }
        let n = mask_sum(x, &bs, p).count_ones();
        if n + k > p {
            continue;
        }
        let key = (n - s, s);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
            atoms.clear();
        }
        if best == Some(key) {
            atoms.push((0..p).filter(|i| x >> i & 1 == 1).collect());
        }
    }
    match best {
        Some((kappa, size)) => (kappa, Some(size), atoms),
        None => (p, None, atoms),
    }
}
