//! Branch-and-bound search for `κ_k(B)`.
//!
//! Candidates `X` contain 0 (|X+B| is translation invariant) and are built by
//! adding residues in increasing order. `|X'+B| - s` never decreases as the
//! partial set `X'` grows towards size `s`, so it is a valid lower bound for
//! every completion.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::bits::rotl64;
use crate::residue::{translation_canonical, Modulus, ResidueSet};

/// How far the size scan goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Stop as soon as a closure argument certifies the minimum, else at the cap.
    #[default]
    Closure,
    /// Scan every feasible size. Needed when the result is used to test the
    /// very statements the closure arguments rely on.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    SizeCapped(u32),
}

/// Why a certificate is exact (or that it is not).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// No size-`k` set is feasible, hence none at all.
    NoFeasibleSet,
    /// Every size allowed by Cauchy–Davenport was scanned.
    AllSizes,
    /// Atoms have at most `(p - |B| + 1) / 2` elements, by duality.
    DualBound,
    /// Atoms have at most `m + k + 1` elements once `p + min(k,|B|) > m² + 6m + 12`.
    AtomSizeBound,
    Capped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KappaOptions {
    pub cap: Option<u32>,
    pub mode: SearchMode,
    /// Also count all fragments (forces a scan of every feasible size).
    pub count_fragments: bool,
}

impl KappaOptions {
    pub fn exhaustive() -> Self {
        KappaOptions { mode: SearchMode::Exhaustive, ..Default::default() }
    }
}

/// Result of a `κ_k` search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoperimetricCertificate {
    pub p: u32,
    #[serde(rename = "B")]
    pub base: ResidueSet,
    pub k: u32,
    pub kappa: u32,
    pub m: i64,
    pub exactness: Exactness,
    pub certified_by: Certification,
    /// One translate containing 0 per translation class, ascending.
    pub atoms: Vec<ResidueSet>,
    pub atom_size: Option<u32>,
    pub fragment_count: Option<u64>,
    /// Largest candidate size that was scanned.
    pub searched_up_to: u32,
}

impl IsoperimetricCertificate {
    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    pub fn feasible(&self) -> bool {
        self.atom_size.is_some()
    }

    /// Every atom, i.e. all `p` translates of each listed representative.
    pub fn atom_translates(&self) -> Vec<ResidueSet> {
        let mut out: Vec<ResidueSet> =
            self.atoms.iter().flat_map(|a| (0..self.p).map(move |t| a.translate(t as i64))).collect();
        out.sort();
        out.dedup();
        out
    }

    /// `|X+B| - |X|` when `X` is feasible for this `k`.
    pub fn boundary(&self, x: &ResidueSet) -> Option<u32> {
        let n = x.sumset(&self.base).ok()?.len() as u32;
        let s = x.len() as u32;
        (s >= self.k && n + self.k <= self.p).then(|| n - s)
    }

    pub fn is_fragment(&self, x: &ResidueSet) -> bool {
        self.boundary(x) == Some(self.kappa)
    }

    pub fn is_atom(&self, x: &ResidueSet) -> bool {
        self.is_fragment(x) && self.atom_size == Some(x.len() as u32)
    }
}

/// Precomputed translates of `B` for single-word moduli.
pub(crate) struct Engine {
    pub(crate) p: u32,
    pub(crate) k: u32,
    rot: Vec<u64>,
}

#[derive(Debug, Default)]
pub(crate) struct SizeResult {
    pub(crate) min: Option<u32>,
    pub(crate) count: u64,
    pub(crate) leaves: Vec<u64>,
}

impl SizeResult {
    fn offer(&mut self, v: u32, mask: u64, store: bool) {
        match self.min {
            Some(m) if v > m => return,
            Some(m) if v == m => {}
            _ => {
                self.min = Some(v);
                self.count = 0;
                self.leaves.clear();
            }
        }
        self.count += 1;
        if store {
            self.leaves.push(mask);
        }
    }

    fn merge(mut self, other: SizeResult) -> SizeResult {
        match (self.min, other.min) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if b < a => other,
            (Some(a), Some(b)) if a < b => self,
            _ => {
                self.count += other.count;
                self.leaves.extend(other.leaves);
                self
            }
        }
    }
}

struct Pass<'a> {
    s: u32,
    /// Value of atoms found at smaller sizes.
    prior: Option<u32>,
    strict: bool,
    bound: &'a AtomicU32,
}

impl Engine {
    pub(crate) fn new(b: &ResidueSet, k: u32) -> Result<Self> {
        let p = b.p();
        let mask = b.mask64().ok_or_else(|| Error::TooLarge(format!("isoperimetric search needs p < 64, got {p}")))?;
        let rot = (0..p).map(|x| if x == 0 { mask } else { rotl64(mask, p, x) }).collect();
        Ok(Engine { p, k, rot })
    }

    #[inline]
    pub(crate) fn sum_size(&self, x: u64) -> u32 {
        let mut acc = 0u64;
        let mut rest = x;
        while rest != 0 {
            acc |= self.rot[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        acc.count_ones()
    }

    /// Boundary of a feasible mask, `None` when infeasible.
    #[inline]
    pub(crate) fn boundary(&self, x: u64) -> Option<u32> {
        let s = x.count_ones();
        let n = self.sum_size(x);
        (s >= self.k && n + self.k <= self.p).then(|| n - s)
    }

    fn dfs(&self, pass: &Pass<'_>, mask: u64, sum: u64, c: u32, last: u32, acc: &mut SizeResult) {
        let s = pass.s;
        if c == s {
            let v = sum.count_ones() - s;
            acc.offer(v, mask, pass.prior.is_none_or(|pr| v < pr));
            pass.bound.fetch_min(v, Ordering::Relaxed);
            return;
        }
        let limit = self.p - self.k;
        for x in last + 1..=self.p - (s - c) {
            let ns = sum | self.rot[x as usize];
            let n = ns.count_ones();
            if n > limit {
                continue;
            }
            // lower bound on the boundary of any completion
            let lb = n as i64 - s as i64;
            let b = pass.bound.load(Ordering::Relaxed) as i64;
            if lb > b || (pass.strict && pass.prior.is_some_and(|pr| lb >= pr as i64)) {
                continue;
            }
            self.dfs(pass, mask | 1u64 << x, ns, c + 1, x, acc);
        }
    }

    /// Minimum boundary over 0-containing sets of size `s`, with the sets
    /// attaining it (pruned against `bound`).
    pub(crate) fn search_size(&self, s: u32, prior: Option<u32>, strict: bool, bound: &AtomicU32) -> SizeResult {
        let pass = Pass { s, prior, strict, bound };
        let root = self.rot[0];
        if s == 0 || root.count_ones() + self.k > self.p {
            return SizeResult::default();
        }
        if s == 1 {
            let mut acc = SizeResult::default();
            let v = root.count_ones() - 1;
            let blocked = v > bound.load(Ordering::Relaxed) || (strict && prior.is_some_and(|pr| v >= pr));
            if !blocked {
                acc.offer(v, 1, prior.is_none_or(|pr| v < pr));
                bound.fetch_min(v, Ordering::Relaxed);
            }
            return acc;
        }
        let mut res = (1..=self.p - s + 1)
            .into_par_iter()
            .map(|x1| {
                let mut acc = SizeResult::default();
                let ns = root | self.rot[x1 as usize];
                if ns.count_ones() + self.k <= self.p {
                    let lb = ns.count_ones() as i64 - s as i64;
                    let b = bound.load(Ordering::Relaxed) as i64;
                    if !(lb > b || (strict && prior.is_some_and(|pr| lb >= pr as i64))) {
                        self.dfs(&pass, 1 | 1u64 << x1, ns, 2, x1, &mut acc);
                    }
                }
                acc
            })
            .reduce(SizeResult::default, SizeResult::merge);
        res.leaves.sort_unstable();
        res
    }
}

fn validate(b: &ResidueSet, k: u32) -> Result<()> {
    if b.is_empty() {
        return Err(Error::EmptySet);
    }
    if k == 0 || k >= b.p() {
        return Err(Error::InvalidParameter(format!("k must satisfy 1 <= k < p, got k={k}, p={}", b.p())));
    }
    Ok(())
}

/// Largest `|X|` allowed by `|X| + |B| - 1 <= |X+B| <= p - k`.
pub(crate) fn max_feasible_size(p: u32, k: u32, nb: u32) -> u32 {
    (p + 1).saturating_sub(k + nb)
}

/// Whether `p + min(k,|B|) > m² + 6m + 12`, the condition under which atoms
/// have at most `m + k + 1` elements.
pub fn atom_bound_applies(p: u32, k: u32, nb: u32, m: i64) -> bool {
    k >= 2 && nb >= 2 && (p + k.min(nb)) as i64 > m * m + 6 * m + 12
}

/// `κ_k(B)` with the default options.
pub fn kappa(b: &ResidueSet, k: u32, cap: Option<u32>) -> Result<IsoperimetricCertificate> {
    kappa_with(b, k, &KappaOptions { cap, ..Default::default() })
}

pub fn kappa_with(b: &ResidueSet, k: u32, opts: &KappaOptions) -> Result<IsoperimetricCertificate> {
    validate(b, k)?;
    if let Some(c) = opts.cap {
        if c < k {
            return Err(Error::InvalidParameter(format!("cap {c} is below k={k}")));
        }
    }
    let p = b.p();
    let nb = b.len() as u32;
    let engine = Engine::new(b, k)?;
    let cert = |kappa: u32, exactness, certified_by, atoms: Vec<ResidueSet>, atom_size, fragment_count, searched| {
        IsoperimetricCertificate {
            p,
            base: b.clone(),
            k,
            kappa,
            m: kappa as i64 - nb as i64,
            exactness,
            certified_by,
            atoms,
            atom_size,
            fragment_count,
            searched_up_to: searched,
        }
    };

    let hi = max_feasible_size(p, k, nb).min(p - k);
    if hi < k {
        let count = opts.count_fragments.then_some(0);
        return Ok(cert(p, Exactness::Exact, Certification::NoFeasibleSet, Vec::new(), None, count, 0));
    }
    let exhaustive = opts.mode == SearchMode::Exhaustive || opts.count_fragments;
    // The default cap reaches the dual bound, where closure always applies.
    let default_cap = ((p - k) / 2).max((p + 1 - nb.min(p)) / 2).max(k);
    let upper = if exhaustive { hi } else { hi.min(opts.cap.unwrap_or(default_cap)) };

    // seed with progressions {0, r, ..., (k-1)r}
    let modulus = b.modulus();
    let seed = (1..=modulus.half())
        .filter_map(|r| engine.boundary(ResidueSet::progression(modulus, 0, r as i64, k).mask64().unwrap()))
        .min()
        .unwrap_or(p);
    let bound = AtomicU32::new(seed);

    let mut best: Option<(u32, u32, Vec<u64>)> = None; // (value, size, leaves)
    let mut per_size: Vec<(u32, u32, u64)> = Vec::new(); // (size, min, count)
    let mut certified = None;
    let mut searched = k;
    for s in k..=upper {
        searched = s;
        let prior = best.as_ref().map(|b| b.0);
        let res = engine.search_size(s, prior, !opts.count_fragments && prior.is_some(), &bound);
        if let Some(v) = res.min {
            per_size.push((s, v, res.count));
            if prior.is_none_or(|pr| v < pr) {
                best = Some((v, s, res.leaves));
            }
        }
        let Some((v, _, _)) = best.as_ref() else {
            // nothing feasible at size k means nothing feasible at all
            certified = Some(Certification::NoFeasibleSet);
            break;
        };
        if exhaustive {
            continue;
        }
        if s >= (p + 1 - nb.min(p)) / 2 {
            certified = Some(Certification::DualBound);
            break;
        }
        let m = *v as i64 - nb as i64;
        if atom_bound_applies(p, k, nb, m) && s as i64 > m + k as i64 {
            certified = Some(Certification::AtomSizeBound);
            break;
        }
    }
    let certified = match certified {
        Some(c) => c,
        None if searched >= hi => Certification::AllSizes,
        None => Certification::Capped,
    };
    let exactness = if certified == Certification::Capped { Exactness::SizeCapped(upper) } else { Exactness::Exact };

    let Some((kappa, atom_size, leaves)) = best else {
        let count = opts.count_fragments.then_some(0);
        return Ok(cert(p, exactness, certified, Vec::new(), None, count, searched));
    };
    let atoms: BTreeSet<ResidueSet> =
        leaves.iter().map(|&x| translation_canonical(&ResidueSet::from_mask64(modulus, x)).0).collect();
    let fragment_count = opts.count_fragments.then(|| {
        per_size.iter().filter(|e| e.1 == kappa).map(|&(s, _, c)| c * p as u64 / s as u64).sum()
    });
    Ok(cert(kappa, exactness, certified, atoms.into_iter().collect(), Some(atom_size), fragment_count, searched))
}

/// Translation-class representatives (containing 0) of all `k`-fragments,
/// given the exact value `kappa`.
pub(crate) fn fragment_classes(b: &ResidueSet, k: u32, kappa: u32) -> Result<Vec<ResidueSet>> {
    let p = b.p();
    let engine = Engine::new(b, k)?;
    let modulus: Modulus = b.modulus();
    let hi = max_feasible_size(p, k, b.len() as u32).min(p - k).min((p - k).saturating_sub(kappa));
    let mut reps = BTreeSet::new();
    for s in k..=hi {
        let bound = AtomicU32::new(kappa);
        let res = engine.search_size(s, None, false, &bound);
        if res.min == Some(kappa) {
            reps.extend(res.leaves.iter().map(|&x| translation_canonical(&ResidueSet::from_mask64(modulus, x)).0));
        }
    }
    let mut reps: Vec<ResidueSet> = reps.into_iter().collect();
    reps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(reps)
}

/// All `k`-fragments in a deterministic order, truncated at `limit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FragmentList {
    pub kappa: u32,
    /// One 0-containing representative per translation class.
    pub classes: Vec<ResidueSet>,
    pub fragments: Vec<ResidueSet>,
    pub total: u64,
    pub overflow: bool,
}

/// Every `k`-fragment of `B`: classes ordered by size then set order, each
/// expanded to its `p` translates in set order.
pub fn fragments(b: &ResidueSet, k: u32, limit: usize) -> Result<FragmentList> {
    let cert = kappa_with(b, k, &KappaOptions::exhaustive())?;
    if !cert.feasible() {
        return Ok(FragmentList { kappa: cert.kappa, classes: Vec::new(), fragments: Vec::new(), total: 0, overflow: false });
    }
    let classes = fragment_classes(b, k, cert.kappa)?;
    let p = b.p();
    let total = classes.len() as u64 * p as u64;
    let mut out = Vec::new();
    for c in &classes {
        if out.len() >= limit {
            break;
        }
        let mut translates: Vec<ResidueSet> = (0..p).map(|t| c.translate(t as i64)).collect();
        translates.sort();
        out.extend(translates);
    }
    out.truncate(limit);
    Ok(FragmentList { kappa: cert.kappa, overflow: total > out.len() as u64, classes, fragments: out, total })
}
