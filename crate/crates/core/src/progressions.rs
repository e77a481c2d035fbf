//! Arithmetic-progression covers and `d`-component decompositions.
//!
//! `ℓ_r(X)` is computed on the dilate `r⁻¹·X`, where a progression of
//! difference `r` becomes an interval: the shortest covering interval is the
//! complement of the longest cyclic gap.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::{Modulus, ResidueSet};

/// The progression `{start, start+r, ..., start+(length-1)r}` in `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProgressionCover {
    pub difference: u32,
    pub start: u32,
    pub length: u32,
}

impl ProgressionCover {
    pub fn to_set(&self, modulus: Modulus) -> ResidueSet {
        ResidueSet::progression(modulus, self.start as i64, self.difference as i64, self.length)
    }
}

/// The maximal progressions of difference `d` inside a set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDecomposition {
    pub difference: u32,
    pub components: Vec<ProgressionCover>,
    pub count: usize,
}

impl ComponentDecomposition {
    pub fn sets(&self, modulus: Modulus) -> Vec<ResidueSet> {
        self.components.iter().map(|c| c.to_set(modulus)).collect()
    }
}

fn nonzero(modulus: Modulus, r: i64) -> Result<u32> {
    match modulus.reduce(r) {
        0 => Err(Error::ZeroMultiplier(modulus.get())),
        r => Ok(r),
    }
}

/// `ℓ_r(X)` with the cover attaining it. Among equally long covers the one
/// with the smallest start wins. The full set has `ℓ_r = p`, start 0.
pub fn ell(x: &ResidueSet, r: i64) -> Result<ProgressionCover> {
    let m = x.modulus();
    let r = nonzero(m, r)?;
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(ell_unchecked(x, r))
}

pub(crate) fn ell_unchecked(x: &ResidueSet, r: u32) -> ProgressionCover {
    let m = x.modulus();
    let p = m.get();
    if x.is_full() {
        return ProgressionCover { difference: r, start: 0, length: p };
    }
    let y = x.dilate_unchecked(m.inv(r).expect("r != 0"));
    let members = y.to_vec();
    let n = members.len();
    let mut best_gap = 0u32;
    let mut best_start = u32::MAX;
    for i in 0..n {
        let cur = members[i];
        let next = members[(i + 1) % n];
        // residues strictly between cur and next, cyclically
        let gap = (next + p - cur - 1) % p;
        let gap = if n == 1 { p - 1 } else { gap };
        let start = m.mul(r, next);
        if gap > best_gap || (gap == best_gap && start < best_start) {
            best_gap = gap;
            best_start = start;
        }
    }
    ProgressionCover { difference: r, start: best_start, length: p - best_gap }
}

/// Minimises `ℓ_r(X)` over `r in 1..=(p-1)/2`; ties go to the smallest `r`,
/// then the smallest start.
pub fn best_ell(x: &ResidueSet) -> Result<ProgressionCover> {
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    let half = x.modulus().half();
    let best = (1..=half)
        .map(|r| ell_unchecked(x, r))
        .min_by_key(|c| (c.length, c.difference, c.start))
        .expect("p >= 3");
    Ok(best)
}

/// Whether `X` is a progression of difference `r`.
pub fn is_progression(x: &ResidueSet, r: u32) -> bool {
    !x.is_empty() && !r.is_multiple_of(x.p()) && ell_unchecked(x, r % x.p()).length as usize == x.len()
}

/// The first `r in 1..=(p-1)/2` with `ℓ_r(S_i) <= |S_i| + slack_i` for every
/// pair `(S_i, slack_i)`, with the covers found.
pub fn common_cover(sets: &[(&ResidueSet, u32)]) -> Option<(u32, Vec<ProgressionCover>)> {
    let first = sets.first()?.0;
    if sets.iter().any(|(s, _)| s.is_empty() || s.modulus() != first.modulus()) {
        return None;
    }
    (1..=first.modulus().half()).find_map(|r| {
        let covers: Vec<ProgressionCover> = sets.iter().map(|(s, _)| ell_unchecked(s, r)).collect();
        let ok = covers.iter().zip(sets).all(|(c, (s, slack))| c.length as usize <= s.len() + *slack as usize);
        ok.then_some((r, covers))
    })
}

/// Number of `d`-components, `c_d(Z) = |Z \ (Z + d)|` (1 for the full set).
pub fn component_count(z: &ResidueSet, d: u32) -> usize {
    if z.is_full() {
        return 1;
    }
    z.difference(&z.translate(d as i64)).expect("same modulus").len()
}

/// The `d`-components of `Z`. Components may wrap past residue 0 and are
/// listed by increasing start.
pub fn d_components(z: &ResidueSet, d: i64) -> Result<ComponentDecomposition> {
    let m = z.modulus();
    let d = nonzero(m, d)?;
    let p = m.get();
    if z.is_full() {
        let c = ProgressionCover { difference: d, start: 0, length: p };
        return Ok(ComponentDecomposition { difference: d, components: vec![c], count: 1 });
    }
    let y = z.dilate_unchecked(m.inv(d).expect("d != 0"));
    let mut components = Vec::new();
    if let Some(hole) = (0..p).find(|&i| !y.contains(i)) {
        let mut run: Option<(u32, u32)> = None;
        for step in 1..=p {
            let i = (hole + step) % p;
            if y.contains(i) {
                run = Some(match run {
                    Some((s, len)) => (s, len + 1),
                    None => (i, 1),
                });
            } else if let Some((s, len)) = run.take() {
                components.push(ProgressionCover { difference: d, start: m.mul(d, s), length: len });
            }
        }
    }
    components.sort_by_key(|c| c.start);
    let count = components.len();
    Ok(ComponentDecomposition { difference: d, components, count })
}

/// Elements of `X + Y` with exactly one representation `x + y`.
pub fn unique_sum_elements(x: &ResidueSet, y: &ResidueSet) -> Result<ResidueSet> {
    x.same_modulus(y)?;
    Ok(x.unique_sums_unchecked(y))
}
