//! Seeded generators for small-doubling pairs.
//!
//! Uniform sampling essentially never produces pairs with `|A+B|` close to
//! `|A|+|B|`, so candidates start from progressions with a common difference,
//! get at most two punctures and two outliers each, and are mapped by a
//! random affine map. A local-search mode then moves single elements to hit
//! an exact sumset size.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::residue::{Modulus, ResidueSet};

/// Independent deterministic stream for instance `index`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Integer set with `size` elements: an interval with up to two punctures,
/// plus up to two outliers at most `reach` away from it.
pub fn perturbed_interval<R: Rng>(rng: &mut R, size: usize, reach: i64) -> Vec<i64> {
    assert!(size >= 1);
    let outliers = rng.gen_range(0..=2.min(size - 1));
    let punctures = rng.gen_range(0..=2usize);
    let len = (size - outliers + punctures) as i64;
    let mut xs: Vec<i64> = (0..len).collect();
    for _ in 0..punctures.min(xs.len().saturating_sub(2)) {
        let i = rng.gen_range(1..xs.len() - 1);
        xs.remove(i);
    }
    while xs.len() < size {
        let x = if rng.gen_bool(0.5) { len + rng.gen_range(0..=reach) } else { -1 - rng.gen_range(0..=reach) };
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs.truncate(size);
    xs.sort_unstable();
    xs
}

/// A candidate pair of residue sets of the given sizes sharing a random
/// difference `u` (or 1 when `dilate` is false).
pub fn perturbed_pair<R: Rng>(
    rng: &mut R,
    modulus: Modulus,
    na: usize,
    nb: usize,
    dilate: bool,
) -> (ResidueSet, ResidueSet) {
    let p = modulus.get() as i64;
    let reach = 3;
    let a = perturbed_interval(rng, na, reach);
    let b = perturbed_interval(rng, nb, reach);
    let u = if dilate { rng.gen_range(1..p) } else { 1 };
    let (va, vb) = (rng.gen_range(0..p), rng.gen_range(0..p));
    let map = |xs: &[i64], v: i64| ResidueSet::from_integers(modulus, xs.iter().map(|&x| x * u + v));
    (map(&a, va), map(&b, vb))
}

/// Excess `|A+B| - |A| - |B|` of a pair.
pub fn excess(a: &ResidueSet, b: &ResidueSet) -> i64 {
    a.sumset_unchecked(b).len() as i64 - a.len() as i64 - b.len() as i64
}

/// Move single elements of `a` or `b` (keeping sizes) within the window
/// `[lo - 4, hi + 4]` of their current span until the excess equals
/// `target`. Moves that increase the distance to the target are rejected.
/// Returns `None` when `steps` moves do not reach it.
pub fn local_search<R: Rng>(
    rng: &mut R,
    mut a: Vec<i64>,
    mut b: Vec<i64>,
    modulus: Modulus,
    target: i64,
    steps: usize,
) -> Option<(Vec<i64>, Vec<i64>)> {
    let ex = |a: &[i64], b: &[i64]| {
        let (x, y) = (
            ResidueSet::from_integers(modulus, a.iter().copied()),
            ResidueSet::from_integers(modulus, b.iter().copied()),
        );
        if x.len() != a.len() || y.len() != b.len() {
            return None;
        }
        Some(excess(&x, &y))
    };
    let mut cur = ex(&a, &b)?;
    for _ in 0..steps {
        if cur == target {
            return Some((a, b));
        }
        let on_a = rng.gen_bool(0.5);
        let side = if on_a { &mut a } else { &mut b };
        let lo = *side.iter().min().unwrap() - 4;
        let hi = *side.iter().max().unwrap() + 4;
        let candidate = rng.gen_range(lo..=hi);
        if side.contains(&candidate) {
            continue;
        }
        let i = rng.gen_range(0..side.len());
        let old = std::mem::replace(&mut side[i], candidate);
        match ex(&a, &b) {
            Some(e) if (e - target).abs() <= (cur - target).abs() => cur = e,
            _ => {
                let side = if on_a { &mut a } else { &mut b };
                side[i] = old;
            }
        }
    }
    (cur == target).then_some((a, b))
}

/// Scan instance indices in parallel batches and keep the first `count`
/// accepted instances in index order. `make` is called with the stream for
/// its index and must be pure in it, so the result does not depend on the
/// thread count. Gives up after `max_index` indices.
pub fn first_accepted<T, F>(seed: u64, count: usize, max_index: u64, make: F) -> Vec<(u64, T)>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> Option<T> + Sync,
{
    let batch = 4096u64;
    let mut out = Vec::with_capacity(count);
    let mut start = 0u64;
    while out.len() < count && start < max_index {
        let end = (start + batch).min(max_index);
        let found: Vec<(u64, T)> = (start..end)
            .into_par_iter()
            .filter_map(|i| make(&mut instance_rng(seed, i)).map(|t| (i, t)))
            .collect();
        out.extend(found.into_iter().take(count - out.len()));
        start = end;
    }
    out
}

/// Random subset of `Z/pZ` of the given size.
pub fn random_subset<R: Rng>(rng: &mut R, modulus: Modulus, size: usize) -> ResidueSet {
    let mut all: Vec<u32> = (0..modulus.get()).collect();
    all.shuffle(rng);
    ResidueSet::from_residues(modulus, all.into_iter().take(size)).expect("residues below p")
}
