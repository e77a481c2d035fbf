//! Single-instance checks of the sumset statements.
//!
//! Each check evaluates the hypothesis first; an unsatisfied hypothesis gives
//! a vacuous `holds`. Witnesses always carry the input sets so that any
//! verdict can be replayed.

use crate::error::{Error, Result};
use crate::isoperimetry::kappa;
use crate::progressions::{best_ell, common_cover, component_count, ell, is_progression, unique_sum_elements};
use crate::residue::{IntegerSetView, ResidueSet};
use crate::verdict::{StatementId as Id, Verdict, Witness};

fn pair(a: &ResidueSet, b: &ResidueSet) -> Witness {
    Witness::new().set("A", a).set("B", b)
}

/// Translate so that the least member is 0.
pub(crate) fn zero_based(x: &ResidueSet) -> ResidueSet {
    match x.min() {
        Some(m) => x.translate(-(m as i64)),
        None => x.clone(),
    }
}

/// `|A+B| >= min(p, |A|+|B|-1)`.
pub fn check_cauchy_davenport(a: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    a.same_modulus(b)?;
    let p = a.p();
    if a.is_empty() || b.is_empty() {
        return Ok(Verdict::vacuous(Id::Cd, Some(p)).with_witness(pair(a, b)));
    }
    let n = a.sumset_unchecked(b).len();
    let bound = (p as usize).min(a.len() + b.len() - 1);
    let w = pair(a, b).value("sum", n as i64).value("bound", bound as i64);
    Ok(Verdict::judge(Id::Cd, Some(p), n >= bound, w))
}

/// For `|A|, |B| >= 2` and `|A+B| < min(p-1, |A|+|B|)`, both sets are
/// progressions with a common difference. Pairs with `|A+B| = p-1` are
/// counted in `stats.logged` and not judged.
pub fn classify_vosper(a: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    a.same_modulus(b)?;
    let p = a.p();
    if a.len() < 2 || b.len() < 2 {
        return Ok(Verdict::vacuous(Id::Vosper, Some(p)).with_witness(pair(a, b)));
    }
    let n = a.sumset_unchecked(b).len();
    let w = pair(a, b).value("sum", n as i64);
    if n < (p as usize - 1).min(a.len() + b.len()) {
        let r = (1..=a.modulus().half()).find(|&r| is_progression(a, r) && is_progression(b, r));
        return Ok(match r {
            Some(r) => Verdict::holds(Id::Vosper, Some(p)).with_witness(w.with_r(r)),
            None => Verdict::fails(Id::Vosper, Some(p), w.note("small sumset without a common-difference progression pair")),
        });
    }
    let mut v = Verdict::vacuous(Id::Vosper, Some(p)).with_witness(w);
    if n == p as usize - 1 {
        v.stats.logged = 1;
    }
    Ok(v)
}

/// Over the integers: for `A, B ⊆ [0, b]`, `0 ∈ A ∩ B`, `b = max B`,
/// `gcd(B) = 1`: `|A+B| >= min(b + |A|, |A ∪ (A+b)| + |B| - 2)`.
pub fn check_lev_smeliansky(a: &IntegerSetView, b: &IntegerSetView) -> Verdict {
    let w = Witness::new().int_set("A", a).int_set("B", b);
    let (Some(bmax), Some(amax)) = (b.max_member(), a.max_member()) else {
        return Verdict::vacuous(Id::Ls, None).with_witness(w);
    };
    if !(a.contains(0) && b.contains(0) && b.gcd() == 1 && amax <= bmax) {
        return Verdict::vacuous(Id::Ls, None).with_witness(w);
    }
    let n = a.sumset(b).len() as u64;
    let rhs = (bmax + a.len() as u64).min((a.union(&a.shift(bmax)).len() + b.len()) as u64 - 2);
    Verdict::judge(Id::Ls, None, n >= rhs, w.value("sum", n as i64).value("bound", rhs as i64))
}

fn cover_verdict(id: Id, a: &ResidueSet, b: &ResidueSet, slack: u32, base: Witness) -> Verdict {
    let p = Some(a.p());
    match common_cover(&[(a, slack), (b, slack)]) {
        Some((r, c)) => Verdict::holds(id, p)
            .with_witness(base.with_r(r).value("ell_a", c[0].length).value("ell_b", c[1].length)),
        None => {
            let best_a = best_ell(a).map(|c| c.length as i64).unwrap_or(-1);
            let best_b = best_ell(b).map(|c| c.length as i64).unwrap_or(-1);
            Verdict::fails(id, p, base.value("best_ell_a", best_a).value("best_ell_b", best_b))
        }
    }
}

/// For `|A| >= 3`, `|B| >= 4`, `|A+B| <= |A|+|B| <= p-4`: some `r` has
/// `ℓ_r(A) <= |A|+1` and `ℓ_r(B) <= |B|+1`.
pub fn check_hr(a: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    a.same_modulus(b)?;
    let p = a.p() as usize;
    let (na, nb) = (a.len(), b.len());
    let n = a.sumset_unchecked(b).len();
    let w = pair(a, b).value("sum", n as i64);
    if !(na >= 3 && nb >= 4 && n <= na + nb && na + nb + 4 <= p) {
        return Ok(Verdict::vacuous(Id::Hr, Some(a.p())).with_witness(w));
    }
    Ok(cover_verdict(Id::Hr, a, b, 1, w))
}

/// For `p >= 53`, `|A| >= 4`, `|B| >= 5`, `|A+B| <= |A|+|B|+1 <= p-5`: some
/// `r` has `ℓ_r(A) <= |A|+2` and `ℓ_r(B) <= |B|+2`.
pub fn check_main(a: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    a.same_modulus(b)?;
    let w = pair(a, b);
    if !main_hypothesis(a, b) {
        return Ok(Verdict::vacuous(Id::Main, Some(a.p())).with_witness(w));
    }
    let w = w.value("sum", a.sumset_unchecked(b).len() as i64);
    Ok(cover_verdict(Id::Main, a, b, 2, w))
}

pub fn main_hypothesis(a: &ResidueSet, b: &ResidueSet) -> bool {
    let p = a.p() as usize;
    let (na, nb) = (a.len(), b.len());
    p >= 53 && na >= 4 && nb >= 5 && na + nb + 6 <= p && a.sumset_unchecked(b).len() <= na + nb + 1
}

/// One instance of the conjectured statement for excess `m`.
pub fn check_conjecture_pair(a: &ResidueSet, b: &ResidueSet, m: u32) -> Result<Verdict> {
    a.same_modulus(b)?;
    let p = a.p() as usize;
    let (na, nb, mm) = (a.len(), b.len(), m as usize);
    let n = a.sumset_unchecked(b).len();
    let w = pair(a, b).value("m", m).value("sum", n as i64);
    if !(na >= mm + 3 && nb >= mm + 4 && n <= na + nb + mm && na + nb + mm + mm + 4 <= p) {
        return Ok(Verdict::vacuous(Id::Conjecture, Some(a.p())).with_witness(w));
    }
    Ok(cover_verdict(Id::Conjecture, a, b, m + 1, w))
}

/// Over the integers: for `0 ∈ A ∩ B`, `|A+B| <= |A|+|B|+1`, `|B| >= |A| >= 4`,
/// `|B| >= 5`: `gcd(A) = gcd(B) = r` and `ℓ_r(A) <= |A|+2`, `ℓ_r(B) <= |B|+2`.
pub fn check_z_case(a: &IntegerSetView, b: &IntegerSetView) -> Verdict {
    let w = Witness::new().int_set("A", a).int_set("B", b);
    let (na, nb) = (a.len(), b.len());
    if !(a.contains(0) && b.contains(0) && nb >= na && na >= 4 && nb >= 5 && a.sumset(b).len() <= na + nb + 1) {
        return Verdict::vacuous(Id::ZCase, None).with_witness(w);
    }
    let (ga, gb) = (a.gcd(), b.gcd());
    let la = a.ell(ga).unwrap_or(u64::MAX);
    let lb = b.ell(ga).unwrap_or(u64::MAX);
    let ok = ga == gb && la <= na as u64 + 2 && lb <= nb as u64 + 2;
    let w = w.with_r(ga as u32).value("gcd_b", gb as i64).value("ell_a", la.min(i64::MAX as u64) as i64);
    Verdict::judge(Id::ZCase, None, ok, w.value("ell_b", lb.min(i64::MAX as u64) as i64))
}

/// Transfer with difference 1.
pub fn check_compression_transfer(x: &ResidueSet, y: &ResidueSet) -> Result<Verdict> {
    check_compression_transfer_with(x, y, 1)
}

/// For `|Y| >= 4`, `|X| >= 5`, `p > 32`, `|X+Y| = |X|+|Y|+1 <= p-5` and
/// `ℓ_r(Y) <= |Y|+2`: `ℓ_r(X) <= |X|+2`. The statement is about `r = 1`; any
/// other `r` is the same statement for `r⁻¹·X, r⁻¹·Y`.
pub fn check_compression_transfer_with(x: &ResidueSet, y: &ResidueSet, r: u32) -> Result<Verdict> {
    x.same_modulus(y)?;
    let p = x.p() as usize;
    let (nx, ny) = (x.len(), y.len());
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = x.sumset_unchecked(y).len();
    let ly = ell(y, r as i64)?.length as usize;
    let w = Witness::new().set("X", x).set("Y", y).with_r(r).value("sum", n as i64).value("ell_y", ly as i64);
    if !(ny >= 4 && nx >= 5 && p > 32 && n == nx + ny + 1 && n + 5 <= p && ly <= ny + 2) {
        return Ok(Verdict::vacuous(Id::Transfer, Some(x.p())).with_witness(w));
    }
    let lx = ell(x, r as i64)?.length as usize;
    Ok(Verdict::judge(Id::Transfer, Some(x.p()), lx <= nx + 2, w.value("ell_x", lx as i64)))
}

/// For `p > 23`, `|A| = 4`, `|B| = 5`, `|A+B| = 10`: `c_d(A) <= 2` for some `d`.
pub fn check_two_components(a: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    a.same_modulus(b)?;
    let p = a.p();
    let w = pair(a, b);
    if !small_sets_hypothesis(a, b) {
        return Ok(Verdict::vacuous(Id::TwoComponents, Some(p)).with_witness(w));
    }
    let best = (1..=a.modulus().half()).map(|d| (component_count(a, d), d)).min().expect("p >= 3");
    Ok(Verdict::judge(Id::TwoComponents, Some(p), best.0 <= 2, w.value("d", best.1).value("components", best.0 as i64)))
}

/// For `0 ∈ Z`, `|Z| < (p+9)/4` and `c_d(Z) <= 2` for some `d`: some affine
/// image of `Z` lies in `{0, ..., (p-1)/2}`, i.e. `min_r ℓ_r(Z) <= (p+1)/2`.
pub fn check_affine_half(z: &ResidueSet) -> Result<Verdict> {
    let p = z.p();
    let w = Witness::new().set("Z", z);
    if z.is_empty() {
        return Err(Error::EmptySet);
    }
    let d = (1..=z.modulus().half()).find(|&d| component_count(z, d) <= 2);
    if !(z.contains(0) && 4 * z.len() < p as usize + 9) || d.is_none() {
        return Ok(Verdict::vacuous(Id::AffineHalf, Some(p)).with_witness(w));
    }
    let c = best_ell(z)?;
    let w = w.value("d", d.unwrap()).with_r(c.difference).value("ell", c.length);
    Ok(Verdict::judge(Id::AffineHalf, Some(p), c.length <= p.div_ceil(2), w))
}

fn small_sets_hypothesis(a: &ResidueSet, b: &ResidueSet) -> bool {
    a.p() > 23 && a.len() == 4 && b.len() == 5 && a.sumset_unchecked(b).len() == 10
}

/// For `p > 23`, `|A| = 4`, `|B| = 5`, `|A+B| = 10`: some `r` has
/// `ℓ_r(A) <= 6` and `ℓ_r(B) <= 7`. The two-component and affine-half
/// statements are checked on the same instance (for `A`, `B` and `A+B`) and
/// attached as steps; a failing step fails the whole verdict.
pub fn check_small_sets(a: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    a.same_modulus(b)?;
    let p = a.p();
    if !small_sets_hypothesis(a, b) {
        return Ok(Verdict::vacuous(Id::SmallSets, Some(p)).with_witness(pair(a, b)));
    }
    let (a0, b0) = (zero_based(a), zero_based(b));
    let mut steps = vec![check_two_components(&a0, &b0)?];
    for z in [&a0, &b0, &a0.sumset_unchecked(&b0)] {
        steps.push(check_affine_half(z)?);
    }
    let main = cover_verdict(Id::SmallSets, a, b, 2, pair(a, b).value("sum", 10));
    let failed = steps.iter().find(|s| s.is_fail()).map(|s| s.statement);
    let v = match (main.is_fail(), failed) {
        (false, Some(id)) => {
            Verdict::fails(Id::SmallSets, Some(p), main.witness.clone().unwrap_or_default().note(format!("{id} failed")))
        }
        _ => main,
    };
    Ok(v.with_steps(steps))
}

/// For `|X| = 4`, `|B| >= 4`, `|X+B| <= |X|+|B|+1` and `p > |B|+20`: some
/// element of `X+B` has exactly one representation. The atom corollary is
/// checked on `(B, 4)` as a step.
pub fn check_unique_sum(x: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    x.same_modulus(b)?;
    let p = x.p() as usize;
    let w = Witness::new().set("X", x).set("B", b);
    let n = x.sumset_unchecked(b).len();
    if !(x.len() == 4 && b.len() >= 4 && n <= b.len() + 5 && p > b.len() + 20) {
        return Ok(Verdict::vacuous(Id::UniqueSum, Some(x.p())).with_witness(w));
    }
    let u = unique_sum_elements(x, b)?;
    let w = w.value("unique", u.len() as i64).set("unique_sums", &u);
    let mut v = Verdict::judge(Id::UniqueSum, Some(x.p()), !u.is_empty(), w);
    if x.p() < 64 {
        let step = check_unique_atom(&zero_based(b), 4)?;
        if step.is_fail() && v.is_holds() {
            v = Verdict::fails(Id::UniqueSum, Some(x.p()), v.witness.clone().unwrap_or_default().note("unique-atom failed"));
        }
        v = v.with_steps(vec![step]);
    }
    Ok(v)
}

/// If some `k`-atom `A` of `S` has an element of `S+A` with a unique
/// representation, then `|A| = k`.
pub fn check_unique_atom(s: &ResidueSet, k: u32) -> Result<Verdict> {
    let p = s.p();
    let cert = kappa(s, k, None)?;
    let w = Witness::new().set("S", s).value("k", k);
    if !cert.feasible() {
        return Ok(Verdict::vacuous(Id::UniqueAtom, Some(p)).with_witness(w));
    }
    if !cert.is_exact() {
        return Ok(Verdict::inconclusive(Id::UniqueAtom, Some(p), "atom search was size-capped").annotate(|x| x.merge(w)));
    }
    let mut satisfied = false;
    for a in &cert.atoms {
        if unique_sum_elements(s, a)?.is_empty() {
            continue;
        }
        satisfied = true;
        if a.len() != k as usize {
            return Ok(Verdict::fails(Id::UniqueAtom, Some(p), w.set("atom", a)));
        }
    }
    let w = w.value("atom_size", cert.atom_size.unwrap_or(0));
    Ok(if satisfied { Verdict::holds(Id::UniqueAtom, Some(p)) } else { Verdict::vacuous(Id::UniqueAtom, Some(p)) }
        .with_witness(w))
}
