//! Step-by-step replay of the proof of the main structure theorem.
//!
//! For `|A| = 4` a 5-atom `U` of `A` is taken, the small-sets lemma applied
//! to `(A, U)` and compression transfer to `B`. For `|A| >= 5` a 4-atom `U`
//! of `A` (at most 6 elements) is taken; if `|U| = 4` a 5-atom `V` of `U`
//! closes the chain, otherwise a 4-atom `V` of `U` and a 5-atom `W` of `V`.
//! Transfer then climbs back to `A` and finally `B`.
//!
//! Each link `(X, Y)` with `ℓ_r(Y)` known to be small needs
//! `|X+Y| = |X|+|Y|+1` for transfer. When the sum is smaller the pair is
//! handed to the Hamidoune–Rødseth check instead, which picks its own `r`.

use crate::error::Result;
use crate::isoperimetry::{kappa_with, KappaOptions};
use crate::progressions::ell;
use crate::residue::ResidueSet;
use crate::verdict::{StatementId as Id, Verdict, Witness};

use super::statements::{check_compression_transfer_with, check_hr, check_small_sets, main_hypothesis, zero_based};

struct Trace {
    p: u32,
    steps: Vec<Verdict>,
}

impl Trace {
    fn blocked(&self) -> bool {
        self.steps.last().is_some_and(|s| !s.is_substantive())
    }

    /// A `k`-atom of `x` whose size must lie in `allowed`.
    fn atom(&mut self, x: &ResidueSet, k: u32, allowed: &[usize], name: &str) -> Result<Option<ResidueSet>> {
        let cert = kappa_with(x, k, &KappaOptions::default())?;
        if !cert.feasible() {
            let v = Verdict::inconclusive(Id::AtomSize, Some(self.p), format!("no {k}-fragment for {name}"));
            self.steps.push(v.annotate(|w| w.set("of", x).value("k", k)));
            return Ok(None);
        }
        if !cert.is_exact() {
            let v = Verdict::inconclusive(Id::AtomSize, Some(self.p), format!("{k}-atom search was size-capped"));
            self.steps.push(v.annotate(|w| w.set("of", x).value("k", k)));
            return Ok(None);
        }
        let atom = cert.atoms[0].clone();
        let w = Witness::new()
            .set("of", x)
            .set(name, &atom)
            .value("k", k)
            .value("kappa", cert.kappa)
            .value("size", atom.len() as i64);
        let ok = allowed.contains(&atom.len());
        self.steps.push(Verdict::judge(Id::AtomSize, Some(self.p), ok, w));
        Ok(ok.then_some(atom))
    }

    fn push_cover(&mut self, v: Verdict) -> Option<u32> {
        let r = if v.is_substantive() { v.r() } else { None };
        let blocked = v.vacuous;
        self.steps.push(if blocked {
            let w = v.witness.clone().unwrap_or_default();
            Verdict::inconclusive(v.statement, Some(self.p), "hypothesis unmet inside the trace")
                .annotate(|x| x.merge(w))
                .with_steps(vec![v])
        } else {
            v
        });
        r
    }

    /// Cover of the 4-set `x` from the 5-set `y` with `|x+y| <= 10`.
    fn base(&mut self, x: &ResidueSet, y: &ResidueSet) -> Result<Option<u32>> {
        let v = if x.sumset(y)?.len() == 10 {
            check_small_sets(&zero_based(x), &zero_based(y))?
        } else {
            check_hr(x, y)?
        };
        Ok(self.push_cover(v))
    }

    /// Given `ℓ_r(y) <= |y|+2`, a difference covering `x`.
    fn link(&mut self, x: &ResidueSet, y: &ResidueSet, r: u32) -> Result<Option<u32>> {
        let n = x.sumset(y)?.len();
        let (nx, ny) = (x.len(), y.len());
        let v = if n == nx + ny + 1 {
            check_compression_transfer_with(x, y, r)?
        } else if n <= nx + ny {
            if ny >= 3 && nx >= 4 { check_hr(y, x)? } else { check_hr(x, y)? }
        } else {
            let w = Witness::new().set("X", x).set("Y", y).value("sum", n as i64);
            Verdict::fails(Id::Trace, Some(self.p), w.note("atom pair with sumset above |X|+|Y|+1"))
        };
        Ok(self.push_cover(v))
    }
}

/// Runs the proof on `(A, B)`. The returned verdict lists every atom, every
/// atom-size assertion and every lemma application as ordered steps, and
/// judges the final difference `r` against the theorem's conclusion. A
/// failed step fails the trace; a step whose hypothesis is not met makes it
/// inconclusive.
pub fn trace_main_proof(a: &ResidueSet, b: &ResidueSet) -> Result<Verdict> {
    a.same_modulus(b)?;
    let p = a.p();
    let base = Witness::new().set("A", a).set("B", b);
    if !main_hypothesis(a, b) {
        return Ok(Verdict::vacuous(Id::Trace, Some(p)).with_witness(base));
    }
    let mut t = Trace { p, steps: Vec::new() };
    let r = if a.sumset(b)?.len() <= a.len() + b.len() {
        let v = check_hr(a, b)?;
        t.push_cover(v)
    } else {
        run_chain(&mut t, a, b)?
    };
    let branch = if a.len() == 4 { 4 } else { 5 };
    let base = base.value("branch", branch);
    if let Some(s) = t.steps.iter().find(|s| s.is_fail()) {
        let note = format!("step {} failed", s.statement);
        return Ok(Verdict::fails(Id::Trace, Some(p), base.note(note)).with_steps(t.steps));
    }
    let Some(r) = r else {
        return Ok(Verdict::inconclusive(Id::Trace, Some(p), "trace stopped before a difference was found")
            .annotate(|w| w.merge(base))
            .with_steps(t.steps));
    };
    let (la, lb) = (ell(a, r as i64)?.length, ell(b, r as i64)?.length);
    let ok = la as usize <= a.len() + 2 && lb as usize <= b.len() + 2;
    let w = base.with_r(r).value("ell_a", la).value("ell_b", lb);
    Ok(Verdict::judge(Id::Trace, Some(p), ok, w).with_steps(t.steps))
}

fn run_chain(t: &mut Trace, a: &ResidueSet, b: &ResidueSet) -> Result<Option<u32>> {
    macro_rules! next {
        ($e:expr) => {
            match $e {
                Some(x) if !t.blocked() => x,
                _ => return Ok(None),
            }
        };
    }
    let r = if a.len() == 4 {
        let u = next!(t.atom(a, 5, &[5], "U")?);
        next!(t.base(a, &u)?)
    } else {
        let u = next!(t.atom(a, 4, &[4, 5, 6], "U")?);
        let r = if u.len() == 4 {
            let v = next!(t.atom(&u, 5, &[5], "V")?);
            next!(t.base(&u, &v)?)
        } else {
            let v = next!(t.atom(&u, 4, &[4], "V")?);
            let w = next!(t.atom(&v, 5, &[5], "W")?);
            let r = next!(t.base(&v, &w)?);
            next!(t.link(&u, &v, r)?)
        };
        next!(t.link(a, &u, r)?)
    };
    t.link(b, a, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::Modulus;

    #[test]
    fn stated_example() {
        let m = Modulus::new(53).unwrap();
        let a = ResidueSet::from_residues(m, [0, 1, 2, 4]).unwrap();
        let b = ResidueSet::from_residues(m, [0, 1, 2, 3, 5]).unwrap();
        let v = trace_main_proof(&a, &b).unwrap();
        assert!(v.is_substantive(), "{v:?}");
        assert_eq!(v.r(), Some(1));
    }

    #[test]
    fn interval_chain() {
        let m = Modulus::new(53).unwrap();
        let a = ResidueSet::interval(m, 0, 7);
        let b = ResidueSet::from_residues(m, [0, 1, 2, 3, 4, 5, 7, 8]).unwrap();
        let v = trace_main_proof(&a, &b).unwrap();
        assert!(v.is_substantive(), "{v:?}");
        assert_eq!(v.r(), Some(1));
    }
}
