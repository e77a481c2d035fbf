//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the summary is always printed; the
//! process exits non-zero when any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use critpair::isoperimetry::{kappa_with, KappaOptions};
use critpair::layers::{check_balance, check_lemma_nu, decompose};
use critpair::report::json_line;
use critpair::residue::{enumerate_subsets, EnumerationMode};
use critpair::verifiers::generate::{instance_rng, random_subset};
use critpair::verifiers::{check_extremal, make_extremal, run_campaign, CampaignConfig};
use critpair::{Modulus, StatementId as Id, Verdict};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SMALL_PRIMES: [u64; 6] = [5, 7, 11, 13, 17, 19];

fn modulus(p: u64) -> Modulus {
    Modulus::new(p).unwrap()
}

fn campaign(id: Id, p: u64, f: impl FnOnce(&mut CampaignConfig)) -> Verdict {
    let mut cfg = CampaignConfig::new(p);
    f(&mut cfg);
    run_campaign(id, &cfg).unwrap_or_else(|e| panic!("{id} p={p}: {e}"))
}

/// Zero failures and zero inconclusive instances.
fn clean(v: &Verdict) -> Result<(), String> {
    let s = &v.stats;
    if v.is_fail() || s.fails > 0 {
        return Err(format!("{} p={:?} failed: {}", v.statement, v.p, json_line(v)));
    }
    if v.is_inconclusive() || s.inconclusive > 0 {
        return Err(format!("{} p={:?} inconclusive: {}", v.statement, v.p, json_line(v)));
    }
    Ok(())
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("took {t:.1?}, limit {limit:?}"));
    }
    Ok(())
}

fn cauchy_davenport() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for p in [3, 5, 7, 11, 13] {
        let v = campaign(Id::Cd, p, |c| c.exhaustive = true);
        clean(&v)?;
        total += v.stats.instances;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{total} pairs, no violation"))
}

fn vosper() -> Outcome {
    let mut sub = 0;
    for p in [7, 11, 13] {
        let v = campaign(Id::Vosper, p, |c| c.exhaustive = true);
        clean(&v)?;
        sub += v.stats.satisfied;
    }
    Ok(format!("{sub} sub-bound pairs, all common-difference progressions"))
}

fn kappa_floor_and_oracle() -> Outcome {
    let mut compared = 0;
    for p in [5u64, 7, 11, 13] {
        let m = modulus(p);
        for size in 1..p as usize {
            for b in enumerate_subsets(m, size, EnumerationMode::CanonicalOnly).unwrap() {
                let table = kappa_table(&from_lib(&b), 3, p as u32);
                for k in 1..=3u32 {
                    let want = &table[k as usize - 1];
                    for opts in [KappaOptions::default(), KappaOptions::exhaustive()] {
                        let c = kappa_with(&b, k, &opts).unwrap();
                        let atoms: Vec<Set> = c.atom_translates().iter().map(from_lib).collect();
                        if !c.is_exact() || c.kappa != want.kappa || c.atom_size != want.atom_size || atoms != want.atoms {
                            return Err(format!("B={b} k={k}: library {c:?} vs reference {want:?}"));
                        }
                    }
                    compared += 1;
                }
                if (2..=p as usize - 2).contains(&size) {
                    let c = kappa_with(&b, 1, &KappaOptions::exhaustive()).unwrap();
                    if c.kappa as usize != size - 1 || c.atom_size != Some(1) {
                        return Err(format!("B={b}: kappa_1={} atom size {:?}", c.kappa, c.atom_size));
                    }
                }
            }
        }
    }
    Ok(format!("{compared} (B,k) certificates match the reference"))
}

fn duality_and_intersection() -> Outcome {
    let mut n = 0;
    for id in [Id::Duality, Id::Intersection] {
        for p in [5, 7, 11, 13] {
            let v = campaign(id, p, |c| c.exhaustive = true);
            clean(&v)?;
            n += v.stats.instances;
        }
        for p in [17, 19] {
            let v = campaign(id, p, |c| {
                c.instances = 500;
                c.seed = 17;
            });
            clean(&v)?;
            if v.stats.instances < 500 {
                return Err(format!("{id} p={p}: only {} instances", v.stats.instances));
            }
            n += v.stats.instances;
        }
    }
    Ok(format!("{n} certificates"))
}

fn two_atoms() -> Outcome {
    let mut sat = 0;
    for p in SMALL_PRIMES {
        let v = campaign(Id::TwoAtom, p, |_| {});
        clean(&v)?;
        sat += v.stats.satisfied;
    }
    Ok(format!("{sat} canonical B under the hypothesis, atoms of size 2"))
}

fn atom_sizes() -> Outcome {
    let mut sat = 0;
    for p in SMALL_PRIMES {
        let v = campaign(Id::AtomBound, p, |_| {});
        clean(&v)?;
        sat += v.stats.satisfied;
        // Closure mode must certify the same minimum as the full scan.
        let m = modulus(p);
        for size in 2..p as usize - 1 {
            for b in enumerate_subsets(m, size, EnumerationMode::CanonicalOnly).unwrap() {
                for k in 2..=4.min(size as u32) {
                    let fast = kappa_with(&b, k, &KappaOptions::default()).unwrap();
                    let full = kappa_with(&b, k, &KappaOptions::exhaustive()).unwrap();
                    if !fast.is_exact() || (fast.kappa, fast.atom_size, &fast.atoms) != (full.kappa, full.atom_size, &full.atoms) {
                        return Err(format!("closure disagrees on B={b} k={k}"));
                    }
                }
            }
        }
    }
    let v = campaign(Id::SmallAtoms, 47, |c| {
        c.instances = 100;
        c.seed = 47;
    });
    clean(&v)?;
    if v.stats.satisfied < 100 {
        return Err(format!("small atoms: {} instances", v.stats.satisfied));
    }
    Ok(format!("{sat} bound checks; {} sets at p=47 with atoms of sizes 4 and 5", v.stats.satisfied))
}

fn layer_laws() -> Outcome {
    for id in [Id::Balance, Id::LemmaNu] {
        let v = campaign(id, 31, |c| {
            c.instances = 10_000;
            c.seed = 31;
        });
        clean(&v)?;
        if v.stats.instances < 10_000 {
            return Err(format!("{id}: {} instances", v.stats.instances));
        }
    }
    let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    for i in 0..10_000u64 {
        let mut rng = instance_rng(7, i);
        let m = modulus(primes[rng.gen_range(0..primes.len())]);
        let p = m.get() as usize;
        let (nx, ny) = (rng.gen_range(1..=p), rng.gen_range(1..=p));
        let x = random_subset(&mut rng, m, nx);
        let mut y = random_subset(&mut rng, m, ny);
        y.insert(0);
        let dec = decompose(&x, &y, None).unwrap();
        if !dec.partition_holds() || !check_balance(&dec).is_holds() || !check_lemma_nu(&dec).is_holds() {
            return Err(format!("X={x} Y={y}"));
        }
    }
    Ok("2x10^4 campaign decompositions plus 10^4 direct, partition exact".into())
}

fn integer_side() -> Outcome {
    let start = Instant::now();
    let z = campaign(Id::ZCase, 0, |c| c.bound = Some(12));
    clean(&z)?;
    let ls = campaign(Id::Ls, 0, |c| c.bound = Some(8));
    clean(&ls)?;
    within(start, Duration::from_secs(600))?;
    Ok(format!("{} hypothesis pairs in [0,12]; {} pairs in [0,8]", z.stats.satisfied, ls.stats.instances))
}

fn extremal_family() -> Outcome {
    let v = campaign(Id::Extremal, 53, |_| {});
    clean(&v)?;
    for m in 0..=3u32 {
        for j in 1..=5u32 {
            let e = make_extremal(m, j, 53).unwrap();
            let (a, b) = (from_lib(&e.a), from_lib(&e.b));
            let (na, nb, m_) = (a.len(), b.len(), m as usize);
            let ok = sumset(&a, &a, 53).len() == 2 * na + m_
                && sumset(&a, &b, 53).len() == na + nb + m_
                && best_ell(&a, 53).1 as usize > na + m_ + 1;
            if !ok || !check_extremal(&e).is_holds() {
                return Err(format!("m={m} j={j}"));
            }
        }
    }
    Ok(format!("{} instances, identities confirmed by the reference", v.stats.instances))
}

fn main_structure() -> Outcome {
    let start = Instant::now();
    let main = campaign(Id::Main, 53, |c| {
        c.instances = 10_000;
        c.seed = 53;
    });
    clean(&main)?;
    let trace = campaign(Id::Trace, 53, |c| {
        c.instances = 1000;
        c.seed = 53;
    });
    clean(&trace)?;
    if trace.stats.holds < 1000 {
        return Err(format!("trace: {} of 1000 completed", trace.stats.holds));
    }
    let small = campaign(Id::SmallSets, 29, |c| c.exhaustive = true);
    clean(&small)?;
    within(start, Duration::from_secs(3600))?;
    Ok(format!(
        "{} main pairs, {} traces, {} small-set pairs",
        main.stats.satisfied, trace.stats.holds, small.stats.satisfied
    ))
}

fn determinism() -> Outcome {
    let configs: Vec<(Id, u64, usize, bool)> = vec![
        (Id::Cd, 11, 500, false),
        (Id::Main, 53, 500, false),
        (Id::Trace, 53, 100, false),
        (Id::Balance, 31, 500, false),
        (Id::Duality, 13, 200, false),
        (Id::Vosper, 11, 0, true),
    ];
    let run = |threads: usize| -> Vec<String> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            configs
                .iter()
                .map(|&(id, p, n, ex)| {
                    json_line(&campaign(id, p, |c| {
                        c.instances = n;
                        c.exhaustive = ex;
                        c.seed = 99;
                    }))
                })
                .collect()
        })
    };
    let first = run(1);
    for threads in [1, 4] {
        if run(threads) != first {
            return Err(format!("output changed with {threads} threads"));
        }
    }
    Ok(format!("{} campaigns byte-identical across reruns and thread counts", configs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Cauchy-Davenport exhaustive", cauchy_davenport),
        ("Vosper classification", vosper),
        ("kappa floor, 1-atoms and reference match", kappa_floor_and_oracle),
        ("duality and intersection", duality_and_intersection),
        ("2-atom structure", two_atoms),
        ("atom size bounds", atom_sizes),
        ("layer laws", layer_laws),
        ("integer-side statements", integer_side),
        ("extremal family", extremal_family),
        ("main structure theorem and trace", main_structure),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{t:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
