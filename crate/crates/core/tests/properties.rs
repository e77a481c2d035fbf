use critpair::layers::{check_balance, check_lemma_nu, decompose};
use critpair::residue::canonical_form;
use critpair::verifiers::{check_cauchy_davenport, check_hr, check_main, replay};
use critpair::{AffineMap, Modulus, ResidueSet};
use proptest::prelude::*;

const PRIMES: [u64; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

fn residue_set(p: u32, bits: u64) -> ResidueSet {
    let m = Modulus::new(p as u64).unwrap();
    let mut s = ResidueSet::from_residues(m, (0..p).filter(|i| bits >> i & 1 == 1)).unwrap();
    if s.is_empty() {
        s.insert(0);
    }
    s
}

/// An interval `[0, n)` with a few points moved up to three steps past its end.
fn near_interval(p: u32, n: u32, extra: &[u32]) -> ResidueSet {
    let m = Modulus::new(p as u64).unwrap();
    let mut s = ResidueSet::interval(m, 0, n);
    for &e in extra {
        s.remove(e as i64 % n as i64);
        s.insert((n + e % 4) as i64);
    }
    s
}

fn pair_mod_53() -> impl Strategy<Value = (ResidueSet, ResidueSet)> {
    (4u32..9, 5u32..10, prop::collection::vec(0u32..16, 0..3), prop::collection::vec(0u32..16, 0..3))
        .prop_map(|(na, nb, ea, eb)| (near_interval(53, na, &ea), near_interval(53, nb, &eb)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn main_verdict_is_affine_invariant((a, b) in pair_mod_53(), u in 1i64..53, v in 0i64..53, w in 0i64..53) {
        let m = Modulus::new(53).unwrap();
        let fa = AffineMap::new(m, u, v).unwrap().apply_set(&a).unwrap();
        let fb = AffineMap::new(m, u, w).unwrap().apply_set(&b).unwrap();
        let before = check_main(&a, &b).unwrap();
        let after = check_main(&fa, &fb).unwrap();
        prop_assert_eq!(before.hypothesis, after.hypothesis);
        prop_assert_eq!(before.conclusion, after.conclusion);
        prop_assert!(!before.is_fail());
    }

    #[test]
    fn replay_reproduces_single_verdicts(pi in 0usize..PRIMES.len(), x in any::<u64>(), y in any::<u64>()) {
        let p = PRIMES[pi] as u32;
        let (a, b) = (residue_set(p, x), residue_set(p, y));
        for v in [check_cauchy_davenport(&a, &b).unwrap(), check_hr(&a, &b).unwrap()] {
            prop_assert_eq!(replay(&v).unwrap(), v);
        }
    }

    #[test]
    fn layers_balance_and_partition(pi in 0usize..PRIMES.len(), x in any::<u64>(), y in any::<u64>()) {
        let p = PRIMES[pi] as u32;
        let (x, mut y) = (residue_set(p, x), residue_set(p, y));
        y.insert(0);
        let dec = decompose(&x, &y, None).unwrap();
        prop_assert!(dec.partition_holds());
        prop_assert!(check_balance(&dec).is_holds());
        prop_assert!(check_lemma_nu(&dec).is_holds());
    }

    #[test]
    fn sumset_commutes_and_meets_the_floor(pi in 0usize..PRIMES.len(), x in any::<u64>(), y in any::<u64>()) {
        let p = PRIMES[pi] as u32;
        let (a, b) = (residue_set(p, x), residue_set(p, y));
        let s = a.sumset(&b).unwrap();
        prop_assert_eq!(&s, &b.sumset(&a).unwrap());
        prop_assert!(s.len() >= (p as usize).min(a.len() + b.len() - 1));
    }

    #[test]
    fn canonical_form_is_a_class_invariant(pi in 0usize..PRIMES.len(), x in any::<u64>(), u in 1i64..1000, v in any::<i64>()) {
        let p = PRIMES[pi];
        let m = Modulus::new(p).unwrap();
        prop_assume!(u % p as i64 != 0);
        let a = residue_set(p as u32, x);
        let img = AffineMap::new(m, u, v % p as i64).unwrap().apply_set(&a).unwrap();
        let (c1, f1) = canonical_form(&a).unwrap();
        let (c2, _) = canonical_form(&img).unwrap();
        prop_assert_eq!(&c1, &c2);
        prop_assert_eq!(f1.apply_set(&a).unwrap(), c1);
    }
}
