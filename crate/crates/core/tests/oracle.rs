//! Library results against the brute-force reference, plus values frozen
//! from it.

mod common;

use common::*;
use critpair::isoperimetry::{check_two_atom_structure, kappa_with, KappaOptions};
use critpair::layers::{check_balance, decompose};
use critpair::progressions::{best_ell, component_count, ell, unique_sum_elements};
use critpair::residue::{enumerate_subsets, EnumerationMode};
use critpair::verifiers::{check_small_sets, check_unique_sum};
use critpair::{Modulus, ResidueSet};

/// `(p, X, Y, unique sums)`.
type UniqueCase = (u32, &'static [u32], &'static [u32], &'static [u32]);

fn lib(p: u32, xs: &[u32]) -> ResidueSet {
    to_lib(p, &set(xs))
}

#[test]
fn sumset_matches_reference_on_all_pairs_mod_7() {
    let p = 7;
    let sets = all_nonempty_subsets(p);
    for a in &sets {
        for b in &sets {
            let got = to_lib(p, a).sumset(&to_lib(p, b)).unwrap();
            assert_eq!(from_lib(&got), sumset(a, b, p), "{a:?} + {b:?}");
        }
    }
}

#[test]
fn sumset_frozen_example() {
    let want = set(&[0, 1, 2, 3, 4, 5]);
    assert_eq!(sumset(&set(&[0, 1]), &set(&[0, 2, 4]), 7), want);
    assert_eq!(from_lib(&lib(7, &[0, 1]).sumset(&lib(7, &[0, 2, 4])).unwrap()), want);
}

#[test]
fn canonical_class_counts_match_reference() {
    assert_eq!(affine_class_reps(7, 3).len(), 2);
    for p in [5u32, 7, 11] {
        let m = Modulus::new(p as u64).unwrap();
        for size in 1..p as usize {
            let lib_count = enumerate_subsets(m, size, EnumerationMode::CanonicalOnly).unwrap().count();
            assert_eq!(lib_count, affine_class_reps(p, size).len(), "p={p} size={size}");
        }
    }
}

#[test]
fn ell_matches_reference() {
    let p = 11;
    for x in all_nonempty_subsets(p).iter().step_by(7) {
        for r in 1..p {
            assert_eq!(ell(&to_lib(p, x), r as i64).unwrap().length, ell_ref(x, r, p), "{x:?} r={r}");
        }
        let (_, l) = best_ell_ref(x, p);
        assert_eq!(best_ell(&to_lib(p, x)).unwrap().length, l, "{x:?}");
    }
}

fn ell_ref(x: &Set, r: u32, p: u32) -> u32 {
    common::ell(x, r, p)
}

fn best_ell_ref(x: &Set, p: u32) -> (u32, u32) {
    common::best_ell(x, p)
}

#[test]
fn ell_frozen_examples() {
    assert_eq!(ell_ref(&set(&[0, 1, 2, 9]), 1, 11), 5);
    let c = ell(&lib(11, &[0, 1, 2, 9]), 1).unwrap();
    assert_eq!((c.length, c.start), (5, 9));

    // {0,1,3} mod 13 is not a dilated interval: every difference needs 4.
    assert_eq!(best_ell_ref(&set(&[0, 1, 3]), 13), (1, 4));
    let c = best_ell(&lib(13, &[0, 1, 3])).unwrap();
    assert_eq!((c.difference, c.length), (1, 4));

    assert_eq!(best_ell_ref(&set(&[0, 1, 2, 7]), 53), (1, 8));
    let c = best_ell(&lib(53, &[0, 1, 2, 7])).unwrap();
    assert_eq!((c.difference, c.length), (1, 8));
}

#[test]
fn unique_sums_match_reference() {
    let p = 7;
    let sets = all_nonempty_subsets(p);
    for a in sets.iter().step_by(5) {
        for b in sets.iter().step_by(3) {
            let got = unique_sum_elements(&to_lib(p, a), &to_lib(p, b)).unwrap();
            assert_eq!(from_lib(&got), unique_sums(a, b, p));
        }
    }
}

#[test]
fn unique_sums_frozen_examples() {
    let cases: [UniqueCase; 3] = [
        (7, &[0, 1], &[0, 1], &[0, 2]),
        (13, &[0, 1, 3], &[0, 1, 3], &[0, 2, 6]),
        (29, &[0, 1, 3, 7], &[0, 1, 2, 4], &[0, 8, 9, 11]),
    ];
    for (p, x, y, want) in cases {
        assert_eq!(unique_sums(&set(x), &set(y), p), set(want));
        assert_eq!(from_lib(&unique_sum_elements(&lib(p, x), &lib(p, y)).unwrap()), set(want));
    }
    let v = check_unique_sum(&lib(29, &[0, 1, 3, 7]), &lib(29, &[0, 1, 2, 4])).unwrap();
    assert!(!v.is_fail(), "{v:?}");
}

#[test]
fn components_match_reference() {
    let p = 11;
    for z in all_nonempty_subsets(p).iter().step_by(11) {
        for d in 1..p {
            assert_eq!(component_count(&to_lib(p, z), d), components(z, d, p), "{z:?} d={d}");
        }
    }
}

#[test]
fn kappa_frozen_examples() {
    let k = kappa(&set(&[0, 1, 3]), 2, 13);
    assert_eq!((k.kappa, k.atom_size, k.fragments), (3, Some(2), 208));
    let opts = KappaOptions { count_fragments: true, ..KappaOptions::exhaustive() };
    let c = kappa_with(&lib(13, &[0, 1, 3]), 2, &opts).unwrap();
    assert_eq!((c.kappa, c.m, c.atom_size, c.fragment_count), (3, 0, Some(2), Some(208)));

    // Intervals {a..a+s-1} with 2 <= s <= 9 are the only fragments of {0,1,2}.
    let k = kappa(&set(&[0, 1, 2]), 2, 13);
    assert_eq!((k.kappa, k.fragments), (2, 13 * 8));
    let c = kappa_with(&lib(13, &[0, 1, 2]), 2, &opts).unwrap();
    assert_eq!(c.fragment_count, Some(104));
}

#[test]
fn two_atom_frozen_example_mod_23() {
    let b = set(&[0, 1, 2, 10, 11]);
    let (kappa, size, atoms) = kappa_zero_based(&b, 2, 23);
    assert_eq!((kappa, size), (5, Some(2)));
    assert_eq!(atoms, vec![set(&[0, 1]), set(&[0, 22])]);
    assert_eq!(components(&b, 1, 23), 2);

    let v = check_two_atom_structure(&to_lib(23, &b)).unwrap();
    assert!(v.is_substantive() && v.is_holds(), "{v:?}");
    assert_eq!(v.witness.as_ref().and_then(|w| w.get("m")), Some(0));
}

#[test]
fn small_sets_example_mod_29_misses_the_hypothesis() {
    let (a, b) = (set(&[0, 1, 2, 8]), set(&[0, 1, 2, 3, 9]));
    assert_eq!(sumset(&a, &b, 29).len(), 11);
    let v = check_small_sets(&to_lib(29, &a), &to_lib(29, &b)).unwrap();
    assert!(v.vacuous, "{v:?}");
}

#[test]
fn layers_match_reference() {
    for (p, x, y) in [(7u32, &[0u32][..], &[0u32, 1, 2][..]), (13, &[0, 1], &[0, 1, 4]), (17, &[0], &[0, 1, 3, 5])] {
        let (x, y) = (set(x), set(y));
        let want = layers(&x, &y, p);
        let dec = decompose(&to_lib(p, &x), &to_lib(p, &y), None).unwrap();
        let got: Vec<Set> = dec.layers.iter().map(from_lib).collect();
        assert_eq!(got, want, "p={p}");
        for i in 1..want.len() {
            let next = want.get(i + 1).cloned().unwrap_or_default();
            for &z in &want[i] {
                let e = dec.element(i, z).unwrap();
                let sig = signature(z, &y, &want[i - 1], p);
                assert_eq!(from_lib(&e.signature), sig);
                assert_eq!(e.in_degree as usize, sig.len());
                assert_eq!(e.out_degree, out_degree(z, &y, &next, p));
            }
        }
    }
}

#[test]
fn layer_frozen_example_mod_7() {
    let (x, y, p) = (set(&[0]), set(&[0, 1, 2]), 7);
    let l = layers(&x, &y, p);
    assert_eq!(l, vec![set(&[0]), set(&[1, 2]), set(&[3, 4]), set(&[5, 6])]);
    assert_eq!(signature(3, &y, &l[1], p), set(&[1, 2]));
    assert_eq!(signature(4, &y, &l[1], p), set(&[2]));

    let dec = decompose(&to_lib(p, &x), &to_lib(p, &y), None).unwrap();
    assert_eq!(from_lib(dec.signature(1, 1).unwrap()), set(&[1]));
    assert_eq!(from_lib(dec.signature(1, 2).unwrap()), set(&[2]));
    assert_eq!(from_lib(&dec.layer_class(2, &lib(7, &[1, 2])).unwrap()), set(&[3]));

    // Out-degree totals of N_0..N_2 equal in-degree totals of N_1..N_3.
    let totals = |f: fn(&critpair::layers::LayerElement) -> u32| -> Vec<u32> {
        dec.elements.iter().map(|es| es.iter().map(f).sum()).collect()
    };
    assert_eq!(totals(|e| e.out_degree), vec![2, 3, 3, 0]);
    assert_eq!(totals(|e| e.in_degree), vec![0, 2, 3, 3]);
    assert!(check_balance(&dec).is_holds());
}

#[test]
fn relaxed_probe_mod_13_has_no_three_element_two_atom() {
    for b in affine_class_reps(13, 9) {
        let k = kappa(&b, 2, 13);
        assert_ne!(k.atom_size, Some(3), "{b:?}");
    }
}
