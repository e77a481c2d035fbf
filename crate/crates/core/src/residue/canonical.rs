//! Canonical representatives of affine classes `{u*X + v : u != 0}`.

use super::affine::AffineMap;
use super::set::ResidueSet;
use crate::error::{Error, Result};

/// Least affine image of `X` under the [`ResidueSet`] order, together with the
/// first map (by `u`, then `v`) that produces it.
pub fn canonical_form(x: &ResidueSet) -> Result<(ResidueSet, AffineMap)> {
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    let m = x.modulus();
    let mut best: Option<(ResidueSet, AffineMap)> = None;
    for u in 1..m.get() {
        let y = x.dilate_unchecked(u);
        let (cand, v) = translation_canonical(&y);
        if best.as_ref().is_none_or(|(b, _)| cand < *b) {
            best = Some((cand, AffineMap { p: m, u, v }));
        }
    }
    Ok(best.expect("p >= 3 gives at least one multiplier"))
}

/// Whether `X` equals its canonical form. Stops at the first smaller image.
pub fn is_canonical(x: &ResidueSet) -> bool {
    if x.is_empty() {
        return true;
    }
    if !x.contains(0) {
        return false;
    }
    for u in 1..x.p() {
        let y = x.dilate_unchecked(u);
        for a in y.iter() {
            if y.translate(-(a as i64)) < *x {
                return false;
            }
        }
    }
    true
}

/// Least translate of `X` and the shift `v` with `X + v` equal to it.
pub fn translation_canonical(x: &ResidueSet) -> (ResidueSet, u32) {
    let m = x.modulus();
    let mut best: Option<(ResidueSet, u32)> = None;
    for a in x.iter() {
        let v = m.neg(a);
        let cand = x.translate(v as i64);
        if best.as_ref().is_none_or(|(b, _)| cand < *b) {
            best = Some((cand, v));
        }
    }
    best.unwrap_or_else(|| (x.clone(), 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::Modulus;

    fn set(p: u64, xs: &[u32]) -> ResidueSet {
        ResidueSet::from_residues(Modulus::new(p).unwrap(), xs.iter().copied()).unwrap()
    }

    #[test]
    fn singletons_go_to_zero() {
        for x in 0..11 {
            assert_eq!(canonical_form(&set(11, &[x])).unwrap().0, set(11, &[0]));
        }
    }

    #[test]
    fn progressions_go_to_intervals() {
        let m = Modulus::new(13).unwrap();
        for r in 1..13 {
            for len in 2..12 {
                let ap = ResidueSet::progression(m, 5, r, len);
                assert_eq!(canonical_form(&ap).unwrap().0, ResidueSet::interval(m, 0, len));
            }
        }
    }

    #[test]
    fn map_reproduces_canonical_set() {
        let x = set(13, &[2, 5, 6, 11]);
        let (c, f) = canonical_form(&x).unwrap();
        assert_eq!(f.apply_set(&x).unwrap(), c);
        assert!(is_canonical(&c));
        assert_eq!(canonical_form(&c).unwrap().0, c);
    }

    #[test]
    fn dilates_share_a_canonical_form() {
        assert_eq!(
            canonical_form(&set(13, &[0, 1, 3])).unwrap().0,
            canonical_form(&set(13, &[0, 2, 6])).unwrap().0
        );
    }

    #[test]
    fn empty_set_rejected() {
        assert_eq!(canonical_form(&set(7, &[])), Err(Error::EmptySet));
    }
}
