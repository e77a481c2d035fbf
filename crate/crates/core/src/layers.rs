//! Layer decomposition `N_i(X, Y) = (X + iY) \ (X + (i-1)Y)`.
//!
//! Each element `z` of a layer `N_i`, `i >= 1`, carries its signature
//! `U(z) = {u ∈ Y : z - u ∈ N_{i-1}}` and the degrees
//! `d_-(z) = |(z - Y) ∩ N_{i-1}|`, `d_+(z) = |(z + Y) ∩ N_{i+1}|`.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::isoperimetry::{kappa_with, KappaOptions, SearchMode};
use crate::residue::ResidueSet;
use crate::verdict::{StatementId, Verdict, Witness};

/// Signature and degrees of one layer element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerElement {
    pub z: u32,
    /// Empty for elements of `N_0`.
    pub signature: ResidueSet,
    pub in_degree: u32,
    pub out_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub x: ResidueSet,
    pub y: ResidueSet,
    /// `N_0, ..., N_t`.
    pub layers: Vec<ResidueSet>,
    pub t: usize,
    /// `X + tY`.
    pub reach: ResidueSet,
    /// Per layer, its elements in ascending order.
    pub elements: Vec<Vec<LayerElement>>,
    /// `N_{t+1}`, kept only for the out-degrees of the last layer.
    next: ResidueSet,
}

/// Computes `N_0, ..., N_t`, stopping at the first empty layer, once
/// `X + iY` is everything, or at `i = max_t` (default `p`).
pub fn decompose(x: &ResidueSet, y: &ResidueSet, max_t: Option<usize>) -> Result<LayerDecomposition> {
    x.same_modulus(y)?;
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySet);
    }
    let max_t = max_t.unwrap_or(x.p() as usize);
    if max_t == 0 {
        return Err(Error::InvalidParameter("max_t must be at least 1".into()));
    }
    let mut layers = vec![x.clone()];
    let mut reach = x.clone();
    let next = loop {
        let grown = reach.sumset_unchecked(y);
        let layer = grown.difference(&reach)?;
        if layer.is_empty() || layers.len() > max_t || reach.is_full() {
            break layer;
        }
        layers.push(layer);
        reach = grown;
    };
    let t = layers.len() - 1;
    let neg_y = y.negate();
    let elements = (0..=t)
        .map(|i| {
            let below = (i > 0).then(|| &layers[i - 1]);
            let above = if i < t { &layers[i + 1] } else { &next };
            layers[i]
                .iter()
                .map(|z| {
                    let (signature, in_degree) = match below {
                        Some(prev) => {
                            // U(z) = Y ∩ (z - N_{i-1}); d_- counts (z - Y) ∩ N_{i-1}
                            let sig = prev.negate().translate(z as i64).intersection(y).expect("same modulus");
                            let din = neg_y.translate(z as i64).intersection(prev).expect("same modulus").len();
                            (sig, din as u32)
                        }
                        None => (ResidueSet::empty(x.modulus()), 0),
                    };
                    let out_degree = y.translate(z as i64).intersection(above).expect("same modulus").len() as u32;
                    LayerElement { z, signature, in_degree, out_degree }
                })
                .collect()
        })
        .collect();
    Ok(LayerDecomposition { x: x.clone(), y: y.clone(), layers, t, reach, elements, next })
}

impl LayerDecomposition {
    pub fn p(&self) -> u32 {
        self.x.p()
    }

    pub fn element(&self, i: usize, z: u32) -> Option<&LayerElement> {
        let es = self.elements.get(i)?;
        es.binary_search_by_key(&z, |e| e.z).ok().map(|j| &es[j])
    }

    pub fn signature(&self, i: usize, z: u32) -> Option<&ResidueSet> {
        self.element(i, z).filter(|_| i >= 1).map(|e| &e.signature)
    }

    /// `U(z) \ {0}`, the alphabet used when `Y` is an atom containing 0.
    pub fn signature_star(&self, i: usize, z: u32) -> Option<ResidueSet> {
        self.signature(i, z).map(|u| {
            let mut u = u.clone();
            u.remove(0);
            u
        })
    }

    fn check_index(&self, i: usize, u: &ResidueSet) -> Result<()> {
        if i == 0 || i > self.t {
            return Err(Error::InvalidParameter(format!("layer index {i} outside 1..={}", self.t)));
        }
        if !u.is_subset(&self.y)? {
            return Err(Error::InvalidParameter(format!("{u} is not a subset of Y")));
        }
        Ok(())
    }

    /// `N_i^U`: elements of `N_i` whose signature is exactly `U`.
    pub fn layer_class(&self, i: usize, u: &ResidueSet) -> Result<ResidueSet> {
        self.check_index(i, u)?;
        Ok(self.class_where(i, |sig| sig == u))
    }

    /// `N_i^{⊆U}`: elements of `N_i` whose signature is contained in `U`.
    pub fn layer_class_within(&self, i: usize, u: &ResidueSet) -> Result<ResidueSet> {
        self.check_index(i, u)?;
        Ok(self.class_where(i, |sig| sig.is_subset(u).unwrap_or(false)))
    }

    fn class_where(&self, i: usize, pred: impl Fn(&ResidueSet) -> bool) -> ResidueSet {
        let zs = self.elements[i].iter().filter(|e| pred(&e.signature)).map(|e| e.z);
        ResidueSet::from_residues(self.x.modulus(), zs).expect("layer residues are in range")
    }

    /// Distinct signatures occurring in `N_i`, ascending.
    pub fn signatures_in(&self, i: usize) -> Vec<ResidueSet> {
        let mut v: Vec<ResidueSet> = self.elements[i].iter().map(|e| e.signature.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }

    /// Layers pairwise disjoint and `Σ|N_i| + |Z/pZ \ (X + tY)| = p`.
    pub fn partition_holds(&self) -> bool {
        let mut seen = ResidueSet::empty(self.x.modulus());
        for l in &self.layers {
            if !seen.intersection(l).expect("same modulus").is_empty() {
                return false;
            }
            seen = seen.union(l).expect("same modulus");
        }
        seen == self.reach && self.layer_sizes().iter().sum::<usize>() + self.reach.complement().len() == self.p() as usize
    }

    /// `{p, X, Y, t, layers, signatures: {z: [u..]}, degrees: {z: [din, dout]}}`.
    /// When an element sits in several layers (possible only if `0 ∉ Y`) the
    /// lowest layer wins.
    pub fn to_json(&self) -> Value {
        let mut sigs = BTreeMap::new();
        let mut degs = BTreeMap::new();
        for (i, es) in self.elements.iter().enumerate() {
            for e in es {
                if i >= 1 {
                    sigs.entry(e.z).or_insert_with(|| e.signature.to_vec());
                }
                degs.entry(e.z).or_insert([e.in_degree, e.out_degree]);
            }
        }
        let key = |m: BTreeMap<u32, Value>| -> serde_json::Map<String, Value> {
            m.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
        };
        json!({
            "p": self.p(),
            "X": self.x.to_literal(),
            "Y": self.y.to_literal(),
            "t": self.t,
            "layers": self.layers.iter().map(|l| l.to_vec()).collect::<Vec<_>>(),
            "signatures": key(sigs.into_iter().map(|(k, v)| (k, json!(v))).collect()),
            "degrees": key(degs.into_iter().map(|(k, v)| (k, json!(v))).collect()),
        })
    }

    fn witness(&self) -> Witness {
        Witness::new().set("X", &self.x).set("Y", &self.y).value("t", self.t as i64)
    }
}

/// For `i >= 1` and each signature `U` in `N_{i+1}`:
/// `N_{i+1}^U - U ⊆ N_i^{⊆U}` and `|N_{i+1}^U| <= |N_i^{⊆U}| - |U| + 1`.
/// The hypothesis is `0 ∈ Y`, which makes the layers a partition.
pub fn check_lemma_nu(dec: &LayerDecomposition) -> Verdict {
    let id = StatementId::LemmaNu;
    let p = Some(dec.p());
    if !dec.y.contains(0) {
        return Verdict::vacuous(id, p).with_witness(dec.witness());
    }
    for i in 1..dec.t {
        for u in dec.signatures_in(i + 1) {
            let class = dec.class_where(i + 1, |s| *s == u);
            let within = dec.class_where(i, |s| s.is_subset(&u).unwrap_or(false));
            let shifted = class.sumset_unchecked(&u.negate());
            let contained = shifted.is_subset(&within).unwrap_or(false);
            let sized = class.len() + u.len() <= within.len() + 1;
            if !(contained && sized) {
                let w = dec.witness().value("i", i as i64).set("U", &u).set("class", &class).set("within", &within);
                return Verdict::fails(id, p, w);
            }
        }
    }
    Verdict::holds(id, p).with_witness(dec.witness())
}

/// `Σ_{z∈N_i} d_+(z) = Σ_{z∈N_{i+1}} d_-(z)` for every `0 <= i < t`, plus the
/// out-degree total of `N_t` against the count of pairs into `N_{t+1}`.
pub fn check_balance(dec: &LayerDecomposition) -> Verdict {
    let id = StatementId::Balance;
    let p = Some(dec.p());
    let total_out = |i: usize| dec.elements[i].iter().map(|e| e.out_degree as u64).sum::<u64>();
    let total_in = |i: usize| dec.elements[i].iter().map(|e| e.in_degree as u64).sum::<u64>();
    for i in 0..dec.t {
        let (o, n) = (total_out(i), total_in(i + 1));
        if o != n {
            return Verdict::fails(id, p, dec.witness().value("i", i as i64).value("out", o as i64).value("in", n as i64));
        }
    }
    let last = dec.layers[dec.t].clone();
    let into_next: u64 = dec.next.iter().map(|z| dec.y.negate().translate(z as i64).intersection(&last).unwrap().len() as u64).sum();
    if into_next != total_out(dec.t) {
        let w = dec.witness().value("i", dec.t as i64).value("out", total_out(dec.t) as i64).value("in", into_next as i64);
        return Verdict::fails(id, p, w);
    }
    Verdict::holds(id, p).with_witness(dec.witness())
}

/// For a 2-atom `A ∋ 0` of `B` with `|A| >= 3`, on `N_i = N_i(B, A)`:
/// `N_{i+1} - A* ⊆ N_i` for `i >= 1` and `|N_{i+1}| <= |N_i| - (|A| - 2)` for
/// `1 <= i < t`, where `A* = A \ {0}`.
///
/// The size hypothesis `|B| < p - (m+4)(m+3)/2` forces `|A| = 2`, so genuine
/// instances appear only with `relaxed`, which drops it. `|A| = 2` is checked
/// directly either way.
pub fn check_atom_layer_laws(b: &ResidueSet, a: &ResidueSet, relaxed: bool) -> Result<Verdict> {
    let id = StatementId::AtomLayers;
    let p = b.p();
    b.same_modulus(a)?;
    if !a.contains(0) {
        return Err(Error::InvalidParameter(format!("{a} must contain 0")));
    }
    let mode = if p <= 23 { SearchMode::Exhaustive } else { SearchMode::Closure };
    let cert = kappa_with(b, 2, &KappaOptions { mode, ..Default::default() })?;
    if !cert.is_exact() || !cert.is_atom(a) {
        return Err(Error::NotAnAtom(a.to_literal()));
    }
    let m = cert.m;
    let size_hyp = (b.len() as i64) < p as i64 - (m + 4) * (m + 3) / 2;
    let base = Witness::new().set("B", b).set("A", a).value("m", m);
    if !(relaxed || size_hyp) {
        return Ok(Verdict::vacuous(id, Some(p)).with_witness(base));
    }
    let dec = decompose(b, a, None)?;
    let mut a_star = a.clone();
    a_star.remove(0);
    let drop = a.len() - 2;
    for i in 1..dec.t {
        let (cur, nxt) = (&dec.layers[i], &dec.layers[i + 1]);
        if !nxt.sumset(&a_star.negate())?.is_subset(cur)? {
            return Ok(Verdict::fails(id, Some(p), base.value("i", i as i64).note("N_{i+1} - A* not inside N_i")));
        }
        if nxt.len() + drop > cur.len() {
            let w = base.value("i", i as i64).value("n_i", cur.len() as i64).value("n_next", nxt.len() as i64);
            return Ok(Verdict::fails(id, Some(p), w.note("layer sizes do not drop by |A| - 2")));
        }
    }
    let w = base.value("t", dec.t as i64).value("relaxed", relaxed as i64);
    Ok(Verdict::holds(id, Some(p)).with_witness(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::Modulus;

    fn set(p: u64, xs: &[u32]) -> ResidueSet {
        ResidueSet::from_residues(Modulus::new(p).unwrap(), xs.iter().copied()).unwrap()
    }

    #[test]
    fn singleton_chain() {
        let d = decompose(&set(5, &[0]), &set(5, &[0, 1]), None).unwrap();
        assert_eq!(d.t, 4);
        for i in 1..=4 {
            assert_eq!(d.layers[i], set(5, &[i as u32]));
            let e = d.element(i, i as u32).unwrap();
            assert_eq!(e.in_degree, 1);
            assert_eq!(e.signature, set(5, &[1]));
        }
        assert!(d.partition_holds());
        assert!(check_balance(&d).is_substantive());
        assert!(check_lemma_nu(&d).is_substantive());
    }

    #[test]
    fn adding_zero_stops_at_once() {
        let d = decompose(&set(7, &[1, 2]), &set(7, &[0]), None).unwrap();
        assert_eq!(d.t, 0);
    }

    #[test]
    fn max_t_limits_depth() {
        let d = decompose(&set(11, &[0]), &set(11, &[0, 1]), Some(3)).unwrap();
        assert_eq!(d.t, 3);
        assert_eq!(d.element(3, 3).unwrap().out_degree, 1);
        assert!(check_balance(&d).is_substantive());
    }

    #[test]
    fn class_errors() {
        let d = decompose(&set(7, &[0]), &set(7, &[0, 1, 2]), None).unwrap();
        assert!(d.layer_class(0, &set(7, &[1])).is_err());
        assert!(d.layer_class(1, &set(7, &[3])).is_err());
        assert!(d.layer_class(1, &set(7, &[])).unwrap().is_empty());
    }

    #[test]
    fn two_element_atom_laws() {
        let b = set(13, &[0, 1, 3]);
        let cert = kappa_with(&b, 2, &KappaOptions::exhaustive()).unwrap();
        let v = check_atom_layer_laws(&b, &cert.atoms[0], false).unwrap();
        assert!(v.is_substantive());
        assert!(matches!(check_atom_layer_laws(&b, &set(13, &[0, 5, 6]), true), Err(Error::NotAnAtom(_))));
    }
}
