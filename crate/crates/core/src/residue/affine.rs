use std::fmt;

use serde::{Deserialize, Serialize};

use super::modulus::Modulus;
use super::set::ResidueSet;
use crate::error::{Error, Result};

/// The affine map `x -> u*x + v` on `Z/pZ`, `u != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineMap {
    pub p: Modulus,
    pub u: u32,
    pub v: u32,
}

impl AffineMap {
    pub fn new(p: Modulus, u: i64, v: i64) -> Result<Self> {
        let u = p.reduce(u);
        if u == 0 {
            return Err(Error::ZeroMultiplier(p.get()));
        }
        Ok(AffineMap { p, u, v: p.reduce(v) })
    }

    pub fn identity(p: Modulus) -> Self {
        AffineMap { p, u: 1, v: 0 }
    }

    pub fn translation(p: Modulus, v: i64) -> Self {
        AffineMap { p, u: 1, v: p.reduce(v) }
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.p.add(self.p.mul(self.u, x), self.v)
    }

    pub fn apply_set(&self, set: &ResidueSet) -> Result<ResidueSet> {
        if set.modulus() != self.p {
            return Err(Error::ModulusMismatch(set.p(), self.p.get()));
        }
        Ok(set.dilate_unchecked(self.u).translate(self.v as i64))
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        let p = self.p;
        Ok(AffineMap { p, u: p.mul(self.u, other.u), v: self.apply(other.v) })
    }

    pub fn inverse(&self) -> AffineMap {
        let p = self.p;
        let ui = p.inv(self.u).expect("affine multiplier is nonzero");
        AffineMap { p, u: ui, v: p.mul(ui, p.neg(self.v)) }
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}x + {} (mod {})", self.u, self.v, self.p)
    }
}
