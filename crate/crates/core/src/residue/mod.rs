//! Residue-set arithmetic in `Z/pZ`: the modulus, bitmask sets, affine maps,
//! integer views, set literals, canonical forms and subset enumeration.

pub(crate) mod bits;
mod affine;
mod canonical;
mod enumerate;
mod intset;
mod literal;
mod modulus;
mod set;

pub use affine::AffineMap;
pub use canonical::{canonical_form, is_canonical, translation_canonical};
pub use enumerate::{binomial, enumerate_subsets, Cursor, EnumerationMode, SubsetStream};
pub use intset::{gcd, IntegerSetView};
pub use literal::{parse_residue_body, parse_residue_literal, parse_set_literal, SetLiteral};
pub use modulus::{is_prime, Modulus};
pub use set::ResidueSet;
