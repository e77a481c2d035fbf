//! Exact sumset and critical-pair computations in `Z/pZ`.
//!
//! The crate is organised bottom-up:
//!
//! * [`residue`]: prime moduli, bitmask residue sets, affine maps, set
//!   literals, canonical forms and subset enumeration.
//! * [`progressions`]: arithmetic-progression covers `ℓ_r` and
//!   `d`-component decompositions.
//! * [`isoperimetry`]: exact `κ_k` search, `k`-fragments and `k`-atoms.
//! * [`layers`]: the `N_i(X, Y)` layer decomposition with signatures and
//!   degrees.
//! * [`verifiers`]: statement-level checks, generators, campaigns and the
//!   atom-chain proof trace.
//! * [`report`]: JSON lines / CSV / text rendering of verdicts.

pub mod error;
pub mod residue;
pub mod progressions;
pub mod verdict;
pub mod isoperimetry;
pub mod layers;
pub mod verifiers;
pub mod report;

pub use error::{Error, Result};
pub use residue::{AffineMap, IntegerSetView, Modulus, ResidueSet};
pub use verdict::{Conclusion, Hypothesis, StatementId, Stats, Tally, Verdict, Witness};
