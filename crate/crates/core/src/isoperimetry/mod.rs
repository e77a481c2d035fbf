//! Exact `κ_k(B)`, `k`-fragments and `k`-atoms in `Z/pZ` for `p < 64`.

mod checks;
mod search;

pub use checks::{
    check_atom_size_bound, check_atom_size_bound_with, check_duality, check_intersection, check_small_atoms,
    check_two_atom_structure, check_two_atom_structure_with,
};
pub use search::{
    atom_bound_applies, fragments, kappa, kappa_with, Certification, Exactness, FragmentList, IsoperimetricCertificate,
    KappaOptions, SearchMode,
};
