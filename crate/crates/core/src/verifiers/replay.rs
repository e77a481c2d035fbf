//! Re-running a check from the witness embedded in a verdict.

use crate::error::{Error, Result};
use crate::isoperimetry::{
    check_atom_size_bound, check_duality, check_intersection, check_small_atoms, check_two_atom_structure,
};
use crate::layers::{check_atom_layer_laws, check_balance, check_lemma_nu, decompose};
use crate::residue::{parse_residue_literal, parse_set_literal, IntegerSetView, ResidueSet, SetLiteral};
use crate::verdict::{StatementId as Id, Verdict, Witness};

use super::extremal::{check_extremal, make_extremal};
use super::statements::*;
use super::trace::trace_main_proof;

fn missing(what: &str) -> Error {
    Error::InvalidParameter(format!("witness lacks `{what}`"))
}

fn residue(w: &Witness, name: &str) -> Result<ResidueSet> {
    parse_residue_literal(w.sets.get(name).ok_or_else(|| missing(name))?, false)
}

fn integer(w: &Witness, name: &str) -> Result<IntegerSetView> {
    match parse_set_literal(w.sets.get(name).ok_or_else(|| missing(name))?)? {
        SetLiteral::Integer(z) => Ok(z),
        SetLiteral::Residue(_) => Err(Error::InvalidParameter(format!("`{name}` is not an integer set"))),
    }
}

fn int(w: &Witness, name: &str) -> Result<u32> {
    let v = w.get(name).ok_or_else(|| missing(name))?;
    u32::try_from(v).map_err(|_| Error::InvalidParameter(format!("`{name}` = {v} out of range")))
}

/// Recomputes the single-instance verdict described by `v`'s witness. For a
/// campaign verdict this is the instance the witness was taken from.
pub fn replay(v: &Verdict) -> Result<Verdict> {
    let w = v.witness.as_ref().ok_or_else(|| missing("witness"))?;
    let ab = || -> Result<(ResidueSet, ResidueSet)> { Ok((residue(w, "A")?, residue(w, "B")?)) };
    match v.statement {
        Id::Cd => ab().and_then(|(a, b)| check_cauchy_davenport(&a, &b)),
        Id::Vosper => ab().and_then(|(a, b)| classify_vosper(&a, &b)),
        Id::Hr => ab().and_then(|(a, b)| check_hr(&a, &b)),
        Id::Main => ab().and_then(|(a, b)| check_main(&a, &b)),
        Id::SmallSets => ab().and_then(|(a, b)| check_small_sets(&a, &b)),
        Id::TwoComponents => ab().and_then(|(a, b)| check_two_components(&a, &b)),
        Id::Trace => ab().and_then(|(a, b)| trace_main_proof(&a, &b)),
        Id::Conjecture => ab().and_then(|(a, b)| check_conjecture_pair(&a, &b, int(w, "m")?)),
        Id::Ls => Ok(check_lev_smeliansky(&integer(w, "A")?, &integer(w, "B")?)),
        Id::ZCase => Ok(check_z_case(&integer(w, "A")?, &integer(w, "B")?)),
        Id::Transfer => {
            check_compression_transfer_with(&residue(w, "X")?, &residue(w, "Y")?, w.r.unwrap_or(1))
        }
        Id::UniqueSum => check_unique_sum(&residue(w, "X")?, &residue(w, "B")?),
        Id::UniqueAtom => check_unique_atom(&residue(w, "S")?, int(w, "k")?),
        Id::AffineHalf => check_affine_half(&residue(w, "Z")?),
        Id::Duality => check_duality(&residue(w, "B")?, int(w, "k")?),
        Id::Intersection => check_intersection(&residue(w, "B")?, int(w, "k")?, u64::MAX),
        Id::TwoAtom => check_two_atom_structure(&residue(w, "B")?),
        Id::AtomBound => check_atom_size_bound(&residue(w, "B")?, int(w, "k")?),
        Id::SmallAtoms => check_small_atoms(&residue(w, "X")?),
        Id::AtomLayers => {
            let relaxed = w.get("relaxed").unwrap_or(0) != 0;
            check_atom_layer_laws(&residue(w, "B")?, &residue(w, "A")?, relaxed)
        }
        Id::LemmaNu | Id::Balance => {
            let dec = decompose(&residue(w, "X")?, &residue(w, "Y")?, None)?;
            Ok(if v.statement == Id::Balance { check_balance(&dec) } else { check_lemma_nu(&dec) })
        }
        Id::Extremal => {
            let p = v.p.ok_or_else(|| missing("p"))?;
            Ok(check_extremal(&make_extremal(int(w, "m")?, int(w, "j")?, p as u64)?))
        }
        Id::AtomSize => Err(Error::InvalidParameter("atom-size steps replay through their trace".into())),
    }
}
