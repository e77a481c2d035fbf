//! The family showing that the cover bounds cannot be weakened.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::progressions::{best_ell, ProgressionCover};
use crate::residue::{Modulus, ResidueSet};
use crate::verdict::{StatementId, Verdict, Witness};

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalInstance {
    pub m: u32,
    pub j: u32,
    pub p: u32,
    #[serde(rename = "A", serialize_with = "literal")]
    pub a: ResidueSet,
    #[serde(rename = "B", serialize_with = "literal")]
    pub b: ResidueSet,
    /// `|A+A|`
    pub doubling: usize,
    /// `|A+B|`
    pub sumset: usize,
    pub best_cover: ProgressionCover,
}

fn literal<S: serde::Serializer>(x: &ResidueSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_literal())
}

/// `A = {0, ..., m+1} ∪ {2m+4+j}` and `B` the complement of `-(A+A)`.
pub fn make_extremal(m: u32, j: u32, p: u64) -> Result<ExtremalInstance> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let top = 2 * m as u64 + 4 + j as u64;
    if p <= 2 * top {
        return Err(Error::InvalidParameter(format!("p={p} must exceed {}", 2 * top)));
    }
    let modulus = Modulus::new(p)?;
    let a = ResidueSet::from_integers(modulus, (0..=m as i64 + 1).chain([top as i64]));
    let doubled = a.sumset(&a)?;
    let b = doubled.negate().complement();
    Ok(ExtremalInstance {
        m,
        j,
        p: modulus.get(),
        doubling: doubled.len(),
        sumset: a.sumset(&b)?.len(),
        best_cover: best_ell(&a)?,
        a,
        b,
    })
}

/// `|2A| = 2|A|+m`, `|A+B| = |A|+|B|+m` and `min_r ℓ_r(A) > |A|+m+1`.
pub fn check_extremal(inst: &ExtremalInstance) -> Verdict {
    let (na, nb, m) = (inst.a.len(), inst.b.len(), inst.m as usize);
    let ok = inst.doubling == 2 * na + m && inst.sumset == na + nb + m && inst.best_cover.length as usize > na + m + 1;
    let w = Witness::new()
        .set("A", &inst.a)
        .set("B", &inst.b)
        .value("m", inst.m)
        .value("j", inst.j)
        .value("doubling", inst.doubling as i64)
        .value("sum", inst.sumset as i64)
        .value("best_ell", inst.best_cover.length)
        .with_r(inst.best_cover.difference);
    Verdict::judge(StatementId::Extremal, Some(inst.p), ok, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_instance() {
        let e = make_extremal(1, 1, 53).unwrap();
        assert_eq!(e.a.to_vec(), vec![0, 1, 2, 7]);
        assert_eq!(e.doubling, 9);
        assert!(check_extremal(&e).is_substantive());
    }

    #[test]
    fn m_zero() {
        let e = make_extremal(0, 1, 53).unwrap();
        assert_eq!(e.a.to_vec(), vec![0, 1, 5]);
        assert_eq!(e.doubling, 6);
    }

    #[test]
    fn rejects_small_p() {
        assert!(make_extremal(1, 1, 13).is_err());
        assert!(make_extremal(1, 1, 17).is_ok());
    }
}
