//! The textual set literal: `p=13:{0,1,3}` for residue sets and `Z:{0,3,6}`
//! for integer sets. Whitespace is ignored; members must be distinct.

use super::intset::IntegerSetView;
use super::modulus::Modulus;
use super::set::ResidueSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetLiteral {
    Residue(ResidueSet),
    Integer(IntegerSetView),
}

fn parse_err(text: &str, reason: impl Into<String>) -> Error {
    Error::Parse { text: text.to_string(), reason: reason.into() }
}

/// Splits `"{a, b, c}"` into signed integers, rejecting duplicates.
fn parse_members(text: &str, body: &str) -> Result<Vec<i64>> {
    let inner = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(|| parse_err(text, "members must be enclosed in braces"))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in inner.split(',') {
        let v: i64 = tok.parse().map_err(|_| parse_err(text, format!("bad member `{tok}`")))?;
        if out.contains(&v) {
            return Err(Error::Duplicate(v));
        }
        out.push(v);
    }
    Ok(out)
}

/// Parses either literal form.
pub fn parse_set_literal(text: &str) -> Result<SetLiteral> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(body) = compact.strip_prefix("Z:") {
        let members = parse_members(text, body)?;
        if let Some(&neg) = members.iter().find(|&&v| v < 0) {
            return Err(parse_err(text, format!("integer sets are non-negative, got {neg}")));
        }
        return Ok(SetLiteral::Integer(IntegerSetView::new(members.into_iter().map(|v| v as u64))));
    }
    parse_residue_literal(text, false).map(SetLiteral::Residue)
}

/// Parses `p=<p>:{...}`. Members outside `[0, p)` are rejected unless
/// `reduce` is set, in which case they are reduced mod `p` (duplicates after
/// reduction are still rejected).
pub fn parse_residue_literal(text: &str, reduce: bool) -> Result<ResidueSet> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = compact.strip_prefix("p=").ok_or_else(|| parse_err(text, "expected `p=<prime>:`"))?;
    let (p_txt, body) = rest.split_once(':').ok_or_else(|| parse_err(text, "missing `:`"))?;
    let p: u64 = p_txt.parse().map_err(|_| parse_err(text, format!("bad modulus `{p_txt}`")))?;
    let modulus = Modulus::new(p)?;
    residues_from_body(text, body, modulus, reduce)
}

/// Parses a bare `{...}` body against a known modulus, or a full literal
/// whose modulus must match.
pub fn parse_residue_body(text: &str, modulus: Modulus, reduce: bool) -> Result<ResidueSet> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.starts_with("p=") {
        let s = parse_residue_literal(&compact, reduce)?;
        if s.modulus() != modulus {
            return Err(Error::ModulusMismatch(s.p(), modulus.get()));
        }
        return Ok(s);
    }
    residues_from_body(text, &compact, modulus, reduce)
}

fn residues_from_body(text: &str, body: &str, modulus: Modulus, reduce: bool) -> Result<ResidueSet> {
    let members = parse_members(text, body)?;
    let p = modulus.get();
    let mut set = ResidueSet::empty(modulus);
    for v in members {
        let r = if reduce {
            modulus.reduce(v)
        } else if (0..p as i64).contains(&v) {
            v as u32
        } else {
            return Err(Error::ResidueOutOfRange { value: v, p });
        };
        if set.contains(r) {
            return Err(Error::Duplicate(r as i64));
        }
        set.insert(r as i64);
    }
    Ok(set)
}
