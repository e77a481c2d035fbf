//! Rendering verdicts in the three report formats.
//!
//! All three formats carry the same fields per verdict; JSON additionally
//! embeds the full witness together with the seed and cursor.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::error::Error;
use crate::verdict::{Conclusion, Hypothesis, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidParameter(format!("unknown format `{s}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

pub const CSV_HEADER: &str = "statement_id,p,hypothesis,conclusion,witness_r,instances";

fn hypothesis_str(h: Hypothesis) -> &'static str {
    match h {
        Hypothesis::Satisfied => "satisfied",
        Hypothesis::Unsatisfied => "unsatisfied",
    }
}

fn conclusion_str(c: Conclusion) -> &'static str {
    match c {
        Conclusion::Holds => "holds",
        Conclusion::Fails => "fails",
        Conclusion::Inconclusive => "inconclusive",
    }
}

fn opt<T: fmt::Display>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// One JSON object per line.
pub fn json_line(v: &Verdict) -> String {
    serde_json::to_string(v).expect("verdicts serialize")
}

pub fn csv_row(v: &Verdict) -> String {
    format!(
        "{},{},{},{},{},{}",
        v.statement,
        opt(v.p),
        hypothesis_str(v.hypothesis),
        conclusion_str(v.conclusion),
        opt(v.r()),
        v.stats.instances
    )
}

pub fn text_summary(v: &Verdict) -> String {
    let mut s = format!("{}", v.statement);
    if let Some(p) = v.p {
        s += &format!(" p={p}");
    }
    s += &format!(": {}", conclusion_str(v.conclusion));
    if v.vacuous {
        s += " (vacuous)";
    }
    if let Some(r) = v.r() {
        s += &format!(" r={r}");
    }
    s += &format!(
        " instances={} satisfied={} fails={} inconclusive={}",
        v.stats.instances, v.stats.satisfied, v.stats.fails, v.stats.inconclusive
    );
    if v.stats.logged > 0 {
        s += &format!(" logged={}", v.stats.logged);
    }
    if let Some(c) = v.cursor {
        s += &format!(" cursor={c}");
    }
    if let Some(w) = &v.witness {
        if v.is_fail() || v.is_inconclusive() {
            for (name, lit) in &w.sets {
                s += &format!("\n  {name} = {lit}");
            }
            if let Some(n) = &w.note {
                s += &format!("\n  note: {n}");
            }
        }
    }
    s
}

/// Writes `verdicts` in the chosen format. CSV always starts with the header.
pub fn emit_report<W: Write>(verdicts: &[Verdict], format: Format, mut out: W) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for v in verdicts {
        let line = match format {
            Format::Json => json_line(v),
            Format::Csv => csv_row(v),
            Format::Text => text_summary(v),
        };
        writeln!(out, "{line}")?;
    }
    Ok(())
}
