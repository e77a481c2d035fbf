//! Outcome of a statement check, single instance or whole campaign.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::residue::{Cursor, IntegerSetView, ResidueSet};

/// Identifier of a checkable statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatementId {
    Cd,
    Vosper,
    Ls,
    Hr,
    Main,
    Conjecture,
    Duality,
    Intersection,
    TwoAtom,
    AtomBound,
    SmallAtoms,
    ZCase,
    Transfer,
    SmallSets,
    UniqueSum,
    Trace,
    LemmaNu,
    Balance,
    AtomLayers,
    Extremal,
    AtomSize,
    TwoComponents,
    AffineHalf,
    UniqueAtom,
}

impl StatementId {
    pub const ALL: [StatementId; 24] = [
        StatementId::Cd,
        StatementId::Vosper,
        StatementId::Ls,
        StatementId::Hr,
        StatementId::Main,
        StatementId::Conjecture,
        StatementId::Duality,
        StatementId::Intersection,
        StatementId::TwoAtom,
        StatementId::AtomBound,
        StatementId::SmallAtoms,
        StatementId::ZCase,
        StatementId::Transfer,
        StatementId::SmallSets,
        StatementId::UniqueSum,
        StatementId::Trace,
        StatementId::LemmaNu,
        StatementId::Balance,
        StatementId::AtomLayers,
        StatementId::Extremal,
        StatementId::AtomSize,
        StatementId::TwoComponents,
        StatementId::AffineHalf,
        StatementId::UniqueAtom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::Cd => "cd",
            StatementId::Vosper => "vosper",
            StatementId::Ls => "ls",
            StatementId::Hr => "hr",
            StatementId::Main => "main",
            StatementId::Conjecture => "conjecture",
            StatementId::Duality => "duality",
            StatementId::Intersection => "intersection",
            StatementId::TwoAtom => "two-atom",
            StatementId::AtomBound => "atom-bound",
            StatementId::SmallAtoms => "small-atoms",
            StatementId::ZCase => "z-case",
            StatementId::Transfer => "transfer",
            StatementId::SmallSets => "small-sets",
            StatementId::UniqueSum => "unique-sum",
            StatementId::Trace => "trace",
            StatementId::LemmaNu => "lemma-nu",
            StatementId::Balance => "balance",
            StatementId::AtomLayers => "atom-layers",
            StatementId::Extremal => "extremal",
            StatementId::AtomSize => "atom-size",
            StatementId::TwoComponents => "two-components",
            StatementId::AffineHalf => "affine-half",
            StatementId::UniqueAtom => "unique-atom",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown statement id `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    Satisfied,
    Unsatisfied,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Holds,
    Fails,
    Inconclusive,
}

/// Reproducible payload: set literals, the common difference and named
/// integer quantities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, name: &str, x: &ResidueSet) -> Self {
        self.sets.insert(name.to_string(), x.to_literal());
        self
    }

    pub fn int_set(mut self, name: &str, x: &IntegerSetView) -> Self {
        self.sets.insert(name.to_string(), x.to_string());
        self
    }

    pub fn value(mut self, name: &str, v: impl Into<i64>) -> Self {
        self.values.insert(name.to_string(), v.into());
        self
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.note = Some(text.into());
        self
    }

    /// Adds `other`'s entries; existing entries and the note win.
    pub fn merge(mut self, other: Witness) -> Self {
        for (k, v) in other.sets {
            self.sets.entry(k).or_insert(v);
        }
        for (k, v) in other.values {
            self.values.entry(k).or_insert(v);
        }
        self.r = self.r.or(other.r);
        self.note = self.note.or(other.note);
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.values.get(name).copied()
    }
}

/// Instance counters. For a single instance every field is 0 or 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub instances: u64,
    pub satisfied: u64,
    pub holds: u64,
    pub fails: u64,
    pub inconclusive: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub logged: u64,
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

impl Stats {
    fn add(&mut self, o: &Stats) {
        self.instances += o.instances;
        self.satisfied += o.satisfied;
        self.holds += o.holds;
        self.fails += o.fails;
        self.inconclusive += o.inconclusive;
        self.logged += o.logged;
    }
}

/// Result of checking one statement.
///
/// `fails` always carries a witness from which the instance can be replayed;
/// an unsatisfied hypothesis always yields `holds` with `vacuous` set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub statement: StatementId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub hypothesis: Hypothesis,
    pub conclusion: Conclusion,
    pub vacuous: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub stats: Stats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cursor: Option<Cursor>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<Verdict>,
}

impl Verdict {
    fn single(statement: StatementId, p: Option<u32>, hypothesis: Hypothesis, conclusion: Conclusion) -> Self {
        let sat = hypothesis == Hypothesis::Satisfied;
        let stats = Stats {
            instances: 1,
            satisfied: sat as u64,
            holds: (sat && conclusion == Conclusion::Holds) as u64,
            fails: (conclusion == Conclusion::Fails) as u64,
            inconclusive: (conclusion == Conclusion::Inconclusive) as u64,
            logged: 0,
        };
        Verdict {
            statement,
            p,
            hypothesis,
            conclusion,
            vacuous: !sat,
            witness: None,
            stats,
            seed: None,
            cursor: None,
            steps: Vec::new(),
        }
    }

    pub fn holds(statement: StatementId, p: Option<u32>) -> Self {
        Self::single(statement, p, Hypothesis::Satisfied, Conclusion::Holds)
    }

    pub fn fails(statement: StatementId, p: Option<u32>, witness: Witness) -> Self {
        Self::single(statement, p, Hypothesis::Satisfied, Conclusion::Fails).with_witness(witness)
    }

    pub fn vacuous(statement: StatementId, p: Option<u32>) -> Self {
        Self::single(statement, p, Hypothesis::Unsatisfied, Conclusion::Holds)
    }

    pub fn inconclusive(statement: StatementId, p: Option<u32>, reason: impl Into<String>) -> Self {
        Self::single(statement, p, Hypothesis::Satisfied, Conclusion::Inconclusive)
            .with_witness(Witness::new().note(reason))
    }

    /// `holds` or `fails` depending on `ok`, with the same witness either way.
    pub fn judge(statement: StatementId, p: Option<u32>, ok: bool, witness: Witness) -> Self {
        if ok {
            Self::holds(statement, p).with_witness(witness)
        } else {
            Self::fails(statement, p, witness)
        }
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    /// Merges extra witness data into the existing witness.
    pub fn annotate(mut self, f: impl FnOnce(Witness) -> Witness) -> Self {
        self.witness = Some(f(self.witness.take().unwrap_or_default()));
        self
    }

    pub fn with_steps(mut self, steps: Vec<Verdict>) -> Self {
        self.steps = steps;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn is_fail(&self) -> bool {
        self.conclusion == Conclusion::Fails
    }

    pub fn is_holds(&self) -> bool {
        self.conclusion == Conclusion::Holds
    }

    pub fn is_inconclusive(&self) -> bool {
        self.conclusion == Conclusion::Inconclusive
    }

    /// `holds` with a satisfied hypothesis.
    pub fn is_substantive(&self) -> bool {
        self.is_holds() && !self.vacuous
    }

    pub fn r(&self) -> Option<u32> {
        self.witness.as_ref().and_then(|w| w.r)
    }
}

/// Associative, order-independent aggregation of instance verdicts.
///
/// Failures and inconclusive results keep the lowest instance index, so the
/// merged result does not depend on how work was split.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub stats: Stats,
    first_fail: Option<(u64, Verdict)>,
    first_inconclusive: Option<(u64, Verdict)>,
    first_substantive: Option<(u64, Verdict)>,
}

fn keep_lowest(a: Option<(u64, Verdict)>, b: Option<(u64, Verdict)>) -> Option<(u64, Verdict)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Tally {
    pub fn single(index: u64, v: Verdict) -> Self {
        let mut t = Tally { stats: v.stats, ..Default::default() };
        if v.is_fail() {
            t.first_fail = Some((index, v));
        } else if v.is_inconclusive() {
            t.first_inconclusive = Some((index, v));
        } else if v.is_substantive() {
            t.first_substantive = Some((index, v));
        }
        t
    }

    pub fn merge(mut self, other: Tally) -> Self {
        self.stats.add(&other.stats);
        self.first_fail = keep_lowest(self.first_fail, other.first_fail);
        self.first_inconclusive = keep_lowest(self.first_inconclusive, other.first_inconclusive);
        self.first_substantive = keep_lowest(self.first_substantive, other.first_substantive);
        self
    }

    pub fn push(&mut self, index: u64, v: Verdict) {
        let t = std::mem::take(self);
        *self = t.merge(Tally::single(index, v));
    }

    /// Counts instances whose hypothesis failed, without building verdicts.
    pub fn add_vacuous(&mut self, n: u64) {
        self.stats.instances += n;
    }

    /// Counts satisfied instances that held, without building verdicts.
    pub fn add_holds(&mut self, n: u64) {
        self.stats.instances += n;
        self.stats.satisfied += n;
        self.stats.holds += n;
    }

    pub fn add_logged(&mut self, n: u64) {
        self.stats.logged += n;
    }

    pub fn first_failure(&self) -> Option<&(u64, Verdict)> {
        self.first_fail.as_ref()
    }

    /// Collapses the tally into one campaign verdict. The witness is taken
    /// from the first failing instance, else the first inconclusive one, else
    /// the first substantive one.
    pub fn finish(self, statement: StatementId, p: Option<u32>) -> Verdict {
        let s = self.stats;
        let conclusion = if s.fails > 0 {
            Conclusion::Fails
        } else if s.inconclusive > 0 {
            Conclusion::Inconclusive
        } else {
            Conclusion::Holds
        };
        let hypothesis = if s.satisfied > 0 || s.fails > 0 { Hypothesis::Satisfied } else { Hypothesis::Unsatisfied };
        let chosen = self.first_fail.or(self.first_inconclusive).or(self.first_substantive);
        let (witness, steps) = match chosen {
            Some((idx, v)) => {
                let w = v.witness.clone().unwrap_or_default().value("instance", idx as i64);
                let steps = if v.is_fail() || v.is_inconclusive() { vec![v] } else { Vec::new() };
                (Some(w), steps)
            }
            None => (None, Vec::new()),
        };
        Verdict {
            statement,
            p,
            hypothesis,
            conclusion,
            vacuous: hypothesis == Hypothesis::Unsatisfied,
            witness,
            stats: s,
            seed: None,
            cursor: None,
            steps,
        }
    }
}
