use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use critpair::isoperimetry::{fragments, kappa_with, KappaOptions, SearchMode};
use critpair::layers::{check_atom_layer_laws, check_balance, check_lemma_nu, decompose};
use critpair::progressions::{best_ell, d_components, ell};
use critpair::report::{emit_report, Format};
use critpair::residue::{parse_residue_body, parse_set_literal, Cursor, SetLiteral};
use critpair::verifiers::{self as v, run_campaign, CampaignConfig};
use critpair::{Error, IntegerSetView, Modulus, ResidueSet, StatementId, Verdict};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_OPEN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "critpair", version, about = "Exact sumset and critical-pair computations in Z/pZ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// Prime modulus
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Set literal: `p=13:{0,1,3}`, `Z:{0,3,6}` or `{0,1,3}` with --p
    #[arg(long = "set", global = true)]
    sets: Vec<String>,
    /// Reduce out-of-range residues instead of rejecting them
    #[arg(long, global = true)]
    reduce: bool,
    #[arg(long, global = true)]
    k: Option<u32>,
    #[arg(long, global = true)]
    m: Option<u32>,
    #[arg(long, global = true)]
    j: Option<u32>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    d: Option<i64>,
    /// Largest candidate size in a κ search
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Exhaustive enumeration (campaigns) or full size scan (κ)
    #[arg(long, global = true)]
    exhaustive: bool,
    /// Count all fragments
    #[arg(long, global = true)]
    count: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Pair budget for resumable scans
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Resume token `<size>:<rank>`
    #[arg(long, global = true)]
    cursor: Option<String>,
    #[arg(long, global = true, env = "CRITPAIR_THREADS")]
    threads: Option<usize>,
    /// json, csv or text
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Generated instances for seeded campaigns
    #[arg(long, global = true, default_value_t = 1000)]
    instances: usize,
    /// Integer campaigns scan subsets of [0, bound]
    #[arg(long, global = true)]
    bound: Option<u64>,
    /// Drop the size hypothesis in atom-layer checks
    #[arg(long, global = true)]
    relaxed: bool,
    /// Limit on listed fragments
    #[arg(long, global = true, default_value_t = 1000)]
    limit: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// A+B
    Sumset,
    /// ℓ_r(X), or the best difference without --r
    Ell,
    /// d-components of a set
    Components,
    /// κ_k(B) with its certificate
    Kappa,
    /// k-atoms and k-fragments of B
    Atoms,
    /// Layer decomposition N_i(X, Y)
    Layers,
    /// The extremal family instance for --m, --j, --p
    Extremal,
    /// Check a statement on the given sets, or run its campaign
    Verify { statement: String },
}

enum Outcome {
    Data(serde_json::Value),
    Verdicts(Vec<Verdict>),
}

struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.opts.threads {
        if n == 0 || rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_err() {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let format: Format = match cli.opts.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli.command, &cli.opts) {
        Ok(Outcome::Data(value)) => {
            let text = match format {
                Format::Json => value.to_string(),
                _ => serde_json::to_string_pretty(&value).expect("json value"),
            };
            println!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verdicts(vs)) => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            if emit_report(&vs, format, &mut lock).and_then(|_| lock.flush()).is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(exit_code(&vs))
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn exit_code(vs: &[Verdict]) -> u8 {
    if vs.iter().any(Verdict::is_fail) {
        EXIT_FAIL
    } else if vs.iter().any(|v| v.is_inconclusive() || v.vacuous) {
        EXIT_OPEN
    } else {
        0
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn modulus(o: &Opts) -> Result<Option<Modulus>, Failure> {
    Ok(match o.p {
        Some(p) => Some(Modulus::new(p)?),
        None => None,
    })
}

fn parse_one(text: &str, m: Option<Modulus>, reduce: bool) -> Result<SetLiteral, Failure> {
    let t = text.trim();
    if t.starts_with("p=") || t.starts_with("Z:") {
        let lit = if reduce && t.starts_with("p=") {
            SetLiteral::Residue(critpair::residue::parse_residue_literal(t, true)?)
        } else {
            parse_set_literal(t)?
        };
        if let (SetLiteral::Residue(s), Some(m)) = (&lit, m) {
            if s.modulus() != m {
                return Err(Error::ModulusMismatch(s.p(), m.get()).into());
            }
        }
        return Ok(lit);
    }
    let m = m.ok_or_else(|| usage(format!("`{text}` needs --p or a `p=` prefix")))?;
    Ok(SetLiteral::Residue(parse_residue_body(t, m, reduce)?))
}

fn residue_sets(o: &Opts, n: usize) -> Result<Vec<ResidueSet>, Failure> {
    if o.sets.len() != n {
        return Err(usage(format!("expected {n} --set value(s), got {}", o.sets.len())));
    }
    let m = modulus(o)?;
    let sets = o
        .sets
        .iter()
        .map(|t| match parse_one(t, m, o.reduce)? {
            SetLiteral::Residue(s) => Ok(s),
            SetLiteral::Integer(_) => Err(usage(format!("`{t}` is an integer set; a residue set is needed"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(first) = sets.first() {
        if let Some(s) = sets.iter().find(|s| s.modulus() != first.modulus()) {
            return Err(Error::ModulusMismatch(first.p(), s.p()).into());
        }
    }
    Ok(sets)
}

fn integer_sets(o: &Opts) -> Result<Vec<IntegerSetView>, Failure> {
    if o.sets.len() != 2 {
        return Err(usage("expected two integer sets `Z:{...}`"));
    }
    o.sets
        .iter()
        .map(|t| match parse_set_literal(t)? {
            SetLiteral::Integer(z) => Ok(z),
            SetLiteral::Residue(_) => Err(usage(format!("`{t}` must be an integer set `Z:{{...}}`"))),
        })
        .collect()
}

fn need<T>(x: Option<T>, flag: &str) -> Result<T, Failure> {
    x.ok_or_else(|| usage(format!("missing --{flag}")))
}

fn kappa_options(o: &Opts) -> KappaOptions {
    let mode = if o.exhaustive { SearchMode::Exhaustive } else { SearchMode::Closure };
    KappaOptions { cap: o.cap, mode, count_fragments: o.count }
}

fn run(cmd: &Command, o: &Opts) -> Result<Outcome, Failure> {
    let data = match cmd {
        Command::Sumset => {
            let s = residue_sets(o, 2)?;
            let sum = s[0].sumset(&s[1])?;
            json!({"A": s[0].to_literal(), "B": s[1].to_literal(), "sum": sum.to_literal(), "size": sum.len()})
        }
        Command::Ell => {
            let x = &residue_sets(o, 1)?[0];
            let c = match o.r {
                Some(r) => ell(x, r)?,
                None => best_ell(x)?,
            };
            json!({"X": x.to_literal(), "r": c.difference, "start": c.start, "ell": c.length, "cover": c.to_set(x.modulus()).to_literal()})
        }
        Command::Components => {
            let z = &residue_sets(o, 1)?[0];
            let dec = d_components(z, o.d.unwrap_or(1))?;
            let comps: Vec<String> = dec.sets(z.modulus()).iter().map(ResidueSet::to_literal).collect();
            json!({"Z": z.to_literal(), "d": dec.difference, "count": dec.count, "components": comps})
        }
        Command::Kappa => {
            let b = &residue_sets(o, 1)?[0];
            let cert = kappa_with(b, need(o.k, "k")?, &kappa_options(o))?;
            serde_json::to_value(&cert).expect("certificate serializes")
        }
        Command::Atoms => {
            let b = &residue_sets(o, 1)?[0];
            let k = need(o.k, "k")?;
            let cert = kappa_with(b, k, &kappa_options(o))?;
            let atoms: Vec<String> = cert.atom_translates().iter().map(ResidueSet::to_literal).collect();
            let mut out = json!({"B": b.to_literal(), "k": k, "kappa": cert.kappa, "exact": cert.is_exact(), "atoms": atoms});
            if o.count {
                let f = fragments(b, k, o.limit)?;
                let list: Vec<String> = f.fragments.iter().map(ResidueSet::to_literal).collect();
                out["fragments"] = json!(list);
                out["fragment_total"] = json!(f.total);
            }
            out
        }
        Command::Layers => {
            let s = residue_sets(o, 2)?;
            decompose(&s[0], &s[1], None)?.to_json()
        }
        Command::Extremal => {
            let inst = v::make_extremal(need(o.m, "m")?, need(o.j, "j")?, need(o.p, "p")?)?;
            let verdict = v::check_extremal(&inst);
            let code = if verdict.is_holds() { 0 } else { EXIT_FAIL };
            let mut out = serde_json::to_value(&inst).expect("instance serializes");
            out["verified"] = json!(verdict.is_holds());
            if code != 0 {
                println!("{out}");
                return Err(Failure(EXIT_FAIL, "extremal identities do not hold".into()));
            }
            out
        }
        Command::Verify { statement } => {
            let id: StatementId = statement.parse().map_err(|e: Error| usage(e.to_string()))?;
            return Ok(Outcome::Verdicts(vec![verify(id, o)?]));
        }
    };
    Ok(Outcome::Data(data))
}

fn verify(id: StatementId, o: &Opts) -> Result<Verdict, Failure> {
    use StatementId as Id;
    let single_extremal = id == Id::Extremal && (o.m.is_some() || o.j.is_some());
    if o.sets.is_empty() && !single_extremal {
        let mut cfg = CampaignConfig::new(o.p.unwrap_or(0));
        if !matches!(id, Id::Ls | Id::ZCase) {
            cfg.p = need(o.p, "p")?;
        }
        cfg.seed = o.seed;
        cfg.instances = o.instances;
        cfg.exhaustive = o.exhaustive;
        cfg.budget = o.budget;
        cfg.cursor = o.cursor.as_deref().map(str::parse::<Cursor>).transpose()?;
        cfg.m = o.m.unwrap_or(0);
        cfg.k = o.k;
        cfg.bound = o.bound;
        if id == Id::AtomLayers {
            cfg.exhaustive = o.relaxed;
        }
        return Ok(run_campaign(id, &cfg)?);
    }
    let pair = || residue_sets(o, 2);
    let one = || residue_sets(o, 1).map(|mut s| s.remove(0));
    let v = match id {
        Id::Cd => pair().and_then(|s| Ok(v::check_cauchy_davenport(&s[0], &s[1])?))?,
        Id::Vosper => pair().and_then(|s| Ok(v::classify_vosper(&s[0], &s[1])?))?,
        Id::Hr => pair().and_then(|s| Ok(v::check_hr(&s[0], &s[1])?))?,
        Id::Main => pair().and_then(|s| Ok(v::check_main(&s[0], &s[1])?))?,
        Id::Conjecture => pair().and_then(|s| Ok(v::check_conjecture_pair(&s[0], &s[1], o.m.unwrap_or(0))?))?,
        Id::SmallSets => pair().and_then(|s| Ok(v::check_small_sets(&s[0], &s[1])?))?,
        Id::TwoComponents => pair().and_then(|s| Ok(v::check_two_components(&s[0], &s[1])?))?,
        Id::Trace => pair().and_then(|s| Ok(v::trace_main_proof(&s[0], &s[1])?))?,
        Id::Transfer => {
            let s = pair()?;
            let r = o.r.map(|r| s[0].modulus().reduce(r)).unwrap_or(1);
            v::check_compression_transfer_with(&s[0], &s[1], r)?
        }
        Id::UniqueSum => pair().and_then(|s| Ok(v::check_unique_sum(&s[0], &s[1])?))?,
        Id::Ls => integer_sets(o).map(|z| v::check_lev_smeliansky(&z[0], &z[1]))?,
        Id::ZCase => integer_sets(o).map(|z| v::check_z_case(&z[0], &z[1]))?,
        Id::Duality => critpair::isoperimetry::check_duality(&one()?, need(o.k, "k")?)?,
        Id::Intersection => critpair::isoperimetry::check_intersection(&one()?, need(o.k, "k")?, 1 << 24)?,
        Id::TwoAtom => critpair::isoperimetry::check_two_atom_structure(&one()?)?,
        Id::AtomBound => critpair::isoperimetry::check_atom_size_bound(&one()?, need(o.k, "k")?)?,
        Id::SmallAtoms => critpair::isoperimetry::check_small_atoms(&one()?)?,
        Id::UniqueAtom => v::check_unique_atom(&one()?, need(o.k, "k")?)?,
        Id::AffineHalf => v::check_affine_half(&one()?)?,
        Id::AtomLayers => pair().and_then(|s| Ok(check_atom_layer_laws(&s[0], &s[1], o.relaxed)?))?,
        Id::LemmaNu | Id::Balance => {
            let s = pair()?;
            let dec = decompose(&s[0], &s[1], None)?;
            if id == Id::Balance { check_balance(&dec) } else { check_lemma_nu(&dec) }
        }
        Id::Extremal => {
            let inst = v::make_extremal(need(o.m, "m")?, need(o.j, "j")?, need(o.p, "p")?)?;
            v::check_extremal(&inst)
        }
        Id::AtomSize => return Err(usage("atom-size is only checked inside a trace")),
    };
    Ok(v)
}
