//! `asai`: L-factors, mirabolic periods and verification suites from JSON
//! representation descriptors.

mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use asai_core::exact::{parse_rational, AlgNum};
use asai_core::json::{gauss_json, parse_rep, parse_rep_desc, ratfunc_to_json, report_to_json, segments_report, value_to_json};
use asai_core::lfactor::{asai_factors, lstar, rs_factors};
use asai_core::period::verify_theorem1;
use asai_core::{Error, GenericRep};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "asai", version, about = "Exact local Asai L-factors and mirabolic periods")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Asai L-factor of π_u, and the Rankin–Selberg factor against a second rep.
    Lfactor(Common),
    /// Mirabolic period series, its closed form and the value at s = 1.
    Period(Common),
    /// Run a verification suite on a descriptor or on the built-in corpus.
    Verify(VerifyArgs),
    /// Segment predicates: genericity, standard order, π_u, conductor.
    Segments(Common),
}

#[derive(Args)]
struct Common {
    /// Representation descriptor (JSON).
    #[arg(long)]
    rep: PathBuf,
    /// Second descriptor, for Rankin–Selberg factors.
    #[arg(long)]
    against: Option<PathBuf>,
    /// Truncation order of lattice sums.
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Evaluate at this s (an integer or half-integer) besides s = 1.
    #[arg(long)]
    at_s: Option<String>,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Representation descriptor; the built-in corpus is used when omitted.
    #[arg(long)]
    rep: Option<PathBuf>,
    #[arg(long)]
    against: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Tolerance of the float partial-sum cross-check.
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    /// Order of the float partial sums.
    #[arg(long, default_value_t = 60)]
    float_order: u32,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Suite {
    Theorem1,
    Cpi,
    Multiplicativity,
    Identities,
    All,
}

/// A failure with its exit code.
pub(crate) struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotGeneric(..) => 3,
            _ => 2,
        };
        Fail { code, msg: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail { code: 2, msg: format!("{}: {e}", path.display()) })
}

pub(crate) fn load(path: &Path) -> Result<GenericRep, Fail> {
    Ok(parse_rep(&read(path)?)?)
}

fn print(output: Output, v: &Value, table: impl FnOnce() -> String) {
    match output {
        Output::Json => println!("{v}"),
        Output::Table => print!("{}", table()),
    }
}

/// Plain-text form of a serialized value: `"p/1"` prints as `p`.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.strip_suffix("/1").unwrap_or(s).to_string(),
        other => other.to_string(),
    }
}

fn cmd_lfactor(c: &Common) -> Result<(), Fail> {
    let rep = load(&c.rep)?;
    let pi_u = rep.pi_u();
    let asai = asai_factors(&pi_u);
    let mut v = json!({
        "piU": pi_u.satake().iter().map(gauss_json).collect::<Vec<_>>(),
        "asai": ratfunc_to_json(&asai.ratfunc()),
        "asaiFactored": asai.to_string(),
    });
    let mut rs_line = None;
    if let Some(p) = &c.against {
        let other = load(p)?;
        if other.field() != rep.field() {
            return Err(Fail { code: 2, msg: "--against uses a different field pair".into() });
        }
        let rs = rs_factors(&pi_u, &other.pi_u());
        v["rankinSelberg"] = ratfunc_to_json(&rs.ratfunc());
        v["rankinSelbergFactored"] = json!(rs.to_string());
        rs_line = Some(rs.to_string());
    }
    print(c.output, &v, || {
        let mut s = format!("L(s, π_u, As)   = {asai}\n");
        if let Some(r) = rs_line {
            s += &format!("L(s, π_u × π'_u) = {r}\n");
        }
        s
    });
    Ok(())
}

/// `t = q_F^{-s}` for integer or half-integer `s`.
fn t_at(q: u64, s: &str) -> Result<AlgNum, Fail> {
    let r = parse_rational(s).map_err(Fail::from)?;
    let two_s = &r * num_rational::BigRational::from_integer(2.into());
    if !two_s.is_integer() || two_s.abs() > num_rational::BigRational::from_integer(10_000.into()) {
        return Err(Fail { code: 2, msg: format!("--at-s {s}: expected an integer or half-integer") });
    }
    let k: i64 = two_s.to_integer().try_into().unwrap();
    Ok(AlgNum::q_half_power(q, -k))
}

fn cmd_period(c: &Common) -> Result<(), Fail> {
    let rep = load(&c.rep)?;
    let report = verify_theorem1(&rep, c.order as usize)?;
    let mut v = report_to_json(&report);
    let mut at_s_text = None;
    if let Some(s) = &c.at_s {
        let t = t_at(rep.field().q_f(), s)?;
        v["atS"] = json!(s);
        let at = match lstar(&rep).eval_alg(&t) {
            Ok(x) => Some(x),
            Err(Error::PoleAtEvaluation) => None,
            Err(e) => return Err(e.into()),
        };
        v["valueAtS"] = at.as_ref().map(value_to_json).unwrap_or_else(|| json!("pole"));
        at_s_text = Some(at.map(|x| x.to_string()).unwrap_or_else(|| "pole".into()));
    }
    print(c.output, &v, || {
        let coeffs: Vec<String> = report.series.coeffs().iter().take(6).map(|x| x.to_string()).collect();
        let mut s = format!("series          = {} + …\n", coeffs.join(", "));
        s += &format!("closed form     = {}\n", report.closed_form);
        s += &format!(
            "reconstructed   = {}\n",
            report.reconstructed.as_ref().map(|f| f.to_string()).unwrap_or_else(|| "failed".into())
        );
        s += &format!("match           = {}\n", report.matched);
        s += &format!("L*(1, π, As)    = {}\n", plain(&v["valueAt1"]));
        if let Some(x) = at_s_text {
            s += &format!("L*(s, π, As)    = {x} at s = {}\n", plain(&v["atS"]));
        }
        s
    });
    Ok(())
}

fn cmd_segments(c: &Common) -> Result<(), Fail> {
    let desc = parse_rep_desc(&read(&c.rep)?)?;
    let (fp, segs) = desc.parts()?;
    let v = segments_report(&fp, &segs)?;
    print(c.output, &v, || {
        let mut s = String::new();
        for (k, x) in v.as_object().unwrap() {
            s += &format!("{k:<24} {}\n", plain(x));
        }
        s
    });
    if v["generic"] == json!(false) {
        return Err(Fail { code: 3, msg: "not generic".into() });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.command {
        Command::Lfactor(c) => cmd_lfactor(&c),
        Command::Period(c) => cmd_period(&c),
        Command::Segments(c) => cmd_segments(&c),
        Command::Verify(v) => verify::cmd_verify(&verify::Config {
            rep: v.rep,
            against: v.against,
            suite: v.suite,
            order: v.order as usize,
            tolerance: v.tolerance,
            float_order: v.float_order as usize,
            table: v.output == Output::Table,
        }),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
