//! Command-line front end.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 a closed form disagreed
//! with the dimension oracle, 4 a hypothesis (pure gap) failed.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::agcode::{build_code, min_weight_exhaustive, pure_gap_bound, DEFAULT_WEIGHT_CAP};
use crate::curve::{enumerate_points, GkParams, DEFAULT_MAX_N};
use crate::error::Error;
use crate::rrspace::{DimOracle, Divisor};
use crate::wsemi::{
    classify, gamma_closed_form, gamma_from_box, lub_closure, membership_oracle,
    pure_gap_alpha_criterion, pure_gap_family_k, pure_gaps_in_box, semigroup_box, PoleVector,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;

/// Largest box scanned when enumerating pure gaps with the oracle.
const PURE_GAP_SCAN_LIMIT: usize = 2_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "gkws",
    version,
    about = "Weierstrass semigroups, pure gaps and AG codes on the GK curve",
    after_help = "Verification defaults to `both` for n = 2 and `targeted` otherwise \
                  (closed form plus per-tuple oracle checks); full boxes for n >= 3 are large."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest n accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_N, global = true)]
    pub max_n: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verify {
    /// Closed forms only.
    Closed,
    /// Closed forms plus oracle checks of each emitted tuple.
    Targeted,
    /// Oracle box computation only.
    Oracle,
    /// Closed forms and the full oracle box, compared.
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    /// Curve parameter n (a prime power).
    #[arg(long)]
    pub n: u64,
}

#[derive(Args, Debug, Clone)]
pub struct BoxArgs {
    #[arg(long)]
    pub n: u64,
    /// Number of points P_1..P_m besides P_inf.
    #[arg(long)]
    pub m: usize,
    /// Box bound T (default 2g - 1).
    #[arg(long)]
    pub bound: Option<u32>,
    #[arg(long, value_enum)]
    pub verify: Option<Verify>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate rational points and the orbit of P_inf.
    Points(CurveArgs),
    /// Riemann-Roch dimension of a divisor given as {"inf": int, "pj": [ints]}.
    Dim {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        divisor: String,
    },
    /// Minimal generating set Gamma(P_inf, P_1, .., P_m).
    Gamma(BoxArgs),
    /// Semigroup H(P_inf, P_1, .., P_m) inside [0, T]^(m+1).
    Semigroup(BoxArgs),
    /// Gap set inside [0, T]^(m+1).
    Gaps(BoxArgs),
    /// Pure gaps: oracle search and the closed-form families.
    Puregaps {
        #[command(flatten)]
        args: BoxArgs,
        /// Extra tuple to classify, e.g. 142,2,2,1 (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
    },
    /// Build C_L(D, G) and report code parameters.
    Code {
        #[arg(long)]
        n: u64,
        /// G as {"inf": int, "pj": [ints]}; derived from the pure-gap pair if omitted.
        #[arg(long = "g")]
        divisor: Option<String>,
        /// First pure gap of the pair.
        #[arg(long, requires = "beta")]
        alpha: Option<String>,
        /// Second pure gap of the pair.
        #[arg(long, requires = "alpha")]
        beta: Option<String>,
        /// Also compute the exact minimum distance of C_L when q^k <= cap.
        #[arg(long)]
        min_weight: bool,
        #[arg(long, default_value_t = DEFAULT_WEIGHT_CAP)]
        cap: u64,
        /// Write the generator matrix as CSV of field-element digit strings.
        #[arg(long)]
        dump_matrix: Option<std::path::PathBuf>,
    },
}

#[derive(Deserialize)]
struct DivisorSpec {
    inf: i64,
    #[serde(default)]
    pj: Vec<i64>,
}

/// Outcome of a subcommand: exit code and payload.
struct Outcome {
    code: i32,
    body: String,
}

enum Failure {
    Usage(String),
    Hypothesis(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPureGap(_) => Failure::Hypothesis(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.body.as_bytes());
            outcome.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Hypothesis(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_HYPOTHESIS
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Points(a) => cmd_points(&params(a.n, cli.max_n)?, fmt),
        Command::Dim { n, divisor } => cmd_dim(&params(*n, cli.max_n)?, divisor, fmt),
        Command::Gamma(a) => cmd_gamma(a, cli.max_n, fmt),
        Command::Semigroup(a) => cmd_semigroup(a, cli.max_n, fmt, false),
        Command::Gaps(a) => cmd_semigroup(a, cli.max_n, fmt, true),
        Command::Puregaps { args, checks } => cmd_puregaps(args, checks, cli.max_n, fmt),
        Command::Code {
            n,
            divisor,
            alpha,
            beta,
            min_weight,
            cap,
            dump_matrix,
        } => cmd_code(
            &params(*n, cli.max_n)?,
            divisor.as_deref(),
            alpha.as_deref().zip(beta.as_deref()),
            (*min_weight).then_some(*cap),
            dump_matrix.as_deref(),
            fmt,
        ),
    }
}

fn params(n: u64, max_n: u64) -> std::result::Result<GkParams, Failure> {
    Ok(GkParams::with_cap(n, max_n)?)
}

fn default_verify(n: u64) -> Verify {
    if n == 2 {
        Verify::Both
    } else {
        Verify::Targeted
    }
}

fn box_bound(args: &BoxArgs, p: &GkParams) -> u32 {
    args.bound.unwrap_or((2 * p.genus - 1) as u32)
}

fn parse_tuple(s: &str, len: usize) -> std::result::Result<PoleVector, Failure> {
    let v: PoleVector = s
        .parse()
        .map_err(|_| Failure::Usage(format!("malformed tuple `{s}`")))?;
    if v.len() != len {
        return Err(Failure::Usage(format!(
            "tuple `{s}` must have {len} entries"
        )));
    }
    Ok(v)
}

fn parse_divisor(s: &str, p: &GkParams) -> std::result::Result<Divisor, Failure> {
    let spec: DivisorSpec =
        serde_json::from_str(s).map_err(|e| Failure::Usage(format!("malformed divisor: {e}")))?;
    Ok(Divisor::new(p, spec.inf, &spec.pj)?)
}

fn divisor_json(d: &Divisor) -> Value {
    json!({ "inf": d.inf, "pj": d.pj })
}

fn tuples_json(vs: &[PoleVector]) -> Value {
    Value::Array(vs.iter().map(|v| json!(v.entries())).collect())
}

fn csv_header(m: usize) -> String {
    let mut cols = vec!["p_inf".to_string()];
    cols.extend((1..=m).map(|j| format!("p_{j}")));
    cols.join(",")
}

fn tuples_csv(m: usize, vs: &[PoleVector]) -> String {
    let mut s = csv_header(m);
    s.push('\n');
    for v in vs {
        let row: Vec<String> = v.entries().iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn ok(body: String) -> CmdResult {
    Ok(Outcome {
        code: EXIT_OK,
        body,
    })
}

fn cmd_points(p: &GkParams, fmt: Format) -> CmdResult {
    let pts = enumerate_points(p)?;
    let f = &p.field;
    let mut orbit = vec![("P_inf".to_string(), None)];
    for (j, pt) in pts.p_list.iter().enumerate() {
        orbit.push((format!("P_{}", j + 1), Some(*pt)));
    }
    for (l, pt) in pts.q_list.iter().enumerate() {
        orbit.push((format!("Q_{}", l + 1), Some(*pt)));
    }
    match fmt {
        Format::Json => {
            let orbit1: Vec<Value> = orbit
                .iter()
                .map(|(label, pt)| match pt {
                    None => json!({ "label": label }),
                    Some(pt) => json!({
                        "label": label,
                        "x": f.to_digit_string(pt.x),
                        "y": f.to_digit_string(pt.y),
                        "z": f.to_digit_string(pt.z),
                    }),
                })
                .collect();
            ok(render(json!({
                "schema": 1,
                "n": p.n,
                "total": pts.total(),
                "orbit1": orbit1,
                "counts": {
                    "p_inf": 1,
                    "p": pts.p_list.len(),
                    "q": pts.q_list.len(),
                    "orbit1": pts.orbit1_len(),
                    "others": pts.others.len(),
                },
            })))
        }
        Format::Csv => {
            let mut s = String::from("label,x,y,z\n");
            for (label, pt) in orbit {
                match pt {
                    None => writeln!(s, "{label},,,").unwrap(),
                    Some(pt) => writeln!(
                        s,
                        "{label},{},{},{}",
                        f.to_digit_string(pt.x),
                        f.to_digit_string(pt.y),
                        f.to_digit_string(pt.z)
                    )
                    .unwrap(),
                }
            }
            ok(s)
        }
    }
}

fn cmd_dim(p: &GkParams, spec: &str, fmt: Format) -> CmdResult {
    let g = parse_divisor(spec, p)?;
    let oracle = DimOracle::new(p.clone());
    let dim = oracle.dim(&g)?;
    match fmt {
        Format::Json => ok(render(json!({
            "schema": 1,
            "n": p.n,
            "divisor": divisor_json(&g),
            "dim": dim,
        }))),
        Format::Csv => ok(format!("dim\n{dim}\n")),
    }
}

fn cmd_gamma(args: &BoxArgs, max_n: u64, fmt: Format) -> CmdResult {
    let p = params(args.n, max_n)?;
    let verify = args.verify.unwrap_or(default_verify(p.n));
    let bound = box_bound(args, &p);
    let oracle = DimOracle::new(p.clone());

    let closed = match verify {
        Verify::Oracle => None,
        _ => Some(gamma_closed_form(&p, args.m)?),
    };
    let from_box = match verify {
        Verify::Oracle | Verify::Both => {
            let hbox = semigroup_box(&oracle, args.m, bound)?;
            Some(gamma_from_box(&hbox, p.genus)?)
        }
        _ => None,
    };

    let mut failures: Vec<PoleVector> = Vec::new();
    let (mut missing, mut extra) = (Vec::new(), Vec::new());
    let status = match (&closed, &from_box, verify) {
        (Some(c), Some(b), _) => {
            missing = b.iter().filter(|v| !c.contains(v)).cloned().collect();
            extra = c.iter().filter(|v| !b.contains(v)).cloned().collect();
            Some(missing.is_empty() && extra.is_empty())
        }
        (Some(c), None, Verify::Targeted) => {
            for v in c {
                if !is_gamma_element(&oracle, v)? {
                    failures.push(v.clone());
                }
            }
            Some(failures.is_empty())
        }
        _ => None,
    };
    let tuples = closed.as_ref().or(from_box.as_ref()).unwrap();
    let code = if status == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    let label = status.map(|s| if s { "MATCH" } else { "MISMATCH" });

    let body = match fmt {
        Format::Json => render(json!({
            "schema": 1,
            "n": p.n,
            "m": args.m,
            "verify": format!("{verify:?}").to_lowercase(),
            "count": tuples.len(),
            "gamma": tuples_json(tuples),
            "status": label,
            "missing_from_closed_form": tuples_json(&missing),
            "extra_in_closed_form": tuples_json(&extra),
            "failed_oracle_checks": tuples_json(&failures),
        })),
        Format::Csv => tuples_csv(args.m, tuples),
    };
    Ok(Outcome { code, body })
}

/// In `H` and a discrepancy for every pair of its points.
fn is_gamma_element(oracle: &DimOracle, v: &PoleVector) -> crate::Result<bool> {
    if !membership_oracle(oracle, v)? {
        return Ok(false);
    }
    let a = v.to_divisor(oracle.params())?;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if !oracle.is_discrepancy(&a, PoleVector::place(i), PoleVector::place(j))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cmd_semigroup(args: &BoxArgs, max_n: u64, fmt: Format, gaps: bool) -> CmdResult {
    let p = params(args.n, max_n)?;
    let verify = args.verify.unwrap_or(default_verify(p.n));
    let bound = box_bound(args, &p);
    let oracle = DimOracle::new(p.clone());
    let hbox = semigroup_box(&oracle, args.m, bound)?;

    let status =
        if matches!(verify, Verify::Both | Verify::Targeted) && bound >= (2 * p.genus - 1) as u32 {
            Some(lub_closure(&p, &hbox)? == hbox)
        } else {
            None
        };
    let tuples = if gaps {
        hbox.complement().members()
    } else {
        hbox.members()
    };
    let code = if status == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    let body = match fmt {
        Format::Json => render(json!({
            "schema": 1,
            "n": p.n,
            "m": args.m,
            "bound": bound,
            "kind": if gaps { "gaps" } else { "semigroup" },
            "count": tuples.len(),
            "tuples": tuples_json(&tuples),
            "lub_closure": status.map(|s| if s { "MATCH" } else { "MISMATCH" }),
        })),
        Format::Csv => tuples_csv(args.m, &tuples),
    };
    Ok(Outcome { code, body })
}

fn cmd_puregaps(args: &BoxArgs, checks: &[String], max_n: u64, fmt: Format) -> CmdResult {
    let p = params(args.n, max_n)?;
    let verify = args.verify.unwrap_or(default_verify(p.n));
    let bound = box_bound(args, &p);
    let m = args.m;
    if m < 1 || m as u64 > p.n {
        return Err(Error::MOutOfRange { m, n: p.n }.into());
    }
    let checks = checks
        .iter()
        .map(|s| parse_tuple(s, m + 1))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let oracle = DimOracle::new(p.clone());
    let use_oracle = verify != Verify::Closed;

    let volume = (bound as usize).checked_pow(m as u32 + 1);
    let scanned = if use_oracle && volume.is_some_and(|v| v <= PURE_GAP_SCAN_LIMIT) {
        Some(pure_gaps_in_box(&oracle, m, bound)?)
    } else {
        None
    };

    let mut mismatch = false;
    let mut fam_k = Vec::new();
    for k in 2..=p.a {
        let Ok(v) = pure_gap_family_k(&p, m, k) else {
            continue;
        };
        let verdict = if use_oracle {
            Some(classify(&oracle, &v)?.pure_gap)
        } else {
            None
        };
        mismatch |= verdict == Some(false);
        fam_k.push((k, v, verdict));
    }

    let mut fam_alpha = Vec::new();
    for alpha in 1..(2 * p.genus - 1) {
        if !pure_gap_alpha_criterion(&p, m, alpha)? {
            continue;
        }
        let mut entries = vec![alpha as u32];
        entries.extend(std::iter::repeat_n(1, m));
        let v = PoleVector::new(entries);
        // the family presumes (alpha, 1, .., 1) is a gap
        let verdict = if use_oracle {
            let c = classify(&oracle, &v)?;
            if c.in_semigroup {
                continue;
            }
            Some(c.pure_gap)
        } else {
            None
        };
        mismatch |= verdict == Some(false);
        fam_alpha.push((alpha, v, verdict));
    }

    let check_verdicts = checks
        .iter()
        .map(|v| classify(&oracle, v))
        .collect::<crate::Result<Vec<_>>>()?;

    let code = if mismatch { EXIT_MISMATCH } else { EXIT_OK };
    let body = match fmt {
        Format::Json => render(json!({
            "schema": 1,
            "n": p.n,
            "m": m,
            "bound": bound,
            "oracle": scanned.as_ref().map(|v| tuples_json(v)),
            "family_k": fam_k.iter().map(|(k, v, ok)| json!({
                "k": k, "tuple": v.entries(), "pure_gap": ok,
            })).collect::<Vec<_>>(),
            "family_alpha": fam_alpha.iter().map(|(a, v, ok)| json!({
                "alpha": a, "tuple": v.entries(), "pure_gap": ok,
            })).collect::<Vec<_>>(),
            "checks": check_verdicts,
            "status": if !use_oracle { None } else if mismatch { Some("MISMATCH") } else { Some("MATCH") },
        })),
        Format::Csv => {
            let mut s = format!("section,{},pure_gap\n", csv_header(m));
            let verdict = |o: Option<bool>| o.map_or(String::new(), |b| b.to_string());
            let row = |v: &PoleVector| {
                v.entries()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            for v in scanned.iter().flatten() {
                writeln!(s, "oracle,{},true", row(v)).unwrap();
            }
            for (_, v, ok) in &fam_k {
                writeln!(s, "family_k,{},{}", row(v), verdict(*ok)).unwrap();
            }
            for (_, v, ok) in &fam_alpha {
                writeln!(s, "family_alpha,{},{}", row(v), verdict(*ok)).unwrap();
            }
            for c in &check_verdicts {
                writeln!(s, "check,{},{}", row(&c.tuple), c.pure_gap).unwrap();
            }
            s
        }
    };
    Ok(Outcome { code, body })
}

fn cmd_code(
    p: &GkParams,
    divisor: Option<&str>,
    pair: Option<(&str, &str)>,
    min_weight_cap: Option<u64>,
    dump: Option<&std::path::Path>,
    fmt: Format,
) -> CmdResult {
    let oracle = DimOracle::new(p.clone());
    let pair = pair
        .map(|(a, b)| -> std::result::Result<_, Failure> {
            let a: PoleVector = a
                .parse()
                .map_err(|_| Failure::Usage(format!("malformed tuple `{a}`")))?;
            let b: PoleVector = b
                .parse()
                .map_err(|_| Failure::Usage(format!("malformed tuple `{b}`")))?;
            Ok((a, b))
        })
        .transpose()?;
    let from_pair = match &pair {
        Some((a, b)) => Some(pure_gap_bound(&oracle, a, b)?),
        None => None,
    };
    let g = match (divisor, &from_pair) {
        (Some(s), Some((gp, _))) => {
            let g = parse_divisor(s, p)?;
            if &g != gp {
                return Err(Failure::Usage(format!(
                    "G = {g} differs from the divisor {gp} built from the pure-gap pair"
                )));
            }
            g
        }
        (Some(s), None) => parse_divisor(s, p)?,
        (None, Some((gp, _))) => gp.clone(),
        (None, None) => {
            return Err(Failure::Usage(
                "either --g or --alpha/--beta is required".into(),
            ))
        }
    };

    let points = enumerate_points(p)?;
    let (gm, mut summary) = build_code(&oracle, &points, &g)?;
    summary.puregap_d_omega = from_pair.as_ref().map(|(_, b)| *b);
    let min_weight = min_weight_cap.map(|cap| min_weight_exhaustive(&gm.matrix, &p.field, cap));

    if let Some(path) = dump {
        let mut s = String::new();
        for row in gm.matrix.iter_rows() {
            let cells: Vec<String> = row.iter().map(|&v| p.field.to_digit_string(v)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        std::fs::write(path, s).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }

    let body = match fmt {
        Format::Json => {
            let mut v = serde_json::to_value(&summary).expect("serializable");
            let obj = v.as_object_mut().unwrap();
            obj.insert("schema".into(), json!(1));
            obj.insert("n".into(), json!(p.n));
            obj.insert("divisor".into(), divisor_json(&g));
            if let Some(mw) = min_weight {
                obj.insert("min_weight".into(), json!(mw));
            }
            render(v)
        }
        Format::Csv => {
            let v = serde_json::to_value(&summary).expect("serializable");
            let obj = v.as_object().unwrap();
            let keys: Vec<&String> = obj.keys().collect();
            let vals: Vec<String> = obj
                .values()
                .map(|x| {
                    if x.is_null() {
                        String::new()
                    } else {
                        x.to_string()
                    }
                })
                .collect();
            format!(
                "{}\n{}\n",
                keys.iter()
                    .map(|k| k.as_str())
                    .collect::<Vec<_>>()
                    .join(","),
                vals.join(",")
            )
        }
    };
    ok(body)
}
