use std::fmt::Write as _;
use std::process::ExitCode;

use cfhankel::algebra::{Rational, DEFAULT_PRIME};
use cfhankel::bench::{bench_single, chain_sequence_mod_p, BenchRow};
use cfhankel::cf::{build_chain, detect_period, Chain};
use cfhankel::genfunc::{Family, GFKind};
use cfhankel::guess::{
    baseline_identities, check_cigler_conjectures, check_degree_tables, class_structure, evaluate,
    expected_class_degrees, fit_scale_factors, g_general_identities, guess_class, named_identities, HankelTable,
    IdentityReport,
};
use cfhankel::identities::verify_appendix;
use cfhankel::oracle::{hankel_naive, HankelValue, Mode};
use cfhankel::range::IndexRange;
use cfhankel::Error;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "cfhankel", version, about = "Hankel determinants of Catalan powers by continued-fraction transformations")]
struct Cli {
    /// Worker threads for independent jobs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Method {
    Chain,
    Bareiss,
    Modp,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Emit {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Suite {
    All,
    Theorems,
    Conjectures,
    Appendix,
}

#[derive(clap::Args)]
struct Target {
    /// F = C(x)^r, G = C(x)^r / sqrt(1-4x).
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    r: u32,
}

impl Target {
    fn kind(&self) -> GFKind {
        GFKind::new(self.family, self.r)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Hankel determinants H_n for an index range.
    Hankel {
        #[command(flatten)]
        target: Target,
        /// Index or inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        n: IndexRange,
        #[arg(long, value_enum, default_value = "chain")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, value_enum, default_value = "plain")]
        emit: Emit,
        /// Also run the elimination oracle and compare.
        #[arg(long)]
        cross_check: bool,
    },
    /// Transformation steps of the continued-fraction chain as JSON.
    Chain {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 40)]
        steps: usize,
        #[arg(long)]
        detect_period: bool,
        /// Include the functional equation after every step.
        #[arg(long)]
        fes: bool,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Polynomial fit of a residue class, the degree row, or scale factors in the period number.
    Guess {
        #[command(flatten)]
        target: Target,
        #[arg(long, conflicts_with_all = ["degrees", "in_p"])]
        class: Option<usize>,
        #[arg(long, conflicts_with = "in_p")]
        degrees: bool,
        #[arg(long)]
        in_p: bool,
        /// Points held back for verification.
        #[arg(long, default_value_t = 3)]
        verify: usize,
        /// Chain length for --in-p.
        #[arg(long, default_value_t = 80)]
        steps: usize,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Check closed forms, conjectured patterns and the polynomial identities.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 13)]
        r_max: u32,
        #[arg(long, default_value_t = 20)]
        n_max: i64,
        #[arg(long, default_value_t = 30)]
        t_max: u32,
        #[arg(long, value_enum, default_value = "plain")]
        emit: Emit,
    },
    /// Time the chain against elimination mod p; CSV n,method,seconds,checksum.
    Bench {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_parser = parse_range)]
        n: IndexRange,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<IndexRange, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure with its exit code: 1 for mismatches and computation errors, 2 for usage.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(1, e.to_string())
    }
}

type Out = Result<String, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn check_kind(kind: GFKind) -> Result<(), Fail> {
    if kind.family == Family::F && kind.r == 0 {
        return Err(usage("F requires r >= 1"));
    }
    Ok(())
}

fn exact_chain_values(kind: GFKind, n: usize) -> Result<Vec<Rational>, Fail> {
    match kind.fe() {
        Ok(fe) => Ok(Chain::new(fe).hankel_sequence_grow(n)?),
        Err(_) => Err(usage(format!("{kind} has no quadratic functional equation; use --method bareiss"))),
    }
}

fn cmd_hankel(kind: GFKind, range: IndexRange, method: Method, prime: u64, emit: Emit, cross: bool) -> Out {
    check_kind(kind)?;
    if method == Method::Modp && !is_prime(prime) {
        return Err(usage(format!("--prime {prime} is not prime")));
    }
    let values: Vec<HankelValue> = match method {
        Method::Chain => {
            let seq = exact_chain_values(kind, range.end)?;
            range.iter().map(|n| HankelValue::Exact(seq[n].clone())).collect()
        }
        Method::Bareiss => range.iter().collect::<Vec<_>>().par_iter().map(|&n| hankel_naive(kind, n, Mode::Exact)).collect(),
        Method::Modp => range.iter().collect::<Vec<_>>().par_iter().map(|&n| hankel_naive(kind, n, Mode::Mod(prime))).collect(),
    };
    if cross {
        let other: Vec<HankelValue> = match method {
            Method::Chain => range.iter().collect::<Vec<_>>().par_iter().map(|&n| hankel_naive(kind, n, Mode::Exact)).collect(),
            Method::Bareiss => {
                let seq = exact_chain_values(kind, range.end)?;
                range.iter().map(|n| HankelValue::Exact(seq[n].clone())).collect()
            }
            Method::Modp => {
                let (seq, _) = chain_sequence_mod_p(kind, range.end, prime)?;
                range.iter().map(|n| HankelValue::Mod(seq[n])).collect()
            }
        };
        if let Some((n, (a, b))) = range.iter().zip(values.iter().zip(&other)).find(|(_, (a, b))| a != b) {
            return Err(Fail(1, format!("cross-check mismatch at n={n}: {a} vs {b}")));
        }
    }
    let mname = match method {
        Method::Chain => "chain",
        Method::Bareiss => "bareiss",
        Method::Modp => "modp",
    };
    Ok(match emit {
        Emit::Plain => {
            let vals: Vec<String> = values.iter().map(ToString::to_string).collect();
            format!("{kind} {mname}: {}\n", vals.join(","))
        }
        Emit::Json => {
            let vals: Vec<Value> = range
                .iter()
                .zip(&values)
                .map(|(n, v)| json!({"n": n, "value": v}))
                .collect();
            let prime = (method == Method::Modp).then_some(prime);
            let doc = json!({
                "schema": SCHEMA, "family": kind.family.to_string(), "r": kind.r, "method": mname,
                "prime": prime, "cross_checked": cross, "values": vals,
            });
            format!("{doc}\n")
        }
        Emit::Csv => {
            let mut s = String::from("schema,n,method,value\n");
            for (n, v) in range.iter().zip(&values) {
                let _ = writeln!(s, "{SCHEMA},{n},{mname},{v}");
            }
            s
        }
    })
}

fn cmd_chain(kind: GFKind, steps: usize, period: bool, fes: bool, emit: Emit) -> Out {
    check_kind(kind)?;
    let fe = kind.fe().map_err(|e| usage(e.to_string()))?;
    let chain = build_chain(fe, steps)?;
    let report = if period { Some(detect_period(&chain)?) } else { None };
    Ok(match emit {
        Emit::Json => {
            let mut doc = json!({"schema": SCHEMA, "family": kind.family.to_string(), "r": kind.r,
                "chain": chain.to_json_value(fes)});
            if let Some(rep) = &report {
                doc["period"] = serde_json::to_value(rep).expect("report serializes");
            }
            format!("{doc}\n")
        }
        Emit::Plain | Emit::Csv => {
            let mut s = String::new();
            for (i, (step, fe)) in chain.steps.iter().enumerate() {
                let _ = writeln!(s, "{i}\t{step:?}\td={} k={} u={} v={}", fe.d, fe.k, fe.u, fe.v);
            }
            if let Some(rep) = &report {
                let _ = writeln!(
                    s,
                    "period order {} pre-period {} index drop {} pure {}",
                    rep.order, rep.pre_period, rep.index_drop_per_period, rep.pure
                );
            }
            s
        }
    })
}

fn cmd_guess(kind: GFKind, class: Option<usize>, degrees: bool, in_p: bool, verify: usize, steps: usize, emit: Emit) -> Out {
    check_kind(kind)?;
    if kind.fe().is_err() {
        return Err(usage(format!("{kind} has no quadratic functional equation")));
    }
    let head = || json!({"schema": SCHEMA, "family": kind.family.to_string(), "r": kind.r});
    if degrees {
        let rep = check_degree_tables(kind)?;
        let text = match emit {
            Emit::Json => {
                let mut doc = head();
                doc["report"] = serde_json::to_value(&rep).expect("report serializes");
                format!("{doc}\n")
            }
            _ => {
                let row: Vec<String> = rep.fitted().iter().map(|d| d.map_or("0*".into(), |d| d.to_string())).collect();
                format!("{kind} mod {} sign {}: {}\n", rep.modulus, rep.sign, row.join(" "))
            }
        };
        return if rep.passed() { Ok(text) } else { Err(Fail(1, format!("{text}degree pattern mismatch"))) };
    }
    if in_p {
        let chain = build_chain(kind.fe()?, steps)?;
        let rep = detect_period(&chain)?;
        let fits = fit_scale_factors(&chain, &rep, verify)?;
        return Ok(match emit {
            Emit::Json => {
                let mut doc = head();
                doc["period"] = serde_json::to_value(&rep).expect("report serializes");
                doc["scale_factors"] = serde_json::to_value(&fits).expect("fits serialize");
                format!("{doc}\n")
            }
            _ => fits.iter().map(|f| format!("position {}: u0(p) = {}\n", f.position, f.formula())).collect(),
        });
    }
    let Some(j) = class else {
        return Err(usage("guess needs one of --class, --degrees, --in-p"));
    };
    let (m, _) = class_structure(kind);
    if j >= m {
        return Err(usage(format!("class {j} out of range for modulus {m}")));
    }
    let expected = expected_class_degrees(kind).0[j];
    let count = expected.map_or(2, |d| d + 2) + verify;
    let g = guess_class(kind, j, count, verify)?;
    Ok(match emit {
        Emit::Json => {
            let mut doc = head();
            doc["class"] = json!(j);
            doc["modulus"] = json!(m);
            doc["result"] = serde_json::to_value(&g).expect("guess serializes");
            format!("{doc}\n")
        }
        _ => {
            let idx = if j == 0 { format!("{m}n") } else { format!("{m}n+{j}") };
            format!("H_{{{idx}}}({kind}) = {}\n", g.formula())
        }
    })
}

#[derive(serde::Serialize)]
struct Line {
    group: &'static str,
    id: String,
    asserted: bool,
    passed: bool,
    detail: String,
}

fn identity_lines(group: &'static str, reps: Vec<IdentityReport>) -> Vec<Line> {
    reps.into_iter()
        .map(|r| Line {
            group,
            passed: r.passed(),
            detail: match r.first_failure {
                Some(n) => format!("fails at n={n}"),
                None => format!("{} values", r.checked),
            },
            id: r.id,
            asserted: r.asserted,
        })
        .collect()
}

fn suite_theorems(r_max: u32, n_max: i64) -> Result<Vec<Line>, Fail> {
    let mut ids: Vec<_> = named_identities().into_iter().chain(baseline_identities()).collect();
    ids.extend((1..=r_max).flat_map(g_general_identities));
    ids.retain(|i| i.primary_kind().r <= r_max);
    let mut kinds: Vec<GFKind> = ids.iter().map(|i| i.primary_kind()).collect();
    kinds.sort();
    kinds.dedup();
    let reps: Vec<Vec<IdentityReport>> = kinds
        .par_iter()
        .map(|k| {
            let mine: Vec<_> = ids.iter().filter(|i| i.primary_kind() == *k).cloned().collect();
            evaluate(&mine, &mut HankelTable::new(), n_max)
        })
        .collect::<Result<_, _>>()?;
    Ok(identity_lines("theorems", reps.into_iter().flatten().collect()))
}

fn suite_conjectures(r_max: u32, n_max: i64) -> Result<Vec<Line>, Fail> {
    let cig: Vec<Vec<IdentityReport>> = (2..=r_max)
        .into_par_iter()
        .map(|r| {
            let mut table = HankelTable::new();
            check_cigler_conjectures(r, n_max, &mut table)
        })
        .collect::<Result<_, _>>()?;
    let mut lines = identity_lines("conjectures", cig.into_iter().flatten().collect());
    let kinds: Vec<GFKind> = (3..=r_max).map(GFKind::f).chain((2..=r_max).map(GFKind::g)).collect();
    let reps = kinds.par_iter().map(|&k| check_degree_tables(k)).collect::<Result<Vec<_>, _>>()?;
    for rep in reps {
        let row: Vec<String> = rep.fitted().iter().map(|d| d.map_or("0*".into(), |d| d.to_string())).collect();
        lines.push(Line {
            group: "degrees",
            id: format!("degree pattern {}", rep.kind),
            asserted: true,
            passed: rep.passed(),
            detail: row.join(" "),
        });
    }
    Ok(lines)
}

fn suite_appendix(t_max: u32) -> Result<Vec<Line>, Fail> {
    let rep = verify_appendix(t_max)?;
    let mut lines = vec![Line {
        group: "appendix",
        id: format!("polynomial identities and coefficient sums, t <= {t_max}"),
        asserted: true,
        passed: rep.passed(),
        detail: format!("{} checks", rep.checks),
    }];
    lines.extend(rep.failures.into_iter().map(|f| Line { group: "appendix", id: f, asserted: true, passed: false, detail: String::new() }));
    Ok(lines)
}

fn cmd_verify(suite: Suite, r_max: u32, n_max: i64, t_max: u32, emit: Emit) -> Out {
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    let mut lines = Vec::new();
    if matches!(suite, Suite::All | Suite::Theorems) {
        lines.extend(suite_theorems(r_max, n_max)?);
    }
    if matches!(suite, Suite::All | Suite::Conjectures) {
        lines.extend(suite_conjectures(r_max, n_max)?);
    }
    if matches!(suite, Suite::All | Suite::Appendix) {
        lines.extend(suite_appendix(t_max)?);
    }
    let ok = lines.iter().all(|l| l.passed || !l.asserted);
    let text = match emit {
        Emit::Json => format!("{}\n", json!({"schema": SCHEMA, "passed": ok, "results": lines})),
        Emit::Csv => {
            let mut s = String::from("schema,group,id,asserted,passed,detail\n");
            for l in &lines {
                let _ = writeln!(s, "{SCHEMA},{},\"{}\",{},{},\"{}\"", l.group, l.id, l.asserted, l.passed, l.detail);
            }
            s
        }
        Emit::Plain => {
            let mut s = String::new();
            for l in &lines {
                let tag = match (l.asserted, l.passed) {
                    (true, true) => "PASS",
                    (true, false) => "FAIL",
                    (false, true) => "INFO holds",
                    (false, false) => "INFO fails",
                };
                let _ = writeln!(s, "{tag} {} ({})", l.id, l.detail);
            }
            let _ = writeln!(s, "{}", if ok { "PASS" } else { "FAIL" });
            s
        }
    };
    if ok {
        Ok(text)
    } else {
        Err(Fail(1, text))
    }
}

fn cmd_bench(kind: GFKind, range: IndexRange, prime: u64) -> Out {
    check_kind(kind)?;
    if !is_prime(prime) {
        return Err(usage(format!("--prime {prime} is not prime")));
    }
    if kind.fe().is_err() {
        return Err(usage(format!("{kind} has no quadratic functional equation")));
    }
    let mut s = format!("{}\n", BenchRow::CSV_HEADER);
    for n in range.iter() {
        let rows = bench_single(kind, n, prime)?;
        for row in &rows {
            s.push_str(&row.to_csv());
            s.push('\n');
        }
        if rows[0].checksum != rows[1].checksum {
            return Err(Fail(1, format!("{s}checksum mismatch at n={n}")));
        }
    }
    Ok(s)
}

fn run(cli: Cli) -> Out {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(usage("--jobs must be positive"));
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    match cli.cmd {
        Cmd::Hankel { target, n, method, prime, emit, cross_check } => {
            cmd_hankel(target.kind(), n, method, prime, emit, cross_check)
        }
        Cmd::Chain { target, steps, detect_period, fes, emit } => cmd_chain(target.kind(), steps, detect_period, fes, emit),
        Cmd::Guess { target, class, degrees, in_p, verify, steps, emit } => {
            cmd_guess(target.kind(), class, degrees, in_p, verify, steps, emit)
        }
        Cmd::Verify { suite, r_max, n_max, t_max, emit } => cmd_verify(suite, r_max, n_max, t_max, emit),
        Cmd::Bench { target, n, prime } => cmd_bench(target.kind(), n, prime),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Fail(code, msg)) => {
            if code == 1 && msg.ends_with('\n') {
                print!("{msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
