use std::io::Read;
use std::path::Path;

use knotforms::arith::{char_poly_int, cyclotomic_decomposition};
use knotforms::brieskorn::{germ_report, BrieskornGerm, GermReport};
use knotforms::cobordism::{algebraically_cobordant, null_cobordance_obstructions, CobordismVerdict, EpsForm};
use knotforms::links::{handle_data, Framings};
use knotforms::quadratic::{karl, levine_congruence_check, signature, SymmetricForm};
use knotforms::seifert::{is_quasi_unipotent, Normalization, SeifertMatrix};
use knotforms::sphere_groups::{bp_class, im_j_order, BpClass, ExceptionTable, GroupKind};
use knotforms::{Int, IntMatrix};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::matrix_file::{self, ParseError};
use crate::report::{Format, Report, Value};

const RANK_WARN: usize = 4096;
const RANK_REFUSE: usize = 65536;
const RANK_ENV: &str = "KNOTFORMS_RANK_LIMIT";
/// Matrices above this rank are summarised rather than printed.
const PRINT_LIMIT: usize = 16;
const GROUPS_MAX_N: u32 = 2000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] knotforms::Error),
    #[error("{0}")]
    Usage(String),
}

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

type CliResult<T> = Result<T, CliError>;

fn display_path(path: &str) -> String {
    if path == "-" { "<stdin>".to_string() } else { path.to_string() }
}

fn read_input(path: &str) -> CliResult<String> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut s)).map(|_| ())
    };
    res.map_err(|e| CliError::Io { path: display_path(path), message: e.to_string() })?;
    Ok(s)
}

fn load(path: &str) -> CliResult<SeifertMatrix> {
    let src = read_input(path)?;
    let s = matrix_file::parse(&src).map_err(|source| CliError::Parse { path: display_path(path), source })?;
    rank_guard(&BigUint::from(s.rank()))?;
    Ok(s)
}

fn rank_limit() -> CliResult<usize> {
    match std::env::var(RANK_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{RANK_ENV} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(RANK_REFUSE),
    }
}

fn rank_guard(rank: &BigUint) -> CliResult<()> {
    let limit = rank_limit()?;
    if *rank > BigUint::from(limit) {
        return Err(CliError::Usage(format!("rank {rank} exceeds the limit {limit}; set {RANK_ENV} to raise it")));
    }
    if *rank > BigUint::from(RANK_WARN) {
        eprintln!("warning: rank {rank} is large; exact computation may be slow");
    }
    Ok(())
}

fn matrix_value(m: &IntMatrix) -> Value {
    if m.rows() > PRINT_LIMIT {
        Value::Text(format!("omitted (rank {} > {PRINT_LIMIT})", m.rows()))
    } else {
        Value::Matrix(m.clone())
    }
}

fn unavailable(e: impl std::fmt::Display) -> Value {
    Value::Text(format!("unavailable: {e}"))
}

fn cyclotomic_list(factors: &[(u64, usize)]) -> Value {
    Value::List(
        factors
            .iter()
            .map(|&(n, m)| if m == 1 { format!("Phi_{n}") } else { format!("Phi_{n}^{m}") })
            .collect(),
    )
}

pub fn bp_text(c: &BpClass) -> String {
    match c {
        BpClass::Signature { dimension, sigma_over_8, order, residue, .. } => {
            let bp = dimension + 1;
            if order.is_one() {
                format!("trivial (bP^{bp} = 0), sigma/8 = {sigma_over_8}")
            } else if residue.is_zero() {
                format!("standard sphere (0 mod {order}), sigma/8 = {sigma_over_8}")
            } else if residue.gcd(order).is_one() {
                format!("generator (mod {order}), sigma/8 = {sigma_over_8}")
            } else {
                format!("{residue} (mod {order}), sigma/8 = {sigma_over_8}")
            }
        }
        BpClass::Karl { dimension, karl, group, exotic, caution } => {
            let bp = dimension + 1;
            match exotic {
                Some(true) => format!("exotic Σ^{dimension} (KARL = 1 in bP^{bp} = {})", group.kind),
                Some(false) if *caution => {
                    format!("standard sphere (bP^{bp} trivial since {}; KARL = {karl})", group.provenance)
                }
                Some(false) => format!("standard sphere (KARL = 0 in bP^{bp} = {})", group.kind),
                None => format!("undetermined (bP^{bp} unknown since {}; KARL = {karl})", group.provenance),
            }
        }
    }
}

fn seifert_report(s: &SeifertMatrix) -> Report {
    let mut r = Report::new();
    r.push("q", Value::Int(Int::from(s.q()))).push("rank", Value::Int(Int::from(s.rank())));
    if s.rank() == 0 {
        r.text("unknot", "all invariants trivial");
        return r;
    }
    r.push("seifert_matrix", matrix_value(s.matrix()))
        .push("epsilon", Value::Int(Int::from(s.epsilon())))
        .push("intersection_form", matrix_value(&s.intersection_form()))
        .push("intersection_det", Value::Int(s.intersection_det()))
        .push("unimodular", Value::Bool(s.is_unimodular()))
        .push("fibered", Value::Bool(s.is_fibered_form()));

    match s.integral_monodromy() {
        Ok(h) => {
            let cp = char_poly_int(&h).expect("square");
            let cyc = cyclotomic_decomposition(&cp);
            r.push("monodromy", matrix_value(&h))
                .text("char_poly", cp.to_string())
                .push("quasi_unipotent", Value::Bool(cyc.is_some()));
            if let Some(f) = cyc {
                r.push("cyclotomic_factors", cyclotomic_list(&f));
            }
        }
        Err(_) => match s.monodromy() {
            Ok(h) => {
                let qu = is_quasi_unipotent(&h).expect("square");
                r.text("monodromy", format!("rational, not integral (det A = {})", s.matrix().det().expect("square")))
                    .push("quasi_unipotent", Value::Bool(qu));
            }
            Err(e) => {
                r.push("monodromy", unavailable(e));
            }
        },
    }

    r.text("alexander_raw", s.alexander_polynomial(Normalization::Raw).expect("square").to_string());
    match s.alexander_polynomial(Normalization::Conway) {
        Ok(d) => r.text("alexander_conway", d.to_string()),
        Err(e) => r.push("alexander_conway", unavailable(e)),
    };
    let module = s.knot_module();
    r.push("elementary_divisors", Value::List(module.divisors.iter().map(ToString::to_string).collect()))
        .push("type_k", Value::Bool(s.is_type_k()));

    if s.q() % 2 == 0 {
        let sig = SymmetricForm::new(s.intersection_form()).map(|f| signature(&f));
        r.push("signature", sig.map_or_else(unavailable, |v| Value::Int(Int::from(v))));
    } else {
        r.push("karl", karl(s).map_or_else(unavailable, |k| Value::Int(Int::from(k))));
    }
    r.push_labeled("bp_class", "bP class", bp_class(s).map_or_else(unavailable, |c| Value::Text(bp_text(&c))));
    if s.q() % 2 == 1 {
        let lev = match levine_congruence_check(s) {
            Ok(c) => Value::Text(format!(
                "{} (Δ(-1) = {}, 1 + 4·KARL = {})",
                if c.holds { "holds" } else { "FAILS" },
                c.delta_at_minus_one,
                1 + 4 * c.karl
            )),
            Err(e) => unavailable(e),
        };
        r.push("levine_congruence", lev);
    }
    r
}

pub fn invariants(files: &[String], jobs: usize, format: Format) -> CliResult<Outcome> {
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    if files.iter().filter(|f| *f == "-").count() > 1 {
        return Err(CliError::Usage("stdin (`-`) may be given at most once".into()));
    }
    let run = |f: &String| load(f).map(|s| seifert_report(&s));
    let reports: Vec<CliResult<Report>> = if jobs == 1 {
        files.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
        pool.install(|| files.par_iter().map(run).collect())
    };
    let reports: Vec<Report> = reports.into_iter().collect::<CliResult<_>>()?;

    if reports.len() == 1 {
        return Ok(Outcome::ok(reports[0].render(format)));
    }
    let out = match format {
        Format::Text => files
            .iter()
            .zip(&reports)
            .map(|(f, r)| format!("== {} ==\n{}", display_path(f), r.render(format)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Machine => {
            let docs: Vec<serde_json::Value> = files
                .iter()
                .zip(&reports)
                .map(|(f, r)| serde_json::json!({ "file": display_path(f), "report": r.to_json() }))
                .collect();
            let mut s = serde_json::to_string_pretty(&docs).expect("serializable");
            s.push('\n');
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn germ_document(g: &GermReport) -> Report {
    let mut r = Report::new();
    r.text("germ", g.germ.to_string())
        .push("q", Value::Int(Int::from(g.q)))
        .push("milnor_number", Value::Int(Int::from(g.germ.milnor_number())))
        .push("rank", Value::Int(Int::from(g.rank)))
        .push("seifert_matrix", matrix_value(g.seifert.matrix()))
        .push("fibered", Value::Bool(g.fibered));
    if let Some(h) = &g.monodromy {
        r.push("monodromy", matrix_value(h));
    }
    if let Some(cp) = &g.char_poly {
        r.text("char_poly", cp.to_string());
    }
    if let Some(f) = &g.cyclotomic_factors {
        r.push("cyclotomic_factors", cyclotomic_list(f));
    }
    if let Some(qu) = g.quasi_unipotent {
        r.push("quasi_unipotent", Value::Bool(qu));
    }
    r.push("intersection_form", matrix_value(&g.intersection_form))
        .push("intersection_det", Value::Int(g.intersection_det.clone()))
        .push("unimodular", Value::Bool(g.unimodular))
        .text("alexander_raw", g.alexander_raw.to_string());
    match &g.alexander_conway {
        Some(d) => r.text("alexander_conway", d.to_string()),
        None => r.push("alexander_conway", unavailable("Δ(1) ≠ ±1")),
    };
    if let Some(s) = g.signature {
        r.push("signature", Value::Int(Int::from(s)));
    }
    if let Some(k) = g.karl {
        r.push("karl", Value::Int(Int::from(k)));
    }
    match (&g.suspended_bp_class, &g.bp_class) {
        (Some(c), _) => {
            let mut exps = g.germ.exponents().to_vec();
            exps.extend([2, 2]);
            let via = BrieskornGerm::new(exps).expect("valid exponents");
            r.push_labeled("bp_class", "bP class", Value::Text(bp_text(c))).push_labeled(
                "bp_class_via",
                "bP class via",
                Value::Text(format!("double suspension {via}, boundary dimension {}", c.dimension())),
            );
        }
        (None, Some(c)) => {
            r.push_labeled("bp_class", "bP class", Value::Text(bp_text(c)));
        }
        (None, None) => {
            r.push_labeled("bp_class", "bP class", unavailable("intersection form is not unimodular"));
        }
    }
    r.push("anomalies", Value::List(g.anomalies.clone()));
    r
}

pub fn brieskorn(exponents: Vec<u32>, emit: Option<&Path>, format: Format) -> CliResult<Outcome> {
    let germ = BrieskornGerm::new(exponents)?;
    rank_guard(&germ.milnor_number())?;
    let report = germ_report(&germ);
    let out = germ_document(&report).render(format);
    if let Some(path) = emit {
        std::fs::write(path, matrix_file::render(&report.seifert))
            .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    }
    Ok(Outcome::ok(out))
}

pub fn cobordant(a: &str, b: &str, bound: u32, format: Format) -> CliResult<Outcome> {
    let (sa, sb) = (load(a)?, load(b)?);
    if sa.q() % 2 != sb.q() % 2 {
        return Err(CliError::Usage(format!(
            "q parity mismatch: {} has q = {}, {} has q = {}",
            display_path(a),
            sa.q(),
            display_path(b),
            sb.q()
        )));
    }
    let (fa, fb) = (EpsForm::try_from(&sa)?, EpsForm::try_from(&sb)?);
    let checks = null_cobordance_obstructions(&fa.minus(&fb)?)?;
    let verdict = algebraically_cobordant(&fa, &fb, bound)?;

    let mut r = Report::new();
    let code = match &verdict {
        CobordismVerdict::Cobordant(w) => {
            r.text("verdict", "cobordant").text("witness", w.to_string());
            0
        }
        CobordismVerdict::NotCobordant(c) => {
            r.text("verdict", "not cobordant")
                .text("obstruction", format!("{} fails", c.name))
                .text("certificate", c.certificate.clone());
            1
        }
        CobordismVerdict::Unknown { bound } => {
            r.text("verdict", "unknown")
                .text("search", format!("no metaboliser with entries bounded by {bound}"));
            3
        }
    };
    let lines = checks
        .checks
        .iter()
        .map(|c| format!("{} {} ({})", c.name, if c.passed { "passes" } else { "fails" }, c.certificate))
        .collect();
    r.push("checks", Value::List(lines));
    Ok(Outcome { stdout: r.render(format), code })
}

fn parse_range(s: &str) -> CliResult<(u32, u32)> {
    let bad = || CliError::Usage(format!("invalid range `{s}`; expected `N` or `A..B`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    if hi > GROUPS_MAX_N {
        return Err(CliError::Usage(format!("range end {hi} exceeds {GROUPS_MAX_N}")));
    }
    Ok((lo, hi))
}

pub fn groups(range: &str, resolved_126: bool, format: Format) -> CliResult<Outcome> {
    let (lo, hi) = parse_range(range)?;
    let table = if resolved_126 { ExceptionTable::with_dimension_126_resolved() } else { ExceptionTable::classical() };
    let mut rows = Vec::new();
    for n in lo..=hi {
        let v = table.embeddable_spheres_group(n);
        let group = match v.kind {
            GroupKind::Trivial if n % 2 == 0 => "trivial (even n)".to_string(),
            GroupKind::Trivial if n <= 4 => "trivial (n <= 4)".to_string(),
            GroupKind::Trivial => "trivial (exceptional)".to_string(),
            ref k => k.to_string(),
        };
        let bp = if n % 2 == 1 { v.order().map_or("unknown".to_string(), |o| o.to_string()) } else { "-".into() };
        let im_j = if n % 4 == 3 { im_j_order((n + 1) / 4)?.to_string() } else { "-".into() };
        rows.push(vec![
            n.to_string(),
            group,
            bp,
            im_j,
            v.generator.clone().unwrap_or_else(|| "-".into()),
            v.provenance.clone(),
        ]);
    }
    let mut r = Report::new();
    r.push(
        "groups",
        Value::Table { headers: vec!["n", "G^n", "|bP^{n+1}|", "|Im J|", "generator", "provenance"], rows },
    );
    Ok(Outcome::ok(r.render(format)))
}

pub fn handles(path: &str, format: Format) -> CliResult<Outcome> {
    let s = load(path)?;
    let h = handle_data(&s);
    let mut r = Report::new();
    r.push("q", Value::Int(Int::from(s.q()))).push("rank", Value::Int(Int::from(h.rank)));
    let rows = h
        .linking
        .iter()
        .map(|(i, j, l)| vec![format!("K_{}", i + 1), format!("K_{}", j + 1), l.to_string()])
        .collect();
    r.push("linking", Value::Table { headers: vec!["i", "j", "L(K_i, K_j)"], rows });
    match &h.framings {
        Framings::Integer(e) => {
            r.text("framing_kind", "Euler numbers 2·a_jj")
                .push("framings", Value::List(e.iter().map(ToString::to_string).collect()));
        }
        Framings::Mod2(e) => {
            r.text("framing_kind", "mod 2 obstructions a_jj mod 2")
                .push("framings", Value::List(e.iter().map(ToString::to_string).collect()));
        }
        Framings::None => {
            r.text("framing_kind", "none (q in {1, 3, 7})");
        }
    }
    Ok(Outcome::ok(r.render(format)))
}
