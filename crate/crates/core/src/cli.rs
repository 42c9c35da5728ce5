//! The `periplectiq` command-line driver.
//!
//! Every command produces a [`Report`]: a JSON value (byte-stable for fixed
//! arguments), a text rendering, and a pass/fail flag. Timing and matrix-size
//! telemetry go to stderr only.

use crate::error::{Error, Result};
use crate::modtools::{
    contraction_image_analysis, direct_sum_certificate, maximal_vectors, splitness_report, summand_name, symmetrizer_summands,
    ContractionAnalysis, DirectSumCertificate, SplitnessReport, Submodule,
};
use crate::qbrauer::{Brauer, ContractionPattern, Convention, StandardTableau};
use crate::relcheck::{run_suite, Status, Suite, SuiteOptions, SuiteReport};
use crate::superlinalg::{Subspace, SuperVector, VectorJson};
use crate::tensorrep::{CharacterEntry, TensorModule, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use std::fmt::Write as _;
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "periplectiq", version, about = "Exact checks for U_q(p_n) acting on tensor powers of its natural module")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the defining relations, lemmas and classical limit on V⊗k.
    Relations {
        #[command(flatten)]
        common: Common,
        /// Suites to run (repeatable); defaults to the presentation suites.
        #[arg(long = "suite", value_name = "SUITE")]
        suites: Vec<Suite>,
    },
    /// Maximal vectors of V⊗k against the contraction/symmetrizer candidates.
    Maximal {
        #[command(flatten)]
        common: Common,
    },
    /// Direct-sum certificate and splitness verdict for each symmetrizer summand.
    Decompose {
        #[command(flatten)]
        common: Common,
    },
    /// Weight multiplicities of V⊗k.
    Character {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Rank, 2 ≤ n ≤ 4.
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
    pub n: u8,
    /// Tensor power, 1 ≤ k ≤ 4.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub k: u8,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Run the deliberately broken variant of each check.
    #[arg(long)]
    pub mutate: bool,
    /// Tableau such as `12,3` or `[[1,2],[3]]`.
    #[arg(long)]
    pub tableau: Option<String>,
    /// Contraction pairs such as `1-3` or `[[1,3]]`; empty for none.
    #[arg(long)]
    pub pattern: Option<String>,
    /// Composition order for σ_{r,s}: rtl or ltr.
    #[arg(long, default_value = "rtl", value_parser = parse_convention)]
    pub convention: Convention,
}

impl Common {
    fn n(&self) -> usize {
        self.n as usize
    }
    fn k(&self) -> usize {
        self.k as usize
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn parse_convention(s: &str) -> std::result::Result<Convention, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `12,3` (one digit per entry) or JSON rows.
pub fn parse_tableau(s: &str) -> Result<StandardTableau> {
    let s = s.trim();
    let rows: Vec<Vec<usize>> = if s.starts_with('[') {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("tableau {s:?}: {e}")))?
    } else {
        s.split(',')
            .map(|r| r.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("tableau {s:?}")))).collect())
            .collect::<Result<_>>()?
    };
    StandardTableau::new(rows)
}

/// Parses `1-3,2-4` or JSON pairs.
pub fn parse_pattern(s: &str, k: usize) -> Result<ContractionPattern> {
    let s = s.trim();
    let pairs: Vec<(usize, usize)> = if s.starts_with('[') {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("pattern {s:?}: {e}")))?
    } else if s.is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|p| {
                let (a, b) = p.split_once('-').ok_or_else(|| Error::Parse(format!("pattern pair {p:?}")))?;
                let num = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("pattern pair {p:?}")));
                Ok((num(a)?, num(b)?))
            })
            .collect::<Result<_>>()?
    };
    ContractionPattern::new(pairs, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub kind: String,
    pub message: String,
}

impl Warning {
    fn new(kind: &str, message: impl Into<String>) -> Self {
        Self { kind: kind.into(), message: message.into() }
    }
}

/// The outcome of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            EXIT_OK
        } else {
            EXIT_FAILURE
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("reports serialize") + "\n",
            Format::Text => self.text.clone(),
        }
    }
}

/// Errors that are the caller's fault rather than a failed verification.
fn is_usage(e: &Error) -> bool {
    matches!(e, Error::Parse(_) | Error::PatternError(_) | Error::ShapeError(_))
}

pub fn fmt_weight(w: &[i32]) -> String {
    let mut out = String::new();
    for (j, &c) in w.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        write!(out, "{sign}{mag}ε{}", j + 1).unwrap();
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn fmt_vector(v: &SuperVector) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(i, c)| {
            let t: Vec<String> = v.basis.tuple(i).iter().map(|a| a.to_string()).collect();
            format!("({c})·u[{}]", t.join(","))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

// relations

const PRESENTATION: [Suite; 5] = [Suite::Exprel, Suite::DjRelations, Suite::LemmaAlg, Suite::DividedPowers, Suite::Classical];

#[derive(Serialize)]
struct RelationsJson<'a> {
    command: &'static str,
    n: usize,
    k: usize,
    mutated: bool,
    ok: bool,
    warnings: &'a [Warning],
    suites: &'a [SuiteReport],
}

pub fn cmd_relations(c: &Common, suites: &[Suite]) -> Result<Report> {
    let suites = if suites.is_empty() { PRESENTATION.to_vec() } else { suites.to_vec() };
    let opts = SuiteOptions { mutate: c.mutate, ..SuiteOptions::default() };
    let mut reports = Vec::new();
    let mut warnings = Vec::new();
    let mut text = String::new();
    for s in suites {
        let (r, tel) = run_suite(s, c.n(), c.k(), &opts)?;
        eprintln!("[{s}] {tel}");
        writeln!(text, "{s} n={} k={}: {} pass, {} fail, {} ambiguous", r.n, r.k, r.passed, r.failed, r.ambiguous).unwrap();
        for case in &r.cases {
            match case.status {
                Status::Pass => {}
                Status::Ambiguous => {
                    let msg = format!("{s}/{}: printed form fails, reading {:?} passes", case.case_id, case.reading);
                    writeln!(text, "  warning: {msg}").unwrap();
                    warnings.push(Warning::new("ambiguous-reading", msg));
                }
                Status::Fail => {
                    let note = case.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
                    writeln!(text, "  FAIL {} residual nnz {}{note}", case.case_id, case.residual_nnz).unwrap();
                }
            }
        }
        for o in &r.identifications {
            let verdict = if o.failing_cases.is_empty() { "passes".to_string() } else { format!("fails {}", o.failing_cases.join(", ")) };
            writeln!(text, "  identification {}: {verdict}", o.identification).unwrap();
        }
        reports.push(r);
    }
    let ok = reports.iter().all(|r| r.failed == 0);
    writeln!(text, "{}", if ok { "all relations hold" } else { "verification FAILED" }).unwrap();
    let json = serde_json::to_value(RelationsJson { command: "relations", n: c.n(), k: c.k(), mutated: c.mutate, ok, warnings: &warnings, suites: &reports })
        .expect("reports serialize");
    Ok(Report { json, text, ok })
}

// maximal

#[derive(Serialize)]
struct MaximalLine {
    weight: Weight,
    dim: usize,
    vectors: Vec<VectorJson>,
}

#[derive(Serialize)]
struct CandidateJson {
    pattern: ContractionPattern,
    tableau: StandardTableau,
    weight: Option<Weight>,
    nonzero: bool,
    maximal: bool,
    vector: VectorJson,
}

#[derive(Serialize)]
struct MaximalJson {
    command: &'static str,
    n: usize,
    k: usize,
    convention: Convention,
    ok: bool,
    kernel_dim: usize,
    profile: Vec<MaximalLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    candidates_span_kernel: Option<bool>,
    candidates: Vec<CandidateJson>,
    warnings: Vec<Warning>,
}

pub fn cmd_maximal(c: &Common) -> Result<Report> {
    let (n, k) = (c.n(), c.k());
    let t0 = Instant::now();
    let m = TensorModule::new(n, k)?;
    let br = Brauer::new(n, k);
    let profile = maximal_vectors(&Subspace::full(m.basis), &m);
    let kernel: Vec<SuperVector> = profile.iter().flat_map(|x| x.vectors.iter().cloned()).collect();
    let kernel_space = Subspace::from_vectors(m.basis, &kernel);
    let mut warnings = Vec::new();

    let labels: Vec<(ContractionPattern, StandardTableau)> = match (&c.tableau, &c.pattern) {
        (None, None) if n >= k => br.candidate_labels(),
        (None, None) => {
            warnings.push(Warning::new("no-candidates", format!("candidate list applies when n ≥ k; got n = {n}, k = {k}")));
            Vec::new()
        }
        (t, p) => {
            let p = p.as_deref().map(|s| parse_pattern(s, k)).transpose()?.unwrap_or_default();
            let t = match t {
                Some(t) => parse_tableau(t)?,
                None => {
                    let used: Vec<usize> = p.pairs.iter().flat_map(|(r, s)| [*r, *s]).collect();
                    StandardTableau::new(vec![(1..=k).filter(|x| !used.contains(x)).collect()])?
                }
            };
            vec![(p, t)]
        }
    };
    let raising = m.raising();
    let mut candidates = Vec::new();
    for (p, t) in labels {
        match br.maximal_candidate(&t, &p, c.convention) {
            Ok(v) => {
                let maximal = raising.iter().all(|x| x.apply(&v).map(|w| w.is_zero()).unwrap_or(false));
                candidates.push(CandidateJson { weight: v.weight(), nonzero: !v.is_zero(), maximal, vector: v.to_json(), pattern: p, tableau: t });
            }
            Err(Error::SymmetrizerDegenerate(msg)) => warnings.push(Warning::new("symmetrizer-degenerate", format!("tableau {}: {msg}", t.label()))),
            Err(e) => return Err(e),
        }
    }
    let all_maximal = candidates.iter().all(|x| x.maximal && x.nonzero);
    let span = if c.tableau.is_none() && c.pattern.is_none() && n >= k {
        let vs: Vec<SuperVector> = candidates.iter().map(|x| SuperVector::from_json(&x.vector)).collect::<Result<_>>()?;
        let cand = Subspace::from_vectors(m.basis, &vs);
        Some(cand.dim() == kernel_space.dim() && kernel_space.contains_subspace(&cand))
    } else {
        None
    };
    let ok = all_maximal && span.unwrap_or(true);
    eprintln!("[maximal] {:.3}s, dim {}, kernel {}", t0.elapsed().as_secs_f64(), m.dim(), kernel_space.dim());

    let mut text = String::new();
    writeln!(text, "maximal vectors of V⊗{k}, n = {n}: kernel dimension {}", kernel_space.dim()).unwrap();
    for x in &profile {
        for v in &x.vectors {
            writeln!(text, "  weight {}: {}", fmt_weight(&x.weight), fmt_vector(v)).unwrap();
        }
    }
    for x in &candidates {
        let v = SuperVector::from_json(&x.vector)?;
        let w = x.weight.as_deref().map(fmt_weight).unwrap_or_else(|| "mixed".into());
        let status = if x.maximal && x.nonzero { "maximal" } else if !x.nonzero { "ZERO" } else { "NOT maximal" };
        let tl = if x.tableau.rows.is_empty() { "∅".to_string() } else { x.tableau.label() };
        writeln!(text, "  candidate pattern {:?} tableau {tl}: weight {w}, {status}", x.pattern.pairs).unwrap();
        writeln!(text, "    {}", fmt_vector(&v)).unwrap();
    }
    if let Some(s) = span {
        writeln!(text, "candidates span the kernel: {}", if s { "yes" } else { "NO" }).unwrap();
    }
    for w in &warnings {
        writeln!(text, "warning [{}]: {}", w.kind, w.message).unwrap();
    }
    let json = MaximalJson {
        command: "maximal",
        n,
        k,
        convention: c.convention,
        ok,
        kernel_dim: kernel_space.dim(),
        profile: profile.iter().map(|x| MaximalLine { weight: x.weight.clone(), dim: x.vectors.len(), vectors: x.vectors.iter().map(|v| v.to_json()).collect() }).collect(),
        candidates_span_kernel: span,
        candidates,
        warnings,
    };
    Ok(Report { json: serde_json::to_value(json).expect("reports serialize"), text, ok })
}

// decompose

#[derive(Serialize)]
struct IsomorphicPair {
    a: String,
    b: String,
    rank: usize,
    maximal_weights: Vec<Weight>,
}

#[derive(Serialize)]
struct DecomposeJson {
    command: &'static str,
    n: usize,
    k: usize,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<DirectSumCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_failure: Option<String>,
    summands: Vec<SplitnessReport>,
    isomorphic_candidates: Vec<IsomorphicPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contraction: Option<ContractionAnalysis>,
    warnings: Vec<Warning>,
}

pub fn cmd_decompose(c: &Common) -> Result<Report> {
    let (n, k) = (c.n(), c.k());
    if k == 1 {
        return Err(Error::ShapeError("decompose needs k ≥ 2".into()));
    }
    let t0 = Instant::now();
    let mut warnings = Vec::new();
    let mut text = String::new();
    if k == 4 {
        let a = contraction_image_analysis(n, k, c.convention)?;
        eprintln!("[decompose] {:.3}s, contraction analysis on V⊗{k}", t0.elapsed().as_secs_f64());
        for img in &a.images {
            writeln!(text, "c_{{{},{}}}V⊗{k}: rank {}, invariant {}, intertwines {}", img.r, img.s, img.rank, img.invariant, img.intertwines).unwrap();
            for s in &img.summands {
                writeln!(text, "  {}: rank {}, {}", s.summand, s.rank, s.verdict).unwrap();
            }
        }
        writeln!(text, "{}", a.reason).unwrap();
        let ok = a.images.iter().all(|i| i.invariant && i.intertwines);
        let json = DecomposeJson {
            command: "decompose",
            n,
            k,
            ok,
            certificate: None,
            certificate_failure: None,
            summands: Vec::new(),
            isomorphic_candidates: Vec::new(),
            contraction: Some(a),
            warnings,
        };
        return Ok(Report { json: serde_json::to_value(json).expect("reports serialize"), text, ok });
    }

    let m = TensorModule::new(n, k)?;
    let br = Brauer::new(n, k);
    let entries: Vec<usize> = (1..=k).collect();
    for t in StandardTableau::all_on(&entries).into_iter().filter(|t| t.rows.len() > n) {
        warnings.push(Warning::new("symmetrizer-degenerate", format!("{} omitted: {} rows exceed n = {n}", summand_name(&t), t.rows.len())));
    }
    let ys = symmetrizer_summands(&br)?;
    let named: Vec<(String, _)> = ys.iter().map(|(t, y)| (summand_name(t), y.clone())).collect();
    let (certificate, certificate_failure) = match direct_sum_certificate(&named, &m) {
        Ok(cert) => (Some(cert), None),
        Err(Error::CertificateFailure(msg)) => (None, Some(msg)),
        Err(e) => return Err(e),
    };
    let mut summands = Vec::new();
    for (name, y) in &named {
        match Submodule::image(&m, y, name.clone()) {
            Ok(s) => summands.push(splitness_report(&s)),
            Err(Error::CertificateFailure(msg)) => warnings.push(Warning::new("not-invariant", msg)),
            Err(e) => return Err(e),
        }
    }
    let mut iso = Vec::new();
    for (a, x) in summands.iter().enumerate() {
        for y in &summands[a + 1..] {
            if x.rank == y.rank && x.maximal_weights == y.maximal_weights && x.verdict == y.verdict {
                iso.push(IsomorphicPair { a: x.summand.clone(), b: y.summand.clone(), rank: x.rank, maximal_weights: x.maximal_weights.clone() });
            }
        }
    }
    eprintln!("[decompose] {:.3}s, dim {}, {} summands", t0.elapsed().as_secs_f64(), m.dim(), summands.len());

    let ok = certificate.is_some();
    match (&certificate, &certificate_failure) {
        (Some(cert), _) => writeln!(text, "V⊗{k} (n = {n}) = {}, ranks {:?} sum to {}", cert.summands.join(" ⊕ "), cert.ranks, cert.total).unwrap(),
        (_, Some(msg)) => writeln!(text, "direct-sum certificate FAILED: {msg}").unwrap(),
        _ => unreachable!(),
    }
    for s in &summands {
        let ws: Vec<String> = s.maximal_weights.iter().map(|w| fmt_weight(w)).collect();
        writeln!(text, "  {}: rank {}, maximal weights [{}], {}", s.summand, s.rank, ws.join(", "), s.verdict).unwrap();
    }
    for p in &iso {
        writeln!(text, "  {} ≅ {} (rank {}, same maximal profile)", p.a, p.b, p.rank).unwrap();
    }
    for w in &warnings {
        writeln!(text, "warning [{}]: {}", w.kind, w.message).unwrap();
    }
    let json = DecomposeJson { command: "decompose", n, k, ok, certificate, certificate_failure, summands, isomorphic_candidates: iso, contraction: None, warnings };
    Ok(Report { json: serde_json::to_value(json).expect("reports serialize"), text, ok })
}

// character

#[derive(Serialize)]
struct CharacterJson {
    command: &'static str,
    n: usize,
    k: usize,
    dim: usize,
    weights: Vec<CharacterEntry>,
}

pub fn cmd_character(c: &Common) -> Result<Report> {
    let m = TensorModule::new(c.n(), c.k())?;
    let weights = m.character();
    let mut text = String::new();
    writeln!(text, "character of V⊗{} (n = {}), dim {}", c.k, c.n, m.dim()).unwrap();
    for e in &weights {
        writeln!(text, "  {:>12}  {}", fmt_weight(&e.weight), e.multiplicity).unwrap();
    }
    let json = CharacterJson { command: "character", n: c.n(), k: c.k(), dim: m.dim(), weights };
    Ok(Report { json: serde_json::to_value(json).expect("reports serialize"), text, ok: true })
}

pub fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Relations { common, suites } => cmd_relations(common, suites),
        Command::Maximal { common } => cmd_maximal(common),
        Command::Decompose { common } => cmd_decompose(common),
        Command::Character { common } => cmd_character(common),
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Relations { common, .. } | Command::Maximal { common } | Command::Decompose { common } | Command::Character { common } => common,
    }
}

/// Caps the global worker pool from `PERIPLECTIQ_THREADS`.
pub fn init_threads() {
    if let Some(t) = std::env::var("PERIPLECTIQ_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()).filter(|&t| t > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
}

/// Parses `args`, runs the command and writes the report; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    init_threads();
    let c = common(&cli.command);
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) if is_usage(&e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    let out = report.render(c.format);
    match &c.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_FAILURE;
            }
        }
        None => print!("{out}"),
    }
    report.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_text() {
        assert_eq!(fmt_weight(&[2, 0]), "2ε1");
        assert_eq!(fmt_weight(&[1, -1, 0]), "ε1-ε2");
        assert_eq!(fmt_weight(&[0, 0]), "0");
        assert_eq!(fmt_weight(&[0, -3]), "-3ε2");
    }

    #[test]
    fn tableau_and_pattern_syntax() {
        assert_eq!(parse_tableau("12,3").unwrap().rows, vec![vec![1, 2], vec![3]]);
        assert_eq!(parse_tableau("[[1,3],[2]]").unwrap().rows, vec![vec![1, 3], vec![2]]);
        assert!(parse_tableau("21").is_err());
        assert!(parse_tableau("1x").is_err());
        assert_eq!(parse_pattern("1-3", 3).unwrap().pairs, vec![(1, 3)]);
        assert_eq!(parse_pattern("[[1,2],[3,4]]", 4).unwrap().pairs, vec![(1, 2), (3, 4)]);
        assert!(parse_pattern("", 2).unwrap().pairs.is_empty());
        assert!(parse_pattern("2-1", 2).is_err());
        assert!(parse_pattern("1-2,2-3", 3).is_err());
    }

    #[test]
    fn flag_bounds_are_usage_errors() {
        for args in [
            vec!["p", "relations", "--n", "1"],
            vec!["p", "relations", "--n", "5"],
            vec!["p", "character", "--n", "2", "--k", "5"],
            vec!["p", "maximal", "--n", "2", "--convention", "up"],
            vec!["p", "character", "--n", "2", "--format", "xml"],
            vec!["p", "frobnicate"],
        ] {
            assert!(Cli::try_parse_from(&args).is_err(), "{args:?}");
        }
        assert_eq!(main_with_args(["p", "relations", "--n", "1"]), EXIT_USAGE);
        assert_eq!(main_with_args(["p", "maximal", "--n", "2", "--k", "2", "--tableau", "1x", "--format", "json"]), EXIT_USAGE);
        assert_eq!(main_with_args(["p", "decompose", "--n", "2", "--k", "1"]), EXIT_USAGE);
    }

    fn common(n: u8, k: u8) -> Common {
        Common { n, k, format: Format::Json, out: None, mutate: false, tableau: None, pattern: None, convention: Convention::default() }
    }

    #[test]
    fn character_n2_k1() {
        let r = cmd_character(&common(2, 1)).unwrap();
        let ws = r.json["weights"].as_array().unwrap();
        assert_eq!(ws.len(), 4);
        assert!(ws.iter().all(|w| w["multiplicity"] == 1));
    }

    #[test]
    fn degenerate_tableau_is_a_warning() {
        let mut c = common(2, 3);
        c.tableau = Some("1,2,3".into());
        let r = cmd_maximal(&c).unwrap();
        assert!(r.ok);
        assert_eq!(r.json["warnings"][0]["kind"], "symmetrizer-degenerate");
        assert!(r.json["candidates"].as_array().unwrap().is_empty());
    }

    #[test]
    fn single_candidate_from_flags() {
        let mut c = common(2, 2);
        c.pattern = Some("1-2".into());
        c.tableau = Some("[]".into());
        let r = cmd_maximal(&c).unwrap();
        let cand = &r.json["candidates"][0];
        assert_eq!(cand["weight"], serde_json::json!([0, 0]));
        assert_eq!(cand["maximal"], true);
    }
}
