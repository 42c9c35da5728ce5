//! Exact verification of relation families on `V⊗k`.
//!
//! Relations are data: each case carries one or more readings, each an
//! expression (or a matrix computation) whose value must vanish. The first
//! reading is the printed one. A case whose printed reading fails but some
//! later reading passes is reported as `ambiguous`, naming the passing reading.

mod centralizer;
mod classical;
mod coproduct;
mod dj;
pub mod expr;
mod frt;

pub use classical::Identification;
pub use expr::{Evaluator, Expr};

use crate::error::{Error, Result};
use crate::superlinalg::{SuperMatrix, TensorBasis};
use crate::tensorrep::TensorModule;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

/// Residual entries listed per failing case.
pub const RESIDUAL_LIMIT: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Exchange relations among the `t_ij`.
    Exprel,
    /// Drinfeld–Jimbo defining relations.
    DjRelations,
    /// Derived relations among `e, f, ē, f̄, F̄`.
    LemmaAlg,
    /// Commutation of generators with divided powers.
    DividedPowers,
    /// Specialization at `q = 1`.
    Classical,
    /// Dictionary, comultiplication and coassociativity.
    Coproduct,
    /// Brauer operators, Hecke relations and Young symmetrizers.
    Centralizer,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Exprel,
        Suite::DjRelations,
        Suite::LemmaAlg,
        Suite::DividedPowers,
        Suite::Classical,
        Suite::Coproduct,
        Suite::Centralizer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exprel => "exprel",
            Suite::DjRelations => "dj-relations",
            Suite::LemmaAlg => "lemma-alg",
            Suite::DividedPowers => "divided-powers",
            Suite::Classical => "classical",
            Suite::Coproduct => "coproduct",
            Suite::Centralizer => "centralizer",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Ambiguous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualEntry {
    pub row: Vec<i32>,
    pub col: Vec<i32>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case_id: String,
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub status: Status,
    pub reading: String,
    pub residual_nnz: usize,
    pub residual_nonzero_entries: Vec<ResidualEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Outcome of one identification candidate in the classical suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentificationOutcome {
    pub identification: String,
    pub failing_cases: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub k: usize,
    pub mutated: bool,
    pub passed: usize,
    pub failed: usize,
    pub ambiguous: usize,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub identifications: Vec<IdentificationOutcome>,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.case_id == id)
    }

    pub(crate) fn from_cases(suite: Suite, n: usize, k: usize, mutated: bool, cases: Vec<CaseReport>) -> Self {
        let count = |s| cases.iter().filter(|c| c.status == s).count();
        Self {
            suite,
            n,
            k,
            mutated,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            ambiguous: count(Status::Ambiguous),
            identifications: Vec::new(),
            cases,
        }
    }
}

/// Timing and size data, reported on stderr only.
#[derive(Clone, Debug)]
pub struct Telemetry {
    pub elapsed: Duration,
    pub dim: usize,
    pub cases: usize,
    pub max_residual_nnz: usize,
}

impl fmt::Display for Telemetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} cases on {}x{} matrices in {:.3}s (max residual nnz {})",
            self.cases,
            self.dim,
            self.dim,
            self.elapsed.as_secs_f64(),
            self.max_residual_nnz
        )
    }
}

type Residual<'a> = Box<dyn Fn() -> Result<SuperMatrix> + Send + Sync + 'a>;

pub(crate) struct Reading<'a> {
    name: String,
    /// `None` when this reading has no instance for the given `n`.
    residual: Option<Residual<'a>>,
}

pub(crate) struct Case<'a> {
    id: String,
    family: String,
    readings: Vec<Reading<'a>>,
}

impl<'a> Case<'a> {
    pub(crate) fn single(id: impl Into<String>, family: &str, f: impl Fn() -> Result<SuperMatrix> + Send + Sync + 'a) -> Self {
        Self { id: id.into(), family: family.into(), readings: vec![Reading { name: "printed".into(), residual: Some(Box::new(f)) }] }
    }
}

/// A relation given as expressions, one per reading.
#[derive(Clone, Debug)]
pub struct ExprCase {
    pub id: String,
    pub family: String,
    pub readings: Vec<(String, Option<Expr>)>,
}

impl ExprCase {
    pub(crate) fn new(id: impl Into<String>, family: &str, residual: Expr) -> Self {
        Self { id: id.into(), family: family.into(), readings: vec![("printed".into(), Some(residual))] }
    }

    pub(crate) fn with_readings(id: impl Into<String>, family: &str, readings: Vec<(&str, Option<Expr>)>) -> Self {
        Self { id: id.into(), family: family.into(), readings: readings.into_iter().map(|(r, e)| (r.to_string(), e)).collect() }
    }

    pub fn involves(&self, pred: impl Fn(&crate::natrep::GeneratorLabel) -> bool) -> bool {
        let mut ls = Vec::new();
        for e in self.readings.iter().filter_map(|r| r.1.as_ref()) {
            e.labels(&mut ls);
        }
        ls.iter().any(pred)
    }

    pub(crate) fn bind<'a>(self, ev: &'a Evaluator<'a>) -> Case<'a> {
        Case {
            id: self.id,
            family: self.family,
            readings: self
                .readings
                .into_iter()
                .map(|(name, e)| Reading {
                    name,
                    residual: e.map(|e| Box::new(move || ev.eval(&e)) as Residual<'a>),
                })
                .collect(),
        }
    }
}

fn residual_entries(m: &SuperMatrix, basis: TensorBasis) -> Vec<ResidualEntry> {
    m.entries_row_major()
        .into_iter()
        .take(RESIDUAL_LIMIT)
        .map(|(r, c, v)| ResidualEntry { row: basis.tuple(r), col: basis.tuple(c), value: v.to_string() })
        .collect()
}

fn evaluate(case: &Case, n: usize, k: usize, basis: TensorBasis) -> CaseReport {
    let mut report = CaseReport {
        case_id: case.id.clone(),
        family: case.family.clone(),
        n,
        k,
        status: Status::Fail,
        reading: case.readings[0].name.clone(),
        residual_nnz: 0,
        residual_nonzero_entries: Vec::new(),
        note: None,
    };
    let mut first_failure: Option<SuperMatrix> = None;
    for (idx, r) in case.readings.iter().enumerate() {
        let Some(f) = &r.residual else { continue };
        match f() {
            Ok(m) if m.is_zero() => {
                report.status = if idx == 0 { Status::Pass } else { Status::Ambiguous };
                report.reading = r.name.clone();
                return report;
            }
            Ok(m) => {
                if first_failure.is_none() {
                    first_failure = Some(m);
                }
            }
            Err(e) => {
                if report.note.is_none() {
                    report.note = Some(format!("{}: {e}", r.name));
                }
            }
        }
    }
    if let Some(m) = first_failure {
        report.residual_nnz = m.nnz();
        report.residual_nonzero_entries = residual_entries(&m, basis);
    }
    report
}

pub(crate) fn run_cases(cases: &[Case], n: usize, k: usize, basis: TensorBasis) -> Vec<CaseReport> {
    cases.par_iter().map(|c| evaluate(c, n, k, basis)).collect()
}

/// Options shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub mutate: bool,
    /// Largest divided-power exponent.
    pub max_m: u32,
    /// Restrict to cases whose id starts with one of these family prefixes.
    pub families: Option<Vec<String>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { mutate: false, max_m: 3, families: None }
    }
}

impl SuiteOptions {
    pub fn mutated() -> Self {
        Self { mutate: true, ..Self::default() }
    }

    pub(crate) fn keep(&self, family: &str) -> bool {
        self.families.as_ref().is_none_or(|fs| fs.iter().any(|f| f == family))
    }
}

/// Runs one suite on `V⊗k`.
pub fn run_suite(suite: Suite, n: usize, k: usize, opts: &SuiteOptions) -> Result<(SuiteReport, Telemetry)> {
    if n < 2 {
        return Err(Error::ShapeError(format!("relation suites need n ≥ 2, got {n}")));
    }
    let start = Instant::now();
    let report = match suite {
        Suite::Exprel => frt::run(n, k, opts)?,
        Suite::DjRelations => run_expr_suite(suite, n, k, dj::prop_alg(n, opts.mutate), opts)?,
        Suite::LemmaAlg => run_expr_suite(suite, n, k, dj::lemma_alg(n, opts.mutate), opts)?,
        Suite::DividedPowers => run_expr_suite(suite, n, k, dj::divided_powers(n, opts.max_m, opts.mutate), opts)?,
        Suite::Classical => classical::run(n, opts)?,
        Suite::Coproduct => coproduct::run(n, k, opts)?,
        Suite::Centralizer => centralizer::run(n, k, opts)?,
    };
    let dim = if suite == Suite::Classical { 2 * n } else { TensorBasis::new(n, k).dim() };
    Ok(finish(report, dim, start))
}

fn run_expr_suite(suite: Suite, n: usize, k: usize, cases: Vec<ExprCase>, opts: &SuiteOptions) -> Result<SuiteReport> {
    let module = TensorModule::new(n, k)?;
    let ev = Evaluator::new(module.dim(), |l| module.action(l));
    let bound: Vec<Case> = cases.into_iter().filter(|c| opts.keep(&c.family)).map(|c| c.bind(&ev)).collect();
    let reports = run_cases(&bound, n, k, module.basis);
    Ok(SuiteReport::from_cases(suite, n, k, opts.mutate, reports))
}

fn finish(report: SuiteReport, dim: usize, start: Instant) -> (SuiteReport, Telemetry) {
    let telemetry = Telemetry {
        elapsed: start.elapsed(),
        dim,
        cases: report.cases.len(),
        max_residual_nnz: report.cases.iter().map(|c| c.residual_nnz).max().unwrap_or(0),
    };
    (report, telemetry)
}

/// Expression lists of the algebraic suites, exposed for inspection.
pub fn expression_cases(suite: Suite, n: usize, opts: &SuiteOptions) -> Vec<ExprCase> {
    match suite {
        Suite::DjRelations => dj::prop_alg(n, opts.mutate),
        Suite::LemmaAlg => dj::lemma_alg(n, opts.mutate),
        Suite::DividedPowers => dj::divided_powers(n, opts.max_m, opts.mutate),
        Suite::Classical => classical::cases(n, opts.mutate),
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests;
