//! Verification suites, their configuration and machine-readable reports.
//!
//! Reports are deterministic functions of the configuration: every random
//! draw comes from a stream derived from the seed and a per-task label, and
//! results are aggregated in a fixed order. Wall-clock timings are kept on
//! the report but never serialized.

mod algebraic;
mod covariance;
mod exploratory;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Rational;
use crate::error::{Error, Result};

pub use covariance::{certification_notes, CONSTANT_CASES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Bernstein,
    Products,
    EfIdentity,
    M1Classical,
    Covariance,
    GroupAction,
    Scalars,
    OmegaCompare,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::Bernstein,
        SuiteName::Products,
        SuiteName::EfIdentity,
        SuiteName::M1Classical,
        SuiteName::Covariance,
        SuiteName::GroupAction,
        SuiteName::Scalars,
        SuiteName::OmegaCompare,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Bernstein => "bernstein",
            SuiteName::Products => "products",
            SuiteName::EfIdentity => "ef-identity",
            SuiteName::M1Classical => "m1-classical",
            SuiteName::Covariance => "covariance",
            SuiteName::GroupAction => "group-action",
            SuiteName::Scalars => "scalars",
            SuiteName::OmegaCompare => "omega-compare",
        }
    }

    /// `all` or a comma-separated list of suite names.
    pub fn parse_list(s: &str) -> Result<Vec<SuiteName>> {
        if s.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out: Vec<SuiteName> = s.split(',').map(|p| p.trim().parse()).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An inclusive integer range written `lo..hi` or as a single integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Config(format!("empty range {lo}..{hi}")));
        }
        Ok(IntRange { lo, hi })
    }

    pub fn values(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn usizes(self) -> impl Iterator<Item = usize> {
        (self.lo.max(0)..=self.hi).map(|v| v as usize)
    }

    pub fn len(self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("cannot parse range '{s}'"));
        let s = s.trim();
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Self::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
            }
            None => {
                let v = s.parse().map_err(|_| bad())?;
                Self::new(v, v)
            }
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suites: Vec<SuiteName>,
    pub m: IntRange,
    pub k: IntRange,
    pub lambda: IntRange,
    pub mu: IntRange,
    /// Sample points per pointwise check.
    pub points: usize,
    /// Random inputs per `m` in the product and group-action suites.
    pub samples: usize,
    /// Samples per parameter pair in exploratory comparisons.
    pub exploratory_samples: usize,
    pub seed: u64,
    /// Flips the sign of every right-hand side in value comparisons.
    pub inject_fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: SuiteName::ALL.to_vec(),
            m: IntRange { lo: 1, hi: 2 },
            k: IntRange { lo: 1, hi: 2 },
            lambda: IntRange { lo: -2, hi: 3 },
            mu: IntRange { lo: -2, hi: 3 },
            points: 20,
            samples: 100,
            exploratory_samples: 5,
            seed: 0,
            inject_fault: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::Config("no suite selected".into()));
        }
        if self.m.lo < 1 {
            return Err(Error::Config("m must be at least 1".into()));
        }
        if self.k.lo < 0 {
            return Err(Error::Config("k must be non-negative".into()));
        }
        if self.points == 0 || self.samples == 0 {
            return Err(Error::Config("sample counts must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Exploratory,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl CheckRecord {
    pub fn pass(id: impl Into<String>) -> Self {
        CheckRecord { id: id.into(), status: Status::Pass, witness: None, data: None }
    }

    pub fn fail(id: impl Into<String>, witness: Value) -> Self {
        CheckRecord { id: id.into(), status: Status::Fail, witness: Some(witness), data: None }
    }

    pub fn exploratory(id: impl Into<String>, data: Value) -> Self {
        CheckRecord { id: id.into(), status: Status::Exploratory, witness: None, data: Some(data) }
    }

    /// A boolean check; `inputs` reproduce it on failure.
    pub fn from_bool(id: impl Into<String>, outcome: Result<bool>, inputs: impl FnOnce() -> Value) -> Self {
        match outcome {
            Ok(true) => Self::pass(id),
            Ok(false) => Self::fail(id, json!({ "inputs": inputs() })),
            Err(e) => Self::fail(id, json!({ "inputs": inputs(), "error": e.to_string() })),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub exploratory: usize,
}

impl Summary {
    fn of(checks: &[CheckRecord]) -> Self {
        let mut s = Summary::default();
        for c in checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Exploratory => s.exploratory += 1,
            }
        }
        s
    }

    fn add(self, o: Summary) -> Summary {
        Summary { pass: self.pass + o.pass, fail: self.fail + o.fail, exploratory: self.exploratory + o.exploratory }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub notes: Vec<String>,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(suite: SuiteName, notes: Vec<String>, checks: Vec<CheckRecord>) -> Self {
        SuiteReport { suite, notes, summary: Summary::of(&checks), checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.is_fail())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub seed: u64,
    pub config: SuiteConfig,
    pub summary: Summary,
    pub suites: Vec<SuiteReport>,
    /// Seconds per suite; excluded from the serialized form.
    #[serde(skip)]
    pub timings: Vec<(SuiteName, f64)>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// 0 iff no pass/fail check failed; exploratory records never fail.
    pub fn exit_code(&self) -> i32 {
        if self.passed() { 0 } else { 1 }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn suite(&self, name: SuiteName) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }
}

/// Shared state for one run.
pub(crate) struct Ctx<'a> {
    pub config: &'a SuiteConfig,
}

impl Ctx<'_> {
    /// `lhs == rhs`, or `lhs == -rhs` under fault injection.
    pub fn agree(&self, lhs: &Rational, rhs: &Rational) -> bool {
        if self.config.inject_fault {
            *lhs == -rhs.clone()
        } else {
            lhs == rhs
        }
    }

    /// A value comparison record.
    pub fn compare(&self, id: String, values: Result<(Rational, Rational)>, inputs: impl FnOnce() -> Value) -> CheckRecord {
        match values {
            Ok((l, r)) if self.agree(&l, &r) => CheckRecord::pass(id),
            Ok((l, r)) => CheckRecord::fail(
                id,
                json!({ "inputs": inputs(), "lhs": l.to_string(), "rhs": r.to_string() }),
            ),
            Err(e) => CheckRecord::fail(id, json!({ "inputs": inputs(), "error": e.to_string() })),
        }
    }

    pub fn ms(&self) -> Vec<usize> {
        self.config.m.usizes().collect()
    }
}

fn run_one(ctx: &Ctx<'_>, name: SuiteName) -> SuiteReport {
    match name {
        SuiteName::Bernstein => algebraic::bernstein(ctx),
        SuiteName::Products => algebraic::products(ctx),
        SuiteName::EfIdentity => algebraic::ef_identity(ctx),
        SuiteName::M1Classical => algebraic::m1_classical(ctx),
        SuiteName::Scalars => algebraic::scalars(ctx),
        SuiteName::Covariance => covariance::covariance(ctx),
        SuiteName::GroupAction => covariance::group_action(ctx),
        SuiteName::OmegaCompare => exploratory::omega_compare(ctx),
    }
}

/// Runs the selected suites. Suites run in parallel; the report lists them
/// in the canonical order regardless of completion order.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let ctx = Ctx { config };
    let mut names = config.suites.clone();
    names.sort();
    names.dedup();
    let results: Vec<(SuiteReport, f64)> = names
        .par_iter()
        .map(|&n| {
            let start = Instant::now();
            let r = run_one(&ctx, n);
            (r, start.elapsed().as_secs_f64())
        })
        .collect();
    let summary = results.iter().fold(Summary::default(), |acc, (r, _)| acc.add(r.summary));
    Ok(Report {
        seed: config.seed,
        config: config.clone(),
        summary,
        timings: results.iter().map(|(r, t)| (r.suite, *t)).collect(),
        suites: results.into_iter().map(|(r, _)| r).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("1..3".parse::<IntRange>().unwrap(), IntRange { lo: 1, hi: 3 });
        assert_eq!("-2..=3".parse::<IntRange>().unwrap(), IntRange { lo: -2, hi: 3 });
        assert_eq!("2".parse::<IntRange>().unwrap(), IntRange { lo: 2, hi: 2 });
        assert!(matches!("3..1".parse::<IntRange>(), Err(Error::Config(_))));
        assert!("x".parse::<IntRange>().is_err());
    }

    #[test]
    fn suite_names() {
        assert_eq!(SuiteName::parse_list("all").unwrap().len(), 8);
        assert_eq!(
            SuiteName::parse_list("covariance,bernstein").unwrap(),
            vec![SuiteName::Bernstein, SuiteName::Covariance]
        );
        assert!(SuiteName::parse_list("nope").is_err());
    }

    #[test]
    fn config_validation() {
        let mut c = SuiteConfig { suites: vec![], ..Default::default() };
        assert!(c.validate().is_err());
        c.suites = vec![SuiteName::Scalars];
        assert!(c.validate().is_ok());
        c.m = IntRange { lo: 0, hi: 1 };
        assert!(c.validate().is_err());
    }
}
