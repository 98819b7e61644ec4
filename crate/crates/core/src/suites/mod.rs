//! Seeded randomized identity suites.
//!
//! Every property draws fresh inputs per case from a generator seeded by the
//! run seed, the property name and the case index, so a report is a pure
//! function of `(suite, n, cases, seed, tol)`.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::random::{rng, TestRng};

mod clifford_map;
mod differential;
mod duality;
mod extensor;
mod geometry;
mod hyperbolic;

pub type CheckFn = fn(usize, &mut TestRng) -> Result<Residual>;

/// Outcome of one randomized case: the residual and a description of the inputs.
#[derive(Debug, Clone)]
pub struct Residual {
    pub value: f64,
    pub inputs: String,
}

impl Residual {
    pub fn new(value: f64, inputs: impl Into<String>) -> Self {
        Self { value, inputs: inputs.into() }
    }

    /// Largest of several residuals.
    pub fn max(values: &[f64], inputs: impl Into<String>) -> Self {
        Self::new(values.iter().fold(0.0, |m, v| if v.is_nan() { f64::NAN } else { m.max(*v) }), inputs)
    }
}

#[derive(Clone, Copy)]
pub struct Property {
    pub name: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    /// Upper bound on cases for expensive properties.
    pub case_cap: Option<usize>,
    pub check: CheckFn,
}

impl Property {
    pub const fn new(name: &'static str, check: CheckFn) -> Self {
        Self { name, min_n: 1, max_n: crate::exterior::MAX_N, case_cap: None, check }
    }

    pub const fn dims(mut self, min_n: usize, max_n: usize) -> Self {
        self.min_n = min_n;
        self.max_n = max_n;
        self
    }

    pub const fn cap(mut self, cases: usize) -> Self {
        self.case_cap = Some(cases);
        self
    }
}

pub struct Suite {
    pub name: &'static str,
    pub properties: Vec<Property>,
}

/// Names accepted by [`run_suite`], besides `all`.
pub const SUITES: &[&str] = &["hyperbolic", "duality", "extensor", "clifford-map", "differential", "geometry"];

pub fn suite(name: &str) -> Option<Suite> {
    let properties = match name {
        "hyperbolic" => hyperbolic::properties(),
        "duality" => duality::properties(),
        "extensor" => extensor::properties(),
        "clifford-map" => clifford_map::properties(),
        "differential" => differential::properties(),
        "geometry" => geometry::properties(),
        _ => return None,
    };
    let name = SUITES.iter().find(|s| **s == name).copied()?;
    Some(Suite { name, properties })
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub property: String,
    pub case: usize,
    pub residual: f64,
    pub inputs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub cases: usize,
    pub max_residual: f64,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub tol: f64,
    pub cases: usize,
    pub max_residual: f64,
    pub properties: Vec<PropertyReport>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(name: &str, reports: Vec<SuiteReport>) -> SuiteReport {
        let first = &reports[0];
        let mut out = SuiteReport {
            suite: name.to_string(),
            n: first.n,
            seed: first.seed,
            tol: first.tol,
            cases: 0,
            max_residual: 0.0,
            properties: Vec::new(),
            failures: Vec::new(),
        };
        for r in reports {
            out.cases += r.cases;
            out.max_residual = worst(out.max_residual, r.max_residual);
            out.properties.extend(
                r.properties.into_iter().map(|p| PropertyReport { name: format!("{}/{}", r.suite, p.name), ..p }),
            );
            out.failures.extend(
                r.failures.into_iter().map(|f| Failure { property: format!("{}/{}", r.suite, f.property), ..f }),
            );
        }
        sort_failures(&mut out.failures);
        out
    }
}

fn worst(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

fn sort_failures(f: &mut [Failure]) {
    f.sort_by(|a, b| a.property.cmp(&b.property).then(a.case.cmp(&b.case)));
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} n={} seed={} tol={:e}", self.suite, self.n, self.seed, self.tol)?;
        let width = self.properties.iter().map(|p| p.name.len()).max().unwrap_or(0);
        for p in &self.properties {
            let status = if p.failures == 0 { "ok  " } else { "FAIL" };
            writeln!(f, "  {status} {:width$}  cases {:>4}  max {:.3e}", p.name, p.cases, p.max_residual)?;
        }
        for x in &self.failures {
            writeln!(f, "  failure {} case {} residual {:.3e}: {}", x.property, x.case, x.residual, x.inputs)?;
        }
        let mut tail = String::new();
        let _ = write!(
            tail,
            "{} properties, {} cases, max residual {:.3e}, {} failures",
            self.properties.len(),
            self.cases,
            self.max_residual,
            self.failures.len()
        );
        write!(f, "{tail}")
    }
}

fn case_seed(seed: u64, property: &str, case: usize) -> u64 {
    // FNV-1a over the property name, mixed with the run seed and case index
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in property.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (case as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9)
}

pub fn run_properties(
    suite: &str,
    properties: &[Property],
    n: usize,
    cases: usize,
    seed: u64,
    tol: f64,
) -> SuiteReport {
    let mut report = SuiteReport {
        suite: suite.to_string(),
        n,
        seed,
        tol,
        cases: 0,
        max_residual: 0.0,
        properties: Vec::new(),
        failures: Vec::new(),
    };
    for p in properties.iter().filter(|p| p.min_n <= n && n <= p.max_n) {
        let count = p.case_cap.map_or(cases, |c| c.min(cases));
        let mut pr = PropertyReport { name: p.name.to_string(), cases: count, max_residual: 0.0, failures: 0 };
        for case in 0..count {
            let mut r = rng(case_seed(seed, p.name, case));
            let res = (p.check)(n, &mut r).unwrap_or_else(|e| Residual::new(f64::INFINITY, format!("error: {e}")));
            pr.max_residual = worst(pr.max_residual, res.value);
            if !(res.value <= tol) {
                pr.failures += 1;
                report.failures.push(Failure {
                    property: p.name.to_string(),
                    case,
                    residual: res.value,
                    inputs: res.inputs,
                });
            }
        }
        report.cases += count;
        report.max_residual = worst(report.max_residual, pr.max_residual);
        report.properties.push(pr);
    }
    sort_failures(&mut report.failures);
    report
}

/// Runs a named suite, or every suite for `all`.
pub fn run_suite(name: &str, n: usize, cases: usize, seed: u64, tol: f64) -> Result<SuiteReport> {
    if name == "all" {
        let reports = SUITES.iter().map(|s| run_suite(s, n, cases, seed, tol)).collect::<Result<Vec<_>>>()?;
        return Ok(SuiteReport::merge("all", reports));
    }
    let s = suite(name).ok_or_else(|| Error::Signature(format!("unknown suite `{name}`")))?;
    Ok(run_properties(s.name, &s.properties, n, cases, seed, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_seeds_differ_by_name_and_index() {
        assert_ne!(case_seed(1, "a", 0), case_seed(1, "b", 0));
        assert_ne!(case_seed(1, "a", 0), case_seed(1, "a", 1));
        assert_ne!(case_seed(1, "a", 0), case_seed(2, "a", 0));
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", 2, 1, 0, 1e-9).is_err());
    }
}
