//! Outcome records for the bounded verifiers.
//!
//! Each `verify_*` function walks an explicit finite case list and returns a
//! [`VerificationReport`]. Counterexamples are collected in case order (also
//! when the case list is sharded across threads), so reports are
//! deterministic; wall-clock time is kept out of the serialized form so two
//! runs of the same check serialize to identical bytes.

use serde::Serialize;
use serde_json::Value;
use std::time::Instant;

/// Most counterexamples kept per report; the rest collapse into a count.
pub const COUNTEREXAMPLE_CAP: usize = 16;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    pub checked: u64,
    pub counterexamples: Vec<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

/// Accumulates case outcomes for one report.
pub struct ReportBuilder {
    check: String,
    params: Value,
    checked: u64,
    counterexamples: Vec<String>,
    started: Instant,
}

impl ReportBuilder {
    pub fn begin(check: &str, params: Value) -> Self {
        ReportBuilder {
            check: check.to_string(),
            params,
            checked: 0,
            counterexamples: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Records one already-evaluated case.
    pub fn case(&mut self, outcome: Result<(), String>) {
        self.checked += 1;
        if let Err(ce) = outcome {
            self.counterexamples.push(ce);
        }
    }

    /// Evaluates `f` on every case, in parallel when the `parallel` feature
    /// is enabled; failures are appended in case-list order either way.
    pub fn run<T, F>(&mut self, cases: &[T], f: F)
    where
        T: Sync,
        F: Fn(&T) -> Result<(), String> + Sync,
    {
        self.checked += cases.len() as u64;
        self.counterexamples.extend(map_cases(cases, f));
    }

    pub fn finish(self) -> VerificationReport {
        let mut counterexamples = self.counterexamples;
        let pass = counterexamples.is_empty();
        if counterexamples.len() > COUNTEREXAMPLE_CAP {
            let extra = counterexamples.len() - COUNTEREXAMPLE_CAP;
            counterexamples.truncate(COUNTEREXAMPLE_CAP);
            counterexamples.push(format!("... and {extra} more"));
        }
        VerificationReport {
            check: self.check,
            params: self.params,
            pass,
            checked: self.checked,
            counterexamples,
            elapsed_ms: self.started.elapsed().as_millis(),
        }
    }
}

#[cfg(feature = "parallel")]
fn map_cases<T, F>(cases: &[T], f: F) -> Vec<String>
where
    T: Sync,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    use rayon::prelude::*;
    // collect() keeps index order, so the merge is deterministic.
    cases
        .par_iter()
        .map(|c| f(c).err())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn map_cases<T, F>(cases: &[T], f: F) -> Vec<String>
where
    T: Sync,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    cases.iter().filter_map(|c| f(c).err()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_keep_case_order_and_cap() {
        let mut b = ReportBuilder::begin("demo", serde_json::json!({"n": 40}));
        let cases: Vec<u32> = (0..40).collect();
        b.run(&cases, |&n| if n % 2 == 0 { Err(format!("case {n}")) } else { Ok(()) });
        let r = b.finish();
        assert!(!r.pass);
        assert_eq!(r.checked, 40);
        assert_eq!(r.counterexamples.len(), COUNTEREXAMPLE_CAP + 1);
        assert_eq!(r.counterexamples[0], "case 0");
        assert_eq!(r.counterexamples[1], "case 2");
        assert_eq!(r.counterexamples.last().unwrap(), "... and 4 more");
    }

    #[test]
    fn elapsed_stays_out_of_the_json() {
        let mut b = ReportBuilder::begin("demo", serde_json::json!({}));
        b.case(Ok(()));
        let json = serde_json::to_value(b.finish()).unwrap();
        assert!(json.get("elapsed_ms").is_none());
        assert_eq!(json["pass"], serde_json::json!(true));
        assert_eq!(json["checked"], serde_json::json!(1));
    }
}
