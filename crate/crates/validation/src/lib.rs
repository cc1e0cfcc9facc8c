//! Pass/fail bookkeeping and tolerance helpers for the acceptance suite.

use std::time::{Duration, Instant};

/// `|a - b| <= rtol * max(1, |b|)`.
pub fn rel_close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * b.abs().max(1.0)
}

/// Two-standard-error band for the difference of two independent means.
pub fn two_se(se_a: f64, se_b: f64) -> f64 {
    2.0 * (se_a * se_a + se_b * se_b).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "{} {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Runs checks in order, printing one line per check as it finishes.
#[derive(Debug, Default)]
pub struct Report {
    outcomes: Vec<Outcome>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// `check` returns whether the criterion holds and a one-line detail.
    pub fn run(&mut self, name: &'static str, check: impl FnOnce() -> (bool, String)) -> &Outcome {
        let start = Instant::now();
        let (passed, detail) = check();
        let outcome = Outcome {
            name,
            passed,
            detail,
            elapsed: start.elapsed(),
        };
        println!("{}", outcome.line());
        self.outcomes.push(outcome);
        self.outcomes.last().expect("just pushed")
    }

    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed).count()
    }

    pub fn summary(&self) -> String {
        format!(
            "acceptance: {} passed, {} failed",
            self.outcomes.len() - self.failures(),
            self.failures()
        )
    }
}
