//! The verification suite: every group-theoretic and analytic check run over
//! the reference catalog, with deterministic, timing-free reports.

mod analytic;
mod groups;

use serde::Serialize;

pub use analytic::{analytic_checks, gate_cases, reference_transcriptions};
pub use groups::{check_group, GroupOutcome};

/// Seed for every randomized choice the suite makes.
pub const SUITE_SEED: u64 = 0x5eed_a271;

/// Schema tag of the suite report.
pub const SUITE_SCHEMA: &str = "artin-suite/1";

/// Criteria decided inside a single run.
pub const CRITERIA: [(u8, &str); 13] = [
    (1, "character tables: orthogonality and degree squares"),
    (2, "faithful induction from nilpotent subgroups"),
    (3, "induction hypotheses for every normal subgroup"),
    (4, "cyclic induction spans all class functions"),
    (5, "bounded-height certificates"),
    (6, "class indicators with unit l1 norm"),
    (7, "Mackey decomposition of monomial products"),
    (8, "kernel filter against faithful constituents"),
    (9, "smoothing kernel"),
    (10, "bilinear sums, gates and bound transcriptions"),
    (11, "squarefull sums to 10^7"),
    (12, "epsilon-bad scan"),
    (13, "c(epsilon) values and monotonicity"),
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub subject: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(criterion: u8, subject: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            criterion,
            subject: subject.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionSummary {
    pub id: u8,
    pub title: String,
    pub checks: usize,
    pub failures: usize,
    pub pass: bool,
    pub first_failure: Option<String>,
}

/// Per-criterion verdicts from all checks. A criterion with no checks fails.
pub fn summarize<'a>(checks: impl IntoIterator<Item = &'a Check>) -> Vec<CriterionSummary> {
    let mut out: Vec<CriterionSummary> = CRITERIA
        .iter()
        .map(|&(id, title)| CriterionSummary {
            id,
            title: title.to_string(),
            checks: 0,
            failures: 0,
            pass: false,
            first_failure: None,
        })
        .collect();
    for c in checks {
        let Some(s) = out.iter_mut().find(|s| s.id == c.criterion) else {
            continue;
        };
        s.checks += 1;
        if !c.pass {
            s.failures += 1;
            if s.first_failure.is_none() {
                s.first_failure = Some(format!("{}: {}", c.subject, c.detail));
            }
        }
    }
    for s in &mut out {
        s.pass = s.checks > 0 && s.failures == 0;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: String,
    pub seed: u64,
    pub criteria: Vec<CriterionSummary>,
    pub groups: Vec<groups::GroupReport>,
    pub analytic: Vec<Check>,
}

impl SuiteReport {
    pub fn new(seed: u64, groups: Vec<groups::GroupReport>, analytic: Vec<Check>) -> SuiteReport {
        let criteria = summarize(groups.iter().flat_map(|g| g.checks.iter()).chain(analytic.iter()));
        SuiteReport {
            schema: SUITE_SCHEMA.to_string(),
            seed,
            criteria,
            groups,
            analytic,
        }
    }

    pub fn pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }
}

pub use groups::GroupReport;
