//! The Omega-versus-D comparison. For `m = 1` the identification is a
//! pass/fail check; for larger `m` the outcome is recorded without judgment.

use rayon::prelude::*;
use serde_json::json;

use crate::omega::{compare_omega_vs_d, Verdict};

use super::{CheckRecord, Ctx, SuiteName, SuiteReport};

pub(super) fn omega_compare(ctx: &Ctx<'_>) -> SuiteReport {
    let config = ctx.config;
    let mut jobs = Vec::new();
    for m in ctx.ms() {
        for lambda in config.lambda.values() {
            for mu in config.mu.values() {
                jobs.push((m, lambda, mu));
            }
        }
    }
    let checks = jobs
        .par_iter()
        .map(|&(m, lambda, mu)| {
            let id = format!("omega-vs-D/m={m}/lambda={lambda}/mu={mu}");
            let count = if m == 1 { config.points } else { config.exploratory_samples };
            match compare_omega_vs_d(m, lambda, mu, count, config.seed) {
                Ok(report) if m >= 2 => CheckRecord::exploratory(id, json!(report)),
                Ok(report) if report.verdict == (Verdict::Proportional { ratio: "1".into() }) => CheckRecord::pass(id),
                Ok(report) => CheckRecord::fail(id, json!(report)),
                Err(e) => CheckRecord::fail(id, json!({ "m": m, "lambda": lambda, "mu": mu, "error": e.to_string() })),
            }
        })
        .collect();
    let notes = vec![
        "For m = 1 the lifted Cayley operator must agree with the normalized D exactly (ratio 1).".to_string(),
        "For m >= 2 records are exploratory: whether the two constructions are proportional is open.".to_string(),
    ];
    SuiteReport::new(SuiteName::OmegaCompare, notes, checks)
}
