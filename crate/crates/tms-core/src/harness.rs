//! Runs every decider and the implication registry over a stream of models
//! and aggregates violations, property frequencies, and guard statistics.
//!
//! Models are processed in chunks; inside a chunk the evaluations may fan
//! out to a worker pool, but results are merged in stream order, so the
//! summary is identical for any worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::enumerate::canonical_form;
use crate::parse::serialize_model;
use crate::registry::{evaluate_registry, implication_registry};
use crate::report::{evaluate_report, Property};
use crate::space::Space;

#[derive(Clone, Copy, Debug)]
pub struct HarnessConfig {
    /// Worker threads; 0 or 1 means sequential.
    pub jobs: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig { jobs: 1 }
    }
}

/// A registry clause that failed on a concrete model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HarnessViolation {
    pub entry: &'static str,
    pub clause: usize,
    pub detail: String,
    /// Canonical model source, sufficient to reproduce the failure.
    pub model_source: String,
    pub canonical_key: String,
}

#[derive(Clone, Debug, Default)]
pub struct HarnessSummary {
    pub models: u64,
    /// Per property, on how many models it held.
    pub property_true_counts: BTreeMap<&'static str, u64>,
    /// Per registry clause, how many models satisfied / vacuously passed
    /// the guard.
    pub guard_satisfied: BTreeMap<(&'static str, usize), u64>,
    pub guard_vacuous: BTreeMap<(&'static str, usize), u64>,
    pub violations: Vec<HarnessViolation>,
}

impl HarnessSummary {
    fn absorb(&mut self, other: HarnessSummary) {
        self.models += other.models;
        for (k, v) in other.property_true_counts {
            *self.property_true_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.guard_satisfied {
            *self.guard_satisfied.entry(k).or_default() += v;
        }
        for (k, v) in other.guard_vacuous {
            *self.guard_vacuous.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
    }

    /// Human-readable rendering: counts, frequency table, guard table,
    /// violations (first one with full model source).
    pub fn render(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "models checked: {}", self.models).unwrap();
        writeln!(out, "property frequencies:").unwrap();
        for p in Property::ALL {
            let count = self
                .property_true_counts
                .get(p.name())
                .copied()
                .unwrap_or(0);
            writeln!(out, "  {:<18} {}", p.name(), count).unwrap();
        }
        writeln!(out, "registry guards (satisfied/vacuous):").unwrap();
        for entry in implication_registry() {
            for clause in 0..entry.clauses.len() {
                let sat = self
                    .guard_satisfied
                    .get(&(entry.name, clause))
                    .copied()
                    .unwrap_or(0);
                let vac = self
                    .guard_vacuous
                    .get(&(entry.name, clause))
                    .copied()
                    .unwrap_or(0);
                writeln!(out, "  {:<6} [{}] {}/{}", entry.name, clause, sat, vac).unwrap();
            }
        }
        writeln!(out, "violations: {}", self.violations.len()).unwrap();
        if let Some(first) = self.violations.first() {
            writeln!(
                out,
                "first violation: {}[{}] {}",
                first.entry, first.clause, first.detail
            )
            .unwrap();
            writeln!(out, "model:").unwrap();
            for line in first.model_source.lines() {
                writeln!(out, "  {line}").unwrap();
            }
        }
        out
    }
}

fn evaluate_one(space: &Space) -> HarnessSummary {
    let report = evaluate_report(space);
    let mut summary = HarnessSummary {
        models: 1,
        ..Default::default()
    };
    for (p, holds) in report.flags() {
        if holds {
            *summary.property_true_counts.entry(p.name()).or_default() += 1;
        }
    }
    for outcome in evaluate_registry(space, &report) {
        let slot = (outcome.entry, outcome.clause);
        if outcome.guard_satisfied {
            *summary.guard_satisfied.entry(slot).or_default() += 1;
        } else {
            *summary.guard_vacuous.entry(slot).or_default() += 1;
        }
        if let Some(v) = outcome.violation {
            summary.violations.push(HarnessViolation {
                entry: v.entry,
                clause: v.clause,
                detail: v.detail,
                model_source: serialize_model(space),
                canonical_key: canonical_form(space).to_string(),
            });
        }
    }
    summary
}

const CHUNK: usize = 2048;

/// Evaluates the registry over every model of the stream.
pub fn run_harness(models: impl Iterator<Item = Space>, config: &HarnessConfig) -> HarnessSummary {
    let mut total = HarnessSummary::default();
    let mut models = models.peekable();
    let parallel = config.jobs > 1;
    let pool = parallel.then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("worker pool")
    });

    while models.peek().is_some() {
        let chunk: Vec<Space> = models.by_ref().take(CHUNK).collect();
        let partials: Vec<HarnessSummary> = match &pool {
            Some(pool) => pool.install(|| chunk.par_iter().map(evaluate_one).collect()),
            None => chunk.iter().map(evaluate_one).collect(),
        };
        for p in partials {
            total.absorb(p);
        }
    }

    total.violations.sort_by(|a, b| {
        (&a.canonical_key, a.entry, a.clause).cmp(&(&b.canonical_key, b.entry, b.clause))
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin_examples;
    use crate::enumerate::{enumerate_spaces, EnumConfig};

    #[test]
    fn builtin_models_pass_the_registry() {
        let summary = run_harness(
            builtin_examples().into_iter().map(|e| e.space),
            &HarnessConfig::default(),
        );
        assert_eq!(summary.models, 5);
        assert!(summary.violations.is_empty(), "{}", summary.render());
    }

    #[test]
    fn empty_stream_gives_empty_summary() {
        let summary = run_harness(std::iter::empty(), &HarnessConfig::default());
        assert_eq!(summary.models, 0);
        assert!(summary.violations.is_empty());
        assert!(summary.property_true_counts.is_empty());
    }

    /// All labeled 3-point topologies with the powerset σ-algebra and masses
    /// from {0, 1, ∞}: 29·27 models, zero violations.
    #[test]
    fn three_point_powerset_family_is_clean() {
        let config = EnumConfig::new(3);
        let summary = run_harness(
            enumerate_spaces(&config).unwrap(),
            &HarnessConfig::default(),
        );
        assert_eq!(summary.models, 783);
        assert!(summary.violations.is_empty(), "{}", summary.render());
    }

    #[test]
    fn worker_count_does_not_change_the_summary() {
        let config = EnumConfig::new(3);
        let sequential = run_harness(
            enumerate_spaces(&config).unwrap(),
            &HarnessConfig { jobs: 1 },
        );
        let parallel = run_harness(
            enumerate_spaces(&config).unwrap(),
            &HarnessConfig { jobs: 4 },
        );
        assert_eq!(sequential.models, parallel.models);
        assert_eq!(
            sequential.property_true_counts,
            parallel.property_true_counts
        );
        assert_eq!(sequential.guard_satisfied, parallel.guard_satisfied);
        assert_eq!(sequential.violations, parallel.violations);
        assert_eq!(sequential.render(), parallel.render());
    }
}
