//! Oracle-equivalence suites over the seeded corpora.

use serde::Serialize;

use crate::corpus::{canonical_posets, cube_corpus, metric_corpus, random_graded_posets};
use crate::link::check_type_c;
use crate::par::parallel_collect;
use crate::tightspan::{dress_dimension_test, tight_span};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub instances: usize,
    pub agreements: usize,
    pub disagreements: Vec<String>,
}

impl SuiteResult {
    fn from_outcomes(name: &str, outcomes: Vec<(String, Result<bool, String>)>) -> SuiteResult {
        let instances = outcomes.len();
        let disagreements: Vec<String> = outcomes
            .into_iter()
            .filter_map(|(case, r)| match r {
                Ok(true) => None,
                Ok(false) => Some(case),
                Err(e) => Some(format!("{case}: {e}")),
            })
            .collect();
        SuiteResult {
            name: name.to_string(),
            instances,
            agreements: instances - disagreements.len(),
            disagreements,
        }
    }

    pub fn pass(&self) -> bool {
        self.disagreements.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    pub random_posets: usize,
    pub random_cubes: usize,
    pub metrics: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 2024,
            random_posets: 500,
            random_cubes: 12,
            metrics: 200,
        }
    }
}

/// Bounded-lattice test against the balanced-bowtie search.
pub fn lattice_suite(cfg: &SelftestConfig) -> SuiteResult {
    let mut cases: Vec<(String, crate::poset::Poset)> = canonical_posets();
    cases.extend(
        random_graded_posets(cfg.seed, cfg.random_posets, 12)
            .into_iter()
            .enumerate()
            .map(|(i, p)| (format!("random poset {i}"), p)),
    );
    let outcomes = parallel_collect(&cases, |(name, p)| {
        (
            name.clone(),
            p.bounded_lattice_report().map(|r| r.agrees()).map_err(|e| e.to_string()),
        )
    });
    SuiteResult::from_outcomes("bounded lattice vs balanced bowtie", outcomes)
}

/// Type C check of the subdivision against the direct link test.
pub fn gromov_suite(cfg: &SelftestConfig) -> SuiteResult {
    let cases = cube_corpus(cfg.seed, cfg.random_cubes);
    let outcomes = parallel_collect(&cases, |(name, c)| {
        let direct = c.gromov_check().pass;
        let via_links = check_type_c(&c.barycentric_subdivision()).map(|v| v.pass).unwrap_or(false);
        (name.clone(), Ok(direct == via_links))
    });
    SuiteResult::from_outcomes("subdivision check vs direct link test", outcomes)
}

/// Dress's criterion against the computed hull dimension, for `n` in {1, 2}.
pub fn dress_suite(cfg: &SelftestConfig) -> SuiteResult {
    let cases = metric_corpus(cfg.seed, cfg.metrics);
    let outcomes = parallel_collect(&cases, |(name, m)| {
        let r = tight_span(m).map_err(|e| e.to_string()).and_then(|t| {
            for n in 1..=2 {
                let dress = dress_dimension_test(m, n).map_err(|e| e.to_string())?;
                if dress != (t.dimension <= n) {
                    return Ok(false);
                }
            }
            Ok(true)
        });
        (name.clone(), r)
    });
    SuiteResult::from_outcomes("Dress criterion vs hull dimension", outcomes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub pass: bool,
    pub suites: Vec<SuiteResult>,
}

pub fn run(cfg: &SelftestConfig) -> SelftestReport {
    let suites = vec![lattice_suite(cfg), gromov_suite(cfg), dress_suite(cfg)];
    SelftestReport {
        pass: suites.iter().all(SuiteResult::pass),
        suites,
    }
}
