//! Seeded verification suites over the exact evaluation oracle. Each trial
//! draws its randomness from `derive_seed(seed, trial)`, so reports do not
//! depend on how trials are scheduled across threads.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagrams::{pairs_in_box, WeightPair};
use crate::error::{Error, Result};
use crate::exacteval::{
    derive_seed, eval_poly, random_rational_matrix, random_symplectic, verify_independence, verify_invariance,
    verify_straightening_identity, verify_torus_weight, TorusElement,
};
use crate::lattice::{check_rank, elements};
use crate::monomials::{Monomial, StandardMonomial};
use crate::straighten::FormalPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Invariance,
    Torus,
    Independence,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Relations, Suite::Invariance, Suite::Torus, Suite::Independence];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Invariance => "invariance",
            Suite::Torus => "torus",
            Suite::Independence => "independence",
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
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    /// Restricts the independence suite to one graded component.
    pub pair: Option<WeightPair>,
    /// Part bound for sampled shapes and for the independence sweep.
    pub max_part: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRank {
    pub shape: String,
    pub multiplicity: u64,
    pub rank: usize,
    pub batches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentRank>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub op: &'static str,
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }
}

pub fn run(suites: &[Suite], config: &VerifyConfig) -> Result<VerifyReport> {
    check_rank(config.n)?;
    if config.trials == 0 {
        return Err(Error::Parse("trials must be at least 1".into()));
    }
    if let Some(pair) = &config.pair {
        if pair.rank() != config.n {
            return Err(Error::RankMismatch(config.n, pair.rank()));
        }
    }
    let reports = suites
        .iter()
        .map(|&suite| match suite {
            Suite::Relations => relations(config),
            Suite::Invariance => invariance(config),
            Suite::Torus => torus(config),
            Suite::Independence => independence(config),
        })
        .collect();
    Ok(VerifyReport {
        schema: "1",
        op: "verify",
        n: config.n,
        seed: config.seed,
        trials: config.trials,
        suites: reports,
    })
}

fn trial_seeds(config: &VerifyConfig, suite: Suite) -> Vec<u64> {
    let base = derive_seed(config.seed, suite as u64);
    (0..config.trials as u64).map(|t| derive_seed(base, t)).collect()
}

fn collect(suite: Suite, results: Vec<(usize, Vec<Failure>)>) -> SuiteReport {
    let checks = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    SuiteReport { suite, checks, failures, components: Vec::new() }
}

/// A random monomial of degree at most 4 in the generators.
pub fn random_monomial(n: usize, rng: &mut impl Rng) -> Monomial {
    let els = elements(n).expect("valid rank");
    let degree = rng.gen_range(0..=4);
    let cols = (0..degree).map(|_| *els.choose(rng).expect("nonempty")).collect();
    Monomial::new(n, cols).expect("columns share the rank")
}

/// A random basis element of a nonzero graded component in the part box.
pub fn random_standard_monomial(n: usize, max_part: u32, rng: &mut impl Rng) -> StandardMonomial {
    let pairs: Vec<WeightPair> = pairs_in_box(n, max_part)
        .expect("valid rank")
        .into_iter()
        .filter(WeightPair::multiplicity_nonzero)
        .collect();
    let pair = pairs.choose(rng).expect("the trivial component is nonzero");
    let basis = StandardMonomial::enumerate(pair);
    basis.choose(rng).expect("nonzero multiplicity").clone()
}

fn relations(config: &VerifyConfig) -> SuiteReport {
    let n = config.n;
    let results = trial_seeds(config, Suite::Relations)
        .into_par_iter()
        .map(|seed| {
            let mut failures = Vec::new();
            let x = random_rational_matrix(2 * n, seed);
            if !verify_straightening_identity(&x) {
                failures.push(Failure { seed, witness: "quadratic relation on a random matrix".into() });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 1));
            let m = random_monomial(n, &mut rng);
            let p = FormalPolynomial::from_monomial(m.clone());
            if eval_poly(&p.straighten(), &x) != eval_poly(&p, &x) {
                failures.push(Failure { seed, witness: format!("straightening of {m}") });
            }
            (2, failures)
        })
        .collect();
    collect(Suite::Relations, results)
}

fn invariance(config: &VerifyConfig) -> SuiteReport {
    let (n, max_part) = (config.n, config.max_part);
    let results = trial_seeds(config, Suite::Invariance)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_standard_monomial(n, max_part, &mut rng);
            let ok = verify_invariance(&m, derive_seed(seed, 1));
            let failures = if ok { Vec::new() } else { vec![Failure { seed, witness: m.to_string() }] };
            (1, failures)
        })
        .collect();
    collect(Suite::Invariance, results)
}

fn torus(config: &VerifyConfig) -> SuiteReport {
    let (n, max_part) = (config.n, config.max_part);
    let results = trial_seeds(config, Suite::Torus)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_standard_monomial(n, max_part, &mut rng);
            let t = TorusElement::random(n, &mut rng);
            let x = random_symplectic(n, derive_seed(seed, 1)).expect("valid rank");
            let failures = if verify_torus_weight(&m, &t, &x) {
                Vec::new()
            } else {
                vec![Failure { seed, witness: m.to_string() }]
            };
            (1, failures)
        })
        .collect();
    collect(Suite::Torus, results)
}

fn independence(config: &VerifyConfig) -> SuiteReport {
    let pairs: Vec<WeightPair> = match &config.pair {
        Some(p) => vec![p.clone()],
        None => pairs_in_box(config.n, config.max_part)
            .expect("valid rank")
            .into_iter()
            .filter(WeightPair::multiplicity_nonzero)
            .collect(),
    };
    let base = derive_seed(config.seed, Suite::Independence as u64);
    let outcomes: Vec<_> = pairs
        .par_iter()
        .enumerate()
        .map(|(k, pair)| (pair, verify_independence(pair, config.trials, derive_seed(base, k as u64))))
        .collect();
    let mut report = SuiteReport { suite: Suite::Independence, checks: outcomes.len(), failures: Vec::new(), components: Vec::new() };
    for (pair, out) in outcomes {
        if !out.certified {
            report.failures.push(Failure {
                seed: out.last_seed,
                witness: format!("{pair}: rank {} of {}", out.rank, out.multiplicity),
            });
        }
        report.components.push(ComponentRank {
            shape: pair.to_string(),
            multiplicity: out.multiplicity,
            rank: out.rank,
            batches: out.batches,
        });
    }
    report
}
