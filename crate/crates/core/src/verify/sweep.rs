//! Seeded sweeps of trace and path-integral checks.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{is_prime, CycScalar, PrimeField};
use crate::curve::{curve_frobenius, CurveFrobeniusData, CurveSpec};
use crate::error::{Error, Result};
use crate::heisenberg::brute_trace;
use crate::linalg::FlMatrix;
use crate::symplectic::{
    is_semisimple, random_profile, random_semisimple_symplectic, random_symplectic, SymplecticSpace,
};
use crate::trace::{
    closed_form_data, quad_gauss_brute, quad_gauss_closed, trace_closed_form, trace_via_s_set,
    ClosedTraceSummary, QuadraticForm,
};
use crate::{DEFAULT_DIM_CAP, DEFAULT_ENUMERATION_CAP};

use super::theorem::{check_dimension_identity, check_main_theorem, seeded_model};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    /// Semisimple `g` from random profiles; all checks.
    RandomSemisimple,
    /// Products of random transvections; closed form only when semisimple.
    RandomAny,
    /// Frobenius on `E[ℓ]` of random curves with `q ≡ 1 (mod ℓ)`; `n = 1`.
    Curve,
    /// Quadratic Gauss sums of size `n` only.
    GaussOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub ell: u64,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    #[serde(default = "default_dim_cap")]
    pub dim_cap: usize,
    pub mode: SweepMode,
}

fn default_dim_cap() -> usize {
    DEFAULT_DIM_CAP
}

impl SweepConfig {
    pub fn new(mode: SweepMode, ell: u64, n: usize, trials: usize, seed: u64) -> Self {
        SweepConfig {
            ell,
            n,
            trials,
            seed,
            dim_cap: DEFAULT_DIM_CAP,
            mode,
        }
    }

    pub fn with_dim_cap(mut self, dim_cap: usize) -> Self {
        self.dim_cap = dim_cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell < 3 || !is_prime(self.ell) {
            return Err(Error::InvalidConfig(format!("ell = {} is not an odd prime", self.ell)));
        }
        if self.dim_cap == 0 {
            return Err(Error::InvalidConfig("dim_cap must be positive".into()));
        }
        let pow = |e: usize| (self.ell as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
        match self.mode {
            SweepMode::GaussOnly => {
                if pow(self.n) > DEFAULT_ENUMERATION_CAP {
                    return Err(Error::InvalidConfig(format!(
                        "ℓ^m = {}^{} exceeds the enumeration cap",
                        self.ell, self.n
                    )));
                }
            }
            SweepMode::Curve => {
                if self.n != 1 {
                    return Err(Error::InvalidConfig("curve mode requires n = 1".into()));
                }
                if pow(1) > self.dim_cap as u128 {
                    return Err(Error::InvalidConfig(format!("ℓ exceeds dim_cap = {}", self.dim_cap)));
                }
            }
            SweepMode::RandomSemisimple | SweepMode::RandomAny => {
                if self.n == 0 {
                    return Err(Error::InvalidConfig("n must be positive".into()));
                }
                if self.mode == SweepMode::RandomAny && pow(self.n) > self.dim_cap as u128 {
                    return Err(Error::InvalidConfig(format!(
                        "ℓⁿ = {}^{} exceeds dim_cap = {}",
                        self.ell, self.n, self.dim_cap
                    )));
                }
            }
        }
        Ok(())
    }

    fn field(&self) -> PrimeField {
        PrimeField::new(self.ell).expect("validated")
    }
}

/// Wall-clock time of a trial. Never serialized and ignored by equality, so
/// reports stay reproducible.
#[derive(Clone, Copy, Debug, Default)]
pub struct Elapsed(pub Duration);

impl PartialEq for Elapsed {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Elapsed {}

/// Outcome of one trial. Absent fields were not applicable or not computed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialReport {
    pub index: usize,
    pub seed: u64,
    pub curve: Option<CurveSpec>,
    pub g: Option<Vec<Vec<u64>>>,
    /// Coefficients, constant term first.
    pub charpoly: Option<Vec<u64>>,
    pub n_minus1: Option<usize>,
    pub fixed_dim: Option<usize>,
    pub fbar: Option<Vec<u64>>,
    pub semisimple: Option<bool>,
    pub dimension_identity: Option<bool>,
    pub closed: Option<ClosedTraceSummary>,
    pub trace: Option<CycScalar>,
    pub brute_equal: Option<bool>,
    pub lemma_equal: Option<bool>,
    pub main_equal: Option<bool>,
    pub gauss_equal: Option<bool>,
    pub path_integral: Option<CycScalar>,
    pub q: Option<Vec<Vec<u64>>>,
    pub error: Option<String>,
    pub passed: bool,
    #[serde(skip)]
    pub elapsed: Elapsed,
}

impl TrialReport {
    fn finish(&mut self) {
        let flags = [
            self.dimension_identity,
            self.brute_equal,
            self.lemma_equal,
            self.main_equal,
            self.gauss_equal,
        ];
        self.passed = self.error.is_none() && flags.iter().all(|f| f.unwrap_or(true));
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub config: SweepConfig,
    pub trials: Vec<TrialReport>,
    pub summary: Summary,
}

impl Report {
    pub fn from_trials(config: SweepConfig, trials: Vec<TrialReport>) -> Self {
        let pass = trials.iter().filter(|t| t.passed).count();
        let fail = trials.len() - pass;
        Report {
            config,
            trials,
            summary: Summary { pass, fail },
        }
    }

    /// `0` when every trial passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            super::EXIT_PASS
        } else {
            super::EXIT_MISMATCH
        }
    }
}

/// Seed of trial `index` (one SplitMix64 step from the master seed).
pub fn trial_seed(master: u64, index: usize) -> u64 {
    let mut z = master.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(index as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Runs all trials in parallel; the report is ordered by trial index and
/// depends only on the configuration.
pub fn run_sweep(config: &SweepConfig) -> Result<Report> {
    config.validate()?;
    let trials = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect();
    Ok(Report::from_trials(config.clone(), trials))
}

/// Trial `index` of the sweep.
pub fn run_trial(config: &SweepConfig, index: usize) -> TrialReport {
    let start = Instant::now();
    let seed = trial_seed(config.seed, index);
    let mut report = TrialReport {
        index,
        seed,
        ..TrialReport::default()
    };
    if let Err(e) = fill_trial(config, seed, &mut report) {
        report.error = Some(e.to_string());
    }
    report.finish();
    report.elapsed = Elapsed(start.elapsed());
    report
}

fn fill_trial(config: &SweepConfig, seed: u64, report: &mut TrialReport) -> Result<()> {
    let field = config.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match config.mode {
        SweepMode::GaussOnly => {
            let q = QuadraticForm::random(field, config.n, &mut rng);
            let closed = quad_gauss_closed(&q);
            let brute = quad_gauss_brute(&q, DEFAULT_ENUMERATION_CAP)?;
            report.gauss_equal = Some(brute == closed);
            report.path_integral = Some(closed);
            report.q = Some(q.matrix().to_u64_rows());
            Ok(())
        }
        SweepMode::RandomSemisimple => {
            let space = SymplecticSpace::standard(field, config.n)?;
            let profile = random_profile(field, config.n, &mut rng);
            let g = random_semisimple_symplectic(&space, &profile, rng.gen())?;
            check_symplectomorphism(&space, &g, config.dim_cap, &mut rng, report)
        }
        SweepMode::RandomAny => {
            let space = SymplecticSpace::standard(field, config.n)?;
            let g = random_symplectic(&space, rng.gen());
            check_symplectomorphism(&space, &g, config.dim_cap, &mut rng, report)
        }
        SweepMode::Curve => {
            let data = random_curve(config.ell, &mut rng)?;
            report.curve = Some(data.spec.clone());
            let space = SymplecticSpace::standard(field, 1)?;
            check_symplectomorphism(&space, &data.frobenius_matrix, config.dim_cap, &mut rng, report)
        }
    }
}

const CURVE_ATTEMPTS: usize = 200;
const CURVE_PRIME_BOUND: u64 = 400;

/// A curve over a prime `p < 400` with `p ≡ 1 (mod ℓ)` whose full
/// `ℓ`-torsion is reachable within the enumeration cap.
fn random_curve(ell: u64, rng: &mut ChaCha8Rng) -> Result<CurveFrobeniusData> {
    let primes: Vec<u64> = (5..CURVE_PRIME_BOUND).filter(|&p| is_prime(p) && p % ell == 1).collect();
    if primes.is_empty() {
        return Err(Error::InvalidConfig(format!("no prime p < {CURVE_PRIME_BOUND} with p ≡ 1 mod {ell}")));
    }
    let seed = rng.gen::<u64>();
    for _ in 0..CURVE_ATTEMPTS {
        let p = primes[rng.gen_range(0..primes.len())];
        let a = rng.gen_range(0..p) as i64;
        let b = rng.gen_range(0..p) as i64;
        let Ok(spec) = CurveSpec::new(p, 1, a, b, ell, rng.gen()) else {
            continue;
        };
        match curve_frobenius(&spec, DEFAULT_ENUMERATION_CAP) {
            Ok(data) => return Ok(data),
            Err(Error::TorsionFieldTooLarge { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryExhausted {
        what: "curve with reachable ℓ-torsion",
        attempts: CURVE_ATTEMPTS,
        seed,
    })
}

/// Fills the trace, lemma and path-integral fields for `g`.
fn check_symplectomorphism(
    space: &SymplecticSpace,
    g: &FlMatrix,
    dim_cap: usize,
    rng: &mut ChaCha8Rng,
    report: &mut TrialReport,
) -> Result<()> {
    let field = space.field();
    space.ensure_symplectomorphism(g)?;
    report.g = Some(g.to_u64_rows());
    let data = closed_form_data(g)?;
    report.charpoly = Some(data.charpoly.coeff_values());
    report.n_minus1 = Some(data.n_minus1);
    report.fixed_dim = Some(data.fixed_dim);
    report.fbar = Some(data.fbar.coeff_values());
    let semisimple = is_semisimple(g)?;
    report.semisimple = Some(semisimple);

    let model = seeded_model(space, rng.gen(), dim_cap)?;
    let brute = match &model {
        Some(rep) => {
            let brute = brute_trace(rep, g)?;
            report.lemma_equal = Some(trace_via_s_set(rep, g)? == brute);
            Some(brute)
        }
        None => None,
    };

    let mut closed_value = None;
    if semisimple {
        report.dimension_identity = Some(check_dimension_identity(g)?);
        let closed = trace_closed_form(g)?;
        report.closed = Some(closed.summary());
        report.brute_equal = brute.as_ref().map(|b| *b == closed.value);
        let q = QuadraticForm::random(field, data.fixed_dim, rng);
        let main = check_main_theorem(space, g, &q, None)?;
        let mut equal = main.equal;
        if let Some(b) = &brute {
            equal &= *b == main.trace_closed;
        }
        report.main_equal = Some(equal);
        report.path_integral = Some(main.path_integral_closed);
        report.q = Some(q.matrix().to_u64_rows());
        closed_value = Some(closed.value);
    }
    report.trace = brute.or(closed_value);
    Ok(())
}

/// The curve pipeline for one user-supplied curve followed by every
/// applicable check on its Frobenius, with `Q` drawn from the curve's seed.
pub fn check_curve(spec: &CurveSpec, dim_cap: usize) -> Result<(CurveFrobeniusData, TrialReport)> {
    let start = Instant::now();
    let data = curve_frobenius(spec, DEFAULT_ENUMERATION_CAP)?;
    let space = SymplecticSpace::standard(spec.ell_field(), 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut report = TrialReport {
        seed: spec.seed,
        curve: Some(spec.clone()),
        ..TrialReport::default()
    };
    if let Err(e) = check_symplectomorphism(&space, &data.frobenius_matrix, dim_cap, &mut rng, &mut report) {
        report.error = Some(e.to_string());
    }
    report.finish();
    report.elapsed = Elapsed(start.elapsed());
    Ok((data, report))
}
