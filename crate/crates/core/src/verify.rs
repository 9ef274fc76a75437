//! Sweep verifier: samples each identity's domain with singularity guards,
//! compares the naive-summation oracle against the closed form, and
//! aggregates residual reports.
//!
//! Sampling is fully deterministic: ChaCha8 seeded with the plan seed, one
//! independent stream per n (`set_stream(n)`), f64 draws from the top 53
//! bits of `next_u64`, bounded integers by bitmask rejection. Identical
//! plans therefore produce identical reports, independent of evaluation
//! order.

use crate::closed_form::{
    self, dist_to_cos_unity, dist_to_sin_zeros, dist_to_tan_poles, Angle, EvalError,
    DEFAULT_POLE_GUARD, DEFAULT_TOLERANCE,
};
use crate::exact::{
    alt_binom_even, alt_binom_odd, bigint_to_f64, gauss_pow, gauss_product, FactorList,
    GaussianInt,
};
use crate::oracle;
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

/// Name of the sample generator, embedded in every report.
pub const PRNG_NAME: &str = "chacha8";

/// The verifiable identity instances.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Even alternating binomial sum vs the real part of (x+iy)^n.
    T21Cos,
    /// Odd alternating binomial sum vs the imaginary part of (x+iy)^n.
    T21Sin,
    /// Sum of the squared parts vs (x²+y²)^n.
    T21Pyth,
    /// Alternating binomial sum (x = y = 1) vs the real part of (1+i)^n.
    C21Cos,
    /// Odd variant of the above vs the imaginary part of (1+i)^n.
    C21Sin,
    /// Gaussian-product cos/sin parts are the exact product's integers.
    T22,
    /// 1 + 2Σ cos kx vs its cosine-difference kernel.
    L21,
    /// (Σ sin kx)² + (Σ cos kx)² vs (1 − cos nx)/(1 − cos x).
    T23,
    /// Σ 2^{−k} tan(x/2^k) vs the two-term cotangent difference.
    T24,
    /// Σ tan kx tan(k+1)x vs −(n+1) + tan(n+1)x/tan x.
    T25,
    /// Σ tan kx (tan(k−1)x + tan(k+1)x) vs its tangent-ratio form.
    T26,
}

/// What kind of input a theorem's samples carry.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SampleDomain {
    /// Random integer pair (x, y) in [−9, 9]² \ {(0,0)}.
    IntPair,
    /// No free variable beyond n.
    NOnly,
    /// List of n Gaussian-integer factors with x_k ≠ 0.
    Factors,
    /// Angle drawn from the plan's interval.
    Angular,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::T21Cos,
        TheoremId::T21Sin,
        TheoremId::T21Pyth,
        TheoremId::C21Cos,
        TheoremId::C21Sin,
        TheoremId::T22,
        TheoremId::L21,
        TheoremId::T23,
        TheoremId::T24,
        TheoremId::T25,
        TheoremId::T26,
    ];

    /// The five angular identities, in sweep order.
    pub const ANGULAR: [TheoremId; 5] = [
        TheoremId::T23,
        TheoremId::L21,
        TheoremId::T24,
        TheoremId::T25,
        TheoremId::T26,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T21Cos => "t2_1_cos",
            TheoremId::T21Sin => "t2_1_sin",
            TheoremId::T21Pyth => "t2_1_pyth",
            TheoremId::C21Cos => "c2_1_cos",
            TheoremId::C21Sin => "c2_1_sin",
            TheoremId::T22 => "t2_2",
            TheoremId::L21 => "l2_1",
            TheoremId::T23 => "t2_3",
            TheoremId::T24 => "t2_4",
            TheoremId::T25 => "t2_5",
            TheoremId::T26 => "t2_6",
        }
    }

    pub fn domain(self) -> SampleDomain {
        match self {
            TheoremId::T21Cos | TheoremId::T21Sin | TheoremId::T21Pyth => SampleDomain::IntPair,
            TheoremId::C21Cos | TheoremId::C21Sin => SampleDomain::NOnly,
            TheoremId::T22 => SampleDomain::Factors,
            TheoremId::L21 | TheoremId::T23 | TheoremId::T24 | TheoremId::T25 | TheoremId::T26 => {
                SampleDomain::Angular
            }
        }
    }

    /// True for identities compared in exact integer arithmetic.
    pub fn is_exact(self) -> bool {
        !matches!(self.domain(), SampleDomain::Angular)
    }

    /// Smallest n the identity is stated for.
    pub fn min_n(self) -> u32 {
        match self.domain() {
            SampleDomain::Angular => 1,
            SampleDomain::Factors => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem '{0}' (expected one of t2_1_cos, t2_1_sin, t2_1_pyth, c2_1_cos, c2_1_sin, t2_2, l2_1, t2_3, t2_4, t2_5, t2_6)")]
pub struct UnknownTheorem(pub String);

/// Everything that pins down one verification sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePlan {
    pub theorem: TheoremId,
    /// Inclusive n interval.
    pub n_range: (u32, u32),
    pub samples_per_n: u32,
    pub seed: u64,
    pub pole_guard: f64,
    /// Relative-error bound, |lhs − rhs| / max(|lhs|, |rhs|, 1).
    pub tolerance: f64,
    /// Interval angles are drawn from; only used by angular theorems.
    pub angle_interval: (f64, f64),
}

impl SamplePlan {
    pub fn new(theorem: TheoremId, n_range: (u32, u32)) -> Self {
        Self {
            theorem,
            n_range,
            samples_per_n: 500,
            seed: 42,
            pole_guard: DEFAULT_POLE_GUARD,
            tolerance: DEFAULT_TOLERANCE,
            angle_interval: (0.0, TAU),
        }
    }

    pub fn validate(&self) -> Result<(), PlanError> {
        if self.n_range.0 > self.n_range.1 {
            return Err(PlanError::EmptyRange {
                lo: self.n_range.0,
                hi: self.n_range.1,
            });
        }
        if self.n_range.0 < self.theorem.min_n() {
            return Err(PlanError::OrderTooSmall {
                theorem: self.theorem.name(),
                min: self.theorem.min_n(),
            });
        }
        if self.samples_per_n == 0 {
            return Err(PlanError::ZeroSamples);
        }
        if !(self.pole_guard > 0.0) {
            return Err(PlanError::NonPositiveGuard);
        }
        if !(self.tolerance > 0.0) {
            return Err(PlanError::NonPositiveTolerance);
        }
        let (lo, hi) = self.angle_interval;
        if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
            return Err(PlanError::BadAngleInterval { lo, hi });
        }
        Ok(())
    }

    /// n-only identities have nothing to resample; one draw per n.
    fn effective_samples(&self) -> u32 {
        match self.theorem.domain() {
            SampleDomain::NOnly => 1,
            _ => self.samples_per_n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PlanError {
    #[error("n range {lo}..{hi} is empty")]
    EmptyRange { lo: u32, hi: u32 },
    #[error("theorem {theorem} requires n >= {min}")]
    OrderTooSmall { theorem: &'static str, min: u32 },
    #[error("samples_per_n must be >= 1")]
    ZeroSamples,
    #[error("pole_guard must be > 0")]
    NonPositiveGuard,
    #[error("tolerance must be > 0")]
    NonPositiveTolerance,
    #[error("angle interval ({lo}, {hi}) is not a nonempty finite interval")]
    BadAngleInterval { lo: f64, hi: f64 },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("theorem {0} has no angular domain; pole distance is undefined")]
pub struct NoAngularDomain(pub &'static str);

/// One drawn input.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SampleValue {
    Angle { x: f64 },
    IntPair { x: i64, y: i64 },
    Factors { factors: Vec<(i64, i64)> },
    NOnly,
}

/// A drawn sample, possibly marked as guard-skipped.
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub n: u32,
    pub value: SampleValue,
    /// Distance to the theorem's pole set; `None` for exact-domain theorems.
    pub pole_distance: Option<f64>,
    /// Drawn but excluded from comparison by the pole guard.
    pub skipped: bool,
}

/// Minimum distance, over the theorem's pole set, from the relevant scaled
/// arguments to the nearest singularity.
pub fn pole_distance(theorem: TheoremId, n: u32, x: Angle) -> Result<f64, NoAngularDomain> {
    let x = x.radians();
    match theorem {
        TheoremId::T23 | TheoremId::L21 => Ok(dist_to_cos_unity(x)),
        TheoremId::T24 => Ok((0..=n)
            .map(|k| dist_to_sin_zeros(x / 2f64.powi(k as i32)))
            .fold(f64::INFINITY, f64::min)),
        TheoremId::T25 | TheoremId::T26 => {
            let tan_poles = (1..=n + 1)
                .map(|k| dist_to_tan_poles(f64::from(k) * x))
                .fold(f64::INFINITY, f64::min);
            Ok(tan_poles.min(dist_to_sin_zeros(x)))
        }
        other => Err(NoAngularDomain(other.name())),
    }
}

/// 53-bit uniform draw in [0, 1).
fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform integer in [lo, hi] by bitmask rejection.
fn int_in(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    let span = (hi - lo + 1) as u64;
    let mask = span.next_power_of_two() - 1;
    loop {
        let v = rng.next_u64() & mask;
        if v < span {
            return lo + v as i64;
        }
    }
}

fn draw_value(rng: &mut ChaCha8Rng, plan: &SamplePlan, n: u32) -> SampleValue {
    match plan.theorem.domain() {
        SampleDomain::Angular => {
            let (lo, hi) = plan.angle_interval;
            SampleValue::Angle {
                x: lo + unit_f64(rng) * (hi - lo),
            }
        }
        SampleDomain::IntPair => loop {
            let x = int_in(rng, -9, 9);
            let y = int_in(rng, -9, 9);
            if (x, y) != (0, 0) {
                return SampleValue::IntPair { x, y };
            }
        },
        SampleDomain::Factors => {
            let factors = (0..n)
                .map(|_| {
                    let x = loop {
                        let v = int_in(rng, -9, 9);
                        if v != 0 {
                            break v;
                        }
                    };
                    (x, int_in(rng, -9, 9))
                })
                .collect();
            SampleValue::Factors { factors }
        }
        SampleDomain::NOnly => SampleValue::NOnly,
    }
}

/// Draw the plan's full sample list. Samples inside the pole guard are
/// still drawn (determinism) but marked `skipped`.
pub fn draw_samples(plan: &SamplePlan) -> Result<Vec<Sample>, PlanError> {
    plan.validate()?;
    let mut samples = Vec::new();
    for n in plan.n_range.0..=plan.n_range.1 {
        let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
        rng.set_stream(u64::from(n));
        for _ in 0..plan.effective_samples() {
            let value = draw_value(&mut rng, plan, n);
            let pole_distance = match &value {
                SampleValue::Angle { x } => Some(
                    pole_distance(plan.theorem, n, Angle::new(*x).expect("finite draw"))
                        .expect("angular theorem"),
                ),
                _ => None,
            };
            let skipped = pole_distance.is_some_and(|d| d < plan.pole_guard);
            samples.push(Sample {
                n,
                value,
                pole_distance,
                skipped,
            });
        }
    }
    Ok(samples)
}

/// Outcome of checking one sample.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckResult {
    Compared {
        lhs: String,
        rhs: String,
        rel_err: f64,
        pass: bool,
    },
    /// A pole was hit while evaluating; the sample is excluded, never failed.
    Skipped { reason: String },
}

/// |lhs − rhs| / max(|lhs|, |rhs|, 1): relative error with an absolute
/// floor so zero crossings stay testable.
pub fn relative_error(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0)
}

fn exact_compare(lhs: &BigInt, rhs: &BigInt, label_scale: Option<f64>) -> CheckResult {
    let pass = lhs == rhs;
    let rel_err = if pass {
        0.0
    } else {
        let l = bigint_to_f64(lhs);
        let r = bigint_to_f64(rhs);
        let floor = label_scale.unwrap_or(1.0);
        (l - r).abs() / l.abs().max(r.abs()).max(floor)
    };
    CheckResult::Compared {
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        rel_err,
        pass,
    }
}

fn float_compare(lhs: f64, rhs: f64, tolerance: f64) -> CheckResult {
    let rel_err = relative_error(lhs, rhs);
    CheckResult::Compared {
        lhs: format!("{lhs:?}"),
        rhs: format!("{rhs:?}"),
        rel_err,
        pass: rel_err <= tolerance,
    }
}

fn skip_from(err: EvalError) -> CheckResult {
    CheckResult::Skipped {
        reason: err.to_string(),
    }
}

fn check_t22(factors: &[(i64, i64)], tolerance: f64) -> CheckResult {
    let list = match FactorList::from_pairs(factors) {
        Ok(l) => l,
        Err(e) => {
            return CheckResult::Skipped {
                reason: e.to_string(),
            }
        }
    };
    let exact = gauss_product(&list);
    let float = match closed_form::gauss_product_closed(&list) {
        Ok(p) => p,
        Err(e) => return skip_from(e),
    };
    let modulus = bigint_to_f64(&exact.norm()).sqrt();
    let exact_re = bigint_to_f64(&exact.re);
    let exact_im = bigint_to_f64(&exact.im);
    let deviation = (float.cos_part - exact_re)
        .abs()
        .max((float.sin_part - exact_im).abs());
    let within = deviation <= tolerance * modulus.max(1.0);
    // Rounding the float parts must reproduce the exact integers whenever
    // the tolerance band itself guarantees sub-half-integer error; beyond
    // that the modulus has outgrown float resolution and only the
    // deviation bound is decidable.
    let rounding_decidable = tolerance * modulus.max(1.0) < 0.5;
    let rounding_ok = !rounding_decidable
        || (BigInt::from(float.cos_part.round() as i128) == exact.re
            && BigInt::from(float.sin_part.round() as i128) == exact.im);
    let pass = within && rounding_ok;
    CheckResult::Compared {
        lhs: format!("({:?}, {:?})", float.cos_part, float.sin_part),
        rhs: exact.to_string(),
        rel_err: if pass { 0.0 } else { deviation / modulus.max(1.0) },
        pass,
    }
}

/// Compare oracle and closed form on one input.
///
/// Exact-domain theorems compare in integer arithmetic and report a zero
/// residual on success; angular theorems compare at the given tolerance.
/// Pole errors surface as [`CheckResult::Skipped`], never as failures.
///
/// # Panics
///
/// Panics if the sample value's kind does not match the theorem's domain.
pub fn check_identity(
    theorem: TheoremId,
    n: u32,
    value: &SampleValue,
    tolerance: f64,
    pole_guard: f64,
) -> CheckResult {
    match (theorem, value) {
        (TheoremId::T21Cos, SampleValue::IntPair { x, y }) => {
            let z = GaussianInt::from_i64(*x, *y);
            let (even, _) = oracle::binom_series_pair(&z.re, &z.im, n);
            exact_compare(&even, &gauss_pow(&z, n).re, None)
        }
        (TheoremId::T21Sin, SampleValue::IntPair { x, y }) => {
            let z = GaussianInt::from_i64(*x, *y);
            let (_, odd) = oracle::binom_series_pair(&z.re, &z.im, n);
            exact_compare(&odd, &gauss_pow(&z, n).im, None)
        }
        (TheoremId::T21Pyth, SampleValue::IntPair { x, y }) => {
            let z = GaussianInt::from_i64(*x, *y);
            let (even, odd) = oracle::binom_series_pair(&z.re, &z.im, n);
            let squares = &even * &even + &odd * &odd;
            exact_compare(&squares, &z.norm().pow(n), None)
        }
        (TheoremId::C21Cos, SampleValue::NOnly) => exact_compare(
            &alt_binom_even(n),
            &gauss_pow(&GaussianInt::from_i64(1, 1), n).re,
            None,
        ),
        (TheoremId::C21Sin, SampleValue::NOnly) => exact_compare(
            &alt_binom_odd(n),
            &gauss_pow(&GaussianInt::from_i64(1, 1), n).im,
            None,
        ),
        (TheoremId::T22, SampleValue::Factors { factors }) => check_t22(factors, tolerance),
        (TheoremId::T23, SampleValue::Angle { x }) => {
            let x = match Angle::new(*x) {
                Ok(a) => a,
                Err(e) => return skip_from(e),
            };
            let lhs = oracle::sin_cos_square_sum(n, x);
            match closed_form::dirichlet_rhs(n, x, pole_guard) {
                Ok(rhs) => float_compare(lhs, rhs, tolerance),
                Err(e) => skip_from(e),
            }
        }
        (TheoremId::L21, SampleValue::Angle { x }) => {
            let x = match Angle::new(*x) {
                Ok(a) => a,
                Err(e) => return skip_from(e),
            };
            let lhs = oracle::cos_partial_sum(n, x);
            match closed_form::cos_partial_rhs(n, x, pole_guard) {
                Ok(rhs) => float_compare(lhs, rhs, tolerance),
                Err(e) => skip_from(e),
            }
        }
        (TheoremId::T24, SampleValue::Angle { x }) => {
            angular_compare(*x, tolerance, |x| {
                Ok((
                    oracle::tan_half_sum(n, x, pole_guard)?,
                    closed_form::tan_half_rhs(n, x, pole_guard)?,
                ))
            })
        }
        (TheoremId::T25, SampleValue::Angle { x }) => {
            angular_compare(*x, tolerance, |x| {
                Ok((
                    oracle::tan_pair_sum(n, x, pole_guard)?,
                    closed_form::tan_pair_rhs(n, x, pole_guard)?,
                ))
            })
        }
        (TheoremId::T26, SampleValue::Angle { x }) => {
            angular_compare(*x, tolerance, |x| {
                Ok((
                    oracle::tan_triple_sum(n, x, pole_guard)?,
                    closed_form::tan_triple_rhs(n, x, pole_guard)?,
                ))
            })
        }
        (theorem, value) => panic!(
            "sample value {value:?} does not belong to theorem {theorem}'s domain"
        ),
    }
}

fn angular_compare(
    x: f64,
    tolerance: f64,
    eval: impl FnOnce(Angle) -> Result<(f64, f64), EvalError>,
) -> CheckResult {
    let x = match Angle::new(x) {
        Ok(a) => a,
        Err(e) => return skip_from(e),
    };
    match eval(x) {
        Ok((lhs, rhs)) => float_compare(lhs, rhs, tolerance),
        Err(e) => skip_from(e),
    }
}

/// The worst-residual sample of a sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WorstCase {
    pub n: u32,
    pub input: SampleValue,
}

/// One failed comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailureRecord {
    pub n: u32,
    pub input: SampleValue,
    pub lhs: String,
    pub rhs: String,
    pub rel_err: f64,
}

/// Residual statistics of one verification sweep. Field order is the
/// serialized schema; it is stable across runs and versions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub theorem: String,
    pub n_range: String,
    pub samples: u32,
    pub seed: u64,
    pub tolerance: f64,
    pub pole_guard: f64,
    pub evaluated: u64,
    pub skipped_near_pole: u64,
    pub max_rel_err: f64,
    pub worst_case: Option<WorstCase>,
    pub failures: Vec<FailureRecord>,
    pub pass: bool,
    /// True when nothing was evaluated; such sweeps pass but deserve a look
    /// at the guards.
    pub vacuous: bool,
    pub prng: String,
    pub version: String,
}

/// Run the plan: draw, guard, compare, aggregate.
pub fn sweep(plan: &SamplePlan) -> Result<IdentityReport, PlanError> {
    let samples = draw_samples(plan)?;
    let mut evaluated = 0u64;
    let mut skipped = 0u64;
    let mut max_rel_err = 0.0f64;
    let mut worst_case: Option<WorstCase> = None;
    let mut failures = Vec::new();

    for sample in &samples {
        if sample.skipped {
            skipped += 1;
            continue;
        }
        match check_identity(
            plan.theorem,
            sample.n,
            &sample.value,
            plan.tolerance,
            plan.pole_guard,
        ) {
            CheckResult::Skipped { .. } => skipped += 1,
            CheckResult::Compared {
                lhs,
                rhs,
                rel_err,
                pass,
            } => {
                evaluated += 1;
                if worst_case.is_none() || rel_err > max_rel_err {
                    max_rel_err = rel_err;
                    worst_case = Some(WorstCase {
                        n: sample.n,
                        input: sample.value.clone(),
                    });
                }
                if !pass {
                    failures.push(FailureRecord {
                        n: sample.n,
                        input: sample.value.clone(),
                        lhs,
                        rhs,
                        rel_err,
                    });
                }
            }
        }
    }

    // pass ⇔ failures empty; vacuous sweeps pass but carry the flag.
    let pass = failures.is_empty();
    Ok(IdentityReport {
        theorem: plan.theorem.name().to_string(),
        n_range: format!("{}..{}", plan.n_range.0, plan.n_range.1),
        samples: plan.samples_per_n,
        seed: plan.seed,
        tolerance: plan.tolerance,
        pole_guard: plan.pole_guard,
        evaluated,
        skipped_near_pole: skipped,
        max_rel_err,
        worst_case,
        failures,
        pass,
        vacuous: evaluated == 0,
        prng: PRNG_NAME.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn ang(x: f64) -> Angle {
        Angle::new(x).unwrap()
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!("bogus".parse::<TheoremId>().is_err());
    }

    #[test]
    fn pole_distance_examples() {
        // Distance of x = π to the nearest multiple of 2π.
        let d = pole_distance(TheoremId::T23, 5, ang(PI)).unwrap();
        assert!((d - PI).abs() < 1e-12);

        // 2x = π/2 is a tangent pole.
        assert_eq!(pole_distance(TheoremId::T25, 1, ang(FRAC_PI_4)).unwrap(), 0.0);

        // Direct enumeration over {x, x/2, x/4} against the sin zero set.
        let x = 0.1;
        let expected = [x, x / 2.0, x / 4.0]
            .into_iter()
            .map(dist_to_sin_zeros)
            .fold(f64::INFINITY, f64::min);
        let d = pole_distance(TheoremId::T24, 2, ang(x)).unwrap();
        assert_eq!(d, expected);
        assert!((d - 0.025).abs() < 1e-12);
    }

    #[test]
    fn pole_distance_rejects_exact_theorems() {
        for t in [TheoremId::T21Cos, TheoremId::C21Sin, TheoremId::T22] {
            assert!(pole_distance(t, 3, ang(1.0)).is_err());
        }
    }

    #[test]
    fn draw_is_deterministic() {
        let plan = SamplePlan::new(TheoremId::T25, (1, 6));
        assert_eq!(draw_samples(&plan).unwrap(), draw_samples(&plan).unwrap());
    }

    #[test]
    fn skipped_marks_match_an_independent_refilter() {
        let mut plan = SamplePlan::new(TheoremId::T25, (8, 8));
        plan.samples_per_n = 1000;
        plan.pole_guard = 1e-2;
        let samples = draw_samples(&plan).unwrap();
        assert_eq!(samples.len(), 1000);
        for s in &samples {
            let SampleValue::Angle { x } = s.value else {
                panic!("angular sample expected")
            };
            let d = pole_distance(plan.theorem, s.n, ang(x)).unwrap();
            assert_eq!(s.skipped, d < plan.pole_guard, "x = {x}");
        }
        assert!(samples.iter().any(|s| s.skipped), "guard 1e-2 at n = 8 skips some draws");
    }

    #[test]
    fn angle_draws_respect_interval() {
        let mut plan = SamplePlan::new(TheoremId::T23, (1, 1));
        plan.angle_interval = (1.0, 2.5);
        plan.samples_per_n = 200;
        for s in draw_samples(&plan).unwrap() {
            let SampleValue::Angle { x } = s.value else {
                panic!()
            };
            assert!((1.0..2.5).contains(&x));
        }
    }

    #[test]
    fn check_examples() {
        let r = check_identity(
            TheoremId::T21Cos,
            2,
            &SampleValue::IntPair { x: 2, y: 1 },
            1e-8,
            1e-4,
        );
        assert_eq!(
            r,
            CheckResult::Compared {
                lhs: "3".into(),
                rhs: "3".into(),
                rel_err: 0.0,
                pass: true
            }
        );

        match check_identity(TheoremId::T23, 1, &SampleValue::Angle { x: 1.0 }, 1e-9, 1e-4) {
            CheckResult::Compared { rel_err, pass, .. } => {
                assert!(pass && rel_err < 1e-12);
            }
            other => panic!("expected comparison, got {other:?}"),
        }

        match check_identity(
            TheoremId::T25,
            1,
            &SampleValue::Angle { x: PI / 6.0 },
            1e-9,
            1e-4,
        ) {
            CheckResult::Compared { rel_err, pass, .. } => assert!(pass && rel_err < 1e-12),
            other => panic!("expected comparison, got {other:?}"),
        }
    }

    #[test]
    fn pole_hit_inside_check_becomes_skip() {
        let r = check_identity(
            TheoremId::T25,
            1,
            &SampleValue::Angle { x: FRAC_PI_4 },
            1e-9,
            1e-4,
        );
        assert!(matches!(r, CheckResult::Skipped { .. }));
    }

    #[test]
    fn vacuous_sweep_passes_with_flag() {
        let mut plan = SamplePlan::new(TheoremId::T23, (1, 1));
        // The whole interval sits inside the guard zone around 0.
        plan.angle_interval = (1e-9, 5e-5);
        plan.pole_guard = 1e-4;
        plan.samples_per_n = 50;
        let report = sweep(&plan).unwrap();
        assert_eq!(report.evaluated, 0);
        assert!(report.pass);
        assert!(report.vacuous);
        assert_eq!(report.skipped_near_pole, 50);
    }

    #[test]
    fn report_counts_add_up() {
        let mut plan = SamplePlan::new(TheoremId::T24, (1, 10));
        plan.samples_per_n = 100;
        plan.pole_guard = 1e-3;
        let report = sweep(&plan).unwrap();
        assert!(report.pass, "failures: {:?}", report.failures);
        assert_eq!(report.evaluated + report.skipped_near_pole, 1000);
        assert!(!report.vacuous);
    }

    #[test]
    fn n_only_sweeps_draw_one_sample_per_n() {
        let mut plan = SamplePlan::new(TheoremId::C21Cos, (0, 16));
        plan.samples_per_n = 500;
        let report = sweep(&plan).unwrap();
        assert_eq!(report.evaluated, 17);
        assert_eq!(report.max_rel_err, 0.0);
        assert!(report.pass);
    }

    #[test]
    fn plan_validation_errors() {
        let mut plan = SamplePlan::new(TheoremId::T23, (3, 2));
        assert!(matches!(
            plan.validate(),
            Err(PlanError::EmptyRange { .. })
        ));
        plan.n_range = (0, 4);
        assert!(matches!(
            plan.validate(),
            Err(PlanError::OrderTooSmall { .. })
        ));
        plan.n_range = (1, 4);
        plan.pole_guard = 0.0;
        assert!(matches!(plan.validate(), Err(PlanError::NonPositiveGuard)));
    }
}
