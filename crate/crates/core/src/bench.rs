//! Wall-clock comparison of the naive summation against the closed form.
//!
//! Timing runs strictly single-threaded. Each measurement batches the
//! evaluation in an inner loop calibrated to at least ~10 µs, because one
//! closed-form call sits near the timer's resolution floor; the batched
//! wall times are what the record stores raw. Input parsing and the
//! residual comparison happen outside every timed region.

use crate::closed_form::{self, Angle, EvalError};
use crate::exact::{alt_binom_even, alt_binom_odd, bigint_to_f64, gauss_pow, GaussianInt};
use crate::oracle;
use crate::verify::{pole_distance, relative_error, SampleValue, TheoremId};
use serde::Serialize;
use std::hint::black_box;
use std::time::Instant;

/// Smallest batched region the calibrator accepts, seconds.
const MIN_TIMED_REGION: f64 = 10e-6;

/// 100 nominal 1 ns timer ticks; medians below this are flagged.
const TIMER_RESOLUTION_FLOOR: f64 = 100e-9;

/// Timing comparison of naive summation vs closed form for one input.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub theorem: String,
    pub n: u32,
    pub input: SampleValue,
    pub reps: u32,
    /// Median per-evaluation wall time of the naive sum, seconds.
    pub naive_time: f64,
    /// Median per-evaluation wall time of the closed form, seconds.
    pub closed_time: f64,
    /// naive_time / closed_time.
    pub speedup: f64,
    /// Relative error between the two values; a fast-but-wrong closed form
    /// cannot pass silently.
    pub residual: f64,
    /// Inner-loop batch sizes the calibrator settled on.
    pub naive_iters: u64,
    pub closed_iters: u64,
    /// Raw per-rep batched wall times, seconds, in measurement order.
    pub raw_naive: Vec<f64>,
    pub raw_closed: Vec<f64>,
    /// Set when either raw median is under 100 timer ticks.
    pub timer_warning: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BenchError {
    #[error("reps must be >= 3, got {0}")]
    RepsTooSmall(u32),
    #[error("theorem {0} cannot be benchmarked from an (n, x) input")]
    Unsupported(String),
    #[error("input does not pass the pole guard: {0}")]
    NearPole(String),
    #[error("theorem {theorem} needs {needed}")]
    WrongInput {
        theorem: String,
        needed: &'static str,
    },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

fn time_batch(mut eval: impl FnMut() -> f64, iters: u64) -> f64 {
    let start = Instant::now();
    for _ in 0..iters {
        black_box(eval());
    }
    start.elapsed().as_secs_f64()
}

/// Double the batch size until one batch takes at least [`MIN_TIMED_REGION`].
fn calibrate(eval: &mut impl FnMut() -> f64) -> u64 {
    let mut iters = 1u64;
    loop {
        let elapsed = time_batch(&mut *eval, iters);
        if elapsed >= MIN_TIMED_REGION || iters >= 1 << 30 {
            return iters;
        }
        iters *= 2;
    }
}

fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        0.5 * (v[mid - 1] + v[mid])
    }
}

struct EvalPair<'a> {
    naive: Box<dyn FnMut() -> f64 + 'a>,
    closed: Box<dyn FnMut() -> f64 + 'a>,
}

/// Build the (naive, closed) evaluation pair, validating the input kind and
/// pole guard up front.
fn eval_pair<'a>(
    theorem: TheoremId,
    n: u32,
    input: &SampleValue,
    guard: f64,
) -> Result<EvalPair<'a>, BenchError> {
    let wrong = |needed: &'static str| BenchError::WrongInput {
        theorem: theorem.name().to_string(),
        needed,
    };
    match theorem {
        TheoremId::T22 => Err(BenchError::Unsupported(theorem.name().to_string())),
        TheoremId::T21Cos | TheoremId::T21Sin | TheoremId::T21Pyth => {
            let &SampleValue::IntPair { x, y } = input else {
                return Err(wrong("an integer pair (--x, --y)"));
            };
            let z = GaussianInt::from_i64(x, y);
            let naive_z = z.clone();
            let naive: Box<dyn FnMut() -> f64> = match theorem {
                TheoremId::T21Cos => Box::new(move || {
                    bigint_to_f64(&oracle::binom_series_pair(&naive_z.re, &naive_z.im, n).0)
                }),
                TheoremId::T21Sin => Box::new(move || {
                    bigint_to_f64(&oracle::binom_series_pair(&naive_z.re, &naive_z.im, n).1)
                }),
                _ => Box::new(move || {
                    let (e, o) = oracle::binom_series_pair(&naive_z.re, &naive_z.im, n);
                    bigint_to_f64(&(&e * &e + &o * &o))
                }),
            };
            let closed: Box<dyn FnMut() -> f64> = match theorem {
                TheoremId::T21Cos => Box::new(move || bigint_to_f64(&gauss_pow(&z, n).re)),
                TheoremId::T21Sin => Box::new(move || bigint_to_f64(&gauss_pow(&z, n).im)),
                _ => Box::new(move || bigint_to_f64(&z.norm().pow(n))),
            };
            Ok(EvalPair { naive, closed })
        }
        TheoremId::C21Cos | TheoremId::C21Sin => {
            if !matches!(input, SampleValue::NOnly) {
                return Err(wrong("no input beyond n"));
            }
            let one_one = GaussianInt::from_i64(1, 1);
            let (naive, closed): (Box<dyn FnMut() -> f64>, Box<dyn FnMut() -> f64>) =
                if theorem == TheoremId::C21Cos {
                    (
                        Box::new(move || bigint_to_f64(&alt_binom_even(n))),
                        Box::new(move || bigint_to_f64(&gauss_pow(&one_one, n).re)),
                    )
                } else {
                    (
                        Box::new(move || bigint_to_f64(&alt_binom_odd(n))),
                        Box::new(move || bigint_to_f64(&gauss_pow(&one_one, n).im)),
                    )
                };
            Ok(EvalPair { naive, closed })
        }
        angular => {
            let &SampleValue::Angle { x } = input else {
                return Err(wrong("an angle (--x)"));
            };
            let x = Angle::new(x)?;
            let distance =
                pole_distance(angular, n, x).expect("angular theorems have a pole set");
            if distance < guard {
                return Err(BenchError::NearPole(format!(
                    "x = {} is {distance:.3e} rad from the pole set of {angular} (guard {guard:.1e})",
                    x.radians()
                )));
            }
            let (naive, closed): (Box<dyn FnMut() -> f64>, Box<dyn FnMut() -> f64>) =
                match angular {
                    TheoremId::T23 => (
                        Box::new(move || oracle::sin_cos_square_sum(n, x)),
                        Box::new(move || {
                            closed_form::dirichlet_rhs(n, x, guard).expect("guarded")
                        }),
                    ),
                    TheoremId::L21 => (
                        Box::new(move || oracle::cos_partial_sum(n, x)),
                        Box::new(move || {
                            closed_form::cos_partial_rhs(n, x, guard).expect("guarded")
                        }),
                    ),
                    TheoremId::T24 => (
                        Box::new(move || oracle::tan_half_sum(n, x, guard).expect("guarded")),
                        Box::new(move || closed_form::tan_half_rhs(n, x, guard).expect("guarded")),
                    ),
                    TheoremId::T25 => (
                        Box::new(move || oracle::tan_pair_sum(n, x, guard).expect("guarded")),
                        Box::new(move || closed_form::tan_pair_rhs(n, x, guard).expect("guarded")),
                    ),
                    TheoremId::T26 => (
                        Box::new(move || oracle::tan_triple_sum(n, x, guard).expect("guarded")),
                        Box::new(move || {
                            closed_form::tan_triple_rhs(n, x, guard).expect("guarded")
                        }),
                    ),
                    _ => unreachable!("exact theorems handled above"),
                };
            Ok(EvalPair { naive, closed })
        }
    }
}

/// Time the naive and closed evaluations of one theorem instance.
///
/// Median-of-reps wall times per evaluation; the residual between the two
/// values rides along so correctness is never traded for speed silently.
pub fn time_pair(
    theorem: TheoremId,
    n: u32,
    input: &SampleValue,
    reps: u32,
    pole_guard: f64,
) -> Result<BenchRecord, BenchError> {
    if reps < 3 {
        return Err(BenchError::RepsTooSmall(reps));
    }
    let mut pair = eval_pair(theorem, n, input, pole_guard)?;

    // Residual first, outside any timed region; exact routes yield
    // identical values and a zero residual.
    let naive_value = (pair.naive)();
    let closed_value = (pair.closed)();
    let residual = relative_error(naive_value, closed_value);

    let naive_iters = calibrate(&mut pair.naive);
    let raw_naive: Vec<f64> = (0..reps)
        .map(|_| time_batch(&mut pair.naive, naive_iters))
        .collect();
    let closed_iters = calibrate(&mut pair.closed);
    let raw_closed: Vec<f64> = (0..reps)
        .map(|_| time_batch(&mut pair.closed, closed_iters))
        .collect();

    let naive_median_raw = median(&raw_naive);
    let closed_median_raw = median(&raw_closed);
    let naive_time = naive_median_raw / naive_iters as f64;
    let closed_time = closed_median_raw / closed_iters as f64;

    Ok(BenchRecord {
        theorem: theorem.name().to_string(),
        n,
        input: input.clone(),
        reps,
        naive_time,
        closed_time,
        speedup: naive_time / closed_time,
        residual,
        naive_iters,
        closed_iters,
        raw_naive,
        raw_closed,
        timer_warning: naive_median_raw < TIMER_RESOLUTION_FLOOR
            || closed_median_raw < TIMER_RESOLUTION_FLOOR,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_too_few_reps() {
        let r = time_pair(TheoremId::T23, 4, &SampleValue::Angle { x: 1.0 }, 1, 1e-4);
        assert!(matches!(r, Err(BenchError::RepsTooSmall(1))));
    }

    #[test]
    fn rejects_factor_list_theorem() {
        let r = time_pair(TheoremId::T22, 3, &SampleValue::NOnly, 5, 1e-4);
        assert!(matches!(r, Err(BenchError::Unsupported(_))));
    }

    #[test]
    fn rejects_guarded_pole() {
        let r = time_pair(
            TheoremId::T25,
            4,
            &SampleValue::Angle { x: 0.7853981 },
            5,
            1e-4,
        );
        assert!(matches!(r, Err(BenchError::NearPole(_))));
    }

    #[test]
    fn rejects_wrong_input_kind() {
        let r = time_pair(TheoremId::T21Cos, 4, &SampleValue::Angle { x: 1.0 }, 5, 1e-4);
        assert!(matches!(r, Err(BenchError::WrongInput { .. })));
    }

    #[test]
    fn cotangent_rewrite_record_is_accurate_and_positive() {
        // x/2^30 ≈ 9.3e-10 sits inside any ordinary guard, so the guard is
        // loosened explicitly; at x = 1 the two cotangents do not cancel.
        let record = time_pair(TheoremId::T24, 30, &SampleValue::Angle { x: 1.0 }, 3, 1e-10)
            .unwrap();
        assert!(record.residual <= 1e-10, "residual {}", record.residual);
        assert!(record.naive_time > 0.0 && record.closed_time > 0.0);
        assert!((record.speedup - record.naive_time / record.closed_time).abs() < 1e-12);
        assert_eq!(record.raw_naive.len(), 3);
        assert_eq!(record.raw_closed.len(), 3);
    }

    #[test]
    fn exact_route_residual_is_zero() {
        let record = time_pair(
            TheoremId::T21Cos,
            64,
            &SampleValue::IntPair { x: 2, y: 1 },
            3,
            1e-4,
        )
        .unwrap();
        assert_eq!(record.residual, 0.0);
        assert!(record.naive_time > 0.0 && record.closed_time > 0.0);
    }
}
