//! Naive direct-summation evaluators for every left-hand side.
//!
//! These are the ground truth the closed forms are checked against, so they
//! stay deliberately simple: plain left-to-right accumulation, one term at a
//! time, no compensation, no reuse between terms. The benchmark module times
//! exactly this code as the "naive" side.

use crate::closed_form::{dist_to_tan_poles, Angle, EvalError, PoleInfo};
use num_bigint::BigInt;
use num_traits::Zero;

/// Exact term-by-term evaluation of the even/odd alternating binomial sums
/// Σ (−1)^k C(n,2k) x^(n−2k) y^(2k) and Σ (−1)^k C(n,2k+1) x^(n−2k−1) y^(2k+1);
/// equals the components of (x + iy)^n.
pub fn binom_series_pair(x: &BigInt, y: &BigInt, n: u32) -> (BigInt, BigInt) {
    let mut even = BigInt::zero();
    let mut odd = BigInt::zero();
    for k in 0..=n {
        let term = crate::exact::binomial(n, k) * x.pow(n - k) * y.pow(k);
        let negate = (k / 2) % 2 == 1;
        match (k % 2 == 0, negate) {
            (true, false) => even += term,
            (true, true) => even -= term,
            (false, false) => odd += term,
            (false, true) => odd -= term,
        }
    }
    (even, odd)
}

/// (Σ_{k=1..n} sin kx)² + (Σ_{k=1..n} cos kx)². Entire; no guards needed.
pub fn sin_cos_square_sum(n: u32, x: Angle) -> f64 {
    let x = x.radians();
    let mut sines = 0.0f64;
    let mut cosines = 0.0f64;
    for k in 1..=n {
        let kx = f64::from(k) * x;
        sines += kx.sin();
        cosines += kx.cos();
    }
    sines * sines + cosines * cosines
}

/// 1 + 2 Σ_{k=1..m} cos kx. Entire; no guards needed.
pub fn cos_partial_sum(m: u32, x: Angle) -> f64 {
    let x = x.radians();
    let mut sum = 1.0f64;
    for k in 1..=m {
        sum += 2.0 * (f64::from(k) * x).cos();
    }
    sum
}

fn guard_tan_term(k: u32, argument: f64, guard: f64) -> Result<(), EvalError> {
    let distance = dist_to_tan_poles(argument);
    if distance < guard {
        return Err(EvalError::NearPole(PoleInfo {
            function: "tan",
            term: Some(k),
            argument,
            distance,
        }));
    }
    Ok(())
}

/// Σ_{k=1..n} (1/2^k) tan(x/2^k).
pub fn tan_half_sum(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    for k in 1..=n {
        guard_tan_term(k, x / 2f64.powi(k as i32), guard)?;
    }
    let mut sum = 0.0f64;
    for k in 1..=n {
        let scale = 2f64.powi(k as i32);
        sum += (x / scale).tan() / scale;
    }
    Ok(sum)
}

/// Σ_{k=1..n} tan kx tan((k+1)x).
pub fn tan_pair_sum(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    for k in 1..=n + 1 {
        guard_tan_term(k, f64::from(k) * x, guard)?;
    }
    let mut sum = 0.0f64;
    for k in 1..=n {
        sum += (f64::from(k) * x).tan() * ((f64::from(k) + 1.0) * x).tan();
    }
    Ok(sum)
}

/// Σ_{k=1..n} tan kx · (tan(k−1)x + tan(k+1)x); the k = 1 term's tan 0
/// factor is exactly zero.
pub fn tan_triple_sum(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    for k in 1..=n + 1 {
        guard_tan_term(k, f64::from(k) * x, guard)?;
    }
    let mut sum = 0.0f64;
    for k in 1..=n {
        let kf = f64::from(k);
        sum += (kf * x).tan() * (((kf - 1.0) * x).tan() + ((kf + 1.0) * x).tan());
    }
    Ok(sum)
}

/// Σ_{k=1..n} tan kx, the running tangent sum used by the telescoping
/// invariant behind the pair-product identity.
pub fn tan_partial_sum(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    for k in 1..=n {
        guard_tan_term(k, f64::from(k) * x, guard)?;
    }
    let mut sum = 0.0f64;
    for k in 1..=n {
        sum += (f64::from(k) * x).tan();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gauss_pow, GaussianInt};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn ang(x: f64) -> Angle {
        Angle::new(x).unwrap()
    }

    fn assert_close(actual: f64, expected: f64, rel: f64) {
        let scale = expected.abs().max(1.0);
        assert!(
            (actual - expected).abs() <= rel * scale,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn binom_series_examples() {
        let one = BigInt::from(1);
        let two = BigInt::from(2);
        assert_eq!(
            binom_series_pair(&one, &one, 3),
            (BigInt::from(-2), BigInt::from(2))
        );
        assert_eq!(
            binom_series_pair(&BigInt::from(9), &BigInt::from(-4), 0),
            (BigInt::from(1), BigInt::from(0))
        );
        assert_eq!(
            binom_series_pair(&two, &one, 2),
            (BigInt::from(3), BigInt::from(4))
        );
    }

    #[test]
    fn binom_series_matches_gauss_pow() {
        for (x, y) in [(3i64, -2i64), (-5, 4), (-1, -1), (0, 7)] {
            for n in 0..=10 {
                let z = GaussianInt::from_i64(x, y);
                let pair = binom_series_pair(&z.re, &z.im, n);
                let power = gauss_pow(&z, n);
                assert_eq!(pair, (power.re, power.im), "({x},{y})^{n}");
            }
        }
    }

    #[test]
    fn square_sum_examples() {
        for x in [0.17, 1.0, 4.4] {
            assert_close(sin_cos_square_sum(1, ang(x)), 1.0, 1e-12);
        }
        assert_close(sin_cos_square_sum(7, ang(0.0)), 49.0, 1e-12);
        assert_close(sin_cos_square_sum(2, ang(FRAC_PI_2)), 2.0, 1e-12);
    }

    #[test]
    fn cos_partial_examples() {
        let x = 0.83;
        assert_close(cos_partial_sum(1, ang(x)), 1.0 + 2.0 * x.cos(), 1e-15);
        assert_close(cos_partial_sum(9, ang(0.0)), 19.0, 1e-15);
        assert_close(cos_partial_sum(2, ang(PI / 3.0)), 1.0, 1e-12);
    }

    #[test]
    fn tan_half_examples() {
        assert_close(tan_half_sum(1, ang(FRAC_PI_2), 1e-6).unwrap(), 0.5, 1e-12);
        assert_close(
            tan_half_sum(2, ang(FRAC_PI_2), 1e-6).unwrap(),
            0.5 + (2f64.sqrt() - 1.0) / 4.0,
            1e-12,
        );
        assert_eq!(tan_half_sum(12, ang(0.0), 1e-6).unwrap(), 0.0);
    }

    #[test]
    fn tan_half_pole_identifies_term() {
        // x/2 = π/2 makes the k = 1 term singular.
        match tan_half_sum(3, ang(PI), 1e-4).unwrap_err() {
            EvalError::NearPole(info) => {
                assert_eq!(info.term, Some(1));
                assert!(info.distance < 1e-12);
            }
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn tan_pair_examples() {
        assert_close(tan_pair_sum(1, ang(PI / 6.0), 1e-6).unwrap(), 1.0, 1e-12);
        assert_eq!(tan_pair_sum(20, ang(0.0), 1e-6).unwrap(), 0.0);
        let x = 0.4f64;
        assert_close(
            tan_pair_sum(2, ang(x), 1e-6).unwrap(),
            x.tan() * (2.0 * x).tan() + (2.0 * x).tan() * (3.0 * x).tan(),
            1e-15,
        );
    }

    #[test]
    fn tan_pair_pole_identifies_term() {
        match tan_pair_sum(4, ang(FRAC_PI_4), 1e-4).unwrap_err() {
            EvalError::NearPole(info) => assert_eq!(info.term, Some(2)),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn tan_triple_examples() {
        assert_close(tan_triple_sum(1, ang(PI / 6.0), 1e-6).unwrap(), 1.0, 1e-12);
        assert_eq!(tan_triple_sum(9, ang(0.0), 1e-6).unwrap(), 0.0);
        let x = 0.3f64;
        assert_close(
            tan_triple_sum(2, ang(x), 1e-6).unwrap(),
            x.tan() * (2.0 * x).tan() + (2.0 * x).tan() * (x.tan() + (3.0 * x).tan()),
            1e-15,
        );
    }

    #[test]
    fn tan_partial_examples() {
        let x = 1.2f64;
        assert_close(tan_partial_sum(1, ang(x), 1e-6).unwrap(), x.tan(), 1e-15);
        assert_close(
            tan_partial_sum(2, ang(PI / 8.0), 1e-6).unwrap(),
            (PI / 8.0).tan() + FRAC_PI_4.tan(),
            1e-15,
        );
        assert_eq!(tan_partial_sum(31, ang(0.0), 1e-6).unwrap(), 0.0);
    }
}
