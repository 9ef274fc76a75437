//! Closed-form (right-hand-side) evaluators for the identity catalog.
//!
//! Floating point throughout, with three standing rules:
//! * the argument of x + iy is always the two-argument arctangent, so the
//!   formulas stay correct for x ≤ 0;
//! * 1 − cos x never appears literally; it is rewritten as 2 sin²(x/2) (and
//!   the cosine-difference kernel as its product form) so values near x = 0
//!   keep their digits;
//! * magnitudes (x² + y²)^(n/2) accumulate in log space so large n cannot
//!   overflow an intermediate.

use crate::exact::{bigint_to_f64, FactorList};
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// Pole-guard radius in radians used when a caller does not choose one.
pub const DEFAULT_POLE_GUARD: f64 = 1e-4;

/// Default relative-error tolerance for identity verification.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// ln(f64::MAX); log-space exponents beyond this overflow on exp().
const MAX_EXP: f64 = 709.782712893384;

/// An angle in radians, guaranteed finite.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self, EvalError> {
        if !radians.is_finite() {
            return Err(EvalError::NonFinite { value: radians });
        }
        Ok(Self(radians))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// The pair ((x²+y²)^(n/2) cos nθ, (x²+y²)^(n/2) sin nθ), or the cos/sin
/// parts of a Gaussian-integer product; finite whenever the producing
/// operation's preconditions hold.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct CosSinPair {
    pub cos_part: f64,
    pub sin_part: f64,
}

/// Which singular function a near-pole rejection is about.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{function}{} at argument {argument} is within {distance:.3e} rad of a pole", term.map(|k| format!(" (term k = {k})")).unwrap_or_default())]
pub struct PoleInfo {
    pub function: &'static str,
    /// Term index k when the singular factor belongs to a summed term.
    pub term: Option<u32>,
    /// The offending (scaled) argument in radians.
    pub argument: f64,
    /// Distance of that argument to the nearest singularity, radians.
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("(x, y) = (0, 0) has no argument; the modulus-argument form is undefined")]
    ZeroPoint,
    #[error("non-finite input {value}")]
    NonFinite { value: f64 },
    #[error("magnitude exponent {exponent:.1} exceeds the representable range")]
    Overflow { exponent: f64 },
    #[error("factor {index} has zero real part; arctan(y/x) is undefined there")]
    ZeroRealPart { index: usize },
    #[error(transparent)]
    NearPole(PoleInfo),
}

impl EvalError {
    pub fn is_pole(&self) -> bool {
        matches!(self, EvalError::NearPole(_))
    }
}

/// Distance from `value` to the nearest point of {offset + k·period}.
fn nearest_distance(value: f64, offset: f64, period: f64) -> f64 {
    let r = (value - offset).rem_euclid(period);
    r.min(period - r)
}

/// Distance to the zeros of 1 − cos x (multiples of 2π).
pub fn dist_to_cos_unity(x: f64) -> f64 {
    nearest_distance(x, 0.0, TAU)
}

/// Distance to the zeros of sin x (multiples of π): poles of cot, zeros of tan.
pub fn dist_to_sin_zeros(x: f64) -> f64 {
    nearest_distance(x, 0.0, PI)
}

/// Distance to the poles of tan x (π/2 + multiples of π).
pub fn dist_to_tan_poles(x: f64) -> f64 {
    nearest_distance(x, FRAC_PI_2, PI)
}

fn guard_against(
    function: &'static str,
    term: Option<u32>,
    argument: f64,
    distance: f64,
    guard: f64,
) -> Result<(), EvalError> {
    if distance < guard {
        return Err(EvalError::NearPole(PoleInfo {
            function,
            term,
            argument,
            distance,
        }));
    }
    Ok(())
}

fn checked_magnitude(exponent: f64) -> Result<f64, EvalError> {
    if !exponent.is_finite() || exponent > MAX_EXP {
        return Err(EvalError::Overflow { exponent });
    }
    Ok(exponent.exp())
}

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

/// ((x²+y²)^(n/2) cos nθ, (x²+y²)^(n/2) sin nθ) with θ = atan2(y, x).
pub fn demoivre_closed(x: f64, y: f64, n: u32) -> Result<CosSinPair, EvalError> {
    for v in [x, y] {
        if !v.is_finite() {
            return Err(EvalError::NonFinite { value: v });
        }
    }
    if x == 0.0 && y == 0.0 {
        return Err(EvalError::ZeroPoint);
    }
    let theta = y.atan2(x);
    let magnitude = checked_magnitude(0.5 * f64::from(n) * (x * x + y * y).ln())?;
    let nt = f64::from(n) * theta;
    Ok(CosSinPair {
        cos_part: magnitude * nt.cos(),
        sin_part: magnitude * nt.sin(),
    })
}

/// (x² + y²)^n, evaluated in log space.
pub fn sum_squares_closed(x: f64, y: f64, n: u32) -> Result<f64, EvalError> {
    for v in [x, y] {
        if !v.is_finite() {
            return Err(EvalError::NonFinite { value: v });
        }
    }
    if x == 0.0 && y == 0.0 {
        return Err(EvalError::ZeroPoint);
    }
    checked_magnitude(f64::from(n) * (x * x + y * y).ln())
}

/// Float product Π √(x_k²+y_k²) · (cos Σθ_k, sin Σθ_k) over the factors,
/// with θ_k the principal argument of (x_k, y_k). Requires every x_k ≠ 0.
pub fn gauss_product_closed(factors: &FactorList) -> Result<CosSinPair, EvalError> {
    if let Some(index) = factors.iter().position(|z| num_traits::Zero::is_zero(&z.re)) {
        return Err(EvalError::ZeroRealPart { index });
    }
    gauss_product_closed_principal(factors)
}

/// As [`gauss_product_closed`], but x_k = 0 factors are admitted: atan2
/// assigns them the angle ±π/2 directly.
pub fn gauss_product_closed_principal(factors: &FactorList) -> Result<CosSinPair, EvalError> {
    let mut angle = 0.0f64;
    let mut log_modulus = 0.0f64;
    for z in factors.iter() {
        let x = bigint_to_f64(&z.re);
        let y = bigint_to_f64(&z.im);
        let norm = bigint_to_f64(&z.norm());
        if !x.is_finite() || !y.is_finite() || !norm.is_finite() {
            return Err(EvalError::Overflow {
                exponent: f64::INFINITY,
            });
        }
        angle += y.atan2(x);
        log_modulus += 0.5 * norm.ln();
    }
    let modulus = checked_magnitude(log_modulus)?;
    Ok(CosSinPair {
        cos_part: modulus * angle.cos(),
        sin_part: modulus * angle.sin(),
    })
}

/// (1 − cos nx)/(1 − cos x), evaluated as sin²(nx/2)/sin²(x/2).
pub fn dirichlet_rhs(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    guard_against("1 - cos x", None, x, dist_to_cos_unity(x), guard)?;
    let ratio = (f64::from(n) * x / 2.0).sin() / (x / 2.0).sin();
    Ok(ratio * ratio)
}

/// (cos mx − cos(m+1)x)/(1 − cos x), evaluated through its product form
/// sin((2m+1)x/2)/sin(x/2) so nothing cancels near x = 0.
pub fn cos_partial_rhs(m: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    guard_against("1 - cos x", None, x, dist_to_cos_unity(x), guard)?;
    Ok(((2.0 * f64::from(m) + 1.0) * x / 2.0).sin() / (x / 2.0).sin())
}

/// (1/2^n) cot(x/2^n) − cot x.
pub fn tan_half_rhs(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    guard_against("cot x", None, x, dist_to_sin_zeros(x), guard)?;
    let scale = 2f64.powi(n as i32);
    let xs = x / scale;
    guard_against("cot(x/2^n)", Some(n), xs, dist_to_sin_zeros(xs), guard)?;
    Ok(cot(xs) / scale - cot(x))
}

/// −(n+1) + tan((n+1)x)/tan x.
pub fn tan_pair_rhs(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    guard_against("tan x", Some(1), x, dist_to_tan_poles(x), guard)?;
    let top = (f64::from(n) + 1.0) * x;
    guard_against("tan((n+1)x)", Some(n + 1), top, dist_to_tan_poles(top), guard)?;
    guard_against("division by tan x", None, x, dist_to_sin_zeros(x), guard)?;
    Ok(-(f64::from(n) + 1.0) + top.tan() / x.tan())
}

/// (tan nx + tan((n+1)x))/tan x − 1 − 2n.
pub fn tan_triple_rhs(n: u32, x: Angle, guard: f64) -> Result<f64, EvalError> {
    let x = x.radians();
    guard_against("tan x", Some(1), x, dist_to_tan_poles(x), guard)?;
    let mid = f64::from(n) * x;
    guard_against("tan nx", Some(n), mid, dist_to_tan_poles(mid), guard)?;
    let top = (f64::from(n) + 1.0) * x;
    guard_against("tan((n+1)x)", Some(n + 1), top, dist_to_tan_poles(top), guard)?;
    guard_against("division by tan x", None, x, dist_to_sin_zeros(x), guard)?;
    Ok((mid.tan() + top.tan()) / x.tan() - 1.0 - 2.0 * f64::from(n))
}
