//! Exact integer arithmetic: binomial coefficients, Gaussian integers, the
//! alternating binomial sums, and the rational value of tan(nπ/4).
//!
//! Everything here is computed in arbitrary precision; no operation in this
//! module ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// A Gaussian integer x + iy with arbitrary-precision components.
///
/// Products of Gaussian integers are again Gaussian integers, which is what
/// makes the cos/sin parts of `gauss_product` exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(BigInt::from(re), BigInt::from(im))
    }

    /// Multiplicative identity, (1, 0).
    pub fn unit() -> Self {
        Self::new(BigInt::one(), BigInt::zero())
    }

    /// norm(x + iy) = x² + y². Always ≥ 0 and multiplicative over products.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

/// A rational number extended with a single point at infinity, as on the
/// projective rational line. The infinite value models the pole of
/// tan(nπ/4) at n ≡ 2 (mod 4); all infinite values compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedRational {
    Finite(BigRational),
    Infinite,
}

impl ExtendedRational {
    pub fn from_ratio(num: BigInt, den: BigInt) -> Self {
        if den.is_zero() {
            ExtendedRational::Infinite
        } else {
            ExtendedRational::Finite(BigRational::new(num, den))
        }
    }

    pub fn from_integer(n: i64) -> Self {
        ExtendedRational::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinite)
    }

    /// Reduced numerator; `None` when infinite (the components carry no
    /// meaning there).
    pub fn numer(&self) -> Option<&BigInt> {
        match self {
            ExtendedRational::Finite(r) => Some(r.numer()),
            ExtendedRational::Infinite => None,
        }
    }

    /// Reduced denominator, always > 0 for finite values; `None` when infinite.
    pub fn denom(&self) -> Option<&BigInt> {
        match self {
            ExtendedRational::Finite(r) => Some(r.denom()),
            ExtendedRational::Infinite => None,
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            ExtendedRational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ExtendedRational::Infinite => write!(f, "inf"),
        }
    }
}

/// An ordered list of Gaussian-integer factors (x_k, y_k).
///
/// Construction rejects (0, 0) factors; the float product path additionally
/// requires x_k ≠ 0, which is checked there, not here.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactorList(Vec<GaussianInt>);

impl FactorList {
    pub fn new(factors: Vec<GaussianInt>) -> Result<Self, ExactError> {
        if let Some(index) = factors.iter().position(GaussianInt::is_zero) {
            return Err(ExactError::ZeroFactor { index });
        }
        Ok(Self(factors))
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self, ExactError> {
        Self::new(
            pairs
                .iter()
                .map(|&(x, y)| GaussianInt::from_i64(x, y))
                .collect(),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = &GaussianInt> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("factor {index} is (0, 0); factors must be nonzero")]
    ZeroFactor { index: usize },
    /// Both alternating binomial sums vanished, which contradicts
    /// even² + odd² = 2^n > 0; only reachable through memory corruption.
    #[error("alternating binomial sums both zero at n = {n}")]
    IndeterminateTanQuarter { n: u32 },
}

/// Binomial coefficient C(n, k), exact at all sizes; 0 when k > n.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=u64::from(k) {
        // (n - k + i) / i divides exactly at each step: the running product
        // of i consecutive integers is divisible by i!.
        acc = acc * BigInt::from(u64::from(n - k) + i) / BigInt::from(i);
    }
    acc
}

/// Exact Gaussian-integer product (a.re·b.re − a.im·b.im, a.re·b.im + a.im·b.re).
pub fn gauss_mul(a: &GaussianInt, b: &GaussianInt) -> GaussianInt {
    GaussianInt::new(
        &a.re * &b.re - &a.im * &b.im,
        &a.re * &b.im + &a.im * &b.re,
    )
}

/// z^n by binary exponentiation: O(log n) multiplications; z^0 = (1, 0).
pub fn gauss_pow(z: &GaussianInt, n: u32) -> GaussianInt {
    let mut result = GaussianInt::unit();
    let mut base = z.clone();
    let mut exp = n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = gauss_mul(&result, &base);
        }
        exp >>= 1;
        if exp > 0 {
            base = gauss_mul(&base, &base);
        }
    }
    result
}

/// Left-to-right exact product of the factors; the empty list yields (1, 0).
pub fn gauss_product(factors: &FactorList) -> GaussianInt {
    factors
        .iter()
        .fold(GaussianInt::unit(), |acc, z| gauss_mul(&acc, z))
}

/// Σ_{2k ≤ n} (−1)^k C(n, 2k) — the real part of (1+i)^n.
pub fn alt_binom_even(n: u32) -> BigInt {
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while 2 * k <= n {
        let term = binomial(n, 2 * k);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        k += 1;
    }
    sum
}

/// Σ_{2k < n} (−1)^k C(n, 2k+1) — the imaginary part of (1+i)^n.
pub fn alt_binom_odd(n: u32) -> BigInt {
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while 2 * k < n {
        let term = binomial(n, 2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        k += 1;
    }
    sum
}

/// tan(nπ/4) as a reduced extended rational: the odd alternating sum over
/// the even one, with the vanishing denominator mapped to the point at
/// infinity (n ≡ 2 mod 4, the pole of tan).
pub fn tan_quarter(n: u32) -> Result<ExtendedRational, ExactError> {
    let den = alt_binom_even(n);
    let num = alt_binom_odd(n);
    if den.is_zero() {
        if num.is_zero() {
            return Err(ExactError::IndeterminateTanQuarter { n });
        }
        return Ok(ExtendedRational::Infinite);
    }
    Ok(ExtendedRational::from_ratio(num, den))
}

/// Best-effort f64 view of a BigInt; ±∞ when out of range.
pub(crate) fn bigint_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        if v.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Pascal-triangle oracle for C(n, k).
    fn pascal(n: u32, k: u32) -> BigInt {
        let mut row: Vec<BigInt> = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one()];
            for j in 0..row.len() - 1 {
                next.push(&row[j] + &row[j + 1]);
            }
            next.push(BigInt::one());
            row = next;
        }
        row.get(k as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    #[test]
    fn binomial_small_row() {
        assert_eq!(binomial(3, 2), BigInt::from(3));
    }

    #[test]
    fn binomial_identity_and_out_of_range() {
        for n in [0u32, 1, 7, 40] {
            assert_eq!(binomial(n, 0), BigInt::one());
            assert_eq!(binomial(n, n), BigInt::one());
            assert_eq!(binomial(n, n + 1), BigInt::zero());
        }
    }

    #[test]
    fn binomial_matches_pascal_oracle() {
        // Frozen from two independent evaluation strategies.
        let expected = "1832624140942590534".parse::<BigInt>().unwrap();
        assert_eq!(binomial(64, 32), expected);
        assert_eq!(pascal(64, 32), expected);
        for n in 0..=24 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), pascal(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn gauss_mul_examples() {
        let a = GaussianInt::from_i64(1, 1);
        let b = GaussianInt::from_i64(2, 1);
        assert_eq!(gauss_mul(&a, &b), GaussianInt::from_i64(1, 3));

        let z = GaussianInt::from_i64(-7, 12);
        assert_eq!(gauss_mul(&z, &GaussianInt::unit()), z);

        let i = GaussianInt::from_i64(0, 1);
        assert_eq!(gauss_mul(&i, &i), GaussianInt::from_i64(-1, 0));
    }

    #[test]
    fn gauss_pow_examples() {
        assert_eq!(
            gauss_pow(&GaussianInt::from_i64(1, 1), 3),
            GaussianInt::from_i64(-2, 2)
        );
        assert_eq!(
            gauss_pow(&GaussianInt::from_i64(2, 1), 2),
            GaussianInt::from_i64(3, 4)
        );
        assert_eq!(
            gauss_pow(&GaussianInt::from_i64(9, -4), 0),
            GaussianInt::unit()
        );
    }

    #[test]
    fn gauss_product_examples() {
        let factors = FactorList::from_pairs(&[(1, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(gauss_product(&factors), GaussianInt::from_i64(0, 10));

        let single = FactorList::from_pairs(&[(3, 4)]).unwrap();
        assert_eq!(gauss_product(&single), GaussianInt::from_i64(3, 4));

        let empty = FactorList::new(Vec::new()).unwrap();
        assert_eq!(gauss_product(&empty), GaussianInt::unit());
    }

    #[test]
    fn factor_list_rejects_zero() {
        let err = FactorList::from_pairs(&[(1, 1), (0, 0)]).unwrap_err();
        assert_eq!(err, ExactError::ZeroFactor { index: 1 });
        // x = 0 alone is allowed at this layer.
        assert!(FactorList::from_pairs(&[(0, 5)]).is_ok());
    }

    #[test]
    fn alt_binom_examples() {
        assert_eq!(alt_binom_even(3), BigInt::from(-2));
        assert_eq!(alt_binom_even(0), BigInt::one());
        // 1 - 6 + 1, cross-checked against (1+i)^4.
        assert_eq!(alt_binom_even(4), BigInt::from(-4));
        assert_eq!(alt_binom_even(4), gauss_pow(&GaussianInt::from_i64(1, 1), 4).re);

        assert_eq!(alt_binom_odd(3), BigInt::from(2));
        assert_eq!(alt_binom_odd(0), BigInt::zero());
        // 5 - 10 + 1, cross-checked against (1+i)^5.
        assert_eq!(alt_binom_odd(5), BigInt::from(-4));
        assert_eq!(alt_binom_odd(5), gauss_pow(&GaussianInt::from_i64(1, 1), 5).im);
    }

    #[test]
    fn tan_quarter_examples() {
        assert_eq!(tan_quarter(3).unwrap(), ExtendedRational::from_integer(-1));
        assert_eq!(tan_quarter(0).unwrap(), ExtendedRational::from_integer(0));
        assert!(tan_quarter(2).unwrap().is_infinite());
    }

    #[test]
    fn extended_rational_display() {
        assert_eq!(tan_quarter(3).unwrap().to_string(), "-1");
        assert_eq!(tan_quarter(2).unwrap().to_string(), "inf");
        assert_eq!(
            ExtendedRational::from_ratio(BigInt::from(2), BigInt::from(-4)).to_string(),
            "-1/2"
        );
    }

    #[test]
    fn infinite_values_compare_equal() {
        assert_eq!(tan_quarter(2).unwrap(), tan_quarter(6).unwrap());
    }
}
