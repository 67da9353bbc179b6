//! Exact scalar arithmetic: arbitrary-precision rationals and the few
//! combinatorial integers everything else is built from.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Serializes as `p/q`, or bare `p` when `q = 1`, and
/// parses the same forms back.
pub type Rational = num_rational::BigRational;

/// Rational with value `n`.
pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d = 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// `n!/k!` as an exact integer, i.e. the falling product `n(n-1)...(k+1)`.
/// Panics if `k > n`.
pub fn falling_factorial_quot(n: usize, k: usize) -> BigInt {
    assert!(k <= n, "n!/k! needs k <= n, got n={n} k={k}");
    let mut acc = BigInt::one();
    for i in (k + 1)..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` by the multiplicative formula, so the upper
/// argument is not limited by any precomputed table. `C(n, k) = 0` for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // Exact at every step: acc holds C(n, i) after the division.
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `m^(-k)` for a positive integer `m` and an integer `k` of either sign.
/// Negative and zero `k` stay in the numerator as exact integer powers.
pub fn power_recip(m: usize, k: i64) -> Rational {
    assert!(m > 0, "power_recip needs m >= 1, got m={m}");
    let p = BigInt::from(m).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rational::new(BigInt::one(), p)
    } else {
        Rational::from_integer(p)
    }
}

/// Evaluates `sum_i coeffs[i] * x^i` by Horner's rule.
pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// `(-1)^n` as a rational sign factor.
pub fn sign(n: usize) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Dense vector of rationals, all zero.
pub fn zeros(len: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(Rational::zero());
    }
    v
}
