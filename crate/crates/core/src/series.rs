//! Truncated formal power series over exact rationals.
//!
//! A series carries its truncation order `N` explicitly and stores the `N + 1`
//! coefficients of `t^0 .. t^N`. Binary operations require both operands to
//! carry the same order and nothing re-truncates implicitly, so the precision
//! of every intermediate value is a visible part of a computation. Values are
//! immutable after construction.

use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::number::{factorial, zeros, Rational};

/// Error from a series operation whose preconditions were not met.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// The operands carry different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Division by the identically-zero series.
    ZeroDivisor,
    /// The divisor's valuation exceeds the dividend's, so the quotient is not
    /// a regular series.
    NotDivisible,
    /// The operation needs an argument with zero constant term.
    ConstantTermNotZero,
    /// A negative power needs an invertible (nonzero) constant term.
    ConstantTermZero,
    /// Differentiating an order-0 series would leave no coefficients.
    EmptyDerivative,
    /// Coefficient index beyond the truncation order.
    CoeffOutOfRange { n: usize, order: usize },
    /// Requested truncation order exceeds the order actually carried.
    OrderOutOfRange { requested: usize, order: usize },
    /// A series needs at least its constant coefficient.
    EmptyCoefficients,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            SeriesError::ZeroDivisor => write!(f, "division by the zero series"),
            SeriesError::NotDivisible => write!(f, "not divisible as regular series"),
            SeriesError::ConstantTermNotZero => {
                write!(f, "composition requires zero constant term")
            }
            SeriesError::ConstantTermZero => {
                write!(f, "negative power requires nonzero constant term")
            }
            SeriesError::EmptyDerivative => {
                write!(f, "derivative of an order-0 series has no coefficients")
            }
            SeriesError::CoeffOutOfRange { n, order } => {
                write!(f, "coefficient {n} beyond truncation order {order}")
            }
            SeriesError::OrderOutOfRange { requested, order } => {
                write!(f, "order {requested} beyond truncation order {order}")
            }
            SeriesError::EmptyCoefficients => write!(f, "series needs a constant coefficient"),
        }
    }
}

impl core::error::Error for SeriesError {}

/// Formal power series truncated at an explicit order.
///
/// `coeffs[n]` is the coefficient of `t^n`; the order is `coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Series with the given coefficients of `t^0 .. t^N`; the truncation
    /// order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyCoefficients);
        }
        Ok(Self { coeffs })
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: zeros(order + 1) }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    /// A constant series at the given order.
    pub fn constant(order: usize, c: Rational) -> Self {
        let mut coeffs = zeros(order + 1);
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The single term `c * t^degree` at the given order.
    pub fn monomial(order: usize, degree: usize, c: Rational) -> Result<Self, SeriesError> {
        if degree > order {
            return Err(SeriesError::CoeffOutOfRange { n: degree, order });
        }
        let mut coeffs = zeros(order + 1);
        coeffs[degree] = c;
        Ok(Self { coeffs })
    }

    /// The identity series `t` at the given order (which must be at least 1).
    pub fn var(order: usize) -> Result<Self, SeriesError> {
        Self::monomial(order, 1, Rational::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^n`. Panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Index of the lowest nonzero coefficient, or `order + 1` for the zero
    /// series.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    /// The same series cut down to a smaller order.
    pub fn truncated(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::OrderOutOfRange { requested: order, order: self.order() });
        }
        Ok(Self { coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let n_max = self.order();
        let mut coeffs = zeros(n_max + 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n_max + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs })
    }

    /// Exact quotient `self / rhs`. Requires `valuation(rhs) <=
    /// valuation(self)`; both series shift down by the divisor's valuation, so
    /// the quotient's order drops to `order - valuation(rhs)`.
    pub fn divide(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        if rhs.is_zero() {
            return Err(SeriesError::ZeroDivisor);
        }
        let v = rhs.valuation();
        if self.valuation() < v {
            return Err(SeriesError::NotDivisible);
        }
        // Both numerator and denominator are divisible by t^v; after the shift
        // the divisor has an invertible constant term and ordinary long
        // division applies.
        let num = &self.coeffs[v..];
        let den = &rhs.coeffs[v..];
        let out_order = self.order() - v;
        let mut q = zeros(out_order + 1);
        for n in 0..=out_order {
            let mut s = num[n].clone();
            for i in 1..=n {
                if !den[i].is_zero() && !q[n - i].is_zero() {
                    s -= &den[i] * &q[n - i];
                }
            }
            q[n] = s / &den[0];
        }
        Ok(Self { coeffs: q })
    }

    /// Substitutes `rhs` for the variable. The inner series must have zero
    /// constant term so every coefficient of the result is a finite sum.
    /// Evaluated by Horner's rule: N multiplications at the common order.
    pub fn compose(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        if !rhs.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let n_max = self.order();
        let mut acc = Self::constant(n_max, self.coeffs[n_max].clone());
        for k in (0..n_max).rev() {
            acc = acc.mul(rhs)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// `exp(self)` for a series with zero constant term, solved from the
    /// differential equation `E' = f'E` with `E(0) = 1`:
    /// `n E[n] = sum_{i=1..n} i f[i] E[n-i]`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let n_max = self.order();
        let mut e = zeros(n_max + 1);
        e[0] = Rational::one();
        for n in 1..=n_max {
            let mut s = Rational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !e[n - i].is_zero() {
                    s += self.coeffs[i].clone() * Rational::from_integer(i.into()) * &e[n - i];
                }
            }
            e[n] = s / Rational::from_integer(n.into());
        }
        Ok(Self { coeffs: e })
    }

    /// `log(1 + self)` for a series with zero constant term, solved from
    /// `(1 + f) L' = f'` and then integrated term by term, which pins the
    /// constant term of the result to 0.
    pub fn log1p(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let n_max = self.order();
        // dl[m] is the coefficient of t^m in L'.
        let mut dl = zeros(n_max);
        for m in 0..n_max {
            let mut s = self.coeffs[m + 1].clone() * Rational::from_integer((m + 1).into());
            for i in 1..=m {
                if !self.coeffs[i].is_zero() && !dl[m - i].is_zero() {
                    s -= &self.coeffs[i] * &dl[m - i];
                }
            }
            dl[m] = s;
        }
        let mut l = zeros(n_max + 1);
        for n in 1..=n_max {
            l[n] = dl[n - 1].clone() / Rational::from_integer(n.into());
        }
        Ok(Self { coeffs: l })
    }

    /// Integer power. Negative exponents require an invertible constant term.
    pub fn pow_int(&self, e: i64) -> Result<Self, SeriesError> {
        if e < 0 {
            if self.coeffs[0].is_zero() {
                return Err(SeriesError::ConstantTermZero);
            }
            let p = self.pow_unsigned(e.unsigned_abs());
            return Self::one(self.order()).divide(&p);
        }
        Ok(self.pow_unsigned(e as u64))
    }

    fn pow_unsigned(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("orders match by construction");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("orders match by construction");
            }
        }
        acc
    }

    /// Term-by-term derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        let n_max = self.order();
        if n_max == 0 {
            return Err(SeriesError::EmptyDerivative);
        }
        let mut coeffs = zeros(n_max);
        for (n, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs[n + 1].clone() * Rational::from_integer((n + 1).into());
        }
        Ok(Self { coeffs })
    }

    /// Term-by-term antiderivative with constant term 0. Every input
    /// coefficient determines one output coefficient, so the order rises by
    /// one and `integrate(derivative(f)) == f - f(0)` exactly.
    pub fn integrate(&self) -> Self {
        let mut coeffs = zeros(self.order() + 2);
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n + 1] = c.clone() / Rational::from_integer((n + 1).into());
        }
        Self { coeffs }
    }

    /// `n! * coeffs[n]`: the coefficient in the `sum a_n t^n / n!` convention.
    pub fn nfact_coeff(&self, n: usize) -> Result<Rational, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::CoeffOutOfRange { n, order: self.order() });
        }
        Ok(Rational::from_integer(factorial(n)) * &self.coeffs[n])
    }

    fn check_order(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch { left: self.order(), right: rhs.order() });
        }
        Ok(())
    }
}

/// `e^t - 1` truncated at the given order: coefficients `1/n!` with no
/// constant term.
pub fn expm1(order: usize) -> TruncSeries {
    let mut coeffs = zeros(order + 1);
    let mut inv_fact = Rational::one();
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        inv_fact /= Rational::from_integer(n.into());
        *c = inv_fact.clone();
    }
    TruncSeries { coeffs }
}

/// `1 - e^(-t)` truncated at the given order: coefficients `(-1)^(n+1)/n!`.
pub fn one_minus_exp_neg(order: usize) -> TruncSeries {
    let mut coeffs = zeros(order + 1);
    let mut inv_fact = Rational::one();
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        inv_fact /= -Rational::from_integer(n.into());
        *c = -inv_fact.clone();
    }
    TruncSeries { coeffs }
}

/// `1 - e^(1 - e^t)`, built as `1 - exp(-(e^t - 1))` from the other builders.
/// Substituting `e^t - 1` for `t` turns `1 - e^(-t)` into this map, which is
/// what connects the first-kind and second-kind multi-index families.
pub fn nested_map(order: usize) -> TruncSeries {
    let u = expm1(order);
    let e = u.neg().exp().expect("e^t - 1 has zero constant term");
    TruncSeries::one(order)
        .sub(&e)
        .expect("orders match by construction")
}

/// `log(1 + t)` truncated at the given order: coefficients `(-1)^(n+1)/n`.
pub fn log1p_t(order: usize) -> TruncSeries {
    let mut coeffs = zeros(order + 1);
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = crate::number::sign(n + 1) / Rational::from_integer(n.into());
    }
    TruncSeries { coeffs }
}
