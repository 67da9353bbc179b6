//! Classical special numbers: Stirling numbers of both kinds, Lah numbers,
//! Bell polynomials, Fubini polynomials of higher order, and Bernoulli numbers
//! of higher order.
//!
//! Each family has two independent routes, one through a recurrence or closed
//! form and one through its generating series, and the test suite asserts the
//! routes agree cell for cell. The multi-index families in [`crate::multi`]
//! collapse onto these tables when every index entry is 1, so correctness here
//! anchors everything downstream.

use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::number::{binomial, eval_poly, factorial, zeros, Rational};
use crate::series::{expm1, TruncSeries};

/// Lower-triangular table of values `v[n][k]` for `0 <= k <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    rows: Vec<Vec<Rational>>,
}

impl TriangleTable {
    fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            debug_assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Value at `(n, k)`; zero above the diagonal. Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        if k > n {
            return Rational::zero();
        }
        self.rows[n][k].clone()
    }

    /// Row `n` as coefficients indexed by `k`.
    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }
}

/// Stirling numbers of the second kind `{n brace k}` (partitions of an n-set
/// into k nonempty blocks) via the recurrence
/// `{n+1, k} = k {n, k} + {n, k-1}`.
pub fn stirling2(n_max: usize) -> TriangleTable {
    triangle_by_recurrence(n_max, |_n, k| Rational::from_integer(k.into()))
}

/// Unsigned Stirling numbers of the first kind `[n brack k]` (permutations of
/// n elements with k cycles) via `[n+1, k] = n [n, k] + [n, k-1]`.
pub fn stirling1_unsigned(n_max: usize) -> TriangleTable {
    triangle_by_recurrence(n_max, |n, _k| Rational::from_integer(n.into()))
}

/// Signed Stirling numbers of the first kind,
/// `S_1(n, k) = (-1)^(n-k) [n brack k]`.
pub fn stirling1_signed(n_max: usize) -> TriangleTable {
    let unsigned = stirling1_unsigned(n_max);
    let rows = unsigned
        .rows
        .iter()
        .enumerate()
        .map(|(n, row)| {
            row.iter()
                .enumerate()
                .map(|(k, v)| v * crate::number::sign(n - k))
                .collect()
        })
        .collect();
    TriangleTable::from_rows(rows)
}

/// Shared shape of the two Stirling recurrences: the new cell is
/// `weight(n, k) * v[n][k] + v[n][k-1]`.
fn triangle_by_recurrence(
    n_max: usize,
    weight: impl Fn(usize, usize) -> Rational,
) -> TriangleTable {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n_max + 1);
    rows.push(alloc::vec![Rational::one()]);
    for n in 0..n_max {
        let prev = &rows[n];
        let mut row = zeros(n + 2);
        for k in 0..=n + 1 {
            let mut v = Rational::zero();
            if k <= n {
                v += &prev[k] * weight(n, k);
            }
            if k >= 1 {
                v += &prev[k - 1];
            }
            row[k] = v;
        }
        rows.push(row);
    }
    TriangleTable::from_rows(rows)
}

/// Second-kind Stirling numbers read off the generating series
/// `(e^t - 1)^k / k!`: the independent route the recurrence is checked
/// against.
pub fn stirling2_via_series(n_max: usize) -> TriangleTable {
    triangle_by_column_series(n_max, &expm1(n_max))
}

/// Unsigned first-kind Stirling numbers read off `(-log(1 - t))^m / m!`.
pub fn stirling1_unsigned_via_series(n_max: usize) -> TriangleTable {
    let neg_t = match TruncSeries::var(n_max) {
        Ok(t) => t.neg(),
        Err(_) => TruncSeries::zero(0), // order 0: the variable truncates away
    };
    let neg_log = neg_t.log1p().expect("zero constant term").neg();
    triangle_by_column_series(n_max, &neg_log)
}

/// Lah numbers `L(n, r)` via their generating series `(t/(1-t))^r / r!`.
/// `L(n, r)` counts partitions of an n-set into r nonempty ordered lists.
pub fn lah(n_max: usize) -> TriangleTable {
    let w = match TruncSeries::var(n_max) {
        Ok(t) => {
            let mut one_minus_t = zeros(n_max + 1);
            one_minus_t[0] = Rational::one();
            one_minus_t[1] = -Rational::one();
            let inv = TruncSeries::from_coeffs(one_minus_t)
                .expect("nonempty")
                .pow_int(-1)
                .expect("constant term 1");
            t.mul(&inv).expect("equal orders")
        }
        Err(_) => TruncSeries::zero(0), // order 0: t/(1-t) truncates away
    };
    triangle_by_column_series(n_max, &w)
}

/// Lah numbers by the closed form `L(n, r) = (n!/r!) C(n-1, r-1)`: the
/// cross-check route for [`lah`].
pub fn lah_closed_form(n_max: usize) -> TriangleTable {
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = zeros(n + 1);
        for (r, cell) in row.iter_mut().enumerate() {
            if n == 0 && r == 0 {
                *cell = Rational::one();
            } else if r >= 1 {
                let quot = Rational::new(factorial(n), factorial(r));
                *cell = quot * Rational::from_integer(binomial(n - 1, r - 1));
            }
        }
        rows.push(row);
    }
    TriangleTable::from_rows(rows)
}

/// Builds a triangle whose column `k` holds the n!-normalized coefficients of
/// `base^k / k!`, filled by multiplying one factor of `base / k` per column.
fn triangle_by_column_series(n_max: usize, base: &TruncSeries) -> TriangleTable {
    let mut rows: Vec<Vec<Rational>> = (0..=n_max).map(|n| zeros(n + 1)).collect();
    let mut power = TruncSeries::one(n_max);
    for k in 0..=n_max {
        if k > 0 {
            power = power
                .mul(base)
                .expect("equal orders")
                .scale(&Rational::new(1.into(), k.into()));
        }
        for n in k..=n_max {
            rows[n][k] = power.nfact_coeff(n).expect("n <= order");
        }
    }
    TriangleTable::from_rows(rows)
}

/// Bell polynomial `phi_n(x) = sum_k {n brace k} x^k`; `phi_n(1)` is the
/// Bell number.
pub fn bell_poly(n: usize, x: &Rational) -> Rational {
    let table = stirling2(n);
    eval_poly(table.row(n), x)
}

/// Fubini polynomial of order `r` evaluated at `x`:
/// `F_n^(r)(x) = n! [t^n] (1 - x(e^t - 1))^(-r)`.
///
/// Computed both from that series and from the sum
/// `sum_k {n brace k} k! C(r+k-1, k) x^k`; the two must agree exactly, and
/// the function asserts they do on every call.
pub fn fubini_r(n: usize, r: usize, x: &Rational) -> Rational {
    assert!(r >= 1, "fubini_r needs order r >= 1");
    let u = expm1(n).scale(x);
    let from_series = TruncSeries::one(n)
        .sub(&u)
        .expect("equal orders")
        .pow_int(-(r as i64))
        .expect("constant term 1")
        .nfact_coeff(n)
        .expect("n <= order");

    let s2 = stirling2(n);
    let mut from_sum = Rational::zero();
    let mut x_pow = Rational::one();
    for k in 0..=n {
        let weight = Rational::from_integer(factorial(k) * binomial(r + k - 1, k));
        from_sum += s2.get(n, k) * weight * &x_pow;
        x_pow *= x;
    }

    assert_eq!(
        from_series, from_sum,
        "series and sum routes disagree for F_{n}^({r})"
    );
    from_series
}

/// Bernoulli number of order `r`: `B_n^(r) = n! [t^n] (t / (e^t - 1))^r`,
/// computed as the exact quotient `t^r / (e^t - 1)^r` at a working order high
/// enough that the quotient still carries `n` coefficients.
pub fn bernoulli_order(n: usize, r: usize) -> Rational {
    let work = n + r;
    let num = TruncSeries::monomial(work, r, Rational::one()).expect("degree <= order");
    let den = expm1(work).pow_int(r as i64).expect("nonnegative power");
    num.divide(&den)
        .expect("both sides have valuation r")
        .nfact_coeff(n)
        .expect("n <= order after the drop")
}
