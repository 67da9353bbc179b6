//! Coefficients of the multiple logarithm
//! `Li_{k_1,...,k_r}(t) = sum_{0 < m_1 < ... < m_r} t^(m_r) / (m_1^(k_1) ... m_r^(k_r))`,
//! summed over strictly increasing integer chains. Index entries may be
//! negative or zero, in which case the corresponding power moves to the
//! numerator and stays an exact integer.
//!
//! The production path is a prefix-sum dynamic program, linear in the depth
//! and the truncation order. [`li_series_oracle`] enumerates the chains
//! outright and exists so the two routes can be compared coefficient for
//! coefficient.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use num_traits::{One, Zero};

use crate::number::{power_recip, zeros, Rational};
use crate::series::TruncSeries;

/// A nonempty tuple of integer indices `(k_1, ..., k_r)`.
///
/// The text form, used by the CLI and file formats, is comma-separated
/// integers such as `1,2,-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    entries: Vec<i64>,
}

/// Error constructing or parsing a [`MultiIndex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexError {
    /// An index needs at least one entry.
    Empty,
    /// A text entry was not an integer.
    InvalidEntry(String),
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexError::Empty => write!(f, "index needs at least one entry"),
            IndexError::InvalidEntry(s) => write!(f, "invalid index entry: {s:?}"),
        }
    }
}

impl core::error::Error for IndexError {}

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Result<Self, IndexError> {
        if entries.is_empty() {
            return Err(IndexError::Empty);
        }
        Ok(Self { entries })
    }

    /// The all-ones index of the given depth (`r >= 1`), the one that
    /// collapses every multi-index family onto its classical counterpart.
    pub fn all_ones(r: usize) -> Self {
        assert!(r >= 1, "all_ones needs depth >= 1");
        Self { entries: alloc::vec![1; r] }
    }

    /// Number of entries `r`.
    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().expect("index is never empty")
    }

    /// A copy with one more entry on the right.
    pub fn with_appended(&self, k: i64) -> Self {
        let mut entries = self.entries.clone();
        entries.push(k);
        Self { entries }
    }

    /// A copy with the last entry decreased by one.
    pub fn with_last_decremented(&self) -> Self {
        let mut entries = self.entries.clone();
        *entries.last_mut().expect("index is never empty") -= 1;
        Self { entries }
    }

    /// The index without its last entry, or `None` at depth 1.
    pub fn prefix(&self) -> Option<Self> {
        if self.entries.len() < 2 {
            return None;
        }
        Some(Self { entries: self.entries[..self.entries.len() - 1].to_vec() })
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiIndex {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, IndexError> {
        if s.trim().is_empty() {
            return Err(IndexError::Empty);
        }
        let entries = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| IndexError::InvalidEntry(String::from(tok)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MultiIndex::new(entries)
    }
}

/// `Li_{k_1,...,k_r}(t)` truncated at the given order.
///
/// Dynamic program over prefix sums: with `S_0(m) = 1` and
/// `S_j(m) = sum_{m' < m} S_(j-1)(m') / m'^(k_j)`, the coefficient of `t^n`
/// is `S_(r-1)(n) / n^(k_r)`. Each level is one sweep, so the whole table
/// costs `O(r * order)` rational operations.
pub fn li_series(index: &MultiIndex, order: usize) -> TruncSeries {
    let ks = index.entries();
    let r = ks.len();
    // s[m] holds S_(j-1)(m) while level j is being built.
    let mut s = alloc::vec![Rational::one(); order + 1];
    for &kj in &ks[..r - 1] {
        let mut next = zeros(order + 1);
        for m in 2..=order {
            let mut val = next[m - 1].clone();
            if !s[m - 1].is_zero() {
                val += &s[m - 1] * power_recip(m - 1, kj);
            }
            next[m] = val;
        }
        s = next;
    }
    let mut coeffs = zeros(order + 1);
    for n in 1..=order {
        if !s[n].is_zero() {
            coeffs[n] = &s[n] * power_recip(n, ks[r - 1]);
        }
    }
    TruncSeries::from_coeffs(coeffs).expect("order + 1 coefficients")
}

/// Same series as [`li_series`], computed by explicitly enumerating every
/// strictly increasing chain `0 < m_1 < ... < m_r <= order` and accumulating
/// its weight. Exponential in the depth; reference implementation for tests.
pub fn li_series_oracle(index: &MultiIndex, order: usize) -> TruncSeries {
    fn chains(
        ks: &[i64],
        pos: usize,
        m_min: usize,
        order: usize,
        weight: &Rational,
        coeffs: &mut [Rational],
    ) {
        let k = ks[pos];
        for m in m_min..=order {
            let w = weight * power_recip(m, k);
            if pos + 1 == ks.len() {
                coeffs[m] += &w;
            } else {
                chains(ks, pos + 1, m + 1, order, &w, coeffs);
            }
        }
    }

    let mut coeffs = zeros(order + 1);
    if order >= 1 {
        chains(index.entries(), 0, 1, order, &Rational::one(), &mut coeffs);
    }
    TruncSeries::from_coeffs(coeffs).expect("order + 1 coefficients")
}

/// Failed coefficient comparison from one of the derivative checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    /// The trailing-one check needs depth >= 2 and a final entry of 1.
    NotTrailingOne,
    /// The two sides differ at `t^n`.
    Mismatch { n: usize, lhs: Rational, rhs: Rational },
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::NotTrailingOne => {
                write!(f, "index must have depth >= 2 and end in 1")
            }
            CheckError::Mismatch { n, lhs, rhs } => {
                write!(f, "coefficient {n}: {lhs} != {rhs}")
            }
        }
    }
}

impl core::error::Error for CheckError {}

/// Verifies `d/dt Li_{k_1,...,k_r} = (1/t) Li_{k_1,...,k_r - 1}` (last entry
/// decremented) as the coefficient identity `n c_n(k) = c_n(k^-)` for
/// `1 <= n <= order`.
pub fn check_deriv_drop(index: &MultiIndex, order: usize) -> Result<(), CheckError> {
    let lhs = li_series(index, order);
    let rhs = li_series(&index.with_last_decremented(), order);
    for n in 1..=order {
        let scaled = lhs.coeff(n) * Rational::from_integer(n.into());
        if &scaled != rhs.coeff(n) {
            return Err(CheckError::Mismatch { n, lhs: scaled, rhs: rhs.coeff(n).clone() });
        }
    }
    Ok(())
}

/// Verifies `d/dt Li_{k_1,...,k_(r-1),1} = (1/(1-t)) Li_{k_1,...,k_(r-1)}`
/// (depth drops by one when the final entry is 1), coefficient-exact to
/// `order - 1`. The left side goes through [`TruncSeries::derivative`] and the
/// right side through the geometric series, so the identity also exercises the
/// series operations themselves.
pub fn check_deriv_trailing_one(index: &MultiIndex, order: usize) -> Result<(), CheckError> {
    if index.last() != 1 {
        return Err(CheckError::NotTrailingOne);
    }
    let Some(prefix) = index.prefix() else {
        return Err(CheckError::NotTrailingOne);
    };
    if order == 0 {
        return Ok(());
    }
    let lhs = li_series(index, order)
        .derivative()
        .expect("order >= 1 checked above");
    let mut one_minus_t = zeros(order);
    one_minus_t[0] = Rational::one();
    if order >= 2 {
        one_minus_t[1] = -Rational::one();
    }
    let geo = TruncSeries::from_coeffs(one_minus_t)
        .expect("order coefficients")
        .pow_int(-1)
        .expect("1 - t is invertible");
    let rhs = geo
        .mul(&li_series(&prefix, order - 1))
        .expect("orders match by construction");
    for n in 0..=order - 1 {
        if lhs.coeff(n) != rhs.coeff(n) {
            return Err(CheckError::Mismatch {
                n,
                lhs: lhs.coeff(n).clone(),
                rhs: rhs.coeff(n).clone(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rational;

    fn idx(entries: &[i64]) -> MultiIndex {
        MultiIndex::new(entries.to_vec()).unwrap()
    }

    // ==================== MultiIndex ====================

    #[test]
    fn index_text_round_trip() {
        let k: MultiIndex = "1,2,-1".parse().unwrap();
        assert_eq!(k.entries(), &[1, 2, -1]);
        assert_eq!(k.to_string(), "1,2,-1");
        let single: MultiIndex = "3".parse().unwrap();
        assert_eq!(single.depth(), 1);
        assert_eq!(" 1 , -2 ".parse::<MultiIndex>().unwrap().entries(), &[1, -2]);
    }

    #[test]
    fn index_rejects_bad_text() {
        assert_eq!("".parse::<MultiIndex>(), Err(IndexError::Empty));
        assert!(matches!(
            "1,x".parse::<MultiIndex>(),
            Err(IndexError::InvalidEntry(_))
        ));
        assert!(matches!(
            "1,,2".parse::<MultiIndex>(),
            Err(IndexError::InvalidEntry(_))
        ));
        assert_eq!(MultiIndex::new(alloc::vec![]), Err(IndexError::Empty));
    }

    #[test]
    fn index_helpers() {
        let k = idx(&[1, 2]);
        assert_eq!(k.with_appended(1).entries(), &[1, 2, 1]);
        assert_eq!(k.with_last_decremented().entries(), &[1, 1]);
        assert_eq!(k.prefix().unwrap().entries(), &[1]);
        assert_eq!(idx(&[5]).prefix(), None);
        assert_eq!(MultiIndex::all_ones(3).entries(), &[1, 1, 1]);
    }

    // ==================== li_series ====================

    /// Depth 1 is the ordinary polylogarithm: coefficient of t^3 in Li_1 is
    /// 1/3.
    #[test]
    fn li_depth_one() {
        let f = li_series(&idx(&[1]), 5);
        assert_eq!(f.coeff(3), &rational(1, 3));
        assert_eq!(f.coeff(0), &rational(0, 1));
        assert_eq!(f.coeff(1), &rational(1, 1));
    }

    /// Chains (1,3) and (2,3) give 1/3 + 1/6 = 1/2 at t^3 for index (1,1).
    #[test]
    fn li_depth_two_unit_weights() {
        let f = li_series(&idx(&[1, 1]), 4);
        assert_eq!(f.coeff(3), &rational(1, 2));
        assert_eq!(f.coeff(2), &rational(1, 2));
    }

    /// Chains (1,3) and (2,3) give 1/9 + 1/18 = 1/6 at t^3 for index (1,2).
    #[test]
    fn li_depth_two_mixed_weights() {
        let f = li_series(&idx(&[1, 2]), 3);
        assert_eq!(f.coeff(3), &rational(1, 6));
    }

    /// Negative entries put integer powers in the numerator: index (-1, 2)
    /// at t^2 has the single chain (1,2) with weight 1^1 / 2^2 = 1/4.
    #[test]
    fn li_negative_entry() {
        let f = li_series_oracle(&idx(&[-1, 2]), 2);
        assert_eq!(f.coeff(2), &rational(1, 4));
        assert_eq!(li_series(&idx(&[-1, 2]), 2), f);
    }

    #[test]
    fn li_oracle_depth_one() {
        let f = li_series_oracle(&idx(&[2]), 2);
        assert_eq!(f.coeff(2), &rational(1, 4));
        assert_eq!(f.coeff(1), &rational(1, 1));
    }

    /// Every tuple over `entries` of the given depth.
    fn all_tuples(entries: &[i64], depth: usize) -> Vec<Vec<i64>> {
        if depth == 0 {
            return alloc::vec![alloc::vec![]];
        }
        let mut out = Vec::new();
        for base in all_tuples(entries, depth - 1) {
            for &k in entries {
                let mut e = base.clone();
                e.push(k);
                out.push(e);
            }
        }
        out
    }

    /// The prefix-sum program and the chain enumeration agree on every
    /// coefficient across depths and signs.
    #[test]
    fn li_dp_matches_oracle() {
        let entries = [-2i64, -1, 0, 1, 2];
        let order = 8;
        let mut checked = 0usize;
        for depth in 1..=3 {
            for tuple in all_tuples(&entries, depth) {
                let k = idx(&tuple);
                assert_eq!(
                    li_series(&k, order),
                    li_series_oracle(&k, order),
                    "index {k}"
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 5 + 25 + 125);
    }

    /// The lowest surviving power is t^r, carried by the single chain
    /// (1, 2, ..., r).
    #[test]
    fn li_valuation_and_leading_chain() {
        for entries in [&[2][..], &[1, 1], &[0, 2], &[-1, 2, 1], &[3, 1, 2]] {
            let k = idx(entries);
            let r = k.depth();
            let f = li_series(&k, 6);
            assert_eq!(f.valuation(), r, "index {k}");
            let mut minimal = Rational::one();
            for (i, &ki) in entries.iter().enumerate() {
                minimal *= power_recip(i + 1, ki);
            }
            assert_eq!(f.coeff(r), &minimal, "index {k}");
        }
    }

    #[test]
    fn li_order_zero_is_zero() {
        assert_eq!(li_series(&idx(&[1, 1]), 0), TruncSeries::zero(0));
    }

    // ==================== derivative identities ====================

    /// d/dt Li_k = (1/t) Li_(k-1) in the last entry, across signs of k.
    #[test]
    fn deriv_drop_across_signs() {
        assert_eq!(check_deriv_drop(&idx(&[2]), 10), Ok(()));
        assert_eq!(check_deriv_drop(&idx(&[0]), 8), Ok(()));
        assert_eq!(check_deriv_drop(&idx(&[1, 3]), 12), Ok(()));
        assert_eq!(check_deriv_drop(&idx(&[-1, 2]), 9), Ok(()));
    }

    /// A trailing 1 instead drops the depth: d/dt Li_{k',1} = Li_{k'}/(1-t).
    #[test]
    fn deriv_trailing_one_drops_depth() {
        assert_eq!(check_deriv_trailing_one(&idx(&[1, 1]), 12), Ok(()));
        assert_eq!(check_deriv_trailing_one(&idx(&[2, 1]), 10), Ok(()));
        assert_eq!(check_deriv_trailing_one(&idx(&[1, 1, 1]), 12), Ok(()));
        assert_eq!(check_deriv_trailing_one(&idx(&[-2, 3, 1]), 9), Ok(()));
    }

    #[test]
    fn deriv_trailing_one_preconditions() {
        assert_eq!(
            check_deriv_trailing_one(&idx(&[1, 2]), 6),
            Err(CheckError::NotTrailingOne)
        );
        assert_eq!(
            check_deriv_trailing_one(&idx(&[1]), 6),
            Err(CheckError::NotTrailingOne)
        );
    }
}
