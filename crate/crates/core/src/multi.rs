//! The multi-index number families generated by substituting the three maps
//! `t`, `1 - e^(-t)` and `1 - e^(1 - e^t)` into the multiple logarithm.
//!
//! Each family is a sequence of exact rationals indexed by `n`, produced as
//! `n! [t^n]` of a generating series built from [`crate::multilog::li_series`]
//! and the kernels in [`crate::series`]. When the index is all ones the
//! families collapse to the classical tables in [`crate::classical`], which is
//! what ties the whole construction down.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use num_traits::{One, Zero};

use crate::multilog::{li_series, MultiIndex};
use crate::number::{power_recip, sign, Rational};
use crate::series::{nested_map, one_minus_exp_neg, TruncSeries};

/// The five table families the crate can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `n! [t^n] Li_index(1 - e^(1 - e^t))`: second-kind numbers.
    MultiStirling2,
    /// `n! [t^n] Li_index(t)`: unsigned first-kind numbers.
    UnsignedMultiStirling1,
    /// `n! [t^n] (-1)^r Li_index(-t)`: signed first-kind numbers.
    SignedMultiStirling1,
    /// `n! [t^n] Li_index(1 - e^(-t)) / (1 - t)^r`: Lah-type numbers.
    MultiLah,
    /// `n! [t^n] Li_index(1 - e^(-t)) / (1 - e^(-t))^r`: Bernoulli-type
    /// numbers.
    MultiBernoulli,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::MultiStirling2,
        Family::UnsignedMultiStirling1,
        Family::SignedMultiStirling1,
        Family::MultiLah,
        Family::MultiBernoulli,
    ];

    /// The hyphenated name used by the CLI and file formats.
    pub fn name(self) -> &'static str {
        match self {
            Family::MultiStirling2 => "multi-stirling2",
            Family::UnsignedMultiStirling1 => "unsigned-multi-stirling1",
            Family::SignedMultiStirling1 => "signed-multi-stirling1",
            Family::MultiLah => "multi-lah",
            Family::MultiBernoulli => "multi-bernoulli",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error parsing a [`Family`] name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown family {:?}; expected one of", self.0)?;
        for fam in Family::ALL {
            write!(f, " {}", fam.name())?;
        }
        Ok(())
    }
}

impl core::error::Error for UnknownFamily {}

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, UnknownFamily> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFamily(String::from(s)))
    }
}

/// Dense table of one family at one index: `values[n]` for `0 <= n <= max_n`,
/// with structural zeros kept in place rather than elided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberTable {
    family: Family,
    index: MultiIndex,
    values: Vec<Rational>,
}

impl NumberTable {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> &MultiIndex {
        &self.index
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// Value at `n`. Panics if `n > max_n`.
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    fn build(family: Family, index: &MultiIndex, series: &TruncSeries) -> Self {
        let values: Vec<Rational> = (0..=series.order())
            .map(|n| series.nfact_coeff(n).expect("n <= order"))
            .collect();
        let table = Self { family, index: index.clone(), values };
        // The generating series has valuation r (except for the Bernoulli
        // quotient, which is regular with a known constant term); turn that
        // convention into a checked invariant on every construction.
        match family {
            Family::MultiBernoulli => {
                let mut expect = Rational::one();
                for (i, &k) in index.entries().iter().enumerate() {
                    expect *= power_recip(i + 1, k);
                }
                assert_eq!(
                    table.values[0], expect,
                    "constant term must be the weight of the minimal chain"
                );
            }
            _ => {
                for n in 0..index.depth().min(table.values.len()) {
                    assert!(
                        table.values[n].is_zero(),
                        "values below the depth must vanish, found {} at n={n}",
                        table.values[n]
                    );
                }
            }
        }
        table
    }
}

/// Multi-Stirling numbers of the second kind:
/// `{n brace index} = n! [t^n] Li_index(1 - e^(1 - e^t))`.
///
/// A `max_n` below the depth is fine; every value in range is a structural
/// zero then.
pub fn multi_stirling2(index: &MultiIndex, max_n: usize) -> NumberTable {
    let f = li_series(index, max_n)
        .compose(&nested_map(max_n))
        .expect("nested map has zero constant term");
    NumberTable::build(Family::MultiStirling2, index, &f)
}

/// Unsigned multi-Stirling numbers of the first kind:
/// `[n brack index] = n! [t^n] Li_index(t)`.
pub fn unsigned_multi_stirling1(index: &MultiIndex, max_n: usize) -> NumberTable {
    let f = li_series(index, max_n);
    NumberTable::build(Family::UnsignedMultiStirling1, index, &f)
}

/// Signed multi-Stirling numbers of the first kind:
/// `S^(index)(n) = n! [t^n] (-1)^r Li_index(-t)`, computed that way through
/// composition and asserted against the sign relation
/// `(-1)^(n+r) [n brack index]` from the unsigned table.
pub fn signed_multi_stirling1(index: &MultiIndex, max_n: usize) -> NumberTable {
    let li = li_series(index, max_n);
    let substituted = match TruncSeries::monomial(max_n, 1, -Rational::one()) {
        Ok(neg_t) => li.compose(&neg_t).expect("-t has zero constant term"),
        Err(_) => li, // order 0: Li already truncates to its constant 0
    };
    let f = substituted.scale(&sign(index.depth()));
    let table = NumberTable::build(Family::SignedMultiStirling1, index, &f);

    let unsigned = unsigned_multi_stirling1(index, max_n);
    for n in 0..=max_n {
        let expect = unsigned.get(n) * sign(n + index.depth());
        assert_eq!(
            table.values[n], expect,
            "substitution route and sign-twist route disagree at n={n}"
        );
    }
    table
}

/// Multi-Lah numbers:
/// `L^(index)(n, r) = n! [t^n] Li_index(1 - e^(-t)) (1 - t)^(-r)`.
pub fn multi_lah(index: &MultiIndex, max_n: usize) -> NumberTable {
    let base = li_series(index, max_n)
        .compose(&one_minus_exp_neg(max_n))
        .expect("1 - e^(-t) has zero constant term");
    let f = match TruncSeries::monomial(max_n, 1, -Rational::one()) {
        Ok(neg_t) => {
            let inv = TruncSeries::one(max_n)
                .add(&neg_t)
                .expect("equal orders")
                .pow_int(-(index.depth() as i64))
                .expect("constant term 1");
            base.mul(&inv).expect("equal orders")
        }
        Err(_) => base, // order 0: (1 - t)^(-r) is the constant 1
    };
    NumberTable::build(Family::MultiLah, index, &f)
}

/// Multi-Bernoulli numbers:
/// `B_n^(index) = n! [t^n] Li_index(1 - e^(-t)) / (1 - e^(-t))^r`.
///
/// Numerator and denominator both have valuation `r`, so the quotient is a
/// regular series; computing at working order `max_n + r` leaves exactly
/// `max_n + 1` coefficients after the division drops the order.
pub fn multi_bernoulli(index: &MultiIndex, max_n: usize) -> NumberTable {
    let r = index.depth();
    let work = max_n + r;
    let u = one_minus_exp_neg(work);
    let num = li_series(index, work)
        .compose(&u)
        .expect("1 - e^(-t) has zero constant term");
    let den = u.pow_int(r as i64).expect("nonnegative power");
    let q = num.divide(&den).expect("numerator valuation >= r");
    NumberTable::build(Family::MultiBernoulli, index, &q)
}

/// Table constructor dispatched on the family tag.
pub fn family_table(family: Family, index: &MultiIndex, max_n: usize) -> NumberTable {
    match family {
        Family::MultiStirling2 => multi_stirling2(index, max_n),
        Family::UnsignedMultiStirling1 => unsigned_multi_stirling1(index, max_n),
        Family::SignedMultiStirling1 => signed_multi_stirling1(index, max_n),
        Family::MultiLah => multi_lah(index, max_n),
        Family::MultiBernoulli => multi_bernoulli(index, max_n),
    }
}
