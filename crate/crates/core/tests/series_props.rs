//! Property tests for the truncated-series ring: the algebraic laws that
//! every downstream identity check silently leans on.

use multilog_core::{Rational, TruncSeries};
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// A series of exactly the given order.
fn series(order: usize) -> impl Strategy<Value = TruncSeries> {
    proptest::collection::vec(rat(), order + 1)
        .prop_map(|c| TruncSeries::from_coeffs(c).expect("nonempty"))
}

/// Same, with the constant term forced to zero (composable / exp-able).
fn series_no_constant(order: usize) -> impl Strategy<Value = TruncSeries> {
    series(order).prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = Rational::new(0.into(), 1.into());
        TruncSeries::from_coeffs(coeffs).expect("nonempty")
    })
}

proptest! {
    /// Addition and multiplication are commutative at a common order.
    #[test]
    fn ring_commutativity(f in series(8), g in series(8)) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
    }

    /// Both operations associate, and multiplication distributes over
    /// addition — truncation commutes with all three.
    #[test]
    fn ring_associativity_distributivity(f in series(7), g in series(7), h in series(7)) {
        prop_assert_eq!(
            f.add(&g).unwrap().add(&h).unwrap(),
            f.add(&g.add(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.add(&g).unwrap().mul(&h).unwrap(),
            f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap()
        );
    }

    /// One and zero behave as the ring units.
    #[test]
    fn ring_units(f in series(8)) {
        prop_assert_eq!(f.mul(&TruncSeries::one(8)).unwrap(), f.clone());
        prop_assert_eq!(f.add(&TruncSeries::zero(8)).unwrap(), f.clone());
        prop_assert_eq!(f.sub(&f).unwrap(), TruncSeries::zero(8));
        prop_assert_eq!(f.neg().neg(), f);
    }

    /// Dividing a product by a regular factor recovers the other factor.
    #[test]
    fn divide_inverts_mul(f in series(8), g in series(8)) {
        prop_assume!(!g.coeff(0).is_zero());
        prop_assert_eq!(f.mul(&g).unwrap().divide(&g).unwrap(), f);
    }

    /// exp and log1p invert each other around series with no constant term.
    #[test]
    fn exp_log1p_inverse_pair(f in series_no_constant(8)) {
        let e = f.exp().unwrap();
        let g = e.sub(&TruncSeries::one(8)).unwrap();
        prop_assert_eq!(g.log1p().unwrap(), f.clone());
        prop_assert_eq!(f.log1p().unwrap().exp().unwrap(), TruncSeries::one(8).add(&f).unwrap());
    }

    /// Composition is associative when the inner series have no constant
    /// term.
    #[test]
    fn compose_associativity(
        f in series(6),
        g in series_no_constant(6),
        h in series_no_constant(6),
    ) {
        prop_assert_eq!(
            f.compose(&g).unwrap().compose(&h).unwrap(),
            f.compose(&g.compose(&h).unwrap()).unwrap()
        );
    }

    /// Chain rule through exp: (e^f)' = f' e^f, compared at order - 1.
    #[test]
    fn exp_derivative_chain_rule(f in series_no_constant(8)) {
        let e = f.exp().unwrap();
        let lhs = e.derivative().unwrap();
        let rhs = f.derivative().unwrap().mul(&e.truncated(7).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// integrate is a section of derivative.
    #[test]
    fn derivative_undoes_integrate(f in series(8)) {
        prop_assert_eq!(f.integrate().derivative().unwrap(), f);
    }

    /// pow_int agrees with repeated multiplication for small exponents.
    #[test]
    fn pow_int_matches_iterated_mul(f in series(6), e in 0usize..=4) {
        let mut by_mul = TruncSeries::one(6);
        for _ in 0..e {
            by_mul = by_mul.mul(&f).unwrap();
        }
        prop_assert_eq!(f.pow_int(e as i64).unwrap(), by_mul);
    }
}
