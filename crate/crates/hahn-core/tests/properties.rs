//! Algebraic invariants of the exact substrate and the weights, over random inputs.

use proptest::prelude::*;

use hahn_core::hahn_bi::{grid_points, weight2_raw};
use hahn_core::hahn_multi::{mv_weight, simplex_points};
use hahn_core::hahn_uni::{hahn_weight, hahn_poly};
use hahn_core::numeric::{pochhammer, q};
use hahn_core::{BiParams, BiPoly, MultiParams, RadicalScalar, Rational, RationalMatrix, UniParams};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

/// Admissible parameters `> −1`.
fn parameter() -> impl Strategy<Value = Rational> {
    (-11i64..=60, 1i64..=12).prop_filter_map("above -1", |(n, d)| {
        let r = q(n, d);
        (r > -1).then_some(r)
    })
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=50, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pochhammer_splits(a in rational(), m in 0usize..6, n in 0usize..6) {
        let lhs = pochhammer(&a, m + n);
        let rhs = pochhammer(&a, m) * pochhammer(&(&a + Rational::from(m)), n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_text_roundtrips(r in rational()) {
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn radical_product_squares(c1 in rational(), s1 in positive(), c2 in rational(), s2 in positive()) {
        let x = RadicalScalar::new(c1, s1).unwrap();
        let y = RadicalScalar::new(c2, s2).unwrap();
        let z = &x * &y;
        prop_assert_eq!(z.squared(), x.squared() * y.squared());
        prop_assert_eq!(z.signum(), x.signum() * y.signum());
    }

    #[test]
    fn nullspace_is_annihilated(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..5)) {
        let m = RationalMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rational::integer(x)).collect()).collect(),
        );
        let basis = m.nullspace();
        prop_assert_eq!(basis.len() + m.rank(), m.cols());
        for v in &basis {
            prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn trinomial_coefficients(n in 0usize..9) {
        let f = (&(&BiPoly::one() + &BiPoly::z1()) + &BiPoly::z2()).pow(n);
        for a in 0..=n {
            for b in 0..=n - a {
                let c = hahn_core::numeric::multinomial(n, &[a, b, n - a - b]).unwrap();
                prop_assert_eq!(f.coeff(a, b), c);
            }
        }
    }

    #[test]
    fn uni_weights_sum_to_one(a in parameter(), b in parameter(), n in 0usize..8) {
        let p = UniParams::new(a, b, n).unwrap();
        let total: Rational = (0..=n).map(|x| hahn_weight(x, &p).unwrap()).sum();
        prop_assert_eq!(total, Rational::one());
    }

    #[test]
    fn bi_weights_sum_to_one(a1 in parameter(), a2 in parameter(), a3 in parameter(), n in 0usize..6) {
        let p = BiParams::new(a1, a2, a3, n).unwrap();
        let total: Rational = grid_points(n).iter().map(|g| weight2_raw(g.i, g.k, &p)).sum();
        prop_assert_eq!(total, Rational::one());
    }

    #[test]
    fn mv_weights_sum_to_one(alphas in prop::collection::vec(parameter(), 2..5), n in 0usize..4) {
        let d = alphas.len() - 1;
        let p = MultiParams::new(alphas, n).unwrap();
        let total: Rational = simplex_points(d, n).iter().map(|i| mv_weight(i, &p).unwrap()).sum();
        prop_assert_eq!(total, Rational::one());
    }

    #[test]
    fn hahn_value_at_origin(n in 0usize..8, a in parameter(), b in parameter(), level in 0i64..10) {
        prop_assert_eq!(hahn_poly(n, &Rational::zero(), &a, &b, level), leading_at_origin(n, &a, level));
    }
}

/// `h_n(0) = (α+1)_n (−N)_n`.
fn leading_at_origin(n: usize, a: &Rational, level: i64) -> Rational {
    pochhammer(&(a + Rational::one()), n) * pochhammer(&Rational::integer(-level), n)
}
