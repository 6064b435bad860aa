use proptest::prelude::*;

use qseries::eq_to_order;
use qseries::fps::{eq_polynomial, ratio, LaurentSeries, Monomial, Precision};
use qseries::qkit::{gauss_binomial, poch_finite, poch_infinite, QBase};

fn base() -> impl Strategy<Value = QBase> {
    (1i64..=4).prop_map(|r| QBase::new(r).unwrap())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    ((-3i64..=3).prop_filter("nonzero", |c| *c != 0), 1i64..=3, -2i64..=4)
        .prop_map(|(n, d, e)| Monomial::new(ratio(n, d), e))
}

fn same_poly(f: &LaurentSeries, g: &LaurentSeries) -> bool {
    eq_polynomial(f, g).unwrap().is_none()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pascal_and_symmetry(n in 1i64..=20, k in 0i64..=20, b in base()) {
        let k = k.min(n);
        let g = gauss_binomial(n, k, b);
        let rec = &gauss_binomial(n - 1, k - 1, b) + &gauss_binomial(n - 1, k, b).shift(b.r() * k);
        prop_assert!(same_poly(&g, &rec));
        prop_assert!(same_poly(&g, &gauss_binomial(n, n - k, b)));
    }

    #[test]
    fn gauss_binomial_at_q_one_is_binomial(n in 0i64..=15, k in 0i64..=15) {
        let g = gauss_binomial(n, k, QBase::Q);
        let total = g.terms().fold(ratio(0, 1), |acc, (_, c)| acc + c);
        let mut want = if k > n { 0i64 } else { 1 };
        if k <= n {
            for i in 0..k {
                want = want * (n - i) / (i + 1);
            }
        }
        prop_assert_eq!(total, ratio(want, 1));
    }

    #[test]
    fn q_binomial_theorem(z in monomial(), n in 0i64..=8, b in base()) {
        let lhs = poch_finite(&z, n, b, 0).unwrap();
        let mut rhs = LaurentSeries::exact_zero();
        for j in 0..=n {
            let t = gauss_binomial(n, j, b).scale_monomial(&z.neg().pow(j as u32)).shift(b.r() * j * (j - 1) / 2);
            rhs = &rhs + &t;
        }
        prop_assert!(same_poly(&lhs, &rhs));
    }

    #[test]
    fn q_binomial_reciprocal(e in 1i64..=3, c in prop::sample::select(vec![1i64, -1, 2]), n in 1i64..=8) {
        let z = Monomial::int(c, e);
        let inv = poch_finite(&z, n, QBase::Q, 0).unwrap().invert(30).unwrap();
        let mut sum = LaurentSeries::zero(Precision::Bounded(30));
        let mut j = 0;
        while e * j < 30 {
            sum = &sum + &gauss_binomial(n + j - 1, j, QBase::Q).scale_monomial(&z.pow(j as u32));
            j += 1;
        }
        prop_assert!(eq_to_order(&inv, &sum, 30).unwrap().is_none());
    }

    #[test]
    fn splice_law(a in monomial(), n in -5i64..=5, m in -5i64..=5, b in base()) {
        prop_assume!(n + m >= -5);
        let order = 20;
        let parts = (
            poch_finite(&a, n, b, order + 60),
            poch_finite(&a.shift(b.r() * n), m, b, order + 60),
            poch_finite(&a, n + m, b, order),
        );
        if let (Ok(p), Ok(s), Ok(t)) = parts {
            let lhs = &p * &s;
            let k = lhs.prec().min(t.prec()).bound().unwrap_or(order).min(order);
            prop_assert!(eq_to_order(&lhs, &t, k).unwrap().is_none());
        }
    }

    #[test]
    fn infinite_product_has_inverse(a in monomial(), b in base()) {
        prop_assume!(a.exp() >= 1);
        let order = 30;
        let p = poch_infinite(&a, b, order).unwrap();
        let inv = p.invert(order).unwrap();
        prop_assert!(eq_to_order(&(&p * &inv), &LaurentSeries::one(), order).unwrap().is_none());
    }

    #[test]
    fn finite_product_tends_to_infinite(a in monomial(), b in base()) {
        prop_assume!(a.exp() >= 1);
        let order = 25;
        let fin = poch_finite(&a, order, b, 0).unwrap();
        let inf = poch_infinite(&a, b, order).unwrap();
        prop_assert!(eq_to_order(&fin, &inf, order).unwrap().is_none());
    }
}
