//! q-Pochhammer symbols, Gaussian binomials and infinite products in base `q^r`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::{LaurentSeries, Monomial, Precision};

/// The base `q^r` of a Pochhammer symbol or Gaussian polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QBase {
    r: i64,
}

impl QBase {
    pub const Q: QBase = QBase { r: 1 };
    pub const Q2: QBase = QBase { r: 2 };

    pub fn new(r: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidArgument(format!("base exponent must be >= 1, got {r}")));
        }
        Ok(QBase { r })
    }

    pub fn r(self) -> i64 {
        self.r
    }
}

impl Default for QBase {
    fn default() -> Self {
        QBase::Q
    }
}

/// `u + v q^e` as an exact series.
pub(crate) fn binomial(u: &Monomial, v: &Monomial, e: i64) -> LaurentSeries {
    &u.to_series() + &v.shift(e).to_series()
}

/// `true` if `u + v q^e` is identically zero.
pub(crate) fn binomial_vanishes(u: &Monomial, v: &Monomial, e: i64) -> bool {
    if u.is_zero() {
        return v.is_zero();
    }
    !v.is_zero() && u.exp() == v.exp() + e && (u.coeff() + v.coeff()).is_zero()
}

/// Exact product `(1 - q^{r lo})(1 - q^{r (lo+1)}) ... (1 - q^{r hi})`.
fn one_minus_run(lo: i64, hi: i64, base: QBase) -> LaurentSeries {
    let mut acc = LaurentSeries::one();
    for i in lo..=hi {
        acc = &acc * &(LaurentSeries::one() - LaurentSeries::q_pow(base.r * i));
    }
    acc
}

/// Gaussian polynomial `[n; m]` in base `q^r`; zero unless `0 <= m <= n`.
pub fn gauss_binomial(n: i64, m: i64, base: QBase) -> LaurentSeries {
    if m < 0 || m > n {
        return LaurentSeries::exact_zero();
    }
    let k = m.min(n - m);
    if k == 0 {
        return LaurentSeries::one();
    }
    let num = one_minus_run(n - k + 1, n, base);
    let den = one_minus_run(1, k, base);
    num.div_exact(&den).expect("Gaussian polynomial quotient is exact")
}

/// `prod_{k=0}^{n-1} (u + v q^{r k})`, extended to `n < 0` by
/// `1 / prod_{k=1}^{-n} (u + v q^{-r k})`.
///
/// Negative indices yield a series known below `order`.
pub fn factor_product(u: &Monomial, v: &Monomial, n: i64, base: QBase, order: i64) -> Result<LaurentSeries> {
    if n >= 0 {
        let mut acc = LaurentSeries::one();
        for k in 0..n {
            acc = &acc * &binomial(u, v, base.r * k);
        }
        return Ok(acc);
    }
    let mut den = LaurentSeries::one();
    for k in 1..=-n {
        let e = -base.r * k;
        if binomial_vanishes(u, v, e) {
            return Err(Error::PochhammerPole { factor: format!("{u} + {v}*q^{e}") });
        }
        den = &den * &binomial(u, v, e);
    }
    den.invert(order)
}

/// `(a; q^r)_n`. Negative `n` uses `(a; q^r)_{-k} = 1/(a q^{-rk}; q^r)_k`.
pub fn poch_finite(a: &Monomial, n: i64, base: QBase, order: i64) -> Result<LaurentSeries> {
    factor_product(&Monomial::one(), &a.neg(), n, base, order)
}

/// `(a; q^r)_inf` known below `order`.
///
/// Factors `1 - a q^{rk}` with nonpositive exponent are finitely many and are
/// multiplied in exactly.
pub fn poch_infinite(a: &Monomial, base: QBase, order: i64) -> Result<LaurentSeries> {
    if a.is_zero() {
        return Ok(LaurentSeries::one().truncate(order));
    }
    let one = Monomial::one();
    let minus_a = a.neg();
    let mut head = LaurentSeries::one();
    let mut k = 0;
    while a.exp() + base.r * k <= 0 {
        let e = base.r * k;
        if binomial_vanishes(&one, &minus_a, e) {
            return Ok(LaurentSeries::zero(Precision::Bounded(order)));
        }
        head = &head * &binomial(&one, &minus_a, e);
        k += 1;
    }
    let v_head = head.valuation().expect("nonvanishing head");
    let tail_order = order - v_head;
    let mut tail = LaurentSeries::one().truncate(tail_order);
    while a.exp() + base.r * k < tail_order {
        tail = &tail * &binomial(&one, &minus_a, base.r * k);
        k += 1;
    }
    Ok(&head * &tail)
}

/// `(a_1, ..., a_k; q^r)_inf` known below `order`.
pub fn product_set(args: &[Monomial], base: QBase, order: i64) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::one().truncate(order);
    for a in args {
        acc = &acc * &poch_infinite(a, base, order)?;
    }
    Ok(acc)
}

/// `1 / (a_1, ..., a_k; q^r)_inf` known below `order`.
pub fn inverse_product_set(args: &[Monomial], base: QBase, order: i64) -> Result<LaurentSeries> {
    let p = product_set(args, base, order.max(1))?;
    let v = p.valuation().ok_or_else(|| Error::DenominatorPole("vanishing infinite product".into()))?;
    if v != 0 {
        let p = product_set(args, base, order + 2 * v.max(0))?;
        return p.invert(order);
    }
    p.invert(order)
}

/// `(q^r; q^r)_n` as an exact polynomial for `n >= 0`.
pub fn q_factorial(n: i64, base: QBase) -> LaurentSeries {
    if n <= 0 {
        return LaurentSeries::one();
    }
    one_minus_run(1, n, base)
}

/// `true` if `x` is the constant one.
pub(crate) fn is_unit_one(m: &Monomial) -> bool {
    m.exp() == 0 && m.coeff().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::{eq_to_order, rat};

    fn exact(c: &[i64]) -> LaurentSeries {
        LaurentSeries::poly(0, c)
    }

    fn agree(f: &LaurentSeries, g: &LaurentSeries, order: i64) -> bool {
        eq_to_order(f, g, order).unwrap().is_none()
    }

    fn poly_eq(f: &LaurentSeries, g: &LaurentSeries) -> bool {
        crate::fps::eq_polynomial(f, g).unwrap().is_none()
    }

    #[test]
    fn gauss_examples() {
        assert!(poly_eq(&gauss_binomial(4, 2, QBase::Q), &exact(&[1, 1, 2, 1, 1])));
        for n in 0..6 {
            assert!(poly_eq(&gauss_binomial(n, 0, QBase::Q), &LaurentSeries::one()));
        }
        assert!(gauss_binomial(-1, 0, QBase::Q).is_zero());
        assert!(gauss_binomial(3, 4, QBase::Q).is_zero());
        assert!(gauss_binomial(3, -1, QBase::Q).is_zero());
        assert!(poly_eq(&gauss_binomial(2, 1, QBase::Q2), &exact(&[1, 0, 1])));
    }

    #[test]
    fn pascal_and_symmetry() {
        for r in [1, 2] {
            let b = QBase::new(r).unwrap();
            for n in 1..=20 {
                for m in 0..=n {
                    let lhs = gauss_binomial(n, m, b);
                    let rhs = &gauss_binomial(n - 1, m - 1, b) + &gauss_binomial(n - 1, m, b).shift(r * m);
                    assert!(poly_eq(&lhs, &rhs), "pascal n={n} m={m} r={r}");
                    assert!(poly_eq(&lhs, &gauss_binomial(n, n - m, b)), "symmetry n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn q_binomial_theorem() {
        let zs = [Monomial::q(1), Monomial::int(-1, 1), Monomial::q(2), Monomial::int(2, 1)];
        for z in &zs {
            for n in 0..=8i64 {
                let lhs = poch_finite(z, n, QBase::Q, 0).unwrap();
                let mut rhs = LaurentSeries::exact_zero();
                for j in 0..=n {
                    let t = gauss_binomial(n, j, QBase::Q)
                        .scale_monomial(&z.neg().pow(j as u32))
                        .shift(j * (j - 1) / 2);
                    rhs = &rhs + &t;
                }
                assert!(poly_eq(&lhs, &rhs), "first line z={z} N={n}");
                if n == 0 {
                    // [j-1; j] vanishes at j = 0 under the two-case definition
                    continue;
                }

                let inv = lhs.invert(30).unwrap();
                let mut sum = LaurentSeries::zero(Precision::Bounded(30));
                let mut j = 0i64;
                while z.exp() * j < 30 {
                    let t = gauss_binomial(n + j - 1, j, QBase::Q).scale_monomial(&z.pow(j as u32));
                    sum = &sum + &t;
                    j += 1;
                }
                assert!(agree(&inv, &sum, 30), "second line z={z} N={n}");
            }
        }
    }

    #[test]
    fn poch_examples() {
        let p = poch_finite(&Monomial::q(1), 3, QBase::Q, 0).unwrap();
        assert!(poly_eq(&p, &exact(&[1, -1, -1, 0, 1, 1, -1])));
        let e = poch_finite(&Monomial::int(5, 3), 0, QBase::Q, 0).unwrap();
        assert!(poly_eq(&e, &LaurentSeries::one()));
        let h = poch_finite(&Monomial::int(-1, 1), -1, QBase::Q, 10).unwrap();
        assert!(agree(&h, &LaurentSeries::constant(crate::fps::ratio(1, 2)), 10));
        assert!(matches!(
            poch_finite(&Monomial::q(1), -1, QBase::Q, 10),
            Err(Error::PochhammerPole { .. })
        ));
    }

    #[test]
    fn splice_law() {
        let bases = [Monomial::int(-1, 1), Monomial::q(3), Monomial::int(2, 1), Monomial::new(crate::fps::ratio(1, 3), 0)];
        for a in &bases {
            for n in -5i64..=5 {
                for m in -5i64..=5 {
                    if n + m < -5 {
                        continue;
                    }
                    let order = 25;
                    let (Ok(p), Ok(s), Ok(t)) = (
                        poch_finite(a, n, QBase::Q, order + 40),
                        poch_finite(&a.shift(n), m, QBase::Q, order + 40),
                        poch_finite(a, n + m, QBase::Q, order),
                    ) else {
                        continue;
                    };
                    let lhs = &p * &s;
                    assert!(agree(&lhs, &t, order), "a={a} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn infinite_examples() {
        let euler = poch_infinite(&Monomial::q(1), QBase::Q, 8).unwrap();
        assert_eq!(euler.prec(), Precision::Bounded(8));
        assert!(agree(&euler, &exact(&[1, -1, -1, 0, 0, 1, 0, 1]), 8));
        assert!(agree(&poch_infinite(&Monomial::zero(), QBase::Q, 9).unwrap(), &LaurentSeries::one(), 9));
        let p5 = poch_infinite(&Monomial::q(1), QBase::new(5).unwrap(), 6).unwrap();
        assert!(agree(&p5, &exact(&[1, -1]), 6));

        let ps = product_set(&[Monomial::q(1), Monomial::q(4)], QBase::new(5).unwrap(), 6).unwrap();
        assert!(agree(&ps, &exact(&[1, -1, 0, 0, -1, 1]), 6));
        assert!(agree(&product_set(&[], QBase::Q, 4).unwrap(), &LaurentSeries::one(), 4));
        let rr = ps.truncate(7);
        let full = product_set(&[Monomial::q(1), Monomial::q(4)], QBase::new(5).unwrap(), 7).unwrap();
        let inv = full.invert(7).unwrap();
        assert!(agree(&inv, &exact(&[1, 1, 1, 1, 2, 2, 3]), 7));
        assert_eq!(rr.prec(), Precision::Bounded(6));
    }

    #[test]
    fn infinite_with_constant_and_negative_factors() {
        // (-1; q)_inf = 2 (-q; q)_inf
        let a = poch_infinite(&Monomial::int(-1, 0), QBase::Q, 20).unwrap();
        let b = poch_infinite(&Monomial::int(-1, 1), QBase::Q, 20).unwrap().scale(&rat(2));
        assert!(agree(&a, &b, 20));
        // (q^-1; q)_inf = (1 - q^-1)(1 - 1)... vanishes
        assert!(poch_infinite(&Monomial::q(-1), QBase::Q, 20).unwrap().is_zero());
        // (-q^-1; q)_inf = (1 + q^-1) (-1; q)_inf
        let c = poch_infinite(&Monomial::int(-1, -1), QBase::Q, 20).unwrap();
        let d = &LaurentSeries::poly(-1, &[1, 1]) * &a;
        assert!(agree(&c, &d, 19));
    }

    #[test]
    fn infinite_product_inverse() {
        for (c, e, r) in [(1, 1, 1), (-1, 1, 2), (1, 3, 8), (2, 1, 1)] {
            let a = Monomial::int(c, e);
            let base = QBase::new(r).unwrap();
            let p = poch_infinite(&a, base, 40).unwrap();
            let inv = p.invert(40).unwrap();
            assert!(agree(&(&p * &inv), &LaurentSeries::one(), 40));
        }
    }

    #[test]
    fn factor_product_matches_scaled_pochhammer() {
        // prod (x + xz q^k) = x^n (-z; q)_n
        let x = Monomial::int(3, -1);
        let z = Monomial::q(2);
        for n in 0..6i64 {
            let f = factor_product(&x, &x.mul(&z), n, QBase::Q, 0).unwrap();
            let g = poch_finite(&z.neg(), n, QBase::Q, 0).unwrap().scale_monomial(&x.pow(n as u32));
            assert!(poly_eq(&f, &g));
        }
    }

    #[test]
    fn zero_coefficient_helpers() {
        assert!(is_unit_one(&Monomial::one()));
        assert!(!is_unit_one(&Monomial::q(1)));
        assert!(binomial_vanishes(&Monomial::one(), &Monomial::int(-1, -2), 2));
        assert!(!binomial_vanishes(&Monomial::one(), &Monomial::int(-1, -2), 1));
        assert!(q_factorial(0, QBase::Q).coefficient(0).unwrap().is_one());
        assert!(q_factorial(3, QBase::Q).coefficient(1).unwrap() == rat(-1));
        assert!(!q_factorial(2, QBase::Q).coefficient(0).unwrap().is_zero());
    }
}
