//! Continued fractions `b0 + a1/(b1 + a2/(b2 + ...))` over Laurent series.

use std::fmt;
use std::sync::Arc;

use crate::fps::{eq_polynomial, eq_to_order, LaurentSeries, Monomial};
use crate::qkit::{gauss_binomial, QBase};

/// Generator of partial numerators or denominators, indexed from 1.
pub type Generator = Arc<dyn Fn(i64) -> LaurentSeries + Send + Sync>;

/// A continued fraction given by its partial numerators `a_n` and
/// denominators `b_n`.
#[derive(Clone)]
pub struct CFSpec {
    b0: LaurentSeries,
    a: Generator,
    b: Generator,
}

impl fmt::Debug for CFSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CFSpec").field("b0", &self.b0.to_string()).finish_non_exhaustive()
    }
}

impl CFSpec {
    pub fn new(
        b0: LaurentSeries,
        a: impl Fn(i64) -> LaurentSeries + Send + Sync + 'static,
        b: impl Fn(i64) -> LaurentSeries + Send + Sync + 'static,
    ) -> Self {
        CFSpec { b0, a: Arc::new(a), b: Arc::new(b) }
    }

    pub fn b0(&self) -> &LaurentSeries {
        &self.b0
    }

    pub fn a(&self, n: i64) -> LaurentSeries {
        (self.a)(n)
    }

    pub fn b(&self, n: i64) -> LaurentSeries {
        (self.b)(n)
    }

    /// Same fraction with the partial numerator `a_n` replaced.
    pub fn with_a(&self, a: impl Fn(i64) -> LaurentSeries + Send + Sync + 'static) -> Self {
        CFSpec { b0: self.b0.clone(), a: Arc::new(a), b: self.b.clone() }
    }
}

/// Incrementally extended convergents `P_n / Q_n`, starting from
/// `P_{-1} = 1`, `Q_{-1} = 0`, `P_0 = b0`, `Q_0 = 1`.
#[derive(Debug, Clone)]
pub struct Convergents {
    spec: CFSpec,
    p: Vec<LaurentSeries>,
    q: Vec<LaurentSeries>,
}

impl Convergents {
    pub fn new(spec: CFSpec) -> Self {
        let p = vec![LaurentSeries::one(), spec.b0.clone()];
        let q = vec![LaurentSeries::exact_zero(), LaurentSeries::one()];
        Convergents { spec, p, q }
    }

    pub fn spec(&self) -> &CFSpec {
        &self.spec
    }

    /// Number of convergents computed so far, counting from `n = 0`.
    pub fn computed(&self) -> i64 {
        self.p.len() as i64 - 1
    }

    /// Extends the cache through index `n`.
    pub fn extend_to(&mut self, n: i64) {
        while self.computed() <= n {
            let k = self.computed();
            let (an, bn) = (self.spec.a(k), self.spec.b(k));
            let len = self.p.len();
            let p = &(&bn * &self.p[len - 1]) + &(&an * &self.p[len - 2]);
            let q = &(&bn * &self.q[len - 1]) + &(&an * &self.q[len - 2]);
            self.p.push(p);
            self.q.push(q);
        }
    }

    /// `P_n` for `n >= -1`.
    pub fn p(&mut self, n: i64) -> &LaurentSeries {
        self.extend_to(n);
        &self.p[(n + 1) as usize]
    }

    /// `Q_n` for `n >= -1`.
    pub fn q(&mut self, n: i64) -> &LaurentSeries {
        self.extend_to(n);
        &self.q[(n + 1) as usize]
    }

    /// `(P_n, Q_n)` for `n >= -1`.
    pub fn get(&mut self, n: i64) -> (LaurentSeries, LaurentSeries) {
        self.extend_to(n);
        let i = (n + 1) as usize;
        (self.p[i].clone(), self.q[i].clone())
    }

    /// Checks `P_n Q_{n-1} - P_{n-1} Q_n = (-1)^{n-1} a_1 ... a_n` for
    /// `1 <= n <= big_n`, taking the `a_i` from `numerators`.
    pub fn determinant_holds(&mut self, numerators: &dyn Fn(i64) -> LaurentSeries, big_n: i64) -> bool {
        self.extend_to(big_n);
        let mut prod = LaurentSeries::one();
        for n in 1..=big_n {
            prod = &prod * &numerators(n);
            let i = (n + 1) as usize;
            let lhs = &(&self.p[i] * &self.q[i - 1]) - &(&self.p[i - 1] * &self.q[i]);
            let rhs = if n % 2 == 1 { prod.clone() } else { -&prod };
            if !series_agree(&lhs, &rhs) {
                return false;
            }
        }
        true
    }
}

/// Equality on the joint known range; polynomial equality when both are exact.
fn series_agree(f: &LaurentSeries, g: &LaurentSeries) -> bool {
    let joint = f.prec().min(g.prec());
    match joint.bound() {
        None => eq_polynomial(f, g).map(|m| m.is_none()).unwrap_or(false),
        Some(p) => eq_to_order(f, g, p).map(|m| m.is_none()).unwrap_or(false),
    }
}

/// `(P_n, Q_n)` for `n = 0..=big_n`.
pub fn convergents(spec: &CFSpec, big_n: i64) -> Vec<(LaurentSeries, LaurentSeries)> {
    let mut c = Convergents::new(spec.clone());
    (0..=big_n).map(|n| c.get(n)).collect()
}

/// Determinant identity for `1 <= n <= big_n`.
pub fn determinant_check(spec: &CFSpec, big_n: i64) -> bool {
    let mut c = Convergents::new(spec.clone());
    let s = spec.clone();
    c.determinant_holds(&move |n| s.a(n), big_n)
}

fn mono(m: &Monomial) -> LaurentSeries {
    m.to_series()
}

/// `H(a, b, c, d)`: `1/1 + (-ab + cq)/(a + b + dq) + (-ab + cq^2)/(a + b + dq^2) + ...`.
pub fn h_spec(a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial) -> CFSpec {
    let ab = a.mul(b);
    let (a2, c2) = (ab.clone(), c.clone());
    let (sa, sb, d2) = (a.clone(), b.clone(), d.clone());
    CFSpec::new(
        LaurentSeries::exact_zero(),
        move |k| {
            if k == 1 {
                LaurentSeries::one()
            } else {
                &mono(&c2.shift(k - 1)) - &mono(&a2)
            }
        },
        move |k| {
            if k == 1 {
                LaurentSeries::one()
            } else {
                &(&mono(&sa) + &mono(&sb)) + &mono(&d2.shift(k - 1))
            }
        },
    )
}

/// `H_1(a, b, c, d)`: `1/1 + (-abq + c)/((a + b)q + d) + ... + (-ab q^{2n+1} + c q^n)/((a + b) q^{n+1} + d) + ...`.
pub fn h1_spec(a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial) -> CFSpec {
    let ab = a.mul(b);
    let (a2, c2) = (ab.clone(), c.clone());
    let (sa, sb, d2) = (a.clone(), b.clone(), d.clone());
    CFSpec::new(
        LaurentSeries::exact_zero(),
        move |k| {
            if k == 1 {
                LaurentSeries::one()
            } else {
                let n = k - 2;
                &mono(&c2.shift(n)) - &mono(&a2.shift(2 * n + 1))
            }
        },
        move |k| {
            if k == 1 {
                LaurentSeries::one()
            } else {
                let n = k - 2;
                &(&mono(&sa.shift(n + 1)) + &mono(&sb.shift(n + 1))) + &mono(&d2)
            }
        },
    )
}

fn pow(m: &Monomial, k: i64) -> Monomial {
    debug_assert!(k >= 0);
    m.pow(k as u32)
}

fn g(n: i64, k: i64) -> LaurentSeries {
    gauss_binomial(n, k, QBase::Q)
}

/// The triple sum shared by the numerator and the correction term of the
/// denominator convergents of `H`, with `top = N - 1` or `N - 2`;
/// `extra_n` adds `n` to the `q` exponent.
fn h_sum(top: i64, a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial, extra_n: bool) -> LaurentSeries {
    let mut acc = LaurentSeries::exact_zero();
    for n in 0..=top {
        for l in 0..=n {
            for j in 0..=(top - l - n) {
                let m = pow(b, top - n - j - l)
                    .mul(&pow(d, n - l))
                    .mul(&pow(a, j))
                    .mul(&pow(c, l))
                    .shift(n * (n + 1) / 2 + l * (l - 1) / 2 + l + if extra_n { n } else { 0 });
                if m.is_zero() {
                    continue;
                }
                let t = &(&g(n + j, j) * &g(top - j - l, n)) * &g(n, l);
                acc = &acc + &t.scale_monomial(&m);
            }
        }
    }
    acc
}

/// Explicit numerator convergent `A_N` of `H(a, b, c, d)`.
pub fn a_explicit(big_n: i64, a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial) -> LaurentSeries {
    h_sum(big_n - 1, a, b, c, d, false)
}

/// Explicit denominator convergent `B_N` of `H(a, b, c, d)`, `N >= 2`.
pub fn b_explicit(big_n: i64, a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial) -> LaurentSeries {
    let corr = &mono(&c.shift(1)) - &mono(&a.mul(b));
    &a_explicit(big_n, a, b, c, d) + &(&corr * &h_sum(big_n - 2, a, b, c, d, true))
}

/// Triple sum of `H_1` convergents with `top = N - 1` (numerators) or
/// `N - 2` (correction term, with the quadratic exponent shifted).
fn h1_sum(top: i64, a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial, shifted: bool) -> LaurentSeries {
    let mut acc = LaurentSeries::exact_zero();
    for n in 0..=top {
        for l in 0..=(top - n).min(n) {
            for j in 0..=(n - l) {
                let quad = if shifted { (n + 1) * (n + 2) / 2 } else { n * (n + 1) / 2 };
                let m = pow(a, j)
                    .mul(&pow(b, n - j - l))
                    .mul(&pow(c, l))
                    .mul(&pow(d, top - n - l))
                    .shift(quad + l * (l - 1) / 2);
                if m.is_zero() {
                    continue;
                }
                let t = &(&g(top - n + j, j) * &g(top - j - l, n - j - l)) * &g(top - n, l);
                acc = &acc + &t.scale_monomial(&m);
            }
        }
    }
    acc
}

/// Explicit numerator convergent `C_N` of `H_1(a, b, c, d)`.
pub fn c_explicit(big_n: i64, a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial) -> LaurentSeries {
    h1_sum(big_n - 1, a, b, c, d, false)
}

/// Explicit denominator convergent `D_N` of `H_1(a, b, c, d)`, `N >= 2`.
pub fn d_explicit(big_n: i64, a: &Monomial, b: &Monomial, c: &Monomial, d: &Monomial) -> LaurentSeries {
    let corr = &mono(&c.shift(-1)) - &mono(&a.mul(b));
    &c_explicit(big_n, a, b, c, d) + &(&corr * &h1_sum(big_n - 2, a, b, c, d, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::{rat, ratio};

    fn poly_eq(f: &LaurentSeries, g: &LaurentSeries) -> bool {
        eq_polynomial(f, g).unwrap().is_none()
    }

    fn trivial() -> CFSpec {
        CFSpec::new(LaurentSeries::exact_zero(), |_| LaurentSeries::one(), |_| LaurentSeries::poly(0, &[1, 1]))
    }

    pub(crate) fn parameter_sets() -> Vec<[Monomial; 4]> {
        vec![
            [Monomial::q(1), Monomial::one(), Monomial::q(1), Monomial::one()],
            [Monomial::int(2, 0), Monomial::int(-1, 1), Monomial::q(2), Monomial::int(3, 0)],
            [Monomial::new(ratio(1, 2), 0), Monomial::q(-1), Monomial::int(-1, 0), Monomial::q(1)],
            [Monomial::zero(), Monomial::q(1), Monomial::int(5, -1), Monomial::int(-2, 2)],
            [Monomial::q(3), Monomial::new(ratio(-2, 3), 1), Monomial::zero(), Monomial::new(ratio(1, 7), 0)],
        ]
    }

    #[test]
    fn trivial_fraction() {
        let cs = convergents(&trivial(), 1);
        assert!(poly_eq(&cs[1].0, &LaurentSeries::one()));
        assert!(poly_eq(&cs[1].1, &LaurentSeries::poly(0, &[1, 1])));
        assert!(determinant_check(&trivial(), 1));
        assert!(determinant_check(&trivial(), 12));
    }

    #[test]
    fn determinant_detects_altered_numerator() {
        let spec = trivial();
        let mut c = Convergents::new(spec.clone());
        c.extend_to(6);
        let altered = spec.with_a(|n| {
            if n == 1 {
                LaurentSeries::poly(0, &[1, 1])
            } else {
                LaurentSeries::one()
            }
        });
        assert!(!c.determinant_holds(&|n| altered.a(n), 6));
        assert!(c.determinant_holds(&|n| spec.a(n), 6));
    }

    #[test]
    fn h_explicit_matches_recurrence_small() {
        let (a, b, c, d) = (Monomial::q(1), Monomial::one(), Monomial::q(1), Monomial::one());
        let mut conv = Convergents::new(h_spec(&a, &b, &c, &d));
        for n in 1..=3 {
            assert!(poly_eq(conv.p(n), &a_explicit(n, &a, &b, &c, &d)), "A_{n}");
        }
        for n in 2..=3 {
            assert!(poly_eq(conv.q(n), &b_explicit(n, &a, &b, &c, &d)), "B_{n}");
        }
    }

    #[test]
    fn h_and_h1_against_recurrence() {
        for [a, b, c, d] in parameter_sets() {
            let mut h = Convergents::new(h_spec(&a, &b, &c, &d));
            let mut h1 = Convergents::new(h1_spec(&a, &b, &c, &d));
            for n in 1..=8 {
                assert!(poly_eq(h.p(n), &a_explicit(n, &a, &b, &c, &d)));
                assert!(poly_eq(h1.p(n), &c_explicit(n, &a, &b, &c, &d)));
                if n >= 2 {
                    assert!(poly_eq(h.q(n), &b_explicit(n, &a, &b, &c, &d)));
                    assert!(poly_eq(h1.q(n), &d_explicit(n, &a, &b, &c, &d)));
                }
            }
            assert!(determinant_check(&h_spec(&a, &b, &c, &d), 8));
            assert!(determinant_check(&h1_spec(&a, &b, &c, &d), 8));
        }
    }

    #[test]
    fn second_convergents_by_hand() {
        let (a, b, c, d) = (Monomial::int(2, 0), Monomial::int(3, 0), Monomial::int(5, 0), Monomial::int(7, 0));
        // A_2 = a + b + dq, B_2 = A_2 + cq - ab
        let a2 = LaurentSeries::poly(0, &[5, 7]);
        assert!(poly_eq(&a_explicit(2, &a, &b, &c, &d), &a2));
        assert!(poly_eq(&b_explicit(2, &a, &b, &c, &d), &LaurentSeries::poly(0, &[-1, 12])));
        // C_2 = d + (a + b) q, D_2 = C_2 + c - abq
        assert!(poly_eq(&c_explicit(2, &a, &b, &c, &d), &LaurentSeries::poly(0, &[7, 5])));
        assert!(poly_eq(&d_explicit(2, &a, &b, &c, &d), &LaurentSeries::poly(0, &[12, -1])));
        assert_eq!(a_explicit(1, &a, &b, &c, &d).coefficient(0).unwrap(), rat(1));
    }
}
