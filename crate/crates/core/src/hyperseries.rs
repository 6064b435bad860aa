//! Basic hypergeometric sums in the q-adic topology.
//!
//! A [`ProductTerm`] describes the `n`-th summand of a sum as a monomial
//! prefactor times products of binomials `u + v q^e`. Its valuation is known
//! exactly for every `n`, which gives the lower bound used by [`q_sum`] to
//! decide where a sum can be cut off.

use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fps::{LaurentSeries, Monomial, Precision};
use crate::polyfam::FamilyParams;
use crate::qkit::{product_set, QBase};

static BOUND_CHECKS: AtomicU64 = AtomicU64::new(0);
static BOUND_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Number of summands checked against their valuation bound, and the number
/// that fell below it, since process start.
pub fn bound_check_counts() -> (u64, u64) {
    (BOUND_CHECKS.load(Ordering::Relaxed), BOUND_VIOLATIONS.load(Ordering::Relaxed))
}

/// Summand generator together with a nondecreasing lower bound on the
/// valuation of each summand.
pub struct TermBuilder<'a> {
    term: Box<dyn Fn(i64, i64) -> Result<LaurentSeries> + 'a>,
    val_lb: Box<dyn Fn(i64) -> i64 + 'a>,
}

impl<'a> TermBuilder<'a> {
    /// `term(n, order)` must return the `n`-th summand known below `order`;
    /// `val_lb(n)` must be nondecreasing, tend to infinity, and bound the
    /// valuation of every nonzero summand from index `n` on.
    pub fn new(
        term: impl Fn(i64, i64) -> Result<LaurentSeries> + 'a,
        val_lb: impl Fn(i64) -> i64 + 'a,
    ) -> Self {
        TermBuilder { term: Box::new(term), val_lb: Box::new(val_lb) }
    }

    pub fn val_lb(&self, n: i64) -> i64 {
        (self.val_lb)(n)
    }
}

/// `sum_n term(n)` known below `order`.
pub fn q_sum(tb: &TermBuilder<'_>, order: i64) -> Result<LaurentSeries> {
    let start = tb.val_lb(0);
    let cap = 10 * (order.saturating_add(start.min(order).unsigned_abs() as i64)) + 100;
    let mut acc = LaurentSeries::zero(Precision::Bounded(order));
    let mut n = 0;
    loop {
        let lb = tb.val_lb(n);
        if lb >= order {
            return Ok(acc);
        }
        if n > cap {
            return Err(Error::NonterminatingBound { order, cap });
        }
        let t = (tb.term)(n, order)?;
        BOUND_CHECKS.fetch_add(1, Ordering::Relaxed);
        if let Some(v) = t.valuation() {
            if v < lb {
                BOUND_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
                return Err(Error::ValuationBoundViolated { n, actual: v, bound: lb });
            }
        }
        acc = &acc + &t;
        n += 1;
    }
}

/// A product of binomials whose length may depend on the summation index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `prod_{k=0}^{L-1} (u + v q^{r k})` with `L = slope * n + offset`;
    /// negative `L` uses `1 / prod_{k=1}^{-L} (u + v q^{-r k})`.
    Run { u: Monomial, v: Monomial, r: i64, slope: i64, offset: i64 },
    /// `(1 - a q^{2 r n}) (a q^r; q^r)_{n-1}` for `n >= 1` and `1` at `n = 0`,
    /// that is `(1 - a q^{2rn}) (a; q^r)_n / (1 - a)` with the cancellation
    /// carried out.
    WellPoised { a: Monomial, r: i64 },
}

impl Factor {
    pub fn run(u: Monomial, v: Monomial, base: QBase, slope: i64, offset: i64) -> Self {
        Factor::Run { u, v, r: base.r(), slope, offset }
    }

    /// `(a; q^r)_{slope n + offset}`.
    pub fn poch(a: &Monomial, base: QBase, slope: i64, offset: i64) -> Self {
        Factor::run(Monomial::one(), a.neg(), base, slope, offset)
    }

    /// `(a; q^r)_n`.
    pub fn poch_n(a: &Monomial, base: QBase) -> Self {
        Self::poch(a, base, 1, 0)
    }

    /// `(q^r; q^r)_n`.
    pub fn qfac(base: QBase) -> Self {
        Self::poch(&Monomial::q(base.r()), base, 1, 0)
    }

    pub fn well_poised(a: Monomial, base: QBase) -> Self {
        Factor::WellPoised { a, r: base.r() }
    }
}

#[derive(Clone, Debug)]
struct Binom {
    u: Monomial,
    v: Monomial,
    e: i64,
}

impl Binom {
    fn vanishes(&self) -> bool {
        crate::qkit::binomial_vanishes(&self.u, &self.v, self.e)
    }

    /// Valuation of a nonvanishing binomial.
    fn valuation(&self) -> i64 {
        match (self.u.is_zero(), self.v.is_zero()) {
            (true, _) => self.v.exp() + self.e,
            (_, true) => self.u.exp(),
            _ => self.u.exp().min(self.v.exp() + self.e),
        }
    }

    /// The binomial divided by `q^valuation`.
    fn normalized(&self) -> LaurentSeries {
        let val = self.valuation();
        let s = crate::qkit::binomial(&self.u, &self.v, self.e);
        s.shift(-val)
    }
}

#[derive(Default)]
struct Collected {
    num: Vec<Binom>,
    den: Vec<Binom>,
}

/// The `n`-th summand `scale * ratio^n * q^{(A n^2 + B n)/2} * prod(num) / prod(den)`.
#[derive(Clone, Debug)]
pub struct ProductTerm {
    ratio: Monomial,
    quad_a: i64,
    quad_b: i64,
    scale: Monomial,
    num: Vec<Factor>,
    den: Vec<Factor>,
}

impl Default for ProductTerm {
    fn default() -> Self {
        Self::new()
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

impl ProductTerm {
    pub fn new() -> Self {
        ProductTerm {
            ratio: Monomial::one(),
            quad_a: 0,
            quad_b: 0,
            scale: Monomial::one(),
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    pub fn ratio(mut self, m: Monomial) -> Self {
        self.ratio = self.ratio.mul(&m);
        self
    }

    /// Multiplies by `q^{(a n^2 + b n)/2}`; `a + b` must be even.
    pub fn quadratic(mut self, a: i64, b: i64) -> Self {
        assert!((a + b) % 2 == 0, "q^((a n^2 + b n)/2) needs a + b even");
        self.quad_a += a;
        self.quad_b += b;
        self
    }

    pub fn scale(mut self, m: Monomial) -> Self {
        self.scale = self.scale.mul(&m);
        self
    }

    pub fn num(mut self, f: Factor) -> Self {
        self.num.push(f);
        self
    }

    pub fn den(mut self, f: Factor) -> Self {
        self.den.push(f);
        self
    }

    fn collect(&self, n: i64) -> Result<Collected> {
        let mut c = Collected::default();
        for (factors, in_num) in [(&self.num, true), (&self.den, false)] {
            for f in factors {
                match f {
                    Factor::Run { u, v, r, slope, offset } => {
                        let len = slope * n + offset;
                        if len >= 0 {
                            let side = if in_num { &mut c.num } else { &mut c.den };
                            for k in 0..len {
                                side.push(Binom { u: u.clone(), v: v.clone(), e: r * k });
                            }
                        } else {
                            for k in 1..=-len {
                                let b = Binom { u: u.clone(), v: v.clone(), e: -r * k };
                                if b.vanishes() {
                                    return Err(Error::PochhammerPole {
                                        factor: format!("{u} + {v}*q^{} at length {len}", -r * k),
                                    });
                                }
                                if in_num {
                                    c.den.push(b);
                                } else {
                                    c.num.push(b);
                                }
                            }
                        }
                    }
                    Factor::WellPoised { a, r } => {
                        if n >= 1 {
                            let side = if in_num { &mut c.num } else { &mut c.den };
                            let one = Monomial::one();
                            side.push(Binom { u: one.clone(), v: a.neg(), e: 2 * r * n });
                            for k in 0..n - 1 {
                                side.push(Binom { u: one.clone(), v: a.neg(), e: r + r * k });
                            }
                        }
                    }
                }
            }
        }
        if let Some(b) = c.den.iter().find(|b| b.vanishes()) {
            return Err(Error::DenominatorPole(format!("factor {} + {}*q^{} at n = {n}", b.u, b.v, b.e)));
        }
        Ok(c)
    }

    fn prefactor_zero(&self, n: i64) -> bool {
        self.scale.is_zero() || (n > 0 && self.ratio.is_zero())
    }

    /// Exact valuation of the `n`-th summand, `None` if it vanishes.
    pub fn valuation(&self, n: i64) -> Result<Option<i64>> {
        if self.prefactor_zero(n) {
            return Ok(None);
        }
        let c = self.collect(n)?;
        if c.num.iter().any(|b| b.vanishes()) {
            return Ok(None);
        }
        Ok(Some(self.valuation_of(n, &c)))
    }

    fn valuation_of(&self, n: i64, c: &Collected) -> i64 {
        let mut v = self.scale.exp() + (self.quad_a * n * n + self.quad_b * n) / 2;
        if n > 0 {
            v += n * self.ratio.exp();
        }
        v += c.num.iter().map(Binom::valuation).sum::<i64>();
        v -= c.den.iter().map(Binom::valuation).sum::<i64>();
        v
    }

    /// The `n`-th summand known below `order`.
    pub fn evaluate(&self, n: i64, order: i64) -> Result<LaurentSeries> {
        if self.prefactor_zero(n) {
            return Ok(LaurentSeries::zero(Precision::Bounded(order)));
        }
        let c = self.collect(n)?;
        if c.num.iter().any(|b| b.vanishes()) {
            return Ok(LaurentSeries::zero(Precision::Bounded(order)));
        }
        let v = self.valuation_of(n, &c);
        let rel = order - v;
        if rel <= 0 {
            return Ok(LaurentSeries::zero(Precision::Bounded(order)));
        }
        let mut num = LaurentSeries::one().truncate(rel);
        for b in &c.num {
            num = &num * &b.normalized();
        }
        let mut den = LaurentSeries::one().truncate(rel);
        for b in &c.den {
            den = &den * &b.normalized();
        }
        let quotient = if c.den.is_empty() { num } else { &num * &den.invert(rel)? };
        let coeff = self.scale.coeff() * self.ratio.coeff().pow(n as i32);
        Ok(quotient.scale(&coeff).shift(v))
    }

    /// First index from which every summand vanishes, if any.
    fn terminates_at(&self) -> Option<i64> {
        if self.scale.is_zero() {
            return Some(0);
        }
        let mut stop: Option<i64> = if self.ratio.is_zero() { Some(1) } else { None };
        let mut note = |n: i64| stop = Some(stop.map_or(n, |s| s.min(n)));
        for f in &self.num {
            match f {
                Factor::Run { u, v, r, slope, offset } if *slope > 0 => {
                    let k0 = if u.is_zero() && v.is_zero() {
                        Some(0)
                    } else if u.is_zero() || v.is_zero() {
                        None
                    } else {
                        let d = u.exp() - v.exp();
                        (d >= 0 && d % r == 0 && (u.coeff() + v.coeff()).is_zero()).then_some(d / r)
                    };
                    if let Some(k0) = k0 {
                        // length slope*n + offset must exceed k0
                        let need = k0 + 1 - offset;
                        note((need + slope - 1).div_euclid(*slope).max(0));
                    }
                }
                Factor::WellPoised { a, r } => {
                    let d = -a.exp() - r;
                    if d >= 0 && d % r == 0 && a.coeff() == &crate::fps::rat(1) {
                        note(d / r + 2);
                    }
                }
                _ => {}
            }
        }
        stop
    }

    /// Index from which the valuation increments are an affine function of `n`.
    fn regime_start(&self) -> i64 {
        let mut n0 = 0;
        for f in self.num.iter().chain(self.den.iter()) {
            match f {
                Factor::Run { u, v, r, slope, offset } if *slope > 0 => {
                    n0 = n0.max((-offset).div_euclid(*slope) + 1);
                    if !u.is_zero() && !v.is_zero() {
                        let k = floor_div(u.exp() - v.exp(), *r) + 1;
                        n0 = n0.max((k - offset).div_euclid(*slope) + 1);
                    }
                }
                Factor::WellPoised { a, r } => {
                    n0 = n0.max(1).max(floor_div(-a.exp(), *r) + 1);
                }
                _ => {}
            }
        }
        n0
    }

    /// Summation driver for this term with a certified valuation envelope.
    pub fn builder(&self, order: i64) -> Result<TermBuilder<'_>> {
        let stop = self.terminates_at();
        let n0 = self.regime_start();
        let last = match stop {
            Some(s) if s <= n0 + 3 => s,
            _ => {
                let val = |n: i64| -> Result<i64> {
                    self.valuation(n)?.ok_or_else(|| Error::InvalidArgument(format!("summand {n} vanishes in the tail")))
                };
                let (v0, v1, v2) = (val(n0)?, val(n0 + 1)?, val(n0 + 2)?);
                let d0 = v1 - v0;
                let slope = (v2 - v1) - d0;
                let tail = if slope > 0 {
                    n0 + ((-d0).max(0) + slope - 1) / slope
                } else if slope == 0 && d0 > 0 {
                    n0
                } else {
                    let cap = 10 * (order + v0.unsigned_abs() as i64) + 100;
                    return Err(Error::NonterminatingBound { order, cap });
                };
                match stop {
                    Some(s) => s.min(tail),
                    None => tail,
                }
            }
        };
        let terminating = stop.is_some_and(|s| s <= last);
        let mut vals = Vec::with_capacity(last as usize + 1);
        for n in 0..=last {
            let v = if terminating && n == last { None } else { self.valuation(n)? };
            vals.push(v.unwrap_or(i64::MAX));
        }
        let mut envelope = vals.clone();
        for i in (0..envelope.len().saturating_sub(1)).rev() {
            envelope[i] = envelope[i].min(envelope[i + 1]);
        }
        let val_lb = move |n: i64| -> i64 {
            if n <= last {
                envelope[n as usize]
            } else if terminating {
                i64::MAX
            } else {
                self.valuation(n).ok().flatten().unwrap_or(i64::MAX)
            }
        };
        Ok(TermBuilder::new(move |n, order| self.evaluate(n, order), val_lb))
    }

    /// `sum_{n >= 0}` of this term, known below `order`.
    pub fn sum(&self, order: i64) -> Result<LaurentSeries> {
        let tb = self.builder(order)?;
        q_sum(&tb, order)
    }
}

/// Runs `f` at increasing working orders until its result is known below
/// `order`, then truncates.
pub fn to_order(order: i64, pad: i64, f: impl Fn(i64) -> Result<LaurentSeries>) -> Result<LaurentSeries> {
    let mut w = order + pad.max(0);
    for _ in 0..8 {
        match f(w) {
            Ok(s) if s.prec().covers(order) => return Ok(s.truncate(order)),
            Ok(s) => {
                let got = s.prec().bound().unwrap_or(order);
                w += (order - got).max(1) + 2;
            }
            Err(Error::InsufficientPrecision { needed, available }) => {
                w += (needed - available).max(1) + 2;
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::InsufficientPrecision { needed: order, available: w })
}

/// `num / den` known as far as the inputs allow.
pub fn divide(num: &LaurentSeries, den: &LaurentSeries, order: i64) -> Result<LaurentSeries> {
    let v = den.valuation().ok_or(Error::InversionOfZero)?;
    let inv_order = match den.prec().bound() {
        Some(p) => p - 2 * v,
        None => order - num.valuation().unwrap_or(0) - v + 1,
    };
    Ok(num * &den.invert(inv_order)?)
}

fn ensure_y(p: &FamilyParams) -> Result<&Monomial> {
    let y = p.y()?;
    if crate::qkit::is_unit_one(y) {
        return Err(Error::DenominatorPole("(y;q)_{n+1} with y = 1".into()));
    }
    Ok(y)
}

/// Summand of `phi`: `x^n q^{n(n+1)/2} (-z;q)_n / ((y;q)_{n+1} (q;q)_n)` in base `q^r`.
pub fn phi_term(p: &FamilyParams) -> Result<ProductTerm> {
    let base = p.base;
    let y = ensure_y(p)?;
    Ok(ProductTerm::new()
        .quadratic(base.r(), base.r())
        .num(Factor::run(p.x.clone(), p.xz.clone(), base, 1, 0))
        .den(Factor::poch(y, base, 1, 1))
        .den(Factor::qfac(base)))
}

/// `phi(x, y, z) = sum x^n q^{n(n+1)/2} (-z;q)_n / ((y;q)_{n+1} (q;q)_n)`.
pub fn phi(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    phi_term(p)?.sum(order)
}

/// Summand of `Phi`: `x^n q^{n(n+1)/2} (-z;q)_n / ((-xyq;q)_n (q;q)_n)`.
pub fn phi_big_term(p: &FamilyParams) -> ProductTerm {
    let base = p.base;
    ProductTerm::new()
        .quadratic(base.r(), base.r())
        .num(Factor::run(p.x.clone(), p.xz.clone(), base, 1, 0))
        .den(Factor::poch(&p.xy.shift(base.r()).neg(), base, 1, 0))
        .den(Factor::qfac(base))
}

/// `Phi(x, y, z) = sum x^n q^{n(n+1)/2} (-z;q)_n / ((-xyq;q)_n (q;q)_n)`.
pub fn phi_big(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    phi_big_term(p).sum(order)
}

fn prod(args: &[Monomial], base: QBase, order: i64) -> Result<LaurentSeries> {
    product_set(args, base, order)
}

/// `(a_1, ..., a_k; q^r)_inf^{-1}` for arguments of positive valuation.
fn inv_prod(args: &[Monomial], base: QBase, order: i64) -> Result<LaurentSeries> {
    let p = product_set(args, base, order)?;
    divide(&LaurentSeries::one(), &p, order)
}

/// Left side of the Watson-type transformation:
/// `sum c_n(zx) (zx/y, -z;q)_n (xy)^n q^{n(3n+1)/2} / ((-xq, q;q)_n (y;q)_{n+1})`.
pub fn watson_lhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let base = p.base;
    let r = base.r();
    let y = ensure_y(p)?;
    ProductTerm::new()
        .quadratic(3 * r, r)
        .num(Factor::well_poised(p.xz.clone(), base))
        .num(Factor::run(p.x.clone(), p.xz.clone(), base, 1, 0))
        .num(Factor::run(y.clone(), p.xz.neg(), base, 1, 0))
        .den(Factor::poch(&p.x.shift(r).neg(), base, 1, 0))
        .den(Factor::qfac(base))
        .den(Factor::poch(y, base, 1, 1))
        .sum(order)
}

/// Right side of the Watson-type transformation: `(zxq;q)_inf / (-xq;q)_inf * phi`.
pub fn watson_rhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let r = p.r();
    to_order(order, 0, |w| {
        let top = prod(&[p.xz.shift(r)], p.base, w)?;
        let bottom = prod(&[p.x.shift(r).neg()], p.base, w)?;
        Ok(&divide(&top, &bottom, w)? * &phi(p, w)?)
    })
}

/// Left side of the second Watson-type transformation:
/// `sum c_n(zx) (-z/y, -z;q)_n (-x^2 y)^n q^{n(3n+1)/2} / ((-xq, q;q)_n (-xyq;q)_n)`.
pub fn watson2_lhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let base = p.base;
    let r = base.r();
    ProductTerm::new()
        .ratio(Monomial::int(-1, 0))
        .quadratic(3 * r, r)
        .num(Factor::well_poised(p.xz.clone(), base))
        .num(Factor::run(p.x.clone(), p.xz.clone(), base, 1, 0))
        .num(Factor::run(p.xy.clone(), p.xz.clone(), base, 1, 0))
        .den(Factor::poch(&p.x.shift(r).neg(), base, 1, 0))
        .den(Factor::qfac(base))
        .den(Factor::poch(&p.xy.shift(r).neg(), base, 1, 0))
        .sum(order)
}

/// Right side of the second Watson-type transformation: `(zxq;q)_inf / (-xq;q)_inf * Phi`.
pub fn watson2_rhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let r = p.r();
    to_order(order, 0, |w| {
        let top = prod(&[p.xz.shift(r)], p.base, w)?;
        let bottom = prod(&[p.x.shift(r).neg()], p.base, w)?;
        Ok(&divide(&top, &bottom, w)? * &phi_big(p, w)?)
    })
}

/// Right side of the Heine-type transformation:
/// `(-z, -xq;q)_inf / (y;q)_inf * sum (-qy/z;q)_n (-z)^n / ((-xq;q)_n (q;q)_n)`.
pub fn heine_rhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let base = p.base;
    let r = base.r();
    let (y, z) = (ensure_y(p)?, p.z()?);
    let term = ProductTerm::new()
        .num(Factor::run(z.neg(), y.shift(r).neg(), base, 1, 0))
        .den(Factor::poch(&p.x.shift(r).neg(), base, 1, 0))
        .den(Factor::qfac(base));
    to_order(order, 0, |w| {
        let top = prod(&[z.neg(), p.x.shift(r).neg()], base, w)?;
        let bottom = prod(std::slice::from_ref(y), base, w)?;
        Ok(&divide(&top, &bottom, w)? * &term.sum(w)?)
    })
}

/// Left side of the second Heine-type transformation:
/// `sum (qxy/z;q)_n (-z)^n / ((-xq;q)_n (q;q)_n)`.
pub fn heine2_lhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let base = p.base;
    let r = base.r();
    let z = p.z()?;
    ProductTerm::new()
        .num(Factor::run(z.neg(), p.xy.shift(r), base, 1, 0))
        .den(Factor::poch(&p.x.shift(r).neg(), base, 1, 0))
        .den(Factor::qfac(base))
        .sum(order)
}

/// Right side of the second Heine-type transformation:
/// `(-xyq;q)_inf / (-z, -xq;q)_inf * Phi`.
pub fn heine2_rhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let base = p.base;
    let r = base.r();
    let z = p.z()?;
    to_order(order, 0, |w| {
        let top = prod(&[p.xy.shift(r).neg()], base, w)?;
        let bottom = prod(&[z.neg(), p.x.shift(r).neg()], base, w)?;
        Ok(&divide(&top, &bottom, w)? * &phi_big(p, w)?)
    })
}

/// Right side of the Ramanujan-type transformation:
/// `(-xq;q)_inf * sum (zx)^n q^{n^2} (-qy/z;q)_n / ((-xq;q)_n (y;q)_{n+1} (q;q)_n)`.
pub fn ramanujan_rhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let base = p.base;
    let r = base.r();
    let y = ensure_y(p)?;
    let term = ProductTerm::new()
        .quadratic(2 * r, 0)
        .num(Factor::run(p.xz.clone(), p.xy.shift(r), base, 1, 0))
        .den(Factor::poch(&p.x.shift(r).neg(), base, 1, 0))
        .den(Factor::poch(y, base, 1, 1))
        .den(Factor::qfac(base));
    to_order(order, 0, |w| Ok(&prod(&[p.x.shift(r).neg()], base, w)? * &term.sum(w)?))
}

/// Left side of the second Ramanujan-type transformation:
/// `sum (zx)^n q^{n^2} (qxy/z;q)_n / ((-xq;q)_n (-xyq;q)_n (q;q)_n)`.
pub fn ramanujan2_lhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let base = p.base;
    let r = base.r();
    ProductTerm::new()
        .quadratic(2 * r, 0)
        .num(Factor::run(p.xz.clone(), p.x.mul(&p.xy).shift(r).neg(), base, 1, 0))
        .den(Factor::poch(&p.x.shift(r).neg(), base, 1, 0))
        .den(Factor::poch(&p.xy.shift(r).neg(), base, 1, 0))
        .den(Factor::qfac(base))
        .sum(order)
}

/// Right side of the second Ramanujan-type transformation: `Phi / (-xq;q)_inf`.
pub fn ramanujan2_rhs(p: &FamilyParams, order: i64) -> Result<LaurentSeries> {
    let r = p.r();
    to_order(order, 0, |w| Ok(&inv_prod(&[p.x.shift(r).neg()], p.base, w)? * &phi_big(p, w)?))
}
