//! Exact truncated formal Laurent series in `q` over arbitrary-precision rationals.
//!
//! A [`LaurentSeries`] stores the coefficients of `q^min_exp, q^(min_exp+1), ...`
//! densely, together with an explicit [`Precision`]: every coefficient of `q^k`
//! with `k < prec` is exact, and nothing is claimed at or beyond `prec`.
//! `Precision::Exact` marks a Laurent polynomial.
//!
//! Precision rules:
//! - `f + g` is known below `min(prec f, prec g)`;
//! - `f * g` is known below `min(prec f + val g, prec g + val f)`;
//! - `1/f` is known below `prec f - 2 val f`.
//!
//! There is deliberately no `PartialEq` on series: two series are only ever
//! compared up to a stated order, see [`eq_to_order`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds the rational `n / 1`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exclusive exponent bound below which coefficients are exact.
///
/// The derived ordering places every `Bounded(_)` below `Exact`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Precision {
    Bounded(i64),
    Exact,
}

impl Precision {
    pub fn bound(self) -> Option<i64> {
        match self {
            Precision::Bounded(p) => Some(p),
            Precision::Exact => None,
        }
    }

    /// `true` if every exponent below `order` is known.
    pub fn covers(self, order: i64) -> bool {
        match self {
            Precision::Bounded(p) => p >= order,
            Precision::Exact => true,
        }
    }

    pub fn shifted(self, k: i64) -> Precision {
        match self {
            Precision::Bounded(p) => Precision::Bounded(p + k),
            Precision::Exact => Precision::Exact,
        }
    }

    /// Numeric stand-in used in error messages.
    fn as_i64(self) -> i64 {
        self.bound().unwrap_or(i64::MAX)
    }
}

impl Add for Precision {
    type Output = Precision;

    fn add(self, rhs: Precision) -> Precision {
        match (self, rhs) {
            (Precision::Bounded(a), Precision::Bounded(b)) => Precision::Bounded(a + b),
            _ => Precision::Exact,
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Bounded(p) => write!(f, "{p}"),
            Precision::Exact => write!(f, "inf"),
        }
    }
}

/// A parameter value `c * q^k`.
///
/// The zero monomial is always stored as `0 * q^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    coeff: Rational,
    exp: i64,
}

impl Monomial {
    pub fn new(coeff: Rational, exp: i64) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Monomial { coeff, exp }
        }
    }

    pub fn zero() -> Self {
        Monomial { coeff: Rational::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Monomial { coeff: Rational::one(), exp: 0 }
    }

    /// `q^exp`.
    pub fn q(exp: i64) -> Self {
        Monomial { coeff: Rational::one(), exp }
    }

    /// `c * q^exp` with an integer coefficient.
    pub fn int(c: i64, exp: i64) -> Self {
        Self::new(rat(c), exp)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, 0)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.coeff.is_one()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(&self.coeff * &other.coeff, self.exp + other.exp)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Monomial {
        if self.is_zero() {
            Self::zero()
        } else {
            Monomial { coeff: self.coeff.clone(), exp: self.exp + k }
        }
    }

    pub fn scale(&self, c: &Rational) -> Monomial {
        Monomial::new(&self.coeff * c, self.exp)
    }

    pub fn neg(&self) -> Monomial {
        Monomial::new(-&self.coeff, self.exp)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Self::one();
        }
        Monomial::new(num_traits::pow(self.coeff.clone(), n as usize), self.exp * n as i64)
    }

    pub fn inv(&self) -> Result<Monomial> {
        if self.is_zero() {
            return Err(Error::InversionOfZero);
        }
        Ok(Monomial { coeff: self.coeff.recip(), exp: -self.exp })
    }

    pub fn to_series(&self) -> LaurentSeries {
        LaurentSeries::monomial(self.coeff.clone(), self.exp)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        match self.exp {
            0 => write!(f, "{}", self.coeff),
            e => {
                if !self.coeff.is_one() {
                    write!(f, "{}*", self.coeff)?;
                }
                if e == 1 {
                    write!(f, "q")
                } else {
                    write!(f, "q^{e}")
                }
            }
        }
    }
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Truncated formal Laurent series with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<Rational>,
    prec: Precision,
}

impl LaurentSeries {
    /// Builds and normalizes a series from raw parts.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<Rational>, prec: Precision) -> Self {
        let mut s = LaurentSeries { min_exp, coeffs, prec };
        s.normalize();
        s
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(min_exp: i64, coeffs: &[i64], prec: Precision) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| rat(c)).collect(), prec)
    }

    /// Exact Laurent polynomial from integer coefficients.
    pub fn poly(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_ints(min_exp, coeffs, Precision::Exact)
    }

    pub fn zero(prec: Precision) -> Self {
        LaurentSeries { min_exp: 0, coeffs: Vec::new(), prec }
    }

    pub fn exact_zero() -> Self {
        Self::zero(Precision::Exact)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c], Precision::Exact)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn prec(&self) -> Precision {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec == Precision::Exact
    }

    /// `true` if every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp)
        }
    }

    /// Valuation as an extended integer: a series that is zero to precision
    /// `p` has valuation at least `p`.
    fn ext_valuation(&self) -> Precision {
        match self.valuation() {
            Some(v) => Precision::Bounded(v),
            None => self.prec,
        }
    }

    /// Highest stored exponent.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Iterates over `(exponent, coefficient)` for nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Exact coefficient of `q^k`.
    pub fn coefficient(&self, k: i64) -> Result<Rational> {
        if !self.prec.covers(k + 1) {
            return Err(Error::BeyondPrecision { exponent: k, prec: self.prec.as_i64() });
        }
        Ok(self.coeff_unchecked(k))
    }

    fn coeff_unchecked(&self, k: i64) -> Rational {
        if k < self.min_exp {
            return Rational::zero();
        }
        self.coeffs
            .get((k - self.min_exp) as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn normalize(&mut self) {
        if let Precision::Bounded(p) = self.prec {
            let keep = (p - self.min_exp).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> LaurentSeries {
        let min_exp = if self.is_zero() { 0 } else { self.min_exp + k };
        LaurentSeries { min_exp, coeffs: self.coeffs.clone(), prec: self.prec.shifted(k) }
    }

    pub fn scale(&self, c: &Rational) -> LaurentSeries {
        if c.is_zero() {
            return LaurentSeries::zero(self.prec);
        }
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            prec: self.prec,
        }
    }

    pub fn scale_monomial(&self, m: &Monomial) -> LaurentSeries {
        self.scale(m.coeff()).shift(m.exp())
    }

    /// Caps the precision at `order`.
    pub fn truncate(&self, order: i64) -> LaurentSeries {
        let prec = self.prec.min(Precision::Bounded(order));
        let mut s = LaurentSeries { min_exp: self.min_exp, coeffs: self.coeffs.clone(), prec };
        s.normalize();
        s
    }

    /// Substitutes `q -> -q`.
    pub fn negate_q(&self) -> LaurentSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.min_exp + i as i64) % 2 == 0 { c.clone() } else { -c })
            .collect();
        LaurentSeries { min_exp: self.min_exp, coeffs, prec: self.prec }
    }

    /// Substitutes `q -> q^r` for `r >= 1`.
    pub fn dilate(&self, r: i64) -> LaurentSeries {
        assert!(r >= 1, "dilation factor must be positive");
        if self.is_zero() {
            return LaurentSeries::zero(match self.prec {
                Precision::Bounded(p) => Precision::Bounded(p * r),
                Precision::Exact => Precision::Exact,
            });
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * r as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * r as usize] = c.clone();
        }
        let prec = match self.prec {
            Precision::Bounded(p) => Precision::Bounded(p * r),
            Precision::Exact => Precision::Exact,
        };
        LaurentSeries::from_coeffs(self.min_exp * r, coeffs, prec)
    }

    pub fn pow(&self, n: u32) -> LaurentSeries {
        let mut acc = LaurentSeries::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse, known below `order`.
    ///
    /// Requires `prec - 2 * val >= order`.
    pub fn invert(&self, order: i64) -> Result<LaurentSeries> {
        let v = self.valuation().ok_or(Error::InversionOfZero)?;
        if let Precision::Bounded(p) = self.prec {
            if p - 2 * v < order {
                return Err(Error::InsufficientPrecision { needed: order, available: p - 2 * v });
            }
        }
        let n = order + v;
        if n <= 0 {
            return Ok(LaurentSeries::zero(Precision::Bounded(order)));
        }
        let n = n as usize;
        let u = &self.coeffs;
        let lead_inv = u[0].recip();
        let support: Vec<usize> =
            (1..u.len().min(n)).filter(|&j| !u[j].is_zero()).collect();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(lead_inv.clone());
        for k in 1..n {
            let mut acc = Rational::zero();
            for &j in support.iter().take_while(|&&j| j <= k) {
                let r = &out[k - j];
                if !r.is_zero() {
                    acc += &u[j] * r;
                }
            }
            out.push(-acc * &lead_inv);
        }
        Ok(LaurentSeries::from_coeffs(-v, out, Precision::Bounded(order)))
    }

    /// Exact quotient of two Laurent polynomials; fails unless the
    /// division leaves no remainder.
    pub fn div_exact(&self, divisor: &LaurentSeries) -> Result<LaurentSeries> {
        if !self.is_exact() || !divisor.is_exact() {
            return Err(Error::InvalidArgument("div_exact needs exact polynomials".into()));
        }
        if divisor.is_zero() {
            return Err(Error::InversionOfZero);
        }
        if self.is_zero() {
            return Ok(LaurentSeries::exact_zero());
        }
        let d = &divisor.coeffs;
        let dl = d.len();
        let lead_inv = d[dl - 1].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < dl {
            return Err(Error::InexactDivision);
        }
        let qlen = rem.len() - dl + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dl - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] -= &c * dj;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(LaurentSeries::from_coeffs(self.min_exp - divisor.min_exp, quot, Precision::Exact))
    }

    fn add_impl(&self, other: &LaurentSeries, negate_other: bool) -> LaurentSeries {
        let prec = self.prec.min(other.prec);
        if self.is_zero() && other.is_zero() {
            return LaurentSeries::zero(prec);
        }
        let lo = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!(),
        };
        let hi_self = self.max_exp().unwrap_or(lo);
        let hi_other = other.max_exp().unwrap_or(lo);
        let mut hi = hi_self.max(hi_other);
        if let Precision::Bounded(p) = prec {
            hi = hi.min(p - 1);
        }
        if hi < lo {
            return LaurentSeries::zero(prec);
        }
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.terms() {
            if k <= hi {
                coeffs[(k - lo) as usize] += c;
            }
        }
        for (k, c) in other.terms() {
            if k <= hi {
                if negate_other {
                    coeffs[(k - lo) as usize] -= c;
                } else {
                    coeffs[(k - lo) as usize] += c;
                }
            }
        }
        LaurentSeries::from_coeffs(lo, coeffs, prec)
    }

    fn mul_impl(&self, other: &LaurentSeries) -> LaurentSeries {
        let prec = (self.prec + other.ext_valuation()).min(other.prec + self.ext_valuation());
        if self.is_zero() || other.is_zero() {
            return LaurentSeries::zero(prec);
        }
        let lo = self.min_exp + other.min_exp;
        let mut hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        if let Precision::Bounded(p) = prec {
            hi = hi.min(p - 1);
        }
        if hi < lo {
            return LaurentSeries::zero(prec);
        }
        let len = (hi - lo + 1) as usize;
        if let Some(coeffs) = mul_small_ints(&self.coeffs, &other.coeffs, len) {
            return LaurentSeries::from_coeffs(lo, coeffs, prec);
        }
        let mut coeffs = vec![Rational::zero(); len];
        let other_support: Vec<(usize, &Rational)> =
            other.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &other_support {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentSeries::from_coeffs(lo, coeffs, prec)
    }
}

fn small_ints(c: &[Rational]) -> Option<Vec<i64>> {
    c.iter()
        .map(|x| if x.denom().is_one() { x.numer().to_i64() } else { None })
        .collect()
}

/// Truncated product of integer coefficient vectors, `None` on overflow or
/// non-integral input.
fn mul_small_ints(a: &[Rational], b: &[Rational], len: usize) -> Option<Vec<Rational>> {
    let a = small_ints(a)?;
    let b = small_ints(b)?;
    let mut out = vec![0i128; len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].checked_add(x as i128 * y as i128)?;
        }
    }
    Some(out.into_iter().map(|c| Rational::from_integer(BigInt::from(c))).collect())
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }
}

impl Neg for LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                let f: fn(&LaurentSeries, &LaurentSeries) -> LaurentSeries = $body;
                f(self, rhs)
            }
        }
        impl $trait<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

/// Compares `f` and `g` on every exponent below `order`.
///
/// Returns `Ok(None)` when they agree and the smallest disagreeing exponent
/// otherwise.
pub fn eq_to_order(f: &LaurentSeries, g: &LaurentSeries, order: i64) -> Result<Option<Mismatch>> {
    for s in [f, g] {
        if !s.prec.covers(order) {
            return Err(Error::InsufficientPrecision { needed: order, available: s.prec.as_i64() });
        }
    }
    let lo = match (f.valuation(), g.valuation()) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => return Ok(None),
    };
    for k in lo..order {
        let (a, b) = (f.coeff_unchecked(k), g.coeff_unchecked(k));
        if a != b {
            return Ok(Some(Mismatch { exponent: k, lhs: a, rhs: b }));
        }
    }
    Ok(None)
}

/// Equality of two exact Laurent polynomials.
pub fn eq_polynomial(f: &LaurentSeries, g: &LaurentSeries) -> Result<Option<Mismatch>> {
    if !f.is_exact() || !g.is_exact() {
        let available = f.prec.min(g.prec).as_i64();
        return Err(Error::InsufficientPrecision { needed: i64::MAX, available });
    }
    let hi = f.max_exp().into_iter().chain(g.max_exp()).max().unwrap_or(0);
    eq_to_order(f, g, hi + 1)
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match k.cmp(&0) {
                Ordering::Equal => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Precision::Bounded(p) = self.prec {
            write!(f, " + O(q^{p})")?;
        }
        Ok(())
    }
}
