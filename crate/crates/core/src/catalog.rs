//! Registry of verifiable identities and the verification driver.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fps::{eq_polynomial, eq_to_order, rat, LaurentSeries, Mismatch, Monomial, Rational};
use crate::hyperseries::{
    divide, heine2_lhs, heine2_rhs, heine_rhs, phi, phi_big, ramanujan2_lhs, ramanujan2_rhs, ramanujan_rhs, to_order,
    watson2_lhs, watson2_rhs, watson_lhs, watson_rhs, Factor, ProductTerm,
};
use crate::polyfam::{corollary_family, e_m, f_m, g_m, h_m, FamilyParams};
use crate::qkit::{poch_finite, product_set, QBase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Corollary,
    Theorem,
    Slater,
}

/// One registry entry.
#[derive(Clone, Debug, Serialize)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub kind: EntryKind,
    pub description: &'static str,
    pub anchor: &'static str,
    /// Smallest admissible `m`.
    pub m_min: i64,
    /// Largest `m` in the default test range; `None` if unbounded.
    pub m_max: Option<i64>,
    /// Upper end of the range checked by default.
    pub default_m_max: i64,
}

impl IdentitySpec {
    pub fn contains(&self, m: i64) -> bool {
        m >= self.m_min && self.m_max.is_none_or(|hi| m <= hi)
    }

    pub fn domain(&self) -> String {
        match self.m_max {
            Some(hi) if hi == self.m_min => format!("m = {hi}"),
            Some(hi) => format!("{} <= m <= {hi}", self.m_min),
            None => format!("m >= {}", self.m_min),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchRecord {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Mismatch> for MismatchRecord {
    fn from(m: &Mismatch) -> Self {
        MismatchRecord { exponent: m.exponent, lhs: m.lhs.to_string(), rhs: m.rhs.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub m: i64,
    pub order: i64,
    pub pass: bool,
    pub first_mismatch: Option<MismatchRecord>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn new(identity: &str, m: i64, order: i64, mismatch: Option<Mismatch>, start: Instant) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            m,
            order,
            pass: mismatch.is_none(),
            first_mismatch: mismatch.as_ref().map(MismatchRecord::from),
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

const fn cor(id: &'static str, description: &'static str, anchor: &'static str, m_min: i64) -> IdentitySpec {
    IdentitySpec { id, kind: EntryKind::Corollary, description, anchor, m_min, m_max: None, default_m_max: 6 }
}

const fn thm(id: &'static str, description: &'static str, anchor: &'static str, m_min: i64, m_max: Option<i64>, default_m_max: i64) -> IdentitySpec {
    IdentitySpec { id, kind: EntryKind::Theorem, description, anchor, m_min, m_max, default_m_max }
}

const fn sl(id: &'static str, description: &'static str) -> IdentitySpec {
    IdentitySpec {
        id,
        kind: EntryKind::Slater,
        description,
        anchor: "Slater's list",
        m_min: 0,
        m_max: Some(0),
        default_m_max: 0,
    }
}

static REGISTRY: &[IdentitySpec] = &[
    thm("t1ef", "phi(xq^m) through e_m, e_{m-1}(xq), phi(xq) and phi(x)", "first master theorem", 2, None, 6),
    thm("polyver", "two-term splitting of e and f, and of g and h", "finite polynomial identities", 0, Some(6), 6),
    cor("c1", "m-version of the Rogers-Ramanujan identities", "Rogers-Ramanujan", 0),
    cor("c2", "m-version built on A.8 and A.13", "Slater A.8/A.13", 0),
    cor("c3", "m-version built on A.16 and A.20", "Slater A.16/A.20", 0),
    cor("c4", "m-version of the Gollnitz-Gordon identities", "Gollnitz-Gordon", 0),
    thm("transforms", "Watson, Heine and Ramanujan type transformations", "standalone transformations", 0, Some(2), 2),
    cor("c1w", "Watson transform of the Rogers-Ramanujan m-version", "Watson / Rogers-Ramanujan", 0),
    cor("c2w", "Watson transform of the A.8/A.13 m-version", "Watson / Slater A.8", 0),
    cor("c3w", "Watson transform of the A.16/A.20 m-version", "Watson / Slater A.16", 0),
    cor("c4w", "Watson transform of the Gollnitz-Gordon m-version", "Watson / Gollnitz-Gordon", 0),
    cor("c2h", "Heine transform of the A.8/A.13 m-version", "Heine / Slater A.8", 0),
    cor("c3h", "Heine transform of the A.16/A.20 m-version", "Heine / Slater A.16", 0),
    cor("c4h", "Heine transform of the Gollnitz-Gordon m-version", "Heine / Gollnitz-Gordon", 0),
    cor("c2m2", "Ramanujan transform of the A.8/A.13 m-version", "Ramanujan / Slater A.8", 0),
    thm("t2ef", "Phi(xq^m) through g_m, g_{m-1}(xq), Phi(xq) and Phi(x)", "second master theorem", 2, None, 6),
    cor("cc1", "m-version built on A.79 and A.96", "Slater A.79/A.96", 0),
    cor("cc2", "m-version built on A.38 and A.39", "Slater A.38/A.39", 0),
    cor("cc3", "m-version built on A.29 and A.50", "Slater A.29/A.50", 0),
    cor("cc1w", "Watson transform of the A.79/A.96 m-version", "Watson / Slater A.79", 0),
    cor("cc3w", "Watson transform of the A.29/A.50 m-version", "Watson / Slater A.29", 0),
    cor("cc3h", "Heine transform of the A.29/A.50 m-version", "Heine / Slater A.29", 0),
    cor("cc3r", "Ramanujan transform of the A.29/A.50 m-version", "Ramanujan / Slater A.29", 0),
    thm("t3ef", "phi(xq^-m) and Phi(xq^-m) through e and g", "negative m master theorem", 1, None, 4),
    cor("cm1", "negative m-version of the Rogers-Ramanujan identities", "Rogers-Ramanujan, negative m", 1),
    cor("cm4", "negative m-version of the Gollnitz-Gordon identities", "Gollnitz-Gordon, negative m", 1),
    cor("c3m", "negative m-version of the A.16/A.20 identity", "Slater A.16, negative m", 1),
    cor("c3wm", "Watson transform of the negative A.16/A.20 m-version", "Watson / Slater A.16, negative m", 1),
    cor("c3hm", "Heine transform of the negative A.16/A.20 m-version", "Heine / Slater A.16, negative m", 1),
    cor("cm4r", "Ramanujan transform of the negative Gollnitz-Gordon m-version", "Ramanujan / Gollnitz-Gordon, negative m", 1),
    cor("cc1m", "negative m-version of the A.79/A.96 identity", "Slater A.79, negative m", 1),
    sl("A.8", "sum (-q;q)_n q^{n(n-1)/2}/(q;q)_n"),
    sl("A.13", "sum (-q;q)_n q^{n(n+1)/2}/(q;q)_n"),
    sl("A.16", "sum q^{n^2}/(2(q^4;q^4)_n)"),
    sl("A.20", "sum q^{n^2+2n}/(2(q^4;q^4)_n)"),
    sl("A.29", "sum (-q;q^2)_n q^{n^2}/((q;q^2)_n (q^2;q^2)_n)"),
    sl("A.34", "sum (-q;q^2)_n q^{n^2}/(q^2;q^2)_n"),
    sl("A.36", "sum (-q;q^2)_n q^{n^2+2n}/(q^2;q^2)_n"),
    sl("A.38", "sum q^{2n^2}/((q;q^2)_n (q^2;q^2)_n)"),
    sl("A.39", "sum q^{2n^2+2n}/((q^3;q^2)_n (q^2;q^2)_n)"),
    sl("A.50", "sum (-q;q^2)_n q^{n^2+2n}/((q^3;q^2)_n (q^2;q^2)_n)"),
    sl("A.79", "sum q^{n^2}/((q;q^2)_n (q^2;q^2)_n)"),
    sl("A.96", "sum q^{n^2+2n}/((q^3;q^2)_n (q^2;q^2)_n)"),
];

/// Every registry entry in order of appearance.
pub fn list() -> &'static [IdentitySpec] {
    REGISTRY
}

/// Ids of the 26 corollary identities.
pub fn corollary_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().filter(|e| e.kind == EntryKind::Corollary).map(|e| e.id)
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn base(r: i64) -> QBase {
    QBase::new(r).expect("positive base")
}

fn mq(c: i64, e: i64) -> Monomial {
    Monomial::int(c, e)
}

/// `(c q^e; q^r)_{slope n + offset}`.
fn poch(c: i64, e: i64, r: i64, slope: i64, offset: i64) -> Factor {
    Factor::poch(&mq(c, e), base(r), slope, offset)
}

/// `(q^r; q^r)_n`.
fn qfac(r: i64) -> Factor {
    Factor::qfac(base(r))
}

/// `prod (c q^e; q^r)_inf` over `args`.
fn pinf(args: &[(i64, i64)], r: i64, w: i64) -> Result<LaurentSeries> {
    let ms: Vec<Monomial> = args.iter().map(|&(c, e)| mq(c, e)).collect();
    product_set(&ms, base(r), w)
}

/// `(c q^e; q^r)_n`, any integer `n`.
fn pfin(c: i64, e: i64, r: i64, n: i64, w: i64) -> Result<LaurentSeries> {
    poch_finite(&mq(c, e), n, base(r), w)
}

fn sign(k: i64) -> Rational {
    rat(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `(-1)^{m-1} q^{-e} f`, with `f` evaluated `e` orders deeper.
fn pre(m: i64, e: i64, w: i64, f: impl FnOnce(i64) -> Result<LaurentSeries>) -> Result<LaurentSeries> {
    Ok(f(w + e)?.shift(-e).scale(&sign(m - 1)))
}

fn rr1(w: i64) -> Result<LaurentSeries> {
    pinf(&[(1, 1), (1, 4)], 5, w)
}

fn rr2(w: i64) -> Result<LaurentSeries> {
    pinf(&[(1, 2), (1, 3)], 5, w)
}

/// `a / (p_a e) - b / (p_b e)`.
fn ab_over(a: &LaurentSeries, b: &LaurentSeries, pa: &LaurentSeries, pb: &LaurentSeries, e: &LaurentSeries, w: i64) -> Result<LaurentSeries> {
    Ok(&divide(a, &(pa * e), w)? - &divide(b, &(pb * e), w)?)
}

type Lhs = fn(i64) -> ProductTerm;
type Rhs = fn(i64, &LaurentSeries, &LaurentSeries, i64) -> Result<LaurentSeries>;

fn corollary_sides(id: &str) -> Option<(Lhs, Rhs)> {
    let sides: (Lhs, Rhs) = match id {
        "c1" => (
            |m| ProductTerm::new().quadratic(2, 2 * m).den(qfac(1)),
            |m, a, b, w| {
                let e = m * (m - 1) / 2;
                Ok(-pre(m, e, w, |w| Ok(&divide(a, &rr1(w)?, w)? - &divide(b, &rr2(w)?, w)?))?)
            },
        ),
        "c2" => (
            |m| ProductTerm::new().quadratic(1, 2 * m - 1).num(poch(-1, 1, 1, 1, 0)).den(qfac(1)),
            |m, a, b, w| {
                pre(m, m * (m - 1) / 2, w, |w| {
                    let t1 = divide(&pinf(&[(1, 4)], 4, w)?, &pinf(&[(1, 1)], 1, w)?, w)?;
                    let t2 = divide(&pinf(&[(-1, 1)], 2, w)?, &pinf(&[(1, 1)], 2, w)?, w)?;
                    Ok(&(&(a - b) * &t1) - &(b * &t2))
                })
            },
        ),
        "c3" => (
            |m| ProductTerm::new().quadratic(2, 4 * m).den(poch(1, 4, 4, 1, 0)),
            |m, a, b, w| {
                let e = pinf(&[(-1, 2)], 2, w)?;
                Ok(ab_over(a, b, &rr2(w)?, &rr1(w)?, &e, w)?.scale(&sign(m - 1)))
            },
        ),
        "c4" => (
            |m| ProductTerm::new().quadratic(2, 4 * m).num(poch(-1, 1, 2, 1, 0)).den(qfac(2)),
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    let one = LaurentSeries::one();
                    ab_over(a, b, &pinf(&[(1, 3), (1, 4), (1, 5)], 8, w)?, &pinf(&[(1, 1), (1, 4), (1, 7)], 8, w)?, &one, w)
                })
            },
        ),
        "c1w" => (
            |m| {
                ProductTerm::new()
                    .ratio(mq(-1, 0))
                    .quadratic(5, 4 * m - 1)
                    .num(Factor::well_poised(mq(1, m), base(1)))
                    .num(poch(1, 1, 1, 0, m))
                    .den(qfac(1))
            },
            |m, a, b, w| {
                pre(m, m * (m - 1) / 2, w, |w| {
                    Ok(&(b * &pinf(&[(1, 1), (1, 4), (1, 5)], 5, w)?) - &(a * &pinf(&[(1, 2), (1, 3), (1, 5)], 5, w)?))
                })
            },
        ),
        "c2w" => (
            |m| {
                ProductTerm::new()
                    .ratio(mq(-1, 0))
                    .quadratic(4, 4 * m - 2)
                    .num(Factor::well_poised(mq(1, m), base(1)))
                    .num(poch(1, 1, 1, 0, m))
                    .num(poch(-1, 1, 1, 1, 0))
                    .den(qfac(1))
                    .den(poch(-1, 1, 1, 1, m - 1))
            },
            |m, a, b, w| {
                pre(m, m * (m - 1) / 2, w, |w| {
                    let t1 = divide(&pinf(&[(1, 4)], 4, w)?, &pinf(&[(-1, 1)], 1, w)?, w)?;
                    let t2 = divide(&pinf(&[(1, 2)], 2, w)?, &pinf(&[(-1, 2)], 2, w)?, w)?;
                    Ok(&(&(a - b) * &t1) - &(b * &t2))
                })
            },
        ),
        "c3w" => (
            |m| {
                ProductTerm::new()
                    .ratio(mq(-1, 0))
                    .quadratic(6, 4 * m)
                    .den(poch(-1, 1, 2, 1, m))
                    .den(poch(1, 4, 4, 1, 0))
            },
            |m, a, b, w| {
                let e = pinf(&[(-1, 1)], 1, w)?;
                Ok(ab_over(a, b, &rr2(w)?, &rr1(w)?, &e, w)?.scale(&sign(m - 1)))
            },
        ),
        "c4w" => (
            |m| {
                ProductTerm::new()
                    .ratio(mq(-1, 0))
                    .quadratic(8, 8 * m - 2)
                    .num(Factor::well_poised(mq(1, 2 * m), base(2)))
                    .num(poch(1, 2, 2, 0, m))
                    .num(poch(-1, 1, 2, 1, 0))
                    .den(qfac(2))
                    .den(poch(-1, 1, 2, 1, m))
            },
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    Ok(&(a * &pinf(&[(1, 1), (1, 7), (1, 8)], 8, w)?) - &(b * &pinf(&[(1, 3), (1, 5), (1, 8)], 8, w)?))
                })
            },
        ),
        "c2h" => (
            |m| ProductTerm::new().ratio(mq(-1, 1)).den(poch(-1, 1, 1, 1, m - 1)).den(qfac(1)),
            |m, a, b, w| {
                pre(m, m * (m - 1) / 2, w, |w| {
                    Ok(&divide(&(a - b), &pinf(&[(-1, 1)], 2, w)?, w)? - &divide(b, &pinf(&[(-1, 2)], 2, w)?, w)?)
                })
            },
        ),
        "c3h" => (
            |m| ProductTerm::new().quadratic(2, 2).den(poch(-1, 1, 2, 1, m)).den(qfac(2)),
            |m, a, b, w| {
                let e = pinf(&[(-1, 1)], 2, w)?;
                Ok(ab_over(a, b, &rr2(w)?, &rr1(w)?, &e, w)?.scale(&sign(m - 1)))
            },
        ),
        "c4h" => (
            |m| ProductTerm::new().ratio(mq(-1, 1)).den(poch(-1, 1, 2, 1, m)).den(qfac(2)),
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    let e = pinf(&[(-1, 1), (-1, 1)], 2, w)?;
                    ab_over(a, b, &pinf(&[(1, 3), (1, 4), (1, 5)], 8, w)?, &pinf(&[(1, 1), (1, 4), (1, 7)], 8, w)?, &e, w)
                })
            },
        ),
        "c2m2" => (
            |m| ProductTerm::new().quadratic(2, 2 * m).den(poch(-1, 1, 1, 1, m - 1)).den(qfac(1)),
            |m, a, b, w| {
                pre(m, m * (m - 1) / 2, w, |w| {
                    Ok(&(&(a - b) * &pinf(&[(-1, 2)], 2, w)?) - &(b * &pinf(&[(-1, 1)], 2, w)?))
                })
            },
        ),
        "cc1" => (
            |m| ProductTerm::new().quadratic(2, 4 * m).den(poch(1, 1, 2, 1, m)).den(qfac(2)),
            |m, a, b, w| {
                pre(m, 2 * m * (m - 1), w, |w| {
                    let inner = &(a * &pinf(&[(1, 4), (1, 16), (1, 20)], 20, w)?) - &(b * &pinf(&[(1, 8), (1, 12), (1, 20)], 20, w)?);
                    divide(&(&pinf(&[(-1, 1)], 2, w)? * &inner), &pinf(&[(1, 2)], 2, w)?, w)
                })
            },
        ),
        "cc2" => (
            |m| ProductTerm::new().quadratic(4, 4 * m).den(poch(1, 1, 2, 1, m)).den(qfac(2)),
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    let inner = &(a * &pinf(&[(-1, 1), (-1, 7), (1, 8)], 8, w)?) - &(b * &pinf(&[(-1, 3), (-1, 5), (1, 8)], 8, w)?);
                    divide(&inner, &pinf(&[(1, 2)], 2, w)?, w)
                })
            },
        ),
        "cc3" => (
            |m| {
                ProductTerm::new()
                    .quadratic(2, 4 * m)
                    .num(poch(-1, 1, 2, 1, 0))
                    .den(poch(1, 1, 2, 1, m))
                    .den(qfac(2))
            },
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    let inner = p12(a, b, w)?;
                    divide(&inner, &(&pfin(-1, 2, 2, m - 1, w)? * &pinf(&[(1, 1)], 1, w)?), w)
                })
            },
        ),
        "cc1w" => (
            |m| ProductTerm::new().quadratic(6, 8 * m - 2).den(poch(1, 2, 4, 1, m)).den(qfac(2)),
            |m, a, b, w| {
                pre(m, 2 * m * (m - 1), w, |w| {
                    let inner = &(a * &pinf(&[(1, 4), (1, 16), (1, 20)], 20, w)?) - &(b * &pinf(&[(1, 8), (1, 12), (1, 20)], 20, w)?);
                    divide(&inner, &pinf(&[(1, 2)], 2, w)?, w)
                })
            },
        ),
        "cc3w" => (
            |m| {
                ProductTerm::new()
                    .quadratic(6, 8 * m - 2)
                    .num(Factor::well_poised(mq(1, 2 * m), base(2)))
                    .num(poch(1, 2, 2, 0, m))
                    .num(poch(1, 2, 4, 1, 0))
                    .den(poch(1, 2, 4, 1, m))
                    .den(qfac(2))
            },
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    let inner = &pinf(&[(-1, 2)], 2, w)? * &p12(a, b, w)?;
                    divide(&inner, &pfin(-1, 2, 2, m - 1, w)?, w)
                })
            },
        ),
        "cc3h" => (
            |m| {
                ProductTerm::new()
                    .ratio(mq(1, 1))
                    .num(poch(-1, 2, 2, 1, m - 1))
                    .den(poch(1, 1, 2, 1, m))
                    .den(qfac(2))
            },
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    let inner = &pinf(&[(-1, 1)], 1, w)? * &p12(a, b, w)?;
                    divide(&inner, &pinf(&[(1, 1)], 1, w)?, w)
                })
            },
        ),
        "cc3r" => (
            |m| {
                ProductTerm::new()
                    .quadratic(4, 4 * m)
                    .num(poch(-1, 2, 2, 1, m - 1))
                    .den(poch(1, 2, 4, 1, m))
                    .den(qfac(2))
            },
            |m, a, b, w| {
                pre(m, m * (m - 1), w, |w| {
                    let inner = &pinf(&[(-1, 2)], 2, w)? * &p12(a, b, w)?;
                    divide(&inner, &pinf(&[(1, 2)], 2, w)?, w)
                })
            },
        ),
        "cm1" => (
            |m| ProductTerm::new().quadratic(2, -2 * m).den(qfac(1)),
            |_, a, b, w| Ok(&divide(a, &rr1(w)?, w)? + &divide(b, &rr2(w)?, w)?),
        ),
        "cm4" => (
            |m| ProductTerm::new().quadratic(2, -4 * m).num(poch(-1, 1, 2, 1, 0)).den(qfac(2)),
            |_, a, b, w| {
                Ok(&divide(a, &pinf(&[(1, 3), (1, 4), (1, 5)], 8, w)?, w)?
                    + &divide(b, &pinf(&[(1, 1), (1, 4), (1, 7)], 8, w)?, w)?)
            },
        ),
        "c3m" => (
            |m| ProductTerm::new().quadratic(2, -4 * m).den(poch(1, 4, 4, 1, 0)),
            |_, a, b, w| {
                let e = pinf(&[(-1, 2)], 2, w)?;
                Ok(&divide(a, &(&rr2(w)? * &e), w)? + &divide(b, &(&rr1(w)? * &e), w)?)
            },
        ),
        "c3wm" => (
            |m| {
                ProductTerm::new()
                    .ratio(mq(-1, 0))
                    .quadratic(6, -4 * m)
                    .den(poch(-1, 1 - 2 * m, 2, 1, 0))
                    .den(poch(1, 4, 4, 1, 0))
            },
            |m, a, b, w| {
                let e = pinf(&[(-1, 1)], 1, w)?;
                let s = &divide(a, &(&rr2(w)? * &e), w)? + &divide(b, &(&rr1(w)? * &e), w)?;
                divide(&s.shift(m * m), &pfin(-1, 1, 2, m, w)?, w)
            },
        ),
        "c3hm" => (
            |m| ProductTerm::new().quadratic(2, 2).den(poch(-1, 1 - 2 * m, 2, 1, 0)).den(qfac(2)),
            |m, a, b, w| {
                let e = pinf(&[(-1, 1)], 2, w)?;
                let s = &divide(a, &(&rr2(w)? * &e), w)? + &divide(b, &(&rr1(w)? * &e), w)?;
                divide(&s.shift(m * m), &pfin(-1, 1, 2, m, w)?, w)
            },
        ),
        "cm4r" => (
            |m| ProductTerm::new().quadratic(4, -4 * m).den(poch(-1, 1 - 2 * m, 2, 1, 0)).den(qfac(2)),
            |m, a, b, w| {
                let e = pinf(&[(-1, 1)], 2, w)?;
                let pa = &pinf(&[(1, 3), (1, 4), (1, 5)], 8, w)? * &e;
                let pb = &pinf(&[(1, 1), (1, 4), (1, 7)], 8, w)? * &e;
                let s = &divide(a, &pa, w)? + &divide(b, &pb, w)?;
                divide(&s.shift(m * m), &pfin(-1, 1, 2, m, w)?, w)
            },
        ),
        "cc1m" => (
            |m| ProductTerm::new().quadratic(2, -4 * m).den(poch(1, 1 - 2 * m, 2, 1, 0)).den(qfac(2)),
            |m, a, b, w| {
                let inner = &(a * &pinf(&[(1, 4), (1, 16), (1, 20)], 20, w)?) + &(b * &pinf(&[(1, 8), (1, 12), (1, 20)], 20, w)?);
                let num = &pinf(&[(-1, 1)], 2, w)? * &inner;
                let den = &pfin(1, 1, 2, m, w)? * &pinf(&[(1, 2)], 2, w)?;
                Ok(divide(&num, &den, w)?.shift(m * m).scale(&sign(m)))
            },
        ),
        _ => return None,
    };
    Some(sides)
}

/// `a (q^2,q^10,q^12;q^12)_inf - b (q^6,q^6,q^12;q^12)_inf`.
fn p12(a: &LaurentSeries, b: &LaurentSeries, w: i64) -> Result<LaurentSeries> {
    Ok(&(a * &pinf(&[(1, 2), (1, 10), (1, 12)], 12, w)?) - &(b * &pinf(&[(1, 6), (1, 6), (1, 12)], 12, w)?))
}

fn check_domain(spec: &IdentitySpec, m: i64) -> Result<()> {
    if spec.contains(m) {
        Ok(())
    } else {
        Err(Error::OutOfDomain { id: spec.id.to_string(), m, domain: spec.domain() })
    }
}

fn check_order(order: i64) -> Result<()> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!("order must be positive, got {order}")));
    }
    Ok(())
}

/// Both sides of a corollary, the right one with `b_m` optionally replaced by
/// `b_m + q^fault`.
pub fn corollary_pair(id: &str, m: i64, order: i64, fault: Option<i64>) -> Result<(LaurentSeries, LaurentSeries)> {
    let spec = lookup(id)?;
    check_domain(spec, m)?;
    let (lhs, rhs) = corollary_sides(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    let fam = corollary_family(id)?;
    let (a, mut b) = fam.pair(m);
    if let Some(d) = fault {
        b = &b + &LaurentSeries::q_pow(d);
    }
    let l = lhs(m).sum(order)?;
    let r = to_order(order, 0, |w| rhs(m, &a, &b, w))?;
    Ok((l, r))
}

/// Perturbs a right-hand side by `q^d`.
fn perturb(s: LaurentSeries, fault: Option<i64>) -> LaurentSeries {
    match fault {
        Some(d) => &s + &LaurentSeries::q_pow(d),
        None => s,
    }
}

/// Checks one registry entry at `m`.
pub fn verify(id: &str, m: i64, order: i64) -> Result<VerificationReport> {
    verify_with_fault(id, m, order, None)
}

/// [`verify`] with the right side perturbed by `q^fault`; for corollaries the
/// perturbation is applied to the polynomial `b_m`.
pub fn verify_with_fault(id: &str, m: i64, order: i64, fault: Option<i64>) -> Result<VerificationReport> {
    let start = Instant::now();
    let spec = lookup(id)?;
    check_domain(spec, m)?;
    check_order(order)?;
    let mismatch = match spec.kind {
        EntryKind::Corollary => {
            let (l, r) = corollary_pair(id, m, order, fault)?;
            eq_to_order(&l, &r, order)?
        }
        EntryKind::Slater => {
            let (l, r) = slater_sides(id, order)?;
            eq_to_order(&l, &perturb(r, fault), order)?
        }
        EntryKind::Theorem => theorem_suite(id, m, order, fault)?,
    };
    Ok(VerificationReport::new(id, m, order, mismatch, start))
}

/// [`verify`] for every `m` in `lo..=hi`.
pub fn verify_range(id: &str, lo: i64, hi: i64, order: i64) -> Result<Vec<VerificationReport>> {
    (lo..=hi).map(|m| verify(id, m, order)).collect()
}

/// The left and right sides behind `id` at `m`, known below `order`.
pub fn sides(id: &str, m: i64, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    let spec = lookup(id)?;
    check_domain(spec, m)?;
    match spec.kind {
        EntryKind::Corollary => corollary_pair(id, m, order, None),
        EntryKind::Slater => slater_sides(id, order),
        EntryKind::Theorem => match id {
            "t1ef" => t1ef_sides(&default_params(), m, order),
            "t2ef" => {
                let (a, _, c) = t2ef_sides(&default_params(), m, order)?;
                Ok((a, c))
            }
            "t3ef" => t3ef_sides(1, &default_params(), m, order),
            _ => Err(Error::InvalidArgument(format!("{id} is a suite of several identities"))),
        },
    }
}

/// `(x, y, z) = (q, 1/2, q^2)` in base `q`.
pub fn default_params() -> FamilyParams {
    FamilyParams::new(Monomial::q(1), Monomial::new(crate::fps::ratio(1, 2), 0), Monomial::q(2), QBase::Q)
}

/// Generic monomial point used by the finite polynomial identities.
pub fn polyver_params() -> FamilyParams {
    FamilyParams::new(Monomial::int(2, 1), Monomial::new(crate::fps::ratio(-1, 3), 2), Monomial::int(5, -1), QBase::Q)
}

/// Specializations for the standalone transformations.
pub fn transform_params() -> [FamilyParams; 3] {
    [
        FamilyParams::new(Monomial::q(1), Monomial::new(crate::fps::ratio(1, 2), 0), Monomial::new(crate::fps::ratio(1, 3), 1), QBase::Q),
        FamilyParams::new(Monomial::q(-1), Monomial::int(2, 1), Monomial::q(2), QBase::Q),
        FamilyParams::new(Monomial::new(crate::fps::ratio(1, 2), 1), Monomial::int(-1, 1), Monomial::int(3, 2), QBase::Q2),
    ]
}

fn theorem_suite(id: &str, m: i64, order: i64, fault: Option<i64>) -> Result<Option<Mismatch>> {
    match id {
        "t1ef" => {
            let (l, r) = t1ef_sides(&default_params(), m, order)?;
            eq_to_order(&l, &perturb(r, fault), order)
        }
        "t2ef" => {
            let (a, b, c) = t2ef_sides(&default_params(), m, order)?;
            let c = perturb(c, fault);
            first_of([eq_to_order(&a, &c, order), eq_to_order(&b, &c, order)])
        }
        "t3ef" => {
            let p = default_params();
            let (l1, r1) = t3ef_sides(1, &p, m, order)?;
            let (l2, r2) = t3ef_sides(2, &p, m, order)?;
            first_of([eq_to_order(&l1, &perturb(r1, fault), order), eq_to_order(&l2, &r2, order)])
        }
        "polyver" => {
            let p = polyver_params();
            for n in 0..=6 {
                for variant in [1, 2] {
                    if let Some(mm) = polyver_mismatch(variant, &p, n, m, fault)? {
                        return Ok(Some(mm));
                    }
                }
            }
            Ok(None)
        }
        "transforms" => {
            let ps = transform_params();
            let p = ps.get(m as usize).ok_or_else(|| Error::InvalidArgument(format!("no specialization {m}")))?;
            for t in Transformation::ALL {
                let (l, r) = t.sides(p, order)?;
                if let Some(mm) = eq_to_order(&l, &perturb(r, fault), order)? {
                    return Ok(Some(mm));
                }
            }
            Ok(None)
        }
        _ => Err(Error::UnknownIdentity(id.to_string())),
    }
}

fn first_of<const N: usize>(checks: [Result<Option<Mismatch>>; N]) -> Result<Option<Mismatch>> {
    for c in checks {
        if let Some(m) = c? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn report(id: &str, m: i64, order: i64, start: Instant, mismatch: Option<Mismatch>) -> VerificationReport {
    VerificationReport::new(id, m, order, mismatch, start)
}

/// `prod_{j=1}^{m-1} (u + v q^{r j})` as an exact polynomial.
fn finite_product(u: &Monomial, v: &Monomial, m: i64, r: i64) -> LaurentSeries {
    let mut acc = LaurentSeries::one();
    for j in 1..m {
        acc = &acc * &(&u.to_series() + &v.shift(r * j).to_series());
    }
    acc
}

fn nonzero_divisor(d: &LaurentSeries, what: &str) -> Result<()> {
    if d.is_zero() {
        return Err(Error::DenominatorPole(what.to_string()));
    }
    Ok(())
}

fn t1ef_sides(p: &FamilyParams, m: i64, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    if m < 2 {
        return Err(Error::OutOfDomain { id: "t1ef".into(), m, domain: "m >= 2".into() });
    }
    let r = p.r();
    let y = p.y()?;
    let den = finite_product(y, &p.xz.neg(), m, r);
    nonzero_divisor(&den, "prod (y - zxq^j) vanishes")?;
    let em = e_m(p, m)?;
    let em1 = e_m(&p.shift_x_steps(1), m - 1)?;
    let lhs = phi(&p.shift_x_steps(m), order)?;
    let rhs = to_order(order, 0, |w| {
        let num = &(&em * &phi(&p.shift_x_steps(1), w)?) - &(&em1 * &phi(p, w)?);
        divide(&num, &den, w)
    })?;
    Ok((lhs, rhs))
}

/// First master theorem at a point: `phi(xq^m)` against its two-term form.
pub fn verify_theorem_t1ef(p: &FamilyParams, m: i64, order: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let (l, r) = t1ef_sides(p, m, order)?;
    Ok(report("t1ef", m, order, start, eq_to_order(&l, &r, order)?))
}

/// The three members of the second master theorem.
fn t2ef_sides(p: &FamilyParams, m: i64, order: i64) -> Result<(LaurentSeries, LaurentSeries, LaurentSeries)> {
    if m < 2 {
        return Err(Error::OutOfDomain { id: "t2ef".into(), m, domain: "m >= 2".into() });
    }
    let base = p.base;
    let r = base.r();
    let xyq = p.xy.shift(r).neg();
    let den = finite_product(&Monomial::zero(), &Monomial::one(), 1, r);
    let mut prod = den;
    for j in 1..m {
        let t = &p.x.mul(&p.xy).shift(r * (2 * j + 1)).to_series() - &p.xz.shift(r * j).to_series();
        prod = &prod * &t;
    }
    nonzero_divisor(&prod, "prod (x^2 y q^{2j+1} - zxq^j) vanishes")?;
    let sum = ProductTerm::new()
        .quadratic(r, r + 2 * r * m)
        .num(Factor::run(p.x.clone(), p.xz.clone(), base, 1, 0))
        .den(Factor::poch(&xyq, base, 1, m))
        .den(Factor::qfac(base));
    let a = sum.sum(order)?;
    let b = to_order(order, 0, |w| divide(&phi_big(&p.shift_x_steps(m), w)?, &poch_finite(&xyq, m, base, w)?, w))?;
    let gm = g_m(p, m);
    let gm1 = g_m(&p.shift_x_steps(1), m - 1);
    let one_xyq = &LaurentSeries::one() + &p.xy.shift(r).to_series();
    nonzero_divisor(&one_xyq, "1 + xyq vanishes")?;
    let c = to_order(order, 0, |w| {
        let t1 = divide(&(&gm * &phi_big(&p.shift_x_steps(1), w)?), &one_xyq, w)?;
        let num = &t1 - &(&gm1 * &phi_big(p, w)?);
        divide(&num, &prod, w)
    })?;
    Ok((a, b, c))
}

/// Second master theorem at a point: the sum, the `Phi(xq^m)` form and the
/// two-term form must all agree.
pub fn verify_theorem_t2ef(p: &FamilyParams, m: i64, order: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let (a, b, c) = t2ef_sides(p, m, order)?;
    let mm = first_of([eq_to_order(&a, &c, order), eq_to_order(&b, &c, order)])?;
    Ok(report("t2ef", m, order, start, mm))
}

fn t3ef_sides(part: u8, p: &FamilyParams, m: i64, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    if m < 1 {
        return Err(Error::OutOfDomain { id: "t3ef".into(), m, domain: "m >= 1".into() });
    }
    let r = p.r();
    let pm = p.shift_x_steps(-m);
    let p1 = p.shift_x_steps(1);
    match part {
        1 => {
            let y = p.y()?;
            let e1 = e_m(&pm, m + 1)?;
            let e0 = e_m(&pm, m)?;
            let c = &p.xz.to_series() - &y.to_series();
            let lhs = phi(&pm, order)?;
            let rhs = to_order(order, 0, |w| Ok(&(&e1 * &phi(p, w)?) + &(&(&c * &e0) * &phi(&p1, w)?)))?;
            Ok((lhs, rhs))
        }
        2 => {
            if p.xy.is_zero() {
                return Err(Error::InvalidArgument("xy = 0 leaves (-1/xy;q)_m undefined".into()));
            }
            let g1 = g_m(&pm, m + 1);
            let g0 = g_m(&pm, m);
            let one_xyq = &LaurentSeries::one() + &p.xy.shift(r).to_series();
            nonzero_divisor(&one_xyq, "1 + xyq vanishes")?;
            let c = &p.xz.to_series() - &p.x.mul(&p.xy).shift(r).to_series();
            // x^m y^m (-1/xy;q)_m = prod_{k<m} (xy + q^k)
            let mut pref = LaurentSeries::one();
            for k in 0..m {
                pref = &pref * &(&p.xy.to_series() + &LaurentSeries::q_pow(r * k));
            }
            nonzero_divisor(&pref, "(-1/xy;q)_m vanishes")?;
            let lhs = phi_big(&pm, order)?;
            let rhs = to_order(order, 0, |w| {
                let t2 = divide(&(&(&c * &g0) * &phi_big(&p1, w)?), &one_xyq, w)?;
                let inner = &(&g1 * &phi_big(p, w)?) + &t2;
                Ok(divide(&inner, &pref, w)?.shift(r * m * (m - 1) / 2))
            })?;
            Ok((lhs, rhs))
        }
        _ => Err(Error::InvalidArgument(format!("part must be 1 or 2, got {part}"))),
    }
}

/// Negative-shift master theorem, part 1 (`phi`) or part 2 (`Phi`).
pub fn verify_theorem_t3ef(part: u8, p: &FamilyParams, m: i64, order: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let (l, r) = t3ef_sides(part, p, m, order)?;
    Ok(report("t3ef", m, order, start, eq_to_order(&l, &r, order)?))
}

fn polyver_mismatch(variant: u8, p: &FamilyParams, n: i64, m: i64, fault: Option<i64>) -> Result<Option<Mismatch>> {
    let r = p.r();
    let pm = p.shift_x_steps(m);
    let mono = |x: &Monomial| x.to_series();
    let (lead, split, big, small, big_m, small_m): (LaurentSeries, LaurentSeries, _, _, _, _) = match variant {
        1 => {
            let y = mono(p.y()?);
            let lead = &mono(&p.xz) - &y;
            let split = &mono(&p.xz.shift(r * m)) - &y;
            let e = |q: &FamilyParams, k| e_m(q, k);
            let f = |q: &FamilyParams, k| f_m(q, k);
            (lead, split, e(p, n + m + 1)?, f(p, n + m + 1)?, (e(&pm, n + 1)?, f(&pm, n + 1)?), (e(p, m + 1)?, f(p, m + 1)?, e(p, m)?, f(p, m)?))
        }
        2 => {
            let x2y = p.x.mul(&p.xy);
            let lead = &mono(&p.xz) - &mono(&x2y.shift(r));
            let split = &mono(&p.xz.shift(r * m)) - &mono(&x2y.shift(r * (2 * m + 1)));
            (lead, split, g_m(p, n + m + 1), h_m(p, n + m + 1), (g_m(&pm, n + 1), h_m(&pm, n + 1)), (g_m(p, m + 1), h_m(p, m + 1), g_m(p, m), h_m(p, m)))
        }
        _ => return Err(Error::InvalidArgument(format!("variant must be 1 or 2, got {variant}"))),
    };
    let (en1m, fn1m) = big_m;
    let (e_m1, f_m1, e_m0, f_m0) = small_m;
    // (lead) f_{0,0} is taken to be 1
    let lead_f_m0 = if m == 0 { LaurentSeries::one() } else { &lead * &f_m0 };
    let lhs1 = &lead * &small;
    let rhs1 = &(&en1m * &(&lead * &f_m1)) + &(&(&split * &fn1m) * &lead_f_m0);
    let lhs2 = big;
    let rhs2 = &(&en1m * &e_m1) + &(&(&split * &fn1m) * &e_m0);
    let rhs2 = match fault {
        Some(d) => &rhs2 + &LaurentSeries::q_pow(d),
        None => rhs2,
    };
    first_of([eq_polynomial(&lhs1, &rhs1), eq_polynomial(&lhs2, &rhs2)])
}

/// The finite splitting identities at `(n, m)` as exact polynomial identities.
pub fn verify_polyver(variant: u8, p: &FamilyParams, n: i64, m: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mm = polyver_mismatch(variant, p, n, m, None)?;
    Ok(report("polyver", m, i64::MAX, start, mm))
}

/// The standalone transformations between basic hypergeometric sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transformation {
    Watson,
    Watson2,
    Heine,
    Heine2,
    Ramanujan,
    Ramanujan2,
}

impl Transformation {
    pub const ALL: [Transformation; 6] = [
        Transformation::Watson,
        Transformation::Watson2,
        Transformation::Heine,
        Transformation::Heine2,
        Transformation::Ramanujan,
        Transformation::Ramanujan2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Transformation::Watson => "watson",
            Transformation::Watson2 => "watson2",
            Transformation::Heine => "heine",
            Transformation::Heine2 => "heine2",
            Transformation::Ramanujan => "ramanujan",
            Transformation::Ramanujan2 => "ramanujan2",
        }
    }

    pub fn sides(self, p: &FamilyParams, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
        Ok(match self {
            Transformation::Watson => (watson_lhs(p, order)?, watson_rhs(p, order)?),
            Transformation::Watson2 => (watson2_lhs(p, order)?, watson2_rhs(p, order)?),
            Transformation::Heine => (phi(p, order)?, heine_rhs(p, order)?),
            Transformation::Heine2 => (heine2_lhs(p, order)?, heine2_rhs(p, order)?),
            Transformation::Ramanujan => (phi(p, order)?, ramanujan_rhs(p, order)?),
            Transformation::Ramanujan2 => (ramanujan2_lhs(p, order)?, ramanujan2_rhs(p, order)?),
        })
    }

    pub fn verify(self, p: &FamilyParams, order: i64) -> Result<Option<Mismatch>> {
        let (l, r) = self.sides(p, order)?;
        eq_to_order(&l, &r, order)
    }
}

fn slater_sides(tag: &str, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    let one_minus_q = LaurentSeries::poly(0, &[1, -1]);
    let half = crate::fps::ratio(1, 2);
    let (sum, product): (ProductTerm, Box<dyn Fn(i64) -> Result<LaurentSeries>>) = match tag {
        "A.8" => (
            ProductTerm::new().quadratic(1, -1).num(poch(-1, 1, 1, 1, 0)).den(qfac(1)),
            Box::new(|w| {
                Ok(&divide(&pinf(&[(1, 4)], 4, w)?, &pinf(&[(1, 1)], 1, w)?, w)?
                    + &divide(&pinf(&[(-1, 1)], 2, w)?, &pinf(&[(1, 1)], 2, w)?, w)?)
            }),
        ),
        "A.13" => (
            ProductTerm::new().quadratic(1, 1).num(poch(-1, 1, 1, 1, 0)).den(qfac(1)),
            Box::new(|w| divide(&pinf(&[(1, 4)], 4, w)?, &pinf(&[(1, 1)], 1, w)?, w)),
        ),
        "A.16" => (
            ProductTerm::new().scale(Monomial::new(half.clone(), 0)).quadratic(2, 0).den(poch(1, 4, 4, 1, 0)),
            Box::new(|w| divide(&LaurentSeries::one(), &(&rr1(w)? * &pinf(&[(-1, 2)], 2, w)?).scale(&rat(2)), w)),
        ),
        "A.20" => (
            ProductTerm::new().scale(Monomial::new(half, 0)).quadratic(2, 4).den(poch(1, 4, 4, 1, 0)),
            Box::new(|w| divide(&LaurentSeries::one(), &(&rr2(w)? * &pinf(&[(-1, 2)], 2, w)?).scale(&rat(2)), w)),
        ),
        "A.29" => (
            ProductTerm::new().quadratic(2, 0).num(poch(-1, 1, 2, 1, 0)).den(poch(1, 1, 2, 1, 0)).den(qfac(2)),
            Box::new(|w| divide(&pinf(&[(1, 6), (1, 6), (1, 12)], 12, w)?, &pinf(&[(1, 1)], 1, w)?, w)),
        ),
        "A.34" => (
            ProductTerm::new().quadratic(2, 0).num(poch(-1, 1, 2, 1, 0)).den(qfac(2)),
            Box::new(|w| divide(&LaurentSeries::one(), &pinf(&[(1, 1), (1, 4), (1, 7)], 8, w)?, w)),
        ),
        "A.36" => (
            ProductTerm::new().quadratic(2, 4).num(poch(-1, 1, 2, 1, 0)).den(qfac(2)),
            Box::new(|w| divide(&LaurentSeries::one(), &pinf(&[(1, 3), (1, 4), (1, 5)], 8, w)?, w)),
        ),
        "A.38" => (
            ProductTerm::new().quadratic(4, 0).den(poch(1, 1, 2, 1, 0)).den(qfac(2)),
            Box::new(|w| divide(&pinf(&[(-1, 3), (-1, 5), (1, 8)], 8, w)?, &pinf(&[(1, 2)], 2, w)?, w)),
        ),
        "A.39" => (
            ProductTerm::new().quadratic(4, 4).den(poch(1, 3, 2, 1, 0)).den(qfac(2)),
            Box::new(move |w| {
                divide(&(&one_minus_q * &pinf(&[(-1, 1), (-1, 7), (1, 8)], 8, w)?), &pinf(&[(1, 2)], 2, w)?, w)
            }),
        ),
        "A.50" => (
            ProductTerm::new().quadratic(2, 4).num(poch(-1, 1, 2, 1, 0)).den(poch(1, 3, 2, 1, 0)).den(qfac(2)),
            Box::new(move |w| {
                divide(&(&LaurentSeries::poly(0, &[1, -1]) * &pinf(&[(1, 2), (1, 10), (1, 12)], 12, w)?), &pinf(&[(1, 1)], 1, w)?, w)
            }),
        ),
        "A.79" => (
            ProductTerm::new().quadratic(2, 0).den(poch(1, 1, 2, 1, 0)).den(qfac(2)),
            Box::new(|w| {
                divide(&(&pinf(&[(1, 8), (1, 12), (1, 20)], 20, w)? * &pinf(&[(-1, 1)], 2, w)?), &pinf(&[(1, 2)], 2, w)?, w)
            }),
        ),
        "A.96" => (
            ProductTerm::new().quadratic(2, 4).den(poch(1, 3, 2, 1, 0)).den(qfac(2)),
            Box::new(|w| {
                let top = &(&LaurentSeries::poly(0, &[1, -1]) * &pinf(&[(1, 4), (1, 16), (1, 20)], 20, w)?) * &pinf(&[(-1, 1)], 2, w)?;
                divide(&top, &pinf(&[(1, 2)], 2, w)?, w)
            }),
        ),
        _ => return Err(Error::UnknownIdentity(tag.to_string())),
    };
    let l = sum.sum(order)?;
    let r = to_order(order, 0, product)?;
    Ok((l, r))
}

/// One of the cited sum-to-product identities.
pub fn verify_slater(tag: &str, order: i64) -> Result<VerificationReport> {
    verify(tag, 0, order)
}

/// Parameters and prefactor linking a displayed Watson-type corollary to the
/// generic transformation: displayed sum `= F(m) *` generic left side.
fn watson_link(id: &str, m: i64, w: i64) -> Result<(FamilyParams, bool, LaurentSeries)> {
    let q = |e| Monomial::q(e);
    Ok(match id {
        "c1w" => (FamilyParams::rr_limit(QBase::Q).shift_x_steps(m), false, pfin(1, 1, 1, m, w)?),
        "c2w" => {
            let p = FamilyParams::new(q(m - 1), Monomial::zero(), q(1), QBase::Q);
            (p, false, divide(&pfin(1, 1, 1, m, w)?, &pfin(-1, 1, 1, m - 1, w)?, w)?)
        }
        "c3w" => {
            let p = FamilyParams::new(q(2 * m - 1), mq(-1, 0), Monomial::zero(), QBase::Q2);
            (p, false, divide(&LaurentSeries::constant(rat(2)), &pfin(-1, 1, 2, m, w)?, w)?)
        }
        "c4w" => {
            let p = FamilyParams::new(q(2 * m - 1), Monomial::zero(), q(1), QBase::Q2);
            (p, false, divide(&pfin(1, 2, 2, m, w)?, &pfin(-1, 1, 2, m, w)?, w)?)
        }
        "cc1w" => {
            let p = FamilyParams::new(q(2 * m - 1), mq(-1, 0), Monomial::zero(), QBase::Q2);
            (p, true, divide(&LaurentSeries::one(), &pfin(1, 2, 4, m, w)?, w)?)
        }
        "cc3w" => {
            let p = FamilyParams::new(q(2 * m - 1), mq(-1, 0), q(1), QBase::Q2);
            (p, true, divide(&pfin(1, 2, 2, m, w)?, &pfin(1, 2, 4, m, w)?, w)?)
        }
        _ => return Err(Error::InvalidArgument(format!("{id} is not a Watson-type corollary"))),
    })
}

/// Ids of the corollaries obtained through a Watson-type transformation.
pub const WATSON_IDS: [&str; 6] = ["c1w", "c2w", "c3w", "c4w", "cc1w", "cc3w"];

/// Checks that a Watson-type corollary's displayed sum, the generic
/// transformation at the matching parameters, and the displayed product side
/// all agree.
pub fn watson_triangle(id: &str, m: i64, order: i64) -> Result<Option<Mismatch>> {
    let (shown_lhs, shown_rhs) = corollary_pair(id, m, order, None)?;
    let generic = |left: bool| {
        to_order(order, 0, |w| {
            let (p, second, f) = watson_link(id, m, w)?;
            let s = match (second, left) {
                (false, true) => watson_lhs(&p, w)?,
                (false, false) => watson_rhs(&p, w)?,
                (true, true) => watson2_lhs(&p, w)?,
                (true, false) => watson2_rhs(&p, w)?,
            };
            Ok(&f * &s)
        })
    };
    let gl = generic(true)?;
    let gr = generic(false)?;
    first_of([
        eq_to_order(&shown_lhs, &gl, order),
        eq_to_order(&gl, &gr, order),
        eq_to_order(&gr, &shown_rhs, order),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        assert_eq!(corollary_ids().count(), 26);
        assert_eq!(list().iter().filter(|e| e.kind == EntryKind::Theorem).count(), 5);
        assert_eq!(list().iter().filter(|e| e.kind == EntryKind::Slater).count(), 12);
        assert_eq!(list().iter().filter(|e| e.id.starts_with("cc")).count(), 8);
        for id in corollary_ids() {
            assert!(corollary_sides(id).is_some(), "{id}");
            assert!(corollary_family(id).is_ok(), "{id}");
        }
    }

    #[test]
    fn c1_examples() {
        let r = verify("c1", 2, 30).unwrap();
        assert!(r.pass);
        let (l, _) = corollary_pair("c1", 2, 8, None).unwrap();
        assert!(eq_to_order(&l, &LaurentSeries::poly(0, &[1, 0, 0, 1, 1, 1, 1, 1]), 8).unwrap().is_none());
        assert!(verify("c1", 0, 30).unwrap().pass);
        let bad = verify_with_fault("c1", 2, 30, Some(1)).unwrap();
        assert!(!bad.pass);
        assert!(bad.first_mismatch.is_some());
    }

    #[test]
    fn unknown_and_out_of_domain() {
        assert!(matches!(verify("zz", 0, 10), Err(Error::UnknownIdentity(_))));
        assert!(matches!(verify("cm1", 0, 10), Err(Error::OutOfDomain { .. })));
        assert!(matches!(verify("t1ef", 1, 10), Err(Error::OutOfDomain { .. })));
        assert!(verify_range("c4", 3, 2, 10).unwrap().is_empty());
    }

    #[test]
    fn slater_a34_to_60() {
        assert!(verify_slater("A.34", 60).unwrap().pass);
        assert!(!verify_with_fault("A.34", 0, 60, Some(7)).unwrap().pass);
    }

    #[test]
    fn slater_sums_are_phi_specializations() {
        let q = Monomial::q;
        let cases = [
            ("A.8", FamilyParams::new(q(-1), Monomial::zero(), q(1), QBase::Q), false),
            ("A.13", FamilyParams::new(Monomial::one(), Monomial::zero(), q(1), QBase::Q), false),
            ("A.16", FamilyParams::new(q(-1), mq(-1, 0), Monomial::zero(), QBase::Q2), false),
            ("A.20", FamilyParams::new(q(1), mq(-1, 0), Monomial::zero(), QBase::Q2), false),
            ("A.34", FamilyParams::new(q(-1), Monomial::zero(), q(1), QBase::Q2), false),
            ("A.36", FamilyParams::new(q(1), Monomial::zero(), q(1), QBase::Q2), false),
            ("A.79", FamilyParams::new(q(-1), mq(-1, 0), Monomial::zero(), QBase::Q2), true),
            ("A.96", FamilyParams::new(q(1), mq(-1, 0), Monomial::zero(), QBase::Q2), true),
            ("A.29", FamilyParams::new(q(-1), mq(-1, 0), q(1), QBase::Q2), true),
            ("A.50", FamilyParams::new(q(1), mq(-1, 0), q(1), QBase::Q2), true),
        ];
        for (tag, p, big) in cases {
            let (sum, _) = slater_sides(tag, 40).unwrap();
            let g = if big { phi_big(&p, 40).unwrap() } else { phi(&p, 40).unwrap() };
            assert!(eq_to_order(&sum, &g, 40).unwrap().is_none(), "{tag}");
        }
    }

    #[test]
    fn theorem_examples() {
        let p = default_params();
        assert!(verify_theorem_t1ef(&p, 3, 40).unwrap().pass);
        let p0 = FamilyParams::new(Monomial::q(1), Monomial::zero(), Monomial::q(1), QBase::Q);
        assert!(verify_theorem_t1ef(&p0, 2, 30).unwrap().pass);
        // y = zxq
        let pole = FamilyParams::new(Monomial::q(1), Monomial::q(3), Monomial::q(1), QBase::Q);
        assert!(matches!(verify_theorem_t1ef(&pole, 3, 20), Err(Error::DenominatorPole(_))));
        for m in 2..=4 {
            assert!(verify_theorem_t2ef(&p, m, 30).unwrap().pass, "t2ef m = {m}");
        }
        let zero_x = FamilyParams::new(Monomial::zero(), Monomial::q(1), Monomial::q(1), QBase::Q);
        assert!(matches!(verify_theorem_t2ef(&zero_x, 2, 20), Err(Error::DenominatorPole(_))));
        for m in 1..=4 {
            assert!(verify_theorem_t3ef(1, &p, m, 30).unwrap().pass, "t3ef i m = {m}");
            assert!(verify_theorem_t3ef(2, &p, m, 30).unwrap().pass, "t3ef ii m = {m}");
        }
        let no_xy = FamilyParams::new(Monomial::q(1), Monomial::zero(), Monomial::q(1), QBase::Q);
        assert!(verify_theorem_t3ef(2, &no_xy, 1, 20).is_err());
    }

    #[test]
    fn polyver_examples() {
        let p = polyver_params();
        assert!(verify_polyver(1, &p, 3, 2).unwrap().pass);
        assert!(verify_polyver(2, &p, 3, 2).unwrap().pass);
        assert!(verify_polyver(1, &p, 0, 1).unwrap().pass);
        assert!(!verify_with_fault("polyver", 2, 10, Some(3)).unwrap().pass);
    }

    #[test]
    fn watson_triangles_low_m() {
        for id in WATSON_IDS {
            for m in 0..=2 {
                assert_eq!(watson_triangle(id, m, 30).unwrap(), None, "{id} m = {m}");
            }
        }
    }

    #[test]
    fn report_json_fields() {
        let r = verify_with_fault("c1", 1, 20, Some(2)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for k in ["identity", "m", "order", "pass", "first_mismatch", "elapsed_ms"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        let fm = v["first_mismatch"].as_object().unwrap();
        assert!(fm["lhs"].is_string() && fm["rhs"].is_string() && fm["exponent"].is_i64());
    }
}
