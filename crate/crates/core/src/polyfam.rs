//! The polynomial families `e_m, f_m, g_m, h_m` and the `a_m, b_m` pairs of
//! each corollary.

use std::collections::HashMap;

use crate::cfrac::CFSpec;
use crate::error::{Error, Result};
use crate::fps::{ratio, LaurentSeries, Monomial};
use crate::qkit::{gauss_binomial, QBase};

/// Parameters `x, y, z` together with the products `xy` and `xz`.
///
/// Storing the products lets formal limits such as `z = 1/x, x -> 0` be
/// entered directly: `x = 0`, `xz = 1`. A parameter that only survives
/// through a product is recorded as `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub x: Monomial,
    pub y: Option<Monomial>,
    pub z: Option<Monomial>,
    pub xy: Monomial,
    pub xz: Monomial,
    pub base: QBase,
}

impl FamilyParams {
    pub fn new(x: Monomial, y: Monomial, z: Monomial, base: QBase) -> Self {
        let xy = x.mul(&y);
        let xz = x.mul(&z);
        FamilyParams { x, y: Some(y), z: Some(z), xy, xz, base }
    }

    /// Parameters given through their products.
    pub fn limit(x: Monomial, y: Option<Monomial>, z: Option<Monomial>, xy: Monomial, xz: Monomial, base: QBase) -> Self {
        FamilyParams { x, y, z, xy, xz, base }
    }

    /// `z = 1/x` with `y = 0` and `x -> 0`.
    pub fn rr_limit(base: QBase) -> Self {
        Self::limit(Monomial::zero(), Some(Monomial::zero()), None, Monomial::zero(), Monomial::one(), base)
    }

    /// Replaces `x` by `x q^e` (raw exponent of `q`).
    pub fn shift_x(&self, e: i64) -> Self {
        FamilyParams {
            x: self.x.shift(e),
            y: self.y.clone(),
            z: self.z.clone(),
            xy: self.xy.shift(e),
            xz: self.xz.shift(e),
            base: self.base,
        }
    }

    /// Replaces `x` by `x q^{r m}` where `q^r` is the base.
    pub fn shift_x_steps(&self, m: i64) -> Self {
        self.shift_x(self.base.r() * m)
    }

    pub fn r(&self) -> i64 {
        self.base.r()
    }

    pub fn y(&self) -> Result<&Monomial> {
        self.y.as_ref().ok_or_else(|| Error::InvalidArgument("y enters only through xy here".into()))
    }

    pub fn z(&self) -> Result<&Monomial> {
        self.z.as_ref().ok_or_else(|| Error::InvalidArgument("z enters only through xz here".into()))
    }
}

/// Per-call memo of Gaussian polynomials.
#[derive(Default)]
pub(crate) struct GaussCache {
    map: HashMap<(i64, i64, i64), LaurentSeries>,
}

impl GaussCache {
    pub(crate) fn get(&mut self, n: i64, k: i64, base: QBase) -> &LaurentSeries {
        let n = if k < 0 || k > n { -1 } else { n };
        let k = if n < 0 { 0 } else { k.min(n - k) };
        self.map
            .entry((n, k, base.r()))
            .or_insert_with(|| gauss_binomial(n, k, base))
    }
}

fn pw(m: &Monomial, k: i64) -> Monomial {
    m.pow(k as u32)
}

/// `e_m` by its triple sum (`lin = 0`, top `m - 1`) or `f_m`
/// (`lin = 1`, top `m - 2`).
fn ef_sum(p: &FamilyParams, top: i64, lin: i64) -> Result<LaurentSeries> {
    let r = p.r();
    let mut gc = GaussCache::default();
    let mut acc = LaurentSeries::exact_zero();
    for n in 0..=top {
        for l in 0..=n {
            for j in 0..=(top - l - n) {
                let mut mono = pw(&p.x, n - l).mul(&pw(&p.xz, l));
                if j > 0 {
                    mono = mono.mul(&pw(p.y()?, j));
                }
                if mono.is_zero() {
                    continue;
                }
                let mono = mono.shift(r * (n * (n + 1) / 2 + lin * n + l * (l - 1) / 2));
                let t = &(gc.get(n + j, j, p.base).clone() * gc.get(top - j - l, n, p.base)) * gc.get(n, l, p.base);
                acc = &acc + &t.scale_monomial(&mono);
            }
        }
    }
    Ok(acc)
}

/// `e_m(x, y, z)`; `e_0 = 0`.
pub fn e_m(p: &FamilyParams, m: i64) -> Result<LaurentSeries> {
    ef_sum(p, m - 1, 0)
}

/// `f_m(x, y, z)`, which equals `e_{m-1}(xq, y, z)`.
pub fn f_m(p: &FamilyParams, m: i64) -> Result<LaurentSeries> {
    ef_sum(p, m - 2, 1)
}

fn gh_sum(p: &FamilyParams, top: i64, lin: i64) -> LaurentSeries {
    let r = p.r();
    let mut gc = GaussCache::default();
    let mut acc = LaurentSeries::exact_zero();
    for n in 0..=top {
        for l in 0..=(top - n).min(n) {
            for j in 0..=(n - l) {
                let mono = pw(&p.x, n - j - l).mul(&pw(&p.xy, j)).mul(&pw(&p.xz, l));
                if mono.is_zero() {
                    continue;
                }
                let mono = mono.shift(r * (n * (n + 1) / 2 + lin * n + l * (l - 1) / 2));
                let t = &(gc.get(top - n + j, j, p.base).clone() * gc.get(top - j - l, n - j - l, p.base))
                    * gc.get(top - n, l, p.base);
                acc = &acc + &t.scale_monomial(&mono);
            }
        }
    }
    acc
}

/// `g_m(x, y, z)`; the sum gives `g_0 = 0`.
pub fn g_m(p: &FamilyParams, m: i64) -> LaurentSeries {
    gh_sum(p, m - 1, 0)
}

/// `h_m(x, y, z)`, which equals `g_{m-1}(xq, y, z)`.
pub fn h_m(p: &FamilyParams, m: i64) -> LaurentSeries {
    gh_sum(p, m - 2, 1)
}

/// `e_m` from `e_{k+1} = (y + 1 + x q^k) e_k + (-y + zx q^{k-1}) e_{k-1}`,
/// `e_0 = 0`, `e_1 = 1`.
pub fn e_via_recurrence(p: &FamilyParams, m: i64) -> Result<LaurentSeries> {
    if m <= 0 {
        return Ok(LaurentSeries::exact_zero());
    }
    let y = p.y()?.to_series();
    let r = p.r();
    let (mut prev, mut cur) = (LaurentSeries::exact_zero(), LaurentSeries::one());
    for k in 1..m {
        let bk = &(&y + &LaurentSeries::one()) + &p.x.shift(r * k).to_series();
        let ak = &p.xz.shift(r * (k - 1)).to_series() - &y;
        let next = &(&bk * &cur) + &(&ak * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The fraction `(zx - y)/(y + 1 + xq) + (zxq - y)/(y + 1 + xq^2) + ...`
/// whose convergents are `(zx - y) f_{n+1}` over `e_{n+1}`.
pub fn t1ef_fraction(p: &FamilyParams) -> Result<CFSpec> {
    let y = p.y()?.to_series();
    let (x, xz, r) = (p.x.clone(), p.xz.clone(), p.r());
    let y2 = y.clone();
    Ok(CFSpec::new(
        LaurentSeries::exact_zero(),
        move |k| &xz.shift(r * (k - 1)).to_series() - &y,
        move |k| &(&y2 + &LaurentSeries::one()) + &x.shift(r * k).to_series(),
    ))
}

/// The fraction with `a_k = -x^2 y q^{2k-1} + zx q^{k-1}` and
/// `b_k = (x + xy) q^k + 1`, whose convergents are `(zx - x^2yq) h_{n+1}`
/// over `g_{n+1}`.
pub fn t2ef_fraction(p: &FamilyParams) -> CFSpec {
    let (x, xy, xz, r) = (p.x.clone(), p.xy.clone(), p.xz.clone(), p.r());
    let x2y = x.mul(&xy);
    CFSpec::new(
        LaurentSeries::exact_zero(),
        move |k| &xz.shift(r * (k - 1)).to_series() - &x2y.shift(r * (2 * k - 1)).to_series(),
        move |k| &(&x.shift(r * k).to_series() + &xy.shift(r * k).to_series()) + &LaurentSeries::one(),
    )
}

/// `zx - y`, the leading partial numerator of [`t1ef_fraction`].
pub fn t1ef_lead(p: &FamilyParams) -> Result<LaurentSeries> {
    Ok(&p.xz.to_series() - &p.y()?.to_series())
}

/// `zx - x^2 y q`, the leading partial numerator of [`t2ef_fraction`].
pub fn t2ef_lead(p: &FamilyParams) -> LaurentSeries {
    &p.xz.to_series() - &p.x.mul(&p.xy).shift(p.r()).to_series()
}

/// The shape of a corollary's `a_m, b_m` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Sums over `n` of `q^{n^2+n}[m-2-n; n]` and `q^{n^2}[m-1-n; n]`.
    RogersRamanujan,
    /// Double sums with `q^{n(n-1)/2 + l(l+1)/2}`.
    Slater8,
    /// Alternating double sums with `[n+j; j]` in base `q^2`.
    Slater16,
    /// Double sums with `q^{n^2+l^2}` in base `q^2`.
    GollnitzGordon,
    /// Alternating sums with `[m-1-n+j; j][m-1-j; n-j]` in base `q^2`.
    Rogers79,
    /// Double sums with sign `(-1)^{n-l}` in base `q^2`.
    Slater38,
    /// Triple sums with sign `(-1)^j` in base `q^2`.
    Slater29,
    /// Triple sums with sign `(-1)^{j+l+n}` in base `q^2`.
    Slater29Alt,
    /// Negative `m`: `q^{n^2-mn}`, `[m-n; n]` and `[m-1-n; n]`.
    NegRogersRamanujan,
    /// Negative `m`: `q^{n^2+l^2-2mn}` in base `q^2`.
    NegGollnitzGordon,
    /// Negative `m`: alternating `q^{n^2-2mn}[..; n][n+j; j]` in base `q^2`.
    NegSlater16,
    /// Negative `m`: alternating `q^{n^2-2mn}[..; j][..; n-j]` in base `q^2`.
    NegRogers79,
}

impl FamilyKind {
    pub fn base(self) -> QBase {
        match self {
            FamilyKind::RogersRamanujan | FamilyKind::Slater8 | FamilyKind::NegRogersRamanujan => QBase::Q,
            _ => QBase::Q2,
        }
    }

    /// `true` for the families indexed by `m >= 1` without base cases.
    pub fn is_negative(self) -> bool {
        matches!(
            self,
            FamilyKind::NegRogersRamanujan
                | FamilyKind::NegGollnitzGordon
                | FamilyKind::NegSlater16
                | FamilyKind::NegRogers79
        )
    }

    /// `(a_0, b_0)` for the positive families.
    pub fn base_cases(self) -> Option<(LaurentSeries, LaurentSeries)> {
        match self {
            FamilyKind::RogersRamanujan => Some((LaurentSeries::one(), LaurentSeries::exact_zero())),
            FamilyKind::Slater29 | FamilyKind::Slater29Alt => {
                Some((LaurentSeries::exact_zero(), LaurentSeries::constant(ratio(1, 2))))
            }
            k if k.is_negative() => None,
            _ => Some((LaurentSeries::exact_zero(), LaurentSeries::one())),
        }
    }
}

/// The `a_m, b_m` pair of one corollary.
#[derive(Clone, Debug)]
pub struct CorollaryFamily {
    pub id: &'static str,
    pub kind: FamilyKind,
    pub base: QBase,
}

fn sgn(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl CorollaryFamily {
    /// `a_m`; the stated base case at `m = 0`.
    pub fn a(&self, m: i64) -> LaurentSeries {
        self.pair(m).0
    }

    /// `b_m`; the stated base case at `m = 0`.
    pub fn b(&self, m: i64) -> LaurentSeries {
        self.pair(m).1
    }

    /// `(a_m, b_m)`.
    pub fn pair(&self, m: i64) -> (LaurentSeries, LaurentSeries) {
        if m == 0 {
            if let Some(bc) = self.kind.base_cases() {
                return bc;
            }
        }
        (self.sum(m, true), self.sum(m, false))
    }

    fn sum(&self, m: i64, first: bool) -> LaurentSeries {
        let base = self.base;
        let mut gc = GaussCache::default();
        let mut acc = LaurentSeries::exact_zero();
        let add = |acc: &mut LaurentSeries, sign: i64, exp: i64, t: LaurentSeries| {
            if !t.is_zero() {
                *acc = &*acc + &t.scale_monomial(&Monomial::int(sign, exp));
            }
        };
        // every Gaussian polynomial vanishes once n exceeds m + 1
        let span = m.max(0) + 2;
        match self.kind {
            FamilyKind::RogersRamanujan => {
                for n in 0..=span {
                    let (e, t) = if first { (n * n + n, m - 2 - n) } else { (n * n, m - 1 - n) };
                    add(&mut acc, 1, e, gc.get(t, n, base).clone());
                }
            }
            FamilyKind::Slater8 => {
                for n in 0..=span {
                    for l in 0..=n {
                        let (e, t) = if first {
                            (n * (n - 1) / 2 + l * (l + 1) / 2, m - 1 - l)
                        } else {
                            (n * (n + 1) / 2 + l * (l + 1) / 2, m - 2 - l)
                        };
                        add(&mut acc, 1, e, gc.get(t, n, base).clone() * gc.get(n, l, base));
                    }
                }
            }
            FamilyKind::Slater16 => {
                for n in 0..=span {
                    for j in 0..=span {
                        let (e, t) = if first { (n * n, m - 1 - j) } else { (n * n + 2 * n, m - 2 - j) };
                        add(&mut acc, sgn(j), e, gc.get(t, n, base).clone() * gc.get(n + j, j, base));
                    }
                }
            }
            FamilyKind::GollnitzGordon => {
                for n in 0..=span {
                    for l in 0..=n {
                        let (e, t) = if first { (n * n + l * l, m - 1 - l) } else { (n * n + 2 * n + l * l, m - 2 - l) };
                        add(&mut acc, 1, e, gc.get(t, n, base).clone() * gc.get(n, l, base));
                    }
                }
            }
            FamilyKind::Rogers79 => {
                let (e_lin, t) = if first { (0, m - 1) } else { (2, m - 2) };
                for n in 0..=span {
                    for j in 0..=n {
                        let g = gc.get(t - n + j, j, base).clone() * gc.get(t - j, n - j, base);
                        add(&mut acc, sgn(j), n * n + e_lin * n, g);
                    }
                }
            }
            FamilyKind::Slater38 => {
                let (e_lin, t) = if first { (0, m - 1) } else { (2, m - 2) };
                for n in 0..=span {
                    for l in 0..=n {
                        let g = gc.get(t - l, n - l, base).clone() * gc.get(t - n, l, base);
                        add(&mut acc, sgn(n - l), n * n + e_lin * n + l * l, g);
                    }
                }
            }
            FamilyKind::Slater29 | FamilyKind::Slater29Alt => {
                let (e_lin, t) = if first { (0, m - 1) } else { (2, m - 2) };
                let alt = self.kind == FamilyKind::Slater29Alt;
                for n in 0..=span {
                    for j in 0..=n {
                        for l in 0..=(n - j) {
                            let g = &(gc.get(t - n + j, j, base).clone() * gc.get(t - j - l, n - j - l, base))
                                * gc.get(t - n, l, base);
                            let s = if alt { sgn(j + l + n) } else { sgn(j) };
                            add(&mut acc, s, n * n + e_lin * n + l * l, g);
                        }
                    }
                }
            }
            FamilyKind::NegRogersRamanujan => {
                for n in 0..=span {
                    let t = if first { m - n } else { m - 1 - n };
                    add(&mut acc, 1, n * n - m * n, gc.get(t, n, base).clone());
                }
            }
            FamilyKind::NegGollnitzGordon => {
                for n in 0..=span {
                    for l in 0..=n {
                        let t = if first { m - 1 - l } else { m - l };
                        add(&mut acc, 1, n * n + l * l - 2 * m * n, gc.get(t, n, base).clone() * gc.get(n, l, base));
                    }
                }
            }
            FamilyKind::NegSlater16 => {
                for n in 0..=span {
                    for j in 0..=span {
                        let t = if first { m - 1 - j } else { m - j };
                        add(&mut acc, sgn(j), n * n - 2 * m * n, gc.get(t, n, base).clone() * gc.get(n + j, j, base));
                    }
                }
            }
            FamilyKind::NegRogers79 => {
                let t = if first { m - 1 } else { m };
                for n in 0..=span {
                    for j in 0..=n {
                        let g = gc.get(t - n + j, j, base).clone() * gc.get(t - j, n - j, base);
                        add(&mut acc, sgn(j), n * n - 2 * m * n, g);
                    }
                }
            }
        }
        acc
    }
}

/// All corollary identifiers in order of appearance.
pub const COROLLARY_IDS: [&str; 26] = [
    "c1", "c2", "c3", "c4", "c1w", "c2w", "c3w", "c4w", "c2h", "c3h", "c4h", "c2m2", "cc1", "cc2", "cc3", "cc1w",
    "cc3w", "cc3h", "cc3r", "cm1", "cm4", "c3m", "c3wm", "c3hm", "cm4r", "cc1m",
];

/// The `a_m, b_m` family used by corollary `id`.
pub fn corollary_family(id: &str) -> Result<CorollaryFamily> {
    let (id, kind) = match id {
        "c1" => ("c1", FamilyKind::RogersRamanujan),
        "c1w" => ("c1w", FamilyKind::RogersRamanujan),
        "c2" => ("c2", FamilyKind::Slater8),
        "c2w" => ("c2w", FamilyKind::Slater8),
        "c2h" => ("c2h", FamilyKind::Slater8),
        "c2m2" => ("c2m2", FamilyKind::Slater8),
        "c3" => ("c3", FamilyKind::Slater16),
        "c3w" => ("c3w", FamilyKind::Slater16),
        "c3h" => ("c3h", FamilyKind::Slater16),
        "c4" => ("c4", FamilyKind::GollnitzGordon),
        "c4w" => ("c4w", FamilyKind::GollnitzGordon),
        "c4h" => ("c4h", FamilyKind::GollnitzGordon),
        "cc1" => ("cc1", FamilyKind::Rogers79),
        "cc1w" => ("cc1w", FamilyKind::Rogers79),
        "cc2" => ("cc2", FamilyKind::Slater38),
        "cc3" => ("cc3", FamilyKind::Slater29),
        "cc3w" => ("cc3w", FamilyKind::Slater29),
        "cc3r" => ("cc3r", FamilyKind::Slater29),
        "cc3h" => ("cc3h", FamilyKind::Slater29Alt),
        "cm1" => ("cm1", FamilyKind::NegRogersRamanujan),
        "cm4" => ("cm4", FamilyKind::NegGollnitzGordon),
        "cm4r" => ("cm4r", FamilyKind::NegGollnitzGordon),
        "c3m" => ("c3m", FamilyKind::NegSlater16),
        "c3wm" => ("c3wm", FamilyKind::NegSlater16),
        "c3hm" => ("c3hm", FamilyKind::NegSlater16),
        "cc1m" => ("cc1m", FamilyKind::NegRogers79),
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(CorollaryFamily { id, kind, base: kind.base() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::Convergents;
    use crate::fps::{eq_polynomial, rat};

    fn poly_eq(f: &LaurentSeries, g: &LaurentSeries) -> bool {
        eq_polynomial(f, g).unwrap().is_none()
    }

    fn specializations() -> Vec<FamilyParams> {
        vec![
            FamilyParams::new(Monomial::q(-1), Monomial::zero(), Monomial::q(1), QBase::Q),
            FamilyParams::new(Monomial::q(-1), Monomial::int(-1, 0), Monomial::zero(), QBase::Q2),
            FamilyParams::new(Monomial::q(1), Monomial::new(ratio(1, 2), 0), Monomial::q(2), QBase::Q),
            FamilyParams::new(Monomial::int(3, 0), Monomial::q(1), Monomial::int(-2, -1), QBase::Q),
            FamilyParams::rr_limit(QBase::Q),
            FamilyParams::new(Monomial::q(-1), Monomial::int(-1, 0), Monomial::q(1), QBase::Q2),
        ]
    }

    #[test]
    fn small_values() {
        for p in specializations() {
            assert!(e_m(&p, 0).unwrap().is_zero());
            assert!(poly_eq(&e_m(&p, 1).unwrap(), &LaurentSeries::one()));
            let e2 = &(&p.y().unwrap().to_series() + &LaurentSeries::one()) + &p.x.shift(p.r()).to_series();
            assert!(poly_eq(&e_m(&p, 2).unwrap(), &e2));
            assert!(poly_eq(&e_via_recurrence(&p, 2).unwrap(), &e2));
            assert!(e_via_recurrence(&p, 0).unwrap().is_zero());
            assert!(poly_eq(&g_m(&p, 1), &LaurentSeries::one()));
            assert!(g_m(&p, 0).is_zero());
        }
    }

    #[test]
    fn explicit_matches_recurrence() {
        for p in specializations() {
            for m in 0..=12 {
                assert!(poly_eq(&e_m(&p, m).unwrap(), &e_via_recurrence(&p, m).unwrap()), "m={m} {p:?}");
            }
        }
    }

    #[test]
    fn shifted_definitions() {
        for p in specializations() {
            let shifted = p.shift_x_steps(1);
            for m in 1..=10 {
                assert!(poly_eq(&f_m(&p, m).unwrap(), &e_m(&shifted, m - 1).unwrap()));
            }
            for m in 1..=8 {
                assert!(poly_eq(&h_m(&p, m), &g_m(&shifted, m - 1)));
            }
        }
    }

    #[test]
    fn fraction_linkage() {
        for p in specializations() {
            let lead = t1ef_lead(&p).unwrap();
            let mut c = Convergents::new(t1ef_fraction(&p).unwrap());
            let lead2 = t2ef_lead(&p);
            let mut c2 = Convergents::new(t2ef_fraction(&p));
            for n in 0..=10 {
                assert!(poly_eq(c.p(n), &(&lead * &f_m(&p, n + 1).unwrap())));
                assert!(poly_eq(c.q(n), &e_m(&p, n + 1).unwrap()));
                assert!(poly_eq(c2.p(n), &(&lead2 * &h_m(&p, n + 1))));
                assert!(poly_eq(c2.q(n), &g_m(&p, n + 1)));
            }
        }
    }

    #[test]
    fn corollary_families_against_general_families() {
        let c1 = corollary_family("c1").unwrap();
        let c2 = corollary_family("c2").unwrap();
        let c3 = corollary_family("c3").unwrap();
        let c4 = corollary_family("c4").unwrap();
        let rr = FamilyParams::rr_limit(QBase::Q);
        let p2 = FamilyParams::new(Monomial::q(-1), Monomial::zero(), Monomial::q(1), QBase::Q);
        let p3 = FamilyParams::new(Monomial::q(-1), Monomial::int(-1, 0), Monomial::zero(), QBase::Q2);
        let p4 = FamilyParams::new(Monomial::q(-1), Monomial::zero(), Monomial::q(1), QBase::Q2);
        for m in 1..=8 {
            assert!(poly_eq(&c1.a(m), &f_m(&rr, m).unwrap()));
            assert!(poly_eq(&c1.b(m), &e_m(&rr, m).unwrap()));
            for (fam, p) in [(&c2, &p2), (&c3, &p3), (&c4, &p4)] {
                assert!(poly_eq(&fam.a(m), &e_m(p, m).unwrap()), "{} a_{m}", fam.id);
                assert!(poly_eq(&fam.b(m), &f_m(p, m).unwrap()), "{} b_{m}", fam.id);
            }
        }
        assert!(poly_eq(&c1.a(2), &LaurentSeries::one()));
        assert!(poly_eq(&c1.b(2), &LaurentSeries::one()));
        assert!(poly_eq(&c2.a(2), &LaurentSeries::constant(rat(2))));
        assert!(poly_eq(&c2.b(2), &f_m(&p2, 2).unwrap()));
    }

    #[test]
    fn base_cases() {
        let c1 = corollary_family("c1").unwrap();
        assert!(poly_eq(&c1.a(0), &LaurentSeries::one()));
        assert!(c1.b(0).is_zero());
        let cc3 = corollary_family("cc3").unwrap();
        assert!(cc3.a(0).is_zero());
        assert!(poly_eq(&cc3.b(0), &LaurentSeries::constant(ratio(1, 2))));
        assert!(matches!(corollary_family("zz"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn rogers79_family_is_even() {
        let cc1 = corollary_family("cc1").unwrap();
        for m in 0..=8 {
            let (a, b) = cc1.pair(m);
            assert!(poly_eq(&a, &a.negate_q()), "a_{m}");
            assert!(poly_eq(&b, &b.negate_q()), "b_{m}");
        }
    }

    #[test]
    fn every_identifier_resolves() {
        for id in COROLLARY_IDS {
            let f = corollary_family(id).unwrap();
            assert_eq!(f.id, id);
            let m = if f.kind.is_negative() { 1 } else { 0 };
            let _ = f.pair(m);
        }
    }
}
