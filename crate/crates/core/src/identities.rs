//! Polynomial identities in `y` behind the functional equations of `C(x)^r`
//! and `C(x)^r/sqrt(1-4x)`, checked by full expansion, together with the
//! hypergeometric coefficient sums and their recurrences.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binomial, Poly, PowerSeries, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::genfunc::GFKind;

/// Dense polynomial in `y` over the rationals.
pub type PolyInY = Poly<Rational>;

/// `coef · (y+1)^i · y^j`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YTerm {
    pub coef: Rational,
    pub i: usize,
    pub j: usize,
}

/// `(y+1)^r + lhs_const = Σ terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YIdentity {
    pub r: usize,
    pub lhs_const: i64,
    pub terms: Vec<YTerm>,
}

fn y_plus_one() -> PolyInY {
    Poly::from_i64s(&[1, 1])
}

impl YIdentity {
    pub fn lhs(&self) -> PolyInY {
        &y_plus_one().pow(self.r as u32) + &Poly::constant(Rational::from(self.lhs_const))
    }

    pub fn rhs(&self) -> PolyInY {
        self.terms.iter().fold(Poly::zero(), |acc, t| {
            &acc + &y_plus_one().pow(t.i as u32).shift_up(t.j).scale(&t.coef)
        })
    }

    pub fn holds(&self) -> bool {
        self.lhs() == self.rhs()
    }
}

fn b(n: i64, k: i64) -> Rational {
    Rational::from(binomial(n, k))
}

/// Identity giving the quadratic equation of `C(x)^r`:
/// odd `r = 2t+1`: `(y+1)^r - 1 = Σ (2t+1)/(2t-2i+1) binom(2t-i,i) (y+1)^i y^(2t-2i+1)`,
/// even `r = 2t`: `(y+1)^r + 1 = Σ 2t/(2t-i) binom(2t-i,i) (y+1)^i y^(2t-2i)`.
pub fn f_identity(r: u32) -> YIdentity {
    assert!(r >= 1, "r must be positive");
    let t = (r / 2) as i64;
    let terms = (0..=t)
        .map(|i| {
            let (coef, j) = if r % 2 == 1 {
                (b(2 * t - i, i) * Rational::from_frac(2 * t + 1, 2 * t - 2 * i + 1), 2 * t - 2 * i + 1)
            } else {
                (b(2 * t - i, i) * Rational::from_frac(2 * t, 2 * t - i), 2 * t - 2 * i)
            };
            YTerm { coef, i: i as usize, j: j as usize }
        })
        .collect();
    YIdentity { r: r as usize, lhs_const: if r % 2 == 1 { -1 } else { 1 }, terms }
}

/// Identity behind the quadratic equation of `C(x)^r/sqrt(1-4x)`:
/// odd `r = 2t+1`: `(y+1)^r + 1 = -Σ binom(2t-i,i)(1+y)^i y^(2t+1-2i) + 2Σ binom(2t-i,i)(1+y)^(i+1) y^(2t-2i)`,
/// even `r = 2t`: `(y+1)^r - 1 = -Σ binom(2t-i-1,i)(1+y)^i y^(2t-2i) + 2Σ binom(2t-i-1,i)(1+y)^(i+1) y^(2t-2i-1)`.
pub fn g_identity(r: u32) -> YIdentity {
    assert!(r >= 1, "r must be positive");
    let t = (r / 2) as i64;
    let mut terms = Vec::new();
    let (top, lhs_const, shift) = if r % 2 == 1 { (t, 1, 0) } else { (t - 1, -1, 1) };
    for i in 0..=top {
        let c = b(2 * t - i - shift, i);
        let j = (2 * t + 1 - 2 * i - 2 * shift) as usize;
        terms.push(YTerm { coef: -&c, i: i as usize, j: j + shift as usize });
        terms.push(YTerm { coef: c * Rational::from(2), i: i as usize + 1, j: j + shift as usize - 1 });
    }
    YIdentity { r: r as usize, lhs_const, terms }
}

/// Both parities (`r = 2t+1` and `r = 2t`) for the `C(x)^r` identity.
pub fn verify_f_identity(t: u32) -> bool {
    f_identity(2 * t + 1).holds() && (t == 0 || f_identity(2 * t).holds())
}

pub fn verify_g_identity(t: u32) -> bool {
    g_identity(2 * t + 1).holds() && (t == 0 || g_identity(2 * t).holds())
}

fn sign(e: i64) -> Rational {
    Rational::from(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `Σ_{0<=i<=min(t,m,2t+1-m)} (-1)^(m-i-1) (2t+1)/(2t-2i+1) binom(2t-i,i) binom(2t-2i+1,m-i)`;
/// equals −1 at `m = 0`, 1 at `m = 2t+1`, 0 in between.
pub fn z_sum_f(t: i64, m: i64) -> Rational {
    let top = t.min(m).min(2 * t + 1 - m);
    (0..=top).fold(Rational::from(0), |acc, i| {
        acc + sign(m - i - 1)
            * Rational::from_frac(2 * t + 1, 2 * t - 2 * i + 1)
            * b(2 * t - i, i)
            * b(2 * t - 2 * i + 1, m - i)
    })
}

/// `Σ (-1)^(m-i) binom(2t-i,i) [binom(2t+1-2i,m-i) - 2 binom(2t-2i,m-i-1)]`;
/// equals 1 at `m = 0` and `m = 2t+1`, 0 in between.
pub fn z_sum_g(t: i64, m: i64) -> Rational {
    let top = t.min(m).min(2 * t + 1 - m);
    (0..=top).fold(Rational::from(0), |acc, i| {
        acc + sign(m - i)
            * b(2 * t - i, i)
            * (b(2 * t + 1 - 2 * i, m - i) - Rational::from(2) * b(2 * t - 2 * i, m - i - 1))
    })
}

fn q(x: i64) -> Rational {
    Rational::from(x)
}

/// `(2t+1)(m-2t-3) Z(t+1,m) - (m^2-2mt-3m+2t+3)(m-2t-1) Z(t,m) = 0`.
pub fn check_z_recurrence_f(t: i64, m: i64) -> bool {
    let lhs = q((2 * t + 1) * (m - 2 * t - 3)) * z_sum_f(t + 1, m);
    let rhs = q((m * m - 2 * m * t - 3 * m + 2 * t + 3) * (m - 2 * t - 1)) * z_sum_f(t, m);
    lhs == rhs
}

/// `(2m-2t-1)(m-2t-3) Z(t+1,m) - (m^2-2tm-m-2t-3)(m-2t-1) Z(t,m) = 0`.
pub fn check_z_recurrence_g(t: i64, m: i64) -> bool {
    let lhs = q((2 * m - 2 * t - 1) * (m - 2 * t - 3)) * z_sum_g(t + 1, m);
    let rhs = q((m * m - 2 * t * m - m - 2 * t - 3) * (m - 2 * t - 1)) * z_sum_g(t, m);
    lhs == rhs
}

/// `(2t+1)/(2t-2i+1) binom(2t-i,i) = binom(2t-i,i) + 2 binom(2t-i,i-1)`, so
/// the odd coefficients are integers.
pub fn check_integer_coefficients(t: i64, i: i64) -> bool {
    let lhs = Rational::from_frac(2 * t + 1, 2 * t - 2 * i + 1) * b(2 * t - i, i);
    lhs.is_integer() && lhs == b(2 * t - i, i) + q(2) * b(2 * t - i, i - 1)
}

/// Quadratic `a F^2 + b F + c = 0` for `F = C(x)^r` obtained from
/// [`f_identity`] by `y = -C`, `y+1 = -x C^2`.
pub fn substituted_relation(r: u32) -> Result<(Poly<Rational>, Poly<Rational>, Poly<Rational>)> {
    let id = f_identity(r);
    let mut lin = Poly::zero();
    for t in &id.terms {
        if 2 * t.i + t.j != id.r {
            return Err(Error::NotCanonicalizable("term is not linear in C^r"));
        }
        lin = &lin + &Poly::monomial(&t.coef * &sign((t.i + t.j) as i64), t.i);
    }
    let a = Poly::monomial(sign(id.r as i64), id.r);
    let c = Poly::constant(q(id.lhs_const));
    Ok((a, -&lin, c))
}

/// The substituted relation annihilates the series of `C(x)^r` to `order`
/// and is proportional to the relation of `kind.fe()`.
pub fn check_substitution(r: u32, order: usize) -> Result<bool> {
    let (a, bb, c) = substituted_relation(r)?;
    let f = PowerSeries::new(GFKind::f(r).coeffs(order));
    let ser = |p: &Poly<Rational>| PowerSeries::from_poly(p, order);
    let res = ser(&a).mul(&f).mul(&f).add(&ser(&bb).mul(&f)).add(&ser(&c));
    if res.valuation().is_some() {
        return Ok(false);
    }
    let (ra, rb, rc) = GFKind::f(r).fe()?.relation();
    let rf = RationalFunction::from_poly;
    let ours = [rf(a), rf(bb), rf(c)];
    let theirs = [ra, rb, rc];
    Ok((0..3).all(|i| (0..3).all(|j| &ours[i] * &theirs[j] == &ours[j] * &theirs[i])))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub t_max: u32,
    pub checks: usize,
    /// Labels of failed checks.
    pub failures: Vec<String>,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn checks_for_t(t: u32) -> Vec<(String, bool)> {
    let ti = t as i64;
    let mut out = vec![
        (format!("f-identity t={t}"), verify_f_identity(t)),
        (format!("g-identity t={t}"), verify_g_identity(t)),
    ];
    for m in 0..=2 * ti + 1 {
        let boundary = |lo: i64| if m == 0 { q(lo) } else if m == 2 * ti + 1 { q(1) } else { q(0) };
        out.push((format!("z-f value t={t} m={m}"), z_sum_f(ti, m) == boundary(-1)));
        out.push((format!("z-g value t={t} m={m}"), z_sum_g(ti, m) == boundary(1)));
        out.push((format!("z-f recurrence t={t} m={m}"), check_z_recurrence_f(ti, m)));
        out.push((format!("z-g recurrence t={t} m={m}"), check_z_recurrence_g(ti, m)));
    }
    for i in 0..=ti {
        out.push((format!("integer coefficient t={t} i={i}"), check_integer_coefficients(ti, i)));
    }
    out
}

/// Every identity for `1 <= t <= t_max`, plus the substitution check for
/// `r <= 9` at order 30.
pub fn verify_appendix(t_max: u32) -> Result<AppendixReport> {
    let mut results: Vec<(String, bool)> = (1..=t_max).into_par_iter().flat_map(checks_for_t).collect();
    for r in 1..=9 {
        results.push((format!("substitution r={r}"), check_substitution(r, 30)?));
    }
    Ok(AppendixReport {
        t_max,
        checks: results.len(),
        failures: results.into_iter().filter(|(_, ok)| !ok).map(|(l, _)| l).collect(),
    })
}
