use std::sync::Arc;

use serde::Serialize;

use super::HankelTable;
use crate::algebra::{Field, Rational};
use crate::error::{Error, Result};
use crate::genfunc::{Family, GFKind};

/// `coef · H_{a n + b}(kind)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: i64,
    pub kind: GFKind,
    pub a: usize,
    pub b: i64,
}

/// `Σ terms = rhs(n)` for `n >= n_min`.
#[derive(Clone)]
pub struct Identity {
    pub id: String,
    pub terms: Vec<Term>,
    pub rhs: Arc<dyn Fn(i64) -> Rational + Send + Sync>,
    pub n_min: i64,
    /// Reported only when false (ambiguous or as-printed readings).
    pub asserted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub asserted: bool,
    pub checked: usize,
    pub first_failure: Option<i64>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn index_label(a: usize, b: i64) -> String {
    match b {
        0 => format!("{a}n"),
        b if b > 0 => format!("{a}n+{b}"),
        b => format!("{a}n-{}", -b),
    }
}

impl Identity {
    fn single(kind: GFKind, a: usize, b: i64, rhs: impl Fn(i64) -> Rational + Send + Sync + 'static) -> Self {
        Identity {
            id: format!("H_{{{}}}({kind})", index_label(a, b)),
            terms: vec![Term { coef: 1, kind, a, b }],
            rhs: Arc::new(rhs),
            n_min: 0,
            asserted: true,
        }
    }

    fn sum(
        id: String,
        terms: Vec<Term>,
        n_min: i64,
        rhs: impl Fn(i64) -> Rational + Send + Sync + 'static,
    ) -> Self {
        Identity { id, terms, rhs: Arc::new(rhs), n_min, asserted: true }
    }

    fn reported(mut self, suffix: &str) -> Self {
        self.asserted = false;
        self.id.push_str(suffix);
        self
    }

    pub fn max_index(&self, n_max: i64) -> usize {
        self.terms.iter().map(|t| (t.a as i64 * n_max + t.b).max(0) as usize).max().unwrap_or(0)
    }

    pub fn primary_kind(&self) -> GFKind {
        self.terms[0].kind
    }
}

fn q(x: i64) -> Rational {
    Rational::from(x)
}

fn fr(a: i64, b: i64) -> Rational {
    Rational::from_frac(a, b)
}

/// Polynomial in `n`, coefficients highest degree first.
fn hp(cs: &[i64], n: i64) -> Rational {
    cs.iter().fold(q(0), |acc, &c| acc * q(n) + q(c))
}

/// `(-1)^e`.
fn pm(e: i64) -> Rational {
    q(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn pw(base: Rational, e: u32) -> Rational {
    base.powi(e as i64).expect("nonnegative exponent")
}

fn binom2(t: i64) -> i64 {
    t * (t - 1) / 2
}

/// Catalan-type baselines: `H_n = 1` for `F(x,1)`, `F(x,2)`, `G(x,1)` and
/// `H_n = 2^(n-1)` for `G(x,0)`.
pub fn baseline_identities() -> Vec<Identity> {
    let one = |kind| Identity::single(kind, 1, 0, |_| q(1));
    let mut g0 = Identity::single(GFKind::g(0), 1, 0, |n| pw(q(2), (n - 1) as u32));
    g0.n_min = 1;
    vec![one(GFKind::f(1)), one(GFKind::f(2)), one(GFKind::g(1)), g0]
}

/// Closed forms for `F(x,r)`, `3 <= r <= 9`, and `G(x,r)`, `2 <= r <= 8`.
pub fn named_identities() -> Vec<Identity> {
    use Identity as I;
    let f = GFKind::f;
    let g = GFKind::g;
    vec![
        // F(x,3)
        I::single(f(3), 3, 0, |n| pm(n)),
        I::single(f(3), 3, 1, |n| pm(n)),
        I::single(f(3), 3, 2, |_| q(0)),
        // F(x,4)
        I::single(f(4), 2, 0, |n| pm(n) * q(n + 1)),
        I::single(f(4), 2, 1, |n| pm(n) * q(n + 1)),
        // F(x,5)
        I::single(f(5), 5, 0, |_| q(1)),
        I::single(f(5), 5, 1, |_| q(1)),
        I::single(f(5), 5, 2, |n| q(-5) * q(n + 1)),
        I::single(f(5), 5, 3, |_| q(0)),
        I::single(f(5), 5, 4, |n| q(5) * q(n + 1)),
        // F(x,6)
        I::single(f(6), 3, 0, |n| pm(n) * pw(q(n + 1), 2)),
        I::single(f(6), 3, 1, |n| pm(n) * pw(q(n + 1), 2)),
        I::single(f(6), 3, 2, |n| pm(n + 1) * fr(3, 2) * q(n + 2) * q(n + 1) * q(2 * n + 3)),
        // F(x,7)
        I::single(f(7), 7, 0, |n| pm(n)),
        I::single(f(7), 7, 1, |n| pm(n)),
        I::single(f(7), 7, 2, |n| pm(n) * fr(7, 6) * q(n + 1) * hp(&[98, 49, -12], n)),
        I::single(f(7), 7, 3, |n| -pm(n) * q(49) * pw(q(n + 1), 2)),
        I::single(f(7), 7, 4, |_| q(0)),
        I::single(f(7), 7, 5, |n| pm(n) * q(49) * pw(q(n + 1), 2)),
        I::single(f(7), 7, 6, |n| pm(n) * fr(7, 6) * q(n + 1) * hp(&[98, 343, 282], n)),
        // F(x,8)
        I::single(f(8), 4, 0, |n| pw(q(n + 1), 3)),
        I::single(f(8), 4, 1, |n| pw(q(n + 1), 3)),
        I::single(f(8), 4, 2, |n| {
            fr(2, 45) * pw(q(n + 1), 2) * q(n + 2) * q(2 * n + 3) * hp(&[64, 32, -75], n)
        }),
        I::single(f(8), 4, 3, |n| {
            -fr(2, 45) * q(n + 1) * pw(q(n + 2), 2) * q(2 * n + 3) * hp(&[64, 352, 405], n)
        }),
        // F(x,9)
        I::single(f(9), 9, 0, |_| q(1)),
        I::single(f(9), 9, 1, |_| q(1)),
        I::single(f(9), 9, 2, |n| {
            -fr(27, 10) * q(3 * n + 2) * q(18 * n + 1) * q(n + 1) * hp(&[54, 42, 5], n)
        }),
        I::single(f(9), 9, 3, |n| {
            fr(9, 20) * pw(q(n + 1), 2) * hp(&[26244, 104976, 108459, 31266, -1460], n)
        }),
        I::single(f(9), 9, 4, |n| pw(q(9 * (n + 1)), 3)),
        I::single(f(9), 9, 5, |_| q(0)),
        I::single(f(9), 9, 6, |n| -pw(q(9 * (n + 1)), 3)),
        I::single(f(9), 9, 7, |n| {
            fr(9, 20) * pw(q(n + 1), 2) * hp(&[26244, 104976, 108459, -17334, -50060], n)
        }),
        I::single(f(9), 9, 8, |n| {
            fr(27, 10) * q(18 * n + 35) * q(3 * n + 4) * q(n + 1) * hp(&[54, 174, 137], n)
        }),
        // G(x,2)
        I::single(g(2), 2, 0, |n| pm(n)),
        I::single(g(2), 2, 1, |n| pm(n)),
        // G(x,3)
        I::single(g(3), 3, 0, |n| q(2 * n + 1)),
        I::single(g(3), 3, 1, |n| q(2 * n + 1)),
        I::single(g(3), 3, 2, |n| q(-4) * q(n + 1)),
        // G(x,4)
        I::single(g(4), 4, 0, |_| q(1)),
        I::single(g(4), 4, 1, |_| q(1)),
        I::single(g(4), 4, 2, |n| q(-8) * q(n + 1)),
        I::single(g(4), 4, 3, |n| q(8) * q(n + 1)),
        // G(x,5)
        I::single(g(5), 5, 0, |n| pw(q(2 * n + 1), 2)),
        I::single(g(5), 5, 1, |n| pw(q(2 * n + 1), 2)),
        I::single(g(5), 5, 2, |n| -fr(1, 3) * hp(&[50, 89, 39], n) * q(2 * n + 1)),
        I::single(g(5), 5, 3, |n| q(-16) * pw(q(n + 1), 2)),
        I::single(g(5), 5, 4, |n| fr(1, 3) * hp(&[100, 272, 183], n) * q(n + 1)),
        // G(x,6)
        I::single(g(6), 6, 0, |n| pm(n)),
        I::single(g(6), 6, 1, |n| pm(n)),
        I::single(g(6), 6, 2, |n| pm(n) * q(n + 1) * hp(&[144, 72, -19], n)),
        I::single(g(6), 6, 3, |n| pm(n + 1) * q(144) * pw(q(n + 1), 2)),
        I::single(g(6), 6, 4, |n| pm(n) * q(144) * pw(q(n + 1), 2)),
        I::single(g(6), 6, 5, |n| pm(n) * q(n + 1) * hp(&[144, 504, 413], n)),
        // G(x,7)
        I::single(g(7), 7, 0, |n| pw(q(2 * n + 1), 3)),
        I::single(g(7), 7, 1, |n| pw(q(2 * n + 1), 3)),
        I::single(g(7), 7, 2, |n| {
            fr(1, 90) * q(n + 1) * hp(&[9604, 9604, -1323, -2340], n) * pw(q(2 * n + 1), 2)
        }),
        I::single(g(7), 7, 3, |n| {
            -fr(1, 45) * hp(&[19208, 67228, 70854, 23445], n) * pw(q(n + 1), 2) * q(2 * n + 1)
        }),
        I::single(g(7), 7, 4, |n| q(64) * pw(q(n + 1), 3)),
        I::single(g(7), 7, 5, |n| {
            fr(1, 45) * pw(q(n + 1), 2) * hp(&[38416, 153664, 208936, 103344, 9045], n)
        }),
        I::single(g(7), 7, 6, |n| {
            -fr(1, 90) * hp(&[9604, 48020, 75509, 38110], n) * pw(q(2 * n + 3), 2) * q(n + 1)
        }),
        // G(x,8)
        I::single(g(8), 8, 0, |_| q(1)),
        I::single(g(8), 8, 1, |_| q(1)),
        I::single(g(8), 8, 2, |n| {
            -fr(2, 15) * q(n + 1) * hp(&[256, 192, 15], n) * hp(&[256, 192, 17], n)
        }),
        I::single(g(8), 8, 3, |n| {
            fr(16, 45) * hp(&[65536, 262144, 272896, 79104, -3915], n) * pw(q(n + 1), 2)
        }),
        I::single(g(8), 8, 4, |n| q(4096) * pw(q(n + 1), 3)),
        I::single(g(8), 8, 5, |n| q(-4096) * pw(q(n + 1), 3)),
        I::single(g(8), 8, 6, |n| {
            fr(16, 45) * hp(&[65536, 262144, 272896, -36096, -119115], n) * pw(q(n + 1), 2)
        }),
        I::single(g(8), 8, 7, |n| {
            fr(2, 15) * q(n + 1) * hp(&[256, 832, 655], n) * hp(&[256, 832, 657], n)
        }),
    ]
}

/// Cigler's identities for `F(x,r)`, `r >= 2` (the even sum needs `r >= 4`). For odd `r = 2t+1` the final sum is
/// stated ambiguously; both readings are produced, neither asserted.
pub fn cigler_identities(r: u32) -> Vec<Identity> {
    let t = (r / 2) as i64;
    let ru = r as usize;
    let kind = GFKind::f(r);
    let mut out = Vec::new();
    if r < 2 {
        return out;
    }
    if r % 2 == 1 {
        let edge = move |n: i64| pm(t * n);
        out.push(Identity::single(kind, ru, 0, edge));
        out.push(Identity::single(kind, ru, 1, edge));
        out.push(Identity::single(kind, ru, t + 1, |_| q(0)));
        let mid = move |n: i64| pm(t * n + binom2(t)) * pw(q((2 * t + 1) * (n + 1)), (t - 1) as u32);
        out.push(Identity::single(kind, ru, t, mid));
        out.push(Identity::single(kind, ru, t + 2, move |n| -mid(n)));
        let rhs = move |n: i64| pm(t * n + 1) * q((t - 1) * (2 * t + 1));
        let label = |other: GFKind| format!("H_{{{}}}({kind}) + H_{{{}}}({other})", index_label(ru, -1), index_label(ru, 2));
        for (other, suffix) in [(kind, " [same-r reading]"), (GFKind::f(r - 1), " [as printed]")] {
            let terms = vec![Term { coef: 1, kind, a: ru, b: -1 }, Term { coef: 1, kind: other, a: ru, b: 2 }];
            out.push(Identity::sum(label(other), terms, 1, rhs).reported(suffix));
        }
    } else {
        let tu = t as usize;
        let edge = move |n: i64| pm(n * binom2(t)) * pw(q(n + 1), (t - 1) as u32);
        out.push(Identity::single(kind, tu, 0, edge));
        out.push(Identity::single(kind, tu, 1, edge));
        if t < 2 {
            return out;
        }
        let terms = vec![Term { coef: 1, kind, a: ru, b: -1 }, Term { coef: 1, kind, a: ru, b: 2 }];
        let id = format!("H_{{{}}}({kind}) + H_{{{}}}({kind})", index_label(ru, -1), index_label(ru, 2));
        out.push(Identity::sum(id, terms, 1, move |n| {
            q(-t * (2 * t - 3)) * pw(q(2 * n + 1), (t - 1) as u32)
        }));
    }
    out
}

/// General closed forms for `G(x,r)`. For even `r` the second line is given
/// as printed (reported) and with the sign pattern of the small cases
/// (asserted): `H_{2tn+t} = -H_{2tn+t+1} = (-1)^(n binom(2t,2) + binom(t,2)) (4t)^(t-1) (n+1)^(t-1)`.
pub fn g_general_identities(r: u32) -> Vec<Identity> {
    let t = (r / 2) as i64;
    let ru = r as usize;
    let kind = GFKind::g(r);
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    if r % 2 == 1 {
        let edge = move |n: i64| pw(q(2 * n + 1), t as u32);
        out.push(Identity::single(kind, ru, 0, edge));
        out.push(Identity::single(kind, ru, 1, edge));
        out.push(Identity::single(kind, ru, t + 1, move |n| {
            pm(binom2(t + 1)) * pw(q(4), t as u32) * pw(q(n + 1), t as u32)
        }));
    } else {
        let edge = move |n: i64| pm(t * n);
        out.push(Identity::single(kind, ru, 0, edge));
        out.push(Identity::single(kind, ru, 1, edge));
        let mag = move |n: i64| pw(q(4 * t), (t - 1) as u32) * pw(q(n + 1), (t - 1) as u32);
        let printed = move |n: i64| pm(n * binom2(2 * t)) * mag(n);
        out.push(Identity::single(kind, ru, t, printed).reported(" [as printed]"));
        out.push(Identity::single(kind, ru, t + 1, printed).reported(" [as printed]"));
        let fixed = move |n: i64| pm(n * binom2(2 * t) + binom2(t)) * mag(n);
        out.push(Identity::single(kind, ru, t, fixed));
        out.push(Identity::single(kind, ru, t + 1, move |n| -fixed(n)));
    }
    out
}

/// Evaluates identities for `n_min <= n <= n_max`.
pub fn evaluate(ids: &[Identity], table: &mut HankelTable, n_max: i64) -> Result<Vec<IdentityReport>> {
    ids.iter()
        .map(|id| {
            let mut first_failure = None;
            let mut checked = 0;
            for n in id.n_min..=n_max {
                let mut lhs = q(0);
                for t in &id.terms {
                    let idx = t.a as i64 * n + t.b;
                    let h = table.value(t.kind, idx as usize)?;
                    lhs = lhs + q(t.coef) * h;
                }
                checked += 1;
                if lhs != (id.rhs)(n) {
                    first_failure = Some(n);
                    break;
                }
            }
            Ok(IdentityReport { id: id.id.clone(), asserted: id.asserted, checked, first_failure })
        })
        .collect()
}

fn first_mismatch(reports: Vec<IdentityReport>) -> Result<Vec<IdentityReport>> {
    if let Some(r) = reports.iter().find(|r| r.asserted && !r.passed()) {
        return Err(Error::Mismatch { id: r.id.clone(), n: r.first_failure.unwrap_or(0) as usize });
    }
    Ok(reports)
}

/// All closed forms for `kind` (named results, baselines and the general
/// `G` forms), checked for `n <= n_max`.
pub fn check_named_results(kind: GFKind, n_max: i64) -> Result<Vec<IdentityReport>> {
    let mut ids: Vec<Identity> = named_identities().into_iter().chain(baseline_identities()).collect();
    if kind.family == Family::G && kind.r >= 1 {
        ids.extend(g_general_identities(kind.r));
    }
    ids.retain(|i| i.primary_kind() == kind);
    let mut table = HankelTable::new();
    first_mismatch(evaluate(&ids, &mut table, n_max)?)
}

/// Cigler's identities for `F(x,r)` over `1 <= n <= n_max`; failures are
/// reported, not raised.
pub fn check_cigler_conjectures(r: u32, n_max: i64, table: &mut HankelTable) -> Result<Vec<IdentityReport>> {
    let mut ids = cigler_identities(r);
    for id in &mut ids {
        id.n_min = id.n_min.max(1);
    }
    evaluate(&ids, table, n_max)
}

pub fn check_g_general(r: u32, n_max: i64, table: &mut HankelTable) -> Result<Vec<IdentityReport>> {
    evaluate(&g_general_identities(r), table, n_max)
}
