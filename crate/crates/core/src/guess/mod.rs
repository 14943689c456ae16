//! Experimental layer: sign normalization, exact interpolation of residue
//! classes, rational fitting in the period parameter, and checks of the
//! closed forms and degree patterns.

mod degrees;
mod statements;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{nullspace, Field, Poly, Rational, RationalFunction};
use crate::cf::{Chain, ChainStep, PeriodReport};
use crate::error::{Error, Result};
use crate::genfunc::{Family, GFKind};

pub use degrees::{
    check_degree_tables, check_g_degrees, expected_class_degrees, table_row, DegreeReport, DegreeRow,
};
pub use statements::{
    baseline_identities, check_cigler_conjectures, check_g_general, check_named_results, cigler_identities,
    evaluate, g_general_identities, named_identities, Identity, IdentityReport, Term,
};
pub use table::HankelTable;

/// Sign that makes a residue class polynomial in `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignPattern {
    None,
    /// `(-1)^(t n)`
    Tn(u32),
    /// `(-1)^(n binom(t,2))`
    NBinomT(u32),
}

impl SignPattern {
    pub fn at(&self, n: i64) -> i8 {
        let e = match *self {
            SignPattern::None => 0,
            SignPattern::Tn(t) => t as i64 * n,
            SignPattern::NBinomT(t) => n * (t as i64 * (t as i64 - 1) / 2),
        };
        if e.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, n: i64, q: &Rational) -> Rational {
        if self.at(n) < 0 {
            -q
        } else {
            q.clone()
        }
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignPattern::None => write!(f, "1"),
            SignPattern::Tn(t) => write!(f, "(-1)^({t}n)"),
            SignPattern::NBinomT(t) => write!(f, "(-1)^(n*binom({t},2))"),
        }
    }
}

impl FromStr for SignPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognized sign pattern {s:?}"));
        let num = |x: &str| -> Result<u32> {
            if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse().map_err(|_| bad())
        };
        if s == "1" {
            return Ok(SignPattern::None);
        }
        if let Some(rest) = s.strip_prefix("(-1)^(n*binom(").and_then(|r| r.strip_suffix(",2))")) {
            return Ok(SignPattern::NBinomT(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("(-1)^(").and_then(|r| r.strip_suffix("n)")) {
            return Ok(SignPattern::Tn(num(rest)?));
        }
        Err(bad())
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Modulus and sign under which the classes `H_{m n + j}` become polynomial.
pub fn class_structure(kind: GFKind) -> (usize, SignPattern) {
    let r = kind.r;
    let t = r / 2;
    match (kind.family, r % 2) {
        (Family::F, 1) => (r as usize, SignPattern::Tn(t)),
        (Family::F, _) => (t.max(1) as usize, SignPattern::NBinomT(t)),
        (Family::G, 1) => (r as usize, SignPattern::None),
        (Family::G, _) => (r.max(1) as usize, SignPattern::Tn(t)),
    }
}

/// Exact interpolant with its sign and the ranges it was fitted and checked on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessResult {
    pub sign: SignPattern,
    /// Polynomial in `n`, lowest degree first.
    pub poly: Poly<Rational>,
    pub fitted_on: (i64, i64),
    pub verified_on: Option<(i64, i64)>,
}

impl GuessResult {
    /// `None` stands for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn eval(&self, n: i64) -> Rational {
        self.sign.apply(n, &self.poly.eval(&Rational::from(n)))
    }

    /// Human-readable form, e.g. `(-1)^(1n) * (1 + n)`.
    pub fn formula(&self) -> String {
        let body = poly_in_n(&self.poly);
        match self.sign {
            SignPattern::None => body,
            s => format!("{s} * ({body})"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("guess serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GuessRepr {
    sign: SignPattern,
    poly: Poly<Rational>,
    /// −1 encodes the zero polynomial.
    degree: i64,
    fitted_on: [i64; 2],
    verified_on: Option<[i64; 2]>,
}

impl Serialize for GuessResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GuessRepr {
            sign: self.sign,
            poly: self.poly.clone(),
            degree: self.degree().map_or(-1, |d| d as i64),
            fitted_on: [self.fitted_on.0, self.fitted_on.1],
            verified_on: self.verified_on.map(|(a, b)| [a, b]),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GuessResult {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = GuessRepr::deserialize(d)?;
        if r.degree != r.poly.degree().map_or(-1, |d| d as i64) {
            return Err(D::Error::custom("degree does not match poly"));
        }
        if r.fitted_on[0] > r.fitted_on[1] {
            return Err(D::Error::custom("empty fitted range"));
        }
        if let Some([a, b]) = r.verified_on {
            if a > b || a <= r.fitted_on[1] {
                return Err(D::Error::custom("verified range must follow the fitted range"));
            }
        }
        Ok(GuessResult {
            sign: r.sign,
            poly: r.poly,
            fitted_on: (r.fitted_on[0], r.fitted_on[1]),
            verified_on: r.verified_on.map(|[a, b]| (a, b)),
        })
    }
}

/// `-5 - 5n`, `1/2 + 3n^2`, `0`.
pub fn poly_in_n(p: &Poly<Rational>) -> String {
    poly_in(p, "n")
}

pub fn poly_in(p: &Poly<Rational>, var: &str) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match i {
            0 => String::new(),
            1 => var.into(),
            _ => format!("{var}^{i}"),
        };
        if i == 0 || mag != Rational::from(1) {
            out.push_str(&mag.to_string());
        }
        out.push_str(&var);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Newton-form interpolation expanded to monomial coefficients.
fn interpolate(points: &[(i64, Rational)]) -> Poly<Rational> {
    let xs: Vec<Rational> = points.iter().map(|(n, _)| Rational::from(*n)).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = Poly::zero();
    for i in (0..dd.len()).rev() {
        let lin = Poly::new(vec![-&xs[i], Rational::from(1)]);
        acc = &(&acc * &lin) + &Poly::constant(dd[i].clone());
    }
    acc
}

/// Interpolates all but the last `verify_count` points and requires the rest
/// to match exactly.
pub fn fit_polynomial(points: &[(i64, Rational)], verify_count: usize) -> Result<GuessResult> {
    fit_signed(points, SignPattern::None, verify_count)
}

/// As [`fit_polynomial`] after removing `sign` from the values.
pub fn fit_signed(points: &[(i64, Rational)], sign: SignPattern, verify_count: usize) -> Result<GuessResult> {
    if points.len() <= verify_count {
        return Err(Error::NoFit);
    }
    let unsigned: Vec<(i64, Rational)> = points.iter().map(|(n, y)| (*n, sign.apply(*n, y))).collect();
    let split = points.len() - verify_count;
    let (fit, check) = unsigned.split_at(split);
    let poly = interpolate(fit);
    for (n, y) in check {
        if poly.eval(&Rational::from(*n)) != *y {
            return Err(Error::VerificationFailed(*n));
        }
    }
    Ok(GuessResult {
        sign,
        poly,
        fitted_on: (fit[0].0, fit[split - 1].0),
        verified_on: (!check.is_empty()).then(|| (check[0].0, check[check.len() - 1].0)),
    })
}

/// Rational function `num/den` in `p` through the first `num_deg + den_deg + 1`
/// points, verified exactly on the rest.
pub fn fit_rational(points: &[(i64, Rational)], num_deg: usize, den_deg: usize) -> Result<RationalFunction<Rational>> {
    let need = num_deg + den_deg + 1;
    if points.len() < need {
        return Err(Error::NoFit);
    }
    let ncols = num_deg + den_deg + 2;
    let rows: Vec<Vec<Rational>> = points[..need]
        .iter()
        .map(|(p, y)| {
            let p = Rational::from(*p);
            let mut row = Vec::with_capacity(ncols);
            let mut pw = Rational::from(1);
            for _ in 0..=num_deg {
                row.push(-&pw);
                pw = &pw * &p;
            }
            let mut pw = Rational::from(1);
            for _ in 0..=den_deg {
                row.push(y * &pw);
                pw = &pw * &p;
            }
            row
        })
        .collect();
    let sol = nullspace(&rows, ncols)
        .into_iter()
        .find(|v| v[num_deg + 1..].iter().any(|c| !c.is_zero()))
        .ok_or(Error::NoFit)?;
    let num = Poly::new(sol[..=num_deg].to_vec());
    let den = Poly::new(sol[num_deg + 1..].to_vec());
    let rf = RationalFunction::new(num, den)?;
    for (p, y) in points {
        if rf.eval(&Rational::from(*p)).as_ref() != Some(y) {
            return Err(Error::VerificationFailed(*p));
        }
    }
    Ok(rf)
}

/// `[H_{m n + j} for n = 0..=count]`, growing the chain as needed.
pub fn class_sequence(modulus: usize, j: usize, count: usize, chain: &mut Chain<Rational>) -> Result<Vec<Rational>> {
    let top = modulus * count + j;
    let seq = chain.hankel_sequence_grow(top)?;
    Ok((0..=count).map(|n| seq[modulus * n + j].clone()).collect())
}

/// Residue class of a precomputed sequence as fitting points.
pub fn class_points(seq: &[Rational], modulus: usize, j: usize, count: usize) -> Vec<(i64, Rational)> {
    (0..count)
        .map(|n| (n as i64, modulus * n + j))
        .take_while(|(_, i)| *i < seq.len())
        .map(|(n, i)| (n, seq[i].clone()))
        .collect()
}

/// Scale factor at `position` within each repeating block, indexed by period
/// number `p = 1, 2, ...`. `None` where that arrow has no scale step.
pub fn scale_factors_by_period(chain: &Chain<Rational>, report: &PeriodReport, position: usize) -> Vec<(i64, Rational)> {
    let mut arrows: Vec<Option<Rational>> = Vec::new();
    let mut pending = None;
    for (step, _) in &chain.steps {
        match step {
            ChainStep::Scale { u0 } => pending = Some(u0.clone()),
            ChainStep::Shift { .. } => arrows.push(pending.take()),
        }
    }
    arrows
        .iter()
        .skip(report.pre_period + position)
        .step_by(report.order)
        .enumerate()
        .filter_map(|(i, u)| u.clone().map(|u| (i as i64 + 1, u)))
        .collect()
}

/// Scale factor at one block position as a rational function of the period
/// number `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaleFit {
    pub position: usize,
    pub factor: RationalFunction<Rational>,
    pub points: usize,
}

impl ScaleFit {
    /// `(num)/(den)` in the period number `p`.
    pub fn formula(&self) -> String {
        let num = poly_in(self.factor.num(), "p");
        if self.factor.is_poly() {
            num
        } else {
            format!("({num})/({})", poly_in(self.factor.den(), "p"))
        }
    }
}

/// Fits every scaled block position of a periodic chain with the smallest
/// total degree that leaves at least `verify` points to spare.
pub fn fit_scale_factors(chain: &Chain<Rational>, report: &PeriodReport, verify: usize) -> Result<Vec<ScaleFit>> {
    let mut out = Vec::new();
    for position in 0..report.order {
        if !report.scale_pattern[position] {
            continue;
        }
        let data = scale_factors_by_period(chain, report, position);
        let fit = (0..data.len()).find_map(|total| {
            (0..=total).find_map(|nd| {
                let dd = total - nd;
                if nd + dd + 1 + verify > data.len() {
                    return None;
                }
                fit_rational(&data, nd, dd).ok()
            })
        });
        let factor = fit.ok_or(Error::NoFit)?;
        out.push(ScaleFit { position, factor, points: data.len() });
    }
    Ok(out)
}

/// Fitted polynomial for one residue class of `kind` under its natural sign.
pub fn guess_class(kind: GFKind, j: usize, count: usize, verify: usize) -> Result<GuessResult> {
    let (m, sign) = class_structure(kind);
    let mut chain = Chain::new(kind.fe()?);
    let values = class_sequence(m, j, count, &mut chain)?;
    let points: Vec<(i64, Rational)> = values.into_iter().enumerate().map(|(n, v)| (n as i64, v)).collect();
    fit_signed(&points, sign, verify)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{build_chain, detect_period};

    fn pts(v: &[i64]) -> Vec<(i64, Rational)> {
        v.iter().enumerate().map(|(i, &y)| (i as i64, Rational::from(y))).collect()
    }

    #[test]
    fn polynomial_fits() {
        let g = fit_polynomial(&pts(&[-5, -10, -15]), 1).unwrap();
        assert_eq!(g.poly, Poly::from_i64s(&[-5, -5]));
        assert_eq!(g.degree(), Some(1));
        assert_eq!(g.verified_on, Some((2, 2)));
        let c = fit_polynomial(&pts(&[7, 7, 7]), 1).unwrap();
        assert_eq!(c.degree(), Some(0));
        assert_eq!(fit_polynomial(&pts(&[1, 2, 4]), 1), Err(Error::VerificationFailed(2)));
        assert_eq!(fit_polynomial(&pts(&[0, 0, 0]), 1).unwrap().degree(), None);
    }

    #[test]
    fn signed_fit() {
        let g = fit_signed(&pts(&[1, -2, 3, -4]), SignPattern::Tn(1), 1).unwrap();
        assert_eq!(g.poly, Poly::from_i64s(&[1, 1]));
        assert_eq!(g.eval(5), Rational::from(-6));
        assert_eq!(g.formula(), "(-1)^(1n) * (1 + n)");
        assert_eq!(poly_in_n(&Poly::from_i64s(&[-5, -5])), "-5 - 5n");
        assert_eq!(poly_in_n(&Poly::new(vec![Rational::from_frac(1, 2), Rational::from(0), Rational::from(-1)])), "1/2 - n^2");
    }

    #[test]
    fn sign_patterns() {
        for s in [SignPattern::None, SignPattern::Tn(3), SignPattern::NBinomT(4)] {
            assert_eq!(s.to_string().parse::<SignPattern>().unwrap(), s);
        }
        assert_eq!(SignPattern::NBinomT(3).at(1), -1);
        assert_eq!(SignPattern::NBinomT(4).at(1), 1);
        assert!("(-1)^(n)".parse::<SignPattern>().is_err());
    }

    #[test]
    fn rational_fits() {
        let data: Vec<(i64, Rational)> = (1..=3).map(|p| (p, Rational::from_frac(-1, 5 * p))).collect();
        let rf = fit_rational(&data, 0, 1).unwrap();
        assert_eq!(rf.num(), &Poly::from_i64s(&[-1]));
        assert_eq!(rf.den(), &Poly::from_i64s(&[0, 5]));
        let data: Vec<(i64, Rational)> = (1..=4).map(|p| (p, Rational::from_frac(p + 1, p))).collect();
        let rf = fit_rational(&data, 1, 1).unwrap();
        assert_eq!((rf.num().clone(), rf.den().clone()), (Poly::from_i64s(&[1, 1]), Poly::from_i64s(&[0, 1])));
        let rf = fit_rational(&pts(&[0, 3, 3, 3, 3])[1..], 1, 1).unwrap();
        assert_eq!(rf, RationalFunction::constant(Rational::from(3)));
        let bad: Vec<(i64, Rational)> = (1..=4).map(|p| (p, Rational::from(p * p))).collect();
        assert_eq!(fit_rational(&bad, 1, 0), Err(Error::VerificationFailed(3)));
    }

    #[test]
    fn json_round_trip() {
        let g = fit_signed(&pts(&[1, -2, 3, -4]), SignPattern::Tn(1), 1).unwrap();
        let s = g.to_json();
        assert_eq!(s, r#"{"sign":"(-1)^(1n)","poly":["1","1"],"degree":1,"fitted_on":[0,2],"verified_on":[3,3]}"#);
        assert_eq!(GuessResult::from_json(&s).unwrap(), g);
        assert!(GuessResult::from_json(&s.replace("\"degree\":1", "\"degree\":2")).is_err());
    }

    #[test]
    fn chain_scale_factors_follow_period_parameter() {
        let chain = build_chain(GFKind::f(5).fe().unwrap(), 40).unwrap();
        let rep = detect_period(&chain).unwrap();
        let data = scale_factors_by_period(&chain, &rep, 0);
        let rf = fit_rational(&data, 0, 1).unwrap();
        assert_eq!(rf, RationalFunction::new(Poly::from_i64s(&[-1]), Poly::from_i64s(&[0, 5])).unwrap());

        let chain = build_chain(GFKind::f(4).fe().unwrap(), 40).unwrap();
        let rep = detect_period(&chain).unwrap();
        let data = scale_factors_by_period(&chain, &rep, 1);
        let rf = fit_rational(&data, 1, 1).unwrap();
        assert_eq!(rf, RationalFunction::new(Poly::from_i64s(&[-1, -1]), Poly::from_i64s(&[0, 1])).unwrap());
        let fits = fit_scale_factors(&chain, &rep, 3).unwrap();
        assert_eq!(fits.iter().find(|f| f.position == 1).unwrap().factor, rf);
    }

    #[test]
    fn class_sequence_examples() {
        let mut c3 = Chain::new(GFKind::f(3).fe().unwrap());
        assert_eq!(class_sequence(3, 2, 3, &mut c3).unwrap(), vec![Rational::from(0); 4]);
        let mut c6 = Chain::new(GFKind::f(6).fe().unwrap());
        let v = class_sequence(3, 0, 2, &mut c6).unwrap();
        assert_eq!(v, vec![Rational::from(1), Rational::from(-4), Rational::from(9)]);
        let mut g6 = Chain::new(GFKind::g(6).fe().unwrap());
        assert_eq!(class_sequence(6, 2, 1, &mut g6).unwrap()[0], Rational::from(-19));
    }
}
