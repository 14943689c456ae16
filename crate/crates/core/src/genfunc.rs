//! Coefficients and quadratic functional equations of the Catalan powers
//! `F(x,r) = C(x)^r` and of `G(x,r) = C(x)^r / sqrt(1-4x)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, nullspace, Field, Poly, PowerSeries, Rational, RationalFunction};
use crate::cf::QuadraticFE;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            _ => Err(Error::Parse(format!("unknown family {s:?} (expected F or G)"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F => "F",
            Family::G => "G",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GFKind {
    pub family: Family,
    pub r: u32,
}

impl GFKind {
    pub fn new(family: Family, r: u32) -> Self {
        GFKind { family, r }
    }

    pub fn f(r: u32) -> Self {
        Self::new(Family::F, r)
    }

    pub fn g(r: u32) -> Self {
        Self::new(Family::G, r)
    }

    pub fn coeff(&self, n: usize) -> Rational {
        match self.family {
            Family::F => conv_coeff(n, self.r),
            Family::G => g_coeff(n, self.r),
        }
    }

    pub fn coeffs(&self, len: usize) -> Vec<Rational> {
        (0..len).map(|n| self.coeff(n)).collect()
    }

    pub fn fe(&self) -> Result<QuadraticFE<Rational>> {
        match self.family {
            Family::F => build_fe_f(self.r),
            Family::G => build_fe_g(self.r),
        }
    }
}

impl fmt::Display for GFKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(x,{})", self.family, self.r)
    }
}

fn int(n: BigInt) -> Rational {
    Rational::from(n)
}

pub fn catalan_coeff(n: usize) -> Rational {
    let n = n as i64;
    int(binomial(2 * n, n) / BigInt::from(n + 1))
}

/// Coefficient of `x^n` in `C(x)^r`: `r/(2n+r) · binom(2n+r, n)`.
pub fn conv_coeff(n: usize, r: u32) -> Rational {
    let (n, r) = (n as i64, r as i64);
    if r == 0 {
        return Rational::from(i64::from(n == 0));
    }
    int(binomial(2 * n + r, n) * BigInt::from(r) / BigInt::from(2 * n + r))
}

/// `binom(2n+r, n)`.
pub fn g_coeff(n: usize, r: u32) -> Rational {
    let (n, r) = (n as i64, r as i64);
    int(binomial(2 * n + r, n))
}

fn poly(terms: impl Iterator<Item = Rational>) -> Poly<Rational> {
    Poly::new(terms.collect())
}

fn signed(i: i64, c: Rational) -> Rational {
    if i % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `F(x,r) = 1 / (u + x^r v F)` with `v = -1`.
pub fn build_fe_f(r: u32) -> Result<QuadraticFE<Rational>> {
    let rf = RationalFunction::from_poly;
    let minus_one = rf(Poly::from_i64s(&[-1]));
    if r == 0 {
        return Err(Error::NotCanonicalizable("C(x)^0 = 1 has no quadratic form"));
    }
    if r == 1 {
        return QuadraticFE::new(0, 1, RationalFunction::one(), minus_one);
    }
    let t = (r / 2) as i64;
    let u = if r % 2 == 1 {
        // (2t+1)/(2t-2i+1) · binom(2t-i, i)
        poly((0..=t).map(|i| {
            let c = int(binomial(2 * t - i, i)) * Rational::from_frac(2 * t + 1, 2 * t - 2 * i + 1);
            signed(i, c)
        }))
    } else {
        // 2t/(2t-i) · binom(2t-i, i)
        poly((0..=t).map(|i| {
            let c = int(binomial(2 * t - i, i)) * Rational::from_frac(2 * t, 2 * t - i);
            signed(i, c)
        }))
    };
    QuadraticFE::new(0, r as usize, rf(u), minus_one)
}

/// The polynomial `Q_r` with `G(x,r) = 1 / ((1-4x)(x^r G + Q_r))`.
pub fn g_base_poly(r: u32) -> Poly<Rational> {
    let t = (r / 2) as i64;
    if r % 2 == 1 {
        poly((0..=t).map(|i| signed(i, int(binomial(2 * t - i, i)))))
    } else {
        poly((0..t).map(|i| signed(i, int(binomial(2 * t - i - 1, i)))))
    }
}

/// `G(x,r) = 1 / (u + x^r v G)` with `u = (1-4x) Q_r`, `v = 1-4x`.
pub fn build_fe_g(r: u32) -> Result<QuadraticFE<Rational>> {
    if r == 0 {
        return Err(Error::NotCanonicalizable("G(x,0)^2 is rational; no quadratic form"));
    }
    let lin = Poly::from_i64s(&[1, -4]);
    let u = RationalFunction::from_poly(&lin * &g_base_poly(r));
    QuadraticFE::new(0, r as usize, u, RationalFunction::from_poly(lin))
}

/// Power-series solution of a canonical FE to order `n`, from
/// `F·u + x^k·v·F^2 = x^d` solved coefficient by coefficient.
pub fn series_from_fe<F: Field>(fe: &QuadraticFE<F>, n: usize) -> Result<PowerSeries<F>> {
    let u = fe.u.series(n)?;
    let v = fe.v.series(n)?;
    let u0_inv = u.coeff(0).inverse().ok_or(Error::DivergentIteration)?;
    if fe.k == 0 {
        return Err(Error::DivergentIteration);
    }
    let mut f: Vec<F> = Vec::with_capacity(n + 1);
    let mut sq: Vec<F> = Vec::with_capacity(n + 1);
    for e in 0..=n {
        let mut acc = if e == fe.d { F::one() } else { F::zero() };
        for i in 0..e {
            acc = acc.minus(&f[i].times(&u.coeff(e - i)));
        }
        if e >= fe.k {
            for j in 0..=e - fe.k {
                acc = acc.minus(&sq[j].times(&v.coeff(e - fe.k - j)));
            }
        }
        f.push(acc.times(&u0_inv));
        let mut s = F::zero();
        for i in 0..=e {
            s = s.plus(&f[i].times(&f[e - i]));
        }
        sq.push(s);
    }
    Ok(PowerSeries::new(f))
}

/// Polynomials `(a, b, c)` of minimal total degree within the bounds with
/// `a S^2 + b S + c ≡ 0` to the series' order. The first nonzero coefficient
/// of `c` (else `b`, else `a`) is normalized to 1.
pub fn derive_fe(
    series: &PowerSeries<Rational>,
    deg_a: usize,
    deg_b: usize,
    deg_c: usize,
) -> Result<(Poly<Rational>, Poly<Rational>, Poly<Rational>)> {
    let order = series.order();
    let s = series.coeffs();
    let sq = series.mul(series);
    let sq = sq.coeffs();
    for total in 0..=deg_a + deg_b + deg_c {
        for da in 0..=deg_a.min(total) {
            for db in 0..=deg_b.min(total - da) {
                let dc = total - da - db;
                if dc > deg_c {
                    continue;
                }
                let ncols = da + db + dc + 3;
                let rows: Vec<Vec<Rational>> = (0..=order)
                    .map(|e| {
                        let mut row = vec![Rational::from(0); ncols];
                        for i in 0..=da.min(e) {
                            row[i] = sq[e - i].clone();
                        }
                        for i in 0..=db.min(e) {
                            row[da + 1 + i] = s[e - i].clone();
                        }
                        if e <= dc {
                            row[da + db + 2 + e] = Rational::from(1);
                        }
                        row
                    })
                    .collect();
                let Some(v) = nullspace(&rows, ncols).into_iter().next() else {
                    continue;
                };
                let a = Poly::new(v[..=da].to_vec());
                let b = Poly::new(v[da + 1..da + db + 2].to_vec());
                let c = Poly::new(v[da + db + 2..].to_vec());
                let lead = [&c, &b, &a]
                    .iter()
                    .find_map(|p| p.valuation().map(|i| p.coeff(i)))
                    .expect("nonzero nullspace vector");
                let inv = lead.inverse().expect("nonzero");
                return Ok((a.scale(&inv), b.scale(&inv), c.scale(&inv)));
            }
        }
    }
    Err(Error::NoRelationFound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries<Rational>) -> Vec<i64> {
        s.coeffs().iter().map(|q| q.to_string().parse().unwrap()).collect()
    }

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(cs)
    }

    #[test]
    fn coefficients() {
        assert_eq!(catalan_coeff(0), Rational::from(1));
        assert_eq!(catalan_coeff(3), Rational::from(5));
        assert_eq!(catalan_coeff(5), Rational::from(42));
        assert_eq!(conv_coeff(0, 9), Rational::from(1));
        assert_eq!(conv_coeff(1, 3), Rational::from(3));
        assert_eq!(conv_coeff(2, 7), Rational::from(35));
        assert_eq!(g_coeff(0, 4), Rational::from(1));
        assert_eq!(g_coeff(1, 1), Rational::from(3));
        assert_eq!(g_coeff(2, 3), Rational::from(21));
    }

    #[test]
    fn builder_examples() {
        let f3 = build_fe_f(3).unwrap();
        assert_eq!((f3.d, f3.k), (0, 3));
        assert_eq!(f3.u.num(), &p(&[1, -3]));
        assert_eq!(f3.v.num(), &p(&[-1]));
        assert_eq!(build_fe_f(5).unwrap().u.num(), &p(&[1, -5, 5]));
        assert_eq!(build_fe_f(4).unwrap().u.num(), &p(&[1, -4, 2]));
        let g3 = build_fe_g(3).unwrap();
        assert_eq!(g3.u.num(), &(&p(&[1, -4]) * &p(&[1, -1])));
        assert_eq!(g3.v.num(), &p(&[1, -4]));
        assert_eq!(build_fe_g(2).unwrap().u.num(), &p(&[1, -4]));
        assert_eq!(build_fe_g(6).unwrap().u.num(), &(&p(&[1, -4]) * &p(&[1, -4, 3])));
        assert!(build_fe_g(0).is_err());
    }

    #[test]
    fn series_examples() {
        assert_eq!(ints(&series_from_fe(&build_fe_f(3).unwrap(), 3).unwrap()), vec![1, 3, 9, 28]);
        assert_eq!(ints(&series_from_fe(&build_fe_g(2).unwrap(), 3).unwrap()), vec![1, 4, 15, 56]);
        assert_eq!(ints(&series_from_fe(&build_fe_g(4).unwrap(), 3).unwrap()), vec![1, 6, 28, 120]);
        assert_eq!(ints(&series_from_fe(&build_fe_f(1).unwrap(), 4).unwrap()), vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn derive_examples() {
        let c = series_from_fe(&build_fe_f(1).unwrap(), 12).unwrap();
        assert_eq!(derive_fe(&c, 1, 0, 0).unwrap(), (p(&[0, 1]), p(&[-1]), p(&[1])));
        assert_eq!(derive_fe(&c, 0, 0, 0), Err(Error::NoRelationFound));
        let f3 = series_from_fe(&build_fe_f(3).unwrap(), 20).unwrap();
        assert_eq!(derive_fe(&f3, 3, 2, 0).unwrap(), (p(&[0, 0, 0, 1]), p(&[-1, 3]), p(&[1])));
    }
}
