use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Field, Poly, PowerSeries, Rational};
use crate::error::{Error, Result};

/// Quotient of coprime polynomials in canonical form.
///
/// Over the rationals the pair is scaled so that all coefficients are
/// integers with joint content 1 and the denominator's leading coefficient
/// is positive; over a prime field the denominator is monic. Equal
/// functions therefore have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Normalizes the scalar of a pair already known to be coprime.
    fn from_coprime(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let s = F::normalizer(num.coeffs(), den.coeffs());
        RationalFunction { num: num.scale(&s), den: den.scale(&s) }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Self::from_coprime(p, Poly::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn x_pow(k: usize) -> Self {
        Self::from_poly(Poly::x_pow(k))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// x-adic valuation: order of the Laurent expansion at 0.
    pub fn valuation(&self) -> Option<i64> {
        let n = self.num.valuation()? as i64;
        let d = self.den.valuation().expect("nonzero denominator") as i64;
        Some(n - d)
    }

    /// Multiply by `x^k`, `k` of either sign.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let m = k.unsigned_abs() as usize;
        // Cancel against any power of x already present on the other side.
        if k > 0 {
            let c = m.min(self.den.valuation().unwrap_or(0));
            Self::from_coprime(self.num.shift_up(m - c), self.den.shift_down(c))
        } else {
            let c = m.min(self.num.valuation().unwrap_or(0));
            Self::from_coprime(self.num.shift_down(c), self.den.shift_up(m - c))
        }
    }

    /// Value at `x = 0`.
    pub fn at_zero(&self) -> Result<F> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        Ok(self.num.coeff(0).quo(&d0).expect("nonzero"))
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).quo(&self.den.eval(x))
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_coprime(self.num.scale(s), self.den.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// First `n + 1` Taylor coefficients at 0.
    pub fn series(&self, n: usize) -> Result<PowerSeries<F>> {
        let d0_inv = self.den.coeff(0).inverse().ok_or(Error::PoleAtZero)?;
        let den = self.den.coeffs();
        let mut out: Vec<F> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.num.coeff(i);
            for (j, dj) in den.iter().enumerate().skip(1).take(i) {
                acc = acc.minus(&dj.times(&out[i - j]));
            }
            out.push(acc.times(&d0_inv));
        }
        Ok(PowerSeries::new(out))
    }

    /// Order of the Taylor expansion at 0; needs `den(0) != 0`.
    pub fn series_order(&self) -> Result<usize> {
        if self.den.coeff(0).is_zero() {
            return Err(Error::PoleAtZero);
        }
        self.num.valuation().ok_or(Error::ZeroInput)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<RationalFunction<G>> {
        let num = self.num.map(&f)?;
        let den = self.den.map(&f)?;
        if den.is_zero() {
            return None;
        }
        RationalFunction::new(num, den).ok()
    }
}

impl RationalFunction<Rational> {
    pub fn reduce<G: Field>(&self) -> Option<RationalFunction<G>> {
        self.map(G::from_rational)
    }
}

/// Canonical reduced form of `num/den`.
pub fn poly_gcd_reduce<F: Field>(num: Poly<F>, den: Poly<F>) -> Result<RationalFunction<F>> {
    RationalFunction::new(num, den)
}

impl<F: Field> Add for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        let (bl, dl) = if g.degree() == Some(0) {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_exact(&g).expect("divides"), rhs.den.div_exact(&g).expect("divides"))
        };
        let num = &(&self.num * &dl) + &(&rhs.num * &bl);
        RationalFunction::new(num, &self.den * &dl).expect("nonzero")
    }
}

impl<F: Field> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction::from_coprime(-&self.num, self.den.clone())
    }
}

impl<F: Field> Sub for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let cancel = |n: &Poly<F>, d: &Poly<F>| {
            let g = Poly::gcd(n, d);
            if g.degree() == Some(0) {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).expect("divides"), d.div_exact(&g).expect("divides"))
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RationalFunction::from_coprime(&a * &c, &b * &d)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for RationalFunction<F> {
            type Output = RationalFunction<F>;
            fn $m(self, rhs: RationalFunction<F>) -> RationalFunction<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Field> From<Poly<F>> for RationalFunction<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_zero() || self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Field> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.num, self.den)
    }
}

#[derive(Serialize, Deserialize)]
struct RfRepr {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl Serialize for RationalFunction<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RfRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction<Rational> {
    /// Accepts any representation and canonicalizes it.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RfRepr::deserialize(d)?;
        RationalFunction::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}
