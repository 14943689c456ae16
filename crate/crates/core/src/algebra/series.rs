use std::fmt;

use super::{Field, Poly, RationalFunction};
use crate::error::{Error, Result};

/// Power series truncated after `x^order`; all stored coefficients are exact.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> PowerSeries<F> {
    /// Series of order `coeffs.len() - 1`. An empty vector is promoted to the
    /// order-0 zero series.
    pub fn new(mut coeffs: Vec<F>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(F::zero());
        }
        PowerSeries { coeffs }
    }

    pub fn from_poly(p: &Poly<F>, order: usize) -> Self {
        Self::new((0..=order).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// Index of the first nonzero coefficient, if any is stored.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new((0..=n).map(|i| self.coeffs[i].plus(&rhs.coeffs[i])).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new((0..=n).map(|i| self.coeffs[i].minus(&rhs.coeffs[i])).collect())
    }

    /// Product, truncated to the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![F::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.times(s)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_poly(&Poly::one(), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse to the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].inverse().ok_or(Error::NonUnitConstantTerm)?;
        let n = self.order();
        let mut out: Vec<F> = Vec::with_capacity(n + 1);
        out.push(c0_inv.clone());
        for i in 1..=n {
            let mut acc = F::zero();
            for j in 1..=i {
                acc = acc.plus(&self.coeffs[j].times(&out[i - j]));
            }
            out.push(acc.negated().times(&c0_inv));
        }
        Ok(Self::new(out))
    }

    /// Substitute this series into a polynomial.
    pub fn compose_into(&self, p: &Poly<F>) -> Self {
        let order = self.order();
        p.coeffs().iter().rev().fold(Self::new(vec![F::zero(); order + 1]), |acc, c| {
            let mut next = acc.mul(self);
            next.coeffs[0] = next.coeffs[0].plus(c);
            next
        })
    }

    pub fn to_poly(&self) -> Poly<F> {
        Poly::new(self.coeffs.clone())
    }
}

/// First `n + 1` Taylor coefficients of `rf` at 0.
pub fn series_expand<F: Field>(rf: &RationalFunction<F>, n: usize) -> Result<PowerSeries<F>> {
    rf.series(n)
}

pub fn series_order<F: Field>(rf: &RationalFunction<F>) -> Result<usize> {
    rf.series_order()
}

pub fn series_reciprocal<F: Field>(s: &PowerSeries<F>) -> Result<PowerSeries<F>> {
    s.reciprocal()
}

impl<F: Field> fmt::Debug for PowerSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(x^{})", self.coeffs, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    type S = PowerSeries<Rational>;

    fn s(cs: &[i64]) -> S {
        S::new(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(s(&[1, -1, 0, 0]).reciprocal().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(
            s(&[2, 0]).reciprocal().unwrap(),
            S::new(vec![Rational::from_frac(1, 2), Rational::from(0)])
        );
        assert_eq!(s(&[0, 1]).reciprocal(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn reciprocal_of_cubic_catalan_relation() {
        // 1/(1 - 3x - x^3) expands like C(x)^3 up to x^3.
        let inv = s(&[1, -3, 0, -1]).reciprocal().unwrap();
        assert_eq!(inv, s(&[1, 3, 9, 28]));
        let catalan = s(&[1, 1, 2, 5]);
        assert_eq!(catalan.pow(3), s(&[1, 3, 9, 28]));
    }

    #[test]
    fn compose_into_polynomial() {
        let x = s(&[0, 1, 0, 0]);
        let p = Poly::<Rational>::from_i64s(&[1, 2, 1]);
        assert_eq!(x.compose_into(&p), s(&[1, 2, 1, 0]));
    }
}
