use std::fmt;

use crate::algebra::{Field, Poly, Rational, RationalFunction};
use crate::error::{Error, Result};

type Rf<F> = RationalFunction<F>;

/// Canonical quadratic functional equation `F = x^d / (u + x^k v F)`.
///
/// `u` and `v` are regular and nonzero at 0 and `k >= 1`, so the equation
/// has exactly one power-series solution, of order `d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticFE<F: Field> {
    pub d: usize,
    pub k: usize,
    pub u: Rf<F>,
    pub v: Rf<F>,
}

/// One recorded transformation. `Scale` multiplies the solution by `u0`;
/// `Shift` drops `d + 1` Hankel indices at the cost of `sign`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ChainStep<F: Field> {
    Scale { u0: F },
    Shift { d: usize, sign: i8 },
}

impl<F: Field> ChainStep<F> {
    pub fn is_shift(&self) -> bool {
        matches!(self, ChainStep::Shift { .. })
    }
}

/// `(-1)^binom(d+1, 2)`.
pub fn shift_sign(d: usize) -> i8 {
    // binom(d+1, 2) is odd exactly when d ≡ 1, 2 (mod 4).
    if matches!(d % 4, 1 | 2) {
        -1
    } else {
        1
    }
}

impl<F: Field> QuadraticFE<F> {
    /// Checks the canonical-form invariants.
    pub fn new(d: usize, k: usize, u: Rf<F>, v: Rf<F>) -> Result<Self> {
        if k == 0 {
            return Err(Error::NotCanonicalizable("k must be at least 1"));
        }
        if u.valuation() != Some(0) {
            return Err(Error::NotCanonicalizable("u must be regular and nonzero at 0"));
        }
        if v.valuation() != Some(0) {
            return Err(Error::NotCanonicalizable("v must be regular and nonzero at 0"));
        }
        Ok(QuadraticFE { d, k, u, v })
    }

    pub fn u0(&self) -> F {
        self.u.at_zero().expect("canonical u is regular at 0")
    }

    /// Coefficients `(alpha, beta, gamma)` of `alpha F^2 + beta F + gamma = 0`.
    pub fn relation(&self) -> (Rf<F>, Rf<F>, Rf<F>) {
        (self.v.shift(self.k as i64), self.u.clone(), -&Rf::x_pow(self.d))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> Option<G> + Copy) -> Option<QuadraticFE<G>> {
        QuadraticFE::new(self.d, self.k, self.u.map(f)?, self.v.map(f)?).ok()
    }

}

impl QuadraticFE<Rational> {
    /// Coefficientwise image in another field; `None` if the canonical
    /// invariants do not survive the reduction.
    pub fn reduce<G: Field>(&self) -> Option<QuadraticFE<G>> {
        self.map(G::from_rational)
    }
}

/// `u = u_L + x^(d+2) u_H` with `u_L` the degree-`(d+1)` truncation of the
/// Taylor series of `u`.
pub fn decompose_u<F: Field>(fe: &QuadraticFE<F>) -> (Poly<F>, Rf<F>) {
    let series = fe.u.series(fe.d + 1).expect("canonical u is regular at 0");
    let u_l = series.to_poly();
    let u_h = (&fe.u - &Rf::from_poly(u_l.clone())).shift(-(fe.d as i64 + 2));
    (u_l, u_h)
}

/// Brings `alpha T^2 + beta T + gamma = 0` to canonical form for its
/// power-series root `T`.
pub fn canonicalize<F: Field>(alpha: &Rf<F>, beta: &Rf<F>, gamma: &Rf<F>) -> Result<QuadraticFE<F>> {
    let ord_g = gamma.valuation().ok_or(Error::NotCanonicalizable("gamma vanishes"))?;
    let ord_b = beta.valuation().ok_or(Error::NotCanonicalizable("beta vanishes, so u = 0"))?;
    let ord_a = alpha.valuation().ok_or(Error::NotCanonicalizable("alpha vanishes"))?;
    let d = ord_g - ord_b;
    let k = ord_a - ord_b;
    if d < 0 {
        return Err(Error::NotCanonicalizable("root is not a power series"));
    }
    if k < 1 {
        return Err(Error::NotCanonicalizable("k < 1"));
    }
    let scale = (-gamma).recip()?.shift(d);
    let u = beta * &scale;
    let v = (alpha * &scale).shift(-k);
    QuadraticFE::new(d as usize, k as usize, u, v)
}

/// One application of the transformation: a normalizing `Scale` when
/// `u(0) != 1`, otherwise a `Shift` to the reciprocal-type continuation.
pub fn tau<F: Field>(fe: &QuadraticFE<F>) -> Result<(ChainStep<F>, QuadraticFE<F>)> {
    let u0 = fe.u0();
    if !u0.is_one() {
        let inv = u0.inverse().expect("u0 is nonzero");
        let next = QuadraticFE {
            d: fe.d,
            k: fe.k,
            u: fe.u.scale(&inv),
            v: fe.v.scale(&inv.times(&inv)),
        };
        return Ok((ChainStep::Scale { u0 }, next));
    }

    let d = fe.d;
    let (u_l, u_h) = decompose_u(fe);
    let u_l = Rf::from_poly(u_l);
    let low_high = &u_l * &u_h;
    let den = &u_l - &u_h.shift(d as i64 + 2);
    let alpha = -&Rf::x_pow(d + 2);

    let next = if fe.k == 1 {
        // G = N / (D - x^(d+1) G) with G(0) != 0 in general; write G = x T + g0.
        let num = &(-&fe.v) - &low_high.shift(1);
        let g0 = num.at_zero()?.quo(&den.at_zero()?).ok_or(Error::PoleAtZero)?;
        let g0_rf = Rf::constant(g0.clone());
        let beta = &den - &Rf::x_pow(d + 1).scale(&g0.plus(&g0));
        let gamma = &(&(&den * &g0_rf) - &num) - &Rf::x_pow(d + 1).scale(&g0.times(&g0));
        canonicalize(&alpha, &beta, &gamma.shift(-1))?
    } else {
        let num = &(-&fe.v.shift(fe.k as i64 - 2)) - &low_high;
        canonicalize(&alpha, &den, &(-&num))?
    };
    Ok((ChainStep::Shift { d, sign: shift_sign(d) }, next))
}

impl<F: Field> fmt::Display for QuadraticFE<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F = x^{} / (u + x^{} v F), u = {}, v = {}", self.d, self.k, self.u, self.v)
    }
}

impl<F: Field> fmt::Debug for QuadraticFE<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FE(d={}, k={}, u={:?}, v={:?})", self.d, self.k, self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<Rational>;
    type R = Rf<Rational>;

    fn poly(cs: &[i64]) -> R {
        R::from_poly(P::from_i64s(cs))
    }

    fn fe(d: usize, k: usize, u: &[i64], v: &[i64]) -> QuadraticFE<Rational> {
        QuadraticFE::new(d, k, poly(u), poly(v)).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!((0..6).map(shift_sign).collect::<Vec<_>>(), vec![1, -1, -1, 1, 1, -1]);
    }

    #[test]
    fn canonicalize_catalan_and_cube() {
        // x C^2 - C + 1 = 0  ->  C = 1 / (1 - x C)
        let c = canonicalize(&poly(&[0, 1]), &poly(&[-1]), &poly(&[1])).unwrap();
        assert_eq!(c, fe(0, 1, &[1], &[-1]));
        let f3 = canonicalize(&poly(&[0, 0, 0, 1]), &poly(&[-1, 3]), &poly(&[1])).unwrap();
        assert_eq!(f3, fe(0, 3, &[1, -3], &[-1]));
        let bad = canonicalize(&poly(&[0, 0, 1]), &R::zero(), &poly(&[0, 0, 0, 0, 0, -1]));
        assert!(matches!(bad, Err(Error::NotCanonicalizable(_))));
    }

    #[test]
    fn decompose_examples() {
        let (l, h) = decompose_u(&fe(0, 3, &[1, -3], &[-1]));
        assert_eq!(l, P::from_i64s(&[1, -3]));
        assert!(h.is_zero());
        let (l, h) = decompose_u(&fe(1, 2, &[-5, 25, -25, 2], &[-1]));
        assert_eq!(l, P::from_i64s(&[-5, 25, -25]));
        assert_eq!(h, poly(&[2]));
        let (l, h) = decompose_u(&fe(0, 5, &[-1, 0, 0, 7], &[1]));
        assert_eq!(l, P::from_i64s(&[-1]));
        assert_eq!(h, poly(&[0, 7]));
    }

    #[test]
    fn cube_chain_is_periodic_of_order_two() {
        let f0 = fe(0, 3, &[1, -3], &[-1]);
        let (s1, f1) = tau(&f0).unwrap();
        assert_eq!(s1, ChainStep::Shift { d: 0, sign: 1 });
        assert_eq!(f1, fe(1, 2, &[1, -3], &[-1]));
        let (s2, f2) = tau(&f1).unwrap();
        assert_eq!(s2, ChainStep::Shift { d: 1, sign: -1 });
        assert_eq!(f2, f0);
    }

    #[test]
    fn catalan_maps_to_its_square() {
        let (s, f1) = tau(&fe(0, 1, &[1], &[-1])).unwrap();
        assert_eq!(s, ChainStep::Shift { d: 0, sign: 1 });
        let f2 = fe(0, 2, &[1, -2], &[-1]);
        assert_eq!(f1, f2);
        assert_eq!(tau(&f2).unwrap().1, f2);
    }

    #[test]
    fn scale_step() {
        let f = fe(0, 2, &[-5, 1], &[1]);
        let (s, g) = tau(&f).unwrap();
        assert_eq!(s, ChainStep::Scale { u0: Rational::from(-5) });
        assert_eq!(g.u0(), Rational::from(1));
        assert_eq!(g.v, R::constant(Rational::from_frac(1, 25)));
    }
}
