use std::fmt;

use super::Rational;

/// Coefficient field for polynomials, rational functions and series.
///
/// Method names avoid the `std::ops` names so that implementors can also
/// provide the operator traits without ambiguity.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn quo(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.times(&inv))
    }
    fn from_i64(n: i64) -> Self;

    /// Image of a rational number, `None` when its denominator is not invertible.
    fn from_rational(q: &Rational) -> Option<Self>;

    /// Integer power; negative exponents need an invertible base.
    fn powi(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.times(&sq);
            }
        }
        Some(acc)
    }

    /// Scalar `s` such that `(s·num, s·den)` is the canonical representative
    /// of the fraction `num/den`. `den` is nonzero.
    fn normalizer(num: &[Self], den: &[Self]) -> Self;
}
