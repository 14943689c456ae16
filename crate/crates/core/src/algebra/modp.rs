use std::fmt;

use super::{Field, Rational};

/// Prime modulus used by the modular determinant and modular chains unless
/// another prime is requested.
pub const DEFAULT_PRIME: u64 = 274177;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime via Fermat; `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Element of the prime field of order `P`. `P` must be a prime below 2^62.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

pub type FpDefault = Fp<DEFAULT_PRIME>;

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        Fp(add_mod(self.0, rhs.0, P))
    }
    fn minus(&self, rhs: &Self) -> Self {
        Fp(sub_mod(self.0, rhs.0, P))
    }
    fn times(&self, rhs: &Self) -> Self {
        Fp(mul_mod(self.0, rhs.0, P))
    }
    fn negated(&self) -> Self {
        Fp(sub_mod(0, self.0, P))
    }
    fn inverse(&self) -> Option<Self> {
        inv_mod(self.0, P).map(Fp)
    }
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        q.mod_prime(P).map(Fp)
    }
    /// Monic denominator.
    fn normalizer(_num: &[Self], den: &[Self]) -> Self {
        den.last().and_then(|c| c.inverse()).unwrap_or(Fp(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn field_ops() {
        let a = F7::new(3);
        assert_eq!(a.inverse().unwrap().times(&a), F7::one());
        assert_eq!(F7::from_i64(-1), F7::new(6));
        assert_eq!(a.powi(-1), a.inverse());
        assert_eq!(F7::zero().inverse(), None);
        assert_eq!(F7::from_rational(&Rational::from_frac(1, 2)), Some(F7::new(4)));
    }

    #[test]
    fn inverse_mod_default_prime() {
        for a in [1u64, 2, 14, 274176] {
            let inv = inv_mod(a, DEFAULT_PRIME).unwrap();
            assert_eq!(mul_mod(a, inv, DEFAULT_PRIME), 1);
        }
    }
}
