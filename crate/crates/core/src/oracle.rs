//! Brute-force Hankel determinants: fraction-free elimination over the
//! integers and Gaussian elimination modulo a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::modp::{inv_mod, mul_mod, sub_mod};
use crate::algebra::{Rational, DEFAULT_PRIME};
use crate::genfunc::GFKind;

/// Determinant of an integer matrix by one-step Bareiss elimination.
pub fn det_bareiss_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
    if sign {
        -det
    } else {
        det
    }
}

/// Exact determinant of a rational matrix; rows are scaled to integers first.
pub fn det_bareiss(m: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &l;
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect();
    Rational::new(det_bareiss_int(rows), scale).expect("nonzero scale")
}

/// Determinant modulo a prime; entries must already be reduced.
pub fn det_mod_p(m: &[Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut det = 1 % p;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] % p != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = sub_mod(0, det, p);
        }
        det = mul_mod(det, a[k][k], p);
        let inv = inv_mod(a[k][k], p).expect("nonzero pivot");
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = mul_mod(a[i][k], inv, p);
            for j in k..n {
                let t = mul_mod(f, a[k][j], p);
                a[i][j] = sub_mod(a[i][j], t, p);
            }
        }
    }
    det
}

pub fn hankel_matrix<T: Clone>(seq: &[T], n: usize) -> Vec<Vec<T>> {
    assert!(n == 0 || seq.len() >= 2 * n - 1, "need 2n-1 sequence terms");
    (0..n).map(|i| seq[i..i + n].to_vec()).collect()
}

/// `H_n` of an explicit coefficient sequence.
pub fn hankel_det(seq: &[Rational], n: usize) -> Rational {
    det_bareiss(&hankel_matrix(seq, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Mod(u64),
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Mod(DEFAULT_PRIME)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum HankelValue {
    Exact(Rational),
    Mod(u64),
}

impl std::fmt::Display for HankelValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HankelValue::Exact(q) => write!(f, "{q}"),
            HankelValue::Mod(r) => write!(f, "{r}"),
        }
    }
}

/// `H_n` from the binomial closed forms of the coefficients.
pub fn hankel_naive(kind: GFKind, n: usize, mode: Mode) -> HankelValue {
    let seq = kind.coeffs((2 * n).saturating_sub(1));
    match mode {
        Mode::Exact => HankelValue::Exact(hankel_det(&seq, n)),
        Mode::Mod(p) => {
            let red: Vec<u64> = seq.iter().map(|q| q.mod_prime(p).expect("integer entries")).collect();
            HankelValue::Mod(det_mod_p(&hankel_matrix(&red, n), p))
        }
    }
}
