//! Timing of the chain evaluator against elimination modulo a prime.

use std::time::Instant;

use serde::Serialize;

use crate::algebra::{FpDefault, Rational, DEFAULT_PRIME};
use crate::cf::Chain;
use crate::error::{Error, Result};
use crate::genfunc::GFKind;
use crate::oracle::{hankel_naive, HankelValue, Mode};

/// How a modular chain value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainField {
    /// Transformations carried out in the prime field.
    Modular,
    /// Exact chain, values reduced afterwards (other primes, or when the
    /// initial equation does not reduce).
    ExactReduced,
}

/// `H_0..=H_n` of `kind` modulo `p` via the chain.
pub fn chain_sequence_mod_p(kind: GFKind, n: usize, p: u64) -> Result<(Vec<u64>, ChainField)> {
    let fe = kind.fe()?;
    if p == DEFAULT_PRIME {
        if let Some(red) = fe.reduce::<FpDefault>() {
            if let Ok(seq) = Chain::new(red).hankel_sequence_grow(n) {
                return Ok((seq.into_iter().map(|v| v.value()).collect(), ChainField::Modular));
            }
        }
    }
    let seq = Chain::new(fe).hankel_sequence_grow(n)?;
    let reduced = reduce_all(&seq, p)?;
    Ok((reduced, ChainField::ExactReduced))
}

/// Exact `H_0..=H_n` via the chain.
pub fn chain_sequence_exact(kind: GFKind, n: usize) -> Result<Vec<Rational>> {
    Chain::new(kind.fe()?).hankel_sequence_grow(n)
}

fn reduce_all(seq: &[Rational], p: u64) -> Result<Vec<u64>> {
    seq.iter()
        .map(|v| v.mod_prime(p).ok_or_else(|| Error::Parse(format!("{v} has no image mod {p}"))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub method: String,
    pub seconds: f64,
    /// `H_n mod p`.
    pub checksum: u64,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "n,method,seconds,checksum";

    pub fn to_csv(&self) -> String {
        format!("{},{},{:.6},{}", self.n, self.method, self.seconds, self.checksum)
    }
}

/// Times the chain (build and walk) and naive elimination for `H_n mod p`.
pub fn bench_single(kind: GFKind, n: usize, p: u64) -> Result<Vec<BenchRow>> {
    let start = Instant::now();
    let (seq, field) = chain_sequence_mod_p(kind, n, p)?;
    let chain_secs = start.elapsed().as_secs_f64();
    let method = match field {
        ChainField::Modular => "chain-modp",
        ChainField::ExactReduced => "chain-exact",
    };
    let start = Instant::now();
    let naive = match hankel_naive(kind, n, Mode::Mod(p)) {
        HankelValue::Mod(v) => v,
        HankelValue::Exact(_) => unreachable!("modular mode"),
    };
    let naive_secs = start.elapsed().as_secs_f64();
    Ok(vec![
        BenchRow { n, method: method.into(), seconds: chain_secs, checksum: seq[n] },
        BenchRow { n, method: "naive-modp".into(), seconds: naive_secs, checksum: naive },
    ])
}

/// Sum of `H_0..=H_n` modulo `p`, a compact fingerprint of a whole sequence.
pub fn sequence_checksum(seq: &[u64], p: u64) -> u64 {
    seq.iter().fold(0, |acc, &v| (acc + v) % p)
}

/// `H_n` reduced from an exact value, for cross-checks.
pub fn exact_mod_p(v: &Rational, p: u64) -> Option<u64> {
    v.mod_prime(p)
}

/// `H_n` in the prime field through the chain, as a field element.
pub fn chain_value_fp(kind: GFKind, n: usize) -> Result<FpDefault> {
    let fe = kind.fe()?.reduce::<FpDefault>().ok_or(Error::NotCanonicalizable("no image mod p"))?;
    let seq = Chain::new(fe).hankel_sequence_grow(n)?;
    Ok(seq[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn modular_chain_agrees_with_exact() {
        let kind = GFKind::f(7);
        let (m, field) = chain_sequence_mod_p(kind, 60, DEFAULT_PRIME).unwrap();
        assert_eq!(field, ChainField::Modular);
        let exact = chain_sequence_exact(kind, 60).unwrap();
        assert_eq!(m, reduce_all(&exact, DEFAULT_PRIME).unwrap());
        assert_eq!(m[2], 274163);
        let (other, field) = chain_sequence_mod_p(kind, 20, 101).unwrap();
        assert_eq!(field, ChainField::ExactReduced);
        assert_eq!(other[2], 101 - 14);
        assert_eq!(chain_value_fp(kind, 2).unwrap(), FpDefault::from_i64(-14));
    }

    #[test]
    fn bench_rows_match() {
        let rows = bench_single(GFKind::f(6), 0, DEFAULT_PRIME).unwrap();
        assert!(rows.iter().all(|r| r.checksum == 1));
        let rows = bench_single(GFKind::f(11), 30, DEFAULT_PRIME).unwrap();
        assert_eq!(rows[0].checksum, rows[1].checksum);
        assert_eq!(rows[0].to_csv().split(',').count(), 4);
    }
}
