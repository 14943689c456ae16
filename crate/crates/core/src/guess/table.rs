use std::collections::BTreeMap;

use crate::algebra::Rational;
use crate::cf::Chain;
use crate::error::Result;
use crate::genfunc::GFKind;
use crate::oracle::hankel_det;

enum Source {
    Chain(Chain<Rational>),
    /// No quadratic form (G(x,0)); determinants come from elimination.
    Oracle,
}

/// Cache of exact Hankel sequences per generating function.
#[derive(Default)]
pub struct HankelTable {
    entries: BTreeMap<GFKind, (Source, Vec<Rational>)>,
}

impl HankelTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `H_0..=H_n` of `kind` (at least; the slice may be longer).
    pub fn get(&mut self, kind: GFKind, n: usize) -> Result<&[Rational]> {
        if !self.entries.contains_key(&kind) {
            let src = match kind.fe() {
                Ok(fe) => Source::Chain(Chain::new(fe)),
                Err(_) => Source::Oracle,
            };
            self.entries.insert(kind, (src, Vec::new()));
        }
        let (src, seq) = self.entries.get_mut(&kind).expect("inserted");
        if seq.len() <= n {
            *seq = match src {
                Source::Chain(chain) => chain.hankel_sequence_grow(n)?,
                Source::Oracle => {
                    let coeffs = kind.coeffs(2 * n + 1);
                    (0..=n).map(|i| hankel_det(&coeffs, i)).collect()
                }
            };
        }
        Ok(&seq[..])
    }

    pub fn value(&mut self, kind: GFKind, n: usize) -> Result<Rational> {
        Ok(self.get(kind, n)?[n].clone())
    }
}
