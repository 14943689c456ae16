use crate::algebra::Field;
use crate::error::{Error, Result};

use super::fe::{tau, ChainStep, QuadraticFE};

/// Recorded orbit of an FE under repeated transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<F: Field> {
    pub initial: QuadraticFE<F>,
    /// Each step paired with the FE it produces.
    pub steps: Vec<(ChainStep<F>, QuadraticFE<F>)>,
}

/// Default step budget for resolving indices up to `n`.
pub fn default_max_steps(n: usize) -> usize {
    4 * n + 64
}

/// Applies the transformation up to `max_steps` times.
pub fn build_chain<F: Field>(fe0: QuadraticFE<F>, max_steps: usize) -> Result<Chain<F>> {
    let mut chain = Chain::new(fe0);
    chain.extend(max_steps)?;
    Ok(chain)
}

impl<F: Field> Chain<F> {
    pub fn new(initial: QuadraticFE<F>) -> Self {
        Chain { initial, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last_fe(&self) -> &QuadraticFE<F> {
        self.steps.last().map_or(&self.initial, |(_, fe)| fe)
    }

    /// FE before step `i` (`i = len` gives the last one).
    pub fn fe_at(&self, i: usize) -> &QuadraticFE<F> {
        if i == 0 {
            &self.initial
        } else {
            &self.steps[i - 1].1
        }
    }

    pub fn fes(&self) -> impl Iterator<Item = &QuadraticFE<F>> {
        std::iter::once(&self.initial).chain(self.steps.iter().map(|(_, fe)| fe))
    }

    /// Appends `extra` more steps.
    pub fn extend(&mut self, extra: usize) -> Result<()> {
        for _ in 0..extra {
            let (step, next) = tau(self.last_fe())
                .map_err(|e| Error::ChainStep { step: self.steps.len(), source: Box::new(e) })?;
            self.steps.push((step, next));
        }
        Ok(())
    }

    /// Largest Hankel index the recorded steps resolve.
    pub fn reach(&self) -> usize {
        self.steps
            .iter()
            .map(|(s, _)| match s {
                ChainStep::Shift { d, .. } => d + 1,
                ChainStep::Scale { .. } => 0,
            })
            .sum()
    }

    /// Grows the chain until it resolves index `n`, within `max_steps` total.
    pub fn extend_to_index(&mut self, n: usize, max_steps: usize) -> Result<()> {
        let mut reach = self.reach();
        while reach < n {
            if self.steps.len() >= max_steps {
                return Err(Error::ChainTooShort { n: reach, steps: self.steps.len() });
            }
            self.extend(1)?;
            if let ChainStep::Shift { d, .. } = self.steps.last().expect("just pushed").0 {
                reach += d + 1;
            }
        }
        Ok(())
    }

    /// `H_0..=H_n`, growing the chain as needed with the default budget.
    pub fn hankel_sequence_grow(&mut self, n: usize) -> Result<Vec<F>> {
        self.extend_to_index(n, default_max_steps(n))?;
        hankel_sequence(self, n)
    }
}

/// `H_n` of the initial FE's solution by walking the recorded steps.
pub fn hankel_from_chain<F: Field>(chain: &Chain<F>, n: usize) -> Result<F> {
    let mut m = n;
    let mut c = F::one();
    for (step, _) in &chain.steps {
        match step {
            ChainStep::Scale { u0 } => {
                let f = u0.powi(-(m as i64)).expect("u0 is nonzero");
                c = c.times(&f);
            }
            ChainStep::Shift { d, sign } => {
                if m == 0 {
                    return Ok(c);
                }
                if m <= *d {
                    return Ok(F::zero());
                }
                if *sign < 0 {
                    c = c.negated();
                }
                m -= d + 1;
            }
        }
    }
    if m == 0 {
        Ok(c)
    } else {
        Err(Error::ChainTooShort { n: chain.reach(), steps: chain.len() })
    }
}

/// `H_0..=H_n` in one pass.
///
/// Nonzero values sit exactly at the partial sums `S_j` of `d + 1` over the
/// shifts; between them the zero rule applies. Consecutive nonzero values
/// differ by `sign · Q^-(d+1)` with `Q` the product of every scale factor
/// recorded so far, which keeps all intermediate numbers small.
pub fn hankel_sequence<F: Field>(chain: &Chain<F>, n: usize) -> Result<Vec<F>> {
    if chain.reach() < n {
        return Err(Error::ChainTooShort { n: chain.reach(), steps: chain.len() });
    }
    let mut out = vec![F::zero(); n + 1];
    out[0] = F::one();
    let mut q = F::one();
    let mut h = F::one();
    let mut s = 0usize;
    for (step, _) in &chain.steps {
        if s >= n {
            break;
        }
        match step {
            ChainStep::Scale { u0 } => q = q.times(u0),
            ChainStep::Shift { d, sign } => {
                let f = q.powi(-(*d as i64 + 1)).expect("scale factors are nonzero");
                h = h.times(&f);
                if *sign < 0 {
                    h = h.negated();
                }
                s += d + 1;
                if s <= n {
                    out[s] = h.clone();
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, Rational, RationalFunction};

    fn fe(u: &[i64], k: usize) -> QuadraticFE<Rational> {
        let rf = |c: &[i64]| RationalFunction::from_poly(Poly::from_i64s(c));
        QuadraticFE::new(0, k, rf(u), rf(&[-1])).unwrap()
    }

    fn ints(v: &[Rational]) -> Vec<i64> {
        v.iter().map(|q| q.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn cube_chain_values() {
        let chain = build_chain(fe(&[1, -3], 3), 8).unwrap();
        let direct: Vec<_> = (0..=8).map(|n| hankel_from_chain(&chain, n).unwrap()).collect();
        assert_eq!(ints(&direct), vec![1, 1, 0, -1, -1, 0, 1, 1, 0]);
        assert_eq!(hankel_sequence(&chain, 8).unwrap(), direct);
    }

    #[test]
    fn fourth_power_sequence() {
        let mut chain = Chain::new(fe(&[1, -4, 2], 4));
        let seq = chain.hankel_sequence_grow(5).unwrap();
        assert_eq!(ints(&seq), vec![1, 1, -2, -2, 3, 3]);
    }

    #[test]
    fn too_short() {
        let chain = build_chain(fe(&[1, -3], 3), 2).unwrap();
        assert_eq!(chain.reach(), 3);
        assert!(hankel_from_chain(&chain, 3).is_ok());
        assert_eq!(hankel_from_chain(&chain, 4), Err(Error::ChainTooShort { n: 3, steps: 2 }));
        assert!(hankel_sequence(&chain, 4).is_err());
        assert_eq!(hankel_from_chain(&Chain::new(fe(&[1, -3], 3)), 0), Ok(Rational::from(1)));
    }
}
