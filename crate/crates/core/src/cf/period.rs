use serde::Serialize;

use crate::algebra::Field;
use crate::error::{Error, Result};

use super::chain::Chain;
use super::fe::{ChainStep, QuadraticFE};

/// Repeating block of a chain, counted in arrows (a shift together with the
/// scale that may precede it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub order: usize,
    /// Arrows before the repetition starts.
    pub pre_period: usize,
    pub d_pattern: Vec<usize>,
    pub sign_pattern: Vec<i8>,
    pub scale_pattern: Vec<bool>,
    pub index_drop_per_period: usize,
    /// The FEs themselves repeat, not only the step shapes.
    pub pure: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Signature {
    scaled: bool,
    d: usize,
    sign: i8,
    degrees: [Option<usize>; 4],
}

fn degrees<F: Field>(fe: &QuadraticFE<F>) -> [Option<usize>; 4] {
    [fe.u.num().degree(), fe.u.den().degree(), fe.v.num().degree(), fe.v.den().degree()]
}

/// Arrow signatures with the FE index reached after each arrow.
fn arrows<F: Field>(chain: &Chain<F>) -> Vec<(Signature, usize)> {
    let mut out = Vec::new();
    let mut scaled = false;
    for (i, (step, fe)) in chain.steps.iter().enumerate() {
        match step {
            ChainStep::Scale { .. } => scaled = true,
            ChainStep::Shift { d, sign } => {
                out.push((Signature { scaled, d: *d, sign: *sign, degrees: degrees(fe) }, i + 1));
                scaled = false;
            }
        }
    }
    out
}

/// Smallest arrow period (after a bounded pre-period) of the step shapes.
/// At least two full periods must be visible; a shorter spurious period over
/// such a window would force a still smaller common period.
pub fn detect_period<F: Field>(chain: &Chain<F>) -> Result<PeriodReport> {
    let arr = arrows(chain);
    let len = arr.len();
    for q in 1..=len / 2 {
        let max_pre = (len - 2 * q).min(len / 2);
        for pre in 0..=max_pre {
            if (pre..len - q).all(|i| arr[i].0 == arr[i + q].0) {
                let block = &arr[pre..pre + q];
                let pure = (pre..len - q).all(|i| chain.fe_at(arr[i].1) == chain.fe_at(arr[i + q].1));
                return Ok(PeriodReport {
                    order: q,
                    pre_period: pre,
                    d_pattern: block.iter().map(|(s, _)| s.d).collect(),
                    sign_pattern: block.iter().map(|(s, _)| s.sign).collect(),
                    scale_pattern: block.iter().map(|(s, _)| s.scaled).collect(),
                    index_drop_per_period: block.iter().map(|(s, _)| s.d + 1).sum(),
                    pure,
                });
            }
        }
    }
    Err(Error::NoPeriodFound(chain.len()))
}
