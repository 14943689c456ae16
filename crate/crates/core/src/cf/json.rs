//! Chain interchange format.
//!
//! ```json
//! {"initial": {"d":0,"k":3,"u":{"num":["1","-3"],"den":["1"]},"v":{...}},
//!  "steps": [{"shift":{"d":0,"sign":1}}, {"scale":"-1/5"}, ...],
//!  "fes": [ ... ]}
//! ```
//! `fes` (the FE after each step) is optional on input. Parsing replays the
//! transformation from `initial` and rejects any step that disagrees.

use serde::{Deserialize, Serialize};

use crate::algebra::{Rational, RationalFunction};
use crate::error::{Error, Result};

use super::chain::Chain;
use super::fe::{shift_sign, tau, ChainStep, QuadraticFE};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FeJson {
    pub d: usize,
    pub k: usize,
    pub u: RationalFunction<Rational>,
    pub v: RationalFunction<Rational>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub enum StepJson {
    #[serde(rename = "scale")]
    Scale(Rational),
    #[serde(rename = "shift")]
    Shift { d: usize, sign: i8 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainJson {
    pub initial: FeJson,
    pub steps: Vec<StepJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fes: Option<Vec<FeJson>>,
}

impl From<&QuadraticFE<Rational>> for FeJson {
    fn from(fe: &QuadraticFE<Rational>) -> Self {
        FeJson { d: fe.d, k: fe.k, u: fe.u.clone(), v: fe.v.clone() }
    }
}

impl TryFrom<FeJson> for QuadraticFE<Rational> {
    type Error = Error;
    fn try_from(j: FeJson) -> Result<Self> {
        QuadraticFE::new(j.d, j.k, j.u, j.v)
    }
}

impl From<&ChainStep<Rational>> for StepJson {
    fn from(s: &ChainStep<Rational>) -> Self {
        match s {
            ChainStep::Scale { u0 } => StepJson::Scale(u0.clone()),
            ChainStep::Shift { d, sign } => StepJson::Shift { d: *d, sign: *sign },
        }
    }
}

impl Chain<Rational> {
    pub fn to_json_value(&self, with_fes: bool) -> ChainJson {
        ChainJson {
            initial: (&self.initial).into(),
            steps: self.steps.iter().map(|(s, _)| s.into()).collect(),
            fes: with_fes.then(|| self.steps.iter().map(|(_, fe)| fe.into()).collect()),
        }
    }

    pub fn to_json(&self, with_fes: bool) -> String {
        serde_json::to_string(&self.to_json_value(with_fes)).expect("chain serializes")
    }

    /// Parses and validates a chain by replaying every step.
    pub fn from_json(s: &str) -> Result<Self> {
        let j: ChainJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(j)
    }

    pub fn from_json_value(j: ChainJson) -> Result<Self> {
        let bad = |msg: String| Error::Parse(msg);
        if let Some(fes) = &j.fes {
            if fes.len() != j.steps.len() {
                return Err(bad(format!("{} steps but {} FEs", j.steps.len(), fes.len())));
            }
        }
        for (i, s) in j.steps.iter().enumerate() {
            match s {
                StepJson::Shift { d, sign } if *sign != shift_sign(*d) => {
                    return Err(bad(format!("step {i}: wrong sign for d = {d}")));
                }
                StepJson::Scale(u0) if u0 == &Rational::from(0) || u0 == &Rational::from(1) => {
                    return Err(bad(format!("step {i}: scale factor must differ from 0 and 1")));
                }
                _ => {}
            }
        }
        let mut chain = Chain::new(j.initial.try_into()?);
        let fes = j.fes.map(|v| v.into_iter().map(QuadraticFE::try_from).collect::<Result<Vec<_>>>()).transpose()?;
        for (i, s) in j.steps.iter().enumerate() {
            let (step, next) = tau(chain.last_fe())?;
            if &StepJson::from(&step) != s {
                return Err(bad(format!("step {i} does not follow from the previous FE")));
            }
            if fes.as_ref().is_some_and(|f| f[i] != next) {
                return Err(bad(format!("FE after step {i} does not match")));
            }
            chain.steps.push((step, next));
        }
        Ok(chain)
    }
}
