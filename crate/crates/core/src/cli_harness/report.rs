use serde::{Deserialize, Serialize};

use crate::exactmath::serde_support::rationals;
use crate::exactmath::{Poly, Rational};
use crate::gf_model::GfClass;
use crate::ode_derive::LinearOde;
use crate::rec_engine::{Derivation, PRecurrence};

/// Stable JSON form of a derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub class: GfClass,
    pub ode: Option<OdeJson>,
    pub recurrence: RecurrenceJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shortened: Option<RecurrenceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdeJson {
    pub order: usize,
    pub coeffs: Vec<Poly>,
    pub inhom: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceJson {
    pub span: usize,
    pub coeffs_in_n: Vec<Poly>,
    pub n_min: usize,
    #[serde(with = "rationals")]
    pub initial: Vec<Rational>,
    pub stride: u32,
    pub offset: u32,
}

impl From<&LinearOde> for OdeJson {
    fn from(ode: &LinearOde) -> OdeJson {
        OdeJson { order: ode.order(), coeffs: ode.coeffs.clone(), inhom: ode.inhom.clone() }
    }
}

impl From<&PRecurrence> for RecurrenceJson {
    fn from(rec: &PRecurrence) -> RecurrenceJson {
        RecurrenceJson {
            span: rec.span(),
            coeffs_in_n: rec.coeffs.clone(),
            n_min: rec.n_min,
            initial: rec.initial.clone(),
            stride: rec.stride,
            offset: rec.offset,
        }
    }
}

impl TryFrom<RecurrenceJson> for PRecurrence {
    type Error = String;

    fn try_from(j: RecurrenceJson) -> Result<PRecurrence, String> {
        if j.coeffs_in_n.is_empty() || j.span + 1 != j.coeffs_in_n.len() {
            return Err(format!("span {} does not match {} coefficients", j.span, j.coeffs_in_n.len()));
        }
        if j.coeffs_in_n[0].is_zero() {
            return Err("leading coefficient is zero".into());
        }
        if j.stride == 0 {
            return Err("stride must be positive".into());
        }
        Ok(PRecurrence {
            coeffs: j.coeffs_in_n,
            n_min: j.n_min,
            initial: j.initial,
            stride: j.stride,
            offset: j.offset,
        })
    }
}

impl Report {
    pub fn new(derivation: &Derivation, recurrence: &PRecurrence, shortened: Option<&PRecurrence>) -> Report {
        Report {
            class: derivation.class.clone(),
            ode: derivation.ode.as_ref().map(OdeJson::from),
            recurrence: recurrence.into(),
            shortened: shortened.map(RecurrenceJson::from),
        }
    }
}
