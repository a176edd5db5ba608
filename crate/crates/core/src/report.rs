//! Verification reports shared by the identity catalog and the reduction
//! suite.

use crate::elliptic::EllipticError;
use crate::hyperfun::HyperError;
use crate::numerics::{ComplexValue, NumericsError};
use crate::quadrature::QuadratureError;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Below this magnitude of the reference side, agreement is judged on the
/// absolute error.
pub const ABS_ERR_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("`{id}` names a family; pick one of: {cases}")]
    Ambiguous { id: String, cases: String },
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<EvalError>,
    },
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error("{0}")]
    Other(String),
}

impl EvalError {
    pub fn context(self, context: impl Into<String>) -> Self {
        EvalError::Context { context: context.into(), source: Box::new(self) }
    }
}

/// Complex number in the `{re, im}` JSON shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexValue> for JsonComplex {
    fn from(z: ComplexValue) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

impl From<JsonComplex> for ComplexValue {
    fn from(z: JsonComplex) -> Self {
        ComplexValue::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PassWithErratum,
}

impl Status {
    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PassWithErratum => "pass_with_erratum",
        }
    }
}

/// How the printed form of an identity compares with the evaluated one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErratumInfo {
    pub printed: JsonComplex,
    pub printed_rel_err: f64,
    /// `printed / lhs`.
    pub ratio: JsonComplex,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub id: String,
    pub anchor: String,
    pub lhs: JsonComplex,
    pub rhs: JsonComplex,
    pub abs_err: f64,
    pub rel_err: f64,
    pub status: Status,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<ErratumInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Errors between a computed value and a reference value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub abs_err: f64,
    pub rel_err: f64,
}

impl Comparison {
    pub fn new(value: ComplexValue, reference: ComplexValue) -> Self {
        let abs_err = (value - reference).norm();
        let scale = reference.norm();
        let rel_err = if scale > 0.0 { abs_err / scale } else { abs_err };
        Comparison { abs_err, rel_err }
    }

    /// The error the tolerance is applied to.
    pub fn judged(&self, reference: ComplexValue) -> f64 {
        if reference.norm() < ABS_ERR_THRESHOLD {
            self.abs_err
        } else {
            self.rel_err
        }
    }
}

pub fn agrees(value: ComplexValue, reference: ComplexValue, tol: f64) -> bool {
    let cmp = Comparison::new(value, reference);
    cmp.judged(reference) <= tol
}

impl EvalReport {
    /// Report comparing `lhs` against `rhs` at tolerance `tol`.
    pub fn compare(
        id: impl Into<String>,
        anchor: impl Into<String>,
        lhs: ComplexValue,
        rhs: ComplexValue,
        tol: f64,
    ) -> Self {
        let cmp = Comparison::new(lhs, rhs);
        let status = if cmp.judged(rhs) <= tol { Status::Pass } else { Status::Fail };
        EvalReport {
            id: id.into(),
            anchor: anchor.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_err: cmp.abs_err,
            rel_err: cmp.rel_err,
            status,
            elapsed_ms: 0.0,
            erratum: None,
            note: None,
        }
    }

    /// Failed report for an evaluation that did not produce values.
    pub fn failed(id: impl Into<String>, anchor: impl Into<String>, err: &EvalError) -> Self {
        EvalReport {
            id: id.into(),
            anchor: anchor.into(),
            lhs: JsonComplex { re: 0.0, im: 0.0 },
            rhs: JsonComplex { re: 0.0, im: 0.0 },
            abs_err: f64::MAX,
            rel_err: f64::MAX,
            status: Status::Fail,
            elapsed_ms: 0.0,
            erratum: None,
            note: Some(err.to_string()),
        }
    }

    pub fn append_note(&mut self, note: impl AsRef<str>) {
        match &mut self.note {
            Some(n) => {
                n.push_str("; ");
                n.push_str(note.as_ref());
            }
            None => self.note = Some(note.as_ref().to_string()),
        }
    }
}
