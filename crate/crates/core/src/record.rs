//! Serialized output records shared by the command-line and browser front-ends.
//!
//! Floats are written with 17 significant digits so that records round-trip
//! exactly; exact values are written as a `p/q` coefficient and an `m/2`
//! power of π.

use serde::{Deserialize, Serialize};

use crate::asympt::AsymptoticEstimate;
use crate::error::Error;
use crate::posmom::{Method, Mode, MomentResult, Value};
use crate::specfun::ExactValue;
use crate::states::{HydrogenicState, Space};
use crate::uncertainty::InequalityReport;

pub const SCHEMA_VERSION: &str = "hydromoments/1";

/// `{:.16e}` rendering of an `f64`, or `null` when not finite.
pub mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};
    use serde_json::value::RawValue;

    pub fn format(x: f64) -> String {
        if x.is_finite() {
            format!("{x:.16e}")
        } else {
            String::new()
        }
    }

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if !x.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format(*x)).map_err(serde::ser::Error::custom)?;
        serde::Serialize::serialize(&raw, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(v) => super::serialize(v, s),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
            Option::<f64>::deserialize(d)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactRecord {
    pub coeff: String,
    #[serde(rename = "piPow")]
    pub pi_pow: String,
}

impl From<&ExactValue> for ExactRecord {
    fn from(v: &ExactValue) -> Self {
        ExactRecord { coeff: v.coeff_string(), pi_pow: v.pi_pow_string() }
    }
}

impl ExactRecord {
    pub fn parse(&self) -> Option<ExactValue> {
        ExactValue::parse(&self.coeff, &self.pi_pow)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MomentRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<ExactRecord>,
    #[serde(with = "decimal")]
    pub decimal: f64,
    #[serde(with = "decimal")]
    pub error_bound: f64,
    pub method: Method,
}

impl From<&MomentResult> for MomentRecord {
    fn from(r: &MomentResult) -> Self {
        MomentRecord {
            exact: r.exact_value().map(ExactRecord::from),
            decimal: r.to_f64(),
            error_bound: r.error_estimate,
            method: r.method,
        }
    }
}

impl MomentRecord {
    /// The value, exact when the record carries an exact rendering.
    pub fn value(&self) -> Value {
        match self.exact.as_ref().and_then(ExactRecord::parse) {
            Some(v) => Value::Exact(v),
            None => Value::Float(self.decimal),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Order {
    pub space: Space,
    #[serde(with = "decimal")]
    pub alpha: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub state: Option<HydrogenicState>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<Order>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mode: Option<Mode>,
}

/// Machine-readable status of a failed evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    OutOfDomain,
    Singular,
    NumericalFailure,
    Unavailable,
    InvalidInput,
}

impl Status {
    pub fn of(err: &Error) -> Status {
        match err {
            Error::SingularDenominator(_) => Status::Singular,
            e if e.is_domain_violation() => Status::OutOfDomain,
            Error::CancellationOverflow { .. } | Error::QuadratureFailure(_) | Error::RouteMismatch(_) => {
                Status::NumericalFailure
            }
            Error::ExactUnavailable(_) | Error::UnsupportedArgument(_) | Error::NotCircular { .. } | Error::NotSWave(_) => {
                Status::Unavailable
            }
            _ => Status::InvalidInput,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::OutOfDomain => "out-of-domain",
            Status::Singular => "singular",
            Status::NumericalFailure => "numerical-failure",
            Status::Unavailable => "unavailable",
            Status::InvalidInput => "invalid-input",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RecordResult {
    Moment(MomentRecord),
    Inequality(InequalityReport),
    Asymptotic(AsymptoticEstimate),
    Failure { status: Status, message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OutputRecord {
    pub schema_version: String,
    pub request: Request,
    pub result: RecordResult,
}

impl OutputRecord {
    pub fn new(request: Request, result: RecordResult) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION.to_string(), request, result }
    }

    /// Record for one moment evaluation, successful or not.
    pub fn moment(command: &str, state: &HydrogenicState, space: Space, alpha: f64, mode: Mode, result: &crate::error::Result<MomentResult>) -> Self {
        let request = Request {
            command: command.to_string(),
            state: Some(*state),
            order: Some(Order { space, alpha }),
            mode: Some(mode),
        };
        let result = match result {
            Ok(r) => RecordResult::Moment(MomentRecord::from(r)),
            Err(e) => RecordResult::Failure { status: Status::of(e), message: e.to_string() },
        };
        OutputRecord::new(request, result)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    /// The fixed CSV columns; empty for a non-moment record.
    pub fn csv_row(&self) -> Option<[String; 12]> {
        let state = self.request.state?;
        let order = self.request.order.as_ref()?;
        let mode = self.request.mode.map(mode_str).unwrap_or("");
        let (decimal, coeff, pipow, err, status) = match &self.result {
            RecordResult::Moment(m) => {
                let (c, p) = m.exact.as_ref().map(|e| (e.coeff.clone(), e.pi_pow.clone())).unwrap_or_default();
                (decimal::format(m.decimal), c, p, decimal::format(m.error_bound), Status::Ok)
            }
            RecordResult::Failure { status, .. } => (String::new(), String::new(), String::new(), String::new(), *status),
            _ => return None,
        };
        Some([
            state.dim().to_string(),
            state.n().to_string(),
            state.l().to_string(),
            decimal::format(state.charge()),
            space_str(order.space).to_string(),
            decimal::format(order.alpha),
            mode.to_string(),
            decimal,
            coeff,
            pipow,
            err,
            status.as_str().to_string(),
        ])
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "D",
    "n",
    "l",
    "Z",
    "space",
    "alpha",
    "mode",
    "value_decimal",
    "value_exact_coeff",
    "value_exact_pipow",
    "error_bound",
    "status",
];

pub fn mode_str(mode: Mode) -> &'static str {
    match mode {
        Mode::Auto => "auto",
        Mode::Exact => "exact",
        Mode::Float => "float",
        Mode::Oracle => "oracle",
    }
}

pub fn space_str(space: Space) -> &'static str {
    match space {
        Space::Position => "r",
        Space::Momentum => "p",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momom::p_moment;
    use crate::posmom::r_moment;
    use crate::states::make_state;
    use crate::uncertainty::heisenberg_general;

    #[test]
    fn exact_record_round_trip() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        let r = p_moment(&h, -1.0, Mode::Exact);
        let rec = OutputRecord::moment("compute", &h, Space::Momentum, -1.0, Mode::Exact, &r);
        let json = rec.to_json();
        assert!(json.contains(r#""coeff":"16/3","piPow":"-1""#), "{json}");
        assert!(json.starts_with(r#"{"schemaVersion":"hydromoments/1""#));
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        match back.result {
            RecordResult::Moment(m) => assert_eq!(Some(&m.value()).and_then(|v| v.as_exact().cloned()), r.unwrap().exact_value().cloned()),
            _ => panic!(),
        }
    }

    #[test]
    fn float_record_round_trip() {
        let s = make_state(5, 4, 1, 1.7).unwrap();
        for alpha in [0.37, -2.9, 4.123_456_789] {
            let r = r_moment(&s, alpha, Mode::Float);
            let rec = OutputRecord::moment("compute", &s, Space::Position, alpha, Mode::Float, &r);
            let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
            assert_eq!(back, rec);
            assert_eq!(back.to_json(), rec.to_json());
        }
        let reps = heisenberg_general(&s, 1.5, 2.0).unwrap();
        for rep in reps {
            let rec = OutputRecord::new(
                Request { command: "verify".into(), state: Some(s), order: None, mode: None },
                RecordResult::Inequality(rep),
            );
            let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
            assert_eq!(back, rec);
        }
    }

    #[test]
    fn failure_records_and_csv() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        let r = p_moment(&h, 6.0, Mode::Exact);
        let rec = OutputRecord::moment("table", &h, Space::Momentum, 6.0, Mode::Exact, &r);
        let row = rec.csv_row().unwrap();
        assert_eq!(row[11], "out-of-domain");
        assert_eq!(row[7], "");
        let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);

        let ok = OutputRecord::moment("table", &h, Space::Momentum, 2.0, Mode::Exact, &p_moment(&h, 2.0, Mode::Exact));
        let row = ok.csv_row().unwrap();
        assert_eq!(&row[..7], &["3", "1", "0", "1.0000000000000000e0", "p", "2.0000000000000000e0", "exact"]);
        assert_eq!((row[8].as_str(), row[9].as_str(), row[11].as_str()), ("1", "0", "ok"));
    }
}
