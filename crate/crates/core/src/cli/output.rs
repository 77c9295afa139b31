use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use super::{Format, Unit};
use crate::decimal::{format_fixed, parse_decimal};
use crate::error::Result;
use crate::sexagesimal::{format_sexagesimal, parse_sexagesimal, ArcThirds, RationalArc, Rounding};

/// Reads an angle: sexagesimal text if it carries a prime, otherwise a
/// decimal number in `unit`.
pub fn parse_angle(text: &str, unit: Unit) -> Result<RationalArc> {
    if text.contains('\'') {
        return Ok(parse_sexagesimal(text)?.to_rational());
    }
    let v = parse_decimal(text)?;
    Ok(RationalArc::new(match unit {
        Unit::Thirds => v / BigInt::from(3600),
        Unit::Minutes => v,
        Unit::Degrees => v * BigInt::from(60),
    }))
}

pub fn in_unit(x: &RationalArc, unit: Unit) -> BigRational {
    match unit {
        Unit::Thirds => x.in_thirds(),
        Unit::Minutes => x.minutes().clone(),
        Unit::Degrees => x.minutes() / BigInt::from(60),
    }
}

/// The result of an angle-valued command.
pub struct Outcome {
    pub method: &'static str,
    pub inputs: Vec<(&'static str, String)>,
    pub radius: ArcThirds,
    /// Unrounded result.
    pub exact: RationalArc,
    /// Dimensionless value shown in decimal output instead of the arc.
    pub ratio: Option<BigRational>,
    pub trace_text: Vec<String>,
    pub trace_json: Option<Value>,
}

impl Outcome {
    pub fn new(method: &'static str, radius: ArcThirds, exact: RationalArc) -> Self {
        Outcome {
            method,
            inputs: Vec::new(),
            radius,
            exact,
            ratio: None,
            trace_text: Vec::new(),
            trace_json: None,
        }
    }

    pub fn input(mut self, name: &'static str, value: impl Into<String>) -> Self {
        self.inputs.push((name, value.into()));
        self
    }

    pub fn render(&self, format: Format, unit: Unit, precision: u32, trace: bool) -> String {
        let arc = self.exact.round(Rounding::Nearest);
        let mut text = String::new();
        match format {
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("method".into(), json!(self.method));
                let inputs: Map<String, Value> = self
                    .inputs
                    .iter()
                    .map(|(k, v)| ((*k).to_string(), json!(v)))
                    .collect();
                obj.insert("inputs".into(), Value::Object(inputs));
                obj.insert("radius_thirds".into(), json!(self.radius.value()));
                obj.insert("result_thirds".into(), json!(arc.value()));
                obj.insert("result_sexagesimal".into(), json!(format_sexagesimal(arc)));
                if let Some(r) = &self.ratio {
                    obj.insert("result_value".into(), json!(format_fixed(r, precision)));
                }
                if trace {
                    if let Some(t) = &self.trace_json {
                        obj.insert("trace".into(), t.clone());
                    }
                }
                text.push_str(&Value::Object(obj).to_string());
                text.push('\n');
            }
            Format::Sexagesimal | Format::Decimal => {
                if trace {
                    for line in &self.trace_text {
                        text.push_str(line);
                        text.push('\n');
                    }
                }
                let result = match (format, &self.ratio) {
                    (Format::Decimal, Some(r)) => format_fixed(r, precision),
                    (Format::Decimal, None) => format_fixed(&in_unit(&self.exact, unit), precision),
                    _ => format_sexagesimal(arc),
                };
                text.push_str(&result);
                text.push('\n');
            }
        }
        text
    }
}
