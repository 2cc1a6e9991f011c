use serde_json::Value;

use crate::error::{Error, Result};
use crate::ratmat::{RMatrix, Rational};

/// Reads one matrix entry or coefficient: a JSON string or number in the
/// grammar `INT | INT "/" INT | DECIMAL`.
pub fn parse_rational(value: &Value) -> Result<Rational> {
    match value {
        Value::String(s) => s.parse(),
        // arbitrary_precision keeps the literal's original text
        Value::Number(n) => n.to_string().parse(),
        other => Err(Error::Format(format!(
            "expected a number or fraction string, found {other}"
        ))),
    }
}

pub fn rational_to_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Reads a matrix literal: an array of equally long rows of entries.
pub fn parse_matrix(value: &Value) -> Result<RMatrix> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Format(format!("expected an array of rows, found {value}")))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Format(format!("expected a row array, found {row}")))?
                .iter()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RMatrix::from_rows(rows)
}

pub fn matrix_to_value(m: &RMatrix) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(rational_to_value).collect()))
            .collect(),
    )
}
