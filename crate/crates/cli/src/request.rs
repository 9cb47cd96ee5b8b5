//! Exact parsing of analysis requests.
//!
//! Coordinates and matrix entries arrive as JSON strings ("3/2", "0.25")
//! or integer literals. Non-integer JSON number literals are read from
//! their decimal text (serde_json keeps the raw digits), so no value ever
//! round-trips through binary floating point.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde_json::Value;
use tropmech_core::{Point, Rational, SquareMatrix, TypeSpace};

use crate::CliError;

pub struct AnalysisRequest {
    pub m: usize,
    pub type_space: TypeSpace,
    pub mechanism: Option<Vec<usize>>,
    pub matrix: Option<SquareMatrix>,
    pub payment: Option<Point>,
    pub epsilon: Option<Rational>,
    pub viewport: Option<Viewport>,
    pub sector_labels: bool,
    /// Raw coordinate rows; kept because a type space cannot hold m < 2 or
    /// ragged rows, while render wants to diagnose those as malformed.
    pub raw_rows: usize,
}

#[derive(Clone)]
pub struct Viewport {
    pub x_min: Rational,
    pub x_max: Rational,
    pub y_min: Rational,
    pub y_max: Rational,
}

pub fn load(path: &Path) -> Result<AnalysisRequest, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::malformed(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<AnalysisRequest, CliError> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| CliError::malformed(format!("invalid JSON: {e}")))?;
    let obj = root
        .as_object()
        .ok_or_else(|| CliError::malformed("request must be a JSON object"))?;

    let m = obj
        .get("m")
        .ok_or_else(|| CliError::malformed("missing field \"m\""))?
        .as_u64()
        .ok_or_else(|| CliError::malformed("field \"m\" must be a positive integer"))?
        as usize;
    if m < 2 {
        return Err(CliError::malformed("field \"m\" must be at least 2"));
    }

    let rows_value = obj
        .get("type_space")
        .ok_or_else(|| CliError::malformed("missing field \"type_space\""))?;
    let rows = rows_value
        .as_array()
        .ok_or_else(|| CliError::malformed("field \"type_space\" must be an array of rows"))?;
    let mut entries = Vec::with_capacity(rows.len());
    for (index, row) in rows.iter().enumerate() {
        let coords = rational_row(row, &format!("type_space[{index}]"))?;
        if coords.len() != m {
            return Err(CliError::malformed(format!(
                "type_space[{index}] has {} coordinates, expected m = {m}",
                coords.len()
            )));
        }
        entries.push(Point::new(coords));
    }
    let raw_rows = entries.len();
    let type_space = TypeSpace::new(m, entries)
        .map_err(|e| CliError::malformed(format!("invalid type space: {e}")))?;

    let mechanism = match obj.get("mechanism") {
        None => None,
        Some(v) => {
            let list = v
                .as_array()
                .ok_or_else(|| CliError::malformed("field \"mechanism\" must be an array"))?;
            let mut assignment = Vec::with_capacity(list.len());
            for (index, item) in list.iter().enumerate() {
                let outcome = item.as_u64().ok_or_else(|| {
                    CliError::malformed(format!(
                        "mechanism[{index}] must be an outcome in 1..={m}"
                    ))
                })?;
                if outcome == 0 || outcome > m as u64 {
                    return Err(CliError::malformed(format!(
                        "mechanism[{index}] = {outcome} is outside 1..={m}"
                    )));
                }
                assignment.push(outcome as usize - 1);
            }
            Some(assignment)
        }
    };

    let matrix = match obj.get("matrix") {
        None => None,
        Some(v) => {
            let rows = v
                .as_array()
                .ok_or_else(|| CliError::malformed("field \"matrix\" must be an array of rows"))?;
            if rows.len() != m {
                return Err(CliError::malformed(format!(
                    "matrix has {} rows, expected m = {m}",
                    rows.len()
                )));
            }
            let mut parsed = Vec::with_capacity(m);
            for (index, row) in rows.iter().enumerate() {
                let cells = rational_row(row, &format!("matrix[{index}]"))?;
                if cells.len() != m {
                    return Err(CliError::malformed(format!(
                        "matrix[{index}] has {} entries, expected m = {m}",
                        cells.len()
                    )));
                }
                parsed.push(cells);
            }
            let matrix = SquareMatrix::from_rows(parsed);
            if !matrix.has_zero_diagonal() {
                return Err(CliError::malformed("matrix diagonal must be zero"));
            }
            Some(matrix)
        }
    };

    let payment = match obj.get("payment") {
        None => None,
        Some(v) => {
            let coords = rational_row(v, "payment")?;
            if coords.len() != m {
                return Err(CliError::malformed(format!(
                    "payment has {} coordinates, expected m = {m}",
                    coords.len()
                )));
            }
            Some(Point::new(coords))
        }
    };

    let epsilon = match obj.get("epsilon") {
        None => None,
        Some(v) => Some(rational_value(v, "epsilon")?),
    };

    let viewport = match obj.get("viewport") {
        None => None,
        Some(v) => {
            let vp = v
                .as_object()
                .ok_or_else(|| CliError::malformed("field \"viewport\" must be an object"))?;
            let field = |name: &str| -> Result<Rational, CliError> {
                let value = vp.get(name).ok_or_else(|| {
                    CliError::malformed(format!("viewport missing field \"{name}\""))
                })?;
                rational_value(value, &format!("viewport.{name}"))
            };
            Some(Viewport {
                x_min: field("x_min")?,
                x_max: field("x_max")?,
                y_min: field("y_min")?,
                y_max: field("y_max")?,
            })
        }
    };

    let sector_labels = match obj.get("sector_labels") {
        None => false,
        Some(v) => v
            .as_bool()
            .ok_or_else(|| CliError::malformed("field \"sector_labels\" must be a boolean"))?,
    };

    Ok(AnalysisRequest {
        m,
        type_space,
        mechanism,
        matrix,
        payment,
        epsilon,
        viewport,
        sector_labels,
        raw_rows,
    })
}

fn rational_row(value: &Value, context: &str) -> Result<Vec<Rational>, CliError> {
    let items = value
        .as_array()
        .ok_or_else(|| CliError::malformed(format!("{context} must be an array")))?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| rational_value(item, &format!("{context}[{i}]")))
        .collect()
}

pub fn rational_value(value: &Value, context: &str) -> Result<Rational, CliError> {
    let literal = match value {
        Value::String(s) => s.clone(),
        // serde_json's arbitrary_precision keeps the source digits, so the
        // decimal text parses exactly.
        Value::Number(n) => n.to_string(),
        _ => {
            return Err(CliError::malformed(format!(
                "{context} must be a string or number literal"
            )))
        }
    };
    Rational::from_str(&literal)
        .map_err(|e| CliError::malformed(format!("{context}: {e}")))
}
