//! JSON wire formats.
//!
//! * rational: `"p/q"` or `"n"` (plain JSON integers are accepted on input)
//! * prime-field element: integer
//! * matrix: array of row arrays
//! * quaternion: `[a, b, c, d]` of rationals
//! * ring descriptor: `{"kind":"matrix","k":2,"field":{"kind":"rational"}}`,
//!   `{"kind":"quaternion"}` or `{"kind":"field","field":{"kind":"prime","p":2}}`
//! * polynomial: `{"ring": <descriptor>, "coefficients": [c0, c1, ...]}`

use serde_json::{json, Value};

use crate::algebra::{
    parse_rational, FieldDescriptor, Matrix, PrimeFieldElement, Quaternion, Rational, RingDescriptor,
    RingElement, Scalar,
};
use crate::construct::ConstructionTrace;
use crate::error::{Error, Result};
use crate::existence::CriterionReport;
use crate::oracle::{CrossCheckReport, PairRecord};
use crate::poly::Polynomial;

fn decode_err(msg: impl Into<String>) -> Error {
    Error::Decode(msg.into())
}

fn rational_string(r: &Rational) -> String {
    if r.denom() == &1.into() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn decode_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(decode_err(format!("expected a rational, got {v}"))),
    }
}

pub fn encode_scalar(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => Value::String(rational_string(r)),
        Scalar::Prime(e) => json!(e.residue()),
    }
}

pub fn decode_scalar(field: FieldDescriptor, v: &Value) -> Result<Scalar> {
    match field {
        FieldDescriptor::Rational => decode_rational(v).map(Scalar::Rational),
        FieldDescriptor::Prime { p } => {
            let n = v
                .as_i64()
                .ok_or_else(|| decode_err(format!("expected an integer residue mod {p}, got {v}")))?;
            Ok(Scalar::Prime(PrimeFieldElement::new(n as i128, p)))
        }
    }
}

pub fn encode_matrix(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(encode_scalar).collect()))
            .collect(),
    )
}

/// Decodes a `k x k` matrix over `field`.
pub fn decode_matrix(k: usize, field: FieldDescriptor, v: &Value) -> Result<Matrix> {
    let rows = v.as_array().ok_or_else(|| decode_err(format!("expected a matrix, got {v}")))?;
    if rows.len() != k {
        return Err(decode_err(format!("expected {k} rows, got {}", rows.len())));
    }
    let mut out = Vec::with_capacity(k);
    for row in rows {
        let row = row.as_array().ok_or_else(|| decode_err(format!("expected a row array, got {row}")))?;
        if row.len() != k {
            return Err(decode_err(format!("expected rows of length {k}, got {}", row.len())));
        }
        out.push(row.iter().map(|e| decode_scalar(field, e)).collect::<Result<Vec<_>>>()?);
    }
    Matrix::from_rows(field, out)
}

pub fn encode_quaternion(q: &Quaternion) -> Value {
    json!([rational_string(&q.a), rational_string(&q.b), rational_string(&q.c), rational_string(&q.d)])
}

pub fn decode_quaternion(v: &Value) -> Result<Quaternion> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b, c, d]) => Ok(Quaternion::new(
            decode_rational(a)?,
            decode_rational(b)?,
            decode_rational(c)?,
            decode_rational(d)?,
        )),
        _ => Err(decode_err(format!("expected a quaternion [a, b, c, d], got {v}"))),
    }
}

pub fn encode_element(e: &RingElement) -> Value {
    match e {
        RingElement::Scalar(s) => encode_scalar(s),
        RingElement::Matrix(m) => encode_matrix(m),
        RingElement::Quaternion(q) => encode_quaternion(q),
    }
}

pub fn decode_element(ring: &RingDescriptor, v: &Value) -> Result<RingElement> {
    match *ring {
        RingDescriptor::Field { field } => decode_scalar(field, v).map(RingElement::Scalar),
        RingDescriptor::Matrix { k, field } => decode_matrix(k, field, v).map(RingElement::Matrix),
        RingDescriptor::Quaternion => decode_quaternion(v).map(RingElement::Quaternion),
    }
}

pub fn encode_descriptor(d: &RingDescriptor) -> Value {
    serde_json::to_value(d).expect("descriptor serializes")
}

/// Parses and validates a ring descriptor.
pub fn decode_descriptor(v: &Value) -> Result<RingDescriptor> {
    let d: RingDescriptor =
        serde_json::from_value(v.clone()).map_err(|e| decode_err(format!("ring descriptor: {e}")))?;
    d.validate()?;
    Ok(d)
}

pub fn encode_polynomial(p: &Polynomial) -> Value {
    json!({
        "ring": encode_descriptor(&p.ring()),
        "coefficients": p.coefficients().iter().map(encode_element).collect::<Vec<_>>(),
    })
}

pub fn decode_polynomial(v: &Value) -> Result<Polynomial> {
    let ring = decode_descriptor(v.get("ring").ok_or_else(|| decode_err("polynomial needs \"ring\""))?)?;
    let coeffs = v
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| decode_err("polynomial needs a \"coefficients\" array"))?;
    let coeffs = coeffs.iter().map(|c| decode_element(&ring, c)).collect::<Result<Vec<_>>>()?;
    Polynomial::new(ring, coeffs)
}

pub fn encode_trace(t: &ConstructionTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "index": s.index,
                "evaluation_value": encode_element(&s.evaluation_value),
                "branch": s.branch,
                "conjugated_root": s.conjugated_root.as_ref().map(encode_element),
            })
        })
        .collect();
    json!({
        "steps": steps,
        "result": t.result.as_ref().map(encode_polynomial),
    })
}

pub fn encode_report(r: &CriterionReport) -> Value {
    json!({
        "n": r.n,
        "exists": r.exists,
        "rank": r.rank_difference_matrix,
        "rank_augmented": r.rank_augmented,
        "coefficients": r.coefficients.as_ref().map(|cs| cs.iter().map(encode_matrix).collect::<Vec<_>>()),
        "a0": r.a0.as_ref().map(encode_matrix),
        "solution_space_dim": r.solution_space_dim,
    })
}

pub fn encode_pair_record(r: &PairRecord) -> Value {
    json!({
        "x1": encode_matrix(&r.x1),
        "x2": encode_matrix(&r.x2),
        "criterion_exists": r.criterion_exists,
        "oracle_exists": r.oracle_exists,
        "agrees": r.agrees(),
        "solution_space_dim": r.solution_space_dim,
        "oracle_count": r.oracle_count,
    })
}

pub fn encode_cross_check_summary(r: &CrossCheckReport) -> Value {
    json!({
        "ring": encode_descriptor(&r.descriptor),
        "n": r.n,
        "pairs": r.pairs(),
        "admitting": r.admitting(),
        "disagreements": r.disagreements().len(),
        "count_law_violations": r.count_law_violations().len(),
    })
}
