//! JSON rendering of the exact types. Integer entries become JSON numbers
//! (arbitrary precision), Laurent entries become sorted term triples
//! `[a, b, c]` meaning `c * s^a t^b`.

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::laurent::LaurentPoly;
use crate::matrix::{IntMatrix, LaurentMatrix, NumMatrix, ResidueMatrix};

fn big_number(v: &BigInt) -> Value {
    let n: Number = v.to_string().parse().expect("integer literal");
    Value::Number(n)
}

pub fn laurent_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .map(|(&(a, b), c)| json!([a, b, big_number(c)]))
        .collect();
    Value::Array(terms)
}

pub fn int_matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(big_number).collect()))
            .collect(),
    )
}

pub fn laurent_matrix_json(m: &LaurentMatrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(laurent_json).collect()))
            .collect(),
    )
}

pub fn residue_matrix_json(m: &ResidueMatrix) -> Value {
    Value::Array(
        (0..m.n())
            .map(|i| Value::Array((0..m.n()).map(|j| json!(m.at(i, j))).collect()))
            .collect(),
    )
}

pub fn num_matrix_json(m: &NumMatrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|&v| json!(v)).collect()))
            .collect(),
    )
}
