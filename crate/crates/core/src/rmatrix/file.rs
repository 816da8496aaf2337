//! Text format for user-supplied operators on V⊗V: a `dim` field and a
//! list of entry records (i, j, k, l, value), 1-based indices, with the
//! value in the scalar expression grammar. The record gives the
//! coefficient of x_k⊗x_l in the image of x_i⊗x_j.

use super::{Braiding, LegOperator, RMatrixError};
use crate::scalars::parse_scalar;
use serde::Deserialize;

#[derive(Deserialize)]
struct RFile {
    dim: usize,
    entries: Vec<REntry>,
}

#[derive(Deserialize)]
struct REntry {
    i: u8,
    j: u8,
    k: u8,
    l: u8,
    value: String,
}

pub fn braiding_from_toml(text: &str) -> Result<Braiding, RMatrixError> {
    let file: RFile = toml::from_str(text).map_err(|e| RMatrixError::File(e.to_string()))?;
    if file.dim == 0 || file.dim > u8::MAX as usize {
        return Err(RMatrixError::File(format!("bad dim {}", file.dim)));
    }
    let mut op = LegOperator::zero(file.dim, 2);
    for (pos, e) in file.entries.iter().enumerate() {
        for idx in [e.i, e.j, e.k, e.l] {
            if idx == 0 || idx as usize > file.dim {
                return Err(RMatrixError::File(format!(
                    "entry {}: index {} out of range 1..{}",
                    pos, idx, file.dim
                )));
            }
        }
        let value = parse_scalar(&e.value)
            .map_err(|err| RMatrixError::File(format!("entry {}: {}", pos, err)))?;
        op.add_to(vec![e.i, e.j], vec![e.k, e.l], value);
    }
    Braiding::from_operator(op)
}
