//! JSON encodings: complex numbers are `[re, im]` pairs (a bare number is
//! read as a real), matrices are row-major arrays of rows.

use serde::{Deserialize, Serialize};

use crate::helson::HelsonImage;
use crate::linalg::{CMat, CVec, C64};

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum ComplexJson {
    Pair([f64; 2]),
    Real(f64),
}

impl From<ComplexJson> for C64 {
    fn from(z: ComplexJson) -> Self {
        match z {
            ComplexJson::Pair([re, im]) => C64::new(re, im),
            ComplexJson::Real(re) => C64::new(re, 0.0),
        }
    }
}

/// Either nested rows or one flat row-major list of a square matrix.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MatrixJson {
    Rows(Vec<Vec<ComplexJson>>),
    Flat(Vec<ComplexJson>),
}

pub fn encode_complex(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn encode_vector(v: &CVec) -> Vec<[f64; 2]> {
    v.iter().map(|z| encode_complex(*z)).collect()
}

pub fn encode_matrix(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| encode_complex(m[(i, j)])).collect())
        .collect()
}

pub fn decode_vector(v: &[ComplexJson]) -> CVec {
    CVec::from_iterator(v.len(), v.iter().map(|z| C64::from(*z)))
}

pub fn decode_matrix(m: &MatrixJson) -> Result<CMat, String> {
    match m {
        MatrixJson::Rows(rows) => {
            let r = rows.len();
            let c = rows.first().map_or(0, Vec::len);
            if rows.iter().any(|row| row.len() != c) {
                return Err("matrix rows have different lengths".into());
            }
            Ok(CMat::from_fn(r, c, |i, j| C64::from(rows[i][j])))
        }
        MatrixJson::Flat(entries) => {
            let d = (entries.len() as f64).sqrt().round() as usize;
            if d * d != entries.len() {
                return Err(format!("flat matrix of length {} is not square", entries.len()));
            }
            Ok(CMat::from_fn(d, d, |i, j| C64::from(entries[i * d + j])))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberJson {
    pub label: String,
    pub weight: f64,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HelsonImageJson {
    pub fibers: Vec<FiberJson>,
}

pub fn encode_helson_image(image: &HelsonImage) -> HelsonImageJson {
    HelsonImageJson {
        fibers: image
            .fibers
            .iter()
            .map(|f| FiberJson {
                label: f.label.clone(),
                weight: f.weight,
                matrix: encode_matrix(f.value.matrix()),
            })
            .collect(),
    }
}
