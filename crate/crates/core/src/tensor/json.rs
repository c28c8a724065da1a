//! Tensor file format:
//! `{"order": r, "dims": [n_1, …, n_r], "entries": [...], "nonnegative": bool?}`.

use serde::{Deserialize, Serialize};

use super::DenseHypermatrix;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TensorFile {
    order: usize,
    dims: Vec<usize>,
    entries: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nonnegative: Option<bool>,
}

impl TryFrom<TensorFile> for DenseHypermatrix {
    type Error = Error;

    fn try_from(file: TensorFile) -> Result<Self> {
        if file.order != file.dims.len() {
            return Err(Error::InvalidTensor(format!(
                "order {} does not match {} dims",
                file.order,
                file.dims.len()
            )));
        }
        let t = DenseHypermatrix::new(file.dims, file.entries)?;
        match file.nonnegative {
            Some(true) => t.with_nonnegative_flag(),
            _ => Ok(t),
        }
    }
}

impl From<&DenseHypermatrix> for TensorFile {
    fn from(t: &DenseHypermatrix) -> Self {
        TensorFile {
            order: t.order(),
            dims: t.dims.clone(),
            entries: t.entries.clone(),
            nonnegative: t.nonnegative.then_some(true),
        }
    }
}

impl Serialize for DenseHypermatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TensorFile::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DenseHypermatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = TensorFile::deserialize(deserializer)?;
        DenseHypermatrix::try_from(file).map_err(serde::de::Error::custom)
    }
}

impl DenseHypermatrix {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: TensorFile = serde_json::from_str(text)?;
        file.try_into()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&TensorFile::from(self)).expect("tensor serialization cannot fail")
    }
}
