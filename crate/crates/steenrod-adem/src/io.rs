//! JSON encodings of models, simplices, chains, cochains and operad elements.
//!
//! Simplices of `Δ^N` are integer arrays, simplices of `EG` and `BG` are
//! arrays of element names, and product simplices are arrays of component
//! encodings. Degenerate simplices are dropped on input.

use crate::error::{Error, Result};
use crate::operads::Surjection;
use crate::perm::Group;
use crate::simplicial::{Chain, Cochain, Simplex, SpaceModel};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelSpec {
    Standard(usize),
    EGroup {
        group: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        truncation: Option<usize>,
    },
    BGroup {
        group: String,
        truncation: usize,
    },
    Product(Vec<ModelSpec>),
}

impl ModelSpec {
    pub fn to_model(&self) -> Result<SpaceModel> {
        Ok(match self {
            ModelSpec::Standard(dim) => SpaceModel::Standard { dim: *dim },
            ModelSpec::EGroup { group, truncation } => SpaceModel::EGroup {
                group: Group::by_name(group)?,
                truncation: truncation.unwrap_or(usize::MAX),
            },
            ModelSpec::BGroup { group, truncation } => SpaceModel::BGroup {
                group: Group::by_name(group)?,
                truncation: *truncation,
            },
            ModelSpec::Product(fs) => {
                SpaceModel::Product(fs.iter().map(|f| f.to_model()).collect::<Result<_>>()?)
            }
        })
    }

    pub fn from_model(m: &SpaceModel) -> Self {
        match m {
            SpaceModel::Standard { dim } => ModelSpec::Standard(*dim),
            SpaceModel::EGroup { group, truncation } => ModelSpec::EGroup {
                group: group.name().to_string(),
                truncation: (*truncation != usize::MAX).then_some(*truncation),
            },
            SpaceModel::BGroup { group, truncation } => ModelSpec::BGroup {
                group: group.name().to_string(),
                truncation: *truncation,
            },
            SpaceModel::Product(fs) => {
                ModelSpec::Product(fs.iter().map(ModelSpec::from_model).collect())
            }
        }
    }
}

pub fn encode_simplex(model: &SpaceModel, s: &Simplex) -> Value {
    match (model, s) {
        (SpaceModel::Standard { .. }, Simplex::Seq(v)) => Value::from(v.clone()),
        (SpaceModel::EGroup { group, .. } | SpaceModel::BGroup { group, .. }, Simplex::Seq(v)) => {
            Value::from(
                v.iter()
                    .map(|&g| group.element_name(g).to_string())
                    .collect::<Vec<_>>(),
            )
        }
        (SpaceModel::Product(fs), Simplex::Prod(c)) => Value::from(
            fs.iter()
                .zip(c)
                .map(|(f, x)| encode_simplex(f, x))
                .collect::<Vec<_>>(),
        ),
        _ => Value::Null,
    }
}

pub fn decode_simplex(model: &SpaceModel, v: &Value) -> Result<Simplex> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("simplex must be an array, got {v}")))?;
    let s = match model {
        SpaceModel::Standard { .. } => Simplex::Seq(
            arr.iter()
                .map(|x| {
                    x.as_u64()
                        .and_then(|k| u8::try_from(k).ok())
                        .ok_or_else(|| Error::Parse(format!("vertex {x} is not a small integer")))
                })
                .collect::<Result<_>>()?,
        ),
        SpaceModel::EGroup { group, .. } | SpaceModel::BGroup { group, .. } => Simplex::Seq(
            arr.iter()
                .map(|x| match x {
                    Value::String(name) => group.element_by_name(name),
                    _ => Err(Error::Parse(format!("group element {x} must be a name"))),
                })
                .collect::<Result<_>>()?,
        ),
        SpaceModel::Product(fs) => {
            if arr.len() != fs.len() {
                return Err(Error::Parse(format!(
                    "product simplex needs {} components",
                    fs.len()
                )));
            }
            Simplex::Prod(
                fs.iter()
                    .zip(arr)
                    .map(|(f, x)| decode_simplex(f, x))
                    .collect::<Result<_>>()?,
            )
        }
    };
    model.validate(&s)?;
    Ok(s)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainJson {
    pub model: ModelSpec,
    pub terms: Vec<Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainJson {
    pub model: ModelSpec,
    pub dim: usize,
    pub support: Vec<Value>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_chain(text: &str) -> Result<Chain> {
    let j: ChainJson = parse_json(text)?;
    let model = j.model.to_model()?;
    let simplices = j
        .terms
        .iter()
        .map(|v| decode_simplex(&model, v))
        .collect::<Result<Vec<_>>>()?;
    let mut c = Chain::zero(model.clone());
    for s in simplices {
        if !model.is_degenerate(&s) {
            c.terms.toggle(s);
        }
    }
    Ok(c)
}

pub fn chain_json(c: &Chain) -> ChainJson {
    ChainJson {
        model: ModelSpec::from_model(&c.model),
        terms: c
            .terms
            .iter()
            .map(|s| encode_simplex(&c.model, s))
            .collect(),
    }
}

pub fn read_cochain(text: &str) -> Result<Cochain> {
    let j: CochainJson = parse_json(text)?;
    let model = j.model.to_model()?;
    let support = j
        .support
        .iter()
        .map(|v| decode_simplex(&model, v))
        .collect::<Result<Vec<_>>>()?;
    Cochain::new(model, j.dim, support)
}

pub fn cochain_json(c: &Cochain) -> CochainJson {
    CochainJson {
        model: ModelSpec::from_model(&c.model),
        dim: c.dim,
        support: c
            .support
            .iter()
            .map(|s| encode_simplex(&c.model, s))
            .collect(),
    }
}

/// A Barratt–Eccles generator, or a sum of them, as arrays of permutation
/// arrays. Returns the arity and the generators.
pub fn read_be(text: &str) -> Result<(usize, Vec<Vec<Vec<u8>>>)> {
    let v: Value = parse_json(text)?;
    let depth = |v: &Value| {
        let mut d = 0;
        let mut cur = v;
        while let Some(first) = cur.as_array().and_then(|a| a.first()) {
            d += 1;
            cur = first;
        }
        d
    };
    let gens: Vec<Vec<Vec<u8>>> = match depth(&v) {
        2 => vec![serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?],
        3 => serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?,
        _ => {
            return Err(Error::Parse(
                "expected an array of permutation arrays, or an array of those".into(),
            ))
        }
    };
    let arity = gens.first().and_then(|g| g.first()).map_or(0, |p| p.len());
    if gens.iter().flatten().any(|p| p.len() != arity) {
        return Err(Error::Parse("permutations of different degrees".into()));
    }
    Ok((arity, gens))
}

pub fn surjection_json(s: &Surjection) -> Value {
    Value::from(s.values().to_vec())
}
