//! JSON interchange for partitions, weights, and permutation groups.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{Group, GroupError, Limits};
use crate::metrics::WeightFunction;
use crate::partitions::{BlockPartition, PartitionError};
use crate::symmetry::PermGroup;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid rational '{0}'")]
    BadRational(String),
    #[error("invalid permutation in generators")]
    BadPermutation,
    #[error("{0}")]
    Other(String),
}

/// Partition file: `{"blocks": [[...], ...]}`. Read loosely (any block
/// order), re-canonicalized; written canonically.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionJson {
    pub blocks: Vec<Vec<usize>>,
}

pub fn partition_from_json(n: usize, text: &str) -> Result<BlockPartition, JsonError> {
    let parsed: PartitionJson = serde_json::from_str(text)?;
    Ok(BlockPartition::new(n, parsed.blocks)?)
}

pub fn partition_to_json(p: &BlockPartition) -> String {
    serde_json::to_string(&PartitionJson {
        blocks: p.blocks().to_vec(),
    })
    .expect("serializable")
}

/// Weight file: `{"group": <spec string or inline table>, "values": ["p/q", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightJson {
    pub group: GroupRef,
    pub values: Vec<String>,
}

/// Either a spec string in the CLI syntax or an inline Cayley table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Spec(String),
    Inline(crate::group::CayleyTableFile),
}

impl GroupRef {
    pub fn build(&self, limits: &Limits) -> Result<Group, JsonError> {
        match self {
            GroupRef::Spec(text) => {
                let spec = super::spec_parse::parse_group_spec(text)
                    .map_err(|e| JsonError::Other(e.to_string()))?;
                Ok(spec.build(limits)?)
            }
            GroupRef::Inline(table) => {
                Ok(Group::from_cayley_table(&table.table, table.names.clone())?)
            }
        }
    }
}

pub fn weight_from_json(text: &str) -> Result<(Group, WeightFunction), JsonError> {
    let parsed: WeightJson = serde_json::from_str(text)?;
    let group = parsed.group.build(&Limits::default())?;
    let values: Result<Vec<BigRational>, JsonError> = parsed
        .values
        .iter()
        .map(|s| {
            s.parse::<BigRational>()
                .map_err(|_| JsonError::BadRational(s.clone()))
        })
        .collect();
    let values = values?;
    if values.len() != group.order() {
        return Err(JsonError::Other(format!(
            "{} values for a group of order {}",
            values.len(),
            group.order()
        )));
    }
    Ok((group, WeightFunction::from_values(values)))
}

pub fn weight_to_json(spec: &str, w: &WeightFunction) -> String {
    let json = WeightJson {
        group: GroupRef::Spec(spec.to_string()),
        values: w.values().iter().map(|v| v.to_string()).collect(),
    };
    serde_json::to_string(&json).expect("serializable")
}

/// Permutation-group file: `{"degree": n, "generators": [[...]], "order": "…"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermGroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    pub order: String,
}

pub fn perm_group_to_json(p: &PermGroup) -> String {
    let json = PermGroupJson {
        degree: p.degree(),
        generators: p.generators().to_vec(),
        order: p.order().to_string(),
    };
    serde_json::to_string(&json).expect("serializable")
}

pub fn perm_group_from_json(text: &str) -> Result<PermGroup, JsonError> {
    let parsed: PermGroupJson = serde_json::from_str(text)?;
    for g in &parsed.generators {
        if !crate::symmetry::is_permutation(g, parsed.degree) {
            return Err(JsonError::BadPermutation);
        }
    }
    let group = PermGroup::new(parsed.degree, parsed.generators);
    if group.order().to_string() != parsed.order {
        return Err(JsonError::Other(format!(
            "declared order {} but generators generate order {}",
            parsed.order,
            group.order()
        )));
    }
    Ok(group)
}
