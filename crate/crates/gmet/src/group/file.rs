//! Cayley-table JSON files: `{"order": n, "names": [...], "table": [[...]]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Group, GroupError};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyTableFile {
    pub order: usize,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

pub fn load_cayley_table(path: &Path) -> Result<Group, GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::File(format!("{}: {e}", path.display())))?;
    group_from_json(&text)
}

pub fn group_from_json(text: &str) -> Result<Group, GroupError> {
    let parsed: CayleyTableFile =
        serde_json::from_str(text).map_err(|e| GroupError::File(e.to_string()))?;
    if parsed.table.len() != parsed.order {
        return Err(GroupError::File(format!(
            "declared order {} but table has {} rows",
            parsed.order,
            parsed.table.len()
        )));
    }
    Group::from_cayley_table(&parsed.table, parsed.names)
}

pub fn group_to_json(g: &Group) -> String {
    let n = g.order();
    let file = CayleyTableFile {
        order: n,
        names: g.names().to_vec(),
        table: (0..n)
            .map(|i| (0..n).map(|j| g.mul(i, j)).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Group::dihedral(4).unwrap();
        let text = group_to_json(&g);
        let back = group_from_json(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn rejects_garbage() {
        assert!(group_from_json("{}").is_err());
        assert!(
            group_from_json("{\"order\":2,\"names\":[\"e\",\"x\"],\"table\":[[0,1]]}").is_err()
        );
    }
}
