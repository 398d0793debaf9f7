//! JSON documents: braided sets, cycle sets, shelves, modules and 2-cochains.
//! Tables are row-major and 0-indexed.

use crate::extensions::Cochain2;
use crate::homology::FiniteAbelianGroup;
use crate::structures::{BraidedSet, CycleSet, Shelf, Table};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Raw {
    BraidedSet { size: usize, left: Table, right: Table },
    CycleSet { size: usize, table: Table },
    Shelf { size: usize, table: Table },
    RightModule { carrier: usize, action: Table },
    LeftModule { carrier: usize, action: Table },
    Cochain2 { base: usize, moduli: Vec<u64>, values: Table },
}

/// A parsed and validated document. Module tables are validated only against
/// a braided set, so they stay raw here: right actions are carrier × n
/// (m·a = action[m][a]), left actions n × carrier (a·q = action[a][q]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Braided(BraidedSet),
    Cycle(CycleSet),
    Shelf(Shelf),
    RightModule { carrier: usize, action: Table },
    LeftModule { carrier: usize, action: Table },
    Cochain(Cochain2),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Braided(_) => "braided_set",
            Document::Cycle(_) => "cycle_set",
            Document::Shelf(_) => "shelf",
            Document::RightModule { .. } => "right_module",
            Document::LeftModule { .. } => "left_module",
            Document::Cochain(_) => "cochain2",
        }
    }
}

fn check_len(what: &str, declared: usize, actual: usize) -> Result<()> {
    if declared != actual {
        return Err(Error::Parse(format!("{what}: declared size {declared}, table has {actual} rows")));
    }
    Ok(())
}

pub fn parse_document(text: &str) -> Result<Document> {
    let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match raw {
        Raw::BraidedSet { size, left, right } => {
            check_len("braided_set", size, left.len())?;
            Document::Braided(BraidedSet::new(left, right)?)
        }
        Raw::CycleSet { size, table } => {
            check_len("cycle_set", size, table.len())?;
            Document::Cycle(CycleSet::new(table)?)
        }
        Raw::Shelf { size, table } => {
            check_len("shelf", size, table.len())?;
            Document::Shelf(Shelf::new(table)?)
        }
        Raw::RightModule { carrier, action } => {
            check_len("right_module", carrier, action.len())?;
            Document::RightModule { carrier, action }
        }
        Raw::LeftModule { carrier, action } => {
            if action.iter().any(|r| r.len() != carrier) {
                return Err(Error::Parse("left_module: rows must have `carrier` entries".into()));
            }
            Document::LeftModule { carrier, action }
        }
        Raw::Cochain2 { base, moduli, values } => {
            check_len("cochain2", base, values.len())?;
            let group = FiniteAbelianGroup::new(moduli)?;
            Document::Cochain(Cochain2::new(&group, values)?)
        }
    })
}

fn raw_of(doc: &Document) -> Raw {
    match doc {
        Document::Braided(b) => Raw::BraidedSet {
            size: b.size(),
            left: b.left_table().clone(),
            right: b.right_table().clone(),
        },
        Document::Cycle(c) => Raw::CycleSet { size: c.size(), table: c.table().clone() },
        Document::Shelf(s) => Raw::Shelf { size: s.size(), table: s.table().clone() },
        Document::RightModule { carrier, action } => Raw::RightModule { carrier: *carrier, action: action.clone() },
        Document::LeftModule { carrier, action } => Raw::LeftModule { carrier: *carrier, action: action.clone() },
        Document::Cochain(f) => Raw::Cochain2 {
            base: f.base,
            moduli: f.group.moduli().to_vec(),
            values: f.values.clone(),
        },
    }
}

pub fn to_value(doc: &Document) -> serde_json::Value {
    serde_json::to_value(raw_of(doc)).expect("documents serialize")
}

pub fn to_json(doc: &Document) -> String {
    to_value(doc).to_string()
}

pub fn read_document(path: &std::path::Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_document(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trips() {
        let docs = vec![
            Document::Braided(fixtures::r3()),
            Document::Cycle(CycleSet::permutation(&[1, 2, 0]).unwrap()),
            Document::Shelf(Shelf::dihedral(5)),
            Document::RightModule { carrier: 2, action: vec![vec![1, 1], vec![0, 0]] },
            Document::LeftModule { carrier: 3, action: vec![vec![0, 1, 2]; 2] },
            Document::Cochain(Cochain2::delta(2, &FiniteAbelianGroup::new(vec![2, 3]).unwrap(), 1, 4)),
        ];
        for d in docs {
            assert_eq!(parse_document(&to_json(&d)).unwrap(), d);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_document("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_document(r#"{"kind":"thing"}"#), Err(Error::Parse(_))));
        let bad = r#"{"kind":"cycle_set","size":2,"table":[[0,1],[1,0]]}"#;
        assert!(matches!(parse_document(bad), Err(Error::CycleViolation(_))));
        let short = r#"{"kind":"cycle_set","size":3,"table":[[0,1],[0,1]]}"#;
        assert!(matches!(parse_document(short), Err(Error::Parse(_))));
        let c = r#"{"kind":"cochain2","base":1,"moduli":[2],"values":[[1]]}"#;
        assert!(matches!(parse_document(c).unwrap(), Document::Cochain(_)));
    }
}
