//! JSON persistence for character tables. Loading re-verifies without recomputing.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::GroupFile;
use crate::perm::Perm;

#[derive(Serialize, Deserialize)]
pub struct ClassEntry {
    pub rep: Vec<usize>,
    pub size: usize,
}

#[derive(Serialize, Deserialize)]
pub struct TableFile {
    pub group: GroupFile,
    pub exponent: usize,
    pub classes: Vec<ClassEntry>,
    pub irreducibles: Vec<Vec<Cyclotomic>>,
}

impl TableFile {
    pub fn from_table(t: &CharacterTable) -> Self {
        TableFile {
            group: t.group().to_file(),
            exponent: t.exponent(),
            classes: t
                .group()
                .conjugacy_classes()
                .iter()
                .map(|c| ClassEntry {
                    rep: c.representative.one_based(),
                    size: c.size(),
                })
                .collect(),
            irreducibles: t
                .irreducibles()
                .iter()
                .map(|c| c.values().to_vec())
                .collect(),
        }
    }

    /// Maps classes by representative, then verifies the table.
    pub fn into_table(self) -> Result<CharacterTable> {
        let g = self.group.build()?;
        let k = g.num_classes();
        if self.classes.len() != k {
            return Err(Error::Schema(format!(
                "{} classes listed, group has {k}",
                self.classes.len()
            )));
        }
        if self.exponent as u64 != g.exponent() {
            return Err(Error::VerificationFailed(format!(
                "exponent {} does not match the group",
                self.exponent
            )));
        }
        let mut slot = vec![usize::MAX; k];
        for (i, c) in self.classes.iter().enumerate() {
            let p = Perm::from_one_based(&c.rep)?;
            let cls = g
                .class_of_perm(&p)
                .ok_or_else(|| Error::Schema(format!("representative {p} not in group")))?;
            if g.conjugacy_classes()[cls].size() != c.size {
                return Err(Error::VerificationFailed(format!(
                    "class size mismatch at {p}"
                )));
            }
            if slot[cls] != usize::MAX {
                return Err(Error::Schema(format!("class of {p} listed twice")));
            }
            slot[cls] = i;
        }
        let rows = self
            .irreducibles
            .into_iter()
            .map(|row| {
                if row.len() != k {
                    return Err(Error::Schema("row length differs from class count".into()));
                }
                Ok((0..k).map(|cls| row[slot[cls]].clone()).collect())
            })
            .collect::<Result<Vec<Vec<Cyclotomic>>>>()?;
        let t = CharacterTable::from_rows_unsorted(g, rows)?;
        t.verify_central_characters()?;
        Ok(t)
    }
}

pub fn save_table(t: &CharacterTable, path: &Path) -> Result<()> {
    let js = serde_json::to_string_pretty(&TableFile::from_table(t))?;
    std::fs::write(path, js + "\n")?;
    Ok(())
}

pub fn load_table(path: &Path) -> Result<CharacterTable> {
    let text = std::fs::read_to_string(path)?;
    let file: TableFile = serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?;
    file.into_table()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::corpus;

    #[test]
    fn round_trip_and_tamper() {
        let t = character_table(&corpus::symmetric(3)).unwrap();
        let dir = std::env::temp_dir().join(format!("artinchar-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("s3.json");
        save_table(&t, &path).unwrap();
        let back = load_table(&path).unwrap();
        assert_eq!(back.irreducibles(), t.irreducibles());

        let mut file = TableFile::from_table(&t);
        file.irreducibles[2][0] = Cyclotomic::from_int(3);
        assert!(matches!(
            file.into_table(),
            Err(Error::VerificationFailed(_))
        ));
        std::fs::remove_dir_all(dir).ok();
    }
}
