use super::character::CharacterData;
use super::datum::SplittingDatum;
use super::group::FiniteGroup;
use crate::exact::{CyclotomicNumber, CyclotomicSerial};
use crate::partitions::PrimeKey;
use crate::{ArsfError, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// On-disk splitting-table format.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SplittingTableFile {
    pub name: String,
    /// Rule serving unlisted primes, e.g. `"cubic-s3:2"`. Without a rule the
    /// table is exhaustive.
    #[serde(default)]
    pub unramified_rule: Option<String>,
    pub group: GroupTableFile,
    /// Conjugacy classes in the order the character values refer to; must
    /// match the classes computed from the table (ordered by smallest
    /// member).
    pub classes: Vec<Vec<u16>>,
    pub characters: Vec<CharacterFile>,
    pub primes: Vec<PrimeEntryFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GroupTableFile {
    pub order: usize,
    pub mul: Vec<Vec<u16>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct CharacterFile {
    pub name: String,
    pub class_values: Vec<CyclotomicSerial>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PrimeEntryFile {
    pub p: u64,
    pub norm: u64,
    pub inertia: Vec<u16>,
    pub frobenius: u16,
    pub residue_degrees: Vec<u32>,
    pub provenance: String,
}

/// Validated in-memory splitting table.
pub struct SplittingTable {
    pub name: String,
    pub unramified_rule: Option<String>,
    pub group: Arc<FiniteGroup>,
    pub characters: Vec<CharacterData>,
    pub primes: BTreeMap<u64, SplittingDatum>,
}

impl SplittingTable {
    pub fn from_json(json: &str) -> Result<Self> {
        let file: SplittingTableFile = serde_json::from_str(json)
            .map_err(|e| ArsfError::InvalidTable(format!("bad JSON: {e}")))?;
        SplittingTable::from_file(file)
    }

    pub fn from_file(file: SplittingTableFile) -> Result<Self> {
        if file.group.mul.len() != file.group.order {
            return Err(ArsfError::InvalidTable("group order mismatch".into()));
        }
        let group = FiniteGroup::from_mul_table(&file.name, file.group.mul)?;
        if group.classes() != file.classes.as_slice() {
            return Err(ArsfError::InvalidTable(format!(
                "class list disagrees with the computed classes {:?}",
                group.classes()
            )));
        }
        let characters = file
            .characters
            .iter()
            .map(|c| {
                let values = c
                    .class_values
                    .iter()
                    .map(CyclotomicNumber::from_serial)
                    .collect::<Result<Vec<_>>>()?;
                CharacterData::new(&c.name, group.clone(), values)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut primes = BTreeMap::new();
        for entry in &file.primes {
            let sd = SplittingDatum {
                prime: PrimeKey {
                    p: entry.p,
                    index: 0,
                    norm: entry.norm,
                },
                inertia: entry.inertia.clone(),
                frobenius: entry.frobenius,
                residue_degrees: entry.residue_degrees.clone(),
            };
            sd.validate(&group)?;
            if primes.insert(entry.p, sd).is_some() {
                return Err(ArsfError::InvalidTable(format!(
                    "duplicate prime entry {}",
                    entry.p
                )));
            }
        }
        Ok(SplittingTable {
            name: file.name,
            unramified_rule: file.unramified_rule,
            group,
            characters,
            primes,
        })
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let json = std::fs::read_to_string(path)
            .map_err(|e| ArsfError::InvalidTable(format!("cannot read {path:?}: {e}")))?;
        SplittingTable::from_json(&json)
    }

    pub fn character_named(&self, name: &str) -> Option<&CharacterData> {
        self.characters.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_fixture_loads_and_validates() {
        let t = SplittingTable::from_json(include_str!("../../fixtures/s3_x3_2.json")).unwrap();
        assert_eq!(t.group.order(), 6);
        assert_eq!(t.characters.len(), 3);
        assert_eq!(t.primes.len(), 2);
        assert_eq!(t.unramified_rule.as_deref(), Some("cubic-s3:2"));
        let sd2 = &t.primes[&2];
        assert_eq!(sd2.inertia.len(), 3);
        assert_eq!(sd2.residue_degrees, vec![2]);
    }

    #[test]
    fn inconsistent_efg_rejected() {
        let mut file: SplittingTableFile =
            serde_json::from_str(include_str!("../../fixtures/s3_x3_2.json")).unwrap();
        file.primes[0].residue_degrees = vec![1];
        assert!(matches!(
            SplittingTable::from_file(file),
            Err(ArsfError::InvalidTable(_))
        ));
    }

    #[test]
    fn non_normalizing_frobenius_rejected() {
        let mut file: SplittingTableFile =
            serde_json::from_str(include_str!("../../fixtures/s3_x3_2.json")).unwrap();
        // subgroup generated by transposition 1 is {0,1}; 3-cycle 3 does not
        // normalize it
        file.primes[0].inertia = vec![0, 1];
        file.primes[0].frobenius = 3;
        file.primes[0].residue_degrees = vec![3];
        assert!(SplittingTable::from_file(file).is_err());
    }
}
