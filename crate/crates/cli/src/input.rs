//! Resolution of group, subgroup, character and theory arguments.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use artinchar::chartab::io::{load_table, save_table};
use artinchar::chartab::{character_table, register_table};
use artinchar::classfun::VirtualCharacter;
use artinchar::group::{parse_cycle_text, GroupFile};
use artinchar::par::Strategy;
use artinchar::supercharacter::{SupercharacterTheory, TheoryFile};
use artinchar::{corpus, CharacterTable, ClassFunction, Error, Group, Result};
use sha2::{Digest, Sha256};

pub struct Context {
    pub cache_dir: Option<PathBuf>,
    pub strategy: Strategy,
}

impl Context {
    /// Character table, read from or written to the cache directory when set.
    pub fn table(&self, g: &Group) -> Result<Arc<CharacterTable>> {
        let Some(dir) = &self.cache_dir else {
            return character_table(g);
        };
        let path = dir.join(format!("{}.json", cache_key(g)?));
        if path.exists() {
            let t = load_table(&path)?;
            if t.group().same_as(g) {
                return Ok(register_table(t));
            }
        }
        let t = character_table(g)?;
        std::fs::create_dir_all(dir)?;
        save_table(&t, &path)?;
        Ok(t)
    }
}

/// Hex SHA-256 of the canonical group file.
pub fn cache_key(g: &Group) -> Result<String> {
    let text = serde_json::to_string(&g.to_file())?;
    Ok(hex::encode(Sha256::digest(text.as_bytes())))
}

/// A group file path, or a corpus name such as `S3`, `q8` or `s4.json`.
pub fn resolve_group(spec: &str) -> Result<Group> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let file: GroupFile =
            serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{spec}: {e}")))?;
        return file.build();
    }
    let name = spec.strip_suffix(".json").unwrap_or(spec);
    let name = Path::new(name)
        .file_name()
        .and_then(|s| s.to_str())
        .unwrap_or(name);
    corpus::by_name(name)
        .or_else(|| corpus::by_name(&name.to_uppercase()))
        .ok_or_else(|| Error::Schema(format!("no group file or corpus group named {spec:?}")))
}

/// Subgroup generated by cycle-notation generators separated by `;`.
pub fn resolve_subgroup(g: &Group, text: &str) -> Result<Group> {
    let gens = parse_cycle_text(text, g.degree())?;
    if let Some(p) = gens.iter().find(|p| !g.contains(p)) {
        return Err(Error::Schema(format!(
            "generator {p} is not in {}",
            g.name()
        )));
    }
    g.subgroup(gens)
}

/// Integer coefficients over the irreducibles, separated by commas.
pub fn parse_coeffs(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Schema(format!("bad coefficient {s:?}")))
        })
        .collect()
}

/// `χ_i` of `h` or the virtual character with the given coefficients.
pub fn character(
    ctx: &Context,
    h: &Group,
    chi: Option<usize>,
    coeffs: Option<&str>,
) -> Result<ClassFunction> {
    let t = ctx.table(h)?;
    match (chi, coeffs) {
        (Some(i), None) => {
            if i >= t.len() {
                return Err(Error::OutOfRange(format!(
                    "character {i} of {} irreducibles",
                    t.len()
                )));
            }
            t.irr(i).rehome(h)
        }
        (None, Some(c)) => {
            let v = parse_coeffs(c)?;
            if v.len() != t.len() {
                return Err(Error::Schema(format!(
                    "{} coefficients for {} irreducibles",
                    v.len(),
                    t.len()
                )));
            }
            VirtualCharacter::from_ints(&v)
                .to_class_function(&t)
                .rehome(h)
        }
        _ => Err(Error::Schema(
            "give exactly one of --chi and --coeffs".into(),
        )),
    }
}

/// `classical`, `max`, or a theory file for `g`.
pub fn resolve_theory(g: &Group, spec: &str) -> Result<SupercharacterTheory> {
    match spec {
        "classical" => SupercharacterTheory::classical(g),
        "max" => SupercharacterTheory::max(g),
        path => {
            let text = std::fs::read_to_string(path)?;
            let file: TheoryFile =
                serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{path}: {e}")))?;
            file.build(g)
        }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}
