//! JSON input formats, plus the preset-or-path resolution used by the CLI.
//!
//! Category: `{"objects": n, "morphisms": [{"id", "src", "dst"}], "identities": [...], "compose": [[g, f, gf], ...]}`.
//! Group: `{"order": n, "table": [[...]], "labels": [...]}`.
//! Functor: `{"category": <name or inline category>, "carriers": [...], "action": {"<morphism id>": [...]}}`.
//! Bifunctor: a functor file on `I × J` plus `"factors": {"I": ..., "J": ...}`; `"category"` may be omitted.
//! Diagram: `{"objects": [...], "morphisms": [...]}`, indexed by the shape's objects and morphisms.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FiniteDiagram, Mor, Obj, Preset, RawCategory};
use crate::groups::{group_preset, FinGroup};
use crate::setfun::{BiFunctor, SetFunctor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub id: Mor,
    pub src: Obj,
    pub dst: Obj,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: usize,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: Vec<Mor>,
    pub compose: Vec<[Mor; 3]>,
}

impl CategoryFile {
    pub fn build(&self) -> Result<FinCategory> {
        FinCategory::build(&RawCategory {
            objects: self.objects,
            morphisms: self.morphisms.iter().map(|m| (m.id, m.src, m.dst)).collect(),
            identities: self.identities.clone(),
            compose: self.compose.iter().map(|t| (t[0], t[1], t[2])).collect(),
        })
    }
}

impl From<&FinCategory> for CategoryFile {
    fn from(c: &FinCategory) -> Self {
        let raw = c.to_raw();
        Self {
            objects: raw.objects,
            morphisms: raw
                .morphisms
                .into_iter()
                .map(|(id, src, dst)| MorphismEntry { id, src, dst })
                .collect(),
            identities: raw.identities,
            compose: raw.compose.into_iter().map(|(g, f, gf)| [g, f, gf]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupFile {
    pub fn build(&self) -> Result<FinGroup> {
        if self.order != self.table.len() {
            return Err(Error::NotAGroup {
                axiom: "square table",
                witness: format!("order {} but {} rows", self.order, self.table.len()),
            });
        }
        FinGroup::from_table(&self.table, self.labels.clone())
    }
}

impl From<&FinGroup> for GroupFile {
    fn from(g: &FinGroup) -> Self {
        Self {
            order: g.order(),
            table: g.rows(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

/// A category given by name (a preset or a file path) or inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Named(String),
    Inline(CategoryFile),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorFile {
    pub category: CategoryRef,
    pub carriers: Vec<usize>,
    pub action: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factors {
    #[serde(rename = "I")]
    pub left: CategoryRef,
    #[serde(rename = "J")]
    pub right: CategoryRef,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiFunctorFile {
    pub factors: Factors,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategoryRef>,
    pub carriers: Vec<usize>,
    pub action: BTreeMap<String, Vec<usize>>,
}

impl From<&BiFunctor> for BiFunctorFile {
    fn from(b: &BiFunctor) -> Self {
        Self {
            factors: Factors {
                left: CategoryRef::Inline(b.left().into()),
                right: CategoryRef::Inline(b.right().into()),
            },
            category: None,
            carriers: b.functor().carriers().to_vec(),
            action: action_map(b.functor()),
        }
    }
}

impl From<&SetFunctor> for FunctorFile {
    fn from(f: &SetFunctor) -> Self {
        Self {
            category: CategoryRef::Inline(f.domain().into()),
            carriers: f.carriers().to_vec(),
            action: action_map(f),
        }
    }
}

fn action_map(f: &SetFunctor) -> BTreeMap<String, Vec<usize>> {
    f.domain()
        .morphisms()
        .map(|m| (m.to_string(), f.table(m).to_vec()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub objects: Vec<Obj>,
    pub morphisms: Vec<Mor>,
}

/// Parses JSON, reporting line and column on failure.
pub fn parse_json<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("{origin}: line {}, column {}: {e}", e.line(), e.column()))
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn resolve_path(name: &str, base: Option<&Path>) -> PathBuf {
    match base {
        Some(dir) if Path::new(name).is_relative() => dir.join(name),
        _ => PathBuf::from(name),
    }
}

fn looks_like_path(name: &str) -> bool {
    name.ends_with(".json") || name.contains('/') || name.contains('\\')
}

/// A preset string, or else a path to a category file.
pub fn load_category(name: &str, base: Option<&Path>) -> Result<FinCategory> {
    match name.parse::<Preset>() {
        Ok(p) => p.build(),
        Err(e) => {
            let path = resolve_path(name, base);
            if looks_like_path(name) || path.exists() {
                parse_json::<CategoryFile>(&read(&path)?, &path.display().to_string())?.build()
            } else {
                Err(e)
            }
        }
    }
}

/// A group preset name, or else a path to a group file.
pub fn load_group(name: &str) -> Result<FinGroup> {
    match group_preset(name) {
        Ok(g) => Ok(g),
        Err(e) => {
            let path = Path::new(name);
            if looks_like_path(name) || path.exists() {
                parse_json::<GroupFile>(&read(path)?, name)?.build()
            } else {
                Err(e)
            }
        }
    }
}

pub fn resolve_category(r: &CategoryRef, base: Option<&Path>) -> Result<FinCategory> {
    match r {
        CategoryRef::Named(name) => load_category(name, base),
        CategoryRef::Inline(file) => file.build(),
    }
}

fn action_tables(c: &FinCategory, action: &BTreeMap<String, Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut tables: Vec<Option<Vec<usize>>> = vec![None; c.morphism_count()];
    for (key, table) in action {
        let m: Mor = key
            .parse()
            .map_err(|_| Error::Parse(format!("action key `{key}` is not a morphism id")))?;
        if m >= c.morphism_count() {
            return Err(Error::IndexOutOfRange {
                what: "morphism",
                index: m,
                bound: c.morphism_count(),
            });
        }
        tables[m] = Some(table.clone());
    }
    tables
        .into_iter()
        .enumerate()
        .map(|(m, t)| match t {
            Some(t) => Ok(t),
            // identities may be left implicit
            None if c.is_identity(m) => Ok(Vec::new()),
            None => Err(Error::NotAFunctor(format!("no action table for morphism {m}"))),
        })
        .collect()
}

fn fill_identities(c: &FinCategory, carriers: &[usize], tables: &mut [Vec<usize>]) {
    for o in c.objects() {
        let id = c.identity(o);
        if tables[id].is_empty() && carriers.get(o).is_some_and(|&n| n > 0) {
            tables[id] = (0..carriers[o]).collect();
        }
    }
}

impl FunctorFile {
    pub fn build(&self, base: Option<&Path>) -> Result<SetFunctor> {
        let c = resolve_category(&self.category, base)?;
        let mut tables = action_tables(&c, &self.action)?;
        fill_identities(&c, &self.carriers, &mut tables);
        SetFunctor::new(c, self.carriers.clone(), tables)
    }
}

impl BiFunctorFile {
    pub fn build(&self, base: Option<&Path>, caps: &Caps) -> Result<BiFunctor> {
        let left = resolve_category(&self.factors.left, base)?;
        let right = resolve_category(&self.factors.right, base)?;
        let product = crate::fincat::product_category(&left, &right, caps.product_morphisms)?;
        if let Some(r) = &self.category {
            if resolve_category(r, base)? != product.category {
                return Err(Error::InvalidBiFunctor(
                    "`category` does not match the product of the factors".into(),
                ));
            }
        }
        let mut tables = action_tables(&product.category, &self.action)?;
        fill_identities(&product.category, &self.carriers, &mut tables);
        BiFunctor::new(&left, &right, self.carriers.clone(), tables, caps)
    }
}

impl DiagramFile {
    pub fn build(&self, shape: FinCategory, target: &FinCategory) -> Result<FiniteDiagram> {
        FiniteDiagram::new(shape, target, self.objects.clone(), self.morphisms.clone())
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    parse_json(&read(path)?, &path.display().to_string())
}
