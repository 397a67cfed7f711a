//! The TOML presentation format.
//!
//! ```toml
//! field = "rationals"            # or: field = { prime = 3 }
//! vertices = ["0", "1"]
//! arrows = [{ name = "a", from = "0", to = "1" }, { name = "b", from = "1", to = "0" }]
//! relations = [[{ coeff = "1", path = ["b", "a"] }]]   # paths list arrows in traversal order
//! order = [["0", "1"]]           # covering pairs [smaller, larger]
//! [duality]                      # optional arrow involution
//! a = "b"
//! b = "a"
//! ```
//!
//! Unknown keys are rejected. Every error carries a stable code and the key
//! (or line) it refers to.

use std::collections::BTreeMap;

use qha_core::exactlin::{format_scalar, is_prime, FieldSpec};
use qha_core::quiver::{Presentation, PresentationSpec, QuiverError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldEntry {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// A coefficient written either as a string (`"-2/3"`) or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn text(&self) -> String {
        match self {
            Coeff::Int(n) => n.to_string(),
            Coeff::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub coeff: Coeff,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub field: FieldEntry,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub relations: Vec<Vec<TermEntry>>,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duality: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {message}")]
    UnknownKey { line: usize, message: String },
    #[error("{context}: invalid coefficient {value:?}")]
    BadCoefficient { context: String, value: String },
    #[error("field: {0} is not prime")]
    NotPrime(u64),
    #[error("{context}: duplicate name {name:?}")]
    DuplicateName { context: String, name: String },
    #[error("{context}: unknown vertex {name:?}")]
    UnknownVertex { context: String, name: String },
    #[error("{context}: unknown arrow {name:?}")]
    UnknownArrow { context: String, name: String },
    #[error("{context}: non-composable path [{path}]")]
    NonComposable { context: String, path: String },
    #[error("{context}: {message}")]
    BadRelation { context: String, message: String },
    #[error("order: cycle through {0:?}")]
    OrderCycle(String),
    #[error("duality.{arrow}: {message}")]
    BadDuality { arrow: String, message: String },
    #[error("relations: {0}")]
    NotFiniteDimensional(String),
    #[error("duality: {0}")]
    DualityNotStable(String),
}

impl FormatError {
    /// Stable diagnostic code, one per kind of input problem.
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Syntax { .. } => "E001",
            FormatError::UnknownKey { .. } => "E002",
            FormatError::BadCoefficient { .. } => "E003",
            FormatError::NotPrime(_) => "E004",
            FormatError::DuplicateName { .. } => "E010",
            FormatError::UnknownVertex { .. } => "E011",
            FormatError::UnknownArrow { .. } => "E012",
            FormatError::NonComposable { .. } => "E013",
            FormatError::BadRelation { .. } => "E014",
            FormatError::OrderCycle(_) => "E020",
            FormatError::BadDuality { .. } => "E030",
            FormatError::DualityNotStable(_) => "E031",
            FormatError::NotFiniteDimensional(_) => "E040",
        }
    }
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

impl PresentationFile {
    pub fn from_toml(text: &str) -> Result<Self, FormatError> {
        toml::from_str(text).map_err(|e| {
            let line = e.span().map_or(0, |s| line_of(text, s.start));
            let message = e.message().trim().to_string();
            if message.contains("unknown field") {
                FormatError::UnknownKey { line, message }
            } else {
                FormatError::Syntax { line, message }
            }
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("presentation files always serialize")
    }

    pub fn field(&self) -> Result<FieldSpec, FormatError> {
        match self.field {
            FieldEntry::Rationals => Ok(FieldSpec::Rationals),
            FieldEntry::Prime(p) if is_prime(p) => Ok(FieldSpec::Prime(p)),
            FieldEntry::Prime(p) => Err(FormatError::NotPrime(p)),
        }
    }

    /// Validates the file into a presentation.
    pub fn to_presentation(&self) -> Result<Presentation, FormatError> {
        let field = self.field()?;
        let mut relations = Vec::with_capacity(self.relations.len());
        for (i, rel) in self.relations.iter().enumerate() {
            let mut terms = Vec::with_capacity(rel.len());
            for (j, t) in rel.iter().enumerate() {
                let text = t.coeff.text();
                let c = field.parse_scalar(&text).map_err(|_| FormatError::BadCoefficient {
                    context: format!("relations[{i}][{j}].coeff"),
                    value: text.clone(),
                })?;
                terms.push((c, t.path.clone()));
            }
            relations.push(terms);
        }
        let spec = PresentationSpec {
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().map(|a| (a.name.clone(), a.from.clone(), a.to.clone())).collect(),
            relations,
            order: self.order.iter().map(|[a, b]| (a.clone(), b.clone())).collect(),
            duality: self.duality.as_ref().map(|m| m.iter().map(|(a, b)| (a.clone(), b.clone())).collect()),
        };
        Presentation::from_names(field, spec).map_err(|e| self.locate(e))
    }

    /// Serializes a validated presentation.
    pub fn from_presentation(p: &Presentation) -> Self {
        let q = p.quiver();
        let vname = |v: usize| q.vertices()[v].clone();
        let aname = |a: usize| q.arrows()[a].name.clone();
        PresentationFile {
            field: match p.field() {
                FieldSpec::Rationals => FieldEntry::Rationals,
                FieldSpec::Prime(p) => FieldEntry::Prime(p),
            },
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowEntry { name: a.name.clone(), from: vname(a.source), to: vname(a.target) })
                .collect(),
            relations: p
                .relations()
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, w)| TermEntry {
                            coeff: Coeff::Text(format_scalar(c)),
                            path: w.iter().map(|&a| aname(a)).collect(),
                        })
                        .collect()
                })
                .collect(),
            order: p.order().iter().map(|&(a, b)| [vname(a), vname(b)]).collect(),
            duality: p.duality().map(|d| d.iter().enumerate().map(|(i, &j)| (aname(i), aname(j))).collect()),
        }
    }

    /// Attaches the offending key to a validation error.
    pub fn locate(&self, e: QuiverError) -> FormatError {
        let relation_ctx = |i: usize| format!("relations[{i}]");
        match e {
            QuiverError::DuplicateName(name) => {
                let context = if self.vertices.iter().filter(|v| **v == name).count() > 1 { "vertices" } else { "arrows" };
                FormatError::DuplicateName { context: context.into(), name }
            }
            QuiverError::UnknownVertex(name) => {
                let context = self
                    .arrows
                    .iter()
                    .position(|a| a.from == name || a.to == name)
                    .map(|i| format!("arrows[{i}]"))
                    .or_else(|| self.order.iter().position(|p| p.contains(&name)).map(|i| format!("order[{i}]")))
                    .unwrap_or_else(|| "vertices".into());
                FormatError::UnknownVertex { context, name }
            }
            QuiverError::UnknownArrow(name) => {
                let in_relation = self.relations.iter().enumerate().find_map(|(i, rel)| {
                    rel.iter().position(|t| t.path.contains(&name)).map(|j| format!("relations[{i}][{j}].path"))
                });
                let context = in_relation.unwrap_or_else(|| "duality".into());
                FormatError::UnknownArrow { context, name }
            }
            QuiverError::NonComposable(path) => {
                let context = self
                    .relations
                    .iter()
                    .enumerate()
                    .find_map(|(i, rel)| {
                        rel.iter().position(|t| t.path.join(", ") == path).map(|j| format!("relations[{i}][{j}].path"))
                    })
                    .unwrap_or_else(|| "relations".into());
                FormatError::NonComposable { context, path }
            }
            e @ (QuiverError::NotAdmissible(i)
            | QuiverError::EmptyRelation(i)
            | QuiverError::MixedEndpoints(i)
            | QuiverError::NotHomogeneous(i)) => {
                FormatError::BadRelation { context: relation_ctx(i), message: e.to_string() }
            }
            QuiverError::OrderCycle(v) => FormatError::OrderCycle(v),
            e @ (QuiverError::DualityNotInvolution(_)
            | QuiverError::DualityNotReversing(_)
            | QuiverError::DualityIncomplete(_)) => {
                let arrow = match &e {
                    QuiverError::DualityNotInvolution(a)
                    | QuiverError::DualityNotReversing(a)
                    | QuiverError::DualityIncomplete(a) => a.clone(),
                    _ => unreachable!(),
                };
                FormatError::BadDuality { arrow, message: e.to_string() }
            }
            e @ QuiverError::DualityNotStable { .. } => FormatError::DualityNotStable(e.to_string()),
            e @ QuiverError::NotFiniteDimensional(_) => FormatError::NotFiniteDimensional(e.to_string()),
            e @ (QuiverError::NoDuality | QuiverError::Algebra(_)) => {
                FormatError::BadRelation { context: "relations".into(), message: e.to_string() }
            }
        }
    }
}

/// Parses and validates presentation text.
pub fn parse(text: &str) -> Result<Presentation, FormatError> {
    PresentationFile::from_toml(text)?.to_presentation()
}

/// Canonical text of a validated presentation.
pub fn serialize(p: &Presentation) -> String {
    PresentationFile::from_presentation(p).to_toml()
}
