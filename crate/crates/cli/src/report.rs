//! The machine report and its plain-text rendering.
//!
//! Every section names the subcommand that recomputes it. Field order is
//! fixed and all maps are ordered, so a report serializes to the same bytes
//! on every run.

use std::fmt::Write;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<TablesSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<DimensionsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertiesSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ringel: Option<RingelSection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub truncations: Vec<TruncationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audits: Option<AuditSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext: Option<ExtSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur: Option<SchurSection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSection {
    pub operation: &'static str,
    pub field: String,
    pub dimension: usize,
    /// Number of basis paths of each length.
    pub basis_by_length: Vec<usize>,
    pub weights: Vec<String>,
    pub arrows: usize,
    pub relations: usize,
    pub has_duality: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateSection {
    pub operation: &'static str,
    pub holds: bool,
    pub multiplicity_one: bool,
    pub algebra_dimension: usize,
    /// `Σ dim Δ(λ) · dim ∇(λ)`.
    pub standard_costandard_sum: usize,
    pub projectives_filtered: bool,
    pub failures: Vec<String>,
}

/// Rows and columns follow `weights`.
#[derive(Clone, Debug, Serialize)]
pub struct TablesSection {
    pub operation: &'static str,
    pub weights: Vec<String>,
    /// `[Δ(λ):L(μ)]`, row λ.
    pub standard_factors: Vec<Vec<usize>>,
    /// `[∇(λ):L(μ)]`, row λ.
    pub costandard_factors: Vec<Vec<usize>>,
    /// `(P(λ):Δ(μ))`, row λ.
    pub projective_standard: Vec<Vec<usize>>,
    /// `dim e_λ A e_μ`.
    pub cartan: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionRow {
    pub weight: String,
    pub gfd_simple: usize,
    pub wfd_simple: usize,
    pub gfd_standard: usize,
    pub wfd_standard: usize,
    pub gfd_costandard: usize,
    pub wfd_costandard: usize,
    pub proj_standard: usize,
    pub inj_standard: usize,
    pub proj_costandard: usize,
    pub inj_costandard: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionsSection {
    pub operation: &'static str,
    pub rows: Vec<DimensionRow>,
    pub global_dimension: usize,
    pub gfd_algebra: usize,
    pub wfd_algebra: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessEntry {
    pub lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockVerdict {
    pub weights: Vec<String>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictEntry {
    pub property: String,
    pub holds: bool,
    pub witnesses: Vec<WitnessEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<BlockVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertiesSection {
    pub operation: &'static str,
    /// Strict relations of the minimized order the verdicts use.
    pub order: Vec<[String; 2]>,
    pub blocks: Vec<Vec<String>>,
    pub verdicts: Vec<VerdictEntry>,
    /// Verdicts on the order as given, when it differs from the minimized one.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub given_order_verdicts: Vec<VerdictEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingEntry {
    pub weight: String,
    pub dimension: usize,
    pub composition_factors: Vec<usize>,
    pub standard_multiplicities: Vec<usize>,
    /// `(μ, d)`: extended by `Δ(μ)^d`.
    pub extension_steps: Vec<(String, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctorEntry {
    pub weight: String,
    pub costandard_to_standard: bool,
    pub tilting_to_projective: bool,
    pub injective_to_tilting: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FingerprintEntry {
    pub weights: Vec<String>,
    pub standard: Vec<Vec<usize>>,
    pub costandard: Vec<Vec<usize>>,
    pub cartan: Vec<Vec<usize>>,
    pub order: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingelSection {
    pub operation: &'static str,
    pub dual_dimension: usize,
    pub tilting: Vec<TiltingEntry>,
    pub identities: Vec<IdentityEntry>,
    pub functor: Vec<FunctorEntry>,
    pub source_fingerprint: FingerprintEntry,
    pub dual_fingerprint: FingerprintEntry,
    /// The Ringel dual of the dual has the source fingerprint.
    pub double_dual_matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TruncationSection {
    pub operation: &'static str,
    /// `saturated` or `corner`.
    pub kind: &'static str,
    pub weights: Vec<String>,
    pub dimension: usize,
    pub standard_factors: Vec<Vec<usize>>,
    pub costandard_factors: Vec<Vec<usize>>,
    pub gfd_simple: Vec<usize>,
    pub wfd_simple: Vec<usize>,
    /// Saturated only: Ext pairs compared with the original algebra.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext_pairs_checked: Option<usize>,
    /// Corner only: `proj Δ` per weight, original and truncated.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub proj_standard: Vec<(String, usize, usize)>,
    /// Corner only: fingerprint of the corner equals that of the Ringel dual of
    /// the matching quotient of the dual.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ringel_exchange: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub name: String,
    pub status: String,
    pub conjectural: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditSection {
    pub operation: &'static str,
    pub passed: bool,
    pub sampled_family: String,
    pub entries: Vec<AuditEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtSection {
    pub operation: &'static str,
    pub from: String,
    pub to: String,
    /// `dim Ext^i` for `i = 0, 1, …`.
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurSection {
    pub operation: &'static str,
    pub lambda: Vec<u64>,
    pub p: u64,
    pub d: u64,
    pub regular: bool,
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report { schema_version: SCHEMA_VERSION, command: command.into(), input: input.into(), ..Default::default() }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// Plain-text tables for the terminal.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.input.is_empty() {
            let _ = writeln!(out, "# {} {}", self.command, self.input);
        }
        if let Some(a) = &self.algebra {
            let _ = writeln!(out, "\n## algebra");
            let _ = writeln!(out, "field {}, dimension {}, basis by path length {:?}", a.field, a.dimension, a.basis_by_length);
            let _ = writeln!(
                out,
                "weights {}; {} arrows, {} relations, duality {}",
                a.weights.join(" "),
                a.arrows,
                a.relations,
                if a.has_duality { "given" } else { "none" }
            );
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "\n## certificate: {}", if c.holds { "quasi-hereditary" } else { "FAILED" });
            let _ = writeln!(
                out,
                "multiplicity one {}, projectives Δ-filtered {}, dim A = {} vs Σ dim Δ·dim ∇ = {}",
                c.multiplicity_one, c.projectives_filtered, c.algebra_dimension, c.standard_costandard_sum
            );
            for f in &c.failures {
                let _ = writeln!(out, "  failure: {f}");
            }
        }
        if let Some(t) = &self.tables {
            let _ = writeln!(out, "\n## tables");
            for (title, m) in [
                ("[Δ(λ):L(μ)]", &t.standard_factors),
                ("[∇(λ):L(μ)]", &t.costandard_factors),
                ("(P(λ):Δ(μ))", &t.projective_standard),
                ("Cartan dim e_λ A e_μ", &t.cartan),
            ] {
                out.push_str(&matrix(title, &t.weights, m));
            }
        }
        if let Some(d) = &self.dimensions {
            let _ = writeln!(out, "\n## dimensions");
            let header =
                ["λ", "gfd L", "wfd L", "gfd Δ", "wfd Δ", "gfd ∇", "wfd ∇", "proj Δ", "inj Δ", "proj ∇", "inj ∇"];
            let rows: Vec<Vec<String>> = d
                .rows
                .iter()
                .map(|r| {
                    let mut row = vec![r.weight.clone()];
                    row.extend(
                        [
                            r.gfd_simple,
                            r.wfd_simple,
                            r.gfd_standard,
                            r.wfd_standard,
                            r.gfd_costandard,
                            r.wfd_costandard,
                            r.proj_standard,
                            r.inj_standard,
                            r.proj_costandard,
                            r.inj_costandard,
                        ]
                        .iter()
                        .map(usize::to_string),
                    );
                    row
                })
                .collect();
            out.push_str(&table(&header, &rows));
            let _ = writeln!(
                out,
                "glob = {}, gfd(S) = {}, wfd(S) = {}",
                d.global_dimension, d.gfd_algebra, d.wfd_algebra
            );
        }
        if let Some(p) = &self.properties {
            let _ = writeln!(out, "\n## properties");
            let order: Vec<String> = p.order.iter().map(|[a, b]| format!("{a}<{b}")).collect();
            let blocks: Vec<String> = p.blocks.iter().map(|b| format!("{{{}}}", b.join(","))).collect();
            let _ = writeln!(out, "minimized order: {}", if order.is_empty() { "none".into() } else { order.join(" ") });
            let _ = writeln!(out, "blocks: {}", blocks.join(" "));
            render_verdicts(&mut out, &p.verdicts);
            if !p.given_order_verdicts.is_empty() {
                let _ = writeln!(out, "on the order as given:");
                render_verdicts(&mut out, &p.given_order_verdicts);
            }
        }
        if let Some(r) = &self.ringel {
            let _ = writeln!(out, "\n## ringel dual (dimension {})", r.dual_dimension);
            for t in &r.tilting {
                let steps: Vec<String> = t.extension_steps.iter().map(|(m, d)| format!("Δ({m})^{d}")).collect();
                let _ = writeln!(
                    out,
                    "T({}): dim {}, factors {:?}, Δ-multiplicities {:?}, extensions [{}]",
                    t.weight,
                    t.dimension,
                    t.composition_factors,
                    t.standard_multiplicities,
                    steps.join(", ")
                );
            }
            let rows: Vec<Vec<String>> = r
                .identities
                .iter()
                .map(|i| {
                    vec![
                        i.name.clone(),
                        i.weight.clone().unwrap_or_else(|| "-".into()),
                        i.lhs.to_string(),
                        i.rhs.to_string(),
                        mark(i.holds).into(),
                    ]
                })
                .collect();
            out.push_str(&table(&["identity", "λ", "lhs", "rhs", ""], &rows));
            for f in &r.functor {
                let _ = writeln!(
                    out,
                    "F at {}: F∇ ≅ Δ' {}, FT ≅ P' {}, FI ≅ T' {}",
                    f.weight,
                    mark(f.costandard_to_standard),
                    mark(f.tilting_to_projective),
                    mark(f.injective_to_tilting)
                );
            }
            let _ = writeln!(out, "dual of the dual matches the source: {}", mark(r.double_dual_matches));
        }
        for t in &self.truncations {
            let _ = writeln!(out, "\n## {} truncation to {{{}}} (dimension {})", t.kind, t.weights.join(","), t.dimension);
            out.push_str(&matrix("[Δ(λ):L(μ)]", &t.weights, &t.standard_factors));
            out.push_str(&matrix("[∇(λ):L(μ)]", &t.weights, &t.costandard_factors));
            let _ = writeln!(out, "gfd L {:?}, wfd L {:?}", t.gfd_simple, t.wfd_simple);
            if let Some(n) = t.ext_pairs_checked {
                let _ = writeln!(out, "Ext agreement checked on {n} pairs");
            }
            for (w, before, after) in &t.proj_standard {
                let _ = writeln!(out, "proj Δ({w}): {before} → {after}");
            }
            if let Some(m) = t.ringel_exchange {
                let _ = writeln!(out, "corner matches Ringel dual of the dual's quotient: {}", mark(m));
            }
        }
        if let Some(a) = &self.audits {
            let _ = writeln!(out, "\n## audit: {}", if a.passed { "passed" } else { "VIOLATION" });
            let _ = writeln!(out, "sampled family: {}", a.sampled_family);
            for e in &a.entries {
                let tag = if e.conjectural { " (conjectural)" } else { "" };
                let _ = writeln!(out, "{:<8} {}{}: {}", e.status, e.name, tag, e.detail);
            }
        }
        if let Some(e) = &self.ext {
            let dims: Vec<String> = e.dims.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "\ndim Ext^i({}, {}) for i = 0..{}: {}", e.from, e.to, e.dims.len() - 1, dims.join(" "));
        }
        if let Some(s) = &self.schur {
            let parts: Vec<String> = s.lambda.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "d(({})) = {} at p = {}; {}", parts.join(","), s.d, s.p, if s.regular { "p-regular" } else { "not p-regular" });
        }
        out
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn render_verdicts(out: &mut String, verdicts: &[VerdictEntry]) {
    for v in verdicts {
        let _ = write!(out, "{:<9} {}", v.property, mark(v.holds));
        let shown: Vec<String> = v
            .witnesses
            .iter()
            .take(4)
            .map(|w| match &w.mu {
                Some(mu) => format!("({}, {}) {:?}", mu, w.lambda, w.values),
                None => format!("{} {:?}", w.lambda, w.values),
            })
            .collect();
        if !shown.is_empty() {
            let _ = write!(out, "  witnesses: {}", shown.join("; "));
        }
        out.push('\n');
    }
}

fn matrix(title: &str, weights: &[String], m: &[Vec<usize>]) -> String {
    let mut header = vec![title.to_string()];
    header.extend(weights.iter().cloned());
    let rows: Vec<Vec<String>> = weights
        .iter()
        .zip(m)
        .map(|(w, row)| {
            let mut r = vec![w.clone()];
            r.extend(row.iter().map(usize::to_string));
            r
        })
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    table(&header, &rows)
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(width(c));
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{}{}", c, " ".repeat(w - width(c)))).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}
