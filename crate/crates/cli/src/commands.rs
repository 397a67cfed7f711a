//! Subcommand implementations. Each returns the report, its text rendering
//! and whether a property, identity or audit violation was found.

use qha_core::highest_weight::{HighestWeight, Property, PropertyVerdict};
use qha_core::homodim::ext_dims;
use qha_core::schur::{d_lambda, is_regular, Partition};
use qha_core::tilting::{fingerprint, ringel_dual, verify_truncation_duality, Fingerprint};

use crate::cli::Command;
use crate::corpus::{self, CORPUS};
use crate::error::CliError;
use crate::expr::ModuleExpr;
use crate::report::*;
use crate::session::Session;

pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub violation: bool,
}

impl Outcome {
    fn new(report: Report, violation: bool) -> Self {
        let text = report.render();
        Outcome { report, text, violation }
    }

    pub fn exit_code(&self) -> i32 {
        if self.violation {
            2
        } else {
            0
        }
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Analyze { file } => with_session(file, analyze),
        Command::Dims { file } => with_session(file, |s| {
            let mut r = start(s, "dims");
            r.dimensions = Some(dimensions_section(s)?);
            Ok(Outcome::new(r, false))
        }),
        Command::Ext { file, from, to, max_degree } => with_session(file, |s| ext(s, from, to, *max_degree)),
        Command::Ringel { file } => with_session(file, |s| {
            let mut r = start(s, "ringel");
            let section = ringel_section(s)?;
            let violation = !ringel_holds(&section);
            r.ringel = Some(section);
            Ok(Outcome::new(r, violation))
        }),
        Command::Truncate { file, keep, corner } => with_session(file, |s| {
            let mut r = start(s, "truncate");
            let section = match (keep, corner) {
                (Some(list), _) => saturated_section(s, &s.weight_list(list)?)?,
                (None, Some(list)) => corner_section(s, &s.weight_list(list)?)?,
                (None, None) => return Err(CliError::Input("one of --keep or --corner is required".into())),
            };
            let violation = section.ringel_exchange == Some(false)
                || section.proj_standard.iter().any(|(_, before, after)| before != after);
            r.truncations.push(section);
            Ok(Outcome::new(r, violation))
        }),
        Command::Check { file, properties } => with_session(file, |s| {
            let props = properties
                .split(',')
                .map(|p| p.trim().parse::<Property>().map_err(CliError::Input))
                .collect::<Result<Vec<_>, _>>()?;
            let mut r = start(s, "check");
            let section = properties_section(s, &props)?;
            let violation = section.verdicts.iter().any(|v| !v.holds);
            r.properties = Some(section);
            Ok(Outcome::new(r, violation))
        }),
        Command::Audit { file } => with_session(file, |s| {
            let mut r = start(s, "audit");
            let section = audit_section(s)?;
            let violation = !section.passed;
            r.audits = Some(section);
            Ok(Outcome::new(r, violation))
        }),
        Command::SchurD { p, lambda } => {
            let lam: Partition = lambda.parse()?;
            let mut r = Report::new("schur-d", "");
            r.schur = Some(SchurSection {
                operation: "schur-d",
                lambda: lam.parts().to_vec(),
                p: *p,
                d: d_lambda(&lam, *p)?,
                regular: is_regular(&lam, *p)?,
            });
            Ok(Outcome::new(r, false))
        }
        Command::Corpus { name } => {
            let report = Report::new("corpus", name.as_deref().unwrap_or(""));
            let text = match name {
                Some(n) => corpus::find(n).ok_or_else(|| CliError::Input(format!("no bundled example {n:?}")))?.text.into(),
                None => CORPUS.iter().map(|e| format!("{}\n", e.name)).collect(),
            };
            Ok(Outcome { report, text, violation: false })
        }
    }
}

fn with_session(file: &str, f: impl FnOnce(&Session) -> Result<Outcome, CliError>) -> Result<Outcome, CliError> {
    let (name, text) = corpus::load(file)?;
    f(&Session::open(&name, &text)?)
}

/// A report holding the algebra and certificate sections.
fn start(s: &Session, command: &str) -> Report {
    let mut r = Report::new(command, &s.name);
    r.algebra = Some(algebra_section(s));
    r.certificate = Some(certificate_section(&s.hw));
    r
}

fn analyze(s: &Session) -> Result<Outcome, CliError> {
    let mut r = start(s, "analyze");
    if !s.hw.is_certified() {
        return Ok(Outcome::new(r, true));
    }
    r.tables = Some(tables_section(s)?);
    r.dimensions = Some(dimensions_section(s)?);
    r.properties = Some(properties_section(s, &Property::ALL)?);
    let ringel = ringel_section(s)?;
    let audits = audit_section(s)?;
    let violation = !ringel_holds(&ringel) || !audits.passed;
    r.ringel = Some(ringel);
    r.audits = Some(audits);
    Ok(Outcome::new(r, violation))
}

fn ext(s: &Session, from: &str, to: &str, max_degree: Option<usize>) -> Result<Outcome, CliError> {
    let (from, to): (ModuleExpr, ModuleExpr) = (from.parse()?, to.parse()?);
    let (m, n) = (s.module(&from)?, s.module(&to)?);
    let degree = max_degree.unwrap_or_else(|| s.hw.depth());
    let mut r = Report::new("ext", &s.name);
    r.ext = Some(ExtSection { operation: "ext", from: from.to_string(), to: to.to_string(), dims: ext_dims(&m, &n, degree) });
    Ok(Outcome::new(r, false))
}

fn algebra_section(s: &Session) -> AlgebraSection {
    let p = &s.presentation;
    AlgebraSection {
        operation: "analyze",
        field: p.field().to_string(),
        dimension: s.algebra().dim(),
        basis_by_length: s.path_algebra.layer_counts(),
        weights: s.algebra().weights().to_vec(),
        arrows: p.quiver().arrows().len(),
        relations: p.relations().len(),
        has_duality: p.duality().is_some(),
    }
}

fn certificate_section(hw: &HighestWeight) -> CertificateSection {
    let c = hw.certificate();
    CertificateSection {
        operation: "analyze",
        holds: c.holds(),
        multiplicity_one: c.multiplicity_one,
        algebra_dimension: c.algebra_dim,
        standard_costandard_sum: c.standard_costandard_sum,
        projectives_filtered: c.projectives_filtered,
        failures: c.failures.clone(),
    }
}

fn tables_section(s: &Session) -> Result<TablesSection, CliError> {
    s.require_certified()?;
    let hw = &s.hw;
    let k = hw.num_weights();
    let a = s.algebra();
    Ok(TablesSection {
        operation: "analyze",
        weights: a.weights().to_vec(),
        standard_factors: hw.standard_factors(),
        costandard_factors: hw.costandard_factors(),
        projective_standard: hw
            .projective_multiplicities()
            .ok_or_else(|| CliError::Internal("certified algebra without Δ-filtered projectives".into()))?,
        cartan: (0..k).map(|l| (0..k).map(|m| a.block_basis(l, m).len()).collect()).collect(),
    })
}

fn dimensions_section(s: &Session) -> Result<DimensionsSection, CliError> {
    s.require_certified()?;
    let hw = &s.hw;
    let t = hw.dimension_table()?;
    let rows = (0..hw.num_weights())
        .map(|l| {
            Ok(DimensionRow {
                weight: s.label(l),
                gfd_simple: t.gfd_simple[l],
                wfd_simple: t.wfd_simple[l],
                gfd_standard: t.gfd_standard[l],
                wfd_standard: hw.wfd(hw.standard(l))?,
                gfd_costandard: hw.gfd(hw.costandard(l))?,
                wfd_costandard: t.wfd_costandard[l],
                proj_standard: t.proj_standard[l],
                inj_standard: hw.inj(hw.standard(l))?,
                proj_costandard: hw.proj(hw.costandard(l))?,
                inj_costandard: t.inj_costandard[l],
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(DimensionsSection {
        operation: "dims",
        rows,
        global_dimension: t.global_dimension,
        gfd_algebra: t.gfd_algebra,
        wfd_algebra: t.wfd_algebra,
    })
}

fn verdict_entry(s: &Session, v: &PropertyVerdict) -> VerdictEntry {
    VerdictEntry {
        property: v.property.name().to_string(),
        holds: v.holds,
        witnesses: v
            .witnesses
            .iter()
            .map(|w| WitnessEntry { lambda: s.label(w.lambda), mu: w.mu.map(|m| s.label(m)), values: w.values.clone() })
            .collect(),
        blocks: v.block_verdicts.iter().map(|(ws, holds)| BlockVerdict { weights: s.labels(ws), holds: *holds }).collect(),
    }
}

fn properties_section(s: &Session, props: &[Property]) -> Result<PropertiesSection, CliError> {
    s.require_certified()?;
    let hw = &s.hw;
    let minimized = hw.minimized_order()?;
    let verdicts = props.iter().map(|&p| Ok(verdict_entry(s, &hw.check_property(p)?))).collect::<Result<_, CliError>>()?;
    let given_order_verdicts = if minimized == hw.poset() {
        Vec::new()
    } else {
        props
            .iter()
            .map(|&p| Ok(verdict_entry(s, &hw.check_property_for_order(hw.poset(), p)?)))
            .collect::<Result<_, CliError>>()?
    };
    Ok(PropertiesSection {
        operation: "check",
        order: minimized.relations().into_iter().map(|(a, b)| [s.label(a), s.label(b)]).collect(),
        blocks: hw.blocks().iter().map(|b| s.labels(b)).collect(),
        verdicts,
        given_order_verdicts,
    })
}

fn fingerprint_entry(f: Fingerprint) -> FingerprintEntry {
    FingerprintEntry { weights: f.weights, standard: f.standard, costandard: f.costandard, cartan: f.cartan, order: f.order }
}

fn ringel_section(s: &Session) -> Result<RingelSection, CliError> {
    let rd = s.ringel()?;
    let tilting = rd
        .tilting
        .summands
        .iter()
        .map(|t| TiltingEntry {
            weight: s.label(t.weight),
            dimension: t.module.dim(),
            composition_factors: t.module.dims().to_vec(),
            standard_multiplicities: t.delta_multiplicities.clone(),
            extension_steps: t.extension_steps.iter().map(|&(m, d)| (s.label(m), d)).collect(),
        })
        .collect();
    let identities = rd
        .verify_identities(s.sigma.is_some())?
        .into_iter()
        .map(|c| IdentityEntry { holds: c.holds(), weight: c.weight.map(|w| s.label(w)), name: c.name, lhs: c.lhs, rhs: c.rhs })
        .collect();
    let functor = rd
        .verify_functor()?
        .into_iter()
        .map(|c| FunctorEntry {
            weight: s.label(c.weight),
            costandard_to_standard: c.costandard_to_standard,
            tilting_to_projective: c.tilting_to_projective,
            injective_to_tilting: c.injective_to_tilting,
        })
        .collect();
    let source = fingerprint(&rd.source);
    let double = fingerprint(&ringel_dual(&rd.dual)?.dual);
    Ok(RingelSection {
        operation: "ringel",
        dual_dimension: rd.algebra().dim(),
        tilting,
        identities,
        functor,
        double_dual_matches: double == source,
        source_fingerprint: fingerprint_entry(source),
        dual_fingerprint: fingerprint_entry(fingerprint(&rd.dual)),
    })
}

fn ringel_holds(r: &RingelSection) -> bool {
    r.double_dual_matches
        && r.identities.iter().all(|i| i.holds)
        && r.functor.iter().all(|f| f.costandard_to_standard && f.tilting_to_projective && f.injective_to_tilting)
}

fn truncation_base(kind: &'static str, hw: &HighestWeight) -> Result<TruncationSection, CliError> {
    let t = hw.dimension_table()?;
    Ok(TruncationSection {
        operation: "truncate",
        kind,
        weights: hw.algebra().weights().to_vec(),
        dimension: hw.algebra().dim(),
        standard_factors: hw.standard_factors(),
        costandard_factors: hw.costandard_factors(),
        gfd_simple: t.gfd_simple.clone(),
        wfd_simple: t.wfd_simple.clone(),
        ext_pairs_checked: None,
        proj_standard: Vec::new(),
        ringel_exchange: None,
    })
}

fn saturated_section(s: &Session, pi: &[usize]) -> Result<TruncationSection, CliError> {
    s.require_certified()?;
    let t = s.hw.truncate_saturated(pi)?;
    let mut sec = truncation_base("saturated", &t.hw)?;
    sec.ext_pairs_checked = Some(t.ext_pairs_checked);
    Ok(sec)
}

fn corner_section(s: &Session, gamma: &[usize]) -> Result<TruncationSection, CliError> {
    s.require_certified()?;
    let t = s.hw.truncate_corner(gamma)?;
    let mut sec = truncation_base("corner", &t.hw)?;
    let small = t.hw.algebra().weights();
    for &g in gamma {
        let label = s.label(g);
        let i = small.iter().position(|w| *w == label).ok_or_else(|| CliError::Internal(format!("corner lost weight {label}")))?;
        sec.proj_standard.push((label, s.hw.proj_standard(g)?, t.hw.proj_standard(i)?));
    }
    sec.ringel_exchange = Some(verify_truncation_duality(s.ringel()?, gamma)?.matches());
    Ok(sec)
}

fn audit_section(s: &Session) -> Result<AuditSection, CliError> {
    s.require_certified()?;
    let a = s.hw.audit_theorems(s.sigma.as_ref())?;
    Ok(AuditSection {
        operation: "audit",
        passed: a.passed(),
        sampled_family: a.sampled_family.clone(),
        entries: a
            .entries
            .iter()
            .map(|e| AuditEntry { name: e.name.clone(), status: e.status.to_string(), conjectural: e.conjectural, detail: e.detail.clone() })
            .collect(),
    })
}
