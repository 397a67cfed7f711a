//! One loaded presentation and the analysis state derived from it.

use std::sync::{Arc, OnceLock};

use qha_core::algebra::{AntiAutomorphism, Algebra};
use qha_core::highest_weight::{HighestWeight, Poset};
use qha_core::modcat::{injective, projective, simple, Module};
use qha_core::quiver::{build_algebra, induced_duality, PathAlgebra, Presentation};
use qha_core::tilting::{indecomposable_tilting, ringel_dual, RingelDual};

use crate::error::CliError;
use crate::expr::{Kind, ModuleExpr};
use crate::format::PresentationFile;

pub struct Session {
    pub name: String,
    pub presentation: Presentation,
    pub path_algebra: PathAlgebra,
    pub sigma: Option<AntiAutomorphism>,
    pub hw: HighestWeight,
    ringel: OnceLock<RingelDual>,
}

impl Session {
    pub fn open(name: &str, text: &str) -> Result<Self, CliError> {
        let file = PresentationFile::from_toml(text)?;
        let presentation = file.to_presentation()?;
        let path_algebra = build_algebra(&presentation).map_err(|e| file.locate(e))?;
        let sigma = match presentation.duality() {
            Some(_) => Some(induced_duality(&path_algebra).map_err(|e| file.locate(e))?),
            None => None,
        };
        let a = path_algebra.algebra.clone();
        let poset = Poset::from_relations(a.num_weights(), presentation.order())?;
        let hw = HighestWeight::new(a, poset)?;
        Ok(Session { name: name.to_string(), presentation, path_algebra, sigma, hw, ringel: OnceLock::new() })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.hw.algebra()
    }

    pub fn label(&self, w: usize) -> String {
        self.algebra().weights()[w].clone()
    }

    pub fn labels(&self, ws: &[usize]) -> Vec<String> {
        ws.iter().map(|&w| self.label(w)).collect()
    }

    pub fn weight(&self, label: &str) -> Result<usize, CliError> {
        self.algebra()
            .weights()
            .iter()
            .position(|w| w == label)
            .ok_or_else(|| CliError::Input(format!("unknown weight {label:?}")))
    }

    /// Comma-separated weight labels.
    pub fn weight_list(&self, list: &str) -> Result<Vec<usize>, CliError> {
        let mut ws = list.split(',').map(|s| self.weight(s.trim())).collect::<Result<Vec<_>, _>>()?;
        ws.sort_unstable();
        ws.dedup();
        Ok(ws)
    }

    pub fn require_certified(&self) -> Result<(), CliError> {
        if self.hw.is_certified() {
            Ok(())
        } else {
            Err(CliError::NotQuasiHereditary(self.hw.certificate().failures.join("; ")))
        }
    }

    pub fn ringel(&self) -> Result<&RingelDual, CliError> {
        if let Some(rd) = self.ringel.get() {
            return Ok(rd);
        }
        self.require_certified()?;
        let rd = ringel_dual(&self.hw)?;
        Ok(self.ringel.get_or_init(|| rd))
    }

    pub fn module(&self, e: &ModuleExpr) -> Result<Module, CliError> {
        let w = self.weight(&e.weight)?;
        let a = self.algebra();
        let internal = |err: qha_core::modcat::ModuleError| CliError::Internal(err.to_string());
        Ok(match e.kind {
            Kind::Simple => simple(a, w).map_err(internal)?,
            Kind::Projective => projective(a, w).map_err(internal)?,
            Kind::Injective => injective(a, w).map_err(internal)?,
            Kind::Standard | Kind::Costandard | Kind::Tilting => {
                self.require_certified()?;
                match e.kind {
                    Kind::Standard => self.hw.standard(w).clone(),
                    Kind::Costandard => self.hw.costandard(w).clone(),
                    _ => indecomposable_tilting(&self.hw, w)?.module,
                }
            }
        })
    }
}
