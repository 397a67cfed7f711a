use qha_core::highest_weight::HwError;
use qha_core::schur::SchurError;
use qha_core::tilting::TiltingError;
use thiserror::Error;

use crate::format::FormatError;

/// Failures of a CLI run, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Input(String),
    #[error("not quasi-hereditary for the given order: {0}")]
    NotQuasiHereditary(String),
    #[error("internal cross-check failed: {0}")]
    Internal(String),
}

impl CliError {
    /// 1 for bad input, 2 for a violated property, 3 for an internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Format(_) | CliError::Input(_) => 1,
            CliError::NotQuasiHereditary(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Format(e) => e.code(),
            CliError::Input(_) => "E100",
            CliError::NotQuasiHereditary(_) => "E200",
            CliError::Internal(_) => "E300",
        }
    }
}

impl From<HwError> for CliError {
    fn from(e: HwError) -> Self {
        match e {
            HwError::NotCertified(msg) => CliError::NotQuasiHereditary(msg),
            HwError::Inconsistent(_) | HwError::Module(_) | HwError::Algebra(_) => CliError::Internal(e.to_string()),
            HwError::Size { .. }
            | HwError::UnknownWeight(_)
            | HwError::Cycle(_)
            | HwError::NotSaturated { .. }
            | HwError::NotUpwardClosed { .. }
            | HwError::EmptySet => CliError::Input(e.to_string()),
        }
    }
}

impl From<TiltingError> for CliError {
    fn from(e: TiltingError) -> Self {
        match e {
            TiltingError::HighestWeight(h) => h.into(),
            TiltingError::NotNablaFiltered => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<SchurError> for CliError {
    fn from(e: SchurError) -> Self {
        CliError::Input(e.to_string())
    }
}
