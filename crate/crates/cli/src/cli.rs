use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "qha", version, about = "Analyze quasi-hereditary algebras given by quivers with relations")]
pub struct Cli {
    /// Also write the machine-readable report to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// FILE is a presentation path or the name of a bundled example.
#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Full pipeline: certificate, tables, dimensions, properties, Ringel dual, audit.
    Analyze { file: String },
    /// Filtration, projective and injective dimensions per weight.
    Dims { file: String },
    /// Dimensions of Ext^i(FROM, TO) for i = 0..=N.
    Ext {
        file: String,
        /// L(w), Delta(w), Nabla(w), P(w), I(w) or T(w).
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Defaults to the resolution depth used for filtration dimensions.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Tilting modules, the Ringel dual and the dimension identities relating them.
    Ringel { file: String },
    /// Truncate to a saturated set (--keep) or to an upward-closed corner (--corner).
    Truncate {
        file: String,
        #[arg(long, value_name = "W,...", conflicts_with = "corner", required_unless_present = "corner")]
        keep: Option<String>,
        #[arg(long, value_name = "W,...")]
        corner: Option<String>,
    },
    /// Evaluate properties; exits 2 if any fails.
    Check {
        file: String,
        #[arg(long, default_value = "A,B,C,D,E,strongA")]
        properties: String,
    },
    /// Run the theorem audit; exits 2 on a violation.
    Audit { file: String },
    /// d(λ) and p-regularity of a partition.
    SchurD {
        #[arg(long)]
        p: u64,
        #[arg(long, value_name = "a,b,...")]
        lambda: String,
    },
    /// List the bundled examples, or print one.
    Corpus { name: Option<String> },
}
