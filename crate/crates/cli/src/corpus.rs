//! Presentations shipped with the binary, addressable by name.

use std::path::Path;

use crate::error::CliError;

pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry { name: "example_5_3_2", text: include_str!("../corpus/example_5_3_2.toml") },
    CorpusEntry { name: "example_5_3_3", text: include_str!("../corpus/example_5_3_3.toml") },
    CorpusEntry { name: "a1_s1_witness", text: include_str!("../corpus/a1_s1_witness.toml") },
    CorpusEntry { name: "semisimple_4", text: include_str!("../corpus/semisimple_4.toml") },
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    let name = name.strip_suffix(".toml").unwrap_or(name);
    CORPUS.iter().find(|e| e.name == name)
}

/// Reads `arg` as a file path, falling back to a bundled example of that name.
pub fn load(arg: &str) -> Result<(String, String), CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        let name = path.file_stem().map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((name, text));
    }
    match find(arg) {
        Some(e) => Ok((e.name.to_string(), e.text.to_string())),
        None => Err(CliError::Input(format!(
            "{arg}: no such file or bundled example (bundled: {})",
            CORPUS.iter().map(|e| e.name).collect::<Vec<_>>().join(", ")
        ))),
    }
}
