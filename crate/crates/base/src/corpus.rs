//! Corpus file loading. Corpora are JSON lines, one example per line:
//! `{"interaction_id": str, "turn": int, "utterance": str, "sql": [str, ...]}`.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("failed to read corpus file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed corpus line {line}: {source}")]
    Parse {
        line: usize,
        source: serde_json::Error,
    },
}

#[derive(Debug, Clone, Deserialize)]
pub struct CorpusExample {
    pub interaction_id: String,
    pub turn: u32,
    pub utterance: String,
    pub sql: Vec<String>,
}

/// Parses JSON-lines corpus text. Blank lines are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusExample>, CorpusError> {
    let mut examples = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let example = serde_json::from_str(line)
            .map_err(|source| CorpusError::Parse { line: idx + 1, source })?;
        examples.push(example);
    }
    Ok(examples)
}

/// Loads a corpus file.
pub fn load_corpus(path: &Path) -> Result<Vec<CorpusExample>, CorpusError> {
    parse_corpus(&fs::read_to_string(path)?)
}
