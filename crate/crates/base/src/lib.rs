//! Shared foundation for the sqlgram workspace: SQL and utterance
//! tokenization, the database schema model, the corpus file format, and the
//! dialect switch.
//!
//! Everything here is deliberately independent of the grammar and decoder so
//! that the SQL validator can be built against this crate alone.

pub mod corpus;
pub mod dialect;
pub mod schema;
pub mod token;

pub use corpus::{load_corpus, parse_corpus, CorpusError, CorpusExample};
pub use dialect::Dialect;
pub use schema::{load_schema, Column, ColumnType, ForeignKey, Schema, SchemaError, Table};
pub use token::{normalize_sql, tokenize_sql, tokenize_utterance, TokenizeError};
