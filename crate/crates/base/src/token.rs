//! Tokenization and case normalization.
//!
//! SQL text is split on whitespace and the punctuation set
//! `( ) , . ; = < > * / + -`, with `>=` and `<=` kept as single tokens and
//! single-quoted strings kept intact including internal spaces. Utterances
//! use the same splitter except that `'` is an ordinary word character and
//! every token is lowercased.
//!
//! Case convention for SQL tokens: keywords uppercase, identifiers lowercase,
//! quoted value content uppercase. A handful of keywords exist in the grammar
//! in both cases (`min`/`MIN`, `not`/`NOT`, ...); those keep an exactly
//! lowercase spelling and normalize to uppercase otherwise. `true`/`false`
//! exist only lowercase.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TokenizeError {
    #[error("unterminated single-quoted string starting at byte {position}")]
    UnterminatedQuote { position: usize },
}

const SINGLE_CHAR_PUNCT: &[char] = &['(', ')', ',', '.', ';', '=', '*', '/', '+', '-'];

fn is_upper_keyword(upper: &str) -> bool {
    matches!(
        upper,
        "SELECT"
            | "DISTINCT"
            | "FROM"
            | "WHERE"
            | "GROUP"
            | "BY"
            | "ORDER"
            | "LIMIT"
            | "JOIN"
            | "ON"
            | "IN"
            | "BETWEEN"
            | "AND"
            | "OR"
            | "NULL"
            | "ALL"
            | "ANY"
            | "ASC"
            | "DESC"
            | "AS"
    )
}

fn is_dual_case_keyword(lower: &str) -> bool {
    matches!(lower, "not" | "is" | "min" | "max" | "count")
}

fn normalize_sql_word(raw: &str) -> String {
    if raw.starts_with(|c: char| c.is_ascii_digit()) {
        return raw.to_string();
    }
    let upper = raw.to_ascii_uppercase();
    if is_upper_keyword(&upper) {
        return upper;
    }
    let lower = raw.to_ascii_lowercase();
    if is_dual_case_keyword(&lower) {
        return if raw == lower { lower } else { upper };
    }
    lower
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Sql,
    Utterance,
}

fn flush(word: &mut String, tokens: &mut Vec<String>, mode: Mode) {
    if word.is_empty() {
        return;
    }
    let normalized = match mode {
        Mode::Sql => normalize_sql_word(word),
        Mode::Utterance => word.to_lowercase(),
    };
    tokens.push(normalized);
    word.clear();
}

fn tokenize(text: &str, mode: Mode) -> Result<Vec<String>, TokenizeError> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        if c.is_whitespace() {
            flush(&mut word, &mut tokens, mode);
        } else if c == '\'' && mode == Mode::Sql {
            flush(&mut word, &mut tokens, mode);
            let mut literal = String::new();
            let mut closed = false;
            for (_, inner) in chars.by_ref() {
                if inner == '\'' {
                    closed = true;
                    break;
                }
                literal.push(inner);
            }
            if !closed {
                return Err(TokenizeError::UnterminatedQuote { position: pos });
            }
            tokens.push(format!("'{}'", literal.to_ascii_uppercase()));
        } else if c == '<' || c == '>' {
            flush(&mut word, &mut tokens, mode);
            if matches!(chars.peek(), Some(&(_, '='))) {
                chars.next();
                tokens.push(format!("{c}="));
            } else {
                tokens.push(c.to_string());
            }
        } else if SINGLE_CHAR_PUNCT.contains(&c) {
            flush(&mut word, &mut tokens, mode);
            tokens.push(c.to_string());
        } else {
            word.push(c);
        }
    }
    flush(&mut word, &mut tokens, mode);
    Ok(tokens)
}

/// Splits SQL text into normalized tokens.
pub fn tokenize_sql(text: &str) -> Result<Vec<String>, TokenizeError> {
    tokenize(text, Mode::Sql)
}

/// Splits a natural-language utterance into lowercase tokens. Never fails:
/// quotes carry no special meaning here.
pub fn tokenize_utterance(text: &str) -> Vec<String> {
    tokenize(text, Mode::Utterance).expect("utterance tokenization cannot fail")
}

/// Canonical single-space rendering of SQL text: tokenize, then join.
pub fn normalize_sql(text: &str) -> Result<String, TokenizeError> {
    Ok(tokenize_sql(text)?.join(" "))
}
