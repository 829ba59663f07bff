//! Database schema model and JSON loading.
//!
//! Schema files are JSON with top-level `name`, `tables` (each
//! `{name, columns: [{name, type, values}]}`) and `foreign_keys` (each
//! `{from: "table.column", to: "table.column"}`).

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("failed to read schema file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed schema file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid schema: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnType {
    Text,
    Number,
    Time,
}

impl fmt::Display for ColumnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ColumnType::Text => "text",
            ColumnType::Number => "number",
            ColumnType::Time => "time",
        };
        f.write_str(name)
    }
}

impl ColumnType {
    /// Suffix used when naming the column's value non-terminal.
    pub fn value_suffix(self) -> &'static str {
        match self {
            ColumnType::Text => "string",
            ColumnType::Number => "number",
            ColumnType::Time => "time",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Column {
    pub name: String,
    #[serde(rename = "type")]
    pub column_type: ColumnType,
    #[serde(default)]
    pub values: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<Column>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForeignKey {
    pub from_table: String,
    pub from_column: String,
    pub to_table: String,
    pub to_column: String,
}

#[derive(Debug, Clone)]
pub struct Schema {
    pub name: String,
    pub tables: Vec<Table>,
    pub foreign_keys: Vec<ForeignKey>,
}

#[derive(Deserialize)]
struct RawForeignKey {
    from: String,
    to: String,
}

#[derive(Deserialize)]
struct RawSchema {
    name: String,
    tables: Vec<Table>,
    #[serde(default)]
    foreign_keys: Vec<RawForeignKey>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

fn split_endpoint(endpoint: &str) -> Result<(String, String), SchemaError> {
    let mut parts = endpoint.splitn(2, '.');
    match (parts.next(), parts.next()) {
        (Some(t), Some(c)) if !t.is_empty() && !c.is_empty() => {
            Ok((t.to_string(), c.to_string()))
        }
        _ => Err(SchemaError::Invalid(format!(
            "foreign key endpoint '{endpoint}' is not of the form table.column"
        ))),
    }
}

impl Schema {
    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn column(&self, table: &str, column: &str) -> Option<&Column> {
        self.table(table).and_then(|t| t.column(column))
    }

    /// True when a foreign key connects the two columns in either direction.
    pub fn is_fk_pair(&self, a: (&str, &str), b: (&str, &str)) -> bool {
        self.foreign_keys.iter().any(|fk| {
            let from = (fk.from_table.as_str(), fk.from_column.as_str());
            let to = (fk.to_table.as_str(), fk.to_column.as_str());
            (from == a && to == b) || (from == b && to == a)
        })
    }

    fn validate(&self) -> Result<(), SchemaError> {
        let invalid = |msg: String| Err(SchemaError::Invalid(msg));
        for (i, table) in self.tables.iter().enumerate() {
            if !is_identifier(&table.name) {
                return invalid(format!("table name '{}' is not a lowercase identifier", table.name));
            }
            if self.tables[..i].iter().any(|t| t.name == table.name) {
                return invalid(format!("duplicate table name '{}'", table.name));
            }
            if table.columns.is_empty() {
                return invalid(format!("table '{}' has no columns", table.name));
            }
            for (j, column) in table.columns.iter().enumerate() {
                if !is_identifier(&column.name) {
                    return invalid(format!(
                        "column name '{}.{}' is not a lowercase identifier",
                        table.name, column.name
                    ));
                }
                if table.columns[..j].iter().any(|c| c.name == column.name) {
                    return invalid(format!(
                        "duplicate column name '{}.{}'",
                        table.name, column.name
                    ));
                }
                for (k, value) in column.values.iter().enumerate() {
                    if column.values[..k].iter().any(|v| v == value) {
                        return invalid(format!(
                            "duplicate value '{}' in column {}.{}",
                            value, table.name, column.name
                        ));
                    }
                    let is_integer = !value.is_empty()
                        && value.chars().all(|c| c.is_ascii_digit());
                    if column.column_type != ColumnType::Text && !is_integer {
                        return invalid(format!(
                            "value '{}' in {} column {}.{} is not a decimal integer",
                            value, column.column_type, table.name, column.name
                        ));
                    }
                }
            }
        }
        for fk in &self.foreign_keys {
            if self.column(&fk.from_table, &fk.from_column).is_none() {
                return invalid(format!(
                    "foreign key references missing column {}.{}",
                    fk.from_table, fk.from_column
                ));
            }
            if self.column(&fk.to_table, &fk.to_column).is_none() {
                return invalid(format!(
                    "foreign key references missing column {}.{}",
                    fk.to_table, fk.to_column
                ));
            }
        }
        Ok(())
    }
}

/// Parses schema JSON text and verifies every schema invariant.
pub fn parse_schema(text: &str) -> Result<Schema, SchemaError> {
    let raw: RawSchema = serde_json::from_str(text)?;
    let mut foreign_keys = Vec::with_capacity(raw.foreign_keys.len());
    for fk in raw.foreign_keys {
        let (from_table, from_column) = split_endpoint(&fk.from)?;
        let (to_table, to_column) = split_endpoint(&fk.to)?;
        foreign_keys.push(ForeignKey {
            from_table,
            from_column,
            to_table,
            to_column,
        });
    }
    let schema = Schema {
        name: raw.name,
        tables: raw.tables,
        foreign_keys,
    };
    schema.validate()?;
    Ok(schema)
}

/// Loads and validates a schema file.
pub fn load_schema(path: &Path) -> Result<Schema, SchemaError> {
    parse_schema(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_schema_loads() {
        let schema = parse_schema(
            r#"{"name": "mini", "tables": [{"name": "city", "columns": [
                {"name": "city_name", "type": "text", "values": ["BOSTON"]}]}],
                "foreign_keys": []}"#,
        )
        .unwrap();
        assert_eq!(schema.tables.len(), 1);
        assert_eq!(schema.tables[0].columns.len(), 1);
        assert_eq!(schema.column("city", "city_name").unwrap().column_type, ColumnType::Text);
    }

    #[test]
    fn foreign_key_to_missing_table_is_invalid() {
        let err = parse_schema(
            r#"{"name": "bad", "tables": [{"name": "city", "columns": [
                {"name": "city_code", "type": "text", "values": []}]}],
                "foreign_keys": [{"from": "city.city_code", "to": "airport.city_code"}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SchemaError::Invalid(_)));
    }

    #[test]
    fn duplicate_table_name_is_invalid() {
        let err = parse_schema(
            r#"{"name": "bad", "tables": [
                {"name": "city", "columns": [{"name": "a", "type": "text", "values": []}]},
                {"name": "city", "columns": [{"name": "b", "type": "text", "values": []}]}],
                "foreign_keys": []}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SchemaError::Invalid(_)));
    }

    #[test]
    fn number_values_must_be_integers() {
        let err = parse_schema(
            r#"{"name": "bad", "tables": [{"name": "flight", "columns": [
                {"name": "cost", "type": "number", "values": ["cheap"]}]}],
                "foreign_keys": []}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SchemaError::Invalid(_)));
    }

    #[test]
    fn fk_pair_lookup_is_symmetric() {
        let schema = parse_schema(
            r#"{"name": "mini", "tables": [
                {"name": "city", "columns": [{"name": "city_code", "type": "text", "values": []}]},
                {"name": "airport_service", "columns": [{"name": "city_code", "type": "text", "values": []}]}],
                "foreign_keys": [{"from": "airport_service.city_code", "to": "city.city_code"}]}"#,
        )
        .unwrap();
        assert!(schema.is_fk_pair(("airport_service", "city_code"), ("city", "city_code")));
        assert!(schema.is_fk_pair(("city", "city_code"), ("airport_service", "city_code")));
        assert!(!schema.is_fk_pair(("city", "city_code"), ("city", "city_code")));
    }
}
