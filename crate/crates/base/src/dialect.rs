//! Dialect switch shared by the grammar builder and the SQL validator.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dialect {
    Atis,
    Spider,
}

impl Dialect {
    pub fn name(self) -> &'static str {
        match self {
            Dialect::Atis => "atis",
            Dialect::Spider => "spider",
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dialect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "atis" => Ok(Dialect::Atis),
            "spider" => Ok(Dialect::Spider),
            other => Err(format!("unknown dialect '{other}' (expected atis or spider)")),
        }
    }
}
