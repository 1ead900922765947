//! The JSON request document accepted on standard input, and the error type
//! that maps onto process exit codes.

use std::fmt;
use std::io::Read;

use entcat::{parse_rational, Rational, Spectrum4};
use serde::Deserialize;

#[derive(Debug)]
pub enum CliError {
    /// Malformed or out-of-domain input. Exit code 1.
    Input(String),
    /// Theorem and oracle disagree. Exit code 2.
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Inconsistent(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Inconsistent(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl From<entcat::Error> for CliError {
    fn from(e: entcat::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Every field is optional; each command reads the ones it needs.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RequestDocument {
    pub source: Option<Vec<String>>,
    pub target: Option<Vec<String>>,
    pub p: Option<String>,
    pub catalyst: Option<Vec<String>>,
    pub denominator: Option<u32>,
    pub m0: Option<String>,
    #[serde(rename = "M0")]
    pub big_m0: Option<String>,
    pub mu: Option<String>,
    pub spectra: Option<Vec<Vec<String>>>,
}

impl RequestDocument {
    pub fn from_reader(mut reader: impl Read) -> CliResult<Self> {
        let mut text = String::new();
        reader
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("cannot read standard input: {e}")))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed request document: {e}")))
    }
}

/// The flag value if given, else the document's, else an error naming the field.
pub fn pick<T>(flag: Option<T>, doc: Option<T>, name: &str) -> CliResult<T> {
    flag.or(doc).ok_or_else(|| CliError::Input(format!("missing {name}")))
}

pub fn rational(text: &str, name: &str) -> CliResult<Rational> {
    parse_rational(text).map_err(|e| CliError::Input(format!("{name}: {e}")))
}

pub fn rationals(values: &[String], name: &str) -> CliResult<Vec<Rational>> {
    values.iter().map(|v| rational(v.trim(), name)).collect()
}

pub fn spectrum(values: &[String], name: &str) -> CliResult<Spectrum4> {
    Spectrum4::parse(values).map_err(|e| CliError::Input(format!("{name}: {e}")))
}
