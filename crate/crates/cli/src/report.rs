use std::fmt;

use serde_json::{json, Value as Json};

/// What a command prints: text lines for humans, a JSON value for `--json`,
/// and the first failed check when verification did not pass.
#[derive(Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub json: Json,
    pub failure: Option<String>,
}

impl Report {
    pub fn new(json: Json) -> Self {
        Report { lines: Vec::new(), json, failure: None }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn render(&self, as_json: bool, timestamp: Option<u64>) -> String {
        if as_json {
            let mut v = self.json.clone();
            if let Json::Object(map) = &mut v {
                map.insert("ok".into(), json!(self.failure.is_none()));
                if let Some(f) = &self.failure {
                    map.insert("failure".into(), json!(f));
                }
                if let Some(t) = timestamp {
                    map.insert("generated_at".into(), json!(t));
                }
            }
            let mut s = serde_json::to_string_pretty(&v).expect("reports serialise");
            s.push('\n');
            s
        } else {
            let mut s = String::new();
            if let Some(t) = timestamp {
                s.push_str(&format!("generated_at = {t}\n"));
            }
            for l in &self.lines {
                s.push_str(l);
                s.push('\n');
            }
            s
        }
    }
}

/// Failures of a command run, mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable files, malformed input: exit 2.
    Usage(String),
    /// A checked property does not hold: exit 1.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<bicrossed::Error> for CliError {
    fn from(e: bicrossed::Error) -> Self {
        use bicrossed::Error as E;
        match e {
            E::AxiomViolation(_) | E::Singular(_) => CliError::Verification(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
