use std::fmt::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A published value.
    Published,
    /// Computed independently of the code under test.
    Derived,
    /// Follows from the construction itself.
    Structural,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Published => "published",
            Source::Derived => "derived",
            Source::Structural => "structural",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub source: Source,
    pub actual: String,
    pub pass: bool,
    /// Extra context for a failure, such as an insufficient search depth.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

impl Check {
    /// Passes iff the rendered values are identical.
    pub fn compare(
        name: impl Into<String>,
        source: Source,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            source,
            actual,
            status: None,
        }
    }

    pub fn with_status(mut self, status: impl Into<String>) -> Self {
        self.status = Some(status.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub config: RunConfig,
    pub results: Value,
    pub checks: Vec<Check>,
    /// Wall-clock time; only recorded on request so that reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: Vec<String>, config: RunConfig) -> Self {
        Report {
            command,
            config,
            results: Value::Null,
            checks: Vec::new(),
            elapsed_ms: None,
            text: String::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn failing(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "$ jones2 {}", self.command.join(" ")).unwrap();
        if !self.text.is_empty() {
            out.push_str(&self.text);
            if !self.text.ends_with('\n') {
                out.push('\n');
            }
        }
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            out.push('\n');
            for c in &self.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                write!(out, "{tag}  {:<width$}  [{}]", c.name, c.source).unwrap();
                if c.pass {
                    writeln!(out, "  {}", c.actual).unwrap();
                } else {
                    writeln!(out, "  expected {} got {}", c.expected, c.actual).unwrap();
                }
                if let Some(s) = &c.status {
                    writeln!(out, "      {s}").unwrap();
                }
            }
            let passed = self.checks.iter().filter(|c| c.pass).count();
            writeln!(out, "\n{passed}/{} checks passed", self.checks.len()).unwrap();
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "elapsed {ms} ms").unwrap();
        }
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            crate::config::Format::Json => self.to_json(),
            crate::config::Format::Text => self.to_text(),
        }
    }
}
