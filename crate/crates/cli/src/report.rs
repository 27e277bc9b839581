use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

/// Seed, output format and the command's bounds, echoed into the report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub format: Format,
    #[serde(flatten)]
    pub bounds: Map<String, Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub index: usize,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, config: RunConfig) -> Self {
        Self {
            command: command.to_string(),
            config,
            cases: Vec::new(),
            summary: Summary { passed: 0, failed: 0, total: 0 },
            wall_time_ms: None,
        }
    }

    /// Appends a case; indices follow insertion order.
    pub fn push(&mut self, passed: bool, detail: Value) {
        self.cases.push(CaseRecord { index: self.cases.len(), passed, detail });
        if passed {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.summary.total += 1;
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let config = serde_json::to_string(&self.config).expect("config serializes");
        writeln!(out, "command  {}", self.command).unwrap();
        writeln!(out, "config   {config}").unwrap();
        writeln!(out, "{:>6}  {:<4}  detail", "case", "ok").unwrap();
        for c in &self.cases {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{:>6}  {verdict}  {}", c.index, c.detail).unwrap();
        }
        write!(out, "passed {}/{}", self.summary.passed, self.summary.total).unwrap();
        if let Some(ms) = self.wall_time_ms {
            write!(out, "  ({ms} ms)").unwrap();
        }
        out.push('\n');
        out
    }
}
