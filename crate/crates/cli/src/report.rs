use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExhausted,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::BudgetExhausted => 3,
        }
    }

    /// The worse of two statuses.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::BudgetExhausted, _) | (_, Status::BudgetExhausted) => Status::BudgetExhausted,
            _ => Status::Pass,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::BudgetExhausted => "budget exhausted",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 of the command line followed by every input file.
    pub input_digest: String,
    pub status: Status,
    pub budget: u64,
    pub elapsed_ms: u128,
    pub results: serde_json::Value,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(self).expect("reports serialize") + "\n";
        }
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "input: sha256:{}", self.input_digest).unwrap();
        for line in &self.lines {
            writeln!(out, "{line}").unwrap();
        }
        writeln!(out, "status: {}", self.status.as_str()).unwrap();
        writeln!(out, "elapsed: {} ms", self.elapsed_ms).unwrap();
        out
    }
}

pub fn digest(command: &str, inputs: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    for bytes in inputs {
        h.update([0]);
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

/// Results of one command before timing and digest are attached.
pub struct Body {
    pub status: Status,
    pub results: serde_json::Value,
    pub lines: Vec<String>,
}
