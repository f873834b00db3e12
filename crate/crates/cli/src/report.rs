use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use tourney_codes::Tolerances;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub input_sha256: String,
    pub version: String,
    pub tolerances: Tolerances,
    pub results: Vec<Value>,
}

impl Report {
    pub fn new(echo: &[String], input: &str, tolerances: Tolerances, results: Vec<Value>) -> Report {
        let digest = Sha256::digest(input.as_bytes());
        Report {
            command: echo.to_vec(),
            input_sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            tolerances,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are serializable");
        s.push('\n');
        s
    }
}
