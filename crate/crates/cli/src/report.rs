//! Verdict records, printed as plain text or one JSON object per line.

use std::collections::BTreeMap;

use rees_core::decide::Verdict;
use rees_core::poly::format_evaluation;
use rees_core::{Polynomial, ReesSemigroup};
use serde::Serialize;

use crate::args::Format;

#[derive(Serialize, Debug)]
pub struct VerdictRecord {
    pub command: String,
    pub inputs: Vec<String>,
    pub outcome: &'static str,
    pub method: &'static str,
    /// Evaluation supporting the outcome, when there is one.
    pub witness: Option<BTreeMap<String, String>>,
    /// Value of each input polynomial under the witness.
    pub values: Option<Vec<String>>,
    pub explanation: Vec<String>,
}

impl VerdictRecord {
    pub fn new(command: &str, inputs: Vec<String>, v: &Verdict, s: &ReesSemigroup, polys: &[&Polynomial]) -> Self {
        let witness = v.outcome.witness();
        VerdictRecord {
            command: command.to_string(),
            inputs,
            outcome: v.outcome.kind(),
            method: v.method.name(),
            witness: witness.map(|e| e.iter().map(|(k, x)| (k.name().to_string(), x.to_string())).collect()),
            values: witness.map(|e| {
                polys
                    .iter()
                    .map(|p| s.evaluate(p, e).map_or_else(|err| format!("error: {}", err), |x| x.to_string()))
                    .collect()
            }),
            explanation: v.explanation.clone(),
        }
    }

    pub fn render(&self, format: Format, explain: bool, v: &Verdict) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("records serialize"),
            Format::Plain => {
                let mut out = format!("{} ({})", self.outcome, self.method);
                if let Some(e) = v.outcome.witness() {
                    out.push_str(&format!("\nwitness: {}", format_evaluation(e)));
                    if let Some(values) = &self.values {
                        for (input, value) in self.inputs.iter().zip(values) {
                            out.push_str(&format!("\n  {} = {}", input, value));
                        }
                    }
                }
                if explain {
                    for line in &self.explanation {
                        out.push_str(&format!("\nbecause: {}", line));
                    }
                }
                out
            }
        }
    }
}
