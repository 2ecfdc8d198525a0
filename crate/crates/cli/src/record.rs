//! One CSV row of an experiment: a simulated total, optionally paired with
//! the closed-form prediction it is checked against.

use std::fmt::Display;

use lapsim::{CostModel, PolicyKind};

pub const CSV_HEADER: &str = "n,k,type,algorithm,model,seed,simulated_cost,predicted_cost,match";

#[derive(Debug, Clone)]
pub struct ExperimentRecord {
    pub n: usize,
    /// Absent for sequences loaded from a file.
    pub k: Option<usize>,
    /// t1..t4, or "custom" for file-loaded sequences.
    pub seq_type: String,
    pub algorithm: PolicyKind,
    pub model: CostModel,
    /// Seed that regenerates the random block, for t3/t4 instances.
    pub seed: Option<u64>,
    pub simulated_cost: u64,
    pub predicted_cost: Option<u64>,
}

impl ExperimentRecord {
    /// Whether prediction and simulation agree; `None` when there is no
    /// prediction to compare against.
    pub fn matches(&self) -> Option<bool> {
        self.predicted_cost.map(|p| p == self.simulated_cost)
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            opt(&self.k),
            self.seq_type,
            self.algorithm,
            self.model,
            opt(&self.seed),
            self.simulated_cost,
            opt(&self.predicted_cost),
            opt(&self.matches()),
        )
    }
}

fn opt<T: Display>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}
