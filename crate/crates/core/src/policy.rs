//! The three primitive list accessing policies (MTF, TRANS, FC) and the
//! serve engine that runs a request sequence against a list under a policy
//! and cost model, producing a full cost trace.
//!
//! All three policies reorganize only by moving the accessed item toward the
//! front, so every reorganization is a free exchange and the total cost of a
//! run equals its access cost.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::list::{access_cost, CostModel, Item, ListState};
use crate::seqgen::RequestSequence;

/// Which reorganization rule to apply after each access.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolicyKind {
    /// Move the accessed item to the front.
    Mtf,
    /// Swap the accessed item with its immediate predecessor.
    Trans,
    /// Keep the list sorted by non-increasing access frequency.
    Fc,
}

impl PolicyKind {
    pub const ALL: [PolicyKind; 3] = [PolicyKind::Mtf, PolicyKind::Trans, PolicyKind::Fc];
}

impl fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolicyKind::Mtf => f.write_str("mtf"),
            PolicyKind::Trans => f.write_str("trans"),
            PolicyKind::Fc => f.write_str("fc"),
        }
    }
}

/// Per-item access counters for the FC policy. Counts requests served so
/// far, starting at zero for every list item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrequencyTable {
    counts: Vec<u64>,
}

impl FrequencyTable {
    pub fn new(n: usize) -> Self {
        FrequencyTable {
            counts: vec![0; n],
        }
    }

    pub fn count(&self, item: Item) -> u64 {
        item.0
            .checked_sub(1)
            .and_then(|idx| self.counts.get(idx as usize))
            .copied()
            .unwrap_or(0)
    }

    fn bump(&mut self, item: Item) -> Result<u64> {
        let idx = item.0 as usize;
        if idx < 1 || idx > self.counts.len() {
            return Err(Error::ItemNotFound(item));
        }
        self.counts[idx - 1] += 1;
        Ok(self.counts[idx - 1])
    }
}

/// Apply one policy step for a request to `item`: the access itself has
/// already been charged; this performs the (free) reorganization and, for
/// FC, the counter increment.
pub fn policy_step(
    kind: PolicyKind,
    list: &mut ListState,
    freq: &mut FrequencyTable,
    item: Item,
) -> Result<()> {
    let position = list.position_of(item)?;
    match kind {
        PolicyKind::Mtf => list.move_to_front(position),
        PolicyKind::Trans => list.transpose_forward(position),
        PolicyKind::Fc => {
            let count = freq.bump(item)?;
            // Smallest position whose occupant now counts strictly below the
            // accessed item; ties stay ahead of it, so placement is stable.
            let target = list.items()[..position - 1]
                .iter()
                .position(|&ahead| freq.count(ahead) < count)
                .map(|idx| idx + 1)
                .unwrap_or(position);
            list.move_forward_to(position, target)
        }
    }
}

/// One served request: its 1-based index in the sequence, the requested
/// item, the position it was found at, and the cost charged for the access.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestRecord {
    pub index: usize,
    pub item: Item,
    pub position: usize,
    pub cost: u64,
}

/// Full trace of a simulation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationResult {
    pub total_cost: u64,
    pub per_request: Vec<RequestRecord>,
    /// Per-block cost subtotals, present when the caller supplied a block
    /// length (one entry per consecutive block of that many requests).
    pub block_subtotals: Option<Vec<u64>>,
    pub final_list: ListState,
}

/// Serve `sequence` on a copy of `initial` under `kind` and `model`.
///
/// For each request in order: record the pre-access position, charge the
/// access cost, then apply the policy step. `block_length`, when given, must
/// divide the sequence length; it only adds per-block subtotals to the
/// trace and never affects costs.
pub fn serve(
    initial: &ListState,
    sequence: &RequestSequence,
    kind: PolicyKind,
    model: CostModel,
    block_length: Option<usize>,
) -> Result<SimulationResult> {
    if let Some(b) = block_length {
        if b == 0 || sequence.len() % b != 0 {
            return Err(Error::BlockMismatch {
                block_length: b,
                sequence_length: sequence.len(),
            });
        }
    }

    let mut list = initial.clone();
    let mut freq = FrequencyTable::new(list.len());
    let mut per_request = Vec::with_capacity(sequence.len());
    let mut total_cost = 0u64;

    for (idx, &item) in sequence.items().iter().enumerate() {
        let position = list.position_of(item)?;
        let cost = access_cost(position, model)?;
        total_cost += cost;
        per_request.push(RequestRecord {
            index: idx + 1,
            item,
            position,
            cost,
        });
        policy_step(kind, &mut list, &mut freq, item)?;
    }

    let block_subtotals = block_length.map(|b| {
        per_request
            .chunks(b)
            .map(|block| block.iter().map(|r| r.cost).sum())
            .collect()
    });

    Ok(SimulationResult {
        total_cost,
        per_request,
        block_subtotals,
        final_list: list,
    })
}
