//! Closed-form total-cost predictions for MTF under the full cost model on
//! the four generated sequence types.
//!
//! Every prediction splits into the cost of the first block, served from the
//! initial configuration, and the stabilized remainder: once one block has
//! been served, each later block finds every item at the back in access
//! order, so each of the `k - 1` remaining blocks costs exactly `b^2` for a
//! block of length `b`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::list::{CostModel, Item, ListState};
use crate::policy::{serve, PolicyKind};
use crate::seqgen::{RequestSequence, SequenceKind, SequenceSpec};

/// A predicted total with its first-block / stabilized decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub total: u64,
    pub first_block: u64,
    pub stabilized: u64,
}

impl Prediction {
    fn new(first_block: u128, stabilized: u128) -> Result<Self> {
        let total = to_u64(first_block + stabilized)?;
        Ok(Prediction {
            total,
            first_block: first_block as u64,
            stabilized: stabilized as u64,
        })
    }

    /// The same run charged under the partial cost model: each of the `m`
    /// requests costs one comparison less than its full-model position.
    pub fn partial_total(&self, m: u64) -> u64 {
        debug_assert!(self.total >= m);
        self.total - m
    }
}

fn to_u64(value: u128) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::InvalidParam("predicted cost exceeds u64".into()))
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParam("n must be at least 1".into()));
    }
    if k < 1 {
        return Err(Error::InvalidParam("k must be at least 1".into()));
    }
    Ok(())
}

/// Sum of the pre-access positions over one block served by MTF from the
/// initial list `(1, ..., n)`. This is a one-block simulation, not a closed
/// form; the closed forms below build on it.
pub fn first_block_position_sum(n: usize, block: &[Item]) -> Result<u64> {
    crate::seqgen::check_items_in_range(n, block)?;
    let initial = ListState::initial(n)?;
    let sequence = RequestSequence::new(block.to_vec());
    // Under the full model each access costs exactly its pre-access
    // position, so the one-block total is the position sum.
    let result = serve(
        &initial,
        &sequence,
        PolicyKind::Mtf,
        CostModel::Full,
        None,
    )?;
    Ok(result.total_cost)
}

/// MTF cost of the list order repeated `k` times:
/// `n(n+1)/2 + (k-1)n^2 = (n^2(2k-1) + n) / 2`.
pub fn predict_t1(n: usize, k: usize) -> Result<Prediction> {
    check_params(n, k)?;
    let (n, k) = (n as u128, k as u128);
    // n^2(2k-1) + n = n(n(2k-1) + 1); n and n(2k-1)+1 have opposite
    // parities, so the halved form is always integral.
    debug_assert!((n * n * (2 * k - 1) + n) % 2 == 0);
    Prediction::new(n * (n + 1) / 2, (k - 1) * n * n)
}

/// MTF cost of the reversed list order repeated `k` times: `k * n^2`.
pub fn predict_t2(n: usize, k: usize) -> Result<Prediction> {
    check_params(n, k)?;
    let (n, k) = (n as u128, k as u128);
    Prediction::new(n * n, (k - 1) * n * n)
}

/// MTF cost of an arbitrary permutation repeated `k` times: the first-block
/// position sum plus `(k-1)n^2`.
///
/// Unlike the T3 generator, the prediction is valid for every permutation,
/// including the list order and its reversal, where it specializes to
/// [`predict_t1`] and [`predict_t2`].
pub fn predict_t3(n: usize, k: usize, perm: &[Item]) -> Result<Prediction> {
    check_params(n, k)?;
    if perm.len() != n {
        return Err(Error::NotAPermutation(format!(
            "expected {n} items, got {}",
            perm.len()
        )));
    }
    let first = first_block_position_sum(n, perm)
        .map_err(|e| Error::NotAPermutation(e.to_string()))?;
    let (n, k) = (n as u128, k as u128);
    Prediction::new(first as u128, (k - 1) * n * n)
}

/// MTF cost of a `q`-item subsequence repeated `k` times: the first-block
/// position sum plus `(k-1)q^2`. The position sum runs over the `q`
/// requests of the block, not over the whole list.
pub fn predict_t4(n: usize, k: usize, subseq: &[Item]) -> Result<Prediction> {
    check_params(n, k)?;
    let q = subseq.len();
    if q < 1 {
        return Err(Error::InvalidParam("subsequence must not be empty".into()));
    }
    if q >= n {
        return Err(Error::SizeViolation { q, n });
    }
    let first = first_block_position_sum(n, subseq)?;
    let (q, k) = (q as u128, k as u128);
    Prediction::new(first as u128, (k - 1) * q * q)
}

/// Prediction for a declarative sequence spec.
pub fn predict_spec(spec: &SequenceSpec) -> Result<Prediction> {
    match spec.kind {
        SequenceKind::T1 => predict_t1(spec.n, spec.k),
        SequenceKind::T2 => predict_t2(spec.n, spec.k),
        SequenceKind::T3 => {
            let perm = spec
                .perm
                .as_deref()
                .ok_or_else(|| Error::InvalidParam("t3 requires a permutation".into()))?;
            predict_t3(spec.n, spec.k, perm)
        }
        SequenceKind::T4 => {
            let subseq = spec
                .subseq
                .as_deref()
                .ok_or_else(|| Error::InvalidParam("t4 requires a subsequence".into()))?;
            predict_t4(spec.n, spec.k, subseq)
        }
    }
}
