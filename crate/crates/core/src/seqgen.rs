//! Construction and validation of the four special request-sequence types
//! T1-T4, seeded random instances for sweeps, and the sequence file format.
//!
//! Each type repeats one block `k` times over a list of size `n`:
//!
//! * T1 - the list order `(1, ..., n)`
//! * T2 - the reverse order `(n, ..., 1)`
//! * T3 - any other permutation of the list
//! * T4 - a sequence of `q < n` distinct items

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::list::Item;

/// A finite sequence of requests, each referring to a list item by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestSequence {
    requests: Vec<Item>,
}

impl RequestSequence {
    pub fn new(requests: Vec<Item>) -> Self {
        RequestSequence { requests }
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        RequestSequence {
            requests: ids.iter().copied().map(Item).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.requests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.requests.is_empty()
    }

    pub fn items(&self) -> &[Item] {
        &self.requests
    }
}

/// Which of the four sequence types a spec describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SequenceKind {
    T1,
    T2,
    T3,
    T4,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::T1 => f.write_str("t1"),
            SequenceKind::T2 => f.write_str("t2"),
            SequenceKind::T3 => f.write_str("t3"),
            SequenceKind::T4 => f.write_str("t4"),
        }
    }
}

/// Declarative description of a T1-T4 sequence: list size `n`, repetition
/// count `k`, and the block payload for T3 (a permutation) or T4 (a
/// subsequence).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub kind: SequenceKind,
    pub n: usize,
    pub k: usize,
    pub perm: Option<Vec<Item>>,
    pub subseq: Option<Vec<Item>>,
}

impl SequenceSpec {
    pub fn t1(n: usize, k: usize) -> Self {
        SequenceSpec {
            kind: SequenceKind::T1,
            n,
            k,
            perm: None,
            subseq: None,
        }
    }

    pub fn t2(n: usize, k: usize) -> Self {
        SequenceSpec {
            kind: SequenceKind::T2,
            n,
            k,
            perm: None,
            subseq: None,
        }
    }

    pub fn t3(n: usize, k: usize, perm: Vec<Item>) -> Self {
        SequenceSpec {
            kind: SequenceKind::T3,
            n,
            k,
            perm: Some(perm),
            subseq: None,
        }
    }

    pub fn t4(n: usize, k: usize, subseq: Vec<Item>) -> Self {
        SequenceSpec {
            kind: SequenceKind::T4,
            n,
            k,
            perm: None,
            subseq: Some(subseq),
        }
    }

    /// Length of one repeated block: `n` for T1-T3, `q` for T4.
    pub fn block_length(&self) -> usize {
        match self.kind {
            SequenceKind::T4 => self.subseq.as_ref().map_or(0, Vec::len),
            _ => self.n,
        }
    }

    /// Total sequence length `m`.
    pub fn sequence_length(&self) -> usize {
        self.block_length() * self.k
    }

    pub fn generate(&self) -> Result<RequestSequence> {
        match self.kind {
            SequenceKind::T1 => gen_t1(self.n, self.k),
            SequenceKind::T2 => gen_t2(self.n, self.k),
            SequenceKind::T3 => {
                let perm = self
                    .perm
                    .as_deref()
                    .ok_or_else(|| Error::InvalidParam("t3 requires a permutation".into()))?;
                gen_t3(self.n, self.k, perm)
            }
            SequenceKind::T4 => {
                let subseq = self
                    .subseq
                    .as_deref()
                    .ok_or_else(|| Error::InvalidParam("t4 requires a subsequence".into()))?;
                gen_t4(self.n, self.k, subseq)
            }
        }
    }
}

fn check_n_k(n: usize, k: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParam("n must be at least 1".into()));
    }
    if k < 1 {
        return Err(Error::InvalidParam("k must be at least 1".into()));
    }
    Ok(())
}

fn repeat_block(block: &[Item], k: usize) -> RequestSequence {
    let mut requests = Vec::with_capacity(block.len() * k);
    for _ in 0..k {
        requests.extend_from_slice(block);
    }
    RequestSequence::new(requests)
}

/// Items must be distinct and drawn from `1..=n`.
pub(crate) fn check_items_in_range(n: usize, items: &[Item]) -> Result<()> {
    let mut seen = vec![false; n];
    for &item in items {
        let id = item.0 as usize;
        if id < 1 || id > n {
            return Err(Error::RangeError { id: item.0, n });
        }
        if seen[id - 1] {
            return Err(Error::DuplicateItems(item));
        }
        seen[id - 1] = true;
    }
    Ok(())
}

fn check_permutation(n: usize, perm: &[Item]) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation(format!(
            "expected {n} items, got {}",
            perm.len()
        )));
    }
    check_items_in_range(n, perm).map_err(|e| Error::NotAPermutation(e.to_string()))
}

fn is_identity(perm: &[Item]) -> bool {
    perm.iter().enumerate().all(|(i, it)| it.0 as usize == i + 1)
}

fn is_reversal(perm: &[Item]) -> bool {
    let n = perm.len();
    perm.iter().enumerate().all(|(i, it)| it.0 as usize == n - i)
}

/// The list order `(1, ..., n)` repeated `k` times.
pub fn gen_t1(n: usize, k: usize) -> Result<RequestSequence> {
    check_n_k(n, k)?;
    let block: Vec<Item> = (1..=n as u32).map(Item).collect();
    Ok(repeat_block(&block, k))
}

/// The reverse list order `(n, ..., 1)` repeated `k` times.
pub fn gen_t2(n: usize, k: usize) -> Result<RequestSequence> {
    check_n_k(n, k)?;
    let block: Vec<Item> = (1..=n as u32).rev().map(Item).collect();
    Ok(repeat_block(&block, k))
}

/// A permutation of the list repeated `k` times. The list order and its
/// reversal are excluded; for n <= 2 those two exhaust all permutations, so
/// no T3 sequence exists.
pub fn gen_t3(n: usize, k: usize, perm: &[Item]) -> Result<RequestSequence> {
    check_n_k(n, k)?;
    if n <= 2 {
        return Err(Error::InvalidParam(
            "t3 requires n >= 3; the list order and its reversal are the only permutations for smaller lists".into(),
        ));
    }
    check_permutation(n, perm)?;
    if is_identity(perm) {
        return Err(Error::ExcludedPermutation("list-order"));
    }
    if is_reversal(perm) {
        return Err(Error::ExcludedPermutation("reversal"));
    }
    Ok(repeat_block(perm, k))
}

/// A sequence of `q` distinct items (`1 <= q < n`) repeated `k` times. Any
/// arrangement of distinct items is accepted; see [`gen_t4_strict`] for the
/// order-preserving variant.
pub fn gen_t4(n: usize, k: usize, subseq: &[Item]) -> Result<RequestSequence> {
    check_n_k(n, k)?;
    let q = subseq.len();
    if q < 1 {
        return Err(Error::InvalidParam("subsequence must not be empty".into()));
    }
    if q >= n {
        return Err(Error::SizeViolation { q, n });
    }
    check_items_in_range(n, subseq)?;
    Ok(repeat_block(subseq, k))
}

/// Like [`gen_t4`], but the items must additionally appear in list order
/// (strictly increasing ids), i.e. form a genuine subsequence of the list.
pub fn gen_t4_strict(n: usize, k: usize, subseq: &[Item]) -> Result<RequestSequence> {
    for pair in subseq.windows(2) {
        if pair[0].0 >= pair[1].0 {
            return Err(Error::NotASubsequence(format!(
                "item {} precedes item {} but follows it in the list",
                pair[0], pair[1]
            )));
        }
    }
    gen_t4(n, k, subseq)
}

/// Uniformly random permutation of `1..=n`, deterministic given `seed`.
/// With `exclude_order_and_reversal` the two permutations T3 forbids are
/// rejection-sampled away (requires n >= 3).
pub fn random_permutation(
    n: usize,
    seed: u64,
    exclude_order_and_reversal: bool,
) -> Result<Vec<Item>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_permutation_with(&mut rng, n, exclude_order_and_reversal)
}

/// [`random_permutation`] drawing from a caller-supplied generator.
pub fn random_permutation_with<R: Rng>(
    rng: &mut R,
    n: usize,
    exclude_order_and_reversal: bool,
) -> Result<Vec<Item>> {
    if n < 1 {
        return Err(Error::InvalidParam("n must be at least 1".into()));
    }
    if exclude_order_and_reversal && n <= 2 {
        return Err(Error::InvalidParam(
            "excluding the list order and its reversal needs n >= 3".into(),
        ));
    }
    let mut perm: Vec<Item> = (1..=n as u32).map(Item).collect();
    loop {
        perm.shuffle(rng);
        if !exclude_order_and_reversal || (!is_identity(&perm) && !is_reversal(&perm)) {
            return Ok(perm);
        }
    }
}

/// `q` distinct items sampled from `1..=n` in random order.
pub fn random_subsequence_with<R: Rng>(rng: &mut R, n: usize, q: usize) -> Result<Vec<Item>> {
    if n < 1 {
        return Err(Error::InvalidParam("n must be at least 1".into()));
    }
    if q < 1 || q >= n {
        return Err(Error::SizeViolation { q, n });
    }
    Ok(rand::seq::index::sample(rng, n, q)
        .into_iter()
        .map(|idx| Item(idx as u32 + 1))
        .collect())
}

/// Parse the sequence file format: the first significant line declares the
/// list size as `n=<integer>`, the rest hold whitespace-separated item ids.
/// Lines starting with `#` and blank lines are skipped.
pub fn parse_sequence_file(text: &str) -> Result<(usize, RequestSequence)> {
    let mut n: Option<usize> = None;
    let mut requests = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => {
                let value = line.strip_prefix("n=").ok_or_else(|| Error::ParseError {
                    line: idx + 1,
                    message: format!("expected `n=<size>`, got `{line}`"),
                })?;
                let size: usize = value.trim().parse().map_err(|_| Error::ParseError {
                    line: idx + 1,
                    message: format!("invalid list size `{value}`"),
                })?;
                if size < 1 {
                    return Err(Error::ParseError {
                        line: idx + 1,
                        message: "list size must be at least 1".into(),
                    });
                }
                n = Some(size);
            }
            Some(size) => {
                for token in line.split_whitespace() {
                    let id: u32 = token.parse().map_err(|_| Error::ParseError {
                        line: idx + 1,
                        message: format!("invalid item id `{token}`"),
                    })?;
                    if id < 1 || id as usize > size {
                        return Err(Error::RangeError { id, n: size });
                    }
                    requests.push(Item(id));
                }
            }
        }
    }

    let n = n.ok_or_else(|| Error::ParseError {
        line: 1,
        message: "missing `n=<size>` header line".into(),
    })?;
    Ok((n, RequestSequence::new(requests)))
}

/// Render a sequence in the file format accepted by
/// [`parse_sequence_file`].
pub fn format_sequence_file(n: usize, sequence: &RequestSequence) -> String {
    let mut out = format!("n={n}\n");
    if !sequence.is_empty() {
        let ids: Vec<String> = sequence.items().iter().map(|it| it.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}
