//! Implementations of the five subcommands.
//!
//! Exit-code contract: 0 on success, 1 on usage or validation errors
//! (reported as `Err` and printed to standard error by `main`), 2 when
//! `verify` finds a prediction that simulation does not reproduce.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lapsim::{
    parse_sequence_file, predict_spec, predict_t1, predict_t2, random_permutation,
    random_subsequence_with, serve, CostModel, Item, ListState, PolicyKind, RequestSequence,
    SequenceSpec,
};

use crate::args::{
    Cli, Command, CompareArgs, PredictArgs, SequenceSelection, SimulateArgs, SweepArgs, TypeArg,
    VerifyArgs,
};
use crate::record::{ExperimentRecord, CSV_HEADER};

pub fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Simulate(args) => simulate(&args),
        Command::Predict(args) => predict(&args),
        Command::Verify(args) => verify(&args),
        Command::Sweep(args) => sweep(&args),
        Command::Compare(args) => compare(&args),
    }
}

fn fail<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// A sequence either generated from type flags or loaded from a file.
enum Resolved {
    Generated(SequenceSpec, RequestSequence),
    Custom { n: usize, sequence: RequestSequence },
}

impl Resolved {
    fn n(&self) -> usize {
        match self {
            Resolved::Generated(spec, _) => spec.n,
            Resolved::Custom { n, .. } => *n,
        }
    }

    fn sequence(&self) -> &RequestSequence {
        match self {
            Resolved::Generated(_, sequence) => sequence,
            Resolved::Custom { sequence, .. } => sequence,
        }
    }

    fn block_length(&self) -> Option<usize> {
        match self {
            Resolved::Generated(spec, _) => Some(spec.block_length()),
            Resolved::Custom { .. } => None,
        }
    }
}

fn to_items(ids: &[u32]) -> Vec<Item> {
    ids.iter().copied().map(Item).collect()
}

fn build_spec(sel: &SequenceSelection) -> Result<SequenceSpec, String> {
    let n = sel.n.ok_or("--n is required (or use --seq-file)")?;
    let k = sel.k.ok_or("--k is required (or use --seq-file)")?;
    let kind = sel.seq_type.ok_or("--type is required (or use --seq-file)")?;

    if sel.perm.is_some() && kind != TypeArg::T3 {
        return Err("--perm only applies to --type t3".into());
    }
    if sel.subseq.is_some() && kind != TypeArg::T4 {
        return Err("--subseq only applies to --type t4".into());
    }

    Ok(match kind {
        TypeArg::T1 => SequenceSpec::t1(n, k),
        TypeArg::T2 => SequenceSpec::t2(n, k),
        TypeArg::T3 => {
            let perm = sel.perm.as_ref().ok_or("--type t3 requires --perm")?;
            SequenceSpec::t3(n, k, to_items(perm))
        }
        TypeArg::T4 => {
            let subseq = sel.subseq.as_ref().ok_or("--type t4 requires --subseq")?;
            SequenceSpec::t4(n, k, to_items(subseq))
        }
    })
}

fn resolve_sequence(
    sel: &SequenceSelection,
    seq_file: Option<&Path>,
) -> Result<Resolved, String> {
    if let Some(path) = seq_file {
        if sel.n.is_some()
            || sel.k.is_some()
            || sel.seq_type.is_some()
            || sel.perm.is_some()
            || sel.subseq.is_some()
        {
            return Err("--seq-file cannot be combined with --n/--k/--type/--perm/--subseq".into());
        }
        let text = fs::read_to_string(path)
            .map_err(|err| format!("cannot read {}: {err}", path.display()))?;
        let (n, sequence) = parse_sequence_file(&text).map_err(fail)?;
        return Ok(Resolved::Custom { n, sequence });
    }
    let spec = build_spec(sel)?;
    let sequence = spec.generate().map_err(fail)?;
    Ok(Resolved::Generated(spec, sequence))
}

fn simulate(args: &SimulateArgs) -> Result<i32, String> {
    let resolved = resolve_sequence(&args.seq, args.seq_file.as_deref())?;
    let initial = ListState::initial(resolved.n()).map_err(fail)?;
    let result = serve(
        &initial,
        resolved.sequence(),
        args.algo.into(),
        args.model.into(),
        resolved.block_length(),
    )
    .map_err(fail)?;

    if args.trace {
        println!("j,item,position,cost");
        for r in &result.per_request {
            println!("{},{},{},{}", r.index, r.item, r.position, r.cost);
        }
    }
    println!("total {}", result.total_cost);
    Ok(0)
}

fn predict(args: &PredictArgs) -> Result<i32, String> {
    let spec = build_spec(&args.seq)?;
    let prediction = predict_spec(&spec).map_err(fail)?;
    match args.model.into() {
        CostModel::Full => {
            println!("first_block {}", prediction.first_block);
            println!("stabilized {}", prediction.stabilized);
            println!("total {}", prediction.total);
        }
        CostModel::Partial => {
            // every request costs one comparison less than its position
            println!(
                "total {}",
                prediction.partial_total(spec.sequence_length() as u64)
            );
        }
    }
    Ok(0)
}

/// Deterministic per-instance seed so any CSV row can be regenerated on its
/// own from the row's seed column.
fn instance_seed(base: u64, tag: u64, n: usize, k: usize, sample: usize) -> u64 {
    let mut state = base ^ 0xA076_1D64_78BD_642F;
    for value in [tag, n as u64, k as u64, sample as u64] {
        state = splitmix(state ^ value);
    }
    state
}

fn splitmix(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn verify_instance(spec: &SequenceSpec, seed: Option<u64>) -> Result<ExperimentRecord, String> {
    let sequence = spec.generate().map_err(fail)?;
    let initial = ListState::initial(spec.n).map_err(fail)?;
    let result = serve(
        &initial,
        &sequence,
        PolicyKind::Mtf,
        CostModel::Full,
        Some(spec.block_length()),
    )
    .map_err(fail)?;
    let prediction = predict_spec(spec).map_err(fail)?;
    Ok(ExperimentRecord {
        n: spec.n,
        k: Some(spec.k),
        seq_type: spec.kind.to_string(),
        algorithm: PolicyKind::Mtf,
        model: CostModel::Full,
        seed,
        simulated_cost: result.total_cost,
        predicted_cost: Some(prediction.total),
    })
}

fn verify(args: &VerifyArgs) -> Result<i32, String> {
    let mut records = Vec::new();

    for n in 1..=args.max_n {
        for k in 1..=args.max_k {
            records.push(verify_instance(&SequenceSpec::t1(n, k), None)?);
        }
    }
    for n in 1..=args.max_n {
        for k in 1..=args.max_k {
            records.push(verify_instance(&SequenceSpec::t2(n, k), None)?);
        }
    }
    // t3 needs at least three items, t4 a non-empty proper subsequence
    for n in 3..=args.max_n {
        for k in 1..=args.max_k {
            for sample in 0..args.samples {
                let seed = instance_seed(args.seed, 3, n, k, sample);
                let perm = random_permutation(n, seed, true).map_err(fail)?;
                let spec = SequenceSpec::t3(n, k, perm);
                records.push(verify_instance(&spec, Some(seed))?);
            }
        }
    }
    for n in 2..=args.max_n {
        for k in 1..=args.max_k {
            for sample in 0..args.samples {
                let seed = instance_seed(args.seed, 4, n, k, sample);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let q = rng.random_range(1..n);
                let subseq = random_subsequence_with(&mut rng, n, q).map_err(fail)?;
                let spec = SequenceSpec::t4(n, k, subseq);
                records.push(verify_instance(&spec, Some(seed))?);
            }
        }
    }

    if args.self_test_corrupt {
        if let Some(first) = records.first_mut() {
            if let Some(predicted) = first.predicted_cost.as_mut() {
                *predicted += 1;
            }
        }
    }

    println!("{CSV_HEADER}");
    for record in &records {
        println!("{}", record.csv_row());
    }

    if let Some(bad) = records.iter().find(|r| r.matches() == Some(false)) {
        eprintln!("mismatch: {}", bad.csv_row());
        return Ok(2);
    }
    Ok(0)
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let parsed = text.split_once("..").and_then(|(lo, hi)| {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
    });
    let (lo, hi): (usize, usize) =
        parsed.ok_or_else(|| format!("--range must look like `1..8`, got `{text}`"))?;
    if lo < 1 || hi < lo {
        return Err(format!("--range bounds must satisfy 1 <= lo <= hi, got `{text}`"));
    }
    Ok((lo, hi))
}

fn sweep(args: &SweepArgs) -> Result<i32, String> {
    let (lo, hi) = parse_range(&args.range)?;
    if args.k.is_some() && args.figure != 2 {
        return Err("--k only applies to --figure 2 (the other figures sweep or derive k)".into());
    }
    if args.n.is_some() && args.figure != 3 {
        return Err("--n only applies to --figure 3 (the other figures sweep or derive n)".into());
    }

    let mut out = String::from("swept_var,C1,C2\n");
    let mut push_row = |swept: usize, n: usize, k: usize| -> Result<(), String> {
        let c1 = predict_t1(n, k).map_err(fail)?.total;
        let c2 = predict_t2(n, k).map_err(fail)?.total;
        out.push_str(&format!("{swept},{c1},{c2}\n"));
        Ok(())
    };

    match args.figure {
        2 => {
            let k = args.k.unwrap_or(5);
            for n in lo..=hi {
                push_row(n, n, k)?;
            }
        }
        3 => {
            let n = args.n.unwrap_or(3);
            for k in lo..=hi {
                push_row(k, n, k)?;
            }
        }
        4 => {
            for t in lo..=hi {
                push_row(t, t, t)?;
            }
        }
        other => return Err(format!("--figure must be 2, 3, or 4, got {other}")),
    }

    match &args.out {
        Some(path) => fs::write(path, out)
            .map_err(|err| format!("cannot write {}: {err}", path.display()))?,
        None => print!("{out}"),
    }
    Ok(0)
}

fn compare(args: &CompareArgs) -> Result<i32, String> {
    let resolved = resolve_sequence(&args.seq, args.seq_file.as_deref())?;
    let model: CostModel = args.model.into();
    let initial = ListState::initial(resolved.n()).map_err(fail)?;
    let m = resolved.sequence().len() as u64;

    println!("{CSV_HEADER}");
    for kind in PolicyKind::ALL {
        let result = serve(
            &initial,
            resolved.sequence(),
            kind,
            model,
            resolved.block_length(),
        )
        .map_err(fail)?;

        // only MTF on a generated sequence has a closed form to check
        let predicted_cost = match (&resolved, kind) {
            (Resolved::Generated(spec, _), PolicyKind::Mtf) => {
                let prediction = predict_spec(spec).map_err(fail)?;
                Some(match model {
                    CostModel::Full => prediction.total,
                    CostModel::Partial => prediction.partial_total(m),
                })
            }
            _ => None,
        };

        let (k, seq_type) = match &resolved {
            Resolved::Generated(spec, _) => (Some(spec.k), spec.kind.to_string()),
            Resolved::Custom { .. } => (None, "custom".to_string()),
        };
        let record = ExperimentRecord {
            n: resolved.n(),
            k,
            seq_type,
            algorithm: kind,
            model,
            seed: None,
            simulated_cost: result.total_cost,
            predicted_cost,
        };
        println!("{}", record.csv_row());
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("1..4").unwrap(), (1, 4));
        assert_eq!(parse_range("1..=4").unwrap(), (1, 4));
        assert_eq!(parse_range("7..7").unwrap(), (7, 7));
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("abc").is_err());
        assert!(parse_range("1..x").is_err());
    }

    #[test]
    fn instance_seeds_differ_across_cells() {
        let a = instance_seed(7, 3, 4, 2, 0);
        let b = instance_seed(7, 3, 4, 2, 1);
        let c = instance_seed(7, 4, 4, 2, 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, instance_seed(7, 3, 4, 2, 0));
    }
}
