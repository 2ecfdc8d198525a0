//! Acceptance suite: every closed-form identity the library promises is
//! checked against simulation by exact equality over its full parameter
//! range, plus the CLI golden output and exit-code checks. Run with
//! `cargo test -p lapsim-cli --test acceptance -- --nocapture` to see one
//! labeled PASS line per check.

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lapsim::{
    first_block_position_sum, gen_t1, gen_t2, gen_t3, gen_t4, policy_step, predict_t1, predict_t2,
    predict_t3, random_permutation, random_subsequence_with, serve, CostModel, FrequencyTable,
    Item, ListState, PolicyKind, RequestSequence, SimulationResult,
};

fn pass(label: &str, detail: &str) {
    println!("[acceptance] {label}: PASS ({detail})");
}

/// Deterministic seed per sweep cell.
fn cell_seed(tag: u64, n: usize, k: usize, sample: usize) -> u64 {
    let mut state = 0xACCE_5EED ^ tag;
    for value in [n as u64, k as u64, sample as u64] {
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

fn mtf_full(n: usize, sequence: &RequestSequence, block: usize) -> SimulationResult {
    let initial = ListState::initial(n).unwrap();
    serve(&initial, sequence, PolicyKind::Mtf, CostModel::Full, Some(block)).unwrap()
}

fn t1_expected(n: usize, k: usize) -> u64 {
    let (n, k) = (n as u128, k as u128);
    ((n * n * (2 * k - 1) + n) / 2) as u64
}

fn t2_expected(n: usize, k: usize) -> u64 {
    (k * n * n) as u64
}

#[test]
fn check_01_t1_simulation_equals_closed_form() {
    let started = Instant::now();
    let mut cells = 0;
    for n in 1..=64 {
        for k in 1..=16 {
            let total = mtf_full(n, &gen_t1(n, k).unwrap(), n).total_cost;
            assert_eq!(total, t1_expected(n, k), "t1 n={n} k={k}");
            assert_eq!(predict_t1(n, k).unwrap().total, t1_expected(n, k));
            cells += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "sweep took {elapsed:?}");
    pass("01 t1-totals", &format!("{cells} cells exact, {elapsed:?}"));
}

#[test]
fn check_02_t2_simulation_equals_closed_form() {
    let mut cells = 0;
    for n in 1..=64 {
        for k in 1..=16 {
            let total = mtf_full(n, &gen_t2(n, k).unwrap(), n).total_cost;
            assert_eq!(total, t2_expected(n, k), "t2 n={n} k={k}");
            assert_eq!(predict_t2(n, k).unwrap().total, t2_expected(n, k));
            cells += 1;
        }
    }
    pass("02 t2-totals", &format!("{cells} cells exact"));
}

#[test]
fn check_03_t3_simulation_equals_position_sum_form() {
    let mut instances = 0;
    for n in 3..=32 {
        for k in 1..=8 {
            for sample in 0..50 {
                let seed = cell_seed(3, n, k, sample);
                let perm = random_permutation(n, seed, true).unwrap();
                let expected =
                    first_block_position_sum(n, &perm).unwrap() + ((k - 1) * n * n) as u64;
                let total = mtf_full(n, &gen_t3(n, k, &perm).unwrap(), n).total_cost;
                assert_eq!(total, expected, "t3 n={n} k={k} seed={seed}");
                assert_eq!(predict_t3(n, k, &perm).unwrap().total, expected);
                instances += 1;
            }
        }
    }
    pass("03 t3-totals", &format!("{instances} random permutations exact"));
}

#[test]
fn check_04_t4_simulation_equals_position_sum_form() {
    let mut instances = 0;
    for n in 2..=32 {
        for k in 1..=8 {
            for q in 1..n {
                for sample in 0..10 {
                    let seed = cell_seed(4, n, k, q * 1000 + sample);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let subseq = random_subsequence_with(&mut rng, n, q).unwrap();
                    let expected =
                        first_block_position_sum(n, &subseq).unwrap() + ((k - 1) * q * q) as u64;
                    let total = mtf_full(n, &gen_t4(n, k, &subseq).unwrap(), q).total_cost;
                    assert_eq!(total, expected, "t4 n={n} k={k} q={q} seed={seed}");
                    instances += 1;
                }
            }
        }
    }
    pass("04 t4-totals", &format!("{instances} random subsequences exact"));
}

#[test]
fn check_05_t3_specializes_to_t1_and_t2() {
    let mut cells = 0;
    for n in 1..=32 {
        for k in 1..=8 {
            let identity: Vec<Item> = (1..=n as u32).map(Item).collect();
            let reversal: Vec<Item> = (1..=n as u32).rev().map(Item).collect();
            assert_eq!(
                predict_t3(n, k, &identity).unwrap(),
                predict_t1(n, k).unwrap(),
                "identity n={n} k={k}"
            );
            assert_eq!(
                predict_t3(n, k, &reversal).unwrap(),
                predict_t2(n, k).unwrap(),
                "reversal n={n} k={k}"
            );
            cells += 1;
        }
    }
    pass("05 t3-specialization", &format!("{cells} cells"));
}

#[test]
fn check_06_t1_beats_t2_by_constant_gap() {
    for n in 1..=64usize {
        let gap = (n * (n - 1) / 2) as u64;
        for k in 1..=16 {
            let c1 = predict_t1(n, k).unwrap().total;
            let c2 = predict_t2(n, k).unwrap().total;
            assert_eq!(c2 - c1, gap, "predicted gap n={n} k={k}");
            if n >= 2 {
                assert!(gap > 0);
            }

            let sim1 = mtf_full(n, &gen_t1(n, k).unwrap(), n).total_cost;
            let sim2 = mtf_full(n, &gen_t2(n, k).unwrap(), n).total_cost;
            assert_eq!(sim2 - sim1, gap, "simulated gap n={n} k={k}");
        }
    }
    pass("06 t1-vs-t2-gap", "C2 - C1 = n(n-1)/2 for n in 1..=64, k in 1..=16");
}

#[test]
fn check_07_blocks_after_the_first_stabilize() {
    let assert_stable = |result: &SimulationResult, square: u64, context: &str| {
        let subtotals = result.block_subtotals.as_ref().unwrap();
        for (i, &subtotal) in subtotals.iter().enumerate().skip(1) {
            assert_eq!(subtotal, square, "{context} block {}", i + 1);
        }
    };

    for n in 1..=64 {
        for k in 1..=16 {
            let square = (n * n) as u64;
            assert_stable(&mtf_full(n, &gen_t1(n, k).unwrap(), n), square, "t1");
            assert_stable(&mtf_full(n, &gen_t2(n, k).unwrap(), n), square, "t2");
        }
    }
    for n in 3..=32 {
        for k in 1..=8 {
            for sample in 0..50 {
                let perm = random_permutation(n, cell_seed(3, n, k, sample), true).unwrap();
                let result = mtf_full(n, &gen_t3(n, k, &perm).unwrap(), n);
                assert_stable(&result, (n * n) as u64, "t3");
            }
        }
    }
    for n in 2..=32 {
        for k in 1..=8 {
            for q in 1..n {
                for sample in 0..10 {
                    let seed = cell_seed(4, n, k, q * 1000 + sample);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let subseq = random_subsequence_with(&mut rng, n, q).unwrap();
                    let result = mtf_full(n, &gen_t4(n, k, &subseq).unwrap(), q);
                    assert_stable(&result, (q * q) as u64, "t4");
                }
            }
        }
    }
    pass("07 block-stabilization", "every block after the first costs b^2");
}

/// The 100 mixed random runs shared by checks 08 and 09.
fn random_runs() -> Vec<(usize, Vec<u32>)> {
    (0..100u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(8, i as usize, 0, 0));
            let n = rng.random_range(1..=32usize);
            let m = rng.random_range(0..=256usize);
            let requests = (0..m).map(|_| rng.random_range(1..=n as u32)).collect();
            (n, requests)
        })
        .collect()
}

#[test]
fn check_08_full_minus_partial_equals_sequence_length() {
    for (n, requests) in random_runs() {
        let initial = ListState::initial(n).unwrap();
        let sequence = RequestSequence::from_ids(&requests);
        for kind in PolicyKind::ALL {
            let full = serve(&initial, &sequence, kind, CostModel::Full, None).unwrap();
            let partial = serve(&initial, &sequence, kind, CostModel::Partial, None).unwrap();
            assert_eq!(
                full.total_cost - partial.total_cost,
                requests.len() as u64,
                "n={n} kind={kind} m={}",
                requests.len()
            );
        }
    }
    pass("08 cost-model-identity", "100 runs x 3 policies");
}

#[test]
fn check_09_fc_keeps_the_list_sorted_by_count() {
    let mut steps = 0u64;
    for (n, requests) in random_runs() {
        let mut list = ListState::initial(n).unwrap();
        let mut freq = FrequencyTable::new(n);
        for &id in &requests {
            policy_step(PolicyKind::Fc, &mut list, &mut freq, Item(id)).unwrap();
            let counts: Vec<u64> = list.items().iter().map(|&it| freq.count(it)).collect();
            assert!(
                counts.windows(2).all(|w| w[0] >= w[1]),
                "n={n} counts={counts:?}"
            );
            steps += 1;
        }
    }
    pass("09 fc-sorted-invariant", &format!("{steps} steps checked"));
}

#[test]
fn check_10_mtf_reverses_a_served_permutation() {
    for i in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(10, i, 0, 0));
        let n = rng.random_range(1..=32usize);
        let perm = lapsim::random_permutation_with(&mut rng, n, false).unwrap();

        let initial = ListState::initial(n).unwrap();
        let result = serve(
            &initial,
            &RequestSequence::new(perm.clone()),
            PolicyKind::Mtf,
            CostModel::Full,
            None,
        )
        .unwrap();

        let reversed: Vec<Item> = perm.into_iter().rev().collect();
        assert_eq!(result.final_list.items(), &reversed[..], "n={n} run={i}");
    }
    pass("10 mtf-reversal", "100 permutations, final list = reversed access order");
}

#[test]
fn check_11_cli_golden_series_and_verify_exit() {
    // derive the series from the predictors, confirm by simulation, then
    // freeze it byte for byte
    let mut derived = String::from("swept_var,C1,C2\n");
    for k in 1..=4 {
        let c1 = predict_t1(3, k).unwrap().total;
        let c2 = predict_t2(3, k).unwrap().total;
        assert_eq!(c1, mtf_full(3, &gen_t1(3, k).unwrap(), 3).total_cost);
        assert_eq!(c2, mtf_full(3, &gen_t2(3, k).unwrap(), 3).total_cost);
        derived.push_str(&format!("{k},{c1},{c2}\n"));
    }
    let golden = "swept_var,C1,C2\n1,6,9\n2,15,18\n3,24,27\n4,33,36\n";
    assert_eq!(derived, golden);

    let sweep = Command::new(env!("CARGO_BIN_EXE_lapsim"))
        .args(["sweep", "--figure", "3", "--range", "1..4"])
        .output()
        .expect("binary should run");
    assert_eq!(sweep.status.code(), Some(0));
    assert_eq!(String::from_utf8(sweep.stdout).unwrap(), golden);

    let verify = Command::new(env!("CARGO_BIN_EXE_lapsim"))
        .args(["verify", "--max-n", "8", "--max-k", "4", "--samples", "5", "--seed", "7"])
        .output()
        .expect("binary should run");
    assert_eq!(verify.status.code(), Some(0), "verify sweep must exit 0");

    pass("11 cli-golden", "sweep bytes match; verify sweep exits 0");
}
