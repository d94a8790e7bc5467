//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hooked_skolem::cli;
use hooked_skolem::conditions::{expected_cross_edges, hooked_sequence_necessary, nk2_parity_feasible};
use hooked_skolem::construct::construct_nk2_21;
use hooked_skolem::model::{parse_sequence, Label, PairSystem, SequenceKind};
use hooked_skolem::search::{
    search_hooked_sequence, search_hooked_skolem, search_nk2, search_skolem, SearchConfig, SearchMode,
};
use hooked_skolem::verify::{check_sum_identity, partition_census, verify_hooked_sequence, verify_pairs};

type Check = Result<String, String>;

const ALL: SearchMode = SearchMode::Enumerate { limit: None };

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs(p: &[(Label, Label)]) -> PairSystem {
    PairSystem::new(p.iter().copied()).unwrap()
}

fn base_tables() -> Vec<(u64, PairSystem)> {
    vec![
        (1, pairs(&[(1, 3)])),
        (2, pairs(&[(1, 3), (2, 5)])),
        (5, pairs(&[(1, 4), (2, 6), (3, 8), (5, 11), (7, 9)])),
        (6, pairs(&[(1, 8), (2, 7), (3, 6), (4, 10), (5, 9), (11, 13)])),
        (
            10,
            pairs(&[
                (1, 3),
                (2, 6),
                (4, 9),
                (5, 15),
                (7, 14),
                (8, 17),
                (10, 21),
                (11, 19),
                (12, 18),
                (13, 16),
            ]),
        ),
    ]
}

fn constructed_up_to_1000() -> Vec<(u64, PairSystem)> {
    (1..=1000u64)
        .filter(|n| matches!(n % 4, 1 | 2))
        .map(|n| (n, construct_nk2_21(n).expect("constructor").pairs))
        .collect()
}

/// All `(2,1)` labelings of `nK2` for `n = 1..=10`.
fn enumerated_21() -> Vec<(usize, Vec<PairSystem>)> {
    (1..=10)
        .map(|n| {
            (
                n,
                search_nk2(n, 2, 1, ALL, &SearchConfig::default())
                    .unwrap()
                    .solutions,
            )
        })
        .collect()
}

/// All `(k,d)` labelings of `nK2` over `n <= 6, k <= 3, d <= 3`.
fn enumerated_grid() -> Vec<((usize, Label, Label), Vec<PairSystem>)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for k in 1..=3 {
            for d in 1..=3 {
                let sols = search_nk2(n, k, d, ALL, &SearchConfig::default())
                    .unwrap()
                    .solutions;
                out.push(((n, k, d), sols));
            }
        }
    }
    out
}

fn ac1_base_cases() -> Check {
    let start = Instant::now();
    for (n, expected) in base_tables() {
        let got = construct_nk2_21(n).map_err(|e| e.to_string())?.pairs;
        ensure(got == expected, || {
            format!("n={n}: got {got}, expected {expected}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("5 tables match exactly in {elapsed:?}"))
}

fn ac2_constructor_sweep() -> Check {
    let built = constructed_up_to_1000();
    for (n, ps) in &built {
        let r = verify_pairs(ps, 2, 1).unwrap();
        ensure(r.is_valid(), || format!("n={n}: {r}"))?;
    }
    Ok(format!(
        "{} orders n ≡ 1,2 (mod 4), n <= 1000, all certified",
        built.len()
    ))
}

fn ac3_iff_small() -> Check {
    let found: Vec<usize> = (1..=10)
        .filter(|&n| {
            search_nk2(n, 2, 1, SearchMode::Exists, &SearchConfig::default())
                .unwrap()
                .exists
        })
        .collect();
    ensure(found == [1, 2, 5, 6, 9, 10], || format!("exists for {found:?}"))?;
    Ok(format!("exists exactly for n in {found:?}"))
}

fn ac4_parity_soundness() -> Check {
    let mut checked = 0;
    for ((n, k, d), sols) in enumerated_grid() {
        checked += 1;
        ensure(sols.is_empty() || nk2_parity_feasible(n as u64, k, d), || {
            format!(
                "n={n} k={k} d={d} has {} labelings but parity says infeasible",
                sols.len()
            )
        })?;
    }
    for k in 1..=4 {
        for d in 1..=4 {
            let out = search_nk2(4, k, d, SearchMode::Exists, &SearchConfig::default()).unwrap();
            ensure(!out.exists, || format!("4K2 has a ({k},{d}) labeling"))?;
        }
    }
    Ok(format!("{checked} grid points sound; 4K2 empty for all k,d <= 4"))
}

fn ac5_census() -> Check {
    let mut checked = 0usize;
    let mut check = |ps: &PairSystem, k: Label, d: Label| -> Result<(), String> {
        let Ok(expected) = expected_cross_edges(k, d, ps.n()) else {
            return Ok(());
        };
        let (g, f) = ps.to_labeling();
        let got = partition_census(&g, &f).unwrap().cross_edges;
        checked += 1;
        ensure(got == expected, || {
            format!("({k},{d}) {ps}: cross {got}, expected {expected}")
        })
    };
    for (_, sols) in enumerated_21() {
        for ps in &sols {
            check(ps, 2, 1)?;
        }
    }
    for ((_, k, d), sols) in enumerated_grid() {
        for ps in &sols {
            check(ps, k, d)?;
        }
    }
    for (_, ps) in constructed_up_to_1000() {
        check(&ps, 2, 1)?;
    }
    Ok(format!("{checked} labelings match the odd/even cross-edge count"))
}

fn existence_pattern(f: impl Fn(usize) -> bool, expected: [bool; 9]) -> Check {
    let got: Vec<bool> = (1..=9).map(f).collect();
    let show = |v: &[bool]| v.iter().map(|&b| if b { 'T' } else { 'F' }).collect::<String>();
    ensure(got == expected, || {
        format!("got {}, expected {}", show(&got), show(&expected))
    })?;
    Ok(format!("m = 1..9: {}", show(&got)))
}

fn ac6_skolem() -> Check {
    existence_pattern(
        |m| {
            search_skolem(m, SearchMode::Exists, &SearchConfig::default())
                .unwrap()
                .exists
        },
        [true, false, false, true, true, false, false, true, true],
    )
}

fn ac7_hooked_skolem() -> Check {
    existence_pattern(
        |m| {
            search_hooked_skolem(m, SearchMode::Exists, &SearchConfig::default())
                .unwrap()
                .exists
        },
        [false, true, true, false, false, true, true, false, false],
    )
}

fn ac8_hooked_condition() -> Check {
    let mut existing = 0;
    for d in 1..=4 {
        for m in 1..=8 {
            let out = search_hooked_sequence(d, m, SearchMode::Exists, &SearchConfig::default()).unwrap();
            if out.exists {
                existing += 1;
                ensure(hooked_sequence_necessary(d, m as u64), || {
                    format!("d={d} m={m} exists but the necessary condition fails")
                })?;
            }
        }
    }
    let out = search_hooked_sequence(3, 6, SearchMode::Exists, &SearchConfig::default()).unwrap();
    ensure(out.exists, || "no hooked sequence for d=3, m=6".into())?;
    for text in ["48574365387*6", "64758463573*8"] {
        let s = parse_sequence(text, SequenceKind::Hooked { d: 3 }).unwrap();
        let r = verify_hooked_sequence(&s, 3);
        ensure(r.is_valid(), || format!("{text}: {r}"))?;
    }
    Ok(format!(
        "{existing} existing (d,m) all satisfy the condition; both d=3, m=6 examples verify"
    ))
}

fn run_cli(args: &[String]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hooked-skolem".to_owned()).chain(args.iter().cloned());
    let code = cli::run(argv, &mut out, &mut err);
    (code, out)
}

fn ac9_determinism() -> Check {
    let mut invocations: Vec<Vec<String>> = Vec::new();
    let owned = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    for n in 1..=10 {
        for mode in ["exists", "first", "enum"] {
            let n = n.to_string();
            invocations.push(owned(&[
                "search", "nk2", "--n", &n, "--k", "2", "--d", "1", "--mode", mode,
            ]));
        }
    }
    for kind in ["skolem", "hooked-skolem"] {
        for m in 1..=9 {
            for mode in ["exists", "first", "count", "enum"] {
                let m = m.to_string();
                invocations.push(owned(&[
                    "search", "sequence", "--kind", kind, "--m", &m, "--mode", mode,
                ]));
            }
        }
    }
    let mut bytes = 0;
    for args in &invocations {
        let with = |jobs: &str| {
            let mut a = args.clone();
            a.extend(["--jobs".to_owned(), jobs.to_owned()]);
            run_cli(&a)
        };
        let (c1, o1) = with("1");
        let (c8, o8) = with("8");
        ensure(c1 == 0 && c8 == 0, || format!("{args:?}: exit codes {c1}, {c8}"))?;
        ensure(o1 == o8, || {
            format!("{args:?}: output differs between --jobs 1 and --jobs 8")
        })?;
        bytes += o1.len();
    }
    Ok(format!(
        "{} invocations byte-identical ({bytes} bytes)",
        invocations.len()
    ))
}

fn ac10_sum_identity() -> Check {
    let mut checked = 0;
    for (n, ps) in constructed_up_to_1000() {
        let r = check_sum_identity(&ps, 2, 1).unwrap();
        ensure(r.is_valid(), || format!("constructed n={n}: {r}"))?;
        checked += 1;
    }
    for (n, sols) in enumerated_21() {
        for ps in &sols {
            let r = check_sum_identity(ps, 2, 1).unwrap();
            ensure(r.is_valid(), || format!("searched n={n} {ps}: {r}"))?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} labelings satisfy 2·Σb = nk + n(n-1)d/2 + 2n² + n + 1"
    ))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC-1  hand-built base cases reproduced", ac1_base_cases),
        (
            "AC-2  (2,1) constructor certified for n <= 1000",
            ac2_constructor_sweep,
        ),
        ("AC-3  nK2 (2,1) existence for n = 1..10", ac3_iff_small),
        (
            "AC-4  parity condition sound on search grid",
            ac4_parity_soundness,
        ),
        ("AC-5  odd/even cross-edge census", ac5_census),
        ("AC-6  Skolem existence pattern", ac6_skolem),
        ("AC-7  hooked Skolem existence pattern", ac7_hooked_skolem),
        ("AC-8  hooked sequence necessary condition", ac8_hooked_condition),
        ("AC-9  --jobs 1 and --jobs 8 outputs identical", ac9_determinism),
        ("AC-10 corrected sum identity on all witnesses", ac10_sum_identity),
    ];

    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
