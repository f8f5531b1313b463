//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Counts must match exactly; times are wall-clock limits.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fibtree::navigation::{verify_theorems_on, Numeration};
use fibtree::numeration::verify_codecs;
use fibtree::tiling::{counting_identity, verify_strip_partition};
use fibtree::tree::{extremal_node, Side};
use fibtree::{fib, Report, TreeKind, TreeTable};
use num_bigint::BigUint;

const LEVEL_DEPTH: usize = 14;
const SWEEP_DEPTH: usize = 12;
const CODEC_MAX: u64 = 1_000_000;
const LEVEL_LIMIT: Duration = Duration::from_secs(10);
const CODEC_LIMIT: Duration = Duration::from_secs(30);
const SUITE_LIMIT: Duration = Duration::from_secs(120);

const EXPECTED_WARNINGS: [&str; 4] = [
    "black_golden_initial_weights",
    "empty_type_class",
    "leading_tile_index",
    "white_rightmost_index",
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Nodes with generated sons in a table of the given depth.
fn inner_count(kind: TreeKind, depth: usize) -> u64 {
    TreeTable::build(kind, depth - 1).unwrap().len()
}

/// All named checks exist, are clean, and examined `expected` subjects each.
fn checks_clean(report: &Report, names: &[&str], expected: u64) -> Outcome {
    for name in names {
        let Some(c) = report.check(name) else {
            return outcome(false, format!("missing check {name}"));
        };
        if c.failed != 0 || c.passed != expected {
            return outcome(
                false,
                format!(
                    "{name}: passed {}, failed {}, expected {expected} passes",
                    c.passed, c.failed
                ),
            );
        }
    }
    outcome(
        true,
        format!("{} checks x {expected} nodes, 0 violations", names.len()),
    )
}

fn level_counts() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (kind, offset) in [(TreeKind::WhiteRoot, 1), (TreeKind::BlackRoot, 0)] {
        let t = TreeTable::build(kind, LEVEL_DEPTH).unwrap();
        for k in 0..=LEVEL_DEPTH {
            let r = t.level_range(k).unwrap();
            let size = r.end() - r.start() + 1;
            if BigUint::from(size) != fib(2 * k + offset) {
                bad.push(format!("{kind} level {k}: {size}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < LEVEL_LIMIT,
        format!(
            "levels 0..={LEVEL_DEPTH}, {} mismatches, {:.2?} (limit {LEVEL_LIMIT:?})",
            bad.len(),
            elapsed
        ),
    )
}

fn codec_round_trip() -> Outcome {
    let start = Instant::now();
    let r = verify_codecs(CODEC_MAX);
    let elapsed = start.elapsed();
    let names = [
        ("fib_round_trip", CODEC_MAX),
        ("golden_round_trip", CODEC_MAX),
        ("fib_increment_rewriting", CODEC_MAX - 1),
        ("fib_decrement_rewriting", CODEC_MAX - 1),
    ];
    for (name, expected) in names {
        let o = checks_clean(&r, &[name], expected);
        if !o.pass {
            return o;
        }
    }
    outcome(
        elapsed < CODEC_LIMIT,
        format!(
            "n = 1..={CODEC_MAX}, round trips and rewritings 0 failures, {:.2?} (limit {CODEC_LIMIT:?})",
            elapsed
        ),
    )
}

fn base_cases_only(report: &Report) -> Option<Outcome> {
    (report.base_cases != [1, 2]).then(|| {
        outcome(
            false,
            format!("base cases {:?}, expected [1, 2]", report.base_cases),
        )
    })
}

fn black_sweep(numeration: Numeration, black: &TreeTable) -> Outcome {
    let r = verify_theorems_on(black, numeration);
    if let Some(o) = base_cases_only(&r) {
        return o;
    }
    // every non-base node is typed; rules are checked on nodes 3.. with sons
    let inner = inner_count(TreeKind::BlackRoot, SWEEP_DEPTH) - 2;
    let typed = checks_clean(&r, &["every_node_typed"], black.len() - 2);
    if !typed.pass {
        return typed;
    }
    let rules = checks_clean(&r, &["successor_relation", "son_type_automaton"], inner);
    if !rules.pass {
        return rules;
    }
    match r.check("adjacent_type_pairs") {
        Some(c) if c.failed == 0 && c.passed > 0 => outcome(
            true,
            format!(
                "{} successor checks, {} adjacent pairs, 0 violations; base cases 1, 2",
                inner, c.passed
            ),
        ),
        Some(c) => outcome(false, format!("adjacent pairs: {} failures", c.failed)),
        None => outcome(false, "missing adjacent pair check"),
    }
}

fn strips() -> Outcome {
    let r = verify_strip_partition(SWEEP_DEPTH).unwrap();
    let nodes = TreeTable::build(TreeKind::WhiteRoot, SWEEP_DEPTH)
        .unwrap()
        .len();
    let partition = checks_clean(&r, &["strips_partition_nodes"], nodes);
    if !partition.pass {
        return partition;
    }
    // every non-leading node by status, plus the son shape of the leading
    // nodes of all strips but the last, which has no sons in the table
    let statuses = checks_clean(&r, &["strip_status_isomorphism"], nodes - 1);
    if !statuses.pass {
        return statuses;
    }
    for name in [
        "strip_level_sizes",
        "strip_son_isomorphism",
        "strip_index_matches_traversal",
    ] {
        if r.check(name).is_none_or(|c| c.failed != 0 || c.passed == 0) {
            return outcome(false, format!("{name} failed"));
        }
    }
    let identity = counting_identity(LEVEL_DEPTH);
    if identity.failed != 0 || identity.passed != LEVEL_DEPTH as u64 + 1 {
        return outcome(false, "counting identity failed");
    }
    outcome(
        true,
        format!(
            "{nodes} nodes in {} strips, level sizes f_2j, 0 status mismatches, identity k <= {LEVEL_DEPTH}",
            SWEEP_DEPTH + 1
        ),
    )
}

fn extremal_values() -> Outcome {
    let white = TreeTable::build(TreeKind::WhiteRoot, LEVEL_DEPTH).unwrap();
    let black = TreeTable::build(TreeKind::BlackRoot, LEVEL_DEPTH).unwrap();
    let mut bad = Vec::new();
    for k in 0..=LEVEL_DEPTH {
        if k >= 1 {
            let (n, code) = extremal_node(TreeKind::WhiteRoot, k, Side::Leftmost);
            let want = format!("1{}", "0".repeat(2 * k - 1));
            let first = *white.level_range(k).unwrap().start();
            if n != fib(2 * k) || code.to_string() != want || n != BigUint::from(first) {
                bad.push(format!("white k = {k}"));
            }
        }
        let (n, code) = extremal_node(TreeKind::BlackRoot, k, Side::Rightmost);
        let want = format!("1{}", "0".repeat(2 * k));
        let last = *black.level_range(k).unwrap().end();
        if n != fib(2 * k + 1) || code.to_string() != want || n != BigUint::from(last) {
            bad.push(format!("black k = {k}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("k <= {LEVEL_DEPTH}, mismatches: {bad:?}"),
    )
}

fn ledger_warnings() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_fibtree"))
        .args(["verify", "--scope", "all", "--format", "records"])
        .env_remove("FIBTREE_MAX_DEPTH")
        .output()
        .expect("binary runs");
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for line in String::from_utf8_lossy(&out.stdout).lines() {
        let v: serde_json::Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(e) => return outcome(false, format!("bad record {line:?}: {e}")),
        };
        if v["record"] == "warning" {
            *seen
                .entry(v["discrepancy"].as_str().unwrap_or("?").to_string())
                .or_default() += 1;
        }
    }
    let exact =
        seen.keys().map(String::as_str).eq(EXPECTED_WARNINGS) && seen.values().all(|&c| c == 1);
    outcome(
        out.status.success() && exact,
        format!("exit {:?}, warnings {seen:?}", out.status.code()),
    )
}

fn main() -> ExitCode {
    let suite = Instant::now();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    results.push((1, "level counts", level_counts()));
    results.push((2, "codec round trip and rewritings", codec_round_trip()));

    let white = TreeTable::build(TreeKind::WhiteRoot, SWEEP_DEPTH).unwrap();
    let black = TreeTable::build(TreeKind::BlackRoot, SWEEP_DEPTH).unwrap();
    let white_inner = inner_count(TreeKind::WhiteRoot, SWEEP_DEPTH);

    let r = verify_theorems_on(&white, Numeration::Fibonacci);
    results.push((
        3,
        "preferred son, Fibonacci codes",
        checks_clean(
            &r,
            &["preferred_son_unique", "preferred_son_position"],
            white_inner,
        ),
    ));
    results.push((
        4,
        "black-tree successor, Fibonacci codes",
        black_sweep(Numeration::Fibonacci, &black),
    ));
    let r = verify_theorems_on(&white, Numeration::Golden);
    results.push((
        5,
        "preferred son, golden codes",
        checks_clean(
            &r,
            &[
                "single_son_ending_0",
                "preferred_son_code",
                "preferred_son_is_leftmost_white",
            ],
            white_inner,
        ),
    ));
    results.push((
        6,
        "black-tree successor, golden codes",
        black_sweep(Numeration::Golden, &black),
    ));
    results.push((7, "strip decomposition", strips()));
    results.push((8, "extremal node values", extremal_values()));
    results.push((9, "discrepancy warnings", ledger_warnings()));

    let elapsed = suite.elapsed();
    results.push((
        10,
        "suite time",
        outcome(
            elapsed < SUITE_LIMIT,
            format!("{elapsed:.2?} (limit {SUITE_LIMIT:?})"),
        ),
    ));

    let mut failed = 0;
    for (n, name, o) in &results {
        println!(
            "{} {n:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
