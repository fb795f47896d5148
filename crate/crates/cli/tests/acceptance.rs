//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line.
//!
//! Run with `cargo test -p hypertournament-cli --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use hypertournament::subset::full_mask;
use hypertournament::{
    all_losing_sequences_bruteforce, apply_move, binom, case_a_decompose, check_score_scores,
    enumerate_valid_sequences, random_hypertournament, random_losing_sequence, realize,
    transform_to_target, ExchangeMove, Hypertournament, LosingScoreSequence, Seed, Strategy,
    DEFAULT_BUDGET,
};

const GRID: [(usize, usize); 8] = [
    (3, 3),
    (4, 3),
    (4, 4),
    (5, 3),
    (5, 4),
    (5, 5),
    (6, 5),
    (6, 6),
];

fn verdict(id: &str, what: &str, elapsed: Duration, limit: Duration, failures: &[String]) {
    let ok = failures.is_empty() && elapsed < limit;
    println!(
        "[{}] {id}: {what} ({:.2}s, limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(
        failures.is_empty(),
        "{id}: {} failures, first: {}",
        failures.len(),
        failures[0]
    );
    assert!(elapsed < limit, "{id}: took {elapsed:?}, limit {limit:?}");
}

fn grid_sets() -> Vec<(usize, usize, Vec<Vec<u64>>)> {
    GRID.iter()
        .map(|&(n, k)| {
            (
                n,
                k,
                enumerate_valid_sequences(n, k)
                    .unwrap()
                    .sequences
                    .into_iter()
                    .collect(),
            )
        })
        .collect()
}

#[test]
fn criterion_1_prefix_condition_is_exact() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut total = 0;
    for (n, k) in GRID {
        let brute = all_losing_sequences_bruteforce(n, k, DEFAULT_BUDGET).unwrap();
        let gen = enumerate_valid_sequences(n, k).unwrap();
        total += gen.len();
        for s in brute.sequences.symmetric_difference(&gen.sequences) {
            failures.push(format!("(n,k)=({n},{k}) differs at {s:?}"));
        }
    }
    verdict(
        "C1",
        &format!("brute-force set = checker set on 8 grid points ({total} sequences)"),
        start.elapsed(),
        Duration::from_secs(60),
        &failures,
    );
}

#[test]
fn criterion_2_constructive_sufficiency() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases: Vec<LosingScoreSequence> = Vec::new();
    for (_, k, seqs) in grid_sets() {
        cases.extend(
            seqs.into_iter()
                .map(|s| LosingScoreSequence::new(k, s).unwrap()),
        );
    }
    for (n, k) in [(10, 3), (12, 4), (20, 2)] {
        for seed in 0..1000 {
            cases.push(random_losing_sequence(n, k, Seed(seed)).unwrap());
        }
    }
    for s in &cases {
        for strategy in [Strategy::Assignment, Strategy::Recursive] {
            match realize(s, strategy) {
                Ok(h) if h.losing_score_vector() == s.scores() => {}
                Ok(h) => failures.push(format!(
                    "{strategy:?} k={} {:?} realized as {:?}",
                    s.k(),
                    s.scores(),
                    h.losing_score_vector()
                )),
                Err(e) => failures.push(format!("{strategy:?} k={} {:?}: {e}", s.k(), s.scores())),
            }
        }
    }
    verdict(
        "C2",
        &format!(
            "{} sequences realized exactly per vertex by both strategies",
            cases.len()
        ),
        start.elapsed(),
        Duration::from_secs(120),
        &failures,
    );
}

fn tournament_score_sets(n: usize) -> BTreeSet<Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|bits| {
            let mut s = vec![0u64; n];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                s[if bits >> i & 1 == 1 { a } else { b }] += 1;
            }
            s.sort_unstable();
            s
        })
        .collect()
}

fn sorted_sequences(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                let lo = p.last().copied().unwrap_or(0);
                (lo..=max).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn landau_inequality(s: &[u64]) -> bool {
    let n = s.len() as u64;
    let mut prefix = 0;
    for (i, &x) in s.iter().enumerate() {
        prefix += x;
        let j = i as u64 + 1;
        if prefix < j * (j - 1) / 2 {
            return false;
        }
    }
    prefix == n * (n - 1) / 2
}

fn score_check(s: &[u64]) -> bool {
    let raw: Vec<i64> = s.iter().map(|&x| x as i64).collect();
    check_score_scores(&raw, 2).unwrap().is_valid()
}

#[test]
fn criterion_3_landau_specialization() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=6 {
        let truth = tournament_score_sets(n);
        let accepted: BTreeSet<Vec<u64>> = sorted_sequences(n, n as u64)
            .into_iter()
            .filter(|s| score_check(s))
            .collect();
        if accepted != truth {
            failures.push(format!(
                "n={n}: checker {} sequences, tournaments {}",
                accepted.len(),
                truth.len()
            ));
        }
    }
    for n in 1..=8 {
        for s in sorted_sequences(n, n as u64) {
            if score_check(&s) != landau_inequality(&s) {
                failures.push(format!("n={n}: disagreement on {s:?}"));
            }
        }
    }
    verdict(
        "C3",
        "k=2 score check = all tournaments (n<=6) = Landau inequality (n<=8)",
        start.elapsed(),
        Duration::from_secs(30),
        &failures,
    );
}

fn potential(r: &[u64], t: &[u64]) -> u64 {
    r.iter().zip(t).map(|(&a, &b)| a.abs_diff(b)).sum()
}

#[test]
fn criterion_4_exchange_transform() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut moves = [0usize; 3];
    for (gi, (n, k)) in GRID.into_iter().enumerate() {
        for i in 0..500u64 {
            let base = (gi as u64) << 32 | i << 1;
            let h = random_hypertournament(n, k, Seed(base)).unwrap();
            let target = random_hypertournament(n, k, Seed(base | 1))
                .unwrap()
                .losing_score_vector();
            let phi = potential(&h.losing_score_vector(), &target);
            let t = match transform_to_target(&h, &target) {
                Ok(t) => t,
                Err(e) => {
                    failures.push(format!("(n,k)=({n},{k}) pair {i}: {e}"));
                    continue;
                }
            };
            if t.result.losing_score_vector() != target {
                failures.push(format!("(n,k)=({n},{k}) pair {i}: target missed"));
            }
            if 2 * t.log.len() as u64 != phi {
                failures.push(format!(
                    "(n,k)=({n},{k}) pair {i}: {} moves for phi={phi}",
                    t.log.len()
                ));
            }
            let mut cur: Hypertournament = h;
            for mv in &t.log {
                moves[match mv {
                    ExchangeMove::Direct { .. } => 0,
                    ExchangeMove::Double { .. } => 1,
                    ExchangeMove::Chain { .. } => 2,
                }] += 1;
                let next = match apply_move(&cur, mv) {
                    Ok(next) => next,
                    Err(e) => {
                        failures.push(format!("replay of {mv}: {e}"));
                        break;
                    }
                };
                let before = cur.losing_score_vector();
                let after = next.losing_score_vector();
                for v in 0..n {
                    let want = if v == mv.over() {
                        before[v] - 1
                    } else if v == mv.under() {
                        before[v] + 1
                    } else {
                        before[v]
                    };
                    if after[v] != want {
                        failures.push(format!(
                            "{mv}: vertex {v} went {} -> {}",
                            before[v], after[v]
                        ));
                    }
                }
                cur = next;
            }
        }
    }
    verdict(
        "C4",
        &format!(
            "4000 transforms, no stuck state, |log| = phi/2, two entries per move \
             (direct {}, double {}, chain {})",
            moves[0], moves[1], moves[2]
        ),
        start.elapsed(),
        Duration::from_secs(60),
        &failures,
    );
}

#[test]
fn criterion_5_split_fidelity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases: Vec<LosingScoreSequence> = Vec::new();
    for (_, k, seqs) in grid_sets() {
        cases.extend(
            seqs.into_iter()
                .map(|s| LosingScoreSequence::new(k, s).unwrap()),
        );
    }
    for (n, k) in [(10, 3), (12, 4), (20, 2)] {
        for seed in 0..1000 {
            cases.push(random_losing_sequence(n, k, Seed(seed)).unwrap());
        }
    }
    let mut applied = 0;
    for s in &cases {
        let Some(d) = case_a_decompose(s) else {
            continue;
        };
        applied += 1;
        let n = s.n();
        let h = realize(s, Strategy::Recursive).unwrap();
        let head = full_mask(d.split);
        let mut mixed = vec![0u64; n];
        for a in h.arcs() {
            if a.subset() & head != 0 && a.subset() & !head != 0 {
                mixed[a.loser()] += 1;
            }
        }
        let tag = format!("k={} {:?} split {}", s.k(), s.scores(), d.split);
        if mixed[..d.split].iter().any(|&c| c != 0) {
            failures.push(format!("{tag}: mixed arc lost inside the head"));
        }
        if mixed[d.split..].iter().any(|&c| c != d.share) {
            failures.push(format!(
                "{tag}: tail shares {:?}, want {}",
                &mixed[d.split..],
                d.share
            ));
        }
        let head_vs: Vec<usize> = (0..d.split).collect();
        let tail_vs: Vec<usize> = (d.split..n).collect();
        if h.induced(&head_vs).unwrap().losing_score_vector() != d.head.scores() {
            failures.push(format!("{tag}: head restriction"));
        }
        if h.induced(&tail_vs).unwrap().losing_score_vector() != d.tail_reduced.scores() {
            failures.push(format!("{tag}: tail restriction"));
        }
    }
    if applied == 0 {
        failures.push("decomposition never applied".into());
    }
    let fractional = LosingScoreSequence::new(3, vec![0, 0, 1, 4, 5]).unwrap();
    if case_a_decompose(&fractional).is_some() {
        failures.push("[0,0,1,4,5] should not decompose".into());
    }
    match realize(&fractional, Strategy::Recursive) {
        Ok(h) if h.losing_score_vector() == [0, 0, 1, 4, 5] => {}
        other => failures.push(format!("[0,0,1,4,5] fallback: {other:?}")),
    }
    verdict(
        "C5",
        &format!(
            "split realizations faithful on {applied} decomposable sequences; fallback verified"
        ),
        start.elapsed(),
        Duration::from_secs(120),
        &failures,
    );
}

#[test]
fn criterion_6_binomial_algebra() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let c = |p: u64, q: u64| binom(p, q).unwrap();
    for j in 0..=30u64 {
        for m in 0..=30u64 {
            for k in 2..=j + m {
                let mixed: u128 = (1..k).map(|i| c(j, i) * c(m, k - i)).sum();
                if c(j, k) + c(m, k) + mixed != c(j + m, k) {
                    failures.push(format!("Vandermonde split fails at j={j} m={m} k={k}"));
                }
            }
        }
    }
    let fact = |n: u64| -> u128 { (1..=n as u128).product() };
    for p in 0..=20u64 {
        for q in 0..=20u64 {
            let want = if q > p {
                0
            } else {
                fact(p) / (fact(q) * fact(p - q))
            };
            if c(p, q) != want {
                failures.push(format!("C({p},{q}) = {} != {want}", c(p, q)));
            }
        }
    }
    verdict(
        "C6",
        "Vandermonde split for j,m<=30 and binom = factorial formula for p,q<=20",
        start.elapsed(),
        Duration::from_secs(30),
        &failures,
    );
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn cli(args: &[&str]) -> (Option<i32>, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_hypertournament"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        o.status.code(),
        String::from_utf8_lossy(&o.stdout).into_owned(),
    )
}

fn expect(failures: &mut Vec<String>, label: &str, args: &[&str], code: i32, contains: &str) {
    let (got, out) = cli(args);
    if got != Some(code) || !out.contains(contains) {
        failures.push(format!(
            "{label}: exit {got:?} (want {code}), stdout {out:?}"
        ));
    }
}

#[test]
fn criterion_7_cli_contract() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let dir = tempfile::tempdir().unwrap();
    let tmp = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    // check
    expect(
        &mut failures,
        "check valid",
        &["check", "--inline", "0 0 1", "--k", "3"],
        0,
        "valid",
    );
    expect(
        &mut failures,
        "check prefix",
        &["check", "--inline", "0 0 0 4", "--k", "3"],
        1,
        "prefix-violation at j=3: 0 < 1",
    );
    expect(
        &mut failures,
        "check regular",
        &["check", "--inline", "1 1 1 1", "--k", "3"],
        0,
        "valid",
    );
    expect(
        &mut failures,
        "check malformed",
        &["check", data("ht_short_arc.txt").to_str().unwrap()],
        2,
        "",
    );

    // realize -> golden file -> verify --expect
    for (seq, golden, strategy) in [
        (
            "seq_4_3_split.txt",
            "ht_4_3_split_recursive.txt",
            "recursive",
        ),
        (
            "seq_5_3_fractional_share.txt",
            "ht_5_3_fractional_share_recursive.txt",
            "recursive",
        ),
        (
            "seq_4_3_regular.txt",
            "ht_4_3_regular_assignment.txt",
            "assignment",
        ),
    ] {
        let out = tmp(golden);
        let seq = data(seq);
        expect(
            &mut failures,
            "realize",
            &[
                "realize",
                seq.to_str().unwrap(),
                "-o",
                &out,
                "--strategy",
                strategy,
            ],
            0,
            "wrote",
        );
        let written = std::fs::read_to_string(&out).unwrap_or_default();
        let want = std::fs::read_to_string(data(golden)).unwrap();
        if written != want {
            failures.push(format!("{golden}: output differs from golden file"));
        }
        expect(
            &mut failures,
            "verify golden",
            &["verify", &out, "--expect", seq.to_str().unwrap()],
            0,
            "matches expected sequence",
        );
    }
    let single = tmp("single.txt");
    std::fs::write(dir.path().join("s001.txt"), "3 3\n0 0 1\n").unwrap();
    expect(
        &mut failures,
        "realize single",
        &["realize", &tmp("s001.txt"), "-o", &single],
        0,
        "",
    );
    if std::fs::read_to_string(&single).unwrap_or_default() != "3 3\n0 1 2\n" {
        failures.push("realize [0,0,1] should write the single arc `0 1 2`".into());
    }
    expect(
        &mut failures,
        "realize invalid",
        &[
            "realize",
            data("seq_4_3_invalid.txt").to_str().unwrap(),
            "-o",
            &tmp("x.txt"),
        ],
        1,
        "prefix-violation",
    );
    expect(
        &mut failures,
        "realize missing input",
        &["realize", &tmp("nope.txt"), "-o", &tmp("y.txt")],
        2,
        "",
    );

    // verify structural and parse failures
    expect(
        &mut failures,
        "verify duplicate",
        &["verify", data("ht_duplicate_subset.txt").to_str().unwrap()],
        1,
        "subset appears twice",
    );
    expect(
        &mut failures,
        "verify short arc",
        &["verify", data("ht_short_arc.txt").to_str().unwrap()],
        2,
        "",
    );

    // enumerate
    expect(
        &mut failures,
        "enumerate count",
        &["enumerate", "--n", "4", "--k", "3", "--count-only"],
        0,
        "4",
    );
    let (code, out) = cli(&["enumerate", "--n", "3", "--k", "3"]);
    if code != Some(0) || out != "0 0 1\n" {
        failures.push(format!("enumerate (3,3): {code:?} {out:?}"));
    }
    expect(
        &mut failures,
        "enumerate oracle",
        &["enumerate", "--n", "5", "--k", "3", "--oracle"],
        0,
        "",
    );
    expect(
        &mut failures,
        "enumerate budget",
        &[
            "enumerate",
            "--n",
            "6",
            "--k",
            "3",
            "--oracle",
            "--budget",
            "1000",
        ],
        2,
        "",
    );

    // random -> verify
    let r = tmp("random.txt");
    expect(
        &mut failures,
        "random",
        &["random", "--n", "7", "--k", "4", "--seed", "42", "-o", &r],
        0,
        "",
    );
    expect(&mut failures, "verify random", &["verify", &r], 0, "ok");

    // convert example and involution over every grid sequence
    expect(
        &mut failures,
        "convert",
        &[
            "convert",
            data("seq_4_3_split.txt").to_str().unwrap(),
            "--to",
            "scores",
        ],
        0,
        "4 3\n0 2 3 3\n",
    );
    let mut converted = 0;
    for (n, k, seqs) in grid_sets() {
        for s in seqs {
            let text = format!(
                "{n} {k}\n{}\n",
                s.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            let (a, b, c) = (tmp("c0.txt"), tmp("c1.txt"), tmp("c2.txt"));
            std::fs::write(&a, &text).unwrap();
            let (c1, _) = cli(&["convert", &a, "--to", "scores", "-o", &b]);
            let (c2, _) = cli(&["convert", &b, "--to", "losing", "-o", &c]);
            let back = std::fs::read_to_string(&c).unwrap_or_default();
            if c1 != Some(0) || c2 != Some(0) || back != text {
                failures.push(format!("convert involution failed for ({n},{k}) {s:?}"));
            }
            converted += 1;
        }
    }

    verdict(
        "C7",
        &format!(
            "CLI exit codes 0/1/2, golden round trips, convert involution on {converted} sequences"
        ),
        start.elapsed(),
        Duration::from_secs(120),
        &failures,
    );
}
