//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

#[path = "../../core/tests/common/cf_oracle.rs"]
mod cf_oracle;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use hoflab::fetch::{default_fixture_dir, BFileStore, HttpTransport, Mode};
use hoflab_core::exactnum::{isqrt_u128, QuadraticSurd};
use hoflab_core::fibword::{fib_u64, position_of_mth_zero};
use hoflab_core::oeis::{diff, OffsetMap};
use hoflab_core::sequences::{
    hof_g_closed, BeattyPair, CelayaRuskey, ClosedForm, GreedyZ, Married, Sequence, SequenceId,
    SequenceName,
};
use hoflab_core::verify::{self, run_all, CheckReport, NoClock, RunConfig, FAULT_CHECK_NAME};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_RUNTIME_LIMIT: Duration = Duration::from_secs(1);
const AVG_THEOREM_RUNTIME_TARGET: Duration = Duration::from_secs(30);
const AVG_THEOREM_N: u64 = 1_000_000;
const REC_CLOSED_N: u64 = 100_000;
const CR_K_MAX: u32 = 5;
const CR_N: u64 = 10_000;
const CLOITRE_N: u64 = 100_000;
const EXCEPTION_N: u64 = 10_000;
const GREEDY_N: u64 = 10_000;
const FIB_WORD_INDEX: u32 = 20;
const MORPHISM_MAX: u32 = 30;
const FIB_LEMMA_K: u32 = 40;
const COMPLEMENTARITY_N: u64 = 1_000_000;
const PELL_N: u64 = 100_000;
const MIN_FIXTURE_TERMS: usize = 1000;
const FLOOR_ORACLE_PAIRS: usize = 10_000;
const FLOOR_ORACLE_MAX_N: u64 = 1_000_000_000_000;
const FLOOR_ORACLE_SEED: u64 = 0x5EED_F100;

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            notes: Vec::new(),
        }
    }

    fn require(&mut self, cond: bool, note: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(note.into());
        }
    }

    fn report(&mut self, r: &CheckReport) {
        let clean = r.is_pass() && r.passed > 0;
        self.require(clean, r.to_string());
    }

    fn info(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

fn gen_lines(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_hoflab"))
        .arg("gen")
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "gen {args:?} failed");
    String::from_utf8(out.stdout).unwrap()
}

fn lines(values: &[u64]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}

fn golden_tables() -> Outcome {
    const G: [u64; 19] = [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11];
    const L: [u64; 18] = [
        1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19, 21, 22, 24, 25, 27, 29,
    ];
    const U: [u64; 18] = [
        2, 5, 7, 10, 13, 15, 18, 20, 23, 26, 28, 31, 34, 36, 39, 41, 44, 47,
    ];
    const W: [u64; 19] = [
        0, 2, 1, 5, 7, 3, 10, 4, 13, 15, 6, 18, 20, 8, 23, 9, 26, 28, 11,
    ];
    let mut o = Outcome::new();
    let start = Instant::now();
    let cases: [(&[&str], &[u64], &str); 5] = [
        (&["G", "--from", "0", "--to", "18"], &G, "G table"),
        (&["L", "--from", "1", "--to", "18"], &L, "L table"),
        (&["U", "--from", "1", "--to", "18"], &U, "U table"),
        (&["W", "--from", "0", "--to", "18"], &W, "W table"),
        (&["Wbar", "--from", "0", "--to", "18"], &G, "Wbar table"),
    ];
    for (args, expected, label) in cases {
        o.require(
            gen_lines(args) == lines(expected),
            format!("{label} differs"),
        );
    }
    let elapsed = start.elapsed();
    o.require(elapsed < TABLE_RUNTIME_LIMIT, format!("took {elapsed:?}"));
    o.info(format!("5 gen runs in {} ms", elapsed.as_millis()));
    o
}

fn avg_theorem() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let r = verify::check_avg_theorem(AVG_THEOREM_N);
    let elapsed = start.elapsed();
    o.report(&r);
    o.require(r.hi == AVG_THEOREM_N, "range");
    o.require(
        elapsed < AVG_THEOREM_RUNTIME_TARGET,
        format!("took {elapsed:?}"),
    );
    o.info(format!(
        "n <= {AVG_THEOREM_N} in {} ms",
        elapsed.as_millis()
    ));
    o
}

fn recursion_closed_form() -> Outcome {
    let mut o = Outcome::new();
    o.report(&verify::check_rec_closed(REC_CLOSED_N));
    o.report(&verify::check_cr(CR_K_MAX, CR_N).unwrap());
    o.report(&verify::check_cloitre(CLOITRE_N));
    o
}

fn fib(m: u32) -> u64 {
    fib_u64(m).unwrap()
}

fn fib_set(n_max: u64, from_k: u32, index: impl Fn(u32) -> u32, offset: i64) -> BTreeSet<u64> {
    (from_k..)
        .map(|k| fib(index(k)) as i64 + offset)
        .take_while(|&v| v <= n_max as i64)
        .map(|v| v as u64)
        .collect()
}

fn preview(set: &BTreeSet<u64>) -> String {
    let head: Vec<u64> = set.iter().copied().take(12).collect();
    format!("{head:?}{}", if set.len() > 12 { " ..." } else { "" })
}

fn exception_laws() -> Outcome {
    let mut o = Outcome::new();
    // exceptions for this k and beyond all exceed EXCEPTION_N
    let k_bound = (1..).find(|&k| fib(2 * k) > EXCEPTION_N).unwrap();
    let az = verify::check_az(k_bound, EXCEPTION_N);
    let stoll = verify::check_stoll(k_bound, EXCEPTION_N);
    o.report(&az);
    o.report(&stoll);
    o.require(
        az.hi == EXCEPTION_N && stoll.hi == EXCEPTION_N,
        "exception range clamped",
    );

    // The observed exception sets, derived independently of the checks.
    let pair = BeattyPair::golden();
    let mut z = GreedyZ::new();
    let mut a = Married::a();
    let mut b = Married::b();
    let (mut z_exc, mut a_exc, mut b_exc) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
    let mut mismatched_m = 0;
    for n in 1..=EXCEPTION_N {
        if z.z(n).unwrap() != pair.swap(n) {
            z_exc.insert(n);
        }
        let g = hof_g_closed(n);
        if a.get_a(n).unwrap() != g {
            a_exc.insert(n);
        }
        if b.get_b(n).unwrap() != g {
            b_exc.insert(n);
        }
        if n >= 2 && b.get_b(n).unwrap() != z.m(n).unwrap() {
            mismatched_m += 1;
        }
    }
    let odd = |k: u32| 2 * k + 1;
    let mut expected_z = fib_set(EXCEPTION_N, 1, odd, -1);
    expected_z.extend(fib_set(EXCEPTION_N, 1, odd, 0));
    o.require(
        z_exc == expected_z,
        format!("z/W exceptions {}", preview(&z_exc)),
    );
    let expected_a = fib_set(EXCEPTION_N, 2, |k| 2 * k, -1);
    o.require(
        a_exc == expected_a,
        format!("a exceptions {}", preview(&a_exc)),
    );
    let expected_b = fib_set(EXCEPTION_N, 1, odd, -1);
    o.require(
        b_exc == expected_b,
        format!("b exceptions {}", preview(&b_exc)),
    );
    o.require(
        mismatched_m == 0,
        format!("b != m at {mismatched_m} indices"),
    );
    o.info(format!(
        "{} z/W, {} a, {} b exception indices up to {EXCEPTION_N}",
        z_exc.len(),
        a_exc.len(),
        b_exc.len()
    ));
    o
}

fn greedy_equivalence() -> Outcome {
    let mut o = Outcome::new();
    o.report(&verify::check_greedy_f(GREEDY_N));
    o
}

fn fibonacci_word() -> Outcome {
    let mut o = Outcome::new();
    let m_max = fib(FIB_WORD_INDEX);
    o.report(&verify::check_fib_word(m_max));
    let pair = BeattyPair::golden();
    for m in (1..=m_max).step_by(97).chain([m_max]) {
        o.require(
            position_of_mth_zero(m).unwrap() == pair.lower(m),
            format!("position_of_mth_zero({m})"),
        );
    }
    o.report(&verify::check_morphism_counts(MORPHISM_MAX));
    o.info("morphism counts checked as |mu^m(0)| = F_m+2 with mu(0) = 01");
    o
}

fn fib_lemma() -> Outcome {
    let mut o = Outcome::new();
    let r = verify::check_fib_lemma(FIB_LEMMA_K);
    o.require(r.hi == u64::from(FIB_LEMMA_K), "range");
    o.report(&r);
    o
}

fn complementarity() -> Outcome {
    let mut o = Outcome::new();
    for gamma in [
        hoflab_core::sequences::constants::golden_gamma(),
        hoflab_core::sequences::constants::silver_gamma(),
    ] {
        let r = verify::check_complementarity(&gamma, COMPLEMENTARITY_N).unwrap();
        o.info(format!("{gamma}: [1, {}]", r.hi));
        o.report(&r);
    }
    o
}

fn pell_identities() -> Outcome {
    let mut o = Outcome::new();
    let mut h = CelayaRuskey::pell();
    let mut lower = ClosedForm::pell_lower();
    let mut upper = ClosedForm::pell_upper();
    let mut r_slow = ClosedForm::pell_slow();
    let mut bad = 0;
    for n in 1..=PELL_N {
        let l = lower.term(n).unwrap();
        let u = upper.term(n).unwrap();
        if h.get(l).unwrap() != n || h.get(u).unwrap() != r_slow.term(n).unwrap() {
            bad += 1;
        }
    }
    o.require(bad == 0, format!("{bad} Pell identity failures"));
    o.report(
        &verify::check_slu(&hoflab_core::sequences::constants::silver_gamma(), PELL_N).unwrap(),
    );
    let swap = ClosedForm::pell_swap().terms(1, 18).unwrap();
    o.require(
        swap == verify::PELL_SWAP_LISTING,
        format!("pell swap {swap:?}"),
    );
    o
}

fn catalog() -> Vec<(&'static str, SequenceId)> {
    use SequenceName::*;
    [
        ("A005206", GClosed),
        ("A005206", GRec),
        ("A000201", L),
        ("A001950", U),
        ("A002251", WSwap),
        ("A073869", WAvg),
        ("A097508", HPell),
        ("A049472", RSlow),
        ("A003151", LPell),
        ("A003152", UPell),
        ("A109250", WPellSwap),
        ("A063882", VRec),
        ("A138466", Cloitre),
        ("A005378", MarriedA),
        ("A005379", MarriedB),
        ("A019444", FGreedy),
    ]
    .into_iter()
    .map(|(a, n)| (a, SequenceId::plain(n)))
    .collect()
}

fn offline_store() -> BFileStore {
    let cache = std::env::temp_dir().join("hoflab-acceptance-empty-cache");
    BFileStore::new(
        Some(default_fixture_dir()),
        cache,
        Box::new(HttpTransport::default()),
    )
}

fn oeis_conformance() -> Outcome {
    let mut o = Outcome::new();
    let store = offline_store();
    for (a_number, id) in catalog() {
        let bfile = match store.fetch(a_number, Mode::Offline) {
            Ok(b) => b,
            Err(e) => {
                o.require(false, e.to_string());
                continue;
            }
        };
        o.require(
            bfile.len() >= MIN_FIXTURE_TERMS,
            format!("{a_number}: {} terms", bfile.len()),
        );
        match diff(id, &bfile, OffsetMap::default(), None) {
            Ok(out) => {
                o.require(out.truncated.is_none(), format!("{a_number} truncated"));
                o.require(
                    out.report.size() as usize >= MIN_FIXTURE_TERMS,
                    format!("{a_number} overlap {}", out.report.size()),
                );
                o.report(&out.report);
            }
            Err(e) => o.require(false, format!("{a_number}: {e}")),
        }
    }
    o
}

fn fault_injection() -> Outcome {
    let mut o = Outcome::new();
    let store = offline_store();
    let mut bfile = store.fetch("A002251", Mode::Offline).unwrap();
    let at = 500i64;
    let original = bfile.get(at).unwrap().clone();
    let corrupted: BigInt = &original + 1;
    bfile.set(at, corrupted.clone());
    let r = diff(
        SequenceId::plain(SequenceName::WSwap),
        &bfile,
        OffsetMap::default(),
        None,
    )
    .unwrap()
    .report;
    let c = r.first_counterexample.clone();
    o.require(
        r.failed == 1
            && c.as_ref().is_some_and(|c| {
                c.index == at as u64
                    && c.expected == corrupted.to_string()
                    && c.actual == original.to_string()
            }),
        format!("corrupted fixture: {r}"),
    );

    let config = RunConfig {
        max_n: 1000,
        inject_fault: true,
        checks: Some(vec![verify::CheckKind::RecClosed]),
        ..RunConfig::default()
    };
    let reports = run_all(&config, &NoClock);
    let fault = reports
        .iter()
        .find(|r| r.check_name == FAULT_CHECK_NAME)
        .unwrap();
    let c = fault.first_counterexample.as_ref();
    let expected = hof_g_closed(500);
    o.require(
        fault.failed == 1
            && c.is_some_and(|c| {
                c.index == 500
                    && c.expected == expected.to_string()
                    && c.actual == (expected + 1).to_string()
            }),
        format!("corrupted sequence: {fault}"),
    );

    let status = Command::new(env!("CARGO_BIN_EXE_hoflab"))
        .args(["verify", "--to", "18", "--inject-fault"])
        .output()
        .unwrap()
        .status;
    o.require(
        status.code() == Some(1),
        format!("verify --inject-fault exit {status}"),
    );
    o
}

fn random_surd(rng: &mut ChaCha8Rng) -> QuadraticSurd {
    let d = loop {
        let d = rng.gen_range(2u64..=1_000_000);
        let r = isqrt_u128(u128::from(d));
        if r * r != u128::from(d) {
            break d;
        }
    };
    let b = loop {
        let b = rng.gen_range(-10_000i64..=10_000);
        if b != 0 {
            break b;
        }
    };
    QuadraticSurd::new(
        rng.gen_range(-10_000i64..=10_000),
        b,
        rng.gen_range(1i64..=10_000),
        d,
    )
    .unwrap()
}

fn exact_floor_oracle() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(FLOOR_ORACLE_SEED);
    let mut mismatches = 0;
    for _ in 0..FLOOR_ORACLE_PAIRS {
        let q = random_surd(&mut rng);
        let n = rng.gen_range(0..=FLOOR_ORACLE_MAX_N);
        let expected = cf_oracle::cf_floor(q.a(), q.b(), q.c(), q.d(), &BigInt::from(n));
        if hoflab_core::exactnum::floor_scale(&q, n) != expected || q.scaler().floor(n) != expected
        {
            mismatches += 1;
            if mismatches <= 3 {
                o.info(format!("floor({n} * {q}) expected {expected}"));
            }
        }
    }
    o.require(mismatches == 0, format!("{mismatches} mismatches"));
    o.info(format!(
        "{FLOOR_ORACLE_PAIRS} pairs, seed {FLOOR_ORACLE_SEED:#x}"
    ));
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("golden tables", golden_tables),
        ("average theorem at scale", avg_theorem),
        ("recursion equals closed form", recursion_closed_form),
        ("exception laws", exception_laws),
        ("greedy equivalence", greedy_equivalence),
        ("Fibonacci-word oracle", fibonacci_word),
        ("Wythoff values at Fibonacci numbers", fib_lemma),
        ("complementarity", complementarity),
        ("Pell identities", pell_identities),
        ("OEIS conformance", oeis_conformance),
        ("fault injection", fault_injection),
        ("exact-floor oracle", exact_floor_oracle),
    ];
    let mut failures = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "{status} {:>2} {label} ({} ms)",
            i + 1,
            start.elapsed().as_millis()
        );
        for note in &outcome.notes {
            println!("       {note}");
        }
        if !outcome.ok {
            failures += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
