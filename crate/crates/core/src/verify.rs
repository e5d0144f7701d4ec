//! Range checks for the identities relating the sequences.
//!
//! Each check walks an index range and counts, per index, whether every
//! identity asserted at that index holds. The first failing index is kept as
//! a counterexample. Checks are pure functions of their parameters.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::time::Duration;

use crate::exactnum::{metallic_gamma, ExactError, QuadraticSurd};
use crate::fibword::{fib, fib_u64, wythoff_at_fib, FibonacciWordIter};
use crate::sequences::{
    constants, BeattyPair, CelayaRuskey, Cloitre, GreedyF, GreedyZ, HofstadterG, Married, Sequence,
    SequenceError, SequenceId, SwapAverage,
};

/// Members of `{n : s(n+1) = s(n)}` (resp. `s(n+1) = s(n) + 1`), each shifted
/// by this amount, are exactly `⌊m/(1−γ)⌋` (resp. `⌊m/γ⌋`) for `m = 1, 2, …`.
///
/// Found by scanning the golden and silver cases; `check_ks_split` fails at
/// the first index where the alignment breaks.
pub const KS_INDEX_SHIFT: u64 = 1;

/// The Pell recursion listed term by term, `n = 0..=25`.
pub const PELL_LISTING: [u64; 26] = [
    0, 0, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 9, 10, 10,
];

/// The Pell swap listed term by term, `n = 1..=18`.
pub const PELL_SWAP_LISTING: [u64; 18] = [
    2, 1, 4, 3, 7, 9, 5, 12, 6, 14, 16, 8, 19, 10, 21, 11, 24, 26,
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{check} needs an upper bound of at least {min}, got {got}")]
    RangeTooSmall {
        check: &'static str,
        min: u64,
        got: u64,
    },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

/// The first index at which a check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: u64,
    pub expected: String,
    pub actual: String,
    /// Which identity failed.
    pub detail: String,
}

/// Outcome of one check over `lo..=hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    pub lo: u64,
    pub hi: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }

    /// Number of indices covered.
    pub fn size(&self) -> u64 {
        if self.hi < self.lo {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    /// Counts equal everywhere except elapsed time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        CheckReport {
            elapsed: Duration::ZERO,
            ..self.clone()
        } == CheckReport {
            elapsed: Duration::ZERO,
            ..other.clone()
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} lo={} hi={} passed={} failed={} elapsed_ms={}",
            if self.is_pass() { "PASS" } else { "FAIL" },
            self.check_name,
            self.lo,
            self.hi,
            self.passed,
            self.failed,
            self.elapsed.as_millis()
        )?;
        if let Some(c) = &self.first_counterexample {
            write!(
                f,
                " first_counterexample=(n={}, expected={}, actual={}, {})",
                c.index, c.expected, c.actual, c.detail
            )?;
        }
        Ok(())
    }
}

/// One failed identity at an index, before the index is attached.
#[derive(Debug, Clone)]
pub struct Mismatch {
    expected: String,
    actual: String,
    detail: String,
}

impl Mismatch {
    pub fn new(expected: impl ToString, actual: impl ToString, detail: impl Into<String>) -> Self {
        Mismatch {
            expected: expected.to_string(),
            actual: actual.to_string(),
            detail: detail.into(),
        }
    }
}

impl From<SequenceError> for Mismatch {
    fn from(e: SequenceError) -> Self {
        Mismatch::new("a value", "error", e.to_string())
    }
}

/// `Ok` iff `expected == actual`.
pub fn ensure_eq<T: PartialEq + ToString>(
    expected: T,
    actual: T,
    detail: &str,
) -> Result<(), Mismatch> {
    if expected == actual {
        Ok(())
    } else {
        Err(Mismatch::new(expected, actual, detail))
    }
}

/// Runs `step` for every index in `lo..=hi` and tallies the outcomes.
pub fn tally(
    name: impl Into<String>,
    lo: u64,
    hi: u64,
    mut step: impl FnMut(u64) -> Result<(), Mismatch>,
) -> CheckReport {
    let mut report = CheckReport {
        check_name: name.into(),
        lo,
        hi,
        passed: 0,
        failed: 0,
        first_counterexample: None,
        elapsed: Duration::ZERO,
    };
    if hi < lo {
        return report;
    }
    for n in lo..=hi {
        match step(n) {
            Ok(()) => report.passed += 1,
            Err(m) => {
                report.failed += 1;
                if report.first_counterexample.is_none() {
                    report.first_counterexample = Some(Counterexample {
                        index: n,
                        expected: m.expected,
                        actual: m.actual,
                        detail: m.detail,
                    });
                }
            }
        }
    }
    report
}

/// Compares two sequences term by term.
pub fn check_sequences_agree(
    name: impl Into<String>,
    reference: &mut dyn Sequence,
    candidate: &mut dyn Sequence,
    lo: u64,
    hi: u64,
) -> CheckReport {
    let detail = format!("{} = {}", candidate.id(), reference.id());
    tally(name, lo, hi, |n| {
        ensure_eq(reference.term(n)?, candidate.term(n)?, &detail)
    })
}

/// A sequence with one deliberately wrong term, for harness self-tests.
pub struct FaultInjected<S> {
    inner: S,
    index: u64,
    delta: u64,
}

impl<S: Sequence> FaultInjected<S> {
    /// Adds `delta` to the term at `index`.
    pub fn new(inner: S, index: u64, delta: u64) -> Self {
        FaultInjected {
            inner,
            index,
            delta,
        }
    }
}

impl<S: Sequence> Sequence for FaultInjected<S> {
    fn id(&self) -> SequenceId {
        self.inner.id()
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        let v = self.inner.term(n)?;
        Ok(if n == self.index { v + self.delta } else { v })
    }
}

fn unit_interval(gamma: &QuadraticSurd) -> Result<BeattyPair, VerifyError> {
    Ok(BeattyPair::new(gamma)?)
}

/// Steps of `s(n) = ⌊(n+1)γ⌋` are 0 exactly on the Beatty sequence of
/// `1/(1−γ)` and 1 exactly on that of `1/γ` (after [`KS_INDEX_SHIFT`]).
pub fn check_ks_split(gamma: &QuadraticSurd, n_max: u64) -> Result<CheckReport, VerifyError> {
    if n_max < 2 {
        return Err(VerifyError::RangeTooSmall {
            check: "ks_split",
            min: 2,
            got: n_max,
        });
    }
    let pair = unit_interval(gamma)?;
    let (mut constant_rank, mut unit_rank) = (1u64, 1u64);
    Ok(tally("ks_split", 0, n_max, |n| {
        let step = pair.slow(n + 1) as i128 - pair.slow(n) as i128;
        match step {
            0 => {
                let expected = pair.upper(constant_rank);
                constant_rank += 1;
                ensure_eq(
                    expected,
                    n + KS_INDEX_SHIFT,
                    "constant step at floor(m/(1-gamma))",
                )
            }
            1 => {
                let expected = pair.lower(unit_rank);
                unit_rank += 1;
                ensure_eq(expected, n + KS_INDEX_SHIFT, "unit step at floor(m/gamma)")
            }
            other => Err(Mismatch::new("0 or 1", other, "increment of s")),
        }
    }))
}

/// `s(L(n)) = n` and `s(U(n)) = ⌊γ/(1−γ)·n⌋` with `s(x) = ⌊(x+1)γ⌋`.
pub fn check_slu(gamma: &QuadraticSurd, n_max: u64) -> Result<CheckReport, VerifyError> {
    let pair = unit_interval(gamma)?;
    let one = QuadraticSurd::integer(1, gamma.d())?;
    let ratio = gamma.try_div(&one.try_sub(gamma)?)?.scaler();
    Ok(tally("slu", 1, n_max, |n| {
        ensure_eq(n, pair.slow(pair.lower(n)), "s(L(n)) = n")?;
        ensure_eq(
            ratio.floor_u64(n),
            pair.slow(pair.upper(n)),
            "s(U(n)) = floor(gamma/(1-gamma) n)",
        )
    }))
}

/// Partial sums of `W` are divisible by `n+1`, the averages equal `G`, and
/// `(n+1)W̄(n) − nW̄(n−1) = W(n)`.
pub fn check_avg_theorem(n_max: u64) -> CheckReport {
    let pair = BeattyPair::golden();
    let mut sum = 0u128;
    let mut prev_avg = 0u128;
    tally("avg_theorem", 0, n_max, |n| {
        let w = pair.swap(n);
        sum += u128::from(w);
        let divisor = u128::from(n) + 1;
        if !sum.is_multiple_of(divisor) {
            return Err(Mismatch::new(
                0,
                sum % divisor,
                "partial sum of W divisible by n+1",
            ));
        }
        let avg = sum / divisor;
        let result = ensure_eq(u128::from(pair.slow(n)), avg, "average of W = G").and_then(|_| {
            if n == 0 {
                return Ok(());
            }
            let lhs = divisor * avg - u128::from(n) * prev_avg;
            ensure_eq(u128::from(w), lhs, "(n+1)G(n) - nG(n-1) = W(n)")
        });
        prev_avg = avg;
        result
    })
}

/// `W(U(n)) = ⌊γU(n)⌋` and `W(L(n)) = ⌊φL(n)⌋ + 1`.
pub fn check_scatter_lines(n_max: u64) -> CheckReport {
    let pair = BeattyPair::golden();
    tally("scatter_lines", 1, n_max, |n| {
        let (l, u) = (pair.lower(n), pair.upper(n));
        ensure_eq(
            pair.gamma_floor(u),
            pair.swap(u),
            "W(U(n)) = floor(gamma U(n))",
        )?;
        ensure_eq(
            pair.lower(l) + 1,
            pair.swap(l),
            "W(L(n)) = floor(phi L(n)) + 1",
        )
    })
}

/// The four closed forms for `L` and `U` at `F₂ₖ` and `F₂ₖ₋₁`, against exact floors.
pub fn check_fib_lemma(k_max: u32) -> CheckReport {
    let phi = constants::phi();
    let phi2 = constants::phi_squared();
    tally("fib_lemma", 1, u64::from(k_max), |k| {
        let k = k as u32;
        let closed = wythoff_at_fib(k)?;
        let even = fib(2 * k)?;
        let odd = fib(2 * k - 1)?;
        let direct = [
            phi.floor_scale(&even),
            phi2.floor_scale(&even),
            phi.floor_scale(&odd),
            phi2.floor_scale(&odd),
        ];
        const NAMES: [&str; 4] = [
            "L(F_2k) = F_2k+1 - 1",
            "U(F_2k) = F_2k+2 - 1",
            "L(F_2k-1) = F_2k",
            "U(F_2k-1) = F_2k+1",
        ];
        for ((c, d), name) in closed.iter().zip(&direct).zip(NAMES) {
            ensure_eq(c, d, name)?;
        }
        Ok(())
    })
}

impl From<crate::fibword::FibError> for Mismatch {
    fn from(e: crate::fibword::FibError) -> Self {
        Mismatch::new("a value", "error", e.to_string())
    }
}

fn fib_checked(m: u32) -> u64 {
    fib_u64(m).expect("Fibonacci index within u64 range")
}

/// Largest Fibonacci index whose value fits comfortably below `u64::MAX / 4`.
const MAX_EXCEPTION_FIB_INDEX: u32 = 88;

/// Upper bound of the range such that every exception index inside it
/// belongs to some `k ≤ k_max`: one below the first excluded exception.
fn clamp_to_exceptions(n_max: u64, first_excluded_fib: u32) -> u64 {
    if first_excluded_fib > MAX_EXCEPTION_FIB_INDEX {
        return n_max;
    }
    n_max.min(fib_checked(first_excluded_fib) - 2)
}

enum AzIndex {
    /// `n = F₂ₖ₊₁ − 1`
    BeforeOddFib(u32),
    /// `n = F₂ₖ₊₁`
    AtOddFib(u32),
    Regular,
}

fn az_classify(n: u64) -> AzIndex {
    let mut k = 1u32;
    loop {
        let f = fib_checked(2 * k + 1);
        if f > n + 1 {
            return AzIndex::Regular;
        }
        if f == n + 1 {
            return AzIndex::BeforeOddFib(k);
        }
        if f == n {
            return AzIndex::AtOddFib(k);
        }
        k += 1;
    }
}

/// `z` agrees with `W` and `m` with `W̄` except at `F₂ₖ₊₁ − 1` and `F₂ₖ₊₁`,
/// where the stated exceptional values hold.
///
/// The range is cut just before the first exception with `k > k_max`. At
/// `n = 1` (`k = 1`) the greedy start `z(1) = 1` replaces the formula value 0.
pub fn check_az(k_max: u32, n_max: u64) -> CheckReport {
    let hi = clamp_to_exceptions(n_max, 2 * k_max + 3);
    let pair = BeattyPair::golden();
    let mut z = GreedyZ::new();
    let mut avg = SwapAverage::new();
    tally("az", 1, hi, |n| {
        let (zn, mn) = (z.z(n)?, z.m(n)?);
        let (w, w_avg) = (pair.swap(n), avg.get(n)?);
        match az_classify(n) {
            AzIndex::BeforeOddFib(k) => {
                let expected_z = if n == 1 { 1 } else { fib_checked(2 * k) - 1 };
                ensure_eq(expected_z, zn, "z(F_2k+1 - 1) = F_2k - 1")?;
                ensure_eq(fib_checked(2 * k + 2) - 1, w, "W(F_2k+1 - 1) = F_2k+2 - 1")?;
                ensure_eq(fib_checked(2 * k) - 1, mn, "m(F_2k+1 - 1) = F_2k - 1")?;
                ensure_eq(fib_checked(2 * k), w_avg, "Wbar(F_2k+1 - 1) = F_2k")
            }
            AzIndex::AtOddFib(k) => {
                ensure_eq(fib_checked(2 * k + 2), zn, "z(F_2k+1) = F_2k+2")?;
                ensure_eq(fib_checked(2 * k), w, "W(F_2k+1) = F_2k")?;
                ensure_eq(w_avg, mn, "m = Wbar")
            }
            AzIndex::Regular => {
                ensure_eq(w, zn, "z = W")?;
                ensure_eq(w_avg, mn, "m = Wbar")
            }
        }
    })
}

fn fib_index_exact(x: u64) -> Option<u32> {
    (2..=MAX_EXCEPTION_FIB_INDEX).find(|&m| fib_checked(m) == x)
}

/// `a(n)` and `b(n)` equal `⌊(n+1)γ⌋` except `a(F₂ₖ − 1) = ⌊F₂ₖγ⌋ + 1` and
/// `b(F₂ₖ₊₁ − 1) = ⌊F₂ₖ₊₁γ⌋ − 1`; also `b(n) = m(n)`.
///
/// The range is cut just before the first exception with `k > k_max`.
pub fn check_stoll(k_max: u32, n_max: u64) -> CheckReport {
    let hi = clamp_to_exceptions(n_max, 2 * k_max + 2);
    let pair = BeattyPair::golden();
    let mut married_a = Married::a();
    let mut married_b = Married::b();
    let mut z = GreedyZ::new();
    tally("stoll", 1, hi, |n| {
        let (a, b, m) = (married_a.get_a(n)?, married_b.get_b(n)?, z.m(n)?);
        let base = pair.slow(n);
        let fib_above = fib_index_exact(n + 1);
        match fib_above {
            Some(idx) if idx % 2 == 0 => {
                ensure_eq(base + 1, a, "a(F_2k - 1) = floor(F_2k gamma) + 1")?;
                ensure_eq(base, b, "b = floor((n+1) gamma)")?;
            }
            Some(_) => {
                ensure_eq(base, a, "a = floor((n+1) gamma)")?;
                ensure_eq(base - 1, b, "b(F_2k+1 - 1) = floor(F_2k+1 gamma) - 1")?;
            }
            None => {
                ensure_eq(base, a, "a = floor((n+1) gamma)")?;
                ensure_eq(base, b, "b = floor((n+1) gamma)")?;
            }
        }
        ensure_eq(b, m, "b = m")
    })
}

/// The order-`k` recursion equals `⌊(n+1)γₖ⌋` for every `k ≤ k_max`; the
/// `k = 2` values also match [`PELL_LISTING`].
pub fn check_cr(k_max: u32, n_max: u64) -> Result<CheckReport, VerifyError> {
    let mut family = Vec::new();
    for k in 1..=k_max {
        let gamma = metallic_gamma(u64::from(k))?.scaler();
        family.push((CelayaRuskey::new(k).expect("k >= 1"), gamma));
    }
    Ok(tally("cr", 1, n_max, |n| {
        for (h, gamma) in family.iter_mut() {
            let k = h.k();
            let value = h.get(n)?;
            ensure_eq(
                gamma.floor_u64(n + 1),
                value,
                &format!("H_{k}(n) = floor((n+1) gamma_{k})"),
            )?;
            if k == 2 {
                if let Some(&listed) = PELL_LISTING.get(n as usize) {
                    ensure_eq(listed, value, "Pell listing")?;
                }
            }
        }
        Ok(())
    }))
}

/// Values of `⌊n/γ⌋` and `⌊n/(1−γ)⌋`, `n ≤ n_max`, cover `[1, min(L(N), U(N))]`
/// once each.
pub fn check_complementarity(
    gamma: &QuadraticSurd,
    n_max: u64,
) -> Result<CheckReport, VerifyError> {
    let pair = unit_interval(gamma)?;
    if n_max == 0 {
        return Ok(tally("complementarity", 1, 0, |_| Ok(())));
    }
    let bound = pair.lower(n_max).min(pair.upper(n_max));
    let mut hits = vec![0u8; bound as usize + 1];
    for (which, f) in [(0u8, 1u8), (1, 2)] {
        for n in 1.. {
            let v = if which == 0 {
                pair.lower(n)
            } else {
                pair.upper(n)
            };
            if v > bound {
                break;
            }
            let slot = &mut hits[v as usize];
            *slot = slot.saturating_add(f);
        }
    }
    Ok(tally("complementarity", 1, bound, |x| {
        match hits[x as usize] {
            1 | 2 => Ok(()),
            0 => Err(Mismatch::new("one hit", "gap", "every integer is hit")),
            _ => Err(Mismatch::new(
                "one hit",
                "collision",
                "L and U values disjoint",
            )),
        }
    }))
}

/// `G` by recursion equals `G` by closed form.
pub fn check_rec_closed(n_max: u64) -> CheckReport {
    let pair = BeattyPair::golden();
    let mut g = HofstadterG::new();
    tally("rec_closed", 0, n_max, |n| {
        let v = g.get(n);
        ensure_eq(pair.slow(n), v, "G_rec = G_closed")?;
        if n > 0 {
            let step = v - g.get(n - 1);
            if step > 1 {
                return Err(Mismatch::new("0 or 1", step, "increment of G"));
            }
        }
        Ok(())
    })
}

/// The increment rule and partner lookup give the same `W`, and `W` is an involution.
pub fn check_swap_routes(n_max: u64) -> CheckReport {
    let pair = BeattyPair::golden();
    tally("swap_routes", 0, n_max, |n| {
        let by_partner = pair.swap(n);
        let by_increment = if n == 0 {
            0
        } else {
            let g = pair.slow(n);
            if g == pair.slow(n - 1) {
                g
            } else {
                g + n
            }
        };
        ensure_eq(by_partner, by_increment, "increment route = partner route")?;
        ensure_eq(n, pair.swap(by_partner), "W(W(n)) = n")
    })
}

/// `W(n) = f(n+1) − 1`.
pub fn check_greedy_f(n_max: u64) -> CheckReport {
    let pair = BeattyPair::golden();
    let mut f = GreedyF::new();
    tally("greedy_f", 1, n_max, |n| {
        ensure_eq(pair.swap(n) + 1, f.get(n + 1)?, "W(n) = f(n+1) - 1")
    })
}

/// `W̄(n) = L(n+1) − (n+1)`.
pub fn check_avg_lower(n_max: u64) -> CheckReport {
    let pair = BeattyPair::golden();
    let mut avg = SwapAverage::new();
    tally("avg_lower", 0, n_max, |n| {
        ensure_eq(
            pair.lower(n + 1) - (n + 1),
            avg.get(n)?,
            "Wbar(n) = L(n+1) - (n+1)",
        )
    })
}

/// `a(n) = n − ⌊a(a(n−1))/2⌋` equals `⌊(n+1)(√3−1)⌋`.
pub fn check_cloitre(n_max: u64) -> CheckReport {
    let closed = constants::sqrt3_minus_1().scaler();
    let mut a = Cloitre::new();
    tally("cloitre", 1, n_max, |n| {
        ensure_eq(
            closed.floor_u64(n + 1),
            a.get(n)?,
            "a(n) = floor((n+1)(sqrt3 - 1))",
        )
    })
}

/// The `m`-th 0 of the Fibonacci word sits at `L(m)` and the `m`-th 1 at `U(m)`.
pub fn check_fib_word(n_max: u64) -> CheckReport {
    let pair = BeattyPair::golden();
    let (mut zeros, mut ones) = (Vec::new(), Vec::new());
    if n_max > 0 {
        let len = pair.upper(n_max) as usize;
        for (i, s) in FibonacciWordIter::infinite().take(len).enumerate() {
            if s == 0 {
                zeros.push(i as u64 + 1);
            } else {
                ones.push(i as u64 + 1);
            }
        }
    }
    tally("fib_word", 1, n_max, |m| {
        let at = |v: &[u64]| v.get(m as usize - 1).copied().unwrap_or(0);
        ensure_eq(pair.lower(m), at(&zeros), "position of m-th 0 = L(m)")?;
        ensure_eq(pair.upper(m), at(&ones), "position of m-th 1 = U(m)")
    })
}

/// `|μᵐ(0)| = Fₘ₊₂`, `|μᵐ(0)|₀ = Fₘ₊₁`, `|μᵐ(0)|₁ = Fₘ`, with `μ(0) = 01`.
pub fn check_morphism_counts(level_max: u32) -> CheckReport {
    tally("morphism_counts", 1, u64::from(level_max), |m| {
        let m = m as u32;
        let (mut zeros, mut ones) = (0u64, 0u64);
        for s in FibonacciWordIter::new(m) {
            if s == 0 {
                zeros += 1;
            } else {
                ones += 1;
            }
        }
        ensure_eq(fib_checked(m + 2), zeros + ones, "|mu^m(0)| = F_m+2")?;
        ensure_eq(fib_checked(m + 1), zeros, "|mu^m(0)|_0 = F_m+1")?;
        ensure_eq(fib_checked(m), ones, "|mu^m(0)|_1 = F_m")
    })
}

/// The Pell swap prefix equals [`PELL_SWAP_LISTING`] and swaps the Pell pair.
pub fn check_pell_swap(n_max: u64) -> CheckReport {
    let pair = BeattyPair::pell();
    let hi = n_max.max(PELL_SWAP_LISTING.len() as u64);
    tally("pell_swap", 1, hi, |n| {
        let w = pair.swap(n);
        if let Some(&listed) = PELL_SWAP_LISTING.get(n as usize - 1) {
            ensure_eq(listed, w, "Pell swap listing")?;
        }
        ensure_eq(n, pair.swap(w), "involution")
    })
}

/// Which constant a parameterized check runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Golden,
    Pell,
}

impl Target {
    fn gamma(self) -> QuadraticSurd {
        match self {
            Target::Golden => constants::golden_gamma(),
            Target::Pell => constants::silver_gamma(),
        }
    }

    fn label(self) -> &'static str {
        match self {
            Target::Golden => "golden",
            Target::Pell => "pell",
        }
    }
}

/// Selectable check families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    KsSplit,
    Slu,
    AvgTheorem,
    ScatterLines,
    FibLemma,
    Az,
    Stoll,
    Cr,
    Complementarity,
    RecClosed,
    SwapRoutes,
    GreedyF,
    AvgLower,
    Cloitre,
    FibWord,
    MorphismCounts,
    PellSwap,
}

impl CheckKind {
    pub const ALL: [CheckKind; 17] = [
        CheckKind::KsSplit,
        CheckKind::Slu,
        CheckKind::AvgTheorem,
        CheckKind::ScatterLines,
        CheckKind::FibLemma,
        CheckKind::Az,
        CheckKind::Stoll,
        CheckKind::Cr,
        CheckKind::Complementarity,
        CheckKind::RecClosed,
        CheckKind::SwapRoutes,
        CheckKind::GreedyF,
        CheckKind::AvgLower,
        CheckKind::Cloitre,
        CheckKind::FibWord,
        CheckKind::MorphismCounts,
        CheckKind::PellSwap,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::KsSplit => "ks_split",
            CheckKind::Slu => "slu",
            CheckKind::AvgTheorem => "avg_theorem",
            CheckKind::ScatterLines => "scatter_lines",
            CheckKind::FibLemma => "fib_lemma",
            CheckKind::Az => "az",
            CheckKind::Stoll => "stoll",
            CheckKind::Cr => "cr",
            CheckKind::Complementarity => "complementarity",
            CheckKind::RecClosed => "rec_closed",
            CheckKind::SwapRoutes => "swap_routes",
            CheckKind::GreedyF => "greedy_f",
            CheckKind::AvgLower => "avg_lower",
            CheckKind::Cloitre => "cloitre",
            CheckKind::FibWord => "fib_word",
            CheckKind::MorphismCounts => "morphism_counts",
            CheckKind::PellSwap => "pell_swap",
        }
    }

    fn targets(self) -> &'static [Option<Target>] {
        match self {
            CheckKind::KsSplit | CheckKind::Slu | CheckKind::Complementarity => {
                &[Some(Target::Golden), Some(Target::Pell)]
            }
            _ => &[None],
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckKind {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownCheck(s.into()))
    }
}

/// Ranges and selection for [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Upper index bound shared by the index-range checks.
    pub max_n: u64,
    /// Largest `k` in the Fibonacci lemma and the exception laws.
    pub fib_k: u32,
    /// Largest order in the generalized recursion check.
    pub cr_k_max: u32,
    /// Largest morphism level whose symbol counts are checked.
    pub morphism_max: u32,
    /// `None` runs every check.
    pub checks: Option<Vec<CheckKind>>,
    /// Appends a synthetic check against a corrupted `G`, which must fail.
    pub inject_fault: bool,
}

impl Default for RunConfig {
    /// Table-sized ranges for quick runs.
    fn default() -> Self {
        RunConfig {
            max_n: 18,
            fib_k: 40,
            cr_k_max: 5,
            morphism_max: 30,
            checks: None,
            inject_fault: false,
        }
    }
}

/// Name of the synthetic failing check appended by [`RunConfig::inject_fault`].
pub const FAULT_CHECK_NAME: &str = "fault_injection";

/// One concrete check to execute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlannedCheck {
    Kind(CheckKind, Option<Target>),
    Fault,
}

impl PlannedCheck {
    pub fn name(&self) -> String {
        match self {
            PlannedCheck::Kind(kind, Some(t)) => format!("{}[{}]", kind, t.label()),
            PlannedCheck::Kind(kind, None) => kind.as_str().into(),
            PlannedCheck::Fault => FAULT_CHECK_NAME.into(),
        }
    }

    /// Runs the check; `elapsed` is left at zero.
    pub fn execute(&self, config: &RunConfig) -> CheckReport {
        let n = config.max_n;
        let gamma_report = |r: Result<CheckReport, VerifyError>| {
            r.expect("built-in constants satisfy every precondition")
        };
        let mut report = match *self {
            PlannedCheck::Fault => {
                let index = n / 2;
                let mut reference = crate::sequences::ClosedForm::g_closed();
                let mut corrupted = FaultInjected::new(HofstadterG::new(), index, 1);
                check_sequences_agree(FAULT_CHECK_NAME, &mut reference, &mut corrupted, 0, n)
            }
            PlannedCheck::Kind(kind, target) => {
                let gamma = target.map(Target::gamma);
                match kind {
                    CheckKind::KsSplit => {
                        gamma_report(check_ks_split(gamma.as_ref().expect("target"), n.max(2)))
                    }
                    CheckKind::Slu => gamma_report(check_slu(gamma.as_ref().expect("target"), n)),
                    CheckKind::Complementarity => {
                        gamma_report(check_complementarity(gamma.as_ref().expect("target"), n))
                    }
                    CheckKind::AvgTheorem => check_avg_theorem(n),
                    CheckKind::ScatterLines => check_scatter_lines(n),
                    CheckKind::FibLemma => check_fib_lemma(config.fib_k),
                    CheckKind::Az => check_az(config.fib_k, n),
                    CheckKind::Stoll => check_stoll(config.fib_k, n),
                    CheckKind::Cr => gamma_report(check_cr(config.cr_k_max, n)),
                    CheckKind::RecClosed => check_rec_closed(n),
                    CheckKind::SwapRoutes => check_swap_routes(n),
                    CheckKind::GreedyF => check_greedy_f(n),
                    CheckKind::AvgLower => check_avg_lower(n),
                    CheckKind::Cloitre => check_cloitre(n),
                    CheckKind::FibWord => check_fib_word(n),
                    CheckKind::MorphismCounts => check_morphism_counts(config.morphism_max),
                    CheckKind::PellSwap => check_pell_swap(n),
                }
            }
        };
        report.check_name = self.name();
        report
    }
}

/// The checks selected by `config`, in output order. Empty when `max_n` is 0.
pub fn plan(config: &RunConfig) -> Vec<PlannedCheck> {
    if config.max_n == 0 {
        return Vec::new();
    }
    let mut kinds: Vec<CheckKind> = config
        .checks
        .clone()
        .unwrap_or_else(|| CheckKind::ALL.to_vec());
    kinds.sort();
    kinds.dedup();
    let mut planned: Vec<PlannedCheck> = kinds
        .into_iter()
        .flat_map(|k| k.targets().iter().map(move |&t| PlannedCheck::Kind(k, t)))
        .collect();
    if config.inject_fault {
        planned.push(PlannedCheck::Fault);
    }
    planned
}

/// Monotonic time source used to fill [`CheckReport::elapsed`].
pub trait Clock {
    fn now(&self) -> Duration;
}

/// A clock that never advances; reports carry zero elapsed time.
pub struct NoClock;

impl Clock for NoClock {
    fn now(&self) -> Duration {
        Duration::ZERO
    }
}

impl<F: Fn() -> Duration> Clock for F {
    fn now(&self) -> Duration {
        self()
    }
}

/// Runs every planned check in order.
pub fn run_all(config: &RunConfig, clock: &dyn Clock) -> Vec<CheckReport> {
    plan(config)
        .into_iter()
        .map(|check| {
            let start = clock.now();
            let mut report = check.execute(config);
            report.elapsed = clock.now().saturating_sub(start);
            report
        })
        .collect()
}

/// Whether every report passed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::is_pass)
}
