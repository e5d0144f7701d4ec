//! Generators and closed forms for the Hofstadter, Wythoff, greedy and
//! generalized recursion sequences.
//!
//! Closed forms are pure functions of the index. Recursive and greedy
//! sequences are stateful objects that own a contiguous memo table grown on
//! demand; a query for index `n` fills the table up to `n`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::exactnum::{complement_surd, metallic_gamma, ExactError, FloorScaler, QuadraticSurd};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("index {index} is below the first index {first} of {sequence}")]
    IndexBelowStart {
        sequence: SequenceId,
        index: u64,
        first: u64,
    },
    #[error("{0} requires a parameter k")]
    MissingK(SequenceName),
    #[error("{0} takes no parameter k")]
    UnexpectedK(SequenceName),
    #[error("parameter k must be at least 1")]
    ZeroK,
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("partial sum at n = {n} is not divisible by {divisor}")]
    NotDivisible { n: u64, divisor: u64 },
    #[error("recursion for {sequence} left its memo table at n = {n}")]
    RecursionEscape { sequence: SequenceId, n: u64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Every named sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SequenceName {
    GRec,
    GClosed,
    L,
    U,
    WSwap,
    WAvg,
    FGreedy,
    ZGreedy,
    MAvg,
    MarriedA,
    MarriedB,
    Hk,
    HPell,
    RSlow,
    LPell,
    UPell,
    WPellSwap,
    Cloitre,
    VRec,
}

impl SequenceName {
    pub const ALL: [SequenceName; 19] = [
        SequenceName::GRec,
        SequenceName::GClosed,
        SequenceName::L,
        SequenceName::U,
        SequenceName::WSwap,
        SequenceName::WAvg,
        SequenceName::FGreedy,
        SequenceName::ZGreedy,
        SequenceName::MAvg,
        SequenceName::MarriedA,
        SequenceName::MarriedB,
        SequenceName::Hk,
        SequenceName::HPell,
        SequenceName::RSlow,
        SequenceName::LPell,
        SequenceName::UPell,
        SequenceName::WPellSwap,
        SequenceName::Cloitre,
        SequenceName::VRec,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::GRec => "G_rec",
            SequenceName::GClosed => "G_closed",
            SequenceName::L => "L",
            SequenceName::U => "U",
            SequenceName::WSwap => "W_swap",
            SequenceName::WAvg => "W_avg",
            SequenceName::FGreedy => "f_greedy",
            SequenceName::ZGreedy => "z_greedy",
            SequenceName::MAvg => "m_avg",
            SequenceName::MarriedA => "married_a",
            SequenceName::MarriedB => "married_b",
            SequenceName::Hk => "H_k",
            SequenceName::HPell => "H_pell",
            SequenceName::RSlow => "R_slow",
            SequenceName::LPell => "L_pell",
            SequenceName::UPell => "U_pell",
            SequenceName::WPellSwap => "W_pell_swap",
            SequenceName::Cloitre => "cloitre",
            SequenceName::VRec => "v_rec",
        }
    }

    /// Short command-line aliases accepted next to the canonical names.
    fn aliases(self) -> &'static [&'static str] {
        match self {
            SequenceName::GClosed => &["G"],
            SequenceName::WSwap => &["W"],
            SequenceName::WAvg => &["Wbar"],
            SequenceName::FGreedy => &["f"],
            SequenceName::ZGreedy => &["z"],
            SequenceName::MAvg => &["m"],
            SequenceName::MarriedA => &["a"],
            SequenceName::MarriedB => &["b"],
            SequenceName::Hk => &["Hk", "H"],
            SequenceName::RSlow => &["R"],
            SequenceName::WPellSwap => &["W_pell"],
            SequenceName::VRec => &["V"],
            _ => &[],
        }
    }

    pub fn takes_k(self) -> bool {
        self == SequenceName::Hk
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceName::ALL
            .into_iter()
            .find(|name| name.as_str() == s || name.aliases().contains(&s))
            .ok_or_else(|| SequenceError::UnknownSequence(s.into()))
    }
}

/// A sequence name together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequenceId {
    name: SequenceName,
    k: Option<u32>,
}

impl SequenceId {
    pub fn new(name: SequenceName, k: Option<u32>) -> Result<Self, SequenceError> {
        match (name.takes_k(), k) {
            (true, None) => Err(SequenceError::MissingK(name)),
            (true, Some(0)) => Err(SequenceError::ZeroK),
            (false, Some(_)) => Err(SequenceError::UnexpectedK(name)),
            _ => Ok(SequenceId { name, k }),
        }
    }

    /// Shorthand for parameterless sequences. Panics for `H_k`.
    pub const fn plain(name: SequenceName) -> Self {
        assert!(!matches!(name, SequenceName::Hk));
        SequenceId { name, k: None }
    }

    pub fn name(&self) -> SequenceName {
        self.name
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    /// Catalog A-number, where one exists.
    pub fn oeis(&self) -> Option<&'static str> {
        use SequenceName::*;
        Some(match self.name {
            GRec | GClosed => "A005206",
            L => "A000201",
            U => "A001950",
            WSwap => "A002251",
            WAvg => "A073869",
            FGreedy => "A019444",
            ZGreedy | MAvg => return None,
            MarriedA => "A005378",
            MarriedB => "A005379",
            Hk => match self.k {
                Some(1) => "A005206",
                Some(2) => "A097508",
                _ => return None,
            },
            HPell => "A097508",
            RSlow => "A049472",
            LPell => "A003151",
            UPell => "A003152",
            WPellSwap => "A109250",
            Cloitre => "A138466",
            VRec => "A063882",
        })
    }

    /// Smallest valid index.
    pub fn first_index(&self) -> u64 {
        use SequenceName::*;
        match self.name {
            GRec | GClosed | WSwap | WAvg | MarriedA | MarriedB | Hk | HPell | RSlow => 0,
            L | U | FGreedy | ZGreedy | MAvg | LPell | UPell | WPellSwap | Cloitre | VRec => 1,
        }
    }

    /// A fresh generator for this sequence.
    pub fn generator(&self) -> Result<Box<dyn Sequence>, SequenceError> {
        use SequenceName::*;
        Ok(match self.name {
            GRec => Box::new(HofstadterG::new()),
            GClosed => Box::new(ClosedForm::g_closed()),
            L => Box::new(ClosedForm::lower_wythoff()),
            U => Box::new(ClosedForm::upper_wythoff()),
            WSwap => Box::new(ClosedForm::wythoff_swap()),
            WAvg => Box::new(SwapAverage::new()),
            FGreedy => Box::new(GreedyF::new()),
            ZGreedy => Box::new(GreedyZ::new()),
            MAvg => Box::new(GreedyZ::means()),
            MarriedA => Box::new(Married::a()),
            MarriedB => Box::new(Married::b()),
            Hk => Box::new(CelayaRuskey::new(
                self.k.ok_or(SequenceError::MissingK(Hk))?,
            )?),
            HPell => Box::new(CelayaRuskey::pell()),
            RSlow => Box::new(ClosedForm::pell_slow()),
            LPell => Box::new(ClosedForm::pell_lower()),
            UPell => Box::new(ClosedForm::pell_upper()),
            WPellSwap => Box::new(ClosedForm::pell_swap()),
            SequenceName::Cloitre => Box::new(self::Cloitre::new()),
            VRec => Box::new(HofstadterV::new()),
        })
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}(k={k})", self.name),
            None => write!(f, "{}", self.name),
        }
    }
}

/// An integer sequence evaluated one index at a time.
pub trait Sequence {
    fn id(&self) -> SequenceId;

    fn first_index(&self) -> u64 {
        self.id().first_index()
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError>;

    /// Terms `from..=to`, in order.
    fn terms(&mut self, from: u64, to: u64) -> Result<Vec<u64>, SequenceError> {
        (from..=to).map(|n| self.term(n)).collect()
    }
}

fn check_start(id: SequenceId, n: u64) -> Result<(), SequenceError> {
    let first = id.first_index();
    if n < first {
        return Err(SequenceError::IndexBelowStart {
            sequence: id,
            index: n,
            first,
        });
    }
    Ok(())
}

/// Values indexed contiguously from 0.
#[derive(Debug, Clone, Default)]
pub struct MemoTable<T> {
    values: Vec<T>,
}

impl<T: Copy> MemoTable<T> {
    pub fn new() -> Self {
        MemoTable { values: Vec::new() }
    }

    pub fn with_prefix(values: &[T]) -> Self {
        MemoTable {
            values: values.to_vec(),
        }
    }

    pub fn len(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, index: u64) -> Option<T> {
        usize::try_from(index)
            .ok()
            .and_then(|i| self.values.get(i).copied())
    }

    /// Appends the value for index `len()`.
    pub fn push(&mut self, value: T) {
        self.values.push(value);
    }

    pub fn as_slice(&self) -> &[T] {
        &self.values
    }
}

/// Golden-mean and silver-mean constants.
pub mod constants {
    use crate::exactnum::QuadraticSurd;

    /// `γ = (√5 − 1)/2`.
    pub fn golden_gamma() -> QuadraticSurd {
        QuadraticSurd::new(-1, 1, 2, 5).expect("valid surd")
    }

    /// `φ = (1 + √5)/2`.
    pub fn phi() -> QuadraticSurd {
        QuadraticSurd::new(1, 1, 2, 5).expect("valid surd")
    }

    /// `φ² = (3 + √5)/2`.
    pub fn phi_squared() -> QuadraticSurd {
        QuadraticSurd::new(3, 1, 2, 5).expect("valid surd")
    }

    /// `√2 − 1`.
    pub fn silver_gamma() -> QuadraticSurd {
        QuadraticSurd::new(-1, 1, 1, 2).expect("valid surd")
    }

    /// `½√2`.
    pub fn half_sqrt2() -> QuadraticSurd {
        QuadraticSurd::new(0, 1, 2, 2).expect("valid surd")
    }

    /// `√3 − 1`.
    pub fn sqrt3_minus_1() -> QuadraticSurd {
        QuadraticSurd::new(-1, 1, 1, 3).expect("valid surd")
    }
}

/// Which half of a complementary Beatty pair an integer belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// The slow Beatty sequence `s(n) = ⌊(n+1)γ⌋` together with the complementary
/// pair `L(n) = ⌊n/γ⌋`, `U(n) = ⌊n/(1−γ)⌋`.
#[derive(Debug, Clone)]
pub struct BeattyPair {
    gamma: FloorScaler,
    lower: FloorScaler,
    upper: FloorScaler,
}

impl BeattyPair {
    pub fn new(gamma: &QuadraticSurd) -> Result<Self, ExactError> {
        let (alpha, beta) = complement_surd(gamma)?;
        Ok(BeattyPair {
            gamma: gamma.scaler(),
            lower: alpha.scaler(),
            upper: beta.scaler(),
        })
    }

    pub fn golden() -> Self {
        Self::new(&constants::golden_gamma()).expect("golden gamma lies in (0, 1)")
    }

    pub fn pell() -> Self {
        Self::new(&constants::silver_gamma()).expect("silver gamma lies in (0, 1)")
    }

    pub fn gamma(&self) -> &QuadraticSurd {
        self.gamma.surd()
    }

    pub fn alpha(&self) -> &QuadraticSurd {
        self.lower.surd()
    }

    pub fn beta(&self) -> &QuadraticSurd {
        self.upper.surd()
    }

    /// `⌊(n+1)γ⌋`.
    pub fn slow(&self, n: u64) -> u64 {
        self.gamma.floor_u64(n + 1)
    }

    /// `⌊nγ⌋`.
    pub fn gamma_floor(&self, n: u64) -> u64 {
        self.gamma.floor_u64(n)
    }

    pub fn lower(&self, n: u64) -> u64 {
        self.lower.floor_u64(n)
    }

    pub fn upper(&self, n: u64) -> u64 {
        self.upper.floor_u64(n)
    }

    /// For `n ≥ 1`, the side and rank `M` with `n = L(M)` or `n = U(M)`.
    ///
    /// Exactly `s(n)` lower values are `≤ n`, so the candidate ranks are `s(n)`
    /// and `n − s(n)`; the candidate is confirmed by evaluating the floor.
    pub fn locate(&self, n: u64) -> Option<(Side, u64)> {
        if n == 0 {
            return None;
        }
        let below = self.slow(n);
        if below >= 1 && self.lower(below) == n {
            return Some((Side::Lower, below));
        }
        let rank = n - below;
        (rank >= 1 && self.upper(rank) == n).then_some((Side::Upper, rank))
    }

    /// Exchanges `L(M)` and `U(M)`; `0` maps to `0`.
    pub fn swap(&self, n: u64) -> u64 {
        match self.locate(n) {
            None if n == 0 => 0,
            Some((Side::Lower, m)) => self.upper(m),
            Some((Side::Upper, m)) => self.lower(m),
            None => unreachable!("complementary pair misses {n}"),
        }
    }
}

fn golden_pair() -> BeattyPair {
    BeattyPair::golden()
}

/// `G(n)` by the nested recursion `G(n) = n − G(G(n−1))`.
#[derive(Debug, Clone)]
pub struct HofstadterG {
    memo: MemoTable<u64>,
}

impl Default for HofstadterG {
    fn default() -> Self {
        Self::new()
    }
}

impl HofstadterG {
    pub fn new() -> Self {
        HofstadterG {
            memo: MemoTable::with_prefix(&[0, 1]),
        }
    }

    pub fn get(&mut self, n: u64) -> u64 {
        while self.memo.len() <= n {
            let i = self.memo.len();
            let prev = self.memo.get(i - 1).expect("contiguous");
            let inner = self.memo.get(prev).expect("G(n-1) < n");
            self.memo.push(i - inner);
        }
        self.memo.get(n).expect("filled")
    }
}

impl Sequence for HofstadterG {
    fn id(&self) -> SequenceId {
        SequenceId::plain(SequenceName::GRec)
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        Ok(self.get(n))
    }
}

#[derive(Debug, Clone, Copy)]
enum ClosedKind {
    GClosed,
    Lower,
    Upper,
    WSwap,
    PellSlow,
    PellLower,
    PellUpper,
    PellSwap,
}

/// Sequences with an exact single-index formula.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    kind: ClosedKind,
    pair: BeattyPair,
    half_sqrt2: Option<FloorScaler>,
}

impl ClosedForm {
    fn golden(kind: ClosedKind) -> Self {
        ClosedForm {
            kind,
            pair: golden_pair(),
            half_sqrt2: None,
        }
    }

    fn pell(kind: ClosedKind) -> Self {
        ClosedForm {
            kind,
            pair: BeattyPair::pell(),
            half_sqrt2: Some(constants::half_sqrt2().scaler()),
        }
    }

    pub fn g_closed() -> Self {
        Self::golden(ClosedKind::GClosed)
    }

    pub fn lower_wythoff() -> Self {
        Self::golden(ClosedKind::Lower)
    }

    pub fn upper_wythoff() -> Self {
        Self::golden(ClosedKind::Upper)
    }

    /// `W` by the increment rule: `G(n)` on constant steps, `G(n) + n` on unit steps.
    pub fn wythoff_swap() -> Self {
        Self::golden(ClosedKind::WSwap)
    }

    pub fn pell_slow() -> Self {
        Self::pell(ClosedKind::PellSlow)
    }

    pub fn pell_lower() -> Self {
        Self::pell(ClosedKind::PellLower)
    }

    pub fn pell_upper() -> Self {
        Self::pell(ClosedKind::PellUpper)
    }

    pub fn pell_swap() -> Self {
        Self::pell(ClosedKind::PellSwap)
    }

    fn value(&self, n: u64) -> u64 {
        let p = &self.pair;
        match self.kind {
            ClosedKind::GClosed => p.slow(n),
            ClosedKind::Lower | ClosedKind::PellLower => p.lower(n),
            ClosedKind::Upper | ClosedKind::PellUpper => p.upper(n),
            ClosedKind::WSwap => {
                if n == 0 {
                    return 0;
                }
                let g = p.slow(n);
                if g == p.slow(n - 1) {
                    g
                } else {
                    g + n
                }
            }
            ClosedKind::PellSlow => self
                .half_sqrt2
                .as_ref()
                .expect("pell constants present")
                .floor_u64(n),
            ClosedKind::PellSwap => p.swap(n),
        }
    }
}

impl Sequence for ClosedForm {
    fn id(&self) -> SequenceId {
        SequenceId::plain(match self.kind {
            ClosedKind::GClosed => SequenceName::GClosed,
            ClosedKind::Lower => SequenceName::L,
            ClosedKind::Upper => SequenceName::U,
            ClosedKind::WSwap => SequenceName::WSwap,
            ClosedKind::PellSlow => SequenceName::RSlow,
            ClosedKind::PellLower => SequenceName::LPell,
            ClosedKind::PellUpper => SequenceName::UPell,
            ClosedKind::PellSwap => SequenceName::WPellSwap,
        })
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        check_start(self.id(), n)?;
        Ok(self.value(n))
    }
}

/// `(Σ_{i=0}^{n} W(i)) / (n+1)`, with divisibility checked at every step.
#[derive(Debug, Clone)]
pub struct SwapAverage {
    pair: BeattyPair,
    memo: MemoTable<u64>,
    sum: u128,
}

impl Default for SwapAverage {
    fn default() -> Self {
        Self::new()
    }
}

impl SwapAverage {
    pub fn new() -> Self {
        SwapAverage {
            pair: golden_pair(),
            memo: MemoTable::new(),
            sum: 0,
        }
    }

    pub fn get(&mut self, n: u64) -> Result<u64, SequenceError> {
        while self.memo.len() <= n {
            let i = self.memo.len();
            self.sum += u128::from(self.pair.swap(i));
            let divisor = u128::from(i) + 1;
            if !self.sum.is_multiple_of(divisor) {
                return Err(SequenceError::NotDivisible {
                    n: i,
                    divisor: i + 1,
                });
            }
            self.memo.push((self.sum / divisor) as u64);
        }
        Ok(self.memo.get(n).expect("filled"))
    }
}

impl Sequence for SwapAverage {
    fn id(&self) -> SequenceId {
        SequenceId::plain(SequenceName::WAvg)
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.get(n)
    }
}

/// Set of used values with the residue-class candidate scan shared by both
/// greedy sequences.
#[derive(Debug, Clone, Default)]
struct UsedValues {
    used: Vec<bool>,
}

impl UsedValues {
    fn contains(&self, v: u64) -> bool {
        self.used.get(v as usize).copied().unwrap_or(false)
    }

    fn insert(&mut self, v: u64) {
        let i = v as usize;
        if i >= self.used.len() {
            self.used.resize((i + 1).max(2 * self.used.len()), false);
        }
        self.used[i] = true;
    }

    /// Least unused `v ≥ 1` with `v ≡ residue (mod modulus)`.
    fn least_unused(&self, residue: u64, modulus: u64) -> u64 {
        let mut v = if residue == 0 { modulus } else { residue };
        while self.contains(v) {
            v += modulus;
        }
        v
    }
}

fn residue_needed(target: u64, sum: u128, modulus: u64) -> u64 {
    let m = u128::from(modulus);
    ((u128::from(target) % m + m - sum % m) % m) as u64
}

/// Venkatachala's greedy sequence: `f(n)` is the least unused value making
/// `f(1) + … + f(n)` divisible by `n`.
#[derive(Debug, Clone, Default)]
pub struct GreedyF {
    values: Vec<u64>,
    used: UsedValues,
    sum: u128,
}

impl GreedyF {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: u64) -> Result<u64, SequenceError> {
        check_start(SequenceId::plain(SequenceName::FGreedy), n)?;
        while (self.values.len() as u64) < n {
            let modulus = self.values.len() as u64 + 1;
            let v = self
                .used
                .least_unused(residue_needed(0, self.sum, modulus), modulus);
            self.used.insert(v);
            self.sum += u128::from(v);
            self.values.push(v);
        }
        Ok(self.values[n as usize - 1])
    }
}

impl Sequence for GreedyF {
    fn id(&self) -> SequenceId {
        SequenceId::plain(SequenceName::FGreedy)
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.get(n)
    }
}

/// The greedy sequence `z` with `z(1) + … + z(n) ≡ 1 (mod n+1)` and its
/// companion `m(n) = (z(2) + … + z(n))/(n+1)`.
#[derive(Debug, Clone)]
pub struct GreedyZ {
    values: Vec<u64>,
    means: Vec<u64>,
    used: UsedValues,
    sum: u128,
    emit_means: bool,
}

impl Default for GreedyZ {
    fn default() -> Self {
        Self::new()
    }
}

impl GreedyZ {
    /// A generator whose [`Sequence::term`] yields `z`.
    pub fn new() -> Self {
        GreedyZ {
            values: Vec::new(),
            means: Vec::new(),
            used: UsedValues::default(),
            sum: 0,
            emit_means: false,
        }
    }

    /// A generator whose [`Sequence::term`] yields `m`.
    pub fn means() -> Self {
        GreedyZ {
            emit_means: true,
            ..Self::new()
        }
    }

    fn extend(&mut self, n: u64) -> Result<(), SequenceError> {
        check_start(SequenceId::plain(SequenceName::ZGreedy), n)?;
        while (self.values.len() as u64) < n {
            let index = self.values.len() as u64 + 1;
            let v = if index == 1 {
                1
            } else {
                let modulus = index + 1;
                self.used
                    .least_unused(residue_needed(1, self.sum, modulus), modulus)
            };
            self.used.insert(v);
            self.sum += u128::from(v);
            self.values.push(v);
            let divisor = u128::from(index) + 1;
            let rest = self.sum - u128::from(self.values[0]);
            if !rest.is_multiple_of(divisor) {
                return Err(SequenceError::NotDivisible {
                    n: index,
                    divisor: index + 1,
                });
            }
            self.means.push((rest / divisor) as u64);
        }
        Ok(())
    }

    pub fn z(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.extend(n)?;
        Ok(self.values[n as usize - 1])
    }

    /// `m(n)`; `m(1) = 0` (empty sum).
    pub fn m(&mut self, n: u64) -> Result<u64, SequenceError> {
        check_start(SequenceId::plain(SequenceName::MAvg), n)?;
        self.extend(n)?;
        Ok(self.means[n as usize - 1])
    }
}

impl Sequence for GreedyZ {
    fn id(&self) -> SequenceId {
        SequenceId::plain(if self.emit_means {
            SequenceName::MAvg
        } else {
            SequenceName::ZGreedy
        })
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        if self.emit_means {
            self.m(n)
        } else {
            self.z(n)
        }
    }
}

/// Hofstadter's married functions `a(n) = n − b(a(n−1))`, `b(n) = n − a(b(n−1))`
/// with `a(0) = 1`, `b(0) = 0`.
#[derive(Debug, Clone)]
pub struct Married {
    a: MemoTable<u64>,
    b: MemoTable<u64>,
    emit_b: bool,
}

impl Married {
    pub fn a() -> Self {
        Married {
            a: MemoTable::with_prefix(&[1]),
            b: MemoTable::with_prefix(&[0]),
            emit_b: false,
        }
    }

    pub fn b() -> Self {
        Married {
            emit_b: true,
            ..Self::a()
        }
    }

    fn extend(&mut self, n: u64) -> Result<(), SequenceError> {
        while self.a.len() <= n {
            let i = self.a.len();
            let escape = |emit_b| SequenceError::RecursionEscape {
                sequence: SequenceId::plain(if emit_b {
                    SequenceName::MarriedB
                } else {
                    SequenceName::MarriedA
                }),
                n: i,
            };
            // b(i) first: a(i) may look up b(a(i-1)) = b(i).
            let bi = self
                .a
                .get(self.b.get(i - 1).expect("contiguous"))
                .and_then(|v| i.checked_sub(v))
                .ok_or_else(|| escape(true))?;
            self.b.push(bi);
            let ai = self
                .b
                .get(self.a.get(i - 1).expect("contiguous"))
                .and_then(|v| i.checked_sub(v))
                .ok_or_else(|| escape(false))?;
            self.a.push(ai);
        }
        Ok(())
    }

    pub fn get_a(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.extend(n)?;
        Ok(self.a.get(n).expect("filled"))
    }

    pub fn get_b(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.extend(n)?;
        Ok(self.b.get(n).expect("filled"))
    }
}

impl Sequence for Married {
    fn id(&self) -> SequenceId {
        SequenceId::plain(if self.emit_b {
            SequenceName::MarriedB
        } else {
            SequenceName::MarriedA
        })
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        if self.emit_b {
            self.get_b(n)
        } else {
            self.get_a(n)
        }
    }
}

/// The order-`k` generalization
/// `H(n) = n − k + 1 − Σ_{i=1}^{k−1} H(n−i) − H(H(n−k))`, `H(n) = 0` for `n < k`.
#[derive(Debug, Clone)]
pub struct CelayaRuskey {
    k: u32,
    pell_alias: bool,
    memo: MemoTable<u64>,
}

impl CelayaRuskey {
    pub fn new(k: u32) -> Result<Self, SequenceError> {
        if k == 0 {
            return Err(SequenceError::ZeroK);
        }
        Ok(CelayaRuskey {
            k,
            pell_alias: false,
            memo: MemoTable::new(),
        })
    }

    /// The `k = 2` instance, reported as `H_pell`.
    pub fn pell() -> Self {
        CelayaRuskey {
            pell_alias: true,
            ..Self::new(2).expect("k = 2 is valid")
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&mut self, n: u64) -> Result<u64, SequenceError> {
        let k = u64::from(self.k);
        while self.memo.len() <= n {
            let i = self.memo.len();
            if i < k {
                self.memo.push(0);
                continue;
            }
            let window: i128 = (1..k)
                .map(|j| i128::from(self.memo.get(i - j).expect("contiguous")))
                .sum();
            let inner = self.memo.get(i - k).expect("contiguous");
            let nested = self.memo.get(inner).ok_or(SequenceError::RecursionEscape {
                sequence: self.id(),
                n: i,
            })?;
            let v = i128::from(i) - i128::from(k) + 1 - window - i128::from(nested);
            let v = u64::try_from(v).map_err(|_| SequenceError::RecursionEscape {
                sequence: self.id(),
                n: i,
            })?;
            self.memo.push(v);
        }
        Ok(self.memo.get(n).expect("filled"))
    }
}

impl Sequence for CelayaRuskey {
    fn id(&self) -> SequenceId {
        if self.pell_alias {
            SequenceId::plain(SequenceName::HPell)
        } else {
            SequenceId {
                name: SequenceName::Hk,
                k: Some(self.k),
            }
        }
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.get(n)
    }
}

/// `a(n) = n − ⌊a(a(n−1))/2⌋`, `a(1) = 1`.
#[derive(Debug, Clone)]
pub struct Cloitre {
    // index 0 is a placeholder; valid entries start at 1
    memo: MemoTable<u64>,
}

impl Default for Cloitre {
    fn default() -> Self {
        Self::new()
    }
}

impl Cloitre {
    pub fn new() -> Self {
        Cloitre {
            memo: MemoTable::with_prefix(&[0, 1]),
        }
    }

    pub fn get(&mut self, n: u64) -> Result<u64, SequenceError> {
        check_start(self.id(), n)?;
        while self.memo.len() <= n {
            let i = self.memo.len();
            let prev = self.memo.get(i - 1).expect("contiguous");
            let nested = (prev >= 1).then(|| self.memo.get(prev)).flatten().ok_or(
                SequenceError::RecursionEscape {
                    sequence: self.id(),
                    n: i,
                },
            )?;
            self.memo.push(i - nested / 2);
        }
        Ok(self.memo.get(n).expect("filled"))
    }
}

impl Sequence for Cloitre {
    fn id(&self) -> SequenceId {
        SequenceId::plain(SequenceName::Cloitre)
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.get(n)
    }
}

/// `V(n) = V(n − V(n−1)) + V(n − V(n−4))`, `V(1..4) = 1`.
#[derive(Debug, Clone)]
pub struct HofstadterV {
    // index 0 is a placeholder; valid entries start at 1
    memo: MemoTable<u64>,
}

impl Default for HofstadterV {
    fn default() -> Self {
        Self::new()
    }
}

impl HofstadterV {
    pub fn new() -> Self {
        HofstadterV {
            memo: MemoTable::with_prefix(&[0, 1, 1, 1, 1]),
        }
    }

    pub fn get(&mut self, n: u64) -> Result<u64, SequenceError> {
        check_start(self.id(), n)?;
        while self.memo.len() <= n {
            let i = self.memo.len();
            let lookup = |lag: u64| -> Option<u64> {
                let back = self.memo.get(i - lag)?;
                let j = i.checked_sub(back).filter(|&j| j >= 1)?;
                self.memo.get(j)
            };
            let v = lookup(1).zip(lookup(4)).map(|(x, y)| x + y).ok_or(
                SequenceError::RecursionEscape {
                    sequence: self.id(),
                    n: i,
                },
            )?;
            self.memo.push(v);
        }
        Ok(self.memo.get(n).expect("filled"))
    }
}

impl Sequence for HofstadterV {
    fn id(&self) -> SequenceId {
        SequenceId::plain(SequenceName::VRec)
    }

    fn term(&mut self, n: u64) -> Result<u64, SequenceError> {
        self.get(n)
    }
}

/// `G(n)` by recursion.
pub fn hof_g_rec(n: u64) -> u64 {
    HofstadterG::new().get(n)
}

/// `G(n) = ⌊(n+1)γ⌋`.
pub fn hof_g_closed(n: u64) -> u64 {
    golden_pair().slow(n)
}

pub fn wythoff_lower(n: u64) -> Result<u64, SequenceError> {
    ClosedForm::lower_wythoff().term(n)
}

pub fn wythoff_upper(n: u64) -> Result<u64, SequenceError> {
    ClosedForm::upper_wythoff().term(n)
}

/// `W(n)` through the increments of `G`.
pub fn wythoff_swap(n: u64) -> u64 {
    ClosedForm::wythoff_swap().value(n)
}

/// `W(n)` by locating `n` in the Wythoff pair and returning its partner.
pub fn wythoff_swap_by_partner(n: u64) -> u64 {
    golden_pair().swap(n)
}

pub fn wythoff_swap_avg(n: u64) -> Result<u64, SequenceError> {
    SwapAverage::new().get(n)
}

pub fn greedy_f(n: u64) -> Result<u64, SequenceError> {
    GreedyF::new().get(n)
}

pub fn greedy_z(n: u64) -> Result<u64, SequenceError> {
    GreedyZ::new().z(n)
}

pub fn az_m(n: u64) -> Result<u64, SequenceError> {
    GreedyZ::new().m(n)
}

pub fn married_a(n: u64) -> Result<u64, SequenceError> {
    Married::a().get_a(n)
}

pub fn married_b(n: u64) -> Result<u64, SequenceError> {
    Married::b().get_b(n)
}

pub fn celaya_ruskey_h(k: u32, n: u64) -> Result<u64, SequenceError> {
    CelayaRuskey::new(k)?.get(n)
}

/// `⌊(n+1)γₖ⌋` with `γₖ = [0; k, k, …]`.
pub fn celaya_ruskey_closed(k: u32, n: u64) -> Result<u64, SequenceError> {
    if k == 0 {
        return Err(SequenceError::ZeroK);
    }
    Ok(metallic_gamma(u64::from(k))?.scaler().floor_u64(n + 1))
}

/// All five Pell-family values at one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PellValues {
    pub h: u64,
    pub r: u64,
    /// `None` at `n = 0`, where the Beatty sequences are undefined.
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub swap: Option<u64>,
}

pub fn pell_family(n: u64) -> PellValues {
    let pair = BeattyPair::pell();
    let positive = (n >= 1).then_some(n);
    PellValues {
        h: CelayaRuskey::pell()
            .get(n)
            .expect("Pell recursion stays in range"),
        r: constants::half_sqrt2().scaler().floor_u64(n),
        lower: positive.map(|n| pair.lower(n)),
        upper: positive.map(|n| pair.upper(n)),
        swap: positive.map(|n| pair.swap(n)),
    }
}

pub fn cloitre(n: u64) -> Result<u64, SequenceError> {
    Cloitre::new().get(n)
}

pub fn v_rec(n: u64) -> Result<u64, SequenceError> {
    HofstadterV::new().get(n)
}

/// Prefix `from..=to` of a sequence, generated with a fresh generator.
pub fn generate(id: SequenceId, from: u64, to: u64) -> Result<Vec<u64>, SequenceError> {
    let mut g = id.generator()?;
    if to < from {
        return Ok(vec![]);
    }
    g.terms(from, to)
}
