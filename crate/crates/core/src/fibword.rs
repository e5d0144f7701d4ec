//! Fibonacci numbers, Zeckendorf digits and the Fibonacci word.
//!
//! Indexing is fixed at `F₁ = F₂ = 1, F₃ = 2`. With the morphism
//! `μ: 0 ↦ 01, 1 ↦ 0` and `μ(0) = 01`, `|μᵐ(0)| = Fₘ₊₂`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Largest iterate [`morphism_iterate`] will materialize (`F₃₈ ≈ 3.9·10⁷` symbols).
pub const MAX_MATERIALIZED_LEVEL: u32 = 36;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FibError {
    #[error("Fibonacci index must be at least 1")]
    ZeroIndex,
    #[error("morphism level {0} exceeds the cap of {MAX_MATERIALIZED_LEVEL}")]
    LevelTooLarge(u32),
    #[error("rank must be at least 1")]
    ZeroRank,
}

/// `Fₘ` as a big integer.
pub fn fib(m: u32) -> Result<BigUint, FibError> {
    if m == 0 {
        return Err(FibError::ZeroIndex);
    }
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    for _ in 1..m {
        let next = &prev + &cur;
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `Fₘ` if it fits in a `u64` (`m ≤ 93`).
pub fn fib_u64(m: u32) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let (mut prev, mut cur) = (0u64, 1u64);
    for _ in 1..m {
        let next = prev.checked_add(cur)?;
        prev = cur;
        cur = next;
    }
    Some(cur)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A positive integer known to be `F_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibIndex {
    value: BigUint,
    index: u32,
}

impl FibIndex {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn parity(&self) -> Parity {
        if self.index.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Identifies `x` as a Fibonacci number. `1` is reported as `F₂`.
pub fn fib_index_of(x: &BigUint) -> Option<FibIndex> {
    if x.is_zero() {
        return None;
    }
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    let mut index = 2;
    while cur < *x {
        let next = &prev + &cur;
        prev = core::mem::replace(&mut cur, next);
        index += 1;
    }
    (cur == *x).then_some(FibIndex { value: cur, index })
}

/// Zeckendorf digits of `n`: strictly decreasing, pairwise non-consecutive
/// indices `≥ 2` whose Fibonacci numbers sum to `n`.
pub fn zeckendorf(mut n: u64) -> Vec<u32> {
    let mut table = vec![0u64, 1, 1];
    while let Some(next) = table[table.len() - 1].checked_add(table[table.len() - 2]) {
        if next > n {
            break;
        }
        table.push(next);
    }
    let mut digits = Vec::new();
    let mut m = table.len() - 1;
    while n > 0 {
        while table[m] > n {
            m -= 1;
        }
        digits.push(m as u32);
        n -= table[m];
        m = m.saturating_sub(2);
    }
    digits
}

/// A finite word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinaryWord {
    symbols: Vec<u8>,
}

impl BinaryWord {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn count_zeros(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == 0).count()
    }

    pub fn count_ones(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == 1).count()
    }
}

impl FromIterator<u8> for BinaryWord {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let symbols: Vec<u8> = iter.into_iter().collect();
        debug_assert!(symbols.iter().all(|&s| s <= 1));
        BinaryWord { symbols }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            f.write_str(if s == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

/// Streams the symbols of `μᵐ(0)` depth-first; memory is `O(m)`.
#[derive(Debug, Clone)]
pub struct FibonacciWordIter {
    // (symbol, remaining expansion depth)
    stack: Vec<(u8, u32)>,
}

impl FibonacciWordIter {
    pub fn new(level: u32) -> Self {
        let mut stack = Vec::with_capacity(level as usize + 2);
        stack.push((0, level));
        FibonacciWordIter { stack }
    }

    /// A prefix of the infinite Fibonacci word long enough (`F₉₂` symbols)
    /// for any practical streaming query.
    pub fn infinite() -> Self {
        Self::new(90)
    }
}

impl Iterator for FibonacciWordIter {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        loop {
            let (symbol, depth) = self.stack.pop()?;
            if depth == 0 {
                return Some(symbol);
            }
            if symbol == 0 {
                self.stack.push((1, depth - 1));
            }
            self.stack.push((0, depth - 1));
        }
    }
}

/// `μᵐ(0)` materialized.
pub fn morphism_iterate(m: u32) -> Result<BinaryWord, FibError> {
    if m > MAX_MATERIALIZED_LEVEL {
        return Err(FibError::LevelTooLarge(m));
    }
    Ok(FibonacciWordIter::new(m).collect())
}

fn position_of_nth(symbol: u8, rank: u64) -> Result<u64, FibError> {
    if rank == 0 {
        return Err(FibError::ZeroRank);
    }
    let mut seen = 0u64;
    for (i, s) in FibonacciWordIter::infinite().enumerate() {
        if s == symbol {
            seen += 1;
            if seen == rank {
                return Ok(i as u64 + 1);
            }
        }
    }
    unreachable!("the Fibonacci word prefix holds more than u64::MAX / 4 symbols")
}

/// 1-based position of the `m`-th `0` in the infinite Fibonacci word.
pub fn position_of_mth_zero(m: u64) -> Result<u64, FibError> {
    position_of_nth(0, m)
}

/// 1-based position of the `m`-th `1` in the infinite Fibonacci word.
pub fn position_of_mth_one(m: u64) -> Result<u64, FibError> {
    position_of_nth(1, m)
}

/// 1-based positions of every `0` and every `1` within the first `len` symbols.
pub fn symbol_positions(len: usize) -> (Vec<u64>, Vec<u64>) {
    let mut zeros = Vec::new();
    let mut ones = Vec::new();
    for (i, s) in FibonacciWordIter::infinite().take(len).enumerate() {
        if s == 0 {
            zeros.push(i as u64 + 1);
        } else {
            ones.push(i as u64 + 1);
        }
    }
    (zeros, ones)
}

/// Wythoff values at Fibonacci arguments, from the closed forms
/// `L(F₂ₖ) = F₂ₖ₊₁ − 1`, `U(F₂ₖ) = F₂ₖ₊₂ − 1`, `L(F₂ₖ₋₁) = F₂ₖ`, `U(F₂ₖ₋₁) = F₂ₖ₊₁`.
///
/// Returned in that order.
pub fn wythoff_at_fib(k: u32) -> Result<[BigInt; 4], FibError> {
    if k == 0 {
        return Err(FibError::ZeroIndex);
    }
    let f = |m: u32| fib(m).map(BigInt::from);
    let one = BigInt::one();
    Ok([
        f(2 * k + 1)? - &one,
        f(2 * k + 2)? - &one,
        f(2 * k)?,
        f(2 * k + 1)?,
    ])
}
