//! Exact arithmetic on quadratic irrationals `(a + b√d)/c`.
//!
//! Every floor that the sequence code needs is of the form `⌊n·q⌋` for a
//! quadratic surd `q`. Because `√(n²b²d)` is irrational whenever `n·b ≠ 0`,
//! the floor of `(n·a + √(n²b²d))/c` is obtained from an integer square root
//! and one floor division, with no floating point anywhere.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Errors raised by surd construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("square root of a negative integer")]
    NegativeSqrt,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("radicand {0} must be at least 2")]
    RadicandTooSmall(u64),
    #[error("radicand {0} is a perfect square")]
    PerfectSquareRadicand(u64),
    #[error("surds with different radicands ({0} and {1}) cannot be combined")]
    MixedRadicand(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {0} lies outside the open interval (0, 1)")]
    OutOfUnitInterval(QuadraticSurd),
    #[error("metallic index must be at least 1")]
    ZeroMetallicIndex,
    #[error("metallic index {0} is too large")]
    MetallicIndexTooLarge(u64),
}

/// Floor of the square root of a nonnegative integer.
///
/// Negative input is rejected.
pub fn isqrt(n: &BigInt) -> Result<BigInt, ExactError> {
    match n.sign() {
        Sign::Minus => Err(ExactError::NegativeSqrt),
        _ => Ok(BigInt::from(isqrt_biguint(n.magnitude()))),
    }
}

/// Newton iteration from an overestimate; the sequence decreases strictly
/// until it reaches `⌊√n⌋`.
pub fn isqrt_biguint(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    if let Some(small) = n.to_u128() {
        return BigUint::from(isqrt_u128(small));
    }
    let bits = n.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            break;
        }
        x = y;
    }
    debug_assert!(&x * &x <= *n && (&x + 1u32) * (&x + 1u32) > *n);
    x
}

/// `⌊√n⌋` for machine integers.
pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2).min(64);
    if bits.div_ceil(2) >= 64 {
        x = u64::MAX as u128;
    }
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// Splits `d = s²·r` with `r` squarefree, returning `(s, r)`.
fn split_square_factor(mut d: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut f = 2u64;
    while f.saturating_mul(f) <= d {
        let sq = f * f;
        while d.is_multiple_of(sq) {
            d /= sq;
            outside *= f;
        }
        f += 1;
    }
    (outside, d)
}

/// An exact real number `(a + b·√d)/c`.
///
/// Values are kept canonical: `c > 0`, `gcd(a, b, c) = 1` and `d` squarefree
/// (square factors of the radicand are moved into `b`). `b` may be negative so
/// that the type is closed under subtraction and reciprocals. `b = 0` encodes a
/// rational number; its radicand is carried along but does not take part in
/// equality.
#[derive(Clone, Debug)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: u64,
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && self.c == other.c
            && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadraticSurd {}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return if self.c.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            };
        }
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "({} {} {}√{})", self.a, op, self.b.abs(), self.d)?;
        if !self.c.is_one() {
            write!(f, "/{}", self.c)?;
        }
        Ok(())
    }
}

impl QuadraticSurd {
    /// Builds `(a + b√d)/c` and brings it to canonical form.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: u64,
    ) -> Result<Self, ExactError> {
        if d < 2 {
            return Err(ExactError::RadicandTooSmall(d));
        }
        let root = isqrt_u128(u128::from(d));
        if root * root == u128::from(d) {
            return Err(ExactError::PerfectSquareRadicand(d));
        }
        let (outside, d) = split_square_factor(d);
        let c = c.into();
        if c.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::from_parts(
            a.into(),
            b.into() * BigInt::from(outside),
            c,
            d,
        ))
    }

    /// The rational `num/den`, tagged with radicand `d`.
    pub fn rational(
        num: impl Into<BigInt>,
        den: impl Into<BigInt>,
        d: u64,
    ) -> Result<Self, ExactError> {
        Self::new(num, 0, den, d)
    }

    pub fn integer(n: impl Into<BigInt>, d: u64) -> Result<Self, ExactError> {
        Self::new(n, 0, 1, d)
    }

    // d squarefree and c nonzero are the caller's responsibility.
    fn from_parts(mut a: BigInt, mut b: BigInt, mut c: BigInt, d: u64) -> Self {
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        QuadraticSurd { a, b, c, d }
    }

    /// Re-applies canonicalization; a no-op on any value built by this module.
    pub fn canonicalize(&self) -> Self {
        Self::from_parts(self.a.clone(), self.b.clone(), self.c.clone(), self.d)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn radicand_with(&self, other: &Self) -> Result<u64, ExactError> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.d),
            (_, true) => Ok(self.d),
            _ if self.d == other.d => Ok(self.d),
            _ => Err(ExactError::MixedRadicand(self.d, other.d)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.radicand_with(other)?;
        let a = &self.a * &other.c + &other.a * &self.c;
        let b = &self.b * &other.c + &other.b * &self.c;
        Ok(Self::from_parts(a, b, &self.c * &other.c, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.radicand_with(other)?;
        let a = &self.a * &other.a + &self.b * &other.b * BigInt::from(d);
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::from_parts(a, b, &self.c * &other.c, d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_mul(&other.recip()?)
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d,
        }
    }

    /// `c(a − b√d)/(a² − b²d)`.
    pub fn recip(&self) -> Result<Self, ExactError> {
        let norm = &self.a * &self.a - &self.b * &self.b * BigInt::from(self.d);
        if norm.is_zero() {
            // d is not a square, so the norm vanishes only at zero.
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::from_parts(
            &self.c * &self.a,
            -(&self.c * &self.b),
            norm,
            self.d,
        ))
    }

    /// Sign of the value, decided exactly.
    pub fn signum(&self) -> Ordering {
        sign_of_linear_form(&self.a, &self.b, self.d)
    }

    /// Exact value comparison. Irrational surds must share a radicand.
    pub fn cmp_value(&self, other: &Self) -> Result<Ordering, ExactError> {
        let d = self.radicand_with(other)?;
        let a = &self.a * &other.c - &other.a * &self.c;
        let b = &self.b * &other.c - &other.b * &self.c;
        Ok(sign_of_linear_form(&a, &b, d))
    }

    /// Whether `0 < self < 1`.
    pub fn in_unit_interval(&self) -> bool {
        self.signum() == Ordering::Greater
            && sign_of_linear_form(&(&self.a - &self.c), &self.b, self.d) == Ordering::Less
    }

    pub fn floor(&self) -> BigInt {
        self.floor_scale(&BigUint::one())
    }

    /// `⌊n·self⌋`, exactly.
    pub fn floor_scale(&self, n: &BigUint) -> BigInt {
        let n = BigInt::from(n.clone());
        let na = &n * &self.a;
        let nb = (&n * &self.b).abs();
        let radicand = &nb * &nb * BigInt::from(self.d);
        let numerator = if radicand.is_zero() {
            na
        } else {
            let root = BigInt::from(isqrt_biguint(radicand.magnitude()));
            // √radicand lies strictly inside (root, root + 1).
            if self.b.is_negative() {
                na - root - 1
            } else {
                na + root
            }
        };
        numerator.div_floor(&self.c)
    }

    pub fn floor_mul(&self, n: u64) -> BigInt {
        self.floor_scale(&BigUint::from(n))
    }

    /// Precomputes the machine-word fast path for repeated `⌊n·self⌋`.
    pub fn scaler(&self) -> FloorScaler {
        FloorScaler::new(self)
    }
}

/// Sign of `A + B√d`.
fn sign_of_linear_form(a: &BigInt, b: &BigInt, d: u64) -> Ordering {
    let sa = a.sign();
    let sb = b.sign();
    let as_ord = |s: Sign| match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    };
    if sb == Sign::NoSign {
        return as_ord(sa);
    }
    if sa == Sign::NoSign || sa == sb {
        return as_ord(sb);
    }
    // Opposite signs: compare a² with b²d; equality is impossible for d non-square.
    let lhs = a * a;
    let rhs = b * b * BigInt::from(d);
    match lhs.cmp(&rhs) {
        Ordering::Greater => as_ord(sa),
        _ => as_ord(sb),
    }
}

/// Repeated evaluation of `⌊n·q⌋` for one surd `q`.
///
/// When `a`, `b²d` and `c` fit machine words and `n²b²d` fits in `u128`, the
/// floor is computed in `i128`/`u128`; otherwise it falls back to big integers.
#[derive(Clone, Debug)]
pub struct FloorScaler {
    surd: QuadraticSurd,
    small: Option<SmallSurd>,
}

#[derive(Clone, Copy, Debug)]
struct SmallSurd {
    a: i128,
    b_negative: bool,
    b2d: u128,
    c: i128,
}

impl FloorScaler {
    pub fn new(surd: &QuadraticSurd) -> Self {
        let small = (|| {
            let b = surd.b.magnitude().to_u128()?;
            let b2d = b.checked_mul(b)?.checked_mul(u128::from(surd.d))?;
            Some(SmallSurd {
                a: surd.a.to_i128()?,
                b_negative: surd.b.is_negative(),
                b2d,
                c: surd.c.to_i128()?,
            })
        })();
        FloorScaler {
            surd: surd.clone(),
            small,
        }
    }

    pub fn surd(&self) -> &QuadraticSurd {
        &self.surd
    }

    /// `⌊n·q⌋` if it can be evaluated in machine words.
    pub fn floor_small(&self, n: u64) -> Option<i128> {
        let s = self.small?;
        let n_sq = u128::from(n) * u128::from(n);
        let radicand = n_sq.checked_mul(s.b2d)?;
        let na = i128::from(n).checked_mul(s.a)?;
        let numerator = if radicand == 0 {
            na
        } else {
            let root = i128::try_from(isqrt_u128(radicand)).ok()?;
            if s.b_negative {
                na.checked_sub(root)?.checked_sub(1)?
            } else {
                na.checked_add(root)?
            }
        };
        Some(numerator.div_euclid(s.c))
    }

    pub fn floor(&self, n: u64) -> BigInt {
        match self.floor_small(n) {
            Some(v) => BigInt::from(v),
            None => self.surd.floor_mul(n),
        }
    }

    /// `⌊n·q⌋` as a `u64`. Panics if the value is negative or exceeds `u64`.
    pub fn floor_u64(&self, n: u64) -> u64 {
        if let Some(v) = self.floor_small(n) {
            if let Ok(v) = u64::try_from(v) {
                return v;
            }
        }
        self.surd
            .floor_mul(n)
            .to_u64()
            .expect("floor value does not fit in u64")
    }
}

/// `⌊n·q⌋`.
pub fn floor_scale(q: &QuadraticSurd, n: u64) -> BigInt {
    q.scaler().floor(n)
}

/// `⌊(n+1)·γ⌋` for `0 < γ < 1`.
pub fn slow_beatty(gamma: &QuadraticSurd, n: u64) -> Result<BigInt, ExactError> {
    if !gamma.in_unit_interval() {
        return Err(ExactError::OutOfUnitInterval(gamma.clone()));
    }
    Ok(gamma.floor_scale(&(BigUint::from(n) + 1u32)))
}

/// `[0; k, k, k, …] = (√(k²+4) − k)/2`, the positive root of `x² + kx − 1`.
pub fn metallic_gamma(k: u64) -> Result<QuadraticSurd, ExactError> {
    if k == 0 {
        return Err(ExactError::ZeroMetallicIndex);
    }
    if k > u64::from(u32::MAX) {
        return Err(ExactError::MetallicIndexTooLarge(k));
    }
    QuadraticSurd::new(-BigInt::from(k), 1, 2, k * k + 4)
}

/// The complementary Beatty pair `(1/γ, 1/(1−γ))` of `γ ∈ (0, 1)`.
pub fn complement_surd(
    gamma: &QuadraticSurd,
) -> Result<(QuadraticSurd, QuadraticSurd), ExactError> {
    if !gamma.in_unit_interval() {
        return Err(ExactError::OutOfUnitInterval(gamma.clone()));
    }
    let one = QuadraticSurd::integer(1, gamma.d())?;
    let alpha = gamma.recip()?;
    let beta = one.try_sub(gamma)?.recip()?;
    Ok((alpha, beta))
}
