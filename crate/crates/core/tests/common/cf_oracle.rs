//! Independent floor of `n·(a + b√d)/c` from continued-fraction convergents.
//!
//! The convergents of an irrational alternate around it, so once two
//! consecutive convergents `p/q` give the same `⌊n·p/q⌋`, that value is the
//! floor of `n` times the number itself.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `⌊n·(a + b√d)/c⌋`, `c ≠ 0`, `d` not a perfect square.
pub fn cf_floor(a: &BigInt, b: &BigInt, c: &BigInt, d: u64, n: &BigInt) -> BigInt {
    assert!(!c.is_zero());
    if b.is_zero() || n.is_zero() {
        return (n * a).div_floor(c);
    }
    // Write the number as (p + √disc)/q with q | disc − p².
    let (mut p, mut q) = if b.is_positive() {
        (a.clone(), c.clone())
    } else {
        (-a, -c)
    };
    let mut disc = b * b * BigInt::from(d);
    if !(&disc - &p * &p).is_multiple_of(&q) {
        let m = q.abs();
        p *= &m;
        disc *= &m * &m;
        q *= &m;
    }
    let root = disc.sqrt();
    assert!(&root * &root != disc, "radicand must not be a square");

    let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    let mut last_floor: Option<BigInt> = None;
    for _ in 0..10_000 {
        let partial = if q.is_positive() {
            (&p + &root).div_floor(&q)
        } else {
            let shifted: BigInt = -(&p + &root) - 1;
            shifted.div_floor(&(-&q))
        };
        let p_next = &partial * &p_cur + &p_prev;
        let q_next = &partial * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);

        let f = (n * &p_cur).div_floor(&q_cur);
        if last_floor.as_ref() == Some(&f) {
            return f;
        }
        last_floor = Some(f);

        let p_new = &partial * &q - &p;
        q = (&disc - &p_new * &p_new) / &q;
        p = p_new;
    }
    panic!("continued fraction did not settle");
}
