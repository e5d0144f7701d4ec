//! Exact computation of slow Beatty sequences, the Wythoff pair and swap,
//! Hofstadter's G and married functions, the greedy divisibility sequences
//! and their generalizations, together with range checks of the identities
//! that connect them.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod exactnum;
pub mod fibword;
pub mod oeis;
pub mod sequences;
pub mod verify;
