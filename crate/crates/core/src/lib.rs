//! Units and exceptional units of finite commutative rings.
//!
//! A finite commutative ring is modelled as an ordered direct sum of local
//! rings drawn from `Z/p^e`, `GF(p^d)` and `GF(p^d)[x]/(x^e)`. On top of that
//! model the crate provides
//!
//! * closed-form counts of representations as sums of units, sums of
//!   exceptional units and products of exceptional units ([`counting`]),
//! * symbolic descriptions of the k-fold sumsets and product sets
//!   ([`structure`]),
//! * brute-force convolution oracles for all of the above ([`oracle`]),
//! * a multiplicative character sum evaluation of the product count over
//!   finite fields ([`charsum`]).
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod charsum;
mod count;
pub mod counting;
mod error;
pub mod oracle;
pub mod ring;
pub mod structure;

pub use count::Count;
pub use error::{Error, Result};
pub use ring::{Element, LocalElement, LocalKind, LocalRingSpec, RingSpec, DEFAULT_CAP};
