//! Witten zeta functions and Witten L-functions.
//!
//! The crate covers three families of compact groups:
//!
//! * SU(2), where the L-function is a difference of unit-circle
//!   polylogarithms ([`su2`], built on [`polylog`]);
//! * SU(3), whose Witten zeta is a diagonal Mordell–Tornheim double series
//!   continued by a Mellin–Barnes integral ([`su3`]);
//! * congruence subgroups of `SL_2`, `SL_3` and `SU_3` over the p-adic
//!   integers, handled as exact rational functions in `p` ([`padic`]).
//!
//! Finite groups given by explicit character tables live in [`finite`].
//! Exact arithmetic (rationals, Bernoulli numbers, polynomial algebra) is in
//! [`exact`]; the floating-point special-function kernel is in [`numerics`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod exact;
pub mod finite;
pub mod numerics;
pub mod padic;
pub mod polylog;
pub mod su2;
pub mod su3;

pub use error::{Error, Result};
pub use numerics::{ComplexValue, PrecisionBudget};
