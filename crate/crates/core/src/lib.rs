//! Exact computation with group rings `K[G]` of finite groups over finite fields.
//!
//! The crate covers five areas:
//!
//! - [`group`]: finite groups as validated multiplication tables, plus subset products.
//! - [`field`]: `GF(p^k)` arithmetic, the Frobenius map, fixed subfields and embeddings.
//! - [`groupring`]: sparse elements of `K[G]`, matrices over `K[G]`, and exhaustive
//!   searches for failures of direct/stable finiteness and for units, zero-divisors
//!   and idempotents.
//! - [`sentence`]: first-order sentences in the language of rings that express the
//!   existence of such witnesses, with a printer, parser, SMT-LIB2 emitter and an
//!   exhaustive evaluator over finite fields.
//! - [`lca`]: cellular automata over finite groups, including the linear automaton
//!   attached to a matrix over `K[G]`.
//!
//! The crate is `no_std` and only needs `alloc`. Exhaustive searches expose
//! chunked entry points so that callers with threads can split the work and
//! reduce the partial results deterministically.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod field;
pub mod group;
pub mod groupring;
pub mod lca;
pub mod linalg;
pub mod sentence;

pub use error::{Error, Result};
pub use field::{Elem, Field, FiniteField};
pub use group::{FiniteGroup, Group, Subset};
pub use groupring::{GroupRingElement, GroupRingMatrix};

/// Default cap on exhaustive enumeration steps (`2^22`).
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// Returns `base^exp`, or `None` on `u64` overflow.
pub fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Fails with [`Error::BudgetExceeded`] when `base^exp` is larger than `budget`.
pub(crate) fn require_budget(base: u64, exp: u64, budget: u64) -> Result<u64> {
    match checked_pow(base, exp) {
        Some(n) if n <= budget => Ok(n),
        required => Err(Error::BudgetExceeded { required, budget }),
    }
}
