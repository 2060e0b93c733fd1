//! Möbius functions and homotopy types of intervals in the consecutive
//! pattern poset and in factor order.
//!
//! Three independent routes compute `μ`: the closed-form recursions in
//! [`closed_form`], the critical-chain count of discrete Morse theory in
//! [`morse`], and the defining recursion in [`poset`] (with the reduced Euler
//! characteristic of the order complex as a fourth check). [`bijection`]
//! implements the order isomorphism between `{a,b}*` and the permutations
//! avoiding 213 and 231.

pub mod bijection;
pub mod cache;
pub mod chains;
pub mod closed_form;
pub mod error;
pub mod harness;
pub mod iso;
pub mod morse;
pub mod perm;
pub mod poset;
pub mod report;
pub mod word;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use poset::{ChainPoset, FactorOrder, Interval, PatternOrder};
pub use word::{Alphabet, Word};
