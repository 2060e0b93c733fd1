//! Closed-form Möbius recursions for consecutive patterns and factor order.
//!
//! Both follow the same four cases, checked top to bottom:
//!
//! 1. `|τ|−|σ| > 2` and `σ ≤ x(τ) ≰ i(τ)`: recurse to `μ(σ, x(τ))`;
//! 2. `|τ|−|σ| = 2`, `τ` not monotone (not flat), `σ ∈ {i(τ), x(τ)}`: `1`;
//! 3. `|τ|−|σ| < 2`: `(−1)^{|τ|−|σ|}`;
//! 4. otherwise `0`.
//!
//! For words the exterior is the outer word `o(w)` and the interior the
//! inner word `i(w)`.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Word;

pub fn mobius_pattern(sigma: &Permutation, tau: &Permutation) -> Result<i64> {
    if !sigma.leq(tau) {
        return Err(Error::NotComparable {
            bottom: sigma.to_string(),
            top: tau.to_string(),
        });
    }
    let mut tau = tau.clone();
    loop {
        let gap = tau.len() - sigma.len();
        if gap < 2 {
            return Ok(if gap == 0 { 1 } else { -1 });
        }
        // gap >= 2 and |σ| >= 1 give |τ| >= 3
        let exterior = tau.exterior()?;
        let interior = tau.interior()?;
        if gap > 2 && sigma.leq(&exterior) && !exterior.leq(&interior) {
            tau = exterior;
            continue;
        }
        if gap == 2 && !tau.is_monotone() && (*sigma == interior || *sigma == exterior) {
            return Ok(1);
        }
        return Ok(0);
    }
}

pub fn mobius_factor(u: &Word, w: &Word) -> Result<i64> {
    if !u.is_factor_of(w) {
        return Err(Error::NotComparable {
            bottom: format!("{:?}", u.letters()),
            top: format!("{:?}", w.letters()),
        });
    }
    let mut w = w.clone();
    loop {
        let gap = w.len() - u.len();
        if gap < 2 {
            return Ok(if gap == 0 { 1 } else { -1 });
        }
        let outer = w.outer_word()?;
        let inner = w.inner_word()?;
        if gap > 2 && u.is_factor_of(&outer) && !outer.is_factor_of(&inner) {
            w = outer;
            continue;
        }
        if gap == 2 && !w.is_flat()? && (*u == inner || *u == outer) {
            return Ok(1);
        }
        return Ok(0);
    }
}
