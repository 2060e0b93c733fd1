//! Discrete Morse theory on the maximal chains of an interval.
//!
//! Chains are taken in chain-id order. For each chain `C` we find its
//! minimal skipped intervals `I(C)`, derive the disjoint family `J(C)`, and
//! call `C` critical when `J(C)` covers the open part of `C`. The Möbius
//! function is the signed count `Σ (−1)^{d(C)}` over critical chains with
//! `d(C) = #J(C) − 1`.

use serde::{Deserialize, Serialize};

use crate::chains::{maximal_chains, MaximalChain, StepClass};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::{rank_gap, ChainPoset, Interval};

/// The run `ρ_start … ρ_end` (inclusive) of the open part of a chain,
/// `1 ≤ start ≤ end ≤ n−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChainInterval {
    pub start: usize,
    pub end: usize,
}

impl ChainInterval {
    pub fn new(start: usize, end: usize) -> Self {
        assert!(1 <= start && start <= end, "empty chain interval {start}..={end}");
        ChainInterval { start, end }
    }

    pub fn singleton(i: usize) -> Self {
        ChainInterval::new(i, i)
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.start <= i && i <= self.end
    }

    pub fn contains(&self, other: &ChainInterval) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomotopyType {
    Contractible,
    Sphere { dimension: i64 },
    /// More than one critical chain; no homotopy claim is made.
    CellComplex { dimensions: Vec<i64> },
}

impl std::fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomotopyType::Contractible => f.write_str("contractible"),
            HomotopyType::Sphere { dimension } => write!(f, "sphere S^{dimension}"),
            HomotopyType::CellComplex { dimensions } => {
                write!(f, "cell complex with cells of dimensions {dimensions:?}")
            }
        }
    }
}

/// Morse data of one chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMorse {
    /// `I(C)`, ordered by start index.
    pub msis: Vec<ChainInterval>,
    /// `J(C)` in construction order.
    pub j: Vec<ChainInterval>,
    /// `Some(#J(C) − 1)` when the chain is critical.
    pub critical_dimension: Option<i64>,
}

/// Full Morse analysis of one interval.
#[derive(Debug, Clone)]
pub struct MorseAnalysis<E> {
    pub interval: Interval<E>,
    pub chains: Vec<MaximalChain<E>>,
    pub per_chain: Vec<ChainMorse>,
    pub mobius: i64,
}

impl<E> MorseAnalysis<E> {
    /// Indices (into `chains`) of the critical chains.
    pub fn critical_chains(&self) -> Vec<usize> {
        self.per_chain
            .iter()
            .enumerate()
            .filter(|(_, m)| m.critical_dimension.is_some())
            .map(|(i, _)| i)
            .collect()
    }

    /// Homotopy type of the order complex; `None` when the rank gap is
    /// below 2 and the complex is empty or degenerate.
    pub fn homotopy(&self) -> Option<HomotopyType> {
        let n = self.chains.first().map_or(0, |c| c.len());
        if n < 2 {
            return None;
        }
        let dims: Vec<i64> = self
            .per_chain
            .iter()
            .filter_map(|m| m.critical_dimension)
            .collect();
        Some(match dims.as_slice() {
            [] => HomotopyType::Contractible,
            [d] => HomotopyType::Sphere { dimension: *d },
            _ => HomotopyType::CellComplex { dimensions: dims },
        })
    }
}

/// True when the elements of `chain` outside `skip` all lie on `other`.
/// Both chains have one element per rank, so this compares index by index.
fn agrees_outside<E: PartialEq>(chain: &MaximalChain<E>, other: &MaximalChain<E>, skip: ChainInterval) -> bool {
    chain
        .elements()
        .iter()
        .zip(other.elements())
        .enumerate()
        .all(|(i, (a, b))| skip.contains_index(i) || a == b)
}

/// Every run `I` of the open part of `chain` such that the element set of
/// `chain − I` lies inside some earlier chain.
pub fn skipped_intervals<E: PartialEq>(chain: &MaximalChain<E>, earlier: &[MaximalChain<E>]) -> Vec<ChainInterval> {
    let n = chain.len();
    let mut out = Vec::new();
    for start in 1..n {
        for end in start..n {
            let run = ChainInterval::new(start, end);
            if earlier.iter().any(|c| agrees_outside(chain, c, run)) {
                out.push(run);
            }
        }
    }
    out
}

/// `I(C)`: the containment-minimal skipped intervals, by start index.
pub fn minimal_skipped_intervals<E: PartialEq>(
    chain: &MaximalChain<E>,
    earlier: &[MaximalChain<E>],
) -> Vec<ChainInterval> {
    minimal(skipped_intervals(chain, earlier))
}

fn minimal(mut runs: Vec<ChainInterval>) -> Vec<ChainInterval> {
    runs.sort();
    runs.dedup();
    let keep: Vec<ChainInterval> = runs
        .iter()
        .filter(|a| !runs.iter().any(|b| b != *a && a.contains(b)))
        .copied()
        .collect();
    keep
}

/// `run` minus the union of `taken`, or `None` if nothing is left.
fn subtract(run: ChainInterval, taken: &[ChainInterval]) -> Result<Option<ChainInterval>> {
    let left: Vec<usize> = (run.start..=run.end)
        .filter(|&i| !taken.iter().any(|t| t.contains_index(i)))
        .collect();
    let (Some(&first), Some(&last)) = (left.first(), left.last()) else {
        return Ok(None);
    };
    if last - first + 1 != left.len() {
        return Err(Error::Inconsistent(format!(
            "truncating {}..={} leaves a non-contiguous set {left:?}",
            run.start, run.end
        )));
    }
    Ok(Some(ChainInterval::new(first, last)))
}

/// Builds the disjoint family `J(C)` from `I(C)` (ordered by first
/// encounter): take the first interval, truncate the rest by everything
/// taken so far, throw out empty and non-minimal remainders for good, take
/// the earliest survivor, and repeat.
pub fn build_j(msis: &[ChainInterval]) -> Result<Vec<ChainInterval>> {
    let mut remaining: Vec<ChainInterval> = msis.to_vec();
    remaining.sort();
    let mut chosen: Vec<ChainInterval> = Vec::new();
    while !remaining.is_empty() {
        let truncated: Vec<ChainInterval> = remaining
            .iter()
            .map(|&run| subtract(run, &chosen))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        remaining = truncated
            .iter()
            .filter(|a| !truncated.iter().any(|b| b != *a && a.contains(b)))
            .copied()
            .collect();
        remaining.sort();
        remaining.dedup();
        if let Some(first) = remaining.first().copied() {
            chosen.push(first);
            remaining.remove(0);
        }
    }
    Ok(chosen)
}

/// `J(C)` covers the open part `ρ_1 … ρ_{n−1}` of a chain with `n` covers.
fn covers_open_part(j: &[ChainInterval], n: usize) -> bool {
    (1..n).all(|i| j.iter().any(|r| r.contains_index(i)))
}

/// Critical dimension `#J(C) − 1` when `chain` is critical.
pub fn critical_data<E: PartialEq>(chain: &MaximalChain<E>, earlier: &[MaximalChain<E>]) -> Result<Option<i64>> {
    Ok(chain_morse(chain, earlier)?.critical_dimension)
}

fn chain_morse<E: PartialEq>(chain: &MaximalChain<E>, earlier: &[MaximalChain<E>]) -> Result<ChainMorse> {
    let msis = minimal_skipped_intervals(chain, earlier);
    let j = build_j(&msis)?;
    let critical_dimension = covers_open_part(&j, chain.len()).then(|| j.len() as i64 - 1);
    Ok(ChainMorse {
        msis,
        j,
        critical_dimension,
    })
}

/// Runs the whole pipeline on `iv`.
pub fn analyze<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Result<MorseAnalysis<P::Elem>> {
    let chains = maximal_chains(poset, iv);
    let per_chain = chains
        .iter()
        .enumerate()
        .map(|(k, c)| chain_morse(c, &chains[..k]))
        .collect::<Result<Vec<_>>>()?;
    let mobius = if rank_gap(poset, iv) == 0 {
        1
    } else {
        per_chain
            .iter()
            .filter_map(|m| m.critical_dimension)
            .map(|d| if d.rem_euclid(2) == 0 { 1 } else { -1 })
            .sum()
    };
    Ok(MorseAnalysis {
        interval: iv.clone(),
        chains,
        per_chain,
        mobius,
    })
}

/// `μ(bottom, top)` as a signed count of critical chains.
pub fn mobius_morse<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Result<i64> {
    Ok(analyze(poset, iv)?.mobius)
}

/// Homotopy type of the order complex of the open interval.
pub fn homotopy_type<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Result<HomotopyType> {
    let gap = rank_gap(poset, iv);
    if gap < 2 {
        return Err(Error::TooShort {
            what: "homotopy_type rank gap",
            min: 2,
            len: gap,
        });
    }
    Ok(analyze(poset, iv)?
        .homotopy()
        .expect("rank gap at least 2"))
}

/// MSIs of a chain in the consecutive pattern poset, read off the chain
/// alone: singletons at strong descents, plus every run `C(ρ_i, ρ_j)` with
/// `ρ_j = x(ρ_i) ≰ i(ρ_i)` and `l_{i+1} > … > l_j` for `j ≥ i + 2`.
pub fn msis_fast_pattern(chain: &MaximalChain<Permutation>) -> Vec<ChainInterval> {
    let n = chain.len();
    let mut out: Vec<ChainInterval> = (1..n)
        .filter(|&i| chain.step_class(i) == StepClass::StrongDescent)
        .map(ChainInterval::singleton)
        .collect();
    for i in 0..n {
        let rho = chain.element(i);
        if rho.len() < 3 {
            continue;
        }
        let exterior = rho.exterior().expect("length checked");
        let interior = rho.interior().expect("length checked");
        if exterior.leq(&interior) {
            continue;
        }
        let j = i + rho.len() - exterior.len();
        if j < i + 2 || j > n || chain.element(j) != &exterior {
            continue;
        }
        if (i + 1..j).all(|k| chain.label(k) > chain.label(k + 1)) {
            out.push(ChainInterval::new(i + 1, j - 1));
        }
    }
    out.sort();
    out.dedup();
    out
}
