//! Exhaustive cross-check of every Möbius route and structural property over
//! all intervals below a size cap.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::MobiusCache;
use crate::chains::{is_poset_lex, MaximalChain, StepClass};
use crate::closed_form::{mobius_factor, mobius_pattern};
use crate::error::{Error, Result};
use crate::morse::{analyze, msis_fast_pattern, ChainInterval, HomotopyType, MorseAnalysis};
use crate::perm::{all_permutations, Permutation};
use crate::poset::{euler_characteristic, intervals_below, rank_gap, ChainPoset, FactorOrder, Interval, PatternOrder};

/// The per-poset pieces of the cross-check.
pub trait Crosscheck: ChainPoset {
    /// Every element of length at most `max_len`.
    fn elements_up_to(&self, max_len: usize) -> Vec<Self::Elem>;

    fn closed_form(&self, iv: &Interval<Self::Elem>) -> Result<i64>;

    /// MSIs read off the chain alone, where a characterization exists.
    fn fast_msis(&self, _chain: &MaximalChain<Self::Elem>) -> Option<Vec<ChainInterval>> {
        None
    }

    /// Whether the lemmas on strong descents, ascents, and the lex-last
    /// critical chain are asserted.
    fn check_descent_lemmas(&self) -> bool {
        false
    }
}

impl Crosscheck for PatternOrder {
    fn elements_up_to(&self, max_len: usize) -> Vec<Permutation> {
        (1..=max_len).flat_map(all_permutations).collect()
    }

    fn closed_form(&self, iv: &Interval<Permutation>) -> Result<i64> {
        mobius_pattern(iv.bottom(), iv.top())
    }

    fn fast_msis(&self, chain: &MaximalChain<Permutation>) -> Option<Vec<ChainInterval>> {
        Some(msis_fast_pattern(chain))
    }

    fn check_descent_lemmas(&self) -> bool {
        true
    }
}

impl Crosscheck for FactorOrder {
    fn elements_up_to(&self, max_len: usize) -> Vec<crate::word::Word> {
        self.alphabet().words_up_to(max_len)
    }

    fn closed_form(&self, iv: &Interval<crate::word::Word>) -> Result<i64> {
        mobius_factor(iv.bottom(), iv.top())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub bottom: String,
    pub top: String,
    pub mu_closed: i64,
    pub mu_morse: i64,
    pub mu_brute: i64,
    /// Reduced Euler characteristic, for rank gap at least 2.
    pub euler: Option<i64>,
    pub chains: usize,
    pub critical_chains: usize,
    pub homotopy: Option<HomotopyType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub bottom: String,
    pub top: String,
    pub what: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub intervals: usize,
    pub chains: usize,
    pub critical_chains: usize,
    pub max_critical_per_interval: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub poset: String,
    pub alphabet: Option<String>,
    pub max_size: usize,
    pub intervals: Vec<IntervalRecord>,
    pub summary: Summary,
    pub mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `μ` of one interval by every route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusBreakdown {
    pub poset: String,
    pub bottom: String,
    pub top: String,
    pub closed_form: i64,
    pub morse: i64,
    pub brute_force: i64,
    /// Reduced Euler characteristic, for rank gap at least 1.
    pub euler: Option<i64>,
}

impl MobiusBreakdown {
    pub fn agree(&self) -> bool {
        self.closed_form == self.brute_force
            && self.morse == self.brute_force
            && self.euler.is_none_or(|chi| chi == self.brute_force)
    }
}

pub fn mobius_breakdown<P: Crosscheck>(
    poset: &P,
    iv: &Interval<P::Elem>,
    cache: Option<&MobiusCache>,
) -> Result<MobiusBreakdown> {
    let brute_force = match cache {
        Some(cache) => cache.mobius(poset, iv)?,
        None => crate::poset::mobius_bruteforce(poset, iv),
    };
    let euler = if rank_gap(poset, iv) >= 1 {
        Some(euler_characteristic(poset, iv)?)
    } else {
        None
    };
    Ok(MobiusBreakdown {
        poset: poset.tag().to_string(),
        bottom: poset.render(iv.bottom()),
        top: poset.render(iv.top()),
        closed_form: poset.closed_form(iv)?,
        morse: crate::morse::mobius_morse(poset, iv)?,
        brute_force,
        euler,
    })
}

/// Structural checks on the chains of one interval. Returns the failures.
fn chain_checks<P: Crosscheck>(poset: &P, analysis: &MorseAnalysis<P::Elem>) -> Vec<String> {
    let mut issues = Vec::new();
    if !is_poset_lex(&analysis.chains) {
        issues.push("chain-id order is not a poset lexicographic order".to_string());
    }
    let last = analysis.chains.len().saturating_sub(1);
    let critical = analysis.critical_chains();
    if critical.len() > 1 {
        issues.push(format!("{} critical chains", critical.len()));
    }
    for (k, (chain, data)) in analysis.chains.iter().zip(&analysis.per_chain).enumerate() {
        let id = chain.id_string();
        for (a, x) in data.j.iter().enumerate() {
            if data.j[..a].iter().any(|y| x.start <= y.end && y.start <= x.end) {
                issues.push(format!("chain {id}: J(C) members overlap"));
            }
            if !data.msis.iter().any(|m| m.contains(x)) {
                issues.push(format!("chain {id}: J(C) member {x:?} lies in no MSI"));
            }
        }
        if let Some(fast) = poset.fast_msis(chain) {
            if fast != data.msis {
                issues.push(format!(
                    "chain {id}: fast MSIs {fast:?} differ from brute force {:?}",
                    data.msis
                ));
            }
        }
        if poset.check_descent_lemmas() {
            for (i, class) in chain.classify_steps().into_iter().enumerate() {
                let i = i + 1;
                match class {
                    StepClass::StrongDescent if !data.msis.contains(&ChainInterval::singleton(i)) => {
                        issues.push(format!("chain {id}: strong descent at rho{i} is not an MSI"));
                    }
                    StepClass::Ascent if data.msis.iter().any(|m| m.contains_index(i)) => {
                        issues.push(format!("chain {id}: ascent at rho{i} lies in an MSI"));
                    }
                    _ => {}
                }
            }
            if data.critical_dimension.is_some() && k != last {
                issues.push(format!("chain {id} is critical but not lex-last"));
            }
        }
    }
    issues
}

fn check_interval<P: Crosscheck>(
    poset: &P,
    iv: &Interval<P::Elem>,
    cache: Option<&MobiusCache>,
) -> Result<(IntervalRecord, Vec<String>)> {
    let analysis = analyze(poset, iv)?;
    let mu_closed = poset.closed_form(iv)?;
    let mu_brute = match cache {
        Some(cache) => cache.mobius(poset, iv)?,
        None => crate::poset::mobius_bruteforce(poset, iv),
    };
    let gap = rank_gap(poset, iv);
    let euler = if gap >= 2 {
        Some(euler_characteristic(poset, iv)?)
    } else {
        None
    };
    let mu_morse = analysis.mobius;
    let homotopy = analysis.homotopy();

    let mut issues = chain_checks(poset, &analysis);
    if mu_closed != mu_brute || mu_morse != mu_brute {
        issues.push(format!(
            "mobius disagreement: closed {mu_closed}, morse {mu_morse}, brute {mu_brute}"
        ));
    }
    if let Some(chi) = euler {
        if chi != mu_brute {
            issues.push(format!("euler characteristic {chi} differs from mobius {mu_brute}"));
        }
    }
    if !(-1..=1).contains(&mu_closed) {
        issues.push(format!("closed form {mu_closed} outside {{-1,0,1}}"));
    }
    match &homotopy {
        Some(HomotopyType::Contractible) if mu_brute != 0 => {
            issues.push(format!("contractible but mobius is {mu_brute}"));
        }
        Some(HomotopyType::Sphere { dimension }) => {
            let sign = if dimension.rem_euclid(2) == 0 { 1 } else { -1 };
            if mu_brute != sign {
                issues.push(format!("sphere of dimension {dimension} but mobius is {mu_brute}"));
            }
        }
        Some(HomotopyType::CellComplex { .. }) => {
            issues.push("more than one critical chain: cell complex fallback".to_string());
        }
        _ => {}
    }

    let record = IntervalRecord {
        bottom: poset.render(iv.bottom()),
        top: poset.render(iv.top()),
        mu_closed,
        mu_morse,
        mu_brute,
        euler,
        chains: analysis.chains.len(),
        critical_chains: analysis.critical_chains().len(),
        homotopy,
    };
    Ok((record, issues))
}

/// Checks every interval `[σ, τ]` with `|τ| ≤ max_size`. Runs on the current
/// rayon pool; records come back in a deterministic order.
pub fn crosscheck<P: Crosscheck>(poset: &P, max_size: usize, cache: Option<&MobiusCache>) -> Result<CrosscheckReport> {
    if let Some(limit) = poset.size_limit() {
        if max_size > limit {
            return Err(Error::Guardrail { len: max_size, limit });
        }
    }
    let tops = poset.elements_up_to(max_size);
    let intervals = intervals_below(poset, &tops);
    let results: Vec<(IntervalRecord, Vec<String>)> = intervals
        .par_iter()
        .map(|iv| check_interval(poset, iv, cache))
        .collect::<Result<_>>()?;

    let mut records = Vec::with_capacity(results.len());
    let mut mismatches = Vec::new();
    for (record, issues) in results {
        for what in issues {
            mismatches.push(Mismatch {
                bottom: record.bottom.clone(),
                top: record.top.clone(),
                what,
            });
        }
        records.push(record);
    }
    let summary = Summary {
        intervals: records.len(),
        chains: records.iter().map(|r| r.chains).sum(),
        critical_chains: records.iter().map(|r| r.critical_chains).sum(),
        max_critical_per_interval: records.iter().map(|r| r.critical_chains).max().unwrap_or(0),
        mismatches: mismatches.len(),
    };
    Ok(CrosscheckReport {
        poset: poset.tag().to_string(),
        alphabet: None,
        max_size,
        intervals: records,
        summary,
        mismatches,
    })
}

/// [`crosscheck`] for factor order, recording the alphabet in the report.
pub fn crosscheck_factor(poset: &FactorOrder, max_size: usize, cache: Option<&MobiusCache>) -> Result<CrosscheckReport> {
    let mut report = crosscheck(poset, max_size, cache)?;
    report.alphabet = Some(poset.alphabet().to_string());
    Ok(report)
}
