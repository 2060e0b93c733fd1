//! Serializable Morse reports and the bracketed chain table layout.
//!
//! In the table, each chain is a row: its id, then the embedding of every
//! `ρ_i` alternating with the label `l_{i+1}`. A member of `I(C)` or `J(C)`
//! spanning `ρ_s … ρ_e` puts `[` before `ρ_s` and `]` after `ρ_e`, both in
//! the embedding columns and around the `-` separators of the id (the
//! separator between `l_i` and `l_{i+1}` stands for `ρ_i`).

use serde::{Deserialize, Serialize};

use crate::chains::{maximal_chains, MaximalChain, StepClass};
use crate::error::Result;
use crate::morse::{analyze, ChainInterval, HomotopyType, MorseAnalysis};
use crate::perm::Permutation;
use crate::poset::{rank_gap, ChainPoset, Interval, PatternOrder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub id: String,
    pub labels: Vec<usize>,
    pub elements: Vec<String>,
    pub embeddings: Vec<String>,
    pub steps: Vec<StepClass>,
    pub msis: Vec<ChainInterval>,
    pub j: Vec<ChainInterval>,
    pub critical: bool,
    pub critical_dimension: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseReport {
    pub poset: String,
    pub bottom: String,
    pub top: String,
    pub chains: Vec<ChainRecord>,
    pub critical_chains: Vec<usize>,
    pub mobius: i64,
    pub homotopy: Option<HomotopyType>,
}

impl MorseReport {
    pub fn from_analysis<P: ChainPoset>(poset: &P, analysis: &MorseAnalysis<P::Elem>) -> Self {
        let chains = analysis
            .chains
            .iter()
            .zip(&analysis.per_chain)
            .map(|(c, m)| ChainRecord {
                id: c.id_string(),
                labels: c.labels().to_vec(),
                elements: c.elements().iter().map(|e| poset.render(e)).collect(),
                embeddings: (0..=c.len()).map(|i| c.embedding(poset, i)).collect(),
                steps: c.classify_steps(),
                msis: m.msis.clone(),
                j: m.j.clone(),
                critical: m.critical_dimension.is_some(),
                critical_dimension: m.critical_dimension,
            })
            .collect();
        MorseReport {
            poset: poset.tag().to_string(),
            bottom: poset.render(analysis.interval.bottom()),
            top: poset.render(analysis.interval.top()),
            chains,
            critical_chains: analysis.critical_chains(),
            mobius: analysis.mobius,
            homotopy: analysis.homotopy(),
        }
    }
}

/// The maximal chains of an interval in chain-id order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainListing {
    pub poset: String,
    pub bottom: String,
    pub top: String,
    pub chains: Vec<ListedChain>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListedChain {
    pub id: String,
    pub elements: Vec<String>,
    pub embeddings: Vec<String>,
    pub steps: Vec<StepClass>,
}

pub fn chain_listing<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> ChainListing {
    let chains = maximal_chains(poset, iv)
        .iter()
        .map(|c| ListedChain {
            id: c.id_string(),
            elements: c.elements().iter().map(|e| poset.render(e)).collect(),
            embeddings: (0..=c.len()).map(|i| c.embedding(poset, i)).collect(),
            steps: c.classify_steps(),
        })
        .collect();
    ChainListing {
        poset: poset.tag().to_string(),
        bottom: poset.render(iv.bottom()),
        top: poset.render(iv.top()),
        chains,
    }
}

/// `μ` and the homotopy type of the order complex of the open interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyReport {
    pub poset: String,
    pub bottom: String,
    pub top: String,
    pub rank_gap: usize,
    pub mobius: i64,
    /// `None` below rank gap 2.
    pub homotopy: Option<HomotopyType>,
}

pub fn homotopy_report<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Result<HomotopyReport> {
    let analysis = analyze(poset, iv)?;
    Ok(HomotopyReport {
        poset: poset.tag().to_string(),
        bottom: poset.render(iv.bottom()),
        top: poset.render(iv.top()),
        rank_gap: rank_gap(poset, iv),
        mobius: analysis.mobius,
        homotopy: analysis.homotopy(),
    })
}

/// Builds the report for one interval.
pub fn morse_report<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Result<MorseReport> {
    Ok(MorseReport::from_analysis(poset, &analyze(poset, iv)?))
}

fn brackets(members: &[ChainInterval], i: usize, body: &str) -> String {
    let opens = members.iter().filter(|m| m.start == i).count();
    let closes = members.iter().filter(|m| m.end == i).count();
    format!("{}{body}{}", "[".repeat(opens), "]".repeat(closes))
}

/// Chain id with bracketed separators, e.g. `6[-5[-]4-]3[-]1`.
pub fn bracketed_id<E>(chain: &MaximalChain<E>, members: &[ChainInterval]) -> String {
    let mut out = String::new();
    for (k, label) in chain.labels().iter().enumerate() {
        if k > 0 {
            out.push_str(&brackets(members, k, "-"));
        }
        out.push_str(&label.to_string());
    }
    out
}

/// One table row: bracketed id, then embeddings alternating with labels.
pub fn chain_row<P: ChainPoset>(poset: &P, chain: &MaximalChain<P::Elem>, members: &[ChainInterval]) -> Vec<String> {
    let mut row = vec![bracketed_id(chain, members)];
    for i in 0..=chain.len() {
        if i > 0 {
            row.push(chain.label(i).to_string());
        }
        row.push(brackets(members, i, &chain.embedding(poset, i)));
    }
    row
}

fn header(n: usize) -> Vec<String> {
    let mut row = vec!["Chain Id".to_string(), "rho0".to_string()];
    for i in 1..=n {
        row.push(format!("l{i}"));
        row.push(format!("rho{i}"));
    }
    row
}

/// Left-aligns columns separated by two spaces; no trailing whitespace.
fn layout(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The `I(C)` table for every chain, followed by `J(C)` for the chains where
/// it differs from `I(C)`.
pub fn render_table<P: ChainPoset>(poset: &P, analysis: &MorseAnalysis<P::Elem>) -> String {
    let n = analysis.chains.first().map_or(0, |c| c.len());
    let name = format!(
        "[{},{}]",
        poset.render(analysis.interval.bottom()),
        poset.render(analysis.interval.top())
    );

    let mut rows = vec![header(n)];
    for (c, m) in analysis.chains.iter().zip(&analysis.per_chain) {
        rows.push(chain_row(poset, c, &m.msis));
    }
    let mut out = format!("I(C) intervals for {name}:\n");
    out.push_str(&layout(&rows));

    let mut rows = vec![header(n)];
    for (c, m) in analysis.chains.iter().zip(&analysis.per_chain) {
        if m.j != m.msis {
            rows.push(chain_row(poset, c, &m.j));
        }
    }
    out.push('\n');
    out.push_str(&format!(
        "J(C) intervals for {name} where I(C)=J(C) except for the chains below:\n"
    ));
    if rows.len() == 1 {
        out.push_str("(none)\n");
    } else {
        out.push_str(&layout(&rows));
    }
    out
}

/// The comparison of `I(C)` and `J(C)` over the maximal chains of
/// `[1, 213546]`.
pub fn table1() -> String {
    let po = PatternOrder::new();
    let bottom = Permutation::identity(1);
    let top: Permutation = "213546".parse().expect("valid permutation");
    let iv = Interval::new(&po, bottom, top).expect("1 lies below every permutation");
    let analysis = analyze(&po, &iv).expect("table interval analyses cleanly");
    render_table(&po, &analysis)
}
