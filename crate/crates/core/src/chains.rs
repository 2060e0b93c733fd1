//! Maximal chains with their embeddings into the top element, chain ids,
//! the poset lexicographic order, and step classification.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::poset::{ChainPoset, Interval};

/// A maximal chain `ρ_0 → ρ_1 → … → ρ_n` from the top of an interval down to
/// its bottom.
///
/// Each `ρ_i` carries an embedding into the top: a block starting at
/// `offsets[i]` (zero-based). `labels[i-1]` is the top position (1-based)
/// zeroed out in passing from `ρ_{i-1}` to `ρ_i`; the label sequence is the
/// chain id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalChain<E> {
    elements: Vec<E>,
    offsets: Vec<usize>,
    labels: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepClass {
    Ascent,
    WeakDescent,
    StrongDescent,
}

impl<E> MaximalChain<E> {
    /// Number of covers `n`; the chain has `n + 1` elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    /// Zero-based block start of `η_i` in top coordinates.
    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    /// The chain id `l_1 … l_n`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `l_i` for `1 ≤ i ≤ n`.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    /// The id written as `6-5-4-3-1`.
    pub fn id_string(&self) -> String {
        self.labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }

    /// Class of the internal element `ρ_i`, `1 ≤ i ≤ n−1`.
    pub fn step_class(&self, i: usize) -> StepClass {
        let (here, next) = (self.label(i), self.label(i + 1));
        if here < next {
            StepClass::Ascent
        } else if here == next + 1 {
            StepClass::WeakDescent
        } else {
            StepClass::StrongDescent
        }
    }

    /// Classes of `ρ_1 … ρ_{n−1}`; empty for `n < 2`.
    pub fn classify_steps(&self) -> Vec<StepClass> {
        (1..self.len()).map(|i| self.step_class(i)).collect()
    }

    /// Embedding of `ρ_i` rendered as a zero-padded row.
    pub fn embedding<P>(&self, poset: &P, i: usize) -> String
    where
        P: ChainPoset<Elem = E>,
    {
        let width = poset.rank(&self.elements[0]);
        poset.render_embedding(&self.elements[i], self.offsets[i], width)
    }
}

/// Every maximal chain of `iv` exactly once, sorted by chain id.
pub fn maximal_chains<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Vec<MaximalChain<P::Elem>> {
    let bottom_rank = poset.rank(iv.bottom());
    let mut out = Vec::new();
    let mut stack = vec![MaximalChain {
        elements: vec![iv.top().clone()],
        offsets: vec![0],
        labels: Vec::new(),
    }];
    while let Some(chain) = stack.pop() {
        let last = chain.elements.last().unwrap();
        if poset.rank(last) == bottom_rank {
            debug_assert_eq!(last, iv.bottom());
            out.push(chain);
            continue;
        }
        let offset = *chain.offsets.last().unwrap();
        for (child, zeroed) in poset.down_covers(last) {
            if !poset.leq(iv.bottom(), &child) {
                continue;
            }
            let mut next = chain.clone();
            next.labels.push(offset + zeroed);
            next.offsets.push(if zeroed == 1 { offset + 1 } else { offset });
            next.elements.push(child);
            stack.push(next);
        }
    }
    out.sort_by(|a, b| a.labels.cmp(&b.labels));
    out
}

/// Checks the poset lexicographic property of a total order on the maximal
/// chains of one interval: if `C < D` diverge from index `k`, every chain
/// agreeing with `C` to index `k+1` precedes every chain agreeing with `D`
/// to index `k+1`.
pub fn is_poset_lex<E: Clone + Eq + std::hash::Hash>(order: &[MaximalChain<E>]) -> bool {
    // first and last position of each chain prefix in the order
    let mut span: HashMap<&[E], (usize, usize)> = HashMap::new();
    for (pos, chain) in order.iter().enumerate() {
        for end in 1..=chain.elements.len() {
            span.entry(&chain.elements[..end])
                .and_modify(|s| s.1 = pos)
                .or_insert((pos, pos));
        }
    }
    for (ci, c) in order.iter().enumerate() {
        for d in &order[ci + 1..] {
            let Some(split) = c
                .elements
                .iter()
                .zip(&d.elements)
                .position(|(x, y)| x != y)
            else {
                // identical element sequences cannot be two distinct chains
                return false;
            };
            let last_c = span[&c.elements[..=split]].1;
            let first_d = span[&d.elements[..=split]].0;
            if last_c >= first_d {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, Permutation};
    use crate::poset::{interval_elements, intervals_below, PatternOrder};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn chains(b: &str, t: &str) -> Vec<MaximalChain<Permutation>> {
        let po = PatternOrder::new();
        maximal_chains(&po, &Interval::new(&po, p(b), p(t)).unwrap())
    }

    fn find<'a>(all: &'a [MaximalChain<Permutation>], id: &str) -> &'a MaximalChain<Permutation> {
        all.iter().find(|c| c.id_string() == id).unwrap()
    }

    #[test]
    fn table_interval_chain_ids() {
        let all = chains("1", "213546");
        let ids: Vec<_> = all.iter().map(|c| c.id_string()).collect();
        assert_eq!(
            ids,
            [
                "1-2-3-4-5",
                "1-2-3-6-4",
                "1-2-6-3-4",
                "1-2-6-5-3",
                "1-6-2-3-4",
                "1-6-2-5-3",
                "1-6-5-2-3",
                "6-1-2-3-4",
                "6-1-2-5-3",
                "6-1-5-2-3",
                "6-5-1-2-3",
                "6-5-4-1-2",
                "6-5-4-3-1",
            ]
        );
        let po = PatternOrder::new();
        let first = &all[0];
        let rows: Vec<_> = (0..=5).map(|i| first.embedding(&po, i)).collect();
        assert_eq!(rows, ["213546", "012435", "001324", "000213", "000012", "000001"]);
        let last = all.last().unwrap();
        let rows: Vec<_> = (0..=5).map(|i| last.embedding(&po, i)).collect();
        assert_eq!(rows, ["213546", "213540", "213400", "213000", "210000", "010000"]);
    }

    #[test]
    fn small_interval_chains() {
        let all = chains("123", "21354");
        let ids: Vec<_> = all.iter().map(|c| c.id_string()).collect();
        assert_eq!(ids, ["1-5", "5-1"]);
        assert_eq!(all[0].element(1), &p("1243"));
        assert_eq!(all[1].element(1), &p("2134"));

        let trivial = chains("213", "213");
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].len(), 0);
        assert_eq!(trivial[0].id_string(), "");
    }

    #[test]
    fn step_classification() {
        use StepClass::*;
        let all = chains("1", "213546");
        assert_eq!(
            find(&all, "6-5-1-2-3").classify_steps(),
            [WeakDescent, StrongDescent, Ascent, Ascent]
        );
        assert_eq!(find(&all, "1-2-3-4-5").classify_steps(), [Ascent; 4]);
        assert_eq!(
            find(&all, "6-5-4-3-1").classify_steps(),
            [WeakDescent, WeakDescent, WeakDescent, StrongDescent]
        );
        assert!(chains("1", "12")[0].classify_steps().is_empty());
    }

    #[test]
    fn poset_lex_examples() {
        let all = chains("1", "213546");
        assert!(is_poset_lex(&all));
        assert!(is_poset_lex(&chains("1", "2134")));

        // 1-2-3-4-5 and 1-2-6-3-4 diverge at ρ_3; putting 1-2-3-6-4 (which
        // agrees with the former through ρ_3) after the latter breaks it.
        let mut shuffled = all.clone();
        shuffled.swap(1, 2);
        assert!(!is_poset_lex(&shuffled));
    }

    /// Counts maximal chains using only `leq` and ranks.
    fn naive_chain_count(elems: &[Permutation], from: &Permutation, bottom: &Permutation) -> usize {
        if from == bottom {
            return 1;
        }
        elems
            .iter()
            .filter(|z| z.len() + 1 == from.len() && z.leq(from))
            .map(|z| naive_chain_count(elems, z, bottom))
            .sum()
    }

    #[test]
    fn chain_enumeration_properties() {
        let po = PatternOrder::new();
        let tops: Vec<_> = (1..=5).flat_map(all_permutations).collect();
        for iv in intervals_below(&po, &tops) {
            let all = maximal_chains(&po, &iv);
            let elems = interval_elements(&po, &iv);
            assert_eq!(all.len(), naive_chain_count(&elems, iv.top(), iv.bottom()));
            let mut ids: Vec<_> = all.iter().map(|c| c.labels().to_vec()).collect();
            ids.dedup();
            assert_eq!(ids.len(), all.len());
            for c in &all {
                let mut labels = c.labels().to_vec();
                labels.sort_unstable();
                labels.dedup();
                assert_eq!(labels.len(), c.len());
                // labels are exactly the top positions outside the bottom's block
                let width = iv.top().len();
                let kept = c.offset(c.len())..c.offset(c.len()) + iv.bottom().len();
                let zeroed: Vec<_> = (1..=width).filter(|q| !kept.contains(&(q - 1))).collect();
                assert_eq!(labels, zeroed);
            }
            assert!(is_poset_lex(&all));
        }
    }
}
