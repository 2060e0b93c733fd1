//! Exploratory search for poset isomorphisms between intervals of the
//! consecutive pattern poset and intervals of factor order.
//!
//! Intervals are bucketed by an invariant signature and matched by a
//! backtracking search that respects ranks and the order relation.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::Crosscheck;
use crate::poset::{interval_elements, intervals_below, ChainPoset, FactorOrder, Interval, PatternOrder};
use crate::word::{Alphabet, Word};

/// An interval materialized as a finite poset on `0..n`, sorted by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    ranks: Vec<usize>,
    leq: Vec<Vec<bool>>,
}

/// Per-element invariant: rank, number of elements below and above, and
/// number of lower and upper covers.
type VertexKey = (usize, usize, usize, usize, usize);

impl FinitePoset {
    pub fn from_interval<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Self {
        let elems = interval_elements(poset, iv);
        let base = poset.rank(iv.bottom());
        let ranks = elems.iter().map(|e| poset.rank(e) - base).collect();
        let leq = elems
            .iter()
            .map(|x| elems.iter().map(|y| poset.leq(x, y)).collect())
            .collect();
        FinitePoset { ranks, leq }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    fn covers(&self, x: usize, y: usize) -> bool {
        self.leq[x][y] && self.ranks[y] == self.ranks[x] + 1
    }

    fn vertex_key(&self, v: usize) -> VertexKey {
        let n = self.len();
        let below = (0..n).filter(|&u| self.leq[u][v]).count();
        let above = (0..n).filter(|&u| self.leq[v][u]).count();
        let down = (0..n).filter(|&u| self.covers(u, v)).count();
        let up = (0..n).filter(|&u| self.covers(v, u)).count();
        (self.ranks[v], below, above, down, up)
    }

    /// Sorted vertex invariants; isomorphic posets have equal signatures.
    pub fn signature(&self) -> Vec<VertexKey> {
        let mut keys: Vec<_> = (0..self.len()).map(|v| self.vertex_key(v)).collect();
        keys.sort_unstable();
        keys
    }

    /// An isomorphism `self → other` as an index map, if one exists.
    pub fn isomorphism(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let mine: Vec<_> = (0..self.len()).map(|v| self.vertex_key(v)).collect();
        let theirs: Vec<_> = (0..other.len()).map(|v| other.vertex_key(v)).collect();
        let mut sorted_mine = mine.clone();
        let mut sorted_theirs = theirs.clone();
        sorted_mine.sort_unstable();
        sorted_theirs.sort_unstable();
        if sorted_mine != sorted_theirs {
            return None;
        }
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        self.extend(other, &mine, &theirs, 0, &mut map, &mut used)
            .then_some(map)
    }

    fn extend(
        &self,
        other: &FinitePoset,
        mine: &[VertexKey],
        theirs: &[VertexKey],
        x: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if x == self.len() {
            return true;
        }
        for y in 0..other.len() {
            if used[y] || mine[x] != theirs[y] {
                continue;
            }
            let consistent = (0..x).all(|u| {
                self.leq[u][x] == other.leq[map[u]][y] && self.leq[x][u] == other.leq[y][map[u]]
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend(other, mine, theirs, x + 1, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoMatch {
    pub alphabet_size: usize,
    pub bottom: String,
    pub top: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoEntry {
    pub bottom: String,
    pub top: String,
    pub size: usize,
    pub matched: Option<IsoMatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCatalog {
    pub pattern_cap: usize,
    pub word_cap: usize,
    pub alphabet: String,
    pub entries: Vec<IsoEntry>,
    pub matched: usize,
    pub unmatched: usize,
}

/// Letters relabeled in order of first occurrence: one representative per
/// renaming of the alphabet.
fn is_first_occurrence_form(w: &Word) -> bool {
    let mut next = 0u8;
    for &c in w.letters() {
        if c > next {
            return false;
        }
        if c == next {
            next += 1;
        }
    }
    true
}

fn distinct_letters(w: &Word) -> usize {
    let mut seen: Vec<u8> = w.letters().to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

struct Candidate {
    poset: FinitePoset,
    alphabet_size: usize,
    bottom: String,
    top: String,
}

/// For every pattern interval with `|τ| ≤ pattern_cap`, looks for an
/// isomorphic factor-order interval `[u, w]` with `|w| ≤ word_cap` over
/// `alphabet`, preferring fewer distinct letters and shorter words.
pub fn iso_search(pattern_cap: usize, word_cap: usize, alphabet: &Alphabet) -> Result<IsoCatalog> {
    let patterns = PatternOrder::new();
    let words = FactorOrder::new(alphabet.clone());
    for (cap, limit) in [(pattern_cap, PatternOrder::DEFAULT_LIMIT), (word_cap, FactorOrder::DEFAULT_LIMIT)] {
        if cap > limit {
            return Err(Error::Guardrail { len: cap, limit });
        }
    }

    let tops: Vec<Word> = words
        .elements_up_to(word_cap)
        .into_iter()
        .filter(is_first_occurrence_form)
        .collect();
    let mut candidates: Vec<Candidate> = intervals_below(&words, &tops)
        .par_iter()
        .map(|iv| Candidate {
            poset: FinitePoset::from_interval(&words, iv),
            alphabet_size: distinct_letters(iv.top()),
            bottom: words.render(iv.bottom()),
            top: words.render(iv.top()),
        })
        .collect();
    candidates.sort_by_key(|c| (c.alphabet_size, c.top.chars().count(), c.top.clone(), c.bottom.clone()));
    let mut buckets: HashMap<Vec<VertexKey>, Vec<usize>> = HashMap::new();
    for (k, c) in candidates.iter().enumerate() {
        buckets.entry(c.poset.signature()).or_default().push(k);
    }

    let pattern_tops = patterns.elements_up_to(pattern_cap);
    let entries: Vec<IsoEntry> = intervals_below(&patterns, &pattern_tops)
        .par_iter()
        .map(|iv| {
            let fp = FinitePoset::from_interval(&patterns, iv);
            let matched = buckets.get(&fp.signature()).and_then(|ks| {
                ks.iter()
                    .map(|&k| &candidates[k])
                    .find(|c| fp.isomorphism(&c.poset).is_some())
                    .map(|c| IsoMatch {
                        alphabet_size: c.alphabet_size,
                        bottom: c.bottom.clone(),
                        top: c.top.clone(),
                    })
            });
            IsoEntry {
                bottom: patterns.render(iv.bottom()),
                top: patterns.render(iv.top()),
                size: fp.len(),
                matched,
            }
        })
        .collect();
    let matched = entries.iter().filter(|e| e.matched.is_some()).count();
    Ok(IsoCatalog {
        pattern_cap,
        word_cap,
        alphabet: alphabet.to_string(),
        unmatched: entries.len() - matched,
        matched,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pattern_poset(b: &str, t: &str) -> FinitePoset {
        let po = PatternOrder::new();
        FinitePoset::from_interval(&po, &Interval::new(&po, p(b), p(t)).unwrap())
    }

    fn word_poset(b: &str, t: &str) -> FinitePoset {
        let fo = FactorOrder::new(Alphabet::ab());
        let iv = Interval::new(&fo, fo.parse(b).unwrap(), fo.parse(t).unwrap()).unwrap();
        FinitePoset::from_interval(&fo, &iv)
    }

    #[test]
    fn two_point_open_intervals_match() {
        // both open intervals are two incomparable points
        let a = pattern_poset("123", "21354");
        let b = word_poset("a", "aba");
        assert_eq!(a.len(), 4);
        assert!(a.isomorphism(&b).is_some());
        // a chain of length 2 is not a diamond
        assert!(a.isomorphism(&word_poset("a", "aaa")).is_none());
    }

    #[test]
    fn trivial_intervals_match() {
        assert!(pattern_poset("21", "21").isomorphism(&word_poset("ab", "ab")).is_some());
    }

    #[test]
    fn isomorphism_is_a_bijection_preserving_order() {
        let a = pattern_poset("1", "2143");
        let map = a.isomorphism(&a).unwrap();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..a.len()).collect::<Vec<_>>());
    }

    #[test]
    fn catalog_small_caps() {
        let catalog = iso_search(3, 3, &Alphabet::ab()).unwrap();
        assert_eq!(catalog.matched + catalog.unmatched, catalog.entries.len());
        let trivial = catalog
            .entries
            .iter()
            .find(|e| e.bottom == "12" && e.top == "12")
            .unwrap();
        assert!(trivial.matched.is_some());
        assert!(iso_search(10, 3, &Alphabet::ab()).is_err());
    }
}
