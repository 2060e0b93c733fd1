//! The common interface over both posets, plus the ground-truth oracles:
//! interval enumeration, the Möbius recursion, and the reduced Euler
//! characteristic of the order complex.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{Alphabet, Word};

/// A graded poset whose elements cover at most two elements, each reached by
/// zeroing one position of the covering element.
pub trait ChainPoset: Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    /// Short tag used in cache records and reports.
    fn tag(&self) -> &'static str;

    /// Length of the element.
    fn rank(&self, e: &Self::Elem) -> usize;

    /// Covered elements with the zeroed position, 1-based in `e`'s own
    /// coordinates. Empty for the minimum rank.
    fn down_covers(&self, e: &Self::Elem) -> Vec<(Self::Elem, usize)>;

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool;

    fn render(&self, e: &Self::Elem) -> String;

    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// `e` written at zero-based `offset` inside a zero-padded row of
    /// `width` positions.
    fn render_embedding(&self, e: &Self::Elem, offset: usize, width: usize) -> String;

    /// Largest top length accepted without an override.
    fn size_limit(&self) -> Option<usize>;
}

/// Consecutive pattern containment on permutations.
#[derive(Debug, Clone, Copy)]
pub struct PatternOrder {
    limit: Option<usize>,
}

impl PatternOrder {
    pub const DEFAULT_LIMIT: usize = 9;

    pub fn new() -> Self {
        PatternOrder {
            limit: Some(Self::DEFAULT_LIMIT),
        }
    }

    /// No guardrail on the top length.
    pub fn unlimited() -> Self {
        PatternOrder { limit: None }
    }
}

impl Default for PatternOrder {
    fn default() -> Self {
        Self::new()
    }
}

impl ChainPoset for PatternOrder {
    type Elem = Permutation;

    fn tag(&self) -> &'static str {
        "pattern"
    }

    fn rank(&self, e: &Permutation) -> usize {
        e.len()
    }

    fn down_covers(&self, e: &Permutation) -> Vec<(Permutation, usize)> {
        e.down_covers().unwrap_or_default()
    }

    fn leq(&self, x: &Permutation, y: &Permutation) -> bool {
        x.leq(y)
    }

    fn render(&self, e: &Permutation) -> String {
        e.to_string()
    }

    fn parse(&self, s: &str) -> Result<Permutation> {
        s.parse()
    }

    fn render_embedding(&self, e: &Permutation, offset: usize, width: usize) -> String {
        let mut row = vec![0u32; width];
        row[offset..offset + e.len()].copy_from_slice(e.letters());
        if width <= 9 {
            row.iter().map(|v| v.to_string()).collect()
        } else {
            row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    fn size_limit(&self) -> Option<usize> {
        self.limit
    }
}

/// Factor order on the words over a declared alphabet, empty word included.
#[derive(Debug, Clone)]
pub struct FactorOrder {
    alphabet: Alphabet,
    limit: Option<usize>,
}

impl FactorOrder {
    pub const DEFAULT_LIMIT: usize = 12;

    pub fn new(alphabet: Alphabet) -> Self {
        FactorOrder {
            alphabet,
            limit: Some(Self::DEFAULT_LIMIT),
        }
    }

    pub fn unlimited(alphabet: Alphabet) -> Self {
        FactorOrder {
            alphabet,
            limit: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

impl ChainPoset for FactorOrder {
    type Elem = Word;

    fn tag(&self) -> &'static str {
        "factor"
    }

    fn rank(&self, e: &Word) -> usize {
        e.len()
    }

    fn down_covers(&self, e: &Word) -> Vec<(Word, usize)> {
        e.down_covers().unwrap_or_default()
    }

    fn leq(&self, x: &Word, y: &Word) -> bool {
        x.is_factor_of(y)
    }

    fn render(&self, e: &Word) -> String {
        self.alphabet.render(e)
    }

    fn parse(&self, s: &str) -> Result<Word> {
        self.alphabet.parse_word(s)
    }

    fn render_embedding(&self, e: &Word, offset: usize, width: usize) -> String {
        let mut cells: Vec<&str> = vec!["_"; width];
        for (i, &c) in e.letters().iter().enumerate() {
            cells[offset + i] = &self.alphabet.symbols()[c as usize];
        }
        if cells.iter().all(|c| c.chars().count() == 1) {
            cells.concat()
        } else {
            cells.join(",")
        }
    }

    fn size_limit(&self) -> Option<usize> {
        self.limit
    }
}

/// A closed interval `[bottom, top]` with `bottom ≤ top`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval<E> {
    bottom: E,
    top: E,
}

impl<E: Clone> Interval<E> {
    /// Checks comparability and the size guardrail.
    pub fn new<P>(poset: &P, bottom: E, top: E) -> Result<Self>
    where
        P: ChainPoset<Elem = E>,
    {
        if let Some(limit) = poset.size_limit() {
            let len = poset.rank(&top);
            if len > limit {
                return Err(Error::Guardrail { len, limit });
            }
        }
        if !poset.leq(&bottom, &top) {
            return Err(Error::NotComparable {
                bottom: poset.render(&bottom),
                top: poset.render(&top),
            });
        }
        Ok(Interval { bottom, top })
    }

    pub fn bottom(&self) -> &E {
        &self.bottom
    }

    pub fn top(&self) -> &E {
        &self.top
    }
}

/// Difference of the ranks of top and bottom.
pub fn rank_gap<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> usize {
    poset.rank(iv.top()) - poset.rank(iv.bottom())
}

/// Every element below `top`, including `top`, sorted by rank then value.
pub fn down_set<P: ChainPoset>(poset: &P, top: &P::Elem) -> Vec<P::Elem> {
    let mut seen: HashSet<P::Elem> = HashSet::from([top.clone()]);
    let mut frontier = vec![top.clone()];
    while let Some(e) = frontier.pop() {
        for (child, _) in poset.down_covers(&e) {
            if seen.insert(child.clone()) {
                frontier.push(child);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| poset.rank(a).cmp(&poset.rank(b)).then_with(|| a.cmp(b)));
    out
}

/// All `z` with `bottom ≤ z ≤ top`, sorted by rank then value.
pub fn interval_elements<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Vec<P::Elem> {
    down_set(poset, iv.top())
        .into_iter()
        .filter(|z| poset.leq(iv.bottom(), z))
        .collect()
}

/// The Möbius function by the defining recursion
/// `μ(x,y) = −Σ_{x ≤ z < y} μ(x,z)` over the interval's elements.
pub fn mobius_bruteforce<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> i64 {
    let elems = interval_elements(poset, iv);
    let mut mu: Vec<i64> = Vec::with_capacity(elems.len());
    for (k, z) in elems.iter().enumerate() {
        let value = if k == 0 {
            debug_assert_eq!(z, iv.bottom());
            1
        } else {
            -(0..k)
                .filter(|&j| poset.rank(&elems[j]) < poset.rank(z) && poset.leq(&elems[j], z))
                .map(|j| mu[j])
                .sum::<i64>()
        };
        mu.push(value);
    }
    *mu.last().expect("an interval contains its top")
}

/// Reduced Euler characteristic of the order complex of the open interval:
/// `Σ_k (−1)^k f_k − 1`, with `f_k` the number of chains of `k+1` elements.
///
/// A cover relation (rank gap 1) has an empty open interval and yields −1.
pub fn euler_characteristic<P: ChainPoset>(poset: &P, iv: &Interval<P::Elem>) -> Result<i64> {
    let gap = rank_gap(poset, iv);
    if gap == 0 {
        return Err(Error::TooShort {
            what: "euler_characteristic rank gap",
            min: 1,
            len: gap,
        });
    }
    let open: Vec<P::Elem> = interval_elements(poset, iv)
        .into_iter()
        .filter(|z| z != iv.bottom() && z != iv.top())
        .collect();
    // chains[z][k]: chains of k+1 elements whose largest element is z
    let mut chains: Vec<Vec<i64>> = Vec::with_capacity(open.len());
    let mut f: Vec<i64> = Vec::new();
    for (idx, z) in open.iter().enumerate() {
        let mut counts = vec![1i64];
        for (j, w) in open[..idx].iter().enumerate() {
            if w != z && poset.leq(w, z) {
                for (k, c) in chains[j].iter().enumerate() {
                    if counts.len() <= k + 1 {
                        counts.resize(k + 2, 0);
                    }
                    counts[k + 1] += c;
                }
            }
        }
        for (k, c) in counts.iter().enumerate() {
            if f.len() <= k {
                f.resize(k + 1, 0);
            }
            f[k] += c;
        }
        chains.push(counts);
    }
    let alternating: i64 = f
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { *c } else { -*c })
        .sum();
    Ok(alternating - 1)
}

/// Every interval `[σ, τ]` with `τ` ranging over `tops`.
pub fn intervals_below<P: ChainPoset>(poset: &P, tops: &[P::Elem]) -> Vec<Interval<P::Elem>> {
    tops.iter()
        .flat_map(|top| {
            down_set(poset, top).into_iter().map(move |bottom| Interval {
                bottom,
                top: top.clone(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn piv(b: &str, t: &str) -> Interval<Permutation> {
        Interval::new(&PatternOrder::new(), p(b), p(t)).unwrap()
    }

    #[test]
    fn interval_element_examples() {
        let po = PatternOrder::new();
        let elems = interval_elements(&po, &piv("123", "21354"));
        assert_eq!(elems, vec![p("123"), p("1243"), p("2134"), p("21354")]);
        assert_eq!(interval_elements(&po, &piv("213", "213")), vec![p("213")]);
        let elems = interval_elements(&po, &piv("1", "213"));
        assert_eq!(elems, vec![p("1"), p("12"), p("21"), p("213")]);
    }

    #[test]
    fn interval_rejects_incomparable_and_large() {
        let po = PatternOrder::new();
        assert!(matches!(
            Interval::new(&po, p("12"), p("21")),
            Err(Error::NotComparable { .. })
        ));
        let big = p("10,1,2,3,4,5,6,7,8,9");
        assert_eq!(
            Interval::new(&po, p("1"), big.clone()),
            Err(Error::Guardrail { len: 10, limit: 9 })
        );
        assert!(Interval::new(&PatternOrder::unlimited(), p("1"), big).is_ok());
    }

    #[test]
    fn interval_elements_match_pairwise_leq() {
        let po = PatternOrder::new();
        let universe: Vec<_> = (1..=5).flat_map(all_permutations).collect();
        for top in all_permutations(5).iter().step_by(7) {
            for bottom in down_set(&po, top) {
                let iv = Interval::new(&po, bottom.clone(), top.clone()).unwrap();
                let expected: HashSet<_> = universe
                    .iter()
                    .filter(|z| bottom.leq(z) && z.leq(top))
                    .cloned()
                    .collect();
                let got: HashSet<_> = interval_elements(&po, &iv).into_iter().collect();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn mobius_examples() {
        let po = PatternOrder::new();
        assert_eq!(mobius_bruteforce(&po, &piv("1", "213546")), 1);
        assert_eq!(mobius_bruteforce(&po, &piv("213", "213")), 1);
        assert_eq!(mobius_bruteforce(&po, &piv("1", "12")), -1);
        let fo = FactorOrder::new(Alphabet::ab());
        let a = fo.parse("a").unwrap();
        let aba = fo.parse("aba").unwrap();
        assert_eq!(mobius_bruteforce(&fo, &Interval::new(&fo, a, aba).unwrap()), 1);
    }

    #[test]
    fn euler_examples() {
        let po = PatternOrder::new();
        assert_eq!(euler_characteristic(&po, &piv("1", "213546")), Ok(1));
        assert_eq!(euler_characteristic(&po, &piv("123", "21354")), Ok(1));
        assert_eq!(euler_characteristic(&po, &piv("12", "1234")), Ok(0));
        assert_eq!(euler_characteristic(&po, &piv("12", "123")), Ok(-1));
        assert_eq!(euler_characteristic(&po, &piv("1", "12")), Ok(-1));
        assert!(euler_characteristic(&po, &piv("12", "12")).is_err());
    }

    #[test]
    fn euler_equals_mobius_both_posets() {
        let po = PatternOrder::new();
        let tops: Vec<_> = (1..=5).flat_map(all_permutations).collect();
        for iv in intervals_below(&po, &tops) {
            if rank_gap(&po, &iv) >= 1 {
                assert_eq!(euler_characteristic(&po, &iv).unwrap(), mobius_bruteforce(&po, &iv));
            }
        }
        let fo = FactorOrder::new(Alphabet::ab());
        let tops = fo.alphabet().words_up_to(6);
        for iv in intervals_below(&fo, &tops) {
            if rank_gap(&fo, &iv) >= 1 {
                assert_eq!(euler_characteristic(&fo, &iv).unwrap(), mobius_bruteforce(&fo, &iv));
            }
        }
    }

    #[test]
    fn factor_embedding_render() {
        let fo = FactorOrder::new(Alphabet::ab());
        assert_eq!(fo.render_embedding(&fo.parse("ab").unwrap(), 1, 4), "_ab_");
        let po = PatternOrder::new();
        assert_eq!(po.render_embedding(&p("12435"), 1, 6), "012435");
    }
}
