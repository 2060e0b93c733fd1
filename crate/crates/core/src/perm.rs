//! Permutations under consecutive pattern containment.
//!
//! A permutation of length `n` is stored in one-line notation over the values
//! `1..=n`. Everything here is a pure function of immutable values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation(Vec<u32>);

/// Which end of a permutation an affix is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Prefix,
    Suffix,
}

/// A copy of a pattern padded with zeros: `0..0 σ 0..0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expansion {
    entries: Vec<u32>,
}

impl Permutation {
    /// Validates that `letters` is exactly `1..=n` in some order.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Empty);
        }
        let n = letters.len();
        let mut seen = vec![false; n];
        for &v in &letters {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::Parse(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[idx - 1], true) {
                return Err(Error::Duplicate(v.to_string()));
            }
        }
        Ok(Permutation(letters))
    }

    /// The identity permutation `12…n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_monotone(&self) -> bool {
        let w = &self.0;
        w.windows(2).all(|p| p[0] < p[1]) || w.windows(2).all(|p| p[0] > p[1])
    }

    /// Standard form of the first or last `k` letters.
    pub fn affix(&self, k: usize, side: Side) -> Result<Permutation> {
        let n = self.len();
        if k == 0 || k > n {
            return Err(Error::OutOfRange { len: k, max: n });
        }
        let window = match side {
            Side::Prefix => &self.0[..k],
            Side::Suffix => &self.0[n - k..],
        };
        Ok(standardize_unchecked(window))
    }

    /// Standard form of `τ(2)…τ(n−1)`.
    pub fn interior(&self) -> Result<Permutation> {
        let n = self.len();
        if n <= 2 {
            return Err(Error::TooShort {
                what: "interior",
                min: 3,
                len: n,
            });
        }
        Ok(standardize_unchecked(&self.0[1..n - 1]))
    }

    /// Longest permutation that is both a proper prefix and a suffix.
    pub fn exterior(&self) -> Result<Permutation> {
        let n = self.len();
        if n < 2 {
            return Err(Error::TooShort {
                what: "exterior",
                min: 2,
                len: n,
            });
        }
        for k in (1..n).rev() {
            let prefix = standardize_unchecked(&self.0[..k]);
            if prefix == standardize_unchecked(&self.0[n - k..]) {
                return Ok(prefix);
            }
        }
        unreachable!("every permutation has 1 as a common prefix and suffix")
    }

    /// The elements this permutation covers, with the position (1-based, in
    /// this permutation's coordinates) that is zeroed out to reach each.
    ///
    /// Monotone permutations cover a single element through the suffix
    /// embedding. Otherwise the prefix child comes first.
    pub fn down_covers(&self) -> Result<Vec<(Permutation, usize)>> {
        let n = self.len();
        if n < 2 {
            return Err(Error::TooShort {
                what: "down_covers",
                min: 2,
                len: n,
            });
        }
        let suffix = (standardize_unchecked(&self.0[1..]), 1);
        if self.is_monotone() {
            return Ok(vec![suffix]);
        }
        Ok(vec![(standardize_unchecked(&self.0[..n - 1]), n), suffix])
    }

    /// All embeddings of `self` into `other`, ordered by block position.
    pub fn occurrences_in(&self, other: &Permutation) -> Vec<Expansion> {
        let k = self.len();
        if k > other.len() {
            return Vec::new();
        }
        other
            .0
            .windows(k)
            .enumerate()
            .filter(|(_, w)| pattern_matches(&self.0, w))
            .map(|(start, _)| Expansion::place(&self.0, start, other.len()))
            .collect()
    }

    /// Consecutive pattern containment `self ≤ other`.
    pub fn leq(&self, other: &Permutation) -> bool {
        let k = self.len();
        k <= other.len() && other.0.windows(k).any(|w| pattern_matches(&self.0, w))
    }
}

/// True when `window` is order-isomorphic to `pattern`.
fn pattern_matches(pattern: &[u32], window: &[u32]) -> bool {
    debug_assert_eq!(pattern.len(), window.len());
    (0..pattern.len()).all(|i| {
        (i + 1..pattern.len()).all(|j| (pattern[i] < pattern[j]) == (window[i] < window[j]))
    })
}

/// The permutation order-isomorphic to `s`.
pub fn standardize<T: Ord + fmt::Display>(s: &[T]) -> Result<Permutation> {
    if s.is_empty() {
        return Err(Error::Empty);
    }
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| s[a].cmp(&s[b]));
    if let Some(p) = order.windows(2).find(|p| s[p[0]] == s[p[1]]) {
        return Err(Error::Duplicate(s[p[0]].to_string()));
    }
    let mut letters = vec![0u32; s.len()];
    for (rank, &idx) in order.iter().enumerate() {
        letters[idx] = rank as u32 + 1;
    }
    Ok(Permutation(letters))
}

fn standardize_unchecked(s: &[u32]) -> Permutation {
    standardize(s).expect("slices of a permutation are distinct and nonempty")
}

impl Expansion {
    /// Validates the zero-padding shape and that the block standardizes
    /// to itself.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let first = entries.iter().position(|&e| e != 0);
        let last = entries.iter().rposition(|&e| e != 0);
        let (Some(first), Some(last)) = (first, last) else {
            return Err(Error::Empty);
        };
        if entries[first..=last].contains(&0) {
            return Err(Error::Parse("nonzero block is not contiguous".into()));
        }
        Permutation::new(entries[first..=last].to_vec())?;
        Ok(Expansion { entries })
    }

    fn place(pattern: &[u32], start: usize, width: usize) -> Self {
        let mut entries = vec![0; width];
        entries[start..start + pattern.len()].copy_from_slice(pattern);
        Expansion { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Zero-based start of the nonzero block.
    pub fn offset(&self) -> usize {
        self.entries.iter().position(|&e| e != 0).unwrap_or(0)
    }

    /// The nonzero block as a permutation.
    pub fn pattern(&self) -> Permutation {
        Permutation(self.entries.iter().copied().filter(|&e| e != 0).collect())
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.entries)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    if letters.len() <= 9 {
        for v in letters {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        for (i, v) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Digit strings (`21354`) for `n <= 9`, comma-separated integers otherwise.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d),
                    _ => Err(Error::Parse(format!("unexpected character {c:?}"))),
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(letters)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(Permutation(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[5, 3, 4]).unwrap(), p("312"));
        assert_eq!(standardize(&[5, 3, 4, 1]).unwrap(), p("4231"));
        assert_eq!(standardize(&[7]).unwrap(), p("1"));
        assert_eq!(standardize(&[1, 3, 5, 4]).unwrap(), p("1243"));
    }

    #[test]
    fn standardize_errors() {
        assert_eq!(standardize::<i32>(&[]), Err(Error::Empty));
        assert!(matches!(standardize(&[3, 1, 3]), Err(Error::Duplicate(_))));
    }

    #[test]
    fn parse_rejects_non_permutations() {
        assert!("1223".parse::<Permutation>().is_err());
        assert!("013".parse::<Permutation>().is_err());
        assert!("24".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("1,2,x".parse::<Permutation>().is_err());
        let long: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!("2,1".parse::<Permutation>().unwrap().to_string(), "21");
    }

    #[test]
    fn occurrences_examples() {
        let occ = p("213").occurrences_in(&p("213546"));
        let shown: Vec<_> = occ.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["213000", "000213"]);
        let shown: Vec<_> = p("1").occurrences_in(&p("21")).iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["10", "01"]);
        assert!(p("12").occurrences_in(&p("21")).is_empty());
    }

    #[test]
    fn leq_examples() {
        assert!(!p("213").leq(&p("1243")));
        assert!(p("213546").leq(&p("213546")));
        assert!(p("21").leq(&p("21354")));
    }

    #[test]
    fn down_covers_examples() {
        assert_eq!(
            p("213546").down_covers().unwrap(),
            vec![(p("21354"), 6), (p("12435"), 1)]
        );
        assert_eq!(p("123").down_covers().unwrap(), vec![(p("12"), 1)]);
        assert_eq!(p("231").down_covers().unwrap(), vec![(p("12"), 3), (p("21"), 1)]);
        assert!(p("1").down_covers().is_err());
    }

    #[test]
    fn affix_examples() {
        assert_eq!(p("53412").affix(4, Side::Prefix).unwrap(), p("4231"));
        assert_eq!(p("53412").affix(3, Side::Prefix).unwrap(), p("312"));
        assert_eq!(p("213546").affix(3, Side::Suffix).unwrap(), p("213"));
        assert_eq!(p("213546").affix(6, Side::Prefix).unwrap(), p("213546"));
        assert!(p("213").affix(0, Side::Prefix).is_err());
        assert!(p("213").affix(4, Side::Suffix).is_err());
    }

    #[test]
    fn interior_and_exterior_examples() {
        assert_eq!(p("21354").interior().unwrap(), p("123"));
        assert_eq!(p("213546").interior().unwrap(), p("1243"));
        assert_eq!(p("132").interior().unwrap(), p("1"));
        assert!(p("12").interior().is_err());

        assert_eq!(p("21354").exterior().unwrap(), p("21"));
        assert_eq!(p("213546").exterior().unwrap(), p("213"));
        assert_eq!(p("12").exterior().unwrap(), p("1"));
        assert!(p("1").exterior().is_err());
    }

    #[test]
    fn monotone_examples() {
        assert!(p("123").is_monotone());
        assert!(!p("213").is_monotone());
        assert!(p("1").is_monotone());
        assert!(p("4321").is_monotone());
    }

    #[test]
    fn expansion_validation() {
        assert!(Expansion::new(vec![0, 1, 2, 0]).is_ok());
        assert!(Expansion::new(vec![1, 0, 2]).is_err());
        assert!(Expansion::new(vec![0, 0]).is_err());
        assert!(Expansion::new(vec![0, 2, 3]).is_err());
        let e = Expansion::new(vec![0, 0, 2, 1, 0]).unwrap();
        assert_eq!(e.offset(), 2);
        assert_eq!(e.pattern(), p("21"));
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(3)[0], p("123"));
        assert_eq!(all_permutations(3)[5], p("321"));
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    fn window_count(sigma: &Permutation, tau: &Permutation) -> usize {
        let k = sigma.len();
        if k > tau.len() {
            return 0;
        }
        (0..=tau.len() - k)
            .filter(|&i| standardize(&tau.letters()[i..i + k]).unwrap() == *sigma)
            .count()
    }

    proptest! {
        #[test]
        fn covers_coincide_iff_monotone(tau in arb_perm(8)) {
            prop_assume!(tau.len() >= 2);
            let n = tau.len();
            let a = tau.affix(n - 1, Side::Prefix).unwrap();
            let b = tau.affix(n - 1, Side::Suffix).unwrap();
            prop_assert_eq!(a == b, tau.is_monotone());
            if a == b {
                prop_assert!(a.is_monotone());
            }
            let covers = tau.down_covers().unwrap();
            prop_assert_eq!(covers.len(), if tau.is_monotone() { 1 } else { 2 });
        }

        #[test]
        fn standardize_is_idempotent(tau in arb_perm(9)) {
            prop_assert_eq!(standardize(tau.letters()).unwrap(), tau);
        }

        #[test]
        fn exterior_is_shorter_and_below(tau in arb_perm(9)) {
            prop_assume!(tau.len() >= 2);
            let x = tau.exterior().unwrap();
            prop_assert!(x.len() < tau.len());
            prop_assert!(x.leq(&tau));
        }

        #[test]
        fn occurrences_match_window_scan(sigma in arb_perm(4), tau in arb_perm(8)) {
            prop_assert_eq!(sigma.occurrences_in(&tau).len(), window_count(&sigma, &tau));
            prop_assert_eq!(sigma.leq(&tau), window_count(&sigma, &tau) > 0);
        }

        #[test]
        fn affix_composes(tau in arb_perm(9), a in 1usize..10, b in 1usize..10, suffix in any::<bool>()) {
            let n = tau.len();
            let (a, b) = (1 + a % n, 1 + b % n);
            let side = if suffix { Side::Suffix } else { Side::Prefix };
            let nested = tau.affix(b, side).unwrap().affix(a.min(b), side).unwrap();
            prop_assert_eq!(nested, tau.affix(a.min(b), side).unwrap());
        }
    }
}
