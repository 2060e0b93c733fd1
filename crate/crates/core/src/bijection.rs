//! The order isomorphism between `{a,b}*` under factor order and the
//! permutations avoiding 213 and 231 (as classical patterns) under
//! consecutive pattern order.
//!
//! Reading a word left to right, `a` takes the smallest unused value and `b`
//! the largest; the last position gets the one value left over.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::word::{Alphabet, Word};

/// A permutation with no classical occurrence of 213 or 231.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AvoiderPermutation(Permutation);

impl AvoiderPermutation {
    pub fn new(perm: Permutation) -> Result<Self> {
        match first_non_extremal(&perm) {
            None => Ok(AvoiderPermutation(perm)),
            Some(position) => Err(Error::NotAvoider { position }),
        }
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }
}

/// First 1-based position `i < n` whose value is neither the smallest nor
/// the largest of the values not yet used.
fn first_non_extremal(perm: &Permutation) -> Option<usize> {
    let n = perm.len();
    let (mut low, mut high) = (1u32, n as u32);
    for (i, &v) in perm.letters().iter().enumerate().take(n.saturating_sub(1)) {
        if v == low {
            low += 1;
        } else if v == high {
            high -= 1;
        } else {
            return Some(i + 1);
        }
    }
    None
}

/// True when `perm` avoids 213 and 231 classically.
pub fn avoids_213_231(perm: &Permutation) -> bool {
    first_non_extremal(perm).is_none()
}

/// The forward map `f`. Letter `0` is `a`, letter `1` is `b`.
pub fn word_to_perm(word: &Word) -> Result<AvoiderPermutation> {
    let n = word.len() + 1;
    let (mut low, mut high) = (1u32, n as u32);
    let mut letters = Vec::with_capacity(n);
    for &c in word.letters() {
        match c {
            0 => {
                letters.push(low);
                low += 1;
            }
            1 => {
                letters.push(high);
                high -= 1;
            }
            other => return Err(Error::ForeignLetter(format!("letter index {other}"))),
        }
    }
    debug_assert_eq!(low, high);
    letters.push(low);
    Ok(AvoiderPermutation(Permutation::new(letters)?))
}

/// The inverse map `f⁻¹`.
pub fn perm_to_word(perm: &Permutation) -> Result<Word> {
    let avoider = AvoiderPermutation::new(perm.clone())?;
    let n = avoider.0.len();
    let mut low = 1u32;
    let word = avoider.0.letters()[..n - 1]
        .iter()
        .map(|&v| {
            if v == low {
                low += 1;
                0
            } else {
                1
            }
        })
        .collect();
    Ok(Word::new(word))
}

/// A word over `{a,b}` and its image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionPair {
    pub word: String,
    pub permutation: String,
}

impl BijectionPair {
    pub fn from_word(word: &Word) -> Result<Self> {
        Ok(BijectionPair {
            word: Alphabet::ab().render(word),
            permutation: word_to_perm(word)?.as_permutation().to_string(),
        })
    }

    pub fn from_permutation(perm: &Permutation) -> Result<Self> {
        Ok(BijectionPair {
            word: Alphabet::ab().render(&perm_to_word(perm)?),
            permutation: perm.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub u: String,
    pub w: String,
    pub factor: bool,
    pub pattern: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismReport {
    /// Largest permutation length checked.
    pub max_len: usize,
    pub words: usize,
    pub pairs_checked: usize,
    /// `(m, number of avoiders in S_m)` for `1 ≤ m ≤ max_len`.
    pub avoider_counts: Vec<(usize, usize)>,
    /// The image of the words of length `m − 1` is exactly the avoiders in
    /// `S_m`, for every `m` checked.
    pub image_is_avoider_set: bool,
    pub round_trip_ok: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.image_is_avoider_set
            && self.round_trip_ok
            && self.counterexamples.is_empty()
            && self
                .avoider_counts
                .iter()
                .all(|&(m, count)| count == 1 << (m - 1))
    }
}

/// Exhaustively checks that `f` is an order isomorphism onto the avoiders for
/// all words of length at most `max_len − 1`.
pub fn verify_isomorphism(max_len: usize) -> Result<IsomorphismReport> {
    if !(2..=8).contains(&max_len) {
        return Err(Error::OutOfRange {
            len: max_len,
            max: 8,
        });
    }
    let ab = Alphabet::ab();
    let words = ab.words_up_to(max_len - 1);
    let images: Vec<Permutation> = words
        .iter()
        .map(|w| word_to_perm(w).map(AvoiderPermutation::into_permutation))
        .collect::<Result<_>>()?;

    let round_trip_ok = words
        .iter()
        .zip(&images)
        .all(|(w, p)| perm_to_word(p).as_ref() == Ok(w));

    let counterexamples: Vec<Counterexample> = (0..words.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (words, images, ab) = (&words, &images, &ab);
            (0..words.len()).filter_map(move |j| {
                let factor = words[i].is_factor_of(&words[j]);
                let pattern = images[i].leq(&images[j]);
                (factor != pattern).then(|| Counterexample {
                    u: ab.render(&words[i]),
                    w: ab.render(&words[j]),
                    factor,
                    pattern,
                })
            })
        })
        .collect();

    let mut avoider_counts = Vec::new();
    let mut image_is_avoider_set = true;
    for m in 1..=max_len {
        let avoiders: HashSet<Permutation> = all_permutations(m)
            .into_par_iter()
            .filter(avoids_213_231)
            .collect();
        let image: HashSet<Permutation> = images.iter().filter(|p| p.len() == m).cloned().collect();
        image_is_avoider_set &= image == avoiders;
        avoider_counts.push((m, avoiders.len()));
    }

    Ok(IsomorphismReport {
        max_len,
        words: words.len(),
        pairs_checked: words.len() * words.len(),
        avoider_counts,
        image_is_avoider_set,
        round_trip_ok,
        counterexamples,
    })
}

/// Number of avoiders in `S_m`, by enumeration.
pub fn count_avoiders(m: usize) -> usize {
    all_permutations(m).iter().filter(|p| avoids_213_231(p)).count()
}
