#![no_main]

use libfuzzer_sys::fuzz_target;
use poset_morse::bijection::{perm_to_word, word_to_perm};
use poset_morse::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(perm) = text.parse::<Permutation>() else {
        return;
    };
    if let Ok(word) = perm_to_word(&perm) {
        assert_eq!(word_to_perm(&word).unwrap().as_permutation(), &perm);
    }
});
