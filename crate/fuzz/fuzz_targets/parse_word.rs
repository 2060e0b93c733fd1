#![no_main]

use libfuzzer_sys::fuzz_target;
use poset_morse::Alphabet;

// First line declares the alphabet, the rest is the word.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let (decl, word) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(alphabet) = decl.parse::<Alphabet>() else {
        return;
    };
    let Ok(w) = alphabet.parse_word(word) else {
        return;
    };
    assert_eq!(alphabet.parse_word(&alphabet.render(&w)).unwrap(), w);
    if !w.is_empty() {
        let outer = w.outer_word().unwrap();
        assert!(outer.len() < w.len());
        assert!(outer.is_factor_of(&w));
    }
});
