#![no_main]

use libfuzzer_sys::fuzz_target;
use poset_morse::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(perm) = text.parse::<Permutation>() else {
        return;
    };
    let again: Permutation = perm.to_string().parse().expect("display output parses");
    assert_eq!(again, perm);
    if perm.len() <= 64 {
        for (child, _) in perm.down_covers().unwrap_or_default() {
            assert!(child.leq(&perm));
        }
    }
});
