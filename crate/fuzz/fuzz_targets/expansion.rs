#![no_main]

use libfuzzer_sys::fuzz_target;
use poset_morse::perm::Expansion;

fuzz_target!(|data: &[u8]| {
    let entries: Vec<u32> = data.iter().map(|&b| u32::from(b % 16)).collect();
    if let Ok(e) = Expansion::new(entries.clone()) {
        assert_eq!(e.entries(), entries.as_slice());
        let p = e.pattern();
        assert!(e.offset() + p.len() <= entries.len());
    }
});
