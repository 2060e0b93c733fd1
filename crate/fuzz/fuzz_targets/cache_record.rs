#![no_main]

use libfuzzer_sys::fuzz_target;
use poset_morse::cache::CacheRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for line in text.lines() {
        if let Ok(rec) = CacheRecord::parse(line) {
            let again = CacheRecord::parse(rec.to_line().trim_end_matches('\n')).unwrap();
            assert_eq!(again, rec);
        }
    }
});
