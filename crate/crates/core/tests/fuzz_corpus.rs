//! Replays the checked-in fuzz seeds through the same entry points as the
//! fuzz targets, so the seeds stay meaningful on stable toolchains.

use std::fs;
use std::path::PathBuf;

use poset_morse::bijection::{perm_to_word, word_to_perm};
use poset_morse::cache::CacheRecord;
use poset_morse::perm::Expansion;
use poset_morse::{Alphabet, Permutation};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn text(data: &[u8]) -> Option<&str> {
    std::str::from_utf8(data).ok()
}

#[test]
fn parse_permutation_seeds() {
    let mut accepted = 0;
    for (name, data) in seeds("parse_permutation") {
        let Some(Ok(perm)) = text(&data).map(str::parse::<Permutation>) else {
            continue;
        };
        accepted += 1;
        let again: Permutation = perm.to_string().parse().unwrap();
        assert_eq!(again, perm, "{name}");
        for (child, _) in perm.down_covers().unwrap_or_default() {
            assert!(child.leq(&perm), "{name}");
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn parse_word_seeds() {
    let mut accepted = 0;
    for (name, data) in seeds("parse_word") {
        let Some(t) = text(&data) else { continue };
        let (decl, word) = t.split_once('\n').unwrap_or((t, ""));
        let Ok(alphabet) = decl.parse::<Alphabet>() else { continue };
        let Ok(w) = alphabet.parse_word(word) else { continue };
        accepted += 1;
        assert_eq!(alphabet.parse_word(&alphabet.render(&w)).unwrap(), w, "{name}");
        if !w.is_empty() {
            let outer = w.outer_word().unwrap();
            assert!(outer.len() < w.len() && outer.is_factor_of(&w), "{name}");
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn cache_record_seeds() {
    let mut accepted = 0;
    for (name, data) in seeds("cache_record") {
        let Some(t) = text(&data) else { continue };
        for line in t.lines() {
            if let Ok(rec) = CacheRecord::parse(line) {
                accepted += 1;
                let again = CacheRecord::parse(rec.to_line().trim_end_matches('\n')).unwrap();
                assert_eq!(again, rec, "{name}");
            }
        }
    }
    assert_eq!(accepted, 2);
}

#[test]
fn bijection_unmap_seeds() {
    let mut accepted = 0;
    for (name, data) in seeds("bijection_unmap") {
        let Some(Ok(perm)) = text(&data).map(str::parse::<Permutation>) else {
            continue;
        };
        if let Ok(word) = perm_to_word(&perm) {
            accepted += 1;
            assert_eq!(word_to_perm(&word).unwrap().as_permutation(), &perm, "{name}");
        }
    }
    assert_eq!(accepted, 4);
}

#[test]
fn expansion_seeds() {
    let mut accepted = 0;
    for (name, data) in seeds("expansion") {
        let entries: Vec<u32> = data.iter().map(|&b| u32::from(b % 16)).collect();
        if let Ok(e) = Expansion::new(entries.clone()) {
            accepted += 1;
            assert_eq!(e.entries(), entries.as_slice(), "{name}");
            assert!(e.offset() + e.pattern().len() <= entries.len(), "{name}");
        }
    }
    assert!(accepted >= 2);
}
