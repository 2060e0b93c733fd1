//! Cross-call cache of Möbius values, optionally persisted to a file with one
//! record per line: `tag TAB bottom TAB top TAB mu`.
//!
//! Readers share a lock; each insertion is appended to the file as a single
//! write under a mutex.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use crate::error::{Error, Result};
use crate::poset::{mobius_bruteforce, ChainPoset, Interval};

/// Environment variable that overrides the cache path.
pub const CACHE_ENV: &str = "POSET_MORSE_CACHE";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheRecord {
    pub tag: String,
    pub bottom: String,
    pub top: String,
    pub mu: i64,
}

impl CacheRecord {
    /// Parses one line (without its newline).
    pub fn parse(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split('\t').collect();
        let [tag, bottom, top, mu] = fields.as_slice() else {
            return Err(Error::Parse(format!(
                "expected 4 tab-separated fields, got {}",
                fields.len()
            )));
        };
        if tag.is_empty() || tag.chars().any(char::is_whitespace) {
            return Err(Error::Parse(format!("bad poset tag {tag:?}")));
        }
        if [bottom, top].iter().any(|s| s.contains(['\n', '\r'])) {
            return Err(Error::Parse("line break inside a field".into()));
        }
        let mu = mu
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("mu {mu:?}: {e}")))?;
        Ok(CacheRecord {
            tag: tag.to_string(),
            bottom: bottom.to_string(),
            top: top.to_string(),
            mu,
        })
    }

    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}\t{}\n", self.tag, self.bottom, self.top, self.mu)
    }
}

type Key = (String, String, String);

#[derive(Debug, Default)]
pub struct MobiusCache {
    path: Option<PathBuf>,
    values: RwLock<HashMap<Key, i64>>,
    writer: Mutex<Option<File>>,
}

impl MobiusCache {
    /// An in-memory cache with no backing file.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path` if it exists and appends new records to it.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut values = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.is_empty() {
                    continue;
                }
                let rec = CacheRecord::parse(&line)
                    .map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
                values.insert((rec.tag, rec.bottom, rec.top), rec.mu);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(MobiusCache {
            path: Some(path),
            values: RwLock::new(values),
            writer: Mutex::new(Some(file)),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, tag: &str, bottom: &str, top: &str) -> Option<i64> {
        let key = (tag.to_string(), bottom.to_string(), top.to_string());
        self.values.read().unwrap().get(&key).copied()
    }

    pub fn insert(&self, record: CacheRecord) -> Result<()> {
        let key = (record.tag.clone(), record.bottom.clone(), record.top.clone());
        {
            let mut values = self.values.write().unwrap();
            if values.get(&key) == Some(&record.mu) {
                return Ok(());
            }
            values.insert(key, record.mu);
        }
        if let Some(file) = self.writer.lock().unwrap().as_mut() {
            file.write_all(record.to_line().as_bytes())?;
        }
        Ok(())
    }

    /// Brute-force `μ`, served from the cache when present.
    pub fn mobius<P: ChainPoset>(&self, poset: &P, iv: &Interval<P::Elem>) -> Result<i64> {
        let bottom = poset.render(iv.bottom());
        let top = poset.render(iv.top());
        if let Some(mu) = self.get(poset.tag(), &bottom, &top) {
            return Ok(mu);
        }
        let mu = mobius_bruteforce(poset, iv);
        self.insert(CacheRecord {
            tag: poset.tag().to_string(),
            bottom,
            top,
            mu,
        })?;
        Ok(mu)
    }
}
