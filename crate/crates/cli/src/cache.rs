//! JSON-lines result cache for image-order computations. Keys carry the
//! canonical graph text, representation kind, level, cap and the toolkit
//! version, so a hit is guaranteed to be bit-identical to recomputation.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CacheEntry {
    pub graph: String,
    pub kind: String,
    pub level: u64,
    pub cap: u64,
    pub order: u64,
    pub abelian: bool,
    pub version: String,
}

pub struct Cache {
    path: PathBuf,
    enabled: bool,
}

impl Cache {
    pub fn new(path: PathBuf, enabled: bool) -> Cache {
        Cache { path, enabled }
    }

    /// Default path: flag, then `ARTCONG_CACHE`, then a repo-local file.
    pub fn resolve_path(flag: Option<PathBuf>) -> PathBuf {
        flag.or_else(|| std::env::var_os("ARTCONG_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("./.artcong-cache.jsonl"))
    }

    pub fn path(&self) -> &PathBuf {
        &self.path
    }

    pub fn get(&self, graph: &str, kind: &str, level: u64, cap: u64) -> Option<CacheEntry> {
        if !self.enabled {
            return None;
        }
        let file = File::open(&self.path).ok()?;
        for line in BufReader::new(file).lines() {
            let line = match line {
                Ok(l) => l,
                Err(_) => return None,
            };
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheEntry>(&line) {
                Ok(entry) => {
                    if entry.graph == graph
                        && entry.kind == kind
                        && entry.level == level
                        && entry.cap == cap
                        && entry.version == VERSION
                    {
                        return Some(entry);
                    }
                }
                Err(_) => {
                    // corrupt line: warn once and keep scanning
                    eprintln!("warning: skipping corrupt cache line in {}", self.path.display());
                }
            }
        }
        None
    }

    pub fn put(&self, entry: &CacheEntry) {
        if !self.enabled {
            return;
        }
        if let Ok(mut f) = OpenOptions::new().create(true).append(true).open(&self.path) {
            if let Ok(line) = serde_json::to_string(entry) {
                let _ = writeln!(f, "{}", line);
            }
        }
    }

    pub fn clear(&self) -> std::io::Result<()> {
        File::create(&self.path).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn put_get_roundtrip_and_version_key() {
        let dir = std::env::temp_dir().join(format!("artcong-cache-test-{}", std::process::id()));
        let _ = std::fs::create_dir_all(&dir);
        let path = dir.join("cache.jsonl");
        let cache = Cache::new(path.clone(), true);
        cache.clear().unwrap();
        let entry = CacheEntry {
            graph: "coxeter n=2; m 1 2 = 3;".into(),
            kind: "artin".into(),
            level: 2,
            cap: 1000,
            order: 6,
            abelian: false,
            version: VERSION.into(),
        };
        cache.put(&entry);
        assert_eq!(cache.get(&entry.graph, "artin", 2, 1000), Some(entry.clone()));
        // different version misses
        let stale = CacheEntry {
            version: "0.0.0-old".into(),
            level: 3,
            ..entry.clone()
        };
        cache.put(&stale);
        assert_eq!(cache.get(&entry.graph, "artin", 3, 1000), None);
        cache.clear().unwrap();
        assert_eq!(cache.get(&entry.graph, "artin", 2, 1000), None);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
