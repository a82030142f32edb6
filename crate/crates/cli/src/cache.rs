//! Content-addressed result cache: one JSON file per key, written by atomic
//! rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use sdepth_core::ideal::{ModuleDescriptor, ModuleKind};
use sdepth_core::replay::ALGORITHM_VERSION;
use sdepth_core::serial::WitnessDoc;
use sdepth_core::Support;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "SDEPTH_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".sdepth-cache";
pub const CACHE_SCHEMA: &str = "sdepth-cache/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Computation {
    Depth,
    Sdepth,
}

/// Everything that determines a result. Generators are kept in the normal
/// order the ideal type maintains, so equal ideals give equal keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheKey {
    pub computation: Computation,
    pub kind: ModuleKind,
    pub ambient: usize,
    pub generators: Vec<Support>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<Vec<Support>>,
    /// Field characteristic for depth; 0 for Stanley depth, which does not
    /// depend on it.
    pub field: u32,
    pub algorithm_version: u32,
}

impl CacheKey {
    pub fn new(computation: Computation, d: &ModuleDescriptor, field: u32) -> Self {
        CacheKey {
            computation,
            kind: d.kind(),
            ambient: d.ambient(),
            generators: d.inner().gens().to_vec(),
            outer: d.outer().map(|o| o.gens().to_vec()),
            field: match computation {
                Computation::Depth => field,
                Computation::Sdepth => 0,
            },
            algorithm_version: ALGORITHM_VERSION,
        }
    }

    /// Hex SHA-256 of the canonical JSON encoding.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("key serializes");
        hex::encode(Sha256::digest(&canonical))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum Payload {
    Depth {
        value: usize,
        /// A `σ` with a nonzero Betti number in the top homological degree.
        pd_sigma: Option<Support>,
    },
    Sdepth {
        lower: usize,
        upper: usize,
        budget_hit: bool,
        budget_ms: u64,
        witness: WitnessDoc,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheEntry {
    pub schema: String,
    pub key: CacheKey,
    pub payload: Payload,
    pub timestamp_unix: u64,
    pub elapsed_ms: u64,
}

impl CacheEntry {
    pub fn new(key: CacheKey, payload: Payload, elapsed_ms: u64) -> Self {
        CacheEntry {
            schema: CACHE_SCHEMA.into(),
            key,
            payload,
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
            elapsed_ms,
        }
    }
}

pub fn parse_entry(text: &str) -> Result<CacheEntry> {
    let entry: CacheEntry = serde_json::from_str(text)?;
    if entry.schema != CACHE_SCHEMA {
        bail!("cache schema {:?} is not supported", entry.schema);
    }
    Ok(entry)
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Cache { dir })
    }

    /// `$SDEPTH_CACHE_DIR`, or `.sdepth-cache` in the working directory.
    pub fn from_env() -> Result<Self> {
        let dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        Cache::open(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    /// The stored entry for `key`. Unreadable files and entries stored
    /// under a different key come back as `Err` so the caller can warn and
    /// recompute.
    pub fn load(&self, key: &CacheKey) -> Result<Option<CacheEntry>> {
        let path = self.path_for(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
        };
        let entry = parse_entry(&text).with_context(|| format!("parsing {}", path.display()))?;
        if entry.key != *key {
            bail!("{} holds a different key", path.display());
        }
        Ok(Some(entry))
    }

    pub fn store(&self, entry: &CacheEntry) -> Result<PathBuf> {
        let path = self.path_for(&entry.key);
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.subsec_nanos());
        let tmp = self.dir.join(format!(
            ".{}.{}.{nanos}.tmp",
            entry.key.digest(),
            std::process::id()
        ));
        let mut f =
            fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(serde_json::to_string_pretty(entry)?.as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &path).with_context(|| format!("renaming into {}", path.display()))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sdepth_core::ideal::SquarefreeIdeal;

    fn module(order: &[&[usize]]) -> ModuleDescriptor {
        ModuleDescriptor::Quotient(SquarefreeIdeal::from_index_lists(4, order).unwrap())
    }

    #[test]
    fn equal_ideals_share_a_key() {
        let a = CacheKey::new(Computation::Depth, &module(&[&[0, 1], &[2, 3]]), 2);
        let b = CacheKey::new(
            Computation::Depth,
            &module(&[&[3, 2], &[1, 0], &[0, 1, 2]]),
            2,
        );
        assert_eq!(a.digest(), b.digest());
        let c = CacheKey::new(Computation::Depth, &module(&[&[0, 1], &[2, 3]]), 3);
        assert_ne!(a.digest(), c.digest());
    }

    #[test]
    fn sdepth_keys_ignore_the_field() {
        let m = module(&[&[0, 1]]);
        assert_eq!(
            CacheKey::new(Computation::Sdepth, &m, 2),
            CacheKey::new(Computation::Sdepth, &m, 3)
        );
    }

    #[test]
    fn version_is_part_of_the_key() {
        let mut k = CacheKey::new(Computation::Depth, &module(&[&[0, 1]]), 2);
        let before = k.digest();
        k.algorithm_version += 1;
        assert_ne!(before, k.digest());
    }
}
