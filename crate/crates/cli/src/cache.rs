//! On-disk cache of Specht modules keyed by format version and partition.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use catbf_core::partition::syt_count;
use catbf_core::symrep::{specht_module, RepModule, SerialModule};
use catbf_core::Partition;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Bumped whenever the serialized module layout or the Specht construction changes.
pub const CACHE_FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    format: u32,
    partition: Partition,
    module: SerialModule,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub memory_hits: usize,
    pub disk_hits: usize,
    pub computed: usize,
    pub written: usize,
}

/// Memoizes `S_λ` in memory and, when a directory is set, on disk.
#[derive(Debug, Default)]
pub struct SpechtCache {
    dir: Option<PathBuf>,
    memo: Mutex<HashMap<Partition, Arc<RepModule>>>,
    stats: Mutex<CacheStats>,
}

impl SpechtCache {
    pub fn new(dir: Option<PathBuf>) -> SpechtCache {
        SpechtCache { dir, ..Default::default() }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn stats(&self) -> CacheStats {
        *self.stats.lock().unwrap()
    }

    pub fn entry_path(dir: &Path, lambda: &Partition) -> PathBuf {
        let key = if lambda.is_empty() {
            "0".to_string()
        } else {
            lambda.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join("_")
        };
        dir.join(format!("specht-v{CACHE_FORMAT}-{key}.json"))
    }

    pub fn get(&self, lambda: &Partition) -> Result<Arc<RepModule>, CliError> {
        if let Some(m) = self.memo.lock().unwrap().get(lambda) {
            self.stats.lock().unwrap().memory_hits += 1;
            return Ok(m.clone());
        }
        let m = match self.dir.as_deref().and_then(|d| load(d, lambda)) {
            Some(m) => {
                self.stats.lock().unwrap().disk_hits += 1;
                m
            }
            None => {
                let m = specht_module(lambda)?;
                self.stats.lock().unwrap().computed += 1;
                if let Some(d) = &self.dir {
                    store(d, lambda, &m)?;
                    self.stats.lock().unwrap().written += 1;
                }
                m
            }
        };
        let m = Arc::new(m);
        self.memo.lock().unwrap().insert(lambda.clone(), m.clone());
        Ok(m)
    }
}

/// A stale, corrupt or mismatched entry counts as a miss.
fn load(dir: &Path, lambda: &Partition) -> Option<RepModule> {
    let text = std::fs::read_to_string(SpechtCache::entry_path(dir, lambda)).ok()?;
    let e: CacheEntry = serde_json::from_str(&text).ok()?;
    if e.format != CACHE_FORMAT || &e.partition != lambda || e.module.dim as u128 != syt_count(lambda) {
        return None;
    }
    let m = RepModule::from_serial(&e.module).ok()?;
    (m.degree() == lambda.size() as i64 && m.check_relations()).then_some(m)
}

/// Writes through a temporary file so concurrent readers never see a partial entry.
fn store(dir: &Path, lambda: &Partition, m: &RepModule) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    let path = SpechtCache::entry_path(dir, lambda);
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    let e = CacheEntry { format: CACHE_FORMAT, partition: lambda.clone(), module: m.to_serial() };
    std::fs::write(&tmp, serde_json::to_string(&e)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(())
}
