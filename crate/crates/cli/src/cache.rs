//! On-disk wall-set cache.
//!
//! One JSON file maps `(rank, c1, c2, e)` keys to a wall list and the SHA-256
//! of that list's canonical JSON. Entries whose digest does not match are
//! recomputed and overwritten; an unreadable file is treated as empty.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use wallkit::{DivClass, Wall};

pub const ENV_VAR: &str = "WALLKIT_CACHE";

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    entries: BTreeMap<String, Entry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    digest: String,
    walls: Vec<Wall>,
}

/// What happened on a lookup; reported on stderr so stdout stays byte-stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Hit,
    Miss,
    Corrupt,
}

pub fn key(rank: u32, c1: DivClass, c2: i64, e: u32) -> String {
    format!("({rank},{},{},{c2},{e})", c1.a, c1.b)
}

pub fn digest(walls: &[Wall]) -> String {
    let bytes = serde_json::to_vec(walls).expect("walls serialize");
    hex::encode(Sha256::digest(&bytes))
}

/// Resolve the cache location: the environment variable wins over the flag.
pub fn resolve(flag: Option<PathBuf>) -> Option<PathBuf> {
    match std::env::var_os(ENV_VAR) {
        Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
        _ => flag,
    }
}

pub struct WallCache {
    path: PathBuf,
    file: CacheFile,
}

impl WallCache {
    pub fn open(path: &Path) -> Self {
        let file = fs::read(path)
            .ok()
            .and_then(|b| serde_json::from_slice(&b).ok())
            .unwrap_or_default();
        WallCache {
            path: path.to_path_buf(),
            file,
        }
    }

    /// Cached walls for `key`, or compute, store and persist them.
    pub fn get_or_compute(
        &mut self,
        key: &str,
        compute: impl FnOnce() -> Vec<Wall>,
    ) -> Result<(Vec<Wall>, Outcome)> {
        let outcome = match self.file.entries.get(key) {
            Some(entry) if digest(&entry.walls) == entry.digest => {
                return Ok((entry.walls.clone(), Outcome::Hit))
            }
            Some(_) => Outcome::Corrupt,
            None => Outcome::Miss,
        };
        let walls = compute();
        self.file.entries.insert(
            key.to_string(),
            Entry {
                digest: digest(&walls),
                walls: walls.clone(),
            },
        );
        self.save()?;
        Ok((walls, outcome))
    }

    fn save(&self) -> Result<()> {
        let dir = match self.path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
            _ => PathBuf::from("."),
        };
        fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        let name = self
            .path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
        let mut f = fs::File::create(&tmp).with_context(|| format!("writing {}", tmp.display()))?;
        f.write_all(&serde_json::to_vec_pretty(&self.file)?)?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &self.path)
            .with_context(|| format!("replacing {}", self.path.display()))?;
        Ok(())
    }
}
