//! Persistent zero cache: one JSON file mapping `"family:order:k"` to the
//! zero, with a format-version field. The cache is an optimisation only -
//! a corrupt or mismatched file is ignored and rebuilt, never trusted.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use torsion_core::specfun::ZeroFamily;
use torsion_core::spectrum::ZeroStore;

const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    zeros: BTreeMap<String, f64>,
}

pub struct FileZeroStore {
    path: PathBuf,
    zeros: BTreeMap<String, f64>,
    dirty: bool,
}

fn key(family: &ZeroFamily, k: u32) -> String {
    // `{}` prints f64 shortest-roundtrip, so keys reproduce exactly
    format!("{}:{}:{}", family.kind.label(), family.order, k)
}

impl FileZeroStore {
    /// Load the cache at `path`; unreadable or corrupt files start empty.
    pub fn open(path: &Path) -> Self {
        let zeros = std::fs::read_to_string(path)
            .ok()
            .and_then(|s| serde_json::from_str::<CacheFile>(&s).ok())
            .filter(|c| c.version == FORMAT_VERSION)
            .map(|c| c.zeros)
            .unwrap_or_default();
        Self {
            path: path.to_path_buf(),
            zeros,
            dirty: false,
        }
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Write back if anything was added. Errors are reported, not fatal.
    pub fn save(&mut self) -> anyhow::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let file = CacheFile {
            version: FORMAT_VERSION,
            zeros: std::mem::take(&mut self.zeros),
        };
        let text = serde_json::to_string(&file)?;
        std::fs::write(&self.path, text)?;
        self.zeros = file.zeros;
        self.dirty = false;
        Ok(())
    }
}

impl ZeroStore for FileZeroStore {
    fn get(&mut self, family: &ZeroFamily, k: u32) -> Option<f64> {
        self.zeros.get(&key(family, k)).copied()
    }
    fn put(&mut self, family: &ZeroFamily, k: u32, value: f64) {
        self.zeros.insert(key(family, k), value);
        self.dirty = true;
    }
}
