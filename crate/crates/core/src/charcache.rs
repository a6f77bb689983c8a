//! Character-table cache: an in-process memo plus an optional directory
//! layer with content-addressed files. The cache is a pure memo — results
//! must be identical with it disabled — so the disk layer may be switched
//! on and off freely (`PRIMORBIT_CACHE_DIR` or the CLI `--cache-dir`).

use crate::chars::CharacterTable;
use crate::rootsys::SimpleType;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharKey {
    pub simple_type: SimpleType,
    pub highest: Vec<i64>,
}

impl CharKey {
    /// Content address: hex SHA-256 of the (type, highest weight) pair.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.simple_type.to_string().as_bytes());
        h.update(b":");
        for c in &self.highest {
            h.update(c.to_le_bytes());
        }
        let digest = h.finalize();
        digest.iter().map(|b| format!("{:02x}", b)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CharTableFile {
    simple_type: SimpleType,
    highest: Vec<i64>,
    entries: Vec<(Vec<i64>, u64)>,
}

struct Cache {
    mem: RwLock<HashMap<CharKey, Arc<CharacterTable>>>,
    dir: RwLock<Option<PathBuf>>,
}

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Cache {
        mem: RwLock::new(HashMap::new()),
        dir: RwLock::new(std::env::var_os("PRIMORBIT_CACHE_DIR").map(PathBuf::from)),
    })
}

/// Points the disk layer at a directory (or disables it with `None`).
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache().dir.write().unwrap() = dir;
}

/// Drops all memoized tables (used by determinism tests).
pub fn clear_memory() {
    cache().mem.write().unwrap().clear();
}

fn disk_path(key: &CharKey) -> Option<PathBuf> {
    cache()
        .dir
        .read()
        .unwrap()
        .as_ref()
        .map(|d| d.join(format!("char-{}.json", key.content_hash())))
}

fn load_disk(key: &CharKey) -> Option<CharacterTable> {
    let path = disk_path(key)?;
    let data = std::fs::read(path).ok()?;
    let file: CharTableFile = serde_json::from_slice(&data).ok()?;
    if file.simple_type != key.simple_type || file.highest != key.highest {
        return None;
    }
    Some(CharacterTable {
        highest: file.highest,
        dominant_mults: file.entries.into_iter().collect::<BTreeMap<_, _>>(),
    })
}

fn store_disk(key: &CharKey, table: &CharacterTable) {
    let Some(path) = disk_path(key) else { return };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    let file = CharTableFile {
        simple_type: key.simple_type,
        highest: table.highest.clone(),
        entries: table
            .dominant_mults
            .iter()
            .map(|(k, &v)| (k.clone(), v))
            .collect(),
    };
    if let Ok(data) = serde_json::to_vec(&file) {
        let _ = std::fs::write(path, data);
    }
}

pub fn get_or_compute<F: FnOnce() -> CharacterTable>(key: &CharKey, f: F) -> Arc<CharacterTable> {
    if let Some(hit) = cache().mem.read().unwrap().get(key) {
        return hit.clone();
    }
    let table = Arc::new(match load_disk(key) {
        Some(t) => t,
        None => {
            let t = f();
            store_disk(key, &t);
            t
        }
    });
    cache()
        .mem
        .write()
        .unwrap()
        .entry(key.clone())
        .or_insert_with(|| table.clone())
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::freudenthal;
    use crate::rootsys::{DominantWeight, RootSystem, SimpleType};

    #[test]
    fn disk_roundtrip_identical() {
        let rs = RootSystem::new(SimpleType::parse("C2").unwrap());
        let l = DominantWeight::new(vec![2, 1]);
        let fresh = freudenthal(&rs, &l);

        let dir = std::env::temp_dir().join(format!("primorbit-cache-{}", std::process::id()));
        set_cache_dir(Some(dir.clone()));
        clear_memory();
        let via_disk_store = freudenthal(&rs, &l);
        clear_memory();
        let via_disk_load = freudenthal(&rs, &l);
        set_cache_dir(None);
        clear_memory();
        let no_cache = freudenthal(&rs, &l);

        assert_eq!(*fresh, *via_disk_store);
        assert_eq!(*fresh, *via_disk_load);
        assert_eq!(*fresh, *no_cache);
        let _ = std::fs::remove_dir_all(dir);
    }
}
