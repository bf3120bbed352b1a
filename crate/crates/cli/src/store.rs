//! On-disk residue tables: `<dir>/<family>/<p>_<e>.json`.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use congruence_lab::sequences::TableStore;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "CONGRUENCE_LAB_CACHE";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    schema_version: u32,
    family: String,
    p: u64,
    e: u32,
    modulus: String,
    values: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct FileStore {
    root: PathBuf,
}

impl FileStore {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Self { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path(&self, family: &str, p: u64, e: u32) -> PathBuf {
        self.root.join(family).join(format!("{p}_{e}.json"))
    }

    fn write(&self, path: &Path, entry: &Entry) -> std::io::Result<()> {
        let dir = path.parent().expect("entry path has a parent");
        fs::create_dir_all(dir)?;
        let tmp = tempfile::NamedTempFile::new_in(dir)?;
        {
            let mut w = BufWriter::new(tmp.as_file());
            serde_json::to_writer(&mut w, entry)?;
            w.flush()?;
        }
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }
}

impl TableStore for FileStore {
    fn load(&self, family: &str, p: u64, e: u32) -> Option<Vec<u64>> {
        let text = fs::read_to_string(self.path(family, p, e)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.schema_version != SCHEMA_VERSION || entry.family != family || entry.p != p || entry.e != e {
            return None;
        }
        let modulus: u64 = entry.modulus.parse().ok()?;
        let values: Vec<u64> = entry.values.iter().map(|v| v.parse().ok()).collect::<Option<_>>()?;
        values.iter().all(|&v| v < modulus).then_some(values)
    }

    /// Write failures leave the cache cold but never affect results.
    fn save(&self, family: &str, p: u64, e: u32, modulus: u64, values: &[u64]) {
        let entry = Entry {
            schema_version: SCHEMA_VERSION,
            family: family.to_string(),
            p,
            e,
            modulus: modulus.to_string(),
            values: values.iter().map(u64::to_string).collect(),
        };
        let _ = self.write(&self.path(family, p, e), &entry);
    }
}

/// `$CONGRUENCE_LAB_CACHE`, else the user cache directory.
pub fn default_cache_dir() -> Option<PathBuf> {
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    env(CACHE_ENV)
        .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("congruence-lab")))
        .or_else(|| env("HOME").map(|d| d.join(".cache").join("congruence-lab")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let store = FileStore::new(dir.path());
        assert_eq!(store.load("harmonic", 5, 1), None);
        store.save("harmonic", 5, 1, 5, &[0, 1, 4, 1, 0]);
        assert_eq!(store.load("harmonic", 5, 1), Some(vec![0, 1, 4, 1, 0]));
        assert!(dir.path().join("harmonic").join("5_1.json").is_file());
        let leftovers = fs::read_dir(dir.path().join("harmonic")).unwrap().count();
        assert_eq!(leftovers, 1);
    }

    #[test]
    fn rejects_mismatched_or_corrupt_entries() {
        let dir = tempfile::tempdir().unwrap();
        let store = FileStore::new(dir.path());
        store.save("zigzag", 7, 3, 343, &[1, 1, 1, 2]);
        fs::copy(store.path("zigzag", 7, 3), store.path("zigzag", 7, 2)).unwrap();
        assert_eq!(store.load("zigzag", 7, 2), None);
        fs::write(store.path("zigzag", 7, 3), "{not json").unwrap();
        assert_eq!(store.load("zigzag", 7, 3), None);
        let bad = r#"{"schema_version":1,"family":"zigzag","p":5,"e":1,"modulus":"5","values":["7"]}"#;
        fs::write(store.path("zigzag", 5, 1), bad).unwrap();
        assert_eq!(store.load("zigzag", 5, 1), None);
        let old = r#"{"schema_version":0,"family":"zigzag","p":5,"e":1,"modulus":"5","values":["1"]}"#;
        fs::write(store.path("zigzag", 5, 1), old).unwrap();
        assert_eq!(store.load("zigzag", 5, 1), None);
    }
}
