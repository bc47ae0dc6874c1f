//! Content-addressed on-disk cache of result documents.
//!
//! Each entry is `<sha256 of body>\n<body>` stored under the hex key. Entries
//! whose checksum does not match are discarded with a warning.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

/// Environment variable naming the default workspace directory.
pub const WORKSPACE_ENV: &str = "MODREP_WORKSPACE";

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Hashes a list of key components with unambiguous separators.
pub fn cache_key(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit(Vec<u8>),
    Miss,
    /// An entry existed but failed verification and was removed.
    Corrupt(String),
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Explicit directory, else `$MODREP_WORKSPACE`, else `$HOME/.cache/modrep`.
    pub fn locate(explicit: Option<&Path>) -> Option<Self> {
        if let Some(d) = explicit {
            return Some(Cache::new(d));
        }
        if let Some(d) = std::env::var_os(WORKSPACE_ENV).filter(|d| !d.is_empty()) {
            return Some(Cache::new(d));
        }
        std::env::var_os("HOME").map(|h| Cache::new(Path::new(&h).join(".cache").join("modrep")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, key: &str) -> Lookup {
        let path = self.path(key);
        let Ok(raw) = fs::read(&path) else {
            return Lookup::Miss;
        };
        match split_entry(&raw) {
            Some(body) => Lookup::Hit(body.to_vec()),
            None => {
                let _ = fs::remove_file(&path);
                Lookup::Corrupt(format!("discarded corrupt cache entry {}", path.display()))
            }
        }
    }

    /// Writes through a temporary file and an atomic rename.
    pub fn store(&self, key: &str, body: &[u8]) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(sha256_hex(body).as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.write_all(body)?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

fn split_entry(raw: &[u8]) -> Option<&[u8]> {
    let nl = raw.iter().position(|&b| b == b'\n')?;
    let (head, body) = (&raw[..nl], &raw[nl + 1..]);
    (head == sha256_hex(body).as_bytes()).then_some(body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn store_load_and_poison() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        let k = cache_key(&["a", "b"]);
        assert_ne!(k, cache_key(&["ab", ""]));
        assert_eq!(c.load(&k), Lookup::Miss);
        c.store(&k, b"{\"x\": 1}\n").unwrap();
        assert_eq!(c.load(&k), Lookup::Hit(b"{\"x\": 1}\n".to_vec()));
        let p = c.path(&k);
        let raw = fs::read(&p).unwrap();
        fs::write(&p, &raw[..raw.len() - 3]).unwrap();
        assert!(matches!(c.load(&k), Lookup::Corrupt(_)));
        assert_eq!(c.load(&k), Lookup::Miss);
    }
}
