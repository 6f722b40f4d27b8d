//! Content-addressed result cache: one JSON file per job, keyed by the
//! SHA-256 of the version tag and the canonical job description.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const VERSION_TAG: &str = concat!("wmk-", env!("CARGO_PKG_VERSION"), "-c1");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub key: String,
    pub output: String,
    pub exit_code: i32,
}

pub struct Cache {
    dir: PathBuf,
    tag: String,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf(), tag: VERSION_TAG.to_string() })
    }

    #[cfg(test)]
    fn with_tag(dir: &Path, tag: &str) -> std::io::Result<Self> {
        let mut c = Self::open(dir)?;
        c.tag = tag.to_string();
        Ok(c)
    }

    pub fn key(&self, job: &Value) -> String {
        let mut h = Sha256::new();
        h.update(self.tag.as_bytes());
        h.update(b"\n");
        h.update(job.to_string().as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored entry for this job under the current tag, if any.  Entries
    /// written under another tag or for another job are ignored.
    pub fn get(&self, job: &Value) -> Option<CacheEntry> {
        let key = self.key(job);
        let raw = fs::read_to_string(self.path(&key)).ok()?;
        let v: Value = serde_json::from_str(&raw).ok()?;
        if v["version"] != self.tag.as_str() || v["key"] != key.as_str() || v["job"] != *job {
            return None;
        }
        Some(CacheEntry {
            key,
            output: v["output"].as_str()?.to_string(),
            exit_code: v["exit_code"].as_i64()? as i32,
        })
    }

    pub fn put(&self, job: &Value, output: &str, exit_code: i32) -> std::io::Result<CacheEntry> {
        let key = self.key(job);
        let created = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let v = json!({
            "version": self.tag,
            "key": key,
            "job": job,
            "output": output,
            "exit_code": exit_code,
            "created_at": created,
        });
        let tmp = self.dir.join(format!("{key}.tmp"));
        fs::write(&tmp, serde_json::to_string_pretty(&v).expect("JSON values serialize"))?;
        fs::rename(&tmp, self.path(&key))?;
        Ok(CacheEntry { key, output: output.to_string(), exit_code })
    }
}
