//! On-disk images of the root system and the structure constants, with a
//! sha256 manifest. Nothing else reads these files; they exist so that a
//! changed build can be detected against a stored one.

use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::gradedlie::GradedLie;
use crate::report::sha256_hex;
use crate::rootsys;

pub const MANIFEST: &str = "digests.json";
pub const ROOTSYS_FILE: &str = "rootsys.json";
pub const STRUCTURE_FILE: &str = "structure.txt";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub file: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Manifest {
    format: String,
    version: u32,
    entries: Vec<Entry>,
}

/// Freshly computed images, in manifest order.
pub fn images() -> Vec<(&'static str, String)> {
    let lie = GradedLie::build();
    vec![
        (ROOTSYS_FILE, rootsys::cache_text(&lie.rs, &lie.ell)),
        (STRUCTURE_FILE, lie.structure_dump()),
    ]
}

pub fn rebuild(dir: &Path) -> io::Result<Vec<Entry>> {
    std::fs::create_dir_all(dir)?;
    let mut entries = Vec::new();
    for (name, text) in images() {
        std::fs::write(dir.join(name), &text)?;
        entries.push(Entry { file: name.into(), sha256: sha256_hex(text.as_bytes()) });
    }
    let m = Manifest { format: "e8g3-cache".into(), version: 1, entries: entries.clone() };
    let mut s = serde_json::to_string_pretty(&m).expect("manifest serializes");
    s.push('\n');
    std::fs::write(dir.join(MANIFEST), s)?;
    Ok(entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub file: String,
    pub expected: String,
    /// Digest of the file on disk, None when missing.
    pub on_disk: Option<String>,
    /// Digest recorded in the manifest, None when missing.
    pub recorded: Option<String>,
}

impl CheckLine {
    pub fn ok(&self) -> bool {
        self.on_disk.as_ref() == Some(&self.expected) && self.recorded.as_ref() == Some(&self.expected)
    }
}

/// Recompute every image and compare with the files and the manifest.
pub fn check(dir: &Path) -> Vec<CheckLine> {
    let recorded: Vec<Entry> = std::fs::read_to_string(dir.join(MANIFEST))
        .ok()
        .and_then(|s| serde_json::from_str::<Manifest>(&s).ok())
        .map(|m| m.entries)
        .unwrap_or_default();
    images()
        .into_iter()
        .map(|(name, text)| CheckLine {
            file: name.into(),
            expected: sha256_hex(text.as_bytes()),
            on_disk: std::fs::read(dir.join(name)).ok().map(|b| sha256_hex(&b)),
            recorded: recorded.iter().find(|e| e.file == name).map(|e| e.sha256.clone()),
        })
        .collect()
}
