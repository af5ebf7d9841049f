//! Binary lattice cache keyed by ring content hash.
//!
//! A cache file stores the canonical bases of a ring's complete right-ideal
//! lattice. Integrity is protected by a trailing SHA-256 checksum over the
//! entire payload; any mismatch (truncation, corruption, version or hash
//! disagreement) makes the loader report a miss so the caller recomputes.
//! Writes go through a temporary file and an atomic rename, so concurrent
//! writers of the same key cannot leave a torn file behind.

use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::ideal::LatticeIndex;
use crate::lab::Budget;
use crate::linalg::Mat;
use crate::ring::Ring;
use crate::specfile::ring_hash;

const MAGIC: &[u8; 4] = b"OKLT";
const VERSION: u32 = 1;

/// Environment variable that supplies a cache directory when no explicit
/// one is given.
pub const CACHE_DIR_ENV: &str = "OKALAB_CACHE_DIR";

/// Resolve the effective cache directory: an explicit path wins, then the
/// environment variable, otherwise caching is off.
pub fn resolve_cache_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = explicit {
        return Some(p.to_path_buf());
    }
    std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from)
}

fn cache_path(dir: &Path, ring: &Ring) -> PathBuf {
    dir.join(format!("{}.lat", ring_hash(ring)))
}

fn push_u16(buf: &mut Vec<u8>, v: u16) {
    buf.extend_from_slice(&v.to_le_bytes());
}

fn push_u32(buf: &mut Vec<u8>, v: u32) {
    buf.extend_from_slice(&v.to_le_bytes());
}

fn encode(ring: &Ring, bases: &[Mat]) -> Vec<u8> {
    let mut buf = Vec::new();
    buf.extend_from_slice(MAGIC);
    push_u32(&mut buf, VERSION);
    buf.extend_from_slice(&hex::decode(ring_hash(ring)).expect("hash is hex"));
    push_u16(&mut buf, ring.dim() as u16);
    push_u32(&mut buf, bases.len() as u32);
    for m in bases {
        push_u16(&mut buf, m.rows() as u16);
        for r in 0..m.rows() {
            for &x in m.row(r) {
                push_u16(&mut buf, x);
            }
        }
    }
    let digest = Sha256::digest(&buf);
    buf.extend_from_slice(&digest);
    buf
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        let end = self.pos.checked_add(n)?;
        if end > self.buf.len() {
            return None;
        }
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Some(s)
    }

    fn u16(&mut self) -> Option<u16> {
        self.take(2).map(|s| u16::from_le_bytes([s[0], s[1]]))
    }

    fn u32(&mut self) -> Option<u32> {
        self.take(4).map(|s| u32::from_le_bytes([s[0], s[1], s[2], s[3]]))
    }
}

fn decode(ring: &Ring, buf: &[u8]) -> Option<Vec<Mat>> {
    if buf.len() < 32 {
        return None;
    }
    let (payload, checksum) = buf.split_at(buf.len() - 32);
    if Sha256::digest(payload).as_slice() != checksum {
        return None;
    }
    let mut r = Reader { buf: payload, pos: 0 };
    if r.take(4)? != MAGIC || r.u32()? != VERSION {
        return None;
    }
    if r.take(32)? != hex::decode(ring_hash(ring)).expect("hash is hex").as_slice() {
        return None;
    }
    let dim = r.u16()? as usize;
    if dim != ring.dim() {
        return None;
    }
    let count = r.u32()? as usize;
    let mut bases = Vec::with_capacity(count);
    for _ in 0..count {
        let rows = r.u16()? as usize;
        let mut m = Mat::zeros(rows, dim);
        for row in 0..rows {
            for col in 0..dim {
                m.set(row, col, r.u16()?);
            }
        }
        bases.push(m);
    }
    if r.pos != payload.len() {
        return None;
    }
    Some(bases)
}

/// Try to read this ring's lattice bases from the directory. Any integrity
/// problem is a miss, never an error.
pub fn load_bases(dir: &Path, ring: &Ring) -> Option<Vec<Mat>> {
    let bytes = std::fs::read(cache_path(dir, ring)).ok()?;
    decode(ring, &bytes)
}

pub fn save_bases(dir: &Path, ring: &Ring, bases: &[Mat]) -> Result<()> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Error::CacheFile(format!("{}: {e}", dir.display())))?;
    let path = cache_path(dir, ring);
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, encode(ring, bases))
        .map_err(|e| Error::CacheFile(format!("{}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, &path)
        .map_err(|e| Error::CacheFile(format!("{}: {e}", path.display())))?;
    Ok(())
}

/// Build the lattice through the cache: restore on a hit, otherwise compute
/// and populate. With no directory this is a plain build.
pub fn lattice_for(ring: &Ring, budget: &Budget, dir: Option<&Path>) -> Result<LatticeIndex> {
    let Some(dir) = dir else {
        return LatticeIndex::build(ring, budget.lattice_cap);
    };
    if let Some(bases) = load_bases(dir, ring) {
        if let Ok(lat) = LatticeIndex::from_bases(ring, bases) {
            return Ok(lat);
        }
    }
    let lat = LatticeIndex::build(ring, budget.lattice_cap)?;
    let bases: Vec<Mat> = lat.ideals().iter().map(|i| i.basis().clone()).collect();
    save_bases(dir, ring, &bases)?;
    Ok(lat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use tempfile::tempdir;

    fn bases_of(lat: &LatticeIndex) -> Vec<Mat> {
        lat.ideals().iter().map(|i| i.basis().clone()).collect()
    }

    #[test]
    fn round_trip_restores_identical_lattice() {
        let dir = tempdir().unwrap();
        let budget = Budget::default();
        for name in ["ut2_gf2", "mat2_gf3", "tri3_gf2"] {
            let ring = catalog::find(name).unwrap().ring;
            let fresh = lattice_for(&ring, &budget, Some(dir.path())).unwrap();
            assert!(cache_path(dir.path(), &ring).exists());
            let cached = lattice_for(&ring, &budget, Some(dir.path())).unwrap();
            assert_eq!(bases_of(&fresh), bases_of(&cached), "{name}");
            assert_eq!(fresh.maximals(), cached.maximals(), "{name}");
            assert_eq!(
                fresh.two_sided_indices(),
                cached.two_sided_indices(),
                "{name}"
            );
        }
    }

    #[test]
    fn cache_files_are_bit_identical_across_writes() {
        let d1 = tempdir().unwrap();
        let d2 = tempdir().unwrap();
        let ring = catalog::find("c3_gf4").unwrap().ring;
        let budget = Budget::default();
        lattice_for(&ring, &budget, Some(d1.path())).unwrap();
        lattice_for(&ring, &budget, Some(d2.path())).unwrap();
        let f1 = std::fs::read(cache_path(d1.path(), &ring)).unwrap();
        let f2 = std::fs::read(cache_path(d2.path(), &ring)).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn corruption_is_detected_and_recomputed() {
        let dir = tempdir().unwrap();
        let ring = catalog::find("ut2_gf2").unwrap().ring;
        let budget = Budget::default();
        lattice_for(&ring, &budget, Some(dir.path())).unwrap();
        let path = cache_path(dir.path(), &ring);
        let mut bytes = std::fs::read(&path).unwrap();
        let mid = bytes.len() / 2;
        bytes[mid] ^= 0xff;
        std::fs::write(&path, &bytes).unwrap();
        assert!(load_bases(dir.path(), &ring).is_none());
        // The high-level entry recovers by recomputing and rewriting.
        let lat = lattice_for(&ring, &budget, Some(dir.path())).unwrap();
        assert_eq!(lat.len(), 7);
        assert!(load_bases(dir.path(), &ring).is_some());
    }

    #[test]
    fn truncation_and_foreign_rings_miss() {
        let dir = tempdir().unwrap();
        let ring = catalog::find("ut2_gf2").unwrap().ring;
        let budget = Budget::default();
        lattice_for(&ring, &budget, Some(dir.path())).unwrap();
        let path = cache_path(dir.path(), &ring);
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() - 40]).unwrap();
        assert!(load_bases(dir.path(), &ring).is_none());
        // A different ring never sees this key.
        let other = catalog::find("mat2_gf2").unwrap().ring;
        assert!(load_bases(dir.path(), &other).is_none());
    }
}
