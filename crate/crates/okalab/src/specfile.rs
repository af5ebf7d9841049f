//! Ring, module, and embedding-pair persistence: a strict JSON schema with
//! canonical output and content hashing.
//!
//! Files are JSON objects whose "schema" field selects the object kind.
//! Unknown fields are rejected, serialization is canonical (sorted keys,
//! fixed layout), and loading a saved object reproduces it bit-exactly.
//! The content hash covers the mathematical structure only (field, unit,
//! structure constants), not names, so renamed copies of a ring share
//! caches.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::Path;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Mat;
use crate::module::FiniteModule;
use crate::ring::Ring;
use crate::subring::SubringPair;

pub const RING_SCHEMA: &str = "okalab-ring/1";
pub const MODULE_SCHEMA: &str = "okalab-module/1";
pub const PAIR_SCHEMA: &str = "okalab-pair/1";

pub enum SpecObject {
    Ring(Ring),
    Module(FiniteModule),
    Pair(SubringPair),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingBody {
    name: String,
    p: u64,
    e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<Vec<u64>>,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis_names: Option<Vec<String>>,
    unit: Vec<u16>,
    structure: Vec<Vec<Vec<u16>>>,
}

impl RingBody {
    fn of(ring: &Ring) -> RingBody {
        let dim = ring.dim();
        let structure = (0..dim)
            .map(|i| (0..dim).map(|j| ring.structure_const(i, j).to_vec()).collect())
            .collect();
        RingBody {
            name: ring.name().to_string(),
            p: ring.field().p(),
            e: ring.field().e(),
            modulus: Some(ring.field().modulus().to_vec()),
            dim,
            basis_names: ring.basis_names().map(|n| n.to_vec()),
            unit: ring.unit_coeffs().to_vec(),
            structure,
        }
    }

    fn build(self) -> Result<Ring> {
        let field = FiniteField::new(self.p, self.e, self.modulus.as_deref())?;
        if self.structure.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: self.structure.len(),
            });
        }
        let ring = Ring::new(field, self.structure, self.unit, self.name)?;
        match self.basis_names {
            Some(names) => Ok(ring.with_basis_names(names)),
            None => Ok(ring),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleBody {
    name: String,
    ring: RingBody,
    dim: usize,
    /// One square action matrix per ring basis element, row-major.
    actions: Vec<Vec<Vec<u16>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairBody {
    small: RingBody,
    big: RingBody,
    /// Rows are the images of the small ring's basis in the big ring.
    embed: Vec<Vec<u16>>,
}

fn mat_rows(m: &Mat) -> Vec<Vec<u16>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn rows_to_mat(rows: &[Vec<u16>], cols: usize) -> Mat {
    Mat::from_rows(rows, cols)
}

fn body_value(obj: &SpecObject) -> Value {
    match obj {
        SpecObject::Ring(r) => serde_json::to_value(RingBody::of(r)),
        SpecObject::Module(m) => serde_json::to_value(ModuleBody {
            name: m.name().to_string(),
            ring: RingBody::of(m.ring()),
            dim: m.dim(),
            actions: m.actions().iter().map(mat_rows).collect(),
        }),
        SpecObject::Pair(p) => serde_json::to_value(PairBody {
            small: RingBody::of(p.small()),
            big: RingBody::of(p.big()),
            embed: mat_rows(p.embed_matrix()),
        }),
    }
    .expect("spec bodies serialize")
}

fn schema_of(obj: &SpecObject) -> &'static str {
    match obj {
        SpecObject::Ring(_) => RING_SCHEMA,
        SpecObject::Module(_) => MODULE_SCHEMA,
        SpecObject::Pair(_) => PAIR_SCHEMA,
    }
}

/// Canonical text rendering: pretty JSON with sorted keys and a trailing
/// newline. Saving, loading, and saving again is byte-identical.
pub fn render_spec(obj: &SpecObject) -> String {
    let mut v = body_value(obj);
    v.as_object_mut()
        .expect("spec bodies are objects")
        .insert("schema".into(), Value::String(schema_of(obj).into()));
    let mut out = serde_json::to_string_pretty(&v).expect("values render");
    out.push('\n');
    out
}

pub fn save_spec(obj: &SpecObject, path: &Path) -> Result<()> {
    std::fs::write(path, render_spec(obj))
        .map_err(|e| Error::SpecFile(format!("{}: {e}", path.display())))
}

fn at(path: &Path, err: impl std::fmt::Display) -> Error {
    Error::SpecFile(format!("{}: {err}", path.display()))
}

pub fn load_spec(path: &Path) -> Result<SpecObject> {
    let text =
        std::fs::read_to_string(path).map_err(|e| at(path, e))?;
    let mut v: Value = serde_json::from_str(&text).map_err(|e| at(path, e))?;
    let obj = v
        .as_object_mut()
        .ok_or_else(|| at(path, "top level must be a JSON object"))?;
    let schema = match obj.remove("schema") {
        Some(Value::String(s)) => s,
        Some(_) => return Err(at(path, "field \"schema\" must be a string")),
        None => return Err(at(path, "missing field \"schema\"")),
    };
    match schema.as_str() {
        RING_SCHEMA => {
            let body: RingBody = serde_json::from_value(v).map_err(|e| at(path, e))?;
            Ok(SpecObject::Ring(body.build().map_err(|e| at(path, e))?))
        }
        MODULE_SCHEMA => {
            let body: ModuleBody = serde_json::from_value(v).map_err(|e| at(path, e))?;
            let ring = body.ring.build().map_err(|e| at(path, e))?;
            let actions: Vec<Mat> =
                body.actions.iter().map(|a| rows_to_mat(a, body.dim)).collect();
            let m = FiniteModule::new(&ring, actions, body.name).map_err(|e| at(path, e))?;
            Ok(SpecObject::Module(m))
        }
        PAIR_SCHEMA => {
            let body: PairBody = serde_json::from_value(v).map_err(|e| at(path, e))?;
            let small = body.small.build().map_err(|e| at(path, e))?;
            let big = body.big.build().map_err(|e| at(path, e))?;
            let embed = rows_to_mat(&body.embed, big.dim());
            let pair = SubringPair::new(&small, &big, embed).map_err(|e| at(path, e))?;
            Ok(SpecObject::Pair(pair))
        }
        other => Err(at(path, format!("unknown schema {other:?}"))),
    }
}

pub fn load_ring(path: &Path) -> Result<Ring> {
    match load_spec(path)? {
        SpecObject::Ring(r) => Ok(r),
        _ => Err(at(path, format!("expected schema {RING_SCHEMA:?}"))),
    }
}

/// Structure-only content, the hashing payload: names are excluded so that
/// renamed copies of the same ring hash identically.
#[derive(Serialize)]
struct HashBody {
    p: u64,
    e: usize,
    modulus: Vec<u64>,
    dim: usize,
    unit: Vec<u16>,
    structure: Vec<Vec<Vec<u16>>>,
}

/// Hex SHA-256 of the ring's canonical structure serialization.
pub fn ring_hash(ring: &Ring) -> String {
    let dim = ring.dim();
    let body = HashBody {
        p: ring.field().p(),
        e: ring.field().e(),
        modulus: ring.field().modulus().to_vec(),
        dim,
        unit: ring.unit_coeffs().to_vec(),
        structure: (0..dim)
            .map(|i| (0..dim).map(|j| ring.structure_const(i, j).to_vec()).collect())
            .collect(),
    };
    let bytes = serde_json::to_vec(&body).expect("hash body serializes");
    hex::encode(Sha256::digest(&bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use tempfile::tempdir;

    #[test]
    fn ring_round_trip_is_bit_exact() {
        let dir = tempdir().unwrap();
        for name in ["tri3_gf2", "mat2_gf3", "trunc_gf4_2", "s3_gf2"] {
            let ring = catalog::find(name).expect("catalog ring").ring;
            let path = dir.path().join(format!("{name}.json"));
            save_spec(&SpecObject::Ring(ring.clone()), &path).unwrap();
            let text1 = std::fs::read_to_string(&path).unwrap();
            let loaded = load_ring(&path).unwrap();
            assert_eq!(ring_hash(&loaded), ring_hash(&ring), "{name}");
            assert_eq!(loaded.name(), ring.name());
            assert_eq!(loaded.basis_names(), ring.basis_names());
            let path2 = dir.path().join(format!("{name}-2.json"));
            save_spec(&SpecObject::Ring(loaded), &path2).unwrap();
            let text2 = std::fs::read_to_string(&path2).unwrap();
            assert_eq!(text1, text2, "round trip must be byte-identical for {name}");
        }
    }

    #[test]
    fn corrupted_structure_is_rejected_with_location() {
        let dir = tempdir().unwrap();
        let ring = catalog::find("ut2_gf2").unwrap().ring;
        let path = dir.path().join("bad.json");
        save_spec(&SpecObject::Ring(ring), &path).unwrap();
        // Corrupt one structure entry so multiplication stops being
        // associative.
        let text = std::fs::read_to_string(&path).unwrap();
        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["structure"][0][0] = serde_json::json!([0, 1, 0]);
        std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
        let msg = match load_ring(&path) {
            Err(e) => e.to_string(),
            Ok(_) => panic!("corrupted structure must be rejected"),
        };
        assert!(msg.contains("bad.json"), "missing file location: {msg}");
        assert!(msg.contains("associativity"), "missing cause: {msg}");
    }

    #[test]
    fn unknown_fields_and_schemas_are_rejected() {
        let dir = tempdir().unwrap();
        let ring = catalog::find("gf4").unwrap().ring;
        let path = dir.path().join("extra.json");
        save_spec(&SpecObject::Ring(ring), &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["surprise"] = serde_json::json!(1);
        std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
        let msg = match load_ring(&path) {
            Err(e) => e.to_string(),
            Ok(_) => panic!("unknown field must be rejected"),
        };
        assert!(msg.contains("surprise"), "unknown field not named: {msg}");

        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["schema"] = serde_json::json!("okalab-ring/99");
        std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
        let msg = match load_ring(&path) {
            Err(e) => e.to_string(),
            Ok(_) => panic!("unknown schema must be rejected"),
        };
        assert!(msg.contains("unknown schema"), "{msg}");
    }

    #[test]
    fn module_and_pair_round_trips() {
        let dir = tempdir().unwrap();
        let ring = catalog::find("ut2_gf2").unwrap().ring;
        let m = FiniteModule::regular(&ring);
        let path = dir.path().join("reg.json");
        save_spec(&SpecObject::Module(m.clone()), &path).unwrap();
        match load_spec(&path).unwrap() {
            SpecObject::Module(l) => {
                assert_eq!(l.dim(), m.dim());
                assert_eq!(l.actions(), m.actions());
                assert_eq!(ring_hash(l.ring()), ring_hash(&ring));
            }
            _ => panic!("expected a module"),
        }

        let small = catalog::upper_triangular(2, 2).unwrap();
        let big = catalog::matrix_ring(2, 2).unwrap();
        let embed = Mat::from_rows(
            &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]],
            4,
        );
        let pair = SubringPair::new(&small, &big, embed).unwrap();
        let path = dir.path().join("pair.json");
        save_spec(&SpecObject::Pair(pair), &path).unwrap();
        match load_spec(&path).unwrap() {
            SpecObject::Pair(l) => {
                assert_eq!(ring_hash(l.small()), ring_hash(&small));
                assert_eq!(ring_hash(l.big()), ring_hash(&big));
                assert_eq!(l.embed_matrix().rows(), 3);
            }
            _ => panic!("expected a pair"),
        }
    }

    #[test]
    fn hash_ignores_names_but_not_structure() {
        let a = catalog::find("ut2_gf2").unwrap().ring;
        let b = a.clone().renamed("completely different");
        assert_eq!(ring_hash(&a), ring_hash(&b));
        let c = catalog::find("mat2_gf2").unwrap().ring;
        assert_ne!(ring_hash(&a), ring_hash(&c));
    }
}
