//! Built-in ring constructors and the default catalog.
//!
//! Every ring here is a finite unital algebra over GF(q) for q in {2, 3, 4},
//! given by structure constants on an explicit basis. The default catalog
//! lists each constructor at each field size in a fixed order; entries whose
//! element count exceeds a caller's cap are reported as skipped by the
//! analysis layer, never dropped from the listing.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::ideal::{self, LatticeIndex, RightIdeal};
use crate::ring::Ring;

/// Split q into (p, e) with p prime and q = p^e.
pub fn factor_prime_power(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::NotPrime(q));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut e = 0usize;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if rest != 1 {
                return Err(Error::NotPrime(q));
            }
            return Ok((p, e));
        }
        p += 1;
    }
    Ok((q, 1))
}

fn field_of(q: u64) -> Result<Arc<FiniteField>> {
    let (p, e) = factor_prime_power(q)?;
    FiniteField::new(p, e, None)
}

/// GF(q) viewed as a one-dimensional algebra over itself.
pub fn gf_ring(q: u64) -> Result<Ring> {
    let f = field_of(q)?;
    let ring = Ring::new(f, vec![vec![vec![1]]], vec![1], format!("gf{q}"))?;
    Ok(ring.with_basis_names(vec!["1".into()]))
}

/// The full matrix ring Mat(n, GF(q)) on the basis of matrix units e_ij,
/// ordered row-major.
pub fn matrix_ring(n: usize, q: u64) -> Result<Ring> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_unit_ring(&pairs, q, format!("mat{n}_gf{q}"))
}

/// The upper triangular ring UT(n, GF(q)) on the matrix units e_ij with
/// i <= j, ordered row-major.
pub fn upper_triangular(n: usize, q: u64) -> Result<Ring> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    matrix_unit_ring(&pairs, q, format!("ut{n}_gf{q}"))
}

/// The five-dimensional subring of Mat(3, GF(q)) spanned by e11, e12, e13,
/// e22, e33: matrices with an arbitrary first row and a diagonal lower block.
pub fn first_row_triangular(q: u64) -> Result<Ring> {
    let pairs = vec![(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)];
    matrix_unit_ring(&pairs, q, format!("tri3_gf{q}"))
}

/// A ring spanned by matrix units e_ij for (i, j) in `pairs`. The span must
/// be multiplicatively closed and contain the identity pattern.
fn matrix_unit_ring(pairs: &[(usize, usize)], q: u64, name: String) -> Result<Ring> {
    let f = field_of(q)?;
    let d = pairs.len();
    let mut structure = vec![vec![vec![0u16; d]; d]; d];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j != k {
                continue;
            }
            let c = pairs
                .iter()
                .position(|&p| p == (i, l))
                .expect("basis not multiplicatively closed");
            structure[a][b][c] = 1;
        }
    }
    let n = 1 + pairs.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
    let mut unit = vec![0u16; d];
    for i in 0..n {
        let c = pairs
            .iter()
            .position(|&p| p == (i, i))
            .expect("diagonal unit not in basis");
        unit[c] = 1;
    }
    let names = pairs.iter().map(|&(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    Ok(Ring::new(f, structure, unit, name)?.with_basis_names(names))
}

/// The truncated polynomial ring GF(q)[x]/(x^k) on the basis 1, x, ..., x^(k-1).
pub fn trunc_poly(q: u64, k: usize) -> Result<Ring> {
    if k == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let f = field_of(q)?;
    let mut structure = vec![vec![vec![0u16; k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i + j < k {
                structure[i][j][i + j] = 1;
            }
        }
    }
    let mut unit = vec![0u16; k];
    unit[0] = 1;
    let names = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x{i}"),
        })
        .collect();
    Ok(Ring::new(f, structure, unit, format!("trunc_gf{q}_{k}"))?.with_basis_names(names))
}

/// The group algebra GF(q)[G] for a group given by its multiplication table:
/// `table[i][j]` is the index of g_i * g_j, and index 0 must be the identity.
pub fn group_algebra(
    q: u64,
    table: &[Vec<usize>],
    names: Vec<String>,
    ring_name: String,
) -> Result<Ring> {
    let f = field_of(q)?;
    let n = table.len();
    let mut structure = vec![vec![vec![0u16; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            structure[i][j][table[i][j]] = 1;
        }
    }
    let mut unit = vec![0u16; n];
    unit[0] = 1;
    Ok(Ring::new(f, structure, unit, ring_name)?.with_basis_names(names))
}

/// GF(q)[C_n], the group algebra of the cyclic group of order n.
pub fn cyclic_group_algebra(n: usize, q: u64) -> Result<Ring> {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    group_algebra(q, &table, names, format!("c{n}_gf{q}"))
}

/// GF(q)[S_3], the group algebra of the symmetric group on three letters.
/// The product g_i * g_j is "apply g_i, then g_j".
pub fn symmetric3_group_algebra(q: u64) -> Result<Ring> {
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let compose = |a: &[usize; 3], b: &[usize; 3]| {
        let c = [b[a[0]], b[a[1]], b[a[2]]];
        perms.iter().position(|p| *p == c).unwrap()
    };
    let table: Vec<Vec<usize>> =
        perms.iter().map(|a| perms.iter().map(|b| compose(a, b)).collect()).collect();
    let names = ["e", "s12", "s13", "s23", "r123", "r132"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    group_algebra(q, &table, names, format!("s3_gf{q}"))
}

/// The direct product A x B of two algebras over the same field, on the
/// concatenated basis.
pub fn product_ring(a: &Ring, b: &Ring) -> Result<Ring> {
    if !a.field().same_field(b.field()) {
        return Err(Error::FieldMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let mut structure = vec![vec![vec![0u16; d]; d]; d];
    for i in 0..da {
        for j in 0..da {
            let c = a.structure_const(i, j);
            for k in 0..da {
                structure[i][j][k] = c[k];
            }
        }
    }
    for i in 0..db {
        for j in 0..db {
            let c = b.structure_const(i, j);
            for k in 0..db {
                structure[da + i][da + j][da + k] = c[k];
            }
        }
    }
    let mut unit = vec![0u16; d];
    unit[..da].copy_from_slice(a.unit_coeffs());
    unit[da..].copy_from_slice(b.unit_coeffs());
    let name = format!("{}_x_{}", a.name(), b.name());
    let names = match (a.basis_names(), b.basis_names()) {
        (Some(na), Some(nb)) => {
            let mut v: Vec<String> = na.iter().map(|s| format!("l_{s}")).collect();
            v.extend(nb.iter().map(|s| format!("r_{s}")));
            Some(v)
        }
        _ => None,
    };
    let ring = Ring::new(a.field().clone(), structure, unit, name)?;
    Ok(match names {
        Some(v) => ring.with_basis_names(v),
        None => ring,
    })
}

/// The quotient of a ring by its Jacobson radical, computed from the full
/// right-ideal lattice. Only sensible for small rings.
pub fn semisimple_quotient(ring: &Ring, cap: u64) -> Result<Ring> {
    let lat = LatticeIndex::build(ring, cap)?;
    let rad = lat.ideal(lat.radical()).clone();
    if rad.is_zero_ideal() {
        return Ok(ring.clone());
    }
    let (q, _, _) = ideal::quotient_ring(ring, &rad)?;
    Ok(q)
}

/// One catalog row: a named ring plus its element count.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: Ring,
    pub elements: u128,
    pub note: String,
}

impl CatalogEntry {
    fn new(ring: Ring, note: &str) -> CatalogEntry {
        CatalogEntry {
            name: ring.name().to_string(),
            elements: ring.element_count(),
            ring,
            note: note.to_string(),
        }
    }

    /// Whether full element-level analysis fits under an element-count cap.
    pub fn within_cap(&self, cap: u64) -> bool {
        self.elements <= cap as u128
    }
}

/// The default catalog, in a fixed deterministic order.
pub fn default_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(gf_ring(q).unwrap(), "field"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(matrix_ring(2, q).unwrap(), "full 2x2 matrix ring"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(matrix_ring(3, q).unwrap(), "full 3x3 matrix ring"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(upper_triangular(2, q).unwrap(), "upper triangular 2x2"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(upper_triangular(3, q).unwrap(), "upper triangular 3x3"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(
            first_row_triangular(q).unwrap(),
            "free first row over diagonal block",
        ));
    }
    for (q, k) in [(2u64, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (4, 3)] {
        out.push(CatalogEntry::new(trunc_poly(q, k).unwrap(), "truncated polynomials"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(cyclic_group_algebra(2, q).unwrap(), "group algebra of C2"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(cyclic_group_algebra(3, q).unwrap(), "group algebra of C3"));
    }
    for q in [2u64, 3, 4] {
        out.push(CatalogEntry::new(symmetric3_group_algebra(q).unwrap(), "group algebra of S3"));
    }
    let gf2 = gf_ring(2).unwrap();
    out.push(CatalogEntry::new(product_ring(&gf2, &gf2).unwrap(), "product of two fields"));
    out.push(CatalogEntry::new(
        product_ring(&upper_triangular(2, 2).unwrap(), &gf2).unwrap(),
        "product with a field factor",
    ));
    out.push(CatalogEntry::new(
        product_ring(&matrix_ring(2, 2).unwrap(), &gf2).unwrap(),
        "product with a field factor",
    ));
    let tri = first_row_triangular(2).unwrap();
    out.push(CatalogEntry::new(
        semisimple_quotient(&tri, 256).unwrap().renamed("tri3_gf2_mod_rad"),
        "radical quotient, a product of three fields",
    ));
    let t4 = trunc_poly(2, 4).unwrap();
    let x2 = RightIdeal::from_generators(&t4, &[vec![0, 0, 1, 0]]);
    let (t4q, _, _) = ideal::quotient_ring(&t4, &x2).unwrap();
    out.push(CatalogEntry::new(
        t4q.renamed("trunc_gf2_4_mod_x2"),
        "truncated polynomials modulo x^2",
    ));
    out
}

/// Look up a catalog entry by name.
pub fn find(name: &str) -> Option<CatalogEntry> {
    default_catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds_and_names_are_unique() {
        let cat = default_catalog();
        assert!(cat.len() >= 35);
        let mut names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cat.len());
    }

    #[test]
    fn element_counts_match_dimension() {
        for e in default_catalog() {
            let q = e.ring.field().q() as u128;
            assert_eq!(e.elements, q.pow(e.ring.dim() as u32), "{}", e.name);
        }
    }

    #[test]
    fn s3_group_algebra_is_a_group_ring() {
        let r = symmetric3_group_algebra(2).unwrap();
        assert_eq!(r.dim(), 6);
        // Each basis element is invertible: g has inverse g^(-1).
        for i in 0..6 {
            let mut v = vec![0u16; 6];
            v[i] = 1;
            assert!(r.is_unit_vec(&v));
        }
        // s12 and r123 do not commute.
        let s12 = {
            let mut v = vec![0u16; 6];
            v[1] = 1;
            v
        };
        let r123 = {
            let mut v = vec![0u16; 6];
            v[4] = 1;
            v
        };
        let mut ab = vec![0u16; 6];
        let mut ba = vec![0u16; 6];
        r.mul_vec(&s12, &r123, &mut ab);
        r.mul_vec(&r123, &s12, &mut ba);
        assert_ne!(ab, ba);
    }

    #[test]
    fn product_ring_unit_splits() {
        let a = upper_triangular(2, 3).unwrap();
        let b = gf_ring(3).unwrap();
        let p = product_ring(&a, &b).unwrap();
        assert_eq!(p.dim(), 4);
        // The two factor units are orthogonal central idempotents.
        let ea = {
            let mut v = vec![0u16; 4];
            v[..3].copy_from_slice(a.unit_coeffs());
            v
        };
        let eb = {
            let mut v = vec![0u16; 4];
            v[3..].copy_from_slice(b.unit_coeffs());
            v
        };
        let mut prod = vec![0u16; 4];
        p.mul_vec(&ea, &eb, &mut prod);
        assert!(prod.iter().all(|&c| c == 0));
        p.mul_vec(&ea, &ea, &mut prod);
        assert_eq!(prod, ea);
        assert_eq!(p.add_vec(&ea, &eb), p.unit_coeffs().to_vec());
    }

    #[test]
    fn radical_quotient_of_first_row_triangular_is_semisimple() {
        let r = semisimple_quotient(&first_row_triangular(2).unwrap(), 256).unwrap();
        assert_eq!(r.dim(), 3);
        assert!(r.is_commutative());
        let lat = LatticeIndex::build(&r, 256).unwrap();
        assert_eq!(lat.radical(), lat.zero());
    }

    #[test]
    fn cyclic_group_algebra_matches_polynomial_model() {
        // GF(2)[C2] is GF(2)[g]/(g^2 - 1) = GF(2)[y]/(y^2) under y = g - 1,
        // so it is local with a one-dimensional radical.
        let r = cyclic_group_algebra(2, 2).unwrap();
        let lat = LatticeIndex::build(&r, 16).unwrap();
        assert_eq!(lat.maximals().len(), 1);
        assert_eq!(lat.ideal(lat.radical()).dim(), 1);
    }
}
