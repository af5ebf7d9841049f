//! Finite associative unital algebras presented by structure constants.
//!
//! A ring is a free module of rank `dim` over GF(p^e) together with the
//! products `e_i · e_j` expanded in the basis. The base field is central by
//! construction, so right ideals, idealizers and similar objects are
//! subspaces and all downstream computation is linear algebra. Associativity
//! and the unit law are verified on basis triples at construction; there is
//! no unchecked constructor.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::linalg::{self, Mat};

pub struct RingData {
    field: Arc<FiniteField>,
    dim: usize,
    /// structure[i * dim + j] = coefficients of e_i · e_j, length `dim`.
    structure: Vec<Vec<u16>>,
    unit: Vec<u16>,
    /// right_mats[j] row i = e_i · e_j; right multiplication by e_j is v ↦ v · right_mats[j].
    right_mats: Vec<Mat>,
    /// left_mats[i] row j = e_i · e_j; left multiplication by e_i is v ↦ v · left_mats[i].
    left_mats: Vec<Mat>,
    name: String,
    basis_names: Option<Vec<String>>,
}

/// Shared handle to an immutable ring. Equality of handles is identity:
/// two separately constructed rings are never "the same ring" even if their
/// tables coincide.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl std::fmt::Debug for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ring({}, dim {}, |R| = {})", self.0.name, self.0.dim, self.element_count())
    }
}

#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Ring,
    coeffs: Vec<u16>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coeffs == other.coeffs
    }
}
impl Eq for RingElement {}

impl RingElement {
    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field_coeffs(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&c| FieldElement(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl Ring {
    /// Build a ring from structure constants. `structure[i][j]` holds the
    /// coefficients of `e_i · e_j`. Fails unless multiplication is
    /// associative on all basis triples and `unit` is a two-sided identity.
    pub fn new(
        field: Arc<FiniteField>,
        structure: Vec<Vec<Vec<u16>>>,
        unit: Vec<u16>,
        name: impl Into<String>,
    ) -> Result<Ring> {
        let dim = structure.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        let q = field.q() as u16;
        let mut flat: Vec<Vec<u16>> = Vec::with_capacity(dim * dim);
        for row in &structure {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            for entry in row {
                if entry.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: entry.len() });
                }
                if entry.iter().any(|&c| c >= q) {
                    return Err(Error::BadCoefficient(entry.iter().copied().max().unwrap() as u64));
                }
                flat.push(entry.clone());
            }
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: unit.len() });
        }
        if unit.iter().any(|&c| c >= q) {
            return Err(Error::BadCoefficient(*unit.iter().max().unwrap() as u64));
        }

        let right_mats: Vec<Mat> = (0..dim)
            .map(|j| {
                let mut m = Mat::zeros(dim, dim);
                for i in 0..dim {
                    m.row_mut(i).copy_from_slice(&flat[i * dim + j]);
                }
                m
            })
            .collect();
        let left_mats: Vec<Mat> = (0..dim)
            .map(|i| {
                let mut m = Mat::zeros(dim, dim);
                for j in 0..dim {
                    m.row_mut(j).copy_from_slice(&flat[i * dim + j]);
                }
                m
            })
            .collect();

        let data = RingData {
            field,
            dim,
            structure: flat,
            unit,
            right_mats,
            left_mats,
            name: name.into(),
            basis_names: None,
        };
        let ring = Ring(Arc::new(data));

        // Associativity on basis triples: (e_i e_j) e_k = e_i (e_j e_k).
        let mut lhs = vec![0u16; dim];
        let mut rhs = vec![0u16; dim];
        for i in 0..dim {
            for j in 0..dim {
                let eij = ring.structure_const(i, j).to_vec();
                for k in 0..dim {
                    linalg::mul_row_mat(ring.field(), &eij, &ring.0.right_mats[k], &mut lhs);
                    let ejk = ring.structure_const(j, k);
                    rhs.fill(0);
                    for (m, &c) in ejk.iter().enumerate() {
                        if c != 0 {
                            let c = FieldElement(c);
                            let eim = ring.structure_const(i, m);
                            for (t, &x) in eim.iter().enumerate() {
                                if x != 0 {
                                    rhs[t] = ring
                                        .field()
                                        .add(FieldElement(rhs[t]), ring.field().mul(c, FieldElement(x)))
                                        .0;
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        // Unit law on every basis element, both sides.
        let mut buf = vec![0u16; dim];
        for j in 0..dim {
            let mut ej = vec![0u16; dim];
            ej[j] = 1;
            ring.mul_vec(&ring.0.unit, &ej, &mut buf);
            if buf != ej {
                return Err(Error::BadUnit(j));
            }
            ring.mul_vec(&ej, &ring.0.unit, &mut buf);
            if buf != ej {
                return Err(Error::BadUnit(j));
            }
        }
        Ok(ring)
    }

    /// Attach display names to basis elements. Returns a fresh ring handle,
    /// so call this before deriving any ideals or modules from the ring.
    pub fn with_basis_names(self, names: Vec<String>) -> Ring {
        assert_eq!(names.len(), self.0.dim);
        Ring(Arc::new(RingData {
            field: self.0.field.clone(),
            dim: self.0.dim,
            structure: self.0.structure.clone(),
            unit: self.0.unit.clone(),
            right_mats: self.0.right_mats.clone(),
            left_mats: self.0.left_mats.clone(),
            name: self.0.name.clone(),
            basis_names: Some(names),
        }))
    }

    pub fn renamed(self, name: impl Into<String>) -> Ring {
        Ring(Arc::new(RingData {
            field: self.0.field.clone(),
            dim: self.0.dim,
            structure: self.0.structure.clone(),
            unit: self.0.unit.clone(),
            right_mats: self.0.right_mats.clone(),
            left_mats: self.0.left_mats.clone(),
            name: name.into(),
            basis_names: self.0.basis_names.clone(),
        }))
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.0.basis_names.as_deref()
    }

    pub fn unit_coeffs(&self) -> &[u16] {
        &self.0.unit
    }

    pub fn structure_const(&self, i: usize, j: usize) -> &[u16] {
        &self.0.structure[i * self.0.dim + j]
    }

    /// Structure constants as nested vectors (for serialization).
    pub fn structure_table(&self) -> Vec<Vec<Vec<u16>>> {
        (0..self.0.dim)
            .map(|i| (0..self.0.dim).map(|j| self.structure_const(i, j).to_vec()).collect())
            .collect()
    }

    pub fn right_mats(&self) -> &[Mat] {
        &self.0.right_mats
    }

    pub fn left_mats(&self) -> &[Mat] {
        &self.0.left_mats
    }

    pub fn same_ring(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn element_count(&self) -> u128 {
        (self.0.field.q() as u128).pow(self.0.dim as u32)
    }

    pub fn zero(&self) -> RingElement {
        RingElement { ring: self.clone(), coeffs: vec![0; self.0.dim] }
    }

    pub fn one(&self) -> RingElement {
        RingElement { ring: self.clone(), coeffs: self.0.unit.clone() }
    }

    pub fn elem(&self, coeffs: Vec<u16>) -> Result<RingElement> {
        if coeffs.len() != self.0.dim {
            return Err(Error::DimensionMismatch { expected: self.0.dim, got: coeffs.len() });
        }
        if coeffs.iter().any(|&c| c as u64 >= self.0.field.q()) {
            return Err(Error::BadCoefficient(*coeffs.iter().max().unwrap() as u64));
        }
        Ok(RingElement { ring: self.clone(), coeffs })
    }

    /// Element at position `idx` in the canonical iteration order:
    /// lexicographic on coefficient vectors with basis index 0 most
    /// significant.
    pub fn elem_coeffs_at(&self, idx: u64) -> Vec<u16> {
        let q = self.0.field.q();
        let mut v = idx;
        let mut coeffs = vec![0u16; self.0.dim];
        for i in (0..self.0.dim).rev() {
            coeffs[i] = (v % q) as u16;
            v /= q;
        }
        debug_assert_eq!(v, 0, "index out of range");
        coeffs
    }

    pub fn elem_at(&self, idx: u64) -> RingElement {
        RingElement { ring: self.clone(), coeffs: self.elem_coeffs_at(idx) }
    }

    pub fn index_of(&self, coeffs: &[u16]) -> u64 {
        let q = self.0.field.q();
        coeffs.iter().fold(0u64, |acc, &c| acc * q + c as u64)
    }

    /// `out = a · b` on raw coefficient vectors.
    pub fn mul_vec(&self, a: &[u16], b: &[u16], out: &mut [u16]) {
        let d = self.0.dim;
        let f = &*self.0.field;
        out.fill(0);
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let ai = FieldElement(ai);
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let s = f.mul(ai, FieldElement(bj));
                let cij = &self.0.structure[i * d + j];
                for (k, &c) in cij.iter().enumerate() {
                    if c != 0 {
                        out[k] = f.add(FieldElement(out[k]), f.mul(s, FieldElement(c))).0;
                    }
                }
            }
        }
    }

    pub fn add_vec(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let f = &*self.0.field;
        a.iter().zip(b).map(|(&x, &y)| f.add(FieldElement(x), FieldElement(y)).0).collect()
    }

    pub fn neg_vec(&self, a: &[u16]) -> Vec<u16> {
        let f = &*self.0.field;
        a.iter().map(|&x| f.neg(FieldElement(x)).0).collect()
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        if !self.same_ring(&a.ring) || !self.same_ring(&b.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = vec![0u16; self.0.dim];
        self.mul_vec(&a.coeffs, &b.coeffs, &mut out);
        Ok(RingElement { ring: self.clone(), coeffs: out })
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        if !self.same_ring(&a.ring) || !self.same_ring(&b.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(RingElement { ring: self.clone(), coeffs: self.add_vec(&a.coeffs, &b.coeffs) })
    }

    /// Matrix of right multiplication v ↦ v · a.
    pub fn right_mul_matrix(&self, a: &[u16]) -> Mat {
        let d = self.0.dim;
        let f = &*self.0.field;
        let mut m = Mat::zeros(d, d);
        for (j, &aj) in a.iter().enumerate() {
            if aj == 0 {
                continue;
            }
            let aj = FieldElement(aj);
            for i in 0..d {
                let row = self.0.right_mats[j].row(i);
                for k in 0..d {
                    if row[k] != 0 {
                        let v = f.add(FieldElement(m.get(i, k)), f.mul(aj, FieldElement(row[k])));
                        m.set(i, k, v.0);
                    }
                }
            }
        }
        m
    }

    /// Matrix of left multiplication v ↦ a · v.
    pub fn left_mul_matrix(&self, a: &[u16]) -> Mat {
        let d = self.0.dim;
        let f = &*self.0.field;
        let mut m = Mat::zeros(d, d);
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let ai = FieldElement(ai);
            for j in 0..d {
                let row = self.0.left_mats[i].row(j);
                for k in 0..d {
                    if row[k] != 0 {
                        let v = f.add(FieldElement(m.get(j, k)), f.mul(ai, FieldElement(row[k])));
                        m.set(j, k, v.0);
                    }
                }
            }
        }
        m
    }

    /// A unit is an element whose right multiplication map is bijective; for
    /// finite rings this matches two-sided invertibility, which debug builds
    /// double-check through the left map.
    pub fn is_unit_vec(&self, a: &[u16]) -> bool {
        let r = linalg::rank(&self.0.field, &self.right_mul_matrix(a)) == self.0.dim;
        debug_assert_eq!(
            r,
            linalg::rank(&self.0.field, &self.left_mul_matrix(a)) == self.0.dim,
            "finite rings are Dedekind-finite"
        );
        r
    }

    pub fn is_unit(&self, a: &RingElement) -> Result<bool> {
        if !self.same_ring(&a.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.is_unit_vec(&a.coeffs))
    }

    pub fn inverse_vec(&self, a: &[u16]) -> Option<Vec<u16>> {
        // Solve x · (right mult by a) = 1, i.e. x · a = 1.
        let m = self.right_mul_matrix(a);
        let x = linalg::solve_row(&self.0.field, &m, &self.0.unit)?;
        let mut check = vec![0u16; self.0.dim];
        self.mul_vec(&x, a, &mut check);
        (check == self.0.unit).then_some(x)
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.0.dim;
        (0..d).all(|i| (i + 1..d).all(|j| self.structure_const(i, j) == self.structure_const(j, i)))
    }

    /// No zero divisors: every nonzero element has trivial left annihilator.
    /// Exhaustive over elements, so gated by `cap`.
    pub fn is_domain(&self, cap: u64) -> Result<bool> {
        let n = self.element_count();
        if n > cap as u128 {
            return Err(Error::CapExceeded { needed: n.min(u64::MAX as u128) as u64, cap });
        }
        for idx in 1..n as u64 {
            let x = self.elem_coeffs_at(idx);
            if linalg::rank(&self.0.field, &self.right_mul_matrix(&x)) != self.0.dim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every nonzero element has a right inverse, checked by solving x·b = 1
    /// through the left multiplication map (a route independent from
    /// `is_domain`; the two agree on finite rings, which suites assert).
    pub fn is_division_ring(&self, cap: u64) -> Result<bool> {
        let n = self.element_count();
        if n > cap as u128 {
            return Err(Error::CapExceeded { needed: n.min(u64::MAX as u128) as u64, cap });
        }
        for idx in 1..n as u64 {
            let x = self.elem_coeffs_at(idx);
            let l = self.left_mul_matrix(&x);
            if linalg::solve_row(&self.0.field, &l, &self.0.unit).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All idempotents, in canonical element order. Exhaustive, gated by `cap`.
    pub fn idempotents(&self, cap: u64) -> Result<Vec<Vec<u16>>> {
        let n = self.element_count();
        if n > cap as u128 {
            return Err(Error::CapExceeded { needed: n.min(u64::MAX as u128) as u64, cap });
        }
        let mut out = Vec::new();
        let mut buf = vec![0u16; self.0.dim];
        for idx in 0..n as u64 {
            let x = self.elem_coeffs_at(idx);
            self.mul_vec(&x, &x, &mut buf);
            if buf == x {
                out.push(x);
            }
        }
        Ok(out)
    }

    pub fn fmt_elem(&self, coeffs: &[u16]) -> String {
        if coeffs.iter().all(|&c| c == 0) {
            return "0".to_string();
        }
        let f = &*self.0.field;
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = match &self.0.basis_names {
                Some(names) => names[i].clone(),
                None => format!("b{i}"),
            };
            if c == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{}·{}", f.fmt_elem(FieldElement(c)), name));
            }
        }
        parts.join(" + ")
    }
}

/// GF(q) itself as a one-dimensional ring.
pub fn field_ring(field: Arc<FiniteField>, name: impl Into<String>) -> Ring {
    Ring::new(field, vec![vec![vec![1]]], vec![1], name).expect("a field is a ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    /// 2x2 matrices over GF(2), basis E11, E12, E21, E22.
    pub fn mat2_gf2() -> Ring {
        let f = FiniteField::new(2, 1, None).unwrap();
        let d = 4;
        let pos = |r: usize, c: usize| r * 2 + c;
        let mut structure = vec![vec![vec![0u16; d]; d]; d];
        for r1 in 0..2 {
            for c1 in 0..2 {
                for r2 in 0..2 {
                    for c2 in 0..2 {
                        if c1 == r2 {
                            structure[pos(r1, c1)][pos(r2, c2)][pos(r1, c2)] = 1;
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u16; d];
        unit[pos(0, 0)] = 1;
        unit[pos(1, 1)] = 1;
        Ring::new(f, structure, unit, "mat2_gf2").unwrap()
    }

    #[test]
    fn matrix_units_multiply_correctly() {
        let r = mat2_gf2();
        let e12 = r.elem(vec![0, 1, 0, 0]).unwrap();
        let e21 = r.elem(vec![0, 0, 1, 0]).unwrap();
        let e11 = r.elem(vec![1, 0, 0, 0]).unwrap();
        let e22 = r.elem(vec![0, 0, 0, 1]).unwrap();
        assert_eq!(r.mul(&e12, &e21).unwrap(), e11);
        assert_eq!(r.mul(&e21, &e12).unwrap(), e22);
        assert!(r.mul(&e12, &e12).unwrap().is_zero());
    }

    #[test]
    fn rejects_corrupted_structure() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let good = mat2_gf2();
        let mut structure = good.structure_table();
        // Corrupt E11·E12 = E12 into E11·E12 = E21.
        structure[0][1] = vec![0, 0, 1, 0];
        let r = Ring::new(f, structure, good.unit_coeffs().to_vec(), "broken");
        assert!(matches!(r, Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn rejects_bad_unit() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let good = mat2_gf2();
        let r = Ring::new(f, good.structure_table(), vec![1, 0, 0, 0], "broken");
        assert!(matches!(r, Err(Error::BadUnit(_))));
    }

    #[test]
    fn element_indexing_is_lexicographic() {
        let r = mat2_gf2();
        assert_eq!(r.elem_coeffs_at(0), vec![0, 0, 0, 0]);
        assert_eq!(r.elem_coeffs_at(1), vec![0, 0, 0, 1]);
        assert_eq!(r.elem_coeffs_at(8), vec![1, 0, 0, 0]);
        for idx in 0..16 {
            assert_eq!(r.index_of(&r.elem_coeffs_at(idx)), idx);
        }
    }

    #[test]
    fn units_of_mat2_gf2() {
        // GL(2, 2) has 6 elements.
        let r = mat2_gf2();
        let units = (0..16).filter(|&i| r.is_unit_vec(&r.elem_coeffs_at(i))).count();
        assert_eq!(units, 6);
        let a = r.elem(vec![0, 1, 1, 0]).unwrap(); // E12 + E21 swaps, self-inverse
        let inv = r.inverse_vec(a.coeffs()).unwrap();
        assert_eq!(inv, a.coeffs());
    }

    #[test]
    fn domain_and_division_classification() {
        let r = mat2_gf2();
        assert!(!r.is_domain(4096).unwrap());
        assert!(!r.is_division_ring(4096).unwrap());
        assert!(!r.is_commutative());
        let f4 = field_ring(FiniteField::new(2, 2, None).unwrap(), "gf4");
        assert!(f4.is_domain(4096).unwrap());
        assert!(f4.is_division_ring(4096).unwrap());
        assert!(f4.is_commutative());
    }

    #[test]
    fn idempotents_of_gf4_are_trivial() {
        let f4 = field_ring(FiniteField::new(2, 2, None).unwrap(), "gf4");
        let idem = f4.idempotents(4096).unwrap();
        assert_eq!(idem, vec![vec![0], vec![1]]);
    }
}
