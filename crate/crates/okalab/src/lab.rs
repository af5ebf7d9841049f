//! Per-ring analysis context: one ring, one budget, shared lazy caches.
//!
//! Everything downstream (prime spectra, family verification, suites) works
//! through a `Lab`, so the right-ideal lattice, the quotient and extension
//! tables, the unit and idempotent sets, and the classification flags are
//! computed at most once per ring and reused. All caches are deterministic:
//! ideals are indexed by the lattice's canonical order and elements by their
//! coefficient encoding, so every scan and every witness is reproducible.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{LatticeIndex, RightIdeal};
use crate::linalg;
use crate::module::{self, FiniteModule};
use crate::ring::Ring;

/// Exhaustive-scan limits. Caps are element counts unless noted otherwise.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Largest ring, by element count, for which the full lattice is built.
    pub lattice_cap: u64,
    /// Largest ring for which the echelon-subspace oracle cross-check runs.
    pub oracle_cap: u64,
    /// Largest number of candidate maps scanned when searching for an
    /// embedding of one module into another.
    pub scan_budget: u64,
    /// Elementwise cross-checks run when a module satisfies |M|^3 <= this.
    pub triple_budget: u64,
    /// Cap on the exhaustive search for minimal generating sets.
    pub mu_cap: u64,
    /// Syzygy depth cap for projective dimension.
    pub pd_cap: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            lattice_cap: 4096,
            oracle_cap: 256,
            scan_budget: 65536,
            triple_budget: 4096,
            mu_cap: 4096,
            pd_cap: 8,
        }
    }
}

/// Lattice-indexed lookup tables for the two ideal operations that drive
/// every family scan: extension I + aR and quotient a^(-1)I.
pub struct LatticeTables {
    /// `prin[x]` is the lattice index of the principal ideal xR.
    prin: Vec<u32>,
    /// `join[i][j]` is the lattice index of the sum of ideals i and j.
    join: Vec<Vec<u32>>,
    /// `quot[j][x]` is the lattice index of x^(-1) I_j = {r : xr in I_j}.
    quot: Vec<Vec<u32>>,
}

impl LatticeTables {
    /// Lattice index of the principal ideal generated by element x.
    pub fn principal(&self, x: usize) -> u32 {
        self.prin[x]
    }

    /// Lattice index of I_i + I_j.
    pub fn join(&self, i: u32, j: u32) -> u32 {
        self.join[i as usize][j as usize]
    }

    /// Lattice index of x^(-1) I_j.
    pub fn quot(&self, j: u32, x: usize) -> u32 {
        self.quot[j as usize][x]
    }

    /// Lattice index of I_j + xR.
    pub fn ext(&self, j: u32, x: usize) -> u32 {
        self.join(j, self.prin[x])
    }
}

/// One representative per isomorphism class of simple right modules, plus
/// the class of R/M for each maximal right ideal M.
pub struct Simples {
    reps: Vec<FiniteModule>,
    class_of_maximal: Vec<usize>,
}

impl Simples {
    pub fn reps(&self) -> &[FiniteModule] {
        &self.reps
    }

    /// Class index of R/M for the k-th entry of `lattice.maximals()`.
    pub fn class_of_maximal(&self, k: usize) -> usize {
        self.class_of_maximal[k]
    }
}

/// Structural flags for one ring, each computed by direct definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub commutative: bool,
    pub domain: bool,
    pub division_ring: bool,
    pub simple_ring: bool,
    pub semisimple: bool,
    pub local: bool,
    pub self_injective: bool,
}

pub struct Lab {
    ring: Ring,
    budget: Budget,
    n_elements: usize,
    lattice: LatticeIndex,
    tables: OnceLock<LatticeTables>,
    elem_sets: OnceLock<Vec<BitSet>>,
    units: OnceLock<BitSet>,
    idempotents: OnceLock<Vec<Vec<u16>>>,
    primitive_idempotents: OnceLock<Vec<Vec<u16>>>,
    simples: OnceLock<Simples>,
    regular: OnceLock<FiniteModule>,
    classification: OnceLock<Classification>,
}

impl Lab {
    /// Build a context for one ring. The full right-ideal lattice is built
    /// eagerly; everything else is computed on first use.
    pub fn new(ring: &Ring, budget: Budget) -> Result<Lab> {
        let count = ring.element_count();
        if count > budget.lattice_cap as u128 {
            return Err(Error::CapExceeded {
                needed: count.min(u64::MAX as u128) as u64,
                cap: budget.lattice_cap,
            });
        }
        let lattice = LatticeIndex::build(ring, budget.lattice_cap)?;
        Lab::with_lattice(ring, budget, lattice)
    }

    /// Build a context around an already constructed lattice (for instance
    /// one restored from a cache). The lattice must be for this ring.
    pub fn with_lattice(ring: &Ring, budget: Budget, lattice: LatticeIndex) -> Result<Lab> {
        if !lattice.ring().same_ring(ring) {
            return Err(Error::RingMismatch);
        }
        let count = ring.element_count();
        if count > budget.lattice_cap as u128 {
            return Err(Error::CapExceeded {
                needed: count.min(u64::MAX as u128) as u64,
                cap: budget.lattice_cap,
            });
        }
        Ok(Lab {
            ring: ring.clone(),
            budget,
            n_elements: count as usize,
            lattice,
            tables: OnceLock::new(),
            elem_sets: OnceLock::new(),
            units: OnceLock::new(),
            idempotents: OnceLock::new(),
            primitive_idempotents: OnceLock::new(),
            simples: OnceLock::new(),
            regular: OnceLock::new(),
            classification: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn lattice(&self) -> &LatticeIndex {
        &self.lattice
    }

    /// Number of ring elements; element indices run over 0..n_elements.
    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    /// Coefficient vector of the element with the given index.
    pub fn elem(&self, x: usize) -> Vec<u16> {
        self.ring.elem_coeffs_at(x as u64)
    }

    pub fn radical_ideal(&self) -> &RightIdeal {
        self.lattice.ideal(self.lattice.radical())
    }

    pub fn socle_ideal(&self) -> &RightIdeal {
        self.lattice.ideal(self.lattice.socle())
    }

    /// The regular module R_R.
    pub fn regular(&self) -> &FiniteModule {
        self.regular.get_or_init(|| FiniteModule::regular(&self.ring))
    }

    /// The section U/N for lattice indices n ≤ u: the ideal U as a module,
    /// modulo N written in U coordinates.
    pub fn section_module(&self, n: u32, u: u32) -> FiniteModule {
        debug_assert!(self.lattice.le(n, u));
        let f = self.ring.field();
        let nid = self.lattice.ideal(n);
        let uid = self.lattice.ideal(u);
        let mut nin = crate::linalg::Mat::zeros(0, uid.dim());
        for r in 0..nid.basis().rows() {
            let coords =
                crate::linalg::coords_in_rref(f, nid.basis().row(r), uid.basis(), uid.pivots())
                    .expect("N lies inside U");
            nin.push_row(&coords);
        }
        FiniteModule::from_ideal(uid).quotient_module(&crate::linalg::row_space(f, &nin))
    }

    /// Extension and quotient tables over the whole lattice.
    pub fn tables(&self) -> &LatticeTables {
        self.tables.get_or_init(|| {
            let lat = &self.lattice;
            let n = self.n_elements;
            let len = lat.len();
            let prin: Vec<u32> = (0..n)
                .into_par_iter()
                .map(|x| {
                    let p = RightIdeal::from_generators(&self.ring, &[self.elem(x)]);
                    lat.index_of(&p).expect("principal ideal missing from lattice")
                })
                .collect();
            let join: Vec<Vec<u32>> = (0..len)
                .into_par_iter()
                .map(|i| {
                    let a = lat.ideal(i as u32);
                    (0..len)
                        .map(|j| {
                            let s = a.sum(lat.ideal(j as u32));
                            lat.index_of(&s).expect("sum missing from lattice")
                        })
                        .collect()
                })
                .collect();
            let quot: Vec<Vec<u32>> = (0..len)
                .into_par_iter()
                .map(|j| {
                    let ideal = lat.ideal(j as u32);
                    (0..n)
                        .map(|x| {
                            let p = ideal.preimage(&self.elem(x));
                            lat.index_of(&p).expect("quotient missing from lattice")
                        })
                        .collect()
                })
                .collect();
            LatticeTables { prin, join, quot }
        })
    }

    /// For each ideal, the set of its elements as a bitset over element
    /// indices.
    pub fn elem_sets(&self) -> &[BitSet] {
        self.elem_sets.get_or_init(|| {
            let lat = &self.lattice;
            (0..lat.len())
                .into_par_iter()
                .map(|i| {
                    let ideal = lat.ideal(i as u32);
                    let mut bits = BitSet::new(self.n_elements);
                    for v in ideal.elements() {
                        bits.set(self.ring.index_of(&v) as usize);
                    }
                    bits
                })
                .collect()
        })
    }

    /// The group of units as a bitset over element indices.
    pub fn units(&self) -> &BitSet {
        self.units.get_or_init(|| {
            let flags: Vec<bool> = (0..self.n_elements)
                .into_par_iter()
                .map(|x| self.ring.is_unit_vec(&self.elem(x)))
                .collect();
            let mut bits = BitSet::new(self.n_elements);
            for (x, ok) in flags.iter().enumerate() {
                if *ok {
                    bits.set(x);
                }
            }
            bits
        })
    }

    /// All idempotent elements, in element-index order.
    pub fn idempotents(&self) -> &[Vec<u16>] {
        self.idempotents.get_or_init(|| {
            self.ring.idempotents(self.budget.lattice_cap).expect("cap checked at Lab::new")
        })
    }

    /// A complete orthogonal set of primitive idempotents summing to 1,
    /// found by recursively splitting inside corner rings eRe.
    pub fn primitive_idempotents(&self) -> &[Vec<u16>] {
        self.primitive_idempotents.get_or_init(|| {
            let mut out = Vec::new();
            self.split_idempotent(self.ring.unit_coeffs().to_vec(), &mut out);
            debug_assert!(self.check_primitive_set(&out));
            out
        })
    }

    fn split_idempotent(&self, e: Vec<u16>, out: &mut Vec<Vec<u16>>) {
        let f = self.ring.field();
        let d = self.ring.dim();
        // eRe is the image of v -> e v e.
        let m = linalg::mat_mul(f, &self.ring.left_mul_matrix(&e), &self.ring.right_mul_matrix(&e));
        let basis = linalg::row_space(f, &m);
        let r = basis.rows();
        let q = f.q();
        let mut counter = vec![0u64; r];
        let mut cand = vec![0u16; d];
        let mut sq = vec![0u16; d];
        'scan: loop {
            // Advance the odometer over coefficient tuples.
            let mut pos = 0;
            loop {
                if pos == r {
                    break 'scan;
                }
                counter[pos] += 1;
                if counter[pos] < q {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            cand.fill(0);
            for (t, &c) in counter.iter().enumerate() {
                if c != 0 {
                    let s = crate::field::FieldElement(c as u16);
                    for k in 0..d {
                        let term = f.mul(s, crate::field::FieldElement(basis.get(t, k)));
                        cand[k] =
                            f.add(crate::field::FieldElement(cand[k]), term).0;
                    }
                }
            }
            if cand == e {
                continue;
            }
            self.ring.mul_vec(&cand, &cand, &mut sq);
            if sq == cand {
                let rest: Vec<u16> = e
                    .iter()
                    .zip(&cand)
                    .map(|(&a, &b)| {
                        f.sub(crate::field::FieldElement(a), crate::field::FieldElement(b)).0
                    })
                    .collect();
                self.split_idempotent(cand, out);
                self.split_idempotent(rest, out);
                return;
            }
        }
        out.push(e);
    }

    fn check_primitive_set(&self, idems: &[Vec<u16>]) -> bool {
        let d = self.ring.dim();
        let mut sum = vec![0u16; d];
        let f = self.ring.field();
        let mut prod = vec![0u16; d];
        for (a, ea) in idems.iter().enumerate() {
            self.ring.mul_vec(ea, ea, &mut prod);
            if &prod != ea {
                return false;
            }
            for k in 0..d {
                sum[k] = f
                    .add(crate::field::FieldElement(sum[k]), crate::field::FieldElement(ea[k]))
                    .0;
            }
            for (b, eb) in idems.iter().enumerate() {
                if a != b {
                    self.ring.mul_vec(ea, eb, &mut prod);
                    if prod.iter().any(|&c| c != 0) {
                        return false;
                    }
                }
            }
        }
        sum == self.ring.unit_coeffs()
    }

    /// Simple right modules up to isomorphism, built as R/M over the maximal
    /// right ideals and deduplicated by nonzero hom spaces.
    pub fn simples(&self) -> &Simples {
        self.simples.get_or_init(|| {
            let mut reps: Vec<FiniteModule> = Vec::new();
            let mut class_of_maximal = Vec::new();
            for &m in self.lattice.maximals() {
                let s = FiniteModule::cyclic(&self.ring, self.lattice.ideal(m));
                debug_assert!(s.is_simple());
                let class = reps.iter().position(|r| !module::hom_space(r, &s).is_empty());
                match class {
                    Some(k) => class_of_maximal.push(k),
                    None => {
                        reps.push(s);
                        class_of_maximal.push(reps.len() - 1);
                    }
                }
            }
            Simples { reps, class_of_maximal }
        })
    }

    /// Structural classification, each flag from its own definition.
    pub fn classification(&self) -> Classification {
        *self.classification.get_or_init(|| {
            let cap = self.budget.lattice_cap;
            let lat = &self.lattice;
            let c = Classification {
                commutative: self.ring.is_commutative(),
                domain: self.ring.is_domain(cap).expect("cap checked at Lab::new"),
                division_ring: self.ring.is_division_ring(cap).expect("cap checked at Lab::new"),
                simple_ring: lat.two_sided_indices().len() == 2,
                semisimple: lat.radical() == lat.zero(),
                local: lat.maximals().len() == 1,
                self_injective: module::is_injective(self.regular(), lat),
            };
            debug_assert!(!c.division_ring || (c.domain && c.simple_ring && c.local));
            debug_assert!(!c.semisimple || c.self_injective);
            c
        })
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn lab_for(name: &str) -> Lab {
        let entry = catalog::find(name).unwrap();
        Lab::new(&entry.ring, Budget::default()).unwrap()
    }

    #[test]
    fn tables_satisfy_membership_identities() {
        let lab = lab_for("ut2_gf2");
        let t = lab.tables();
        let lat = lab.lattice();
        let sets = lab.elem_sets();
        for j in 0..lat.len() as u32 {
            for x in 0..lab.n_elements() {
                // x in I  iff  I + xR = I  iff  x^(-1)I = R... the last only
                // holds left-to-right, so check the two exact identities.
                let member = sets[j as usize].get(x);
                assert_eq!(t.ext(j, x) == j, member);
                if member {
                    assert_eq!(t.quot(j, x), lat.top());
                }
            }
        }
    }

    #[test]
    fn tables_match_direct_computation_on_trunc() {
        let lab = lab_for("trunc_gf3_2");
        let t = lab.tables();
        let lat = lab.lattice();
        for j in 0..lat.len() as u32 {
            for x in 0..lab.n_elements() {
                let direct = lat.ideal(j).preimage(&lab.elem(x));
                assert_eq!(t.quot(j, x), lat.index_of(&direct).unwrap());
                let ext =
                    lat.ideal(j).sum(&RightIdeal::from_generators(lab.ring(), &[lab.elem(x)]));
                assert_eq!(t.ext(j, x), lat.index_of(&ext).unwrap());
            }
        }
    }

    #[test]
    fn unit_group_sizes() {
        // UT2(GF(2)): both diagonal entries must be 1, the corner is free.
        assert_eq!(lab_for("ut2_gf2").units().count(), 2);
        // Mat2(GF(2)) has GL(2, 2) of order 6.
        assert_eq!(lab_for("mat2_gf2").units().count(), 6);
        // GF(4)[x]/(x^2) is local: units are exactly the complement of (x).
        assert_eq!(lab_for("trunc_gf4_2").units().count(), 12);
    }

    #[test]
    fn primitive_idempotents_split_the_unit() {
        let lab = lab_for("ut2_gf2");
        let prims = lab.primitive_idempotents();
        assert_eq!(prims.len(), 2);

        let lab = lab_for("mat2_gf2");
        assert_eq!(lab.primitive_idempotents().len(), 2);

        // Local rings have no splitting at all.
        let lab = lab_for("trunc_gf2_3");
        assert_eq!(lab.primitive_idempotents().len(), 1);

        // The product of three fields splits completely.
        let lab = lab_for("tri3_gf2_mod_rad");
        assert_eq!(lab.primitive_idempotents().len(), 3);
    }

    #[test]
    fn simple_classes_collapse_for_matrix_rings() {
        // Mat2(GF(2)) has three maximal right ideals but one simple module.
        let lab = lab_for("mat2_gf2");
        let s = lab.simples();
        assert_eq!(lab.lattice().maximals().len(), 3);
        assert_eq!(s.reps().len(), 1);

        // UT2(GF(2)) has two maximals and two distinct simples.
        let lab = lab_for("ut2_gf2");
        let s = lab.simples();
        assert_eq!(s.reps().len(), 2);
        assert_ne!(s.class_of_maximal(0), s.class_of_maximal(1));
    }

    #[test]
    fn classification_flags() {
        let c = lab_for("gf4").classification();
        assert!(
            c.commutative
                && c.domain
                && c.division_ring
                && c.simple_ring
                && c.semisimple
                && c.local
                && c.self_injective
        );

        let c = lab_for("mat2_gf2").classification();
        assert!(!c.commutative && !c.domain && !c.division_ring);
        assert!(c.simple_ring && c.semisimple && c.self_injective && !c.local);

        let c = lab_for("ut2_gf2").classification();
        assert!(!c.commutative && !c.domain && !c.simple_ring);
        assert!(!c.semisimple && !c.local && !c.self_injective);

        // Truncated polynomials: local, self-injective, not semisimple.
        let c = lab_for("trunc_gf3_2").classification();
        assert!(c.commutative && !c.domain && !c.semisimple);
        assert!(c.local && c.self_injective);

        // A product of fields: semisimple, not simple, not local.
        let c = lab_for("gf2_x_gf2").classification();
        assert!(c.commutative && !c.domain && c.semisimple && !c.simple_ring && !c.local);
    }

    #[test]
    fn oversized_ring_is_rejected() {
        let entry = catalog::find("mat3_gf3").unwrap();
        match Lab::new(&entry.ring, Budget::default()) {
            Err(Error::CapExceeded { .. }) => {}
            _ => panic!("expected cap rejection"),
        }
    }
}
