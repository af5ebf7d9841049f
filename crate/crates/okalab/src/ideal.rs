//! Right ideals as canonical echelon bases, and the full right-ideal lattice.
//!
//! A right ideal is stored as the reduced row echelon basis of its underlying
//! subspace; that basis is the sole equality witness, so two ideals are equal
//! exactly when their `Mat` bases are. The lattice is enumerated by closing
//! `{0}` under sums with principal ideals, and can be cross-checked against
//! an oracle that scans every echelon subspace for right-multiplication
//! closure.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::ring::Ring;

#[derive(Clone)]
pub struct RightIdeal {
    ring: Ring,
    basis: Mat,
    pivots: Vec<usize>,
}

impl PartialEq for RightIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.basis == other.basis
    }
}
impl Eq for RightIdeal {}

impl std::fmt::Debug for RightIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RightIdeal(dim {} of {})", self.dim(), self.ring.name())
    }
}

impl RightIdeal {
    pub fn zero(ring: &Ring) -> RightIdeal {
        RightIdeal { ring: ring.clone(), basis: Mat::zeros(0, ring.dim()), pivots: vec![] }
    }

    pub fn full(ring: &Ring) -> RightIdeal {
        let basis = Mat::identity(ring.dim());
        let pivots = (0..ring.dim()).collect();
        RightIdeal { ring: ring.clone(), basis, pivots }
    }

    /// Smallest right ideal containing the given vectors: echelonize, then
    /// repeatedly append products with basis elements until stable.
    pub fn from_generators(ring: &Ring, gens: &[Vec<u16>]) -> RightIdeal {
        let f = ring.field();
        let d = ring.dim();
        let mut basis = Mat::zeros(0, d);
        for g in gens {
            assert_eq!(g.len(), d);
            basis.push_row(g);
        }
        let mut pivots = linalg::rref(f, &mut basis);
        let mut frontier: Vec<Vec<u16>> = (0..basis.rows()).map(|r| basis.row(r).to_vec()).collect();
        let mut prod = vec![0u16; d];
        while let Some(v) = frontier.pop() {
            for rm in ring.right_mats() {
                linalg::mul_row_mat(f, &v, rm, &mut prod);
                let mut w = prod.clone();
                linalg::reduce_row(f, &mut w, &basis, &pivots);
                if w.iter().any(|&x| x != 0) {
                    basis.push_row(&w);
                    pivots = linalg::rref(f, &mut basis);
                    frontier.push(w);
                }
            }
        }
        RightIdeal { ring: ring.clone(), basis, pivots }
    }

    /// Wrap an rref basis that is already known to be right-multiplication
    /// closed. Closure is re-verified in debug builds.
    pub fn from_closed_basis(ring: &Ring, basis: Mat) -> RightIdeal {
        debug_assert_eq!(basis.cols(), ring.dim());
        let pivots = basis.pivot_cols();
        let ideal = RightIdeal { ring: ring.clone(), basis, pivots };
        debug_assert!(ideal.is_right_closed(), "basis is not right-multiplication closed");
        ideal
    }

    fn is_right_closed(&self) -> bool {
        let f = self.ring.field();
        let mut prod = vec![0u16; self.ring.dim()];
        for r in 0..self.basis.rows() {
            for rm in self.ring.right_mats() {
                linalg::mul_row_mat(f, self.basis.row(r), rm, &mut prod);
                if !linalg::in_row_space(f, &prod, &self.basis, &self.pivots) {
                    return false;
                }
            }
        }
        true
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.rows() == 0
    }

    pub fn is_proper(&self) -> bool {
        self.basis.rows() < self.ring.dim()
    }

    pub fn contains_vec(&self, v: &[u16]) -> bool {
        linalg::in_row_space(self.ring.field(), v, &self.basis, &self.pivots)
    }

    pub fn contains_ideal(&self, other: &RightIdeal) -> bool {
        (0..other.basis.rows()).all(|r| self.contains_vec(other.basis.row(r)))
    }

    pub fn sum(&self, other: &RightIdeal) -> RightIdeal {
        assert!(self.ring.same_ring(&other.ring));
        let basis = linalg::row_space_sum(self.ring.field(), &self.basis, &other.basis);
        let pivots = basis.pivot_cols();
        RightIdeal { ring: self.ring.clone(), basis, pivots }
    }

    pub fn intersect(&self, other: &RightIdeal) -> RightIdeal {
        assert!(self.ring.same_ring(&other.ring));
        let basis = linalg::row_space_intersect(self.ring.field(), &self.basis, &other.basis);
        let pivots = basis.pivot_cols();
        RightIdeal { ring: self.ring.clone(), basis, pivots }
    }

    /// Projection matrix onto the complement coordinates mod this ideal:
    /// a `dim × codim` matrix `P` with `v·P` the coset coordinates of `v`.
    pub fn coset_projection(&self) -> Mat {
        let f = self.ring.field();
        let d = self.ring.dim();
        let free: Vec<usize> = (0..d).filter(|c| !self.pivots.contains(c)).collect();
        let mut proj = Mat::zeros(d, free.len());
        let mut row = vec![0u16; d];
        for j in 0..d {
            row.fill(0);
            row[j] = 1;
            linalg::reduce_row(f, &mut row, &self.basis, &self.pivots);
            for (k, &c) in free.iter().enumerate() {
                proj.set(j, k, row[c]);
            }
        }
        proj
    }

    /// Section matrix for `coset_projection`: a `codim × dim` matrix `S` with
    /// `coords·S` a canonical coset representative.
    pub fn coset_section(&self) -> Mat {
        let d = self.ring.dim();
        let free: Vec<usize> = (0..d).filter(|c| !self.pivots.contains(c)).collect();
        let mut sect = Mat::zeros(free.len(), d);
        for (k, &c) in free.iter().enumerate() {
            sect.set(k, c, 1);
        }
        sect
    }

    /// `a⁻¹ I = { r : a·r ∈ I }`, again a right ideal.
    pub fn preimage(&self, a: &[u16]) -> RightIdeal {
        let f = self.ring.field();
        let la = self.ring.left_mul_matrix(a);
        let proj = self.coset_projection();
        let basis = linalg::row_kernel(f, &linalg::mat_mul(f, &la, &proj));
        let pivots = basis.pivot_cols();
        let out = RightIdeal { ring: self.ring.clone(), basis, pivots };
        debug_assert!(out.is_right_closed(), "preimages of right ideals are right ideals");
        out
    }

    /// The idealizer `{ x : x·I ⊆ I }`, the largest subring in which this
    /// ideal is two-sided. Returned as an rref subspace basis.
    pub fn idealizer(&self) -> Mat {
        let f = self.ring.field();
        let d = self.ring.dim();
        if self.basis.rows() == 0 {
            return Mat::identity(d);
        }
        let proj = self.coset_projection();
        let mut constraints = Mat::zeros(d, 0);
        for r in 0..self.basis.rows() {
            let rm = self.ring.right_mul_matrix(self.basis.row(r));
            let block = linalg::mat_mul(f, &rm, &proj);
            // Horizontal concatenation.
            let mut next = Mat::zeros(d, constraints.cols() + block.cols());
            for i in 0..d {
                for c in 0..constraints.cols() {
                    next.set(i, c, constraints.get(i, c));
                }
                for c in 0..block.cols() {
                    next.set(i, constraints.cols() + c, block.get(i, c));
                }
            }
            constraints = next;
        }
        linalg::row_kernel(f, &constraints)
    }

    pub fn is_two_sided(&self) -> bool {
        let f = self.ring.field();
        let mut prod = vec![0u16; self.ring.dim()];
        for r in 0..self.basis.rows() {
            for lm in self.ring.left_mats() {
                // v · left_mats[i] = e_i · v.
                linalg::mul_row_mat(f, self.basis.row(r), lm, &mut prod);
                if !linalg::in_row_space(f, &prod, &self.basis, &self.pivots) {
                    return false;
                }
            }
        }
        true
    }

    /// Largest two-sided ideal inside this ideal: `{ x : R·x·R ⊆ I }`,
    /// computed as a kernel. Debug builds cross-check the annihilator route
    /// `{ x : R·x ⊆ I }`, which coincides for right ideals.
    pub fn core(&self) -> RightIdeal {
        let f = self.ring.field();
        let d = self.ring.dim();
        let proj = self.coset_projection();
        let mut blocks: Vec<Mat> = Vec::new();
        for i in 0..d {
            let li = &self.ring.left_mats()[i]; // v ↦ e_i · v
            for j in 0..d {
                let m = linalg::mat_mul(f, li, &self.ring.right_mats()[j]);
                blocks.push(linalg::mat_mul(f, &m, &proj));
            }
        }
        let total: usize = blocks.iter().map(|b| b.cols()).sum();
        let mut constraints = Mat::zeros(d, total);
        let mut off = 0;
        for b in &blocks {
            for r in 0..d {
                for c in 0..b.cols() {
                    constraints.set(r, off + c, b.get(r, c));
                }
            }
            off += b.cols();
        }
        let basis = linalg::row_kernel(f, &constraints);
        let pivots = basis.pivot_cols();
        let out = RightIdeal { ring: self.ring.clone(), basis, pivots };
        debug_assert!(out.is_two_sided());
        debug_assert!(self.contains_ideal(&out));
        #[cfg(debug_assertions)]
        {
            let ann = self.annihilator_of_quotient();
            debug_assert_eq!(out.basis, ann.basis, "core must equal ann(R/I)");
        }
        out
    }

    /// `ann(R/I) = { x : R·x ⊆ I }` — for a right ideal this equals the core.
    pub fn annihilator_of_quotient(&self) -> RightIdeal {
        let f = self.ring.field();
        let d = self.ring.dim();
        let proj = self.coset_projection();
        let mut big = Mat::zeros(d, d * proj.cols());
        for i in 0..d {
            let li = &self.ring.left_mats()[i];
            let block = linalg::mat_mul(f, li, &proj);
            for r in 0..d {
                for c in 0..block.cols() {
                    big.set(r, i * proj.cols() + c, block.get(r, c));
                }
            }
        }
        let basis = linalg::row_kernel(f, &big);
        let pivots = basis.pivot_cols();
        RightIdeal { ring: self.ring.clone(), basis, pivots }
    }

    /// All elements of the underlying subspace as coefficient vectors, in
    /// canonical element order.
    pub fn elements(&self) -> Vec<Vec<u16>> {
        let f = self.ring.field();
        let q = f.q();
        let k = self.basis.rows();
        let d = self.ring.dim();
        let count = (q as u128).pow(k as u32) as u64;
        let mut out = Vec::with_capacity(count as usize);
        let mut combo = vec![0u16; k];
        let mut v = vec![0u16; d];
        for idx in 0..count {
            let mut n = idx;
            for c in combo.iter_mut().rev() {
                *c = (n % q) as u16;
                n /= q;
            }
            linalg::mul_row_mat(f, &combo, &self.basis, &mut v);
            out.push(v.clone());
        }
        out.sort_by_key(|v| self.ring.index_of(v));
        out
    }

    /// Least size of a generating set, by exhaustive search over subsets of
    /// the ideal's elements, smallest size first. `cap` bounds the number of
    /// ideal elements the search may expand.
    pub fn mu(&self, cap: u64) -> Result<usize> {
        if self.basis.rows() == 0 {
            return Ok(0);
        }
        let count = (self.ring.field().q() as u128).pow(self.basis.rows() as u32);
        if count > cap as u128 {
            return Err(Error::CapExceeded { needed: count.min(u64::MAX as u128) as u64, cap });
        }
        let elems: Vec<Vec<u16>> = self.elements().into_iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
        for k in 1..=self.basis.rows() {
            let mut chosen = vec![0usize; k];
            if search_generating_subset(self, &elems, &mut chosen, 0, 0, k) {
                return Ok(k);
            }
        }
        Ok(self.basis.rows())
    }
}

fn search_generating_subset(
    ideal: &RightIdeal,
    elems: &[Vec<u16>],
    chosen: &mut [usize],
    depth: usize,
    start: usize,
    k: usize,
) -> bool {
    if depth == k {
        let gens: Vec<Vec<u16>> = chosen.iter().map(|&i| elems[i].clone()).collect();
        let gen = RightIdeal::from_generators(&ideal.ring, &gens);
        return gen.basis == ideal.basis;
    }
    for i in start..elems.len() {
        chosen[depth] = i;
        if search_generating_subset(ideal, elems, chosen, depth + 1, i + 1, k) {
            return true;
        }
    }
    false
}

/// The complete right-ideal lattice of a finite ring, canonically ordered by
/// (dimension, basis), with containment, atoms, maximals, two-sided flags,
/// cores, socle and radical precomputed.
pub struct LatticeIndex {
    ring: Ring,
    ideals: Vec<RightIdeal>,
    pos: BTreeMap<Mat, u32>,
    /// leq[i] = set of j with ideals[i] ⊆ ideals[j].
    leq: Vec<BitSet>,
    /// geq[i] = set of j with ideals[j] ⊆ ideals[i].
    geq: Vec<BitSet>,
    atoms: Vec<u32>,
    maximals: Vec<u32>,
    two_sided: BitSet,
    cores: Vec<u32>,
    socle: u32,
    radical: u32,
    zero: u32,
    top: u32,
}

impl LatticeIndex {
    pub fn build(ring: &Ring, cap: u64) -> Result<LatticeIndex> {
        let n = ring.element_count();
        if n > cap as u128 {
            return Err(Error::CapExceeded { needed: n.min(u64::MAX as u128) as u64, cap });
        }
        let n = n as u64;

        let mut principals: BTreeSet<Mat> = BTreeSet::new();
        for idx in 0..n {
            let v = ring.elem_coeffs_at(idx);
            principals.insert(RightIdeal::from_generators(ring, &[v]).basis);
        }
        let principals: Vec<Mat> = principals.into_iter().collect();

        let zero_mat = Mat::zeros(0, ring.dim());
        let mut seen: BTreeSet<Mat> = BTreeSet::new();
        seen.insert(zero_mat.clone());
        let mut queue = vec![zero_mat];
        while let Some(m) = queue.pop() {
            for p in &principals {
                let s = linalg::row_space_sum(ring.field(), &m, p);
                if !seen.contains(&s) {
                    seen.insert(s.clone());
                    queue.push(s);
                }
            }
        }

        LatticeIndex::finish(ring, seen.into_iter().collect())
    }

    /// Rebuild the index from a previously enumerated set of ideal bases
    /// (for instance a cache). The bases must be the complete lattice in
    /// canonical reduced-row-echelon form; integrity is the caller's
    /// responsibility, though shape problems and missing endpoints are
    /// rejected and right-closure is spot-checked in debug builds.
    pub fn from_bases(ring: &Ring, bases: Vec<Mat>) -> Result<LatticeIndex> {
        let set: BTreeSet<Mat> = bases.into_iter().collect();
        for m in &set {
            if m.cols() != ring.dim() {
                return Err(Error::CacheFile(format!(
                    "lattice basis has {} columns, ring has dimension {}",
                    m.cols(),
                    ring.dim()
                )));
            }
            debug_assert!(
                (0..m.rows()).all(|r| {
                    let mut prod = vec![0u16; ring.dim()];
                    (0..ring.dim()).all(|j| {
                        let mut e = vec![0u16; ring.dim()];
                        e[j] = 1;
                        ring.mul_vec(m.row(r), &e, &mut prod);
                        linalg::in_row_space(ring.field(), &prod, m, &m.pivot_cols())
                    })
                }),
                "cached basis is not right-closed"
            );
        }
        if !set.contains(&Mat::zeros(0, ring.dim()))
            || !set.contains(&Mat::identity(ring.dim()))
        {
            return Err(Error::CacheFile(
                "lattice bases must include the zero and full ideals".into(),
            ));
        }
        LatticeIndex::finish(ring, set.into_iter().collect())
    }

    fn finish(ring: &Ring, bases: Vec<Mat>) -> Result<LatticeIndex> {
        let ideals: Vec<RightIdeal> = bases
            .into_iter()
            .map(|m| {
                let pivots = m.pivot_cols();
                RightIdeal { ring: ring.clone(), basis: m, pivots }
            })
            .collect();
        let count = ideals.len();
        let mut pos = BTreeMap::new();
        for (i, id) in ideals.iter().enumerate() {
            pos.insert(id.basis.clone(), i as u32);
        }

        let mut leq = vec![BitSet::new(count); count];
        let mut geq = vec![BitSet::new(count); count];
        for i in 0..count {
            for j in 0..count {
                if ideals[i].dim() <= ideals[j].dim() && ideals[j].contains_ideal(&ideals[i]) {
                    leq[i].set(j);
                    geq[j].set(i);
                }
            }
        }

        let zero = pos[&Mat::zeros(0, ring.dim())];
        let top = pos[&Mat::identity(ring.dim())];

        let atoms: Vec<u32> = (0..count as u32)
            .filter(|&i| i != zero && geq[i as usize].count() == 2)
            .collect();
        let maximals: Vec<u32> = (0..count as u32)
            .filter(|&i| i != top && leq[i as usize].count() == 2)
            .collect();

        let mut two_sided = BitSet::new(count);
        for (i, id) in ideals.iter().enumerate() {
            if id.is_two_sided() {
                two_sided.set(i);
            }
        }

        let cores: Vec<u32> = ideals.iter().map(|id| pos[&id.core().basis]).collect();

        let mut socle_ideal = RightIdeal::zero(ring);
        for &a in &atoms {
            socle_ideal = socle_ideal.sum(&ideals[a as usize]);
        }
        let socle = pos[&socle_ideal.basis];

        let mut radical_ideal = RightIdeal::full(ring);
        for &m in &maximals {
            radical_ideal = radical_ideal.intersect(&ideals[m as usize]);
        }
        let radical = pos[&radical_ideal.basis];
        debug_assert!(two_sided.get(radical as usize), "the radical is two-sided");

        Ok(LatticeIndex {
            ring: ring.clone(),
            ideals,
            pos,
            leq,
            geq,
            atoms,
            maximals,
            two_sided,
            cores,
            socle,
            radical,
            zero,
            top,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ideal(&self, i: u32) -> &RightIdeal {
        &self.ideals[i as usize]
    }

    pub fn ideals(&self) -> &[RightIdeal] {
        &self.ideals
    }

    pub fn index_of_basis(&self, m: &Mat) -> Option<u32> {
        self.pos.get(m).copied()
    }

    pub fn index_of(&self, ideal: &RightIdeal) -> Option<u32> {
        self.index_of_basis(&ideal.basis)
    }

    /// ideals[i] ⊆ ideals[j]?
    pub fn le(&self, i: u32, j: u32) -> bool {
        self.leq[i as usize].get(j as usize)
    }

    /// All j with ideals[i] ⊆ ideals[j].
    pub fn above(&self, i: u32) -> &BitSet {
        &self.leq[i as usize]
    }

    /// All j with ideals[j] ⊆ ideals[i].
    pub fn below(&self, i: u32) -> &BitSet {
        &self.geq[i as usize]
    }

    pub fn atoms(&self) -> &[u32] {
        &self.atoms
    }

    pub fn maximals(&self) -> &[u32] {
        &self.maximals
    }

    pub fn is_two_sided(&self, i: u32) -> bool {
        self.two_sided.get(i as usize)
    }

    pub fn two_sided_indices(&self) -> Vec<u32> {
        (0..self.len() as u32).filter(|&i| self.is_two_sided(i)).collect()
    }

    pub fn core_of(&self, i: u32) -> u32 {
        self.cores[i as usize]
    }

    pub fn socle(&self) -> u32 {
        self.socle
    }

    pub fn radical(&self) -> u32 {
        self.radical
    }

    pub fn zero(&self) -> u32 {
        self.zero
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    /// Essential ⟺ the ideal contains every atom ⟺ it contains the socle.
    pub fn is_essential(&self, i: u32) -> bool {
        self.le(self.socle, i)
    }

    pub fn is_direct_summand(&self, i: u32) -> bool {
        let d = self.ring.dim();
        let target = d - self.ideals[i as usize].dim();
        (0..self.len() as u32).any(|j| {
            self.ideals[j as usize].dim() == target
                && self.ideals[i as usize].intersect(&self.ideals[j as usize]).dim() == 0
                && self.ideals[i as usize].sum(&self.ideals[j as usize]).dim() == d
        })
    }

    pub fn proper_indices(&self) -> impl Iterator<Item = u32> + '_ {
        let top = self.top;
        (0..self.len() as u32).filter(move |&i| i != top)
    }
}

/// The quotient ring R/I for a two-sided ideal, on coset coordinates,
/// together with the projection (dim R × dim R/I) and section matrices.
pub fn quotient_ring(ring: &Ring, ideal: &RightIdeal) -> Result<(Ring, Mat, Mat)> {
    if !ideal.is_two_sided() {
        return Err(Error::NotTwoSided);
    }
    if !ideal.is_proper() {
        return Err(Error::NotProper);
    }
    let f = ring.field();
    let proj = ideal.coset_projection();
    let sect = ideal.coset_section();
    let dq = proj.cols();
    let mut structure = vec![vec![vec![0u16; dq]; dq]; dq];
    let mut prod = vec![0u16; ring.dim()];
    let mut reduced = vec![0u16; dq];
    for i in 0..dq {
        for j in 0..dq {
            ring.mul_vec(sect.row(i), sect.row(j), &mut prod);
            linalg::mul_row_mat(f, &prod, &proj, &mut reduced);
            structure[i][j] = reduced.clone();
        }
    }
    let mut unit = vec![0u16; dq];
    linalg::mul_row_mat(f, ring.unit_coeffs(), &proj, &mut unit);
    let q = Ring::new(
        f.clone(),
        structure,
        unit,
        format!("{}/I(dim {})", ring.name(), ideal.dim()),
    )?;
    Ok((q, proj, sect))
}

/// Exhaustive-subspace oracle: enumerate every subspace of the underlying
/// vector space in echelon form and keep those closed under right
/// multiplication. Independent of the BFS enumeration; used to verify it.
pub fn lattice_oracle(ring: &Ring, cap: u64) -> Result<Vec<Mat>> {
    let n = ring.element_count();
    if n > cap as u128 {
        return Err(Error::CapExceeded { needed: n.min(u64::MAX as u128) as u64, cap });
    }
    let d = ring.dim();
    let q = ring.field().q() as u16;
    let f = ring.field();
    let mut out = Vec::new();

    let mut pivots: Vec<usize> = Vec::new();
    let mut combos: Vec<Vec<usize>> = Vec::new();
    fn choose(d: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..d {
            cur.push(c);
            choose(d, k, c + 1, cur, out);
            cur.pop();
        }
    }

    for k in 0..=d {
        combos.clear();
        let mut cur = Vec::new();
        choose(d, k, 0, &mut cur, &mut combos);
        for combo in &combos {
            pivots.clear();
            pivots.extend_from_slice(combo);
            // Free cells: (row r, col c) with c > pivots[r] and c not a pivot.
            let mut free_cells: Vec<(usize, usize)> = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..d {
                    if !pivots.contains(&c) {
                        free_cells.push((r, c));
                    }
                }
            }
            let total = (q as u128).pow(free_cells.len() as u32);
            let mut counter = vec![0u16; free_cells.len()];
            for _ in 0..total {
                let mut m = Mat::zeros(k, d);
                for (r, &p) in pivots.iter().enumerate() {
                    m.set(r, p, 1);
                }
                for (cell, &(r, c)) in free_cells.iter().enumerate() {
                    m.set(r, c, counter[cell]);
                }
                // Closure under right multiplication by basis elements.
                let piv = pivots.clone();
                let mut closed = true;
                let mut prod = vec![0u16; d];
                'rows: for r in 0..k {
                    for rm in ring.right_mats() {
                        linalg::mul_row_mat(f, m.row(r), rm, &mut prod);
                        if !linalg::in_row_space(f, &prod, &m, &piv) {
                            closed = false;
                            break 'rows;
                        }
                    }
                }
                if closed {
                    out.push(m);
                }
                // Increment odometer.
                for c in counter.iter_mut() {
                    *c += 1;
                    if *c < q {
                        break;
                    }
                    *c = 0;
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::ring::Ring;

    /// Upper triangular 2x2 over GF(2), basis E11, E12, E22.
    fn ut2_gf2() -> Ring {
        let f = FiniteField::new(2, 1, None).unwrap();
        // Indices: 0 = E11, 1 = E12, 2 = E22.
        let mut s = vec![vec![vec![0u16; 3]; 3]; 3];
        s[0][0][0] = 1; // E11·E11 = E11
        s[0][1][1] = 1; // E11·E12 = E12
        s[1][2][1] = 1; // E12·E22 = E12
        s[2][2][2] = 1; // E22·E22 = E22
        Ring::new(f, s, vec![1, 0, 1], "ut2_gf2").unwrap()
    }

    /// GF(2)[x]/(x^2), basis 1, x.
    fn trunc2() -> Ring {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut s = vec![vec![vec![0u16; 2]; 2]; 2];
        s[0][0][0] = 1;
        s[0][1][1] = 1;
        s[1][0][1] = 1;
        // x·x = 0
        Ring::new(f, s, vec![1, 0], "trunc_gf2_2").unwrap()
    }

    #[test]
    fn ut2_lattice_census() {
        // Seven right ideals: every line inside span{E12,E22} is one, since
        // (aE12+bE22)·E11 = 0, ·E12 = 0, ·E22 = aE12+bE22.
        let r = ut2_gf2();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        assert_eq!(lat.len(), 7);
        assert_eq!(lat.maximals().len(), 2);
        assert_eq!(lat.atoms().len(), 3);
        // Radical is span{E12}.
        let rad = lat.ideal(lat.radical());
        assert_eq!(rad.dim(), 1);
        assert!(rad.contains_vec(&[0, 1, 0]));
        // Socle is span{E12, E22}.
        let soc = lat.ideal(lat.socle());
        assert_eq!(soc.dim(), 2);
        assert!(soc.contains_vec(&[0, 0, 1]));
    }

    #[test]
    fn bfs_matches_subspace_oracle_on_ut2() {
        let r = ut2_gf2();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        let oracle = lattice_oracle(&r, 256).unwrap();
        let bfs: Vec<Mat> = lat.ideals().iter().map(|i| i.basis().clone()).collect();
        assert_eq!(bfs, oracle);
    }

    #[test]
    fn preimage_in_truncated_polynomials() {
        // x⁻¹(0) = (x) in GF(2)[x]/(x²).
        let r = trunc2();
        let zero = RightIdeal::zero(&r);
        let pre = zero.preimage(&[0, 1]);
        assert_eq!(pre.dim(), 1);
        assert!(pre.contains_vec(&[0, 1]));
        // 1⁻¹(0) = 0, and 0⁻¹(0) = R.
        assert_eq!(zero.preimage(&[1, 0]).dim(), 0);
        assert_eq!(zero.preimage(&[0, 0]).dim(), 2);
    }

    #[test]
    fn idealizer_and_core_in_ut2() {
        let r = ut2_gf2();
        // P = span{E22}: idealizer is the diagonal subring, core is 0.
        let p = RightIdeal::from_generators(&r, &[vec![0, 0, 1]]);
        assert_eq!(p.dim(), 1);
        let idzr = p.idealizer();
        assert_eq!(idzr.rows(), 2);
        assert!(linalg::in_row_space(r.field(), &[1, 0, 0], &idzr, &idzr.pivot_cols()));
        assert!(linalg::in_row_space(r.field(), &[0, 0, 1], &idzr, &idzr.pivot_cols()));
        assert_eq!(p.core().dim(), 0);
        // span{E12} is two-sided, so its core is itself.
        let j = RightIdeal::from_generators(&r, &[vec![0, 1, 0]]);
        assert!(j.is_two_sided());
        assert_eq!(j.core(), j);
        assert!(!p.is_two_sided());
    }

    #[test]
    fn from_generators_closes_under_multiplication() {
        let r = ut2_gf2();
        // E11 generates the full first row.
        let i = RightIdeal::from_generators(&r, &[vec![1, 0, 0]]);
        assert_eq!(i.dim(), 2);
        assert!(i.contains_vec(&[0, 1, 0]));
        assert!(!i.contains_vec(&[0, 0, 1]));
    }

    #[test]
    fn mu_counts_minimal_generators() {
        let r = ut2_gf2();
        let e11r = RightIdeal::from_generators(&r, &[vec![1, 0, 0]]);
        assert_eq!(e11r.mu(4096).unwrap(), 1);
        let soc = RightIdeal::from_generators(&r, &[vec![0, 1, 0], vec![0, 0, 1]]);
        // Right multiples of any single socle element span at most one
        // dimension here, so two generators are needed.
        assert_eq!(soc.mu(4096).unwrap(), 2);
    }

    #[test]
    fn oracle_rejects_cap_violation() {
        let r = ut2_gf2();
        assert!(matches!(lattice_oracle(&r, 4), Err(Error::CapExceeded { .. })));
    }
}
