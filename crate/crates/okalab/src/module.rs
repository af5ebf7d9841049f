//! Finite right modules over a finite ring: homs, endomorphism rings,
//! submodule lattices, injectivity and projectivity, monoform and density
//! tests, point annihilators, torsion sets, and tensor injectivity.
//!
//! A module of dimension `m` over the base field is given by one `m×m`
//! action matrix per ring basis element; compatibility with the structure
//! constants and the unit law are verified at construction. Left modules
//! carry the mirrored compatibility law and exist for the tensor check.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ideal::{LatticeIndex, RightIdeal};
use crate::linalg::{self, Mat};
use crate::ring::Ring;

#[derive(Clone)]
pub struct FiniteModule {
    ring: Ring,
    dim: usize,
    actions: Vec<Mat>,
    name: String,
    /// Module coordinates of a marked generator, for cyclic modules.
    generator: Option<Vec<u16>>,
}

impl std::fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteModule({}, dim {})", self.name, self.dim)
    }
}

impl FiniteModule {
    pub fn new(ring: &Ring, actions: Vec<Mat>, name: impl Into<String>) -> Result<FiniteModule> {
        let d = ring.dim();
        if actions.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: actions.len() });
        }
        let m = if d > 0 { actions[0].rows() } else { 0 };
        for a in &actions {
            if a.rows() != m || a.cols() != m {
                return Err(Error::DimensionMismatch { expected: m, got: a.rows().max(a.cols()) });
            }
        }
        let f = ring.field();
        // Unit law: the action of 1 is the identity.
        let mut unit_action = Mat::zeros(m, m);
        for (j, &u) in ring.unit_coeffs().iter().enumerate() {
            if u != 0 {
                let scaled = linalg::mat_scale(f, &actions[j], FieldElement(u));
                unit_action = linalg::mat_add(f, &unit_action, &scaled);
            }
        }
        if unit_action != Mat::identity(m) {
            return Err(Error::BadUnit(0));
        }
        // Compatibility: action(e_i·e_j) = action(e_i)·action(e_j).
        for i in 0..d {
            for j in 0..d {
                let mut lhs = Mat::zeros(m, m);
                for k in 0..d {
                    let c = ring.structure_const(i, j)[k];
                    if c != 0 {
                        lhs = linalg::mat_add(f, &lhs, &linalg::mat_scale(f, &actions[k], FieldElement(c)));
                    }
                }
                let rhs = linalg::mat_mul(f, &actions[i], &actions[j]);
                if lhs != rhs {
                    return Err(Error::NotAssociative { i, j, k: usize::MAX });
                }
            }
        }
        Ok(FiniteModule { ring: ring.clone(), dim: m, actions, name: name.into(), generator: None })
    }

    /// The regular module R_R.
    pub fn regular(ring: &Ring) -> FiniteModule {
        FiniteModule {
            ring: ring.clone(),
            dim: ring.dim(),
            actions: ring.right_mats().to_vec(),
            name: format!("{}_reg", ring.name()),
            generator: Some(ring.unit_coeffs().to_vec()),
        }
    }

    /// The cyclic module R/I on coset coordinates, with the coset of 1 as
    /// marked generator. `ann(generator) = I` is asserted.
    pub fn cyclic(ring: &Ring, ideal: &RightIdeal) -> FiniteModule {
        let f = ring.field();
        let proj = ideal.coset_projection();
        let sect = ideal.coset_section();
        let actions: Vec<Mat> = ring
            .right_mats()
            .iter()
            .map(|rm| linalg::mat_mul(f, &linalg::mat_mul(f, &sect, rm), &proj))
            .collect();
        let mut gen = vec![0u16; proj.cols()];
        linalg::mul_row_mat(f, ring.unit_coeffs(), &proj, &mut gen);
        let m = FiniteModule {
            ring: ring.clone(),
            dim: proj.cols(),
            actions,
            name: format!("{}/I(dim {})", ring.name(), ideal.dim()),
            generator: Some(gen.clone()),
        };
        debug_assert_eq!(m.annihilator_of(&gen).basis(), ideal.basis());
        m
    }

    /// A right ideal viewed as a module in its own coordinates.
    pub fn from_ideal(ideal: &RightIdeal) -> FiniteModule {
        let ring = ideal.ring().clone();
        let f = ring.field();
        let k = ideal.dim();
        let mut actions = Vec::with_capacity(ring.dim());
        let mut prod = vec![0u16; ring.dim()];
        for rm in ring.right_mats() {
            let mut a = Mat::zeros(k, k);
            for r in 0..k {
                linalg::mul_row_mat(f, ideal.basis().row(r), rm, &mut prod);
                let coords = linalg::coords_in_rref(f, &prod, ideal.basis(), ideal.pivots())
                    .expect("right ideals are closed under right multiplication");
                for c in 0..k {
                    a.set(r, c, coords[c]);
                }
            }
            actions.push(a);
        }
        FiniteModule {
            ring,
            dim: k,
            actions,
            name: format!("ideal(dim {})", k),
            generator: None,
        }
    }

    pub fn zero_module(ring: &Ring) -> FiniteModule {
        FiniteModule {
            ring: ring.clone(),
            dim: 0,
            actions: vec![Mat::zeros(0, 0); ring.dim()],
            name: "0".into(),
            generator: None,
        }
    }

    pub fn direct_sum(&self, other: &FiniteModule) -> FiniteModule {
        assert!(self.ring.same_ring(&other.ring));
        let m = self.dim + other.dim;
        let actions: Vec<Mat> = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                let mut s = Mat::zeros(m, m);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        s.set(r, c, a.get(r, c));
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        s.set(self.dim + r, self.dim + c, b.get(r, c));
                    }
                }
                s
            })
            .collect();
        FiniteModule {
            ring: self.ring.clone(),
            dim: m,
            actions,
            name: format!("{} ⊕ {}", self.name, other.name),
            generator: None,
        }
    }

    /// Restrict to an action-closed subspace given by an rref basis.
    pub fn submodule_module(&self, basis: &Mat) -> FiniteModule {
        let f = self.ring.field();
        let k = basis.rows();
        let pivots = basis.pivot_cols();
        let mut prod = vec![0u16; self.dim];
        let actions: Vec<Mat> = self
            .actions
            .iter()
            .map(|a| {
                let mut s = Mat::zeros(k, k);
                for r in 0..k {
                    linalg::mul_row_mat(f, basis.row(r), a, &mut prod);
                    let coords = linalg::coords_in_rref(f, &prod, basis, &pivots)
                        .expect("subspace is not action-closed");
                    for c in 0..k {
                        s.set(r, c, coords[c]);
                    }
                }
                s
            })
            .collect();
        FiniteModule {
            ring: self.ring.clone(),
            dim: k,
            actions,
            name: format!("{}|sub(dim {})", self.name, k),
            generator: None,
        }
    }

    /// Quotient by an action-closed subspace.
    pub fn quotient_module(&self, basis: &Mat) -> FiniteModule {
        let f = self.ring.field();
        let pivots = basis.pivot_cols();
        let d = self.dim;
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let mut proj = Mat::zeros(d, free.len());
        let mut row = vec![0u16; d];
        for j in 0..d {
            row.fill(0);
            row[j] = 1;
            linalg::reduce_row(f, &mut row, basis, &pivots);
            for (k, &c) in free.iter().enumerate() {
                proj.set(j, k, row[c]);
            }
        }
        let mut sect = Mat::zeros(free.len(), d);
        for (k, &c) in free.iter().enumerate() {
            sect.set(k, c, 1);
        }
        let actions: Vec<Mat> = self
            .actions
            .iter()
            .map(|a| linalg::mat_mul(f, &linalg::mat_mul(f, &sect, a), &proj))
            .collect();
        FiniteModule {
            ring: self.ring.clone(),
            dim: free.len(),
            actions,
            name: format!("{}/sub(dim {})", self.name, basis.rows()),
            generator: None,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Mat] {
        &self.actions
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator(&self) -> Option<&[u16]> {
        self.generator.as_deref()
    }

    pub fn element_count(&self) -> u128 {
        (self.ring.field().q() as u128).pow(self.dim as u32)
    }

    /// Module coordinates of the element with the given canonical index
    /// (coordinate 0 most significant).
    pub fn elem_at(&self, idx: u64) -> Vec<u16> {
        let q = self.ring.field().q();
        let mut v = vec![0u16; self.dim];
        let mut n = idx;
        for c in v.iter_mut().rev() {
            *c = (n % q) as u16;
            n /= q;
        }
        v
    }

    /// The action matrix of an arbitrary ring element.
    pub fn elem_action(&self, x: &[u16]) -> Mat {
        let f = self.ring.field();
        let mut a = Mat::zeros(self.dim, self.dim);
        for (j, &c) in x.iter().enumerate() {
            if c != 0 {
                a = linalg::mat_add(f, &a, &linalg::mat_scale(f, &self.actions[j], FieldElement(c)));
            }
        }
        a
    }

    /// Apply a ring element to a module element.
    pub fn act(&self, v: &[u16], x: &[u16]) -> Vec<u16> {
        let f = self.ring.field();
        let a = self.elem_action(x);
        let mut out = vec![0u16; self.dim];
        linalg::mul_row_mat(f, v, &a, &mut out);
        out
    }

    /// Orbit map of a module element: the `d×m` matrix with row k = v·e_k.
    pub fn orbit_map(&self, v: &[u16]) -> Mat {
        let f = self.ring.field();
        let mut m = Mat::zeros(self.ring.dim(), self.dim);
        let mut row = vec![0u16; self.dim];
        for k in 0..self.ring.dim() {
            linalg::mul_row_mat(f, v, &self.actions[k], &mut row);
            for c in 0..self.dim {
                m.set(k, c, row[c]);
            }
        }
        m
    }

    /// The cyclic submodule v·R as an rref subspace basis.
    pub fn cyclic_submodule(&self, v: &[u16]) -> Mat {
        linalg::row_space(self.ring.field(), &self.orbit_map(v))
    }

    /// ann(v) = { r : v·r = 0 }, a right ideal.
    pub fn annihilator_of(&self, v: &[u16]) -> RightIdeal {
        let kernel = linalg::row_kernel(self.ring.field(), &self.orbit_map(v));
        RightIdeal::from_closed_basis(&self.ring, kernel)
    }

    /// v⁻¹N = { r : v·r ∈ N } for a subspace N, a right ideal.
    pub fn preimage_of(&self, v: &[u16], sub: &Mat) -> RightIdeal {
        let f = self.ring.field();
        let pivots = sub.pivot_cols();
        let d = self.dim;
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let mut proj = Mat::zeros(d, free.len());
        let mut row = vec![0u16; d];
        for j in 0..d {
            row.fill(0);
            row[j] = 1;
            linalg::reduce_row(f, &mut row, sub, &pivots);
            for (k, &c) in free.iter().enumerate() {
                proj.set(j, k, row[c]);
            }
        }
        let m = linalg::mat_mul(f, &self.orbit_map(v), &proj);
        let basis = linalg::row_kernel(f, &m);
        RightIdeal::from_closed_basis(&self.ring, basis)
    }

    /// M·I for a right ideal I, as an rref subspace (always a submodule when
    /// I is two-sided; in general the span of {m·x : x ∈ I}).
    pub fn times_ideal(&self, ideal: &RightIdeal) -> Mat {
        let f = self.ring.field();
        let mut stacked = Mat::zeros(0, self.dim);
        for r in 0..ideal.dim() {
            let a = self.elem_action(ideal.basis().row(r));
            for row in 0..a.rows() {
                stacked.push_row(a.row(row));
            }
        }
        linalg::row_space(f, &stacked)
    }

    /// All action-closed subspaces, via the same closure BFS as the
    /// right-ideal lattice, sorted canonically by (dim, basis).
    pub fn submodules(&self, cap: u64) -> Result<Vec<Mat>> {
        let n = self.element_count();
        if n > cap as u128 {
            return Err(Error::CapExceeded { needed: n.min(u64::MAX as u128) as u64, cap });
        }
        let f = self.ring.field();
        let mut principals: std::collections::BTreeSet<Mat> = std::collections::BTreeSet::new();
        for idx in 0..n as u64 {
            principals.insert(self.cyclic_submodule(&self.elem_at(idx)));
        }
        let principals: Vec<Mat> = principals.into_iter().collect();
        let zero = Mat::zeros(0, self.dim);
        let mut seen: std::collections::BTreeSet<Mat> = std::collections::BTreeSet::new();
        seen.insert(zero.clone());
        let mut queue = vec![zero];
        while let Some(m) = queue.pop() {
            for p in &principals {
                let s = linalg::row_space_sum(f, &m, p);
                if !seen.contains(&s) {
                    seen.insert(s.clone());
                    queue.push(s);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Minimal nonzero submodules among the given list.
    pub fn atoms_of(&self, subs: &[Mat]) -> Vec<usize> {
        let f = self.ring.field();
        let mut atoms = Vec::new();
        'outer: for (i, s) in subs.iter().enumerate() {
            if s.rows() == 0 {
                continue;
            }
            for (j, t) in subs.iter().enumerate() {
                if j != i && t.rows() > 0 && t.rows() < s.rows() && mat_subspace_le(f, t, s) {
                    continue 'outer;
                }
            }
            atoms.push(i);
        }
        atoms
    }

    pub fn is_simple(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        // Simple ⟺ every nonzero element generates.
        for idx in 1..self.element_count() as u64 {
            let v = self.elem_at(idx);
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            if self.cyclic_submodule(&v).rows() != self.dim {
                return false;
            }
        }
        true
    }

    /// Exactly one minimal nonzero submodule.
    pub fn is_uniform(&self, cap: u64) -> Result<bool> {
        if self.dim == 0 {
            return Ok(false);
        }
        let subs = self.submodules(cap)?;
        Ok(self.atoms_of(&subs).len() == 1)
    }
}

/// Basis of Hom_R(M, N) as matrices, from the intertwining linear system.
pub fn hom_space(m: &FiniteModule, n: &FiniteModule) -> Vec<Mat> {
    assert!(m.ring.same_ring(&n.ring));
    let f = m.ring.field();
    let (mm, nn) = (m.dim, n.dim);
    if mm == 0 || nn == 0 {
        return Vec::new();
    }
    let d = m.ring.dim();
    let unknowns = mm * nn;
    let equations = d * mm * nn;
    let mut cm = Mat::zeros(unknowns, equations);
    for j in 0..d {
        let am = &m.actions[j];
        let an = &n.actions[j];
        for r in 0..mm {
            for c in 0..nn {
                let eq = (j * mm + r) * nn + c;
                for s in 0..mm {
                    let coeff = am.get(r, s);
                    if coeff != 0 {
                        let u = s * nn + c;
                        cm.set(u, eq, f.add(FieldElement(cm.get(u, eq)), FieldElement(coeff)).0);
                    }
                }
                for t in 0..nn {
                    let coeff = an.get(t, c);
                    if coeff != 0 {
                        let u = r * nn + t;
                        cm.set(u, eq, f.sub(FieldElement(cm.get(u, eq)), FieldElement(coeff)).0);
                    }
                }
            }
        }
    }
    let sols = linalg::row_kernel(f, &cm);
    (0..sols.rows())
        .map(|r| {
            let mut h = Mat::zeros(mm, nn);
            for s in 0..mm {
                for c in 0..nn {
                    h.set(s, c, sols.row(r)[s * nn + c]);
                }
            }
            h
        })
        .collect()
}

/// Endomorphism ring of a nonzero module, with multiplication given by
/// composition in right-operator order (apply the first matrix, then the
/// second).
pub fn end_ring(m: &FiniteModule) -> Result<Ring> {
    if m.dim == 0 {
        return Err(Error::NotProper);
    }
    let f = m.ring.field();
    let homs = hom_space(m, m);
    let h = homs.len();
    // Vectorized hom basis for coordinate extraction.
    let mut vecbasis = Mat::zeros(h, m.dim * m.dim);
    for (r, hm) in homs.iter().enumerate() {
        for s in 0..m.dim {
            for c in 0..m.dim {
                vecbasis.set(r, s * m.dim + c, hm.get(s, c));
            }
        }
    }
    let mut vb = vecbasis.clone();
    let piv = linalg::rref(f, &mut vb);
    debug_assert_eq!(vb.rows(), h, "hom basis from the kernel solver is independent");
    let coords = |mat: &Mat| -> Vec<u16> {
        let mut v = vec![0u16; m.dim * m.dim];
        for s in 0..m.dim {
            for c in 0..m.dim {
                v[s * m.dim + c] = mat.get(s, c);
            }
        }
        linalg::coords_in_rref(f, &v, &vb, &piv).expect("composition stays inside End")
    };
    // The kernel solver returns an rref basis, so vb should equal vecbasis;
    // coords are computed against vb to be safe.
    let mut structure = vec![vec![vec![0u16; h]; h]; h];
    for a in 0..h {
        for b in 0..h {
            let comp = linalg::mat_mul(f, &homs[a], &homs[b]);
            structure[a][b] = coords(&comp);
        }
    }
    let unit = coords(&Mat::identity(m.dim));
    Ring::new(f.clone(), structure, unit, format!("End({})", m.name))
}

/// Baer criterion as a dimension comparison: for every right ideal I,
/// dim Hom(I, M) must equal dim M − dim Hom(R/I, M).
pub fn is_injective(m: &FiniteModule, lat: &LatticeIndex) -> bool {
    if m.dim == 0 {
        return true;
    }
    let d = m.ring.dim();
    for i in 0..lat.len() as u32 {
        let ideal = lat.ideal(i);
        if ideal.dim() == 0 || ideal.dim() == d {
            continue;
        }
        let imod = FiniteModule::from_ideal(ideal);
        let qmod = FiniteModule::cyclic(&m.ring, ideal);
        let hom_i = hom_space(&imod, m).len();
        let hom_q = hom_space(&qmod, m).len();
        if hom_i != m.dim.checked_sub(hom_q).unwrap_or(0) || hom_q > m.dim {
            return false;
        }
    }
    true
}

/// N is dense in M: for every intermediate U with N ⊆ U ⊆ M,
/// Hom(U/N, M) = 0. `subs` must be the full submodule list of M.
pub fn is_dense_submodule(n: &Mat, m: &FiniteModule, subs: &[Mat]) -> bool {
    let f = m.ring.field();
    for u in subs {
        if u.rows() < n.rows() || !mat_subspace_le(f, n, u) {
            continue;
        }
        if u.rows() == n.rows() {
            continue;
        }
        let umod = m.submodule_module(u);
        // Express N in U coordinates.
        let upiv = u.pivot_cols();
        let mut n_in_u = Mat::zeros(0, u.rows());
        for r in 0..n.rows() {
            let coords = linalg::coords_in_rref(f, n.row(r), u, &upiv).expect("N ⊆ U");
            n_in_u.push_row(&coords);
        }
        let mut reduced = n_in_u.clone();
        linalg::rref(f, &mut reduced);
        let quot = umod.quotient_module(&reduced);
        if !hom_space(&quot, m).is_empty() {
            return false;
        }
    }
    true
}

/// Elementwise density: for all y ∈ M, no nonzero x kills y⁻¹N.
pub fn is_dense_submodule_elementwise(n: &Mat, m: &FiniteModule) -> bool {
    let f = m.ring.field();
    for yidx in 0..m.element_count() as u64 {
        let y = m.elem_at(yidx);
        let j = m.preimage_of(&y, n);
        if joint_kernel_nonzero(f, m, &j) {
            return false;
        }
    }
    true
}

/// Is there a nonzero x ∈ M with x·J = 0?
fn joint_kernel_nonzero(
    f: &crate::field::FiniteField,
    m: &FiniteModule,
    j: &RightIdeal,
) -> bool {
    if m.dim == 0 {
        return false;
    }
    if j.dim() == 0 {
        // x·0 = 0 for every x, so any nonzero x witnesses.
        return true;
    }
    let mut stacked = Mat::zeros(m.dim, j.dim() * m.dim);
    for (t, r) in (0..j.dim()).enumerate() {
        let a = m.elem_action(j.basis().row(r));
        for row in 0..m.dim {
            for col in 0..m.dim {
                stacked.set(row, t * m.dim + col, a.get(row, col));
            }
        }
    }
    linalg::row_kernel(f, &stacked).rows() > 0
}

pub fn mat_subspace_le(f: &crate::field::FiniteField, small: &Mat, big: &Mat) -> bool {
    let piv = big.pivot_cols();
    (0..small.rows()).all(|r| linalg::in_row_space(f, small.row(r), big, &piv))
}

/// Outcome of the two monoform routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoformVerdict {
    pub monoform: bool,
    /// Whether the elementwise route also ran (within budget) and agreed.
    pub elementwise_ran: bool,
}

/// Monoform test for a nonzero module. Route (a): every nonzero submodule is
/// dense (hom criterion). Route (b): for all x, z ≠ 0 and all y,
/// x·y⁻¹(zR) ≠ 0, run when |M|³ fits the triple budget. Both routes are
/// asserted to agree when both run.
pub fn is_monoform(m: &FiniteModule, sub_cap: u64, triple_budget: u64) -> Result<MonoformVerdict> {
    assert!(m.dim > 0, "monoform is defined for nonzero modules");
    let subs = m.submodules(sub_cap)?;
    let mut route_a = true;
    'outer: for n in &subs {
        if n.rows() == 0 {
            continue;
        }
        if !is_dense_submodule(n, m, &subs) {
            route_a = false;
            break 'outer;
        }
    }

    let count = m.element_count();
    let triples = count.saturating_mul(count).saturating_mul(count);
    let mut elementwise_ran = false;
    if triples <= triple_budget as u128 {
        elementwise_ran = true;
        let f = m.ring.field();
        let mut route_b = true;
        'pairs: for yidx in 0..count as u64 {
            let y = m.elem_at(yidx);
            for zidx in 1..count as u64 {
                let z = m.elem_at(zidx);
                if z.iter().all(|&c| c == 0) {
                    continue;
                }
                let zr = m.cyclic_submodule(&z);
                let j = m.preimage_of(&y, &zr);
                if joint_kernel_nonzero(f, m, &j) {
                    route_b = false;
                    break 'pairs;
                }
            }
        }
        assert_eq!(route_a, route_b, "monoform routes disagree on {}", m.name);
    }
    Ok(MonoformVerdict { monoform: route_a, elementwise_ran })
}

/// Does M embed in V? Deterministic exhaustive scan over the hom space.
pub fn embeds_in(m: &FiniteModule, v: &FiniteModule, scan_budget: u64) -> Result<bool> {
    if m.dim == 0 {
        return Ok(true);
    }
    if m.dim > v.dim {
        return Ok(false);
    }
    let f = m.ring.field();
    let homs = hom_space(m, v);
    let h = homs.len();
    let total = (f.q() as u128).pow(h as u32);
    if total > scan_budget as u128 {
        return Err(Error::ScanBudget { needed: total.min(u64::MAX as u128) as u64, budget: scan_budget });
    }
    let mut combo = vec![0u16; h];
    for idx in 1..total as u64 {
        let mut nidx = idx;
        for c in combo.iter_mut().rev() {
            *c = (nidx % f.q()) as u16;
            nidx /= f.q();
        }
        let mut cand = Mat::zeros(m.dim, v.dim);
        for (a, &lam) in combo.iter().enumerate() {
            if lam != 0 {
                cand = linalg::mat_add(f, &cand, &linalg::mat_scale(f, &homs[a], FieldElement(lam)));
            }
        }
        if linalg::rank(f, &cand) == m.dim {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All point annihilators {ann(v) : v ≠ 0} of M, deduplicated.
pub fn point_annihilators(m: &FiniteModule, cap: u64) -> Result<Vec<RightIdeal>> {
    let count = m.element_count();
    if count > cap as u128 {
        return Err(Error::CapExceeded { needed: count.min(u64::MAX as u128) as u64, cap });
    }
    let mut seen: std::collections::BTreeSet<Mat> = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for idx in 1..count as u64 {
        let v = m.elem_at(idx);
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        let ann = m.annihilator_of(&v);
        if seen.insert(ann.basis().clone()) {
            out.push(ann);
        }
    }
    Ok(out)
}

/// Maximal members of the point annihilator set under containment.
pub fn maximal_point_annihilators(m: &FiniteModule, cap: u64) -> Result<Vec<RightIdeal>> {
    let anns = point_annihilators(m, cap)?;
    let mut out = Vec::new();
    'outer: for (i, a) in anns.iter().enumerate() {
        for (j, b) in anns.iter().enumerate() {
            if i != j && b.dim() > a.dim() && b.contains_ideal(a) {
                continue 'outer;
            }
        }
        out.push(a.clone());
    }
    Ok(out)
}

/// Ring elements z for which some nonzero m ∈ M has m·z = 0, i.e. those
/// whose action matrix is singular on M.
pub fn zero_divisors_on(m: &FiniteModule, cap: u64) -> Result<Vec<Vec<u16>>> {
    let n = m.ring.element_count();
    if n > cap as u128 {
        return Err(Error::CapExceeded { needed: n.min(u64::MAX as u128) as u64, cap });
    }
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    let f = m.ring.field();
    let mut out = Vec::new();
    for idx in 0..n as u64 {
        let z = m.ring.elem_coeffs_at(idx);
        let a = m.elem_action(&z);
        if linalg::rank(f, &a) < m.dim {
            out.push(z);
        }
    }
    Ok(out)
}

/// The torsion subset of M for a list of ring elements (a multiplicative
/// set) or, via `torsion_by_family`, an ideal family.
pub struct TorsionSet {
    pub element_indices: Vec<u64>,
    pub is_subspace: bool,
    pub is_submodule: bool,
    pub span: Mat,
}

pub fn torsion_by_set(m: &FiniteModule, s: &[Vec<u16>], cap: u64) -> Result<TorsionSet> {
    let count = m.element_count();
    if count > cap as u128 {
        return Err(Error::CapExceeded { needed: count.min(u64::MAX as u128) as u64, cap });
    }
    let f = m.ring.field();
    let mats: Vec<Mat> = s.iter().map(|x| m.elem_action(x)).collect();
    let mut indices = Vec::new();
    let mut members = Mat::zeros(0, m.dim);
    let mut prod = vec![0u16; m.dim];
    for idx in 0..count as u64 {
        let v = m.elem_at(idx);
        let torsion = mats.iter().any(|a| {
            linalg::mul_row_mat(f, &v, a, &mut prod);
            prod.iter().all(|&c| c == 0)
        });
        if torsion {
            indices.push(idx);
            members.push_row(&v);
        }
    }
    finish_torsion_set(m, indices, members)
}

pub fn torsion_by_family(
    m: &FiniteModule,
    lat: &LatticeIndex,
    members: &BitSet,
    cap: u64,
) -> Result<TorsionSet> {
    let count = m.element_count();
    if count > cap as u128 {
        return Err(Error::CapExceeded { needed: count.min(u64::MAX as u128) as u64, cap });
    }
    let mut indices = Vec::new();
    let mut span_rows = Mat::zeros(0, m.dim);
    for idx in 0..count as u64 {
        let v = m.elem_at(idx);
        let ann = m.annihilator_of(&v);
        let pos = lat.index_of(&ann).expect("annihilators are right ideals in the lattice");
        if members.get(pos as usize) {
            indices.push(idx);
            span_rows.push_row(&v);
        }
    }
    finish_torsion_set(m, indices, span_rows)
}

fn finish_torsion_set(m: &FiniteModule, indices: Vec<u64>, members: Mat) -> Result<TorsionSet> {
    let f = m.ring.field();
    let span = linalg::row_space(f, &members);
    let q = f.q() as u128;
    let is_subspace = q.pow(span.rows() as u32) == indices.len() as u128;
    let mut is_submodule = is_subspace;
    if is_subspace {
        let piv = span.pivot_cols();
        let mut prod = vec![0u16; m.dim];
        'check: for r in 0..span.rows() {
            for a in &m.actions {
                linalg::mul_row_mat(f, span.row(r), a, &mut prod);
                if !linalg::in_row_space(f, &prod, &span, &piv) {
                    is_submodule = false;
                    break 'check;
                }
            }
        }
    }
    Ok(TorsionSet { element_indices: indices, is_subspace, is_submodule, span })
}

/// Left modules, for the tensor-injectivity check.
#[derive(Clone)]
pub struct LeftModule {
    ring: Ring,
    dim: usize,
    /// actions[k]: v ↦ e_k · v.
    actions: Vec<Mat>,
    name: String,
}

impl LeftModule {
    pub fn new(ring: &Ring, actions: Vec<Mat>, name: impl Into<String>) -> Result<LeftModule> {
        let d = ring.dim();
        if actions.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: actions.len() });
        }
        let m = if d > 0 { actions[0].rows() } else { 0 };
        let f = ring.field();
        let mut unit_action = Mat::zeros(m, m);
        for (j, &u) in ring.unit_coeffs().iter().enumerate() {
            if u != 0 {
                unit_action = linalg::mat_add(f, &unit_action, &linalg::mat_scale(f, &actions[j], FieldElement(u)));
            }
        }
        if unit_action != Mat::identity(m) {
            return Err(Error::BadUnit(0));
        }
        // (e_i e_j)·v = e_i·(e_j·v): in row convention, L(e_i e_j) = L_j·L_i.
        for i in 0..d {
            for j in 0..d {
                let mut lhs = Mat::zeros(m, m);
                for k in 0..d {
                    let c = ring.structure_const(i, j)[k];
                    if c != 0 {
                        lhs = linalg::mat_add(f, &lhs, &linalg::mat_scale(f, &actions[k], FieldElement(c)));
                    }
                }
                let rhs = linalg::mat_mul(f, &actions[j], &actions[i]);
                if lhs != rhs {
                    return Err(Error::NotAssociative { i, j, k: usize::MAX });
                }
            }
        }
        Ok(LeftModule { ring: ring.clone(), dim: m, actions, name: name.into() })
    }

    pub fn left_regular(ring: &Ring) -> LeftModule {
        LeftModule {
            ring: ring.clone(),
            dim: ring.dim(),
            actions: ring.left_mats().to_vec(),
            name: format!("{}_leftreg", ring.name()),
        }
    }

    /// R/I as a left module, for a two-sided ideal I.
    pub fn left_quotient(ring: &Ring, ideal: &RightIdeal) -> Result<LeftModule> {
        if !ideal.is_two_sided() {
            return Err(Error::NotTwoSided);
        }
        let f = ring.field();
        let proj = ideal.coset_projection();
        let sect = ideal.coset_section();
        let actions: Vec<Mat> = ring
            .left_mats()
            .iter()
            .map(|lm| linalg::mat_mul(f, &linalg::mat_mul(f, &sect, lm), &proj))
            .collect();
        LeftModule::new(ring, actions, format!("{}/I as left", ring.name()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Left action of an arbitrary ring element: v ↦ x·v.
    pub fn elem_action(&self, x: &[u16]) -> Mat {
        let f = self.ring.field();
        let mut a = Mat::zeros(self.dim, self.dim);
        for (k, &c) in x.iter().enumerate() {
            if c != 0 {
                a = linalg::mat_add(f, &a, &linalg::mat_scale(f, &self.actions[k], FieldElement(c)));
            }
        }
        a
    }
}

/// Is the natural map I ⊗_R N → N injective? Build I ⊗_field N modulo the
/// relations (x·r)⊗n − x⊗(r·n); the map is injective exactly when the
/// kernel of the induced linear map equals the relation space.
pub fn tensor_injectivity(ideal: &RightIdeal, n: &LeftModule) -> bool {
    assert!(ideal.ring().same_ring(n.ring()));
    let f = ideal.ring().field();
    let a = ideal.dim();
    let b = n.dim();
    if a == 0 || b == 0 {
        return true;
    }
    let d = ideal.ring().dim();
    let mut relations = Mat::zeros(0, a * b);
    let mut prod = vec![0u16; ideal.ring().dim()];
    for xa in 0..a {
        for k in 0..d {
            // x_a · e_k, expressed in I's basis.
            linalg::mul_row_mat(f, ideal.basis().row(xa), &ideal.ring().right_mats()[k], &mut prod);
            let alpha = linalg::coords_in_rref(f, &prod, ideal.basis(), ideal.pivots())
                .expect("I is right-closed");
            let lk = &n.actions[k];
            for nb in 0..b {
                // (x_a e_k) ⊗ n_b − x_a ⊗ (e_k n_b).
                let mut rel = vec![0u16; a * b];
                for ap in 0..a {
                    if alpha[ap] != 0 {
                        rel[ap * b + nb] = f.add(FieldElement(rel[ap * b + nb]), FieldElement(alpha[ap])).0;
                    }
                }
                for bp in 0..b {
                    let c = lk.get(nb, bp);
                    if c != 0 {
                        rel[xa * b + bp] = f.sub(FieldElement(rel[xa * b + bp]), FieldElement(c)).0;
                    }
                }
                if rel.iter().any(|&c| c != 0) {
                    relations.push_row(&rel);
                }
            }
        }
    }
    let rel_space = linalg::row_space(f, &relations);

    // μ̃: (a,b) entry basis vector ↦ x_a · n_b.
    let mut mu = Mat::zeros(a * b, b);
    for xa in 0..a {
        let lx = n.elem_action(ideal.basis().row(xa));
        for nb in 0..b {
            for bp in 0..b {
                mu.set(xa * b + nb, bp, lx.get(nb, bp));
            }
        }
    }
    let kernel = linalg::row_kernel(f, &mu);
    debug_assert!(
        (0..rel_space.rows()).all(|r| {
            let piv = kernel.pivot_cols();
            linalg::in_row_space(f, rel_space.row(r), &kernel, &piv)
        }),
        "relations always map to zero"
    );
    kernel.rows() == rel_space.rows()
}

/// A projective cover: the covering module (a direct sum of principal
/// indecomposables e·R), the covering epimorphism, and which idempotents
/// were used.
pub struct CoverData {
    pub cover: FiniteModule,
    /// dim(cover) × dim(M) matrix of the epimorphism.
    pub pi: Mat,
    pub summand_idempotents: Vec<usize>,
}

/// Construct the projective cover of M from the radical and a complete list
/// of orthogonal primitive idempotents. Greedy lift: pick elements of M·e_j
/// outside the generated-plus-radical part; each adds exactly one simple to
/// the covered top, so the result is minimal.
pub fn projective_cover(
    m: &FiniteModule,
    rad: &RightIdeal,
    idems: &[Vec<u16>],
) -> CoverData {
    let f = m.ring.field();
    let mj = m.times_ideal(rad);
    let mut gen_sub = Mat::zeros(0, m.dim);
    let mut gens: Vec<(Vec<u16>, usize)> = Vec::new();
    loop {
        let reach = linalg::row_space_sum(f, &gen_sub, &mj);
        if reach.rows() == m.dim {
            break;
        }
        let piv = reach.pivot_cols();
        let mut found = false;
        'search: for (jidx, e) in idems.iter().enumerate() {
            let me = linalg::row_space(f, &m.elem_action(e));
            for r in 0..me.rows() {
                if !linalg::in_row_space(f, me.row(r), &reach, &piv) {
                    let w = me.row(r).to_vec();
                    gen_sub = linalg::row_space_sum(f, &gen_sub, &m.cyclic_submodule(&w));
                    gens.push((w, jidx));
                    found = true;
                    break 'search;
                }
            }
        }
        assert!(found, "some M·e_j must stick out of the reached part");
    }
    assert_eq!(gen_sub.rows(), m.dim, "chosen generators span M");

    let mut cover = FiniteModule::zero_module(&m.ring);
    let mut pi = Mat::zeros(0, m.dim);
    let mut summands = Vec::new();
    for (w, jidx) in &gens {
        let ej_ideal = RightIdeal::from_generators(&m.ring, &[idems[*jidx].clone()]);
        let ej_mod = FiniteModule::from_ideal(&ej_ideal);
        // π on this summand: basis row x of e_j R maps to w·x.
        let mut block = Mat::zeros(ej_mod.dim(), m.dim);
        let mut out = vec![0u16; m.dim];
        for r in 0..ej_ideal.dim() {
            let ax = m.elem_action(ej_ideal.basis().row(r));
            linalg::mul_row_mat(f, w, &ax, &mut out);
            for c in 0..m.dim {
                block.set(r, c, out[c]);
            }
        }
        cover = cover.direct_sum(&ej_mod);
        pi = pi.vstack(&block);
        summands.push(*jidx);
    }
    debug_assert_eq!(linalg::rank(f, &pi), m.dim, "cover map is surjective");
    #[cfg(debug_assertions)]
    {
        for (j, (ac, am)) in cover.actions.iter().zip(m.actions.iter()).enumerate() {
            let lhs = linalg::mat_mul(f, ac, &pi);
            let rhs = linalg::mat_mul(f, &pi, am);
            debug_assert_eq!(lhs, rhs, "cover map intertwines action {j}");
        }
        let ker = linalg::row_kernel(f, &pi);
        let prad = cover.times_ideal(rad);
        debug_assert!(
            mat_subspace_le(f, &ker, &prad),
            "cover kernel is superfluous (inside cover radical)"
        );
    }
    CoverData { cover, pi, summand_idempotents: summands }
}

/// M is projective exactly when its cover epimorphism splits; the split is a
/// linear solve over the hom space. Cross-checked against the dimension
/// criterion dim M = dim cover in debug builds.
pub fn is_projective(m: &FiniteModule, rad: &RightIdeal, idems: &[Vec<u16>]) -> bool {
    if m.dim == 0 {
        return true;
    }
    let f = m.ring.field();
    let cd = projective_cover(m, rad, idems);
    let homs = hom_space(m, &cd.cover);
    let mut system = Mat::zeros(homs.len(), m.dim * m.dim);
    for (a, h) in homs.iter().enumerate() {
        let comp = linalg::mat_mul(f, h, &cd.pi);
        for r in 0..m.dim {
            for c in 0..m.dim {
                system.set(a, r * m.dim + c, comp.get(r, c));
            }
        }
    }
    let mut target = vec![0u16; m.dim * m.dim];
    for r in 0..m.dim {
        target[r * m.dim + r] = 1;
    }
    let split = linalg::solve_row(f, &system, &target).is_some();
    debug_assert_eq!(split, m.dim == cd.cover.dim(), "split and dimension criteria agree");
    split
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectiveDimension {
    Exact(usize),
    ExceedsCap(usize),
}

/// Iterated minimal syzygies: pd = number of cover-kernel steps until a
/// projective syzygy appears, or ExceedsCap.
pub fn projective_dimension(
    m: &FiniteModule,
    rad: &RightIdeal,
    idems: &[Vec<u16>],
    cap: usize,
) -> ProjectiveDimension {
    let f = m.ring.field().clone();
    let mut current = m.clone();
    for k in 0..=cap {
        if is_projective(&current, rad, idems) {
            return ProjectiveDimension::Exact(k);
        }
        let cd = projective_cover(&current, rad, idems);
        let ker = linalg::row_kernel(&f, &cd.pi);
        current = cd.cover.submodule_module(&ker);
    }
    ProjectiveDimension::ExceedsCap(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::ideal::LatticeIndex;

    fn ut2_gf2() -> Ring {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut s = vec![vec![vec![0u16; 3]; 3]; 3];
        s[0][0][0] = 1;
        s[0][1][1] = 1;
        s[1][2][1] = 1;
        s[2][2][2] = 1;
        Ring::new(f, s, vec![1, 0, 1], "ut2_gf2").unwrap()
    }

    /// The subring of Mat(3,k) with zero (2,3), (3,2), (2,1), (3,1) entries:
    /// basis E11, E12, E13, E22, E33.
    fn tri3_gf2() -> Ring {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut s = vec![vec![vec![0u16; 5]; 5]; 5];
        let e = |i: usize, j: usize| -> usize {
            match (i, j) {
                (1, 1) => 0,
                (1, 2) => 1,
                (1, 3) => 2,
                (2, 2) => 3,
                (3, 3) => 4,
                _ => usize::MAX,
            }
        };
        let pairs = [(1, 1), (1, 2), (1, 3), (2, 2), (3, 3)];
        for &(i, j) in &pairs {
            for &(k, l) in &pairs {
                if j == k {
                    let t = e(i, l);
                    if t != usize::MAX {
                        s[e(i, j)][e(k, l)][t] = 1;
                    }
                }
            }
        }
        Ring::new(f, s, vec![1, 0, 0, 1, 1], "tri3_gf2").unwrap()
    }

    fn tri3_p(r: &Ring) -> RightIdeal {
        // First row zero: span{E22, E33}.
        RightIdeal::from_generators(r, &[vec![0, 0, 0, 1, 0], vec![0, 0, 0, 0, 1]])
    }

    #[test]
    fn tri3_row_module_has_five_submodules() {
        let r = tri3_gf2();
        let p = tri3_p(&r);
        assert_eq!(p.dim(), 2);
        let v = FiniteModule::cyclic(&r, &p);
        assert_eq!(v.dim(), 3);
        let subs = v.submodules(4096).unwrap();
        assert_eq!(subs.len(), 5);
        let dims: Vec<usize> = subs.iter().map(|s| s.rows()).collect();
        assert_eq!(dims, vec![0, 1, 1, 2, 3]);
    }

    #[test]
    fn tri3_row_module_not_uniform_not_monoform() {
        let r = tri3_gf2();
        let v = FiniteModule::cyclic(&r, &tri3_p(&r));
        assert!(!v.is_uniform(4096).unwrap());
        let verdict = is_monoform(&v, 4096, 4096).unwrap();
        assert!(!verdict.monoform);
        assert!(verdict.elementwise_ran);
        // Hom(V, V) is one-dimensional: only scalar endomorphisms.
        assert_eq!(hom_space(&v, &v).len(), 1);
    }

    #[test]
    fn ut2_quotient_by_e22_span_is_monoform() {
        let r = ut2_gf2();
        let p = RightIdeal::from_generators(&r, &[vec![0, 0, 1]]);
        let m = FiniteModule::cyclic(&r, &p);
        assert_eq!(m.dim(), 2);
        let verdict = is_monoform(&m, 4096, 4096).unwrap();
        assert!(verdict.monoform);
        assert!(verdict.elementwise_ran);
    }

    #[test]
    fn simple_modules_are_monoform() {
        let r = ut2_gf2();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        for &mx in lat.maximals() {
            let s = FiniteModule::cyclic(&r, lat.ideal(mx));
            assert!(s.is_simple());
            assert!(is_monoform(&s, 4096, 4096).unwrap().monoform);
        }
    }

    #[test]
    fn hom_between_distinct_simples_is_zero() {
        let r = ut2_gf2();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        let maxes = lat.maximals();
        let s1 = FiniteModule::cyclic(&r, lat.ideal(maxes[0]));
        let s2 = FiniteModule::cyclic(&r, lat.ideal(maxes[1]));
        assert_eq!(hom_space(&s1, &s2).len(), 0);
        assert_eq!(hom_space(&s2, &s1).len(), 0);
        assert_eq!(hom_space(&s1, &s1).len(), 1);
    }

    #[test]
    fn end_of_regular_module_matches_ring_size() {
        let r = ut2_gf2();
        let reg = FiniteModule::regular(&r);
        let e = end_ring(&reg).unwrap();
        // End(R_R) ≅ R via left multiplications: same dimension.
        assert_eq!(e.dim(), r.dim());
        assert_eq!(e.is_commutative(), r.is_commutative());
    }

    #[test]
    fn regular_module_submodules_match_ideal_lattice() {
        let r = ut2_gf2();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        let reg = FiniteModule::regular(&r);
        let subs = reg.submodules(4096).unwrap();
        assert_eq!(subs.len(), lat.len());
        for (s, ideal) in subs.iter().zip(lat.ideals()) {
            assert_eq!(s, ideal.basis());
        }
    }

    #[test]
    fn baer_injectivity_over_ut2() {
        let r = ut2_gf2();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        // The regular module of a self-injective ring would be injective;
        // UT2 is not self-injective.
        let reg = FiniteModule::regular(&r);
        assert!(!is_injective(&reg, &lat));
        let zero = FiniteModule::zero_module(&r);
        assert!(is_injective(&zero, &lat));
    }

    #[test]
    fn point_annihilators_of_truncated_polynomials() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut s = vec![vec![vec![0u16; 2]; 2]; 2];
        s[0][0][0] = 1;
        s[0][1][1] = 1;
        s[1][0][1] = 1;
        let r = Ring::new(f, s, vec![1, 0], "trunc_gf2_2").unwrap();
        let m = FiniteModule::regular(&r);
        let anns = point_annihilators(&m, 4096).unwrap();
        // ann(1) = 0; ann(x) = (x); ann(1+x) = 0.
        assert_eq!(anns.len(), 2);
        let maxes = maximal_point_annihilators(&m, 4096).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].dim(), 1);
        assert!(maxes[0].contains_vec(&[0, 1]));
        let zd = zero_divisors_on(&m, 4096).unwrap();
        // 0 and x kill something nonzero.
        assert_eq!(zd.len(), 2);
    }

    #[test]
    fn tensor_injectivity_on_truncated_polynomials() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut s = vec![vec![vec![0u16; 2]; 2]; 2];
        s[0][0][0] = 1;
        s[0][1][1] = 1;
        s[1][0][1] = 1;
        let r = Ring::new(f, s, vec![1, 0], "trunc_gf2_2").unwrap();
        let x_ideal = RightIdeal::from_generators(&r, &[vec![0, 1]]);
        let n = LeftModule::left_quotient(&r, &x_ideal).unwrap();
        // (x) ⊗ R/(x) has x⊗1 ≠ 0 mapping to x·1 = 0 in R/(x).
        assert!(!tensor_injectivity(&x_ideal, &n));
        assert!(tensor_injectivity(&RightIdeal::full(&r), &n));
        assert!(tensor_injectivity(&RightIdeal::zero(&r), &n));
        let full_n = LeftModule::left_regular(&r);
        assert!(tensor_injectivity(&x_ideal, &full_n));
    }

    #[test]
    fn embeds_in_finds_and_rejects() {
        let r = tri3_gf2();
        let v = FiniteModule::cyclic(&r, &tri3_p(&r));
        assert!(embeds_in(&v, &v, 1 << 20).unwrap());
        // U ⊕ W embeds in V.
        let subs = v.submodules(4096).unwrap();
        let lines: Vec<&Mat> = subs.iter().filter(|s| s.rows() == 1).collect();
        assert_eq!(lines.len(), 2);
        let u = v.submodule_module(lines[0]);
        let w = v.submodule_module(lines[1]);
        let uw = u.direct_sum(&w);
        assert!(embeds_in(&uw, &v, 1 << 20).unwrap());
        // S1 = V/M does not embed in V (it is no composition factor of soc V).
        let m2 = subs.iter().find(|s| s.rows() == 2).unwrap();
        let s1 = v.quotient_module(m2);
        assert!(!embeds_in(&s1, &v, 1 << 20).unwrap());
    }

    #[test]
    fn torsion_sets_for_multiplicative_sets() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut s = vec![vec![vec![0u16; 2]; 2]; 2];
        s[0][0][0] = 1;
        s[0][1][1] = 1;
        s[1][0][1] = 1;
        let r = Ring::new(f, s, vec![1, 0], "trunc_gf2_2").unwrap();
        let m = FiniteModule::regular(&r);
        // S = {1}: torsion is 0.
        let t = torsion_by_set(&m, &[vec![1, 0]], 4096).unwrap();
        assert_eq!(t.element_indices, vec![0]);
        assert!(t.is_submodule);
        // S = {1, 0}: everything is torsion.
        let t = torsion_by_set(&m, &[vec![1, 0], vec![0, 0]], 4096).unwrap();
        assert_eq!(t.element_indices.len(), 4);
        assert!(t.is_submodule);
    }

    #[test]
    fn projectivity_over_ut2() {
        let r = ut2_gf2();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        let rad = lat.ideal(lat.radical()).clone();
        // Primitive idempotents of UT2: E11 and E22.
        let idems = vec![vec![1, 0, 0], vec![0, 0, 1]];
        let reg = FiniteModule::regular(&r);
        assert!(is_projective(&reg, &rad, &idems));
        assert_eq!(
            projective_dimension(&reg, &rad, &idems, 8),
            ProjectiveDimension::Exact(0)
        );
        // e11R is projective (principal summand).
        let e11r = RightIdeal::from_generators(&r, &[vec![1, 0, 0]]);
        let m = FiniteModule::from_ideal(&e11r);
        assert!(is_projective(&m, &rad, &idems));
        // R/e11R: projective iff e11R is a summand of R_R.
        let me = FiniteModule::cyclic(&r, &e11r);
        let idx = lat.index_of(&e11r).unwrap();
        assert_eq!(is_projective(&me, &rad, &idems), lat.is_direct_summand(idx));
    }

    #[test]
    fn syzygies_of_simple_over_truncated_polynomials_never_stop() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut s = vec![vec![vec![0u16; 2]; 2]; 2];
        s[0][0][0] = 1;
        s[0][1][1] = 1;
        s[1][0][1] = 1;
        let r = Ring::new(f, s, vec![1, 0], "trunc_gf2_2").unwrap();
        let lat = LatticeIndex::build(&r, 4096).unwrap();
        let rad = lat.ideal(lat.radical()).clone();
        let idems = vec![vec![1, 0]];
        let x_ideal = RightIdeal::from_generators(&r, &[vec![0, 1]]);
        let simple = FiniteModule::cyclic(&r, &x_ideal);
        assert_eq!(
            projective_dimension(&simple, &rad, &idems, 5),
            ProjectiveDimension::ExceedsCap(5)
        );
    }
}
