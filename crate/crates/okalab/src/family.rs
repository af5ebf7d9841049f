//! Families of right ideals: the built-in families, exhaustive verification
//! of the Oka, divisible, semifilter, and Gabriel-filter properties, maximal
//! complements, and the theorems tying Max(F') to completely prime and
//! comonoform ideals.
//!
//! A family F is right Oka when R lies in F and, for every ideal I and
//! element a, membership of both I + aR and a⁻¹I forces membership of I.
//! All verification here is extensional over the complete lattice of right
//! ideals: every (I, a) pair is scanned, and witnesses are canonical (the
//! smallest violating pair in lattice-then-element order).

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ideal::RightIdeal;
use crate::lab::Lab;
use crate::linalg;
use crate::module::{self, FiniteModule, LeftModule};
use crate::prime::{self, PrimeReport};
use crate::subring::SubringPair;

/// An extensional family of right ideals over a lab's lattice.
#[derive(Clone)]
pub struct IdealFamily {
    pub name: String,
    /// Constructor tag and parameters this family was built from.
    pub provenance: String,
    pub members: BitSet,
}

impl IdealFamily {
    pub fn from_predicate(
        lab: &Lab,
        name: impl Into<String>,
        provenance: impl Into<String>,
        pred: impl Fn(u32) -> bool + Sync,
    ) -> IdealFamily {
        let len = lab.lattice().len();
        let flags: Vec<bool> = (0..len as u32).into_par_iter().map(&pred).collect();
        let mut members = BitSet::new(len);
        for (i, &on) in flags.iter().enumerate() {
            if on {
                members.set(i);
            }
        }
        IdealFamily { name: name.into(), provenance: provenance.into(), members }
    }

    pub fn from_try_predicate(
        lab: &Lab,
        name: impl Into<String>,
        provenance: impl Into<String>,
        pred: impl Fn(u32) -> Result<bool> + Sync,
    ) -> Result<IdealFamily> {
        let len = lab.lattice().len();
        let flags: Vec<bool> =
            (0..len as u32).into_par_iter().map(&pred).collect::<Result<Vec<bool>>>()?;
        let mut members = BitSet::new(len);
        for (i, &on) in flags.iter().enumerate() {
            if on {
                members.set(i);
            }
        }
        Ok(IdealFamily { name: name.into(), provenance: provenance.into(), members })
    }

    pub fn contains(&self, i: u32) -> bool {
        self.members.get(i as usize)
    }

    pub fn member_count(&self) -> usize {
        self.members.count()
    }

    pub fn member_indices(&self) -> Vec<u32> {
        self.members.iter_ones().map(|i| i as u32).collect()
    }
}

/// A verified multiplicative subset of the ring: contains 1 and is closed
/// under products. Stored over element indices.
pub struct MultiplicativeSet {
    set: BitSet,
    list: Vec<usize>,
}

impl MultiplicativeSet {
    pub fn new(lab: &Lab, indices: &[usize]) -> Result<MultiplicativeSet> {
        let n = lab.n_elements();
        let mut set = BitSet::new(n);
        for &i in indices {
            if i >= n {
                return Err(Error::BadMultiplicativeSet(format!("element index {i} out of range")));
            }
            set.set(i);
        }
        let ring = lab.ring();
        let one = ring.index_of(ring.unit_coeffs()) as usize;
        if !set.get(one) {
            return Err(Error::BadMultiplicativeSet("1 is missing".into()));
        }
        let list: Vec<usize> = set.iter_ones().collect();
        let mut prod = vec![0u16; ring.dim()];
        for &s in &list {
            let sv = lab.elem(s);
            for &t in &list {
                ring.mul_vec(&sv, &lab.elem(t), &mut prod);
                let st = ring.index_of(&prod) as usize;
                if !set.get(st) {
                    return Err(Error::BadMultiplicativeSet(format!(
                        "not closed: product of elements {s} and {t} escapes"
                    )));
                }
            }
        }
        Ok(MultiplicativeSet { set, list })
    }

    /// Multiplicative closure of the seeds together with 1.
    pub fn closure_of(lab: &Lab, seeds: &[usize]) -> MultiplicativeSet {
        let ring = lab.ring();
        let n = lab.n_elements();
        let mut set = BitSet::new(n);
        set.set(ring.index_of(ring.unit_coeffs()) as usize);
        for &s in seeds {
            set.set(s);
        }
        let mut prod = vec![0u16; ring.dim()];
        loop {
            let list: Vec<usize> = set.iter_ones().collect();
            let mut grew = false;
            for &s in &list {
                let sv = lab.elem(s);
                for &t in &list {
                    ring.mul_vec(&sv, &lab.elem(t), &mut prod);
                    let st = ring.index_of(&prod) as usize;
                    if !set.get(st) {
                        set.set(st);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let list = set.iter_ones().collect();
        MultiplicativeSet { set, list }
    }

    pub fn units(lab: &Lab) -> MultiplicativeSet {
        let set = lab.units().clone();
        let list = set.iter_ones().collect();
        MultiplicativeSet { set, list }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.get(x)
    }

    pub fn element_set(&self) -> &BitSet {
        &self.set
    }

    pub fn indices(&self) -> &[usize] {
        &self.list
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

/// Index of the product ideal I·J (span of pairwise products; a right ideal
/// whenever J is one, two-sided whenever both are).
pub fn product_index(lab: &Lab, i: u32, j: u32) -> u32 {
    let lat = lab.lattice();
    let ring = lab.ring();
    let a = lat.ideal(i);
    let b = lat.ideal(j);
    let mut gens = Vec::with_capacity(a.dim() * b.dim());
    let mut prod = vec![0u16; ring.dim()];
    for r in 0..a.basis().rows() {
        for s in 0..b.basis().rows() {
            ring.mul_vec(a.basis().row(r), b.basis().row(s), &mut prod);
            gens.push(prod.clone());
        }
    }
    let p = RightIdeal::from_generators(ring, &gens);
    lat.index_of(&p).expect("product of lattice ideals is in the lattice")
}

/// A semifilter of two-sided ideals containing R and closed under pairwise
/// products, the hypothesis set for core-membership families.
pub struct IdealSemifilter {
    pub members: BitSet,
}

impl IdealSemifilter {
    pub fn new(lab: &Lab, members: BitSet) -> Result<IdealSemifilter> {
        let lat = lab.lattice();
        let indices: Vec<u32> = members.iter_ones().map(|i| i as u32).collect();
        for &i in &indices {
            if !lat.is_two_sided(i) {
                return Err(Error::NotTwoSided);
            }
        }
        if !members.get(lat.top() as usize) {
            return Err(Error::PreconditionUnverified {
                family: "ideal semifilter".into(),
                needs: "R as a member".into(),
            });
        }
        for &i in &indices {
            for j in lat.above(i).iter_ones() {
                if lat.is_two_sided(j as u32) && !members.get(j) {
                    return Err(Error::PreconditionUnverified {
                        family: "ideal semifilter".into(),
                        needs: format!("upward closure (ideal {i} is in, ideal {j} above it is not)"),
                    });
                }
            }
        }
        for &i in &indices {
            for &j in &indices {
                if !members.get(product_index(lab, i, j) as usize) {
                    return Err(Error::PreconditionUnverified {
                        family: "ideal semifilter".into(),
                        needs: format!("closure under products (ideals {i} and {j})"),
                    });
                }
            }
        }
        Ok(IdealSemifilter { members })
    }
}

/// Is the element set an m-system: contains 1, and for all s, t in S some
/// r has s r t in S?
pub fn is_m_system_set(lab: &Lab, set: &BitSet) -> bool {
    let ring = lab.ring();
    if !set.get(ring.index_of(ring.unit_coeffs()) as usize) {
        return false;
    }
    let list: Vec<usize> = set.iter_ones().collect();
    // Scan candidates r with members of S first: for the common m-systems
    // (unit groups, complements of primes) srt lands back in S for some
    // member r almost immediately, while raw element order can bury every
    // witness behind thousands of non-members.
    let candidates: Vec<usize> =
        list.iter().copied().chain((0..lab.n_elements()).filter(|&r| !set.get(r))).collect();
    list.par_iter().all(|&s| {
        let sv = lab.elem(s);
        let mut sr = vec![0u16; ring.dim()];
        let mut srt = vec![0u16; ring.dim()];
        list.iter().all(|&t| {
            let tv = lab.elem(t);
            candidates.iter().any(|&r| {
                ring.mul_vec(&sv, &lab.elem(r), &mut sr);
                ring.mul_vec(&sr, &tv, &mut srt);
                set.get(ring.index_of(&srt) as usize)
            })
        })
    })
}

// ---------------------------------------------------------------------------
// Built-in families.
// ---------------------------------------------------------------------------

/// {I : I meets S}. With S the units this is {R}.
pub fn family_mset_meet(lab: &Lab, s: &MultiplicativeSet, label: &str) -> IdealFamily {
    let sets = lab.elem_sets();
    IdealFamily::from_predicate(lab, "mset_meet", format!("mset_meet({label})"), |i| {
        sets[i as usize].intersects(s.element_set())
    })
}

/// {I : R/I is S-torsion}, i.e. every element of R/I is killed by some
/// member of S.
pub fn family_s_torsion(lab: &Lab, s: &MultiplicativeSet, label: &str) -> Result<IdealFamily> {
    let ring = lab.ring();
    let s_elems: Vec<Vec<u16>> = s.indices().iter().map(|&x| lab.elem(x)).collect();
    IdealFamily::from_try_predicate(lab, "s_torsion", format!("s_torsion({label})"), |i| {
        let m = FiniteModule::cyclic(ring, lab.lattice().ideal(i));
        let t = module::torsion_by_set(&m, &s_elems, lab.n_elements() as u64)?;
        Ok(t.element_indices.len() as u128 == m.element_count())
    })
}

/// {I : rs in I with s in S forces r in I}.
pub fn family_s_torsionfree(lab: &Lab, s: &MultiplicativeSet, label: &str) -> IdealFamily {
    let ring = lab.ring();
    let f = ring.field();
    let lat = lab.lattice();
    IdealFamily::from_predicate(lab, "s_torsionfree", format!("s_torsionfree({label})"), |i| {
        let ideal = lat.ideal(i);
        let proj = ideal.coset_projection();
        s.indices().iter().all(|&x| {
            let rm = ring.right_mul_matrix(&lab.elem(x));
            let pre = linalg::row_kernel(f, &linalg::mat_mul(f, &rm, &proj));
            (0..pre.rows()).all(|r| ideal.contains_vec(pre.row(r)))
        })
    })
}

/// {I : R/I = 0 or R/I does not embed in V}.
pub fn family_evade(lab: &Lab, v: &FiniteModule, label: &str) -> Result<IdealFamily> {
    let ring = lab.ring();
    let budget = lab.budget().scan_budget;
    IdealFamily::from_try_predicate(lab, "evade", format!("evade({label})"), |i| {
        let ideal = lab.lattice().ideal(i);
        if !ideal.is_proper() {
            return Ok(true);
        }
        let m = FiniteModule::cyclic(ring, ideal);
        Ok(!module::embeds_in(&m, v, budget)?)
    })
}

/// {I : I is not the annihilator of any nonzero element of M}.
pub fn family_point_ann_complement(lab: &Lab, m: &FiniteModule, label: &str) -> Result<IdealFamily> {
    let lat = lab.lattice();
    let anns = module::point_annihilators(m, lab.budget().oracle_cap)?;
    let mut is_ann = BitSet::new(lat.len());
    for a in &anns {
        let i = lat.index_of(&a).expect("annihilators are right ideals in the lattice");
        is_ann.set(i as usize);
    }
    Ok(IdealFamily::from_predicate(
        lab,
        "point_ann_complement",
        format!("point_ann_complement({label})"),
        |i| !is_ann.get(i as usize),
    ))
}

/// {I : the only m in M with mI = 0 is m = 0}. Over a finite ring this is
/// the finite-annihilating-subset family with X = I itself.
pub fn family_finite_ann_set(lab: &Lab, m: &FiniteModule, label: &str) -> IdealFamily {
    let f = lab.ring().field();
    let lat = lab.lattice();
    IdealFamily::from_predicate(lab, "finite_ann_set", format!("finite_ann_set({label})"), |i| {
        let ideal = lat.ideal(i);
        if m.dim() == 0 {
            return true;
        }
        if ideal.dim() == 0 {
            return false;
        }
        let mut stacked = linalg::Mat::zeros(m.dim(), ideal.dim() * m.dim());
        for t in 0..ideal.dim() {
            let a = m.elem_action(ideal.basis().row(t));
            for row in 0..m.dim() {
                for col in 0..m.dim() {
                    stacked.set(row, t * m.dim() + col, a.get(row, col));
                }
            }
        }
        linalg::row_kernel(f, &stacked).rows() == 0
    })
}

/// {I : I is a direct summand of R}.
pub fn family_summand(lab: &Lab) -> IdealFamily {
    let lat = lab.lattice();
    IdealFamily::from_predicate(lab, "summand", "summand", |i| lat.is_direct_summand(i))
}

/// {I : R/I is an injective module}.
pub fn family_injective_factor(lab: &Lab) -> IdealFamily {
    let lat = lab.lattice();
    let ring = lab.ring();
    IdealFamily::from_predicate(lab, "injective_factor", "injective_factor", |i| {
        module::is_injective(&FiniteModule::cyclic(ring, lat.ideal(i)), lat)
    })
}

/// {I : R/I is a projective module}.
pub fn family_projective_factor(lab: &Lab) -> IdealFamily {
    let lat = lab.lattice();
    let ring = lab.ring();
    let rad = lab.radical_ideal();
    let idems = lab.primitive_idempotents();
    IdealFamily::from_predicate(lab, "projective_factor", "projective_factor", |i| {
        module::is_projective(&FiniteModule::cyclic(ring, lat.ideal(i)), rad, idems)
    })
}

/// {I : every homomorphism I -> M extends to R -> M}, by the dimension
/// identity dim Hom(I, M) = dim Hom(R, M) - dim Hom(R/I, M).
pub fn family_extend_into(lab: &Lab, m: &FiniteModule, label: &str) -> IdealFamily {
    let lat = lab.lattice();
    let ring = lab.ring();
    let hom_r = module::hom_space(lab.regular(), m).len();
    IdealFamily::from_predicate(lab, "extend_into", format!("extend_into({label})"), |i| {
        let ideal = lat.ideal(i);
        let hom_i = module::hom_space(&FiniteModule::from_ideal(ideal), m).len();
        let hom_q = module::hom_space(&FiniteModule::cyclic(ring, ideal), m).len();
        hom_i + hom_q == hom_r
    })
}

/// {I : every homomorphism M -> R/I lifts to M -> R}; requires R to be
/// right self-injective.
pub fn family_lift_from(lab: &Lab, m: &FiniteModule, label: &str) -> Result<IdealFamily> {
    if !lab.classification().self_injective {
        return Err(Error::NotSelfInjective);
    }
    let lat = lab.lattice();
    let ring = lab.ring();
    let hom_to_r = module::hom_space(m, lab.regular()).len();
    Ok(IdealFamily::from_predicate(lab, "lift_from", format!("lift_from({label})"), |i| {
        let ideal = lat.ideal(i);
        let hom_q = module::hom_space(m, &FiniteModule::cyclic(ring, ideal)).len();
        let hom_i = module::hom_space(m, &FiniteModule::from_ideal(ideal)).len();
        hom_q + hom_i == hom_to_r
    }))
}

/// {I : I tensor N -> N is injective} for a left module N.
pub fn family_tensor_injective(lab: &Lab, n: &LeftModule, label: &str) -> IdealFamily {
    let lat = lab.lattice();
    IdealFamily::from_predicate(lab, "tensor_injective", format!("tensor_injective({label})"), |i| {
        module::tensor_injectivity(lat.ideal(i), n)
    })
}

/// {I : I is generated by at most k elements}. Measured empirically; no
/// closure property is claimed for this family.
pub fn family_mu_le(lab: &Lab, k: usize) -> Result<IdealFamily> {
    let lat = lab.lattice();
    let cap = lab.budget().mu_cap;
    IdealFamily::from_try_predicate(lab, "mu_le", format!("mu_le({k})"), |i| {
        Ok(lat.ideal(i).mu(cap)? <= k)
    })
}

/// {I : core(I) lies in the semifilter G}.
pub fn family_core_in_semifilter(lab: &Lab, g: &IdealSemifilter, label: &str) -> IdealFamily {
    let lat = lab.lattice();
    IdealFamily::from_predicate(
        lab,
        "core_in_semifilter",
        format!("core_in_semifilter({label})"),
        |i| g.members.get(lat.core_of(i) as usize),
    )
}

/// {I : core(I) meets S} for an m-system S.
pub fn family_core_meets_mset(lab: &Lab, s: &BitSet, label: &str) -> Result<IdealFamily> {
    if !is_m_system_set(lab, s) {
        return Err(Error::BadMultiplicativeSet("not an m-system".into()));
    }
    let lat = lab.lattice();
    let sets = lab.elem_sets();
    Ok(IdealFamily::from_predicate(
        lab,
        "core_meets_mset",
        format!("core_meets_mset({label})"),
        |i| sets[lat.core_of(i) as usize].intersects(s),
    ))
}

/// {I : I is dense in R as a right module}.
pub fn family_dense(lab: &Lab) -> IdealFamily {
    let lat = lab.lattice();
    let subs: Vec<linalg::Mat> = lat.ideals().iter().map(|i| i.basis().clone()).collect();
    let regular = lab.regular();
    IdealFamily::from_predicate(lab, "dense", "dense", |i| {
        module::is_dense_submodule(lat.ideal(i).basis(), regular, &subs)
    })
}

/// {I : I is an essential right ideal}.
pub fn family_essential(lab: &Lab) -> IdealFamily {
    let lat = lab.lattice();
    IdealFamily::from_predicate(lab, "essential", "essential", |i| lat.is_essential(i))
}

/// {J : every section U/J with U above J has no nonzero map to M}: the
/// Gabriel filter of right ideals cogenerated by the injective hull of M,
/// computed without constructing the hull (Hom(X, E(M)) = 0 exactly when no
/// submodule of X maps nontrivially to M).
pub fn family_cogenerated(lab: &Lab, m: &FiniteModule, label: &str) -> IdealFamily {
    let lat = lab.lattice();
    IdealFamily::from_predicate(lab, "cogenerated", format!("cogenerated({label})"), |j| {
        lat.above(j).iter_ones().all(|u| {
            let u = u as u32;
            u == j || module::hom_space(&lab.section_module(j, u), m).is_empty()
        })
    })
}

/// {I : I contains some member of the given set of two-sided ideals}: the
/// semifilter generated by two-sided ideals, which is always divisible.
pub fn family_above_ideal_set(lab: &Lab, gens: &[u32], label: &str) -> Result<IdealFamily> {
    let lat = lab.lattice();
    for &j in gens {
        if !lat.is_two_sided(j) {
            return Err(Error::NotTwoSided);
        }
    }
    let gens = gens.to_vec();
    Ok(IdealFamily::from_predicate(
        lab,
        "above_ideal_set",
        format!("above_ideal_set({label})"),
        |i| gens.iter().any(|&j| lat.le(j, i)),
    ))
}

/// Divisibility checked through the module realization: every cyclic
/// submodule of R/I for I in F must again have its annihilator in F. By
/// the cyclic-submodule correspondence this agrees with `verify_divisible`.
pub fn module_route_divisible(lab: &Lab, fam: &IdealFamily) -> bool {
    let ring = lab.ring();
    let lat = lab.lattice();
    fam.member_indices().par_iter().all(|&i| {
        let m = FiniteModule::cyclic(ring, lat.ideal(i));
        (0..m.element_count() as u64).all(|t| {
            let v = m.elem_at(t);
            let ann = lat
                .index_of(&m.annihilator_of(&v))
                .expect("annihilator is a lattice ideal");
            fam.contains(ann)
        })
    })
}

/// {I : I is right invertible relative to the embedding pair}, i.e. some
/// finite sum of products x q with x in I and q in I* equals 1.
pub fn family_invertible(lab: &Lab, pair: &SubringPair) -> Result<IdealFamily> {
    if !pair.small().same_ring(lab.ring()) {
        return Err(Error::BadEmbedding("lab ring is not the pair's small ring".into()));
    }
    let lat = lab.lattice();
    Ok(IdealFamily::from_predicate(
        lab,
        "invertible",
        format!("invertible({} in {})", pair.small().name(), pair.big().name()),
        |i| pair.is_right_invertible(lat.ideal(i)),
    ))
}

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

/// A violating (ideal, element) pair.
#[derive(Clone, Debug, Serialize)]
pub struct PairWitness {
    pub ideal: u32,
    pub element: Vec<u16>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OkaVerdict {
    pub contains_ring: bool,
    pub closed: bool,
    pub witness: Option<PairWitness>,
}

impl OkaVerdict {
    pub fn holds(&self) -> bool {
        self.contains_ring && self.closed
    }
}

/// Exhaustive Oka check: no I outside F may have both I + aR and a⁻¹I in F.
pub fn verify_oka(lab: &Lab, fam: &IdealFamily) -> OkaVerdict {
    let lat = lab.lattice();
    let tables = lab.tables();
    let n = lab.n_elements();
    let contains_ring = fam.contains(lat.top());
    let violation: Option<(u32, usize)> = (0..lat.len() as u32)
        .into_par_iter()
        .filter(|&i| !fam.contains(i))
        .filter_map(|i| {
            (0..n)
                .find(|&a| fam.contains(tables.ext(i, a)) && fam.contains(tables.quot(i, a)))
                .map(|a| (i, a))
        })
        .min();
    OkaVerdict {
        contains_ring,
        closed: violation.is_none(),
        witness: violation.map(|(i, a)| PairWitness { ideal: i, element: lab.elem(a) }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisibleVerdict {
    pub holds: bool,
    pub witness: Option<PairWitness>,
}

/// Exhaustive divisibility check: I in F forces a⁻¹I in F for every a.
pub fn verify_divisible(lab: &Lab, fam: &IdealFamily) -> DivisibleVerdict {
    let lat = lab.lattice();
    let tables = lab.tables();
    let n = lab.n_elements();
    let violation: Option<(u32, usize)> = (0..lat.len() as u32)
        .into_par_iter()
        .filter(|&i| fam.contains(i))
        .filter_map(|i| (0..n).find(|&a| !fam.contains(tables.quot(i, a))).map(|a| (i, a)))
        .min();
    DivisibleVerdict {
        holds: violation.is_none(),
        witness: violation.map(|(i, a)| PairWitness { ideal: i, element: lab.elem(a) }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealPairWitness {
    pub lower: u32,
    pub upper: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemifilterVerdict {
    pub holds: bool,
    pub witness: Option<IdealPairWitness>,
}

/// Exhaustive upward-closure check.
pub fn verify_semifilter(lab: &Lab, fam: &IdealFamily) -> SemifilterVerdict {
    let lat = lab.lattice();
    let violation: Option<(u32, u32)> = (0..lat.len() as u32)
        .into_par_iter()
        .filter(|&i| fam.contains(i))
        .filter_map(|i| {
            lat.above(i)
                .iter_ones()
                .map(|j| j as u32)
                .find(|&j| !fam.contains(j))
                .map(|j| (i, j))
        })
        .min();
    SemifilterVerdict {
        holds: violation.is_none(),
        witness: violation.map(|(i, j)| IdealPairWitness { lower: i, upper: j }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub enum GabrielFailure {
    NotUpwardClosed { lower: u32, upper: u32 },
    NotMeetClosed { left: u32, right: u32 },
    NotDivisible { ideal: u32, element: Vec<u16> },
    GluingFails { member: u32, target: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct GabrielVerdict {
    pub holds: bool,
    pub failure: Option<GabrielFailure>,
}

/// The four Gabriel filter axioms, exhaustively. Axiom four quantifies over
/// every element of every member ideal (the condition is not linear in x),
/// so its cost is lattice size times element count; the scan budget caps it.
pub fn verify_gabriel(lab: &Lab, fam: &IdealFamily) -> Result<GabrielVerdict> {
    let lat = lab.lattice();
    let tables = lab.tables();
    let n = lab.n_elements();
    let needed = lat.len() as u64 * n as u64;
    if needed > lab.budget().scan_budget {
        return Err(Error::ScanBudget { needed, budget: lab.budget().scan_budget });
    }
    let up = verify_semifilter(lab, fam);
    if let Some(w) = up.witness {
        return Ok(GabrielVerdict {
            holds: false,
            failure: Some(GabrielFailure::NotUpwardClosed { lower: w.lower, upper: w.upper }),
        });
    }
    let members = fam.member_indices();
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a..] {
            let meet = lat
                .index_of(&lat.ideal(i).intersect(lat.ideal(j)))
                .expect("intersection of lattice ideals is in the lattice");
            if !fam.contains(meet) {
                return Ok(GabrielVerdict {
                    holds: false,
                    failure: Some(GabrielFailure::NotMeetClosed { left: i, right: j }),
                });
            }
        }
    }
    let div = verify_divisible(lab, fam);
    if let Some(w) = div.witness {
        return Ok(GabrielVerdict {
            holds: false,
            failure: Some(GabrielFailure::NotDivisible { ideal: w.ideal, element: w.element }),
        });
    }
    // Axiom four: if some I in F has x⁻¹J in F for every x in I, then J
    // must lie in F.
    let sets = lab.elem_sets();
    for j in (0..lat.len() as u32).filter(|&j| !fam.contains(j)) {
        let mut good = BitSet::new(n);
        for x in 0..n {
            if fam.contains(tables.quot(j, x)) {
                good.set(x);
            }
        }
        for &i in &members {
            if sets[i as usize].is_subset_of(&good) {
                return Ok(GabrielVerdict {
                    holds: false,
                    failure: Some(GabrielFailure::GluingFails { member: i, target: j }),
                });
            }
        }
    }
    Ok(GabrielVerdict { holds: true, failure: None })
}

/// Maximal elements of the complement of F, in lattice order.
pub fn max_complement(lab: &Lab, fam: &IdealFamily) -> Vec<u32> {
    let lat = lab.lattice();
    (0..lat.len() as u32)
        .filter(|&i| !fam.contains(i))
        .filter(|&i| {
            lat.above(i).iter_ones().map(|j| j as u32).all(|j| j == i || fam.contains(j))
        })
        .collect()
}

#[derive(Serialize)]
pub struct SidedPrimeReport {
    pub family: String,
    pub max_complement: Vec<u32>,
    pub reports: Vec<PrimeReport>,
}

/// For a verified right Oka family, every maximal element of the complement
/// is completely prime.
pub fn cpip(lab: &Lab, fam: &IdealFamily) -> Result<SidedPrimeReport> {
    if !verify_oka(lab, fam).holds() {
        return Err(Error::PreconditionUnverified {
            family: fam.name.clone(),
            needs: "right Oka with R as a member".into(),
        });
    }
    let maxc = max_complement(lab, fam);
    let reports: Vec<PrimeReport> = maxc.iter().map(|&i| prime::prime_report(lab, i)).collect();
    for r in &reports {
        assert!(
            r.completely_prime,
            "maximal complement member {} of Oka family {} must be completely prime",
            r.index, fam.name
        );
    }
    Ok(SidedPrimeReport { family: fam.name.clone(), max_complement: maxc, reports })
}

/// For a verified divisible right Oka family, every maximal element of the
/// complement is comonoform.
pub fn dpip(lab: &Lab, fam: &IdealFamily) -> Result<SidedPrimeReport> {
    if !verify_oka(lab, fam).holds() {
        return Err(Error::PreconditionUnverified {
            family: fam.name.clone(),
            needs: "right Oka with R as a member".into(),
        });
    }
    if !verify_divisible(lab, fam).holds {
        return Err(Error::PreconditionUnverified {
            family: fam.name.clone(),
            needs: "divisibility".into(),
        });
    }
    let maxc = max_complement(lab, fam);
    let reports: Vec<PrimeReport> = maxc.iter().map(|&i| prime::prime_report(lab, i)).collect();
    for r in &reports {
        assert!(
            r.comonoform,
            "maximal complement member {} of divisible Oka family {} must be comonoform",
            r.index, fam.name
        );
    }
    Ok(SidedPrimeReport { family: fam.name.clone(), max_complement: maxc, reports })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrimeMode {
    CompletelyPrime,
    Comonoform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SupplementOutcome {
    /// The hypothesis fails: some prime member of F0 is outside F.
    Vacuous,
    /// Hypothesis and conclusion both hold: F0 is contained in F.
    Satisfied,
    /// Hypothesis holds but the conclusion fails; impossible when the
    /// preconditions are met.
    Violated,
}

/// Supplement to the prime ideal principles: for F right Oka (divisible in
/// comonoform mode) and F0 a semifilter, if every completely prime (resp.
/// comonoform) member of F0 lies in F, then all of F0 lies in F.
pub fn supplement_check(
    lab: &Lab,
    fam: &IdealFamily,
    f0: &IdealFamily,
    mode: PrimeMode,
) -> Result<SupplementOutcome> {
    if !verify_oka(lab, fam).holds() {
        return Err(Error::PreconditionUnverified {
            family: fam.name.clone(),
            needs: "right Oka with R as a member".into(),
        });
    }
    if mode == PrimeMode::Comonoform && !verify_divisible(lab, fam).holds {
        return Err(Error::PreconditionUnverified {
            family: fam.name.clone(),
            needs: "divisibility".into(),
        });
    }
    if !verify_semifilter(lab, f0).holds {
        return Err(Error::PreconditionUnverified {
            family: f0.name.clone(),
            needs: "semifilter (upward closure)".into(),
        });
    }
    let lat = lab.lattice();
    let is_prime = |i: u32| match mode {
        PrimeMode::CompletelyPrime => prime::completely_prime(lab, i).0,
        PrimeMode::Comonoform => prime::is_comonoform(lab, i),
    };
    let hypothesis = (0..lat.len() as u32)
        .into_par_iter()
        .all(|i| !f0.contains(i) || fam.contains(i) || !is_prime(i));
    if !hypothesis {
        return Ok(SupplementOutcome::Vacuous);
    }
    let conclusion = (0..lat.len() as u32).all(|i| !f0.contains(i) || fam.contains(i));
    Ok(if conclusion { SupplementOutcome::Satisfied } else { SupplementOutcome::Violated })
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct WeakOkaOutcome {
    /// Every maximal element of F' is completely prime.
    pub all_max_completely_prime: bool,
    /// For every I maximal in F' and every a in the idealizer of I, not
    /// both I + aR and a⁻¹I lie in F.
    pub restricted_oka_holds: bool,
}

/// The two sides of the weak Oka equivalence, which holds for any family:
/// the maximal complement consists of completely prime ideals exactly when
/// the Oka property holds at every (I, a) with I maximal in F' and a in the
/// idealizer of I.
pub fn weak_oka_check(lab: &Lab, fam: &IdealFamily) -> WeakOkaOutcome {
    let lat = lab.lattice();
    let tables = lab.tables();
    let n = lab.n_elements();
    let maxc = max_complement(lab, fam);
    let all_cp = maxc.par_iter().all(|&i| prime::completely_prime(lab, i).0);
    let restricted = maxc.par_iter().all(|&i| {
        (0..n).all(|a| {
            !(lat.le(i, tables.quot(i, a))
                && fam.contains(tables.ext(i, a))
                && fam.contains(tables.quot(i, a)))
        })
    });
    WeakOkaOutcome { all_max_completely_prime: all_cp, restricted_oka_holds: restricted }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExtensionOutcome {
    pub contains_ring: bool,
    /// The class of cyclic modules {R/I : I in F} is closed under
    /// extensions with cyclic outer term.
    pub closed_under_extensions: bool,
    pub oka: bool,
}

/// For a similarity-closed family, F is right Oka exactly when its class of
/// cyclic modules is closed under extensions. Extensions of cyclics are
/// realized two ways and cross-checked: through the lattice tables (cyclic
/// submodules of R/I are the (I + aR)/I, isomorphic to R/a⁻¹I) and through
/// module arithmetic on every element of every cyclic module.
pub fn extension_closure_check(lab: &Lab, fam: &IdealFamily) -> Result<ExtensionOutcome> {
    let lat = lab.lattice();
    let tables = lab.tables();
    let n = lab.n_elements();
    let top = lat.top();
    let sim_violation: Option<(u32, usize)> = (0..lat.len() as u32)
        .into_par_iter()
        .filter(|&i| !fam.contains(i))
        .filter_map(|i| {
            (0..n)
                .find(|&a| tables.ext(i, a) == top && fam.contains(tables.quot(i, a)))
                .map(|a| (i, a))
        })
        .min();
    if let Some((i, _)) = sim_violation {
        return Err(Error::PreconditionUnverified {
            family: fam.name.clone(),
            needs: format!("similarity closure (violated at ideal {i})"),
        });
    }
    let table_closed = verify_oka(lab, fam).closed;
    let ring = lab.ring();
    let module_closed = (0..lat.len() as u32)
        .into_par_iter()
        .filter(|&i| !fam.contains(i))
        .all(|i| {
            let m = FiniteModule::cyclic(ring, lat.ideal(i));
            let gen = m.generator().expect("cyclic module has a generator").to_vec();
            (0..m.element_count() as u64).all(|t| {
                let v = m.elem_at(t);
                let sub_class = lat
                    .index_of(&m.annihilator_of(&v))
                    .expect("annihilator is a lattice ideal");
                if !fam.contains(sub_class) {
                    return true;
                }
                let c = m.cyclic_submodule(&v);
                let quo_class = lat
                    .index_of(&m.preimage_of(&gen, &c))
                    .expect("quotient annihilator is a lattice ideal");
                !fam.contains(quo_class)
            })
        });
    assert_eq!(
        table_closed, module_closed,
        "table and module realizations of cyclic extensions must agree for {}",
        fam.name
    );
    Ok(ExtensionOutcome {
        contains_ring: fam.contains(top),
        closed_under_extensions: module_closed,
        oka: fam.contains(top) && module_closed,
    })
}

/// A similarity-closed right Oka family containing every maximal right
/// ideal contains all right ideals (every cyclic has a filtration by
/// simples). Returns whether the implication is satisfied.
pub fn filtration_check(lab: &Lab, fam: &IdealFamily) -> bool {
    let lat = lab.lattice();
    let premise = lat.maximals().iter().all(|&m| fam.contains(m)) && fam.contains(lat.top());
    !premise || fam.member_count() == lat.len()
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct MsetOps {
    pub is_right_ore: bool,
    pub is_m_system: bool,
    pub is_right_saturated: bool,
}

pub fn mset_ops(lab: &Lab, s: &MultiplicativeSet) -> MsetOps {
    let ring = lab.ring();
    let tables = lab.tables();
    let sets = lab.elem_sets();
    let n = lab.n_elements();
    // Right Ore: for every a in R and s in S, aS meets sR.
    let is_right_ore = (0..n).into_par_iter().all(|a| {
        let av = lab.elem(a);
        let mut at = vec![0u16; ring.dim()];
        s.indices().iter().all(|&si| {
            let s_principal = &sets[tables.principal(si) as usize];
            s.indices().iter().any(|&t| {
                ring.mul_vec(&av, &lab.elem(t), &mut at);
                s_principal.get(ring.index_of(&at) as usize)
            })
        })
    });
    let is_m_system = is_m_system_set(lab, s.element_set());
    // Right saturated: ab in S forces a in S.
    let is_right_saturated = (0..n).into_par_iter().all(|a| {
        if s.contains(a) {
            return true;
        }
        let av = lab.elem(a);
        let mut ab = vec![0u16; ring.dim()];
        (0..n).all(|b| {
            ring.mul_vec(&av, &lab.elem(b), &mut ab);
            !s.contains(ring.index_of(&ab) as usize)
        })
    });
    MsetOps { is_right_ore, is_m_system, is_right_saturated }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverOutcome {
    /// Maximal right ideals disjoint from S.
    pub ideal_indices: Vec<u32>,
    pub all_comonoform: bool,
    /// The union of those ideals is exactly the complement of S.
    pub union_matches: bool,
}

/// For a right saturated right Ore set S, the complement of S is covered by
/// the right ideals maximal with respect to being disjoint from S, and each
/// of those is comonoform.
pub fn saturated_ore_cover_check(lab: &Lab, s: &MultiplicativeSet) -> Result<CoverOutcome> {
    let ops = mset_ops(lab, s);
    if !ops.is_right_saturated {
        return Err(Error::BadMultiplicativeSet("not right saturated".into()));
    }
    if !ops.is_right_ore {
        return Err(Error::BadMultiplicativeSet("not right Ore".into()));
    }
    let lat = lab.lattice();
    let sets = lab.elem_sets();
    let disjoint: Vec<u32> = (0..lat.len() as u32)
        .filter(|&i| !sets[i as usize].intersects(s.element_set()))
        .collect();
    let maximal: Vec<u32> = disjoint
        .iter()
        .copied()
        .filter(|&i| {
            disjoint.iter().all(|&j| j == i || !lat.le(i, j))
        })
        .collect();
    let all_comonoform = maximal.iter().all(|&i| prime::is_comonoform(lab, i));
    let mut union = BitSet::new(lab.n_elements());
    for &i in &maximal {
        union.or_with(&sets[i as usize]);
    }
    let union_matches = (0..lab.n_elements()).all(|x| union.get(x) == !s.contains(x));
    Ok(CoverOutcome { ideal_indices: maximal, all_comonoform, union_matches })
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundedReport {
    /// Every essential right ideal contains a right-essential two-sided
    /// ideal (equivalently its core is essential).
    pub right_bounded: bool,
    /// The set of essential two-sided ideals is closed under squaring.
    pub essential_two_sided_square_closed: bool,
    /// Every essential right ideal is finitely generated; automatic here.
    pub finitely_generated: bool,
    /// Every essential comonoform right ideal has essential core.
    pub essential_comonoform_essential_core: bool,
    /// When both hypotheses hold, whether the criterion's equivalence held.
    pub criterion: Option<bool>,
}

/// The boundedness criterion: under the squaring and finite-generation
/// hypotheses, R is right bounded exactly when every essential comonoform
/// right ideal has right essential core.
pub fn bounded_checks(lab: &Lab) -> BoundedReport {
    let lat = lab.lattice();
    let essentials: Vec<u32> =
        (0..lat.len() as u32).filter(|&i| lat.is_essential(i)).collect();
    let right_bounded = essentials.iter().all(|&i| lat.is_essential(lat.core_of(i)));
    let square_closed = lat
        .two_sided_indices()
        .iter()
        .filter(|&&i| lat.is_essential(i))
        .all(|&i| lat.is_essential(product_index(lab, i, i)));
    let ecc = essentials
        .iter()
        .filter(|&&i| prime::is_comonoform(lab, i))
        .all(|&i| lat.is_essential(lat.core_of(i)));
    let criterion = if square_closed { Some(right_bounded == ecc) } else { None };
    BoundedReport {
        right_bounded,
        essential_two_sided_square_closed: square_closed,
        finitely_generated: true,
        essential_comonoform_essential_core: ecc,
        criterion,
    }
}

/// In a simple ring, exhibit a comonoform right ideal with zero core: any
/// maximal right ideal works (the zero ideal in a division ring).
pub fn prime_goldie_core_check(lab: &Lab) -> Result<u32> {
    if !lab.classification().simple_ring {
        return Err(Error::PreconditionUnverified {
            family: "prime core exhibit".into(),
            needs: "a simple ring".into(),
        });
    }
    let lat = lab.lattice();
    let p = if lab.classification().division_ring {
        lat.zero()
    } else {
        lat.maximals()[0]
    };
    assert_eq!(lat.core_of(p), lat.zero(), "proper ideals of simple rings have zero core");
    assert!(prime::is_comonoform(lab, p));
    Ok(p)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TorsionfreeEquivalence {
    /// No nonzero element of M is killed by a nonzero ring element.
    pub no_zero_divisors: bool,
    /// Every nonzero completely prime right ideal contains an element
    /// acting injectively on M.
    pub every_cp_has_non_zero_divisor: bool,
    /// Every nonzero completely prime right ideal kills no nonzero element
    /// of M jointly.
    pub every_cp_joint_ann_zero: bool,
}

impl TorsionfreeEquivalence {
    pub fn all_agree(&self) -> bool {
        self.no_zero_divisors == self.every_cp_has_non_zero_divisor
            && self.no_zero_divisors == self.every_cp_joint_ann_zero
    }
}

/// The three equivalent statements of the torsionfree characterization for
/// a nonzero module, each computed independently.
pub fn torsionfree_characterization_check(
    lab: &Lab,
    m: &FiniteModule,
) -> Result<TorsionfreeEquivalence> {
    assert!(m.dim() > 0, "the characterization concerns nonzero modules");
    let f = lab.ring().field();
    let zd = module::zero_divisors_on(m, lab.n_elements() as u64)?;
    // Zero always has singular action on a nonzero module, so "no zero
    // divisors" means the zero element is the only one.
    let no_zero_divisors = zd.len() == 1;
    let lat = lab.lattice();
    let zero = lat.zero();
    let nonzero_cps: Vec<u32> = (0..lat.len() as u32)
        .filter(|&i| i != zero && prime::completely_prime(lab, i).0)
        .collect();
    let every_cp_has_non_zero_divisor = nonzero_cps.iter().all(|&p| {
        let ideal = lat.ideal(p);
        ideal
            .elements()
            .iter()
            .any(|z| linalg::rank(f, &m.elem_action(z)) == m.dim())
    });
    let fam = family_finite_ann_set(lab, m, m.name());
    let every_cp_joint_ann_zero = nonzero_cps.iter().all(|&p| fam.contains(p));
    Ok(TorsionfreeEquivalence {
        no_zero_divisors,
        every_cp_has_non_zero_divisor,
        every_cp_joint_ann_zero,
    })
}

/// The domain characterization is the torsionfree characterization applied
/// to the regular module; returns it together with the direct domain test.
pub fn domain_characterization_check(lab: &Lab) -> Result<(bool, TorsionfreeEquivalence)> {
    let eq = torsionfree_characterization_check(lab, lab.regular())?;
    Ok((lab.classification().domain, eq))
}

/// For an injective module E, every maximal point annihilator of E is
/// comonoform.
pub fn lambek_michler_check(lab: &Lab, e: &FiniteModule) -> Result<bool> {
    if !module::is_injective(e, lab.lattice()) {
        return Err(Error::PreconditionUnverified {
            family: format!("maximal point annihilators of {}", e.name()),
            needs: "an injective module".into(),
        });
    }
    let anns = module::maximal_point_annihilators(e, lab.budget().oracle_cap)?;
    let lat = lab.lattice();
    Ok(anns.iter().all(|p| {
        let i = lat.index_of(p).expect("annihilator is a lattice ideal");
        prime::is_comonoform(lab, i)
    }))
}

/// The zero divisors of M are exactly the union of its maximal point
/// annihilators, and each of those is completely prime.
pub fn zero_divisor_union_check(lab: &Lab, m: &FiniteModule) -> Result<bool> {
    let ring = lab.ring();
    let lat = lab.lattice();
    let zd = module::zero_divisors_on(m, lab.n_elements() as u64)?;
    let mut zd_set = BitSet::new(lab.n_elements());
    for z in &zd {
        zd_set.set(ring.index_of(z) as usize);
    }
    let anns = module::maximal_point_annihilators(m, lab.budget().oracle_cap)?;
    let sets = lab.elem_sets();
    let mut union = BitSet::new(lab.n_elements());
    let mut all_cp = true;
    for p in &anns {
        let i = lat.index_of(p).expect("annihilator is a lattice ideal");
        union.or_with(&sets[i as usize]);
        all_cp &= prime::completely_prime(lab, i).0;
    }
    let equal = (0..lab.n_elements()).all(|x| union.get(x) == zd_set.get(x));
    Ok(all_cp && equal)
}

/// The standard battery of families for a ring: every parameter-free
/// builder plus the parameterized ones instantiated at canonical modules
/// (the regular module, each simple, the semisimple quotient as a left
/// module).
pub fn standard_families(lab: &Lab) -> Result<Vec<IdealFamily>> {
    let units = MultiplicativeSet::units(lab);
    let mut out = vec![
        family_mset_meet(lab, &units, "units"),
        family_s_torsion(lab, &units, "units")?,
        family_s_torsionfree(lab, &units, "units"),
        family_dense(lab),
        family_essential(lab),
        family_summand(lab),
        family_injective_factor(lab),
        family_projective_factor(lab),
        family_finite_ann_set(lab, lab.regular(), "regular"),
        family_point_ann_complement(lab, lab.regular(), "regular")?,
        family_evade(lab, lab.regular(), "regular")?,
        family_mu_le(lab, 1)?,
    ];
    for (k, s) in lab.simples().reps().iter().enumerate() {
        let label = format!("simple{k}");
        out.push(family_extend_into(lab, s, &label));
        out.push(family_cogenerated(lab, s, &label));
    }
    if lab.lattice().is_two_sided(lab.lattice().radical()) {
        let n = LeftModule::left_quotient(lab.ring(), lab.radical_ideal())?;
        out.push(family_tensor_injective(lab, &n, "semisimple quotient"));
    }
    if lab.classification().self_injective {
        out.push(family_lift_from(lab, lab.regular(), "regular")?);
    }
    Ok(out)
}

/// Everything worth publishing about one family.
#[derive(Serialize)]
pub struct FamilyReport {
    pub name: String,
    pub provenance: String,
    pub member_count: usize,
    pub contains_ring: bool,
    pub oka: bool,
    pub oka_witness: Option<PairWitness>,
    pub divisible: bool,
    pub semifilter: bool,
    /// None when the Gabriel axiom-four scan exceeded the budget.
    pub gabriel: Option<bool>,
    pub max_complement: Vec<u32>,
    pub max_complement_reports: Vec<PrimeReport>,
}

pub fn family_report(lab: &Lab, fam: &IdealFamily) -> FamilyReport {
    let oka = verify_oka(lab, fam);
    let divisible = verify_divisible(lab, fam);
    let semifilter = verify_semifilter(lab, fam);
    let gabriel = match verify_gabriel(lab, fam) {
        Ok(v) => Some(v.holds),
        Err(_) => None,
    };
    let maxc = max_complement(lab, fam);
    let reports = maxc.iter().map(|&i| prime::prime_report(lab, i)).collect();
    FamilyReport {
        name: fam.name.clone(),
        provenance: fam.provenance.clone(),
        member_count: fam.member_count(),
        contains_ring: oka.contains_ring,
        oka: oka.holds(),
        oka_witness: oka.witness,
        divisible: divisible.holds,
        semifilter: semifilter.holds,
        gabriel,
        max_complement: maxc,
        max_complement_reports: reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lab::Budget;

    fn lab_for(name: &str) -> Lab {
        let ring = catalog::find(name).expect("catalog ring").ring;
        Lab::new(&ring, Budget::default()).unwrap()
    }

    fn family_from_indices(lab: &Lab, name: &str, indices: &[u32]) -> IdealFamily {
        let mut members = BitSet::new(lab.lattice().len());
        for &i in indices {
            members.set(i as usize);
        }
        IdealFamily { name: name.into(), provenance: format!("manual({name})"), members }
    }

    #[test]
    fn dense_family_is_pinned() {
        let lab = lab_for("ut2_gf2");
        let fam = family_dense(&lab);
        assert_eq!(fam.member_count(), 2);
        let lat = lab.lattice();
        let proper: Vec<u32> =
            fam.member_indices().into_iter().filter(|&i| i != lat.top()).collect();
        assert_eq!(proper.len(), 1);
        assert_eq!(lat.ideal(proper[0]).dim(), 2);
        assert!(lat.is_two_sided(proper[0]));
        // Its maximal complement has three members, all comonoform, exactly
        // one of them of dimension two.
        let maxc = max_complement(&lab, &fam);
        assert_eq!(maxc.len(), 3);
        assert!(maxc.iter().all(|&i| prime::is_comonoform(&lab, i)));
        assert_eq!(maxc.iter().filter(|&&i| lat.ideal(i).dim() == 2).count(), 1);

        let lab = lab_for("mat2_gf2");
        let fam = family_dense(&lab);
        assert_eq!(fam.member_count(), 1);
        assert_eq!(max_complement(&lab, &fam).len(), 3);
    }

    #[test]
    fn dense_family_is_gabriel() {
        for name in ["ut2_gf2", "mat2_gf2", "trunc_gf2_3", "c3_gf2"] {
            let lab = lab_for(name);
            let fam = family_dense(&lab);
            let g = verify_gabriel(&lab, &fam).unwrap();
            assert!(g.holds, "dense family must be Gabriel on {name}");
            // Gabriel forces divisible Oka.
            assert!(verify_oka(&lab, &fam).holds());
            assert!(verify_divisible(&lab, &fam).holds);
            dpip(&lab, &fam).unwrap();
        }
    }

    #[test]
    fn essential_family_matches_dense_only_when_nonsingular() {
        // On the upper triangular ring the essential and dense families
        // coincide; on the chain ring they differ and the essential family
        // fails the gluing axiom.
        let lab = lab_for("ut2_gf2");
        let dense = family_dense(&lab);
        let ess = family_essential(&lab);
        assert_eq!(dense.member_indices(), ess.member_indices());

        let lab = lab_for("trunc_gf2_3");
        let dense = family_dense(&lab);
        let ess = family_essential(&lab);
        assert_eq!(dense.member_count(), 1);
        assert_eq!(ess.member_count(), 3);
        let g = verify_gabriel(&lab, &ess).unwrap();
        assert!(!g.holds);
        assert!(matches!(g.failure, Some(GabrielFailure::GluingFails { .. })));
    }

    #[test]
    fn units_meet_family_is_just_the_ring() {
        for name in ["ut2_gf2", "mat2_gf2", "trunc_gf3_2"] {
            let lab = lab_for(name);
            let units = MultiplicativeSet::units(&lab);
            let fam = family_mset_meet(&lab, &units, "units");
            assert_eq!(fam.member_indices(), vec![lab.lattice().top()]);
            let report = cpip(&lab, &fam).unwrap();
            let mut maxc = report.max_complement.clone();
            maxc.sort_unstable();
            let mut maxs = lab.lattice().maximals().to_vec();
            maxs.sort_unstable();
            assert_eq!(maxc, maxs);
            // For a right Ore set the S-torsion family is the meet family.
            let tor = family_s_torsion(&lab, &units, "units").unwrap();
            assert_eq!(tor.member_indices(), fam.member_indices());
        }
    }

    #[test]
    fn torsionfree_family_for_units_is_everything() {
        let lab = lab_for("ut2_gf2");
        let units = MultiplicativeSet::units(&lab);
        let fam = family_s_torsionfree(&lab, &units, "units");
        assert_eq!(fam.member_count(), lab.lattice().len());
        assert!(verify_divisible(&lab, &fam).holds);
        assert!(verify_oka(&lab, &fam).holds());
    }

    #[test]
    fn summand_family_is_oka_but_not_gabriel_here() {
        let lab = lab_for("ut2_gf2");
        let fam = family_summand(&lab);
        assert_eq!(fam.member_count(), 5);
        assert!(verify_oka(&lab, &fam).holds());
        let g = verify_gabriel(&lab, &fam).unwrap();
        assert!(!g.holds);
        assert!(matches!(g.failure, Some(GabrielFailure::NotUpwardClosed { .. })));
        // Its maximal complement is the unique non-summand maximal ideal.
        let maxc = max_complement(&lab, &fam);
        assert_eq!(maxc.len(), 1);
        assert!(lab.lattice().maximals().contains(&maxc[0]));
        cpip(&lab, &fam).unwrap();
    }

    #[test]
    fn projective_factor_equals_summand() {
        for name in ["ut2_gf2", "mat2_gf2", "trunc_gf2_2", "c3_gf2", "gf2_x_gf2"] {
            let lab = lab_for(name);
            let a = family_projective_factor(&lab);
            let b = family_summand(&lab);
            assert_eq!(a.member_indices(), b.member_indices(), "on {name}");
        }
    }

    #[test]
    fn injective_factor_on_the_chain_ring() {
        let lab = lab_for("trunc_gf2_2");
        assert!(lab.classification().self_injective);
        let fam = family_injective_factor(&lab);
        // R/0 = R is injective, R/R = 0 is injective, R/(x) = k is not.
        assert_eq!(fam.member_count(), 2);
        assert!(fam.contains(lab.lattice().zero()));
        assert!(fam.contains(lab.lattice().top()));
        assert!(verify_oka(&lab, &fam).holds());
        let maxc = max_complement(&lab, &fam);
        assert_eq!(maxc.len(), 1);
        assert!(prime::completely_prime(&lab, maxc[0]).0);
    }

    #[test]
    fn mu_family_divisibility_fails_with_witness() {
        let lab = lab_for("ut2_gf2");
        let fam = family_mu_le(&lab, 1).unwrap();
        // All seven ideals except the non-principal maximal one.
        assert_eq!(fam.member_count(), 6);
        let d = verify_divisible(&lab, &fam);
        assert!(!d.holds);
        let w = d.witness.unwrap();
        assert!(fam.contains(w.ideal));
        // The biconditional of the weak Oka equivalence still holds.
        let weak = weak_oka_check(&lab, &fam);
        assert_eq!(weak.all_max_completely_prime, weak.restricted_oka_holds);
    }

    #[test]
    fn zero_and_ring_family_is_oka() {
        // {0, R} is right Oka on any finite ring: a⁻¹I = 0 forces the left
        // multiplication kernel of a to vanish, so a is a unit and I = 0,
        // while a⁻¹I = R means a in I, making I + aR = I.
        for name in ["ut2_gf2", "mat2_gf2", "trunc_gf2_3"] {
            let lab = lab_for(name);
            let fam = family_from_indices(
                &lab,
                "zero_and_ring",
                &[lab.lattice().zero(), lab.lattice().top()],
            );
            let v = verify_oka(&lab, &fam);
            assert!(v.holds(), "{{0, R}} must be Oka on {name}");
            cpip(&lab, &fam).unwrap();
        }
    }

    #[test]
    fn two_maximals_family_is_not_oka() {
        // R together with two of the three maximal right ideals of the
        // matrix ring: a matrix unit extends 0 into one maximal and
        // quotients it into another, so the Oka property fails at I = 0.
        let lab = lab_for("mat2_gf2");
        let lat = lab.lattice();
        let maxs = lat.maximals();
        let fam =
            family_from_indices(&lab, "two_maximals", &[maxs[0], maxs[1], lat.top()]);
        let v = verify_oka(&lab, &fam);
        assert!(!v.holds());
        let w = v.witness.unwrap();
        assert_eq!(w.ideal, lat.zero());
        let weak = weak_oka_check(&lab, &fam);
        assert_eq!(weak.all_max_completely_prime, weak.restricted_oka_holds);
    }

    #[test]
    fn weak_oka_biconditional_with_both_sides_false() {
        // F = {M1, M2, R} on the upper triangular ring: the span of E12 is
        // then maximal in the complement but not completely prime, and the
        // restricted Oka property fails at it.
        let lab = lab_for("ut2_gf2");
        let lat = lab.lattice();
        let mut indices = lat.maximals().to_vec();
        indices.push(lat.top());
        let fam = family_from_indices(&lab, "maximals_and_ring", &indices);
        let weak = weak_oka_check(&lab, &fam);
        assert!(!weak.all_max_completely_prime);
        assert!(!weak.restricted_oka_holds);
    }

    #[test]
    fn weak_oka_biconditional_across_standard_families() {
        for name in ["ut2_gf2", "mat2_gf2", "trunc_gf2_3", "c3_gf2"] {
            let lab = lab_for(name);
            for fam in standard_families(&lab).unwrap() {
                let weak = weak_oka_check(&lab, &fam);
                assert_eq!(
                    weak.all_max_completely_prime, weak.restricted_oka_holds,
                    "weak Oka equivalence failed for {} on {name}",
                    fam.name
                );
            }
        }
    }

    #[test]
    fn standard_families_contain_the_ring_and_verified_oka_ones_pass_cpip() {
        // Families with a theorem behind them must verify as right Oka on
        // every ring; "essential" and "mu_le" carry no such claim (on the
        // chain ring, I = 0 with a = x has both x⁻¹0 and xR essential).
        let no_claim = ["essential", "mu_le"];
        for name in ["ut2_gf2", "trunc_gf2_2", "c3_gf2"] {
            let lab = lab_for(name);
            for fam in standard_families(&lab).unwrap() {
                assert!(
                    fam.contains(lab.lattice().top()),
                    "{} lacks R on {name}",
                    fam.name
                );
                if no_claim.contains(&fam.name.as_str()) {
                    if verify_oka(&lab, &fam).holds() {
                        cpip(&lab, &fam).unwrap();
                    }
                    continue;
                }
                let v = verify_oka(&lab, &fam);
                assert!(v.holds(), "{} is not Oka on {name}", fam.name);
                cpip(&lab, &fam).unwrap();
            }
        }
    }

    #[test]
    fn verified_oka_families_are_similarity_closed() {
        let lab = lab_for("ut2_gf2");
        let reps = prime::similarity_classes(&lab);
        for fam in standard_families(&lab).unwrap() {
            if !verify_oka(&lab, &fam).holds() {
                continue;
            }
            for i in 0..lab.lattice().len() as u32 {
                for j in 0..lab.lattice().len() as u32 {
                    if reps[i as usize] == reps[j as usize] {
                        assert_eq!(
                            fam.contains(i),
                            fam.contains(j),
                            "{} splits a similarity class",
                            fam.name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn finite_ann_family_on_the_regular_module() {
        let lab = lab_for("ut2_gf2");
        let fam = family_finite_ann_set(&lab, lab.regular(), "regular");
        // Only the left-faithful ideals: the two-sided maximal ideal whose
        // every column is hit, and R itself.
        assert_eq!(fam.member_count(), 2);
        let maxc = max_complement(&lab, &fam);
        assert_eq!(maxc.len(), 3);
        assert!(maxc.iter().all(|&i| prime::completely_prime(&lab, i).0));
        cpip(&lab, &fam).unwrap();
    }

    #[test]
    fn point_annihilator_complement_family() {
        for name in ["ut2_gf2", "trunc_gf2_3", "mat2_gf2"] {
            let lab = lab_for(name);
            let fam = family_point_ann_complement(&lab, lab.regular(), "regular").unwrap();
            assert!(verify_oka(&lab, &fam).holds(), "on {name}");
            cpip(&lab, &fam).unwrap();
        }
    }

    #[test]
    fn supplement_vacuous_and_satisfied_instances() {
        // Injective-factor on the chain ring: the completely prime ideal
        // (x) is outside the family, so the hypothesis fails.
        let lab = lab_for("trunc_gf2_2");
        let fam = family_injective_factor(&lab);
        let all = family_from_indices(
            &lab,
            "all",
            &(0..lab.lattice().len() as u32).collect::<Vec<_>>(),
        );
        let out = supplement_check(&lab, &fam, &all, PrimeMode::CompletelyPrime).unwrap();
        assert_eq!(out, SupplementOutcome::Vacuous);

        // Summand family on the semisimple matrix ring is everything, so
        // any semifilter is absorbed.
        let lab = lab_for("mat2_gf2");
        let fam = family_summand(&lab);
        assert_eq!(fam.member_count(), lab.lattice().len());
        let all = family_from_indices(
            &lab,
            "all",
            &(0..lab.lattice().len() as u32).collect::<Vec<_>>(),
        );
        let out = supplement_check(&lab, &fam, &all, PrimeMode::CompletelyPrime).unwrap();
        assert_eq!(out, SupplementOutcome::Satisfied);

        // A nontrivial comonoform-mode instance: the dense family on the
        // upper triangular ring absorbs the semifilter above its unique
        // proper member.
        let lab = lab_for("ut2_gf2");
        let fam = family_dense(&lab);
        let proper = fam
            .member_indices()
            .into_iter()
            .find(|&i| i != lab.lattice().top())
            .unwrap();
        let f0 = family_from_indices(&lab, "above_dense", &[proper, lab.lattice().top()]);
        let out = supplement_check(&lab, &fam, &f0, PrimeMode::Comonoform).unwrap();
        assert_eq!(out, SupplementOutcome::Satisfied);
    }

    #[test]
    fn extension_closure_agrees_with_oka() {
        let lab = lab_for("ut2_gf2");
        for fam in standard_families(&lab).unwrap() {
            if fam.name == "mu_le" {
                continue;
            }
            let out = extension_closure_check(&lab, &fam).unwrap();
            assert_eq!(out.oka, verify_oka(&lab, &fam).holds(), "family {}", fam.name);
            assert!(filtration_check(&lab, &fam), "family {}", fam.name);
        }
    }

    #[test]
    fn extension_closure_rejects_non_similarity_closed_families() {
        let lab = lab_for("mat2_gf2");
        let lat = lab.lattice();
        let fam = family_from_indices(
            &lab,
            "one_maximal",
            &[lat.maximals()[0], lat.top()],
        );
        match extension_closure_check(&lab, &fam) {
            Err(Error::PreconditionUnverified { needs, .. }) => {
                assert!(needs.contains("similarity"));
            }
            other => panic!("expected a similarity rejection, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn semifilter_core_families_are_divisible_oka() {
        // G = {M2, R} on the upper triangular ring: two-sided, upward
        // closed among two-sided ideals, product closed.
        let lab = lab_for("ut2_gf2");
        let lat = lab.lattice();
        let m2 = (0..lat.len() as u32)
            .find(|&i| {
                lat.is_two_sided(i)
                    && lat.ideal(i).dim() == 2
                    && lat.maximals().contains(&i)
                    && lab.lattice().is_essential(i)
            })
            .expect("the essential maximal two-sided ideal");
        let mut members = BitSet::new(lat.len());
        members.set(m2 as usize);
        members.set(lat.top() as usize);
        let g = IdealSemifilter::new(&lab, members).unwrap();
        let fam = family_core_in_semifilter(&lab, &g, "essential maximal");
        assert_eq!(fam.member_count(), 2);
        assert!(verify_oka(&lab, &fam).holds());
        assert!(verify_divisible(&lab, &fam).holds);
        dpip(&lab, &fam).unwrap();

        // The m-system of units gives the core-meets family {R}.
        let units = MultiplicativeSet::units(&lab);
        let fam = family_core_meets_mset(&lab, units.element_set(), "units").unwrap();
        assert_eq!(fam.member_indices(), vec![lat.top()]);
        assert!(verify_divisible(&lab, &fam).holds);
        dpip(&lab, &fam).unwrap();
    }

    #[test]
    fn cogenerated_families_decide_comonoformity() {
        for name in ["ut2_gf2", "trunc_gf2_3", "c3_gf2", "mat2_gf2"] {
            let lab = lab_for(name);
            let lat = lab.lattice();
            let ring = lab.ring();
            for p in lat.proper_indices() {
                let m = FiniteModule::cyclic(ring, lat.ideal(p));
                let fam = family_cogenerated(&lab, &m, "R/P");
                let g = verify_gabriel(&lab, &fam).unwrap();
                assert!(g.holds, "cogenerated families are Gabriel ({name}, ideal {p})");
                let in_max = max_complement(&lab, &fam).contains(&p);
                assert_eq!(
                    prime::is_comonoform(&lab, p),
                    in_max,
                    "comonoformity must match Max(F') membership ({name}, ideal {p})"
                );
            }
        }
    }

    #[test]
    fn mset_ops_on_units_and_one() {
        let lab = lab_for("ut2_gf2");
        let units = MultiplicativeSet::units(&lab);
        let ops = mset_ops(&lab, &units);
        assert!(ops.is_right_ore);
        assert!(ops.is_m_system);
        assert!(ops.is_right_saturated);

        let one = lab.ring().index_of(lab.ring().unit_coeffs()) as usize;
        let trivial = MultiplicativeSet::new(&lab, &[one]).unwrap();
        let ops = mset_ops(&lab, &trivial);
        assert!(ops.is_right_ore);
        assert!(ops.is_m_system);
        // The ring has a unit other than 1, so u · u⁻¹ = 1 breaks
        // saturation for the singleton set.
        assert!(!ops.is_right_saturated);

        // The complement of a maximal two-sided ideal is an m-system.
        let lat = lab.lattice();
        let m = lat
            .maximals()
            .iter()
            .copied()
            .find(|&i| lat.is_two_sided(i))
            .unwrap();
        let mut compl = BitSet::new(lab.n_elements());
        for x in 0..lab.n_elements() {
            if !lab.elem_sets()[m as usize].get(x) {
                compl.set(x);
            }
        }
        assert!(is_m_system_set(&lab, &compl));
    }

    #[test]
    fn saturated_ore_cover_on_units() {
        let lab = lab_for("ut2_gf2");
        let units = MultiplicativeSet::units(&lab);
        let out = saturated_ore_cover_check(&lab, &units).unwrap();
        assert_eq!(out.ideal_indices.len(), 2);
        assert!(out.all_comonoform);
        assert!(out.union_matches);

        let lab = lab_for("trunc_gf2_2");
        let units = MultiplicativeSet::units(&lab);
        let out = saturated_ore_cover_check(&lab, &units).unwrap();
        assert_eq!(out.ideal_indices.len(), 1);
        assert!(out.all_comonoform);
        assert!(out.union_matches);

        // In a field the complement of the units is {0}, covered by the
        // zero ideal.
        let lab = lab_for("gf4");
        let units = MultiplicativeSet::units(&lab);
        let out = saturated_ore_cover_check(&lab, &units).unwrap();
        assert_eq!(out.ideal_indices, vec![lab.lattice().zero()]);
        assert!(out.all_comonoform);
        assert!(out.union_matches);
    }

    #[test]
    fn bounded_reports() {
        let lab = lab_for("mat2_gf2");
        let r = bounded_checks(&lab);
        assert!(r.right_bounded);
        assert_eq!(r.criterion, Some(true));

        let lab = lab_for("ut2_gf2");
        let r = bounded_checks(&lab);
        assert!(r.right_bounded);
        assert!(r.essential_two_sided_square_closed);
        assert_eq!(r.criterion, Some(true));

        // On the chain ring of length three the squaring hypothesis fails:
        // the essential ideal (x²) squares to zero. Both sides of the
        // equivalence still happen to hold, but the criterion is off.
        let lab = lab_for("trunc_gf2_3");
        let r = bounded_checks(&lab);
        assert!(r.right_bounded);
        assert!(!r.essential_two_sided_square_closed);
        assert!(r.essential_comonoform_essential_core);
        assert_eq!(r.criterion, None);

        let lab = lab_for("c3_gf2");
        let r = bounded_checks(&lab);
        assert!(r.right_bounded);
        assert_eq!(r.criterion, Some(true));
    }

    #[test]
    fn prime_core_exhibits() {
        let lab = lab_for("mat2_gf2");
        let p = prime_goldie_core_check(&lab).unwrap();
        assert!(lab.lattice().maximals().contains(&p));

        let lab = lab_for("gf4");
        let p = prime_goldie_core_check(&lab).unwrap();
        assert_eq!(p, lab.lattice().zero());

        let lab = lab_for("ut2_gf2");
        assert!(prime_goldie_core_check(&lab).is_err());
    }

    #[test]
    fn torsionfree_and_domain_characterizations() {
        for name in ["ut2_gf2", "mat2_gf2", "trunc_gf2_2", "gf4", "c3_gf2"] {
            let lab = lab_for(name);
            let (domain, eq) = domain_characterization_check(&lab).unwrap();
            assert!(eq.all_agree(), "characterizations disagree on {name}");
            assert_eq!(domain, eq.no_zero_divisors, "domain test disagrees on {name}");
            // Per-simple instances of the torsionfree characterization.
            for s in lab.simples().reps() {
                let eq = torsionfree_characterization_check(&lab, s).unwrap();
                assert!(eq.all_agree(), "simple module case disagrees on {name}");
            }
        }
    }

    #[test]
    fn lambek_michler_and_zero_divisor_union() {
        for name in ["trunc_gf2_2", "mat2_gf2", "c3_gf2"] {
            let lab = lab_for(name);
            assert!(lab.classification().self_injective);
            assert!(lambek_michler_check(&lab, lab.regular()).unwrap(), "on {name}");
        }
        // A non-injective module is rejected.
        let lab = lab_for("trunc_gf2_2");
        let lat = lab.lattice();
        let proper = lat.proper_indices().find(|&i| lat.ideal(i).dim() == 1).unwrap();
        let k = FiniteModule::cyclic(lab.ring(), lat.ideal(proper));
        assert!(lambek_michler_check(&lab, &k).is_err());

        for name in ["ut2_gf2", "trunc_gf2_3", "mat2_gf2"] {
            let lab = lab_for(name);
            assert!(zero_divisor_union_check(&lab, lab.regular()).unwrap(), "on {name}");
            for s in lab.simples().reps() {
                assert!(zero_divisor_union_check(&lab, s).unwrap(), "simple on {name}");
            }
        }
    }

    #[test]
    fn every_catalog_ring_has_a_completely_prime_ideal() {
        for entry in catalog::default_catalog() {
            if entry.elements > 512 {
                continue;
            }
            let lab = Lab::new(&entry.ring, Budget::default()).unwrap();
            let found = (0..lab.lattice().len() as u32)
                .any(|i| prime::completely_prime(&lab, i).0);
            assert!(found, "{} has no completely prime right ideal", entry.name);
        }
    }

    #[test]
    fn invertible_family_over_the_triangular_pair() {
        let small = catalog::upper_triangular(2, 2).unwrap();
        let lab = Lab::new(&small, Budget::default()).unwrap();
        let big = catalog::matrix_ring(2, 2).unwrap();
        let embed = linalg::Mat::from_rows(
            &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]],
            4,
        );
        let pair = SubringPair::new(&small, &big, embed).unwrap();
        let fam = family_invertible(&lab, &pair).unwrap();
        assert!(fam.contains(lab.lattice().top()));
        // Monotone (upward closed), right Oka, and its maximal complement
        // members are completely prime.
        assert!(verify_semifilter(&lab, &fam).holds);
        assert!(verify_oka(&lab, &fam).holds());
        cpip(&lab, &fam).unwrap();
    }

    #[test]
    fn multiplicative_set_validation() {
        let lab = lab_for("ut2_gf2");
        // Missing 1.
        assert!(MultiplicativeSet::new(&lab, &[0]).is_err());
        // Not closed: a single unit of order two generates a valid set, but
        // leaving out a product is rejected.
        let ring = lab.ring();
        let one = ring.index_of(ring.unit_coeffs()) as usize;
        let u = ring.index_of(&[1, 1, 1]) as usize;
        assert!(MultiplicativeSet::new(&lab, &[one, u]).is_ok());
        let closure = MultiplicativeSet::closure_of(&lab, &[u]);
        assert_eq!(closure.len(), 2);
    }

    #[test]
    fn gabriel_scan_respects_the_budget() {
        let ring = catalog::find("ut2_gf2").unwrap().ring;
        let mut budget = Budget::default();
        budget.scan_budget = 4;
        let lab = Lab::new(&ring, budget).unwrap();
        let fam = family_essential(&lab);
        assert!(matches!(
            verify_gabriel(&lab, &fam),
            Err(Error::ScanBudget { .. })
        ));
    }
}
