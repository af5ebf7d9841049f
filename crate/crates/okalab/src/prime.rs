//! One-sided prime notions for right ideals: completely prime, extremely
//! prime, the matrix-unit criterion of Koh, comonoform ideals, similarity,
//! and whole-lattice spectra.
//!
//! A proper right ideal P is completely prime when a P inside P and ab in P
//! force a in P or b in P. It is extremely prime when ab in P alone forces
//! a in P or b in P. It satisfies the Koh condition when a R b inside P
//! forces a in P or b in P. It is comonoform when the cyclic module R/P is
//! monoform, i.e. every nonzero submodule of R/P is dense.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::lab::Lab;
use crate::linalg::{self, Mat};
use crate::module::{self, FiniteModule};
use crate::subring::SubringPair;

/// Elements exhibiting a failure: a I inside I and a b in I with neither
/// a nor b in I.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeWitness {
    pub a: Vec<u16>,
    pub b: Vec<u16>,
}

/// Completely prime test by definition, with the first failure witness in
/// element order. For a outside P with a P inside P, the quotient
/// (a inverse P) must collapse back to P.
pub fn completely_prime(lab: &Lab, p: u32) -> (bool, Option<PrimeWitness>) {
    let lat = lab.lattice();
    if p == lat.top() {
        return (false, None);
    }
    let tables = lab.tables();
    let sets = lab.elem_sets();
    let pset = &sets[p as usize];
    for a in 0..lab.n_elements() {
        if pset.get(a) {
            continue;
        }
        let q = tables.quot(p, a);
        if !lat.le(p, q) {
            // a P is not inside P, so a puts no constraint on P.
            continue;
        }
        if q != p {
            let qset = &sets[q as usize];
            let b = (0..lab.n_elements())
                .find(|&b| qset.get(b) && !pset.get(b))
                .expect("strictly larger ideal has an extra element");
            return (false, Some(PrimeWitness { a: lab.elem(a), b: lab.elem(b) }));
        }
    }
    (true, None)
}

/// Completely prime test through the endomorphism ring: P is completely
/// prime exactly when every nonzero endomorphism of R/P is injective.
/// Intended as an independent cross-check for the table route.
pub fn completely_prime_endo(lab: &Lab, p: u32) -> bool {
    let lat = lab.lattice();
    if p == lat.top() {
        return false;
    }
    let m = FiniteModule::cyclic(lab.ring(), lat.ideal(p));
    let homs = module::hom_space(&m, &m);
    let f = lab.ring().field();
    let q = f.q();
    let h = homs.len();
    let mut coeffs = vec![0u16; h];
    loop {
        let mut k = 0;
        while k < h {
            coeffs[k] += 1;
            if (coeffs[k] as u64) < q {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
        if k == h {
            return true;
        }
        let mut total = Mat::zeros(m.dim(), m.dim());
        for (c, mat) in coeffs.iter().zip(&homs) {
            if *c != 0 {
                total = linalg::mat_add(f, &total, &linalg::mat_scale(f, mat, FieldElement(*c)));
            }
        }
        if linalg::rank(f, &total) < m.dim() {
            return false;
        }
    }
}

/// Extremely prime: ab in P forces a in P or b in P, equivalently
/// a inverse P is inside P for every a outside P.
pub fn extremely_prime(lab: &Lab, p: u32) -> bool {
    let lat = lab.lattice();
    if p == lat.top() {
        return false;
    }
    let tables = lab.tables();
    let pset = &lab.elem_sets()[p as usize];
    (0..lab.n_elements()).all(|a| pset.get(a) || lat.le(tables.quot(p, a), p))
}

/// Koh condition: a R b inside I forces a in I or b in I. For a outside I
/// the set {b : a R b inside I} is the largest two-sided ideal inside
/// a inverse I, so the scan is a core lookup per element.
pub fn satisfies_koh(lab: &Lab, i: u32) -> (bool, Option<PrimeWitness>) {
    let lat = lab.lattice();
    if i == lat.top() {
        return (false, None);
    }
    let tables = lab.tables();
    let sets = lab.elem_sets();
    let iset = &sets[i as usize];
    for a in 0..lab.n_elements() {
        if iset.get(a) {
            continue;
        }
        let c = lat.core_of(tables.quot(i, a));
        if !lat.le(c, i) {
            let cset = &sets[c as usize];
            let b = (0..lab.n_elements())
                .find(|&b| cset.get(b) && !iset.get(b))
                .expect("core escapes I, so some element does");
            return (false, Some(PrimeWitness { a: lab.elem(a), b: lab.elem(b) }));
        }
    }
    (true, None)
}

/// Comonoform test: R/P is monoform, i.e. for all ideals N, U with
/// P strictly below N and N below U, Hom(U/N, R/P) = 0. A module with two
/// minimal nonzero submodules is not uniform and fails immediately.
pub fn is_comonoform(lab: &Lab, p: u32) -> bool {
    let lat = lab.lattice();
    if p == lat.top() {
        return false;
    }
    let strict: Vec<u32> =
        lat.above(p).iter_ones().map(|j| j as u32).filter(|&j| j != p).collect();
    let minimal_count = strict
        .iter()
        .filter(|&&n| strict.iter().all(|&m| m == n || !lat.le(m, n)))
        .count();
    if minimal_count != 1 {
        return false;
    }
    let target = FiniteModule::cyclic(lab.ring(), lat.ideal(p));
    let top = lat.top();
    for &n in &strict {
        if n == top {
            continue;
        }
        for u in lat.above(n).iter_ones() {
            let u = u as u32;
            if u == n {
                continue;
            }
            let section = lab.section_module(n, u);
            if !module::hom_space(&section, &target).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Similarity through the lattice tables: I and J are similar exactly when
/// some a has I + aR = R and a inverse I = J; then R/I and R/J are
/// isomorphic modules.
pub fn are_similar(lab: &Lab, i: u32, j: u32) -> bool {
    let lat = lab.lattice();
    let tables = lab.tables();
    let top = lat.top();
    (0..lab.n_elements()).any(|x| tables.ext(i, x) == top && tables.quot(i, x) == j)
}

/// Similarity through modules: R/I and R/J are isomorphic exactly when they
/// have equal dimension and one embeds in the other. Cross-check for
/// `are_similar`.
pub fn are_similar_modules(lab: &Lab, i: u32, j: u32) -> Result<bool> {
    let lat = lab.lattice();
    let mi = FiniteModule::cyclic(lab.ring(), lat.ideal(i));
    let mj = FiniteModule::cyclic(lab.ring(), lat.ideal(j));
    if mi.dim() != mj.dim() {
        return Ok(false);
    }
    module::embeds_in(&mi, &mj, lab.budget().scan_budget)
}

/// Representative (smallest index) of each ideal's similarity class. The
/// scan from I reaches the entire class, so representatives are canonical.
pub fn similarity_classes(lab: &Lab) -> Vec<u32> {
    let lat = lab.lattice();
    let tables = lab.tables();
    let top = lat.top();
    let n = lab.n_elements();
    let reps: Vec<u32> = (0..lat.len() as u32)
        .into_par_iter()
        .map(|i| {
            let mut rep = i;
            for x in 0..n {
                if tables.ext(i, x) == top {
                    rep = rep.min(tables.quot(i, x));
                }
            }
            rep
        })
        .collect();
    debug_assert!(reps.iter().enumerate().all(|(i, &r)| reps[r as usize] == r && r <= i as u32));
    reps
}

/// The prime spectra of the lattice: which proper right ideals are
/// completely prime, comonoform, extremely prime, maximal, and Koh.
#[derive(Clone, Debug, Serialize)]
pub struct Spectra {
    pub completely_prime: Vec<u32>,
    pub comonoform: Vec<u32>,
    pub extremely_prime: Vec<u32>,
    pub maximal: Vec<u32>,
    pub koh: Vec<u32>,
}

pub fn spectra(lab: &Lab) -> Spectra {
    let lat = lab.lattice();
    let indices: Vec<u32> = (0..lat.len() as u32).collect();
    let flags: Vec<(bool, bool, bool, bool)> = indices
        .par_iter()
        .map(|&i| {
            (
                completely_prime(lab, i).0,
                is_comonoform(lab, i),
                extremely_prime(lab, i),
                satisfies_koh(lab, i).0,
            )
        })
        .collect();
    let pick = |k: usize| -> Vec<u32> {
        indices
            .iter()
            .copied()
            .filter(|&i| match k {
                0 => flags[i as usize].0,
                1 => flags[i as usize].1,
                2 => flags[i as usize].2,
                _ => flags[i as usize].3,
            })
            .collect()
    };
    let s = Spectra {
        completely_prime: pick(0),
        comonoform: pick(1),
        extremely_prime: pick(2),
        maximal: lat.maximals().to_vec(),
        koh: pick(3),
    };
    debug_assert!(
        s.comonoform.iter().all(|i| s.completely_prime.contains(i)),
        "comonoform ideals are completely prime"
    );
    debug_assert!(
        s.extremely_prime.iter().all(|i| s.completely_prime.contains(i)),
        "extremely prime ideals are completely prime"
    );
    debug_assert!(
        s.maximal.iter().all(|i| s.comonoform.contains(i)),
        "maximal right ideals are comonoform"
    );
    s
}

/// Everything this module can say about one right ideal.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeReport {
    pub index: u32,
    pub dim: usize,
    pub proper: bool,
    pub two_sided: bool,
    pub maximal: bool,
    pub completely_prime: bool,
    pub extremely_prime: bool,
    pub comonoform: bool,
    pub koh: bool,
    /// Failure elements for the completely prime test, when it fails.
    pub witness: Option<PrimeWitness>,
}

pub fn prime_report(lab: &Lab, i: u32) -> PrimeReport {
    let lat = lab.lattice();
    let (cp, witness) = completely_prime(lab, i);
    PrimeReport {
        index: i,
        dim: lat.ideal(i).dim(),
        proper: lat.ideal(i).is_proper(),
        two_sided: lat.is_two_sided(i),
        maximal: lat.maximals().contains(&i),
        completely_prime: cp,
        extremely_prime: extremely_prime(lab, i),
        comonoform: is_comonoform(lab, i),
        koh: satisfies_koh(lab, i).0,
        witness,
    }
}

/// Outcome of matching the interval above a two-sided ideal I with the full
/// lattice of R/I.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientCorrespondence {
    pub ideals_above: usize,
    pub quotient_lattice: usize,
    pub bijective: bool,
    pub flags_match: bool,
}

/// For two-sided proper I, the right ideals of R containing I correspond to
/// the right ideals of R/I, preserving completely prime, comonoform, and
/// maximal.
pub fn quotient_correspondence_check(lab: &Lab, i: u32) -> Result<QuotientCorrespondence> {
    let lat = lab.lattice();
    let (q, proj, _sect) = crate::ideal::quotient_ring(lab.ring(), lat.ideal(i))?;
    let qlab = Lab::new(&q, *lab.budget())?;
    let f = lab.ring().field();
    let mut seen = vec![false; qlab.lattice().len()];
    let mut flags_match = true;
    let mut count = 0usize;
    for p in lat.above(i).iter_ones() {
        let p = p as u32;
        count += 1;
        let img = linalg::row_space(f, &linalg::mat_mul(f, lat.ideal(p).basis(), &proj));
        let qi = qlab
            .lattice()
            .index_of_basis(&img)
            .expect("image of an ideal above I is an ideal of the quotient");
        seen[qi as usize] = true;
        let same = completely_prime(lab, p).0 == completely_prime(&qlab, qi).0
            && is_comonoform(lab, p) == is_comonoform(&qlab, qi)
            && lat.maximals().contains(&p) == qlab.lattice().maximals().contains(&qi);
        if !same {
            flags_match = false;
        }
    }
    Ok(QuotientCorrespondence {
        ideals_above: count,
        quotient_lattice: qlab.lattice().len(),
        bijective: seen.iter().all(|&s| s) && count == qlab.lattice().len(),
        flags_match,
    })
}

/// Outcome of pulling a right ideal Q of the big ring back along an
/// embedding and testing the idealizer criterion: when Q is completely
/// prime and the image of the idealizer of the pullback P lands inside the
/// idealizer of Q, P must be completely prime.
#[derive(Clone, Debug, Serialize)]
pub struct PullbackOutcome {
    pub pullback_index: u32,
    pub idealizer_condition: bool,
    pub big_completely_prime: bool,
    pub small_completely_prime: bool,
    pub criterion_applies: bool,
}

pub fn pullback_check(
    pair: &SubringPair,
    small_lab: &Lab,
    big_lab: &Lab,
    q: u32,
) -> Result<PullbackOutcome> {
    if !pair.small().same_ring(small_lab.ring()) || !pair.big().same_ring(big_lab.ring()) {
        return Err(Error::BadEmbedding("labs do not match the embedding pair".into()));
    }
    let qid = big_lab.lattice().ideal(q);
    if !qid.is_proper() {
        return Err(Error::NotProper);
    }
    let p_ideal = pair.pullback_ideal(qid);
    let p = small_lab
        .lattice()
        .index_of(&p_ideal)
        .expect("pullback of a right ideal is in the lattice");
    let f = pair.big().field();
    let small_idealizer = p_ideal.idealizer();
    let big_idealizer = qid.idealizer();
    let big_pivots = big_idealizer.pivot_cols();
    let idealizer_condition = (0..small_idealizer.rows()).all(|r| {
        let img = pair.map_vec(small_idealizer.row(r));
        linalg::in_row_space(f, &img, &big_idealizer, &big_pivots)
    });
    let (big_cp, _) = completely_prime(big_lab, q);
    let (small_cp, _) = completely_prime(small_lab, p);
    let criterion_applies = big_cp && idealizer_condition;
    assert!(
        !criterion_applies || small_cp,
        "a completely prime ideal with the idealizer condition must pull back completely prime"
    );
    Ok(PullbackOutcome {
        pullback_index: p,
        idealizer_condition,
        big_completely_prime: big_cp,
        small_completely_prime: small_cp,
        criterion_applies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideal::RightIdeal;
    use crate::lab::Budget;

    fn lab_for(name: &str) -> Lab {
        let ring = catalog::find(name).expect("catalog ring").ring;
        Lab::new(&ring, Budget::default()).unwrap()
    }

    fn check_cp_witness(lab: &Lab, p: u32, w: &PrimeWitness) {
        let ring = lab.ring();
        let ideal = lab.lattice().ideal(p);
        assert!(!ideal.contains_vec(&w.a));
        assert!(!ideal.contains_vec(&w.b));
        let mut prod = vec![0u16; ring.dim()];
        ring.mul_vec(&w.a, &w.b, &mut prod);
        assert!(ideal.contains_vec(&prod));
        // a P inside P.
        for r in 0..ideal.basis().rows() {
            ring.mul_vec(&w.a, ideal.basis().row(r), &mut prod);
            assert!(ideal.contains_vec(&prod));
        }
    }

    #[test]
    fn upper_triangular_two_by_two_spectra() {
        let lab = lab_for("ut2_gf2");
        let s = spectra(&lab);
        assert_eq!(lab.lattice().len(), 7);
        assert_eq!(s.maximal.len(), 2);
        assert_eq!(s.completely_prime.len(), 4);
        assert_eq!(s.comonoform.len(), 4);
        assert_eq!(s.extremely_prime.len(), 2);
        // Koh holds exactly at the maximal right ideals here.
        let mut koh = s.koh.clone();
        let mut max = s.maximal.clone();
        koh.sort_unstable();
        max.sort_unstable();
        assert_eq!(koh, max);
        // The extremely prime ideals are the maximal ones.
        let mut ep = s.extremely_prime.clone();
        ep.sort_unstable();
        assert_eq!(ep, max);
    }

    #[test]
    fn full_matrix_ring_spectra() {
        let lab = lab_for("mat2_gf2");
        let s = spectra(&lab);
        assert_eq!(lab.lattice().len(), 5);
        assert_eq!(s.maximal.len(), 3);
        // In this simple ring the completely prime ideals are exactly the
        // maximal ones, nothing is extremely prime (it has nontrivial
        // idempotents), and every proper right ideal passes the Koh test.
        let mut cp = s.completely_prime.clone();
        let mut max = s.maximal.clone();
        cp.sort_unstable();
        max.sort_unstable();
        assert_eq!(cp, max);
        assert!(s.extremely_prime.is_empty());
        assert_eq!(s.koh.len(), 4);
    }

    #[test]
    fn group_algebra_c3_spectra() {
        // GF(2)[C3] is a product of two fields: both maximal ideals are
        // extremely prime, and the zero ideal is not completely prime.
        let lab = lab_for("c3_gf2");
        let s = spectra(&lab);
        assert_eq!(lab.lattice().len(), 4);
        assert_eq!(s.maximal.len(), 2);
        assert_eq!(s.completely_prime.len(), 2);
        assert_eq!(s.extremely_prime.len(), 2);
        assert_eq!(s.comonoform.len(), 2);
        let mut koh = s.koh.clone();
        let mut max = s.maximal.clone();
        koh.sort_unstable();
        max.sort_unstable();
        assert_eq!(koh, max);
    }

    #[test]
    fn field_spectra_are_trivial() {
        let lab = lab_for("gf4");
        let s = spectra(&lab);
        assert_eq!(lab.lattice().len(), 2);
        let zero = vec![lab.lattice().zero()];
        assert_eq!(s.completely_prime, zero);
        assert_eq!(s.comonoform, zero);
        assert_eq!(s.extremely_prime, zero);
        assert_eq!(s.koh, zero);
    }

    #[test]
    fn endomorphism_route_agrees() {
        for name in ["ut2_gf2", "trunc_gf2_3", "c3_gf2", "mat2_gf2"] {
            let lab = lab_for(name);
            for i in 0..lab.lattice().len() as u32 {
                assert_eq!(
                    completely_prime(&lab, i).0,
                    completely_prime_endo(&lab, i),
                    "routes disagree on {name} ideal {i}"
                );
            }
        }
    }

    #[test]
    fn monoform_route_agrees() {
        for name in ["ut2_gf2", "trunc_gf2_3", "gf2_x_gf2"] {
            let lab = lab_for(name);
            let b = lab.budget();
            for i in 0..lab.lattice().len() as u32 {
                if i == lab.lattice().top() {
                    continue;
                }
                let m = FiniteModule::cyclic(lab.ring(), lab.lattice().ideal(i));
                let verdict =
                    module::is_monoform(&m, b.oracle_cap, b.triple_budget).unwrap();
                assert_eq!(
                    is_comonoform(&lab, i),
                    verdict.monoform,
                    "routes disagree on {name} ideal {i}"
                );
            }
        }
    }

    #[test]
    fn witnesses_are_genuine() {
        for name in ["ut2_gf2", "mat2_gf2", "trunc_gf3_2"] {
            let lab = lab_for(name);
            for i in 0..lab.lattice().len() as u32 {
                if let (false, Some(w)) = completely_prime(&lab, i) {
                    check_cp_witness(&lab, i, &w);
                }
                if let (false, Some(w)) = satisfies_koh(&lab, i) {
                    // a R b inside I with a, b outside I.
                    let ring = lab.ring();
                    let ideal = lab.lattice().ideal(i);
                    assert!(!ideal.contains_vec(&w.a));
                    assert!(!ideal.contains_vec(&w.b));
                    let mut ab = vec![0u16; ring.dim()];
                    let mut arb = vec![0u16; ring.dim()];
                    for x in 0..lab.n_elements() {
                        ring.mul_vec(&w.a, &lab.elem(x), &mut ab);
                        ring.mul_vec(&ab, &w.b, &mut arb);
                        assert!(ideal.contains_vec(&arb));
                    }
                }
            }
        }
    }

    #[test]
    fn similarity_classes_are_canonical() {
        let lab = lab_for("ut2_gf2");
        let reps = similarity_classes(&lab);
        let mut distinct: Vec<u32> = reps.clone();
        distinct.sort_unstable();
        distinct.dedup();
        // Seven ideals fall into six classes: the two one-dimensional
        // ideals that are not two-sided are conjugate by a unit.
        assert_eq!(distinct.len(), 6);
        let lat = lab.lattice();
        let merged: Vec<u32> = (0..lat.len() as u32)
            .filter(|&i| reps.iter().filter(|&&r| r == reps[i as usize]).count() == 2)
            .collect();
        assert_eq!(merged.len(), 2);
        for &i in &merged {
            assert_eq!(lat.ideal(i).dim(), 1);
            assert!(!lat.is_two_sided(i));
        }
    }

    #[test]
    fn similarity_module_route_agrees() {
        for name in ["ut2_gf2", "c3_gf2", "trunc_gf2_3"] {
            let lab = lab_for(name);
            let n = lab.lattice().len() as u32;
            for i in 0..n {
                for j in 0..n {
                    let a = are_similar(&lab, i, j);
                    let b = are_similar_modules(&lab, i, j).unwrap();
                    assert_eq!(a, b, "similarity routes disagree on {name} ({i}, {j})");
                    assert_eq!(a, are_similar(&lab, j, i), "similarity must be symmetric");
                }
            }
        }
    }

    #[test]
    fn spectra_are_similarity_closed() {
        for name in ["ut2_gf2", "mat2_gf2", "c3_gf2"] {
            let lab = lab_for(name);
            let s = spectra(&lab);
            let reps = similarity_classes(&lab);
            for set in [&s.completely_prime, &s.comonoform, &s.extremely_prime, &s.koh] {
                for i in 0..lab.lattice().len() as u32 {
                    for j in 0..lab.lattice().len() as u32 {
                        if reps[i as usize] == reps[j as usize] {
                            assert_eq!(set.contains(&i), set.contains(&j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_correspondence_on_two_sided_ideals() {
        let lab = lab_for("ut2_gf2");
        let lat = lab.lattice();
        // I = span{e12} is the two-sided radical; R/I is a product of two
        // fields with a four-element ideal lattice.
        let i = lat
            .proper_indices()
            .find(|&i| lat.is_two_sided(i) && lat.ideal(i).dim() == 1)
            .unwrap();
        let c = quotient_correspondence_check(&lab, i).unwrap();
        assert_eq!(c.ideals_above, 4);
        assert_eq!(c.quotient_lattice, 4);
        assert!(c.bijective);
        assert!(c.flags_match);

        let lab = lab_for("trunc_gf2_3");
        let lat = lab.lattice();
        let i = lat
            .proper_indices()
            .find(|&i| lat.ideal(i).dim() == 1)
            .unwrap();
        let c = quotient_correspondence_check(&lab, i).unwrap();
        assert_eq!(c.ideals_above, 3);
        assert!(c.bijective);
        assert!(c.flags_match);
    }

    #[test]
    fn quotient_correspondence_rejects_one_sided_ideals() {
        let lab = lab_for("ut2_gf2");
        let lat = lab.lattice();
        let i = lat
            .proper_indices()
            .find(|&i| !lat.is_two_sided(i))
            .unwrap();
        assert!(matches!(
            quotient_correspondence_check(&lab, i),
            Err(Error::NotTwoSided)
        ));
    }

    #[test]
    fn pullback_criterion_on_triangular_subring() {
        // First-row-plus-diagonal matrices inside Mat(3, GF(2)). The
        // maximal right ideal of the big ring annihilating (0,1,1) pulls
        // back to the first-row ideal, which is not completely prime: the
        // idealizer condition must fail there. The one annihilating
        // (1,0,0) pulls back to the diagonal complement, which is
        // completely prime.
        let small = catalog::first_row_triangular(2).unwrap();
        let big = catalog::matrix_ring(3, 2).unwrap();
        let mut embed = Mat::zeros(5, 9);
        for (r, c) in [(0usize, 0usize), (1, 1), (2, 2), (3, 4), (4, 8)] {
            embed.set(r, c, 1);
        }
        let pair = SubringPair::new(&small, &big, embed).unwrap();
        let small_lab = Lab::new(&small, Budget::default()).unwrap();
        let big_lab = Lab::new(&big, Budget::default()).unwrap();

        let annihilating = |v: [u16; 3]| -> u32 {
            let gens: Vec<Vec<u16>> = (0..512u64)
                .map(|x| big.elem_coeffs_at(x))
                .filter(|a| {
                    // rows of a as a 3x3 matrix: coefficient layout is
                    // row-major, v·A = 0.
                    (0..3).all(|c| {
                        let mut s = 0u16;
                        for r in 0..3 {
                            if v[r] == 1 {
                                s ^= a[3 * r + c];
                            }
                        }
                        s == 0
                    })
                })
                .collect();
            let ideal = RightIdeal::from_generators(&big, &gens);
            big_lab.lattice().index_of(&ideal).unwrap()
        };

        let q_bad = annihilating([0, 1, 1]);
        let out = pullback_check(&pair, &small_lab, &big_lab, q_bad).unwrap();
        assert!(out.big_completely_prime);
        assert!(!out.idealizer_condition);
        assert!(!out.small_completely_prime);
        assert_eq!(small_lab.lattice().ideal(out.pullback_index).dim(), 3);

        let q_good = annihilating([1, 0, 0]);
        let out = pullback_check(&pair, &small_lab, &big_lab, q_good).unwrap();
        assert!(out.big_completely_prime);
        assert!(out.small_completely_prime);
        assert_eq!(small_lab.lattice().ideal(out.pullback_index).dim(), 2);

        // Every maximal right ideal of the big ring yields a consistent
        // outcome (the check inside pullback_check asserts the criterion).
        for &q in big_lab.lattice().maximals() {
            pullback_check(&pair, &small_lab, &big_lab, q).unwrap();
        }
    }

    #[test]
    fn report_fields_are_consistent() {
        let lab = lab_for("ut2_gf2");
        let lat = lab.lattice();
        for i in 0..lat.len() as u32 {
            let r = prime_report(&lab, i);
            assert_eq!(r.proper, lat.ideal(i).is_proper());
            assert_eq!(r.witness.is_some(), !r.completely_prime && r.proper);
            if r.comonoform {
                assert!(r.completely_prime);
            }
            if r.maximal {
                assert!(r.comonoform);
            }
        }
    }
}
