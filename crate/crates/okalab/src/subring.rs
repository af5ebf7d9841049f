//! Unital embeddings of one ring into another: pullbacks of right ideals,
//! the dual set I* of an ideal relative to the overring, and right
//! invertibility.
//!
//! For a pair R inside Q and a right ideal I of R, the dual is
//! I* = {q in Q : qI is contained in R}, a left R-submodule of Q. The ideal
//! is right invertible when some finite sum of products x q with x in I and
//! q in I* equals 1; over a central base field those finite sums form
//! exactly the linear span of basis products, so invertibility is a span
//! membership test.

use crate::error::{Error, Result};
use crate::ideal::RightIdeal;
use crate::linalg::{self, Mat};
use crate::ring::Ring;

pub struct SubringPair {
    small: Ring,
    big: Ring,
    /// Rows are the images of the small ring's basis vectors in the big ring.
    embed: Mat,
    /// Echelon basis of the image subspace embed(R) inside Q.
    image: Mat,
}

impl SubringPair {
    /// Validate and build an embedding pair. The map must be injective,
    /// unital, and multiplicative on basis pairs.
    pub fn new(small: &Ring, big: &Ring, embed: Mat) -> Result<SubringPair> {
        if !small.field().same_field(big.field()) {
            return Err(Error::FieldMismatch);
        }
        if embed.rows() != small.dim() || embed.cols() != big.dim() {
            return Err(Error::BadEmbedding(format!(
                "map shape {}x{}, expected {}x{}",
                embed.rows(),
                embed.cols(),
                small.dim(),
                big.dim()
            )));
        }
        let f = small.field();
        if linalg::rank(f, &embed) != small.dim() {
            return Err(Error::BadEmbedding("map is not injective".into()));
        }
        let map = |v: &[u16]| -> Vec<u16> {
            let mut out = vec![0u16; big.dim()];
            linalg::mul_row_mat(f, v, &embed, &mut out);
            out
        };
        if map(small.unit_coeffs()) != big.unit_coeffs() {
            return Err(Error::BadEmbedding("map does not send 1 to 1".into()));
        }
        let mut lhs = vec![0u16; big.dim()];
        for i in 0..small.dim() {
            for j in 0..small.dim() {
                let ei = embed.row(i).to_vec();
                let ej = embed.row(j).to_vec();
                big.mul_vec(&ei, &ej, &mut lhs);
                if lhs != map(small.structure_const(i, j)) {
                    return Err(Error::BadEmbedding(format!(
                        "map is not multiplicative on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        let image = linalg::row_space(f, &embed);
        Ok(SubringPair { small: small.clone(), big: big.clone(), embed, image })
    }

    fn image_pivots(&self) -> Vec<usize> {
        self.image.pivot_cols()
    }

    pub fn small(&self) -> &Ring {
        &self.small
    }

    pub fn big(&self) -> &Ring {
        &self.big
    }

    pub fn embed_matrix(&self) -> &Mat {
        &self.embed
    }

    /// Image of a small-ring element in the big ring.
    pub fn map_vec(&self, v: &[u16]) -> Vec<u16> {
        let mut out = vec![0u16; self.big.dim()];
        linalg::mul_row_mat(self.small.field(), v, &self.embed, &mut out);
        out
    }

    /// The pullback {x in R : embed(x) in J} of a right ideal J of the big
    /// ring; always a right ideal of the small ring.
    pub fn pullback_ideal(&self, j: &RightIdeal) -> RightIdeal {
        let f = self.small.field();
        let proj = j.coset_projection();
        let cond = linalg::mat_mul(f, &self.embed, &proj);
        let basis = linalg::row_kernel(f, &cond);
        let pulled = RightIdeal::from_generators(&self.small, &row_vecs(&basis));
        debug_assert_eq!(pulled.basis().rows(), basis.rows(), "pullback not right-closed");
        pulled
    }

    /// The dual I* = {q in Q : q embed(I) inside embed(R)} of a right ideal
    /// of the small ring, as an echelon basis of a subspace of Q.
    pub fn dual_star(&self, i: &RightIdeal) -> Mat {
        let f = self.big.field();
        let dq = self.big.dim();
        // Membership of q x in the image subspace is a linear condition on q:
        // q * (right_mul(x) * image_coset_projection) = 0 for each basis x.
        let image_proj = coset_projection_of(f, &self.image, &self.image_pivots(), dq);
        let mut cond = Mat::zeros(dq, 0);
        for r in 0..i.basis().rows() {
            let x = self.map_vec(i.basis().row(r));
            let block = linalg::mat_mul(f, &self.big.right_mul_matrix(&x), &image_proj);
            cond = hstack(&cond, &block);
        }
        if cond.cols() == 0 {
            // No conditions: I = 0 and the dual is all of Q.
            return Mat::identity(dq);
        }
        let dual = linalg::row_kernel(f, &cond);
        debug_assert!(self.dual_is_left_closed(&dual));
        dual
    }

    fn dual_is_left_closed(&self, dual: &Mat) -> bool {
        let f = self.big.field();
        let pivots = dual.pivot_cols();
        let mut prod = vec![0u16; self.big.dim()];
        for i in 0..self.small.dim() {
            let r = self.embed.row(i).to_vec();
            for t in 0..dual.rows() {
                self.big.mul_vec(&r, dual.row(t), &mut prod);
                if !linalg::in_row_space(f, &prod, dual, &pivots) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether 1 lies in the span of {x q : x in I, q in I*}.
    pub fn is_right_invertible(&self, i: &RightIdeal) -> bool {
        let products = self.product_span(i);
        let pivots = products.pivot_cols();
        linalg::in_row_space(self.big.field(), self.big.unit_coeffs(), &products, &pivots)
    }

    /// Echelon basis of span{x q : x in I, q in I*}.
    fn product_span(&self, i: &RightIdeal) -> Mat {
        let dual = self.dual_star(i);
        let dq = self.big.dim();
        let mut rows = Mat::zeros(0, dq);
        let mut prod = vec![0u16; dq];
        for r in 0..i.basis().rows() {
            let x = self.map_vec(i.basis().row(r));
            for t in 0..dual.rows() {
                self.big.mul_vec(&x, dual.row(t), &mut prod);
                rows.push_row(&prod);
            }
        }
        linalg::row_space(self.big.field(), &rows)
    }

    /// An explicit decomposition 1 = sum of x_k q_k with x_k in I and
    /// q_k in I*, when I is right invertible.
    pub fn invertibility_witness(&self, i: &RightIdeal) -> Option<Vec<(Vec<u16>, Vec<u16>)>> {
        let f = self.big.field();
        let dual = self.dual_star(i);
        let dq = self.big.dim();
        let mut rows = Mat::zeros(0, dq);
        let mut index = Vec::new();
        let mut prod = vec![0u16; dq];
        for r in 0..i.basis().rows() {
            let x = self.map_vec(i.basis().row(r));
            for t in 0..dual.rows() {
                self.big.mul_vec(&x, dual.row(t), &mut prod);
                rows.push_row(&prod);
                index.push((r, t));
            }
        }
        let coeffs = linalg::solve_row(f, &rows, self.big.unit_coeffs())?;
        let mut terms = Vec::new();
        for (k, &(r, t)) in index.iter().enumerate() {
            if coeffs[k] == 0 {
                continue;
            }
            let x = i.basis().row(r).to_vec();
            let mut q = vec![0u16; dq];
            for c in 0..dq {
                q[c] = f
                    .mul(
                        crate::field::FieldElement(coeffs[k]),
                        crate::field::FieldElement(dual.get(t, c)),
                    )
                    .0;
            }
            terms.push((x, q));
        }
        Some(terms)
    }
}

/// The subring of `big` generated by `gens` together with 1, returned as a
/// validated pair. The basis is the echelon basis of the closure of
/// span(gens + {1}) under multiplication.
pub fn subring_generated(big: &Ring, gens: &[Vec<u16>], name: &str) -> Result<SubringPair> {
    let f = big.field();
    let dq = big.dim();
    let mut span = Mat::zeros(0, dq);
    span.push_row(big.unit_coeffs());
    for g in gens {
        span.push_row(g);
    }
    span = linalg::row_space(f, &span);
    loop {
        let mut next = span.clone();
        let mut prod = vec![0u16; dq];
        for i in 0..span.rows() {
            for j in 0..span.rows() {
                big.mul_vec(span.row(i), span.row(j), &mut prod);
                next.push_row(&prod);
            }
        }
        next = linalg::row_space(f, &next);
        if next.rows() == span.rows() {
            break;
        }
        span = next;
    }
    // Structure constants of the subring on the echelon basis.
    let d = span.rows();
    let pivots = span.pivot_cols();
    let mut structure = vec![vec![vec![0u16; d]; d]; d];
    let mut prod = vec![0u16; dq];
    for i in 0..d {
        for j in 0..d {
            big.mul_vec(span.row(i), span.row(j), &mut prod);
            structure[i][j] = linalg::coords_in_rref(f, &prod, &span, &pivots)
                .expect("span not multiplicatively closed");
        }
    }
    let unit = linalg::coords_in_rref(f, big.unit_coeffs(), &span, &pivots)
        .expect("unit not in generated subring");
    let small = Ring::new(f.clone(), structure, unit, name)?;
    SubringPair::new(&small, big, span)
}

fn row_vecs(m: &Mat) -> Vec<Vec<u16>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn hstack(a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.rows(), b.rows());
    let mut out = Mat::zeros(a.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            out.set(r, c, a.get(r, c));
        }
        for c in 0..b.cols() {
            out.set(r, a.cols() + c, b.get(r, c));
        }
    }
    out
}

/// Coset projection for a subspace given by an rref basis: v * P = 0 exactly
/// when v lies in the subspace.
fn coset_projection_of(
    f: &crate::field::FiniteField,
    space: &Mat,
    pivots: &[usize],
    dim: usize,
) -> Mat {
    let non_pivots: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let mut proj = Mat::zeros(dim, non_pivots.len());
    let mut v = vec![0u16; dim];
    for start in 0..dim {
        v.fill(0);
        v[start] = 1;
        linalg::reduce_row(f, &mut v, space, pivots);
        for (k, &c) in non_pivots.iter().enumerate() {
            proj.set(start, k, v[c]);
        }
    }
    proj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// UT(2, GF(2)) inside Mat(2, GF(2)): basis e11, e12, e22 of the small
    /// ring maps to the matching matrix units.
    fn ut2_in_mat2() -> SubringPair {
        let small = catalog::upper_triangular(2, 2).unwrap();
        let big = catalog::matrix_ring(2, 2).unwrap();
        // Big basis order: e11, e12, e21, e22.
        let embed = Mat::from_rows(
            &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]],
            4,
        );
        SubringPair::new(&small, &big, embed).unwrap()
    }

    fn tri3_in_mat3() -> SubringPair {
        let small = catalog::first_row_triangular(2).unwrap();
        let big = catalog::matrix_ring(3, 2).unwrap();
        // Small basis e11, e12, e13, e22, e33; big is row-major e11..e33.
        let mut embed = Mat::zeros(5, 9);
        for (r, c) in [(0usize, 0usize), (1, 1), (2, 2), (3, 4), (4, 8)] {
            embed.set(r, c, 1);
        }
        SubringPair::new(&small, &big, embed).unwrap()
    }

    #[test]
    fn non_unital_map_is_rejected() {
        let small = catalog::gf_ring(2).unwrap();
        let big = catalog::matrix_ring(2, 2).unwrap();
        // 1 maps to e11: injective and multiplicative but not unital.
        let embed = Mat::from_rows(&[vec![1, 0, 0, 0]], 4);
        match SubringPair::new(&small, &big, embed) {
            Err(Error::BadEmbedding(msg)) => assert!(msg.contains("1 to 1")),
            other => panic!("expected rejection, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn pullback_of_first_row_zero_ideal() {
        let pair = tri3_in_mat3();
        // J = matrices whose rows 2 and 3 are equal spans a maximal right
        // ideal of Mat3; here use the simpler "first row zero" right ideal
        // of the big ring and pull it back.
        let big = pair.big().clone();
        let gens: Vec<Vec<u16>> = (3..9)
            .map(|c| {
                let mut v = vec![0u16; 9];
                v[c] = 1;
                v
            })
            .collect();
        let j = RightIdeal::from_generators(&big, &gens);
        assert_eq!(j.dim(), 6);
        let p = pair.pullback_ideal(&j);
        // Matrices of the small ring with zero first row: span{e22, e33}.
        assert_eq!(p.dim(), 2);
        assert!(p.contains_vec(&[0, 0, 0, 1, 0]));
        assert!(p.contains_vec(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn dual_star_trivial_cases() {
        let pair = ut2_in_mat2();
        let small = pair.small().clone();
        // I = 0: no conditions, dual is all of Q.
        let dual = pair.dual_star(&RightIdeal::zero(&small));
        assert_eq!(dual.rows(), 4);
        // I = R: dual is {q : qR inside R} which contains R itself.
        let dual = pair.dual_star(&RightIdeal::full(&small));
        let pivots = dual.pivot_cols();
        for r in 0..3 {
            let mut v = vec![0u16; 3];
            v[r] = 1;
            let x = pair.map_vec(&v);
            assert!(linalg::in_row_space(pair.big().field(), &x, &dual, &pivots));
        }
    }

    #[test]
    fn self_pair_invertible_ideals_are_trivial() {
        let big = catalog::upper_triangular(2, 2).unwrap();
        let pair =
            SubringPair::new(&big, &big, Mat::identity(3)).unwrap();
        // Over the pair R = Q the dual of any I is all of R, and the span
        // of products I R is I itself, so only I = R is invertible.
        let full = RightIdeal::full(&big);
        assert!(pair.is_right_invertible(&full));
        let e11r = RightIdeal::from_generators(&big, &[vec![1, 0, 0]]);
        assert!(!pair.is_right_invertible(&e11r));
        assert!(!pair.is_right_invertible(&RightIdeal::zero(&big)));
    }

    #[test]
    fn invertibility_witness_multiplies_out() {
        let pair = ut2_in_mat2();
        let small = pair.small().clone();
        let big = pair.big().clone();
        let full = RightIdeal::full(&small);
        assert!(pair.is_right_invertible(&full));
        let terms = pair.invertibility_witness(&full).unwrap();
        let f = big.field();
        let mut total = vec![0u16; big.dim()];
        let mut prod = vec![0u16; big.dim()];
        for (x, q) in &terms {
            big.mul_vec(&pair.map_vec(x), q, &mut prod);
            for k in 0..big.dim() {
                total[k] = f
                    .add(
                        crate::field::FieldElement(total[k]),
                        crate::field::FieldElement(prod[k]),
                    )
                    .0;
            }
        }
        assert_eq!(total, big.unit_coeffs());
    }

    #[test]
    fn generated_subring_recovers_upper_triangulars() {
        let big = catalog::matrix_ring(2, 2).unwrap();
        // e11 and e12 together with 1 generate the upper triangular ring.
        let pair =
            subring_generated(&big, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]], "ut2_gen").unwrap();
        assert_eq!(pair.small().dim(), 3);
        assert!(!pair.small().is_commutative());
    }

    #[test]
    fn generated_subring_of_center_is_the_scalars() {
        let big = catalog::matrix_ring(2, 3).unwrap();
        let pair = subring_generated(&big, &[], "scalars").unwrap();
        assert_eq!(pair.small().dim(), 1);
    }
}
