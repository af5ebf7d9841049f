//! Dense exact matrices over a [`FiniteField`].
//!
//! Vectors are rows and linear maps act on the right: `v ↦ v · A`. Row spaces
//! are always kept in reduced row echelon form, which is the canonical
//! representative used for subspace equality throughout the crate. The
//! derived `Ord` (rows, then cols, then entry codes) is the canonical
//! ordering on echelon bases.

use crate::field::{FieldElement, FiniteField};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    /// Identity; the code of 1 is 1 in every field, so no field handle is needed.
    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u16>], cols: usize) -> Mat {
        let mut m = Mat::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u16] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[u16]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut m = self.clone();
        m.data.extend_from_slice(&other.data);
        m.rows += other.rows;
        m
    }

    /// Pivot columns, assuming `self` is in reduced row echelon form.
    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|r| self.row(r).iter().position(|&x| x != 0).expect("rref has no zero rows"))
            .collect()
    }
}

/// `out = v · m` for a row vector `v` of length `m.rows()`.
#[inline]
pub fn mul_row_mat(f: &FiniteField, v: &[u16], m: &Mat, out: &mut [u16]) {
    debug_assert_eq!(v.len(), m.rows);
    debug_assert_eq!(out.len(), m.cols);
    out.fill(0);
    for (j, &vj) in v.iter().enumerate() {
        if vj == 0 {
            continue;
        }
        let vj = FieldElement(vj);
        let row = m.row(j);
        for (k, &mjk) in row.iter().enumerate() {
            if mjk != 0 {
                out[k] = f.add(FieldElement(out[k]), f.mul(vj, FieldElement(mjk))).0;
            }
        }
    }
}

pub fn mat_mul(f: &FiniteField, a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.cols, b.rows);
    let mut out = Mat::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        let (head, tail) = (a.row(r), &mut out.data[r * b.cols..(r + 1) * b.cols]);
        mul_row_mat(f, head, b, tail);
    }
    out
}

pub fn mat_add(f: &FiniteField, a: &Mat, b: &Mat) -> Mat {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let mut out = a.clone();
    for (x, &y) in out.data.iter_mut().zip(&b.data) {
        *x = f.add(FieldElement(*x), FieldElement(y)).0;
    }
    out
}

pub fn mat_sub(f: &FiniteField, a: &Mat, b: &Mat) -> Mat {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let mut out = a.clone();
    for (x, &y) in out.data.iter_mut().zip(&b.data) {
        *x = f.sub(FieldElement(*x), FieldElement(y)).0;
    }
    out
}

pub fn mat_scale(f: &FiniteField, a: &Mat, s: FieldElement) -> Mat {
    let mut out = a.clone();
    for x in out.data.iter_mut() {
        *x = f.mul(FieldElement(*x), s).0;
    }
    out
}

/// In-place reduction to reduced row echelon form. Zero rows are dropped, so
/// the result is the canonical basis of the row space. Returns pivot columns.
pub fn rref(f: &FiniteField, m: &mut Mat) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m.get(i, c) != 0) else { continue };
        if pr != r {
            for k in 0..cols {
                m.data.swap(r * cols + k, pr * cols + k);
            }
        }
        let inv = f.inv(FieldElement(m.get(r, c)));
        for k in c..cols {
            let v = f.mul(FieldElement(m.get(r, k)), inv);
            m.set(r, k, v.0);
        }
        for i in 0..rows {
            if i != r && m.get(i, c) != 0 {
                let factor = FieldElement(m.get(i, c));
                for k in c..cols {
                    let v = f.sub(
                        FieldElement(m.get(i, k)),
                        f.mul(factor, FieldElement(m.get(r, k))),
                    );
                    m.set(i, k, v.0);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    m.rows = r;
    m.data.truncate(r * cols);
    pivots
}

/// Canonical row-space basis of `m`.
pub fn row_space(f: &FiniteField, m: &Mat) -> Mat {
    let mut r = m.clone();
    rref(f, &mut r);
    r
}

pub fn rank(f: &FiniteField, m: &Mat) -> usize {
    row_space(f, m).rows
}

/// Reduce `v` against an rref basis in place; afterwards `v` is zero exactly
/// when it lies in the row space.
pub fn reduce_row(f: &FiniteField, v: &mut [u16], basis: &Mat, pivots: &[usize]) {
    for (i, &c) in pivots.iter().enumerate() {
        let coef = v[c];
        if coef != 0 {
            let coef = FieldElement(coef);
            let row = basis.row(i);
            for (k, x) in v.iter_mut().enumerate() {
                if row[k] != 0 {
                    *x = f.sub(FieldElement(*x), f.mul(coef, FieldElement(row[k]))).0;
                }
            }
        }
    }
}

pub fn in_row_space(f: &FiniteField, v: &[u16], basis: &Mat, pivots: &[usize]) -> bool {
    let mut w = v.to_vec();
    reduce_row(f, &mut w, basis, pivots);
    w.iter().all(|&x| x == 0)
}

/// Coordinates of `v` in an rref basis, if `v` lies in the row space.
pub fn coords_in_rref(
    f: &FiniteField,
    v: &[u16],
    basis: &Mat,
    pivots: &[usize],
) -> Option<Vec<u16>> {
    let mut w = v.to_vec();
    let mut coords = vec![0u16; basis.rows];
    for (i, &c) in pivots.iter().enumerate() {
        let coef = w[c];
        if coef != 0 {
            coords[i] = coef;
            let coef = FieldElement(coef);
            let row = basis.row(i);
            for (k, x) in w.iter_mut().enumerate() {
                if row[k] != 0 {
                    *x = f.sub(FieldElement(*x), f.mul(coef, FieldElement(row[k]))).0;
                }
            }
        }
    }
    w.iter().all(|&x| x == 0).then_some(coords)
}

/// Basis of `{x : m · xᵀ = 0}` as rows of the result.
pub fn null_space(f: &FiniteField, m: &Mat) -> Mat {
    let mut r = m.clone();
    let pivots = rref(f, &mut r);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Mat::zeros(free.len(), m.cols);
    for (i, &fc) in free.iter().enumerate() {
        out.set(i, fc, 1);
        for (pr, &pc) in pivots.iter().enumerate() {
            out.set(i, pc, f.neg(FieldElement(r.get(pr, fc))).0);
        }
    }
    // Rows are already in echelon position by free column; normalize anyway.
    rref(f, &mut out);
    out
}

/// Basis of `{v : v · m = 0}` (the left kernel) as rows of the result.
pub fn row_kernel(f: &FiniteField, m: &Mat) -> Mat {
    null_space(f, &m.transpose())
}

/// Canonical basis of the sum of two row spaces.
pub fn row_space_sum(f: &FiniteField, a: &Mat, b: &Mat) -> Mat {
    let mut s = a.vstack(b);
    rref(f, &mut s);
    s
}

/// Canonical basis of the intersection of two row spaces.
pub fn row_space_intersect(f: &FiniteField, a: &Mat, b: &Mat) -> Mat {
    if a.rows == 0 || b.rows == 0 {
        return Mat::zeros(0, a.cols.max(b.cols));
    }
    let stacked = a.vstack(b);
    let ker = row_kernel(f, &stacked);
    let mut out = Mat::zeros(ker.rows, a.cols);
    let mut buf = vec![0u16; a.cols];
    for i in 0..ker.rows {
        mul_row_mat(f, &ker.row(i)[..a.rows], a, &mut buf);
        out.row_mut(i).copy_from_slice(&buf);
    }
    rref(f, &mut out);
    out
}

/// Solve `x · gens = target` for a row vector `x`, if possible.
pub fn solve_row(f: &FiniteField, gens: &Mat, target: &[u16]) -> Option<Vec<u16>> {
    assert_eq!(target.len(), gens.cols);
    // Augment gensᵀ with targetᵀ and reduce.
    let mut aug = Mat::zeros(gens.cols, gens.rows + 1);
    for r in 0..gens.rows {
        for c in 0..gens.cols {
            aug.set(c, r, gens.get(r, c));
        }
    }
    for c in 0..gens.cols {
        aug.set(c, gens.rows, target[c]);
    }
    let pivots = rref(f, &mut aug);
    if pivots.contains(&gens.rows) {
        return None;
    }
    let mut x = vec![0u16; gens.rows];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(r, gens.rows);
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn rref_is_canonical_gf2() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut a = Mat::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]], 3);
        let mut b = Mat::from_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]], 3);
        rref(&f, &mut a);
        rref(&f, &mut b);
        assert_eq!(a, b);
        assert_eq!(a.rows(), 2);
        assert_eq!(a.pivot_cols(), vec![0, 1]);
    }

    #[test]
    fn rref_normalizes_pivots_gf3() {
        let f = FiniteField::new(3, 1, None).unwrap();
        let mut m = Mat::from_rows(&[vec![2, 1], vec![1, 1]], 2);
        let pivots = rref(&f, &mut m);
        assert_eq!(m, Mat::identity(2));
        assert_eq!(pivots, vec![0, 1]);
        // A singular matrix drops to its normalized row space.
        let mut s = Mat::from_rows(&[vec![2, 1], vec![1, 2]], 2);
        rref(&f, &mut s);
        assert_eq!(s, Mat::from_rows(&[vec![1, 2]], 2));
    }

    #[test]
    fn kernel_and_membership() {
        let f = FiniteField::new(2, 1, None).unwrap();
        // v · m = 0 for m with equal rows means v0 = v1.
        let m = Mat::from_rows(&[vec![1, 0, 1], vec![1, 0, 1]], 3);
        let k = row_kernel(&f, &m);
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[1, 1]);
        let basis = row_space(&f, &m);
        assert!(in_row_space(&f, &[1, 0, 1], &basis, &basis.pivot_cols()));
        assert!(!in_row_space(&f, &[0, 1, 0], &basis, &basis.pivot_cols()));
    }

    #[test]
    fn sum_and_intersection() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let a = Mat::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]], 3);
        let b = Mat::from_rows(&[vec![0, 1, 0], vec![0, 0, 1]], 3);
        let s = row_space_sum(&f, &a, &b);
        assert_eq!(s.rows(), 3);
        let i = row_space_intersect(&f, &a, &b);
        assert_eq!(i.rows(), 1);
        assert_eq!(i.row(0), &[0, 1, 0]);
    }

    #[test]
    fn solve_row_finds_coordinates() {
        let f = FiniteField::new(3, 1, None).unwrap();
        let gens = Mat::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]], 3);
        let x = solve_row(&f, &gens, &[1, 2, 1]).unwrap();
        assert_eq!(x, vec![1, 1]);
        assert!(solve_row(&f, &gens, &[0, 0, 1]).is_none());
    }

    #[test]
    fn null_space_solves() {
        let f = FiniteField::new(3, 1, None).unwrap();
        let m = Mat::from_rows(&[vec![1, 2, 0], vec![0, 0, 1]], 3);
        let ns = null_space(&f, &m);
        assert_eq!(ns.rows(), 1);
        // m · xᵀ = 0 with x = (1, 1, 0): 1 + 2 = 0 mod 3.
        assert_eq!(ns.row(0), &[1, 1, 0]);
    }
}
