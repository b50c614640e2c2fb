//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Matrices are small (a few dozen rows at fixture scale), so plain Gaussian
//! elimination with exact scalars is the right tool: rank, kernel and image
//! bases, solving, and cohomology of a bounded complex of matrices.

// row operations update parallel structures through one shared index
#![allow(clippy::needless_range_loop)]

use crate::field::{FieldSpec, Scalar};

/// Dense matrix, row major. A `nrows x ncols` matrix sends column vectors of
/// length `ncols` to column vectors of length `nrows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub nrows: usize,
    pub ncols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: FieldSpec, nrows: usize, ncols: usize) -> Mat {
        Mat { nrows, ncols, field, data: vec![field.zero(); nrows * ncols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        nrows: usize,
        ncols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut m = Mat::zero(field, nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<i64>>) -> Mat {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Mat::from_fn(field, nrows, ncols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.ncols, self.nrows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.nrows, self.ncols, |i, j| self.get(i, j).mul(c))
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        Mat::from_fn(self.field, self.nrows, self.ncols, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in matrix product");
        Mat::from_fn(self.field, self.nrows, other.ncols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc = acc.add(&a.mul(other.get(k, j)));
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.ncols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc = acc.add(&a.mul(&v[k]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Stack blocks: `[[A, B], [C, D], ...]` given as rows of equal-height
    /// blocks; every row must have blocks of matching heights and the block
    /// columns matching widths.
    pub fn from_blocks(field: FieldSpec, blocks: &[Vec<&Mat>]) -> Mat {
        let nrows: usize = blocks.iter().map(|r| r.first().map_or(0, |b| b.nrows)).sum();
        let ncols: usize = blocks.first().map_or(0, |r| r.iter().map(|b| b.ncols).sum());
        let mut m = Mat::zero(field, nrows, ncols);
        let mut roff = 0;
        for brow in blocks {
            let h = brow.first().map_or(0, |b| b.nrows);
            let mut coff = 0;
            for b in brow {
                assert_eq!(b.nrows, h, "ragged block row");
                for i in 0..b.nrows {
                    for j in 0..b.ncols {
                        m.set(roff + i, coff + j, b.get(i, j).clone());
                    }
                }
                coff += b.ncols;
            }
            roff += h;
        }
        m
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.ncols {
            if row == m.nrows {
                break;
            }
            let Some(p) = (row..m.nrows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.ncols {
                    let a = m.get(row, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.get(row, col).inv();
            for j in 0..m.ncols {
                let v = m.get(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.nrows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..m.ncols {
                        let v = m.get(r, j).sub(&factor.mul(m.get(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns spanning the kernel (right null space).
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Mat::zero(self.field, self.ncols, free.len());
        for (idx, &fc) in free.iter().enumerate() {
            k.set(fc, idx, self.field.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                k.set(pc, idx, r.get(prow, fc).neg());
            }
        }
        k
    }

    /// Columns of `self` forming a basis of the column space.
    pub fn image_basis(&self) -> Mat {
        let (_, pivots) = self.rref();
        let mut b = Mat::zero(self.field, self.nrows, pivots.len());
        for (j, &c) in pivots.iter().enumerate() {
            for i in 0..self.nrows {
                b.set(i, j, self.get(i, c).clone());
            }
        }
        b
    }

    /// One solution `x` of `self * x = rhs`, if any.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.nrows);
        let mut aug = Mat::zero(self.field, self.nrows, self.ncols + 1);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.ncols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.ncols) {
            return None; // inconsistent
        }
        let mut x = vec![self.field.zero(); self.ncols];
        for (prow, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(prow, self.ncols).clone();
        }
        Some(x)
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }
}

/// Basis data for one cohomology space `ker d_i / im d_{i-1}`, able to
/// express a cocycle in the chosen representative basis.
pub struct Subquotient {
    pub field: FieldSpec,
    /// Ambient dimension (the cochain space).
    pub ambient: usize,
    /// Columns spanning the image of the incoming differential.
    pub boundaries: Mat,
    /// Columns of cocycles completing `boundaries` to a basis of the kernel.
    pub representatives: Mat,
}

impl Subquotient {
    pub fn dim(&self) -> usize {
        self.representatives.ncols
    }

    /// Coordinates of the class of `v` (a cocycle) in the representative
    /// basis. Returns `None` when `v` is not in the kernel-plus-image span,
    /// which signals a malformed input elsewhere.
    pub fn class_coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let joined = Mat::from_blocks(
            self.field,
            &[vec![&self.boundaries, &self.representatives]],
        );
        let x = joined.solve(v)?;
        Some(x[self.boundaries.ncols..].to_vec())
    }
}

/// Cohomology of a bounded complex given by consecutive differentials
/// `d[i]: C^i -> C^{i+1}` (so `d` has one entry per non-terminal index).
/// `dims[i]` is the dimension of `C^i`; `d[i]` is `dims[i+1] x dims[i]`.
/// Panics if consecutive differentials do not compose to zero.
pub fn complex_cohomology(field: FieldSpec, dims: &[usize], d: &[Mat]) -> Vec<Subquotient> {
    assert_eq!(d.len() + 1, dims.len().max(1), "need one differential per gap");
    for i in 0..d.len() {
        assert_eq!(d[i].ncols, dims[i]);
        assert_eq!(d[i].nrows, dims[i + 1]);
        if i + 1 < d.len() {
            assert!(d[i + 1].mul(&d[i]).is_zero(), "d o d != 0 at index {i}");
        }
    }
    let mut out = Vec::new();
    for i in 0..dims.len() {
        let kernel = if i < d.len() {
            d[i].kernel_basis()
        } else {
            Mat::identity(field, dims[i])
        };
        let boundaries = if i > 0 { d[i - 1].image_basis() } else { Mat::zero(field, dims[i], 0) };
        // extend boundaries to a basis of the kernel by selecting kernel
        // columns independent modulo the boundaries
        let joined = Mat::from_blocks(field, &[vec![&boundaries, &kernel]]);
        let (_, pivots) = joined.rref();
        let mut reps = Vec::new();
        for &p in &pivots {
            if p >= boundaries.ncols {
                reps.push(p - boundaries.ncols);
            }
        }
        let mut rep_mat = Mat::zero(field, dims[i], reps.len());
        for (j, &kc) in reps.iter().enumerate() {
            for r in 0..dims[i] {
                rep_mat.set(r, j, kernel.get(r, kc).clone());
            }
        }
        out.push(Subquotient { field, ambient: dims[i], boundaries, representatives: rep_mat });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let f = FieldSpec::Rationals;
        let m = Mat::from_rows(f, vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.ncols, 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let f = FieldSpec::Rationals;
        let m = Mat::from_rows(f, vec![vec![1, 1], vec![0, 1], vec![1, 2]]);
        let rhs = vec![f.from_i64(3), f.from_i64(1), f.from_i64(4)];
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul_vec(&x), rhs);
        let bad = vec![f.from_i64(3), f.from_i64(1), f.from_i64(5)];
        assert!(m.solve(&bad).is_none());
    }

    #[test]
    fn circle_cohomology_over_two_fields() {
        // boundary-of-square cochain complex: k^4 -> k^4, rank 3
        for f in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
            let d = Mat::from_rows(
                f,
                vec![
                    vec![-1, 1, 0, 0],
                    vec![0, -1, 1, 0],
                    vec![0, 0, -1, 1],
                    vec![1, 0, 0, -1],
                ],
            );
            let h = complex_cohomology(f, &[4, 4], &[d]);
            assert_eq!(h[0].dim(), 1);
            assert_eq!(h[1].dim(), 1);
        }
    }

    #[test]
    fn subquotient_class_coords() {
        let f = FieldSpec::Rationals;
        // complex 0 -> k^2 --0--> k^2: H^1 = k^2 with the zero map incoming
        let d0 = Mat::zero(f, 2, 2);
        let h = complex_cohomology(f, &[2, 2], &[d0]);
        let v = vec![f.from_i64(2), f.from_i64(-5)];
        let c = h[1].class_coords(&v).unwrap();
        assert_eq!(c.len(), 2);
    }
}
