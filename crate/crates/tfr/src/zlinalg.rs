//! Exact integer linear algebra: Hermite normal form, integer kernels,
//! lattice membership, and rational solving.
//!
//! Everything runs over arbitrary-precision integers; no floating point is
//! used anywhere (degenerate cones would make approximate facet normals
//! wrong).

// row operations update parallel structures through one shared index
#![allow(clippy::needless_range_loop)]

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type ZVec = Vec<BigInt>;

pub fn zvec_from_i64(v: &[i64]) -> ZVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn zvec_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn zvec_add(a: &[BigInt], b: &[BigInt]) -> ZVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn zvec_sub(a: &[BigInt], b: &[BigInt]) -> ZVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn zvec_scale(a: &[BigInt], c: &BigInt) -> ZVec {
    a.iter().map(|x| x * c).collect()
}

pub fn zvec_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divide by the gcd of the entries; zero vectors are returned unchanged.
pub fn primitive(v: &[BigInt]) -> ZVec {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Integer matrix as a list of rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMat {
    pub rows: Vec<ZVec>,
    pub ncols: usize,
}

impl ZMat {
    pub fn new(rows: Vec<ZVec>, ncols: usize) -> ZMat {
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        ZMat { rows, ncols }
    }

    pub fn from_i64(rows: Vec<Vec<i64>>, ncols: usize) -> ZMat {
        ZMat::new(rows.iter().map(|r| zvec_from_i64(r)).collect(), ncols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> ZMat {
        let mut rows = vec![vec![BigInt::zero(); self.nrows()]; self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                rows[j][i] = v.clone();
            }
        }
        ZMat { rows, ncols: self.nrows() }
    }

    /// Apply the matrix to a column vector: rows . v entrywise.
    pub fn mul_col(&self, v: &[BigInt]) -> ZVec {
        self.rows.iter().map(|r| zvec_dot(r, v)).collect()
    }

    /// Row vector times matrix.
    pub fn row_mul(&self, v: &[BigInt]) -> ZVec {
        assert_eq!(v.len(), self.nrows());
        let mut out = vec![BigInt::zero(); self.ncols];
        for (c, r) in v.iter().zip(&self.rows) {
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(r) {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &ZMat) -> ZMat {
        assert_eq!(self.ncols, other.nrows());
        let rows = self.rows.iter().map(|r| other.row_mul(r)).collect();
        ZMat { rows, ncols: other.ncols }
    }

    /// Canonical row Hermite normal form of the row lattice, zero rows
    /// dropped: echelon shape, positive pivots, entries above each pivot
    /// reduced into `[0, pivot)`.
    pub fn row_hnf(&self) -> ZMat {
        let h = self.row_hnf_with_transform().0;
        let rows = h.rows.into_iter().filter(|r| !zvec_is_zero(r)).collect();
        ZMat { rows, ncols: self.ncols }
    }

    /// As [`row_hnf`](Self::row_hnf) but keeps zero rows and returns the
    /// unimodular `U` with `U * self = H`.
    pub fn row_hnf_with_transform(&self) -> (ZMat, ZMat) {
        let m = self.nrows();
        let mut h = self.rows.clone();
        let mut u: Vec<ZVec> = (0..m)
            .map(|i| {
                let mut r = vec![BigInt::zero(); m];
                r[i] = BigInt::one();
                r
            })
            .collect();
        let mut pivot_row = 0;
        for col in 0..self.ncols {
            // clear below pivot_row in this column via gcd row combinations
            let mut any = false;
            for r in pivot_row..m {
                if !h[r][col].is_zero() {
                    any = true;
                }
            }
            if !any {
                continue;
            }
            loop {
                // find the two smallest nonzero magnitudes and combine
                let mut nz: Vec<usize> =
                    (pivot_row..m).filter(|&r| !h[r][col].is_zero()).collect();
                if nz.len() == 1 {
                    let r = nz[0];
                    h.swap(pivot_row, r);
                    u.swap(pivot_row, r);
                    break;
                }
                nz.sort_by_key(|&r| h[r][col].abs());
                let (a, b) = (nz[0], nz[1]);
                let q = &h[b][col] / &h[a][col];
                for j in 0..self.ncols {
                    let t = &h[b][j] - &q * &h[a][j];
                    h[b][j] = t;
                }
                for j in 0..m {
                    let t = &u[b][j] - &q * &u[a][j];
                    u[b][j] = t;
                }
            }
            if h[pivot_row][col].is_negative() {
                for x in h[pivot_row].iter_mut() {
                    *x = -&*x;
                }
                for x in u[pivot_row].iter_mut() {
                    *x = -&*x;
                }
            }
            // reduce entries above the pivot into [0, pivot)
            let p = h[pivot_row][col].clone();
            for r in 0..pivot_row {
                let q = h[r][col].div_floor(&p);
                if !q.is_zero() {
                    for j in 0..self.ncols {
                        let t = &h[r][j] - &q * &h[pivot_row][j];
                        h[r][j] = t;
                    }
                    for j in 0..m {
                        let t = &u[r][j] - &q * &u[pivot_row][j];
                        u[r][j] = t;
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m {
                break;
            }
        }
        (ZMat { rows: h, ncols: self.ncols }, ZMat { rows: u, ncols: m })
    }

    /// Basis of the saturated integer right kernel `{x : self * x = 0}`,
    /// returned as rows.
    pub fn integer_kernel(&self) -> ZMat {
        let t = self.transpose();
        let (h, u) = t.row_hnf_with_transform();
        let mut rows = Vec::new();
        for (hr, ur) in h.rows.iter().zip(&u.rows) {
            if zvec_is_zero(hr) {
                rows.push(ur.clone());
            }
        }
        ZMat { rows, ncols: self.ncols }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.clone().row_hnf().nrows()
    }

    /// Coefficients of `v` in the rows of an HNF basis, or `None` when `v`
    /// is not in the row lattice. `self` must be a row HNF.
    pub fn hnf_coords(&self, v: &[BigInt]) -> Option<ZVec> {
        assert_eq!(v.len(), self.ncols);
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.nrows());
        for row in &self.rows {
            let c = row.iter().position(|x| !x.is_zero()).expect("zero row in HNF");
            let (q, r) = rem[c].div_rem(&row[c]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                rem = zvec_sub(&rem, &zvec_scale(row, &q));
            }
            coords.push(q);
        }
        if zvec_is_zero(&rem) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn hnf_contains(&self, v: &[BigInt]) -> bool {
        self.hnf_coords(v).is_some()
    }

    /// Unique rational solution of `self * x = rhs` when the columns are
    /// linearly independent; `None` when inconsistent.
    /// Panics if the columns are dependent (callers guarantee injectivity).
    pub fn solve_unique_rational(&self, rhs: &[BigInt]) -> Option<Vec<BigRational>> {
        assert_eq!(rhs.len(), self.nrows());
        let n = self.ncols;
        let mut a: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(r, b)| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .chain([BigRational::from_integer(b.clone())])
                    .collect()
            })
            .collect();
        let m = a.len();
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..n {
            let Some(p) = (row..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = a[row][col].recip();
            for j in col..=n {
                a[row][j] = &a[row][j] * &inv;
            }
            for r in 0..m {
                if r != row && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in col..=n {
                        let t = &a[r][j] - &f * &a[row][j];
                        a[r][j] = t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        assert_eq!(pivots.len(), n, "columns are linearly dependent");
        // consistency: rows below the pivots must have zero rhs
        for r in row..m {
            if !a[r][n].is_zero() {
                return None;
            }
        }
        let mut x = vec![BigRational::zero(); n];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = a[i][n].clone();
        }
        Some(x)
    }

    /// Unique integer solution of `self * x = rhs` (columns independent).
    pub fn solve_unique_integer(&self, rhs: &[BigInt]) -> Option<ZVec> {
        let x = self.solve_unique_rational(rhs)?;
        let mut out = Vec::with_capacity(x.len());
        for v in x {
            if !v.denom().is_one() {
                return None;
            }
            out.push(v.numer().clone());
        }
        Some(out)
    }

    /// Basis (rows, in HNF) of the saturation `span_Q(rows) ∩ Z^n`.
    pub fn saturation(&self) -> ZMat {
        // x lies in the rational row span iff x is orthogonal to the right
        // kernel, so the saturated lattice is the kernel of the kernel
        self.integer_kernel().integer_kernel().row_hnf()
    }
}
