//! Squarefree modules over a toric face ring, stored poset-side: a vector
//! space per cell with transition maps along covering pairs, functorial
//! along chains. This is exactly a finitely generated module over the
//! incidence algebra of the face poset, and the graded piece of the module
//! at a degree depends only on the degree's support cell.
//!
//! The module category is abelian with enough injectives; the
//! indecomposable injectives are the face modules `k[σ]` (one dimension on
//! every cell below `σ`). Two constructions matter downstream:
//!
//! * the complex of face rings `⊕ k[M_σ]` over all cells with signed
//!   restriction differentials, quasi-isomorphic to the normalized
//!   dualizing complex of the ring, and
//! * the contravariant duality on bounded complexes, which corresponds to
//!   Poincaré-Verdier duality after sheafification and squares to the
//!   identity on cohomology.

use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::cell_topology::{CellCoefficients, CellComplex, CellId};
use crate::field::FieldSpec;
use crate::linalg::{complex_cohomology, Mat, Subquotient};
use crate::monoidal::{Degree, MonoidalComplex};

#[derive(Debug, Error)]
pub enum SquarefreeError {
    #[error("transition for covering `{upper}` > `{lower}` has shape {got:?}, expected {expected:?}")]
    ShapeMismatch { upper: String, lower: String, got: (usize, usize), expected: (usize, usize) },
    #[error("transitions are not functorial between `{lower}` and `{upper}`")]
    NotFunctorial { upper: String, lower: String },
    #[error("map at cell `{0}` does not commute with transitions")]
    NotAMorphism(String),
    #[error("differential does not square to zero at cell `{0}`")]
    DifferentialSquare(String),
    #[error("differential is not natural for covering `{upper}` > `{lower}`")]
    DifferentialNotNatural { upper: String, lower: String },
    #[error("induced transition on cohomology failed at covering `{upper}` > `{lower}` (malformed complex)")]
    InducedTransitionFailed { upper: String, lower: String },
}

/// A squarefree module: dimensions per cell and transition matrices on
/// covering pairs, validated functorial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqModule {
    pub field: FieldSpec,
    dims: Vec<usize>,
    maps: BTreeMap<(CellId, CellId), Mat>,
}

impl SqModule {
    /// Build and validate. `maps` holds one matrix per covering pair of
    /// shape `dims[upper] x dims[lower]` (zero maps may be omitted);
    /// composites along any two chains between the same cells must agree.
    pub fn new(
        k: &CellComplex,
        field: FieldSpec,
        dims: Vec<usize>,
        maps: BTreeMap<(CellId, CellId), Mat>,
    ) -> Result<SqModule, SquarefreeError> {
        assert_eq!(dims.len(), k.len());
        let mut full = maps;
        for &(u, l) in k.covering_pairs() {
            let m = full.entry((u, l)).or_insert_with(|| Mat::zero(field, dims[u], dims[l]));
            if (m.nrows, m.ncols) != (dims[u], dims[l]) {
                return Err(SquarefreeError::ShapeMismatch {
                    upper: k.label(u).to_string(),
                    lower: k.label(l).to_string(),
                    got: (m.nrows, m.ncols),
                    expected: (dims[u], dims[l]),
                });
            }
        }
        let module = SqModule { field, dims, maps: full };
        module.check_functorial(k)?;
        Ok(module)
    }

    fn check_functorial(&self, k: &CellComplex) -> Result<(), SquarefreeError> {
        for upper in k.ids() {
            for lower in k.ids() {
                if lower == upper || !k.leq(lower, upper) {
                    continue;
                }
                let mut composite: Option<Mat> = None;
                for chain in k.chains_between(upper, lower) {
                    let mut m: Option<Mat> = None;
                    for w in chain.windows(2) {
                        let step = &self.maps[&(w[1], w[0])];
                        m = Some(match m {
                            None => step.clone(),
                            Some(prev) => step.mul(&prev),
                        });
                    }
                    let m = m.expect("nonempty chain");
                    match &composite {
                        None => composite = Some(m),
                        Some(c) if *c == m => {}
                        Some(_) => {
                            return Err(SquarefreeError::NotFunctorial {
                                upper: k.label(upper).to_string(),
                                lower: k.label(lower).to_string(),
                            })
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-run the functoriality check (constructors already enforce it).
    pub fn revalidate(&self, k: &CellComplex) -> Result<(), SquarefreeError> {
        self.check_functorial(k)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, c: CellId) -> usize {
        self.dims[c]
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn map_at(&self, upper: CellId, lower: CellId) -> &Mat {
        &self.maps[&(upper, lower)]
    }

    /// Composite transition `lower -> upper` along any chain (functoriality
    /// makes the choice irrelevant); identity when the cells coincide.
    pub fn transition_between(&self, k: &CellComplex, upper: CellId, lower: CellId) -> Mat {
        if upper == lower {
            return Mat::identity(self.field, self.dims[upper]);
        }
        assert!(k.leq(lower, upper), "transition requires lower <= upper");
        let chain = &k.chains_between(upper, lower)[0];
        let mut m: Option<Mat> = None;
        for w in chain.windows(2) {
            let step = &self.maps[&(w[1], w[0])];
            m = Some(match m {
                None => step.clone(),
                Some(prev) => step.mul(&prev),
            });
        }
        m.expect("nonempty chain")
    }

    /// Graded piece dimension at a degree: the dimension at its support
    /// cell.
    pub fn evaluate_at_degree(&self, a: &Degree) -> usize {
        self.dims[a.cell]
    }

    /// The ring itself: one dimension everywhere, identity transitions.
    pub fn free(k: &CellComplex, field: FieldSpec) -> SqModule {
        let dims = vec![1; k.len()];
        let maps =
            k.covering_pairs().iter().map(|&p| (p, Mat::identity(field, 1))).collect();
        SqModule::new(k, field, dims, maps).expect("free module is functorial")
    }

    /// The face module `k[σ] = R/p_σ`: one dimension on every cell below
    /// `σ`, identity transitions among them. These are the indecomposable
    /// injectives of the category.
    pub fn face(k: &CellComplex, field: FieldSpec, sigma: CellId) -> SqModule {
        let dims: Vec<usize> = k.ids().map(|c| usize::from(k.leq(c, sigma))).collect();
        let maps = k
            .covering_pairs()
            .iter()
            .map(|&(u, l)| {
                let m = if dims[u] == 1 && dims[l] == 1 {
                    Mat::identity(field, 1)
                } else {
                    Mat::zero(field, dims[u], dims[l])
                };
                ((u, l), m)
            })
            .collect();
        SqModule::new(k, field, dims, maps).expect("face module is functorial")
    }

    pub fn zero(k: &CellComplex, field: FieldSpec) -> SqModule {
        SqModule::new(k, field, vec![0; k.len()], BTreeMap::new())
            .expect("zero module is functorial")
    }

    /// Direct sum; block order follows the argument order.
    pub fn direct_sum(k: &CellComplex, field: FieldSpec, parts: &[&SqModule]) -> SqModule {
        let dims: Vec<usize> = k.ids().map(|c| parts.iter().map(|p| p.dims[c]).sum()).collect();
        let maps = k
            .covering_pairs()
            .iter()
            .map(|&(u, l)| {
                let mut m = Mat::zero(field, dims[u], dims[l]);
                let (mut ro, mut co) = (0, 0);
                for p in parts {
                    let b = &p.maps[&(u, l)];
                    for i in 0..b.nrows {
                        for j in 0..b.ncols {
                            m.set(ro + i, co + j, b.get(i, j).clone());
                        }
                    }
                    ro += b.nrows;
                    co += b.ncols;
                }
                ((u, l), m)
            })
            .collect();
        SqModule::new(k, field, dims, maps).expect("direct sum is functorial")
    }
}

impl CellCoefficients for SqModule {
    fn field(&self) -> FieldSpec {
        self.field
    }
    fn dim(&self, cell: CellId) -> usize {
        self.dims[cell]
    }
    fn transition(&self, upper: CellId, lower: CellId) -> Mat {
        self.maps[&(upper, lower)].clone()
    }
}

/// A morphism of squarefree modules: one matrix per cell, commuting with
/// the transitions.
#[derive(Clone, Debug)]
pub struct SqMorphism {
    pub maps: Vec<Mat>,
}

impl SqMorphism {
    pub fn new(
        k: &CellComplex,
        src: &SqModule,
        dst: &SqModule,
        maps: Vec<Mat>,
    ) -> Result<SqMorphism, SquarefreeError> {
        assert_eq!(maps.len(), k.len());
        for c in k.ids() {
            assert_eq!((maps[c].nrows, maps[c].ncols), (dst.dims[c], src.dims[c]));
        }
        for &(u, l) in k.covering_pairs() {
            let lhs = maps[u].mul(&src.maps[&(u, l)]);
            let rhs = dst.maps[&(u, l)].mul(&maps[l]);
            if lhs != rhs {
                return Err(SquarefreeError::NotAMorphism(k.label(u).to_string()));
            }
        }
        Ok(SqMorphism { maps })
    }

    /// Cellwise kernel with induced transitions.
    pub fn kernel(&self, k: &CellComplex, src: &SqModule) -> SqModule {
        let field = src.field;
        let bases: Vec<Mat> = k.ids().map(|c| self.maps[c].kernel_basis()).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.ncols).collect();
        let maps = k
            .covering_pairs()
            .iter()
            .map(|&(u, l)| {
                let mut m = Mat::zero(field, dims[u], dims[l]);
                let image = src.maps[&(u, l)].mul(&bases[l]);
                for j in 0..dims[l] {
                    let x =
                        bases[u].solve(&image.col(j)).expect("transitions preserve kernels");
                    for (i, v) in x.into_iter().enumerate() {
                        m.set(i, j, v);
                    }
                }
                ((u, l), m)
            })
            .collect();
        SqModule::new(k, field, dims, maps).expect("kernel inherits functoriality")
    }

    /// Cellwise cokernel with induced transitions.
    pub fn cokernel(&self, k: &CellComplex, dst: &SqModule) -> SqModule {
        let field = dst.field;
        // per cell: coordinate representatives completing the image to a basis
        let mut reps: Vec<Mat> = Vec::new();
        let mut images: Vec<Mat> = Vec::new();
        for c in k.ids() {
            let img = self.maps[c].image_basis();
            let id = Mat::identity(field, dst.dims[c]);
            let joined = Mat::from_blocks(field, &[vec![&img, &id]]);
            let (_, pivots) = joined.rref();
            let chosen: Vec<usize> =
                pivots.iter().filter(|&&p| p >= img.ncols).map(|&p| p - img.ncols).collect();
            let mut r = Mat::zero(field, dst.dims[c], chosen.len());
            for (j, &col) in chosen.iter().enumerate() {
                r.set(col, j, field.one());
            }
            reps.push(r);
            images.push(img);
        }
        let dims: Vec<usize> = reps.iter().map(|r| r.ncols).collect();
        let project = |c: CellId, v: &[crate::field::Scalar]| -> Vec<crate::field::Scalar> {
            let joined = Mat::from_blocks(field, &[vec![&images[c], &reps[c]]]);
            let x = joined.solve(v).expect("image and representatives span");
            x[images[c].ncols..].to_vec()
        };
        let maps = k
            .covering_pairs()
            .iter()
            .map(|&(u, l)| {
                let mut m = Mat::zero(field, dims[u], dims[l]);
                let moved = dst.maps[&(u, l)].mul(&reps[l]);
                for j in 0..dims[l] {
                    let x = project(u, &moved.col(j));
                    for (i, v) in x.into_iter().enumerate() {
                        m.set(i, j, v);
                    }
                }
                ((u, l), m)
            })
            .collect();
        SqModule::new(k, field, dims, maps).expect("cokernel inherits functoriality")
    }
}

/// Dimension of the morphism space between two squarefree modules, by
/// solving the commuting-square linear system.
pub fn hom_dim(k: &CellComplex, src: &SqModule, dst: &SqModule) -> usize {
    let field = src.field;
    let mut offsets = Vec::with_capacity(k.len());
    let mut total = 0;
    for c in k.ids() {
        offsets.push(total);
        total += dst.dims[c] * src.dims[c];
    }
    let var = |c: CellId, i: usize, j: usize| offsets[c] + i * src.dims[c] + j;
    let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
    for &(u, l) in k.covering_pairs() {
        // (f_u . phi^src - phi^dst . f_l) entry (i, j) = 0
        for i in 0..dst.dims[u] {
            for j in 0..src.dims[l] {
                let mut row = vec![field.zero(); total];
                for t in 0..src.dims[u] {
                    let idx = var(u, i, t);
                    row[idx] = row[idx].add(src.maps[&(u, l)].get(t, j));
                }
                for s in 0..dst.dims[l] {
                    let idx = var(l, s, j);
                    row[idx] = row[idx].sub(dst.maps[&(u, l)].get(i, s));
                }
                rows.push(row);
            }
        }
    }
    let m = Mat::from_fn(field, rows.len(), total, |i, j| rows[i][j].clone());
    total - m.rank()
}

/// A bounded complex of squarefree modules with cellwise differentials.
#[derive(Clone, Debug, PartialEq)]
pub struct SqComplex {
    /// Cohomological index of `terms[0]`.
    pub lo: i64,
    pub terms: Vec<SqModule>,
    /// `diffs[j][c]`: map from `terms[j]` to `terms[j+1]` at cell `c`.
    pub diffs: Vec<Vec<Mat>>,
}

impl SqComplex {
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn term(&self, index: i64) -> Option<&SqModule> {
        if index < self.lo {
            return None;
        }
        self.terms.get((index - self.lo) as usize)
    }

    pub fn validate(&self, k: &CellComplex) -> Result<(), SquarefreeError> {
        for j in 0..self.diffs.len() {
            for c in k.ids() {
                let d = &self.diffs[j][c];
                assert_eq!(
                    (d.nrows, d.ncols),
                    (self.terms[j + 1].dims[c], self.terms[j].dims[c]),
                    "differential shape"
                );
                if j + 1 < self.diffs.len() && !self.diffs[j + 1][c].mul(d).is_zero() {
                    return Err(SquarefreeError::DifferentialSquare(k.label(c).to_string()));
                }
            }
            for &(u, l) in k.covering_pairs() {
                let lhs = self.diffs[j][u].mul(&self.terms[j].maps[&(u, l)]);
                let rhs = self.terms[j + 1].maps[&(u, l)].mul(&self.diffs[j][l]);
                if lhs != rhs {
                    return Err(SquarefreeError::DifferentialNotNatural {
                        upper: k.label(u).to_string(),
                        lower: k.label(l).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The module concentrated in one index.
    pub fn concentrated(module: SqModule, index: i64) -> SqComplex {
        SqComplex { lo: index, terms: vec![module], diffs: Vec::new() }
    }

    /// Degree shift: the old index `i` term moves to `i + s`, with
    /// differentials negated for odd shifts.
    pub fn shifted(&self, s: i64) -> SqComplex {
        let flip = s.rem_euclid(2) == 1;
        let diffs = self
            .diffs
            .iter()
            .map(|per_cell| {
                per_cell
                    .iter()
                    .map(|m| if flip { m.scale(&m.field.from_i64(-1)) } else { m.clone() })
                    .collect()
            })
            .collect();
        SqComplex { lo: self.lo + s, terms: self.terms.clone(), diffs }
    }
}

/// The complex of face modules over all cells: index `-i` holds the direct
/// sum of `k[σ]` over cells of dimension `i - 1`, and the differential
/// sends the generator of `k[σ]` to the signed sum of the generators of the
/// cells it covers. Indices run from `-(dim + 1)` (top cells) to `0` (the
/// bottom cell). For a cone-wise normal toric face ring this complex is
/// quasi-isomorphic to the normalized dualizing complex.
pub fn ishida_complex(mc: &MonoidalComplex, field: FieldSpec) -> SqComplex {
    let k = mc.complex();
    let eps = mc.incidence();
    let lo = -k.dim() - 1;
    // at index p, the cells of dimension -p - 1, in cell id order
    let summands: Vec<Vec<CellId>> = (lo..=0).map(|p| k.cells_of_dim(-p - 1)).collect();
    let terms: Vec<SqModule> = summands
        .iter()
        .map(|cells| {
            let parts: Vec<SqModule> =
                cells.iter().map(|&s| SqModule::face(k, field, s)).collect();
            let refs: Vec<&SqModule> = parts.iter().collect();
            SqModule::direct_sum(k, field, &refs)
        })
        .collect();
    let mut diffs = Vec::new();
    for j in 0..terms.len().saturating_sub(1) {
        let (src_cells, dst_cells) = (&summands[j], &summands[j + 1]);
        let per_cell: Vec<Mat> = k
            .ids()
            .map(|rho| {
                let src_idx: Vec<usize> =
                    (0..src_cells.len()).filter(|&i| k.leq(rho, src_cells[i])).collect();
                let dst_idx: Vec<usize> =
                    (0..dst_cells.len()).filter(|&i| k.leq(rho, dst_cells[i])).collect();
                let mut m = Mat::zero(field, dst_idx.len(), src_idx.len());
                for (col, &si) in src_idx.iter().enumerate() {
                    for (row, &di) in dst_idx.iter().enumerate() {
                        let sign = eps.sign(src_cells[si], dst_cells[di]);
                        if sign != 0 {
                            m.set(row, col, field.from_i64(sign.into()));
                        }
                    }
                }
                m
            })
            .collect();
        diffs.push(per_cell);
    }
    let out = SqComplex { lo, terms, diffs };
    debug_assert!(out.validate(k).is_ok());
    out
}

/// The contravariant duality functor on bounded complexes. The output term
/// at index `p` collects, for every pair `(i, σ)` with
/// `i + dim(cone of σ) = -p`, the dual of the input's stalk at `σ` tensored
/// with the face module `k[σ]`. One differential component runs down the
/// poset with incidence signs and transposed transitions; the other is the
/// transposed input differential with an alternating sign. Applying it
/// twice preserves cohomology dimensions; applied to the ring concentrated
/// in index zero it returns the face-module complex on the nose.
pub fn dualize(mc: &MonoidalComplex, x: &SqComplex) -> SqComplex {
    let k = mc.complex();
    let eps = mc.incidence();
    let field = x.terms.first().map_or(FieldSpec::Rationals, |t| t.field);
    // nonzero summands (i, sigma), grouped by output index p = -i - dim C_sigma
    let mut by_p: BTreeMap<i64, Vec<(i64, CellId)>> = BTreeMap::new();
    for idx in 0..x.terms.len() {
        let i = x.lo + idx as i64;
        for sigma in k.ids() {
            if x.terms[idx].dims[sigma] == 0 {
                continue;
            }
            let d_sigma = k.dim_of(sigma) + 1;
            by_p.entry(-i - d_sigma).or_default().push((i, sigma));
        }
    }
    if by_p.is_empty() {
        return SqComplex::concentrated(SqModule::zero(k, field), 0);
    }
    for list in by_p.values_mut() {
        list.sort();
    }
    let lo = *by_p.keys().next().expect("nonempty");
    let hi = *by_p.keys().next_back().expect("nonempty");
    let empty: Vec<(i64, CellId)> = Vec::new();
    let summands: Vec<&Vec<(i64, CellId)>> =
        (lo..=hi).map(|p| by_p.get(&p).unwrap_or(&empty)).collect();

    // stalk dimension of summand (i, sigma) at cell rho
    let stalk = |i: i64, sigma: CellId, rho: CellId| -> usize {
        if k.leq(rho, sigma) {
            x.term(i).expect("summand index in range").dims[sigma]
        } else {
            0
        }
    };
    let terms: Vec<SqModule> = summands
        .iter()
        .map(|list| {
            let dims: Vec<usize> =
                k.ids().map(|rho| list.iter().map(|&(i, s)| stalk(i, s, rho)).sum()).collect();
            let maps = k
                .covering_pairs()
                .iter()
                .map(|&(u, l)| {
                    let mut m = Mat::zero(field, dims[u], dims[l]);
                    let (mut ro, mut co) = (0, 0);
                    for &(i, s) in list.iter() {
                        let (du, dl) = (stalk(i, s, u), stalk(i, s, l));
                        // face-module transition: identity block where both live
                        for t in 0..du.min(dl) {
                            m.set(ro + t, co + t, field.one());
                        }
                        ro += du;
                        co += dl;
                    }
                    ((u, l), m)
                })
                .collect();
            SqModule::new(k, field, dims, maps).expect("dual term is functorial")
        })
        .collect();

    let mut diffs: Vec<Vec<Mat>> = Vec::new();
    for (pj, p) in (lo..hi).enumerate() {
        let src = summands[pj];
        let dst = summands[pj + 1];
        let per_cell: Vec<Mat> = k
            .ids()
            .map(|rho| {
                let src_off = block_offsets(src, rho, &stalk);
                let dst_off = block_offsets(dst, rho, &stalk);
                let rows = *dst_off.last().unwrap_or(&0);
                let cols = *src_off.last().unwrap_or(&0);
                let mut m = Mat::zero(field, rows, cols);
                for (si, &(i, sigma)) in src.iter().enumerate() {
                    if stalk(i, sigma, rho) == 0 {
                        continue;
                    }
                    for (di, &(j, tau)) in dst.iter().enumerate() {
                        if stalk(j, tau, rho) == 0 {
                            continue;
                        }
                        let block: Option<Mat> = if j == i && eps.sign(sigma, tau) != 0 {
                            // poset direction: signed transposed transition
                            let phi = x
                                .term(i)
                                .expect("index in range")
                                .transition_between(k, sigma, tau);
                            Some(
                                phi.transpose()
                                    .scale(&field.from_i64(eps.sign(sigma, tau).into())),
                            )
                        } else if j == i - 1 && tau == sigma {
                            // complex direction: transposed differential, sign (-1)^p
                            let dj = (i - 1 - x.lo) as usize;
                            let dmat = &x.diffs[dj][sigma];
                            let sign = if p.rem_euclid(2) == 0 { 1 } else { -1 };
                            Some(dmat.transpose().scale(&field.from_i64(sign)))
                        } else {
                            None
                        };
                        if let Some(b) = block {
                            for r in 0..b.nrows {
                                for c in 0..b.ncols {
                                    m.set(dst_off[di] + r, src_off[si] + c, b.get(r, c).clone());
                                }
                            }
                        }
                    }
                }
                m
            })
            .collect();
        diffs.push(per_cell);
    }
    let out = SqComplex { lo, terms, diffs };
    debug_assert!(out.validate(k).is_ok());
    out
}

fn block_offsets(
    list: &[(i64, CellId)],
    rho: CellId,
    stalk: &dyn Fn(i64, CellId, CellId) -> usize,
) -> Vec<usize> {
    let mut offs = Vec::with_capacity(list.len() + 1);
    let mut acc = 0;
    for &(i, s) in list {
        offs.push(acc);
        acc += stalk(i, s, rho);
    }
    offs.push(acc);
    offs
}

/// Cohomology of a complex of squarefree modules, computed cellwise (the
/// stalk functors are exact), with the induced transitions solved and
/// verified.
pub fn sq_cohomology(k: &CellComplex, x: &SqComplex) -> Result<Vec<SqModule>, SquarefreeError> {
    x.validate(k)?;
    let field = x.terms.first().map_or(FieldSpec::Rationals, |t| t.field);
    let n = x.terms.len();
    let per_cell: Vec<Vec<Subquotient>> = k
        .ids()
        .map(|c| {
            let dims: Vec<usize> = (0..n).map(|j| x.terms[j].dims[c]).collect();
            let d: Vec<Mat> = (0..n.saturating_sub(1)).map(|j| x.diffs[j][c].clone()).collect();
            complex_cohomology(field, &dims, &d)
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    #[allow(clippy::needless_range_loop)]
    for j in 0..n {
        let dims: Vec<usize> = k.ids().map(|c| per_cell[c][j].dim()).collect();
        let mut maps = BTreeMap::new();
        for &(u, l) in k.covering_pairs() {
            let mut m = Mat::zero(field, dims[u], dims[l]);
            let phi = &x.terms[j].maps[&(u, l)];
            for col in 0..dims[l] {
                let rep = per_cell[l][j].representatives.col(col);
                let moved = phi.mul_vec(&rep);
                let coords = per_cell[u][j].class_coords(&moved).ok_or_else(|| {
                    SquarefreeError::InducedTransitionFailed {
                        upper: k.label(u).to_string(),
                        lower: k.label(l).to_string(),
                    }
                })?;
                for (i, v) in coords.into_iter().enumerate() {
                    m.set(i, col, v);
                }
            }
            maps.insert((u, l), m);
        }
        let module = SqModule::new(k, field, dims, maps).map_err(|_| {
            SquarefreeError::InducedTransitionFailed {
                upper: "<cohomology>".to_string(),
                lower: "<cohomology>".to_string(),
            }
        })?;
        out.push(module);
    }
    Ok(out)
}

/// A random small squarefree module: the cokernel of a random morphism
/// between direct sums of face modules. Stalk dimensions stay at most the
/// number of target summands.
pub fn random_module(
    mc: &MonoidalComplex,
    field: FieldSpec,
    rng: &mut impl Rng,
    max_target_summands: usize,
) -> SqModule {
    let k = mc.complex();
    let ncells = k.len();
    let n_src = rng.gen_range(1..=3);
    let n_dst = rng.gen_range(1..=max_target_summands.max(1));
    let src_cells: Vec<CellId> = (0..n_src).map(|_| rng.gen_range(0..ncells)).collect();
    let dst_cells: Vec<CellId> = (0..n_dst).map(|_| rng.gen_range(0..ncells)).collect();
    let src_parts: Vec<SqModule> =
        src_cells.iter().map(|&s| SqModule::face(k, field, s)).collect();
    let dst_parts: Vec<SqModule> =
        dst_cells.iter().map(|&s| SqModule::face(k, field, s)).collect();
    let src = SqModule::direct_sum(k, field, &src_parts.iter().collect::<Vec<_>>());
    let dst = SqModule::direct_sum(k, field, &dst_parts.iter().collect::<Vec<_>>());
    // a morphism k[s] -> k[t] is a scalar multiple of the natural
    // surjection when t <= s and zero otherwise
    let coeffs: Vec<Vec<i64>> = (0..n_src)
        .map(|i| {
            (0..n_dst)
                .map(|j| {
                    if k.leq(dst_cells[j], src_cells[i]) {
                        rng.gen_range(-2..=2)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let maps: Vec<Mat> = k
        .ids()
        .map(|rho| {
            let mut m = Mat::zero(field, dst.dims[rho], src.dims[rho]);
            let mut col = 0;
            for i in 0..n_src {
                if !k.leq(rho, src_cells[i]) {
                    continue;
                }
                let mut row = 0;
                for j in 0..n_dst {
                    if !k.leq(rho, dst_cells[j]) {
                        continue;
                    }
                    if k.leq(dst_cells[j], src_cells[i]) {
                        m.set(row, col, field.from_i64(coeffs[i][j]));
                    }
                    row += 1;
                }
                col += 1;
            }
            m
        })
        .collect();
    let f = SqMorphism::new(k, &src, &dst, maps).expect("scalar multiples of nat commute");
    f.cokernel(k, &dst)
}
