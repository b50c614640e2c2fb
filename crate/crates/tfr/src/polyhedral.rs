//! Exact rational polyhedral cones and integer lattices.
//!
//! Cones are pointed and full-dimensional in their ambient space, stored
//! with both generators and computed facet normals (inward, primitive).
//! Facets come from kernel enumeration over subsets of generators — the
//! double description at desk scale, with no floating point anywhere.

use std::collections::{BTreeSet, HashMap};

use num::{BigInt, BigRational, Signed, Zero};
use thiserror::Error;

use crate::zlinalg::{primitive, zvec_dot, zvec_is_zero, zvec_sub, ZMat, ZVec};

#[derive(Debug, Error)]
pub enum PolyhedralError {
    #[error("zero vector among cone generators")]
    ZeroGenerator,
    #[error("cone contains a line (not pointed)")]
    NotPointed,
    #[error("cone has dimension {rank}, not full-dimensional in R^{ambient}")]
    NotFullDimensional { rank: usize, ambient: usize },
    #[error("vector has dimension {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("the given vectors do not span a face of the cone")]
    NotAFace,
    #[error("generators are not contained in the given lattice")]
    GeneratorsOutsideLattice,
    #[error("ambient dimension {0} exceeds the enumeration limit {1}")]
    AmbientTooLarge(usize, usize),
    #[error("lattice point enumeration exceeded the cap of {0} points")]
    EnumerationCap(usize),
}

/// Iterate over all `k`-element index subsets of `0..n`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..n {
            if n - i < k - acc.len() {
                break;
            }
            acc.push(i);
            rec(n, k, i + 1, acc, f);
            acc.pop();
        }
    }
    let mut acc = Vec::new();
    rec(n, k, 0, &mut acc, &mut f);
}

/// Extreme rays of `{x : ineqs . x >= 0, eqs . x = 0}` as primitive integer
/// vectors, assuming the region is a pointed cone.
pub fn extreme_rays(ineqs: &[ZVec], eqs: &[ZVec], ambient: usize) -> Vec<ZVec> {
    if ambient == 0 {
        return Vec::new();
    }
    let mut rays: Vec<ZVec> = Vec::new();
    let eq_rank = ZMat::new(eqs.to_vec(), ambient).rank();
    let space_dim = ambient - eq_rank;
    if space_dim == 0 {
        return Vec::new();
    }
    let need = space_dim - 1;
    if need > ineqs.len() {
        return Vec::new();
    }
    for_each_subset(ineqs.len(), need, |subset| {
        let mut rows = eqs.to_vec();
        for &i in subset {
            rows.push(ineqs[i].clone());
        }
        let kernel = ZMat::new(rows, ambient).integer_kernel();
        if kernel.nrows() != 1 {
            return;
        }
        let r = primitive(&kernel.rows[0]);
        for cand in [r.clone(), r.iter().map(|x| -x).collect::<ZVec>()] {
            if ineqs.iter().all(|n| !zvec_dot(n, &cand).is_negative()) {
                // extremality: active constraints must cut down to a line
                let mut active = eqs.to_vec();
                for n in ineqs {
                    if zvec_dot(n, &cand).is_zero() {
                        active.push(n.clone());
                    }
                }
                if ZMat::new(active, ambient).rank() == ambient - 1 && !rays.contains(&cand) {
                    rays.push(cand);
                }
            }
        }
    });
    rays.sort();
    rays
}

/// A face of a cone, identified by the generators lying on it and the
/// facets through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub generators: BTreeSet<usize>,
    pub active_facets: BTreeSet<usize>,
    pub dim: usize,
}

/// Pointed, full-dimensional rational cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub ambient: usize,
    pub generators: Vec<ZVec>,
    /// Primitive inward facet normals, sorted.
    pub facets: Vec<ZVec>,
}

impl Cone {
    /// Build a cone from integer generators, computing facet normals and
    /// verifying pointedness and full-dimensionality.
    pub fn from_generators(generators: Vec<ZVec>, ambient: usize) -> Result<Cone, PolyhedralError> {
        for g in &generators {
            if g.len() != ambient {
                return Err(PolyhedralError::DimensionMismatch {
                    got: g.len(),
                    expected: ambient,
                });
            }
            if zvec_is_zero(g) {
                return Err(PolyhedralError::ZeroGenerator);
            }
        }
        if ambient == 0 {
            return Ok(Cone { ambient, generators: Vec::new(), facets: Vec::new() });
        }
        let gen_mat = ZMat::new(generators.clone(), ambient);
        let rank = gen_mat.rank();
        if rank < ambient {
            // decide pointedness inside the span, so a line is reported as
            // such and not merely as low-dimensional
            let basis = gen_mat.saturation();
            let local: Vec<ZVec> = generators
                .iter()
                .map(|g| basis.hnf_coords(g).expect("generator lies in its own span"))
                .collect();
            let facets = facet_normals(&local, rank);
            if ZMat::new(facets, rank).rank() < rank {
                return Err(PolyhedralError::NotPointed);
            }
            return Err(PolyhedralError::NotFullDimensional { rank, ambient });
        }
        let facets = facet_normals(&generators, ambient);
        if ZMat::new(facets.clone(), ambient).rank() < ambient {
            return Err(PolyhedralError::NotPointed);
        }
        debug_assert!(generators
            .iter()
            .all(|g| facets.iter().all(|n| !zvec_dot(n, g).is_negative())));
        Ok(Cone { ambient, generators, facets })
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool, PolyhedralError> {
        self.check_dim(v)?;
        Ok(self.facets.iter().all(|n| !zvec_dot(n, v).is_negative()))
    }

    /// Strict inequality on every facet; for a full-dimensional cone the
    /// relative interior is the interior.
    pub fn relint_contains(&self, v: &[BigInt]) -> Result<bool, PolyhedralError> {
        self.check_dim(v)?;
        if self.ambient == 0 {
            return Ok(true); // the zero cone is its own relative interior
        }
        Ok(self.facets.iter().all(|n| zvec_dot(n, v).is_positive()))
    }

    fn check_dim(&self, v: &[BigInt]) -> Result<(), PolyhedralError> {
        if v.len() != self.ambient {
            return Err(PolyhedralError::DimensionMismatch {
                got: v.len(),
                expected: self.ambient,
            });
        }
        Ok(())
    }

    /// All faces including `{0}` and the cone itself, ordered by dimension.
    /// Every face is an intersection of facets, so subsets of facets
    /// exhaust them.
    pub fn faces(&self) -> Vec<Face> {
        if self.ambient == 0 {
            return vec![Face {
                generators: BTreeSet::new(),
                active_facets: BTreeSet::new(),
                dim: 0,
            }];
        }
        let nf = self.facets.len();
        assert!(nf < 63, "facet count out of supported range");
        let mut seen: HashMap<BTreeSet<usize>, Face> = HashMap::new();
        for mask in 0u64..(1u64 << nf) {
            let chosen: Vec<usize> = (0..nf).filter(|&i| mask & (1 << i) != 0).collect();
            let gens: BTreeSet<usize> = (0..self.generators.len())
                .filter(|&gi| {
                    chosen
                        .iter()
                        .all(|&f| zvec_dot(&self.facets[f], &self.generators[gi]).is_zero())
                })
                .collect();
            if seen.contains_key(&gens) {
                continue;
            }
            let active: BTreeSet<usize> = (0..nf)
                .filter(|&f| {
                    gens.iter()
                        .all(|&gi| zvec_dot(&self.facets[f], &self.generators[gi]).is_zero())
                })
                .collect();
            let rows: Vec<ZVec> = gens.iter().map(|&gi| self.generators[gi].clone()).collect();
            let dim = ZMat::new(rows, self.ambient).rank();
            seen.insert(gens.clone(), Face { generators: gens, active_facets: active, dim });
        }
        let mut out: Vec<Face> = seen.into_values().collect();
        out.sort_by(|a, b| (a.dim, &a.generators).cmp(&(b.dim, &b.generators)));
        out
    }

    /// The face containing `v` in its relative interior, or `None` when `v`
    /// is outside the cone.
    pub fn relint_face(&self, v: &[BigInt]) -> Result<Option<Face>, PolyhedralError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        let active: BTreeSet<usize> = (0..self.facets.len())
            .filter(|&f| zvec_dot(&self.facets[f], v).is_zero())
            .collect();
        let gens: BTreeSet<usize> = (0..self.generators.len())
            .filter(|&gi| {
                active
                    .iter()
                    .all(|&f| zvec_dot(&self.facets[f], &self.generators[gi]).is_zero())
            })
            .collect();
        let rows: Vec<ZVec> = gens.iter().map(|&gi| self.generators[gi].clone()).collect();
        let dim = ZMat::new(rows, self.ambient).rank();
        Ok(Some(Face { generators: gens, active_facets: active, dim }))
    }

    /// The face spanned by the given vectors; errors when the vectors are
    /// not all in the cone or span less than the smallest face containing
    /// them.
    pub fn face_spanned_by(&self, vectors: &[ZVec]) -> Result<Face, PolyhedralError> {
        for v in vectors {
            if !self.contains(v)? {
                return Err(PolyhedralError::NotAFace);
            }
        }
        let active: BTreeSet<usize> = (0..self.facets.len())
            .filter(|&f| vectors.iter().all(|v| zvec_dot(&self.facets[f], v).is_zero()))
            .collect();
        let gens: BTreeSet<usize> = (0..self.generators.len())
            .filter(|&gi| {
                active
                    .iter()
                    .all(|&f| zvec_dot(&self.facets[f], &self.generators[gi]).is_zero())
            })
            .collect();
        let face_rows: Vec<ZVec> = gens.iter().map(|&gi| self.generators[gi].clone()).collect();
        let dim = ZMat::new(face_rows, self.ambient).rank();
        let span_rank = ZMat::new(vectors.to_vec(), self.ambient).rank();
        if span_rank != dim {
            return Err(PolyhedralError::NotAFace);
        }
        Ok(Face { generators: gens, active_facets: active, dim })
    }

    /// Extreme rays (dimension-one faces) as primitive vectors, sorted.
    pub fn rays(&self) -> Vec<ZVec> {
        let mut out: Vec<ZVec> = self
            .faces()
            .into_iter()
            .filter(|f| f.dim == 1)
            .map(|f| {
                let gi = *f.generators.iter().next().expect("ray face has a generator");
                primitive(&self.generators[gi])
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// A grading strictly positive on every nonzero cone point: the sum of
    /// the facet normals.
    pub fn positive_grading(&self) -> ZVec {
        let mut w = vec![BigInt::zero(); self.ambient];
        for n in &self.facets {
            w = crate::zlinalg::zvec_add(&w, n);
        }
        w
    }
}

/// Facet normals of a full-dimensional cone in `R^d` by subset enumeration:
/// every facet is spanned by `d - 1` independent generators, so kernels of
/// generator subsets exhaust the candidates.
fn facet_normals(generators: &[ZVec], ambient: usize) -> Vec<ZVec> {
    let mut out: Vec<ZVec> = Vec::new();
    let k = ambient - 1;
    if k > generators.len() {
        return out;
    }
    for_each_subset(generators.len(), k, |subset| {
        let rows: Vec<ZVec> = subset.iter().map(|&i| generators[i].clone()).collect();
        let kernel = ZMat::new(rows, ambient).integer_kernel();
        if kernel.nrows() != 1 {
            return;
        }
        let n = primitive(&kernel.rows[0]);
        let mut pos = false;
        let mut neg = false;
        for g in generators {
            let d = zvec_dot(&n, g);
            if d.is_positive() {
                pos = true;
            } else if d.is_negative() {
                neg = true;
            }
        }
        let keep = match (pos, neg) {
            (true, false) => Some(n),
            (false, true) => Some(n.iter().map(|x| -x).collect()),
            _ => None, // mixed signs: not a supporting hyperplane
        };
        if let Some(n) = keep {
            if !out.contains(&n) {
                out.push(n);
            }
        }
    });
    out.sort();
    out
}

/// Integer lattice given by a canonical Hermite-normal-form basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub ambient: usize,
    basis: ZMat,
}

impl LatticeBasis {
    pub fn from_generators(rows: Vec<ZVec>, ambient: usize) -> LatticeBasis {
        LatticeBasis { ambient, basis: ZMat::new(rows, ambient).row_hnf() }
    }

    /// The full lattice `Z^n`.
    pub fn standard(ambient: usize) -> LatticeBasis {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![BigInt::zero(); ambient];
                r[i] = BigInt::from(1);
                r
            })
            .collect();
        LatticeBasis::from_generators(rows, ambient)
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis_rows(&self) -> &[ZVec] {
        &self.basis.rows
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        v.len() == self.ambient && self.basis.hnf_contains(v)
    }

    /// Coefficients of `v` in the basis rows.
    pub fn coords(&self, v: &[BigInt]) -> Option<ZVec> {
        self.basis.hnf_coords(v)
    }

    /// Image under an integer linear map (`target_dim x ambient`).
    pub fn image(&self, map: &ZMat, target_dim: usize) -> LatticeBasis {
        let rows: Vec<ZVec> = self.basis.rows.iter().map(|r| map.mul_col(r)).collect();
        LatticeBasis::from_generators(rows, target_dim)
    }

    /// Intersection with the rational span of the given vectors.
    pub fn intersect_span(&self, span: &[ZVec]) -> LatticeBasis {
        let normals = ZMat::new(span.to_vec(), self.ambient).integer_kernel();
        // lattice vectors x = c . basis with x . n = 0 for every normal n
        let bn = ZMat::new(
            self.basis
                .rows
                .iter()
                .map(|b| normals.rows.iter().map(|n| zvec_dot(b, n)).collect())
                .collect(),
            normals.nrows(),
        );
        let coeffs = bn.transpose().integer_kernel();
        let rows = coeffs.rows.iter().map(|c| self.basis.row_mul(c)).collect();
        LatticeBasis::from_generators(rows, self.ambient)
    }
}

/// Membership modes.
#[derive(Clone, Debug)]
pub enum MembershipMode<'a> {
    Cone,
    RelativeInterior,
    Lattice(&'a LatticeBasis),
}

pub fn membership(
    v: &[BigInt],
    cone: &Cone,
    mode: MembershipMode,
) -> Result<bool, PolyhedralError> {
    match mode {
        MembershipMode::Cone => cone.contains(v),
        MembershipMode::RelativeInterior => cone.relint_contains(v),
        MembershipMode::Lattice(l) => {
            if v.len() != l.ambient {
                return Err(PolyhedralError::DimensionMismatch {
                    got: v.len(),
                    expected: l.ambient,
                });
            }
            Ok(l.contains(v))
        }
    }
}

/// Decision procedure for membership in the semigroup generated by `gens`:
/// subtract generators while staying in the cone. Complete because a
/// positive grading strictly decreases at every step.
pub struct SemigroupMembership<'a> {
    gens: &'a [ZVec],
    cone: &'a Cone,
    memo: HashMap<ZVec, bool>,
}

impl<'a> SemigroupMembership<'a> {
    pub fn new(gens: &'a [ZVec], cone: &'a Cone) -> SemigroupMembership<'a> {
        SemigroupMembership { gens, cone, memo: HashMap::new() }
    }

    pub fn contains(&mut self, v: &[BigInt]) -> bool {
        if zvec_is_zero(v) {
            return true;
        }
        if let Some(&r) = self.memo.get(v) {
            return r;
        }
        self.memo.insert(v.to_vec(), false);
        let mut ok = false;
        for g in self.gens {
            let w = zvec_sub(v, g);
            if self.cone.contains(&w).unwrap_or(false) && self.contains(&w) {
                ok = true;
                break;
            }
        }
        self.memo.insert(v.to_vec(), ok);
        ok
    }
}

/// Outcome of a normality check; `witness` is a lattice point of the cone
/// that is not a nonnegative integer combination of the generators.
#[derive(Clone, Debug)]
pub struct NormalityResult {
    pub normal: bool,
    pub witness: Option<ZVec>,
}

pub struct EnumerationLimits {
    pub max_ambient: usize,
    pub max_points: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_ambient: 6, max_points: 200_000 }
    }
}

/// Complete normality test: the semigroup generated by `gens` equals
/// `cone ∩ lattice` iff every lattice point of the cone inside the zonotope
/// `{sum l_i g_i : 0 <= l_i <= 1}` is a nonnegative integer combination of
/// the generators — any element of `cone ∩ lattice` splits as such a
/// zonotope point plus a semigroup element. Enumeration runs over the
/// zonotope's bounding box, guarded by the limits.
///
/// The lattice may be any lattice containing the generators; the ambient
/// `Z^n` and the lattice generated by the `gens` themselves pose genuinely
/// different questions.
pub fn normality_check(
    gens: &[ZVec],
    lattice: &LatticeBasis,
    limits: &EnumerationLimits,
) -> Result<NormalityResult, PolyhedralError> {
    let ambient = lattice.ambient;
    if ambient > limits.max_ambient {
        return Err(PolyhedralError::AmbientTooLarge(ambient, limits.max_ambient));
    }
    for g in gens {
        if !lattice.contains(g) {
            return Err(PolyhedralError::GeneratorsOutsideLattice);
        }
    }
    let cone = Cone::from_generators(gens.to_vec(), ambient)?;
    if ambient == 0 {
        return Ok(NormalityResult { normal: true, witness: None });
    }
    let mut lo = vec![BigInt::zero(); ambient];
    let mut hi = vec![BigInt::zero(); ambient];
    for g in gens {
        for j in 0..ambient {
            if g[j].is_negative() {
                lo[j] += &g[j];
            } else {
                hi[j] += &g[j];
            }
        }
    }
    let mut count = BigInt::from(1);
    for j in 0..ambient {
        count *= &hi[j] - &lo[j] + 1;
    }
    if count > BigInt::from(limits.max_points) {
        return Err(PolyhedralError::EnumerationCap(limits.max_points));
    }
    let mut membership = SemigroupMembership::new(gens, &cone);
    let mut cursor = lo.clone();
    loop {
        if lattice.contains(&cursor) && cone.contains(&cursor)? && !membership.contains(&cursor) {
            return Ok(NormalityResult { normal: false, witness: Some(cursor) });
        }
        let mut j = 0;
        loop {
            if j == ambient {
                return Ok(NormalityResult { normal: true, witness: None });
            }
            cursor[j] += 1;
            if cursor[j] <= hi[j] {
                break;
            }
            cursor[j] = lo[j].clone();
            j += 1;
        }
    }
}

/// Membership in the localization of a normal affine semigroup at a face:
/// `v` lies in `M - M_F` iff `v` is in the lattice and satisfies the
/// inequalities of facets containing `F` (adding the span of the face
/// relaxes exactly the other facets).
pub fn localized_membership(
    v: &[BigInt],
    cone: &Cone,
    face: &Face,
    lattice: &LatticeBasis,
) -> Result<bool, PolyhedralError> {
    if v.len() != cone.ambient {
        return Err(PolyhedralError::DimensionMismatch { got: v.len(), expected: cone.ambient });
    }
    if !lattice.contains(v) {
        return Ok(false);
    }
    Ok(face.active_facets.iter().all(|&f| !zvec_dot(&cone.facets[f], v).is_negative()))
}

/// Deterministic interior point: the sum of all generators (interior
/// because the generators span the full-dimensional cone).
pub fn interior_point(cone: &Cone) -> ZVec {
    let mut s = vec![BigInt::zero(); cone.ambient];
    for g in &cone.generators {
        s = crate::zlinalg::zvec_add(&s, g);
    }
    s
}

/// Unique rational solution of `m x = rhs` for a map with independent
/// columns (gluing maps are validated injective).
pub fn solve_injective(m: &ZMat, rhs: &[BigInt]) -> Option<Vec<BigRational>> {
    m.solve_unique_rational(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::zvec_from_i64;

    fn zrows(rows: Vec<Vec<i64>>) -> Vec<ZVec> {
        rows.iter().map(|r| zvec_from_i64(r)).collect()
    }

    pub(crate) fn square_cone() -> Cone {
        Cone::from_generators(
            zrows(vec![vec![0, 0, 1], vec![1, 0, 1], vec![1, 1, 1], vec![0, 1, 1]]),
            3,
        )
        .unwrap()
    }

    #[test]
    fn orthant_facets() {
        let c = Cone::from_generators(zrows(vec![vec![1, 0], vec![0, 1]]), 2).unwrap();
        assert_eq!(c.facets, zrows(vec![vec![0, 1], vec![1, 0]]));
        assert_eq!(c.faces().len(), 4); // {0}, two rays, the cone
    }

    #[test]
    fn square_cone_has_four_facets_and_ten_faces() {
        let c = square_cone();
        assert_eq!(c.facets.len(), 4);
        assert_eq!(c.faces().len(), 10); // 1 + 4 + 4 + 1
        let top = c.faces().into_iter().find(|f| f.dim == 3).unwrap();
        assert!(top.active_facets.is_empty());
    }

    #[test]
    fn face_lattice_chains_have_full_length() {
        // every maximal chain of faces steps through all dimensions
        let c = square_cone();
        let faces = c.faces();
        for f in &faces {
            if f.dim == 0 {
                continue;
            }
            let below: Vec<&Face> = faces
                .iter()
                .filter(|g| g.dim + 1 == f.dim && g.generators.is_subset(&f.generators))
                .collect();
            assert!(!below.is_empty(), "face of dim {} covers none", f.dim);
        }
    }

    #[test]
    fn line_is_rejected_as_not_pointed() {
        let err = Cone::from_generators(zrows(vec![vec![1, 0], vec![-1, 0]]), 2).unwrap_err();
        assert!(matches!(err, PolyhedralError::NotPointed));
    }

    #[test]
    fn lower_dimensional_cone_is_rejected() {
        let err = Cone::from_generators(zrows(vec![vec![1, 0]]), 2).unwrap_err();
        assert!(matches!(err, PolyhedralError::NotFullDimensional { rank: 1, ambient: 2 }));
    }

    #[test]
    fn membership_modes() {
        let c = Cone::from_generators(zrows(vec![vec![1, 0], vec![0, 1]]), 2).unwrap();
        assert!(c.relint_contains(&zvec_from_i64(&[1, 1])).unwrap());
        let sq = square_cone();
        let v = zvec_from_i64(&[1, 0, 1]);
        assert!(sq.contains(&v).unwrap());
        assert!(!sq.relint_contains(&v).unwrap());
        let l = LatticeBasis::from_generators(
            zrows(vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            3,
        );
        assert!(!l.contains(&zvec_from_i64(&[1, 1, 1])));
        assert!(l.contains(&zvec_from_i64(&[2, 1, 1])));
    }

    #[test]
    fn membership_respects_scaling() {
        let sq = square_cone();
        for v in [vec![1, 0, 1], vec![1, 1, 2], vec![-1, 0, 1], vec![2, 1, 2]] {
            let v1 = zvec_from_i64(&v);
            let v2: ZVec = v1.iter().map(|x| x * 2).collect();
            assert_eq!(sq.contains(&v1).unwrap(), sq.contains(&v2).unwrap());
            assert_eq!(sq.relint_contains(&v1).unwrap(), sq.relint_contains(&v2).unwrap());
        }
    }

    #[test]
    fn double_description_round_trip() {
        for c in [
            square_cone(),
            Cone::from_generators(zrows(vec![vec![1, 0], vec![1, 2]]), 2).unwrap(),
        ] {
            let rays = extreme_rays(&c.facets, &[], c.ambient);
            assert_eq!(rays, c.rays());
        }
    }

    #[test]
    fn normality_examples() {
        let limits = EnumerationLimits::default();
        let l2 = LatticeBasis::standard(2);
        // the free semigroup N^2 is normal
        let r = normality_check(&zrows(vec![vec![1, 0], vec![0, 1]]), &l2, &limits).unwrap();
        assert!(r.normal);
        // (1,0), (1,2) against the ambient Z^2: (1,1) is a gap
        let r = normality_check(&zrows(vec![vec![1, 0], vec![1, 2]]), &l2, &limits).unwrap();
        assert!(!r.normal);
        assert_eq!(r.witness, Some(zvec_from_i64(&[1, 1])));
        // ... but against the lattice generated by the two vectors it is normal
        let own = LatticeBasis::from_generators(zrows(vec![vec![1, 0], vec![1, 2]]), 2);
        let r = normality_check(&zrows(vec![vec![1, 0], vec![1, 2]]), &own, &limits).unwrap();
        assert!(r.normal);
        // the cone over the unit square is a normal semigroup
        let sq = square_cone();
        let r = normality_check(&sq.generators, &LatticeBasis::standard(3), &limits).unwrap();
        assert!(r.normal);
    }

    #[test]
    fn normality_invariant_under_permutation_and_unimodular_change() {
        let limits = EnumerationLimits::default();
        let gens = zrows(vec![vec![1, 0], vec![1, 2]]);
        let l2 = LatticeBasis::standard(2);
        let base = normality_check(&gens, &l2, &limits).unwrap().normal;
        let permuted = zrows(vec![vec![1, 2], vec![1, 0]]);
        assert_eq!(normality_check(&permuted, &l2, &limits).unwrap().normal, base);
        let u = ZMat::from_i64(vec![vec![1, 0], vec![1, 1]], 2);
        let moved: Vec<ZVec> = gens.iter().map(|g| u.mul_col(g)).collect();
        assert_eq!(normality_check(&moved, &l2, &limits).unwrap().normal, base);
    }

    #[test]
    fn localized_membership_examples() {
        // orthant localized at the x-axis: only y >= 0 survives
        let c = Cone::from_generators(zrows(vec![vec![1, 0], vec![0, 1]]), 2).unwrap();
        let l = LatticeBasis::standard(2);
        let face = c.face_spanned_by(&zrows(vec![vec![1, 0]])).unwrap();
        assert!(localized_membership(&zvec_from_i64(&[-1, 1]), &c, &face, &l).unwrap());
        assert!(!localized_membership(&zvec_from_i64(&[-1, -1]), &c, &face, &l).unwrap());
        // square cone localized at a ray: the facets through the ray
        // survive; from the ray (0,0,1) the point (1,0,-1) is reachable,
        // from the opposite ray (1,1,1) it is not
        let sq = square_cone();
        let v = zvec_from_i64(&[1, 0, -1]);
        let l3 = LatticeBasis::standard(3);
        let at_001 = sq.face_spanned_by(&zrows(vec![vec![0, 0, 1]])).unwrap();
        assert!(localized_membership(&v, &sq, &at_001, &l3).unwrap());
        let at_111 = sq.face_spanned_by(&zrows(vec![vec![1, 1, 1]])).unwrap();
        assert!(!localized_membership(&v, &sq, &at_111, &l3).unwrap());
    }

    #[test]
    fn face_spanned_by_rejects_non_faces() {
        let sq = square_cone();
        // an interior vector or a vector interior to a facet spans no face
        assert!(matches!(
            sq.face_spanned_by(&zrows(vec![vec![1, 1, 2]])),
            Err(PolyhedralError::NotAFace)
        ));
        assert!(matches!(
            sq.face_spanned_by(&zrows(vec![vec![0, 1, 2]])),
            Err(PolyhedralError::NotAFace)
        ));
    }

    #[test]
    fn lattice_intersect_span() {
        let l = LatticeBasis::standard(3);
        let s = l.intersect_span(&zrows(vec![vec![0, 0, 1], vec![1, 0, 1]]));
        assert!(s.contains(&zvec_from_i64(&[1, 0, 0])));
        assert!(!s.contains(&zvec_from_i64(&[0, 1, 0])));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn zero_cone() {
        let c = Cone::from_generators(vec![], 0).unwrap();
        assert_eq!(c.faces().len(), 1);
        assert!(c.contains(&[]).unwrap());
    }

    #[test]
    fn semigroup_membership_dp() {
        let sq = square_cone();
        let mut m = SemigroupMembership::new(&sq.generators, &sq);
        assert!(m.contains(&zvec_from_i64(&[1, 1, 2]))); // (0,0,1) + (1,1,1)
        assert!(m.contains(&zvec_from_i64(&[2, 1, 2])));
        assert!(!m.contains(&zvec_from_i64(&[0, 0, 0]).iter().map(|x| x - 1).collect::<ZVec>()));
    }
}
