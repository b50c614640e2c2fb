//! Monoidal complexes: affine semigroups glued along the face poset of a
//! regular cell complex, and the resulting partial arithmetic of degrees.
//!
//! Each nonempty cell of dimension `i` carries a pointed full-dimensional
//! cone in `Z^{i+1}` together with a finitely generated semigroup spanning
//! it; covering pairs carry injective integer gluing maps identifying the
//! lower cone with a face of the upper one. The colimit of the semigroups
//! indexes the monomials of the toric face ring: two degrees add when some
//! cell contains both supports, and the sum is taken in the unique minimal
//! such cell.
//!
//! Degrees are kept in canonical form — the coordinates lie in the relative
//! interior of the cone of their support cell — and are compared only in
//! that form.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use thiserror::Error;

use crate::cell_topology::{
    synthesize_incidence, CellComplex, CellId, Diagnostic, IncidenceFunction, RawComplex,
    EMPTY_CELL,
};
use crate::polyhedral::{
    extreme_rays, normality_check, Cone, EnumerationLimits, Face, LatticeBasis, PolyhedralError,
    SemigroupMembership,
};
use crate::zlinalg::{primitive, zvec_add, zvec_dot, zvec_is_zero, zvec_sub, ZMat, ZVec};

/// Cone, semigroup and lattice data of a single cell, with its face lattice
/// and the face <-> subcell correspondence.
#[derive(Clone, Debug)]
pub struct CellArith {
    pub cone: Cone,
    pub generators: Vec<ZVec>,
    pub gen_labels: Vec<Option<String>>,
    pub lattice: LatticeBasis,
    faces: Vec<Face>,
    /// For each cell below this one, the index of its face in `faces`.
    cell_to_face: HashMap<CellId, usize>,
    /// Inverse of `cell_to_face`, keyed by the face's generator set.
    gens_to_cell: HashMap<BTreeSet<usize>, CellId>,
}

impl CellArith {
    pub fn ambient(&self) -> usize {
        self.cone.ambient
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The face of this cell's cone carrying the image of a lower cell.
    pub fn face_of_cell(&self, lower: CellId) -> &Face {
        &self.faces[self.cell_to_face[&lower]]
    }
}

/// An element of the degree monoid in canonical form: `coords` lies in the
/// relative interior of the support cell's cone. The zero degree is the
/// empty vector at the bottom cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree {
    pub cell: CellId,
    pub coords: ZVec,
}

impl Degree {
    pub fn zero() -> Degree {
        Degree { cell: EMPTY_CELL, coords: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.cell == EMPTY_CELL
    }
}

#[derive(Debug, Error)]
pub enum DegreeError {
    #[error("vector lies outside the cone of cell `{0}`")]
    OutsideCone(String),
    #[error("vector is not a lattice point of cell `{0}`")]
    OutsideLattice(String),
    #[error("vector has wrong dimension for cell `{0}`")]
    WrongDimension(String),
    #[error("degree enumeration exceeded the cap of {0}")]
    CapExceeded(usize),
}

/// Validation failures, one per violated condition.
#[derive(Debug, Error)]
pub enum MonoidalDiagnostic {
    #[error("cell complex invalid: {0:?}")]
    Complex(Vec<Diagnostic>),
    #[error("incidence synthesis failed: {0}")]
    Incidence(String),
    #[error("no cone/semigroup data for cell `{0}`")]
    MissingCellData(String),
    #[error("no gluing matrix for covering `{upper}` > `{lower}`")]
    MissingGluing { upper: String, lower: String },
    #[error("cell `{cell}`: {err}")]
    BadCone { cell: String, err: PolyhedralError },
    #[error("cell `{cell}`: semigroup generators do not span the cone")]
    SemigroupSpanMismatch { cell: String },
    #[error("cell `{cell}`: semigroup is not normal (witness {witness:?})")]
    NotNormal { cell: String, witness: Option<ZVec> },
    #[error("gluing `{upper}` > `{lower}`: matrix has wrong shape")]
    GluingShape { upper: String, lower: String },
    #[error("gluing `{upper}` > `{lower}`: map is not injective")]
    GluingNotInjective { upper: String, lower: String },
    #[error("gluing `{upper}` > `{lower}`: image is not a face of the upper cone")]
    GluingNotFace { upper: String, lower: String },
    #[error("gluing `{upper}` > `{lower}`: semigroup restriction fails ({detail})")]
    SemigroupRestriction { upper: String, lower: String, detail: String },
    #[error("composite gluings from `{lower}` to `{upper}` disagree between chains")]
    IncompatibleComposites { upper: String, lower: String },
    #[error("cell `{cell}`: face lattice does not biject with the cells below ({faces} faces, {below} cells)")]
    FaceCellMismatch { cell: String, faces: usize, below: usize },
    #[error("cells `{a}`, `{b}`: minimal common upper cells not unique: {minimals:?}")]
    MinimalUpperNotUnique { a: String, b: String, minimals: Vec<String> },
    #[error("cell `{cell}`: enumeration limit hit during validation: {err}")]
    Enumeration { cell: String, err: PolyhedralError },
}

/// Per-cell raw data.
#[derive(Clone, Debug, Default)]
pub struct RawCellData {
    pub semigroup_generators: Vec<ZVec>,
    /// Defaults to the semigroup generators.
    pub cone_generators: Option<Vec<ZVec>>,
    /// Optional labels, aligned with `semigroup_generators`.
    pub labels: Vec<Option<String>>,
}

#[derive(Clone, Debug)]
pub struct RawGluing {
    pub upper: String,
    pub lower: String,
    /// `dim(upper cone) x dim(lower cone)` integer matrix.
    pub matrix: Vec<ZVec>,
}

/// Raw monoidal data prior to validation.
#[derive(Clone, Debug, Default)]
pub struct RawMonoidal {
    pub complex: RawComplex,
    pub cells: BTreeMap<String, RawCellData>,
    pub gluings: Vec<RawGluing>,
}

/// A validated monoidal complex. Immutable; all operations are pure.
#[derive(Clone, Debug)]
pub struct MonoidalComplex {
    complex: CellComplex,
    eps: IncidenceFunction,
    cells: Vec<CellArith>,
    /// Composite gluing maps for every pair `lower < upper`.
    glue: HashMap<(CellId, CellId), ZMat>,
    /// Canonical interior degree per cell (used by the duality functor).
    interior: Vec<Degree>,
}

impl MonoidalComplex {
    pub fn validate(
        raw: &RawMonoidal,
        limits: &EnumerationLimits,
    ) -> Result<MonoidalComplex, Vec<MonoidalDiagnostic>> {
        let complex = CellComplex::validate(&raw.complex)
            .map_err(|e| vec![MonoidalDiagnostic::Complex(e)])?;
        let eps = synthesize_incidence(&complex)
            .map_err(|e| vec![MonoidalDiagnostic::Incidence(e.to_string())])?;

        let mut diags = Vec::new();
        let mut cells: Vec<Option<CellArith>> = vec![None; complex.len()];

        // per-cell cones, semigroups, lattices, normality
        for c in complex.ids() {
            let label = complex.label(c).to_string();
            if c == EMPTY_CELL {
                cells[c] = Some(CellArith {
                    cone: Cone::from_generators(Vec::new(), 0).expect("zero cone"),
                    generators: Vec::new(),
                    gen_labels: Vec::new(),
                    lattice: LatticeBasis::standard(0),
                    faces: vec![Face {
                        generators: BTreeSet::new(),
                        active_facets: BTreeSet::new(),
                        dim: 0,
                    }],
                    cell_to_face: HashMap::new(),
                    gens_to_cell: HashMap::new(),
                });
                continue;
            }
            let Some(data) = raw.cells.get(&label) else {
                diags.push(MonoidalDiagnostic::MissingCellData(label));
                continue;
            };
            let ambient = (complex.dim_of(c) + 1) as usize;
            let cone_gens =
                data.cone_generators.clone().unwrap_or_else(|| data.semigroup_generators.clone());
            let cone = match Cone::from_generators(cone_gens, ambient) {
                Ok(cone) => cone,
                Err(err) => {
                    diags.push(MonoidalDiagnostic::BadCone { cell: label, err });
                    continue;
                }
            };
            // R_{>=0} (semigroup generators) must be the whole cone
            match Cone::from_generators(data.semigroup_generators.clone(), ambient) {
                Ok(spanned) if spanned.facets == cone.facets => {}
                _ => {
                    diags.push(MonoidalDiagnostic::SemigroupSpanMismatch { cell: label });
                    continue;
                }
            }
            let lattice =
                LatticeBasis::from_generators(data.semigroup_generators.clone(), ambient);
            match normality_check(&data.semigroup_generators, &lattice, limits) {
                Ok(r) if r.normal => {}
                Ok(r) => {
                    diags.push(MonoidalDiagnostic::NotNormal { cell: label, witness: r.witness });
                    continue;
                }
                Err(err) => {
                    diags.push(MonoidalDiagnostic::Enumeration { cell: label, err });
                    continue;
                }
            }
            let mut labels = data.labels.clone();
            labels.resize(data.semigroup_generators.len(), None);
            cells[c] = Some(CellArith {
                faces: cone.faces(),
                cone,
                generators: data.semigroup_generators.clone(),
                gen_labels: labels,
                lattice,
                cell_to_face: HashMap::new(),
                gens_to_cell: HashMap::new(),
            });
        }
        if !diags.is_empty() {
            return Err(diags);
        }
        let mut cells: Vec<CellArith> = cells.into_iter().map(Option::unwrap).collect();

        // covering gluings: shape and injectivity
        let mut cover_glue: HashMap<(CellId, CellId), ZMat> = HashMap::new();
        for g in &raw.gluings {
            let (Some(u), Some(l)) = (complex.by_label(&g.upper), complex.by_label(&g.lower))
            else {
                continue; // unknown labels already reported by the complex validator
            };
            let (du, dl) = (cells[u].ambient(), cells[l].ambient());
            if g.matrix.len() != du || g.matrix.iter().any(|r| r.len() != dl) {
                diags.push(MonoidalDiagnostic::GluingShape {
                    upper: g.upper.clone(),
                    lower: g.lower.clone(),
                });
                continue;
            }
            let m = ZMat::new(g.matrix.clone(), dl);
            if m.transpose().rank() != dl {
                diags.push(MonoidalDiagnostic::GluingNotInjective {
                    upper: g.upper.clone(),
                    lower: g.lower.clone(),
                });
                continue;
            }
            cover_glue.insert((u, l), m);
        }
        for &(u, l) in complex.covering_pairs() {
            if l == EMPTY_CELL {
                cover_glue.insert((u, l), ZMat::new(vec![Vec::new(); cells[u].ambient()], 0));
            } else if !cover_glue.contains_key(&(u, l)) {
                diags.push(MonoidalDiagnostic::MissingGluing {
                    upper: complex.label(u).to_string(),
                    lower: complex.label(l).to_string(),
                });
            }
        }
        if !diags.is_empty() {
            return Err(diags);
        }

        // composites along every chain must agree
        let mut glue: HashMap<(CellId, CellId), ZMat> = cover_glue.clone();
        for upper in complex.ids() {
            for lower in complex.ids() {
                if lower == upper || !complex.leq(lower, upper) {
                    continue;
                }
                let mut composite: Option<ZMat> = None;
                let mut bad = false;
                for chain in complex.chains_between(upper, lower) {
                    let mut m: Option<ZMat> = None;
                    for w in chain.windows(2) {
                        let step = &cover_glue[&(w[1], w[0])];
                        m = Some(match m {
                            None => step.clone(),
                            Some(prev) => step.mul(&prev),
                        });
                    }
                    let m = m.expect("chain has at least one step");
                    match &composite {
                        None => composite = Some(m),
                        Some(c) if *c == m => {}
                        Some(_) => bad = true,
                    }
                }
                if bad {
                    diags.push(MonoidalDiagnostic::IncompatibleComposites {
                        upper: complex.label(upper).to_string(),
                        lower: complex.label(lower).to_string(),
                    });
                }
                if let Some(m) = composite {
                    glue.insert((upper, lower), m);
                }
            }
        }
        if !diags.is_empty() {
            return Err(diags);
        }

        // the image of each lower cone is a face, faces biject with the
        // cells below, and semigroups restrict exactly
        for upper in complex.ids() {
            if upper == EMPTY_CELL {
                continue;
            }
            let below: Vec<CellId> = complex.ids().filter(|&t| complex.leq(t, upper)).collect();
            let mut assignment: HashMap<BTreeSet<usize>, CellId> = HashMap::new();
            for &lower in &below {
                let image: Vec<ZVec> = if lower == upper {
                    cells[upper].cone.generators.clone()
                } else {
                    let m = &glue[&(upper, lower)];
                    cells[lower].cone.generators.iter().map(|g| m.mul_col(g)).collect()
                };
                let face = match cells[upper].cone.face_spanned_by(&image) {
                    Ok(f) => f,
                    Err(_) => {
                        diags.push(MonoidalDiagnostic::GluingNotFace {
                            upper: complex.label(upper).to_string(),
                            lower: complex.label(lower).to_string(),
                        });
                        continue;
                    }
                };
                if lower != upper && lower != EMPTY_CELL {
                    if let Some(detail) = restriction_failure(
                        &cells[upper],
                        &cells[lower],
                        &glue[&(upper, lower)],
                        &image,
                    ) {
                        diags.push(MonoidalDiagnostic::SemigroupRestriction {
                            upper: complex.label(upper).to_string(),
                            lower: complex.label(lower).to_string(),
                            detail,
                        });
                        continue;
                    }
                }
                let face_idx = cells[upper]
                    .faces
                    .iter()
                    .position(|f| f.generators == face.generators)
                    .expect("face lattice contains every face");
                assignment.insert(face.generators.clone(), lower);
                cells[upper].cell_to_face.insert(lower, face_idx);
            }
            let nfaces = cells[upper].faces.len();
            if assignment.len() != below.len() || assignment.len() != nfaces {
                diags.push(MonoidalDiagnostic::FaceCellMismatch {
                    cell: complex.label(upper).to_string(),
                    faces: nfaces,
                    below: below.len(),
                });
            }
            cells[upper].gens_to_cell = assignment;
        }
        if !diags.is_empty() {
            return Err(diags);
        }

        // unique minimal common upper cell, checked exhaustively
        for a in complex.ids() {
            for b in complex.ids() {
                if b < a {
                    continue;
                }
                let uppers = complex.common_upper(a, b);
                if uppers.is_empty() {
                    continue;
                }
                let minimals: Vec<CellId> = uppers
                    .iter()
                    .copied()
                    .filter(|&u| !uppers.iter().any(|&v| v != u && complex.leq(v, u)))
                    .collect();
                if minimals.len() != 1 {
                    diags.push(MonoidalDiagnostic::MinimalUpperNotUnique {
                        a: complex.label(a).to_string(),
                        b: complex.label(b).to_string(),
                        minimals: minimals
                            .iter()
                            .map(|&m| complex.label(m).to_string())
                            .collect(),
                    });
                }
            }
        }
        if !diags.is_empty() {
            return Err(diags);
        }

        let mut mc = MonoidalComplex { complex, eps, cells, glue, interior: Vec::new() };
        mc.interior = mc
            .complex
            .ids()
            .map(|c| {
                if c == EMPTY_CELL {
                    return Degree::zero();
                }
                let arith = &mc.cells[c];
                let interior_gens: Vec<&ZVec> = arith
                    .generators
                    .iter()
                    .filter(|g| arith.cone.relint_contains(g).unwrap_or(false))
                    .collect();
                let zero = vec![BigInt::zero(); arith.ambient()];
                let sum = if interior_gens.is_empty() {
                    arith.generators.iter().fold(zero, |acc, g| zvec_add(&acc, g))
                } else {
                    interior_gens.iter().fold(zero, |acc, g| zvec_add(&acc, g))
                };
                debug_assert!(arith.cone.relint_contains(&sum).unwrap_or(false));
                Degree { cell: c, coords: sum }
            })
            .collect();
        Ok(mc)
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn incidence(&self) -> &IncidenceFunction {
        &self.eps
    }

    pub fn cell_arith(&self, c: CellId) -> &CellArith {
        &self.cells[c]
    }

    /// Composite gluing map for `lower < upper`.
    pub fn gluing(&self, upper: CellId, lower: CellId) -> &ZMat {
        &self.glue[&(upper, lower)]
    }

    /// The fixed interior degree of a cell: the sum of the semigroup
    /// generators interior to the cone, or of all generators when none is
    /// interior. The duality functor does not depend on this choice.
    pub fn interior_degree(&self, c: CellId) -> &Degree {
        &self.interior[c]
    }

    /// Canonical form of a semigroup element presented in a cell's
    /// coordinates: descend to the unique face containing it in its
    /// relative interior and pull back along the gluing.
    pub fn support(&self, cell: CellId, coords: &[BigInt]) -> Result<Degree, DegreeError> {
        let arith = &self.cells[cell];
        let label = || self.complex.label(cell).to_string();
        if coords.len() != arith.ambient() {
            return Err(DegreeError::WrongDimension(label()));
        }
        if cell == EMPTY_CELL {
            return Ok(Degree::zero());
        }
        if !arith.cone.contains(coords).map_err(|_| DegreeError::WrongDimension(label()))? {
            return Err(DegreeError::OutsideCone(label()));
        }
        if !arith.lattice.contains(coords) {
            return Err(DegreeError::OutsideLattice(label()));
        }
        let face = arith
            .cone
            .relint_face(coords)
            .expect("dimension already checked")
            .expect("containment already checked");
        if face.dim == 0 {
            return Ok(Degree::zero());
        }
        let target = arith.gens_to_cell[&face.generators];
        if target == cell {
            return Ok(Degree { cell, coords: coords.to_vec() });
        }
        let m = &self.glue[&(cell, target)];
        let pulled =
            m.solve_unique_integer(coords).expect("vector on a glued face pulls back integrally");
        Ok(Degree { cell: target, coords: pulled })
    }

    /// Push a canonical degree into the coordinates of a cell above its
    /// support.
    pub fn push_to(&self, deg: &Degree, cell: CellId) -> Option<ZVec> {
        if deg.cell == cell {
            return Some(deg.coords.clone());
        }
        if !self.complex.leq(deg.cell, cell) {
            return None;
        }
        if deg.cell == EMPTY_CELL {
            return Some(vec![BigInt::zero(); self.cells[cell].ambient()]);
        }
        Some(self.glue[&(cell, deg.cell)].mul_col(&deg.coords))
    }

    /// The unique minimal cell above both arguments, when a common upper
    /// cell exists.
    pub fn minimal_common_cell(&self, a: CellId, b: CellId) -> Option<CellId> {
        let uppers = self.complex.common_upper(a, b);
        let minimals: Vec<CellId> = uppers
            .iter()
            .copied()
            .filter(|&u| !uppers.iter().any(|&v| v != u && self.complex.leq(v, u)))
            .collect();
        match minimals.as_slice() {
            [] => None,
            [m] => Some(*m),
            _ => unreachable!("validation guarantees a unique minimal common cell"),
        }
    }

    /// Partial addition: defined when some cell contains both supports; the
    /// sum is computed in the minimal such cell and re-canonicalized.
    /// `None` means the corresponding monomial product is zero.
    pub fn add(&self, a: &Degree, b: &Degree) -> Option<Degree> {
        if a.is_zero() {
            return Some(b.clone());
        }
        if b.is_zero() {
            return Some(a.clone());
        }
        let cell = self.minimal_common_cell(a.cell, b.cell)?;
        let sum = zvec_add(
            &self.push_to(a, cell).expect("support below the common cell"),
            &self.push_to(b, cell).expect("support below the common cell"),
        );
        Some(self.support(cell, &sum).expect("sum of semigroup elements stays inside"))
    }

    /// Partial subtraction within the degree monoid: `a - b` when the
    /// difference is again a degree.
    pub fn sub(&self, a: &Degree, b: &Degree) -> Option<Degree> {
        if b.is_zero() {
            return Some(a.clone());
        }
        if !self.complex.leq(b.cell, a.cell) {
            return None;
        }
        let pushed = self.push_to(b, a.cell).expect("b.cell <= a.cell");
        let diff = zvec_sub(&a.coords, &pushed);
        self.support(a.cell, &diff).ok()
    }

    /// `b` divides `a` in the degree monoid.
    pub fn divides(&self, b: &Degree, a: &Degree) -> bool {
        self.sub(a, b).is_some()
    }

    /// Whether the degree lies in the cell's semigroup (its support is
    /// below the cell).
    pub fn degree_in_cell(&self, a: &Degree, cell: CellId) -> bool {
        self.complex.leq(a.cell, cell)
    }

    /// Deduplicated canonical degrees of all per-cell semigroup generators,
    /// with labels where provided — the default variables of a
    /// presentation. Sorted by (cell, coordinates).
    pub fn generator_degrees(&self) -> Vec<(Degree, Option<String>)> {
        let mut map: BTreeMap<Degree, Option<String>> = BTreeMap::new();
        for c in self.complex.ids() {
            let arith = &self.cells[c];
            for (g, lab) in arith.generators.iter().zip(&arith.gen_labels) {
                let deg = self.support(c, g).expect("generators are semigroup elements");
                let entry = map.entry(deg.clone()).or_insert(None);
                if entry.is_none() && deg.cell == c {
                    entry.clone_from(lab);
                }
            }
        }
        map.into_iter().collect()
    }

    /// All degrees expressible as sums of at most `bound` semigroup
    /// generators, in canonical form, sorted.
    pub fn enumerate_degrees(&self, bound: usize, cap: usize) -> Result<Vec<Degree>, DegreeError> {
        let gens: Vec<Degree> = self.generator_degrees().into_iter().map(|(d, _)| d).collect();
        let mut all: BTreeSet<Degree> = BTreeSet::new();
        all.insert(Degree::zero());
        let mut frontier: BTreeSet<Degree> = all.clone();
        for _ in 0..bound {
            let mut next = BTreeSet::new();
            for d in &frontier {
                for g in &gens {
                    if let Some(s) = self.add(d, g) {
                        if !all.contains(&s) {
                            next.insert(s);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            if all.len() > cap {
                return Err(DegreeError::CapExceeded(cap));
            }
            frontier = next;
        }
        Ok(all.into_iter().collect())
    }
}

/// Check that the gluing identifies the lower semigroup with the upper
/// semigroup's intersection with the face: under cone-wise normality both
/// sides are cut out by lattices, so lattice equality decides it. Returns a
/// description of the failure, or `None` when the restriction is exact.
fn restriction_failure(
    upper: &CellArith,
    lower: &CellArith,
    glue: &ZMat,
    image: &[ZVec],
) -> Option<String> {
    for g in image {
        if !upper.lattice.contains(g) {
            return Some("an image generator is not in the upper lattice".to_string());
        }
    }
    let image_lattice = lower.lattice.image(glue, upper.ambient());
    let span_lattice = upper.lattice.intersect_span(image);
    if image_lattice != span_lattice {
        return Some("image lattice differs from the face lattice".to_string());
    }
    None
}

/// Build the monoidal complex of an abstract simplicial complex: each
/// `i`-face carries the free semigroup `N^{i+1}` on its vertices, glued by
/// coordinate inclusions in vertex order. The resulting ring is the
/// Stanley-Reisner ring of the complex.
pub fn import_simplicial(facets: &[Vec<String>]) -> RawMonoidal {
    let mut faces: BTreeSet<Vec<String>> = BTreeSet::new();
    for facet in facets {
        let mut sorted = facet.clone();
        sorted.sort();
        sorted.dedup();
        let n = sorted.len();
        for mask in 1u64..(1 << n) {
            let sub: Vec<String> =
                (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| sorted[i].clone()).collect();
            faces.insert(sub);
        }
    }
    let label_of = |f: &[String]| f.join(",");
    let mut raw = RawMonoidal::default();
    for f in &faces {
        raw.complex.cells.push((label_of(f), f.len() as i64 - 1));
        let k = f.len();
        let gens: Vec<ZVec> = (0..k)
            .map(|i| {
                let mut v = vec![BigInt::zero(); k];
                v[i] = BigInt::one();
                v
            })
            .collect();
        let labels = if k == 1 { vec![Some(f[0].clone())] } else { vec![None; k] };
        raw.cells.insert(
            label_of(f),
            RawCellData { semigroup_generators: gens, cone_generators: None, labels },
        );
        if k >= 2 {
            for drop in 0..k {
                let mut g = f.clone();
                g.remove(drop);
                raw.complex.coverings.push((label_of(f), label_of(&g)));
                let mut matrix = vec![vec![BigInt::zero(); k - 1]; k];
                for (j, v) in g.iter().enumerate() {
                    let row = f.iter().position(|x| x == v).expect("subset vertex");
                    matrix[row][j] = BigInt::one();
                }
                raw.gluings.push(RawGluing { upper: label_of(f), lower: label_of(&g), matrix });
            }
        }
    }
    raw
}

#[derive(Debug, Error)]
pub enum FanError {
    #[error("cone {0}: {1}")]
    BadCone(usize, PolyhedralError),
    #[error("cones {0} and {1} do not intersect in a common face")]
    NotAFan(usize, usize),
    #[error("enumeration limit: {0}")]
    Enumeration(PolyhedralError),
}

/// A fan cone in ambient coordinates with its local structure.
struct FanCell {
    rays: Vec<ZVec>,
    /// Rows form a basis of the saturated lattice of the span.
    basis: ZMat,
    local_rays: Vec<ZVec>,
    local_cone: Cone,
}

fn make_fan_cell(rays: &[ZVec], ambient: usize) -> Result<FanCell, PolyhedralError> {
    let basis = ZMat::new(rays.to_vec(), ambient).saturation();
    let local_rays: Vec<ZVec> = rays
        .iter()
        .map(|r| basis.hnf_coords(r).expect("ray lies in the saturation of its span"))
        .collect();
    let local_cone = Cone::from_generators(local_rays.clone(), basis.nrows())?;
    Ok(FanCell { rays: rays.to_vec(), basis, local_rays, local_cone })
}

/// Build the monoidal complex of a rational pointed fan: the cells are the
/// cones (keyed by their extreme rays), each carrying the full lattice
/// points of its cone in saturated local coordinates, so every cell is
/// normal by construction.
pub fn import_fan(
    ambient: usize,
    cones: &[Vec<ZVec>],
    limits: &EnumerationLimits,
) -> Result<RawMonoidal, FanError> {
    let tops: Vec<FanCell> = cones
        .iter()
        .enumerate()
        .map(|(i, c)| make_fan_cell(c, ambient).map_err(|e| FanError::BadCone(i, e)))
        .collect::<Result<_, _>>()?;
    for i in 0..tops.len() {
        for j in (i + 1)..tops.len() {
            if !intersection_is_common_face(&tops[i], &tops[j], ambient) {
                return Err(FanError::NotAFan(i, j));
            }
        }
    }
    // every face of every cone becomes a cell, keyed by its sorted rays
    let mut all: BTreeMap<Vec<ZVec>, usize> = BTreeMap::new();
    for t in &tops {
        for face in t.local_cone.faces() {
            let mut rays: Vec<ZVec> = face
                .generators
                .iter()
                .map(|&gi| primitive(&t.rays[gi]))
                .collect();
            rays.sort();
            rays.dedup();
            all.insert(rays, face.dim);
        }
    }
    let label_of = |rays: &[ZVec]| -> String {
        if rays.is_empty() {
            "{}".to_string()
        } else {
            let parts: Vec<String> = rays
                .iter()
                .map(|r| {
                    let coords: Vec<String> = r.iter().map(BigInt::to_string).collect();
                    format!("({})", coords.join(","))
                })
                .collect();
            parts.join("+")
        }
    };
    let mut raw = RawMonoidal::default();
    let keys: Vec<Vec<ZVec>> = all.keys().cloned().collect();
    let mut cells: HashMap<Vec<ZVec>, FanCell> = HashMap::new();
    for rays in &keys {
        if rays.is_empty() {
            raw.complex.cells.push((label_of(rays), -1));
            continue;
        }
        let dim = all[rays];
        raw.complex.cells.push((label_of(rays), dim as i64 - 1));
        let cell = make_fan_cell(rays, ambient).map_err(FanError::Enumeration)?;
        let gens =
            hilbert_basis_of_normal_cone(&cell.local_cone, limits).map_err(FanError::Enumeration)?;
        raw.cells.insert(
            label_of(rays),
            RawCellData {
                semigroup_generators: gens,
                cone_generators: Some(cell.local_rays.clone()),
                labels: Vec::new(),
            },
        );
        cells.insert(rays.clone(), cell);
    }
    for upper in &keys {
        if upper.is_empty() {
            continue;
        }
        let ucell = &cells[upper];
        let ut = ucell.basis.transpose();
        for lower in &keys {
            if lower.is_empty() {
                if all[upper] == 1 {
                    raw.complex.coverings.push((label_of(upper), label_of(lower)));
                }
                continue;
            }
            if all[lower] + 1 != all[upper] || !lower.iter().all(|r| upper.contains(r)) {
                continue;
            }
            let images: Vec<ZVec> = lower
                .iter()
                .map(|r| ucell.basis.hnf_coords(r).expect("subcone ray lies in the span"))
                .collect();
            if ucell.local_cone.face_spanned_by(&images).is_err() {
                continue;
            }
            let lcell = &cells[lower];
            let cols: Vec<ZVec> = lcell
                .basis
                .rows
                .iter()
                .map(|b| ut.solve_unique_integer(b).expect("saturated sublattice embeds"))
                .collect();
            let du = ucell.basis.nrows();
            let mut matrix = vec![vec![BigInt::zero(); cols.len()]; du];
            for (j, col) in cols.iter().enumerate() {
                for (i, row) in matrix.iter_mut().enumerate() {
                    row[j] = col[i].clone();
                }
            }
            raw.complex.coverings.push((label_of(upper), label_of(lower)));
            raw.gluings.push(RawGluing { upper: label_of(upper), lower: label_of(lower), matrix });
        }
    }
    Ok(raw)
}

/// Minimal generating set of `cone ∩ Z^d` for a full-dimensional pointed
/// cone: all lattice points of the zonotope bounding box are candidates,
/// filtered down to irreducibles in increasing grading order.
fn hilbert_basis_of_normal_cone(
    cone: &Cone,
    limits: &EnumerationLimits,
) -> Result<Vec<ZVec>, PolyhedralError> {
    let ambient = cone.ambient;
    if ambient > limits.max_ambient {
        return Err(PolyhedralError::AmbientTooLarge(ambient, limits.max_ambient));
    }
    let mut lo = vec![BigInt::zero(); ambient];
    let mut hi = vec![BigInt::zero(); ambient];
    for g in &cone.generators {
        for j in 0..ambient {
            if g[j].is_negative() {
                lo[j] += &g[j];
            } else {
                hi[j] += &g[j];
            }
        }
    }
    let mut count = BigInt::one();
    for j in 0..ambient {
        count *= &hi[j] - &lo[j] + 1;
    }
    if count > BigInt::from(limits.max_points) {
        return Err(PolyhedralError::EnumerationCap(limits.max_points));
    }
    let grading = cone.positive_grading();
    let mut candidates: Vec<ZVec> = Vec::new();
    let mut cursor = lo.clone();
    'outer: loop {
        if !zvec_is_zero(&cursor) && cone.contains(&cursor)? {
            candidates.push(cursor.clone());
        }
        let mut j = 0;
        loop {
            if j == ambient {
                break 'outer;
            }
            cursor[j] += 1;
            if cursor[j] <= hi[j] {
                break;
            }
            cursor[j] = lo[j].clone();
            j += 1;
        }
    }
    candidates.sort_by_key(|v| zvec_dot(&grading, v));
    let mut gens: Vec<ZVec> = Vec::new();
    for c in candidates {
        let mut membership = SemigroupMembership::new(&gens, cone);
        if !membership.contains(&c) {
            gens.push(c);
        }
    }
    gens.sort();
    Ok(gens)
}

/// Exact test that two cones of a prospective fan meet in a common face:
/// compute the extreme rays of the intersection inside the intersection of
/// the spans, then check that the smallest face of each cone containing
/// them has exactly those rays.
fn intersection_is_common_face(a: &FanCell, b: &FanCell, ambient: usize) -> bool {
    let ka = ZMat::new(a.rays.clone(), ambient).integer_kernel();
    let kb = ZMat::new(b.rays.clone(), ambient).integer_kernel();
    let mut stacked = ka.rows.clone();
    stacked.extend(kb.rows.clone());
    let w_basis = ZMat::new(stacked, ambient).integer_kernel(); // rows span the common subspace
    if w_basis.nrows() == 0 {
        return true; // intersection is the origin
    }
    let mut ineqs: Vec<ZVec> = Vec::new();
    for cell in [a, b] {
        let bt = cell.basis.transpose();
        let locals: Vec<Vec<BigRational>> = w_basis
            .rows
            .iter()
            .map(|w| bt.solve_unique_rational(w).expect("subspace lies inside the span"))
            .collect();
        for n in &cell.local_cone.facets {
            let mut row: Vec<BigRational> = Vec::with_capacity(w_basis.nrows());
            for loc in &locals {
                let mut acc = BigRational::zero();
                for (c, x) in n.iter().zip(loc) {
                    acc += BigRational::from_integer(c.clone()) * x;
                }
                row.push(acc);
            }
            let mut denom = BigInt::one();
            for r in &row {
                denom = denom.lcm(r.denom());
            }
            let int_row: ZVec = row
                .iter()
                .map(|r| (r * BigRational::from_integer(denom.clone())).to_integer())
                .collect();
            ineqs.push(int_row);
        }
    }
    let rays_w = extreme_rays(&ineqs, &[], w_basis.nrows());
    let mut ambient_rays: Vec<ZVec> =
        rays_w.iter().map(|r| primitive(&w_basis.row_mul(r))).collect();
    ambient_rays.sort();
    for cell in [a, b] {
        let locals: Vec<ZVec> =
            match ambient_rays.iter().map(|r| cell.basis.hnf_coords(r)).collect::<Option<_>>() {
                Some(l) => l,
                None => return false,
            };
        let face = match cell.local_cone.face_spanned_by(&locals) {
            Ok(f) => f,
            Err(_) => return false,
        };
        let mut face_rays: Vec<ZVec> =
            face.generators.iter().map(|&gi| primitive(&cell.rays[gi])).collect();
        face_rays.sort();
        face_rays.dedup();
        if face_rays != ambient_rays {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::zvec_from_i64;

    fn limits() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    #[test]
    fn simplicial_edge_import_validates() {
        let raw = import_simplicial(&[vec!["1".into(), "2".into()]]);
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        assert_eq!(mc.complex().dim(), 1);
        assert_eq!(mc.complex().len(), 4); // bottom, two vertices, the edge
        let degs = mc.enumerate_degrees(2, 1000).unwrap();
        assert_eq!(degs.len(), 6); // monomials of degree <= 2 in k[x, y]
    }

    #[test]
    fn two_disjoint_vertices() {
        let raw = import_simplicial(&[vec!["1".into()], vec!["2".into()]]);
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        let v1 = mc.complex().by_label("1").unwrap();
        let v2 = mc.complex().by_label("2").unwrap();
        let d1 = mc.support(v1, &zvec_from_i64(&[1])).unwrap();
        let d2 = mc.support(v2, &zvec_from_i64(&[1])).unwrap();
        // no common cell: the monomial product is zero
        assert!(mc.add(&d1, &d2).is_none());
    }

    #[test]
    fn canonicalization_descends_to_faces() {
        let raw = import_simplicial(&[vec!["1".into(), "2".into()]]);
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        let edge = mc.complex().by_label("1,2").unwrap();
        let v1 = mc.complex().by_label("1").unwrap();
        let d = mc.support(edge, &zvec_from_i64(&[2, 0])).unwrap();
        assert_eq!(d.cell, v1);
        assert_eq!(d.coords, zvec_from_i64(&[2]));
        // canonicalization is idempotent
        assert_eq!(mc.support(d.cell, &d.coords).unwrap(), d);
        assert!(mc.support(edge, &zvec_from_i64(&[0, 0])).unwrap().is_zero());
    }

    #[test]
    fn addition_and_subtraction() {
        let raw = import_simplicial(&[vec!["1".into(), "2".into()]]);
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        let edge = mc.complex().by_label("1,2").unwrap();
        let a = mc.support(edge, &zvec_from_i64(&[1, 0])).unwrap();
        let b = mc.support(edge, &zvec_from_i64(&[0, 1])).unwrap();
        let s = mc.add(&a, &b).unwrap();
        assert_eq!(s.cell, edge);
        assert_eq!(s.coords, zvec_from_i64(&[1, 1]));
        assert_eq!(mc.add(&b, &a).unwrap(), s);
        assert_eq!(mc.add(&a, &Degree::zero()).unwrap(), a);
        assert_eq!(mc.sub(&s, &b).unwrap(), a);
        assert!(mc.sub(&a, &s).is_none());
        assert!(mc.divides(&a, &s));
        assert!(!mc.divides(&s, &a));
    }

    #[test]
    fn fan_import_orthant() {
        let cones = vec![vec![zvec_from_i64(&[1, 0]), zvec_from_i64(&[0, 1])]];
        let raw = import_fan(2, &cones, &limits()).unwrap();
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        assert_eq!(mc.complex().len(), 4);
        assert_eq!(mc.complex().dim(), 1);
        let top = mc.complex().cells_of_dim(1)[0];
        assert_eq!(mc.cell_arith(top).generators.len(), 2);
        let degs = mc.enumerate_degrees(2, 1000).unwrap();
        assert_eq!(degs.len(), 6);
    }

    #[test]
    fn overlapping_cones_are_rejected() {
        let cones = vec![
            vec![zvec_from_i64(&[1, 0]), zvec_from_i64(&[0, 1])],
            vec![zvec_from_i64(&[1, 1]), zvec_from_i64(&[-1, 1])],
        ];
        let err = import_fan(2, &cones, &limits()).unwrap_err();
        assert!(matches!(err, FanError::NotAFan(0, 1)));
    }

    #[test]
    fn adjacent_fan_cones_share_a_ray() {
        let cones = vec![
            vec![zvec_from_i64(&[1, 0]), zvec_from_i64(&[0, 1])],
            vec![zvec_from_i64(&[0, 1]), zvec_from_i64(&[-1, 0])],
        ];
        let raw = import_fan(2, &cones, &limits()).unwrap();
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        // bottom, 3 rays, 2 two-dimensional cones
        assert_eq!(mc.complex().len(), 6);
    }

    #[test]
    fn semigroup_restriction_failure_detected() {
        // a vertex glued in as twice the ray generator: its semigroup maps
        // onto a strict submonoid of the face's lattice points
        let mut raw = RawMonoidal::default();
        raw.complex.cells = vec![("a".into(), 0), ("b".into(), 0), ("e".into(), 1)];
        raw.complex.coverings = vec![("e".into(), "a".into()), ("e".into(), "b".into())];
        raw.cells.insert(
            "e".into(),
            RawCellData {
                semigroup_generators: vec![zvec_from_i64(&[0, 1]), zvec_from_i64(&[1, 1])],
                cone_generators: None,
                labels: Vec::new(),
            },
        );
        for v in ["a", "b"] {
            raw.cells.insert(
                v.into(),
                RawCellData {
                    semigroup_generators: vec![zvec_from_i64(&[1])],
                    cone_generators: None,
                    labels: Vec::new(),
                },
            );
        }
        raw.gluings.push(RawGluing {
            upper: "e".into(),
            lower: "a".into(),
            matrix: vec![zvec_from_i64(&[0]), zvec_from_i64(&[1])],
        });
        raw.gluings.push(RawGluing {
            upper: "e".into(),
            lower: "b".into(),
            matrix: vec![zvec_from_i64(&[2]), zvec_from_i64(&[2])],
        });
        let errs = MonoidalComplex::validate(&raw, &limits()).unwrap_err();
        assert!(errs
            .iter()
            .any(|d| matches!(d, MonoidalDiagnostic::SemigroupRestriction { .. })));
    }

    #[test]
    fn four_cycle_degree_count() {
        let raw = import_simplicial(&[
            vec!["a".into(), "b".into()],
            vec!["b".into(), "c".into()],
            vec!["c".into(), "d".into()],
            vec!["d".into(), "a".into()],
        ]);
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        assert_eq!(mc.complex().len(), 9);
        // 0, four vertex degrees, four squares, four edge products
        let degs = mc.enumerate_degrees(2, 1000).unwrap();
        assert_eq!(degs.len(), 13);
    }

    #[test]
    fn addition_commutative_and_associative_where_defined() {
        let raw = import_simplicial(&[
            vec!["a".into(), "b".into()],
            vec!["b".into(), "c".into()],
            vec!["c".into(), "d".into()],
            vec!["d".into(), "a".into()],
        ]);
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        let degs = mc.enumerate_degrees(1, 1000).unwrap();
        for a in &degs {
            for b in &degs {
                assert_eq!(mc.add(a, b), mc.add(b, a));
                for c in &degs {
                    let left = mc.add(a, b).and_then(|ab| mc.add(&ab, c));
                    let right = mc.add(b, c).and_then(|bc| mc.add(a, &bc));
                    if let (Some(l), Some(r)) = (&left, &right) {
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn fan_addition_matches_ambient_addition() {
        // two cones over adjacent quadrants: a sum is defined exactly when
        // the ambient sum lands in one cone, and then the coordinates agree
        let cones = vec![
            vec![zvec_from_i64(&[1, 0]), zvec_from_i64(&[0, 1])],
            vec![zvec_from_i64(&[0, 1]), zvec_from_i64(&[-1, 0])],
        ];
        let raw = import_fan(2, &cones, &limits()).unwrap();
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        let tops = mc.complex().cells_of_dim(1);
        // both top cones are full-dimensional, so their saturated lattice
        // bases are the identity and local coordinates are ambient ones
        let ambient = |d: &Degree| -> Option<ZVec> {
            tops.iter().find(|&&t| mc.degree_in_cell(d, t)).map(|&t| mc.push_to(d, t).unwrap())
        };
        let degs = mc.enumerate_degrees(2, 1000).unwrap();
        // product rule of the ring: the sum is defined iff one cone
        // contains both factors, and then it is the ambient sum (note the
        // ambient sum alone can land in a cone while the product is zero,
        // e.g. (1,0) + (-1,1))
        let quadrant1 = |v: &ZVec| !v[0].is_negative() && !v[1].is_negative();
        let quadrant2 = |v: &ZVec| !(-&v[0]).is_negative() && !v[1].is_negative();
        for a in &degs {
            for b in &degs {
                let (va, vb) = (ambient(a).unwrap(), ambient(b).unwrap());
                let common_cone =
                    (quadrant1(&va) && quadrant1(&vb)) || (quadrant2(&va) && quadrant2(&vb));
                match mc.add(a, b) {
                    Some(s) => {
                        assert!(common_cone);
                        assert_eq!(ambient(&s).unwrap(), zvec_add(&va, &vb));
                    }
                    None => assert!(!common_cone),
                }
            }
        }
    }

    #[test]
    fn generator_supports_push_back_consistently() {
        let raw = import_simplicial(&[vec!["x".into(), "y".into(), "z".into()]]);
        let mc = MonoidalComplex::validate(&raw, &limits()).unwrap();
        for c in mc.complex().ids() {
            for g in &mc.cell_arith(c).generators {
                let d = mc.support(c, g).unwrap();
                assert_eq!(&mc.push_to(&d, c).unwrap(), g);
            }
        }
    }
}
