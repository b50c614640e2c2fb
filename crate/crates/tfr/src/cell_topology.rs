//! Finite regular cell complexes as graded posets, incidence functions, and
//! the cellular cochain engine.
//!
//! A complex is stored combinatorially: cells with dimensions, the covering
//! relation (dimension drop exactly one), and a distinguished bottom cell of
//! dimension `-1` below everything. Validation checks the poset axioms that
//! a regular CW structure forces — gradedness, the diamond condition (every
//! length-two interval has exactly two middle cells), and the intersection
//! property (any two cells have a unique maximal common lower bound) — and
//! reports, for every cell, whether the order complex of the open interval
//! below it has the reduced homology of a sphere of the right dimension.
//! That last test is a necessary condition for cell closures to be balls;
//! actual homeomorphy is not decidable from the poset and is the caller's
//! responsibility.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::field::FieldSpec;
use crate::linalg::Mat;

pub type CellId = usize;

/// Index of the bottom cell; validation pins it to slot 0.
pub const EMPTY_CELL: CellId = 0;

#[derive(Clone, Debug)]
pub struct Cell {
    pub label: String,
    pub dim: i64,
}

/// Raw poset data prior to validation.
#[derive(Clone, Debug, Default)]
pub struct RawComplex {
    /// (label, dimension) pairs; the bottom cell may be omitted.
    pub cells: Vec<(String, i64)>,
    /// Covering pairs (upper, lower) by label.
    pub coverings: Vec<(String, String)>,
}

/// Axiom violations, each reported individually.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Error)]
pub enum Diagnostic {
    #[error("duplicate cell id `{0}`")]
    DuplicateCellId(String),
    #[error("unknown cell `{0}` in a covering pair")]
    UnknownCell(String),
    #[error("cell `{0}` has dimension {1}, below -1")]
    BadDimension(String, i64),
    #[error("no bottom cell of dimension -1")]
    MissingBottom,
    #[error("more than one cell of dimension -1: {0:?}")]
    MultipleBottoms(Vec<String>),
    #[error("covering `{upper}` > `{lower}` does not drop dimension by exactly one")]
    CoveringDimension { upper: String, lower: String },
    #[error("poset is not graded: cell `{0}` of dimension >= 0 covers nothing")]
    NotGraded(String),
    #[error("diamond violation: interval (`{lower}`, `{upper}`) has {count} middle cells, expected 2")]
    DiamondViolation { upper: String, lower: String, count: usize },
    #[error("intersection violation: `{a}` and `{b}` have maximal common lower bounds {bounds:?}")]
    IntersectionViolation { a: String, b: String, bounds: Vec<String> },
}

/// Per-cell result of the homology-sphere test on the open interval below
/// the cell (a necessary condition for the closed cell to be a ball).
#[derive(Clone, Debug, Serialize)]
pub struct SphereCheck {
    pub cell: String,
    pub is_homology_sphere: bool,
}

#[derive(Clone, Debug)]
pub struct CellComplex {
    cells: Vec<Cell>,
    covers: Vec<(CellId, CellId)>,
    up: Vec<Vec<CellId>>,
    down: Vec<Vec<CellId>>,
    leq: Vec<Vec<bool>>,
    sphere_checks: Vec<SphereCheck>,
}

impl CellComplex {
    /// Validate raw poset data. The bottom cell is inserted automatically
    /// when missing (with coverings from every 0-cell).
    pub fn validate(raw: &RawComplex) -> Result<CellComplex, Vec<Diagnostic>> {
        let mut diags = Vec::new();

        let mut cells: Vec<(String, i64)> = Vec::new();
        let mut seen = HashSet::new();
        for (label, dim) in &raw.cells {
            if !seen.insert(label.clone()) {
                diags.push(Diagnostic::DuplicateCellId(label.clone()));
                continue;
            }
            if *dim < -1 {
                diags.push(Diagnostic::BadDimension(label.clone(), *dim));
                continue;
            }
            cells.push((label.clone(), *dim));
        }

        let bottoms: Vec<String> =
            cells.iter().filter(|(_, d)| *d == -1).map(|(l, _)| l.clone()).collect();
        let bottom_label = match bottoms.len() {
            0 => {
                let label = "{}".to_string();
                if seen.contains(&label) {
                    diags.push(Diagnostic::MissingBottom);
                    return Err(diags);
                }
                cells.push((label.clone(), -1));
                label
            }
            1 => bottoms[0].clone(),
            _ => {
                diags.push(Diagnostic::MultipleBottoms(bottoms));
                return Err(diags);
            }
        };

        // bottom first, the rest ordered by (dimension, input order)
        cells.sort_by_key(|(_, d)| *d);
        let index: HashMap<String, CellId> =
            cells.iter().enumerate().map(|(i, (l, _))| (l.clone(), i)).collect();
        let n = cells.len();
        debug_assert_eq!(index[&bottom_label], EMPTY_CELL);

        let mut covers: Vec<(CellId, CellId)> = Vec::new();
        let mut cover_set = HashSet::new();
        for (u, l) in &raw.coverings {
            let (Some(&ui), Some(&li)) = (index.get(u), index.get(l)) else {
                for lbl in [u, l] {
                    if !index.contains_key(lbl) {
                        diags.push(Diagnostic::UnknownCell(lbl.clone()));
                    }
                }
                continue;
            };
            if cells[ui].1 != cells[li].1 + 1 {
                diags.push(Diagnostic::CoveringDimension { upper: u.clone(), lower: l.clone() });
                continue;
            }
            if cover_set.insert((ui, li)) {
                covers.push((ui, li));
            }
        }
        // auto-coverings from 0-cells to the auto-inserted bottom
        for (i, (_, d)) in cells.iter().enumerate() {
            if *d == 0 && !cover_set.contains(&(i, EMPTY_CELL)) {
                covers.push((i, EMPTY_CELL));
                cover_set.insert((i, EMPTY_CELL));
            }
        }
        if !diags.is_empty() {
            return Err(diags);
        }

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(u, l) in &covers {
            up[l].push(u);
            down[u].push(l);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }

        // gradedness: every cell of dimension >= 0 covers something
        for (i, (label, d)) in cells.iter().enumerate() {
            if *d >= 0 && down[i].is_empty() {
                diags.push(Diagnostic::NotGraded(label.clone()));
            }
        }
        if !diags.is_empty() {
            return Err(diags);
        }

        // reflexive-transitive closure of the covering relation
        let mut leq = vec![vec![false; n]; n];
        let mut order: Vec<CellId> = (0..n).collect();
        order.sort_by_key(|&i| cells[i].1);
        for &i in &order {
            leq[i][i] = true;
            for &u in &up[i] {
                for row in leq.iter_mut() {
                    if row[i] {
                        row[u] = true;
                    }
                }
            }
        }

        // diamond condition on every length-two interval
        for upper in 0..n {
            let mut lower2: HashSet<CellId> = HashSet::new();
            for &m in &down[upper] {
                lower2.extend(down[m].iter().copied());
            }
            for &lower in &lower2 {
                let count =
                    up[lower].iter().filter(|&&m| down[upper].contains(&m)).count();
                if count != 2 {
                    diags.push(Diagnostic::DiamondViolation {
                        upper: cells[upper].0.clone(),
                        lower: cells[lower].0.clone(),
                        count,
                    });
                }
            }
        }

        // intersection property: unique maximal common lower bound
        for a in 0..n {
            for b in (a + 1)..n {
                let common: Vec<CellId> =
                    (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                let maximal: Vec<CellId> = common
                    .iter()
                    .copied()
                    .filter(|&c| !common.iter().any(|&d| d != c && leq[c][d]))
                    .collect();
                if maximal.len() != 1 {
                    diags.push(Diagnostic::IntersectionViolation {
                        a: cells[a].0.clone(),
                        b: cells[b].0.clone(),
                        bounds: maximal.iter().map(|&c| cells[c].0.clone()).collect(),
                    });
                }
            }
        }

        if !diags.is_empty() {
            return Err(diags);
        }

        let mut complex = CellComplex {
            cells: cells.into_iter().map(|(label, dim)| Cell { label, dim }).collect(),
            covers,
            up,
            down,
            leq,
            sphere_checks: Vec::new(),
        };
        complex.sphere_checks = complex.run_sphere_checks();
        Ok(complex)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id]
    }

    pub fn label(&self, id: CellId) -> &str {
        &self.cells[id].label
    }

    pub fn dim_of(&self, id: CellId) -> i64 {
        self.cells[id].dim
    }

    /// Dimension of the complex (max cell dimension; `-1` for the bottom
    /// alone).
    pub fn dim(&self) -> i64 {
        self.cells.iter().map(|c| c.dim).max().unwrap_or(-1)
    }

    pub fn by_label(&self, label: &str) -> Option<CellId> {
        self.cells.iter().position(|c| c.label == label)
    }

    pub fn ids(&self) -> impl Iterator<Item = CellId> + '_ {
        0..self.cells.len()
    }

    pub fn cells_of_dim(&self, d: i64) -> Vec<CellId> {
        self.ids().filter(|&i| self.cells[i].dim == d).collect()
    }

    pub fn leq(&self, a: CellId, b: CellId) -> bool {
        self.leq[a][b]
    }

    /// Cells covering `c` (one dimension up).
    pub fn covering(&self, c: CellId) -> &[CellId] {
        &self.up[c]
    }

    /// Cells covered by `c` (one dimension down).
    pub fn covered_by(&self, c: CellId) -> &[CellId] {
        &self.down[c]
    }

    pub fn covering_pairs(&self) -> &[(CellId, CellId)] {
        &self.covers
    }

    /// Unique maximal common lower bound (guaranteed by validation).
    pub fn meet(&self, a: CellId, b: CellId) -> CellId {
        let common: Vec<CellId> =
            self.ids().filter(|&c| self.leq[c][a] && self.leq[c][b]).collect();
        *common
            .iter()
            .find(|&&c| !common.iter().any(|&d| d != c && self.leq[c][d]))
            .expect("validated complex has meets")
    }

    /// Cells above both `a` and `b`, sorted by dimension.
    pub fn common_upper(&self, a: CellId, b: CellId) -> Vec<CellId> {
        let mut v: Vec<CellId> =
            self.ids().filter(|&c| self.leq[a][c] && self.leq[b][c]).collect();
        v.sort_by_key(|&c| self.cells[c].dim);
        v
    }

    /// All maximal chains of covering steps from `lower` up to `upper`.
    pub fn chains_between(&self, upper: CellId, lower: CellId) -> Vec<Vec<CellId>> {
        if upper == lower {
            return vec![vec![lower]];
        }
        let mut out = Vec::new();
        for &m in &self.up[lower] {
            if self.leq[m][upper] {
                for mut chain in self.chains_between(upper, m) {
                    chain.insert(0, lower);
                    out.push(chain);
                }
            }
        }
        out
    }

    pub fn sphere_checks(&self) -> &[SphereCheck] {
        &self.sphere_checks
    }

    /// Reduced homology of the order complex of the open interval below
    /// each cell, compared against the sphere of dimension `dim - 1`. Checked
    /// over both `Q` and `F_2`; a genuine sphere has free homology, so the
    /// two agree.
    fn run_sphere_checks(&self) -> Vec<SphereCheck> {
        self.ids()
            .map(|c| {
                let ok = if self.cells[c].dim <= 0 {
                    true // interval is empty, the (-1)-sphere
                } else {
                    let interval: Vec<CellId> = self
                        .ids()
                        .filter(|&t| t != EMPTY_CELL && t != c && self.leq[t][c])
                        .collect();
                    let want = (self.cells[c].dim - 1) as usize;
                    [FieldSpec::Rationals, FieldSpec::Prime(2)].iter().all(|&f| {
                        let h = order_complex_reduced_homology(self, &interval, f);
                        h.iter().enumerate().all(|(i, &d)| d == usize::from(i == want + 1))
                    })
                };
                SphereCheck { cell: self.cells[c].label.clone(), is_homology_sphere: ok }
            })
            .collect()
    }
}

/// Reduced homology dimensions of the order complex of a subposet, indexed
/// from the empty simplex: entry `j` is the reduced homology in degree
/// `j - 1`.
fn order_complex_reduced_homology(
    k: &CellComplex,
    elements: &[CellId],
    field: FieldSpec,
) -> Vec<usize> {
    // chains of the subposet, grouped by length
    let mut sorted: Vec<CellId> = elements.to_vec();
    sorted.sort_by_key(|&c| (k.dim_of(c), c));
    let mut levels: Vec<Vec<Vec<CellId>>> = vec![vec![vec![]]];
    loop {
        let last = levels.last().unwrap();
        let mut next = Vec::new();
        for chain in last {
            for &c in &sorted {
                // every totally ordered subset has a unique ascending
                // enumeration, so each chain is produced exactly once
                let extends = match chain.last() {
                    None => true,
                    Some(&top) => top != c && k.leq(top, c),
                };
                if extends {
                    let mut ch = chain.clone();
                    ch.push(c);
                    next.push(ch);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    // boundary matrices of the augmented simplicial chain complex
    let index_of: Vec<BTreeMap<Vec<CellId>, usize>> = levels
        .iter()
        .map(|lvl| lvl.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect())
        .collect();
    let mut boundaries: Vec<Mat> = Vec::new();
    for j in 1..levels.len() {
        let mut m = Mat::zero(field, levels[j - 1].len(), levels[j].len());
        for (ci, chain) in levels[j].iter().enumerate() {
            for drop in 0..chain.len() {
                let mut face = chain.clone();
                face.remove(drop);
                let ri = index_of[j - 1][&face];
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                m.set(ri, ci, field.from_i64(sign));
            }
        }
        boundaries.push(m);
    }
    let mut dims = Vec::new();
    for j in 0..levels.len() {
        let rank_in = if j < boundaries.len() { boundaries[j].rank() } else { 0 };
        let kernel = if j == 0 {
            levels[0].len()
        } else {
            levels[j].len() - boundaries[j - 1].rank()
        };
        dims.push(kernel - rank_in);
    }
    dims
}

/// Signs on covering pairs making the augmented cellular boundary square to
/// zero. Zero on non-covering pairs by convention.
#[derive(Clone, Debug)]
pub struct IncidenceFunction {
    signs: HashMap<(CellId, CellId), i8>,
}

impl IncidenceFunction {
    pub fn sign(&self, upper: CellId, lower: CellId) -> i8 {
        *self.signs.get(&(upper, lower)).unwrap_or(&0)
    }

    fn from_bits(k: &CellComplex, bits: &[u8]) -> IncidenceFunction {
        let signs = k
            .covering_pairs()
            .iter()
            .enumerate()
            .map(|(i, &(u, l))| ((u, l), if bits[i] == 0 { 1 } else { -1 }))
            .collect();
        IncidenceFunction { signs }
    }

    /// Flip signs along an assignment of the homogeneous sign system; the
    /// result is again a valid incidence function.
    pub fn flipped(&self, flips: &HashMap<(CellId, CellId), bool>) -> IncidenceFunction {
        let signs = self
            .signs
            .iter()
            .map(|(&p, &s)| (p, if flips.get(&p).copied().unwrap_or(false) { -s } else { s }))
            .collect();
        IncidenceFunction { signs }
    }
}

#[derive(Debug, Error)]
pub enum IncidenceError {
    #[error("sign system is unsolvable; the input is not a regular cell complex (failing diamonds: {0:?})")]
    Unsolvable(Vec<(String, String)>),
}

/// Diamonds of the poset: (upper, lower, middle1, middle2).
fn diamonds(k: &CellComplex) -> Vec<(CellId, CellId, CellId, CellId)> {
    let mut out = Vec::new();
    for upper in k.ids() {
        let mut seen = HashSet::new();
        for &m in k.covered_by(upper) {
            for &lower in k.covered_by(m) {
                if !seen.insert(lower) {
                    continue;
                }
                let mids: Vec<CellId> = k
                    .covering(lower)
                    .iter()
                    .copied()
                    .filter(|&x| k.covered_by(upper).contains(&x))
                    .collect();
                debug_assert_eq!(mids.len(), 2, "diamond condition was validated");
                out.push((upper, lower, mids[0], mids[1]));
            }
        }
    }
    out
}

/// Solve for an incidence function: writing each sign as `(-1)^s`, every
/// diamond forces the four exponents to sum to 1 mod 2, and the
/// normalization pins `sign(v, bottom) = +1` for every vertex. The linear
/// system over `F_2` is solved by elimination; free variables are set to 0,
/// so the output is deterministic.
pub fn synthesize_incidence(k: &CellComplex) -> Result<IncidenceFunction, IncidenceError> {
    let pairs = k.covering_pairs();
    let var: HashMap<(CellId, CellId), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let dias = diamonds(k);
    let f2 = FieldSpec::Prime(2);
    let nrows = dias.len() + k.cells_of_dim(0).len();
    let mut a = Mat::zero(f2, nrows, pairs.len());
    let mut rhs = vec![f2.zero(); nrows];
    for (r, &(upper, lower, m1, m2)) in dias.iter().enumerate() {
        for p in [(upper, m1), (m1, lower), (upper, m2), (m2, lower)] {
            let c = var[&p];
            a.set(r, c, a.get(r, c).add(&f2.one()));
        }
        rhs[r] = f2.one();
    }
    for (i, v) in k.cells_of_dim(0).into_iter().enumerate() {
        let r = dias.len() + i;
        a.set(r, var[&(v, EMPTY_CELL)], f2.one());
    }

    // eliminate on the augmented matrix
    let mut aug = Mat::zero(f2, nrows, pairs.len() + 1);
    for (i, r) in rhs.iter().enumerate() {
        for j in 0..pairs.len() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, pairs.len(), r.clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.contains(&pairs.len()) {
        let bad = dias
            .iter()
            .map(|&(u, l, _, _)| (k.label(u).to_string(), k.label(l).to_string()))
            .collect();
        return Err(IncidenceError::Unsolvable(bad));
    }
    let mut bits = vec![0u8; pairs.len()];
    for (prow, &pc) in pivots.iter().enumerate() {
        if !r.get(prow, pairs.len()).is_zero() {
            bits[pc] = 1;
        }
    }
    let eps = IncidenceFunction::from_bits(k, &bits);
    debug_assert!(boundary_squares_to_zero(k, &eps));
    Ok(eps)
}

/// Nontrivial solutions of the homogeneous sign system, as flip patterns.
/// Flipping a valid incidence function along any of them gives another valid
/// one; cohomology dimensions must not depend on the choice.
pub fn incidence_flip_patterns(k: &CellComplex) -> Vec<HashMap<(CellId, CellId), bool>> {
    let pairs = k.covering_pairs();
    let var: HashMap<(CellId, CellId), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let dias = diamonds(k);
    let f2 = FieldSpec::Prime(2);
    let nrows = dias.len() + k.cells_of_dim(0).len();
    let mut a = Mat::zero(f2, nrows, pairs.len());
    for (r, &(upper, lower, m1, m2)) in dias.iter().enumerate() {
        for p in [(upper, m1), (m1, lower), (upper, m2), (m2, lower)] {
            let c = var[&p];
            a.set(r, c, a.get(r, c).add(&f2.one()));
        }
    }
    for (i, v) in k.cells_of_dim(0).into_iter().enumerate() {
        a.set(dias.len() + i, var[&(v, EMPTY_CELL)], f2.one());
    }
    let kernel = a.kernel_basis();
    (0..kernel.ncols)
        .map(|j| {
            pairs
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, !kernel.get(i, j).is_zero()))
                .collect()
        })
        .collect()
}

/// `d(d(x)) = 0` for the augmented cellular complex with constant
/// coefficients.
pub fn boundary_squares_to_zero(k: &CellComplex, eps: &IncidenceFunction) -> bool {
    for a in k.ids() {
        for c in k.ids() {
            if k.dim_of(a) == k.dim_of(c) + 2 {
                let mut sum = 0i64;
                for &b in k.covered_by(a) {
                    sum += i64::from(eps.sign(a, b)) * i64::from(eps.sign(b, c));
                }
                if sum != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Coefficient system for the cellular cochain complex: a vector space per
/// cell with transition maps along covering pairs.
pub trait CellCoefficients {
    fn field(&self) -> FieldSpec;
    fn dim(&self, cell: CellId) -> usize;
    /// Transition along a covering pair, `dim(upper) x dim(lower)`.
    fn transition(&self, upper: CellId, lower: CellId) -> Mat;
}

/// The constant sheaf: one dimension everywhere, identity transitions.
pub struct ConstantCoefficients(pub FieldSpec);

impl CellCoefficients for ConstantCoefficients {
    fn field(&self) -> FieldSpec {
        self.0
    }
    fn dim(&self, _cell: CellId) -> usize {
        1
    }
    fn transition(&self, _upper: CellId, _lower: CellId) -> Mat {
        Mat::identity(self.0, 1)
    }
}

/// Which cells contribute cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    /// All nonempty cells.
    All,
    /// The open star: all cells above (and including) the given one.
    UpSet(CellId),
}

/// A bounded complex of finite-dimensional vector spaces with labelled
/// bases.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub field: FieldSpec,
    /// Lowest cohomological index.
    pub lo: i64,
    /// Basis labels per index: (cell, local basis vector).
    pub bases: Vec<Vec<(CellId, usize)>>,
    /// `diffs[j]` maps index `lo + j` to `lo + j + 1`.
    pub diffs: Vec<Mat>,
}

impl CochainComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Cohomology dimension at each index, by exact rank computation.
    pub fn cohomology_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for j in 0..self.bases.len() {
            let rank_out = if j < self.diffs.len() { self.diffs[j].rank() } else { 0 };
            let rank_in = if j > 0 { self.diffs[j - 1].rank() } else { 0 };
            out.insert(self.lo + j as i64, self.bases[j].len() - rank_out - rank_in);
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (j, b) in self.bases.iter().enumerate() {
            let sign = if (self.lo + j as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            chi += sign * b.len() as i64;
        }
        chi
    }
}

/// The cellular cochain complex of a coefficient system over a support set:
/// index `j` collects the cells of dimension `j`, and the differential sends
/// a coefficient at `tau` to its signed transitions into the covering cells.
/// With `augmented` the bottom cell contributes at index `-1` (reduced
/// cohomology); the non-augmented complex computes sheaf cohomology, for
/// which the bottom stalk is irrelevant.
pub fn cellular_complex(
    k: &CellComplex,
    eps: &IncidenceFunction,
    coeffs: &dyn CellCoefficients,
    support: Support,
    augmented: bool,
) -> CochainComplex {
    assert!(
        !(augmented && !matches!(support, Support::All)),
        "augmentation only makes sense with full support"
    );
    let field = coeffs.field();
    let in_support = |c: CellId| match support {
        Support::All => c != EMPTY_CELL || augmented,
        Support::UpSet(s) => k.leq(s, c) && c != EMPTY_CELL,
    };
    let lo: i64 = if augmented { -1 } else { 0 };
    let hi = k.dim();
    let mut bases: Vec<Vec<(CellId, usize)>> = Vec::new();
    let mut offsets: Vec<HashMap<CellId, usize>> = Vec::new();
    for d in lo..=hi {
        let mut basis = Vec::new();
        let mut offs = HashMap::new();
        for c in k.cells_of_dim(d) {
            if in_support(c) && coeffs.dim(c) > 0 {
                offs.insert(c, basis.len());
                for i in 0..coeffs.dim(c) {
                    basis.push((c, i));
                }
            }
        }
        bases.push(basis);
        offsets.push(offs);
    }
    let mut diffs = Vec::new();
    for j in 0..bases.len().saturating_sub(1) {
        let mut m = Mat::zero(field, bases[j + 1].len(), bases[j].len());
        for (&low, &loff) in &offsets[j] {
            for &upp in k.covering(low) {
                let Some(&uoff) = offsets[j + 1].get(&upp) else { continue };
                let t = coeffs.transition(upp, low).scale(&field.from_i64(eps.sign(upp, low).into()));
                for r in 0..t.nrows {
                    for c in 0..t.ncols {
                        m.set(uoff + r, loff + c, t.get(r, c).clone());
                    }
                }
            }
        }
        diffs.push(m);
    }
    for j in 0..diffs.len().saturating_sub(1) {
        debug_assert!(diffs[j + 1].mul(&diffs[j]).is_zero(), "cellular d o d != 0");
    }
    CochainComplex { field, lo, bases, diffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn square_boundary() -> RawComplex {
        let cells = vec![
            ("a".into(), 0),
            ("b".into(), 0),
            ("c".into(), 0),
            ("d".into(), 0),
            ("ab".into(), 1),
            ("bc".into(), 1),
            ("cd".into(), 1),
            ("da".into(), 1),
        ];
        let coverings = vec![
            ("ab".into(), "a".into()),
            ("ab".into(), "b".into()),
            ("bc".into(), "b".into()),
            ("bc".into(), "c".into()),
            ("cd".into(), "c".into()),
            ("cd".into(), "d".into()),
            ("da".into(), "d".into()),
            ("da".into(), "a".into()),
        ];
        RawComplex { cells, coverings }
    }

    #[test]
    fn one_point_complex_is_valid() {
        let raw = RawComplex { cells: vec![("v".into(), 0)], coverings: vec![] };
        let k = CellComplex::validate(&raw).unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(k.len(), 2); // bottom auto-inserted
        assert!(k.sphere_checks().iter().all(|s| s.is_homology_sphere));
    }

    #[test]
    fn square_boundary_is_valid() {
        let k = CellComplex::validate(&square_boundary()).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.len(), 9);
        assert!(k.sphere_checks().iter().all(|s| s.is_homology_sphere));
    }

    #[test]
    fn non_regular_gluing_fails_intersection_property() {
        // two triangles sharing an edge and also the opposite vertex:
        // their common lower bounds have two maximal elements
        let cells = vec![
            ("1".into(), 0),
            ("2".into(), 0),
            ("3".into(), 0),
            ("e12".into(), 1),
            ("a13".into(), 1),
            ("a23".into(), 1),
            ("b13".into(), 1),
            ("b23".into(), 1),
            ("T".into(), 2),
            ("T'".into(), 2),
        ];
        let coverings = vec![
            ("e12".into(), "1".into()),
            ("e12".into(), "2".into()),
            ("a13".into(), "1".into()),
            ("a13".into(), "3".into()),
            ("a23".into(), "2".into()),
            ("a23".into(), "3".into()),
            ("b13".into(), "1".into()),
            ("b13".into(), "3".into()),
            ("b23".into(), "2".into()),
            ("b23".into(), "3".into()),
            ("T".into(), "e12".into()),
            ("T".into(), "a13".into()),
            ("T".into(), "a23".into()),
            ("T'".into(), "e12".into()),
            ("T'".into(), "b13".into()),
            ("T'".into(), "b23".into()),
        ];
        let err = CellComplex::validate(&RawComplex { cells, coverings }).unwrap_err();
        assert!(err.iter().any(|d| matches!(
            d,
            Diagnostic::IntersectionViolation { a, b, .. }
                if (a == "T" && b == "T'") || (a == "T'" && b == "T")
        )));
    }

    #[test]
    fn segment_incidence_satisfies_augmented_condition() {
        let raw = RawComplex {
            cells: vec![("v1".into(), 0), ("v2".into(), 0), ("e".into(), 1)],
            coverings: vec![("e".into(), "v1".into()), ("e".into(), "v2".into())],
        };
        let k = CellComplex::validate(&raw).unwrap();
        let eps = synthesize_incidence(&k).unwrap();
        let e = k.by_label("e").unwrap();
        let v1 = k.by_label("v1").unwrap();
        let v2 = k.by_label("v2").unwrap();
        assert_eq!(
            eps.sign(e, v1) * eps.sign(v1, EMPTY_CELL),
            -eps.sign(e, v2) * eps.sign(v2, EMPTY_CELL)
        );
        assert_eq!(eps.sign(v1, EMPTY_CELL), 1);
    }

    #[test]
    fn square_boundary_cellular_cohomology() {
        let k = CellComplex::validate(&square_boundary()).unwrap();
        let eps = synthesize_incidence(&k).unwrap();
        assert!(boundary_squares_to_zero(&k, &eps));
        let coeffs = ConstantCoefficients(FieldSpec::Rationals);
        let c = cellular_complex(&k, &eps, &coeffs, Support::All, false);
        assert_eq!(c.dims(), vec![4, 4]);
        assert_eq!(c.diffs[0].rank(), 3);
        let h = c.cohomology_dims();
        assert_eq!(h[&0], 1);
        assert_eq!(h[&1], 1);
        // augmented: reduced cohomology of the circle
        let ca = cellular_complex(&k, &eps, &coeffs, Support::All, true);
        let ha = ca.cohomology_dims();
        assert_eq!(ha[&0], 0);
        assert_eq!(ha[&1], 1);
        // Euler characteristic consistency
        let chi_h: i64 = h.iter().map(|(&i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
        assert_eq!(c.euler_characteristic(), chi_h);
    }

    #[test]
    fn upset_support_counts_cells() {
        let k = CellComplex::validate(&square_boundary()).unwrap();
        let eps = synthesize_incidence(&k).unwrap();
        let coeffs = ConstantCoefficients(FieldSpec::Rationals);
        let v = k.by_label("a").unwrap();
        let c = cellular_complex(&k, &eps, &coeffs, Support::UpSet(v), false);
        assert_eq!(c.dims(), vec![1, 2]);
    }

    #[test]
    fn zero_coefficients_give_zero_complex() {
        struct Zero;
        impl CellCoefficients for Zero {
            fn field(&self) -> FieldSpec {
                FieldSpec::Rationals
            }
            fn dim(&self, _c: CellId) -> usize {
                0
            }
            fn transition(&self, _u: CellId, _l: CellId) -> Mat {
                Mat::zero(FieldSpec::Rationals, 0, 0)
            }
        }
        let k = CellComplex::validate(&square_boundary()).unwrap();
        let eps = synthesize_incidence(&k).unwrap();
        let c = cellular_complex(&k, &eps, &Zero, Support::All, false);
        assert!(c.cohomology_dims().values().all(|&d| d == 0));
    }

    #[test]
    fn cohomology_independent_of_incidence_choice() {
        let k = CellComplex::validate(&square_boundary()).unwrap();
        let eps = synthesize_incidence(&k).unwrap();
        let coeffs = ConstantCoefficients(FieldSpec::Rationals);
        let base = cellular_complex(&k, &eps, &coeffs, Support::All, true).cohomology_dims();
        for flips in incidence_flip_patterns(&k) {
            let eps2 = eps.flipped(&flips);
            assert!(boundary_squares_to_zero(&k, &eps2));
            let h = cellular_complex(&k, &eps2, &coeffs, Support::All, true).cohomology_dims();
            assert_eq!(h, base);
        }
    }

    #[test]
    fn simplex_boundary_has_sphere_cohomology() {
        // boundary of a triangle: three vertices, three edges
        let cells = vec![
            ("1".into(), 0),
            ("2".into(), 0),
            ("3".into(), 0),
            ("12".into(), 1),
            ("13".into(), 1),
            ("23".into(), 1),
        ];
        let coverings = vec![
            ("12".into(), "1".into()),
            ("12".into(), "2".into()),
            ("13".into(), "1".into()),
            ("13".into(), "3".into()),
            ("23".into(), "2".into()),
            ("23".into(), "3".into()),
        ];
        let k = CellComplex::validate(&RawComplex { cells, coverings }).unwrap();
        let eps = synthesize_incidence(&k).unwrap();
        let coeffs = ConstantCoefficients(FieldSpec::Rationals);
        let h = cellular_complex(&k, &eps, &coeffs, Support::All, true).cohomology_dims();
        assert_eq!(h[&0], 0);
        assert_eq!(h[&1], 1);
    }
}
