//! Monomial arithmetic in the toric face ring, graded prime ideals,
//! radicals of monomial ideals, and the presentation of the ring as a
//! quotient of a polynomial ring.
//!
//! The presentation ideal splits into a squarefree part — monomials in
//! variables whose supports share no cell, which multiply to zero — and a
//! binomial part collecting, per maximal cell, the relations of the cell's
//! affine semigroup. Binomials are found by degree-bounded enumeration
//! instead of Gröbner machinery; an exactness certificate then checks that
//! monomial classes modulo the emitted relations biject with the degrees of
//! the ring, so an incomplete presentation raises instead of passing
//! silently.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::cell_topology::{CellId, EMPTY_CELL};
use crate::monoidal::{Degree, DegreeError, MonoidalComplex};
use crate::polyhedral::SemigroupMembership;
use crate::zlinalg::ZVec;

/// Monomial ideal, stored by divisibility-minimal generator degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Degree>,
}

impl MonomialIdeal {
    /// Build from any generating set, dropping generators divisible by
    /// another.
    pub fn new(mc: &MonoidalComplex, gens: Vec<Degree>) -> MonomialIdeal {
        let mut sorted: Vec<Degree> = gens;
        sorted.sort();
        sorted.dedup();
        let minimal: Vec<Degree> = sorted
            .iter()
            .filter(|g| !sorted.iter().any(|h| *h != **g && mc.divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { generators: minimal }
    }

    pub fn zero() -> MonomialIdeal {
        MonomialIdeal { generators: Vec::new() }
    }

    pub fn generators(&self) -> &[Degree] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// A monomial lies in the ideal iff some generator divides it.
    pub fn contains(&self, mc: &MonoidalComplex, a: &Degree) -> bool {
        self.generators.iter().any(|g| mc.divides(g, a))
    }
}

/// The product of two monomials: their degree sum, or zero (`None`) when
/// the degrees share no cell.
pub fn multiply_monomials(mc: &MonoidalComplex, a: &Degree, b: &Degree) -> Option<Degree> {
    mc.add(a, b)
}

/// The graded prime ideals: one per cell, generated by the variables whose
/// support does not lie below the cell. The bottom cell gives the maximal
/// monomial ideal; maximal cells give the minimal primes.
pub fn graded_primes(mc: &MonoidalComplex) -> Vec<(CellId, MonomialIdeal)> {
    let vars: Vec<Degree> = mc.generator_degrees().into_iter().map(|(d, _)| d).collect();
    mc.complex()
        .ids()
        .map(|sigma| {
            let gens: Vec<Degree> =
                vars.iter().filter(|v| !mc.degree_in_cell(v, sigma)).cloned().collect();
            (sigma, MonomialIdeal::new(mc, gens))
        })
        .collect()
}

/// Radical membership: a monomial lies in the radical iff it lies in every
/// graded prime containing the ideal, and a graded prime contains a
/// monomial ideal iff no generator's support sits below the prime's cell.
/// Membership therefore depends only on the support cell.
pub fn radical_contains(mc: &MonoidalComplex, ideal: &MonomialIdeal, a: &Degree) -> bool {
    if a.is_zero() {
        return false;
    }
    for sigma in mc.complex().ids() {
        let prime_contains_ideal = ideal.generators.iter().all(|g| !mc.degree_in_cell(g, sigma));
        if prime_contains_ideal && mc.degree_in_cell(a, sigma) {
            return false;
        }
    }
    true
}

/// The radical as a monomial ideal, with minimal generators found among
/// degrees of bounded generator length. The bound extends the maximal
/// generator length of the input by the cell dimensions: minimal
/// generators of a squarefree ideal are minimal interior lattice points of
/// cells and may need up to `dim + 1` semigroup generators.
pub fn radical(
    mc: &MonoidalComplex,
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<MonomialIdeal, DegreeError> {
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero());
    }
    let dim_bound = (mc.complex().dim() + 1).max(1) as usize;
    let mut bound = dim_bound;
    let lengths = loop {
        let lengths = degree_lengths(mc, bound, cap)?;
        if ideal.generators.iter().all(|g| lengths.contains_key(g)) {
            break lengths;
        }
        bound *= 2;
        if bound > cap {
            return Err(DegreeError::CapExceeded(cap));
        }
    };
    let max_len = ideal.generators.iter().map(|g| lengths[g]).max().unwrap_or(0);
    let final_bound = max_len.max(dim_bound);
    let degrees = mc.enumerate_degrees(final_bound, cap)?;
    let members: Vec<Degree> =
        degrees.into_iter().filter(|a| radical_contains(mc, ideal, a)).collect();
    Ok(MonomialIdeal::new(mc, members))
}

/// Generator length of each degree up to the bound: the first enumeration
/// level where it appears.
fn degree_lengths(
    mc: &MonoidalComplex,
    bound: usize,
    cap: usize,
) -> Result<BTreeMap<Degree, usize>, DegreeError> {
    let gens: Vec<Degree> = mc.generator_degrees().into_iter().map(|(d, _)| d).collect();
    let mut lengths: BTreeMap<Degree, usize> = BTreeMap::new();
    lengths.insert(Degree::zero(), 0);
    let mut frontier: BTreeSet<Degree> = [Degree::zero()].into();
    for level in 1..=bound {
        let mut next = BTreeSet::new();
        for d in &frontier {
            for g in &gens {
                if let Some(s) = mc.add(d, g) {
                    if !lengths.contains_key(&s) {
                        next.insert(s);
                    }
                }
            }
        }
        for d in &next {
            lengths.insert(d.clone(), level);
        }
        if lengths.len() > cap {
            return Err(DegreeError::CapExceeded(cap));
        }
        frontier = next;
    }
    Ok(lengths)
}

/// A presentation variable: a label and its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub label: String,
    pub degree: Degree,
}

/// Exponent vector of a monomial in the presentation's polynomial ring;
/// entries are variable index -> positive power.
pub type Exponent = BTreeMap<usize, u32>;

fn expo_total(e: &Exponent) -> u32 {
    e.values().sum()
}

fn expo_divides(d: &Exponent, m: &Exponent) -> bool {
    d.iter().all(|(v, p)| m.get(v).copied().unwrap_or(0) >= *p)
}

/// `m - u + v`, assuming `u` divides `m`.
fn expo_rewrite(m: &Exponent, u: &Exponent, v: &Exponent) -> Exponent {
    let mut out = m.clone();
    for (var, p) in u {
        let q = out.get_mut(var).expect("u divides m");
        *q -= p;
        if *q == 0 {
            out.remove(var);
        }
    }
    for (var, p) in v {
        *out.entry(*var).or_insert(0) += p;
    }
    out
}

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("degree enumeration failed: {0}")]
    Degree(#[from] DegreeError),
    #[error("chosen generators do not generate the semigroup of cell `{0}`")]
    ChoiceDoesNotGenerate(String),
    #[error("completeness certificate failed at degree <= {bound}: {detail}")]
    CertificateFailure { bound: usize, detail: String },
}

/// Presentation of the toric face ring as a quotient of the polynomial
/// ring on `variables`: the squarefree monomials kill variable sets with no
/// common cell, and the binomials identify monomials of equal degree. Both
/// parts are reduced to a generating subset by rewriting within the degree
/// bound.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub variables: Vec<Variable>,
    pub squarefree_part: Vec<BTreeSet<usize>>,
    pub binomial_part: Vec<(Exponent, Exponent)>,
    pub degree_bound: usize,
}

/// How to choose the presentation variables.
pub enum GeneratorChoice {
    /// The union of the per-cell semigroup generator sets, deduplicated
    /// through the gluings.
    Default,
    /// Explicit degrees with labels, given in a cell's coordinates.
    Custom(Vec<(String, CellId, ZVec)>),
}

/// Union-find over the monomials of total degree `<= bound`, with
/// rewriting edges from binomials and zero-marking from monomial
/// generators. This is the normal-form engine: a monomial reduces to zero
/// iff its class is marked, and two monomials are identified iff their
/// classes coincide.
struct Closure {
    universe: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
    parent: Vec<usize>,
    zero: Vec<bool>,
}

impl Closure {
    fn new(nvars: usize, bound: u32) -> Closure {
        let mut universe = Vec::new();
        let mut stack: Vec<(usize, Exponent, u32)> = vec![(0, Exponent::new(), 0)];
        while let Some((var, expo, total)) = stack.pop() {
            if var == nvars {
                universe.push(expo);
                continue;
            }
            for p in 0..=(bound - total) {
                let mut e = expo.clone();
                if p > 0 {
                    e.insert(var, p);
                }
                stack.push((var + 1, e, total + p));
            }
        }
        universe.sort_by(|a, b| (expo_total(a), a).cmp(&(expo_total(b), b)));
        let index = universe.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let n = universe.len();
        Closure { universe, index, parent: (0..n).collect(), zero: vec![false; n] }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let z = self.zero[ra] || self.zero[rb];
            self.parent[ra] = rb;
            self.zero[rb] = z;
        }
    }

    fn add_binomial(&mut self, u: &Exponent, v: &Exponent) {
        for i in 0..self.universe.len() {
            let m = self.universe[i].clone();
            if expo_divides(u, &m) {
                let m2 = expo_rewrite(&m, u, v);
                if let Some(&j) = self.index.get(&m2) {
                    self.union(i, j);
                }
            }
        }
    }

    fn add_monomial(&mut self, h: &Exponent) {
        for i in 0..self.universe.len() {
            if expo_divides(h, &self.universe[i]) {
                let r = self.find(i);
                self.zero[r] = true;
            }
        }
    }

    fn is_zero(&mut self, e: &Exponent) -> Option<bool> {
        let &i = self.index.get(e)?;
        let r = self.find(i);
        Some(self.zero[r])
    }

    fn same_class(&mut self, a: &Exponent, b: &Exponent) -> Option<bool> {
        let &i = self.index.get(a)?;
        let &j = self.index.get(b)?;
        Some(self.find(i) == self.find(j))
    }
}

impl Presentation {
    /// Render a monomial in the presentation's variables.
    pub fn monomial_string(&self, e: &Exponent) -> String {
        if e.is_empty() {
            return "1".to_string();
        }
        e.iter()
            .map(|(v, p)| {
                let name = format!("X_{}", self.variables[*v].label);
                if *p == 1 {
                    name
                } else {
                    format!("{name}^{p}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// All emitted generators as display strings.
    pub fn generator_strings(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .binomial_part
            .iter()
            .map(|(u, v)| format!("{} - {}", self.monomial_string(u), self.monomial_string(v)))
            .collect();
        out.extend(self.squarefree_part.iter().map(|h| {
            let e: Exponent = h.iter().map(|&v| (v, 1)).collect();
            self.monomial_string(&e)
        }));
        out
    }

    fn closure(&self) -> Closure {
        let mut cl = Closure::new(self.variables.len(), self.degree_bound as u32);
        for (u, v) in &self.binomial_part {
            cl.add_binomial(u, v);
        }
        for h in &self.squarefree_part {
            let e: Exponent = h.iter().map(|&v| (v, 1)).collect();
            cl.add_monomial(&e);
        }
        cl
    }

    /// Does the monomial rewrite to zero modulo the emitted generators,
    /// within the degree bound?
    pub fn reduces_to_zero(&self, e: &Exponent) -> bool {
        self.closure().is_zero(e).unwrap_or(false)
    }

    /// The degree of a monomial in the ring: defined iff all variable
    /// supports share a cell.
    pub fn semantic_degree(&self, mc: &MonoidalComplex, e: &Exponent) -> Option<Degree> {
        let mut cell = EMPTY_CELL;
        for v in e.keys() {
            cell = mc.minimal_common_cell(cell, self.variables[*v].degree.cell)?;
        }
        let mut total = vec![num::BigInt::from(0); mc.cell_arith(cell).ambient()];
        for (v, p) in e {
            let pushed = mc
                .push_to(&self.variables[*v].degree, cell)
                .expect("variable support below the common cell");
            for (t, x) in total.iter_mut().zip(&pushed) {
                *t += x * num::BigInt::from(*p);
            }
        }
        Some(mc.support(cell, &total).expect("sum of semigroup elements"))
    }
}

/// Compute the presentation ideal up to the degree bound, with the
/// completeness certificate.
pub fn present_ideal(
    mc: &MonoidalComplex,
    choice: GeneratorChoice,
    degree_bound: usize,
    cap: usize,
) -> Result<Presentation, PresentationError> {
    let variables: Vec<Variable> = match choice {
        GeneratorChoice::Default => mc
            .generator_degrees()
            .into_iter()
            .enumerate()
            .map(|(i, (degree, label))| Variable {
                label: label.unwrap_or_else(|| format!("g{i}")),
                degree,
            })
            .collect(),
        GeneratorChoice::Custom(list) => {
            let vars: Vec<Variable> = list
                .into_iter()
                .map(|(label, cell, coords)| {
                    let degree = mc.support(cell, &coords)?;
                    Ok(Variable { label, degree })
                })
                .collect::<Result<_, DegreeError>>()?;
            for sigma in mc.complex().ids() {
                if sigma == EMPTY_CELL {
                    continue;
                }
                let arith = mc.cell_arith(sigma);
                let local: Vec<ZVec> = vars
                    .iter()
                    .filter(|v| mc.degree_in_cell(&v.degree, sigma))
                    .map(|v| mc.push_to(&v.degree, sigma).expect("support below cell"))
                    .collect();
                let mut membership = SemigroupMembership::new(&local, &arith.cone);
                for g in &arith.generators {
                    if !membership.contains(g) {
                        return Err(PresentationError::ChoiceDoesNotGenerate(
                            mc.complex().label(sigma).to_string(),
                        ));
                    }
                }
            }
            vars
        }
    };

    // squarefree candidates: minimal variable sets with no common cell,
    // grown from sets all of whose proper subsets have common cells
    let n = variables.len();
    let has_common_cell = |set: &BTreeSet<usize>| -> bool {
        let mut cell = EMPTY_CELL;
        for v in set {
            match mc.minimal_common_cell(cell, variables[*v].degree.cell) {
                Some(c) => cell = c,
                None => return false,
            }
        }
        true
    };
    let mut squarefree_candidates: Vec<BTreeSet<usize>> = Vec::new();
    let mut faces: Vec<BTreeSet<usize>> = (0..n).map(|v| [v].into()).collect();
    while !faces.is_empty() {
        let face_set: BTreeSet<BTreeSet<usize>> = faces.iter().cloned().collect();
        let mut next = Vec::new();
        for f in &faces {
            let top = *f.iter().next_back().expect("nonempty face");
            for v in (top + 1)..n {
                let mut cand = f.clone();
                cand.insert(v);
                let all_subsets_ok = cand.iter().all(|&drop| {
                    let mut sub = cand.clone();
                    sub.remove(&drop);
                    sub.len() < 2 || face_set.contains(&sub) || has_common_cell(&sub)
                });
                if !all_subsets_ok {
                    continue;
                }
                if has_common_cell(&cand) {
                    next.push(cand);
                } else {
                    squarefree_candidates.push(cand);
                }
            }
        }
        faces = next;
    }
    squarefree_candidates.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    squarefree_candidates.dedup();

    // binomial candidates per maximal cell: monomials of equal degree,
    // paired against the smallest one in their degree class
    let maximal: Vec<CellId> = mc
        .complex()
        .ids()
        .filter(|&c| mc.complex().covering(c).is_empty() && c != EMPTY_CELL)
        .collect();
    let mut binomial_candidates: Vec<(Exponent, Exponent)> = Vec::new();
    let pres_probe = Presentation {
        variables: variables.clone(),
        squarefree_part: Vec::new(),
        binomial_part: Vec::new(),
        degree_bound,
    };
    for &sigma in &maximal {
        let cell_vars: Vec<usize> =
            (0..n).filter(|&v| mc.degree_in_cell(&variables[v].degree, sigma)).collect();
        let mut by_degree: BTreeMap<Degree, Vec<Exponent>> = BTreeMap::new();
        enumerate_exponents(&cell_vars, degree_bound as u32, &mut |e| {
            if e.is_empty() {
                return;
            }
            let d =
                pres_probe.semantic_degree(mc, e).expect("variables of one cell multiply freely");
            by_degree.entry(d).or_default().push(e.clone());
        });
        for (_, mut monos) in by_degree {
            if monos.len() < 2 {
                continue;
            }
            monos.sort_by(|a, b| (expo_total(a), a).cmp(&(expo_total(b), b)));
            let base = monos[0].clone();
            for other in monos.into_iter().skip(1) {
                binomial_candidates.push((other, base.clone()));
            }
        }
    }
    binomial_candidates.sort_by(|a, b| {
        (expo_total(&a.0).max(expo_total(&a.1)), &a.0, &a.1)
            .cmp(&(expo_total(&b.0).max(expo_total(&b.1)), &b.0, &b.1))
    });
    binomial_candidates.dedup();

    // greedy reduction: keep a candidate only when it does not already
    // rewrite to zero modulo the generators kept so far
    let mut closure = Closure::new(n, degree_bound as u32);
    let mut binomial_part: Vec<(Exponent, Exponent)> = Vec::new();
    for (u, v) in binomial_candidates {
        let redundant = matches!(closure.same_class(&u, &v), Some(true))
            || (matches!(closure.is_zero(&u), Some(true))
                && matches!(closure.is_zero(&v), Some(true)));
        if !redundant {
            closure.add_binomial(&u, &v);
            binomial_part.push((u, v));
        }
    }
    let mut squarefree_part: Vec<BTreeSet<usize>> = Vec::new();
    for h in squarefree_candidates {
        let e: Exponent = h.iter().map(|&v| (v, 1)).collect();
        if !matches!(closure.is_zero(&e), Some(true)) {
            closure.add_monomial(&e);
            squarefree_part.push(h);
        }
    }

    let presentation = Presentation { variables, squarefree_part, binomial_part, degree_bound };
    certify(mc, &presentation, cap)?;
    Ok(presentation)
}

/// Enumerate exponents over the given variables with bounded total degree
/// (including the empty monomial).
fn enumerate_exponents(vars: &[usize], bound: u32, f: &mut impl FnMut(&Exponent)) {
    fn rec(
        vars: &[usize],
        i: usize,
        left: u32,
        acc: &mut Exponent,
        f: &mut impl FnMut(&Exponent),
    ) {
        if i == vars.len() {
            f(acc);
            return;
        }
        for p in 0..=left {
            if p > 0 {
                acc.insert(vars[i], p);
            }
            rec(vars, i + 1, left - p, acc, f);
            if p > 0 {
                acc.remove(&vars[i]);
            }
        }
    }
    let mut acc = Exponent::new();
    rec(vars, 0, bound, &mut acc, f);
}

/// Completeness certificate: classes of monomials modulo the emitted
/// relations must biject with the degrees of the ring, up to the bound.
fn certify(mc: &MonoidalComplex, p: &Presentation, cap: usize) -> Result<(), PresentationError> {
    let mut closure = p.closure();
    let universe = closure.universe.clone();
    let mut class_degree: HashMap<usize, Degree> = HashMap::new();
    let mut degree_class: HashMap<Degree, usize> = HashMap::new();
    let fail =
        |detail: String| PresentationError::CertificateFailure { bound: p.degree_bound, detail };
    for (i, m) in universe.iter().enumerate() {
        let root = closure.find(i);
        let sdeg = p.semantic_degree(mc, m);
        if closure.zero[root] {
            // everything rewritten to zero must genuinely be zero in the ring
            if let Some(d) = sdeg {
                return Err(fail(format!(
                    "{} rewrites to zero but has degree at cell `{}`",
                    p.monomial_string(m),
                    mc.complex().label(d.cell)
                )));
            }
            continue;
        }
        let Some(d) = sdeg else {
            return Err(fail(format!(
                "{} is zero in the ring but does not rewrite to zero",
                p.monomial_string(m)
            )));
        };
        match class_degree.get(&root) {
            None => {
                if let Some(&other) = degree_class.get(&d) {
                    if other != root {
                        return Err(fail(format!(
                            "two monomial classes share the degree of {}",
                            p.monomial_string(m)
                        )));
                    }
                }
                class_degree.insert(root, d.clone());
                degree_class.insert(d, root);
            }
            Some(prev) if *prev == d => {}
            Some(_) => {
                return Err(fail(format!(
                    "class of {} carries two distinct degrees",
                    p.monomial_string(m)
                )));
            }
        }
    }
    // surjectivity: every degree up to the bound is hit by some monomial
    let degrees =
        mc.enumerate_degrees(p.degree_bound, cap).map_err(PresentationError::Degree)?;
    for d in degrees {
        if !degree_class.contains_key(&d) {
            return Err(fail(format!(
                "a degree at cell `{}` is represented by no monomial",
                mc.complex().label(d.cell)
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{import_simplicial, MonoidalComplex};
    use crate::polyhedral::EnumerationLimits;
    use crate::zlinalg::zvec_from_i64;

    fn edge_complex() -> MonoidalComplex {
        let raw = import_simplicial(&[vec!["1".into(), "2".into()]]);
        MonoidalComplex::validate(&raw, &EnumerationLimits::default()).unwrap()
    }

    fn two_points() -> MonoidalComplex {
        let raw = import_simplicial(&[vec!["1".into()], vec!["2".into()]]);
        MonoidalComplex::validate(&raw, &EnumerationLimits::default()).unwrap()
    }

    #[test]
    fn multiply_monomials_basics() {
        let mc = edge_complex();
        let edge = mc.complex().by_label("1,2").unwrap();
        let x = mc.support(edge, &zvec_from_i64(&[1, 0])).unwrap();
        let y = mc.support(edge, &zvec_from_i64(&[0, 1])).unwrap();
        assert_eq!(multiply_monomials(&mc, &Degree::zero(), &x), Some(x.clone()));
        let xy = multiply_monomials(&mc, &x, &y).unwrap();
        assert_eq!(xy.cell, edge);
    }

    #[test]
    fn graded_primes_of_small_complexes() {
        // one vertex: the zero ideal at the vertex, the maximal ideal at bottom
        let raw = import_simplicial(&[vec!["v".into()]]);
        let mc = MonoidalComplex::validate(&raw, &EnumerationLimits::default()).unwrap();
        let primes = graded_primes(&mc);
        assert_eq!(primes.len(), 2);
        let v = mc.complex().by_label("v").unwrap();
        for (cell, ideal) in &primes {
            if *cell == v {
                assert!(ideal.is_zero());
            } else {
                assert_eq!(ideal.generators().len(), 1);
            }
        }
        // two disjoint vertices: each minimal prime is the other variable
        let mc = two_points();
        let primes = graded_primes(&mc);
        for (cell, ideal) in &primes {
            if mc.complex().dim_of(*cell) == 0 {
                assert_eq!(ideal.generators().len(), 1);
                assert_ne!(ideal.generators()[0].cell, *cell);
            }
        }
        // the minimal primes intersect in zero: no degree lies in all
        let degs = mc.enumerate_degrees(2, 100).unwrap();
        for d in degs.iter().filter(|d| !d.is_zero()) {
            let in_all = primes
                .iter()
                .filter(|(c, _)| mc.complex().dim_of(*c) == 0)
                .all(|(_, p)| p.contains(&mc, d));
            assert!(!in_all);
        }
    }

    #[test]
    fn radical_of_powers() {
        // sqrt((x^2)) = (x) in k[x]
        let raw = import_simplicial(&[vec!["v".into()]]);
        let mc = MonoidalComplex::validate(&raw, &EnumerationLimits::default()).unwrap();
        let v = mc.complex().by_label("v").unwrap();
        let x2 = mc.support(v, &zvec_from_i64(&[2])).unwrap();
        let ideal = MonomialIdeal::new(&mc, vec![x2]);
        let rad = radical(&mc, &ideal, 10_000).unwrap();
        let x = mc.support(v, &zvec_from_i64(&[1])).unwrap();
        assert_eq!(rad.generators(), std::slice::from_ref(&x));
        // radical is idempotent and contains its argument
        let rad2 = radical(&mc, &rad, 10_000).unwrap();
        assert_eq!(rad, rad2);
        assert!(ideal.generators().iter().all(|g| rad.contains(&mc, g)));
    }

    #[test]
    fn radical_on_an_edge() {
        // sqrt((x1^2 x2)) = (x1 x2) in the polynomial ring on an edge
        let mc = edge_complex();
        let edge = mc.complex().by_label("1,2").unwrap();
        let g = mc.support(edge, &zvec_from_i64(&[2, 1])).unwrap();
        let ideal = MonomialIdeal::new(&mc, vec![g]);
        let rad = radical(&mc, &ideal, 10_000).unwrap();
        let x1x2 = mc.support(edge, &zvec_from_i64(&[1, 1])).unwrap();
        assert_eq!(rad.generators(), std::slice::from_ref(&x1x2));
    }

    #[test]
    fn radical_of_zero_is_zero() {
        let mc = edge_complex();
        let rad = radical(&mc, &MonomialIdeal::zero(), 10_000).unwrap();
        assert!(rad.is_zero());
    }

    #[test]
    fn squarefree_membership_matches_support_predicate() {
        // an ideal equal to its radical has membership depending only on
        // the support cell
        let mc = two_points();
        let v1 = mc.complex().by_label("1").unwrap();
        let x = mc.support(v1, &zvec_from_i64(&[1])).unwrap();
        let ideal = MonomialIdeal::new(&mc, vec![x]);
        let rad = radical(&mc, &ideal, 10_000).unwrap();
        assert_eq!(ideal, rad);
        for d in mc.enumerate_degrees(3, 1000).unwrap() {
            let by_support = !d.is_zero() && d.cell == v1;
            assert_eq!(ideal.contains(&mc, &d), by_support);
        }
    }

    #[test]
    fn full_edge_presents_freely() {
        let mc = edge_complex();
        let p = present_ideal(&mc, GeneratorChoice::Default, 3, 100_000).unwrap();
        assert!(p.squarefree_part.is_empty());
        assert!(p.binomial_part.is_empty());
        assert_eq!(p.variables.len(), 2);
    }

    #[test]
    fn four_cycle_presents_stanley_reisner() {
        let raw = import_simplicial(&[
            vec!["a".into(), "b".into()],
            vec!["b".into(), "c".into()],
            vec!["c".into(), "d".into()],
            vec!["d".into(), "a".into()],
        ]);
        let mc = MonoidalComplex::validate(&raw, &EnumerationLimits::default()).unwrap();
        let p = present_ideal(&mc, GeneratorChoice::Default, 2, 100_000).unwrap();
        assert!(p.binomial_part.is_empty());
        // minimal nonfaces of the 4-cycle: the two diagonals
        assert_eq!(p.squarefree_part.len(), 2);
        let labels: Vec<BTreeSet<String>> = p
            .squarefree_part
            .iter()
            .map(|h| h.iter().map(|&v| p.variables[v].label.clone()).collect())
            .collect();
        assert!(labels.contains(&["a".to_string(), "c".to_string()].into()));
        assert!(labels.contains(&["b".to_string(), "d".to_string()].into()));
    }

    #[test]
    fn binomials_evaluate_equal_nonzero() {
        let mc = edge_complex();
        let p = present_ideal(&mc, GeneratorChoice::Default, 3, 100_000).unwrap();
        for (u, v) in &p.binomial_part {
            let du = p.semantic_degree(&mc, u);
            let dv = p.semantic_degree(&mc, v);
            assert!(du.is_some());
            assert_eq!(du, dv);
        }
    }
}
