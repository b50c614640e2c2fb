//! Input documents, built-in fixtures, and the subcommand entry points.
//!
//! A document carries the coefficient field, exactly one complex stanza
//! (explicit monoidal data, a simplicial facet list, or an ambient fan),
//! and enumeration options. Integers may be JSON numbers or decimal
//! strings, so arbitrary precision survives the wire format bit-exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cell_topology::{RawComplex, SphereCheck};
use crate::cohomology::{
    cech_oracle_dim, local_cohomology_dim, ring_properties, CohomologyReport, DegreeSpec,
};
use crate::field::FieldSpec;
use crate::monoidal::{
    import_fan, import_simplicial, MonoidalComplex, RawCellData, RawGluing, RawMonoidal,
};
use crate::polyhedral::EnumerationLimits;
use crate::presentation::{present_ideal, GeneratorChoice, Presentation, PresentationError};
use crate::squarefree::{
    dualize, ishida_complex, random_module, sq_cohomology, SqComplex, SqModule,
};
use crate::zlinalg::ZVec;

/// Integer that deserializes from a JSON number or a decimal string and
/// serializes losslessly (numbers while they fit, strings past 64 bits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(n) => s.serialize_i64(n),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(n) => Ok(JsonInt(BigInt::from(n))),
            Repr::Str(s) => s
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|e| serde::de::Error::custom(format!("bad integer `{s}`: {e}"))),
        }
    }
}

fn to_zvec(v: &[JsonInt]) -> ZVec {
    v.iter().map(|x| x.0.clone()).collect()
}

fn from_zvec(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().map(|x| JsonInt(x.clone())).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellJson {
    pub id: String,
    pub dim: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub cells: Vec<CellJson>,
    /// Pairs `[upper, lower]`.
    pub coverings: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellDataJson {
    pub semigroup_generators: Vec<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_generators: Option<Vec<Vec<JsonInt>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Option<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GluingJson {
    pub upper: String,
    pub lower: String,
    pub matrix: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidalJson {
    pub complex: ComplexJson,
    pub cells: BTreeMap<String, CellDataJson>,
    pub gluings: Vec<GluingJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimplicialJson {
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FanJson {
    pub ambient_dim: usize,
    pub cones: Vec<Vec<Vec<JsonInt>>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct OptionsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumeration_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_ambient: Option<usize>,
}

fn default_field() -> FieldSpec {
    FieldSpec::Rationals
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputDocument {
    #[serde(default = "default_field")]
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoidal: Option<MonoidalJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplicial: Option<SimplicialJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanJson>,
    #[serde(default)]
    pub options: OptionsJson,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("JSON parse error at {pointer}: {message}")]
    Parse { pointer: String, message: String },
    #[error("document must contain exactly one of `monoidal`, `simplicial`, `fan` (found {0})")]
    StanzaCount(usize),
    #[error("field specification invalid: {0}")]
    Field(String),
    #[error("fan import failed: {0}")]
    Fan(String),
    #[error("complex is invalid:\n{}", .0.join("\n"))]
    Invalid(Vec<String>),
}

pub fn parse_document(json: &str) -> Result<InputDocument, DocError> {
    let doc: InputDocument = serde_json::from_str(json).map_err(|e| DocError::Parse {
        pointer: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let stanzas = usize::from(doc.monoidal.is_some())
        + usize::from(doc.simplicial.is_some())
        + usize::from(doc.fan.is_some());
    if stanzas != 1 {
        return Err(DocError::StanzaCount(stanzas));
    }
    doc.field.validate().map_err(DocError::Field)?;
    Ok(doc)
}

impl InputDocument {
    /// Enumeration limits, with `TFR_ENUM_CAP` taking precedence over the
    /// document options.
    pub fn limits(&self) -> EnumerationLimits {
        let defaults = EnumerationLimits::default();
        let cap = std::env::var("TFR_ENUM_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
            .or(self.options.enumeration_cap)
            .unwrap_or(defaults.max_points);
        EnumerationLimits {
            max_ambient: self.options.max_ambient.unwrap_or(defaults.max_ambient),
            max_points: cap,
        }
    }

    pub fn enumeration_cap(&self) -> usize {
        self.limits().max_points.max(100_000)
    }
}

fn monoidal_to_raw(m: &MonoidalJson) -> RawMonoidal {
    let complex = RawComplex {
        cells: m.complex.cells.iter().map(|c| (c.id.clone(), c.dim)).collect(),
        coverings: m.complex.coverings.iter().map(|[u, l]| (u.clone(), l.clone())).collect(),
    };
    let cells = m
        .cells
        .iter()
        .map(|(k, v)| {
            let labels = v.labels.clone().unwrap_or_default();
            (
                k.clone(),
                RawCellData {
                    semigroup_generators: v
                        .semigroup_generators
                        .iter()
                        .map(|r| to_zvec(r))
                        .collect(),
                    cone_generators: v
                        .cone_generators
                        .as_ref()
                        .map(|g| g.iter().map(|r| to_zvec(r)).collect()),
                    labels,
                },
            )
        })
        .collect();
    let gluings = m
        .gluings
        .iter()
        .map(|g| RawGluing {
            upper: g.upper.clone(),
            lower: g.lower.clone(),
            matrix: g.matrix.iter().map(|r| to_zvec(r)).collect(),
        })
        .collect();
    RawMonoidal { complex, cells, gluings }
}

fn raw_to_monoidal(raw: &RawMonoidal) -> MonoidalJson {
    MonoidalJson {
        complex: ComplexJson {
            cells: raw
                .complex
                .cells
                .iter()
                .map(|(id, dim)| CellJson { id: id.clone(), dim: *dim })
                .collect(),
            coverings: raw
                .complex
                .coverings
                .iter()
                .map(|(u, l)| [u.clone(), l.clone()])
                .collect(),
        },
        cells: raw
            .cells
            .iter()
            .map(|(k, v)| {
                (
                    k.clone(),
                    CellDataJson {
                        semigroup_generators: v
                            .semigroup_generators
                            .iter()
                            .map(|r| from_zvec(r))
                            .collect(),
                        cone_generators: v
                            .cone_generators
                            .as_ref()
                            .map(|g| g.iter().map(|r| from_zvec(r)).collect()),
                        labels: if v.labels.iter().any(Option::is_some) {
                            Some(v.labels.clone())
                        } else {
                            None
                        },
                    },
                )
            })
            .collect(),
        gluings: raw
            .gluings
            .iter()
            .map(|g| GluingJson {
                upper: g.upper.clone(),
                lower: g.lower.clone(),
                matrix: g.matrix.iter().map(|r| from_zvec(r)).collect(),
            })
            .collect(),
    }
}

/// Build and validate the monoidal complex of a document. Returns the
/// complex and human-readable warnings (for example an auto-inserted
/// bottom cell).
pub fn build_complex(doc: &InputDocument) -> Result<(MonoidalComplex, Vec<String>), DocError> {
    let limits = doc.limits();
    let mut warnings = Vec::new();
    let raw = if let Some(m) = &doc.monoidal {
        let raw = monoidal_to_raw(m);
        if !raw.complex.cells.iter().any(|(_, d)| *d == -1) {
            warnings.push("bottom cell missing from input; inserted `{}`".to_string());
        }
        raw
    } else if let Some(s) = &doc.simplicial {
        import_simplicial(&s.facets)
    } else if let Some(f) = &doc.fan {
        let cones: Vec<Vec<ZVec>> =
            f.cones.iter().map(|c| c.iter().map(|r| to_zvec(r)).collect()).collect();
        import_fan(f.ambient_dim, &cones, &limits).map_err(|e| DocError::Fan(e.to_string()))?
    } else {
        return Err(DocError::StanzaCount(0));
    };
    let mc = MonoidalComplex::validate(&raw, &limits)
        .map_err(|ds| DocError::Invalid(ds.iter().map(|d| d.to_string()).collect()))?;
    Ok((mc, warnings))
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}` (available: {1})")]
    Unknown(String, String),
}

pub const FIXTURE_NAMES: &[&str] =
    &["moebius", "cube_fan", "circle4", "point", "interval", "wedge_triangles", "rp2_6vertex"];

/// The named built-in input document.
pub fn builtin_fixture(name: &str) -> Result<InputDocument, FixtureError> {
    let simplicial = |facets: &[&[&str]]| InputDocument {
        field: FieldSpec::Rationals,
        monoidal: None,
        simplicial: Some(SimplicialJson {
            facets: facets.iter().map(|f| f.iter().map(|s| s.to_string()).collect()).collect(),
        }),
        fan: None,
        options: OptionsJson::default(),
    };
    match name {
        "point" => Ok(simplicial(&[&["v"]])),
        "interval" => Ok(simplicial(&[&["a", "b"]])),
        "circle4" => Ok(simplicial(&[&["a", "b"], &["b", "c"], &["c", "d"], &["d", "a"]])),
        "wedge_triangles" => Ok(simplicial(&[&["1", "2", "3"], &["3", "4", "5"]])),
        // antipodal quotient of the icosahedron: complete 1-skeleton on six
        // vertices, ten triangles
        "rp2_6vertex" => Ok(simplicial(&[
            &["1", "2", "3"],
            &["1", "3", "4"],
            &["1", "4", "5"],
            &["1", "5", "6"],
            &["1", "2", "6"],
            &["2", "3", "5"],
            &["3", "4", "6"],
            &["2", "4", "5"],
            &["3", "5", "6"],
            &["2", "4", "6"],
        ])),
        "cube_fan" => {
            let mut cones = Vec::new();
            for axis in 0..3usize {
                for sign in [1i64, -1] {
                    let mut cone = Vec::new();
                    for s1 in [1i64, -1] {
                        for s2 in [1i64, -1] {
                            let mut ray = [0i64; 3];
                            ray[axis] = sign;
                            ray[(axis + 1) % 3] = s1;
                            ray[(axis + 2) % 3] = s2;
                            cone.push(
                                ray.iter().map(|&x| JsonInt(BigInt::from(x))).collect(),
                            );
                        }
                    }
                    cones.push(cone);
                }
            }
            Ok(InputDocument {
                field: FieldSpec::Rationals,
                monoidal: None,
                simplicial: None,
                fan: Some(FanJson { ambient_dim: 3, cones }),
                options: OptionsJson::default(),
            })
        }
        "moebius" => Ok(InputDocument {
            field: FieldSpec::Rationals,
            monoidal: Some(raw_to_monoidal(&moebius_raw())),
            simplicial: None,
            fan: None,
            options: OptionsJson::default(),
        }),
        other => Err(FixtureError::Unknown(other.to_string(), FIXTURE_NAMES.join(", "))),
    }
}

/// The strip of three unit squares glued with a twist: six vertices
/// `u..z`, nine edges, three square cells. Each square carries the cone
/// over the unit square with its four corner generators; vertices map to
/// corners cyclically, so the three semigroup rings are
/// `k[four corners]/(one diagonal binomial)`.
fn moebius_raw() -> RawMonoidal {
    let corners: [Vec<i64>; 4] = [vec![0, 0, 1], vec![1, 0, 1], vec![1, 1, 1], vec![0, 1, 1]];
    // squares with their cyclic vertex order; adjacent pairs are the sides
    let squares: [(&str, [&str; 4]); 3] =
        [("Q1", ["x", "u", "v", "y"]), ("Q2", ["v", "y", "z", "w"]), ("Q3", ["x", "u", "z", "w"])];
    let vertices = ["u", "v", "w", "x", "y", "z"];
    let mut raw = RawMonoidal::default();
    for v in vertices {
        raw.complex.cells.push((v.to_string(), 0));
        raw.cells.insert(
            v.to_string(),
            RawCellData {
                semigroup_generators: vec![vec![BigInt::from(1)]],
                cone_generators: None,
                labels: vec![Some(v.to_string())],
            },
        );
    }
    let edge_label = |a: &str, b: &str| -> String {
        let mut pair = [a, b];
        pair.sort_unstable();
        format!("{}{}", pair[0], pair[1])
    };
    let mut edges: BTreeMap<String, (String, String)> = BTreeMap::new();
    for (_, cyc) in &squares {
        for i in 0..4 {
            let (a, b) = (cyc[i], cyc[(i + 1) % 4]);
            let mut pair = [a, b];
            pair.sort_unstable();
            edges.insert(edge_label(a, b), (pair[0].to_string(), pair[1].to_string()));
        }
    }
    for (label, (a, b)) in &edges {
        raw.complex.cells.push((label.clone(), 1));
        raw.cells.insert(
            label.clone(),
            RawCellData {
                semigroup_generators: vec![
                    vec![BigInt::from(0), BigInt::from(1)],
                    vec![BigInt::from(1), BigInt::from(1)],
                ],
                cone_generators: None,
                labels: Vec::new(),
            },
        );
        // the first endpoint sits on the ray (0,1), the second on (1,1)
        raw.complex.coverings.push((label.clone(), a.clone()));
        raw.gluings.push(RawGluing {
            upper: label.clone(),
            lower: a.clone(),
            matrix: vec![vec![BigInt::from(0)], vec![BigInt::from(1)]],
        });
        raw.complex.coverings.push((label.clone(), b.clone()));
        raw.gluings.push(RawGluing {
            upper: label.clone(),
            lower: b.clone(),
            matrix: vec![vec![BigInt::from(1)], vec![BigInt::from(1)]],
        });
    }
    for (q, cyc) in &squares {
        raw.complex.cells.push((q.to_string(), 2));
        raw.cells.insert(
            q.to_string(),
            RawCellData {
                semigroup_generators: corners
                    .iter()
                    .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                    .collect(),
                cone_generators: None,
                labels: Vec::new(),
            },
        );
        let corner_of = |v: &str| -> Vec<BigInt> {
            let pos = cyc.iter().position(|&c| c == v).expect("vertex of the square");
            corners[pos].iter().map(|&x| BigInt::from(x)).collect()
        };
        for i in 0..4 {
            let (a, b) = (cyc[i], cyc[(i + 1) % 4]);
            let label = edge_label(a, b);
            let (first, _) = &edges[&label];
            // edge ray (0,1) carries the first endpoint, (1,1) the second
            let (ca, cb) = if first == a {
                (corner_of(a), corner_of(b))
            } else {
                (corner_of(b), corner_of(a))
            };
            let matrix: Vec<ZVec> =
                (0..3).map(|r| vec![&cb[r] - &ca[r], ca[r].clone()]).collect();
            raw.complex.coverings.push((q.to_string(), label.clone()));
            raw.gluings.push(RawGluing { upper: q.to_string(), lower: label, matrix });
        }
    }
    raw
}

// ---------------------------------------------------------------------
// subcommand surfaces
// ---------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub cells: usize,
    pub dim: i64,
    pub warnings: Vec<String>,
    pub diagnostics: Vec<String>,
    pub sphere_checks: Vec<SphereCheck>,
}

/// Run all validators over a document.
pub fn cmd_validate(doc: &InputDocument) -> ValidationReport {
    match build_complex(doc) {
        Ok((mc, warnings)) => ValidationReport {
            ok: true,
            cells: mc.complex().len(),
            dim: mc.complex().dim(),
            warnings,
            diagnostics: Vec::new(),
            sphere_checks: mc.complex().sphere_checks().to_vec(),
        },
        Err(e) => {
            let diagnostics = match e {
                DocError::Invalid(list) => list,
                other => vec![other.to_string()],
            };
            ValidationReport {
                ok: false,
                cells: 0,
                dim: -1,
                warnings: Vec::new(),
                diagnostics,
                sphere_checks: Vec::new(),
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReportFlags {
    pub ideal: Option<usize>,
    pub cohomology: bool,
    pub props: bool,
    pub duality_check: bool,
    pub oracle_check: Option<usize>,
    pub field_override: Option<FieldSpec>,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Doc(#[from] DocError),
    #[error("presentation failed: {0}")]
    Presentation(#[from] PresentationError),
    #[error("cohomology failed: {0}")]
    Cohomology(#[from] crate::cohomology::CohomologyError),
    #[error("degree enumeration failed: {0}")]
    Degree(#[from] crate::monoidal::DegreeError),
    #[error("oracle sweep found {0} disagreement(s)")]
    OracleMismatch(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub degree_bound: usize,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub modules_checked: usize,
    pub involution_holds: bool,
    pub dual_of_ring_is_face_complex: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub generator_length_bound: usize,
    pub degrees_checked: usize,
    pub comparisons: usize,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub field: FieldSpec,
    pub cells: usize,
    pub dim: i64,
    pub incidence_convention: String,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

/// Aggregate report over a document: presentation, cohomology and
/// properties, duality spot-checks, and the oracle sweep, by flags.
pub fn cmd_report(doc: &InputDocument, flags: &ReportFlags) -> Result<FullReport, ReportError> {
    let field = flags.field_override.unwrap_or(doc.field);
    let (mc, warnings) = build_complex(doc)?;
    let cap = doc.enumeration_cap();
    let mut report = FullReport {
        field,
        cells: mc.complex().len(),
        dim: mc.complex().dim(),
        incidence_convention: "vertex over bottom fixed to +1; free signs zeroed".to_string(),
        warnings,
        ideal: None,
        cohomology: None,
        duality: None,
        oracle: None,
    };
    if let Some(bound) = flags.ideal.or(doc.options.degree_bound) {
        let p = present_ideal(&mc, GeneratorChoice::Default, bound, cap)?;
        report.ideal = Some(IdealReport {
            degree_bound: bound,
            variables: p.variables.iter().map(|v| v.label.clone()).collect(),
            generators: p.generator_strings(),
        });
    }
    if flags.cohomology || flags.props {
        report.cohomology = Some(ring_properties(&mc, field)?);
    }
    if flags.duality_check {
        report.duality = Some(duality_check(&mc, field, 25)?);
    }
    if let Some(bound) = flags.oracle_check {
        let oracle = oracle_sweep(&mc, field, bound, cap)?;
        let mismatches = oracle.mismatches.len();
        report.oracle = Some(oracle);
        if mismatches > 0 {
            return Err(ReportError::OracleMismatch(mismatches));
        }
    }
    Ok(report)
}

/// Involution check: cohomology dimensions of the double dual must equal
/// the module's own, for randomized small modules, plus the structural
/// identity for the ring itself.
pub fn duality_check(
    mc: &MonoidalComplex,
    field: FieldSpec,
    count: usize,
) -> Result<DualityReport, ReportError> {
    use rand::SeedableRng;
    let k = mc.complex();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x746f7269);
    let mut ok = true;
    for _ in 0..count {
        let m = random_module(mc, field, &mut rng, 2);
        let dd = dualize(mc, &dualize(mc, &SqComplex::concentrated(m.clone(), 0)));
        let h = sq_cohomology(k, &dd).map_err(crate::cohomology::CohomologyError::from)?;
        for (j, hj) in h.iter().enumerate() {
            let index = dd.lo + j as i64;
            for c in k.ids() {
                let expected = if index == 0 { m.dim_at(c) } else { 0 };
                if hj.dim_at(c) != expected {
                    ok = false;
                }
            }
        }
    }
    let ring = SqComplex::concentrated(SqModule::free(k, field), 0);
    let structural = dualize(mc, &ring) == ishida_complex(mc, field);
    Ok(DualityReport {
        modules_checked: count,
        involution_holds: ok,
        dual_of_ring_is_face_complex: structural,
    })
}

/// Exhaustive oracle sweep: compare the Čech route with the topological
/// route for every degree `±a` up to the generator-length bound and every
/// cohomological index in range.
pub fn oracle_sweep(
    mc: &MonoidalComplex,
    field: FieldSpec,
    bound: usize,
    cap: usize,
) -> Result<OracleReport, ReportError> {
    let free = SqModule::free(mc.complex(), field);
    let degrees = mc.enumerate_degrees(bound, cap)?;
    let d = mc.complex().dim();
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for a in &degrees {
        let specs: Vec<DegreeSpec> = if a.is_zero() {
            vec![DegreeSpec::Zero]
        } else {
            vec![DegreeSpec::Minus(a.clone()), DegreeSpec::Plus(a.clone())]
        };
        for spec in specs {
            for i in 0..=(d + 1) {
                let oracle = cech_oracle_dim(mc, field, i, &spec);
                let direct = local_cohomology_dim(mc, &free, i, &spec);
                comparisons += 1;
                if oracle != direct {
                    mismatches.push(format!(
                        "i={i}, degree {spec:?}: oracle {oracle} vs direct {direct}"
                    ));
                }
            }
        }
    }
    Ok(OracleReport {
        generator_length_bound: bound,
        degrees_checked: degrees.len(),
        comparisons,
        mismatches,
    })
}

/// Plain-text rendering of a report.
pub fn render_report(r: &FullReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", r.field);
    let _ = writeln!(out, "cells: {} (dim {})", r.cells, r.dim);
    let _ = writeln!(out, "incidence convention: {}", r.incidence_convention);
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    if let Some(ideal) = &r.ideal {
        let _ = writeln!(out, "\npresentation (degree bound {}):", ideal.degree_bound);
        let _ = writeln!(out, "  variables: {}", ideal.variables.join(", "));
        if ideal.generators.is_empty() {
            let _ = writeln!(out, "  ideal: (0)");
        } else {
            for g in &ideal.generators {
                let _ = writeln!(out, "  {g}");
            }
        }
    }
    if let Some(c) = &r.cohomology {
        let _ = writeln!(out, "\nreduced cohomology of the space: {:?}", c.reduced_cohomology);
        let _ = writeln!(
            out,
            "verdicts over {}: Buchsbaum={}, Cohen-Macaulay={}, Gorenstein*={}",
            c.field, c.buchsbaum, c.cohen_macaulay, c.gorenstein_star
        );
        if let Some(canonical) = &c.canonical_module {
            match &canonical.ideal_generators {
                Some(gens) => {
                    let rendered: Vec<String> = gens
                        .iter()
                        .map(|g| format!("t^({};{})", g.cell, g.coords.join(",")))
                        .collect();
                    let _ = writeln!(out, "canonical module: ideal ({})", rendered.join(", "));
                }
                None => {
                    let _ = writeln!(out, "canonical module: abstract (no monomial embedding)");
                }
            }
        }
        if let Some(p) = &c.poincare {
            let _ = writeln!(out, "Poincare table (H^i(X) vs H^(d-i)(X, or)):");
            for row in p {
                let _ = writeln!(out, "  i={}: {} vs {}", row.i, row.h_space, row.h_orientation);
            }
        }
        let _ = writeln!(out, "local cohomology, nonzero rows (H^i at cell):");
        for row in &c.local_cohomology {
            if row.dim > 0 {
                let _ = writeln!(out, "  H^{} at `{}`: {}", row.i, row.cell, row.dim);
            }
        }
    }
    if let Some(d) = &r.duality {
        let _ = writeln!(
            out,
            "\nduality: {} random modules, involution holds: {}, dual of ring is the face complex: {}",
            d.modules_checked, d.involution_holds, d.dual_of_ring_is_face_complex
        );
    }
    if let Some(o) = &r.oracle {
        if o.mismatches.is_empty() {
            let _ = writeln!(
                out,
                "\noracle sweep: all agreements ({} degrees, {} comparisons, bound {})",
                o.degrees_checked, o.comparisons, o.generator_length_bound
            );
        } else {
            let _ = writeln!(out, "\noracle sweep: {} MISMATCHES", o.mismatches.len());
            for m in &o.mismatches {
                let _ = writeln!(out, "  {m}");
            }
        }
    }
    out
}

/// Convenience for tests and examples: fixture name to validated complex.
pub fn fixture_complex(name: &str) -> (MonoidalComplex, InputDocument) {
    let doc = builtin_fixture(name).expect("known fixture");
    let (mc, _) = build_complex(&doc).expect("fixtures validate");
    (mc, doc)
}

/// Fixture presentation helper shared by examples and the acceptance
/// suite.
pub fn fixture_presentation(name: &str, bound: usize) -> Presentation {
    let (mc, doc) = fixture_complex(name);
    present_ideal(&mc, GeneratorChoice::Default, bound, doc.enumeration_cap())
        .expect("fixture presents")
}
