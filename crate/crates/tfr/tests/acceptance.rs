//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;

use tfr::cell_topology::{boundary_squares_to_zero, EMPTY_CELL};
use tfr::cli_io::{duality_check, fixture_complex, fixture_presentation, oracle_sweep};
use tfr::cohomology::{
    cech_oracle_dim, local_cohomology_dim, reduced_space_cohomology, ring_properties, DegreeSpec,
};
use tfr::field::FieldSpec;
use tfr::monoidal::{Degree, MonoidalComplex};
use tfr::polyhedral::{normality_check, EnumerationLimits, LatticeBasis};
use tfr::presentation::{radical, MonomialIdeal};
use tfr::squarefree::{ishida_complex, sq_cohomology, SqModule};
use tfr::zlinalg::zvec_from_i64;

const Q: FieldSpec = FieldSpec::Rationals;

/// Variable degrees of a fixture keyed by their labels.
fn labelled_degrees(mc: &MonoidalComplex) -> std::collections::BTreeMap<String, Degree> {
    mc.generator_degrees()
        .into_iter()
        .filter_map(|(d, l)| l.map(|l| (l, d)))
        .collect()
}

#[test]
fn criterion_1_moebius_presentation() {
    let p = fixture_presentation("moebius", 3);
    // binomials, compared as unordered pairs of variable multisets
    let label_monomial = |e: &tfr::presentation::Exponent| -> BTreeSet<(String, u32)> {
        e.iter().map(|(v, p2)| (p.variables[*v].label.clone(), *p2)).collect()
    };
    let binomials: BTreeSet<BTreeSet<BTreeSet<(String, u32)>>> = p
        .binomial_part
        .iter()
        .map(|(u, v)| [label_monomial(u), label_monomial(v)].into_iter().collect())
        .collect();
    let pair = |a: &[&str], b: &[&str]| -> BTreeSet<BTreeSet<(String, u32)>> {
        [a, b].iter()
            .map(|m| m.iter().map(|s| (s.to_string(), 1u32)).collect())
            .collect()
    };
    let expected: BTreeSet<_> = [
        pair(&["x", "v"], &["u", "y"]),
        pair(&["v", "z"], &["y", "w"]),
        pair(&["x", "z"], &["u", "w"]),
    ]
    .into_iter()
    .collect();
    assert_eq!(binomials, expected, "binomial part");
    // squarefree part: exactly the two cubics
    let monomials: BTreeSet<BTreeSet<String>> = p
        .squarefree_part
        .iter()
        .map(|h| h.iter().map(|&v| p.variables[v].label.clone()).collect())
        .collect();
    let expected: BTreeSet<BTreeSet<String>> = [
        ["u", "v", "w"].iter().map(|s| s.to_string()).collect(),
        ["u", "v", "z"].iter().map(|s| s.to_string()).collect(),
    ]
    .into_iter()
    .collect();
    assert_eq!(monomials, expected, "squarefree part");
    // X_x X_y X_z rewrites to zero modulo the five generators
    let idx = |l: &str| p.variables.iter().position(|v| v.label == l).unwrap();
    let xyz: tfr::presentation::Exponent =
        [(idx("x"), 1), (idx("y"), 1), (idx("z"), 1)].into_iter().collect();
    assert!(p.reduces_to_zero(&xyz));
    // the completeness certificate ran inside present_ideal; reaching this
    // point means it passed through degree 3
    println!("[PASS] criterion 1: moebius presentation is the five expected generators");
}

#[test]
fn criterion_2_moebius_properties() {
    let (mc, _) = fixture_complex("moebius");
    let report = ring_properties(&mc, Q).unwrap();
    assert!(report.buchsbaum, "Buchsbaum");
    assert!(!report.cohen_macaulay, "not Cohen-Macaulay");
    let vars = labelled_degrees(&mc);
    let sum = |a: &str, b: &str| mc.add(&vars[a], &vars[b]).unwrap();
    let expected: BTreeSet<Degree> = [
        sum("x", "u"),
        sum("z", "w"),
        sum("v", "y"),
        sum("x", "z"),
        sum("y", "w"),
        sum("x", "v"),
    ]
    .into_iter()
    .collect();
    let canonical = report.canonical_module.expect("Buchsbaum ring has a canonical module");
    let got: BTreeSet<Degree> = canonical
        .ideal_generator_degrees
        .expect("canonical module embeds as a monomial ideal")
        .into_iter()
        .collect();
    assert_eq!(got, expected, "canonical module ideal generators");
    // graded pieces: one at degrees interior to an inner edge, zero on the
    // boundary of the strip
    let dim_at = |label: &str| {
        canonical.dims.iter().find(|(l, _)| l == label).map(|(_, d)| *d).unwrap()
    };
    assert_eq!(dim_at("ux"), 1, "interior edge");
    assert_eq!(dim_at("uv"), 0, "boundary edge");
    println!("[PASS] criterion 2: moebius is Buchsbaum, not CM, with the expected canonical ideal");
}

#[test]
fn criterion_3_cube_gorenstein_star() {
    let (mc, _) = fixture_complex("cube_fan");
    let report = ring_properties(&mc, Q).unwrap();
    assert!(report.gorenstein_star, "Gorenstein*");
    let ic = ishida_complex(&mc, Q);
    let h = sq_cohomology(mc.complex(), &ic).unwrap();
    let top = &h[0]; // index -3 = lowest
    assert_eq!(ic.lo, -3);
    for c in mc.complex().ids() {
        if c != EMPTY_CELL {
            assert_eq!(top.dim_at(c), 1, "top cohomology stalk at {}", mc.complex().label(c));
        }
    }
    // the canonical module embeds with all transitions isomorphisms, i.e.
    // it is the ring: the ideal is generated by the zero degree alone
    let canonical = report.canonical_module.expect("Gorenstein* ring is Buchsbaum");
    assert_eq!(canonical.ideal_generator_degrees, Some(vec![Degree::zero()]));
    println!("[PASS] criterion 3: cube fan is Gorenstein* with one-dimensional top stalks");
}

#[test]
fn criterion_4_degree_zero_pieces() {
    let (mc, _) = fixture_complex("circle4");
    let free = SqModule::free(mc.complex(), Q);
    let dims: Vec<usize> =
        (0..3).map(|i| local_cohomology_dim(&mc, &free, i, &DegreeSpec::Zero)).collect();
    assert_eq!(dims, vec![0, 0, 1], "circle");
    let (mc, _) = fixture_complex("point");
    let free = SqModule::free(mc.complex(), Q);
    for i in 0..=2 {
        assert_eq!(local_cohomology_dim(&mc, &free, i, &DegreeSpec::Zero), 0, "point at {i}");
    }
    // the only nonvanishing pieces sit at i = 1 in negative degrees
    for a in mc.enumerate_degrees(2, 1000).unwrap() {
        for i in 0..=2 {
            let dim = local_cohomology_dim(&mc, &free, i, &DegreeSpec::Minus(a.clone()));
            let expected = usize::from(i == 1 && !a.is_zero());
            assert_eq!(dim, expected);
        }
    }
    println!("[PASS] criterion 4: degree-zero local cohomology of the circle and the point");
}

#[test]
fn criterion_5_oracle_equivalence() {
    for name in ["point", "interval", "circle4", "moebius", "cube_fan"] {
        let (mc, doc) = fixture_complex(name);
        let sweep = oracle_sweep(&mc, Q, 2, doc.enumeration_cap()).unwrap();
        assert!(
            sweep.mismatches.is_empty(),
            "{name}: {} mismatches: {:?}",
            sweep.mismatches.len(),
            sweep.mismatches
        );
        println!(
            "  {name}: {} degrees, {} comparisons, all agree",
            sweep.degrees_checked, sweep.comparisons
        );
    }
    println!("[PASS] criterion 5: Čech oracle equals the topological route on all five fixtures");
}

#[test]
fn criterion_6_duality_involution() {
    for name in ["point", "interval", "circle4", "moebius", "cube_fan"] {
        let (mc, _) = fixture_complex(name);
        let report = duality_check(&mc, Q, 25).unwrap();
        assert!(report.involution_holds, "{name}: double dual changed cohomology");
        assert!(report.dual_of_ring_is_face_complex, "{name}: dual of the ring");
    }
    println!("[PASS] criterion 6: duality squares to the identity; dual of R is the face complex");
}

#[test]
fn criterion_7_characteristic_dependence() {
    let (mc, _) = fixture_complex("rp2_6vertex");
    for (field, cm) in
        [(FieldSpec::Rationals, true), (FieldSpec::Prime(3), true), (FieldSpec::Prime(2), false)]
    {
        let report = ring_properties(&mc, field).unwrap();
        assert_eq!(report.cohen_macaulay, cm, "CM over {field}");
        // degree-zero pieces agree with reduced cohomology (shifted by
        // one), via both the direct route and the independent oracle
        let reduced = reduced_space_cohomology(&mc, field);
        let free = SqModule::free(mc.complex(), field);
        for i in 0..=3i64 {
            let expected =
                if i >= 1 { reduced.get((i - 1) as usize).copied().unwrap_or(0) } else { 0 };
            assert_eq!(
                local_cohomology_dim(&mc, &free, i, &DegreeSpec::Zero),
                expected,
                "direct route over {field} at {i}"
            );
            assert_eq!(
                cech_oracle_dim(&mc, field, i, &DegreeSpec::Zero),
                expected,
                "oracle over {field} at {i}"
            );
        }
    }
    println!("[PASS] criterion 7: projective plane is CM over Q and F_3, not over F_2");
}

#[test]
fn criterion_8_poincare_duality() {
    for name in ["moebius", "cube_fan"] {
        let (mc, _) = fixture_complex(name);
        let report = ring_properties(&mc, Q).unwrap();
        let table = report.poincare.expect("Buchsbaum fixtures carry the table");
        for row in &table {
            assert_eq!(row.h_space, row.h_orientation, "{name} at i={}", row.i);
        }
    }
    println!("[PASS] criterion 8: Poincaré pairing matches on the strip and the sphere");
}

#[test]
fn criterion_9_structural_invariants() {
    // signed boundaries square to zero for every synthesized incidence
    for name in tfr::cli_io::FIXTURE_NAMES {
        let (mc, _) = fixture_complex(name);
        assert!(
            boundary_squares_to_zero(mc.complex(), mc.incidence()),
            "{name}: boundary does not square to zero"
        );
        // functoriality of every term and every cohomology module of the
        // face complex (constructors verify; revalidate explicitly here)
        let ic = ishida_complex(&mc, Q);
        ic.validate(mc.complex()).unwrap();
        for module in sq_cohomology(mc.complex(), &ic).unwrap() {
            module.revalidate(mc.complex()).unwrap();
        }
    }
    // radical idempotence on sample ideals
    for name in ["point", "circle4", "moebius"] {
        let (mc, _) = fixture_complex(name);
        for (d, _) in mc.generator_degrees() {
            let doubled = mc.add(&d, &d).unwrap();
            let ideal = MonomialIdeal::new(&mc, vec![doubled]);
            let rad = radical(&mc, &ideal, 100_000).unwrap();
            let rad2 = radical(&mc, &rad, 100_000).unwrap();
            assert_eq!(rad, rad2, "{name}: radical not idempotent");
            assert!(ideal.generators().iter().all(|g| rad.contains(&mc, g)));
        }
    }
    // the three normality verdicts
    let limits = EnumerationLimits::default();
    let l2 = LatticeBasis::standard(2);
    let n2 = normality_check(
        &[zvec_from_i64(&[1, 0]), zvec_from_i64(&[0, 1])],
        &l2,
        &limits,
    )
    .unwrap();
    assert!(n2.normal);
    let gap = normality_check(&[zvec_from_i64(&[1, 0]), zvec_from_i64(&[1, 2])], &l2, &limits)
        .unwrap();
    assert!(!gap.normal);
    assert_eq!(gap.witness, Some(zvec_from_i64(&[1, 1])));
    let square = normality_check(
        &[
            zvec_from_i64(&[0, 0, 1]),
            zvec_from_i64(&[1, 0, 1]),
            zvec_from_i64(&[1, 1, 1]),
            zvec_from_i64(&[0, 1, 1]),
        ],
        &LatticeBasis::standard(3),
        &limits,
    )
    .unwrap();
    assert!(square.normal);
    println!("[PASS] criterion 9: boundary, functoriality, radical, and normality invariants");
}
