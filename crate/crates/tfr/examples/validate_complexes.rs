//! Validate regular cell complexes: a good square boundary, and a gluing
//! of two triangles that violates the intersection property.

use tfr::cell_topology::{
    boundary_squares_to_zero, cellular_complex, synthesize_incidence, CellComplex,
    ConstantCoefficients, RawComplex, Support,
};
use tfr::field::FieldSpec;

fn main() {
    // the boundary of a square: four vertices, four edges
    let square = RawComplex {
        cells: vec![
            ("a".into(), 0),
            ("b".into(), 0),
            ("c".into(), 0),
            ("d".into(), 0),
            ("ab".into(), 1),
            ("bc".into(), 1),
            ("cd".into(), 1),
            ("da".into(), 1),
        ],
        coverings: vec![
            ("ab".into(), "a".into()),
            ("ab".into(), "b".into()),
            ("bc".into(), "b".into()),
            ("bc".into(), "c".into()),
            ("cd".into(), "c".into()),
            ("cd".into(), "d".into()),
            ("da".into(), "d".into()),
            ("da".into(), "a".into()),
        ],
    };
    let k = CellComplex::validate(&square).expect("the square boundary is regular");
    println!("square boundary: {} cells, dim {}", k.len(), k.dim());
    for check in k.sphere_checks() {
        println!("  interval below `{}` is a homology sphere: {}", check.cell, check.is_homology_sphere);
    }

    // an incidence function makes the signed boundary square to zero
    let eps = synthesize_incidence(&k).unwrap();
    assert!(boundary_squares_to_zero(&k, &eps));
    let coeffs = ConstantCoefficients(FieldSpec::Rationals);
    let cochain = cellular_complex(&k, &eps, &coeffs, Support::All, true);
    println!("reduced cohomology of the circle: {:?}", cochain.cohomology_dims());

    // two triangles sharing an edge AND the opposite vertex: the cells T,
    // T' have two maximal common lower bounds, so the poset cannot come
    // from a regular cell complex
    let bad = RawComplex {
        cells: vec![
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
        ],
        coverings: [
            ("e12", "1"),
            ("e12", "2"),
            ("a13", "1"),
            ("a13", "3"),
            ("a23", "2"),
            ("a23", "3"),
            ("b13", "1"),
            ("b13", "3"),
            ("b23", "2"),
            ("b23", "3"),
            ("T", "e12"),
            ("T", "a13"),
            ("T", "a23"),
            ("T'", "e12"),
            ("T'", "b13"),
            ("T'", "b23"),
        ]
        .iter()
        .map(|(u, l)| (u.to_string(), l.to_string()))
        .collect(),
    };
    match CellComplex::validate(&bad) {
        Ok(_) => unreachable!("the gluing is not regular"),
        Err(diags) => {
            println!("\nnon-regular gluing rejected with:");
            for d in diags {
                println!("  {d}");
            }
        }
    }
}
