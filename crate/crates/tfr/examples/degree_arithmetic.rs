//! The partial arithmetic of degrees on the twisted strip of three
//! squares: canonical supports, sums across squares, and products that
//! vanish because no cell contains both factors.

use tfr::cli_io::fixture_complex;

fn main() {
    let (mc, _) = fixture_complex("moebius");
    let k = mc.complex();
    println!("cells: {} (dim {})", k.len(), k.dim());

    // the six labelled vertex generators
    let vars: std::collections::BTreeMap<String, tfr::monoidal::Degree> = mc
        .generator_degrees()
        .into_iter()
        .filter_map(|(d, l)| l.map(|l| (l, d)))
        .collect();
    println!("generators: {:?}", vars.keys().collect::<Vec<_>>());

    // x + v and u + y land on the same interior degree of the first square
    let xv = mc.add(&vars["x"], &vars["v"]).unwrap();
    let uy = mc.add(&vars["u"], &vars["y"]).unwrap();
    assert_eq!(xv, uy);
    println!(
        "deg(x) + deg(v) = deg(u) + deg(y) at cell `{}`, coords {:?}",
        k.label(xv.cell),
        xv.coords
    );

    // u + v lives on the shared edge; adding w on top has no common cell,
    // so the monomial product X_u X_v X_w is zero in the ring
    let uv = mc.add(&vars["u"], &vars["v"]).unwrap();
    println!("deg(u) + deg(v) sits at cell `{}`", k.label(uv.cell));
    assert!(mc.add(&uv, &vars["w"]).is_none());
    println!("(u + v) + w is undefined: X_u*X_v*X_w = 0");

    // divisibility goes through canonical subtraction
    assert!(mc.divides(&vars["x"], &xv));
    assert!(!mc.divides(&vars["w"], &xv));
    println!("x divides x+v: true; w divides x+v: false");

    // enumerate all degrees of generator length at most two
    let degrees = mc.enumerate_degrees(2, 10_000).unwrap();
    println!("degrees of length <= 2: {}", degrees.len());
    let interior = degrees.iter().filter(|d| k.dim_of(d.cell) == 2).count();
    println!("  of which interior to a square: {interior}");
}
