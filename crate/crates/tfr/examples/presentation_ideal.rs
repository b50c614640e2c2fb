//! Presentation ideals: the twisted strip needs three binomials and two
//! cubic monomials; a simplicial complex needs only its minimal nonfaces.

use tfr::cli_io::{fixture_complex, fixture_presentation};
use tfr::presentation::{graded_primes, radical, MonomialIdeal};

fn main() {
    let p = fixture_presentation("moebius", 3);
    println!("moebius presentation, degree bound 3:");
    println!("  variables: {}", p.variables.iter().map(|v| v.label.clone()).collect::<Vec<_>>().join(", "));
    for g in p.generator_strings() {
        println!("  {g}");
    }
    // a squarefree monomial outside the emitted generators still reduces
    let idx = |l: &str| p.variables.iter().position(|v| v.label == l).unwrap();
    let xyz: tfr::presentation::Exponent =
        [(idx("x"), 1), (idx("y"), 1), (idx("z"), 1)].into_iter().collect();
    println!("  X_x*X_y*X_z reduces to zero: {}", p.reduces_to_zero(&xyz));

    // Stanley-Reisner: the 4-cycle's ideal is its two diagonals
    let p = fixture_presentation("circle4", 2);
    println!("\n4-cycle presentation: {:?}", p.generator_strings());

    // graded primes biject with cells; the radical of a power drops it
    let (mc, _) = fixture_complex("circle4");
    let primes = graded_primes(&mc);
    println!("\ngraded primes of the 4-cycle: {} (one per cell)", primes.len());
    let (a, _) = &mc.generator_degrees()[0];
    let square = mc.add(a, a).unwrap();
    let ideal = MonomialIdeal::new(&mc, vec![square]);
    let rad = radical(&mc, &ideal, 100_000).unwrap();
    println!(
        "radical of a squared vertex generator has {} generator(s) of coords {:?}",
        rad.generators().len(),
        rad.generators()[0].coords
    );
}
