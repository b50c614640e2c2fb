//! The complex of face modules and the duality functor: applying the
//! duality to the ring returns the complex itself, applying it twice
//! returns the module's cohomology unchanged, and the top cohomology is
//! the canonical module.

use rand::SeedableRng;
use tfr::cell_topology::EMPTY_CELL;
use tfr::cli_io::fixture_complex;
use tfr::field::FieldSpec;
use tfr::squarefree::{
    dualize, hom_dim, ishida_complex, random_module, sq_cohomology, SqComplex, SqModule,
};

fn main() {
    let field = FieldSpec::Rationals;
    let (mc, _) = fixture_complex("moebius");
    let k = mc.complex();

    let ic = ishida_complex(&mc, field);
    println!("face-module complex of the strip: indices {}..={}", ic.lo, ic.hi());
    for (j, t) in ic.terms.iter().enumerate() {
        println!("  index {}: total dim at bottom stalk {}", ic.lo + j as i64, t.dim_at(EMPTY_CELL));
    }

    // duality applied to the ring reproduces the complex on the nose
    let ring = SqComplex::concentrated(SqModule::free(k, field), 0);
    assert_eq!(dualize(&mc, &ring), ic);
    println!("dual of the ring == face-module complex: true");

    // the top cohomology is the canonical module: supported on the three
    // squares and the three interior edges
    let h = sq_cohomology(k, &ic).unwrap();
    let omega = &h[0];
    let supported: Vec<&str> =
        k.ids().filter(|&c| omega.dim_at(c) > 0).map(|c| k.label(c)).collect();
    println!("canonical module supported on: {supported:?}");

    // double duality preserves cohomology of random small modules
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for _ in 0..5 {
        let m = random_module(&mc, field, &mut rng, 2);
        let dd = dualize(&mc, &dualize(&mc, &SqComplex::concentrated(m.clone(), 0)));
        let h = sq_cohomology(k, &dd).unwrap();
        for (j, hj) in h.iter().enumerate() {
            let index = dd.lo + j as i64;
            for c in k.ids() {
                assert_eq!(hj.dim_at(c), if index == 0 { m.dim_at(c) } else { 0 });
            }
        }
        checked += 1;
    }
    println!("double-dual involution verified on {checked} random modules");

    // morphism spaces between face modules see the poset order
    let e = k.by_label("ux").unwrap();
    let v = k.by_label("u").unwrap();
    let ke = SqModule::face(k, field, e);
    let kv = SqModule::face(k, field, v);
    println!(
        "hom(k[edge], k[vertex]) = {}, hom(k[vertex], k[edge]) = {}",
        hom_dim(k, &ke, &kv),
        hom_dim(k, &kv, &ke)
    );
}
