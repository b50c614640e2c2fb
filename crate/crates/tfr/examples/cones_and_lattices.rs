//! Exact polyhedral arithmetic: facet computation, the face lattice,
//! membership in three flavors, and complete normality checks.

use tfr::polyhedral::{
    localized_membership, membership, normality_check, Cone, EnumerationLimits, LatticeBasis,
    MembershipMode,
};
use tfr::zlinalg::zvec_from_i64;

fn main() {
    // the cone over the unit square sitting at height one
    let square = Cone::from_generators(
        vec![
            zvec_from_i64(&[0, 0, 1]),
            zvec_from_i64(&[1, 0, 1]),
            zvec_from_i64(&[1, 1, 1]),
            zvec_from_i64(&[0, 1, 1]),
        ],
        3,
    )
    .unwrap();
    println!("square cone facet normals: {:?}", square.facets);
    let faces = square.faces();
    println!("face lattice: {} faces", faces.len());
    for f in &faces {
        println!("  dim {}: generators {:?}", f.dim, f.generators);
    }

    let boundary_point = zvec_from_i64(&[1, 0, 1]);
    println!(
        "(1,0,1): in cone = {}, interior = {}",
        membership(&boundary_point, &square, MembershipMode::Cone).unwrap(),
        membership(&boundary_point, &square, MembershipMode::RelativeInterior).unwrap(),
    );

    // localization at a ray keeps only the facets through the ray
    let l3 = LatticeBasis::standard(3);
    let ray = square.face_spanned_by(&[zvec_from_i64(&[0, 0, 1])]).unwrap();
    let opposite = square.face_spanned_by(&[zvec_from_i64(&[1, 1, 1])]).unwrap();
    let v = zvec_from_i64(&[1, 0, -1]);
    println!(
        "(1,0,-1) reachable from the ray (0,0,1): {}; from (1,1,1): {}",
        localized_membership(&v, &square, &ray, &l3).unwrap(),
        localized_membership(&v, &square, &opposite, &l3).unwrap(),
    );

    // normality: the square cone is normal over Z^3, while (1,0),(1,2)
    // misses (1,1) over Z^2
    let limits = EnumerationLimits::default();
    let r = normality_check(&square.generators, &l3, &limits).unwrap();
    println!("square cone normal over Z^3: {}", r.normal);
    let gens = vec![zvec_from_i64(&[1, 0]), zvec_from_i64(&[1, 2])];
    let r = normality_check(&gens, &LatticeBasis::standard(2), &limits).unwrap();
    println!("(1,0),(1,2) normal over Z^2: {} (witness {:?})", r.normal, r.witness);
    // ... but the same generators are normal inside their own lattice
    let own = LatticeBasis::from_generators(gens.clone(), 2);
    let r = normality_check(&gens, &own, &limits).unwrap();
    println!("(1,0),(1,2) normal over their own lattice: {}", r.normal);
}
