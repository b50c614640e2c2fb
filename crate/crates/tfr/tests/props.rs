//! Property-based invariants for the exact arithmetic layers.

use proptest::prelude::*;

use tfr::monoidal::{import_simplicial, MonoidalComplex};
use tfr::polyhedral::{Cone, EnumerationLimits};
use tfr::zlinalg::{zvec_from_i64, ZMat};

fn edge_complex() -> MonoidalComplex {
    let raw = import_simplicial(&[vec!["1".into(), "2".into()]]);
    MonoidalComplex::validate(&raw, &EnumerationLimits::default()).unwrap()
}

proptest! {
    // the Hermite normal form is a lattice invariant: mixing rows by
    // elementary unimodular operations leaves it unchanged
    #[test]
    fn hnf_is_a_lattice_invariant(
        entries in proptest::collection::vec(-6i64..=6, 9),
        mix in proptest::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..6),
    ) {
        let rows: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let m = ZMat::from_i64(rows.clone(), 3);
        let mut mixed = rows;
        for (i, j, c) in mix {
            if i != j {
                let adds: Vec<i64> = mixed[j].iter().map(|x| c * x).collect();
                for (cell, add) in mixed[i].iter_mut().zip(adds) {
                    *cell += add;
                }
            }
        }
        let m2 = ZMat::from_i64(mixed, 3);
        prop_assert_eq!(m.row_hnf(), m2.row_hnf());
    }

    // cone and interior membership are invariant under positive scaling
    #[test]
    fn cone_membership_scales(x in -4i64..=4, y in -4i64..=4, z in -4i64..=4, s in 1i64..=5) {
        let cone = Cone::from_generators(
            vec![
                zvec_from_i64(&[0, 0, 1]),
                zvec_from_i64(&[1, 0, 1]),
                zvec_from_i64(&[1, 1, 1]),
                zvec_from_i64(&[0, 1, 1]),
            ],
            3,
        )
        .unwrap();
        let v = zvec_from_i64(&[x, y, z]);
        let sv = zvec_from_i64(&[s * x, s * y, s * z]);
        prop_assert_eq!(cone.contains(&v).unwrap(), cone.contains(&sv).unwrap());
        prop_assert_eq!(cone.relint_contains(&v).unwrap(), cone.relint_contains(&sv).unwrap());
    }

    // canonicalization is idempotent and addition commutes on the free
    // degree monoid of an edge
    #[test]
    fn degree_canonicalization_and_commutativity(
        a in 0i64..=5, b in 0i64..=5, c in 0i64..=5, d in 0i64..=5,
    ) {
        let mc = edge_complex();
        let edge = mc.complex().by_label("1,2").unwrap();
        let p = mc.support(edge, &zvec_from_i64(&[a, b])).unwrap();
        let q = mc.support(edge, &zvec_from_i64(&[c, d])).unwrap();
        prop_assert_eq!(&mc.support(p.cell, &p.coords).unwrap(), &p);
        prop_assert_eq!(mc.add(&p, &q), mc.add(&q, &p));
        // sums agree with ambient coordinate addition
        let s = mc.add(&p, &q).unwrap();
        let pushed = mc.push_to(&s, edge).unwrap();
        prop_assert_eq!(pushed, zvec_from_i64(&[a + c, b + d]));
    }
}
