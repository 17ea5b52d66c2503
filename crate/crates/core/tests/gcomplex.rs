mod common;

use proptest::prelude::*;

use common::{groups, invariant_complex};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subdivision_is_type_preserving_and_keeps_euler(gi in 0..6usize, copies in 1..=2usize, seeds in prop::collection::vec(prop::collection::vec(0..8usize, 1..=3), 1..=3)) {
        let (m, gens) = groups()[gi].clone();
        let x = invariant_complex(m, &gens, copies, &seeds, false);
        let sd = x.subdivide();
        prop_assert!(sd.is_type_preserving());
        let v = sd.validate();
        prop_assert!(v.simplicial && v.type_preserving);
        prop_assert_eq!(sd.complex().euler(), x.complex().euler());
        // every vertex of the subdivision is a barycenter of a simplex of x
        prop_assert_eq!(sd.complex().count(0), x.complex().total());
    }

    #[test]
    fn fixed_sets_are_subcomplexes(x in common::arb_gcomplex()) {
        for t in x.group().elements() {
            let f = x.fixed_by_element(t).unwrap();
            prop_assert!(f.is_subcomplex_of(x.complex()));
            for s in f.simplices(0) {
                prop_assert_eq!(x.act_vertex(t, s[0]), s[0]);
            }
        }
    }

    #[test]
    fn stabilizers_are_conjugate_along_orbits(x in common::arb_gcomplex()) {
        let g = x.group();
        for p in 0..x.complex().counts().len() {
            for s in x.complex().simplices(p) {
                let h = x.stabilizer(s);
                for e in g.elements() {
                    let (img, _) = x.act_simplex(e, s);
                    prop_assert_eq!(x.stabilizer(&img), h.conjugate(g, e));
                }
            }
        }
    }
}
