use proptest::prelude::*;

use equihom::fingroup::{
    cyclic, dihedral, enumerate_subgroups, klein_four, quaternion, symmetric, ClassFunction, FiniteGroup, Subgroup, DEFAULT_SUBGROUP_BOUND,
};
use equihom::Q;

fn groups() -> Vec<FiniteGroup> {
    vec![cyclic(6), klein_four(), symmetric(3), dihedral(4), quaternion(), symmetric(4)]
}

fn subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    enumerate_subgroups(g, DEFAULT_SUBGROUP_BOUND).expect("subgroups")
}

fn class_fn(g: &FiniteGroup, h: &Subgroup, seed: &[i64]) -> ClassFunction<Q> {
    let n = h.classes(g).len();
    ClassFunction::new(g, h, (0..n).map(|i| Q::from_integer(seed[i % seed.len()].into())).collect())
}

#[test]
fn group_axioms_and_subgroup_counts() {
    // subgroup counts of S3, D4, Q8, S4
    for (g, n) in [(symmetric(3), 6), (dihedral(4), 10), (quaternion(), 6), (symmetric(4), 30)] {
        assert!(g.verify_axioms());
        assert_eq!(subgroups(&g).len(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_reciprocity(gi in 0..6usize, hi in any::<prop::sample::Index>(), a in prop::collection::vec(-5i64..5, 1..6), b in prop::collection::vec(-5i64..5, 1..6)) {
        let g = &groups()[gi];
        let subs = subgroups(g);
        let h = hi.get(&subs);
        let whole = g.full_subgroup();
        let phi = class_fn(g, h, &a);
        let psi = class_fn(g, &whole, &b);
        let lhs = phi.induce(g, &whole).unwrap().inner(&psi);
        let rhs = phi.inner(&psi.restrict(g, h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induction_is_transitive(gi in 0..6usize, hi in any::<prop::sample::Index>(), ki in any::<prop::sample::Index>(), a in prop::collection::vec(-5i64..5, 1..6)) {
        let g = &groups()[gi];
        let subs = subgroups(g);
        let (h, k) = (hi.get(&subs), ki.get(&subs));
        prop_assume!(h.is_subgroup_of(k));
        let whole = g.full_subgroup();
        let phi = class_fn(g, h, &a);
        let two_step = phi.induce(g, k).unwrap().induce(g, &whole).unwrap();
        prop_assert_eq!(two_step, phi.induce(g, &whole).unwrap());
    }

    #[test]
    fn inner_product_is_conjugation_invariant(gi in 0..6usize, hi in any::<prop::sample::Index>(), x in any::<prop::sample::Index>(), a in prop::collection::vec(-5i64..5, 1..6), b in prop::collection::vec(-5i64..5, 1..6)) {
        let g = &groups()[gi];
        let subs = subgroups(g);
        let h = hi.get(&subs);
        let s = x.index(g.order());
        let (phi, psi) = (class_fn(g, h, &a), class_fn(g, h, &b));
        let (pc, qc) = (phi.conjugate(g, s), psi.conjugate(g, s));
        prop_assert_eq!(pc.subgroup(), &h.conjugate(g, s));
        prop_assert_eq!(pc.inner(&qc), phi.inner(&psi));
    }

    #[test]
    fn induced_trivial_character_counts_fixed_cosets(gi in 0..6usize, hi in any::<prop::sample::Index>()) {
        // ind_H^G 1 at g is the number of cosets xH fixed by g
        let g = &groups()[gi];
        let subs = subgroups(g);
        let h = hi.get(&subs);
        let whole = g.full_subgroup();
        let ind = ClassFunction::constant(g, h, Q::from_integer(1.into())).induce(g, &whole).unwrap();
        for e in g.elements() {
            let fixed = g.elements().filter(|&x| h.contains(g.conj(g.inv(x), e))).count() / h.order();
            prop_assert_eq!(ind.value_at(e), Q::from_integer((fixed as i64).into()));
        }
    }
}
