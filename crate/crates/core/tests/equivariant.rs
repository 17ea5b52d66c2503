mod common;

use proptest::prelude::*;

use equihom::bredon::bredon_homology;
use equihom::corpus::point;
use equihom::cosheaf::{compare_bredon_cosheaf, cosheaf_homology};
use equihom::cyclic::{hp_at_level, GAlgebra, HpOptions, HpStrategy};
use equihom::delocalized::{bs_bivariant, covariant_cochains, covariant_cochains_padded, delocalized_point, restriction_map};
use equihom::fingroup::trivial_group;
use equihom::gcomplex::{GComplex, SComplex};
use equihom::homalg::{GradedDims, DEFAULT_HOM_BUDGET};
use equihom::Q;

fn same(a: &GradedDims, b: &GradedDims) -> bool {
    let lo = a.lo.min(b.lo);
    let hi = a.hi().max(b.hi());
    (lo..=hi).all(|n| a.get(n) == b.get(n))
}

/// The invariant subcomplex of simplices of dimension ≤ k, on the same vertex ids.
fn skeleton(x: &GComplex, k: usize) -> GComplex {
    let c = x.complex();
    let maximal: Vec<Vec<usize>> = (0..=k.min(c.counts().len().saturating_sub(1)))
        .flat_map(|p| c.simplices(p).to_vec())
        .collect();
    let sk = SComplex::from_maximal(c.labels().to_vec(), &maximal).unwrap();
    let perms = x.group().elements().map(|g| x.vertex_perm(g).to_vec()).collect();
    GComplex::from_element_action(sk, x.group().clone(), perms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bredon_and_cosheaf_agree(x in common::arb_gcomplex()) {
        let c = compare_bredon_cosheaf::<Q>(&x).unwrap();
        prop_assert!(c.is_iso());
        prop_assert_eq!(&c.bredon, &c.cosheaf);
        prop_assert_eq!(bredon_homology::<Q>(&x).unwrap(), cosheaf_homology::<Q>(&x).unwrap());
    }

    #[test]
    fn trivial_group_reduces_to_simplicial(k in common::arb_plain(6)) {
        let x = GComplex::trivial_action(k.clone(), trivial_group());
        let h = k.chain_complex::<Q>().homology();
        let ch = k.cochain_complex::<Q>().homology();
        prop_assert!(same(&bredon_homology::<Q>(&x).unwrap(), &h));
        prop_assert!(same(&cosheaf_homology::<Q>(&x).unwrap(), &h));
        let d = delocalized_point::<Q>(&x).unwrap();
        let flipped = GradedDims { lo: -ch.hi(), dims: ch.dims.iter().rev().copied().collect() };
        prop_assert!(same(&d, &ch) || same(&d, &flipped), "deloc {:?} cochains {:?}", d, ch);
        prop_assert_eq!(d.dims.iter().sum::<usize>(), h.dims.iter().sum::<usize>());
    }

    #[test]
    fn bivariant_with_point_target_is_delocalized(x in common::arb_gcomplex()) {
        let bs = bs_bivariant::<Q>(&x, &point(x.group()), DEFAULT_HOM_BUDGET).unwrap();
        prop_assert!(same(&bs, &delocalized_point::<Q>(&x).unwrap()));
    }

    #[test]
    fn restriction_is_functorial(x in common::arb_gcomplex()) {
        let top = x.complex().counts().len();
        prop_assume!(top >= 2);
        let one = skeleton(&x, 1);
        let zero = skeleton(&x, 0);
        let cx = covariant_cochains::<Q>(&x).unwrap();
        let c1 = covariant_cochains_padded::<Q>(&one, top).unwrap();
        let c0 = covariant_cochains_padded::<Q>(&zero, top).unwrap();
        let r1 = restriction_map::<Q>(&x, &one).unwrap();
        let r0 = restriction_map::<Q>(&x, &zero).unwrap();
        let r10 = restriction_map::<Q>(&one, &zero).unwrap();
        prop_assert!(r1.is_chain_map(&cx, &c1) && r1.is_equivariant(&cx, &c1));
        prop_assert!(r0.is_chain_map(&cx, &c0) && r0.is_equivariant(&cx, &c0));
        // the 1-skeleton's own restriction lives in degrees -1..=0; below that the 0-skeleton has nothing
        for t in x.group().elements() {
            for n in cx.lo()..=cx.hi() {
                if n >= -1 {
                    prop_assert_eq!(&r10.get(t, n).mul(r1.get(t, n)), r0.get(t, n));
                } else {
                    prop_assert_eq!(r0.get(t, n).nrows(), 0);
                }
            }
        }
        // the identity restriction is the identity
        let id = restriction_map::<Q>(&x, &x).unwrap();
        for t in x.group().elements() {
            for n in cx.lo()..=cx.hi() {
                prop_assert!(id.get(t, n).is_identity());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn periodic_cyclic_levels_are_stable(gi in 1..6usize, xs in prop::collection::vec(0..4usize, 1..=2), ys in prop::collection::vec(0..4usize, 1..=2)) {
        let (m, gens) = common::groups()[gi].clone();
        let pts = |v: Vec<usize>| v.into_iter().map(|p| vec![p]).collect::<Vec<_>>();
        let x = common::invariant_complex(m, &gens, 1, &pts(xs), false);
        let y = common::invariant_complex(m, &gens, 1, &pts(ys), false);
        let a = GAlgebra::<Q>::functions_on(&x).unwrap();
        let b = GAlgebra::<Q>::functions_on(&y).unwrap();
        let bs = bs_bivariant::<Q>(&x, &y, DEFAULT_HOM_BUDGET).unwrap().fold_parity();
        for levels in [(2, 1), (3, 2)] {
            for strategy in [HpStrategy::Literal, HpStrategy::Reduced] {
                let r = hp_at_level(&a, &b, &HpOptions { levels, strategy, ..HpOptions::default() }).unwrap();
                prop_assert_eq!((r.even, r.odd), bs, "levels {:?} {:?}", levels, strategy);
            }
        }
    }
}
