mod common;

use proptest::prelude::*;

use equihom::homalg::{average_projector, ChainComplex, Matrix};
use equihom::{F64Matrix, Q};

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `id + c·e_{ij}` and its inverse.
fn elementary(n: usize, i: usize, j: usize, c: i64) -> (Matrix<Q>, Matrix<Q>) {
    let e = Matrix::from_triplets(n, n, [(i, j, q(1))]);
    (Matrix::identity(n).add(&e.scale(&q(c))), Matrix::identity(n).add(&e.scale(&q(-c))))
}

/// A product of elementary moves (and a scaling) with its inverse.
fn random_invertible(n: usize, moves: &[(usize, usize, i64)]) -> (Matrix<Q>, Matrix<Q>) {
    let mut p = Matrix::identity(n);
    let mut p_inv = Matrix::identity(n);
    for &(i, j, c) in moves {
        if n == 0 || i % n == j % n {
            continue;
        }
        let (e, e_inv) = elementary(n, i % n, j % n, c);
        p = e.mul(&p);
        p_inv = p_inv.mul(&e_inv);
    }
    if n > 0 {
        let d = Matrix::from_triplets(n, n, (0..n).map(|k| (k, k, if k == 0 { q(3) } else { q(1) })));
        let d_inv = Matrix::from_triplets(n, n, (0..n).map(|k| (k, k, if k == 0 { Q::new(1.into(), 3.into()) } else { q(1) })));
        p = d.mul(&p);
        p_inv = p_inv.mul(&d_inv);
    }
    (p, p_inv)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homology_is_basis_independent(k in common::arb_plain(6), moves in prop::collection::vec((0..8usize, 0..8usize, -3i64..=3), 0..12)) {
        let c: ChainComplex<Q> = k.chain_complex();
        let (ps, ps_inv): (Vec<_>, Vec<_>) = (c.lo()..=c.hi()).map(|n| random_invertible(c.dim(n), &moves)).unzip();
        prop_assert!(ps.iter().zip(&ps_inv).all(|(p, pi)| p.mul(pi).is_identity()));
        let c2 = c.change_basis(&ps, &ps_inv).unwrap();
        prop_assert_eq!(c2.homology(), c.homology());
    }

    #[test]
    fn euler_characteristic_of_chains_and_homology(k in common::arb_plain(7)) {
        let c: ChainComplex<Q> = k.chain_complex();
        prop_assert_eq!(c.homology().euler(), k.euler());
        prop_assert_eq!(c.dims().euler(), k.euler());
        // cochains have the same total homology
        let d: ChainComplex<Q> = k.cochain_complex();
        prop_assert_eq!(d.homology().dims.iter().sum::<usize>(), c.homology().dims.iter().sum::<usize>());
    }

    #[test]
    fn boundary_squares_to_zero(k in common::arb_plain(7)) {
        for p in 2..k.counts().len() {
            prop_assert!(k.boundary_matrix::<Q>(p - 1).mul(&k.boundary_matrix::<Q>(p)).is_zero());
        }
    }

    #[test]
    fn float_and_exact_homology_agree(k in common::arb_plain(6)) {
        let exact: ChainComplex<Q> = k.chain_complex();
        let float: ChainComplex<f64> = k.chain_complex();
        prop_assert_eq!(float.homology(), exact.homology());
        let b: F64Matrix = k.boundary_matrix(1);
        prop_assert_eq!(b.rank(), k.boundary_matrix::<Q>(1).rank());
    }

    #[test]
    fn averaging_projector_is_idempotent(x in common::arb_gcomplex()) {
        let g = x.group();
        let n = x.complex().count(0);
        let action = |h: usize| Matrix::<Q>::from_triplets(n, n, (0..n).map(|v| (x.act_vertex(h, v), v, q(1))));
        let p = average_projector(g, &g.full_subgroup(), action).unwrap();
        prop_assert_eq!(p.mul(&p), p.clone());
        for h in g.elements() {
            prop_assert_eq!(action(h).mul(&p), p.clone());
        }
        // rank of the projector = number of vertex orbits
        let orbits = (0..n).filter(|&v| g.elements().all(|h| x.act_vertex(h, v) >= v)).count();
        prop_assert_eq!(p.rank(), orbits);
    }
}
