use super::echelon::{image, Subspace};
use super::matrix::Matrix;
use super::HomalgError;
use crate::fingroup::{FiniteGroup, Subgroup};
use crate::scalar::Scalar;

/// Group-averaging projector `P = (1/|H|) Σ_h action(h)` onto the `H`-invariants.
///
/// The action is checked to be multiplicative on a generating set of `H`
/// against every element of `H`.
pub fn average_projector<S: Scalar>(
    group: &FiniteGroup,
    subgroup: &Subgroup,
    action: impl Fn(usize) -> Matrix<S>,
) -> Result<Matrix<S>, HomalgError> {
    let mats: Vec<(usize, Matrix<S>)> = subgroup.members().iter().map(|&h| (h, action(h))).collect();
    let lookup = |h: usize| &mats[subgroup.members().binary_search(&h).expect("member")].1;
    for &g in &subgroup.generators(group) {
        for &(h, ref mh) in &mats {
            if lookup(g).mul(mh) != *lookup(group.mul(g, h)) {
                return Err(HomalgError::NotARepresentation(g, h));
            }
        }
    }
    let n = mats[0].1.nrows();
    let mut sum = Matrix::zeros(n, n);
    for (_, m) in &mats {
        sum = sum.add(m);
    }
    Ok(sum.scale(&S::from_ratio(1, subgroup.order() as i64)))
}

/// Invariant subspace of a representation, as the image of its averaging projector.
pub fn invariant_subspace<S: Scalar>(
    group: &FiniteGroup,
    subgroup: &Subgroup,
    action: impl Fn(usize) -> Matrix<S>,
) -> Result<Subspace<S>, HomalgError> {
    Ok(image(&average_projector(group, subgroup, action)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{cyclic, FiniteGroup};
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn swap() -> Matrix<Q> {
        Matrix::from_dense(2, 2, &[vec![q(0), q(1)], vec![q(1), q(0)]])
    }

    #[test]
    fn trivial_action_gives_identity() {
        let g = cyclic(3);
        let p = average_projector(&g, &g.full_subgroup(), |_| Matrix::<Q>::identity(4)).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn regular_representation_of_order_two() {
        let g = cyclic(2);
        let p = average_projector(
            &g,
            &g.full_subgroup(),
            |h| if h == g.identity() { Matrix::identity(2) } else { swap() },
        )
        .unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.mul(&p), p);
        // image is the diagonal
        assert_eq!(p.get(0, 1), Q::from_ratio(1, 2));
        assert!(
            invariant_subspace(&g, &g.full_subgroup(), |h| if h == 0 { Matrix::identity(2) } else { swap() })
                .unwrap()
                .contains(&[(0, q(1)), (1, q(1))])
        );
    }

    #[test]
    fn non_representation_is_rejected() {
        let g: FiniteGroup = cyclic(2);
        let r = average_projector(&g, &g.full_subgroup(), |h| {
            if h == 0 {
                Matrix::<Q>::identity(2)
            } else {
                Matrix::identity(2).scale(&q(2))
            }
        });
        assert!(matches!(r, Err(HomalgError::NotARepresentation(..))));
    }
}
