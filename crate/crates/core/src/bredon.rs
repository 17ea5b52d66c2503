//! Bredon homology over the orbit category with class-function coefficients.
//!
//! A morphism `G/H → G/K` is a coset `gK` with `g⁻¹Hg ⊆ K`, written by its
//! least element. It pulls chains back by `x ↦ g·x` (from `X^K` to `X^H`) and
//! pushes coefficients forward by conjugating with `g` and inducing to `K`.

use thiserror::Error;

use crate::fingroup::{enumerate_subgroups, ClassFunction, FiniteGroup, GroupError, Subgroup, DEFAULT_SUBGROUP_BOUND};
use crate::gcomplex::{GComplex, GComplexError, SComplex};
use crate::homalg::{collect_sparse, quotient_complex, ChainComplex, GradedDims, HomalgError, Matrix, Quotient, QuotientPresentation};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BredonError {
    #[error("bredon: {0} is not a morphism G/H → G/K")]
    InvalidMorphism(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Complex(#[from] GComplexError),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
}

/// Coset representatives `g` (least in `gK`) with `g⁻¹Hg ⊆ K`.
pub fn orbit_morphisms(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    group
        .elements()
        .filter(|&g| k.members().iter().all(|&x| g <= group.mul(g, x)))
        .filter(|&g| h.members().iter().all(|&y| k.contains(group.conj(group.inv(g), y))))
        .collect()
}

pub fn is_morphism(group: &FiniteGroup, h: &Subgroup, k: &Subgroup, g: usize) -> bool {
    h.members().iter().all(|&y| k.contains(group.conj(group.inv(g), y)))
}

/// The objects `G/H` together with their hom-sets.
#[derive(Clone, Debug)]
pub struct OrbitCategory {
    pub subgroups: Vec<Subgroup>,
    /// `morphisms[i][j]`: representatives of `G/H_i → G/H_j`
    pub morphisms: Vec<Vec<Vec<usize>>>,
}

impl OrbitCategory {
    pub fn new(group: &FiniteGroup, bound: usize) -> Result<Self, BredonError> {
        let subgroups = enumerate_subgroups(group, bound)?;
        let morphisms = subgroups
            .iter()
            .map(|h| subgroups.iter().map(|k| orbit_morphisms(group, h, k)).collect())
            .collect();
        Ok(OrbitCategory { subgroups, morphisms })
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups.iter().position(|x| x == h)
    }

    /// Least representative of the coset `gK`.
    pub fn normalize(group: &FiniteGroup, k: &Subgroup, g: usize) -> usize {
        k.members().iter().map(|&x| group.mul(g, x)).min().expect("nonempty")
    }
}

/// `R(gK): R(H) → R(K)`, `f ↦ ind_{g⁻¹Hg}^K (y ↦ f(g y g⁻¹))`, in the class-indicator bases.
pub fn coefficient_map<S: Scalar>(group: &FiniteGroup, h: &Subgroup, k: &Subgroup, g: usize) -> Result<Matrix<S>, BredonError> {
    if !is_morphism(group, h, k, g) {
        return Err(BredonError::InvalidMorphism(g));
    }
    let n_h = h.classes(group).len();
    let n_k = k.classes(group).len();
    let mut cols = Vec::with_capacity(n_h);
    for c in 0..n_h {
        let f = ClassFunction::<S>::indicator(group, h, c).conjugate(group, group.inv(g));
        let ind = f.induce(group, k)?;
        cols.push(
            ind.values()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_negligible())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        );
    }
    Ok(Matrix::from_columns(n_k, &cols))
}

/// Coefficients in degree `q`: class functions for even `q`, zero for odd `q`.
pub fn coefficient_dim(group: &FiniteGroup, h: &Subgroup, q: i64) -> usize {
    if q.rem_euclid(2) == 0 {
        h.classes(group).len()
    } else {
        0
    }
}

/// The categorical tensor product of fixed-point chains with the coefficient
/// system, presented as a quotient of `⊕_H C_*(X^H) ⊗ R(H)`.
#[derive(Clone, Debug)]
pub struct BredonComplex<S> {
    pub category: OrbitCategory,
    pub fixed: Vec<SComplex>,
    /// number of conjugacy classes of each subgroup
    pub class_counts: Vec<usize>,
    /// `offsets[p][i]`: start of the `H_i` block in degree `p`
    pub offsets: Vec<Vec<usize>>,
    pub ambient: ChainComplex<S>,
    pub quotient: Quotient<S>,
}

impl<S: Scalar> BredonComplex<S> {
    /// Ambient coordinate of `σ ⊗ e_c` in the `H_i` summand, `σ` indexed in `X^{H_i}`.
    pub fn index(&self, p: usize, i: usize, simplex: usize, class: usize) -> usize {
        self.offsets[p][i] + simplex * self.class_counts[i] + class
    }

    /// Inverse of [`index`](Self::index).
    pub fn locate(&self, p: usize, idx: usize) -> (usize, usize, usize) {
        let i = self.offsets[p].partition_point(|&o| o <= idx) - 1;
        let r = idx - self.offsets[p][i];
        (i, r / self.class_counts[i], r % self.class_counts[i])
    }

    pub fn complex(&self) -> &ChainComplex<S> {
        &self.quotient.complex
    }

    pub fn homology(&self) -> GradedDims {
        self.quotient.complex.homology()
    }
}

pub fn bredon_complex<S: Scalar>(x: &GComplex) -> Result<BredonComplex<S>, BredonError> {
    bredon_complex_with_bound(x, DEFAULT_SUBGROUP_BOUND)
}

pub fn bredon_complex_with_bound<S: Scalar>(x: &GComplex, bound: usize) -> Result<BredonComplex<S>, BredonError> {
    x.require_type_preserving()?;
    let group = x.group();
    let category = OrbitCategory::new(group, bound)?;
    let subs = &category.subgroups;
    let fixed: Vec<SComplex> = subs.iter().map(|h| x.fixed_by_subgroup(h)).collect::<Result<_, _>>()?;
    let class_counts: Vec<usize> = subs.iter().map(|h| h.classes(group).len()).collect();
    let top = x.complex().counts().len();
    let offsets: Vec<Vec<usize>> = (0..top)
        .map(|p| {
            let mut acc = 0;
            let mut v: Vec<usize> = fixed
                .iter()
                .zip(&class_counts)
                .map(|(f, &c)| {
                    let o = acc;
                    acc += f.count(p) * c;
                    o
                })
                .collect();
            v.push(acc);
            v
        })
        .collect();
    let dims: Vec<usize> = offsets.iter().map(|o| *o.last().expect("sentinel")).collect();

    let boundaries: Vec<Matrix<S>> = (1..top)
        .map(|p| {
            let mut trip = Vec::new();
            for (i, f) in fixed.iter().enumerate() {
                let d = f.boundary_matrix::<S>(p);
                let c = class_counts[i];
                for r in 0..d.nrows() {
                    for (col, v) in d.row(r) {
                        for k in 0..c {
                            trip.push((offsets[p - 1][i] + r * c + k, offsets[p][i] + col * c + k, v.clone()));
                        }
                    }
                }
            }
            Matrix::from_triplets(dims[p - 1], dims[p], trip)
        })
        .collect();
    let ambient = ChainComplex::new(0, dims.clone(), boundaries)?;

    // coefficient maps, one per morphism
    let mut maps: Vec<(usize, usize, usize, Matrix<S>)> = Vec::new();
    for (i, h) in subs.iter().enumerate() {
        for (j, k) in subs.iter().enumerate() {
            for &g in &category.morphisms[i][j] {
                maps.push((i, j, g, coefficient_map(group, h, k, g)?));
            }
        }
    }

    // preferred basis: σ ⊗ e_c in the summand of the stabilizer of σ
    let orbits = x.orbit_data()?;
    let mut presentations = Vec::with_capacity(top);
    for p in 0..top {
        let mut relations = Vec::new();
        for (i, j, g, r) in &maps {
            let (i, j) = (*i, *j);
            let pull = x.simplex_map(*g, &fixed[j], &fixed[i], p).expect("g·X^K ⊆ X^H");
            for (s, &(t, sign)) in pull.iter().enumerate() {
                for c in 0..class_counts[i] {
                    let mut v = vec![(offsets[p][i] + t * class_counts[i] + c, S::from_int(sign as i64))];
                    for (row, val) in r.column(c) {
                        v.push((offsets[p][j] + s * class_counts[j] + row, -val));
                    }
                    let v = collect_sparse(v);
                    if !v.is_empty() {
                        relations.push(v);
                    }
                }
            }
        }
        relations.sort_by(|a, b| cmp_sparse(a, b));
        relations.dedup();
        let mut keep = Vec::new();
        for &rep in orbits.reps(p) {
            let stab = &orbits.info(p, rep).stabilizer;
            let i = category.index_of(stab).expect("stabilizer is a subgroup");
            let s = fixed[i]
                .index_of(&x.complex().simplices(p)[rep])
                .expect("σ is fixed by its stabilizer");
            for c in 0..class_counts[i] {
                keep.push(offsets[p][i] + s * class_counts[i] + c);
            }
        }
        presentations.push(QuotientPresentation::new(dims[p], relations).with_keep(keep));
    }
    let quotient = quotient_complex(&ambient, &presentations)?;
    Ok(BredonComplex {
        category,
        fixed,
        class_counts,
        offsets,
        ambient,
        quotient,
    })
}

fn cmp_sparse<S: Scalar>(a: &[(usize, S)], b: &[(usize, S)]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().map(|e| e.0).cmp(b.iter().map(|e| e.0)))
}

pub fn bredon_homology<S: Scalar>(x: &GComplex) -> Result<GradedDims, BredonError> {
    Ok(bredon_complex::<S>(x)?.homology())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{cyclic, symmetric};
    use crate::Q;

    #[test]
    fn morphism_counts() {
        let g = cyclic(2);
        let e = g.trivial_subgroup();
        let full = g.full_subgroup();
        assert_eq!(orbit_morphisms(&g, &full, &full).len(), 1);
        assert_eq!(orbit_morphisms(&g, &e, &e).len(), 2);
        assert_eq!(orbit_morphisms(&g, &e, &full).len(), 1);
        assert_eq!(orbit_morphisms(&g, &full, &e).len(), 0);
    }

    #[test]
    fn inclusion_induces() {
        let g = cyclic(2);
        let m = coefficient_map::<Q>(&g, &g.trivial_subgroup(), &g.full_subgroup(), 0).unwrap();
        assert_eq!(m.to_dense(), vec![vec![Q::from_int(2)], vec![Q::from_int(0)]]);
        let id = coefficient_map::<Q>(&g, &g.full_subgroup(), &g.full_subgroup(), 0).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn coset_choice_does_not_matter() {
        let g = symmetric(3);
        let subs = enumerate_subgroups(&g, 24).unwrap();
        for h in &subs {
            for k in &subs {
                for x in g.elements().filter(|&x| is_morphism(&g, h, k, x)) {
                    let a = coefficient_map::<Q>(&g, h, k, x).unwrap();
                    let b = coefficient_map::<Q>(&g, h, k, OrbitCategory::normalize(&g, k, x)).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn invalid_morphism_is_rejected() {
        let g = cyclic(2);
        assert!(matches!(
            coefficient_map::<Q>(&g, &g.full_subgroup(), &g.trivial_subgroup(), 0),
            Err(BredonError::InvalidMorphism(0))
        ));
    }
}
