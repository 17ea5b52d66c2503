//! Covariant modules over a finite group and the bivariant theory
//! `H^n_G(X, Y)` computed from cochains on fixed-point sets.
//!
//! A covariant module is a family of spaces `M_t` indexed by group elements
//! with maps `s: M_t → M_{sts⁻¹}`; the operator `T` acts on `M_t` as `t⁻¹`.
//! Over a finite group every such module is projective and injective, so
//! Hom complexes between bounded complexes compute hyperext directly.
//! Equivariant Hom splits over conjugacy classes into centralizer-invariant
//! maps `M_t → N_t`.
//!
//! Cochain complexes live in nonpositive chain degrees (`C^p` in degree
//! `−p`), so Hom degree `n` collects maps `C^p(X) → C^{p−n}(Y)`.

use thiserror::Error;

use crate::fingroup::{conjugacy_data, FiniteGroup, Subgroup};
use crate::gcomplex::{GComplex, GComplexError, SComplex};
use crate::homalg::{
    average_projector, conj_op, hom_chain_complex, image, rank, restrict_complex, ChainComplex, GradedDims, HomChainComplex, HomalgError,
    Matrix, Subspace,
};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DelocError {
    #[error("delocalized: modules over different groups")]
    GroupMismatch,
    #[error("delocalized: degree ranges differ ({0:?} vs {1:?})")]
    DegreeMismatch((i64, i64), (i64, i64)),
    #[error("delocalized: action is not multiplicative at ({s}, {t})")]
    NotMultiplicative { s: usize, t: usize },
    #[error("delocalized: action does not commute with the differential at ({s}, {t}, degree {n})")]
    NotCovariant { s: usize, t: usize, n: i64 },
    #[error("delocalized: equivariance projector does not commute with the Hom differential in degree {0}")]
    ProjectorNotChainMap(i64),
    #[error("delocalized: {0}")]
    NotSubcomplex(String),
    #[error(transparent)]
    Complex(#[from] GComplexError),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
}

/// A covariant module: spaces `M_t` with maps `s: M_t → M_{sts⁻¹}`.
#[derive(Clone, Debug)]
pub struct CovariantModule<S> {
    group: FiniteGroup,
    dims: Vec<usize>,
    // action[s][t]: M_t → M_{sts⁻¹}
    action: Vec<Vec<Matrix<S>>>,
}

impl<S: Scalar> CovariantModule<S> {
    pub fn new(group: FiniteGroup, dims: Vec<usize>, action: impl Fn(usize, usize) -> Matrix<S>) -> Result<Self, DelocError> {
        let action: Vec<Vec<Matrix<S>>> = group.elements().map(|s| group.elements().map(|t| action(s, t)).collect()).collect();
        let m = CovariantModule { group, dims, action };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), DelocError> {
        let g = &self.group;
        for s in g.elements() {
            for t in g.elements() {
                let a = &self.action[s][t];
                if a.ncols() != self.dims[t] || a.nrows() != self.dims[g.conj(s, t)] {
                    return Err(DelocError::NotMultiplicative { s, t });
                }
            }
        }
        for &s1 in g.generators() {
            for s2 in g.elements() {
                for t in g.elements() {
                    let lhs = &self.action[g.mul(s1, s2)][t];
                    let rhs = self.action[s1][g.conj(s2, t)].mul(&self.action[s2][t]);
                    if *lhs != rhs {
                        return Err(DelocError::NotMultiplicative { s: s1, t });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self, t: usize) -> usize {
        self.dims[t]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn action(&self, s: usize, t: usize) -> &Matrix<S> {
        &self.action[s][t]
    }

    /// `T` on `M_t`: the action of `t⁻¹`.
    pub fn t_operator(&self, t: usize) -> &Matrix<S> {
        &self.action[self.group.inv(t)][t]
    }

    /// `E = (1/n) Σ_{j<n} T^j` on `M_t`, with `n` the order of `t`.
    pub fn projector_e(&self, t: usize) -> Matrix<S> {
        averaged_powers(self.t_operator(t), self.group.element_order(t))
    }

    /// Projection onto the elliptic part. Every element of a finite group is
    /// elliptic, so this is the identity and the hyperbolic part vanishes.
    pub fn elliptic_projector(&self, t: usize) -> Matrix<S> {
        Matrix::identity(self.dims[t])
    }

    pub fn hyperbolic_dim(&self) -> usize {
        self.group
            .elements()
            .map(|t| self.dims[t] - self.elliptic_projector(t).rank())
            .sum()
    }
}

/// `(1/n) Σ_{j<n} A^j`.
pub fn averaged_powers<S: Scalar>(a: &Matrix<S>, n: usize) -> Matrix<S> {
    let mut acc = Matrix::zeros(a.nrows(), a.ncols());
    let mut pow = Matrix::identity(a.nrows());
    for _ in 0..n {
        acc = acc.add(&pow);
        pow = a.mul(&pow);
    }
    acc.scale(&S::from_ratio(1, n as i64))
}

/// A bounded complex of covariant modules: one chain complex per element
/// over a common degree range, with covariant maps between them.
#[derive(Clone, Debug)]
pub struct CovariantComplex<S> {
    group: FiniteGroup,
    pieces: Vec<ChainComplex<S>>,
    // action[s][t][k]: degree lo + k of piece t → piece sts⁻¹
    action: Vec<Vec<Vec<Matrix<S>>>>,
}

impl<S: Scalar> CovariantComplex<S> {
    pub fn new(
        group: FiniteGroup,
        pieces: Vec<ChainComplex<S>>,
        action: impl Fn(usize, usize, i64) -> Matrix<S>,
    ) -> Result<Self, DelocError> {
        let range = (pieces[0].lo(), pieces[0].hi());
        for p in &pieces {
            if (p.lo(), p.hi()) != range {
                return Err(DelocError::DegreeMismatch(range, (p.lo(), p.hi())));
            }
        }
        let action = group
            .elements()
            .map(|s| {
                group
                    .elements()
                    .map(|t| (range.0..=range.1).map(|n| action(s, t, n)).collect())
                    .collect()
            })
            .collect();
        let c = CovariantComplex { group, pieces, action };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<(), DelocError> {
        let g = &self.group;
        for n in self.lo()..=self.hi() {
            self.module(n)?;
            for s in g.elements() {
                for t in g.elements() {
                    let u = g.conj(s, t);
                    let lhs = self.act(s, t, n - 1).mul(&self.pieces[t].boundary(n));
                    let rhs = self.pieces[u].boundary(n).mul(&self.act(s, t, n));
                    if lhs != rhs {
                        return Err(DelocError::NotCovariant { s, t, n });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lo(&self) -> i64 {
        self.pieces[0].lo()
    }

    pub fn hi(&self) -> i64 {
        self.pieces[0].hi()
    }

    pub fn piece(&self, t: usize) -> &ChainComplex<S> {
        &self.pieces[t]
    }

    /// Action of `s` from piece `t` in degree `n`; empty outside the range.
    pub fn act(&self, s: usize, t: usize, n: i64) -> Matrix<S> {
        if n < self.lo() || n > self.hi() {
            let u = self.group.conj(s, t);
            return Matrix::zeros(self.pieces[u].dim(n), self.pieces[t].dim(n));
        }
        self.action[s][t][(n - self.lo()) as usize].clone()
    }

    /// The covariant module in degree `n`.
    pub fn module(&self, n: i64) -> Result<CovariantModule<S>, DelocError> {
        CovariantModule::new(self.group.clone(), self.pieces.iter().map(|p| p.dim(n)).collect(), |s, t| {
            self.act(s, t, n)
        })
    }
}

/// Simplicial cochains of `X^t` for every `t`, padded to the degree range of `X`.
pub fn covariant_cochains<S: Scalar>(x: &GComplex) -> Result<CovariantComplex<S>, DelocError> {
    let bry = x.brylinski_space()?;
    let top = x.complex().counts().len().max(1);
    let pieces: Vec<ChainComplex<S>> = bry.fixed.iter().map(|f| padded_cochains(f, top)).collect();
    let group = x.group().clone();
    let fixed = &bry.fixed;
    CovariantComplex::new(group.clone(), pieces, |s, t, n| {
        let p = (-n) as usize;
        x.chain_map::<S>(s, &fixed[t], &fixed[group.conj(s, t)], p)
    })
}

/// Cochains in degrees `−(top−1)..=0` regardless of the actual dimension.
pub fn padded_cochains<S: Scalar>(k: &SComplex, top: usize) -> ChainComplex<S> {
    let dims: Vec<usize> = (0..top).rev().map(|p| k.count(p)).collect();
    let boundaries = (1..top).rev().map(|p| k.boundary_matrix::<S>(p).transpose()).collect();
    ChainComplex::new(-(top as i64 - 1), dims, boundaries).expect("coboundary squares to zero")
}

/// The centralizer-invariant part of `Hom(M_t, N_t)` for one class representative.
pub struct ClassHom<S> {
    pub t: usize,
    pub centralizer: Subgroup,
    pub raw: HomChainComplex<S>,
    /// invariant subspace per Hom degree
    pub invariant: Vec<Subspace<S>>,
    pub complex: ChainComplex<S>,
}

pub struct CovariantHom<S> {
    pub classes: Vec<ClassHom<S>>,
    pub lo: i64,
    pub hi: i64,
}

impl<S: Scalar> CovariantHom<S> {
    pub fn homology(&self) -> GradedDims {
        let mut dims = vec![0; (self.hi - self.lo + 1).max(0) as usize];
        for c in &self.classes {
            let h = c.complex.homology();
            for (k, d) in dims.iter_mut().enumerate() {
                *d += h.get(self.lo + k as i64);
            }
        }
        GradedDims { lo: self.lo, dims }
    }

    pub fn total_dim(&self) -> usize {
        self.classes.iter().map(|c| c.complex.dims().dims.iter().sum::<usize>()).sum()
    }
}

/// `φ ↦ N(z) φ M(z)⁻¹` on one Hom degree of `Hom(M_t, N_t)`.
fn hom_action<S: Scalar>(
    m: &CovariantComplex<S>,
    n: &CovariantComplex<S>,
    hom: &HomChainComplex<S>,
    t: usize,
    z: usize,
    deg: i64,
) -> Matrix<S> {
    let g = &m.group;
    let zi = g.inv(z);
    let layout = &hom.layouts[(deg - hom.complex.lo()) as usize];
    let dims = layout.dims();
    let blocks = layout
        .blocks
        .iter()
        .enumerate()
        .map(|(k, &(p, q, _, _))| (k, k, conj_op(&n.act(z, t, q), &m.act(zi, t, p))))
        .collect();
    Matrix::from_blocks(&dims, &dims, blocks)
}

/// Equivariant Hom complex, one centralizer-invariant piece per conjugacy class.
pub fn covariant_hom<S: Scalar>(m: &CovariantComplex<S>, n: &CovariantComplex<S>, budget: usize) -> Result<CovariantHom<S>, DelocError> {
    if m.group != n.group {
        return Err(DelocError::GroupMismatch);
    }
    let g = &m.group;
    let cd = conjugacy_data(g);
    let lo = n.lo() - m.hi();
    let hi = n.hi() - m.lo();
    let mut classes = Vec::with_capacity(cd.len());
    let mut spent = 0;
    for (&t, z) in cd.representatives.iter().zip(&cd.centralizers) {
        let raw = hom_chain_complex(m.piece(t), n.piece(t), budget.saturating_sub(spent))?;
        spent += raw.layouts.iter().map(|l| l.total()).sum::<usize>();
        let projectors: Vec<Matrix<S>> = (lo..=hi)
            .map(|deg| average_projector(g, z, |zz| hom_action(m, n, &raw, t, zz, deg)))
            .collect::<Result<_, _>>()?;
        for deg in (lo + 1)..=hi {
            let k = (deg - lo) as usize;
            let d = raw.complex.boundary(deg);
            if projectors[k - 1].mul(&d) != d.mul(&projectors[k]) {
                return Err(DelocError::ProjectorNotChainMap(deg));
            }
        }
        let invariant: Vec<Subspace<S>> = projectors.iter().map(image).collect();
        let complex = restrict_complex(&raw.complex, &invariant)?;
        classes.push(ClassHom {
            t,
            centralizer: z.clone(),
            raw,
            invariant,
            complex,
        });
    }
    Ok(CovariantHom { classes, lo, hi })
}

/// `dim H^n_G(X, Y)` for `n ∈ [−dim Y, dim X]`.
pub fn bs_bivariant<S: Scalar>(x: &GComplex, y: &GComplex, budget: usize) -> Result<GradedDims, DelocError> {
    let m = covariant_cochains::<S>(x)?;
    let n = covariant_cochains::<S>(y)?;
    Ok(covariant_hom(&m, &n, budget)?.homology())
}

/// `Σ_[t] dim H^n(X^t)^{Z(t)}`, computed from projector ranks on cochains.
pub fn delocalized_point<S: Scalar>(x: &GComplex) -> Result<GradedDims, DelocError> {
    let bry = x.brylinski_space()?;
    let top = x.complex().counts().len().max(1);
    let g = x.group();
    let mut dims = vec![0usize; top];
    for (_, fixed, z) in bry.components() {
        // projector on C^p(X^t), p = 0..top
        let proj: Vec<Matrix<S>> = (0..top)
            .map(|p| average_projector(g, z, |s| x.chain_map::<S>(s, fixed, fixed, p)))
            .collect::<Result<_, _>>()?;
        let cob: Vec<Matrix<S>> = (0..top).map(|p| fixed.boundary_matrix::<S>(p + 1).transpose()).collect();
        for p in 0..top {
            let cocycles = rank(&proj[p]) - rank(&cob[p].mul(&proj[p]));
            let coboundaries = if p == 0 { 0 } else { rank(&cob[p - 1].mul(&proj[p - 1])) };
            dims[p] += cocycles - coboundaries;
        }
    }
    Ok(GradedDims { lo: 0, dims })
}

/// A covariant chain map between covariant complexes with equal degree ranges.
#[derive(Clone, Debug)]
pub struct CovariantMap<S> {
    lo: i64,
    // maps[t][k]: degree lo + k of the source piece t → target piece t
    maps: Vec<Vec<Matrix<S>>>,
}

impl<S: Scalar> CovariantMap<S> {
    pub fn get(&self, t: usize, n: i64) -> &Matrix<S> {
        &self.maps[t][(n - self.lo) as usize]
    }

    pub fn is_chain_map(&self, src: &CovariantComplex<S>, dst: &CovariantComplex<S>) -> bool {
        src.group.elements().all(|t| {
            ((src.lo() + 1)..=src.hi())
                .all(|n| self.get(t, n - 1).mul(&src.piece(t).boundary(n)) == dst.piece(t).boundary(n).mul(self.get(t, n)))
        })
    }

    pub fn is_equivariant(&self, src: &CovariantComplex<S>, dst: &CovariantComplex<S>) -> bool {
        let g = &src.group;
        g.elements().all(|s| {
            g.elements().all(|t| {
                (src.lo()..=src.hi()).all(|n| dst.act(s, t, n).mul(self.get(t, n)) == self.get(g.conj(s, t), n).mul(&src.act(s, t, n)))
            })
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &CovariantMap<S>) -> CovariantMap<S> {
        CovariantMap {
            lo: self.lo,
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.mul(y)).collect())
                .collect(),
        }
    }

    /// Precomposition `φ ↦ φ ∘ f` on `Hom(·, N)` for the class representative `t`,
    /// from the Hom complex out of the target to the one out of the source.
    pub fn precompose(&self, t: usize, from: &HomChainComplex<S>, to: &HomChainComplex<S>, deg: i64) -> Matrix<S> {
        let lf = &from.layouts[(deg - from.complex.lo()) as usize];
        let lt = &to.layouts[(deg - to.complex.lo()) as usize];
        let mut blocks = Vec::new();
        for (j, &(p, q, _, dq)) in lf.blocks.iter().enumerate() {
            if let Some(i) = lt.position(p, q) {
                blocks.push((i, j, crate::homalg::right_mul_op(self.get(t, p), dq)));
            }
        }
        Matrix::from_blocks(&lt.dims(), &lf.dims(), blocks)
    }
}

/// Restriction of cochains along an invariant subcomplex `sub ⊆ x`.
pub fn restriction_map<S: Scalar>(x: &GComplex, sub: &GComplex) -> Result<CovariantMap<S>, DelocError> {
    if !sub.complex().is_subcomplex_of(x.complex()) || sub.complex().n_ids() != x.complex().n_ids() {
        return Err(DelocError::NotSubcomplex(
            "source is not a subcomplex with the same vertex ids".into(),
        ));
    }
    let bx = x.brylinski_space()?;
    let bs = sub.brylinski_space()?;
    let top = x.complex().counts().len().max(1);
    let lo = -(top as i64 - 1);
    let maps = x
        .group()
        .elements()
        .map(|t| {
            (lo..=0)
                .map(|n| {
                    let p = (-n) as usize;
                    let trip = bs.fixed[t]
                        .simplices(p)
                        .iter()
                        .enumerate()
                        .map(|(i, s)| (i, bx.fixed[t].index_of(s).expect("subcomplex"), S::one()));
                    Matrix::from_triplets(bs.fixed[t].count(p), bx.fixed[t].count(p), trip)
                })
                .collect()
        })
        .collect();
    Ok(CovariantMap { lo, maps })
}

/// Pads a covariant complex of a lower-dimensional subcomplex to the degree range of `x`.
pub fn covariant_cochains_padded<S: Scalar>(sub: &GComplex, top: usize) -> Result<CovariantComplex<S>, DelocError> {
    let bry = sub.brylinski_space()?;
    let pieces: Vec<ChainComplex<S>> = bry.fixed.iter().map(|f| padded_cochains(f, top)).collect();
    let group = sub.group().clone();
    let fixed = &bry.fixed;
    CovariantComplex::new(group.clone(), pieces, |s, t, n| {
        let p = (-n) as usize;
        sub.chain_map::<S>(s, &fixed[t], &fixed[group.conj(s, t)], p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{cyclic, trivial_group};
    use crate::homalg::DEFAULT_HOM_BUDGET;
    use crate::Q;

    fn point(g: FiniteGroup) -> GComplex {
        GComplex::trivial_action(SComplex::numbered(1, &[]).unwrap(), g)
    }

    #[test]
    fn points() {
        let p = point(trivial_group());
        assert_eq!(bs_bivariant::<Q>(&p, &p, DEFAULT_HOM_BUDGET).unwrap().dims, vec![1]);
        let p2 = point(cyclic(2));
        assert_eq!(bs_bivariant::<Q>(&p2, &p2, DEFAULT_HOM_BUDGET).unwrap().dims, vec![2]);
        assert_eq!(delocalized_point::<Q>(&p2).unwrap().dims, vec![2]);
    }

    #[test]
    fn free_pair_of_points() {
        let x = GComplex::new(SComplex::numbered(2, &[]).unwrap(), cyclic(2), &[vec![1, 0]]).unwrap();
        assert_eq!(delocalized_point::<Q>(&x).unwrap().dims, vec![1]);
        assert_eq!(bs_bivariant::<Q>(&x, &point(cyclic(2)), DEFAULT_HOM_BUDGET).unwrap().dims, vec![1]);
    }

    #[test]
    fn cochain_pieces_of_swapped_edge() {
        let x = GComplex::new(SComplex::numbered(2, &[vec![0, 1]]).unwrap(), cyclic(2), &[vec![1, 0]])
            .unwrap()
            .subdivide();
        let c = covariant_cochains::<Q>(&x).unwrap();
        assert_eq!(c.piece(0).dims().dims, vec![2, 3]);
        assert_eq!(c.piece(1).dims().dims, vec![0, 1]);
        for n in c.lo()..=c.hi() {
            let m = c.module(n).unwrap();
            for t in 0..2 {
                assert!(m.t_operator(t).is_identity());
                assert!(m.projector_e(t).is_identity());
            }
            assert_eq!(m.hyperbolic_dim(), 0);
        }
    }
}
