//! Cosheaf homology with coefficients in class functions on simplex
//! stabilizers, and its comparison with Bredon homology.
//!
//! Simplices carry the orientation of their sorted vertex order, so
//! `f[−σ] = −f[σ]` holds by construction. The group acts by
//! `g·f[σ] = ±(f conjugated by g)[gσ]`, the sign being the orientation
//! sign of `g` on `σ`, and the complex of coinvariants is the quotient by
//! `g·x − x`.

use thiserror::Error;

use crate::bredon::{bredon_complex, coefficient_map, BredonComplex, BredonError};
use crate::fingroup::{ClassFunction, Subgroup};
use crate::gcomplex::{GComplex, GComplexError, OrbitData};
use crate::homalg::{collect_sparse, quotient_complex, ChainComplex, GradedDims, HomalgError, Matrix, Quotient, QuotientPresentation};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosheafError {
    #[error("cosheaf: dimension mismatch in degree {degree}: cosheaf {cosheaf}, bredon {bredon}")]
    DimensionMismatch { degree: usize, cosheaf: usize, bredon: usize },
    #[error(transparent)]
    Complex(#[from] GComplexError),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    Bredon(#[from] BredonError),
}

/// `⊕_σ R(G_σ)` with the induction boundary, and its coinvariant quotient.
#[derive(Clone, Debug)]
pub struct CosheafComplex<S> {
    pub orbits: OrbitData,
    /// class counts of each stabilizer, per degree and simplex
    pub class_counts: Vec<Vec<usize>>,
    /// `offsets[p][i]`: first coordinate of simplex `i`, with a trailing total
    pub offsets: Vec<Vec<usize>>,
    pub ambient: ChainComplex<S>,
    pub quotient: Quotient<S>,
}

impl<S: Scalar> CosheafComplex<S> {
    pub fn index(&self, p: usize, simplex: usize, class: usize) -> usize {
        self.offsets[p][simplex] + class
    }

    pub fn locate(&self, p: usize, idx: usize) -> (usize, usize) {
        let i = self.offsets[p].partition_point(|&o| o <= idx) - 1;
        (i, idx - self.offsets[p][i])
    }

    pub fn stabilizer(&self, p: usize, simplex: usize) -> &Subgroup {
        &self.orbits.info(p, simplex).stabilizer
    }

    pub fn complex(&self) -> &ChainComplex<S> {
        &self.quotient.complex
    }

    pub fn homology(&self) -> GradedDims {
        self.quotient.complex.homology()
    }
}

pub fn cosheaf_complex<S: Scalar>(x: &GComplex) -> Result<CosheafComplex<S>, CosheafError> {
    let orbits = x.orbit_data()?;
    let group = x.group();
    let cx = x.complex();
    let top = cx.counts().len();
    let class_counts: Vec<Vec<usize>> = (0..top)
        .map(|p| {
            (0..cx.count(p))
                .map(|i| orbits.info(p, i).stabilizer.classes(group).len())
                .collect()
        })
        .collect();
    let offsets: Vec<Vec<usize>> = class_counts
        .iter()
        .map(|cc| {
            let mut acc = 0;
            let mut v: Vec<usize> = cc
                .iter()
                .map(|&c| {
                    let o = acc;
                    acc += c;
                    o
                })
                .collect();
            v.push(acc);
            v
        })
        .collect();
    let dims: Vec<usize> = offsets.iter().map(|o| *o.last().expect("sentinel")).collect();

    let mut boundaries = Vec::new();
    for p in 1..top {
        let mut trip = Vec::new();
        for (j, s) in cx.simplices(p).iter().enumerate() {
            let hs = &orbits.info(p, j).stabilizer;
            for i in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
                let r = cx.index_of(&face).expect("closed under faces");
                let hf = &orbits.info(p - 1, r).stabilizer;
                let ind = coefficient_map::<S>(group, hs, hf, group.identity())?;
                let sign = if i % 2 == 0 { S::one() } else { -S::one() };
                for c in 0..class_counts[p][j] {
                    for (row, v) in ind.column(c) {
                        trip.push((offsets[p - 1][r] + row, offsets[p][j] + c, v * sign.clone()));
                    }
                }
            }
        }
        boundaries.push(Matrix::from_triplets(dims[p - 1], dims[p], trip));
    }
    let ambient = ChainComplex::new(0, dims.clone(), boundaries)?;

    let mut presentations = Vec::with_capacity(top);
    for p in 0..top {
        let mut relations = Vec::new();
        let mut keep = Vec::new();
        for &rep in orbits.reps(p) {
            let s = &cx.simplices(p)[rep];
            let h = &orbits.info(p, rep).stabilizer;
            for c in 0..class_counts[p][rep] {
                keep.push(offsets[p][rep] + c);
                let e = ClassFunction::<S>::indicator(group, h, c);
                for g in group.elements() {
                    let (img, sign) = x.act_simplex(g, s);
                    let t = cx.index_of(&img).expect("simplicial");
                    let moved = e.conjugate(group, g);
                    debug_assert_eq!(moved.subgroup(), &orbits.info(p, t).stabilizer);
                    let mut v: Vec<(usize, S)> = moved
                        .values()
                        .iter()
                        .enumerate()
                        .filter(|(_, a)| !a.is_negligible())
                        .map(|(k, a)| (offsets[p][t] + k, a.clone() * S::from_int(sign as i64)))
                        .collect();
                    v.push((offsets[p][rep] + c, -S::one()));
                    let v = collect_sparse(v);
                    if !v.is_empty() {
                        relations.push(v);
                    }
                }
            }
        }
        presentations.push(QuotientPresentation::new(dims[p], relations).with_keep(keep));
    }
    let quotient = quotient_complex(&ambient, &presentations)?;
    Ok(CosheafComplex {
        orbits,
        class_counts,
        offsets,
        ambient,
        quotient,
    })
}

pub fn cosheaf_homology<S: Scalar>(x: &GComplex) -> Result<GradedDims, CosheafError> {
    Ok(cosheaf_complex::<S>(x)?.homology())
}

/// The maps `φ: S^G_* → Bredon` and `ψ` back, with the verified identities.
#[derive(Clone, Debug)]
pub struct Comparison<S> {
    pub phi: Vec<Matrix<S>>,
    pub psi: Vec<Matrix<S>>,
    pub phi_chain_map: bool,
    pub psi_chain_map: bool,
    /// φ and ψ vanish on the relations of their source quotients
    pub well_defined: bool,
    pub psi_phi_identity: bool,
    pub phi_psi_identity: bool,
    pub cosheaf: GradedDims,
    pub bredon: GradedDims,
}

impl<S> Comparison<S> {
    pub fn is_iso(&self) -> bool {
        self.phi_chain_map && self.psi_chain_map && self.well_defined && self.psi_phi_identity && self.phi_psi_identity
    }

    pub fn homology_match(&self) -> bool {
        self.cosheaf == self.bredon
    }
}

pub fn compare_bredon_cosheaf<S: Scalar>(x: &GComplex) -> Result<Comparison<S>, CosheafError> {
    let c = cosheaf_complex::<S>(x)?;
    let b = bredon_complex::<S>(x)?;
    compare_complexes(x, &c, &b)
}

pub fn compare_complexes<S: Scalar>(x: &GComplex, c: &CosheafComplex<S>, b: &BredonComplex<S>) -> Result<Comparison<S>, CosheafError> {
    let group = x.group();
    let cx = x.complex();
    let top = cx.counts().len();
    let mut phi = Vec::with_capacity(top);
    let mut psi = Vec::with_capacity(top);
    let mut well_defined = true;
    let mut psi_phi_identity = true;
    let mut phi_psi_identity = true;
    for p in 0..top {
        let (dc, db) = (c.complex().dim(p as i64), b.complex().dim(p as i64));
        if dc != db {
            return Err(CosheafError::DimensionMismatch {
                degree: p,
                cosheaf: dc,
                bredon: db,
            });
        }
        // φ on the ambient: f[σ] ↦ [σ](G_σ) ⊗ f
        let amb_c = c.ambient.dim(p as i64);
        let amb_b = b.ambient.dim(p as i64);
        let mut trip = Vec::new();
        for (sidx, s) in cx.simplices(p).iter().enumerate() {
            let h = c.stabilizer(p, sidx);
            let i = b.category.index_of(h).expect("stabilizer is a subgroup");
            let t = b.fixed[i].index_of(s).expect("σ is fixed by its stabilizer");
            for k in 0..c.class_counts[p][sidx] {
                trip.push((b.index(p, i, t, k), c.index(p, sidx, k), S::one()));
            }
        }
        let phi_amb = Matrix::from_triplets(amb_b, amb_c, trip);
        // ψ on the ambient: [τ](H) ⊗ f ↦ ind_H^{G_τ}(f)[τ]
        let mut trip = Vec::new();
        for (i, h) in b.category.subgroups.iter().enumerate() {
            for (t, tau) in b.fixed[i].simplices(p).iter().enumerate() {
                let sidx = cx.index_of(tau).expect("subcomplex");
                let ind = coefficient_map::<S>(group, h, c.stabilizer(p, sidx), group.identity())?;
                for k in 0..b.class_counts[i] {
                    for (row, v) in ind.column(k) {
                        trip.push((c.index(p, sidx, row), b.index(p, i, t, k), v));
                    }
                }
            }
        }
        let psi_amb = Matrix::from_triplets(amb_c, amb_b, trip);
        let qc = &c.quotient;
        let qb = &b.quotient;
        let phi_p = qb.projections[p].mul(&phi_amb).mul(&qc.sections[p]);
        let psi_p = qc.projections[p].mul(&psi_amb).mul(&qb.sections[p]);
        well_defined &= qb.projections[p].mul(&phi_amb) == phi_p.mul(&qc.projections[p]);
        well_defined &= qc.projections[p].mul(&psi_amb) == psi_p.mul(&qb.projections[p]);
        psi_phi_identity &= psi_p.mul(&phi_p).is_identity();
        phi_psi_identity &= phi_p.mul(&psi_p).is_identity();
        phi.push(phi_p);
        psi.push(psi_p);
    }
    let mut phi_chain_map = true;
    let mut psi_chain_map = true;
    for p in 1..top {
        let n = p as i64;
        let (dc, db) = (c.complex().boundary(n), b.complex().boundary(n));
        phi_chain_map &= phi[p - 1].mul(&dc) == db.mul(&phi[p]);
        psi_chain_map &= psi[p - 1].mul(&db) == dc.mul(&psi[p]);
    }
    Ok(Comparison {
        phi,
        psi,
        phi_chain_map,
        psi_chain_map,
        well_defined,
        psi_phi_identity,
        phi_psi_identity,
        cosheaf: c.homology(),
        bredon: b.homology(),
    })
}
