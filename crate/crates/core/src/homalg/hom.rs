//! Hom complexes between chain complexes and between supercomplexes.
//!
//! A map `φ: C → D` between blocks of dimensions `c` and `d` is stored
//! row-major: coordinate `r * c + k` is the entry `φ[r][k]`. The differential
//! is `∂φ = φ∂_C − (−1)^{|φ|} ∂_D φ` throughout.

use super::complex::{restrict_map, ChainComplex, Supercomplex};
use super::echelon::{kernel, Subspace};
use super::matrix::Matrix;
use super::HomalgError;
use crate::scalar::Scalar;

/// Default bound on the total dimension of a Hom complex.
pub const DEFAULT_HOM_BUDGET: usize = 250_000;

/// `φ ↦ X φ` on row-major `(X.ncols() × cols)` blocks.
pub fn left_mul_op<S: Scalar>(x: &Matrix<S>, cols: usize) -> Matrix<S> {
    x.kron(&Matrix::identity(cols))
}

/// `φ ↦ φ Y` on row-major `(rows × Y.nrows())` blocks.
pub fn right_mul_op<S: Scalar>(y: &Matrix<S>, rows: usize) -> Matrix<S> {
    Matrix::identity(rows).kron(&y.transpose())
}

/// `φ ↦ X φ Y` on row-major blocks.
pub fn conj_op<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
    x.kron(&y.transpose())
}

/// Block layout of one Hom degree: `(source piece, target piece)` pairs.
#[derive(Clone, Debug)]
pub struct HomLayout {
    pub blocks: Vec<(i64, i64, usize, usize)>,
}

impl HomLayout {
    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.2 * b.3).collect()
    }

    pub fn total(&self) -> usize {
        self.dims().iter().sum()
    }

    pub fn position(&self, src: i64, dst: i64) -> Option<usize> {
        self.blocks.iter().position(|b| b.0 == src && b.1 == dst)
    }
}

/// Hom chain complex: degree `n` collects `Hom(C_p, D_{p+n})` over all `p`.
pub struct HomChainComplex<S> {
    pub complex: ChainComplex<S>,
    pub layouts: Vec<HomLayout>,
}

pub fn hom_chain_complex<S: Scalar>(c: &ChainComplex<S>, d: &ChainComplex<S>, budget: usize) -> Result<HomChainComplex<S>, HomalgError> {
    let lo = d.lo() - c.hi();
    let hi = d.hi() - c.lo();
    let layouts: Vec<HomLayout> = (lo..=hi)
        .map(|n| HomLayout {
            blocks: (c.lo()..=c.hi())
                .filter(|p| p + n >= d.lo() && p + n <= d.hi())
                .map(|p| (p, p + n, c.dim(p), d.dim(p + n)))
                .collect(),
        })
        .collect();
    let total: usize = layouts.iter().map(HomLayout::total).sum();
    if total > budget {
        return Err(HomalgError::Budget { needed: total, budget });
    }
    let mut boundaries = Vec::new();
    for n in (lo + 1)..=hi {
        let src = &layouts[(n - lo) as usize];
        let dst = &layouts[(n - 1 - lo) as usize];
        let sign = if n.rem_euclid(2) == 0 { -1 } else { 1 };
        let mut blocks = Vec::new();
        for (j, &(p, q, cp, dq)) in src.blocks.iter().enumerate() {
            // φ ∂_C lands in Hom(C_{p+1}, D_q)
            if let Some(i) = dst.position(p + 1, q) {
                blocks.push((i, j, right_mul_op(&c.boundary(p + 1), dq)));
            }
            // ∂_D φ lands in Hom(C_p, D_{q-1})
            if let Some(i) = dst.position(p, q - 1) {
                blocks.push((i, j, left_mul_op(&d.boundary(q), cp).scale(&S::from_int(sign))));
            }
        }
        boundaries.push(Matrix::from_blocks(&dst.dims(), &src.dims(), merge_blocks(blocks)));
    }
    let dims = layouts.iter().map(HomLayout::total).collect();
    Ok(HomChainComplex {
        complex: ChainComplex::new(lo, dims, boundaries)?,
        layouts,
    })
}

fn merge_blocks<S: Scalar>(blocks: Vec<(usize, usize, Matrix<S>)>) -> Vec<(usize, usize, Matrix<S>)> {
    let mut out: Vec<(usize, usize, Matrix<S>)> = Vec::new();
    for (i, j, m) in blocks {
        if let Some(slot) = out.iter_mut().find(|b| b.0 == i && b.1 == j) {
            slot.2 = slot.2.add(&m);
        } else {
            out.push((i, j, m));
        }
    }
    out
}

/// Hom supercomplex of two supercomplexes, before any restriction.
///
/// Even part is `Hom(C₀, D₀) ⊕ Hom(C₁, D₁)`, odd part is `Hom(C₀, D₁) ⊕ Hom(C₁, D₀)`.
#[derive(Clone, Debug)]
pub struct RawHom<S> {
    pub even_blocks: [usize; 2],
    pub odd_blocks: [usize; 2],
    pub d_even: Matrix<S>,
    pub d_odd: Matrix<S>,
    c_dims: (usize, usize),
    d_dims: (usize, usize),
}

impl<S: Scalar> RawHom<S> {
    pub fn build(c: &Supercomplex<S>, d: &Supercomplex<S>, budget: usize) -> Result<Self, HomalgError> {
        let (c0, c1) = (c.even_dim, c.odd_dim);
        let (d0, d1) = (d.even_dim, d.odd_dim);
        let even_blocks = [d0 * c0, d1 * c1];
        let odd_blocks = [d1 * c0, d0 * c1];
        let total = even_blocks.iter().chain(&odd_blocks).sum::<usize>();
        if total > budget {
            return Err(HomalgError::Budget { needed: total, budget });
        }
        let one = S::one();
        let minus = -S::one();
        // even φ = (φ00, φ11) -> odd (ψ01, ψ10)
        //   ψ01 = φ11 dCe − dDe φ00,  ψ10 = φ00 dCo − dDo φ11
        let d_even = Matrix::from_blocks(
            &odd_blocks,
            &even_blocks,
            vec![
                (0, 1, right_mul_op(&c.d_even, d1)),
                (0, 0, left_mul_op(&d.d_even, c0).scale(&minus)),
                (1, 0, right_mul_op(&c.d_odd, d0)),
                (1, 1, left_mul_op(&d.d_odd, c1).scale(&minus)),
            ],
        );
        // odd φ = (φ01, φ10) -> even (ψ00, ψ11)
        //   ψ00 = φ10 dCe + dDo φ01,  ψ11 = φ01 dCo + dDe φ10
        let d_odd = Matrix::from_blocks(
            &even_blocks,
            &odd_blocks,
            vec![
                (0, 1, right_mul_op(&c.d_even, d0)),
                (0, 0, left_mul_op(&d.d_odd, c0).scale(&one)),
                (1, 0, right_mul_op(&c.d_odd, d1)),
                (1, 1, left_mul_op(&d.d_even, c1)),
            ],
        );
        Ok(RawHom {
            even_blocks,
            odd_blocks,
            d_even,
            d_odd,
            c_dims: (c0, c1),
            d_dims: (d0, d1),
        })
    }

    pub fn even_dim(&self) -> usize {
        self.even_blocks.iter().sum()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_blocks.iter().sum()
    }

    /// Operator `φ ↦ X φ Y⁻¹`-style conjugation given block actions on C and D:
    /// `φ ↦ D(g) φ C(g')` where the caller supplies `C(g')` already inverted.
    pub fn conjugation(&self, c_even: &Matrix<S>, c_odd: &Matrix<S>, d_even: &Matrix<S>, d_odd: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
        let even = Matrix::from_blocks(
            &self.even_blocks,
            &self.even_blocks,
            vec![(0, 0, conj_op(d_even, c_even)), (1, 1, conj_op(d_odd, c_odd))],
        );
        let odd = Matrix::from_blocks(
            &self.odd_blocks,
            &self.odd_blocks,
            vec![(0, 0, conj_op(d_odd, c_even)), (1, 1, conj_op(d_even, c_odd))],
        );
        (even, odd)
    }

    /// `φ ↦ T_D φ − φ T_C`, whose kernel is the space of T-natural maps.
    pub fn naturality_defect(&self, c: &Supercomplex<S>, d: &Supercomplex<S>) -> (Matrix<S>, Matrix<S>) {
        let (c0, c1) = self.c_dims;
        let (d0, d1) = self.d_dims;
        let t = |defect: Option<&Matrix<S>>, n: usize| match defect {
            Some(m) => Matrix::identity(n).sub(m),
            None => Matrix::identity(n),
        };
        let tc0 = t(c.defect.as_ref().map(|p| &p.0), c0);
        let tc1 = t(c.defect.as_ref().map(|p| &p.1), c1);
        let td0 = t(d.defect.as_ref().map(|p| &p.0), d0);
        let td1 = t(d.defect.as_ref().map(|p| &p.1), d1);
        let op = |td: &Matrix<S>, tc: &Matrix<S>, rows: usize, cols: usize| left_mul_op(td, cols).sub(&right_mul_op(tc, rows));
        let even = Matrix::from_blocks(
            &self.even_blocks,
            &self.even_blocks,
            vec![(0, 0, op(&td0, &tc0, d0, c0)), (1, 1, op(&td1, &tc1, d1, c1))],
        );
        let odd = Matrix::from_blocks(
            &self.odd_blocks,
            &self.odd_blocks,
            vec![(0, 0, op(&td1, &tc0, d1, c0)), (1, 1, op(&td0, &tc1, d0, c1))],
        );
        (even, odd)
    }

    /// Restriction to invariant subspaces of the even and odd parts.
    pub fn restrict(&self, even: &Subspace<S>, odd: &Subspace<S>) -> Result<Supercomplex<S>, HomalgError> {
        Supercomplex::new(restrict_map(&self.d_even, even, odd)?, restrict_map(&self.d_odd, odd, even)?, None)
    }
}

/// Hom supercomplex. For paracomplexes the result consists of the maps that
/// commute with `T`, on which the differential squares to zero.
pub fn hom_supercomplex<S: Scalar>(c: &Supercomplex<S>, d: &Supercomplex<S>, budget: usize) -> Result<Supercomplex<S>, HomalgError> {
    let raw = RawHom::build(c, d, budget)?;
    if c.defect.is_none() && d.defect.is_none() {
        return Supercomplex::new(raw.d_even.clone(), raw.d_odd.clone(), None);
    }
    let (ne, no) = raw.naturality_defect(c, d);
    raw.restrict(&kernel(&ne), &kernel(&no))
}

/// Hom of two bounded chain complexes folded into a supercomplex.
pub fn hom_supercomplex_of_chains<S: Scalar>(
    c: &ChainComplex<S>,
    d: &ChainComplex<S>,
    budget: usize,
) -> Result<Supercomplex<S>, HomalgError> {
    Supercomplex::fold(&hom_chain_complex(c, d, budget)?.complex)
}
