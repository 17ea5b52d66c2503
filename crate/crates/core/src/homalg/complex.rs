use super::echelon::{image, kernel, Echelon, Subspace};
use super::matrix::{Matrix, SparseVec};
use super::HomalgError;
use crate::scalar::Scalar;

/// Dimensions indexed by a contiguous integer degree range starting at `lo`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub lo: i64,
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn get(&self, n: i64) -> usize {
        if n < self.lo {
            return 0;
        }
        self.dims.get((n - self.lo) as usize).copied().unwrap_or(0)
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dims.len()).map(move |k| self.lo + k as i64)
    }

    /// Euler characteristic `sum (-1)^n dims[n]`.
    pub fn euler(&self) -> i64 {
        self.degrees()
            .map(|n| {
                if n.rem_euclid(2) == 0 {
                    self.get(n) as i64
                } else {
                    -(self.get(n) as i64)
                }
            })
            .sum()
    }

    /// Sum over even and odd degrees.
    pub fn fold_parity(&self) -> (usize, usize) {
        let mut out = (0, 0);
        for n in self.degrees() {
            if n.rem_euclid(2) == 0 {
                out.0 += self.get(n);
            } else {
                out.1 += self.get(n);
            }
        }
        out
    }

    /// Drops zero entries at both ends, keeping degree 0 when it falls inside.
    pub fn trimmed(&self) -> GradedDims {
        let nz: Vec<i64> = self.degrees().filter(|&n| self.get(n) != 0).collect();
        match (nz.first(), nz.last()) {
            (Some(&a), Some(&b)) => GradedDims {
                lo: a,
                dims: (a..=b).map(|n| self.get(n)).collect(),
            },
            _ => GradedDims { lo: 0, dims: vec![] },
        }
    }
}

/// A bounded chain complex of finite-dimensional spaces; `boundary(n): C_n -> C_{n-1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex<S> {
    lo: i64,
    dims: Vec<usize>,
    // d[k] is the boundary out of degree lo + k
    d: Vec<Matrix<S>>,
}

impl<S: Scalar> ChainComplex<S> {
    /// Builds a complex over degrees `lo..lo+dims.len()`. `boundaries[k]` leaves
    /// degree `lo + k + 1`; the boundary out of the lowest degree is zero.
    pub fn new(lo: i64, dims: Vec<usize>, boundaries: Vec<Matrix<S>>) -> Result<Self, HomalgError> {
        if boundaries.len() + 1 != dims.len().max(1) && !(dims.is_empty() && boundaries.is_empty()) {
            return Err(HomalgError::Shape(format!(
                "{} boundaries for {} degrees",
                boundaries.len(),
                dims.len()
            )));
        }
        let mut d = Vec::with_capacity(dims.len());
        if let Some(&d0) = dims.first() {
            d.push(Matrix::zeros(0, d0));
        }
        for (k, m) in boundaries.into_iter().enumerate() {
            if m.nrows() != dims[k] || m.ncols() != dims[k + 1] {
                return Err(HomalgError::Shape(format!(
                    "boundary from degree {} is {}x{}, expected {}x{}",
                    lo + k as i64 + 1,
                    m.nrows(),
                    m.ncols(),
                    dims[k],
                    dims[k + 1]
                )));
            }
            d.push(m);
        }
        let c = ChainComplex { lo, dims, d };
        c.check_square_zero()?;
        Ok(c)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.dims[(n - self.lo) as usize]
        }
    }

    pub fn dims(&self) -> GradedDims {
        GradedDims {
            lo: self.lo,
            dims: self.dims.clone(),
        }
    }

    /// Boundary `C_n -> C_{n-1}`; an empty matrix outside the range.
    pub fn boundary(&self, n: i64) -> Matrix<S> {
        if n < self.lo || n > self.hi() {
            return Matrix::zeros(self.dim(n - 1), self.dim(n));
        }
        let m = &self.d[(n - self.lo) as usize];
        if m.nrows() == self.dim(n - 1) {
            m.clone()
        } else {
            Matrix::zeros(self.dim(n - 1), self.dim(n))
        }
    }

    fn check_square_zero(&self) -> Result<(), HomalgError> {
        for n in (self.lo + 2)..=self.hi() {
            if !self.boundary(n - 1).mul(&self.boundary(n)).is_zero() {
                return Err(HomalgError::NotAComplex(format!("d∘d ≠ 0 leaving degree {n}")));
            }
        }
        Ok(())
    }

    /// `dim H_n = dim ker d_n - rank d_{n+1}` for every degree in range.
    pub fn homology(&self) -> GradedDims {
        let ranks: Vec<usize> = (self.lo..=self.hi() + 1).map(|n| self.boundary(n).rank()).collect();
        GradedDims {
            lo: self.lo,
            dims: (0..self.dims.len()).map(|k| self.dims[k] - ranks[k] - ranks[k + 1]).collect(),
        }
    }

    pub fn euler(&self) -> i64 {
        self.dims().euler()
    }

    /// Applies an invertible change of basis `P_n` in each degree: `d'_n = P_{n-1} d_n P_n^{-1}`.
    pub fn change_basis(&self, p: &[Matrix<S>], p_inv: &[Matrix<S>]) -> Result<Self, HomalgError> {
        let boundaries = ((self.lo + 1)..=self.hi())
            .map(|n| {
                let k = (n - self.lo) as usize;
                p[k - 1].mul(&self.boundary(n)).mul(&p_inv[k])
            })
            .collect();
        ChainComplex::new(self.lo, self.dims.clone(), boundaries)
    }
}

/// A relation subspace inside one degree of a complex.
///
/// `keep` lists ambient coordinates that should survive into the chosen
/// complement basis whenever the relations allow it.
#[derive(Clone, Debug)]
pub struct QuotientPresentation<S> {
    pub ambient: usize,
    pub relations: Vec<SparseVec<S>>,
    pub keep: Vec<usize>,
}

impl<S: Scalar> QuotientPresentation<S> {
    pub fn new(ambient: usize, relations: Vec<SparseVec<S>>) -> Self {
        QuotientPresentation {
            ambient,
            relations,
            keep: Vec::new(),
        }
    }

    pub fn with_keep(mut self, keep: Vec<usize>) -> Self {
        self.keep = keep;
        self
    }

    pub fn empty(ambient: usize) -> Self {
        Self::new(ambient, Vec::new())
    }
}

/// Quotient of a vector space by a presentation, with explicit projection and section.
#[derive(Clone, Debug)]
pub struct QuotientSpace<S> {
    ambient: usize,
    relations: Subspace<S>,
    // relation subspace is stored in permuted coordinates
    to_perm: Vec<usize>,
    from_perm: Vec<usize>,
    complement: Vec<usize>,
}

impl<S: Scalar> QuotientSpace<S> {
    pub fn new(p: &QuotientPresentation<S>) -> Self {
        let n = p.ambient;
        let mut is_keep = vec![false; n];
        for &k in &p.keep {
            is_keep[k] = true;
        }
        // non-kept coordinates first so they are consumed as pivots first
        let from_perm: Vec<usize> = (0..n).filter(|&i| !is_keep[i]).chain((0..n).filter(|&i| is_keep[i])).collect();
        let mut to_perm = vec![0; n];
        for (pos, &i) in from_perm.iter().enumerate() {
            to_perm[i] = pos;
        }
        let mut e = Echelon::new(n);
        let mut rels: Vec<SparseVec<S>> = p.relations.iter().map(|r| permute(r, &to_perm)).collect();
        rels.sort_by_key(Vec::len);
        for r in rels {
            e.insert(r);
        }
        let relations = e.into_subspace();
        let mut complement: Vec<usize> = relations.complement_cols().into_iter().map(|c| from_perm[c]).collect();
        complement.sort_unstable();
        QuotientSpace {
            ambient: n,
            relations,
            to_perm,
            from_perm,
            complement,
        }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Ambient coordinates whose unit vectors form the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[(usize, S)]) -> SparseVec<S> {
        let reduced = self.relations.reduce(&permute(v, &self.to_perm));
        let mut out: Vec<(usize, S)> = reduced
            .into_iter()
            .map(|(i, x)| {
                let amb = self.from_perm[i];
                let k = self.complement.binary_search(&amb).expect("reduced vector left the complement");
                (k, x)
            })
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn projection_matrix(&self) -> Matrix<S> {
        let cols: Vec<SparseVec<S>> = (0..self.ambient).map(|i| self.project(&[(i, S::one())])).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn section_matrix(&self) -> Matrix<S> {
        Matrix::from_triplets(
            self.ambient,
            self.dim(),
            self.complement.iter().enumerate().map(|(k, &i)| (i, k, S::one())),
        )
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.dim()
    }
}

fn permute<S: Scalar>(v: &[(usize, S)], map: &[usize]) -> SparseVec<S> {
    let mut out: Vec<(usize, S)> = v.iter().map(|(i, x)| (map[*i], x.clone())).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// A quotient complex together with the maps that relate it to the ambient complex.
#[derive(Clone, Debug)]
pub struct Quotient<S> {
    pub complex: ChainComplex<S>,
    pub spaces: Vec<QuotientSpace<S>>,
    /// ambient -> quotient, per degree from `complex.lo()`
    pub projections: Vec<Matrix<S>>,
    /// quotient -> ambient, per degree
    pub sections: Vec<Matrix<S>>,
}

/// Passes to the quotient of `c` by one relation presentation per degree.
pub fn quotient_complex<S: Scalar>(c: &ChainComplex<S>, presentations: &[QuotientPresentation<S>]) -> Result<Quotient<S>, HomalgError> {
    let n_deg = (c.hi() - c.lo() + 1).max(0) as usize;
    if presentations.len() != n_deg {
        return Err(HomalgError::Shape(format!(
            "{} presentations for {} degrees",
            presentations.len(),
            n_deg
        )));
    }
    let spaces: Vec<QuotientSpace<S>> = presentations
        .iter()
        .enumerate()
        .map(|(k, p)| {
            if p.ambient != c.dim(c.lo() + k as i64) {
                Err(HomalgError::Shape(format!(
                    "presentation in degree {} has wrong ambient dimension",
                    c.lo() + k as i64
                )))
            } else {
                Ok(QuotientSpace::new(p))
            }
        })
        .collect::<Result<_, _>>()?;
    // boundary stability
    for k in 1..n_deg {
        let n = c.lo() + k as i64;
        let d = c.boundary(n);
        for r in &presentations[k].relations {
            if !spaces[k - 1].project(&d.apply(r)).is_empty() {
                return Err(HomalgError::UnstableRelations(n));
            }
        }
    }
    let projections: Vec<Matrix<S>> = spaces.iter().map(QuotientSpace::projection_matrix).collect();
    let sections: Vec<Matrix<S>> = spaces.iter().map(QuotientSpace::section_matrix).collect();
    let boundaries = (1..n_deg)
        .map(|k| projections[k - 1].mul(&c.boundary(c.lo() + k as i64)).mul(&sections[k]))
        .collect();
    let complex = ChainComplex::new(c.lo(), spaces.iter().map(QuotientSpace::dim).collect(), boundaries)?;
    Ok(Quotient {
        complex,
        spaces,
        projections,
        sections,
    })
}

/// Restricts a complex to subcomplex given by one subspace per degree, in the
/// reduced bases of those subspaces.
pub fn restrict_complex<S: Scalar>(c: &ChainComplex<S>, subs: &[Subspace<S>]) -> Result<ChainComplex<S>, HomalgError> {
    let boundaries = ((c.lo() + 1)..=c.hi())
        .map(|n| {
            let k = (n - c.lo()) as usize;
            restrict_map(&c.boundary(n), &subs[k], &subs[k - 1])
        })
        .collect::<Result<_, _>>()?;
    ChainComplex::new(c.lo(), subs.iter().map(Subspace::dim).collect(), boundaries)
}

/// Matrix of `m` restricted to `src`, landing in `dst`, in reduced bases.
pub fn restrict_map<S: Scalar>(m: &Matrix<S>, src: &Subspace<S>, dst: &Subspace<S>) -> Result<Matrix<S>, HomalgError> {
    let mut cols = Vec::with_capacity(src.dim());
    for b in src.basis() {
        let img = m.apply(b);
        if !dst.contains(&img) {
            return Err(HomalgError::NotInvariant);
        }
        cols.push(dst.coords(&img));
    }
    Ok(Matrix::from_columns(dst.dim(), &cols))
}

/// A ℤ/2-graded space with an odd differential. When `defect` is present the
/// differential squares to that operator (`id − T`) instead of zero.
#[derive(Clone, Debug)]
pub struct Supercomplex<S> {
    pub even_dim: usize,
    pub odd_dim: usize,
    /// even -> odd
    pub d_even: Matrix<S>,
    /// odd -> even
    pub d_odd: Matrix<S>,
    /// `(id − T)` on the even and odd parts
    pub defect: Option<(Matrix<S>, Matrix<S>)>,
}

impl<S: Scalar> Supercomplex<S> {
    pub fn new(d_even: Matrix<S>, d_odd: Matrix<S>, defect: Option<(Matrix<S>, Matrix<S>)>) -> Result<Self, HomalgError> {
        let even_dim = d_even.ncols();
        let odd_dim = d_even.nrows();
        if d_odd.nrows() != even_dim || d_odd.ncols() != odd_dim {
            return Err(HomalgError::Shape("odd differential does not match even differential".into()));
        }
        let s = Supercomplex {
            even_dim,
            odd_dim,
            d_even,
            d_odd,
            defect,
        };
        s.check()?;
        Ok(s)
    }

    /// Even-degree part of a bounded chain complex folded into parities.
    pub fn fold(c: &ChainComplex<S>) -> Result<Self, HomalgError> {
        let (lo, hi) = (c.lo(), c.hi());
        let even: Vec<i64> = (lo..=hi).filter(|n| n.rem_euclid(2) == 0).collect();
        let odd: Vec<i64> = (lo..=hi).filter(|n| n.rem_euclid(2) == 1).collect();
        let ed: Vec<usize> = even.iter().map(|&n| c.dim(n)).collect();
        let od: Vec<usize> = odd.iter().map(|&n| c.dim(n)).collect();
        let mut be = Vec::new();
        for (j, &n) in even.iter().enumerate() {
            if let Some(i) = odd.iter().position(|&m| m == n - 1) {
                be.push((i, j, c.boundary(n)));
            }
        }
        let mut bo = Vec::new();
        for (j, &n) in odd.iter().enumerate() {
            if let Some(i) = even.iter().position(|&m| m == n - 1) {
                bo.push((i, j, c.boundary(n)));
            }
        }
        Supercomplex::new(Matrix::from_blocks(&od, &ed, be), Matrix::from_blocks(&ed, &od, bo), None)
    }

    pub fn check(&self) -> Result<(), HomalgError> {
        let sq_even = self.d_odd.mul(&self.d_even);
        let sq_odd = self.d_even.mul(&self.d_odd);
        let ok = match &self.defect {
            None => sq_even.is_zero() && sq_odd.is_zero(),
            Some((de, d_o)) => sq_even == *de && sq_odd == *d_o,
        };
        if ok {
            Ok(())
        } else {
            Err(HomalgError::NotAComplex(if self.defect.is_some() {
                "∂² ≠ id − T".into()
            } else {
                "∂² ≠ 0".into()
            }))
        }
    }

    pub fn is_para(&self) -> bool {
        self.defect.as_ref().map(|(a, b)| !a.is_zero() || !b.is_zero()).unwrap_or(false)
    }

    /// `(dim H_even, dim H_odd)`; only defined when ∂² = 0.
    pub fn homology(&self) -> Result<(usize, usize), HomalgError> {
        if self.is_para() {
            return Err(HomalgError::NotAComplex("homology of a paracomplex with T ≠ id".into()));
        }
        let re = self.d_even.rank();
        let ro = self.d_odd.rank();
        Ok((self.even_dim - re - ro, self.odd_dim - ro - re))
    }

    /// Restriction to a pair of subspaces preserved by the differential.
    pub fn restrict(&self, even: &Subspace<S>, odd: &Subspace<S>) -> Result<Self, HomalgError> {
        let de = restrict_map(&self.d_even, even, odd)?;
        let d_o = restrict_map(&self.d_odd, odd, even)?;
        let defect = match &self.defect {
            Some((a, b)) => Some((restrict_map(a, even, even)?, restrict_map(b, odd, odd)?)),
            None => None,
        };
        Supercomplex::new(de, d_o, defect)
    }
}

/// Kernel and image of a differential, used for traces on homology.
pub fn cycles_and_boundaries<S: Scalar>(d_out: &Matrix<S>, d_in: &Matrix<S>) -> (Subspace<S>, Subspace<S>) {
    (kernel(d_out), image(d_in))
}
