//! Equivariant noncommutative differential forms.
//!
//! `Ω^0 = O_G ⊗ A` and `Ω^n = O_G ⊗ A⁺ ⊗ A^{⊗n}` for `n ≥ 1`, where `O_G` has
//! basis `δ_t` and `A⁺` is the unitization (index 0 is the adjoined unit,
//! index `k + 1` is `e_k`). The basis vector `δ_t ⊗ a0 ⊗ a1 ⊗ … ⊗ an` stands
//! for `δ_t ⊗ a0 da1 … dan`.

use crate::homalg::{collect_sparse, Matrix, SparseVec};
use crate::scalar::Scalar;

use super::algebra::GAlgebra;
use super::CyclicError;

pub const DEFAULT_FORM_BUDGET: usize = 20_000;

/// The forms of degree at most `top`, with `b`, `B`, `T` and the group action.
#[derive(Clone, Debug)]
pub struct OmegaForms<S> {
    algebra: GAlgebra<S>,
    top: usize,
    dims: Vec<usize>,
    // b[n]: Ω^n → Ω^{n-1}; b[0] has no rows
    b: Vec<Matrix<S>>,
    // big_b[n]: Ω^n → Ω^{n+1} for n < top
    big_b: Vec<Matrix<S>>,
    t: Vec<Matrix<S>>,
}

fn shift<S: Clone>(v: &[(usize, S)]) -> SparseVec<S> {
    v.iter().map(|(i, x)| (i + 1, x.clone())).collect()
}

impl<S: Scalar> OmegaForms<S> {
    pub fn new(algebra: &GAlgebra<S>, top: usize, budget: usize) -> Result<Self, CyclicError> {
        let m = algebra.group().order();
        let d = algebra.dim();
        let mut dims = Vec::with_capacity(top + 1);
        let mut total = 0usize;
        for n in 0..=top {
            let a0 = if n == 0 { d } else { d + 1 };
            let dim = d.checked_pow(n as u32).and_then(|p| p.checked_mul(a0 * m)).unwrap_or(usize::MAX);
            total = total.saturating_add(dim);
            dims.push(dim);
        }
        if total > budget {
            return Err(CyclicError::Budget { needed: total, budget });
        }
        let mut forms = OmegaForms {
            algebra: algebra.clone(),
            top,
            dims,
            b: Vec::new(),
            big_b: Vec::new(),
            t: Vec::new(),
        };
        forms.b = (0..=top).map(|n| forms.build_b(n)).collect();
        forms.big_b = (0..top).map(|n| forms.build_big_b(n)).collect();
        forms.t = (0..=top).map(|n| forms.build_action(n, None)).collect();
        Ok(forms)
    }

    pub fn algebra(&self) -> &GAlgebra<S> {
        &self.algebra
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn b(&self, n: usize) -> &Matrix<S> {
        &self.b[n]
    }

    pub fn big_b(&self, n: usize) -> &Matrix<S> {
        &self.big_b[n]
    }

    pub fn t_operator(&self, n: usize) -> &Matrix<S> {
        &self.t[n]
    }

    /// `s·(δ_t ⊗ ω) = δ_{sts⁻¹} ⊗ s·ω` in degree `n`.
    pub fn action(&self, s: usize, n: usize) -> Matrix<S> {
        self.build_action(n, Some(s))
    }

    fn a0_dim(&self, n: usize) -> usize {
        if n == 0 {
            self.algebra.dim()
        } else {
            self.algebra.dim() + 1
        }
    }

    /// Group element `t` of a basis vector.
    pub fn t_of(&self, n: usize, idx: usize) -> usize {
        idx / (self.dims[n] / self.algebra.group().order())
    }

    pub fn index(&self, n: usize, t: usize, a0: usize, rest: &[usize]) -> usize {
        let d = self.algebra.dim();
        rest.iter().fold(t * self.a0_dim(n) + a0, |acc, &a| acc * d + a)
    }

    /// `(t, a0, [a1, …, an])`, with `a0` in `A⁺` coordinates when `n ≥ 1`.
    pub fn decode(&self, n: usize, mut idx: usize) -> (usize, usize, Vec<usize>) {
        let d = self.algebra.dim();
        let mut rest = vec![0; n];
        for k in (0..n).rev() {
            rest[k] = idx % d;
            idx /= d;
        }
        let a0d = self.a0_dim(n);
        (idx / a0d, idx % a0d, rest)
    }

    // x0 is in A⁺ coordinates; a target of degree 0 must not see the unit
    fn emit(&self, t: usize, x0: &[(usize, S)], xs: &[SparseVec<S>], c: S, out: &mut Vec<(usize, S)>) {
        let n = xs.len();
        if xs.iter().any(Vec::is_empty) {
            return;
        }
        let d = self.algebra.dim();
        let mut partial: Vec<(usize, S)> = Vec::with_capacity(x0.len());
        for (a0, v) in x0 {
            let a0 = if n == 0 {
                debug_assert!(*a0 > 0, "unit in degree 0");
                a0 - 1
            } else {
                *a0
            };
            partial.push((t * self.a0_dim(n) + a0, v.clone() * c.clone()));
        }
        for x in xs {
            let mut next = Vec::with_capacity(partial.len() * x.len());
            for (p, u) in &partial {
                for (a, v) in x {
                    next.push((p * d + a, u.clone() * v.clone()));
                }
            }
            partial = next;
        }
        out.extend(partial);
    }

    fn plus_mul(&self, x0: &[(usize, S)], y: &[(usize, S)]) -> SparseVec<S> {
        let mut out: Vec<(usize, S)> = Vec::new();
        for (i, c) in x0 {
            if *i == 0 {
                out.extend(y.iter().map(|(k, v)| (k + 1, v.clone() * c.clone())));
            } else {
                let prod = self.algebra.mul(&[(i - 1, c.clone())], y);
                out.extend(shift(&prod));
            }
        }
        collect_sparse(out)
    }

    fn mul_plus(&self, y: &[(usize, S)], x0: &[(usize, S)]) -> SparseVec<S> {
        let mut out: Vec<(usize, S)> = Vec::new();
        for (i, c) in x0 {
            if *i == 0 {
                out.extend(y.iter().map(|(k, v)| (k + 1, v.clone() * c.clone())));
            } else {
                let prod = self.algebra.mul(y, &[(i - 1, c.clone())]);
                out.extend(shift(&prod));
            }
        }
        collect_sparse(out)
    }

    fn act_plus(&self, g: usize, x0: &[(usize, S)]) -> SparseVec<S> {
        let mut out: Vec<(usize, S)> = Vec::new();
        for (i, c) in x0 {
            if *i == 0 {
                out.push((0, c.clone()));
            } else {
                out.extend(shift(&self.algebra.act(g, &[(i - 1, c.clone())])));
            }
        }
        collect_sparse(out)
    }

    fn basis_parts(&self, n: usize, idx: usize) -> (usize, SparseVec<S>, Vec<SparseVec<S>>) {
        let (t, a0, rest) = self.decode(n, idx);
        let x0 = vec![(if n == 0 { a0 + 1 } else { a0 }, S::one())];
        (t, x0, rest.into_iter().map(|a| vec![(a, S::one())]).collect())
    }

    fn sign(k: usize) -> S {
        if k.is_multiple_of(2) {
            S::one()
        } else {
            -S::one()
        }
    }

    fn build_b(&self, n: usize) -> Matrix<S> {
        if n == 0 {
            return Matrix::zeros(0, self.dims[0]);
        }
        let group = self.algebra.group();
        let cols: Vec<SparseVec<S>> = (0..self.dims[n])
            .map(|idx| {
                let (t, x0, xs) = self.basis_parts(n, idx);
                let tinv = group.inv(t);
                let mut out = Vec::new();
                self.emit(t, &self.plus_mul(&x0, &xs[0]), &xs[1..], S::one(), &mut out);
                for j in 1..n {
                    let mut ys: Vec<SparseVec<S>> = xs[..j - 1].to_vec();
                    ys.push(self.algebra.mul(&xs[j - 1], &xs[j]));
                    ys.extend_from_slice(&xs[j + 1..]);
                    self.emit(t, &x0, &ys, Self::sign(j), &mut out);
                }
                let last = self.algebra.act(tinv, &xs[n - 1]);
                self.emit(t, &self.mul_plus(&last, &x0), &xs[..n - 1], Self::sign(n), &mut out);
                collect_sparse(out)
            })
            .collect();
        Matrix::from_columns(self.dims[n - 1], &cols)
    }

    fn build_big_b(&self, n: usize) -> Matrix<S> {
        let group = self.algebra.group();
        let unit = vec![(0usize, S::one())];
        let cols: Vec<SparseVec<S>> = (0..self.dims[n])
            .map(|idx| {
                let (t, x0, xs) = self.basis_parts(n, idx);
                if x0[0].0 == 0 {
                    return Vec::new();
                }
                let tinv = group.inv(t);
                let a0 = vec![(x0[0].0 - 1, S::one())];
                let mut out = Vec::new();
                for i in 0..=n {
                    let mut ys: Vec<SparseVec<S>> = xs[n - i..].iter().map(|x| self.algebra.act(tinv, x)).collect();
                    ys.push(a0.clone());
                    ys.extend_from_slice(&xs[..n - i]);
                    self.emit(t, &unit, &ys, Self::sign(n * i), &mut out);
                }
                collect_sparse(out)
            })
            .collect();
        Matrix::from_columns(self.dims[n + 1], &cols)
    }

    // s = None builds T, which acts by t⁻¹ and keeps δ_t
    fn build_action(&self, n: usize, s: Option<usize>) -> Matrix<S> {
        let group = self.algebra.group();
        let cols: Vec<SparseVec<S>> = (0..self.dims[n])
            .map(|idx| {
                let (t, x0, xs) = self.basis_parts(n, idx);
                let (g, t2) = match s {
                    Some(s) => (s, group.conj(s, t)),
                    None => (group.inv(t), t),
                };
                let ys: Vec<SparseVec<S>> = xs.iter().map(|x| self.algebra.act(g, x)).collect();
                let mut out = Vec::new();
                self.emit(t2, &self.act_plus(g, &x0), &ys, S::one(), &mut out);
                collect_sparse(out)
            })
            .collect();
        Matrix::from_columns(self.dims[n], &cols)
    }

    /// Checks of the paramixed identities on the full basis.
    pub fn check_paramixed(&self) -> ParamixedReport {
        let top = self.top;
        let group = self.algebra.group();
        let b_squared = (2..=top).all(|n| self.b[n - 1].mul(&self.b[n]).is_zero());
        let big_b_squared = (1..top).all(|n| self.big_b[n].mul(&self.big_b[n - 1]).is_zero());
        let defect_identity = (0..top).all(|n| {
            let mut lhs = self.b[n + 1].mul(&self.big_b[n]);
            if n > 0 {
                lhs = lhs.add(&self.big_b[n - 1].mul(&self.b[n]));
            }
            lhs == Matrix::identity(self.dims[n]).sub(&self.t[n])
        });
        let t_commutes = (1..=top).all(|n| self.t[n - 1].mul(&self.b[n]) == self.b[n].mul(&self.t[n]))
            && (0..top).all(|n| self.t[n + 1].mul(&self.big_b[n]) == self.big_b[n].mul(&self.t[n]));
        let mut equivariant = true;
        for &s in group.generators() {
            let acts: Vec<Matrix<S>> = (0..=top).map(|n| self.action(s, n)).collect();
            equivariant &= (1..=top).all(|n| acts[n - 1].mul(&self.b[n]) == self.b[n].mul(&acts[n]));
            equivariant &= (0..top).all(|n| acts[n + 1].mul(&self.big_b[n]) == self.big_b[n].mul(&acts[n]));
        }
        ParamixedReport {
            top,
            b_squared,
            big_b_squared,
            defect_identity,
            t_commutes,
            equivariant,
        }
    }

    /// `E = (1/e) Σ_{j<e} T^j` in degree `n`, `e` the exponent of the group.
    pub fn projector_e(&self, n: usize) -> Matrix<S> {
        averaged_powers(&self.t[n], self.algebra.group().exponent())
    }

    pub fn check_projector(&self) -> ProjectorReport {
        let top = self.top;
        let es: Vec<Matrix<S>> = (0..=top).map(|n| self.projector_e(n)).collect();
        let mut r = ProjectorReport {
            idempotent: true,
            absorbs_t: true,
            commutes_with_b: true,
            commutes_with_big_b: true,
            complement_invertible: true,
        };
        for n in 0..=top {
            let (e, t) = (&es[n], &self.t[n]);
            r.idempotent &= e.mul(e) == *e;
            r.absorbs_t &= e.mul(t) == *e && t.mul(e) == *e;
            let id = Matrix::identity(self.dims[n]);
            let ce = id.sub(e);
            r.complement_invertible &= id.sub(t).mul(&ce).rank() == ce.rank();
            if n >= 1 {
                r.commutes_with_b &= es[n - 1].mul(&self.b[n]) == self.b[n].mul(e);
            }
            if n < top {
                r.commutes_with_big_b &= es[n + 1].mul(&self.big_b[n]) == self.big_b[n].mul(e);
            }
        }
        r
    }

    /// Hochschild homology `ker b_n / im b_{n+1}` for `n < top`.
    pub fn hochschild(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.b.iter().map(Matrix::rank).collect();
        (0..self.top).map(|n| self.dims[n] - ranks[n] - ranks[n + 1]).collect()
    }
}

pub(crate) fn averaged_powers<S: Scalar>(t: &Matrix<S>, e: usize) -> Matrix<S> {
    let n = t.nrows();
    let mut acc = Matrix::zeros(n, n);
    let mut p = Matrix::identity(n);
    for _ in 0..e {
        acc = acc.add(&p);
        p = t.mul(&p);
    }
    acc.scale(&S::from_ratio(1, e as i64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamixedReport {
    pub top: usize,
    pub b_squared: bool,
    pub big_b_squared: bool,
    pub defect_identity: bool,
    pub t_commutes: bool,
    pub equivariant: bool,
}

impl ParamixedReport {
    pub fn holds(&self) -> bool {
        self.b_squared && self.big_b_squared && self.defect_identity && self.t_commutes && self.equivariant
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorReport {
    pub idempotent: bool,
    pub absorbs_t: bool,
    pub commutes_with_b: bool,
    pub commutes_with_big_b: bool,
    /// `id − T` is invertible on the image of `id − E`
    pub complement_invertible: bool,
}

impl ProjectorReport {
    pub fn holds(&self) -> bool {
        self.idempotent && self.absorbs_t && self.commutes_with_b && self.commutes_with_big_b && self.complement_invertible
    }
}
