use crate::fingroup::FiniteGroup;
use crate::gcomplex::GComplex;
use crate::homalg::{collect_sparse, Matrix, SparseVec};
use crate::scalar::Scalar;

use super::CyclicError;

/// A finite-dimensional algebra with an action of a finite group by automorphisms.
#[derive(Clone, Debug)]
pub struct GAlgebra<S> {
    name: String,
    group: FiniteGroup,
    dim: usize,
    // mult[i][j] = e_i e_j
    mult: Vec<Vec<SparseVec<S>>>,
    unit: Option<SparseVec<S>>,
    action: Vec<Matrix<S>>,
}

impl<S: Scalar> GAlgebra<S> {
    /// Builds and validates an algebra from structure constants.
    pub fn new(
        name: impl Into<String>,
        group: FiniteGroup,
        mult: Vec<Vec<SparseVec<S>>>,
        unit: Option<SparseVec<S>>,
        action: Vec<Matrix<S>>,
    ) -> Result<Self, CyclicError> {
        let a = GAlgebra {
            name: name.into(),
            dim: mult.len(),
            group,
            mult,
            unit,
            action,
        };
        a.validate()?;
        Ok(a)
    }

    /// The ground field with the trivial action.
    pub fn base_field(group: &FiniteGroup) -> Self {
        GAlgebra {
            name: "base field".into(),
            group: group.clone(),
            dim: 1,
            mult: vec![vec![vec![(0, S::one())]]],
            unit: Some(vec![(0, S::one())]),
            action: vec![Matrix::identity(1); group.order()],
        }
    }

    /// Functions on a finite set with a permutation action, in the basis of point indicators.
    pub fn functions(group: &FiniteGroup, perms: &[Vec<usize>]) -> Result<Self, CyclicError> {
        let n = perms.first().map(Vec::len).unwrap_or(0);
        let mult = (0..n)
            .map(|i| (0..n).map(|j| if i == j { vec![(i, S::one())] } else { vec![] }).collect())
            .collect();
        let unit = Some((0..n).map(|i| (i, S::one())).collect());
        let action = perms
            .iter()
            .map(|p| Matrix::from_triplets(n, n, p.iter().enumerate().map(|(i, &j)| (j, i, S::one()))))
            .collect();
        GAlgebra::new(format!("C({n} points)"), group.clone(), mult, unit, action)
    }

    /// Functions on the vertices of a 0-dimensional G-complex.
    pub fn functions_on(x: &GComplex) -> Result<Self, CyclicError> {
        if x.complex().dim() > 0 {
            return Err(CyclicError::NotZeroDimensional(x.complex().dim()));
        }
        let verts = x.complex().vertices();
        let pos = |v: usize| verts.binary_search(&v).expect("vertex");
        let perms: Vec<Vec<usize>> = x
            .group()
            .elements()
            .map(|g| verts.iter().map(|&v| pos(x.act_vertex(g, v))).collect())
            .collect();
        GAlgebra::functions(x.group(), &perms)
    }

    /// `|G| × |G|` matrix units `e_{ab}` (index `a·|G| + b`) with `r·e_{ab} = e_{ra, rb}`.
    pub fn compact_operators(group: &FiniteGroup) -> Self {
        let m = group.order();
        let idx = |a: usize, b: usize| a * m + b;
        let mult = (0..m * m)
            .map(|i| {
                (0..m * m)
                    .map(|j| {
                        let (a, b) = (i / m, i % m);
                        let (c, d) = (j / m, j % m);
                        if b == c {
                            vec![(idx(a, d), S::one())]
                        } else {
                            vec![]
                        }
                    })
                    .collect()
            })
            .collect();
        let unit = Some((0..m).map(|a| (idx(a, a), S::one())).collect());
        let action = group
            .elements()
            .map(|r| {
                Matrix::from_triplets(
                    m * m,
                    m * m,
                    (0..m * m).map(|i| (idx(group.mul(r, i / m), group.mul(r, i % m)), i, S::one())),
                )
            })
            .collect();
        GAlgebra {
            name: "K_G".into(),
            group: group.clone(),
            dim: m * m,
            mult,
            unit,
            action,
        }
    }

    /// `A ⊗ B` with basis `e_i ⊗ f_j` at index `i·dim B + j` and the diagonal action.
    pub fn tensor(a: &GAlgebra<S>, b: &GAlgebra<S>) -> Result<Self, CyclicError> {
        if a.group != b.group {
            return Err(CyclicError::InvalidAlgebra("tensor factors over different groups".into()));
        }
        let (da, db) = (a.dim, b.dim);
        let mult = (0..da * db)
            .map(|i| {
                (0..da * db)
                    .map(|j| {
                        let x = &a.mult[i / db][j / db];
                        let y = &b.mult[i % db][j % db];
                        collect_sparse(
                            x.iter()
                                .flat_map(|(k, u)| y.iter().map(move |(l, v)| (k * db + l, u.clone() * v.clone()))),
                        )
                    })
                    .collect()
            })
            .collect();
        let unit = match (&a.unit, &b.unit) {
            (Some(u), Some(v)) => Some(collect_sparse(
                u.iter()
                    .flat_map(|(k, x)| v.iter().map(move |(l, y)| (k * db + l, x.clone() * y.clone()))),
            )),
            _ => None,
        };
        let action = a.action.iter().zip(&b.action).map(|(x, y)| x.kron(y)).collect();
        Ok(GAlgebra {
            name: format!("{} ⊗ {}", a.name, b.name),
            group: a.group.clone(),
            dim: da * db,
            mult,
            unit,
            action,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&SparseVec<S>> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec<S> {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &[(usize, S)], y: &[(usize, S)]) -> SparseVec<S> {
        let mut out = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let c = a.clone() * b.clone();
                out.extend(self.mult[*i][*j].iter().map(|(k, v)| (*k, v.clone() * c.clone())));
            }
        }
        collect_sparse(out)
    }

    pub fn action(&self, g: usize) -> &Matrix<S> {
        &self.action[g]
    }

    pub fn act(&self, g: usize, x: &[(usize, S)]) -> SparseVec<S> {
        self.action[g].apply(x)
    }

    /// Associativity, automorphism and homomorphism properties of the action, unit laws.
    pub fn validate(&self) -> Result<(), CyclicError> {
        let n = self.dim;
        if self.mult.iter().any(|row| row.len() != n) {
            return Err(CyclicError::InvalidAlgebra("structure constants are not square".into()));
        }
        if self.action.len() != self.group.order() || self.action.iter().any(|m| m.nrows() != n || m.ncols() != n) {
            return Err(CyclicError::InvalidAlgebra(
                "one n×n action matrix per group element expected".into(),
            ));
        }
        let e = |i: usize| vec![(i, S::one())];
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    if self.mul(ij, &e(k)) != self.mul(&e(i), &self.mult[j][k]) {
                        return Err(CyclicError::InvalidAlgebra(format!("not associative on ({i}, {j}, {k})")));
                    }
                }
            }
        }
        if !self.action[self.group.identity()].is_identity() {
            return Err(CyclicError::InvalidAlgebra("identity does not act trivially".into()));
        }
        for &g in self.group.generators() {
            for h in self.group.elements() {
                if self.action[g].mul(&self.action[h]) != self.action[self.group.mul(g, h)] {
                    return Err(CyclicError::InvalidAlgebra(format!("action not multiplicative at ({g}, {h})")));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.act(g, &self.mult[i][j]);
                    let rhs = self.mul(&self.act(g, &e(i)), &self.act(g, &e(j)));
                    if lhs != rhs {
                        return Err(CyclicError::InvalidAlgebra(format!("element {g} is not an automorphism")));
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..n {
                if self.mul(u, &e(i)) != e(i) || self.mul(&e(i), u) != e(i) {
                    return Err(CyclicError::InvalidAlgebra("unit laws fail".into()));
                }
            }
            for g in self.group.elements() {
                if self.act(g, u) != *u {
                    return Err(CyclicError::InvalidAlgebra("unit is not invariant".into()));
                }
            }
        }
        Ok(())
    }

    /// Dimension of the center.
    pub fn center_dim(&self) -> usize {
        // x central iff [x, e_j] = 0 for all j; stack the commutator maps
        let n = self.dim;
        let mut rows = Vec::new();
        for j in 0..n {
            for i in 0..n {
                let c = collect_sparse(
                    self.mult[i][j]
                        .iter()
                        .cloned()
                        .chain(self.mult[j][i].iter().map(|(k, v)| (*k, -v.clone()))),
                );
                rows.push((j, i, c));
            }
        }
        let mut trip = Vec::new();
        for (j, i, c) in rows {
            for (k, v) in c {
                trip.push((j * n + k, i, v));
            }
        }
        n - Matrix::from_triplets(n * n, n, trip).rank()
    }

    /// Whether the trace form `tr(L_x L_y)` is nondegenerate, i.e. the algebra is semisimple.
    pub fn is_semisimple(&self) -> bool {
        let n = self.dim;
        let left = |i: usize| Matrix::from_columns(n, &(0..n).map(|j| self.mult[i][j].clone()).collect::<Vec<_>>());
        let ls: Vec<Matrix<S>> = (0..n).map(left).collect();
        let form: Vec<Vec<S>> = (0..n).map(|i| (0..n).map(|j| ls[i].mul(&ls[j]).trace()).collect()).collect();
        Matrix::from_dense(n, n, &form).rank() == n
    }
}
