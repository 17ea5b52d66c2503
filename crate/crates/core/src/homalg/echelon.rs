//! Incremental row echelon forms, subspaces in reduced form, and the
//! rank / kernel / image primitives built on them.

use std::collections::HashMap;

use super::matrix::{axpy, scale_vec, Matrix, SparseVec};
use crate::scalar::Scalar;

/// Below this many entries `rank` switches to dense elimination.
pub const DENSE_THRESHOLD: usize = 64 * 64;

/// A growing set of linearly independent vectors kept in echelon form:
/// every stored row has a distinct leading index and a leading coefficient of one.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    width: usize,
    rows: Vec<SparseVec<S>>,
    pivot_row: HashMap<usize, usize>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces the leading term of `v` until it is zero or sits on a free column.
    fn reduce_lead(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        while let Some((lead, c)) = v.first().cloned() {
            match self.pivot_row.get(&lead) {
                Some(&r) => v = axpy(&v, &-c, &self.rows[r]),
                None => break,
            }
        }
        v
    }

    /// Eliminates every entry of `v` sitting on a pivot column.
    pub fn reduce(&self, v: &[(usize, S)]) -> SparseVec<S> {
        let mut v = v.to_vec();
        let mut pos = 0;
        while pos < v.len() {
            let (col, c) = v[pos].clone();
            match self.pivot_row.get(&col) {
                Some(&r) => {
                    v = axpy(&v, &-c, &self.rows[r]);
                    pos = v.partition_point(|(i, _)| *i <= col);
                }
                None => pos += 1,
            }
        }
        v
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: SparseVec<S>) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.width));
        let v = self.reduce_lead(v);
        match v.first() {
            None => false,
            Some((lead, c)) => {
                let lead = *lead;
                let inv = S::one() / c.clone();
                let v = scale_vec(&v, &inv);
                self.pivot_row.insert(lead, self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }

    pub fn contains(&self, v: &[(usize, S)]) -> bool {
        self.reduce_lead(v.to_vec()).is_empty()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Reduced row echelon form of the span.
    pub fn into_subspace(self) -> Subspace<S> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        let mut rows: Vec<SparseVec<S>> = order.iter().map(|&r| self.rows[r].clone()).collect();
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let index: HashMap<usize, usize> = pivots.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        // back substitution, bottom row first
        for k in (0..rows.len()).rev() {
            let mut v = rows[k].clone();
            let mut pos = 1;
            while pos < v.len() {
                let (col, c) = v[pos].clone();
                match index.get(&col) {
                    Some(&j) if j > k => {
                        v = axpy(&v, &-c, &rows[j]);
                        pos = v.partition_point(|(i, _)| *i <= col);
                    }
                    _ => pos += 1,
                }
            }
            rows[k] = v;
        }
        Subspace {
            ambient: self.width,
            rows,
            pivots,
        }
    }
}

/// A subspace of `S^ambient` held in reduced row echelon form.
///
/// Coordinates of a member vector with respect to the stored basis are
/// its entries at the pivot columns.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    ambient: usize,
    rows: Vec<SparseVec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = SparseVec<S>>) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| vec![(i, S::one())]).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns not used as pivots; their unit vectors span a complement.
    pub fn complement_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Normal form of `v` modulo the subspace, supported on complement columns.
    pub fn reduce(&self, v: &[(usize, S)]) -> SparseVec<S> {
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if let Ok(pos) = out.binary_search_by_key(&p, |(i, _)| *i) {
                let c = out[pos].1.clone();
                out = axpy(&out, &-c, &self.rows[k]);
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, S)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of a member vector. Does not check membership.
    pub fn coords(&self, v: &[(usize, S)]) -> SparseVec<S> {
        let mut out = Vec::new();
        let (mut i, mut k) = (0, 0);
        while i < v.len() && k < self.pivots.len() {
            match v[i].0.cmp(&self.pivots[k]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => k += 1,
                std::cmp::Ordering::Equal => {
                    out.push((k, v[i].1.clone()));
                    i += 1;
                    k += 1;
                }
            }
        }
        out
    }

    /// Matrix whose columns are the basis vectors (ambient x dim).
    pub fn basis_matrix(&self) -> Matrix<S> {
        Matrix::from_columns(self.ambient, &self.rows)
    }

    /// Trace of a linear map that preserves this subspace, restricted to it.
    pub fn restricted_trace(&self, map: &Matrix<S>) -> S {
        let mut acc = S::zero();
        for (k, r) in self.rows.iter().enumerate() {
            let image = map.apply(r);
            if let Ok(pos) = image.binary_search_by_key(&self.pivots[k], |(i, _)| *i) {
                acc = acc + image[pos].1.clone();
            }
        }
        acc
    }
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    if m.nrows() * m.ncols() <= DENSE_THRESHOLD {
        return dense_rank(m.to_dense());
    }
    // eliminate along the shorter side
    let rows = if m.nrows() <= m.ncols() { m.rows().to_vec() } else { m.columns() };
    let width = if m.nrows() <= m.ncols() { m.ncols() } else { m.nrows() };
    let mut sorted = rows;
    sorted.sort_by_key(Vec::len);
    let mut e = Echelon::new(width);
    for r in sorted {
        e.insert(r);
    }
    e.rank()
}

/// Gaussian elimination with largest-magnitude pivoting.
pub fn dense_rank<S: Scalar>(mut a: Vec<Vec<S>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&r| !a[r][c].is_negligible())
            .max_by(|&x, &y| a[x][c].magnitude().total_cmp(&a[y][c].magnitude()));
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let inv = S::one() / a[rank][c].clone();
        for r in (rank + 1)..rows {
            if a[r][c].is_negligible() {
                continue;
            }
            let f = a[r][c].clone() * inv.clone();
            let (top, rest) = a.split_at_mut(r);
            for (x, p) in rest[0][c..cols].iter_mut().zip(&top[rank][c..cols]) {
                let v = x.clone() - f.clone() * p.clone();
                *x = if v.is_negligible() { S::zero() } else { v };
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of the null space of `m`, as vectors of length `m.ncols()`.
pub fn kernel_basis<S: Scalar>(m: &Matrix<S>) -> Vec<SparseVec<S>> {
    let rref = Subspace::span(m.ncols(), m.rows().iter().cloned());
    let free = rref.complement_cols();
    // column f of the reduced rows gives the pivot coordinates of the kernel vector
    let mut by_free: HashMap<usize, Vec<(usize, S)>> = HashMap::new();
    for (k, row) in rref.basis().iter().enumerate() {
        let p = rref.pivots()[k];
        for (c, v) in row.iter().skip(1) {
            by_free.entry(*c).or_default().push((p, -v.clone()));
        }
    }
    free.into_iter()
        .map(|f| {
            let mut v = by_free.remove(&f).unwrap_or_default();
            v.push((f, S::one()));
            v.sort_by_key(|(i, _)| *i);
            v
        })
        .collect()
}

/// Subspace spanned by the columns of `m`.
pub fn image<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    let mut cols = m.columns();
    cols.sort_by_key(Vec::len);
    Subspace::span(m.nrows(), cols)
}

/// Basis of the column space of `m`.
pub fn image_basis<S: Scalar>(m: &Matrix<S>) -> Vec<SparseVec<S>> {
    image(m).basis().to_vec()
}

/// Null space of `m` as a subspace in reduced form.
pub fn kernel<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    Subspace::span(m.ncols(), kernel_basis(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn triangle_d1() -> Matrix<Q> {
        // edges 01, 02, 12 -> vertices 0, 1, 2
        Matrix::from_dense(3, 3, &[vec![q(-1), q(-1), q(0)], vec![q(1), q(0), q(-1)], vec![q(0), q(1), q(1)]])
    }

    #[test]
    fn zero_and_identity_ranks() {
        let z: Matrix<Q> = Matrix::zeros(3, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(kernel_basis(&z).len(), 4);
        assert_eq!(Matrix::<Q>::identity(5).rank(), 5);
        assert!(kernel_basis(&Matrix::<Q>::identity(5)).is_empty());
    }

    #[test]
    fn triangle_boundary_rank_two() {
        let d = triangle_d1();
        assert_eq!(d.rank(), 2);
        let k = kernel_basis(&d);
        assert_eq!(k.len(), 1);
        assert!(d.apply(&k[0]).is_empty());
        assert_eq!(image_basis(&d).len(), 2);
    }

    #[test]
    fn sparse_and_dense_ranks_agree() {
        // a 70x70 block-structured matrix forces the sparse path
        let n = 70;
        let m = Matrix::from_triplets(n, n, (0..n).flat_map(|i| vec![(i, i, q(1)), (i, (i + 1) % n, q(-1))]));
        assert_eq!(m.rank(), n - 1);
        assert_eq!(dense_rank(m.to_dense()), n - 1);
    }

    #[test]
    fn subspace_coordinates_and_reduction() {
        let s = Subspace::span(3, vec![vec![(0, q(1)), (1, q(1))], vec![(1, q(1)), (2, q(1))]]);
        assert_eq!(s.dim(), 2);
        let v = vec![(0, q(2)), (1, q(3)), (2, q(1))];
        assert!(s.contains(&v));
        let c = s.coords(&v);
        let rebuilt = c.iter().fold(Vec::new(), |acc, (k, x)| axpy(&acc, x, &s.basis()[*k]));
        assert_eq!(rebuilt, v);
        assert_eq!(s.complement_cols(), vec![2]);
        assert!(!s.contains(&[(2, q(1))]));
    }
}
