use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<S> = Vec<(usize, S)>;

/// Computes `a + c * b` on sparse vectors.
pub fn axpy<S: Scalar>(a: &[(usize, S)], c: &S, b: &[(usize, S)]) -> SparseVec<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = c.clone() * b[j].1.clone();
            if !v.is_negligible() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.clone() + c.clone() * b[j].1.clone();
            if !v.is_negligible() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale_vec<S: Scalar>(v: &[(usize, S)], c: &S) -> SparseVec<S> {
    if c.is_negligible() {
        return Vec::new();
    }
    v.iter()
        .map(|(i, x)| (*i, x.clone() * c.clone()))
        .filter(|(_, x)| !x.is_negligible())
        .collect()
}

/// Collects `(index, value)` pairs into a canonical sparse vector, summing duplicates.
pub fn collect_sparse<S: Scalar>(entries: impl IntoIterator<Item = (usize, S)>) -> SparseVec<S> {
    let mut acc: BTreeMap<usize, S> = BTreeMap::new();
    for (i, v) in entries {
        let slot = acc.entry(i).or_insert_with(S::zero);
        *slot = slot.clone() + v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_negligible()).collect()
}

pub fn dense_to_sparse<S: Scalar>(v: &[S]) -> SparseVec<S> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_negligible())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense<S: Scalar>(v: &[(usize, S)], len: usize) -> Vec<S> {
    let mut out = vec![S::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Sparse matrix over a [`Scalar`], stored row by row.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<S>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, S::one())]).collect(),
        }
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut buckets: Vec<Vec<(usize, S)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of range for {rows}x{cols}");
            buckets[r].push((c, v));
        }
        Matrix {
            rows,
            cols,
            data: buckets.into_iter().map(collect_sparse).collect(),
        }
    }

    pub fn from_dense(rows: usize, cols: usize, entries: &[Vec<S>]) -> Self {
        assert_eq!(entries.len(), rows);
        Matrix {
            rows,
            cols,
            data: entries
                .iter()
                .map(|r| {
                    assert_eq!(r.len(), cols);
                    dense_to_sparse(r)
                })
                .collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec<S>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.iter().all(|(c, _)| *c < cols)));
        Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec<S>]) -> Self {
        debug_assert!(columns.iter().all(|c| c.iter().all(|(r, _)| *r < rows)));
        Matrix {
            rows: columns.len(),
            cols: rows,
            data: columns.to_vec(),
        }
        .transpose_with_rows(rows)
    }

    fn transpose_with_rows(&self, new_cols: usize) -> Self {
        let mut out: Vec<SparseVec<S>> = vec![Vec::new(); new_cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out[*c].push((r, v.clone()));
            }
        }
        Matrix {
            rows: new_cols,
            cols: self.rows,
            data: out,
        }
    }

    /// A matrix assembled from blocks placed at `(block_row, block_col)`.
    pub fn from_blocks(row_dims: &[usize], col_dims: &[usize], blocks: Vec<(usize, usize, Matrix<S>)>) -> Self {
        let row_off = offsets(row_dims);
        let col_off = offsets(col_dims);
        let rows = row_dims.iter().sum();
        let cols = col_dims.iter().sum();
        let mut entries = Vec::new();
        for (bi, bj, m) in blocks {
            assert_eq!(m.rows, row_dims[bi], "block row dimension mismatch");
            assert_eq!(m.cols, col_dims[bj], "block column dimension mismatch");
            for (r, row) in m.data.into_iter().enumerate() {
                for (c, v) in row {
                    entries.push((row_off[bi] + r, col_off[bj] + c, v));
                }
            }
        }
        Matrix::from_triplets(rows, cols, entries)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, S)] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[SparseVec<S>] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        match self.data[r].binary_search_by_key(&c, |(i, _)| *i) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        self.transpose_with_rows(self.cols)
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec<S>> {
        self.transpose().data
    }

    pub fn column(&self, c: usize) -> SparseVec<S> {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| row.binary_search_by_key(&c, |(i, _)| *i).ok().map(|k| (r, row[k].1.clone())))
            .collect()
    }

    /// `self * v`.
    pub fn apply(&self, v: &[(usize, S)]) -> SparseVec<S> {
        if v.is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = S::zero();
            let (mut i, mut j) = (0, 0);
            while i < row.len() && j < v.len() {
                match row[i].0.cmp(&v[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        acc = acc + row[i].1.clone() * v[j].1.clone();
                        i += 1;
                        j += 1;
                    }
                }
            }
            if !acc.is_negligible() {
                out.push((r, acc));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: Vec<(usize, S)> = Vec::new();
                for (k, a) in row {
                    acc = axpy(&acc, a, &other.data[*k]);
                }
                acc
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn add(&self, other: &Matrix<S>) -> Matrix<S> {
        self.lin_comb(&S::one(), other)
    }

    pub fn sub(&self, other: &Matrix<S>) -> Matrix<S> {
        self.lin_comb(&-S::one(), other)
    }

    /// `self + c * other`.
    pub fn lin_comb(&self, c: &S, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| axpy(a, c, b)).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| scale_vec(r, c)).collect(),
        }
    }

    /// Kronecker product; row index `i * other.rows + k`, column index `j * other.cols + l`.
    pub fn kron(&self, other: &Matrix<S>) -> Matrix<S> {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for arow in &self.data {
            for brow in &other.data {
                let mut row = Vec::with_capacity(arow.len() * brow.len());
                for (j, a) in arow {
                    for (l, b) in brow {
                        let v = a.clone() * b.clone();
                        if !v.is_negligible() {
                            row.push((j * other.cols + l, v));
                        }
                    }
                }
                data.push(row);
            }
        }
        Matrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<S> {
        Matrix {
            rows: idx.len(),
            cols: self.cols,
            data: idx.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix<S> {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in idx.iter().enumerate() {
            pos[c] = k;
        }
        Matrix {
            rows: self.rows,
            cols: idx.len(),
            data: self
                .data
                .iter()
                .map(|row| {
                    let mut r: Vec<(usize, S)> = row
                        .iter()
                        .filter(|(c, _)| pos[*c] != usize::MAX)
                        .map(|(c, v)| (pos[*c], v.clone()))
                        .collect();
                    r.sort_by_key(|(c, _)| *c);
                    r
                })
                .collect(),
        }
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        self.data.iter().map(|r| sparse_to_dense(r, self.cols)).collect()
    }

    pub fn rank(&self) -> usize {
        super::echelon::rank(self)
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        let nnz: usize = self.data.iter().map(Vec::len).sum();
        if nnz <= 200 {
            for (i, row) in self.data.iter().enumerate().filter(|(_, r)| !r.is_empty()) {
                writeln!(f, "  {i}: {row:?}")?;
            }
        } else {
            writeln!(f, "  ({nnz} nonzeros)")?;
        }
        Ok(())
    }
}

pub(crate) fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    for d in dims {
        out.push(acc);
        acc += d;
    }
    out.push(acc);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn product_and_kron_shapes() {
        let a = Matrix::from_dense(2, 2, &[vec![q(1), q(2)], vec![q(0), q(1)]]);
        let b = Matrix::from_dense(2, 2, &[vec![q(1), q(-2)], vec![q(0), q(1)]]);
        assert!(a.mul(&b).is_identity());
        let k = a.kron(&Matrix::identity(3));
        assert_eq!((k.nrows(), k.ncols()), (6, 6));
        assert_eq!(k.get(1, 4), q(2));
        assert_eq!(k.get(1, 3), q(0));
    }

    #[test]
    fn from_triplets_sums_and_drops_zeros() {
        let m = Matrix::from_triplets(2, 2, vec![(0, 0, q(1)), (0, 0, q(-1)), (1, 1, q(3)), (1, 1, q(1))]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), q(4));
    }

    #[test]
    fn blocks_and_selection() {
        let m = Matrix::from_blocks(
            &[1, 2],
            &[2, 1],
            vec![
                (0, 0, Matrix::identity(1).kron(&Matrix::from_dense(1, 2, &[vec![q(1), q(2)]]))),
                (1, 1, Matrix::from_dense(2, 1, &[vec![q(5)], vec![q(6)]])),
            ],
        );
        assert_eq!(m.get(0, 1), q(2));
        assert_eq!(m.get(2, 2), q(6));
        let s = m.select_cols(&[2, 0]);
        assert_eq!(s.get(1, 0), q(5));
        assert_eq!(s.get(0, 1), q(1));
        assert_eq!(m.transpose().transpose(), m);
    }
}
