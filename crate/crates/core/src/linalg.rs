//! Sparse exact matrices.
//!
//! Matrices are stored column-major: each column is a [`SparseVec`] with
//! strictly increasing row indices and no stored zeros. Tensor products use
//! the lexicographic basis order everywhere: the pair `(i1, i2)` of a
//! `kron(a, b)` maps to the flat index `i1 * b.rows() + i2`.

use std::collections::BTreeMap;

use crate::error::LinalgError;
use crate::field::Field;

/// Sparse vector, entries sorted by index, zeros never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, F::one())],
        }
    }

    /// Collects `(index, value)` pairs, summing repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, F)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, v) in pairs {
            accumulate(&mut acc, i, v);
        }
        Self::from_map(acc)
    }

    pub(crate) fn from_map(acc: BTreeMap<usize, F>) -> Self {
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Builds from a dense slice.
    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> F {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, F)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, c.clone() * vb.clone()));
                        b.next();
                    } else {
                        let s = va.clone() + c.clone() * vb.clone();
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, c.clone() * vb.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&-F::one(), other)
    }

    /// Tensor product in the lexicographic basis; `other` has length `other_len`.
    pub fn kron(&self, other: &Self, other_len: usize) -> Self {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other_len + j, x.clone() * y.clone()));
            }
        }
        SparseVec { entries }
    }

    /// Returns the first coordinate (lowest index) in which `self` differs from zero.
    pub fn first_nonzero(&self) -> Option<(usize, F)> {
        self.entries.first().cloned()
    }

    /// Rescales so that the leading entry is one.
    pub fn normalized(&self) -> Self {
        match self.entries.first() {
            None => self.clone(),
            Some((_, lead)) => {
                let inv = lead.inv().expect("nonzero leading entry");
                self.scale(&inv)
            }
        }
    }
}

pub(crate) fn accumulate<F: Field>(acc: &mut BTreeMap<usize, F>, i: usize, v: F) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&i) {
        Some(slot) => {
            let s = slot.clone() + v;
            if s.is_zero() {
                acc.remove(&i);
            } else {
                *slot = s;
            }
        }
        None => {
            acc.insert(i, v);
        }
    }
}

/// Sparse column-major matrix over `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols: vec![SparseVec::zero(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    /// Builds from columns. Row indices must be below `rows`.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec<F>>) -> Result<Self, LinalgError> {
        for (c, col) in cols.iter().enumerate() {
            if let Some(r) = col.max_index() {
                if r >= rows {
                    return Err(LinalgError::OutOfRange {
                        row: r,
                        col: c,
                        rows,
                        cols: cols.len(),
                    });
                }
            }
        }
        Ok(Matrix { rows, cols })
    }

    /// Builds from `(row, col, value)` triples; repeats are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, F)>,
    {
        let mut per_col: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::OutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            accumulate(&mut per_col[c], r, v);
        }
        Ok(Matrix {
            rows,
            cols: per_col.into_iter().map(SparseVec::from_map).collect(),
        })
    }

    /// Builds from a dense row-major array.
    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets = rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, v)| (i, j, v.clone()))
        });
        Self::from_triplets(nrows, ncols, triplets).expect("dense input is in range")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols.len())
    }

    pub fn column(&self, j: usize) -> &SparseVec<F> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<F>] {
        &self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> F {
        self.cols[col].get(row)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`, sorted by `(row, col)`.
    /// `{rows, cols, entries}` with `entries` the sorted `[row, col, "v"]` triples.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .triplets()
            .into_iter()
            .map(|(r, c, v)| serde_json::json!([r, c, v.to_string()]))
            .collect();
        serde_json::json!({ "rows": self.rows(), "cols": self.cols(), "entries": entries })
    }

    pub fn triplets(&self) -> Vec<(usize, usize, F)> {
        let mut out: Vec<(usize, usize, F)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.entries().iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    /// Lowest `(col, row)` nonzero entry, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize, F)> {
        self.cols
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.first_nonzero().map(|(r, v)| (r, c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col.entries() {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = BTreeMap::new();
        for (k, x) in v.entries() {
            for (r, y) in self.cols[*k].entries() {
                accumulate(&mut acc, *r, y.clone() * x.clone());
            }
        }
        SparseVec::from_map(acc)
    }

    /// The composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        if self.cols() != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "compose",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols.iter().map(|col| self.apply(col)).collect(),
        })
    }

    fn check_same_shape(&self, other: &Matrix<F>, op: &'static str) -> Result<(), LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        self.check_same_shape(other, "axpy")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.axpy(c, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        self.axpy(&-F::one(), other)
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols.iter().map(|col| col.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut per_row: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col.entries() {
                per_row[*r].push((c, v.clone()));
            }
        }
        Matrix {
            rows: self.cols(),
            cols: per_row
                .into_iter()
                .map(|entries| SparseVec { entries })
                .collect(),
        }
    }

    /// Kronecker product, lexicographic index convention.
    pub fn kron(&self, other: &Matrix<F>) -> Matrix<F> {
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                cols.push(a.kron(b, other.rows));
            }
        }
        Matrix {
            rows: self.rows * other.rows,
            cols,
        }
    }

    /// `self^{⊗p}`; `p = 0` gives the 1x1 identity.
    pub fn kron_power(&self, p: usize) -> Matrix<F> {
        let mut acc = Matrix::identity(1);
        for _ in 0..p {
            acc = acc.kron(self);
        }
        acc
    }

    /// Column `index` of `self^{⊗p}` without materializing the power.
    /// `digits` is the column's lexicographic multi-index.
    pub fn kron_power_column(&self, digits: &[usize]) -> SparseVec<F> {
        let mut acc = SparseVec::unit(0);
        for &d in digits {
            acc = acc.kron(&self.cols[d], self.rows);
        }
        acc
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix<F>]) -> Result<Matrix<F>, LinalgError> {
        let Some(first) = blocks.first() else {
            return Ok(Matrix::zeros(0, 0));
        };
        let ncols = first.cols();
        let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); ncols];
        let mut offset = 0;
        for b in blocks {
            if b.cols() != ncols {
                return Err(LinalgError::DimensionMismatch {
                    op: "vstack",
                    left: first.shape(),
                    right: b.shape(),
                });
            }
            for (c, col) in b.cols.iter().enumerate() {
                cols[c].extend(col.entries().iter().map(|(r, v)| (r + offset, v.clone())));
            }
            offset += b.rows;
        }
        Ok(Matrix {
            rows: offset,
            cols: cols.into_iter().map(|entries| SparseVec { entries }).collect(),
        })
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[Matrix<F>]) -> Matrix<F> {
        let mut cols = Vec::new();
        let mut offset = 0;
        for b in blocks {
            for col in &b.cols {
                cols.push(SparseVec {
                    entries: col.entries().iter().map(|(r, v)| (r + offset, v.clone())).collect(),
                });
            }
            offset += b.rows;
        }
        Matrix { rows: offset, cols }
    }

    /// Exact rank by sparse elimination over the columns.
    ///
    /// Each column is reduced against the current pivots until its leading
    /// (lowest-row) entry has no pivot; it then becomes the pivot for that
    /// row. The pivot for a row is the first column that claims it.
    pub fn rank(&self) -> usize {
        let mut echelon = Echelon::new();
        for col in &self.cols {
            echelon.insert(col.clone());
        }
        echelon.len()
    }

    /// Basis of the kernel as `(free column, dense vector)` pairs. Each
    /// vector is one at its own free column and zero at every other free
    /// column.
    ///
    /// Dense Gauss-Jordan on the rows; intended for the small operators
    /// that arise from structure-constant tables.
    pub fn kernel_basis(&self) -> Vec<(usize, Vec<F>)> {
        let (rref, pivots) = rref(self.to_dense(), self.cols());
        let pivot_rows: Vec<(usize, usize)> = pivots.iter().copied().enumerate().collect();
        let mut is_pivot = vec![false; self.cols()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols())
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.cols()];
                v[free] = F::one();
                for &(row, pc) in &pivot_rows {
                    v[pc] = -rref[row][free].clone();
                }
                (free, v)
            })
            .collect()
    }
}

/// Incremental row-echelon basis of a growing set of sparse vectors.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    pivots: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Reduces `v` against the pivots; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        // Eliminate pivot positions in increasing order.
        let mut cursor = 0;
        loop {
            let next = v
                .entries()
                .iter()
                .find(|(i, _)| *i >= cursor && self.pivots.contains_key(i))
                .cloned();
            match next {
                None => return v,
                Some((i, c)) => {
                    let p = &self.pivots[&i];
                    v = v.axpy(&-c, p);
                    cursor = i + 1;
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let mut v = v;
        loop {
            let Some((lead, c)) = v.first_nonzero() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => v = v.axpy(&-c, p),
                None => {
                    self.pivots.insert(lead, v.normalized());
                    return true;
                }
            }
        }
    }

    pub fn pivot_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn pivot(&self, row: usize) -> Option<&SparseVec<F>> {
        self.pivots.get(&row)
    }
}

/// Dense reduced row-echelon form; returns the reduced rows and the pivot
/// column of each nonzero row, in order. First-nonzero pivot selection.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use num_rational::BigRational;

    type Q = BigRational;
    type F2 = Fp<2>;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn identity_composes_to_identity() {
        let i3 = Matrix::<Q>::identity(3);
        assert_eq!(i3.compose(&i3).unwrap(), i3);
    }

    #[test]
    fn compose_with_zero() {
        let m = Matrix::from_dense(&[vec![q(1), q(2)], vec![q(3), q(4)], vec![q(0), q(5)]]);
        let z = Matrix::<Q>::zeros(2, 4);
        let prod = m.compose(&z).unwrap();
        assert!(prod.is_zero());
        assert_eq!(prod.shape(), (3, 4));
    }

    #[test]
    fn unipotent_squares_to_identity_mod_two() {
        let one = F2::new(1);
        let zero = F2::new(0);
        let a = Matrix::from_dense(&[vec![one, one], vec![zero, one]]);
        assert_eq!(a.compose(&a).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn compose_dimension_mismatch() {
        let a = Matrix::<Q>::zeros(2, 3);
        let b = Matrix::<Q>::zeros(2, 3);
        assert!(matches!(
            a.compose(&b),
            Err(LinalgError::DimensionMismatch { op: "compose", .. })
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Q>::identity(5).rank(), 5);
        assert_eq!(Matrix::<Q>::zeros(4, 3).rank(), 0);
        let m = Matrix::from_dense(&[vec![q(1), q(1)], vec![q(1), q(1)]]);
        assert_eq!(m.rank(), 1);
        // full rank over Q, rank one over F_2
        let m = Matrix::from_dense(&[vec![q(1), q(1)], vec![q(1), q(-1)]]);
        assert_eq!(m.rank(), 2);
        let m2 = Matrix::from_dense(&[
            vec![F2::new(1), F2::new(1)],
            vec![F2::new(1), F2::from_i64(-1)],
        ]);
        assert_eq!(m2.rank(), 1);
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            Matrix::<Q>::identity(2).kron(&Matrix::identity(3)),
            Matrix::identity(6)
        );
        // e_{12} (2x2) ⊗ e_{34} (4x4): entry at row (0,2) col (1,3), 0-based
        let e12 = Matrix::from_triplets(2, 2, [(0, 1, q(1))]).unwrap();
        let e34 = Matrix::from_triplets(4, 4, [(2, 3, q(1))]).unwrap();
        let k = e12.kron(&e34);
        assert_eq!(k.shape(), (8, 8));
        assert_eq!(k.triplets(), vec![(2, 7, q(1))]);
        let six = Matrix::from_dense(&[vec![q(2)]]).kron(&Matrix::from_dense(&[vec![q(3)]]));
        assert_eq!(six, Matrix::from_dense(&[vec![q(6)]]));
    }

    #[test]
    fn kron_power_column_matches_power() {
        let m = Matrix::from_dense(&[vec![q(1), q(2), q(0)], vec![q(0), q(-1), q(3)]]);
        let p3 = m.kron_power(3);
        for c in 0..27 {
            let digits = [c / 9, (c / 3) % 3, c % 3];
            assert_eq!(&m.kron_power_column(&digits), p3.column(c));
        }
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_dense(&[vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for (free, v) in ker {
            assert_eq!(v[free], q(1));
            assert!(m.apply(&SparseVec::from_dense(&v)).is_zero());
        }
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::<Q>::new();
        assert!(e.insert(SparseVec::from_pairs([(0, q(1)), (2, q(1))])));
        assert!(e.insert(SparseVec::from_pairs([(1, q(1)), (2, q(-1))])));
        assert!(!e.insert(SparseVec::from_pairs([(0, q(1)), (1, q(1))])));
        let outside = SparseVec::unit(2);
        assert!(!e.reduce(outside).is_zero());
    }

    #[test]
    fn stack_and_block_diag() {
        let a = Matrix::<Q>::identity(2);
        let s = Matrix::vstack(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(s.shape(), (4, 2));
        assert_eq!(s.rank(), 2);
        let d = Matrix::block_diag(&[a.clone(), Matrix::identity(1)]);
        assert_eq!(d, Matrix::identity(3));
    }
}
