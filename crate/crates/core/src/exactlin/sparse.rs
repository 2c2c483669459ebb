//! Sparse linear maps with column-compressed storage.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::scalar::Scalar;
use super::LinAlgError;

/// A sparse vector: basis index to nonzero coefficient.
pub type SparseVec<R> = BTreeMap<usize, R>;

/// Adds `c * v` into `acc`, dropping cancelled entries.
pub fn axpy<R: Scalar>(acc: &mut SparseVec<R>, c: &R, v: &SparseVec<R>) {
    for (i, x) in v {
        add_entry(acc, *i, c.clone() * x.clone());
    }
}

pub fn add_entry<R: Scalar>(acc: &mut SparseVec<R>, i: usize, x: R) {
    if x.is_zero() {
        return;
    }
    match acc.entry(i) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().clone() + x;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// A linear map `R^cols -> R^rows`, column `j` holding the image of basis vector `j`.
///
/// Columns are sorted by row and never store zeros, so structural equality is
/// entrywise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseLinearMap<R> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, R)>>,
}

/// First entry on which two maps disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch<R> {
    pub row: usize,
    pub col: usize,
    pub left: R,
    pub right: R,
}

impl<R: fmt::Display> fmt::Display for Mismatch<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry ({}, {}): {} vs {}", self.row, self.col, self.left, self.right)
    }
}

impl<R: Scalar> fmt::Debug for SparseLinearMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseLinearMap {}x{} [", self.rows, self.cols)?;
        for (r, c, v) in self.entries() {
            write!(f, " ({r},{c})={v}")?;
        }
        write!(f, " ]")
    }
}

impl<R: Scalar> SparseLinearMap<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseLinearMap { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    /// `c * Id_n`.
    pub fn scalar(n: usize, c: R) -> Self {
        if c.is_zero() {
            return Self::zero(n, n);
        }
        SparseLinearMap { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, c.clone())]).collect() }
    }

    /// Builds a map from `(row, col, value)` triples, summing repeated keys.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = (usize, usize, R)>,
    {
        let mut acc: Vec<SparseVec<R>> = vec![SparseVec::new(); cols];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(LinAlgError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            add_entry(&mut acc[c], r, v);
        }
        Ok(Self::from_sparse_columns(rows, acc))
    }

    /// Like [`from_triplets`](Self::from_triplets) but rejects repeated keys and stored zeros.
    pub fn from_entries_strict<I>(rows: usize, cols: usize, entries: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = (usize, usize, R)>,
    {
        let mut acc: Vec<SparseVec<R>> = vec![SparseVec::new(); cols];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(LinAlgError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            if v.is_zero() {
                return Err(LinAlgError::StoredZero { row: r, col: c });
            }
            if acc[c].insert(r, v).is_some() {
                return Err(LinAlgError::DuplicateEntry { row: r, col: c });
            }
        }
        Ok(Self::from_sparse_columns(rows, acc))
    }

    /// Builds a map column by column from sparse images (zeros are dropped).
    pub fn from_sparse_columns(rows: usize, columns: Vec<SparseVec<R>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| {
                debug_assert!(c.keys().all(|r| *r < rows));
                c.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseLinearMap { rows, cols, columns }
    }

    /// Dense row-major construction; mainly for tests and small fixtures.
    pub fn from_dense(rows: usize, cols: usize, data: &[R]) -> Self {
        assert_eq!(data.len(), rows * cols, "dense data has wrong length");
        let mut columns = vec![Vec::new(); cols];
        for c in 0..cols {
            for r in 0..rows {
                let v = &data[r * cols + c];
                if !v.is_zero() {
                    columns[c].push((r, v.clone()));
                }
            }
        }
        SparseLinearMap { rows, cols, columns }
    }

    /// Row covector `1 x d`.
    pub fn covector(values: &[R]) -> Self {
        Self::from_dense(1, values.len(), values)
    }

    /// Column vector `d x 1`.
    pub fn vector(values: &SparseVec<R>, dim: usize) -> Self {
        Self::from_sparse_columns(dim, vec![values.clone()])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn column(&self, c: usize) -> &[(usize, R)] {
        &self.columns[c]
    }

    pub fn column_vec(&self, c: usize) -> SparseVec<R> {
        self.columns[c].iter().cloned().collect()
    }

    pub fn get(&self, r: usize, c: usize) -> R {
        match self.columns[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => self.columns[c][k].1.clone(),
            Err(_) => R::zero(),
        }
    }

    /// Entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// Entries sorted by `(row, col)`.
    pub fn entries_row_major(&self) -> Vec<(usize, usize, R)> {
        let mut out: Vec<(usize, usize, R)> = self.entries().map(|(r, c, v)| (r, c, v.clone())).collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<R> {
        let mut out = vec![R::zero(); self.rows * self.cols];
        for (r, c, v) in self.entries() {
            out[r * self.cols + c] = v.clone();
        }
        out
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &SparseVec<R>) -> SparseVec<R> {
        let mut out = SparseVec::new();
        for (j, x) in v {
            for (i, a) in &self.columns[*j] {
                add_entry(&mut out, *i, a.clone() * x.clone());
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "compose",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut work: Vec<R> = vec![R::zero(); self.rows];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; self.rows];
        let mut columns = Vec::with_capacity(other.cols);
        for col in &other.columns {
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    if !mark[*i] {
                        mark[*i] = true;
                        touched.push(*i);
                    }
                    let prod = a.clone() * b.clone();
                    let cur = std::mem::replace(&mut work[*i], R::zero());
                    work[*i] = cur + prod;
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for i in touched.drain(..) {
                mark[i] = false;
                let v = std::mem::replace(&mut work[i], R::zero());
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
            columns.push(out);
        }
        Ok(SparseLinearMap { rows: self.rows, cols: other.cols, columns })
    }

    /// Composes a chain `f_1 ∘ f_2 ∘ … ∘ f_k`.
    pub fn compose_all(maps: &[&Self]) -> Result<Self, LinAlgError> {
        let (last, rest) = maps.split_last().expect("compose_all needs at least one map");
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Kronecker product with big-endian indexing: `(f⊗g)(i*q + k, j*s + l) = f(i,j) g(k,l)`.
    pub fn tensor(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut columns = Vec::with_capacity(cols);
        for fc in &self.columns {
            for gc in &other.columns {
                let mut out = Vec::with_capacity(fc.len() * gc.len());
                for (i, a) in fc {
                    for (k, b) in gc {
                        out.push((i * other.rows + k, a.clone() * b.clone()));
                    }
                }
                columns.push(out);
            }
        }
        SparseLinearMap { rows, cols, columns }
    }

    /// `Id_left ⊗ self ⊗ Id_right`, without materializing the identities.
    pub fn placed(&self, left: usize, right: usize) -> Self {
        if left == 1 && right == 1 {
            return self.clone();
        }
        let rows = left * self.rows * right;
        let cols = left * self.cols * right;
        let mut columns = Vec::with_capacity(cols);
        for a in 0..left {
            for col in &self.columns {
                for b in 0..right {
                    columns.push(
                        col.iter()
                            .map(|(i, v)| ((a * self.rows + i) * right + b, v.clone()))
                            .collect(),
                    );
                }
            }
        }
        SparseLinearMap { rows, cols, columns }
    }

    /// The block swap `R^a ⊗ R^b -> R^b ⊗ R^a`.
    pub fn block_flip(a: usize, b: usize) -> Self {
        let mut columns = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                columns.push(vec![(j * a + i, R::one())]);
            }
        }
        SparseLinearMap { rows: a * b, cols: a * b, columns }
    }

    pub fn transpose(&self) -> Self {
        let mut columns: Vec<Vec<(usize, R)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                columns[*r].push((c, v.clone()));
            }
        }
        SparseLinearMap { rows: self.cols, cols: self.rows, columns }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.combine(other, R::one(), "add")
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.combine(other, -R::one(), "sub")
    }

    /// `self + c * other`.
    pub fn combine(&self, other: &Self, c: R, op: &'static str) -> Result<Self, LinAlgError> {
        if self.shape() != other.shape() {
            return Err(LinAlgError::DimensionMismatch { op, left: self.shape(), right: other.shape() });
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(x, y)| merge_columns(x, y, &c))
            .collect();
        Ok(SparseLinearMap { rows: self.rows, cols: self.cols, columns })
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.rows, self.cols);
        }
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| (*r, v.clone() * c.clone()))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseLinearMap { rows: self.rows, cols: self.cols, columns }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-R::one())
    }

    /// Sum of a nonempty family of same-shaped maps.
    pub fn sum<'a, I>(rows: usize, cols: usize, maps: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = &'a Self>,
        R: 'a,
    {
        let mut acc: Vec<SparseVec<R>> = vec![SparseVec::new(); cols];
        for m in maps {
            if m.shape() != (rows, cols) {
                return Err(LinAlgError::DimensionMismatch { op: "sum", left: (rows, cols), right: m.shape() });
            }
            for (r, c, v) in m.entries() {
                add_entry(&mut acc[c], r, v.clone());
            }
        }
        Ok(Self::from_sparse_columns(rows, acc))
    }

    /// First `(row, col)` (column-major) where the maps differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch<R>> {
        if self.shape() != other.shape() {
            return Some(Mismatch { row: usize::MAX, col: usize::MAX, left: R::zero(), right: R::zero() });
        }
        for c in 0..self.cols {
            if self.columns[c] == other.columns[c] {
                continue;
            }
            let a: SparseVec<R> = self.columns[c].iter().cloned().collect();
            let b: SparseVec<R> = other.columns[c].iter().cloned().collect();
            let rows: std::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
            for r in rows {
                let x = a.get(&r).cloned().unwrap_or_else(R::zero);
                let y = b.get(&r).cloned().unwrap_or_else(R::zero);
                if x != y {
                    return Some(Mismatch { row: r, col: c, left: x, right: y });
                }
            }
        }
        None
    }

    /// First nonzero entry, column-major.
    pub fn first_nonzero(&self) -> Option<(usize, usize, R)> {
        self.entries().next().map(|(r, c, v)| (r, c, v.clone()))
    }

    /// Restriction to the given rows and columns, renumbered in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut new_row = vec![usize::MAX; self.rows];
        for (k, r) in rows.iter().enumerate() {
            new_row[*r] = k;
        }
        let columns = cols
            .iter()
            .map(|c| {
                self.columns[*c]
                    .iter()
                    .filter(|(r, _)| new_row[*r] != usize::MAX)
                    .map(|(r, v)| (new_row[*r], v.clone()))
                    .collect::<Vec<_>>()
            })
            .map(|mut col: Vec<(usize, R)>| {
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        SparseLinearMap { rows: rows.len(), cols: cols.len(), columns }
    }

    /// Coefficient-wise ring change; fails if some entry has no image.
    pub fn try_map_scalars<S: Scalar, F>(&self, f: F) -> Option<SparseLinearMap<S>>
    where
        F: Fn(&R) -> Option<S>,
    {
        let mut columns = Vec::with_capacity(self.cols);
        for col in &self.columns {
            let mut out = Vec::with_capacity(col.len());
            for (r, v) in col {
                let w = f(v)?;
                if !w.is_zero() {
                    out.push((*r, w));
                }
            }
            columns.push(out);
        }
        Some(SparseLinearMap { rows: self.rows, cols: self.cols, columns })
    }

    pub fn map_scalars<S: Scalar, F>(&self, f: F) -> SparseLinearMap<S>
    where
        F: Fn(&R) -> S,
    {
        self.try_map_scalars(|v| Some(f(v))).expect("total coefficient map")
    }

    pub fn to_rational(&self) -> SparseLinearMap<BigRational> {
        self.map_scalars(|v| v.to_rational())
    }

    /// Rank over the fraction field of the coefficient ring.
    pub fn rank(&self) -> usize {
        R::rank_of(self)
    }

    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }

    /// Whether this map is the identity.
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }
}

fn merge_columns<R: Scalar>(x: &[(usize, R)], y: &[(usize, R)], c: &R) -> Vec<(usize, R)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = c.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = x[i].1.clone() + c.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
