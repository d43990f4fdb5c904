//! Exact linear algebra over a [`FieldSpec`].
//!
//! Matrices act on column vectors from the left. Tensor products use the
//! row-major convention `e_i ⊗ f_j ↦ i * dim_f + j`, so the left factor is the
//! slow index. Storage is column-compressed; the dense view is available
//! through [`Mat::get`] and [`Mat::to_dense`].

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Sorted `(index, value)` pairs with no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        if self.rows * self.cols <= 400 {
            for r in self.to_dense() {
                let line: Vec<String> = r.iter().map(|s| s.to_string()).collect();
                writeln!(f, "  [{}]", line.join(", "))?;
            }
        }
        Ok(())
    }
}

fn axpy(x: &SparseVec, a: &Scalar, y: &SparseVec) -> SparseVec {
    // x + a*y
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + &(a * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize(field: FieldSpec, mut v: Vec<(usize, Scalar)>) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, s) in v {
        debug_assert!(field.contains(&s));
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = &last.1 + &s,
            _ => out.push((i, s)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let one = field.one();
        Mat { field, rows: n, cols: n, data: (0..n).map(|i| vec![(i, one.clone())]).collect() }
    }

    /// Row-major dense constructor; rejects entries from another field.
    pub fn from_dense(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Mat> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for {rows}x{cols}", entries.len())));
        }
        let mut trip = Vec::new();
        for (k, s) in entries.into_iter().enumerate() {
            if !field.contains(&s) {
                return Err(Error::FieldMismatch(field.name(), s.field().name()));
            }
            trip.push((k / cols, k % cols, s));
        }
        Ok(Mat::from_triplets(field, rows, cols, trip))
    }

    /// Small integer matrices, row-major.
    pub fn from_ints(field: FieldSpec, rows: &[Vec<i64>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut trip = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                if x != 0 {
                    trip.push((i, j, field.int(x)));
                }
            }
        }
        Mat::from_triplets(field, r, c, trip)
    }

    pub fn from_triplets(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        trip: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Mat {
        let mut data: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (i, j, s) in trip {
            assert!(i < rows && j < cols, "triplet ({i},{j}) outside {rows}x{cols}");
            if !s.is_zero() {
                data[j].push((i, s));
            }
        }
        let data = data.into_iter().map(|c| normalize(field, c)).collect();
        Mat { field, rows, cols, data }
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: Vec<Vec<(usize, Scalar)>>) -> Mat {
        let cols = columns.len();
        let data = columns
            .into_iter()
            .map(|c| {
                assert!(c.iter().all(|e| e.0 < rows), "column entry out of range");
                normalize(field, c)
            })
            .collect();
        Mat { field, rows, cols, data }
    }

    pub fn column_vector(field: FieldSpec, v: &[Scalar]) -> Mat {
        Mat::from_columns(field, v.len(), vec![v.iter().cloned().enumerate().collect()])
    }

    /// `n x 1` standard basis vector.
    pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Mat {
        Mat::from_columns(field, n, vec![vec![(i, field.one())]])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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
    pub fn col(&self, j: usize) -> &SparseVec {
        &self.data[j]
    }
    pub fn nnz(&self) -> usize {
        self.data.iter().map(|c| c.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[j].binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.data[j][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (j, c) in self.data.iter().enumerate() {
            for (i, s) in c {
                out[*i][j] = s.clone();
            }
        }
        out
    }

    pub fn column_as_mat(&self, j: usize) -> Mat {
        Mat { field: self.field, rows: self.rows, cols: 1, data: vec![self.data[j].clone()] }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// First `(row, col)` where two equally shaped matrices differ.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        assert_eq!(self.shape(), other.shape(), "first_difference on different shapes");
        for j in 0..self.cols {
            if self.data[j] != other.data[j] {
                let a = &self.data[j];
                let b = &other.data[j];
                let d = axpy(a, &-self.field.one(), b);
                return Some((d[0].0, j));
            }
        }
        None
    }

    pub fn transpose(&self) -> Mat {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, c) in self.data.iter().enumerate() {
            for (i, s) in c {
                data[*i].push((j, s.clone()));
            }
        }
        Mat { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    fn same_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "product {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.field.zero();
        let mut acc = vec![zero; self.rows];
        let mut mark = vec![false; self.rows];
        let mut touched: Vec<usize> = Vec::new();
        let mut data = Vec::with_capacity(other.cols);
        for bcol in &other.data {
            for (k, b) in bcol {
                for (i, a) in &self.data[*k] {
                    let t = a * b;
                    if mark[*i] {
                        acc[*i] = &acc[*i] + &t;
                    } else {
                        mark[*i] = true;
                        touched.push(*i);
                        acc[*i] = t;
                    }
                }
            }
            touched.sort_unstable();
            let mut col = Vec::with_capacity(touched.len());
            for &i in &touched {
                mark[i] = false;
                if !acc[i].is_zero() {
                    col.push((i, std::mem::replace(&mut acc[i], self.field.zero())));
                }
            }
            touched.clear();
            data.push(col);
        }
        Ok(Mat { field: self.field, rows: self.rows, cols: other.cols, data })
    }

    /// Matrix product; panics on shape or field mismatch.
    pub fn mul(&self, other: &Mat) -> Mat {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Composition of a chain of maps applied right to left: `compose(&[f, g, h]) = f∘g∘h`.
    pub fn compose(maps: &[&Mat]) -> Mat {
        let mut it = maps.iter().rev();
        let first = (*it.next().expect("compose of nothing")).clone();
        it.fold(first, |acc, m| m.mul(&acc))
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!("sum {:?} + {:?}", self.shape(), other.shape())));
        }
        let one = self.field.one();
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy(a, &one, b)).collect();
        Ok(Mat { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        if s.is_zero() {
            return Mat::zeros(self.field, self.rows, self.cols);
        }
        let data = self.data.iter().map(|c| c.iter().map(|(i, x)| (*i, x * s)).collect()).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale_int(&self, n: i64) -> Mat {
        self.scale(&self.field.int(n))
    }

    pub fn try_kron(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        let (r2, c2) = other.shape();
        let mut data = Vec::with_capacity(self.cols * c2);
        for a in &self.data {
            for b in &other.data {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        col.push((i * r2 + k, x * y));
                    }
                }
                data.push(col);
            }
        }
        Ok(Mat { field: self.field, rows: self.rows * r2, cols: self.cols * c2, data })
    }

    /// Kronecker product `self ⊗ other`; panics on field mismatch.
    pub fn kron(&self, other: &Mat) -> Mat {
        self.try_kron(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `a_1 ⊗ a_2 ⊗ ... ⊗ a_k`.
    pub fn kron_all(field: FieldSpec, maps: &[&Mat]) -> Mat {
        maps.iter().fold(Mat::identity(field, 1), |acc, m| acc.kron(m))
    }

    pub fn hstack(field: FieldSpec, rows: usize, blocks: &[&Mat]) -> Mat {
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            data.extend(b.data.iter().cloned());
        }
        Mat { field, rows, cols: data.len(), data }
    }

    pub fn vstack(field: FieldSpec, cols: usize, blocks: &[&Mat]) -> Mat {
        let mut data: Vec<SparseVec> = vec![Vec::new(); cols];
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            for (j, c) in b.data.iter().enumerate() {
                data[j].extend(c.iter().map(|(i, s)| (i + off, s.clone())));
            }
            off += b.rows;
        }
        Mat { field, rows: off, cols, data }
    }

    pub fn block_diag(field: FieldSpec, blocks: &[&Mat]) -> Mat {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::new();
        let mut off = 0;
        for b in blocks {
            for c in &b.data {
                data.push(c.iter().map(|(i, s)| (i + off, s.clone())).collect());
            }
            off += b.rows;
        }
        Mat { field, rows, cols: data.len(), data }
    }

    /// Embed `self` as the block starting at `(r0, c0)` of a `rows x cols` zero matrix.
    pub fn embed(&self, rows: usize, cols: usize, r0: usize, c0: usize) -> Mat {
        assert!(r0 + self.rows <= rows && c0 + self.cols <= cols, "embed out of range");
        let mut data = vec![Vec::new(); cols];
        for (j, c) in self.data.iter().enumerate() {
            data[c0 + j] = c.iter().map(|(i, s)| (i + r0, s.clone())).collect();
        }
        Mat { field: self.field, rows, cols, data }
    }

    /// Sub-block `rows r0..r0+nr`, `cols c0..c0+nc`.
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Mat {
        let data = self.data[c0..c0 + nc]
            .iter()
            .map(|c| c.iter().filter(|e| e.0 >= r0 && e.0 < r0 + nr).map(|(i, s)| (i - r0, s.clone())).collect())
            .collect();
        Mat { field: self.field, rows: nr, cols: nc, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat { field: self.field, rows: self.rows, cols: idx.len(), data: idx.iter().map(|&j| self.data[j].clone()).collect() }
    }

    /// Permutation matrix reordering tensor legs: input legs have sizes `dims`,
    /// output leg `i` is input leg `order[i]`.
    pub fn perm_legs(field: FieldSpec, dims: &[usize], order: &[usize]) -> Mat {
        assert_eq!(dims.len(), order.len());
        let n: usize = dims.iter().product();
        let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
        // stride of each input leg in the output index
        let mut out_stride = vec![0usize; dims.len()];
        let mut s = 1;
        for i in (0..order.len()).rev() {
            out_stride[order[i]] = s;
            s *= out_dims[i];
        }
        let one = field.one();
        let mut data = Vec::with_capacity(n);
        let mut idx = vec![0usize; dims.len()];
        for _ in 0..n {
            let row: usize = idx.iter().zip(&out_stride).map(|(a, b)| a * b).sum();
            data.push(vec![(row, one.clone())]);
            for k in (0..dims.len()).rev() {
                idx[k] += 1;
                if idx[k] < dims[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
        Mat { field, rows: n, cols: n, data }
    }

    /// Swap of two tensor factors `V ⊗ W → W ⊗ V`.
    pub fn flip(field: FieldSpec, dv: usize, dw: usize) -> Mat {
        Mat::perm_legs(field, &[dv, dw], &[1, 0])
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert_eq!(self.rows, self.cols);
        (0..e).fold(Mat::identity(self.field, self.rows), |acc, _| acc.mul(self))
    }

    fn echelon_of_rows(&self, extra: Option<&Mat>) -> Echelon {
        let t = self.transpose();
        let et = extra.map(|e| e.transpose());
        let mut ech = Echelon::new(self.field, self.cols + extra.map_or(0, |e| e.cols));
        for (i, row) in t.data.into_iter().enumerate() {
            let row = match &et {
                Some(e) => {
                    let mut r = row;
                    r.extend(e.data[i].iter().map(|(j, s)| (j + self.cols, s.clone())));
                    r
                }
                None => row,
            };
            ech.insert(row);
        }
        ech
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows < self.cols {
            self.transpose().rank()
        } else {
            self.echelon_of_rows(None).rank()
        }
    }

    /// Indices of a maximal independent set of columns, chosen greedily in index order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.echelon_of_rows(None).pivot_col.clone();
        p.sort_unstable();
        p
    }

    /// Kernel basis as columns.
    pub fn kernel(&self) -> Mat {
        let mut ech = self.echelon_of_rows(None);
        ech.full_reduce();
        ech.kernel_basis(self.cols)
    }

    pub fn image(&self) -> Subspace {
        Subspace { ambient: self.rows, basis: self.select_cols(&self.pivot_columns()) }
    }

    pub fn rank_kernel_image(&self) -> (usize, Subspace, Subspace) {
        let image = self.image();
        let kernel = Subspace { ambient: self.cols, basis: self.kernel() };
        (image.dim(), kernel, image)
    }

    /// Some `X` with `self * X = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let mut ech = self.echelon_of_rows(Some(b));
        if ech.pivot_col.iter().any(|&c| c >= self.cols) {
            return None;
        }
        ech.full_reduce();
        let mut trip = Vec::new();
        for (r, &c) in ech.rows.iter().zip(&ech.pivot_col) {
            for (j, s) in r {
                if *j >= self.cols {
                    trip.push((c, j - self.cols, s.clone()));
                }
            }
        }
        Some(Mat::from_triplets(self.field, self.cols, b.cols, trip))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols || self.rank() != self.rows {
            return None;
        }
        self.solve(&Mat::identity(self.field, self.rows))
    }

    /// `L` with `L * self = I`; requires full column rank.
    pub fn left_inverse(&self) -> Option<Mat> {
        let k = self.cols;
        if self.rank() != k {
            return None;
        }
        Some(self.transpose().solve(&Mat::identity(self.field, k))?.transpose())
    }
}

/// Incremental row echelon form with leading-entry pivots normalised to 1.
pub(crate) struct Echelon {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_col: Vec<usize>,
    row_of: HashMap<usize, usize>,
}

impl Echelon {
    pub(crate) fn new(field: FieldSpec, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_col: Vec::new(), row_of: HashMap::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, mut r: SparseVec) -> SparseVec {
        let mut pos = 0;
        while pos < r.len() {
            let c = r[pos].0;
            match self.row_of.get(&c) {
                Some(&k) => {
                    let f = -&r[pos].1;
                    r = axpy(&r, &f, &self.rows[k]);
                }
                None => pos += 1,
            }
        }
        r
    }

    /// Returns true when the row was independent of those already present.
    pub(crate) fn insert(&mut self, r: SparseVec) -> bool {
        let r = self.reduce(r);
        if r.is_empty() {
            return false;
        }
        let c = r[0].0;
        debug_assert!(c < self.ncols);
        let inv = r[0].1.inv().expect("nonzero pivot");
        let r: SparseVec = r.into_iter().map(|(i, s)| (i, &s * &inv)).collect();
        self.row_of.insert(c, self.rows.len());
        self.pivot_col.push(c);
        self.rows.push(r);
        true
    }

    /// Clear every entry above each pivot (reduced row echelon form).
    pub(crate) fn full_reduce(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(self.pivot_col[k]));
        for &k in &order {
            let mut r = std::mem::take(&mut self.rows[k]);
            let mut pos = 1;
            while pos < r.len() {
                let c = r[pos].0;
                match self.row_of.get(&c) {
                    Some(&k2) if k2 != k => {
                        let f = -&r[pos].1;
                        r = axpy(&r, &f, &self.rows[k2]);
                    }
                    _ => pos += 1,
                }
            }
            self.rows[k] = r;
        }
    }

    fn kernel_basis(&self, ncols: usize) -> Mat {
        let mut cols = Vec::new();
        let one = self.field.one();
        for f in 0..ncols {
            if self.row_of.contains_key(&f) {
                continue;
            }
            let mut v = vec![(f, one.clone())];
            for (r, &c) in self.rows.iter().zip(&self.pivot_col) {
                if let Ok(k) = r.binary_search_by_key(&f, |e| e.0) {
                    v.push((c, -&r[k].1));
                }
            }
            cols.push(v);
        }
        Mat::from_columns(self.field, ncols, cols)
    }
}

/// A subspace given by a basis (as matrix columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    /// Independent columns are required.
    pub fn from_basis(basis: Mat) -> Result<Subspace> {
        if basis.rank() != basis.cols() {
            return Err(Error::DependentRelations);
        }
        Ok(Subspace { ambient: basis.rows(), basis })
    }

    pub fn span(m: &Mat) -> Subspace {
        m.image()
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zeros(field, ambient, 0) }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(field, ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
    pub fn basis(&self) -> &Mat {
        &self.basis
    }
    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn contains(&self, v: &Mat) -> bool {
        let both = Mat::hstack(self.field(), self.ambient, &[&self.basis, v]);
        both.rank() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&Mat::hstack(self.field(), self.ambient, &[&self.basis, &other.basis]))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains(&other.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // [A | -B] (x, y) = 0  =>  A x is in both
        let stacked = Mat::hstack(self.field(), self.ambient, &[&self.basis, &other.basis.scale_int(-1)]);
        let k = stacked.kernel();
        let xs = k.block(0, self.dim(), 0, k.cols());
        Subspace::span(&self.basis.mul(&xs))
    }

    /// Coordinates with respect to the basis: a matrix `L` with `L * basis = I`.
    pub fn coordinate_map(&self) -> Mat {
        self.basis.left_inverse().expect("basis is independent")
    }
}

/// A quotient `ambient / relations` with a fixed complement.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: usize,
    relations: Subspace,
    projection: Mat,
    section: Mat,
}

impl QuotientSpace {
    /// Complement spanned by standard basis vectors chosen greedily in index order.
    pub fn new(relations: &Subspace) -> QuotientSpace {
        let mut q = Self::from_spanning(relations.field(), relations.ambient_dim(), relations.basis());
        q.relations = relations.clone();
        q
    }

    /// Greedy quotient by the span of arbitrary (possibly dependent) columns.
    ///
    /// `e_i` joins the complement exactly when no relation has its last
    /// nonzero entry at `i`, so eliminating on reversed coordinates gives the
    /// projection without inverting anything.
    pub fn from_spanning(field: FieldSpec, n: usize, spanning: &Mat) -> QuotientSpace {
        assert_eq!(spanning.rows(), n, "spanning set lives in the wrong space");
        let mut ech = Echelon::new(field, n);
        for j in 0..spanning.cols() {
            let mut r: SparseVec = spanning.col(j).iter().map(|(i, s)| (n - 1 - i, s.clone())).collect();
            r.reverse();
            ech.insert(r);
        }
        ech.full_reduce();
        let trailing: Vec<bool> = {
            let mut t = vec![false; n];
            for &c in &ech.pivot_col {
                t[n - 1 - c] = true;
            }
            t
        };
        let chosen: Vec<usize> = (0..n).filter(|&i| !trailing[i]).collect();
        let mut pos = vec![usize::MAX; n];
        for (k, &i) in chosen.iter().enumerate() {
            pos[i] = k;
        }
        let mut trip: Vec<(usize, usize, Scalar)> = chosen.iter().enumerate().map(|(k, &i)| (k, i, field.one())).collect();
        let mut rel_cols = Vec::with_capacity(ech.rows.len());
        for (r, &c) in ech.rows.iter().zip(&ech.pivot_col) {
            let t = n - 1 - c;
            for (i_rev, s) in r.iter().skip(1) {
                trip.push((pos[n - 1 - i_rev], t, -s));
            }
            rel_cols.push(r.iter().map(|(i_rev, s)| (n - 1 - i_rev, s.clone())).collect());
        }
        let q = chosen.len();
        let projection = Mat::from_triplets(field, q, n, trip);
        let section = Mat::identity(field, n).select_cols(&chosen);
        let relations = Subspace { ambient: n, basis: Mat::from_columns(field, n, rel_cols) };
        QuotientSpace { ambient: n, relations, projection, section }
    }

    /// Quotient whose section has the given image; fails unless `complement`
    /// is a complement of the relations.
    pub fn with_complement(relations: &Subspace, complement: Mat) -> Result<QuotientSpace> {
        let field = relations.field();
        let n = relations.ambient_dim();
        let r = relations.dim();
        let all = Mat::hstack(field, n, &[relations.basis(), &complement]);
        if all.cols() != n {
            return Err(Error::Shape(format!("complement of dim {} for codim {}", complement.cols(), n - r)));
        }
        let inv = all.inverse().ok_or(Error::DependentRelations)?;
        let projection = inv.block(r, n - r, 0, n);
        Ok(QuotientSpace { ambient: n, relations: relations.clone(), projection, section: complement })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.section.cols()
    }
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }
    pub fn projection(&self) -> &Mat {
        &self.projection
    }
    pub fn section(&self) -> &Mat {
        &self.section
    }
}

/// Checked quotient constructor: the relation basis must be independent.
pub fn quotient_space(ambient_dim: usize, relations: &Subspace) -> Result<QuotientSpace> {
    if relations.ambient_dim() != ambient_dim {
        return Err(Error::Shape(format!("relations live in dim {}, not {ambient_dim}", relations.ambient_dim())));
    }
    if relations.basis().rank() != relations.dim() {
        return Err(Error::DependentRelations);
    }
    Ok(QuotientSpace::new(relations))
}

/// Identity check helper: `Ok` when equal, otherwise the first witness.
pub fn expect_equal(check: &str, a: &Mat, b: &Mat) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::identity(check, format!("shapes {:?} vs {:?}", a.shape(), b.shape())));
    }
    match a.first_difference(b) {
        None => Ok(()),
        Some((i, j)) => Err(Error::identity(check, format!("entry ({i}, {j})"))),
    }
}

pub fn expect_zero(check: &str, a: &Mat) -> Result<()> {
    expect_equal(check, a, &Mat::zeros(a.field(), a.rows(), a.cols()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identity_has_full_rank() {
        let (r, k, im) = Mat::identity(Q, 2).rank_kernel_image();
        assert_eq!((r, k.dim(), im.dim()), (2, 0, 2));
    }

    #[test]
    fn zero_matrix_kernel() {
        let (r, k, _) = Mat::zeros(Q, 3, 4).rank_kernel_image();
        assert_eq!((r, k.dim()), (0, 4));
    }

    #[test]
    fn rank_one_kernel_direction() {
        let m = Mat::from_ints(Q, &[vec![1, 2], vec![2, 4]]);
        let (r, k, _) = m.rank_kernel_image();
        assert_eq!(r, 1);
        assert_eq!(k.dim(), 1);
        // kernel spanned by (2, -1)
        let target = Mat::from_ints(Q, &[vec![2], vec![-1]]);
        assert!(k.contains(&target));
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_space(2, &Subspace::zero(Q, 2)).unwrap();
        assert!(q.projection().is_identity());
        let rel = Subspace::from_basis(Mat::from_ints(Q, &[vec![1], vec![1]])).unwrap();
        let q = quotient_space(2, &rel).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.projection().mul(rel.basis()).is_zero());
        let q = quotient_space(3, &Subspace::full(Q, 3)).unwrap();
        assert_eq!(q.dim(), 0);
        let dep = Subspace { ambient: 2, basis: Mat::from_ints(Q, &[vec![1, 2], vec![1, 2]]) };
        assert!(matches!(quotient_space(2, &dep), Err(Error::DependentRelations)));
    }

    #[test]
    fn kron_examples() {
        assert!(Mat::identity(Q, 2).kron(&Mat::identity(Q, 3)).is_identity());
        let a = Mat::from_ints(Q, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.kron(&Mat::identity(Q, 1)), a);
        let b = Mat::from_ints(Q, &[vec![0, 1], vec![1, 0]]);
        let v = Mat::from_ints(Q, &[vec![5], vec![-1]]);
        let w = Mat::from_ints(Q, &[vec![2], vec![7]]);
        assert_eq!(a.kron(&b).mul(&v.kron(&w)), a.mul(&v).kron(&b.mul(&w)));
        assert!(a.try_kron(&Mat::identity(FieldSpec::PrimeField(5), 1)).is_err());
    }

    #[test]
    fn mixed_field_dense_rejected() {
        let f5 = FieldSpec::PrimeField(5);
        let r = Mat::from_dense(Q, 1, 2, vec![Q.one(), f5.one()]);
        assert!(matches!(r, Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn perm_legs_matches_flip() {
        let a = Mat::from_ints(Q, &[vec![1, 2], vec![3, 4]]);
        let b = Mat::from_ints(Q, &[vec![1, 0, 2], vec![0, 1, 1], vec![5, 0, 0]]);
        let p = Mat::flip(Q, 2, 3);
        let p2 = Mat::flip(Q, 3, 2);
        assert_eq!(p.mul(&a.kron(&b)), b.kron(&a).mul(&p));
        assert!(p2.mul(&p).is_identity());
        let cyc = Mat::perm_legs(Q, &[2, 3, 2], &[2, 0, 1]);
        let c = Mat::from_ints(Q, &[vec![0, 1], vec![1, 1]]);
        assert_eq!(cyc.mul(&a.kron(&b).kron(&c)), c.kron(&a).kron(&b).mul(&cyc));
    }

    #[test]
    fn solve_and_inverse() {
        let a = Mat::from_ints(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let s = Mat::from_ints(Q, &[vec![1, 1], vec![1, 1]]);
        assert!(s.inverse().is_none());
        assert!(s.solve(&Mat::from_ints(Q, &[vec![1], vec![0]])).is_none());
        let tall = Mat::from_ints(Q, &[vec![1, 0], vec![1, 1], vec![0, 3]]);
        assert!(tall.left_inverse().unwrap().mul(&tall).is_identity());
    }

    fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-3i64..4, rows * cols).prop_map(move |v| {
            let rs: Vec<Vec<i64>> = v.chunks(cols).map(|c| c.to_vec()).collect();
            Mat::from_ints(Q, &rs)
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in small_mat(4, 5)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            let (r, k, _) = m.rank_kernel_image();
            prop_assert_eq!(r + k.dim(), 5);
            prop_assert!(m.mul(k.basis()).is_zero());
        }

        #[test]
        fn rank_mod_p_transpose(v in proptest::collection::vec(0i64..7, 20)) {
            let f = FieldSpec::PrimeField(7);
            let rs: Vec<Vec<i64>> = v.chunks(5).map(|c| c.to_vec()).collect();
            let m = Mat::from_ints(f, &rs);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn quotient_invariants(m in small_mat(4, 2)) {
            let rel = m.image();
            let q = QuotientSpace::new(&rel);
            prop_assert!(q.projection().mul(q.section()).is_identity());
            prop_assert!(q.projection().mul(rel.basis()).is_zero());
            prop_assert_eq!(q.dim(), 4 - rel.dim());
        }

        #[test]
        fn greedy_quotient_matches_oracle(m in small_mat(5, 3)) {
            let rel = m.image();
            let q = QuotientSpace::new(&rel);
            // oracle: pick e_i whenever it raises the rank, then invert [R | E]
            let mut cols = rel.basis().clone();
            let mut chosen = Vec::new();
            for i in 0..5 {
                let e = Mat::unit_vector(Q, 5, i);
                let trial = Mat::hstack(Q, 5, &[&cols, &e]);
                if trial.rank() == trial.cols() {
                    cols = trial;
                    chosen.push(i);
                }
            }
            prop_assert_eq!(q.section(), &Mat::identity(Q, 5).select_cols(&chosen));
            let inv = cols.inverse().unwrap();
            let k = rel.dim();
            prop_assert_eq!(q.projection(), &inv.block(k, 5 - k, 0, 5));
        }

        #[test]
        fn kron_mixed_product(a in small_mat(2, 3), b in small_mat(2, 2), c in small_mat(3, 2), d in small_mat(2, 1)) {
            prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        }
    }
}
