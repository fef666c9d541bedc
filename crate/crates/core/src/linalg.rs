//! Exact linear algebra over `F_{p^m}` on raw element codes.
//!
//! Vectors are plain `Vec<u32>` of codes. Matrices act on column vectors.

use std::collections::BTreeMap;
use std::fmt;

use crate::gf::Field;

/// Column-major sparse matrix. Each column is sorted by row and stores no
/// zeros, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, u32)>>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, nnz={})", self.rows, self.cols, self.nnz())
    }
}

fn collect_nonzero(acc: &mut [u32], touched: &mut Vec<u32>) -> Vec<(u32, u32)> {
    touched.sort_unstable();
    touched.dedup();
    let mut out = Vec::with_capacity(touched.len());
    for &r in touched.iter() {
        let v = std::mem::take(&mut acc[r as usize]);
        if v != 0 {
            out.push((r, v));
        }
    }
    touched.clear();
    out
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn scalar(n: usize, c: u32) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n)
                .map(|i| if c == 0 { Vec::new() } else { vec![(i as u32, c)] })
                .collect(),
        }
    }

    /// Builds from columns of `(row, value)` entries in any order; duplicate
    /// rows are summed.
    pub fn from_columns(field: &Field, rows: usize, columns: Vec<Vec<(usize, u32)>>) -> Self {
        let mut acc = vec![0u32; rows];
        let mut touched = Vec::new();
        let columns = columns
            .into_iter()
            .map(|col| {
                for (r, v) in col {
                    acc[r] = field.add(acc[r], v);
                    touched.push(r as u32);
                }
                collect_nonzero(&mut acc, &mut touched)
            })
            .collect::<Vec<_>>();
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_dense(m: &DenseMatrix) -> Self {
        let columns = (0..m.cols)
            .map(|c| {
                (0..m.rows)
                    .filter_map(|r| {
                        let v = m.get(r, c);
                        (v != 0).then_some((r as u32, v))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows,
            cols: m.cols,
            columns,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(u32, u32)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.columns[c]
            .binary_search_by_key(&(r as u32), |&(row, _)| row)
            .map(|k| self.columns[c][k].1)
            .unwrap_or(0)
    }

    /// Triplets `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r as usize, c, v)))
    }

    /// `self * v`.
    pub fn apply(&self, field: &Field, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u32; self.rows];
        for (c, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(r, a) in &self.columns[c] {
                out[r as usize] = field.add(out[r as usize], field.mul(a, x));
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, field: &Field, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut acc = vec![0u32; self.rows];
        let mut touched = Vec::new();
        let columns = other
            .columns
            .iter()
            .map(|col| {
                for &(k, b) in col {
                    for &(r, a) in &self.columns[k as usize] {
                        let slot = &mut acc[r as usize];
                        *slot = field.add(*slot, field.mul(a, b));
                        touched.push(r);
                    }
                }
                collect_nonzero(&mut acc, &mut touched)
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        }
    }

    /// `self * d` for a dense right factor.
    pub fn mul_dense(&self, field: &Field, d: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, d.rows);
        let mut out = DenseMatrix::zeros(self.rows, d.cols);
        for (k, col) in self.columns.iter().enumerate() {
            let src = d.row(k).to_vec();
            for &(r, a) in col {
                field.axpy(out.row_mut(r as usize), a, &src);
            }
        }
        out
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, field: &Field, c: u32, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut acc = vec![0u32; self.rows];
        let mut touched = Vec::new();
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                for &(r, v) in a {
                    acc[r as usize] = field.add(acc[r as usize], v);
                    touched.push(r);
                }
                if c != 0 {
                    for &(r, v) in b {
                        acc[r as usize] = field.add(acc[r as usize], field.mul(c, v));
                        touched.push(r);
                    }
                }
                collect_nonzero(&mut acc, &mut touched)
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn sub(&self, field: &Field, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(field, field.neg(1), other)
    }

    pub fn scale(&self, field: &Field, c: u32) -> SparseMatrix {
        SparseMatrix::zeros(self.rows, self.cols).add_scaled(field, c, self)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                columns[r as usize].push((c as u32, v));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.triplets() {
            d.set(r, c, v);
        }
        d
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let shift = self.rows as u32;
        let mut columns = self.columns.clone();
        columns.extend(
            other
                .columns
                .iter()
                .map(|col| col.iter().map(|&(r, v)| (r + shift, v)).collect()),
        );
        SparseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols + other.cols,
            columns,
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(16)])?;
        }
        Ok(())
    }
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        DenseMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, field: &Field, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a != 0 {
                    let (src, dst) = (other.row(k).to_vec(), out.row_mut(r));
                    field.axpy(dst, a, &src);
                }
            }
        }
        out
    }

    pub fn apply(&self, field: &Field, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect()
    }

    /// `self + c * I`.
    pub fn add_scalar(&mut self, field: &Field, c: u32) {
        for i in 0..self.rows.min(self.cols) {
            let v = self.get(i, i);
            self.set(i, i, field.add(v, c));
        }
    }

    pub fn add_scaled(&mut self, field: &Field, c: u32, other: &DenseMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        field.axpy(&mut self.data, c, &other.data);
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(found) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if found != r {
                for k in 0..self.cols {
                    self.data.swap(found * self.cols + k, r * self.cols + k);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("nonzero pivot");
            field.scale_in_place(self.row_mut(r), inv);
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let f = self.get(i, c);
                    if f != 0 {
                        field.axpy(self.row_mut(i), field.neg(f), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self, field: &Field) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![0u32; self.cols];
                x[f] = 1;
                for (r, &c) in pivots.iter().enumerate() {
                    x[c] = field.neg(m.get(r, f));
                }
                x
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients low-to-high,
    /// via reduction to upper Hessenberg form.
    pub fn charpoly(&self, field: &Field) -> Vec<u32> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
                continue;
            };
            if piv != j + 1 {
                for c in 0..n {
                    let (a, b) = (h.get(piv, c), h.get(j + 1, c));
                    h.set(piv, c, b);
                    h.set(j + 1, c, a);
                }
                for r in 0..n {
                    let (a, b) = (h.get(r, piv), h.get(r, j + 1));
                    h.set(r, piv, b);
                    h.set(r, j + 1, a);
                }
            }
            let inv = field.inv(h.get(j + 1, j)).expect("pivot is nonzero");
            for k in j + 2..n {
                let u = field.mul(h.get(k, j), inv);
                if u == 0 {
                    continue;
                }
                let src = h.row(j + 1).to_vec();
                field.axpy(h.row_mut(k), field.neg(u), &src);
                for r in 0..n {
                    let v = field.add(h.get(r, j + 1), field.mul(u, h.get(r, k)));
                    h.set(r, j + 1, v);
                }
            }
        }
        // polys[m] = charpoly of the leading m×m block.
        let mut polys: Vec<Vec<u32>> = vec![vec![1]];
        for m in 1..=n {
            let d = h.get(m - 1, m - 1);
            let prev = &polys[m - 1];
            let mut next = vec![0u32; m + 1];
            for (k, &c) in prev.iter().enumerate() {
                next[k + 1] = field.add(next[k + 1], c);
                next[k] = field.sub(next[k], field.mul(d, c));
            }
            let mut prod = 1u32;
            for i in 1..m {
                prod = field.mul(prod, h.get(m - i, m - i - 1));
                if prod == 0 {
                    break;
                }
                let coef = field.mul(h.get(m - i - 1, m - 1), prod);
                if coef == 0 {
                    continue;
                }
                for (k, &c) in polys[m - i - 1].iter().enumerate() {
                    next[k] = field.sub(next[k], field.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().expect("at least the empty block")
    }
}

/// Evaluates a polynomial given low-to-high.
pub fn poly_eval(field: &Field, coeffs: &[u32], x: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, x), c))
}

/// A subspace of `F^n` held as a reduced row echelon basis.
#[derive(Clone)]
pub struct Subspace {
    field: Field,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.n)
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.dim() == other.dim() && self.contains_subspace(other)
    }
}

impl Subspace {
    pub fn zero(field: &Field, n: usize) -> Self {
        Subspace {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, n: usize) -> Self {
        let mut s = Self::zero(field, n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            s.insert(e);
        }
        s
    }

    pub fn spanned_by<I: IntoIterator<Item = Vec<u32>>>(field: &Field, n: usize, vectors: I) -> Self {
        let mut s = Self::zero(field, n);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Echelon basis rows, each with a leading 1 at the matching pivot.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace in place; the result is zero exactly
    /// when `v` lies in the subspace.
    pub fn reduce(&self, v: &mut [u32]) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = v[c];
            if x != 0 {
                self.field.axpy(v, self.field.neg(x), row);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.n);
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[c]).expect("nonzero");
        self.field.scale_in_place(&mut v, inv);
        for row in self.rows.iter_mut() {
            let x = row[c];
            if x != 0 {
                self.field.axpy(row, self.field.neg(x), &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// `{u : u · v = 0 for every v in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(&self.field, self.n);
        }
        let m = DenseMatrix::from_rows(self.n, &self.rows);
        Subspace::spanned_by(&self.field, self.n, m.nullspace(&self.field))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

/// Incremental Gaussian elimination on sparse rows, for kernels of large,
/// sparse constraint systems.
pub struct SparseEchelon {
    field: Field,
    n: usize,
    rows: Vec<Vec<(usize, u32)>>,
    pivot_row: Vec<Option<usize>>,
}

impl SparseEchelon {
    pub fn new(field: &Field, n: usize) -> Self {
        SparseEchelon {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivot_row: vec![None; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Adds a constraint row; returns whether the rank grew.
    pub fn add_row<I: IntoIterator<Item = (usize, u32)>>(&mut self, entries: I) -> bool {
        let f = &self.field;
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for (c, v) in entries {
            if v == 0 {
                continue;
            }
            let e = acc.entry(c).or_insert(0);
            *e = f.add(*e, v);
            if *e == 0 {
                acc.remove(&c);
            }
        }
        let mut cursor = 0;
        loop {
            let next = acc
                .range(cursor..)
                .find(|(c, _)| self.pivot_row[**c].is_some())
                .map(|(&c, &v)| (c, v));
            let Some((c, v)) = next else { break };
            let factor = f.neg(v);
            let row = &self.rows[self.pivot_row[c].expect("pivot")];
            for &(col, val) in row {
                let e = acc.entry(col).or_insert(0);
                *e = f.add(*e, f.mul(factor, val));
                if *e == 0 {
                    acc.remove(&col);
                }
            }
            cursor = c + 1;
        }
        let Some((&lead, &lv)) = acc.iter().next() else {
            return false;
        };
        let inv = f.inv(lv).expect("nonzero");
        let row: Vec<(usize, u32)> = acc.into_iter().map(|(c, v)| (c, f.mul(v, inv))).collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Basis of the solution space of all rows added so far.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let mut pivot_cols: Vec<usize> = (0..self.n).filter(|&c| self.pivot_row[c].is_some()).collect();
        pivot_cols.reverse();
        (0..self.n)
            .filter(|&c| self.pivot_row[c].is_none())
            .map(|free| {
                let mut x = vec![0u32; self.n];
                x[free] = 1;
                for &c in &pivot_cols {
                    let row = &self.rows[self.pivot_row[c].expect("pivot")];
                    let s = row
                        .iter()
                        .filter(|&&(j, _)| j != c)
                        .fold(0, |acc, &(j, v)| f.add(acc, f.mul(v, x[j])));
                    x[c] = f.neg(s);
                }
                x
            })
            .collect()
    }
}
