//! Dense and sparse exact matrices over [`Q`].

use std::fmt;

use serde::Serialize;

use crate::rational::Q;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Q::from_int(x)).collect()).collect())
    }

    pub fn diagonal(d: &[Q]) -> Matrix {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.data[i * d.len() + i] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Q] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                self.row(r).iter().enumerate().all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
            })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Q::is_integer)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| self.row(r).iter().enumerate().all(|(c, x)| r == c || x.is_zero()))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Dense product, skipping zero entries of `self`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self * s` for sparse `s`.
    pub fn mul_sparse(&self, s: &SparseMatrix) -> Matrix {
        assert_eq!(self.cols, s.rows);
        let mut out = Matrix::zeros(self.rows, s.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for (c, b) in &s.entries[k] {
                    let o = &mut out.data[r * s.cols + c];
                    *o += &(a * b);
                }
            }
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.axpy_row(r, col, &f);
                    inv.axpy_row(r, col, &f);
                }
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Q::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det = &det * &p;
            for r in col + 1..n {
                if !a.get(r, col).is_zero() {
                    let f = a.get(r, col) / &p;
                    a.axpy_row(r, col, &f);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Q) {
        for x in self.row_mut(r) {
            *x = &*x * s;
        }
    }

    /// row[r] -= f * row[src]
    fn axpy_row(&mut self, r: usize, src: usize, f: &Q) {
        for c in 0..self.cols {
            let v = self.get(src, c);
            if !v.is_zero() {
                let t = f * v;
                self.data[r * self.cols + c] -= &t;
            }
        }
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(Q::to_string).collect()).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(Q::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_string_rows().serialize(s)
    }
}

/// Row-compressed sparse matrix; each row keeps its entries sorted by column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, entries: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix { rows: n, cols: n, entries: (0..n).map(|i| vec![(i, Q::one())]).collect() }
    }

    pub fn diagonal(d: Vec<Q>) -> SparseMatrix {
        let n = d.len();
        SparseMatrix {
            rows: n,
            cols: n,
            entries: d.into_iter().enumerate().map(|(i, x)| if x.is_zero() { vec![] } else { vec![(i, x)] }).collect(),
        }
    }

    pub fn from_dense(m: &Matrix) -> SparseMatrix {
        SparseMatrix {
            rows: m.rows,
            cols: m.cols,
            entries: (0..m.rows)
                .map(|r| m.row(r).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect())
                .collect(),
        }
    }

    pub fn from_triplets(rows: usize, cols: usize, mut t: Vec<(usize, usize, Q)>) -> SparseMatrix {
        t.sort_by_key(|(r, c, _)| (*r, *c));
        let mut m = SparseMatrix::zeros(rows, cols);
        for (r, c, x) in t {
            if x.is_zero() {
                continue;
            }
            match m.entries[r].last_mut() {
                Some((lc, lx)) if *lc == c => *lx += &x,
                _ => m.entries[r].push((c, x)),
            }
        }
        for row in &mut m.entries {
            row.retain(|(_, x)| !x.is_zero());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, Q)] {
        &self.entries[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        match self.entries[r].binary_search_by_key(&c, |(cc, _)| *cc) {
            Ok(i) => self.entries[r][i].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|(_, x)| x.is_integer())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.entries.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, *c, x)))
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, c, x) in self.iter() {
            m.set(r, c, x.clone());
        }
        m
    }

    pub fn scale(&self, s: &Q) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|row| row.iter().map(|(c, x)| (*c, x * s)).collect()).collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut entries = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let (a, b) = (&self.entries[r], &other.entries[r]);
            let mut row = Vec::with_capacity(a.len() + b.len());
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                    row.push(a[i].clone());
                    i += 1;
                } else if i == a.len() || b[j].0 < a[i].0 {
                    row.push(b[j].clone());
                    j += 1;
                } else {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        row.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
            entries.push(row);
        }
        SparseMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.scale(&Q::from_int(-1)))
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut acc: Vec<Option<Q>> = vec![None; other.cols];
        let mut touched = Vec::new();
        let mut entries = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            for (k, a) in &self.entries[r] {
                for (c, b) in &other.entries[*k] {
                    let p = a * b;
                    match &mut acc[*c] {
                        Some(x) => *x += &p,
                        slot @ None => {
                            *slot = Some(p);
                            touched.push(*c);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut row = Vec::with_capacity(touched.len());
            for &c in &touched {
                let x = acc[c].take().unwrap();
                if !x.is_zero() {
                    row.push((c, x));
                }
            }
            touched.clear();
            entries.push(row);
        }
        SparseMatrix { rows: self.rows, cols: other.cols, entries }
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        self.entries
            .iter()
            .map(|row| {
                let mut acc = Q::zero();
                for (c, x) in row {
                    if !v[*c].is_zero() {
                        acc += &(x * &v[*c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self * m` for dense `m`.
    pub fn mul_dense(&self, m: &Matrix) -> Matrix {
        assert_eq!(self.cols, m.rows);
        let mut out = Matrix::zeros(self.rows, m.cols);
        for r in 0..self.rows {
            for (k, a) in &self.entries[r] {
                let mrow = m.row(*k);
                let orow = out.row_mut(r);
                for (o, b) in orow.iter_mut().zip(mrow) {
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = vec![Vec::new(); self.cols];
        for (r, c, x) in self.iter() {
            t[c].push((r, x.clone()));
        }
        SparseMatrix { rows: self.cols, cols: self.rows, entries: t }
    }

    /// Reads `(r, c)` ratios of `self` against `base`; `Some(k)` iff `self == k * base`.
    pub fn ratio_to(&self, base: &SparseMatrix) -> Option<Q> {
        let (r, c, b) = base.iter().next()?;
        let k = &self.get(r, c) / b;
        if base.scale(&k) == *self {
            Some(k)
        } else {
            None
        }
    }
}

/// Rank and a maximal set of linearly independent columns (greedy, left to right).
pub fn independent_columns(m: &Matrix) -> Vec<usize> {
    let mut a = m.clone();
    let mut chosen = Vec::new();
    let mut prow = 0;
    for col in 0..a.cols {
        if prow == a.rows {
            break;
        }
        let Some(p) = (prow..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(p, prow);
        let pv = a.get(prow, col).clone();
        for r in prow + 1..a.rows {
            if !a.get(r, col).is_zero() {
                let f = a.get(r, col) / &pv;
                a.axpy_row(r, prow, &f);
            }
        }
        chosen.push(col);
        prow += 1;
    }
    chosen
}

pub fn rank(m: &Matrix) -> usize {
    independent_columns(m).len()
}

/// Solves `a * x = b` for full-column-rank `a`; `None` when inconsistent.
pub fn solve_full_column_rank(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(a.rows, b.len());
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + 1);
    for r in 0..a.rows {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, b[r].clone());
    }
    let mut prow = 0;
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let p = (prow..aug.rows).find(|&r| !aug.get(r, col).is_zero())?;
        aug.swap_rows(p, prow);
        let inv = aug.get(prow, col).recip();
        aug.scale_row(prow, &inv);
        for r in 0..aug.rows {
            if r != prow && !aug.get(r, col).is_zero() {
                let f = aug.get(r, col).clone();
                aug.axpy_row(r, prow, &f);
            }
        }
        pivots.push(prow);
        prow += 1;
    }
    if (prow..aug.rows).any(|r| !aug.get(r, n).is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| aug.get(r, n).clone()).collect())
}

pub mod integer {
    //! Integer Hermite and Smith normal forms.

    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    use crate::rational::Q;

    /// Row-style Hermite normal form of the lattice spanned by `gens` (rows).
    ///
    /// Returns the nonzero HNF rows: leading entries positive, strictly
    /// increasing pivot columns, entries above each pivot reduced into
    /// `[0, pivot)`.
    pub fn hnf_rows(gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = gens.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
        let Some(ncols) = gens.first().map(Vec::len) else {
            return rows;
        };
        let mut out: Vec<Vec<BigInt>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for col in 0..ncols {
            // gcd-reduce column `col` across the remaining rows
            loop {
                let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
                if nz.len() <= 1 {
                    break;
                }
                let m = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
                let pivot = rows[m].clone();
                for &i in &nz {
                    if i == m {
                        continue;
                    }
                    let q = rows[i][col].div_floor(&pivot[col]);
                    for (x, p) in rows[i].iter_mut().zip(&pivot) {
                        *x -= &q * p;
                    }
                }
                rows.retain(|r| r.iter().any(|x| !x.is_zero()));
            }
            if let Some(i) = rows.iter().position(|r| !r[col].is_zero()) {
                let mut r = rows.remove(i);
                if r[col].is_negative() {
                    for x in r.iter_mut() {
                        *x = -&*x;
                    }
                }
                out.push(r);
                pivots.push(col);
            }
        }
        // reduce above pivots
        for k in 0..out.len() {
            let col = pivots[k];
            let p = out[k][col].clone();
            for j in 0..k {
                let q = out[j][col].div_floor(&p);
                if !q.is_zero() {
                    let pk = out[k].clone();
                    for (x, y) in out[j].iter_mut().zip(&pk) {
                        *x -= &q * y;
                    }
                }
            }
        }
        out
    }

    /// Pivot column of each HNF row.
    pub fn pivot_columns(hnf: &[Vec<BigInt>]) -> Vec<usize> {
        hnf.iter().map(|r| r.iter().position(|x| !x.is_zero()).expect("zero row in HNF")).collect()
    }

    /// Solves `v = sum c_k hnf[k]` with rational `v`; `Some(c)` iff all `c_k` are integers.
    pub fn hnf_coordinates(hnf: &[Vec<BigInt>], v: &[Q]) -> Option<Vec<BigInt>> {
        let pivots = pivot_columns(hnf);
        let mut rest: Vec<Q> = v.to_vec();
        let mut coords = Vec::with_capacity(hnf.len());
        for (row, &pc) in hnf.iter().zip(&pivots) {
            // columns before pc are already cleared
            let c = &rest[pc] / &Q::from_bigint(row[pc].clone());
            if !c.is_integer() {
                return None;
            }
            let ci = c.numer();
            if !ci.is_zero() {
                for (x, y) in rest.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &Q::from_bigint(&ci * y);
                    }
                }
            }
            coords.push(ci);
        }
        if rest.iter().all(Q::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    /// Invariant factors (diagonal of the Smith normal form), including ones.
    pub fn smith_invariants(m: &[Vec<BigInt>]) -> Vec<BigInt> {
        let mut a: Vec<Vec<BigInt>> = m.to_vec();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut diag = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            // choose the smallest nonzero entry in the trailing block as pivot
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if !a[r][c].is_zero() && best.is_none_or(|(br, bc)| a[r][c].abs() < a[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else { break };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            let mut done = false;
            while !done {
                done = true;
                for r in t + 1..rows {
                    let q = a[r][t].div_floor(&a[t][t]);
                    if !q.is_zero() {
                        for c in t..cols {
                            let v = &q * &a[t][c];
                            a[r][c] -= v;
                        }
                    }
                    if !a[r][t].is_zero() {
                        a.swap(t, r);
                        done = false;
                    }
                }
                for c in t + 1..cols {
                    let q = a[t][c].div_floor(&a[t][t]);
                    if !q.is_zero() {
                        for r in t..rows {
                            let v = &q * &a[r][t];
                            a[r][c] -= v;
                        }
                    }
                    if !a[t][c].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, c);
                        }
                        done = false;
                    }
                }
                if done {
                    // divisibility: pivot must divide the whole trailing block
                    'outer: for r in t + 1..rows {
                        for c in t + 1..cols {
                            if !(&a[r][c] % &a[t][t]).is_zero() {
                                for cc in t..cols {
                                    let v = a[r][cc].clone();
                                    a[t][cc] += v;
                                }
                                done = false;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            diag.push(a[t][t].abs());
            t += 1;
        }
        diag
    }

    pub fn is_unit(x: &BigInt) -> bool {
        x.abs().is_one()
    }
}
