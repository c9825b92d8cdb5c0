//! Exact linear algebra over the rationals and the integers.
//!
//! Everything here is dense and exact: representation matrices are small
//! (total dimension bounded by the number of positive roots of a rank ≤ 8
//! diagram), so `BigRational` Gaussian elimination and `BigInt` Smith normal
//! form are more than fast enough and never lose torsion.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Dense matrix over the rationals, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Self::from_fn(r, c, |i, j| rat(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        s += self.get(i, j) * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn hstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.rows, other.rows);
        QMat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { other.get(i, j - self.cols).clone() }
        })
    }

    /// Columns `cols` of `self` as a new matrix.
    pub fn select_cols(&self, cols: &[usize]) -> QMat {
        QMat::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j) - &f * self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, as columns of the returned matrix.
    pub fn kernel(&self) -> QMat {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = QMat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, Rat::one());
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, -m.get(r, fc).clone());
            }
        }
        out
    }

    /// Solve `self * x = rhs` for one particular solution.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = QMat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { rhs[i].clone() }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix by fraction-producing elimination.
    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m.get(c, c);
            let inv = m.get(c, c).recip();
            for i in c + 1..n {
                if !m.get(i, c).is_zero() {
                    let f = m.get(i, c) * &inv;
                    for j in c..n {
                        let v = m.get(i, j) - &f * m.get(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Solve `self * X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &QMat) -> Option<QMat> {
        assert_eq!(rhs.rows(), self.rows);
        let mut out = QMat::zeros(self.cols, rhs.cols());
        for j in 0..rhs.cols() {
            let col: Vec<Rat> = (0..rhs.rows()).map(|i| rhs.get(i, j).clone()).collect();
            let x = self.solve(&col)?;
            for i in 0..self.cols {
                out.set(i, j, x[i].clone());
            }
        }
        Some(out)
    }
}

/// Row-echelon model of a subspace of Q^n, supporting reduction modulo the
/// subspace and extraction of a complement.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Echelon rows with pairwise distinct pivot columns, pivot entry 1.
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_spanning(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut s = Self::new(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` modulo the subspace (eliminating all pivot coordinates).
    pub fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..self.ambient {
                    if !row[j].is_zero() {
                        v[j] = &v[j] - &f * &row[j];
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns true if it enlarged the subspace.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        // keep earlier rows reduced against the new pivot
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in 0..v.len() {
                    row[j] = &row[j] - &f * &v[j];
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates without a pivot; the corresponding standard basis vectors
    /// descend to a basis of the quotient.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
pub fn smith_diagonal(mat: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut m: Vec<Vec<BigInt>> =
        mat.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    loop {
        // find a minimal nonzero pivot in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        // clear row and column t
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = div_round(&m[i][t], &m[t][t]);
                    for j in t..cols {
                        let v = &m[i][j] - &q * &m[t][j];
                        m[i][j] = v;
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = div_round(&m[t][j], &m[t][t]);
                    for row in m.iter_mut().take(rows).skip(t) {
                        let v = &row[j] - &q * &row[t];
                        row[j] = v;
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // enforce divisibility of the rest of the block by the pivot
        let mut fixed = false;
        'outer: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    for jj in t..cols {
                        let v = &m[t][jj] + &m[i][jj];
                        m[t][jj] = v;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue; // redo elimination at the same t
        }
        diag.push(m[t][t].abs());
        t += 1;
        if t >= rows || t >= cols {
            break;
        }
    }
    diag
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest-integer division keeps entries small during elimination
    let two = BigInt::from(2);
    let (q, r) = num::Integer::div_rem(a, b);
    if &r.abs() * &two > b.abs() {
        if (r.sign() == b.sign()) || r.is_zero() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_kernel() {
        let m = QMat::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        // check M * k = 0
        for i in 0..m.rows() {
            let mut s = Rat::zero();
            for j in 0..m.cols() {
                s += m.get(i, j) * k.get(j, 0);
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = QMat::from_int_rows(&[vec![1, 1], vec![0, 1]]);
        let x = m.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let m2 = QMat::from_int_rows(&[vec![1, 1], vec![2, 2]]);
        assert!(m2.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn subspace_reduce_complement() {
        let mut s = Subspace::new(3);
        assert!(s.insert(vec![rat(1), rat(1), rat(0)]));
        assert!(s.insert(vec![rat(0), rat(2), rat(0)]));
        assert!(!s.insert(vec![rat(3), rat(5), rat(0)]));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.complement_coords(), vec![2]);
        assert!(s.contains(&[rat(5), rat(-7), rat(0)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn smith_of_known_matrices() {
        // boundary map of a hollow triangle has SNF diag (1,1)
        let d1 = vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]];
        let diag = smith_diagonal(&d1);
        assert_eq!(diag, vec![BigInt::from(1), BigInt::from(1)]);
        // torsion example: diag(2,4) ~ SNF (2,4); and a mixed one
        let m = vec![vec![2, 0], vec![0, 4]];
        assert_eq!(smith_diagonal(&m), vec![BigInt::from(2), BigInt::from(4)]);
        let m2 = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]];
        let d = smith_diagonal(&m2);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }
}
