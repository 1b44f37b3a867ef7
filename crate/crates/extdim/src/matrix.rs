//! Dense exact matrices over the ground field, column-vector convention.
//!
//! All the homological machinery reduces to kernels, images and solves of
//! these matrices. Everything is plain Gaussian elimination; sizes stay
//! small enough that fraction-free tricks are not worth their complexity.

use crate::scalar::{FieldSpec, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>, // row-major
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        Mat { rows: r, cols: c, field, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, field, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }
            }))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self[(i, j)].add(&rhs[(i, j)]))
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self[(i, j)].sub(&rhs[(i, j)]))
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self[(i, j)].neg())
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self[(i, j)].mul(c))
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self[(i, j)].mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Horizontal concatenation [self | rhs].
    pub fn hcat(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.rows, rhs.rows);
        Mat::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { rhs[(i, j - self.cols)].clone() }
        })
    }

    /// Vertical concatenation [self; rhs].
    pub fn vcat(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.cols);
        Mat::from_fn(self.field, self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows { self[(i, j)].clone() } else { rhs[(i - self.rows, j)].clone() }
        })
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, rhs: &Mat) -> Mat {
        Mat::from_fn(self.field, self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                rhs[(i - self.rows, j - self.cols)].clone()
            } else {
                self.field.zero()
            }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let t = m[(r, j)].mul(&f);
                        m[(i, j)] = m[(i, j)].sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as columns of the returned matrix.
    pub fn kernel(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(self.field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out[(fc, k)] = self.field.one();
            for (pr, &pc) in pivots.iter().enumerate() {
                out[(pc, k)] = r[(pr, fc)].neg();
            }
        }
        out
    }

    /// Basis of the column space: the pivot columns of self.
    pub fn image(&self) -> Mat {
        let (_, pivots) = self.transpose().transpose().rref();
        // pivots of self's rref identify independent columns of self
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, &pivots)
    }

    /// Solve self * x = b; None if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let bm = Mat::from_fn(self.field, self.rows, 1, |i, _| b[i].clone());
        let aug = self.hcat(&bm);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(pr, self.cols)].clone();
        }
        Some(x)
    }

    /// Solve self * X = B columnwise; None if any column is inconsistent.
    pub fn solve_mat(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.col(j))?);
        }
        Some(Mat::from_fn(self.field, self.cols, b.cols, |i, j| cols[j][i].clone()))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hcat(&Mat::identity(self.field, self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let cols: Vec<usize> = (self.cols..2 * self.cols).collect();
        let all: Vec<usize> = (0..self.rows).collect();
        Some(r.submatrix(&all, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn pow(&self, mut e: usize) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Characteristic polynomial coefficients [c_0, ..., c_n] with
    /// p(x) = sum c_i x^i, monic. Faddeev-LeVerrier over Q; over F_p the
    /// division by k is invalid, so use expansion by Hessenberg recurrence.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return vec![f.one()];
        }
        // Hessenberg-free Leverrier works only in char 0; use the generic
        // column-by-column determinant expansion of xI - A via the
        // Samuelson-Berkowitz algorithm, division-free, valid any field.
        berkowitz(self)
    }
}

/// Samuelson-Berkowitz division-free characteristic polynomial.
/// Returns coefficients low-to-high of det(xI - A), monic of degree n.
fn berkowitz(a: &Mat) -> Vec<Scalar> {
    let n = a.rows;
    let f = a.field;
    // vector of current poly coeffs, degree grows by one per step
    let mut poly = vec![f.one()]; // for 0x0 matrix
    for k in 0..n {
        // principal (k+1)x(k+1) submatrix
        let idx: Vec<usize> = (0..=k).collect();
        let sub = a.submatrix(&idx, &idx);
        let m = k + 1;
        // Toeplitz column: [1, -a_kk, -(R*c), -(R*M*c), ...]
        // where R is the k-th row (first k entries), c the k-th column.
        let rk: Vec<Scalar> = (0..k).map(|j| sub[(k, j)].clone()).collect();
        let ck: Vec<Scalar> = (0..k).map(|i| sub[(i, k)].clone()).collect();
        let minor = sub.submatrix(&(0..k).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>());
        let mut t = Vec::with_capacity(m + 1);
        t.push(f.one());
        t.push(sub[(k, k)].neg());
        let mut vec_c = ck.clone();
        for _ in 2..=m {
            // r . vec_c
            let mut dot = f.zero();
            for i in 0..k {
                dot = dot.add(&rk[i].mul(&vec_c[i]));
            }
            t.push(dot.neg());
            vec_c = minor.apply(&vec_c);
        }
        // multiply poly (len m) by the Toeplitz structure: new_poly[i] =
        // sum_j t[i - j] * poly[j], producing length m+1, stored high-to-low.
        // Work with coefficients ordered high-to-low (c_n first).
        let mut newp = vec![f.zero(); poly.len() + 1];
        for (i, np) in newp.iter_mut().enumerate() {
            for (j, pj) in poly.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    *np = np.add(&t[i - j].mul(pj));
                }
            }
        }
        poly = newp;
    }
    // poly is high-to-low (leading coefficient first); reverse to low-to-high
    poly.reverse();
    poly
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_literal()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Subspace utilities: a subspace of k^n is held as a matrix whose columns
/// form a basis.
pub mod subspace {
    use super::*;

    /// Coordinates of v in the column basis B, if v lies in the span.
    pub fn coords(basis: &Mat, v: &[Scalar]) -> Option<Vec<Scalar>> {
        basis.solve(v)
    }

    /// Intersection of two column-span subspaces of the same ambient space.
    pub fn intersect(a: &Mat, b: &Mat) -> Mat {
        assert_eq!(a.rows, b.rows);
        // solutions of [A | -B] (x; y) = 0 give Ax = By in the intersection
        let sys = a.hcat(&b.neg());
        let ker = sys.kernel();
        let xpart = ker.submatrix(&(0..a.cols).collect::<Vec<_>>(), &(0..ker.cols).collect::<Vec<_>>());
        a.mul(&xpart).image()
    }

    /// Does the span of `a` contain v?
    pub fn contains(a: &Mat, v: &[Scalar]) -> bool {
        coords(a, v).is_some()
    }

    /// A complement basis: columns of `inside` extended to a basis of k^n,
    /// returning only the new columns.
    pub fn complement(inside: &Mat) -> Mat {
        let n = inside.rows;
        let f = inside.field;
        let mut cur = inside.clone();
        let mut extra: Vec<usize> = Vec::new();
        for j in 0..n {
            let mut e = vec![f.zero(); n];
            e[j] = f.one();
            if !contains(&cur, &e) {
                let em = Mat::from_fn(f, n, 1, |i, _| e[i].clone());
                cur = cur.hcat(&em);
                extra.push(j);
            }
        }
        Mat::from_fn(f, n, extra.len(), |i, k| if extra[k] == i { f.one() } else { f.zero() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn m(rows: Vec<Vec<i64>>) -> Mat {
        let f = q();
        Mat::from_rows(f, rows.into_iter().map(|r| r.into_iter().map(|x| f.from_i64(x)).collect()).collect())
    }

    #[test]
    fn rref_rank_kernel() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.cols, 1);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let x = a.solve(&[q().from_i64(3), q().from_i64(2)]).unwrap();
        assert_eq!(x, vec![q().from_i64(1), q().from_i64(1)]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let sing = m(vec![vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn charpoly_matches_hand_computation() {
        let a = m(vec![vec![2, 1], vec![0, 3]]);
        // (x-2)(x-3) = x^2 - 5x + 6
        let cp = a.charpoly();
        let want: Vec<Scalar> = [6, -5, 1].iter().map(|&c| q().from_i64(c)).collect();
        assert_eq!(cp, want);

        let n = m(vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(n.charpoly(), [0, 0, 1].iter().map(|&c| q().from_i64(c)).collect::<Vec<_>>());
    }

    #[test]
    fn charpoly_over_f2() {
        let f = FieldSpec::Prime(2);
        let a = Mat::identity(f, 2);
        // (x-1)^2 = x^2 + 1 over F2... x^2 - 2x + 1 = x^2 + 1
        let cp = a.charpoly();
        assert_eq!(cp, vec![f.one(), f.zero(), f.one()]);
    }

    #[test]
    fn image_and_intersection() {
        let a = m(vec![vec![1, 0], vec![0, 0], vec![0, 1]]);
        let b = m(vec![vec![1], vec![0], vec![0]]);
        let i = subspace::intersect(&a, &b);
        assert_eq!(i.cols, 1);
        assert!(subspace::contains(&a, &i.col(0)));
        assert!(subspace::contains(&b, &i.col(0)));
    }
}
