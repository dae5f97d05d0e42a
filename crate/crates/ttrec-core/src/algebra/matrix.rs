use alloc::vec::Vec;
use core::fmt;

use super::rational::Q;
use super::ring::{Field, Ring};
use crate::{Error, Result};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data size");
        Matrix { rows, cols, data }
    }
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }
    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Matrix { rows, cols, data: alloc::vec![v; rows * cols] }
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }
    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }
    pub fn entries(&self) -> &[T] {
        &self.data
    }
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }
    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
    pub fn try_map<U: Clone>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }
    pub fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let mut data = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != skip_r && j != skip_c {
                    data.push(self.get(i, j).clone());
                }
            }
        }
        Matrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn identity(n: usize, one: &T) -> Self {
        let z = one.zero_like();
        let mut m = Self::filled(n, n, z);
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }
    pub fn zeros_like(&self) -> Self {
        self.map(|a| a.zero_like())
    }
    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|a| a.vanishes())
    }
    pub fn mat_add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect() }
    }
    pub fn mat_sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect() }
    }
    pub fn mat_mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut data = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc: Option<T> = None;
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = o.get(k, j);
                    if a.vanishes() || b.vanishes() {
                        continue;
                    }
                    let t = a.times(b);
                    acc = Some(match acc {
                        None => t,
                        Some(s) => s.plus(&t),
                    });
                }
                data.push(acc.unwrap_or_else(|| self.data[0].zero_like()));
            }
        }
        Matrix { rows: self.rows, cols: o.cols, data }
    }
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                let mut acc = v[0].zero_like();
                for k in 0..self.cols {
                    acc = acc.plus(&self.get(i, k).times(&v[k]));
                }
                acc
            })
            .collect()
    }
    pub fn scale(&self, c: &Q) -> Self {
        self.map(|a| a.scaled(c))
    }
    pub fn scale_by(&self, c: &T) -> Self {
        self.map(|a| c.times(a))
    }
    pub fn neg(&self) -> Self {
        self.map(|a| a.negated())
    }
    pub fn trace(&self) -> T {
        let mut acc = self.data[0].zero_like();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.plus(self.get(i, i));
        }
        acc
    }
    pub fn commutator(&self, o: &Self) -> Self {
        self.mat_mul(o).mat_sub(&o.mat_mul(self))
    }
    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }
    /// Determinant by cofactor expansion (exact over any commutative ring; small sizes).
    pub fn det_expand(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        match n {
            0 => panic!("empty determinant"),
            1 => self.data[0].clone(),
            2 => self.get(0, 0).times(self.get(1, 1)).minus(&self.get(0, 1).times(self.get(1, 0))),
            _ => {
                let mut acc = self.data[0].zero_like();
                for j in 0..n {
                    if self.get(0, j).vanishes() {
                        continue;
                    }
                    let t = self.get(0, j).times(&self.minor(0, j).det_expand());
                    acc = if j % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
                }
                acc
            }
        }
    }
    /// Adjugate by cofactors.
    pub fn adjugate(&self) -> Self {
        let n = self.rows;
        if n == 1 {
            return Self::identity(1, &self.data[0].one_like());
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det_expand();
                data.push(if (i + j) % 2 == 0 { c } else { c.negated() });
            }
        }
        Matrix { rows: n, cols: n, data }
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        if n <= 3 {
            return self.det_expand();
        }
        let mut a = self.clone();
        let mut det = self.data[0].one_like();
        for c in 0..n {
            let piv = (c..n).filter(|&r| !a.get(r, c).vanishes()).min_by_key(|&r| a.get(r, c).weight());
            let Some(p) = piv else { return self.data[0].zero_like() };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = det.negated();
            }
            let pv = a.get(c, c).clone();
            det = det.times(&pv);
            let inv = pv.recip().expect("nonzero pivot");
            for r in c + 1..n {
                if a.get(r, c).vanishes() {
                    continue;
                }
                let f = a.get(r, c).times(&inv);
                for j in c..n {
                    let v = a.get(r, j).minus(&f.times(a.get(c, j)));
                    a.set(r, j, v);
                }
            }
        }
        det
    }
    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let one = self.data[0].one_like();
        let mut a = self.clone();
        let mut b = Self::identity(n, &one);
        for c in 0..n {
            let p = (c..n)
                .filter(|&r| !a.get(r, c).vanishes())
                .min_by_key(|&r| a.get(r, c).weight())
                .ok_or_else(|| Error::Singular("matrix inverse".into()))?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    b.data.swap(p * n + j, c * n + j);
                }
            }
            let inv = a.get(c, c).recip().ok_or(Error::DivisionByZero)?;
            for j in 0..n {
                let v = a.get(c, j).times(&inv);
                a.set(c, j, v);
                let v = b.get(c, j).times(&inv);
                b.set(c, j, v);
            }
            for r in 0..n {
                if r == c || a.get(r, c).vanishes() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..n {
                    let v = a.get(r, j).minus(&f.times(a.get(c, j)));
                    a.set(r, j, v);
                    let v = b.get(r, j).minus(&f.times(b.get(c, j)));
                    b.set(r, j, v);
                }
            }
        }
        Ok(b)
    }
}

impl<T: Ring> Ring for Matrix<T> {
    fn zero_like(&self) -> Self {
        self.zeros_like()
    }
    fn one_like(&self) -> Self {
        Self::identity(self.rows, &self.data[0].one_like())
    }
    fn vanishes(&self) -> bool {
        self.is_zero_matrix()
    }
    fn plus(&self, o: &Self) -> Self {
        self.mat_add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.mat_sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mat_mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

pub fn qmat(rows: &[&[(i64, i64)]]) -> Matrix<Q> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(n, d)| super::rational::q(n, d)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;

    #[test]
    fn det_inverse_adjugate() {
        let m = qmat(&[&[(2, 1), (1, 1), (0, 1), (1, 1)], &[(1, 1), (3, 1), (1, 1), (0, 1)], &[(0, 1), (1, 1), (4, 1), (1, 1)], &[(1, 1), (0, 1), (1, 1), (5, 1)]]);
        assert_eq!(m.det(), m.det_expand());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mat_mul(&inv), Matrix::identity(4, &qi(1)));
        let adj = m.adjugate();
        assert_eq!(m.mat_mul(&adj), Matrix::identity(4, &qi(1)).scale(&m.det()));
        assert!(qmat(&[&[(1, 1), (1, 1)], &[(1, 1), (1, 1)]]).inverse().is_err());
    }
}
