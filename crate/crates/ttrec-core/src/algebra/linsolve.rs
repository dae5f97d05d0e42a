use alloc::vec::Vec;


use super::matrix::Matrix;
use super::poly::Poly;
use super::rf::RF;
use super::ring::Field;
use crate::{Error, Result};

/// Solution set x₀ + span(kernel) of A x = b.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<F> {
    pub particular: Vec<F>,
    pub kernel: Vec<Vec<F>>,
    pub rank: usize,
}

impl<F> Solution<F> {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Back-substitution from an echelon form over a field; `pivots[r]` is the pivot column of row r.
fn from_echelon<F: Field>(mut rows: Vec<Vec<F>>, pivots: &[usize], ncols: usize, zero: &F) -> Solution<F> {
    let rank = pivots.len();
    // normalize and clear above pivots (reduced echelon)
    for r in (0..rank).rev() {
        let pc = pivots[r];
        let inv = rows[r][pc].recip().expect("nonzero pivot");
        for j in pc..=ncols {
            if !rows[r][j].vanishes() {
                rows[r][j] = rows[r][j].times(&inv);
            }
        }
        for r2 in 0..r {
            if rows[r2][pc].vanishes() {
                continue;
            }
            let f = rows[r2][pc].clone();
            for j in pc..=ncols {
                if rows[r][j].vanishes() {
                    continue;
                }
                rows[r2][j] = rows[r2][j].minus(&f.times(&rows[r][j]));
            }
        }
    }
    let mut particular = alloc::vec![zero.clone(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        particular[pc] = rows[r][ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&fc| {
            let mut v = alloc::vec![zero.clone(); ncols];
            v[fc] = zero.one_like();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = rows[r][fc].negated();
            }
            v
        })
        .collect();
    Solution { particular, kernel, rank }
}

/// Gaussian elimination over a field with weight-minimal pivots.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Solution<F>> {
    assert_eq!(a.rows(), b.len());
    let zero = a.get(0, 0).zero_like();
    let (m, n) = (a.rows(), a.cols());
    let mut rows: Vec<Vec<F>> = (0..m)
        .map(|i| {
            let mut r = a.row(i);
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).filter(|&i| !rows[i][c].vanishes()).min_by_key(|&i| rows[i][c].weight()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip().ok_or(Error::DivisionByZero)?;
        for i in r + 1..m {
            if rows[i][c].vanishes() {
                continue;
            }
            let f = rows[i][c].times(&inv);
            for j in c..=n {
                if rows[r][j].vanishes() {
                    continue;
                }
                let v = rows[i][j].minus(&f.times(&rows[r][j]));
                rows[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].vanishes()) {
        return Err(Error::Inconsistent);
    }
    rows.truncate(r);
    Ok(from_echelon(rows, &pivots, n, &zero))
}

pub fn nullspace<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    let zero = a.get(0, 0).zero_like();
    let b = alloc::vec![zero; a.rows()];
    solve(a, &b).expect("homogeneous systems are consistent").kernel
}

/// Fraction-free elimination over ℚ[z] after clearing row denominators, then
/// back-substitution in ℚ(z).
pub fn solve_linear(a: &Matrix<RF>, b: &[RF]) -> Result<Solution<RF>> {
    assert_eq!(a.rows(), b.len());
    let (m, n) = (a.rows(), a.cols());
    let mut rows: Vec<Vec<Poly>> = (0..m)
        .map(|i| {
            let mut r = a.row(i);
            r.push(b[i].clone());
            let l = r.iter().fold(Poly::one(), |l, x| {
                let g = Poly::gcd(&l, x.den());
                &l * &x.den().exact_div(&g)
            });
            r.iter().map(|x| &x.num().clone() * &l.exact_div(x.den())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = Poly::one();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).filter(|&i| !rows[i][c].is_zero()).min_by_key(|&i| rows[i][c].deg()) else { continue };
        rows.swap(r, p);
        let pv = rows[r][c].clone();
        for i in r + 1..m {
            let f = rows[i][c].clone();
            for j in c..=n {
                let v = &(&pv * &rows[i][j]) - &(&f * &rows[r][j]);
                rows[i][j] = v.exact_div(&prev);
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Err(Error::Inconsistent);
    }
    rows.truncate(r);
    let rf_rows: Vec<Vec<RF>> = rows.into_iter().map(|row| row.into_iter().map(RF::poly).collect()).collect();
    Ok(from_echelon(rf_rows, &pivots, n, &RF::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;

    fn c(a: i64) -> RF {
        RF::constant(qi(a))
    }

    #[test]
    fn rf_examples() {
        let id = Matrix::identity(2, &RF::one());
        let b = alloc::vec![RF::z(), c(7)];
        assert_eq!(solve_linear(&id, &b).unwrap().particular, b);
        let a = Matrix::from_rows(alloc::vec![alloc::vec![RF::z(), c(0)], alloc::vec![c(0), c(1)]]);
        let z2 = &RF::z() * &RF::z();
        let s = solve_linear(&a, &[z2, c(1)]).unwrap();
        assert_eq!(s.particular, alloc::vec![RF::z(), c(1)]);
        let sing = Matrix::from_rows(alloc::vec![alloc::vec![c(1), c(1)], alloc::vec![c(1), c(1)]]);
        let s = solve_linear(&sing, &[c(0), c(0)]).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.kernel, alloc::vec![alloc::vec![c(-1), c(1)]]);
        assert_eq!(solve_linear(&sing, &[c(0), c(1)]), Err(Error::Inconsistent));
    }

    #[test]
    fn q_nullspace() {
        let a = crate::algebra::matrix::qmat(&[&[(1, 1), (2, 1), (3, 1)], &[(2, 1), (4, 1), (6, 1)]]);
        let k = nullspace(&a);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(a.mul_vec(&v).iter().all(|x| *x == qi(0)));
        }
    }
}
