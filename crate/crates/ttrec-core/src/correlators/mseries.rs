use alloc::vec::Vec;

use crate::algebra::linsolve::solve_linear;
use crate::algebra::{Matrix, Q, RF};
use crate::curve::SpectralCurve;
use crate::laxpair::LaxPair;
use crate::{Error, Result};

/// ℏ-expansion of M(x.e_a) = Ψ e_a Ψ⁻¹ on the sheet through z, as rational matrices in z.
#[derive(Clone, Debug, PartialEq)]
pub struct MSeries {
    /// M⁽⁰⁾, M⁽¹⁾, ...
    pub m: Vec<Matrix<RF>>,
    /// L⁽ᵏ⁾(x(z)).
    pub l: Vec<Matrix<RF>>,
    pub x: RF,
    pub xprime: RF,
    pub y: RF,
}

impl MSeries {
    pub fn k(&self) -> usize {
        self.m.len() - 1
    }
    pub fn d(&self) -> usize {
        self.m[0].rows()
    }
}

fn zero_mat(d: usize) -> Matrix<RF> {
    Matrix::filled(d, d, RF::zero())
}

/// Rank-one eigenprojector of L⁽⁰⁾ for the eigenvalue y: adj(y − L⁽⁰⁾)/Tr adj(y − L⁽⁰⁾).
pub fn m0(l0: &Matrix<RF>, y: &RF) -> Result<Matrix<RF>> {
    let d = l0.rows();
    let a = Matrix::identity(d, &RF::one()).scale_by(y).mat_sub(l0).adjugate();
    let tr = a.trace();
    if tr.is_zero() {
        return Err(Error::Singular("E_y vanishes identically: degenerate L⁽⁰⁾".into()));
    }
    let inv = tr.inv()?;
    Ok(a.map(|e| e * &inv))
}

/// d/dx of a matrix of functions of z.
fn dx(m: &Matrix<RF>, xprime: &RF) -> Result<Matrix<RF>> {
    let inv = xprime.inv()?;
    Ok(m.map(|e| &e.derivative() * &inv))
}

/// Solve [L⁽⁰⁾, X] = a and X − PX − XP = b for X.
fn solve_order(l0: &Matrix<RF>, p: &Matrix<RF>, a: &Matrix<RF>, b: &Matrix<RF>) -> Result<Matrix<RF>> {
    let d = l0.rows();
    for m in 0..d {
        let mut pw = Matrix::identity(d, &RF::one());
        for _ in 0..m {
            pw = pw.mat_mul(l0);
        }
        if !a.mat_mul(&pw).trace().is_zero() {
            return Err(Error::Check(alloc::format!("commutator equation not solvable: Tr(A L0^{m}) ≠ 0")));
        }
    }
    let n = d * d;
    let mut rows = Vec::with_capacity(2 * n);
    let mut rhs = Vec::with_capacity(2 * n);
    let idx = |i: usize, j: usize| i * d + j;
    for i in 0..d {
        for j in 0..d {
            let mut r = alloc::vec![RF::zero(); n];
            for m in 0..d {
                r[idx(m, j)] = &r[idx(m, j)] + l0.get(i, m);
                r[idx(i, m)] = &r[idx(i, m)] - l0.get(m, j);
            }
            rows.push(r);
            rhs.push(a.get(i, j).clone());
        }
    }
    for i in 0..d {
        for j in 0..d {
            let mut r = alloc::vec![RF::zero(); n];
            r[idx(i, j)] = RF::one();
            for m in 0..d {
                r[idx(m, j)] = &r[idx(m, j)] - p.get(i, m);
                r[idx(i, m)] = &r[idx(i, m)] - p.get(m, j);
            }
            rows.push(r);
            rhs.push(b.get(i, j).clone());
        }
    }
    let sol = solve_linear(&Matrix::from_rows(rows), &rhs)?;
    if !sol.is_unique() {
        return Err(Error::Singular("commutant of L⁽⁰⁾ has dimension above d".into()));
    }
    Ok(Matrix::new(d, d, sol.particular))
}

/// Order-by-order solution of ℏ∂ₓM = [L, M], M² = M, Tr M = 1 with M⁽⁰⁾ the eigenprojector for y(z).
pub fn m_series(lp: &LaxPair, curve: &SpectralCurve, kmax: usize) -> Result<MSeries> {
    if kmax > lp.k {
        return Err(Error::Invalid(alloc::format!("order {kmax} beyond the Lax truncation {}", lp.k)));
    }
    let d = lp.d;
    let l = lp.l_pulled_back(&curve.x, kmax + 1);
    let xprime = curve.xprime();
    let p = m0(&l[0], &curve.y)?;
    let mut m = alloc::vec![p.clone()];
    for k in 1..=kmax {
        let mut a = dx(&m[k - 1], &xprime)?;
        for j in 1..=k {
            a = a.mat_sub(&l[j].commutator(&m[k - j]));
        }
        let mut b = zero_mat(d);
        for j in 1..k {
            b = b.mat_add(&m[j].mat_mul(&m[k - j]));
        }
        m.push(solve_order(&l[0], &p, &a, &b)?);
    }
    Ok(MSeries { m, l, x: curve.x.clone(), xprime, y: curve.y.clone() })
}

/// Exact identity checks on an M-series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MInvariants {
    pub projector: bool,
    pub trace: bool,
    pub ode: bool,
    /// Orders k whose ODE residual is nonzero.
    pub failures: Vec<usize>,
}

impl MInvariants {
    pub fn passed(&self) -> bool {
        self.projector && self.trace && self.ode
    }
}

/// Σ_l M⁽ˡ⁾M⁽ᵏ⁻ˡ⁾ = M⁽ᵏ⁾, Tr M⁽ᵏ⁾ = δ_{k0}, and ∂ₓM⁽ᵏ⁻¹⁾ = Σ_l [L⁽ˡ⁾, M⁽ᵏ⁻ˡ⁾] as identities in ℚ(z).
pub fn m_invariants(ms: &MSeries) -> Result<MInvariants> {
    let d = ms.d();
    let mut out = MInvariants { projector: true, trace: true, ode: true, failures: Vec::new() };
    for k in 0..=ms.k() {
        let mut sq = zero_mat(d);
        for j in 0..=k {
            sq = sq.mat_add(&ms.m[j].mat_mul(&ms.m[k - j]));
        }
        if sq != ms.m[k] {
            out.projector = false;
            out.failures.push(k);
        }
        let tr = ms.m[k].trace();
        if tr != if k == 0 { RF::one() } else { RF::zero() } {
            out.trace = false;
            out.failures.push(k);
        }
        let mut ode = zero_mat(d);
        for j in 0..=k.min(ms.l.len() - 1) {
            ode = ode.mat_add(&ms.l[j].commutator(&ms.m[k - j]));
        }
        if k > 0 {
            ode = ode.mat_sub(&dx(&ms.m[k - 1], &ms.xprime)?);
        }
        if !ode.is_zero_matrix() {
            out.ode = false;
            out.failures.push(k);
        }
    }
    out.failures.sort();
    out.failures.dedup();
    Ok(out)
}

/// Σ_a M(x.e_a) over the fiber of x(z0): Id at order 0 and 0 beyond.
pub fn completeness(ms: &MSeries, fiber: &[Q]) -> Result<Vec<Matrix<Q>>> {
    let d = ms.d();
    (0..=ms.k())
        .map(|k| {
            let mut acc = Matrix::filled(d, d, Q::from_integer(0.into()));
            for z in fiber {
                acc = acc.mat_add(&eval_matrix(&ms.m[k], z)?);
            }
            Ok(acc)
        })
        .collect()
}

pub fn eval_matrix(m: &Matrix<RF>, z: &Q) -> Result<Matrix<Q>> {
    m.try_map(|e| e.eval(z).ok_or_else(|| Error::Singular(alloc::format!("pole at z = {}", crate::algebra::rational::fmt_q(z)))))
}
