//! Numeric mode: WKB recovery of Ψ from M and the exponential-formula check, in decimal floating point.
//!
//! Everything is exact over ℚ up to the path integrals. Those are done by partial fractions,
//! so only the logarithms, exponentials and square roots are rounded.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use dashu_float::DBig;
use num_traits::{Signed, Zero};

use crate::algebra::{Point, Poly, Q, RF};
use crate::correlators::MSeries;
use crate::curve::SpectralCurve;
use crate::toprec::{stable_range, TopRec};
use crate::{Error, Result};

pub type F = DBig;

pub const DEFAULT_DIGITS: usize = 50;
const GUARD: usize = 10;

fn int_f(s: &str, prec: usize) -> F {
    s.parse::<DBig>().expect("integer literal").with_precision(prec).value()
}

pub fn to_f(q: &Q, digits: usize) -> F {
    let prec = digits + GUARD;
    int_f(&q.numer().to_string(), prec) / int_f(&q.denom().to_string(), prec)
}

pub fn to_f64(x: &F) -> f64 {
    x.to_f64().value()
}

/// |x| < 10^{−(digits − 10)}.
pub fn tolerance(digits: usize) -> f64 {
    pow10(-(digits as i32 - 10))
}

fn pow10(e: i32) -> f64 {
    let mut r = 1.0;
    for _ in 0..e.unsigned_abs() {
        r = if e < 0 { r / 10.0 } else { r * 10.0 };
    }
    r
}

/// r + Σ c ln ρ with rational r, c, ρ (ρ > 0).
#[derive(Clone, Debug, PartialEq)]
pub struct PathIntegral {
    pub rational: Q,
    pub logs: Vec<(Q, Q)>,
}

impl PathIntegral {
    pub fn eval(&self, digits: usize) -> F {
        let mut acc = to_f(&self.rational, digits);
        for (c, rho) in &self.logs {
            acc += to_f(c, digits) * to_f(rho, digits).ln();
        }
        acc
    }
}

/// ∫ f dz along the polyline through `path`; f must have only rational poles, none on the path.
pub fn integrate_rf(f: &RF, path: &[Q]) -> Result<PathIntegral> {
    if path.len() < 2 {
        return Err(Error::Invalid("path needs two points".into()));
    }
    let roots = f.den().rational_roots();
    if roots.iter().map(|r| r.1).sum::<usize>() as i64 != f.den().deg() {
        return Err(Error::NonRational("poles of the integrand".into()));
    }
    let mut rest = f.clone();
    let mut polar: Vec<(Q, usize, Q)> = Vec::new();
    for (r, m) in &roots {
        let s = f.laurent_at(&Point::Finite(r.clone()), -1);
        for j in 1..=*m {
            let c = s.coeff(-(j as i64));
            if !c.is_zero() {
                rest = &rest - &RF::inv_linear_pow(r, j as u32).scale(&c);
                polar.push((r.clone(), j, c));
            }
        }
    }
    if !rest.is_polynomial() {
        return Err(Error::Check("partial fractions left a polar remainder".into()));
    }
    let p = rest.num().scale(&rest.den().lc().recip());
    let prim = Poly::new(core::iter::once(Q::zero()).chain(p.coeffs().iter().enumerate().map(|(k, c)| c / Q::from_integer((k as i64 + 1).into()))).collect());
    let mut out = PathIntegral { rational: Q::zero(), logs: Vec::new() };
    for w in path.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        for (r, _) in &roots {
            if (r >= a && r <= b) || (r <= a && r >= b) {
                return Err(Error::Singular(alloc::format!("path passes through the pole z = {r}")));
            }
        }
        out.rational += prim.eval(b) - prim.eval(a);
        for (r, j, c) in &polar {
            if *j == 1 {
                out.logs.push((c.clone(), (b - r) / (a - r)));
            } else {
                let k = Q::from_integer((1 - *j as i64).into());
                let pw = |z: &Q| num_traits::pow::Pow::pow(&(z - r), 1 - *j as i32);
                out.rational += c * (pw(b) - pw(a)) / k;
            }
        }
    }
    Ok(out)
}

/// exp(Σ_{k≥0} e_k ℏᵏ) through ℏ^{n−1}.
pub fn exp_series(e: &[F], n: usize) -> Vec<F> {
    let e0 = e[0].exp();
    let mut b: Vec<F> = Vec::with_capacity(n);
    b.push(e0.clone());
    for m in 1..n {
        let mut acc = F::ZERO;
        for k in 1..=m.min(e.len() - 1) {
            acc += e[k].clone() * b[m - k].clone() * F::from(k as u32);
        }
        b.push(acc / F::from(m as u32));
    }
    b
}

fn mul_series(a: &[F], b: &[F], n: usize) -> Vec<F> {
    (0..n)
        .map(|k| {
            let mut acc = F::ZERO;
            for l in 0..=k {
                if l < a.len() && k - l < b.len() {
                    acc += a[l].clone() * b[k - l].clone();
                }
            }
            acc
        })
        .collect()
}

/// J⁽ᵏ⁾ = x′ Σ_j (M_{1j} L_{j1})⁽ᵏ⁾ / M_{11}, k = 0..K, so that Ψ_{i,a} = M_{i1} exp(ℏ⁻¹∫ J dz).
pub fn exponent_integrand(ms: &MSeries) -> Result<Vec<RF>> {
    let kk = ms.k();
    let d = ms.d();
    let m11 = |k: usize| ms.m[k].get(0, 0).clone();
    let inv0 = m11(0).inv().map_err(|_| Error::Singular("M₁₁ vanishes identically".into()))?;
    let mut out: Vec<RF> = Vec::with_capacity(kk + 1);
    for k in 0..=kk {
        let mut nk = RF::zero();
        for l in 0..=k.min(ms.l.len() - 1) {
            for j in 0..d {
                nk = &nk + &(ms.m[k - l].get(0, j) * ms.l[l].get(j, 0));
            }
        }
        for l in 1..=k {
            nk = &nk - &(&m11(l) * &out[k - l]);
        }
        out.push(&nk * &inv0);
    }
    Ok(out.into_iter().map(|i| &i * &ms.xprime).collect())
}

fn eval_at(f: &RF, z: &Q) -> Result<Q> {
    f.eval(z).ok_or_else(|| Error::Singular(alloc::format!("singular point z = {z}")))
}

/// Column of Ψ on the sheet through the end of `path`, normalized at its start.
#[derive(Clone, Debug)]
pub struct Psi {
    pub z: Q,
    /// ∫ J⁽⁰⁾, the ℏ⁻¹ exponent.
    pub exponent: F,
    /// entries[i][k]: ℏᵏ coefficient of Ψ_{i,a} e^{−exponent/ℏ}.
    pub entries: Vec<Vec<F>>,
}

struct WkbData {
    z: Q,
    j: Vec<Q>,
    m: Vec<Vec<Q>>,
    dm: Vec<Vec<Q>>,
    e: Vec<F>,
    s: F,
}

fn wkb_data(ms: &MSeries, path: &[Q], digits: usize) -> Result<(WkbData, Vec<RF>)> {
    let jr = exponent_integrand(ms)?;
    let z = path.last().ok_or_else(|| Error::Invalid("empty path".into()))?.clone();
    if eval_at(ms.m[0].get(0, 0), &z)?.is_zero() {
        return Err(Error::Singular("M₁₁ vanishes at the endpoint".into()));
    }
    let s = integrate_rf(&jr[0], path)?.eval(digits);
    let e = jr[1..].iter().map(|f| integrate_rf(f, path).map(|p| p.eval(digits))).collect::<Result<Vec<F>>>()?;
    let j = jr.iter().map(|f| eval_at(f, &z)).collect::<Result<Vec<Q>>>()?;
    let col = |mk: &crate::algebra::Matrix<RF>, der: bool| -> Result<Vec<Q>> {
        (0..ms.d()).map(|i| if der { eval_at(&mk.get(i, 0).derivative(), &z) } else { eval_at(mk.get(i, 0), &z) }).collect()
    };
    let m = ms.m.iter().map(|mk| col(mk, false)).collect::<Result<Vec<_>>>()?;
    let dm = ms.m.iter().map(|mk| col(mk, true)).collect::<Result<Vec<_>>>()?;
    Ok((WkbData { z, j, m, dm, e, s }, jr))
}

fn columns(w: &WkbData, b: &[F], digits: usize) -> Vec<Vec<F>> {
    let d = w.m[0].len();
    (0..d)
        .map(|i| {
            let mi: Vec<F> = w.m.iter().map(|v| to_f(&v[i], digits)).collect();
            mul_series(&mi, b, b.len())
        })
        .collect()
}

/// Ψ_{i,a}(x) = M_{i1}(x.e_a) exp(ℏ⁻¹∫ Σ_j M_{1j}L_{j1}/M_{11} dx) along the z-path, through ℏ^{K−1}.
pub fn recover_psi(ms: &MSeries, path: &[Q], digits: usize) -> Result<Psi> {
    let (w, _) = wkb_data(ms, path, digits)?;
    let b = exp_series(&w.e, ms.k());
    Ok(Psi { z: w.z.clone(), entries: columns(&w, &b, digits), exponent: w.s })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PsiCheck {
    /// max_i |(ℏ∂ₓΨ − LΨ)_i| per ℏ-order, after removing e^{S/ℏ}.
    pub ode: Vec<f64>,
    /// max |(M Ψ − Ψ)_i| over orders.
    pub projector: f64,
}

/// Defects of ℏ∂ₓΨ = LΨ and MΨ = Ψ at the end of the path, orders ℏ⁰..ℏ^{k_check−1}.
pub fn psi_check(ms: &MSeries, path: &[Q], digits: usize, k_check: usize) -> Result<PsiCheck> {
    if k_check > ms.k() {
        return Err(Error::Invalid(alloc::format!("k_check {k_check} exceeds K = {}", ms.k())));
    }
    let (w, _) = wkb_data(ms, path, digits)?;
    let n = ms.k();
    let d = ms.d();
    let b = exp_series(&w.e, n);
    let c = columns(&w, &b, digits);
    let jf: Vec<F> = w.j.iter().map(|q| to_f(q, digits)).collect();
    // ∂_z B = B · Σ_{k≥0} J⁽ᵏ⁺¹⁾ ℏᵏ
    let db = mul_series(&b, &jf[1..], n);
    let xp = to_f(&eval_at(&ms.xprime, &w.z)?, digits);
        let lz: Vec<crate::algebra::Matrix<Q>> = ms.l.iter().map(|l| crate::correlators::eval_matrix(l, &w.z)).collect::<Result<_>>()?;
    let mz: Vec<crate::algebra::Matrix<Q>> = ms.m.iter().map(|m| crate::correlators::eval_matrix(m, &w.z)).collect::<Result<_>>()?;
    let mut ode = Vec::new();
    for k in 0..k_check {
        let mut worst = 0.0f64;
        for i in 0..d {
            let mut dc_prev = F::ZERO;
            if k > 0 {
                for l in 0..k {
                    dc_prev += to_f(&w.dm[l][i], digits) * b[k - 1 - l].clone() + to_f(&w.m[l][i], digits) * db[k - 1 - l].clone();
                }
            }
            let mut r = (jf[0].clone() * c[i][k].clone() + dc_prev) / xp.clone();
            for l in 0..=k.min(lz.len() - 1) {
                for j in 0..d {
                    r -= to_f(lz[l].get(i, j), digits) * c[j][k - l].clone();
                }
            }
            worst = worst.max(to_f64(&r).abs());
        }
        ode.push(worst);
    }
    let mut projector = 0.0f64;
    for k in 0..n {
        for i in 0..d {
            let mut r = -c[i][k].clone();
            for l in 0..=k {
                for j in 0..d {
                    r += to_f(mz[l].get(i, j), digits) * c[j][k - l].clone();
                }
            }
            projector = projector.max(to_f64(&r).abs());
        }
    }
    Ok(PsiCheck { ode, projector })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureRow {
    pub z: Q,
    pub zp: Q,
    pub order: i64,
    pub lhs: String,
    pub rhs: String,
    pub diff: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureReport {
    pub digits: usize,
    pub tolerance: f64,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.diff < self.tolerance)
    }
}

/// Exponential formula on one sheet pair: (Ψ(x′)⁻¹Ψ(x)/(x − x′))√(dx dx′) against
/// e^{ℏ⁻¹∫ω₀,₁}/E(z, z′) · exp Σ ℏ^{2g−2+n}/n! ∫…∫ω_{g,n}, both integrated from z′ to z.
/// Compares the ℏ⁻¹ exponent and the coefficients of ℏ⁰..ℏ^{max_order}.
pub fn conjecture_check(curve: &SpectralCurve, tr: &mut TopRec, ms: &MSeries, pairs: &[(Q, Q)], max_order: usize, digits: usize) -> Result<ConjectureReport> {
    if ms.k() < max_order + 1 {
        return Err(Error::Invalid(alloc::format!("need K ≥ {}", max_order + 1)));
    }
    let n = max_order + 1;
    let jr = exponent_integrand(ms)?;
    let om01 = curve.omega01();
    let mut rows = Vec::new();
    for (z, zp) in pairs {
        let path = [zp.clone(), z.clone()];
        let xp = eval_at(&ms.xprime, z)? * eval_at(&ms.xprime, zp)?;
        if !xp.is_positive() {
            return Err(Error::Singular("x′(z)x′(z′) ≤ 0: pair outside a common sector".into()));
        }
        let dx = eval_at(&ms.x, z)? - eval_at(&ms.x, zp)?;
        if dx.is_zero() || z == zp {
            return Err(Error::CoincidingPoints);
        }
        let s_l = integrate_rf(&jr[0], &path)?.eval(digits);
        let s_r = integrate_rf(&om01, &path)?.eval(digits);
        rows.push(row(z, zp, -1, &s_l, &s_r));

        // (M(z′)M(z))₁₁ / M₁₁(z′) as an exact ℏ-series
        let mz: Vec<_> = ms.m[..n].iter().map(|m| crate::correlators::eval_matrix(m, z)).collect::<Result<_>>()?;
        let mzp: Vec<_> = ms.m[..n].iter().map(|m| crate::correlators::eval_matrix(m, zp)).collect::<Result<_>>()?;
        let mut num = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = Q::zero();
            for l in 0..=k {
                acc += mzp[l].mat_mul(&mz[k - l]).get(0, 0).clone();
            }
            num.push(acc);
        }
        let den: Vec<Q> = mzp.iter().map(|m| m.get(0, 0).clone()).collect();
        if den[0].is_zero() {
            return Err(Error::Singular("M₁₁(z′) = 0".into()));
        }
        let mut a: Vec<Q> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num[k].clone();
            for l in 1..=k {
                acc -= &den[l] * &a[k - l];
            }
            a.push(acc / &den[0]);
        }
        let e = jr[1..=n].iter().map(|f| integrate_rf(f, &path).map(|p| p.eval(digits))).collect::<Result<Vec<F>>>()?;
        // √(x′(z)x′(z′)) / (x − x′)
        let mut pref = (to_f(&xp, digits).ln() / F::from(2u8) - to_f(&dx.abs(), digits).ln()).exp();
        if dx.is_negative() {
            pref = -pref;
        }
        let lhs: Vec<F> = mul_series(&a.iter().map(|q| to_f(q, digits)).collect::<Vec<_>>(), &exp_series(&e, n), n).into_iter().map(|v| v * pref.clone()).collect();

        let mut t = alloc::vec![to_f(&Q::zero(), digits)];
        for chi in 1..n {
            let mut acc = Q::zero();
            for (g, m) in stable_range(chi) {
                if 2 * g as i64 - 2 + m as i64 != chi as i64 {
                    continue;
                }
                let fact: u64 = (1..=m as u64).product();
                acc += tr.integral(g, m, zp, z)? / Q::from_integer((fact as i64).into());
            }
            t.push(to_f(&acc, digits));
        }
        let inv_e = to_f(&(z - zp).recip(), digits);
        let rhs: Vec<F> = exp_series(&t, n).into_iter().map(|v| v * inv_e.clone()).collect();
        for k in 0..n {
            rows.push(row(z, zp, k as i64, &lhs[k], &rhs[k]));
        }
    }
    Ok(ConjectureReport { digits, tolerance: tolerance(digits), rows })
}

fn row(z: &Q, zp: &Q, order: i64, l: &F, r: &F) -> ConjectureRow {
    ConjectureRow { z: z.clone(), zp: zp.clone(), order, lhs: l.to_string(), rhs: r.to_string(), diff: to_f64(&(l.clone() - r.clone())).abs() }
}

#[cfg(test)]
mod tests;
