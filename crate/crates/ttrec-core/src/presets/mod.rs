//! Worked instances: Airy, Painlevé VI, the (3,2) minimal model, and synthetic controls.

use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::rational::{qi, sqrt_q};
use crate::algebra::{Matrix, Point, Poly, Q, RF};
use crate::curve::SpectralCurve;
use crate::laxpair::{LaxPair, Status};
use crate::{Error, Result};

mod painleve1;

pub use painleve1::painleve1_orders;

pub const DEFAULT_K: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct Golden {
    pub c: Option<Matrix<Q>>,
    pub v: Option<Matrix<Q>>,
    /// Expected Γ⁽⁰⁾; compared up to a nonzero scalar when `gamma0_up_to_scale`.
    pub gamma0: Option<Matrix<Q>>,
    pub gamma0_up_to_scale: bool,
    pub branchpoints: Vec<Point>,
    /// Expected statuses for assumptions 1–6.
    pub statuses: [Status; 6],
}

#[derive(Clone, Debug, PartialEq)]
pub struct Preset {
    pub name: String,
    pub lax: LaxPair,
    pub curve: SpectralCurve,
    pub golden: Golden,
}

const ALL_PASS: [Status; 6] = [Status::Pass; 6];

fn p(c: &[Q]) -> RF {
    RF::poly(Poly::new(c.to_vec()))
}
fn pi(c: &[i64]) -> RF {
    RF::poly(Poly::from_i64(c))
}
fn m2(a: RF, b: RF, c: RF, d: RF) -> Matrix<RF> {
    Matrix::from_rows(alloc::vec![alloc::vec![a, b], alloc::vec![c, d]])
}
fn qm2(a: Q, b: Q, c: Q, d: Q) -> Matrix<Q> {
    Matrix::from_rows(alloc::vec![alloc::vec![a, b], alloc::vec![c, d]])
}

fn airy_l() -> Matrix<RF> {
    m2(RF::zero(), RF::one(), RF::z(), RF::zero())
}

/// ℏψ'' = xψ as a first-order system; the t-flow is translation x → x + t, so R = L.
pub fn airy() -> Preset {
    let lax = LaxPair::new(2, DEFAULT_K, alloc::vec![airy_l()], Some(alloc::vec![airy_l()])).unwrap();
    let curve = SpectralCurve::new(pi(&[0, 0, 1]), RF::z(), Some(RF::z())).unwrap();
    let c = qm2(qi(0), qi(1), qi(1), qi(0));
    let golden = Golden {
        c: Some(c.clone()),
        v: Some(Matrix::identity(2, &Q::one())),
        gamma0: Some(c),
        gamma0_up_to_scale: false,
        branchpoints: alloc::vec![Point::Finite(qi(0)), Point::Infinity],
        statuses: ALL_PASS,
    };
    Preset { name: "airy".into(), lax, curve, golden }
}

/// Rational witness for the Painlevé VI spectral data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P6Witness {
    pub a: Q,
    pub b: Q,
    pub t: Q,
    pub theta_inf: Q,
    pub theta_t: Q,
    /// Branch of the square root √((t−a)(t−b)): +1 or −1.
    pub sign: i8,
}

impl Default for P6Witness {
    fn default() -> Self {
        P6Witness { a: Q::new(1.into(), 5.into()), b: Q::new(4.into(), 5.into()), t: Q::new(1.into(), 8.into()), theta_inf: qi(1), theta_t: qi(1), sign: 1 }
    }
}

/// Derived Painlevé VI constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P6Data {
    pub q0: Q,
    pub root: Q,
    pub theta0: Q,
    pub theta1: Q,
}

pub fn painleve6_data(w: &P6Witness) -> Result<P6Data> {
    let P6Witness { a, b, t, theta_inf: th, theta_t: tt, sign } = w;
    let bad = |m: &str| Error::Invalid(alloc::format!("Painlevé VI witness: {m}"));
    if a == b || t.is_zero() || t == &Q::one() || th.is_zero() || tt.is_zero() || (*sign != 1 && *sign != -1) {
        return Err(bad("degenerate parameters"));
    }
    let root = sqrt_q(&((t - a) * (t - b))).ok_or_else(|| bad("√((t−a)(t−b)) is not rational"))?;
    if root.is_zero() {
        return Err(bad("t coincides with a branch value"));
    }
    let sg = Q::from_integer((*sign as i64).into());
    let q0 = t + &sg * t * (t - Q::one()) * tt / (th * &root);
    if q0.is_zero() || q0 == Q::one() {
        return Err(bad("q0 hits a pole of L"));
    }
    let th2 = th * th;
    let t0sq = a * b * &q0 * &q0 * &th2 / (t * t);
    let one = Q::one();
    let t1sq = (&one - a) * (&one - b) * &th2 * (&q0 - &one) * (&q0 - &one) / ((t - &one) * (t - &one));
    // second form of the linear coefficient of P2, which ties q0 to θ_t
    let lin = -(&t0sq * t * (t + &one)) / (&th2 * &q0 * &q0) + &t1sq * t * (t - &one) / (&th2 * (&q0 - &one) * (&q0 - &one))
        - tt * tt * t * (t - &one) / (&th2 * (&q0 - t) * (&q0 - t));
    if lin != -(a + b) {
        return Err(bad("relations between q0, θ_t and P2 are inconsistent"));
    }
    let theta0 = sqrt_q(&t0sq).ok_or_else(|| bad("θ0 is not rational"))?;
    let theta1 = sqrt_q(&t1sq).ok_or_else(|| bad("θ1 is not rational"))?;
    Ok(P6Data { q0, root, theta0, theta1 })
}

pub fn painleve6(w: &P6Witness) -> Result<Preset> {
    let d6 = painleve6_data(w)?;
    let P6Witness { a, b, t, theta_inf: th, theta_t: tt, sign } = w;
    let one = Q::one();
    let two = qi(2);
    let mid = (a + b) / &two;
    let sg = Q::from_integer((*sign as i64).into());
    // R⁽⁰⁾ = ±1/((x−t)√) · [[−θt(x−m)/2, θt/θ∞], [−(b−a)²θtθ∞/16, θt(x−m)/2]]
    let pref = RF::new(Poly::constant(&sg / &d6.root), Poly::linear_root(t))?;
    let xm = p(&[-&mid, one.clone()]);
    let r0 = m2(
        &xm.scale(&(-tt / &two)) * &pref,
        pref.scale(&(tt / th)),
        pref.scale(&(-(b - a) * (b - a) * tt * th / qi(16))),
        &xm.scale(&(tt / &two)) * &pref,
    );
    // L⁽⁰⁾ = (x−q0)t(t−1)/(x(x−1)(q0−t)) R⁽⁰⁾
    let f = RF::new(Poly::linear_root(&d6.q0).scale(&(t * (t - &one) / (&d6.q0 - t))), Poly::from_i64(&[0, -1, 1]))?;
    let l0 = r0.map(|e| e * &f);
    let params = alloc::vec![
        ("a".into(), a.clone()),
        ("b".into(), b.clone()),
        ("t".into(), t.clone()),
        ("theta_inf".into(), th.clone()),
        ("theta_t".into(), tt.clone()),
        ("theta_0".into(), d6.theta0.clone()),
        ("theta_1".into(), d6.theta1.clone()),
        ("q0".into(), d6.q0.clone()),
    ];
    let lax = LaxPair::new(2, DEFAULT_K, alloc::vec![l0], Some(alloc::vec![r0]))?.with_params(params);
    // x = b + (b−a)/((z+1)(z−1))
    let zz1 = Poly::from_i64(&[-1, 0, 1]);
    let x = RF::new(&zz1.scale(b) + &Poly::constant(b - a), zz1.clone())?;
    let xrf = |c: &Q| &x - &RF::constant(c.clone());
    let zfac = RF::new(Poly::monomial((b - a) / &two, 1), zz1)?;
    let y = (&(&xrf(&d6.q0) * &zfac).scale(th)).checked_div(&(&(&x * &xrf(&one)) * &xrf(t)))?;
    let s = zfac.scale(&((&d6.q0 - t) * th / (t * (t - &one)))).checked_div(&xrf(t))?;
    let curve = SpectralCurve::new(x, y, Some(s))?;
    let ba = b - a;
    let golden = Golden {
        c: Some(qm2(-&ba / &two, Q::zero(), Q::zero(), &ba / &two)),
        v: Some(qm2(Q::zero(), qi(4) / (th * &ba), one.clone(), Q::zero())),
        gamma0: Some(qm2(-(th * th * &ba * &ba) / qi(16), Q::zero(), Q::zero(), one)),
        gamma0_up_to_scale: true,
        branchpoints: alloc::vec![Point::Finite(qi(0)), Point::Infinity],
        statuses: ALL_PASS,
    };
    Ok(Preset { name: "painleve6".into(), lax, curve, golden })
}

/// (p,q) minimal model from leading-order data x(z) = Σ u_k z^k, y(z) = Σ v_l z^l:
/// R⁽⁰⁾ is the companion matrix of x(s) − x and L⁽⁰⁾ = y(R⁽⁰⁾).
pub fn minimal_model(p_: usize, q_: usize, u: &[Q], v: &[Q]) -> Result<Preset> {
    let bad = |m: &str| Error::Invalid(alloc::format!("minimal model: {m}"));
    if p_ < 2 || q_ < 2 || p_.gcd(&q_) != 1 {
        return Err(bad("(p, q) must be coprime and at least 2"));
    }
    if u.len() != q_ + 1 || v.len() != p_ + 1 {
        return Err(bad("expected u_0..u_q and v_0..v_p"));
    }
    if !u[q_].is_one() || !u[q_ - 1].is_zero() || !v[p_].is_one() || !v[p_ - 1].is_zero() {
        return Err(bad("need u_q = v_p = 1 and u_{q-1} = v_{p-1} = 0"));
    }
    let uu = -&u[q_ - 2] / Q::from_integer((q_ as i64).into());
    if v[p_ - 2] != -&uu * Q::from_integer((p_ as i64).into()) {
        return Err(bad("u_{q-2} = -q u and v_{p-2} = -p u disagree"));
    }
    let d = q_;
    let mut r0 = Matrix::filled(d, d, RF::zero());
    for i in 0..d - 1 {
        r0.set(i, i + 1, RF::one());
    }
    r0.set(d - 1, 0, p(&[-&u[0], Q::one()]));
    for k in 1..d {
        r0.set(d - 1, k, RF::constant(-&u[k]));
    }
    let id = Matrix::identity(d, &RF::one());
    let mut l0 = Matrix::filled(d, d, RF::zero());
    let mut pw = id;
    for c in v {
        l0 = l0.mat_add(&pw.scale(c));
        pw = pw.mat_mul(&r0);
    }
    let t = -qi(3) * &uu * &uu;
    let lax = LaxPair::new(d, DEFAULT_K, alloc::vec![l0], Some(alloc::vec![r0]))?
        .with_params(alloc::vec![("p".into(), qi(p_ as i64)), ("q".into(), qi(q_ as i64)), ("u".into(), uu), ("t".into(), t)]);
    let curve = SpectralCurve::new(p(u), p(v), Some(RF::z()))?;
    let mut c = Matrix::filled(d, d, Q::zero());
    for i in 1..=d {
        for j in 1..=d {
            if i + j <= d + 1 {
                c.set(i - 1, j - 1, u[i + j - 1].clone());
            }
        }
    }
    // Γ⁽⁰⁾ = C here; the a-recursion produces its inverse
    let golden = Golden {
        c: Some(c.clone()),
        v: Some(Matrix::identity(d, &Q::one())),
        gamma0: Some(c),
        gamma0_up_to_scale: false,
        branchpoints: Vec::new(),
        statuses: ALL_PASS,
    };
    Ok(Preset { name: alloc::format!("minimal_model_{p_}_{q_}"), lax, curve, golden })
}

/// C⁻¹ from the a-recursion a₁ = 1, a₂ = 0, a_{i+1} = −Σ_{j<i} a_j u_{j+q−i−1}; (C⁻¹)_{ij} = a_{i+j−q}.
pub fn hankel_inverse(u: &[Q]) -> Matrix<Q> {
    let q_ = u.len() - 1;
    let mut a = alloc::vec![Q::zero(), Q::one()];
    for i in 1..q_ {
        let mut s = Q::zero();
        for j in 1..i {
            s -= &a[j] * &u[j + q_ - i - 1];
        }
        a.push(s);
    }
    let mut m = Matrix::filled(q_, q_, Q::zero());
    for i in 1..=q_ {
        for j in 1..=q_ {
            if i + j > q_ {
                m.set(i - 1, j - 1, a[i + j - q_].clone());
            }
        }
    }
    m
}

/// (3,2) model at u: x = z² − 2u, y = z³ − 3uz, t = −3u², with the Painlevé I ℏ-corrections through ℏ^k.
pub fn minimal_model_32_with_k(u: &Q, k: usize) -> Preset {
    let two_u = u * qi(2);
    let three_u = u * qi(3);
    let mut pr = minimal_model(3, 2, &[-two_u, Q::zero(), Q::one()], &[Q::zero(), -three_u, Q::zero(), Q::one()]).expect("valid (3,2) data");
    pr.golden.branchpoints = alloc::vec![Point::Finite(qi(0)), Point::Infinity];
    let (l, r) = painleve1_orders(u, &Q::zero(), k);
    debug_assert_eq!(l[0], pr.lax.l[0]);
    pr.lax = LaxPair::new(2, k, l, Some(r)).expect("rank 2").with_params(pr.lax.params.clone());
    pr
}

pub fn minimal_model_32(u: &Q) -> Preset {
    minimal_model_32_with_k(u, DEFAULT_K)
}

pub fn minimal_model_default() -> Preset {
    minimal_model_32(&Q::new(1.into(), 3.into()))
}

/// The (3,2) system at u = 4/3 in ξ = x + 8/3: L⁽⁰⁾ = [[0, ξ−4], [ξ(ξ−4), 0]] on (z², z³ − 4z), a rational
/// double point at z = ±2, with R⁽⁰⁾ the Airy matrix.
pub fn synthetic_double_point_with_k(k: usize) -> Preset {
    let (l, r) = painleve1_orders(&Q::new(4.into(), 3.into()), &Q::new(8.into(), 3.into()), k);
    debug_assert_eq!(l[0], airy_l().map(|e| e * &pi(&[-4, 1])));
    let lax = LaxPair::new(2, k, l, Some(r)).unwrap().with_params(alloc::vec![("u".into(), Q::new(4.into(), 3.into())), ("t".into(), Q::new((-16).into(), 3.into()))]);
    let curve = SpectralCurve::new(pi(&[0, 0, 1]), pi(&[0, -4, 0, 1]), Some(RF::z())).unwrap();
    let c = qm2(qi(0), qi(1), qi(1), qi(0));
    let golden = Golden {
        c: Some(c.clone()),
        v: Some(Matrix::identity(2, &Q::one())),
        gamma0: Some(c),
        gamma0_up_to_scale: false,
        branchpoints: alloc::vec![Point::Finite(qi(0)), Point::Infinity],
        statuses: ALL_PASS,
    };
    Preset { name: "synthetic_double_point".into(), lax, curve, golden }
}

pub fn synthetic_double_point() -> Preset {
    synthetic_double_point_with_k(DEFAULT_K)
}

/// Airy L with R = [[0, x−4], [x(x−4), 0]]: the auxiliary curve (z², z³ − 4z) has a double point.
pub fn negative_a3() -> Preset {
    let l0 = airy_l();
    let r0 = l0.map(|e| e * &pi(&[-4, 1]));
    let lax = LaxPair::new(2, DEFAULT_K, alloc::vec![l0], Some(alloc::vec![r0])).unwrap();
    let curve = SpectralCurve::new(pi(&[0, 0, 1]), RF::z(), Some(pi(&[0, -4, 0, 1]))).unwrap();
    let mut g = airy().golden;
    g.statuses[2] = Status::Fail;
    Preset { name: "negative_a3".into(), lax, curve, golden: g }
}

/// Airy with L⁽¹⁾ = [[x, 0], [0, 0]]: the ℏ-correction changes the Newton polygon.
pub fn negative_a5() -> Preset {
    let l1 = m2(RF::z(), RF::zero(), RF::zero(), RF::zero());
    let lax = LaxPair::new(2, DEFAULT_K, alloc::vec![airy_l(), l1], Some(alloc::vec![airy_l()])).unwrap();
    let mut pr = airy();
    pr.name = "negative_a5".into();
    pr.lax = lax;
    pr.golden.statuses[4] = Status::Fail;
    pr.golden.statuses[5] = Status::Fail;
    pr
}

/// The three worked instances with default parameters.
pub fn standard() -> Vec<Preset> {
    alloc::vec![airy(), painleve6(&P6Witness::default()).expect("default witness is consistent"), minimal_model_default()]
}

pub fn by_name(name: &str) -> Option<Preset> {
    by_name_with_k(name, DEFAULT_K)
}

/// A named preset truncated (or, for the Painlevé I based ones, extended) to ℏ^k.
pub fn by_name_with_k(name: &str, k: usize) -> Option<Preset> {
    let trunc = |mut p: Preset| {
        p.lax = p.lax.with_k(k);
        p
    };
    match name {
        "airy" => Some(trunc(airy())),
        "painleve6" => painleve6(&P6Witness::default()).ok().map(trunc),
        "minimal_model" | "minimal_model_3_2" => Some(minimal_model_32_with_k(&Q::new(1.into(), 3.into()), k)),
        "synthetic_double_point" => Some(synthetic_double_point_with_k(k)),
        "negative_a3" => Some(trunc(negative_a3())),
        "negative_a5" => Some(trunc(negative_a5())),
        _ => None,
    }
}

pub const NAMES: [&str; 6] = ["airy", "painleve6", "minimal_model_3_2", "synthetic_double_point", "negative_a3", "negative_a5"];

#[cfg(test)]
mod tests;
