use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::linsolve::{nullspace, solve};
use crate::algebra::rational::{fmt_q, small_rationals};
use crate::algebra::{HSeries, Matrix, Point, Poly, Q, RF};
use crate::curve::{branchpoints, branchpoints_of, build_c, double_points, partial_fractions, BranchPoint, DoublePoint, SpectralCurve};
use crate::{Error, Result};

use super::charpoly::{char_poly_curve, verify_parametrization, ParamReport};
use super::LaxPair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotCheckable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub assumption: u8,
    pub status: Status,
    pub witnesses: Vec<String>,
}

impl CheckResult {
    fn new(assumption: u8, witnesses: Vec<String>) -> Self {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        CheckResult { assumption, status, witnesses }
    }
    fn not_checkable(assumption: u8, why: String) -> Self {
        CheckResult { assumption, status: Status::NotCheckable, witnesses: alloc::vec![why] }
    }
}

fn rf_const(m: &Matrix<Q>) -> Matrix<RF> {
    m.map(|a| RF::constant(a.clone()))
}

fn eval_matrix(m: &Matrix<RF>, x0: &Q) -> Option<Matrix<Q>> {
    let e: Option<Vec<Q>> = m.entries().iter().map(|f| f.eval(x0)).collect();
    e.map(|d| Matrix::new(m.rows(), m.cols(), d))
}

/// Entries rational in x (by construction) and [L⁽⁰⁾, R⁽⁰⁾] = 0.
pub fn check_a1(lp: &LaxPair) -> CheckResult {
    let mut w = Vec::new();
    if let Some(r0) = lp.r0() {
        let c = lp.l0().commutator(r0);
        for i in 0..lp.d {
            for j in 0..lp.d {
                if !c.get(i, j).is_zero() {
                    w.push(format!("[L0, R0]_({i},{j}) = {}", c.get(i, j)));
                }
            }
        }
    }
    CheckResult::new(1, w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A3Report {
    pub double_points: Vec<DoublePoint>,
    pub irrational_degree: usize,
    /// Branchpoints of x where s (resp. y) is not a local coordinate.
    pub irregular_s: Vec<BranchPoint>,
    pub irregular_y: Vec<BranchPoint>,
}

impl A3Report {
    pub fn passed(&self) -> bool {
        self.double_points.is_empty() && self.irrational_degree == 0 && self.irregular_s.is_empty() && self.irregular_y.is_empty()
    }
    pub fn witnesses(&self) -> Vec<String> {
        let mut w: Vec<String> = self.double_points.iter().map(|p| format!("double point of (x, s): ({}, {})", fmt_q(&p.b), fmt_q(&p.b_bar))).collect();
        if self.irrational_degree > 0 {
            w.push(format!("non-rational double points of (x, s): resultant factor of degree {}", self.irrational_degree));
        }
        w.extend(self.irregular_s.iter().map(|b| format!("irregular branchpoint of (x, s) at z = {}", b.at)));
        w.extend(self.irregular_y.iter().map(|b| format!("irregular branchpoint of (x, y) at z = {}", b.at)));
        w
    }
}

/// The auxiliary curve (x, s) is regular without double points; (x, y) is regular.
pub fn check_a3(curve: &SpectralCurve) -> Result<A3Report> {
    let s = curve.s.as_ref().ok_or_else(|| Error::Invalid("auxiliary function s(z) missing".into()))?;
    let dp = double_points(&curve.x, s)?;
    let irregular_s = branchpoints_of(&curve.x, s)?.into_iter().filter(|b| !b.regular).collect();
    let irregular_y = branchpoints(curve)?.into_iter().filter(|b| !b.regular).collect();
    Ok(A3Report { double_points: dp.points, irrational_degree: dp.irrational_degree, irregular_s, irregular_y })
}

/// Parameter points z with finite regular data, for sampling identities in z.
fn good_z(curve: &SpectralCurve, extra: &[&RF], n: usize) -> Vec<Q> {
    let xp = curve.xprime();
    core::iter::once(Q::zero())
        .chain(small_rationals(40 * n + 40))
        .filter(|z| {
            xp.eval(z).is_some_and(|v| !v.is_zero()) && curve.y.eval(z).is_some() && extra.iter().all(|f| f.eval(z).is_some_and(|v| !v.is_zero()))
        })
        .take(n)
        .collect()
}

/// Constant v with L⁽⁰⁾(x(z)) v w(z) = y(z) v w(z), w the basis of (z − α)^{−l} (z^{l−1} at ∞).
/// Normalized so the first nonzero entry of the first column is 1.
pub fn solve_v(lp: &LaxPair, curve: &SpectralCurve) -> Result<Matrix<Q>> {
    let d = lp.d;
    if curve.d != d {
        return Err(Error::Invalid(format!("curve has {} sheets, Lax pair has rank {d}", curve.d)));
    }
    let pd = partial_fractions(&curve.x)?;
    let basis = pd.basis();
    let l0z = lp.l0().map(|e| e.compose(&curve.x));
    let dens: Vec<RF> = l0z.entries().iter().map(|e| RF::poly(e.den().clone())).collect();
    let dens_ref: Vec<&RF> = dens.iter().collect();
    let zs = good_z(curve, &dens_ref, 2 * d * d + 2);
    let mut rows = Vec::new();
    for z in &zs {
        let l = eval_matrix(&l0z, z).expect("sample avoids poles");
        let y = curve.y.eval(z).unwrap();
        let w: Vec<Q> = basis.iter().map(|b| b.eval(z).expect("sample avoids poles of x")).collect();
        for i in 0..d {
            let mut row = alloc::vec![Q::zero(); d * d];
            for k in 0..d {
                let mut a = l.get(i, k).clone();
                if i == k {
                    a -= &y;
                }
                for (li, wl) in w.iter().enumerate() {
                    row[k * d + li] += &a * wl;
                }
            }
            rows.push(row);
        }
    }
    let ker = nullspace(&Matrix::from_rows(rows));
    if ker.is_empty() {
        return Err(Error::Check("no constant v makes v𝒱 an eigenvector matrix of L0".into()));
    }
    if ker.len() > 1 {
        return Err(Error::Singular(format!("eigenvector decomposition not unique ({}-dimensional)", ker.len())));
    }
    let mut v = Matrix::new(d, d, ker[0].clone());
    let lead = v.col(0).into_iter().find(|a| !a.is_zero()).ok_or_else(|| Error::Singular("v has a zero column".into()))?;
    v = v.scale(&lead.recip());
    if v.det().is_zero() {
        return Err(Error::Check("v is not invertible".into()));
    }
    let vw = rf_const(&v).mul_vec(&basis);
    let lvw = l0z.mul_vec(&vw);
    if lvw.iter().zip(&vw).any(|(a, b)| *a != b * &curve.y) {
        return Err(Error::Check("v fails the symbolic eigenvector identity".into()));
    }
    Ok(v)
}

/// Parity relation Γ L(x,−ℏ) = L(x,ℏ)ᵀ Γ at ℏ-order k, as a matrix of rational functions.
fn parity_defect(lp: &LaxPair, gamma: &[Matrix<Q>], k: usize) -> Matrix<RF> {
    let mut acc = Matrix::filled(lp.d, lp.d, RF::zero());
    for (j, g) in gamma.iter().enumerate().take(k + 1) {
        let g = rf_const(g);
        let l = lp.l_order(k - j);
        let lhs = g.mat_mul(&l);
        let lhs = if (k - j) % 2 == 1 { lhs.neg() } else { lhs };
        acc = acc.mat_add(&lhs).mat_sub(&l.transpose().mat_mul(&g));
    }
    acc
}

pub fn gamma_relation_holds(lp: &LaxPair, gamma: &HSeries<Matrix<Q>>) -> bool {
    let g = gamma.coeffs();
    (0..g.len()).all(|k| parity_defect(lp, g, k).is_zero_matrix())
}

/// Γ⁽⁰⁾ = (vᵀ)⁻¹ C v⁻¹, then Γ⁽ᵏ⁾ order by order with Γ⁽ᵏ⁾ = (−1)ᵏ Γ⁽ᵏ⁾ᵀ; free directions set to 0.
pub fn solve_gamma(lp: &LaxPair, v: &Matrix<Q>, c: &Matrix<Q>) -> Result<HSeries<Matrix<Q>>> {
    let d = lp.d;
    let vinv = v.inverse()?;
    let g0 = vinv.transpose().mat_mul(c).mat_mul(&vinv);
    let mut gs = alloc::vec![g0];
    if !parity_defect(lp, &gs, 0).is_zero_matrix() {
        return Err(Error::Check("Γ⁽⁰⁾ L⁽⁰⁾ ≠ L⁽⁰⁾ᵀ Γ⁽⁰⁾".into()));
    }
    let mut xs: Vec<Q> = Vec::new();
    for x in small_rationals(400) {
        if xs.len() == d * d + 2 {
            break;
        }
        if (0..=lp.k).all(|k| lp.l_order(k).entries().iter().all(|e| e.eval(&x).is_some())) {
            xs.push(x);
        }
    }
    let l0s: Vec<Matrix<Q>> = xs.iter().map(|x| eval_matrix(lp.l0(), x).unwrap()).collect();
    for k in 1..=lp.k {
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        gs.push(Matrix::filled(d, d, Q::zero()));
        // with Γ⁽ᵏ⁾ = 0 the defect is minus the right-hand side
        let rhs = parity_defect(lp, &gs, k).neg();
        let mut rows = Vec::new();
        let mut b = Vec::new();
        for (x, l) in xs.iter().zip(&l0s) {
            let r = eval_matrix(&rhs, x).unwrap();
            for i in 0..d {
                for j in 0..d {
                    let mut row = alloc::vec![Q::zero(); d * d];
                    for m in 0..d {
                        row[i * d + m] += l.get(m, j);
                        row[m * d + j] -= l.get(m, i);
                    }
                    rows.push(row);
                    b.push(r.get(i, j).clone());
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let mut row = alloc::vec![Q::zero(); d * d];
                row[i * d + j] += Q::one();
                row[j * d + i] -= &sign;
                rows.push(row);
                b.push(Q::zero());
            }
        }
        let sol = solve(&Matrix::from_rows(rows), &b).map_err(|_| Error::Check(format!("no parity matrix at order ℏ^{k}")))?;
        gs[k] = Matrix::new(d, d, sol.particular);
        if !parity_defect(lp, &gs, k).is_zero_matrix() {
            return Err(Error::Check(format!("parity relation fails identically in x at order ℏ^{k}")));
        }
    }
    Ok(HSeries::new(0, gs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A5Violation {
    pub k: usize,
    /// Unit matrix E_{ij} used as C̃; None for the pole-set inclusion test.
    pub unit: Option<(usize, usize)>,
    pub over_x: Option<Point>,
    pub z: Option<Point>,
    /// Pole order of Ω_k(z) dz there, when the location is rational.
    pub order: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A5Report {
    pub x0: Q,
    pub x1: Q,
    pub violations: Vec<A5Violation>,
}

impl A5Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
    pub fn witnesses(&self) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| {
                let loc = |p: &Option<Point>| p.as_ref().map_or_else(|| String::from("?"), |p| format!("{p}"));
                match v.unit {
                    None => format!("L^({}) has a pole at x = {} that L^(0) lacks", v.k, loc(&v.over_x)),
                    Some((i, j)) => format!(
                        "Omega_{} with C~ = E_({i},{j}) has a pole of order {} at z = {} over x = {}",
                        v.k,
                        v.order.map_or_else(|| String::from("?"), |o| format!("{o}")),
                        loc(&v.z),
                        loc(&v.over_x)
                    ),
                }
            })
            .collect()
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = Poly::gcd(a, b);
    &a.exact_div(&g) * b
}

/// Squarefree lcm of the denominators of L⁽⁰⁾, and whether L⁽⁰⁾ has a pole at x = ∞.
fn l0_singularities(lp: &LaxPair) -> (Poly, bool) {
    let den = lp.l0().entries().iter().fold(Poly::one(), |acc, e| lcm(&acc, e.den())).squarefree();
    let inf = lp.l0().entries().iter().any(|e| e.order_at(&Point::Infinity).is_some_and(|o| o < 0));
    (den, inf)
}

/// Two smallest positive rationals avoiding poles of L⁽⁰⁾, branch values and double-point images.
pub fn default_a5_points(lp: &LaxPair, curve: &SpectralCurve) -> Result<(Q, Q)> {
    let (den, _) = l0_singularities(lp);
    let mut bad: Vec<Q> = branchpoints(curve)?.iter().filter_map(|b| curve.x.eval_point(&b.at)).collect();
    if let Ok(dp) = double_points(&curve.x, &curve.y) {
        bad.extend(dp.points.iter().filter_map(|p| curve.x.eval(&p.b)));
    }
    let mut it = small_rationals(200).into_iter().filter(|x| x > &Q::zero() && !den.eval(x).is_zero() && !bad.contains(x));
    match (it.next(), it.next()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Invalid("no generic pair x0, x1".into())),
    }
}

pub fn unit_basis(d: usize) -> Vec<((usize, usize), Matrix<Q>)> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut m = Matrix::filled(d, d, Q::zero());
            m.set(i, j, Q::one());
            out.push(((i, j), m));
        }
    }
    out
}

fn pole_inclusion(lp: &LaxPair) -> Vec<A5Violation> {
    let (den, inf) = l0_singularities(lp);
    let mut out = Vec::new();
    for k in 1..lp.l.len() {
        let mut extra = Poly::one();
        let mut extra_inf = false;
        for e in lp.l[k].entries() {
            let sf = e.den().squarefree();
            let g = Poly::gcd(&sf, &den);
            extra = lcm(&extra, &sf.exact_div(&g));
            extra_inf |= e.order_at(&Point::Infinity).is_some_and(|o| o < 0);
        }
        let roots = extra.rational_roots();
        for (a, _) in &roots {
            out.push(A5Violation { k, unit: None, over_x: Some(Point::Finite(a.clone())), z: None, order: None });
        }
        if roots.len() as i64 != extra.deg() {
            out.push(A5Violation { k, unit: None, over_x: None, z: None, order: None });
        }
        if extra_inf && !inf {
            out.push(A5Violation { k, unit: None, over_x: Some(Point::Infinity), z: None, order: None });
        }
    }
    out
}

/// Poles of the differential f(z) dz located over the zeros of `over` (a polynomial in z), or
/// over x = ∞ when `over` is None.
fn polar_over(f: &RF, curve: &SpectralCurve, over: Option<(&Poly, Q)>) -> Vec<(Option<Point>, Option<Point>, Option<i64>)> {
    let mut out = Vec::new();
    let at_inf = over.is_none();
    let (target, xval) = match over {
        Some((p, c)) => (p.clone(), Some(Point::Finite(c))),
        None => (curve.x.den().clone(), Some(Point::Infinity)),
    };
    let g = Poly::gcd(f.den(), &target);
    if g.deg() > 0 {
        let roots = g.rational_roots();
        for (z, _) in &roots {
            let zp = Point::Finite(z.clone());
            out.push((xval.clone(), Some(zp.clone()), f.order_at(&zp).map(|o| -o)));
        }
        if roots.iter().map(|r| r.1).sum::<usize>() as i64 != g.deg() {
            out.push((xval.clone(), None, None));
        }
    }
    if at_inf && curve.x.eval_point(&Point::Infinity).is_none() {
        if let Some(o) = f.order_at(&Point::Infinity) {
            if o < 2 {
                out.push((Some(Point::Infinity), Some(Point::Infinity), Some(2 - o)));
            }
        }
    }
    out
}

/// Pole dominance: L⁽ᵏ⁾ poles among those of L⁽⁰⁾, and Ω_k(z) = [ℏᵏ] det(y − L − ℏC̃/((x−x0)(x−x1))) x′/E_y
/// free of poles over the singularities of L⁽⁰⁾ (x = ∞ included) for every unit C̃.
pub fn check_a5(lp: &LaxPair, curve: &SpectralCurve, x0: &Q, x1: &Q) -> Result<A5Report> {
    let d = lp.d;
    let kk = lp.k;
    let mut violations = pole_inclusion(lp);
    let cp = char_poly_curve(lp);
    let dx_ey = curve.xprime().checked_div(&cp.ey_on_curve(&curve.x, &curve.y))?;
    let r = RF::new(Poly::one(), &Poly::linear_root(x0) * &Poly::linear_root(x1))?.compose(&curve.x);
    let ls = lp.l_pulled_back(&curve.x, kk);
    let (den, _) = l0_singularities(lp);
    let finite_sing: Vec<(Poly, Q)> = den
        .rational_roots()
        .into_iter()
        .map(|(c, _)| {
            let p = curve.x.num() - &curve.x.den().scale(&c);
            (p, c)
        })
        .collect();
    let irr = den.irrational_part();
    if irr.deg() > 0 {
        return Err(Error::NonRational("pole of L0".into()));
    }
    for (unit, ct) in unit_basis(d) {
        let mut m = Matrix::filled(d, d, HSeries::constant(RF::zero(), kk as i64));
        for i in 0..d {
            for j in 0..d {
                let mut c: Vec<RF> = (0..=kk).map(|k| -ls[k].get(i, j)).collect();
                if i == j {
                    c[0] = &c[0] + &curve.y;
                }
                if kk >= 1 && !ct.get(i, j).is_zero() {
                    c[1] = &c[1] - &r.scale(ct.get(i, j));
                }
                m.set(i, j, HSeries::new(0, c));
            }
        }
        let det = m.det_expand();
        for k in 1..=kk {
            let om = &det.coef(k as i64).unwrap() * &dx_ey;
            if om.is_zero() {
                continue;
            }
            let mut locs = Vec::new();
            for (p, c) in &finite_sing {
                locs.extend(polar_over(&om, curve, Some((p, c.clone()))));
            }
            locs.extend(polar_over(&om, curve, None));
            for (over_x, z, order) in locs {
                violations.push(A5Violation { k, unit: Some(unit), over_x, z, order });
            }
        }
    }
    Ok(A5Report { x0: x0.clone(), x1: x1.clone(), violations })
}

/// (V⁻¹ L⁽¹⁾ V)_{ii} on the sheet through z, as a rational function of z; zero when pole dominance holds to order ℏ.
pub fn order_one_diagonal(lp: &LaxPair, curve: &SpectralCurve, v: &Matrix<Q>, c: &Matrix<Q>) -> Result<RF> {
    let pd = partial_fractions(&curve.x)?;
    let w = pd.basis();
    let vi = v.inverse()?;
    let l1 = lp.l_order(1).map(|e| e.compose(&curve.x));
    let m = rf_const(c).mat_mul(&rf_const(&vi)).mat_mul(&l1).mat_mul(&rf_const(v));
    let mw = m.mul_vec(&w);
    let s = w.iter().zip(&mw).fold(RF::zero(), |acc, (a, b)| &acc + &(a * b));
    s.checked_div(&curve.xprime())
}

#[derive(Clone, Debug, PartialEq)]
pub struct AssumptionReport {
    pub checks: Vec<CheckResult>,
    pub param: Option<ParamReport>,
    pub c: Option<Matrix<Q>>,
    pub v: Option<Matrix<Q>>,
    pub gamma: Option<HSeries<Matrix<Q>>>,
    pub a3: Option<A3Report>,
    pub a5: Option<A5Report>,
}

impl AssumptionReport {
    pub fn status(&self, a: u8) -> Status {
        self.checks.iter().find(|c| c.assumption == a).map_or(Status::NotCheckable, |c| c.status)
    }
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }
}

fn err_check(a: u8, e: Error) -> CheckResult {
    match e {
        Error::Check(_) | Error::Inconsistent => CheckResult::new(a, alloc::vec![format!("{e}")]),
        other => CheckResult::not_checkable(a, format!("{other}")),
    }
}

/// Runs the checks for assumptions 1–6 in order.
pub fn assumption_report(lp: &LaxPair, curve: &SpectralCurve) -> AssumptionReport {
    let mut checks = Vec::new();
    checks.push(check_a1(lp));
    let param = verify_parametrization(lp, curve).ok();
    checks.push(match &param {
        Some(p) => {
            let mut w = Vec::new();
            if !p.identity {
                w.push(format!("det(y - L0) on the curve = {}", char_poly_curve(lp).on_curve(&curve.x, &curve.y)));
            }
            if !p.sheet_count {
                w.push(format!("x(z) has degree {} but L has rank {}", curve.d, lp.d));
            }
            if p.identity && !p.separates_sheets {
                w.push("E_y vanishes identically on the parametrization".into());
            }
            if p.auxiliary_identity == Some(false) {
                w.push("det(s - R0) does not vanish on the parametrization".into());
            }
            CheckResult::new(2, w)
        }
        None => CheckResult::not_checkable(2, "parametrization could not be verified".into()),
    });
    let a3 = check_a3(curve);
    checks.push(match &a3 {
        Ok(r) => CheckResult::new(3, r.witnesses()),
        Err(e) => CheckResult::not_checkable(3, format!("{e}")),
    });
    let a3 = a3.ok();
    let c = partial_fractions(&curve.x).and_then(|pd| build_c(&pd));
    let v = solve_v(lp, curve);
    checks.push(match (&c, &v) {
        (Ok(c), Ok(v)) => CheckResult::new(4, a4_extra(lp, curve, v, c)),
        (Err(e), _) => CheckResult::not_checkable(4, format!("{e}")),
        (_, Err(e)) => err_check(4, e.clone()),
    });
    let a5 = default_a5_points(lp, curve).and_then(|(x0, x1)| check_a5(lp, curve, &x0, &x1));
    checks.push(match &a5 {
        Ok(r) => {
            let mut w = r.witnesses();
            if let (Ok(c), Ok(v)) = (&c, &v) {
                if let Ok(diag) = order_one_diagonal(lp, curve, v, c) {
                    if !diag.is_zero() {
                        w.push(format!("(V^-1 L^(1) V)_ii = {diag}"));
                    }
                }
            }
            CheckResult::new(5, w)
        }
        Err(e) => CheckResult::not_checkable(5, format!("{e}")),
    });
    let gamma = match (&c, &v) {
        (Ok(c), Ok(v)) => Some(solve_gamma(lp, v, c)),
        _ => None,
    };
    checks.push(match &gamma {
        Some(Ok(_)) => CheckResult::new(6, Vec::new()),
        Some(Err(e)) => err_check(6, e.clone()),
        None => CheckResult::not_checkable(6, "requires v and C".into()),
    });
    AssumptionReport {
        checks,
        param,
        c: c.ok(),
        v: v.ok(),
        gamma: gamma.and_then(|g| g.ok()),
        a3,
        a5: a5.ok(),
    }
}

/// Columns of v𝒱 are eigenvectors of R⁽⁰⁾ with eigenvalue s, and v⁻¹L⁽⁰⁾vC⁻¹ is symmetric.
fn a4_extra(lp: &LaxPair, curve: &SpectralCurve, v: &Matrix<Q>, c: &Matrix<Q>) -> Vec<String> {
    let mut w = Vec::new();
    let (Ok(vi), Ok(ci)) = (v.inverse(), c.inverse()) else {
        return alloc::vec!["v or C is singular".into()];
    };
    let sym = |m: &Matrix<RF>| rf_const(&vi).mat_mul(m).mat_mul(&rf_const(v)).mat_mul(&rf_const(&ci)).is_symmetric();
    if !sym(lp.l0()) {
        w.push("v^-1 L0 v C^-1 is not symmetric".into());
    }
    if let (Some(r0), Some(s)) = (lp.r0(), &curve.s) {
        if !sym(r0) {
            w.push("v^-1 R0 v C^-1 is not symmetric".into());
        }
        if let Ok(pd) = partial_fractions(&curve.x) {
            let vw = rf_const(v).mul_vec(&pd.basis());
            let rvw = r0.map(|e| e.compose(&curve.x)).mul_vec(&vw);
            if rvw.iter().zip(&vw).any(|(a, b)| *a != b * s) {
                w.push("columns of V are not eigenvectors of R0 with eigenvalue s".into());
            }
        }
    }
    w
}
