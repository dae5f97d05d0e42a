use super::*;
use crate::algebra::rational::q;
use crate::algebra::RF;
use crate::curve::{branchpoints, build_c, partial_fractions};
use crate::laxpair::{assumption_report, check_a3, verify_parametrization};

fn proportional(a: &Matrix<Q>, b: &Matrix<Q>) -> bool {
    let Some((i, bi)) = b.entries().iter().enumerate().find(|e| !e.1.is_zero()) else { return a.is_zero_matrix() };
    let k = &a.entries()[i] / bi;
    !k.is_zero() && a.entries().iter().zip(b.entries()).all(|(x, y)| *x == &k * y)
}

fn check_golden(pr: &Preset) {
    let rep = assumption_report(&pr.lax, &pr.curve);
    let got: Vec<Status> = (1..=6).map(|a| rep.status(a)).collect();
    assert_eq!(got, pr.golden.statuses.to_vec(), "{}: {:?}", pr.name, rep.checks);
    assert_eq!(rep.c, pr.golden.c, "{} C", pr.name);
    assert_eq!(rep.v, pr.golden.v, "{} v", pr.name);
    if let (Some(g), Some(want)) = (&rep.gamma, &pr.golden.gamma0) {
        let g0 = &g.coeffs()[0];
        if pr.golden.gamma0_up_to_scale {
            assert!(proportional(g0, want), "{} Γ0 {g0:?}", pr.name);
        } else {
            assert_eq!(g0, want, "{} Γ0", pr.name);
        }
    }
    let bps: Vec<Point> = branchpoints(&pr.curve).unwrap().into_iter().map(|b| b.at).collect();
    assert_eq!(bps, pr.golden.branchpoints, "{}", pr.name);
}

#[test]
fn standard_presets_reproduce_golden_values() {
    for pr in standard() {
        check_golden(&pr);
        assert!(verify_parametrization(&pr.lax, &pr.curve).unwrap().passed());
        assert!(check_a3(&pr.curve).unwrap().passed());
    }
}

#[test]
fn painleve6_witness() {
    let d = painleve6_data(&P6Witness::default()).unwrap();
    assert_eq!(d.q0, q(-13, 36));
    assert_eq!(d.root, q(9, 40));
    assert_eq!(d.theta0, q(52, 45));
    assert_eq!(d.theta1, q(28, 45));
    let pr = painleve6(&P6Witness::default()).unwrap();
    let pd = partial_fractions(&pr.curve.x).unwrap();
    assert_eq!(build_c(&pd).unwrap(), qm2(q(-3, 10), qi(0), qi(0), q(3, 10)));
    let mut bad = P6Witness::default();
    bad.t = q(1, 3);
    assert!(painleve6(&bad).is_err());
}

#[test]
fn pvi_gamma0_scale() {
    let pr = painleve6(&P6Witness::default()).unwrap();
    let rep = assumption_report(&pr.lax, &pr.curve);
    let gamma = rep.gamma.unwrap();
    let g0 = &gamma.coeffs()[0];
    let want = pr.golden.gamma0.unwrap().scale(&-q(3, 10));
    assert_eq!(g0, &want);
}

#[test]
fn a_recursion_inverts_hankel_c() {
    for u in [alloc::vec![qi(0), qi(0), qi(1)], alloc::vec![qi(3), qi(5), qi(0), qi(1)], alloc::vec![q(1, 2), qi(-2), qi(7), qi(0), qi(1)]] {
        let n = u.len() - 1;
        let mut c = Matrix::filled(n, n, Q::zero());
        for i in 1..=n {
            for j in 1..=n {
                if i + j <= n + 1 {
                    c.set(i - 1, j - 1, u[i + j - 1].clone());
                }
            }
        }
        assert_eq!(hankel_inverse(&u), c.inverse().unwrap());
    }
}

#[test]
fn negative_controls() {
    for pr in [negative_a3(), negative_a5()] {
        check_golden(&pr);
    }
    let r = check_a3(&negative_a3().curve).unwrap();
    assert_eq!(r.double_points.len(), 1);
    assert_eq!((r.double_points[0].b.clone(), r.double_points[0].b_bar.clone()), (qi(-2), qi(2)));
}

#[test]
fn synthetic_passes() {
    check_golden(&synthetic_double_point());
}

#[test]
fn painleve1_lax_equation_holds() {
    for (j, m) in painleve1::lax_defect(6).iter().enumerate() {
        assert!(m.iter().all(|p| p.iter().all(|u| u.is_zero())), "defect at ℏ^{j}");
    }
    // u = u₀ − ℏ²/(432 u₀⁴) + …
    let (l, _) = painleve1_orders(&qi(1), &qi(0), 2);
    assert_eq!(l[2].get(0, 1), &RF::constant(q(1, 432)));
}
