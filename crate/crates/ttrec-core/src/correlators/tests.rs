use super::*;
use crate::algebra::{q, qi, Matrix, Poly, RF};
use crate::presets;

#[test]
fn airy_m_series() {
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    assert!(m_invariants(&ms).unwrap().passed());
    // M⁽⁰⁾ = [[1/2, 1/(2z)], [z/2, 1/2]]
    let m0 = eval_matrix(&ms.m[0], &qi(2)).unwrap();
    assert_eq!(m0, Matrix::from_rows(alloc::vec![alloc::vec![q(1, 2), q(1, 4)], alloc::vec![qi(1), q(1, 2)]]));
    let c = completeness(&ms, &[qi(3), qi(-3)]).unwrap();
    assert_eq!(c[0], Matrix::identity(2, &qi(1)));
    assert!(c[1..].iter().all(|m| m.is_zero_matrix()));
}

#[test]
fn constant_diagonal_has_no_corrections() {
    let l = Matrix::from_rows(alloc::vec![alloc::vec![RF::constant(qi(1)), RF::zero()], alloc::vec![RF::zero(), RF::constant(qi(2))]]);
    let lp = crate::laxpair::LaxPair::new(2, 3, alloc::vec![l], None).unwrap();
    let curve = crate::curve::SpectralCurve::new(RF::z(), RF::constant(qi(1)), None).unwrap();
    let ms = m_series(&lp, &curve, 3).unwrap();
    assert_eq!(eval_matrix(&ms.m[0], &qi(5)).unwrap(), Matrix::from_rows(alloc::vec![alloc::vec![qi(1), qi(0)], alloc::vec![qi(0), qi(0)]]));
    assert!(ms.m[1..].iter().all(|m| m.is_zero_matrix()));
}

#[test]
fn painleve6_m_series() {
    let p = presets::painleve6(&presets::P6Witness::default()).unwrap();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    assert!(m_invariants(&ms).unwrap().passed());
}

#[test]
fn airy_correlators_match_recursion() {
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    let mut tr = crate::toprec::TopRec::new(&p.curve).unwrap();
    let zs = [qi(1), qi(2), qi(3), qi(5)];
    let slots = zs.iter().map(|z| Slot::at(&ms, z).unwrap()).collect();
    let mut c = Correlators::new(slots, 2).unwrap();
    let xp: alloc::vec::Vec<crate::algebra::Q> = zs.iter().map(|z| ms.xprime.eval(z).unwrap()).collect();
    let jac = |k: usize| -> crate::algebra::Q { xp[..k].iter().product() };
    for (g, n, mask) in [(0usize, 3usize, 0b111usize), (1, 1, 0b1), (0, 4, 0b1111), (1, 2, 0b11)] {
        let k = 2 * g as i64 - 2 + n as i64;
        let w = coef(&c.connected(mask).unwrap(), k).unwrap() * jac(n);
        assert_eq!(w, tr.eval(g, n, &zs[..n]).unwrap(), "({g},{n})");
    }
    assert_eq!(coef(&c.connected(0b111).unwrap(), 1).unwrap() * jac(3), q(-1, 72));
    assert_eq!(coef(&c.connected(0b1).unwrap(), 1).unwrap() * jac(1), q(-1, 16));
    assert_eq!(coef(&c.connected(0b1111).unwrap(), 2).unwrap() * jac(4), q(1261, 1080000));
    assert_eq!(coef(&c.connected(0b11).unwrap(), 2).unwrap() * jac(2), q(97, 2048));
}

#[test]
fn hat_variants_relate() {
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 3).unwrap();
    let slots = [qi(2), qi(3), q(1, 2)].iter().map(|z| Slot::at(&ms, z).unwrap()).collect();
    let mut c = Correlators::new(slots, 2).unwrap();
    // 𝒲_{2,1}(X, X′; X₁) = W̃₃(X, X′, X₁) − W₁(X₁) 𝒲_{2,0}(X, X′)
    let lhs = c.partial(0b011, 0b100, false).unwrap();
    let rhs = c.disconnected(0b111, false).unwrap().sub(&c.connected(0b100).unwrap().mul(&c.partial(0b011, 0, false).unwrap()));
    for k in -2..=0 {
        assert_eq!(coef(&lhs, k).unwrap(), coef(&rhs, k).unwrap());
    }
    // Ŵ₁ drops the ℏ⁻¹ term y
    assert_eq!(coef(&c.connected(0b1).unwrap(), -1).unwrap(), qi(2));
    assert_eq!(coef(&c.hat(0b1).unwrap(), -1).unwrap(), qi(0));
}

#[test]
fn airy_loop_equations_low_order() {
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    let s = loop_sample(&p.curve, &ms, &qi(2), &[], 3).unwrap();
    assert_eq!(s.p[0], Poly::new(alloc::vec![qi(-4), qi(0), qi(1)]));
    assert!(s.p[1..].iter().all(|p| p.is_zero()));
    let s = loop_sample(&p.curve, &ms, &qi(2), &[qi(3)], 3).unwrap();
    assert!(s.core_ok && s.remark_ok);
    for yv in [qi(0), qi(1), qi(-2)] {
        let det = determinant_side(&p.lax, &ms, &s.x, &yv, &[qi(3)], 3).unwrap();
        assert_eq!(det, s.p.iter().map(|p| p.eval(&yv)).collect::<alloc::vec::Vec<_>>());
    }
    let r = loop_eq_check(&p.lax, &p.curve, &ms, &[qi(3)], 3, 12, 7).unwrap();
    assert!(r.passed(), "{:?}", r.witnesses);
    // P₁⁽¹⁾ = −(y + 3/2 + x/6) / (x − 9)²
    let inv = RF::inv_linear_pow(&qi(9), 2);
    assert_eq!(r.coefficients[1][1], inv.scale(&qi(-1)));
    assert_eq!(r.coefficients[1][0], &RF::poly(Poly::new(alloc::vec![q(-3, 2), q(-1, 6)])) * &inv);
}


#[test]
fn airy_is_of_topological_type() {
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    let cfg = TtConfig { loop_n: 1, loop_samples: 12, grid: 20, ..Default::default() };
    let r = tt_check(&p.lax, &p.curve, &ms, &cfg).unwrap();
    assert!(r.passed(), "{:?}", r.conditions);
    assert_eq!(r.identification.len(), 4);
}

#[test]
fn truncated_pair_has_poles_at_double_points() {
    // leading order of the (3,2) system only: not isomonodromic beyond ℏ⁰
    let mut p = presets::minimal_model_default();
    p.lax.l.truncate(1);
    p.lax.r.as_mut().unwrap().truncate(1);
    let ms = m_series(&p.lax, &p.curve, 3).unwrap();
    let table = symbolic_table(&ms, &[qi(3), qi(4)], 3, 2).unwrap();
    let w = pole_witnesses(&p.curve, &table, &[qi(3), qi(4)]).unwrap();
    assert!(w.iter().any(|s| s.starts_with("ω2^(2)") && s.contains("double point z = 1")), "{w:?}");
    let ms = m_series(&presets::minimal_model_default().lax, &p.curve, 3).unwrap();
    let table = symbolic_table(&ms, &[qi(3), qi(4)], 3, 2).unwrap();
    assert!(pole_witnesses(&p.curve, &table, &[qi(3), qi(4)]).unwrap().is_empty());
}

/// (1/2πi)∮ f dz on a circle of radius r about c, trapezoidal rule in f64.
fn contour_residue(f: &RF, c: f64, r: f64) -> f64 {
    use num_traits::ToPrimitive;
    let ev = |p: &Poly, z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for a in p.coeffs().iter().rev() {
            acc = (acc.0 * z.0 - acc.1 * z.1 + a.to_f64().unwrap(), acc.0 * z.1 + acc.1 * z.0);
        }
        acc
    };
    let n = 2000;
    let mut acc = 0.0;
    for k in 0..n {
        let th = 2.0 * core::f64::consts::PI * k as f64 / n as f64;
        let (cs, sn) = (th.cos(), th.sin());
        let z = (c + r * cs, r * sn);
        let (a, b) = (ev(f.num(), z), ev(f.den(), z));
        let d = b.0 * b.0 + b.1 * b.1;
        let v = ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d);
        // f dz / 2πi with dz = i r e^{iθ} dθ
        acc += (v.0 * r * cs - v.1 * r * sn) / n as f64;
    }
    acc
}

#[test]
fn tau_derivative_residue_sums() {
    use num_traits::ToPrimitive;
    let p = presets::painleve6(&presets::P6Witness::default()).unwrap();
    let ms = m_series(&p.lax, &p.curve, 2).unwrap();
    let t = tau_t_derivative(&p.lax, &p.curve, &ms).unwrap();
    // poles of x at ±1, of s at ±1/3; x(±1/3) = 1/8 has no further preimage
    let f = &(p.curve.s.as_ref().unwrap() * &p.curve.y) * &p.curve.xprime();
    let oracle: f64 = [1.0, -1.0, 1.0 / 3.0, -1.0 / 3.0].iter().map(|c| contour_residue(&f, *c, 0.01)).sum();
    assert!((coef(&t, -1).unwrap().to_f64().unwrap() - oracle).abs() < 1e-9, "{oracle}");
    assert_eq!(coef(&t, -1).unwrap(), q(1024, 135));
    assert_eq!(coef(&t, 0).unwrap(), qi(0));

    let mut p = presets::airy();
    p.curve.s = Some(RF::zero());
    let ms = m_series(&p.lax, &p.curve, 3).unwrap();
    assert!(tau_t_derivative(&p.lax, &p.curve, &ms).unwrap().coeffs().iter().all(num_traits::Zero::is_zero));
    p.curve.s = None;
    assert!(tau_t_derivative(&p.lax, &p.curve, &ms).is_err());

    // one sheet: s y x′ summed over all of its poles
    let l = Matrix::from_rows(alloc::vec![alloc::vec![RF::new(Poly::from_i64(&[1, 1, 1]), Poly::from_i64(&[0, 1])).unwrap()]]);
    let lp = crate::laxpair::LaxPair::new(1, 2, alloc::vec![l.clone()], Some(alloc::vec![l.clone()])).unwrap();
    let s = RF::new(Poly::from_i64(&[2]), Poly::from_i64(&[-1, 1])).unwrap();
    let curve = crate::curve::SpectralCurve::new(RF::z(), l.get(0, 0).clone(), Some(s.clone())).unwrap();
    let ms = m_series(&lp, &curve, 2).unwrap();
    let t = tau_t_derivative(&lp, &curve, &ms).unwrap();
    let f = &s * l.get(0, 0);
    let direct: crate::algebra::Q = [crate::algebra::Point::Finite(qi(1)), crate::algebra::Point::Infinity].iter().map(|p| f.residue(p)).sum();
    assert_eq!(coef(&t, -1).unwrap(), direct);
    assert_eq!(direct, qi(2));
}
