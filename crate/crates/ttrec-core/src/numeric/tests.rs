use super::*;
use crate::algebra::{q, qi, Matrix};
use crate::correlators::m_series;
use crate::presets;

fn close(x: &F, v: f64, tol: f64) -> bool {
    (to_f64(x) - v).abs() < tol
}

#[test]
fn path_integrals() {
    // ∫₁² (1/z + 1/z² + z) dz = ln 2 + 1/2 + 3/2
    let f = &(&RF::inv_linear_pow(&qi(0), 1) + &RF::inv_linear_pow(&qi(0), 2)) + &RF::z();
    let p = integrate_rf(&f, &[qi(1), qi(2)]).unwrap();
    assert_eq!(p.rational, qi(2));
    assert_eq!(p.logs, alloc::vec![(qi(1), qi(2))]);
    assert!(close(&p.eval(50), 2.0 + core::f64::consts::LN_2, 1e-15));
    // split path agrees
    let p2 = integrate_rf(&f, &[qi(1), q(3, 2), qi(2)]).unwrap();
    assert!(to_f64(&(p.eval(50) - p2.eval(50))).abs() < 1e-45);
    assert!(integrate_rf(&f, &[qi(-1), qi(1)]).is_err());
}

#[test]
fn scalar_wkb() {
    // d = 1, L = x: M = 1 and Ψ = exp(ℏ⁻¹∫ x dx)
    let l = Matrix::from_rows(alloc::vec![alloc::vec![RF::z()]]);
    let lp = crate::laxpair::LaxPair::new(1, 3, alloc::vec![l], None).unwrap();
    let curve = SpectralCurve::new(RF::z(), RF::z(), None).unwrap();
    let ms = m_series(&lp, &curve, 3).unwrap();
    let psi = recover_psi(&ms, &[qi(1), qi(3)], 50).unwrap();
    assert!(close(&psi.exponent, 4.0, 1e-40));
    assert!(close(&psi.entries[0][0], 1.0, 1e-40));
    assert!(psi.entries[0][1..].iter().all(|c| to_f64(c).abs() < 1e-40));
}

#[test]
fn airy_psi() {
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    // S = ∫₁⁴ 2z² dz = 42; Ψ₁₁⁽⁰⁾ = M₁₁⁽⁰⁾ √(1/4) = 1/4
    let psi = recover_psi(&ms, &[qi(1), qi(4)], 50).unwrap();
    assert!(close(&psi.exponent, 42.0, 1e-40));
    assert!(close(&psi.entries[0][0], 0.25, 1e-40));
    for path in [[qi(1), qi(2)], [q(3, 2), q(5, 2)], [qi(-1), qi(-3)]] {
        let c = psi_check(&ms, &path, 50, 3).unwrap();
        assert!(c.ode.iter().all(|r| *r < 1e-30), "{c:?}");
        assert!(c.projector < 1e-30);
    }
}

#[test]
fn airy_exponential_formula() {
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    let mut tr = TopRec::new(&p.curve).unwrap();
    let pairs = [(qi(2), qi(1)), (q(5, 2), q(3, 2)), (qi(3), qi(2)), (q(3, 2), q(11, 4)), (q(6, 5), q(13, 5))];
    let r = conjecture_check(&p.curve, &mut tr, &ms, &pairs, 2, 50).unwrap();
    assert_eq!(r.rows.len(), 20);
    // nontrivial rows: the ℏ¹ coefficient at (2, 1) is −11/384
    assert_eq!(&r.rows[2].rhs[..12], "-0.028645833");
    assert!(r.rows.iter().filter(|w| w.order > 0).all(|w| w.rhs.parse::<f64>().unwrap().abs() > 1e-4));
    assert!(r.passed(), "{:#?}", r.rows.iter().filter(|w| w.diff >= r.tolerance).collect::<alloc::vec::Vec<_>>());
}
