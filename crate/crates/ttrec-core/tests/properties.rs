use proptest::prelude::*;
use ttrec_core::algebra::{q, qi, Point, Poly, Q, RF};
use ttrec_core::correlators::{completeness, eval_matrix, m_series, omega_at, MSeries};
use ttrec_core::presets;
use ttrec_core::toprec::TopRec;

fn small_q() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_q(), 1..=max_deg + 1).prop_map(Poly::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn rf() -> impl Strategy<Value = RF> {
    (poly(3), nonzero_poly(3)).prop_map(|(n, d)| RF::new(n, d).unwrap())
}

/// Distinct nonzero points with distinct squares, so none coincide on the Airy fiber.
fn airy_points(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((1i64..=40, 1i64..=7, any::<bool>()), n).prop_filter_map("distinct", move |v| {
        let pts: Vec<Q> = v.into_iter().map(|(a, b, s)| if s { q(a, b) } else { -q(a, b) }).collect();
        let sq: Vec<Q> = pts.iter().map(|z| z * z).collect();
        (0..n).all(|i| (0..i).all(|j| sq[i] != sq[j])).then_some(pts)
    })
}

fn airy_ms(k: usize) -> MSeries {
    let p = presets::airy();
    m_series(&p.lax, &p.curve, k).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rf_field_axioms(a in rf(), b in rf(), c in rf()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn rf_evaluation_is_a_homomorphism(a in rf(), b in rf(), x in small_q()) {
        if let (Some(va), Some(vb)) = (a.eval(&x), b.eval(&x)) {
            prop_assert_eq!((&a * &b).eval(&x), Some(&va * &vb));
            prop_assert_eq!((&a + &b).eval(&x), Some(&va + &vb));
        }
    }

    #[test]
    fn rf_derivative_obeys_leibniz(a in rf(), b in rf()) {
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn poly_gcd_divides(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(2)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = Poly::gcd(&ac, &bc);
        prop_assert!(ac.rem(&g).is_zero() && bc.rem(&g).is_zero());
        prop_assert!(g.rem(&c.monic()).is_zero());
    }

    #[test]
    fn residues_sum_to_zero(f in rf()) {
        let mut pts: Vec<Point> = f.den().rational_roots().into_iter().map(|r| Point::Finite(r.0)).collect();
        pts.push(Point::Infinity);
        if f.den().irrational_part().is_constant() {
            let total: Q = pts.iter().map(|p| f.residue(p)).sum();
            prop_assert_eq!(total, qi(0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn recursion_correlators_are_symmetric(z in airy_points(4)) {
        let mut tr = TopRec::new(&presets::airy().curve).unwrap();
        for (g, n) in [(0usize, 3usize), (0, 4), (1, 2)] {
            let mut perm = z[..n].to_vec();
            perm.rotate_left(1);
            perm.swap(0, n - 1);
            prop_assert_eq!(tr.eval(g, n, &z[..n]).unwrap(), tr.eval(g, n, &perm).unwrap());
        }
    }

    #[test]
    fn determinantal_correlators_are_symmetric_and_parity_odd(z in airy_points(3)) {
        let ms = airy_ms(3);
        let perm = [z[1].clone(), z[2].clone(), z[0].clone()];
        for k in 0..=2 {
            prop_assert_eq!(omega_at(&ms, &z, k).unwrap(), omega_at(&ms, &perm, k).unwrap());
        }
        // n + k odd
        prop_assert_eq!(omega_at(&ms, &z, 0).unwrap(), qi(0));
        prop_assert_eq!(omega_at(&ms, &z, 2).unwrap(), qi(0));
        prop_assert_eq!(omega_at(&ms, &z[..2], 1).unwrap(), qi(0));
    }

    #[test]
    fn m_is_a_complete_family_of_projectors(z in airy_points(1)) {
        let ms = airy_ms(3);
        let mk: Vec<_> = ms.m.iter().map(|m| eval_matrix(m, &z[0]).unwrap()).collect();
        for k in 0..mk.len() {
            let mut sq = mk[0].mat_mul(&mk[k]);
            for l in 1..=k {
                sq = sq.mat_add(&mk[l].mat_mul(&mk[k - l]));
            }
            prop_assert_eq!(&sq, &mk[k]);
        }
        let c = completeness(&ms, &[z[0].clone(), -z[0].clone()]).unwrap();
        prop_assert_eq!(&c[0], &ttrec_core::algebra::Matrix::identity(2, &qi(1)));
        prop_assert!(c[1..].iter().all(|m| m.is_zero_matrix()));
    }
}
