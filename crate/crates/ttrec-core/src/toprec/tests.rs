use super::*;
use crate::algebra::{q, qi, RF};
use crate::presets;

#[test]
fn ranges() {
    assert_eq!(stable_range(1), alloc::vec![(0, 3), (1, 1)]);
    assert_eq!(stable_range(2), alloc::vec![(0, 3), (1, 1), (0, 4), (1, 2)]);
    assert_eq!(&stable_range(3)[4..], &[(0, 5), (1, 3), (2, 1)]);
}

#[test]
fn airy_low_levels() {
    let c = presets::airy().curve;
    let mut tr = TopRec::new(&c).unwrap();
    assert_eq!(tr.branchpoints, alloc::vec![Point::Finite(qi(0))]);
    let zs = [qi(1), qi(2), qi(3)];
    assert_eq!(tr.eval(0, 3, &zs).unwrap(), q(-1, 72));
    assert_eq!(tr.eval(1, 1, &zs[..1]).unwrap(), q(-1, 16));
    // ω₀,₃ = −1/(2 z₁² z₂² z₃²), ω₁,₁ = −1/(16 z⁴)
    assert_eq!(tr.eval_free(1, 1, &[]).unwrap(), RF::inv_linear_pow(&qi(0), 4).scale(&q(-1, 16)));
    assert_eq!(tr.eval_free(0, 3, &[qi(2), qi(3)]).unwrap(), RF::inv_linear_pow(&qi(0), 2).scale(&q(-1, 72)));
    assert!(tr.eval_free(0, 3, &[qi(2), qi(2)]).is_err());
    assert!(tr.eval_free(0, 3, &[qi(0), qi(2)]).is_err());
}

#[test]
fn symmetric_and_residue_free() {
    for c in [presets::airy().curve, presets::painleve6(&Default::default()).unwrap().curve] {
        let mut tr = TopRec::new(&c).unwrap();
        let zs = [q(3, 2), q(5, 2), qi(3), qi(4)];
        let a = tr.eval(0, 4, &zs).unwrap();
        let perm = [zs[2].clone(), zs[0].clone(), zs[3].clone(), zs[1].clone()];
        assert_eq!(a, tr.eval(0, 4, &perm).unwrap());
        for (g, n) in [(0, 3), (1, 1), (1, 2)] {
            let f = tr.eval_free(g, n, &zs[..n - 1]).unwrap();
            for (p, _) in f.den().rational_roots() {
                assert!(tr.branchpoints.contains(&Point::Finite(p.clone())), "pole at {p}");
                assert!(f.residue(&Point::Finite(p)).is_zero());
            }
        }
    }
}
