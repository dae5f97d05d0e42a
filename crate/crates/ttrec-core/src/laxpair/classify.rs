use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::linsolve::solve;
use crate::algebra::reconstruct::reconstruct_auto;
use crate::algebra::{Matrix, Q, RF};
use crate::curve::{build_c, partial_fractions, regular_samples, Sampler, SpectralCurve};
use crate::{Error, Result};

fn degree_budget(curve: &SpectralCurve) -> usize {
    2 * (curve.y.degree() + curve.x.degree()) + 4
}

fn fibers(curve: &SpectralCurve, n: usize) -> Result<Vec<(Q, Vec<Q>)>> {
    let mut sampler = Sampler::new(0x5eed);
    let zs = regular_samples(curve, &mut sampler, n, &[]);
    if zs.len() < n {
        return Err(Error::NonRational("fibers: too few rational fibers".into()));
    }
    zs.iter()
        .map(|z| {
            let x0 = curve.x.eval(z).unwrap();
            curve.fiber(&x0).map(|f| (x0, f))
        })
        .collect()
}

fn reconstruct_columns(values: &[(Q, Vec<Q>)], width: usize, budget: usize) -> Result<Vec<RF>> {
    (0..width)
        .map(|r| {
            let s: Vec<(Q, Q)> = values.iter().map(|(x, v)| (x.clone(), v[r].clone())).collect();
            reconstruct_auto(&s, budget)
        })
        .collect()
}

/// y(z) = Σ_{r<d} z^r f_r(x(z)).
pub fn classify_y_powers(curve: &SpectralCurve) -> Result<Vec<RF>> {
    let d = curve.d;
    let budget = degree_budget(curve);
    let mut values = Vec::new();
    for (x0, fib) in fibers(curve, budget + 4)? {
        let rows: Vec<Vec<Q>> = fib
            .iter()
            .map(|z| {
                let mut p = Q::from_integer(1.into());
                (0..d)
                    .map(|_| {
                        let c = p.clone();
                        p *= z;
                        c
                    })
                    .collect()
            })
            .collect();
        let b: Vec<Q> = fib.iter().map(|z| curve.y.eval(z).unwrap()).collect();
        values.push((x0, solve(&Matrix::from_rows(rows), &b)?.particular));
    }
    let f = reconstruct_columns(&values, d, budget)?;
    let mut acc = RF::zero();
    let mut zp = RF::one();
    for fr in &f {
        acc = &acc + &(&fr.compose(&curve.x) * &zp);
        zp = &zp * &RF::z();
    }
    if acc != curve.y {
        return Err(Error::Check("z-power decomposition does not reproduce y".into()));
    }
    Ok(f)
}

/// y(z) = Σ_c 𝒴_c(x(z)) w_c(z) over the pole basis w (labels (pole index, r)).
pub fn classify_y_poles(curve: &SpectralCurve) -> Result<Vec<((usize, usize), RF)>> {
    let pd = partial_fractions(&curve.x)?;
    let c = build_c(&pd)?;
    let basis = pd.basis();
    let xp = curve.xprime();
    let budget = degree_budget(curve);
    let mut values = Vec::new();
    for (x0, fib) in fibers(curve, budget + 4)? {
        let mut u = alloc::vec![Q::zero(); curve.d];
        for z in &fib {
            let f = curve.y.eval(z).unwrap() / xp.eval(z).unwrap();
            for (uc, w) in u.iter_mut().zip(&basis) {
                *uc += &f * &w.eval(z).unwrap();
            }
        }
        values.push((x0, c.mul_vec(&u)));
    }
    let ys = reconstruct_columns(&values, curve.d, budget)?;
    let acc = ys.iter().zip(&basis).fold(RF::zero(), |acc, (y, w)| &acc + &(&y.compose(&curve.x) * w));
    if acc != curve.y {
        return Err(Error::Check("pole decomposition does not reproduce y".into()));
    }
    Ok(pd.labels().into_iter().zip(ys).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn curve(x: RF, y: RF) -> SpectralCurve {
        SpectralCurve::new(x, y, None).unwrap()
    }
    fn p(c: &[i64]) -> RF {
        RF::poly(Poly::from_i64(c))
    }

    #[test]
    fn powers() {
        let f = classify_y_powers(&curve(p(&[0, 0, 1]), p(&[0, 1]))).unwrap();
        assert_eq!(f, alloc::vec![RF::zero(), RF::one()]);
        let f = classify_y_powers(&curve(p(&[0, 0, 1]), p(&[0, 0, 0, 1]))).unwrap();
        assert_eq!(f, alloc::vec![RF::zero(), RF::z()]);
        let f = classify_y_powers(&curve(p(&[0, 0, 1]), p(&[0, 1, 1]))).unwrap();
        assert_eq!(f, alloc::vec![RF::z(), RF::one()]);
    }

    #[test]
    fn poles() {
        let inv = RF::new(Poly::one(), Poly::from_i64(&[0, 1])).unwrap();
        let y = classify_y_poles(&curve(inv.clone(), inv)).unwrap();
        assert_eq!(y, alloc::vec![((0, 0 + 1), RF::one())]);
        // Airy in the chart z → 1/u agrees with the z-power decomposition after the change of basis
        let c = curve(p(&[0, 0, 1]), p(&[0, 1]));
        let y = classify_y_poles(&c).unwrap();
        assert_eq!(y.iter().map(|t| t.1.clone()).collect::<Vec<_>>(), classify_y_powers(&c).unwrap());
    }
}
