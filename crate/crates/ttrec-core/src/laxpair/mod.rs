//! Lax pairs, their spectral curves, and executable checks of the sufficient assumptions.

mod assumptions;
mod charpoly;
mod classify;
mod poisson;

use alloc::string::String;
use alloc::vec::Vec;

pub use assumptions::{assumption_report, check_a1, check_a3, check_a5, default_a5_points, gamma_relation_holds, solve_gamma, solve_v, A3Report, A5Report, A5Violation, AssumptionReport, CheckResult, Status};
pub use charpoly::{char_poly, char_poly_curve, verify_parametrization, CharPoly, ParamReport};
pub use classify::{classify_y_poles, classify_y_powers};
pub use poisson::{poisson_check, PoissonReport};

use crate::algebra::{Matrix, Q, RF};
use crate::{Error, Result};

/// ℏ∂ₓΨ = L Ψ, ℏ∂ₜΨ = R Ψ with L, R given order by order in ℏ.
#[derive(Clone, Debug, PartialEq)]
pub struct LaxPair {
    pub d: usize,
    /// ℏ-truncation order.
    pub k: usize,
    pub params: Vec<(String, Q)>,
    /// L⁽⁰⁾, L⁽¹⁾, ...; missing orders up to k are zero.
    pub l: Vec<Matrix<RF>>,
    pub r: Option<Vec<Matrix<RF>>>,
}

impl LaxPair {
    pub fn new(d: usize, k: usize, l: Vec<Matrix<RF>>, r: Option<Vec<Matrix<RF>>>) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::Invalid("L needs at least the ℏ⁰ term".into()));
        }
        for m in l.iter().chain(r.iter().flatten()) {
            if m.rows() != d || m.cols() != d {
                return Err(Error::Invalid(alloc::format!("matrix of size {}x{} in a rank-{d} Lax pair", m.rows(), m.cols())));
            }
        }
        if l.len() > k + 1 {
            return Err(Error::Invalid("more L orders than the truncation order".into()));
        }
        Ok(LaxPair { d, k, params: Vec::new(), l, r })
    }
    /// Named parameters, kept sorted by name.
    pub fn with_params(mut self, mut params: Vec<(String, Q)>) -> Self {
        params.sort_by(|a, b| a.0.cmp(&b.0));
        self.params = params;
        self
    }
    /// Change the ℏ-truncation order; L orders beyond it are dropped.
    pub fn with_k(mut self, k: usize) -> Self {
        self.l.truncate(k + 1);
        if let Some(r) = &mut self.r {
            r.truncate(k + 1);
        }
        self.k = k;
        self
    }
    pub fn param(&self, name: &str) -> Option<&Q> {
        self.params.iter().find(|p| p.0 == name).map(|p| &p.1)
    }
    pub fn l0(&self) -> &Matrix<RF> {
        &self.l[0]
    }
    pub fn r0(&self) -> Option<&Matrix<RF>> {
        self.r.as_ref().and_then(|r| r.first())
    }
    /// L⁽ᵏ⁾, zero beyond the supplied orders.
    pub fn l_order(&self, k: usize) -> Matrix<RF> {
        self.l.get(k).cloned().unwrap_or_else(|| Matrix::filled(self.d, self.d, RF::zero()))
    }
    /// L⁽ᵏ⁾(x(z)) for k = 0..=kmax.
    pub fn l_pulled_back(&self, x: &RF, kmax: usize) -> Vec<Matrix<RF>> {
        (0..=kmax).map(|k| self.l_order(k).map(|e| e.compose(x))).collect()
    }
    pub fn is_hbar_independent(&self) -> bool {
        self.l.iter().skip(1).all(|m| m.is_zero_matrix())
    }
}
