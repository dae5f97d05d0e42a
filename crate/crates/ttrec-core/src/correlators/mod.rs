//! M(x.e_a) expansions, determinantal correlators, loop equations and the topological-type checks.

mod loops;
mod mseries;
mod tau;
mod tt;
mod wn;

pub use wn::{coef, limit, set_partitions, Correlators, Slot};
pub use loops::{determinant_side, loop_eq_check, loop_sample, LoopReport, LoopSample};
pub use tt::{identification, leading_order_witnesses, leading_terms, omega_at, parity_witnesses, pole_witnesses, symbolic_table, tt_check, Condition, TtConfig, TtReport};
pub use tau::{omega1_series, tau_t_derivative};
pub use mseries::{completeness, eval_matrix, m0, m_invariants, m_series, MInvariants, MSeries};

#[cfg(test)]
mod tests;
