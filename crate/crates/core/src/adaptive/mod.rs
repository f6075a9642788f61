//! Adaptive solvers and the exhaustive minimax referee.

mod exact;
mod gainanov;
mod solve;

pub use exact::{exact_f, exact_f_with, ExactF, ExactFOptions, EXACT_F_MAX_N};
pub use gainanov::gainanov_find_one;
pub use solve::{solve, solve_k2, solve_traced, theorem3_bound, SolveReport, SOLVE_MAX_N};

pub(crate) use exact::ceil_log2;
