//! Exact evaluation and comparison of finite and eventually periodic
//! continued fractions, plus certified extremal completions over {1,2}.

mod convergents;
mod extremal;
mod periodic;

pub use convergents::{agreement_gap, eval_finite, Convergents};
pub use extremal::{
    approx_lambda_bounds, bound_lambda_window, extremal_tail, preferred_digit, Direction, LambdaBounds, LambdaExpression,
    Window,
};
pub use periodic::{compare_words, eval_periodic, Mobius};
