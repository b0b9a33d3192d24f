//! Numeric oracle: adaptive quadrature, big-float evaluation and the
//! polylogarithm series. Used to cross-check exact results, never to
//! produce them.

mod bigfloat;
mod eval;
mod polylog;
mod quad;

pub use bigfloat::{Approx, Ctx};
pub use eval::{eval_at, eval_expr};
pub(crate) use eval::eval_expr_in;
pub use polylog::{polylog, polylog_series, Series};
pub use quad::{quad_oracle, quad_oracle_capped, QuadResult, MAX_SUBDIVISIONS};
