//! Exact arithmetic over ℚ(i)(√q): scalars, polynomials, truncated series and
//! reduced rational functions in `t = q_F^{-s}`.

pub mod algnum;
pub mod gauss;
pub(crate) mod gint;
pub mod poly;
pub mod ratfunc;
pub mod series;

pub use algnum::AlgNum;
pub use gauss::{parse_rational, rat_to_string, GaussRat};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::Series;
