//! Exact local Asai and Rankin–Selberg L-factors, spherical and essential
//! Whittaker values on the torus, and mirabolic period integrals for the pair
//! `(GL_n(E), GL_n(F))` of a quadratic extension of p-adic fields.
//!
//! Every quantity is an exact rational function of `t = q_F^{-s}` with
//! coefficients in ℚ(i)(√q_F). Lattice sums over the torus are truncated by
//! total degree, then compared with closed forms or turned back into rational
//! functions by [`RatFunc::reconstruct`].

pub mod corpus;
pub mod error;
pub mod exact;
pub mod json;
pub mod lfactor;
pub mod local_data;
pub mod period;
pub mod segments;
pub mod whittaker;

pub use error::{Error, Result};
pub use exact::{AlgNum, GaussRat, Poly, RatFunc, Series};
pub use local_data::FieldPair;
pub use segments::{GenericRep, MultChar, Segment, UnramifiedModule};
