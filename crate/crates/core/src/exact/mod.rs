//! Exact arithmetic kernel: big rationals, integer partitions, dense
//! polynomials, binomial-basis polynomials in a discrete variable, and
//! Lagrange interpolation.

pub mod binom;
pub mod interp;
pub mod numtheory;
pub mod partition;
pub mod polyq;
pub mod scalar;
