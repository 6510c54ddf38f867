//! Exact elimination-theory toolkit over the rationals.
//!
//! * [`poly`]: sparse multivariate polynomials and their text grammar;
//! * [`linalg`]: dense rational matrices, fraction-free determinants;
//! * [`euler`]: Euler characteristics on a degree lattice and the alternating
//!   intersection-number sum;
//! * [`cube`]: cube arrangements in a free strictly-commutative Picard
//!   category and their signed product `delta`;
//! * [`groebner`]: Gröbner bases, zero-dimensional quotients and norms;
//! * [`resultant`]: the multivariate resultant (Macaulay, Poisson, Sylvester);
//! * [`job`]: JSON job files and reports behind the command-line tool;
//! * [`selftest`]: the seeded property suite.

pub mod cube;
pub mod error;
pub mod euler;
pub mod groebner;
pub mod job;
pub mod linalg;
pub mod poly;
pub mod resultant;
pub mod selftest;

pub use error::{Error, Result};
pub use poly::{parse_polynomial, Polynomial, Rational};
