//! Natural numbers as Ferrers diagrams.
//!
//! Every `n >= 1` factors uniquely as `p_a1^b1 ... p_as^bs`; drawing `b_i` rows
//! of length `a_i` gives a Ferrers diagram, and this map is a bijection onto
//! all diagrams. Diagram containment ("subfigure") is a partial order that is
//! monotone in `n`, which yields the prime-counting lower bound
//! `pi(x) >= floor(lg x) / lg(floor(lg x) + 1)`.
//!
//! - [`primes`]: sieve, `pi(x)`, `p_k`, prime indices, factorization.
//! - [`diagram`]: the bijection and the subfigure order.
//! - [`bounds`]: subfigure counting, the lower bound and verification sweeps.
//! - [`render`]: ASCII, SVG, TikZ and JSON output.

pub mod bounds;
pub mod diagram;
mod error;
pub mod primes;
pub mod render;

pub use bounds::{BoundReport, RectDims, VerificationReport};
pub use diagram::Partition;
pub use error::{Error, Result};
pub use primes::{Factorization, PrimeTable};
