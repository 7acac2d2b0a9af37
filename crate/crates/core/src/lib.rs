//! Exact Hankel determinants of convolution powers of Catalan numbers and
//! Narayana polynomials, with executable checks of the identities they obey.
//!
//! Scalars are arbitrary-precision integers ([`exactring::Integer`]) or
//! integer polynomials in `t` ([`exactring::UniPoly`]); determinants are
//! computed by fraction-free elimination so no value is ever rounded.

pub mod catalanseq;
pub mod cli;
pub mod error;
pub mod exactring;
pub mod golden;
pub mod hankel;
pub mod pathoracle;
pub mod powerseries;
pub mod report;
pub mod theoremcheck;

pub use error::{Error, Result};
pub use exactring::{BiPoly, Integer, Poly, Ring, UniPoly};
pub use powerseries::Series;
