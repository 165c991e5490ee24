//! Exact p-adic shift operators and their functional models.
//!
//! The crate is organized around one pair of operators on truncated
//! ultrametric sequence spaces -- the unilateral shift S and the backward
//! shift T -- together with the functional models that realize them:
//!
//! - [`padic`]: capped-precision scalars of Q_p, the numeric substrate;
//! - [`sequence`]: truncations of c_0 and l^infinity, the shifts, the
//!   duality pairing, annihilator subspaces, and cyclic vectors;
//! - [`mahler`]: continuous functions on Z_p through their values at
//!   0..M, the Mahler transform, indefinite sum, and difference operator;
//! - [`tate`]: truncated power series with the Gauss norm, multiplication
//!   shifts, reduction modulo monic integral polynomials, and the ideal
//!   lattice;
//! - [`models`]: the factorial-weighted differentiation model and the
//!   universality embedding for contractions on Q_p^d;
//! - [`io`]: the JSON wire formats shared with the command-line tool;
//! - [`sample`]: deterministic random instance generators for property
//!   suites.
//!
//! All values are immutable and every operation is a pure function, so
//! everything here is safe for unrestricted concurrent use.

pub mod error;
pub mod io;
pub mod mahler;
pub mod models;
pub mod padic;
pub mod sample;
pub mod sequence;
pub mod tate;

pub use error::{Error, Result};
pub use padic::{PNorm, PadicScalar, PrimeConfig};
