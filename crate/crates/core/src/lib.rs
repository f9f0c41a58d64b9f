//! Exact q-characters of fundamental modules of the quantum affine algebra of
//! type D_n, computed from a lattice-path model and checked against the
//! kernels of the screening operators.
//!
//! The crate is organized bottom-up:
//!
//! - [`cartan`]: Dynkin data, A-monomials, the dual-node involution and
//!   closed-form dimensions.
//! - [`laurent`]: sparse Laurent monomials and polynomials in `Y[i,l]`.
//! - [`paths`]: the path families, their corners, moves and lattice structure.
//! - [`weights`]: the monomial (or binomial) attached to each path.
//! - [`qchar`]: assembled q-characters and the counting formulas.
//! - [`screening`]: screening operators used as an independent oracle.

pub mod cartan;
pub mod error;
pub mod laurent;
pub mod paths;
pub mod qchar;
pub mod screening;
pub mod weights;

pub use cartan::DynkinD;
pub use error::{Error, Result};
pub use laurent::{LaurentPolynomial, Monomial, YVar};
pub use paths::{Corner, Family, LatticePoint, Path, Polarity, Side, Site};
pub use qchar::QCharacter;
pub use screening::{ScreeningElement, VerificationReport};
pub use weights::TravelConfig;
