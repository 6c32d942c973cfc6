//! Exact computations with power-closed ideals over Q and Q(sqrt m).

pub mod arith;
pub mod certify;
pub mod cyclotomic;
pub mod error;
pub mod exec;
pub mod expr;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod lattice;
mod modular;
pub mod multipoly;
pub mod powerpoly;
pub mod principal;
pub mod unipoly;
pub mod variety;

pub use error::{Error, Result};
pub use exec::Exec;
pub use field::{Field, FieldElement, Rational};
pub use groebner::{CancelToken, GbConfig, GroebnerBasis};
pub use ideal::{Ideal, RingMode};
pub use multipoly::{Monomial, MultiPoly, TermOrder};
pub use unipoly::UniPoly;
