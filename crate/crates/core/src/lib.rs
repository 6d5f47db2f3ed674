//! Exact computations in the two-parameter Hecke algebra of type `B_n`:
//! its induced module `V_n`, the characters of `V_n`, the quantum `sl2`
//! action on `V_n` and the zonal spherical functions, which are
//! q-Krawtchouk polynomials.

pub mod characters;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod hecke;
pub mod linalg;
pub mod qgroup;
pub mod qseries;
pub mod scalars;
pub mod spherical;
pub mod verify;
pub mod vmodule;

pub use error::{Error, Result};
pub use field::{Coeff, FromRational, Params};
pub use scalars::{LaurentPoly, Monomial, Rational, Scalar};

/// Symbolic instantiations over the field of rational functions in `p^(1/2)`, `q^(1/2)`.
pub type SymParams = Params<Scalar>;
pub type SymHecke = hecke::HeckeElt<Scalar>;
pub type SymVElt = vmodule::VElt<Scalar>;
pub type SymDual = characters::DualElt<Scalar>;
pub type SymTable = spherical::SphericalTable<Scalar>;

/// Specializations at rational parameter values.
pub type RatParams = Params<Rational>;
pub type RatVElt = vmodule::VElt<Rational>;
pub type RatTable = spherical::SphericalTable<Rational>;

/// Floating-point specializations.
pub type F64Params = Params<f64>;
pub type F64VElt = vmodule::VElt<f64>;
pub type F32Params = Params<f32>;
