//! Computer algebra for closure operations over F_p graded rings: a Groebner
//! engine, finitely presented rings and modules, Frobenius machinery, an
//! axiom-checking harness for closure operations, and the phantom-extension /
//! module-modification pipeline, with a small built-in corpus of rings.

pub mod axioms;
pub mod closure;
pub mod corpus;
pub mod error;
pub mod field;
pub mod gb;
pub mod linalg;
pub mod modify;
pub mod module;
pub mod monomial;
pub mod phantom;
pub mod poly;
pub mod ring;
pub mod text;
pub mod vecpoly;

pub use error::Error;
pub use field::PrimeField;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::PresentedRing;
pub use vecpoly::VectorPoly;
