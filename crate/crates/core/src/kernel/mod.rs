//! The computational substrate: exact scalars, truncated `h`-series,
//! PBW monomials, enveloping-algebra arithmetic, tensor powers, and
//! deterministic exact linear solving.

pub mod field;
pub mod monomial;
pub mod series;
pub mod env;
pub mod tensor;
pub mod linear;
