//! Exact-arithmetic engine for quantizing finite-dimensional Lie bialgebras
//! and Poisson homogeneous spaces order by order in the deformation
//! parameter `h`.
//!
//! The pipeline runs: validate a Lie bialgebra, build its Drinfeld double
//! and classical r-matrix, solve a rational Drinfeld associator from the
//! pentagon and hexagon equations, solve the twist `J = 1 + h r/2 + ...`,
//! and produce star-product / coproduct tables on truncated function
//! algebras together with machine checks of every claimed identity (Hopf
//! axioms, locality, skewness, Jacobi, coassociativity, equivariance).
//!
//! All coefficient arithmetic is exact. The core is generic over the
//! scalar type through [`Field`]; the concrete instantiation used by the
//! whole pipeline is [`Scalar`] (arbitrary-precision rationals), so no
//! floating point can enter any computation.

pub mod kernel;
pub mod lie;
pub mod bialgebra;
pub mod double;
pub mod functions;
pub mod poisson;
pub mod quadruple;
pub mod induced;
pub mod dk;
pub mod associator;
pub mod twist;
pub mod verma;
pub mod quantize;
pub mod bidiff;
pub mod functorial;
pub mod homogeneous;
pub mod report;
pub mod presets;

pub use kernel::field::{Field, Scalar};
pub use kernel::series::{Capped, HSeries};

/// Enveloping-algebra element over the pipeline scalar.
pub type Env = kernel::env::EnvElement<Scalar>;
/// Two-leg tensor over the pipeline scalar.
pub type Tensor2 = kernel::tensor::Tensor<Scalar, 2>;
/// Three-leg tensor over the pipeline scalar.
pub type Tensor3 = kernel::tensor::Tensor<Scalar, 3>;
/// Truncated polynomial function over the pipeline scalar.
pub type Fun = functions::FunElement<Scalar>;
