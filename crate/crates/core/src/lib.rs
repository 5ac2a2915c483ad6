//! Enumeration of the monogenizations of a quartic order `Z[ξ]`.
//!
//! Starting from the minimal polynomial `T⁴ + a₁T³ + a₂T² + a₃T + a₄` of `ξ`,
//! the search is reduced to a cubic Thue equation `F(U, V) = ±1` for the cubic
//! resolvent `F`, and then, for every solution `(u₀, v₀)`, to a quartic Thue
//! equation obtained by parametrizing the conic `v₀Q₁ − u₀Q₂ = 0`. Every
//! candidate is verified by an exact index computation, and the brute-force
//! routines in [`oracle`] give an independent reference on bounded boxes.
//!
//! All arithmetic is exact (`num_bigint::BigInt`); there is no floating point
//! anywhere in the library.

pub mod algebra;
pub mod error;
pub mod forms;
pub mod monogenize;
pub mod oracle;
pub mod thue;

pub use error::{Error, Result};
pub use forms::QuarticGenerator;
pub use monogenize::{enumerate_monogenizations, PipelineConfig, PipelineReport};
