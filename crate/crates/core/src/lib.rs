//! Exact computation of Carlitz-module analogues of Stirling, Bernoulli and
//! Cauchy numbers over `F_r[T]`, together with the classical hypergeometric
//! Bernoulli and Cauchy numbers and associated Stirling numbers over `Q`.
//!
//! Every quantity is available through at least two independent routes so
//! that the identities linking them can be checked exactly.

pub mod carlitz;
pub mod classical;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod ff;
pub mod limits;
pub mod series;
pub mod stirling;
pub mod verify;

pub use carlitz::{AdditivePoly, CarlitzCoeffSeq, CarlitzContext, CarlitzKind};
pub use classical::{AssocKind, AssocStirlingTable, HyperFamily, HyperNumberSeq, Method};
pub use error::{Error, Result};
pub use ff::{FieldElement, FieldRef, FiniteField, FqPoly, PolyStyle, RatFunc};
pub use limits::Limits;
pub use series::{CoeffRing, RatFuncField, Rationals, TruncSeries};
pub use stirling::{verify_orthogonality, OrthogonalityReport, StirlingCarlitzTable, StirlingKind};
