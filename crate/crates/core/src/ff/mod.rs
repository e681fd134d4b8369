//! Exact arithmetic in `F_r`, `F_r[T]` and `F_r(T)`.

mod enumerate;
mod field;
mod poly;
mod ratfunc;

pub use enumerate::enumerate_a;
pub use field::{FieldElement, FieldRef, FiniteField};
pub use poly::{FqPoly, PolyStyle};
pub use ratfunc::RatFunc;
