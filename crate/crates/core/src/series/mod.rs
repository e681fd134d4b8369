//! Truncated formal power series over an exact coefficient ring, with
//! Hasse-Teichmüller derivatives.

mod compositions;
mod ht;
mod ring;
mod trunc;

pub use compositions::{StrictCompositions, WeakCompositions};
pub use ht::{ht_derivative, ht_product_rule, ht_quotient_v1, ht_quotient_v2};
pub use ring::{rational_from_biguint, CoeffRing, RatFuncField, Rationals};
pub use trunc::TruncSeries;
