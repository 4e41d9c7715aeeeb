//! Gamma function, the Airy kernel of the boundary forcing operators, and
//! the Riemann-Liouville fractional integral family.

mod airy;
mod gamma;

pub use airy::{airy_a, airy_ai, AiryTable, CBRT3_INV};
pub use gamma::{gamma_fn, recip_gamma};
