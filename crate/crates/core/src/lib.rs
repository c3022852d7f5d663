//! Exact intersection theory on Hurwitz spaces of degree 3, 4 and 5 covers.

pub mod bundle;
pub mod ce;
pub mod cli;
pub mod exact;
pub mod pl;
pub mod splitting;
