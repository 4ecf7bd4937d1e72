pub use crate::catalog::{dual_fano, fano};
use crate::element_set::ElementSet;

pub fn set(xs: &[usize]) -> ElementSet {
    xs.iter().collect()
}

/// Monomials of the worked Fano example (natural labels, base {1,2,3}).
pub const FANO_TABLE: [&str; 28] = [
    "1", "x4", "x4^2", "x5", "x5^2", "x6", "x6^2", "x7", "x7^2", "x7^3", "x4x5", "x4x5^2",
    "x4^2x5", "x4x6", "x4x6^2", "x4^2x6", "x4x7", "x4^2x7", "x5x6", "x5x6^2", "x5^2x6", "x5x7",
    "x5^2x7", "x6x7", "x6^2x7", "x4x5x7", "x4x6x7", "x5x6x7",
];

/// Monomials of the worked dual-Fano example (base {1,2,3,4}).
pub const DUAL_FANO_TABLE: [&str; 28] = [
    "1", "x5", "x5^2", "x5^3", "x6", "x6^2", "x6^3", "x7", "x7^2", "x7^3", "x5x6", "x5^2x6",
    "x5x6^2", "x5^3x6", "x5x6^3", "x5x7", "x5^2x7", "x5x7^2", "x5^3x7", "x5x7^3", "x6x7",
    "x6^2x7", "x6x7^2", "x6^3x7", "x6x7^3", "x5x6x7", "x5^2x6x7", "x5x6^2x7",
];

pub fn ideal(xs: &[&str]) -> crate::oseq::OrderIdeal {
    xs.iter().map(|s| s.parse::<crate::oseq::Monomial>().unwrap()).collect()
}
