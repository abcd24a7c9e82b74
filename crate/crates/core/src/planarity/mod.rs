//! Planarity of `f_{A,B}(x) = x^{q^2+1} + A x^{q+1} + B x^2` over `F_{q^3}`.
//!
//! Three deciders are provided and cross-checked by [`scan`]:
//!
//! - the closed-form classification ([`classify_pair`]),
//! - a determinant sweep over the Dickson matrix of the difference map
//!   ([`is_planar_det`]),
//! - brute force on the difference maps themselves ([`brute_is_planar`]).
//!
//! Note on the polynomial: the `B x^2` term is what makes the difference map
//! carry the coefficient `2BC` on `x`. Writing the function as
//! `x(x^{q^2} + A x^q + B)` or `x(x^{q^2} + A x^q + x)` does not produce that
//! derivative, so neither form is used here.

pub mod brute;
mod deciders;
pub mod scan;
mod sparse;

pub use brute::{brute_is_planar, brute_is_planar_pair, f_ab_values, BruteContext};
pub use deciders::{
    classify_pair, count_formula, det_value, difference_triple, f_poly, is_planar_det,
    printed_matrix, prop1_necessary, satisfied_branches, Branch, PairClass, Verdict,
};
pub use scan::{scan, Method, PairRecord, ScanReport};
pub use sparse::{reduce_exponent, SparsePoly};
