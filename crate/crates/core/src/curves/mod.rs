//! Plane cubics attached to `f_{A,B}`: the determinant cubic, its
//! factorizations, a linear-factor oracle and rational point counts.

pub mod branch;
pub mod cubic;
pub mod determinant;
pub mod lines;
pub mod transform;

use thiserror::Error;

use crate::gf::GfError;

pub use branch::{
    loci, verify_branch_factorization, FactorCheck, FactorReport, Labeling, Locus, Outcome,
};
pub use cubic::{line_divides, monomial_index, LinearForm, TernaryCubic, MONOMIALS};
pub use determinant::{
    build_f_det, build_f_printed, check_det_identity, embed_cubic, eval_at_conjugates,
    f_det_formula,
};
pub use lines::{find_linear_factors, lines_over, LineFactor, LineSearch};
pub use transform::{count_nonzero_det_roots, count_nonzero_fq_zeros, transform_h};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("(A, B) = ({a}, {b}) lies on no factorization locus")]
    NotOnLocus { a: u32, b: u32 },
    #[error("-3 is not a square in F_q")]
    SquareRootUnavailable,
    #[error("transformed coefficient is not fixed by Frobenius")]
    CoefficientNotInSubfield,
    #[error("element does not generate a normal basis")]
    NotNormal,
    #[error(transparent)]
    Gf(#[from] GfError),
}
