//! Explicit error constants for the zero-counting formulae of Dirichlet
//! L-functions and Dedekind zeta-functions, together with the numerical
//! machinery to check them: Hurwitz-zeta based L-function evaluation,
//! Dirichlet characters, and zero counting by argument-principle winding.

// `!(x > y)` is used on purpose: it rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod characters;
pub mod constants;
pub mod error;
pub mod quadrature;
pub mod special;
pub mod zerocount;

pub use characters::{enumerate_characters, gauss_sum, kronecker_character, DirichletCharacter};
pub use constants::{
    c1, c2, d_constants, derive_params, render_table, BoundParameters, PRule, TableFormat, Theorem,
    TheoremOneConstants, TheoremTwoConstants,
};
pub use error::{Error, Result};
pub use quadrature::{integrate, QuadratureResult};
pub use special::{ComplexPoint, EvalTolerance};
pub use zerocount::{
    count_zeros, main_term, verify, Rectangle, Subject, TheoremBound, ZeroCountReport,
};
