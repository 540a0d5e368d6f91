//! Numerical fractional calculus on uniform grids.
//!
//! Differintegrals of arbitrary real order `alpha` (negative integrates,
//! positive differentiates) by three discretizations:
//!
//! | Method | Functions | Cost |
//! |--------|-----------|------|
//! | Grünwald-Letnikov | [`gl_point`], [`gl_matrix_apply`], [`gl_convolve_direct`], [`gl_array_fast`] | `O(n)` point, `O(n^2)` matrix, `O(n log n)` fast |
//! | improved Grünwald-Letnikov | [`gli_array`] | `O(n^2)` |
//! | Riemann-Liouville quadrature | [`rl_point`], [`rl_array`], [`rl_matrix`] | `O(n)` point, `O(n^2)` array |
//!
//! Functions are supplied as an [`Input`]: a closure, a parsed [`expr::Expression`],
//! or values already sampled on the grid.
//!
//! ```
//! use fracdiff::{rl_point, Input};
//!
//! let half = rl_point(0.5, &Input::function(f64::sqrt), 0.0, 1.0, 120).unwrap();
//! assert!((half - std::f64::consts::PI.sqrt() / 2.0).abs() < 2e-4);
//! ```

pub mod cli;
pub mod error;
pub mod expr;
pub mod fastconv;
pub mod gl;
pub mod gli;
pub mod grid;
pub mod rl;
pub mod special;

pub use error::{Error, Result};
pub use gl::{
    gl_array_fast, gl_coeffs, gl_convolve_direct, gl_fast_apply, gl_matrix_apply, gl_point,
    CoefficientFilter, GlMatrix,
};
pub use gli::{gli_apply, gli_array, gli_interpolation_coeffs, GliOutput, InterpolationCoefficients};
pub use grid::{function_check, Grid, Input, SampleArray};
pub use rl::{rl_apply, rl_array, rl_coeff, rl_matrix, rl_point, WeightMatrix};
pub use special::{check_values, gamma, is_integer, pochhammer, CheckedInput, ValidatedOrder};
