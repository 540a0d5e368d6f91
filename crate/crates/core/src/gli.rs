//! Improved Grünwald-Letnikov differintegration.
//!
//! The GL history is evaluated at the half-shifted points `x_j + alpha h / 2 - k h`,
//! each approximated by three-point Lagrange interpolation from its neighbours:
//!
//! ```text
//! f_{i + alpha/2} ~ prv f_{i-1} + crr f_i + nxt f_{i+1}
//! ```
//!
//! Boundary handling:
//! * below the grid, `f_{-1}` is taken as zero, matching the zero-padded history;
//! * past the grid, a callable input is evaluated once at `b + h`. Pre-sampled
//!   input has no such point, so the last entry copies the second-to-last and
//!   [`GliOutput::endpoint_estimated`] is set. Orders whose `nxt` weight is
//!   zero (`alpha = 0` and `alpha = -2`) never need it.

use crate::error::Result;
use crate::gl::gl_coeffs;
use crate::grid::{self, Input, SampleArray};
use crate::special::ValidatedOrder;

/// Interpolation weights for `f_{j-1}`, `f_j` and `f_{j+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationCoefficients {
    pub prv: f64,
    pub crr: f64,
    pub nxt: f64,
}

impl InterpolationCoefficients {
    /// Interpolated value at `i + alpha / 2` given `f_{i-1}, f_i, f_{i+1}`.
    pub fn interpolate(&self, prev: f64, curr: f64, next: f64) -> f64 {
        self.prv * prev + self.crr * curr + self.nxt * next
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.prv, self.crr, self.nxt]
    }
}

pub fn gli_interpolation_coeffs(alpha: f64) -> InterpolationCoefficients {
    let a2 = alpha * alpha;
    InterpolationCoefficients {
        prv: a2 / 8.0 - alpha / 4.0,
        crr: 1.0 - a2 / 4.0,
        nxt: alpha / 4.0 + a2 / 8.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GliOutput {
    pub values: Vec<f64>,
    /// True when the last entry was copied from index `n - 2` because no
    /// sample past the right endpoint was available.
    pub endpoint_estimated: bool,
}

/// GLI differintegral of `samples`.
///
/// `beyond` is `f(b + h)`; when `None`, the last entry is estimated from the
/// second-to-last unless the order gives that point zero weight.
pub fn gli_apply(alpha: f64, samples: &SampleArray, beyond: Option<f64>) -> Result<GliOutput> {
    let order = ValidatedOrder::new(alpha)?;
    let alpha = order.get();
    let n = samples.len();
    let weights = gli_interpolation_coeffs(alpha);
    let filter = gl_coeffs(alpha, n);
    let b = filter.coefficients();
    let scale = samples.grid().h().powf(-alpha);

    // ext[i + 1] = f_i, with ext[0] = f_{-1} = 0 and ext[n + 1] = f_n when known.
    let mut ext = Vec::with_capacity(n + 2);
    ext.push(0.0);
    ext.extend_from_slice(samples.values());
    // When nxt == 0 (alpha = 0 or -2) the point past the grid carries no
    // weight, so the last entry is exact without it.
    let needs_beyond = weights.nxt != 0.0;
    ext.push(beyond.unwrap_or(0.0));

    let computable = if beyond.is_some() || !needs_beyond { n } else { n - 1 };
    let mut values = Vec::with_capacity(n);
    for j in 0..computable {
        let (mut prev, mut curr, mut next) = (0.0, 0.0, 0.0);
        for (k, &bk) in b[..=j].iter().enumerate() {
            let i = j - k + 1;
            prev += bk * ext[i - 1];
            curr += bk * ext[i];
            next += bk * ext[i + 1];
        }
        values.push(scale * weights.interpolate(prev, curr, next));
    }
    let endpoint_estimated = computable < n;
    if endpoint_estimated {
        let last = values[n - 2];
        values.push(last);
    }
    Ok(GliOutput {
        values,
        endpoint_estimated,
    })
}

/// GLI differintegral of `input` on `Grid(a, b, n)`.
///
/// A callable is also evaluated at `b + h`; that value must be finite.
pub fn gli_array(alpha: f64, input: &Input<'_>, a: f64, b: f64, n: usize) -> Result<GliOutput> {
    let order = ValidatedOrder::new(alpha)?;
    let samples = grid::function_check(input, a, b, n)?;
    let beyond = input
        .evaluate(samples.grid().point(n), n)
        .transpose()?;
    gli_apply(order.get(), &samples, beyond)
}
