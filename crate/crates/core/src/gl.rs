//! Grünwald-Letnikov differintegration.
//!
//! The differintegral of order `alpha` at grid index `j` is approximated by
//! `h^-alpha * sum_{k=0}^{j} b_k f_{j-k}`, where `b_k = (-alpha)_k / k!` are
//! the generalized binomial coefficients. Four evaluation paths share the same
//! coefficient filter:
//!
//! * [`gl_point`]: the right endpoint only, `O(n)`.
//! * [`gl_matrix_apply`]: lower-triangular Toeplitz matrix times samples, `O(n^2)`.
//! * [`gl_convolve_direct`]: the same sums written as a direct convolution, `O(n^2)`.
//! * [`gl_array_fast`] / [`gl_fast_apply`]: transform-based convolution, `O(n log n)`.

use crate::error::Result;
use crate::fastconv;
use crate::grid::{self, Grid, Input, SampleArray};
use crate::special::ValidatedOrder;

/// Largest order for which [`GlMatrix`] stores its entries explicitly.
pub const DENSE_LIMIT: usize = 1024;

/// The coefficients `b_0, ..., b_{m-1}` used as a convolution kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientFilter {
    alpha: f64,
    coefficients: Vec<f64>,
}

impl CoefficientFilter {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// Builds the first `m` coefficients by `b_0 = 1`, `b_k = b_{k-1} (k - 1 - alpha) / k`.
///
/// For a nonnegative integer order `p` the recurrence hits an exact zero at
/// `k = p + 1`, so every later coefficient is exactly zero as well.
pub fn gl_coeffs(alpha: f64, m: usize) -> CoefficientFilter {
    let mut coefficients = Vec::with_capacity(m);
    let mut b = 1.0;
    for k in 0..m {
        if k > 0 {
            b *= (k as f64 - 1.0 - alpha) / k as f64;
        }
        coefficients.push(b);
    }
    CoefficientFilter {
        alpha,
        coefficients,
    }
}

/// `sum_{i=0}^{j} b_{j-i} f_i`, row `j` of the Toeplitz product, accumulated in
/// column order. Every path that promises bit-identical results goes through here.
#[inline]
fn toeplitz_row(filter: &[f64], values: &[f64], j: usize) -> f64 {
    values[..=j]
        .iter()
        .enumerate()
        .fold(0.0, |acc, (i, &f)| acc + filter[j - i] * f)
}

fn step_scale(grid: &Grid, alpha: f64) -> f64 {
    grid.h().powf(-alpha)
}

/// The GL differintegral at the right endpoint `b`.
pub fn gl_point(alpha: f64, input: &Input<'_>, a: f64, b: f64, n: usize) -> Result<f64> {
    let order = ValidatedOrder::new(alpha)?;
    let samples = grid::function_check(input, a, b, n)?;
    let filter = gl_coeffs(order.get(), n);
    let sum = toeplitz_row(filter.coefficients(), samples.values(), n - 1);
    Ok(step_scale(samples.grid(), order.get()) * sum)
}

/// Lower-triangular Toeplitz matrix `T[j][k] = b_{j-k}` for `k <= j`.
///
/// Entries are stored (packed by rows) only when `n <= DENSE_LIMIT`; larger
/// matrices are applied straight from the filter with identical arithmetic.
#[derive(Debug, Clone)]
pub struct GlMatrix {
    filter: CoefficientFilter,
    packed: Option<Vec<f64>>,
}

impl GlMatrix {
    pub fn new(alpha: f64, n: usize) -> Self {
        let filter = gl_coeffs(alpha, n);
        let packed = (n <= DENSE_LIMIT).then(|| {
            let b = filter.coefficients();
            (0..n).flat_map(|j| (0..=j).map(move |k| b[j - k])).collect()
        });
        Self { filter, packed }
    }

    pub fn n(&self) -> usize {
        self.filter.len()
    }

    pub fn is_dense(&self) -> bool {
        self.packed.is_some()
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        if k > j {
            0.0
        } else {
            self.filter.coefficients()[j - k]
        }
    }

    /// Unscaled product `T f`.
    ///
    /// # Panics
    /// If `values.len()` differs from the matrix order.
    pub fn apply(&self, values: &[f64]) -> Vec<f64> {
        assert_eq!(values.len(), self.n(), "matrix order / vector length mismatch");
        match &self.packed {
            Some(packed) => (0..self.n())
                .map(|j| {
                    let row = &packed[j * (j + 1) / 2..][..=j];
                    row.iter().zip(values).fold(0.0, |acc, (&t, &f)| acc + t * f)
                })
                .collect(),
            None => (0..self.n())
                .map(|j| toeplitz_row(self.filter.coefficients(), values, j))
                .collect(),
        }
    }
}

/// GL differintegral at every grid point via the Toeplitz matrix product.
pub fn gl_matrix_apply(alpha: f64, samples: &SampleArray) -> Result<Vec<f64>> {
    let order = ValidatedOrder::new(alpha)?;
    let matrix = GlMatrix::new(order.get(), samples.len());
    let scale = step_scale(samples.grid(), order.get());
    Ok(matrix
        .apply(samples.values())
        .into_iter()
        .map(|s| scale * s)
        .collect())
}

/// GL differintegral at every grid point as the direct convolution
/// `sum_i f_i D_{j-i}` with the filter zero padded to the sample length.
pub fn gl_convolve_direct(alpha: f64, samples: &SampleArray) -> Result<Vec<f64>> {
    let order = ValidatedOrder::new(alpha)?;
    let n = samples.len();
    let filter = gl_coeffs(order.get(), n);
    let d = filter.coefficients();
    let f = samples.values();
    let mut out = vec![0.0; n];
    for (i, &fi) in f.iter().enumerate() {
        for (j, slot) in out.iter_mut().enumerate().skip(i) {
            *slot += fi * d[j - i];
        }
    }
    let scale = step_scale(samples.grid(), order.get());
    out.iter_mut().for_each(|v| *v *= scale);
    Ok(out)
}

/// GL differintegral at every grid point via transform-based convolution.
pub fn gl_fast_apply(alpha: f64, samples: &SampleArray) -> Result<Vec<f64>> {
    let order = ValidatedOrder::new(alpha)?;
    let filter = gl_coeffs(order.get(), samples.len());
    let scale = step_scale(samples.grid(), order.get());
    let mut out = fastconv::convolve(samples.values(), filter.coefficients())?;
    out.iter_mut().for_each(|v| *v *= scale);
    Ok(out)
}

/// Samples `input` on `Grid(a, b, n)` and applies [`gl_fast_apply`].
pub fn gl_array_fast(alpha: f64, input: &Input<'_>, a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    let order = ValidatedOrder::new(alpha)?;
    let samples = grid::function_check(input, a, b, n)?;
    gl_fast_apply(order.get(), &samples)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_examples() {
        assert_eq!(gl_coeffs(0.0, 4).coefficients(), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(gl_coeffs(1.0, 4).coefficients(), &[1.0, -1.0, 0.0, 0.0]);
        assert_eq!(gl_coeffs(0.5, 4).coefficients(), &[1.0, -0.5, -0.125, -0.0625]);
        assert_eq!(gl_coeffs(2.0, 5).coefficients(), &[1.0, -2.0, 1.0, 0.0, 0.0]);
        assert!(gl_coeffs(0.3, 0).is_empty());
    }

    #[test]
    fn integer_order_filter_terminates() {
        for p in 0..5 {
            let filter = gl_coeffs(f64::from(p), 40);
            for &b in &filter.coefficients()[p as usize + 1..] {
                assert_eq!(b, 0.0);
            }
        }
    }

    #[test]
    fn zero_order_point_is_the_endpoint_value() {
        let f = |x: f64| (3.0 * x).sin() + x;
        let v = gl_point(0.0, &Input::function(f), -1.0, 2.0, 37).unwrap();
        assert_eq!(v, f(2.0));
    }

    #[test]
    fn first_order_on_a_constant() {
        let grid = Grid::new(0.0, 1.0, 6).unwrap();
        let c = 2.5;
        let s = SampleArray::new(vec![c; 6], grid).unwrap();
        let out = gl_matrix_apply(1.0, &s).unwrap();
        assert!((out[0] - c / grid.h()).abs() <= 1e-14 * out[0]);
        assert!(out[1..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn matrix_endpoint_matches_point_bitwise() {
        let s = grid::function_check(&Input::function(f64::sqrt), 0.0, 1.0, 120).unwrap();
        let m = gl_matrix_apply(0.5, &s).unwrap();
        let p = gl_point(0.5, &Input::function(f64::sqrt), 0.0, 1.0, 120).unwrap();
        assert_eq!(m[119].to_bits(), p.to_bits());
    }

    #[test]
    fn dense_and_streamed_matrix_agree_bitwise() {
        let values: Vec<f64> = (0..DENSE_LIMIT + 3).map(|i| (i as f64 * 0.37).cos()).collect();
        let big = GlMatrix::new(0.7, values.len());
        assert!(!big.is_dense());
        let small = GlMatrix::new(0.7, DENSE_LIMIT);
        assert!(small.is_dense());
        let streamed = big.apply(&values);
        let dense = small.apply(&values[..DENSE_LIMIT]);
        for (a, b) in dense.iter().zip(&streamed) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        assert_eq!(big.get(3, 1), big.filter.coefficients()[2]);
        assert_eq!(big.get(1, 3), 0.0);
    }

    #[test]
    fn fast_path_zero_order_is_identity() {
        let data: Vec<f64> = (0..50).map(|i| (i as f64).exp().ln_1p()).collect();
        let out = gl_array_fast(0.0, &Input::samples(&data), 0.0, 1.0, 50).unwrap();
        for (a, b) in out.iter().zip(&data) {
            assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
        }
    }

    #[test]
    fn square_root_endpoint() {
        let exact = std::f64::consts::PI.sqrt() / 2.0;
        let p = gl_point(0.5, &Input::function(f64::sqrt), 0.0, 1.0, 120).unwrap();
        assert!((p - exact).abs() <= 5e-3);
        let fast = gl_array_fast(0.5, &Input::function(f64::sqrt), 0.0, 1.0, 120).unwrap();
        assert!((fast[119] - exact).abs() <= 5e-3);
    }

    #[test]
    fn power_function_endpoint() {
        // D^0.5 x^1.5 at x = 1 is gamma(2.5) / gamma(2) = 1.329340388179137
        let v = gl_point(0.5, &Input::function(|x| x.powf(1.5)), 0.0, 1.0, 2000).unwrap();
        assert!((v - 1.329_340_388_179_137).abs() <= 2e-3);
    }
}
