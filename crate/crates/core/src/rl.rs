//! Riemann-Liouville differintegration by piecewise-linear product quadrature.
//!
//! At grid index `j` the differintegral is `h^-alpha * sum_{k=0}^{j} A_{k,j} f_k`
//! with
//!
//! ```text
//!                 | (j-1)^(1-a) - (j+a-1) j^(-a)                 k = 0
//! A_{k,j} Γ(2-a) = | (j-k+1)^(1-a) + (j-k-1)^(1-a) - 2 (j-k)^(1-a)  1 <= k <= j-1
//!                 | 1                                             k = j
//! ```
//!
//! Powers with a zero base are taken as zero for every exponent. For `a < 1`
//! that is the ordinary value; for `a > 1` it is the finite-part value, and it
//! makes the weights continuous through `a = 1`, where they reduce to the
//! backward difference.

use crate::error::Result;
use crate::grid::{self, Input, SampleArray};
use crate::special::{gamma, ValidatedOrder};

/// Quadrature weights for one order, with the power table `m^(1 - alpha)`
/// precomputed up to some largest row.
struct RlWeights {
    alpha: f64,
    powers: Vec<f64>,
    inv_gamma: f64,
}

impl RlWeights {
    fn new(alpha: f64, rows: usize) -> Result<Self> {
        let order = ValidatedOrder::for_riemann_liouville(alpha)?;
        let alpha = order.get();
        let inv_gamma = 1.0 / gamma(2.0 - alpha)?;
        let powers = (0..=rows).map(|m| zero_base_pow(m, 1.0 - alpha)).collect();
        Ok(Self {
            alpha,
            powers,
            inv_gamma,
        })
    }

    /// `A_{k,j}` including the `1 / Γ(2 - alpha)` factor. Requires `k <= j < rows`.
    #[inline]
    fn weight(&self, k: usize, j: usize) -> f64 {
        let p = &self.powers;
        let raw = if k == j {
            1.0
        } else if k == 0 {
            p[j - 1] - (j as f64 + self.alpha - 1.0) * zero_base_pow(j, -self.alpha)
        } else {
            let m = j - k;
            p[m + 1] + p[m - 1] - 2.0 * p[m]
        };
        raw * self.inv_gamma
    }

    fn row_sum(&self, values: &[f64], j: usize) -> f64 {
        values[..=j]
            .iter()
            .enumerate()
            .fold(0.0, |acc, (k, &f)| acc + self.weight(k, j) * f)
    }
}

fn zero_base_pow(m: usize, exponent: f64) -> f64 {
    if m == 0 {
        0.0
    } else {
        (m as f64).powf(exponent)
    }
}

/// The quadrature weight `A_{k,j}`, already divided by `Γ(2 - alpha)`.
///
/// Entries above the diagonal (`k > j`) are zero.
pub fn rl_coeff(alpha: f64, k: usize, j: usize) -> Result<f64> {
    let weights = RlWeights::new(alpha, j + 1)?;
    Ok(if k > j { 0.0 } else { weights.weight(k, j) })
}

/// Lower-triangular matrix of [`rl_coeff`] values, stored packed by rows.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix {
    alpha: f64,
    n: usize,
    packed: Vec<f64>,
}

impl WeightMatrix {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        if k > j {
            0.0
        } else {
            self.row(j)[k]
        }
    }

    /// Entries `0..=j` of row `j`.
    pub fn row(&self, j: usize) -> &[f64] {
        &self.packed[j * (j + 1) / 2..][..=j]
    }

    /// Unscaled product `R f`.
    ///
    /// # Panics
    /// If `values.len()` differs from the matrix order.
    pub fn apply(&self, values: &[f64]) -> Vec<f64> {
        assert_eq!(values.len(), self.n, "matrix order / vector length mismatch");
        (0..self.n)
            .map(|j| {
                self.row(j)
                    .iter()
                    .zip(values)
                    .fold(0.0, |acc, (&w, &f)| acc + w * f)
            })
            .collect()
    }
}

/// The `n x n` weight matrix; its order matches the sample count.
pub fn rl_matrix(alpha: f64, n: usize) -> Result<WeightMatrix> {
    let weights = RlWeights::new(alpha, n)?;
    let packed = (0..n)
        .flat_map(|j| (0..=j).map(move |k| (k, j)))
        .map(|(k, j)| weights.weight(k, j))
        .collect();
    Ok(WeightMatrix {
        alpha: weights.alpha,
        n,
        packed,
    })
}

/// RL differintegral at every grid point, `h^-alpha R f`.
///
/// Rows are generated on the fly, so memory stays `O(n)`; the arithmetic is
/// the same as `rl_matrix(alpha, n).apply(..)`.
pub fn rl_apply(alpha: f64, samples: &SampleArray) -> Result<Vec<f64>> {
    let n = samples.len();
    let weights = RlWeights::new(alpha, n)?;
    let scale = samples.grid().h().powf(-weights.alpha);
    Ok((0..n)
        .map(|j| scale * weights.row_sum(samples.values(), j))
        .collect())
}

pub fn rl_array(alpha: f64, input: &Input<'_>, a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    ValidatedOrder::for_riemann_liouville(alpha)?;
    let samples = grid::function_check(input, a, b, n)?;
    rl_apply(alpha, &samples)
}

/// RL differintegral at the right endpoint only, in `O(n)`.
pub fn rl_point(alpha: f64, input: &Input<'_>, a: f64, b: f64, n: usize) -> Result<f64> {
    ValidatedOrder::for_riemann_liouville(alpha)?;
    let samples = grid::function_check(input, a, b, n)?;
    let weights = RlWeights::new(alpha, n)?;
    let scale = samples.grid().h().powf(-weights.alpha);
    Ok(scale * weights.row_sum(samples.values(), n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    const INV_GAMMA_1_5: f64 = 1.128_379_167_095_512_6;

    #[test]
    fn zero_order_weights_are_the_identity() {
        for j in 0..12 {
            for k in 0..=j {
                let w = rl_coeff(0.0, k, j).unwrap();
                assert_eq!(w, if k == j { 1.0 } else { 0.0 }, "A[{k},{j}]");
            }
        }
        let m = rl_matrix(0.0, 5).unwrap();
        for j in 0..5 {
            for k in 0..5 {
                assert_eq!(m.get(j, k), if j == k { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn diagonal_and_middle_weights() {
        for j in [0, 1, 7] {
            assert!((rl_coeff(0.5, j, j).unwrap() - INV_GAMMA_1_5).abs() < 1e-14);
        }
        let w = rl_coeff(0.5, 1, 2).unwrap();
        assert!((w - (2f64.sqrt() - 2.0) * INV_GAMMA_1_5).abs() < 1e-14);
        // 40-digit reference: (sqrt(2) - 2) / gamma(1.5) = -0.660989212585294436...
        assert!((w + 0.660_989_212_585_294_4).abs() < 1e-14);
        assert_eq!(rl_coeff(0.5, 3, 2).unwrap(), 0.0);
    }

    #[test]
    fn small_matrices() {
        let one = rl_matrix(0.3, 1).unwrap();
        assert_eq!(one.n(), 1);
        assert_eq!(one.get(0, 0), 1.0 / gamma(1.7).unwrap());

        let m = rl_matrix(0.5, 3).unwrap();
        let expect = [
            rl_coeff(0.5, 0, 2).unwrap(),
            rl_coeff(0.5, 1, 2).unwrap(),
            rl_coeff(0.5, 2, 2).unwrap(),
        ];
        assert_eq!(m.row(2), &expect);
        // A_{0,2} = (1 - 1.5 / sqrt(2)) / Γ(1.5)
        assert!((expect[0] - (1.0 - 1.5 / 2f64.sqrt()) * INV_GAMMA_1_5).abs() < 1e-14);
        assert_eq!(m.get(0, 1), 0.0);
        assert_eq!(m.row(0).len(), 1);
        assert!((m.row(0)[0] - INV_GAMMA_1_5).abs() < 1e-14);
    }

    #[test]
    fn unit_order_gives_backward_difference() {
        let m = rl_matrix(1.0, 4).unwrap();
        assert_eq!(m.row(1), &[-1.0, 1.0]);
        assert_eq!(m.row(3), &[0.0, 0.0, -1.0, 1.0]);
    }

    #[test]
    fn pole_orders_are_rejected() {
        assert_eq!(rl_coeff(2.0, 0, 1), Err(Error::OrderPole(2.0)));
        assert_eq!(rl_matrix(3.0, 4), Err(Error::OrderPole(3.0)));
        let err = rl_point(2.0, &Input::function(f64::exp), 0.0, 1.0, 10).unwrap_err();
        assert_eq!(err, Error::OrderPole(2.0));
    }

    #[test]
    fn point_matches_array_bitwise() {
        let input = Input::function(f64::sqrt);
        let arr = rl_array(0.5, &input, 0.0, 1.0, 120).unwrap();
        let p = rl_point(0.5, &input, 0.0, 1.0, 120).unwrap();
        assert_eq!(arr[119].to_bits(), p.to_bits());

        let samples = grid::function_check(&input, 0.0, 1.0, 120).unwrap();
        let via_matrix = rl_matrix(0.5, 120).unwrap().apply(samples.values());
        let scale = samples.grid().h().powf(-0.5);
        assert_eq!((scale * via_matrix[119]).to_bits(), p.to_bits());
    }

    #[test]
    fn table_values() {
        let sqrt = rl_array(0.5, &Input::function(f64::sqrt), 0.0, 1.0, 120).unwrap();
        assert!((sqrt[119] - 0.886_226_925_453).abs() <= 2e-4);
        let poly = rl_array(0.5, &Input::function(|x| x * x - 1.0), 0.0, 1.0, 120).unwrap();
        assert!((poly[119] - 0.940_315_972_58).abs() <= 1e-3);
        let exp = rl_point(0.5, &Input::function(f64::exp), 0.0, 1.0, 120).unwrap();
        assert!((exp - 2.854_887_835_85).abs() <= 1e-3);
    }

    #[test]
    fn zero_order_point_is_the_endpoint_value() {
        let f = |x: f64| x.cos() * 4.0;
        let v = rl_point(0.0, &Input::function(f), 0.0, 3.0, 25).unwrap();
        assert!((v - f(3.0)).abs() <= 1e-12);
    }
}
