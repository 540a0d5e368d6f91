//! Special functions and argument validation shared by every algorithm.
//!
//! The Gamma function uses a Lanczos approximation (Pugh's g = 10.900511,
//! eleven terms) for arguments at or above one half, exact factorial products
//! at positive integers, and the reflection formula below one half. Relative
//! accuracy is around 1e-14 away from poles; it degrades in proportion to
//! `1 / dist(x, pole)` as `x` approaches a nonpositive integer from either
//! side, because `sin(pi x)` loses significant digits there.

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};
use crate::grid::Grid;

/// Absolute tolerance used by [`is_integer`].
pub const INTEGER_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 10.900511;

const LANCZOS_D: [f64; 11] = [
    2.485_740_891_387_535_655_46e-5,
    1.051_423_785_817_219_742_10,
    -3.456_870_972_220_162_354_69,
    4.512_277_094_668_948_237_00,
    -2.982_852_253_235_766_557_21,
    1.056_397_115_771_267_130_77,
    -1.954_287_731_916_458_695_83e-1,
    1.709_705_434_044_412_243_07e-2,
    -5.719_261_174_043_057_812_83e-4,
    4.633_994_733_599_056_367_08e-6,
    -2.719_949_084_886_077_039_10e-9,
];

// 2 * sqrt(e / pi)
const TWO_SQRT_E_OVER_PI: f64 = 1.860_382_734_205_265_717_336_249_247_266_663_112_059_421_841_408_575_5;

// Largest integer argument whose factorial product is still finite.
const MAX_FACTORIAL_ARG: f64 = 171.0;

/// A finite differintegration order.
///
/// Negative orders integrate, positive orders differentiate. Values outside
/// the customary `(-1, 2)` are accepted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidatedOrder(f64);

impl ValidatedOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() {
            Ok(Self(alpha))
        } else {
            Err(Error::NonFiniteOrder(alpha))
        }
    }

    /// Validates an order for the Riemann-Liouville family, which divides by
    /// `gamma(2 - alpha)` and therefore rejects `alpha` in `{2, 3, 4, ...}`.
    pub fn for_riemann_liouville(alpha: f64) -> Result<Self> {
        let order = Self::new(alpha)?;
        let shifted = 2.0 - alpha;
        if shifted <= 0.0 && shifted == shifted.round() {
            return Err(Error::OrderPole(alpha));
        }
        Ok(order)
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Output of [`check_values`]: an order and the grid it will be applied on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckedInput {
    pub order: ValidatedOrder,
    pub grid: Grid,
}

/// `sin(pi * x)` with exact argument reduction, so zeros at the integers are exact.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).round();
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let v = if r <= 0.25 {
        (PI * r).sin()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).cos()
    } else {
        (PI * (1.0 - r)).sin()
    };
    sign * v
}

fn lanczos(x: f64) -> f64 {
    let series = LANCZOS_D
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_D[0], |acc, (k, &d)| acc + d / (x + k as f64 - 1.0));
    let base = (x - 0.5 + LANCZOS_G) / E;
    // Split the power so the intermediate does not overflow near x = 171.
    let half = base.powf(0.5 * (x - 0.5));
    half * (series * TWO_SQRT_E_OVER_PI) * half
}

/// The Gamma function on the real line.
///
/// Returns [`Error::GammaPole`] at `0, -1, -2, ...` and
/// [`Error::GammaOverflow`] when `|gamma(x)|` exceeds `f64::MAX`
/// (roughly `x > 171.62`). Very negative arguments underflow to a signed zero.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Ok(f64::NAN);
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::GammaPole(x));
    }
    let value = if x == x.floor() && x <= MAX_FACTORIAL_ARG {
        (2..x as u32).fold(1.0, |acc, k| acc * f64::from(k))
    } else if x < 0.5 {
        PI / (sin_pi(x) * lanczos(1.0 - x))
    } else {
        lanczos(x)
    };
    if value.is_infinite() {
        return Err(Error::GammaOverflow(x));
    }
    Ok(value)
}

/// Rising factorial `(a)_k = a (a + 1) ... (a + k - 1)`, with `(a)_0 = 1`.
///
/// Evaluated as an iterated product, so nonpositive integer `a` yields an
/// exact zero once the product passes through the factor `0`.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// True when `x` lies within [`INTEGER_TOLERANCE`] of its nearest integer.
pub fn is_integer(x: f64) -> bool {
    (x - x.round()).abs() <= INTEGER_TOLERANCE
}

/// Validates an order, a domain `[a, b]` and a point count `n`.
///
/// `n` is taken as a real so that integer-valued noise (`120.0000000000001`)
/// is normalized to the nearest integer rather than rejected.
pub fn check_values(alpha: f64, a: f64, b: f64, n: f64) -> Result<CheckedInput> {
    let order = ValidatedOrder::new(alpha)?;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFiniteDomain { a, b });
    }
    if b <= a {
        return Err(Error::InvalidDomain { a, b });
    }
    if !n.is_finite() || !is_integer(n) {
        return Err(Error::NonIntegerPoints(n));
    }
    let rounded = n.round();
    if rounded < 2.0 || rounded > usize::MAX as f64 {
        return Err(Error::TooFewPoints(n));
    }
    let grid = Grid::new(a, b, rounded as usize)?;
    Ok(CheckedInput { order, grid })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_small_integers_are_exact() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(2.0).unwrap(), 1.0);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert_eq!(gamma(11.0).unwrap(), 3_628_800.0);
    }

    #[test]
    fn gamma_half_integers() {
        // sqrt(pi) = 1.7724538509055160272981674833411...
        assert!(rel(gamma(0.5).unwrap(), 1.772_453_850_905_516) < 1e-14);
        assert!(rel(gamma(1.5).unwrap(), 0.886_226_925_452_758) < 1e-14);
        assert!(rel(gamma(-0.5).unwrap(), -3.544_907_701_811_032) < 1e-14);
    }

    #[test]
    fn gamma_poles_and_overflow() {
        for x in [0.0, -1.0, -2.0, -17.0] {
            assert_eq!(gamma(x), Err(Error::GammaPole(x)));
        }
        assert_eq!(gamma(172.0), Err(Error::GammaOverflow(172.0)));
        assert_eq!(gamma(171.7), Err(Error::GammaOverflow(171.7)));
        assert!(gamma(171.5).unwrap().is_finite());
        assert_eq!(gamma(-200.5).unwrap(), 0.0);
    }

    #[test]
    fn gamma_large_argument() {
        // 170! = 7.257415615307998967e306
        assert!(rel(gamma(171.0).unwrap(), 7.257_415_615_307_999e306) < 1e-13);
        // gamma(100.5) from a 40-digit reference
        assert!(rel(gamma(100.5).unwrap(), 9.320_963_104_082_717e156) < 1e-13);
    }

    #[test]
    fn sin_pi_exact_zeros() {
        for k in -6..=6 {
            assert_eq!(sin_pi(f64::from(k)), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(-1.5) - 1.0).abs() < 1e-16);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(3.0, 2), 12.0);
        assert_eq!(pochhammer(-0.5, 3), -0.375);
        assert_eq!(pochhammer(-2.0, 5), 0.0);
    }

    #[test]
    fn integer_detection() {
        assert!(is_integer(3.0));
        assert!(is_integer(3.0 + 1e-15));
        assert!(is_integer(-4.0));
        assert!(!is_integer(0.5));
        assert!(!is_integer(3.0 + 1e-9));
    }

    #[test]
    fn check_values_accepts_and_rejects() {
        let ok = check_values(0.5, 0.0, 1.0, 120.0).unwrap();
        assert_eq!(ok.order.get(), 0.5);
        assert_eq!(ok.grid.n(), 120);

        let noisy = check_values(0.5, 0.0, 1.0, 120.0 + 1e-13).unwrap();
        assert_eq!(noisy.grid.n(), 120);

        assert_eq!(
            check_values(0.5, 1.0, 0.0, 120.0),
            Err(Error::InvalidDomain { a: 1.0, b: 0.0 })
        );
        assert!(matches!(
            check_values(f64::NAN, 0.0, 1.0, 120.0),
            Err(Error::NonFiniteOrder(_))
        ));
        assert_eq!(check_values(0.5, 0.0, 1.0, 1.0), Err(Error::TooFewPoints(1.0)));
        assert_eq!(
            check_values(0.5, 0.0, 1.0, 10.5),
            Err(Error::NonIntegerPoints(10.5))
        );
        assert!(matches!(
            check_values(0.5, 0.0, f64::INFINITY, 10.0),
            Err(Error::NonFiniteDomain { .. })
        ));
    }

    #[test]
    fn riemann_liouville_order_poles() {
        assert!(ValidatedOrder::for_riemann_liouville(1.5).is_ok());
        assert!(ValidatedOrder::for_riemann_liouville(1.0).is_ok());
        assert!(ValidatedOrder::for_riemann_liouville(-3.0).is_ok());
        assert_eq!(
            ValidatedOrder::for_riemann_liouville(2.0),
            Err(Error::OrderPole(2.0))
        );
        assert_eq!(
            ValidatedOrder::for_riemann_liouville(5.0),
            Err(Error::OrderPole(5.0))
        );
    }
}
