//! Radix-2 discrete Fourier transform and transform-based linear convolution.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A sequence of complex samples. Transforms require a power-of-two length.
pub type ComplexBuffer = Vec<Complex64>;

fn check_len(len: usize) -> Result<()> {
    if len.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::NotPowerOfTwo(len))
    }
}

fn bit_reverse_permute(buf: &mut [Complex64]) {
    let n = buf.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
}

/// Iterative Cooley-Tukey. `sign` is -1 for the forward transform, +1 for the inverse.
fn transform(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    bit_reverse_permute(buf);

    // Twiddles for the full length, each from a direct cos/sin evaluation.
    let twiddles: Vec<Complex64> = (0..n / 2)
        .map(|k| Complex64::from_polar(1.0, sign * 2.0 * PI * k as f64 / n as f64))
        .collect();

    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = twiddles[k * stride];
                let u = buf[start + k];
                let v = buf[start + k + half] * w;
                buf[start + k] = u + v;
                buf[start + k + half] = u - v;
            }
        }
        len <<= 1;
    }
}

/// In-place forward transform `X_k = sum_m x_m exp(-2 pi i k m / N)`.
pub fn dft_in_place(buf: &mut [Complex64]) -> Result<()> {
    check_len(buf.len())?;
    transform(buf, -1.0);
    Ok(())
}

/// In-place inverse transform, including the `1 / N` scaling.
pub fn inverse_dft_in_place(buf: &mut [Complex64]) -> Result<()> {
    check_len(buf.len())?;
    transform(buf, 1.0);
    let scale = 1.0 / buf.len() as f64;
    buf.iter_mut().for_each(|z| *z *= scale);
    Ok(())
}

pub fn dft(buffer: &[Complex64]) -> Result<ComplexBuffer> {
    let mut out = buffer.to_vec();
    dft_in_place(&mut out)?;
    Ok(out)
}

pub fn inverse_dft(buffer: &[Complex64]) -> Result<ComplexBuffer> {
    let mut out = buffer.to_vec();
    inverse_dft_in_place(&mut out)?;
    Ok(out)
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// The first `max(x.len(), y.len())` entries of the linear convolution
/// `(x * y)_j = sum_i x_i y_{j-i}`.
///
/// Both inputs are zero padded to the next power of two at or above
/// `x.len() + y.len() - 1`, so no circular wrap-around reaches the kept
/// entries. The two real inputs share one complex transform.
pub fn convolve(x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyInput);
    }
    let keep = x.len().max(y.len());
    let size = (x.len() + y.len() - 1).next_power_of_two();

    // Normalize both inputs to unit peak so neither swamps the other in the
    // shared transform.
    let (sx, sy) = (max_abs(x), max_abs(y));
    if sx == 0.0 || sy == 0.0 {
        return Ok(vec![0.0; keep]);
    }

    let mut buf = vec![Complex64::new(0.0, 0.0); size];
    for (slot, &v) in buf.iter_mut().zip(x) {
        slot.re = v / sx;
    }
    for (slot, &v) in buf.iter_mut().zip(y) {
        slot.im = v / sy;
    }
    transform(&mut buf, -1.0);

    // Split the packed spectrum Z = X + iY and form X * Y.
    let spectrum: Vec<Complex64> = (0..size)
        .map(|k| {
            let z = buf[k];
            let zc = buf[(size - k) % size].conj();
            let xk = (z + zc) * 0.5;
            let yk = (z - zc) * Complex64::new(0.0, -0.5);
            xk * yk
        })
        .collect();
    buf.copy_from_slice(&spectrum);
    inverse_dft_in_place(&mut buf)?;

    let peak_im = buf[..keep].iter().fold(0.0_f64, |m, z| m.max(z.im.abs()));
    debug_assert!(
        peak_im <= 1e-9 * (x.len().min(y.len()) as f64).max(1.0),
        "imaginary residue {peak_im} after real convolution"
    );

    let scale = sx * sy;
    Ok(buf[..keep].iter().map(|z| z.re * scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn impulse_and_constant() {
        let flat = dft(&[c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        assert!(close(&flat, &[c(1.0); 4], 1e-15));

        let spike = dft(&[c(1.0); 4]).unwrap();
        assert!(close(&spike, &[c(4.0), c(0.0), c(0.0), c(0.0)], 1e-15));

        let back = inverse_dft(&[c(4.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        assert!(close(&back, &[c(1.0); 4], 1e-15));
    }

    #[test]
    fn length_one_is_identity() {
        let z = [Complex64::new(2.5, -1.0)];
        assert_eq!(dft(&z).unwrap(), z.to_vec());
        assert_eq!(inverse_dft(&z).unwrap(), z.to_vec());
    }

    #[test]
    fn rejects_non_power_of_two() {
        assert_eq!(dft(&[c(1.0); 6]), Err(Error::NotPowerOfTwo(6)));
        assert_eq!(inverse_dft(&[c(1.0); 3]), Err(Error::NotPowerOfTwo(3)));
        assert_eq!(dft(&[]), Err(Error::NotPowerOfTwo(0)));
    }

    #[test]
    fn convolve_small_cases() {
        let out = convolve(&[1.0, 2.0, 3.0], &[1.0, 0.0, 0.0]).unwrap();
        for (a, b) in out.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).abs() < 1e-14);
        }

        let out = convolve(&[1.0, 1.0], &[1.0, 1.0]).unwrap();
        assert_eq!(out.len(), 2);
        assert!((out[0] - 1.0).abs() < 1e-14 && (out[1] - 2.0).abs() < 1e-14);

        assert_eq!(convolve(&[0.0, 0.0], &[1.0]).unwrap(), vec![0.0, 0.0]);
        assert_eq!(convolve(&[], &[1.0]), Err(Error::EmptyInput));
        assert_eq!(convolve(&[1.0], &[]), Err(Error::EmptyInput));
    }

    #[test]
    fn convolve_mismatched_scales() {
        let x = [1e8, -3e7, 2e8];
        let y = [1e-6, 5e-7];
        let out = convolve(&x, &y).unwrap();
        let expect = [100.0, 50.0 - 30.0, -15.0 + 200.0];
        for (a, b) in out.iter().zip(expect) {
            assert!((a - b).abs() <= 1e-12 * b.abs());
        }
    }
}
