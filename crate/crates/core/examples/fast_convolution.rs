//! Radix-2 transform and real convolution.
use fracdiff::fastconv::{convolve, dft, inverse_dft};
use fracdiff::Error;
use num_complex::Complex64;

fn main() -> Result<(), Error> {
    let signal: Vec<Complex64> = (0..8).map(|i| Complex64::new(f64::from(i), 0.0)).collect();
    let spectrum = dft(&signal)?;
    for (k, z) in spectrum.iter().enumerate() {
        println!("X[{k}] = {:>8.4} {:+8.4}i", z.re, z.im);
    }
    let back = inverse_dft(&spectrum)?;
    let err = back.iter().zip(&signal).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("round trip error {err:.1e}");

    // Truncated to the longer input's length.
    println!("{:?}", convolve(&[1.0, 2.0, 3.0], &[1.0, 1.0, 1.0, 1.0])?);

    if let Err(e) = dft(&signal[..6]) {
        println!("length 6: {e}");
    }
    Ok(())
}
