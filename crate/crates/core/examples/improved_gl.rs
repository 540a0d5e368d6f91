//! Improved GL: interpolated history, plus the sampled-data endpoint estimate.
use fracdiff::{gl_array_fast, gli_array, gli_interpolation_coeffs, Error, Input};

fn main() -> Result<(), Error> {
    let exact = std::f64::consts::PI.sqrt() / 2.0;
    let input = Input::function(f64::sqrt);
    println!("weights at 0.5: {:?}", gli_interpolation_coeffs(0.5).as_array());

    println!("{:>6} {:>12} {:>12}", "n", "GL error", "GLI error");
    for n in [30, 60, 120, 240] {
        let gl = gl_array_fast(0.5, &input, 0.0, 1.0, n)?[n - 1];
        let gli = gli_array(0.5, &input, 0.0, 1.0, n)?.values[n - 1];
        println!("{n:>6} {:>12.3e} {:>12.3e}", (gl - exact).abs(), (gli - exact).abs());
    }

    // Pre-sampled data has no point past b, so the last value is copied.
    let data: Vec<f64> = (0..120).map(|i| (f64::from(i) / 119.0).sqrt()).collect();
    let out = gli_array(0.5, &Input::samples(&data), 0.0, 1.0, 120)?;
    println!("sampled: endpoint_estimated = {}, value = {:.9}", out.endpoint_estimated, out.values[119]);
    Ok(())
}
