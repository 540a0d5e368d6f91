//! Grünwald-Letnikov differintegrals of `x^2` by each evaluation path.
use fracdiff::{gl_array_fast, gl_coeffs, gl_convolve_direct, gl_matrix_apply, gl_point};
use fracdiff::{function_check, gamma, Error, Input};

fn main() -> Result<(), Error> {
    let alpha = 0.5;
    let n = 200;
    let input = Input::function(|x| x * x);

    println!("first coefficients: {:?}", &gl_coeffs(alpha, 5).coefficients());

    // D^alpha x^2 = gamma(3) / gamma(3 - alpha) x^(2 - alpha)
    let exact = gamma(3.0)? / gamma(3.0 - alpha)?;
    let point = gl_point(alpha, &input, 0.0, 1.0, n)?;
    let samples = function_check(&input, 0.0, 1.0, n)?;
    let matrix = gl_matrix_apply(alpha, &samples)?;
    let direct = gl_convolve_direct(alpha, &samples)?;
    let fast = gl_array_fast(alpha, &input, 0.0, 1.0, n)?;

    println!("exact  {exact:.12}");
    println!("point  {point:.12}");
    println!("matrix {:.12}", matrix[n - 1]);
    println!("direct {:.12}", direct[n - 1]);
    println!("fast   {:.12}", fast[n - 1]);

    // Negative orders integrate: the order -1 integral of 1 over [0, 2] is 2.
    let integral = gl_point(-1.0, &Input::function(|_| 1.0), 0.0, 2.0, 1001)?;
    println!("integral of 1 on [0, 2] ~ {integral:.6}");
    Ok(())
}
