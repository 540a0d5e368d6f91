//! Riemann-Liouville product quadrature: weights, matrix and endpoint.
use fracdiff::{rl_array, rl_coeff, rl_matrix, rl_point, Error, Input};

fn main() -> Result<(), Error> {
    let m = rl_matrix(0.5, 4)?;
    for j in 0..m.n() {
        println!("row {j}: {:?}", m.row(j));
    }
    println!("A(1, 2) = {:.15}", rl_coeff(0.5, 1, 2)?);

    let input = Input::function(f64::exp);
    let whole = rl_array(0.5, &input, 0.0, 1.0, 120)?;
    let end = rl_point(0.5, &input, 0.0, 1.0, 120)?;
    println!("D^0.5 exp at 1: {end:.12} (array: {:.12})", whole[119]);

    // Order 1 reduces to the backward difference.
    println!("order 1 of x^2 at 1: {:.6}", rl_point(1.0, &Input::function(|x| x * x), 0.0, 1.0, 1001)?);

    if let Err(e) = rl_point(2.0, &input, 0.0, 1.0, 10) {
        println!("order 2: {e}");
    }
    Ok(())
}
