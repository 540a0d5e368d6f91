//! Gamma function and rising factorials.
use fracdiff::{gamma, pochhammer, Error};

fn main() -> Result<(), Error> {
    for x in [0.5, 1.5, 5.0, -0.5, -2.5, 30.25] {
        println!("gamma({x:>6}) = {:.15e}", gamma(x)?);
    }
    println!("sqrt(pi)      = {:.15e}", std::f64::consts::PI.sqrt());

    // (a)_k = gamma(a + k) / gamma(a)
    let (a, k) = (0.3, 7);
    println!("(0.3)_7 = {} vs {}", pochhammer(a, k), gamma(a + k as f64)? / gamma(a)?);

    match gamma(-3.0) {
        Err(e) => println!("gamma(-3): {e}"),
        Ok(v) => println!("gamma(-3) = {v}"),
    }
    Ok(())
}
