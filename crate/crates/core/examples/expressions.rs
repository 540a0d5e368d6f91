//! Parsing and evaluating input expressions.
use fracdiff::expr;
use fracdiff::{rl_point, Error, Input};

fn main() -> Result<(), Error> {
    for text in ["2 + 3 * x", "-x^2", "2^3^2", "pow(x, 0.5) * exp(-x)", "sin(x)/x"] {
        let e = expr::parse(text)?;
        println!("{text:<24} -> {e:<40} at 0.5: {:?}", e.evaluate(0.5));
    }
    for bad in ["2 + * 3", "y + 1", "sqrt(x"] {
        println!("{bad:<10} {}", expr::parse(bad).unwrap_err());
    }
    println!("log(-1): {}", expr::parse("log(x)")?.evaluate(-1.0).unwrap_err());

    let e = expr::parse("x^2 - 1")?;
    let half = rl_point(0.5, &Input::expression(&e), 0.0, 1.0, 120)?;
    println!("D^0.5 (x^2 - 1) at 1 = {half:.9}");
    Ok(())
}
