//! Error against n for D^0.5 x^p, and timing of the fast path.
use std::time::Instant;

use fracdiff::{gamma, gl_array_fast, gli_array, rl_array, Error, Input};

fn main() -> Result<(), Error> {
    for p in [0.5, 1.0, 2.0] {
        let exact = gamma(p + 1.0)? / gamma(p + 0.5)?;
        let input = Input::function(move |x: f64| x.powf(p));
        println!("x^{p}");
        for n in [60, 120, 240, 480, 960] {
            let gl = gl_array_fast(0.5, &input, 0.0, 1.0, n)?[n - 1];
            let gli = gli_array(0.5, &input, 0.0, 1.0, n)?.values[n - 1];
            let rl = rl_array(0.5, &input, 0.0, 1.0, n)?[n - 1];
            println!(
                "  n={n:<5} GL {:.2e}  GLI {:.2e}  RL {:.2e}",
                (gl - exact).abs(),
                (gli - exact).abs(),
                (rl - exact).abs()
            );
        }
    }

    for log2 in [12, 14, 16, 18] {
        let n = 1 << log2;
        let start = Instant::now();
        gl_array_fast(0.5, &Input::function(f64::exp), 0.0, 1.0, n)?;
        println!("fast GL, n = 2^{log2}: {:?}", start.elapsed());
    }
    Ok(())
}
