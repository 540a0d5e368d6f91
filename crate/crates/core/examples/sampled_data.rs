//! Differintegrating values that were measured rather than computed.
use fracdiff::{gl_array_fast, gli_array, rl_array, Error, Grid, Input, SampleArray};

fn main() -> Result<(), Error> {
    let grid = Grid::new(0.0, 4.0, 41)?;
    // A noisy step response.
    let data: Vec<f64> = grid
        .points()
        .enumerate()
        .map(|(i, t)| 1.0 - (-t).exp() + 0.002 * ((i * 7919) % 13) as f64 / 13.0)
        .collect();
    let input = Input::samples(&data);

    let gl = gl_array_fast(0.5, &input, grid.a(), grid.b(), grid.n())?;
    let gli = gli_array(0.5, &input, grid.a(), grid.b(), grid.n())?;
    let rl = rl_array(0.5, &input, grid.a(), grid.b(), grid.n())?;
    println!("{:>5} {:>9} {:>9} {:>9} {:>9}", "t", "f", "GL", "GLI", "RL");
    for i in (0..grid.n()).step_by(5) {
        println!(
            "{:>5.2} {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
            grid.point(i), data[i], gl[i], gli.values[i], rl[i]
        );
    }

    // Length and finiteness are checked up front.
    if let Err(e) = SampleArray::new(vec![1.0, f64::NAN, 2.0], Grid::new(0.0, 1.0, 3)?) {
        println!("{e}");
    }
    if let Err(e) = rl_array(0.5, &input, 0.0, 4.0, 40) {
        println!("{e}");
    }
    Ok(())
}
