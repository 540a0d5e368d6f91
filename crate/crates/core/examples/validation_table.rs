//! Half-derivatives at x = 1 against closed forms, all three methods.
use fracdiff::cli::{format_table, reproduce_table};

fn main() -> Result<(), fracdiff::Error> {
    print!("{}", format_table(&reproduce_table()?));
    Ok(())
}
