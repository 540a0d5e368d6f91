//! Uniform grids and the callable-or-samples input type.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::Expression;

/// `n` equally spaced points on `[a, b]`, both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    n: usize,
    h: f64,
}

impl Grid {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFiniteDomain { a, b });
        }
        if b <= a {
            return Err(Error::InvalidDomain { a, b });
        }
        if n < 2 {
            return Err(Error::TooFewPoints(n as f64));
        }
        let h = (b - a) / (n - 1) as f64;
        Ok(Self { a, b, n, h })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Step size `(b - a) / (n - 1)`.
    pub fn h(&self) -> f64 {
        self.h
    }

    /// The `i`-th grid point `a + i h`. The last point is pinned to `b`
    /// exactly; indices past `n - 1` extrapolate.
    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.b
        } else {
            self.a + i as f64 * self.h
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }
}

/// Function values on a [`Grid`]. Every value is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleArray {
    values: Vec<f64>,
    grid: Grid,
}

impl SampleArray {
    pub fn new(values: Vec<f64>, grid: Grid) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::LengthMismatch {
                expected: grid.n(),
                found: values.len(),
            });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteSample {
                index,
                x: grid.point(index),
                value,
            });
        }
        Ok(Self { values, grid })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

type Callable<'a> = Box<dyn Fn(f64) -> Result<f64> + 'a>;

fn checked_eval(f: &Callable<'_>, x: f64, index: usize) -> Result<f64> {
    let value = f(x)?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteSample { index, x, value })
    }
}

/// A function to differintegrate: either something we can evaluate anywhere,
/// or values already sampled on the grid.
pub enum Input<'a> {
    Function(Callable<'a>),
    Samples(&'a [f64]),
}

impl<'a> Input<'a> {
    pub fn function(f: impl Fn(f64) -> f64 + 'a) -> Self {
        Input::Function(Box::new(move |x| Ok(f(x))))
    }

    /// A callable whose evaluation may fail, e.g. a parsed expression.
    pub fn try_function(f: impl Fn(f64) -> Result<f64> + 'a) -> Self {
        Input::Function(Box::new(f))
    }

    /// A parsed expression as a callable; evaluation errors propagate.
    pub fn expression(expr: &'a Expression) -> Self {
        Input::try_function(move |x| Ok(expr.evaluate(x)?))
    }

    pub fn samples(values: &'a [f64]) -> Self {
        Input::Samples(values)
    }

    pub fn is_callable(&self) -> bool {
        matches!(self, Input::Function(_))
    }

    /// Evaluates a callable input at `x`, rejecting non-finite results.
    /// Returns `None` for sampled input.
    pub fn evaluate(&self, x: f64, index: usize) -> Option<Result<f64>> {
        match self {
            Input::Function(f) => Some(checked_eval(f, x, index)),
            Input::Samples(_) => None,
        }
    }
}

impl fmt::Debug for Input<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::Function(_) => f.write_str("Input::Function(..)"),
            Input::Samples(v) => f.debug_tuple("Input::Samples").field(&v.len()).finish(),
        }
    }
}

impl<'a> From<&'a [f64]> for Input<'a> {
    fn from(values: &'a [f64]) -> Self {
        Input::Samples(values)
    }
}

impl<'a> From<&'a Vec<f64>> for Input<'a> {
    fn from(values: &'a Vec<f64>) -> Self {
        Input::Samples(values)
    }
}

/// Turns an [`Input`] into a [`SampleArray`] on `Grid(a, b, n)`.
///
/// Callables are sampled at `a + i h`; sequences are adopted as they are and
/// must have exactly `n` entries.
pub fn function_check(input: &Input<'_>, a: f64, b: f64, n: usize) -> Result<SampleArray> {
    let grid = Grid::new(a, b, n)?;
    sample_on(input, grid)
}

pub(crate) fn sample_on(input: &Input<'_>, grid: Grid) -> Result<SampleArray> {
    let values = match input {
        Input::Samples(values) => values.to_vec(),
        Input::Function(f) => grid
            .points()
            .enumerate()
            .map(|(i, x)| checked_eval(f, x, i))
            .collect::<Result<Vec<_>>>()?,
    };
    SampleArray::new(values, grid)
}
