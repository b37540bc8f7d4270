//! Exact Lagrange interpolation through rational sample points.

use super::polyq::PolyQ;
use super::scalar::Rat;
use crate::error::{CoreError, Result};

#[derive(Clone, Debug, Default)]
pub struct InterpolationTable {
    pub points: Vec<(Rat, Rat)>,
}

impl InterpolationTable {
    pub fn new() -> Self {
        InterpolationTable { points: Vec::new() }
    }

    pub fn push(&mut self, x: Rat, y: Rat) {
        self.points.push((x, y));
    }

    pub fn interpolate(&self) -> Result<PolyQ> {
        lagrange_interpolate(&self.points)
    }
}

/// Unique polynomial of degree `< points.len()` through the given points,
/// via Newton's divided differences. Abscissas must be pairwise distinct.
pub fn lagrange_interpolate(points: &[(Rat, Rat)]) -> Result<PolyQ> {
    if points.is_empty() {
        return Ok(PolyQ::zero());
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].0 == points[j].0 {
                return Err(CoreError::DuplicateAbscissa(points[i].0.to_string()));
            }
        }
    }
    let n = points.len();
    // diffs[j] holds f[x_{j-k} .. x_j] at stage k.
    let mut diffs: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut newton_coeffs: Vec<Rat> = vec![diffs[0].clone()];
    for k in 1..n {
        for j in (k..n).rev() {
            let num = &diffs[j] - &diffs[j - 1];
            let den = &points[j].0 - &points[j - k].0;
            diffs[j] = num / den;
        }
        newton_coeffs.push(diffs[k].clone());
    }
    // Expand sum_k c_k prod_{j<k} (x - x_j).
    let mut acc = PolyQ::zero();
    let mut basis = PolyQ::one();
    for (k, c) in newton_coeffs.iter().enumerate() {
        acc = acc.add(&basis.scale(c));
        if k + 1 < n {
            let lin = PolyQ::from_coeffs(vec![-&points[k].0, Rat::from_integer(1.into())]);
            basis = basis.mul(&lin);
        }
    }
    // Interpolation must reproduce every sample exactly.
    for (x, y) in points {
        if &acc.eval(x) != y {
            return Err(CoreError::Inconsistent(format!(
                "interpolant fails to reproduce sample at {}",
                x
            )));
        }
    }
    Ok(acc)
}
