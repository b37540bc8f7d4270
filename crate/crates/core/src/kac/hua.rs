//! Truncated multivariate power series over the rationals, and the
//! partition-sum generating function whose plethystic logarithm carries
//! the absolutely-indecomposable counts.
//!
//! A series lives on the box of exponent vectors `e` with
//! `e[i] <= box_dims[i]`; products silently truncate outside the box.

use crate::error::{CoreError, Result};
use crate::exact::partition::{b_poly_at, partition_pairing, partitions_of, Partition};
use crate::exact::scalar::{pow_rat, Rat};
use crate::quiver::Quiver;
use num_traits::{One, Zero};

/// Dense series truncated to a product-of-intervals exponent box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxSeries {
    box_dims: Vec<usize>,
    strides: Vec<usize>,
    coeffs: Vec<Rat>,
}

impl BoxSeries {
    pub fn zero(box_dims: &[usize]) -> BoxSeries {
        let mut strides = Vec::with_capacity(box_dims.len());
        let mut cells = 1usize;
        for &b in box_dims {
            strides.push(cells);
            cells *= b + 1;
        }
        BoxSeries {
            box_dims: box_dims.to_vec(),
            strides,
            coeffs: vec![Rat::zero(); cells],
        }
    }

    pub fn constant(box_dims: &[usize], c: Rat) -> BoxSeries {
        let mut s = BoxSeries::zero(box_dims);
        s.coeffs[0] = c;
        s
    }

    pub fn box_dims(&self) -> &[usize] {
        &self.box_dims
    }

    fn index(&self, e: &[usize]) -> usize {
        debug_assert_eq!(e.len(), self.box_dims.len());
        e.iter().zip(&self.strides).map(|(&x, &s)| x * s).sum()
    }

    pub fn coeff(&self, e: &[usize]) -> &Rat {
        &self.coeffs[self.index(e)]
    }

    pub fn set_coeff(&mut self, e: &[usize], c: Rat) {
        let i = self.index(e);
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Every exponent vector of the box, in stride order.
    fn exponents(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut e = vec![0usize; self.box_dims.len()];
        loop {
            out.push(e.clone());
            let mut pos = 0;
            loop {
                if pos == e.len() {
                    return out;
                }
                if e[pos] < self.box_dims[pos] {
                    e[pos] += 1;
                    break;
                }
                e[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Product, truncated to the common box.
    pub fn mul_trunc(&self, other: &BoxSeries) -> BoxSeries {
        assert_eq!(self.box_dims, other.box_dims);
        let mut out = BoxSeries::zero(&self.box_dims);
        let exps = self.exponents();
        for (ia, ea) in exps.iter().enumerate() {
            if self.coeffs[ia].is_zero() {
                continue;
            }
            'inner: for (ib, eb) in exps.iter().enumerate() {
                if other.coeffs[ib].is_zero() {
                    continue;
                }
                let mut idx = 0usize;
                for (k, (&a, &b)) in ea.iter().zip(eb.iter()).enumerate() {
                    let sum = a + b;
                    if sum > self.box_dims[k] {
                        continue 'inner;
                    }
                    idx += sum * self.strides[k];
                }
                let prod = &self.coeffs[ia] * &other.coeffs[ib];
                out.coeffs[idx] += prod;
            }
        }
        out
    }

    /// Series logarithm; the constant term must be 1.
    pub fn log_trunc(&self) -> Result<BoxSeries> {
        if !self.coeffs[0].is_one() {
            return Err(CoreError::BadInput(
                "series logarithm needs constant term 1".into(),
            ));
        }
        let mut u = self.clone();
        u.coeffs[0] = Rat::zero();
        let total: usize = self.box_dims.iter().sum();
        let mut acc = BoxSeries::zero(&self.box_dims);
        let mut power = u.clone();
        for j in 1..=total.max(1) {
            if power.is_zero() {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let factor = Rat::new(sign.into(), (j as i64).into());
            for (a, p) in acc.coeffs.iter_mut().zip(&power.coeffs) {
                *a += p * &factor;
            }
            power = power.mul_trunc(&u);
        }
        Ok(acc)
    }
}

/// The partition-sum generating function, evaluated at a concrete field
/// size `q0`, truncated to the exponent box `box_dims`. The coefficient
/// of `X^e` sums over tuples of partitions, one per vertex with
/// `|lambda^i| = e_i`: arrows contribute `q0^(pairing of endpoints)`,
/// each vertex divides by `q0^(self-pairing) * b(q0^-1)`.
pub fn hua_series_at(q: &Quiver, box_dims: &[usize], q0: &Rat) -> Result<BoxSeries> {
    if box_dims.len() != q.vertex_count() {
        return Err(CoreError::BadInput(
            "truncation box length must match the vertex count".into(),
        ));
    }
    if !q0.is_integer() || crate::exact::scalar::rat_abs(q0) < Rat::from_integer(2.into()) {
        return Err(CoreError::BadInput(
            "series evaluation point must be an integer of magnitude at least 2".into(),
        ));
    }
    let q0_inv = Rat::one() / q0;
    let max_size = box_dims.iter().copied().max().unwrap_or(0);
    let parts_by_size: Vec<Vec<Partition>> =
        (0..=max_size).map(|s| partitions_of(s as u32)).collect();
    // per-partition-size cache of 1 / (q0^pairing(l,l) * b_l(1/q0))
    let vertex_factor: Vec<Vec<Rat>> = parts_by_size
        .iter()
        .map(|list| {
            list.iter()
                .map(|l| {
                    let pair = partition_pairing(l, l) as i64;
                    Rat::one() / (pow_rat(q0, pair) * b_poly_at(l, &q0_inv))
                })
                .collect()
        })
        .collect();
    let mut series = BoxSeries::zero(box_dims);
    let exps = series.exponents();
    for e in &exps {
        let mut total = Rat::zero();
        // odometer over one partition choice per vertex
        let lists: Vec<&[Partition]> = e.iter().map(|&s| &parts_by_size[s][..]).collect();
        let mut pick = vec![0usize; e.len()];
        'tuples: loop {
            let chosen: Vec<&Partition> = pick
                .iter()
                .zip(&lists)
                .map(|(&i, list)| &list[i])
                .collect();
            let mut arrow_exp: i64 = 0;
            for a in q.arrows() {
                arrow_exp += partition_pairing(chosen[a.tail], chosen[a.head]) as i64;
            }
            let mut term = pow_rat(q0, arrow_exp);
            for (x, &i) in pick.iter().enumerate() {
                term *= &vertex_factor[e[x]][i];
            }
            total += term;
            let mut pos = 0;
            loop {
                if pos == pick.len() {
                    break 'tuples;
                }
                if pick[pos] + 1 < lists[pos].len() {
                    pick[pos] += 1;
                    break;
                }
                pick[pos] = 0;
                pos += 1;
            }
        }
        series.set_coeff(e, total);
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat, rat_frac};

    #[test]
    fn constant_coefficient_is_one() {
        for q in [Quiver::loop_quiver(2), Quiver::path(3)] {
            let s = hua_series_at(&q, &vec![2; q.vertex_count()], &rat(3)).unwrap();
            assert_eq!(
                s.coeff(&vec![0; q.vertex_count()]),
                &rat(1),
                "q = {}",
                q.to_spec()
            );
        }
    }

    #[test]
    fn one_loop_linear_coefficient() {
        // partitions of 1: just (1); one loop contributes q0 up top and
        // q0 * (1 - 1/q0) below, leaving q0/(q0 - 1)
        for q0 in [2i64, 3, 5, 7] {
            let s = hua_series_at(&Quiver::loop_quiver(1), &[1], &rat(q0)).unwrap();
            assert_eq!(s.coeff(&[1]), &(rat(q0) / rat(q0 - 1)));
        }
    }

    #[test]
    fn rejects_degenerate_evaluation_points() {
        let q = Quiver::loop_quiver(1);
        for bad in [rat(0), rat(1), rat(-1), rat_frac(3, 2)] {
            assert!(hua_series_at(&q, &[1], &bad).is_err());
        }
    }

    #[test]
    fn log_of_geometric_series() {
        // P = 1 + cX + c^2 X^2 + c^3 X^3 = 1/(1-cX) up to the box; the
        // log must match the series of -log(1-cX)
        let c = rat_frac(1, 2);
        let mut p = BoxSeries::zero(&[3]);
        for k in 0..=3usize {
            p.set_coeff(&[k], pow_rat(&c, k as i64));
        }
        let l = p.log_trunc().unwrap();
        for k in 1..=3usize {
            assert_eq!(l.coeff(&[k]), &(pow_rat(&c, k as i64) / rat(k as i64)));
        }
        assert_eq!(l.coeff(&[0]), &rat(0));
    }

    #[test]
    fn product_truncates_to_the_box() {
        let mut a = BoxSeries::zero(&[1, 1]);
        a.set_coeff(&[0, 0], rat(1));
        a.set_coeff(&[1, 0], rat(2));
        let mut b = BoxSeries::zero(&[1, 1]);
        b.set_coeff(&[0, 1], rat(3));
        b.set_coeff(&[1, 0], rat(5));
        let p = a.mul_trunc(&b);
        assert_eq!(p.coeff(&[0, 1]), &rat(3));
        assert_eq!(p.coeff(&[1, 1]), &rat(6));
        assert_eq!(p.coeff(&[1, 0]), &rat(5));
        // the X0^2 term from 2 X0 * 5 X0 falls outside and is dropped
        assert_eq!(p.coeff(&[0, 0]), &rat(0));
    }

    #[test]
    fn two_loop_quadratic_coefficient_matches_hand_sum() {
        // partitions of 2: (2) with self-pairing 2, and (1,1) with
        // self-pairing 4; each gets arrow exponent 2*pairing for g = 2
        let q0 = rat(3);
        let s = hua_series_at(&Quiver::loop_quiver(2), &[2], &q0).unwrap();
        let t = Rat::one() / &q0;
        // b for (2): multiplicity 1 of part 2 gives (1-t); for (1,1):
        // multiplicity 2 of part 1 gives (1-t)(1-t^2)
        let expect = pow_rat(&q0, 2) / (Rat::one() - &t)
            + pow_rat(&q0, 4) / ((Rat::one() - &t) * (Rat::one() - &t * &t));
        assert_eq!(s.coeff(&[2]), &expect);
        assert_eq!(expect, rat_frac(2403, 16));
    }
}
