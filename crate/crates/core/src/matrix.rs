//! Dense matrices over a field context, with exact Gaussian elimination.

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

pub fn zero<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zero(f, n, n);
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

pub fn from_i64<F: Field>(f: &F, rows: &[&[i64]]) -> Matrix<F::Elem> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| f.from_i64(v)).collect())
            .collect(),
    )
}

pub fn add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let mut out = a.clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(i, j, f.add(a.get(i, j), b.get(i, j)));
        }
    }
    out
}

pub fn sub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let mut out = a.clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(i, j, f.sub(a.get(i, j), b.get(i, j)));
        }
    }
    out
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let mut out = a.clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(i, j, f.mul(c, a.get(i, j)));
        }
    }
    out
}

pub fn mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix product shape mismatch");
    let mut out = zero(f, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if f.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let term = f.mul(aik, b.get(k, j));
                out.set(i, j, f.add(out.get(i, j), &term));
            }
        }
    }
    out
}

pub fn pow<F: Field>(f: &F, a: &Matrix<F::Elem>, e: usize) -> Matrix<F::Elem> {
    assert!(a.is_square());
    let mut result = identity(f, a.rows);
    for _ in 0..e {
        result = mul(f, &result, a);
    }
    result
}

pub fn trace<F: Field>(f: &F, a: &Matrix<F::Elem>) -> F::Elem {
    assert!(a.is_square());
    let mut acc = f.zero();
    for i in 0..a.rows {
        acc = f.add(&acc, a.get(i, i));
    }
    acc
}

pub fn is_zero_matrix<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.entries().iter().all(|e| f.is_zero(e))
}

/// Reduced row echelon form; returns pivot column indices.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
            continue;
        };
        if pr != row {
            for j in 0..m.cols {
                let a = m.get(row, j).clone();
                let b = m.get(pr, j).clone();
                m.set(row, j, b);
                m.set(pr, j, a);
            }
        }
        let inv = f.inv(m.get(row, col)).expect("pivot nonzero");
        for j in 0..m.cols {
            m.set(row, j, f.mul(&inv, m.get(row, j)));
        }
        for r in 0..m.rows {
            if r != row && !f.is_zero(m.get(r, col)) {
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let delta = f.mul(&factor, m.get(row, j));
                    m.set(r, j, f.sub(m.get(r, j), &delta));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, a: &Matrix<F::Elem>) -> usize {
    let mut m = a.clone();
    rref(f, &mut m).len()
}

pub fn is_invertible<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.is_square() && rank(f, a) == a.rows
}

pub fn inverse<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows;
    let mut aug = zero(f, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, f.one());
    }
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    let mut inv = zero(f, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, aug.get(i, n + j).clone());
        }
    }
    Some(inv)
}

/// Basis of `{x : A x = 0}`, in a deterministic echelon convention
/// (one vector per free column, ascending).
pub fn nullspace<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut m = a.clone();
    let pivots = rref(f, &mut m);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; a.cols];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..a.cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut vec_out = vec![f.zero(); a.cols];
        vec_out[free] = f.one();
        for (col, pr) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pr {
                vec_out[col] = f.neg(m.get(*r, free));
            }
        }
        basis.push(vec_out);
    }
    basis
}

/// One solution of `A x = b` (free variables set to zero), if consistent.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows, b.len());
    let mut aug = zero(f, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let pivots = rref(f, &mut aug);
    if pivots.contains(&a.cols) {
        return None; // inconsistent
    }
    let mut x = vec![f.zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, a.cols).clone();
    }
    Some(x)
}

/// Monic minimal polynomial (ascending coefficients) of a square matrix,
/// from the first linear dependence among vectorized powers.
pub fn minimal_polynomial<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Vec<F::Elem> {
    assert!(a.is_square());
    let n = a.rows;
    if n == 0 {
        return vec![f.one()]; // empty operator: minimal polynomial 1
    }
    let mut powers: Vec<Matrix<F::Elem>> = vec![identity(f, n)];
    loop {
        let k = powers.len();
        let next = mul(f, powers.last().unwrap(), a);
        // solve sum_j c_j vec(powers[j]) = vec(next)
        let mut sys = zero(f, n * n, k);
        for (j, p) in powers.iter().enumerate() {
            for (idx, e) in p.entries().iter().enumerate() {
                sys.set(idx, j, e.clone());
            }
        }
        let rhs: Vec<F::Elem> = next.entries().to_vec();
        if let Some(c) = solve(f, &sys, &rhs) {
            let mut coeffs: Vec<F::Elem> = c.into_iter().map(|v| f.neg(&v)).collect();
            coeffs.push(f.one());
            return coeffs;
        }
        powers.push(next);
        assert!(powers.len() <= n + 1, "minimal polynomial search overran");
    }
}

/// Builds the block-diagonal matrix of the given square blocks.
pub fn block_diag<F: Field>(f: &F, blocks: &[&Matrix<F::Elem>]) -> Matrix<F::Elem> {
    let total: usize = blocks.iter().map(|b| b.rows).sum();
    let mut out = zero(f, total, total);
    let mut off = 0usize;
    for b in blocks {
        assert!(b.is_square());
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};

    #[test]
    fn rational_elimination() {
        let f = Rationals;
        let a = from_i64(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&f, &a), 1);
        let ns = nullspace(&f, &a);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![f.from_i64(-2), f.from_i64(1)]);
        let b = from_i64(&f, &[&[2, 1], &[1, 1]]);
        let inv = inverse(&f, &b).unwrap();
        assert_eq!(mul(&f, &b, &inv), identity(&f, 2));
        assert!(is_invertible(&f, &b));
        assert!(!is_invertible(&f, &a));
    }

    #[test]
    fn solving() {
        let f = Rationals;
        let a = from_i64(&f, &[&[1, 1], &[1, -1]]);
        let b = vec![f.from_i64(3), f.from_i64(1)];
        let x = solve(&f, &a, &b).unwrap();
        assert_eq!(x, vec![f.from_i64(2), f.from_i64(1)]);
        // inconsistent system
        let c = from_i64(&f, &[&[1, 1], &[1, 1]]);
        let d = vec![f.from_i64(0), f.from_i64(1)];
        assert!(solve(&f, &c, &d).is_none());
    }

    #[test]
    fn minpoly_examples() {
        let f = Rationals;
        let id = identity(&f, 3);
        // x - 1
        assert_eq!(
            minimal_polynomial(&f, &id),
            vec![f.from_i64(-1), f.from_i64(1)]
        );
        let nil = from_i64(&f, &[&[0, 1], &[0, 0]]);
        // x^2
        assert_eq!(
            minimal_polynomial(&f, &nil),
            vec![f.from_i64(0), f.from_i64(0), f.from_i64(1)]
        );
        let rot = from_i64(&f, &[&[0, -1], &[1, 0]]);
        // x^2 + 1
        assert_eq!(
            minimal_polynomial(&f, &rot),
            vec![f.from_i64(1), f.from_i64(0), f.from_i64(1)]
        );
    }

    #[test]
    fn finite_field_elimination() {
        let f = Gf::new(2, 1, None).unwrap();
        let a = from_i64(&f, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(rank(&f, &a), 2);
        let ns = nullspace(&f, &a);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![1, 1, 1]);
        let m = from_i64(&f, &[&[1, 1], &[1, 0]]);
        // Fibonacci matrix over F_2 has order 3
        assert_eq!(pow(&f, &m, 3), identity(&f, 2));
    }

    #[test]
    fn block_diagonal() {
        let f = Rationals;
        let a = from_i64(&f, &[&[2]]);
        let b = from_i64(&f, &[&[0, 1], &[0, 0]]);
        let d = block_diag(&f, &[&a, &b]);
        assert_eq!(d.rows, 3);
        assert_eq!(*d.get(0, 0), f.from_i64(2));
        assert_eq!(*d.get(1, 2), f.from_i64(1));
        assert_eq!(trace(&f, &d), f.from_i64(2));
    }
}
