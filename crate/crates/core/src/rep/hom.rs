//! Homomorphism spaces between representations: exact nullspace of the
//! intertwining equations.

use crate::error::{CoreError, Result};
use crate::field::{Field, Rationals};
use crate::matrix::{self, Matrix};
use crate::rep::Rep;

/// A homomorphism as one matrix per vertex, shape
/// `dims_target[x] x dims_source[x]`.
pub type HomElement<E> = Vec<Matrix<E>>;

/// Basis of `Hom(M, N)`: solutions of `phi_h M_a = N_a phi_t` over all
/// arrows `a: t -> h`. Unknowns are ordered by vertex, then row-major
/// within the vertex block, so the basis is reproducible.
pub fn hom_space<F: Field>(f: &F, m: &Rep<F>, n: &Rep<F>) -> Result<Vec<HomElement<F::Elem>>> {
    if m.quiver != n.quiver {
        return Err(CoreError::BadInput(
            "hom between representations of different quivers".into(),
        ));
    }
    let q = &m.quiver;
    let v = q.vertex_count();
    let mut offset = vec![0usize; v + 1];
    for x in 0..v {
        offset[x + 1] = offset[x] + n.dims[x] * m.dims[x];
    }
    let unknowns = offset[v];
    let rows: usize = q
        .arrows()
        .iter()
        .map(|a| n.dims[a.head] * m.dims[a.tail])
        .sum();
    let mut sys = matrix::zero(f, rows, unknowns);
    let mut row = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (t, h) = (a.tail, a.head);
        for i in 0..n.dims[h] {
            for j in 0..m.dims[t] {
                // coefficient of phi_h[i][k] is M_a[k][j]
                for k in 0..m.dims[h] {
                    let col = offset[h] + i * m.dims[h] + k;
                    let c = f.add(sys.get(row, col), m.mats[ai].get(k, j));
                    sys.set(row, col, c);
                }
                // coefficient of phi_t[k][j] is -N_a[i][k]
                for k in 0..n.dims[t] {
                    let col = offset[t] + k * m.dims[t] + j;
                    let c = f.sub(sys.get(row, col), n.mats[ai].get(i, k));
                    sys.set(row, col, c);
                }
                row += 1;
            }
        }
    }
    let kernel = matrix::nullspace(f, &sys);
    Ok(kernel
        .into_iter()
        .map(|vecu| {
            (0..v)
                .map(|x| {
                    let mut mat = matrix::zero(f, n.dims[x], m.dims[x]);
                    for i in 0..n.dims[x] {
                        for j in 0..m.dims[x] {
                            mat.set(i, j, vecu[offset[x] + i * m.dims[x] + j].clone());
                        }
                    }
                    mat
                })
                .collect()
        })
        .collect())
}

pub fn hom_dim<F: Field>(f: &F, m: &Rep<F>, n: &Rep<F>) -> Result<usize> {
    Ok(hom_space(f, m, n)?.len())
}

/// Vertexwise composition `second . first`.
pub fn compose_hom<F: Field>(
    f: &F,
    second: &HomElement<F::Elem>,
    first: &HomElement<F::Elem>,
) -> HomElement<F::Elem> {
    second
        .iter()
        .zip(first.iter())
        .map(|(s, t)| matrix::mul(f, s, t))
        .collect()
}

/// Checks the intertwining equations for a vertex-indexed matrix tuple.
pub fn is_hom<F: Field>(f: &F, m: &Rep<F>, n: &Rep<F>, phi: &HomElement<F::Elem>) -> bool {
    m.quiver.arrows().iter().enumerate().all(|(ai, a)| {
        let lhs = matrix::mul(f, &phi[a.head], &m.mats[ai]);
        let rhs = matrix::mul(f, &n.mats[ai], &phi[a.tail]);
        lhs == rhs
    })
}

/// Trace of an endomorphism given as vertex blocks.
pub fn hom_trace<F: Field>(f: &F, e: &HomElement<F::Elem>) -> F::Elem {
    let mut acc = f.zero();
    for b in e {
        acc = f.add(&acc, &matrix::trace(f, b));
    }
    acc
}

/// Dimension of `End(M)/rad End(M)` over the rationals, through the
/// radical of the symmetric trace form `(a, b) -> tr(ab)`. This
/// identification of the form radical with the Jacobson radical needs
/// characteristic zero.
pub fn end_over_radical_dim_q(m: &Rep<Rationals>) -> Result<usize> {
    let f = Rationals;
    let basis = hom_space(&f, m, m)?;
    Ok(gram_rank(&f, &basis))
}

pub(crate) fn gram_rank<F: Field>(f: &F, basis: &[HomElement<F::Elem>]) -> usize {
    let e = basis.len();
    let mut gram = matrix::zero(f, e, e);
    for i in 0..e {
        for j in i..e {
            let t = hom_trace(f, &compose_hom(f, &basis[i], &basis[j]));
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    matrix::rank(f, &gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::from_i64;
    use crate::quiver::Quiver;
    use crate::rep::{direct_sum, tree_identity_rep};

    fn simple_at(q: &Quiver, x: usize) -> Rep<Rationals> {
        let f = Rationals;
        let mut dims = vec![0usize; q.vertex_count()];
        dims[x] = 1;
        Rep::zero_rep(&f, q.clone(), dims).unwrap()
    }

    #[test]
    fn hom_between_simples() {
        let f = Rationals;
        let q = Quiver::path(3);
        assert_eq!(hom_dim(&f, &simple_at(&q, 0), &simple_at(&q, 1)).unwrap(), 0);
        assert_eq!(hom_dim(&f, &simple_at(&q, 1), &simple_at(&q, 1)).unwrap(), 1);
    }

    #[test]
    fn end_of_tree_identity() {
        let f = Rationals;
        let t = Quiver::path(3);
        let rep = tree_identity_rep(&f, &t).unwrap();
        assert_eq!(hom_dim(&f, &rep, &rep).unwrap(), 1);
        assert_eq!(end_over_radical_dim_q(&rep).unwrap(), 1);
        let sum = direct_sum(&f, &rep, &rep).unwrap();
        assert_eq!(hom_dim(&f, &sum, &sum).unwrap(), 4);
        assert_eq!(end_over_radical_dim_q(&sum).unwrap(), 4);
    }

    #[test]
    fn end_of_jordan_blocks() {
        let f = Rationals;
        let s1 = Quiver::loop_quiver(1);
        // J_2(0): End spanned by I and J, radical spanned by J
        let j2 = Rep::<Rationals>::new(
            s1.clone(),
            vec![2],
            vec![from_i64(&f, &[&[0, 1], &[0, 0]])],
        )
        .unwrap();
        assert_eq!(hom_dim(&f, &j2, &j2).unwrap(), 2);
        assert_eq!(end_over_radical_dim_q(&j2).unwrap(), 1);
        // J_2(0) + J_1(0): the rank-1 nilpotent 3x3
        let n3 = Rep::<Rationals>::new(
            s1,
            vec![3],
            vec![from_i64(&f, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]])],
        )
        .unwrap();
        assert!(end_over_radical_dim_q(&n3).unwrap() > 1);
    }

    #[test]
    fn intertwining_checked() {
        let f = Rationals;
        let t = Quiver::path(2);
        let rep = tree_identity_rep(&f, &t).unwrap();
        let basis = hom_space(&f, &rep, &rep).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(is_hom(&f, &rep, &rep, &basis[0]));
        let bad = vec![from_i64(&f, &[&[1]]), from_i64(&f, &[&[2]])];
        assert!(!is_hom(&f, &rep, &rep, &bad));
    }

    #[test]
    fn hom_over_finite_field() {
        let f = crate::field::Gf::new(2, 1, None).unwrap();
        let t = Quiver::path(2);
        let dims = vec![1usize, 1];
        let mats = vec![matrix::identity(&f, 1)];
        let rep = Rep::<crate::field::Gf>::new(t, dims, mats).unwrap();
        assert_eq!(hom_dim(&f, &rep, &rep).unwrap(), 1);
    }
}
