//! Brute-force count of absolutely indecomposable representation
//! classes over a small finite field: enumerate every matrix tuple,
//! close up under the base-change group action with a union-find, and
//! test one canonical representative per orbit.

use crate::error::{CoreError, Result};
use crate::field::{Field, FieldSpec, Gf};
use crate::matrix::{self, Matrix};
use crate::quiver::Quiver;
use crate::rep::indec::is_absolutely_indecomposable_gf;
use crate::rep::Rep;

/// Cap on the number of matrix tuples enumerated.
pub const FF_STATE_LIMIT: u64 = 10_000_000;

struct Generator {
    vertex: usize,
    mat: Matrix<u16>,
    inv: Matrix<u16>,
}

/// Generators of the product of general linear groups: at each vertex,
/// all elementary transvections plus, when the field has more than two
/// elements, diagonal matrices with one primitive-element entry.
fn base_change_generators(f: &Gf, dims: &[usize]) -> Vec<Generator> {
    let mut gens = Vec::new();
    let gamma = f.primitive_element();
    let gamma_inv = f.inv(&gamma).expect("primitive element is invertible");
    for (x, &n) in dims.iter().enumerate() {
        if n == 0 {
            continue;
        }
        if gamma != f.one() {
            for i in 0..n {
                let mut mat = matrix::identity(f, n);
                mat.set(i, i, gamma);
                let mut inv = matrix::identity(f, n);
                inv.set(i, i, gamma_inv);
                gens.push(Generator { vertex: x, mat, inv });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut mat = matrix::identity(f, n);
                mat.set(i, j, f.one());
                let mut inv = matrix::identity(f, n);
                inv.set(i, j, f.neg(&f.one()));
                gens.push(Generator { vertex: x, mat, inv });
            }
        }
    }
    gens
}

struct StateCodec {
    q: u64,
    /// Matrix shape per arrow.
    shapes: Vec<(usize, usize)>,
    cells: usize,
}

impl StateCodec {
    fn new(quiver: &Quiver, dims: &[usize], q: u64) -> StateCodec {
        let shapes: Vec<(usize, usize)> = quiver
            .arrows()
            .iter()
            .map(|a| (dims[a.head], dims[a.tail]))
            .collect();
        let cells = shapes.iter().map(|&(r, c)| r * c).sum();
        StateCodec { q, shapes, cells }
    }

    fn decode(&self, mut state: u64) -> Vec<Matrix<u16>> {
        let mut mats = Vec::with_capacity(self.shapes.len());
        for &(rows, cols) in &self.shapes {
            let mut m = Matrix::filled(rows, cols, 0u16);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, (state % self.q) as u16);
                    state /= self.q;
                }
            }
            mats.push(m);
        }
        mats
    }

    fn encode(&self, mats: &[Matrix<u16>]) -> u64 {
        let mut state = 0u64;
        let mut scale = 1u64;
        for m in mats {
            for e in m.entries() {
                state += (*e as u64) * scale;
                scale *= self.q;
            }
        }
        state
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// The smaller index becomes the root, so each orbit's canonical
    /// representative is its minimum state.
    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
    }
}

/// Number of isomorphism classes of absolutely indecomposable
/// representations with dimension vector `dims` over the given field.
pub fn count_abs_indec_ff(quiver: &Quiver, dims: &[usize], field: &FieldSpec) -> Result<u64> {
    if dims.len() != quiver.vertex_count() {
        return Err(CoreError::BadInput(
            "dimension vector length must match the vertex count".into(),
        ));
    }
    let f = field.build_finite()?;
    let codec = StateCodec::new(quiver, dims, f.q());
    let states = f
        .q()
        .checked_pow(codec.cells as u32)
        .filter(|&s| s <= FF_STATE_LIMIT)
        .ok_or_else(|| CoreError::ResourceLimit {
            what: "finite-field representation enumeration",
            detail: format!(
                "{}^{} matrix tuples exceed {}",
                f.q(),
                codec.cells,
                FF_STATE_LIMIT
            ),
        })?;
    let gens = base_change_generators(&f, dims);
    let mut uf = UnionFind::new(states as usize);
    for state in 0..states {
        let mats = codec.decode(state);
        for gen in &gens {
            let mut moved = Vec::with_capacity(mats.len());
            for (a, m) in quiver.arrows().iter().zip(&mats) {
                let mut img = m.clone();
                if a.head == gen.vertex {
                    img = matrix::mul(&f, &gen.mat, &img);
                }
                if a.tail == gen.vertex {
                    img = matrix::mul(&f, &img, &gen.inv);
                }
                moved.push(img);
            }
            uf.union(state as u32, codec.encode(&moved) as u32);
        }
    }
    let mut count = 0u64;
    for state in 0..states {
        if uf.find(state as u32) != state as u32 {
            continue;
        }
        let rep = Rep::<Gf>::new(quiver.clone(), dims.to_vec(), codec.decode(state))?;
        if rep.total_dim() == 0 {
            continue;
        }
        if is_absolutely_indecomposable_gf(&f, &rep)? {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_loop_dimension_two_over_f3() {
        // Jordan blocks J_2(x), one class per eigenvalue
        let s1 = Quiver::loop_quiver(1);
        let n = count_abs_indec_ff(&s1, &[2], &FieldSpec::finite(3, 1)).unwrap();
        assert_eq!(n, 3);
    }

    #[test]
    fn two_loops_dimension_two_over_f2() {
        let s2 = Quiver::loop_quiver(2);
        let n = count_abs_indec_ff(&s2, &[2], &FieldSpec::finite(2, 1)).unwrap();
        assert_eq!(n, 40);
    }

    #[test]
    fn single_arrow_over_f2() {
        let a2 = Quiver::path(2);
        let n = count_abs_indec_ff(&a2, &[1, 1], &FieldSpec::finite(2, 1)).unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn scalars_on_one_loop_over_f4() {
        // dimension 1 on one loop: the classes are the field elements
        let s1 = Quiver::loop_quiver(1);
        let n = count_abs_indec_ff(&s1, &[1], &FieldSpec::finite(2, 2)).unwrap();
        assert_eq!(n, 4);
    }

    #[test]
    fn four_leaf_star_over_f2() {
        let star = Quiver::star(&[true, true, true, true]);
        let n = count_abs_indec_ff(&star, &[2, 1, 1, 1, 1], &FieldSpec::finite(2, 1)).unwrap();
        assert_eq!(n, 6);
    }

    #[test]
    fn doubled_arrow_over_f3_matches_polynomial() {
        let (q, dims) = crate::kac::doubled_arrow_instance();
        let n = count_abs_indec_ff(&q, &dims, &FieldSpec::finite(3, 1)).unwrap();
        // q^2 + 2q + 2 at q = 3
        assert_eq!(n, 17);
    }

    #[test]
    fn guard_trips_on_large_spaces() {
        let s2 = Quiver::loop_quiver(2);
        let err = count_abs_indec_ff(&s2, &[3], &FieldSpec::finite(2, 2)).unwrap_err();
        assert!(matches!(err, CoreError::ResourceLimit { .. }));
    }
}
