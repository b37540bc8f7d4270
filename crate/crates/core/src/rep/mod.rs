//! Quiver representations over an exact field, with pushforward and
//! pullback along quiver morphisms.

pub mod cover;
pub mod hom;
pub mod indec;
pub mod iso;

use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::matrix::{self, Matrix};
use crate::quiver::{Quiver, QuiverMorphism};

/// A representation: one matrix per arrow, of shape
/// `dims[head] x dims[tail]`, acting on column vectors.
#[derive(Clone, Debug)]
pub struct Rep<F: Field> {
    pub quiver: Quiver,
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix<F::Elem>>,
}

impl<F: Field> PartialEq for Rep<F> {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.dims == other.dims && self.mats == other.mats
    }
}

impl<F: Field> Eq for Rep<F> {}

impl<F: Field> Rep<F> {
    pub fn new(quiver: Quiver, dims: Vec<usize>, mats: Vec<Matrix<F::Elem>>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(CoreError::BadInput(format!(
                "dimension vector length {} for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if mats.len() != quiver.arrow_count() {
            return Err(CoreError::BadInput(format!(
                "{} matrices for {} arrows",
                mats.len(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(mats.iter()) {
            if m.rows != dims[a.head] || m.cols != dims[a.tail] {
                return Err(CoreError::BadInput(format!(
                    "matrix for arrow {}->{} has shape {}x{}, want {}x{}",
                    a.tail, a.head, m.rows, m.cols, dims[a.head], dims[a.tail]
                )));
            }
        }
        Ok(Rep { quiver, dims, mats })
    }

    pub fn zero_rep(f: &F, quiver: Quiver, dims: Vec<usize>) -> Result<Self> {
        let mats = quiver
            .arrows()
            .iter()
            .map(|a| matrix::zero(f, dims[a.head], dims[a.tail]))
            .collect();
        Rep::new(quiver, dims, mats)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_sincere(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    /// Count of nonzero entries and of entries equal to one, across all
    /// arrow matrices.
    pub fn sparsity(&self, f: &F) -> (usize, usize) {
        let one = f.one();
        let mut nonzero = 0;
        let mut ones = 0;
        for m in &self.mats {
            for e in m.entries() {
                if !f.is_zero(e) {
                    nonzero += 1;
                    if *e == one {
                        ones += 1;
                    }
                }
            }
        }
        (nonzero, ones)
    }
}

/// The one-dimensional-everywhere representation of a tree quiver, with
/// identity maps on every arrow; the unique sincere indecomposable of
/// dimension equal to the vertex count.
pub fn tree_identity_rep<F: Field>(f: &F, tree: &Quiver) -> Result<Rep<F>> {
    if !tree.is_tree() {
        return Err(CoreError::NotATree(tree.to_spec()));
    }
    let dims = vec![1usize; tree.vertex_count()];
    let mats = (0..tree.arrow_count())
        .map(|_| matrix::identity(f, 1))
        .collect();
    Rep::new(tree.clone(), dims, mats)
}

/// Direct sum, blocks of `a` before blocks of `b` at every vertex.
pub fn direct_sum<F: Field>(f: &F, a: &Rep<F>, b: &Rep<F>) -> Result<Rep<F>> {
    if a.quiver != b.quiver {
        return Err(CoreError::BadInput("direct sum across quivers".into()));
    }
    let dims: Vec<usize> = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
    let mats = a
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, ar)| {
            let mut m = matrix::zero(f, dims[ar.head], dims[ar.tail]);
            copy_block(f, &mut m, &a.mats[i], 0, 0);
            copy_block(f, &mut m, &b.mats[i], a.dims[ar.head], a.dims[ar.tail]);
            m
        })
        .collect();
    Rep::new(a.quiver.clone(), dims, mats)
}

fn copy_block<F: Field>(
    _f: &F,
    dst: &mut Matrix<F::Elem>,
    src: &Matrix<F::Elem>,
    row0: usize,
    col0: usize,
) {
    for i in 0..src.rows {
        for j in 0..src.cols {
            dst.set(row0 + i, col0 + j, src.get(i, j).clone());
        }
    }
}

/// Offsets of each source vertex inside the fiber direct sum, ascending
/// source-vertex order within each fiber.
fn fiber_offsets<F: Field>(f: &QuiverMorphism, v: &Rep<F>) -> (Vec<usize>, Vec<usize>) {
    let mut target_dims = vec![0usize; f.target.vertex_count()];
    let mut offsets = vec![0usize; f.source.vertex_count()];
    for (y, &x) in f.vertex_map.iter().enumerate() {
        offsets[y] = target_dims[x];
        target_dims[x] += v.dims[y];
    }
    (target_dims, offsets)
}

/// Direct sum over fibers: the pushforward places the matrix of each source
/// arrow `b` as a block of the matrix of `f(b)`, at row offset of `hb` and
/// column offset of `tb`.
pub fn pushforward<F: Field>(field: &F, f: &QuiverMorphism, v: &Rep<F>) -> Result<Rep<F>> {
    if v.quiver != f.source {
        return Err(CoreError::BadInput(
            "representation does not live on the morphism source".into(),
        ));
    }
    let (target_dims, offsets) = fiber_offsets(f, v);
    let mut mats: Vec<Matrix<F::Elem>> = f
        .target
        .arrows()
        .iter()
        .map(|a| matrix::zero(field, target_dims[a.head], target_dims[a.tail]))
        .collect();
    for (b, &a) in f.arrow_map.iter().enumerate() {
        let arrow = f.source.arrows()[b];
        copy_block(
            field,
            &mut mats[a],
            &v.mats[b],
            offsets[arrow.head],
            offsets[arrow.tail],
        );
    }
    Rep::new(f.target.clone(), target_dims, mats)
}

/// Composition with the morphism: vertex spaces and arrow maps are copied
/// from the image.
pub fn pullback<F: Field>(_field: &F, f: &QuiverMorphism, w: &Rep<F>) -> Result<Rep<F>> {
    if w.quiver != f.target {
        return Err(CoreError::BadInput(
            "representation does not live on the morphism target".into(),
        ));
    }
    let dims: Vec<usize> = f.vertex_map.iter().map(|&x| w.dims[x]).collect();
    let mats: Vec<Matrix<F::Elem>> = f.arrow_map.iter().map(|&a| w.mats[a].clone()).collect();
    Rep::new(f.source.clone(), dims, mats)
}
