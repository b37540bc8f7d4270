//! Lifting a labeled tree into the universal cover of the g-loop quiver.
//!
//! The g-loop quiver has one vertex and loops `x_0, ..., x_(g-1)`; its
//! universal cover is the infinite tree whose vertices are reduced words
//! in the free group on those letters, with an arrow labeled `l` from `w`
//! to `w * x_l`. A labeling of a finite tree's arrows by loop indices
//! determines, after choosing a base vertex sent to the empty word, a
//! unique lift; its image is a finite subtree of the cover, and the
//! original labeling factors through it.

use crate::error::{CoreError, Result};
use crate::quiver::{Quiver, QuiverMorphism};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A reduced word in the free group on `g` letters. Letter `l` is stored
/// as `l + 1`, its inverse as `-(l + 1)`; adjacent cancellations are
/// performed on construction, so equality of words is slice equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(label: usize) -> Self {
        FreeWord(vec![label as i32 + 1])
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.0.clone();
        for &x in &other.0 {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        FreeWord(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&x| -x).collect())
    }
}

impl std::fmt::Display for FreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, &x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            if x > 0 {
                write!(f, "x{}", x - 1)?;
            } else {
                write!(f, "x{}^-1", -x - 1)?;
            }
        }
        Ok(())
    }
}

/// The lift of a labeled tree into the cover of the g-loop quiver.
#[derive(Clone, Debug)]
pub struct CoverChart {
    /// Reduced word attached to each source-tree vertex.
    pub words: Vec<FreeWord>,
    /// The image: a finite subtree of the cover.
    pub image: Quiver,
    /// Word at each image vertex.
    pub image_words: Vec<FreeWord>,
    /// Loop label of each image arrow.
    pub image_labels: Vec<usize>,
    /// Tree onto its image.
    pub covering: QuiverMorphism,
    /// Image into the g-loop quiver (reads off labels).
    pub projection: QuiverMorphism,
    /// The original labeling as a morphism to the g-loop quiver.
    pub structure: QuiverMorphism,
}

/// Lifts a labeled tree to the cover: the base vertex is sent to the
/// empty word and each vertex to the reduced label word of its unique
/// walk from the base. No winding condition is imposed on the labels.
pub fn lift_to_cover(
    tree: &Quiver,
    labels: &[usize],
    g: usize,
    base: usize,
) -> Result<CoverChart> {
    if !tree.is_tree() {
        return Err(CoreError::NotATree(tree.to_spec()));
    }
    if labels.len() != tree.arrow_count() {
        return Err(CoreError::BadInput(
            "one label per arrow is required".into(),
        ));
    }
    if let Some(&l) = labels.iter().find(|&&l| l >= g) {
        return Err(CoreError::BadInput(format!(
            "label {} out of range for {} loops",
            l, g
        )));
    }
    if base >= tree.vertex_count() {
        return Err(CoreError::BadInput("base vertex out of range".into()));
    }

    let nv = tree.vertex_count();
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); nv];
    for (ai, a) in tree.arrows().iter().enumerate() {
        adj[a.tail].push((a.head, ai, true));
        adj[a.head].push((a.tail, ai, false));
    }
    let mut words: Vec<Option<FreeWord>> = vec![None; nv];
    words[base] = Some(FreeWord::identity());
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        let wv = words[v].clone().expect("visited vertices carry words");
        for &(u, ai, forward) in &adj[v] {
            if words[u].is_some() {
                continue;
            }
            let step = FreeWord::generator(labels[ai]);
            let wu = if forward {
                wv.mul(&step)
            } else {
                wv.mul(&step.inverse())
            };
            words[u] = Some(wu);
            queue.push_back(u);
        }
    }
    let words: Vec<FreeWord> = words
        .into_iter()
        .map(|w| w.expect("tree is connected"))
        .collect();

    // Image vertices: distinct words, indexed in word order.
    let mut vertex_index: BTreeMap<&FreeWord, usize> = BTreeMap::new();
    for w in &words {
        let next = vertex_index.len();
        vertex_index.entry(w).or_insert(next);
    }
    // BTreeMap assigns indices in insertion order above but iterates in
    // word order; re-index so vertex order is the deterministic word order.
    let image_words: Vec<FreeWord> = vertex_index.keys().map(|w| (*w).clone()).collect();
    for (i, w) in image_words.iter().enumerate() {
        *vertex_index.get_mut(w).expect("key present") = i;
    }
    let vmap: Vec<usize> = words.iter().map(|w| vertex_index[w]).collect();

    // Image arrows: out of each cover vertex there is at most one arrow
    // per label, so (tail index, label) dedups the arrow set.
    let mut keys: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (ai, a) in tree.arrows().iter().enumerate() {
        keys.insert((vmap[a.tail], labels[ai]));
    }
    let keys: Vec<(usize, usize)> = keys.into_iter().collect();
    let mut image_arrows = Vec::with_capacity(keys.len());
    let mut image_labels = Vec::with_capacity(keys.len());
    for &(t, l) in &keys {
        let head_word = image_words[t].mul(&FreeWord::generator(l));
        let h = *vertex_index
            .get(&head_word)
            .ok_or_else(|| CoreError::Inconsistent("cover arrow head missing from image".into()))?;
        image_arrows.push((t, h));
        image_labels.push(l);
    }
    let image = Quiver::new(image_words.len(), image_arrows)?;
    assert!(
        image.is_tree(),
        "the image of a lifted tree must be a subtree of the cover"
    );

    let amap: Vec<usize> = tree
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            keys.binary_search(&(vmap[a.tail], labels[ai]))
                .expect("image arrow recorded for every tree arrow")
        })
        .collect();
    let covering = QuiverMorphism::new(tree.clone(), image.clone(), vmap, amap)?;

    let s_g = Quiver::loop_quiver(g);
    let projection = QuiverMorphism::new(
        image.clone(),
        s_g.clone(),
        vec![0; image.vertex_count()],
        image_labels.clone(),
    )?;
    let structure = QuiverMorphism::new(
        tree.clone(),
        s_g,
        vec![0; tree.vertex_count()],
        labels.to_vec(),
    )?;
    let composed = covering.compose(&projection)?;
    assert!(
        composed == structure,
        "projection after covering must reproduce the labeling"
    );

    Ok(CoverChart {
        words,
        image,
        image_words,
        image_labels,
        covering,
        projection,
        structure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::rep::iso::is_isomorphic_resolved;
    use crate::rep::{pushforward, tree_identity_rep};

    #[test]
    fn word_arithmetic() {
        let a = FreeWord::generator(0);
        let b = FreeWord::generator(1);
        assert_eq!(a.mul(&a.inverse()), FreeWord::identity());
        let ab = a.mul(&b);
        assert_eq!(ab.letters(), &[1, 2]);
        assert_eq!(ab.inverse().letters(), &[-2, -1]);
        assert_eq!(ab.mul(&ab.inverse()), FreeWord::identity());
        assert_eq!(format!("{}", ab.inverse()), "x1^-1.x0^-1");
        assert_eq!(format!("{}", FreeWord::identity()), "e");
    }

    #[test]
    fn single_vertex_lift() {
        let t = Quiver::new(1, vec![]).unwrap();
        let chart = lift_to_cover(&t, &[], 2, 0).unwrap();
        assert_eq!(chart.words, vec![FreeWord::identity()]);
        assert_eq!(chart.image.vertex_count(), 1);
        assert_eq!(chart.image.arrow_count(), 0);
    }

    #[test]
    fn five_vertex_example_collapses_middle_row() {
        // Two-level tree over three loops: vertices 0, 1 on top, 2, 3 in
        // the middle, 4 at the bottom; the two middle vertices reach the
        // base along arrows with the same label, so they receive the same
        // word and the image is a 4-vertex star.
        let t = Quiver::new(5, vec![(0, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let labels = [0usize, 1, 2, 2];
        let chart = lift_to_cover(&t, &labels, 3, 4).unwrap();
        assert_eq!(chart.words[4], FreeWord::identity());
        assert_eq!(chart.words[2], chart.words[3]);
        assert_eq!(chart.words[2], FreeWord::generator(2).inverse());
        assert_ne!(chart.words[0], chart.words[1]);
        assert_eq!(chart.image.vertex_count(), 4);
        assert_eq!(chart.image.arrow_count(), 3);
        // the collapsed middle vertex has two arrows in and one out
        let center = chart.covering.vertex_map[2];
        let ins = chart
            .image
            .arrows()
            .iter()
            .filter(|a| a.head == center)
            .count();
        let outs = chart
            .image
            .arrows()
            .iter()
            .filter(|a| a.tail == center)
            .count();
        assert_eq!((ins, outs), (2, 1));
        // pushforward of the tree identity along the covering is
        // one-dimensional except over the collapsed vertex
        let f = Rationals;
        let it = tree_identity_rep(&f, &t).unwrap();
        let pushed = pushforward(&f, &chart.covering, &it).unwrap();
        let mut dims = pushed.dims.clone();
        assert_eq!(dims[center], 2);
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 1, 2]);
    }

    #[test]
    fn pushforward_factors_through_the_cover() {
        let f = Rationals;
        let t = Quiver::new(4, vec![(0, 1), (2, 1), (1, 3)]).unwrap();
        for labels in [[0usize, 0, 1], [1, 0, 0], [0, 0, 0]] {
            let chart = lift_to_cover(&t, &labels, 2, 0).unwrap();
            let it = tree_identity_rep(&f, &t).unwrap();
            let direct = pushforward(&f, &chart.structure, &it).unwrap();
            let via_cover =
                pushforward(&f, &chart.projection, &pushforward(&f, &chart.covering, &it).unwrap())
                    .unwrap();
            assert_eq!(direct.dims, via_cover.dims);
            assert!(is_isomorphic_resolved(&f, &direct, &via_cover, 17).unwrap());
        }
    }

    #[test]
    fn base_choice_changes_words_not_image_size() {
        let t = Quiver::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let labels = [0usize, 0];
        let from0 = lift_to_cover(&t, &labels, 1, 0).unwrap();
        let from2 = lift_to_cover(&t, &labels, 1, 2).unwrap();
        assert_eq!(from0.image.vertex_count(), 3);
        assert_eq!(from2.image.vertex_count(), 3);
        assert!(from0.words[0].is_identity());
        assert!(from2.words[2].is_identity());
    }

    #[test]
    fn rejects_bad_inputs() {
        let t = Quiver::new(2, vec![(0, 1)]).unwrap();
        assert!(lift_to_cover(&t, &[0, 1], 2, 0).is_err());
        assert!(lift_to_cover(&t, &[2], 2, 0).is_err());
        assert!(lift_to_cover(&t, &[0], 2, 5).is_err());
        let not_tree = Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(lift_to_cover(&not_tree, &[0, 0], 1, 0).is_err());
    }
}
