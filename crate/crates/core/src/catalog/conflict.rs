//! Conflict graphs of quiver arrow sets and their chromatic polynomials.
//!
//! Two arrows conflict when they share a tail or share a head; a labeling
//! avoiding equal labels on conflicting arrows is exactly a proper coloring
//! of the conflict graph. Surjective labeling counts follow by inclusion-
//! exclusion over the label set.

use crate::error::{CoreError, Result};
use crate::exact::polyq::PolyQ;
use crate::exact::scalar::{binomial_u, rat, rat_to_int, Int};
use crate::quiver::Quiver;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::HashMap;

/// Simple undirected graph; edges normalized `(i, j)` with `i < j`,
/// deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl ConflictGraph {
    pub fn new(nodes: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            assert!(e.0 < e.1 && e.1 < nodes, "bad edge");
        }
        edges.sort_unstable();
        edges.dedup();
        ConflictGraph { nodes, edges }
    }
}

/// Nodes are the arrows of `q`; arrows sharing a tail or sharing a head are
/// joined. A head of one arrow equal to a tail of another is no conflict.
pub fn conflict_graph(q: &Quiver) -> ConflictGraph {
    let arrows = q.arrows();
    let mut edges = Vec::new();
    for i in 0..arrows.len() {
        for j in i + 1..arrows.len() {
            if arrows[i].tail == arrows[j].tail || arrows[i].head == arrows[j].head {
                edges.push((i, j));
            }
        }
    }
    ConflictGraph::new(arrows.len(), edges)
}

type Memo = HashMap<(usize, Vec<(usize, usize)>), PolyQ>;

/// Chromatic polynomial, exact in the number of colors.
pub fn chromatic_polynomial(g: &ConflictGraph) -> PolyQ {
    let mut memo: Memo = HashMap::new();
    chromatic_rec(g.nodes, g.edges.clone(), &mut memo)
}

fn falling_factorial(n: usize) -> PolyQ {
    let mut acc = PolyQ::one();
    for i in 0..n {
        acc = acc.mul(&PolyQ::from_coeffs(vec![rat(-(i as i64)), rat(1)]));
    }
    acc
}

fn contract(nodes: usize, edges: &[(usize, usize)], e: (usize, usize)) -> (usize, Vec<(usize, usize)>) {
    // merge e.1 into e.0, compact labels, drop the contracted edge and dedupe
    let (u, v) = e;
    let relabel = |w: usize| -> usize {
        if w == v {
            u
        } else if w > v {
            w - 1
        } else {
            w
        }
    };
    let mut out = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let (mut x, mut y) = (relabel(a), relabel(b));
        if x == y {
            continue; // the contracted edge itself; parallels cannot occur in simple graphs
        }
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        out.push((x, y));
    }
    out.sort_unstable();
    out.dedup();
    (nodes - 1, out)
}

fn chromatic_rec(nodes: usize, edges: Vec<(usize, usize)>, memo: &mut Memo) -> PolyQ {
    if edges.is_empty() {
        return PolyQ::monomial(nodes, rat(1));
    }
    let full = nodes * (nodes - 1) / 2;
    if edges.len() == full {
        return falling_factorial(nodes);
    }
    let key = (nodes, edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (nodes, edges) = (key.0, key.1.clone());
    let missing = full - edges.len();
    let result = if missing < edges.len() {
        // addition-contraction toward the complete graph
        let e = first_non_edge(nodes, &edges);
        let mut added = edges.clone();
        added.push(e);
        added.sort_unstable();
        let with_e = chromatic_rec(nodes, added, memo);
        let (cn, ce) = contract(nodes, &edges, e);
        let contracted = chromatic_rec(cn, ce, memo);
        with_e.add(&contracted)
    } else {
        // deletion-contraction toward the edgeless graph
        let e = edges[0];
        let rest: Vec<(usize, usize)> = edges[1..].to_vec();
        let without = chromatic_rec(nodes, rest, memo);
        let (cn, ce) = contract(nodes, &edges, e);
        let contracted = chromatic_rec(cn, ce, memo);
        without.sub(&contracted)
    };
    memo.insert((nodes, edges), result.clone());
    result
}

fn first_non_edge(nodes: usize, edges: &[(usize, usize)]) -> (usize, usize) {
    for i in 0..nodes {
        for j in i + 1..nodes {
            if !edges.contains(&(i, j)) {
                return (i, j);
            }
        }
    }
    unreachable!("graph is complete")
}

/// `W(k)` for `k = 1 ..= arrow count`: labelings by exactly `k` labels, all
/// used, with no label repeated on a common tail or common head.
pub fn winding_counts(q: &Quiver) -> Result<Vec<u64>> {
    let chi = chromatic_polynomial(&conflict_graph(q));
    (1..=q.arrow_count())
        .map(|k| winding_from_chromatic(&chi, k))
        .collect()
}

/// Exactly-`k`-surjective count from the chromatic polynomial by
/// inclusion-exclusion: `W(k) = sum_j (-1)^{k-j} C(k,j) chi(j)`.
pub fn winding_from_chromatic(chi: &PolyQ, k: usize) -> Result<u64> {
    let mut acc = Int::zero();
    for j in 0..=k {
        let cj = rat_to_int(&chi.eval_int(j as i64)).ok_or_else(|| {
            CoreError::Inconsistent("chromatic polynomial not integer valued".into())
        })?;
        let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
        acc += binomial_u(k as u64, j as u64) * cj * Int::from(sign);
    }
    if acc.is_negative() {
        return Err(CoreError::Inconsistent(format!(
            "negative surjective labeling count {}",
            acc
        )));
    }
    acc.to_u64().ok_or_else(|| CoreError::Inconsistent("labeling count overflow".into()))
}
