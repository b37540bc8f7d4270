//! Canonical forms for oriented trees: a code that two tree quivers share
//! exactly when they are isomorphic as directed graphs, a canonical
//! representative rebuilt from the code, and the automorphism group order.
//!
//! Rooted subtrees are encoded recursively with children sorted by code;
//! the root is the center of the underlying tree. For bicentral trees the
//! two halves are combined through the direction of the central edge, which
//! also breaks the half-swap, so the automorphism order is always the
//! product over the halves.

use crate::error::{CoreError, Result};
use crate::quiver::Quiver;

pub const DIR_OUT: u8 = b'>';
pub const DIR_IN: u8 = b'<';

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: Vec<u8>,
    pub representative: Quiver,
    pub aut_order: u64,
}

/// Neighbor lists `(other vertex, arrow points away from this vertex)`.
fn adjacency(q: &Quiver) -> Vec<Vec<(usize, bool)>> {
    let mut adj = vec![Vec::new(); q.vertex_count()];
    for a in q.arrows() {
        adj[a.tail].push((a.head, true));
        adj[a.head].push((a.tail, false));
    }
    adj
}

/// One or two central vertices of the underlying tree, by leaf peeling.
pub fn tree_centers(adj: &[Vec<(usize, bool)>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    let mut alive = vec![true; n];
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            alive[v] = false;
            remaining -= 1;
            for &(w, _) in &adj[v] {
                if alive[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut centers: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    centers.sort_unstable();
    centers
}

fn rooted_code(adj: &[Vec<(usize, bool)>], v: usize, parent: Option<usize>) -> (Vec<u8>, u64) {
    let mut entries: Vec<(Vec<u8>, u64)> = Vec::new();
    for &(w, out) in &adj[v] {
        if Some(w) == parent {
            continue;
        }
        let (child_code, child_aut) = rooted_code(adj, w, Some(v));
        let mut bytes = Vec::with_capacity(child_code.len() + 1);
        bytes.push(if out { DIR_OUT } else { DIR_IN });
        bytes.extend_from_slice(&child_code);
        entries.push((bytes, child_aut));
    }
    entries.sort();
    let mut aut = 1u64;
    let mut code = Vec::with_capacity(entries.iter().map(|(b, _)| b.len()).sum::<usize>() + 2);
    code.push(b'(');
    let mut run = 0u64;
    for (i, (bytes, child_aut)) in entries.iter().enumerate() {
        aut *= child_aut;
        run += 1;
        if i + 1 >= entries.len() || entries[i + 1].0 != *bytes {
            for m in 2..=run {
                aut *= m;
            }
            run = 0;
        }
        code.extend_from_slice(bytes);
    }
    code.push(b')');
    (code, aut)
}

pub fn canonical_form(q: &Quiver) -> Result<CanonicalForm> {
    if !q.is_tree() {
        return Err(CoreError::NotATree(q.to_spec()));
    }
    let adj = adjacency(q);
    let centers = tree_centers(&adj);
    let (code, aut_order) = match centers.as_slice() {
        [c] => rooted_code(&adj, *c, None),
        [a, b] => {
            let (ca, auta) = rooted_code(&adj, *a, Some(*b));
            let (cb, autb) = rooted_code(&adj, *b, Some(*a));
            let a_to_b = adj[*a]
                .iter()
                .find(|&&(w, _)| w == *b)
                .map(|&(_, out)| out)
                .expect("centers are adjacent");
            let mut form1 = vec![b'[', if a_to_b { DIR_OUT } else { DIR_IN }];
            form1.extend_from_slice(&ca);
            form1.extend_from_slice(&cb);
            form1.push(b']');
            let mut form2 = vec![b'[', if a_to_b { DIR_IN } else { DIR_OUT }];
            form2.extend_from_slice(&cb);
            form2.extend_from_slice(&ca);
            form2.push(b']');
            (form1.min(form2), auta * autb)
        }
        _ => unreachable!("a tree has one or two centers"),
    };
    let representative = quiver_from_code(&code)?;
    Ok(CanonicalForm {
        code,
        representative,
        aut_order,
    })
}

/// Rebuilds the canonical representative from a code; vertices are numbered
/// in preorder.
pub fn quiver_from_code(code: &[u8]) -> Result<Quiver> {
    let bad = || CoreError::BadInput("malformed tree code".to_string());
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    let mut next_vertex = 0usize;
    let mut pos = 0usize;

    fn parse_tree(
        code: &[u8],
        pos: &mut usize,
        next_vertex: &mut usize,
        arrows: &mut Vec<(usize, usize)>,
    ) -> Result<usize> {
        let bad = || CoreError::BadInput("malformed tree code".to_string());
        if code.get(*pos) != Some(&b'(') {
            return Err(bad());
        }
        *pos += 1;
        let v = *next_vertex;
        *next_vertex += 1;
        loop {
            match code.get(*pos) {
                Some(&b')') => {
                    *pos += 1;
                    return Ok(v);
                }
                Some(&dir) if dir == DIR_OUT || dir == DIR_IN => {
                    *pos += 1;
                    let w = parse_tree(code, pos, next_vertex, arrows)?;
                    if dir == DIR_OUT {
                        arrows.push((v, w));
                    } else {
                        arrows.push((w, v));
                    }
                }
                _ => return Err(bad()),
            }
        }
    }

    match code.first() {
        Some(&b'(') => {
            parse_tree(code, &mut pos, &mut next_vertex, &mut arrows)?;
        }
        Some(&b'[') => {
            pos = 1;
            let dir = *code.get(pos).ok_or_else(bad)?;
            if dir != DIR_OUT && dir != DIR_IN {
                return Err(bad());
            }
            pos += 1;
            let a = parse_tree(code, &mut pos, &mut next_vertex, &mut arrows)?;
            let b = parse_tree(code, &mut pos, &mut next_vertex, &mut arrows)?;
            if code.get(pos) != Some(&b']') {
                return Err(bad());
            }
            pos += 1;
            if dir == DIR_OUT {
                arrows.push((a, b));
            } else {
                arrows.push((b, a));
            }
        }
        _ => return Err(bad()),
    }
    if pos != code.len() {
        return Err(bad());
    }
    Quiver::new(next_vertex, arrows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perm_isomorphic(a: &Quiver, b: &Quiver) -> bool {
        if a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count() {
            return false;
        }
        let n = a.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sorted_b = b.arrow_pairs();
        sorted_b.sort_unstable();
        loop {
            let mut mapped: Vec<(usize, usize)> =
                a.arrow_pairs().iter().map(|&(t, h)| (perm[t], perm[h])).collect();
            mapped.sort_unstable();
            if mapped == sorted_b {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn brute_aut_order(q: &Quiver) -> u64 {
        let n = q.vertex_count();
        let mut sorted: Vec<(usize, usize)> = q.arrow_pairs();
        sorted.sort_unstable();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0u64;
        loop {
            let mut mapped: Vec<(usize, usize)> =
                q.arrow_pairs().iter().map(|&(t, h)| (perm[t], perm[h])).collect();
            mapped.sort_unstable();
            if mapped == sorted {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                return count;
            }
        }
    }

    #[test]
    fn rejects_non_trees() {
        assert!(canonical_form(&Quiver::loop_quiver(1)).is_err());
        let cycle = Quiver::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(canonical_form(&cycle).is_err());
    }

    #[test]
    fn relabeling_invariance() {
        // 3-path under both labelings of the middle vertex
        let p = Quiver::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let p2 = Quiver::new(3, vec![(2, 0), (0, 1)]).unwrap();
        let ca = canonical_form(&p).unwrap();
        let cb = canonical_form(&p2).unwrap();
        assert_eq!(ca.code, cb.code);
        assert!(all_perm_isomorphic(&ca.representative, &p));
    }

    #[test]
    fn distinguishes_orientations() {
        let in_star = Quiver::star(&[true, true]);
        let out_star = Quiver::star(&[false, false]);
        let path = Quiver::path(3);
        let codes: Vec<Vec<u8>> = [&in_star, &out_star, &path]
            .iter()
            .map(|q| canonical_form(q).unwrap().code)
            .collect();
        assert_ne!(codes[0], codes[1]);
        assert_ne!(codes[0], codes[2]);
        assert_ne!(codes[1], codes[2]);
    }

    #[test]
    fn representative_round_trip() {
        let q = Quiver::new(5, vec![(1, 0), (2, 0), (0, 3), (3, 4)]).unwrap();
        let c = canonical_form(&q).unwrap();
        let again = canonical_form(&c.representative).unwrap();
        assert_eq!(c.code, again.code);
        assert_eq!(c.representative, again.representative);
        assert!(all_perm_isomorphic(&c.representative, &q));
    }

    #[test]
    fn aut_orders_match_brute_force() {
        let cases = vec![
            Quiver::new(1, vec![]).unwrap(),
            Quiver::path(2),
            Quiver::star(&[true, true]),
            Quiver::star(&[false, false]),
            Quiver::path(4),
            Quiver::star(&[true, true, true]),
            Quiver::star(&[true, true, false]),
            Quiver::star(&[true, true, true, true]),
            Quiver::new(5, vec![(1, 0), (2, 0), (3, 0), (3, 4)]).unwrap(),
            Quiver::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap(),
        ];
        for q in cases {
            let c = canonical_form(&q).unwrap();
            assert_eq!(c.aut_order, brute_aut_order(&q), "aut of {}", q.to_spec());
        }
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::new(1, vec![]).unwrap();
        let c = canonical_form(&q).unwrap();
        assert_eq!(c.code, b"()".to_vec());
        assert_eq!(c.aut_order, 1);
        assert_eq!(c.representative, q);
    }
}
