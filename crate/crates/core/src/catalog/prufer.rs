//! Labeled tree enumeration through Pruefer sequences.

/// Edge list of the labeled tree on `0..d` encoded by `seq`
/// (`seq.len() == d - 2`, entries in `0..d`).
pub fn prufer_decode(seq: &[usize], d: usize) -> Vec<(usize, usize)> {
    assert!(d >= 2);
    assert_eq!(seq.len(), d - 2);
    let mut degree = vec![1usize; d];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(d - 1);
    let mut used = vec![false; d];
    for &s in seq {
        let leaf = (0..d).find(|&v| !used[v] && degree[v] == 1).unwrap();
        edges.push((leaf, s));
        used[leaf] = true;
        degree[s] -= 1;
    }
    let mut last = (0..d).filter(|&v| !used[v]);
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    edges.push((u, v));
    edges
}

/// Calls `f` with the edge list of every labeled tree on `d >= 2` vertices,
/// in Pruefer-sequence odometer order (`d^{d-2}` trees).
pub fn for_each_labeled_tree<F: FnMut(&[(usize, usize)])>(d: usize, mut f: F) {
    assert!(d >= 2);
    if d == 2 {
        f(&[(0, 1)]);
        return;
    }
    let len = d - 2;
    let mut seq = vec![0usize; len];
    loop {
        let edges = prufer_decode(&seq, d);
        f(&edges);
        // odometer increment
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            seq[i] += 1;
            if seq[i] < d {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn decode_known_sequence() {
        // classic example: sequence (3,3,3,4) on 6 vertices
        let edges = prufer_decode(&[3, 3, 3, 4], 6);
        let set: HashSet<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let expected: HashSet<(usize, usize)> =
            [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)].into_iter().collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn cayley_counts() {
        for d in 2..=6usize {
            let mut count = 0u64;
            let mut distinct = HashSet::new();
            for_each_labeled_tree(d, |edges| {
                count += 1;
                let mut norm: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| (a.min(b), a.max(b)))
                    .collect();
                norm.sort_unstable();
                distinct.insert(norm);
            });
            let expected = (d as u64).pow(d as u32 - 2);
            assert_eq!(count, expected, "d={}", d);
            assert_eq!(distinct.len() as u64, expected, "d={} distinct", d);
        }
    }

    #[test]
    fn every_decode_is_a_tree() {
        for_each_labeled_tree(5, |edges| {
            assert_eq!(edges.len(), 4);
            let q = crate::quiver::Quiver::new(5, edges.to_vec()).unwrap();
            assert!(q.is_tree());
        });
    }
}
