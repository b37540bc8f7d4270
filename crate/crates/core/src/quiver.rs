//! Quivers (finite directed multigraphs), dimension vectors, and quiver
//! morphisms.

use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};

pub type DimVector = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(t, h) in &arrows {
            if t >= vertices || h >= vertices {
                return Err(CoreError::BadInput(format!(
                    "arrow ({},{}) out of range for {} vertices",
                    t, h, vertices
                )));
            }
        }
        Ok(Quiver {
            vertices,
            arrows: arrows
                .into_iter()
                .map(|(tail, head)| Arrow { tail, head })
                .collect(),
        })
    }

    /// One vertex with `g` loops.
    pub fn loop_quiver(g: usize) -> Self {
        Quiver {
            vertices: 1,
            arrows: vec![Arrow { tail: 0, head: 0 }; g],
        }
    }

    /// Linear `A_n` quiver `0 -> 1 -> ... -> n-1`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        Quiver {
            vertices: n,
            arrows: (0..n.saturating_sub(1))
                .map(|i| Arrow { tail: i, head: i + 1 })
                .collect(),
        }
    }

    /// Star with center 0 and `dirs.len()` leaves; `dirs[i] = true` points
    /// leaf `i+1` into the center.
    pub fn star(dirs: &[bool]) -> Self {
        let vertices = dirs.len() + 1;
        let arrows = dirs
            .iter()
            .enumerate()
            .map(|(i, &inward)| {
                if inward {
                    Arrow { tail: i + 1, head: 0 }
                } else {
                    Arrow { tail: 0, head: i + 1 }
                }
            })
            .collect();
        Quiver { vertices, arrows }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow_pairs(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().map(|a| (a.tail, a.head)).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.tail == a.head)
    }

    /// Connected with exactly `vertices - 1` arrows and no loops, i.e. the
    /// underlying undirected graph is a tree.
    pub fn is_tree(&self) -> bool {
        if self.vertices == 0 || self.arrows.len() != self.vertices - 1 || self.has_loops() {
            return false;
        }
        let mut adj = vec![Vec::new(); self.vertices];
        for a in &self.arrows {
            adj[a.tail].push(a.head);
            adj[a.head].push(a.tail);
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 0usize;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count == self.vertices
    }

    /// Euler form `<d, e> = sum_i d_i e_i - sum_a d_{tail(a)} e_{head(a)}`.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> i64 {
        assert_eq!(d.len(), self.vertices);
        assert_eq!(e.len(), self.vertices);
        let diag: i64 = d.iter().zip(e.iter()).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| d[a.tail] * e[a.head]).sum();
        diag - off
    }

    /// Parses `"t>h,t>h,..."`; vertex count is `max index + 1` unless given
    /// explicitly as `"n:t>h,..."`. A bare `"n:"` with no arrows is allowed.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = |s: &str| CoreError::BadInput(format!("bad quiver spec `{}`: {}", spec, s));
        let (explicit, body) = match spec.split_once(':') {
            Some((n, rest)) => {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| bad("vertex count is not a number"))?;
                (Some(n), rest)
            }
            None => (None, spec),
        };
        let mut arrows = Vec::new();
        let mut max_idx = 0usize;
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (t, h) = part
                .split_once('>')
                .ok_or_else(|| bad("arrow must look like `t>h`"))?;
            let t: usize = t.trim().parse().map_err(|_| bad("bad tail index"))?;
            let h: usize = h.trim().parse().map_err(|_| bad("bad head index"))?;
            max_idx = max_idx.max(t).max(h);
            arrows.push((t, h));
        }
        let vertices = match explicit {
            Some(n) => n,
            None if arrows.is_empty() => return Err(bad("no arrows and no vertex count")),
            None => max_idx + 1,
        };
        Quiver::new(vertices, arrows)
    }

    pub fn to_spec(&self) -> String {
        let body: Vec<String> = self
            .arrows
            .iter()
            .map(|a| format!("{}>{}", a.tail, a.head))
            .collect();
        format!("{}:{}", self.vertices, body.join(","))
    }
}

/// A morphism of quivers: vertex and arrow maps commuting with tails and
/// heads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverMorphism {
    pub source: Quiver,
    pub target: Quiver,
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl QuiverMorphism {
    pub fn new(
        source: Quiver,
        target: Quiver,
        vertex_map: Vec<usize>,
        arrow_map: Vec<usize>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertex_count() || arrow_map.len() != source.arrow_count() {
            return Err(CoreError::BadInput(
                "morphism maps have wrong lengths".to_string(),
            ));
        }
        for &v in &vertex_map {
            if v >= target.vertex_count() {
                return Err(CoreError::BadInput("vertex image out of range".to_string()));
            }
        }
        for (b, &a) in arrow_map.iter().enumerate() {
            if a >= target.arrow_count() {
                return Err(CoreError::BadInput("arrow image out of range".to_string()));
            }
            let src = source.arrows()[b];
            let img = target.arrows()[a];
            if vertex_map[src.tail] != img.tail || vertex_map[src.head] != img.head {
                return Err(CoreError::BadInput(format!(
                    "arrow {} does not commute with tail/head maps",
                    b
                )));
            }
        }
        Ok(QuiverMorphism {
            source,
            target,
            vertex_map,
            arrow_map,
        })
    }

    pub fn is_vertex_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.vertex_count()];
        for &v in &self.vertex_map {
            hit[v] = true;
        }
        hit.into_iter().all(|b| b)
    }

    /// Fiber over each target vertex, listed in ascending source order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.target.vertex_count()];
        for (v, &img) in self.vertex_map.iter().enumerate() {
            fibers[img].push(v);
        }
        fibers
    }

    pub fn compose(&self, outer: &QuiverMorphism) -> Result<QuiverMorphism> {
        if self.target != outer.source {
            return Err(CoreError::BadInput(
                "composition target/source mismatch".to_string(),
            ));
        }
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|&v| outer.vertex_map[v])
            .collect();
        let arrow_map = self.arrow_map.iter().map(|&a| outer.arrow_map[a]).collect();
        QuiverMorphism::new(
            self.source.clone(),
            outer.target.clone(),
            vertex_map,
            arrow_map,
        )
    }
}
