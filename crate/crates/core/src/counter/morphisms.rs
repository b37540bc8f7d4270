//! Enumeration of quiver morphisms out of a tree, by backtracking over a
//! spanning discovery order with arrow-compatibility pruning.

use crate::error::{CoreError, Result};
use crate::quiver::Quiver;

/// Calls `visit(vertex_map, arrow_map)` once for every quiver morphism
/// `T -> Q`, in lexicographic order of the backtracking choices (root
/// image first, then arrow images along the discovery order).
///
/// With `sincere` set, only vertex-surjective morphisms are reported.
/// With `target_dims`, only morphisms whose vertex fibers have exactly
/// the prescribed sizes are reported.
pub fn for_each_morphism<V>(
    t: &Quiver,
    q: &Quiver,
    sincere: bool,
    target_dims: Option<&[usize]>,
    visit: &mut V,
) -> Result<()>
where
    V: FnMut(&[usize], &[usize]) -> Result<()>,
{
    if !t.is_tree() {
        return Err(CoreError::NotATree(t.to_spec()));
    }
    if let Some(dims) = target_dims {
        if dims.len() != q.vertex_count() {
            return Err(CoreError::BadInput(
                "target dimension vector length must match the target quiver".into(),
            ));
        }
        if dims.iter().sum::<usize>() != t.vertex_count() {
            return Ok(()); // fiber sizes cannot add up
        }
    }
    let nv = t.vertex_count();
    let nq = q.vertex_count();
    if nv == 0 || nq == 0 {
        return Ok(());
    }

    // Discovery order: BFS from vertex 0; each later vertex is entered
    // through one tree arrow, recorded with its direction.
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); nv];
    for (ai, a) in t.arrows().iter().enumerate() {
        adj[a.tail].push((a.head, ai, true));
        adj[a.head].push((a.tail, ai, false));
    }
    let mut order: Vec<(usize, Option<(usize, bool)>)> = vec![(0, None)];
    let mut seen = vec![false; nv];
    seen[0] = true;
    let mut frontier = 0;
    while frontier < order.len() {
        let (v, _) = order[frontier];
        frontier += 1;
        for &(u, ai, forward) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                order.push((u, Some((ai, forward))));
            }
        }
    }
    debug_assert_eq!(order.len(), nv);

    // Arrows of Q grouped by tail and by head for candidate lookup.
    let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); nq];
    let mut into: Vec<Vec<usize>> = vec![Vec::new(); nq];
    for (ai, a) in q.arrows().iter().enumerate() {
        out_of[a.tail].push(ai);
        into[a.head].push(ai);
    }

    let mut vmap = vec![usize::MAX; nv];
    let mut amap = vec![usize::MAX; t.arrow_count()];
    let mut fiber = vec![0usize; nq];
    let mut used_targets = 0usize;
    let mut state = State {
        t,
        q,
        sincere,
        target_dims,
        order: &order,
        out_of: &out_of,
        into: &into,
        vmap: &mut vmap,
        amap: &mut amap,
        fiber: &mut fiber,
        used_targets: &mut used_targets,
    };
    state.recurse(0, visit)
}

struct State<'a> {
    t: &'a Quiver,
    q: &'a Quiver,
    sincere: bool,
    target_dims: Option<&'a [usize]>,
    order: &'a [(usize, Option<(usize, bool)>)],
    out_of: &'a [Vec<usize>],
    into: &'a [Vec<usize>],
    vmap: &'a mut [usize],
    amap: &'a mut [usize],
    fiber: &'a mut [usize],
    used_targets: &'a mut usize,
}

impl State<'_> {
    fn recurse<V>(&mut self, step: usize, visit: &mut V) -> Result<()>
    where
        V: FnMut(&[usize], &[usize]) -> Result<()>,
    {
        if step == self.order.len() {
            if self.sincere && *self.used_targets != self.q.vertex_count() {
                return Ok(());
            }
            if let Some(dims) = self.target_dims {
                if self.fiber != dims {
                    return Ok(());
                }
            }
            return visit(self.vmap, self.amap);
        }
        // Surjectivity cannot be reached if the unassigned vertices are
        // fewer than the untouched targets.
        let remaining = self.order.len() - step;
        if self.sincere && remaining < self.q.vertex_count() - *self.used_targets {
            return Ok(());
        }
        let (v, entry) = self.order[step];
        match entry {
            None => {
                for img in 0..self.q.vertex_count() {
                    self.place(step, v, img, None, visit)?;
                }
            }
            Some((ai, forward)) => {
                let a = self.t.arrows()[ai];
                if forward {
                    let from = self.vmap[a.tail];
                    for &qa in &self.out_of[from] {
                        let img = self.q.arrows()[qa].head;
                        self.place(step, v, img, Some((ai, qa)), visit)?;
                    }
                } else {
                    let from = self.vmap[a.head];
                    for &qa in &self.into[from] {
                        let img = self.q.arrows()[qa].tail;
                        self.place(step, v, img, Some((ai, qa)), visit)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn place<V>(
        &mut self,
        step: usize,
        v: usize,
        img: usize,
        arrow: Option<(usize, usize)>,
        visit: &mut V,
    ) -> Result<()>
    where
        V: FnMut(&[usize], &[usize]) -> Result<()>,
    {
        if let Some(dims) = self.target_dims {
            if self.fiber[img] == dims[img] {
                return Ok(()); // fiber already full
            }
        }
        self.vmap[v] = img;
        self.fiber[img] += 1;
        if self.fiber[img] == 1 {
            *self.used_targets += 1;
        }
        if let Some((ai, qa)) = arrow {
            self.amap[ai] = qa;
        }
        self.recurse(step + 1, visit)?;
        if let Some((ai, _)) = arrow {
            self.amap[ai] = usize::MAX;
        }
        self.fiber[img] -= 1;
        if self.fiber[img] == 0 {
            *self.used_targets -= 1;
        }
        self.vmap[v] = usize::MAX;
        Ok(())
    }
}

/// Collects the morphisms of [`for_each_morphism`] as (vertex map, arrow
/// map) pairs.
pub fn enumerate_morphisms(
    t: &Quiver,
    q: &Quiver,
    sincere: bool,
    target_dims: Option<&[usize]>,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut out = Vec::new();
    for_each_morphism(t, q, sincere, target_dims, &mut |vm, am| {
        out.push((vm.to_vec(), am.to_vec()));
        Ok(())
    })?;
    Ok(out)
}
