//! Catalog of oriented tree quivers up to isomorphism.
//!
//! Candidates are swept as (labeled tree, orientation mask) pairs and
//! deduplicated through an interned canonical form rooted at the tree
//! center. Each isomorphism class carries its automorphism group order and
//! the surjective conflict-free labeling counts `W(k)` used by the orbit
//! count polynomial in `g`. Two independent consistency checks run during
//! every enumeration: per class, occurrences times automorphisms must equal
//! `d!`, and the occurrence total must equal `d^{d-2} 2^{d-1}`.

pub mod canon;
pub mod conflict;
pub mod prufer;

use crate::error::{CoreError, Result};
use crate::exact::binom::BinomialPolyG;
use crate::exact::scalar::{factorial, rat, rat_frac, Int};
use crate::quiver::Quiver;
use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use canon::canonical_form;
use conflict::winding_counts;
use num_traits::Zero;
use prufer::for_each_labeled_tree;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};
use std::path::{Path, PathBuf};

/// Largest vertex count the full sweep will attempt (`8^6 * 2^7` candidates).
pub const MAX_CATALOG_D: usize = 8;
/// Largest vertex count for the labeled-orbit census oracle.
pub const MAX_CENSUS_D: usize = 7;

/// One isomorphism class of oriented tree quivers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeQuiverEntry {
    /// Canonical representative (vertices in code preorder).
    pub quiver: Quiver,
    /// Canonical code; equality of codes is isomorphism of oriented trees.
    pub code: Vec<u8>,
    pub aut_order: u64,
    /// `windings[k-1] = W(k)`, labelings by exactly `k` labels, for
    /// `k = 1 ..= d-1`. Empty for the one-vertex quiver.
    pub windings: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub d: usize,
    /// Sorted by `code`, strictly ascending.
    pub entries: Vec<TreeQuiverEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, code: &[u8]) -> Option<&TreeQuiverEntry> {
        self.entries
            .binary_search_by(|e| e.code.as_slice().cmp(code))
            .ok()
            .map(|i| &self.entries[i])
    }
}

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

/// Oriented labeled trees on `d` vertices: Cayley count times
/// orientation masks.
pub fn candidate_total(d: usize) -> u64 {
    if d == 1 {
        return 1;
    }
    (d as u64).pow(d as u32 - 2) * (1u64 << (d - 1))
}

// Multiply-xor hasher for the short u32-slice keys of the interner; the
// sweep at d = 8 performs a quarter-billion lookups, where the default
// hasher is the bottleneck.
#[derive(Default)]
struct FxHasher {
    state: u64,
}

impl FxHasher {
    #[inline]
    fn add(&mut self, word: u64) {
        self.state = (self.state.rotate_left(5) ^ word).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }
}

impl Hasher for FxHasher {
    #[inline]
    fn finish(&self) -> u64 {
        self.state
    }

    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.add(b as u64);
        }
    }

    #[inline]
    fn write_u32(&mut self, n: u32) {
        self.add(n as u64);
    }

    #[inline]
    fn write_u64(&mut self, n: u64) {
        self.add(n);
    }

    #[inline]
    fn write_usize(&mut self, n: usize) {
        self.add(n as u64);
    }
}

type FxMap<K, V> = HashMap<K, V, BuildHasherDefault<FxHasher>>;

// Interned rooted-subtree and class shapes. Key layout:
//   [0, packed children...]     rooted subtree, children sorted, each packed
//                               as (id << 1) | dir, dir = 1 when the arrow
//                               points from this vertex toward the child
//   [1, root_id]                class with a single center
//   [2, dir, id_a, id_b]        bicentral class, minimal presentation
struct Interner {
    table: FxMap<Vec<u32>, u32>,
    auts: Vec<u64>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            table: FxMap::default(),
            auts: Vec::new(),
        }
    }

    #[inline]
    fn intern(&mut self, key: &[u32], aut: u64) -> u32 {
        if let Some(&id) = self.table.get(key) {
            return id;
        }
        let id = self.auts.len() as u32;
        self.auts.push(aut);
        self.table.insert(key.to_vec(), id);
        id
    }
}

/// Enumerate all oriented tree quivers on `d` vertices up to isomorphism.
pub fn enumerate_tree_quivers(d: usize) -> Result<Catalog> {
    if d == 0 {
        return Err(CoreError::BadInput("d must be positive".into()));
    }
    if d > MAX_CATALOG_D {
        return Err(CoreError::ResourceLimit {
            what: "catalog vertex count",
            detail: format!("d = {} exceeds the sweep limit {}", d, MAX_CATALOG_D),
        });
    }
    if d == 1 {
        let point = Quiver::new(1, vec![])?;
        let canonical = canonical_form(&point)?;
        return Ok(Catalog {
            d,
            entries: vec![TreeQuiverEntry {
                quiver: canonical.representative,
                code: canonical.code,
                aut_order: canonical.aut_order,
                windings: vec![],
            }],
        });
    }

    let mut interner = Interner::new();
    let mut occurrences: Vec<u64> = Vec::new();
    let mut reps: Vec<Option<Vec<(usize, usize)>>> = Vec::new();
    let mask_count: u32 = 1 << (d - 1);
    // scratch reused across candidates
    let mut key: Vec<u32> = Vec::with_capacity(d + 1);
    let mut vid: Vec<u32> = vec![0; d];

    for_each_labeled_tree(d, |edges| {
        // per labeled tree: adjacency with edge indices, centers, and a
        // bottom-up vertex order with parent/child structure per root
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let centers = centers_of(&adj);
        // BFS from each root, excluding the other center in the bicentral
        // case; `order` lists every vertex, halves consecutive
        let mut parent: Vec<usize> = vec![usize::MAX; d];
        let mut order: Vec<usize> = Vec::with_capacity(d);
        for (ci, &c) in centers.iter().enumerate() {
            if centers.len() == 2 {
                parent[c] = centers[1 - ci];
            }
            let start = order.len();
            order.push(c);
            let mut head = start;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &(w, _) in &adj[v] {
                    if w != parent[v] {
                        parent[w] = v;
                        order.push(w);
                    }
                }
            }
        }
        let center_edge: Option<usize> = if centers.len() == 2 {
            adj[centers[0]]
                .iter()
                .find(|&&(w, _)| w == centers[1])
                .map(|&(_, i)| i)
        } else {
            None
        };

        for mask in 0..mask_count {
            // arrow of edge i runs (u, v) as listed, flipped when bit i set
            let arrow_tail = |i: usize| -> usize {
                let (u, v) = edges[i];
                if mask & (1 << i) == 0 {
                    u
                } else {
                    v
                }
            };
            for &v in order.iter().rev() {
                key.clear();
                key.push(0);
                let mark = key.len();
                for &(w, ei) in &adj[v] {
                    if w == parent[v] {
                        continue;
                    }
                    let dir = (arrow_tail(ei) == v) as u32;
                    key.push((vid[w] << 1) | dir);
                }
                key[mark..].sort_unstable();
                // automorphisms: children permute within equal runs, and
                // each child contributes its own subtree automorphisms
                let mut aut: u64 = 1;
                let mut run = 1u64;
                for i in mark..key.len() {
                    aut *= interner.auts[(key[i] >> 1) as usize];
                    if i > mark && key[i] == key[i - 1] {
                        run += 1;
                        aut *= run;
                    } else {
                        run = 1;
                    }
                }
                vid[v] = interner.intern(&key, aut);
            }
            let class_id = if centers.len() == 1 {
                let r = vid[centers[0]];
                key.clear();
                key.extend_from_slice(&[1, r]);
                let aut = interner.auts[r as usize];
                interner.intern(&key, aut)
            } else {
                let (a, b) = (centers[0], centers[1]);
                let (ia, ib) = (vid[a], vid[b]);
                let e = (arrow_tail(center_edge.unwrap()) == a) as u32;
                // the half swap reverses the center arrow, so the class is
                // the smaller of the two presentations
                let (dir, x, y) = std::cmp::min((e, ia, ib), (1 - e, ib, ia));
                key.clear();
                key.extend_from_slice(&[2, dir, x, y]);
                let aut = interner.auts[ia as usize] * interner.auts[ib as usize];
                interner.intern(&key, aut)
            } as usize;
            if class_id >= occurrences.len() {
                occurrences.resize(class_id + 1, 0);
                reps.resize(class_id + 1, None);
            }
            occurrences[class_id] += 1;
            if reps[class_id].is_none() {
                let arrows: Vec<(usize, usize)> = (0..d - 1)
                    .map(|i| {
                        let (u, v) = edges[i];
                        if mask & (1 << i) == 0 {
                            (u, v)
                        } else {
                            (v, u)
                        }
                    })
                    .collect();
                reps[class_id] = Some(arrows);
            }
        }
    });

    let d_factorial = factorial_u64(d);
    let mut total: u64 = 0;
    let mut entries: Vec<TreeQuiverEntry> = Vec::new();
    for (id, n) in occurrences.iter().enumerate() {
        if *n == 0 {
            continue;
        }
        total += n;
        let arrows = reps[id].take().expect("class without representative");
        let quiver = Quiver::new(d, arrows)?;
        let canonical = canonical_form(&quiver)?;
        if canonical.aut_order != interner.auts[id] {
            return Err(CoreError::Inconsistent(format!(
                "automorphism order disagreement for {}: {} interned vs {} canonical",
                quiver.to_spec(),
                interner.auts[id],
                canonical.aut_order
            )));
        }
        if n * canonical.aut_order != d_factorial {
            return Err(CoreError::Inconsistent(format!(
                "orbit size {} times aut {} is not {}! for {}",
                n,
                canonical.aut_order,
                d,
                quiver.to_spec()
            )));
        }
        let windings = winding_counts(&canonical.representative)?;
        entries.push(TreeQuiverEntry {
            quiver: canonical.representative,
            code: canonical.code,
            aut_order: canonical.aut_order,
            windings,
        });
    }
    if total != candidate_total(d) {
        return Err(CoreError::Inconsistent(format!(
            "swept {} labeled oriented trees on {} vertices, expected {}",
            total,
            d,
            candidate_total(d)
        )));
    }
    entries.sort_by(|a, b| a.code.cmp(&b.code));
    if entries.windows(2).any(|w| w[0].code == w[1].code) {
        return Err(CoreError::Inconsistent(
            "duplicate canonical codes across classes".into(),
        ));
    }
    Ok(Catalog { d, entries })
}

/// Leaf peeling on adjacency-with-edge-index lists.
fn centers_of(adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &(w, _) in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Count of coverings of the `g`-loop quiver carried by one class, as a
/// polynomial in `g` on the binomial basis: sum over `k` of
/// `W(k)/#Aut C(g,k)`. The automorphism group acts freely on conflict-free
/// labelings, so each ratio is an integer.
pub fn orbit_count_poly(entry: &TreeQuiverEntry) -> Result<BinomialPolyG> {
    let mut poly = BinomialPolyG::zero();
    if entry.windings.is_empty() {
        // one vertex, no arrows: exactly one covering datum for every g
        poly.add_term(0, &rat(1));
        return Ok(poly);
    }
    for (i, &w) in entry.windings.iter().enumerate() {
        if w == 0 {
            continue;
        }
        if w % entry.aut_order != 0 {
            return Err(CoreError::Inconsistent(format!(
                "W({}) = {} not divisible by aut order {} for {}",
                i + 1,
                w,
                entry.aut_order,
                entry.quiver.to_spec()
            )));
        }
        poly.add_term(
            (i + 1) as u32,
            &rat_frac((w / entry.aut_order) as i64, 1),
        );
    }
    Ok(poly)
}

/// Canonical codes in a text-safe form for reports and caches.
pub fn code_base64(code: &[u8]) -> String {
    BASE64.encode(code)
}

/// Left side `sum d!/#Aut` over the catalog and right side
/// `2^{d-1} d^{d-2}`; the two agree exactly when the catalog is complete.
pub fn cayley_identity(catalog: &Catalog) -> Result<(Int, Int)> {
    let d = catalog.d;
    let df = factorial(d as u64);
    let mut lhs = Int::zero();
    for e in &catalog.entries {
        let aut = Int::from(e.aut_order);
        let (q, r) = num_integer::div_rem(df.clone(), aut);
        if !r.is_zero() {
            return Err(CoreError::Inconsistent(format!(
                "aut order {} does not divide {}!",
                e.aut_order, d
            )));
        }
        lhs += q;
    }
    let rhs = if d == 1 {
        Int::from(1)
    } else {
        Int::from(candidate_total(d))
    };
    Ok((lhs, rhs))
}

/// One isomorphism class as seen by the brute-force labeled census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    pub arrows: Vec<(usize, usize)>,
    pub code: Vec<u8>,
    pub orbit_size: u64,
}

/// Independent oracle: sweep every labeled oriented tree, group the sweep
/// into isomorphism orbits by explicit `S_d` action, and report orbit sizes.
/// No canonical-form machinery is involved in the grouping itself; codes are
/// attached afterwards so callers can line classes up with a `Catalog`.
pub fn labeled_orbit_census(d: usize) -> Result<Vec<CensusClass>> {
    if d == 0 {
        return Err(CoreError::BadInput("d must be positive".into()));
    }
    if d > MAX_CENSUS_D {
        return Err(CoreError::ResourceLimit {
            what: "census vertex count",
            detail: format!("d = {} exceeds the census limit {}", d, MAX_CENSUS_D),
        });
    }
    if d == 1 {
        let point = Quiver::new(1, vec![])?;
        let canonical = canonical_form(&point)?;
        return Ok(vec![CensusClass {
            arrows: vec![],
            code: canonical.code,
            orbit_size: 1,
        }]);
    }

    let pack = |arrows: &[(usize, usize)]| -> u64 {
        let mut bytes: Vec<u8> = arrows.iter().map(|&(t, h)| (t * 8 + h) as u8).collect();
        bytes.sort_unstable();
        bytes.iter().fold(0u64, |k, &b| (k << 8) | b as u64)
    };

    let perms = all_permutations(d);
    let mut visited: FxMap<u64, ()> = FxMap::default();
    let mut classes: Vec<CensusClass> = Vec::new();
    let mut total: u64 = 0;
    let mut result: Result<()> = Ok(());

    for_each_labeled_tree(d, |edges| {
        if result.is_err() {
            return;
        }
        let m = edges.len();
        for mask in 0u32..(1 << m) {
            let arrows: Vec<(usize, usize)> = (0..m)
                .map(|i| {
                    let (u, v) = edges[i];
                    if mask & (1 << i) == 0 {
                        (u, v)
                    } else {
                        (v, u)
                    }
                })
                .collect();
            let key = pack(&arrows);
            if visited.contains_key(&key) {
                continue;
            }
            // full S_d orbit of this labeled quiver
            let mut orbit: Vec<u64> = perms
                .iter()
                .map(|p| {
                    let moved: Vec<(usize, usize)> =
                        arrows.iter().map(|&(t, h)| (p[t], p[h])).collect();
                    pack(&moved)
                })
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &k in &orbit {
                visited.insert(k, ());
            }
            total += orbit.len() as u64;
            match Quiver::new(d, arrows.clone()).and_then(|q| canonical_form(&q)) {
                Ok(c) => classes.push(CensusClass {
                    arrows,
                    code: c.code,
                    orbit_size: orbit.len() as u64,
                }),
                Err(e) => result = Err(e),
            }
        }
    });
    result?;
    if total != candidate_total(d) {
        return Err(CoreError::Inconsistent(format!(
            "census orbit sizes sum to {}, expected {}",
            total,
            candidate_total(d)
        )));
    }
    classes.sort_by(|a, b| a.code.cmp(&b.code));
    if classes.windows(2).any(|w| w[0].code == w[1].code) {
        return Err(CoreError::Inconsistent(
            "two census orbits share a canonical code".into(),
        ));
    }
    Ok(classes)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(factorial_u64(n) as usize);
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

// ---------------------------------------------------------------------------
// advisory JSON cache

#[derive(Serialize, Deserialize)]
struct CacheFile {
    d: usize,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    code: String,
    arrows: Vec<(usize, usize)>,
    aut: u64,
    w: Vec<u64>,
}

pub fn catalog_cache_filename(d: usize) -> String {
    format!("qcatalog-v1-d{}.json", d)
}

fn cache_path(d: usize, dir: &Path) -> PathBuf {
    dir.join(catalog_cache_filename(d))
}

/// Read a cached catalog, revalidating every entry (canonical form, aut
/// order, winding counts, Cayley mass). Any parse or validation failure
/// discards the cache.
pub fn load_catalog_cache(d: usize, dir: &Path) -> Option<Catalog> {
    let text = std::fs::read_to_string(cache_path(d, dir)).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.d != d || file.entries.is_empty() {
        return None;
    }
    let mut entries = Vec::with_capacity(file.entries.len());
    for ce in &file.entries {
        let code = BASE64.decode(&ce.code).ok()?;
        let quiver = Quiver::new(d, ce.arrows.clone()).ok()?;
        let canonical = canonical_form(&quiver).ok()?;
        if canonical.code != code || canonical.aut_order != ce.aut {
            return None;
        }
        let windings = winding_counts(&canonical.representative).ok()?;
        if windings != ce.w {
            return None;
        }
        entries.push(TreeQuiverEntry {
            quiver: canonical.representative,
            code,
            aut_order: ce.aut,
            windings,
        });
    }
    if entries.windows(2).any(|w| w[0].code >= w[1].code) {
        return None;
    }
    let catalog = Catalog { d, entries };
    match cayley_identity(&catalog) {
        Ok((lhs, rhs)) if lhs == rhs => Some(catalog),
        _ => None,
    }
}

/// Write the catalog cache atomically (temp file then rename).
pub fn store_catalog_cache(catalog: &Catalog, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let file = CacheFile {
        d: catalog.d,
        entries: catalog
            .entries
            .iter()
            .map(|e| CacheEntry {
                code: BASE64.encode(&e.code),
                arrows: e.quiver.arrow_pairs(),
                aut: e.aut_order,
                w: e.windings.clone(),
            })
            .collect(),
    };
    let text = serde_json::to_string(&file).expect("catalog serialization");
    let target = cache_path(catalog.d, dir);
    let tmp = dir.join(format!(
        "{}.tmp-{}",
        catalog_cache_filename(catalog.d),
        std::process::id()
    ));
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, &target)?;
    Ok(())
}

/// Catalog for `d`, consulting the cache directory when given. `force`
/// skips the read (the result is still written back).
pub fn catalog_with_cache(d: usize, cache_dir: Option<&Path>, force: bool) -> Result<Catalog> {
    if !force {
        if let Some(dir) = cache_dir {
            if let Some(catalog) = load_catalog_cache(d, dir) {
                return Ok(catalog);
            }
        }
    }
    let catalog = enumerate_tree_quivers(d)?;
    if let Some(dir) = cache_dir {
        store_catalog_cache(&catalog, dir)?;
    }
    Ok(catalog)
}
