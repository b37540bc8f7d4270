//! Indecomposability and absolute indecomposability of representations.
//!
//! The decision procedure is Fitting-based: a splitting idempotent is
//! extracted from any endomorphism whose minimal polynomial admits a
//! coprime factorization. Certified positives come from the trace-form
//! radical (characteristic zero) or from exhaustive endomorphism scans
//! (small finite fields).

use crate::error::{CoreError, Result};
use crate::exact::scalar::{rat_is_int, Int, Rat};
use crate::field::{Field, Gf, Rationals};
use crate::matrix::{self, Matrix};
use crate::rep::hom::{compose_hom, gram_rank, hom_space, HomElement};
use crate::rep::Rep;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// How much weight a verdict carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certainty {
    Certified,
    Probabilistic,
}

/// Verdict of [`is_indecomposable`]. A decomposable verdict always carries
/// a verified splitting idempotent and is therefore certified.
#[derive(Clone, Debug)]
pub enum IndecResult<E> {
    Decomposable { idempotent: HomElement<E> },
    Indecomposable(Certainty),
}

impl<E> IndecResult<E> {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, IndecResult::Decomposable { .. })
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self, IndecResult::Indecomposable(Certainty::Probabilistic))
    }
}

/// Largest `q^(dim End)` for which finite-field endomorphism rings are
/// scanned exhaustively.
pub const EXHAUSTIVE_END_LIMIT: u64 = 1 << 20;

/// Seeded random Fitting trials after the deterministic sweep.
const FITTING_RANDOM_TRIALS: usize = 48;

/// Fields on which minimal polynomials can be probed for coprime splits.
pub trait SplitField: Field {
    /// Field elements worth testing as roots of `mp` (monic, ascending).
    fn root_candidates(&self, mp: &[Self::Elem]) -> Vec<Self::Elem>;

    /// Whether squarefree decomposition by derivative gcds is valid
    /// (requires characteristic zero).
    fn squarefree_split_valid(&self) -> bool;
}

impl SplitField for Rationals {
    fn root_candidates(&self, mp: &[Rat]) -> Vec<Rat> {
        rational_root_candidates(mp)
    }

    fn squarefree_split_valid(&self) -> bool {
        true
    }
}

impl SplitField for Gf {
    fn root_candidates(&self, _mp: &[u16]) -> Vec<u16> {
        self.elements().expect("finite field enumerates its elements")
    }

    fn squarefree_split_valid(&self) -> bool {
        false
    }
}

/// Decides decomposability of a nonzero representation.
///
/// Certified outcomes: dimension-one endomorphism ring; trace-form radical
/// of codimension one over the rationals; exhaustive idempotent scan over
/// a small finite field; or an explicit idempotent found by the Fitting
/// sweep (verified `e^2 = e`, `e` not `0` or `1`). Otherwise the verdict
/// is probabilistic after the trial budget.
pub fn is_indecomposable<F: SplitField>(
    f: &F,
    m: &Rep<F>,
    seed: u64,
) -> Result<IndecResult<F::Elem>> {
    if m.total_dim() == 0 {
        return Err(CoreError::BadInput(
            "indecomposability of the zero representation is undefined".into(),
        ));
    }
    let end = hom_space(f, m, m)?;
    if end.len() == 1 {
        return Ok(IndecResult::Indecomposable(Certainty::Certified));
    }
    match f.size() {
        None => {
            // Characteristic zero: radical of the symmetric trace form.
            if gram_rank(f, &end) == 1 {
                return Ok(IndecResult::Indecomposable(Certainty::Certified));
            }
        }
        Some(q) => {
            if checked_pow(q, end.len()).is_some_and(|n| n <= EXHAUSTIVE_END_LIMIT) {
                return Ok(match exhaustive_idempotent_scan(f, m, &end) {
                    Some(idempotent) => IndecResult::Decomposable { idempotent },
                    None => IndecResult::Indecomposable(Certainty::Certified),
                });
            }
        }
    }
    if let Some(idempotent) = fitting_sweep(f, m, &end, seed) {
        return Ok(IndecResult::Decomposable { idempotent });
    }
    Ok(IndecResult::Indecomposable(Certainty::Probabilistic))
}

/// Absolute indecomposability over the rationals: `End/rad` has dimension
/// one, with the radical computed from the symmetric trace form.
pub fn is_absolutely_indecomposable_q(m: &Rep<Rationals>) -> Result<bool> {
    if m.total_dim() == 0 {
        return Err(CoreError::BadInput(
            "absolute indecomposability of the zero representation is undefined".into(),
        ));
    }
    let f = Rationals;
    let end = hom_space(&f, m, m)?;
    Ok(gram_rank(&f, &end) == 1)
}

/// Absolute indecomposability over a small finite field: the
/// representation is indecomposable and the nilpotent endomorphisms form
/// a set of size `q^(dim End - 1)`, i.e. the local ring `End` has residue
/// field of degree one.
pub fn is_absolutely_indecomposable_gf(f: &Gf, m: &Rep<Gf>) -> Result<bool> {
    match is_indecomposable(f, m, 0)? {
        IndecResult::Decomposable { .. } => Ok(false),
        IndecResult::Indecomposable(Certainty::Probabilistic) => Err(CoreError::ResourceLimit {
            what: "exhaustive endomorphism scan".into(),
            detail: "endomorphism ring too large for a certified absolute-indecomposability verdict"
                .into(),
        }),
        IndecResult::Indecomposable(Certainty::Certified) => {
            let end = hom_space(f, m, m)?;
            let q = f.size().expect("finite field has a size");
            let total = checked_pow(q, end.len())
                .filter(|&n| n <= EXHAUSTIVE_END_LIMIT)
                .ok_or_else(|| CoreError::ResourceLimit {
                    what: "nilpotent endomorphism census".into(),
                    detail: format!("q^{} exceeds the scan limit", end.len()),
                })?;
            let mut nilpotent = 0u64;
            let mut seen = 0u64;
            for_each_combination(f, &end, |eps| {
                seen += 1;
                if eps.iter().enumerate().all(|(x, b)| {
                    matrix::is_zero_matrix(f, &matrix::pow(f, b, m.dims[x]))
                }) {
                    nilpotent += 1;
                }
            });
            debug_assert_eq!(seen, total);
            let expected = checked_pow(q, end.len() - 1).expect("smaller power fits");
            Ok(nilpotent == expected)
        }
    }
}

/// Exhaustive idempotent search over an integer coefficient grid
/// `-bound..=bound` in the computed `End` basis. Used as an independent
/// desk-scale oracle against the certified deciders.
pub fn grid_idempotent_search_q(
    m: &Rep<Rationals>,
    bound: i64,
) -> Result<Option<HomElement<Rat>>> {
    let f = Rationals;
    let end = hom_space(&f, m, m)?;
    let grid: Vec<Rat> = (-bound..=bound).map(|n| f.from_i64(n)).collect();
    let states = checked_pow(grid.len() as u64, end.len());
    if !states.is_some_and(|n| n <= 5_000_000) {
        return Err(CoreError::ResourceLimit {
            what: "idempotent grid search".into(),
            detail: format!(
                "{}^{} coefficient tuples exceed the grid budget",
                grid.len(),
                end.len()
            ),
        });
    }
    let id = identity_endo(&f, m);
    let mut found = None;
    for_each_grid_point(&f, &end, &grid, |eps| {
        if found.is_none()
            && !is_zero_endo(&f, eps)
            && eps != &id
            && compose_hom(&f, eps, eps) == *eps
        {
            found = Some(eps.clone());
        }
    });
    Ok(found)
}

pub(crate) fn identity_endo<F: Field>(f: &F, m: &Rep<F>) -> HomElement<F::Elem> {
    m.dims.iter().map(|&d| matrix::identity(f, d)).collect()
}

pub(crate) fn is_zero_endo<F: Field>(f: &F, e: &HomElement<F::Elem>) -> bool {
    e.iter().all(|b| matrix::is_zero_matrix(f, b))
}

pub(crate) fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Calls `visit` on every linear combination of `basis` with coefficients
/// from the whole finite field, including the zero combination.
pub(crate) fn for_each_combination<F: Field>(
    f: &F,
    basis: &[HomElement<F::Elem>],
    mut visit: impl FnMut(&HomElement<F::Elem>),
) {
    let elems = f.elements().expect("finite field enumerates its elements");
    for_each_grid_point(f, basis, &elems, |e| visit(e));
}

pub(crate) fn for_each_grid_point<F: Field>(
    f: &F,
    basis: &[HomElement<F::Elem>],
    grid: &[F::Elem],
    mut visit: impl FnMut(&HomElement<F::Elem>),
) {
    let k = basis.len();
    let mut digits = vec![0usize; k];
    loop {
        let eps = combine(f, basis, &digits.iter().map(|&d| grid[d].clone()).collect::<Vec<_>>());
        visit(&eps);
        let mut pos = 0;
        loop {
            if pos == k {
                return;
            }
            digits[pos] += 1;
            if digits[pos] < grid.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

pub(crate) fn combine<F: Field>(
    f: &F,
    basis: &[HomElement<F::Elem>],
    coeffs: &[F::Elem],
) -> HomElement<F::Elem> {
    let mut acc: HomElement<F::Elem> = basis[0]
        .iter()
        .map(|b| matrix::zero(f, b.rows, b.cols))
        .collect();
    for (b, c) in basis.iter().zip(coeffs) {
        if f.is_zero(c) {
            continue;
        }
        for (a, m) in acc.iter_mut().zip(b.iter()) {
            *a = matrix::add(f, a, &matrix::scale(f, c, m));
        }
    }
    acc
}

fn exhaustive_idempotent_scan<F: Field>(
    f: &F,
    m: &Rep<F>,
    end: &[HomElement<F::Elem>],
) -> Option<HomElement<F::Elem>> {
    let id = identity_endo(f, m);
    let mut found = None;
    for_each_combination(f, end, |eps| {
        if found.is_none()
            && !is_zero_endo(f, eps)
            && eps != &id
            && compose_hom(f, eps, eps) == *eps
        {
            found = Some(eps.clone());
        }
    });
    found
}

fn fitting_sweep<F: SplitField>(
    f: &F,
    m: &Rep<F>,
    end: &[HomElement<F::Elem>],
    seed: u64,
) -> Option<HomElement<F::Elem>> {
    let k = end.len();
    // Deterministic sweep: basis elements, pairwise sums/differences,
    // pairwise products.
    for e in end {
        if let Some(eps) = try_split(f, m, e) {
            return Some(eps);
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let sum = combine_two(f, &end[i], &end[j], false);
            if let Some(eps) = try_split(f, m, &sum) {
                return Some(eps);
            }
            let diff = combine_two(f, &end[i], &end[j], true);
            if let Some(eps) = try_split(f, m, &diff) {
                return Some(eps);
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let prod = compose_hom(f, &end[i], &end[j]);
            if let Some(eps) = try_split(f, m, &prod) {
                return Some(eps);
            }
        }
    }
    // Seeded random combinations with a widening coefficient range.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..FITTING_RANDOM_TRIALS {
        let r = 2i64 + (t as i64) / 4;
        let coeffs: Vec<F::Elem> = (0..k)
            .map(|_| f.from_i64(rng.gen_range(-r..=r)))
            .collect();
        let e = combine(f, end, &coeffs);
        if let Some(eps) = try_split(f, m, &e) {
            return Some(eps);
        }
    }
    None
}

fn combine_two<F: Field>(
    f: &F,
    a: &HomElement<F::Elem>,
    b: &HomElement<F::Elem>,
    subtract: bool,
) -> HomElement<F::Elem> {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| {
            if subtract {
                matrix::sub(f, x, y)
            } else {
                matrix::add(f, x, y)
            }
        })
        .collect()
}

/// Attempts to turn one endomorphism into a splitting idempotent. If the
/// minimal polynomial factors as coprime `f1 * f2`, the Bezout combination
/// `(u * f1)(e)` projects onto the generalized kernel of `f2(e)`;
/// being a polynomial in `e`, it is automatically an endomorphism.
fn try_split<F: SplitField>(
    f: &F,
    m: &Rep<F>,
    e: &HomElement<F::Elem>,
) -> Option<HomElement<F::Elem>> {
    let refs: Vec<&Matrix<F::Elem>> = e.iter().collect();
    let big = matrix::block_diag(f, &refs);
    let mp = matrix::minimal_polynomial(f, &big);
    let (f1, f2) = coprime_split(f, &mp)?;
    let (g, u, _v) = poly_extended_gcd(f, &f1, &f2);
    if poly_deg(&g) != 0 {
        return None;
    }
    let uf1 = poly_mul(f, &u, &f1);
    let eps: HomElement<F::Elem> = e.iter().map(|b| poly_eval_matrix(f, &uf1, b)).collect();
    let id = identity_endo(f, m);
    assert!(
        !is_zero_endo(f, &eps) && eps != id,
        "coprime split produced a trivial projector"
    );
    assert!(
        compose_hom(f, &eps, &eps) == eps,
        "coprime split produced a non-idempotent"
    );
    Some(eps)
}

/// Splits a monic polynomial of degree >= 2 into two coprime nonconstant
/// monic factors, when one is found: powers of `x` dividing it, root
/// factors `(x - r)^mult` for candidate roots, or (characteristic zero)
/// distinct multiplicity classes of the squarefree decomposition.
fn coprime_split<F: SplitField>(
    f: &F,
    mp: &[F::Elem],
) -> Option<(Vec<F::Elem>, Vec<F::Elem>)> {
    let n = poly_deg(mp);
    if n < 2 {
        return None;
    }
    // x^v factor with 0 < v < n
    let v = mp.iter().take_while(|c| f.is_zero(c)).count();
    if v > 0 && v < n {
        let mut xv = vec![f.zero(); v + 1];
        xv[v] = f.one();
        let rest = mp[v..].to_vec();
        return Some((xv, rest));
    }
    if v == 0 {
        for r in f.root_candidates(mp) {
            let mult = root_multiplicity(f, mp, &r);
            if mult > 0 && mult < n {
                let lin = vec![f.neg(&r), f.one()];
                let mut factor = vec![f.one()];
                for _ in 0..mult {
                    factor = poly_mul(f, &factor, &lin);
                }
                let (quot, rem) = poly_divrem(f, mp, &factor);
                debug_assert!(poly_is_zero(&quot_rem_check(f, &rem)));
                return Some((factor, quot));
            }
        }
        if f.squarefree_split_valid() {
            if let Some(split) = squarefree_class_split(f, mp) {
                return Some(split);
            }
        }
    }
    None
}

fn quot_rem_check<F: Field>(f: &F, rem: &[F::Elem]) -> Vec<F::Elem> {
    let mut r = rem.to_vec();
    poly_normalize(f, &mut r);
    r
}

fn root_multiplicity<F: Field>(f: &F, p: &[F::Elem], r: &F::Elem) -> usize {
    let lin = vec![f.neg(r), f.one()];
    let mut cur = p.to_vec();
    let mut mult = 0;
    loop {
        if poly_deg(&cur) == 0 {
            return mult;
        }
        let (q, rem) = poly_divrem(f, &cur, &lin);
        if !poly_is_zero(&quot_rem_check(f, &rem)) {
            return mult;
        }
        mult += 1;
        cur = q;
    }
}

/// Characteristic-zero squarefree decomposition `p = prod a_i^i`; when at
/// least two multiplicity classes are nonconstant the classes give a
/// coprime split.
fn squarefree_class_split<F: Field>(f: &F, p: &[F::Elem]) -> Option<(Vec<F::Elem>, Vec<F::Elem>)> {
    let mut classes: Vec<(Vec<F::Elem>, usize)> = Vec::new();
    let dp = poly_derivative(f, p);
    let mut g = poly_gcd(f, p, &dp);
    if poly_deg(&g) == 0 {
        return None; // squarefree: a single class
    }
    let mut w = poly_divrem(f, p, &g).0;
    let mut i = 1usize;
    while poly_deg(&w) > 0 {
        let y = poly_gcd(f, &w, &g);
        let z = poly_divrem(f, &w, &y).0;
        if poly_deg(&z) > 0 {
            classes.push((z, i));
        }
        g = poly_divrem(f, &g, &y).0;
        w = y;
        i += 1;
        if i > p.len() {
            return None;
        }
    }
    if poly_deg(&g) > 0 {
        return None;
    }
    if classes.len() < 2 {
        return None;
    }
    let (base, mult) = classes[0].clone();
    let mut f1 = vec![f.one()];
    for _ in 0..mult {
        f1 = poly_mul(f, &f1, &base);
    }
    let (f2, rem) = poly_divrem(f, p, &f1);
    debug_assert!(poly_is_zero(&quot_rem_check(f, &rem)));
    Some((f1, f2))
}

fn rational_root_candidates(mp: &[Rat]) -> Vec<Rat> {
    // Clear denominators to integer coefficients, then apply the rational
    // root theorem: roots are +-(divisor of a_0) / (divisor of a_n).
    let mut lcm = Int::from(1);
    for c in mp {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<Int> = mp
        .iter()
        .map(|c| {
            let scaled = c * Rat::from_integer(lcm.clone());
            debug_assert!(rat_is_int(&scaled));
            scaled.numer().clone()
        })
        .collect();
    let a0 = ints.first().cloned().unwrap_or_else(Int::zero);
    let an = ints.last().cloned().unwrap_or_else(Int::zero);
    if a0.is_zero() {
        // handled by the x^v split path
        return Vec::new();
    }
    let (Some(p0), Some(pn)) = (small_abs(&a0), small_abs(&an)) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    'fill: for num in divisors(p0) {
        for den in divisors(pn) {
            if out.len() >= 512 {
                break 'fill;
            }
            let r = Rat::new(Int::from(num as i64), Int::from(den as i64));
            if !out.contains(&r) {
                out.push(r.clone());
            }
            let neg = -r;
            if !out.contains(&neg) {
                out.push(neg);
            }
        }
    }
    out
}

fn small_abs(n: &Int) -> Option<u64> {
    n.abs().to_u64().filter(|&v| v <= 1_000_000_000)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

// ---- dense univariate polynomials over a generic field ----
// Coefficients ascending; normalized form has a nonzero leading
// coefficient (the zero polynomial is the empty vector).

fn poly_normalize<F: Field>(f: &F, p: &mut Vec<F::Elem>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

fn poly_is_zero<E>(p: &[E]) -> bool {
    p.is_empty()
}

fn poly_deg(p: &[impl Sized]) -> usize {
    p.len().saturating_sub(1)
}

fn poly_mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    poly_normalize(f, &mut out);
    out
}

fn poly_divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    poly_normalize(f, &mut rem);
    let db = b.len() - 1;
    let lead_inv = f.inv(b.last().unwrap()).expect("nonzero leading coefficient");
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let c = f.mul(rem.last().unwrap(), &lead_inv);
        quot[shift] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            let t = f.mul(&c, bc);
            rem[shift + j] = f.sub(&rem[shift + j], &t);
        }
        poly_normalize(f, &mut rem);
    }
    let mut q = quot;
    poly_normalize(f, &mut q);
    (q, rem)
}

fn poly_monic<F: Field>(f: &F, p: &[F::Elem]) -> Vec<F::Elem> {
    if p.is_empty() {
        return Vec::new();
    }
    let inv = f.inv(p.last().unwrap()).expect("nonzero leading coefficient");
    p.iter().map(|c| f.mul(c, &inv)).collect()
}

fn poly_gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_normalize(f, &mut x);
    poly_normalize(f, &mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(f, &x, &y);
        x = y;
        y = r;
    }
    poly_monic(f, &x)
}

/// Returns `(g, u, v)` with `g = gcd(a, b)` monic and `u a + v b = g`.
fn poly_extended_gcd<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    poly_normalize(f, &mut r0);
    poly_normalize(f, &mut r1);
    let mut u0 = vec![f.one()];
    let mut u1: Vec<F::Elem> = Vec::new();
    let mut v0: Vec<F::Elem> = Vec::new();
    let mut v1 = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(f, &r0, &r1);
        let nu = poly_sub(f, &u0, &poly_mul(f, &q, &u1));
        let nv = poly_sub(f, &v0, &poly_mul(f, &q, &v1));
        r0 = std::mem::take(&mut r1);
        r1 = r;
        u0 = std::mem::take(&mut u1);
        u1 = nu;
        v0 = std::mem::take(&mut v1);
        v1 = nv;
    }
    if r0.is_empty() {
        return (Vec::new(), Vec::new(), Vec::new());
    }
    let lead_inv = f.inv(r0.last().unwrap()).expect("nonzero leading coefficient");
    let scale = |p: &[F::Elem]| p.iter().map(|c| f.mul(c, &lead_inv)).collect::<Vec<_>>();
    (scale(&r0), scale(&u0), scale(&v0))
}

fn poly_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = f.sub(&out[i], c);
    }
    poly_normalize(f, &mut out);
    out
}

fn poly_derivative<F: Field>(f: &F, p: &[F::Elem]) -> Vec<F::Elem> {
    let mut out: Vec<F::Elem> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
        .collect();
    poly_normalize(f, &mut out);
    out
}

fn poly_eval_matrix<F: Field>(f: &F, p: &[F::Elem], a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = a.rows;
    let mut acc = matrix::zero(f, n, n);
    for c in p.iter().rev() {
        acc = matrix::mul(f, &acc, a);
        let ci = matrix::scale(f, c, &matrix::identity(f, n));
        acc = matrix::add(f, &acc, &ci);
    }
    acc
}
