//! Isomorphism testing for representations: certified negatives from
//! dimension and Hom-space invariants, certified positives from explicit
//! invertible intertwiners, probabilistic negatives with a logged
//! Schwartz-Zippel failure bound.

use crate::error::Result;
use crate::exact::scalar::Rat;
use crate::field::Field;
use crate::matrix;
use crate::rep::hom::{hom_space, HomElement};
use crate::rep::indec::{checked_pow, combine, for_each_combination, identity_endo};
use crate::rep::Rep;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Verdict of [`is_isomorphic`]. A negative is either certified (an
/// invariant differs, or a small finite field was scanned exhaustively)
/// or probabilistic, in which case `failure_bound` is an upper bound on
/// the chance that an isomorphism was missed by every sampling trial.
#[derive(Clone, Debug)]
pub enum IsoResult<E> {
    Isomorphic {
        witness: HomElement<E>,
    },
    NotIsomorphic {
        certified: bool,
        failure_bound: Option<Rat>,
    },
}

impl<E> IsoResult<E> {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic { .. })
    }
}

/// Sampling trials per seed; the coefficient range widens every third
/// trial, so late trials make the failure bound collapse geometrically.
const ISO_TRIALS: usize = 36;

/// Largest `q^(dim Hom)` scanned exhaustively over a finite field.
const EXHAUSTIVE_HOM_LIMIT: u64 = 1 << 20;

/// Decides whether two representations of the same quiver over the same
/// field are isomorphic.
pub fn is_isomorphic<F: Field>(
    f: &F,
    m: &Rep<F>,
    n: &Rep<F>,
    seed: u64,
) -> Result<IsoResult<F::Elem>> {
    if m.dims != n.dims {
        return Ok(IsoResult::NotIsomorphic {
            certified: true,
            failure_bound: None,
        });
    }
    if m.quiver == n.quiver && m.dims == n.dims && m.mats == n.mats {
        return Ok(IsoResult::Isomorphic {
            witness: identity_endo(f, m),
        });
    }
    let hom_mn = hom_space(f, m, n)?;
    let hom_nm = hom_space(f, n, m)?;
    let end_m = hom_space(f, m, m)?;
    let end_n = hom_space(f, n, n)?;
    if hom_mn.len() != hom_nm.len() || end_m.len() != end_n.len() {
        return Ok(IsoResult::NotIsomorphic {
            certified: true,
            failure_bound: None,
        });
    }
    if m.total_dim() == 0 {
        return Ok(IsoResult::Isomorphic {
            witness: identity_endo(f, m),
        });
    }
    if hom_mn.is_empty() {
        // No nonzero homomorphism at all, in particular no isomorphism.
        return Ok(IsoResult::NotIsomorphic {
            certified: true,
            failure_bound: None,
        });
    }
    if let Some(q) = f.size() {
        if checked_pow(q, hom_mn.len()).is_some_and(|s| s <= EXHAUSTIVE_HOM_LIMIT) {
            let mut witness = None;
            for_each_combination(f, &hom_mn, |phi| {
                if witness.is_none() && all_blocks_invertible(f, phi) {
                    witness = Some(phi.clone());
                }
            });
            return Ok(match witness {
                Some(witness) => IsoResult::Isomorphic { witness },
                None => IsoResult::NotIsomorphic {
                    certified: true,
                    failure_bound: None,
                },
            });
        }
    }
    // Randomized search: the invertible locus in Hom(M, N) is cut out by
    // the nonvanishing of a determinant polynomial of total degree
    // `total_dim`, so each trial over a coefficient set of size s misses
    // it with probability at most total_dim / s when M and N are
    // isomorphic.
    let degree = m.total_dim() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field_elems = f.elements();
    let mut bound = Rat::one();
    for t in 0..ISO_TRIALS {
        let (coeffs, sample_size) = match &field_elems {
            Some(elems) => {
                let c: Vec<F::Elem> = (0..hom_mn.len())
                    .map(|_| elems[rng.gen_range(0..elems.len())].clone())
                    .collect();
                (c, elems.len() as u64)
            }
            None => {
                let r = 1i64 << (1 + t / 3).min(24);
                let c: Vec<F::Elem> = (0..hom_mn.len())
                    .map(|_| f.from_i64(rng.gen_range(-r..=r)))
                    .collect();
                (c, (2 * r + 1) as u64)
            }
        };
        let phi = combine(f, &hom_mn, &coeffs);
        if all_blocks_invertible(f, &phi) {
            return Ok(IsoResult::Isomorphic { witness: phi });
        }
        let trial = Rat::new(degree.into(), sample_size.into());
        if trial < Rat::one() {
            bound *= trial;
        }
    }
    Ok(IsoResult::NotIsomorphic {
        certified: false,
        failure_bound: Some(bound),
    })
}

fn all_blocks_invertible<F: Field>(f: &F, phi: &HomElement<F::Elem>) -> bool {
    phi.iter().all(|b| b.rows == b.cols && matrix::is_invertible(f, b))
}

/// Isomorphism decision for counting pipelines: a probabilistic negative
/// is accepted only after three independently seeded runs agree.
pub fn is_isomorphic_resolved<F: Field>(f: &F, m: &Rep<F>, n: &Rep<F>, seed: u64) -> Result<bool> {
    for round in 0..3u64 {
        let s = seed.wrapping_add(round.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        match is_isomorphic(f, m, n, s)? {
            IsoResult::Isomorphic { .. } => return Ok(true),
            IsoResult::NotIsomorphic { certified: true, .. } => return Ok(false),
            IsoResult::NotIsomorphic { certified: false, .. } => {}
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};
    use crate::matrix::from_i64;
    use crate::quiver::Quiver;
    use crate::rep::hom::is_hom;
    use crate::rep::{direct_sum, tree_identity_rep};

    #[test]
    fn identical_reps_are_isomorphic() {
        let f = Rationals;
        let rep = tree_identity_rep(&f, &Quiver::path(3)).unwrap();
        let r = is_isomorphic(&f, &rep, &rep, 1).unwrap();
        assert!(r.is_isomorphic());
        assert!(is_isomorphic_resolved(&f, &rep, &rep, 1).unwrap());
    }

    #[test]
    fn jordan_blocks_with_distinct_eigenvalues_differ() {
        let f = Rationals;
        let s1 = Quiver::loop_quiver(1);
        let j0 = Rep::<Rationals>::new(
            s1.clone(),
            vec![2],
            vec![from_i64(&f, &[&[0, 1], &[0, 0]])],
        )
        .unwrap();
        let j1 = Rep::<Rationals>::new(
            s1,
            vec![2],
            vec![from_i64(&f, &[&[1, 1], &[0, 1]])],
        )
        .unwrap();
        let r = is_isomorphic(&f, &j0, &j1, 2).unwrap();
        let IsoResult::NotIsomorphic { certified, .. } = r else {
            panic!("distinct Jordan blocks compared isomorphic");
        };
        assert!(certified);
        assert!(!is_isomorphic_resolved(&f, &j0, &j1, 2).unwrap());
    }

    #[test]
    fn base_change_conjugate_is_isomorphic() {
        let f = Rationals;
        let q = Quiver::path(2);
        let m = Rep::<Rationals>::new(q.clone(), vec![1, 1], vec![from_i64(&f, &[&[1]])]).unwrap();
        // conjugate by g_0 = 2, g_1 = 3: the arrow matrix becomes 3/2
        let n = Rep::<Rationals>::new(
            q,
            vec![1, 1],
            vec![matrix::Matrix::from_rows(vec![vec![crate::exact::scalar::rat_frac(3, 2)]])],
        )
        .unwrap();
        let r = is_isomorphic(&f, &m, &n, 5).unwrap();
        let IsoResult::Isomorphic { witness } = r else {
            panic!("conjugate reps must be isomorphic");
        };
        assert!(is_hom(&f, &m, &n, &witness));
    }

    #[test]
    fn dims_mismatch_is_certified() {
        let f = Rationals;
        let q = Quiver::path(2);
        let a = Rep::zero_rep(&f, q.clone(), vec![1, 0]).unwrap();
        let b = Rep::zero_rep(&f, q, vec![0, 1]).unwrap();
        let r = is_isomorphic(&f, &a, &b, 0).unwrap();
        assert!(matches!(
            r,
            IsoResult::NotIsomorphic { certified: true, .. }
        ));
    }

    #[test]
    fn exhaustive_finite_field_scan() {
        let f = Gf::new(2, 1, None).unwrap();
        let s1 = Quiver::loop_quiver(1);
        let j0 = Rep::<Gf>::new(s1.clone(), vec![2], vec![from_i64(&f, &[&[0, 1], &[0, 0]])])
            .unwrap();
        let shifted = Rep::<Gf>::new(s1, vec![2], vec![from_i64(&f, &[&[1, 1], &[0, 1]])]).unwrap();
        // distinct eigenvalues leave no nonzero intertwiner at all
        let r = is_isomorphic(&f, &j0, &shifted, 0).unwrap();
        let IsoResult::NotIsomorphic { certified, .. } = r else {
            panic!("J(0) and J(1) have different eigenvalues over F_2");
        };
        assert!(certified);
    }

    #[test]
    fn direct_sum_order_does_not_matter() {
        let f = Rationals;
        let p2 = Quiver::path(2);
        let it = tree_identity_rep(&f, &p2).unwrap();
        let s0 = Rep::zero_rep(&f, p2.clone(), vec![1, 0]).unwrap();
        let ab = direct_sum(&f, &it, &s0).unwrap();
        let ba = direct_sum(&f, &s0, &it).unwrap();
        let r = is_isomorphic(&f, &ab, &ba, 9).unwrap();
        assert!(r.is_isomorphic());
    }

    #[test]
    fn failure_bound_shrinks() {
        let f = Rationals;
        let s1 = Quiver::loop_quiver(1);
        // J_2(0) + J_1(1) vs J_2(1) + J_1(0): same dims and the four
        // Hom-space dimensions all agree (2, 2, 3, 3), yet the reps are
        // not isomorphic, so the decision must come from sampling and
        // carry a tiny failure bound.
        let m = Rep::<Rationals>::new(
            s1.clone(),
            vec![3],
            vec![from_i64(&f, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]])],
        )
        .unwrap();
        let n = Rep::<Rationals>::new(
            s1,
            vec![3],
            vec![from_i64(&f, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]])],
        )
        .unwrap();
        match is_isomorphic(&f, &m, &n, 4).unwrap() {
            IsoResult::NotIsomorphic {
                certified: false,
                failure_bound: Some(b),
            } => {
                assert!(b < crate::exact::scalar::rat_frac(1, 1_000_000));
            }
            other => panic!("expected a probabilistic negative, got {:?}", other),
        }
        assert!(!is_isomorphic_resolved(&f, &m, &n, 4).unwrap());
    }
}
