//! Randomized property tests across module boundaries. Case counts are
//! kept modest because all arithmetic is exact bignum work.

use proptest::prelude::*;
use quivercount_core::catalog::canon::canonical_form;
use quivercount_core::catalog::conflict::{
    chromatic_polynomial, conflict_graph, winding_counts, winding_from_chromatic,
};
use quivercount_core::catalog::prufer::prufer_decode;
use quivercount_core::exact::numtheory::{divisors, mobius};
use quivercount_core::exact::partition::{partition_pairing, partitions_of};
use quivercount_core::exact::scalar::{binomial_u, int, rat, Int, Rat};
use quivercount_core::kac::{kac_value_at, Recipe};
use quivercount_core::matrix::{self, Matrix};
use quivercount_core::rep::hom::{compose_hom, hom_space, is_hom};
use quivercount_core::rep::indec::{is_indecomposable, IndecResult};
use quivercount_core::rep::iso::is_isomorphic_resolved;
use quivercount_core::rep::{direct_sum, pushforward, tree_identity_rep, Rep};
use quivercount_core::{
    count_abs_indec_ff, kac_polynomial, lagrange_interpolate, BinomialPolyG, CoreError, FieldSpec,
    Gf, PolyQ, Quiver, QuiverMorphism, Rationals,
};

/// A uniformly random oriented tree on `d` vertices from a Prüfer
/// sequence and an orientation mask.
fn arb_tree(max_d: usize) -> impl Strategy<Value = Quiver> {
    (2..=max_d).prop_flat_map(|d| {
        (
            proptest::collection::vec(0..d, if d >= 2 { d - 2 } else { 0 }),
            any::<u32>(),
        )
            .prop_map(move |(seq, mask)| {
                let edges = prufer_decode(&seq, d);
                let arrows: Vec<(usize, usize)> = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| {
                        if (mask >> (i % 32)) & 1 == 1 {
                            (b, a)
                        } else {
                            (a, b)
                        }
                    })
                    .collect();
                Quiver::new(d, arrows).expect("valid tree")
            })
    })
}

fn relabel(q: &Quiver, perm: &[usize]) -> Quiver {
    let arrows: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .map(|a| (perm[a.tail], perm[a.head]))
        .collect();
    Quiver::new(q.vertex_count(), arrows).expect("relabeled tree")
}

fn arb_gf2_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<u16>> {
    proptest::collection::vec(0u16..2, rows * cols).prop_map(move |v| {
        let mut m = Matrix::filled(rows, cols, 0u16);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, v[i * cols + j]);
            }
        }
        m
    })
}

fn arb_gf3_matrix(n: usize) -> impl Strategy<Value = Matrix<u16>> {
    proptest::collection::vec(0u16..3, n * n).prop_map(move |v| {
        let mut m = Matrix::filled(n, n, 0u16);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, v[i * n + j]);
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_code_is_relabeling_invariant(
        q in arb_tree(7),
        keys in proptest::collection::vec(any::<u64>(), 7),
    ) {
        prop_assert!(q.is_tree());
        let d = q.vertex_count();
        let mut idx: Vec<usize> = (0..d).collect();
        idx.sort_by_key(|&i| keys[i % keys.len()].wrapping_add(i as u64));
        let permuted = relabel(&q, &idx);
        let a = canonical_form(&q).unwrap();
        let b = canonical_form(&permuted).unwrap();
        prop_assert_eq!(&a.code, &b.code);
        prop_assert_eq!(a.aut_order, b.aut_order);
        // the canonical representative canonicalizes to itself
        let again = canonical_form(&a.representative).unwrap();
        prop_assert_eq!(&again.code, &a.code);
    }

    #[test]
    fn pushforward_keeps_tree_sparsity(
        q in arb_tree(6),
        g in 1usize..=3,
        label_seed in any::<u64>(),
    ) {
        let f = Rationals;
        let d = q.vertex_count();
        let labels: Vec<usize> = (0..d - 1)
            .map(|i| ((label_seed >> (2 * (i % 30))) as usize) % g)
            .collect();
        let morphism = QuiverMorphism::new(
            q.clone(),
            Quiver::loop_quiver(g),
            vec![0; d],
            labels,
        ).unwrap();
        let it = tree_identity_rep(&f, &q).unwrap();
        let image = pushforward(&f, &morphism, &it).unwrap();
        prop_assert_eq!(&image.dims, &vec![d]);
        prop_assert_eq!(image.sparsity(&f), (d - 1, d - 1));
    }

    #[test]
    fn winding_counts_match_chromatic_polynomial(q in arb_tree(7)) {
        let w = winding_counts(&q).unwrap();
        let chi = chromatic_polynomial(&conflict_graph(&q));
        let d = q.vertex_count();
        prop_assert_eq!(w.len(), d - 1);
        for k in 1..d {
            prop_assert_eq!(w[k - 1], winding_from_chromatic(&chi, k).unwrap());
        }
        for g in 0..=4u64 {
            let sum: Rat = w
                .iter()
                .enumerate()
                .map(|(k0, &c)| Rat::from_integer(Int::from(c) * binomial_u(g, k0 as u64 + 1)))
                .sum();
            prop_assert_eq!(sum, chi.eval_int(g as i64));
        }
    }

    #[test]
    fn hom_spaces_compose(
        ma in arb_gf2_matrix(2, 2),
        mb in arb_gf2_matrix(2, 2),
        mc in arb_gf2_matrix(2, 2),
    ) {
        let f = Gf::new(2, 1, None).unwrap();
        let path = Quiver::path(2);
        let a = Rep::<Gf>::new(path.clone(), vec![2, 2], vec![ma]).unwrap();
        let b = Rep::<Gf>::new(path.clone(), vec![2, 2], vec![mb]).unwrap();
        let c = Rep::<Gf>::new(path, vec![2, 2], vec![mc]).unwrap();
        let hab = hom_space(&f, &a, &b).unwrap();
        let hbc = hom_space(&f, &b, &c).unwrap();
        for phi in &hab {
            prop_assert!(is_hom(&f, &a, &b, phi));
        }
        for psi in &hbc {
            prop_assert!(is_hom(&f, &b, &c, psi));
            for phi in &hab {
                let composite = compose_hom(&f, psi, phi);
                prop_assert!(is_hom(&f, &a, &c, &composite));
            }
        }
    }

    #[test]
    fn direct_sums_split_and_commute(
        ma in arb_gf2_matrix(1, 1),
        mb in arb_gf2_matrix(2, 2),
        seed in any::<u64>(),
    ) {
        let f = Gf::new(2, 1, None).unwrap();
        let s1 = Quiver::loop_quiver(1);
        let a = Rep::<Gf>::new(s1.clone(), vec![1], vec![ma]).unwrap();
        let b = Rep::<Gf>::new(s1, vec![2], vec![mb]).unwrap();
        let ab = direct_sum(&f, &a, &b).unwrap();
        let ba = direct_sum(&f, &b, &a).unwrap();
        prop_assert!(is_isomorphic_resolved(&f, &ab, &ba, seed).unwrap());
        match is_indecomposable(&f, &ab, seed).unwrap() {
            IndecResult::Decomposable { idempotent } => {
                prop_assert!(is_hom(&f, &ab, &ab, &idempotent));
                prop_assert_eq!(compose_hom(&f, &idempotent, &idempotent), idempotent);
            }
            IndecResult::Indecomposable(_) => {
                prop_assert!(false, "a proper direct sum was not split");
            }
        }
    }

    #[test]
    fn count_polynomials_predict_fresh_abscissas(
        g in 1usize..=2,
        d in 1usize..=2,
        pick in 0usize..3,
    ) {
        let q = Quiver::loop_quiver(g);
        let dims = vec![d];
        let result = kac_polynomial(&q, &dims).unwrap();
        let q0 = [7i64, 11, 13][pick];
        let fresh = kac_value_at(&q, &dims, q0, Recipe::Primary).unwrap();
        prop_assert_eq!(fresh, result.poly.eval_int(q0));
    }

    #[test]
    fn binomial_basis_round_trips(
        terms in proptest::collection::vec((0u32..=6, -50i64..=50), 0..5),
    ) {
        let p = BinomialPolyG::from_int_terms(
            &terms.iter().map(|&(k, c)| (k, c)).collect::<Vec<_>>(),
        );
        let mono = p.to_monomial();
        let back = BinomialPolyG::from_monomial(&mono);
        prop_assert_eq!(back.terms(), p.terms());
        for g in 0..=8u64 {
            prop_assert_eq!(p.eval_at(g), mono.eval_int(g as i64));
        }
    }

    #[test]
    fn interpolation_recovers_integer_polynomials(
        coeffs in proptest::collection::vec(-80i64..=80, 1..8),
    ) {
        let p = PolyQ::from_int_coeffs(&coeffs);
        let points: Vec<(Rat, Rat)> = (0..coeffs.len() as i64)
            .map(|x| (rat(x), p.eval_int(x)))
            .collect();
        let back = lagrange_interpolate(&points).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn partition_pairing_is_symmetric(
        n in 1u32..=10,
        m in 1u32..=10,
        i in any::<usize>(),
        j in any::<usize>(),
    ) {
        let ps = partitions_of(n);
        let qs = partitions_of(m);
        let lambda = &ps[i % ps.len()];
        let mu = &qs[j % qs.len()];
        prop_assert_eq!(partition_pairing(lambda, mu), partition_pairing(mu, lambda));
        prop_assert!(partition_pairing(lambda, lambda) >= n as u64);
        let double_conjugate = lambda.conjugate().conjugate();
        prop_assert_eq!(double_conjugate.parts(), lambda.parts());
    }

    #[test]
    fn exact_linear_algebra_invariants(
        a in arb_gf3_matrix(3),
        b in arb_gf3_matrix(3),
    ) {
        let f = Gf::new(3, 1, None).unwrap();
        let ra = matrix::rank(&f, &a);
        let rb = matrix::rank(&f, &b);
        let ab = matrix::mul(&f, &a, &b);
        prop_assert!(matrix::rank(&f, &ab) <= ra.min(rb));
        if let Some(inv) = matrix::inverse(&f, &a) {
            prop_assert_eq!(matrix::mul(&f, &a, &inv), matrix::identity(&f, 3));
            prop_assert_eq!(ra, 3);
        } else {
            prop_assert!(ra < 3);
        }
        for v in matrix::nullspace(&f, &a) {
            let mut col = Matrix::filled(3, 1, 0u16);
            for (i, x) in v.iter().enumerate() {
                col.set(i, 0, *x);
            }
            prop_assert!(matrix::is_zero_matrix(&f, &matrix::mul(&f, &a, &col)));
        }
    }

    #[test]
    fn mobius_sums_detect_one(n in 1u64..=3000) {
        let total: i64 = divisors(n).iter().map(|&k| mobius(k)).sum();
        prop_assert_eq!(total, if n == 1 { 1 } else { 0 });
        for k in divisors(n) {
            prop_assert_eq!(n % k, 0);
        }
    }

    #[test]
    fn one_dimensional_counts_scale_with_the_field(
        g in 1usize..=2,
        pick in 0usize..3,
    ) {
        let (p, r) = [(2u64, 1u32), (3, 1), (2, 2)][pick];
        let q = Quiver::loop_quiver(g);
        let counted = count_abs_indec_ff(&q, &[1], &FieldSpec::finite(p, r)).unwrap();
        let size = p.pow(r);
        prop_assert_eq!(counted, size.pow(g as u32));
        let poly = kac_polynomial(&q, &[1]).unwrap();
        prop_assert_eq!(poly.poly.eval_int(size as i64), rat(counted as i64));
    }
}

#[test]
fn duplicate_abscissas_are_rejected() {
    let points = vec![(rat(1), rat(5)), (rat(1), rat(7))];
    match lagrange_interpolate(&points) {
        Err(CoreError::DuplicateAbscissa(_)) => {}
        other => panic!("expected a duplicate-abscissa error, got {:?}", other),
    }
}

#[test]
fn interpolation_matches_known_quadratic() {
    // y = x^2 through three points
    let points: Vec<(Rat, Rat)> = [0i64, 1, 2].iter().map(|&x| (rat(x), rat(x * x))).collect();
    let p = lagrange_interpolate(&points).unwrap();
    assert_eq!(p, PolyQ::from_int_coeffs(&[0, 0, 1]));
    assert_eq!(p.eval_int(5), int(25).into());
}
