mod common;

use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;
use succession::counting::{binomial, factorial};
use succession::{
    contains_forbidden_succession, count_linear, count_modular, count_modular_coprime,
    cycle_decomposition, derangement, edge_subset_polynomial, forbidden_edges, linear_triangle,
    longest_forbidden_chain, max_cycle_length, successor, ShiftProblem, Variant,
};

fn shift() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=30).prop_flat_map(|n| (Just(n), 1..n))
}

#[test]
fn triangle_equals_closed_form_to_thirty() {
    let t = linear_triangle(30).unwrap();
    for n in 1..=30 {
        assert_eq!(t.get(n, 0), Some(&derangement(n)));
        for k in 1..n {
            assert_eq!(
                t.get(n, k),
                Some(&count_linear(n, k).unwrap()),
                "({n}, {k})"
            );
        }
    }
}

#[test]
fn gcd_classes_share_counts() {
    for n in 2..=30usize {
        let mut by_gcd = std::collections::HashMap::new();
        for k in 1..n {
            let v = count_modular(n, k).unwrap();
            let first = by_gcd.entry(n.gcd(&k)).or_insert_with(|| v.clone());
            assert_eq!(*first, v, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn alternating_derangement_identity() {
    for n in 2..=30 {
        let d = count_modular_coprime(n, 1).unwrap();
        let der = derangement(n);
        if n % 2 == 1 {
            assert_eq!(d, der + 1u32);
        } else {
            assert_eq!(d + 1u32, der);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_recurrence((n, k) in shift()) {
        prop_assume!(k + 1 < n);
        prop_assert_eq!(
            count_linear(n, k + 1).unwrap(),
            count_linear(n, k).unwrap() + count_linear(n - 1, k).unwrap()
        );
    }

    #[test]
    fn unit_shift_from_derangements(n in 2usize..=30) {
        prop_assert_eq!(count_linear(n, 1).unwrap(), derangement(n) + derangement(n - 1));
    }

    #[test]
    fn last_shift_is_difference_of_factorials(n in 2usize..=30) {
        prop_assert_eq!(count_linear(n, n - 1).unwrap(), factorial(n) - factorial(n - 1));
    }

    #[test]
    fn modular_symmetric_in_k((n, k) in shift()) {
        prop_assert_eq!(count_modular(n, k).unwrap(), count_modular(n, n - k).unwrap());
    }

    #[test]
    fn modular_never_exceeds_linear((n, k) in shift()) {
        prop_assert!(count_modular(n, k).unwrap() <= count_linear(n, k).unwrap());
    }

    #[test]
    fn coprime_route_agrees((n, k) in shift()) {
        if n.gcd(&k) == 1 {
            prop_assert_eq!(count_modular_coprime(n, k).unwrap(), count_modular(n, k).unwrap());
        } else {
            prop_assert!(count_modular_coprime(n, k).is_err());
        }
    }

    #[test]
    fn subset_polynomial_sanity((n, k) in shift()) {
        let d = n.gcd(&k);
        let m = n / d;
        let poly = edge_subset_polynomial(n, k).unwrap();
        let a = poly.coefficients();
        prop_assert_eq!(a.len(), n + 1);
        prop_assert_eq!(&a[0], &BigUint::from(1u32));
        prop_assert_eq!(&a[1], &BigUint::from(n));
        for (j, aj) in a.iter().enumerate() {
            prop_assert!(*aj <= binomial(n, j));
            if j < m {
                prop_assert_eq!(aj, &binomial(n, j));
            }
        }
        let expected = (BigUint::from(2u32).pow(m as u32) - 1u32).pow(d as u32);
        prop_assert_eq!(poly.sum(), expected);
    }

    #[test]
    fn edge_counts_and_successor_agreement((n, k) in (2usize..=64).prop_flat_map(|n| (Just(n), 1..n))) {
        let lin = forbidden_edges(&ShiftProblem::linear(n, k).unwrap());
        let modu = forbidden_edges(&ShiftProblem::modular(n, k).unwrap());
        prop_assert_eq!(lin.len(), n - k);
        prop_assert_eq!(modu.len(), n);
        let from_succ: Vec<(usize, usize)> = (1..=n)
            .map(|j| (j, successor(n, k, Variant::Modular, j).unwrap().unwrap()))
            .collect();
        prop_assert_eq!(modu.edges(), &from_succ[..]);
        let prefix: Vec<(usize, usize)> =
            from_succ.iter().copied().filter(|&(j, _)| j <= n - k).collect();
        prop_assert_eq!(lin.edges(), &prefix[..]);
        prop_assert_eq!(modu.edges(), &common::naive_edges(n, k, true)[..]);
    }

    #[test]
    fn chain_witness_is_valid((n, k) in (2usize..=64).prop_flat_map(|n| (Just(n), 1..n))) {
        let chain = longest_forbidden_chain(n, k).unwrap();
        prop_assert_eq!(chain.length, max_cycle_length(n, k).unwrap() - 1);
        prop_assert_eq!(chain.witness.len(), chain.length + 1);
        let mut sorted = chain.witness.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), chain.witness.len());
        let edges = forbidden_edges(&ShiftProblem::modular(n, k).unwrap());
        for w in chain.witness.windows(2) {
            prop_assert!(edges.contains(w[0], w[1]));
        }
        // Extending the witness by the remaining elements keeps every edge.
        if n <= 10 {
            let mut perm = chain.witness.clone();
            perm.extend((1..=n).filter(|x| !chain.witness.contains(x)));
            let p = ShiftProblem::modular(n, k).unwrap();
            prop_assert_eq!(contains_forbidden_succession(&perm, &p).unwrap(), chain.length > 0);
        }
    }
}

#[test]
fn cycle_structure_matches_walk_to_sixty_four() {
    for n in 2..=64 {
        for k in 1..n {
            let c = cycle_decomposition(n, k).unwrap();
            let walked = common::walked_cycle_lengths(n, k);
            assert_eq!(c.cycle_lengths(), walked, "({n}, {k})");
            assert_eq!(c.gcd() * c.max_cycle_length(), n);
            assert_eq!(c.cycles().len(), c.gcd());
            assert_eq!(
                max_cycle_length(n, k).unwrap(),
                *walked.iter().max().unwrap()
            );
            for cycle in c.cycles() {
                for w in cycle.windows(2) {
                    assert_eq!(successor(n, k, Variant::Modular, w[0]).unwrap(), Some(w[1]));
                }
                let last = *cycle.last().unwrap();
                assert_eq!(
                    successor(n, k, Variant::Modular, last).unwrap(),
                    Some(cycle[0])
                );
            }
        }
    }
}

#[test]
fn big_values_are_exact() {
    let two64 = BigUint::from(u64::MAX) + 1u32;
    let lin = count_linear(25, 3).unwrap();
    let modu = count_modular(25, 3).unwrap();
    assert!(lin > two64 && modu > two64);
    assert_eq!(
        lin,
        count_linear(25, 2).unwrap() + count_linear(24, 2).unwrap()
    );
    assert_eq!(modu, count_modular(25, 22).unwrap());
    assert!(modu <= lin);
}
