use std::collections::BTreeSet;

use lexseg_core::constructions::construct;
use lexseg_core::corpus;
use lexseg_core::eliahou_kervaire::{depth, ek_betti_table, projective_dimension};
use lexseg_core::hilbert::{
    hilbert_function, hilbert_function_by_enumeration, hilbert_series, kpolynomial_inclusion_exclusion,
    kpolynomial_pivot,
};
use lexseg_core::macaulay::{lex_ideal_from_hf, macaulay_growth, HilbertFunctionSpec};
use lexseg_core::oracle::bruteforce_betti_table;
use lexseg_core::{Monomial, MonomialIdeal};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

/// All exponent vectors of length `n` summing to `d`, lex-descending.
fn all_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Monomials of degree `<= max_deg` lying in the ideal, built by
/// multiplying generators.
fn ideal_monomials(i: &MonomialIdeal, max_deg: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for g in i.generators() {
        let gd = g.degree() as u32;
        if gd > max_deg {
            continue;
        }
        for extra in 0..=max_deg - gd {
            for w in all_of_degree(i.n(), extra) {
                out.insert(g.exponents().iter().zip(&w).map(|(a, b)| a + b).collect());
            }
        }
    }
    out
}

fn lexsegment_by_enumeration(i: &MonomialIdeal) -> bool {
    let top = i.max_generator_degree().unwrap() as u32;
    (1..=top).all(|d| {
        let flags: Vec<bool> = all_of_degree(i.n(), d)
            .into_iter()
            .map(|e| i.generators().iter().any(|g| divides(g.exponents(), &e)))
            .collect();
        // once a monomial is missing, no later (smaller) one may be present
        flags.windows(2).all(|w| w[0] || !w[1])
    })
}

fn krull_by_subsets(i: &MonomialIdeal) -> usize {
    let n = i.n();
    (0u32..1 << n)
        .filter(|s| {
            i.generators()
                .iter()
                .all(|g| g.support().any(|v| s & (1 << v) != 0))
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .map(|cover| n - cover)
        .unwrap()
}

fn ideal_strategy(max_n: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_deg, n), 1..=max_gens).prop_map(
            move |raw| {
                let gens: Vec<Monomial> = raw
                    .into_iter()
                    .map(|mut e| {
                        if e.iter().all(|&x| x == 0) {
                            e[0] = 1;
                        }
                        Monomial::new(e).unwrap()
                    })
                    .collect();
                MonomialIdeal::new(n, gens).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimal_generators_idempotent_and_order_free(i in ideal_strategy(4, 8, 4), seed in any::<u64>()) {
        let again = MonomialIdeal::new(i.n(), i.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        let mut shuffled = i.generators().to_vec();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        prop_assert_eq!(MonomialIdeal::new(i.n(), shuffled).unwrap(), i.clone());
        for a in i.generators() {
            for b in i.generators() {
                prop_assert!(a == b || !a.divides(b).unwrap());
            }
        }
    }

    #[test]
    fn membership_matches_enumeration(i in ideal_strategy(4, 6, 4)) {
        let members = ideal_monomials(&i, 6);
        for d in 0..=6 {
            for e in all_of_degree(i.n(), d) {
                let m = Monomial::new(e.clone()).unwrap();
                prop_assert_eq!(i.contains(&m).unwrap(), members.contains(&e));
            }
        }
    }

    #[test]
    fn krull_dimension_by_subsets(i in ideal_strategy(5, 8, 4)) {
        let d = i.krull_dimension().unwrap();
        prop_assert_eq!(d, krull_by_subsets(&i));
        prop_assert!(d < i.n());
        let pure_powers = (0..i.n()).all(|v| {
            i.generators().iter().any(|g| g.support().collect::<Vec<_>>() == vec![v])
        });
        prop_assert_eq!(d == 0, pure_powers);
    }

    #[test]
    fn stability_chain(i in ideal_strategy(4, 6, 4)) {
        let lex = i.is_lexsegment().unwrap();
        let strong = i.is_strongly_stable().unwrap();
        let stable = i.is_stable().unwrap();
        prop_assert!(!lex || strong);
        prop_assert!(!strong || stable);
        prop_assert_eq!(lex, lexsegment_by_enumeration(&i));
    }

    #[test]
    fn hilbert_engines_agree(i in ideal_strategy(5, 8, 6)) {
        let ie = kpolynomial_inclusion_exclusion(&i).unwrap();
        prop_assert_eq!(&ie, &kpolynomial_pivot(&i));
        let s = hilbert_series(&i).unwrap();
        prop_assert_eq!(s.denominator_exponent(), i.krull_dimension().unwrap());
        prop_assert_eq!(&s.numerator()[0], &BigInt::from(1));
        for k in 0..=8u32 {
            prop_assert_eq!(
                hilbert_function(&i, k as u64).unwrap(),
                hilbert_function_by_enumeration(&i, k).unwrap()
            );
        }
    }

    #[test]
    fn growth_monotone(a in 0u64..2000, d in 1u32..20) {
        prop_assert!(macaulay_growth(a, d).unwrap() <= macaulay_growth(a + 1, d).unwrap());
    }

    #[test]
    fn lex_realization(i in ideal_strategy(4, 5, 3)) {
        // any quotient's Hilbert function is an O-sequence; realize it lex
        let top = i.max_generator_degree().unwrap() as usize + 1;
        let values: Vec<u64> = (0..=top)
            .map(|k| u64::try_from(hilbert_function(&i, k as u64).unwrap()).unwrap())
            .collect();
        let spec = HilbertFunctionSpec::max_growth(values.clone());
        let lex = lex_ideal_from_hf(&spec, i.n()).unwrap();
        if !lex.is_zero() {
            prop_assert!(lex.is_lexsegment().unwrap());
            prop_assert!(lex.is_strongly_stable().unwrap());
        }
        for (k, &v) in values.iter().enumerate() {
            prop_assert_eq!(
                hilbert_function_by_enumeration(&lex, k as u32).unwrap(),
                BigUint::from(v)
            );
        }
    }
}

#[test]
fn eliahou_kervaire_identities() {
    for i in corpus::strongly_stable_corpus(11, 60) {
        let t = ek_betti_table(&i).unwrap();
        assert_eq!(t.total(1), BigUint::from(i.generators().len()));
        assert_eq!(depth(&i).unwrap() + projective_dimension(&i).unwrap(), i.n());
        assert_eq!(t.euler_characteristic(), kpolynomial_pivot(&i));
        assert_eq!(t.get(0, 0), BigUint::from(1u32));
        assert_eq!(
            t.regularity(),
            i.max_generator_degree().unwrap() as usize - 1
        );
    }
}

#[test]
fn oracle_euler_characteristic_on_general_ideals() {
    for i in corpus::monomial_corpus(5, 60, 4) {
        let t = bruteforce_betti_table(&i).unwrap();
        assert_eq!(t.euler_characteristic(), kpolynomial_pivot(&i), "{i}");
        assert_eq!(t.total(1), BigUint::from(i.generators().len()));
    }
}

#[test]
fn lex_realization_hilbert_function_past_termination() {
    for (initial, c, n) in [(vec![1u64, 6, 5], 5u64, 6usize), (vec![1, 3, 4, 2], 2, 3), (vec![1, 4], 3, 4)] {
        let spec = HilbertFunctionSpec::constant(initial.clone(), c);
        let lex = lex_ideal_from_hf(&spec, n).unwrap();
        let term = (c as usize).max(initial.len());
        for k in 0..=term + 3 {
            assert_eq!(
                hilbert_function_by_enumeration(&lex, k as u32).unwrap(),
                spec.value(k, n),
                "k = {k}"
            );
        }
    }
}

#[test]
fn construction_grid_small() {
    for r in 1..=6 {
        for s in 1..=6 {
            let rep = construct(r, s).unwrap();
            assert!(rep.is_consistent());
            if s < r {
                assert_eq!((rep.measured.dim, rep.measured.depth), (1, 0));
            } else {
                // linear resolution: every β_{i,j}, i >= 1, sits at j = i + r
                let t = ek_betti_table(&rep.ideal).unwrap();
                for &(i, j) in t.entries().keys() {
                    assert!(i == 0 || j == i + r as usize);
                }
            }
        }
    }
}
