use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use stratlink::complex::glue;
use stratlink::corpus;
use stratlink::format::{parse_complex, print_complex};
use stratlink::geometry::{point_stratum, psi_eval};
use stratlink::homology::snf::{invariant_factors, rank, SparseMatrix};
use stratlink::homology::{chain_complex, homology, Coefficients};
use stratlink::neighborhoods::{sim_stan_hood, simplicial_link, stan_hood_flag};
use stratlink::{Flag, Label, Poset, RegularFlag, Restriction, StratComplex, Subcomplex};

/// Random DAG on `n` elements named `e0..`, edges only from lower to higher index.
fn poset_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let len = pairs.len();
        (Just(n), proptest::sample::subsequence(pairs, 0..=len))
    })
}

fn build_poset(n: usize, rel: &[(usize, usize)]) -> Poset {
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let rel: Vec<(String, String)> = rel.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
    Poset::new(&names, &rel).unwrap()
}

/// A complex over the 3-chain: labels per vertex and facets as vertex sets.
fn complex_strategy() -> impl Strategy<Value = StratComplex> {
    (1usize..7)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(0usize..3, n),
                proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=4.min(n)), 0..6),
            )
        })
        .prop_map(|(labels, facets)| {
            let poset = corpus::chain_poset(3);
            let names: Vec<String> = (0..labels.len()).map(|i| format!("v{i}")).collect();
            let verts: Vec<(String, String)> =
                names.iter().zip(&labels).map(|(n, l)| (n.clone(), l.to_string())).collect();
            let facets: Vec<Vec<String>> = facets
                .iter()
                .map(|f| f.iter().map(|&i| names[i].clone()).collect())
                .collect();
            StratComplex::from_maximal(poset, &verts, &facets).unwrap()
        })
}

fn gcd_all(m: &[Vec<i64>]) -> i64 {
    m.iter().flatten().fold(0i64, |g, &x| g.gcd(&x))
}

/// Rank over the rationals by fraction-free elimination.
fn oracle_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            let f = &a[i][c] / &a[r][c];
            for j in c..cols {
                let d = &f * &a[r][j];
                a[i][j] -= d;
            }
        }
        r += 1;
    }
    r
}

proptest! {
    #[test]
    fn poset_is_closed_and_flags_are_chains((n, rel) in poset_strategy()) {
        let p = build_poset(n, &rel);
        let labels: Vec<Label> = p.labels().collect();
        for (&a, &b) in rel.iter().map(|(a, b)| (&labels[*a], &labels[*b])) {
            prop_assert!(p.leq(a, b));
        }
        for (&a, &b, &c) in labels.iter().tuple_combinations() {
            for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                if p.leq(x, y) && p.leq(y, z) {
                    prop_assert!(p.leq(x, z));
                }
            }
        }
        let flags = p.regular_flags();
        prop_assert_eq!(flags.len() as u128, p.count_regular_flags());
        for f in &flags {
            prop_assert!(f.entries().windows(2).all(|w| p.lt(w[0], w[1])));
        }
        let ranks: Vec<usize> = labels.iter().map(|&l| p.rank(l)).collect();
        for (&a, &b) in labels.iter().tuple_combinations() {
            if p.lt(a, b) {
                prop_assert!(ranks[a.index()] < ranks[b.index()]);
            }
        }
    }

    #[test]
    fn restrictions_partition_flags(entries in proptest::collection::vec(0usize..4, 1..7), p in 0usize..4) {
        let poset = corpus::chain_poset(4);
        let mut entries = entries;
        entries.sort_unstable();
        let names: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
        let flag = Flag::from_names(&poset, &names).unwrap();
        let p = poset.label(&p.to_string()).unwrap();
        let pos = |m| flag.positions(&poset, p, m);
        let union = |a: Vec<usize>, b: Vec<usize>| a.into_iter().chain(b).sorted().collect::<Vec<_>>();
        let all: Vec<usize> = (0..flag.len()).collect();
        prop_assert_eq!(union(pos(Restriction::Le), pos(Restriction::NotLe)), all.clone());
        prop_assert_eq!(union(pos(Restriction::Lt), pos(Restriction::NotLt)), all);
        prop_assert_eq!(union(pos(Restriction::Lt), pos(Restriction::Eq)), pos(Restriction::Le));
        prop_assert_eq!(union(pos(Restriction::Eq), pos(Restriction::NotLe)), pos(Restriction::NotLt));
        prop_assert_eq!(pos(Restriction::NotLe), pos(Restriction::Gt));
    }

    #[test]
    fn invariant_factors_match_oracles(rows in proptest::collection::vec(proptest::collection::vec(-4i64..5, 4), 1..5)) {
        let m = SparseMatrix::from_dense(&rows);
        let factors = invariant_factors(&m);
        prop_assert_eq!(rank(&m), oracle_rank(&rows));
        prop_assert_eq!(factors.len(), oracle_rank(&rows));
        if let Some(first) = factors.first() {
            prop_assert_eq!(first.clone(), BigInt::from(gcd_all(&rows)));
        }
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subdivision_preserves_euler_and_homology(k in complex_strategy()) {
        let sd = k.barycentric_subdivision();
        prop_assert_eq!(sd.complex.num_vertices(), k.num_simplices());
        prop_assert_eq!(sd.complex.euler_characteristic(), k.euler_characteristic());
        let h = homology(&k, Coefficients::Integers);
        prop_assert_eq!(homology(&sd.complex, Coefficients::Integers), h.clone());
        prop_assert_eq!(h.euler_characteristic(), k.euler_characteristic());
        prop_assert!(chain_complex(&k).boundary_squared_is_zero());
        let q = homology(&k, Coefficients::Rationals);
        prop_assert_eq!(q.betti().iter().rev().skip_while(|b| **b == 0).count(),
                        h.betti().iter().rev().skip_while(|b| **b == 0).count());
        let two = homology(&k, Coefficients::Prime(2));
        for (n, b) in h.betti().iter().enumerate() {
            prop_assert!(two.betti().get(n).copied().unwrap_or(0) >= *b);
        }
    }

    #[test]
    fn files_round_trip(k in complex_strategy()) {
        let text = print_complex(&k);
        prop_assert_eq!(parse_complex(&text).unwrap(), k);
    }

    #[test]
    fn links_sit_in_neighborhoods(k in complex_strategy()) {
        let sd = k.barycentric_subdivision();
        for flag in k.poset().regular_flags() {
            let link = simplicial_link(&sd, &flag).unwrap();
            let hood = stan_hood_flag(&sd, &flag).unwrap();
            prop_assert!(link.is_subset_of(&hood));
            for &p in flag.entries() {
                prop_assert!(hood.is_subset_of(&sim_stan_hood(&sd, p).unwrap()));
            }
        }
    }

    #[test]
    fn self_gluing_is_additive(k in complex_strategy(), keep in proptest::collection::vec(any::<bool>(), 7)) {
        let a = Subcomplex::full(&k, |v| keep[v]);
        let embed: BTreeMap<String, String> = a
            .vertices()
            .iter()
            .map(|&v| (k.vertex_name(v).to_string(), k.vertex_name(v).to_string()))
            .collect();
        let g = glue(&k, &k, &a, &embed).unwrap();
        prop_assert_eq!(
            g.complex.euler_characteristic(),
            2 * k.euler_characteristic() - a.euler_characteristic()
        );
        prop_assert_eq!(g.x_image.intersection(&g.b_image), g.a_image.clone());
        prop_assert_eq!(g.x_image.union(&g.b_image).len(), g.complex.num_simplices());
    }

    #[test]
    fn psi_is_stratum_preserving(
        entries in proptest::collection::vec(0usize..4, 1..5),
        cuts in proptest::collection::vec(any::<u8>(), 1..5),
        weights in proptest::collection::vec(0u32..5, 1..5),
    ) {
        let poset = corpus::chain_poset(4);
        let mut entries = entries;
        entries.sort_unstable();
        let names: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
        let j = Flag::from_names(&poset, &names).unwrap();
        // a growing chain of position sets: prefixes of a shuffled order
        let n = j.len();
        let order: Vec<usize> = (0..n).sorted_by_key(|&i| cuts[i % cuts.len()] as usize * 7 + i).collect();
        let sizes: Vec<usize> = cuts.iter().map(|c| *c as usize % n + 1).sorted().dedup().collect();
        let chain: Vec<Vec<usize>> = sizes.iter().map(|&s| order[..s].to_vec()).collect();
        let mut w: Vec<u32> = (0..chain.len()).map(|i| weights[i % weights.len()]).collect();
        if w.iter().all(|&x| x == 0) {
            w[0] = 1;
        }
        let total: u32 = w.iter().sum();
        let w: Vec<BigRational> = w.iter().map(|&x| BigRational::new(x.into(), total.into())).collect();
        let x = psi_eval(&j, &chain, &w).unwrap();
        prop_assert_eq!(x.coords().iter().sum::<BigRational>(), BigRational::one());
        let last = chain.iter().zip(&w).filter(|(_, w)| !w.is_zero()).last().unwrap().0;
        let expected = poset.max_of(last.iter().map(|&i| j.entries()[i])).unwrap();
        prop_assert_eq!(point_stratum(&poset, &x), expected);
    }
}

#[test]
fn regular_flags_of_a_chain() {
    let p = Arc::new(Poset::chain(&["a", "b", "c"]).unwrap());
    let flags = p.regular_flags();
    assert_eq!(flags.len(), 7);
    assert_eq!(flags[6], RegularFlag::parse(&p, "a,b,c").unwrap());
}
