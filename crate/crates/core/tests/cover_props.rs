mod common;

use common::*;
use proptest::prelude::*;
use rigcore::covers::{aggregates, analyze_cover, binom, critical_cover, sparse_cover, Cover};
use rigcore::graph::VertexSet;
use rigcore::sparsity::{maximal_sparse_subgraph, EdgeOrder};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn critical_cover_structure(n in 4usize..=10, d in 1usize..=4, p in prop::sample::select(vec![0.3, 0.5, 0.8]), seed in any::<u64>()) {
        let g = gnp(n, p, seed);
        let h = maximal_sparse_subgraph(&g, params(d), &EdgeOrder::Random(seed)).unwrap();
        let cover = critical_cover(&g, &h, params(d)).unwrap();
        prop_assert!(cover.thinness() < d || cover.len() < 2);
        prop_assert!(cover.hinges(d).is_empty());
        if d >= 2 {
            for hinge in cover.hinges(d - 1) {
                prop_assert!(hinge.closed);
                prop_assert!(g.is_clique(&hinge.vertices));
            }
        }
        let report = analyze_cover(&g, &h, params(d)).unwrap();
        prop_assert!(report.pass(), "{:?}", report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn multiplicity_pair_identity(n in 4usize..=10, d in 2usize..=4, seed in any::<u64>()) {
        let h = sparse_graph(n, 0.7, d, seed);
        let (cover, _) = sparse_cover(&h, params(d)).unwrap();
        let sets = cover.sets();
        for k in 1..=d {
            let lhs: i64 = (0..sets.len())
                .flat_map(|i| (i + 1..sets.len()).map(move |j| (i, j)))
                .map(|(i, j)| binom(sets[i].intersection(&sets[j]).len() as i64, k as i64))
                .sum();
            let rhs: i64 = cover.hinges(k).iter().map(|w| binom(w.multiplicity as i64, 2)).sum();
            prop_assert_eq!(lhs, rhs);
            for w in cover.hinges(k) {
                prop_assert_eq!(w.multiplicity, cover.multiplicity(&w.vertices));
                prop_assert!(w.multiplicity >= 2 && w.vertices.len() == k);
            }
        }
    }

    #[test]
    fn aggregates_match_hinges(n in 4usize..=10, d in 2usize..=4, seed in any::<u64>()) {
        let h = sparse_graph(n, 0.7, d, seed);
        let (cover, _) = sparse_cover(&h, params(d)).unwrap();
        prop_assume!(cover.len() >= 2);
        let agg = aggregates(&cover, params(d));
        prop_assert_eq!(agg.a[0], cover.len() as i64 - 1);
        for k in 1..=d {
            let expect: i64 = cover.hinges(k).iter().map(|w| w.multiplicity as i64 - 1).sum();
            prop_assert_eq!(agg.a[k], expect);
            for (i, s) in cover.sets().iter().enumerate() {
                let inside = cover.hinges(k).iter().filter(|w| w.vertices.is_subset(s)).count();
                prop_assert_eq!(agg.theta[i][k], inside);
            }
        }
    }
}

#[test]
fn cover_rejects_uncovered_edge() {
    let g = gnp(5, 1.0, 0);
    assert!(Cover::new(g.clone(), vec![VertexSet::new(vec![0, 1, 2])]).is_err());
    assert!(Cover::new(g, vec![VertexSet::new(vec![0])]).is_err());
}
