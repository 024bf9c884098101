use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use gengraph::graph::{bfs_distances, GenGraph, GraphView};
use gengraph::product::{lift_path, shortest_path, ProductGraph};
use gengraph::{build_group, Caps};

fn graphs() -> &'static [GenGraph] {
    static GRAPHS: OnceLock<Vec<GenGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        ["Sym(4)", "SL2(4)", "Alt(4)", "Dih(5)"]
            .iter()
            .map(|s| {
                let g: Arc<_> = build_group(&s.parse().unwrap(), &Caps::default()).unwrap();
                GenGraph::new(&g).unwrap()
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lifted_walks_are_valid(
        picks in proptest::collection::vec((0usize..4, any::<prop::sample::Index>(), any::<prop::sample::Index>()), 2..4),
        extra in 0usize..4,
    ) {
        let factors: Vec<&dyn GraphView> = picks.iter().map(|(i, _, _)| &graphs()[*i] as &dyn GraphView).collect();
        let mut paths = Vec::new();
        for ((i, a, b), f) in picks.iter().zip(&factors) {
            let v = graphs()[*i].vertices();
            let (s, t) = (v[a.index(v.len())], v[b.index(v.len())]);
            paths.push(shortest_path(*f, s as usize, t as usize).unwrap());
        }
        let longest = paths.iter().map(|p| p.len()).max().unwrap();
        let m = (longest + extra).max(2);
        let walk = lift_path(&factors, &paths, m).unwrap();
        let product = ProductGraph::new(factors.clone());
        prop_assert_eq!(walk.len(), m);
        prop_assert!(walk.validate(&product));
        let start: Vec<usize> = paths.iter().map(|p| p.start).collect();
        let end: Vec<usize> = paths.iter().map(|p| p.end).collect();
        prop_assert_eq!(&walk.start, &start);
        prop_assert_eq!(&walk.end, &end);
    }

    #[test]
    fn shortest_paths_match_bfs(i in 0usize..4, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let g = &graphs()[i];
        let v = g.vertices();
        let (s, t) = (v[a.index(v.len())] as usize, v[b.index(v.len())] as usize);
        let p = shortest_path(g, s, t).unwrap();
        prop_assert!(p.validate(g));
        prop_assert_eq!(Some(p.len() as u32), bfs_distances(g, s)[t]);
    }
}
