use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::GraphView;
use crate::caps::Caps;
use crate::error::Result;
use crate::par;

const UNREACHED: u32 = u32::MAX;

/// Connected components of the vertices of a view.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentMap {
    /// Component id per domain point; `None` for non-vertices.
    component: Vec<Option<u32>>,
    /// Smallest vertex of each component.
    representatives: Vec<usize>,
    sizes: Vec<usize>,
}

impl ComponentMap {
    /// Builds a map from arbitrary labels, renumbering components in order
    /// of their smallest vertex.
    pub(crate) fn from_labels(labels: &[Option<usize>]) -> ComponentMap {
        let mut renumber = HashMap::new();
        let mut component = vec![None; labels.len()];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for (v, l) in labels.iter().enumerate() {
            if let Some(l) = l {
                let id = *renumber.entry(*l).or_insert_with(|| {
                    representatives.push(v);
                    sizes.push(0);
                    representatives.len() - 1
                });
                sizes[id] += 1;
                component[v] = Some(id as u32);
            }
        }
        ComponentMap {
            component,
            representatives,
            sizes,
        }
    }

    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component[v].map(|c| c as usize)
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn same(&self, u: usize, v: usize) -> bool {
        self.component[u].is_some() && self.component[u] == self.component[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub vertex_count: usize,
    pub components: ComponentMap,
    /// Diameter of each component, indexed like the component ids.
    pub diameters: Vec<u32>,
}

impl GraphMetrics {
    pub fn connected(&self) -> bool {
        self.components.count() == 1
    }

    /// The diameter of the whole graph, defined only when it is connected.
    pub fn diameter(&self) -> Option<u32> {
        if self.connected() {
            Some(self.diameters[0])
        } else {
            None
        }
    }
}

/// BFS distances from `source` to every domain point; `None` if unreachable
/// or not a vertex.
pub fn bfs_distances(view: &(impl GraphView + ?Sized), source: usize) -> Vec<Option<u32>> {
    bfs(view, source)
        .into_iter()
        .map(|d| (d != UNREACHED).then_some(d))
        .collect()
}

fn bfs(view: &(impl GraphView + ?Sized), source: usize) -> Vec<u32> {
    let n = view.domain_size();
    let mut dist = vec![UNREACHED; n];
    if !view.is_vertex(source) {
        return dist;
    }
    dist[source] = 0;
    if view.neighbor_bits(source).is_some() {
        let mut unvisited = FixedBitSet::with_capacity(n);
        unvisited.insert_range(..);
        unvisited.set(source, false);
        let mut frontier = vec![source];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = FixedBitSet::with_capacity(n);
            for &v in &frontier {
                next.union_with(view.neighbor_bits(v).expect("bits for every vertex"));
            }
            next.intersect_with(&unvisited);
            unvisited.difference_with(&next);
            frontier = next.ones().collect();
            for &v in &frontier {
                dist[v] = level;
            }
        }
    } else {
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for u in view.neighbors(v) {
                if dist[u] == UNREACHED {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    dist
}

/// Components, and exact per-component diameters by BFS from one vertex per
/// symmetry class.
pub fn graph_metrics(view: &(impl GraphView + ?Sized), caps: &Caps) -> Result<GraphMetrics> {
    let vertices = view.vertices();
    Caps::check(caps.metrics, view.domain_size(), "graph metrics")?;
    let mut component = vec![None; view.domain_size()];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for &v in &vertices {
        if component[v].is_some() {
            continue;
        }
        let id = representatives.len() as u32;
        representatives.push(v);
        let dist = bfs(view, v);
        let mut size = 0;
        for (u, &d) in dist.iter().enumerate() {
            if d != UNREACHED {
                component[u] = Some(id);
                size += 1;
            }
        }
        sizes.push(size);
    }
    let mut sym_reps: Vec<usize> = vertices.iter().map(|&v| view.symmetry_rep(v)).collect();
    sym_reps.sort_unstable();
    sym_reps.dedup();
    let ecc: HashMap<usize, u32> = sym_reps
        .iter()
        .copied()
        .zip(par::map(&sym_reps, |&r| {
            bfs(view, r)
                .into_iter()
                .filter(|&d| d != UNREACHED)
                .max()
                .unwrap_or(0)
        }))
        .collect();
    let mut diameters = vec![0; representatives.len()];
    for &v in &vertices {
        let c = component[v].expect("vertex has a component") as usize;
        diameters[c] = diameters[c].max(ecc[&view.symmetry_rep(v)]);
    }
    Ok(GraphMetrics {
        vertex_count: vertices.len(),
        components: ComponentMap {
            component,
            representatives,
            sizes,
        },
        diameters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GenGraph, ListGraph};
    use crate::test_support::group;

    #[test]
    fn path_and_two_components() {
        let g = ListGraph::new(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]);
        let m = graph_metrics(&g, &Caps::default()).unwrap();
        assert_eq!(m.components.count(), 2);
        assert_eq!(m.diameters, vec![3, 1]);
        assert_eq!(m.diameter(), None);
        assert_eq!(bfs_distances(&g, 0)[3], Some(3));
        assert_eq!(bfs_distances(&g, 0)[4], None);
    }

    #[test]
    fn delta_sl2_4_has_diameter_two() {
        let g = group("SL2(4)");
        let gg = GenGraph::new(&g).unwrap();
        let m = graph_metrics(&gg, g.caps()).unwrap();
        assert_eq!(m.vertex_count, 59);
        assert!(m.connected());
        assert_eq!(m.diameter(), Some(2));
    }

    #[test]
    fn symmetry_shortcut_matches_all_sources() {
        for s in ["Sym(4)", "KleinCp3(3)", "Dih(6)", "Dir(Sym(3),Cyc(2))"] {
            let g = group(s);
            let gg = GenGraph::new(&g).unwrap();
            let m = graph_metrics(&gg, g.caps()).unwrap();
            let full = gg
                .vertices()
                .iter()
                .map(|&v| bfs(&gg, v as usize).into_iter().filter(|&d| d != UNREACHED).max().unwrap())
                .max()
                .unwrap();
            assert_eq!(m.diameters.iter().copied().max().unwrap(), full, "{s}");
            // the list-based BFS agrees with the bitset BFS
            let list = ListGraph::new(
                g.order(),
                &gg.vertices()
                    .iter()
                    .flat_map(|&x| gg.neighbors_of(x).map(move |y| (x as usize, y as usize)))
                    .collect::<Vec<_>>(),
            );
            assert_eq!(bfs_distances(&list, gg.vertices()[0] as usize), bfs_distances(&gg, gg.vertices()[0] as usize));
        }
    }

    #[test]
    fn cyclic_of_order_two() {
        let g = group("Cyc(2)");
        let gg = GenGraph::new(&g).unwrap();
        let m = graph_metrics(&gg, g.caps()).unwrap();
        assert_eq!(m.vertex_count, 2);
        assert_eq!(m.diameter(), Some(1));
        let trivial = group("Cyc(1)");
        let m = graph_metrics(&GenGraph::new(&trivial).unwrap(), trivial.caps()).unwrap();
        assert_eq!(m.vertex_count, 0);
        assert_eq!(m.diameter(), None);
    }

    #[test]
    fn metrics_cap() {
        let g = ListGraph::new(10, &[]);
        let caps = Caps {
            metrics: 5,
            ..Caps::default()
        };
        assert!(graph_metrics(&g, &caps).is_err());
    }

    #[test]
    fn components_independent_of_workers() {
        let g = group("KleinCp3(3)");
        let gg = GenGraph::new(&g).unwrap();
        let a = par::with_workers(1, || graph_metrics(&gg, g.caps()).unwrap());
        let b = par::with_workers(4, || graph_metrics(&gg, g.caps()).unwrap());
        assert_eq!(a, b);
    }
}
