use std::sync::Arc;

use serde::Serialize;

use super::{ComponentMap, GenGraph, GraphView, Provenance};
use crate::caps::Caps;
use crate::error::Result;
use crate::group::{Elem, Group};

/// `Sigma_2(G)`: ordered generating pairs, adjacent when they differ in
/// exactly one entry.
#[derive(Debug)]
pub struct SwapGraph {
    group: Arc<Group>,
    pairs: Vec<(Elem, Elem)>,
    by_first: Vec<Vec<usize>>,
    by_second: Vec<Vec<usize>>,
}

pub fn swap_graph(gen: &GenGraph) -> Result<SwapGraph> {
    let g = gen.group();
    Caps::check(g.caps().swap, g.order(), "swap graph")?;
    let mut pairs = Vec::new();
    for x in g.elements() {
        for y in g.elements() {
            if gen.is_edge(x, y) || (x == y && g.generates(&[x])) {
                pairs.push((x, y));
            }
        }
    }
    let mut by_first = vec![Vec::new(); g.order()];
    let mut by_second = vec![Vec::new(); g.order()];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        by_first[x as usize].push(i);
        by_second[y as usize].push(i);
    }
    Ok(SwapGraph {
        group: g.clone(),
        pairs,
        by_first,
        by_second,
    })
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Result of comparing the swap-graph partition with the components of
/// `Delta(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapCheck {
    pub pairs: usize,
    pub swap_components: usize,
    pub delta_components: usize,
    /// Delta component containing the entries of each swap component.
    pub refinement: Vec<usize>,
    /// Swap components whose entries meet two Delta components.
    pub violations: Vec<[String; 4]>,
}

impl SwapGraph {
    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    pub fn components(&self) -> ComponentMap {
        let mut parent: Vec<usize> = (0..self.pairs.len()).collect();
        for bucket in self.by_first.iter().chain(&self.by_second) {
            for w in bucket.windows(2) {
                union(&mut parent, w[0], w[1]);
            }
        }
        let labels: Vec<Option<usize>> = (0..self.pairs.len())
            .map(|i| Some(find(&mut parent, i)))
            .collect();
        ComponentMap::from_labels(&labels)
    }

    /// Checks that each swap component projects into one component of
    /// `Delta(G)`, and returns the induced map on components.
    pub fn check_refinement(&self, delta: &ComponentMap) -> SwapCheck {
        let swap = self.components();
        let mut refinement: Vec<Option<usize>> = vec![None; swap.count()];
        let mut violations = Vec::new();
        for (i, &(x, y)) in self.pairs.iter().enumerate() {
            let s = swap.component_of(i).expect("every pair is a vertex");
            let (cx, cy) = (delta.component_of(x as usize), delta.component_of(y as usize));
            let target = refinement[s].get_or_insert(cx.unwrap_or(usize::MAX));
            if cx.is_none() || cx != cy || cx != Some(*target) {
                let (a, b) = self.pairs[swap.representatives()[s]];
                violations.push([
                    self.group.label(a).to_string(),
                    self.group.label(b).to_string(),
                    self.group.label(x).to_string(),
                    self.group.label(y).to_string(),
                ]);
            }
        }
        SwapCheck {
            pairs: self.pairs.len(),
            swap_components: swap.count(),
            delta_components: delta.count(),
            refinement: refinement.into_iter().map(|c| c.unwrap_or(usize::MAX)).collect(),
            violations,
        }
    }
}

impl GraphView for SwapGraph {
    fn domain_size(&self) -> usize {
        self.pairs.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.pairs[u], self.pairs[v]);
        (a.0 == b.0) != (a.1 == b.1)
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        let (x, y) = self.pairs[v];
        let mut out: Vec<usize> = self.by_first[x as usize]
            .iter()
            .chain(&self.by_second[y as usize])
            .copied()
            .filter(|&u| u != v)
            .collect();
        out.sort_unstable();
        out
    }

    fn label(&self, v: usize) -> String {
        let (x, y) = self.pairs[v];
        format!("({}, {})", self.group.label(x), self.group.label(y))
    }

    fn provenance(&self) -> Provenance {
        Provenance::SwapGraph
    }

    fn name(&self) -> Option<String> {
        Some(format!("Sigma2({})", self.group.name()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_metrics;
    use crate::test_support::group;

    #[test]
    fn s4_swap_graph() {
        let g = group("Sym(4)");
        let gen = GenGraph::new(&g).unwrap();
        let sw = swap_graph(&gen).unwrap();
        let brute = g
            .elements()
            .flat_map(|x| g.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| g.generates(&[x, y]))
            .count();
        assert_eq!(sw.pairs().len(), brute);
        assert_eq!(sw.components().count(), 1);
        let m = graph_metrics(&sw, g.caps()).unwrap();
        assert!(m.connected());
        let delta = graph_metrics(&gen, g.caps()).unwrap();
        let check = sw.check_refinement(&delta.components);
        assert!(check.violations.is_empty());
        assert_eq!(check.refinement, vec![0]);
    }

    #[test]
    fn union_find_agrees_with_bfs() {
        for s in ["Cyc(6)", "Dih(4)", "KleinCp3(3)", "Pow(Cyc(2),2)"] {
            let g = group(s);
            let gen = GenGraph::new(&g).unwrap();
            let sw = swap_graph(&gen).unwrap();
            let bfs = graph_metrics(&sw, g.caps()).unwrap();
            assert_eq!(sw.components(), bfs.components, "{s}");
            let delta = graph_metrics(&gen, g.caps()).unwrap();
            assert!(sw.check_refinement(&delta.components).violations.is_empty(), "{s}");
        }
    }

    #[test]
    fn adjacency_means_one_differing_entry() {
        let g = group("Sym(3)");
        let sw = swap_graph(&GenGraph::new(&g).unwrap()).unwrap();
        for u in 0..sw.domain_size() {
            for v in sw.neighbors(u) {
                assert!(sw.adjacent(u, v));
            }
            assert!(!sw.adjacent(u, u));
        }
    }

    #[test]
    fn cap_respected() {
        let caps = Caps {
            swap: 10,
            ..Caps::default()
        };
        let g = crate::group::build_group(&"Sym(4)".parse().unwrap(), &caps).unwrap();
        assert!(swap_graph(&GenGraph::new(&g).unwrap()).is_err());
    }
}
