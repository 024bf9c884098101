use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{GraphView, Provenance};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Elem, Group};
use crate::par;

/// Whether `x` and `y` are distinct and generate `g`.
pub fn adjacent(g: &Group, x: Elem, y: Elem) -> bool {
    x != y && g.generates(&[x, y])
}

/// `V(G)`, the non-isolated vertices of the generating graph.
pub fn non_isolated(g: &Arc<Group>) -> Result<Vec<Elem>> {
    Ok(GenGraph::new(g)?.vertices().to_vec())
}

/// Number of neighbours of `v`, by direct scan.
pub fn degree(g: &Group, v: Elem) -> usize {
    g.elements().filter(|&y| adjacent(g, v, y)).count()
}

/// The neighbourhood of a vertex computed twice: by scanning closures, and
/// as the complement of the maximal subgroups containing the vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighborhood {
    pub direct: Vec<Elem>,
    /// `None` when maximal subgroups are beyond the enumeration cap.
    pub via_maximal: Option<Vec<Elem>>,
}

pub fn neighborhood(g: &Group, v: Elem) -> Result<Neighborhood> {
    let direct: Vec<Elem> = g.elements().filter(|&y| adjacent(g, v, y)).collect();
    let via_maximal = match g.maximal_subgroups() {
        Ok(maximal) => {
            let mut covered = FixedBitSet::with_capacity(g.order());
            covered.insert(v as usize);
            for m in maximal.iter().filter(|m| m.contains(v)) {
                covered.union_with(m.members());
            }
            covered.toggle_range(..);
            Some(covered.ones().map(|y| y as Elem).collect::<Vec<_>>())
        }
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(b) = &via_maximal {
        if *b != direct {
            return Err(Error::Internal(format!(
                "neighbourhoods of {} disagree in {}",
                g.label(v),
                g.name()
            )));
        }
    }
    Ok(Neighborhood {
        direct,
        via_maximal,
    })
}

/// The generating graph with every adjacency row materialized.
///
/// Rows are computed only for conjugacy class representatives and carried
/// to the rest of each class by conjugation, which is a graph automorphism.
/// As a [`GraphView`] it is `Delta(G)`: isolated elements are not vertices.
pub struct GenGraph {
    group: Arc<Group>,
    rows: Vec<FixedBitSet>,
    vertices: Vec<Elem>,
    classes: Arc<ConjugacyClasses>,
}

impl std::fmt::Debug for GenGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenGraph")
            .field("group", &self.group.name())
            .field("vertices", &self.vertices.len())
            .finish()
    }
}

impl GenGraph {
    pub fn new(g: &Arc<Group>) -> Result<GenGraph> {
        Caps::check(g.caps().metrics, g.order(), "generating graph")?;
        let classes = g.conjugacy_classes();
        let rep_rows = par::map(classes.reps(), |&r| representative_row(g, r));
        let n = g.order();
        let mut rows: Vec<Option<FixedBitSet>> = vec![None; n];
        for (&r, row) in classes.reps().iter().zip(rep_rows) {
            rows[r as usize] = Some(row);
        }
        let mut conj: HashMap<Elem, Vec<Elem>> = HashMap::new();
        for &v in classes.discovery_order() {
            let Some((parent, s)) = classes.step(v) else {
                continue;
            };
            let perm = conj
                .entry(s)
                .or_insert_with(|| g.elements().map(|y| g.conj(y, s)).collect());
            let src = rows[parent as usize].as_ref().expect("parent row precedes child");
            let mut row = FixedBitSet::with_capacity(n);
            for y in src.ones() {
                row.insert(perm[y] as usize);
            }
            rows[v as usize] = Some(row);
        }
        let rows: Vec<FixedBitSet> = rows
            .into_iter()
            .map(|r| r.expect("every element is reached"))
            .collect();
        let vertices = g
            .elements()
            .filter(|&x| !rows[x as usize].is_clear())
            .collect();
        Ok(GenGraph {
            group: g.clone(),
            rows,
            vertices,
            classes,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn row(&self, x: Elem) -> &FixedBitSet {
        &self.rows[x as usize]
    }

    pub fn is_edge(&self, x: Elem, y: Elem) -> bool {
        self.rows[x as usize].contains(y as usize)
    }

    pub fn neighbors_of(&self, x: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.rows[x as usize].ones().map(|y| y as Elem)
    }

    pub fn degree(&self, x: Elem) -> usize {
        self.rows[x as usize].count_ones(..)
    }

    pub fn is_isolated(&self, x: Elem) -> bool {
        self.rows[x as usize].is_clear()
    }

    /// `V(G)` in index order.
    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn isolated(&self) -> Vec<Elem> {
        self.group.elements().filter(|&x| self.is_isolated(x)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `u -- v` (with `u < v`) for which `u v` is not adjacent to both
    /// ends, and likewise `v u`.
    pub fn triangle_failures(&self) -> Vec<(Elem, Elem)> {
        let g = &self.group;
        let mut out = Vec::new();
        for &u in &self.vertices {
            for v in self.neighbors_of(u).filter(|&v| v > u) {
                let closes = |p: Elem| self.is_edge(p, u) && self.is_edge(p, v);
                if !closes(g.mul(u, v)) || !closes(g.mul(v, u)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The full generating graph `Gamma(G)`, isolated vertices included.
    pub fn gamma(&self) -> Gamma<'_> {
        Gamma(self)
    }
}

/// Row of a class representative. Each undecided `y` costs one closure;
/// a generating `y` decides its orbit under maps preserving `<x, y> = G`,
/// a non-generating one decides all of `<x, y>`.
fn representative_row(g: &Group, x: Elem) -> FixedBitSet {
    let n = g.order();
    let mut row = FixedBitSet::with_capacity(n);
    let mut decided = FixedBitSet::with_capacity(n);
    decided.insert(x as usize);
    if n == 1 {
        return row;
    }
    let base = g.span(&[x]);
    let cent = g.centralizer(x).generators().to_vec();
    let mut stack = Vec::new();
    for y in g.elements() {
        if decided.contains(y as usize) {
            continue;
        }
        let span = g.span_extend(&base, &[x], &[y], n / 2);
        if span.len() > n / 2 {
            decided.insert(y as usize);
            row.insert(y as usize);
            stack.push(y);
            while let Some(z) = stack.pop() {
                let images = [g.mul(x, z), g.mul(z, x), g.inv(z)]
                    .into_iter()
                    .chain(cent.iter().map(|&c| g.conj(z, c)));
                for w in images {
                    if !decided.put(w as usize) {
                        row.insert(w as usize);
                        stack.push(w);
                    }
                }
            }
        } else {
            decided.extend(span.list.iter().map(|&z| z as usize));
        }
    }
    row
}

impl GraphView for GenGraph {
    fn domain_size(&self) -> usize {
        self.group.order()
    }

    fn is_vertex(&self, v: usize) -> bool {
        !self.rows[v].is_clear()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.rows[v].ones().collect()
    }

    fn neighbor_bits(&self, v: usize) -> Option<&FixedBitSet> {
        Some(&self.rows[v])
    }

    /// The product `u v` when it closes a triangle, which it does unless
    /// the edge passes through the identity.
    fn triangle_apex(&self, u: usize, v: usize) -> Option<usize> {
        let p = self.group.mul(u as Elem, v as Elem) as usize;
        if self.rows[p].contains(u) && self.rows[p].contains(v) {
            return Some(p);
        }
        self.rows[u].ones().find(|&w| self.rows[v].contains(w))
    }

    fn label(&self, v: usize) -> String {
        self.group.label(v as Elem).to_string()
    }

    fn provenance(&self) -> Provenance {
        Provenance::GeneratingGraph
    }

    fn symmetry_rep(&self, v: usize) -> usize {
        self.classes.rep_of(v as Elem) as usize
    }

    fn name(&self) -> Option<String> {
        Some(self.group.name().to_string())
    }

    fn excluded(&self) -> Option<Vec<usize>> {
        Some(self.isolated().into_iter().map(|x| x as usize).collect())
    }

    fn vertices(&self) -> Vec<usize> {
        self.vertices.iter().map(|&x| x as usize).collect()
    }
}

/// `Gamma(G)`: every element is a vertex.
#[derive(Debug, Clone, Copy)]
pub struct Gamma<'a>(&'a GenGraph);

impl GraphView for Gamma<'_> {
    fn domain_size(&self) -> usize {
        self.0.domain_size()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.0.adjacent(u, v)
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.0.neighbors(v)
    }

    fn neighbor_bits(&self, v: usize) -> Option<&FixedBitSet> {
        self.0.neighbor_bits(v)
    }

    fn triangle_apex(&self, u: usize, v: usize) -> Option<usize> {
        self.0.triangle_apex(u, v)
    }

    fn label(&self, v: usize) -> String {
        self.0.label(v)
    }

    fn provenance(&self) -> Provenance {
        Provenance::GeneratingGraph
    }

    fn symmetry_rep(&self, v: usize) -> usize {
        self.0.symmetry_rep(v)
    }

    fn name(&self) -> Option<String> {
        self.0.name()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::group;

    /// Oracle: one closure per unordered pair.
    fn brute_rows(g: &Group) -> Vec<Vec<Elem>> {
        g.elements()
            .map(|x| {
                g.elements()
                    .filter(|&y| x != y && g.closure(&[x, y]).order() == g.order())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rows_match_brute_force() {
        for s in ["Sym(4)", "Alt(4)", "Dih(6)", "Cyc(12)", "Cyc(1)", "Cyc(2)", "KleinCp3(3)", "Pow(Cyc(2),2)", "Dir(Sym(3),Cyc(4))", "SL2(4)"] {
            let g = group(s);
            let gg = GenGraph::new(&g).unwrap();
            let brute = brute_rows(&g);
            for x in g.elements() {
                assert_eq!(gg.neighbors_of(x).collect::<Vec<_>>(), brute[x as usize], "{s} at {}", g.label(x));
            }
        }
    }

    #[test]
    fn adjacency_examples() {
        let g = group("Sym(4)");
        let t = g.element("(12)").unwrap();
        let c = g.element("(1234)").unwrap();
        let k = g.element("(12)(34)").unwrap();
        assert!(adjacent(&g, t, c));
        assert!(g.elements().all(|y| !adjacent(&g, k, y)));
        assert!(g.elements().all(|y| !adjacent(&g, 0, y)));
        assert!(!adjacent(&g, c, c));
        let c5 = group("Cyc(5)");
        assert!(!adjacent(&c5, 1, 1));
    }

    #[test]
    fn isolated_vertices_of_s4_are_the_klein_group() {
        let g = group("Sym(4)");
        let gg = GenGraph::new(&g).unwrap();
        let labels: Vec<&str> = gg.isolated().iter().map(|&x| g.label(x)).collect();
        assert_eq!(labels.len(), 4);
        for l in ["()", "(12)(34)", "(13)(24)", "(14)(23)"] {
            assert!(labels.contains(&l), "{l}");
        }
        assert_eq!(gg.vertices().len(), 20);
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(non_isolated(&group("SL2(4)")).unwrap().len(), 59);
        assert_eq!(non_isolated(&group("KleinCp3(3)")).unwrap().len(), 54);
        // the identity and the generator of Cyc(2) generate it
        assert_eq!(non_isolated(&group("Cyc(2)")).unwrap().len(), 2);
        assert!(non_isolated(&group("Cyc(1)")).unwrap().is_empty());
    }

    #[test]
    fn neighborhood_two_ways() {
        let g = group("Sym(4)");
        let c = g.element("(1234)").unwrap();
        let nb = neighborhood(&g, c).unwrap();
        // the only maximal subgroup containing a 4-cycle is its D8
        assert_eq!(nb.direct.len(), 16);
        assert_eq!(nb.via_maximal.as_ref(), Some(&nb.direct));
        assert_eq!(degree(&g, c), 16);
        assert!(neighborhood(&g, 0).unwrap().direct.is_empty());
        for s in ["Sym(4)", "SL2(4)", "Cyc(6)", "Dih(5)", "KleinCp3(3)", "Cyc(1)"] {
            let g = group(s);
            for v in g.elements() {
                neighborhood(&g, v).unwrap();
            }
        }
        let sl = group("SL2(4)");
        let five = sl.elements().find(|&x| sl.element_order(x) == 5).unwrap();
        assert!(!neighborhood(&sl, five).unwrap().direct.is_empty());
    }

    #[test]
    fn degrees_in_s4_respect_chief_bound() {
        let g = group("Sym(4)");
        let gg = GenGraph::new(&g).unwrap();
        assert!(gg.vertices().iter().all(|&v| gg.degree(v) >= 2));
        assert_eq!(gg.degree(0), 0);
    }

    #[test]
    fn symmetric_and_irreflexive() {
        for s in ["Sym(4)", "KleinCp3(3)", "Dih(7)", "SL2(8)"] {
            let g = group(s);
            let gg = GenGraph::new(&g).unwrap();
            for x in g.elements() {
                assert!(!gg.is_edge(x, x));
                for y in gg.neighbors_of(x) {
                    assert!(gg.is_edge(y, x));
                }
            }
        }
    }

    #[test]
    fn rows_agree_with_oracle_on_samples() {
        use rand::{Rng, SeedableRng};
        let g = group("SL2(8)");
        let gg = GenGraph::new(&g).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let x = rng.random_range(0..g.order() as Elem);
            let y = rng.random_range(0..g.order() as Elem);
            assert_eq!(gg.is_edge(x, y), adjacent(&g, x, y));
        }
    }

    #[test]
    fn edge_pair_accounting() {
        let g = group("SL2(4)");
        let gg = GenGraph::new(&g).unwrap();
        assert_eq!(gg.edge_count(), 1140);
        let s4 = group("Sym(4)");
        let gg = GenGraph::new(&s4).unwrap();
        let ordered = s4
            .elements()
            .flat_map(|x| s4.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && s4.generates(&[x, y]))
            .count();
        assert_eq!(2 * gg.edge_count(), ordered);
    }

    #[test]
    fn triangles_fail_only_through_the_identity() {
        for s in ["Sym(4)", "SL2(4)", "KleinCp3(3)", "Dih(5)"] {
            let gg = GenGraph::new(&group(s)).unwrap();
            assert!(gg.triangle_failures().is_empty(), "{s}");
        }
        let g = group("Cyc(6)");
        let gg = GenGraph::new(&g).unwrap();
        let expected: Vec<(Elem, Elem)> = g.elements().filter(|&x| g.generates(&[x])).map(|x| (0, x)).collect();
        assert_eq!(gg.triangle_failures(), expected);
    }

    #[test]
    fn quotient_maps_edges_to_edges_or_loops() {
        let g = group("Sym(4)");
        let gg = GenGraph::new(&g).unwrap();
        for n in g.normal_subgroups().iter() {
            let q = crate::group::Quotient::new(&g, n).unwrap();
            for &x in gg.vertices() {
                for y in gg.neighbors_of(x) {
                    let (a, b) = (q.projection[x as usize], q.projection[y as usize]);
                    assert!(q.group.generates(&[a, b]));
                }
            }
        }
    }
}
