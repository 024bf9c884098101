//! Tensor products of graphs, lifting coordinate paths to product walks,
//! separation witnesses, and adjacency in direct powers of simple groups.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, GraphView, ListGraph};
use crate::group::{AutClasses, Elem};

/// A walk `v_0, ..., v_m`; consecutive vertices must be adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkCertificate<V> {
    pub start: V,
    pub end: V,
    pub vertices: Vec<V>,
}

impl<V: Clone> WalkCertificate<V> {
    pub fn new(vertices: Vec<V>) -> Self {
        WalkCertificate {
            start: vertices[0].clone(),
            end: vertices[vertices.len() - 1].clone(),
            vertices,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl WalkCertificate<usize> {
    /// Checks every step against the view's adjacency.
    pub fn validate(&self, view: &(impl GraphView + ?Sized)) -> bool {
        self.vertices.first() == Some(&self.start)
            && self.vertices.last() == Some(&self.end)
            && self.vertices.iter().all(|&v| view.is_vertex(v))
            && self.vertices.windows(2).all(|w| view.adjacent(w[0], w[1]))
    }

    pub fn labels(&self, view: &(impl GraphView + ?Sized)) -> Vec<String> {
        self.vertices.iter().map(|&v| view.label(v)).collect()
    }
}

impl WalkCertificate<Vec<usize>> {
    pub fn validate(&self, product: &ProductGraph<'_>) -> bool {
        self.vertices.first() == Some(&self.start)
            && self.vertices.last() == Some(&self.end)
            && self.vertices.iter().all(|t| product.is_vertex_tuple(t))
            && self.vertices.windows(2).all(|w| product.adjacent_tuples(&w[0], &w[1]))
    }

    pub fn labels(&self, product: &ProductGraph<'_>) -> Vec<String> {
        self.vertices.iter().map(|t| product.tuple_label(t)).collect()
    }
}

/// A shortest path between two vertices of a view, if any.
pub fn shortest_path(view: &(impl GraphView + ?Sized), from: usize, to: usize) -> Option<WalkCertificate<usize>> {
    let dist = bfs_distances(view, to);
    let mut d = dist[from]?;
    let mut path = vec![from];
    let mut cur = from;
    while d > 0 {
        cur = view
            .neighbors(cur)
            .into_iter()
            .find(|&u| dist[u] == Some(d - 1))
            .expect("a BFS layer below");
        path.push(cur);
        d -= 1;
    }
    Some(WalkCertificate::new(path))
}

/// Tensor product of factor graphs: tuples adjacent iff every coordinate is.
pub struct ProductGraph<'a> {
    factors: Vec<&'a dyn GraphView>,
}

impl<'a> ProductGraph<'a> {
    pub fn new(factors: Vec<&'a dyn GraphView>) -> ProductGraph<'a> {
        ProductGraph { factors }
    }

    pub fn factors(&self) -> &[&'a dyn GraphView] {
        &self.factors
    }

    pub fn is_vertex_tuple(&self, t: &[usize]) -> bool {
        t.len() == self.factors.len() && self.factors.iter().zip(t).all(|(f, &v)| v < f.domain_size() && f.is_vertex(v))
    }

    pub fn adjacent_tuples(&self, a: &[usize], b: &[usize]) -> bool {
        self.factors
            .iter()
            .zip(a.iter().zip(b))
            .all(|(f, (&x, &y))| f.adjacent(x, y))
    }

    pub fn tuple_label(&self, t: &[usize]) -> String {
        let parts: Vec<String> = self.factors.iter().zip(t).map(|(f, &v)| f.label(v)).collect();
        format!("({})", parts.join(", "))
    }

    /// Number of vertices, if it fits in `usize`.
    pub fn vertex_count(&self) -> Option<usize> {
        self.factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.vertices().len()))
    }

    pub fn neighbors_tuple(&self, t: &[usize]) -> Vec<Vec<usize>> {
        let lists: Vec<Vec<usize>> = self.factors.iter().zip(t).map(|(f, &v)| f.neighbors(v)).collect();
        let mut out = vec![Vec::with_capacity(t.len())];
        for list in &lists {
            let mut next = Vec::with_capacity(out.len() * list.len());
            for prefix in &out {
                for &u in list {
                    let mut p = prefix.clone();
                    p.push(u);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// BFS distances from `source` to every reachable tuple, materializing
    /// tuples on demand.
    pub fn bfs(&self, source: &[usize], caps: &Caps) -> Result<HashMap<Vec<usize>, u32>> {
        let total = self.vertex_count().unwrap_or(usize::MAX);
        Caps::check(caps.product, total, "product graph BFS")?;
        let mut dist = HashMap::new();
        dist.insert(source.to_vec(), 0);
        let mut queue = VecDeque::from([source.to_vec()]);
        while let Some(t) = queue.pop_front() {
            let d = dist[&t];
            for u in self.neighbors_tuple(&t) {
                if !dist.contains_key(&u) {
                    dist.insert(u.clone(), d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }
}

/// Padding of one coordinate path to length exactly `m`.
fn pad_coordinate(f: &dyn GraphView, path: &WalkCertificate<usize>, m: usize) -> Result<Vec<usize>> {
    let mu = path.len();
    let p = &path.vertices;
    if mu == 0 {
        let x = p[0];
        if m == 0 {
            return Ok(vec![x]);
        }
        if m == 1 {
            return Err(Error::Precondition(format!(
                "a coordinate at distance 0 cannot be padded to a walk of length 1 ({} has no loop)",
                f.label(x)
            )));
        }
        let w = f
            .neighbors(x)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Isolated(f.label(x)))?;
        let mut out = vec![x];
        let mut rest = m;
        if m % 2 == 1 {
            let apex = f
                .triangle_apex(w, x)
                .ok_or_else(|| Error::Precondition(format!("edge {} -- {} lies on no triangle", f.label(w), f.label(x))))?;
            out.extend([w, apex, x]);
            rest -= 3;
        }
        for _ in 0..rest / 2 {
            out.extend([w, x]);
        }
        return Ok(out);
    }
    let (prev, last) = (p[mu - 1], p[mu]);
    let apex = if (m - mu) > 0 {
        Some(f.triangle_apex(prev, last).ok_or_else(|| {
            Error::Precondition(format!("edge {} -- {} lies on no triangle", f.label(prev), f.label(last)))
        })?)
    } else {
        None
    };
    let mut out: Vec<usize> = p[..mu].to_vec();
    for i in mu..=m {
        out.push(if (m - i) % 2 == 0 { last } else { apex.expect("padding needs the apex") });
    }
    Ok(out)
}

/// Combines coordinate paths of lengths `mu_n <= m` into a product walk of
/// length exactly `m`, oscillating on a triangle at the end of each short
/// path.
pub fn lift_path(
    factors: &[&dyn GraphView],
    paths: &[WalkCertificate<usize>],
    m: usize,
) -> Result<WalkCertificate<Vec<usize>>> {
    if factors.len() != paths.len() || factors.is_empty() {
        return Err(Error::Precondition("one path per factor is required".into()));
    }
    let mut coords = Vec::with_capacity(paths.len());
    for (f, p) in factors.iter().zip(paths) {
        if p.len() > m {
            return Err(Error::Precondition(format!("coordinate path of length {} exceeds {m}", p.len())));
        }
        if !p.validate(*f) {
            return Err(Error::Precondition("coordinate path is not a walk".into()));
        }
        coords.push(pad_coordinate(*f, p, m)?);
    }
    let vertices = (0..=m).map(|i| coords.iter().map(|c| c[i]).collect()).collect();
    Ok(WalkCertificate::new(vertices))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductDistance {
    /// Coordinate distances; `None` where a coordinate pair is disconnected.
    pub coordinates: Vec<Option<u32>>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub exact: Option<usize>,
    /// Some coordinate pair is disconnected.
    pub infinite: bool,
}

/// Distance bounds in a product: the largest coordinate distance below, the
/// shortest lifted walk above, and BFS when the product is small enough.
pub fn product_distance(p: &ProductGraph<'_>, x: &[usize], y: &[usize], caps: &Caps) -> Result<ProductDistance> {
    let coordinates: Vec<Option<u32>> = p
        .factors()
        .iter()
        .zip(x.iter().zip(y))
        .map(|(f, (&a, &b))| bfs_distances(*f, a)[b])
        .collect();
    if coordinates.iter().any(Option::is_none) {
        return Ok(ProductDistance {
            coordinates,
            lower: None,
            upper: None,
            exact: None,
            infinite: true,
        });
    }
    let mus: Vec<usize> = coordinates.iter().map(|d| d.unwrap() as usize).collect();
    let lower = mus.iter().copied().max().unwrap_or(0);
    let paths: Vec<WalkCertificate<usize>> = p
        .factors()
        .iter()
        .zip(x.iter().zip(y))
        .map(|(f, (&a, &b))| shortest_path(*f, a, b).expect("connected"))
        .collect();
    let upper = (lower..=lower + 2).find(|&m| lift_path(p.factors(), &paths, m).is_ok());
    let exact = match p.bfs(x, caps) {
        Ok(dist) => dist.get(y).map(|&d| d as usize),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ProductDistance {
        coordinates,
        lower: Some(lower),
        upper,
        exact,
        infinite: false,
    })
}

/// Path `0 - 1 - ... - d` with an extra vertex on every edge closing a
/// triangle; diameter `d`.
pub fn path_with_triangles(d: usize) -> ListGraph {
    let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
    for i in 0..d {
        let apex = d + 1 + i;
        edges.push((i, apex));
        edges.push((i + 1, apex));
    }
    ListGraph::new(2 * d + 1, &edges)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparationReport {
    pub taus: Vec<f64>,
    /// `distances[a][n-1] = 1 + floor(n / tau_a)`.
    pub distances: Vec<Vec<u32>>,
    /// Witness vertices per tau and coordinate.
    pub witnesses: Vec<Vec<String>>,
    /// `lower_bounds[a][b]`: largest certified coordinate distance between
    /// the witnesses of `tau_a` and `tau_b`.
    pub lower_bounds: Vec<Vec<u32>>,
    /// Every certified bound was confirmed by BFS.
    pub verified: bool,
}

/// For each `tau`, picks `y_n` at distance exactly `1 + floor(n / tau)`
/// from `x_n` in factor `n` (`n = 1..=k`).
pub fn separation_witnesses(factors: &[&dyn GraphView], x: &[usize], taus: &[f64], k: usize) -> Result<SeparationReport> {
    if factors.len() < k || x.len() < k {
        return Err(Error::Precondition(format!("need {k} factors and base coordinates")));
    }
    if let Some(t) = taus.iter().find(|&&t| t.is_nan() || t <= 1.0) {
        return Err(Error::Precondition(format!("tau = {t} is not greater than 1")));
    }
    let target = |tau: f64, n: usize| 1 + (n as f64 / tau).floor() as u32;
    let from_x: Vec<Vec<Option<u32>>> = (0..k).map(|i| bfs_distances(factors[i], x[i])).collect();
    let mut distances = Vec::new();
    let mut chosen = Vec::new();
    for &tau in taus {
        let mut row = Vec::new();
        let mut picks = Vec::new();
        for n in 1..=k {
            let d = target(tau, n);
            let y = from_x[n - 1].iter().position(|&e| e == Some(d)).ok_or_else(|| {
                let ecc = from_x[n - 1].iter().flatten().max().copied().unwrap_or(0);
                Error::Precondition(format!(
                    "factor {n}: eccentricity {ecc} of the base vertex is below the required distance {d} (tau = {tau})"
                ))
            })?;
            row.push(d);
            picks.push(y);
        }
        distances.push(row);
        chosen.push(picks);
    }
    let mut verified = true;
    let mut lower_bounds = vec![vec![0u32; taus.len()]; taus.len()];
    for a in 0..taus.len() {
        for b in 0..taus.len() {
            let mut best = 0;
            for n in 1..=k {
                let bound = distances[a][n - 1].abs_diff(distances[b][n - 1]);
                best = best.max(bound);
                let actual = bfs_distances(factors[n - 1], chosen[a][n - 1])[chosen[b][n - 1]];
                if actual.is_none_or(|d| d < bound) {
                    verified = false;
                }
            }
            lower_bounds[a][b] = best;
        }
    }
    Ok(SeparationReport {
        taus: taus.to_vec(),
        witnesses: chosen
            .iter()
            .map(|picks| picks.iter().enumerate().map(|(i, &y)| factors[i].label(y)).collect())
            .collect(),
        distances,
        lower_bounds,
        verified,
    })
}

/// Adjacency in `Gamma(S^delta)` for a nonabelian simple `S`: every
/// coordinate pair generates `S` and no two are automorphism-equivalent.
pub fn power_adjacent(classes: &AutClasses, delta: usize, x: &[Elem], y: &[Elem]) -> Result<bool> {
    if x.len() != delta || y.len() != delta {
        return Err(Error::Precondition(format!("tuples must have length {delta}")));
    }
    let mut seen = Vec::with_capacity(delta);
    for (&a, &b) in x.iter().zip(y) {
        match classes.class_of(a, b) {
            None => return Ok(false),
            Some(c) if seen.contains(&c) => return Ok(false),
            Some(c) => seen.push(c),
        }
    }
    Ok(true)
}

/// A vertex agreeing with `y` on the first `m` coordinates and with `x`
/// elsewhere, with a walk from `x` to it.
pub fn density_probe(
    p: &ProductGraph<'_>,
    x: &[usize],
    y: &[usize],
    m: usize,
) -> Result<(Vec<usize>, WalkCertificate<Vec<usize>>)> {
    if m > x.len() {
        return Err(Error::Precondition(format!("prefix {m} is longer than the tuple")));
    }
    let mut paths = Vec::new();
    for (n, f) in p.factors().iter().enumerate() {
        let target = if n < m { y[n] } else { x[n] };
        let path = shortest_path(*f, x[n], target).ok_or_else(|| {
            Error::Precondition(format!(
                "coordinate {}: {} and {} lie in different components",
                n + 1,
                f.label(x[n]),
                f.label(target)
            ))
        })?;
        paths.push(path);
    }
    let splice: Vec<usize> = paths.iter().map(|p| p.end).collect();
    let longest = paths.iter().map(WalkCertificate::len).max().unwrap_or(0);
    if longest == 0 {
        return Ok((splice.clone(), WalkCertificate::new(vec![splice])));
    }
    let walk = (longest..=longest + 1)
        .find_map(|len| lift_path(p.factors(), &paths, len).ok())
        .ok_or_else(|| Error::Internal("no lifted walk to the splice".into()))?;
    Ok((splice, walk))
}
