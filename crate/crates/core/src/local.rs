//! Generation counts localized along a chief series: `phi_{G,N}(X, k)`, the
//! product formula for degrees, the chief-length degree bound, the lift of
//! generating pairs through a subgroup, and the diameter-two criterion.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{graph_metrics, GenGraph};
use crate::group::{ChiefSeries, Elem, Group, Quotient, Subgroup};
use crate::par;

fn as_string<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub(crate) fn ser_opt_ratio<S: serde::Serializer>(r: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Number of tuples `(r_1 n_1, ..., r_k n_k)`, `n_i` in `n`, that generate
/// `g` together with `x`.
pub fn phi_count(g: &Group, n: &Subgroup, x: &[Elem], k: usize, reps: &[Elem]) -> Result<u64> {
    if reps.len() != k {
        return Err(Error::Precondition(format!("expected {k} coset representatives, got {}", reps.len())));
    }
    if !n.is_normal() {
        return Err(Error::Precondition("subgroup is not normal".into()));
    }
    let mut modulo: Vec<Elem> = reps.iter().chain(x).copied().collect();
    modulo.extend_from_slice(n.generators());
    if !g.generates(&modulo) {
        return Err(Error::Precondition(
            "representatives do not generate modulo the normal subgroup".into(),
        ));
    }
    if k < g.d_rel(x) {
        return Err(Error::Precondition(format!("k = {k} is below d_X(G)")));
    }
    let kernel: Vec<Elem> = n.elements().collect();
    let mut count = 0;
    let mut tuple = vec![0usize; k];
    let mut gens: Vec<Elem> = x.to_vec();
    gens.extend_from_slice(reps);
    loop {
        for i in 0..k {
            gens[x.len() + i] = g.mul(reps[i], kernel[tuple[i]]);
        }
        if g.generates(&gens) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(count);
            }
            tuple[i] += 1;
            if tuple[i] < kernel.len() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// One factor of a degree factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalCount {
    pub stage: usize,
    pub factor_order: usize,
    pub phi: u64,
    /// `phi / factor_order`.
    #[serde(serialize_with = "as_string")]
    pub probability: BigRational,
}

/// Some neighbour of `v`, or the isolated-vertex error.
fn some_neighbor(gen: &GenGraph, v: Elem) -> Result<Elem> {
    gen.neighbors_of(v)
        .next()
        .ok_or_else(|| Error::Isolated(gen.group().label(v).to_string()))
}

fn stage_count(gen: &GenGraph, series: &ChiefSeries, v: Elem, y: Elem, stage: usize) -> LocalCount {
    let g = gen.group();
    let q = series.level(g, stage - 1);
    let (vb, yb) = (series.project(stage - 1, v), series.project(stage - 1, y));
    let kernel = series.stage_kernel(stage);
    let phi = kernel
        .elements()
        .filter(|&n| q.generates(&[vb, q.mul(yb, n)]))
        .count() as u64;
    LocalCount {
        stage,
        factor_order: kernel.order(),
        phi,
        probability: BigRational::new(BigInt::from(phi), BigInt::from(kernel.order())),
    }
}

/// `delta_{G/N_(i-1), N_i/N_(i-1)}(v)`, counted over the coset of the image
/// of one fixed neighbour of `v`.
pub fn local_degree(gen: &GenGraph, series: &ChiefSeries, v: Elem, stage: usize) -> Result<LocalCount> {
    if stage == 0 || stage > series.length() {
        return Err(Error::Precondition(format!("no stage {stage} in a series of length {}", series.length())));
    }
    let y = some_neighbor(gen, v)?;
    Ok(stage_count(gen, series, v, y, stage))
}

/// Stage degrees of a vertex against its directly computed degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeFactorization {
    pub vertex: String,
    pub stages: Vec<LocalCount>,
    pub product: u64,
    /// Neighbours in the simple graph.
    pub direct_degree: u64,
    /// `<v> = G`, so `v` also generates with itself; the stage counts
    /// include that pair while the simple graph has no loop.
    pub loop_at_vertex: bool,
    pub matches: bool,
}

pub fn degree_factorization(gen: &GenGraph, series: &ChiefSeries, v: Elem) -> Result<DegreeFactorization> {
    let g = gen.group();
    let y = some_neighbor(gen, v)?;
    let stages: Vec<LocalCount> = (1..=series.length())
        .map(|i| stage_count(gen, series, v, y, i))
        .collect();
    let product = stages.iter().map(|s| s.phi).product();
    let direct_degree = gen.degree(v) as u64;
    let loop_at_vertex = g.generates(&[v]);
    Ok(DegreeFactorization {
        vertex: g.label(v).to_string(),
        stages,
        product,
        direct_degree,
        loop_at_vertex,
        matches: product == direct_degree + loop_at_vertex as u64,
    })
}

/// Factorizations of every vertex of `Delta(G)`, in index order.
pub fn factorize_all(gen: &GenGraph, series: &ChiefSeries) -> Result<Vec<DegreeFactorization>> {
    par::map(gen.vertices(), |&v| degree_factorization(gen, series, v))
        .into_iter()
        .collect()
}

/// `max(1, 2^(t-2))`.
pub fn chief_bound(t: usize) -> u64 {
    if t < 2 {
        1
    } else {
        1u64 << (t - 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBoundReport {
    pub group: String,
    pub t: usize,
    pub bound: u64,
    pub vertex_count: usize,
    pub min_degree: Option<u64>,
    pub slack: Option<i64>,
    /// Vertices whose degree is below the bound.
    pub violations: Vec<String>,
    pub non_frattini_order_two: usize,
}

impl DegreeBoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.non_frattini_order_two <= 2
    }
}

/// Checks `deg(v) >= max(1, 2^(t-2))` on `V(G)` and that at most two
/// complemented chief factors have order 2.
pub fn verify_degree_bound(gen: &GenGraph, series: &ChiefSeries) -> Result<DegreeBoundReport> {
    let g = gen.group();
    // an edge already witnesses 2-generation
    if gen.vertices().is_empty() && g.d_rel(&[]) > 2 {
        return Err(Error::Precondition(format!("{} is not 2-generated", g.name())));
    }
    let t = series.length();
    let bound = chief_bound(t);
    let degrees: Vec<u64> = gen.vertices().iter().map(|&v| gen.degree(v) as u64).collect();
    let min_degree = degrees.iter().copied().min();
    Ok(DegreeBoundReport {
        group: g.name().to_string(),
        t,
        bound,
        vertex_count: degrees.len(),
        min_degree,
        slack: min_degree.map(|m| m as i64 - bound as i64),
        violations: gen
            .vertices()
            .iter()
            .zip(&degrees)
            .filter(|(_, &d)| d < bound)
            .map(|(&v, _)| g.label(v).to_string())
            .collect(),
        non_frattini_order_two: series.non_frattini_order_two(),
    })
}

/// First `m` in `m_sub` (index order) with `<v, x m> = G`.
///
/// Fails with [`Error::Precondition`] unless `<v, x> M = G`, and with
/// [`Error::Falsified`] if no such `m` exists.
pub fn gaschutz_lift(g: &Group, m_sub: &Subgroup, v: Elem, x: Elem) -> Result<Elem> {
    let h = g.closure(&[v, x]);
    let product = h.order() * m_sub.order() / h.intersection(g, m_sub).order();
    if product != g.order() {
        return Err(Error::Precondition(format!(
            "<{}, {}>M has {product} elements, not {}",
            g.label(v),
            g.label(x),
            g.order()
        )));
    }
    m_sub
        .elements()
        .find(|&m| g.generates(&[v, g.mul(x, m)]))
        .ok_or_else(|| {
            if !(0..g.order() as Elem).any(|y| y != v && g.generates(&[v, y])) {
                return Error::Isolated(g.label(v).to_string());
            }
            Error::Falsified(format!(
                "no m in the subgroup of order {} with <{}, {} m> = {}",
                m_sub.order(),
                g.label(v),
                g.label(x),
                g.name()
            ))
        })
}

/// For a nonabelian minimal normal `n` and an edge `v -- x`: some
/// `1 != m` in `n` commuting with `v` such that `x^m != x` is again a
/// neighbour of `v`.
pub fn nonabelian_witness(g: &Group, n: &Subgroup, v: Elem, x: Elem) -> Option<Elem> {
    n.elements().skip(1).find(|&m| {
        let xm = g.conj(x, m);
        g.mul(v, m) == g.mul(m, v) && xm != x && g.generates(&[v, xm])
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diam2Report {
    pub group: String,
    /// Every complemented chief factor with nontrivial action has
    /// `|End_G| > 2`.
    pub hypothesis: bool,
    /// `(order, q)` of the complemented factors with nontrivial action.
    pub factors: Vec<(usize, u64)>,
    pub connected: bool,
    pub diameter: Option<u32>,
}

impl Diam2Report {
    /// The hypothesis implies diameter at most 2.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || (self.connected && self.diameter.is_some_and(|d| d <= 2))
    }
}

pub fn diam2_criterion(gen: &GenGraph, series: &ChiefSeries) -> Result<Diam2Report> {
    let g = gen.group();
    if !series.is_soluble() {
        return Err(Error::Precondition(format!("{} is not soluble", g.name())));
    }
    let factors: Vec<(usize, u64)> = series
        .factors()
        .iter()
        .filter(|f| !f.frattini && !f.central)
        .map(|f| (f.order, f.endo.map_or(0, |e| e.q)))
        .collect();
    let metrics = graph_metrics(gen, g.caps())?;
    Ok(Diam2Report {
        group: g.name().to_string(),
        hypothesis: factors.iter().all(|&(_, q)| q > 2),
        factors,
        connected: metrics.connected(),
        diameter: metrics.diameter(),
    })
}

/// Outcome of the exhaustive check that `phi_{G,N}(X, k)` does not depend
/// on the representatives.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub group: String,
    /// `(N, X, k)` combinations examined.
    pub cases: usize,
    /// Coset tuples examined across all cases.
    pub coset_tuples: usize,
    pub violations: Vec<String>,
}

/// For every normal `N`, `X` empty or a single class representative, and
/// `d_X(G) <= k <= max_k` (with `max_k <= 2`): `phi` takes one positive
/// value on all coset tuples that generate with `X` modulo `N`.
pub fn phi_independence(g: &Arc<Group>, max_k: usize) -> Result<IndependenceReport> {
    if max_k > 2 {
        return Err(Error::Unsupported("phi independence is implemented for k <= 2".into()));
    }
    let n = g.order();
    let classes = g.conjugacy_classes();
    let mut xs: Vec<Vec<Elem>> = vec![Vec::new()];
    xs.extend(classes.reps().iter().skip(1).map(|&r| vec![r]));
    let normals = g.normal_subgroups();
    let quotients: Vec<Quotient> = normals
        .iter()
        .map(|ns| Quotient::new(g, ns))
        .collect::<Result<_>>()?;
    let per_x = par::map(&xs, |x| {
        let mut report = IndependenceReport::default();
        let d = g.d_rel(x);
        let with_x = |extra: &[Elem]| {
            let mut gens = x.clone();
            gens.extend_from_slice(extra);
            gens
        };
        let single: Vec<bool> = g.elements().map(|a| g.generates(&with_x(&[a]))).collect();
        let pairs: Vec<bool> = if max_k >= 2 && d <= 2 {
            let mut t = vec![false; n * n];
            for a in 0..n {
                for b in a..n {
                    let v = g.generates(&with_x(&[a as Elem, b as Elem]));
                    t[a * n + b] = v;
                    t[b * n + a] = v;
                }
            }
            t
        } else {
            Vec::new()
        };
        for (ns, q) in normals.iter().zip(&quotients) {
            let m = q.group.order();
            let xbar: Vec<Elem> = x.iter().map(|&e| q.projection[e as usize]).collect();
            let qgen = |extra: &[Elem]| {
                let mut gens = xbar.clone();
                gens.extend_from_slice(extra);
                q.group.generates(&gens)
            };
            let describe = |k: usize| {
                let xs: Vec<&str> = x.iter().map(|&e| g.label(e)).collect();
                format!("N of order {}, X = {{{}}}, k = {k}", ns.order(), xs.join(", "))
            };
            if d <= 1 {
                let mut sums = vec![0u64; m];
                for a in 0..n {
                    sums[q.projection[a] as usize] += single[a] as u64;
                }
                let values: Vec<u64> = (0..m as Elem).filter(|&c| qgen(&[c])).map(|c| sums[c as usize]).collect();
                report.cases += 1;
                report.coset_tuples += values.len();
                check_constant(&values, || describe(1), &mut report.violations);
            }
            if max_k >= 2 && d <= 2 {
                let mut sums = vec![0u64; m * m];
                for a in 0..n {
                    let ca = q.projection[a] as usize;
                    for b in 0..n {
                        if pairs[a * n + b] {
                            sums[ca * m + q.projection[b] as usize] += 1;
                        }
                    }
                }
                let mut values = Vec::new();
                for ca in 0..m as Elem {
                    for cb in 0..m as Elem {
                        if qgen(&[ca, cb]) {
                            values.push(sums[ca as usize * m + cb as usize]);
                        }
                    }
                }
                report.cases += 1;
                report.coset_tuples += values.len();
                check_constant(&values, || describe(2), &mut report.violations);
            }
        }
        report
    });
    let mut report = IndependenceReport {
        group: g.name().to_string(),
        ..Default::default()
    };
    for r in per_x {
        report.cases += r.cases;
        report.coset_tuples += r.coset_tuples;
        report.violations.extend(r.violations);
    }
    Ok(report)
}

fn check_constant(values: &[u64], describe: impl Fn() -> String, out: &mut Vec<String>) {
    let (Some(&lo), Some(&hi)) = (values.iter().min(), values.iter().max()) else {
        return;
    };
    if lo != hi {
        out.push(format!("{}: phi ranges over {lo}..={hi}", describe()));
    } else if lo == 0 {
        out.push(format!("{}: no generating lift exists", describe()));
    }
}

/// CSV rendering of degree factorizations: vertex, degree, t, bound, one
/// column per stage, product, match.
pub fn factorization_csv(t: usize, rows: &[DegreeFactorization]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["vertex".to_string(), "degree".into(), "t".into(), "bound".into()];
    header.extend((1..=t).map(|i| format!("stage_{i}")));
    header.extend(["product".to_string(), "match".into()]);
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(&header).map_err(io)?;
    for r in rows {
        let mut rec = vec![
            r.vertex.clone(),
            r.direct_degree.to_string(),
            t.to_string(),
            chief_bound(t).to_string(),
        ];
        rec.extend(r.stages.iter().map(|s| s.phi.to_string()));
        rec.extend([r.product.to_string(), r.matches.to_string()]);
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::group;

    fn setup(s: &str) -> (Arc<Group>, GenGraph, ChiefSeries) {
        let g = group(s);
        let gen = GenGraph::new(&g).unwrap();
        let series = g.chief_series().unwrap();
        (g, gen, series)
    }

    #[test]
    fn phi_examples() {
        let g = group("Sym(4)");
        let v4 = g.minimal_normal_subgroups()[0].clone();
        let c = g.element("(1234)").unwrap();
        let t = g.element("(12)").unwrap();
        // oracle: scan the coset (12)V4 directly
        let scan = v4.elements().filter(|&n| g.generates(&[c, g.mul(t, n)])).count() as u64;
        let phi = phi_count(&g, &v4, &[c], 1, &[t]).unwrap();
        assert_eq!(phi, scan);
        assert!(phi > 0);
        let trivial = Subgroup::trivial(&g);
        assert!(phi_count(&g, &trivial, &[c], 1, &[t]).unwrap() <= 1);
        // (12)(34) lies in V4 with (1234)^2 ... the pair cannot reach S4 mod V4
        let k = g.element("(13)(24)").unwrap();
        assert!(matches!(phi_count(&g, &v4, &[c], 1, &[k]), Err(Error::Precondition(_))));
        assert!(phi_count(&g, &v4, &[], 1, &[t]).is_err());
    }

    #[test]
    fn s4_factorization() {
        let (g, gen, series) = setup("Sym(4)");
        let c = g.element("(1234)").unwrap();
        let f = degree_factorization(&gen, &series, c).unwrap();
        assert_eq!(f.stages.len(), 3);
        assert_eq!(f.direct_degree, 16);
        assert_eq!(f.product, 16);
        assert!(f.matches);
        // V4 stage: (q, r) = (2, 2), bound q^(r-1)(q-1) = 2
        assert!(f.stages[0].phi >= 2);
        assert!(matches!(degree_factorization(&gen, &series, 0), Err(Error::Isolated(_))));
    }

    #[test]
    fn product_formula_on_small_groups() {
        for s in ["SL2(4)", "KleinCp3(3)", "Dih(6)", "Cyc(12)", "Cyc(2)", "Dir(Sym(3),Cyc(4))", "Alt(4)"] {
            let (_, gen, series) = setup(s);
            for f in factorize_all(&gen, &series).unwrap() {
                assert!(f.matches, "{s}: {f:?}");
            }
        }
        let (_, gen, series) = setup("SL2(4)");
        let f = factorize_all(&gen, &series).unwrap();
        assert!(f.iter().all(|f| f.stages.len() == 1));
    }

    #[test]
    fn cyclic_generators_count_their_loop() {
        let (g, gen, series) = setup("Cyc(5)");
        let f = degree_factorization(&gen, &series, 1).unwrap();
        assert!(f.loop_at_vertex);
        assert_eq!(f.direct_degree, 4);
        assert_eq!(f.product, 5);
        assert!(f.matches);
        assert_eq!(g.order(), 5);
    }

    /// Frattini stages have local degree |N|; complemented abelian stages
    /// reach q^(r-1)(q-1).
    #[test]
    fn local_bounds() {
        for s in ["Sym(4)", "Cyc(8)", "Dih(4)", "KleinCp3(3)", "Dir(Cyc(4),Cyc(3))", "Alt(4)", "Dih(8)"] {
            let (_, gen, series) = setup(s);
            for &v in gen.vertices() {
                for (i, f) in series.factors().iter().enumerate() {
                    let l = local_degree(&gen, &series, v, i + 1).unwrap();
                    if f.frattini {
                        assert_eq!(l.phi as usize, f.order, "{s}");
                    } else if let Some(e) = f.endo {
                        let floor = e.q.pow(e.r - 1) * (e.q - 1);
                        assert!(l.phi >= floor, "{s} stage {}", i + 1);
                        if f.order > 2 {
                            assert!(l.phi >= 2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degree_bound_examples() {
        let (_, gen, series) = setup("Sym(4)");
        let r = verify_degree_bound(&gen, &series).unwrap();
        assert_eq!((r.t, r.bound), (3, 2));
        assert!(r.holds());
        assert_eq!(r.min_degree, Some(8));

        let (_, gen, series) = setup("SL2(4)");
        let r = verify_degree_bound(&gen, &series).unwrap();
        assert_eq!((r.t, r.bound), (1, 1));
        assert!(r.holds());

        let (_, gen, series) = setup("KleinCp3(3)");
        let r = verify_degree_bound(&gen, &series).unwrap();
        assert_eq!((r.t, r.bound), (5, 8));
        assert!(r.holds());
        assert!(r.min_degree.unwrap() >= 8);

        let (_, gen, series) = setup("Pow(Cyc(2),3)");
        assert!(verify_degree_bound(&gen, &series).is_err());
    }

    #[test]
    fn lift_examples() {
        let g = group("Sym(4)");
        let c = g.element("(1234)").unwrap();
        let stab: Vec<Elem> = g.elements().filter(|&p| g.as_permutation(p).unwrap()[3] == 3).collect();
        let s3 = g.closure(&stab);
        assert_eq!(s3.order(), 6);
        let m = gaschutz_lift(&g, &s3, c, 0).unwrap();
        assert!(g.generates(&[c, m]));
        let whole = Subgroup::whole(&g);
        let m = gaschutz_lift(&g, &whole, c, 0).unwrap();
        assert!(crate::graph::adjacent(&g, c, m));
        let t = g.element("(12)").unwrap();
        assert_eq!(gaschutz_lift(&g, &Subgroup::trivial(&g), c, t).unwrap(), 0);
        let k = g.element("(13)").unwrap();
        assert!(matches!(gaschutz_lift(&g, &Subgroup::trivial(&g), c, k), Err(Error::Precondition(_))));
        assert!(matches!(gaschutz_lift(&g, &whole, 0, t), Err(Error::Isolated(_))));
    }

    #[test]
    fn nonabelian_stage_witnesses() {
        for s in ["SL2(4)", "Sym(5)", "Dir(Alt(5),Cyc(2))"] {
            let g = group(s);
            let gen = GenGraph::new(&g).unwrap();
            for n in g.minimal_normal_subgroups().iter().filter(|n| !n.is_abelian(&g)) {
                for &v in gen.vertices().iter().step_by(3) {
                    for x in gen.neighbors_of(v).step_by(5) {
                        assert!(nonabelian_witness(&g, n, v, x).is_some(), "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn diam2_examples() {
        let (_, gen, series) = setup("Sym(3)");
        let r = diam2_criterion(&gen, &series).unwrap();
        assert!(r.hypothesis);
        assert!(r.diameter.unwrap() <= 2);
        assert!(r.consistent());

        let (_, gen, series) = setup("Dir(Sym(3),Cyc(5))");
        assert!(diam2_criterion(&gen, &series).unwrap().consistent());

        let (_, gen, series) = setup("SL2(4)");
        assert!(diam2_criterion(&gen, &series).is_err());
    }

    #[test]
    fn phi_is_independent_of_representatives() {
        for s in ["Sym(4)", "Dih(4)", "Cyc(6)", "Sym(3)"] {
            let r = phi_independence(&group(s), 2).unwrap();
            assert!(r.violations.is_empty(), "{s}: {:?}", r.violations);
            assert!(r.cases > 0);
        }
    }

    /// Product of stage counts along a chief series equals the global count.
    #[test]
    fn chain_rule() {
        for s in ["Sym(4)", "KleinCp3(3)", "Dih(6)"] {
            let g = group(s);
            let series = g.chief_series().unwrap();
            let (a, b) = (g.generators()[0], g.generators()[1]);
            let total = g
                .elements()
                .flat_map(|x| g.elements().map(move |y| (x, y)))
                .filter(|&(x, y)| g.generates(&[x, y]))
                .count() as u64;
            let mut product = 1;
            for i in 1..=series.length() {
                let q = series.level(&g, i - 1);
                let reps = [series.project(i - 1, a), series.project(i - 1, b)];
                product *= phi_count(q, series.stage_kernel(i), &[], 2, &reps).unwrap();
            }
            assert_eq!(product, total, "{s}");
        }
    }

    #[test]
    fn csv_layout() {
        let (_, gen, series) = setup("Sym(4)");
        let rows = factorize_all(&gen, &series).unwrap();
        let text = factorization_csv(series.length(), &rows).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("vertex,degree,t,bound,stage_1,stage_2,stage_3,product,match"));
        assert_eq!(lines.count(), 20);
    }
}
