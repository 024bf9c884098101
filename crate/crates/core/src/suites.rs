//! The built-in corpus, the `analyze` report and the verification suites
//! driven by the command line.

use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, graph_metrics, swap_graph, GenGraph, GraphView};
use crate::group::{build_group, Group, GroupSpec};
use crate::local::{chief_bound, diam2_criterion, factorize_all, gaschutz_lift, phi_independence, verify_degree_bound};
use crate::product::{lift_path, shortest_path, ProductGraph, WalkCertificate};
use crate::tower::{self, Family, TowerParams};

const BUILTIN: &[&str] = &[
    "Sym(3)",
    "Sym(4)",
    "Sym(5)",
    "Alt(4)",
    "Alt(5)",
    "Dih(3)",
    "Dih(4)",
    "Dih(5)",
    "Dih(6)",
    "Dih(7)",
    "Dih(8)",
    "SL2(4)",
    "SL2(8)",
    "KleinCp3(3)",
    "KleinCp3(3,5)",
    "Dir(Sym(3),Cyc(2))",
    "Dir(Sym(3),Cyc(4))",
    "Dir(Sym(3),Cyc(5))",
    "Dir(Alt(4),Cyc(2))",
    "Dir(Dih(4),Cyc(3))",
    "Dir(Alt(5),Cyc(2))",
    "Pow(Cyc(2),2)",
    "Pow(Cyc(3),2)",
    "Pow(Sym(3),2)",
];

/// The built-in corpus: the groups above and `Cyc(1)` to `Cyc(24)`.
pub fn builtin_corpus() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = BUILTIN.iter().map(|s| s.parse().expect("built-in spec")).collect();
    out.extend((1..=24).map(GroupSpec::Cyc));
    out
}

/// Resolves `builtin`, `builtin-soluble`, or a file with one spec per line
/// (`#` starts a comment).
pub fn load_corpus(name: &str, caps: &Caps) -> Result<Vec<GroupSpec>> {
    match name {
        "builtin" => Ok(builtin_corpus()),
        "builtin-soluble" => {
            let mut out = Vec::new();
            for spec in builtin_corpus() {
                if build_group(&spec, caps)?.is_soluble() {
                    out.push(spec);
                }
            }
            Ok(out)
        }
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("cannot read corpus `{path}`: {e}")))?;
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(str::parse)
                .collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub group: String,
    pub order: usize,
    pub vertices: usize,
    pub isolated: usize,
    pub edges: usize,
    pub components: usize,
    pub connected: bool,
    /// Diameter of each component, in order of the smallest vertex.
    pub component_diameters: Vec<u32>,
    pub diameter: Option<u32>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub t: usize,
    pub bound: u64,
    pub soluble: bool,
    pub chief_factors: Vec<usize>,
}

pub fn analyze(g: &Arc<Group>, caps: &Caps) -> Result<AnalyzeReport> {
    let gen = GenGraph::new(g)?;
    let metrics = graph_metrics(&gen, caps)?;
    let series = g.chief_series()?;
    let degrees: Vec<usize> = gen.vertices().iter().map(|&v| gen.degree(v)).collect();
    Ok(AnalyzeReport {
        group: g.name().to_string(),
        order: g.order(),
        vertices: gen.vertices().len(),
        isolated: g.order() - gen.vertices().len(),
        edges: gen.edge_count(),
        components: metrics.components.count(),
        connected: metrics.connected(),
        component_diameters: metrics.diameters.clone(),
        diameter: metrics.diameter(),
        min_degree: degrees.iter().copied().min(),
        max_degree: degrees.iter().copied().max(),
        t: series.length(),
        bound: chief_bound(series.length()),
        soluble: series.is_soluble(),
        chief_factors: series.factors().iter().map(|f| f.order).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tanti,
    Diam3,
    Prodo,
    Gaschutz,
    Swap,
    Coco,
    Tower,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Tanti,
        Suite::Diam3,
        Suite::Prodo,
        Suite::Gaschutz,
        Suite::Swap,
        Suite::Coco,
        Suite::Tower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tanti => "tanti",
            Suite::Diam3 => "diam3",
            Suite::Prodo => "prodo",
            Suite::Gaschutz => "gaschutz",
            Suite::Swap => "swap",
            Suite::Coco => "coco",
            Suite::Tower => "tower",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Suite::Tanti => "degree >= max(1, 2^(t-2)) on V(G); at most two complemented chief factors of order 2",
            Suite::Diam3 => "soluble groups: Delta(G) connected with diameter <= 3",
            Suite::Prodo => "degree equals the product of chief-stage local degrees",
            Suite::Gaschutz => "phi independent of coset representatives; normal-subgroup lifts exist",
            Suite::Swap => "swap-graph components project into Delta-components",
            Suite::Coco => "lifted product walks validate; product distance = max coordinate distance",
            Suite::Tower => "KleinCp3 tower: V-consistency, densities, degree growth; delta_2, delta_3",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub status: Status,
    pub detail: String,
    pub counterexamples: Vec<String>,
}

impl CaseResult {
    fn new(case: &str, ok: bool, detail: String, counterexamples: Vec<String>) -> CaseResult {
        CaseResult {
            case: case.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
            counterexamples,
        }
    }

    fn skipped(case: &str, detail: String) -> CaseResult {
        CaseResult {
            case: case.to_string(),
            status: Status::Skipped,
            detail,
            counterexamples: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub property: String,
    pub seed: u64,
    pub passed: bool,
    pub counts: Counts,
    pub cases: Vec<CaseResult>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64, cases: Vec<CaseResult>) -> SuiteReport {
        let mut counts = Counts::default();
        for c in &cases {
            match c.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::Skipped => counts.skipped += 1,
            }
        }
        SuiteReport {
            suite,
            property: suite.describe().to_string(),
            seed,
            passed: counts.fail == 0,
            counts,
            cases,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Internal(e.to_string());
        w.write_record(["suite", "case", "status", "detail", "counterexamples"]).map_err(err)?;
        for c in &self.cases {
            let status = serde_json::to_value(c.status).expect("status");
            w.write_record([
                self.suite.name(),
                &c.case,
                status.as_str().unwrap_or(""),
                &c.detail,
                &c.counterexamples.join("; "),
            ])
            .map_err(err)?;
        }
        String::from_utf8(w.into_inner().map_err(|e| Error::Internal(e.to_string()))?)
            .map_err(|e| Error::Internal(e.to_string()))
    }
}

/// Counterexample lists are cut at this length.
const DUMP: usize = 20;

fn dump<I: IntoIterator<Item = String>>(items: I) -> Vec<String> {
    items.into_iter().take(DUMP).collect()
}

/// Runs a suite over the corpus (ignored by `tower`).
pub fn run_suite(suite: Suite, corpus: &[GroupSpec], seed: u64, caps: &Caps) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::Tower => tower_suite(seed, caps)?,
        _ => {
            let mut cases = Vec::with_capacity(corpus.len());
            for spec in corpus {
                let g = build_group(spec, caps)?;
                let case = match suite {
                    Suite::Tanti => tanti(&g)?,
                    Suite::Diam3 => diam3(&g, caps)?,
                    Suite::Prodo => prodo(&g)?,
                    Suite::Gaschutz => gaschutz(&g)?,
                    Suite::Swap => swap(&g, caps)?,
                    Suite::Coco => coco(&g, caps)?,
                    Suite::Tower => unreachable!(),
                };
                cases.push(case);
            }
            cases
        }
    };
    Ok(SuiteReport::new(suite, seed, cases))
}

fn tanti(g: &Arc<Group>) -> Result<CaseResult> {
    let gen = GenGraph::new(g)?;
    let series = g.chief_series()?;
    let r = verify_degree_bound(&gen, &series)?;
    let detail = format!(
        "t = {}, bound = {}, min degree = {}, complemented order-2 factors = {}",
        r.t,
        r.bound,
        r.min_degree.map_or("-".into(), |d| d.to_string()),
        r.non_frattini_order_two
    );
    let mut bad = dump(r.violations.iter().cloned());
    if r.non_frattini_order_two > 2 {
        bad.push(format!("{} complemented chief factors of order 2", r.non_frattini_order_two));
    }
    Ok(CaseResult::new(g.name(), r.holds(), detail, bad))
}

fn diam3(g: &Arc<Group>, caps: &Caps) -> Result<CaseResult> {
    let series = g.chief_series()?;
    if !series.is_soluble() {
        return Ok(CaseResult::skipped(g.name(), "not soluble".into()));
    }
    let gen = GenGraph::new(g)?;
    if gen.vertices().is_empty() {
        return Ok(CaseResult::skipped(g.name(), "Delta(G) is empty".into()));
    }
    let m = graph_metrics(&gen, caps)?;
    let d2 = diam2_criterion(&gen, &series)?;
    let ok = m.connected() && m.diameter().is_some_and(|d| d <= 3) && d2.consistent();
    let detail = format!(
        "|V| = {}, components = {}, diameter = {}, diameter-2 hypothesis = {}",
        m.vertex_count,
        m.components.count(),
        m.diameter().map_or("-".into(), |d| d.to_string()),
        d2.hypothesis
    );
    let mut bad = Vec::new();
    if !m.connected() {
        bad.push(format!("{} components", m.components.count()));
    }
    if let Some(d) = m.diameter().filter(|&d| d > 3) {
        bad.push(format!("diameter {d}"));
    }
    if !d2.consistent() {
        bad.push("hypothesis holds but diameter exceeds 2".into());
    }
    Ok(CaseResult::new(g.name(), ok, detail, bad))
}

fn prodo(g: &Arc<Group>) -> Result<CaseResult> {
    let gen = GenGraph::new(g)?;
    let series = g.chief_series()?;
    let rows = factorize_all(&gen, &series)?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches)
        .map(|r| format!("{}: product {} vs degree {}", r.vertex, r.product, r.direct_degree))
        .collect();
    let detail = format!("{} vertices, t = {}", rows.len(), series.length());
    Ok(CaseResult::new(g.name(), bad.is_empty(), detail, dump(bad)))
}

/// Largest order for the exhaustive representative checks.
const GASCHUTZ_ORDER: usize = 200;

fn gaschutz(g: &Arc<Group>) -> Result<CaseResult> {
    if g.order() > GASCHUTZ_ORDER {
        return Ok(CaseResult::skipped(g.name(), format!("order {} > {GASCHUTZ_ORDER}", g.order())));
    }
    let r = phi_independence(g, 2)?;
    let mut bad = r.violations.clone();
    let gen = GenGraph::new(g)?;
    let classes = g.conjugacy_classes();
    let mut lifts = 0;
    for n in g.normal_subgroups().iter() {
        let q = crate::group::Quotient::new(g, n)?;
        for &v in classes.reps() {
            if gen.is_isolated(v) {
                continue;
            }
            for x in g.elements() {
                if !q.group.generates(&[q.projection[v as usize], q.projection[x as usize]]) {
                    continue;
                }
                lifts += 1;
                match gaschutz_lift(g, n, v, x) {
                    Ok(m) => debug_assert!(g.generates(&[v, g.mul(x, m)])),
                    Err(e) => bad.push(format!("N of order {}, v = {}, x = {}: {e}", n.order(), g.label(v), g.label(x))),
                }
            }
        }
    }
    let detail = format!(
        "{} (N, X, k) cases, {} coset tuples, {lifts} lifts",
        r.cases, r.coset_tuples
    );
    Ok(CaseResult::new(g.name(), bad.is_empty(), detail, dump(bad)))
}

fn swap(g: &Arc<Group>, caps: &Caps) -> Result<CaseResult> {
    if g.order() > caps.swap {
        return Ok(CaseResult::skipped(g.name(), format!("order {} exceeds the swap cap {}", g.order(), caps.swap)));
    }
    let gen = GenGraph::new(g)?;
    if gen.vertices().is_empty() {
        return Ok(CaseResult::skipped(g.name(), "Delta(G) is empty".into()));
    }
    let m = graph_metrics(&gen, caps)?;
    let s = swap_graph(&gen)?;
    let c = s.check_refinement(&m.components);
    let detail = format!(
        "{} generating pairs, {} swap components onto {} Delta-components",
        c.pairs, c.swap_components, c.delta_components
    );
    let bad = dump(c.violations.iter().map(|v| v.join(" ")));
    Ok(CaseResult::new(g.name(), c.violations.is_empty(), detail, bad))
}

/// Longest walk length checked by the lifting suite.
pub const LIFT_MAX: usize = 4;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LiftCheck {
    pub targets: usize,
    pub certificates: usize,
    /// `(0, 1)` profiles and their exact distances, as a histogram over 0..=4.
    pub zero_one: [usize; 5],
    pub failures: Vec<String>,
}

/// From the product of `a` and `b`, source `(x, x')`: every target with
/// coordinate distances `1 <= mu_n <= m <= LIFT_MAX` gets lifted walks of
/// every such length `m`, each validated, and its exact distance compared
/// with `max mu_n`; targets with profile `(0, 1)` have their distance
/// recorded.
pub fn check_lifts(a: &dyn GraphView, b: &dyn GraphView, source: (usize, usize), caps: &Caps) -> Result<LiftCheck> {
    let factors: Vec<&dyn GraphView> = vec![a, b];
    let p = ProductGraph::new(factors.clone());
    let exact = p.bfs(&[source.0, source.1], caps)?;
    let (da, db) = (bfs_distances(a, source.0), bfs_distances(b, source.1));
    let mut out = LiftCheck::default();
    for ya in a.vertices() {
        for yb in b.vertices() {
            let (Some(ma), Some(mb)) = (da[ya], db[yb]) else { continue };
            let (ma, mb) = (ma as usize, mb as usize);
            let d = exact.get(&vec![ya, yb]).map(|&d| d as usize);
            let label = || format!("{} -> {}", p.tuple_label(&[source.0, source.1]), p.tuple_label(&[ya, yb]));
            if (ma, mb) == (0, 1) {
                out.zero_one[d.unwrap_or(0).min(4)] += 1;
                if !matches!(d, Some(2) | Some(3)) {
                    out.failures.push(format!("{}: (0,1) profile at distance {d:?}", label()));
                }
            }
            if ma == 0 || mb == 0 || ma.max(mb) > LIFT_MAX {
                continue;
            }
            out.targets += 1;
            if d != Some(ma.max(mb)) {
                out.failures.push(format!("{}: distance {d:?}, expected {}", label(), ma.max(mb)));
            }
            let paths: Vec<WalkCertificate<usize>> = vec![
                shortest_path(a, source.0, ya).expect("reachable"),
                shortest_path(b, source.1, yb).expect("reachable"),
            ];
            for m in ma.max(mb)..=LIFT_MAX {
                out.certificates += 1;
                match lift_path(&factors, &paths, m) {
                    Ok(w) if w.validate(&p) && w.len() == m && w.end == [ya, yb] => {}
                    Ok(_) => out.failures.push(format!("{}: invalid walk of length {m}", label())),
                    Err(e) => out.failures.push(format!("{}: length {m}: {e}", label())),
                }
            }
        }
    }
    Ok(out)
}

fn coco(g: &Arc<Group>, caps: &Caps) -> Result<CaseResult> {
    let gen = GenGraph::new(g)?;
    let n = gen.vertices().len();
    if n == 0 {
        return Ok(CaseResult::skipped(g.name(), "Delta(G) is empty".into()));
    }
    if n.saturating_mul(n) > caps.product {
        return Ok(CaseResult::skipped(g.name(), format!("{n}^2 product vertices exceed the cap {}", caps.product)));
    }
    let open_edge = gen.vertices().iter().find_map(|&u| {
        let u = u as usize;
        gen.neighbors(u).into_iter().find(|&v| u < v && gen.triangle_apex(u, v).is_none()).map(|v| (u, v))
    });
    if let Some((u, v)) = open_edge {
        return Ok(CaseResult::skipped(
            g.name(),
            format!("edge {} -- {} lies on no triangle, so walks cannot be padded", gen.label(u), gen.label(v)),
        ));
    }
    let x = gen.vertices()[0] as usize;
    let r = check_lifts(&gen, &gen, (x, x), caps)?;
    let detail = format!(
        "{} targets, {} certificates, (0,1) distances {:?}, triangle exceptions {}",
        r.targets,
        r.certificates,
        r.zero_one,
        gen.triangle_failures().len()
    );
    Ok(CaseResult::new(g.name(), r.failures.is_empty(), detail, dump(r.failures)))
}

fn tower_suite(seed: u64, caps: &Caps) -> Result<Vec<CaseResult>> {
    let mut cases = Vec::new();
    let t = tower::build_tower(Family::KleinCp3, TowerParams::Primes(vec![3, 5]), caps)?;
    for k in 0..t.levels.len() {
        let d = tower::measure_v(&t, k, seed, caps)?;
        let detail = format!(
            "|V| exact {}, characterization {}, predicted density {}",
            d.exact.map_or("-".into(), |v| v.to_string()),
            d.characterization.map_or("-".into(), |v| v.to_string()),
            d.predicted.as_ref().map_or("-".into(), |p| p.to_string())
        );
        cases.push(CaseResult::new(&format!("density {}", d.label), d.consistent(), detail, Vec::new()));
    }
    let c = tower::v_consistency(&t, 0)?;
    cases.push(CaseResult::new(
        &format!("v-consistency {} -> {}", c.from, c.to),
        c.holds(),
        format!(
            "{} vertices, {} isolated fibers of size {}, characterization agrees: {}",
            c.vertices_checked,
            c.fibers_checked,
            c.fiber_size,
            c.characterization_agrees.unwrap_or(false)
        ),
        dump(c.violations.clone()),
    ));
    let top = t.group(1)?;
    let x = top
        .elements()
        .find(|&x| tower::v_characterization(top, x).unwrap_or(false))
        .ok_or_else(|| Error::Internal("empty V".into()))?;
    let growth = tower::degree_growth(&t, x)?;
    let detail = growth
        .rows
        .iter()
        .map(|r| format!("{}: t = {}, bound = {}, degree = {}, min degree = {}", r.label, r.t, r.bound, r.degree, r.min_degree))
        .collect::<Vec<_>>()
        .join("; ");
    cases.push(CaseResult::new("degree growth", growth.monotone && growth.bounds_hold, detail, Vec::new()));
    for p in [2, 3] {
        let d = tower::delta_p(p, caps)?;
        let ok = d.free && d.integral && d.witness_adjacent && d.pigeonhole;
        let detail = format!(
            "{} generating pairs / {} automorphisms = {} classes",
            d.pair_count, d.aut_order, d.classes
        );
        cases.push(CaseResult::new(&format!("delta_{p}"), ok, detail, Vec::new()));
    }
    Ok(cases)
}

/// Parses a comma-separated list such as `3,5`.
pub fn parse_list<T: FromStr>(text: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|s| {
            s.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad list entry `{s}`"),
            })
        })
        .collect()
}

