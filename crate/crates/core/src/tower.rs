//! Finite quotient towers: the `KleinCp3` family, direct powers of
//! `SL(2, 2^p)`, and explicit lists of groups. Each level is a quotient of
//! the next through a coordinate-forgetting epimorphism.

use std::str::FromStr;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::GenGraph;
use crate::group::{build_group, AutClasses, Elem, Group, GroupSpec, KleinCoords, Subgroup};
use crate::local::{chief_bound, gaschutz_lift};
use crate::par;
use crate::product::power_adjacent;

pub const DEFAULT_SAMPLES: usize = 100_000;
/// Two-sided 99% normal quantile.
pub const Z99: f64 = 2.575_829_303_548_901;
const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    KleinCp3,
    Sl2Products,
    Custom,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "klein-cp3" => Ok(Family::KleinCp3),
            "sl2-products" => Ok(Family::Sl2Products),
            "custom" => Ok(Family::Custom),
            _ => Err(Error::Unsupported(format!("unknown tower family `{s}`"))),
        }
    }
}

/// `SL(2, 2^p)^delta`, never materialized.
#[derive(Debug, Clone)]
pub struct PowerFactor {
    pub p: u32,
    pub delta: u64,
    pub base: Arc<Group>,
    pub classes: Arc<AutClasses>,
}

#[derive(Debug, Clone)]
pub struct Level {
    pub label: String,
    pub order: BigUint,
    /// Present when the level fits the element-table caps.
    pub group: Option<Arc<Group>>,
    /// Odd primes of a `KleinCp3` level.
    pub primes: Vec<u32>,
    /// Power factors of an `sl2-products` level.
    pub powers: Vec<PowerFactor>,
}

#[derive(Debug, Clone)]
pub struct TowerSpec {
    pub family: Family,
    pub levels: Vec<Level>,
    /// `maps[k]` sends level `k + 1` onto level `k`, when both are materialized.
    maps: Vec<Option<Vec<Elem>>>,
}

impl TowerSpec {
    pub fn map(&self, k: usize) -> Option<&[Elem]> {
        self.maps.get(k).and_then(|m| m.as_deref())
    }

    pub fn group(&self, k: usize) -> Result<&Arc<Group>> {
        self.levels
            .get(k)
            .ok_or_else(|| Error::Precondition(format!("no level {}", k + 1)))?
            .group
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("level {} is not materialized", k + 1)))
    }

    /// Image at level `k` of an element of level `j >= k`.
    pub fn project(&self, j: usize, k: usize, mut x: Elem) -> Result<Elem> {
        for i in (k..j).rev() {
            let map = self
                .map(i)
                .ok_or_else(|| Error::Unsupported(format!("no map from level {} to level {}", i + 2, i + 1)))?;
            x = map[x as usize];
        }
        Ok(x)
    }

    /// Elements of level `k + 1` mapping to the identity of level `k`.
    pub fn kernel(&self, k: usize) -> Result<Subgroup> {
        let top = self.group(k + 1)?;
        let map = self.map(k).ok_or_else(|| Error::Unsupported("missing map".into()))?;
        let members: Vec<Elem> = top.elements().filter(|&x| map[x as usize] == 0).collect();
        Ok(Subgroup::from_members(top, &members))
    }
}

pub enum TowerParams {
    /// Prefixes of the prime list.
    Primes(Vec<u32>),
    /// The first `n` exponents of `2, 3`.
    Levels(usize),
    Groups(Vec<GroupSpec>),
}

pub fn build_tower(family: Family, params: TowerParams, caps: &Caps) -> Result<TowerSpec> {
    let levels = match (family, params) {
        (Family::KleinCp3, TowerParams::Primes(primes)) => klein_levels(&primes, caps)?,
        (Family::Sl2Products, TowerParams::Levels(n)) => sl2_levels(n, caps)?,
        (Family::Custom, TowerParams::Groups(specs)) => {
            if specs.is_empty() {
                return Err(Error::Precondition("a custom tower needs at least one group".into()));
            }
            specs
                .iter()
                .map(|s| {
                    let g = build_group(s, caps)?;
                    Ok(Level {
                        label: s.to_string(),
                        order: BigUint::from(g.order()),
                        group: Some(g),
                        primes: Vec::new(),
                        powers: Vec::new(),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        _ => return Err(Error::Precondition("tower parameters do not match the family".into())),
    };
    let mut maps = Vec::new();
    for w in levels.windows(2) {
        let map = match (&w[0].group, &w[1].group) {
            (Some(low), Some(high)) => {
                let map = forgetting_map(low, high)?;
                check_epimorphism(low, high, &map)?;
                Some(map)
            }
            _ => None,
        };
        maps.push(map);
    }
    let tower = TowerSpec { family, levels, maps };
    // composed maps agree with the direct forgetting map
    for j in 2..tower.levels.len() {
        if let (Some(low), Some(high)) = (&tower.levels[j - 2].group, &tower.levels[j].group) {
            let direct = forgetting_map(low, high)?;
            for x in high.elements() {
                if tower.project(j, j - 2, x)? != direct[x as usize] {
                    return Err(Error::Internal(format!("composed map disagrees at {}", high.label(x))));
                }
            }
        }
    }
    Ok(tower)
}

fn klein_levels(primes: &[u32], caps: &Caps) -> Result<Vec<Level>> {
    if primes.is_empty() {
        return Err(Error::Precondition("klein-cp3 needs at least one prime".into()));
    }
    let mut levels = Vec::new();
    for k in 1..=primes.len() {
        let spec = GroupSpec::KleinCp3(primes[..k].to_vec());
        spec.validate()?;
        let order = primes[..k].iter().fold(BigUint::from(4u32), |acc, &p| acc * BigUint::from(p).pow(3));
        let group = match spec.order() {
            Some(n) if n <= caps.order as u128 => Some(build_group(&spec, caps)?),
            _ => None,
        };
        levels.push(Level {
            label: spec.to_string(),
            order,
            group,
            primes: primes[..k].to_vec(),
            powers: Vec::new(),
        });
    }
    Ok(levels)
}

fn sl2_levels(n: usize, caps: &Caps) -> Result<Vec<Level>> {
    const EXPONENTS: [u32; 2] = [2, 3];
    if n == 0 || n > EXPONENTS.len() {
        return Err(Error::Unsupported(format!("sl2-products supports 1 or 2 levels, got {n}")));
    }
    let mut powers: Vec<PowerFactor> = Vec::new();
    let mut levels = Vec::new();
    for &p in &EXPONENTS[..n] {
        let base = build_group(&GroupSpec::Sl2(1 << p), caps)?;
        let classes = Arc::new(AutClasses::compute(&base)?);
        let delta = classes
            .delta()
            .ok_or_else(|| Error::Internal(format!("generating pairs of SL2({}) are not a multiple of |Aut|", 1 << p)))?;
        powers.push(PowerFactor { p, delta, base, classes });
        let order = powers
            .iter()
            .fold(BigUint::from(1u32), |acc, f| acc * BigUint::from(f.base.order()).pow(f.delta as u32));
        let label = powers
            .iter()
            .map(|f| format!("SL2({})^{}", 1u32 << f.p, f.delta))
            .collect::<Vec<_>>()
            .join(" x ");
        levels.push(Level {
            label,
            order,
            group: None,
            primes: Vec::new(),
            powers: powers.clone(),
        });
    }
    Ok(levels)
}

/// The coordinate-forgetting map from `high` onto `low`.
fn forgetting_map(low: &Group, high: &Group) -> Result<Vec<Elem>> {
    if low.spec().is_some() && low.spec() == high.spec() {
        return Ok(high.elements().collect());
    }
    if let (Some(lp), Some(hp)) = (low.klein_primes(), high.klein_primes()) {
        if hp.starts_with(lp) {
            return Ok(high
                .elements()
                .map(|x| {
                    let c = high.klein_coords(x).expect("klein element");
                    let mut n = [0; 3 * crate::group::KLEIN_MAX_PRIMES];
                    n[..3 * lp.len()].copy_from_slice(&c.n[..3 * lp.len()]);
                    low.klein_element(&KleinCoords { h: c.h, n, len: 3 * lp.len() }).expect("klein level")
                })
                .collect());
        }
    }
    if let Some(GroupSpec::Dir(a, b)) = high.spec() {
        if low.spec() == Some(a.as_ref()) {
            let stride = b.order().expect("materialized factor") as usize;
            return Ok(high.elements().map(|x| (x as usize / stride) as Elem).collect());
        }
    }
    Err(Error::Unsupported(format!("no known epimorphism {} -> {}", high.name(), low.name())))
}

fn check_epimorphism(low: &Group, high: &Group, map: &[Elem]) -> Result<()> {
    for &g in high.generators() {
        for x in high.elements() {
            if map[high.mul(g, x) as usize] != low.mul(map[g as usize], map[x as usize]) {
                return Err(Error::Internal(format!("{} -> {} is not a homomorphism", high.name(), low.name())));
            }
        }
    }
    let mut hit = FixedBitSet::with_capacity(low.order());
    hit.extend(map.iter().map(|&y| y as usize));
    if hit.count_ones(..) != low.order() {
        return Err(Error::Internal(format!("{} -> {} is not surjective", high.name(), low.name())));
    }
    Ok(())
}

/// Closed-form membership in `V` for a `KleinCp3` level: `h = h_j` and
/// `n_{p,j} != 0` for every prime.
pub fn v_characterization(g: &Group, x: Elem) -> Result<bool> {
    let c = g
        .klein_coords(x)
        .ok_or_else(|| Error::Unsupported(format!("{} is not a KleinCp3 group", g.name())))?;
    Ok(klein_in_v(&c))
}

fn klein_in_v(c: &KleinCoords) -> bool {
    if c.h == 0 {
        return false;
    }
    let j = c.h as usize - 1;
    (0..c.len / 3).all(|i| c.coord(i, j) != 0)
}

/// `3/4 * prod (1 - 1/p)`.
pub fn klein_predicted_density(primes: &[u32]) -> BigRational {
    primes.iter().fold(BigRational::new(3.into(), 4.into()), |acc, &p| {
        acc * BigRational::new((p - 1).into(), p.into())
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub seed: u64,
    pub samples: usize,
    pub hits: usize,
    pub low: f64,
    pub high: f64,
}

impl Estimate {
    pub fn contains(&self, r: &BigRational) -> bool {
        let x = ratio_f64(r);
        self.low <= x && x <= self.high
    }
}

fn ratio_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// Wilson score interval for `hits` successes in `n` trials.
pub fn wilson_interval(hits: usize, n: usize, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let (k, n) = (hits as f64, n as f64);
    let p = k / n;
    let z2 = z * z;
    let centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z / (1.0 + z2 / n) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Counts successes of `trial` over `samples` draws. Draws come in fixed
/// chunks with their own ChaCha stream, so the count does not depend on
/// the number of workers.
pub fn monte_carlo<F>(seed: u64, samples: usize, trial: F) -> Estimate
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync + Send,
{
    let chunks = samples.div_ceil(CHUNK);
    let hits: usize = par::map_range(chunks, |c| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(c as u64);
        let n = CHUNK.min(samples - c * CHUNK);
        (0..n).filter(|_| trial(&mut rng)).count()
    })
    .into_iter()
    .sum();
    let (low, high) = wilson_interval(hits, samples, Z99);
    Estimate {
        seed,
        samples,
        hits,
        low,
        high,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub level: usize,
    pub label: String,
    pub order: String,
    /// `|V|` by building the generating graph.
    pub exact: Option<u64>,
    /// `|V|` by the closed-form characterization.
    pub characterization: Option<u64>,
    #[serde(serialize_with = "crate::local::ser_opt_ratio")]
    pub predicted: Option<BigRational>,
    pub estimate: Option<Estimate>,
}

impl DensityReport {
    /// Every computed count agrees with the prediction.
    pub fn consistent(&self) -> bool {
        let order: BigUint = self.order.parse().expect("decimal order");
        let ratio = |c: u64| BigRational::new(c.into(), order.clone().into());
        let counts_agree = match (self.exact, self.characterization) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        let predicted_ok = match &self.predicted {
            Some(p) => [self.exact, self.characterization].iter().flatten().all(|&c| &ratio(c) == p),
            None => true,
        };
        let estimate_ok = match (&self.estimate, &self.predicted) {
            (Some(e), Some(p)) => e.contains(p),
            _ => true,
        };
        counts_agree && predicted_ok && estimate_ok
    }
}

/// Number of `KleinCp3(primes)` elements satisfying the characterization,
/// counted coordinatewise: `3 * prod (p - 1) p^2`.
fn klein_characterization_count(primes: &[u32]) -> u64 {
    3 * primes.iter().map(|&p| (p as u64 - 1) * (p as u64).pow(2)).product::<u64>()
}

/// Measures `|V|` at one level: exactly from the generating graph when the
/// order is at most 5000, by the characterization for `KleinCp3` levels,
/// and by Monte Carlo otherwise.
pub fn measure_v(tower: &TowerSpec, level: usize, seed: u64, caps: &Caps) -> Result<DensityReport> {
    let lv = tower
        .levels
        .get(level)
        .ok_or_else(|| Error::Precondition(format!("no level {}", level + 1)))?;
    let mut report = DensityReport {
        level: level + 1,
        label: lv.label.clone(),
        order: lv.order.to_string(),
        exact: None,
        characterization: None,
        predicted: None,
        estimate: None,
    };
    if let Some(g) = &lv.group {
        if g.order() <= 5000 && g.order() <= caps.metrics {
            report.exact = Some(GenGraph::new(g)?.vertices().len() as u64);
        }
    }
    if tower.family == Family::KleinCp3 {
        report.predicted = Some(klein_predicted_density(&lv.primes));
        report.characterization = Some(match &lv.group {
            Some(g) => par::map_range(g.order(), |x| klein_in_v(&g.klein_coords(x as Elem).unwrap()))
                .into_iter()
                .filter(|&b| b)
                .count() as u64,
            None => klein_characterization_count(&lv.primes),
        });
    }
    if report.exact.is_none() && report.characterization.is_none() {
        report.estimate = Some(if lv.powers.is_empty() {
            let g = tower.group(level)?;
            let gen = GenGraph::new(g)?;
            estimate_v(&gen, seed, DEFAULT_SAMPLES)
        } else {
            estimate_power_v(&lv.powers, seed, DEFAULT_SAMPLES)
        });
    }
    Ok(report)
}

/// Monte Carlo density of `V` in a materialized level. Each sampled
/// vertex is confirmed by a closure test against one neighbour.
pub fn estimate_v(gen: &GenGraph, seed: u64, samples: usize) -> Estimate {
    let g = gen.group();
    monte_carlo(seed, samples, |rng| {
        let x = rng.random_range(0..g.order()) as Elem;
        match gen.neighbors_of(x).next() {
            Some(y) => {
                assert!(g.generates(&[x, y]), "edge {} -- {} does not generate", g.label(x), g.label(y));
                true
            }
            None => false,
        }
    })
}

/// For each element of `S`, the automorphism classes of generating pairs
/// with that first entry.
fn first_entry_classes(f: &PowerFactor) -> Vec<FixedBitSet> {
    let n = f.base.order();
    (0..n)
        .map(|x| {
            let mut set = FixedBitSet::with_capacity(f.classes.class_count);
            set.extend((0..n).filter_map(|y| f.classes.class_of(x as Elem, y as Elem)));
            set
        })
        .collect()
}

/// Whether coordinates (by their class sets) can be matched to distinct
/// classes. With `delta` equal to the class count this decides `x in V`.
fn perfect_matching(options: &[&FixedBitSet], classes: usize) -> bool {
    let mut owner: Vec<Option<usize>> = vec![None; classes];
    fn augment(i: usize, options: &[&FixedBitSet], owner: &mut [Option<usize>], seen: &mut FixedBitSet) -> bool {
        for c in options[i].ones() {
            if seen.put(c) {
                continue;
            }
            if owner[c].is_none_or(|j| augment(j, options, owner, seen)) {
                owner[c] = Some(i);
                return true;
            }
        }
        false
    }
    (0..options.len()).all(|i| augment(i, options, &mut owner, &mut FixedBitSet::with_capacity(classes)))
}

/// Whether `x` (one tuple per power factor) is non-isolated in the product.
pub fn power_in_v(powers: &[PowerFactor], x: &[Vec<Elem>]) -> bool {
    powers.iter().zip(x).all(|(f, t)| {
        let sets = first_entry_classes(f);
        let opts: Vec<&FixedBitSet> = t.iter().map(|&e| &sets[e as usize]).collect();
        perfect_matching(&opts, f.classes.class_count)
    })
}

fn estimate_power_v(powers: &[PowerFactor], seed: u64, samples: usize) -> Estimate {
    let sets: Vec<Vec<FixedBitSet>> = powers.iter().map(first_entry_classes).collect();
    monte_carlo(seed, samples, |rng| {
        powers.iter().zip(&sets).all(|(f, sets)| {
            let opts: Vec<&FixedBitSet> = (0..f.delta)
                .map(|_| &sets[rng.random_range(0..f.base.order())])
                .collect();
            perfect_matching(&opts, f.classes.class_count)
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub from: String,
    pub to: String,
    /// Non-isolated vertices of the upper level whose image was checked.
    pub vertices_checked: usize,
    /// Isolated vertices of the lower level whose fibers were checked.
    pub fibers_checked: usize,
    pub fiber_size: usize,
    /// `V` agrees with the characterization on both levels (`KleinCp3`).
    pub characterization_agrees: Option<bool>,
    pub violations: Vec<String>,
}

impl ConsistencyReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.characterization_agrees != Some(false)
    }
}

/// Checks, exhaustively between levels `k` and `k + 1`, that non-isolated
/// vertices map to non-isolated vertices and that every fiber over an
/// isolated vertex is entirely isolated.
pub fn v_consistency(tower: &TowerSpec, k: usize) -> Result<ConsistencyReport> {
    let low = tower.group(k)?;
    let high = tower.group(k + 1)?;
    let map = tower.map(k).ok_or_else(|| Error::Unsupported("missing map".into()))?;
    let (gl, gh) = (GenGraph::new(low)?, GenGraph::new(high)?);
    let mut violations = Vec::new();
    for &v in gh.vertices() {
        if gl.is_isolated(map[v as usize]) {
            violations.push(format!("{} is non-isolated but its image {} is isolated", high.label(v), low.label(map[v as usize])));
        }
    }
    let mut fibers = vec![Vec::new(); low.order()];
    for x in high.elements() {
        fibers[map[x as usize] as usize].push(x);
    }
    let mut fibers_checked = 0;
    for y in low.elements().filter(|&y| gl.is_isolated(y)) {
        fibers_checked += 1;
        for &x in &fibers[y as usize] {
            if !gh.is_isolated(x) {
                violations.push(format!("{} is non-isolated over the isolated {}", high.label(x), low.label(y)));
            }
        }
    }
    let characterization_agrees = (tower.family == Family::KleinCp3).then(|| {
        [(&gl, low), (&gh, high)]
            .iter()
            .all(|(gen, g)| g.elements().all(|x| klein_in_v(&g.klein_coords(x).unwrap()) != gen.is_isolated(x)))
    });
    Ok(ConsistencyReport {
        from: high.name().to_string(),
        to: low.name().to_string(),
        vertices_checked: gh.vertices().len(),
        fibers_checked,
        fiber_size: high.order() / low.order(),
        characterization_agrees,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub p: u32,
    pub field: u32,
    pub group_order: usize,
    pub pair_count: usize,
    pub aut_order: u64,
    pub classes: usize,
    pub free: bool,
    /// `pair_count` is a multiple of `aut_order`.
    pub integral: bool,
    pub delta: u64,
    /// One representative per class gives adjacent tuples in `S^delta`.
    pub witness_adjacent: bool,
    /// `delta + 1` coordinate pairs cannot lie in distinct classes.
    pub pigeonhole: bool,
}

/// `delta_p`: the number of automorphism classes of generating pairs of
/// `SL(2, 2^p)`, with its witness and the counting certificate.
pub fn delta_p(p: u32, caps: &Caps) -> Result<DeltaReport> {
    if !(p == 2 || p == 3) {
        return Err(Error::Unsupported(format!("delta_p is available for p = 2, 3, not {p}")));
    }
    let s = build_group(&GroupSpec::Sl2(1 << p), caps)?;
    let classes = AutClasses::compute(&s)?;
    let integral = classes.delta().is_some();
    let delta = classes.class_count as u64;
    let (x, y): (Vec<Elem>, Vec<Elem>) = classes.representatives().iter().copied().unzip();
    let witness_adjacent = power_adjacent(&classes, delta as usize, &x, &y)?;
    Ok(DeltaReport {
        p,
        field: 1 << p,
        group_order: s.order(),
        pair_count: classes.pair_count,
        aut_order: classes.aut_order,
        classes: classes.class_count,
        free: classes.free,
        integral,
        delta,
        witness_adjacent,
        pigeonhole: classes.representatives().len() == classes.class_count,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub level: usize,
    pub label: String,
    pub element: String,
    pub t: usize,
    pub bound: u64,
    pub degree: usize,
    pub min_degree: usize,
    /// Neighbours of the image one level down that lift to neighbours here.
    pub lifted: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    pub monotone: bool,
    pub bounds_hold: bool,
}

/// Degrees of `x` (an element of the top level) and its images along the
/// tower, next to the chief-length bound, with every lower neighbour
/// lifted one level up.
pub fn degree_growth(tower: &TowerSpec, x: Elem) -> Result<GrowthReport> {
    let top = tower.levels.len() - 1;
    let mut rows: Vec<GrowthRow> = Vec::new();
    let mut prev: Option<GenGraph> = None;
    for k in 0..=top {
        let g = tower.group(k)?;
        let gen = GenGraph::new(g)?;
        let xk = tower.project(top, k, x)?;
        if gen.is_isolated(xk) {
            return Err(Error::Isolated(format!("{} at level {}", g.label(xk), k + 1)));
        }
        let t = g.chief_series()?.length();
        let lifted = match &prev {
            Some(low) => {
                let kernel = tower.kernel(k - 1)?;
                let map = tower.map(k - 1).expect("materialized");
                let preimage: Vec<Elem> = (0..g.order() as Elem).collect();
                let xl = map[xk as usize];
                let mut count = 0;
                for y in low.neighbors_of(xl) {
                    let pre = *preimage.iter().find(|&&e| map[e as usize] == y).expect("surjective");
                    let m = gaschutz_lift(g, &kernel, xk, pre)?;
                    let lift = g.mul(pre, m);
                    debug_assert_eq!(map[lift as usize], y);
                    if gen.is_edge(xk, lift) {
                        count += 1;
                    }
                }
                Some(count)
            }
            None => None,
        };
        let min_degree = gen.vertices().iter().map(|&v| gen.degree(v)).min().unwrap_or(0);
        rows.push(GrowthRow {
            level: k + 1,
            label: tower.levels[k].label.clone(),
            element: g.label(xk).to_string(),
            t,
            bound: chief_bound(t),
            degree: gen.degree(xk),
            min_degree,
            lifted,
        });
        prev = Some(gen);
    }
    let monotone = rows.windows(2).all(|w| w[1].degree >= w[0].degree && w[1].lifted == Some(w[0].degree));
    let bounds_hold = rows.iter().all(|r| r.min_degree as u64 >= r.bound);
    Ok(GrowthReport { rows, monotone, bounds_hold })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TowerLevelRow {
    pub level: usize,
    pub label: String,
    pub order: String,
    pub two_generated: Option<bool>,
    pub v_exact: Option<u64>,
    pub v_characterization: Option<u64>,
    pub v_estimate: Option<Estimate>,
    #[serde(serialize_with = "crate::local::ser_opt_ratio")]
    pub predicted_density: Option<BigRational>,
    /// Chief length, unknown for levels that are never materialized.
    pub t: Option<usize>,
    pub min_degree: Option<usize>,
    pub bound: Option<String>,
    /// Power exponents `delta_p` for `sl2-products` levels.
    pub deltas: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TowerReport {
    pub family: Family,
    pub levels: Vec<TowerLevelRow>,
}

/// Per-level summary of a tower.
pub fn tower_report(tower: &TowerSpec, seed: u64, caps: &Caps) -> Result<TowerReport> {
    let mut levels = Vec::new();
    for (k, lv) in tower.levels.iter().enumerate() {
        let d = measure_v(tower, k, seed, caps)?;
        let mut exact = d.exact;
        let (t, min_degree, two_generated) = match &lv.group {
            Some(g) => {
                let t = g.chief_series()?.length();
                let gen = GenGraph::new(g)?;
                let min = gen.vertices().iter().map(|&v| gen.degree(v)).min();
                let two = !gen.vertices().is_empty() || g.d_rel(&[]) <= 2;
                exact = Some(gen.vertices().len() as u64);
                (Some(t), min, Some(two))
            }
            // `S^delta` has a chief series of length `delta`
            None if !lv.powers.is_empty() => (Some(lv.powers.iter().map(|f| f.delta as usize).sum()), None, None),
            None => (None, None, None),
        };
        let bound = t.map(|t| if t <= 2 { BigUint::from(1u32) } else { BigUint::from(2u32).pow(t as u32 - 2) });
        levels.push(TowerLevelRow {
            level: k + 1,
            label: lv.label.clone(),
            order: lv.order.to_string(),
            two_generated,
            v_exact: exact,
            v_characterization: d.characterization,
            v_estimate: d.estimate,
            predicted_density: d.predicted,
            t,
            min_degree,
            bound: bound.map(|b| b.to_string()),
            deltas: lv.powers.iter().map(|f| f.delta).collect(),
        });
    }
    Ok(TowerReport {
        family: tower.family,
        levels,
    })
}

impl TowerReport {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "level",
            "label",
            "order",
            "v_exact",
            "v_characterization",
            "v_estimate_hits",
            "v_estimate_samples",
            "predicted_density",
            "t",
            "min_degree",
            "bound",
        ])
        .map_err(|e| Error::Internal(e.to_string()))?;
        let opt = |o: Option<String>| o.unwrap_or_default();
        for r in &self.levels {
            w.write_record([
                r.level.to_string(),
                r.label.clone(),
                r.order.clone(),
                opt(r.v_exact.map(|v| v.to_string())),
                opt(r.v_characterization.map(|v| v.to_string())),
                opt(r.v_estimate.as_ref().map(|e| e.hits.to_string())),
                opt(r.v_estimate.as_ref().map(|e| e.samples.to_string())),
                opt(r.predicted_density.as_ref().map(|p| p.to_string())),
                opt(r.t.map(|v| v.to_string())),
                opt(r.min_degree.map(|v| v.to_string())),
                opt(r.bound.clone()),
            ])
            .map_err(|e| Error::Internal(e.to_string()))?;
        }
        String::from_utf8(w.into_inner().map_err(|e| Error::Internal(e.to_string()))?)
            .map_err(|e| Error::Internal(e.to_string()))
    }
}
