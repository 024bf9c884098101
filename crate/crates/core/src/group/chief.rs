use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Elem, Group, Repr, Subgroup};
use crate::error::{Error, Result};

/// Largest number of lifted generating tuples examined by the Frattini test.
const FRATTINI_LIFT_BUDGET: usize = 1_000_000;

/// A materialized quotient `G/N` with the projection from `G`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Arc<Group>,
    /// `projection[x]` is the coset of `x`.
    pub projection: Vec<Elem>,
    /// Smallest element of each coset.
    pub reps: Vec<Elem>,
}

impl Quotient {
    /// Builds `parent / n`; `n` must be normal.
    pub fn new(parent: &Arc<Group>, n: &Subgroup) -> Result<Quotient> {
        if !n.is_normal() {
            return Err(Error::Precondition(format!(
                "subgroup of order {} is not normal in {}",
                n.order(),
                parent.name()
            )));
        }
        let size = parent.order();
        let mut coset = vec![Elem::MAX; size];
        let mut reps = Vec::with_capacity(size / n.order());
        let kernel: Vec<Elem> = n.elements().collect();
        for x in parent.elements() {
            if coset[x as usize] != Elem::MAX {
                continue;
            }
            let id = reps.len() as Elem;
            reps.push(x);
            for &k in &kernel {
                coset[parent.mul(x, k) as usize] = id;
            }
        }
        let order = reps.len();
        let labels = reps.iter().map(|&r| format!("[{}]", parent.label(r))).collect();
        let inv = reps.iter().map(|&r| coset[parent.inv(r) as usize]).collect();
        let group = Group::assemble(
            format!("{}/N{}", parent.name(), n.order()),
            None,
            Repr::Quotient {
                parent: parent.clone(),
                reps: reps.clone(),
                coset: coset.clone(),
            },
            order,
            labels,
            inv,
            *parent.caps(),
        );
        Ok(Quotient {
            group: Arc::new(group),
            projection: coset,
            reps,
        })
    }
}

/// `q = |End_G(N)|` and `r = dim N` over that field, for an abelian minimal
/// normal subgroup of order `p^(e*r)` with `q = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EndoParams {
    pub p: u64,
    pub q: u64,
    pub r: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiefFactor {
    pub order: usize,
    pub abelian: bool,
    /// Contained in the Frattini subgroup of the quotient it is minimal in.
    pub frattini: bool,
    /// The quotient acts trivially on the factor.
    pub central: bool,
    /// Filled for abelian factors.
    pub endo: Option<EndoParams>,
}

/// A chief series `1 = N_0 < ... < N_t = G` with the quotients `G/N_i`
/// materialized.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    terms: Vec<Subgroup>,
    factors: Vec<ChiefFactor>,
    quotients: Vec<Quotient>,
    /// Image of `N_i` inside `G/N_(i-1)`, for `i = 1..=t`.
    stage_kernels: Vec<Subgroup>,
}

impl ChiefSeries {
    pub fn length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[ChiefFactor] {
        &self.factors
    }

    /// `N_i` as a subgroup of `G`, `i = 0..=t`.
    pub fn term(&self, i: usize) -> &Subgroup {
        &self.terms[i]
    }

    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    /// `G/N_i`; `i = 0` gives `g` itself.
    pub fn level<'a>(&'a self, g: &'a Group, i: usize) -> &'a Group {
        if i == 0 {
            g
        } else {
            &self.quotients[i - 1].group
        }
    }

    /// Projection `G -> G/N_i` evaluated at `x`.
    pub fn project(&self, i: usize, x: Elem) -> Elem {
        if i == 0 {
            x
        } else {
            self.quotients[i - 1].projection[x as usize]
        }
    }

    /// `N_i / N_(i-1)` as a normal subgroup of `G/N_(i-1)`, `i = 1..=t`.
    pub fn stage_kernel(&self, i: usize) -> &Subgroup {
        &self.stage_kernels[i - 1]
    }

    /// Number of complemented (non-Frattini) factors of order 2.
    pub fn non_frattini_order_two(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| f.order == 2 && !f.frattini)
            .count()
    }

    pub fn is_soluble(&self) -> bool {
        self.factors.iter().all(|f| f.abelian)
    }
}

impl Group {
    /// A chief series built from minimal normal subgroups of successive
    /// quotients, taking the first one of largest order at each step.
    pub fn chief_series(self: &Arc<Self>) -> Result<ChiefSeries> {
        self.chief_series_seeded(None)
    }

    /// As [`Group::chief_series`], but with a seeded random choice among the
    /// minimal normal subgroups at each step.
    pub fn chief_series_seeded(self: &Arc<Self>, seed: Option<u64>) -> Result<ChiefSeries> {
        let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
        let mut current = self.clone();
        let mut to_current: Vec<Elem> = self.elements().collect();
        let mut terms = vec![Subgroup::trivial(self)];
        let mut factors = Vec::new();
        let mut quotients = Vec::new();
        let mut stage_kernels = Vec::new();
        while current.order() > 1 {
            let minimal = current.minimal_normal_subgroups();
            let pick = match rng.as_mut() {
                Some(r) => r.random_range(0..minimal.len()),
                None => {
                    let top = minimal.iter().map(Subgroup::order).max().unwrap_or(0);
                    minimal.iter().position(|m| m.order() == top).unwrap_or(0)
                }
            };
            let m = minimal[pick].clone();
            let quotient = Quotient::new(&current, &m)?;
            let abelian = m.is_abelian(&current);
            let central = current.generators().iter().all(|&g| {
                m.generators()
                    .iter()
                    .all(|&x| current.mul(g, x) == current.mul(x, g))
            });
            let frattini = abelian && frattini_flag(&current, &m, &quotient)?;
            let endo = if abelian {
                Some(endo_params(&current, &m)?)
            } else {
                None
            };
            factors.push(ChiefFactor {
                order: m.order(),
                abelian,
                frattini,
                central,
                endo,
            });
            let preimage: Vec<Elem> = self
                .elements()
                .filter(|&x| m.contains(to_current[x as usize]))
                .collect();
            terms.push(Subgroup::from_members(self, &preimage));
            for x in to_current.iter_mut() {
                *x = quotient.projection[*x as usize];
            }
            stage_kernels.push(m);
            current = quotient.group.clone();
            quotients.push(Quotient {
                group: quotient.group,
                projection: to_current.clone(),
                reps: quotient.reps,
            });
        }
        Ok(ChiefSeries {
            terms,
            factors,
            quotients,
            stage_kernels,
        })
    }
}

/// Whether the minimal normal subgroup `m` lies in the Frattini subgroup of
/// `q`: it does iff every lift of a generating tuple of `q/m` generates `q`.
pub(crate) fn frattini_flag(q: &Group, m: &Subgroup, quotient: &Quotient) -> Result<bool> {
    let lifts: Vec<Elem> = quotient
        .group
        .generators()
        .iter()
        .map(|&g| quotient.reps[g as usize])
        .collect();
    let kernel: Vec<Elem> = m.elements().collect();
    let d = lifts.len() as u32;
    let total = kernel.len().checked_pow(d).unwrap_or(usize::MAX);
    if total > FRATTINI_LIFT_BUDGET {
        let phi = q.frattini()?;
        return Ok(m.is_subgroup_of(&phi));
    }
    let mut tuple = vec![0usize; lifts.len()];
    let mut gens = lifts.clone();
    loop {
        for (i, &k) in tuple.iter().enumerate() {
            gens[i] = q.mul(lifts[i], kernel[k]);
        }
        if !q.generates(&gens) {
            return Ok(false);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == tuple.len() {
                return Ok(true);
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

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank of a matrix over GF(p).
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_pow(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coordinates of the elements of an elementary abelian subgroup with
/// respect to a basis chosen greedily in index order.
pub(crate) struct Coordinates {
    pub p: u64,
    pub basis: Vec<Elem>,
    coords: std::collections::HashMap<Elem, Vec<u64>>,
}

impl Coordinates {
    pub(crate) fn new(g: &Group, n: &Subgroup) -> Result<Coordinates> {
        let p = n
            .elements()
            .find(|&x| x != 0)
            .map(|x| g.element_order(x) as u64)
            .ok_or_else(|| Error::Precondition("trivial subgroup has no coordinates".into()))?;
        if n.elements().any(|x| x != 0 && g.element_order(x) as u64 != p) || !n.is_abelian(g) {
            return Err(Error::Precondition("subgroup is not elementary abelian".into()));
        }
        let mut basis = Vec::new();
        let mut span = g.span(&[]);
        for x in n.elements() {
            if !span.set.contains(x as usize) {
                span = g.span_extend(&span, &basis, &[x], usize::MAX);
                basis.push(x);
            }
        }
        let k = basis.len();
        let mut coords = std::collections::HashMap::new();
        let total = (p as usize).pow(k as u32);
        for idx in 0..total {
            let mut v = vec![0u64; k];
            let mut rest = idx;
            let mut x = 0;
            for (j, &b) in basis.iter().enumerate() {
                v[j] = (rest % p as usize) as u64;
                rest /= p as usize;
                x = g.mul(x, g.pow(b, v[j] as usize));
            }
            coords.insert(x, v);
        }
        Ok(Coordinates { p, basis, coords })
    }

    pub(crate) fn of(&self, x: Elem) -> &[u64] {
        &self.coords[&x]
    }
}

/// `|End_G(N)|` and the dimension of `N` over it.
pub fn endo_params(g: &Group, n: &Subgroup) -> Result<EndoParams> {
    if !n.is_normal() {
        return Err(Error::Precondition("subgroup is not normal".into()));
    }
    if !n.is_abelian(g) {
        return Err(Error::Precondition("subgroup is not abelian".into()));
    }
    if !g.minimal_normal_subgroups().iter().any(|m| m == n) {
        return Err(Error::Precondition("subgroup is not minimal normal".into()));
    }
    let coords = Coordinates::new(g, n)?;
    let p = coords.p;
    let k = coords.basis.len();
    // Matrix of conjugation by each generator: column j = image of basis j.
    let actions: Vec<Vec<Vec<u64>>> = g
        .generators()
        .iter()
        .map(|&s| {
            let mut a = vec![vec![0u64; k]; k];
            for (j, &b) in coords.basis.iter().enumerate() {
                for (i, &c) in coords.of(g.conj(b, s)).iter().enumerate() {
                    a[i][j] = c;
                }
            }
            a
        })
        .collect();
    // Unknown X (k x k, row-major) with X A - A X = 0 for every action A.
    let mut rows = Vec::new();
    for a in &actions {
        for i in 0..k {
            for j in 0..k {
                let mut row = vec![0u64; k * k];
                for l in 0..k {
                    // (XA)_ij = sum_l X_il A_lj ; (AX)_ij = sum_l A_il X_lj
                    row[i * k + l] = (row[i * k + l] + a[l][j]) % p;
                    row[l * k + j] = (row[l * k + j] + p - a[i][l]) % p;
                }
                rows.push(row);
            }
        }
    }
    let nullity = if rows.is_empty() {
        k * k
    } else {
        k * k - rank_mod_p(rows, p)
    };
    if nullity == 0 || k % nullity != 0 {
        return Err(Error::Internal(format!(
            "End_G(N) has dimension {nullity}, not a divisor of {k}"
        )));
    }
    Ok(EndoParams {
        p,
        q: p.pow(nullity as u32),
        r: (k / nullity) as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::group;

    fn factor_orders(s: &ChiefSeries) -> Vec<usize> {
        s.factors().iter().map(|f| f.order).collect()
    }

    #[test]
    fn chief_series_examples() {
        let s4 = group("Sym(4)");
        let cs = s4.chief_series().unwrap();
        assert_eq!(cs.length(), 3);
        assert_eq!(factor_orders(&cs), vec![4, 3, 2]);
        let orders: Vec<usize> = cs.terms().iter().map(|t| t.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);

        let sl = group("SL2(4)");
        let cs = sl.chief_series().unwrap();
        assert_eq!(cs.length(), 1);
        assert!(!cs.factors()[0].abelian);

        let k = group("KleinCp3(3)");
        let cs = k.chief_series().unwrap();
        assert_eq!(factor_orders(&cs), vec![3, 3, 3, 2, 2]);
        assert!(cs.factors().iter().all(|f| !f.frattini));
    }

    /// Oracle: successive minimal normal subgroups, each checked to be
    /// minimal normal in the corresponding quotient.
    #[test]
    fn every_factor_is_minimal_normal_in_its_quotient() {
        for s in ["Sym(4)", "Dih(6)", "Dir(Sym(3),Cyc(4))", "KleinCp3(3)", "Cyc(12)"] {
            let g = group(s);
            let cs = g.chief_series().unwrap();
            for i in 1..=cs.length() {
                let q = cs.level(&g, i - 1);
                let m = cs.stage_kernel(i);
                assert!(q.minimal_normal_subgroups().iter().any(|x| x == m), "{s} stage {i}");
                assert!(cs.term(i - 1).is_subgroup_of(cs.term(i)));
                assert!(cs.term(i).is_normal());
            }
            assert_eq!(cs.term(cs.length()).order(), g.order());
        }
    }

    #[test]
    fn frattini_flags_match_direct_frattini() {
        for s in ["Cyc(4)", "Dih(4)", "Cyc(8)", "Sym(4)", "Dir(Cyc(4),Cyc(3))", "Dih(8)", "KleinCp3(3)"] {
            let g = group(s);
            let cs = g.chief_series().unwrap();
            for i in 1..=cs.length() {
                let q = cs.level(&g, i - 1);
                let phi = q.frattini().unwrap();
                let in_phi = cs.stage_kernel(i).is_subgroup_of(&phi);
                assert_eq!(cs.factors()[i - 1].frattini, in_phi, "{s} stage {i}");
            }
        }
        let c4 = group("Cyc(4)").chief_series().unwrap();
        assert!(c4.factors()[0].frattini);
        assert!(!c4.factors()[1].frattini);
    }

    #[test]
    fn abelian_factors_have_prime_power_order() {
        for s in ["Sym(4)", "Dih(8)", "KleinCp3(3)", "Dir(Alt(4),Cyc(2))"] {
            let g = group(s);
            for f in g.chief_series().unwrap().factors() {
                if f.abelian {
                    let e = f.endo.unwrap();
                    assert_eq!(e.q.pow(e.r) as usize, f.order, "{s}");
                }
            }
        }
    }

    #[test]
    fn chief_length_is_seed_invariant() {
        for s in ["Sym(4)", "KleinCp3(3)", "Dir(Sym(3),Cyc(5))", "Cyc(24)"] {
            let g = group(s);
            let t = g.chief_series().unwrap().length();
            for seed in 0..10 {
                assert_eq!(g.chief_series_seeded(Some(seed)).unwrap().length(), t, "{s}");
            }
        }
    }

    #[test]
    fn endo_params_examples() {
        let s4 = group("Sym(4)");
        let v4 = s4.minimal_normal_subgroups()[0].clone();
        assert_eq!(endo_params(&s4, &v4).unwrap(), EndoParams { p: 2, q: 2, r: 2 });

        let s3 = group("Sym(3)");
        let c3 = s3.minimal_normal_subgroups()[0].clone();
        assert_eq!(c3.order(), 3);
        assert_eq!(endo_params(&s3, &c3).unwrap(), EndoParams { p: 3, q: 3, r: 1 });

        let c5 = group("Cyc(5)");
        let whole = Subgroup::whole(&c5);
        assert_eq!(endo_params(&c5, &whole).unwrap(), EndoParams { p: 5, q: 5, r: 1 });

        // Alt(4): V4 with the 3-cycle acting irreducibly -> End = GF(4), r = 1
        let a4 = group("Alt(4)");
        let v = a4.minimal_normal_subgroups()[0].clone();
        assert_eq!(endo_params(&a4, &v).unwrap(), EndoParams { p: 2, q: 4, r: 1 });
    }

    #[test]
    fn endo_params_rejects_bad_input() {
        let s4 = group("Sym(4)");
        let a4 = s4.derived_subgroup();
        assert!(endo_params(&s4, &a4).is_err());
        let sl = group("SL2(4)");
        assert!(endo_params(&sl, &Subgroup::whole(&sl)).is_err());
    }

    /// Oracle: count every additive endomorphism commuting with the action.
    fn brute_endo_count(g: &Group, n: &Subgroup) -> u64 {
        let coords = Coordinates::new(g, n).unwrap();
        let p = coords.p as usize;
        let k = coords.basis.len();
        let elems: Vec<Elem> = n.elements().collect();
        let lookup = |v: &[u64]| -> Elem {
            *elems.iter().find(|&&x| coords.of(x) == v).unwrap()
        };
        let mut count = 0;
        // an endomorphism is determined by the images of the basis
        for code in 0..(elems.len().pow(k as u32)) {
            let mut rest = code;
            let imgs: Vec<Elem> = (0..k)
                .map(|_| {
                    let x = elems[rest % elems.len()];
                    rest /= elems.len();
                    x
                })
                .collect();
            let apply = |x: Elem| -> Elem {
                let c = coords.of(x);
                let mut out = vec![0u64; k];
                for (j, &cj) in c.iter().enumerate() {
                    for (i, &d) in coords.of(imgs[j]).iter().enumerate() {
                        out[i] = (out[i] + cj * d) % p as u64;
                    }
                }
                lookup(&out)
            };
            let equivariant = g
                .generators()
                .iter()
                .all(|&s| elems.iter().all(|&x| apply(g.conj(x, s)) == g.conj(apply(x), s)));
            if equivariant {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn endo_field_size_matches_brute_force() {
        for s in ["Sym(4)", "Alt(4)", "Sym(3)", "KleinCp3(3)", "Dih(5)", "Pow(Cyc(2),2)"] {
            let g = group(s);
            for m in g.minimal_normal_subgroups().iter() {
                if m.is_abelian(&g) {
                    assert_eq!(endo_params(&g, m).unwrap().q, brute_endo_count(&g, m), "{s}");
                }
            }
        }
    }

    #[test]
    fn quotient_projection_is_a_homomorphism() {
        let g = group("Sym(4)");
        let v4 = g.minimal_normal_subgroups()[0].clone();
        let q = Quotient::new(&g, &v4).unwrap();
        assert_eq!(q.group.order(), 6);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(
                    q.projection[g.mul(a, b) as usize],
                    q.group.mul(q.projection[a as usize], q.projection[b as usize])
                );
            }
        }
        let not_normal = g.closure(&[g.element("(12)").unwrap()]);
        assert!(Quotient::new(&g, &not_normal).is_err());
    }
}
