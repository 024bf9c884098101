use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{Elem, Group, Span};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// Hard stop for lattice enumeration, independent of the order cap.
const MAX_LATTICE: usize = 200_000;

/// A subgroup of a parent group, stored as a member bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    generators: Vec<Elem>,
    normal: bool,
    maximal: Option<bool>,
}

impl Subgroup {
    pub(crate) fn from_span(group: &Group, span: Span, generators: Vec<Elem>) -> Subgroup {
        let normal = group.generators().iter().all(|&g| {
            generators
                .iter()
                .all(|&h| span.set.contains(group.conj(h, g) as usize))
        });
        Subgroup {
            order: span.list.len(),
            members: span.set,
            generators,
            normal,
            maximal: None,
        }
    }

    /// Builds a subgroup from an element list that is already closed.
    pub(crate) fn from_members(group: &Group, members: &[Elem]) -> Subgroup {
        let mut set = FixedBitSet::with_capacity(group.order());
        set.extend(members.iter().map(|&m| m as usize));
        let mut gens = Vec::new();
        let mut span = group.span(&[]);
        for &m in members {
            if !span.set.contains(m as usize) {
                span = group.span_extend(&span, &gens, &[m], usize::MAX);
                gens.push(m);
            }
        }
        debug_assert_eq!(span.set, set, "member list is not a subgroup");
        Subgroup::from_span(group, span, gens)
    }

    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup::from_span(group, group.span(&[]), Vec::new())
    }

    pub fn whole(group: &Group) -> Subgroup {
        let gens = group.generators().to_vec();
        Subgroup::from_span(group, group.span(&gens), gens)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x as usize)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|i| i as Elem)
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// `Some(true)` for subgroups produced by maximal-subgroup enumeration.
    pub fn is_maximal(&self) -> Option<bool> {
        self.maximal
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, group: &Group, other: &Subgroup) -> Subgroup {
        let mut set = self.members.clone();
        set.intersect_with(&other.members);
        let members: Vec<Elem> = set.ones().map(|i| i as Elem).collect();
        Subgroup::from_members(group, &members)
    }

    pub fn is_abelian(&self, group: &Group) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| group.mul(a, b) == group.mul(b, a))
        })
    }

    /// Deterministic ordering key: order, then the sorted member list.
    pub fn sort_key(&self) -> (usize, Vec<Elem>) {
        (self.order, self.elements().collect())
    }

    pub(crate) fn as_span(&self) -> Span {
        Span {
            set: self.members.clone(),
            list: self.elements().collect(),
        }
    }
}

fn sort_subgroups(list: &mut [Subgroup]) {
    list.sort_by_cached_key(|s| s.sort_key());
}

impl Group {
    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[Elem]) -> Subgroup {
        let mut ngens = gens.to_vec();
        let mut span = self.span(&ngens);
        loop {
            let mut added = false;
            for &g in self.generators() {
                let mut i = 0;
                while i < ngens.len() {
                    let c = self.conj(ngens[i], g);
                    if !span.set.contains(c as usize) {
                        span = self.span_extend(&span, &ngens, &[c], usize::MAX);
                        ngens.push(c);
                        added = true;
                    }
                    i += 1;
                }
            }
            if !added {
                break;
            }
        }
        Subgroup::from_span(self, span, ngens)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let comms: Vec<Elem> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .filter(|&c| c != 0)
            .collect();
        self.normal_closure(&comms)
    }

    /// Whether the derived series reaches the trivial group.
    pub fn is_soluble(&self) -> bool {
        let mut members: Vec<Elem> = self.elements().collect();
        loop {
            if members.len() == 1 {
                return true;
            }
            let sub = Subgroup::from_members(self, &members);
            let gens = sub.generators();
            let comms: Vec<Elem> = gens
                .iter()
                .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.commutator(a, b))
                .collect();
            // normal closure inside `sub`
            let mut ngens = comms.clone();
            let mut span = self.span(&ngens);
            loop {
                let mut added = false;
                for &g in gens {
                    let mut i = 0;
                    while i < ngens.len() {
                        let c = self.conj(ngens[i], g);
                        if !span.set.contains(c as usize) {
                            span = self.span_extend(&span, &ngens, &[c], usize::MAX);
                            ngens.push(c);
                            added = true;
                        }
                        i += 1;
                    }
                }
                if !added {
                    break;
                }
            }
            if span.len() == members.len() {
                return false;
            }
            members = span.list;
            members.sort_unstable();
        }
    }

    /// All subgroups, by joining cyclic subgroups of prime-power order.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        Caps::check(self.caps().subgroups, self.order(), "subgroup enumeration")?;
        let mut cyclic: Vec<Elem> = Vec::new();
        let mut seen_cyclic: HashSet<FixedBitSet> = HashSet::new();
        for g in self.elements().skip(1) {
            let ord = self.element_order(g);
            if !is_prime_power(ord) {
                continue;
            }
            if seen_cyclic.insert(self.span(&[g]).set) {
                cyclic.push(g);
            }
        }
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut list: Vec<(Span, Vec<Elem>)> = Vec::new();
        let trivial = self.span(&[]);
        seen.insert(trivial.set.clone());
        list.push((trivial, Vec::new()));
        let mut i = 0;
        while i < list.len() {
            for &g in &cyclic {
                let (span, gens) = &list[i];
                if span.set.contains(g as usize) {
                    continue;
                }
                let joined = self.span_extend(span, gens, &[g], usize::MAX);
                if seen.insert(joined.set.clone()) {
                    let mut jgens = gens.clone();
                    jgens.push(g);
                    list.push((joined, jgens));
                    if list.len() > MAX_LATTICE {
                        return Err(Error::cap("subgroup lattice size", MAX_LATTICE, list.len()));
                    }
                }
            }
            i += 1;
        }
        let mut out: Vec<Subgroup> = list
            .into_iter()
            .map(|(span, gens)| Subgroup::from_span(self, span, gens))
            .collect();
        sort_subgroups(&mut out);
        Ok(out)
    }

    /// The maximal proper subgroups, sorted by order then member list.
    pub fn maximal_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        if let Some(m) = self.cache.maximal.get() {
            return Ok(m.clone());
        }
        let all = self.all_subgroups()?;
        let proper: Vec<&Subgroup> = all.iter().filter(|s| s.order() < self.order()).collect();
        let mut maximal: Vec<Subgroup> = proper
            .iter()
            .filter(|h| {
                !proper
                    .iter()
                    .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
            })
            .map(|h| {
                let mut h = (*h).clone();
                h.maximal = Some(true);
                h
            })
            .collect();
        sort_subgroups(&mut maximal);
        Ok(self.cache.maximal.get_or_init(|| Arc::new(maximal)).clone())
    }

    /// Intersection of all maximal subgroups.
    pub fn frattini(&self) -> Result<Subgroup> {
        let maximal = self.maximal_subgroups()?;
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert_range(..);
        for m in maximal.iter() {
            set.intersect_with(m.members());
        }
        let members: Vec<Elem> = set.ones().map(|i| i as Elem).collect();
        Ok(Subgroup::from_members(self, &members))
    }

    /// All normal subgroups, as joins of normal closures of conjugacy classes.
    pub fn normal_subgroups(&self) -> Arc<Vec<Subgroup>> {
        self.cache
            .normal
            .get_or_init(|| {
                let classes = self.conjugacy_classes();
                let mut closures: Vec<Subgroup> = Vec::new();
                let mut seen: HashSet<FixedBitSet> = HashSet::new();
                for &r in classes.reps().iter().skip(1) {
                    let n = self.normal_closure(&[r]);
                    if seen.insert(n.members().clone()) {
                        closures.push(n);
                    }
                }
                let trivial = Subgroup::trivial(self);
                let mut seen: HashSet<FixedBitSet> = HashSet::new();
                seen.insert(trivial.members().clone());
                let mut list = vec![trivial];
                let mut i = 0;
                while i < list.len() {
                    for n in &closures {
                        if n.is_subgroup_of(&list[i]) {
                            continue;
                        }
                        let base = &list[i];
                        let span = self.span_extend(&base.as_span(), base.generators(), n.generators(), usize::MAX);
                        if seen.insert(span.set.clone()) {
                            let mut gens = base.generators().to_vec();
                            gens.extend_from_slice(n.generators());
                            list.push(Subgroup::from_span(self, span, gens));
                        }
                    }
                    i += 1;
                }
                sort_subgroups(&mut list);
                Arc::new(list)
            })
            .clone()
    }

    /// Minimal normal subgroups: minimal members among the normal closures
    /// of prime-order elements.
    pub fn minimal_normal_subgroups(&self) -> Arc<Vec<Subgroup>> {
        self.cache
            .minimal_normal
            .get_or_init(|| {
                let classes = self.conjugacy_classes();
                let mut cands: Vec<Subgroup> = Vec::new();
                let mut seen: HashSet<FixedBitSet> = HashSet::new();
                for &r in classes.reps() {
                    let ord = self.element_order(r);
                    if !crate::group::spec::is_prime(ord as u32) {
                        continue;
                    }
                    let n = self.normal_closure(&[r]);
                    if seen.insert(n.members().clone()) {
                        cands.push(n);
                    }
                }
                let mut minimal: Vec<Subgroup> = cands
                    .iter()
                    .filter(|n| {
                        !cands
                            .iter()
                            .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
                    })
                    .cloned()
                    .collect();
                sort_subgroups(&mut minimal);
                Arc::new(minimal)
            })
            .clone()
    }
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n % d == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::group;

    fn orders(list: &[Subgroup]) -> Vec<usize> {
        list.iter().map(|s| s.order()).collect()
    }

    #[test]
    fn closure_examples() {
        let g = group("Sym(4)");
        let t = g.element("(12)").unwrap();
        let c = g.element("(1234)").unwrap();
        assert_eq!(g.closure(&[t, c]).order(), 24);
        let triv = g.closure(&[]);
        assert_eq!(triv.order(), 1);
        assert!(triv.contains(0));
        let v4 = g.closure(&[g.element("(12)(34)").unwrap(), g.element("(13)(24)").unwrap()]);
        // hand closure: identity plus the three double transpositions
        let expected: Vec<Elem> = ["()", "(12)(34)", "(13)(24)", "(14)(23)"]
            .iter()
            .map(|l| g.element(l).unwrap())
            .collect();
        let mut got: Vec<Elem> = v4.elements().collect();
        let mut exp = expected.clone();
        got.sort();
        exp.sort();
        assert_eq!(got, exp);
        assert!(v4.is_normal());
    }

    #[test]
    fn closure_is_idempotent() {
        let g = group("SL2(4)");
        for (a, b) in [(3, 9), (1, 2), (17, 40)] {
            let h = g.closure(&[a, b]);
            let members: Vec<Elem> = h.elements().collect();
            assert_eq!(g.closure(&members).members(), h.members());
        }
    }

    /// Oracle: all subsets of size <= 2 closed, then joined until stable.
    fn brute_lattice(g: &Group) -> Vec<FixedBitSet> {
        let mut set: HashSet<FixedBitSet> = HashSet::new();
        for a in g.elements() {
            for b in g.elements() {
                set.insert(g.span(&[a, b]).set);
            }
        }
        loop {
            let cur: Vec<FixedBitSet> = set.iter().cloned().collect();
            let mut grew = false;
            for x in &cur {
                for y in &cur {
                    let gens: Vec<Elem> = x.union(y).map(|i| i as Elem).collect();
                    if set.insert(g.span(&gens).set) {
                        grew = true;
                    }
                }
            }
            if !grew {
                let mut out: Vec<FixedBitSet> = set.into_iter().collect();
                out.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
                return out;
            }
        }
    }

    #[test]
    fn lattice_matches_brute_force() {
        for s in ["Sym(4)", "Dih(4)", "Cyc(12)", "Alt(4)"] {
            let g = group(s);
            let ours: Vec<FixedBitSet> = g
                .all_subgroups()
                .unwrap()
                .into_iter()
                .map(|h| h.members().clone())
                .collect();
            assert_eq!(ours, brute_lattice(&g), "{s}");
        }
    }

    #[test]
    fn maximal_subgroup_examples() {
        let s4 = group("Sym(4)");
        assert_eq!(orders(&s4.maximal_subgroups().unwrap()), vec![6, 6, 6, 6, 8, 8, 8, 12]);
        assert!(s4.maximal_subgroups().unwrap().iter().all(|m| m.is_maximal() == Some(true)));
        assert_eq!(orders(&group("Cyc(6)").maximal_subgroups().unwrap()), vec![2, 3]);
        let sl = group("SL2(4)");
        let mut counts = std::collections::BTreeMap::new();
        for m in sl.maximal_subgroups().unwrap().iter() {
            *counts.entry(m.order()).or_insert(0) += 1;
        }
        assert_eq!(counts.into_iter().collect::<Vec<_>>(), vec![(6, 10), (10, 6), (12, 5)]);
    }

    #[test]
    fn maximal_subgroups_respect_cap() {
        let caps = Caps {
            subgroups: 10,
            ..Caps::default()
        };
        let g = crate::group::build_group(&"Sym(4)".parse().unwrap(), &caps).unwrap();
        assert!(matches!(g.maximal_subgroups(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(group("Sym(4)").frattini().unwrap().order(), 1);
        assert_eq!(group("Cyc(4)").frattini().unwrap().order(), 2);
        let d4 = group("Dih(4)");
        let f = d4.frattini().unwrap();
        assert_eq!(f.order(), 2);
        let r2 = d4.element("r^2").unwrap();
        assert!(f.contains(r2));
        assert!(f.is_normal());
        assert_eq!(group("Cyc(1)").frattini().unwrap().order(), 1);
    }

    #[test]
    fn frattini_elements_are_non_generators() {
        for s in ["Dih(4)", "Cyc(8)", "Dir(Cyc(4),Cyc(2))", "Dih(8)"] {
            let g = group(s);
            let f = g.frattini().unwrap();
            for phi in f.elements() {
                for x in g.elements() {
                    for y in g.elements() {
                        if g.generates(&[x, y, phi]) {
                            assert!(g.generates(&[x, y]), "{s}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_normal_examples() {
        let s4 = group("Sym(4)");
        let mn = s4.minimal_normal_subgroups();
        assert_eq!(orders(&mn), vec![4]);
        assert!(mn[0].contains(s4.element("(12)(34)").unwrap()));
        assert_eq!(orders(&group("SL2(4)").minimal_normal_subgroups()), vec![60]);
        assert_eq!(orders(&group("Cyc(6)").minimal_normal_subgroups()), vec![2, 3]);
        assert_eq!(orders(&group("KleinCp3(3)").minimal_normal_subgroups()), vec![3, 3, 3]);
    }

    #[test]
    fn normal_subgroups_of_s4() {
        assert_eq!(orders(&group("Sym(4)").normal_subgroups()), vec![1, 4, 12, 24]);
        assert_eq!(orders(&group("Alt(5)").normal_subgroups()), vec![1, 60]);
    }

    #[test]
    fn solubility() {
        assert!(group("Sym(4)").is_soluble());
        assert!(group("KleinCp3(3)").is_soluble());
        assert!(!group("Alt(5)").is_soluble());
        assert!(!group("Sym(5)").is_soluble());
        assert!(group("Cyc(1)").is_soluble());
        assert_eq!(group("Sym(4)").derived_subgroup().order(), 12);
    }

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(8));
        assert!(is_prime_power(7));
        assert!(!is_prime_power(6));
        assert!(!is_prime_power(1));
    }
}
