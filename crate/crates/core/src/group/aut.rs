//! Automorphism groups of the supported simple groups and the orbits of
//! generating pairs under them.

use std::collections::VecDeque;

use serde::Serialize;

use super::{matrix_key, perm, Elem, Group, GroupSpec, Repr};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// `Aut(S)` for `S = SL2(2^p)` or `S = Alt(n)`, given by generating
/// permutations of the element indices.
#[derive(Debug, Clone)]
pub struct Automorphisms {
    generators: Vec<Vec<Elem>>,
    order: u64,
}

impl Automorphisms {
    /// Inner automorphisms composed with Frobenius powers for `SL2(2^p)`;
    /// conjugation inside `Sym(n)` for `Alt(n)`.
    pub fn of(g: &Group) -> Result<Automorphisms> {
        let mut generators: Vec<Vec<Elem>> = g
            .generators()
            .iter()
            .map(|&s| g.elements().map(|x| g.conj(x, s)).collect())
            .collect();
        let order = match g.repr() {
            Repr::Matrix { field, mats, index } => {
                let frob = mats
                    .iter()
                    .map(|m| index[matrix_key(field, m.map(|a| field.frobenius(a)))])
                    .collect();
                generators.push(frob);
                g.order() as u64 * field.degree() as u64
            }
            Repr::Perm { degree, perms, index } if matches!(g.spec(), Some(GroupSpec::Alt(_))) => {
                let n = *degree;
                if n == 6 {
                    return Err(Error::Unsupported(
                        "Alt(6) has an exceptional outer automorphism".into(),
                    ));
                }
                if n >= 2 {
                    let mut t: Vec<u8> = (0..n as u8).collect();
                    t.swap(0, 1);
                    let t_inv = perm::inverse(&t);
                    let outer = perms
                        .iter()
                        .map(|x| {
                            let y: Box<[u8]> = (0..n)
                                .map(|i| t[x[t_inv[i] as usize] as usize])
                                .collect();
                            index[&y]
                        })
                        .collect();
                    generators.push(outer);
                }
                match n {
                    0..=2 => 1,
                    3 => 2,
                    _ => factorial(n) as u64,
                }
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "automorphisms of {} are not implemented",
                    g.name()
                )))
            }
        };
        Ok(Automorphisms { generators, order })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    /// Orbit of an element tuple under the automorphism group.
    pub fn orbit(&self, tuple: &[Elem]) -> Vec<Vec<Elem>> {
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(tuple.to_vec());
        queue.push_back(tuple.to_vec());
        let mut out = Vec::new();
        while let Some(t) = queue.pop_front() {
            for a in &self.generators {
                let img: Vec<Elem> = t.iter().map(|&x| a[x as usize]).collect();
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
            out.push(t);
        }
        out.sort();
        out
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Whether some automorphism of `s` maps `a` to `b` componentwise.
pub fn pair_aut_equivalent(s: &Group, a: (Elem, Elem), b: (Elem, Elem)) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    let auts = Automorphisms::of(s)?;
    Ok(auts.orbit(&[a.0, a.1]).binary_search(&vec![b.0, b.1]).is_ok())
}

/// The ordered generating pairs of a simple group partitioned into
/// automorphism classes.
#[derive(Debug, Clone, Serialize)]
pub struct AutClasses {
    pub group_order: usize,
    pub aut_order: u64,
    pub pair_count: usize,
    pub class_count: usize,
    /// Every class has exactly `aut_order` pairs.
    pub free: bool,
    #[serde(skip)]
    class_of: Vec<u32>,
    #[serde(skip)]
    representatives: Vec<(Elem, Elem)>,
}

const NONE: u32 = u32::MAX;

impl AutClasses {
    pub fn compute(s: &Group) -> Result<AutClasses> {
        let n = s.order();
        Caps::check(s.caps().swap, n, "generating-pair enumeration")?;
        let auts = Automorphisms::of(s)?;
        let classes = s.conjugacy_classes();
        // Generating pairs from class representatives, transported by
        // conjugation: <x, y> = G iff <x^c, y^c> = G.
        let mut generating = vec![false; n * n];
        for &r in classes.reps() {
            let row: Vec<Elem> = s.elements().filter(|&y| s.generates(&[r, y])).collect();
            for x in s.elements().filter(|&x| classes.rep_of(x) == r) {
                let c = classes.conjugator(s, x);
                for &y in &row {
                    generating[x as usize * n + s.conj(y, c) as usize] = true;
                }
            }
        }
        let mut parent: Vec<u32> = (0..(n * n) as u32).collect();
        fn find(parent: &mut [u32], mut i: u32) -> u32 {
            while parent[i as usize] != i {
                parent[i as usize] = parent[parent[i as usize] as usize];
                i = parent[i as usize];
            }
            i
        }
        for i in 0..n * n {
            if !generating[i] {
                continue;
            }
            let (x, y) = (i / n, i % n);
            for a in auts.generators() {
                let j = a[x] as usize * n + a[y] as usize;
                let (ri, rj) = (find(&mut parent, i as u32), find(&mut parent, j as u32));
                if ri != rj {
                    parent[ri.max(rj) as usize] = ri.min(rj);
                }
            }
        }
        let mut class_of = vec![NONE; n * n];
        let mut representatives = Vec::new();
        let mut sizes: Vec<u64> = Vec::new();
        let mut root_class = std::collections::HashMap::new();
        for i in 0..n * n {
            if !generating[i] {
                continue;
            }
            let r = find(&mut parent, i as u32);
            let c = *root_class.entry(r).or_insert_with(|| {
                representatives.push(((i / n) as Elem, (i % n) as Elem));
                sizes.push(0);
                representatives.len() as u32 - 1
            });
            sizes[c as usize] += 1;
            class_of[i] = c;
        }
        let pair_count = sizes.iter().sum::<u64>() as usize;
        Ok(AutClasses {
            group_order: n,
            aut_order: auts.order(),
            pair_count,
            class_count: representatives.len(),
            free: sizes.iter().all(|&s| s == auts.order()),
            class_of,
            representatives,
        })
    }

    /// Class of a generating pair; `None` if the pair does not generate.
    pub fn class_of(&self, x: Elem, y: Elem) -> Option<usize> {
        match self.class_of[x as usize * self.group_order + y as usize] {
            NONE => None,
            c => Some(c as usize),
        }
    }

    /// Smallest pair (in index order) of each class.
    pub fn representatives(&self) -> &[(Elem, Elem)] {
        &self.representatives
    }

    /// `pair_count / aut_order`, when the division is exact.
    pub fn delta(&self) -> Option<u64> {
        let p = self.pair_count as u64;
        (p % self.aut_order == 0).then(|| p / self.aut_order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::group;

    /// Oracle: materialize every automorphism as a permutation by closing
    /// the generators under composition.
    fn all_automorphisms(auts: &Automorphisms) -> Vec<Vec<Elem>> {
        let n = auts.generators()[0].len();
        let id: Vec<Elem> = (0..n as Elem).collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for a in auts.generators() {
                let c: Vec<Elem> = list[i].iter().map(|&x| a[x as usize]).collect();
                if seen.insert(c.clone()) {
                    list.push(c);
                }
            }
            i += 1;
        }
        list
    }

    #[test]
    fn automorphism_group_orders() {
        for (s, order) in [("SL2(4)", 120), ("SL2(8)", 1512), ("Alt(5)", 120), ("Alt(4)", 24), ("SL2(2)", 6)] {
            let g = group(s);
            let auts = Automorphisms::of(&g).unwrap();
            assert_eq!(auts.order(), order, "{s}");
            let all = all_automorphisms(&auts);
            assert_eq!(all.len() as u64, order, "{s}");
            for a in &all {
                for x in g.elements().step_by(7) {
                    for y in g.elements().step_by(11) {
                        assert_eq!(a[g.mul(x, y) as usize], g.mul(a[x as usize], a[y as usize]));
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_groups_rejected() {
        assert!(Automorphisms::of(&group("Alt(6)")).is_err());
        assert!(Automorphisms::of(&group("Sym(4)")).is_err());
        assert!(Automorphisms::of(&group("Cyc(5)")).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let g = group("SL2(4)");
        let (x, y) = (g.generators()[0], g.generators()[1]);
        assert!(pair_aut_equivalent(&g, (x, y), (x, y)).unwrap());
        for c in g.elements() {
            assert!(pair_aut_equivalent(&g, (x, y), (g.conj(x, c), g.conj(y, c))).unwrap());
        }
        assert!(!pair_aut_equivalent(&g, (x, y), (y, x)).unwrap() || g.element_order(x) == g.element_order(y));
        assert!(pair_aut_equivalent(&group("Sym(4)"), (1, 2), (1, 3)).is_err());
    }

    #[test]
    fn sl2_4_has_nineteen_classes() {
        let g = group("SL2(4)");
        let classes = AutClasses::compute(&g).unwrap();
        assert_eq!(classes.pair_count, 2280);
        assert_eq!(classes.aut_order, 120);
        assert!(classes.free);
        assert_eq!(classes.class_count, 19);
        assert_eq!(classes.delta(), Some(19));
    }

    /// Oracle: brute-force pair scan with no class transport.
    #[test]
    fn pair_count_matches_brute_force() {
        for s in ["SL2(4)", "Alt(5)", "Alt(4)"] {
            let g = group(s);
            let brute = g
                .elements()
                .flat_map(|x| g.elements().map(move |y| (x, y)))
                .filter(|&(x, y)| g.closure(&[x, y]).order() == g.order())
                .count();
            let classes = AutClasses::compute(&g).unwrap();
            assert_eq!(classes.pair_count, brute, "{s}");
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(classes.class_of(x, y).is_some(), g.generates(&[x, y]));
                }
            }
        }
    }

    #[test]
    fn classes_agree_with_orbits() {
        let g = group("SL2(4)");
        let auts = Automorphisms::of(&g).unwrap();
        let classes = AutClasses::compute(&g).unwrap();
        for &(x, y) in classes.representatives().iter().take(5) {
            let orbit = auts.orbit(&[x, y]);
            assert_eq!(orbit.len() as u64, auts.order());
            let c = classes.class_of(x, y).unwrap();
            assert!(orbit.iter().all(|t| classes.class_of(t[0], t[1]) == Some(c)));
        }
    }
}
