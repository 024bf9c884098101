use std::sync::Arc;

use super::{Elem, Group};

/// Conjugacy classes together with a spanning forest of conjugation steps,
/// so any element can be reached from its class representative.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    class_of: Vec<u32>,
    reps: Vec<Elem>,
    sizes: Vec<usize>,
    /// For a non-representative `v`: `(parent, generator)` with
    /// `v = generator^-1 * parent * generator`.
    step: Vec<Option<(Elem, Elem)>>,
    /// Elements in discovery order; parents precede children.
    order: Vec<Elem>,
}

impl ConjugacyClasses {
    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x as usize] as usize
    }

    /// Class representatives; each is the smallest index in its class.
    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn rep_of(&self, x: Elem) -> Elem {
        self.reps[self.class_of(x)]
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn step(&self, x: Elem) -> Option<(Elem, Elem)> {
        self.step[x as usize]
    }

    /// All elements, each after the element it is conjugated from.
    pub fn discovery_order(&self) -> &[Elem] {
        &self.order
    }

    /// Some `c` with `x = c^-1 * rep * c`.
    pub fn conjugator(&self, group: &Group, x: Elem) -> Elem {
        let mut chain = Vec::new();
        let mut cur = x;
        while let Some((parent, g)) = self.step(cur) {
            chain.push(g);
            cur = parent;
        }
        chain.iter().rev().fold(0, |acc, &g| group.mul(acc, g))
    }
}

impl Group {
    pub fn conjugacy_classes(&self) -> Arc<ConjugacyClasses> {
        self.cache
            .classes
            .get_or_init(|| {
                let n = self.order();
                let gens = self.generators().to_vec();
                let mut class_of = vec![u32::MAX; n];
                let mut step = vec![None; n];
                let mut reps = Vec::new();
                let mut sizes = Vec::new();
                let mut order = Vec::with_capacity(n);
                for r in 0..n as Elem {
                    if class_of[r as usize] != u32::MAX {
                        continue;
                    }
                    let id = reps.len() as u32;
                    reps.push(r);
                    class_of[r as usize] = id;
                    let start = order.len();
                    order.push(r);
                    let mut i = start;
                    while i < order.len() {
                        let a = order[i];
                        for &g in &gens {
                            let b = self.conj(a, g);
                            if class_of[b as usize] == u32::MAX {
                                class_of[b as usize] = id;
                                step[b as usize] = Some((a, g));
                                order.push(b);
                            }
                        }
                        i += 1;
                    }
                    sizes.push(order.len() - start);
                }
                Arc::new(ConjugacyClasses {
                    class_of,
                    reps,
                    sizes,
                    step,
                    order,
                })
            })
            .clone()
    }
}

#[cfg(test)]
mod tests {
    use crate::test_support::group;

    #[test]
    fn class_counts() {
        assert_eq!(group("Sym(4)").conjugacy_classes().len(), 5);
        assert_eq!(group("Sym(5)").conjugacy_classes().len(), 7);
        assert_eq!(group("SL2(4)").conjugacy_classes().len(), 5);
        assert_eq!(group("SL2(8)").conjugacy_classes().len(), 9);
        assert_eq!(group("Cyc(7)").conjugacy_classes().len(), 7);
    }

    #[test]
    fn conjugators_reach_every_element() {
        let g = group("Sym(4)");
        let cc = g.conjugacy_classes();
        for x in g.elements() {
            let c = cc.conjugator(&g, x);
            assert_eq!(g.conj(cc.rep_of(x), c), x);
        }
        let sizes: usize = (0..cc.len()).map(|c| cc.size(c)).sum();
        assert_eq!(sizes, 24);
    }
}
