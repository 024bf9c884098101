//! Finite groups with enumerated elements.
//!
//! Elements are indices `0..order` with `0` the identity. Small groups carry a
//! dense multiplication table; larger ones multiply through their concrete
//! representation (permutations, matrices, coordinate tuples, cosets).

mod aut;
mod build;
mod chief;
mod classes;
pub mod gf2m;
mod perm;
mod spec;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use aut::{pair_aut_equivalent, AutClasses, Automorphisms};
pub use build::build_group;
pub use chief::{endo_params, ChiefFactor, ChiefSeries, EndoParams, Quotient};
pub use classes::ConjugacyClasses;
pub use spec::GroupSpec;
pub use subgroup::Subgroup;

use crate::caps::Caps;
use crate::error::{Error, Result};
use gf2m::Gf2m;

/// Index of a group element.
pub type Elem = u32;

pub(crate) enum Repr {
    Cyclic(u32),
    Dihedral(u32),
    Perm {
        degree: usize,
        perms: Vec<Box<[u8]>>,
        index: HashMap<Box<[u8]>, Elem>,
    },
    Matrix {
        field: Gf2m,
        mats: Vec<[u8; 4]>,
        index: Vec<Elem>,
    },
    /// Mixed-radix direct product; the first factor is most significant.
    Direct {
        factors: Vec<Arc<Group>>,
        strides: Vec<usize>,
    },
    Klein {
        primes: Vec<u32>,
    },
    Quotient {
        parent: Arc<Group>,
        reps: Vec<Elem>,
        coset: Vec<Elem>,
    },
}

pub(crate) const KLEIN_MAX_PRIMES: usize = 6;

/// Coordinates of an element of a `KleinCp3` group: three exponents per
/// prime (prime-major) and the index of the `C_2^2` part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KleinCoords {
    pub h: u8,
    pub n: [u32; 3 * KLEIN_MAX_PRIMES],
    pub len: usize,
}

impl KleinCoords {
    pub fn coord(&self, prime_index: usize, j: usize) -> u32 {
        self.n[3 * prime_index + j]
    }
}

/// Whether `h` in `C_2^2 = {1, h1, h2, h3}` inverts coordinate `j`.
/// `h1` inverts coordinates 2 and 3, `h2` inverts 1 and 3, `h3` inverts 1 and 2.
#[inline]
pub(crate) fn klein_inverts(h: u8, j: usize) -> bool {
    match j {
        0 => h & 2 != 0,
        1 => h & 1 != 0,
        _ => ((h & 1) ^ (h >> 1)) == 1,
    }
}

fn klein_decode(primes: &[u32], mut e: usize) -> KleinCoords {
    let mut out = KleinCoords {
        h: (e % 4) as u8,
        n: [0; 3 * KLEIN_MAX_PRIMES],
        len: 3 * primes.len(),
    };
    e /= 4;
    for (s, &p) in primes.iter().enumerate() {
        for j in 0..3 {
            out.n[3 * s + j] = (e % p as usize) as u32;
            e /= p as usize;
        }
    }
    out
}

fn klein_encode(primes: &[u32], c: &KleinCoords) -> usize {
    let mut e = 0usize;
    for (s, &p) in primes.iter().enumerate().rev() {
        for j in (0..3).rev() {
            e = e * p as usize + c.n[3 * s + j] as usize;
        }
    }
    e * 4 + c.h as usize
}

impl Repr {
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Repr::Cyclic(n) => (a + b) % n,
            Repr::Dihedral(n) => {
                let (ia, ja) = (a % n, a / n);
                let (ib, jb) = (b % n, b / n);
                let i = if ja == 0 { (ia + ib) % n } else { (ia + n - ib) % n };
                i + n * (ja ^ jb)
            }
            Repr::Perm { perms, index, .. } => {
                let (p, q) = (&perms[a as usize], &perms[b as usize]);
                let r: Box<[u8]> = p.iter().map(|&i| q[i as usize]).collect();
                index[&r]
            }
            Repr::Matrix { field, mats, index } => {
                let x = mats[a as usize];
                let y = mats[b as usize];
                let m = |i: usize, j: usize| {
                    field.add(field.mul(x[2 * i], y[j]), field.mul(x[2 * i + 1], y[2 + j]))
                };
                index[matrix_key(field, [m(0, 0), m(0, 1), m(1, 0), m(1, 1)])]
            }
            Repr::Direct { factors, strides } => {
                let (mut a, mut b) = (a as usize, b as usize);
                let mut out = 0usize;
                for (f, &stride) in factors.iter().zip(strides) {
                    let (xa, xb) = (a / stride, b / stride);
                    a %= stride;
                    b %= stride;
                    out += f.mul(xa as Elem, xb as Elem) as usize * stride;
                }
                out as Elem
            }
            Repr::Klein { primes } => {
                let x = klein_decode(primes, a as usize);
                let y = klein_decode(primes, b as usize);
                let mut z = x;
                z.h = x.h ^ y.h;
                for (s, &p) in primes.iter().enumerate() {
                    for j in 0..3 {
                        let k = 3 * s + j;
                        let m = if klein_inverts(x.h, j) && y.n[k] != 0 {
                            p - y.n[k]
                        } else {
                            y.n[k]
                        };
                        z.n[k] = (x.n[k] + m) % p;
                    }
                }
                klein_encode(primes, &z) as Elem
            }
            Repr::Quotient {
                parent,
                reps,
                coset,
            } => coset[parent.mul(reps[a as usize], reps[b as usize]) as usize],
        }
    }
}

pub(crate) fn matrix_key(field: &Gf2m, m: [u8; 4]) -> usize {
    let q = field.size();
    ((m[0] as usize * q + m[1] as usize) * q + m[2] as usize) * q + m[3] as usize
}

#[derive(Default)]
struct Cache {
    generators: OnceLock<Vec<Elem>>,
    classes: OnceLock<Arc<ConjugacyClasses>>,
    maximal: OnceLock<Arc<Vec<Subgroup>>>,
    normal: OnceLock<Arc<Vec<Subgroup>>>,
    minimal_normal: OnceLock<Arc<Vec<Subgroup>>>,
    labels: OnceLock<HashMap<String, Elem>>,
}

/// A finite group on the element indices `0..order`.
pub struct Group {
    name: String,
    spec: Option<GroupSpec>,
    order: usize,
    repr: Repr,
    table: Option<Vec<u16>>,
    inv: Vec<Elem>,
    labels: Vec<String>,
    caps: Caps,
    cache: Cache,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// Result of a subgroup closure: members in discovery order plus a bitset.
#[derive(Clone, Debug)]
pub struct Span {
    pub set: FixedBitSet,
    pub list: Vec<Elem>,
}

impl Span {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

impl Group {
    pub(crate) fn assemble(
        name: String,
        spec: Option<GroupSpec>,
        repr: Repr,
        order: usize,
        labels: Vec<String>,
        inv: Vec<Elem>,
        caps: Caps,
    ) -> Group {
        let mut group = Group {
            name,
            spec,
            order,
            repr,
            table: None,
            inv,
            labels,
            caps,
            cache: Cache::default(),
        };
        if order <= caps.table.min(u16::MAX as usize) {
            let mut table = vec![0u16; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = group.repr.mul(a as Elem, b as Elem) as u16;
                }
            }
            group.table = Some(table);
        }
        group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The constructor expression, `None` for derived groups such as quotients.
    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a as usize * self.order + b as usize] as Elem,
            None => self.repr.mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conj(&self, a: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut out = 0;
        for _ in 0..k {
            out = self.mul(out, a);
        }
        out
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its label.
    pub fn find(&self, label: &str) -> Option<Elem> {
        let map = self.cache.labels.get_or_init(|| {
            self.labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), i as Elem))
                .collect()
        });
        map.get(label).copied()
    }

    /// Like [`Group::find`] but returns an error naming the missing label.
    pub fn element(&self, label: &str) -> Result<Elem> {
        self.find(label)
            .ok_or_else(|| Error::Precondition(format!("no element `{label}` in {}", self.name)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Permutation images (0-based) when the group is a permutation group.
    pub fn as_permutation(&self, a: Elem) -> Option<&[u8]> {
        match &self.repr {
            Repr::Perm { perms, .. } => Some(&perms[a as usize]),
            _ => None,
        }
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    /// Coordinates of an element when this is a `KleinCp3` group.
    pub fn klein_coords(&self, a: Elem) -> Option<KleinCoords> {
        match &self.repr {
            Repr::Klein { primes } => Some(klein_decode(primes, a as usize)),
            _ => None,
        }
    }

    /// Element with the given `KleinCp3` coordinates.
    pub fn klein_element(&self, coords: &KleinCoords) -> Option<Elem> {
        match &self.repr {
            Repr::Klein { primes } if coords.len == 3 * primes.len() => {
                Some(klein_encode(primes, coords) as Elem)
            }
            _ => None,
        }
    }

    pub fn klein_primes(&self) -> Option<&[u32]> {
        match &self.repr {
            Repr::Klein { primes } => Some(primes),
            _ => None,
        }
    }

    // ---- closure ---------------------------------------------------------

    /// The subgroup generated by `gens`. Stops early once more than `limit`
    /// elements are found; the returned span is then partial.
    pub fn span_limited(&self, gens: &[Elem], limit: usize) -> Span {
        let mut set = FixedBitSet::with_capacity(self.order);
        let mut list = Vec::with_capacity(16);
        set.insert(0);
        list.push(0);
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !set.put(b as usize) {
                    list.push(b);
                    if list.len() > limit {
                        return Span { set, list };
                    }
                }
            }
            i += 1;
        }
        Span { set, list }
    }

    pub fn span(&self, gens: &[Elem]) -> Span {
        self.span_limited(gens, usize::MAX)
    }

    /// Closure of `base` (a subgroup generated by `base_gens`) with `extra`.
    pub fn span_extend(&self, base: &Span, base_gens: &[Elem], extra: &[Elem], limit: usize) -> Span {
        let mut set = base.set.clone();
        let mut list = base.list.clone();
        let old = list.len();
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            let gens: &mut dyn Iterator<Item = &Elem> = if i < old {
                &mut extra.iter()
            } else {
                &mut base_gens.iter().chain(extra.iter())
            };
            for &g in gens {
                let b = self.mul(a, g);
                if !set.put(b as usize) {
                    list.push(b);
                    if list.len() > limit {
                        return Span { set, list };
                    }
                }
            }
            i += 1;
        }
        Span { set, list }
    }

    /// Whether `gens` generate the whole group.
    pub fn generates(&self, gens: &[Elem]) -> bool {
        if self.order == 1 {
            return true;
        }
        // A subgroup with more than half of the elements is everything.
        self.span_limited(gens, self.order / 2).len() > self.order / 2
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[Elem]) -> Subgroup {
        Subgroup::from_span(self, self.span(gens), gens.to_vec())
    }

    /// A small deterministic generating set.
    pub fn generators(&self) -> &[Elem] {
        self.cache.generators.get_or_init(|| self.find_generators())
    }

    fn find_generators(&self) -> Vec<Elem> {
        if self.order == 1 {
            return Vec::new();
        }
        if let Repr::Direct { factors, strides } = &self.repr {
            let mut gens = Vec::new();
            for (f, &stride) in factors.iter().zip(strides) {
                gens.extend(f.generators().iter().map(|&g| g * stride as Elem));
            }
            return gens;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x6765_6e73);
        if let Some(g) = (1..self.order as Elem).find(|&g| self.element_order(g) == self.order) {
            return vec![g];
        }
        for _ in 0..256 {
            let a = rng.random_range(1..self.order as Elem);
            let b = rng.random_range(1..self.order as Elem);
            if self.generates(&[a, b]) {
                return vec![a.min(b), a.max(b)];
            }
        }
        let mut order: Vec<Elem> = (1..self.order as Elem).collect();
        order.shuffle(&mut rng);
        let mut gens = Vec::new();
        let mut span = self.span(&[]);
        for g in order {
            if span.set.contains(g as usize) {
                continue;
            }
            span = self.span_extend(&span, &gens, &[g], usize::MAX);
            gens.push(g);
            if span.len() == self.order {
                break;
            }
        }
        gens
    }

    /// Verifies the group axioms; exhaustive associativity up to order 200,
    /// `samples` random triples above.
    pub fn verify_axioms(&self, samples: usize) -> Result<()> {
        let n = self.order as Elem;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::Internal(format!("{}: identity law fails at {x}", self.name)));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(Error::Internal(format!("{}: inverse law fails at {x}", self.name)));
            }
        }
        let check = |a: Elem, b: Elem, c: Elem| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::Internal(format!(
                    "{}: associativity fails at ({a},{b},{c})",
                    self.name
                )))
            } else {
                Ok(())
            }
        };
        if self.order <= 200 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6173_736f);
            for _ in 0..samples {
                check(
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                )?;
            }
        }
        Ok(())
    }

    /// Smallest number of extra elements that generate the group together
    /// with `x`, found by increasing-size search.
    pub fn d_rel(&self, x: &[Elem]) -> usize {
        if self.generates(x) {
            return 0;
        }
        let base = self.span(x);
        let n = self.order as Elem;
        // Element choices only matter up to the subgroup already generated.
        let candidates: Vec<Elem> = (0..n).filter(|&g| !base.set.contains(g as usize)).collect();
        let mut size = 1;
        loop {
            if self.search_extension(x, &candidates, size) {
                return size;
            }
            size += 1;
        }
    }

    fn search_extension(&self, x: &[Elem], candidates: &[Elem], size: usize) -> bool {
        fn rec(g: &Group, chosen: &mut Vec<Elem>, start: usize, size: usize, cands: &[Elem]) -> bool {
            if chosen.len() == size {
                return g.generates(chosen);
            }
            for i in start..cands.len() {
                chosen.push(cands[i]);
                let ok = rec(g, chosen, i + 1, size, cands);
                chosen.pop();
                if ok {
                    return true;
                }
            }
            false
        }
        let mut chosen = x.to_vec();
        rec(self, &mut chosen, 0, x.len() + size, candidates)
    }

    /// Elements that commute with `a`.
    pub fn centralizer(&self, a: Elem) -> Subgroup {
        let members: Vec<Elem> = self
            .elements()
            .filter(|&g| self.mul(a, g) == self.mul(g, a))
            .collect();
        Subgroup::from_members(self, &members)
    }
}
