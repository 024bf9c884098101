use std::collections::HashMap;
use std::sync::Arc;

use super::gf2m::Gf2m;
use super::perm::{all_permutations, cycle_label, inverse, is_even};
use super::{klein_decode, klein_encode, klein_inverts, matrix_key, Elem, Group, GroupSpec, Repr};
use crate::caps::Caps;
use crate::error::{Error, Result};

const AXIOM_SAMPLES: usize = 100_000;

/// Constructs and verifies the group described by `spec`.
pub fn build_group(spec: &GroupSpec, caps: &Caps) -> Result<Arc<Group>> {
    spec.validate()?;
    let order = spec.order().unwrap_or(u128::MAX);
    if order > caps.order as u128 {
        return Err(Error::cap("group order", caps.order, order.min(usize::MAX as u128) as usize));
    }
    let group = match spec {
        GroupSpec::Sym(n) => permutation_group(spec, all_permutations(*n as usize), caps),
        GroupSpec::Alt(n) => {
            let perms = all_permutations(*n as usize)
                .into_iter()
                .filter(|p| is_even(p))
                .collect();
            permutation_group(spec, perms, caps)
        }
        GroupSpec::Cyc(n) => cyclic(spec, *n, caps),
        GroupSpec::Dih(n) => dihedral(spec, *n, caps),
        GroupSpec::Sl2(q) => sl2(spec, q.trailing_zeros(), caps)?,
        GroupSpec::Dir(a, b) => {
            let fa = build_group(a, caps)?;
            let fb = build_group(b, caps)?;
            direct(spec, vec![fa, fb], caps)
        }
        GroupSpec::Pow(a, k) => {
            let f = build_group(a, caps)?;
            direct(spec, vec![f; *k as usize], caps)
        }
        GroupSpec::KleinCp3(primes) => klein(spec, primes, caps),
    };
    group.verify_axioms(AXIOM_SAMPLES)?;
    Ok(Arc::new(group))
}

fn permutation_group(spec: &GroupSpec, perms: Vec<Box<[u8]>>, caps: &Caps) -> Group {
    let degree = perms[0].len();
    let index: HashMap<Box<[u8]>, Elem> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as Elem))
        .collect();
    let inv = perms.iter().map(|p| index[&inverse(p)]).collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    let order = perms.len();
    Group::assemble(
        spec.to_string(),
        Some(spec.clone()),
        Repr::Perm {
            degree,
            perms,
            index,
        },
        order,
        labels,
        inv,
        *caps,
    )
}

fn power_label(base: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn cyclic(spec: &GroupSpec, n: u32, caps: &Caps) -> Group {
    let labels = (0..n)
        .map(|k| if k == 0 { "1".to_string() } else { power_label("a", k) })
        .collect();
    let inv = (0..n).map(|k| (n - k) % n).collect();
    Group::assemble(spec.to_string(), Some(spec.clone()), Repr::Cyclic(n), n as usize, labels, inv, *caps)
}

fn dihedral(spec: &GroupSpec, n: u32, caps: &Caps) -> Group {
    // element i + n*j is r^i s^j
    let order = 2 * n;
    let labels = (0..order)
        .map(|e| {
            let (i, j) = (e % n, e / n);
            let mut l = power_label("r", i);
            if j == 1 {
                l.push('s');
            }
            if l.is_empty() {
                l.push('1');
            }
            l
        })
        .collect();
    let inv = (0..order)
        .map(|e| {
            let (i, j) = (e % n, e / n);
            if j == 0 {
                (n - i) % n
            } else {
                e
            }
        })
        .collect();
    Group::assemble(
        spec.to_string(),
        Some(spec.clone()),
        Repr::Dihedral(n),
        order as usize,
        labels,
        inv,
        *caps,
    )
}

fn sl2(spec: &GroupSpec, degree: u32, caps: &Caps) -> Result<Group> {
    let field = Gf2m::new(degree)?;
    let q = field.size() as u8;
    let identity = [1u8, 0, 0, 1];
    let mut mats = vec![identity];
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = [a, b, c, d];
                    // char 2: det = ad + bc
                    if m != identity && field.add(field.mul(a, d), field.mul(b, c)) == 1 {
                        mats.push(m);
                    }
                }
            }
        }
    }
    let qq = field.size();
    let mut index = vec![Elem::MAX; qq * qq * qq * qq];
    for (i, &m) in mats.iter().enumerate() {
        index[matrix_key(&field, m)] = i as Elem;
    }
    let inv = mats
        .iter()
        .map(|&[a, b, c, d]| index[matrix_key(&field, [d, b, c, a])])
        .collect();
    let labels = mats
        .iter()
        .map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]))
        .collect();
    let order = mats.len();
    Ok(Group::assemble(
        spec.to_string(),
        Some(spec.clone()),
        Repr::Matrix { field, mats, index },
        order,
        labels,
        inv,
        *caps,
    ))
}

fn direct(spec: &GroupSpec, factors: Vec<Arc<Group>>, caps: &Caps) -> Group {
    let mut strides = vec![1usize; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * factors[i + 1].order();
    }
    let order: usize = factors.iter().map(|f| f.order()).product();
    let decode = |e: usize| -> Vec<Elem> {
        let mut e = e;
        strides
            .iter()
            .map(|&s| {
                let x = e / s;
                e %= s;
                x as Elem
            })
            .collect()
    };
    let mut labels = Vec::with_capacity(order);
    let mut inv = Vec::with_capacity(order);
    for e in 0..order {
        let parts = decode(e);
        let names: Vec<&str> = parts.iter().zip(&factors).map(|(&x, f)| f.label(x)).collect();
        labels.push(format!("({})", names.join(",")));
        inv.push(
            parts
                .iter()
                .zip(&factors)
                .zip(&strides)
                .map(|((&x, f), &s)| f.inv(x) as usize * s)
                .sum::<usize>() as Elem,
        );
    }
    Group::assemble(
        spec.to_string(),
        Some(spec.clone()),
        Repr::Direct { factors, strides },
        order,
        labels,
        inv,
        *caps,
    )
}

const KLEIN_H_LABELS: [&str; 4] = ["1", "h1", "h2", "h3"];

fn klein(spec: &GroupSpec, primes: &[u32], caps: &Caps) -> Group {
    let order = 4 * primes.iter().map(|&p| (p as usize).pow(3)).product::<usize>();
    let mut labels = Vec::with_capacity(order);
    let mut inv = Vec::with_capacity(order);
    for e in 0..order {
        let c = klein_decode(primes, e);
        let parts: Vec<String> = primes
            .iter()
            .enumerate()
            .map(|(s, p)| format!("({},{},{})_{p}", c.n[3 * s], c.n[3 * s + 1], c.n[3 * s + 2]))
            .collect();
        labels.push(format!("({};{})", parts.join(","), KLEIN_H_LABELS[c.h as usize]));
        // (n;h)^-1 = (-act_h(n); h)
        let mut ic = c;
        for (s, &p) in primes.iter().enumerate() {
            for j in 0..3 {
                let k = 3 * s + j;
                let v = if klein_inverts(c.h, j) { c.n[k] } else { (p - c.n[k]) % p };
                ic.n[k] = v;
            }
        }
        inv.push(klein_encode(primes, &ic) as Elem);
    }
    Group::assemble(
        spec.to_string(),
        Some(spec.clone()),
        Repr::Klein {
            primes: primes.to_vec(),
        },
        order,
        labels,
        inv,
        *caps,
    )
}
