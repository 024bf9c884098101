//! Permutations of `0..n` stored as image arrays.

/// All permutations of `0..n` in lexicographic order of their image arrays.
pub(crate) fn all_permutations(n: usize) -> Vec<Box<[u8]>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone().into_boxed_slice()];
    // Narayana's next-permutation.
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone().into_boxed_slice());
    }
}

pub(crate) fn is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

pub(crate) fn inverse(p: &[u8]) -> Box<[u8]> {
    let mut out = vec![0u8; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j as usize] = i as u8;
    }
    out.into_boxed_slice()
}

/// Cycle notation on the points `1..=n`, e.g. `(12)(34)`; the identity is `()`.
/// Points are comma-separated once `n` exceeds 9.
pub(crate) fn cycle_label(p: &[u8]) -> String {
    let sep = if p.len() > 9 { "," } else { "" };
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_complete_and_sorted() {
        let perms = all_permutations(4);
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(&*perms[0], &[0, 1, 2, 3]);
        assert_eq!(all_permutations(1).len(), 1);
    }

    #[test]
    fn parity_and_labels() {
        assert!(is_even(&[0, 1, 2, 3]));
        assert!(!is_even(&[1, 0, 2, 3]));
        assert!(!is_even(&[1, 2, 3, 0]));
        assert!(is_even(&[1, 0, 3, 2]));
        assert_eq!(cycle_label(&[1, 2, 3, 0]), "(1234)");
        assert_eq!(cycle_label(&[1, 0, 3, 2]), "(12)(34)");
        assert_eq!(cycle_label(&[0, 1, 2]), "()");
        assert_eq!(&*inverse(&[1, 2, 3, 0]), &[3, 0, 1, 2]);
    }
}
