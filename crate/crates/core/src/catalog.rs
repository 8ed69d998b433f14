//! Every graded modular lattice up to a size bound, one per isomorphism
//! class, generated level by level.

use crate::poset::GradedPoset;

/// Compositions of `n` into positive parts.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Level `i` covers level `i + 1` through `masks[i][upper] = bitmask of lower`.
fn canonical(levels: &[usize], masks: &[Vec<u32>]) -> Vec<u32> {
    let perms: Vec<Vec<Vec<usize>>> = levels.iter().map(|&k| permutations(k)).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut choice = vec![0usize; levels.len()];
    loop {
        let mut code = Vec::new();
        for (i, m) in masks.iter().enumerate() {
            let (lo, hi) = (&perms[i][choice[i]], &perms[i + 1][choice[i + 1]]);
            let mut row = vec![0u32; m.len()];
            for (u, &mask) in m.iter().enumerate() {
                let mut img = 0u32;
                for (l, &pl) in lo.iter().enumerate() {
                    if mask >> l & 1 == 1 {
                        img |= 1 << pl;
                    }
                }
                row[hi[u]] = img;
            }
            code.extend(row);
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        let mut i = 0;
        loop {
            if i == levels.len() {
                return best.unwrap();
            }
            choice[i] += 1;
            if choice[i] < perms[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn build(levels: &[usize], masks: &[Vec<u32>]) -> GradedPoset {
    let mut names = Vec::new();
    let mut start = Vec::new();
    let total = levels.len();
    for (r, &k) in levels.iter().enumerate() {
        start.push(names.len());
        for j in 0..k {
            names.push(match (r, k) {
                (0, 1) => "0".to_string(),
                _ if r + 1 == total && k == 1 => "1".to_string(),
                _ => format!("{}{}", (b'a' + r as u8 - 1) as char, j + 1),
            });
        }
    }
    let mut covers = Vec::new();
    for (i, m) in masks.iter().enumerate() {
        for (u, &mask) in m.iter().enumerate() {
            for l in 0..levels[i] {
                if mask >> l & 1 == 1 {
                    covers.push((start[i] + l, start[i + 1] + u));
                }
            }
        }
    }
    GradedPoset::from_covers(names, &covers).expect("level structure is graded")
}

/// All graded modular lattices with `n` elements, up to isomorphism.
pub fn modular_lattices_of_size(n: usize) -> Vec<GradedPoset> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![GradedPoset::from_covers(vec!["0".into()], &[]).unwrap()];
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for middle in compositions(n - 2) {
        let mut levels = vec![1];
        levels.extend(&middle);
        levels.push(1);
        // every upper element covers a nonempty set; every lower one is covered
        let choices: Vec<Vec<Vec<u32>>> = levels
            .windows(2)
            .map(|w| {
                let (lo, hi) = (w[0], w[1]);
                let rows: Vec<u32> = (1..1u32 << lo).collect();
                let mut all = vec![Vec::new()];
                for _ in 0..hi {
                    all = all
                        .into_iter()
                        .flat_map(|p: Vec<u32>| {
                            rows.iter().map(move |&r| {
                                let mut q = p.clone();
                                q.push(r);
                                q
                            })
                        })
                        .collect();
                }
                all.retain(|m| m.iter().fold(0, |a, &r| a | r) == (1u32 << lo) - 1);
                all
            })
            .collect();
        let mut idx = vec![0usize; choices.len()];
        'outer: loop {
            let masks: Vec<Vec<u32>> = idx
                .iter()
                .zip(&choices)
                .map(|(&i, c)| c[i].clone())
                .collect();
            let code = canonical(&levels, &masks);
            if !seen.contains(&(levels.clone(), code.clone())) {
                let p = build(&levels, &masks);
                if p.classification().modular {
                    out.push(p);
                }
                seen.insert((levels.clone(), code));
            }
            let mut i = 0;
            loop {
                if i == idx.len() {
                    break 'outer;
                }
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }
    out
}

/// All graded modular lattices with at most `max_n` elements.
pub fn modular_lattices(max_n: usize) -> Vec<GradedPoset> {
    (1..=max_n).flat_map(modular_lattices_of_size).collect()
}

/// Modular lattices of at most `max_n` elements together with every
/// lattice-with-top-removed that is still a modular semilattice.
pub fn modular_semilattices(max_n: usize) -> Vec<GradedPoset> {
    let mut out = Vec::new();
    for l in modular_lattices(max_n + 1) {
        if l.len() <= max_n {
            out.push(l.clone());
        }
        if l.len() < 3 {
            continue;
        }
        let top = l.top().expect("lattice");
        let keep: Vec<usize> = (0..l.len()).filter(|&u| u != top).collect();
        let (p, _) = l.induced(&keep).expect("induced subposet");
        if !p.classification().lattice && p.classification().modular_semilattice {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_sequence() {
        let counts: Vec<usize> = (1..=8).map(|n| modular_lattices_of_size(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 4, 8, 16, 34]);
    }

    #[test]
    fn small_members() {
        let five = modular_lattices_of_size(5);
        assert!(five.iter().any(|p| !p.classification().distributive));
        let semis = modular_semilattices(5);
        assert!(semis.iter().any(|p| !p.classification().lattice));
        assert!(semis.iter().all(|p| p.classification().modular_semilattice));
    }
}
