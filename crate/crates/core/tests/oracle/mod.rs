//! Brute-force reference computations shared by the integration and
//! acceptance tests. Nothing here calls into the library's deciders.

#![allow(dead_code)]

use std::collections::BTreeSet;

use measring::{MeasurableSpace, Subset};

/// Closes a family under complement and pairwise union until nothing changes.
pub fn closure_oracle(n: usize, generators: &[u64]) -> BTreeSet<u64> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut family: BTreeSet<u64> = generators.iter().copied().collect();
    family.insert(0);
    family.insert(full);
    loop {
        let current: Vec<u64> = family.iter().copied().collect();
        let before = family.len();
        for &a in &current {
            family.insert(full & !a);
            for &b in &current {
                family.insert(a | b);
            }
        }
        if family.len() == before {
            return family;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
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

/// Searches every bijection for one that carries members onto members both ways.
pub fn homeomorphic_by_search(x: &MeasurableSpace, y: &MeasurableSpace) -> bool {
    let n = x.ground().size();
    if n != y.ground().size() || x.sets().len() != y.sets().len() {
        return false;
    }
    let ys: BTreeSet<u64> = y.sets().iter().map(Subset::bits).collect();
    permutations(n).into_iter().any(|perm| {
        x.sets().iter().all(|a| {
            let image = a.points().fold(0u64, |m, p| m | 1 << perm[p]);
            ys.contains(&image)
        })
    })
}

/// Counts set partitions by the Bell triangle.
pub fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 1..n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    *row.last().unwrap()
}

/// Set partitions of `n` points as restricted growth strings.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut word = vec![0usize; n];
    fn go(i: usize, max: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == word.len() {
            out.push(word.clone());
            return;
        }
        for b in 0..=max + 1 {
            word[i] = b;
            go(i + 1, max.max(b), word, out);
        }
    }
    if n > 0 {
        go(1, 0, &mut word, &mut out);
    }
    out
}

/// Every sigma-algebra on `n` points, each as its sorted member masks,
/// built from restricted growth strings by taking all unions of blocks.
pub fn partition_algebras(n: usize) -> BTreeSet<Vec<u64>> {
    restricted_growth_strings(n)
        .into_iter()
        .map(|word| {
            let k = word.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![0u64; k];
            for (p, &b) in word.iter().enumerate() {
                blocks[b] |= 1 << p;
            }
            let mut members: Vec<u64> = (0..1u64 << k)
                .map(|pick| (0..k).filter(|i| pick >> i & 1 == 1).fold(0, |m, i| m | blocks[i]))
                .collect();
            members.sort_unstable();
            members
        })
        .collect()
}
