//! Test-only oracles. Nothing here calls into the crate's counting or
//! search code, so these stay independent of the paths they check.
#![allow(dead_code)]

/// Every permutation of `1..=n`, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (1..=n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Forbidden pairs written out by hand from the definitions.
pub fn naive_edges(n: usize, k: usize, modular: bool) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..=n - k).map(|j| (j, j + k)).collect();
    if modular {
        edges.extend((n - k + 1..=n).map(|j| (j, j + k - n)));
    }
    edges
}

pub fn hits(perm: &[usize], edges: &[(usize, usize)]) -> bool {
    perm.windows(2).any(|w| edges.contains(&(w[0], w[1])))
}

/// Avoiders counted by filtering the whole symmetric group.
pub fn filter_count(n: usize, k: usize, modular: bool) -> u64 {
    let edges = naive_edges(n, k, modular);
    all_permutations(n)
        .iter()
        .filter(|p| !hits(p, &edges))
        .count() as u64
}

/// `A_j` by checking each of the `2^n` subsets of modular edges for a
/// directed cycle. A subset is realisable in one line exactly when it is
/// acyclic, since in- and out-degrees are already at most one.
pub fn brute_subset_counts(n: usize, k: usize) -> Vec<u64> {
    let edges = naive_edges(n, k, true);
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        let mut next = vec![0usize; n + 1];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                next[a] = b;
            }
        }
        let cyclic = (1..=n).any(|start| {
            let mut x = start;
            for _ in 0..n {
                x = next[x];
                if x == 0 {
                    return false;
                }
                if x == start {
                    return true;
                }
            }
            false
        });
        if !cyclic {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Cycle lengths found by walking `j -> j + k mod n` with a visited set.
pub fn walked_cycle_lengths(n: usize, k: usize) -> Vec<usize> {
    let mut seen = vec![false; n + 1];
    let mut lengths = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = (x + k - 1) % n + 1;
        }
        lengths.push(len);
    }
    lengths
}

pub fn u128_factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Table 1, rows n = 1..=8, columns Der, d^1..d^5.
pub const TABLE_ONE: [&[u64]; 8] = [
    &[0],
    &[1, 1],
    &[2, 3, 4],
    &[9, 11, 14, 18],
    &[44, 53, 64, 78, 96],
    &[265, 309, 362, 426, 504, 600],
    &[1854, 2119, 2428, 2790, 3216, 3720],
    &[14833, 16687, 18806, 21234, 24024, 27240],
];

/// Table 2, rows n = 2..=9, columns k = 1..=6.
pub const TABLE_TWO: [&[u64]; 8] = [
    &[0],
    &[3, 3],
    &[8, 8, 8],
    &[45, 45, 45, 45],
    &[264, 270, 240, 270, 264],
    &[1855, 1855, 1855, 1855, 1855, 1855],
    &[14832, 14816, 14832, 13824, 14832, 14816],
    &[133497, 133497, 134298, 133497, 133497, 134298],
];
