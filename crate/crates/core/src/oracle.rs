//! Brute-force ground truth by backtracking.
//!
//! Elements are placed left to right; a candidate is pruned as soon as it
//! would follow its forbidden predecessor. Occupancy is a `u64` bitmask,
//! so `n` is capped at 64 even with the guard lifted.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::problem::ShiftProblem;

pub const DEFAULT_MAX_N_GUARD: usize = 11;
const HARD_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub problem: ShiftProblem,
    pub max_n_guard: usize,
    /// Lift the guard entirely (up to the bitmask limit of 64).
    pub override_guard: bool,
    pub stream_limit: Option<usize>,
}

impl EnumerationConfig {
    pub fn new(problem: ShiftProblem) -> Self {
        Self {
            problem,
            max_n_guard: DEFAULT_MAX_N_GUARD,
            override_guard: false,
            stream_limit: None,
        }
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.max_n_guard = guard;
        self
    }

    pub fn with_override(mut self, override_guard: bool) -> Self {
        self.override_guard = override_guard;
        self
    }

    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.stream_limit = limit;
        self
    }

    fn check(&self) -> Result<()> {
        let n = self.problem.n();
        if n > HARD_MAX_N {
            return Err(Error::GuardExceeded {
                n,
                guard: HARD_MAX_N,
            });
        }
        if !self.override_guard && n > self.max_n_guard {
            return Err(Error::GuardExceeded {
                n,
                guard: self.max_n_guard,
            });
        }
        Ok(())
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![0usize; n + 1];
    let mut duplicates = Vec::new();
    let mut out_of_range = Vec::new();
    for &x in perm {
        if x == 0 || x > n {
            out_of_range.push(x);
        } else {
            seen[x] += 1;
            if seen[x] == 2 {
                duplicates.push(x);
            }
        }
    }
    let missing: Vec<usize> = (1..=n).filter(|&x| seen[x] == 0).collect();
    if perm.len() != n || !duplicates.is_empty() || !missing.is_empty() || !out_of_range.is_empty()
    {
        duplicates.extend(out_of_range);
        return Err(Error::NotAPermutation {
            n,
            duplicates,
            missing,
        });
    }
    Ok(())
}

/// Whether some adjacent pair of `perm` is a forbidden edge. Adjacency is
/// linear: the last entry does not wrap around to the first.
pub fn contains_forbidden_succession(perm: &[usize], problem: &ShiftProblem) -> Result<bool> {
    check_permutation(perm, problem.n())?;
    let succ = problem.successor_table();
    Ok(perm.windows(2).any(|w| succ[w[0]] == Some(w[1])))
}

/// Successor table with 0 standing for "none".
fn packed_successors(problem: &ShiftProblem) -> Vec<usize> {
    problem
        .successor_table()
        .into_iter()
        .map(|s| s.unwrap_or(0))
        .collect()
}

struct Search {
    succ: Vec<usize>,
    full: u64,
}

impl Search {
    fn new(problem: &ShiftProblem) -> Self {
        let n = problem.n();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self {
            succ: packed_successors(problem),
            full,
        }
    }

    /// Avoiders extending a partial placement whose last element is `last`.
    fn count_from(&self, used: u64, last: usize) -> u128 {
        let free = self.full & !used;
        if free == 0 {
            return 1;
        }
        let banned = self.succ[last];
        if free.count_ones() == 1 {
            let only = free.trailing_zeros() as usize + 1;
            return u128::from(only != banned);
        }
        let mut total = 0;
        let mut rest = free;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let x = bit + 1;
            if x != banned {
                total += self.count_from(used | (1u64 << bit), x);
            }
        }
        total
    }

    /// `used` bitmask and last element of a prefix, or `None` if the prefix
    /// already contains a forbidden pair.
    fn apply_prefix(&self, prefix: &[usize]) -> Option<(u64, usize)> {
        let mut used = 0u64;
        let mut last = 0usize;
        for &x in prefix {
            if last != 0 && self.succ[last] == x {
                return None;
            }
            used |= 1u64 << (x - 1);
            last = x;
        }
        Some((used, last))
    }
}

fn check_prefix(prefix: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for &x in prefix {
        if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::Domain(format!(
                "prefix {prefix:?} is not a sequence of distinct elements of [{n}]"
            )));
        }
    }
    Ok(())
}

/// Avoiders whose one-line notation begins with `prefix`.
pub fn count_with_prefix(config: &EnumerationConfig, prefix: &[usize]) -> Result<BigCount> {
    config.check()?;
    let n = config.problem.n();
    check_prefix(prefix, n)?;
    let search = Search::new(&config.problem);
    Ok(match search.apply_prefix(prefix) {
        Some((used, last)) => BigCount::from(search.count_from(used, last)),
        None => BigCount::from(0u32),
    })
}

/// Single-threaded count, regardless of enabled features.
pub fn count_sequential(config: &EnumerationConfig) -> Result<BigCount> {
    config.check()?;
    let search = Search::new(&config.problem);
    Ok(BigCount::from(search.count_from(0, 0)))
}

/// Two-element prefixes that do not already contain a forbidden pair.
fn seed_prefixes(problem: &ShiftProblem) -> Vec<[usize; 2]> {
    let succ = packed_successors(problem);
    let n = problem.n();
    (1..=n)
        .flat_map(|a| (1..=n).map(move |b| [a, b]))
        .filter(|&[a, b]| a != b && succ[a] != b)
        .collect()
}

/// Count partitioned by two-element prefix; partitions run on the rayon
/// pool.
#[cfg(feature = "parallel")]
pub fn count_parallel(config: &EnumerationConfig) -> Result<BigCount> {
    config.check()?;
    let search = Search::new(&config.problem);
    let total: u128 = seed_prefixes(&config.problem)
        .par_iter()
        .map(|p| {
            let (used, last) = search.apply_prefix(p).expect("seed prefixes are valid");
            search.count_from(used, last)
        })
        .sum();
    Ok(BigCount::from(total))
}

/// Number of permutations of `[n]` avoiding every forbidden succession.
pub fn count_by_enumeration(config: &EnumerationConfig) -> Result<BigCount> {
    #[cfg(feature = "parallel")]
    {
        count_parallel(config)
    }
    #[cfg(not(feature = "parallel"))]
    {
        count_sequential(config)
    }
}

/// Count via the same two-element partition as `count_parallel`, evaluated
/// in order on the calling thread.
pub fn count_partitioned_sequential(config: &EnumerationConfig) -> Result<BigCount> {
    config.check()?;
    let search = Search::new(&config.problem);
    let total: u128 = seed_prefixes(&config.problem)
        .iter()
        .map(|p| {
            let (used, last) = search.apply_prefix(p).expect("seed prefixes are valid");
            search.count_from(used, last)
        })
        .sum();
    Ok(BigCount::from(total))
}

/// Lexicographic stream of avoiders.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    succ: Vec<usize>,
    perm: Vec<usize>,
    used: Vec<bool>,
    /// `cursor[d]` is the next value to try at depth `d`.
    cursor: Vec<usize>,
    emitted_full: bool,
    remaining: Option<usize>,
    done: bool,
}

impl Avoiders {
    fn new(config: &EnumerationConfig) -> Self {
        let n = config.problem.n();
        let cursor = vec![1; n + 1];
        Self {
            n,
            succ: packed_successors(&config.problem),
            perm: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor,
            emitted_full: false,
            remaining: config.stream_limit,
            done: false,
        }
    }

    fn pop(&mut self) -> bool {
        match self.perm.pop() {
            Some(x) => {
                self.used[x] = false;
                true
            }
            None => false,
        }
    }

    fn search(&mut self) -> Option<Vec<usize>> {
        loop {
            let depth = self.perm.len();
            if depth == self.n {
                if !self.emitted_full {
                    self.emitted_full = true;
                    return Some(self.perm.clone());
                }
                self.emitted_full = false;
                self.pop();
                continue;
            }
            let banned = depth.checked_sub(1).map_or(0, |d| self.succ[self.perm[d]]);
            let next = (self.cursor[depth]..=self.n).find(|&c| !self.used[c] && c != banned);
            match next {
                Some(c) => {
                    self.cursor[depth] = c + 1;
                    self.cursor[depth + 1] = 1;
                    self.perm.push(c);
                    self.used[c] = true;
                }
                None => {
                    if !self.pop() {
                        return None;
                    }
                }
            }
        }
    }
}

impl Iterator for Avoiders {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        match self.search() {
            Some(p) => {
                if let Some(r) = self.remaining.as_mut() {
                    *r -= 1;
                }
                Some(p)
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

pub fn enumerate_avoiders(config: &EnumerationConfig) -> Result<Avoiders> {
    config.check()?;
    Ok(Avoiders::new(config))
}
