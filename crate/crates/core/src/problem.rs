//! Problem instances, successor maps and the cycle structure of the
//! forbidden edges.
//!
//! Elements are 1-based. In the modular variant the successor of `j` is
//! `j + k` reduced mod `n`, with `n` written in place of `0`.

use std::fmt;

use num_integer::Integer;

use crate::error::{domain, Result};

/// Which family of successions is forbidden.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `j (j+k)` for `1 <= j <= n-k`.
    Linear,
    /// `j (j+k mod n)` for every `j` in `[n]`.
    Modular,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Linear => f.write_str("linear"),
            Variant::Modular => f.write_str("modular"),
        }
    }
}

/// A validated `(n, k, variant)` instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftProblem {
    n: usize,
    k: usize,
    variant: Variant,
}

impl ShiftProblem {
    pub fn new(n: usize, k: usize, variant: Variant) -> Result<Self> {
        check_shift(n, k)?;
        Ok(Self { n, k, variant })
    }

    pub fn linear(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Variant::Linear)
    }

    pub fn modular(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Variant::Modular)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Successor of `j` under this instance, or `None` when `j` has no
    /// forbidden follower.
    pub fn successor(&self, j: usize) -> Result<Option<usize>> {
        successor(self.n, self.k, self.variant, j)
    }

    /// Lookup table `succ[j]` for `j` in `0..=n`; index 0 is unused.
    pub fn successor_table(&self) -> Vec<Option<usize>> {
        let mut table = vec![None; self.n + 1];
        for (j, slot) in table.iter_mut().enumerate().skip(1) {
            *slot = raw_successor(self.n, self.k, self.variant, j);
        }
        table
    }

    pub fn edge_count(&self) -> usize {
        match self.variant {
            Variant::Linear => self.n - self.k,
            Variant::Modular => self.n,
        }
    }
}

impl fmt::Display for ShiftProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, k={})", self.variant, self.n, self.k)
    }
}

pub(crate) fn check_shift(n: usize, k: usize) -> Result<()> {
    if n < 2 {
        return Err(domain(format!("n must be at least 2, got n = {n}")));
    }
    if k < 1 {
        return Err(domain(format!("k must satisfy k >= 1, got k = {k}")));
    }
    if k >= n {
        return Err(domain(format!(
            "k must satisfy k < n, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

fn raw_successor(n: usize, k: usize, variant: Variant, j: usize) -> Option<usize> {
    match variant {
        Variant::Linear => (j + k <= n).then_some(j + k),
        Variant::Modular => Some((j + k - 1) % n + 1),
    }
}

/// The element that may not immediately follow `j`.
pub fn successor(n: usize, k: usize, variant: Variant, j: usize) -> Result<Option<usize>> {
    check_shift(n, k)?;
    if j < 1 || j > n {
        return Err(domain(format!(
            "j must satisfy 1 <= j <= n = {n}, got j = {j}"
        )));
    }
    Ok(raw_successor(n, k, variant, j))
}

/// Ordered pairs `(a, b)` that may not appear as adjacent entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenEdgeSet {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl ForbiddenEdgeSet {
    /// Edges sorted by their first coordinate.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.n && self.edges.binary_search(&(a, b)).is_ok()
    }
}

pub fn forbidden_edges(problem: &ShiftProblem) -> ForbiddenEdgeSet {
    let edges = (1..=problem.n)
        .filter_map(|j| raw_successor(problem.n, problem.k, problem.variant, j).map(|b| (j, b)))
        .collect();
    ForbiddenEdgeSet {
        n: problem.n,
        edges,
    }
}

/// Cycles of `(1 2 ... n)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    k: usize,
    gcd: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn gcd(&self) -> usize {
        self.gcd
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Each cycle starts at its smallest element and follows successors.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn max_cycle_length(&self) -> usize {
        self.n / self.gcd
    }

    /// Cycle notation such as `(135)(246)`. Elements are space-separated
    /// once `n` reaches two digits.
    pub fn cycle_notation(&self) -> String {
        let sep = if self.n >= 10 { " " } else { "" };
        self.cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", body.join(sep))
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

pub fn cycle_decomposition(n: usize, k: usize) -> Result<CycleDecomposition> {
    check_shift(n, k)?;
    let gcd = n.gcd(&k);
    let len = n / gcd;
    // Residue class r mod gcd holds exactly one cycle; r + 1 is its minimum.
    let cycles = (0..gcd)
        .map(|r| (0..len).map(|t| (r + t * k) % n + 1).collect())
        .collect();
    Ok(CycleDecomposition { n, k, gcd, cycles })
}

pub fn max_cycle_length(n: usize, k: usize) -> Result<usize> {
    check_shift(n, k)?;
    Ok(n / n.gcd(&k))
}

/// A longest run of consecutive modular forbidden edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenChain {
    /// Number of edges in the chain.
    pub length: usize,
    pub witness: Vec<usize>,
}

/// Longest chain of modular forbidden edges, starting at 1.
pub fn longest_forbidden_chain(n: usize, k: usize) -> Result<ForbiddenChain> {
    let decomposition = cycle_decomposition(n, k)?;
    let witness = decomposition.cycles[0].clone();
    Ok(ForbiddenChain {
        length: witness.len() - 1,
        witness,
    })
}
