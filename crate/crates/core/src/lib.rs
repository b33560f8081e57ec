//! Exact counting and enumeration of permutations of `[n]` that avoid
//! k-shift successions: adjacent pairs `j (j+k)`, either only while
//! `j + k <= n` (linear) or with `j + k` taken mod `n` (modular).
//!
//! The `parallel` feature (on by default) spreads brute-force enumeration
//! and table construction over a rayon pool. Without it every routine runs
//! on the calling thread with identical results.

pub mod counting;
pub mod error;
pub mod oracle;
pub mod problem;
pub mod tables;
pub mod verify;

pub use counting::{
    count_linear, count_modular, count_modular_coprime, derangement, edge_subset_polynomial,
    linear_triangle, BigCount, LinearTriangle, SubsetPolynomial,
};
pub use error::{Error, Result};
pub use oracle::{
    contains_forbidden_succession, count_by_enumeration, enumerate_avoiders, EnumerationConfig,
};
pub use problem::{
    cycle_decomposition, forbidden_edges, longest_forbidden_chain, max_cycle_length, successor,
    CycleDecomposition, ForbiddenChain, ForbiddenEdgeSet, ShiftProblem, Variant,
};
pub use tables::{build_table, oeis_bfile, render, CountTable, Format, OeisSequence, TableKind};
pub use verify::{verify_formulas, Mismatch, VerifyReport};

/// Exact count for `problem` from the closed-form formulas.
pub fn count(problem: &ShiftProblem) -> BigCount {
    let (n, k) = (problem.n(), problem.k());
    let result = match problem.variant() {
        Variant::Linear => count_linear(n, k),
        Variant::Modular => count_modular(n, k),
    };
    result.expect("ShiftProblem is validated on construction")
}
