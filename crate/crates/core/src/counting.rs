//! Exact counts of permutations avoiding k-shift successions.
//!
//! Every count is an inclusion-exclusion sum `sum_j (-1)^j A_j (n-j)!`,
//! where `A_j` is the number of `j`-subsets of forbidden edges that can
//! all occur at once in one permutation. Such a subset glues `n` elements
//! into `n - j` blocks, which can then be arranged in `(n - j)!` ways.

use std::sync::RwLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::problem::check_shift;

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

static FACTORIALS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// `0!, 1!, ..., n!`. Backed by a process-wide, append-only memo.
pub fn factorials(n: usize) -> Vec<BigUint> {
    {
        let memo = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if memo.len() > n {
            return memo[..=n].to_vec();
        }
    }
    let mut memo = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
    if memo.is_empty() {
        memo.push(BigUint::one());
    }
    while memo.len() <= n {
        let i = memo.len();
        let next = &memo[i - 1] * BigUint::from(i);
        memo.push(next);
    }
    memo[..=n].to_vec()
}

pub fn factorial(n: usize) -> BigUint {
    factorials(n).pop().expect("factorials is never empty")
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for j in 0..n {
        c = c * BigUint::from(n - j) / BigUint::from(j + 1);
        row.push(c.clone());
    }
    row
}

pub fn binomial(n: usize, j: usize) -> BigUint {
    if j > n {
        return BigUint::zero();
    }
    binomial_row(n).swap_remove(j)
}

/// `sum_j (-1)^j weights[j] (n-j)!`, which must come out nonnegative.
fn alternating_sum(n: usize, weights: &[BigUint]) -> BigUint {
    let fact = factorials(n);
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    for (j, w) in weights.iter().enumerate().take(n + 1) {
        if w.is_zero() {
            continue;
        }
        let term = w * &fact[n - j];
        if j.is_even() {
            plus += term;
        } else {
            minus += term;
        }
    }
    assert!(plus >= minus, "inclusion-exclusion sum went negative");
    plus - minus
}

/// `Der_n`, via `Der_n = n Der_{n-1} + (-1)^n` with `Der_0 = 1`.
pub fn derangement(n: usize) -> BigCount {
    derangements(n).pop().expect("derangements is never empty")
}

/// `Der_0, ..., Der_n`.
pub fn derangements(n: usize) -> Vec<BigCount> {
    let mut out = Vec::with_capacity(n + 1);
    let mut d = BigUint::one();
    out.push(d.clone());
    for i in 1..=n {
        d *= BigUint::from(i);
        if i.is_even() {
            d += 1u32;
        } else {
            d -= 1u32;
        }
        out.push(d.clone());
    }
    out
}

/// `sum_{j=0}^{edges} (-1)^j C(edges, j) (n-j)!` for `edges <= n`.
pub(crate) fn path_edge_sum(n: usize, edges: usize) -> BigCount {
    debug_assert!(edges <= n);
    alternating_sum(n, &binomial_row(edges))
}

/// `d_n^k`: permutations of `[n]` with no adjacent `j (j+k)`.
pub fn count_linear(n: usize, k: usize) -> Result<BigCount> {
    check_shift(n, k)?;
    Ok(path_edge_sum(n, n - k))
}

/// The `d_n^k` triangle built from derangements by the recurrence
/// `d_n^{k+1} = d_n^k + d_{n-1}^k`, with column `k = 0` holding `Der_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearTriangle {
    /// `rows[n - 1][k]` for `0 <= k < n`.
    rows: Vec<Vec<BigCount>>,
}

impl LinearTriangle {
    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    /// `None` outside `1 <= n <= max_n`, `0 <= k < n`.
    pub fn get(&self, n: usize, k: usize) -> Option<&BigCount> {
        self.rows.get(n.checked_sub(1)?)?.get(k)
    }

    pub fn row(&self, n: usize) -> Option<&[BigCount]> {
        self.rows.get(n.checked_sub(1)?).map(Vec::as_slice)
    }
}

pub fn linear_triangle(max_n: usize) -> Result<LinearTriangle> {
    if max_n < 1 {
        return Err(domain("max_n must be at least 1"));
    }
    let der = derangements(max_n);
    let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mut row = Vec::with_capacity(n);
        row.push(der[n].clone());
        for k in 0..n - 1 {
            // d_{n-1}^k exists because k <= n - 2.
            let next = &row[k] + &rows[n - 2][k];
            row.push(next);
        }
        rows.push(row);
    }
    Ok(LinearTriangle { rows })
}

/// `A_j`: the number of `j`-subsets of the modular forbidden edges that
/// contain no complete cycle of `(1 2 ... n)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPolynomial {
    coefficients: Vec<BigCount>,
}

impl SubsetPolynomial {
    /// Coefficients `A_0..=A_n`.
    pub fn coefficients(&self) -> &[BigCount] {
        &self.coefficients
    }

    pub fn degree_bound(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn sum(&self) -> BigCount {
        self.coefficients.iter().sum()
    }
}

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `((1+x)^m - x^m)^d` with `d = gcd(n, k)`, `m = n / d`.
///
/// The `n` modular edges split into `d` disjoint directed cycles of length
/// `m`. A set of edges can be realised in a permutation exactly when it
/// leaves at least one edge of every cycle unselected.
pub fn edge_subset_polynomial(n: usize, k: usize) -> Result<SubsetPolynomial> {
    check_shift(n, k)?;
    let d = n.gcd(&k);
    let m = n / d;
    let mut per_cycle = binomial_row(m);
    per_cycle[m] = BigUint::zero();

    let mut acc = vec![BigUint::one()];
    let mut base = per_cycle;
    let mut e = d;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mul(&base, &base);
        }
    }
    acc.resize(n + 1, BigUint::zero());
    Ok(SubsetPolynomial { coefficients: acc })
}

/// `D_n^k`: permutations of `[n]` with no adjacent `j (j+k mod n)`.
/// Valid for every `1 <= k < n`, coprime or not.
pub fn count_modular(n: usize, k: usize) -> Result<BigCount> {
    let poly = edge_subset_polynomial(n, k)?;
    Ok(alternating_sum(n, poly.coefficients()))
}

/// `D_n^k` for `gcd(n, k) = 1`, where it equals `D_n` and
/// `A_j = C(n, j)` for `j < n`.
pub fn count_modular_coprime(n: usize, k: usize) -> Result<BigCount> {
    check_shift(n, k)?;
    if n.gcd(&k) != 1 {
        return Err(domain(format!(
            "gcd(n, k) = gcd({n}, {k}) = {} is not 1; use count_modular",
            n.gcd(&k)
        )));
    }
    Ok(cyclic_coprime_sum(n))
}

/// `sum_{j=0}^{n-1} (-1)^j C(n, j) (n-j)!`.
pub(crate) fn cyclic_coprime_sum(n: usize) -> BigCount {
    let mut weights = binomial_row(n);
    weights.pop();
    alternating_sum(n, &weights)
}
