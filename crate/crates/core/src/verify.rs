//! Cross-check of closed-form counts against brute-force enumeration.

use std::fmt;

use crate::counting::BigCount;
use crate::error::Result;
use crate::oracle::{count_by_enumeration, EnumerationConfig};
use crate::problem::{ShiftProblem, Variant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub problem: ShiftProblem,
    pub formula: BigCount,
    pub enumerated: BigCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    /// Largest `n` actually checked.
    pub max_n: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.mismatches {
            writeln!(
                f,
                "MISMATCH {}: formula {} != enumeration {}",
                m.problem, m.formula, m.enumerated
            )?;
        }
        write!(
            f,
            "checked {} instances with n <= {}: {} mismatches",
            self.checked,
            self.max_n,
            self.mismatches.len()
        )
    }
}

/// Compare `formula` with enumeration for both variants, every `k`, and
/// `2 <= n <= min(max_n, guard)`.
pub fn verify_formulas<F>(max_n: usize, guard: usize, formula: F) -> Result<VerifyReport>
where
    F: Fn(&ShiftProblem) -> BigCount,
{
    let top = max_n.min(guard);
    let mut report = VerifyReport {
        max_n: top,
        ..Default::default()
    };
    for n in 2..=top {
        for variant in [Variant::Linear, Variant::Modular] {
            for k in 1..n {
                let problem = ShiftProblem::new(n, k, variant)?;
                let enumerated =
                    count_by_enumeration(&EnumerationConfig::new(problem).with_guard(guard))?;
                let expected = formula(&problem);
                report.checked += 1;
                if expected != enumerated {
                    report.mismatches.push(Mismatch {
                        problem,
                        formula: expected,
                        enumerated,
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count;

    #[test]
    fn formulas_agree_to_seven() {
        let report = verify_formulas(7, 11, count).unwrap();
        assert!(report.ok(), "{report}");
        assert_eq!(report.checked, 2 * (1 + 2 + 3 + 4 + 5 + 6));
    }

    #[test]
    fn guard_caps_the_sweep() {
        let report = verify_formulas(30, 4, count).unwrap();
        assert_eq!(report.max_n, 4);
        assert_eq!(report.checked, 12);
    }

    #[test]
    fn perturbed_formula_is_caught() {
        let off_by_one = |p: &ShiftProblem| {
            let v = count(p);
            if p.variant() == Variant::Modular && p.n() == 6 && p.k() == 3 {
                v + 1u32
            } else {
                v
            }
        };
        let report = verify_formulas(6, 11, off_by_one).unwrap();
        assert_eq!(report.mismatches.len(), 1);
        assert!(report.to_string().contains("modular(n=6, k=3)"));
    }
}
