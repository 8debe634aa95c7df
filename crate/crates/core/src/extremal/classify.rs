//! Asymptotic classification of `f(n, G | F)` by the reduced chromatic
//! number `c = χ_F(G)`:
//!
//! * case (i), `c >= 3`: `f = (1 + o(1)) ex(n, K_c) ~ (c-2)/(2c-2) n^2`;
//! * case (ii), `c = 2`: `f = o(n^2)`;
//! * case (iii), `c = 1`: `f = 1`.

use serde::Serialize;
use serde_json::json;

use super::lb_coloring;
use crate::decomposition::{is_stable, reduced_chromatic, Mode, ReducedChromaticResult};
use crate::error::{Budget, Error, Result};
use crate::families::FamilySpec;
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassifyCase {
    #[serde(rename = "i")]
    Quadratic,
    #[serde(rename = "ii")]
    Subquadratic,
    #[serde(rename = "iii")]
    Trivial,
    /// Bounds on `χ_F` straddle a case boundary.
    #[serde(rename = "undetermined")]
    Undetermined,
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub mode: Mode,
    /// Also build the certified lower-bound coloring on this many vertices.
    pub lower_bound_at: Option<usize>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            mode: Mode::Exact,
            lower_bound_at: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassifyReport {
    pub chi_f: ReducedChromaticResult,
    pub case: ClassifyCase,
    /// `ex(n, K_c)`, `o(n^2)` or `1`.
    pub leading_term: String,
    /// `(c-2, 2c-2)` in lowest terms, for case (i).
    pub coefficient: Option<(usize, usize)>,
    pub stable: Option<bool>,
    /// `(n, b)` with `f(n, G | F) >= b` certified by a coloring.
    pub lower_bound: Option<(usize, usize)>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl ClassifyReport {
    pub fn coefficient_value(&self) -> Option<f64> {
        self.coefficient.map(|(p, q)| p as f64 / q as f64)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "chi_f": self.chi_f.to_json(),
            "case": self.case,
            "leading_term": self.leading_term,
            "coefficient": self.coefficient.map(|(p, q)| format!("{p}/{q}")),
            "coefficient_value": self.coefficient_value(),
            "stable": self.stable,
            "lower_bound": self.lower_bound.map(|(n, b)| json!({ "n": n, "f_at_least": b })),
        })
    }
}

pub fn classify(g: &SimpleGraph, f: &FamilySpec, opts: ClassifyOptions, budget: &mut Budget) -> Result<ClassifyReport> {
    if !f.is_hereditary() {
        return Err(Error::Unsupported(format!(
            "classification needs a hereditary family; {f} is not"
        )));
    }
    let chi_f = reduced_chromatic(g, f, opts.mode, budget)?;
    let (lo, hi) = (chi_f.lo, chi_f.hi);
    let case = if hi == 1 {
        ClassifyCase::Trivial
    } else if lo == 2 && hi == 2 {
        ClassifyCase::Subquadratic
    } else if lo >= 3 && lo == hi {
        ClassifyCase::Quadratic
    } else {
        ClassifyCase::Undetermined
    };
    let (leading_term, coefficient) = match case {
        ClassifyCase::Trivial => ("1".to_string(), None),
        ClassifyCase::Subquadratic => ("o(n^2)".to_string(), None),
        ClassifyCase::Quadratic => {
            let (p, q) = (lo - 2, 2 * lo - 2);
            let d = gcd(p, q);
            (format!("ex(n, K_{lo})"), Some((p / d, q / d)))
        }
        ClassifyCase::Undetermined => (format!("ex(n, K_c) with {lo} <= c <= {hi}"), None),
    };
    let stable = match opts.mode {
        Mode::Exact => Some(is_stable(g, f, budget)?.stable),
        Mode::Bounded => None,
    };
    let lower_bound = match opts.lower_bound_at {
        Some(n) if case != ClassifyCase::Trivial => {
            let lb = lb_coloring(n, g, f, budget)?;
            Some((n, lb.certified_bound()))
        }
        _ => None,
    };
    Ok(ClassifyReport {
        chi_f,
        case,
        leading_term,
        coefficient,
        stable,
        lower_bound,
    })
}
