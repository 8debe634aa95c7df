//! Reduced chromatic numbers of complete graphs, wheels and books under the
//! standard families, next to the closed forms they should match.

use std::fmt::Write as _;

use antiramsey_core::decomposition::{reduced_chromatic, Mode};
use antiramsey_core::error::Budget;
use antiramsey_core::graph::{named_graph, GraphSpec};
use antiramsey_core::{Error, FamilySpec};
use serde_json::json;

use crate::Outcome;

/// Exact enumeration gets this many steps per row before falling back to
/// bounded mode.
const ROW_BUDGET: u64 = 20_000_000;

struct Row {
    family: FamilySpec,
    host: String,
    spec: GraphSpec,
    expected: usize,
}

fn rows() -> Vec<Row> {
    let mut out = Vec::new();
    let mut add = |family, host: String, spec, expected| {
        out.push(Row {
            family,
            host,
            spec,
            expected,
        })
    };
    for p in 4..=10 {
        add(
            FamilySpec::Matchings,
            format!("K{p}"),
            GraphSpec::Complete(p),
            p.div_ceil(2),
        );
    }
    for k in 4..=8 {
        add(FamilySpec::Matchings, format!("W{k}"), GraphSpec::Wheel(k), 3);
    }
    for t in 3..=5 {
        add(FamilySpec::Matchings, format!("B{t}"), GraphSpec::Book(t), 2);
    }
    for p in 5..=7 {
        add(
            FamilySpec::Forests,
            format!("K{p}"),
            GraphSpec::Complete(p),
            p.div_ceil(2),
        );
    }
    for d in 2..=3 {
        for p in [6, 8, 10] {
            add(
                FamilySpec::Degenerate(d),
                format!("K{p}"),
                GraphSpec::Complete(p),
                p.div_ceil(d + 1),
            );
        }
    }
    for k in 2..=3 {
        for p in 2..=8 {
            add(
                FamilySpec::KColorable(k),
                format!("K{p}"),
                GraphSpec::Complete(p),
                p.div_ceil(k),
            );
        }
    }
    for p in [5, 8, 9, 12] {
        add(
            FamilySpec::Planar,
            format!("K{p}"),
            GraphSpec::Complete(p),
            p.div_ceil(4),
        );
    }
    for p in [4, 6, 7, 9] {
        add(
            FamilySpec::Outerplanar,
            format!("K{p}"),
            GraphSpec::Complete(p),
            p.div_ceil(3),
        );
    }
    out
}

pub fn run(budget: &mut Budget) -> Outcome {
    let mut text = format!(
        "{:<14} {:<6} {:>8} {:>9}  {}\n",
        "family", "host", "expected", "computed", "status"
    );
    let mut json_rows = Vec::new();
    let mut all_match = true;
    for row in rows() {
        let g = named_graph(&row.spec).expect("table hosts are small");
        let mut row_budget = Budget::new(ROW_BUDGET.min(budget.limit()));
        let (result, tag) = match reduced_chromatic(&g, &row.family, Mode::Exact, &mut row_budget) {
            Ok(r) => (Ok(r), "verified"),
            Err(Error::BudgetExceeded { .. }) => (
                reduced_chromatic(&g, &row.family, Mode::Bounded, &mut Budget::default()),
                "bounded",
            ),
            Err(e) => (Err(e), "error"),
        };
        let (computed, matches) = match &result {
            Ok(r) if r.lo == r.hi => (r.lo.to_string(), r.lo == row.expected),
            Ok(r) => (format!("{}..{}", r.lo, r.hi), false),
            Err(e) => (e.to_string(), false),
        };
        all_match &= matches;
        let _ = writeln!(
            text,
            "{:<14} {:<6} {:>8} {:>9}  {}{}",
            row.family.to_string(),
            row.host,
            row.expected,
            computed,
            tag,
            if matches { "" } else { " MISMATCH" }
        );
        json_rows.push(json!({
            "family": row.family.to_string(),
            "host": row.host,
            "expected": row.expected,
            "value": result.as_ref().ok().and_then(|r| r.value),
            "lo": result.as_ref().ok().map(|r| r.lo),
            "hi": result.as_ref().ok().map(|r| r.hi),
            "status": tag,
            "matches": matches,
        }));
    }
    Outcome {
        json: json!({ "rows": json_rows, "all_match": all_match }),
        text,
        code: if all_match { crate::EXIT_OK } else { crate::EXIT_USAGE },
    }
}
