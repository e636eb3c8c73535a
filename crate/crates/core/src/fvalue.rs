//! The benchmark function `f_n(g) = n(g+1) - g(g+3)/2` and its arithmetic
//! identities, checked exactly over integer ranges.

use crate::error::{Error, Result};
use crate::report::{ReportBuilder, VerificationReport};

/// Exact value of `f_n(g)`; `g(g+3)` is always even so the division is exact.
pub fn f_value(n: usize, g: usize) -> i64 {
    let n = n as i64;
    let g = g as i64;
    n * (g + 1) - g * (g + 3) / 2
}

/// Checks, for one `n >= 4`: strict monotonicity on `0..=n-2`, the closed
/// form of the maximum at `g = n-2`, and the tail identities
/// `f(n-1) = f(n-2) > f(n) = f(n-3) > f(g)` for `g <= n-4`.
pub fn f_monotonicity_check(n: usize) -> Result<VerificationReport> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "monotonicity check needs n >= 4, got {n}"
        )));
    }
    let mut builder = ReportBuilder::new("f-monotone");
    builder.param("n", n);
    let mut failures = Vec::new();

    for g in 0..n - 2 {
        if f_value(n, g) >= f_value(n, g + 1) {
            failures.push(format!("f_{n}({g}) >= f_{n}({})", g + 1));
        }
    }
    let max = f_value(n, n - 2);
    if max != (n * (n - 1) / 2 + 1) as i64 {
        failures.push(format!(
            "max f_{n}({}) = {max} differs from closed form",
            n - 2
        ));
    }
    if f_value(n, n - 1) != max {
        failures.push(format!("f_{n}({}) != f_{n}({})", n - 1, n - 2));
    }
    if f_value(n, n) != f_value(n, n - 3) {
        failures.push(format!("f_{n}({n}) != f_{n}({})", n - 3));
    }
    if f_value(n, n) >= max {
        failures.push(format!("f_{n}({n}) not below the maximum"));
    }
    for g in 0..=n.saturating_sub(4) {
        if f_value(n, g) >= f_value(n, n - 3) {
            failures.push(format!("f_{n}({g}) >= f_{n}({})", n - 3));
        }
    }

    Ok(if failures.is_empty() {
        builder.verified(serde_json::json!({
            "maximum": max,
            "values": (0..=n).map(|g| f_value(n, g)).collect::<Vec<_>>(),
        }))
    } else {
        builder.refuted(serde_json::json!({ "failures": failures }))
    })
}

/// Exhaustively verifies `f_{n-1}(g1) + f_{n-1}(g2) >= f_n(g) + 1` for all
/// `4 <= n <= n_max`, `0 <= g1,g2 <= n-2`, `0 <= g <= n-3` whose hypothesis
/// `g1 + g2 + 2 > g + 1` holds.
pub fn f_sum_inequality_check(n_max: usize) -> Result<VerificationReport> {
    if n_max < 4 {
        return Err(Error::invalid(format!(
            "sweep needs n_max >= 4, got {n_max}"
        )));
    }
    let mut builder = ReportBuilder::new("f-sum-inequality");
    builder.param("nMax", n_max);
    let mut checked = 0u64;
    let mut filtered = 0u64;
    for n in 4..=n_max {
        for g1 in 0..=n - 2 {
            for g2 in 0..=n - 2 {
                for g in 0..=n - 3 {
                    if g1 + g2 + 2 <= g + 1 {
                        filtered += 1;
                        continue;
                    }
                    checked += 1;
                    if f_value(n - 1, g1) + f_value(n - 1, g2) < f_value(n, g) + 1 {
                        return Ok(builder.refuted(serde_json::json!({
                            "n": n, "g1": g1, "g2": g2, "g": g,
                            "lhs": f_value(n - 1, g1) + f_value(n - 1, g2),
                            "rhs": f_value(n, g) + 1,
                        })));
                    }
                }
            }
        }
    }
    Ok(builder.verified(serde_json::json!({
        "triplesChecked": checked,
        "triplesFiltered": filtered,
    })))
}
