//! Check suites run by `filiform verify`.
//!
//! Each suite returns a [`SuiteReport`] with one [`Check`] per algebra (or
//! pair of algebras) so that failures name the offending rows.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::VergneAlgebra;
use crate::classify::{enumerate, label};
use crate::cohomology::{betti, commuting_square_counterexample};
use crate::error::Result;
use crate::extension::{decompose, has_codim1_abelian_ideal, partner};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} [{}] {}: {}", self.suite, c.name, c.detail)?;
        }
        let failed = self.failures().count();
        write!(f, "{}: {} checks, {} failed", self.suite, self.checks.len(), failed)
    }
}

fn fmt_vec(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// `m₀(n)` and `m₂(n)` have equal Betti numbers, with `b₁ = 2` and
/// `b₂ = ⌊(n+1)/2⌋`, for `5 ≤ n ≤ max_dim`.
pub fn model_pairs(max_dim: usize) -> Result<SuiteReport> {
    let dims: Vec<usize> = (5..=max_dim).collect();
    let checks = dims
        .par_iter()
        .map(|&n| -> Result<Check> {
            let b0 = betti(&VergneAlgebra::m0(n)?).betti;
            let b2 = betti(&VergneAlgebra::m2(n)?).betti;
            let expected_b2 = n.div_ceil(2);
            let ok = b0 == b2 && b0[1] == 2 && b0[2] == expected_b2;
            let detail = if ok {
                format!("betti {}", fmt_vec(&b0))
            } else {
                format!("m0 {} vs m2 {}; expected b1 = 2, b2 = {expected_b2}", fmt_vec(&b0), fmt_vec(&b2))
            };
            Ok(Check::new(format!("m0({n}) ~ m2({n})"), ok, detail))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { suite: "thm1", checks })
}

fn enumerated(max_dim: usize) -> Result<Vec<VergneAlgebra>> {
    let mut all = Vec::new();
    for n in 5..=max_dim {
        all.extend(enumerate(n)?);
    }
    Ok(all)
}

/// Every enumerated algebra has a partner with equal Betti numbers, the
/// pairing is an involution, and the two sides grow from non-isomorphic roots.
pub fn partner_pairs(max_dim: usize) -> Result<SuiteReport> {
    let witness_ok = has_codim1_abelian_ideal(&VergneAlgebra::m0(5)?)
        && !has_codim1_abelian_ideal(&VergneAlgebra::m2(5)?);
    let mut checks = vec![Check::new(
        "root witness",
        witness_ok,
        "m0(5) has a codimension-1 abelian ideal, m2(5) does not",
    )];
    let algebras = enumerated(max_dim)?;
    let pairs = algebras
        .par_iter()
        .map(|g| {
            let row = g.row();
            let p = match partner(g) {
                Ok(p) => p,
                Err(e) => return Check::new(label(g), false, format!("row {row}: partner failed: {e}")),
            };
            let (bg, bp) = (betti(g).betti, betti(&p).betti);
            let involutive = partner(&p).as_ref() == Ok(g);
            let roots_differ = decompose(g).root != decompose(&p).root;
            let ok = bg == bp && involutive && roots_differ && p.row() != row;
            let detail = format!(
                "{} <-> {} ({}), betti {}{}",
                row,
                p.row(),
                label(&p),
                fmt_vec(&bg),
                if ok {
                    String::new()
                } else {
                    format!(" vs {}; involutive={involutive} roots_differ={roots_differ}", fmt_vec(&bp))
                }
            );
            Check::new(label(g), ok, detail)
        })
        .collect::<Vec<_>>();
    checks.extend(pairs);
    Ok(SuiteReport { suite: "thm2", checks })
}

/// `d₂∘f = f∘d₁` on every basis monomial of every topological degree `k ≥ 2`,
/// for `(m₀(n), m₂(n))` and for every enumerated algebra with its partner.
pub fn diagrams(max_dim: usize) -> Result<SuiteReport> {
    let square = |g1: &VergneAlgebra, g2: &VergneAlgebra, name: String| -> Result<Check> {
        let n = g1.dim();
        for k in 2..=n {
            if let Some(h) = commuting_square_counterexample(g1, g2, k)? {
                return Ok(Check::new(
                    name,
                    false,
                    format!("{} -> {}: fails at k = {k} on {h}", g1.row(), g2.row()),
                ));
            }
        }
        Ok(Check::new(name, true, format!("{} -> {}: k = 2..{n}", g1.row(), g2.row())))
    };
    let mut checks = Vec::new();
    for n in 5..=max_dim {
        checks.push(square(&VergneAlgebra::m0(n)?, &VergneAlgebra::m2(n)?, format!("m0({n}) -> m2({n})"))?);
    }
    let algebras = enumerated(max_dim)?;
    let paired = algebras
        .par_iter()
        .map(|g| {
            let p = partner(g)?;
            square(g, &p, format!("{} -> {}", label(g), label(&p)))
        })
        .collect::<Result<Vec<_>>>()?;
    checks.extend(paired);
    Ok(SuiteReport { suite: "diagrams", checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for report in [model_pairs(8).unwrap(), partner_pairs(8).unwrap(), diagrams(8).unwrap()] {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn report_format() {
        let r = model_pairs(5).unwrap();
        let text = r.to_string();
        assert!(text.starts_with("PASS [thm1] m0(5) ~ m2(5): betti [1, 2, 3, 3, 2, 1]"));
        assert!(text.ends_with("thm1: 1 checks, 0 failed"));
    }
}
