//! Exhaustive enumeration of Vergne-type algebras over GF(2).
//!
//! An algebra is determined by its `e₂` row, which has `n − 4` free entries,
//! so enumeration walks all `2^(n−4)` rows and keeps those that pass the
//! Jacobi checks. Every enumerated algebra of dimension `n ≥ 6` has its
//! truncation one dimension down as parent, giving a forest rooted at `m₀(5)`
//! and `m₂(5)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{RowVector, VergneAlgebra, MIN_DIM};
use crate::cohomology::betti;
use crate::error::{Error, Result};
use crate::exterior::MAX_AMBIENT;
use crate::extension::{admissible_cocycles, central_extension};

/// Reference names for every algebra in dimensions 7 to 12 other than
/// `m₀(n)` and `m₂(n)`, keyed by row. `g(n,i)` and `h(n,i)` are partners.
pub const LABELS: &[(&str, &str)] = &[
    // n = 7
    ("g(7,1)", "[0, 0, 0, 1, 0, 0]"),
    ("h(7,1)", "[0, 1, 1, 0, 0, 0]"),
    // n = 8
    ("g(8,1)", "[0, 0, 0, 1, 0, 0, 0]"),
    ("h(8,1)", "[0, 1, 1, 0, 1, 0, 0]"),
    // n = 9
    ("g(9,1)", "[0, 0, 0, 1, 0, 0, 0, 0]"),
    ("g(9,2)", "[0, 0, 0, 0, 0, 1, 0, 0]"),
    ("h(9,1)", "[0, 1, 1, 0, 1, 1, 0, 0]"),
    ("h(9,2)", "[0, 1, 1, 1, 1, 0, 0, 0]"),
    // n = 10
    ("g(10,1)", "[0, 0, 0, 1, 0, 0, 1, 0, 0]"),
    ("g(10,2)", "[0, 0, 0, 0, 0, 1, 1, 0, 0]"),
    ("h(10,1)", "[0, 1, 1, 0, 1, 1, 0, 0, 0]"),
    ("h(10,2)", "[0, 1, 1, 1, 1, 0, 0, 0, 0]"),
    // n = 11
    ("g(11,1)", "[0, 0, 0, 1, 0, 0, 1, 0, 0, 0]"),
    ("g(11,2)", "[0, 0, 0, 0, 0, 1, 1, 0, 0, 0]"),
    ("g(11,3)", "[0, 0, 0, 1, 0, 0, 1, 1, 0, 0]"),
    ("g(11,4)", "[0, 0, 0, 0, 0, 0, 0, 1, 0, 0]"),
    ("h(11,1)", "[0, 1, 1, 0, 1, 1, 0, 1, 0, 0]"),
    ("h(11,2)", "[0, 1, 1, 1, 1, 0, 0, 1, 0, 0]"),
    ("h(11,3)", "[0, 1, 1, 0, 1, 1, 0, 0, 0, 0]"),
    ("h(11,4)", "[0, 1, 1, 1, 1, 1, 1, 0, 0, 0]"),
    // n = 12
    ("g(12,1)", "[0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0]"),
    ("g(12,2)", "[0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0]"),
    ("g(12,3)", "[0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0]"),
    ("g(12,4)", "[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]"),
    ("h(12,1)", "[0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0]"),
    ("h(12,2)", "[0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0]"),
    ("h(12,3)", "[0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0]"),
    ("h(12,4)", "[0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0]"),
];

/// Largest dimension covered by [`LABELS`].
pub const LABELLED_MAX_DIM: usize = 12;

/// The row for a reference name such as `"g(8,1)"`.
pub fn row_for_label(name: &str) -> Option<RowVector> {
    LABELS
        .iter()
        .find(|(l, _)| *l == name)
        .map(|(_, r)| RowVector::parse(r).expect("reference rows are well formed"))
}

/// `m0(n)`, `m2(n)`, a reference name `g(n,i)`/`h(n,i)`, or the row itself
/// when none applies.
pub fn label(g: &VergneAlgebra) -> String {
    let n = g.dim();
    if g.is_m0() {
        return format!("m0({n})");
    }
    if g.is_m2() {
        return format!("m2({n})");
    }
    let row = g.row().to_string();
    LABELS
        .iter()
        .find(|(_, r)| *r == row)
        .map_or(row, |(l, _)| l.to_string())
}

fn check_range(n: usize) -> Result<()> {
    if !(MIN_DIM..=MAX_AMBIENT).contains(&n) {
        return Err(Error::DimensionOutOfRange { n, min: MIN_DIM, max: MAX_AMBIENT });
    }
    Ok(())
}

/// All Vergne algebras of dimension `n`, by increasing row (read as a binary
/// number).
pub fn enumerate(n: usize) -> Result<Vec<VergneAlgebra>> {
    check_range(n)?;
    let count = 1usize << (n - 4);
    Ok((0..count)
        .into_par_iter()
        .filter_map(|v| VergneAlgebra::from_row(&RowVector::from_free_value(n, v as u64)).ok())
        .collect())
}

/// Rows per dimension `5..=n_max` reached by extending `m₀(5)` and `m₂(5)`
/// through admissible cocycles. Agrees with [`enumerate`].
pub fn enumerate_by_extension(n_max: usize) -> Result<BTreeMap<usize, BTreeSet<RowVector>>> {
    check_range(n_max)?;
    let mut out = BTreeMap::new();
    let mut layer = vec![VergneAlgebra::m0(5)?, VergneAlgebra::m2(5)?];
    for n in 5..=n_max {
        out.insert(n, layer.iter().map(VergneAlgebra::row).collect::<BTreeSet<_>>());
        if n == n_max {
            break;
        }
        let next: BTreeMap<RowVector, VergneAlgebra> = layer
            .par_iter()
            .flat_map_iter(|g| {
                admissible_cocycles(g)
                    .into_iter()
                    .map(move |w| central_extension(g, &w).expect("admissible cocycles extend"))
            })
            .map(|h| (h.row(), h))
            .collect();
        layer = next.into_values().collect();
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub algebra: VergneAlgebra,
    pub label: String,
    /// Index of the truncation, for dimension at least 6.
    pub parent: Option<usize>,
}

/// Enumerated algebras of dimensions `5..=n_max` linked to their truncations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTree {
    /// Sorted by dimension, then row.
    pub nodes: Vec<TreeNode>,
}

impl ExtensionTree {
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes.iter().enumerate().filter_map(|(child, n)| n.parent.map(|p| (p, child)))
    }

    pub fn count_in_dim(&self, n: usize) -> usize {
        self.nodes.iter().filter(|x| x.algebra.dim() == n).count()
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }
}

pub fn extension_tree(n_max: usize) -> Result<ExtensionTree> {
    check_range(n_max)?;
    let mut nodes: Vec<TreeNode> = Vec::new();
    let mut index: BTreeMap<RowVector, usize> = BTreeMap::new();
    for n in MIN_DIM..=n_max {
        for g in enumerate(n)? {
            let parent = (n > MIN_DIM).then(|| {
                let t = g.truncate().expect("dimension above five").row();
                *index.get(&t).unwrap_or_else(|| panic!("truncation {t} of {g:?} was not enumerated"))
            });
            index.insert(g.row(), nodes.len());
            nodes.push(TreeNode { label: label(&g), algebra: g, parent });
        }
    }
    Ok(ExtensionTree { nodes })
}

/// A Graphviz digraph with one node per algebra and edges parent → child.
pub fn to_dot(tree: &ExtensionTree) -> String {
    let mut out = String::from("digraph vergne {\n    node [shape=box];\n");
    for node in &tree.nodes {
        let _ = writeln!(out, "    \"{}\";", node.label);
    }
    for (p, c) in tree.edges() {
        let _ = writeln!(out, "    \"{}\" -> \"{}\";", tree.nodes[p].label, tree.nodes[c].label);
    }
    out.push_str("}\n");
    out
}

/// `{"dimension": n, "algebras": [{"row", "label", "betti"}]}`.
pub fn enumeration_json(n: usize, algebras: &[VergneAlgebra]) -> Value {
    let entries: Vec<Value> = algebras
        .par_iter()
        .map(|g| {
            json!({
                "row": g.row().to_string(),
                "label": label(g),
                "betti": betti(g).betti,
            })
        })
        .collect();
    json!({ "dimension": n, "algebras": entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[VergneAlgebra]) -> Vec<String> {
        v.iter().map(|g| g.row().to_string()).collect()
    }

    #[test]
    fn dimension_five_and_seven() {
        let five = enumerate(5).unwrap();
        assert_eq!(five, vec![VergneAlgebra::m0(5).unwrap(), VergneAlgebra::m2(5).unwrap()]);
        assert_eq!(
            rows(&enumerate(7).unwrap()),
            ["[0, 0, 0, 0, 0, 0]", "[0, 0, 0, 1, 0, 0]", "[0, 1, 1, 0, 0, 0]", "[0, 1, 1, 1, 0, 0]"]
        );
        assert!(enumerate(4).is_err());
        assert!(enumerate(65).is_err());
    }

    #[test]
    fn labels() {
        let g = |s: &str| VergneAlgebra::from_row(&RowVector::parse(s).unwrap()).unwrap();
        assert_eq!(label(&g("[0, 0, 0, 1, 0, 0, 0]")), "g(8,1)");
        assert_eq!(label(&g("[0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0]")), "h(12,4)");
        assert_eq!(label(&VergneAlgebra::m0(9).unwrap()), "m0(9)");
        assert_eq!(label(&VergneAlgebra::m2(6).unwrap()), "m2(6)");
        assert_eq!(row_for_label("h(7,1)").unwrap().to_string(), "[0, 1, 1, 0, 0, 0]");
        assert!(row_for_label("g(13,1)").is_none());
    }

    #[test]
    fn small_trees() {
        let t = extension_tree(5).unwrap();
        assert_eq!(t.nodes.len(), 2);
        assert_eq!(t.edges().count(), 0);
        assert_eq!(to_dot(&t), "digraph vergne {\n    node [shape=box];\n    \"m0(5)\";\n    \"m2(5)\";\n}\n");

        let t = extension_tree(7).unwrap();
        assert_eq!(t.nodes.len(), 8);
        assert_eq!(t.edges().count(), 6);
        let parent_of = |l: &str| t.nodes[t.nodes[t.find(l).unwrap()].parent.unwrap()].label.clone();
        assert_eq!(parent_of("g(7,1)"), "m0(6)");
        assert_eq!(parent_of("h(7,1)"), "m2(6)");
        assert!(to_dot(&t).contains("\"m0(6)\" -> \"g(7,1)\";"));
    }

    #[test]
    fn forward_search_matches_rows_up_to_10() {
        let forward = enumerate_by_extension(10).unwrap();
        for n in 5..=10 {
            let by_row: BTreeSet<RowVector> = enumerate(n).unwrap().iter().map(VergneAlgebra::row).collect();
            assert_eq!(forward[&n], by_row, "n = {n}");
        }
    }
}
