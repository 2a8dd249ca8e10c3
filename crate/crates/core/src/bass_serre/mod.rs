//! Graphs of groups, maximal trees, presentations of their fundamental
//! groups, the small-`n` instances, and DOT export.

pub mod dot;
pub mod graph;
pub mod group;
pub mod orbit_link;
pub mod small_n;
pub mod presentation;

pub use dot::dot_export;
pub use graph::{check_tree, spanning_tree, Edge, GraphOfGroups, Monomorphism, Side, Vertex};
pub use group::{amalgam_symbol, GroupDesc, GroupExpr};
pub use orbit_link::{from_orbit_graph, match_orbit_graph, GraphMatch};
pub use small_n::gog_for_cn;
pub use presentation::{fundamental_group_presentation, Expr, Presentation, Relation};

/// Presentation of `gog_for_cn(n)` relative to its canonical tree.
pub fn recorded_presentation(n: usize) -> crate::Result<Presentation> {
    let g = gog_for_cn(n)?;
    let t = spanning_tree(&g)?;
    fundamental_group_presentation(&g, &t)
}
