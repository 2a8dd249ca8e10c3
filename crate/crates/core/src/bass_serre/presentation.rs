//! Presentations of fundamental groups of graphs of groups relative to a
//! maximal tree: vertex groups, one letter per edge outside the tree,
//! `a_e(g) = b_e(g)` for tree edges and `e⁻¹ a_e(g) e = b_e(g)` otherwise.

use std::fmt;

use serde::Serialize;

use super::graph::{check_tree, GraphOfGroups};
use super::group::amalgam_symbol;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Relation {
    /// `a_e(g) = b_e(g)` for `g` in the edge group.
    Identify { edge: String, group: String, from: String, to: String, a: String, b: String },
    /// `e⁻¹ a_e(g) e = b_e(g)` for `g` in the edge group.
    Conjugate { letter: String, group: String, from: String, to: String, a: String, b: String },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Identify { edge, group, .. } => write!(f, "a_{edge}(g) = b_{edge}(g), g ∈ {group}"),
            Relation::Conjugate { letter, group, .. } => {
                write!(f, "{letter}⁻¹·a_{letter}(g)·{letter} = b_{letter}(g), g ∈ {group}")
            }
        }
    }
}

/// Structure of the canonical rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Expr {
    Trivial,
    /// A vertex group, possibly with groups absorbed along edges whose
    /// edge group maps onto them.
    Factor { group: String, vertices: Vec<String> },
    Amalgam { left: Box<Expr>, over: String, edge: String, right: Box<Expr> },
    /// Edge letters added to a base group.
    Hnn { base: Box<Expr>, letters: Vec<String>, relations: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    /// Vertex group names followed by the edge letters.
    pub generators: Vec<String>,
    pub vertex_groups: Vec<String>,
    /// One per edge outside the tree.
    pub edge_letters: Vec<String>,
    pub tree_edges: Vec<String>,
    pub relations: Vec<Relation>,
    pub ast: Expr,
    pub text: String,
}

impl Presentation {
    /// Free group on the edge letters: every group involved is trivial.
    pub fn is_free(&self) -> bool {
        self.ast_base_trivial() && self.relations.iter().all(|r| matches!(r, Relation::Conjugate { group, .. } if group == "1"))
    }

    fn ast_base_trivial(&self) -> bool {
        match &self.ast {
            Expr::Trivial => true,
            Expr::Hnn { base, .. } => matches!(**base, Expr::Trivial),
            _ => false,
        }
    }

    pub fn free_rank(&self) -> Option<usize> {
        self.is_free().then_some(self.edge_letters.len())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

struct Factor {
    text: String,
    key: String,
    expr: Expr,
}

/// Renders the tree part. Tree edges whose edge group maps onto an endpoint
/// are contracted first (that endpoint is absorbed into the neighbour with
/// the least group name); the remaining factors are then joined starting
/// from the least name, always attaching the least-named neighbour next.
fn render_tree(g: &GraphOfGroups, tree: &[usize]) -> (String, Expr) {
    let nv = g.vertices.len();
    if nv == 0 {
        return ("1".into(), Expr::Trivial);
    }
    let name = |v: usize| g.vertices[v].group.name.clone();
    let mut class: Vec<usize> = (0..nv).collect();
    let mut absorbed_any = vec![false; nv];
    let mut contracted = vec![false; g.edges.len()];
    let mut by_name: Vec<usize> = (0..nv).collect();
    by_name.sort_by_key(|&v| (name(v), g.vertices[v].id.clone()));
    loop {
        let mut step = None;
        'outer: for &v in &by_name {
            if class[v] != v || absorbed_any[v] {
                continue;
            }
            let mut best: Option<(String, String, usize, usize)> = None;
            for &ei in tree {
                if contracted[ei] {
                    continue;
                }
                let e = &g.edges[ei];
                let (a, b) = g.endpoints(e);
                let other = if a == v && e.a.surjective {
                    b
                } else if b == v && e.b.surjective {
                    a
                } else {
                    continue;
                };
                let target = class[other];
                if target == v {
                    continue;
                }
                let cand = (name(target), e.id.clone(), ei, target);
                if best.as_ref().is_none_or(|b| (&cand.0, &cand.1) < (&b.0, &b.1)) {
                    best = Some(cand);
                }
            }
            if let Some((_, _, ei, target)) = best {
                step = Some((v, ei, target));
                break 'outer;
            }
        }
        let Some((v, ei, target)) = step else { break };
        contracted[ei] = true;
        absorbed_any[target] = true;
        for c in class.iter_mut() {
            if *c == v {
                *c = target;
            }
        }
    }
    let mut factors: Vec<Option<Factor>> = (0..nv).map(|_| None).collect();
    for r in 0..nv {
        if class[r] == r {
            let members: Vec<String> =
                (0..nv).filter(|&v| class[v] == r).map(|v| g.vertices[v].id.clone()).collect();
            let grp = &g.vertices[r].group;
            let expr = if grp.is_trivial() && members.len() == 1 {
                Expr::Trivial
            } else {
                Expr::Factor { group: grp.name.clone(), vertices: members }
            };
            factors[r] = Some(Factor { text: grp.factor_text(), key: grp.name.clone(), expr });
        }
    }
    let reps: Vec<usize> = (0..nv).filter(|&v| class[v] == v).collect();
    let start = *reps.iter().min_by_key(|&&r| (factors[r].as_ref().unwrap().key.clone(), r)).unwrap();
    if reps.len() == 1 {
        let f = factors[start].take().unwrap();
        return (g.vertices[start].group.name.clone(), f.expr);
    }
    let mut inside = vec![false; nv];
    inside[start] = true;
    let first = factors[start].take().unwrap();
    let (mut text, mut expr) = (first.text, first.expr);
    loop {
        let mut best: Option<(String, String, usize, usize)> = None;
        for &ei in tree {
            if contracted[ei] {
                continue;
            }
            let (a, b) = g.endpoints(&g.edges[ei]);
            let (ca, cb) = (class[a], class[b]);
            let outside = match (inside[ca], inside[cb]) {
                (true, false) => cb,
                (false, true) => ca,
                _ => continue,
            };
            let cand = (factors[outside].as_ref().unwrap().key.clone(), g.edges[ei].id.clone(), ei, outside);
            if best.as_ref().is_none_or(|b| (&cand.0, &cand.1) < (&b.0, &b.1)) {
                best = Some(cand);
            }
        }
        let Some((_, _, ei, outside)) = best else { break };
        inside[outside] = true;
        let f = factors[outside].take().unwrap();
        let e = &g.edges[ei];
        text = format!("{text} {} {}", amalgam_symbol(&e.group.name), f.text);
        expr = Expr::Amalgam { left: Box::new(expr), over: e.group.name.clone(), edge: e.id.clone(), right: Box::new(f.expr) };
    }
    (text, expr)
}

/// The presentation relative to the maximal tree `tree` (edge indices).
pub fn fundamental_group_presentation(g: &GraphOfGroups, tree: &[usize]) -> Result<Presentation> {
    check_tree(g, tree)?;
    let mut tree_sorted = tree.to_vec();
    tree_sorted.sort_unstable();
    let in_tree = |i: usize| tree_sorted.binary_search(&i).is_ok();
    let vertex_groups: Vec<String> = g.vertices.iter().map(|v| v.group.name.clone()).collect();
    let mut edge_letters = Vec::new();
    let mut relations = Vec::new();
    let mut tree_edges = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        let fields = (e.group.name.clone(), e.from.clone(), e.to.clone(), e.a.label.clone(), e.b.label.clone());
        let (group, from, to, a, b) = fields;
        if in_tree(i) {
            tree_edges.push(e.id.clone());
            relations.push(Relation::Identify { edge: e.id.clone(), group, from, to, a, b });
        } else {
            edge_letters.push(e.id.clone());
            relations.push(Relation::Conjugate { letter: e.id.clone(), group, from, to, a, b });
        }
    }
    let (tree_text, tree_expr) = render_tree(g, &tree_sorted);
    let (text, ast) = if edge_letters.is_empty() {
        (tree_text, tree_expr)
    } else {
        let loops: Vec<&Relation> = relations
            .iter()
            .filter(|r| matches!(r, Relation::Conjugate { group, .. } if group != "1"))
            .collect();
        let base_trivial = matches!(tree_expr, Expr::Trivial);
        let letters = edge_letters.join(", ");
        let text = if loops.is_empty() {
            if base_trivial {
                format!("⟨{letters}⟩")
            } else if tree_text.contains(' ') {
                format!("({tree_text}) * ⟨{letters}⟩")
            } else {
                format!("{tree_text} * ⟨{letters}⟩")
            }
        } else {
            let rels: Vec<String> = loops.iter().map(|r| r.to_string()).collect();
            let head = if base_trivial { letters.clone() } else { format!("{tree_text}, {letters}") };
            format!("⟨{head} | {}⟩", rels.join("; "))
        };
        let ast = Expr::Hnn { base: Box::new(tree_expr), letters: edge_letters.clone(), relations: loops.len() };
        (text, ast)
    };
    let mut generators = vertex_groups.clone();
    generators.extend(edge_letters.iter().cloned());
    Ok(Presentation { generators, vertex_groups, edge_letters, tree_edges, relations, ast, text })
}
