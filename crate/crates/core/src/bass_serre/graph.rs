use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::group::GroupDesc;
use crate::error::{Error, Result};

/// Which factor's orbits a vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    pub group: GroupDesc,
}

/// How an edge group embeds into an endpoint group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomorphism {
    pub label: String,
    /// The image is the whole endpoint group.
    #[serde(default)]
    pub surjective: bool,
}

impl Monomorphism {
    pub fn inclusion(label: &str) -> Self {
        Monomorphism { label: label.to_string(), surjective: false }
    }

    pub fn onto(label: &str) -> Self {
        Monomorphism { label: label.to_string(), surjective: true }
    }
}

/// An oriented edge `from → to` carrying `a: group ↪ from`, `b: group ↪ to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub from: String,
    pub to: String,
    pub group: GroupDesc,
    pub a: Monomorphism,
    pub b: Monomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphOfGroups {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl GraphOfGroups {
    /// Checks ids are unique and endpoints exist. Connectivity is checked
    /// separately by [`spanning_tree`] so that partially built graphs can
    /// still be exported.
    pub fn validate(&self) -> Result<()> {
        let mut ids = BTreeSet::new();
        for v in &self.vertices {
            if !ids.insert(v.id.as_str()) {
                return Err(Error::Graph(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let mut eids = BTreeSet::new();
        for e in &self.edges {
            if !eids.insert(e.id.as_str()) {
                return Err(Error::Graph(format!("duplicate edge id {:?}", e.id)));
            }
            for end in [&e.from, &e.to] {
                if !ids.contains(end.as_str()) {
                    return Err(Error::Graph(format!("edge {:?} has unknown endpoint {end:?}", e.id)));
                }
            }
        }
        Ok(())
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub(crate) fn endpoints(&self, e: &Edge) -> (usize, usize) {
        (self.vertex_index(&e.from).expect("validated"), self.vertex_index(&e.to).expect("validated"))
    }

    pub fn is_connected(&self) -> bool {
        self.validate().is_ok() && spanning_tree(self).is_ok()
    }

    /// Vertices with more than one incident edge.
    pub fn nonterminal_vertices(&self) -> Vec<&str> {
        let mut deg: HashMap<&str, usize> = HashMap::new();
        for e in &self.edges {
            *deg.entry(e.from.as_str()).or_default() += 1;
            *deg.entry(e.to.as_str()).or_default() += 1;
        }
        self.vertices
            .iter()
            .filter(|v| deg.get(v.id.as_str()).copied().unwrap_or(0) > 1)
            .map(|v| v.id.as_str())
            .collect()
    }

    /// First Betti number `|E| − |V| + 1` of a connected graph.
    pub fn betti_number(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertices.len())
    }
}

/// Breadth-first maximal tree from the least vertex id, scanning incident
/// edges in id order. Returns edge indices, sorted.
pub fn spanning_tree(g: &GraphOfGroups) -> Result<Vec<usize>> {
    g.validate()?;
    if g.vertices.is_empty() {
        return Ok(Vec::new());
    }
    let mut order: Vec<usize> = (0..g.edges.len()).collect();
    order.sort_by(|&i, &j| g.edges[i].id.cmp(&g.edges[j].id));
    let root = (0..g.vertices.len()).min_by(|&i, &j| g.vertices[i].id.cmp(&g.vertices[j].id)).expect("nonempty");
    let mut seen = vec![false; g.vertices.len()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut tree = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &ei in &order {
            let (a, b) = g.endpoints(&g.edges[ei]);
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                tree.push(ei);
                queue.push_back(other);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Graph("graph is disconnected".into()));
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Checks that `tree` is a spanning tree of `g`.
pub fn check_tree(g: &GraphOfGroups, tree: &[usize]) -> Result<()> {
    g.validate()?;
    let nv = g.vertices.len();
    if tree.iter().any(|&e| e >= g.edges.len()) {
        return Err(Error::Graph("tree edge out of range".into()));
    }
    if tree.iter().collect::<BTreeSet<_>>().len() != tree.len() {
        return Err(Error::Graph("tree lists an edge twice".into()));
    }
    if nv > 0 && tree.len() != nv - 1 {
        return Err(Error::Graph(format!("a spanning tree needs {} edges, got {}", nv - 1, tree.len())));
    }
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for &ei in tree {
        let (a, b) = g.endpoints(&g.edges[ei]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Err(Error::Graph(format!("tree edges contain a cycle at {:?}", g.edges[ei].id)));
        }
        parent[ra] = rb;
    }
    Ok(())
}
