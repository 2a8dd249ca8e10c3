//! Tying orbit graphs built from samples to graphs of groups.

use serde::Serialize;

use super::graph::{Edge, GraphOfGroups, Monomorphism, Side, Vertex};
use super::group::GroupDesc;
use crate::aut::Word;
use crate::cm::{base_point, Subgroup};
use crate::error::{Error, Result};
use crate::orbits::{orbit_signature, reduce_to_basepoint, OrbitGraph, OrbitRecord};

/// A word carrying the base point into the class: the inverse of a word
/// that reduces the class representative.
fn section_for(rec: &OrbitRecord, budget: usize) -> Result<Option<Word>> {
    if rec.members.is_empty() {
        return Ok(Some(Word::identity()));
    }
    Ok(reduce_to_basepoint(&rec.representative, budget)?.word.map(|w| w.inverse()))
}

/// Graph of groups on an orbit graph: vertex `Aᵢ`/`Bⱼ` carries the stabilizer
/// of its class, edge `U_k` the `U`-stabilizer. Sections come from
/// [`reduce_to_basepoint`]; classes it cannot reduce get none.
pub fn from_orbit_graph(og: &OrbitGraph, budget: usize) -> Result<GraphOfGroups> {
    let mut vertices = Vec::new();
    for (side, prefix, recs) in [(Side::A, "A", &og.a_vertices), (Side::B, "B", &og.b_vertices)] {
        for (i, rec) in recs.iter().enumerate() {
            let mut group = GroupDesc::named(&format!("{prefix}_{i}"));
            group.section = section_for(rec, budget)?;
            vertices.push(Vertex { id: format!("{prefix}{i}"), side: Some(side), group });
        }
    }
    let mut edges = Vec::new();
    for (k, e) in og.edges.iter().enumerate() {
        let name = format!("U_{k}");
        let mut group = GroupDesc::named(&name);
        group.section = section_for(&e.record, budget)?;
        edges.push(Edge {
            id: format!("U{k}"),
            from: format!("A{}", e.a),
            to: format!("B{}", e.b),
            group,
            a: Monomorphism::inclusion(&format!("{name} ↪ A_{}", e.a)),
            b: Monomorphism::inclusion(&format!("{name} ↪ B_{}", e.b)),
        });
    }
    Ok(GraphOfGroups { vertices, edges })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMatch {
    /// `(graph-of-groups vertex id, orbit class label)`.
    pub vertices: Vec<(String, String)>,
    pub edges: Vec<(String, String)>,
    pub isomorphic: bool,
}

/// Matches each vertex and edge of `gog` to the orbit class of its section
/// applied to the base point, and checks the result is an isomorphism of
/// oriented bipartite graphs.
pub fn match_orbit_graph(gog: &GraphOfGroups, og: &OrbitGraph) -> Result<GraphMatch> {
    let n = og.n;
    let counts_match = gog.vertices.len() == og.vertex_count() && gog.edges.len() == og.edges.len();
    if n == 0 {
        return Ok(GraphMatch { vertices: vec![], edges: vec![], isomorphic: counts_match && og.connected });
    }
    let p0 = base_point(n);
    let locate = |section: &Option<Word>, h: Subgroup, recs: &[&OrbitRecord]| -> Result<Option<usize>> {
        let Some(w) = section else { return Ok(None) };
        let sig = orbit_signature(h, &w.act(&p0)?);
        Ok(recs.iter().position(|r| r.signature == sig))
    };
    let a_recs: Vec<&OrbitRecord> = og.a_vertices.iter().collect();
    let b_recs: Vec<&OrbitRecord> = og.b_vertices.iter().collect();
    let u_recs: Vec<&OrbitRecord> = og.edges.iter().map(|e| &e.record).collect();
    let mut vmap = Vec::new();
    let mut vimg: Vec<Option<(Side, usize)>> = Vec::new();
    for v in &gog.vertices {
        let side = v.side.ok_or_else(|| Error::Graph(format!("vertex {:?} has no side", v.id)))?;
        let (h, recs, prefix) = match side {
            Side::A => (Subgroup::A, &a_recs, "A"),
            Side::B => (Subgroup::B, &b_recs, "B"),
        };
        let idx = locate(&v.group.section, h, recs)?;
        vmap.push((v.id.clone(), idx.map_or("?".into(), |i| format!("{prefix}{i}"))));
        vimg.push(idx.map(|i| (side, i)));
    }
    let mut emap = Vec::new();
    let mut ok = counts_match && vimg.iter().all(Option::is_some);
    let mut used_v: Vec<(Side, usize)> = vimg.iter().flatten().copied().collect();
    used_v.sort();
    used_v.dedup();
    ok &= used_v.len() == gog.vertices.len();
    let mut used_e = Vec::new();
    for e in &gog.edges {
        let idx = locate(&e.group.section, Subgroup::U, &u_recs)?;
        emap.push((e.id.clone(), idx.map_or("?".into(), |i| format!("U{i}"))));
        match idx {
            Some(k) => {
                used_e.push(k);
                let (fi, ti) = gog.endpoints(e);
                let want = (Some((Side::A, og.edges[k].a)), Some((Side::B, og.edges[k].b)));
                ok &= (vimg[fi], vimg[ti]) == want;
            }
            None => ok = false,
        }
    }
    used_e.sort_unstable();
    used_e.dedup();
    ok &= used_e.len() == gog.edges.len();
    Ok(GraphMatch { vertices: vmap, edges: emap, isomorphic: ok && og.connected })
}
