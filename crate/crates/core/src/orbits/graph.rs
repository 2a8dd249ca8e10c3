//! The bipartite orbit graph: `A`-orbits and `B`-orbits as vertices,
//! `U`-orbits as edges.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::sample::SampleSet;
use super::signature::{orbit_signature, Signature};
use crate::cm::{CmPoint, Subgroup};
use crate::error::{Error, Result};

/// One orbit class of the sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub subgroup: Subgroup,
    /// First sampled point in the class.
    pub representative: CmPoint,
    pub dim: usize,
    pub signature: Signature,
    /// Indices into the sample.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitEdge {
    pub record: OrbitRecord,
    /// Index into `a_vertices`.
    pub a: usize,
    /// Index into `b_vertices`.
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitGraph {
    pub n: usize,
    pub a_vertices: Vec<OrbitRecord>,
    pub b_vertices: Vec<OrbitRecord>,
    pub edges: Vec<OrbitEdge>,
    pub connected: bool,
}

/// Signatures of one point for the three subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classified {
    pub a: Signature,
    pub b: Signature,
    pub u: Signature,
}

pub fn classify(points: &[CmPoint]) -> Vec<Classified> {
    points
        .par_iter()
        .map(|p| Classified {
            a: orbit_signature(Subgroup::A, p),
            b: orbit_signature(Subgroup::B, p),
            u: orbit_signature(Subgroup::U, p),
        })
        .collect()
}

/// Groups point indices by signature; classes come out sorted by signature.
fn group(points: &[CmPoint], sigs: &[&Signature]) -> Vec<OrbitRecord> {
    let mut classes: BTreeMap<&Signature, Vec<usize>> = BTreeMap::new();
    for (i, s) in sigs.iter().enumerate() {
        classes.entry(*s).or_default().push(i);
    }
    classes
        .into_iter()
        .map(|(sig, members)| OrbitRecord {
            subgroup: sig.subgroup,
            representative: points[members[0]].clone(),
            dim: sig.dim,
            signature: sig.clone(),
            members,
        })
        .collect()
}

impl OrbitGraph {
    /// `C₀` is a point: one orbit of each kind.
    pub fn trivial() -> OrbitGraph {
        let rec = |subgroup| OrbitRecord {
            subgroup,
            representative: crate::cm::base_point(1),
            dim: 0,
            signature: Signature { subgroup, dim: 0, invariants: Vec::new() },
            members: Vec::new(),
        };
        OrbitGraph {
            n: 0,
            a_vertices: vec![rec(Subgroup::A)],
            b_vertices: vec![rec(Subgroup::B)],
            edges: vec![OrbitEdge { record: rec(Subgroup::U), a: 0, b: 0 }],
            connected: true,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.a_vertices.len() + self.b_vertices.len()
    }

    /// Number of edges at each vertex, `A`-vertices first.
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut da = vec![0; self.a_vertices.len()];
        let mut db = vec![0; self.b_vertices.len()];
        for e in &self.edges {
            da[e.a] += 1;
            db[e.b] += 1;
        }
        (da, db)
    }

    /// Vertices of degree above one.
    pub fn nonterminal_count(&self) -> usize {
        let (da, db) = self.degrees();
        da.iter().chain(&db).filter(|&&d| d > 1).count()
    }

    /// `|E| − |V| + 1` for a connected graph.
    pub fn betti_number(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertex_count())
    }
}

fn connected(na: usize, nb: usize, edges: &[OrbitEdge]) -> bool {
    let total = na + nb;
    if total == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for e in edges {
        let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, na + e.b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    (0..total).all(|i| find(&mut parent, i) == root)
}

/// Clusters the sample and assembles the graph. Every `U`-class must sit
/// inside exactly one `A`-class and one `B`-class; anything else means the
/// signatures are not orbit invariants and is reported as an error.
pub fn build_orbit_graph(samples: &SampleSet) -> Result<OrbitGraph> {
    if samples.n == 0 {
        return Ok(OrbitGraph::trivial());
    }
    if samples.points.is_empty() {
        return Err(Error::Unsupported("empty sample".into()));
    }
    let cls = classify(&samples.points);
    build_from_classified(samples.n, &samples.points, &cls)
}

pub fn build_from_classified(n: usize, points: &[CmPoint], cls: &[Classified]) -> Result<OrbitGraph> {
    let a_vertices = group(points, &cls.iter().map(|c| &c.a).collect::<Vec<_>>());
    let b_vertices = group(points, &cls.iter().map(|c| &c.b).collect::<Vec<_>>());
    let u_classes = group(points, &cls.iter().map(|c| &c.u).collect::<Vec<_>>());
    let index_of = |verts: &[OrbitRecord], sig: &Signature| verts.iter().position(|v| &v.signature == sig);
    let mut edges = Vec::new();
    for rec in u_classes {
        let unique = |pick: &dyn Fn(&Classified) -> &Signature, verts: &[OrbitRecord]| -> Result<usize> {
            let first = pick(&cls[rec.members[0]]);
            if let Some(&bad) = rec.members.iter().find(|&&i| pick(&cls[i]) != first) {
                return Err(Error::InconsistentClasses(format!(
                    "U-class [{}] meets both [{}] and [{}]",
                    rec.signature,
                    first,
                    pick(&cls[bad])
                )));
            }
            Ok(index_of(verts, first).expect("class exists"))
        };
        let a = unique(&|c| &c.a, &a_vertices)?;
        let b = unique(&|c| &c.b, &b_vertices)?;
        edges.push(OrbitEdge { record: rec, a, b });
    }
    let connected = connected(a_vertices.len(), b_vertices.len(), &edges);
    Ok(OrbitGraph { n, a_vertices, b_vertices, edges, connected })
}
