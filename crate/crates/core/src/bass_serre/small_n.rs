//! The graphs of groups for `n = 0, 1, 2`.

use super::graph::{Edge, GraphOfGroups, Monomorphism, Side, Vertex};
use super::group::{GroupDesc, GroupExpr};
use crate::aut::{phi_x, swap, Family, Word};
use crate::error::{Error, Result};

fn vertex(id: &str, side: Side, group: GroupDesc) -> Vertex {
    Vertex { id: id.into(), side: Some(side), group }
}

fn segment(a: GroupDesc, u: GroupDesc, b: GroupDesc) -> GraphOfGroups {
    let (an, bn) = (a.name.clone(), b.name.clone());
    let un = u.name.clone();
    GraphOfGroups {
        vertices: vec![vertex("A", Side::A, a), vertex("B", Side::B, b)],
        edges: vec![Edge {
            id: "U".into(),
            from: "A".into(),
            to: "B".into(),
            group: u,
            a: Monomorphism::inclusion(&format!("{un} ↪ {an}")),
            b: Monomorphism::inclusion(&format!("{un} ↪ {bn}")),
        }],
    }
}

fn semidirect(normal: &str, acting: &str) -> GroupExpr {
    GroupExpr::semidirect(GroupExpr::named(normal), GroupExpr::named(acting))
}

/// `Γ_n` with its vertex and edge groups.
///
/// For `n = 2` the single `A`-vertex carries the torus `C*`; the three
/// `B`-vertices are the stabilizers of the three `B`-orbits, reached from
/// the base point by the identity, the swap and `Φ_x`.
pub fn gog_for_cn(n: usize) -> Result<GraphOfGroups> {
    let id = Word::identity;
    match n {
        0 => Ok(segment(
            GroupDesc::named("A").with_family(Family::A).with_section(id()),
            GroupDesc::named("U").with_family(Family::U).with_section(id()),
            GroupDesc::named("B").with_family(Family::B).with_section(id()),
        )),
        1 => Ok(segment(
            GroupDesc::named("A₁").with_family(Family::A1).with_section(id()),
            GroupDesc::named("U₁").with_family(Family::U1).with_section(id()),
            GroupDesc::named("B₁").with_family(Family::B1).with_section(id()),
        )),
        2 => {
            let torus = || GroupDesc::named("C*").with_family(Family::Torus);
            let centre = torus().with_section(id());
            let gy = GroupDesc::new(semidirect("G_{2,y}", "C*")).with_family(Family::G2yTorus).with_section(id());
            let gx = GroupDesc::new(semidirect("G_{2,x}", "C*")).with_family(Family::G2xTorus).with_section(swap());
            let g1 = GroupDesc::new(semidirect("G⁽¹⁾_{2,y}", "Z₂"))
                .with_family(Family::G2y1Z2)
                .with_section(phi_x());
            let edge = |id: &str, to: &str, group: GroupDesc, a: Monomorphism, b: &str| Edge {
                id: id.into(),
                from: "A".into(),
                to: to.into(),
                group,
                a,
                b: Monomorphism::inclusion(b),
            };
            Ok(GraphOfGroups {
                vertices: vec![
                    vertex("A", Side::A, centre),
                    vertex("B0", Side::B, gy),
                    vertex("B1", Side::B, gx),
                    vertex("B2", Side::B, g1),
                ],
                edges: vec![
                    edge("U0", "B0", torus().with_section(id()), Monomorphism::onto("C* = C*"), "C* ↪ G_{2,y} ⋊ C*"),
                    edge("U1", "B1", torus().with_section(swap()), Monomorphism::onto("C* = C*"), "C* ↪ G_{2,x} ⋊ C*"),
                    edge(
                        "U2",
                        "B2",
                        GroupDesc::named("Z₂").with_family(Family::Z2).with_section(phi_x()),
                        Monomorphism::inclusion("Z₂ = {±1} ⊂ C*"),
                        "Z₂ ↪ G⁽¹⁾_{2,y} ⋊ Z₂",
                    ),
                ],
            })
        }
        _ => Err(Error::Unsupported(format!("no graph of groups recorded for n = {n}"))),
    }
}
