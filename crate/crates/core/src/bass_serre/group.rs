use std::fmt;

use serde::{Deserialize, Serialize};

use crate::aut::{Family, Word};

/// Shape of a vertex or edge group, enough to render it canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum GroupExpr {
    Trivial,
    Named { name: String },
    /// `normal ⋊ acting`.
    Semidirect { normal: Box<GroupExpr>, acting: Box<GroupExpr> },
    Amalgam { left: Box<GroupExpr>, over: Box<GroupExpr>, right: Box<GroupExpr> },
}

impl GroupExpr {
    pub fn named(name: &str) -> Self {
        GroupExpr::Named { name: name.to_string() }
    }

    pub fn semidirect(normal: GroupExpr, acting: GroupExpr) -> Self {
        GroupExpr::Semidirect { normal: Box::new(normal), acting: Box::new(acting) }
    }

    /// Needs parentheses when used as an amalgam factor.
    pub fn is_compound(&self) -> bool {
        matches!(self, GroupExpr::Semidirect { .. } | GroupExpr::Amalgam { .. })
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Trivial => f.write_str("1"),
            GroupExpr::Named { name } => f.write_str(name),
            GroupExpr::Semidirect { normal, acting } => write!(f, "{normal} ⋊ {acting}"),
            GroupExpr::Amalgam { left, over, right } => {
                write!(f, "{left} {} {right}", amalgam_symbol(&over.to_string()))
            }
        }
    }
}

/// `*_U` for a one-character subscript, `*_{…}` otherwise.
pub fn amalgam_symbol(over: &str) -> String {
    if over.chars().count() == 1 {
        format!("*_{over}")
    } else {
        format!("*_{{{over}}}")
    }
}

/// A vertex or edge group: a display name, its structure, and optionally a
/// machine-checkable family of elements of `G₀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDesc {
    pub name: String,
    pub structure: GroupExpr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    /// Word `c` with `c·g·c⁻¹` in the relevant factor for members `g`; its
    /// action on the base point picks the orbit this group stabilizes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<Word>,
}

impl GroupDesc {
    pub fn new(structure: GroupExpr) -> Self {
        GroupDesc { name: structure.to_string(), structure, family: None, section: None }
    }

    pub fn named(name: &str) -> Self {
        Self::new(GroupExpr::named(name))
    }

    pub fn trivial() -> Self {
        Self::new(GroupExpr::Trivial)
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = Some(family);
        self
    }

    pub fn with_section(mut self, section: Word) -> Self {
        self.section = Some(section);
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.structure == GroupExpr::Trivial
    }

    /// The name as an amalgam factor.
    pub fn factor_text(&self) -> String {
        if self.structure.is_compound() {
            format!("({})", self.name)
        } else {
            self.name.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let g = GroupDesc::new(GroupExpr::semidirect(GroupExpr::named("G_{2,x}"), GroupExpr::named("C*")));
        assert_eq!(g.name, "G_{2,x} ⋊ C*");
        assert_eq!(g.factor_text(), "(G_{2,x} ⋊ C*)");
        assert_eq!(GroupDesc::named("A₁").factor_text(), "A₁");
        assert_eq!(amalgam_symbol("U"), "*_U");
        assert_eq!(amalgam_symbol("U₁"), "*_{U₁}");
        assert_eq!(GroupDesc::trivial().name, "1");
    }
}
