//! Generator/relation presentations emitted as plain text.
//!
//! ```text
//! # fundamental_quandle
//! gen a0
//! gen a1
//! rel a0 * a1 = a1
//! ```
//!
//! In quandle relations `x * y` stands for `x ◁ y` and `x / y` for
//! `x ◁̄ y`. Group relations are words of generators and inverses
//! (`g1^-1 g0 g1`). No simplification is ever applied.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationKind {
    AssociatedGroup,
    FundamentalQuandle,
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresentationKind::AssociatedGroup => "associated_group",
            PresentationKind::FundamentalQuandle => "fundamental_quandle",
        })
    }
}

/// A single relation; generator references are indices into
/// [`Presentation::generators`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// `left ◁ right = result`, or `left ◁̄ right = result` when `inverse`.
    Quandle { left: usize, right: usize, inverse: bool, result: usize },
    /// `right⁻¹ left right = result` in a group.
    Conjugation { left: usize, right: usize, result: usize },
}

impl Relation {
    fn generators(&self) -> [usize; 3] {
        match *self {
            Relation::Quandle { left, right, result, .. } | Relation::Conjugation { left, right, result } => {
                [left, right, result]
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn references_only_generators(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.generators().iter().all(|&g| g < self.generators.len()))
    }

    /// Text of one relation, `lhs = rhs`.
    pub fn relation_text(&self, r: &Relation) -> String {
        let name = |i: usize| self.generators[i].as_str();
        match *r {
            Relation::Quandle { left, right, inverse, result } => {
                let op = if inverse { '/' } else { '*' };
                format!("{} {op} {} = {}", name(left), name(right), name(result))
            }
            Relation::Conjugation { left, right, result } => {
                format!("{}^-1 {} {} = {}", name(right), name(left), name(right), name(result))
            }
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.kind)?;
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        for r in &self.relations {
            writeln!(f, "rel {}", self.relation_text(r))?;
        }
        Ok(())
    }
}
