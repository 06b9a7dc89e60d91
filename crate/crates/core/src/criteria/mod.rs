//! Closed-form admissibility criteria from the Hopf and trefoil tangles.
//!
//! A quandle fails the Hopf criterion iff some `x, y` satisfy
//! `x ◁ y = x` and `y ◁ x ≠ y`, and fails the trefoil criterion iff some
//! `x, y` satisfy `(x ◁ y) ◁ x = y` and `(y ◁ x) ◁ y ≠ x`. Either failure
//! proves the quandle does not embed in any conjugation quandle.

mod census;

use std::fmt;

use crate::presentation::{Presentation, PresentationKind, Relation};
use crate::quandle::FiniteQuandle;

pub use census::{census_galex, class_counts, CensusError, CensusRecord, ClassCount, IsoClasses, CENSUS_HEADER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    Hopf,
    Trefoil,
}

impl WitnessKind {
    /// Name of the built-in tangle this criterion is read off from.
    pub fn tangle_name(self) -> &'static str {
        match self {
            WitnessKind::Hopf => "hopf",
            WitnessKind::Trefoil => "trefoil",
        }
    }

    pub fn find(self, q: &FiniteQuandle) -> Option<Witness> {
        match self {
            WitnessKind::Hopf => hopf_witness(q),
            WitnessKind::Trefoil => trefoil_witness(q),
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tangle_name())
    }
}

/// A pair of elements violating one of the criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub x: usize,
    pub y: usize,
    pub kind: WitnessKind,
}

impl Witness {
    /// Re-checks the defining equation and inequation against `q`.
    pub fn holds(&self, q: &FiniteQuandle) -> bool {
        let (x, y) = (self.x, self.y);
        if x >= q.order() || y >= q.order() {
            return false;
        }
        match self.kind {
            WitnessKind::Hopf => q.op(x, y) == x && q.op(y, x) != y,
            WitnessKind::Trefoil => q.op(q.op(x, y), x) == y && q.op(q.op(y, x), y) != x,
        }
    }
}

fn first_pair(q: &FiniteQuandle, kind: WitnessKind) -> Option<Witness> {
    q.elements()
        .flat_map(|x| q.elements().map(move |y| Witness { x, y, kind }))
        .find(|w| w.holds(q))
}

/// First `(x, y)` in lexicographic order with `x ◁ y = x` and `y ◁ x ≠ y`.
pub fn hopf_witness(q: &FiniteQuandle) -> Option<Witness> {
    first_pair(q, WitnessKind::Hopf)
}

/// First `(x, y)` in lexicographic order with `(x ◁ y) ◁ x = y` and
/// `(y ◁ x) ◁ y ≠ x`.
pub fn trefoil_witness(q: &FiniteQuandle) -> Option<Witness> {
    first_pair(q, WitnessKind::Trefoil)
}

/// Presentation of the associated group: generators `g0..g(n-1)` and the
/// relation `g_y⁻¹ g_x g_y = g_(x ◁ y)` for every ordered pair, unsimplified.
pub fn associated_group_presentation(q: &FiniteQuandle) -> Presentation {
    Presentation {
        kind: PresentationKind::AssociatedGroup,
        generators: q.elements().map(|x| format!("g{x}")).collect(),
        relations: q
            .elements()
            .flat_map(|x| q.elements().map(move |y| (x, y)))
            .map(|(x, y)| Relation::Conjugation { left: x, right: y, result: q.op(x, y) })
            .collect(),
    }
}
