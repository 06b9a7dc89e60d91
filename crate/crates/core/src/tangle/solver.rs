//! Quandle colorings of a tangle diagram.
//!
//! Colorings are enumerated by propagation plus backtracking. Whenever a
//! crossing has its incoming under-arc and over-arc colored, the outgoing
//! under-arc is forced (and symmetrically the incoming arc is forced by the
//! outgoing one through `◁̄`); a forced value that disagrees with an
//! existing color prunes the branch. When nothing is forced the solver
//! branches on a free arc: the start arc first, then the arc with the most
//! crossings already touching colored arcs, then the highest degree, then
//! the lowest id. Values are tried in increasing order, so the first
//! solution found is the lexicographically first in free-arc order.

use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;

use super::{Sign, TangleDiagram};
use crate::quandle::FiniteQuandle;

pub const DEFAULT_OUTPUT_CAP: usize = 1_000_000;

const NONE: usize = usize::MAX;

/// Arc-to-element assignment satisfying every crossing relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color(&self, arc: usize) -> usize {
        self.0[arc]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Checks every crossing relation of `d` for `assignment`.
pub fn is_coloring(d: &TangleDiagram, q: &FiniteQuandle, assignment: &[usize]) -> bool {
    assignment.len() == d.arc_count()
        && assignment.iter().all(|&c| c < q.order())
        && d.crossings().iter().all(|c| {
            let (i, o) = (assignment[c.under_in], assignment[c.over]);
            let expected = match c.sign {
                Sign::Positive => q.op(i, o),
                Sign::Negative => q.inv_op(i, o),
            };
            assignment[c.under_out] == expected
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    /// Every coloring agrees on the start and end arcs.
    Admissible,
    /// A coloring with different colors on the start and end arcs.
    NonAdmissible(Coloring),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            Admissibility::Admissible => None,
            Admissibility::NonAdmissible(c) => Some(c),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringMode {
    Count,
    List,
    Admissibility,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    Count(u64),
    List(Vec<Coloring>),
    Verdict(Admissibility),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("more than {0} colorings; raise the output cap or count instead")]
    OutputCapExceeded(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Maximum number of colorings returned in list mode.
    pub cap: usize,
    /// Split the search over the values of the first free arc using rayon.
    /// Results are identical to the sequential search.
    pub parallel: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { cap: DEFAULT_OUTPUT_CAP, parallel: false }
    }
}

pub fn enumerate_colorings(
    d: &TangleDiagram,
    q: &FiniteQuandle,
    mode: ColoringMode,
    options: SolverOptions,
) -> Result<ColoringOutcome, SolverError> {
    let solver = Solver::new(d, q);
    Ok(match mode {
        ColoringMode::Count => ColoringOutcome::Count(solver.count(options.parallel)),
        ColoringMode::List => ColoringOutcome::List(solver.list(options.cap, options.parallel)?),
        ColoringMode::Admissibility => ColoringOutcome::Verdict(solver.admissibility(options.parallel)),
    })
}

pub fn count_colorings(d: &TangleDiagram, q: &FiniteQuandle) -> u64 {
    Solver::new(d, q).count(false)
}

pub fn list_colorings(d: &TangleDiagram, q: &FiniteQuandle, cap: usize) -> Result<Vec<Coloring>, SolverError> {
    Solver::new(d, q).list(cap, false)
}

pub fn admissibility(d: &TangleDiagram, q: &FiniteQuandle) -> Admissibility {
    Solver::new(d, q).admissibility(false)
}

struct Solver<'a> {
    d: &'a TangleDiagram,
    q: &'a FiniteQuandle,
    /// Crossing indices touching each arc, without repeats.
    incident: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct State {
    colors: Vec<usize>,
    trail: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(d: &'a TangleDiagram, q: &'a FiniteQuandle) -> Self {
        let mut incident = vec![Vec::new(); d.arc_count()];
        for (i, c) in d.crossings().iter().enumerate() {
            for arc in c.arcs() {
                if incident[arc].last() != Some(&i) {
                    incident[arc].push(i);
                }
            }
        }
        Solver { d, q, incident }
    }

    fn empty_state(&self) -> State {
        State { colors: vec![NONE; self.d.arc_count()], trail: Vec::new() }
    }

    fn set(&self, s: &mut State, arc: usize, color: usize) -> bool {
        if s.colors[arc] != NONE {
            return s.colors[arc] == color;
        }
        s.colors[arc] = color;
        s.trail.push(arc);
        true
    }

    /// Colors `arc` and propagates every forced color; false on conflict.
    fn assign(&self, s: &mut State, arc: usize, color: usize) -> bool {
        let mut cursor = s.trail.len();
        if !self.set(s, arc, color) {
            return false;
        }
        while cursor < s.trail.len() {
            let a = s.trail[cursor];
            cursor += 1;
            for &ci in &self.incident[a] {
                let c = &self.d.crossings()[ci];
                let (i, o, u) = (s.colors[c.under_in], s.colors[c.over], s.colors[c.under_out]);
                if o == NONE {
                    continue;
                }
                let ok = if i != NONE {
                    let forced = match c.sign {
                        Sign::Positive => self.q.op(i, o),
                        Sign::Negative => self.q.inv_op(i, o),
                    };
                    self.set(s, c.under_out, forced)
                } else if u != NONE {
                    let forced = match c.sign {
                        Sign::Positive => self.q.inv_op(u, o),
                        Sign::Negative => self.q.op(u, o),
                    };
                    self.set(s, c.under_in, forced)
                } else {
                    true
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&self, s: &mut State, mark: usize) {
        while s.trail.len() > mark {
            let a = s.trail.pop().unwrap();
            s.colors[a] = NONE;
        }
    }

    fn pick(&self, s: &State) -> Option<usize> {
        let start = self.d.start_arc();
        if s.colors[start] == NONE {
            return Some(start);
        }
        let crossings = self.d.crossings();
        (0..self.d.arc_count())
            .filter(|&a| s.colors[a] == NONE)
            .max_by_key(|&a| {
                let touching = self.incident[a]
                    .iter()
                    .filter(|&&ci| crossings[ci].arcs().iter().any(|&b| b != a && s.colors[b] != NONE))
                    .count();
                (touching, self.incident[a].len(), std::cmp::Reverse(a))
            })
    }

    fn search<B>(&self, s: &mut State, visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>) -> ControlFlow<B> {
        let Some(arc) = self.pick(s) else {
            return visit(&s.colors);
        };
        for color in 0..self.q.order() {
            let mark = s.trail.len();
            if self.assign(s, arc, color) {
                self.search(s, visit)?;
            }
            self.undo(s, mark);
        }
        ControlFlow::Continue(())
    }

    /// Runs `run` once per value of the first branching arc, in value order,
    /// either sequentially or on the rayon pool.
    fn branches<T: Send>(&self, parallel: bool, run: impl Fn(&mut State) -> T + Sync) -> Vec<T> {
        let root = self.empty_state();
        let Some(arc) = self.pick(&root) else {
            let mut s = root;
            return vec![run(&mut s)];
        };
        let branch = |color: usize| {
            let mut s = root.clone();
            self.assign(&mut s, arc, color).then(|| run(&mut s))
        };
        if parallel {
            (0..self.q.order()).into_par_iter().filter_map(branch).collect()
        } else {
            (0..self.q.order()).filter_map(branch).collect()
        }
    }

    fn count(&self, parallel: bool) -> u64 {
        self.branches(parallel, |s| {
            let mut n = 0u64;
            let _ = self.search::<()>(s, &mut |_| {
                n += 1;
                ControlFlow::Continue(())
            });
            n
        })
        .into_iter()
        .sum()
    }

    fn list(&self, cap: usize, parallel: bool) -> Result<Vec<Coloring>, SolverError> {
        // Each branch stops as soon as it holds more than `cap` colorings.
        let parts = self.branches(parallel, |s| {
            let mut out = Vec::new();
            let _ = self.search(s, &mut |colors| {
                out.push(Coloring(colors.to_vec()));
                if out.len() > cap {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            out
        });
        let mut all = Vec::new();
        for part in parts {
            if all.len() + part.len() > cap {
                return Err(SolverError::OutputCapExceeded(cap));
            }
            all.extend(part);
        }
        Ok(all)
    }

    fn admissibility(&self, parallel: bool) -> Admissibility {
        let (start, end) = (self.d.start_arc(), self.d.end_arc());
        let witnesses = self.branches(parallel, |s| {
            match self.search(s, &mut |colors| {
                if colors[start] != colors[end] {
                    ControlFlow::Break(Coloring(colors.to_vec()))
                } else {
                    ControlFlow::Continue(())
                }
            }) {
                ControlFlow::Break(w) => Some(w),
                ControlFlow::Continue(()) => None,
            }
        });
        match witnesses.into_iter().flatten().next() {
            Some(w) => Admissibility::NonAdmissible(w),
            None => Admissibility::Admissible,
        }
    }
}
