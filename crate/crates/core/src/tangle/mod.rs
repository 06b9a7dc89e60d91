//! (1,1)-tangle diagrams, their text format, and the built-in tangles.
//!
//! A diagram is purely combinatorial: arcs `0..arc_count`, a start arc and
//! an end arc on the long strand, and a list of crossings. At a crossing
//! the under-strand passes from `under_in` to `under_out` beneath `over`,
//! and a coloring must satisfy
//!
//! ```text
//! sign = +1:  C(under_out) = C(under_in) ◁ C(over)
//! sign = -1:  C(under_out) = C(under_in) ◁̄ C(over)
//! ```
//!
//! Text format, one item per line, `#` starts a comment line:
//!
//! ```text
//! arcs 3
//! start 0
//! end 2
//! crossing + 1 0 2
//! crossing + 2 1 1
//! ```

mod solver;

use std::fmt;
use std::str::FromStr;

use crate::presentation::{Presentation, PresentationKind, Relation};
use crate::text::{content_lines, SyntaxError};

pub use solver::{
    admissibility, count_colorings, enumerate_colorings, is_coloring, list_colorings, Admissibility, Coloring,
    ColoringMode, ColoringOutcome, SolverError, SolverOptions, DEFAULT_OUTPUT_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

impl Crossing {
    pub fn positive(over: usize, under_in: usize, under_out: usize) -> Self {
        Crossing { sign: Sign::Positive, over, under_in, under_out }
    }

    pub fn negative(over: usize, under_in: usize, under_out: usize) -> Self {
        Crossing { sign: Sign::Negative, over, under_in, under_out }
    }

    fn arcs(&self) -> [usize; 3] {
        [self.over, self.under_in, self.under_out]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangleError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("diagram has no arcs")]
    NoArcs,
    #[error("arc {arc} referenced by {context} does not exist")]
    DanglingArc { arc: usize, context: String },
    #[error("arc {0} is the outgoing under-arc of more than one crossing")]
    DuplicateUnderOut(usize),
    #[error("arc {0} is the incoming under-arc of more than one crossing")]
    DuplicateUnderIn(usize),
    #[error("long strand is broken: {0}")]
    DisconnectedStrand(String),
    #[error("unknown built-in tangle {0:?}")]
    UnknownName(String),
}

/// A validated (1,1)-tangle diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleDiagram {
    arc_count: usize,
    start_arc: usize,
    end_arc: usize,
    crossings: Vec<Crossing>,
}

impl TangleDiagram {
    pub fn new(arc_count: usize, start_arc: usize, end_arc: usize, crossings: Vec<Crossing>) -> Result<Self, TangleError> {
        if arc_count == 0 {
            return Err(TangleError::NoArcs);
        }
        let dangling = |arc: usize, context: String| TangleError::DanglingArc { arc, context };
        if start_arc >= arc_count {
            return Err(dangling(start_arc, "start".into()));
        }
        if end_arc >= arc_count {
            return Err(dangling(end_arc, "end".into()));
        }
        let mut next = vec![None; arc_count];
        let mut out_seen = vec![false; arc_count];
        for (i, c) in crossings.iter().enumerate() {
            if let Some(&arc) = c.arcs().iter().find(|&&a| a >= arc_count) {
                return Err(dangling(arc, format!("crossing {i}")));
            }
            if std::mem::replace(&mut out_seen[c.under_out], true) {
                return Err(TangleError::DuplicateUnderOut(c.under_out));
            }
            if next[c.under_in].replace(c.under_out).is_some() {
                return Err(TangleError::DuplicateUnderIn(c.under_in));
            }
        }
        if out_seen[start_arc] {
            return Err(TangleError::DisconnectedStrand(format!(
                "start arc {start_arc} is entered from a crossing"
            )));
        }
        if next[end_arc].is_some() {
            return Err(TangleError::DisconnectedStrand(format!("end arc {end_arc} continues under a crossing")));
        }
        if start_arc == end_arc && !crossings.is_empty() {
            return Err(TangleError::DisconnectedStrand("start and end coincide in a diagram with crossings".into()));
        }
        let mut visited = vec![false; arc_count];
        let mut arc = start_arc;
        while arc != end_arc {
            visited[arc] = true;
            arc = next[arc].ok_or_else(|| {
                TangleError::DisconnectedStrand(format!("arc {arc} does not continue towards end arc {end_arc}"))
            })?;
            if visited[arc] {
                return Err(TangleError::DisconnectedStrand(format!("long strand loops back to arc {arc}")));
            }
        }
        Ok(TangleDiagram { arc_count, start_arc, end_arc, crossings })
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn start_arc(&self) -> usize {
        self.start_arc
    }

    pub fn end_arc(&self) -> usize {
        self.end_arc
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Arcs of the long strand from start to end.
    pub fn long_strand(&self) -> Vec<usize> {
        let mut strand = vec![self.start_arc];
        let mut arc = self.start_arc;
        while arc != self.end_arc {
            arc = self
                .crossings
                .iter()
                .find(|c| c.under_in == arc)
                .map(|c| c.under_out)
                .expect("validated diagram");
            strand.push(arc);
        }
        strand
    }

    /// The diagram with arc `a` renamed to `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, TangleError> {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing { sign: c.sign, over: perm[c.over], under_in: perm[c.under_in], under_out: perm[c.under_out] })
            .collect();
        TangleDiagram::new(self.arc_count, perm[self.start_arc], perm[self.end_arc], crossings)
    }

    /// Generators `a0..`, one relation per crossing in diagram order.
    pub fn fundamental_quandle_presentation(&self) -> Presentation {
        Presentation {
            kind: PresentationKind::FundamentalQuandle,
            generators: (0..self.arc_count).map(|a| format!("a{a}")).collect(),
            relations: self
                .crossings
                .iter()
                .map(|c| Relation::Quandle {
                    left: c.under_in,
                    right: c.over,
                    inverse: c.sign == Sign::Negative,
                    result: c.under_out,
                })
                .collect(),
        }
    }
}

pub fn fundamental_quandle_presentation(d: &TangleDiagram) -> Presentation {
    d.fundamental_quandle_presentation()
}

/// Built-in tangles: `hopf`, `trefoil` and `unknot`.
///
/// Colouring the two free arcs `x = C(1)`, `y = C(0)` of `hopf` forces
/// `C(2) = y ◁ x` and leaves the constraint `x ◁ (y ◁ x) = x`. In
/// `trefoil`, `x = C(0)` and `y = C(1)` force `C(2) = x ◁ y` and
/// `C(3) = y ◁ (x ◁ y)`, with the constraint `(x ◁ y) ◁ x = y`.
pub fn builtin_tangle(name: &str) -> Result<TangleDiagram, TangleError> {
    let d = match name {
        "hopf" => TangleDiagram::new(3, 0, 2, vec![Crossing::positive(1, 0, 2), Crossing::positive(2, 1, 1)]),
        "trefoil" => TangleDiagram::new(
            4,
            0,
            3,
            vec![Crossing::positive(1, 0, 2), Crossing::positive(0, 2, 1), Crossing::positive(2, 1, 3)],
        ),
        "unknot" => TangleDiagram::new(1, 0, 0, vec![]),
        _ => return Err(TangleError::UnknownName(name.to_string())),
    };
    Ok(d.expect("built-in tangles are valid"))
}

pub const BUILTIN_TANGLES: [&str; 3] = ["hopf", "trefoil", "unknot"];

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arcs {}", self.arc_count)?;
        writeln!(f, "start {}", self.start_arc)?;
        writeln!(f, "end {}", self.end_arc)?;
        for c in &self.crossings {
            writeln!(f, "crossing {} {} {} {}", c.sign, c.over, c.under_in, c.under_out)?;
        }
        Ok(())
    }
}

impl FromStr for TangleDiagram {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut arcs = None;
        let mut start = None;
        let mut end = None;
        let mut crossings = Vec::new();
        for (line, text) in content_lines(s) {
            let words: Vec<&str> = text.split_whitespace().collect();
            let number = |w: &str| {
                w.parse::<usize>()
                    .map_err(|_| SyntaxError::new(line, format!("invalid arc number {w:?}")))
            };
            let set_once = |slot: &mut Option<usize>, key: &str| -> Result<(), SyntaxError> {
                if words.len() != 2 {
                    return Err(SyntaxError::new(line, format!("expected `{key} <n>`")));
                }
                if slot.replace(number(words[1])?).is_some() {
                    return Err(SyntaxError::new(line, format!("duplicate `{key}` line")));
                }
                Ok(())
            };
            match words[0] {
                "arcs" => set_once(&mut arcs, "arcs")?,
                "start" => set_once(&mut start, "start")?,
                "end" => set_once(&mut end, "end")?,
                "crossing" => {
                    if words.len() != 5 {
                        return Err(SyntaxError::new(line, "expected `crossing <+|-> <over> <under_in> <under_out>`").into());
                    }
                    let sign = match words[1] {
                        "+" => Sign::Positive,
                        "-" => Sign::Negative,
                        other => return Err(SyntaxError::new(line, format!("invalid sign {other:?}")).into()),
                    };
                    crossings.push(Crossing {
                        sign,
                        over: number(words[2])?,
                        under_in: number(words[3])?,
                        under_out: number(words[4])?,
                    });
                }
                other => return Err(SyntaxError::new(line, format!("unknown keyword {other:?}")).into()),
            }
        }
        let last = s.lines().count().max(1);
        let arcs = arcs.ok_or_else(|| SyntaxError::new(last, "missing `arcs` line"))?;
        let start = start.ok_or_else(|| SyntaxError::new(last, "missing `start` line"))?;
        let end = end.ok_or_else(|| SyntaxError::new(last, "missing `end` line"))?;
        TangleDiagram::new(arcs, start, end, crossings)
    }
}
