//! Finite quandles as operation tables.
//!
//! `table[x][y] = x ◁ y`. The right translation `S_y: x ↦ x ◁ y` is column
//! `y`; its inverse `x ◁̄ y = S_y⁻¹(x)` is kept in a second table because
//! the coloring solver needs it in inner loops.

mod construct;
mod iso;

use std::fmt;
use std::str::FromStr;

use crate::text::{self, SyntaxError};

pub use construct::{
    conj_quandle, dihedral_quandle, galex, hopf_extension, hopf_pair_index, q8_ijk_automorphism, trivial_quandle, ConstructionError,
    NamedQuandle,
};
pub use iso::{element_profiles, isomorphic, ElementProfile, QuandleProfile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuandleError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not idempotent: {0} ◁ {0} != {0}")]
    NotIdempotent(usize),
    #[error("column {0} is not a bijection")]
    ColumnNotBijective(usize),
    #[error("not right self-distributive at x={0}, y={1}, z={2}")]
    NotSelfDistributive(usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuandleFileError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Invalid(#[from] QuandleError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("map has {len} entries, source quandle has order {order}")]
    SizeMismatch { len: usize, order: usize },
    #[error("image {0} is outside the target quandle")]
    ImageOutOfRange(usize),
}

/// A validated finite quandle.
#[derive(Clone)]
pub struct FiniteQuandle {
    order: usize,
    table: Vec<usize>,
    inv_table: Vec<usize>,
    label: Option<String>,
}

impl PartialEq for FiniteQuandle {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteQuandle {}

impl fmt::Debug for FiniteQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteQuandle")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

/// Checks the quandle axioms and precomputes the inverse operation.
///
/// Reports the first violation among: idempotence (by `x`), column
/// bijectivity (by `y`), right self-distributivity (by `(x, y, z)` in
/// lexicographic order).
pub fn validate_quandle(table: &[Vec<usize>]) -> Result<FiniteQuandle, QuandleError> {
    let n = table.len();
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(QuandleError::NotSquare { row, len: r.len(), expected: n });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(QuandleError::EntryOutOfRange { row, col, value });
        }
    }
    let flat: Vec<usize> = table.iter().flatten().copied().collect();
    validate_flat(n, flat)
}

fn validate_flat(n: usize, table: Vec<usize>) -> Result<FiniteQuandle, QuandleError> {
    let op = |x: usize, y: usize| table[x * n + y];
    if let Some(x) = (0..n).find(|&x| op(x, x) != x) {
        return Err(QuandleError::NotIdempotent(x));
    }
    let mut inv_table = vec![usize::MAX; n * n];
    for y in 0..n {
        for x in 0..n {
            let slot = &mut inv_table[op(x, y) * n + y];
            if *slot != usize::MAX {
                return Err(QuandleError::ColumnNotBijective(y));
            }
            *slot = x;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = op(x, y);
            for z in 0..n {
                if op(xy, z) != op(op(x, z), op(y, z)) {
                    return Err(QuandleError::NotSelfDistributive(x, y, z));
                }
            }
        }
    }
    Ok(FiniteQuandle { order: n, table, inv_table, label: None })
}

impl FiniteQuandle {
    /// Validates a table given as a closure on `0..n`.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, QuandleError> {
        let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| op(x, y)).collect()).collect();
        validate_quandle(&table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x ◁ y`
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// `x ◁̄ y`, the unique `w` with `w ◁ y = x`.
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_table[x * self.order + y]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// True if every column is the identity map.
    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.op(x, y) == x))
    }

    /// The quandle on `subset` (relabelled `0..k` in sorted order) under the
    /// restricted operation. Fails if the subset is not a subquandle.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteQuandle, QuandleError> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in sorted.iter().enumerate() {
            pos[x] = i;
        }
        let k = sorted.len();
        if k == 0 {
            return Err(QuandleError::Empty);
        }
        let table: Vec<Vec<usize>> = sorted
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                sorted
                    .iter()
                    .enumerate()
                    .map(|(j, &y)| {
                        let v = self.op(x, y);
                        if pos[v] == usize::MAX {
                            Err(QuandleError::EntryOutOfRange { row: i, col: j, value: v })
                        } else {
                            Ok(pos[v])
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        validate_quandle(&table)
    }

    /// Relabels elements: element `x` of `self` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteQuandle {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        validate_flat(n, table).expect("relabelling preserves the axioms")
    }
}

/// Smallest subset containing `seed` closed under `◁` and `◁̄` in both
/// operand positions. Returned sorted.
///
/// # Panics
/// If a seed element is not an element of `q`.
pub fn subquandle_closure(q: &FiniteQuandle, seed: &[usize]) -> Vec<usize> {
    let mut member = vec![false; q.order()];
    let mut members = Vec::new();
    let mut queue = Vec::new();
    for &s in seed {
        assert!(s < q.order(), "seed element {s} out of range");
        if !member[s] {
            member[s] = true;
            members.push(s);
            queue.push(s);
        }
    }
    while let Some(a) = queue.pop() {
        let mut i = 0;
        while i < members.len() {
            let b = members[i];
            i += 1;
            for c in [q.op(a, b), q.op(b, a), q.inv_op(a, b), q.inv_op(b, a)] {
                if !member[c] {
                    member[c] = true;
                    members.push(c);
                    queue.push(c);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

/// True iff `f(x ◁ y) = f(x) ◁ f(y)` for all `x, y` in `src`.
pub fn is_homomorphism(f: &[usize], src: &FiniteQuandle, dst: &FiniteQuandle) -> Result<bool, MapError> {
    if f.len() != src.order() {
        return Err(MapError::SizeMismatch { len: f.len(), order: src.order() });
    }
    if let Some(&y) = f.iter().find(|&&y| y >= dst.order()) {
        return Err(MapError::ImageOutOfRange(y));
    }
    Ok(src
        .elements()
        .all(|x| src.elements().all(|y| f[src.op(x, y)] == dst.op(f[x], f[y]))))
}

/// Writes the quandle table file format: `quandle <n>` then `n` rows.
impl fmt::Display for FiniteQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_square_table(f, "quandle", self.order, |x, y| self.op(x, y))
    }
}

impl FromStr for FiniteQuandle {
    type Err = QuandleFileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = text::parse_square_table(s, "quandle")?;
        Ok(validate_quandle(&rows)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> FiniteQuandle {
        validate_quandle(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap()
    }

    #[test]
    fn trivial_table_is_valid() {
        let q = FiniteQuandle::from_fn(4, |x, _| x).unwrap();
        assert!(q.is_trivial());
        assert_eq!(q.inv_op(3, 1), 3);
    }

    #[test]
    fn dihedral_r3_is_valid() {
        let q = r3();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(q.op(x, y), (2 * y + 3 - x) % 3);
                assert_eq!(q.op(q.inv_op(x, y), y), x);
                assert_eq!(q.inv_op(q.op(x, y), y), x);
            }
        }
    }

    #[test]
    fn first_violation_is_reported() {
        assert_eq!(
            validate_quandle(&[vec![0, 0], vec![0, 1]]).unwrap_err(),
            QuandleError::ColumnNotBijective(0)
        );
        assert_eq!(validate_quandle(&[vec![1, 0], vec![0, 1]]).unwrap_err(), QuandleError::NotIdempotent(0));
        let bad = vec![vec![0, 2, 1], vec![1, 1, 0], vec![2, 0, 2]];
        assert_eq!(validate_quandle(&bad).unwrap_err(), QuandleError::NotSelfDistributive(0, 1, 2));
    }

    #[test]
    fn closure_examples() {
        let trivial = FiniteQuandle::from_fn(4, |x, _| x).unwrap();
        assert_eq!(subquandle_closure(&trivial, &[1]), vec![1]);
        assert_eq!(subquandle_closure(&r3(), &[0, 1]), vec![0, 1, 2]);
        assert_eq!(subquandle_closure(&r3(), &[2]), vec![2]);
    }

    #[test]
    fn homomorphism_examples() {
        let q = r3();
        assert!(is_homomorphism(&[0, 1, 2], &q, &q).unwrap());
        assert!(is_homomorphism(&[1, 1, 1], &q, &q).unwrap());
        // Every permutation of Z_3 is affine, so the transposition (0 1) is an automorphism of R3.
        assert!(is_homomorphism(&[1, 0, 2], &q, &q).unwrap());
        assert!(!is_homomorphism(&[0, 0, 1], &q, &q).unwrap());
        assert_eq!(is_homomorphism(&[0, 1], &q, &q).unwrap_err(), MapError::SizeMismatch { len: 2, order: 3 });
        assert_eq!(is_homomorphism(&[0, 1, 5], &q, &q).unwrap_err(), MapError::ImageOutOfRange(5));
    }

    #[test]
    fn restrict_checks_closure() {
        let q = r3();
        assert!(q.restrict(&[0, 1]).is_err());
        assert_eq!(q.restrict(&[2]).unwrap().order(), 1);
    }

    #[test]
    fn file_round_trip() {
        let text = r3().to_string();
        assert_eq!(text, "quandle 3\n0 2 1\n2 1 0\n1 0 2\n");
        assert_eq!(text.parse::<FiniteQuandle>().unwrap(), r3());
        assert!(matches!("quandle 2\n0 0\n0 1\n".parse::<FiniteQuandle>(), Err(QuandleFileError::Invalid(_))));
    }
}
