//! Finite groups stored as Cayley tables.
//!
//! Elements are the indices `0..n`. The identity is detected during
//! validation and need not be index 0.

mod automorphism;
mod catalog;
mod subgroup;

use std::fmt;
use std::str::FromStr;

use crate::text::{self, SyntaxError};

pub use automorphism::{automorphisms, AutomorphismError, GroupAutomorphism};
pub use catalog::{standard_catalog, CatalogError, GroupSpec, DEFAULT_MAX_ORDER};
pub use subgroup::{center, generated_subgroup, normal_subgroups, subgroups, Subgroup, SubgroupError};

/// Axiom violation found by [`validate_group`]. Each variant names the
/// first offending indices in row-major scan order.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square: {value} repeats in {axis} {index}")]
    NotLatinSquare { axis: &'static str, index: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// Error reading a group table file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupFileError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Invalid(#[from] GroupError),
}

/// A validated finite group. Immutable after construction.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: Option<String>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish()
    }
}

/// Checks every group axiom on `table` and returns the validated group.
///
/// Checks run in the order shape, range, Latin square, identity,
/// associativity; the first failure is reported.
pub fn validate_group(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(GroupError::NotSquare { row, len: r.len(), expected: n });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(GroupError::EntryOutOfRange { row, col, value });
        }
    }
    let flat: Vec<usize> = table.iter().flatten().copied().collect();

    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = flat[i * n + j];
            if seen[v] == i {
                return Err(GroupError::NotLatinSquare { axis: "row", index: i, value: v });
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = flat[i * n + j];
            if seen[v] == j {
                return Err(GroupError::NotLatinSquare { axis: "column", index: j, value: v });
            }
            seen[v] = j;
        }
    }

    let identity = (0..n)
        .find(|&e| (0..n).all(|x| flat[e * n + x] == x && flat[x * n + e] == x))
        .ok_or(GroupError::NoIdentity)?;

    for a in 0..n {
        for b in 0..n {
            let ab = flat[a * n + b];
            for c in 0..n {
                if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }

    // Latin rows guarantee exactly one solution of x*y = e per row.
    let inverse = (0..n)
        .map(|x| (0..n).find(|&y| flat[y * n + x] == identity).unwrap())
        .collect();

    Ok(FiniteGroup {
        order: n,
        table: flat,
        identity,
        inverse,
        name: None,
        labels: None,
    })
}

impl FiniteGroup {
    /// Builds a group from a multiplication closure on `0..n`, validating it.
    pub fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect();
        validate_group(&table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    /// `h⁻¹ g h`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Human-readable element labels, when the construction provides them.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    /// Position of the element with the given label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }
}

/// Writes the group table file format: `group <n>` then `n` rows.
impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_square_table(f, "group", self.order, |i, j| self.mul(i, j))
    }
}

impl FromStr for FiniteGroup {
    type Err = GroupFileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = text::parse_square_table(s, "group")?;
        Ok(validate_group(&rows)?)
    }
}
