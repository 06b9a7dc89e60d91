//! Isomorphism search between finite quandles.
//!
//! Elements are first split into classes by an invariant profile. The
//! search then assigns images class by class, smallest remaining class
//! first, and after each choice propagates every image forced by the
//! homomorphism law `f(x ◁ y) = f(x) ◁ f(y)` (and the same for `◁̄`).
//! Because a quandle map is determined by its values on a generating set,
//! most branches are decided after a handful of choices.

use std::collections::HashMap;

use super::FiniteQuandle;

/// Per-element invariant preserved by every isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementProfile {
    /// Sorted cycle lengths of the column permutation `S_x`.
    pub cycle_type: Vec<usize>,
    /// `#{y : x ◁ y = x}`.
    pub row_fixed: usize,
    /// Size of the orbit of `x` under the inner automorphism group.
    pub orbit_size: usize,
}

/// Sorted multiset of element profiles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuandleProfile(pub Vec<ElementProfile>);

impl QuandleProfile {
    pub fn of(q: &FiniteQuandle) -> Self {
        let mut p = element_profiles(q);
        p.sort();
        QuandleProfile(p)
    }
}

pub fn element_profiles(q: &FiniteQuandle) -> Vec<ElementProfile> {
    let n = q.order();
    let orbits = inner_orbits(q);
    let mut orbit_size = vec![0; n];
    for &r in &orbits {
        orbit_size[r] += 1;
    }
    (0..n)
        .map(|x| ElementProfile {
            cycle_type: column_cycle_type(q, x),
            row_fixed: (0..n).filter(|&y| q.op(x, y) == x).count(),
            orbit_size: orbit_size[orbits[x]],
        })
        .collect()
}

fn column_cycle_type(q: &FiniteQuandle, y: usize) -> Vec<usize> {
    let n = q.order();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = q.op(x, y);
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// Orbit representative for each element under the group generated by all
/// right translations, computed with union-find.
fn inner_orbits(q: &FiniteQuandle) -> Vec<usize> {
    let n = q.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, q.op(x, y)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

/// An isomorphism `a → b` if one exists. The result is deterministic: the
/// first map found in the fixed search order.
pub fn isomorphic(a: &FiniteQuandle, b: &FiniteQuandle) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let pa = element_profiles(a);
    let pb = element_profiles(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut ids: HashMap<&ElementProfile, usize> = HashMap::new();
    for p in &sa {
        let next = ids.len();
        ids.entry(p).or_insert(next);
    }
    let class_a: Vec<usize> = pa.iter().map(|p| ids[p]).collect();
    let class_b: Vec<usize> = pb.iter().map(|p| ids[p]).collect();

    let mut search = Search {
        a,
        b,
        class_a,
        class_b,
        fwd: vec![NONE; a.order()],
        back: vec![NONE; a.order()],
        trail: Vec::with_capacity(a.order()),
    };
    if search.run() {
        let map = search.fwd;
        debug_assert!(super::is_homomorphism(&map, a, b).unwrap());
        Some(map)
    } else {
        None
    }
}

const NONE: usize = usize::MAX;

struct Search<'q> {
    a: &'q FiniteQuandle,
    b: &'q FiniteQuandle,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
    fwd: Vec<usize>,
    back: Vec<usize>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let Some(x) = self.pick() else {
            return true;
        };
        let class = self.class_a[x];
        for y in 0..self.b.order() {
            if self.back[y] != NONE || self.class_b[y] != class {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.run() {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    /// Unassigned element of `a` whose class has the fewest unassigned
    /// members; lowest index on ties.
    fn pick(&self) -> Option<usize> {
        let classes = self.class_a.iter().max().map_or(0, |m| m + 1);
        let mut remaining = vec![0usize; classes];
        for x in 0..self.a.order() {
            if self.fwd[x] == NONE {
                remaining[self.class_a[x]] += 1;
            }
        }
        (0..self.a.order())
            .filter(|&x| self.fwd[x] == NONE)
            .min_by_key(|&x| (remaining[self.class_a[x]], x))
    }

    fn set(&mut self, x: usize, y: usize) -> bool {
        if self.fwd[x] != NONE {
            return self.fwd[x] == y;
        }
        if self.back[y] != NONE || self.class_a[x] != self.class_b[y] {
            return false;
        }
        self.fwd[x] = y;
        self.back[y] = x;
        self.trail.push(x);
        true
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        let start = self.trail.len();
        if !self.set(x, y) {
            return false;
        }
        let mut cursor = start;
        while cursor < self.trail.len() {
            let p = self.trail[cursor];
            cursor += 1;
            let fp = self.fwd[p];
            let mut i = 0;
            while i < self.trail.len() {
                let m = self.trail[i];
                i += 1;
                let fm = self.fwd[m];
                let derived = [
                    (self.a.op(p, m), self.b.op(fp, fm)),
                    (self.a.op(m, p), self.b.op(fm, fp)),
                    (self.a.inv_op(p, m), self.b.inv_op(fp, fm)),
                    (self.a.inv_op(m, p), self.b.inv_op(fm, fp)),
                ];
                for (u, v) in derived {
                    if !self.set(u, v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.back[self.fwd[x]] = NONE;
            self.fwd[x] = NONE;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral_quandle, trivial_quandle};

    #[test]
    fn r3_relabelled_is_isomorphic() {
        let r3 = dihedral_quandle(3);
        let relabelled = r3.relabel(&[1, 2, 0]);
        let f = isomorphic(&r3, &relabelled).unwrap();
        assert!(crate::quandle::is_homomorphism(&f, &r3, &relabelled).unwrap());
    }

    #[test]
    fn r3_is_not_trivial() {
        assert!(isomorphic(&dihedral_quandle(3), &trivial_quandle(3)).is_none());
    }

    #[test]
    fn different_orders() {
        assert!(isomorphic(&trivial_quandle(3), &trivial_quandle(4)).is_none());
    }

    #[test]
    fn profiles_of_r4() {
        // R4 splits into two orbits {0, 2} and {1, 3}.
        let p = element_profiles(&dihedral_quandle(4));
        assert!(p.iter().all(|e| e.orbit_size == 2));
        assert_eq!(p[0].cycle_type, vec![1, 1, 2]);
        assert_eq!(p[0].row_fixed, 2);
    }
}
