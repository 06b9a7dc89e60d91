use std::collections::{HashSet, VecDeque};

use super::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubgroupError {
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("subset does not contain the identity")]
    MissingIdentity,
    #[error("subset is not closed: {0}*{1} is missing")]
    NotClosed(usize, usize),
}

/// A subgroup of a borrowed group, with its normality precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    elements: Vec<usize>,
    normal: bool,
}

impl<'g> Subgroup<'g> {
    /// Checks that `elements` is a subgroup of `group` and records whether
    /// it is normal. Order and duplicates in the input are irrelevant.
    pub fn new(group: &'g FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self, SubgroupError> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x >= group.order()) {
            return Err(SubgroupError::OutOfRange(x));
        }
        let member = membership(group, &elements);
        if !member[group.identity()] {
            return Err(SubgroupError::MissingIdentity);
        }
        // Finite and closed under products implies closed under inverses.
        for &a in &elements {
            for &b in &elements {
                if !member[group.mul(a, b)] {
                    return Err(SubgroupError::NotClosed(a, b));
                }
            }
        }
        Ok(Self::from_closed(group, elements))
    }

    fn from_closed(group: &'g FiniteGroup, elements: Vec<usize>) -> Self {
        let member = membership(group, &elements);
        let normal = group
            .elements()
            .all(|g| elements.iter().all(|&h| member[group.conjugate(h, g)]));
        Subgroup { group, elements, normal }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of `g` in the sorted element list.
    pub fn rank(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

fn membership(group: &FiniteGroup, elements: &[usize]) -> Vec<bool> {
    let mut member = vec![false; group.order()];
    for &x in elements {
        member[x] = true;
    }
    member
}

/// Sorted elements of the subgroup generated by `seed`.
pub(crate) fn closure(g: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let mut member = vec![false; g.order()];
    member[g.identity()] = true;
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in seed {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    queue
}

pub fn generated_subgroup<'g>(g: &'g FiniteGroup, seed: &[usize]) -> Subgroup<'g> {
    Subgroup::from_closed(g, closure(g, seed))
}

/// Every subgroup of `g`, sorted by size then elements.
///
/// Every subgroup is a join of cyclic subgroups, so a breadth-first walk
/// that starts from the cyclic subgroups and joins each discovered
/// subgroup with each cyclic one reaches all of them.
pub fn subgroups(g: &FiniteGroup) -> Vec<Subgroup<'_>> {
    let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<(Vec<usize>, Vec<usize>)> = VecDeque::new();
    for x in g.elements() {
        let c = closure(g, &[x]);
        if seen.insert(c.clone()) {
            cyclic.push((x, c.clone()));
            queue.push_back((c, vec![x]));
        }
    }
    while let Some((elements, gens)) = queue.pop_front() {
        for (c, _) in &cyclic {
            if elements.binary_search(c).is_ok() {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*c);
            let joined = closure(g, &joined_gens);
            if seen.insert(joined.clone()) {
                queue.push_back((joined, joined_gens));
            }
        }
    }
    let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all.into_iter().map(|e| Subgroup::from_closed(g, e)).collect()
}

/// Normal subgroups of `g`, including the trivial subgroup and `g` itself.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup<'_>> {
    subgroups(g).into_iter().filter(Subgroup::is_normal).collect()
}

/// The center `Z(g)`.
pub fn center(g: &FiniteGroup) -> Subgroup<'_> {
    let elements = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup::from_closed(g, elements)
}
