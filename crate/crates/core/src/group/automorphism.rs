use super::subgroup::closure;
use super::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomorphismError {
    #[error("map has {len} entries, group has order {order}")]
    WrongLength { len: usize, order: usize },
    #[error("map is not a bijection: {0} is hit twice or out of range")]
    NotBijective(usize),
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("map does not fix the identity")]
    IdentityMoved,
}

/// An automorphism of a borrowed group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomorphism<'g> {
    group: &'g FiniteGroup,
    map: Vec<usize>,
}

impl<'g> GroupAutomorphism<'g> {
    /// Validates `map` as an automorphism of `group`.
    pub fn new(group: &'g FiniteGroup, map: Vec<usize>) -> Result<Self, AutomorphismError> {
        let n = group.order();
        if map.len() != n {
            return Err(AutomorphismError::WrongLength { len: map.len(), order: n });
        }
        let mut hit = vec![false; n];
        for &y in &map {
            if y >= n || hit[y] {
                return Err(AutomorphismError::NotBijective(y));
            }
            hit[y] = true;
        }
        if map[group.identity()] != group.identity() {
            return Err(AutomorphismError::IdentityMoved);
        }
        for a in 0..n {
            for b in 0..n {
                if map[group.mul(a, b)] != group.mul(map[a], map[b]) {
                    return Err(AutomorphismError::NotHomomorphism(a, b));
                }
            }
        }
        Ok(GroupAutomorphism { group, map })
    }

    pub fn identity(group: &'g FiniteGroup) -> Self {
        GroupAutomorphism { group, map: group.elements().collect() }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m)
    }
}

/// Greedy generating set: repeatedly add the element whose inclusion
/// enlarges the generated subgroup the most (lowest index on ties).
pub(crate) fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = closure(g, &[]);
    while current.len() < g.order() {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for x in g.elements() {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(x);
            let span = closure(g, &seed);
            if best.as_ref().is_none_or(|(_, b)| span.len() > b.len()) {
                best = Some((x, span));
            }
        }
        let (x, span) = best.expect("a proper subgroup misses some element");
        gens.push(x);
        current = span;
    }
    gens
}

/// All automorphisms of `g`, sorted lexicographically by their maps.
///
/// Generator images are restricted to elements of the same order. Each
/// candidate assignment is extended along a breadth-first word expansion
/// and rejected at the first inconsistency; survivors are re-verified.
pub fn automorphisms(g: &FiniteGroup) -> Vec<GroupAutomorphism<'_>> {
    let gens = greedy_generators(g);
    let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&y| orders[y] == orders[s]).collect())
        .collect();

    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, &gens, &candidates, &mut images, &mut found);
    found.sort();
    found
        .into_iter()
        .map(|map| GroupAutomorphism::new(g, map).expect("extension is an automorphism"))
        .collect()
}

fn search(
    g: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if images.len() == gens.len() {
        if let Some(map) = extend(g, gens, images) {
            found.push(map);
        }
        return;
    }
    for &y in &candidates[images.len()] {
        if images.contains(&y) {
            continue;
        }
        images.push(y);
        search(g, gens, candidates, images, found);
        images.pop();
    }
}

/// Extends generator images to a map with `f(x s) = f(x) f(s)`; `None` if
/// that is inconsistent or not injective.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[g.identity()] = g.identity();
    used[g.identity()] = true;
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let xs = g.mul(x, s);
            let image = g.mul(map[x], t);
            if map[xs] == usize::MAX {
                if used[image] {
                    return None;
                }
                map[xs] = image;
                used[image] = true;
                queue.push(xs);
            } else if map[xs] != image {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn cyclic_counts() {
        let z2 = GroupSpec::Cyclic(2).build().unwrap();
        assert_eq!(automorphisms(&z2).len(), 1);
        let z4 = GroupSpec::Cyclic(4).build().unwrap();
        let auts = automorphisms(&z4);
        assert_eq!(auts.len(), 2);
        assert_eq!(auts[0].map(), &[0, 1, 2, 3]);
        assert_eq!(auts[1].map(), &[0, 3, 2, 1]);
    }

    #[test]
    fn trivial_group_has_identity_only() {
        let g = GroupSpec::Cyclic(1).build().unwrap();
        let auts = automorphisms(&g);
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn quaternion_automorphisms_include_ijk_cycle() {
        let q = GroupSpec::Quaternion8.build().unwrap();
        let auts = automorphisms(&q);
        assert_eq!(auts.len(), 24);
        let cycle = vec![0, 1, 4, 5, 6, 7, 2, 3];
        assert!(auts.iter().any(|a| a.map() == cycle.as_slice()));
        let maps: Vec<_> = auts.iter().map(|a| a.map().to_vec()).collect();
        assert!(maps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn greedy_generators_generate() {
        for spec in ["symmetric:4", "quaternion8", "product(cyclic:2,product(cyclic:2,cyclic:2))"] {
            let g: GroupSpec = spec.parse().unwrap();
            let g = g.build().unwrap();
            let gens = greedy_generators(&g);
            assert_eq!(closure(&g, &gens).len(), g.order(), "{spec}");
        }
        let c6 = GroupSpec::Cyclic(6).build().unwrap();
        assert_eq!(greedy_generators(&c6), vec![1]);
    }

    #[test]
    fn rejects_bad_maps() {
        let z4 = GroupSpec::Cyclic(4).build().unwrap();
        assert!(matches!(GroupAutomorphism::new(&z4, vec![0, 1]), Err(AutomorphismError::WrongLength { .. })));
        assert!(matches!(GroupAutomorphism::new(&z4, vec![0, 1, 1, 3]), Err(AutomorphismError::NotBijective(1))));
        assert!(matches!(GroupAutomorphism::new(&z4, vec![1, 0, 2, 3]), Err(AutomorphismError::IdentityMoved)));
        assert!(matches!(GroupAutomorphism::new(&z4, vec![0, 2, 1, 3]), Err(AutomorphismError::NotHomomorphism(..))));
    }
}
