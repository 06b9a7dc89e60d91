//! Built-in families of small groups with frozen element orderings.
//!
//! | family                | order | element `i`                                   |
//! |-----------------------|-------|-----------------------------------------------|
//! | `cyclic:n`            | n     | the residue `i mod n`                         |
//! | `dihedral:n`          | 2n    | `r^(i mod n) s^(i / n)`, `s r s = r⁻¹`        |
//! | `quaternion8`         | 8     | `1, -1, i, -i, j, -j, k, -k`                  |
//! | `gen_quaternion16`    | 16    | `a^(i mod 8) b^(i / 8)`, `b² = a⁴`, `b a b⁻¹ = a⁻¹` |
//! | `symmetric:n` (n ≤ 4) | n!    | permutations of `0..n` in lexicographic one-line order |
//! | `alternating4`        | 12    | even permutations of `0..4`, lexicographic    |
//! | `product(A,B)`        | ab    | the pair `(i / |B|, i mod |B|)`               |
//!
//! Permutations multiply as functions, right factor first:
//! `(p q)(k) = p(q(k))`. Their labels use 1-based cycle notation, so the
//! transposition swapping the first two points is `(1 2)`.

use std::fmt;
use std::str::FromStr;

use super::{FiniteGroup, GroupError};

/// Default bound on the order of catalog groups.
pub const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown group family {0:?}")]
    UnknownFamily(String),
    #[error("group order {order} exceeds the bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("catalog construction failed validation: {0}")]
    Internal(#[from] GroupError),
}

/// Name of a catalog group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    GenQuaternion16,
    Symmetric(usize),
    Alternating4,
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    /// Order of the named group, without building it. `None` if the
    /// parameters are out of the supported range.
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) if *n >= 1 => Some(*n),
            GroupSpec::Dihedral(n) if *n >= 1 => n.checked_mul(2),
            GroupSpec::Quaternion8 => Some(8),
            GroupSpec::GenQuaternion16 => Some(16),
            GroupSpec::Symmetric(n) if (1..=4).contains(n) => Some((1..=*n).product()),
            GroupSpec::Alternating4 => Some(12),
            GroupSpec::Product(a, b) => a.order()?.checked_mul(b.order()?),
            _ => None,
        }
    }

    /// Builds the group with the default order bound.
    pub fn build(&self) -> Result<FiniteGroup, CatalogError> {
        self.build_bounded(DEFAULT_MAX_ORDER)
    }

    pub fn build_bounded(&self, bound: usize) -> Result<FiniteGroup, CatalogError> {
        self.check(bound)?;
        let (group, labels) = self.construct()?;
        Ok(group.with_name(self.to_string()).with_labels(labels))
    }

    fn check(&self, bound: usize) -> Result<(), CatalogError> {
        match self {
            GroupSpec::Cyclic(0) | GroupSpec::Dihedral(0) => {
                return Err(CatalogError::BadParameter(format!("{self}: parameter must be positive")))
            }
            GroupSpec::Symmetric(n) if !(1..=4).contains(n) => {
                return Err(CatalogError::BadParameter(format!("{self}: only symmetric:1..4 are built in")))
            }
            GroupSpec::Product(a, b) => {
                a.check(bound)?;
                b.check(bound)?;
            }
            _ => {}
        }
        let order = self.order().ok_or_else(|| CatalogError::BadParameter(self.to_string()))?;
        if order > bound {
            return Err(CatalogError::OrderTooLarge { order, bound });
        }
        Ok(())
    }

    fn construct(&self) -> Result<(FiniteGroup, Vec<String>), CatalogError> {
        Ok(match self {
            GroupSpec::Cyclic(n) => {
                let n = *n;
                (FiniteGroup::from_fn(n, |a, b| (a + b) % n)?, (0..n).map(|i| i.to_string()).collect())
            }
            GroupSpec::Dihedral(n) => dihedral(*n)?,
            GroupSpec::Quaternion8 => quaternion8()?,
            GroupSpec::GenQuaternion16 => gen_quaternion16()?,
            GroupSpec::Symmetric(n) => permutation_group(all_permutations(*n))?,
            GroupSpec::Alternating4 => {
                permutation_group(all_permutations(4).into_iter().filter(|p| is_even(p)).collect())?
            }
            GroupSpec::Product(a, b) => {
                let ga = a.build_bounded(usize::MAX)?;
                let gb = b.build_bounded(usize::MAX)?;
                let nb = gb.order();
                let group = FiniteGroup::from_fn(ga.order() * nb, |x, y| {
                    ga.mul(x / nb, y / nb) * nb + gb.mul(x % nb, y % nb)
                })?;
                let labels = (0..ga.order() * nb)
                    .map(|x| format!("({},{})", ga.label(x / nb), gb.label(x % nb)))
                    .collect();
                (group, labels)
            }
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion8 => f.write_str("quaternion8"),
            GroupSpec::GenQuaternion16 => f.write_str("gen_quaternion16"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Alternating4 => f.write_str("alternating4"),
            GroupSpec::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("product(").and_then(|r| r.strip_suffix(')')) {
            let split = top_level_comma(inner).ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))?;
            return Ok(GroupSpec::product(inner[..split].parse()?, inner[split + 1..].parse()?));
        }
        let (family, param) = match s.split_once(':') {
            Some((f, p)) => {
                let p = p
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| CatalogError::BadParameter(format!("{s}: expected an integer")))?;
                (f.trim(), Some(p))
            }
            None => (s, None),
        };
        match (family, param) {
            ("cyclic", Some(n)) => Ok(GroupSpec::Cyclic(n)),
            ("dihedral", Some(n)) => Ok(GroupSpec::Dihedral(n)),
            ("symmetric", Some(n)) => Ok(GroupSpec::Symmetric(n)),
            ("quaternion8", None) => Ok(GroupSpec::Quaternion8),
            ("gen_quaternion16", None) => Ok(GroupSpec::GenQuaternion16),
            ("alternating4", None) => Ok(GroupSpec::Alternating4),
            ("cyclic" | "dihedral" | "symmetric", None) => {
                Err(CatalogError::BadParameter(format!("{family} needs a parameter, e.g. {family}:3")))
            }
            _ => Err(CatalogError::UnknownFamily(s.to_string())),
        }
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// The catalog groups of order at most `max_order`, sorted by order then
/// name. Isomorphic duplicates are excluded (`symmetric:3` stands for the
/// dihedral group of order 6). This is not every group of each order.
pub fn standard_catalog(max_order: usize) -> Vec<GroupSpec> {
    use GroupSpec::*;
    let c = |n| Box::new(Cyclic(n));
    let mut specs: Vec<GroupSpec> = (1..=max_order.min(DEFAULT_MAX_ORDER)).map(Cyclic).collect();
    specs.extend((4..=DEFAULT_MAX_ORDER / 2).map(Dihedral));
    specs.extend([
        Quaternion8,
        GenQuaternion16,
        Symmetric(3),
        Symmetric(4),
        Alternating4,
        Product(c(2), c(2)),
        Product(c(2), c(4)),
        Product(c(2), Box::new(Product(c(2), c(2)))),
        Product(c(3), c(3)),
        Product(c(2), c(6)),
        Product(c(2), c(8)),
        Product(c(4), c(4)),
        Product(c(2), Box::new(Product(c(2), c(4)))),
        Product(Box::new(Product(c(2), c(2))), Box::new(Product(c(2), c(2)))),
        Product(c(2), Box::new(Dihedral(4))),
        Product(c(2), Box::new(Quaternion8)),
    ]);
    specs.retain(|s| s.order().is_some_and(|o| o <= max_order));
    specs.sort_by_cached_key(|s| (s.order(), s.to_string()));
    specs
}

fn dihedral(n: usize) -> Result<(FiniteGroup, Vec<String>), GroupError> {
    // r^a s^e · r^b s^f = r^(a + (-1)^e b) s^(e+f)
    let group = FiniteGroup::from_fn(2 * n, |x, y| {
        let (a, e) = (x % n, x / n);
        let (b, f) = (y % n, y / n);
        let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
        rot + n * ((e + f) % 2)
    })?;
    let labels = (0..2 * n)
        .map(|x| {
            let (a, e) = (x % n, x / n);
            match (a, e) {
                (0, 0) => "e".to_string(),
                (0, _) => "s".to_string(),
                (1, 0) => "r".to_string(),
                (1, _) => "r s".to_string(),
                (_, 0) => format!("r^{a}"),
                _ => format!("r^{a} s"),
            }
        })
        .collect();
    Ok((group, labels))
}

fn quaternion8() -> Result<(FiniteGroup, Vec<String>), GroupError> {
    // Units 1, i, j, k as 0..4; element index = 2 * unit + (1 if negative).
    const UNIT_MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let group = FiniteGroup::from_fn(8, |x, y| {
        let (u, neg) = UNIT_MUL[x / 2][y / 2];
        let negative = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
        2 * u + usize::from(negative)
    })?;
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    Ok((group, labels))
}

fn gen_quaternion16() -> Result<(FiniteGroup, Vec<String>), GroupError> {
    // a^k b^e · a^m b^f: b a^m = a^(-m) b and b² = a⁴.
    let group = FiniteGroup::from_fn(16, |x, y| {
        let (k, e) = (x % 8, x / 8);
        let (m, f) = (y % 8, y / 8);
        let mut a = if e == 0 { k + m } else { k + 8 - m };
        let mut b = e + f;
        if b == 2 {
            a += 4;
            b = 0;
        }
        a % 8 + 8 * b
    })?;
    let labels = (0..16)
        .map(|x| match (x % 8, x / 8) {
            (0, 0) => "e".to_string(),
            (0, _) => "b".to_string(),
            (1, 0) => "a".to_string(),
            (1, _) => "a b".to_string(),
            (k, 0) => format!("a^{k}"),
            (k, _) => format!("a^{k} b"),
        })
        .collect();
    Ok((group, labels))
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut k = p[start];
        while k != start {
            seen[k] = true;
            cycle.push(k + 1);
            k = p[k];
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

fn permutation_group(perms: Vec<Vec<usize>>) -> Result<(FiniteGroup, Vec<String>), GroupError> {
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
    let group = FiniteGroup::from_fn(perms.len(), |x, y| {
        let (p, q) = (&perms[x], &perms[y]);
        let composed: Vec<usize> = q.iter().map(|&k| p[k]).collect();
        index(&composed)
    })?;
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    Ok((group, labels))
}
