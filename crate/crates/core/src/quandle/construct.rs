//! Quandles built from groups.

use std::fmt;
use std::str::FromStr;

use super::{FiniteQuandle, QuandleError};
use crate::group::{FiniteGroup, GroupAutomorphism, GroupSpec, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("automorphism is defined on a different group")]
    AutomorphismMismatch,
    #[error("subgroup belongs to a different group")]
    GroupMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("second coordinate of ({0}) ◁ ({1}) left the normal subgroup")]
    ClosureViolation(usize, usize),
    #[error("unknown named quandle {0:?}")]
    UnknownName(String),
    #[error("constructed table failed validation: {0}")]
    Invalid(#[from] QuandleError),
}

fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    std::ptr::eq(a, b) || a == b
}

fn group_name(g: &FiniteGroup) -> String {
    g.name().map_or_else(|| format!("group{}", g.order()), str::to_string)
}

/// `Conj(G)`: `g ◁ h = h⁻¹ g h`.
pub fn conj_quandle(g: &FiniteGroup) -> FiniteQuandle {
    FiniteQuandle::from_fn(g.order(), |a, b| g.conjugate(a, b))
        .expect("conjugation satisfies the quandle axioms")
        .with_label(format!("conj({})", group_name(g)))
}

/// The generalized Alexander quandle on `G`: `g ◁ h = σ(g h⁻¹) h`.
pub fn galex(g: &FiniteGroup, sigma: &GroupAutomorphism<'_>) -> Result<FiniteQuandle, ConstructionError> {
    if !same_group(g, sigma.group()) {
        return Err(ConstructionError::AutomorphismMismatch);
    }
    let q = FiniteQuandle::from_fn(g.order(), |a, b| g.mul(sigma.apply(g.mul(a, g.inv(b))), b))?;
    let map: Vec<String> = sigma.map().iter().map(usize::to_string).collect();
    Ok(q.with_label(format!("galex({},[{}])", group_name(g), map.join(","))))
}

/// The quandle on `G × N` with
/// `(g₁,n₁) ◁ (g₂,n₂) = (u₂⁻¹ u₁ g₁ u₁⁻¹ u₂, u₂⁻¹ u₁ n₁ u₁⁻¹ u₂)` where
/// `uᵢ = gᵢ nᵢ`.
///
/// The pair `(g, n)` is element `g · |N| + rank(n)`, where `rank` is the
/// position of `n` in the sorted element list of `N`.
pub fn hopf_extension(g: &FiniteGroup, n: &Subgroup<'_>) -> Result<FiniteQuandle, ConstructionError> {
    if !same_group(g, n.group()) {
        return Err(ConstructionError::GroupMismatch);
    }
    if !n.is_normal() {
        return Err(ConstructionError::NotNormal);
    }
    let size = n.len();
    let order = g.order() * size;
    let decode = |x: usize| (x / size, n.elements()[x % size]);
    let mut table = vec![vec![0; order]; order];
    for (x, row) in table.iter_mut().enumerate() {
        let (g1, n1) = decode(x);
        let u1 = g.mul(g1, n1);
        for (y, entry) in row.iter_mut().enumerate() {
            let (g2, n2) = decode(y);
            let u2 = g.mul(g2, n2);
            // w = u₂⁻¹ u₁, so both coordinates are conjugates by w⁻¹.
            let w = g.mul(g.inv(u2), u1);
            let first = g.product(&[w, g1, g.inv(w)]);
            let second = g.product(&[w, n1, g.inv(w)]);
            let rank = n.rank(second).ok_or(ConstructionError::ClosureViolation(x, y))?;
            *entry = first * size + rank;
        }
    }
    let q = super::validate_quandle(&table)?;
    Ok(q.with_label(format!("hopf-ext({},{})", group_name(g), size)))
}

/// Index of the pair `(g, n)` in [`hopf_extension`]'s encoding.
pub fn hopf_pair_index(n: &Subgroup<'_>, g_elem: usize, n_elem: usize) -> Option<usize> {
    Some(g_elem * n.len() + n.rank(n_elem)?)
}

/// The trivial quandle of order `n`: `x ◁ y = x`.
pub fn trivial_quandle(n: usize) -> FiniteQuandle {
    FiniteQuandle::from_fn(n, |x, _| x)
        .expect("trivial quandle")
        .with_label(format!("trivial:{n}"))
}

/// The dihedral quandle `R_n`: `x ◁ y = 2y - x mod n`.
pub fn dihedral_quandle(n: usize) -> FiniteQuandle {
    FiniteQuandle::from_fn(n, |x, y| (2 * y + n - x) % n)
        .expect("dihedral quandle")
        .with_label(format!("dihedral:{n}"))
}

/// The automorphism of `quaternion8` cycling `i → j → k → i`.
pub fn q8_ijk_automorphism(q8: &FiniteGroup) -> Option<GroupAutomorphism<'_>> {
    let pairs = [("1", "1"), ("-1", "-1"), ("i", "j"), ("-i", "-j"), ("j", "k"), ("-j", "-k"), ("k", "i"), ("-k", "-i")];
    let mut map = vec![0; q8.order()];
    if q8.order() != 8 {
        return None;
    }
    for (from, to) in pairs {
        map[q8.find_label(from)?] = q8.find_label(to)?;
    }
    GroupAutomorphism::new(q8, map).ok()
}

/// Quandles addressable by name from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedQuandle {
    Trivial(usize),
    Dihedral(usize),
    /// `galex` over `quaternion8` with the `i → j → k → i` automorphism.
    GalexQ8Ijk,
}

impl NamedQuandle {
    pub fn build(&self) -> FiniteQuandle {
        match *self {
            NamedQuandle::Trivial(n) => trivial_quandle(n),
            NamedQuandle::Dihedral(n) => dihedral_quandle(n),
            NamedQuandle::GalexQ8Ijk => {
                let q8 = GroupSpec::Quaternion8.build().expect("catalog group");
                let sigma = q8_ijk_automorphism(&q8).expect("i -> j -> k -> i is an automorphism");
                galex(&q8, &sigma).expect("same group").with_label(self.to_string())
            }
        }
    }
}

impl fmt::Display for NamedQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedQuandle::Trivial(n) => write!(f, "trivial:{n}"),
            NamedQuandle::Dihedral(n) => write!(f, "dihedral:{n}"),
            NamedQuandle::GalexQ8Ijk => f.write_str("galex-q8-ijk"),
        }
    }
}

impl FromStr for NamedQuandle {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || ConstructionError::UnknownName(s.to_string());
        if s == "galex-q8-ijk" {
            return Ok(NamedQuandle::GalexQ8Ijk);
        }
        let (family, n) = s.split_once(':').ok_or_else(unknown)?;
        let n: usize = n.parse().map_err(|_| unknown())?;
        if n == 0 {
            return Err(unknown());
        }
        match family {
            "trivial" => Ok(NamedQuandle::Trivial(n)),
            "dihedral" => Ok(NamedQuandle::Dihedral(n)),
            _ => Err(unknown()),
        }
    }
}
