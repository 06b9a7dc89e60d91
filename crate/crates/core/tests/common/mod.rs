//! Brute-force oracles and random generators shared by integration tests.
//! Nothing here calls the search code it is used to check.

#![allow(dead_code)]

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use quandles::group::{standard_catalog, FiniteGroup, GroupSpec};
use quandles::quandle::{conj_quandle, dihedral_quandle, trivial_quandle, validate_quandle, FiniteQuandle};
use quandles::tangle::{Sign, TangleDiagram};

pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

/// Number of bijective homomorphisms, by trying all `n!` maps.
pub fn brute_automorphism_count(g: &FiniteGroup) -> usize {
    permutations(g.order())
        .filter(|f| g.elements().all(|a| g.elements().all(|b| f[g.mul(a, b)] == g.mul(f[a], f[b]))))
        .count()
}

/// All normal subgroups as sorted element lists, by testing every subset.
pub fn brute_normal_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let has = |x: usize| mask >> x & 1 == 1;
        let closed = set.iter().all(|&a| set.iter().all(|&b| has(g.mul(a, b))));
        let normal = set.iter().all(|&a| g.elements().all(|h| has(g.mul(g.mul(g.inv(h), a), h))));
        if has(g.identity()) && closed && normal {
            out.push(set);
        }
    }
    out
}

pub fn brute_center(g: &FiniteGroup) -> Vec<usize> {
    g.elements()
        .filter(|&z| g.elements().all(|h| g.mul(z, h) == g.mul(h, z)))
        .collect()
}

pub fn brute_isomorphic(a: &FiniteQuandle, b: &FiniteQuandle) -> bool {
    a.order() == b.order()
        && permutations(a.order())
            .any(|f| a.elements().all(|x| a.elements().all(|y| f[a.op(x, y)] == b.op(f[x], f[y]))))
}

/// Lexicographically least relabelled table: equal for isomorphic quandles.
pub fn canonical_table(q: &FiniteQuandle) -> Vec<usize> {
    let n = q.order();
    let mut best: Option<Vec<usize>> = None;
    let mut table = vec![0; n * n];
    for f in permutations(n) {
        for x in 0..n {
            for y in 0..n {
                table[f[x] * n + f[y]] = f[q.op(x, y)];
            }
        }
        if best.as_ref().is_none_or(|b| table < *b) {
            best = Some(table.clone());
        }
    }
    best.unwrap_or_default()
}

/// Every assignment of colors to arcs satisfying the crossing rules,
/// found by exhaustive enumeration. A negative crossing is checked as
/// `in = out ◁ over`, without the inverse table.
pub fn brute_colorings(d: &TangleDiagram, q: &FiniteQuandle) -> Vec<Vec<usize>> {
    let n = q.order();
    (0..d.arc_count())
        .map(|_| 0..n)
        .multi_cartesian_product()
        .filter(|c| {
            d.crossings().iter().all(|x| match x.sign {
                Sign::Positive => c[x.under_out] == q.op(c[x.under_in], c[x.over]),
                Sign::Negative => c[x.under_in] == q.op(c[x.under_out], c[x.over]),
            })
        })
        .collect()
}

pub fn brute_admissible(d: &TangleDiagram, q: &FiniteQuandle) -> bool {
    brute_colorings(d, q).iter().all(|c| c[d.start_arc()] == c[d.end_arc()])
}

pub fn catalog_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    standard_catalog(max_order)
        .into_iter()
        .map(|s| (s.to_string(), s.build().unwrap()))
        .collect()
}

fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `x ◁ y = σ_c(y)(x)` where classes partition the set, each `σ_i` fixes
/// class `i` pointwise and the `σ_i` are commuting powers of one
/// class-preserving permutation per class.
fn class_permutation_quandle(rng: &mut StdRng, n: usize) -> FiniteQuandle {
    let k = rng.random_range(1..=n);
    let class: Vec<usize> = (0..n).map(|x| if x < k { x } else { rng.random_range(0..k) }).collect();
    let members: Vec<Vec<usize>> = (0..k).map(|i| (0..n).filter(|&x| class[x] == i).collect()).collect();
    let rho: Vec<Vec<usize>> = members
        .iter()
        .map(|m| {
            let mut img = m.clone();
            img.shuffle(rng);
            let mut p: Vec<usize> = (0..n).collect();
            for (&a, &b) in m.iter().zip(&img) {
                p[a] = b;
            }
            p
        })
        .collect();
    let sigma: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let mut s: Vec<usize> = (0..n).collect();
            for j in (0..k).filter(|&j| j != i) {
                for _ in 0..rng.random_range(0..3) {
                    s = s.iter().map(|&x| rho[j][x]).collect();
                }
            }
            s
        })
        .collect();
    FiniteQuandle::from_fn(n, |x, y| sigma[class[y]][x]).expect("class permutation construction is a quandle")
}

/// Random column permutations fixing the diagonal, rejected until valid.
fn rejection_quandle(rng: &mut StdRng, n: usize) -> FiniteQuandle {
    loop {
        let cols: Vec<Vec<usize>> = (0..n)
            .map(|y| {
                let mut rest: Vec<usize> = (0..n).filter(|&x| x != y).collect();
                rest.shuffle(rng);
                let mut col = vec![y; n];
                let mut it = rest.into_iter();
                for (x, c) in col.iter_mut().enumerate() {
                    if x != y {
                        *c = it.next().unwrap();
                    }
                }
                col
            })
            .collect();
        let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| cols[y][x]).collect()).collect();
        if let Ok(q) = validate_quandle(&table) {
            return q;
        }
    }
}

fn alexander_quandle(rng: &mut StdRng, n: usize) -> FiniteQuandle {
    let units: Vec<usize> = (1..n.max(2)).filter(|&t| gcd(t, n) == 1).collect();
    let t = units[rng.random_range(0..units.len())];
    // x ◁ y = t x + (1 - t) y
    FiniteQuandle::from_fn(n, |x, y| (t * x + (n + 1 - t % n) * y) % n).expect("Alexander quandle")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random valid quandle of order `1..=max_n`, from several families,
/// randomly relabelled. Every result is re-validated.
pub fn random_quandle(rng: &mut StdRng, max_n: usize) -> FiniteQuandle {
    let n = rng.random_range(1..=max_n);
    let q = match rng.random_range(0..6) {
        0 => class_permutation_quandle(rng, n),
        1 => rejection_quandle(rng, n.min(4)),
        2 => alexander_quandle(rng, n),
        3 => dihedral_quandle(n),
        4 if max_n >= 6 => conj_quandle(&GroupSpec::Symmetric(3).build().unwrap()),
        _ => trivial_quandle(n),
    };
    let q = q.relabel(&random_perm(rng, q.order()));
    validate_quandle(&q.rows()).expect("generator produced a quandle")
}
