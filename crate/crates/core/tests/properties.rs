mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::{brute_colorings, random_quandle};
use quandles::criteria::{hopf_witness, trefoil_witness};
use quandles::quandle::{isomorphic, FiniteQuandle};
use quandles::tangle::{
    admissibility, builtin_tangle, count_colorings, is_coloring, list_colorings, Crossing, Sign, TangleDiagram,
};

/// A long strand `0 → 1 → … → k-1` where each step passes under a random arc.
fn random_strand(rng: &mut StdRng) -> TangleDiagram {
    let k = rng.random_range(1..=5);
    let crossings = (0..k - 1)
        .map(|i| {
            let over = rng.random_range(0..k);
            if rng.random_bool(0.5) {
                Crossing::positive(over, i, i + 1)
            } else {
                Crossing::negative(over, i, i + 1)
            }
        })
        .collect();
    TangleDiagram::new(k, 0, k - 1, crossings).unwrap()
}

fn flipped(d: &TangleDiagram) -> TangleDiagram {
    let crossings = d
        .crossings()
        .iter()
        .map(|c| Crossing { sign: c.sign.flip(), ..*c })
        .collect();
    TangleDiagram::new(d.arc_count(), d.start_arc(), d.end_arc(), crossings).unwrap()
}

/// The quandle with `x ◁ y` replaced by `x ◁̄ y`.
fn dual(q: &FiniteQuandle) -> FiniteQuandle {
    FiniteQuandle::from_fn(q.order(), |x, y| q.inv_op(x, y)).unwrap()
}

fn shuffled(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn predicates_are_relabelling_invariant(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_quandle(&mut rng, 6);
        let r = q.relabel(&shuffled(&mut rng, q.order()));
        prop_assert!(isomorphic(&q, &r).is_some());
        prop_assert_eq!(hopf_witness(&q).is_some(), hopf_witness(&r).is_some());
        prop_assert_eq!(trefoil_witness(&q).is_some(), trefoil_witness(&r).is_some());
        for w in hopf_witness(&q).into_iter().chain(trefoil_witness(&q)) {
            prop_assert!(w.holds(&q));
        }
    }

    #[test]
    fn solver_matches_brute_force_on_random_strands(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_quandle(&mut rng, 5);
        let d = random_strand(&mut rng);
        let listed = list_colorings(&d, &q, usize::MAX).unwrap();
        for c in &listed {
            prop_assert!(is_coloring(&d, &q, c.assignment()));
        }
        let mut got: Vec<Vec<usize>> = listed.iter().map(|c| c.assignment().to_vec()).collect();
        got.sort();
        prop_assert_eq!(got, brute_colorings(&d, &q));
    }

    #[test]
    fn counts_invariant_under_arc_relabelling(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_quandle(&mut rng, 5);
        let d = if rng.random_bool(0.5) { random_strand(&mut rng) } else { builtin_tangle("trefoil").unwrap() };
        let r = d.relabel(&shuffled(&mut rng, d.arc_count())).unwrap();
        prop_assert_eq!(count_colorings(&d, &q), count_colorings(&r, &q));
        prop_assert_eq!(admissibility(&d, &q).is_admissible(), admissibility(&r, &q).is_admissible());
    }

    #[test]
    fn flipping_signs_swaps_the_operations(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_quandle(&mut rng, 5);
        let d = random_strand(&mut rng);
        let f = flipped(&d);
        prop_assert_eq!(&flipped(&f), &d);
        let a = list_colorings(&d, &q, usize::MAX).unwrap();
        let b = list_colorings(&f, &dual(&q), usize::MAX).unwrap();
        prop_assert_eq!(a, b);
        for c in 0..q.order() {
            for o in 0..q.order() {
                prop_assert_eq!(q.inv_op(q.op(c, o), o), c);
            }
        }
    }

    #[test]
    fn sign_flip_is_an_involution(positive in any::<bool>()) {
        let s = if positive { Sign::Positive } else { Sign::Negative };
        prop_assert_ne!(s.flip(), s);
        prop_assert_eq!(s.flip().flip(), s);
    }
}
