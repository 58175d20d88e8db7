//! The acceptance suite checks some pair properties on one machine per
//! isomorphism class. These tests confirm, on the full two-state sweeps, that
//! each such property gives the same answer on a pair as on the pair of its
//! representatives.

use moore_core::composition::j_equalities;
use moore_core::lab::sweep::{
    canonical_mealy, canonical_moore, mealy_machines, mealy_representatives, moore_machines,
};
use moore_core::lab::{check_adjunction_d1, check_hom_correspondence, Transposition};
use moore_core::prelude::*;

fn upto<T>(max: usize, gen: impl Fn(usize) -> Vec<T>) -> Vec<T> {
    (1..=max).flat_map(gen).collect()
}

fn mealy2() -> Vec<MealyMachine> {
    let bin = Alphabet::binary();
    upto(2, |n| mealy_machines(&bin, &bin, n).unwrap().collect())
}

fn moore2() -> Vec<MooreMachine> {
    let bin = Alphabet::binary();
    upto(2, |n| moore_machines(&bin, &bin, n).unwrap().collect())
}

#[test]
fn canonical_forms_are_isomorphic_and_idempotent() {
    for m in mealy2() {
        let c = canonical_mealy(&m);
        assert_eq!(canonical_mealy(&c), c);
        assert!(!enumerate_isos(&m, &c).is_empty());
    }
    let bin = Alphabet::binary();
    let reps: Vec<_> = mealy_representatives(&bin, &bin, 2).unwrap().collect();
    for r in &reps {
        assert_eq!(&canonical_mealy(r), r);
    }
}

fn enumerate_isos(a: &MealyMachine, b: &MealyMachine) -> Vec<StateMap> {
    moore_core::lab::enumerate_homs(a, b)
        .unwrap()
        .homs
        .into_iter()
        .filter(|h| {
            let mut seen = h.images().to_vec();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == h.len() && h.len() == b.state_count()
        })
        .collect()
}

#[test]
fn adjunction_and_correspondence_outcomes_are_class_invariant() {
    let (ms, ns) = (mealy2(), moore2());
    for m in &ms {
        let cm = canonical_mealy(m);
        for n in &ns {
            let cn = canonical_moore(n);
            let full = check_adjunction_d1(n, m).unwrap();
            let rep = check_adjunction_d1(&cn, &cm).unwrap();
            assert_eq!(full.is_success(), rep.is_success());
            assert_eq!(full.left.len(), rep.left.len());
            if is_soft(n) {
                let full = check_hom_correspondence(n, m).unwrap();
                let rep = check_hom_correspondence(&cn, &cm).unwrap();
                assert_eq!(
                    matches!(full.transposition, Transposition::Bijection(_)),
                    matches!(rep.transposition, Transposition::Bijection(_))
                );
                assert_eq!((full.left.len(), full.right.len()), (rep.left.len(), rep.right.len()));
            }
        }
    }
}

#[test]
fn composite_laws_are_class_invariant() {
    let (ms, ns) = (mealy2(), moore2());
    for n in &ns {
        let cn = canonical_moore(n);
        for m in &ms {
            let cm = canonical_mealy(m);
            assert_eq!(
                is_soft(&ltimes(n, m).unwrap()),
                is_soft(&ltimes(&cn, &cm).unwrap())
            );
            let eqs = |x: &MooreMachine, y: &MealyMachine| {
                let mut holds: Vec<bool> = j_equalities(&x.clone().into(), &y.clone().into())
                    .unwrap()
                    .iter()
                    .map(|e| e.holds)
                    .collect();
                holds.extend(j_equalities(&y.clone().into(), &x.clone().into()).unwrap().iter().map(|e| e.holds));
                holds
            };
            assert_eq!(eqs(n, m), eqs(&cn, &cm));
        }
    }
}

#[test]
fn associators_are_class_invariant() {
    let ns = moore2();
    let cells: Vec<(Cell, Cell)> = ns
        .iter()
        .map(|n| (n.clone().into(), canonical_moore(n).into()))
        .collect();
    for (h, ch) in cells.iter().step_by(3) {
        for (g, cg) in cells.iter().step_by(5) {
            for (f, cf) in &cells {
                assert_eq!(associator(h, g, f).is_ok(), associator(ch, cg, cf).is_ok());
            }
        }
    }
}
