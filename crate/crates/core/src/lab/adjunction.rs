use crate::error::{Error, Result};
use crate::lab::homs::{enumerate_homs, HomSet};
use crate::machine::{check_endpoints, is_homomorphism, Machine, MealyMachine, MooreMachine, StateMap};
use crate::universal::{apply_d1, decapitate, embed_j, is_soft, moorify};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    /// The transposed map is not in the opposite hom-set.
    NotInOppositeSet,
    /// Transposing there and back does not return the original map.
    NotInverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub side: Side,
    pub map: StateMap,
    pub transposed: StateMap,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transposition {
    /// Pairs of positions `(left, right)` into the two hom-sets.
    Bijection(Vec<(usize, usize)>),
    Failure(Counterexample),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub left: HomSet,
    pub right: HomSet,
    pub transposition: Transposition,
}

impl BijectionReport {
    pub fn is_success(&self) -> bool {
        matches!(self.transposition, Transposition::Bijection(_))
    }
}

fn transpose(
    left: HomSet,
    right: HomSet,
    forward: impl Fn(&StateMap) -> StateMap,
    backward: impl Fn(&StateMap) -> StateMap,
) -> BijectionReport {
    let check = |side, map: &StateMap, there: &HomSet, trans: &dyn Fn(&StateMap) -> StateMap, back: &dyn Fn(&StateMap) -> StateMap| {
        let transposed = trans(map);
        let reason = if !there.contains(&transposed) {
            Some(FailureReason::NotInOppositeSet)
        } else if &back(&transposed) != map {
            Some(FailureReason::NotInverse)
        } else {
            None
        };
        reason.map(|reason| Counterexample {
            side,
            map: map.clone(),
            transposed,
            reason,
        })
    };
    let failure = left
        .homs
        .iter()
        .find_map(|phi| check(Side::Left, phi, &right, &forward, &backward))
        .or_else(|| {
            right
                .homs
                .iter()
                .find_map(|psi| check(Side::Right, psi, &left, &backward, &forward))
        });
    let transposition = match failure {
        Some(c) => Transposition::Failure(c),
        None => Transposition::Bijection(
            left.homs
                .iter()
                .enumerate()
                .map(|(i, phi)| (i, right.position(&forward(phi)).expect("checked above")))
                .collect(),
        ),
    };
    BijectionReport {
        left,
        right,
        transposition,
    }
}

/// `φ ↦ (e ↦ (n.out(e), φ(e)))` into a carrier of pairs `(b, e')`.
fn pair_with_output(n: &MooreMachine, inner_states: usize) -> impl Fn(&StateMap) -> StateMap + '_ {
    move |phi| {
        StateMap::new(
            phi.images()
                .iter()
                .enumerate()
                .map(|(e, &x)| n.out(e) * inner_states + x)
                .collect(),
        )
    }
}

fn second_component(inner_states: usize) -> impl Fn(&StateMap) -> StateMap {
    move |psi| StateMap::new(psi.images().iter().map(|&p| p % inner_states).collect())
}

/// The hom-set bijection `Mly(D₁n, m) ≅ Mre(n, 𝔲B ⋉ m)`.
pub fn check_adjunction_d1(n: &MooreMachine, m: &MealyMachine) -> Result<BijectionReport> {
    check_endpoints(n, m)?;
    check_adjunction_d1_with(n, &apply_d1(n), m, &moorify(m))
}

/// [`check_adjunction_d1`] with `apply_d1(n)` and `moorify(m)` supplied by
/// the caller, for sweeps that reuse them across many pairs.
pub fn check_adjunction_d1_with(
    n: &MooreMachine,
    d1n: &MealyMachine,
    m: &MealyMachine,
    moorified: &MooreMachine,
) -> Result<BijectionReport> {
    debug_assert_eq!(d1n, &apply_d1(n));
    debug_assert_eq!(moorified.state_count(), m.output().len() * m.state_count());
    let left = enumerate_homs(d1n, m)?;
    let right = enumerate_homs(n, moorified)?;
    let inner = m.state_count();
    Ok(transpose(
        left,
        right,
        pair_with_output(n, inner),
        second_component(inner),
    ))
}

/// Measures whether `Mly(Jn, m) ≅ Mre(n, 𝔭B ⋉ m)` holds for a soft `n`
/// under the same transposition as [`check_adjunction_d1`]. The report is
/// evidence either way; a failure is a valid outcome.
pub fn check_hom_correspondence(n: &MooreMachine, m: &MealyMachine) -> Result<BijectionReport> {
    check_endpoints(n, m)?;
    check_hom_correspondence_with(n, m, &decapitate(m))
}

pub fn check_hom_correspondence_with(
    n: &MooreMachine,
    m: &MealyMachine,
    decapitated: &MooreMachine,
) -> Result<BijectionReport> {
    if !is_soft(n) {
        return Err(Error::NotSoft);
    }
    let left = enumerate_homs(&embed_j(n), m)?;
    let right = enumerate_homs(n, decapitated)?;
    let inner = m.state_count();
    Ok(transpose(
        left,
        right,
        pair_with_output(n, inner),
        second_component(inner),
    ))
}

/// The projection `(b, e) ↦ e` is a Mealy homomorphism `D₁(moorify(m)) → m`.
pub fn check_counit(m: &MealyMachine) -> bool {
    let top = apply_d1(&moorify(m));
    let inner = m.state_count();
    let projection = StateMap::new((0..top.state_count()).map(|p| p % inner).collect());
    is_homomorphism(&top, m, &projection).expect("same endpoints by construction")
}

/// For a homomorphism `φ: m1 → m2`, checks that `(b, e) ↦ (b, φ(e))` is a
/// Moore homomorphism `moorify(m1) → moorify(m2)`.
pub fn check_moorify_functorial(m1: &MealyMachine, m2: &MealyMachine, phi: &StateMap) -> Result<bool> {
    if !is_homomorphism(m1, m2, phi)? {
        return Err(Error::NotAHomomorphism);
    }
    let (n1, n2) = (m1.state_count(), m2.state_count());
    let lifted = StateMap::new(
        (0..m1.output().len() * n1)
            .map(|p| (p / n1) * n2 + phi.apply(p % n1))
            .collect(),
    );
    is_homomorphism(&moorify(m1), &moorify(m2), &lifted)
}
