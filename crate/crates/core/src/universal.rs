//! Universal cells and the functors between Moore and Mealy machines.
//!
//! * [`universal_u`] is the one-step register: it outputs its state and
//!   stores the last letter read. Post-composing with it ([`moorify`]) turns
//!   a Mealy machine into a Moore machine whose trace is the Mealy trace
//!   delayed by one letter.
//! * [`universal_p`] is the frozen register: its state never changes.
//!   Post-composing with it ([`decapitate`]) lands in soft machines.
//! * [`embed_j`] and [`apply_d1`] view a Moore machine as a Mealy machine,
//!   reading the output before and after the transition respectively.

use crate::alphabet::Alphabet;
use crate::composition::ltimes;
use crate::error::{Error, Result};
use crate::machine::{Machine, MealyMachine, MooreMachine};
use crate::semantics::for_each_word;

/// Upper bound on candidate counts for any exhaustive enumeration.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// `𝔲X`: states are the symbols of `x`, `next(e, a) = a`, `out(e) = e`.
pub fn universal_u(x: &Alphabet) -> MooreMachine {
    let n = x.len();
    MooreMachine::assemble(
        x.clone(),
        x.clone(),
        x.symbols().into(),
        (0..n * n).map(|i| i % n).collect(),
        (0..n).collect(),
    )
}

/// `𝔭X` on the carrier identified with `x` through `f ↦ f[]`:
/// `next(e, a) = e`, `out(e) = e`.
pub fn universal_p(x: &Alphabet) -> MooreMachine {
    let n = x.len();
    MooreMachine::assemble(
        x.clone(),
        x.clone(),
        x.symbols().into(),
        (0..n * n).map(|i| i / n).collect(),
        (0..n).collect(),
    )
}

/// Counts the functions from words of length `<= depth` over `x` to `x`
/// that agree with `head` on every non-empty word, by trying all of them.
///
/// The count is `|x|` whenever the enumeration is allowed: only the value on
/// the empty word is free.
pub fn pinfty_carrier_check(x: &Alphabet, depth: usize) -> Result<u64> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let k = x.len();
    // words in shortlex order; the empty word comes first
    let mut heads: Vec<Option<usize>> = Vec::new();
    for_each_word(k, 0, depth, |w| heads.push(w.first().copied()));
    let candidates = (k as u128)
        .checked_pow(heads.len() as u32)
        .filter(|&c| c <= ENUMERATION_LIMIT)
        .ok_or(Error::EnumerationTooLarge {
            candidates: (k as f64).powi(heads.len() as i32) as u128,
            limit: ENUMERATION_LIMIT,
        })?;

    let mut f = vec![0usize; heads.len()];
    let mut survivors = 0u64;
    for _ in 0..candidates {
        let agrees = heads
            .iter()
            .zip(&f)
            .all(|(head, &value)| head.is_none_or(|h| h == value));
        if agrees {
            survivors += 1;
        }
        for digit in f.iter_mut().rev() {
            *digit += 1;
            if *digit < k {
                break;
            }
            *digit = 0;
        }
    }
    Ok(survivors)
}

/// `J`: the same machine with output `out(e)` on every letter.
pub fn embed_j(m: &MooreMachine) -> MealyMachine {
    let k = m.input().len();
    let out = (0..m.state_count() * k).map(|i| m.out(i / k)).collect();
    MealyMachine::assemble(
        m.input().clone(),
        m.output().clone(),
        m.shared_states(),
        m.delta_table().to_vec(),
        out,
    )
}

/// `D₀`, identical to [`embed_j`].
pub fn apply_d0(m: &MooreMachine) -> MealyMachine {
    embed_j(m)
}

/// `D₁`: output `out(next(e, a))` when reading `a` in `e`.
pub fn apply_d1(m: &MooreMachine) -> MealyMachine {
    let out = m.delta_table().iter().map(|&t| m.out(t)).collect();
    MealyMachine::assemble(
        m.input().clone(),
        m.output().clone(),
        m.shared_states(),
        m.delta_table().to_vec(),
        out,
    )
}

/// `𝔲B ⋉ m`. States are pairs `(b, e)`; `b` is the last output of `m`.
pub fn moorify(m: &MealyMachine) -> MooreMachine {
    ltimes(&universal_u(m.output()), m).expect("universal cell matches the output alphabet")
}

/// `𝔭B ⋉ m`. States are pairs `(h, e)`; `h` never changes.
pub fn decapitate(m: &MealyMachine) -> MooreMachine {
    ltimes(&universal_p(m.output()), m).expect("universal cell matches the output alphabet")
}

/// A Moore machine is soft when one transition never changes the output:
/// `out(next(e, a)) = out(e)`.
pub fn is_soft(m: &MooreMachine) -> bool {
    let k = m.input().len();
    m.delta_table()
        .iter()
        .enumerate()
        .all(|(i, &t)| m.out(t) == m.out(i / k))
}

/// States reachable from each state by words of length exactly `n`, as a
/// bitset per state.
fn reach_exactly(m: &MooreMachine, n: usize) -> Vec<Vec<bool>> {
    let states = m.state_count();
    let k = m.input().len();
    (0..states)
        .map(|e| {
            let mut frontier = vec![false; states];
            frontier[e] = true;
            for _ in 0..n {
                let mut next = vec![false; states];
                for (s, _) in frontier.iter().enumerate().filter(|(_, &on)| on) {
                    for a in 0..k {
                        next[m.next(s, a)] = true;
                    }
                }
                frontier = next;
            }
            frontier
        })
        .collect()
}

/// `n`-softness: every word of length exactly `n` leaves the output
/// unchanged. Only `n >= 1` is meaningful.
pub fn is_n_soft(m: &MooreMachine, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("softness level must be at least 1".into()));
    }
    Ok(reach_exactly(m, n).iter().enumerate().all(|(e, reach)| {
        reach
            .iter()
            .enumerate()
            .all(|(t, &on)| !on || m.out(t) == m.out(e))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SoftnessReport {
    /// Least `n` with `is_n_soft(m, n)`, if any `n <= bound` qualifies.
    pub level: Option<usize>,
    pub bound: usize,
}

pub fn softness(m: &MooreMachine, bound: usize) -> SoftnessReport {
    let level = (1..=bound).find(|&n| is_n_soft(m, n).unwrap_or(false));
    SoftnessReport { level, bound }
}
