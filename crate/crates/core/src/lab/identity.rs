use crate::alphabet::Alphabet;
use crate::composition::{ltimes, rtimes};
use crate::error::Result;
use crate::lab::sweep;
use crate::machine::{Machine, MealyMachine, MooreMachine};
use crate::semantics::refine;
use crate::universal::embed_j;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateOutcome {
    pub candidate: MooreMachine,
    /// Index of the first probe the candidate fails to act as identity on.
    pub first_failing_probe: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySearch {
    pub outcomes: Vec<CandidateOutcome>,
    /// Whether some probe emits letter-dependent output. Without one, a
    /// constant candidate can pass vacuously.
    pub letter_dependent_probe: bool,
}

impl IdentitySearch {
    pub fn passing(&self) -> impl Iterator<Item = &MooreMachine> {
        self.outcomes
            .iter()
            .filter(|o| o.first_failing_probe.is_none())
            .map(|o| &o.candidate)
    }
}

/// Every state `e` of `probe` is bisimilar to some composite state whose
/// `probe` component is `e`. `position(u, e)` is the index of that composite
/// state.
fn covers(composite: &MealyMachine, probe: &MealyMachine, units: usize, position: impl Fn(usize, usize) -> usize) -> bool {
    let blocks = refine(composite, probe);
    let offset = composite.state_count();
    (0..probe.state_count()).all(|e| (0..units).any(|u| blocks[position(u, e)] == blocks[offset + e]))
}

fn acts_as_identity(unit: &MooreMachine, probe: &MealyMachine) -> Result<bool> {
    let units = unit.state_count();
    let ne = probe.state_count();
    let after = embed_j(&ltimes(unit, probe)?);
    if !covers(&after, probe, units, |u, e| u * ne + e) {
        return Ok(false);
    }
    let before = embed_j(&rtimes(probe, unit)?);
    Ok(covers(&before, probe, units, |u, e| e * units + u))
}

/// Tries every Moore machine `alphabet ↝ alphabet` with at most `max_states`
/// states as a two-sided identity for each probe, up to bisimilarity.
pub fn search_moore_identity(alphabet: &Alphabet, probes: &[MealyMachine], max_states: usize) -> Result<IdentitySearch> {
    for probe in probes {
        alphabet.expect_same(probe.input())?;
        alphabet.expect_same(probe.output())?;
    }
    let mut outcomes = Vec::new();
    for states in 1..=max_states {
        for candidate in sweep::moore_machines(alphabet, alphabet, states)? {
            let mut first_failing_probe = None;
            for (i, probe) in probes.iter().enumerate() {
                if !acts_as_identity(&candidate, probe)? {
                    first_failing_probe = Some(i);
                    break;
                }
            }
            outcomes.push(CandidateOutcome {
                candidate,
                first_failing_probe,
            });
        }
    }
    let letter_dependent_probe = probes
        .iter()
        .any(|p| (0..p.state_count()).any(|e| p.observe(e).windows(2).any(|w| w[0] != w[1])));
    Ok(IdentitySearch {
        outcomes,
        letter_dependent_probe,
    })
}
