use crate::error::{Error, Result};
use crate::machine::{check_endpoints, check_kinds, Machine, StateMap};
use crate::universal::ENUMERATION_LIMIT;

/// Every homomorphism between two machines, in lexicographic order of the
/// image lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSet {
    pub source_states: usize,
    pub target_states: usize,
    /// Number of total state maps covered by the enumeration.
    pub candidates: u128,
    pub homs: Vec<StateMap>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn contains(&self, map: &StateMap) -> bool {
        self.position(map).is_some()
    }

    pub fn position(&self, map: &StateMap) -> Option<usize> {
        self.homs.binary_search(map).ok()
    }
}

pub(crate) fn candidate_count(source_states: usize, target_states: usize) -> Result<u128> {
    let candidates = u32::try_from(source_states)
        .ok()
        .and_then(|exp| (target_states as u128).checked_pow(exp));
    match candidates {
        Some(c) if c <= ENUMERATION_LIMIT => Ok(c),
        _ => Err(Error::EnumerationTooLarge {
            candidates: candidates.unwrap_or(u128::MAX),
            limit: ENUMERATION_LIMIT,
        }),
    }
}

/// Enumerates all homomorphisms `source → target`.
///
/// Maps are built one image at a time in lexicographic order. As soon as a
/// partial assignment violates a condition that only involves assigned
/// states, every completion of it fails the same condition, so the subtree is
/// skipped. The result is exactly the set of total maps that pass
/// [`crate::machine::is_homomorphism`].
pub fn enumerate_homs<S, T>(source: &S, target: &T) -> Result<HomSet>
where
    S: Machine + ?Sized,
    T: Machine + ?Sized,
{
    check_endpoints(source, target)?;
    check_kinds(source, target)?;
    let (ns, nt) = (source.state_count(), target.state_count());
    let candidates = candidate_count(ns, nt)?;
    let k = source.input().len();

    // constraints (e, a) whose two source states are both assigned once the
    // later of e and next(e, a) is
    let mut ready: Vec<Vec<(usize, usize)>> = vec![Vec::new(); ns];
    for e in 0..ns {
        for a in 0..k {
            ready[e.max(source.next(e, a))].push((e, a));
        }
    }

    let mut homs = Vec::new();
    let mut images = vec![0usize; ns];
    // depth-first over positions; images[depth] is the current choice
    let mut depth = 0usize;
    let mut choice = 0usize;
    loop {
        if choice == nt {
            if depth == 0 {
                break;
            }
            depth -= 1;
            choice = images[depth] + 1;
            continue;
        }
        images[depth] = choice;
        let ok = source.observe(depth) == target.observe(choice)
            && ready[depth]
                .iter()
                .all(|&(e, a)| images[source.next(e, a)] == target.next(images[e], a));
        if !ok {
            choice += 1;
        } else if depth + 1 == ns {
            homs.push(StateMap::new(images.clone()));
            choice += 1;
        } else {
            depth += 1;
            choice = 0;
        }
    }
    Ok(HomSet {
        source_states: ns,
        target_states: nt,
        candidates,
        homs,
    })
}
