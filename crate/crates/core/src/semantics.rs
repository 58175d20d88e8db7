//! Word semantics: running a pointed machine on a word, output traces, and
//! behavioural equivalence by partition refinement.
//!
//! Words are read left to right. A Moore machine may run on the empty word
//! and then returns the output of its start state; a Mealy machine needs at
//! least one letter.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::machine::{check_endpoints, check_kinds, Kind, Machine, MealyMachine, MooreMachine};
use crate::universal::apply_d1;

/// A machine together with a start state.
#[derive(Debug, Clone, Copy)]
pub struct Pointed<'a, M: ?Sized> {
    machine: &'a M,
    start: usize,
}

impl<'a, M: Machine + ?Sized> Pointed<'a, M> {
    pub fn new(machine: &'a M, start: usize) -> Result<Self> {
        if start >= machine.state_count() {
            return Err(Error::UnknownState(start.to_string()));
        }
        Ok(Pointed { machine, start })
    }

    pub fn by_name(machine: &'a M, start: &str) -> Result<Self> {
        Ok(Pointed {
            machine,
            start: machine.state_index(start)?,
        })
    }

    pub fn machine(&self) -> &'a M {
        self.machine
    }

    pub fn start(&self) -> usize {
        self.start
    }
}

fn check_word<M: Machine + ?Sized>(m: &M, word: &[usize]) -> Result<()> {
    let k = m.input().len();
    match word.iter().find(|&&a| a >= k) {
        Some(bad) => Err(Error::LetterOutOfAlphabet(bad.to_string())),
        None => Ok(()),
    }
}

/// Left-to-right fold of the dynamics over `word`; the empty word leaves the
/// state unchanged.
pub fn d_iter<M: Machine + ?Sized>(m: &M, state: usize, word: &[usize]) -> Result<usize> {
    check_word(m, word)?;
    if state >= m.state_count() {
        return Err(Error::UnknownState(state.to_string()));
    }
    Ok(word.iter().fold(state, |e, &a| m.next(e, a)))
}

/// The output at the end of `word`.
pub fn run<M: Machine + ?Sized>(p: &Pointed<'_, M>, word: &[usize]) -> Result<usize> {
    let m = p.machine;
    check_word(m, word)?;
    match m.kind() {
        Kind::Moore => Ok(m.observe(word.iter().fold(p.start, |e, &a| m.next(e, a)))[0]),
        Kind::Mealy => {
            let (&last, init) = word.split_last().ok_or(Error::EmptyWordOnMealy)?;
            let e = init.iter().fold(p.start, |e, &a| m.next(e, a));
            Ok(m.emit(e, last))
        }
    }
}

/// Every output produced while reading `word`: one per letter for Mealy
/// machines, one per visited state (start included) for Moore machines.
pub fn trace<M: Machine + ?Sized>(p: &Pointed<'_, M>, word: &[usize]) -> Result<Vec<usize>> {
    let m = p.machine;
    check_word(m, word)?;
    let mut e = p.start;
    let mut out = Vec::with_capacity(word.len() + 1);
    match m.kind() {
        Kind::Mealy => {
            if word.is_empty() {
                return Err(Error::EmptyWordOnMealy);
            }
            for &a in word {
                out.push(m.emit(e, a));
                e = m.next(e, a);
            }
        }
        Kind::Moore => {
            out.push(m.observe(e)[0]);
            for &a in word {
                e = m.next(e, a);
                out.push(m.observe(e)[0]);
            }
        }
    }
    Ok(out)
}

/// Coarsest partition of the disjoint union of both state sets that is
/// stable under the dynamics and refines the output observation. Returns the
/// block of every state, `left` states first.
pub(crate) fn refine<L, R>(left: &L, right: &R) -> Vec<usize>
where
    L: Machine + ?Sized,
    R: Machine + ?Sized,
{
    let nl = left.state_count();
    let total = nl + right.state_count();
    let k = left.input().len();
    let next = |s: usize, a: usize| {
        if s < nl {
            left.next(s, a)
        } else {
            nl + right.next(s - nl, a)
        }
    };
    let observe = |s: usize| {
        if s < nl {
            left.observe(s)
        } else {
            right.observe(s - nl)
        }
    };

    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut block: Vec<usize> = (0..total)
        .map(|s| {
            let fresh = ids.len();
            *ids.entry(observe(s).to_vec()).or_insert(fresh)
        })
        .collect();
    let mut count = ids.len();
    loop {
        ids.clear();
        let refined: Vec<usize> = (0..total)
            .map(|s| {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(block[s]);
                sig.extend((0..k).map(|a| block[next(s, a)]));
                let fresh = ids.len();
                *ids.entry(sig).or_insert(fresh)
            })
            .collect();
        block = refined;
        if ids.len() == count {
            return block;
        }
        count = ids.len();
    }
}

/// True iff both pointed machines produce the same output on every word.
pub fn bisimilar<L, R>(p: &Pointed<'_, L>, q: &Pointed<'_, R>) -> Result<bool>
where
    L: Machine + ?Sized,
    R: Machine + ?Sized,
{
    check_endpoints(p.machine, q.machine)?;
    check_kinds(p.machine, q.machine)?;
    let blocks = refine(p.machine, q.machine);
    Ok(blocks[p.start] == blocks[p.machine.state_count() + q.start])
}

/// Calls `visit` on every word over `letters` symbols with length in
/// `min..=max`, shortest first, each length in lexicographic order.
pub fn for_each_word(letters: usize, min: usize, max: usize, mut visit: impl FnMut(&[usize])) {
    for len in min..=max {
        let mut word = vec![0; len];
        loop {
            visit(&word);
            // odometer, last letter fastest
            let mut i = len;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                word[i] += 1;
                if word[i] < letters {
                    break;
                }
                word[i] = 0;
            }
            if word.iter().all(|&a| a == 0) {
                break;
            }
        }
    }
}

/// Bounded check that the Moore word semantics of `m` agrees with the Mealy
/// word semantics of `apply_d1(m)` on every non-empty word of length at most
/// `max_len`, from every state.
pub fn check_extension_square(m: &MooreMachine, max_len: usize) -> Result<bool> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be at least 1".into()));
    }
    let d1: MealyMachine = apply_d1(m);
    let mut holds = true;
    for e in 0..m.state_count() {
        let moore = Pointed::new(m, e)?;
        let mealy = Pointed::new(&d1, e)?;
        for_each_word(m.input().len(), 1, max_len, |w| {
            if holds && run(&moore, w).ok() != run(&mealy, w).ok() {
                holds = false;
            }
        });
        if !holds {
            break;
        }
    }
    Ok(holds)
}
