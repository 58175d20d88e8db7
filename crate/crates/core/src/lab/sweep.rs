//! Generators for every machine of a given shape, and for random ones.
//!
//! Exhaustive generation lists the transition table followed by the output
//! table in lexicographic order. Generated states are named `q0, q1, ...`;
//! alphabets in the sweeps are numeric.

use std::sync::Arc;

use itertools::Itertools;
use rand::Rng;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::machine::{Machine, MealyMachine, MooreMachine};
use crate::universal::ENUMERATION_LIMIT;

fn state_names(n: usize) -> Arc<[String]> {
    (0..n).map(|i| format!("q{i}")).collect()
}

fn count(radices: &[usize]) -> Result<u128> {
    radices
        .iter()
        .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
        .filter(|&c| c <= ENUMERATION_LIMIT)
        .ok_or(Error::EnumerationTooLarge {
            candidates: radices
                .iter()
                .fold(1u128, |acc, &r| acc.saturating_mul(r as u128)),
            limit: ENUMERATION_LIMIT,
        })
}

fn table_radices(states: usize, input: &Alphabet, out_cells: usize, outputs: usize) -> Vec<usize> {
    let mut radices = vec![states; states * input.len()];
    radices.extend(std::iter::repeat_n(outputs, out_cells));
    radices
}

/// All Mealy machines `input ↝ output` with exactly `states` states.
pub fn mealy_machines(
    input: &Alphabet,
    output: &Alphabet,
    states: usize,
) -> Result<impl Iterator<Item = MealyMachine>> {
    let cells = states * input.len();
    let radices = table_radices(states, input, cells, output.len());
    if states == 0 {
        return Err(Error::NoStates);
    }
    count(&radices)?;
    let (input, output, names) = (input.clone(), output.clone(), state_names(states));
    Ok(radices
        .into_iter()
        .map(|r| 0..r)
        .multi_cartesian_product()
        .map(move |tables| {
            let (delta, out) = tables.split_at(cells);
            MealyMachine::assemble(
                input.clone(),
                output.clone(),
                names.clone(),
                delta.to_vec(),
                out.to_vec(),
            )
        }))
}

/// All Moore machines `input ↝ output` with exactly `states` states.
pub fn moore_machines(
    input: &Alphabet,
    output: &Alphabet,
    states: usize,
) -> Result<impl Iterator<Item = MooreMachine>> {
    let cells = states * input.len();
    let radices = table_radices(states, input, states, output.len());
    if states == 0 {
        return Err(Error::NoStates);
    }
    count(&radices)?;
    let (input, output, names) = (input.clone(), output.clone(), state_names(states));
    Ok(radices
        .into_iter()
        .map(|r| 0..r)
        .multi_cartesian_product()
        .map(move |tables| {
            let (delta, out) = tables.split_at(cells);
            MooreMachine::assemble(
                input.clone(),
                output.clone(),
                names.clone(),
                delta.to_vec(),
                out.to_vec(),
            )
        }))
}

/// Numeric alphabets of every size in `1..=max`.
pub fn alphabets(max: usize) -> Vec<Alphabet> {
    (1..=max)
        .map(|n| Alphabet::numeric(n).expect("n >= 1"))
        .collect()
}

/// Every Mealy machine with `1..=max_states` states over every pair of
/// numeric alphabets of size `1..=max_alphabet`.
pub fn mealy_sweep(max_states: usize, max_alphabet: usize) -> Result<Vec<MealyMachine>> {
    let alphabets = alphabets(max_alphabet);
    let mut all = Vec::new();
    for input in &alphabets {
        for output in &alphabets {
            for n in 1..=max_states {
                all.extend(mealy_machines(input, output, n)?);
            }
        }
    }
    Ok(all)
}

/// Moore counterpart of [`mealy_sweep`].
pub fn moore_sweep(max_states: usize, max_alphabet: usize) -> Result<Vec<MooreMachine>> {
    let alphabets = alphabets(max_alphabet);
    let mut all = Vec::new();
    for input in &alphabets {
        for output in &alphabets {
            for n in 1..=max_states {
                all.extend(moore_machines(input, output, n)?);
            }
        }
    }
    Ok(all)
}

/// All permutations of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Tables of the machine obtained by renaming state `e` to `perm[e]`.
fn relabeled_tables(delta: &[usize], out: &[usize], k: usize, perm: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = perm.len();
    let row = out.len() / n;
    let mut new_delta = vec![0; delta.len()];
    let mut new_out = vec![0; out.len()];
    for e in 0..n {
        for a in 0..k {
            new_delta[perm[e] * k + a] = perm[delta[e * k + a]];
        }
        new_out[perm[e] * row..(perm[e] + 1) * row].copy_from_slice(&out[e * row..(e + 1) * row]);
    }
    (new_delta, new_out)
}

/// Renames state `e` to `perm[e]`; state names keep the `q0, q1, ...`
/// pattern by position, so the result is isomorphic to `m` via `perm`.
pub fn relabel_mealy(m: &MealyMachine, perm: &[usize]) -> MealyMachine {
    let (delta, out) = relabeled_tables(m.delta_table(), m.out_table(), m.input().len(), perm);
    MealyMachine::assemble(m.input().clone(), m.output().clone(), state_names(perm.len()), delta, out)
}

pub fn relabel_moore(m: &MooreMachine, perm: &[usize]) -> MooreMachine {
    let (delta, out) = relabeled_tables(m.delta_table(), m.out_table(), m.input().len(), perm);
    MooreMachine::assemble(m.input().clone(), m.output().clone(), state_names(perm.len()), delta, out)
}

/// True when no renaming of states gives lexicographically smaller
/// `(delta, out)` tables. Exactly one machine per isomorphism class passes.
fn is_canonical(delta: &[usize], out: &[usize], k: usize, perms: &[Vec<usize>]) -> bool {
    perms.iter().all(|p| {
        let (d, o) = relabeled_tables(delta, out, k, p);
        (delta, out) <= (&d[..], &o[..])
    })
}

/// The representative isomorphic to `m`: its least relabeling.
pub fn canonical_mealy(m: &MealyMachine) -> MealyMachine {
    permutations(m.state_count())
        .iter()
        .map(|p| relabel_mealy(m, p))
        .min_by(|x, y| (x.delta_table(), x.out_table()).cmp(&(y.delta_table(), y.out_table())))
        .expect("at least one state")
}

pub fn canonical_moore(m: &MooreMachine) -> MooreMachine {
    permutations(m.state_count())
        .iter()
        .map(|p| relabel_moore(m, p))
        .min_by(|x, y| (x.delta_table(), x.out_table()).cmp(&(y.delta_table(), y.out_table())))
        .expect("at least one state")
}

/// One Mealy machine per isomorphism class among [`mealy_machines`].
pub fn mealy_representatives(
    input: &Alphabet,
    output: &Alphabet,
    states: usize,
) -> Result<impl Iterator<Item = MealyMachine>> {
    let perms = permutations(states);
    let k = input.len();
    Ok(mealy_machines(input, output, states)?
        .filter(move |m| is_canonical(m.delta_table(), m.out_table(), k, &perms)))
}

/// One Moore machine per isomorphism class among [`moore_machines`].
pub fn moore_representatives(
    input: &Alphabet,
    output: &Alphabet,
    states: usize,
) -> Result<impl Iterator<Item = MooreMachine>> {
    let perms = permutations(states);
    let k = input.len();
    Ok(moore_machines(input, output, states)?
        .filter(move |m| is_canonical(m.delta_table(), m.out_table(), k, &perms)))
}

pub fn random_mealy<R: Rng + ?Sized>(
    rng: &mut R,
    input: &Alphabet,
    output: &Alphabet,
    states: usize,
) -> MealyMachine {
    let cells = states * input.len();
    MealyMachine::assemble(
        input.clone(),
        output.clone(),
        state_names(states),
        (0..cells).map(|_| rng.gen_range(0..states)).collect(),
        (0..cells).map(|_| rng.gen_range(0..output.len())).collect(),
    )
}

pub fn random_moore<R: Rng + ?Sized>(
    rng: &mut R,
    input: &Alphabet,
    output: &Alphabet,
    states: usize,
) -> MooreMachine {
    MooreMachine::assemble(
        input.clone(),
        output.clone(),
        state_names(states),
        (0..states * input.len())
            .map(|_| rng.gen_range(0..states))
            .collect(),
        (0..states).map(|_| rng.gen_range(0..output.len())).collect(),
    )
}
