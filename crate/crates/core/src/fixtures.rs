//! Small named machines used throughout the tests, benches and CLI demo.

use crate::alphabet::Alphabet;
use crate::composition::{identity_cell, Cell};
use crate::machine::{MealyMachine, MooreMachine};
use crate::universal::{universal_p, universal_u};

fn q(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

/// Running parity over `{0,1}`, emitted on each letter: `out(qi, a) = i xor a`.
pub fn par() -> MealyMachine {
    MealyMachine::from_fn(
        Alphabet::binary(),
        Alphabet::binary(),
        q(2),
        |e, a| e ^ a,
        |e, a| e ^ a,
    )
    .expect("well-formed")
}

/// Running parity as a Moore machine: `out(qi) = i`.
pub fn cpar() -> MooreMachine {
    MooreMachine::from_fn(Alphabet::binary(), Alphabet::binary(), q(2), |e, a| e ^ a, |e| e)
        .expect("well-formed")
}

pub fn u2() -> MooreMachine {
    universal_u(&Alphabet::binary())
}

pub fn p2() -> MooreMachine {
    universal_p(&Alphabet::binary())
}

pub fn id2() -> MealyMachine {
    identity_cell(&Alphabet::binary())
}

/// One-state Moore machine with constant output `letter`.
pub fn const_moore(input: &Alphabet, output: &Alphabet, letter: usize) -> MooreMachine {
    MooreMachine::from_fn(
        input.clone(),
        output.clone(),
        vec!["*".into()],
        |_, _| 0,
        |_| letter,
    )
    .expect("well-formed")
}

/// Counts ones modulo 3 and reports whether the count is zero.
pub fn mod3() -> MooreMachine {
    MooreMachine::from_fn(
        Alphabet::binary(),
        Alphabet::binary(),
        q(3),
        |e, a| (e + a) % 3,
        |e| usize::from(e == 0),
    )
    .expect("well-formed")
}

/// Emits 1 exactly when the letter differs from the previous one.
pub fn edge() -> MealyMachine {
    MealyMachine::from_fn(
        Alphabet::binary(),
        Alphabet::binary(),
        q(2),
        |_, a| a,
        |e, a| usize::from(e != a),
    )
    .expect("well-formed")
}

/// Every fixture by file stem, all over `{0,1}` on both sides.
pub fn corpus() -> Vec<(&'static str, Cell)> {
    let bin = Alphabet::binary();
    vec![
        ("par", par().into()),
        ("cpar", cpar().into()),
        ("u2", u2().into()),
        ("p2", p2().into()),
        ("id2", id2().into()),
        ("const0", const_moore(&bin, &bin, 0).into()),
        ("mod3", mod3().into()),
        ("edge", edge().into()),
    ]
}
