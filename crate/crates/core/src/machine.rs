//! Mealy and Moore machines over finite alphabets, raw descriptions and
//! their validation, and state maps between machines.
//!
//! Every machine is a total table. States and letters are addressed by index
//! in declaration order; the dynamics is `next(state, letter)` with the state
//! first. Machines are unpointed: a start state is supplied when running one
//! (see [`crate::semantics`]).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::alphabet::{check_distinct, Alphabet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Mealy,
    Moore,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Mealy => "mealy",
            Kind::Moore => "moore",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Read access shared by both kinds of machine.
///
/// The output of a state is exposed as an *observation*: the whole output row
/// `out(e, ·)` for a Mealy machine, the single letter `out(e)` for a Moore
/// machine. Homomorphism checks and bisimulation only ever compare
/// observations, so they are written once for both kinds.
pub trait Machine {
    fn kind(&self) -> Kind;
    fn input(&self) -> &Alphabet;
    fn output(&self) -> &Alphabet;
    fn state_names(&self) -> &[String];
    fn next(&self, state: usize, letter: usize) -> usize;
    fn observe(&self, state: usize) -> &[usize];

    fn state_count(&self) -> usize {
        self.state_names().len()
    }

    fn state_index(&self, name: &str) -> Result<usize> {
        self.state_names()
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    /// Output emitted when reading `letter` in `state`. For Moore machines
    /// this ignores the letter.
    fn emit(&self, state: usize, letter: usize) -> usize {
        match self.kind() {
            Kind::Mealy => self.observe(state)[letter],
            Kind::Moore => self.observe(state)[0],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MealyMachine {
    input: Alphabet,
    output: Alphabet,
    states: Arc<[String]>,
    // both tables are row-major: entry (e, a) lives at e * |input| + a
    delta: Vec<usize>,
    out: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreMachine {
    input: Alphabet,
    output: Alphabet,
    states: Arc<[String]>,
    delta: Vec<usize>,
    out: Vec<usize>,
}

fn check_tables(
    input: &Alphabet,
    output: &Alphabet,
    states: &[String],
    delta: &[usize],
    out: &[usize],
    out_len: usize,
) -> Result<()> {
    if states.is_empty() {
        return Err(Error::NoStates);
    }
    check_distinct("state", states)?;
    let cells = states.len() * input.len();
    if delta.len() != cells {
        return Err(Error::InvalidArgument(format!(
            "transition table has {} entries, expected {cells}",
            delta.len()
        )));
    }
    if out.len() != out_len {
        return Err(Error::InvalidArgument(format!(
            "output table has {} entries, expected {out_len}",
            out.len()
        )));
    }
    if let Some(&bad) = delta.iter().find(|&&t| t >= states.len()) {
        return Err(Error::UnknownSymbol {
            what: "state",
            name: bad.to_string(),
            path: "delta".into(),
        });
    }
    if let Some(&bad) = out.iter().find(|&&b| b >= output.len()) {
        return Err(Error::UnknownSymbol {
            what: "output letter",
            name: bad.to_string(),
            path: "out".into(),
        });
    }
    Ok(())
}

impl MealyMachine {
    /// Builds a machine from row-major index tables.
    pub fn from_tables(
        input: Alphabet,
        output: Alphabet,
        states: Vec<String>,
        delta: Vec<usize>,
        out: Vec<usize>,
    ) -> Result<Self> {
        let cells = states.len() * input.len();
        check_tables(&input, &output, &states, &delta, &out, cells)?;
        Ok(Self::assemble(input, output, states.into(), delta, out))
    }

    pub fn from_fn(
        input: Alphabet,
        output: Alphabet,
        states: Vec<String>,
        next: impl Fn(usize, usize) -> usize,
        out: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let (n, k) = (states.len(), input.len());
        let delta = (0..n * k).map(|i| next(i / k, i % k)).collect();
        let out = (0..n * k).map(|i| out(i / k, i % k)).collect();
        Self::from_tables(input, output, states, delta, out)
    }

    pub(crate) fn assemble(
        input: Alphabet,
        output: Alphabet,
        states: Arc<[String]>,
        delta: Vec<usize>,
        out: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(delta.len(), states.len() * input.len());
        debug_assert_eq!(out.len(), delta.len());
        MealyMachine {
            input,
            output,
            states,
            delta,
            out,
        }
    }

    pub fn out(&self, state: usize, letter: usize) -> usize {
        self.out[state * self.input.len() + letter]
    }

    pub fn delta_table(&self) -> &[usize] {
        &self.delta
    }

    pub fn out_table(&self) -> &[usize] {
        &self.out
    }

    pub fn shared_states(&self) -> Arc<[String]> {
        self.states.clone()
    }
}

impl MooreMachine {
    pub fn from_tables(
        input: Alphabet,
        output: Alphabet,
        states: Vec<String>,
        delta: Vec<usize>,
        out: Vec<usize>,
    ) -> Result<Self> {
        let n = states.len();
        check_tables(&input, &output, &states, &delta, &out, n)?;
        Ok(Self::assemble(input, output, states.into(), delta, out))
    }

    pub fn from_fn(
        input: Alphabet,
        output: Alphabet,
        states: Vec<String>,
        next: impl Fn(usize, usize) -> usize,
        out: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        let (n, k) = (states.len(), input.len());
        let delta = (0..n * k).map(|i| next(i / k, i % k)).collect();
        let out = (0..n).map(out).collect();
        Self::from_tables(input, output, states, delta, out)
    }

    pub(crate) fn assemble(
        input: Alphabet,
        output: Alphabet,
        states: Arc<[String]>,
        delta: Vec<usize>,
        out: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(delta.len(), states.len() * input.len());
        debug_assert_eq!(out.len(), states.len());
        MooreMachine {
            input,
            output,
            states,
            delta,
            out,
        }
    }

    pub fn out(&self, state: usize) -> usize {
        self.out[state]
    }

    pub fn delta_table(&self) -> &[usize] {
        &self.delta
    }

    pub fn out_table(&self) -> &[usize] {
        &self.out
    }

    pub fn shared_states(&self) -> Arc<[String]> {
        self.states.clone()
    }
}

impl Machine for MealyMachine {
    fn kind(&self) -> Kind {
        Kind::Mealy
    }
    fn input(&self) -> &Alphabet {
        &self.input
    }
    fn output(&self) -> &Alphabet {
        &self.output
    }
    fn state_names(&self) -> &[String] {
        &self.states
    }
    #[inline]
    fn next(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.input.len() + letter]
    }
    #[inline]
    fn observe(&self, state: usize) -> &[usize] {
        let k = self.input.len();
        &self.out[state * k..(state + 1) * k]
    }
}

impl Machine for MooreMachine {
    fn kind(&self) -> Kind {
        Kind::Moore
    }
    fn input(&self) -> &Alphabet {
        &self.input
    }
    fn output(&self) -> &Alphabet {
        &self.output
    }
    fn state_names(&self) -> &[String] {
        &self.states
    }
    #[inline]
    fn next(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.input.len() + letter]
    }
    #[inline]
    fn observe(&self, state: usize) -> &[usize] {
        std::slice::from_ref(&self.out[state])
    }
}

/// Output table of a raw description, keyed by state name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawOutput {
    /// `state -> letter -> output`, the Mealy shape.
    PerLetter(BTreeMap<String, BTreeMap<String, String>>),
    /// `state -> output`, the Moore shape.
    PerState(BTreeMap<String, String>),
}

/// A machine as written by a user, with every name unresolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMachine {
    pub input: Vec<String>,
    pub output: Vec<String>,
    pub states: Vec<String>,
    pub delta: BTreeMap<String, BTreeMap<String, String>>,
    pub out: RawOutput,
}

struct Resolver<'a> {
    input: Alphabet,
    output: Alphabet,
    raw: &'a RawMachine,
}

impl<'a> Resolver<'a> {
    fn new(raw: &'a RawMachine) -> Result<Self> {
        let input = Alphabet::from_symbols(raw.input.iter().cloned())?;
        let output = Alphabet::from_symbols(raw.output.iter().cloned())?;
        if raw.states.is_empty() {
            return Err(Error::NoStates);
        }
        check_distinct("state", &raw.states)?;
        Ok(Resolver { input, output, raw })
    }

    fn state(&self, name: &str, path: impl FnOnce() -> String) -> Result<usize> {
        self.raw
            .states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownSymbol {
                what: "state",
                name: name.to_string(),
                path: path(),
            })
    }

    fn output_letter(&self, name: &str, path: impl FnOnce() -> String) -> Result<usize> {
        self.output.index_of(name).ok_or_else(|| Error::UnknownSymbol {
            what: "output letter",
            name: name.to_string(),
            path: path(),
        })
    }

    /// Rejects keys that name undeclared states or input letters.
    fn check_keys<V>(
        &self,
        table: &'static str,
        map: &BTreeMap<String, V>,
        inner: impl Fn(&V) -> Option<Vec<&String>>,
    ) -> Result<()> {
        for (state, row) in map {
            self.state(state, || format!("{table}.{state}"))?;
            for letter in inner(row).unwrap_or_default() {
                if self.input.index_of(letter).is_none() {
                    return Err(Error::UnknownSymbol {
                        what: "input letter",
                        name: letter.clone(),
                        path: format!("{table}.{state}.{letter}"),
                    });
                }
            }
        }
        Ok(())
    }

    fn per_letter_lookup<'m>(
        &self,
        table: &'static str,
        map: &'m BTreeMap<String, BTreeMap<String, String>>,
        state: &str,
        letter: &str,
    ) -> Result<&'m str> {
        map.get(state)
            .and_then(|row| row.get(letter))
            .map(String::as_str)
            .ok_or_else(|| Error::MissingEntry {
                path: format!("{table}.{state}.{letter}"),
            })
    }

    fn delta(&self) -> Result<Vec<usize>> {
        self.check_keys("delta", &self.raw.delta, |row| Some(row.keys().collect()))?;
        let mut delta = Vec::with_capacity(self.raw.states.len() * self.input.len());
        for state in &self.raw.states {
            for letter in self.input.symbols() {
                let target = self.per_letter_lookup("delta", &self.raw.delta, state, letter)?;
                delta.push(self.state(target, || format!("delta.{state}.{letter}"))?);
            }
        }
        Ok(delta)
    }
}

/// Resolves a raw description into a Mealy machine.
pub fn validate_mealy(raw: &RawMachine) -> Result<MealyMachine> {
    let r = Resolver::new(raw)?;
    let RawOutput::PerLetter(table) = &raw.out else {
        return Err(Error::ShapeMismatch {
            path: "out".into(),
            expected: "keyed by (state, letter)",
            found: "keyed by state",
        });
    };
    let delta = r.delta()?;
    r.check_keys("out", table, |row| Some(row.keys().collect()))?;
    let mut out = Vec::with_capacity(delta.len());
    for state in &raw.states {
        for letter in r.input.symbols() {
            let b = r.per_letter_lookup("out", table, state, letter)?;
            out.push(r.output_letter(b, || format!("out.{state}.{letter}"))?);
        }
    }
    Ok(MealyMachine::assemble(
        r.input,
        r.output,
        raw.states.clone().into(),
        delta,
        out,
    ))
}

/// Resolves a raw description into a Moore machine.
pub fn validate_moore(raw: &RawMachine) -> Result<MooreMachine> {
    let r = Resolver::new(raw)?;
    let empty = BTreeMap::new();
    let table = match &raw.out {
        RawOutput::PerState(t) => t,
        // `{}` is shape-ambiguous; let it fail as missing entries instead
        RawOutput::PerLetter(t) if t.is_empty() => &empty,
        RawOutput::PerLetter(_) => {
            return Err(Error::ShapeMismatch {
                path: "out".into(),
                expected: "keyed by state",
                found: "keyed by (state, letter)",
            })
        }
    };
    let delta = r.delta()?;
    r.check_keys("out", table, |_| None)?;
    let mut out = Vec::with_capacity(raw.states.len());
    for state in &raw.states {
        let b = table.get(state).ok_or_else(|| Error::MissingEntry {
            path: format!("out.{state}"),
        })?;
        out.push(r.output_letter(b, || format!("out.{state}"))?);
    }
    Ok(MooreMachine::assemble(
        r.input,
        r.output,
        raw.states.clone().into(),
        delta,
        out,
    ))
}

fn raw_delta<M: Machine>(m: &M) -> BTreeMap<String, BTreeMap<String, String>> {
    let names = m.state_names();
    names
        .iter()
        .enumerate()
        .map(|(e, name)| {
            let row = m
                .input()
                .symbols()
                .iter()
                .enumerate()
                .map(|(a, letter)| (letter.clone(), names[m.next(e, a)].clone()))
                .collect();
            (name.clone(), row)
        })
        .collect()
}

impl MealyMachine {
    pub fn to_raw(&self) -> RawMachine {
        let out = self
            .states
            .iter()
            .enumerate()
            .map(|(e, name)| {
                let row = self
                    .input
                    .symbols()
                    .iter()
                    .enumerate()
                    .map(|(a, l)| (l.clone(), self.output.symbol(self.out(e, a)).to_string()))
                    .collect();
                (name.clone(), row)
            })
            .collect();
        RawMachine {
            input: self.input.symbols().to_vec(),
            output: self.output.symbols().to_vec(),
            states: self.states.to_vec(),
            delta: raw_delta(self),
            out: RawOutput::PerLetter(out),
        }
    }
}

impl MooreMachine {
    pub fn to_raw(&self) -> RawMachine {
        let out = self
            .states
            .iter()
            .enumerate()
            .map(|(e, name)| (name.clone(), self.output.symbol(self.out(e)).to_string()))
            .collect();
        RawMachine {
            input: self.input.symbols().to_vec(),
            output: self.output.symbols().to_vec(),
            states: self.states.to_vec(),
            delta: raw_delta(self),
            out: RawOutput::PerState(out),
        }
    }
}

/// A total function from the states of one machine to the states of another,
/// stored as the list of images in source-state order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateMap(Vec<usize>);

impl StateMap {
    pub fn new(images: Vec<usize>) -> Self {
        StateMap(images)
    }

    pub fn identity(states: usize) -> Self {
        StateMap((0..states).collect())
    }

    pub fn constant(states: usize, image: usize) -> Self {
        StateMap(vec![image; states])
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, state: usize) -> usize {
        self.0[state]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &StateMap) -> StateMap {
        StateMap(self.0.iter().map(|&s| next.0[s]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// Checks totality over `source_states` and that every image is below
    /// `target_states`.
    pub fn check_shape(&self, source_states: usize, target_states: usize) -> Result<()> {
        if self.0.len() != source_states {
            return Err(Error::InvalidStateMap(format!(
                "map has {} entries for {source_states} source states",
                self.0.len()
            )));
        }
        if let Some(&bad) = self.0.iter().find(|&&s| s >= target_states) {
            return Err(Error::InvalidStateMap(format!(
                "image {bad} out of range for {target_states} target states"
            )));
        }
        Ok(())
    }
}

impl From<Vec<usize>> for StateMap {
    fn from(images: Vec<usize>) -> Self {
        StateMap(images)
    }
}

pub(crate) fn check_endpoints<S, T>(source: &S, target: &T) -> Result<()>
where
    S: Machine + ?Sized,
    T: Machine + ?Sized,
{
    source.input().expect_same(target.input())?;
    source.output().expect_same(target.output())
}

pub(crate) fn check_kinds<S, T>(left: &S, right: &T) -> Result<()>
where
    S: Machine + ?Sized,
    T: Machine + ?Sized,
{
    if left.kind() == right.kind() {
        Ok(())
    } else {
        Err(Error::KindMismatch {
            left: left.kind().as_str(),
            right: right.kind().as_str(),
        })
    }
}

/// True iff `map` commutes with the dynamics and preserves outputs:
/// `map(next(e, a)) = next'(map(e), a)` and `observe'(map(e)) = observe(e)`.
pub fn is_homomorphism<S, T>(source: &S, target: &T, map: &StateMap) -> Result<bool>
where
    S: Machine + ?Sized,
    T: Machine + ?Sized,
{
    check_endpoints(source, target)?;
    check_kinds(source, target)?;
    map.check_shape(source.state_count(), target.state_count())?;
    Ok(homomorphism_holds(source, target, map.images()))
}

/// The homomorphism conditions without any shape checks.
pub(crate) fn homomorphism_holds<S, T>(source: &S, target: &T, images: &[usize]) -> bool
where
    S: Machine + ?Sized,
    T: Machine + ?Sized,
{
    let letters = source.input().len();
    images.iter().enumerate().all(|(e, &fe)| {
        source.observe(e) == target.observe(fe)
            && (0..letters).all(|a| images[source.next(e, a)] == target.next(fe, a))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn par_raw() -> RawMachine {
        fixtures::par().to_raw()
    }

    #[test]
    fn par_validates() {
        let m = validate_mealy(&par_raw()).unwrap();
        assert_eq!(m, fixtures::par());
        assert_eq!(m.state_count(), 2);
        assert_eq!(m.out(1, 0), 1);
    }

    #[test]
    fn missing_delta_entry() {
        let mut raw = par_raw();
        raw.delta.get_mut("q1").unwrap().remove("1");
        assert_eq!(
            validate_mealy(&raw),
            Err(Error::MissingEntry {
                path: "delta.q1.1".into()
            })
        );
    }

    #[test]
    fn unknown_output_letter() {
        let mut raw = par_raw();
        if let RawOutput::PerLetter(t) = &mut raw.out {
            t.get_mut("q0").unwrap().insert("0".into(), "2".into());
        }
        assert!(matches!(
            validate_mealy(&raw),
            Err(Error::UnknownSymbol { what: "output letter", ref name, ref path })
                if name == "2" && path == "out.q0.0"
        ));
    }

    #[test]
    fn unknown_keys_and_duplicates() {
        let mut raw = par_raw();
        raw.delta
            .get_mut("q0")
            .unwrap()
            .insert("7".into(), "q0".into());
        assert!(matches!(
            validate_mealy(&raw),
            Err(Error::UnknownSymbol { what: "input letter", .. })
        ));
        let mut raw = par_raw();
        raw.states.push("q0".into());
        assert!(matches!(
            validate_mealy(&raw),
            Err(Error::DuplicateName { what: "state", .. })
        ));
        let mut raw = par_raw();
        raw.input.clear();
        assert!(matches!(validate_mealy(&raw), Err(Error::EmptyAlphabet(_))));
    }

    #[test]
    fn moore_shapes() {
        let raw = fixtures::cpar().to_raw();
        assert_eq!(validate_moore(&raw).unwrap(), fixtures::cpar());
        // Moore table keyed by (state, letter)
        let mut wrong = raw.clone();
        wrong.out = par_raw().out;
        assert!(matches!(
            validate_moore(&wrong),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            validate_mealy(&raw),
            Err(Error::ShapeMismatch { .. })
        ));
        let one = MooreMachine::from_fn(
            Alphabet::binary(),
            Alphabet::binary(),
            vec!["*".into()],
            |_, _| 0,
            |_| 0,
        )
        .unwrap();
        assert_eq!(validate_moore(&one.to_raw()).unwrap(), one);
    }

    #[test]
    fn validation_is_idempotent() {
        let m = validate_mealy(&par_raw()).unwrap();
        assert_eq!(validate_mealy(&m.to_raw()).unwrap(), m);
    }

    #[test]
    fn homomorphism_examples() {
        let par = fixtures::par();
        assert!(is_homomorphism(&par, &par, &StateMap::identity(2)).unwrap());
        let swap = StateMap::new(vec![1, 0]);
        assert!(!is_homomorphism(&par, &par, &swap).unwrap());
        assert!(!is_homomorphism(&par, &par, &StateMap::constant(2, 0)).unwrap());
    }

    #[test]
    fn swap_is_equivariant_but_not_output_preserving() {
        let par = fixtures::par();
        for e in 0..2 {
            for a in 0..2 {
                assert_eq!(1 - par.next(e, a), par.next(1 - e, a));
            }
        }
        assert_ne!(par.out(1, 0), par.out(0, 0));
    }

    #[test]
    fn homomorphism_endpoint_errors() {
        let par = fixtures::par();
        let other = MealyMachine::from_fn(
            Alphabet::numeric(3).unwrap(),
            Alphabet::binary(),
            vec!["x".into()],
            |_, _| 0,
            |_, _| 0,
        )
        .unwrap();
        assert!(matches!(
            is_homomorphism(&par, &other, &StateMap::constant(2, 0)),
            Err(Error::EndpointMismatch { .. })
        ));
        assert!(matches!(
            is_homomorphism(&par, &fixtures::cpar(), &StateMap::identity(2)),
            Err(Error::KindMismatch { .. })
        ));
        assert!(matches!(
            is_homomorphism(&par, &par, &StateMap::new(vec![0])),
            Err(Error::InvalidStateMap(_))
        ));
    }
}
