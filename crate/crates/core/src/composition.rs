//! Sequential composition of machines.
//!
//! The composite `second ⋄ first` runs `first` on the input and feeds its
//! output to `second`. Its carrier is the set of pairs `(f, e)` with `f` a
//! state of `second` and `e` a state of `first`, laid out lexicographically:
//! the pair `(f, e)` has index `f * |E| + e`.
//!
//! Composing two Mealy machines gives a Mealy machine. As soon as one factor
//! is Moore the composite output no longer depends on the current letter, so
//! [`ltimes`], [`rtimes`] and [`compose_moore`] return [`MooreMachine`]s.

use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::machine::{
    check_endpoints, homomorphism_holds, Kind, Machine, MealyMachine, MooreMachine, StateMap,
};
use crate::universal::embed_j;

/// The Mealy identity on `alphabet`: one state, echoes every letter.
pub fn identity_cell(alphabet: &Alphabet) -> MealyMachine {
    MealyMachine::assemble(
        alphabet.clone(),
        alphabet.clone(),
        vec!["*".to_string()].into(),
        vec![0; alphabet.len()],
        (0..alphabet.len()).collect(),
    )
}

pub(crate) fn pair_name(outer: &str, inner: &str) -> String {
    // hot in sweeps; avoids the formatting machinery
    let mut name = String::with_capacity(outer.len() + inner.len() + 7);
    name.push('⟨');
    name.push_str(outer);
    name.push(',');
    name.push_str(inner);
    name.push('⟩');
    name
}

fn pair_names(second: &[String], first: &[String]) -> Arc<[String]> {
    let mut names = Vec::with_capacity(second.len() * first.len());
    for f in second {
        names.extend(first.iter().map(|e| pair_name(f, e)));
    }
    names.into()
}

fn check_composable<S, F>(second: &S, first: &F) -> Result<()>
where
    S: Machine + ?Sized,
    F: Machine + ?Sized,
{
    first.output().expect_same(second.input())
}

/// Transition table of the cascade: `((f, e), a) ↦ (next₂(f, emit₁(e, a)), next₁(e, a))`.
fn cascade_delta<S, F>(second: &S, first: &F) -> Vec<usize>
where
    S: Machine + ?Sized,
    F: Machine + ?Sized,
{
    let (nf, ne, k) = (second.state_count(), first.state_count(), first.input().len());
    let mut delta = Vec::with_capacity(nf * ne * k);
    for f in 0..nf {
        for e in 0..ne {
            for a in 0..k {
                let f2 = second.next(f, first.emit(e, a));
                delta.push(f2 * ne + first.next(e, a));
            }
        }
    }
    delta
}

/// Output emitted by the cascade at `(f, e)` on letter `a`.
#[inline]
fn cascade_emit<S, F>(second: &S, first: &F, f: usize, e: usize, a: usize) -> usize
where
    S: Machine + ?Sized,
    F: Machine + ?Sized,
{
    second.emit(f, first.emit(e, a))
}

fn cascade_mealy<S, F>(second: &S, first: &F) -> MealyMachine
where
    S: Machine + ?Sized,
    F: Machine + ?Sized,
{
    let (nf, ne, k) = (second.state_count(), first.state_count(), first.input().len());
    let mut out = Vec::with_capacity(nf * ne * k);
    for f in 0..nf {
        for e in 0..ne {
            out.extend((0..k).map(|a| cascade_emit(second, first, f, e, a)));
        }
    }
    MealyMachine::assemble(
        first.input().clone(),
        second.output().clone(),
        pair_names(second.state_names(), first.state_names()),
        cascade_delta(second, first),
        out,
    )
}

/// Only valid when one factor is Moore; the output is then read at letter 0.
fn cascade_moore<S, F>(second: &S, first: &F) -> MooreMachine
where
    S: Machine + ?Sized,
    F: Machine + ?Sized,
{
    debug_assert!(second.kind() == Kind::Moore || first.kind() == Kind::Moore);
    let (nf, ne) = (second.state_count(), first.state_count());
    let mut out = Vec::with_capacity(nf * ne);
    for f in 0..nf {
        out.extend((0..ne).map(|e| cascade_emit(second, first, f, e, 0)));
    }
    MooreMachine::assemble(
        first.input().clone(),
        second.output().clone(),
        pair_names(second.state_names(), first.state_names()),
        cascade_delta(second, first),
        out,
    )
}

/// Mealy composite `second ⋄ first`.
pub fn compose_mealy(second: &MealyMachine, first: &MealyMachine) -> Result<MealyMachine> {
    check_composable(second, first)?;
    Ok(cascade_mealy(second, first))
}

/// Moore composite `second ⋄ first`; its output is `second.out(f)`.
pub fn compose_moore(second: &MooreMachine, first: &MooreMachine) -> Result<MooreMachine> {
    check_composable(second, first)?;
    Ok(cascade_moore(second, first))
}

/// A Moore machine after a Mealy machine: `n ⋉ m`.
pub fn ltimes(n: &MooreMachine, m: &MealyMachine) -> Result<MooreMachine> {
    check_composable(n, m)?;
    Ok(cascade_moore(n, m))
}

/// A Mealy machine after a Moore machine: `m ⋊ n`, with output
/// `m.out(e, n.out(f))` at state `(e, f)`.
pub fn rtimes(m: &MealyMachine, n: &MooreMachine) -> Result<MooreMachine> {
    check_composable(m, n)?;
    Ok(cascade_moore(m, n))
}

/// A 1-cell of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Mealy(MealyMachine),
    Moore(MooreMachine),
}

impl Cell {
    pub fn as_mealy(&self) -> Option<&MealyMachine> {
        match self {
            Cell::Mealy(m) => Some(m),
            Cell::Moore(_) => None,
        }
    }

    pub fn as_moore(&self) -> Option<&MooreMachine> {
        match self {
            Cell::Moore(m) => Some(m),
            Cell::Mealy(_) => None,
        }
    }

    fn inner(&self) -> &dyn Machine {
        match self {
            Cell::Mealy(m) => m,
            Cell::Moore(m) => m,
        }
    }
}

impl From<MealyMachine> for Cell {
    fn from(m: MealyMachine) -> Self {
        Cell::Mealy(m)
    }
}

impl From<MooreMachine> for Cell {
    fn from(m: MooreMachine) -> Self {
        Cell::Moore(m)
    }
}

impl Machine for Cell {
    fn kind(&self) -> Kind {
        self.inner().kind()
    }
    fn input(&self) -> &Alphabet {
        self.inner().input()
    }
    fn output(&self) -> &Alphabet {
        self.inner().output()
    }
    fn state_names(&self) -> &[String] {
        self.inner().state_names()
    }
    fn next(&self, state: usize, letter: usize) -> usize {
        self.inner().next(state, letter)
    }
    fn observe(&self, state: usize) -> &[usize] {
        self.inner().observe(state)
    }
}

/// `second ⋄ first` for cells of any kind. The result is Moore iff either
/// factor is.
pub fn compose(second: &Cell, first: &Cell) -> Result<Cell> {
    Ok(match (second, first) {
        (Cell::Mealy(s), Cell::Mealy(f)) => compose_mealy(s, f)?.into(),
        (Cell::Moore(s), Cell::Moore(f)) => compose_moore(s, f)?.into(),
        (Cell::Moore(s), Cell::Mealy(f)) => ltimes(s, f)?.into(),
        (Cell::Mealy(s), Cell::Moore(f)) => rtimes(s, f)?.into(),
    })
}

/// `((x, y), z) ↦ (x, (y, z))` on a lexicographic product carrier.
pub(crate) fn rebracket_right(ny: usize, nz: usize, i: usize) -> usize {
    let (xy, z) = (i / nz, i % nz);
    let (x, y) = (xy / ny, xy % ny);
    x * (ny * nz) + y * nz + z
}

/// `(x, (y, z)) ↦ ((x, y), z)`.
pub(crate) fn rebracket_left(ny: usize, nz: usize, i: usize) -> usize {
    let (x, yz) = (i / (ny * nz), i % (ny * nz));
    let (y, z) = (yz / nz, yz % nz);
    (x * ny + y) * nz + z
}

fn associator_map(nx: usize, ny: usize, nz: usize) -> StateMap {
    StateMap::new((0..nx * ny * nz).map(|i| rebracket_right(ny, nz, i)).collect())
}

/// `id_X ⊗ φ`: acts on the inner component of `(x, s)`.
fn whisker_outer(nx: usize, phi: &StateMap, target_inner: usize) -> StateMap {
    let ns = phi.len();
    StateMap::new(
        (0..nx * ns)
            .map(|i| (i / ns) * target_inner + phi.apply(i % ns))
            .collect(),
    )
}

/// `φ ⊗ id_Z`: acts on the outer component of `(s, z)`.
fn whisker_inner(phi: &StateMap, nz: usize) -> StateMap {
    StateMap::new(
        (0..phi.len() * nz)
            .map(|i| phi.apply(i / nz) * nz + i % nz)
            .collect(),
    )
}

/// An invertible 2-cell: a pair of mutually inverse homomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateBijection {
    source: Cell,
    target: Cell,
    forward: StateMap,
    backward: StateMap,
}

impl StateBijection {
    pub fn new(source: Cell, target: Cell, forward: StateMap, backward: StateMap) -> Result<Self> {
        check_endpoints(&source, &target)?;
        crate::machine::check_kinds(&source, &target)?;
        forward.check_shape(source.state_count(), target.state_count())?;
        backward.check_shape(target.state_count(), source.state_count())?;
        if !forward.then(&backward).is_identity() || !backward.then(&forward).is_identity() {
            return Err(Error::NotABijection);
        }
        if !homomorphism_holds(&source, &target, forward.images())
            || !homomorphism_holds(&target, &source, backward.images())
        {
            return Err(Error::NotAHomomorphism);
        }
        Ok(StateBijection {
            source,
            target,
            forward,
            backward,
        })
    }

    pub fn source(&self) -> &Cell {
        &self.source
    }
    pub fn target(&self) -> &Cell {
        &self.target
    }
    pub fn forward(&self) -> &StateMap {
        &self.forward
    }
    pub fn backward(&self) -> &StateMap {
        &self.backward
    }
    pub fn len(&self) -> usize {
        self.forward.len()
    }
    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// The associator from `(h ⋄ g) ⋄ f` to `h ⋄ (g ⋄ f)`, re-bracketing
/// `((eh, eg), ef)` as `(eh, (eg, ef))`. Fails if the re-bracketing is not a
/// machine isomorphism.
pub fn associator(h: &Cell, g: &Cell, f: &Cell) -> Result<StateBijection> {
    let left = compose(&compose(h, g)?, f)?;
    let right = compose(h, &compose(g, f)?)?;
    let (nh, ng, nf) = (h.state_count(), g.state_count(), f.state_count());
    let forward = associator_map(nh, ng, nf);
    let backward = StateMap::new((0..nh * ng * nf).map(|i| rebracket_left(ng, nf, i)).collect());
    StateBijection::new(left, right, forward, backward)
}

/// The pentagon for `k ⋄ h ⋄ g ⋄ f`, as equality of the two composite
/// re-bracketings `((kh)g)f → k(h(gf))` on the four-fold product carrier.
pub fn check_pentagon(k: &Cell, h: &Cell, g: &Cell, f: &Cell) -> Result<bool> {
    check_composable(k, h)?;
    check_composable(h, g)?;
    check_composable(g, f)?;
    let (nk, nh, ng, nf) = (
        k.state_count(),
        h.state_count(),
        g.state_count(),
        f.state_count(),
    );
    // ((kh)g)f → (kh)(gf) → k(h(gf))
    let top = associator_map(nk * nh, ng, nf).then(&associator_map(nk, nh, ng * nf));
    // ((kh)g)f → (k(hg))f → k((hg)f) → k(h(gf))
    let bottom = whisker_inner(&associator_map(nk, nh, ng), nf)
        .then(&associator_map(nk, nh * ng, nf))
        .then(&whisker_outer(nk, &associator_map(nh, ng, nf), nh * ng * nf));
    Ok(top == bottom)
}

/// One of the strict equalities between the embedding J and composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JEquality {
    pub law: &'static str,
    pub holds: bool,
}

/// Evaluates every J-compatibility equality that applies to `m ⋄ n`, as
/// literal table equalities. Two Mealy cells admit none.
pub fn j_equalities(m: &Cell, n: &Cell) -> Result<Vec<JEquality>> {
    check_composable(m, n)?;
    Ok(match (m, n) {
        (Cell::Mealy(m), Cell::Moore(n)) => vec![JEquality {
            law: "J(m⋄n) = m⋄Jn",
            holds: embed_j(&rtimes(m, n)?) == compose_mealy(m, &embed_j(n))?,
        }],
        (Cell::Moore(m), Cell::Mealy(n)) => vec![JEquality {
            law: "J(m⋄n) = Jm⋄n",
            holds: embed_j(&ltimes(m, n)?) == compose_mealy(&embed_j(m), n)?,
        }],
        (Cell::Moore(m), Cell::Moore(n)) => vec![
            JEquality {
                law: "m⋄Jn = Jm⋄n",
                holds: ltimes(m, &embed_j(n))? == rtimes(&embed_j(m), n)?,
            },
            JEquality {
                law: "J(m⋄n) = Jm⋄Jn",
                holds: embed_j(&compose_moore(m, n)?)
                    == compose_mealy(&embed_j(m), &embed_j(n))?,
            },
        ],
        (Cell::Mealy(_), Cell::Mealy(_)) => Vec::new(),
    })
}

pub fn check_j_compatibilities(m: &Cell, n: &Cell) -> Result<bool> {
    Ok(j_equalities(m, n)?.iter().all(|eq| eq.holds))
}
