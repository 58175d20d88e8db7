//! The free unitization of the Moore composition.
//!
//! A [`UCell`] is either an ordinary Moore machine or a formal identity `⊥`
//! at an alphabet. Formal identities carry no states; composing with one
//! returns the other factor unchanged, and every associator component that
//! involves one is an identity 2-cell. A [`UMap`] is a 2-cell between
//! ucells: a homomorphism between machines, or the identity of a formal
//! identity. There is no 2-cell between `⊥` and a machine.

use crate::alphabet::Alphabet;
use crate::composition::{associator, check_pentagon, compose_moore, Cell};
use crate::error::{Error, Result};
use crate::machine::{is_homomorphism, Machine, MooreMachine, StateMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UCell {
    FormalId(Alphabet),
    Cell(MooreMachine),
}

impl UCell {
    pub fn input(&self) -> &Alphabet {
        match self {
            UCell::FormalId(x) => x,
            UCell::Cell(m) => m.input(),
        }
    }

    pub fn output(&self) -> &Alphabet {
        match self {
            UCell::FormalId(x) => x,
            UCell::Cell(m) => m.output(),
        }
    }

    pub fn is_formal(&self) -> bool {
        matches!(self, UCell::FormalId(_))
    }
}

impl From<MooreMachine> for UCell {
    fn from(m: MooreMachine) -> Self {
        UCell::Cell(m)
    }
}

/// `c2 ⋄ c1`, with `⊥` as a strict unit on both sides.
pub fn ucompose(c2: &UCell, c1: &UCell) -> Result<UCell> {
    c1.output().expect_same(c2.input())?;
    Ok(match (c2, c1) {
        (UCell::FormalId(_), c) | (c, UCell::FormalId(_)) => c.clone(),
        (UCell::Cell(m2), UCell::Cell(m1)) => UCell::Cell(compose_moore(m2, m1)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum UMap {
    Unit(Alphabet),
    Map {
        source: MooreMachine,
        target: MooreMachine,
        map: StateMap,
    },
}

impl UMap {
    /// A 2-cell `source ⇒ target`. Between machines `map` must be a
    /// homomorphism; between formal identities it must be absent.
    pub fn new(source: &UCell, target: &UCell, map: Option<StateMap>) -> Result<UMap> {
        match (source, target, map) {
            (UCell::FormalId(x), UCell::FormalId(y), None) => {
                x.expect_same(y)?;
                Ok(UMap::Unit(x.clone()))
            }
            (UCell::Cell(s), UCell::Cell(t), Some(map)) => {
                if !is_homomorphism(s, t, &map)? {
                    return Err(Error::NotAHomomorphism);
                }
                Ok(UMap::Map {
                    source: s.clone(),
                    target: t.clone(),
                    map,
                })
            }
            (UCell::Cell(_), UCell::Cell(_), None) | (UCell::FormalId(_), UCell::FormalId(_), Some(_)) => {
                Err(Error::InvalidArgument("map must be given exactly between machines".into()))
            }
            _ => Err(Error::NoSuchCell),
        }
    }

    pub fn identity(c: &UCell) -> UMap {
        match c {
            UCell::FormalId(x) => UMap::Unit(x.clone()),
            UCell::Cell(m) => UMap::Map {
                source: m.clone(),
                target: m.clone(),
                map: StateMap::identity(m.state_count()),
            },
        }
    }

    pub fn source(&self) -> UCell {
        match self {
            UMap::Unit(x) => UCell::FormalId(x.clone()),
            UMap::Map { source, .. } => UCell::Cell(source.clone()),
        }
    }

    pub fn target(&self) -> UCell {
        match self {
            UMap::Unit(x) => UCell::FormalId(x.clone()),
            UMap::Map { target, .. } => UCell::Cell(target.clone()),
        }
    }

    /// Vertical composite: `self` followed by `next`.
    pub fn then(&self, next: &UMap) -> Result<UMap> {
        match (self, next) {
            (UMap::Unit(x), UMap::Unit(y)) => {
                x.expect_same(y)?;
                Ok(UMap::Unit(x.clone()))
            }
            (
                UMap::Map { source, target, map },
                UMap::Map {
                    source: mid,
                    target: end,
                    map: second,
                },
            ) => {
                if target != mid {
                    return Err(Error::InvalidArgument(
                        "vertical composite of 2-cells with different middle machines".into(),
                    ));
                }
                Ok(UMap::Map {
                    source: source.clone(),
                    target: end.clone(),
                    map: map.then(second),
                })
            }
            _ => Err(Error::NoSuchCell),
        }
    }
}

/// Horizontal composite `ψ ⋄ φ`. Identity tokens act as strict units;
/// between machines it is the product map `(f, e) ↦ (ψ(f), φ(e))`.
pub fn ucompose2(psi: &UMap, phi: &UMap) -> Result<UMap> {
    phi.source().output().expect_same(psi.source().input())?;
    Ok(match (psi, phi) {
        (UMap::Unit(_), other) | (other, UMap::Unit(_)) => other.clone(),
        (
            UMap::Map {
                source: s2,
                target: t2,
                map: m2,
            },
            UMap::Map {
                source: s1,
                target: t1,
                map: m1,
            },
        ) => {
            let (n1, t1n) = (s1.state_count(), t1.state_count());
            let map = StateMap::new(
                (0..s2.state_count() * n1)
                    .map(|i| m2.apply(i / n1) * t1n + m1.apply(i % n1))
                    .collect(),
            );
            UMap::Map {
                source: compose_moore(s2, s1)?,
                target: compose_moore(t2, t1)?,
                map,
            }
        }
    })
}

/// The unitized associator `(h ⋄ g) ⋄ f ⇒ h ⋄ (g ⋄ f)`; an identity
/// whenever one factor is formal.
pub fn uassociator(h: &UCell, g: &UCell, f: &UCell) -> Result<UMap> {
    let left = ucompose(&ucompose(h, g)?, f)?;
    match (h, g, f) {
        (UCell::Cell(h), UCell::Cell(g), UCell::Cell(f)) => {
            let a = associator(&h.clone().into(), &g.clone().into(), &f.clone().into())?;
            let (Cell::Moore(source), Cell::Moore(target)) = (a.source(), a.target()) else {
                unreachable!("Moore composites are Moore");
            };
            Ok(UMap::Map {
                source: source.clone(),
                target: target.clone(),
                map: a.forward().clone(),
            })
        }
        _ => {
            debug_assert_eq!(left, ucompose(h, &ucompose(g, f)?)?);
            Ok(UMap::identity(&left))
        }
    }
}

/// `(X ⋄ ⊥) ⋄ Y ⇒ X ⋄ (⊥ ⋄ Y) ⇒ X ⋄ Y` equals the right unitor of `X`
/// whiskered by `Y`, where `⊥` is the formal identity at the middle object.
pub fn check_triangle(c2: &UCell, c1: &UCell) -> Result<bool> {
    let unit = UCell::FormalId(c2.input().clone());
    let alpha = uassociator(c2, &unit, c1)?;
    // unitors are strict, hence identities
    let left_unitor = UMap::identity(&ucompose(&unit, c1)?);
    let right_unitor = UMap::identity(&ucompose(c2, &unit)?);
    let via_alpha = alpha.then(&ucompose2(&UMap::identity(c2), &left_unitor)?)?;
    let direct = ucompose2(&right_unitor, &UMap::identity(c1))?;
    Ok(via_alpha == direct)
}

/// The pentagon for `k ⋄ h ⋄ g ⋄ f` in the unitized structure, evaluated
/// leg by leg with [`uassociator`] and [`ucompose2`].
pub fn check_upentagon(k: &UCell, h: &UCell, g: &UCell, f: &UCell) -> Result<bool> {
    let kh = ucompose(k, h)?;
    let hg = ucompose(h, g)?;
    let gf = ucompose(g, f)?;
    // ((kh)g)f → (kh)(gf) → k(h(gf))
    let top = uassociator(&kh, g, f)?.then(&uassociator(k, h, &gf)?)?;
    // ((kh)g)f → (k(hg))f → k((hg)f) → k(h(gf))
    let bottom = ucompose2(&uassociator(k, h, g)?, &UMap::identity(f))?
        .then(&uassociator(k, &hg, f)?)?
        .then(&ucompose2(&UMap::identity(k), &uassociator(h, g, f)?)?)?;
    let holds = top == bottom;
    if let (UCell::Cell(k), UCell::Cell(h), UCell::Cell(g), UCell::Cell(f)) = (k, h, g, f) {
        let cells: [Cell; 4] = [k.clone().into(), h.clone().into(), g.clone().into(), f.clone().into()];
        debug_assert_eq!(holds, check_pentagon(&cells[0], &cells[1], &cells[2], &cells[3])?);
    }
    Ok(holds)
}
