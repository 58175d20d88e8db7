//! Mealy and Moore transducers over finite alphabets.
//!
//! Machines compose sequentially: Mealy machines form a bicategory with the
//! one-state echo machine as identity, while Moore machines compose without
//! any identity. This crate implements both compositions and the mixed ones,
//! the universal Moore cells `𝔲X` and `𝔭X`, the conversions between the two
//! kinds (moorification, decapitation, the embeddings `J` and `D₁`), the
//! hierarchy of soft machines, a free unitization adding formal identities,
//! and a lab of exhaustive checks for the laws relating all of these.
//!
//! ```
//! use moore_core::prelude::*;
//!
//! let par = fixtures::par();
//! let m = moorify(&par);
//! let start = Pointed::by_name(&m, "⟨0,q0⟩").unwrap();
//! assert_eq!(trace(&start, &[1, 0, 1]).unwrap(), vec![0, 1, 1, 0]);
//! ```

pub mod alphabet;
pub mod composition;
pub mod error;
pub mod fixtures;
pub mod lab;
pub mod machine;
pub mod semantics;
pub mod unitization;
pub mod universal;

pub use alphabet::Alphabet;
pub use error::{Error, Result};
pub use machine::{Kind, Machine, MealyMachine, MooreMachine, RawMachine, RawOutput, StateMap};

pub mod prelude {
    pub use crate::alphabet::Alphabet;
    pub use crate::composition::{
        associator, check_j_compatibilities, check_pentagon, compose, compose_mealy,
        compose_moore, identity_cell, j_equalities, ltimes, rtimes, Cell, JEquality,
        StateBijection,
    };
    pub use crate::error::{Error, Result};
    pub use crate::fixtures;
    pub use crate::machine::{
        is_homomorphism, validate_mealy, validate_moore, Kind, Machine, MealyMachine,
        MooreMachine, RawMachine, RawOutput, StateMap,
    };
    pub use crate::semantics::{bisimilar, check_extension_square, d_iter, run, trace, Pointed};
    pub use crate::unitization::{ucompose, ucompose2, uassociator, UCell, UMap};
    pub use crate::universal::{
        apply_d0, apply_d1, decapitate, embed_j, is_n_soft, is_soft, moorify,
        pinfty_carrier_check, universal_p, universal_u,
    };
}
