use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet `{0}` has no symbols")]
    EmptyAlphabet(String),
    #[error("machine declares no states")]
    NoStates,
    #[error("duplicate {what} name `{name}`")]
    DuplicateName { what: &'static str, name: String },
    #[error("missing entry at `{path}`")]
    MissingEntry { path: String },
    #[error("unknown {what} `{name}` at `{path}`")]
    UnknownSymbol {
        what: &'static str,
        name: String,
        path: String,
    },
    #[error("output table at `{path}` is {found}, expected {expected}")]
    ShapeMismatch {
        path: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("endpoint mismatch: expected {expected}, found {found}")]
    EndpointMismatch { expected: String, found: String },
    #[error("machine kind mismatch: {left} vs {right}")]
    KindMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("a Mealy machine cannot run on the empty word")]
    EmptyWordOnMealy,
    #[error("letter `{0}` is not in the alphabet")]
    LetterOutOfAlphabet(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("invalid state map: {0}")]
    InvalidStateMap(String),
    #[error("state map is not a machine homomorphism")]
    NotAHomomorphism,
    #[error("state maps are not mutually inverse")]
    NotABijection,
    #[error("enumeration of {candidates} candidates exceeds the limit of {limit}")]
    EnumerationTooLarge { candidates: u128, limit: u128 },
    #[error("machine is not soft")]
    NotSoft,
    #[error("there is no 2-cell between a formal identity and a machine")]
    NoSuchCell,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
