use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the engine can report. Validation errors name the offending
/// index, pair or triple so that file inputs can be fixed by hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} index {index} out of range (expected < {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("composable pair (g={g}, f={f}) has no composite")]
    CompositionGap { g: usize, f: usize },
    #[error("bad composite entry (g={g}, f={f}): {reason}")]
    BadComposite { g: usize, f: usize, reason: String },
    #[error("identity law fails for morphism {morphism} with identity {identity} ({side} side)")]
    IdentityViolation {
        morphism: usize,
        identity: usize,
        side: &'static str,
    },
    #[error("associativity fails on triple (h={h}, g={g}, f={f})")]
    AssociativityViolation { h: usize, g: usize, f: usize },
    #[error("malformed category: {0}")]
    MalformedCategory(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("size cap exceeded: {what} is {size}, cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("not a group: {axiom} fails ({witness})")]
    NotAGroup { axiom: &'static str, witness: String },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid bifunctor: {0}")]
    InvalidBiFunctor(String),
    #[error("no witness: the pair commutes")]
    NoWitness,
    #[error("a cocone exists over the given diagram; the construction does not refute")]
    CoconeExists,
    #[error("limit shape is conical; the construction degenerates")]
    ConicalShape,
    #[error("limit shape is not connected")]
    NotConnected,
    #[error("decision methods disagree: {0}")]
    InternalDisagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_size_cap(&self) -> bool {
        matches!(self, Error::SizeCapExceeded { .. })
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
