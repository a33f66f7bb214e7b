use thiserror::Error;

/// Errors raised while building rings, endomorphisms and skew matrix rings,
/// or when an operation's precondition does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("ring axiom `{law}` fails at {witness:?}")]
    RingAxiom { law: &'static str, witness: Vec<u32> },

    #[error("map is not a ring endomorphism: `{law}` fails at {witness:?}")]
    Endomorphism { law: &'static str, witness: Vec<u32> },

    #[error("endomorphism `{name}` is not defined for ring {ring}")]
    IncompatibleEndomorphism { name: String, ring: String },

    #[error("ring {0} is not local")]
    NotLocal(String),

    #[error("element {0} is not a unit")]
    NotAUnit(u32),

    #[error("element {0} is not nilpotent")]
    NotNilpotent(u32),

    #[error("element index {index} out of range for ring of order {order}")]
    ElementOutOfRange { index: u64, order: usize },

    #[error("enumeration needs {required} matrices, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("constructed decomposition fails check `{check}` in case {case}")]
    VerificationFailed { case: u8, check: &'static str },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("i/o error on {path}: {reason}")]
    Io { path: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}
