use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    IncompatibleRings,

    #[error("the zero polynomial has no degree")]
    UndefinedDegree,

    #[error("variable `{0}` is not bound by the substitution")]
    UnboundVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("singularity {0} is not isolated")]
    NotIsolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("rewrite over the requested denominator is not exact (remainder has degree {degree})")]
    InexactRewrite { degree: usize },

    #[error("no link is constructed for (r,a,e) = ({r},{a},{e}): (ra-1) does not divide d")]
    LinkNotConstructed { r: u32, a: u32, e: u32 },

    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("matrix entry ({i},{j}) is not homogeneous of degree {expected}")]
    DegreePattern { i: usize, j: usize, expected: u32 },

    #[error("monomial {monomial} violates the eigenvalue condition m - n = -1 mod {r}")]
    Eigenvalue { monomial: String, r: u32 },

    #[error("coefficient `{name}`: {reason}")]
    Coefficient { name: String, reason: String },

    #[error(transparent)]
    Parse(#[from] crate::parse::ParseError),
}
