use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime (characteristics up to 65535 are supported)")]
    NotPrime(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not a power of the characteristic {1}")]
    NotPowerOfCharacteristic(u64, u64),
    #[error("zero has no inverse or order")]
    ZeroElement,
    #[error("field too large for this routine: {0}")]
    FieldTooLarge(String),
    #[error("incompatible fields: {0}")]
    Incompatible(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("q-polynomial has a_0 = 0 and is inseparable")]
    Inseparable,
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: u64 },
    #[error("basis is linearly dependent over GF({0}) (Moore determinant is zero)")]
    DependentBasis(u64),
    #[error("coefficient {0} lies outside GF({1})")]
    OutsideSubfield(String, u64),
    #[error("singular matrix")]
    Singular,
    #[error("parse error at `{token}`: expected {expected}")]
    Parse { token: String, expected: String },
    #[error("every candidate group was ruled out")]
    AllRuledOut,
    #[error("no specialization was accepted")]
    EmptySample,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal error: {0}")]
    Internal(String),
}
