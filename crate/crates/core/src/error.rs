use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{r} exceeds the supported size 2^20")]
    FieldTooLarge { p: u32, r: u32 },
    #[error("modulus must have {expected} low-order coefficients, got {got}")]
    ModulusLength { expected: usize, got: usize },
    #[error("modulus coefficient {0} is not reduced mod p")]
    ModulusCoefficient(u32),
    #[error("modulus {0:?} is reducible over F_p")]
    ReducibleModulus(Vec<u32>),
    #[error("no primitive polynomial of degree {r} over F_{p}")]
    NoPrimitiveModulus { p: u32, r: u32 },
    #[error("element {0} is not primitive")]
    NotPrimitive(u32),
    #[error("element {element} out of range for a field of order {order}")]
    ElementOutOfRange { element: u64, order: u32 },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("zero has no discrete logarithm")]
    LogOfZero,
    #[error("operation requires a field of degree {expected}, got degree {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("index has {got} coordinates but the array has {expected} dimensions")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("period vector must be non-empty with positive entries")]
    BadPeriods,
    #[error("expected {expected} entries, found {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("periods {0:?} are not pairwise coprime")]
    NotCoprime(Vec<usize>),
    #[error("array has {size} cells, above the computation cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("shift entry {value} out of range for modulus {modulus}")]
    ShiftOutOfRange { value: u64, modulus: u64 },
    #[error("shift table is not a bijection onto 0..{0} with a single star")]
    NotBijective(usize),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("map x -> alpha/(x+1) from 0 closes after {cycle} steps, not {expected}")]
    ShortCycle { cycle: usize, expected: usize },
    #[error("no primitive element yields a full cycle of length {0}")]
    NoFullCycle(usize),
    #[error("Legendre and Sidelnikov columns need an odd prime or odd field order, got {0}")]
    EvenOrder(u32),
    #[error("construction {construction} is only defined for p > 3, got {p}")]
    OutsideRange { construction: String, p: u32 },
    #[error("unknown construction {0}")]
    UnknownConstruction(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected a {expected}-dimensional array, got {got} dimensions")]
    WrongDimension { expected: usize, got: usize },
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
