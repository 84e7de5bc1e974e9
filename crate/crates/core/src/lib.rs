//! Exact commutative-algebra toolkit over F_p[x0..x4] that constructs the
//! eight families A-H of smooth degree-10 surfaces in projective four-space
//! and certifies each construction against its expected invariants: degree,
//! sectional genus, Euler characteristic, minimal free resolution, ideal-sheaf
//! cohomology, Hartshorne-Rao module, 6-secant geometry and liaison behavior.

pub mod cohomology;
pub mod constructions;
pub mod groebner;
pub mod idealops;
pub mod modres;
pub mod monad;
pub mod numerology;
pub mod report;
pub mod ring;

pub use groebner::Ideal;
pub use ring::field::Fp;
pub use ring::monomial::Monomial;
pub use ring::poly::Poly;
pub use ring::rng::Rng;

/// Number of variables of the ambient ring R = F_p[x0,...,x4].
pub const NVARS: usize = 5;

/// Default prime modulus. Large enough that random "general" choices behave
/// generically, small enough for fast modular arithmetic.
pub const DEFAULT_PRIME: u64 = 31991;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus is not an odd prime below 2^31.
    BadPrime(u64),
    /// Text that could not be parsed, with a reason.
    Parse(String),
    /// An operation precondition was violated.
    Precondition(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::BadPrime(p) => write!(f, "{} is not an odd prime below 2^31", p),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
            Error::Precondition(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
