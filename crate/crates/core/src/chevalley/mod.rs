//! Exact group arithmetic over `Z/q`: rank-2 unipotent collection engines,
//! matrix realizations, closure search and the structural checks built on them.

pub mod checks;
pub mod closure;
pub mod laurent;
pub mod matrix;
pub mod unipotent;

use serde::Serialize;
use thiserror::Error;

pub use closure::{bfs_closure, Closure, GroupElem, DEFAULT_CLOSURE_CAP};
pub use laurent::{affine_pi_check, LaurentMatrixElem, LaurentPoly};
pub use matrix::{matrix_realize, MatrixElem, MatrixKind};
pub use unipotent::{Engine, UnipotentElem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error("modulus must be at least 2")]
    BadModulus,
    #[error("modulus must be coprime to 6")]
    ModulusNotCoprimeToSix,
    #[error("elements belong to different groups")]
    TypeMismatch,
    #[error("{0} is not a root of this system")]
    NotARoot(String),
    #[error("unsupported realization: {0}")]
    Unsupported(String),
    #[error("closure exceeded the cap after {partial} elements")]
    CapExceeded { partial: usize },
    #[error("no generators given")]
    NoGenerators,
    #[error("Laurent degree {degree} left the window [-{window}, {window}]")]
    WindowBreach { degree: i64, window: i64 },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("no sign/order dictionary matches the conjugation action")]
    DictionaryNotFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ChevalleyType {
    A2,
    B2,
    G2,
}

impl ChevalleyType {
    /// Largest `|a_ij|` of the Cartan matrix.
    pub fn max_off_diagonal(self) -> u64 {
        match self {
            ChevalleyType::A2 => 1,
            ChevalleyType::B2 => 2,
            ChevalleyType::G2 => 3,
        }
    }
}

impl std::str::FromStr for ChevalleyType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a2" => Ok(ChevalleyType::A2),
            "b2" => Ok(ChevalleyType::B2),
            "g2" => Ok(ChevalleyType::G2),
            _ => Err(format!("unknown type {s:?}")),
        }
    }
}

/// Residue arithmetic modulo `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zq {
    pub q: u64,
}

impl Zq {
    pub fn new(q: u64) -> Result<Self, ChevalleyError> {
        if q < 2 {
            Err(ChevalleyError::BadModulus)
        } else {
            Ok(Zq { q })
        }
    }
    #[inline]
    pub fn of(self, x: i64) -> u64 {
        x.rem_euclid(self.q as i64) as u64
    }
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }
    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }
    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        (self.q - a) % self.q
    }
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }
    pub fn pow(self, a: u64, e: u32) -> u64 {
        (0..e).fold(1 % self.q, |acc, _| self.mul(acc, a))
    }
    pub fn elements(self) -> impl Iterator<Item = u64> {
        0..self.q
    }
}

pub(crate) fn require_coprime_to_six(q: u64) -> Result<Zq, ChevalleyError> {
    let z = Zq::new(q)?;
    if q % 2 == 0 || q % 3 == 0 {
        return Err(ChevalleyError::ModulusNotCoprimeToSix);
    }
    Ok(z)
}
