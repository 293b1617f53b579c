//! Exponent-vector representation of generalized Pauli words.
//!
//! A word `⊗_t X^{a_t} Z^{b_t}` (global phase quotiented out) is stored as
//! the length-2n vector `(a_1 … a_n | b_1 … b_n)`, either reduced mod q or
//! kept over the integers. The symplectic product of two such vectors is
//! always computed exactly over the integers; callers reduce mod q when the
//! ring demands it.

use crate::ring::{ResidueSystem, Ring};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PhiError {
    #[error("register count mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("x and z halves must have equal length ({0} vs {1})")]
    UnevenHalves(usize, usize),
}

/// A generalized Pauli word as per-register `(a, b)` exponent pairs for
/// `X^a Z^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliWord {
    ring: Ring,
    registers: Vec<(i64, i64)>,
}

impl PauliWord {
    pub fn new(registers: Vec<(i64, i64)>, ring: Ring) -> Self {
        let registers = registers
            .into_iter()
            .map(|(a, b)| (ring.reduce(a), ring.reduce(b)))
            .collect();
        PauliWord { ring, registers }
    }

    pub fn identity(n: usize, ring: Ring) -> Self {
        PauliWord {
            ring,
            registers: vec![(0, 0); n],
        }
    }

    pub fn n(&self) -> usize {
        self.registers.len()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn registers(&self) -> &[(i64, i64)] {
        &self.registers
    }
}

/// A length-2n exponent vector `(x | z)` tagged with its ring. Entries are
/// kept in the ring's canonical range at all times.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiVector {
    ring: Ring,
    x: Vec<i64>,
    z: Vec<i64>,
}

impl PhiVector {
    pub fn new(x: Vec<i64>, z: Vec<i64>, ring: Ring) -> Result<Self, PhiError> {
        if x.len() != z.len() {
            return Err(PhiError::UnevenHalves(x.len(), z.len()));
        }
        let x = x.into_iter().map(|v| ring.reduce(v)).collect();
        let z = z.into_iter().map(|v| ring.reduce(v)).collect();
        Ok(PhiVector { ring, x, z })
    }

    /// Splits a flat length-2n row `(x_1 … x_n z_1 … z_n)`.
    pub fn from_row(row: &[i64], ring: Ring) -> Result<Self, PhiError> {
        if !row.len().is_multiple_of(2) {
            return Err(PhiError::UnevenHalves(row.len() / 2 + 1, row.len() / 2));
        }
        let n = row.len() / 2;
        Self::new(row[..n].to_vec(), row[n..].to_vec(), ring)
    }

    pub fn zero(n: usize, ring: Ring) -> Self {
        PhiVector {
            ring,
            x: vec![0; n],
            z: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn x(&self) -> &[i64] {
        &self.x
    }

    pub fn z(&self) -> &[i64] {
        &self.z
    }

    pub fn register(&self, t: usize) -> (i64, i64) {
        (self.x[t], self.z[t])
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&v| v == 0)
    }

    /// Flat `(x | z)` row, the order used for files and lexicographic
    /// comparisons.
    pub fn to_row(&self) -> Vec<i64> {
        let mut row = self.x.clone();
        row.extend_from_slice(&self.z);
        row
    }

    /// Number of registers carrying a non-identity operator.
    pub fn weight(&self) -> usize {
        (0..self.n())
            .filter(|&t| self.x[t] != 0 || self.z[t] != 0)
            .count()
    }

    /// Entrywise sum in the common ring.
    pub fn compose(&self, other: &PhiVector) -> Result<PhiVector, PhiError> {
        if self.ring != other.ring {
            return Err(PhiError::RingMismatch(self.ring, other.ring));
        }
        if self.n() != other.n() {
            return Err(PhiError::LengthMismatch(self.n(), other.n()));
        }
        let x = self
            .x
            .iter()
            .zip(&other.x)
            .map(|(a, b)| self.ring.reduce(a + b))
            .collect();
        let z = self
            .z
            .iter()
            .zip(&other.z)
            .map(|(a, b)| self.ring.reduce(a + b))
            .collect();
        Ok(PhiVector {
            ring: self.ring,
            x,
            z,
        })
    }

    pub fn scale(&self, c: i64) -> PhiVector {
        let x = self.x.iter().map(|&v| self.ring.reduce(v * c)).collect();
        let z = self.z.iter().map(|&v| self.ring.reduce(v * c)).collect();
        PhiVector {
            ring: self.ring,
            x,
            z,
        }
    }

    /// Symplectic product `x⃗₁·z⃗₂ − z⃗₁·x⃗₂`, exact over the integers no
    /// matter what rings the operands carry.
    pub fn symplectic(&self, other: &PhiVector) -> Result<i64, PhiError> {
        if self.n() != other.n() {
            return Err(PhiError::LengthMismatch(self.n(), other.n()));
        }
        let mut acc: i128 = 0;
        for t in 0..self.n() {
            acc += self.x[t] as i128 * other.z[t] as i128;
            acc -= self.z[t] as i128 * other.x[t] as i128;
        }
        Ok(i64::try_from(acc).expect("symplectic product exceeds i64"))
    }

    /// Reinterprets the vector over `Mod(q)`, reducing every entry.
    pub fn reduce_mod(&self, q: u64) -> PhiVector {
        let ring = Ring::Mod(q);
        PhiVector {
            ring,
            x: self.x.iter().map(|&v| ring.reduce(v)).collect(),
            z: self.z.iter().map(|&v| ring.reduce(v)).collect(),
        }
    }

    /// Lifts a `Mod(q)` vector to the integers under the given residue
    /// system. Integer vectors are returned unchanged.
    pub fn lift(&self, system: ResidueSystem) -> PhiVector {
        match self.ring {
            Ring::Integers => self.clone(),
            Ring::Mod(q) => PhiVector {
                ring: Ring::Integers,
                x: self.x.iter().map(|&v| system.lift(v, q)).collect(),
                z: self.z.iter().map(|&v| system.lift(v, q)).collect(),
            },
        }
    }
}

/// Maps a Pauli word to its exponent vector. The composition law
/// `phi(p1 ∘ p2) = phi(p1) ⊕ phi(p2)` holds entrywise in the ring.
pub fn phi_map(word: &PauliWord) -> PhiVector {
    let x = word.registers.iter().map(|&(a, _)| a).collect();
    let z = word.registers.iter().map(|&(_, b)| b).collect();
    PhiVector {
        ring: word.ring,
        x,
        z,
    }
}

/// Inverse of [`phi_map`]; total on ring-reduced vectors.
pub fn word_from_phi(v: &PhiVector) -> PauliWord {
    PauliWord {
        ring: v.ring,
        registers: v.x.iter().zip(&v.z).map(|(&a, &b)| (a, b)).collect(),
    }
}
