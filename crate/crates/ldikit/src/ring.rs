//! Coefficient rings for exponent vectors: integers mod a prime, or the
//! plain integers.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// The ring an exponent vector lives in. `Mod(q)` keeps entries in
/// `{0, …, q−1}`; `Integers` keeps them as arbitrary signed integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Mod(u64),
    Integers,
}

impl Ring {
    /// Builds `Mod(q)`, rejecting composite or unit moduli.
    pub fn modulus(q: u64) -> Result<Ring, RingError> {
        if is_prime(q) {
            Ok(Ring::Mod(q))
        } else {
            Err(RingError::NotPrime(q))
        }
    }

    /// Reduces a value into this ring's canonical range.
    pub fn reduce(&self, v: i64) -> i64 {
        match self {
            Ring::Mod(q) => v.rem_euclid(*q as i64),
            Ring::Integers => v,
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            Ring::Mod(q) => Some(*q),
            Ring::Integers => None,
        }
    }
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ring::Mod(q) => write!(f, "mod {q}"),
            Ring::Integers => write!(f, "inf"),
        }
    }
}

/// Residue system used when lifting `Mod(q)` entries to the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResidueSystem {
    /// `{−⌊q/2⌋, …, ⌊q/2⌋}`; matches hand-written small-entry forms.
    #[default]
    Symmetric,
    /// `{0, …, q−1}`.
    NonNegative,
}

impl ResidueSystem {
    /// Lifts a canonical residue in `{0, …, q−1}` to an integer
    /// representative.
    pub fn lift(&self, residue: i64, q: u64) -> i64 {
        debug_assert!(0 <= residue && residue < q as i64);
        match self {
            ResidueSystem::NonNegative => residue,
            ResidueSystem::Symmetric => {
                if residue as u64 > q / 2 {
                    residue - q as i64
                } else {
                    residue
                }
            }
        }
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    // These witnesses decide primality for every n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Least prime strictly greater than `floor`.
pub fn next_prime_above(floor: u64) -> u64 {
    let mut candidate = floor.checked_add(1).expect("prime search overflow");
    loop {
        if is_prime(candidate) {
            return candidate;
        }
        candidate += 1;
    }
}
