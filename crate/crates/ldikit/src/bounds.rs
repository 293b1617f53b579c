//! Promise bounds and parameter checks: the generalized quantum Hamming
//! bound, the distance-promise cutoffs for general and CSS codes, and the
//! a-priori bound on the largest entry of a prescriptive form.
//!
//! Cutoff comparisons against primes are exact: the CSS cutoff
//! `B^{d−1}·(d−1)^{(d−1)/2}` is irrational for even d, so it is kept as a
//! squared integer and compared by squaring, never through floats.

use crate::ring::{is_prime, next_prime_above};
use num_bigint::BigUint;
use num_traits::One;

/// Verdict of the generalized quantum Hamming bound
/// `Σ_{j≤⌊(d−1)/2⌋} C(n,j)(q²−1)^j ≤ q^{n−k}` in exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GqhbVerdict {
    pub holds: bool,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

pub fn quantum_hamming_bound(n: u64, k: u64, d: u64, q: u64) -> GqhbVerdict {
    assert!(n >= k, "n must be at least k");
    assert!(d >= 1, "distance must be positive");
    let q_big = BigUint::from(q);
    let q2m1 = &q_big * &q_big - BigUint::one();
    let mut lhs = BigUint::ZERO;
    for j in 0..=(d - 1) / 2 {
        lhs += big_binomial(n, j) * q2m1.pow(j as u32);
    }
    let rhs = q_big.pow((n - k) as u32);
    GqhbVerdict {
        holds: lhs <= rhs,
        lhs,
        rhs,
    }
}

fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The CSS distance-promise cutoff `B^{d−1}·(d−1)^{(d−1)/2}`, stored as the
/// exact pair so strict comparisons against primes stay rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssCutoff {
    pub b: u64,
    pub d: u64,
}

impl CssCutoff {
    pub fn new(b: u64, d: u64) -> CssCutoff {
        assert!(b >= 1 && d >= 2, "cutoff needs B >= 1 and d >= 2");
        CssCutoff { b, d }
    }

    /// `B^{d−1}` — the rational factor.
    pub fn base_power(&self) -> BigUint {
        BigUint::from(self.b).pow((self.d - 1) as u32)
    }

    /// `(d−1)^{d−1}` — the radicand whose square root completes the value.
    pub fn radicand(&self) -> BigUint {
        BigUint::from(self.d - 1).pow((self.d - 1) as u32)
    }

    /// The square of the cutoff, always an integer.
    pub fn squared(&self) -> BigUint {
        self.base_power().pow(2) * self.radicand()
    }

    /// Exact integer value when the squared cutoff is a perfect square
    /// (always for odd d, and whenever the radicand happens to be square);
    /// `None` when the value is irrational.
    pub fn exact_integer(&self) -> Option<BigUint> {
        let sq = self.squared();
        let root = sq.sqrt();
        if &root * &root == sq {
            Some(root)
        } else {
            None
        }
    }

    /// Least integer ≥ the cutoff.
    pub fn ceil(&self) -> BigUint {
        let sq = self.squared();
        let root = sq.sqrt();
        if &root * &root == sq {
            root
        } else {
            root + 1u32
        }
    }

    /// Strict comparison `cutoff < p`, decided by squaring.
    pub fn below_prime(&self, p: u64) -> bool {
        BigUint::from(p).pow(2) > self.squared()
    }

    /// Least prime strictly above the cutoff.
    pub fn next_safe_prime(&self) -> u64 {
        // Start from floor(cutoff) and walk primes upward; the strict
        // comparison handles the boundary exactly.
        let floor = self.squared().sqrt();
        let mut candidate = next_prime_above(to_u64(&floor));
        loop {
            if self.below_prime(candidate) {
                return candidate;
            }
            candidate = next_prime_above(candidate);
        }
    }
}

impl std::fmt::Display for CssCutoff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exact_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}*sqrt({})", self.base_power(), self.radicand()),
        }
    }
}

fn to_u64(x: &BigUint) -> u64 {
    u64::try_from(x).expect("cutoff exceeds u64; no prime search at that scale")
}

/// General-code cutoff `B^{2(d−1)}·(2(d−1))^{d−1}`, always an integer.
pub fn general_cutoff(b: u64, d: u64) -> BigUint {
    assert!(b >= 1 && d >= 2, "cutoff needs B >= 1 and d >= 2");
    BigUint::from(b).pow((2 * (d - 1)) as u32) * BigUint::from(2 * (d - 1)).pow((d - 1) as u32)
}

/// A-priori bound `B ≤ (2 + k(q−1))(q−1)` on the largest entry of a
/// prescriptive form.
pub fn max_entry_bound(k: u64, q: u64) -> BigUint {
    assert!(is_prime(q), "q must be prime");
    let qm1 = BigUint::from(q - 1);
    (BigUint::from(2u32) + BigUint::from(k) * &qm1) * &qm1
}

/// Both promise cutoffs for a given largest entry and distance, and the
/// least primes strictly above them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromiseBounds {
    pub general: BigUint,
    pub css: CssCutoff,
    pub next_safe_prime_general: u64,
    pub next_safe_prime_css: u64,
}

pub fn promise_bounds(b: u64, d: u64) -> PromiseBounds {
    let general = general_cutoff(b, d);
    let css = CssCutoff::new(b, d);
    PromiseBounds {
        next_safe_prime_general: next_prime_above(to_u64(&general)),
        next_safe_prime_css: css.next_safe_prime(),
        general,
        css,
    }
}

/// The distance promise at prime `p`: strictly above the cutoff, or
/// trivially at the origin dimension where the distance was measured.
pub fn within_css_promise(cutoff: &CssCutoff, p: u64, origin_q: u64) -> bool {
    p == origin_q || cutoff.below_prime(p)
}

pub fn within_general_promise(cutoff: &BigUint, p: u64, origin_q: u64) -> bool {
    p == origin_q || BigUint::from(p) > *cutoff
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gqhb_examples() {
        let five = quantum_hamming_bound(5, 1, 3, 2);
        assert!(five.holds);
        assert_eq!(five.lhs, BigUint::from(16u32));
        assert_eq!(five.rhs, BigUint::from(16u32));

        let steane = quantum_hamming_bound(7, 1, 3, 2);
        assert!(steane.holds);
        assert_eq!(steane.lhs, BigUint::from(22u32));
        assert_eq!(steane.rhs, BigUint::from(64u32));

        let packed = quantum_hamming_bound(6, 2, 3, 2);
        assert!(!packed.holds);
        assert_eq!(packed.lhs, BigUint::from(19u32));
        assert_eq!(packed.rhs, BigUint::from(16u32));
    }

    #[test]
    fn css_cutoff_values() {
        assert_eq!(
            CssCutoff::new(1, 3).exact_integer(),
            Some(BigUint::from(2u32))
        );
        // d = 2 leaves radicand 1, so the value is exactly B.
        assert_eq!(
            CssCutoff::new(1, 2).exact_integer(),
            Some(BigUint::from(1u32))
        );
        assert_eq!(CssCutoff::new(1, 2).ceil(), BigUint::from(1u32));
        assert_eq!(
            CssCutoff::new(2, 3).exact_integer(),
            Some(BigUint::from(8u32))
        );
        // d = 4: 1·sqrt(27) is irrational.
        assert_eq!(CssCutoff::new(1, 4).exact_integer(), None);
    }

    #[test]
    fn general_cutoff_values() {
        assert_eq!(general_cutoff(1, 3), BigUint::from(16u32));
        assert_eq!(general_cutoff(1, 2), BigUint::from(2u32));
        assert_eq!(general_cutoff(3, 3), BigUint::from(1296u32));
    }

    #[test]
    fn max_entry_bound_values() {
        assert_eq!(max_entry_bound(1, 2), BigUint::from(3u32));
        assert_eq!(max_entry_bound(0, 2), BigUint::from(2u32));
        assert_eq!(max_entry_bound(7, 3), BigUint::from(32u32));
    }

    #[test]
    fn next_safe_primes() {
        let bounds = promise_bounds(1, 3);
        assert_eq!(bounds.next_safe_prime_css, 3);
        assert_eq!(bounds.next_safe_prime_general, 17);

        // Irrational cutoff 1·sqrt(1) for d = 2... B = 1, d = 2 gives
        // exactly 1, so the next safe prime is 2.
        assert_eq!(CssCutoff::new(1, 2).next_safe_prime(), 2);
        // B = 2, d = 2: cutoff = 2·sqrt(1) = 2 → next prime 3.
        assert_eq!(CssCutoff::new(2, 2).next_safe_prime(), 3);
        // B = 1, d = 4: cutoff = sqrt(27) ≈ 5.196 → next prime 7.
        assert_eq!(CssCutoff::new(1, 4).next_safe_prime(), 7);
    }

    #[test]
    fn css_dominated_by_general() {
        for b in 1..=10u64 {
            for d in 2..=8u64 {
                let css = CssCutoff::new(b, d);
                let general = general_cutoff(b, d);
                // css ≤ general ⟺ css² ≤ general².
                assert!(
                    css.squared() <= general.pow(2),
                    "css cutoff exceeds general at B={b}, d={d}"
                );
            }
        }
    }

    #[test]
    fn promise_includes_origin() {
        let cutoff = CssCutoff::new(1, 3); // value 2
        assert!(within_css_promise(&cutoff, 2, 2)); // origin
        assert!(!within_css_promise(&cutoff, 2, 3)); // 2 is not above 2
        assert!(within_css_promise(&cutoff, 3, 2));
        let general = general_cutoff(1, 3);
        assert!(within_general_promise(&general, 2, 2));
        assert!(!within_general_promise(&general, 13, 2));
        assert!(within_general_promise(&general, 17, 2));
    }
}
