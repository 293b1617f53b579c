//! Qudit stabilizer codes in local-dimension-invariant (LDI) form.
//!
//! A stabilizer code over a prime local dimension q is specified by
//! exponent vectors whose pairwise symplectic products vanish mod q. When a
//! set of integer representatives can be chosen so those products vanish
//! exactly over the integers, the same matrix is a valid code over *every*
//! prime, and for primes beyond an explicit cutoff the code distance is
//! promised not to drop. This crate provides:
//!
//! - exact exponent-vector arithmetic and a dense-matrix cross-check
//!   ([`phi`], [`dense`]);
//! - code validation, the allowed move set, canonical form, CSS structure,
//!   and syndromes ([`stab`]);
//! - LDI certification, the prescriptive transform, and a sign-assignment
//!   search, selectable by name through a small strategy registry
//!   ([`ldi`], [`strategy`]);
//! - distance promises: cutoff values, the generalized quantum Hamming
//!   bound, and the entry-size bound ([`bounds`]);
//! - exact distance search, CSS block distance, undetectable-error
//!   classification, and the minor-determinant scanner ([`distance`]);
//! - the binary quantum Hamming family as a certified B = 1 family over
//!   all primes ([`hamming`]).
//!
//! Searches honor the `LDIKIT_SEARCH_BUDGET` environment variable as a
//! global node/candidate budget override.

pub mod bounds;
pub mod dense;
pub mod distance;
pub mod hamming;
pub mod ldi;
pub mod linalg;
pub mod phi;
pub mod random;
pub mod ring;
pub mod stab;
pub mod steane;
pub mod strategy;

pub use distance::{
    classify_error, css_distance, distance_exact, minor_scan, CssDistances, Distance,
    DistanceResult, ErrorClass,
};
pub use hamming::{certify_family_member, hamming_css, hamming_ldi, parity_check_matrix};
pub use ldi::{prescriptive_form, sign_search, verify_rows, LdiCode, LdiReport};
pub use phi::{phi_map, PauliWord, PhiVector};
pub use ring::{ResidueSystem, Ring};
pub use stab::{CanonicalForm, CssStructure, Move, StabilizerCode};
