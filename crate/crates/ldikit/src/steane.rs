//! Seven-register Steane code fixtures in several well-known presentations.
//!
//! Rows are flat `(x | z)` vectors of length 14. The integer-entried forms
//! are candidates for local-dimension-invariant certification; the audit
//! tests treat them as inputs to the verifier, not as trusted data.

/// Canonical-form presentation `[I₆ X₂ | Z₁ Z₂]` with integer entries whose
/// pairwise symplectic products vanish exactly.
pub fn ldi_canonical() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 0, 0, 0, 0, 1, /**/ 0, 0, 0, 0, 1, 1, 0],
        vec![0, 1, 0, 0, 0, 0, 0, /**/ 0, 0, 0, 1, 1, 1, 0],
        vec![0, 0, 1, 0, 0, 0, 1, /**/ 0, 0, 0, 1, 0, 1, 0],
        vec![0, 0, 0, 1, 0, 0, 0, /**/ -1, 1, 0, 0, 0, 0, 1],
        vec![0, 0, 0, 0, 1, 0, 0, /**/ 0, 1, -1, 0, 0, 0, 1],
        vec![0, 0, 0, 0, 0, 1, 0, /**/ 1, 1, 1, 0, 0, 0, 0],
    ]
}

/// CSS-blocked integer presentation reached from [`ldi_canonical`] by
/// discrete-Fourier moves on registers 4, 5 and 6.
pub fn ldi_css() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 0, 0, 1, 1, 1, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 1, 1, 1, 0, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 1, 0, 1, 1, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ -1, 1, 0, -1, 0, 0, 1],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 0, 1, -1, 0, -1, 0, 1],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 1, 1, 1, 0, 0, -1, 0],
    ]
}

/// Binary CSS presentation: three pure-X and three pure-Z generators over
/// the same parity pattern.
pub fn css_binary() -> Vec<Vec<i64>> {
    vec![
        vec![1, 1, 1, 1, 0, 0, 0, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 1, 0, 1, 1, 0, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 1, 1, 0, 1, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 1, 1, 1, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 0, 1, 1, 0, 1, 1, 0],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 0, 1, 0, 1, 1, 0, 1],
    ]
}

/// A hand-signed variant of the binary CSS form that circulates as a B = 1
/// integer presentation. The verifier decides whether it actually
/// certifies; see the audit tests before trusting it.
pub fn ldi_css_signed_variant() -> Vec<Vec<i64>> {
    vec![
        vec![1, 1, 1, 1, 0, 0, 0, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 1, 0, 1, 1, 0, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 1, 0, 1, 1, /**/ 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 1, -1, 1, -1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 0, 1, -1, 0, 1, -1, 0],
        vec![0, 0, 0, 0, 0, 0, 0, /**/ 0, 0, 1, -1, 0, -1, 1],
    ]
}
