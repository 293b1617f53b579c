//! Registry of the interchangeable LDI construction methods.
//!
//! Each method turns a validated stabilizer code into a certified integer
//! form behind the same trait, so callers (the command-line tool in
//! particular) select one by name at runtime.

use crate::ldi::{prescriptive_form, sign_search, LdiCode, SignSearchError, SignSearchOptions};
use crate::ring::ResidueSystem;
use crate::stab::StabilizerCode;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MethodError {
    #[error(transparent)]
    SignSearch(#[from] SignSearchError),
}

#[derive(Debug, Clone, Copy)]
pub struct LdiOptions {
    pub residues: ResidueSystem,
    pub budget: u64,
}

impl Default for LdiOptions {
    fn default() -> Self {
        LdiOptions {
            residues: ResidueSystem::Symmetric,
            budget: crate::ldi::default_budget(),
        }
    }
}

/// An LDI construction strategy selectable by name.
pub trait LdiMethod: Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn build(&self, code: &StabilizerCode, opts: &LdiOptions) -> Result<LdiCode, MethodError>;
}

struct Prescriptive;

impl LdiMethod for Prescriptive {
    fn name(&self) -> &'static str {
        "prescriptive"
    }

    fn summary(&self) -> &'static str {
        "canonicalize, lift, and cancel the Gram lower triangle through the Z block; never fails"
    }

    fn build(&self, code: &StabilizerCode, opts: &LdiOptions) -> Result<LdiCode, MethodError> {
        Ok(prescriptive_form(code, opts.residues).0)
    }
}

struct SignFlip;

impl LdiMethod for SignFlip {
    fn name(&self) -> &'static str {
        "signs"
    }

    fn summary(&self) -> &'static str {
        "backtracking search over per-entry lifts below the modulus, minimizing the largest entry"
    }

    fn build(&self, code: &StabilizerCode, opts: &LdiOptions) -> Result<LdiCode, MethodError> {
        Ok(sign_search(
            code,
            SignSearchOptions {
                budget: opts.budget,
            },
        )?)
    }
}

static PRESCRIPTIVE: Prescriptive = Prescriptive;
static SIGN_FLIP: SignFlip = SignFlip;
static METHODS: [&dyn LdiMethod; 2] = [&PRESCRIPTIVE, &SIGN_FLIP];

pub fn methods() -> &'static [&'static dyn LdiMethod] {
    &METHODS
}

pub fn lookup(name: &str) -> Option<&'static dyn LdiMethod> {
    METHODS.iter().copied().find(|m| m.name() == name)
}
