//! Exact, finite-dimensional snapshots of the Cuntz-Pimsner algebra `O_X`
//! attached to a one-sided subshift `X`.
//!
//! The crate is organised bottom-up:
//!
//! * [`word`] and [`shift`] describe subshifts of finite type and sofic
//!   shifts, their languages, and the finite "tail types" that decide
//!   whether `μx` is again a point of `X`.
//! * [`algebra`] builds the commutative algebras `D̃_k^l` (and the `Ã_l`
//!   tower) as exact functions on finitely many atoms, together with the
//!   inclusion maps between levels and Bratteli diagrams ([`bratteli`]).
//! * [`correspondence`] realises the Hilbert module `H_X = ⊕_a D̃_a`
//!   with its inner product, right action and left action `φ`.
//! * [`star`] is a normal-form rewriting engine for sums of
//!   `S_ν f S_μ*`, and [`verify`] replays the generator relations
//!   with it.
//! * [`conjugacy`] verifies sliding block codes and transports the whole
//!   structure along a certified conjugacy.
//!
//! Everything is exact (Gaussian rationals); no floating point is used.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bratteli;
pub mod conjugacy;
pub mod correspondence;
pub mod error;
pub mod scalar;
pub mod shift;
pub mod snf;
mod sofic;
pub mod star;
pub mod verify;
pub mod word;

pub use algebra::{AlgebraElement, Atom, BasicSet, CylinderAlgebra, Level, Point};
pub use bratteli::{BratteliDiagram, K0Presentation, Tower};
pub use conjugacy::{BlockCode, ConjugacyCertificate, ConjugacyMaps};
pub use correspondence::{CorrElement, Correspondence};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use shift::{Edge, Presentation, Subshift, TailId, TailType, WindowTail};
pub use star::{StarCalculus, StarElement};
pub use word::{Alphabet, Symbol, Word};
