//! Exact computation in finite-type Artin and Coxeter groups, with
//! presentation machinery for punctured mapping class groups.
//!
//! The crate is organized around five layers:
//!
//! - [`coxeter`]: labeled Coxeter graphs, classification of the
//!   crystallographic finite types, and exact arithmetic in finite Coxeter
//!   groups through the integer reflection representation.
//! - [`garside`]: words in finite-type Artin groups, the greedy left-weighted
//!   (Garside) normal form, and fundamental elements of parabolic subgroups.
//! - [`presentation`]: finitely presented groups, Artin presentations, Tietze
//!   elimination, abelianization invariants, bounded coset enumeration, and
//!   the extension-sequence presentation combiner.
//! - [`mcg`]: parametric generators for the Coxeter graph families and
//!   relator schemas presenting mapping class groups of punctured surfaces.
//! - [`verifier`]: machine verification of word identities, either by the
//!   Garside solver or by checkable elementary-move derivation scripts.

pub mod coxeter;
pub mod garside;
pub mod mcg;
pub mod presentation;
pub mod verifier;

pub use coxeter::{CoxeterElement, CoxeterGraph, Family, StandardType};
pub use garside::{ArtinWord, GarsideNormalForm};
pub use presentation::{FreeWord, Presentation};
