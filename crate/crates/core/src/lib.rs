//! Skew braces over finite Cayley tables, plus the exact-rational infinite
//! families on localized subgroups of `Q`.
//!
//! A skew brace is a set carrying two group structures `+` and `∘` with a
//! shared identity (index `0` throughout this crate) such that
//! `a ∘ (b + c) = a ∘ b - a + a ∘ c`. The crate covers:
//!
//! * [`group`]: Cayley-table groups, subgroups, quotients, automorphisms,
//!   semidirect products and a catalog of every group of order at most 15;
//! * [`brace`]: the brace type, `λ`, the star product, substructures, ideals,
//!   quotients, socle and centre;
//! * [`series`]: central, socle, star and derived series, supersolubility and
//!   the Dedekind test;
//! * [`constructions`]: explicit families of Dedekind bi-skew braces;
//! * [`rational`]: exact-arithmetic braces on `Z_P ⊆ Q`;
//! * [`ybe`]: finite set-theoretic solutions of the Yang–Baxter equation;
//! * [`enumeration`]: exhaustive enumeration of small skew braces.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod brace;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod rational;
pub mod series;
pub mod set;
pub mod ybe;

pub use bounds::Bounds;
pub use brace::{SkewBrace, SubStructure};
pub use error::{Error, GroupViolation, Result};
pub use group::{Automorphism, FiniteGroup, Subgroup};
pub use set::ElementSet;
pub use ybe::SetSolution;
