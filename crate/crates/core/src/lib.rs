#![no_std]
#![forbid(unsafe_code)]

//! Residue-degree generation of ideal class groups, modelled group-theoretically.
//!
//! For a cyclic extension `K/Q` of degree `n` the Galois group of the Hilbert
//! class field splits as `Cl(K) ⋊ Gal(K/Q)`. Everything that decides whether
//! primes of a fixed residue degree `f` generate `Cl(K)` can then be phrased in
//! terms of finite abelian groups, their automorphisms and split extensions.
//! This crate provides:
//!
//! - [`group`]: finite abelian groups in invariant-factor form, subgroups, cosets;
//! - [`aut`]: automorphism-group orders (closed form and enumeration);
//! - [`sim`]: the split-extension simulator with Frobenius semantics;
//! - [`criteria`]: certificate-producing checkers for membership of `f`;
//! - [`consequences`]: annihilators and derived bounds;
//! - [`cyclo`]: residue degrees in cyclotomic fields and density experiments.
//!
//! The crate is `no_std` and only needs `alloc`.

extern crate alloc;

pub mod arith;
pub mod aut;
pub mod consequences;
pub mod criteria;
pub mod cyclo;
mod error;
pub mod group;
pub mod sim;

pub use crate::error::{Error, Result};
pub use crate::group::{FiniteAbelianGroup, GroupElement, Subgroup};
