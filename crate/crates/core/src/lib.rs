//! Normal forms, the word problem and poly-free towers for even Artin groups
//! of FC type.
//!
//! The main entry point is [`ArtinGroup`]: build it from a [`CoxeterGraph`]
//! and compute [`CanonicalForm`]s of [`Word`]s. Structural equality of
//! canonical forms is equality in the group.

pub mod action;
pub mod britton;
pub mod coset_forms;
pub mod error;
pub mod oracle;
pub mod presentation;
pub mod residual;
pub mod splitter;
pub mod words;

pub use action::{BasisKey, FreeWord};
pub use error::{Error, ParseError, Result, ValidationError};
pub use presentation::{
    decompose_at, is_fc_type, is_spherical_even, CoxeterGraph, DecompositionData, Gen, RawGraph,
};
pub use splitter::{
    normal_form, polyfree_tower, psi_at, words_equal, ArtinGroup, CanonicalForm, PolyfreeTower,
    RankDescriptor, SemidirectElement, Splitting, TowerStage,
};
pub use words::{free_reduce, Letter, Sign, Word};
