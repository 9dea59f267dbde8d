//! Finite racks, quandles and kei.
//!
//! A rack is a set with a binary operation `▷` whose right translations
//! `f_y : x ↦ x ▷ y` are bijections and which is right self-distributive.
//! This crate stores racks as operation tables and relates each rack to its
//! operator group `⟨f_y⟩`: a rack is the same thing as a permutation group
//! `G`, orbit representatives `α_i` and elements `π_i ∈ G` with
//! `C_G(π_i) ⊇ G_{α_i}` (see [`construction`]).
//!
//! Permutations act on the right: `p.then(&q)` applies `p` first. Library
//! APIs use 0-based points; every text format is 1-based.

pub mod canon;
pub mod construction;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod lower_bound;
pub mod par;
pub mod perm;
pub mod rack;
pub mod report;
pub mod subgroups;
pub mod table;

#[cfg(test)]
mod testdata;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, Isomorphism};
pub use construction::{BlueprintFlags, RackBlueprint};
pub use error::{Error, Result};
pub use group::{OrbitData, PermGroup};
pub use par::Parallelism;
pub use perm::Permutation;
pub use rack::{validate, Fingerprint, Kind, RackClass, Witness};
pub use table::RackTable;
