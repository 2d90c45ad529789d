//! Finite and affine root systems, Weyl groups, and mechanical checks of the
//! combinatorics behind affine Schubert compactifications of cotangent
//! bundles of cominuscule Grassmannians.
//!
//! The crate is organised bottom-up:
//!
//! - [`dynkin`]: Cartan data, affinization, (co)minuscule detection and
//!   pinned diagram isomorphisms.
//! - [`roots`]: root closure, highest (short) roots, affine real-root
//!   membership and the nilradical / parabolic root sets.
//! - [`weyl`]: matrix Weyl group elements, lengths, descents, coset
//!   representatives and Billey-Postnikov decompositions.
//! - [`oracle`]: brute-force enumeration and Bruhat order used to validate
//!   the [`weyl`] engine on small groups.
//! - [`verify`]: per-case lemma checks producing [`verify::LemmaReport`]s.
//! - [`cli`]: report documents and the command implementations behind the
//!   `weylcheck` binary.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod dynkin;
mod error;
pub mod oracle;
pub mod roots;
pub mod verify;
pub mod weyl;

pub use dynkin::{DiagramKind, DynkinDiagram, Family, NodeSet};
pub use error::{Error, Result};
pub use roots::{AffineRoot, AffineRootSystem, RootLength, RootSet, RootSystem};
pub use weyl::{ParabolicDecomposition, WeylElement, WeylGroup};
