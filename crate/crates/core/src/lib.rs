//! Symmetric quandle invariants of surface-links presented in plat form.
//!
//! A braided surface of even degree `2m` is described combinatorially by a
//! *braid system*: a tuple of monodromy braids `β_j^-1 σ_{k_j}^{ε_j} β_j`,
//! one per branch point. Capping such a surface with the standard wicket
//! configuration yields a surface-link in 4-space, and the symmetric quandle
//! of that surface-link has a finite presentation readable straight off the
//! braid system: one branch relator `Artin(β_j)(x_{k_j}) =
//! Artin(β_j)(x_{k_j+1})` per entry plus one wicket relator `x_{2j-1} =
//! ρ(x_{2j})` per strand pair.
//!
//! The crate builds those presentations, counts their colorings by finite
//! symmetric quandles by exhaustive search, and converts the counts into
//! plat-index lower bounds: a surface-link with a degree-`2m` plat form
//! admits at most `(#X)^m` colorings, so `ceil(log_{#X} col_X)` bounds `m`
//! from below.
//!
//! Everything is exact integer combinatorics. Braid equality goes through
//! the faithful Artin representation on the free group, finite quandles are
//! validated exhaustively against the quandle and good-involution axioms,
//! and the slide (Hurwitz) action is available for consistency checks; all
//! computed invariants are slide-invariant.

pub mod braid;
pub mod braided_surface;
pub mod coloring;
pub mod error;
pub mod free_group;
pub mod presentation;
pub mod symmetric_quandle;

pub use braid::{hilden_generator, BraidWord, HildenKind, Permutation};
pub use braided_surface::{plat_lower_bound, BraidSystem, BraidSystemEntry, SlideDirection};
pub use coloring::{
    coloring_count_for_system, coloring_count_for_system_with, count_colorings,
    count_colorings_with, enumerate_colorings, Coloring, ColoringOptions, DEFAULT_CEILING,
};
pub use error::{Error, Result};
pub use free_group::{FreeGroupEndo, FreeWord, Letter};
pub use presentation::SymQuandlePresentation;
pub use symmetric_quandle::{
    braid_fsq_images, good_involutions, is_kei_table, validate, FiniteSymQuandle, FsqElement,
    QuandleTables, ValidationReport, Violation,
};
