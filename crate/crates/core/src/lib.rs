//! Arithmetic integer additive set-indexers (IASIs) on finite simple graphs.
//!
//! A labeling assigns each vertex a finite set of non-negative integers; each
//! edge is labeled by the sumset of its endpoint labels. This crate provides
//!
//! * [`set`]: integer sets, sumsets and arithmetic-progression profiles,
//! * [`graph`]: simple graphs and the line, total, subdivision, contraction and
//!   topological-reduction constructions,
//! * [`labeling`]: injectivity checks and the classification hierarchy,
//! * [`transfer`] and [`construct`]: carrying labelings to associated graphs and
//!   building labelings of a requested class,
//! * [`oracle`]: an exhaustive bounded search for witnesses,
//! * [`theorems`]: executable checks of the known results about these classes,
//! * [`cli`]: the `iasi` command-line front end.

pub mod cli;
pub mod construct;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod set;
pub mod theorems;
pub mod transfer;

pub use error::{IasiError, Result};
pub use graph::{EdgeId, Graph};
pub use labeling::{classify, ClassReport, Labeling, Verdict};
pub use set::{ApProfile, IntSet};
