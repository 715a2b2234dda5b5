//! Exact-arithmetic library for the nearest/farthest Voronoi diagram of four
//! lines in general position in R^3.
//!
//! The library regenerates the full atlas of 15 diagram topologies by an
//! exhaustive search over combinatorial bisector configurations, and
//! classifies concrete four-line inputs into that atlas, locating full twists
//! where present.
//!
//! Layers, bottom to top:
//!
//! * [`rational`], [`surd`], [`interval`], [`poly`] — exact scalar and
//!   polynomial arithmetic (Sturm counts, subresultant gcd, root isolation).
//! * [`lines`], [`trisector`] — line sets in the canonical parametrization,
//!   general-position predicates, projected trisector quartics, asymptotes,
//!   intersection resultants.
//! * [`frame`], [`branch`], [`trace`] — real geometry per bisector: branch
//!   separation, vertex-to-branch assignment, configuration extraction.
//! * [`config`] — combinatorial configurations (labeled planar overlays of two
//!   trisector-like curves), twists, canonical forms.
//! * [`tuples`] — the exhaustive search (Phases 1-3), tuple filters, diagram
//!   assembly and feature counts, atlas serialization.
//! * [`gmap`], [`classify`] — the spherical map of unbounded farthest-diagram
//!   features and the end-to-end classification pipeline.
//! * [`textio`], [`render`] — file formats, reports and SVG output.
//!
//! All predicates on the correctness path use exact rational arithmetic or
//! certified rational interval refinement; floating point appears only in SVG
//! sampling and in the independent test oracle ([`oracle`]).

pub mod branch;
pub mod classify;
pub mod config;
pub mod frame;
pub mod gmap;
pub mod interval;
pub mod lines;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod render;
pub mod surd;
pub mod textio;
pub mod trace;
pub mod trisector;
pub mod tuples;

pub use lines::{GeneralPositionReport, LineSet};
pub use rational::Rational;
pub use surd::Surd;
