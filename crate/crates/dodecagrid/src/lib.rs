// SPDX-License-Identifier: MIT OR Apache-2.0

//! A five-state rotation-invariant cellular automaton on the hyperbolic
//! dodecagrid, the tessellation of hyperbolic 3-space by right-angled
//! dodecahedra with four cells around every edge.
//!
//! * [`geometry`]: faces, adjacency and the sixty rotations of one dodecahedron.
//! * [`topology`]: tiles as canonical generator words, neighbours, contacts, frames.
//! * [`rules`]: rule syntax, minimal forms, coherence audits, embedded tables.
//! * [`engine`]: sparse synchronous evolution and cycle detection.
//! * [`scenarios`]: builders of tracks, switches, controller, tunnel and register,
//!   with probes and golden traces.

pub mod engine;
pub mod geometry;
pub mod rules;
pub mod scenarios;
pub mod topology;

pub use engine::{Configuration, EngineError};
pub use geometry::{FaceIndex, FaceMap};
pub use rules::{Color, Rule, RuleTable};
pub use topology::{Frame, TileId};
