//! Recoloring sequences between proper colorings of chordal graphs.
//!
//! Given a chordal graph with clique number `omega` and two proper colorings using at
//! most `k >= omega + 3` colors, [`transform`] returns a sequence of single-vertex
//! recolorings, each keeping the coloring proper, whose length is linear in the
//! number of vertices for fixed `omega` and maximum degree.
//!
//! ```
//! use chordal_recolor::{transform, EngineConfig, Graph};
//!
//! let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
//! let seq = transform(&g, &[1, 2, 1], &[3, 4, 5], 5, EngineConfig::default()).unwrap();
//! let report = chordal_recolor::verify_sequence(&g, &[1, 2, 1], &seq.steps, &[3, 4, 5], 5);
//! assert!(report.ok);
//! ```

pub mod buffer;
pub mod engine;
pub mod generators;
pub mod graph_core;
pub mod io;
pub mod oracle;
pub mod verifier;

pub use engine::{
    recolor_to_canonical, transform, EngineConfig, EngineError, RecolorStep, Recoloring, RunReport,
};
pub use graph_core::{load_graph, Graph};
pub use verifier::{recolor_stats, verify_sequence, VerifyReport};
