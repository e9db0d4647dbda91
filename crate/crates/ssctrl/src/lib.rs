//! Structural controllability of switched linear systems, decided from
//! zero/nonzero sparsity patterns alone.
//!
//! A switched linear system `dx/dt = A_s(t) x + B_s(t) u` with m structured
//! subsystem pairs `(A_i, B_i)` is structurally controllable when some
//! assignment of its free parameters makes it controllable in the classical
//! rank sense. That property is decided here purely graph-theoretically, on
//! the colored union graph of the subsystems:
//!
//! 1. every state vertex is reachable from an input vertex, and
//! 2. there exist `n` S-disjoint edges (pairwise distinct end vertices;
//!    edges sharing a begin vertex carry distinct subsystem colors),
//!
//! with condition 2 decided by a maximum bipartite matching, so the whole
//! test runs in `O(sqrt(p+n) * q)` for `q` free parameters. Verdicts come
//! with machine-checkable certificates, and an exact numeric rank oracle
//! over the prime field F_p (p = 2^31 - 1) cross-validates every answer.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run -p ssctrl --example decide_and_certify   # verdicts + certificates
//! cargo run -p ssctrl --example union_vs_colored     # why colors matter
//! cargo run -p ssctrl --example generic_rank         # g-rank of the two patterns
//! cargo run -p ssctrl --example oracle_crosscheck    # numeric cross-validation
//! cargo run -p ssctrl --example export_dot           # Graphviz rendering
//! cargo run -p ssctrl --example file_roundtrip       # the JSON system format
//! cargo run -p ssctrl --example random_sweep         # density sweeps
//! ```
//!
//! ## Quick start
//!
//! ```
//! use ssctrl::{criteria, SwitchedSystem};
//!
//! // Two subsystems over three states and one input: subsystem 1 actuates
//! // x3, subsystem 2 actuates x1 and couples x3 into x2.
//! let sys = SwitchedSystem::from_supports(
//!     3,
//!     1,
//!     &[
//!         (vec![], vec![(2, 0)]),
//!         (vec![(1, 2)], vec![(0, 0)]),
//!     ],
//! )
//! .unwrap();
//!
//! let verdict = criteria::decide(&sys);
//! assert!(verdict.controllable);
//! // The color-blind union graph alone cannot prove it:
//! assert!(!verdict.union_sufficient);
//! ```
//!
//! The `ssctrl` binary exposes the same pipeline on JSON system files via
//! the `analyze`, `export-dot`, `gen-random`, and `gyrank` subcommands.

pub mod criteria;
pub mod field;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod report;
pub mod system;

pub use criteria::{decide, Certificate, Verdict};
pub use generate::gen_random;
pub use graph::{accessibility, colored_union_graph, export_dot, subsystem_graph, union_graph};
pub use io::{parse_system, render_system};
pub use oracle::{controllable_subspace, oracle_verdict, realize};
pub use report::AnalysisReport;
pub use system::{StructuredMatrix, SwitchedSystem, SystemError};
