//! Simulation preorders on finite labelled transition systems, computed as
//! coalgebraic simulations for orders on `P^A`, and exhaustive checkers for
//! the stability laws of those orders.
//!
//! ```
//! use simcoal::{engine, parse_term, unify_alphabets, Semantics};
//!
//! let p = parse_term("P = a.0;").unwrap();
//! let q = parse_term("Q = a.0 + b.0;").unwrap();
//! let (p, q, _) = unify_alphabets(&p, &q).unwrap();
//! let sim = engine::greatest_classical_sim(&p, &q, &Semantics::Conformance).unwrap();
//! assert!(sim.contains(0, 0));
//! ```

pub mod aut;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod lifting;
pub mod lts;
pub mod native;
pub mod order;
pub mod relation;
pub mod report;
pub mod sets;
pub mod stability;
pub mod term;

pub use aut::{parse_aut, write_aut};
pub use engine::{Criterion, Mode};
pub use enumerate::Budget;
pub use error::{Error, Result};
pub use lts::{unify_alphabets, ActionPartition, Lts, Side, StepFunction};
pub use native::{parse_native, write_native};
pub use order::{make_order, FunctorialOrder, OrderExpr, OrderKind, Semantics};
pub use relation::Relation;
pub use report::{CheckReport, Coverage, Law, Verdict, Witness};
pub use sets::StateSet;
pub use stability::StateMap;
pub use term::parse_term;
