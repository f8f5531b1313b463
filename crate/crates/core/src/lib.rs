//! Fibonacci trees and the numeration systems that label them.
//!
//! * [`numeration`]: Zeckendorf ("Fibonacci") codes and golden codes, with
//!   carry-propagating increment and decrement.
//! * [`tree`]: breadth-first generation of white- and black-rooted trees under
//!   the rules `B -> BW`, `W -> BWW`; the ground truth every rule is checked
//!   against.
//! * [`navigation`]: code-rewriting navigation (preferred sons, successors,
//!   node types and their son-type automata) plus exhaustive verification.
//! * [`tiling`]: sector addressing for the pentagrid and heptagrid and the
//!   decomposition of a white tree into black-tree strips.

pub mod navigation;
pub mod numeration;
pub mod report;
pub mod tiling;
pub mod tree;

pub use numeration::{fib, golden_weight, FibCode, GoldenCode, GoldenWeights, NumerationError};
pub use report::{Check, Discrepancy, Report, Violation, Warning};
pub use tree::{NodeRecord, Status, TreeKind, TreeTable};
