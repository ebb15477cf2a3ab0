//! Plain-text file formats and DOT export for `stabgraph` values.
//!
//! Every printer emits a canonical ordering (nodes ascending, edges
//! lexicographic) so that files can be compared byte for byte, and every
//! printed value parses back to itself.

pub mod dot;
pub mod format;
pub mod script;

pub use format::{
    parse_circuit, parse_graph, parse_matrix, print_circuit, print_graph, print_matrix, FormatError,
};
pub use script::{parse_script, ScriptError};
