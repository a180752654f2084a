//! Triangular fully packed loop configurations (TFPLs) and Wieland gyration.
//!
//! - [`words`]: binary words, Young diagrams, horizontal and vertical strips
//! - [`lattice`]: the triangular grid `G^N` and the square grid `G_n`
//! - [`config`]: TFPLs, their boundary `(u, v; w)`, drifters, serialization
//! - [`gyration`]: left and right Wieland gyration and stabilization
//! - [`fpl`]: fully packed loops on the square grid and link patterns
//! - [`verify`]: exhaustive enumeration, counts, Littlewood–Richardson
//!   coefficients and theorem checks
//! - [`render`]: ASCII and SVG drawings
//! - [`cli`]: the `tfpl` command line front end

pub mod error;
pub mod words;
pub mod lattice;
pub mod config;
pub mod gyration;
pub mod fpl;
pub mod render;
pub mod cli;
pub mod verify;

pub use config::{BoundaryTriple, Drifter, TfplConfig, Violation};
pub use error::{Error, Result};
pub use lattice::{Edge, Parity, SqGrid, TriGrid};
pub use words::{BinaryWord, Partition};
