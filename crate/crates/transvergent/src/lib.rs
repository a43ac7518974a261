//! Symmetric (transvergent) knot diagrams built from half-diagram templates.
//!
//! A *transvergent* diagram is a knot diagram that is mapped to itself by a
//! rotation of π about a horizontal axis lying in the diagram plane. The upper
//! half of such a diagram, together with marked twist slots on the axis, is a
//! [`template::Template`]; filling the slots with a vector of signed half-twist
//! counts reproduces the full diagram. This crate provides:
//!
//! * a combinatorial planar-diagram core (PD codes, validation, Gauss/DT
//!   transcoding, Reidemeister 1/2 reduction) — [`diagram`],
//! * exact polynomial invariants (Kauffman bracket/Jones, Alexander via Fox
//!   calculus, Goeritz determinant and signature, a two-variable skein
//!   disambiguator) — [`invariants`],
//! * identification of diagrams against a reference table of the 249 prime
//!   knots with at most 10 crossings — [`identify`],
//! * template parsing and diagram synthesis in both symmetry modes —
//!   [`template`],
//! * Conway-notation arithmetic for two-bridge knots and symmetric two-bridge
//!   diagram synthesis — [`twobridge`],
//! * corpus verification, twist-grid scanning, bounded exhaustive enumeration
//!   of transvergent diagrams and gap statistics — [`search`],
//! * SVG rendering of synthesized diagrams — [`render`].
//!
//! See the `examples/` directory for one runnable example per capability, and
//! the `transvergent` binary for the command-line interface.

pub mod cli;
pub mod diagram;
pub mod dt;
pub mod identify;
pub mod invariants;
pub mod laurent;
pub mod render;
pub mod search;
pub mod template;
pub mod twobridge;

pub use diagram::{CrossingPD, PlanarDiagram, ValidationReport};
pub use laurent::LaurentPolynomial;
pub use template::{SymmetricDiagram, SynthesisMode, Template, TwistVector};
pub use twobridge::{ConwayNotation, TwoBridgeFraction};
