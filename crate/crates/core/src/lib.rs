//! Exact computations with Pauli operators, octonions and the small finite
//! geometries that connect them.
//!
//! * [`hypercomplex`]: quaternions, octonions driven by a stored unit table,
//!   and the Fano plane read off that table.
//! * [`pauli`]: Pauli strings in the binary symplectic encoding, exact
//!   phased products, commutation graphs.
//! * [`geometry`]: operator lines, incidence structures, design parameters,
//!   isomorphism and configuration search.
//! * [`subalgebra`]: commutator closure, heptads, pentads and decads.
//! * [`liealg`]: structure-constant Lie algebras, so(4) and its J± split.
//! * [`emit`]: text, JSON and DOT output.
//! * [`verify`]: the check suite behind `qgeom verify-all`.
//!
//! ```
//! use qgeom::geometry::{gq22_check, symplectic_polar_space};
//! use qgeom::pauli::PhasedPauli;
//!
//! let xx: PhasedPauli = "XX".parse()?;
//! let zz: PhasedPauli = "ZZ".parse()?;
//! assert_eq!((xx * zz).to_string(), "-YY");
//!
//! assert!(gq22_check(&symplectic_polar_space(2)?));
//! # Ok::<(), qgeom::Error>(())
//! ```

pub mod emit;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod hypercomplex;
pub mod liealg;
pub mod pauli;
pub mod subalgebra;
pub mod verify;

pub use error::{Error, Result};

// The guide's code blocks run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/octonions.md")]
    mod octonions {}
    #[doc = include_str!("../../../book/src/pauli.md")]
    mod pauli {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/subalgebras.md")]
    mod subalgebras {}
    #[doc = include_str!("../../../book/src/so4.md")]
    mod so4 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
