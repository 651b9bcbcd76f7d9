//! Boundary L-systems for square-grid plane-filling folding curves.
//!
//! Given the rule `σ(A)` of a folding curve over `{A, B, +, -}`, the crate
//! derives the rule `τ` over `{L, R, l, r, S, s}` whose iterates trace the
//! left and right boundaries of the iterates of `σ`, renders both as exact
//! lattice paths, and checks the two against each other with an independent
//! polyomino boundary trace.
//!
//! ```
//! use foldbound::{derive_boundary_system, verify_boundary, ExpansionCap, FoldingSystem};
//!
//! let sys = FoldingSystem::parse("A-B").unwrap();
//! let tau = derive_boundary_system(&sys).unwrap();
//! assert_eq!(tau.to_string(), "L=Ll,R=S,l=S,r=Rr,S=Lr,s=Rl");
//! assert!(verify_boundary(&sys, &tau, 6, ExpansionCap::default()).unwrap().passed());
//! ```

pub mod derivation;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod words;

pub use derivation::{derive_boundary_system, derive_with_trace, Derivation};
pub use error::{Error, Result};
pub use geometry::{GridPoint, Heading, LatticePath, Segment};
pub use oracle::{verify_boundary, Mismatch, VerifyReport};
pub use words::{
    expand_boundary, expand_fold, parse_fold_word, BoundarySystem, DirLetter, DirWord, Direction,
    ExpansionCap, FoldLetter, FoldWord, FoldingSystem, Parity,
};
