//! Exact verification of edge-length identities for reflexive Delzant
//! polytopes, reflexive GKM graphs and the Betti-number bounds that follow
//! from them.

#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod catalog;
pub mod cfunc;
pub mod delzant;
pub mod error;
pub mod exact;
pub mod gkm;
pub mod io;
pub mod oracle;
pub mod polytope;
pub mod report;
pub mod roots;

pub use bounds::{AdmissibleSet, BettiVector, TableCell};
pub use cfunc::{CParams, CVector};
pub use delzant::{DelzantReport, EdgeData};
pub use error::{Error, Result};
pub use exact::{Integer, LatticeVector, Rational, RationalPoint};
pub use gkm::{GkmGraph, GkmVertex, GorensteinCertificate};
pub use polytope::{FVector, Face, HVector, Halfspace, Polytope};
pub use report::{ItemResult, VerificationReport};
pub use roots::{RootSystem, RootType};
