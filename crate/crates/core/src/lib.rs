//! Hilbert series, h-polynomials, Castelnuovo–Mumford regularity, depth and
//! graded Betti tables of monomial ideals, and lexsegment ideals with a
//! prescribed regularity and h-polynomial degree.
//!
//! Everything is exact: counts and coefficients are arbitrary-precision
//! integers, homology is computed over the rationals.

pub mod analysis;
pub mod betti;
pub mod combinatorics;
pub mod constructions;
pub mod corpus;
pub mod eliahou_kervaire;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod macaulay;
pub mod monomial;
pub mod oracle;
mod poly;

pub use analysis::{analyze, Analysis, BettiMethod};
pub use betti::BettiTable;
pub use constructions::{construct, fixture, Branch, ConstructionReport, Invariants};
pub use error::{Error, Result};
pub use hilbert::{HPolynomial, HilbertSeries};
pub use ideal::MonomialIdeal;
pub use macaulay::{HilbertFunctionSpec, MacaulayExpansion, OSequenceVerdict, Tail};
pub use monomial::{LexMonomials, Monomial};
pub use oracle::SimplicialComplexRecord;
