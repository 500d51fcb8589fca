//! Exact combinatorics of the torus-invariant prime strata of the
//! De Concini–Kac–Procesi algebras `U^w₋`, together with small exact
//! checks in `U_q(sl2)` and `U_q(sl3)`.
//!
//! * [`rootdata`]: Cartan data, the invariant form, positive roots.
//! * [`weyl`]: Weyl group elements, Bruhat order, intervals, root sequences.
//! * [`strata`]: stratum dimensions, kernel lattices, leaf dimensions.
//! * [`qarith`]: Laurent polynomials and fractions in `q`, q-analogues.
//! * [`qcheck`]: explicit representations, relation checks, R-matrix.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod linalg;
pub mod qarith;
pub mod qcheck;
pub mod rootdata;
pub mod strata;
pub mod weyl;

pub use error::{Error, Result};
pub use rootdata::{root_system, Root, RootSystem, Series, Weight};
pub use strata::{stratification_report, Sign, StratumRecord};
pub use weyl::{element_from_word, BruhatInterval, WeylElement, DEFAULT_INTERVAL_CAP};
