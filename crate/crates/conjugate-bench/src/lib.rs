//! Numerical toolkit for conjugate-variable analysis of sampled signals.
//!
//! The crate audits three tightly related pieces of classical signal theory
//! and their quantum-mechanical reading:
//!
//! - **Effective widths and uncertainty products.** For a finite-energy
//!   signal `f`, the effective width is the standard deviation of `|f|^2`
//!   treated as a density. The product of a signal's width with its Fourier
//!   transform's width obeys a convention-dependent lower bound; this crate
//!   computes both sides under the cyclic-frequency convention (kernel
//!   `exp(-2*pi*i*nu*t)`) and the angular-frequency convention (kernel
//!   `exp(-i*omega*t)`, inverse carrying `1/(2*pi)`), and checks configurable
//!   bound constants against measured products.
//! - **Sampling duality.** Nyquist rates, the reciprocal limits linking a
//!   sample interval to its conjugate band limit, alias folding onto the
//!   principal band, decimation, truncation, and Whittaker-Shannon sinc
//!   reconstruction.
//! - **Physical units.** The same width machinery expressed as
//!   position-momentum or time-energy products against the `h/2` and
//!   `hbar/2` bound candidates, Brillouin-zone reduction of wavenumbers on a
//!   one-dimensional lattice, and an observability audit of hydrogenic
//!   transitions (lifetime-limited energy resolution vs. transition energy).
//!
//! Everything is deterministic: identical inputs produce bit-identical
//! outputs, including the JSON reports emitted by the `conjugate-bench`
//! binary.

pub mod cli;
pub mod error;
pub mod fourier;
pub mod quantum;
pub mod report;
pub mod sampling;
pub mod signal;
pub mod widths;

mod csvio;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use fourier::{Convention, Spectrum};
pub use quantum::{
    BoundChoice, BrillouinZone, ConjugatePair, HydrogenicTransition, PairKind, PhysicalConstants,
};
pub use sampling::{AliasReport, SamplingScenario};
pub use signal::{DomainLabel, Grid, SampledSignal, SignalFamily};
pub use widths::{CorpusAudit, UncertaintyReport, WidthReport};
