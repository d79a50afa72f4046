//! Effective widths of `|f|²` densities and the uncertainty products they
//! form with their Fourier conjugates.
//!
//! The effective width of a finite-energy signal is the standard deviation
//! of `|f(u)|²` read as an unnormalized density over the grid coordinate:
//! `W² = ∫|f|² (u - M)² du / ∫|f|² du` with mean ordinate
//! `M = ∫|f|² u du / ∫|f|² du`. The product of a signal's width with its
//! transform's width is checked against a configurable bound constant. The
//! Gaussian is the equality case: `W(f)·W(f̃) = 1/2` under the angular
//! convention and `1/(4π)` under the cyclic convention, which is why those
//! are the per-convention default bounds. A single bound number only makes
//! a claim *relative to a convention*; sweeping other constants (for
//! instance checking a cyclic-convention product against 1/2) is supported
//! as an explicit diagnostic, not a default, precisely because such mixed
//! readings are the classic way uncertainty claims go wrong.
//!
//! Second moments of slowly decaying spectra (the rectangle's sinc² is the
//! canonical case) do not converge: their measured width keeps growing with
//! the grid. Width reports therefore carry a reliability flag, set by
//! recomputing the width on the inner 50% of the grid and flagging any
//! disagreement beyond 1%.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{self, Convention, Spectrum};
use crate::signal::{Grid, SampledSignal, SignalFamily};

/// Slack applied when comparing a measured product against a bound constant,
/// absorbing quadrature-level error at equality cases.
pub const SATISFACTION_TOLERANCE: f64 = 1e-6;

/// Relative disagreement between the full-grid width and the inner-half
/// width beyond which a width is marked unreliable.
pub const RELIABILITY_THRESHOLD: f64 = 0.01;

/// Width statistics of one density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthReport {
    /// First moment of `|f|²` over the grid coordinate.
    pub mean_ordinate: f64,
    /// Standard deviation of `|f|²` about the mean ordinate.
    pub effective_width: f64,
    /// Trapezoidal `∫|f|² du`.
    pub energy: f64,
    /// False when the width is still growing at the grid edge (divergent or
    /// unconverged second moment).
    pub width_reliable: bool,
}

/// A width-product audit of one signal against one bound constant.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertaintyReport {
    pub signal_report: WidthReport,
    pub transform_report: WidthReport,
    pub convention: Convention,
    /// `effective_width(signal) * effective_width(transform)`.
    pub product: f64,
    pub bound_constant: f64,
    /// `product >= bound_constant - SATISFACTION_TOLERANCE`.
    pub satisfied: bool,
    /// Both widths entering the product are reliable.
    pub width_reliable: bool,
}

/// One corpus member's audit outcome; failures are recorded, not fatal.
#[derive(Debug)]
pub struct CorpusEntry {
    pub family: SignalFamily,
    pub outcome: Result<UncertaintyReport>,
}

/// Corpus-wide audit summary.
#[derive(Debug)]
pub struct CorpusAudit {
    pub convention: Convention,
    pub bound_constant: f64,
    pub entries: Vec<CorpusEntry>,
    /// Smallest product among entries whose widths are reliable, with the
    /// family attaining it.
    pub minimum: Option<(SignalFamily, f64)>,
}

/// Default bound constant for a convention: the Gaussian equality value.
pub fn default_bound(convention: Convention) -> f64 {
    match convention {
        Convention::Omega => 0.5,
        Convention::Nu => 1.0 / (4.0 * PI),
    }
}

struct Stats {
    energy: f64,
    mean: f64,
    width: f64,
}

/// Trapezoidal moments of `|values|²` over `grid` points `from..to`.
// the index walks grid coordinates and sample values in lockstep
#[allow(clippy::needless_range_loop)]
fn density_stats(grid: &Grid, values: &[Complex64], from: usize, to: usize) -> Result<Stats> {
    if to - from < 2 {
        return Err(Error::DegenerateSignal(
            "width analysis needs at least 2 points".into(),
        ));
    }
    let weight = |i: usize| -> f64 {
        if i == from || i == to - 1 {
            0.5
        } else {
            1.0
        }
    };
    let step = grid.step();
    let mut m0 = 0.0;
    let mut m1 = 0.0;
    for i in from..to {
        let w = weight(i) * values[i].norm_sqr();
        m0 += w;
        m1 += w * grid.point(i);
    }
    m0 *= step;
    m1 *= step;
    if !(m0.is_finite() && m0 > 0.0) {
        return Err(Error::DegenerateSignal(format!(
            "density has no usable energy (got {m0})"
        )));
    }
    let mean = m1 / m0;
    let mut m2 = 0.0;
    for i in from..to {
        let d = grid.point(i) - mean;
        m2 += weight(i) * values[i].norm_sqr() * d * d;
    }
    m2 *= step;
    Ok(Stats {
        energy: m0,
        mean,
        width: (m2 / m0).sqrt(),
    })
}

fn report_for(grid: &Grid, values: &[Complex64]) -> Result<WidthReport> {
    let n = grid.count();
    let full = density_stats(grid, values, 0, n)?;
    // Convergence probe: a width that changes by more than the threshold
    // when the outer half of the grid is dropped has not settled.
    let inner = density_stats(grid, values, n / 4, n - n / 4);
    let width_reliable = match inner {
        Ok(s) => {
            full.width == 0.0
                || (full.width - s.width).abs() <= RELIABILITY_THRESHOLD * full.width
        }
        Err(_) => false,
    };
    Ok(WidthReport {
        mean_ordinate: full.mean,
        effective_width: full.width,
        energy: full.energy,
        width_reliable,
    })
}

/// First moment of `|f|²` over the full grid.
pub fn mean_ordinate(signal: &SampledSignal) -> Result<f64> {
    density_stats(signal.grid(), signal.values(), 0, signal.grid().count()).map(|s| s.mean)
}

/// Standard deviation of `|f|²` about its mean ordinate.
pub fn effective_width(signal: &SampledSignal) -> Result<f64> {
    density_stats(signal.grid(), signal.values(), 0, signal.grid().count()).map(|s| s.width)
}

/// Full width statistics of a signal, with the reliability probe.
pub fn width_report(signal: &SampledSignal) -> Result<WidthReport> {
    report_for(signal.grid(), signal.values())
}

/// Full width statistics of a spectrum over its conjugate grid.
pub fn spectrum_width_report(spectrum: &Spectrum) -> Result<WidthReport> {
    report_for(spectrum.grid(), spectrum.values())
}

/// Transforms the signal under `convention` and audits the width product
/// against `bound_constant`.
pub fn uncertainty_product(
    signal: &SampledSignal,
    convention: Convention,
    bound_constant: f64,
) -> Result<UncertaintyReport> {
    if !(bound_constant.is_finite() && bound_constant >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "bound constant must be finite and >= 0, got {bound_constant}"
        )));
    }
    let signal_report = width_report(signal)?;
    let spectrum = fourier::transform(signal, convention)?;
    let transform_report = spectrum_width_report(&spectrum)?;
    let product = signal_report.effective_width * transform_report.effective_width;
    Ok(UncertaintyReport {
        signal_report,
        transform_report,
        convention,
        product,
        bound_constant,
        satisfied: product >= bound_constant - SATISFACTION_TOLERANCE,
        width_reliable: signal_report.width_reliable && transform_report.width_reliable,
    })
}

/// Diagnostic sweep: one width computation checked against several bound
/// constants. Useful for auditing claims that pair a bound with the wrong
/// convention; the widths themselves are computed once.
pub fn bound_sweep(
    signal: &SampledSignal,
    convention: Convention,
    bounds: &[f64],
) -> Result<Vec<UncertaintyReport>> {
    if bounds.is_empty() {
        return Err(Error::EmptyInput("bound sweep needs at least one bound".into()));
    }
    let first = uncertainty_product(signal, convention, bounds[0])?;
    Ok(bounds
        .iter()
        .map(|&b| {
            let mut r = first.clone();
            r.bound_constant = b;
            r.satisfied = r.product >= b - SATISFACTION_TOLERANCE;
            r
        })
        .collect())
}

/// Audits every family in `families` on its default grid under `convention`
/// with the convention's default bound. Per-family failures are collected in
/// the entries; only an empty corpus is an error.
pub fn corpus_audit(families: &[SignalFamily], convention: Convention) -> Result<CorpusAudit> {
    if families.is_empty() {
        return Err(Error::EmptyInput("corpus audit needs at least one family".into()));
    }
    let bound_constant = default_bound(convention);
    let entries: Vec<CorpusEntry> = families
        .iter()
        .map(|&family| {
            let outcome = if !family.admits_width_analysis() {
                Err(Error::InvalidParameter(format!(
                    "family `{}` has no finite-energy envelope and is excluded from width analysis",
                    family.kind_name()
                )))
            } else {
                family
                    .default_grid()
                    .and_then(|grid| family.generate(grid, crate::signal::DomainLabel::Generic))
                    .and_then(|signal| uncertainty_product(&signal, convention, bound_constant))
            };
            CorpusEntry { family, outcome }
        })
        .collect();

    let minimum = entries
        .iter()
        .filter_map(|e| match &e.outcome {
            Ok(r) if r.width_reliable => Some((e.family, r.product)),
            _ => None,
        })
        .min_by(|a, b| a.1.total_cmp(&b.1));

    Ok(CorpusAudit {
        convention,
        bound_constant,
        entries,
        minimum,
    })
}
