//! Sampling-theorem machinery: Nyquist limits, decimation, truncation,
//! alias folding, and Whittaker-Shannon reconstruction.
//!
//! The same reciprocal structure as the width bounds shows up here as exact
//! arithmetic: sampling at interval `δx` caps the resolvable conjugate
//! variable at `x̃_N = 1/(2δx)`, and truncating the record at `x_N` caps the
//! conjugate resolution at `δx̃ = 1/(2x_N)`. Both limits are computed as
//! `0.5 / interval`, which keeps the defining quotient exact to the last
//! bit (multiplying back by the interval recovers 1/2 to within one
//! rounding of the product).

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::signal::{Grid, SampledSignal};

/// Reciprocal limits induced by sampling at a fixed interval and optionally
/// truncating the record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingScenario {
    /// Spacing between consecutive samples, in domain units.
    pub sample_interval: f64,
    /// Half-length of the retained record, if the record is truncated.
    pub truncation_limit: Option<f64>,
    /// Largest resolvable conjugate value, `1/(2·sample_interval)`,
    /// in cycles per domain unit.
    pub nyquist_conjugate_limit: f64,
    /// Conjugate-domain resolution `1/(2·truncation_limit)`, present exactly
    /// when a truncation limit is.
    pub conjugate_sample_interval: Option<f64>,
}

/// How a single frequency reads through a given sampling rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AliasReport {
    pub true_frequency: f64,
    pub sampling_rate: f64,
    /// Fold of the true frequency into `[0, sampling_rate/2]`.
    pub apparent_frequency: f64,
    /// True exactly when `true_frequency > sampling_rate/2`.
    pub aliased: bool,
}

fn positive(name: &str, x: f64) -> Result<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be finite and > 0, got {x}"
        )))
    }
}

/// Minimum sampling rate that resolves content up to `max_frequency`:
/// twice the highest frequency present.
pub fn nyquist_rate(max_frequency: f64) -> Result<f64> {
    if !(max_frequency.is_finite() && max_frequency >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "max frequency must be finite and >= 0, got {max_frequency}"
        )));
    }
    Ok(2.0 * max_frequency)
}

/// Largest resolvable angular wavenumber for spatial sampling at
/// `sample_interval`: `π / sample_interval`. This is the angular reading of
/// the same limit [`scenario_from_sampling`] reports in cycles per unit.
pub fn nyquist_wavenumber(sample_interval: f64) -> Result<f64> {
    Ok(PI / positive("sample interval", sample_interval)?)
}

/// Derives the conjugate-domain limits for a sampling interval and an
/// optional truncation half-length.
pub fn scenario_from_sampling(
    sample_interval: f64,
    truncation_limit: Option<f64>,
) -> Result<SamplingScenario> {
    let sample_interval = positive("sample interval", sample_interval)?;
    let truncation_limit = truncation_limit
        .map(|l| positive("truncation limit", l))
        .transpose()?;
    Ok(SamplingScenario {
        sample_interval,
        truncation_limit,
        nyquist_conjugate_limit: 0.5 / sample_interval,
        conjugate_sample_interval: truncation_limit.map(|l| 0.5 / l),
    })
}

/// Keeps every `decimation_factor`-th sample starting at index 0. The grid
/// step grows by the same factor.
pub fn sample(signal: &SampledSignal, decimation_factor: usize) -> Result<SampledSignal> {
    if decimation_factor < 1 {
        return Err(Error::InvalidParameter(
            "decimation factor must be >= 1".into(),
        ));
    }
    let grid = signal.grid();
    let kept = (grid.count() - 1) / decimation_factor + 1;
    if kept < 2 {
        return Err(Error::InvalidParameter(format!(
            "decimation by {decimation_factor} leaves {kept} of {} samples",
            grid.count()
        )));
    }
    let new_grid = Grid::new(grid.start(), grid.step() * decimation_factor as f64, kept)?;
    let values = signal
        .values()
        .iter()
        .step_by(decimation_factor)
        .copied()
        .collect();
    SampledSignal::new(new_grid, values, signal.domain())
}

/// Zeroes every sample farther than `limit` from the grid midpoint. The
/// grid itself is unchanged.
pub fn truncate(signal: &SampledSignal, limit: f64) -> Result<SampledSignal> {
    truncate_about(signal, signal.grid().midpoint(), limit)
}

/// Zeroes every sample with `|coordinate - center| > limit` (boundary
/// samples survive).
pub fn truncate_about(signal: &SampledSignal, center: f64, limit: f64) -> Result<SampledSignal> {
    let limit = positive("truncation limit", limit)?;
    if !center.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "truncation center must be finite, got {center}"
        )));
    }
    let grid = signal.grid();
    let values = signal
        .values()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if (grid.point(i) - center).abs() > limit {
                Complex64::new(0.0, 0.0)
            } else {
                v
            }
        })
        .collect();
    SampledSignal::new(*grid, values, signal.domain())
}

/// Folds a frequency through a sampling rate into the resolvable band
/// `[0, rate/2]`. A frequency exactly at `rate/2` is resolvable, not
/// aliased.
pub fn alias_fold(true_frequency: f64, sampling_rate: f64) -> Result<AliasReport> {
    let sampling_rate = positive("sampling rate", sampling_rate)?;
    if !(true_frequency.is_finite() && true_frequency >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "frequency must be finite and >= 0, got {true_frequency}"
        )));
    }
    let mut apparent =
        (true_frequency - (true_frequency / sampling_rate).round() * sampling_rate).abs();
    // guard against the fold landing one rounding past the band edge
    if apparent > 0.5 * sampling_rate {
        apparent = sampling_rate - apparent;
    }
    Ok(AliasReport {
        true_frequency,
        sampling_rate,
        apparent_frequency: apparent,
        aliased: true_frequency > 0.5 * sampling_rate,
    })
}

/// `sin(πx)/(πx)` with a series branch near zero.
fn normalized_sinc(x: f64) -> f64 {
    let y = PI * x;
    if x.abs() < 1e-4 {
        1.0 - y * y / 6.0 * (1.0 - y * y / 20.0)
    } else {
        y.sin() / y
    }
}

/// Whittaker-Shannon interpolation of `sampled` onto `target_grid`:
/// `Σ_n s[n] · sinc((t - t_n)/step)` evaluated in grid order.
///
/// Accuracy is only contracted for inputs whose content lies below the
/// sample grid's Nyquist limit, and away from the window edges where the
/// truncated interpolation sum loses its partners.
pub fn reconstruct(sampled: &SampledSignal, target_grid: Grid) -> Result<SampledSignal> {
    let grid = sampled.grid();
    let step = grid.step();
    let values: Vec<Complex64> = target_grid
        .points()
        .map(|t| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, &v) in sampled.values().iter().enumerate() {
                acc += v * normalized_sinc((t - grid.point(i)) / step);
            }
            acc
        })
        .collect();
    SampledSignal::new(target_grid, values, sampled.domain())
}
