//! Physical-unit readings of the dimensionless width and sampling results:
//! position-momentum and time-energy uncertainty pairs, Brillouin-zone
//! reduction with the lattice-aliasing equivalence, and the observability
//! of hydrogenic transitions against the lifetime-limited energy
//! resolution.
//!
//! The central auditable number: a Gaussian wavepacket's width product in
//! physical units is `ħ/2`, not `h/2`. Both constants are carried side by
//! side in every [`ConjugatePair`] so the comparison stays visible instead
//! of being baked into a single hard-coded bound.

use std::f64::consts::PI;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fourier::{self, Convention};
use crate::sampling::SamplingScenario;
use crate::signal::SampledSignal;
use crate::widths;

/// One electron-volt in joules (exact by definition).
pub const EV: f64 = 1.602_176_634e-19;

/// Fundamental constants used by every physical-unit computation.
///
/// Defaults are the 2018 CODATA recommended values with `planck_h` exact by
/// definition. `hbar` is derived as `planck_h/(2π)` rather than stored as a
/// separately rounded literal, so the defining relation holds to full
/// precision; overrides must satisfy it to 1e-12 relative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Planck constant, J·s.
    pub planck_h: f64,
    /// Reduced Planck constant `planck_h/(2π)`, J·s.
    pub hbar: f64,
    /// Fine-structure constant, dimensionless.
    pub fine_structure_alpha: f64,
    /// Speed of light, m/s.
    pub light_speed_c: f64,
    /// Rydberg constant, 1/m.
    pub rydberg_r_h: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstants {
    planck_h: f64,
    #[serde(default)]
    hbar: Option<f64>,
    fine_structure_alpha: f64,
    light_speed_c: f64,
    #[serde(rename = "rydberg_R_H")]
    rydberg_r_h: f64,
}

impl PhysicalConstants {
    /// 2018 CODATA recommended values.
    pub fn codata2018() -> PhysicalConstants {
        let planck_h = 6.626_070_15e-34;
        PhysicalConstants {
            planck_h,
            hbar: planck_h / (2.0 * PI),
            fine_structure_alpha: 7.297_352_569_3e-3,
            light_speed_c: 299_792_458.0,
            rydberg_r_h: 10_973_731.568_160,
        }
    }

    /// Validates positivity and the `hbar = planck_h/(2π)` relation
    /// (1e-12 relative).
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("planck_h", self.planck_h),
            ("hbar", self.hbar),
            ("fine_structure_alpha", self.fine_structure_alpha),
            ("light_speed_c", self.light_speed_c),
            ("rydberg_R_H", self.rydberg_r_h),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "constant {name} must be finite and > 0, got {v}"
                )));
            }
        }
        let derived = self.planck_h / (2.0 * PI);
        if (self.hbar - derived).abs() > 1e-12 * derived {
            return Err(Error::InvalidConfig(format!(
                "hbar = {} violates planck_h/(2π) = {derived} beyond 1e-12 relative",
                self.hbar
            )));
        }
        Ok(())
    }

    /// Parses a JSON constants record. `hbar` may be omitted, in which case
    /// it is derived from `planck_h`; if present it must satisfy the
    /// defining relation. Unknown fields are rejected.
    pub fn from_json(text: &str) -> Result<PhysicalConstants> {
        let raw: RawConstants = serde_json::from_str(text)
            .map_err(|e| Error::InvalidConfig(format!("constants file: {e}")))?;
        let constants = PhysicalConstants {
            planck_h: raw.planck_h,
            hbar: raw.hbar.unwrap_or(raw.planck_h / (2.0 * PI)),
            fine_structure_alpha: raw.fine_structure_alpha,
            light_speed_c: raw.light_speed_c,
            rydberg_r_h: raw.rydberg_r_h,
        };
        constants.validate()?;
        Ok(constants)
    }
}

/// Which conjugate pair a physical-unit report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// Widths in meters and kg·m/s.
    PositionMomentum,
    /// Widths in seconds and joules.
    TimeEnergy,
}

impl PairKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairKind::PositionMomentum => "position_momentum",
            PairKind::TimeEnergy => "time_energy",
        }
    }
}

impl FromStr for PairKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "position_momentum" | "position-momentum" => Ok(PairKind::PositionMomentum),
            "time_energy" | "time-energy" => Ok(PairKind::TimeEnergy),
            other => Err(Error::InvalidParameter(format!(
                "unknown pair kind `{other}`"
            ))),
        }
    }
}

/// Which constant a physical width product is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundChoice {
    HOver2,
    HbarOver2,
}

impl BoundChoice {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundChoice::HOver2 => "h_over_2",
            BoundChoice::HbarOver2 => "hbar_over_2",
        }
    }

    pub fn value(&self, constants: &PhysicalConstants) -> f64 {
        match self {
            BoundChoice::HOver2 => 0.5 * constants.planck_h,
            BoundChoice::HbarOver2 => 0.5 * constants.hbar,
        }
    }
}

impl FromStr for BoundChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h_over_2" | "h-over-2" => Ok(BoundChoice::HOver2),
            "hbar_over_2" | "hbar-over-2" => Ok(BoundChoice::HbarOver2),
            other => Err(Error::InvalidParameter(format!(
                "unknown bound choice `{other}` (expected h-over-2 or hbar-over-2)"
            ))),
        }
    }
}

/// A width product read in physical units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePair {
    pub kind: PairKind,
    /// Direct-domain width: meters or seconds.
    pub width_a: f64,
    /// Conjugate width in physical units: kg·m/s or joules.
    pub width_b: f64,
    /// `width_a * width_b`, J·s either way.
    pub product: f64,
    pub bound_choice: BoundChoice,
    /// Value of the chosen bound constant.
    pub bound: f64,
    /// `product >= bound` up to 1e-6 relative slack.
    pub satisfied: bool,
    /// Both candidate bounds, kept side by side for audit.
    pub h_over_2: f64,
    pub hbar_over_2: f64,
    /// Both widths entering the product converged on the grid.
    pub width_reliable: bool,
}

/// De Broglie momentum of a plane wave with angular wavenumber `k`:
/// `ħ·k`, which equals `h/λ` for `k = 2π/λ`.
pub fn momentum_from_wavenumber(k: f64, constants: &PhysicalConstants) -> f64 {
    constants.hbar * k
}

/// Reads a signal's width product in physical units: the conjugate width is
/// the cyclic-convention spectral width scaled by `h` (equivalently the
/// angular-convention width scaled by `ħ`).
pub fn uncertainty_in_units(
    signal: &SampledSignal,
    kind: PairKind,
    constants: &PhysicalConstants,
    bound_choice: BoundChoice,
) -> Result<ConjugatePair> {
    constants.validate()?;
    let direct = widths::width_report(signal)?;
    let spectrum = fourier::transform(signal, Convention::Nu)?;
    let conjugate = widths::spectrum_width_report(&spectrum)?;
    let width_a = direct.effective_width;
    let width_b = constants.planck_h * conjugate.effective_width;
    let product = width_a * width_b;
    let bound = bound_choice.value(constants);
    Ok(ConjugatePair {
        kind,
        width_a,
        width_b,
        product,
        bound_choice,
        bound,
        satisfied: product >= bound * (1.0 - 1e-6),
        h_over_2: 0.5 * constants.planck_h,
        hbar_over_2: 0.5 * constants.hbar,
        width_reliable: direct.width_reliable && conjugate.width_reliable,
    })
}

/// First Brillouin zone of a one-dimensional lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrillouinZone {
    /// Lattice spacing, meters.
    pub lattice_spacing_a: f64,
    /// Zone boundary `π/a`, 1/m.
    pub boundary: f64,
}

impl BrillouinZone {
    pub fn new(lattice_spacing_a: f64) -> Result<BrillouinZone> {
        if !(lattice_spacing_a.is_finite() && lattice_spacing_a > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "lattice spacing must be finite and > 0, got {lattice_spacing_a}"
            )));
        }
        Ok(BrillouinZone {
            lattice_spacing_a,
            boundary: PI / lattice_spacing_a,
        })
    }

    /// Reciprocal lattice period `2π/a`.
    pub fn period(&self) -> f64 {
        2.0 * self.boundary
    }
}

/// Folds a wavenumber into the first zone `(-π/a, π/a]`, returning the
/// reduced wavenumber and the zone index `m` with `k = reduced + m·2π/a`.
/// The boundary tie maps to `+π/a`.
pub fn brillouin_reduce(k: f64, zone: &BrillouinZone) -> (f64, i64) {
    let period = zone.period();
    // the unique integer with k - m·period in (-boundary, boundary]
    let mut m = (k / period - 0.5).ceil();
    let mut reduced = k - m * period;
    // rounding can land the fold one step outside the half-open zone
    if reduced > zone.boundary {
        reduced -= period;
        m += 1.0;
    } else if reduced <= -zone.boundary {
        reduced += period;
        m -= 1.0;
    }
    (reduced, m as i64)
}

/// Whether two plane waves are indistinguishable when observed only at the
/// lattice sites `x = j·a`, `j = 0..n_sites`: compares the two sampled
/// sequences pointwise at 1e-12.
pub fn lattice_alias_check(
    k1: f64,
    k2: f64,
    zone: &BrillouinZone,
    n_sites: usize,
) -> Result<bool> {
    if n_sites < 2 {
        return Err(Error::InvalidParameter(format!(
            "lattice alias check needs at least 2 sites, got {n_sites}"
        )));
    }
    let a = zone.lattice_spacing_a;
    for j in 0..n_sites {
        let x = j as f64 * a;
        let w1 = num_complex::Complex64::from_polar(1.0, k1 * x);
        let w2 = num_complex::Complex64::from_polar(1.0, k2 * x);
        if (w1 - w2).norm() > 1e-12 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest momentum resolvable when position is sampled at the scenario's
/// interval: `h · 1/(2δx)`.
pub fn max_resolvable_momentum(scenario: &SamplingScenario, constants: &PhysicalConstants) -> f64 {
    constants.planck_h * scenario.nyquist_conjugate_limit
}

/// Momentum resolution induced by the scenario's truncation limit:
/// `h · 1/(2x_N)`, present exactly when the truncation limit is.
pub fn momentum_resolution(
    scenario: &SamplingScenario,
    constants: &PhysicalConstants,
) -> Option<f64> {
    scenario
        .conjugate_sample_interval
        .map(|d| constants.planck_h * d)
}

/// Decay-rate scale of hydrogenic levels: `(2⁶/3)·√(π/3)·Z²·α³·c·R`, 1/s.
pub fn hydrogenic_rate_constant(z: u32, constants: &PhysicalConstants) -> Result<f64> {
    if z < 1 {
        return Err(Error::InvalidParameter(
            "nuclear charge must be >= 1".into(),
        ));
    }
    let unit = (64.0 / 3.0)
        * (PI / 3.0).sqrt()
        * constants.fine_structure_alpha.powi(3)
        * constants.light_speed_c
        * constants.rydberg_r_h;
    let zf = z as f64;
    Ok(unit * (zf * zf))
}

/// Energy released by the `n -> m` hydrogenic transition:
/// `Z²·h·c·R·(1/m² - 1/n²)`, joules.
pub fn transition_energy(n: u32, m: u32, z: u32, constants: &PhysicalConstants) -> Result<f64> {
    if z < 1 {
        return Err(Error::InvalidParameter(
            "nuclear charge must be >= 1".into(),
        ));
    }
    if m < 1 || m >= n {
        return Err(Error::InvalidParameter(format!(
            "transition needs 1 <= m < n, got n = {n}, m = {m}"
        )));
    }
    let rydberg_energy = constants.planck_h * constants.light_speed_c * constants.rydberg_r_h;
    let mf = m as f64;
    let nf = n as f64;
    let gap = 1.0 / (mf * mf) - 1.0 / (nf * nf);
    let zf = z as f64;
    Ok((zf * zf) * rydberg_energy * gap)
}

/// Whether a hydrogenic transition clears the lifetime-limited energy
/// resolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydrogenicTransition {
    /// Upper state.
    pub n: u32,
    /// Lower state.
    pub m: u32,
    /// Nuclear charge.
    pub z: u32,
    /// Level lifetime `n⁵/(k·ln n)`, seconds.
    pub lifetime_tau_n: f64,
    /// Rate scale `k`, 1/s.
    pub rate_constant_k: f64,
    /// Transition energy, joules.
    pub transition_energy_e_mn: f64,
    /// Smallest energy separation resolvable within the lifetime:
    /// `(h/2)/lifetime`, joules.
    pub min_resolvable_energy: f64,
    /// `transition_energy_e_mn >= min_resolvable_energy`.
    pub observable: bool,
    /// `transition_energy_e_mn / min_resolvable_energy`.
    pub margin: f64,
}

/// Audits whether the `n -> m` transition of a hydrogenic atom is
/// observable: the transition energy must exceed the energy resolution set
/// by the upper level's lifetime. Needs `n >= 2` (the lifetime scale has a
/// `ln n` factor that vanishes at the ground state).
pub fn observability(
    n: u32,
    m: u32,
    z: u32,
    constants: &PhysicalConstants,
) -> Result<HydrogenicTransition> {
    constants.validate()?;
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "upper state must satisfy n >= 2, got {n}"
        )));
    }
    let transition_energy_e_mn = transition_energy(n, m, z, constants)?;
    let rate_constant_k = hydrogenic_rate_constant(z, constants)?;
    let nf = n as f64;
    let lifetime_tau_n = nf.powi(5) / nf.ln() / rate_constant_k;
    let min_resolvable_energy = 0.5 * constants.planck_h / lifetime_tau_n;
    Ok(HydrogenicTransition {
        n,
        m,
        z,
        lifetime_tau_n,
        rate_constant_k,
        transition_energy_e_mn,
        min_resolvable_energy,
        observable: transition_energy_e_mn >= min_resolvable_energy,
        margin: transition_energy_e_mn / min_resolvable_energy,
    })
}
