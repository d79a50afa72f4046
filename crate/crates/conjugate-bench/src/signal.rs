//! Uniformly sampled complex signals and the analytic families used as the
//! analysis corpus.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::csvio;
use crate::error::{Error, Result};

/// Uniform one-dimensional grid: `point(i) = start + i * step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    start: f64,
    step: f64,
    count: usize,
}

impl Grid {
    /// Builds a grid, rejecting non-finite anchors, non-positive steps, and
    /// fewer than two points.
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if !start.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "grid start must be finite, got {start}"
            )));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "grid step must be finite and > 0, got {step}"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 2 points, got {count}"
            )));
        }
        Ok(Grid { start, step, count })
    }

    /// Symmetric grid of `count` points covering `center ± span/2` with both
    /// endpoints included.
    pub fn centered(center: f64, span: f64, count: usize) -> Result<Self> {
        if !(span.is_finite() && span > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "grid span must be finite and > 0, got {span}"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 2 points, got {count}"
            )));
        }
        let step = span / (count - 1) as f64;
        Grid::new(center - span / 2.0, step, count)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn point(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.point(i))
    }

    /// Distance between the first and last grid points.
    pub fn span(&self) -> f64 {
        self.step * (self.count - 1) as f64
    }

    pub fn midpoint(&self) -> f64 {
        self.start + 0.5 * self.span()
    }
}

/// What the grid coordinate means physically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainLabel {
    Time,
    Position,
    Generic,
}

impl DomainLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            DomainLabel::Time => "time",
            DomainLabel::Position => "position",
            DomainLabel::Generic => "generic",
        }
    }
}

impl fmt::Display for DomainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DomainLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "time" => Ok(DomainLabel::Time),
            "position" => Ok(DomainLabel::Position),
            "generic" => Ok(DomainLabel::Generic),
            other => Err(Error::InvalidParameter(format!(
                "unknown domain label `{other}` (expected time, position, or generic)"
            ))),
        }
    }
}

/// A complex signal sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: Grid,
    values: Vec<Complex64>,
    domain: DomainLabel,
}

impl SampledSignal {
    pub fn new(grid: Grid, values: Vec<Complex64>, domain: DomainLabel) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::InvalidParameter(format!(
                "value count {} does not match grid count {}",
                values.len(),
                grid.count()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidParameter(
                "signal values must all be finite".into(),
            ));
        }
        Ok(SampledSignal {
            grid,
            values,
            domain,
        })
    }

    /// Samples `f` pointwise over the grid.
    pub fn from_fn(
        grid: Grid,
        domain: DomainLabel,
        f: impl Fn(f64) -> Complex64,
    ) -> Result<Self> {
        let values = grid.points().map(f).collect();
        SampledSignal::new(grid, values, domain)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn domain(&self) -> DomainLabel {
        self.domain
    }

    /// Returns a copy with every value scaled by `c`.
    pub fn scaled(&self, c: Complex64) -> SampledSignal {
        SampledSignal {
            grid: self.grid,
            values: self.values.iter().map(|v| v * c).collect(),
            domain: self.domain,
        }
    }

    /// Serializes to the `index,coordinate,re,im` CSV layout.
    pub fn to_csv(&self) -> String {
        csvio::write_rows(self.grid.points(), &self.values)
    }

    /// Parses the `index,coordinate,re,im` layout produced by [`to_csv`].
    ///
    /// The layout carries no domain metadata, so the result is labeled
    /// [`DomainLabel::Generic`].
    ///
    /// [`to_csv`]: SampledSignal::to_csv
    pub fn from_csv(text: &str) -> Result<Self> {
        let (coords, values) = csvio::read_rows(text)?;
        if coords.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "csv signal needs at least 2 rows, got {}",
                coords.len()
            )));
        }
        let start = coords[0];
        let step = (coords[coords.len() - 1] - start) / (coords.len() - 1) as f64;
        let grid = Grid::new(start, step, coords.len())?;
        for (i, &u) in coords.iter().enumerate() {
            let expected = grid.point(i);
            let scale = expected.abs().max(grid.step());
            if (u - expected).abs() > 1e-9 * scale {
                return Err(Error::InvalidParameter(format!(
                    "csv coordinates are not uniform at row {i}: got {u}, expected {expected}"
                )));
            }
        }
        SampledSignal::new(grid, values, DomainLabel::Generic)
    }
}

/// Analytic signal families with real-valued parameters in domain units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignalFamily {
    /// `exp(-(u-center)^2 / (2 sigma^2))`
    Gaussian { sigma: f64, center: f64 },
    /// 1 on `|u-center| <= halfwidth` (boundary included), 0 outside.
    Rectangle { halfwidth: f64, center: f64 },
    /// `exp(-|u-center| / decay)`
    TwoSidedExponential { decay: f64, center: f64 },
    /// `cos(2 pi freq u)` on `|u| <= halfwidth`, 0 outside.
    TruncatedSinusoid { freq: f64, halfwidth: f64 },
    /// Cosine sweep from instantaneous frequency `f0` at `-halfwidth` to `f1`
    /// at `+halfwidth`, 0 outside.
    LinearChirp { f0: f64, f1: f64, halfwidth: f64 },
    /// `exp(i wavenumber u)` over the whole grid.
    PlaneWave { wavenumber: f64 },
}

impl SignalFamily {
    fn validate(&self) -> Result<()> {
        let check_pos = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} must be finite and > 0, got {v}"
                )))
            }
        };
        let check_finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} must be finite, got {v}"
                )))
            }
        };
        match *self {
            SignalFamily::Gaussian { sigma, center } => {
                check_pos("sigma", sigma)?;
                check_finite("center", center)
            }
            SignalFamily::Rectangle { halfwidth, center } => {
                check_pos("halfwidth", halfwidth)?;
                check_finite("center", center)
            }
            SignalFamily::TwoSidedExponential { decay, center } => {
                check_pos("decay", decay)?;
                check_finite("center", center)
            }
            SignalFamily::TruncatedSinusoid { freq, halfwidth } => {
                check_finite("freq", freq)?;
                check_pos("halfwidth", halfwidth)
            }
            SignalFamily::LinearChirp { f0, f1, halfwidth } => {
                check_finite("f0", f0)?;
                check_finite("f1", f1)?;
                check_pos("halfwidth", halfwidth)
            }
            SignalFamily::PlaneWave { wavenumber } => check_finite("wavenumber", wavenumber),
        }
    }

    /// Evaluates the family at one coordinate.
    pub fn eval(&self, u: f64) -> Complex64 {
        match *self {
            SignalFamily::Gaussian { sigma, center } => {
                let z = (u - center) / sigma;
                Complex64::new((-0.5 * z * z).exp(), 0.0)
            }
            SignalFamily::Rectangle { halfwidth, center } => {
                if (u - center).abs() <= halfwidth {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            SignalFamily::TwoSidedExponential { decay, center } => {
                Complex64::new((-(u - center).abs() / decay).exp(), 0.0)
            }
            SignalFamily::TruncatedSinusoid { freq, halfwidth } => {
                if u.abs() <= halfwidth {
                    Complex64::new((2.0 * std::f64::consts::PI * freq * u).cos(), 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            SignalFamily::LinearChirp { f0, f1, halfwidth } => {
                if u.abs() <= halfwidth {
                    let s = u + halfwidth;
                    let phase = 2.0
                        * std::f64::consts::PI
                        * (f0 * s + (f1 - f0) * s * s / (4.0 * halfwidth));
                    Complex64::new(phase.cos(), 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            SignalFamily::PlaneWave { wavenumber } => {
                Complex64::new(0.0, wavenumber * u).exp()
            }
        }
    }

    /// Samples the family over `grid`. Deterministic: equal inputs give
    /// bit-identical outputs.
    pub fn generate(&self, grid: Grid, domain: DomainLabel) -> Result<SampledSignal> {
        self.validate()?;
        SampledSignal::from_fn(grid, domain, |u| self.eval(u))
    }

    /// Length scale the default analysis grid is sized from.
    pub fn characteristic_scale(&self) -> f64 {
        match *self {
            SignalFamily::Gaussian { sigma, .. } => sigma,
            SignalFamily::Rectangle { halfwidth, .. } => halfwidth,
            SignalFamily::TwoSidedExponential { decay, .. } => decay,
            SignalFamily::TruncatedSinusoid { halfwidth, .. } => halfwidth,
            SignalFamily::LinearChirp { halfwidth, .. } => halfwidth,
            SignalFamily::PlaneWave { wavenumber } => {
                if wavenumber == 0.0 {
                    1.0
                } else {
                    2.0 * std::f64::consts::PI / wavenumber.abs()
                }
            }
        }
    }

    fn center(&self) -> f64 {
        match *self {
            SignalFamily::Gaussian { center, .. } => center,
            SignalFamily::Rectangle { center, .. } => center,
            SignalFamily::TwoSidedExponential { center, .. } => center,
            SignalFamily::TruncatedSinusoid { .. } => 0.0,
            SignalFamily::LinearChirp { .. } => 0.0,
            SignalFamily::PlaneWave { .. } => 0.0,
        }
    }

    /// Default analysis grid: 40 characteristic scales wide, 4096 points,
    /// centered on the family.
    pub fn default_grid(&self) -> Result<Grid> {
        self.validate()?;
        Grid::centered(self.center(), 40.0 * self.characteristic_scale(), 4096)
    }

    /// Whether width analysis accepts this family. Plane waves carry no
    /// finite-energy envelope, so their widths are meaningless by
    /// construction and the analysis layer refuses them up front.
    pub fn admits_width_analysis(&self) -> bool {
        !matches!(self, SignalFamily::PlaneWave { .. })
    }

    /// Short kind name, matching the names accepted by [`FromStr`].
    pub fn kind_name(&self) -> &'static str {
        match self {
            SignalFamily::Gaussian { .. } => "gaussian",
            SignalFamily::Rectangle { .. } => "rectangle",
            SignalFamily::TwoSidedExponential { .. } => "two_sided_exponential",
            SignalFamily::TruncatedSinusoid { .. } => "truncated_sinusoid",
            SignalFamily::LinearChirp { .. } => "linear_chirp",
            SignalFamily::PlaneWave { .. } => "plane_wave",
        }
    }

    /// The stock corpus the uncertainty audit sweeps: every family with a
    /// finite-energy envelope, at unit scales.
    pub fn audit_corpus() -> Vec<SignalFamily> {
        vec![
            SignalFamily::Gaussian {
                sigma: 1.0,
                center: 0.0,
            },
            SignalFamily::Rectangle {
                halfwidth: 1.0,
                center: 0.0,
            },
            SignalFamily::TwoSidedExponential {
                decay: 1.0,
                center: 0.0,
            },
            SignalFamily::TruncatedSinusoid {
                freq: 1.0,
                halfwidth: 4.0,
            },
            SignalFamily::LinearChirp {
                f0: 0.5,
                f1: 2.0,
                halfwidth: 4.0,
            },
        ]
    }
}

impl fmt::Display for SignalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SignalFamily::Gaussian { sigma, center } => {
                write!(f, "gaussian:sigma={sigma},center={center}")
            }
            SignalFamily::Rectangle { halfwidth, center } => {
                write!(f, "rectangle:halfwidth={halfwidth},center={center}")
            }
            SignalFamily::TwoSidedExponential { decay, center } => {
                write!(f, "two_sided_exponential:decay={decay},center={center}")
            }
            SignalFamily::TruncatedSinusoid { freq, halfwidth } => {
                write!(f, "truncated_sinusoid:freq={freq},halfwidth={halfwidth}")
            }
            SignalFamily::LinearChirp { f0, f1, halfwidth } => {
                write!(f, "linear_chirp:f0={f0},f1={f1},halfwidth={halfwidth}")
            }
            SignalFamily::PlaneWave { wavenumber } => {
                write!(f, "plane_wave:wavenumber={wavenumber}")
            }
        }
    }
}

impl FromStr for SignalFamily {
    type Err = Error;

    /// Parses `kind:key=value,key=value`, e.g. `gaussian:sigma=1`. Omitted
    /// keys take the stock-corpus defaults.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k.trim(), p),
            None => (s.trim(), ""),
        };
        let mut pairs = Vec::new();
        for part in params.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("family parameter `{part}` is not key=value"))
            })?;
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!(
                    "family parameter `{}` is not a number: `{}`",
                    key.trim(),
                    value.trim()
                ))
            })?;
            pairs.push((key.trim().to_string(), value));
        }

        let mut take = |key: &str, default: f64| -> f64 {
            match pairs.iter().position(|(k, _)| k == key) {
                Some(i) => pairs.remove(i).1,
                None => default,
            }
        };

        let family = match kind {
            "gaussian" => SignalFamily::Gaussian {
                sigma: take("sigma", 1.0),
                center: take("center", 0.0),
            },
            "rectangle" => SignalFamily::Rectangle {
                halfwidth: take("halfwidth", 1.0),
                center: take("center", 0.0),
            },
            "two_sided_exponential" => SignalFamily::TwoSidedExponential {
                decay: take("decay", 1.0),
                center: take("center", 0.0),
            },
            "truncated_sinusoid" => SignalFamily::TruncatedSinusoid {
                freq: take("freq", 1.0),
                halfwidth: take("halfwidth", 4.0),
            },
            "linear_chirp" => SignalFamily::LinearChirp {
                f0: take("f0", 0.5),
                f1: take("f1", 2.0),
                halfwidth: take("halfwidth", 4.0),
            },
            "plane_wave" => SignalFamily::PlaneWave {
                wavenumber: take("wavenumber", 1.0),
            },
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown signal family `{other}`"
                )))
            }
        };
        if let Some((key, _)) = pairs.first() {
            return Err(Error::InvalidParameter(format!(
                "unknown parameter `{key}` for family `{kind}`"
            )));
        }
        family.validate()?;
        Ok(family)
    }
}

/// Trapezoidal-rule approximation of the signal energy `∫|f(u)|² du`.
pub fn energy(signal: &SampledSignal) -> f64 {
    let v = signal.values();
    let mut sum = 0.5 * (v[0].norm_sqr() + v[v.len() - 1].norm_sqr());
    for x in &v[1..v.len() - 1] {
        sum += x.norm_sqr();
    }
    sum * signal.grid().step()
}
