//! The four unimodular waveform families.
//!
//! All discrete constructions share one mechanism: a running sum of i.i.d.
//! draws scaled by the phase factor 2*pi/epsilon. Waveforms store phases,
//! never complex samples, so every sample has modulus exactly one; complex
//! values are materialized on demand as (cos, sin) pairs. Phases are kept
//! unreduced (not wrapped mod 2*pi) so that rescaling epsilon acts exactly.
//!
//! Index conventions: the discrete waveform is defined on all of Z through
//! the symmetric extension X[-n] = X[n]; the continuous waveform uses the
//! even extension x(-t) = x(t). The periodic waveform indexes mod its
//! period.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::distributions::{DistKind, Distribution};
use crate::error::{Error, Result};
use crate::rng::{stream_rng, StreamRng};

/// Parameters shared by every construction: the phase scale epsilon, the
/// increment distribution, and the master seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveformParams {
    pub epsilon: f64,
    pub dist: Distribution,
    pub seed: u64,
}

impl WaveformParams {
    pub fn new(epsilon: f64, dist: Distribution, seed: u64) -> Result<Self> {
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "epsilon must be positive and finite, got {epsilon}"
            )));
        }
        Ok(Self { epsilon, dist, seed })
    }

    /// The factor 2*pi/epsilon multiplying every accumulated sum.
    pub fn phase_factor(&self) -> f64 {
        TAU / self.epsilon
    }

    fn rng(&self, stream: u64) -> StreamRng {
        stream_rng(self.seed, stream)
    }
}

/// Cumulative sums S_m = sum of Y_l over -m <= l <= m, scaled by 2*pi/epsilon.
///
/// Draw order is Y_0, then (Y_{-m}, Y_m) pairs for m = 1, 2, ...; `log`, when
/// present, records the raw draws in exactly that order.
fn cumulative_phases(
    params: &WaveformParams,
    count: usize,
    rng: &mut StreamRng,
    mut log: Option<&mut Vec<f64>>,
) -> Vec<f64> {
    let factor = params.phase_factor();
    let mut phases = Vec::with_capacity(count);
    let mut sum = 0.0;
    for m in 0..count {
        let draws = if m == 0 { 1 } else { 2 };
        for _ in 0..draws {
            let y = params.dist.sample(rng);
            if let Some(log) = log.as_deref_mut() {
                log.push(y);
            }
            sum += y;
        }
        phases.push(factor * sum);
    }
    phases
}

/// Unimodular waveform on Z with the symmetric extension X[-n] = X[n].
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteWaveform {
    phases: Vec<f64>,
    params: WaveformParams,
}

impl DiscreteWaveform {
    /// Generates phases for indices 0..=n_max from the given stream of the
    /// master seed. The recurrence is theta_0 = (2*pi/epsilon) Y_0 and
    /// theta_n = theta_{n-1} + (2*pi/epsilon)(Y_{-n} + Y_n).
    pub fn generate(params: &WaveformParams, n_max: usize, stream: u64) -> Self {
        let mut rng = params.rng(stream);
        let phases = cumulative_phases(params, n_max + 1, &mut rng, None);
        Self { phases, params: *params }
    }

    /// Like [`generate`](Self::generate), additionally returning the raw
    /// draws in consumption order (for re-summation oracles).
    pub fn generate_logged(params: &WaveformParams, n_max: usize, stream: u64) -> (Self, Vec<f64>) {
        let mut rng = params.rng(stream);
        let mut log = Vec::with_capacity(2 * n_max + 1);
        let phases = cumulative_phases(params, n_max + 1, &mut rng, Some(&mut log));
        (Self { phases, params: *params }, log)
    }

    pub(crate) fn from_phases(phases: Vec<f64>, params: WaveformParams) -> Self {
        Self { phases, params }
    }

    pub fn n_max(&self) -> usize {
        self.phases.len() - 1
    }

    pub fn params(&self) -> &WaveformParams {
        &self.params
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// True when index `n` (or its mirror) is stored.
    pub fn covers(&self, n: i64) -> bool {
        (n.unsigned_abs() as usize) < self.phases.len()
    }

    /// Phase at any integer index via the symmetric extension.
    pub fn phase(&self, n: i64) -> f64 {
        self.phases[n.unsigned_abs() as usize]
    }

    /// Complex sample X[n] = exp(i theta_n).
    pub fn complex(&self, n: i64) -> Complex64 {
        let theta = self.phase(n);
        Complex64::new(theta.cos(), theta.sin())
    }
}

/// Unimodular waveform on Z_n; index arithmetic is mod the period.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicWaveform {
    phases: Vec<f64>,
    params: WaveformParams,
}

impl PeriodicWaveform {
    /// Same recurrence as the discrete construction, restricted to indices
    /// 0..period-1.
    pub fn generate(params: &WaveformParams, period: usize, stream: u64) -> Result<Self> {
        if period < 1 {
            return Err(Error::InvalidArgument(
                "period must be at least 1".to_string(),
            ));
        }
        let mut rng = params.rng(stream);
        let phases = cumulative_phases(params, period, &mut rng, None);
        Ok(Self { phases, params: *params })
    }

    pub(crate) fn from_phases(phases: Vec<f64>, params: WaveformParams) -> Self {
        Self { phases, params }
    }

    pub fn period(&self) -> usize {
        self.phases.len()
    }

    pub fn params(&self) -> &WaveformParams {
        &self.params
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// Phase at index `m` reduced mod the period.
    pub fn phase(&self, m: i64) -> f64 {
        let n = self.phases.len() as i64;
        self.phases[m.rem_euclid(n) as usize]
    }

    pub fn complex(&self, m: i64) -> Complex64 {
        let theta = self.phase(m);
        Complex64::new(theta.cos(), theta.sin())
    }
}

/// Unit-norm vector waveform: v[m] is the length-d sliding window of a
/// discrete waveform, scaled by 1/sqrt(d).
#[derive(Debug, Clone, PartialEq)]
pub struct VectorWaveform {
    base: DiscreteWaveform,
    dim: usize,
}

impl VectorWaveform {
    /// Windows v[0] .. v[m_max] are available; the underlying waveform
    /// extends to index m_max + dim - 1 (and to -m_max by symmetry).
    pub fn generate(params: &WaveformParams, dim: usize, m_max: usize, stream: u64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidArgument(format!(
                "vector dimension must be at least 2, got {dim}"
            )));
        }
        let base = DiscreteWaveform::generate(params, m_max + dim - 1, stream);
        Ok(Self { base, dim })
    }

    pub fn from_base(base: DiscreteWaveform, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidArgument(format!(
                "vector dimension must be at least 2, got {dim}"
            )));
        }
        if base.n_max() + 1 < dim {
            return Err(Error::InsufficientLength(format!(
                "base waveform with n_max {} cannot host dimension-{dim} windows",
                base.n_max()
            )));
        }
        Ok(Self { base, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> &DiscreteWaveform {
        &self.base
    }

    pub fn params(&self) -> &WaveformParams {
        self.base.params()
    }

    /// Largest m with the window v[m] fully stored on the positive side.
    pub fn m_max(&self) -> usize {
        self.base.n_max() + 1 - self.dim
    }

    /// True when every index of the window at `m` is covered.
    pub fn covers(&self, m: i64) -> bool {
        (0..self.dim as i64).all(|j| self.base.covers(m + j))
    }

    /// The window v[m] = (X[m], ..., X[m+d-1]) / sqrt(d).
    pub fn vector(&self, m: i64) -> Vec<Complex64> {
        let scale = 1.0 / (self.dim as f64).sqrt();
        (0..self.dim as i64)
            .map(|j| self.base.complex(m + j) * scale)
            .collect()
    }

    /// Inner product of windows, <v[a], v[b]> = (1/d) sum_j X[a+j] conj(X[b+j]).
    pub fn window_inner(&self, a: i64, b: i64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..self.dim as i64 {
            let dtheta = self.base.phase(a + j) - self.base.phase(b + j);
            acc += Complex64::new(dtheta.cos(), dtheta.sin());
        }
        acc / self.dim as f64
    }
}

/// Unimodular waveform sampled from a Brownian phase path on a uniform grid,
/// with the even extension x(-t) = x(t).
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuousWaveform {
    phases: Vec<f64>,
    dt: f64,
    params: WaveformParams,
}

impl ContinuousWaveform {
    /// Samples x(t) = exp(i (2*pi/epsilon) W(t)) on the grid j*dt for
    /// j = 0..=round(horizon/dt), where W is a Brownian path with increment
    /// variance sigma^2 dt and W(0) = 0. Requires a Gaussian distribution.
    pub fn generate(params: &WaveformParams, horizon: f64, dt: f64, stream: u64) -> Result<Self> {
        if params.dist.kind() != DistKind::Gaussian {
            return Err(Error::UnsupportedConstruction(format!(
                "the Brownian-phase waveform is defined for the gaussian distribution, got {}",
                params.dist.kind().name()
            )));
        }
        if !horizon.is_finite() || horizon <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "horizon must be positive and finite, got {horizon}"
            )));
        }
        if !dt.is_finite() || dt <= 0.0 || dt > horizon {
            return Err(Error::InvalidArgument(format!(
                "dt must satisfy 0 < dt <= horizon, got dt {dt} with horizon {horizon}"
            )));
        }
        let steps = (horizon / dt).round() as usize;
        let steps = steps.max(1);
        let factor = params.phase_factor();
        let sigma_step = params.dist.sigma() * dt.sqrt();
        let mut rng = params.rng(stream);
        let mut phases = Vec::with_capacity(steps + 1);
        let mut w = 0.0;
        phases.push(0.0); // W(0) = 0 so x(0) = 1 exactly
        for _ in 0..steps {
            let z: f64 = rand::Rng::sample(&mut rng, rand_distr::StandardNormal);
            w += sigma_step * z;
            phases.push(factor * w);
        }
        Ok(Self { phases, dt, params: *params })
    }

    pub(crate) fn from_phases(phases: Vec<f64>, dt: f64, params: WaveformParams) -> Self {
        Self { phases, dt, params }
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn params(&self) -> &WaveformParams {
        &self.params
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// Number of increments (grid points minus one).
    pub fn steps(&self) -> usize {
        self.phases.len() - 1
    }

    /// Largest covered time, steps * dt.
    pub fn horizon(&self) -> f64 {
        self.steps() as f64 * self.dt
    }

    /// Phase at grid index `j` via the even extension.
    pub fn phase_at(&self, j: i64) -> f64 {
        self.phases[j.unsigned_abs() as usize]
    }

    pub fn complex_at(&self, j: i64) -> Complex64 {
        let theta = self.phase_at(j);
        Complex64::new(theta.cos(), theta.sin())
    }

    /// Coarser view of the same path: keeps every `stride`-th grid point, so
    /// shared grid points carry bitwise-identical phases.
    pub fn subsample(&self, stride: usize) -> Result<Self> {
        if stride < 1 {
            return Err(Error::InvalidArgument("stride must be at least 1".to_string()));
        }
        if self.steps() < stride {
            return Err(Error::InsufficientLength(format!(
                "cannot subsample a {}-step path by {stride}",
                self.steps()
            )));
        }
        let phases: Vec<f64> = self.phases.iter().copied().step_by(stride).collect();
        Ok(Self { phases, dt: self.dt * stride as f64, params: self.params })
    }
}
