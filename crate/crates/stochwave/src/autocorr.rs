//! Truncated autocorrelation estimators, their closed-form expectations, and
//! the Monte Carlo machinery that compares the two.
//!
//! Estimators are exact finite sums over materialized samples; nothing is
//! windowed or tapered. Under the symmetric extension X[-n] = X[n], at most
//! 2|k| of the 2N+1 terms straddle the origin, so comparisons against the
//! closed forms carry an explicit 2|k|/(2N+1) bias allowance next to the
//! usual Monte Carlo standard-error band.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::distributions::{DistKind, Distribution};
use crate::error::{Error, Result};
use crate::parallel::run_trials;
use crate::waveform::{
    ContinuousWaveform, DiscreteWaveform, PeriodicWaveform, VectorWaveform, WaveformParams,
};

/// Which estimator produced an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AcorrKind {
    Aperiodic,
    Periodic,
    Vector,
    Continuous,
}

/// A single autocorrelation estimate at one lag.
///
/// `lag` is the integer k for the discrete kinds (stored exactly in the f64)
/// and the real shift s for the continuous kind; `truncation` is N for the
/// discrete kinds and T for the continuous kind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AutocorrEstimate {
    pub kind: AcorrKind,
    pub lag: f64,
    pub value: Complex64,
    pub truncation: f64,
}

/// Closed-form expectation and variance bounds at a nonzero lag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub expected: f64,
    pub variance_lower: f64,
    pub variance_upper: f64,
}

/// Aperiodic estimate (1/(2N+1)) sum_{m=-N}^{N} X[m+k] conj(X[m]).
pub fn acorr_aperiodic(w: &DiscreteWaveform, lag: i64, truncation: usize) -> Result<AutocorrEstimate> {
    if truncation < 1 {
        return Err(Error::InvalidArgument("truncation N must be at least 1".to_string()));
    }
    let need = truncation as i64 + lag.abs();
    if !w.covers(need) {
        return Err(Error::InsufficientLength(format!(
            "lag {lag} at truncation {truncation} needs indices up to {need}, waveform stores {}",
            w.n_max()
        )));
    }
    let n = truncation as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for m in -n..=n {
        let dtheta = w.phase(m + lag) - w.phase(m);
        acc += Complex64::new(dtheta.cos(), dtheta.sin());
    }
    Ok(AutocorrEstimate {
        kind: AcorrKind::Aperiodic,
        lag: lag as f64,
        value: acc / (2 * truncation + 1) as f64,
        truncation: truncation as f64,
    })
}

/// Periodic estimate (1/n) sum_{m=0}^{n-1} X[m+k] conj(X[m]) with mod-n
/// indexing; the lag is reduced mod n first.
pub fn acorr_periodic(w: &PeriodicWaveform, lag: i64) -> AutocorrEstimate {
    let period = w.period() as i64;
    let reduced = lag.rem_euclid(period);
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 0..period {
        let dtheta = w.phase(m + reduced) - w.phase(m);
        acc += Complex64::new(dtheta.cos(), dtheta.sin());
    }
    AutocorrEstimate {
        kind: AcorrKind::Periodic,
        lag: reduced as f64,
        value: acc / period as f64,
        truncation: period as f64,
    }
}

/// Vector estimate (1/(2N+1)) sum_{n=-N}^{N} <v[n+k], v[n]>.
pub fn acorr_vector(w: &VectorWaveform, lag: i64, truncation: usize) -> Result<AutocorrEstimate> {
    if truncation < 1 {
        return Err(Error::InvalidArgument("truncation N must be at least 1".to_string()));
    }
    let need = truncation as i64 + lag.abs() + w.dim() as i64 - 1;
    if !w.base().covers(need) {
        return Err(Error::InsufficientLength(format!(
            "vector lag {lag} at truncation {truncation} needs base indices up to {need}, waveform stores {}",
            w.base().n_max()
        )));
    }
    let n = truncation as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for m in -n..=n {
        acc += w.window_inner(m + lag, m);
    }
    Ok(AutocorrEstimate {
        kind: AcorrKind::Vector,
        lag: lag as f64,
        value: acc / (2 * truncation + 1) as f64,
        truncation: truncation as f64,
    })
}

/// Continuous estimate: trapezoidal discretization of
/// (1/2T) integral_{-T}^{T} x(t+s) conj(x(t)) dt on the sample grid.
///
/// The shift `s` must lie on the grid (a multiple of dt); the truncation `T`
/// is floored to the grid and must leave room for the shifted samples.
pub fn acorr_continuous(w: &ContinuousWaveform, shift: f64, truncation: f64) -> Result<AutocorrEstimate> {
    let dt = w.dt();
    let shift_steps = shift / dt;
    let rounded = shift_steps.round();
    if (shift_steps - rounded).abs() > 1e-9 * shift_steps.abs().max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "shift {shift} is not a multiple of the grid step {dt}"
        )));
    }
    let js = rounded as i64;
    if !(truncation > 0.0) {
        return Err(Error::InvalidArgument("truncation T must be positive".to_string()));
    }
    let j_end = (truncation / dt + 1e-9).floor() as i64;
    if j_end < 1 {
        return Err(Error::InvalidArgument(format!(
            "truncation {truncation} is below one grid step {dt}"
        )));
    }
    let steps = w.steps() as i64;
    if j_end + js.abs() > steps {
        return Err(Error::InsufficientLength(format!(
            "truncation {truncation} plus shift {shift} exceeds the sampled horizon {}",
            w.horizon()
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -j_end..=j_end {
        let dtheta = w.phase_at(j + js) - w.phase_at(j);
        let term = Complex64::new(dtheta.cos(), dtheta.sin());
        // trapezoid rule: half weight at the interval ends
        if j.abs() == j_end {
            acc += term * 0.5;
        } else {
            acc += term;
        }
    }
    Ok(AutocorrEstimate {
        kind: AcorrKind::Continuous,
        lag: js as f64 * dt,
        value: acc / (2 * j_end) as f64,
        truncation: j_end as f64 * dt,
    })
}

/// Expected autocorrelation at integer lag k: 1 at k = 0, otherwise
/// phi_Y(2*pi/epsilon)^(2|k|), written out per family.
pub fn expected_acorr(dist: &Distribution, epsilon: f64, lag: i64) -> f64 {
    if lag == 0 {
        return 1.0;
    }
    let t = std::f64::consts::TAU / epsilon;
    let k = lag.unsigned_abs() as f64;
    match dist.kind() {
        DistKind::Gaussian => (-k * dist.sigma().powi(2) * t * t).exp(),
        DistKind::Bilateral => (1.0 / (1.0 + t * t)).powf(2.0 * k),
        DistKind::Cauchy => (-2.0 * k * t).exp(),
    }
}

/// Expected autocorrelation of the Brownian-phase waveform at shift s:
/// exp(-(sigma^2/2) |s| (2*pi/epsilon)^2), and 1 at s = 0.
pub fn expected_acorr_continuous(sigma: f64, epsilon: f64, shift: f64) -> f64 {
    let t = std::f64::consts::TAU / epsilon;
    (-0.5 * sigma * sigma * shift.abs() * t * t).exp()
}

/// Variance bounds at a nonzero lag: the variance of A_X[k] lies in
/// [0, 1 - phi_Y(2*pi/epsilon)^(4|k|)].
pub fn variance_bounds(dist: &Distribution, epsilon: f64, lag: i64) -> Result<ClosedForm> {
    if lag == 0 {
        return Err(Error::InvalidArgument(
            "variance bounds are stated for nonzero lags only".to_string(),
        ));
    }
    let t = std::f64::consts::TAU / epsilon;
    let k = lag.unsigned_abs() as f64;
    let upper = match dist.kind() {
        DistKind::Gaussian => -(-2.0 * k * dist.sigma().powi(2) * t * t).exp_m1(),
        DistKind::Bilateral => -((1.0 / (1.0 + t * t)).powf(4.0 * k) - 1.0),
        DistKind::Cauchy => -(-4.0 * k * t).exp_m1(),
    };
    Ok(ClosedForm {
        expected: expected_acorr(dist, epsilon, lag),
        variance_lower: 0.0,
        variance_upper: upper,
    })
}

/// Monte Carlo summary of one estimator at one lag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MCStats {
    pub mean: Complex64,
    pub stderr_re: f64,
    pub stderr_im: f64,
    pub trials: usize,
    /// Sample variance of the complex estimates around their mean.
    pub var_sample: f64,
    /// Standard error of `var_sample`.
    pub var_stderr: f64,
}

impl MCStats {
    /// Summarizes per-trial estimates. Requires at least two values.
    pub fn from_values(values: &[Complex64]) -> Result<Self> {
        let trials = values.len();
        if trials < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 trials, got {trials}"
            )));
        }
        let n = trials as f64;
        let mean = values.iter().sum::<Complex64>() / n;
        let mut ss_re = 0.0;
        let mut ss_im = 0.0;
        for z in values {
            ss_re += (z.re - mean.re).powi(2);
            ss_im += (z.im - mean.im).powi(2);
        }
        let stderr_re = (ss_re / (n - 1.0)).sqrt() / n.sqrt();
        let stderr_im = (ss_im / (n - 1.0)).sqrt() / n.sqrt();
        // variance of the complex estimate: E|Z - mean|^2, with its own
        // standard error from the spread of the squared deviations
        let devs: Vec<f64> = values.iter().map(|z| (z - mean).norm_sqr()).collect();
        let var_sample = devs.iter().sum::<f64>() / (n - 1.0);
        let dev_mean = devs.iter().sum::<f64>() / n;
        let dev_var = devs.iter().map(|d| (d - dev_mean).powi(2)).sum::<f64>() / (n - 1.0);
        let var_stderr = dev_var.sqrt() / n.sqrt();
        Ok(Self { mean, stderr_re, stderr_im, trials, var_sample, var_stderr })
    }
}

/// A Monte Carlo sweep: which estimator to run, at which lags, and how it is
/// truncated. One waveform is generated per trial (stream = trial index) and
/// evaluated at every lag.
#[derive(Debug, Clone, PartialEq)]
pub enum McPlan {
    Aperiodic { lags: Vec<i64>, truncation: usize },
    Periodic { lags: Vec<i64>, period: usize },
    Vector { lags: Vec<i64>, dim: usize, truncation: usize },
    Continuous { lags: Vec<f64>, truncation: f64, dt: f64 },
}

impl McPlan {
    fn lag_count(&self) -> usize {
        match self {
            McPlan::Aperiodic { lags, .. } => lags.len(),
            McPlan::Periodic { lags, .. } => lags.len(),
            McPlan::Vector { lags, .. } => lags.len(),
            McPlan::Continuous { lags, .. } => lags.len(),
        }
    }
}

/// Runs `trials` independent realizations of the planned estimator and
/// returns per-lag statistics. Trial i draws from stream i of the seed, so
/// the result does not depend on thread count.
pub fn mc_expected_acorr(
    params: &WaveformParams,
    plan: &McPlan,
    trials: usize,
) -> Result<Vec<MCStats>> {
    if trials < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 trials, got {trials}"
        )));
    }
    if plan.lag_count() == 0 {
        return Err(Error::InvalidArgument("no lags requested".to_string()));
    }
    // Validate once on stream 0 so per-trial evaluation cannot fail.
    let per_trial: Box<dyn Fn(u64) -> Vec<Complex64> + Sync> = match plan {
        McPlan::Aperiodic { lags, truncation } => {
            let truncation = *truncation;
            let max_lag = lags.iter().map(|k| k.unsigned_abs()).max().unwrap() as usize;
            let n_max = truncation + max_lag;
            let lags = lags.clone();
            let w = DiscreteWaveform::generate(params, n_max, 0);
            for &k in &lags {
                acorr_aperiodic(&w, k, truncation)?;
            }
            let params = *params;
            Box::new(move |trial| {
                let w = DiscreteWaveform::generate(&params, n_max, trial);
                lags.iter()
                    .map(|&k| acorr_aperiodic(&w, k, truncation).expect("sized for lags").value)
                    .collect()
            })
        }
        McPlan::Periodic { lags, period } => {
            let period = *period;
            let lags = lags.clone();
            PeriodicWaveform::generate(params, period, 0)?;
            let params = *params;
            Box::new(move |trial| {
                let w = PeriodicWaveform::generate(&params, period, trial).expect("validated");
                lags.iter().map(|&k| acorr_periodic(&w, k).value).collect()
            })
        }
        McPlan::Vector { lags, dim, truncation } => {
            let (dim, truncation) = (*dim, *truncation);
            let max_lag = lags.iter().map(|k| k.unsigned_abs()).max().unwrap() as usize;
            let m_max = truncation + max_lag;
            let lags = lags.clone();
            let w = VectorWaveform::generate(params, dim, m_max, 0)?;
            for &k in &lags {
                acorr_vector(&w, k, truncation)?;
            }
            let params = *params;
            Box::new(move |trial| {
                let w = VectorWaveform::generate(&params, dim, m_max, trial).expect("validated");
                lags.iter()
                    .map(|&k| acorr_vector(&w, k, truncation).expect("sized for lags").value)
                    .collect()
            })
        }
        McPlan::Continuous { lags, truncation, dt } => {
            let (truncation, dt) = (*truncation, *dt);
            let max_shift = lags.iter().fold(0.0f64, |a, s| a.max(s.abs()));
            let horizon = truncation + max_shift;
            let lags = lags.clone();
            let w = ContinuousWaveform::generate(params, horizon, dt, 0)?;
            for &s in &lags {
                acorr_continuous(&w, s, truncation)?;
            }
            let params = *params;
            Box::new(move |trial| {
                let w = ContinuousWaveform::generate(&params, horizon, dt, trial)
                    .expect("validated");
                lags.iter()
                    .map(|&s| acorr_continuous(&w, s, truncation).expect("sized for lags").value)
                    .collect()
            })
        }
    };
    let per_trial_values = run_trials(trials, |trial| per_trial(trial));
    let lag_count = plan.lag_count();
    let mut stats = Vec::with_capacity(lag_count);
    for lag_idx in 0..lag_count {
        let values: Vec<Complex64> = per_trial_values.iter().map(|v| v[lag_idx]).collect();
        stats.push(MCStats::from_values(&values)?);
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::Distribution;
    use proptest::prelude::*;
    use std::f64::consts::TAU;

    fn gauss_params(epsilon: f64, seed: u64) -> WaveformParams {
        WaveformParams::new(epsilon, Distribution::gaussian(1.0).unwrap(), seed).unwrap()
    }

    fn approx(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn aperiodic_zero_lag_is_exactly_one() {
        let w = DiscreteWaveform::generate(&gauss_params(2.0, 1), 64, 0);
        let est = acorr_aperiodic(&w, 0, 64).unwrap();
        assert_eq!(est.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn aperiodic_matches_direct_double_checked_sum() {
        let w = DiscreteWaveform::generate(&gauss_params(1.3, 42), 30, 0);
        let (k, n) = (2i64, 8usize);
        let est = acorr_aperiodic(&w, k, n).unwrap();
        // independent loop over materialized complex values
        let mut oracle = Complex64::new(0.0, 0.0);
        for m in -(n as i64)..=n as i64 {
            oracle += w.complex(m + k) * w.complex(m).conj();
        }
        oracle /= (2 * n + 1) as f64;
        assert!(approx(est.value, oracle, 1e-12), "{} vs {}", est.value, oracle);
    }

    #[test]
    fn aperiodic_negative_lag_equals_positive_lag() {
        // Under the symmetric extension the finite sum at -k reindexes
        // term-for-term onto the sum at +k.
        let w = DiscreteWaveform::generate(&gauss_params(1.3, 7), 40, 0);
        for k in 1..=5i64 {
            let plus = acorr_aperiodic(&w, k, 30).unwrap().value;
            let minus = acorr_aperiodic(&w, -k, 30).unwrap().value;
            assert!(approx(plus, minus, 1e-12));
        }
    }

    #[test]
    fn aperiodic_rejects_short_waveforms() {
        let w = DiscreteWaveform::generate(&gauss_params(1.0, 3), 10, 0);
        assert!(matches!(
            acorr_aperiodic(&w, 3, 8),
            Err(Error::InsufficientLength(_))
        ));
        assert!(acorr_aperiodic(&w, 3, 7).is_ok());
    }

    #[test]
    fn periodic_zero_lag_and_brute_force() {
        let p = gauss_params(0.8, 5);
        let w = PeriodicWaveform::generate(&p, 4, 0).unwrap();
        assert_eq!(acorr_periodic(&w, 0).value, Complex64::new(1.0, 0.0));
        let est = acorr_periodic(&w, 1);
        let mut oracle = Complex64::new(0.0, 0.0);
        for m in 0..4i64 {
            oracle += w.complex((m + 1) % 4) * w.complex(m).conj();
        }
        oracle /= 4.0;
        assert!(approx(est.value, oracle, 1e-12));
        // lag reduction mod n
        assert!(approx(acorr_periodic(&w, 5).value, est.value, 0.0));
    }

    #[test]
    fn periodic_conjugate_symmetry() {
        let p = gauss_params(1.1, 8);
        let w = PeriodicWaveform::generate(&p, 16, 0).unwrap();
        for k in 1..16i64 {
            let a = acorr_periodic(&w, k).value;
            let b = acorr_periodic(&w, 16 - k).value;
            assert!(approx(a, b.conj(), 1e-12), "k={k}");
        }
    }

    #[test]
    fn vector_zero_lag_is_one_and_expands_per_coordinate() {
        let p = gauss_params(1.7, 21);
        let v = VectorWaveform::generate(&p, 2, 20, 0).unwrap();
        assert_eq!(acorr_vector(&v, 0, 12).unwrap().value, Complex64::new(1.0, 0.0));
        // d = 2: the estimate is the average of two per-coordinate aperiodic sums
        let (k, n) = (3i64, 12usize);
        let est = acorr_vector(&v, k, n).unwrap();
        let w = v.base();
        let mut oracle = Complex64::new(0.0, 0.0);
        for m in -(n as i64)..=n as i64 {
            let c0 = w.complex(m + k) * w.complex(m).conj();
            let c1 = w.complex(m + k + 1) * w.complex(m + 1).conj();
            oracle += (c0 + c1) / 2.0;
        }
        oracle /= (2 * n + 1) as f64;
        assert!(approx(est.value, oracle, 1e-12));
    }

    #[test]
    fn continuous_zero_shift_is_one_and_matches_hand_trapezoid() {
        let p = gauss_params(2.5, 11);
        let w = ContinuousWaveform::generate(&p, 1.0, 0.1, 0).unwrap();
        assert_eq!(acorr_continuous(&w, 0.0, 0.5).unwrap().value, Complex64::new(1.0, 0.0));
        let est = acorr_continuous(&w, 0.1, 0.5).unwrap();
        // hand trapezoid over materialized samples, shift of one grid step
        let j_end = 5i64;
        let mut oracle = Complex64::new(0.0, 0.0);
        for j in -j_end..=j_end {
            let term = w.complex_at(j + 1) * w.complex_at(j).conj();
            let weight = if j.abs() == j_end { 0.5 } else { 1.0 };
            oracle += term * weight;
        }
        oracle /= (2 * j_end) as f64;
        assert!(approx(est.value, oracle, 1e-12));
    }

    #[test]
    fn continuous_rejects_off_grid_and_oversized_requests() {
        let p = gauss_params(2.5, 11);
        let w = ContinuousWaveform::generate(&p, 1.0, 0.1, 0).unwrap();
        assert!(matches!(
            acorr_continuous(&w, 0.05, 0.5),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            acorr_continuous(&w, 0.3, 0.9),
            Err(Error::InsufficientLength(_))
        ));
    }

    #[test]
    fn expected_acorr_printed_values() {
        let gauss = Distribution::gaussian(1.0).unwrap();
        let e1 = expected_acorr(&gauss, TAU, 1);
        assert!((e1 - (-1.0f64).exp()).abs() < 1e-15);
        let cauchy = Distribution::cauchy();
        let c1 = expected_acorr(&cauchy, 4.0 * std::f64::consts::PI, 1);
        assert!((c1 - (-1.0f64).exp()).abs() < 1e-15);
        let bilateral = Distribution::bilateral();
        let b1 = expected_acorr(&bilateral, TAU, 1);
        assert!((b1 - 0.25).abs() < 1e-15);
        for dist in [gauss, cauchy, bilateral] {
            assert_eq!(expected_acorr(&dist, 0.37, 0), 1.0);
        }
        // negative lags mirror positive ones
        assert_eq!(expected_acorr(&gauss, TAU, -3), expected_acorr(&gauss, TAU, 3));
    }

    #[test]
    fn variance_bounds_printed_values() {
        let gauss = Distribution::gaussian(1.0).unwrap();
        let b = variance_bounds(&gauss, TAU, 1).unwrap();
        assert_eq!(b.variance_lower, 0.0);
        assert!((b.variance_upper - (1.0 - (-2.0f64).exp())).abs() < 1e-15);
        let cauchy = Distribution::cauchy();
        let c = variance_bounds(&cauchy, 8.0 * std::f64::consts::PI, 1).unwrap();
        assert!((c.variance_upper - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        // phi -> 1 as epsilon -> infinity, so the bound collapses
        let wide = variance_bounds(&gauss, 1e6, 1).unwrap();
        assert!(wide.variance_upper < 1e-9);
        assert!(variance_bounds(&gauss, TAU, 0).is_err());
    }

    #[test]
    fn mc_zero_lag_is_exact() {
        let p = gauss_params(TAU, 17);
        let plan = McPlan::Aperiodic { lags: vec![0], truncation: 50 };
        let stats = &mc_expected_acorr(&p, &plan, 8).unwrap()[0];
        assert_eq!(stats.mean, Complex64::new(1.0, 0.0));
        assert_eq!(stats.stderr_re, 0.0);
        assert_eq!(stats.stderr_im, 0.0);
        assert_eq!(stats.var_sample, 0.0);
    }

    #[test]
    fn mc_stderr_shrinks_with_sqrt_trials() {
        let p = gauss_params(TAU, 29);
        let plan = McPlan::Aperiodic { lags: vec![1], truncation: 200 };
        let s1 = &mc_expected_acorr(&p, &plan, 200).unwrap()[0];
        let s2 = &mc_expected_acorr(&p, &plan, 400).unwrap()[0];
        let ratio = s2.stderr_re / s1.stderr_re;
        let want = 1.0 / 2.0f64.sqrt();
        assert!(
            (ratio - want).abs() <= 0.2 * want,
            "stderr ratio {ratio} vs {want}"
        );
    }

    #[test]
    fn mc_rejects_undersized_inputs() {
        let p = gauss_params(TAU, 1);
        let plan = McPlan::Aperiodic { lags: vec![1], truncation: 10 };
        assert!(mc_expected_acorr(&p, &plan, 1).is_err());
        let empty = McPlan::Aperiodic { lags: vec![], truncation: 10 };
        assert!(mc_expected_acorr(&p, &empty, 10).is_err());
    }

    proptest! {
        // Cesaro averages of unimodular products stay inside the closed unit
        // disk (up to materialization rounding).
        #[test]
        fn estimates_stay_in_unit_disk(
            seed in 0u64..500,
            k in -6i64..6,
            n in 1usize..40,
        ) {
            let w = DiscreteWaveform::generate(&gauss_params(1.0, seed), 46, 0);
            let est = acorr_aperiodic(&w, k, n).unwrap();
            prop_assert!(est.value.norm() <= 1.0 + 1e-9);
        }

        #[test]
        fn periodic_estimates_stay_in_unit_disk(
            seed in 0u64..500,
            k in 0i64..12,
            n in 1usize..24,
        ) {
            let p = gauss_params(0.9, seed);
            let w = PeriodicWaveform::generate(&p, n, 0).unwrap();
            let est = acorr_periodic(&w, k);
            prop_assert!(est.value.norm() <= 1.0 + 1e-9);
        }
    }
}
