//! Symmetric random variables and their characteristic functions.
//!
//! The phase constructions need i.i.d. draws from a law whose density is
//! even (so the characteristic function is real) and whose characteristic
//! function vanishes at infinity. Three families qualify here: the Gaussian
//! N(0, sigma^2), the bilateral (two-sided) exponential with density
//! exp(-|x|)/2, and the standard Cauchy with density 1/(pi (1 + x^2)).

use std::f64::consts::PI;

use rand::distr::Open01;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The admissible distribution families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistKind {
    Gaussian,
    Bilateral,
    Cauchy,
}

impl DistKind {
    pub fn name(self) -> &'static str {
        match self {
            DistKind::Gaussian => "gaussian",
            DistKind::Bilateral => "bilateral",
            DistKind::Cauchy => "cauchy",
        }
    }
}

/// A symmetric distribution with a real-valued characteristic function.
///
/// The scale parameter is the Gaussian standard deviation; the bilateral and
/// Cauchy laws are fixed at unit scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    kind: DistKind,
    sigma: f64,
}

impl Distribution {
    /// Gaussian with mean 0 and standard deviation `sigma` (> 0).
    pub fn gaussian(sigma: f64) -> Result<Self> {
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "gaussian scale must be positive and finite, got {sigma}"
            )));
        }
        Ok(Self { kind: DistKind::Gaussian, sigma })
    }

    /// Two-sided exponential with density exp(-|x|)/2.
    pub fn bilateral() -> Self {
        Self { kind: DistKind::Bilateral, sigma: 1.0 }
    }

    /// Standard Cauchy with density 1/(pi (1 + x^2)).
    pub fn cauchy() -> Self {
        Self { kind: DistKind::Cauchy, sigma: 1.0 }
    }

    /// Builds from the CLI spelling (`gaussian|bilateral|cauchy`). The scale
    /// is honored for the Gaussian and must be left at 1 for the others.
    pub fn from_kind(kind: DistKind, sigma: f64) -> Result<Self> {
        match kind {
            DistKind::Gaussian => Self::gaussian(sigma),
            DistKind::Bilateral | DistKind::Cauchy => {
                if sigma != 1.0 {
                    return Err(Error::InvalidArgument(format!(
                        "{} distribution has fixed unit scale; --sigma {sigma} is not supported",
                        kind.name()
                    )));
                }
                Ok(Self { kind, sigma: 1.0 })
            }
        }
    }

    pub fn kind(&self) -> DistKind {
        self.kind
    }

    /// Scale parameter: sigma for the Gaussian, 1 for the fixed-scale laws.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// One draw. Successive calls on the same generator are i.i.d.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self.kind {
            DistKind::Gaussian => {
                let z: f64 = rng.sample(StandardNormal);
                self.sigma * z
            }
            DistKind::Bilateral => {
                // Inverse CDF of the two-sided exponential, branch-free:
                // v in (-1/2, 1/2) maps to sign(v) * Exp(1).
                let u: f64 = rng.sample(Open01);
                let v = u - 0.5;
                -v.signum() * (1.0 - 2.0 * v.abs()).ln()
            }
            DistKind::Cauchy => {
                let u: f64 = rng.sample(Open01);
                (PI * (u - 0.5)).tan()
            }
        }
    }

    /// The characteristic function `E(exp(i t Y))`, real-valued because the
    /// densities are even.
    ///
    /// Gaussian: exp(-sigma^2 t^2 / 2); bilateral: 1 / (1 + t^2);
    /// Cauchy: exp(-|t|).
    pub fn characteristic_function(&self, t: f64) -> f64 {
        match self.kind {
            DistKind::Gaussian => (-0.5 * self.sigma * self.sigma * t * t).exp(),
            DistKind::Bilateral => 1.0 / (1.0 + t * t),
            DistKind::Cauchy => (-t.abs()).exp(),
        }
    }
}
