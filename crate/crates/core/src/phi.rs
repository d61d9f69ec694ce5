//! Catalog of admissible target functions φ and the class parameter α.
//!
//! A target is an analytic φ with φ(0) = 1, φ'(0) > 0, positive real part and
//! real Taylor coefficients; the catalog exposes its coefficients B1, B2, …
//! exactly. Custom targets are accepted without checking convexity of the
//! image — that remains the caller's obligation.

use crate::series::{C64, TruncatedSeries};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PhiError {
    #[error("B1 must be positive (got {0})")]
    NonPositiveB1(f64),
    #[error("target coefficients must be real finite numbers")]
    NonRealCoefficients,
    #[error("Janowski parameters require -1 <= B < A <= 1 (got A = {a}, B = {b})")]
    JanowskiOrderViolation { a: f64, b: f64 },
    #[error("custom target carries {available} coefficients but order {requested} was requested")]
    OrderExceedsCustom { available: usize, requested: usize },
    #[error("alpha must satisfy Re(alpha) >= 0 (got {0})")]
    AlphaRealPartNegative(C64),
}

/// A target function, identified by kind plus parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case", deny_unknown_fields)]
pub enum PhiSpec {
    /// (1+z)/(1-z), the right half-plane.
    HalfPlane,
    /// e^z.
    Exponential,
    /// sqrt(1+z), the right half of the lemniscate of Bernoulli.
    SqrtLemniscate,
    /// (1+Az)/(1+Bz) with -1 <= B < A <= 1.
    Janowski { a: f64, b: f64 },
    /// Explicit coefficients B1, B2, …; convexity of the image is not checked.
    Custom { coeffs: Vec<f64> },
}

impl PhiSpec {
    /// Largest coefficient index this target can supply.
    pub fn max_order(&self) -> usize {
        match self {
            PhiSpec::Custom { coeffs } => coeffs.len(),
            _ => usize::MAX,
        }
    }

    pub fn validate(&self) -> Result<(), PhiError> {
        match self {
            PhiSpec::HalfPlane | PhiSpec::Exponential | PhiSpec::SqrtLemniscate => Ok(()),
            PhiSpec::Janowski { a, b } => {
                if !(a.is_finite() && b.is_finite()) {
                    return Err(PhiError::NonRealCoefficients);
                }
                if !(-1.0 <= *b && b < a && *a <= 1.0) {
                    return Err(PhiError::JanowskiOrderViolation { a: *a, b: *b });
                }
                Ok(())
            }
            PhiSpec::Custom { coeffs } => {
                if coeffs.iter().any(|c| !c.is_finite()) {
                    return Err(PhiError::NonRealCoefficients);
                }
                match coeffs.first() {
                    Some(&b1) if b1 > 0.0 => Ok(()),
                    Some(&b1) => Err(PhiError::NonPositiveB1(b1)),
                    None => Err(PhiError::NonPositiveB1(0.0)),
                }
            }
        }
    }

    /// Taylor coefficients B1..Bn of the target.
    pub fn coefficients(&self, n: usize) -> Result<Vec<f64>, PhiError> {
        self.validate()?;
        if n > self.max_order() {
            return Err(PhiError::OrderExceedsCustom {
                available: self.max_order(),
                requested: n,
            });
        }
        let mut out = Vec::with_capacity(n);
        match self {
            PhiSpec::HalfPlane => out.resize(n, 2.0),
            PhiSpec::Exponential => {
                let mut fact = 1.0;
                for k in 1..=n {
                    fact *= k as f64;
                    out.push(1.0 / fact);
                }
            }
            PhiSpec::SqrtLemniscate => {
                // Binomial coefficients of (1+z)^{1/2}.
                let mut b = 1.0;
                for k in 0..n {
                    b *= (0.5 - k as f64) / (k as f64 + 1.0);
                    out.push(b);
                }
            }
            PhiSpec::Janowski { a, b } => {
                let mut factor = 1.0;
                for _ in 1..=n {
                    out.push((a - b) * factor);
                    factor *= -b;
                }
            }
            PhiSpec::Custom { coeffs } => out.extend_from_slice(&coeffs[..n]),
        }
        Ok(out)
    }

    /// B1, the derivative of the target at the origin.
    pub fn b1(&self) -> Result<f64, PhiError> {
        Ok(self.coefficients(1)?[0])
    }

    /// The target as a truncated series 1 + B1 z + … + Bn z^n.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries, PhiError> {
        let b = self.coefficients(order)?;
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(1.0);
        coeffs.extend_from_slice(&b);
        Ok(TruncatedSeries::from_real(&coeffs))
    }

    /// Short stable name used in reports.
    pub fn label(&self) -> String {
        match self {
            PhiSpec::HalfPlane => "halfplane".into(),
            PhiSpec::Exponential => "exp".into(),
            PhiSpec::SqrtLemniscate => "sqrt".into(),
            PhiSpec::Janowski { a, b } => format!("janowski({a},{b})"),
            PhiSpec::Custom { .. } => "custom".into(),
        }
    }
}

/// The class parameter α with Re(α) >= 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassParams {
    alpha: C64,
}

impl ClassParams {
    pub fn new(alpha: C64) -> Result<Self, PhiError> {
        if !(alpha.re >= 0.0) || !alpha.im.is_finite() {
            return Err(PhiError::AlphaRealPartNegative(alpha));
        }
        let params = Self { alpha };
        // Nonvanishing of 1 + kα follows from Re(α) >= 0; asserted anyway.
        for k in 1..=64 {
            debug_assert!(params.one_plus(k).norm() > 1e-12);
        }
        Ok(params)
    }

    pub fn real(alpha: f64) -> Result<Self, PhiError> {
        Self::new(C64::new(alpha, 0.0))
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    pub fn re(&self) -> f64 {
        self.alpha.re
    }

    pub fn is_real(&self) -> bool {
        self.alpha.im == 0.0
    }

    /// 1 + kα.
    pub fn one_plus(&self, k: usize) -> C64 {
        C64::new(1.0, 0.0) + self.alpha * k as f64
    }
}
