//! Construction of certified class members from Schwarz functions, and
//! extraction of every coefficient functional the bounds module estimates.
//!
//! Membership is by construction: pick a Schwarz function w, set
//! p = φ(w) and solve the linear coefficient identity
//! a_n = p_{n-1} / (n (1 + (n-1)α)). Subordination of an arbitrary series is
//! never tested — it is ill-posed numerically and unnecessary here.

use crate::phi::{ClassParams, PhiError, PhiSpec};
use crate::series::{C64, SeriesError, TruncatedSeries};
use thiserror::Error;

/// Slack on the Schwarz coefficient inequalities, absorbing float rounding
/// in deep Schur recursions.
const COEFF_SLACK: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("Schur parameter {0} lies outside the closed unit disk")]
    ParamOutsideDisk(C64),
    #[error("at least one Schur parameter is required")]
    EmptyParams,
    #[error("series must be normalized (a0 = 0, a1 = 1)")]
    NotNormalized,
    #[error("functional profile needs order >= 4, got {0}")]
    OrderTooSmall(usize),
    #[error("rotation/coefficient index out of range: {0}")]
    BadIndex(usize),
    #[error("Schwarz coefficient bound violated: |c{n}| = {got} > {limit}")]
    SchwarzCoeffBound { n: usize, got: f64, limit: f64 },
    #[error("profile cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Phi(#[from] PhiError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A Schwarz function presented both by its Schur parameters and by its
/// truncated Taylor series.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzSample {
    pub schur_params: Vec<C64>,
    pub series: TruncatedSeries,
}

/// Expand the Schur-parametrized Schwarz function
/// w(z) = z·s0(z), s_k = (σ_k + z·s_{k+1}) / (1 + conj(σ_k)·z·s_{k+1})
/// to the requested truncation order.
///
/// Unimodular parameters are admissible; the recursion step is then constant
/// in exact arithmetic, which terminates the dependence on deeper parameters.
pub fn schur_to_schwarz(params: &[C64], order: usize) -> Result<SchwarzSample, WitnessError> {
    if params.is_empty() {
        return Err(WitnessError::EmptyParams);
    }
    for &s in params {
        if s.norm() > 1.0 + 1e-12 {
            return Err(WitnessError::ParamOutsideDisk(s));
        }
    }
    let mut s = TruncatedSeries::constant(params[params.len() - 1], order);
    for &sigma in params[..params.len() - 1].iter().rev() {
        let zs = s.mul_z();
        let num = zs.add(&TruncatedSeries::constant(sigma, order));
        let den = zs.scale(sigma.conj()).add(&TruncatedSeries::one(order));
        s = num.div(&den);
    }
    let series = s.mul_z();
    let sample = SchwarzSample { schur_params: params.to_vec(), series };
    sample.check_coefficient_bounds()?;
    Ok(sample)
}

impl SchwarzSample {
    /// Coefficient c_n of w.
    pub fn c(&self, n: usize) -> C64 {
        self.series.coeff(n)
    }

    /// |c1| <= 1 and |c_n| <= 1 - |c1|^2 for n >= 2.
    fn check_coefficient_bounds(&self) -> Result<(), WitnessError> {
        let c1 = self.c(1).norm();
        if c1 > 1.0 + COEFF_SLACK {
            return Err(WitnessError::SchwarzCoeffBound { n: 1, got: c1, limit: 1.0 });
        }
        let limit = 1.0 - c1 * c1 + COEFF_SLACK;
        for n in 2..=self.series.order() {
            let cn = self.c(n).norm();
            if cn > limit {
                return Err(WitnessError::SchwarzCoeffBound { n, got: cn, limit });
            }
        }
        Ok(())
    }

    /// Evaluate w at a point through the Schur recursion itself (no series
    /// truncation), so |w(z)| <= |z| holds up to rounding.
    pub fn eval_exact(&self, z: C64) -> C64 {
        let m = self.schur_params.len();
        let mut s = self.schur_params[m - 1];
        for &sigma in self.schur_params[..m - 1].iter().rev() {
            let zs = z * s;
            s = (sigma + zs) / (C64::new(1.0, 0.0) + sigma.conj() * zs);
        }
        z * s
    }

    /// Largest |w| over a uniform grid on |z| = r, via exact evaluation.
    pub fn boundary_sup(&self, r: f64, grid: usize) -> f64 {
        (0..grid)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / grid as f64;
                self.eval_exact(C64::from_polar(r, theta)).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// Member of the class built from a Schwarz function: p = φ(w) and
/// a_n = p_{n-1} / (n (1 + (n-1)α)).
pub fn member_from_schwarz(
    params: &ClassParams,
    spec: &PhiSpec,
    w: &SchwarzSample,
    order: usize,
) -> Result<TruncatedSeries, WitnessError> {
    let n = order.min(w.series.order());
    let phi = spec.series(n)?;
    let p = phi.compose(&w.series.with_order(n))?;
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    coeffs[1] = C64::new(1.0, 0.0);
    for (k, c) in coeffs.iter_mut().enumerate().take(n + 1).skip(2) {
        let denom = params.one_plus(k - 1) * k as f64;
        *c = p.coeff(k - 1) / denom;
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Largest coefficient modulus of f' + α z f'' - φ(w) through order N-2;
/// zero for a genuine member up to rounding.
pub fn membership_residual(
    params: &ClassParams,
    spec: &PhiSpec,
    f: &TruncatedSeries,
    w: &SchwarzSample,
) -> Result<f64, WitnessError> {
    let n = f.order();
    if n < 2 {
        return Err(WitnessError::OrderTooSmall(n));
    }
    let fp = f.differentiate();
    let zfpp = fp.differentiate().mul_z();
    let lhs = fp.with_order(n - 2).add(&zfpp.scale(params.alpha()));
    let phi = spec.series(n - 2)?;
    let rhs = phi.compose(&w.series.with_order(n - 2))?;
    Ok(lhs.sub(&rhs).max_coeff_norm())
}

/// Named extremal constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    /// z + Σ B_n z^{n+1} / ((n+1)(1 + n Re α)): attains the distortion and
    /// growth estimates.
    DistortionGrowth,
    /// Member driven by w = z^{n-1}: attains the n-th coefficient bound.
    Coeff(usize),
    /// Member driven by w = z^k: sharpness witness for the first and second
    /// logarithmic coefficients (k = 1, 2).
    Rotation(usize),
}

pub fn extremal(
    params: &ClassParams,
    spec: &PhiSpec,
    which: ExtremalKind,
    order: usize,
) -> Result<TruncatedSeries, WitnessError> {
    match which {
        ExtremalKind::DistortionGrowth => {
            let ra = params.re();
            let b = spec.coefficients(order.saturating_sub(1).min(spec.max_order()))?;
            let mut coeffs = vec![C64::new(0.0, 0.0); order + 1];
            if order >= 1 {
                coeffs[1] = C64::new(1.0, 0.0);
            }
            for k in 2..=order {
                if k - 1 <= b.len() {
                    let d = k as f64 * (1.0 + (k - 1) as f64 * ra);
                    coeffs[k] = C64::new(b[k - 2] / d, 0.0);
                }
            }
            Ok(TruncatedSeries::new(coeffs))
        }
        ExtremalKind::Coeff(n) => {
            if n < 2 {
                return Err(WitnessError::BadIndex(n));
            }
            rotation_member(params, spec, n - 1, order)
        }
        ExtremalKind::Rotation(k) => {
            if k < 1 {
                return Err(WitnessError::BadIndex(k));
            }
            rotation_member(params, spec, k, order)
        }
    }
}

fn rotation_member(
    params: &ClassParams,
    spec: &PhiSpec,
    k: usize,
    order: usize,
) -> Result<TruncatedSeries, WitnessError> {
    let mut sigma = vec![C64::new(0.0, 0.0); k];
    sigma[k - 1] = C64::new(1.0, 0.0);
    let w = schur_to_schwarz(&sigma, order)?;
    member_from_schwarz(params, spec, &w, order)
}

/// Every functional the bounds module estimates, extracted from one member.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalProfile {
    /// Taylor coefficients a2..aN.
    pub a: Vec<C64>,
    /// Logarithmic coefficients γ1, γ2, γ3.
    pub gamma: [C64; 3],
    /// Inverse coefficients A2, A3, A4.
    pub inv: [C64; 3],
    /// Second Hankel determinant A2 A4 - A3^2.
    pub h2: C64,
}

impl FunctionalProfile {
    /// Fekete-Szego functional A3 - μ A2^2 of the inverse coefficients.
    pub fn fs(&self, mu: C64) -> C64 {
        self.inv[1] - mu * self.inv[0] * self.inv[0]
    }

    /// Taylor coefficient a_n, n >= 2.
    pub fn a(&self, n: usize) -> C64 {
        self.a[n - 2]
    }
}

/// Extract the functional profile of a normalized series of order >= 4.
/// The logarithmic and inverse routes are cross-checked against their
/// closed forms in a2, a3, a4.
pub fn profile(f: &TruncatedSeries) -> Result<FunctionalProfile, WitnessError> {
    if f.order() < 4 {
        return Err(WitnessError::OrderTooSmall(f.order()));
    }
    if f.coeff(0).norm() > 1e-9 || (f.coeff(1) - 1.0).norm() > 1e-9 {
        return Err(WitnessError::NotNormalized);
    }
    let log = f.log_div_z()?;
    let gamma = [log.coeff(1) * 0.5, log.coeff(2) * 0.5, log.coeff(3) * 0.5];
    let inverse = f.revert()?;
    let inv = [inverse.coeff(2), inverse.coeff(3), inverse.coeff(4)];

    let (a2, a3, a4) = (f.coeff(2), f.coeff(3), f.coeff(4));
    let gamma_closed = gamma_closed_forms(a2, a3, a4);
    let inv_closed = inverse_closed_forms(a2, a3, a4);
    for k in 0..3 {
        let scale = 1.0 + inv_closed[k].norm().max(gamma_closed[k].norm());
        if (gamma[k] - gamma_closed[k]).norm() > 1e-9 * scale {
            return Err(WitnessError::CrossCheck(format!(
                "gamma{} series value {} vs closed form {}",
                k + 1,
                gamma[k],
                gamma_closed[k]
            )));
        }
        if (inv[k] - inv_closed[k]).norm() > 1e-9 * scale {
            return Err(WitnessError::CrossCheck(format!(
                "A{} series value {} vs closed form {}",
                k + 2,
                inv[k],
                inv_closed[k]
            )));
        }
    }

    let h2 = inv[0] * inv[2] - inv[1] * inv[1];
    Ok(FunctionalProfile { a: f.coeffs()[2..].to_vec(), gamma, inv, h2 })
}

/// γ1 = a2/2, γ2 = (a3 - a2^2/2)/2, γ3 = (a4 - a2 a3 + a2^3/3)/2.
pub fn gamma_closed_forms(a2: C64, a3: C64, a4: C64) -> [C64; 3] {
    [
        a2 * 0.5,
        (a3 - a2 * a2 * 0.5) * 0.5,
        (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) * 0.5,
    ]
}

/// A2 = -a2, A3 = 2 a2^2 - a3, A4 = -5 a2^3 + 5 a2 a3 - a4.
pub fn inverse_closed_forms(a2: C64, a3: C64, a4: C64) -> [C64; 3] {
    [
        -a2,
        a2 * a2 * 2.0 - a3,
        a2 * a2 * a2 * -5.0 + a2 * a3 * 5.0 - a4,
    ]
}
