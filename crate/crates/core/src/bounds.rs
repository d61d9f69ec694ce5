//! Closed-form evaluators for the coefficient-functional bounds of the class:
//! distortion and growth intervals, Taylor/logarithmic/inverse coefficient
//! bounds, the Fekete-Szego bound for inverse coefficients, and the second
//! Hankel determinant bound with its quadratic cross-check.

use crate::phi::{ClassParams, PhiError, PhiSpec};
use crate::series::C64;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Membership comparisons classify boundary points into the earlier-listed
/// region.
const REGION_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("radius must lie in (0, 1), got {0}")]
    RadiusOutOfRange(f64),
    #[error("coefficient index must be at least 2, got {0}")]
    IndexTooSmall(usize),
    #[error("no region matched for (q1, q2) = ({0}, {1}); coverage gap")]
    NoRegionMatched(f64, f64),
    #[error("this bound requires a real alpha (got {0})")]
    RealAlphaRequired(C64),
    #[error(transparent)]
    Phi(#[from] PhiError),
}

/// Closed real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Self { lo, hi }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Which reading of the two-sided radial estimates to evaluate.
///
/// `AsStated` uses |Bn| in both endpoints. `AsProved` uses the signed Bn,
/// the form attained by the extremal member; the two differ only for targets
/// with mixed-sign coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    AsStated,
    AsProved,
}

/// A radial bound as a partial sum at order N, plus the magnitude of the
/// first omitted term as a truncation indicator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialBound {
    pub interval: Interval,
    pub tail_hint: f64,
}

fn radial_bound(
    spec: &PhiSpec,
    r: f64,
    n: usize,
    variant: Variant,
    denom: impl Fn(usize) -> f64,
) -> Result<RadialBound, BoundsError> {
    if !(r > 0.0 && r < 1.0) {
        return Err(BoundsError::RadiusOutOfRange(r));
    }
    let want = (n + 1).min(spec.max_order());
    let b = spec.coefficients(want)?;
    let mut lo = 1.0;
    let mut hi = 1.0;
    let mut rk = 1.0;
    for k in 1..=n.min(b.len()) {
        rk *= r;
        let bk = b[k - 1];
        let d = denom(k);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        match variant {
            Variant::AsStated => {
                lo += bk.abs() * sign * rk / d;
                hi += bk.abs() * rk / d;
            }
            Variant::AsProved => {
                lo += bk * sign * rk / d;
                hi += bk * rk / d;
            }
        }
    }
    let tail_hint = if b.len() > n {
        b[n].abs() * rk * r / denom(n + 1)
    } else {
        0.0
    };
    Ok(RadialBound { interval: Interval::new(lo.min(hi), lo.max(hi)), tail_hint })
}

/// Two-sided bound on |f'| over |z| = r, as partial sums to order N.
pub fn distortion_bounds(
    params: &ClassParams,
    spec: &PhiSpec,
    r: f64,
    n: usize,
    variant: Variant,
) -> Result<RadialBound, BoundsError> {
    let ra = params.re();
    radial_bound(spec, r, n, variant, |k| k as f64 * ra + 1.0)
}

/// Two-sided bound on |f(z)|/|z| over |z| = r, as partial sums to order N.
pub fn growth_bounds(
    params: &ClassParams,
    spec: &PhiSpec,
    r: f64,
    n: usize,
    variant: Variant,
) -> Result<RadialBound, BoundsError> {
    let ra = params.re();
    radial_bound(spec, r, n, variant, |k| (k as f64 + 1.0) * (1.0 + k as f64 * ra))
}

/// Sharp bound B1 / |n + n(n-1)α| on the n-th Taylor coefficient, n >= 2.
pub fn taylor_coeff_bound(
    params: &ClassParams,
    spec: &PhiSpec,
    n: usize,
) -> Result<f64, BoundsError> {
    if n < 2 {
        return Err(BoundsError::IndexTooSmall(n));
    }
    let b1 = spec.b1()?;
    Ok(b1 / (n as f64 * params.one_plus(n - 1).norm()))
}

/// Region labels for the piecewise sharp maximum of
/// |c3 + q1 c1 c2 + q2 c1^3| over Schwarz functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HRegion {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    D8,
    D9,
    D10,
    D11,
    D12,
    SpecialPoint21,
}

impl fmt::Display for HRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HRegion::D1 => "D1",
            HRegion::D2 => "D2",
            HRegion::D3 => "D3",
            HRegion::D4 => "D4",
            HRegion::D5 => "D5",
            HRegion::D6 => "D6",
            HRegion::D7 => "D7",
            HRegion::D8 => "D8",
            HRegion::D9 => "D9",
            HRegion::D10 => "D10",
            HRegion::D11 => "D11",
            HRegion::D12 => "D12",
            HRegion::SpecialPoint21 => "SpecialPoint21",
        };
        f.write_str(s)
    }
}

/// Classification and value of the piecewise sharp maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HResult {
    pub q1: f64,
    pub q2: f64,
    pub region: HRegion,
    pub value: f64,
}

/// Standing note attached to reports that expose region labels: the |q2|
/// branch is listed for the union of D1..D7, which overlaps the first branch
/// on D1 and D2; first-match ordering assigns D1, D2 to the first branch, so
/// the |q2| branch effectively covers D3..D7.
pub const H_CLASSIFICATION_NOTE: &str =
    "H branch order: regions are tested in listed order (special point (2,1) first), \
     so the |q2| branch effectively covers D3..D7";

fn le(a: f64, b: f64) -> bool {
    a <= b + REGION_TOL
}

fn ge(a: f64, b: f64) -> bool {
    a >= b - REGION_TOL
}

/// Sharp maximum of |c3 + q1 c1 c2 + q2 c1^3| over Schwarz functions,
/// classified by region with first match winning in the listed order.
pub fn eval_h(q1: f64, q2: f64) -> Result<HResult, BoundsError> {
    let t = q1.abs();
    let region = if (q1 - 2.0).abs() <= REGION_TOL && (q2 - 1.0).abs() <= REGION_TOL {
        HRegion::SpecialPoint21
    } else if le(t, 0.5) && le(q2.abs(), 1.0) {
        HRegion::D1
    } else if ge(t, 0.5)
        && le(t, 2.0)
        && ge(q2, cube_lower(t))
        && le(q2, 1.0)
    {
        HRegion::D2
    } else if le(t, 0.5) && le(q2, -1.0) {
        HRegion::D3
    } else if ge(t, 0.5) && le(q2, -2.0 / 3.0 * (t + 1.0)) {
        HRegion::D4
    } else if le(t, 2.0) && ge(q2, 1.0) {
        HRegion::D5
    } else if ge(t, 2.0) && le(t, 4.0) && ge(q2, (q1 * q1 + 8.0) / 12.0) {
        HRegion::D6
    } else if ge(t, 4.0) && ge(q2, 2.0 / 3.0 * (t - 1.0)) {
        HRegion::D7
    } else if ge(t, 0.5)
        && le(t, 2.0)
        && ge(q2, -2.0 / 3.0 * (t + 1.0))
        && le(q2, cube_lower(t))
    {
        HRegion::D8
    } else if ge(t, 2.0) && ge(q2, -2.0 / 3.0 * (t + 1.0)) && le(q2, rational_plus(t)) {
        HRegion::D9
    } else if ge(t, 2.0)
        && le(t, 4.0)
        && ge(q2, rational_plus(t))
        && le(q2, (q1 * q1 + 8.0) / 12.0)
    {
        HRegion::D10
    } else if ge(t, 4.0) && ge(q2, rational_plus(t)) && le(q2, rational_minus(t)) {
        HRegion::D11
    } else if ge(t, 4.0) && ge(q2, rational_minus(t)) && le(q2, 2.0 / 3.0 * (t - 1.0)) {
        HRegion::D12
    } else {
        return Err(BoundsError::NoRegionMatched(q1, q2));
    };

    let value = match region {
        HRegion::D1 | HRegion::D2 | HRegion::SpecialPoint21 => 1.0,
        HRegion::D3 | HRegion::D4 | HRegion::D5 | HRegion::D6 | HRegion::D7 => q2.abs(),
        HRegion::D8 | HRegion::D9 => {
            2.0 / 3.0 * (t + 1.0) * ((1.0 + t) / (3.0 * (t + 1.0 + q2))).sqrt()
        }
        HRegion::D10 | HRegion::D11 => {
            let s = q1 * q1 - 4.0;
            q2 / 3.0 * (s / (q1 * q1 - 4.0 * q2)) * (s / (3.0 * (q2 - 1.0))).sqrt()
        }
        HRegion::D12 => {
            2.0 / 3.0 * (t - 1.0) * ((t - 1.0) / (3.0 * (t - 1.0 - q2))).sqrt()
        }
    };
    Ok(HResult { q1, q2, region, value })
}

/// Lower edge of D2 / upper edge of D8: (4/27)(|q1|+1)^3 - (|q1|+1).
fn cube_lower(t: f64) -> f64 {
    let u = t + 1.0;
    4.0 / 27.0 * u * u * u - u
}

/// 2|q1|(|q1|+1) / (q1^2 + 2|q1| + 4).
fn rational_plus(t: f64) -> f64 {
    2.0 * t * (t + 1.0) / (t * t + 2.0 * t + 4.0)
}

/// 2|q1|(|q1|-1) / (q1^2 - 2|q1| + 4).
fn rational_minus(t: f64) -> f64 {
    2.0 * t * (t - 1.0) / (t * t - 2.0 * t + 4.0)
}

/// A third-order coefficient bound that routes through the piecewise sharp
/// maximum; carries the classification for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThirdOrderBound {
    pub value: f64,
    pub h: HResult,
}

/// Which branch produced the second logarithmic coefficient bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gamma2Branch {
    First,
    Second,
}

/// Bounds on the initial logarithmic coefficients. `g3` is available only
/// for real α.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogCoeffBounds {
    pub g1: f64,
    pub g2: f64,
    pub g2_branch: Gamma2Branch,
    pub g3: Option<ThirdOrderBound>,
}

pub fn log_coeff_bounds(
    params: &ClassParams,
    spec: &PhiSpec,
) -> Result<LogCoeffBounds, BoundsError> {
    let b = spec.coefficients(3)?;
    let (b1, b2, b3) = (b[0], b[1], b[2]);
    let alpha = params.alpha();
    let a1 = params.one_plus(1);
    let a2 = params.one_plus(2);

    let g1 = b1 / (4.0 * a1.norm());

    let disc = (a1 * a1 * 8.0 * b2 - a2 * 3.0 * b1 * b1).norm();
    let (g2, g2_branch) = if disc <= 8.0 * b1 * (a1 * a1).norm() {
        (b1 / (6.0 * a2.norm()), Gamma2Branch::First)
    } else {
        (disc / (48.0 * (a1 * a1).norm() * a2.norm()), Gamma2Branch::Second)
    };

    let g3 = if params.is_real() {
        let a = alpha.re;
        let q1 = 2.0 * b2 / b1 - 2.0 * b1 * (1.0 + 3.0 * a) / (3.0 * (1.0 + a) * (1.0 + 2.0 * a));
        let q2 = b3 / b1 - 2.0 * b2 * (1.0 + 3.0 * a) / (3.0 * (1.0 + a) * (1.0 + 2.0 * a))
            + b1 * b1 * (1.0 + 3.0 * a) / (6.0 * (1.0 + a).powi(3));
        let h = eval_h(q1, q2)?;
        Some(ThirdOrderBound { value: b1 / (8.0 * (1.0 + 3.0 * a)) * h.value, h })
    } else {
        None
    };

    Ok(LogCoeffBounds { g1, g2, g2_branch, g3 })
}

/// Bounds on the initial coefficients of the compositional inverse.
/// `b4` is available only for real α.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InverseCoeffBounds {
    pub b2: f64,
    pub b3: f64,
    pub b4: Option<ThirdOrderBound>,
}

pub fn inverse_coeff_bounds(
    params: &ClassParams,
    spec: &PhiSpec,
) -> Result<InverseCoeffBounds, BoundsError> {
    let b = spec.coefficients(3)?;
    let (b1, b2c, b3c) = (b[0], b[1], b[2]);
    let a1 = params.one_plus(1);
    let a2 = params.one_plus(2);

    let bound2 = b1 / (2.0 * a1.norm());

    let mu = a2 * 3.0 * b1 / (a1 * a1 * 2.0) - b2c / b1;
    let bound3 = b1 / (3.0 * a2.norm()) * mu.norm().max(1.0);

    let bound4 = if params.is_real() {
        let a = params.alpha().re;
        let q1 = 2.0
            * (b2c / b1 - 5.0 * b1 * (1.0 + 3.0 * a) / (3.0 * (1.0 + a) * (1.0 + 2.0 * a)));
        let q2 = b3c / b1 - 10.0 * b2c * (1.0 + 3.0 * a) / (3.0 * (1.0 + a) * (1.0 + 2.0 * a))
            + 5.0 * b1 * b1 * (1.0 + 3.0 * a) / (2.0 * (1.0 + a).powi(3));
        let h = eval_h(q1, q2)?;
        Some(ThirdOrderBound { value: b1 / (4.0 * (1.0 + 3.0 * a)) * h.value, h })
    } else {
        None
    };

    Ok(InverseCoeffBounds { b2: bound2, b3: bound3, b4: bound4 })
}

/// Bound on |A3 - μ A2^2| over the inverse coefficients, for any complex μ.
pub fn fekete_szego_inverse_bound(
    params: &ClassParams,
    spec: &PhiSpec,
    mu: C64,
) -> Result<f64, BoundsError> {
    let b = spec.coefficients(2)?;
    let (b1, b2) = (b[0], b[1]);
    let a1 = params.one_plus(1);
    let a2 = params.one_plus(2);
    let inner = a2 * 3.0 * b1 * (mu - 2.0) / (a1 * a1 * 4.0) + b2 / b1;
    Ok(b1 / (3.0 * a2.norm()) * inner.norm().max(1.0))
}

/// Maximum of P t^2 + Q t + R over t in [0, 4], by the three-branch closed
/// form. Branches are tested in order; boundary inputs agree across branches.
pub fn quad_max_unit(p: f64, q: f64, r: f64) -> f64 {
    if q <= 0.0 && p <= -q / 4.0 {
        r
    } else if (q >= 0.0 && p >= -q / 8.0) || (q <= 0.0 && p >= -q / 4.0) {
        16.0 * p + 4.0 * q + r
    } else {
        // q > 0, p <= -q/8 < 0: interior vertex.
        (4.0 * p * r - q * q) / (4.0 * p)
    }
}

/// The d1, d2, d3 discriminants and the quadratic coefficients P, Q, R for
/// the second Hankel determinant bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HankelIntermediates {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    #[serde(rename = "P")]
    pub p: f64,
    #[serde(rename = "Q")]
    pub q: f64,
    #[serde(rename = "R")]
    pub r: f64,
}

/// How to evaluate the second Hankel determinant bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HankelMethod {
    /// The three-case bound as displayed, falling back to the quadratic
    /// route when no case matches.
    Cases,
    /// max of P t^2 + Q t + R over [0, 4].
    Quadratic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HankelCase {
    CaseI,
    CaseII,
    CaseIII,
    /// No displayed case matched; the quadratic route was used.
    NoCaseMatched,
}

impl fmt::Display for HankelCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HankelCase::CaseI => "i",
            HankelCase::CaseII => "ii",
            HankelCase::CaseIII => "iii",
            HankelCase::NoCaseMatched => "no_case_matched",
        };
        f.write_str(s)
    }
}

/// Bound on |A2 A4 - A3^2| with everything a verifier needs to re-derive it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HankelSecondBound {
    /// The bound selected by the requested method.
    pub bound: f64,
    /// The case-analysis value, when one of the displayed cases matched.
    pub cases_bound: Option<f64>,
    /// The quadratic-route value; always available.
    pub quadratic_bound: f64,
    pub case: HankelCase,
    pub intermediates: HankelIntermediates,
    /// Classification warnings (case fallback, method mismatch).
    pub notes: Vec<String>,
}

/// Second Hankel determinant bound for real α.
pub fn hankel_second_bound(
    params: &ClassParams,
    spec: &PhiSpec,
    method: HankelMethod,
) -> Result<HankelSecondBound, BoundsError> {
    if !params.is_real() {
        return Err(BoundsError::RealAlphaRequired(params.alpha()));
    }
    let b = spec.coefficients(3)?;
    let (b1, b2, b3) = (b[0], b[1], b[2]);
    let a = params.alpha().re;
    let ap1 = 1.0 + a;
    let ap2sq = (1.0 + 2.0 * a) * (1.0 + 2.0 * a);
    let ap3 = 1.0 + 3.0 * a;

    let d1 = b1.powi(3) / (16.0 * ap1.powi(3))
        + b2 * b2 * ap1 / (9.0 * b1 * ap2sq)
        + b1 * b2.abs() / (12.0 * ap1 * (1.0 + 2.0 * a))
        + b3.abs() / (8.0 * ap3);
    let d2 = b1 * b1 / (12.0 * ap1 * (1.0 + 2.0 * a))
        + b2.abs() / (4.0 * ap3)
        + 2.0 * b2.abs() * ap1 / (9.0 * ap2sq);
    let d3 = 8.0 * b1 * ap1 / (9.0 * ap2sq) - b1 / (2.0 * ap3);

    // Quadratic route: F(t) = P t^2 + Q t + R on t = p^2 in [0, 4].
    let scale = b1 / (16.0 * ap1);
    let p = scale * (d1 - d2 - b1 / (8.0 * ap3) + b1 * ap1 / (9.0 * ap2sq));
    let q = scale * (4.0 * d2 - d3);
    let r = b1 * b1 / (9.0 * ap2sq);
    let quadratic_bound = quad_max_unit(p, q, r);

    let mut notes = Vec::new();
    let edge = d1 - d2 / 2.0 - b1 / (16.0 * ap3);
    let corner = b1 * ap1 / (9.0 * ap2sq);
    let (case, cases_bound) = if le(4.0 * d2, d3) && le(d1, corner) {
        (HankelCase::CaseI, Some(r))
    } else if (ge(4.0 * d2, d3) && ge(edge, 0.0)) || (le(4.0 * d2, d3) && ge(d1, corner)) {
        (HankelCase::CaseII, Some(b1 * d1 / ap1))
    } else if 4.0 * d1 > d3 && le(edge, 0.0) {
        let num = scale
            * (16.0 * b1 * ap1 * d1 / (9.0 * ap2sq)
                - b1 * d2 / ap3
                - 4.0 * d2 * d2
                - b1 * b1 / (16.0 * ap3 * ap3));
        let den = d1 - d2 - b1 / (8.0 * ap3) + corner;
        (HankelCase::CaseIII, Some(num / den))
    } else {
        notes.push(format!(
            "no Hankel case matched (d1 = {d1}, d2 = {d2}, d3 = {d3}); quadratic route used"
        ));
        (HankelCase::NoCaseMatched, None)
    };

    if let Some(cb) = cases_bound {
        if (cb - quadratic_bound).abs() > 1e-9 {
            notes.push(format!(
                "Hankel case value {cb} disagrees with quadratic route {quadratic_bound}"
            ));
        }
    }

    let bound = match method {
        HankelMethod::Cases => cases_bound.unwrap_or(quadratic_bound),
        HankelMethod::Quadratic => quadratic_bound,
    };

    Ok(HankelSecondBound {
        bound,
        cases_bound,
        quadratic_bound,
        case,
        intermediates: HankelIntermediates { d1, d2, d3, p, q, r },
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn halfplane() -> PhiSpec {
        PhiSpec::HalfPlane
    }

    fn alpha(re: f64) -> ClassParams {
        ClassParams::real(re).unwrap()
    }

    #[test]
    fn taylor_bound_examples() {
        assert!((taylor_coeff_bound(&alpha(0.0), &halfplane(), 3).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((taylor_coeff_bound(&alpha(1.0), &halfplane(), 2).unwrap() - 0.5).abs() < 1e-15);
        let ci = ClassParams::new(C64::new(0.0, 1.0)).unwrap();
        let expected = 1.0 / (2.0 * 2.0f64.sqrt());
        for spec in [PhiSpec::Exponential, PhiSpec::SqrtLemniscate] {
            let b1 = spec.b1().unwrap();
            let got = taylor_coeff_bound(&ci, &spec, 2).unwrap();
            assert!((got - b1 * expected).abs() < 1e-15);
        }
        assert!(taylor_coeff_bound(&alpha(0.0), &halfplane(), 1).is_err());
    }

    #[test]
    fn distortion_halfplane_alpha_zero_matches_closed_form() {
        for variant in [Variant::AsStated, Variant::AsProved] {
            let rb = distortion_bounds(&alpha(0.0), &halfplane(), 0.5, 64, variant).unwrap();
            assert!((rb.interval.lo - 1.0 / 3.0).abs() <= 1e-12);
            assert!((rb.interval.hi - 3.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn distortion_shrinks_to_point_as_r_vanishes() {
        let rb = distortion_bounds(&alpha(1.0), &halfplane(), 1e-12, 32, Variant::AsProved).unwrap();
        assert!((rb.interval.lo - 1.0).abs() <= 1e-11);
        assert!((rb.interval.hi - 1.0).abs() <= 1e-11);
    }

    #[test]
    fn distortion_halfplane_alpha_one_matches_partial_sum_oracle() {
        // Independent partial sums of 1 + Σ 2 (±r)^n / (n+1) at N = 64.
        let n = 64;
        let (mut lo, mut hi) = (1.0, 1.0);
        let (mut neg, mut pos) = (1.0, 1.0);
        for k in 1..=n {
            neg *= -0.5;
            pos *= 0.5;
            lo += 2.0 * neg / (k as f64 + 1.0);
            hi += 2.0 * pos / (k as f64 + 1.0);
        }
        // Closed forms of the full series for reference.
        assert!((lo - (4.0 * 1.5f64.ln() - 1.0)).abs() <= 1e-12);
        assert!((hi - (4.0 * 2.0f64.ln() - 1.0)).abs() <= 1e-12);

        let rb = distortion_bounds(&alpha(1.0), &halfplane(), 0.5, n, Variant::AsProved).unwrap();
        assert!((rb.interval.lo - lo).abs() <= 1e-14, "{} vs {lo}", rb.interval.lo);
        assert!((rb.interval.hi - hi).abs() <= 1e-14, "{} vs {hi}", rb.interval.hi);
    }

    #[test]
    fn growth_examples_match_partial_sum_oracle() {
        let n = 64;
        // Half-plane, α = 0, r = 0.5: upper 1 + Σ 2 (0.5)^k / (k+1).
        let mut hi = 1.0;
        let mut pos = 1.0;
        for k in 1..=n {
            pos *= 0.5;
            hi += 2.0 * pos / (k as f64 + 1.0);
        }
        let rb = growth_bounds(&alpha(0.0), &halfplane(), 0.5, n, Variant::AsProved).unwrap();
        assert!((rb.interval.hi - hi).abs() <= 1e-14);

        // Exponential, α = 0, r = 0.5: lower 1 + Σ (-0.5)^k / (k! (k+1)),
        // which sums to 2(1 - e^{-1/2}).
        let mut lo = 1.0;
        let mut term = 1.0;
        let mut fact = 1.0;
        for k in 1..=n {
            term *= -0.5;
            fact *= k as f64;
            lo += term / (fact * (k as f64 + 1.0));
        }
        assert!((lo - 2.0 * (1.0 - (-0.5f64).exp())).abs() <= 1e-14);
        let rb = growth_bounds(&alpha(0.0), &PhiSpec::Exponential, 0.5, n, Variant::AsProved).unwrap();
        assert!((rb.interval.lo - lo).abs() <= 1e-14);
    }

    #[test]
    fn proved_variant_differs_from_stated_for_mixed_signs() {
        // sqrt(1+z) has mixed-sign coefficients: the proved upper endpoint is
        // the target value itself, the stated one overshoots it.
        let proved =
            growth_bounds(&alpha(0.0), &PhiSpec::SqrtLemniscate, 0.5, 64, Variant::AsProved)
                .unwrap();
        let stated =
            growth_bounds(&alpha(0.0), &PhiSpec::SqrtLemniscate, 0.5, 64, Variant::AsStated)
                .unwrap();
        assert!(stated.interval.hi > proved.interval.hi);
    }

    #[test]
    fn distortion_upper_nondecreasing_in_r() {
        for spec in [PhiSpec::HalfPlane, PhiSpec::Exponential, PhiSpec::SqrtLemniscate] {
            let mut prev = 0.0;
            for i in 1..=9 {
                let r = i as f64 / 10.0;
                let rb = distortion_bounds(&alpha(0.5), &spec, r, 48, Variant::AsProved).unwrap();
                assert!(rb.interval.hi >= prev);
                prev = rb.interval.hi;
            }
        }
    }

    #[test]
    fn eval_h_reference_points() {
        let h = eval_h(0.0, 0.0).unwrap();
        assert_eq!((h.region, h.value), (HRegion::D1, 1.0));

        let h = eval_h(0.0, -2.0).unwrap();
        assert_eq!((h.region, h.value), (HRegion::D3, 2.0));

        let h = eval_h(2.0, 1.0).unwrap();
        assert_eq!((h.region, h.value), (HRegion::SpecialPoint21, 1.0));

        let h = eval_h(3.0, -1.0).unwrap();
        assert_eq!(h.region, HRegion::D9);
        assert!((h.value - 16.0 / 9.0).abs() <= 1e-15);
    }

    #[test]
    fn eval_h_interior_panel_classification() {
        let panel: [(f64, f64, HRegion); 12] = [
            (0.0, 0.0, HRegion::D1),
            (1.0, 0.5, HRegion::D2),
            (0.0, -2.0, HRegion::D3),
            (1.0, -3.0, HRegion::D4),
            (0.0, 2.0, HRegion::D5),
            (3.0, 2.0, HRegion::D6),
            (5.0, 3.0, HRegion::D7),
            (1.0, -1.0, HRegion::D8),
            (3.0, -1.0, HRegion::D9),
            (3.0, 1.3, HRegion::D10),
            (5.0, 2.0, HRegion::D11),
            (5.0, 2.5, HRegion::D12),
        ];
        for (q1, q2, region) in panel {
            let h = eval_h(q1, q2).unwrap();
            assert_eq!(h.region, region, "({q1}, {q2})");
            assert!(h.value > 0.0 && h.value.is_finite());
        }
        // Spot values.
        let d8 = eval_h(1.0, -1.0).unwrap().value;
        assert!((d8 - 4.0 / 3.0 * (2.0f64 / 3.0).sqrt()).abs() <= 1e-15);
        let d12 = eval_h(5.0, 2.5).unwrap().value;
        assert!((d12 - 8.0 / 3.0 * (4.0f64 / 4.5).sqrt()).abs() <= 1e-15);
    }

    #[test]
    fn eval_h_negative_q1_symmetry() {
        // Membership depends on |q1| only; values likewise.
        for (q1, q2) in [(3.0, -1.0), (1.0, 0.5), (5.0, 2.5), (0.3, 0.7)] {
            let a = eval_h(q1, q2).unwrap();
            let b = eval_h(-q1, q2).unwrap();
            assert_eq!(a.region, b.region);
            assert!((a.value - b.value).abs() <= 1e-15);
        }
    }

    #[test]
    fn log_bounds_corollary_values() {
        // e^z: (1/4, 1/6) at α = 0; (1/8, 1/18) at α = 1.
        let lb = log_coeff_bounds(&alpha(0.0), &PhiSpec::Exponential).unwrap();
        assert!((lb.g1 - 0.25).abs() <= 1e-15);
        assert!((lb.g2 - 1.0 / 6.0).abs() <= 1e-15);
        assert_eq!(lb.g2_branch, Gamma2Branch::First);

        let lb = log_coeff_bounds(&alpha(1.0), &PhiSpec::Exponential).unwrap();
        assert!((lb.g1 - 0.125).abs() <= 1e-15);
        assert!((lb.g2 - 1.0 / 18.0).abs() <= 1e-15);

        // sqrt(1+z): (1/8, 1/12) at α = 0.
        let lb = log_coeff_bounds(&alpha(0.0), &PhiSpec::SqrtLemniscate).unwrap();
        assert!((lb.g1 - 0.125).abs() <= 1e-15);
        assert!((lb.g2 - 1.0 / 12.0).abs() <= 1e-15);

        // Half-plane at α = 0: q1 = 2/3, q2 = 1/3, region D2, g3 = 1/4.
        let lb = log_coeff_bounds(&alpha(0.0), &halfplane()).unwrap();
        let g3 = lb.g3.unwrap();
        assert!((g3.h.q1 - 2.0 / 3.0).abs() <= 1e-15);
        assert!((g3.h.q2 - 1.0 / 3.0).abs() <= 1e-15);
        assert_eq!(g3.h.region, HRegion::D2);
        assert!((g3.value - 0.25).abs() <= 1e-15);
    }

    #[test]
    fn g3_unavailable_for_complex_alpha() {
        let ci = ClassParams::new(C64::new(1.0, 1.0)).unwrap();
        let lb = log_coeff_bounds(&ci, &halfplane()).unwrap();
        assert!(lb.g3.is_none());
        assert!(lb.g1 > 0.0 && lb.g2 > 0.0);
    }

    #[test]
    fn inverse_bounds_corollary_values() {
        let ib = inverse_coeff_bounds(&alpha(0.0), &PhiSpec::SqrtLemniscate).unwrap();
        assert!((ib.b2 - 0.25).abs() <= 1e-15);
        assert!((ib.b3 - 1.0 / 6.0).abs() <= 1e-15);

        let ib = inverse_coeff_bounds(&alpha(0.0), &PhiSpec::Exponential).unwrap();
        assert!((ib.b3 - 1.0 / 3.0).abs() <= 1e-15);
        // A4 inputs: q1 = -7/3, q2 = 1.
        let b4 = ib.b4.unwrap();
        assert!((b4.h.q1 + 7.0 / 3.0).abs() <= 1e-14);
        assert!((b4.h.q2 - 1.0).abs() <= 1e-14);
        assert_eq!(b4.h.region, HRegion::D9);
    }

    #[test]
    fn fekete_szego_examples() {
        // μ = 2 collapses the inner term to B2/B1.
        for spec in [PhiSpec::Exponential, PhiSpec::SqrtLemniscate, halfplane()] {
            let b = spec.coefficients(2).unwrap();
            if (b[1] / b[0]).abs() <= 1.0 {
                let got =
                    fekete_szego_inverse_bound(&alpha(0.0), &spec, C64::new(2.0, 0.0)).unwrap();
                let expected = b[0] / 3.0;
                assert!((got - expected).abs() <= 1e-15);
            }
        }
        let got = fekete_szego_inverse_bound(&alpha(0.0), &halfplane(), C64::new(0.0, 0.0)).unwrap();
        assert!((got - 4.0 / 3.0).abs() <= 1e-15);
        let got = fekete_szego_inverse_bound(&alpha(0.0), &halfplane(), C64::new(1.0, 0.0)).unwrap();
        assert!((got - 2.0 / 3.0).abs() <= 1e-15);
    }

    #[test]
    fn quad_max_unit_branch_examples() {
        assert_eq!(quad_max_unit(-1.0, 0.0, 5.0), 5.0);
        assert_eq!(quad_max_unit(1.0, 1.0, 0.0), 20.0);
        assert_eq!(quad_max_unit(-1.0, 4.0, 0.0), 4.0);
    }

    #[test]
    fn hankel_halfplane_alpha_zero() {
        let hb = hankel_second_bound(&alpha(0.0), &halfplane(), HankelMethod::Cases).unwrap();
        assert!((hb.intermediates.d1 - 47.0 / 36.0).abs() <= 1e-15);
        assert!((hb.intermediates.d2 - 23.0 / 18.0).abs() <= 1e-15);
        assert!((hb.intermediates.d3 - 7.0 / 9.0).abs() <= 1e-15);
        assert!((hb.intermediates.r - 4.0 / 9.0).abs() <= 1e-15);
        assert_eq!(hb.case, HankelCase::CaseII);
        assert!((hb.bound - 47.0 / 18.0).abs() <= 1e-14);
        assert!((hb.quadratic_bound - hb.cases_bound.unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn hankel_requires_real_alpha() {
        let ci = ClassParams::new(C64::new(0.0, 1.0)).unwrap();
        assert!(matches!(
            hankel_second_bound(&ci, &halfplane(), HankelMethod::Quadratic),
            Err(BoundsError::RealAlphaRequired(_))
        ));
    }

    #[test]
    fn bounds_positive_and_finite_across_panel() {
        let alphas = [
            C64::new(0.0, 0.0),
            C64::new(0.5, 0.0),
            C64::new(1.0, 0.0),
            C64::new(2.0, 0.0),
            C64::new(0.0, 1.0),
            C64::new(1.0, 1.0),
        ];
        let specs = [
            PhiSpec::HalfPlane,
            PhiSpec::Exponential,
            PhiSpec::SqrtLemniscate,
            PhiSpec::Janowski { a: 0.5, b: -0.5 },
        ];
        let ok = |x: f64| x.is_finite() && x > 0.0;
        for spec in &specs {
            for &av in &alphas {
                let cp = ClassParams::new(av).unwrap();
                for n in 2..=6 {
                    assert!(ok(taylor_coeff_bound(&cp, spec, n).unwrap()));
                }
                let lb = log_coeff_bounds(&cp, spec).unwrap();
                assert!(ok(lb.g1) && ok(lb.g2));
                let ib = inverse_coeff_bounds(&cp, spec).unwrap();
                assert!(ok(ib.b2) && ok(ib.b3));
                for mu in [0.0, 1.0, 2.0] {
                    assert!(ok(
                        fekete_szego_inverse_bound(&cp, spec, C64::new(mu, 0.0)).unwrap()
                    ));
                }
                let rb = distortion_bounds(&cp, spec, 0.5, 48, Variant::AsProved).unwrap();
                assert!(ok(rb.interval.lo) && ok(rb.interval.hi));
                let gb = growth_bounds(&cp, spec, 0.5, 48, Variant::AsProved).unwrap();
                assert!(ok(gb.interval.lo) && ok(gb.interval.hi));
                if cp.is_real() {
                    assert!(ok(lb.g3.unwrap().value));
                    assert!(ok(ib.b4.unwrap().value));
                    let hb = hankel_second_bound(&cp, spec, HankelMethod::Cases).unwrap();
                    assert!(ok(hb.bound) && ok(hb.quadratic_bound));
                }
            }
        }
    }

    #[test]
    fn h_branch_values_continuous_across_shared_boundaries() {
        // Sampled boundary points between regions whose branch formulas
        // differ; values δ on either side must agree to 1e-3.
        let delta = 1e-6;
        let mut checks = 0;
        let mut points: Vec<(f64, f64)> = Vec::new();
        for t in [0.0, 0.3] {
            points.push((t, -1.0)); // D1 | D3
        }
        points.push((0.2, 1.0)); // D1 | D5
        for t in [1.0, 1.8] {
            points.push((t, 1.0)); // D2 | D5
        }
        for t in [0.8, 1.2, 1.7] {
            points.push((t, cube_lower(t))); // D2 | D8
        }
        for t in [0.7, 1.5] {
            points.push((t, -2.0 / 3.0 * (t + 1.0))); // D4 | D8
        }
        for t in [2.5, 3.5] {
            points.push((t, -2.0 / 3.0 * (t + 1.0))); // D4 | D9
        }
        for t in [2.7, 3.5] {
            points.push((t, (t * t + 8.0) / 12.0)); // D6 | D10
        }
        for t in [2.5, 3.3, 4.5] {
            points.push((t, rational_plus(t))); // D9 | D10, D9 | D11
        }
        for t in [4.5, 5.5] {
            points.push((t, rational_minus(t))); // D11 | D12
        }
        for t in [4.3, 6.0] {
            points.push((t, 2.0 / 3.0 * (t - 1.0))); // D12 | D7
        }
        assert!(points.len() >= 20);
        for (q1, q2) in points {
            let above = eval_h(q1, q2 + delta).unwrap();
            let below = eval_h(q1, q2 - delta).unwrap();
            assert!(
                (above.value - below.value).abs() <= 1e-3,
                "jump at ({q1}, {q2}): {} ({:?}) vs {} ({:?})",
                above.value,
                above.region,
                below.value,
                below.region
            );
            checks += 1;
        }
        assert!(checks >= 20);
    }
}
