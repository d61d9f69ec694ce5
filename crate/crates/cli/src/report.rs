//! Report documents emitted by the CLI. Field order is fixed by the struct
//! definitions and numbers serialize as shortest round-trip-exact decimals,
//! so identical inputs produce byte-identical JSON.

use serde::Serialize;
use subord_core::bounds::{
    distortion_bounds, fekete_szego_inverse_bound, growth_bounds, hankel_second_bound,
    inverse_coeff_bounds, log_coeff_bounds, taylor_coeff_bound, BoundsError, Gamma2Branch,
    HResult, HankelMethod, Variant, H_CLASSIFICATION_NOTE,
};
use subord_core::oracle::VerificationReport;
use subord_core::phi::{ClassParams, PhiSpec};
use subord_core::series::C64;

#[derive(Debug, Clone, Serialize)]
pub struct ComplexEcho {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexEcho {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// Echo of the fully-resolved run parameters.
#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub subcommand: String,
    pub phi: PhiSpec,
    pub alpha: ComplexEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_values: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_values: Option<Vec<ComplexEcho>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub functionals: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter_mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur: Option<Vec<ComplexEcho>>,
    pub format: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RadialRow {
    pub r: f64,
    pub variant: Variant,
    pub lower: f64,
    pub upper: f64,
    pub tail_hint: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnRow {
    pub n: usize,
    pub bound: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HEcho {
    pub q1: f64,
    pub q2: f64,
    pub region: String,
    pub value: f64,
}

impl From<HResult> for HEcho {
    fn from(h: HResult) -> Self {
        Self { q1: h.q1, q2: h.q2, region: h.region.to_string(), value: h.value }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FsRow {
    pub mu: ComplexEcho,
    pub bound: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HankelEcho {
    pub bound: f64,
    pub cases_bound: Option<f64>,
    pub quadratic_bound: f64,
    pub case: String,
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

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub distortion: Vec<RadialRow>,
    pub growth: Vec<RadialRow>,
    pub an_bounds: Vec<AnRow>,
    pub gamma1_bound: f64,
    pub gamma2_bound: f64,
    pub gamma2_branch: Gamma2Branch,
    pub gamma3_bound: Option<f64>,
    pub gamma3_h: Option<HEcho>,
    #[serde(rename = "A2_bound")]
    pub a2_bound: f64,
    #[serde(rename = "A3_bound")]
    pub a3_bound: f64,
    #[serde(rename = "A4_bound")]
    pub a4_bound: Option<f64>,
    #[serde(rename = "A4_h")]
    pub a4_h: Option<HEcho>,
    pub fekete_szego: Vec<FsRow>,
    pub hankel: Option<HankelEcho>,
}

/// Extra series diagnostics for the series-debug subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesDebugReport {
    pub phi_coefficients: Vec<f64>,
    pub extremal_coefficients: Vec<ComplexEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schwarz_coefficients: Option<Vec<ComplexEcho>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member_coefficients: Option<Vec<ComplexEcho>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<ComplexEcho>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<ComplexEcho>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hankel2: Option<ComplexEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub membership_residual: Option<f64>,
}

/// The one document shape every subcommand emits.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsReport>,
    pub verification: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series_debug: Option<SeriesDebugReport>,
    pub notes: Vec<String>,
}

/// Assemble the full bounds report for one (φ, α) pair.
pub fn build_bounds_report(
    params: &ClassParams,
    spec: &PhiSpec,
    r_values: &[f64],
    order: usize,
    mu_values: &[C64],
    notes: &mut Vec<String>,
) -> Result<BoundsReport, BoundsError> {
    let mut distortion = Vec::new();
    let mut growth = Vec::new();
    for &r in r_values {
        for variant in [Variant::AsProved, Variant::AsStated] {
            let d = distortion_bounds(params, spec, r, order, variant)?;
            distortion.push(RadialRow {
                r,
                variant,
                lower: d.interval.lo,
                upper: d.interval.hi,
                tail_hint: d.tail_hint,
            });
            let g = growth_bounds(params, spec, r, order, variant)?;
            growth.push(RadialRow {
                r,
                variant,
                lower: g.interval.lo,
                upper: g.interval.hi,
                tail_hint: g.tail_hint,
            });
        }
    }

    let an_bounds = (2..=order)
        .map(|n| Ok(AnRow { n, bound: taylor_coeff_bound(params, spec, n)? }))
        .collect::<Result<Vec<_>, BoundsError>>()?;

    let lb = log_coeff_bounds(params, spec)?;
    let ib = inverse_coeff_bounds(params, spec)?;
    if !params.is_real() {
        notes.push(
            "alpha is not real: gamma3, A4 and Hankel bounds are unavailable".to_string(),
        );
    }
    if lb.g3.is_some() {
        notes.push(H_CLASSIFICATION_NOTE.to_string());
    }

    let fekete_szego = mu_values
        .iter()
        .map(|&mu| {
            Ok(FsRow {
                mu: mu.into(),
                bound: fekete_szego_inverse_bound(params, spec, mu)?,
            })
        })
        .collect::<Result<Vec<_>, BoundsError>>()?;

    let hankel = if params.is_real() {
        let hb = hankel_second_bound(params, spec, HankelMethod::Cases)?;
        notes.extend(hb.notes.iter().cloned());
        Some(HankelEcho {
            bound: hb.bound,
            cases_bound: hb.cases_bound,
            quadratic_bound: hb.quadratic_bound,
            case: hb.case.to_string(),
            d1: hb.intermediates.d1,
            d2: hb.intermediates.d2,
            d3: hb.intermediates.d3,
            p: hb.intermediates.p,
            q: hb.intermediates.q,
            r: hb.intermediates.r,
        })
    } else {
        None
    };

    Ok(BoundsReport {
        distortion,
        growth,
        an_bounds,
        gamma1_bound: lb.g1,
        gamma2_bound: lb.g2,
        gamma2_branch: lb.g2_branch,
        gamma3_bound: lb.g3.map(|b| b.value),
        gamma3_h: lb.g3.map(|b| b.h.into()),
        a2_bound: ib.b2,
        a3_bound: ib.b3,
        a4_bound: ib.b4.map(|b| b.value),
        a4_h: ib.b4.map(|b| b.h.into()),
        fekete_szego,
        hankel,
    })
}
