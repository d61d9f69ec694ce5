//! Rendering of report documents: round-trip-exact JSON, 5-decimal tables,
//! and flat CSV.

use crate::report::Document;
use crate::Format;
use anyhow::Result;

/// Shortest decimal form rounded to 5 places: 1.777... -> "1.77778", 1 -> "1".
pub fn fmt5(v: f64) -> String {
    if !v.is_finite() {
        return "nan".to_string();
    }
    let r = (v * 1e5).round() / 1e5;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r}")
}

pub fn emit(doc: &Document, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(doc)?),
        Format::Table => print_table(doc),
        Format::Csv => print_csv(doc),
    }
    Ok(())
}

fn print_table(doc: &Document) {
    let input = &doc.input;
    println!(
        "{} — phi={} alpha={}+{}i",
        input.subcommand,
        input.phi.label(),
        input.alpha.re,
        input.alpha.im
    );
    if let Some(b) = &doc.bounds {
        println!("\ndistortion (|f'| on |z| = r):");
        for row in &b.distortion {
            println!(
                "  r={:<5} {:>9?}  [{}, {}]  tail<={}",
                row.r,
                row.variant,
                fmt5(row.lower),
                fmt5(row.upper),
                fmt5(row.tail_hint)
            );
        }
        println!("growth (|f|/|z| on |z| = r):");
        for row in &b.growth {
            println!(
                "  r={:<5} {:>9?}  [{}, {}]  tail<={}",
                row.r,
                row.variant,
                fmt5(row.lower),
                fmt5(row.upper),
                fmt5(row.tail_hint)
            );
        }
        println!("taylor coefficient bounds:");
        for row in &b.an_bounds {
            println!("  |a_{}| <= {}", row.n, fmt5(row.bound));
        }
        println!("logarithmic coefficients:");
        println!("  |gamma1| <= {}", fmt5(b.gamma1_bound));
        println!("  |gamma2| <= {}  ({:?})", fmt5(b.gamma2_bound), b.gamma2_branch);
        match (&b.gamma3_bound, &b.gamma3_h) {
            (Some(v), Some(h)) => println!(
                "  |gamma3| <= {}  (q1={}, q2={}, region {})",
                fmt5(*v),
                fmt5(h.q1),
                fmt5(h.q2),
                h.region
            ),
            _ => println!("  |gamma3| unavailable"),
        }
        println!("inverse coefficients:");
        println!("  |A2| <= {}", fmt5(b.a2_bound));
        println!("  |A3| <= {}", fmt5(b.a3_bound));
        match (&b.a4_bound, &b.a4_h) {
            (Some(v), Some(h)) => println!(
                "  |A4| <= {}  (q1={}, q2={}, region {})",
                fmt5(*v),
                fmt5(h.q1),
                fmt5(h.q2),
                h.region
            ),
            _ => println!("  |A4| unavailable"),
        }
        println!("Fekete-Szego (inverse coefficients):");
        for row in &b.fekete_szego {
            println!(
                "  mu={}+{}i: |A3 - mu A2^2| <= {}",
                row.mu.re,
                row.mu.im,
                fmt5(row.bound)
            );
        }
        match &b.hankel {
            Some(h) => {
                println!("second Hankel determinant:");
                println!(
                    "  |A2 A4 - A3^2| <= {}  (case {}, quadratic {})",
                    fmt5(h.bound),
                    h.case,
                    fmt5(h.quadratic_bound)
                );
                println!(
                    "  d1={} d2={} d3={} P={} Q={} R={}",
                    fmt5(h.d1),
                    fmt5(h.d2),
                    fmt5(h.d3),
                    fmt5(h.p),
                    fmt5(h.q),
                    fmt5(h.r)
                );
            }
            None => println!("second Hankel determinant: unavailable"),
        }
    }
    if !doc.verification.is_empty() {
        println!(
            "\n{:<14} {:>12} {:>12} {:>8} {:>10}",
            "functional", "bound", "observed", "ratio", "violations"
        );
        for v in &doc.verification {
            println!(
                "{:<14} {:>12} {:>12} {:>8} {:>10}",
                v.functional,
                fmt5(v.bound),
                fmt5(v.observed_max),
                fmt5(v.sharpness_ratio),
                v.violations
            );
        }
    }
    if let Some(sd) = &doc.series_debug {
        println!("\nphi coefficients: {:?}", sd.phi_coefficients);
        println!(
            "extremal coefficients: {:?}",
            sd.extremal_coefficients.iter().map(|c| c.re).collect::<Vec<_>>()
        );
        if let Some(res) = sd.membership_residual {
            println!("membership residual: {res:e}");
        }
    }
    for note in &doc.notes {
        println!("note: {note}");
    }
}

fn print_csv(doc: &Document) {
    if let Some(b) = &doc.bounds {
        println!("metric,value");
        for row in &b.distortion {
            let tag = format!("[r={}][{:?}]", row.r, row.variant);
            println!("distortion_lower{tag},{}", row.lower);
            println!("distortion_upper{tag},{}", row.upper);
        }
        for row in &b.growth {
            let tag = format!("[r={}][{:?}]", row.r, row.variant);
            println!("growth_lower{tag},{}", row.lower);
            println!("growth_upper{tag},{}", row.upper);
        }
        for row in &b.an_bounds {
            println!("an_bound[n={}],{}", row.n, row.bound);
        }
        println!("gamma1_bound,{}", b.gamma1_bound);
        println!("gamma2_bound,{}", b.gamma2_bound);
        println!("gamma3_bound,{}", opt5_raw(b.gamma3_bound));
        println!("A2_bound,{}", b.a2_bound);
        println!("A3_bound,{}", b.a3_bound);
        println!("A4_bound,{}", opt5_raw(b.a4_bound));
        for row in &b.fekete_szego {
            println!("fs_bound[mu={}+{}i],{}", row.mu.re, row.mu.im, row.bound);
        }
        if let Some(h) = &b.hankel {
            println!("hankel_bound,{}", h.bound);
            println!("hankel_quadratic,{}", h.quadratic_bound);
        }
    }
    if !doc.verification.is_empty() {
        println!("functional,bound,observed_max,sharpness_ratio,violations");
        for v in &doc.verification {
            println!(
                "{},{},{},{},{}",
                v.functional, v.bound, v.observed_max, v.sharpness_ratio, v.violations
            );
        }
    }
}

fn opt5_raw(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "unavailable".to_string())
}
