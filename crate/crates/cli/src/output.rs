//! Deterministic CSV and plot-script emission.
//!
//! All numeric formatting is fixed so that identical experiment
//! specifications produce byte-identical files: error columns use
//! table-style scientific notation with five decimals in the mantissa
//! (e.g. `2.82050e-04`) next to full-precision raw columns; general data
//! columns use 12-decimal scientific notation; rates use two decimals.

use crate::experiments::{BoundednessRow, BoundednessSummary, RegionTableRow, SolveOutput};
use dbweno_core::RateReport;
use std::fmt::Write as _;

/// Table-style scientific notation: 5-decimal mantissa, signed two-digit
/// exponent (`2.82050e-04`).
pub fn sci5(x: f64) -> String {
    sci(x, 5)
}

/// General data formatting: 12-decimal mantissa scientific notation.
pub fn sci12(x: f64) -> String {
    sci(x, 12)
}

/// Full-precision (round-trippable) scientific notation for raw columns.
pub fn raw(x: f64) -> String {
    sci(x, 17)
}

fn sci(x: f64, decimals: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{:.*e}", decimals, x);
    // Rust emits exponents like `e-4`/`e4`; normalize to `e-04`/`e+04`.
    let (mantissa, exp) = s.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("exponent");
    format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
}

/// Two-decimal rate formatting.
pub fn rate2(x: f64) -> String {
    format!("{x:.2}")
}

/// Convergence CSV: `n,e_linf,rate_linf,e_l1,rate_l1,e_linf_raw,e_l1_raw`.
/// The first row has empty rate fields.
pub fn converge_csv(report: &RateReport) -> String {
    let mut out = String::from("n,e_linf,rate_linf,e_l1,rate_l1,e_linf_raw,e_l1_raw\n");
    for (j, &n) in report.grid_sizes.iter().enumerate() {
        let rate_linf = if j == 0 {
            String::new()
        } else {
            rate2(report.rates_linf[j - 1])
        };
        let rate_l1 = if j == 0 {
            String::new()
        } else {
            rate2(report.rates_l1[j - 1])
        };
        writeln!(
            out,
            "{n},{},{rate_linf},{},{rate_l1},{},{}",
            sci5(report.errors_linf[j]),
            sci5(report.errors_l1[j]),
            raw(report.errors_linf[j]),
            raw(report.errors_l1[j]),
        )
        .expect("string write");
    }
    out
}

/// Boundedness CSV:
/// `x,db3,db4,lag3,lag4,m,M,viol3,viol4,viol_lag3,viol_lag4` plus a
/// trailing `#`-comment summary line with per-method violation counts.
pub fn boundedness_csv(rows: &[BoundednessRow], summary: &BoundednessSummary) -> String {
    let mut out = String::from("x,db3,db4,lag3,lag4,m,M,viol3,viol4,viol_lag3,viol_lag4\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            sci12(r.x),
            sci12(r.db3),
            sci12(r.db4),
            sci12(r.lag3),
            sci12(r.lag4),
            sci12(r.m),
            sci12(r.big_m),
            r.viol3 as u8,
            r.viol4 as u8,
            r.viol_lag3 as u8,
            r.viol_lag4 as u8,
        )
        .expect("string write");
    }
    writeln!(
        out,
        "# violations db3={} db4={} lag3={} lag4={}",
        summary.viol3, summary.viol4, summary.viol_lag3, summary.viol_lag4
    )
    .expect("string write");
    out
}

/// Region CSV: `r,lo,hi,weight`.
pub fn region_csv(rows: &[RegionTableRow]) -> String {
    let mut out = String::from("r,lo,hi,weight\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            sci12(r.r),
            sci12(r.lo),
            sci12(r.hi),
            sci12(r.weight)
        )
        .expect("string write");
    }
    out
}

/// Solve CSV: `x,u0,uT` plus a `#`-comment summary footer.
pub fn solve_csv(out_data: &SolveOutput) -> String {
    let mut out = String::from("x,u0,uT\n");
    for i in 0..out_data.x.len() {
        writeln!(
            out,
            "{},{},{}",
            sci12(out_data.x[i]),
            sci12(out_data.u0[i]),
            sci12(out_data.ut[i])
        )
        .expect("string write");
    }
    let r = &out_data.result;
    writeln!(
        out,
        "# summary steps={} min_u0={} max_u0={} min_uT={} max_uT={} overshoot={}",
        r.time_steps,
        raw(r.min_u0),
        raw(r.max_u0),
        raw(r.min_ut),
        raw(r.max_ut),
        raw(r.overshoot)
    )
    .expect("string write");
    out
}

/// A small tool-agnostic plotting script (gnuplot syntax, documented in the
/// README) referencing the emitted CSV.
pub fn plot_script(kind: &str, csv_path: &str) -> String {
    let body = match kind {
        "converge" => format!(
            "set logscale xy\nset datafile separator ','\nset xlabel 'n'\nset ylabel 'error'\n\
             plot '{csv_path}' skip 1 using 1:6 with linespoints title 'L_inf', \\\n     \
             '{csv_path}' skip 1 using 1:7 with linespoints title 'L_1'\n"
        ),
        "boundedness" => format!(
            "set datafile separator ','\nset xlabel 'x'\n\
             plot '{csv_path}' skip 1 using 1:2 with points title 'DB3', \\\n     \
             '{csv_path}' skip 1 using 1:3 with points title 'DB4', \\\n     \
             '{csv_path}' skip 1 using 1:4 with lines title 'Lagrange3', \\\n     \
             '{csv_path}' skip 1 using 1:5 with lines title 'Lagrange4', \\\n     \
             '{csv_path}' skip 1 using 1:6 with lines title 'm', \\\n     \
             '{csv_path}' skip 1 using 1:7 with lines title 'M'\n"
        ),
        "region" => format!(
            "set datafile separator ','\nset xlabel 'r'\nset ylabel 'w0'\n\
             plot '{csv_path}' skip 1 using 1:2 with lines title 'lower', \\\n     \
             '{csv_path}' skip 1 using 1:3 with lines title 'upper', \\\n     \
             '{csv_path}' skip 1 using 1:4 with lines title 'weight'\n"
        ),
        _ => format!(
            "set datafile separator ','\nset xlabel 'x'\nset ylabel 'u'\n\
             plot '{csv_path}' skip 1 using 1:2 with lines title 'u0', \\\n     \
             '{csv_path}' skip 1 using 1:3 with points title 'u(T)'\n"
        ),
    };
    format!("# gnuplot script generated by dbweno; run: gnuplot -persist <this file>\n{body}")
}
