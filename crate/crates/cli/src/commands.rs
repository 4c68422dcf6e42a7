use std::fmt::Write as _;

use landen_core::computability::{
    self, solve_symmetry_family, solve_symmetry_levels, Verdict, DEFAULT_MAX_DEPTH,
};
use landen_core::landen::{
    iterate, IterateOptions, IterationResult, IterationStatus, ParameterPoint,
};
use landen_core::oracle::integrate_numeric;
use landen_core::reduction::reduce_function;
use landen_core::{
    digits_to_bits, eval_expression, ratio, BigFloat, EvenRationalIntegrand, Rational,
};
use num_traits::Zero;

use crate::output::{CliError, FamilyRecord, Record, Report, EXIT_DOMAIN, EXIT_PRECISION};
use crate::Options;

/// Significant digits in the trajectory table, matching the familiar hand-computed layout.
const TABLE_DIGITS: u32 = 6;
/// Extra working digits so the printed ones are all correct.
const GUARD_DIGITS: u32 = 15;

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::ClosedForm => "ClosedForm",
        Verdict::NumericOnly => "NumericOnly",
    }
}

pub fn integrate(r: &EvenRationalIntegrand, o: &Options) -> Result<Report, CliError> {
    let mut rec = Record::new("integrate", o.digits);
    let rep = computability::classify(r, DEFAULT_MAX_DEPTH);
    if let (Verdict::ClosedForm, Some(e)) = (rep.verdict, &rep.value) {
        rec.closed_form = Some(e.to_string());
        rec.decimal = Some(eval_expression(e, o.digits)?);
        rec.method = Some("closed-form");
        return Ok(Report::ok(rec));
    }
    if let Some(x0) = ParameterPoint::from_integrand(r)
        .ok()
        .filter(ParameterPoint::is_positive)
    {
        let res = run_iteration(&x0, o)?;
        return Ok(iteration_report(rec, &res, o, String::new()));
    }
    let q = integrate_numeric(r, o.digits)?;
    rec.decimal = Some(q.value.to_decimal(o.digits));
    rec.method = Some("quadrature");
    Ok(Report::ok(rec))
}

pub fn classify(r: &EvenRationalIntegrand, o: &Options) -> Result<Report, CliError> {
    let mut rec = Record::new("classify", o.digits);
    let rep = computability::classify(r, DEFAULT_MAX_DEPTH);
    rec.verdict = Some(verdict_name(rep.verdict));
    rec.path = Some(rep.path.iter().map(ToString::to_string).collect());
    rec.method = Some("exact");
    if let Some(e) = &rep.value {
        rec.closed_form = Some(e.to_string());
        rec.decimal = Some(eval_expression(e, o.digits)?);
    }
    Ok(Report::ok(rec))
}

pub fn reduce(r: &EvenRationalIntegrand, o: &Options) -> Result<Report, CliError> {
    let reduced = reduce_function(r)?;
    let strings = |c: &[Rational]| c.iter().map(ToString::to_string).collect::<Vec<_>>();
    let mut rec = Record::new("reduce", o.digits);
    rec.method = Some("reduction");
    rec.numerator = Some(if reduced.numerator().is_zero() {
        vec!["0".into()]
    } else {
        strings(reduced.numerator().coeffs())
    });
    rec.denominator = Some(strings(reduced.denominator().coeffs()));
    rec.power = Some(reduced.power());
    Ok(Report::ok(rec))
}

pub fn landen(r: &EvenRationalIntegrand, o: &Options) -> Result<Report, CliError> {
    let x0 = ParameterPoint::from_integrand(r)?;
    let res = run_iteration(&x0, o)?;
    let rec = Record::new("landen", o.digits);
    let table = trajectory_table(&res.trajectory);
    let mut report = iteration_report(rec, &res, o, table);
    report.record.trajectory = Some(
        res.trajectory
            .iter()
            .map(|x| {
                x.a.iter()
                    .chain(&x.b)
                    .map(|v| v.to_decimal(o.digits))
                    .collect()
            })
            .collect(),
    );
    Ok(report)
}

fn run_iteration(x0: &ParameterPoint<Rational>, o: &Options) -> Result<IterationResult, CliError> {
    let prec = digits_to_bits(o.digits + GUARD_DIGITS);
    let tol = match o.tol {
        Some(t) if t > 0.0 && t.is_finite() => BigFloat::from_f64(t, prec),
        Some(t) => {
            return Err(CliError::parse(format!(
                "tolerance must be positive, got {t}"
            )))
        }
        // Quadratic convergence: once successive iterates agree to this,
        // the remaining error is far below the last printed digit.
        None => {
            BigFloat::from_rational(&num_traits::pow(ratio(1, 10), o.digits as usize + 1), prec)
        }
    };
    let opts = IterateOptions {
        digits: o.digits + GUARD_DIGITS,
        tol: Some(tol),
        max_iter: o.max_iter,
    };
    Ok(iterate(x0, &opts)?)
}

fn iteration_report(
    mut rec: Record,
    res: &IterationResult,
    o: &Options,
    preamble: String,
) -> Report {
    rec.method = Some("landen");
    rec.iterations = Some(res.iterations);
    rec.limit = Some(res.limit.to_decimal(o.digits));
    rec.decimal = Some(res.integral.to_decimal(o.digits));
    let (status, code, message) = match res.status {
        IterationStatus::Converged => ("converged".to_string(), 0, None),
        IterationStatus::MaxIterations => (
            "max-iterations".to_string(),
            EXIT_PRECISION,
            Some(format!(
                "no convergence after {} iterations; values are the last iterate",
                res.iterations
            )),
        ),
        IterationStatus::DomainExit(step) => (
            format!("domain-exit at step {step}"),
            EXIT_DOMAIN,
            Some(format!(
                "iterate {step} left the positive orthant; values are the last valid iterate"
            )),
        ),
    };
    rec.status = status;
    let table = preamble + &rec.summary();
    Report {
        record: rec,
        table,
        code,
        message,
    }
}

/// Six significant digits with trailing zeros dropped: `3.00000` prints as `3`.
fn short(x: &BigFloat) -> String {
    let s = x.to_decimal(TABLE_DIGITS);
    if s.contains('e') || !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn trajectory_table(traj: &[ParameterPoint<BigFloat>]) -> String {
    let p = traj[0].p();
    let mut header = vec!["n".to_string()];
    header.extend((1..p).map(|i| format!("a_{i}")));
    header.extend((0..p).map(|i| format!("b_{i}")));
    let rows: Vec<Vec<String>> = traj
        .iter()
        .enumerate()
        .map(|(n, x)| {
            std::iter::once(n.to_string())
                .chain(x.a.iter().chain(&x.b).map(short))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out.push('\n');
    out
}

pub fn family(p: usize, levels: Option<usize>, o: &Options) -> Result<Report, CliError> {
    let fam = match levels {
        Some(l) => solve_symmetry_levels(p, l)?,
        None => solve_symmetry_family(p)?,
    };
    let mut table = format!(
        "palindromic denominators of half-degree {}, parameters d_1..d_{p}; free: {}\n",
        2 * p,
        fam.free
            .iter()
            .map(|i| format!("d_{i}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    for ((b, c), m) in fam.bound.iter().zip(&fam.offset).zip(&fam.matrix) {
        let _ = writeln!(table, "d_{b} = {}", affine(c, m, &fam.free));
    }
    let mut rec = Record::new("family", o.digits);
    rec.method = Some("exact");
    rec.family = Some(FamilyRecord {
        p: fam.p,
        free: fam.free.clone(),
        bound: fam.bound.clone(),
        offset: fam.offset.iter().map(ToString::to_string).collect(),
        matrix: fam
            .matrix
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
    });
    let status = rec.summary();
    Ok(Report {
        table: table + &status,
        record: rec,
        code: 0,
        message: None,
    })
}

/// `c + m_1 d_{f_1} + ...` with zero terms dropped.
fn affine(c: &Rational, m: &[Rational], free: &[usize]) -> String {
    let mut s = String::new();
    if !c.is_zero() {
        s.push_str(&c.to_string());
    }
    for (k, f) in m.iter().zip(free) {
        if k.is_zero() {
            continue;
        }
        let neg = *k < Rational::zero();
        let mag = if neg { -k.clone() } else { k.clone() };
        let coef = if mag == ratio(1, 1) {
            String::new()
        } else {
            format!("{mag}*")
        };
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let _ = write!(s, "{coef}d_{f}");
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
