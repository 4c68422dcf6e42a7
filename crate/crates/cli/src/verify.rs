//! Self-checks: the binomial identities behind the reduction, and randomized
//! comparisons of the exact and iterative routes with quadrature.

use std::fmt::Write as _;

use landen_core::computability::{classify, Verdict, DEFAULT_MAX_DEPTH};
use landen_core::landen::{landen_step_exact, ParameterPoint};
use landen_core::oracle::{
    even_binomial_sum, integrate_float_coeffs, integrate_numeric, odd_binomial_expansion_holds,
    odd_binomial_sum, reduced_denominator_expansion_holds, wz_certificate_holds,
};
use landen_core::reduction::{reduce_function, SymmetricDenominator};
use landen_core::{eval_bigfloat, rat, ratio, BigFloat, EvenPoly, EvenRationalIntegrand, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::output::{CliError, Record, Report, Suite, EXIT_PRECISION};
use crate::Options;

/// Digits at which independent routes are compared.
const VERIFY_DIGITS: u32 = 30;
/// Required relative agreement between independent routes.
const VERIFY_TOL: f64 = 1e-25;
/// Largest N in the binomial identity sweeps.
const MAX_N: i64 = 30;
/// Random cases per randomized suite.
const CASES: usize = 12;

fn rel_gap(a: &BigFloat, b: &BigFloat) -> f64 {
    ((a.clone() - b.clone()) / b.clone())
        .as_float()
        .to_f64()
        .abs()
}

#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    fn into_suite(self, name: &'static str) -> Suite {
        Suite {
            name,
            passed: self.passed,
            failed: self.failed,
        }
    }
}

fn binomial_sums() -> Tally {
    let mut t = Tally::default();
    for n in 1..=MAX_N {
        for k in 1..=n {
            t.record(odd_binomial_sum(k, n).is_ok_and(|(l, r)| l == r));
            t.record(even_binomial_sum(k, n).is_ok_and(|(l, r)| l == r));
        }
    }
    t
}

fn binomial_expansion() -> Tally {
    let mut t = Tally::default();
    for n in 0..=MAX_N {
        t.record(odd_binomial_expansion_holds(n));
    }
    t
}

fn wz_certificates() -> Tally {
    let mut t = Tally::default();
    for n in 2..=MAX_N {
        for k in 1..n {
            t.record(wz_certificate_holds(n, k));
        }
    }
    t
}

fn reduction_expansion(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for p in 1..=6 {
        for _ in 0..CASES {
            let d: Vec<Rational> = (0..p)
                .map(|_| ratio(rng.random_range(-50..=50), rng.random_range(1..=9)))
                .collect();
            t.record(reduced_denominator_expansion_holds(&d));
        }
    }
    t
}

fn monomial(n: usize) -> EvenPoly<Rational> {
    EvenPoly::monomial(rat(1), n)
}

/// A random integrand from a family the exact pipeline is meant to close.
fn closable(rng: &mut ChaCha8Rng, family: usize) -> Option<EvenRationalIntegrand> {
    let q = |rng: &mut ChaCha8Rng, lo: i64, hi: i64| {
        ratio(rng.random_range(lo..=hi), rng.random_range(1..=3))
    };
    let (den, power) = match family {
        0 => {
            let (a, b, c) = (q(rng, -3, 20), q(rng, 1, 9), q(rng, 1, 9));
            if a < rat(0) && &a * &a >= &b * &c {
                return None;
            }
            (
                EvenPoly::new(vec![c, a * rat(2), b]),
                rng.random_range(1..=3),
            )
        }
        1 => {
            let (a1, a2) = (q(rng, 0, 30), q(rng, 0, 30));
            (
                EvenPoly::new(vec![rat(1), a2.clone(), a1 * rat(2), a2, rat(1)]),
                rng.random_range(1..=2),
            )
        }
        _ => {
            let (a, b, r) = (q(rng, 1, 10), q(rng, 1, 9), q(rng, 1, 9));
            (
                EvenPoly::new(vec![rat(1), a, b]).mul(&EvenPoly::new(vec![r, rat(1)])),
                1,
            )
        }
    };
    let max = den.half_degree()? * power as usize - 1;
    EvenRationalIntegrand::new(monomial(rng.random_range(0..=max)), den, power).ok()
}

fn closed_form_vs_quadrature(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for family in 0..3 {
        let mut done = 0;
        while done < CASES {
            let Some(r) = closable(rng, family) else {
                continue;
            };
            done += 1;
            let rep = classify(&r, DEFAULT_MAX_DEPTH);
            let ok = rep.verdict == Verdict::ClosedForm
                && rep.value.as_ref().is_some_and(|e| {
                    let exact = eval_bigfloat(e, VERIFY_DIGITS + 5);
                    let numeric = integrate_numeric(&r, VERIFY_DIGITS);
                    matches!((exact, numeric), (Ok(x), Ok(q)) if rel_gap(&x, &q.value) < VERIFY_TOL)
                });
            t.record(ok);
        }
    }
    t
}

fn random_point(rng: &mut ChaCha8Rng, p: usize) -> ParameterPoint<Rational> {
    let mut draw = || ratio(rng.random_range(1..=60), rng.random_range(1..=6));
    let a = (1..p).map(|_| draw()).collect();
    let b = (0..p).map(|_| draw()).collect();
    ParameterPoint::new(a, b).expect("consistent lengths")
}

fn landen_invariance(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for p in 2..=4 {
        for _ in 0..CASES {
            let r = random_point(rng, p).integrand().expect("positive point");
            let ok = (|| -> landen_core::Result<bool> {
                let before = integrate_numeric(&r, VERIFY_DIGITS)?.value;
                let y = landen_step_exact(&r)?.evaluate(VERIFY_DIGITS + 10)?;
                let after =
                    integrate_float_coeffs(&y.numerator(), &y.denominator(), 1, VERIFY_DIGITS)?
                        .value;
                Ok(rel_gap(&after, &before) < VERIFY_TOL)
            })();
            t.record(ok == Ok(true));
        }
    }
    t
}

fn reduction_invariance(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for p in 1..=3usize {
        for m in 0..=2usize {
            for _ in 0..CASES / 4 {
                let d: Vec<Rational> = (0..p)
                    .map(|_| ratio(rng.random_range(1..=20), rng.random_range(1..=4)))
                    .collect();
                let den = SymmetricDenominator::new(d).expand();
                let max_n = 2 * p * (m + 1) - 1;
                let mut num = vec![Rational::zero(); max_n + 1];
                for c in num.iter_mut() {
                    if rng.random_bool(0.4) {
                        *c = ratio(rng.random_range(1..=9), rng.random_range(1..=3));
                    }
                }
                num[rng.random_range(0..=max_n)] = rat(1);
                let ok = (|| -> landen_core::Result<bool> {
                    let r = EvenRationalIntegrand::new(EvenPoly::new(num), den, m as u32 + 1)?;
                    let reduced = reduce_function(&r)?;
                    let before = integrate_numeric(&r, VERIFY_DIGITS)?.value;
                    let after = integrate_numeric(&reduced, VERIFY_DIGITS)?.value;
                    Ok(rel_gap(&after, &before) < VERIFY_TOL)
                })();
                t.record(ok == Ok(true));
            }
        }
    }
    t
}

pub fn run(o: &Options) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let suites = vec![
        binomial_sums().into_suite("binomial-sums"),
        binomial_expansion().into_suite("binomial-expansion"),
        wz_certificates().into_suite("wz-certificates"),
        reduction_expansion(&mut rng).into_suite("reduction-expansion"),
        closed_form_vs_quadrature(&mut rng).into_suite("closed-form-vs-quadrature"),
        landen_invariance(&mut rng).into_suite("landen-invariance"),
        reduction_invariance(&mut rng).into_suite("reduction-invariance"),
    ];
    let failed: usize = suites.iter().map(|s| s.failed).sum();
    let passed: usize = suites.iter().map(|s| s.passed).sum();

    let width = suites.iter().map(|s| s.name.len()).max().unwrap_or(0);
    let mut table = format!("{:<width$}  {:>6}  {:>6}\n", "suite", "passed", "failed");
    for s in &suites {
        let _ = writeln!(
            table,
            "{:<width$}  {:>6}  {:>6}",
            s.name, s.passed, s.failed
        );
    }
    let _ = writeln!(table, "{:<width$}  {passed:>6}  {failed:>6}", "total");

    let mut rec = Record::new("verify", o.digits);
    rec.method = Some("oracle");
    rec.status = if failed == 0 {
        "pass".into()
    } else {
        "fail".into()
    };
    rec.suites = Some(suites);
    let _ = writeln!(table, "status  {}", rec.status);
    let (code, message) = if failed == 0 {
        (0, None)
    } else {
        (EXIT_PRECISION, Some(format!("{failed} checks failed")))
    };
    Ok(Report {
        record: rec,
        table,
        code,
        message,
    })
}
