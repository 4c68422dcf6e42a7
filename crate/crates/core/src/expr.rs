//! Exact closed-form values built from rationals, π, sums, products and
//! rational powers.
//!
//! Every value produced through the public constructors and operators is
//! kept in a canonical sum-of-products form: rational constants are folded,
//! like terms are collected, powers of a common base are merged, and
//! rational radicals are reduced to square-free style radicands (perfect
//! powers are pulled out into the coefficient). No radical denesting is
//! attempted; equality of two closed forms is decided numerically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr {
    Rational(BigRational),
    Pi,
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, BigRational),
}

/// Base → exponent. Positive integer `Rational` keys are (pseudo)primes.
type Factors = BTreeMap<Expr, BigRational>;

#[derive(Clone, Debug)]
struct Term {
    coeff: BigRational,
    factors: Factors,
}

/// Trial division bound for radicand factorisation.
const TRIAL_LIMIT: u64 = 1 << 14;

fn is_radicand_key(e: &Expr) -> bool {
    matches!(e, Expr::Rational(q) if q.is_integer() && q.numer() > &BigInt::one())
}

fn int_exponent(e: &BigRational) -> Option<i32> {
    if e.is_integer() {
        e.numer().to_i32()
    } else {
        None
    }
}

fn rational_powi(q: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(q.clone(), e as usize)
    } else {
        num_traits::pow(q.recip(), e.unsigned_abs() as usize)
    }
}

/// Prime factorisation by trial division; an unfactored cofactor is
/// reported as one entry (after checking whether it is a perfect power).
fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut n = n.abs();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut k = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            k += 1;
        }
        if k > 0 {
            out.push((bd, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let mut pushed = false;
        for k in (2..=6u32).rev() {
            let r = n.nth_root(k);
            if num_traits::pow(r.clone(), k as usize) == n {
                out.push((r, k));
                pushed = true;
                break;
            }
        }
        if !pushed {
            out.push((n, 1));
        }
    }
    out
}

impl Term {
    fn one() -> Self {
        Term {
            coeff: BigRational::one(),
            factors: Factors::new(),
        }
    }

    fn constant(q: BigRational) -> Self {
        Term {
            coeff: q,
            factors: Factors::new(),
        }
    }

    fn single(base: Expr, e: BigRational) -> Self {
        let mut factors = Factors::new();
        factors.insert(base, e);
        Term {
            coeff: BigRational::one(),
            factors,
        }
        .normalize()
    }

    /// Removes zero exponents and moves integer powers of rational bases
    /// into the coefficient (radicand exponents are reduced into `(0, 1)`).
    fn normalize(mut self) -> Self {
        if self.coeff.is_zero() {
            self.factors.clear();
            return self;
        }
        let mut out = Factors::new();
        for (base, e) in std::mem::take(&mut self.factors) {
            if e.is_zero() {
                continue;
            }
            if let Expr::Rational(q) = &base {
                if q.is_one() {
                    continue;
                }
                if is_radicand_key(&base) {
                    let k = e.floor();
                    let ki = k.numer().to_i32().expect("radicand exponent overflow");
                    self.coeff *= rational_powi(q, ki);
                    let f = e - k;
                    if !f.is_zero() {
                        out.insert(base, f);
                    }
                    continue;
                }
                if let Some(ki) = int_exponent(&e) {
                    self.coeff *= rational_powi(q, ki);
                    continue;
                }
            }
            out.insert(base, e);
        }
        self.factors = out;
        self
    }

    fn mul(&self, other: &Term) -> Term {
        let mut factors = self.factors.clone();
        for (b, e) in &other.factors {
            let entry = factors.entry(b.clone()).or_insert_with(BigRational::zero);
            *entry += e;
        }
        Term {
            coeff: &self.coeff * &other.coeff,
            factors,
        }
        .normalize()
    }

    fn pow(&self, e: &BigRational) -> Term {
        if e.is_zero() {
            return Term::one();
        }
        if let Some(k) = int_exponent(e) {
            let factors = self
                .factors
                .iter()
                .map(|(b, x)| (b.clone(), x * e))
                .collect();
            return Term {
                coeff: rational_powi(&self.coeff, k),
                factors,
            }
            .normalize();
        }
        if self.coeff.is_negative() {
            return Term::single(self.to_expr(), e.clone());
        }
        let mut acc = rational_power(&self.coeff, e);
        for (b, x) in &self.factors {
            let known_nonnegative = matches!(b, Expr::Pi) || is_radicand_key(b);
            let t = if known_nonnegative || !x.is_integer() {
                Term::single(b.clone(), x * e)
            } else {
                Term::single(Expr::Power(Box::new(b.clone()), x.clone()), e.clone())
            };
            acc = acc.mul(&t);
        }
        acc
    }

    fn to_expr(&self) -> Expr {
        let mut coeff = self.coeff.clone();
        let mut groups: BTreeMap<BigInt, Vec<(BigInt, BigRational)>> = BTreeMap::new();
        let mut others: Vec<(Expr, BigRational)> = Vec::new();
        for (b, e) in &self.factors {
            match b {
                Expr::Rational(q) if is_radicand_key(b) => groups
                    .entry(e.denom().clone())
                    .or_default()
                    .push((q.numer().clone(), e.clone())),
                _ => others.push((b.clone(), e.clone())),
            }
        }
        let mut radicals: Vec<(Expr, BigRational)> = Vec::new();
        for (q, members) in groups {
            // Radicals whose primes all divide the coefficient's denominator
            // are written as negative powers, e.g. 1/sqrt(6) instead of sqrt(6)/6.
            let negative = members.iter().all(|(p, _)| (coeff.denom() % p).is_zero());
            let mut w = BigInt::one();
            for (p, f) in &members {
                let c = if negative {
                    coeff *= BigRational::from_integer(p.clone());
                    -(f - BigRational::one()) * BigRational::from_integer(q.clone())
                } else {
                    f * BigRational::from_integer(q.clone())
                };
                let c = c.to_integer().to_u32().expect("radical exponent overflow");
                w *= num_traits::pow(p.clone(), c as usize);
            }
            let exp = BigRational::new(
                if negative {
                    -BigInt::one()
                } else {
                    BigInt::one()
                },
                q,
            );
            radicals.push((Expr::Rational(BigRational::from_integer(w)), exp));
        }
        let mut children = Vec::new();
        if !coeff.is_one() || (radicals.is_empty() && others.is_empty()) {
            children.push(Expr::Rational(coeff));
        }
        let mut factors: Vec<(Expr, BigRational)> = radicals.into_iter().chain(others).collect();
        factors.sort_by(|a, b| display_rank(&a.0).cmp(&display_rank(&b.0)).then(a.cmp(b)));
        for (b, e) in factors {
            children.push(if e.is_one() {
                b
            } else {
                Expr::Power(Box::new(b), e)
            });
        }
        if children.len() == 1 {
            children.pop().unwrap()
        } else {
            Expr::Product(children)
        }
    }
}

fn display_rank(e: &Expr) -> u8 {
    match e {
        Expr::Pi => 0,
        Expr::Rational(_) => 1,
        Expr::Sum(_) => 2,
        _ => 3,
    }
}

/// `q^e` for rational `q`; negative `q` with fractional `e` stays symbolic.
fn rational_power(q: &BigRational, e: &BigRational) -> Term {
    if q.is_zero() {
        assert!(e.is_positive(), "zero raised to a non-positive power");
        return Term::constant(BigRational::zero());
    }
    if let Some(k) = int_exponent(e) {
        return Term::constant(rational_powi(q, k));
    }
    if q.is_negative() {
        return Term::single(Expr::Rational(q.clone()), e.clone());
    }
    let mut t = Term::one();
    for (sign, n) in [(1i64, q.numer()), (-1, q.denom())] {
        for (p, k) in factor(n) {
            let x = e * BigRational::from_integer(BigInt::from(sign * k as i64));
            let key = Expr::Rational(BigRational::from_integer(p));
            let entry = t.factors.entry(key).or_insert_with(BigRational::zero);
            *entry += x;
        }
    }
    t.normalize()
}

fn combine(terms: Vec<Term>) -> Vec<Term> {
    let mut acc: BTreeMap<Factors, BigRational> = BTreeMap::new();
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        *acc.entry(t.factors).or_insert_with(BigRational::zero) += t.coeff;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(factors, coeff)| Term { coeff, factors })
        .collect()
}

/// Largest positive integer power of a sum that is multiplied out.
const EXPAND_LIMIT: i32 = 8;

fn expandable(b: &Expr, e: &BigRational) -> Option<i32> {
    match (b, int_exponent(e)) {
        (Expr::Sum(_), Some(k)) if (1..=EXPAND_LIMIT).contains(&k) => Some(k),
        _ => None,
    }
}

/// Multiplies out sums that occur as small positive integer powers.
fn expand_unit_sums(terms: Vec<Term>) -> Vec<Term> {
    let mut out = Vec::new();
    let mut stack = terms;
    while let Some(mut t) = stack.pop() {
        let unit = t
            .factors
            .iter()
            .find_map(|(b, e)| expandable(b, e).map(|k| (b.clone(), k)));
        match unit {
            Some((b, k)) => {
                t.factors.remove(&b);
                let base = b.terms();
                let mut acc = vec![t];
                for _ in 0..k {
                    let mut next = Vec::new();
                    for x in &acc {
                        for s in &base {
                            next.push(x.mul(s));
                        }
                    }
                    acc = combine(next);
                }
                stack.extend(acc);
            }
            None => out.push(t),
        }
    }
    combine(out)
}

fn multiply_terms(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.mul(y));
        }
    }
    expand_unit_sums(out)
}

/// Positive rational content `gcd(numerators) / lcm(denominators)`.
fn content(terms: &[Term]) -> BigRational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for t in terms {
        g = g.gcd(t.coeff.numer());
        l = l.lcm(t.coeff.denom());
    }
    BigRational::new(g, l)
}

fn power_terms(ts: Vec<Term>, e: &BigRational) -> Vec<Term> {
    if e.is_zero() {
        return vec![Term::one()];
    }
    if ts.is_empty() {
        assert!(e.is_positive(), "zero raised to a non-positive power");
        return ts;
    }
    if ts.len() == 1 {
        return vec![ts[0].pow(e)];
    }
    let g = content(&ts);
    let reduced: Vec<Term> = ts
        .into_iter()
        .map(|t| Term {
            coeff: t.coeff / &g,
            factors: t.factors,
        })
        .collect();
    let base = sum_expr(&reduced);
    expand_unit_sums(vec![
        rational_power(&g, e).mul(&Term::single(base, e.clone()))
    ])
}

fn sum_expr(terms: &[Term]) -> Expr {
    match terms.len() {
        0 => Expr::Rational(BigRational::zero()),
        1 => terms[0].to_expr(),
        _ => Expr::Sum(terms.iter().map(Term::to_expr).collect()),
    }
}

impl Expr {
    fn terms(&self) -> Vec<Term> {
        match self {
            Expr::Rational(q) => {
                if q.is_zero() {
                    Vec::new()
                } else {
                    vec![Term::constant(q.clone())]
                }
            }
            Expr::Pi => vec![Term::single(Expr::Pi, BigRational::one())],
            Expr::Sum(cs) => expand_unit_sums(cs.iter().flat_map(|c| c.terms()).collect()),
            Expr::Product(cs) => cs
                .iter()
                .fold(vec![Term::one()], |acc, c| multiply_terms(&acc, &c.terms())),
            Expr::Power(b, e) => expand_unit_sums(power_terms(b.terms(), e)),
        }
    }

    fn from_terms(ts: Vec<Term>) -> Expr {
        sum_expr(&ts)
    }

    /// Canonical form of an arbitrary tree.
    pub fn canonical(&self) -> Expr {
        Expr::from_terms(self.terms())
    }

    pub fn rational(q: BigRational) -> Expr {
        Expr::Rational(q)
    }

    pub fn int(n: i64) -> Expr {
        Expr::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Expr {
        Expr::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn pi() -> Expr {
        Expr::Pi
    }

    pub fn zero() -> Expr {
        Expr::int(0)
    }

    pub fn one() -> Expr {
        Expr::int(1)
    }

    pub fn pow(&self, e: &BigRational) -> Expr {
        Expr::from_terms(power_terms(self.terms(), e))
    }

    pub fn powi(&self, e: i64) -> Expr {
        self.pow(&BigRational::from_integer(BigInt::from(e)))
    }

    pub fn sqrt(&self) -> Expr {
        self.pow(&BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn sum<I: IntoIterator<Item = Expr>>(items: I) -> Expr {
        let ts: Vec<Term> = items.into_iter().flat_map(|e| e.terms()).collect();
        Expr::from_terms(expand_unit_sums(ts))
    }

    pub fn product<I: IntoIterator<Item = Expr>>(items: I) -> Expr {
        let ts = items
            .into_iter()
            .fold(vec![Term::one()], |acc, c| multiply_terms(&acc, &c.terms()));
        Expr::from_terms(ts)
    }

    pub fn scale(&self, q: &BigRational) -> Expr {
        let ts = self
            .terms()
            .into_iter()
            .map(|t| {
                Term {
                    coeff: t.coeff * q,
                    factors: t.factors,
                }
                .normalize()
            })
            .collect();
        Expr::from_terms(combine(ts))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Expr::Rational(q) if q.is_zero())
    }

    /// The rational value, if the canonical form is a constant.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Expr::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// The rational coefficient multiplying π when the value is `q·π`.
    pub fn as_rational_times_pi(&self) -> Option<BigRational> {
        match self {
            Expr::Pi => Some(BigRational::one()),
            Expr::Product(cs) if cs.len() == 2 => match (&cs[0], &cs[1]) {
                (Expr::Rational(q), Expr::Pi) => Some(q.clone()),
                _ => None,
            },
            Expr::Rational(q) if q.is_zero() => Some(BigRational::zero()),
            _ => None,
        }
    }
}

impl From<BigRational> for Expr {
    fn from(q: BigRational) -> Expr {
        Expr::Rational(q)
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Expr {
        Expr::int(n)
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::sum([self, rhs])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::sum([self, -rhs])
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::product([self, rhs])
    }
}

impl Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::product([self, rhs.powi(-1)])
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(&-BigRational::one())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Factor inside a product or under an exponent: wrap anything that is not
/// atomic.
fn fmt_atom(e: &Expr) -> String {
    match e {
        Expr::Rational(q) if q.is_integer() && !q.is_negative() => fmt_rational(q),
        Expr::Pi => "pi".into(),
        Expr::Power(_, x) if x.is_positive() => e.to_string(),
        _ => format!("({e})"),
    }
}

fn fmt_power(base: &Expr, e: &BigRational) -> String {
    if e.is_one() {
        return fmt_atom(base);
    }
    if *e == BigRational::new(BigInt::one(), BigInt::from(2)) {
        return format!("sqrt({base})");
    }
    if e.is_integer() {
        format!("{}^{}", fmt_atom(base), e)
    } else {
        format!("{}^({})", fmt_atom(base), fmt_rational(e))
    }
}

fn fmt_product(f: &mut fmt::Formatter<'_>, children: &[Expr]) -> fmt::Result {
    let mut coeff = BigRational::one();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for c in children {
        match c {
            Expr::Rational(q) => coeff *= q,
            Expr::Power(b, e) if e.is_negative() => den.push(fmt_power(b, &-e)),
            Expr::Power(b, e) => num.push(fmt_power(b, e)),
            other => num.push(fmt_atom(other)),
        }
    }
    if coeff.is_negative() {
        write!(f, "-")?;
    }
    let n = coeff.numer().abs();
    if !n.is_one() || num.is_empty() {
        num.insert(0, n.to_string());
    }
    if !coeff.denom().is_one() {
        den.insert(0, coeff.denom().to_string());
    }
    write!(f, "{}", num.join("*"))?;
    match den.len() {
        0 => Ok(()),
        1 => write!(f, "/{}", den[0]),
        _ => write!(f, "/({})", den.join("*")),
    }
}

/// Writes a sum, pulling out rational content and non-radical factors that
/// occur with the same exponent in every term.
fn fmt_sum(f: &mut fmt::Formatter<'_>, children: &[Expr]) -> fmt::Result {
    let terms = expand_unit_sums(children.iter().flat_map(|c| c.terms()).collect());
    if terms.len() >= 2 {
        let g = content(&terms);
        let mut common: Vec<(Expr, BigRational)> = terms[0]
            .factors
            .iter()
            .filter(|(b, _)| !matches!(b, Expr::Rational(_)))
            .filter(|(b, e)| terms.iter().all(|t| t.factors.get(*b) == Some(*e)))
            .map(|(b, e)| (b.clone(), e.clone()))
            .collect();
        // Pull out a sign only when no term is positive.
        let all_negative = terms.iter().all(|t| t.coeff.is_negative());
        let sign = if all_negative {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        let g = g * &sign;
        if !g.is_one() || !common.is_empty() {
            let reduced = combine(
                terms
                    .iter()
                    .map(|t| {
                        let mut factors = t.factors.clone();
                        for (b, _) in &common {
                            factors.remove(b);
                        }
                        Term {
                            coeff: &t.coeff / &g,
                            factors,
                        }
                    })
                    .collect(),
            );
            let inner: Vec<Expr> = reduced.iter().map(Term::to_expr).collect();
            let mut children = vec![Expr::Rational(g)];
            common.sort_by(|a, b| display_rank(&a.0).cmp(&display_rank(&b.0)).then(a.cmp(b)));
            for (b, e) in common {
                children.push(if e.is_one() {
                    b
                } else {
                    Expr::Power(Box::new(b), e)
                });
            }
            children.push(Expr::Sum(inner));
            return fmt_product(f, &children);
        }
    }
    let mut shown: Vec<String> = children.iter().map(ToString::to_string).collect();
    if let Some(k) = shown.iter().position(|s| !s.starts_with('-')) {
        let first = shown.remove(k);
        shown.insert(0, first);
    }
    for (i, s) in shown.into_iter().enumerate() {
        match (i, s.strip_prefix('-')) {
            (0, _) => write!(f, "{s}")?,
            (_, Some(rest)) => write!(f, " - {rest}")?,
            (_, None) => write!(f, " + {s}")?,
        }
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(q) => write!(f, "{}", fmt_rational(q)),
            Expr::Pi => write!(f, "pi"),
            Expr::Sum(cs) => fmt_sum(f, cs),
            Expr::Product(cs) => fmt_product(f, cs),
            Expr::Power(_, e) if e.is_negative() => fmt_product(f, std::slice::from_ref(self)),
            Expr::Power(b, e) => write!(f, "{}", fmt_power(b, e)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn half() -> BigRational {
        ratio(1, 2)
    }

    #[test]
    fn constants_fold() {
        let e = Expr::int(3) + Expr::frac(1, 2) - Expr::int(2);
        assert_eq!(e, Expr::frac(3, 2));
        assert_eq!(e.to_string(), "3/2");
    }

    #[test]
    fn perfect_powers_are_extracted() {
        assert_eq!(Expr::int(12).sqrt().to_string(), "2*sqrt(3)");
        assert_eq!(Expr::int(16).pow(&ratio(3, 4)), Expr::int(8));
        assert_eq!(Expr::frac(9, 4).sqrt(), Expr::frac(3, 2));
    }

    #[test]
    fn radicals_multiply() {
        let e = Expr::int(2).sqrt() * Expr::int(3).sqrt();
        assert_eq!(e.to_string(), "sqrt(6)");
        let e = Expr::int(6).sqrt() * Expr::int(6).sqrt();
        assert_eq!(e, Expr::int(6));
    }

    #[test]
    fn inverse_radical_in_denominator() {
        let e = Expr::pi() / (Expr::int(12) * Expr::int(6).sqrt());
        assert_eq!(e.to_string(), "pi/(12*sqrt(6))");
    }

    #[test]
    fn like_terms_collect() {
        let s = Expr::int(5).sqrt();
        let e = s.clone() + s.clone() * Expr::int(2) + Expr::one();
        assert_eq!(e.to_string(), "1 + 3*sqrt(5)");
        assert_eq!(e.clone() - e, Expr::zero());
    }

    #[test]
    fn conjugates_multiply_out() {
        let s = Expr::int(6).sqrt();
        let e = (Expr::one() + s.clone()) * (Expr::one() - s);
        assert_eq!(e, Expr::int(-5));
    }

    #[test]
    fn sum_powers_merge() {
        let b = Expr::one() + Expr::int(6).sqrt();
        let e = b.pow(&ratio(3, 2)) * b.pow(&half());
        assert_eq!(e.to_string(), "7 + 2*sqrt(6)");
        let e = b.pow(&ratio(-21, 2));
        assert_eq!(e.to_string(), "1/(1 + sqrt(6))^(21/2)");
    }

    #[test]
    fn content_is_pulled_out_of_power_bases() {
        let b = Expr::int(8) + Expr::int(8) * Expr::int(3).sqrt();
        let e = b.sqrt();
        assert_eq!(e.to_string(), "2*sqrt(2)*sqrt(1 + sqrt(3))");
    }

    #[test]
    fn negative_base_stays_symbolic() {
        let e = Expr::int(-2).sqrt();
        assert!(matches!(e, Expr::Power(..)));
        assert_eq!(Expr::int(-2).powi(3), Expr::int(-8));
    }

    #[test]
    fn pi_rational_detection() {
        let e = Expr::pi() * Expr::frac(5, 32);
        assert_eq!(e.as_rational_times_pi(), Some(ratio(5, 32)));
        assert_eq!(e.to_string(), "5*pi/32");
    }

    #[test]
    fn display_of_common_factors() {
        let base = Expr::one() + Expr::int(6).sqrt();
        let e = Expr::pi()
            * (Expr::int(3) + Expr::int(5) * Expr::int(6).sqrt())
            * base.pow(&ratio(-21, 2))
            * Expr::frac(11, 7);
        assert_eq!(
            e.to_string(),
            "11*pi*(3 + 5*sqrt(6))/(7*(1 + sqrt(6))^(21/2))"
        );
    }

    #[test]
    fn canonical_is_idempotent() {
        let base = Expr::int(9) + Expr::int(2) * Expr::int(26).sqrt();
        let e = Expr::pi() * base.pow(&ratio(-7, 2)) * (Expr::int(3) + Expr::int(26).sqrt());
        assert_eq!(e.canonical(), e);
    }
}
