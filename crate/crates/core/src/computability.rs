//! Deciding which integrands the exact pipeline can evaluate, and the
//! parameter families that are computable by construction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::binomial::binomial_q;
use crate::closed_form::{
    integrate_linear_family, integrate_quartic_family, integrate_sym8_family,
};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::integrand::EvenRationalIntegrand;
use crate::linsolve::{solve, solve_columns};
use crate::poly::{EvenPoly, Poly};
use crate::reduction::{build_ep, convergence_max, reduce_function, SymmetricDenominator};
use crate::scalar::{rat, ratio};

pub const DEFAULT_MAX_DEPTH: usize = 8;

/// Trial division bound when enumerating rational-root candidates.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;
/// Cap on the number of candidate roots tried.
const MAX_CANDIDATES: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    ClosedForm,
    NumericOnly,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    /// Halved a palindromic denominator of half-degree `2p`.
    Reduce {
        p: usize,
    },
    /// Some numerator exponent was folded by `z -> 1/z`.
    SymmetryRule,
    /// Split off the factor `(z² + root)^multiplicity` by partial fractions.
    Split {
        root: BigRational,
        multiplicity: usize,
    },
    LinearBase,
    QuarticBase,
    Sym8Base,
    /// No rule applies to a denominator of this half-degree.
    Stuck {
        half_degree: usize,
    },
    DepthExceeded,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Reduce { p } => write!(f, "Reduce({p})"),
            Step::SymmetryRule => write!(f, "SymmetryRule"),
            Step::Split { root, multiplicity } => write!(f, "Split(z^2+{root})^{multiplicity}"),
            Step::LinearBase => write!(f, "LinearBase"),
            Step::QuarticBase => write!(f, "QuarticBase"),
            Step::Sym8Base => write!(f, "Sym8Base"),
            Step::Stuck { half_degree } => write!(f, "Stuck(half-degree {half_degree})"),
            Step::DepthExceeded => write!(f, "DepthExceeded"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComputabilityReport {
    pub verdict: Verdict,
    pub path: Vec<Step>,
    pub value: Option<Expr>,
}

/// Runs the exact pipeline as far as it goes.
pub fn classify(r: &EvenRationalIntegrand, max_depth: usize) -> ComputabilityReport {
    let mut path = Vec::new();
    match classify_rec(r, max_depth, &mut path) {
        Some(v) => ComputabilityReport {
            verdict: Verdict::ClosedForm,
            path,
            value: Some(v),
        },
        None => ComputabilityReport {
            verdict: Verdict::NumericOnly,
            path,
            value: None,
        },
    }
}

fn max_exponent(r: &EvenRationalIntegrand) -> usize {
    r.numerator().half_degree().unwrap_or(0)
}

fn classify_rec(r: &EvenRationalIntegrand, depth: usize, path: &mut Vec<Step>) -> Option<Expr> {
    if r.is_zero() {
        return Some(Expr::zero());
    }
    if depth == 0 {
        path.push(Step::DepthExceeded);
        return None;
    }
    let den = r.denominator();
    let h = den.half_degree().unwrap_or(0);
    let m = r.power() as usize - 1;
    match h {
        0 => {
            path.push(Step::Stuck { half_degree: 0 });
            return None;
        }
        1 => {
            path.push(Step::LinearBase);
            return integrate_linear_family(r).ok();
        }
        2 => {
            path.push(Step::QuarticBase);
            if max_exponent(r) > m {
                path.push(Step::SymmetryRule);
            }
            return integrate_quartic_family(r).ok();
        }
        _ => {}
    }
    let symmetric = den.is_symmetric() && h.is_multiple_of(2);
    if symmetric && h == 4 {
        if let Ok(v) = integrate_sym8_family(r) {
            path.push(Step::Sym8Base);
            if max_exponent(r) > 2 * m + 1 {
                path.push(Step::SymmetryRule);
            }
            return Some(v);
        }
    }
    if symmetric {
        let p = h / 2;
        if let Ok(reduced) = reduce_function(r) {
            path.push(Step::Reduce { p });
            if max_exponent(r) > convergence_max(p, m) / 2 {
                path.push(Step::SymmetryRule);
            }
            return classify_rec(&reduced, depth - 1, path);
        }
    }
    if let Some((root, e)) = negative_rational_root(den.as_poly()) {
        path.push(Step::Split {
            root: root.clone(),
            multiplicity: e,
        });
        let [u, f, v, g] = split_off_root(r, &root, e).ok()?;
        let s = r.power();
        let left = EvenRationalIntegrand::new(u, f, e as u32 * s).ok()?;
        let lv = classify_rec(&left, depth - 1, path)?;
        if g.half_degree() == Some(0) {
            return Some(lv);
        }
        let right = EvenRationalIntegrand::new(v, g, s).ok()?;
        let rv = classify_rec(&right, depth - 1, path)?;
        return Some(lv + rv);
    }
    path.push(Step::Stuck { half_degree: h });
    None
}

/// `num / D^s = U / (t+r)^{es} + V / g^s` with `D = (t+r)^e g`, computed
/// by an exact linear solve. Returns `(U, t + r, V, g)`.
fn split_off_root(
    r: &EvenRationalIntegrand,
    root: &BigRational,
    e: usize,
) -> Result<[EvenPoly<BigRational>; 4]> {
    let s = r.power();
    let lin = Poly::new(vec![root.clone(), BigRational::one()]);
    let den = r.denominator().as_poly();
    let (g, rem) = den.div_rem(&lin.pow(e as u32))?;
    if !rem.is_zero() {
        return Err(Error::Singular);
    }
    let f_s = lin.pow(e as u32 * s);
    let g_s = g.pow(s);
    let nu = e * s as usize;
    let nv = g_s.degree().unwrap_or(0);
    let n = nu + nv;
    let mut cols: Vec<Poly<BigRational>> = Vec::with_capacity(n);
    for i in 0..nu {
        cols.push(Poly::monomial(BigRational::one(), i).mul(&g_s));
    }
    for i in 0..nv {
        cols.push(Poly::monomial(BigRational::one(), i).mul(&f_s));
    }
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|row| cols.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let b: Vec<BigRational> = (0..n).map(|row| r.numerator().coeff(row)).collect();
    let x = solve(&a, &b)?;
    let u = EvenPoly::new(x[..nu].to_vec());
    let v = EvenPoly::new(x[nu..].to_vec());
    Ok([u, EvenPoly::from_poly(lin), v, EvenPoly::from_poly(g)])
}

/// Scales a rational polynomial to a primitive integer one.
fn primitive_integer(p: &Poly<BigRational>) -> Vec<BigInt> {
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Positive divisors of `|n|`, truncated at the candidate budget. A cofactor
/// left after trial division is treated as prime.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT && BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        let mut k = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            k += 1;
        }
        if k > 0 {
            factors.push((bd, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, k) in factors {
        let mut next = Vec::new();
        for base in &out {
            let mut v = base.clone();
            for _ in 0..=k {
                next.push(v.clone());
                v *= &p;
            }
            if next.len() > MAX_CANDIDATES {
                break;
            }
        }
        out = next;
        if out.len() > MAX_CANDIDATES {
            break;
        }
    }
    out
}

/// A root `t = -r` with `r > 0` rational, and its multiplicity. `-1` is
/// tried first.
pub fn negative_rational_root(p: &Poly<BigRational>) -> Option<(BigRational, usize)> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let ints = primitive_integer(p);
    let lead = ints.last()?.clone();
    let constant = ints.iter().find(|c| !c.is_zero())?.clone();
    let mut candidates = vec![BigRational::one()];
    let num_divs = divisors(&constant);
    let den_divs = divisors(&lead);
    'outer: for u in &num_divs {
        for v in &den_divs {
            candidates.push(BigRational::new(u.clone(), v.clone()));
            if candidates.len() > MAX_CANDIDATES {
                break 'outer;
            }
        }
    }
    for r in candidates {
        if p.eval(&-r.clone()).is_zero() {
            let lin = Poly::new(vec![r.clone(), BigRational::one()]);
            let mut e = 0;
            let mut cur = p.clone();
            loop {
                let (q, rem) = cur.div_rem(&lin).ok()?;
                if !rem.is_zero() {
                    break;
                }
                e += 1;
                cur = q;
            }
            return Some((r, e));
        }
    }
    None
}

/// `d_{bound} = offset + matrix · d_{free}` for a palindromic denominator of
/// half-degree `2p` whose reduction chain stays palindromic down to
/// half-degree 4.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryConstraintFamily {
    pub p: usize,
    /// 1-based indices of the free parameters.
    pub free: Vec<usize>,
    /// 1-based indices of the bound parameters.
    pub bound: Vec<usize>,
    pub offset: Vec<BigRational>,
    /// `matrix[i][k]` multiplies the `k`-th free parameter in row `i`.
    pub matrix: Vec<Vec<BigRational>>,
}

impl SymmetryConstraintFamily {
    /// `d_1, ..., d_p` for the given free values.
    pub fn params(&self, free: &[BigRational]) -> Vec<BigRational> {
        let mut d = vec![BigRational::zero(); self.p];
        for (k, &j) in self.free.iter().enumerate() {
            d[j - 1] = free[k].clone();
        }
        for (i, &j) in self.bound.iter().enumerate() {
            let mut v = self.offset[i].clone();
            for (k, f) in free.iter().enumerate() {
                v += &self.matrix[i][k] * f;
            }
            d[j - 1] = v;
        }
        d
    }

    /// The palindromic denominator for the given free values.
    pub fn denominator(&self, free: &[BigRational]) -> EvenPoly<BigRational> {
        SymmetricDenominator::new(self.params(free)).expand()
    }

    /// Re-expresses the family in coordinates `e = d - d*` around a
    /// particular member `d*`.
    pub fn shifted(&self, particular: &[BigRational]) -> SymmetryConstraintFamily {
        let free: Vec<BigRational> = self
            .free
            .iter()
            .map(|&j| particular[j - 1].clone())
            .collect();
        let full = self.params(&free);
        let offset = self
            .bound
            .iter()
            .zip(&full)
            .map(|(&j, _)| &full[j - 1] - &particular[j - 1])
            .collect();
        SymmetryConstraintFamily {
            offset,
            ..self.clone()
        }
    }
}

/// Palindrome defects `c_i - c_{deg-i}` of every level of the reduction
/// chain, starting from parameters `d_1..d_p` (with `d_{p+1} = 1`).
fn chain_defects(d: &[BigRational], levels: usize) -> Vec<BigRational> {
    let mut out = Vec::new();
    let mut den = SymmetricDenominator::new(d.to_vec());
    for level in 0..levels {
        let e = build_ep(&den);
        let deg = den.p();
        for i in 0..deg / 2 {
            out.push(e.coeff(i) - e.coeff(deg - i));
        }
        if level + 1 < levels {
            // Parameters of E read as a palindrome of half-degree deg.
            let p = deg / 2;
            let mut params = vec![e.coeff(p) * ratio(1, 2)];
            params.extend((2..=p + 1).map(|j| e.coeff(p + 1 - j)));
            den = SymmetricDenominator::with_leading(params);
        }
    }
    out
}

/// Number of reductions from half-degree `2p` down to 4.
fn chain_length(p: usize) -> Result<usize> {
    if p < 4 || !p.is_power_of_two() {
        return Err(Error::UnsupportedDegree(2 * p));
    }
    Ok(p.trailing_zeros() as usize - 1)
}

/// Solves the palindrome conditions of the whole reduction chain for the
/// leading parameters; `p` must be a power of two, at least 4.
pub fn solve_symmetry_family(p: usize) -> Result<SymmetryConstraintFamily> {
    solve_symmetry_levels(p, chain_length(p)?)
}

/// Same, imposing only the first `levels` palindrome conditions.
pub fn solve_symmetry_levels(p: usize, levels: usize) -> Result<SymmetryConstraintFamily> {
    let zero = vec![BigRational::zero(); p];
    let r0 = chain_defects(&zero, levels);
    let nb = r0.len();
    if nb >= p {
        return Err(Error::UnsupportedDegree(2 * p));
    }
    // Affine map: column j is the effect of the unit vector e_j.
    let cols: Vec<Vec<BigRational>> = (0..p)
        .map(|j| {
            let mut d = zero.clone();
            d[j] = BigRational::one();
            chain_defects(&d, levels)
                .iter()
                .zip(&r0)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    let bound: Vec<usize> = (1..=nb).collect();
    let free: Vec<usize> = (nb + 1..=p).collect();
    let a: Vec<Vec<BigRational>> = (0..nb)
        .map(|i| bound.iter().map(|&j| cols[j - 1][i].clone()).collect())
        .collect();
    let rhs: Vec<Vec<BigRational>> = (0..nb)
        .map(|i| {
            let mut row = vec![-r0[i].clone()];
            row.extend(free.iter().map(|&j| -cols[j - 1][i].clone()));
            row
        })
        .collect();
    let x = solve_columns(&a, &rhs)?;
    Ok(SymmetryConstraintFamily {
        p,
        free,
        bound,
        offset: x.iter().map(|r| r[0].clone()).collect(),
        matrix: x.iter().map(|r| r[1..].to_vec()).collect(),
    })
}

/// Parameters `d_1..d_p` of `(1 + z²)^{2p}`.
pub fn binomial_params(p: usize) -> Vec<BigRational> {
    let n = 2 * p as i64;
    let mut d = vec![binomial_q(n, p as i64) * ratio(1, 2)];
    d.extend((2..=p as i64).map(|j| binomial_q(n, p as i64 + 1 - j)));
    d
}

/// A point of the family `a_1 = c + d`, `a_2 = cd + 1/d`.
#[derive(Clone, Debug, PartialEq)]
pub struct XcdPoint {
    pub a1: BigRational,
    pub a2: BigRational,
    /// `z² + d`.
    pub linear: EvenPoly<BigRational>,
    /// `z⁴ + c z² + 1/d`.
    pub quartic: EvenPoly<BigRational>,
    pub in_domain: bool,
}

impl XcdPoint {
    /// `z⁶ + a_1 z⁴ + a_2 z² + 1`.
    pub fn sextic(&self) -> EvenPoly<BigRational> {
        EvenPoly::new(vec![rat(1), self.a2.clone(), self.a1.clone(), rat(1)])
    }
}

pub fn xcd_family(c: &BigRational, d: &BigRational) -> Result<XcdPoint> {
    if d.is_zero() {
        return Err(Error::RangeViolation("d must be nonzero".into()));
    }
    let a1 = c + d;
    let a2 = c * d + d.recip();
    let in_domain = a1.is_positive() && a2.is_positive();
    Ok(XcdPoint {
        linear: EvenPoly::new(vec![d.clone(), rat(1)]),
        quartic: EvenPoly::new(vec![d.recip(), c.clone(), rat(1)]),
        a1,
        a2,
        in_domain,
    })
}

/// The rational parametrization of the curve mapped onto the diagonal by
/// one step of the degree-six map.
pub fn x1_point(t: &BigRational) -> Result<(BigRational, BigRational)> {
    if !t.is_positive() {
        return Err(Error::NonPositiveParameter(format!("t = {t}")));
    }
    let p1 = Poly::new([1, 1, -1, 2, -1, 1].iter().map(|&v| rat(v)).collect());
    let p2 = Poly::new([1, -1, 2, -1, 1, 1].iter().map(|&v| rat(v)).collect());
    let a1 = p1.eval(t) / (t * t);
    let a2 = p2.eval(t) / (t * t * t);
    Ok((a1, a2))
}

/// `(9 + 5a_1 + 5a_2 + a_1 a_2)³ = (a_1 + a_2 + 2)² (a_1 + a_2 + 6)³`.
pub fn on_x1_curve(a1: &BigRational, a2: &BigRational) -> bool {
    let s = a1 + a2;
    let lhs = num_traits::pow(rat(9) + rat(5) * &s + a1 * a2, 3);
    let rhs = num_traits::pow(&s + rat(2), 2) * num_traits::pow(&s + rat(6), 3);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::eval_expression;
    use crate::integrand::even_poly_from_ints;
    use crate::oracle::integrate_numeric;

    fn integrand(num: &[i64], den: &[i64], power: u32) -> EvenRationalIntegrand {
        EvenRationalIntegrand::new(even_poly_from_ints(num), even_poly_from_ints(den), power)
            .unwrap()
    }

    fn agrees_with_oracle(r: &EvenRationalIntegrand, report: &ComputabilityReport) {
        assert_eq!(report.verdict, Verdict::ClosedForm, "{:?}", report.path);
        let v = eval_expression(report.value.as_ref().unwrap(), 30).unwrap();
        let q = integrate_numeric(r, 30).unwrap();
        assert_eq!(v, q.value.to_decimal(30), "{:?}", report.path);
    }

    #[test]
    fn quartic_is_closed_form() {
        let r = integrand(&[1], &[1, 6, 1], 4);
        let rep = classify(&r, DEFAULT_MAX_DEPTH);
        assert_eq!(rep.path, vec![Step::QuarticBase]);
        agrees_with_oracle(&r, &rep);
    }

    #[test]
    fn octic_is_closed_form() {
        let r = integrand(&[1], &[1, 5, 14, 5, 1], 4);
        let rep = classify(&r, DEFAULT_MAX_DEPTH);
        assert_eq!(rep.path, vec![Step::Sym8Base]);
        agrees_with_oracle(&r, &rep);
    }

    #[test]
    fn split_cubic() {
        // (1 + t)(1 + 3t + t²), power 5.
        let r = integrand(&[1, 0, 2], &[1, 4, 4, 1], 5);
        let rep = classify(&r, DEFAULT_MAX_DEPTH);
        assert_eq!(
            rep.path[0],
            Step::Split {
                root: rat(1),
                multiplicity: 1
            }
        );
        agrees_with_oracle(&r, &rep);
    }

    #[test]
    fn generic_octic_is_numeric_only() {
        let r = integrand(&[1], &[1, 2, 3, 5, 1], 1);
        let rep = classify(&r, DEFAULT_MAX_DEPTH);
        assert_eq!(rep.verdict, Verdict::NumericOnly);
        assert!(rep.value.is_none());
    }

    #[test]
    fn xcd_instances_are_closed_form() {
        for (c, d) in [(1, 1), (3, 2), (0, 5)] {
            let x = xcd_family(&rat(c), &rat(d)).unwrap();
            assert_eq!(x.linear.mul(&x.quartic), x.sextic());
            let r =
                EvenRationalIntegrand::new(even_poly_from_ints(&[1, 1]), x.sextic(), 1).unwrap();
            agrees_with_oracle(&r, &classify(&r, DEFAULT_MAX_DEPTH));
        }
        let x = xcd_family(&rat(1), &rat(1)).unwrap();
        assert_eq!((x.a1.clone(), x.a2.clone()), (rat(2), rat(2)));
        assert!(xcd_family(&rat(1), &rat(0)).is_err());
        assert!(!xcd_family(&rat(-5), &rat(1)).unwrap().in_domain);
    }

    #[test]
    fn x1_points() {
        assert_eq!(x1_point(&rat(1)).unwrap(), (rat(3), rat(3)));
        let (a1, a2) = x1_point(&rat(2)).unwrap();
        assert_eq!((a1.clone(), a2.clone()), (ratio(31, 4), ratio(47, 8)));
        assert!(on_x1_curve(&a1, &a2));
        assert!(!on_x1_curve(&rat(1), &rat(2)));
        assert!(x1_point(&rat(0)).is_err());
    }

    #[test]
    fn degree_sixteen_family() {
        let fam = solve_symmetry_family(4).unwrap();
        assert_eq!(fam.free, vec![3, 4]);
        assert_eq!(fam.offset, vec![rat(15), rat(112)]);
        assert_eq!(
            fam.matrix,
            vec![vec![rat(3), rat(-8)], vec![rat(-4), rat(7)]]
        );
        let d = fam.denominator(&[rat(1), rat(1)]);
        assert_eq!(d, even_poly_from_ints(&[1, 1, 1, 115, 20, 115, 1, 1, 1]));
    }

    #[test]
    fn negative_root_search() {
        let p = Poly::new(vec![rat(6), rat(11), rat(6), rat(1)]); // (t+1)(t+2)(t+3)
        assert_eq!(negative_rational_root(&p), Some((rat(1), 1)));
        let p =
            Poly::new(vec![rat(4), rat(4), rat(1)]).mul(&Poly::new(vec![rat(1), rat(0), rat(1)]));
        assert_eq!(negative_rational_root(&p), Some((rat(2), 2)));
        assert_eq!(
            negative_rational_root(&Poly::new(vec![rat(1), rat(1), rat(1)])),
            None
        );
        let p = Poly::new(vec![ratio(2, 3), rat(3)]);
        assert_eq!(negative_rational_root(&p), Some((ratio(2, 9), 1)));
    }
}
