use landen_core::{EvenPoly, EvenRationalIntegrand, Rational};
use num_bigint::BigInt;
use num_traits::{pow, Zero};

use crate::output::CliError;

/// One coefficient: `7`, `-3/4` or `0.125`.
pub fn coefficient(s: &str) -> Result<Rational, CliError> {
    let s = s.trim();
    let bad = || CliError::parse(format!("cannot read coefficient {s:?}"));
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let int = int.trim_start_matches(['-', '+']);
        if (int.is_empty() && frac.is_empty())
            || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()))
        {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let q = Rational::new(digits, pow(BigInt::from(10), frac.len()));
        return Ok(if negative { -q } else { q });
    }
    let q: Rational = s.parse().map_err(|_| bad())?;
    Ok(q)
}

pub fn coefficients(s: &str) -> Result<Vec<Rational>, CliError> {
    if s.trim().is_empty() {
        return Err(CliError::parse("empty coefficient list"));
    }
    s.split(',').map(coefficient).collect()
}

pub fn integrand(num: &str, den: &str, power: u32) -> Result<EvenRationalIntegrand, CliError> {
    let num = coefficients(num)?;
    let den = coefficients(den)?;
    if den.iter().all(Zero::is_zero) {
        return Err(CliError::domain("denominator is zero"));
    }
    EvenRationalIntegrand::new(EvenPoly::new(num), EvenPoly::new(den), power)
        .map_err(CliError::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use landen_core::{rat, ratio};

    #[test]
    fn reads_integers_fractions_and_decimals() {
        assert_eq!(coefficient("12").unwrap(), rat(12));
        assert_eq!(coefficient(" -3/4 ").unwrap(), ratio(-3, 4));
        assert_eq!(coefficient("0.125").unwrap(), ratio(1, 8));
        assert_eq!(coefficient("-.5").unwrap(), ratio(-1, 2));
        assert_eq!(coefficient("2.").unwrap(), rat(2));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "x", "1/0", "1.2.3", "1e3", ".", "--1"] {
            assert!(coefficient(s).is_err(), "{s}");
        }
        assert_eq!(coefficients("1,,2").unwrap_err().code, 1);
    }

    #[test]
    fn invalid_integrands_are_domain_errors() {
        assert_eq!(integrand("1", "1,-1", 1).unwrap_err().code, 2);
        assert_eq!(integrand("0,0,1", "1,1", 1).unwrap_err().code, 2);
        assert!(integrand("0,1", "1,4,1", 9).is_ok());
    }
}
