//! Decimal rendering with a fixed number of significant digits.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Renders `x` with exactly `digits` significant digits, rounding the exact
/// binary value half-to-even. Plain notation is used for decimal exponents
/// in `-7..21`, scientific notation otherwise.
pub fn format_significant(x: &Float, digits: u32) -> String {
    let digits = digits.max(1);
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf" } else { "inf" }.into();
    }
    if x.is_zero() {
        return render_plain("0".repeat(digits as usize).as_str(), 0, false);
    }
    let exact = x.to_rational().expect("finite float");
    let (mantissa, exp10) = round_significant(&exact, digits);
    let negative = x.is_sign_negative();
    if (-7..21).contains(&exp10) {
        render_plain(&mantissa, exp10, negative)
    } else {
        let mut s = String::new();
        if negative {
            s.push('-');
        }
        s.push_str(&mantissa[..1]);
        if mantissa.len() > 1 {
            s.push('.');
            s.push_str(&mantissa[1..]);
        }
        s.push_str(&format!("e{exp10}"));
        s
    }
}

/// Returns the `digits`-digit mantissa string and the decimal exponent of
/// its leading digit.
fn round_significant(q: &Rational, digits: u32) -> (String, i64) {
    let abs = Rational::from(q.abs_ref());
    // Estimate the exponent from the float value, then correct it exactly.
    let approx = Float::with_val(64, &abs);
    let mut exp10 = approx.log10().to_f64().floor() as i64;
    let ten = Integer::from(10);
    let lower = Integer::from((&ten).pow(digits - 1));
    let upper = Integer::from((&ten).pow(digits));
    loop {
        let scaled = scale(&abs, digits as i64 - 1 - exp10);
        if scaled >= upper {
            exp10 += 1;
        } else if scaled < lower {
            exp10 -= 1;
        } else {
            let mut rounded = round_half_even(&scaled);
            if rounded == upper {
                rounded = lower.clone();
                exp10 += 1;
            }
            return (rounded.to_string(), exp10);
        }
    }
}

fn scale(q: &Rational, shift: i64) -> Rational {
    let ten = Integer::from(10);
    if shift >= 0 {
        Rational::from(q * Integer::from((&ten).pow(shift as u32)))
    } else {
        Rational::from(q / Integer::from((&ten).pow((-shift) as u32)))
    }
}

fn round_half_even(q: &Rational) -> Integer {
    let (fract, trunc) = q.clone().fract_trunc(Integer::new());
    let half = Rational::from((1, 2));
    match fract.cmp(&half) {
        std::cmp::Ordering::Less => trunc,
        std::cmp::Ordering::Greater => trunc + 1,
        std::cmp::Ordering::Equal => {
            if trunc.is_even() {
                trunc
            } else {
                trunc + 1
            }
        }
    }
}

fn render_plain(mantissa: &str, exp10: i64, negative: bool) -> String {
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    let n = mantissa.len() as i64;
    if exp10 < 0 {
        s.push_str("0.");
        for _ in 0..(-exp10 - 1) {
            s.push('0');
        }
        s.push_str(mantissa);
    } else if exp10 + 1 >= n {
        s.push_str(mantissa);
        for _ in 0..(exp10 + 1 - n) {
            s.push('0');
        }
    } else {
        let split = (exp10 + 1) as usize;
        s.push_str(&mantissa[..split]);
        s.push('.');
        s.push_str(&mantissa[split..]);
    }
    s
}
