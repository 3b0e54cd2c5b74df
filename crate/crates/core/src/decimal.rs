//! Decimal rendering of exact rationals, and rational approximations of
//! natural logarithms good enough to print ratio statistics to a fixed
//! number of significant digits deterministically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::scalar::Rational;

/// Rational approximation of ln(n) with absolute error below
/// 10^(−precision_digits). Uses ln n = k·ln 2 + 2·atanh((m−1)/(m+1))
/// with m = n/2^k ∈ [1, 2), so every series argument is at most 1/3.
pub fn ln_rational(n: u64, precision_digits: u32) -> Rational {
    assert!(n >= 1, "ln requires n >= 1");
    if n == 1 {
        return Rational::zero();
    }
    // extra guard digits absorb the k-fold combination error
    let per_term = precision_digits + 4;
    let mut k = 0u32;
    let mut m = n;
    while m >= 2 {
        m /= 2;
        k += 1;
    }
    if n == (1u64 << k) {
        let ln2 = atanh_series(&ratio(1, 3), per_term);
        return scale(&ln2, 2 * u64::from(k));
    }
    let pow = BigInt::one() << k;
    // x = (n/2^k − 1)/(n/2^k + 1) = (n − 2^k)/(n + 2^k) ∈ [0, 1/3)
    let x = Rational::new(BigInt::from(n) - &pow, BigInt::from(n) + &pow)
        .expect("n + 2^k > 0");
    let ln2 = atanh_series(&ratio(1, 3), per_term);
    scale(&ln2, 2 * u64::from(k)).add(&scale(&atanh_series(&x, per_term), 2))
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d)).expect("nonzero denominator")
}

fn scale(x: &Rational, by: u64) -> Rational {
    x.mul(&Rational::from_bigint(BigInt::from(by)))
}

/// Partial sum of atanh(x) = Σ x^(2j+1)/(2j+1) for 0 ≤ x ≤ 1/3, carried
/// out until the geometric tail bound drops below 10^(−digits).
fn atanh_series(x: &Rational, digits: u32) -> Rational {
    debug_assert!(!x.is_negative() && x <= &ratio(1, 3));
    if x.is_zero() {
        return Rational::zero();
    }
    let eps = Rational::new(BigInt::one(), BigInt::from(10u8).pow(digits))
        .expect("power of ten is nonzero");
    let x2 = x.mul(x);
    // tail after the term with x^(2j+1): bounded by x^(2j+3)/(1 − x²)
    let tail_factor = Rational::one()
        .div(&Rational::one().sub(&x2))
        .expect("1 - x² > 0 for |x| < 1");
    let mut term = x.clone(); // x^(2j+1)
    let mut j = 0u32;
    let mut sum = Rational::zero();
    loop {
        sum = sum.add(
            &term
                .div(&Rational::from_int(i64::from(2 * j + 1)))
                .expect("odd index is nonzero"),
        );
        term = term.mul(&x2);
        j += 1;
        if term.mul(&tail_factor) < eps {
            return sum;
        }
    }
}

/// Round an exact rational to `sig` significant digits and render it as a
/// decimal string. Plain notation is used for moderate exponents,
/// scientific notation otherwise; rounding is half away from zero.
pub fn decimal_string(x: &Rational, sig: u32) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let num = x.numer().abs();
    let den = x.denom().clone();

    // decimal exponent e with 10^e <= |x| < 10^(e+1)
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    if magnitude_cmp(&num, &den, e) == std::cmp::Ordering::Less {
        e -= 1;
    }

    // digits = round(|x| · 10^(sig−1−e)), an integer in [10^(sig−1), 10^sig]
    let shift = i64::from(sig) - 1 - e;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num * BigInt::from(10u8).pow(shift as u32), den)
    } else {
        (num, den * BigInt::from(10u8).pow((-shift) as u32))
    };
    let mut digits = (BigInt::from(2) * scaled_num + &scaled_den)
        .div_floor(&(BigInt::from(2) * scaled_den));
    let mut e = e;
    if digits == BigInt::from(10u8).pow(sig) {
        digits = BigInt::from(10u8).pow(sig - 1);
        e += 1;
    }
    let digit_str = digits.to_string();
    debug_assert_eq!(digit_str.len() as u32, sig);

    let mantissa = render_mantissa(&digit_str, e);
    let body = match mantissa {
        Some(plain) => plain,
        None => {
            let mut s = String::new();
            s.push_str(&digit_str[..1]);
            if digit_str.len() > 1 {
                s.push('.');
                s.push_str(&digit_str[1..]);
            }
            format!("{s}e{e}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Compare |num/den| against 10^e by cross-multiplying.
fn magnitude_cmp(num: &BigInt, den: &BigInt, e: i64) -> std::cmp::Ordering {
    if e >= 0 {
        num.cmp(&(den * BigInt::from(10u8).pow(e as u32)))
    } else {
        (num * BigInt::from(10u8).pow((-e) as u32)).cmp(den)
    }
}

/// Plain decimal when the exponent is moderate; None → use scientific.
fn render_mantissa(digits: &str, e: i64) -> Option<String> {
    let sig = digits.len() as i64;
    if !(-6..=24).contains(&e) {
        return None;
    }
    let mut s = String::new();
    if e < 0 {
        s.push_str("0.");
        for _ in 0..(-e - 1) {
            s.push('0');
        }
        s.push_str(digits);
    } else if e + 1 >= sig {
        s.push_str(digits);
        for _ in 0..(e + 1 - sig) {
            s.push('0');
        }
    } else {
        let split = (e + 1) as usize;
        s.push_str(&digits[..split]);
        s.push('.');
        s.push_str(&digits[split..]);
    }
    Some(s)
}
