//! Exact integer and rational arithmetic.
//!
//! Coefficients everywhere in the crate are [`Rational`], an alias for
//! `num_rational::BigRational`. That type already keeps values canonical
//! (reduced, positive denominator, zero stored as `0/1`), so this module only
//! adds the text formats and the checked entry points the rest of the crate
//! relies on.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use num_bigint::BigInt as BigIntVal;
pub use num_rational::BigRational as Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid number literal {0:?}")]
    InvalidLiteral(String),
}

/// Arithmetic operations accepted by [`rat_binop`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Parses an integer in the form `-?[0-9]+`. No separators, no `+`.
pub fn parse_int(text: &str) -> Result<BigInt, NumError> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(NumError::InvalidLiteral(text.to_string()));
    }
    text.parse::<BigInt>()
        .map_err(|_| NumError::InvalidLiteral(text.to_string()))
}

/// Builds the canonical rational `num/den` from two integer literals.
pub fn rat_make(num: &str, den: &str) -> Result<Rational, NumError> {
    let num = parse_int(num)?;
    let den = parse_int(den)?;
    if den.is_zero() {
        return Err(NumError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Parses `a`, `a/b` or a finite decimal such as `17.93` (read exactly as
/// `1793/100`).
pub fn parse_rational(text: &str) -> Result<Rational, NumError> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        return rat_make(num.trim(), den.trim());
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.strip_prefix('-').unwrap_or(whole);
        let valid = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if frac.is_empty()
            || !valid(frac)
            || !valid(whole_digits)
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return Err(NumError::InvalidLiteral(text.to_string()));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let whole_val = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            parse_int(whole_digits)?
        };
        let magnitude = whole_val * &scale + parse_int(frac)?;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(num, scale));
    }
    Ok(Rational::from_integer(parse_int(text)?))
}

pub fn rat_binop(op: RatOp, a: &Rational, b: &Rational) -> Result<Rational, NumError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(NumError::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn rat_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}

/// Small-integer convenience constructor.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `num/den` from machine integers. Panics on a zero denominator, so only
/// use it with literal constants.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 only fails on overflow of both parts; fall back to
        // a sign-correct infinity.
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Best rational approximation of `x` with denominator at most
/// `max_den`, via the continued-fraction expansion (last convergent or
/// semiconvergent that fits).
pub fn snap_f64(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() || max_den == 0 {
        return None;
    }
    let exact = Rational::from_float(x)?;
    Some(best_approximation(&exact, &BigInt::from(max_den)))
}

/// Continued-fraction best approximation of an exact rational with a bounded
/// denominator.
pub fn best_approximation(value: &Rational, max_den: &BigInt) -> Rational {
    if value.denom() <= max_den {
        return value.clone();
    }
    // Convergents h/k with the usual recurrences.
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut num = value.numer().clone();
    let mut den = value.denom().clone();
    loop {
        let (a, rem) = num.div_mod_floor(&den);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if &k_next > max_den {
            // Largest semiconvergent that still fits.
            let t = (max_den - &k_prev) / &k;
            let semi = Rational::new(&t * &h + &h_prev, &t * &k + &k_prev);
            let conv = Rational::new(h.clone(), k.clone());
            let semi_err = (&semi - value).abs();
            let conv_err = (&conv - value).abs();
            return if t.is_positive() && semi_err < conv_err {
                semi
            } else {
                conv
            };
        }
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        if rem.is_zero() {
            return Rational::new(h, k);
        }
        num = std::mem::replace(&mut den, rem);
    }
}
