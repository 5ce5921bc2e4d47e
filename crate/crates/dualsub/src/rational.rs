//! Exact rational scalars: the base field for all symbol algebra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; no rounding ever happens.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational token")]
    Empty,
    #[error("floating point literals are rejected, got {0:?}")]
    FloatRejected(String),
    #[error("not an integer or num/den token: {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `k!` as a rational.
pub fn factorial(k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` as a rational; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k as u64 {
        acc *= n as u64 - i;
    }
    let mut den = BigInt::one();
    for i in 2..=k as u64 {
        den *= i;
    }
    Rational::new(acc, den)
}

/// Double factorial `(2k-1)!! = 1*3*5*...*(2k-1)`, with `(-1)!! = 1`.
pub fn odd_double_factorial(k: u32) -> Rational {
    let mut acc = BigInt::one();
    let mut i = 1u64;
    while i + 1 < 2 * k as u64 + 1 {
        acc *= i;
        i += 2;
    }
    Rational::from_integer(acc)
}

/// Parses a bit-exact rational token: an integer `"n"` or a quotient
/// `"num/den"`. Anything else, in particular float literals, is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(RationalParseError::FloatRejected(s.to_string()));
    }
    let parse_int = |t: &str| -> Result<BigInt, RationalParseError> {
        t.parse::<BigInt>()
            .map_err(|_| RationalParseError::Malformed(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"num/den"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering through f64, for CSV output in float mode.
pub fn to_f64(r: &Rational) -> f64 {
    // ratio of big integers; go through string only when the parts overflow
    let n = r.numer();
    let d = r.denom();
    match (i128::try_from(n), i128::try_from(d)) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            // scale down by the larger bit length
            let shift = (n.bits().max(d.bits())).saturating_sub(52) as u32;
            let n2 = n >> shift;
            let d2 = d >> shift;
            let nf = i128::try_from(&n2).map(|v| v as f64).unwrap_or(f64::MAX);
            let df = i128::try_from(&d2).map(|v| v as f64).unwrap_or(f64::MAX);
            nf / df
        }
    }
}

/// |r| as a rational.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
