//! Arbitrary-precision rational scalars and the factorial-style products
//! on them.
//!
//! [`Rat`] is `num_rational::BigRational`, which already maintains the
//! canonical form we need everywhere: numerator and denominator coprime,
//! denominator positive. All arithmetic on it is exact.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always in reduced form with positive denominator.
pub type Rat = num_rational::BigRational;

/// `p/q` as a [`Rat`]. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a [`Rat`].
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` for nonnegative integer arguments;
/// zero when `k > n`.
pub fn binom_int(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Rat::from_integer(acc)
}

/// Generalized binomial coefficient `C(alpha, m) = alpha (alpha-1) ... (alpha-m+1) / m!`
/// for rational `alpha`.
pub fn binom_rat(alpha: &Rat, m: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..m {
        acc *= alpha - rat_int(j as i64);
    }
    acc / factorial(m)
}

/// Classical falling factorial `x (x-1) ... (x-n+1)`; `1` when `n = 0`.
pub fn falling_factorial(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..n {
        acc *= x - rat_int(j as i64);
    }
    acc
}

/// Classical rising factorial `x (x+1) ... (x+n-1)`; `1` when `n = 0`.
pub fn rising_factorial(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..n {
        acc *= x + rat_int(j as i64);
    }
    acc
}

/// Generalized falling factorial with step `lam`:
/// `x (x - lam) (x - 2 lam) ... (x - (n-1) lam)`; `1` when `n = 0`.
///
/// Reduces to `x^n` at `lam = 0` and to the classical falling factorial
/// at `lam = 1`.
pub fn deg_falling(x: &Rat, n: usize, lam: &Rat) -> Rat {
    let mut acc = Rat::one();
    for j in 0..n {
        acc *= x - rat_int(j as i64) * lam;
    }
    acc
}

/// Error when parsing a rational from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid rational {:?}: expected an integer or \"p/q\" with q != 0",
            self.input
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseRationalError {}

/// Parses a rational from `"p/q"` or a plain integer string.
///
/// Decimal notation is rejected on purpose: every accepted input denotes
/// an exact value.
pub fn parse_rational(s: &str) -> Result<Rat, ParseRationalError> {
    let err = || ParseRationalError {
        input: String::from(s),
    };
    let s = s.trim();
    if s.is_empty() || s.contains(['.', ' ']) {
        return Err(err());
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|_| err()),
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| err())?;
            let q = BigInt::from_str(q).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Renders a rational as `p` or `p/q`, matching the parser.
pub fn render_rat(r: &Rat) -> String {
    use alloc::string::ToString;
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.numer().is_negative() && r.denom().is_negative() {
        // num keeps the denominator positive; this branch is unreachable
        // but cheap to keep total.
        (-r.numer()).to_string() + "/" + &(-r.denom()).to_string()
    } else {
        r.numer().to_string() + "/" + &r.denom().to_string()
    }
}
