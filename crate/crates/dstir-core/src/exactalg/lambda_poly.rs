//! Dense polynomials in the degeneracy parameter λ with rational
//! coefficients.
//!
//! Degrees stay small (bounded by the row index of whatever triangle is
//! being computed), so a dense coefficient vector with trailing-zero
//! trimming is the right representation. Equality is coefficient-list
//! equality, which the canonical form makes meaningful.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{factorial, rat_int, render_rat, Rat};

/// Element of `Q[λ]`: coefficient `i` multiplies `λ^i`.
///
/// Canonical form: the last stored coefficient is nonzero; the zero
/// polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rat>,
}

impl LambdaPoly {
    /// Builds from raw coefficients (index = power of λ), trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The constant polynomial `n`.
    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// The polynomial `λ`.
    pub fn lambda() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in λ, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `λ^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Borrowed view of the stored coefficients, lowest power first.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    /// True when the polynomial is a constant (degree ≤ 0).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Exact evaluation at `λ = point` by Horner's rule.
    pub fn eval(&self, point: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + c;
        }
        acc
    }

    /// The substitution `λ → -λ`: negates odd-power coefficients.
    pub fn subst_neg_lambda(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        // Sign flips cannot create trailing zeros.
        LambdaPoly { coeffs }
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `self^n` by repeated multiplication (degrees here are tiny).
    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse when the polynomial is a unit of `Q[λ]`,
    /// i.e. a nonzero constant.
    pub fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            Some(Self::constant(Rat::one() / &self.coeffs[0]))
        } else {
            None
        }
    }

    /// Coefficients reversed as a degree-`len` polynomial: maps
    /// `sum c_i λ^i` (with `i < len`) to `sum c_i λ^(len-1-i)`.
    ///
    /// This is the classical trick for clearing `1/λ` powers: if
    /// `p(λ) = q(1/λ) λ^(len-1)` then `reverse(p) = q`. Panics when the
    /// degree exceeds `len - 1`.
    pub fn reverse(&self, len: usize) -> Self {
        assert!(
            self.coeffs.len() <= len,
            "reverse window shorter than polynomial"
        );
        let mut coeffs = vec![Rat::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[len - 1 - i] = c.clone();
        }
        Self::new(coeffs)
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        LambdaPoly::new(coeffs)
    }
}

impl Sub for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        LambdaPoly::new(coeffs)
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::new(coeffs)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Canonical rendering: ascending powers of λ, zero terms suppressed,
/// unit coefficients elided, rationals as `p/q`. The zero polynomial
/// prints as `0`.
impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{}", render_rat(&mag))?,
                (1, true) => f.write_str("λ")?,
                (1, false) => write!(f, "{}*λ", render_rat(&mag))?,
                (_, true) => write!(f, "λ^{}", i)?,
                (_, false) => write!(f, "{}*λ^{}", render_rat(&mag), i)?,
            }
        }
        Ok(())
    }
}

/// Renders either the symbolic polynomial or, when `at` is given, its
/// exact value there. All front-end output funnels through this one
/// printer so diffs stay stable.
pub fn render_value(p: &LambdaPoly, at: Option<&Rat>) -> String {
    use alloc::string::ToString;
    match at {
        Some(point) => render_rat(&p.eval(point)),
        None => p.to_string(),
    }
}

/// Generalized falling factorial of `r` with symbolic step λ:
/// `(r) (r - λ) ... (r - (n-1) λ)` as an element of `Q[λ]`.
pub fn deg_falling_sym(r: &Rat, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        // r - j λ
        let factor = LambdaPoly::new(vec![r.clone(), rat_int(-(j as i64))]);
        acc = &acc * &factor;
    }
    acc
}

/// Generalized rising factorial of `r` with symbolic step λ:
/// `(r) (r + λ) ... (r + (n-1) λ)`.
pub fn deg_rising_sym(r: &Rat, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        let factor = LambdaPoly::new(vec![r.clone(), rat_int(j as i64)]);
        acc = &acc * &factor;
    }
    acc
}

/// Generalized falling factorial with symbolic step λ and polynomial
/// base: `alpha (alpha - λ) ... (alpha - (n-1) λ)` in `Q[λ]`.
pub fn deg_falling_poly(alpha: &LambdaPoly, n: usize) -> LambdaPoly {
    let lambda = LambdaPoly::lambda();
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        acc = &acc * &(alpha - &lambda.scale(&rat_int(j as i64)));
    }
    acc
}

/// Classical falling factorial of a polynomial argument:
/// `alpha (alpha - 1) ... (alpha - n + 1)` in `Q[λ]`.
pub fn falling_factorial_sym(alpha: &LambdaPoly, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        acc = &acc * &(alpha - &LambdaPoly::from_int(j as i64));
    }
    acc
}

/// Generalized binomial coefficient `C(alpha, m)` for a polynomial
/// `alpha`: `alpha (alpha-1) ... (alpha-m+1) / m!`.
pub fn binom_sym(alpha: &LambdaPoly, m: usize) -> LambdaPoly {
    falling_factorial_sym(alpha, m).scale(&(Rat::one() / factorial(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn lp(coeffs: &[(i64, i64)]) -> LambdaPoly {
        LambdaPoly::new(coeffs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn canonical_trimming() {
        let p = LambdaPoly::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(LambdaPoly::new(vec![rat_int(0)]).is_zero());
        assert_eq!(LambdaPoly::zero().degree(), None);
    }

    #[test]
    fn deg_falling_sym_examples() {
        // (1)(1 - λ) = 1 - λ
        assert_eq!(deg_falling_sym(&rat_int(1), 2), lp(&[(1, 1), (-1, 1)]));
        // empty product
        assert_eq!(deg_falling_sym(&rat(5, 3), 0), LambdaPoly::one());
        // (2)(2 - λ) = 4 - 2λ
        assert_eq!(deg_falling_sym(&rat_int(2), 2), lp(&[(4, 1), (-2, 1)]));
    }

    #[test]
    fn deg_rising_sym_examples() {
        // (1)(1 + λ) = 1 + λ
        assert_eq!(deg_rising_sym(&rat_int(1), 2), lp(&[(1, 1), (1, 1)]));
        assert_eq!(deg_rising_sym(&rat_int(1), 0), LambdaPoly::one());
        // (1)(1 + λ)(1 + 2λ) = 1 + 3λ + 2λ²
        assert_eq!(
            deg_rising_sym(&rat_int(1), 3),
            lp(&[(1, 1), (3, 1), (2, 1)])
        );
    }

    #[test]
    fn binom_sym_examples() {
        // C(λ, 2) = λ(λ-1)/2 = -λ/2 + λ²/2
        assert_eq!(
            binom_sym(&LambdaPoly::lambda(), 2),
            lp(&[(0, 1), (-1, 2), (1, 2)])
        );
        assert_eq!(binom_sym(&LambdaPoly::lambda(), 0), LambdaPoly::one());
        assert_eq!(
            binom_sym(&LambdaPoly::from_int(3), 2),
            LambdaPoly::from_int(3)
        );
    }

    #[test]
    fn eval_and_subst() {
        let p = lp(&[(1, 1), (-2, 1), (3, 1)]); // 1 - 2λ + 3λ²
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
        // λ → -λ flips the odd coefficient only
        assert_eq!(p.subst_neg_lambda(), lp(&[(1, 1), (2, 1), (3, 1)]));
        // eval of the flip at r equals eval at -r
        let r = rat(2, 5);
        assert_eq!(p.subst_neg_lambda().eval(&r), p.eval(&(-&r)));
    }

    #[test]
    fn ring_ops_match_sampled_evaluation() {
        // evaluation at fixed rationals is a ring homomorphism
        let samples = [rat_int(0), rat_int(1), rat(-1, 2), rat(3, 7)];
        let a = lp(&[(2, 3), (0, 1), (5, 1)]);
        let b = lp(&[(-1, 2), (4, 1)]);
        for s in &samples {
            assert_eq!((&a + &b).eval(s), a.eval(s) + b.eval(s));
            assert_eq!((&a - &b).eval(s), a.eval(s) - b.eval(s));
            assert_eq!((&a * &b).eval(s), a.eval(s) * b.eval(s));
            assert_eq!((-&a).eval(s), -a.eval(s));
        }
    }

    #[test]
    fn display_canonical() {
        use alloc::string::ToString;
        assert_eq!(lp(&[(1, 1), (-1, 1)]).to_string(), "1 - λ");
        assert_eq!(lp(&[(-1, 1), (1, 1)]).to_string(), "-1 + λ");
        assert_eq!(lp(&[(0, 1), (1, 2)]).to_string(), "1/2*λ");
        assert_eq!(lp(&[(0, 1), (0, 1), (-3, 4)]).to_string(), "-3/4*λ^2");
        assert_eq!(LambdaPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(0, 1), (-1, 1), (1, 1)]).to_string(), "-λ + λ^2");
    }

    #[test]
    fn reverse_clears_inverse_powers() {
        // p = 1 + 2λ, reversed in a window of 3: λ² + 2λ
        assert_eq!(
            lp(&[(1, 1), (2, 1)]).reverse(3),
            lp(&[(0, 1), (2, 1), (1, 1)])
        );
    }
}
