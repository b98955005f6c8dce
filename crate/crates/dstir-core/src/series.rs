//! Truncated formal power series in `t` over a coefficient [`Ring`].
//!
//! Coefficients are stored in ordinary form (`coeffs[n]` is the
//! coefficient of `t^n`); every generating function in this domain is
//! exponentially normalized, so [`TruncatedSeries::egf_coeff`] is the
//! bridge that multiplies by `n!`. The coefficient vector always has
//! length `order + 1`, and every operation truncates consistently: the
//! coefficient of `t^n` in a product depends only on inputs of index
//! `<= n`.
//!
//! Sizes here are small (orders in the tens), so schoolbook
//! multiplication and order-by-order back-substitution are exact and
//! fast enough; there is no floating-point or FFT path.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactalg::{factorial, rat_int, Rat};
use crate::ring::Ring;

/// Errors from series operations whose preconditions depend on the data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesError {
    /// `reciprocal` needs an invertible constant term.
    NonUnitConstantTerm,
    /// `compose`/`exp_series` need a zero constant term in the inner
    /// series.
    NonzeroConstantTerm,
    /// `compositional_inverse` needs `[t^1]` to be a unit.
    NonUnitLinearTerm,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonUnitConstantTerm => {
                f.write_str("constant term is not invertible in the coefficient ring")
            }
            SeriesError::NonzeroConstantTerm => {
                f.write_str("inner series must have zero constant term")
            }
            SeriesError::NonUnitLinearTerm => {
                f.write_str("linear coefficient is not invertible in the coefficient ring")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SeriesError {}

/// A power series truncated at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Builds from ordinary coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least [t^0]");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = R::one();
        s
    }

    /// The monomial `t` truncated at `order`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ordinary coefficient `[t^n]`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Exponential coefficient `n! [t^n]` — the normalization every
    /// generating function here is stated in.
    pub fn egf_coeff(&self, n: usize) -> R {
        self.coeff(n).scale(&factorial(n))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    /// Scalar multiple by a ring element.
    pub fn scale(&self, s: &R) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    /// Scalar multiple by a rational.
    pub fn scale_rat(&self, s: &Rat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { coeffs }
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes `inner` into `self` (Horner in `inner`); requires
    /// `[t^0] inner = 0` so the truncation is well defined.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        assert_eq!(self.order(), inner.order(), "series order mismatch");
        if !inner.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut acc = Self::zero(self.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Multiplicative inverse: `self * reciprocal(self) = 1` up to the
    /// truncation order. Requires a unit constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let inv0 = self
            .coeff(0)
            .try_inv()
            .ok_or(SeriesError::NonUnitConstantTerm)?;
        let mut out = Self::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let mut acc = R::zero();
            for i in 1..=n {
                acc = acc.add(&self.coeffs[i].mul(&out.coeffs[n - i]));
            }
            out.coeffs[n] = acc.neg().mul(&inv0);
        }
        Ok(out)
    }

    /// Compositional inverse by order-by-order back-substitution:
    /// returns `g` with `self(g(t)) = t` (and hence `g(self(t)) = t`) up
    /// to the truncation order. Requires `[t^0] = 0` and `[t^1]` a unit.
    pub fn compositional_inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let inv1 = self
            .coeff(1)
            .try_inv()
            .ok_or(SeriesError::NonUnitLinearTerm)?;
        let order = self.order();
        let mut g = Self::zero(order);
        if order >= 1 {
            g.coeffs[1] = inv1.clone();
        }
        // Fixing g up to t^(m-1) determines [t^m](self ∘ g) up to the
        // single unknown g_m, which enters linearly with factor [t^1]self.
        for m in 2..=order {
            let composed = self.compose(&g).expect("inner constant term is zero");
            g.coeffs[m] = composed.coeffs[m].neg().mul(&inv1);
        }
        Ok(g)
    }
}

/// Degenerate exponential: `[t^n] = (x)(x - lam)...(x - (n-1) lam) / n!`.
///
/// At `lam = 0` this is the classical `exp(x t)`; the ring can be `Q`
/// (both arguments numeric) or `Q[λ]` (either argument symbolic).
pub fn deg_exp<R: Ring>(x: &R, lam: &R, order: usize) -> TruncatedSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(R::one());
    let mut num = R::one(); // running generalized falling factorial
    let mut fact = Rat::one();
    for n in 0..order {
        num = num.mul(&x.sub(&lam.scale(&rat_int(n as i64))));
        fact *= rat_int(n as i64 + 1);
        coeffs.push(num.scale(&(Rat::one() / &fact)));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Degenerate logarithm: the compositional inverse of `deg_exp(1) - 1`.
///
/// `[t^n] = prod_{j=1}^{n-1} (lam - j) / n!` for `n >= 1`; at `lam = 0`
/// this is the classical `log(1 + t)`.
pub fn deg_log<R: Ring>(lam: &R, order: usize) -> TruncatedSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(R::zero());
    let mut num = R::one();
    let mut fact = Rat::one();
    for n in 1..=order {
        if n >= 2 {
            num = num.mul(&lam.sub(&R::from_rat(&rat_int(n as i64 - 1))));
        }
        fact *= rat_int(n as i64);
        coeffs.push(num.scale(&(Rat::one() / &fact)));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Binomial series `(1 + t)^alpha`: `[t^m] = C(alpha, m)`.
pub fn binom_series<R: Ring>(alpha: &R, order: usize) -> TruncatedSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(R::one());
    let mut acc = R::one();
    for m in 0..order {
        acc = acc.mul(&alpha.sub(&R::from_rat(&rat_int(m as i64))));
        acc = acc.scale(&(Rat::one() / rat_int(m as i64 + 1)));
        coeffs.push(acc.clone());
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Classical exponential of a series with zero constant term:
/// `sum_k g^k / k!`.
pub fn exp_series<R: Ring>(g: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>, SeriesError> {
    if !g.coeff(0).is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let order = g.order();
    let mut acc = TruncatedSeries::one(order);
    let mut term = TruncatedSeries::one(order);
    // g^k/k! only reaches t^k, so k stops at the order.
    for k in 1..=order {
        term = term.mul(g).scale_rat(&(Rat::one() / rat_int(k as i64)));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `1 / (1 - t)`, the geometric series.
pub fn geometric<R: Ring>(order: usize) -> TruncatedSeries<R> {
    TruncatedSeries::from_coeffs(vec![R::one(); order + 1])
}

/// `t / (1 - t)`.
pub fn t_over_one_minus_t<R: Ring>(order: usize) -> TruncatedSeries<R> {
    let mut coeffs = vec![R::one(); order + 1];
    coeffs[0] = R::zero();
    TruncatedSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, LambdaPoly};

    type QSeries = TruncatedSeries<Rat>;
    type LSeries = TruncatedSeries<LambdaPoly>;

    fn one_plus_t(order: usize) -> QSeries {
        let mut s = QSeries::one(order);
        s.coeffs[1] = Rat::one();
        s
    }

    #[test]
    fn mul_truncates() {
        // (1+t)(1-t) = 1 - t² at order 3
        let a = one_plus_t(3);
        let b = QSeries::from_coeffs(vec![rat_int(1), rat_int(-1), rat_int(0), rat_int(0)]);
        let p = a.mul(&b);
        assert_eq!(
            p.coeffs(),
            &[rat_int(1), rat_int(0), rat_int(-1), rat_int(0)]
        );
        // telescoping: geometric * (1-t) = 1
        assert_eq!(geometric::<Rat>(6).mul(&b_extend(&b, 6)), QSeries::one(6));
    }

    fn b_extend(b: &QSeries, order: usize) -> QSeries {
        let mut coeffs = b.coeffs().to_vec();
        coeffs.resize(order + 1, Rat::zero());
        QSeries::from_coeffs(coeffs)
    }

    #[test]
    fn pow_basics() {
        assert_eq!(QSeries::t(4).pow(0), QSeries::one(4));
        let t3 = QSeries::t(4).pow(3);
        assert_eq!(t3.coeff(3), rat_int(1));
        assert_eq!(t3.coeff(2), rat_int(0));
    }

    #[test]
    fn compose_with_identity() {
        let f = QSeries::from_coeffs(vec![rat_int(2), rat(1, 3), rat_int(-1), rat_int(5)]);
        assert_eq!(f.compose(&QSeries::t(3)).unwrap(), f);
        assert!(f.compose(&one_plus_t(3)).is_err());
    }

    #[test]
    fn reciprocal_geometric() {
        let one_minus_t = QSeries::from_coeffs(vec![
            rat_int(1),
            rat_int(-1),
            rat_int(0),
            rat_int(0),
            rat_int(0),
        ]);
        assert_eq!(one_minus_t.reciprocal().unwrap(), geometric(4));
        assert!(QSeries::t(4).reciprocal().is_err());
    }

    #[test]
    fn compositional_inverse_of_t_is_t() {
        assert_eq!(
            QSeries::t(5).compositional_inverse().unwrap(),
            QSeries::t(5)
        );
    }

    #[test]
    fn deg_exp_coefficients() {
        let e = deg_exp(&LambdaPoly::one(), &LambdaPoly::lambda(), 4);
        assert_eq!(e.coeff(0), LambdaPoly::one());
        assert_eq!(e.coeff(1), LambdaPoly::one());
        // [t^2] = (1-λ)/2
        assert_eq!(e.coeff(2), LambdaPoly::new(vec![rat(1, 2), rat(-1, 2)]));
        // classical limit: lam = 0 gives x^n/n!
        let c = deg_exp(&rat_int(2), &rat_int(0), 4);
        for n in 0..=4usize {
            assert_eq!(
                c.coeff(n),
                rat_int(2).pow(n as i32) / crate::exactalg::factorial(n)
            );
        }
    }

    #[test]
    fn deg_log_coefficients() {
        let l: LSeries = deg_log(&LambdaPoly::lambda(), 4);
        assert_eq!(l.coeff(0), LambdaPoly::zero());
        assert_eq!(l.coeff(1), LambdaPoly::one());
        // [t^2] = (λ-1)/2
        assert_eq!(l.coeff(2), LambdaPoly::new(vec![rat(-1, 2), rat(1, 2)]));
        // classical limit at λ=0: (-1)^(n-1)/n
        let c: QSeries = deg_log(&Rat::zero(), 6);
        for n in 1..=6usize {
            assert_eq!(c.coeff(n), rat(if n % 2 == 1 { 1 } else { -1 }, n as i64));
        }
    }

    #[test]
    fn deg_log_polynomial_rewrite_holds() {
        // The EGF numerator of deg_log is the λ-polynomial obtained by
        // clearing 1/λ powers from the step-1/λ falling factorial of 1:
        // reversing the coefficients of (1)_{n,μ} as a window-n
        // polynomial in μ must reproduce prod_{j=1}^{n-1} (λ - j).
        use crate::exactalg::deg_falling_sym;
        for n in 1..=10usize {
            let product_form: LambdaPoly = {
                let mut acc = LambdaPoly::one();
                for j in 1..n {
                    acc = &acc * &LambdaPoly::new(vec![rat_int(-(j as i64)), rat_int(1)]);
                }
                acc
            };
            let reversed = deg_falling_sym(&rat_int(1), n).reverse(n);
            assert_eq!(reversed, product_form, "rewrite fails at n = {}", n);
            // and that is exactly n! times the deg_log coefficient
            let l: LSeries = deg_log(&LambdaPoly::lambda(), n);
            assert_eq!(l.egf_coeff(n), product_form);
        }
    }

    #[test]
    fn binom_series_examples() {
        let b = binom_series(&rat_int(1), 3);
        assert_eq!(
            b.coeffs(),
            &[rat_int(1), rat_int(1), rat_int(0), rat_int(0)]
        );
        let b = binom_series(&rat_int(-1), 4);
        for m in 0..=4usize {
            assert_eq!(b.coeff(m), rat_int(if m % 2 == 0 { 1 } else { -1 }));
        }
        let l = binom_series(&LambdaPoly::lambda(), 3);
        assert_eq!(
            l.coeff(2),
            LambdaPoly::new(vec![Rat::zero(), rat(-1, 2), rat(1, 2)])
        );
    }

    #[test]
    fn exp_series_examples() {
        let zero = QSeries::zero(4);
        assert_eq!(exp_series(&zero).unwrap(), QSeries::one(4));
        let e = exp_series(&QSeries::t(5)).unwrap();
        for n in 0..=5usize {
            assert_eq!(e.coeff(n), Rat::one() / crate::exactalg::factorial(n));
        }
        // [t^2] exp(e_λ(t) - 1) = (2-λ)/2
        let mut g = deg_exp(&LambdaPoly::one(), &LambdaPoly::lambda(), 2);
        g.coeffs[0] = LambdaPoly::zero();
        let e = exp_series(&g).unwrap();
        assert_eq!(e.coeff(2), LambdaPoly::new(vec![rat_int(1), rat(-1, 2)]));
        assert!(exp_series(&QSeries::one(3)).is_err());
    }

    #[test]
    fn round_trip_exp_log_small() {
        // e_λ(log_λ(1+t)) = 1 + t and log_λ(e_λ(t)) = t, order 8
        let order = 8;
        let lam = LambdaPoly::lambda();
        let e = deg_exp(&LambdaPoly::one(), &lam, order);
        let l = deg_log(&lam, order);
        let mut e_minus_1 = e.clone();
        e_minus_1.coeffs[0] = LambdaPoly::zero();

        let rt1 = e.compose(&l).unwrap();
        let mut expected = LSeries::one(order);
        expected.coeffs[1] = LambdaPoly::one();
        assert_eq!(rt1, expected);

        let rt2 = l.compose(&e_minus_1).unwrap();
        assert_eq!(rt2, LSeries::t(order));
    }

    #[test]
    fn compositional_inverse_matches_deg_log() {
        let order = 8;
        let lam = LambdaPoly::lambda();
        let mut e_minus_1 = deg_exp(&LambdaPoly::one(), &lam, order);
        e_minus_1.coeffs[0] = LambdaPoly::zero();
        let inv = e_minus_1.compositional_inverse().unwrap();
        assert_eq!(inv, deg_log(&lam, order));
    }

    #[test]
    fn seeded_random_units_have_reciprocals() {
        // 50 random unit series of order 12 over Q
        let mut state = 0x5eed_u64;
        let mut next = move || {
            // splitmix64
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for _ in 0..50 {
            let coeffs: Vec<Rat> = (0..=12)
                .map(|i| {
                    let p = (next() % 19) as i64 - 9;
                    let q = (next() % 9) as i64 + 1;
                    if i == 0 && p == 0 {
                        rat(1, q)
                    } else {
                        rat(p, q)
                    }
                })
                .collect();
            let f = QSeries::from_coeffs(coeffs);
            assert_eq!(f.mul(&f.reciprocal().unwrap()), QSeries::one(12));
        }
    }
}
