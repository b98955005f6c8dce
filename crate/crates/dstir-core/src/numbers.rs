//! The number families: degenerate Stirling triangles of both kinds,
//! their unsigned variant, Lah numbers, degenerate r-Stirling numbers,
//! degenerate Bell polynomials, and degenerate Laguerre values.
//!
//! Each family is computable by at least two independent routes —
//! recurrence or closed form here, generating functions via
//! [`gf_series`], and basis conversion in [`crate::exactalg`] — and the
//! test suite holds the routes against each other.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactalg::{
    binom_int, binom_rat, deg_falling, factorial, rat_int, Basis, BasisPoly, LambdaPoly, Rat,
};
use crate::series::{self, TruncatedSeries};

/// The triangular number families without extra parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Degenerate Stirling numbers of the first kind.
    S1Lambda,
    /// Degenerate Stirling numbers of the second kind.
    S2Lambda,
    /// Unsigned degenerate Stirling numbers of the first kind.
    UnsignedS1Lambda,
    /// Lah numbers (λ-free).
    Lah,
    /// Classical Stirling numbers of the first kind (signed).
    S1Classical,
    /// Classical Stirling numbers of the second kind.
    S2Classical,
}

impl StirlingKind {
    pub const ALL: [StirlingKind; 6] = [
        StirlingKind::S1Lambda,
        StirlingKind::S2Lambda,
        StirlingKind::UnsignedS1Lambda,
        StirlingKind::Lah,
        StirlingKind::S1Classical,
        StirlingKind::S2Classical,
    ];

    /// Recurrence step: `e(n+1, k) = e(n, k-1) + factor(n, k) * e(n, k)`.
    /// Lah rows come from the closed form instead.
    fn recurrence_factor(self, n: usize, k: usize) -> LambdaPoly {
        let n = n as i64;
        let k = k as i64;
        match self {
            // k - nλ
            StirlingKind::S2Lambda => LambdaPoly::new(vec![rat_int(k), rat_int(-n)]),
            // kλ - n
            StirlingKind::S1Lambda => LambdaPoly::new(vec![rat_int(-n), rat_int(k)]),
            // n - kλ
            StirlingKind::UnsignedS1Lambda => LambdaPoly::new(vec![rat_int(n), rat_int(-k)]),
            StirlingKind::S2Classical => LambdaPoly::from_int(k),
            StirlingKind::S1Classical => LambdaPoly::from_int(-n),
            StirlingKind::Lah => unreachable!("Lah rows use the closed form"),
        }
    }
}

/// A memoized triangle of one family, rows `0..=n_max`.
///
/// Out-of-triangle reads (`k > n`) are zero. Completed triangles are
/// immutable values and safe to share across threads; growth takes
/// `&mut self`, so readers and growers cannot interleave without
/// external coordination.
#[derive(Debug, Clone)]
pub struct Triangle {
    kind: StirlingKind,
    rows: Vec<Vec<LambdaPoly>>,
}

impl Triangle {
    pub fn new(kind: StirlingKind) -> Self {
        Triangle {
            kind,
            rows: vec![vec![LambdaPoly::one()]],
        }
    }

    pub fn build(kind: StirlingKind, n_max: usize) -> Self {
        let mut t = Triangle::new(kind);
        t.grow(n_max);
        t
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Extends the triangle to `n_max` rows, reusing existing rows.
    pub fn grow(&mut self, n_max: usize) {
        while self.rows.len() <= n_max {
            let n = self.rows.len() - 1; // last built row index
            let row = if self.kind == StirlingKind::Lah {
                lah_row(n + 1)
            } else {
                let prev = &self.rows[n];
                let at = |k: usize| prev.get(k).cloned().unwrap_or_else(LambdaPoly::zero);
                (0..=n + 1)
                    .map(|k| {
                        let carry = if k == 0 {
                            LambdaPoly::zero()
                        } else {
                            at(k - 1)
                        };
                        let factor = self.kind.recurrence_factor(n, k);
                        &carry + &(&factor * &at(k))
                    })
                    .collect()
            };
            self.rows.push(row);
        }
    }

    /// Entry `(n, k)`; zero when `k > n`. Panics when `n` exceeds the
    /// built range — call [`Triangle::grow`] first.
    pub fn get(&self, n: usize, k: usize) -> LambdaPoly {
        assert!(
            n < self.rows.len(),
            "triangle row {} not built (n_max = {})",
            n,
            self.rows.len() - 1
        );
        if k > n {
            LambdaPoly::zero()
        } else {
            self.rows[n][k].clone()
        }
    }
}

/// Row `n` of the Lah triangle from the closed form
/// `L(n, k) = n!/k! * C(n-1, k-1)`.
fn lah_row(n: usize) -> Vec<LambdaPoly> {
    (0..=n).map(|k| LambdaPoly::constant(lah(n, k))).collect()
}

/// Degenerate Stirling number of the second kind as a polynomial in λ,
/// from the triangle recurrence. Zero outside the triangle.
pub fn s2_lambda(n: usize, k: usize) -> LambdaPoly {
    Triangle::build(StirlingKind::S2Lambda, n).get(n, k)
}

/// Degenerate Stirling number of the first kind (signed).
pub fn s1_lambda(n: usize, k: usize) -> LambdaPoly {
    Triangle::build(StirlingKind::S1Lambda, n).get(n, k)
}

/// Unsigned degenerate Stirling number of the first kind:
/// `(-1)^(n-k)` times the signed value.
pub fn unsigned_s1_lambda(n: usize, k: usize) -> LambdaPoly {
    let signed = s1_lambda(n, k);
    if (n - k.min(n)) % 2 == 1 {
        -&signed
    } else {
        signed
    }
}

/// Lah number `L(n, k)` from the closed form; integer-valued.
pub fn lah(n: usize, k: usize) -> Rat {
    if n == 0 && k == 0 {
        return Rat::one();
    }
    if k == 0 || k > n {
        return Rat::zero();
    }
    factorial(n) / factorial(k) * binom_int(n - 1, k - 1)
}

/// Degenerate r-Stirling number of the second kind `S2^(r)(n+r, k+r)`,
/// by binomial convolution of the second-kind triangle with the
/// generalized falling factorials of `r`.
pub fn r_stirling2(n: usize, k: usize, r: usize) -> LambdaPoly {
    r_stirling2_from(&Triangle::build(StirlingKind::S2Lambda, n), n, k, r)
}

/// As [`r_stirling2`], reusing a prebuilt second-kind triangle.
pub fn r_stirling2_from(s2: &Triangle, n: usize, k: usize, r: usize) -> LambdaPoly {
    debug_assert_eq!(s2.kind(), StirlingKind::S2Lambda);
    let mut acc = LambdaPoly::zero();
    for l in k..=n {
        let term = s2.get(l, k).scale(&binom_int(n, l));
        acc = &acc + &(&term * &crate::exactalg::deg_falling_sym(&rat_int(r as i64), n - l));
    }
    acc
}

/// Degenerate Bell polynomial in the monomial basis: the coefficient of
/// `x^k` is the second-kind triangle entry `(n, k)`.
pub fn bell_poly(n: usize) -> BasisPoly {
    let t = Triangle::build(StirlingKind::S2Lambda, n);
    BasisPoly::new(Basis::Monomial, (0..=n).map(|k| t.get(n, k)).collect())
}

/// Degenerate Bell number: the Bell polynomial evaluated at `x = 1`.
pub fn bell_number(n: usize) -> LambdaPoly {
    bell_poly(n).eval_x(&Rat::one())
}

/// The series route to the Bell polynomial: `n! [t^n] exp(x (e_λ(t) - 1))`
/// for rational `x`. Must agree with [`bell_poly`] evaluated at `x`.
pub fn bell_gf_coeff(n: usize, x: &Rat) -> LambdaPoly {
    let lam = LambdaPoly::lambda();
    let e = series::deg_exp(&LambdaPoly::one(), &lam, n);
    let g = e.sub(&TruncatedSeries::one(n)).scale_rat(x);
    series::exp_series(&g)
        .expect("e_λ(t) - 1 has zero constant term")
        .egf_coeff(n)
}

/// Evaluation of a degenerate number at `1 + λx = 0`, where the closed
/// form is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularPointError;

impl fmt::Display for SingularPointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("singular evaluation point: 1 + lambda*x = 0")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SingularPointError {}

/// Degenerate Laguerre polynomial value by the closed form: a signed
/// binomial sum in powers of `x / (1 + λx)` weighted by generalized
/// rising factorials of 1.
pub fn laguerre_deg(n: usize, alpha: &Rat, x: &Rat, lam: &Rat) -> Result<Rat, SingularPointError> {
    let denom = Rat::one() + lam * x;
    if denom.is_zero() {
        return Err(SingularPointError);
    }
    let u = x / denom;
    let mut acc = Rat::zero();
    let mut u_pow = Rat::one();
    for k in 0..=n {
        // ⟨1⟩_{k,λ} = (1)_{k,-λ}
        let rising = deg_falling(&Rat::one(), k, &-lam);
        let sign = if k % 2 == 1 { -Rat::one() } else { Rat::one() };
        acc +=
            binom_rat(&(alpha + rat_int(n as i64)), n - k) * sign * rising / factorial(k) * &u_pow;
        u_pow *= &u;
    }
    Ok(acc)
}

/// Classical generalized Laguerre value — the λ = 0 limit of
/// [`laguerre_deg`], computed independently.
pub fn laguerre_classical(n: usize, alpha: &Rat, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    let mut x_pow = Rat::one();
    for k in 0..=n {
        let sign = if k % 2 == 1 { -Rat::one() } else { Rat::one() };
        acc += binom_rat(&(alpha + rat_int(n as i64)), n - k) * sign / factorial(k) * &x_pow;
        x_pow *= x;
    }
    acc
}

/// The series route to the same value: the ordinary coefficient `[t^n]`
/// of `(1-t)^(-(α+1)) e_λ^{-1}(u t/(1-t))` with `u = x/(1+λx)`.
pub fn laguerre_gf_coeff(
    n: usize,
    alpha: &Rat,
    x: &Rat,
    lam: &Rat,
) -> Result<Rat, SingularPointError> {
    let denom = Rat::one() + lam * x;
    if denom.is_zero() {
        return Err(SingularPointError);
    }
    let u = x / denom;
    // (1-t)^(-(α+1)): [t^m] = C(α+m, m)
    let front = TruncatedSeries::from_coeffs(
        (0..=n)
            .map(|m| binom_rat(&(alpha + rat_int(m as i64)), m))
            .collect(),
    );
    let inner = series::t_over_one_minus_t::<Rat>(n).scale(&u);
    let e = series::deg_exp(&-Rat::one(), lam, n);
    let composed = e.compose(&inner).expect("t/(1-t) has zero constant term");
    Ok(front.mul(&composed).coeff(n))
}

/// Generating-function series for one triangle column: the `k`-th power
/// of the family's base series divided by `k!`, whose exponential
/// coefficients run down column `k` of the triangle.
pub fn gf_series(kind: StirlingKind, k: usize, order: usize) -> TruncatedSeries<LambdaPoly> {
    let lam = LambdaPoly::lambda();
    let neg_lam = -&lam;
    let base = match kind {
        StirlingKind::S2Lambda => {
            series::deg_exp(&LambdaPoly::one(), &lam, order).sub(&TruncatedSeries::one(order))
        }
        StirlingKind::S1Lambda => series::deg_log(&lam, order),
        // Rising-factorial connection numbers: the degenerate logarithm
        // at step -λ composed with t/(1-t).
        StirlingKind::UnsignedS1Lambda => series::deg_log(&neg_lam, order)
            .compose(&series::t_over_one_minus_t(order))
            .expect("t/(1-t) has zero constant term"),
        StirlingKind::Lah => series::t_over_one_minus_t(order),
        StirlingKind::S2Classical => {
            series::deg_exp(&LambdaPoly::one(), &LambdaPoly::zero(), order)
                .sub(&TruncatedSeries::one(order))
        }
        StirlingKind::S1Classical => series::deg_log(&LambdaPoly::zero(), order),
    };
    base.pow(k).scale_rat(&(Rat::one() / factorial(k)))
}

/// The generating-function route to a single triangle entry:
/// `n! [t^n]` of [`gf_series`]. The oracle for the recurrence route.
pub fn gf_coeff(kind: StirlingKind, n: usize, k: usize) -> LambdaPoly {
    gf_series(kind, k, n).egf_coeff(n)
}
