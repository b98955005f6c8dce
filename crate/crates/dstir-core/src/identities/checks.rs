//! Case builders: one function per identity, each producing the full
//! list of (parameters, lhs, rhs) comparisons for a given range.
//!
//! Scan ranges follow each identity's hypotheses:
//!
//! | id        | range                                            |
//! |-----------|--------------------------------------------------|
//! | T1, E19   | `0 <= k <= n <= n_max` (reads row `n+1`)         |
//! | T2a/b, E22, E23_1 | `0 <= k <= n <= n_max`, `0 <= r <= r_max` |
//! | T3, T9, T13..T15, E53, E57 | `0 <= k(/p/l) <= n <= n_max`    |
//! | T4        | `1 <= n <= n_max`, `0 <= k <= n`                 |
//! | T5a/b     | `0 <= k <= n <= n_max`, α in {λ, 1/2, -2, 3/4}   |
//! | T6        | `k >= 1`, `k-1 <= n <= n_max` (reads row `n+1`)  |
//! | T7, T8, T8limit | `0 <= k(/p) <= n <= n_max` (read row `n+1`) |
//! | T10       | `0 <= p <= n <= n_max`, coefficient-wise in x    |
//! | T10corollary | `1 <= n <= n_max`                             |
//! | T12       | `0 <= p <= n <= n_max` on the sampled grid       |
//! | L11       | both triangle products over `0 <= k <= n <= n_max` |
//! | T13probe  | `1 <= p <= n <= n_max` (negative control)        |
//! | RT_exp_log | series order `max(n_max + 2, 16)`               |
//! | RT_limits | `0 <= k <= n <= n_max`, both classical kinds     |

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactalg::{
    binom_int, binom_sym, deg_falling, deg_falling_poly, deg_falling_sym, deg_rising_sym,
    factorial, falling_factorial_sym, rat, rat_int, Basis, BasisPoly, LambdaPoly, Rat,
};
use crate::numbers::{lah, r_stirling2_from, StirlingKind, Triangle};
use crate::series::{deg_exp, deg_log, TruncatedSeries};

use super::sampling;
use super::{param_int, param_rat, IdentityId, PolyCase, RatCase};

/// Bound on the shift parameter `r` wherever it appears.
pub const DEFAULT_R_MAX: usize = 4;

struct Tables {
    s1: Triangle,
    s2: Triangle,
    us1: Triangle,
    s1c: Triangle,
    s2c: Triangle,
}

impl Tables {
    fn build(n_max: usize) -> Tables {
        Tables {
            s1: Triangle::build(StirlingKind::S1Lambda, n_max),
            s2: Triangle::build(StirlingKind::S2Lambda, n_max),
            us1: Triangle::build(StirlingKind::UnsignedS1Lambda, n_max),
            s1c: Triangle::build(StirlingKind::S1Classical, n_max),
            s2c: Triangle::build(StirlingKind::S2Classical, n_max),
        }
    }
}

fn sign(parity: usize) -> Rat {
    if parity % 2 == 1 {
        -rat_int(1)
    } else {
        rat_int(1)
    }
}

pub(super) fn poly_cases(id: IdentityId, n_max: usize, r_max: usize) -> Vec<PolyCase> {
    // one row past the scan bound: several identities read entry (n+1, ·)
    let t = Tables::build(n_max + 1);
    match id {
        IdentityId::T1 => t1(&t, n_max),
        IdentityId::T2a => t2a(&t, n_max, r_max),
        IdentityId::T2b | IdentityId::E23_1 => t2b(&t, n_max, r_max),
        IdentityId::T3 => t3(&t, n_max),
        IdentityId::T4 => t4(&t, n_max),
        IdentityId::T5a => t5(&t, n_max, false),
        IdentityId::T5b => t5(&t, n_max, true),
        IdentityId::T6 => t6(&t, n_max),
        IdentityId::T7 => t7_symbolic(&t, n_max),
        IdentityId::T8 => t8(&t, n_max),
        IdentityId::T8Limit => t8_limit(&t, n_max),
        IdentityId::T9 => t9(&t, n_max),
        IdentityId::T10 => t10(&t, n_max),
        IdentityId::T10Corollary => t10_corollary(&t, n_max),
        IdentityId::L11 => l11(&t, n_max),
        IdentityId::T13 => t13(&t, n_max, false),
        IdentityId::T13Probe => t13(&t, n_max, true),
        IdentityId::T14 => t14(&t, n_max),
        IdentityId::T15 => t15(&t, n_max),
        IdentityId::E16 => e16(&t, n_max),
        IdentityId::E19 => e19(&t, n_max),
        IdentityId::E22 => e22(&t, n_max, r_max),
        IdentityId::E53 => e53(&t, n_max),
        IdentityId::E57 => e57(&t, n_max),
        IdentityId::RtExpLog => rt_exp_log(n_max),
        IdentityId::RtLimits => rt_limits(&t, n_max),
        IdentityId::T12 => unreachable!("T12 is sampled-only"),
    }
}

/// Binomial convolution of the second-kind column with the generalized
/// falling factorials of 1 equals the shifted entry.
fn t1(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let lam = LambdaPoly::lambda();
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let mut lhs = LambdaPoly::zero();
            for j in k..=n {
                let w = t.s2.get(j, k).scale(&binom_int(n, j));
                lhs = &lhs + &(&w * &deg_falling_sym(&rat_int(1), n - j));
            }
            let rhs =
                &t.s2.get(n + 1, k + 1) + &(&lam.scale(&rat_int(n as i64)) * &t.s2.get(n, k + 1));
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("k", k)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Same convolution as `t1`, with the split right-hand side.
fn e16(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let mut lhs = LambdaPoly::zero();
            for j in k..=n {
                let w = t.s2.get(j, k).scale(&binom_int(n, j));
                lhs = &lhs + &(&w * &deg_falling_sym(&rat_int(1), n - j));
            }
            let rhs = &t.s2.get(n, k + 1).scale(&rat_int(k as i64 + 1)) + &t.s2.get(n, k);
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("k", k)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// The shifted-index recurrence rearrangement.
fn e19(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let lam = LambdaPoly::lambda();
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let lhs =
                &t.s2.get(n + 1, k + 1) + &(&lam.scale(&rat_int(n as i64)) * &t.s2.get(n, k + 1));
            let rhs = &t.s2.get(n, k) + &t.s2.get(n, k + 1).scale(&rat_int(k as i64 + 1));
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("k", k)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// The two closed sums for the shifted r-Stirling numbers agree.
fn t2a(t: &Tables, n_max: usize, r_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            for r in 0..=r_max {
                let mut lhs = LambdaPoly::zero();
                let mut rhs = LambdaPoly::zero();
                for l in k..=n {
                    let a = t.s2.get(l, k).scale(&binom_int(n, l));
                    lhs = &lhs + &(&a * &deg_falling_sym(&rat_int(r as i64), n - l));
                    let w = binom_int(l, k)
                        * crate::exactalg::falling_factorial(&rat_int(r as i64), l - k);
                    rhs = &rhs + &t.s2.get(n, l).scale(&w);
                }
                cases.push(PolyCase::new(
                    vec![param_int("n", n), param_int("k", k), param_int("r", r)],
                    lhs,
                    rhs,
                ));
            }
        }
    }
    cases
}

/// Expanding the shifted product `(x+r)(x+r-λ)...` in the falling basis
/// recovers the r-Stirling coefficients.
fn t2b(t: &Tables, n_max: usize, r_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for r in 0..=r_max {
            let shifts: Vec<LambdaPoly> = (0..n)
                .map(|j| LambdaPoly::new(vec![rat_int(r as i64), rat_int(-(j as i64))]))
                .collect();
            let product = BasisPoly::product_of_linear_factors(&shifts);
            let in_falling = product.convert(Basis::Falling);
            for k in 0..=n {
                cases.push(PolyCase::new(
                    vec![param_int("n", n), param_int("r", r), param_int("k", k)],
                    in_falling.coeff(k),
                    r_stirling2_from(&t.s2, n, k, r),
                ));
            }
        }
    }
    cases
}

/// Series route for the r-Stirling numbers: coefficients of
/// `e_λ^r(t) (e_λ(t)-1)^k / k!` match the convolution sum.
fn e22(t: &Tables, n_max: usize, r_max: usize) -> Vec<PolyCase> {
    let lam = LambdaPoly::lambda();
    // order n_max + 2 so boundary off-by-ones cannot hide
    let order = n_max + 2;
    let one = TruncatedSeries::one(order);
    let base = deg_exp(&LambdaPoly::one(), &lam, order).sub(&one);
    // (e_λ - 1)^k / k!, built incrementally over k
    let mut powers: Vec<TruncatedSeries<LambdaPoly>> = Vec::with_capacity(n_max + 1);
    powers.push(TruncatedSeries::one(order));
    for k in 1..=n_max {
        let next = powers[k - 1]
            .mul(&base)
            .scale_rat(&(rat_int(1) / rat_int(k as i64)));
        powers.push(next);
    }
    let exps: Vec<TruncatedSeries<LambdaPoly>> = (0..=r_max)
        .map(|r| deg_exp(&LambdaPoly::from_int(r as i64), &lam, order))
        .collect();
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for (k, power) in powers.iter().enumerate().take(n + 1) {
            for (r, er) in exps.iter().enumerate() {
                let series = er.mul(power);
                cases.push(PolyCase::new(
                    vec![param_int("n", n), param_int("k", k), param_int("r", r)],
                    series.egf_coeff(n),
                    r_stirling2_from(&t.s2, n, k, r),
                ));
            }
        }
    }
    cases
}

/// Weighted rising-factorial sum over the unsigned triangle row equals
/// the column sum of scaled entries.
fn t3(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let mut lhs = LambdaPoly::zero();
            for l in k..=n {
                let w = t.us1.get(n, l).scale(&binom_int(l, k));
                lhs = &lhs + &(&w * &deg_rising_sym(&rat_int(1), l - k));
            }
            lhs = lhs.scale(&(rat_int(1) / factorial(n)));
            let mut rhs = LambdaPoly::zero();
            for l in k..=n {
                rhs = &rhs + &t.us1.get(l, k).scale(&(rat_int(1) / factorial(l)));
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("k", k)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Two-term first-kind combination equals its row convolution.
fn t4(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            let lhs = &t.s1.get(n, k) + &t.s1.get(n - 1, k).scale(&rat_int(n as i64));
            let mut rhs = LambdaPoly::zero();
            for l in k..=n {
                let w = t.s1.get(n, l).scale(&binom_int(l, k));
                rhs = &rhs + &(&w * &deg_falling_sym(&rat_int(1), l - k));
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("k", k)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Three equivalent convolutions with a free binomial parameter α,
/// instantiated at the symbol λ and at rational samples.
fn t5(t: &Tables, n_max: usize, third_form: bool) -> Vec<PolyCase> {
    let alphas: [(&'static str, LambdaPoly); 4] = [
        ("λ", LambdaPoly::lambda()),
        ("1/2", LambdaPoly::constant(rat(1, 2))),
        ("-2", LambdaPoly::from_int(-2)),
        ("3/4", LambdaPoly::constant(rat(3, 4))),
    ];
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            for (name, alpha) in &alphas {
                let mut form1 = LambdaPoly::zero();
                for l in k..=n {
                    let w = t.s1.get(n, l).scale(&binom_int(l, k));
                    form1 = &form1 + &(&w * &deg_falling_poly(alpha, l - k));
                }
                let other = if third_form {
                    let mut acc = LambdaPoly::zero();
                    for l in 0..=(n - k) {
                        let w = t.s1.get(n - l, k).scale(&(binom_int(n, l) * factorial(l)));
                        acc = &acc + &(&w * &binom_sym(alpha, l));
                    }
                    acc
                } else {
                    let mut acc = LambdaPoly::zero();
                    for l in k..=n {
                        let w = t.s1.get(l, k).scale(&(binom_int(n, l) * factorial(n - l)));
                        acc = &acc + &(&w * &binom_sym(alpha, n - l));
                    }
                    acc
                };
                cases.push(PolyCase::new(
                    vec![
                        param_int("n", n),
                        param_int("k", k),
                        ("alpha", alloc::string::String::from(*name)),
                    ],
                    form1,
                    other,
                ));
            }
        }
    }
    cases
}

/// Factorial-normalized unsigned entry at `-λ` equals a binomial sum of
/// signed entries.
fn t6(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 1..=(n + 1) {
            let lhs = t
                .us1
                .get(n + 1, k)
                .subst_neg_lambda()
                .scale(&(rat_int(1) / factorial(n + 1)));
            let mut rhs = LambdaPoly::zero();
            for l in (k - 1)..=n {
                rhs = &rhs
                    + &t.s1
                        .get(l + 1, k)
                        .scale(&(binom_int(n, l) / factorial(l + 1)));
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("k", k)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Symbolic form of the degenerate-logarithm convolution, with the
/// `1/λ` powers cleared into the products `(λ-1)...(λ-m+1)`.
fn t7_symbolic(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let lhs = t.s1.get(n + 1, k + 1);
            let mut rhs = LambdaPoly::zero();
            let mut l = k as i64 - 1;
            while l < n as i64 {
                let m = (n as i64 - l) as usize; // >= 1
                let mut prod = LambdaPoly::one();
                for j in 1..m {
                    prod = &prod * &LambdaPoly::new(vec![rat_int(-(j as i64)), rat_int(1)]);
                }
                let w = factorial(n + 1)
                    / (rat_int(k as i64 + 1) * factorial(m) * factorial((l + 1) as usize));
                rhs = &rhs + &(&prod * &t.s1.get((l + 1) as usize, k)).scale(&w);
                l += 1;
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("k", k)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Sampled form of the same identity, evaluated with `1/λ` directly at
/// nonzero rational λ.
pub(super) fn t7_sampled_cases(n_max: usize, seed: u64, extra: u32) -> Vec<RatCase> {
    let t = Tables::build(n_max + 1);
    let grid = sampling::lambda_grid(seed, extra);
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            for lam in &grid {
                let lhs = t.s1.get(n + 1, k + 1).eval(lam);
                let inv = lam.recip();
                let mut sum = Rat::zero();
                let mut l = k as i64 - 1;
                while l < n as i64 {
                    let m = (n as i64 - l) as usize;
                    sum += lam.pow(-l as i32) / factorial(m)
                        * deg_falling(&rat_int(1), m, &inv)
                        * t.s1.get((l + 1) as usize, k).eval(lam)
                        / factorial((l + 1) as usize);
                    l += 1;
                }
                let rhs = lam.pow(n as i32 - 1) / rat_int(k as i64 + 1) * factorial(n + 1) * sum;
                cases.push(RatCase {
                    params: vec![
                        param_int("n", n),
                        param_int("k", k),
                        param_rat("lambda", lam),
                    ],
                    lhs,
                    rhs,
                });
            }
        }
    }
    cases
}

/// Double binomial sum with classical falling factorials of the symbol
/// λ itself.
fn t8(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let lam = LambdaPoly::lambda();
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            let lhs = t.s1.get(n + 1, p + 1);
            let mut rhs = LambdaPoly::zero();
            for k in p..=n {
                let lam_falling = falling_factorial_sym(&lam, n - k);
                for l in p..=k {
                    let w = sign(k - l) * binom_int(k, l) * binom_int(n, k) * factorial(k - l);
                    rhs = &rhs + &(&t.s1.get(l, p).scale(&w) * &lam_falling);
                }
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("p", p)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// λ = 0 limit of `t8` against the classical first-kind triangle.
fn t8_limit(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            let lhs = t.s1c.get(n + 1, p + 1);
            let mut rhs = LambdaPoly::zero();
            for l in p..=n {
                let w = sign(n - l) * binom_int(n, l) * factorial(n - l);
                rhs = &rhs + &t.s1c.get(l, p).scale(&w);
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("p", p)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Column sums of the unsigned triangle at `-λ` against binomial sums
/// of signed entries.
fn t9(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            let mut lhs = LambdaPoly::zero();
            let mut rhs = LambdaPoly::zero();
            for k in p..=n {
                lhs = &lhs
                    + &t.us1
                        .get(k, p)
                        .subst_neg_lambda()
                        .scale(&(rat_int(1) / factorial(k)));
                rhs = &rhs + &t.s1.get(k, p).scale(&(binom_int(n, k) / factorial(k)));
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("p", p)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Bell-polynomial convolution, checked coefficient-wise in `x` plus an
/// `x = 1` aggregate per tuple.
fn t10(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let bell: Vec<BasisPoly> = (0..=n_max)
        .map(|m| BasisPoly::new(Basis::Monomial, (0..=m).map(|j| t.s2.get(m, j)).collect()))
        .collect();
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            let mut lhs = BasisPoly::zero(Basis::Monomial);
            for k in p..=n {
                let w = t.s2.get(k, p).scale(&binom_int(n, k));
                lhs = lhs.add(&bell[n - k].scale(&w));
            }
            let lhs = lhs.shift_up(p);
            let rhs = BasisPoly::new(
                Basis::Monomial,
                (0..=n)
                    .map(|k| {
                        if k < p {
                            LambdaPoly::zero()
                        } else {
                            t.s2.get(n, k).scale(&binom_int(k, p))
                        }
                    })
                    .collect(),
            );
            let top = lhs.degree().unwrap_or(0).max(rhs.degree().unwrap_or(0));
            for j in 0..=top {
                cases.push(PolyCase::new(
                    vec![param_int("n", n), param_int("p", p), param_int("coeff", j)],
                    lhs.coeff(j),
                    rhs.coeff(j),
                ));
            }
            cases.push(PolyCase::new(
                vec![
                    param_int("n", n),
                    param_int("p", p),
                    ("x", alloc::string::String::from("1")),
                ],
                lhs.eval_x(&rat_int(1)),
                rhs.eval_x(&rat_int(1)),
            ));
        }
    }
    cases
}

/// The first-moment special case of `t10`.
fn t10_corollary(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let bell_num = |m: usize| -> LambdaPoly {
        let mut acc = LambdaPoly::zero();
        for j in 0..=m {
            acc = &acc + &t.s2.get(m, j);
        }
        acc
    };
    let mut cases = Vec::new();
    for n in 1..=n_max {
        let mut lhs = LambdaPoly::zero();
        for k in 1..=n {
            lhs = &lhs + &t.s2.get(n, k).scale(&rat_int(k as i64));
        }
        let mut rhs = LambdaPoly::zero();
        for k in 0..n {
            let w = bell_num(k).scale(&binom_int(n, k));
            rhs = &rhs + &(&w * &deg_falling_sym(&rat_int(1), n - k));
        }
        cases.push(PolyCase::new(vec![param_int("n", n)], lhs, rhs));
    }
    cases
}

/// Laguerre connection on the sampled grid, avoiding both singular loci.
pub(super) fn t12_cases(n_max: usize, seed: u64, extra: u32) -> Vec<RatCase> {
    let lam_grid = sampling::lambda_grid(seed, extra);
    let x_grid = sampling::x_grid();
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            for lam in &lam_grid {
                for x in &x_grid {
                    let denom = rat_int(1) + lam * x;
                    let denom_neg = rat_int(1) - lam * x;
                    if denom.is_zero() || denom_neg.is_zero() {
                        continue;
                    }
                    let alpha = rat_int(p as i64 - 1);
                    let lhs = crate::numbers::laguerre_deg(n - p, &alpha, &(-x), &(-lam))
                        .expect("grid avoids singular loci");
                    let u = x / &denom;
                    let mut sum = Rat::zero();
                    let mut u_pow = rat_int(1);
                    for k in p..=n {
                        sum += binom_int(k, p)
                            * deg_falling(&rat_int(1), k - p, lam)
                            * lah(n, k)
                            * &u_pow;
                        u_pow *= &u;
                    }
                    let rhs = factorial(p) / factorial(n) * sum;
                    cases.push(RatCase {
                        params: vec![
                            param_int("n", n),
                            param_int("p", p),
                            param_rat("lambda", lam),
                            param_rat("x", x),
                        ],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    cases
}

/// The two signed triangles are mutually inverse matrices.
fn l11(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let delta = if n == k {
                LambdaPoly::one()
            } else {
                LambdaPoly::zero()
            };
            let mut first = LambdaPoly::zero();
            let mut second = LambdaPoly::zero();
            for j in k..=n {
                first = &first + &(&t.s1.get(n, j) * &t.s2.get(j, k));
                second = &second + &(&t.s2.get(n, j) * &t.s1.get(j, k));
            }
            cases.push(PolyCase::new(
                vec![
                    param_int("n", n),
                    param_int("k", k),
                    ("product", alloc::string::String::from("S1*S2")),
                ],
                first,
                delta.clone(),
            ));
            cases.push(PolyCase::new(
                vec![
                    param_int("n", n),
                    param_int("k", k),
                    ("product", alloc::string::String::from("S2*S1")),
                ],
                second,
                delta,
            ));
        }
    }
    cases
}

/// Signed Lah-weighted column sum equals the sign-flipped entry. The
/// probe variant swaps the Lah weight `L(k,p)` for the misprinted
/// `L(n,k)` and must fail.
fn t13(t: &Tables, n_max: usize, probe: bool) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        let p_lo = if probe { 1 } else { 0 };
        for p in p_lo..=n {
            let lhs = t.s2.get(n, p).subst_neg_lambda().scale(&sign(n));
            let mut rhs = LambdaPoly::zero();
            for k in p..=n {
                let weight = if probe { lah(n, k) } else { lah(k, p) };
                rhs = &rhs + &t.s2.get(n, k).scale(&(weight * sign(k)));
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("p", p)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

fn t14(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            let lhs = t.s2.get(n, p).subst_neg_lambda();
            let mut rhs = LambdaPoly::zero();
            for k in p..=n {
                let w = t.s2.get(k, p).scale(&(sign(k) * binom_int(n, k)));
                rhs = &rhs + &(&w * &deg_rising_sym(&rat_int(p as i64), n - k));
            }
            rhs = rhs.scale(&sign(p));
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("p", p)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

fn t15(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            let lhs = t.us1.get(n, p).subst_neg_lambda();
            let mut rhs = LambdaPoly::zero();
            for k in p..=n {
                rhs = &rhs + &t.s1.get(k, p).scale(&lah(n, k));
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("p", p)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// The λ-dependence of the mixed sum cancels to the Lah number.
///
/// This is the basis chain rising → λ-rising → falling: expanding
/// `⟨x⟩_n` over `⟨x⟩_{k,-λ} = (x)_{k,λ}` and then over `(x)_l` gives
/// `L(n,l) = Σ_k {n k}_{-λ} S2λ(k,l)`. The sign flip on the unsigned
/// factor is essential — without it the sum keeps a λ term (for example
/// `2 - 2λ` instead of `L(2,1) = 2`).
fn e53(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for l in 0..=n {
            let lhs = LambdaPoly::constant(lah(n, l));
            let mut rhs = LambdaPoly::zero();
            for k in l..=n {
                rhs = &rhs + &(&t.us1.get(n, k).subst_neg_lambda() * &t.s2.get(k, l));
            }
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("l", l)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Bridge between the two sign-flipped second-kind sums.
fn e57(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for p in 0..=n {
            let mut lhs = LambdaPoly::zero();
            for k in p..=n {
                lhs = &lhs + &t.s2.get(n, k).scale(&(lah(k, p) * sign(k)));
            }
            let mut rhs = LambdaPoly::zero();
            for k in p..=n {
                let w = t.s2.get(k, p).scale(&(sign(n - k) * binom_int(n, k)));
                rhs = &rhs + &(&w * &deg_rising_sym(&rat_int(p as i64), n - k));
            }
            rhs = rhs.scale(&sign(p));
            cases.push(PolyCase::new(
                vec![param_int("n", n), param_int("p", p)],
                lhs,
                rhs,
            ));
        }
    }
    cases
}

/// Series round trips over `Q[λ]`: exp∘log, log∘exp, and the
/// back-substituted compositional inverse against the closed form.
fn rt_exp_log(n_max: usize) -> Vec<PolyCase> {
    let order = (n_max + 2).max(16);
    let lam = LambdaPoly::lambda();
    let one = TruncatedSeries::one(order);
    let e = deg_exp(&LambdaPoly::one(), &lam, order);
    let l = deg_log(&lam, order);
    let e_minus_1 = e.sub(&one);

    let exp_of_log = e.compose(&l).expect("log has zero constant term");
    let one_plus_t = one.add(&TruncatedSeries::t(order));
    let log_of_exp = l
        .compose(&e_minus_1)
        .expect("exp minus one has zero constant term");
    let t_series = TruncatedSeries::t(order);
    let inverse = e_minus_1
        .compositional_inverse()
        .expect("linear coefficient is 1");

    let subchecks: [(
        &'static str,
        &TruncatedSeries<LambdaPoly>,
        &TruncatedSeries<LambdaPoly>,
    ); 3] = [
        ("exp_of_log", &exp_of_log, &one_plus_t),
        ("log_of_exp", &log_of_exp, &t_series),
        ("inverse_of_exp", &inverse, &l),
    ];
    let mut cases = Vec::new();
    for (name, got, expected) in subchecks {
        for n in 0..=order {
            cases.push(PolyCase::new(
                vec![
                    ("check", alloc::string::String::from(name)),
                    param_int("n", n),
                ],
                got.coeff(n),
                expected.coeff(n),
            ));
        }
    }
    cases
}

/// λ = 0 specializations of both degenerate triangles match the
/// classical triangles built from their own recurrences.
fn rt_limits(t: &Tables, n_max: usize) -> Vec<PolyCase> {
    let zero = Rat::zero();
    let mut cases = Vec::new();
    for (name, deg, classical) in [("s1", &t.s1, &t.s1c), ("s2", &t.s2, &t.s2c)] {
        for n in 0..=n_max {
            for k in 0..=n {
                cases.push(PolyCase::new(
                    vec![
                        ("kind", alloc::string::String::from(name)),
                        param_int("n", n),
                        param_int("k", k),
                    ],
                    LambdaPoly::constant(deg.get(n, k).eval(&zero)),
                    classical.get(n, k),
                ));
            }
        }
    }
    cases
}
