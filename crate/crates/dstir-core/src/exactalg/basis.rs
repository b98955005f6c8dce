//! Polynomials in `x` over `Q[λ]`, expressed in one of five graded bases,
//! with exact conversion between any pair of bases.
//!
//! Every basis element of index `k` is a monic product of `k` linear
//! factors `x + shift(j)`, so the change-of-basis matrix into the
//! monomial basis is lower triangular with unit diagonal. Conversion out
//! of the monomial basis is back-substitution against those expansions.
//! Converting between two non-monomial bases goes through the monomial
//! hub; the expansions are built directly from the defining products,
//! which keeps this route independent of any triangle recurrence.

use alloc::vec;
use alloc::vec::Vec;

use super::lambda_poly::LambdaPoly;
use super::rational::{rat_int, Rat};

/// The five graded bases of polynomials in `x`.
///
/// Index `k` denotes, respectively: `x^k`, the falling factorial
/// `x(x-1)...(x-k+1)`, the rising factorial `x(x+1)...(x+k-1)`, and the
/// λ-step variants `x(x-λ)...(x-(k-1)λ)` and `x(x+λ)...(x+(k-1)λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Falling,
    Rising,
    FallingLambda,
    RisingLambda,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Falling,
        Basis::Rising,
        Basis::FallingLambda,
        Basis::RisingLambda,
    ];

    /// The additive shift in the `j`-th linear factor `x + shift(j)` of
    /// basis element `k` (for `j < k`).
    fn factor_shift(self, j: usize) -> LambdaPoly {
        match self {
            Basis::Monomial => LambdaPoly::zero(),
            Basis::Falling => LambdaPoly::from_int(-(j as i64)),
            Basis::Rising => LambdaPoly::from_int(j as i64),
            Basis::FallingLambda => LambdaPoly::lambda().scale(&rat_int(-(j as i64))),
            Basis::RisingLambda => LambdaPoly::lambda().scale(&rat_int(j as i64)),
        }
    }

    /// Monomial coefficients of basis element `k`, lowest power of `x`
    /// first; the vector has length `k + 1` and leading coefficient 1.
    pub fn element_monomial_coeffs(self, k: usize) -> Vec<LambdaPoly> {
        let mut coeffs = vec![LambdaPoly::one()];
        for j in 0..k {
            coeffs = mul_linear(&coeffs, &self.factor_shift(j));
        }
        coeffs
    }
}

/// Multiplies a monomial-coefficient vector by `(x + shift)`.
fn mul_linear(coeffs: &[LambdaPoly], shift: &LambdaPoly) -> Vec<LambdaPoly> {
    let mut out = vec![LambdaPoly::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        out[i + 1] = &out[i + 1] + c;
        if !shift.is_zero() {
            out[i] = &out[i] + &(c * shift);
        }
    }
    out
}

/// A polynomial in `x` with `Q[λ]` coefficients, tagged with the basis
/// its coefficient vector refers to.
///
/// Canonical form: no trailing zero coefficients, so the x-degree is
/// `coeffs.len() - 1`. Conversions are exact and preserve the degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPoly {
    basis: Basis,
    coeffs: Vec<LambdaPoly>,
}

impl BasisPoly {
    pub fn new(basis: Basis, mut coeffs: Vec<LambdaPoly>) -> Self {
        while coeffs.last().is_some_and(LambdaPoly::is_zero) {
            coeffs.pop();
        }
        BasisPoly { basis, coeffs }
    }

    pub fn zero(basis: Basis) -> Self {
        BasisPoly {
            basis,
            coeffs: Vec::new(),
        }
    }

    /// The `k`-th basis element of `basis` as a unit coefficient vector.
    pub fn basis_element(basis: Basis, k: usize) -> Self {
        let mut coeffs = vec![LambdaPoly::zero(); k + 1];
        coeffs[k] = LambdaPoly::one();
        BasisPoly { basis, coeffs }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Coefficient of basis element `k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> LambdaPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Degree in `x`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Re-expresses the polynomial in `target`. Conversion round trips
    /// are exact identities: the basis-change matrices are mutually
    /// inverse unitriangular matrices.
    pub fn convert(&self, target: Basis) -> BasisPoly {
        if self.basis == target {
            return self.clone();
        }
        let monomial = self.to_monomial_coeffs();
        from_monomial_coeffs(target, monomial)
    }

    /// Monomial coefficients of the abstract polynomial, lowest power
    /// first.
    fn to_monomial_coeffs(&self) -> Vec<LambdaPoly> {
        let mut acc = vec![LambdaPoly::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, e) in self.basis.element_monomial_coeffs(k).iter().enumerate() {
                acc[i] = &acc[i] + &(c * e);
            }
        }
        acc
    }

    /// Exact evaluation at a rational `x`, yielding an element of `Q[λ]`.
    pub fn eval_x(&self, x: &Rat) -> LambdaPoly {
        let x_poly = LambdaPoly::constant(x.clone());
        let mut acc = LambdaPoly::zero();
        for c in self.to_monomial_coeffs().iter().rev() {
            acc = &(&acc * &x_poly) + c;
        }
        acc
    }

    /// Sum of two polynomials in the same basis.
    pub fn add(&self, other: &BasisPoly) -> BasisPoly {
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        BasisPoly::new(self.basis, coeffs)
    }

    /// Scalar multiple by an element of `Q[λ]`.
    pub fn scale(&self, s: &LambdaPoly) -> BasisPoly {
        BasisPoly::new(self.basis, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Product of two monomial-basis polynomials.
    pub fn mul_monomial(&self, other: &BasisPoly) -> BasisPoly {
        assert_eq!(
            self.basis,
            Basis::Monomial,
            "mul_monomial needs monomial basis"
        );
        assert_eq!(
            other.basis,
            Basis::Monomial,
            "mul_monomial needs monomial basis"
        );
        if self.is_zero() || other.is_zero() {
            return BasisPoly::zero(Basis::Monomial);
        }
        let mut coeffs = vec![LambdaPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BasisPoly::new(Basis::Monomial, coeffs)
    }

    /// Multiplies a monomial-basis polynomial by `x^p`.
    pub fn shift_up(&self, p: usize) -> BasisPoly {
        assert_eq!(self.basis, Basis::Monomial, "shift_up needs monomial basis");
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![LambdaPoly::zero(); p];
        coeffs.extend(self.coeffs.iter().cloned());
        BasisPoly::new(Basis::Monomial, coeffs)
    }

    /// The product `(x + s_0)(x + s_1)...` in the monomial basis.
    pub fn product_of_linear_factors(shifts: &[LambdaPoly]) -> BasisPoly {
        let mut coeffs = vec![LambdaPoly::one()];
        for s in shifts {
            coeffs = mul_linear(&coeffs, s);
        }
        BasisPoly::new(Basis::Monomial, coeffs)
    }
}

/// Back-substitution: expresses a monomial-coefficient vector in
/// `target`. Works from the top degree down, peeling one monic basis
/// element per step.
fn from_monomial_coeffs(target: Basis, mut monomial: Vec<LambdaPoly>) -> BasisPoly {
    while monomial.last().is_some_and(LambdaPoly::is_zero) {
        monomial.pop();
    }
    let mut out = vec![LambdaPoly::zero(); monomial.len()];
    for k in (0..monomial.len()).rev() {
        let d = monomial[k].clone();
        if d.is_zero() {
            continue;
        }
        let element = target.element_monomial_coeffs(k);
        for (i, e) in element.iter().enumerate() {
            monomial[i] = &monomial[i] - &(&d * e);
        }
        out[k] = d;
    }
    debug_assert!(monomial.iter().all(LambdaPoly::is_zero));
    BasisPoly::new(target, out)
}
