//! Exact Laurent polynomials in one variable with arbitrary-precision
//! integer coefficients. This is the common value type for the Alexander
//! polynomial, the Kauffman bracket, and the Jones polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_i t^i` over the integers.
///
/// Stored densely from the least exponent upward; the first and last stored
/// coefficients are nonzero, and the zero polynomial stores nothing. Equality
/// is exact equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        Self::from_coeffs(exp, vec![coeff.into()])
    }

    /// Build from coefficients of `t^min_exp, t^(min_exp+1), ...`, trimming
    /// leading and trailing zeros.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { min_exp, coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_ints(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Least exponent with nonzero coefficient; None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    /// Greatest exponent with nonzero coefficient; None for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// The nonzero terms as (exponent, coefficient), ascending by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exp + i as i64, c))
    }

    /// Exact value at an integer point. Negative exponents are only defined
    /// at `t = 1` or `t = -1`, where `t^-k = t^k`; other points panic.
    pub fn evaluate_at_integer(&self, x: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        assert!(
            self.min_exp >= 0 || x == 1 || x == -1,
            "negative exponents need |t| = 1 to stay integral"
        );
        let xb = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xb + c;
        }
        // acc is the value with exponents counted from zero; rescale by x^min_exp
        match x {
            1 => acc,
            -1 => {
                if self.min_exp.rem_euclid(2) == 1 {
                    -acc
                } else {
                    acc
                }
            }
            _ => acc * xb.pow(self.min_exp as u32),
        }
    }

    /// Normal form used for Alexander polynomials: shift so the least
    /// exponent is zero and make that coefficient positive.
    pub fn canonicalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs[0].is_negative() {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        LaurentPolynomial { min_exp: 0, coeffs }
    }

    /// Substitute `t -> 1/t`, reversing the coefficient sequence.
    pub fn substitute_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let max = self.min_exp + self.coeffs.len() as i64 - 1;
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPolynomial { min_exp: -max, coeffs }
    }

    /// Multiply by the monomial `coeff * t^exp`.
    pub fn mul_monomial(&self, exp: i64, coeff: &BigInt) -> Self {
        if self.is_zero() || coeff.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            min_exp: self.min_exp + exp,
            coeffs: self.coeffs.iter().map(|c| c * coeff).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True if the coefficient sequence reads the same forward and backward,
    /// either exactly or with all signs flipped.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let fwd = &self.coeffs;
        let same = fwd.iter().zip(fwd.iter().rev()).all(|(a, b)| a == b);
        let flipped = fwd.iter().zip(fwd.iter().rev()).all(|(a, b)| *a == -b);
        same || flipped
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_exp - lo) as usize + i] += c;
        }
        LaurentPolynomial::from_coeffs(lo, coeffs)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_coeffs(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{e}")?;
            first = false;
        }
        Ok(())
    }
}
