//! Coefficient fields and the two Hecke parameters.
//!
//! Every algebraic structure in this crate is generic over a [`Coeff`] type.
//! The exact symbolic field is [`Scalar`](crate::Scalar); specializations to
//! numeric parameter values use [`Rational`](crate::Rational) (exact) or
//! `f64`/`f32` (approximate). The parameters themselves travel in a
//! [`Params`] value holding `p^(1/2)` and `q^(1/2)`.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative field usable as the coefficient ring of the Hecke algebra.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn checked_inv(&self) -> Option<Self>;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.checked_inv().map(|inv| self.clone() * inv)
    }

    /// Whether equality on this type is exact (true for symbolic and rational
    /// fields, false for floating point).
    fn is_exact() -> bool {
        true
    }

    fn powi(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.checked_inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Some(acc)
    }
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

macro_rules! float_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn checked_inv(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / *self)
                }
            }

            fn is_exact() -> bool {
                false
            }
        }
    };
}

float_coeff!(f64);
float_coeff!(f32);

/// Fields carrying the automorphism `p^(1/2) -> p^(-1/2)`, `q^(1/2) -> q^(-1/2)`.
pub trait ParamInvolution: Coeff {
    fn invert_params(&self) -> Self;
}

/// Rational-valued entries a numeric field can be built from.
pub trait FromRational: Coeff {
    fn from_rational(r: &BigRational) -> Self;
}

impl FromRational for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl FromRational for f64 {
    fn from_rational(r: &BigRational) -> Self {
        num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
}

impl FromRational for f32 {
    fn from_rational(r: &BigRational) -> Self {
        use num_traits::ToPrimitive;
        r.to_f32().unwrap_or(f32::NAN)
    }
}

/// The parameters `p^(1/2)` and `q^(1/2)` of the generic Hecke algebra,
/// realized in some coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct Params<F> {
    p_half: F,
    q_half: F,
    p_half_inv: F,
    q_half_inv: F,
}

impl<F: Coeff> Params<F> {
    pub fn new(p_half: F, q_half: F) -> Result<Self> {
        let p_half_inv = p_half
            .checked_inv()
            .ok_or_else(|| Error::DomainError("p^(1/2) must be nonzero".into()))?;
        let q_half_inv = q_half
            .checked_inv()
            .ok_or_else(|| Error::DomainError("q^(1/2) must be nonzero".into()))?;
        Ok(Params {
            p_half,
            q_half,
            p_half_inv,
            q_half_inv,
        })
    }

    pub fn p_half(&self) -> &F {
        &self.p_half
    }

    pub fn q_half(&self) -> &F {
        &self.q_half
    }

    pub fn p(&self) -> F {
        self.p_half.clone() * &self.p_half
    }

    pub fn q(&self) -> F {
        self.q_half.clone() * &self.q_half
    }

    /// `p^(k/2)`.
    pub fn p_pow_half(&self, k: i32) -> F {
        pow_signed(&self.p_half, &self.p_half_inv, k)
    }

    /// `q^(k/2)`.
    pub fn q_pow_half(&self, k: i32) -> F {
        pow_signed(&self.q_half, &self.q_half_inv, k)
    }

    pub fn p_pow(&self, k: i32) -> F {
        self.p_pow_half(2 * k)
    }

    pub fn q_pow(&self, k: i32) -> F {
        self.q_pow_half(2 * k)
    }

    /// `p^(a/2) q^(b/2)`.
    pub fn monomial(&self, a: i32, b: i32) -> F {
        self.p_pow_half(a) * self.q_pow_half(b)
    }

    pub fn int(&self, v: i64) -> F {
        F::from_i64(v)
    }

    /// Divide, mapping a zero divisor to [`Error::DivisionByZero`].
    pub fn div(&self, num: &F, den: &F) -> Result<F> {
        num.checked_div(den).ok_or(Error::DivisionByZero)
    }
}

impl<F: FromRational> Params<F> {
    /// Numeric parameters from rational values of `p^(1/2)` and `q^(1/2)`.
    pub fn numeric(p_half: &BigRational, q_half: &BigRational) -> Result<Self> {
        Params::new(F::from_rational(p_half), F::from_rational(q_half))
    }
}

fn pow_signed<F: Coeff>(base: &F, inv: &F, k: i32) -> F {
    let b = if k < 0 { inv } else { base };
    let mut e = k.unsigned_abs();
    let mut acc = F::one();
    let mut sq = b.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = sq.clone() * &sq;
        }
    }
    acc
}

/// Approximate equality for floating coefficients, exact otherwise.
pub fn approx_eq<F: Coeff + ToF64>(a: &F, b: &F, tol: f64) -> bool {
    if F::is_exact() {
        a == b
    } else {
        let (x, y) = (a.to_f64(), b.to_f64());
        (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
    }
}

pub trait ToF64 {
    fn to_f64(&self) -> f64;
}

impl ToF64 for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl ToF64 for f32 {
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl ToF64 for BigRational {
    fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_numeric_params() {
        let params = Params::<BigRational>::numeric(
            &BigRational::from_integer(2.into()),
            &BigRational::from_integer(3.into()),
        )
        .unwrap();
        assert_eq!(params.p(), BigRational::from_integer(4.into()));
        assert_eq!(params.q_pow(-1), BigRational::new(1.into(), 9.into()));
        assert_eq!(params.monomial(1, 2), BigRational::from_integer(18.into()));
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(Params::<f64>::new(0.0, 1.0).is_err());
    }

    #[test]
    fn float_powi() {
        assert_eq!(Coeff::powi(&2.0f64, -2), Some(0.25));
        assert_eq!(Coeff::powi(&0.0f64, -1), None);
    }
}
