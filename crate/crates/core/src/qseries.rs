//! q-shifted factorials, q-binomial coefficients and q-Krawtchouk
//! polynomials.
//!
//! Everything here is generic over the coefficient field; `q` is taken from
//! the supplied [`Params`]. With [`Params::symbolic`] the results are exact
//! rational functions.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{Coeff, Params};
use crate::scalars::Rational;

/// `(a; q)_k = prod_{i=0}^{k-1} (1 - a q^i)`.
pub fn q_pochhammer<F: Coeff>(params: &Params<F>, a: &F, k: usize) -> F {
    let q = params.q();
    let mut acc = F::one();
    let mut aq = a.clone();
    for _ in 0..k {
        acc = acc * (F::one() - aq.clone());
        aq = aq * &q;
    }
    acc
}

/// Gaussian binomial coefficient `[n d]_q`, computed by the Pascal rule
/// `[n d] = [n-1 d-1] + q^d [n-1 d]` so that it stays a polynomial.
pub fn q_binomial<F: Coeff>(params: &Params<F>, n: i64, d: i64) -> Result<F> {
    if d < 0 || d > n {
        return Err(Error::DomainError(format!(
            "q-binomial needs 0 <= d <= n, got n={n}, d={d}"
        )));
    }
    let (n, d) = (n as usize, d as usize);
    let q = params.q();
    // row[k] = [m k]_q for the current m
    let mut row = vec![F::one()];
    for m in 1..=n {
        let mut next = vec![F::one(); m + 1];
        let mut qk = F::one();
        for k in 1..m {
            qk = qk * &q;
            next[k] = row[k - 1].clone() + qk.clone() * &row[k];
        }
        row = next;
    }
    Ok(row[d].clone())
}

/// Arguments of `K_n(q^{-x}; a, N; q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QKrawParams<F> {
    pub degree: usize,
    pub x: usize,
    pub a: F,
    pub big_n: usize,
}

impl<F: Coeff> QKrawParams<F> {
    pub fn new(degree: usize, x: usize, a: F, big_n: usize) -> Result<Self> {
        if degree > big_n || x > big_n {
            return Err(Error::DomainError(format!(
                "q-Krawtchouk needs degree, x <= N, got degree={degree}, x={x}, N={big_n}"
            )));
        }
        if a.is_zero() {
            return Err(Error::DomainError("q-Krawtchouk parameter a must be nonzero".into()));
        }
        Ok(QKrawParams { degree, x, a, big_n })
    }
}

/// The terminating series
/// `3phi2(q^{-n}, q^{-x}, -q^{n-N}/a; q^{-N}, 0; q, q)`, without range checks on `x`.
fn krawtchouk_series<F: Coeff>(params: &Params<F>, degree: usize, x: usize, a: &F, big_n: usize) -> Result<F> {
    let q = params.q();
    let (n, x, nn) = (degree as i32, x as i32, big_n as i32);
    let neg_c = params.q_pow(n - nn) * &params.div(&F::one(), a)?;
    let mut num = F::one();
    let mut den = F::one();
    let mut sum = F::one();
    let mut qk = F::one();
    for j in 0..degree.min(x as usize) as i32 {
        num = num
            * (F::one() - params.q_pow(j - n))
            * (F::one() - params.q_pow(j - x))
            * (F::one() + neg_c.clone() * params.q_pow(j));
        den = den * (F::one() - params.q_pow(j - nn)) * (F::one() - params.q_pow(j + 1));
        qk = qk * &q;
        sum += &(params.div(&num, &den)? * &qk);
    }
    Ok(sum)
}

/// `K_n(q^{-x}; a, N; q)`.
pub fn q_krawtchouk<F: Coeff>(params: &Params<F>, kp: &QKrawParams<F>) -> Result<F> {
    krawtchouk_series(params, kp.degree, kp.x, &kp.a, kp.big_n)
}

/// Dual q-Krawtchouk polynomial `R_n` at the point indexed by `x`, defined by
/// `R_n(q^{-x} - q^{x-N}/a; a, N; q) = K_x(q^{-n}; a, N; q)`.
pub fn dual_q_krawtchouk<F: Coeff>(params: &Params<F>, x: usize, n: usize, a: &F, big_n: usize) -> Result<F> {
    q_krawtchouk(params, &QKrawParams::new(x, n, a.clone(), big_n)?)
}

/// Both sides of the second-order q-difference equation in `x`
///
/// `(q^n - a q^{N-n}) K(x) = a q^x (1 - q^{N-x}) K(x+1) + q^x (1 - a) K(x) + (1 - q^x) K(x-1)`
///
/// where `K(x) = K_n(q^{-x}; a, N; q)`. Neighbours outside `0..=N` carry a
/// vanishing coefficient and are dropped.
pub fn difference_equation_sides<F: Coeff>(params: &Params<F>, kp: &QKrawParams<F>) -> Result<(F, F)> {
    let (n, x, nn) = (kp.degree, kp.x, kp.big_n);
    let a = &kp.a;
    let k = |xx: usize| krawtchouk_series(params, n, xx, a, nn);
    let qx = params.q_pow(x as i32);
    let kx = k(x)?;
    let lhs = (params.q_pow(n as i32) - a.clone() * params.q_pow(nn as i32 - n as i32)) * &kx;
    let mut rhs = qx.clone() * (F::one() - a.clone()) * &kx;
    if x < nn {
        rhs += &(a.clone() * &qx * (F::one() - params.q_pow((nn - x) as i32)) * k(x + 1)?);
    }
    if x > 0 {
        rhs += &((F::one() - qx) * k(x - 1)?);
    }
    Ok((lhs, rhs))
}

pub fn check_difference_equation<F: Coeff>(params: &Params<F>, kp: &QKrawParams<F>) -> Result<bool> {
    let (l, r) = difference_equation_sides(params, kp)?;
    Ok(l == r)
}

/// Both sides of the contiguous relation in `N`
///
/// `(1-q^N)(1+a q^{N-2n}) K_n(x; a, N) = (1-q^{N-n})(1+a q^{N-n}) K_n(x; a, N-1)
///   + q^{N-n}(1-q^n)(1+a q^{-n}) K_{n-1}(x; a, N-1)`.
///
/// Requires `N >= 1`; terms whose coefficient vanishes identically
/// (`n = N` or `n = 0`) are dropped. At `n = x = N` the dropped term
/// `K_N(q^{-N}; a, N-1)` is not a terminating series, so that point is
/// rejected.
pub fn contiguous_sides<F: Coeff>(params: &Params<F>, n: usize, x: usize, a: &F, big_n: usize) -> Result<(F, F)> {
    if big_n == 0 || n > big_n || x > big_n {
        return Err(Error::DomainError(format!(
            "contiguous relation needs 1 <= N and n, x <= N, got n={n}, x={x}, N={big_n}"
        )));
    }
    if n == big_n && x == big_n {
        return Err(Error::DomainError(format!(
            "contiguous relation is undefined at n = x = N = {big_n}"
        )));
    }
    let (ni, nn) = (n as i32, big_n as i32);
    let lhs = (F::one() - params.q_pow(nn))
        * (F::one() + a.clone() * params.q_pow(nn - 2 * ni))
        * krawtchouk_series(params, n, x, a, big_n)?;
    let mut rhs = F::zero();
    if n < big_n {
        rhs += &((F::one() - params.q_pow(nn - ni))
            * (F::one() + a.clone() * params.q_pow(nn - ni))
            * krawtchouk_series(params, n, x, a, big_n - 1)?);
    }
    if n > 0 {
        rhs += &(params.q_pow(nn - ni)
            * (F::one() - params.q_pow(ni))
            * (F::one() + a.clone() * params.q_pow(-ni))
            * krawtchouk_series(params, n - 1, x, a, big_n - 1)?);
    }
    Ok((lhs, rhs))
}

pub fn check_contiguous<F: Coeff>(params: &Params<F>, n: usize, x: usize, a: &F, big_n: usize) -> Result<bool> {
    let (l, r) = contiguous_sides(params, n, x, a, big_n)?;
    Ok(l == r)
}

/// Ordinary Krawtchouk value `sum_k (-f)_k (-d)_k / ((-n)_k k!) 2^k`, the
/// `p = q = 1` limit of the spherical functions.
pub fn classical_krawtchouk(f: usize, d: usize, n: usize) -> Result<Rational> {
    if f > n || d > n {
        return Err(Error::DomainError(format!(
            "classical Krawtchouk needs f, d <= n, got f={f}, d={d}, n={n}"
        )));
    }
    let int = |v: i64| Rational::from_integer(BigInt::from(v));
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..f.min(d) as i64 {
        // ratio between consecutive terms
        term = term * int(k - f as i64) * int(k - d as i64) * int(2) / (int(k - n as i64) * int(k + 1));
        sum += &term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn sym() -> Params<Scalar> {
        Params::symbolic()
    }

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        let params = sym();
        assert_eq!(q_pochhammer(&params, &Scalar::p(), 0), Scalar::one());
        assert_eq!(
            q_pochhammer(&params, &Scalar::q(), 2),
            (Scalar::one() - s("q")) * (Scalar::one() - s("q^2"))
        );
        assert_eq!(q_pochhammer(&params, &-Scalar::p(), 1), s("1+p"));
    }

    #[test]
    fn binomial_matches_definition() {
        let params = sym();
        let q = params.q();
        for n in 0..7 {
            for d in 0..=n {
                let mut num = Scalar::one();
                for i in 0..d {
                    num = num * (Scalar::one() - params.q_pow((n - i) as i32));
                }
                let den = q_pochhammer(&params, &q, d);
                let expected = num * den.inv().unwrap();
                assert_eq!(q_binomial(&params, n as i64, d as i64).unwrap(), expected);
            }
        }
        assert_eq!(q_binomial(&params, 2, 1).unwrap(), s("1+q"));
        assert!(q_binomial(&params, 2, 3).is_err());
    }

    #[test]
    fn krawtchouk_small_values() {
        let params = sym();
        let kp = QKrawParams::new(1, 1, Scalar::p(), 1).unwrap();
        assert_eq!(q_krawtchouk(&params, &kp).unwrap().to_string(), "(-1)/(p)");
        let kp = QKrawParams::new(3, 0, Scalar::p(), 5).unwrap();
        assert_eq!(q_krawtchouk(&params, &kp).unwrap(), Scalar::one());
        assert!(QKrawParams::new(3, 0, Scalar::p(), 2).is_err());
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_krawtchouk(0, 3, 4).unwrap(), Rational::one());
        assert_eq!(classical_krawtchouk(1, 1, 1).unwrap(), -Rational::one());
    }

    #[test]
    fn difference_and_contiguous_small() {
        let params = sym();
        for big_n in 0..=4 {
            for n in 0..=big_n {
                for x in 0..=big_n {
                    let kp = QKrawParams::new(n, x, Scalar::p(), big_n).unwrap();
                    assert!(check_difference_equation(&params, &kp).unwrap(), "{n} {x} {big_n}");
                    if big_n > 0 && !(n == big_n && x == big_n) {
                        assert!(check_contiguous(&params, n, x, &Scalar::p(), big_n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn middle_term_sign_matters() {
        // With the middle coefficient q^x (a - 1) the equation already fails
        // for the constant polynomial K_0 = 1 at x = 1, N = 1.
        let params = sym();
        let (a, q) = (Scalar::p(), Scalar::q());
        let lhs = Scalar::one() - a.clone() * &q;
        let rhs_flipped = a.clone() * &q * (Scalar::one() - Scalar::one())
            + q.clone() * (a.clone() - Scalar::one())
            + (Scalar::one() - q.clone());
        assert_ne!(lhs, rhs_flipped);
        let kp = QKrawParams::new(0, 1, a, 1).unwrap();
        assert!(check_difference_equation(&params, &kp).unwrap());
    }
}
