//! Characters `chi_y` of the commutative algebra `V_n`, the weights `h_y`,
//! the Fourier transform `b` and the contragredient Hecke action on `V_n^*`.
//!
//! `chi_y` is multiplicative with
//! `chi_y(u(x^j)) = p q^{m_j(y)}` if `y_j = 1` and `-q^{n-j-m_j(y)}` otherwise.

use std::fmt::Display;

use crate::coxeter::SignVector;
use crate::error::{check_rank, Error, Result};
use crate::field::{Coeff, Params};
use crate::hecke::{quad_param, HeckeElt};
use crate::vmodule::{iota_u, Basis, VElt};

/// `chi_y(u(x^j))`.
pub fn char_on_generator<F: Coeff>(params: &Params<F>, y: SignVector, j: usize) -> F {
    let n = y.n() as i32;
    let m = y.m(j) as i32;
    if y.is_minus(j) {
        -params.q_pow(n - j as i32 - m)
    } else {
        params.p() * params.q_pow(m)
    }
}

/// `chi_y(u(x)) = prod_j chi_y(u(x^{i_j}))`.
pub fn char_value<F: Coeff>(params: &Params<F>, y: SignVector, x: SignVector) -> F {
    x.positions()
        .into_iter()
        .fold(F::one(), |acc, j| acc * char_on_generator(params, y, j))
}

/// `chi_y(v)`.
pub fn eval_char<F: Coeff>(params: &Params<F>, y: SignVector, v: &VElt<F>) -> Result<F> {
    check_rank(y.n(), v.n())?;
    let v = v.to_basis(Basis::U, params);
    let mut acc = F::zero();
    for (x, c) in v.support() {
        acc += &(char_value(params, y, x) * c);
    }
    Ok(acc)
}

/// `h_y = prod_j (1 + (p q^{2 m_j(y) + j - n})^{y_j})`.
pub fn weight_h<F: Coeff>(params: &Params<F>, y: SignVector) -> F {
    let n = y.n() as i32;
    let mut acc = F::one();
    for j in 1..=y.n() {
        let e = 2 * y.m(j) as i32 + j as i32 - n;
        let t = if y.is_minus(j) {
            params.p_pow(-1) * params.q_pow(-e)
        } else {
            params.p() * params.q_pow(e)
        };
        acc = acc * (F::one() + t);
    }
    acc
}

/// Character table: row `y`, column `x`, entry `chi_y(u(x))`, both in
/// bitmask order.
pub fn character_table<F: Coeff>(params: &Params<F>, n: usize) -> Vec<Vec<F>> {
    SignVector::all(n)
        .map(|y| SignVector::all(n).map(|x| char_value(params, y, x)).collect())
        .collect()
}

/// An element `sum_y c_y chi_y` of `V_n^*`, dense over `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualElt<F> {
    n: usize,
    coeffs: Vec<F>,
}

impl<F: Coeff> DualElt<F> {
    pub fn zero(n: usize) -> Self {
        DualElt {
            n,
            coeffs: vec![F::zero(); 1 << n],
        }
    }

    /// `chi_y`.
    pub fn chi(y: SignVector) -> Self {
        let mut d = Self::zero(y.n());
        d.coeffs[y.index()] = F::one();
        d
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<F>) -> Result<Self> {
        if coeffs.len() != 1 << n {
            return Err(Error::DomainError(format!(
                "expected {} coefficients, got {}",
                1usize << n,
                coeffs.len()
            )));
        }
        Ok(DualElt { n, coeffs })
    }

    /// The functional with the given values on `u(x)`, `x` in bitmask order,
    /// expanded in characters through the orthogonality relations.
    pub fn from_values_on_u(params: &Params<F>, n: usize, values: &[F]) -> Result<Self> {
        if values.len() != 1 << n {
            return Err(Error::DomainError("wrong number of values".into()));
        }
        // f(v(x)) = iota_x^{-1} f(u(x)) are the uhat-dual coordinates
        let mut coeffs = Vec::with_capacity(values.len());
        for y in SignVector::all(n) {
            let mut acc = F::zero();
            for (x, f) in SignVector::all(n).zip(values) {
                if f.is_zero() {
                    continue;
                }
                let t = params.div(&(char_value(params, y, x) * f), &iota_u(params, x))?;
                acc += &t;
            }
            coeffs.push(params.div(&acc, &weight_h(params, y))?);
        }
        Ok(DualElt { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, y: SignVector) -> &F {
        &self.coeffs[y.index()]
    }

    pub fn support(&self) -> impl Iterator<Item = (SignVector, &F)> {
        let n = self.n;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(b, c)| (SignVector::from_bits(n, b), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_rank(self.n, rhs.n)?;
        Ok(DualElt {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        DualElt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Value of the functional on `v`.
    pub fn eval(&self, params: &Params<F>, v: &VElt<F>) -> Result<F> {
        check_rank(self.n, v.n())?;
        let mut acc = F::zero();
        for (y, c) in self.support() {
            acc += &(eval_char(params, y, v)? * c);
        }
        Ok(acc)
    }

    /// Values on `u(x)` in bitmask order.
    pub fn values_on_u(&self, params: &Params<F>) -> Vec<F> {
        SignVector::all(self.n)
            .map(|x| {
                let mut acc = F::zero();
                for (y, c) in self.support() {
                    acc += &(char_value(params, y, x) * c);
                }
                acc
            })
            .collect()
    }
}

impl<F: Coeff + Display> DualElt<F> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// `b(d)`: the unique vector with `B(v, b(d)) = d(v)` for all `v`. Since
/// `u` and `v` are dual bases, `b(chi_y) = sum_x chi_y(u(x)) v(x)`.
pub fn fourier<F: Coeff>(params: &Params<F>, d: &DualElt<F>) -> VElt<F> {
    VElt::from_coords(d.n, Basis::V, d.values_on_u(params)).expect("rank already checked")
}

/// `b^{-1}(v) = sum_y h_y^{-1} chi_y(v) chi_y`.
pub fn inverse_fourier<F: Coeff>(params: &Params<F>, v: &VElt<F>) -> Result<DualElt<F>> {
    let n = v.n();
    let mut coeffs = Vec::with_capacity(1 << n);
    for y in SignVector::all(n) {
        coeffs.push(params.div(&eval_char(params, y, v)?, &weight_h(params, y))?);
    }
    Ok(DualElt { n, coeffs })
}

/// `d1 * d2 = b^{-1}(b(d1) b(d2))`.
pub fn convolve<F: Coeff>(params: &Params<F>, d1: &DualElt<F>, d2: &DualElt<F>) -> Result<DualElt<F>> {
    check_rank(d1.n, d2.n)?;
    let prod = fourier(params, d1).product(&fourier(params, d2), params)?;
    inverse_fourier(params, &prod)
}

/// `sum_y h_y^{-1} chi_y`, the unit for convolution (equal to `tau`).
pub fn tau_dual<F: Coeff>(params: &Params<F>, n: usize) -> Result<DualElt<F>> {
    let mut coeffs = Vec::with_capacity(1 << n);
    for y in SignVector::all(n) {
        coeffs.push(params.div(&F::one(), &weight_h(params, y))?);
    }
    Ok(DualElt { n, coeffs })
}

/// Failures of the two orthogonality systems
/// `sum_x chi_y(u(x)) chi_z(v(x)) = delta_{y,z} h_y` and
/// `sum_y h_y^{-1} chi_y(u(x)) chi_y(v(x')) = delta_{x,x'}`,
/// with `h_y` taken from its closed product.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OrthogonalityFailures {
    pub rows: Vec<(SignVector, SignVector)>,
    pub columns: Vec<(SignVector, SignVector)>,
}

impl OrthogonalityFailures {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() && self.columns.is_empty()
    }
}

pub fn character_orthogonality<F: Coeff>(params: &Params<F>, n: usize) -> Result<OrthogonalityFailures> {
    let table = character_table(params, n);
    let iota_inv = SignVector::all(n)
        .map(|x| params.div(&F::one(), &iota_u(params, x)))
        .collect::<Result<Vec<_>>>()?;
    let h: Vec<F> = SignVector::all(n).map(|y| weight_h(params, y)).collect();
    let h_inv = h.iter().map(|v| params.div(&F::one(), v)).collect::<Result<Vec<_>>>()?;
    let size = 1usize << n;
    let sv = |b: usize| SignVector::from_bits(n, b);
    let mut out = OrthogonalityFailures::default();
    for y in 0..size {
        for z in y..size {
            let mut acc = F::zero();
            for x in 0..size {
                acc += &(table[y][x].clone() * &table[z][x] * &iota_inv[x]);
            }
            let expect = if y == z { h[y].clone() } else { F::zero() };
            if acc != expect {
                out.rows.push((sv(y), sv(z)));
            }
        }
    }
    for x in 0..size {
        for x2 in x..size {
            let mut acc = F::zero();
            for y in 0..size {
                acc += &(table[y][x].clone() * &table[y][x2] * &h_inv[y]);
            }
            let expect = if x == x2 { iota_u(params, sv(x)) } else { F::zero() };
            if acc != expect {
                out.columns.push((sv(x), sv(x2)));
            }
        }
    }
    Ok(out)
}

/// `rho^*(T_i) chi_y` in closed form, as `(coefficient of chi_y,
/// optional (y^{s_i}, coefficient))`.
pub fn rho_star_on_char<F: Coeff>(params: &Params<F>, i: usize, y: SignVector) -> Result<(F, Option<(SignVector, F)>)> {
    let n = y.n();
    if !(1..=n).contains(&i) {
        return Err(Error::DomainError(format!("generator index {i} outside 1..={n}")));
    }
    if i == n {
        let ev = if y.is_minus(n) { -F::one() } else { params.p() };
        return Ok((ev, None));
    }
    let (a, b) = (y.is_minus(i), y.is_minus(i + 1));
    if a == b {
        return Ok((params.q(), None));
    }
    let m = y.m(i) as i32;
    let top = n as i32 - i as i32 - m;
    let q1 = params.q() - F::one();
    let mix = params.p() * params.q_pow(m) + params.q_pow(top);
    let (diag, den) = if !a {
        // y_i = 1, y_{i+1} = -1
        (
            params.p() * params.q_pow(m) * &q1,
            params.p() * params.q_pow(m) + params.q_pow(top - 1),
        )
    } else {
        (
            params.q_pow(top) * &q1,
            params.p() * params.q_pow(m - 1) + params.q_pow(top),
        )
    };
    Ok((params.div(&diag, &den)?, Some((y.swap(i), params.div(&mix, &den)?))))
}

/// `rho^*(T_i) d`, the contragredient action `(rho^*(T) f)(v) = f(rho(T^{*1}) v)`.
pub fn rho_star_gen<F: Coeff>(params: &Params<F>, i: usize, d: &DualElt<F>) -> Result<DualElt<F>> {
    let mut out = DualElt::zero(d.n);
    for (y, c) in d.support() {
        let (ev, mix) = rho_star_on_char(params, i, y)?;
        out.coeffs[y.index()] += &(ev * c);
        if let Some((z, m)) = mix {
            out.coeffs[z.index()] += &(m * c);
        }
    }
    Ok(out)
}

/// `rho^*(T_i^{-1}) d` with `T_i^{-1} = c^{-1} T_i + c^{-1} - 1`.
pub fn rho_star0_gen<F: Coeff>(params: &Params<F>, i: usize, d: &DualElt<F>) -> Result<DualElt<F>> {
    let c_inv = params.div(&F::one(), &quad_param(params, i, d.n))?;
    let t = rho_star_gen(params, i, d)?.scale(&c_inv);
    t.add(&d.scale(&(c_inv - F::one())))
}

/// `rho^*(a) d` for a Hecke algebra element, generator by generator.
pub fn rho_star_hecke<F: Coeff>(params: &Params<F>, a: &HeckeElt<F>, d: &DualElt<F>) -> Result<DualElt<F>> {
    check_rank(a.n(), d.n)?;
    let mut out = DualElt::zero(d.n);
    for (w, c) in a.terms() {
        let mut acc = d.clone();
        for &i in w.reduced_word().iter().rev() {
            acc = rho_star_gen(params, i, &acc)?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

/// `rho^*(T_i) d` straight from the definition: evaluate `d` on
/// `rho(T_i) u(x)` and expand the resulting functional in characters.
pub fn rho_star_gen_oracle<F: Coeff>(params: &Params<F>, i: usize, d: &DualElt<F>) -> Result<DualElt<F>> {
    let mut values = Vec::with_capacity(1 << d.n);
    for x in SignVector::all(d.n) {
        let img = VElt::u(x).act_gen(params, i)?;
        values.push(d.eval(params, &img)?);
    }
    DualElt::from_values_on_u(params, d.n, &values)
}

/// The eigenvalue of `rho^*(T_x)` on `chi_y`; errors if `chi_y` is not an
/// eigenvector.
pub fn rho_star_diagonal_on_tx<F: Coeff + Display>(params: &Params<F>, x: SignVector, y: SignVector) -> Result<F> {
    check_rank(x.n(), y.n())?;
    let t = HeckeElt::sign_basis(x);
    let img = rho_star_hecke(params, &t, &DualElt::chi(y))?;
    if let Some((z, c)) = img.support().find(|(z, _)| *z != y) {
        return Err(Error::NotDiagonal {
            y: y.to_string(),
            detail: format!("x = {x}: coefficient {c} on chi_{z}"),
        });
    }
    Ok(img.coeff(y).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::q_pochhammer;
    use crate::scalars::Scalar;
    use num_traits::One;

    fn sym() -> Params<Scalar> {
        Params::symbolic()
    }

    #[test]
    fn generator_values() {
        let pr = sym();
        let y1 = SignVector::ones(1);
        let ym = SignVector::minus_ones(1);
        assert_eq!(char_on_generator(&pr, y1, 1), pr.p());
        assert_eq!(char_on_generator(&pr, ym, 1), -Scalar::one());
        assert_eq!(char_on_generator(&pr, SignVector::ones(2), 1), pr.p() * pr.q());
    }

    #[test]
    fn closed_form_weights() {
        let pr = sym();
        for n in 1..=4 {
            let minus_p = -pr.p();
            assert_eq!(weight_h(&pr, SignVector::ones(n)), q_pochhammer(&pr, &minus_p, n));
            let minus_pinv = -pr.p_pow(-1);
            assert_eq!(
                weight_h(&pr, SignVector::minus_ones(n)),
                q_pochhammer(&pr, &minus_pinv, n)
            );
        }
    }

    #[test]
    fn orthogonality_small() {
        let pr = sym();
        for n in 1..=3 {
            assert!(character_orthogonality(&pr, n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn table_matches_oracle() {
        let pr = sym();
        for n in 1..=3 {
            for y in SignVector::all(n) {
                for i in 1..=n {
                    let d = DualElt::chi(y);
                    assert_eq!(
                        rho_star_gen(&pr, i, &d).unwrap(),
                        rho_star_gen_oracle(&pr, i, &d).unwrap(),
                        "y={y} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn fourier_round_trip() {
        let pr = sym();
        let n = 3;
        for x in SignVector::all(n) {
            let v = VElt::<Scalar>::u(x);
            let back = fourier(&pr, &inverse_fourier(&pr, &v).unwrap());
            assert!(back.same_vector(&v, &pr));
        }
        let t = tau_dual(&pr, n).unwrap();
        assert!(fourier(&pr, &t).same_vector(&VElt::one(n), &pr));
    }

    #[test]
    fn diagonal_examples() {
        let pr = sym();
        let xm = SignVector::minus_ones(1);
        assert_eq!(rho_star_diagonal_on_tx(&pr, xm, SignVector::ones(1)).unwrap(), pr.p());
        assert_eq!(rho_star_diagonal_on_tx(&pr, xm, xm).unwrap(), -Scalar::one());
        assert!(rho_star_diagonal_on_tx(&pr, SignVector::ones(2), SignVector::ones(2))
            .unwrap()
            .is_one());
    }
}
