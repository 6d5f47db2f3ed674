//! The induced module `V_n = Ind_{F_n}^{H_n} iota` with its Hecke action,
//! commutative product, trace form `tau` and bilinear form `B`.
//!
//! Vectors are dense over the `2^n` sign vectors, indexed by bitmask. Three
//! bases are supported: `u(x) = pi(T_{u_x})`, the orthonormal
//! `uhat(x) = iota(T_{u_x})^{-1/2} u(x)` and the dual basis
//! `v(x) = iota(T_{u_x})^{-1} u(x)`.

use std::fmt::Display;

use crate::coxeter::SignVector;
use crate::error::{check_rank, Error, Result};
use crate::field::{Coeff, Params};
use crate::hecke::{for_each_symmetrized, HeckeElt};
use crate::scalars::poincare_a;

/// Largest rank for dense module vectors.
pub const MAX_MODULE_RANK: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    U,
    UHat,
    V,
}

impl Basis {
    /// `b(x) = iota(T_{u_x})^{-k/2} u(x)`.
    fn half_power(self) -> i32 {
        match self {
            Basis::U => 0,
            Basis::UHat => 1,
            Basis::V => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::U => "u",
            Basis::UHat => "uhat",
            Basis::V => "v",
        }
    }
}

/// Exponents `(a, b)` with `iota(T_{u_x}) = p^a q^b`: `a = w(x)` and
/// `b = n w(x) - sum_j i_j`.
pub fn iota_exponents(x: SignVector) -> (i32, i32) {
    let w = x.weight() as i32;
    let sum: usize = x.positions().iter().sum();
    (w, x.n() as i32 * w - sum as i32)
}

/// `iota(T_{u_x})`.
pub fn iota_u<F: Coeff>(params: &Params<F>, x: SignVector) -> F {
    let (a, b) = iota_exponents(x);
    params.monomial(2 * a, 2 * b)
}

fn check_module_rank(n: usize) -> Result<()> {
    if n > MAX_MODULE_RANK {
        return Err(Error::DomainError(format!(
            "rank {n} exceeds the dense module limit {MAX_MODULE_RANK}"
        )));
    }
    Ok(())
}

fn check_gen(i: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::DomainError(format!("generator index {i} outside 1..={n}")))
    }
}

/// An element of `V_n` in a tagged basis.
#[derive(Debug, Clone, PartialEq)]
pub struct VElt<F> {
    n: usize,
    basis: Basis,
    coords: Vec<F>,
}

impl<F: Coeff> VElt<F> {
    pub fn zero(n: usize, basis: Basis) -> Self {
        VElt {
            n,
            basis,
            coords: vec![F::zero(); 1 << n],
        }
    }

    /// The basis vector `b(x)` of basis `b`.
    pub fn basis_vector(basis: Basis, x: SignVector) -> Self {
        let mut v = Self::zero(x.n(), basis);
        v.coords[x.index()] = F::one();
        v
    }

    /// `u(x)`.
    pub fn u(x: SignVector) -> Self {
        Self::basis_vector(Basis::U, x)
    }

    /// `uhat(x)`.
    pub fn uhat(x: SignVector) -> Self {
        Self::basis_vector(Basis::UHat, x)
    }

    /// `v(x)`.
    pub fn v(x: SignVector) -> Self {
        Self::basis_vector(Basis::V, x)
    }

    /// The unit `u(1, ..., 1)`.
    pub fn one(n: usize) -> Self {
        Self::u(SignVector::ones(n))
    }

    pub fn from_coords(n: usize, basis: Basis, coords: Vec<F>) -> Result<Self> {
        check_module_rank(n)?;
        if coords.len() != 1 << n {
            return Err(Error::DomainError(format!(
                "expected {} coordinates, got {}",
                1usize << n,
                coords.len()
            )));
        }
        Ok(VElt { n, basis, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn coord(&self, x: SignVector) -> &F {
        &self.coords[x.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(F::is_zero)
    }

    /// Nonzero coordinates as `(sign vector, coefficient)`.
    pub fn support(&self) -> impl Iterator<Item = (SignVector, &F)> {
        let n = self.n;
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(b, c)| (SignVector::from_bits(n, b), c))
    }

    /// Express in another basis.
    pub fn to_basis(&self, target: Basis, params: &Params<F>) -> Self {
        if target == self.basis {
            return self.clone();
        }
        // b(x) = iota^{-k/2} u(x), so coordinates scale by iota^{(k' - k)/2}
        let k = target.half_power() - self.basis.half_power();
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(b, c)| {
                if c.is_zero() {
                    return F::zero();
                }
                let (a, e) = iota_exponents(SignVector::from_bits(self.n, b));
                c.clone() * params.monomial(k * a, k * e)
            })
            .collect();
        VElt {
            n: self.n,
            basis: target,
            coords,
        }
    }

    /// Sum, in the basis of `self`.
    pub fn add(&self, rhs: &Self, params: &Params<F>) -> Result<Self> {
        check_rank(self.n, rhs.n)?;
        let rhs = rhs.to_basis(self.basis, params);
        let coords = self.coords.iter().zip(rhs.coords).map(|(a, b)| b + a).collect();
        Ok(VElt {
            n: self.n,
            basis: self.basis,
            coords,
        })
    }

    pub fn sub(&self, rhs: &Self, params: &Params<F>) -> Result<Self> {
        self.add(&rhs.scale(&-F::one()), params)
    }

    pub fn scale(&self, c: &F) -> Self {
        VElt {
            n: self.n,
            basis: self.basis,
            coords: self.coords.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Equality as vectors, regardless of the basis tags.
    pub fn same_vector(&self, rhs: &Self, params: &Params<F>) -> bool {
        self.n == rhs.n && rhs.to_basis(self.basis, params).coords == self.coords
    }

    /// `rho(T_i)`, computed in the basis of `self`.
    pub fn act_gen(&self, params: &Params<F>, i: usize) -> Result<Self> {
        let n = self.n;
        check_gen(i, n)?;
        let k = self.basis.half_power();
        let mut out = Self::zero(n, self.basis);
        if i < n {
            let q = params.q();
            let q1 = q.clone() - F::one();
            // x_i = 1, x_{i+1} = -1: u(x) -> u(x^{s_i}), rescaled to the basis
            let up = params.q_pow_half(k);
            // x_i = -1, x_{i+1} = 1: the q u(x^{s_i}) term, rescaled
            let down = q.clone() * params.q_pow_half(-k);
            for (b, c) in self.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, bb) = (b >> (i - 1) & 1, b >> i & 1);
                let swapped = b ^ (0b11 << (i - 1));
                if a == bb {
                    out.coords[b] += &(c.clone() * &q);
                } else if a == 0 {
                    out.coords[swapped] += &(c.clone() * &up);
                } else {
                    out.coords[b] += &(c.clone() * &q1);
                    out.coords[swapped] += &(c.clone() * &down);
                }
            }
        } else {
            let p = params.p();
            let p1 = p.clone() - F::one();
            let up = params.p_pow_half(k);
            let down = p.clone() * params.p_pow_half(-k);
            let bit = 1 << (n - 1);
            for (b, c) in self.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if b & bit == 0 {
                    out.coords[b ^ bit] += &(c.clone() * &up);
                } else {
                    out.coords[b] += &(c.clone() * &p1);
                    out.coords[b ^ bit] += &(c.clone() * &down);
                }
            }
        }
        Ok(out)
    }

    /// `rho(T_w) self` for `w = s_{i_1} ... s_{i_l}`: generators applied
    /// from the right end of the word.
    pub fn act_word(&self, params: &Params<F>, word: &[usize]) -> Result<Self> {
        let mut acc = self.clone();
        for &i in word.iter().rev() {
            acc = acc.act_gen(params, i)?;
        }
        Ok(acc)
    }

    /// `rho(a) self`.
    pub fn act_hecke(&self, a: &HeckeElt<F>, params: &Params<F>) -> Result<Self> {
        check_rank(self.n, a.n())?;
        let mut out = Self::zero(self.n, self.basis);
        for (w, c) in a.terms() {
            let img = self.act_word(params, &w.reduced_word())?;
            for (o, x) in out.coords.iter_mut().zip(img.coords) {
                *o += &(x * c);
            }
        }
        Ok(out)
    }

    /// `tau`, the `u(1, ..., 1)` coordinate (the same in every basis since
    /// `iota(T_e) = 1`).
    pub fn tau(&self) -> F {
        self.coords[0].clone()
    }

    /// The commutative product, returned in the `u` basis.
    pub fn product(&self, rhs: &Self, params: &Params<F>) -> Result<Self> {
        check_rank(self.n, rhs.n)?;
        ProductTable::new(self.n, params)?.product(self, rhs)
    }

    /// `B(self, rhs) = tau(self * rhs)`.
    pub fn bilinear_b(&self, rhs: &Self, params: &Params<F>) -> Result<F> {
        Ok(self.product(rhs, params)?.tau())
    }

    /// `rho(P) self = P_A(q)^{-1} sum_sigma rho(T_sigma) self`, summed along
    /// the prefix-sharing chain of `S_n`.
    pub fn symmetrize(&self, params: &Params<F>, cap: usize) -> Result<Self> {
        let mut acc = Self::zero(self.n, self.basis);
        for_each_symmetrized(
            self.n,
            cap,
            self.clone(),
            |i, v| v.act_gen(params, i),
            |_, v| {
                for (o, x) in acc.coords.iter_mut().zip(&v.coords) {
                    *o += x;
                }
                Ok(())
            },
        )?;
        let pa = poincare_a(params, self.n);
        Ok(acc.scale(&params.div(&F::one(), &pa)?))
    }

    /// Whether `rho(T_i) self = q self` for all `i < n`.
    pub fn is_type_a_invariant(&self, params: &Params<F>) -> Result<bool> {
        let q = params.q();
        for i in 1..self.n {
            if self.act_gen(params, i)? != self.scale(&q) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<F: Coeff + Display> VElt<F> {
    /// `{"basis": .., "coords": [..]}` with coordinates in bitmask order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "basis": self.basis.name(),
            "coords": self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Multiplication operators `M_j: v -> v u(x^j)` in the `u` basis, derived
/// from the generator relations
/// `u(x^j) u(x^k) = u(x^j x^k)` and
/// `u(x^j)^2 = (q-1) u(x^j) (u(x^{j+1}) + ... + u(x^n)) + (p-1) u(x^j) + p q^{n-j} u(1)`.
#[derive(Debug, Clone)]
pub struct ProductTable<F> {
    n: usize,
    // mult[j - 1][z] = u(z) u(x^j) as sparse (bitmask, coefficient) pairs
    mult: Vec<Vec<Vec<(usize, F)>>>,
    params: Params<F>,
}

impl<F: Coeff> ProductTable<F> {
    pub fn new(n: usize, params: &Params<F>) -> Result<Self> {
        check_module_rank(n)?;
        let size = 1usize << n;
        let p = params.p();
        let q1 = params.q() - F::one();
        let p1 = p.clone() - F::one();
        let mut mult: Vec<Vec<Vec<(usize, F)>>> = vec![Vec::new(); n];
        for j in (1..=n).rev() {
            let bit = 1usize << (j - 1);
            let pq = p.clone() * params.q_pow((n - j) as i32);
            let mut rows = Vec::with_capacity(size);
            for z in 0..size {
                if z & bit == 0 {
                    rows.push(vec![(z | bit, F::one())]);
                    continue;
                }
                let mut dense = vec![F::zero(); size];
                for row in &mult[j..n] {
                    for (t, c) in &row[z] {
                        dense[*t] += &(c.clone() * &q1);
                    }
                }
                dense[z] += &p1;
                dense[z ^ bit] += &pq;
                rows.push(dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
            mult[j - 1] = rows;
        }
        Ok(ProductTable {
            n,
            mult,
            params: params.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `v u(x^j)` for `v` in the `u` basis.
    pub fn mul_gen(&self, v: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); v.len()];
        for (z, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, m) in &self.mult[j - 1][z] {
                out[*t] += &(m.clone() * c);
            }
        }
        out
    }

    /// `a * b` in the `u` basis, using `u(x) = prod_j u(x^{i_j})`.
    pub fn product(&self, a: &VElt<F>, b: &VElt<F>) -> Result<VElt<F>> {
        check_rank(self.n, a.n)?;
        check_rank(self.n, b.n)?;
        let a = a.to_basis(Basis::U, &self.params);
        let b = b.to_basis(Basis::U, &self.params);
        let size = 1usize << self.n;
        // partial[x] = a u(x), built from x minus its highest bit
        let mut partial: Vec<Option<Vec<F>>> = vec![None; size];
        partial[0] = Some(a.coords.clone());
        let mut out = vec![F::zero(); size];
        // prefixes are numerically smaller, so mark them in a descending pass
        let mut needed = vec![false; size];
        for x in (0..size).rev() {
            if !b.coords[x].is_zero() || needed[x] {
                needed[x] = true;
                if x != 0 {
                    let hb = usize::BITS - 1 - x.leading_zeros();
                    needed[x ^ (1 << hb)] = true;
                }
            }
        }
        for x in 1..size {
            if !needed[x] {
                continue;
            }
            let hb = (usize::BITS - 1 - x.leading_zeros()) as usize;
            let prev = partial[x ^ (1 << hb)].as_ref().expect("prefix computed");
            partial[x] = Some(self.mul_gen(prev, hb + 1));
        }
        for (x, c) in b.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(partial[x].as_ref().unwrap()) {
                *o += &(t.clone() * c);
            }
        }
        VElt::from_coords(self.n, Basis::U, out)
    }

    pub fn bilinear_b(&self, a: &VElt<F>, b: &VElt<F>) -> Result<F> {
        Ok(self.product(a, b)?.tau())
    }
}

/// `u(x) u(y)` via the Hecke algebra:
/// `q^{-l(sigma_x) - l(sigma_y)} rho(T_x) rho(T_y) u(1)`.
pub fn product_via_hecke<F: Coeff>(x: SignVector, y: SignVector, params: &Params<F>) -> Result<VElt<F>> {
    use crate::coxeter::coset_rep;
    check_rank(x.n(), y.n())?;
    let n = x.n();
    let tx = HeckeElt::sign_basis(x);
    let ty = HeckeElt::sign_basis(y);
    let txy = tx.multiply(&ty, params)?;
    let v = VElt::one(n).act_hecke(&txy, params)?;
    let e = coset_rep(x).len_sigma + coset_rep(y).len_sigma;
    Ok(v.scale(&params.q_pow(-(e as i32))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::coset_rep;
    use crate::scalars::Scalar;
    use num_traits::{One, Zero};

    fn sym() -> Params<Scalar> {
        Params::symbolic()
    }

    fn all(n: usize) -> Vec<SignVector> {
        SignVector::all(n).collect()
    }

    #[test]
    fn generator_table() {
        let pr = sym();
        let x: SignVector = "+-".parse().unwrap();
        let y: SignVector = "-+".parse().unwrap();
        let v = VElt::<Scalar>::u(x);
        assert_eq!(v.act_gen(&pr, 1).unwrap(), VElt::u(y));
        let w = VElt::<Scalar>::u(y).act_gen(&pr, 1).unwrap();
        let expect = VElt::u(y)
            .scale(&(pr.q() - Scalar::one()))
            .add(&VElt::u(x).scale(&pr.q()), &pr)
            .unwrap();
        assert_eq!(w, expect);
        let z: SignVector = "++".parse().unwrap();
        assert_eq!(VElt::<Scalar>::u(z).act_gen(&pr, 2).unwrap(), VElt::u(x));
    }

    #[test]
    fn u_x_is_pi_of_t_ux() {
        let pr = sym();
        for n in 1..=3 {
            for x in all(n) {
                let t = HeckeElt::basis(coset_rep(x).u_x);
                let v = VElt::one(n).act_hecke(&t, &pr).unwrap();
                assert_eq!(v, VElt::u(x));
            }
        }
    }

    #[test]
    fn basis_actions_agree() {
        let pr = sym();
        let n = 3;
        for x in all(n) {
            for i in 1..=n {
                let via_u = VElt::<Scalar>::uhat(x).to_basis(Basis::U, &pr).act_gen(&pr, i).unwrap();
                let direct = VElt::<Scalar>::uhat(x).act_gen(&pr, i).unwrap();
                assert!(direct.same_vector(&via_u, &pr));
                let direct_v = VElt::<Scalar>::v(x).act_gen(&pr, i).unwrap();
                let via_u = VElt::<Scalar>::v(x).to_basis(Basis::U, &pr).act_gen(&pr, i).unwrap();
                assert!(direct_v.same_vector(&via_u, &pr));
            }
        }
    }

    #[test]
    fn product_matches_hecke_route() {
        let pr = sym();
        for n in 1..=3 {
            let table = ProductTable::new(n, &pr).unwrap();
            for x in all(n) {
                for y in all(n) {
                    let a = table.product(&VElt::u(x), &VElt::u(y)).unwrap();
                    let b = product_via_hecke(x, y, &pr).unwrap();
                    assert_eq!(a, b, "x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn n1_square() {
        let pr = sym();
        let m = SignVector::minus_ones(1);
        let sq = VElt::<Scalar>::u(m).product(&VElt::u(m), &pr).unwrap();
        let expect = VElt::u(m)
            .scale(&(pr.p() - Scalar::one()))
            .add(&VElt::one(1).scale(&pr.p()), &pr)
            .unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn form_is_diagonal() {
        let pr = sym();
        for n in 1..=3 {
            let table = ProductTable::new(n, &pr).unwrap();
            for x in all(n) {
                for y in all(n) {
                    let b = table.bilinear_b(&VElt::u(x), &VElt::u(y)).unwrap();
                    let expect = if x == y { iota_u(&pr, x) } else { Scalar::zero() };
                    assert_eq!(b, expect);
                    let bh = table.bilinear_b(&VElt::uhat(x), &VElt::uhat(y)).unwrap();
                    assert_eq!(bh, if x == y { Scalar::one() } else { Scalar::zero() });
                }
            }
        }
    }

    #[test]
    fn symmetrize_is_invariant_projection() {
        let pr = sym();
        let n = 3;
        for x in all(n) {
            let w = VElt::<Scalar>::v(x).symmetrize(&pr, 8).unwrap();
            assert!(w.is_type_a_invariant(&pr).unwrap());
            assert_eq!(w.symmetrize(&pr, 8).unwrap(), w);
        }
        let one = VElt::<Scalar>::one(n);
        assert_eq!(one.symmetrize(&pr, 8).unwrap(), one);
    }
}
