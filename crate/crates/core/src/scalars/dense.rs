//! Dense recursive polynomials over the integers and their gcd.
//!
//! A bivariate polynomial is stored as a univariate polynomial whose
//! coefficients are univariate integer polynomials. The gcd is computed by
//! the primitive polynomial remainder sequence, recursing into the
//! coefficient ring for contents.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An integral domain with gcd and exact division.
pub(crate) trait GcdDomain: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    /// Greatest common divisor, normalized so that [`Self::is_normal`] holds.
    fn gcd(&self, rhs: &Self) -> Self;
    /// Whether the element is in normal form with respect to units (sign).
    fn is_normal(&self) -> bool;

    fn normalize(&self) -> Self {
        if self.is_normal() {
            self.clone()
        } else {
            self.neg()
        }
    }
}

impl GcdDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn is_normal(&self) -> bool {
        !self.is_negative()
    }
}

/// Dense univariate polynomial, `c[i]` is the coefficient of `x^i`.
/// Never stores trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct UPoly<R> {
    pub c: Vec<R>,
}

impl<R: GcdDomain> UPoly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn constant(r: R) -> Self {
        UPoly::new(vec![r])
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&R> {
        self.c.last()
    }

    fn scale(&self, r: &R) -> Self {
        if r.is_zero() {
            return UPoly { c: Vec::new() };
        }
        UPoly::new(self.c.iter().map(|x| x.mul(r)).collect())
    }

    fn content(&self) -> R {
        let mut g = R::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_scalar(&self, r: &R) -> Option<Self> {
        let mut out = Vec::with_capacity(self.c.len());
        for x in &self.c {
            out.push(x.exact_div(r)?);
        }
        Some(UPoly::new(out))
    }

    fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_one() || g.is_zero() {
            return self.clone();
        }
        self.div_scalar(&g).expect("content divides")
    }

    /// `lc(b)^k * a mod b` for a suitable k.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.lc().unwrap().clone();
        let mut r = self.c.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let shift = dr - db;
            for x in r.iter_mut() {
                *x = x.mul(&lb);
            }
            for (i, bc) in b.c.iter().enumerate() {
                r[i + shift] = r[i + shift].sub(&lr.mul(bc));
            }
            debug_assert!(r[dr].is_zero());
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        UPoly { c: r }
    }
}

impl<R: GcdDomain> GcdDomain for UPoly<R> {
    fn zero() -> Self {
        UPoly { c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::new(out)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        UPoly::new(out)
    }
    fn neg(&self) -> Self {
        UPoly {
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = rhs.lc().unwrap();
        let mut r = self.c.clone();
        let mut q = vec![R::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let t = top.exact_div(lb)?;
            for (i, bc) in rhs.c.iter().enumerate() {
                r[k + i] = r[k + i].sub(&t.mul(bc));
            }
            q[k] = t;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(UPoly::new(q))
        } else {
            None
        }
    }
    fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.normalize();
        }
        if rhs.is_zero() {
            return self.normalize();
        }
        let cg = self.content().gcd(&rhs.content());
        let (mut a, mut b) = (self.primitive_part(), rhs.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return UPoly::constant(cg).normalize();
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.scale(&cg).normalize()
    }
    fn is_normal(&self) -> bool {
        self.lc().is_none_or(|l| l.is_normal())
    }
}

pub(crate) type ZPoly = UPoly<BigInt>;
pub(crate) type ZPoly2 = UPoly<ZPoly>;

pub(crate) fn gcd(a: &ZPoly2, b: &ZPoly2) -> ZPoly2 {
    if !a.is_zero() && !b.is_zero() && modular::coprime(a, b) {
        let mut g: BigInt = Zero::zero();
        for x in a.c.iter().chain(&b.c).flat_map(|c| &c.c) {
            g = Integer::gcd(&g, x);
        }
        return UPoly::constant(UPoly::constant(g));
    }
    GcdDomain::gcd(a, b)
}

/// A fast sufficient test for coprimality through images in `F_P[x]`.
///
/// If `y = y0` keeps the leading `x`-coefficient of `a` nonzero mod `P`, the
/// image of any common factor keeps its `x`-degree, so coprime images bound
/// the `x`-degree of the gcd by zero. Doing this in both variables leaves
/// only an integer gcd.
mod modular {
    use super::ZPoly2;
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    const P: u64 = (1 << 61) - 1;
    const POINTS: [u64; 4] = [3, 17, 1_000_003, 987_654_321];

    fn red(x: &BigInt) -> u64 {
        let m = x % BigInt::from(P);
        let v = m.to_i64().expect("reduced below P");
        if v < 0 {
            (v + P as i64) as u64
        } else {
            v as u64
        }
    }

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn sub(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// Degree of the monic gcd in `F_P[x]`; both inputs nonzero.
    fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let inv = pow(*b.last().unwrap(), P - 2);
            while a.len() >= b.len() {
                let t = mul(*a.last().unwrap(), inv);
                let shift = a.len() - b.len();
                for (i, bc) in b.iter().enumerate() {
                    a[i + shift] = sub(a[i + shift], mul(t, *bc));
                }
                a = trim(a);
                if a.is_empty() {
                    break;
                }
            }
            std::mem::swap(&mut a, &mut b);
        }
        a.len() - 1
    }

    /// Image in `F_P[outer]` after substituting `inner = y0`.
    fn eval_inner(a: &ZPoly2, y0: u64) -> Vec<u64> {
        trim(
            a.c.iter()
                .map(|c| c.c.iter().rev().fold(0, |acc, x| (mul(acc, y0) + red(x)) % P))
                .collect(),
        )
    }

    /// Image in `F_P[inner]` after substituting `outer = x0`.
    fn eval_outer(a: &ZPoly2, x0: u64) -> Vec<u64> {
        let len = a.c.iter().map(|c| c.c.len()).max().unwrap_or(0);
        let mut out = vec![0; len];
        let mut xp = 1;
        for c in &a.c {
            for (k, x) in c.c.iter().enumerate() {
                out[k] = (out[k] + mul(xp, red(x))) % P;
            }
            xp = mul(xp, x0);
        }
        trim(out)
    }

    fn coprime_in(a: &ZPoly2, b: &ZPoly2, lead_len: usize, image: impl Fn(&ZPoly2, u64) -> Vec<u64>) -> bool {
        POINTS.iter().any(|&t| {
            let (ia, ib) = (image(a, t), image(b, t));
            ia.len() == lead_len && !ib.is_empty() && gcd_degree(ia, ib) == 0
        })
    }

    pub(super) fn coprime(a: &ZPoly2, b: &ZPoly2) -> bool {
        let inner_len = a.c.iter().map(|c| c.c.len()).max().unwrap_or(0);
        coprime_in(a, b, a.c.len(), eval_inner) && coprime_in(a, b, inner_len, eval_outer)
    }
}

pub(crate) fn is_one(a: &ZPoly2) -> bool {
    GcdDomain::is_one(a)
}

/// Panics unless `b` divides `a`.
pub(crate) fn exact_div(a: &ZPoly2, b: &ZPoly2) -> ZPoly2 {
    GcdDomain::exact_div(a, b).expect("exact division")
}
