//! Exact arithmetic in the field of rational functions in `p^(1/2)` and
//! `q^(1/2)`.
//!
//! A [`Scalar`] is a quotient of two [`LaurentPoly`] values with integer
//! coefficients, kept in lowest terms so that equality is structural.
//! Exponents are stored doubled: the monomial `(a, b)` is `p^(a/2) q^(b/2)`.

mod dense;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Coeff, FromRational, Params};

use dense::{UPoly, ZPoly2};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// The monomial `p^(p/2) q^(q/2)` (exponents doubled).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub p: i32,
    pub q: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { p: 0, q: 0 };

    pub fn new(p: i32, q: i32) -> Self {
        Monomial { p, q }
    }

    fn mul(self, o: Monomial) -> Monomial {
        Monomial::new(self.p + o.p, self.q + o.q)
    }

    fn inv(self) -> Monomial {
        Monomial::new(-self.p, -self.q)
    }

    fn min(self, o: Monomial) -> Monomial {
        Monomial::new(self.p.min(o.p), self.q.min(o.q))
    }
}

/// Graded lexicographic: total degree first, then the `p` exponent.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p + self.q, self.p).cmp(&(other.p + other.q, other.p))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in `p^(1/2)`, `q^(1/2)` with integer coefficients.
/// Terms are sorted by descending monomial order with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in it {
            *acc.entry(m).or_default() += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    /// The leading term in graded lexicographic order.
    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    fn single(&self) -> Option<&(Monomial, BigInt)> {
        if self.terms.len() == 1 {
            self.terms.first()
        } else {
            None
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.iter().map(|t| t.0);
        let first = it.next().unwrap_or(Monomial::ONE);
        it.fold(first, Monomial::min)
    }

    pub fn shift(&self, m: Monomial) -> Self {
        if m == Monomial::ONE {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    fn div_int(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, x)| (*k, x / c)).collect(),
        }
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = rhs.single() {
            return self.shift(*m).scale(c);
        }
        if let Some((m, c)) = self.single() {
            return rhs.shift(*m).scale(c);
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = acc.entry(ma.mul(*mb)).or_default();
                *e += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    /// Substitute `p^(1/2) -> p^(-1/2)` and `q^(1/2) -> q^(-1/2)`.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(k, c)| (k.inv(), c.clone())))
    }

    /// Evaluate at the given parameters.
    pub fn eval<F: Coeff>(&self, params: &Params<F>) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let coeff = bigint_to_coeff::<F>(c);
            acc += &(coeff * params.monomial(m.p, m.q));
        }
        acc
    }
}

fn bigint_to_coeff<F: Coeff>(c: &BigInt) -> F {
    use num_traits::ToPrimitive;
    match c.to_i64() {
        Some(v) => F::from_i64(v),
        None => {
            // split into base-2^32 digits
            let (sign, digits) = c.to_u32_digits();
            let base = F::from_i64(1 << 32);
            let mut acc = F::zero();
            for d in digits.iter().rev() {
                acc = acc * &base + F::from_i64(*d as i64);
            }
            if sign == num_bigint::Sign::Minus {
                -acc
            } else {
                acc
            }
        }
    }
}

fn eval_integral(poly: &LaurentPoly, p: &Rational, q: &Rational) -> Result<Rational> {
    let pow = |b: &Rational, e: i32| -> Result<Rational> {
        if e % 2 != 0 {
            return Err(Error::DomainError(
                "half-integer exponent cannot be specialized from p and q alone".into(),
            ));
        }
        if b.is_zero() && e < 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(num_traits::pow::Pow::pow(b, e / 2))
    };
    let mut acc = Rational::zero();
    for (m, c) in &poly.terms {
        acc += Rational::from_integer(c.clone()) * pow(p, m.p)? * pow(q, m.q)?;
    }
    Ok(acc)
}

/// How a pair of Laurent polynomials is laid out densely.
struct Layout {
    sp: i32,
    sq: i32,
    outer_p: bool,
}

impl Layout {
    fn for_polys(polys: &[&LaurentPoly]) -> Self {
        let (mut gp, mut gq) = (0i32, 0i32);
        let (mut dp, mut dq) = (0i32, 0i32);
        for poly in polys {
            let m = poly.min_exponents();
            for (k, _) in &poly.terms {
                let (a, b) = (k.p - m.p, k.q - m.q);
                gp = gp.gcd(&a);
                gq = gq.gcd(&b);
                dp = dp.max(a);
                dq = dq.max(b);
            }
        }
        let sp = gp.max(1);
        let sq = gq.max(1);
        Layout {
            sp,
            sq,
            outer_p: dp / sp <= dq / sq,
        }
    }

    fn to_dense(&self, poly: &LaurentPoly, shift: Monomial) -> ZPoly2 {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (k, c) in &poly.terms {
            let a = ((k.p - shift.p) / self.sp) as usize;
            let b = ((k.q - shift.q) / self.sq) as usize;
            let (o, i) = if self.outer_p { (a, b) } else { (b, a) };
            if rows.len() <= o {
                rows.resize(o + 1, Vec::new());
            }
            if rows[o].len() <= i {
                rows[o].resize(i + 1, BigInt::zero());
            }
            rows[o][i] = c.clone();
        }
        UPoly::new(rows.into_iter().map(UPoly::new).collect())
    }

    fn from_dense(&self, d: &ZPoly2, shift: Monomial) -> LaurentPoly {
        let mut terms = Vec::new();
        for (o, row) in d.c.iter().enumerate() {
            for (i, c) in row.c.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, b) = if self.outer_p { (o, i) } else { (i, o) };
                terms.push((
                    Monomial::new(a as i32 * self.sp + shift.p, b as i32 * self.sq + shift.q),
                    c.clone(),
                ));
            }
        }
        LaurentPoly::from_terms(terms)
    }
}

/// Divide `a` and `b` by their polynomial gcd (monomial factors are units).
fn cancel(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if a.is_zero() || b.is_zero() {
        return (a.clone(), b.clone());
    }
    if a.terms.len() == 1 || b.terms.len() == 1 {
        let g = a.content().gcd(&b.content());
        return (a.div_int(&g), b.div_int(&g));
    }
    let (ma, mb) = (a.min_exponents(), b.min_exponents());
    let layout = Layout::for_polys(&[a, b]);
    let da = layout.to_dense(a, ma);
    let db = layout.to_dense(b, mb);
    let g = dense::gcd(&da, &db);
    if dense::is_one(&g) {
        return (a.clone(), b.clone());
    }
    let qa = dense::exact_div(&da, &g);
    let qb = dense::exact_div(&db, &g);
    (layout.from_dense(&qa, ma), layout.from_dense(&qb, mb))
}

/// An element of the field `C(p^(1/2), q^(1/2))` in lowest terms.
///
/// Canonical form: `den` is a polynomial with no monomial factor, `num` and
/// `den` share no common factor (including integer content), and the
/// graded-lexicographic leading coefficient of `den` is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    /// Build `num/den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Scalar {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::from_poly(LaurentPoly::constant(v.into()))
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::normalized(
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
    }

    /// `p^(a/2) q^(b/2)`.
    pub fn monomial(a: i32, b: i32) -> Self {
        Self::from_poly(LaurentPoly::term(Monomial::new(a, b), BigInt::one()))
    }

    pub fn p_half() -> Self {
        Self::monomial(1, 0)
    }

    pub fn q_half() -> Self {
        Self::monomial(0, 1)
    }

    pub fn p() -> Self {
        Self::monomial(2, 0)
    }

    pub fn q() -> Self {
        Self::monomial(0, 2)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar::zero();
        }
        let m = den.min_exponents();
        let (num, den) = (num.shift(m.inv()), den.shift(m.inv()));
        let (num, den) = cancel(&num, &den);
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: LaurentPoly, den: LaurentPoly) -> Self {
        if den.leading().unwrap().1.is_negative() {
            Scalar {
                num: num.neg_ref(),
                den: den.neg_ref(),
            }
        } else {
            Scalar { num, den }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Substitute `p^(1/2) -> p^(-1/2)` and `q^(1/2) -> q^(-1/2)`.
    pub fn invert_variables(&self) -> Self {
        Self::normalized(self.num.invert_variables(), self.den.invert_variables())
    }

    /// Evaluate at numeric parameters.
    pub fn eval<F: FromRational>(&self, params: &Params<F>) -> Result<F> {
        let den = self.den.eval(params);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes(self.to_string()));
        }
        params.div(&self.num.eval(params), &den)
    }

    /// Substitute rational values for `p^(1/2)` and `q^(1/2)`.
    pub fn specialize(&self, p_half: &Rational, q_half: &Rational) -> Result<Rational> {
        let params = Params::<Rational>::numeric(p_half, q_half)?;
        self.eval(&params)
    }

    /// Substitute rational values for `p` and `q` themselves. Fails with a
    /// domain error if a half-integer power survives in lowest terms.
    pub fn specialize_pq(&self, p: &Rational, q: &Rational) -> Result<Rational> {
        let den = eval_integral(&self.den, p, q)?;
        if den.is_zero() {
            return Err(Error::DenominatorVanishes(self.to_string()));
        }
        Ok(eval_integral(&self.num, p, q)? / den)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.add_ref(&rhs.num));
        }
        if self.den == rhs.den {
            let num = self.num.add_ref(&rhs.num);
            if num.is_zero() {
                return Scalar::zero();
            }
            let (num, den) = cancel(&num, &self.den);
            return Self::fix_sign(num, den);
        }
        let (d1, d2) = cancel(&self.den, &rhs.den);
        // common = self.den * d2 = rhs.den * d1
        let num = self.num.mul_ref(&d2).add_ref(&rhs.num.mul_ref(&d1));
        if num.is_zero() {
            return Scalar::zero();
        }
        let den = self.den.mul_ref(&d2);
        let (num, den) = cancel(&num, &den);
        Self::fix_sign(num, den)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul_ref(&rhs.num));
        }
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        Self::fix_sign(n1.mul_ref(&n2), d1.mul_ref(&d2))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_poly(LaurentPoly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg_ref(),
            den: self.den,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &'a Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl<'a, 'b> $tr<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &'b Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
    };
}

scalar_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_ref(b));
scalar_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_ref(&-b));
scalar_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_ref(b));

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl Coeff for Scalar {
    fn from_i64(v: i64) -> Self {
        Scalar::from_int(v)
    }

    fn checked_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl crate::field::ParamInvolution for Scalar {
    fn invert_params(&self) -> Self {
        self.invert_variables()
    }
}

impl Params<Scalar> {
    /// The generic parameters: `p^(1/2)` and `q^(1/2)` as indeterminates.
    pub fn symbolic() -> Self {
        Params::new(Scalar::p_half(), Scalar::q_half()).expect("indeterminates are nonzero")
    }
}

fn fmt_var(out: &mut Vec<String>, name: char, e: i32) {
    match e {
        0 => {}
        2 => out.push(name.to_string()),
        e if e % 2 == 0 => out.push(format!("{name}^{}", e / 2)),
        e => out.push(format!("{name}^({e}/2)")),
    }
}

fn fmt_poly(poly: &LaurentPoly) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (m, c)) in poly.terms.iter().enumerate() {
        let mut factors = Vec::new();
        fmt_var(&mut factors, 'p', m.p);
        fmt_var(&mut factors, 'q', m.q);
        let body = if factors.is_empty() {
            c.to_string()
        } else if c.is_one() {
            factors.join("*")
        } else if (-c).is_one() {
            format!("-{}", factors.join("*"))
        } else {
            format!("{c}*{}", factors.join("*"))
        };
        if i > 0 && !body.starts_with('-') {
            s.push('+');
        }
        s.push_str(&body);
    }
    s
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_poly(self))
    }
}

/// Canonical string form: `num` or `(num)/(den)`, with negative exponents
/// cleared by a common monomial factor.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.num.min_exponents().min(Monomial::ONE);
        let num = self.num.shift(m.inv());
        let den = self.den.shift(m.inv());
        if den.is_one() {
            f.write_str(&fmt_poly(&num))
        } else {
            write!(f, "({})/({})", fmt_poly(&num), fmt_poly(&den))
        }
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_scalar(s)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `sum_{sigma in S_n} q^{l(sigma)} = prod_{k=1}^n (1 + q + ... + q^{k-1})`.
pub fn poincare_a<F: Coeff>(params: &Params<F>, n: usize) -> F {
    let q = params.q();
    let mut acc = F::one();
    for k in 1..=n {
        let mut s = F::zero();
        let mut qi = F::one();
        for _ in 0..k {
            s += &qi;
            qi = qi * &q;
        }
        acc = acc * s;
    }
    acc
}

/// Two-parameter Poincaré polynomial of the hyperoctahedral group,
/// `(-p; q)_n * poincare_a(n)`.
pub fn poincare_b<F: Coeff>(params: &Params<F>, n: usize) -> F {
    let p = params.p();
    let q = params.q();
    let mut acc = poincare_a(params, n);
    let mut qi = F::one();
    for _ in 0..n {
        acc = acc * (F::one() + p.clone() * &qi);
        qi = qi * &q;
    }
    acc
}
