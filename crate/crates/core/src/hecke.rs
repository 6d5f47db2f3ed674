//! The generic Hecke algebra of type B_n in the T-basis.
//!
//! `T_i` for `i < n` satisfies `T_i^2 = (q-1) T_i + q`, and `T_n` satisfies
//! `T_n^2 = (p-1) T_n + p`. The type-A subalgebra is spanned by `T_sigma`
//! with `sigma` a plain permutation.

use std::collections::BTreeMap;
use std::fmt::Display;

use crate::coxeter::{SignVector, SignedPerm};
use crate::error::{check_rank, Error, Result};
use crate::field::{Coeff, ParamInvolution, Params};

/// Default limit on `n` for anything that enumerates `S_n`.
pub const DEFAULT_SYMMETRIZER_CAP: usize = 8;
/// Absolute limit on `n` for `S_n` enumeration, whatever the configuration.
pub const HARD_SYMMETRIZER_CAP: usize = 10;

/// Parameter `c` of the quadratic relation for `T_i`.
pub(crate) fn quad_param<F: Coeff>(params: &Params<F>, i: usize, n: usize) -> F {
    if i == n {
        params.p()
    } else {
        params.q()
    }
}

fn check_gen(i: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::DomainError(format!("generator index {i} outside 1..={n}")))
    }
}

/// A finite linear combination `sum c_w T_w`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeElt<F> {
    n: usize,
    terms: BTreeMap<SignedPerm, F>,
}

impl<F: Coeff> HeckeElt<F> {
    pub fn zero(n: usize) -> Self {
        HeckeElt {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `T_e`, the unit.
    pub fn identity(n: usize) -> Self {
        Self::basis(SignedPerm::identity(n))
    }

    pub fn basis(w: SignedPerm) -> Self {
        let n = w.n();
        let mut terms = BTreeMap::new();
        terms.insert(w, F::one());
        HeckeElt { n, terms }
    }

    /// `T_i`.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        Ok(Self::basis(SignedPerm::generator(i, n)?))
    }

    /// `T_x` for `x` in `Z_2^n` viewed as a sign change.
    pub fn sign_basis(x: SignVector) -> Self {
        Self::basis(x.to_perm())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (SignedPerm, F)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            check_rank(n, w.n())?;
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPerm, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &SignedPerm) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    /// Whether every basis element lies in `S_n`, i.e. the element is in the
    /// type-A subalgebra.
    pub fn is_type_a(&self) -> bool {
        self.terms.keys().all(SignedPerm::is_positive)
    }

    fn add_term(&mut self, w: SignedPerm, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_rank(self.n, rhs.n)?;
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.clone() * c);
        }
        out
    }

    /// `T_i * self`.
    pub fn gen_mul_left(&self, params: &Params<F>, i: usize) -> Result<Self> {
        self.gen_mul(params, i, true)
    }

    /// `self * T_i`.
    pub fn gen_mul_right(&self, params: &Params<F>, i: usize) -> Result<Self> {
        self.gen_mul(params, i, false)
    }

    fn gen_mul(&self, params: &Params<F>, i: usize, left: bool) -> Result<Self> {
        check_gen(i, self.n)?;
        let s = SignedPerm::generator(i, self.n)?;
        let c = quad_param(params, i, self.n);
        let c1 = c.clone() - F::one();
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            let (sw, descent) = if left {
                (s.compose(w), w.has_left_descent(i))
            } else {
                (w.compose(&s), w.has_right_descent(i))
            };
            if descent {
                out.add_term(w.clone(), a.clone() * &c1);
                out.add_term(sw, a.clone() * &c);
            } else {
                out.add_term(sw, a.clone());
            }
        }
        Ok(out)
    }

    /// Product in `H_n`: each `T_w` of the left factor is expanded along its
    /// reduced word and applied to `rhs` from the right end of the word.
    pub fn multiply(&self, rhs: &Self, params: &Params<F>) -> Result<Self> {
        check_rank(self.n, rhs.n)?;
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            let mut acc = rhs.clone();
            for &i in w.reduced_word().iter().rev() {
                acc = acc.gen_mul_left(params, i)?;
            }
            for (v, b) in acc.terms {
                out.add_term(v, b * a);
            }
        }
        Ok(out)
    }

    /// The index representation `T_i -> q`, `T_n -> p`.
    pub fn index_rep(&self, params: &Params<F>) -> F {
        self.one_dim_rep(|| params.p(), params)
    }

    /// `T_i -> q`, `T_n -> -1`.
    pub fn index_rep_prime(&self, params: &Params<F>) -> F {
        self.one_dim_rep(|| -F::one(), params)
    }

    /// `T_w -> (-1)^l(w)`.
    pub fn sign_rep(&self) -> F {
        let mut acc = F::zero();
        for (w, c) in &self.terms {
            if w.length() % 2 == 0 {
                acc += c;
            } else {
                acc = acc - c.clone();
            }
        }
        acc
    }

    fn one_dim_rep(&self, tn: impl Fn() -> F, params: &Params<F>) -> F {
        let q = params.q();
        let tn = tn();
        let mut acc = F::zero();
        for (w, c) in &self.terms {
            // every reduced word of w uses s_n exactly (number of sign changes) times
            let short = w.images().iter().filter(|&&v| v < 0).count();
            let long = w.length() - short;
            let val = pow(&tn, short) * pow(&q, long);
            acc += &(val * c);
        }
        acc
    }

    /// `T_w -> T_{w^{-1}}` with coefficients unchanged.
    pub fn star1(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.inverse(), c.clone());
        }
        out
    }

    /// `T_w` inverted in `H_n` along its reduced word:
    /// `T_i^{-1} = c^{-1} T_i + (c^{-1} - 1)`.
    pub fn basis_inverse(w: &SignedPerm, params: &Params<F>) -> Result<Self> {
        let n = w.n();
        let mut acc = Self::identity(n);
        // T_w = T_{i_1} ... T_{i_l}, so T_w^{-1} = T_{i_l}^{-1} ... T_{i_1}^{-1}
        for &i in w.reduced_word().iter() {
            let c_inv = params.div(&F::one(), &quad_param(params, i, n))?;
            let shifted = acc.gen_mul_left(params, i)?.scale(&c_inv);
            acc = shifted.add(&acc.scale(&(c_inv - F::one())))?;
        }
        Ok(acc)
    }
}

impl<F: ParamInvolution> HeckeElt<F> {
    /// `T_w -> T_w^{-1}` with `p^(1/2) -> p^(-1/2)`, `q^(1/2) -> q^(-1/2)` on
    /// coefficients.
    pub fn star2(&self, params: &Params<F>) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let inv = Self::basis_inverse(w, params)?.scale(&c.invert_params());
            out = out.add(&inv)?;
        }
        Ok(out)
    }
}

impl<F: Coeff + Display> HeckeElt<F> {
    /// `(element, coefficient)` string pairs sorted by length, then by
    /// reduced word.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        let mut keyed: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| ((w.length(), w.reduced_word()), w.to_string(), c.to_string()))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|(_, w, c)| (w, c)).collect()
    }
}

fn pow<F: Coeff>(x: &F, k: usize) -> F {
    let mut acc = F::one();
    for _ in 0..k {
        acc = acc * x;
    }
    acc
}

/// The unnormalized symmetrizer `sum_{sigma in S_n} T_sigma`.
pub fn symmetrizer_sum<F: Coeff>(n: usize, cap: usize) -> Result<HeckeElt<F>> {
    let mut out = HeckeElt::zero(n);
    for term in symmetrizer_terms(n, cap)? {
        out.add_term(term.perm(n), F::one());
    }
    Ok(out)
}

/// Resolve a requested cap against the hard limit.
pub fn resolve_cap(requested: Option<usize>) -> Result<usize> {
    let cap = requested.unwrap_or(DEFAULT_SYMMETRIZER_CAP);
    if cap > HARD_SYMMETRIZER_CAP {
        return Err(Error::CapExceeded {
            n: cap,
            cap: HARD_SYMMETRIZER_CAP,
        });
    }
    Ok(cap)
}

/// One element of `S_n` from [`symmetrizer_terms`].
///
/// `chain` lists generator indices in application order: `T_sigma v` is
/// `T_{chain[k-1]} ... T_{chain[0]} v`. The first `shared` entries coincide
/// with the previous term's chain, and `chain` has exactly one more entry
/// than `shared` (except for the first term, which is empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTerm {
    pub chain: Vec<usize>,
    pub shared: usize,
}

impl SymTerm {
    /// `sigma = s_{chain[k-1]} ... s_{chain[0]}`.
    pub fn perm(&self, n: usize) -> SignedPerm {
        let mut w = SignedPerm::identity(n);
        for &i in &self.chain {
            w = SignedPerm::generator(i, n).unwrap().compose(&w);
        }
        w
    }

    /// `l(sigma)`; the chain is a reduced word.
    pub fn length(&self) -> usize {
        self.chain.len()
    }
}

/// Depth-first enumeration of `S_n` along `S_1 < S_2 < ... < S_n`.
///
/// `sigma = c_n c_{n-1} ... c_2` where `c_k = s_j s_{j+1} ... s_{k-1}` is a
/// minimal left coset representative of `S_k / S_{k-1}`. Each step extends a
/// stored prefix by one generator, so a module action costs one generator
/// application per element of `S_n`.
pub fn symmetrizer_terms(n: usize, cap: usize) -> Result<SymmetrizerTerms> {
    let cap = cap.min(HARD_SYMMETRIZER_CAP);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(SymmetrizerTerms {
        n,
        js: (0..=n).collect(),
        chain: Vec::new(),
        started: false,
        done: false,
    })
}

/// Iterator returned by [`symmetrizer_terms`].
#[derive(Debug, Clone)]
pub struct SymmetrizerTerms {
    n: usize,
    // js[k] in 1..=k selects c_k; js[k] == k is the identity
    js: Vec<usize>,
    chain: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for SymmetrizerTerms {
    type Item = SymTerm;

    fn next(&mut self) -> Option<SymTerm> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(SymTerm {
                chain: Vec::new(),
                shared: 0,
            });
        }
        // odometer with level n varying fastest
        let mut k = self.n;
        while k >= 2 && self.js[k] == 1 {
            k -= 1;
        }
        if k < 2 {
            self.done = true;
            return None;
        }
        for l in k + 1..=self.n {
            self.js[l] = l;
        }
        self.js[k] -= 1;
        let prefix: usize = (2..k).map(|l| l - self.js[l]).sum::<usize>() + (k - 1 - self.js[k]);
        self.chain.truncate(prefix);
        self.chain.push(self.js[k]);
        Some(SymTerm {
            chain: self.chain.clone(),
            shared: prefix,
        })
    }
}

/// Run `apply` along every chain of [`symmetrizer_terms`], reusing stored
/// prefixes, and hand each `T_sigma`-image to `visit`.
pub fn for_each_symmetrized<S: Clone>(
    n: usize,
    cap: usize,
    start: S,
    mut apply: impl FnMut(usize, &S) -> Result<S>,
    mut visit: impl FnMut(&SymTerm, &S) -> Result<()>,
) -> Result<()> {
    let mut stack = vec![start];
    for term in symmetrizer_terms(n, cap)? {
        if let Some(&i) = term.chain.last() {
            stack.truncate(term.shared + 1);
            let next = apply(i, &stack[term.shared])?;
            stack.push(next);
        }
        visit(&term, stack.last().unwrap())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::permutations;
    use crate::scalars::{poincare_a, Scalar};
    use num_traits::{One, Zero};
    use std::collections::BTreeSet;

    fn sym() -> Params<Scalar> {
        Params::symbolic()
    }

    #[test]
    fn quadratic_relations() {
        let pr = sym();
        for n in 1..=3 {
            for i in 1..=n {
                let t = HeckeElt::<Scalar>::generator(i, n).unwrap();
                let c = quad_param(&pr, i, n);
                let sq = t.gen_mul_left(&pr, i).unwrap();
                let expect = t
                    .scale(&(c.clone() - Scalar::one()))
                    .add(&HeckeElt::identity(n).scale(&c))
                    .unwrap();
                assert_eq!(sq, expect);
                assert_eq!(t.gen_mul_right(&pr, i).unwrap(), expect);
            }
        }
        let e = HeckeElt::<Scalar>::identity(2);
        assert_eq!(e.gen_mul_left(&pr, 1).unwrap(), HeckeElt::generator(1, 2).unwrap());
    }

    #[test]
    fn chain_enumerates_s_n() {
        for n in 1..=5 {
            let terms: Vec<_> = symmetrizer_terms(n, 8).unwrap().collect();
            let perms: BTreeSet<_> = terms.iter().map(|t| t.perm(n)).collect();
            assert_eq!(perms.len(), terms.len());
            assert_eq!(perms, permutations(n).into_iter().collect());
            let mut prev: Vec<usize> = Vec::new();
            for t in &terms {
                assert_eq!(t.perm(n).length(), t.length());
                assert_eq!(&t.chain[..t.shared], &prev[..t.shared]);
                prev = t.chain.clone();
            }
        }
        assert!(matches!(
            symmetrizer_terms(9, 8),
            Err(Error::CapExceeded { n: 9, cap: 8 })
        ));
        assert!(symmetrizer_terms(11, 20).is_err());
    }

    #[test]
    fn chain_lengths_give_poincare() {
        let pr = sym();
        for n in 1..=5 {
            let mut acc = Scalar::zero();
            for t in symmetrizer_terms(n, 8).unwrap() {
                acc += &pr.q_pow(t.length() as i32);
            }
            assert_eq!(acc, poincare_a(&pr, n));
        }
    }

    #[test]
    fn inverse_of_generator() {
        let pr = sym();
        for i in 1..=2 {
            let s = SignedPerm::generator(i, 2).unwrap();
            let inv = HeckeElt::basis_inverse(&s, &pr).unwrap();
            let prod = inv.multiply(&HeckeElt::basis(s), &pr).unwrap();
            assert_eq!(prod, HeckeElt::identity(2));
        }
    }
}
