//! `U_{q^(1/2)}(sl2)` acting on `V_n = (C^2)^{(x) n}` through the iterated
//! coproduct, and the commutant with the type-A Hecke action.
//!
//! Tensor slot `k` is coordinate `k` of a sign vector and `e_{-1}` is the
//! state `x_k = -1`, so `uhat(x) = e_{x_1} (x) ... (x) e_{x_n}`. The
//! coproduct is `Delta(K) = K (x) K`, `Delta(E) = K (x) E + E (x) 1`,
//! `Delta(F) = 1 (x) F + F (x) K^{-1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::DualElt;
use crate::coxeter::SignVector;
use crate::error::{check_rank, Error, Result};
use crate::field::{Coeff, Params};
use crate::linalg::{Echelon, SparseRow};
use crate::scalars::Scalar;
use crate::vmodule::{Basis, VElt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UqGen {
    K,
    KInv,
    E,
    F,
}

impl UqGen {
    pub const ALL: [UqGen; 4] = [UqGen::K, UqGen::KInv, UqGen::E, UqGen::F];
}

impl fmt::Display for UqGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UqGen::K => "K",
            UqGen::KInv => "K^-1",
            UqGen::E => "E",
            UqGen::F => "F",
        })
    }
}

/// The 2x2 matrix of a generator on `C^2` in the ordered basis
/// `(e_{-1}, e_1)`; `m[r][c]` is row `r`, column `c`.
pub fn fundamental_rep<F: Coeff>(params: &Params<F>, g: UqGen) -> [[F; 2]; 2] {
    let (z, o) = (F::zero(), F::one());
    match g {
        UqGen::K => [[params.q_pow_half(1), z.clone()], [z, params.q_pow_half(-1)]],
        UqGen::KInv => [[params.q_pow_half(-1), z.clone()], [z, params.q_pow_half(1)]],
        UqGen::E => [[z.clone(), o], [z.clone(), z]],
        UqGen::F => [[z.clone(), z.clone()], [o, z]],
    }
}

/// Square sparse matrix stored by columns: `cols[c]` lists `(row, entry)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix<F> {
    dim: usize,
    cols: Vec<Vec<(usize, F)>>,
}

impl<F: Coeff> SparseMatrix<F> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: (0..dim).map(|c| vec![(c, F::one())]).collect(),
        }
    }

    fn from_dense_cols(cols: Vec<Vec<F>>) -> Self {
        let dim = cols.len();
        SparseMatrix {
            dim,
            cols: cols
                .into_iter()
                .map(|col| col.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.cols[c]
            .iter()
            .find(|(i, _)| *i == r)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(F::zero)
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.cols[c] {
                out[*r] += &(a.clone() * x);
            }
        }
        out
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        check_rank(self.dim, rhs.dim)?;
        let mut cols = Vec::with_capacity(self.dim);
        for col in &rhs.cols {
            let mut dense = vec![F::zero(); self.dim];
            for (k, b) in col {
                for (r, a) in &self.cols[*k] {
                    dense[*r] += &(a.clone() * b);
                }
            }
            cols.push(dense);
        }
        Ok(Self::from_dense_cols(cols))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.lin_comb(rhs, &F::one())
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.lin_comb(rhs, &-F::one())
    }

    fn lin_comb(&self, rhs: &Self, s: &F) -> Result<Self> {
        check_rank(self.dim, rhs.dim)?;
        let mut cols = Vec::with_capacity(self.dim);
        for (a, b) in self.cols.iter().zip(&rhs.cols) {
            let mut dense = vec![F::zero(); self.dim];
            for (r, x) in a {
                dense[*r] += x;
            }
            for (r, x) in b {
                dense[*r] += &(x.clone() * s);
            }
            cols.push(dense);
        }
        Ok(Self::from_dense_cols(cols))
    }

    pub fn scale(&self, s: &F) -> Self {
        SparseMatrix {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|(r, x)| (*r, x.clone() * s))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col {
                cols[*r].push((c, x.clone()));
            }
        }
        for col in &mut cols {
            col.sort_by_key(|(r, _)| *r);
        }
        SparseMatrix { dim: self.dim, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|(_, x)| x.is_zero()))
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// Whether two matrices are equal entrywise.
    pub fn same(&self, rhs: &Self) -> Result<bool> {
        Ok(self.sub(rhs)?.is_zero())
    }

    /// First nonzero entry as `(row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, F)> {
        self.cols
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.iter().find(|(_, x)| !x.is_zero()).map(|(r, x)| (*r, c, x.clone())))
    }
}

/// `t(g)` on `V_n` in the `uhat` basis.
pub fn t_action<F: Coeff>(params: &Params<F>, g: UqGen, n: usize) -> SparseMatrix<F> {
    let size = 1usize << n;
    let minus_before = |b: usize, i: usize| (b & ((1 << (i - 1)) - 1)).count_ones() as i32;
    let cols = (0..size)
        .map(|b| {
            let w = b.count_ones() as i32;
            let nn = n as i32;
            match g {
                UqGen::K => vec![(b, params.q_pow_half(2 * w - nn))],
                UqGen::KInv => vec![(b, params.q_pow_half(nn - 2 * w))],
                UqGen::E => {
                    // K (x) ... (x) K (x) E (x) 1 (x) ... (x) 1 on slot i
                    let mut col: Vec<(usize, F)> = (1..=n)
                        .filter(|&i| b & (1 << (i - 1)) == 0)
                        .map(|i| {
                            let mb = minus_before(b, i);
                            let pb = i as i32 - 1 - mb;
                            (b | 1 << (i - 1), params.q_pow_half(mb - pb))
                        })
                        .collect();
                    col.sort_by_key(|(r, _)| *r);
                    col
                }
                UqGen::F => {
                    // 1 (x) ... (x) 1 (x) F (x) K^{-1} (x) ... (x) K^{-1} on slot i
                    let mut col: Vec<(usize, F)> = (1..=n)
                        .filter(|&i| b & (1 << (i - 1)) != 0)
                        .map(|i| {
                            let ma = w - minus_before(b, i) - 1;
                            let pa = nn - i as i32 - ma;
                            (b & !(1 << (i - 1)), params.q_pow_half(pa - ma))
                        })
                        .collect();
                    col.sort_by_key(|(r, _)| *r);
                    col
                }
            }
        })
        .collect();
    SparseMatrix { dim: size, cols }
}

/// `rho(T_i)` as a matrix in the given basis.
pub fn rho_matrix<F: Coeff>(params: &Params<F>, i: usize, n: usize, basis: Basis) -> Result<SparseMatrix<F>> {
    let mut cols = Vec::with_capacity(1 << n);
    for x in SignVector::all(n) {
        let img = VElt::<F>::basis_vector(basis, x).act_gen(params, i)?;
        cols.push(img.coords().to_vec());
    }
    Ok(SparseMatrix::from_dense_cols(cols))
}

/// A linear combination of words in the generators.
#[derive(Debug, Clone, PartialEq)]
pub struct UqElt<F> {
    pub terms: Vec<(F, Vec<UqGen>)>,
}

impl<F: Coeff> UqElt<F> {
    pub fn gen(g: UqGen) -> Self {
        UqElt {
            terms: vec![(F::one(), vec![g])],
        }
    }

    pub fn scalar(c: F) -> Self {
        UqElt {
            terms: vec![(c, Vec::new())],
        }
    }

    pub fn plus(mut self, rhs: UqElt<F>) -> Self {
        self.terms.extend(rhs.terms);
        self
    }

    pub fn scale(mut self, c: &F) -> Self {
        for (a, _) in &mut self.terms {
            *a = a.clone() * c;
        }
        self
    }

    /// Words are read left to right as products.
    pub fn times(&self, rhs: &UqElt<F>) -> Self {
        let mut terms = Vec::new();
        for (a, u) in &self.terms {
            for (b, v) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((a.clone() * b, w));
            }
        }
        UqElt { terms }
    }

    /// The antimultiplicative `*`. Coefficients are real, so conjugation
    /// acts trivially on them.
    pub fn star(&self, params: &Params<F>) -> Self {
        let mut out = UqElt { terms: Vec::new() };
        for (a, word) in &self.terms {
            let mut acc = UqElt::scalar(a.clone());
            for g in word.iter().rev() {
                let (c, w) = star_gen(params, *g);
                acc = acc.times(&UqElt { terms: vec![(c, w)] });
            }
            out = out.plus(acc);
        }
        out
    }

    /// `t(X)` on `V_n`.
    pub fn matrix(&self, params: &Params<F>, n: usize) -> Result<SparseMatrix<F>> {
        let mut out = SparseMatrix::zero(1 << n);
        for (a, word) in &self.terms {
            let mut m = SparseMatrix::identity(1 << n);
            for g in word {
                m = m.mul(&t_action(params, *g, n))?;
            }
            out = out.add(&m.scale(a))?;
        }
        Ok(out)
    }
}

/// `g^*` as `(coefficient, word)`: `K^* = K`, `E^* = q^(-1/2) F K`,
/// `F^* = q^(1/2) K^{-1} E`.
pub fn star_gen<F: Coeff>(params: &Params<F>, g: UqGen) -> (F, Vec<UqGen>) {
    match g {
        UqGen::K => (F::one(), vec![UqGen::K]),
        UqGen::KInv => (F::one(), vec![UqGen::KInv]),
        UqGen::E => (params.q_pow_half(-1), vec![UqGen::F, UqGen::K]),
        UqGen::F => (params.q_pow_half(1), vec![UqGen::KInv, UqGen::E]),
    }
}

/// `t^*(X) d`, defined by `(t^*(X) f)(v) = f(t(X^*) v)`.
pub fn t_star<F: Coeff>(params: &Params<F>, x: &UqElt<F>, d: &DualElt<F>) -> Result<DualElt<F>> {
    let n = d.n();
    let m = x.star(params).matrix(params, n)?;
    let mut values = Vec::with_capacity(1 << n);
    for s in SignVector::all(n) {
        let img = VElt::from_coords(
            n,
            Basis::UHat,
            m.apply(VElt::<F>::u(s).to_basis(Basis::UHat, params).coords()),
        )?;
        values.push(d.eval(params, &img)?);
    }
    DualElt::from_values_on_u(params, n, &values)
}

/// Multiplicities of `W_m` (dimension `m + 1`) in `W_1^{(x) n}`, by iterating
/// `W_m (x) W_1 = W_{m+1} + W_{m-1}`.
pub fn clebsch_gordan(n: usize) -> BTreeMap<usize, usize> {
    let mut mult = BTreeMap::new();
    mult.insert(0usize, 1usize);
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (&m, &k) in &mult {
            *next.entry(m + 1).or_insert(0) += k;
            if m > 0 {
                *next.entry(m - 1).or_insert(0) += k;
            }
        }
        mult = next;
    }
    mult
}

fn weight_classes(n: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); n + 1];
    for b in 0..1usize << n {
        classes[b.count_ones() as usize].push(b);
    }
    classes
}

/// Dimension of `{X : X rho(T_i) = rho(T_i) X, i < n}`. `rho(T_i)` preserves
/// each weight space `V^d`, so the blocks `V^e -> V^d` decouple.
pub fn hecke_centralizer_dim<F: Coeff>(params: &Params<F>, n: usize) -> Result<usize> {
    let mats = (1..n)
        .map(|i| rho_matrix(params, i, n, Basis::U))
        .collect::<Result<Vec<_>>>()?;
    let classes = weight_classes(n);
    let mut total = 0;
    for rows in &classes {
        for cols in &classes {
            let idx = |r: usize, c: usize| r * cols.len() + c;
            let mut ech = Echelon::new(rows.len() * cols.len());
            for m in &mats {
                for (ri, &r) in rows.iter().enumerate() {
                    for (ci, &c) in cols.iter().enumerate() {
                        // (X M - M X)[r][c]
                        let mut eq: SparseRow<F> = BTreeMap::new();
                        for (cj, &c2) in cols.iter().enumerate() {
                            let a = m.get(c2, c);
                            if !a.is_zero() {
                                *eq.entry(idx(ri, cj)).or_insert_with(F::zero) += &a;
                            }
                        }
                        for (rj, &r2) in rows.iter().enumerate() {
                            let a = m.get(r, r2);
                            if !a.is_zero() {
                                *eq.entry(idx(rj, ci)).or_insert_with(F::zero) += &(-a);
                            }
                        }
                        ech.insert(eq)?;
                    }
                }
            }
            total += ech.nullity();
        }
    }
    Ok(total)
}

/// Dimension of the commutant of `t(U)`: block diagonal on weight spaces
/// (forced by `t(K)`), intertwining `t(E)` and `t(F)`.
pub fn uq_centralizer_dim<F: Coeff>(params: &Params<F>, n: usize) -> Result<usize> {
    let classes = weight_classes(n);
    let mut offset = vec![0usize; n + 2];
    for d in 0..=n {
        offset[d + 1] = offset[d] + classes[d].len() * classes[d].len();
    }
    let pos: BTreeMap<usize, (usize, usize)> = classes
        .iter()
        .enumerate()
        .flat_map(|(d, cl)| cl.iter().enumerate().map(move |(k, &b)| (b, (d, k))))
        .collect();
    // unknown X_d[r][c]
    let var = |b_r: usize, b_c: usize| {
        let (d, r) = pos[&b_r];
        let (_, c) = pos[&b_c];
        offset[d] + r * classes[d].len() + c
    };
    let mut ech = Echelon::new(offset[n + 1]);
    for g in [UqGen::E, UqGen::F] {
        let m = t_action(params, g, n);
        let target = |d: usize| if g == UqGen::E { d + 1 } else { d.wrapping_sub(1) };
        for d in 0..=n {
            let e = target(d);
            if e > n {
                continue;
            }
            // (X M - M X)[r][c] for r in V^e, c in V^d
            for &r in &classes[e] {
                for &c in &classes[d] {
                    let mut eq: SparseRow<F> = BTreeMap::new();
                    for &c2 in &classes[e] {
                        let a = m.get(c2, c);
                        if !a.is_zero() {
                            *eq.entry(var(r, c2)).or_insert_with(F::zero) += &a;
                        }
                    }
                    for &r2 in &classes[d] {
                        let a = m.get(r, r2);
                        if !a.is_zero() {
                            *eq.entry(var(r2, c)).or_insert_with(F::zero) += &(-a);
                        }
                    }
                    ech.insert(eq)?;
                }
            }
        }
    }
    Ok(ech.nullity())
}

#[derive(Debug, Clone, Serialize)]
pub struct CommutantReport {
    pub n: usize,
    pub commutators_vanish: bool,
    pub failures: Vec<String>,
    /// Dimension of the centralizer of `rho(T_i)`, `i < n`.
    pub hecke_centralizer_dim: Option<usize>,
    /// `sum_m (dim W_m)^2` over the Clebsch-Gordan constituents.
    pub hecke_expected: usize,
    /// Dimension of the centralizer of `t(K), t(E), t(F)`.
    pub uq_centralizer_dim: Option<usize>,
    /// `sum_m mult(W_m)^2`.
    pub uq_expected: usize,
    pub precheck_passed: Option<bool>,
}

impl CommutantReport {
    pub fn passed(&self) -> bool {
        self.commutators_vanish
            && self.hecke_centralizer_dim.is_none_or(|d| d == self.hecke_expected)
            && self.uq_centralizer_dim.is_none_or(|d| d == self.uq_expected)
            && self.precheck_passed != Some(false)
    }
}

/// Random nonzero rationals for `p^(1/2)`, `q^(1/2)`, away from `+-1`.
pub fn random_rational_params(seed: u64) -> Params<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = || loop {
        let num: i64 = rng.gen_range(2..60);
        let den: i64 = rng.gen_range(1..60);
        let r = BigRational::new(num.into(), den.into());
        if !r.is_one() {
            return r;
        }
    };
    let (a, b) = (pick(), pick());
    Params::new(a, b).expect("nonzero")
}

/// Commutation of `t(U)` with `rho(T_i)` for `i < n`, and the two centralizer
/// dimensions against Clebsch-Gordan. Dimensions are computed exactly at
/// symbolic parameters when `dims` holds, after a pre-check at random
/// rational parameters.
pub fn check_commutant(n: usize, dims: bool, seed: u64) -> Result<CommutantReport> {
    if n < 2 {
        return Err(Error::DomainError("commutant check needs n >= 2".into()));
    }
    let params = Params::<Scalar>::symbolic();
    let mut failures = Vec::new();
    let rhos = (1..n)
        .map(|i| rho_matrix(&params, i, n, Basis::UHat))
        .collect::<Result<Vec<_>>>()?;
    for g in UqGen::ALL {
        let t = t_action(&params, g, n);
        for (k, r) in rhos.iter().enumerate() {
            if let Some((row, col, v)) = t.commutator(r)?.first_nonzero() {
                failures.push(format!("[t({g}), rho(T_{})] entry ({row},{col}) = {v}", k + 1));
            }
        }
    }
    let cg = clebsch_gordan(n);
    let hecke_expected = cg.keys().map(|m| (m + 1) * (m + 1)).sum();
    let uq_expected = cg.values().map(|k| k * k).sum();
    let (mut hd, mut ud, mut pre) = (None, None, None);
    if dims {
        let rp = random_rational_params(seed);
        let ok = hecke_centralizer_dim(&rp, n)? == hecke_expected && uq_centralizer_dim(&rp, n)? == uq_expected;
        pre = Some(ok);
        hd = Some(hecke_centralizer_dim(&params, n)?);
        ud = Some(uq_centralizer_dim(&params, n)?);
    }
    Ok(CommutantReport {
        n,
        commutators_vanish: failures.is_empty(),
        failures,
        hecke_centralizer_dim: hd,
        hecke_expected,
        uq_centralizer_dim: ud,
        uq_expected,
        precheck_passed: pre,
    })
}

/// The type-A invariant vectors `{v : rho(T_i) v = q v, i < n}`.
#[derive(Debug, Clone)]
pub struct InvariantSubspace<F> {
    /// One spanning vector per kernel basis element, `u` basis.
    pub basis: Vec<VElt<F>>,
    /// `t(K), t(E), t(F)` map the space into itself.
    pub preserved: bool,
    /// `u(-1, ..., -1)` is invariant and killed by `t(E)`.
    pub highest_weight: bool,
}

pub fn invariant_subspace<F: Coeff>(params: &Params<F>, n: usize) -> Result<InvariantSubspace<F>> {
    let q = params.q();
    let mats = (1..n)
        .map(|i| rho_matrix(params, i, n, Basis::U))
        .collect::<Result<Vec<_>>>()?;
    let mut basis = Vec::new();
    for cl in weight_classes(n) {
        let mut ech = Echelon::new(cl.len());
        for m in &mats {
            for &r in &cl {
                let mut eq: SparseRow<F> = BTreeMap::new();
                for (k, &c) in cl.iter().enumerate() {
                    let mut a = m.get(r, c);
                    if r == c {
                        a = a - q.clone();
                    }
                    if !a.is_zero() {
                        eq.insert(k, a);
                    }
                }
                ech.insert(eq)?;
            }
        }
        for kv in ech.kernel_basis() {
            let mut coords = vec![F::zero(); 1 << n];
            for (k, &b) in cl.iter().enumerate() {
                coords[b] = kv[k].clone();
            }
            basis.push(VElt::from_coords(n, Basis::U, coords)?);
        }
    }
    let mut preserved = true;
    for g in [UqGen::K, UqGen::E, UqGen::F] {
        let t = t_action(params, g, n);
        for v in &basis {
            let hat = v.to_basis(Basis::UHat, params);
            let img = VElt::from_coords(n, Basis::UHat, t.apply(hat.coords()))?;
            preserved &= img.is_type_a_invariant(params)?;
        }
    }
    let top = VElt::<F>::uhat(SignVector::minus_ones(n));
    let e_top = t_action(params, UqGen::E, n).apply(top.coords());
    let highest_weight = top.is_type_a_invariant(params)? && e_top.iter().all(F::is_zero);
    Ok(InvariantSubspace {
        basis,
        preserved,
        highest_weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> Params<Scalar> {
        Params::symbolic()
    }

    fn mat2(m: [[Scalar; 2]; 2]) -> SparseMatrix<Scalar> {
        SparseMatrix::from_dense_cols(vec![
            vec![m[0][0].clone(), m[1][0].clone()],
            vec![m[0][1].clone(), m[1][1].clone()],
        ])
    }

    #[test]
    fn fundamental_relations() {
        let pr = sym();
        let k = mat2(fundamental_rep(&pr, UqGen::K));
        let ki = mat2(fundamental_rep(&pr, UqGen::KInv));
        let e = mat2(fundamental_rep(&pr, UqGen::E));
        let f = mat2(fundamental_rep(&pr, UqGen::F));
        assert_eq!(k.mul(&ki).unwrap(), SparseMatrix::identity(2));
        let lhs = e.commutator(&f).unwrap();
        let c = pr.div(&Scalar::one(), &(pr.q_pow_half(1) - pr.q_pow_half(-1))).unwrap();
        assert_eq!(lhs, k.sub(&ki).unwrap().scale(&c));
        let kek = k.mul(&e).unwrap().mul(&ki).unwrap();
        assert_eq!(kek, e.scale(&pr.q()));
        // n = 1 tensor action is the fundamental representation; bitmask 0 is e_1
        for g in UqGen::ALL {
            let t = t_action(&pr, g, 1);
            let m = fundamental_rep(&pr, g);
            for r in 0..2 {
                for c in 0..2 {
                    assert_eq!(t.get(1 - r, 1 - c), m[r][c]);
                }
            }
        }
    }

    #[test]
    fn relations_on_tensor_power() {
        let pr = sym();
        for n in 1..=3 {
            let k = t_action(&pr, UqGen::K, n);
            let ki = t_action(&pr, UqGen::KInv, n);
            let e = t_action(&pr, UqGen::E, n);
            let f = t_action(&pr, UqGen::F, n);
            assert_eq!(k.mul(&ki).unwrap(), SparseMatrix::identity(1 << n));
            assert!(k.mul(&e).unwrap().same(&e.mul(&k).unwrap().scale(&pr.q())).unwrap());
            let qi = pr.div(&Scalar::one(), &pr.q()).unwrap();
            assert!(k.mul(&f).unwrap().same(&f.mul(&k).unwrap().scale(&qi)).unwrap());
            let c = pr.div(&Scalar::one(), &(pr.q_pow_half(1) - pr.q_pow_half(-1))).unwrap();
            assert!(e.commutator(&f).unwrap().same(&k.sub(&ki).unwrap().scale(&c)).unwrap());
        }
    }

    #[test]
    fn commutant_small() {
        let r = check_commutant(2, true, 7).unwrap();
        assert!(r.commutators_vanish, "{:?}", r.failures);
        assert_eq!(r.hecke_centralizer_dim, Some(10));
        assert_eq!(r.uq_centralizer_dim, Some(2));
        let r = check_commutant(3, true, 7).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.uq_expected, 5);
    }

    #[test]
    fn star_adjointness() {
        let pr = sym();
        let n = 2;
        for g in UqGen::ALL {
            let t = t_action(&pr, g, n);
            let ts = UqElt::gen(g).star(&pr).matrix(&pr, n).unwrap();
            // uhat is orthonormal, so adjointness is transposition
            assert_eq!(t.transpose(), ts, "{g}");
        }
    }

    #[test]
    fn invariants() {
        let pr = sym();
        for n in 1..=3 {
            let s = invariant_subspace(&pr, n).unwrap();
            assert_eq!(s.basis.len(), n + 1);
            assert!(s.preserved && s.highest_weight);
        }
    }
}
