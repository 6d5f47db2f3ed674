//! Invariant elements `w_d`, the zonal spherical functions `phi_f` and their
//! identification with q-Krawtchouk polynomials.
//!
//! `w_d = rho(P) v(1, ..., 1, -1, ..., -1)` with `d` trailing minus signs
//! spans the `F_n`-invariants of `V_n`, and `phi_f(w_d) = chi_y(w_d)` for any
//! `y` of weight `f`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::characters::{convolve, eval_char, rho_star_gen, weight_h, DualElt};
use crate::coxeter::SignVector;
use crate::error::{check_rank, Error, Result};
use crate::field::{Coeff, Params};
use crate::hecke::for_each_symmetrized;
use crate::qgroup::{t_action, t_star, UqElt, UqGen};
use crate::qseries::{classical_krawtchouk, q_binomial, q_krawtchouk, q_pochhammer, QKrawParams};
use crate::scalars::{poincare_a, Rational, Scalar};
use crate::vmodule::{Basis, ProductTable, VElt};

/// The invariant elements `w_0, ..., w_n`, stored in the `u` basis.
#[derive(Debug, Clone)]
pub struct InvariantBasis<F> {
    n: usize,
    w: Vec<VElt<F>>,
    table: ProductTable<F>,
}

/// `rho(P) v(x)`, returned in the `u` basis.
pub fn symmetrized_v<F: Coeff>(params: &Params<F>, x: SignVector, cap: usize) -> Result<VElt<F>> {
    Ok(VElt::v(x).symmetrize(params, cap)?.to_basis(Basis::U, params))
}

pub fn build_invariant_basis<F: Coeff>(params: &Params<F>, n: usize, cap: usize) -> Result<InvariantBasis<F>> {
    if n == 0 {
        return Err(Error::DomainError("rank must be at least 1".into()));
    }
    let w = (0..=n)
        .map(|d| symmetrized_v(params, SignVector::trailing_minus(n, d), cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantBasis {
        n,
        w,
        table: ProductTable::new(n, params)?,
    })
}

/// `B(w_d, w_d) = p^{-d} q^{-d(d-1)/2} [n d]_q^{-1}`.
pub fn norm_closed_form<F: Coeff>(params: &Params<F>, n: usize, d: usize) -> Result<F> {
    let (d_, n_) = (d as i32, n as i32);
    let b = q_binomial(params, n_ as i64, d_ as i64)?;
    params.div(&(params.p_pow(-d_) * params.q_pow(-d_ * (d_ - 1) / 2)), &b)
}

/// The closed-form action of a generator on `w_d`: a coefficient and the
/// index of the target `w`, or `None` when the image is zero.
pub fn efk_closed_form<F: Coeff>(params: &Params<F>, g: UqGen, n: usize, d: usize) -> Result<Option<(F, usize)>> {
    let (n_, d_) = (n as i32, d as i32);
    let one_minus_q = F::one() - params.q();
    let out = match g {
        // q^{d - n/2}
        UqGen::K => Some((params.q_pow_half(2 * d_ - n_), d)),
        UqGen::KInv => Some((params.q_pow_half(n_ - 2 * d_), d)),
        UqGen::E if d < n => {
            let num = params.p_half().clone()
                * params.q_pow_half(1 - n_)
                * params.q_pow(d_)
                * (F::one() - params.q_pow(n_ - d_));
            Some((params.div(&num, &one_minus_q)?, d + 1))
        }
        UqGen::F if d > 0 => {
            let num = params.p_pow_half(-1) * params.q_pow(1 - d_) * (F::one() - params.q_pow(d_));
            Some((params.div(&num, &one_minus_q)?, d - 1))
        }
        _ => None,
    };
    Ok(out)
}

impl<F: Coeff> InvariantBasis<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self, d: usize) -> &VElt<F> {
        &self.w[d]
    }

    pub fn elements(&self) -> &[VElt<F>] {
        &self.w
    }

    pub fn product_table(&self) -> &ProductTable<F> {
        &self.table
    }

    /// `B(w_d, w_e)`.
    pub fn form(&self, d: usize, e: usize) -> Result<F> {
        self.table.bilinear_b(&self.w[d], &self.w[e])
    }

    /// Pairs `(d, e)` where `B(w_d, w_e)` differs from the closed form.
    pub fn norm_failures(&self, params: &Params<F>) -> Result<Vec<(usize, usize)>> {
        let mut bad = Vec::new();
        for d in 0..=self.n {
            for e in 0..=self.n {
                let expect = if d == e {
                    norm_closed_form(params, self.n, d)?
                } else {
                    F::zero()
                };
                if self.form(d, e)? != expect {
                    bad.push((d, e));
                }
            }
        }
        Ok(bad)
    }

    /// Sign vectors `x` with `rho(P) v(x) != w_{w(x)}`.
    pub fn representative_failures(&self, params: &Params<F>, cap: usize) -> Result<Vec<SignVector>> {
        let mut bad = Vec::new();
        for x in SignVector::all(self.n) {
            if symmetrized_v(params, x, cap)? != self.w[x.weight()] {
                bad.push(x);
            }
        }
        Ok(bad)
    }

    /// Whether every `w_d` is fixed (up to the index character) by the type A
    /// generators.
    pub fn all_invariant(&self, params: &Params<F>) -> Result<bool> {
        for w in &self.w {
            if !w.is_type_a_invariant(params)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `t(g) w_d`, computed with the tensor action, in the `u` basis.
    pub fn act_efk(&self, params: &Params<F>, g: UqGen, d: usize) -> Result<VElt<F>> {
        if d > self.n {
            return Err(Error::DomainError(format!("index {d} exceeds rank {}", self.n)));
        }
        let m = t_action(params, g, self.n);
        let hat = self.w[d].to_basis(Basis::UHat, params);
        let img = VElt::from_coords(self.n, Basis::UHat, m.apply(hat.coords()))?;
        Ok(img.to_basis(Basis::U, params))
    }

    /// Whether `t(g) w_d` matches [`efk_closed_form`].
    pub fn check_efk(&self, params: &Params<F>, g: UqGen, d: usize) -> Result<bool> {
        let got = self.act_efk(params, g, d)?;
        let expect = match efk_closed_form(params, g, self.n, d)? {
            Some((c, e)) => self.w[e].scale(&c),
            None => VElt::zero(self.n, Basis::U),
        };
        Ok(got == expect)
    }

    /// `phi_f(w_d)` through the character of the canonical `y` of weight `f`.
    pub fn phi_eval(&self, params: &Params<F>, f: usize, d: usize) -> Result<F> {
        self.check_index(f, d)?;
        eval_char(params, SignVector::trailing_minus(self.n, f), &self.w[d])
    }

    /// `phi_f(w_d)`, checking that every `y` of weight `f` gives the same value.
    pub fn phi_eval_checked(&self, params: &Params<F>, f: usize, d: usize) -> Result<F> {
        let value = self.phi_eval(params, f, d)?;
        for y in SignVector::all(self.n).filter(|y| y.weight() == f) {
            if eval_char(params, y, &self.w[d])? != value {
                return Err(Error::DomainError(format!(
                    "chi_{y}(w_{d}) differs from the value at weight {f}"
                )));
            }
        }
        Ok(value)
    }

    fn check_index(&self, f: usize, d: usize) -> Result<()> {
        if f > self.n || d > self.n {
            return Err(Error::DomainError(format!(
                "indices need 0 <= f, d <= n, got f={f}, d={d}, n={}",
                self.n
            )));
        }
        Ok(())
    }

    /// The table of `phi_f(w_d)` from character values.
    pub fn phi_table(&self, params: &Params<F>) -> Result<SphericalTable<F>> {
        let n = self.n;
        let values = (0..=n)
            .map(|f| (0..=n).map(|d| self.phi_eval_checked(params, f, d)).collect())
            .collect::<Result<Vec<Vec<F>>>>()?;
        Ok(SphericalTable { n, values })
    }

    /// `tau(w_k w_d w_l)`.
    pub fn triple_tau(&self, k: usize, d: usize, l: usize) -> Result<F> {
        let kd = self.table.product(&self.w[k], &self.w[d])?;
        Ok(self.table.product(&kd, &self.w[l])?.tau())
    }

    /// Linearization coefficients `c_l(k, d)` of `w_k w_d = sum_l c_l(k,d) w_l`.
    pub fn product_coeffs(&self, params: &Params<F>, k: usize, d: usize) -> Result<Vec<F>> {
        self.check_index(k, d)?;
        let kd = self.table.product(&self.w[k], &self.w[d])?;
        (0..=self.n)
            .map(|l| {
                let t = self.table.product(&kd, &self.w[l])?.tau();
                params.div(&t, &norm_closed_form(params, self.n, l)?)
            })
            .collect()
    }

    /// Whether `w_k w_d` equals `sum_l c_l(k, d) w_l` as vectors.
    pub fn product_expansion_holds(&self, params: &Params<F>, k: usize, d: usize) -> Result<bool> {
        let c = self.product_coeffs(params, k, d)?;
        let mut acc = VElt::zero(self.n, Basis::U);
        for (l, cl) in c.iter().enumerate() {
            acc = acc.add(&self.w[l].scale(cl), params)?;
        }
        Ok(acc == self.table.product(&self.w[k], &self.w[d])?)
    }

    /// Whether `tau(w_k w_d w_l)` is symmetric in its three arguments, with
    /// each triple computed along every ordering of the products.
    pub fn triple_symmetric(&self) -> Result<bool> {
        let n = self.n;
        for k in 0..=n {
            for d in 0..=n {
                for l in 0..=n {
                    let a = self.triple_tau(k, d, l)?;
                    if self.triple_tau(d, l, k)? != a || self.triple_tau(l, k, d)? != a {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(1 - q) rho(P)(w v_d)` with `w = sum_i u(x^i)` and `v_d` the `v`
    /// basis vector with `d` trailing minus signs, against
    /// `p q^d (1 - q^{n-d}) w_{d+1} + (1 - q^d)(p - 1) w_d + (1 - q^d) w_{d-1}`.
    pub fn recurrence_identity_holds(&self, params: &Params<F>, d: usize, cap: usize) -> Result<bool> {
        let n = self.n;
        let mut w = VElt::zero(n, Basis::U);
        for i in 1..=n {
            w = w.add(&VElt::u(SignVector::unit(n, i)), params)?;
        }
        let wv = self.table.product(&w, &VElt::v(SignVector::trailing_minus(n, d)))?;
        let lhs = wv.symmetrize(params, cap)?.scale(&(F::one() - params.q()));
        let (n_, d_) = (n as i32, d as i32);
        let one_minus_qd = F::one() - params.q_pow(d_);
        let mut rhs = self.w[d].scale(&(one_minus_qd.clone() * (params.p() - F::one())));
        if d < n {
            let c = params.p() * params.q_pow(d_) * (F::one() - params.q_pow(n_ - d_));
            rhs = rhs.add(&self.w[d + 1].scale(&c), params)?;
        }
        if d > 0 {
            rhs = rhs.add(&self.w[d - 1].scale(&one_minus_qd), params)?;
        }
        Ok(lhs == rhs)
    }

    /// `phi_f(w v) = phi_f(w) phi_f(v)` for every invariant `w_k` and every
    /// `u(x)`.
    pub fn homomorphism_holds(&self, params: &Params<F>, f: usize) -> Result<bool> {
        let phi = phi_dual(params, f, self.n)?;
        for w in &self.w {
            let pw = phi.eval(params, w)?;
            for x in SignVector::all(self.n) {
                let u = VElt::u(x);
                let lhs = phi.eval(params, &self.table.product(w, &u)?)?;
                if lhs != pw.clone() * phi.eval(params, &u)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The matrix `phi_f(w_d)`, row `f`, column `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalTable<F> {
    pub n: usize,
    pub values: Vec<Vec<F>>,
}

impl<F: Coeff> SphericalTable<F> {
    pub fn get(&self, f: usize, d: usize) -> &F {
        &self.values[f][d]
    }

    /// Entries that differ from `other`, as `(f, d)`.
    pub fn mismatches(&self, other: &Self) -> Result<Vec<(usize, usize)>> {
        check_rank(self.n, other.n)?;
        let mut out = Vec::new();
        for f in 0..=self.n {
            for d in 0..=self.n {
                if self.values[f][d] != other.values[f][d] {
                    out.push((f, d));
                }
            }
        }
        Ok(out)
    }
}

impl<F: Coeff + fmt::Display> SphericalTable<F> {
    /// `{"n": .., "rows": [{"f": .., "values": [..]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<_> = self
            .values
            .iter()
            .enumerate()
            .map(|(f, row)| {
                serde_json::json!({
                    "f": f,
                    "values": row.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "rows": rows })
    }

    /// Rows `f,value_0,...,value_n` under a `f,d0,...,dn` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("f");
        for d in 0..=self.n {
            out.push_str(&format!(",d{d}"));
        }
        out.push('\n');
        for (f, row) in self.values.iter().enumerate() {
            out.push_str(&f.to_string());
            for v in row {
                out.push(',');
                out.push_str(&csv_field(&v.to_string()));
            }
            out.push('\n');
        }
        out
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl SphericalTable<Scalar> {
    /// Substitute `p^(1/2)` and `q^(1/2)`.
    pub fn specialize(&self, p_half: &Rational, q_half: &Rational) -> Result<SphericalTable<Rational>> {
        self.map_entries(|v| v.specialize(p_half, q_half))
    }

    /// Substitute `p` and `q` directly; entries only involve integral powers.
    pub fn specialize_pq(&self, p: &Rational, q: &Rational) -> Result<SphericalTable<Rational>> {
        self.map_entries(|v| v.specialize_pq(p, q))
    }

    fn map_entries(&self, mut g: impl FnMut(&Scalar) -> Result<Rational>) -> Result<SphericalTable<Rational>> {
        let mut values = Vec::with_capacity(self.n + 1);
        for (f, row) in self.values.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (d, v) in row.iter().enumerate() {
                out.push(g(v).map_err(|e| match e {
                    Error::DenominatorVanishes(s) => Error::DenominatorVanishes(format!("entry (f={f}, d={d}) = {s}")),
                    other => other,
                })?);
            }
            values.push(out);
        }
        Ok(SphericalTable { n: self.n, values })
    }
}

/// The eigenvalue `p(1 - q^{n-f}) - (1 - q^f)` of the recurrence.
pub fn recurrence_eigenvalue<F: Coeff>(params: &Params<F>, f: usize, n: usize) -> F {
    params.p() * (F::one() - params.q_pow((n - f) as i32)) - (F::one() - params.q_pow(f as i32))
}

/// Solve the three-term recurrence forward in `d` from `phi_f(w_0) = 1`.
pub fn phi_via_recurrence<F: Coeff>(params: &Params<F>, n: usize) -> Result<SphericalTable<F>> {
    let p = params.p();
    let mut values = Vec::with_capacity(n + 1);
    for f in 0..=n {
        let lambda = recurrence_eigenvalue(params, f, n);
        let mut row = vec![F::one()];
        for d in 0..n {
            let one_minus_qd = F::one() - params.q_pow(d as i32);
            let mut rhs = (lambda.clone() - one_minus_qd.clone() * (p.clone() - F::one())) * &row[d];
            if d > 0 {
                rhs = rhs - one_minus_qd * &row[d - 1];
            }
            let lead = p.clone() * params.q_pow(d as i32) * (F::one() - params.q_pow((n - d) as i32));
            row.push(params.div(&rhs, &lead)?);
        }
        values.push(row);
    }
    Ok(SphericalTable { n, values })
}

/// Residual of the recurrence at `d = n`, which the forward solve does not use.
pub fn recurrence_closes<F: Coeff>(params: &Params<F>, table: &SphericalTable<F>) -> bool {
    let n = table.n;
    let qn = F::one() - params.q_pow(n as i32);
    (0..=n).all(|f| {
        let row = &table.values[f];
        let lhs = recurrence_eigenvalue(params, f, n) * &row[n];
        let mut rhs = qn.clone() * (params.p() - F::one()) * &row[n];
        if n > 0 {
            rhs = rhs + qn.clone() * &row[n - 1];
        }
        lhs == rhs
    })
}

/// `K_f(q^{-d}; p, n; q)` for all `f, d`.
pub fn krawtchouk_table<F: Coeff>(params: &Params<F>, n: usize) -> Result<SphericalTable<F>> {
    let values = (0..=n)
        .map(|f| {
            (0..=n)
                .map(|d| q_krawtchouk(params, &QKrawParams::new(f, d, params.p(), n)?))
                .collect()
        })
        .collect::<Result<Vec<Vec<F>>>>()?;
    Ok(SphericalTable { n, values })
}

/// `phi_f(w_n) = (-p)^{-f} q^{f(f-n)}`.
pub fn phi_at_top<F: Coeff>(params: &Params<F>, f: usize, n: usize) -> F {
    let (f_, n_) = (f as i32, n as i32);
    let sign = if f.is_multiple_of(2) { F::one() } else { -F::one() };
    sign * params.p_pow(-f_) * params.q_pow(f_ * (f_ - n_))
}

/// One entry of the three-way comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentificationEntry<F> {
    pub f: usize,
    pub d: usize,
    pub from_characters: F,
    pub from_recurrence: F,
    pub from_series: F,
}

impl<F: Coeff> IdentificationEntry<F> {
    pub fn agrees(&self) -> bool {
        self.from_characters == self.from_recurrence && self.from_recurrence == self.from_series
    }
}

/// Character evaluation on symmetrized `w_d`, the recurrence and the
/// terminating series, entry by entry.
pub fn identify_krawtchouk<F: Coeff>(
    params: &Params<F>,
    basis: &InvariantBasis<F>,
) -> Result<Vec<IdentificationEntry<F>>> {
    let n = basis.n();
    let chars = basis.phi_table(params)?;
    let rec = phi_via_recurrence(params, n)?;
    let series = krawtchouk_table(params, n)?;
    let mut out = Vec::new();
    for f in 0..=n {
        for d in 0..=n {
            out.push(IdentificationEntry {
                f,
                d,
                from_characters: chars.values[f][d].clone(),
                from_recurrence: rec.values[f][d].clone(),
                from_series: series.values[f][d].clone(),
            });
        }
    }
    Ok(out)
}

/// `H_f = [n f]^{-1} (-p q^{-f}; q)_{n+1} / (p q^{n-f} + q^f) q^{f(f+1)/2} p^{-f}`.
pub fn weight_hf<F: Coeff>(params: &Params<F>, f: usize, n: usize) -> Result<F> {
    let (f_, n_) = (f as i32, n as i32);
    let a = -(params.p() * params.q_pow(-f_));
    let num = q_pochhammer(params, &a, n + 1) * params.q_pow(f_ * (f_ + 1) / 2) * params.p_pow(-f_);
    let den = q_binomial(params, n as i64, f as i64)? * (params.p() * params.q_pow(n_ - f_) + params.q_pow(f_));
    params.div(&num, &den)
}

/// `(sum_{w(y) = f} h_y^{-1})^{-1}`.
pub fn weight_hf_from_characters<F: Coeff>(params: &Params<F>, f: usize, n: usize) -> Result<F> {
    let mut acc = F::zero();
    for y in SignVector::all(n).filter(|y| y.weight() == f) {
        acc += &params.div(&F::one(), &weight_h(params, y))?;
    }
    params.div(&F::one(), &acc)
}

/// Outcome of the spherical orthogonality checks.
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize)]
pub struct OrthogonalityReport {
    pub n: usize,
    /// `(g, f)` pairs failing the sum over `d`.
    pub primal_failures: Vec<(usize, usize)>,
    /// `(g, d)` pairs failing the sum over `f`.
    pub dual_failures: Vec<(usize, usize)>,
    /// `f` where the closed form of `H_f` differs from the character sum.
    pub weight_failures: Vec<usize>,
    pub h0_matches: bool,
    pub hn_matches: bool,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.primal_failures.is_empty()
            && self.dual_failures.is_empty()
            && self.weight_failures.is_empty()
            && self.h0_matches
            && self.hn_matches
    }
}

/// `p^d q^{d(d-1)/2} [n d]_q`, the inverse norm of `w_d`.
fn inverse_norm<F: Coeff>(params: &Params<F>, n: usize, d: usize) -> Result<F> {
    let d_ = d as i32;
    Ok(params.p_pow(d_) * params.q_pow(d_ * (d_ - 1) / 2) * q_binomial(params, n as i64, d as i64)?)
}

/// Both orthogonality systems for a table of spherical values.
pub fn orthogonality_hf<F: Coeff>(params: &Params<F>, table: &SphericalTable<F>) -> Result<OrthogonalityReport> {
    let n = table.n;
    let mut rep = OrthogonalityReport {
        n,
        ..Default::default()
    };
    let hf = (0..=n).map(|f| weight_hf(params, f, n)).collect::<Result<Vec<_>>>()?;
    for (f, h) in hf.iter().enumerate() {
        if *h != weight_hf_from_characters(params, f, n)? {
            rep.weight_failures.push(f);
        }
    }
    let wd = (0..=n)
        .map(|d| inverse_norm(params, n, d))
        .collect::<Result<Vec<_>>>()?;
    let phi = &table.values;
    for g in 0..=n {
        for f in 0..=n {
            let mut acc = F::zero();
            for d in 0..=n {
                acc += &(wd[d].clone() * &phi[g][d] * &phi[f][d]);
            }
            let expect = if g == f { hf[f].clone() } else { F::zero() };
            if acc != expect {
                rep.primal_failures.push((g, f));
            }
        }
    }
    for g in 0..=n {
        for d in 0..=n {
            let mut acc = F::zero();
            for f in 0..=n {
                acc += &params.div(&(phi[f][g].clone() * &phi[f][d]), &hf[f])?;
            }
            let expect = if g == d {
                params.div(&F::one(), &wd[d])?
            } else {
                F::zero()
            };
            if acc != expect {
                rep.dual_failures.push((g, d));
            }
        }
    }
    let minus_p = -params.p();
    let minus_p_inv = -params.p_pow(-1);
    rep.h0_matches = hf[0] == q_pochhammer(params, &minus_p, n);
    rep.hn_matches = hf[n] == q_pochhammer(params, &minus_p_inv, n);
    Ok(rep)
}

/// `phi_f` as an element of `V_n^*`: `H_f sum_{w(y) = f} h_y^{-1} chi_y`.
pub fn phi_dual<F: Coeff>(params: &Params<F>, f: usize, n: usize) -> Result<DualElt<F>> {
    if f > n {
        return Err(Error::DomainError(format!("weight {f} exceeds rank {n}")));
    }
    let hf = weight_hf(params, f, n)?;
    let mut coeffs = Vec::with_capacity(1 << n);
    for y in SignVector::all(n) {
        coeffs.push(if y.weight() == f {
            params.div(&hf, &weight_h(params, y))?
        } else {
            F::zero()
        });
    }
    DualElt::from_coeffs(n, coeffs)
}

/// `rho^*(P) chi_y` for the canonical `y` of weight `f`, normalized to take
/// the value 1 at `u(1, ..., 1)`. Costs `n!` generator applications.
pub fn phi_dual_by_symmetrization<F: Coeff>(params: &Params<F>, f: usize, n: usize, cap: usize) -> Result<DualElt<F>> {
    let start = DualElt::chi(SignVector::trailing_minus(n, f));
    let mut acc = DualElt::zero(n);
    for_each_symmetrized(
        n,
        cap,
        start,
        |i, d| rho_star_gen(params, i, d),
        |_, d| {
            acc = acc.add(d)?;
            Ok(())
        },
    )?;
    let acc = acc.scale(&params.div(&F::one(), &poincare_a(params, n))?);
    let at_one = acc.eval(params, &VElt::one(n))?;
    Ok(acc.scale(&params.div(&F::one(), &at_one)?))
}

/// `(p^(1/2) - p^(-1/2)) / (q^(1/2) - q^(-1/2))`.
fn eigen_shift<F: Coeff>(params: &Params<F>) -> Result<F> {
    params.div(
        &(params.p_half().clone() - params.p_pow_half(-1)),
        &(params.q_half().clone() - params.q_pow_half(-1)),
    )
}

/// `E + E^* + c (K - 1)` with `c` as in [`eigen_shift`].
pub fn eigen_operator<F: Coeff>(params: &Params<F>) -> Result<UqElt<F>> {
    let c = eigen_shift(params)?;
    let e = UqElt::gen(UqGen::E);
    Ok(e.clone()
        .plus(e.star(params))
        .plus(UqElt::gen(UqGen::K).scale(&c))
        .plus(UqElt::scalar(-c)))
}

/// `(p^(1/2) q^{n/2-f} - p^(-1/2) q^{f-n/2} + p^(-1/2) - p^(1/2)) / (q^(1/2) - q^(-1/2))`.
pub fn eigen_value<F: Coeff>(params: &Params<F>, f: usize, n: usize) -> Result<F> {
    let e = n as i32 - 2 * f as i32;
    let num = params.p_half().clone() * params.q_pow_half(e) - params.p_pow_half(-1) * params.q_pow_half(-e)
        + params.p_pow_half(-1)
        - params.p_half().clone();
    params.div(&num, &(params.q_half().clone() - params.q_pow_half(-1)))
}

/// Weights `f` for which `phi_f` is not an eigenvector of
/// [`eigen_operator`] under `t^*` with [`eigen_value`].
pub fn eigen_operator_failures<F: Coeff>(params: &Params<F>, n: usize) -> Result<Vec<usize>> {
    let x = eigen_operator(params)?;
    let mut bad = Vec::new();
    for f in 0..=n {
        let phi = phi_dual(params, f, n)?;
        if t_star(params, &x, &phi)? != phi.scale(&eigen_value(params, f, n)?) {
            bad.push(f);
        }
    }
    Ok(bad)
}

/// Pairs `(f, g)` violating `phi_f * phi_g = delta_{f,g} H_f phi_f`.
pub fn convolution_failures<F: Coeff>(params: &Params<F>, n: usize) -> Result<Vec<(usize, usize)>> {
    let phis = (0..=n).map(|f| phi_dual(params, f, n)).collect::<Result<Vec<_>>>()?;
    let mut bad = Vec::new();
    for f in 0..=n {
        for g in 0..=n {
            let got = convolve(params, &phis[f], &phis[g])?;
            let expect = if f == g {
                phis[f].scale(&weight_hf(params, f, n)?)
            } else {
                DualElt::zero(n)
            };
            if got != expect {
                bad.push((f, g));
            }
        }
    }
    Ok(bad)
}

/// Check `u(z, 1, -1, ..., -1) u(x^i)^2 =
/// q^{n-i}(p-1) u(z, -1, ..., -1)
///  + p q^{n-i-1}(q-1) sum_{j>i} u(z, -1, ..., 1 at j, ..., -1)
///  + p q^{n-i} u(z, 1, -1, ..., -1)`.
///
/// `z` holds the first `i - 1` coordinates.
pub fn lemma_product_check<F: Coeff>(params: &Params<F>, table: &ProductTable<F>, i: usize, z: &[i8]) -> Result<bool> {
    let n = table.n();
    if i == 0 || i > n || z.len() != i - 1 {
        return Err(Error::DomainError(format!(
            "need 1 <= i <= n and a prefix of length i-1, got i={i}, prefix length {}",
            z.len()
        )));
    }
    let vec = |tail: &[i8]| -> Result<SignVector> {
        let mut s = z.to_vec();
        s.extend_from_slice(tail);
        SignVector::from_signs(&s)
    };
    let mut tail = vec![1i8];
    tail.extend(std::iter::repeat_n(-1, n - i));
    let base = vec(&tail)?;
    let u = VElt::u(base);
    let once = table.mul_gen(u.coords(), i);
    let twice = table.mul_gen(&once, i);
    let lhs = VElt::from_coords(n, Basis::U, twice)?;

    let (n_, i_) = (n as i32, i as i32);
    let p = params.p();
    let all_minus = vec(&vec![-1; n - i + 1])?;
    let mut rhs = VElt::u(all_minus).scale(&(params.q_pow(n_ - i_) * (p.clone() - F::one())));
    if i < n {
        let c = p.clone() * params.q_pow(n_ - i_ - 1) * (params.q() - F::one());
        for j in i + 1..=n {
            let mut t = vec![-1i8; n - i + 1];
            t[j - i] = 1;
            rhs = rhs.add(&VElt::u(vec(&t)?).scale(&c), params)?;
        }
    }
    rhs = rhs.add(&u.scale(&(p * params.q_pow(n_ - i_))), params)?;
    Ok(lhs == rhs)
}

/// `(i, z)` pairs failing [`lemma_product_check`], over all `i` and prefixes.
pub fn lemma_failures<F: Coeff>(params: &Params<F>, n: usize) -> Result<Vec<(usize, String)>> {
    let table = ProductTable::new(n, params)?;
    let mut bad = Vec::new();
    for i in 1..=n {
        for bits in 0..1u32 << (i - 1) {
            let z: Vec<i8> = (0..i - 1).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect();
            if !lemma_product_check(params, &table, i, &z)? {
                let s: String = z.iter().map(|&c| if c < 0 { '-' } else { '+' }).collect();
                bad.push((i, s));
            }
        }
    }
    Ok(bad)
}

/// Finite groups of Lie type whose double coset algebra specializes the
/// two-parameter Hecke algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieType {
    B,
    C,
    D2,
    A2Odd,
    A2Even,
}

impl LieType {
    pub const ALL: [LieType; 5] = [LieType::B, LieType::C, LieType::D2, LieType::A2Odd, LieType::A2Even];

    pub fn name(self) -> &'static str {
        match self {
            LieType::B => "B",
            LieType::C => "C",
            LieType::D2 => "2D",
            LieType::A2Odd => "2A-odd",
            LieType::A2Even => "2A-even",
        }
    }

    /// `(p, q)` at the prime power `q0`.
    pub fn preset(self, q0: &Rational) -> Result<(Rational, Rational)> {
        if *q0 <= Rational::zero() {
            return Err(Error::DomainError(format!("q0 must be positive, got {q0}")));
        }
        let sq = q0 * q0;
        Ok(match self {
            LieType::B | LieType::C => (q0.clone(), q0.clone()),
            LieType::D2 => (sq, q0.clone()),
            LieType::A2Odd => (q0.clone(), sq),
            LieType::A2Even => (&sq * q0, sq),
        })
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(LieType::B),
            "C" => Ok(LieType::C),
            "2D" => Ok(LieType::D2),
            "2A-odd" | "2A_odd" => Ok(LieType::A2Odd),
            "2A-even" | "2A_even" => Ok(LieType::A2Even),
            other => Err(Error::Parse(format!("unknown Lie type preset {other:?}"))),
        }
    }
}

/// `lie_type_preset(group, q0)`, the free-function form of [`LieType::preset`].
pub fn lie_type_preset(group: LieType, q0: &Rational) -> Result<(Rational, Rational)> {
    group.preset(q0)
}

/// Entries `(f, d)` whose value at `p = q = 1` differs from the ordinary
/// Krawtchouk value.
pub fn classical_limit_failures(table: &SphericalTable<Scalar>) -> Result<Vec<(usize, usize)>> {
    let one = Rational::one();
    let lim = table.specialize_pq(&one, &one)?;
    let mut bad = Vec::new();
    for f in 0..=table.n {
        for d in 0..=table.n {
            if lim.values[f][d] != classical_krawtchouk(f, d, table.n)? {
                bad.push((f, d));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::DEFAULT_SYMMETRIZER_CAP as CAP;

    fn sym() -> Params<Scalar> {
        Params::symbolic()
    }

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn rank_one_by_hand() {
        let pr = sym();
        let b = build_invariant_basis(&pr, 1, CAP).unwrap();
        assert_eq!(*b.w(0), VElt::one(1));
        assert_eq!(*b.w(1), VElt::u("-".parse().unwrap()).scale(&s("(1)/(p)")));
        assert_eq!(b.form(1, 1).unwrap(), s("(1)/(p)"));
        assert_eq!(b.phi_eval(&pr, 1, 1).unwrap(), s("(-1)/(p)"));
        let e = b.act_efk(&pr, UqGen::E, 0).unwrap();
        assert_eq!(e, b.w(1).scale(pr.p_half()));
    }

    #[test]
    fn invariant_basis_small_ranks() {
        let pr = sym();
        for n in 1..=3 {
            let b = build_invariant_basis(&pr, n, CAP).unwrap();
            assert!(b.all_invariant(&pr).unwrap());
            assert!(b.norm_failures(&pr).unwrap().is_empty(), "n={n}");
            assert!(b.representative_failures(&pr, CAP).unwrap().is_empty(), "n={n}");
            for d in 0..=n {
                for g in UqGen::ALL {
                    assert!(b.check_efk(&pr, g, d).unwrap(), "n={n} d={d} g={g}");
                }
            }
            assert!(b.act_efk(&pr, UqGen::F, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn three_routes_agree() {
        let pr = sym();
        for n in 1..=3 {
            let b = build_invariant_basis(&pr, n, CAP).unwrap();
            for e in identify_krawtchouk(&pr, &b).unwrap() {
                assert!(e.agrees(), "n={n} f={} d={}", e.f, e.d);
            }
            let t = phi_via_recurrence(&pr, n).unwrap();
            assert!(recurrence_closes(&pr, &t));
            for f in 0..=n {
                assert_eq!(t.values[f][0], Scalar::one());
                assert_eq!(t.values[0][f], Scalar::one());
                assert_eq!(t.values[f][n], phi_at_top(&pr, f, n));
            }
        }
    }

    #[test]
    fn top_value_exponent() {
        let pr = sym();
        let t = phi_via_recurrence(&pr, 2).unwrap();
        // (-p)^{f-n} q^{f(f-n)} would give p^{-2} at f = 0
        assert_eq!(t.values[0][2], Scalar::one());
        assert_ne!(t.values[0][2], pr.p_pow(-2));
        assert_eq!(t.values[2][2], pr.p_pow(-2));
    }

    #[test]
    fn weights_hf() {
        let pr = sym();
        assert_eq!(weight_hf(&pr, 1, 1).unwrap(), s("(p+1)/(p)"));
        for n in 1..=3 {
            let t = phi_via_recurrence(&pr, n).unwrap();
            let rep = orthogonality_hf(&pr, &t).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn dual_elements() {
        let pr = sym();
        for n in 1..=3 {
            let b = build_invariant_basis(&pr, n, CAP).unwrap();
            for f in 0..=n {
                let phi = phi_dual(&pr, f, n).unwrap();
                assert_eq!(phi, phi_dual_by_symmetrization(&pr, f, n, CAP).unwrap());
                for d in 0..=n {
                    assert_eq!(phi.eval(&pr, b.w(d)).unwrap(), b.phi_eval(&pr, f, d).unwrap());
                }
                assert!(b.homomorphism_holds(&pr, f).unwrap());
            }
            assert!(eigen_operator_failures(&pr, n).unwrap().is_empty());
            assert!(convolution_failures(&pr, n).unwrap().is_empty());
        }
    }

    #[test]
    fn products_of_invariants() {
        let pr = sym();
        for n in 1..=3 {
            let b = build_invariant_basis(&pr, n, CAP).unwrap();
            assert!(b.triple_symmetric().unwrap());
            let t = b.phi_table(&pr).unwrap();
            for k in 0..=n {
                for d in 0..=n {
                    assert!(b.product_expansion_holds(&pr, k, d).unwrap());
                    let c = b.product_coeffs(&pr, k, d).unwrap();
                    if k == 0 {
                        for (l, cl) in c.iter().enumerate() {
                            assert_eq!(cl.is_one(), l == d);
                        }
                    }
                    for f in 0..=n {
                        let mut acc = Scalar::zero();
                        for (l, cl) in c.iter().enumerate() {
                            acc += &(cl.clone() * t.get(f, l));
                        }
                        assert_eq!(acc, t.get(f, k).clone() * t.get(f, d));
                    }
                }
            }
            for d in 0..=n {
                assert!(b.recurrence_identity_holds(&pr, d, CAP).unwrap(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn lemma_identity() {
        let pr = sym();
        for n in 1..=3 {
            assert!(lemma_failures(&pr, n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn presets() {
        let r = |v: i64| Rational::from_integer(v.into());
        assert_eq!(LieType::B.preset(&r(3)).unwrap(), (r(3), r(3)));
        assert_eq!(LieType::A2Even.preset(&r(2)).unwrap(), (r(8), r(4)));
        assert_eq!(LieType::D2.preset(&r(2)).unwrap(), (r(4), r(2)));
        assert_eq!(LieType::A2Odd.preset(&r(2)).unwrap(), (r(2), r(4)));
        assert!(LieType::C.preset(&r(0)).is_err());
        assert_eq!("2A-even".parse::<LieType>().unwrap(), LieType::A2Even);
    }

    #[test]
    fn classical_limit_small() {
        let pr = sym();
        for n in 1..=3 {
            let t = phi_via_recurrence(&pr, n).unwrap();
            assert!(classical_limit_failures(&t).unwrap().is_empty());
        }
    }
}
