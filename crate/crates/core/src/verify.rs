//! Named suites of exact identity checks, each producing a [`VerifyReport`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{
    char_value, character_orthogonality, fourier, inverse_fourier, rho_star_diagonal_on_tx, rho_star_gen,
    rho_star_gen_oracle, weight_h, DualElt,
};
use crate::coxeter::{coset_rep, group_elements, permutations, SignVector, SignedPerm};
use crate::error::{Error, Result};
use crate::field::Params;
use crate::hecke::{HeckeElt, DEFAULT_SYMMETRIZER_CAP};
use crate::qgroup::{check_commutant, invariant_subspace, t_action, SparseMatrix, UqElt, UqGen};
use crate::qseries::{check_contiguous, check_difference_equation, classical_krawtchouk, q_pochhammer, QKrawParams};
use crate::scalars::{poincare_b, Rational, Scalar};
use crate::spherical::{
    build_invariant_basis, classical_limit_failures, convolution_failures, eigen_operator_failures,
    identify_krawtchouk, lemma_failures, orthogonality_hf, phi_at_top, phi_dual, phi_dual_by_symmetrization,
    phi_via_recurrence, InvariantBasis, LieType,
};
use crate::vmodule::{iota_u, product_via_hecke, Basis, ProductTable, VElt};

/// Largest rank accepted by [`run_suite`].
pub const MAX_VERIFY_RANK: usize = crate::hecke::HARD_SYMMETRIZER_CAP;

/// Rank limits for the costlier families of checks.
const GROUP_CAP: usize = 5;
const HECKE_REL_CAP: usize = 6;
const PRODUCT_CAP: usize = 4;
const HECKE_ROUTE_CAP: usize = 3;
const CHARACTER_CAP: usize = 5;
const DIAGONAL_CAP: usize = 4;
const COMMUTATOR_CAP: usize = 6;
const CENTRALIZER_CAP: usize = 4;
const SYMMETRIZE_CAP: usize = 5;
const DUAL_CAP: usize = 4;
const TRIPLE_CAP: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Coxeter,
    Hecke,
    Module,
    Characters,
    Jimbo,
    Spherical,
    Krawtchouk,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::All,
        Suite::Coxeter,
        Suite::Hecke,
        Suite::Module,
        Suite::Characters,
        Suite::Jimbo,
        Suite::Spherical,
        Suite::Krawtchouk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Coxeter => "coxeter",
            Suite::Hecke => "hecke",
            Suite::Module => "module",
            Suite::Characters => "characters",
            Suite::Jimbo => "jimbo",
            Suite::Spherical => "spherical",
            Suite::Krawtchouk => "krawtchouk",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    /// Empty on success; otherwise the first offending case.
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub n: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

struct Collector {
    checks: Vec<CheckResult>,
}

impl Collector {
    /// `f` returns `None` on success and a witness on failure.
    fn run(&mut self, id: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) {
        let (pass, witness) = match f() {
            Ok(None) => (true, String::new()),
            Ok(Some(w)) => (false, w),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(CheckResult {
            id: id.into(),
            pass,
            witness,
        });
    }
}

fn first<T: fmt::Debug>(bad: Vec<T>) -> Option<String> {
    bad.into_iter().next().map(|b| format!("{b:?}"))
}

fn fails(ok: bool, witness: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(witness())
    }
}

/// Run a suite at rank `n`. Checks whose cost grows factorially are run at
/// `min(n, cap)` for a per-family cap.
pub fn run_suite(suite: Suite, n: usize) -> Result<VerifyReport> {
    if n == 0 || n > MAX_VERIFY_RANK {
        return Err(Error::DomainError(format!(
            "rank must satisfy 1 <= n <= {MAX_VERIFY_RANK}, got {n}"
        )));
    }
    let start = Instant::now();
    let mut c = Collector { checks: Vec::new() };
    let pr = Params::<Scalar>::symbolic();
    let all = suite == Suite::All;
    if all || suite == Suite::Coxeter {
        coxeter_checks(&mut c, &pr, n);
    }
    if all || suite == Suite::Hecke {
        hecke_checks(&mut c, &pr, n);
    }
    if all || suite == Suite::Module {
        module_checks(&mut c, &pr, n);
    }
    if all || suite == Suite::Characters {
        character_checks(&mut c, &pr, n);
    }
    if all || suite == Suite::Jimbo {
        jimbo_checks(&mut c, &pr, n);
    }
    let mut basis = None;
    if all || suite == Suite::Spherical || suite == Suite::Krawtchouk {
        let m = n.min(SYMMETRIZE_CAP);
        match build_invariant_basis(&pr, m, DEFAULT_SYMMETRIZER_CAP) {
            Ok(b) => basis = Some(b),
            Err(e) => c.run("spherical.build_invariant_basis", || Err(e)),
        }
    }
    if let Some(b) = &basis {
        if all || suite == Suite::Spherical {
            spherical_checks(&mut c, &pr, n, b);
        }
        if all || suite == Suite::Krawtchouk {
            krawtchouk_checks(&mut c, &pr, n, b);
        }
    }
    let pass = c.checks.iter().all(|x| x.pass);
    Ok(VerifyReport {
        suite: suite.name().into(),
        n,
        pass,
        checks: c.checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn coxeter_checks(c: &mut Collector, pr: &Params<Scalar>, n: usize) {
    let m = n.min(GROUP_CAP);
    let elems = group_elements(m);
    c.run("coxeter.reduced_words", || {
        for w in &elems {
            let word = w.reduced_word();
            if word.len() != w.length() || SignedPerm::from_word(m, &word)? != *w {
                return Ok(Some(format!("w = {w}")));
            }
        }
        Ok(None)
    });
    c.run("coxeter.coset_representatives", || {
        let perms = permutations(m);
        for x in SignVector::all(m) {
            let d = coset_rep(x);
            let ok = d.u_x.length() == d.len_u
                && d.sigma_x.length() == d.len_sigma
                && x.to_perm().length() == d.len_x
                && d.len_x == d.len_u + d.len_sigma
                && d.u_x.compose(&d.sigma_x.inverse()) == x.to_perm()
                && perms
                    .iter()
                    .all(|s| d.u_x.multiply(s).map(|w| w.length() >= d.len_u).unwrap_or(false));
            if !ok {
                return Ok(Some(format!("x = {x}")));
            }
        }
        Ok(None)
    });
    c.run("coxeter.poincare_polynomial", || {
        let mut acc = Scalar::zero();
        for w in &elems {
            let short = w.images().iter().filter(|&&v| v < 0).count() as i32;
            acc += &(pr.p_pow(short) * pr.q_pow(w.length() as i32 - short));
        }
        Ok(fails(acc == poincare_b(pr, m), || format!("sum = {acc}")))
    });
}

/// The relations `(T_i - c)(T_i + 1) = 0`, braid relations and far
/// commutation, as matrices.
fn relation_failures(mats: &[SparseMatrix<Scalar>], pr: &Params<Scalar>, n: usize) -> Result<Option<String>> {
    let dim = 1 << n;
    let id = SparseMatrix::identity(dim);
    for i in 1..=n {
        let t = &mats[i - 1];
        let c = if i == n { pr.p() } else { pr.q() };
        let quad = t.sub(&id.scale(&c))?.mul(&t.add(&id)?)?;
        if !quad.is_zero() {
            return Ok(Some(format!("quadratic relation at i = {i}")));
        }
    }
    for i in 1..n {
        for j in i + 1..=n {
            let (a, b) = (&mats[i - 1], &mats[j - 1]);
            let ok = if j > i + 1 {
                a.commutator(b)?.is_zero()
            } else if j < n {
                a.mul(b)?.mul(a)? == b.mul(a)?.mul(b)?
            } else {
                a.mul(b)?.mul(a)?.mul(b)? == b.mul(a)?.mul(b)?.mul(a)?
            };
            if !ok {
                return Ok(Some(format!("braid relation for ({i}, {j})")));
            }
        }
    }
    Ok(None)
}

fn hecke_checks(c: &mut Collector, pr: &Params<Scalar>, n: usize) {
    let m = n.min(HECKE_REL_CAP);
    c.run("hecke.relations_under_rho", || {
        let mats = (1..=m)
            .map(|i| crate::qgroup::rho_matrix(pr, i, m, Basis::U))
            .collect::<Result<Vec<_>>>()?;
        relation_failures(&mats, pr, m)
    });
    let g = n.min(3);
    c.run("hecke.regular_relations", || {
        // left multiplication by generators on the whole algebra
        let basis: Vec<HeckeElt<Scalar>> = group_elements(g).into_iter().map(HeckeElt::basis).collect();
        for i in 1..=g {
            let c = if i == g { pr.p() } else { pr.q() };
            for b in &basis {
                let t2 = b.gen_mul_left(pr, i)?.gen_mul_left(pr, i)?;
                let expect = b
                    .gen_mul_left(pr, i)?
                    .scale(&(c.clone() - Scalar::one()))
                    .add(&b.scale(&c))?;
                if t2 != expect {
                    return Ok(Some(format!(
                        "T_{i}^2 on T_{:?}",
                        b.terms().next().map(|t| t.0.to_string())
                    )));
                }
            }
        }
        Ok(None)
    });
    c.run("hecke.index_rep_multiplicative", || {
        let elems = group_elements(g);
        for x in &elems {
            for y in elems.iter().step_by(3) {
                let (a, b) = (HeckeElt::basis(x.clone()), HeckeElt::basis(y.clone()));
                let lhs = a.multiply(&b, pr)?.index_rep(pr);
                if lhs != a.index_rep(pr) * b.index_rep(pr) {
                    return Ok(Some(format!("x = {x}, y = {y}")));
                }
            }
        }
        Ok(None)
    });
}

fn module_checks(c: &mut Collector, pr: &Params<Scalar>, n: usize) {
    let m = n.min(PRODUCT_CAP);
    let table = match ProductTable::new(m, pr) {
        Ok(t) => t,
        Err(e) => return c.run("module.product_table", || Err(e)),
    };
    let us: Vec<VElt<Scalar>> = SignVector::all(m).map(VElt::u).collect();
    c.run("module.u_is_coset_image", || {
        for x in SignVector::all(m) {
            let t = HeckeElt::basis(coset_rep(x).u_x);
            if VElt::one(m).act_hecke(&t, pr)? != VElt::u(x) {
                return Ok(Some(format!("x = {x}")));
            }
        }
        Ok(None)
    });
    let products = match us
        .iter()
        .map(|a| us.iter().map(|b| table.product(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()
    {
        Ok(p) => p,
        Err(e) => return c.run("module.products", || Err(e)),
    };
    c.run("module.commutative", || {
        for (i, row) in products.iter().enumerate() {
            for j in i + 1..row.len() {
                if row[j] != products[j][i] {
                    return Ok(Some(format!("({i}, {j})")));
                }
            }
        }
        Ok(None)
    });
    c.run("module.associative", || {
        for (i, row) in products.iter().enumerate() {
            for (j, xy) in row.iter().enumerate() {
                for (k, u) in us.iter().enumerate() {
                    let lhs = table.product(xy, u)?;
                    let rhs = table.product(&us[i], &products[j][k])?;
                    if lhs != rhs {
                        return Ok(Some(format!("({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(None)
    });
    c.run("module.unit", || {
        let one = VElt::one(m);
        Ok(fails(
            us.iter().all(|u| table.product(&one, u).ok().as_ref() == Some(u)),
            String::new,
        ))
    });
    c.run("module.form_diagonal", || {
        for (i, x) in SignVector::all(m).enumerate() {
            for (j, _) in SignVector::all(m).enumerate() {
                let b = products[i][j].tau();
                let expect = if i == j { iota_u(pr, x) } else { Scalar::zero() };
                if b != expect {
                    return Ok(Some(format!("B(u_{i}, u_{j}) = {b}")));
                }
            }
        }
        Ok(None)
    });
    let h = n.min(HECKE_ROUTE_CAP);
    c.run("module.product_matches_hecke_route", || {
        for x in SignVector::all(h) {
            for y in SignVector::all(h) {
                if VElt::u(x).product(&VElt::u(y), pr)? != product_via_hecke(x, y, pr)? {
                    return Ok(Some(format!("x = {x}, y = {y}")));
                }
            }
        }
        Ok(None)
    });
    c.run("module.type_a_invariants", || {
        let s = invariant_subspace(pr, m)?;
        Ok(fails(s.basis.len() == m + 1 && s.preserved && s.highest_weight, || {
            format!("dimension {}", s.basis.len())
        }))
    });
}

fn character_checks(c: &mut Collector, pr: &Params<Scalar>, n: usize) {
    let m = n.min(CHARACTER_CAP);
    c.run("characters.orthogonality", || {
        let f = character_orthogonality(pr, m)?;
        Ok(fails(f.is_empty(), || {
            format!("rows {:?}, columns {:?}", f.rows.first(), f.columns.first())
        }))
    });
    c.run("characters.weight_extremes", || {
        let (mp, mpi) = (-pr.p(), -pr.p_pow(-1));
        Ok(fails(
            weight_h(pr, SignVector::ones(m)) == q_pochhammer(pr, &mp, m)
                && weight_h(pr, SignVector::minus_ones(m)) == q_pochhammer(pr, &mpi, m),
            String::new,
        ))
    });
    let k = n.min(PRODUCT_CAP);
    c.run("characters.multiplicative", || {
        let table = ProductTable::new(k, pr)?;
        for x in SignVector::all(k) {
            for z in SignVector::all(k) {
                let prod = table.product(&VElt::u(x), &VElt::u(z))?;
                for y in SignVector::all(k) {
                    let lhs = crate::characters::eval_char(pr, y, &prod)?;
                    if lhs != char_value(pr, y, x) * char_value(pr, y, z) {
                        return Ok(Some(format!("y = {y}, x = {x}, z = {z}")));
                    }
                }
            }
        }
        Ok(None)
    });
    c.run("characters.fourier_round_trip", || {
        for x in SignVector::all(k) {
            let v = VElt::u(x);
            let back = fourier(pr, &inverse_fourier(pr, &v)?);
            if !back.same_vector(&v, pr) {
                return Ok(Some(format!("x = {x}")));
            }
        }
        Ok(None)
    });
    let d = n.min(DIAGONAL_CAP);
    c.run("characters.rho_star_closed_form", || {
        for y in SignVector::all(d) {
            let chi = DualElt::chi(y);
            for i in 1..=d {
                if rho_star_gen(pr, i, &chi)? != rho_star_gen_oracle(pr, i, &chi)? {
                    return Ok(Some(format!("i = {i}, y = {y}")));
                }
            }
        }
        Ok(None)
    });
    c.run("characters.rho_star_diagonal", || {
        for x in SignVector::all(d) {
            for y in SignVector::all(d) {
                rho_star_diagonal_on_tx(pr, x, y)?;
            }
        }
        Ok(None)
    });
}

fn jimbo_checks(c: &mut Collector, pr: &Params<Scalar>, n: usize) {
    let m = n.min(COMMUTATOR_CAP);
    c.run("jimbo.uq_relations", || {
        let k = t_action(pr, UqGen::K, m);
        let ki = t_action(pr, UqGen::KInv, m);
        let e = t_action(pr, UqGen::E, m);
        let f = t_action(pr, UqGen::F, m);
        let cc = pr.div(&Scalar::one(), &(pr.q_pow_half(1) - pr.q_pow_half(-1)))?;
        let qi = pr.q_pow(-1);
        let checks = [
            ("KK^-1", k.mul(&ki)? == SparseMatrix::identity(1 << m)),
            ("KE", k.mul(&e)?.same(&e.mul(&k)?.scale(&pr.q()))?),
            ("KF", k.mul(&f)?.same(&f.mul(&k)?.scale(&qi))?),
            ("EF-FE", e.commutator(&f)?.same(&k.sub(&ki)?.scale(&cc))?),
        ];
        Ok(checks.iter().find(|c| !c.1).map(|c| c.0.to_string()))
    });
    let dims = (2..=CENTRALIZER_CAP).contains(&n);
    if m >= 2 {
        c.run("jimbo.commutant", || {
            let r = check_commutant(m, false, 0)?;
            Ok(fails(r.commutators_vanish, || r.failures.join("; ")))
        });
    }
    if dims {
        c.run("jimbo.centralizer_dimensions", || {
            let r = check_commutant(n, true, 17)?;
            Ok(fails(r.passed(), || {
                format!(
                    "hecke {:?} vs {}, uq {:?} vs {}",
                    r.hecke_centralizer_dim, r.hecke_expected, r.uq_centralizer_dim, r.uq_expected
                )
            }))
        });
    }
    let s = n.min(3);
    c.run("jimbo.star_adjoint", || {
        for g in UqGen::ALL {
            let t = t_action(pr, g, s);
            if t.transpose() != UqElt::gen(g).star(pr).matrix(pr, s)? {
                return Ok(Some(format!("{g}")));
            }
        }
        Ok(None)
    });
    c.run("jimbo.t_star_intertwines_fourier", || {
        let k = n.min(DUAL_CAP);
        for g in UqGen::ALL {
            let x = UqElt::gen(g);
            let mat = t_action(pr, g, k);
            for y in SignVector::all(k) {
                let chi = DualElt::chi(y);
                let lhs = fourier(pr, &crate::qgroup::t_star(pr, &x, &chi)?);
                let b = fourier(pr, &chi).to_basis(Basis::UHat, pr);
                let rhs = VElt::from_coords(k, Basis::UHat, mat.apply(b.coords()))?;
                if !lhs.same_vector(&rhs, pr) {
                    return Ok(Some(format!("g = {g}, y = {y}")));
                }
            }
        }
        Ok(None)
    });
}

fn spherical_checks(c: &mut Collector, pr: &Params<Scalar>, n: usize, b: &InvariantBasis<Scalar>) {
    let m = b.n();
    c.run("spherical.invariance", || Ok(fails(b.all_invariant(pr)?, String::new)));
    c.run("spherical.norms", || Ok(first(b.norm_failures(pr)?)));
    c.run("spherical.representative_independence", || {
        Ok(first(b.representative_failures(pr, DEFAULT_SYMMETRIZER_CAP)?))
    });
    c.run("spherical.efk_actions", || {
        for d in 0..=m {
            for g in UqGen::ALL {
                if !b.check_efk(pr, g, d)? {
                    return Ok(Some(format!("t({g}) w_{d}")));
                }
            }
        }
        Ok(None)
    });
    c.run("spherical.y_independence", || {
        b.phi_table(pr)?;
        Ok(None)
    });
    c.run("spherical.recurrence_identity", || {
        for d in 0..=m {
            if !b.recurrence_identity_holds(pr, d, DEFAULT_SYMMETRIZER_CAP)? {
                return Ok(Some(format!("d = {d}")));
            }
        }
        Ok(None)
    });
    let k = n.min(PRODUCT_CAP);
    c.run("spherical.lemma_product", || Ok(first(lemma_failures(pr, k)?)));
    c.run("spherical.orthogonality", || {
        let r = orthogonality_hf(pr, &phi_via_recurrence(pr, m)?)?;
        Ok(fails(r.passed(), || format!("{r:?}")))
    });
    let dn = n.min(DUAL_CAP);
    let small = if dn == m {
        Some(b.clone())
    } else {
        build_invariant_basis(pr, dn, DEFAULT_SYMMETRIZER_CAP).ok()
    };
    c.run("spherical.phi_dual_matches_symmetrization", || {
        for f in 0..=dn {
            if phi_dual(pr, f, dn)? != phi_dual_by_symmetrization(pr, f, dn, DEFAULT_SYMMETRIZER_CAP)? {
                return Ok(Some(format!("f = {f}")));
            }
        }
        Ok(None)
    });
    c.run("spherical.homomorphism", || {
        let s = small
            .as_ref()
            .ok_or_else(|| Error::DomainError("basis unavailable".into()))?;
        for f in 0..=dn {
            if !s.homomorphism_holds(pr, f)? {
                return Ok(Some(format!("f = {f}")));
            }
        }
        Ok(None)
    });
    c.run("spherical.eigen_operator", || {
        Ok(first(eigen_operator_failures(pr, dn)?))
    });
    c.run("spherical.convolution", || Ok(first(convolution_failures(pr, dn)?)));
    let tn = n.min(TRIPLE_CAP);
    c.run("spherical.product_coefficients", || {
        let s = build_invariant_basis(pr, tn, DEFAULT_SYMMETRIZER_CAP)?;
        if !s.triple_symmetric()? {
            return Ok(Some("tau(w_k w_d w_l) not symmetric".into()));
        }
        let t = s.phi_table(pr)?;
        for k in 0..=tn {
            for d in 0..=tn {
                if !s.product_expansion_holds(pr, k, d)? {
                    return Ok(Some(format!("w_{k} w_{d} expansion")));
                }
                let coeffs = s.product_coeffs(pr, k, d)?;
                for f in 0..=tn {
                    let mut acc = Scalar::zero();
                    for (l, cl) in coeffs.iter().enumerate() {
                        acc += &(cl.clone() * t.get(f, l));
                    }
                    if acc != t.get(f, k).clone() * t.get(f, d) {
                        return Ok(Some(format!("linearization f = {f}, k = {k}, d = {d}")));
                    }
                }
            }
        }
        Ok(None)
    });
    c.run("spherical.preset_denominators", || {
        let t = phi_via_recurrence(pr, m)?;
        for g in LieType::ALL {
            for q0 in 2..=4 {
                let (p, q) = g.preset(&Rational::from_integer(q0.into()))?;
                if let Err(e) = t.specialize_pq(&p, &q) {
                    return Ok(Some(format!("{g} at q0 = {q0}: {e}")));
                }
            }
        }
        Ok(None)
    });
}

fn krawtchouk_checks(c: &mut Collector, pr: &Params<Scalar>, n: usize, b: &InvariantBasis<Scalar>) {
    let m = b.n();
    c.run("krawtchouk.triple_agreement", || {
        let bad: Vec<_> = identify_krawtchouk(pr, b)?
            .into_iter()
            .filter(|e| !e.agrees())
            .map(|e| (e.f, e.d))
            .collect();
        Ok(first(bad))
    });
    c.run("krawtchouk.top_value", || {
        let t = phi_via_recurrence(pr, m)?;
        Ok((0..=m)
            .find(|&f| *t.get(f, m) != phi_at_top(pr, f, m))
            .map(|f| format!("f = {f}")))
    });
    c.run("krawtchouk.difference_equation", || {
        let a = pr.p();
        for big_n in 0..=n {
            for deg in 0..=big_n {
                for x in 0..=big_n {
                    if !check_difference_equation(pr, &QKrawParams::new(deg, x, a.clone(), big_n)?)? {
                        return Ok(Some(format!("n = {deg}, x = {x}, N = {big_n}")));
                    }
                }
            }
        }
        Ok(None)
    });
    c.run("krawtchouk.contiguous_relation", || {
        let a = pr.p();
        for big_n in 1..=n {
            for deg in 0..=big_n {
                for x in 0..=big_n {
                    if deg == big_n && x == big_n {
                        continue;
                    }
                    if !check_contiguous(pr, deg, x, &a, big_n)? {
                        return Ok(Some(format!("n = {deg}, x = {x}, N = {big_n}")));
                    }
                }
            }
        }
        Ok(None)
    });
    c.run("krawtchouk.classical_limit", || {
        let t = phi_via_recurrence(pr, m)?;
        Ok(first(classical_limit_failures(&t)?))
    });
    c.run("krawtchouk.classical_oracle_symmetric", || {
        for f in 0..=m {
            for d in 0..=m {
                if classical_krawtchouk(f, d, m)? != classical_krawtchouk(d, f, m)? {
                    return Ok(Some(format!("f = {f}, d = {d}")));
                }
            }
        }
        Ok(None)
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn rejects_rank_zero() {
        assert!(run_suite(Suite::Coxeter, 0).is_err());
    }

    #[test]
    fn all_suites_pass_at_rank_two() {
        let r = run_suite(Suite::All, 2).unwrap();
        let bad: Vec<_> = r.checks.iter().filter(|c| !c.pass).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
