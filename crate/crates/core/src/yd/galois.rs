use super::{check_yd_module, quantum_traces, verify_quantum_integral, YdDatum, YdModule};
use crate::actions::{check_comodule_map, check_module_map, ModComodule, RightModule};
use crate::error::{Error, Result};
use crate::kernel::{kernel_basis, solve_linear, vector, Matrix, Quotient, Scalar, Tensor};
use crate::report::{Check, Report, Tally, Witness};
use crate::structures::{default_basis, Algebra};

/// `B = {a | ρ̃(a) = 1⊗a}` with its inclusion into `A` (columns) and its own
/// structure constants in that basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantSubalgebra {
    pub inclusion: Matrix,
    pub algebra: Algebra,
}

impl CoinvariantSubalgebra {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    /// Coordinates of `a ∈ A` in the basis of `B`, if `a ∈ B`.
    pub fn coords(&self, a: &[Scalar]) -> Option<Vec<Scalar>> {
        coords_in(&self.inclusion, a)
    }
}

fn coords_in(basis: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let b = Matrix::column_vector(basis.field(), v.to_vec());
    solve_linear(basis, &b).ok().flatten().map(|x| x.column(0))
}

/// Kernel of `ρ − 1⊗Id` for a left coaction tensor `(m, h, m)`.
pub fn comodule_coinvariants(coaction: &Tensor, unit: &[Scalar]) -> Matrix {
    let d = coaction.shape()[0];
    let field = coaction.field();
    let rho = coaction.to_map();
    let triv = Matrix::column_vector(field, unit.to_vec()).kron(&Matrix::identity(field, d));
    kernel_basis(&rho.checked_sub(&triv).expect("shapes agree"))
}

/// `M^co(H) = {m | ρ(m) = 1⊗m}`, as columns.
pub fn m_coinvariants(datum: &YdDatum, m: &YdModule) -> Matrix {
    comodule_coinvariants(&m.coaction, datum.hopf.unit())
}

/// The quantum coinvariants; closure under multiplication and the unit are
/// verified while computing the structure constants.
pub fn coinvariants(datum: &YdDatum) -> Result<CoinvariantSubalgebra> {
    let a = &datum.algebra.algebra;
    let inclusion = comodule_coinvariants(&datum.rho_tilde_tensor(), datum.hopf.unit());
    subalgebra(a, inclusion)
}

pub(crate) fn subalgebra(a: &Algebra, inclusion: Matrix) -> Result<CoinvariantSubalgebra> {
    let field = a.field();
    let bd = inclusion.cols();
    let mut mult = Tensor::zeros(field, &[bd, bd, bd]);
    let not_closed = |what: &str| Error::AxiomViolation {
        what: "coinvariant subalgebra".into(),
        detail: what.into(),
    };
    let cols = inclusion.columns();
    for i in 0..bd {
        for j in 0..bd {
            let p = a.mul(&cols[i], &cols[j]);
            let c = coords_in(&inclusion, &p).ok_or_else(|| not_closed("not closed under multiplication"))?;
            for (k, x) in vector::nonzero(&c) {
                mult.set(&[i, j, k], x.clone());
            }
        }
    }
    let unit = coords_in(&inclusion, a.unit()).ok_or_else(|| not_closed("does not contain 1"))?;
    let algebra = Algebra::new(default_basis("b", bd), mult, unit)?;
    Ok(CoinvariantSubalgebra { inclusion, algebra })
}

/// `N ⊗_B A` as a quotient of `N ⊗ A` by `span{nb⊗a − n⊗ba}`.
#[derive(Clone, Debug)]
pub struct InducedModule {
    /// `N ⊗ A` with `(n⊗a)a' = n⊗aa'` and `ρ(n⊗a) = Σ S⁻¹(a₁)a₋₁ ⊗ n⊗a₀`.
    pub ambient: YdModule,
    pub quotient: Quotient,
    pub module: YdModule,
    /// `η_N(n) = n ⊗_B 1`.
    pub eta: Matrix,
}

fn relations_over_b(n: &RightModule, b: &CoinvariantSubalgebra, a: &Algebra) -> Matrix {
    let (nd, ad, bd) = (n.dim(), a.dim(), b.dim());
    let field = a.field();
    let mut rows = Vec::new();
    for k in 0..nd {
        for bi in 0..bd {
            let bcol = b.inclusion.column(bi);
            for j in 0..ad {
                let left = vector::kron(n.act_basis(k, bi), &a.basis_vector(j));
                let right = vector::kron(&field.unit_vector(nd, k), &a.mul(&bcol, &a.basis_vector(j)));
                let r = vector::sub(&left, &right);
                if !vector::is_zero(&r) {
                    rows.push(r);
                }
            }
        }
    }
    if rows.is_empty() {
        Matrix::zeros(field, 0, nd * ad)
    } else {
        Matrix::from_rows(field, rows).expect("rows have equal length")
    }
}

/// Pushes the structure of `m` through the projection of `q`.
fn quotient_structure(m: &ModComodule, q: &Quotient, names: Vec<String>) -> ModComodule {
    let field = m.field();
    let qd = q.dim();
    let ad = m.action.shape()[1];
    let hd = m.coaction.shape()[1];
    let mut action = Tensor::zeros(field, &[qd, ad, qd]);
    let mut coaction = Tensor::zeros(field, &[qd, hd, qd]);
    let lift_h = Matrix::identity(field, hd).kron(&q.projection);
    for l in 0..qd {
        let v = q.lift.column(l);
        for j in 0..ad {
            let w = q.projection.apply(&m.act(&v, &field.unit_vector(ad, j)));
            for (k, x) in vector::nonzero(&w) {
                action.set(&[l, j, k], x.clone());
            }
        }
        let c = lift_h.apply(&m.coact(&v));
        for (h, k, x) in vector::nonzero_pairs(&c, qd) {
            coaction.set(&[l, h, k], x.clone());
        }
    }
    ModComodule { basis: names, action, coaction }
}

/// `N ⊗_B A` for a right `B`-module `N`, with `η_N`.
pub fn induce(datum: &YdDatum, b: &CoinvariantSubalgebra, n: &RightModule) -> Result<InducedModule> {
    let a = &datum.algebra.algebra;
    let (nd, ad, hd) = (n.dim(), a.dim(), datum.h_dim());
    if n.action.shape() != [nd, b.dim(), nd] {
        return Err(crate::error::dim_err("N must be a module over B"));
    }
    let field = datum.field();
    let amb = nd * ad;
    let rt = datum.rho_tilde_tensor();
    let mut action = Tensor::zeros(field, &[amb, ad, amb]);
    let mut coaction = Tensor::zeros(field, &[amb, hd, amb]);
    for k in 0..nd {
        for x in 0..ad {
            for j in 0..ad {
                for (c, v) in vector::nonzero(a.mul_basis(x, j)) {
                    action.set(&[k * ad + x, j, k * ad + c], v.clone());
                }
            }
            for (h, s, w) in vector::nonzero_pairs(rt.slice(&[x]), ad) {
                coaction.set(&[k * ad + x, h, k * ad + s], w.clone());
            }
        }
    }
    let ambient = ModComodule {
        basis: crate::structures::tensor_names(&n.basis, a.basis()),
        action,
        coaction,
    };
    let quotient = Quotient::new(field, amb, &relations_over_b(n, b, a))?;
    let names = quotient.free_coords.iter().map(|&c| ambient.basis[c].replace('⊗', "⊗_B ")).collect();
    let module = quotient_structure(&ambient, &quotient, names);
    let cols: Vec<Vec<Scalar>> =
        (0..nd).map(|k| quotient.projection.apply(&vector::kron(&field.unit_vector(nd, k), a.unit()))).collect();
    let eta = Matrix::from_columns(field, quotient.dim(), &cols);
    Ok(InducedModule { ambient, quotient, module, eta })
}

/// The induced structure is a YD module, the projection is a morphism (so
/// the structure is well defined) and `η_N` is `B`-linear.
pub fn check_induced(datum: &YdDatum, b: &CoinvariantSubalgebra, n: &RightModule, ind: &InducedModule) -> Report {
    let mut r = check_yd_module(datum, &ind.module);
    let p = &ind.quotient.projection;
    r.push(check_module_map("projection_linear", p, &ind.ambient.module(), &ind.module.module(), datum.a_dim()));
    r.push(check_comodule_map("projection_colinear", p, &ind.ambient.comodule(), &ind.module.comodule()));
    let restricted = ind.module.module().restrict(&b.inclusion);
    r.push(check_module_map("eta_b_linear", &ind.eta, n, &restricted, b.dim()));
    r
}

/// `θ̂(n⊗a) = n·t_l(a)` on `N ⊗ A`.
fn theta_hat(b: &CoinvariantSubalgebra, n: &RightModule, t_l: &Matrix) -> Result<Matrix> {
    let (nd, ad) = (n.dim(), t_l.cols());
    let field = n.field();
    let mut out = Matrix::zeros(field, nd, nd * ad);
    for a in 0..ad {
        let c = b.coords(&t_l.column(a)).ok_or_else(|| Error::AxiomViolation {
            what: "left trace".into(),
            detail: format!("t_l(e_{a}) does not lie in B"),
        })?;
        for k in 0..nd {
            let v = n.act(&field.unit_vector(nd, k), &c);
            for (o, x) in vector::nonzero(&v) {
                out.set(o, k * ad + a, x.clone());
            }
        }
    }
    Ok(out)
}

/// `θ_N(Σ nᵢ ⊗_B aᵢ) = Σ nᵢ t_l(aᵢ)` on the quotient.
pub fn theta_map(b: &CoinvariantSubalgebra, n: &RightModule, ind: &InducedModule, t_l: &Matrix) -> Result<Matrix> {
    Ok(&theta_hat(b, n, t_l)? * &ind.quotient.lift)
}

/// `θ_N` is well defined, `θ_N∘η_N = Id`, `η_N` lands in the coinvariants
/// and `η_N∘θ_N = Id` there.
pub fn check_eta_theta(
    datum: &YdDatum,
    b: &CoinvariantSubalgebra,
    n: &RightModule,
    ind: &InducedModule,
    t_l: &Matrix,
) -> Result<Report> {
    let hat = theta_hat(b, n, t_l)?;
    let theta = &hat * &ind.quotient.lift;
    let nd = n.dim();
    let field = datum.field();
    let mut wd = Tally::new("theta_well_defined", "θ̂ = θ∘π");
    let tp = &theta * &ind.quotient.projection;
    for j in 0..hat.cols() {
        wd.compare(&[j], &hat.column(j), &tp.column(j));
    }
    let mut te = Tally::new("theta_eta", "θ_N(η_N(n)) = n");
    let mut co = Tally::new("eta_coinvariant", "ρ(η_N(n)) = 1⊗η_N(n)");
    for k in 0..nd {
        let e = ind.eta.column(k);
        te.compare(&[k], &theta.apply(&e), &field.unit_vector(nd, k));
        co.compare(&[k], &ind.module.coact(&e), &vector::kron(datum.hopf.unit(), &e));
    }
    let kb = m_coinvariants(datum, &ind.module);
    let mut et = Tally::new("eta_theta", "η_N(θ_N(x)) = x on coinvariants");
    for c in 0..kb.cols() {
        let x = kb.column(c);
        et.compare(&[c], &ind.eta.apply(&theta.apply(&x)), &x);
    }
    let mut r = Report::from_checks([wd.finish(), te.finish(), co.finish(), et.finish()]);
    r.push(Check::count("eta_rank", "rank η_N = dim N", ind.eta.rank(), nd));
    r.push(Check::count("coinvariant_dim", "dim (N⊗_B A)^co = dim N", kb.cols(), nd));
    Ok(r)
}

/// `β_M(m ⊗_B a) = ma` on `M^co ⊗_B A`.
#[derive(Clone, Debug)]
pub struct CounitBeta {
    /// `M^co(H)` as columns in `M`.
    pub coinvariants: Matrix,
    /// `M^co(H)` with the restricted `B`-action.
    pub module: RightModule,
    pub induced: InducedModule,
    pub beta: Matrix,
    beta_hat: Matrix,
}

pub fn counit_beta(datum: &YdDatum, b: &CoinvariantSubalgebra, m: &YdModule) -> Result<CounitBeta> {
    let field = datum.field();
    let ad = datum.a_dim();
    let kb = m_coinvariants(datum, m);
    let k = kb.cols();
    let bd = b.dim();
    let mut action = Tensor::zeros(field, &[k, bd, k]);
    for c in 0..k {
        for bi in 0..bd {
            let v = m.act(&kb.column(c), &b.inclusion.column(bi));
            let x = coords_in(&kb, &v).ok_or_else(|| Error::AxiomViolation {
                what: "coinvariants".into(),
                detail: "M^co is not closed under the action of B".into(),
            })?;
            for (o, y) in vector::nonzero(&x) {
                action.set(&[c, bi, o], y.clone());
            }
        }
    }
    let module = RightModule { basis: default_basis("m", k), action };
    let induced = induce(datum, b, &module)?;
    let mut beta_hat = Matrix::zeros(field, m.dim(), k * ad);
    for c in 0..k {
        for a in 0..ad {
            let v = m.act(&kb.column(c), &field.unit_vector(ad, a));
            for (o, y) in vector::nonzero(&v) {
                beta_hat.set(o, c * ad + a, y.clone());
            }
        }
    }
    let beta = &beta_hat * &induced.quotient.lift;
    Ok(CounitBeta { coinvariants: kb, module, induced, beta, beta_hat })
}

impl CounitBeta {
    /// Well defined, `A`-linear, `H`-colinear, and the rank verdicts.
    pub fn check(&self, datum: &YdDatum, m: &YdModule) -> Report {
        let mut wd = Tally::new("beta_well_defined", "β̂ = β∘π");
        let bp = &self.beta * &self.induced.quotient.projection;
        for j in 0..bp.cols() {
            wd.compare(&[j], &self.beta_hat.column(j), &bp.column(j));
        }
        let rank = self.beta.rank();
        Report::from_checks([
            wd.finish(),
            check_module_map("beta_a_linear", &self.beta, &self.induced.module.module(), &m.module(), datum.a_dim()),
            check_comodule_map("beta_colinear", &self.beta, &self.induced.module.comodule(), &m.comodule()),
            Check::count("beta_surjective", "rank β_M = dim M", rank, m.dim()),
            Check::count("beta_injective", "rank β_M = dim M^co⊗_B A", rank, self.induced.quotient.dim()),
        ])
    }
}

/// `β(a ⊗_B b) = Σ S⁻¹(b₁) b₋₁ ⊗ a b₀` on `A ⊗_B A`.
#[derive(Clone, Debug)]
pub struct CanonicalBeta {
    pub quotient: Quotient,
    pub beta: Matrix,
    /// The same formula on `A ⊗ A`.
    pub beta_hat: Matrix,
}

pub fn canonical_beta(datum: &YdDatum, b: &CoinvariantSubalgebra) -> Result<CanonicalBeta> {
    let a = &datum.algebra.algebra;
    let (ad, hd) = (a.dim(), datum.h_dim());
    let field = datum.field();
    let n = RightModule::regular(a).restrict(&b.inclusion);
    let quotient = Quotient::new(field, ad * ad, &relations_over_b(&n, b, a))?;
    let mut beta_hat = Matrix::zeros(field, hd * ad, ad * ad);
    for c in 0..ad {
        let rt = datum.rho_tilde(&a.basis_vector(c));
        for x in 0..ad {
            for (h, s, w) in vector::nonzero_pairs(&rt, ad) {
                for (o, y) in vector::nonzero(a.mul_basis(x, s)) {
                    beta_hat.add_at(h * ad + o, x * ad + c, &(w * y));
                }
            }
        }
    }
    let beta = &beta_hat * &quotient.lift;
    Ok(CanonicalBeta { quotient, beta, beta_hat })
}

/// Rank of `β` against both dimensions, with verdicts.
pub fn galois_report(datum: &YdDatum, cb: &CanonicalBeta) -> Report {
    let target = datum.h_dim() * datum.a_dim();
    let source = cb.quotient.dim();
    let rank = cb.beta.rank();
    let mut wd = Tally::new("beta_well_defined", "β̂ = β∘π");
    let bp = &cb.beta * &cb.quotient.projection;
    for j in 0..bp.cols() {
        wd.compare(&[j], &cb.beta_hat.column(j), &bp.column(j));
    }
    let mut r = Report::from_checks([wd.finish()]);
    let verdict = |id: &str, law: &str, ok: bool, detail: String| {
        if ok {
            Check::pass(id, law, detail)
        } else {
            Check::fail(id, law, Witness::counts(rank, if id == "surjective" { target } else { source }), detail)
        }
    };
    r.push(verdict(
        "surjective",
        "rank β = dim H⊗A",
        rank == target,
        if rank == target { format!("rank {rank} = {target}") } else { format!("not surjective: rank {rank} < {target}") },
    ));
    r.push(verdict(
        "injective",
        "rank β = dim A⊗_B A",
        rank == source,
        if rank == source { format!("rank {rank} = {source}") } else { format!("not injective: rank {rank} < {source}") },
    ));
    r.set_meta("rank", rank);
    r.set_meta("dim_source", source);
    r.set_meta("dim_target", target);
    r.set_meta("galois", rank == target && rank == source);
    r
}

/// Computes `B`, builds `β` and reports whether it is bijective.
pub fn is_quantum_galois(datum: &YdDatum) -> Result<Report> {
    let b = coinvariants(datum)?;
    let cb = canonical_beta(datum, &b)?;
    let mut r = galois_report(datum, &cb);
    r.set_meta("dim_b", b.dim());
    Ok(r)
}

/// Instance-level check of the induction equivalence: the hypotheses
/// (total quantum integral, surjective `β`), then `β_M` bijective for each
/// supplied YD module and `η_N` bijective for each supplied `B`-module.
pub fn affineness_check(
    datum: &YdDatum,
    gamma: &Tensor,
    yd_witnesses: &[(String, YdModule)],
    b_witnesses: &[(String, RightModule)],
) -> Result<Report> {
    let mut r = Report::new();
    let v = verify_quantum_integral(datum, gamma)?;
    let total = v.passed();
    r.push(if total {
        Check::pass("hypothesis_1", "γ is a total quantum integral", "")
    } else {
        let f = v.first_failure().cloned().expect("a failing check");
        Check::fail("hypothesis_1", "γ is a total quantum integral", f.witness.unwrap_or(Witness::counts(0, 0)), "hypothesis (1) violated: γ is not a total quantum integral")
    });
    let b = coinvariants(datum)?;
    let cb = canonical_beta(datum, &b)?;
    let target = datum.h_dim() * datum.a_dim();
    let rank = cb.beta.rank();
    r.push(if rank == target {
        Check::pass("hypothesis_2", "β is surjective", format!("rank {rank} = {target}"))
    } else {
        Check::fail(
            "hypothesis_2",
            "β is surjective",
            Witness::counts(rank, target),
            format!("hypothesis (2) violated: β not surjective (rank {rank} < {target})"),
        )
    });
    for (name, m) in yd_witnesses {
        let yd = check_yd_module(datum, m);
        if !yd.passed() {
            return Err(Error::AxiomViolation {
                what: format!("witness {name}"),
                detail: "not a Yetter-Drinfel'd module".into(),
            });
        }
        let cbm = counit_beta(datum, &b, m)?;
        let rk = cbm.beta.rank();
        let ok = rk == m.dim() && rk == cbm.induced.quotient.dim();
        let id = format!("beta_{name}");
        let law = "β_M: M^co ⊗_B A → M is bijective";
        let detail = format!("rank {rk}, dim M {}, dim M^co⊗_B A {}", m.dim(), cbm.induced.quotient.dim());
        r.push(if ok {
            Check::pass(id, law, detail)
        } else {
            Check::fail(id, law, Witness::counts(rk, m.dim()), detail)
        });
    }
    if total {
        let (t_l, _) = quantum_traces(datum, gamma)?;
        for (name, n) in b_witnesses {
            let ind = induce(datum, &b, n)?;
            let e = check_eta_theta(datum, &b, n, &ind, &t_l)?;
            let id = format!("eta_{name}");
            let law = "η_N: N → (N⊗_B A)^co is bijective";
            r.push(match e.first_failure() {
                None => Check::pass(id, law, format!("dim N = {}", n.dim())),
                Some(f) => Check::fail(id, law, f.witness.clone().unwrap_or(Witness::counts(0, 0)), format!("{}: {}", f.id, f.detail)),
            });
        }
    }
    r.set_meta(
        "scope",
        format!(
            "instance level: {} Yetter-Drinfel'd witnesses, {} B-module witnesses; no categorical claim",
            yd_witnesses.len(),
            b_witnesses.len()
        ),
    );
    Ok(r)
}
