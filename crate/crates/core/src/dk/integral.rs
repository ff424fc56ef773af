use super::DkDatum;
use crate::actions::{bilinear, LeftComoduleAlgebra, RightModuleCoalgebra};
use crate::error::{dim_err, Error, Result};
use crate::kernel::{kernel_basis, solve_linear, vector, Matrix, Scalar, Tensor};
use crate::report::{Check, Report, Tally};
use crate::structures::{Algebra, Coalgebra, HopfAlgebra};

/// `γ: C → Hom(C, A)` stored as `(c, c, a)`:
/// `γ(e_i)(e_j) = Σ_k gamma[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DkIntegral {
    pub gamma: Tensor,
    pub total: bool,
}

/// `γ(c)(d)`.
pub fn gamma_eval(gamma: &Tensor, c: &[Scalar], d: &[Scalar]) -> Vec<Scalar> {
    bilinear(gamma, c, d)
}

fn gamma_shape(datum: &DkDatum, gamma: &Tensor) -> Result<()> {
    let want = [datum.c_dim(), datum.c_dim(), datum.a_dim()];
    if gamma.shape() != want {
        return Err(dim_err(format!("γ has shape {:?}, expected {:?}", gamma.shape(), want)));
    }
    Ok(())
}

/// Checks `Σ c₁ ⊗ γ(c₂)(d) = Σ d₂·γ(c)(d₁)₋₁ ⊗ γ(c)(d₁)₀` (id `integral`)
/// and `Σ γ(c₁)(c₂) = ε(c)1` (id `total`) by direct substitution at every
/// basis pair.
pub fn verify_integral(datum: &DkDatum, gamma: &Tensor) -> Result<Report> {
    gamma_shape(datum, gamma)?;
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let coal = &datum.coalgebra.coalgebra;
    let mut ti1 = Tally::new("integral", "Σ c₁⊗γ(c₂)(d) = Σ d₂·γ(c)(d₁)₋₁ ⊗ γ(c)(d₁)₀");
    for i in 0..cd {
        for j in 0..cd {
            let mut lhs = field.zeros(cd * ad);
            for (p, q, x) in coal.terms(i) {
                vector::add_kron(&mut lhs, x, &coal.basis_vector(p), gamma.slice(&[q, j]));
            }
            let mut rhs = field.zeros(cd * ad);
            for (r, s, y) in coal.terms(j) {
                let v = gamma.slice(&[i, r]);
                let rho = datum.algebra.coact(v);
                for (t, k, z) in vector::nonzero_pairs(&rho, ad) {
                    let ds = datum.coalgebra.act_basis(s, t);
                    vector::add_kron(&mut rhs, &(y * z), ds, &field.unit_vector(ad, k));
                }
            }
            ti1.compare(&[i, j], &lhs, &rhs);
        }
    }
    let mut ti2 = Tally::new("total", "Σ γ(c₁)(c₂) = ε(c)1");
    let unit = datum.algebra.algebra.unit();
    for i in 0..cd {
        let mut lhs = field.zeros(ad);
        for (p, q, x) in coal.terms(i) {
            vector::axpy(&mut lhs, x, gamma.slice(&[p, q]));
        }
        ti2.compare(&[i], &lhs, &vector::scale(unit, &coal.counit()[i]));
    }
    Ok(Report::from_checks([ti1.finish(), ti2.finish()]))
}

/// The linear system of the integral identity and the affine system of the
/// normalization, in the unknown ordering `(i·dim C + j)·dim A + k`.
/// Returns `(ti1, ti2, ti2_rhs)`.
pub fn integral_system(datum: &DkDatum) -> (Matrix, Matrix, Vec<Scalar>) {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let coal = &datum.coalgebra.coalgebra;
    let unk = |i: usize, j: usize, k: usize| (i * cd + j) * ad + k;
    let row = |i: usize, j: usize, o: usize, k: usize| ((i * cd + j) * cd + o) * ad + k;
    let n = cd * cd * ad;
    let mut ti1 = Matrix::zeros(field, cd * cd * cd * ad, n);
    for i in 0..cd {
        for j in 0..cd {
            for (p, q, x) in coal.terms(i) {
                for k in 0..ad {
                    ti1.add_at(row(i, j, p, k), unk(q, j, k), x);
                }
            }
            for (r, s, y) in coal.terms(j) {
                for l in 0..ad {
                    for (t, k, z) in vector::nonzero_pairs(datum.algebra.coact_basis(l), ad) {
                        for (o, w) in vector::nonzero(datum.coalgebra.act_basis(s, t)) {
                            ti1.add_at(row(i, j, o, k), unk(i, r, l), &-(y * z * w));
                        }
                    }
                }
            }
        }
    }
    let mut ti2 = Matrix::zeros(field, cd * ad, n);
    let mut rhs = field.zeros(cd * ad);
    let unit = datum.algebra.algebra.unit();
    for i in 0..cd {
        for (p, q, x) in coal.terms(i) {
            for k in 0..ad {
                ti2.add_at(i * ad + k, unk(p, q, k), x);
            }
        }
        for k in 0..ad {
            rhs[i * ad + k] = &coal.counit()[i] * &unit[k];
        }
    }
    (ti1, ti2, rhs)
}

#[derive(Clone, Debug)]
pub struct IntegralSolution {
    pub integral: Option<DkIntegral>,
    /// Dimension of the solution space (affine when totality is required).
    pub solution_dim: usize,
    /// Feasibility plus the independent re-verification of the returned γ.
    pub report: Report,
}

/// Decides existence of an integral (total when `require_total`) and
/// returns one. Without totality the zero map always qualifies, so a total
/// solution is preferred, then a nonzero one.
pub fn solve_integral(datum: &DkDatum, require_total: bool) -> IntegralSolution {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let n = cd * cd * ad;
    let (ti1, ti2, rhs2) = integral_system(datum);
    let stacked = ti1.vstack(&ti2).expect("same unknowns");
    let mut rhs = field.zeros(ti1.rows());
    rhs.extend(rhs2);
    let total = solve_linear(&stacked, &Matrix::column_vector(field, rhs)).expect("shapes agree");
    let law = "the integral and total systems are consistent";
    let mut report = Report::new();
    let (gamma, solution_dim) = if let Some(x) = total {
        report.push(Check::pass("total_integral_exists", law, ""));
        (Some(x.column(0)), n - stacked.rank())
    } else if require_total {
        report.push(Check::fail(
            "total_integral_exists",
            law,
            crate::report::Witness::counts(stacked.rank(), n),
            "inconsistent system: no total integral",
        ));
        (None, 0)
    } else {
        let kb = kernel_basis(&ti1);
        let g = if kb.cols() > 0 { kb.column(0) } else { field.zeros(n) };
        (Some(g), kb.cols())
    };
    report.set_meta("solution_dim", solution_dim);
    let integral = gamma.map(|g| {
        let t = Tensor::from_vec(field, &[cd, cd, ad], g).expect("length agrees");
        let v = verify_integral(datum, &t).expect("shape agrees");
        let total = v.passed_check("total");
        report.set_meta("total", total);
        for c in v.checks {
            if require_total || c.id != "total" {
                report.push(c);
            }
        }
        DkIntegral { gamma: t, total }
    });
    IntegralSolution { integral, solution_dim, report }
}

/// The datum `(k, k, C)`: trivial Hopf algebra and algebra.
pub fn coalgebra_datum(c: &Coalgebra) -> DkDatum {
    let field = c.field();
    let h = HopfAlgebra::ground(field);
    let a = LeftComoduleAlgebra::trivial(&h, Algebra::ground(field));
    let cm = RightModuleCoalgebra::trivial(&h, c.clone());
    DkDatum::new_unchecked(h, a, cm).expect("shapes agree")
}

/// An integral `γ: C → C*` of a coalgebra, as a `(c, c)` tensor
/// `γ(e_i)(e_j) = gamma[i][j]`; `None` when none exists.
pub fn coalgebra_integral(c: &Coalgebra, require_total: bool) -> Option<Tensor> {
    let d = c.dim();
    let sol = solve_integral(&coalgebra_datum(c), require_total);
    let g = sol.integral?;
    if require_total && !g.total {
        return None;
    }
    Some(Tensor::from_vec(c.field(), &[d, d], g.gamma.entries().to_vec()).expect("length agrees"))
}

fn require_regular(datum: &DkDatum) -> Result<()> {
    let h = &datum.hopf;
    if datum.coalgebra.coalgebra != *h.coalgebra() || datum.coalgebra.action != *h.algebra().mult() {
        return Err(Error::Precondition("C must be H acting on itself by multiplication".into()));
    }
    Ok(())
}

/// `φ(h) = γ(h)(1_H)` for a datum with `C = H`.
pub fn phi_from_gamma(datum: &DkDatum, gamma: &Tensor) -> Result<Matrix> {
    require_regular(datum)?;
    gamma_shape(datum, gamma)?;
    let h = &datum.hopf;
    let cols: Vec<Vec<Scalar>> =
        (0..h.dim()).map(|i| gamma_eval(gamma, &h.basis_vector(i), h.unit())).collect();
    Ok(Matrix::from_columns(datum.field(), datum.a_dim(), &cols))
}

/// `γ(h)(g) = φ(S⁻¹(g)h)` for a datum with `C = H`.
pub fn gamma_from_phi(datum: &DkDatum, phi: &Matrix) -> Result<Tensor> {
    require_regular(datum)?;
    let h = &datum.hopf;
    let (hd, ad) = (h.dim(), datum.a_dim());
    if phi.rows() != ad || phi.cols() != hd {
        return Err(dim_err("φ must be a map H → A"));
    }
    let s_inv = h.s_inv()?;
    let mut t = Tensor::zeros(datum.field(), &[hd, hd, ad]);
    for i in 0..hd {
        for j in 0..hd {
            let arg = h.mul(&s_inv.column(j), &h.basis_vector(i));
            for (k, x) in vector::nonzero(&phi.apply(&arg)) {
                t.set(&[i, j, k], x.clone());
            }
        }
    }
    Ok(t)
}

/// `ρ_A(φ(h)) = Σ h₁ ⊗ φ(h₂)` at every basis element (id `colinear`) and
/// `φ(1) = 1` (id `normalized`).
pub fn check_doi_integral(datum: &DkDatum, phi: &Matrix) -> Report {
    let h = &datum.hopf;
    let ad = datum.a_dim();
    let field = datum.field();
    let mut col = Tally::new("colinear", "ρ_A(φ(h)) = Σ h₁ ⊗ φ(h₂)");
    for i in 0..h.dim() {
        let lhs = datum.algebra.coact(&phi.column(i));
        let mut rhs = field.zeros(h.dim() * ad);
        for (p, q, x) in h.terms(i) {
            vector::add_kron(&mut rhs, x, &h.basis_vector(p), &phi.column(q));
        }
        col.compare(&[i], &lhs, &rhs);
    }
    let mut norm = Tally::new("normalized", "φ(1) = 1");
    norm.compare(&[], &phi.apply(h.unit()), datum.algebra.algebra.unit());
    Report::from_checks([col.finish(), norm.finish()])
}
