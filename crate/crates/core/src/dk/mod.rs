//! Doi-Koppinen data `(H, A, C)`, their modules, smash products, integrals
//! and the maps built from an integral.
//!
//! A DK module is a right `A`-module and left `C`-comodule with
//! `ρ(ma) = Σ m₋₁·a₋₁ ⊗ m₀a₀`.

mod integral;
mod maps;
mod smash;

pub use integral::{
    check_doi_integral, coalgebra_datum, coalgebra_integral, gamma_eval, gamma_from_phi, integral_system,
    phi_from_gamma, solve_integral, verify_integral, DkIntegral, IntegralSolution,
};
pub use maps::{
    check_generator, check_lambda_naturality, check_splitting, deform_map, generator_epi,
    splitting_lambda, Generator,
};
pub use smash::{
    check_smash_koppinen, cstar_action_on_hom, hom_algebra, j_map, koppinen_product,
    smash_product,
};

use crate::actions::{
    check_comodule_algebra, check_comodule_map, check_left_comodule, check_module_coalgebra,
    check_module_map, check_right_module, ModComodule, RightModule, LeftComoduleAlgebra,
    RightModuleCoalgebra,
};
use crate::error::{Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, Tensor};
use crate::report::{Report, Tally};
use crate::structures::{check_bialgebra, check_hopf, tensor_names, HopfAlgebra};

pub type DkModule = ModComodule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DkDatum {
    pub hopf: HopfAlgebra,
    pub algebra: LeftComoduleAlgebra,
    pub coalgebra: RightModuleCoalgebra,
}

impl DkDatum {
    /// Checks every component.
    pub fn new(
        hopf: HopfAlgebra,
        algebra: LeftComoduleAlgebra,
        coalgebra: RightModuleCoalgebra,
    ) -> Result<DkDatum> {
        let d = DkDatum::new_unchecked(hopf, algebra, coalgebra)?;
        let r = d.check();
        if let Some(c) = r.first_failure() {
            return Err(Error::AxiomViolation {
                what: "Doi-Koppinen datum".into(),
                detail: format!("{} ({}): {}", c.id, c.law, c.detail),
            });
        }
        Ok(d)
    }

    pub fn new_unchecked(
        hopf: HopfAlgebra,
        algebra: LeftComoduleAlgebra,
        coalgebra: RightModuleCoalgebra,
    ) -> Result<DkDatum> {
        let h = hopf.dim();
        if algebra.coaction.shape()[1] != h || coalgebra.action.shape()[1] != h {
            return Err(crate::error::dim_err("A and C must be over the same H"));
        }
        Ok(DkDatum { hopf, algebra, coalgebra })
    }

    /// `(H, H, H)` with `ρ = Δ` and `C = H` acting on itself.
    pub fn regular(h: &HopfAlgebra) -> DkDatum {
        DkDatum {
            hopf: h.clone(),
            algebra: LeftComoduleAlgebra::regular(h),
            coalgebra: RightModuleCoalgebra::regular(h),
        }
    }

    pub fn check(&self) -> Report {
        let mut r = check_bialgebra(self.hopf.bialgebra());
        r.absorb(check_hopf(&self.hopf));
        r.absorb(check_comodule_algebra(&self.hopf, &self.algebra));
        r.absorb(check_module_coalgebra(&self.hopf, &self.coalgebra));
        r
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn a_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn c_dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn h_dim(&self) -> usize {
        self.hopf.dim()
    }

    /// `Σ x (c·h) ⊗ (m·a)` over `ρ(e_m) = Σ x c ⊗ m`, `ρ_A(e_a) = Σ y h ⊗ a`,
    /// accumulated into a `C ⊗ M` vector.
    fn twisted_coaction(&self, rho_m: &[Scalar], md: usize, j: usize, m: &DkModule) -> Vec<Scalar> {
        let cd = self.c_dim();
        let mut out = self.field().zeros(cd * md);
        for (p, q, x) in vector::nonzero_pairs(rho_m, md) {
            for (t, s, y) in vector::nonzero_pairs(self.algebra.coact_basis(j), self.a_dim()) {
                vector::add_kron(&mut out, &(x * y), self.coalgebra.act_basis(p, t), m.act_basis(q, s));
            }
        }
        out
    }

    /// `C⊗A` with the structure `(c⊗b)·'a = c⊗ba`, `ρ'(c⊗b) = Σ c₁·b₋₁ ⊗ c₂ ⊗ b₀`.
    pub fn c_tensor_a_alt(&self) -> DkModule {
        let (cd, ad, hd) = (self.c_dim(), self.a_dim(), self.h_dim());
        let field = self.field();
        let n = cd * ad;
        let a = &self.algebra.algebra;
        let mut action = Tensor::zeros(field, &[n, ad, n]);
        let mut coaction = Tensor::zeros(field, &[n, cd, n]);
        for c in 0..cd {
            for b in 0..ad {
                for j in 0..ad {
                    for (k, x) in vector::nonzero(a.mul_basis(b, j)) {
                        action.set(&[c * ad + b, j, c * ad + k], x.clone());
                    }
                }
                for (p, q, x) in self.coalgebra.coalgebra.terms(c) {
                    for (t, s, y) in vector::nonzero_pairs(self.algebra.coact_basis(b), ad) {
                        debug_assert!(t < hd);
                        for (o, z) in vector::nonzero(self.coalgebra.act_basis(p, t)) {
                            coaction.add_to(&[c * ad + b, o, q * ad + s], &(x * y * z));
                        }
                    }
                }
            }
        }
        let basis = tensor_names(self.coalgebra.coalgebra.basis(), a.basis());
        ModComodule { basis, action, coaction }
    }
}

/// Module axioms, comodule axioms, and `ρ(ma) = Σ m₋₁·a₋₁ ⊗ m₀a₀` at every
/// basis pair.
pub fn check_dk_module(datum: &DkDatum, m: &DkModule) -> Report {
    let mut r = check_right_module(&datum.algebra.algebra, &m.module());
    r.absorb(check_left_comodule(&datum.coalgebra.coalgebra, &m.comodule()));
    if !r.passed() {
        return r;
    }
    let md = m.dim();
    let mut t = Tally::new("dk_compatibility", "ρ(ma) = Σ m₋₁·a₋₁ ⊗ m₀a₀");
    for i in 0..md {
        for j in 0..datum.a_dim() {
            let lhs = m.coact(m.act_basis(i, j));
            let rhs = datum.twisted_coaction(m.coact_basis(i), md, j, m);
            t.compare(&[i, j], &lhs, &rhs);
        }
    }
    r.push(t.finish());
    r
}

/// `C ⊗ N` with `(c⊗n)·a = Σ c·a₋₁ ⊗ n·a₀` and coaction `Δ ⊗ Id`.
pub fn induce(datum: &DkDatum, n: &RightModule) -> DkModule {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let nd = n.dim();
    let field = datum.field();
    let mut action = Tensor::zeros(field, &[cd * nd, ad, cd * nd]);
    let mut coaction = Tensor::zeros(field, &[cd * nd, cd, cd * nd]);
    for c in 0..cd {
        for k in 0..nd {
            let row = c * nd + k;
            for j in 0..ad {
                for (t, s, y) in vector::nonzero_pairs(datum.algebra.coact_basis(j), ad) {
                    for (o, x) in vector::nonzero(datum.coalgebra.act_basis(c, t)) {
                        for (l, z) in vector::nonzero(n.act_basis(k, s)) {
                            action.add_to(&[row, j, o * nd + l], &(x * y * z));
                        }
                    }
                }
            }
            for (p, q, x) in datum.coalgebra.coalgebra.terms(c) {
                coaction.add_to(&[row, p, q * nd + k], x);
            }
        }
    }
    let basis = tensor_names(datum.coalgebra.coalgebra.basis(), &n.basis);
    ModComodule { basis, action, coaction }
}

/// `A ⊗ M` as a right `A`-module through the first factor: `(a⊗m)b = ab⊗m`.
pub fn a_tensor_space(datum: &DkDatum, md: usize) -> RightModule {
    let a = &datum.algebra.algebra;
    let ad = a.dim();
    let mut t = Tensor::zeros(datum.field(), &[ad * md, ad, ad * md]);
    for i in 0..ad {
        for m in 0..md {
            for j in 0..ad {
                for (k, x) in vector::nonzero(a.mul_basis(i, j)) {
                    t.set(&[i * md + m, j, k * md + m], x.clone());
                }
            }
        }
    }
    let names = crate::structures::default_basis("m", md);
    RightModule { basis: tensor_names(a.basis(), &names), action: t }
}

/// The isomorphism `u(c⊗a) = Σ c·a₋₁ ⊗ a₀` between the two structures on
/// `C⊗A` and its inverse `u⁻¹(c⊗a) = Σ c·S(a₋₁) ⊗ a₀`.
#[derive(Clone, Debug)]
pub struct UIso {
    pub u: Matrix,
    pub u_inv: Matrix,
    /// `C⊗A` with `(c⊗b)·'a = c⊗ba`.
    pub source: DkModule,
    /// `C⊗A` induced from the regular module.
    pub target: DkModule,
}

pub fn u_iso(datum: &DkDatum) -> UIso {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let n = cd * ad;
    let s = datum.hopf.antipode();
    let mut u = Matrix::zeros(field, n, n);
    let mut u_inv = Matrix::zeros(field, n, n);
    for c in 0..cd {
        for a in 0..ad {
            for (t, k, y) in vector::nonzero_pairs(datum.algebra.coact_basis(a), ad) {
                for (o, x) in vector::nonzero(datum.coalgebra.act_basis(c, t)) {
                    u.add_at(o * ad + k, c * ad + a, &(x * y));
                }
                let st = s.column(t);
                let cs = datum.coalgebra.act(&datum.field().unit_vector(cd, c), &st);
                for (o, x) in vector::nonzero(&cs) {
                    u_inv.add_at(o * ad + k, c * ad + a, &(x * y));
                }
            }
        }
    }
    UIso {
        u,
        u_inv,
        source: datum.c_tensor_a_alt(),
        target: induce(datum, &RightModule::regular(&datum.algebra.algebra)),
    }
}

/// Both composites are the identity and both maps are DK morphisms.
pub fn check_u_iso(datum: &DkDatum, iso: &UIso) -> Report {
    let mut r = Report::new();
    let id = |m: &Matrix| m.is_identity();
    let uu = &iso.u * &iso.u_inv;
    let vu = &iso.u_inv * &iso.u;
    r.push(bool_check("u_after_u_inv", "u∘u⁻¹ = Id", id(&uu)));
    r.push(bool_check("u_inv_after_u", "u⁻¹∘u = Id", id(&vu)));
    for (tag, f, s, t) in [("u", &iso.u, &iso.source, &iso.target), ("u_inv", &iso.u_inv, &iso.target, &iso.source)] {
        let mut sub = is_dk_morphism(datum, f, s, t);
        for c in &mut sub.checks {
            c.id = format!("{tag}_{}", c.id);
        }
        r.absorb(sub);
    }
    r
}

pub(crate) fn bool_check(id: &str, law: &str, ok: bool) -> crate::report::Check {
    use crate::report::{Check, Witness};
    if ok {
        Check::pass(id, law, "")
    } else {
        Check::fail(id, law, Witness { index: Vec::new(), lhs: Vec::new(), rhs: Vec::new() }, "does not hold")
    }
}

/// `f: M → N` is `A`-linear and `C`-colinear.
pub fn is_dk_morphism(datum: &DkDatum, f: &Matrix, m: &DkModule, n: &DkModule) -> Report {
    Report::from_checks([
        check_module_map("a_linear", f, &m.module(), &n.module(), datum.a_dim()),
        check_comodule_map("c_colinear", f, &m.comodule(), &n.comodule()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{Algebra, Bialgebra, Coalgebra};

    fn kc2() -> HopfAlgebra {
        let q = Field::Rationals;
        let mut m = Tensor::zeros(q, &[2, 2, 2]);
        let mut d = Tensor::zeros(q, &[2, 2, 2]);
        for i in 0..2 {
            for j in 0..2 {
                m.set(&[i, j, (i + j) % 2], q.one());
            }
            d.set(&[i, i, i], q.one());
        }
        let a = Algebra::new(vec!["1".into(), "g".into()], m, q.vector(&[1, 0])).unwrap();
        let c = Coalgebra::new(vec!["1".into(), "g".into()], d, q.vector(&[1, 1])).unwrap();
        HopfAlgebra::from_bialgebra(Bialgebra::new(a, c).unwrap()).unwrap()
    }

    #[test]
    fn regular_datum_modules() {
        let d = DkDatum::regular(&kc2());
        assert!(d.check().passed());
        let iso = u_iso(&d);
        assert!(check_dk_module(&d, &iso.source).passed());
        assert!(check_dk_module(&d, &iso.target).passed());
        assert!(check_u_iso(&d, &iso).passed());
    }
}
