//! Quantum Yetter-Drinfel'd modules over an `H`-bicomodule algebra `A`.
//!
//! A YD module is a right `A`-module and left `H`-comodule with
//! `ρ(m·a) = Σ S⁻¹(a₁) m₋₁ a₋₁ ⊗ m₀·a₀`.

mod classical;
mod galois;
mod integral;

pub use classical::{classical_can, classical_coinvariants, classical_lambda};
pub use galois::{
    affineness_check, canonical_beta, check_eta_theta, check_induced, coinvariants, comodule_coinvariants,
    counit_beta, galois_report, induce, is_quantum_galois, m_coinvariants, theta_map,
    CanonicalBeta, CoinvariantSubalgebra, CounitBeta, InducedModule,
};
pub use integral::{
    check_big_lambda, check_phi_colinear, check_strong_phi, check_traces, gamma_from_strong_phi,
    gamma_theta, phi_from_gamma_q, phi_spaces, quantum_traces, solve_quantum_integral, splitting_big_lambda,
    splitting_small_lambda, verify_quantum_integral,
};

use crate::actions::{
    check_bicomodule_algebra, check_left_comodule, check_right_module, BicomoduleAlgebra,
    LeftComoduleAlgebra, ModComodule, RightModuleCoalgebra,
};
use crate::dk::{DkDatum, DkIntegral};
use crate::error::{Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, Tensor};
use crate::report::{Report, Tally};
use crate::structures::{check_bialgebra, check_hopf, tensor_names, HopfAlgebra};

pub type YdModule = ModComodule;
pub type QuantumIntegral = DkIntegral;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdDatum {
    pub hopf: HopfAlgebra,
    pub algebra: BicomoduleAlgebra,
}

impl YdDatum {
    pub fn new(hopf: HopfAlgebra, algebra: BicomoduleAlgebra) -> Result<YdDatum> {
        let d = YdDatum::new_unchecked(hopf, algebra)?;
        let r = d.check();
        if let Some(c) = r.first_failure() {
            return Err(Error::AxiomViolation {
                what: "bicomodule algebra datum".into(),
                detail: format!("{} ({}): {}", c.id, c.law, c.detail),
            });
        }
        Ok(d)
    }

    pub fn new_unchecked(hopf: HopfAlgebra, algebra: BicomoduleAlgebra) -> Result<YdDatum> {
        hopf.s_inv()?;
        let (ad, hd) = (algebra.dim(), hopf.dim());
        if algebra.left.shape() != [ad, hd, ad] || algebra.right.shape() != [ad, ad, hd] {
            return Err(crate::error::dim_err("coactions do not match H and A"));
        }
        Ok(YdDatum { hopf, algebra })
    }

    /// `H = A` with `ρ^l = ρ^r = Δ`.
    pub fn regular(h: &HopfAlgebra) -> YdDatum {
        YdDatum { hopf: h.clone(), algebra: BicomoduleAlgebra::regular(h) }
    }

    /// `H = A` with `ρ^l = Δ` and trivial `ρ^r`.
    pub fn regular_left(h: &HopfAlgebra) -> YdDatum {
        let a = LeftComoduleAlgebra::regular(h);
        YdDatum { hopf: h.clone(), algebra: BicomoduleAlgebra::trivial_right(h, &a) }
    }

    pub fn check(&self) -> Report {
        let mut r = check_bialgebra(self.hopf.bialgebra());
        r.absorb(check_hopf(&self.hopf));
        r.absorb(check_bicomodule_algebra(&self.hopf, &self.algebra));
        r
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn a_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn h_dim(&self) -> usize {
        self.hopf.dim()
    }

    pub(crate) fn s_inv(&self) -> &Matrix {
        self.hopf.s_inv().expect("checked at construction")
    }

    /// `(ρ^l ⊗ Id)ρ^r` of a vector, in `H ⊗ A ⊗ H`.
    pub fn bicoact(&self, a: &[Scalar]) -> Vec<Scalar> {
        let (hd, ad) = (self.h_dim(), self.a_dim());
        let mut out = self.field().zeros(hd * ad * hd);
        for (i, x) in vector::nonzero(a) {
            vector::axpy(&mut out, x, &self.algebra.bicoact_basis(i, hd));
        }
        out
    }

    /// Nonzero terms `(p, s, t, c)` of `Σ c h_p ⊗ a_s ⊗ h_t = (ρ^l⊗Id)ρ^r(a)`.
    pub(crate) fn bicoact_terms(&self, a: &[Scalar]) -> Vec<(usize, usize, usize, Scalar)> {
        let b = self.bicoact(a);
        vector::nonzero_triples(&b, self.a_dim(), self.h_dim())
            .map(|(p, s, t, c)| (p, s, t, c.clone()))
            .collect()
    }

    /// `S⁻¹(e_t) · x`.
    pub(crate) fn sinv_times(&self, t: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.hopf.mul(&self.s_inv().column(t), x)
    }

    /// `ρ̃(a) = Σ S⁻¹(a₁) a₋₁ ⊗ a₀` in `H ⊗ A`.
    pub fn rho_tilde(&self, a: &[Scalar]) -> Vec<Scalar> {
        let (hd, ad) = (self.h_dim(), self.a_dim());
        let mut out = self.field().zeros(hd * ad);
        for (p, s, t, c) in self.bicoact_terms(a) {
            let h = self.sinv_times(t, &self.hopf.basis_vector(p));
            vector::add_kron(&mut out, &c, &h, &self.field().unit_vector(ad, s));
        }
        out
    }

    /// `ρ̃` as an `(a, h, a)` tensor.
    pub fn rho_tilde_tensor(&self) -> Tensor {
        let (hd, ad) = (self.h_dim(), self.a_dim());
        let mut t = Tensor::zeros(self.field(), &[ad, hd, ad]);
        for i in 0..ad {
            let v = self.rho_tilde(&self.algebra.algebra.basis_vector(i));
            for (k, x) in vector::nonzero(&v) {
                t.set(&[i, k / ad, k % ad], x.clone());
            }
        }
        t
    }
}

/// Module and comodule axioms, the compatibility
/// `ρ(m·a) = Σ S⁻¹(a₁)m₋₁a₋₁ ⊗ m₀·a₀` (id `yd_compatibility`) and its
/// equivalent form `Σ m₋₁a₋₁ ⊗ m₀a₀ = Σ a₁(m·a₀)₋₁ ⊗ (m·a₀)₀`
/// (id `yd_compatibility_alt`).
pub fn check_yd_module(datum: &YdDatum, m: &YdModule) -> Report {
    let mut r = check_right_module(&datum.algebra.algebra, &m.module());
    r.absorb(check_left_comodule(datum.hopf.coalgebra(), &m.comodule()));
    if !r.passed() {
        return r;
    }
    let (hd, ad, md) = (datum.h_dim(), datum.a_dim(), m.dim());
    let field = datum.field();
    let h = &datum.hopf;
    let mut main = Tally::new("yd_compatibility", "ρ(m·a) = Σ S⁻¹(a₁)m₋₁a₋₁ ⊗ m₀·a₀");
    let mut alt = Tally::new("yd_compatibility_alt", "Σ m₋₁a₋₁ ⊗ m₀a₀ = Σ a₁(m·a₀)₋₁ ⊗ (m·a₀)₀");
    for i in 0..md {
        let rho_m: Vec<(usize, usize, Scalar)> =
            vector::nonzero_pairs(m.coact_basis(i), md).map(|(q, r, x)| (q, r, x.clone())).collect();
        for j in 0..ad {
            let ej = datum.algebra.algebra.basis_vector(j);
            let lhs = m.coact(m.act_basis(i, j));
            let mut rhs = field.zeros(hd * md);
            for (p, s, t, y) in datum.bicoact_terms(&ej) {
                for (q, rr, x) in &rho_m {
                    let hq = h.mul_basis(*q, p).to_vec();
                    let hh = datum.sinv_times(t, &hq);
                    vector::add_kron(&mut rhs, &(x * &y), &hh, m.act_basis(*rr, s));
                }
            }
            main.compare(&[i, j], &lhs, &rhs);

            let mut l2 = field.zeros(hd * md);
            for (p, s, y) in vector::nonzero_pairs(datum.algebra.left.slice(&[j]), ad) {
                for (q, rr, x) in &rho_m {
                    vector::add_kron(&mut l2, &(x * y), h.mul_basis(*q, p), m.act_basis(*rr, s));
                }
            }
            let mut r2 = field.zeros(hd * md);
            for (s, t, z) in vector::nonzero_pairs(datum.algebra.right.slice(&[j]), hd) {
                let v = m.coact(m.act_basis(i, s));
                for (a, b, w) in vector::nonzero_pairs(&v, md) {
                    vector::add_kron(&mut r2, &(z * w), h.mul_basis(t, a), &field.unit_vector(md, b));
                }
            }
            alt.compare(&[i, j], &l2, &r2);
        }
    }
    r.push(main.finish());
    r.push(alt.finish());
    r
}

/// `(A, ·, ρ̃)`.
pub fn verma(datum: &YdDatum) -> YdModule {
    ModComodule {
        basis: datum.algebra.algebra.basis().to_vec(),
        action: datum.algebra.algebra.mult().clone(),
        coaction: datum.rho_tilde_tensor(),
    }
}

/// `H ⊗ A` with `(h⊗b)·a = Σ S⁻¹(a₁) h a₋₁ ⊗ b a₀` and coaction `Δ ⊗ Id`.
pub fn h_tensor_a(datum: &YdDatum) -> YdModule {
    let (hd, ad) = (datum.h_dim(), datum.a_dim());
    let field = datum.field();
    let h = &datum.hopf;
    let a = &datum.algebra.algebra;
    let n = hd * ad;
    let mut action = Tensor::zeros(field, &[n, ad, n]);
    let mut coaction = Tensor::zeros(field, &[n, hd, n]);
    for j in 0..ad {
        let terms = datum.bicoact_terms(&a.basis_vector(j));
        for x in 0..hd {
            for b in 0..ad {
                for (p, s, t, y) in &terms {
                    let hh = datum.sinv_times(*t, h.mul_basis(x, *p));
                    let v = vector::kron(&hh, a.mul_basis(b, *s));
                    for (k, z) in vector::nonzero(&v) {
                        action.add_to(&[x * ad + b, j, k], &(y * z));
                    }
                }
            }
        }
    }
    for x in 0..hd {
        for (p, q, c) in h.terms(x) {
            for b in 0..ad {
                coaction.add_to(&[x * ad + b, p, q * ad + b], c);
            }
        }
    }
    ModComodule { basis: tensor_names(h.basis(), a.basis()), action, coaction }
}

/// The DK datum over `H ⊗ H^op` whose modules are the YD modules:
/// `A` coacted on by `a ↦ Σ (a₋₁ ⊗ S⁻¹(a₁)) ⊗ a₀` and `C = H` with
/// `g·(h⊗k) = kgh`.
pub fn embed_as_dk(datum: &YdDatum) -> Result<DkDatum> {
    let h = &datum.hopf;
    let (hd, ad) = (datum.h_dim(), datum.a_dim());
    let field = datum.field();
    let hh = h.tensor(&h.opposite()?);
    let s_inv = datum.s_inv();
    let mut rho = Tensor::zeros(field, &[ad, hd * hd, ad]);
    for i in 0..ad {
        for (p, s, t, y) in datum.bicoact_terms(&datum.algebra.algebra.basis_vector(i)) {
            for (r, w) in vector::nonzero(&s_inv.column(t)) {
                rho.add_to(&[i, p * hd + r, s], &(&y * w));
            }
        }
    }
    let mut act = Tensor::zeros(field, &[hd, hd * hd, hd]);
    for g in 0..hd {
        for x in 0..hd {
            for k in 0..hd {
                let kg = h.mul_basis(k, g).to_vec();
                let v = h.mul(&kg, &h.basis_vector(x));
                for (o, c) in vector::nonzero(&v) {
                    act.set(&[g, x * hd + k, o], c.clone());
                }
            }
        }
    }
    let algebra = LeftComoduleAlgebra::new(&hh, datum.algebra.algebra.clone(), rho)?;
    let coalgebra = RightModuleCoalgebra::new(&hh, h.coalgebra().clone(), act)?;
    DkDatum::new_unchecked(hh, algebra, coalgebra)
}
