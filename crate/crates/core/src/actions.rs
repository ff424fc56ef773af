//! Modules, comodules, comodule algebras, module coalgebras and bicomodule
//! algebras.
//!
//! Action and coaction tensors are stored input-major:
//!
//! * right action `(m, a, m)`: `e_i · a_j = Σ_k t[i][j][k] e_k`
//! * left coaction `(m, c, m)`: `ρ(e_i) = Σ t[i][j][k] c_j ⊗ e_k`
//! * right coaction `(a, a, h)`: `ρ(e_i) = Σ t[i][j][k] e_j ⊗ h_k`
//!
//! These types carry data only; every check takes the structure acted on.

use crate::error::{dim_err, Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, Tensor};
use crate::report::{Report, Tally};
use crate::structures::{check_algebra, check_coalgebra, Algebra, Coalgebra, HopfAlgebra};

/// `Σ x_i y_j t[i][j][·]`.
pub fn bilinear(t: &Tensor, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let out: usize = t.shape()[2..].iter().product();
    let mut res = t.field().zeros(out);
    for (i, a) in vector::nonzero(x) {
        for (j, b) in vector::nonzero(y) {
            vector::axpy(&mut res, &(a * b), t.slice(&[i, j]));
        }
    }
    res
}

/// `Σ x_i t[i][·]`.
pub fn linear(t: &Tensor, x: &[Scalar]) -> Vec<Scalar> {
    let out: usize = t.shape()[1..].iter().product();
    let mut res = t.field().zeros(out);
    for (i, a) in vector::nonzero(x) {
        vector::axpy(&mut res, a, t.slice(&[i]));
    }
    res
}

fn shape_is(t: &Tensor, shape: &[usize], what: &str) -> Result<()> {
    if t.shape() != shape {
        return Err(dim_err(format!("{what} has shape {:?}, expected {:?}", t.shape(), shape)));
    }
    Ok(())
}

fn axioms(r: Report, what: &str) -> Result<()> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::AxiomViolation {
            what: what.into(),
            detail: format!("{} ({}): {}", c.id, c.law, c.detail),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub basis: Vec<String>,
    pub action: Tensor,
}

impl RightModule {
    pub fn new(basis: Vec<String>, action: Tensor, over_dim: usize) -> Result<RightModule> {
        let d = basis.len();
        shape_is(&action, &[d, over_dim, d], "action")?;
        Ok(RightModule { basis, action })
    }

    /// `A` acting on itself by right multiplication.
    pub fn regular(a: &Algebra) -> RightModule {
        RightModule { basis: a.basis().to_vec(), action: a.mult().clone() }
    }

    /// Direct sum of `n` copies of the regular module.
    pub fn free(a: &Algebra, n: usize) -> RightModule {
        let d = a.dim();
        let field = a.field();
        let mut t = Tensor::zeros(field, &[n * d, d, n * d]);
        let mut basis = Vec::new();
        for c in 0..n {
            for i in 0..d {
                basis.push(format!("{}_{}", a.basis()[i], c));
                for j in 0..d {
                    for (k, x) in vector::nonzero(a.mul_basis(i, j)) {
                        t.set(&[c * d + i, j, c * d + k], x.clone());
                    }
                }
            }
        }
        RightModule { basis, action: t }
    }

    /// The field with `m · a = ε(a) m`.
    pub fn trivial(field: Field, counit: &[Scalar]) -> RightModule {
        let mut t = Tensor::zeros(field, &[1, counit.len(), 1]);
        for (j, e) in counit.iter().enumerate() {
            t.set(&[0, j, 0], e.clone());
        }
        RightModule { basis: vec!["1".into()], action: t }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.action.field()
    }

    pub fn act(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        bilinear(&self.action, m, a)
    }

    pub fn act_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.action.slice(&[i, j])
    }

    /// The matrix of `m ↦ m·a`.
    pub fn action_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|i| self.act(&self.field().unit_vector(self.dim(), i), a)).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// Restriction of scalars along an algebra map with matrix `inclusion`.
    pub fn restrict(&self, inclusion: &Matrix) -> RightModule {
        let d = self.dim();
        let b = inclusion.cols();
        let mut t = Tensor::zeros(self.field(), &[d, b, d]);
        for j in 0..b {
            let img = inclusion.column(j);
            for i in 0..d {
                let v = self.act(&self.field().unit_vector(d, i), &img);
                for (k, x) in vector::nonzero(&v) {
                    t.set(&[i, j, k], x.clone());
                }
            }
        }
        RightModule { basis: self.basis.clone(), action: t }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    pub basis: Vec<String>,
    pub coaction: Tensor,
}

impl LeftComodule {
    pub fn new(basis: Vec<String>, coaction: Tensor, over_dim: usize) -> Result<LeftComodule> {
        let d = basis.len();
        shape_is(&coaction, &[d, over_dim, d], "coaction")?;
        Ok(LeftComodule { basis, coaction })
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(c: &Coalgebra) -> LeftComodule {
        LeftComodule { basis: c.basis().to_vec(), coaction: c.comult().clone() }
    }

    /// `ρ(m) = g ⊗ m` for a fixed grouplike basis index `g`.
    pub fn trivial(field: Field, basis: Vec<String>, over_dim: usize, grouplike: &[Scalar]) -> LeftComodule {
        let d = basis.len();
        let mut t = Tensor::zeros(field, &[d, over_dim, d]);
        for i in 0..d {
            for (j, x) in vector::nonzero(grouplike) {
                t.set(&[i, j, i], x.clone());
            }
        }
        LeftComodule { basis, coaction: t }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.coaction.field()
    }

    pub fn coact(&self, m: &[Scalar]) -> Vec<Scalar> {
        linear(&self.coaction, m)
    }

    pub fn coact_basis(&self, i: usize) -> &[Scalar] {
        self.coaction.slice(&[i])
    }

    pub fn coaction_map(&self) -> Matrix {
        self.coaction.to_map()
    }
}

/// Left `H`-comodule algebra `(A, ρ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComoduleAlgebra {
    pub algebra: Algebra,
    pub coaction: Tensor,
}

impl LeftComoduleAlgebra {
    pub fn new(h: &HopfAlgebra, algebra: Algebra, coaction: Tensor) -> Result<LeftComoduleAlgebra> {
        let d = algebra.dim();
        shape_is(&coaction, &[d, h.dim(), d], "left coaction")?;
        let x = LeftComoduleAlgebra { algebra, coaction };
        axioms(check_comodule_algebra(h, &x), "comodule algebra")?;
        Ok(x)
    }

    /// `H` coacting on itself by `Δ`.
    pub fn regular(h: &HopfAlgebra) -> LeftComoduleAlgebra {
        LeftComoduleAlgebra { algebra: h.algebra().clone(), coaction: h.coalgebra().comult().clone() }
    }

    /// `ρ(a) = 1_H ⊗ a`.
    pub fn trivial(h: &HopfAlgebra, algebra: Algebra) -> LeftComoduleAlgebra {
        let c = LeftComodule::trivial(h.field(), algebra.basis().to_vec(), h.dim(), h.unit());
        LeftComoduleAlgebra { algebra, coaction: c.coaction }
    }

    pub fn comodule(&self) -> LeftComodule {
        LeftComodule { basis: self.algebra.basis().to_vec(), coaction: self.coaction.clone() }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coact(&self, a: &[Scalar]) -> Vec<Scalar> {
        linear(&self.coaction, a)
    }

    pub fn coact_basis(&self, i: usize) -> &[Scalar] {
        self.coaction.slice(&[i])
    }
}

/// Right `H`-module coalgebra `(C, ·)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModuleCoalgebra {
    pub coalgebra: Coalgebra,
    pub action: Tensor,
}

impl RightModuleCoalgebra {
    pub fn new(h: &HopfAlgebra, coalgebra: Coalgebra, action: Tensor) -> Result<RightModuleCoalgebra> {
        let d = coalgebra.dim();
        shape_is(&action, &[d, h.dim(), d], "right action")?;
        let x = RightModuleCoalgebra { coalgebra, action };
        axioms(check_module_coalgebra(h, &x), "module coalgebra")?;
        Ok(x)
    }

    /// `H` acting on itself by right multiplication.
    pub fn regular(h: &HopfAlgebra) -> RightModuleCoalgebra {
        RightModuleCoalgebra { coalgebra: h.coalgebra().clone(), action: h.algebra().mult().clone() }
    }

    /// `c · h = ε(h) c`.
    pub fn trivial(h: &HopfAlgebra, coalgebra: Coalgebra) -> RightModuleCoalgebra {
        let d = coalgebra.dim();
        let mut t = Tensor::zeros(h.field(), &[d, h.dim(), d]);
        for i in 0..d {
            for (j, e) in vector::nonzero(h.counit()) {
                t.set(&[i, j, i], e.clone());
            }
        }
        RightModuleCoalgebra { coalgebra, action: t }
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn act(&self, c: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        bilinear(&self.action, c, h)
    }

    pub fn act_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.action.slice(&[i, j])
    }

    pub fn module(&self) -> RightModule {
        RightModule { basis: self.coalgebra.basis().to_vec(), action: self.action.clone() }
    }
}

/// `H`-bicomodule algebra: commuting left and right comodule-algebra
/// structures on one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomoduleAlgebra {
    pub algebra: Algebra,
    pub left: Tensor,
    pub right: Tensor,
}

impl BicomoduleAlgebra {
    pub fn new(h: &HopfAlgebra, algebra: Algebra, left: Tensor, right: Tensor) -> Result<BicomoduleAlgebra> {
        let d = algebra.dim();
        shape_is(&left, &[d, h.dim(), d], "left coaction")?;
        shape_is(&right, &[d, d, h.dim()], "right coaction")?;
        let x = BicomoduleAlgebra { algebra, left, right };
        axioms(check_bicomodule_algebra(h, &x), "bicomodule algebra")?;
        Ok(x)
    }

    /// `H` with `ρ^l = ρ^r = Δ`.
    pub fn regular(h: &HopfAlgebra) -> BicomoduleAlgebra {
        let c = h.coalgebra().comult().clone();
        BicomoduleAlgebra { algebra: h.algebra().clone(), left: c.clone(), right: c }
    }

    /// A left comodule algebra with `ρ^r(a) = a ⊗ 1_H`.
    pub fn trivial_right(h: &HopfAlgebra, a: &LeftComoduleAlgebra) -> BicomoduleAlgebra {
        let d = a.dim();
        let mut r = Tensor::zeros(h.field(), &[d, d, h.dim()]);
        for i in 0..d {
            for (k, x) in vector::nonzero(h.unit()) {
                r.set(&[i, i, k], x.clone());
            }
        }
        BicomoduleAlgebra { algebra: a.algebra.clone(), left: a.coaction.clone(), right: r }
    }

    pub fn left_algebra(&self) -> LeftComoduleAlgebra {
        LeftComoduleAlgebra { algebra: self.algebra.clone(), coaction: self.left.clone() }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn coact_left(&self, a: &[Scalar]) -> Vec<Scalar> {
        linear(&self.left, a)
    }

    pub fn coact_right(&self, a: &[Scalar]) -> Vec<Scalar> {
        linear(&self.right, a)
    }

    /// `Σ a₋₁ ⊗ a₀ ⊗ a₁ = (ρ^l ⊗ Id)ρ^r(e_i)` in `H ⊗ A ⊗ H`.
    pub fn bicoact_basis(&self, i: usize, hdim: usize) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = self.field().zeros(hdim * d * hdim);
        for (j, k, x) in vector::nonzero_pairs(self.right.slice(&[i]), hdim) {
            vector::add_kron(&mut out, x, self.left.slice(&[j]), &self.field().unit_vector(hdim, k));
        }
        out
    }
}

/// A space that is both a right module and a left comodule; the carrier
/// of Doi-Koppinen and Yetter-Drinfel'd modules. Compatibility is checked by
/// the datum it is used with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModComodule {
    pub basis: Vec<String>,
    pub action: Tensor,
    pub coaction: Tensor,
}

impl ModComodule {
    pub fn new(basis: Vec<String>, action: Tensor, coaction: Tensor) -> Result<ModComodule> {
        let d = basis.len();
        if action.order() != 3 || coaction.order() != 3 {
            return Err(dim_err("action and coaction must be order-3 tensors"));
        }
        shape_is(&action, &[d, action.shape()[1], d], "action")?;
        shape_is(&coaction, &[d, coaction.shape()[1], d], "coaction")?;
        Ok(ModComodule { basis, action, coaction })
    }

    pub fn from_parts(m: RightModule, c: LeftComodule) -> Result<ModComodule> {
        if m.dim() != c.dim() {
            return Err(dim_err("module and comodule have different dimensions"));
        }
        Ok(ModComodule { basis: m.basis, action: m.action, coaction: c.coaction })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.action.field()
    }

    pub fn module(&self) -> RightModule {
        RightModule { basis: self.basis.clone(), action: self.action.clone() }
    }

    pub fn comodule(&self) -> LeftComodule {
        LeftComodule { basis: self.basis.clone(), coaction: self.coaction.clone() }
    }

    pub fn act(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        bilinear(&self.action, m, a)
    }

    pub fn act_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.action.slice(&[i, j])
    }

    pub fn coact(&self, m: &[Scalar]) -> Vec<Scalar> {
        linear(&self.coaction, m)
    }

    pub fn coact_basis(&self, i: usize) -> &[Scalar] {
        self.coaction.slice(&[i])
    }

    pub fn coaction_map(&self) -> Matrix {
        self.coaction.to_map()
    }
}

/// `(m·a)·b = m·(ab)` and `m·1 = m` at every basis tuple.
pub fn check_right_module(a: &Algebra, m: &RightModule) -> Report {
    let field = a.field();
    let mut r = Report::new();
    if m.action.shape() != [m.dim(), a.dim(), m.dim()] {
        r.push(crate::report::Check::count("shape", "action tensor shape", m.action.shape()[1], a.dim()));
        return r;
    }
    let mut assoc = Tally::new("module_associativity", "(m·a)·b = m·(ab)");
    let mut unit = Tally::new("module_unit", "m·1 = m");
    for i in 0..m.dim() {
        let e = field.unit_vector(m.dim(), i);
        for j in 0..a.dim() {
            let mj = m.act_basis(i, j).to_vec();
            for k in 0..a.dim() {
                let lhs = m.act(&mj, &a.basis_vector(k));
                let rhs = m.act(&e, a.mul_basis(j, k));
                assoc.compare(&[i, j, k], &lhs, &rhs);
            }
        }
        unit.compare(&[i], &m.act(&e, a.unit()), &e);
    }
    r.push(assoc.finish());
    r.push(unit.finish());
    r
}

/// `(Δ⊗Id)ρ = (Id⊗ρ)ρ` and `(ε⊗Id)ρ = Id` at every basis element.
pub fn check_left_comodule(c: &Coalgebra, m: &LeftComodule) -> Report {
    let field = c.field();
    let (cd, md) = (c.dim(), m.dim());
    let mut r = Report::new();
    if m.coaction.shape() != [md, cd, md] {
        r.push(crate::report::Check::count("shape", "coaction tensor shape", m.coaction.shape()[1], cd));
        return r;
    }
    let mut coassoc = Tally::new("comodule_coassociativity", "(Δ⊗Id)ρ = (Id⊗ρ)ρ");
    let mut counit = Tally::new("comodule_counit", "(ε⊗Id)ρ = Id");
    for i in 0..md {
        let mut lhs = field.zeros(cd * cd * md);
        let mut rhs = field.zeros(cd * cd * md);
        let mut eps = field.zeros(md);
        for (j, k, x) in vector::nonzero_pairs(m.coact_basis(i), md) {
            vector::add_kron(&mut lhs, x, c.comul_basis(j), &field.unit_vector(md, k));
            vector::add_kron(&mut rhs, x, &c.basis_vector(j), m.coact_basis(k));
            eps[k] += &(x * &c.counit()[j]);
        }
        coassoc.compare(&[i], &lhs, &rhs);
        counit.compare(&[i], &eps, &field.unit_vector(md, i));
    }
    r.push(coassoc.finish());
    r.push(counit.finish());
    r
}

/// Multiplicativity of a coaction `A → H ⊗ A` stored as `(a, h, a)` or of
/// `A → A ⊗ H` stored as `(a, a, h)`; `left` selects the layout.
fn coaction_multiplicative(
    h: &HopfAlgebra,
    a: &Algebra,
    t: &Tensor,
    left: bool,
    id: &str,
    law: &str,
) -> crate::report::Check {
    let target = if left { h.algebra().tensor(a) } else { a.tensor(h.algebra()) };
    let mut tally = Tally::new(id, law);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = linear(t, a.mul_basis(i, j));
            let rhs = target.mul(t.slice(&[i]), t.slice(&[j]));
            tally.compare(&[i, j], &lhs, &rhs);
        }
    }
    let u = a.unit();
    let uu = if left { vector::kron(h.unit(), u) } else { vector::kron(u, h.unit()) };
    tally.compare(&[], &linear(t, u), &uu);
    tally.finish()
}

/// Comodule axioms over `H` plus `ρ(ab) = ρ(a)ρ(b)` and `ρ(1) = 1⊗1`.
pub fn check_comodule_algebra(h: &HopfAlgebra, a: &LeftComoduleAlgebra) -> Report {
    let mut r = check_algebra(&a.algebra);
    r.absorb(check_left_comodule(h.coalgebra(), &a.comodule()));
    if r.passed() {
        r.push(coaction_multiplicative(
            h,
            &a.algebra,
            &a.coaction,
            true,
            "coaction_multiplicative",
            "ρ(ab) = Σ a₋₁b₋₁ ⊗ a₀b₀, ρ(1) = 1⊗1",
        ));
    }
    r
}

/// Module axioms over `H` plus `Δ(c·h) = Σ c₁h₁ ⊗ c₂h₂` and
/// `ε(c·h) = ε(c)ε(h)`.
pub fn check_module_coalgebra(h: &HopfAlgebra, c: &RightModuleCoalgebra) -> Report {
    let mut r = check_coalgebra(&c.coalgebra);
    r.absorb(check_right_module(h.algebra(), &c.module()));
    if !r.passed() {
        return r;
    }
    let cd = c.dim();
    let field = h.field();
    let mut delta = Tally::new("action_comultiplicative", "Δ(c·h) = Σ c₁·h₁ ⊗ c₂·h₂");
    let mut eps = Tally::new("action_counital", "ε(c·h) = ε(c)ε(h)");
    for i in 0..cd {
        for j in 0..h.dim() {
            let lhs = c.coalgebra.comul(c.act_basis(i, j));
            let mut rhs = field.zeros(cd * cd);
            for (p, q, x) in c.coalgebra.terms(i) {
                for (s, t, y) in h.terms(j) {
                    let l = c.act_basis(p, s);
                    let rr = c.act_basis(q, t);
                    vector::add_kron(&mut rhs, &(x * y), l, rr);
                }
            }
            delta.compare(&[i, j], &lhs, &rhs);
            let l = c.coalgebra.eps(c.act_basis(i, j));
            eps.compare_scalar(&[i, j], &l, &(&c.coalgebra.counit()[i] * &h.counit()[j]));
        }
    }
    r.push(delta.finish());
    r.push(eps.finish());
    r
}

/// Both coactions are comodule-algebra structures and they commute.
pub fn check_bicomodule_algebra(h: &HopfAlgebra, b: &BicomoduleAlgebra) -> Report {
    let mut r = check_comodule_algebra(h, &b.left_algebra());
    let (ad, hd) = (b.dim(), h.dim());
    let field = h.field();
    let mut coassoc = Tally::new("right_coassociativity", "(ρ^r⊗Id)ρ^r = (Id⊗Δ)ρ^r");
    let mut counit = Tally::new("right_counit", "(Id⊗ε)ρ^r = Id");
    for i in 0..ad {
        let mut lhs = field.zeros(ad * hd * hd);
        let mut rhs = field.zeros(ad * hd * hd);
        let mut eps = field.zeros(ad);
        for (j, k, x) in vector::nonzero_pairs(b.right.slice(&[i]), hd) {
            vector::add_kron(&mut lhs, x, b.right.slice(&[j]), &field.unit_vector(hd, k));
            vector::add_kron(&mut rhs, x, &field.unit_vector(ad, j), h.coalgebra().comul_basis(k));
            eps[j] += &(x * &h.counit()[k]);
        }
        coassoc.compare(&[i], &lhs, &rhs);
        counit.compare(&[i], &eps, &field.unit_vector(ad, i));
    }
    r.push(coassoc.finish());
    r.push(counit.finish());
    if r.passed() {
        r.push(coaction_multiplicative(
            h,
            &b.algebra,
            &b.right,
            false,
            "right_coaction_multiplicative",
            "ρ^r(ab) = Σ a₀b₀ ⊗ a₁b₁, ρ^r(1) = 1⊗1",
        ));
    }
    let mut commute = Tally::new("coactions_commute", "(ρ^l⊗Id)ρ^r = (Id⊗ρ^r)ρ^l");
    for i in 0..ad {
        let lhs = b.bicoact_basis(i, hd);
        let mut rhs = field.zeros(hd * ad * hd);
        for (j, k, x) in vector::nonzero_pairs(b.left.slice(&[i]), ad) {
            vector::add_kron(&mut rhs, x, &field.unit_vector(hd, j), b.right.slice(&[k]));
        }
        commute.compare(&[i], &lhs, &rhs);
    }
    r.push(commute.finish());
    r
}

/// `f(m·a) = f(m)·a` for every basis pair; `f` is a matrix `dst × src`.
pub fn check_module_map(
    id: &str,
    f: &Matrix,
    src: &RightModule,
    dst: &RightModule,
    over_dim: usize,
) -> crate::report::Check {
    let field = f.field();
    let mut t = Tally::new(id, "f(m·a) = f(m)·a");
    for i in 0..src.dim() {
        let fi = f.column(i);
        for j in 0..over_dim {
            let lhs = f.apply(src.act_basis(i, j));
            let rhs = dst.act(&fi, &field.unit_vector(over_dim, j));
            t.compare(&[i, j], &lhs, &rhs);
        }
    }
    t.finish()
}

/// `(Id⊗f)ρ = ρ f` at every basis element.
pub fn check_comodule_map(
    id: &str,
    f: &Matrix,
    src: &LeftComodule,
    dst: &LeftComodule,
) -> crate::report::Check {
    let mut t = Tally::new(id, "(Id⊗f)ρ(m) = ρ(f(m))");
    let cd = src.coaction.shape()[1];
    let id_c = Matrix::identity(f.field(), cd);
    let lift = id_c.kron(f);
    for i in 0..src.dim() {
        let lhs = lift.apply(src.coact_basis(i));
        let rhs = dst.coact(&f.column(i));
        t.compare(&[i], &lhs, &rhs);
    }
    t.finish()
}

/// A left `C`-comodule as a right `C*`-module: `m·c* = Σ ⟨c*, m₋₁⟩ m₀`.
/// In the dual basis the action tensor is the coaction tensor.
pub fn csstar_module(m: &LeftComodule) -> RightModule {
    RightModule { basis: m.basis.clone(), action: m.coaction.clone() }
}
