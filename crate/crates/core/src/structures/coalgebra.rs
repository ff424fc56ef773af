use super::algebra::{check_shape, tensor_names, Algebra};
use crate::error::{dim_err, Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, Tensor};
use crate::report::{Report, Tally};

/// Finite-dimensional coalgebra: `Δ(e_i) = Σ comult[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    basis: Vec<String>,
    comult: Tensor,
    counit: Vec<Scalar>,
}

impl Coalgebra {
    pub fn new(basis: Vec<String>, comult: Tensor, counit: Vec<Scalar>) -> Result<Coalgebra> {
        let c = Coalgebra::new_unchecked(basis, comult, counit)?;
        let r = check_coalgebra(&c);
        if let Some(f) = r.first_failure() {
            return Err(Error::AxiomViolation { what: "coalgebra".into(), detail: f.detail.clone() });
        }
        Ok(c)
    }

    pub fn new_unchecked(basis: Vec<String>, comult: Tensor, counit: Vec<Scalar>) -> Result<Coalgebra> {
        let d = basis.len();
        check_shape(&comult, &[d, d, d], "comultiplication")?;
        if counit.len() != d {
            return Err(dim_err("counit length differs from the dimension"));
        }
        Ok(Coalgebra { basis, comult, counit })
    }

    pub fn ground(field: Field) -> Coalgebra {
        let mut t = Tensor::zeros(field, &[1, 1, 1]);
        t.set(&[0, 0, 0], field.one());
        Coalgebra { basis: vec!["1".into()], comult: t, counit: vec![field.one()] }
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn comult(&self) -> &Tensor {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field().unit_vector(self.dim(), i)
    }

    /// `Δ(e_i)` as a vector of `C ⊗ C`.
    pub fn comul_basis(&self, i: usize) -> &[Scalar] {
        self.comult.slice(&[i])
    }

    /// Nonzero terms `(j, k, c)` of `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub fn terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        vector::nonzero_pairs(self.comul_basis(i), self.dim())
    }

    pub fn comul(&self, x: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = self.field().zeros(d * d);
        for (i, a) in vector::nonzero(x) {
            vector::axpy(&mut out, a, self.comul_basis(i));
        }
        out
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        vector::dot(&self.counit, x)
    }

    pub fn comult_map(&self) -> Matrix {
        self.comult.to_map()
    }

    /// `C ⊗ D` with `Δ(c⊗d) = Σ (c₁⊗d₁) ⊗ (c₂⊗d₂)`.
    pub fn tensor(&self, other: &Coalgebra) -> Coalgebra {
        let (m, n) = (self.dim(), other.dim());
        let field = self.field();
        let mn = m * n;
        let mut t = Tensor::zeros(field, &[mn, mn, mn]);
        for i in 0..m {
            for j in 0..n {
                for (a, b, x) in self.terms(i) {
                    for (c, d, y) in other.terms(j) {
                        t.add_to(&[i * n + j, a * n + c, b * n + d], &(x * y));
                    }
                }
            }
        }
        Coalgebra {
            basis: tensor_names(&self.basis, &other.basis),
            comult: t,
            counit: vector::kron(&self.counit, &other.counit),
        }
    }

    /// The convolution algebra `C*` in the dual basis:
    /// `f_i * f_j = Σ_k Δ[k][i][j] f_k` with unit `ε`.
    pub fn dual_algebra(&self) -> Algebra {
        let d = self.dim();
        let mult = self.comult.permute(&[1, 2, 0]);
        let basis = self.basis.iter().map(|b| format!("{b}*")).collect();
        debug_assert_eq!(mult.shape(), &[d, d, d]);
        Algebra::new_unchecked(basis, mult, self.counit.clone()).expect("shapes agree")
    }

    pub fn renamed(&self, basis: Vec<String>) -> Coalgebra {
        assert_eq!(basis.len(), self.dim(), "basis name count");
        Coalgebra { basis, ..self.clone() }
    }
}

/// Coassociativity and both counit laws at every basis element.
pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let d = c.dim();
    let field = c.field();
    let mut coassoc = Tally::new("coassociativity", "(Δ⊗Id)Δ = (Id⊗Δ)Δ");
    let mut left = Tally::new("left_counit", "(ε⊗Id)Δ = Id");
    let mut right = Tally::new("right_counit", "(Id⊗ε)Δ = Id");
    for i in 0..d {
        let mut lhs = field.zeros(d * d * d);
        let mut rhs = field.zeros(d * d * d);
        let mut l = field.zeros(d);
        let mut r = field.zeros(d);
        for (j, k, x) in c.terms(i) {
            vector::add_kron(&mut lhs, x, c.comul_basis(j), &c.basis_vector(k));
            vector::add_kron(&mut rhs, x, &c.basis_vector(j), c.comul_basis(k));
            l[k] += &(x * &c.counit[j]);
            r[j] += &(x * &c.counit[k]);
        }
        coassoc.compare(&[i], &lhs, &rhs);
        let e = c.basis_vector(i);
        left.compare(&[i], &l, &e);
        right.compare(&[i], &r, &e);
    }
    Report::from_checks([coassoc.finish(), left.finish(), right.finish()])
}

/// `c* ⇀ c = Σ ⟨c*, c₂⟩ c₁`.
pub fn hit_left(cstar: &[Scalar], c: &[Scalar], coalg: &Coalgebra) -> Vec<Scalar> {
    let d = coalg.dim();
    let mut out = coalg.field().zeros(d);
    for (j, k, x) in vector::nonzero_pairs(&coalg.comul(c), d) {
        out[j] += &(x * &cstar[k]);
    }
    out
}

/// `c ↼ c* = Σ ⟨c*, c₁⟩ c₂`.
pub fn hit_right(c: &[Scalar], cstar: &[Scalar], coalg: &Coalgebra) -> Vec<Scalar> {
    let d = coalg.dim();
    let mut out = coalg.field().zeros(d);
    for (j, k, x) in vector::nonzero_pairs(&coalg.comul(c), d) {
        out[k] += &(x * &cstar[j]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_counit_fails() {
        let q = Field::Rationals;
        let mut t = Tensor::zeros(q, &[2, 2, 2]);
        t.set(&[0, 0, 0], q.one());
        t.set(&[1, 1, 1], q.one());
        let c = Coalgebra::new_unchecked(vec!["x".into(), "y".into()], t, q.zeros(2)).unwrap();
        let r = check_coalgebra(&c);
        assert!(r.passed_check("coassociativity"));
        assert!(!r.passed_check("left_counit"));
        assert!(Coalgebra::new(c.basis().to_vec(), c.comult().clone(), q.zeros(2)).is_err());
    }
}
