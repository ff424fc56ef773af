use crate::error::{dim_err, Error, Result};
use crate::kernel::{vector, Field, Matrix, Scalar, Tensor};
use crate::report::{Report, Tally};

/// Finite-dimensional unital algebra: `e_i e_j = Σ_k mult[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    basis: Vec<String>,
    mult: Tensor,
    unit: Vec<Scalar>,
}

pub(crate) fn default_basis(prefix: &str, d: usize) -> Vec<String> {
    (0..d).map(|i| format!("{prefix}{i}")).collect()
}

pub(crate) fn check_shape(t: &Tensor, shape: &[usize], what: &str) -> Result<()> {
    if t.shape() != shape {
        return Err(dim_err(format!("{what} has shape {:?}, expected {:?}", t.shape(), shape)));
    }
    Ok(())
}

impl Algebra {
    /// Validates shapes and the algebra axioms.
    pub fn new(basis: Vec<String>, mult: Tensor, unit: Vec<Scalar>) -> Result<Algebra> {
        let a = Algebra::new_unchecked(basis, mult, unit)?;
        let r = check_algebra(&a);
        if let Some(f) = r.first_failure() {
            return Err(Error::AxiomViolation { what: "algebra".into(), detail: f.detail.clone() });
        }
        Ok(a)
    }

    /// Validates shapes only.
    pub fn new_unchecked(basis: Vec<String>, mult: Tensor, unit: Vec<Scalar>) -> Result<Algebra> {
        let d = basis.len();
        check_shape(&mult, &[d, d, d], "multiplication")?;
        if unit.len() != d {
            return Err(dim_err("unit length differs from the dimension"));
        }
        Ok(Algebra { basis, mult, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        let mut m = Tensor::zeros(field, &[1, 1, 1]);
        m.set(&[0, 0, 0], field.one());
        Algebra { basis: vec!["1".into()], mult: m, unit: vec![field.one()] }
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mult(&self) -> &Tensor {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field().unit_vector(self.dim(), i)
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.mult.slice(&[i, j])
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.field().zeros(self.dim());
        for (i, a) in vector::nonzero(x) {
            for (j, b) in vector::nonzero(y) {
                vector::axpy(&mut out, &(a * b), self.mul_basis(i, j));
            }
        }
        out
    }

    /// The multiplication as a map `A ⊗ A → A`.
    pub fn mult_map(&self) -> Matrix {
        self.mult.to_map_from_legs(2)
    }

    pub fn opposite(&self) -> Algebra {
        Algebra {
            basis: self.basis.clone(),
            mult: self.mult.permute(&[1, 0, 2]),
            unit: self.unit.clone(),
        }
    }

    /// `A ⊗ B` with `(a⊗b)(a'⊗b') = aa'⊗bb'`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (m, n) = (self.dim(), other.dim());
        let field = self.field();
        let mut t = Tensor::zeros(field, &[m * n, m * n, m * n]);
        for i in 0..m {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..n {
                        let prod = vector::kron(self.mul_basis(i, k), other.mul_basis(j, l));
                        for (o, c) in vector::nonzero(&prod) {
                            t.set(&[i * n + j, k * n + l, o], c.clone());
                        }
                    }
                }
            }
        }
        let basis = tensor_names(&self.basis, &other.basis);
        Algebra { basis, mult: t, unit: vector::kron(&self.unit, &other.unit) }
    }

    /// Algebra with the same constants and new basis names.
    pub fn renamed(&self, basis: Vec<String>) -> Algebra {
        assert_eq!(basis.len(), self.dim(), "basis name count");
        Algebra { basis, ..self.clone() }
    }
}

pub(crate) fn tensor_names(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(format!("{x}⊗{y}"));
        }
    }
    out
}

/// Associativity at every basis triple and both unit laws at every basis
/// element.
pub fn check_algebra(a: &Algebra) -> Report {
    let d = a.dim();
    let mut assoc = Tally::new("associativity", "(e_i e_j) e_k = e_i (e_j e_k)");
    for i in 0..d {
        for j in 0..d {
            let ij = a.mul_basis(i, j).to_vec();
            for k in 0..d {
                let lhs = a.mul(&ij, &a.basis_vector(k));
                let rhs = a.mul(&a.basis_vector(i), a.mul_basis(j, k));
                assoc.compare(&[i, j, k], &lhs, &rhs);
            }
        }
    }
    let mut left = Tally::new("left_unit", "1 e_i = e_i");
    let mut right = Tally::new("right_unit", "e_i 1 = e_i");
    for i in 0..d {
        let e = a.basis_vector(i);
        left.compare(&[i], &a.mul(a.unit(), &e), &e);
        right.compare(&[i], &a.mul(&e, a.unit()), &e);
    }
    Report::from_checks([assoc.finish(), left.finish(), right.finish()])
}
