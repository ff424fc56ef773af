use super::algebra::{check_algebra, Algebra};
use super::coalgebra::{check_coalgebra, Coalgebra};
use crate::error::{dim_err, Error, Result};
use crate::kernel::{solve_linear, vector, Field, Matrix, Scalar};
use crate::report::{Report, Tally};

/// An algebra and a coalgebra on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Bialgebra> {
        let b = Bialgebra::new_unchecked(algebra, coalgebra)?;
        fail_on(check_bialgebra(&b), "bialgebra")?;
        Ok(b)
    }

    pub fn new_unchecked(algebra: Algebra, coalgebra: Coalgebra) -> Result<Bialgebra> {
        if algebra.dim() != coalgebra.dim() || algebra.field() != coalgebra.field() {
            return Err(dim_err("algebra and coalgebra live on different spaces"));
        }
        Ok(Bialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }
}

fn fail_on(r: Report, what: &str) -> Result<()> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::AxiomViolation {
            what: what.into(),
            detail: format!("{} ({}): {}", c.id, c.law, c.detail),
        }),
    }
}

/// A bialgebra with its antipode and the inverse of the antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    bialgebra: Bialgebra,
    antipode: Matrix,
    antipode_inverse: Option<Matrix>,
}

impl HopfAlgebra {
    /// Checks all axioms and computes `S⁻¹`.
    pub fn new(bialgebra: Bialgebra, antipode: Matrix) -> Result<HopfAlgebra> {
        let mut h = HopfAlgebra::new_unchecked(bialgebra, antipode)?;
        fail_on(check_bialgebra(&h.bialgebra), "bialgebra")?;
        fail_on(check_hopf(&h), "Hopf algebra")?;
        h.antipode_inverse = antipode_inverse(&h);
        Ok(h)
    }

    /// Shape checks only; `S⁻¹` is still computed when it exists.
    pub fn new_unchecked(bialgebra: Bialgebra, antipode: Matrix) -> Result<HopfAlgebra> {
        let d = bialgebra.dim();
        if antipode.rows() != d || antipode.cols() != d {
            return Err(dim_err("antipode is not a square map of the right size"));
        }
        let inv = antipode.inverse();
        Ok(HopfAlgebra { bialgebra, antipode, antipode_inverse: inv })
    }

    /// Solves for the antipode of a bialgebra.
    pub fn from_bialgebra(bialgebra: Bialgebra) -> Result<HopfAlgebra> {
        let s = solve_antipode(&bialgebra)
            .ok_or_else(|| Error::Precondition("the bialgebra has no antipode".into()))?;
        HopfAlgebra::new(bialgebra, s)
    }

    /// The ground field as a Hopf algebra.
    pub fn ground(field: Field) -> HopfAlgebra {
        let b = Bialgebra::new_unchecked(Algebra::ground(field), Coalgebra::ground(field)).unwrap();
        let id = Matrix::identity(field, 1);
        HopfAlgebra { bialgebra: b, antipode: id.clone(), antipode_inverse: Some(id) }
    }

    pub fn bialgebra(&self) -> &Bialgebra {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &Algebra {
        &self.bialgebra.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.bialgebra.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inverse.as_ref()
    }

    /// `S⁻¹`; fails for the non-bijective case, which finite dimension rules out.
    pub fn s_inv(&self) -> Result<&Matrix> {
        self.antipode_inverse
            .as_ref()
            .ok_or_else(|| Error::Precondition("antipode is not invertible".into()))
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> Field {
        self.bialgebra.field()
    }

    pub fn basis(&self) -> &[String] {
        self.algebra().basis()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra().mul(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.algebra().mul_basis(i, j)
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra().unit()
    }

    pub fn comul(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.coalgebra().comul(x)
    }

    pub fn terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.coalgebra().terms(i)
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        self.coalgebra().eps(x)
    }

    pub fn counit(&self) -> &[Scalar] {
        self.coalgebra().counit()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field().unit_vector(self.dim(), i)
    }

    /// `H^op`: opposite multiplication, same coalgebra, antipode `S⁻¹`.
    pub fn opposite(&self) -> Result<HopfAlgebra> {
        let s_inv = self.s_inv()?.clone();
        let b = Bialgebra::new_unchecked(self.algebra().opposite(), self.coalgebra().clone())?;
        Ok(HopfAlgebra {
            bialgebra: b,
            antipode: s_inv,
            antipode_inverse: Some(self.antipode.clone()),
        })
    }

    /// `H ⊗ K` with componentwise structure and antipode `S ⊗ S'`.
    pub fn tensor(&self, other: &HopfAlgebra) -> HopfAlgebra {
        let b = Bialgebra::new_unchecked(
            self.algebra().tensor(other.algebra()),
            self.coalgebra().tensor(other.coalgebra()),
        )
        .expect("tensor factors share a field");
        let s = self.antipode.kron(&other.antipode);
        let inv = match (&self.antipode_inverse, &other.antipode_inverse) {
            (Some(a), Some(b)) => Some(a.kron(b)),
            _ => None,
        };
        HopfAlgebra { bialgebra: b, antipode: s, antipode_inverse: inv }
    }
}

/// Algebra and coalgebra axioms plus multiplicativity of `Δ` and `ε`.
pub fn check_bialgebra(b: &Bialgebra) -> Report {
    let a = b.algebra();
    let c = b.coalgebra();
    let mut report = Report::new();
    report.absorb(check_algebra(a));
    report.absorb(check_coalgebra(c));
    let d = b.dim();
    let aa = a.tensor(a);
    let mut delta = Tally::new("comult_multiplicative", "Δ(e_i e_j) = Δ(e_i)Δ(e_j)");
    let mut eps = Tally::new("counit_multiplicative", "ε(e_i e_j) = ε(e_i)ε(e_j)");
    for i in 0..d {
        for j in 0..d {
            let lhs = c.comul(a.mul_basis(i, j));
            let rhs = aa.mul(c.comul_basis(i), c.comul_basis(j));
            delta.compare(&[i, j], &lhs, &rhs);
            let l = c.eps(a.mul_basis(i, j));
            let r = &c.counit()[i] * &c.counit()[j];
            eps.compare_scalar(&[i, j], &l, &r);
        }
    }
    let mut unit = Tally::new("unit_grouplike", "Δ(1) = 1⊗1, ε(1) = 1");
    let u = a.unit();
    unit.compare(&[], &c.comul(u), &vector::kron(u, u));
    unit.compare_scalar(&[], &c.eps(u), &b.field().one());
    report.push(delta.finish());
    report.push(eps.finish());
    report.push(unit.finish());
    report
}

/// Both antipode identities at every basis element, and `S∘S⁻¹ = S⁻¹∘S = Id`
/// when the inverse is stored.
pub fn check_hopf(h: &HopfAlgebra) -> Report {
    let d = h.dim();
    let field = h.field();
    let s = h.antipode();
    let mut left = Tally::new("antipode_left", "Σ S(h₁)h₂ = ε(h)1");
    let mut right = Tally::new("antipode_right", "Σ h₁S(h₂) = ε(h)1");
    for i in 0..d {
        let mut l = field.zeros(d);
        let mut r = field.zeros(d);
        for (j, k, x) in h.terms(i) {
            let sj = s.column(j);
            let sk = s.column(k);
            vector::axpy(&mut l, x, &h.mul(&sj, &h.basis_vector(k)));
            vector::axpy(&mut r, x, &h.mul(&h.basis_vector(j), &sk));
        }
        let target = vector::scale(h.unit(), &h.counit()[i]);
        left.compare(&[i], &l, &target);
        right.compare(&[i], &r, &target);
    }
    let mut report = Report::from_checks([left.finish(), right.finish()]);
    if let Some(inv) = h.antipode_inverse() {
        let mut t = Tally::new("antipode_inverse", "S∘S⁻¹ = S⁻¹∘S = Id");
        for i in 0..d {
            let e = h.basis_vector(i);
            t.compare(&[i], &s.apply(&inv.apply(&e)), &e);
            t.compare(&[i], &inv.apply(&s.apply(&e)), &e);
        }
        report.push(t.finish());
    }
    report
}

/// The convolution inverse of the identity, found as one linear system in
/// `dim²` unknowns. Returns `None` when no antipode exists.
pub fn solve_antipode(b: &Bialgebra) -> Option<Matrix> {
    let d = b.dim();
    let field = b.field();
    let a = b.algebra();
    let c = b.coalgebra();
    // unknown (j, l) at j*d + l is the coefficient of e_l in S(e_j)
    let mut sys = Matrix::zeros(field, 2 * d * d, d * d);
    let mut rhs = field.zeros(2 * d * d);
    for i in 0..d {
        for (j, k, x) in c.terms(i) {
            for l in 0..d {
                for (r, m) in vector::nonzero(a.mul_basis(l, k)) {
                    sys.add_at(i * d + r, j * d + l, &(x * m));
                }
                for (r, m) in vector::nonzero(a.mul_basis(j, l)) {
                    sys.add_at(d * d + i * d + r, k * d + l, &(x * m));
                }
            }
        }
        for r in 0..d {
            let t = &c.counit()[i] * &a.unit()[r];
            rhs[i * d + r] = t.clone();
            rhs[d * d + i * d + r] = t;
        }
    }
    let x = solve_linear(&sys, &Matrix::column_vector(field, rhs)).ok()??;
    Some(Matrix::from_fn(field, d, d, |l, j| x.get(j * d + l, 0).clone()))
}

/// Matrix inverse of the antipode.
pub fn antipode_inverse(h: &HopfAlgebra) -> Option<Matrix> {
    h.antipode().inverse()
}

/// `(f * g)(c) = Σ f(c₁) g(c₂)` for linear maps `C → A`.
pub fn convolution(f: &Matrix, g: &Matrix, c: &Coalgebra, a: &Algebra) -> Result<Matrix> {
    for m in [f, g] {
        if m.rows() != a.dim() || m.cols() != c.dim() {
            return Err(dim_err("convolution factors must be maps C → A"));
        }
    }
    let cols: Vec<Vec<Scalar>> = (0..c.dim())
        .map(|i| {
            let mut out = a.field().zeros(a.dim());
            for (j, k, x) in c.terms(i) {
                vector::axpy(&mut out, x, &a.mul(&f.column(j), &g.column(k)));
            }
            out
        })
        .collect();
    Ok(Matrix::from_columns(a.field(), a.dim(), &cols))
}

/// `η∘ε`, the unit of the convolution algebra `Hom(C, A)`.
pub fn convolution_unit(c: &Coalgebra, a: &Algebra) -> Matrix {
    Matrix::from_fn(a.field(), a.dim(), c.dim(), |i, j| &a.unit()[i] * &c.counit()[j])
}
