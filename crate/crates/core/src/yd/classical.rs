//! Relative Hopf module constructions for a left comodule algebra, written
//! independently of the quantum ones so the two can be compared.

use crate::actions::{LeftComoduleAlgebra, ModComodule, RightModule};
use crate::error::Result;
use crate::kernel::{kernel_basis, vector, Matrix, Quotient};
use crate::structures::HopfAlgebra;

/// `A^{co H} = {a | ρ(a) = 1⊗a}`, as columns.
pub fn classical_coinvariants(h: &HopfAlgebra, a: &LeftComoduleAlgebra) -> Matrix {
    let (hd, ad) = (h.dim(), a.dim());
    let field = h.field();
    let mut m = Matrix::zeros(field, hd * ad, ad);
    for i in 0..ad {
        let rho = a.coact_basis(i);
        let triv = vector::kron(h.unit(), &a.algebra.basis_vector(i));
        for (k, x) in vector::nonzero(&vector::sub(rho, &triv)) {
            m.set(k, i, x.clone());
        }
    }
    kernel_basis(&m)
}

/// `can(a ⊗_B b) = Σ b₋₁ ⊗ a b₀` on `A ⊗_B A` for `B` spanned by the columns
/// of `inclusion`.
pub fn classical_can(h: &HopfAlgebra, a: &LeftComoduleAlgebra, inclusion: &Matrix) -> Result<(Quotient, Matrix)> {
    let alg = &a.algebra;
    let (hd, ad) = (h.dim(), alg.dim());
    let field = h.field();
    let mut rows = Vec::new();
    for x in 0..ad {
        for bcol in inclusion.columns() {
            let xb = alg.mul(&alg.basis_vector(x), &bcol);
            for y in 0..ad {
                let by = alg.mul(&bcol, &alg.basis_vector(y));
                let r = vector::sub(
                    &vector::kron(&xb, &alg.basis_vector(y)),
                    &vector::kron(&alg.basis_vector(x), &by),
                );
                if !vector::is_zero(&r) {
                    rows.push(r);
                }
            }
        }
    }
    let rel = if rows.is_empty() { Matrix::zeros(field, 0, ad * ad) } else { Matrix::from_rows(field, rows)? };
    let q = Quotient::new(field, ad * ad, &rel)?;
    let mut can = Matrix::zeros(field, hd * ad, ad * ad);
    for x in 0..ad {
        for y in 0..ad {
            for (p, s, c) in vector::nonzero_pairs(a.coact_basis(y), ad) {
                for (o, z) in vector::nonzero(alg.mul_basis(x, s)) {
                    can.add_at(p * ad + o, x * ad + y, &(c * z));
                }
            }
        }
    }
    Ok((q.clone(), &can * &q.lift))
}

/// `λ''(h⊗m) = Σ m₀ φ(S⁻¹(m₋₁) h)` for a total Doi integral `φ: H → A`.
pub fn classical_lambda(h: &HopfAlgebra, m: &ModComodule, phi: &Matrix) -> Result<Matrix> {
    let (hd, md) = (h.dim(), m.dim());
    let field = h.field();
    let s_inv = h.s_inv()?;
    let module = RightModule { basis: m.basis.clone(), action: m.action.clone() };
    let mut out = Matrix::zeros(field, md, hd * md);
    for x in 0..hd {
        for i in 0..md {
            for (r, s, w) in vector::nonzero_pairs(m.coact_basis(i), md) {
                let arg = h.mul(&s_inv.column(r), &h.basis_vector(x));
                let v = module.act(&field.unit_vector(md, s), &phi.apply(&arg));
                for (k, y) in vector::nonzero(&v) {
                    out.add_at(k, x * md + i, &(w * y));
                }
            }
        }
    }
    Ok(out)
}
