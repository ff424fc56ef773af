use super::{a_tensor_space, induce, is_dk_morphism, DkDatum, DkModule};
use crate::actions::{check_comodule_map, LeftComodule};
use crate::kernel::{vector, Matrix, Scalar, Tensor};
use crate::report::{Check, Report, Tally};
use crate::structures::tensor_names;

/// `ũ(n) = Σ u(n₀)₀ γ(n₋₁)(u(n₀)₋₁)` for a linear `u: N → M`.
pub fn deform_map(
    datum: &DkDatum,
    m: &DkModule,
    n: &LeftComodule,
    u: &Matrix,
    gamma: &Tensor,
) -> Matrix {
    let md = m.dim();
    let field = datum.field();
    let cols: Vec<Vec<Scalar>> = (0..n.dim())
        .map(|i| {
            let mut out = field.zeros(md);
            for (p, q, x) in vector::nonzero_pairs(n.coact_basis(i), n.dim()) {
                let v = u.column(q);
                for (r, s, w) in vector::nonzero_pairs(&m.coact(&v), md) {
                    let a = gamma.slice(&[p, r]);
                    vector::axpy(&mut out, &(x * w), &m.act(&field.unit_vector(md, s), a));
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(field, md, &cols)
}

/// `λ_M(c⊗m) = Σ m₀ γ(c)(m₋₁)`, a map `C⊗M → M`.
pub fn splitting_lambda(datum: &DkDatum, m: &DkModule, gamma: &Tensor) -> Matrix {
    let (cd, md) = (datum.c_dim(), m.dim());
    let field = datum.field();
    let mut out = Matrix::zeros(field, md, cd * md);
    for c in 0..cd {
        for i in 0..md {
            for (r, s, w) in vector::nonzero_pairs(m.coact_basis(i), md) {
                let img = m.act(&field.unit_vector(md, s), gamma.slice(&[c, r]));
                for (k, x) in vector::nonzero(&img) {
                    out.add_at(k, c * md + i, &(w * x));
                }
            }
        }
    }
    out
}

/// `C ⊗ V` with coaction `Δ ⊗ Id`.
pub(crate) fn cofree(datum: &DkDatum, names: &[String]) -> LeftComodule {
    let cd = datum.c_dim();
    let vd = names.len();
    let mut t = Tensor::zeros(datum.field(), &[cd * vd, cd, cd * vd]);
    for c in 0..cd {
        for v in 0..vd {
            for (p, q, x) in datum.coalgebra.coalgebra.terms(c) {
                t.add_to(&[c * vd + v, p, q * vd + v], x);
            }
        }
    }
    LeftComodule { basis: tensor_names(datum.coalgebra.coalgebra.basis(), names), coaction: t }
}

/// `λ∘ρ_M = Id` (id `retraction`) and colinearity of `λ: C⊗M → M`
/// (id `lambda_colinear`).
pub fn check_splitting(datum: &DkDatum, m: &DkModule, lambda: &Matrix) -> Report {
    let mut ret = Tally::new("retraction", "λ(ρ(m)) = m");
    for i in 0..m.dim() {
        let e = m.field().unit_vector(m.dim(), i);
        ret.compare(&[i], &lambda.apply(m.coact_basis(i)), &e);
    }
    let src = cofree(datum, &m.basis);
    Report::from_checks([
        ret.finish(),
        check_comodule_map("lambda_colinear", lambda, &src, &m.comodule()),
    ])
}

/// `f∘λ_M = λ_N∘(Id⊗f)` for a DK morphism `f: M → N`.
pub fn check_lambda_naturality(
    datum: &DkDatum,
    f: &Matrix,
    m: &DkModule,
    n: &DkModule,
    gamma: &Tensor,
) -> Check {
    let lm = splitting_lambda(datum, m, gamma);
    let ln = splitting_lambda(datum, n, gamma);
    let lhs = f * &lm;
    let rhs = &ln * &Matrix::identity(datum.field(), datum.c_dim()).kron(f);
    let mut t = Tally::new("lambda_natural", "f∘λ_M = λ_N∘(Id⊗f)");
    for j in 0..lhs.cols() {
        t.compare(&[j], &lhs.column(j), &rhs.column(j));
    }
    t.finish()
}

/// The split epimorphism `f: C⊗A⊗M → M` and its section `g`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub f: Matrix,
    pub g: Matrix,
    /// `C⊗A⊗M` induced from `A⊗M`, basis index `(c·dim A + a)·dim M + m`.
    pub source: DkModule,
}

/// `f(c⊗a⊗m) = Σ m₀·(γ(c·S(a₋₁))(m₋₁)·a₀)` and `g(m) = Σ m₋₁ ⊗ 1 ⊗ m₀`.
pub fn generator_epi(datum: &DkDatum, m: &DkModule, gamma: &Tensor) -> Generator {
    let (cd, ad, md) = (datum.c_dim(), datum.a_dim(), m.dim());
    let field = datum.field();
    let a = &datum.algebra.algebra;
    let s = datum.hopf.antipode();
    let n = cd * ad * md;
    let mut f = Matrix::zeros(field, md, n);
    for c in 0..cd {
        let ec = field.unit_vector(cd, c);
        for ia in 0..ad {
            for (t, k, y) in vector::nonzero_pairs(datum.algebra.coact_basis(ia), ad) {
                let cs = datum.coalgebra.act(&ec, &s.column(t));
                for im in 0..md {
                    let col = (c * ad + ia) * md + im;
                    for (r, sidx, w) in vector::nonzero_pairs(m.coact_basis(im), md) {
                        let g = gamma_at(gamma, &cs, r, ad);
                        let ga = a.mul(&g, &a.basis_vector(k));
                        let img = m.act(&field.unit_vector(md, sidx), &ga);
                        for (o, x) in vector::nonzero(&img) {
                            f.add_at(o, col, &(y * w * x));
                        }
                    }
                }
            }
        }
    }
    let mut g = Matrix::zeros(field, n, md);
    let unit = a.unit();
    for im in 0..md {
        for (r, sidx, w) in vector::nonzero_pairs(m.coact_basis(im), md) {
            for (ia, u) in vector::nonzero(unit) {
                g.add_at((r * ad + ia) * md + sidx, im, &(w * u));
            }
        }
    }
    let source = induce(datum, &a_tensor_space(datum, md));
    Generator { f, g, source }
}

/// `γ(c)(e_r)` for a vector `c`.
fn gamma_at(gamma: &Tensor, c: &[Scalar], r: usize, ad: usize) -> Vec<Scalar> {
    let mut out = gamma.field().zeros(ad);
    for (i, x) in vector::nonzero(c) {
        vector::axpy(&mut out, x, gamma.slice(&[i, r]));
    }
    out
}

/// `f` is a DK morphism, `g` is colinear, `f∘g = Id` and `rank f = dim M`.
pub fn check_generator(datum: &DkDatum, m: &DkModule, gen: &Generator) -> Report {
    let mut r = is_dk_morphism(datum, &gen.f, &gen.source, m);
    r.push(check_comodule_map("section_colinear", &gen.g, &m.comodule(), &gen.source.comodule()));
    let fg = &gen.f * &gen.g;
    let mut t = Tally::new("section", "f(g(m)) = m");
    for j in 0..m.dim() {
        t.compare(&[j], &fg.column(j), &m.field().unit_vector(m.dim(), j));
    }
    r.push(t.finish());
    r.push(Check::count("surjective", "rank f = dim M", gen.f.rank(), m.dim()));
    r
}
