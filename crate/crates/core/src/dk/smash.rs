use super::DkDatum;
use crate::kernel::{vector, Matrix, Scalar, Tensor};
use crate::report::{Report, Tally};
use crate::structures::Algebra;

/// `A#C*` in the basis `e_a#f_c` (index `a·dim C + c`):
/// `(a#c*)(b#d*) = Σ a₀b # c* * (a₋₁·d*)` with `⟨h·d*, c⟩ = ⟨d*, c·h⟩`.
pub fn smash_product(datum: &DkDatum) -> Algebra {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let n = ad * cd;
    let a = &datum.algebra.algebra;
    let delta = datum.coalgebra.coalgebra.comult();
    let act = &datum.coalgebra.action;
    let mut mult = Tensor::zeros(field, &[n, n, n]);
    for ia in 0..ad {
        for (t, s, y) in vector::nonzero_pairs(datum.algebra.coact_basis(ia), ad) {
            for ic in 0..cd {
                for jd in 0..cd {
                    // a₋₁·f_d = Σ_x act[x][t][d] f_x, then f_c * f_x = Σ_k Δ[k][c][x] f_k
                    let mut dual = field.zeros(cd);
                    for x in 0..cd {
                        let w = act.get(&[x, t, jd]);
                        if w.is_zero() {
                            continue;
                        }
                        for (k, slot) in dual.iter_mut().enumerate() {
                            let z = delta.get(&[k, ic, x]);
                            if !z.is_zero() {
                                *slot += &(w * z);
                            }
                        }
                    }
                    for jb in 0..ad {
                        for (o, p) in vector::nonzero(a.mul_basis(s, jb)) {
                            for (k, q) in vector::nonzero(&dual) {
                                mult.add_to(&[ia * cd + ic, jb * cd + jd, o * cd + k], &(y * p * q));
                            }
                        }
                    }
                }
            }
        }
    }
    let basis = a
        .basis()
        .iter()
        .flat_map(|x| datum.coalgebra.coalgebra.basis().iter().map(move |c| format!("{x}#{c}*")))
        .collect();
    let unit = vector::kron(a.unit(), datum.coalgebra.coalgebra.counit());
    Algebra::new_unchecked(basis, mult, unit).expect("shapes agree")
}

/// `(f•g)(c) = Σ f(c₁)₀ g(c₂·f(c₁)₋₁)` for maps `C → A` given as
/// `dim A × dim C` matrices.
pub fn koppinen_product(datum: &DkDatum, f: &Matrix, g: &Matrix) -> Matrix {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let a = &datum.algebra.algebra;
    let cols: Vec<Vec<Scalar>> = (0..cd)
        .map(|c| {
            let mut out = field.zeros(ad);
            for (p, q, x) in datum.coalgebra.coalgebra.terms(c) {
                let fp = datum.algebra.coact(&f.column(p));
                for (t, k, y) in vector::nonzero_pairs(&fp, ad) {
                    let arg = datum.coalgebra.act_basis(q, t);
                    let gv = g.apply(arg);
                    vector::axpy(&mut out, &(x * y), &a.mul(&a.basis_vector(k), &gv));
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(field, ad, &cols)
}

/// `Hom(C, A)` with the Koppinen product in the basis of matrix units
/// `E_{a,c}` (index `a·dim C + c`).
pub fn hom_algebra(datum: &DkDatum) -> Algebra {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let n = ad * cd;
    let unitm = |i: usize| {
        let mut m = Matrix::zeros(field, ad, cd);
        m.set(i / cd, i % cd, field.one());
        m
    };
    let mut mult = Tensor::zeros(field, &[n, n, n]);
    for i in 0..n {
        let ei = unitm(i);
        for j in 0..n {
            let p = koppinen_product(datum, &ei, &unitm(j));
            for (k, x) in vector::nonzero(p.entries()) {
                mult.set(&[i, j, k], x.clone());
            }
        }
    }
    let unit = vector::kron(datum.algebra.algebra.unit(), datum.coalgebra.coalgebra.counit());
    let basis = (0..n).map(|i| format!("E{}_{}", i / cd, i % cd)).collect();
    Algebra::new_unchecked(basis, mult, unit).expect("shapes agree")
}

/// `j(c*)(c) = ⟨c*, c⟩ 1_A`.
pub fn j_map(datum: &DkDatum, cstar: &[Scalar]) -> Matrix {
    let u = datum.algebra.algebra.unit();
    Matrix::from_fn(datum.field(), datum.a_dim(), datum.c_dim(), |a, c| &u[a] * &cstar[c])
}

/// `(f·c*)(c) = Σ f(c₁)₀ ⟨c*, c₂·f(c₁)₋₁⟩`.
pub fn cstar_action_on_hom(datum: &DkDatum, f: &Matrix, cstar: &[Scalar]) -> Matrix {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let cols: Vec<Vec<Scalar>> = (0..cd)
        .map(|c| {
            let mut out = field.zeros(ad);
            for (p, q, x) in datum.coalgebra.coalgebra.terms(c) {
                let fp = datum.algebra.coact(&f.column(p));
                for (t, k, y) in vector::nonzero_pairs(&fp, ad) {
                    let w = vector::dot(cstar, datum.coalgebra.act_basis(q, t));
                    out[k] += &(x * y * &w);
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(field, ad, &cols)
}

/// The canonical `i(a#c*)(c) = ⟨c*, c⟩a` intertwines the smash and Koppinen
/// products and is bijective.
pub fn check_smash_koppinen(datum: &DkDatum) -> Report {
    let (cd, ad) = (datum.c_dim(), datum.a_dim());
    let field = datum.field();
    let n = ad * cd;
    let smash = smash_product(datum);
    // i(e_a#f_c) as a matrix C → A, flattened row-major
    let i_of = |v: &[Scalar]| -> Matrix {
        let mut m = Matrix::zeros(field, ad, cd);
        for (idx, x) in vector::nonzero(v) {
            let (a, c) = (idx / cd, idx % cd);
            let img = vector::scale(&datum.algebra.algebra.basis_vector(a), x);
            for (r, y) in vector::nonzero(&img) {
                m.add_at(r, c, y);
            }
        }
        m
    };
    let mut t = Tally::new("i_multiplicative", "i(xy) = i(x)•i(y)");
    for x in 0..n {
        let ex = field.unit_vector(n, x);
        for y in 0..n {
            let ey = field.unit_vector(n, y);
            let lhs = i_of(smash.mul_basis(x, y));
            let rhs = koppinen_product(datum, &i_of(&ex), &i_of(&ey));
            t.compare(&[x, y], lhs.entries(), rhs.entries());
        }
    }
    let mut u = Tally::new("i_unital", "i(1#ε) = η∘ε");
    let unit = i_of(smash.unit());
    let expected = j_map(datum, datum.coalgebra.coalgebra.counit());
    u.compare(&[], unit.entries(), expected.entries());
    let imat = Matrix::from_columns(
        field,
        n,
        &(0..n).map(|x| i_of(&field.unit_vector(n, x)).entries().to_vec()).collect::<Vec<_>>(),
    );
    let mut r = crate::structures::check_algebra(&smash);
    r.push(t.finish());
    r.push(u.finish());
    r.push(crate::report::Check::count("i_bijective", "rank i = dim A·dim C", imat.rank(), n));
    r
}
