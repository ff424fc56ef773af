mod common;

use common::{all_vectors, q, random_c2_module, rng};
use hopfkit::actions::{BicomoduleAlgebra, ModComodule, RightModule};
use hopfkit::dk;
use hopfkit::gallery::{self, GroupTable};
use hopfkit::kernel::{Field, Matrix, Tensor};
use hopfkit::yd::{self, YdDatum, YdModule};

const DATA: &[&str] = &["k_trivial", "kc2_delta_delta", "kc2_delta_trivial", "h4_delta_delta", "h4_delta_trivial"];
const TOTAL: &[&str] = &["k_trivial", "kc2_delta_delta", "kc2_delta_trivial", "h4_delta_trivial"];

fn datum(name: &str) -> YdDatum {
    gallery::yd_by_name(name, q()).unwrap()
}

fn total_gamma(d: &YdDatum) -> Tensor {
    let sol = yd::solve_quantum_integral(d, true).unwrap();
    assert!(sol.report.passed(), "{}", sol.report.to_table());
    sol.integral.expect("total quantum integral").gamma
}

/// `γ_θ` from the classical integral; `θ(1) = 1` on the cosemisimple examples.
fn gamma_theta(d: &YdDatum) -> Tensor {
    let theta = gallery::classical_integral(&d.hopf).unwrap();
    yd::gamma_theta(d, &theta)
}

/// `N ⊗ V` with `(n⊗v)a = na ⊗ v` and `ρ(n⊗v) = v₋₁ ⊗ n ⊗ v₀`, for `V` the
/// `C2`-graded space `k·v₀ ⊕ k·v_g`.
fn module_times_graded_space(n: &RightModule) -> ModComodule {
    let f = n.field();
    let (nd, ad) = (n.dim(), n.action.shape()[1]);
    let d = nd * 2;
    let mut action = Tensor::zeros(f, &[d, ad, d]);
    let mut coaction = Tensor::zeros(f, &[d, 2, d]);
    for i in 0..nd {
        for v in 0..2 {
            for j in 0..ad {
                for (k, x) in n.act_basis(i, j).iter().enumerate() {
                    if !x.is_zero() {
                        action.set(&[i * 2 + v, j, k * 2 + v], x.clone());
                    }
                }
            }
            coaction.set(&[i * 2 + v, v, i * 2 + v], f.one());
        }
    }
    let basis = (0..d).map(|i| format!("m{i}")).collect();
    ModComodule::new(basis, action, coaction).unwrap()
}

fn witnesses(d: &YdDatum) -> Vec<(String, YdModule)> {
    let mut out = vec![("verma".to_string(), yd::verma(d)), ("H⊗A".to_string(), yd::h_tensor_a(d))];
    if let Ok(b) = yd::coinvariants(d) {
        let n = RightModule::free(&b.algebra, 2);
        if let Ok(ind) = yd::induce(d, &b, &n) {
            out.push(("B²⊗_B A".to_string(), ind.module));
        }
    }
    out
}

#[test]
fn verma_and_gallery_modules_are_yetter_drinfeld() {
    for f in [q(), Field::prime(3).unwrap()] {
        for name in DATA {
            let d = gallery::yd_by_name(name, f).unwrap();
            assert!(d.check().passed(), "{name}");
            for (mn, m) in witnesses(&d) {
                let r = yd::check_yd_module(&d, &m);
                assert!(r.passed(), "{name} {mn}\n{}", r.to_table());
            }
        }
    }
}

#[test]
fn verma_coaction_on_group_algebras() {
    let f = q();
    // Δ on both sides: ρ̃(g) = g⁻¹g ⊗ g = 1 ⊗ g
    let d = datum("kc2_delta_delta");
    let v = yd::verma(&d);
    for i in 0..2 {
        let mut want = f.zeros(4);
        want[i] = f.one();
        assert_eq!(v.coact_basis(i), &want[..]);
    }
    // trivial right coaction: ρ̃ = ρ^l
    for name in ["kc2_delta_trivial", "h4_delta_trivial"] {
        let d = datum(name);
        assert_eq!(yd::verma(&d).coaction, d.algebra.left, "{name}");
    }
}

#[test]
fn trivial_coactions_give_dimodules() {
    let f = q();
    let h = gallery::group_algebra(&GroupTable::cyclic(2), f).unwrap();
    let alg = h.algebra().clone();
    let mut left = Tensor::zeros(f, &[2, 2, 2]);
    let mut right = Tensor::zeros(f, &[2, 2, 2]);
    for i in 0..2 {
        left.set(&[i, 0, i], f.one());
        right.set(&[i, i, 0], f.one());
    }
    let bca = BicomoduleAlgebra::new(&h, alg, left, right).unwrap();
    let d = YdDatum::new(h, bca).unwrap();
    let mut r = rng(3);
    for _ in 0..3 {
        let n = random_c2_module(f, 2, &mut r);
        let m = module_times_graded_space(&n);
        assert!(yd::check_yd_module(&d, &m).passed());
    }
}

#[test]
fn relative_hopf_modules_are_yetter_drinfeld_for_trivial_right_coaction() {
    let d = datum("kc2_delta_trivial");
    let m = yd::h_tensor_a(&d);
    assert!(yd::check_yd_module(&d, &m).passed());
    // the same space with independent structures is not
    let mut r = rng(9);
    let n = random_c2_module(q(), 2, &mut r);
    let bad = module_times_graded_space(&n);
    assert!(!yd::check_yd_module(&d, &bad).passed());
}

#[test]
fn embedding_transports_compatibility_both_ways() {
    let mut r = rng(4);
    for name in DATA {
        let d = datum(name);
        let e = yd::embed_as_dk(&d).unwrap();
        assert!(e.check().passed(), "{name}");
        let mut mods = witnesses(&d);
        if d.h_dim() == 2 {
            for i in 0..3 {
                let n = if d.a_dim() == 2 { random_c2_module(q(), 2, &mut r) } else { RightModule::free(&d.algebra.algebra, 2) };
                mods.push((format!("dimodule{i}"), module_times_graded_space(&n)));
            }
        }
        let mut failures = 0;
        for (mn, m) in mods {
            let a = yd::check_yd_module(&d, &m).passed();
            let b = dk::check_dk_module(&e, &m).passed();
            assert_eq!(a, b, "{name} {mn}");
            failures += usize::from(!a);
        }
        if *name == "kc2_delta_trivial" {
            assert!(failures > 0, "the transport test needs a non-example");
        }
    }
}

#[test]
fn embedding_with_trivial_right_coaction_is_the_classical_datum() {
    for name in ["kc2_delta_trivial", "h4_delta_trivial"] {
        let d = datum(name);
        let e = yd::embed_as_dk(&d).unwrap();
        let hd = d.h_dim();
        for (idx, x) in e.algebra.coaction.nonzeros() {
            let (p, r) = (idx[1] / hd, idx[1] % hd);
            assert_eq!(r, 0, "{name}: only 1 in the second factor");
            assert_eq!(d.algebra.left.get(&[idx[0], p, idx[2]]), x);
        }
        // and the action of H⊗1 on C = H is right multiplication
        let c = dk::DkDatum::regular(&d.hopf);
        for g in 0..hd {
            for x in 0..hd {
                assert_eq!(e.coalgebra.act_basis(g, x * hd), c.coalgebra.act_basis(g, x));
            }
        }
    }
}

#[test]
fn gamma_theta_on_kc2_is_the_delta_function() {
    let f = q();
    for name in ["kc2_delta_delta", "kc2_delta_trivial"] {
        let d = datum(name);
        let g = gamma_theta(&d);
        let mut want = Tensor::zeros(f, &[2, 2, 2]);
        want.set(&[0, 0, 0], f.one());
        want.set(&[1, 1, 0], f.one());
        assert_eq!(g, want, "{name}");
        let r = yd::verify_quantum_integral(&d, &g).unwrap();
        assert!(r.passed_check("quantum_integral") && r.passed_check("total"), "{name}");
        let phi = yd::phi_from_gamma_q(&d, &g).unwrap();
        assert_eq!(phi, Matrix::from_i64(f, &[&[1, 0], &[0, 0]]));
        assert!(yd::check_phi_colinear(&d, &phi).passed());
    }
}

#[test]
fn solver_outputs_reverify() {
    for f in [q(), Field::prime(3).unwrap()] {
        for name in DATA {
            let d = gallery::yd_by_name(name, f).unwrap();
            for total in [false, true] {
                let sol = yd::solve_quantum_integral(&d, total).unwrap();
                match sol.integral {
                    Some(g) => {
                        let r = yd::verify_quantum_integral(&d, &g.gamma).unwrap();
                        assert!(r.passed_check("quantum_integral"), "{name}");
                        assert!(!total || r.passed_check("total"), "{name}");
                        let phi = yd::phi_from_gamma_q(&d, &g.gamma).unwrap();
                        assert!(yd::check_phi_colinear(&d, &phi).passed(), "{name}");
                    }
                    None => assert!(total && *name == "h4_delta_delta", "{name}"),
                }
            }
        }
    }
}

/// Exhaustive search over every `γ` on a 2-dimensional `H = A` over GF(2).
fn brute_force_total(d: &YdDatum) -> bool {
    let f = d.field();
    all_vectors(f, 8).into_iter().any(|v| {
        let g = Tensor::from_vec(f, &[2, 2, 2], v).unwrap();
        yd::verify_quantum_integral(d, &g).unwrap().passed()
    })
}

#[test]
fn gf2_quantum_integrals_match_brute_force() {
    let f = Field::prime(2).unwrap();
    let kc2 = gallery::group_algebra(&GroupTable::cyclic(2), f).unwrap();
    let dual = gallery::dual_group_algebra(&GroupTable::cyclic(2), f).unwrap();
    // with trivial right coaction φ = Id is always a total integral
    let cases = [
        ("kc2 Δ,Δ", YdDatum::regular(&kc2), true),
        ("kc2 Δ,1", YdDatum::regular_left(&kc2), true),
        ("dual Δ,Δ", YdDatum::regular(&dual), false),
        ("dual Δ,1", YdDatum::regular_left(&dual), true),
    ];
    for (name, d, expect) in cases {
        let solved = yd::solve_quantum_integral(&d, true).unwrap().integral.is_some();
        assert_eq!(solved, brute_force_total(&d), "{name}");
        assert_eq!(solved, expect, "{name}");
    }
}

#[test]
fn strong_phi_gives_quantum_integrals() {
    let f = q();
    for name in ["k_trivial", "kc2_delta_delta", "kc2_delta_trivial"] {
        let d = datum(name);
        let theta = gallery::classical_integral(&d.hopf).unwrap();
        let phi = Matrix::from_fn(f, d.a_dim(), d.h_dim(), |r, c| &d.algebra.algebra.unit()[r] * &theta[c]);
        assert!(yd::check_strong_phi(&d, &phi).passed(), "{name}");
        let g = yd::gamma_from_strong_phi(&d, &phi).unwrap();
        assert!(g.total, "{name}");
        assert_eq!(g.gamma, yd::gamma_theta(&d, &theta));
    }
    let d = datum("h4_delta_trivial");
    let id = Matrix::identity(f, 4);
    let g = yd::gamma_from_strong_phi(&d, &id).unwrap();
    assert!(g.total);
    assert!(yd::verify_quantum_integral(&d, &g.gamma).unwrap().passed());
}

/// On `H4` with `ρ^l = ρ^r = Δ` the colinear maps form a 4-dimensional
/// space but only a line satisfies the stronger condition.
#[test]
fn colinear_phi_need_not_be_strong() {
    let f = q();
    let d = datum("h4_delta_delta");
    let (colinear, strong) = yd::phi_spaces(&d);
    assert_eq!((colinear.cols(), strong.cols()), (4, 1));
    let (hd, ad) = (d.h_dim(), d.a_dim());
    let as_map = |v: Vec<hopfkit::kernel::Scalar>| Matrix::from_fn(f, ad, hd, |r, c| v[r * hd + c].clone());
    let witness = colinear
        .columns()
        .into_iter()
        .find(|c| !hopfkit::kernel::linalg::in_span(&strong, c))
        .expect("a colinear map outside the strong space");
    let phi = as_map(witness);
    assert!(yd::check_phi_colinear(&d, &phi).passed());
    assert!(!yd::check_strong_phi(&d, &phi).passed());
    assert!(yd::gamma_from_strong_phi(&d, &phi).is_err());
    // on the other gallery data the two spaces agree
    for name in ["k_trivial", "kc2_delta_delta", "kc2_delta_trivial", "h4_delta_trivial"] {
        let (c, s) = yd::phi_spaces(&datum(name));
        assert_eq!(c.cols(), s.cols(), "{name}");
    }
}

#[test]
fn big_lambda_is_a_yd_retraction() {
    for name in TOTAL {
        let d = datum(name);
        let mut gammas = vec![total_gamma(&d)];
        if d.hopf.dim() <= 2 {
            gammas.push(gamma_theta(&d));
        }
        for g in gammas {
            let l = yd::splitting_big_lambda(&d, &g).unwrap();
            let r = yd::check_big_lambda(&d, &l);
            assert!(r.passed(), "{name}\n{}", r.to_table());
        }
    }
}

#[test]
fn traces_land_in_coinvariants() {
    let f = q();
    for name in TOTAL {
        let d = datum(name);
        let b = yd::coinvariants(&d).unwrap();
        let (tl, tr) = yd::quantum_traces(&d, &total_gamma(&d)).unwrap();
        let r = yd::check_traces(&d, &b, &tl, &tr);
        assert!(r.passed(), "{name}\n{}", r.to_table());
    }
    // B = A on kC2 with Δ, Δ: both traces are the identity for γ_θ
    let d = datum("kc2_delta_delta");
    let (tl, tr) = yd::quantum_traces(&d, &gamma_theta(&d)).unwrap();
    assert!(tl.is_identity() && tr.is_identity());
    // B = k on kC2 with trivial right coaction: t_l(1) = 1, t_l(g) = θ(g)g = 0
    let d = datum("kc2_delta_trivial");
    let (tl, _) = yd::quantum_traces(&d, &gamma_theta(&d)).unwrap();
    assert_eq!(tl, Matrix::from_i64(f, &[&[1, 0], &[0, 0]]));
    let d = datum("k_trivial");
    let (tl, tr) = yd::quantum_traces(&d, &total_gamma(&d)).unwrap();
    assert!(tl.is_identity() && tr.is_identity());
}

#[test]
fn coinvariant_dimensions() {
    let cases = [("k_trivial", 1), ("kc2_delta_delta", 2), ("kc2_delta_trivial", 1), ("h4_delta_delta", 2), ("h4_delta_trivial", 1)];
    for (name, dim) in cases {
        let d = datum(name);
        let b = yd::coinvariants(&d).unwrap();
        assert_eq!(b.dim(), dim, "{name}");
        assert!(hopfkit::structures::check_algebra(&b.algebra).passed());
        // every basis element is fixed by ρ̃
        for col in b.inclusion.columns() {
            let mut want = vec![q().zero(); d.h_dim() * d.a_dim()];
            hopfkit::kernel::vector::add_kron(&mut want, &q().one(), d.hopf.unit(), &col);
            assert_eq!(d.rho_tilde(&col), want, "{name}");
        }
    }
}

#[test]
fn unit_and_inverse_are_mutually_inverse() {
    let mut r = rng(21);
    for name in TOTAL {
        let d = datum(name);
        let b = yd::coinvariants(&d).unwrap();
        let (tl, _) = yd::quantum_traces(&d, &total_gamma(&d)).unwrap();
        let mut ns = vec![
            ("B".to_string(), RightModule::regular(&b.algebra)),
            ("B²".to_string(), RightModule::free(&b.algebra, 2)),
        ];
        if b.dim() == 2 {
            ns.push(("N".to_string(), random_c2_module(q(), 3, &mut r).restrict(&b.inclusion)));
        }
        for (nn, n) in ns {
            let ind = yd::induce(&d, &b, &n).unwrap();
            assert!(yd::check_induced(&d, &b, &n, &ind).passed(), "{name} {nn}");
            let e = yd::check_eta_theta(&d, &b, &n, &ind, &tl).unwrap();
            assert!(e.passed(), "{name} {nn}\n{}", e.to_table());
        }
        // B ⊗_B A ≅ A
        let ind = yd::induce(&d, &b, &RightModule::regular(&b.algebra)).unwrap();
        assert_eq!(ind.quotient.dim(), d.a_dim(), "{name}");
    }
}

#[test]
fn counit_maps() {
    for name in DATA {
        let d = datum(name);
        let b = yd::coinvariants(&d).unwrap();
        let ha = yd::h_tensor_a(&d);
        assert_eq!(yd::m_coinvariants(&d, &ha).cols(), d.a_dim(), "{name}");
        let cb = yd::counit_beta(&d, &b, &ha).unwrap();
        let r = cb.check(&d, &ha);
        // on the gallery data β_{H⊗A} is bijective exactly for the Galois ones
        let galois = yd::is_quantum_galois(&d).unwrap().passed();
        assert_eq!(r.passed(), galois, "{name}\n{}", r.to_table());
        let v = yd::verma(&d);
        let cb = yd::counit_beta(&d, &b, &v).unwrap();
        let r = cb.check(&d, &v);
        for id in ["beta_well_defined", "beta_a_linear", "beta_colinear"] {
            assert!(r.passed_check(id), "{name} {id}");
        }
        assert_eq!(b.dim(), yd::m_coinvariants(&d, &v).cols());
    }
}

#[test]
fn galois_decisions() {
    let cases = [("kc2_delta_trivial", true, 4), ("kc2_delta_delta", false, 2), ("k_trivial", true, 1), ("h4_delta_trivial", true, 16)];
    for (name, galois, rank) in cases {
        let r = yd::is_quantum_galois(&datum(name)).unwrap();
        assert_eq!(r.passed(), galois, "{name}");
        assert_eq!(r.metadata["rank"], rank.to_string(), "{name}");
    }
    let r = yd::is_quantum_galois(&datum("kc2_delta_delta")).unwrap();
    assert_eq!(r.check("surjective").unwrap().detail, "not surjective: rank 2 < 4");
    assert!(r.passed_check("injective"));
}

#[test]
fn classical_and_quantum_agree_for_trivial_right_coaction() {
    let f = q();
    for name in ["kc2_delta_trivial", "h4_delta_trivial"] {
        let d = datum(name);
        let left = d.algebra.left_algebra();
        let b = yd::coinvariants(&d).unwrap();
        assert_eq!(b.inclusion, yd::classical_coinvariants(&d.hopf, &left), "{name}");
        let cb = yd::canonical_beta(&d, &b).unwrap();
        let (q2, can) = yd::classical_can(&d.hopf, &left, &b.inclusion).unwrap();
        assert_eq!(q2.projection, cb.quotient.projection, "{name}");
        assert_eq!(can, cb.beta, "{name}");
        let phi = if d.hopf.dim() == 4 {
            Matrix::identity(f, 4)
        } else {
            let theta = gallery::classical_integral(&d.hopf).unwrap();
            Matrix::from_fn(f, 2, 2, |r, c| &d.algebra.algebra.unit()[r] * &theta[c])
        };
        let g = yd::gamma_from_strong_phi(&d, &phi).unwrap();
        let small = yd::splitting_small_lambda(&d, &g.gamma).unwrap();
        assert_eq!(small, yd::classical_lambda(&d.hopf, &yd::verma(&d), &phi).unwrap(), "{name}");
    }
}

#[test]
fn affineness_reports() {
    for name in ["kc2_delta_trivial", "k_trivial", "h4_delta_trivial"] {
        let d = datum(name);
        let b = yd::coinvariants(&d).unwrap();
        let bw = vec![("B".to_string(), RightModule::regular(&b.algebra)), ("B²".to_string(), RightModule::free(&b.algebra, 2))];
        let r = yd::affineness_check(&d, &total_gamma(&d), &witnesses(&d), &bw).unwrap();
        assert!(r.passed(), "{name}\n{}", r.to_table());
        assert!(r.metadata["scope"].contains("instance level"));
    }
    let d = datum("kc2_delta_delta");
    let r = yd::affineness_check(&d, &total_gamma(&d), &witnesses(&d), &[]).unwrap();
    assert!(r.passed_check("hypothesis_1"));
    assert!(r.check("hypothesis_2").unwrap().detail.starts_with("hypothesis (2) violated"));
}
