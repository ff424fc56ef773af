mod common;

use common::q;
use hopfkit::actions::{check_bicomodule_algebra, check_comodule_algebra, check_module_coalgebra};
use hopfkit::dk;
use hopfkit::format::Structure;
use hopfkit::gallery::{self, GroupTable};
use hopfkit::kernel::{Field, Matrix, Scalar};
use hopfkit::structures::{check_coalgebra, check_hopf, HopfAlgebra};
use hopfkit::yd;

fn fields() -> Vec<Field> {
    vec![q(), Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::prime(5).unwrap()]
}

#[test]
fn every_entry_builds_and_verifies() {
    for f in fields() {
        for e in gallery::entries() {
            let w = match gallery::build(e.name, f) {
                Ok(w) => w,
                Err(err) => {
                    // Sweedler's algebra needs -1 ≠ 1
                    assert!(f.characteristic() == 2 && (e.name == "H4" || e.name.starts_with("h4")), "{} {err}", e.name);
                    continue;
                }
            };
            for (n, s) in &w.items {
                let r = match s {
                    Structure::Hopf(h) => check_hopf(h),
                    Structure::Coalgebra(c) => check_coalgebra(c),
                    Structure::ComoduleAlgebra { over, value } => check_comodule_algebra(w.hopf(over).unwrap(), value),
                    Structure::ModuleCoalgebra { over, value } => check_module_coalgebra(w.hopf(over).unwrap(), value),
                    Structure::BicomoduleAlgebra { over, value } => check_bicomodule_algebra(w.hopf(over).unwrap(), value),
                    Structure::DkDatum { value, .. } => value.check(),
                    Structure::YdDatum { value, .. } => value.check(),
                    Structure::DkModule { datum, value } => dk::check_dk_module(w.dk_datum(datum).unwrap(), value),
                    Structure::YdModule { datum, value } => yd::check_yd_module(w.yd_datum(datum).unwrap(), value),
                    other => panic!("unexpected {}", other.kind()),
                };
                assert!(r.passed(), "{} / {n} over {f:?}\n{}", e.name, r.to_table());
            }
        }
    }
}

#[test]
fn entry_metadata() {
    let names: Vec<_> = gallery::entries().iter().map(|e| e.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    for e in gallery::entries() {
        assert!(["hopf", "coalgebra", "dk_datum", "yd_datum"].contains(&e.kind));
        assert!(!e.description.is_empty());
        assert_eq!(gallery::entry(e.name).unwrap().name, e.name);
    }
    assert!(gallery::entry("nope").is_none());
    assert!(gallery::build("nope", q()).is_err());
}

fn group_table_is_a_group(g: &GroupTable) {
    let n = g.order();
    for a in 0..n {
        assert_eq!(g.table[g.identity][a], a);
        assert_eq!(g.table[a][g.inverse(a)], g.identity);
        for b in 0..n {
            for c in 0..n {
                assert_eq!(g.table[g.table[a][b]][c], g.table[a][g.table[b][c]]);
            }
        }
    }
}

#[test]
fn group_tables() {
    for g in [GroupTable::trivial(), GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::cyclic(5), GroupTable::symmetric3()] {
        group_table_is_a_group(&g);
    }
    let s3 = GroupTable::symmetric3();
    assert_eq!(s3.order(), 6);
    let commutes = (0..6).all(|a| (0..6).all(|b| s3.table[a][b] == s3.table[b][a]));
    assert!(!commutes);
    // Latin square violations are rejected
    let bad = GroupTable::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]]);
    assert!(bad.is_err());
}

#[test]
fn group_algebras_and_duals_are_hopf() {
    for f in fields() {
        for g in [GroupTable::trivial(), GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()] {
            let n = g.order();
            for h in [gallery::group_algebra(&g, f).unwrap(), gallery::dual_group_algebra(&g, f).unwrap()] {
                assert!(check_hopf(&h).passed());
                assert_eq!(h.dim(), n);
                assert!(h.antipode().pow(2).is_identity());
            }
            // S(g) = g⁻¹
            let h = gallery::group_algebra(&g, f).unwrap();
            for a in 0..n {
                assert_eq!(h.antipode().column(a), f.unit_vector(n, g.inverse(a)));
            }
            // the dual has δ_x δ_y = δ_{x,y} δ_x
            let d = gallery::dual_group_algebra(&g, f).unwrap();
            for x in 0..n {
                for y in 0..n {
                    let want = if x == y { f.unit_vector(n, x) } else { f.zeros(n) };
                    assert_eq!(d.mul_basis(x, y), &want[..]);
                }
            }
        }
    }
}

#[test]
fn sweedler_algebra() {
    for f in [q(), Field::prime(3).unwrap(), Field::prime(5).unwrap()] {
        let h = gallery::sweedler_h4(f).unwrap();
        assert!(check_hopf(&h).passed());
        let s = h.antipode();
        assert!(!s.pow(2).is_identity());
        assert!(s.pow(4).is_identity());
        // x² = 0, gx = -xg
        assert_eq!(h.mul_basis(2, 2), &f.zeros(4)[..]);
        let gx = h.mul_basis(1, 2).to_vec();
        let xg: Vec<Scalar> = h.mul_basis(2, 1).iter().map(|c| -c.clone()).collect();
        assert_eq!(gx, xg);
        // the algebra is not commutative and the coalgebra is not cocommutative
        assert_ne!(h.mul_basis(1, 2), h.mul_basis(2, 1));
        let plain = h.comul(&h.basis_vector(2));
        let mut flipped = f.zeros(16);
        for (a, b, c) in h.terms(2) {
            flipped[b * 4 + a] = c.clone();
        }
        assert_ne!(flipped, plain);
    }
    assert!(gallery::sweedler_h4(Field::prime(2).unwrap()).is_err());
}

#[test]
fn coalgebra_families() {
    for f in fields() {
        for n in 1..=3 {
            let c = gallery::comatrix_coalgebra(n, f);
            assert_eq!(c.dim(), n * n);
            assert!(check_coalgebra(&c).passed());
            // Δ(c_ij) = Σ_k c_ik ⊗ c_kj
            for i in 0..n {
                for j in 0..n {
                    let mut want = f.zeros(n * n * n * n);
                    for k in 0..n {
                        want[(i * n + k) * n * n + k * n + j] = f.one();
                    }
                    assert_eq!(c.comul_basis(i * n + j), &want[..]);
                }
            }
        }
        for n in [1, 2, 5] {
            let c = gallery::grouplike_coalgebra(n, f);
            assert_eq!(c.dim(), n);
            assert!(check_coalgebra(&c).passed());
            assert!(c.counit().iter().all(|x| x.is_one()));
        }
    }
    assert_eq!(gallery::coalgebra_by_name("M3", q()).unwrap().dim(), 9);
    assert_eq!(gallery::coalgebra_by_name("kX4", q()).unwrap().dim(), 4);
    assert!(gallery::coalgebra_by_name("Mx", q()).is_err());
}

/// `h₁ θ(h₂) = θ(h) 1` on every basis element.
fn is_left_integral(h: &HopfAlgebra, theta: &[Scalar]) -> bool {
    let f = h.field();
    (0..h.dim()).all(|i| {
        let mut lhs = f.zeros(h.dim());
        for (a, b, c) in h.terms(i) {
            lhs[a] = &lhs[a] + &(c * &theta[b]);
        }
        let rhs: Vec<Scalar> = h.unit().iter().map(|u| u * &theta[i]).collect();
        lhs == rhs
    })
}

fn theta_of_unit(h: &HopfAlgebra, theta: &[Scalar]) -> Scalar {
    h.unit().iter().zip(theta).fold(h.field().zero(), |acc, (u, t)| &acc + &(u * t))
}

#[test]
fn classical_integrals_of_group_algebras_are_delta_at_identity() {
    for f in fields() {
        for g in [GroupTable::trivial(), GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()] {
            let h = gallery::group_algebra(&g, f).unwrap();
            let theta = gallery::classical_integral(&h).unwrap();
            assert!(is_left_integral(&h, &theta));
            assert_eq!(theta, f.unit_vector(g.order(), g.identity));
            assert!(theta_of_unit(&h, &theta).is_one());
        }
    }
}

#[test]
fn classical_integrals_of_function_algebras_detect_the_characteristic() {
    for f in fields() {
        for g in [GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()] {
            let n = g.order();
            let h = gallery::dual_group_algebra(&g, f).unwrap();
            let theta = gallery::classical_integral(&h).unwrap();
            assert!(is_left_integral(&h, &theta));
            // θ is constant on the δ_x
            assert!(theta.iter().all(|t| *t == theta[0]) && !theta[0].is_zero());
            let t1 = theta_of_unit(&h, &theta);
            let divides = f.characteristic() != 0 && (n as u64).is_multiple_of(f.characteristic());
            assert_eq!(t1.is_zero(), divides, "|G| = {n} over {f:?}");
            if !divides {
                assert!(t1.is_one());
                assert_eq!(theta[0], f.ratio(1, n as i64));
            }
        }
    }
}

#[test]
fn classical_integral_of_sweedler_algebra() {
    for f in [q(), Field::prime(3).unwrap()] {
        let h = gallery::sweedler_h4(f).unwrap();
        let theta = gallery::classical_integral(&h).unwrap();
        assert!(is_left_integral(&h, &theta));
        assert!(theta[..3].iter().all(Scalar::is_zero) && !theta[3].is_zero());
        assert!(theta_of_unit(&h, &theta).is_zero());
        // the left integrals form a line
        let ones: Vec<Scalar> = vec![f.zero(), f.zero(), f.one(), f.zero()];
        assert!(!is_left_integral(&h, &ones));
    }
    let k = HopfAlgebra::ground(q());
    assert_eq!(gallery::classical_integral(&k).unwrap(), vec![q().one()]);
}

#[test]
fn gallery_integral_helpers() {
    let f = Field::prime(2).unwrap();
    let d = dk::coalgebra_datum(&gallery::comatrix_coalgebra(2, f));
    let id = Matrix::identity(f, 2);
    let r = dk::verify_integral(&d, &gallery::comatrix_gamma(&id)).unwrap();
    assert!(r.passed_check("integral") && !r.passed_check("total"));
    let mut e11 = Matrix::zeros(f, 2, 2);
    e11.set(0, 0, f.one());
    assert!(dk::verify_integral(&d, &gallery::comatrix_gamma(&e11)).unwrap().passed());

    let d = dk::coalgebra_datum(&gallery::grouplike_coalgebra(3, q()));
    let r = dk::verify_integral(&d, &gallery::grouplike_gamma(&Matrix::identity(q(), 3), &[q().one()])).unwrap();
    assert!(r.passed());
}

#[test]
fn documented_properties_hold() {
    for f in fields() {
        for e in gallery::entries() {
            for (prop, value) in e.properties {
                let actual = match (e.kind, *prop) {
                    ("hopf", "cosemisimple") => match gallery::hopf_by_name(e.name, f) {
                        Ok(h) => {
                            let theta = gallery::classical_integral(&h).unwrap();
                            !theta_of_unit(&h, &theta).is_zero()
                        }
                        Err(_) => continue,
                    },
                    ("hopf", "S^2 = Id") => match gallery::hopf_by_name(e.name, f) {
                        Ok(h) => h.antipode().pow(2).is_identity(),
                        Err(_) => continue,
                    },
                    ("coalgebra", "coseparable") => {
                        let c = gallery::coalgebra_by_name(e.name, f).unwrap();
                        dk::coalgebra_integral(&c, true).is_some()
                    }
                    ("dk_datum", "total integral") => {
                        let d = gallery::dk_by_name(e.name, f);
                        match d {
                            Ok(d) => dk::solve_integral(&d, true).integral.is_some(),
                            Err(_) => continue,
                        }
                    }
                    ("yd_datum", "galois") => match gallery::yd_by_name(e.name, f) {
                        Ok(d) => yd::is_quantum_galois(&d).unwrap().passed(),
                        Err(_) => continue,
                    },
                    ("yd_datum", "dim B") => match gallery::yd_by_name(e.name, f) {
                        Ok(d) => {
                            assert_eq!(yd::coinvariants(&d).unwrap().dim().to_string(), *value, "{}", e.name);
                            continue;
                        }
                        Err(_) => continue,
                    },
                    other => panic!("unknown property {other:?}"),
                };
                let p = f.characteristic();
                let expected = match *value {
                    "yes" => true,
                    "no" => false,
                    "iff char ≠ 2" => p != 2,
                    "iff char ≠ 3" => p != 3,
                    "iff char ∤ 6" => p != 2 && p != 3,
                    v => panic!("unknown value {v}"),
                };
                assert_eq!(actual, expected, "{} {prop} over {f:?}", e.name);
            }
        }
    }
}
