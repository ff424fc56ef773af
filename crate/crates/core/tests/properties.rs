use hopfkit::actions::{check_bicomodule_algebra, check_right_module, csstar_module, BicomoduleAlgebra, LeftComodule, LeftComoduleAlgebra};
use hopfkit::gallery;
use hopfkit::kernel::linalg::{echelon, kernel_basis, rank, solve_linear};
use hopfkit::kernel::{Field, Matrix, Scalar};
use hopfkit::report::{Check, Report, Witness};
use hopfkit::structures::{check_algebra, convolution, convolution_unit, hit_left, hit_right, Coalgebra};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(7).unwrap()),
    ]
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| Matrix::from_fn(f, rows, cols, |i, j| f.from_i64(v[i * cols + j])))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

fn vector(f: Field, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-4i64..=4, n).prop_map(move |v| v.into_iter().map(|x| f.from_i64(x)).collect())
}

const HOPF: &[&str] = &["k", "kC2", "kC3", "kS3", "kC2_dual", "kC3_dual", "H4"];

/// A gallery Hopf algebra over a field where it exists.
fn hopf() -> impl Strategy<Value = hopfkit::structures::HopfAlgebra> {
    (prop::sample::select(HOPF), prop_oneof![Just(Field::Rationals), Just(Field::prime(3).unwrap()), Just(Field::prime(5).unwrap())])
        .prop_map(|(n, f)| gallery::hopf_by_name(n, f).unwrap())
}

fn coalgebra() -> impl Strategy<Value = Coalgebra> {
    (prop_oneof![Just("M2"), Just("kX3"), Just("H4"), Just("kC3_dual")], field()).prop_map(|(n, f)| {
        if let Ok(c) = gallery::coalgebra_by_name(n, f) {
            c
        } else {
            let f = if f.characteristic() == 2 { Field::Rationals } else { f };
            gallery::hopf_by_name(n, f).unwrap().coalgebra().clone()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(a in any_matrix()) {
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
        prop_assert_eq!(a.rank(), echelon(&a).rank());
    }

    #[test]
    fn kernel_is_annihilated_and_has_complementary_dimension(a in any_matrix()) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.cols(), a.cols() - rank(&a));
        prop_assert!(a.checked_mul(&k).unwrap().is_zero());
        prop_assert_eq!(rank(&k), k.cols());
    }

    #[test]
    fn echelon_pivots_increase(a in any_matrix()) {
        let e = echelon(&a);
        prop_assert!(e.pivots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn solve_finds_preimages_of_images((a, x) in any_matrix().prop_flat_map(|a| {
        let (f, c) = (a.field(), a.cols());
        (Just(a), matrix(f, c, 1))
    })) {
        let b = a.checked_mul(&x).unwrap();
        let y = solve_linear(&a, &b).unwrap().expect("consistent");
        prop_assert_eq!(a.checked_mul(&y).unwrap(), b);
    }

    #[test]
    fn solve_reports_inconsistency_by_rank((a, b) in any_matrix().prop_flat_map(|a| {
        let (f, r) = (a.field(), a.rows());
        (Just(a), matrix(f, r, 1))
    })) {
        let consistent = rank(&a.hstack(&b).unwrap()) == rank(&a);
        match solve_linear(&a, &b).unwrap() {
            Some(y) => prop_assert!(consistent && a.checked_mul(&y).unwrap() == b),
            None => prop_assert!(!consistent),
        }
    }

    #[test]
    fn inverse_is_two_sided(a in (field(), 1usize..5).prop_flat_map(|(f, n)| matrix(f, n, n))) {
        match a.inverse() {
            Some(b) => {
                prop_assert!(a.checked_mul(&b).unwrap().is_identity());
                prop_assert!(b.checked_mul(&a).unwrap().is_identity());
            }
            None => prop_assert!(rank(&a) < a.rows()),
        }
    }

    #[test]
    fn scalars_round_trip_through_text(f in field(), n in -1000i64..1000, d in 1i64..50) {
        let x = if f.characteristic() == 0 || !(d as u64).is_multiple_of(f.characteristic()) { f.ratio(n, d) } else { f.from_i64(n) };
        prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn convolution_is_associative_and_unital((h, seed) in (hopf(), any::<u64>())) {
        let n = h.dim();
        let f = h.field();
        let mk = |s: u64| Matrix::from_fn(f, n, n, |i, j| f.from_i64(((s >> ((i * n + j) % 60)) & 3) as i64 - 1));
        let (x, y, z) = (mk(seed), mk(seed.rotate_left(17)), mk(seed.rotate_left(41)));
        let (c, a) = (h.coalgebra(), h.algebra());
        let conv = |p: &Matrix, q: &Matrix| convolution(p, q, c, a).unwrap();
        prop_assert_eq!(conv(&conv(&x, &y), &z), conv(&x, &conv(&y, &z)));
        let e = convolution_unit(c, a);
        prop_assert_eq!(conv(&e, &x), x.clone());
        prop_assert_eq!(conv(&x, &e), x.clone());
        // S is the convolution inverse of Id
        let id = Matrix::identity(f, n);
        prop_assert_eq!(conv(h.antipode(), &id), e.clone());
        prop_assert_eq!(conv(&id, h.antipode()), e);
    }

    #[test]
    fn hit_actions_are_module_actions((c, seed) in (coalgebra(), any::<u64>())) {
        let n = c.dim();
        let f = c.field();
        let v = |s: u64| (0..n).map(|i| f.from_i64(((s >> (i % 60)) & 7) as i64 - 3)).collect::<Vec<_>>();
        let (x, p, q) = (v(seed), v(seed.rotate_left(13)), v(seed.rotate_left(29)));
        let dual = c.dual_algebra();
        prop_assert!(check_algebra(&dual).passed());
        let pq = dual.mul(&p, &q);
        prop_assert_eq!(hit_left(&p, &hit_left(&q, &x, &c), &c), hit_left(&pq, &x, &c));
        prop_assert_eq!(hit_right(&hit_right(&x, &p, &c), &q, &c), hit_right(&x, &pq, &c));
        prop_assert_eq!(hit_left(c.counit(), &x, &c), x.clone());
        // the two sides commute
        prop_assert_eq!(hit_right(&hit_left(&p, &x, &c), &q, &c), hit_left(&p, &hit_right(&x, &q, &c), &c));
    }

    #[test]
    fn comodules_become_dual_modules((c, seed) in (coalgebra(), any::<u64>())) {
        let n = c.dim();
        let f = c.field();
        let m = LeftComodule::regular(&c);
        let module = csstar_module(&m);
        prop_assert!(check_right_module(&c.dual_algebra(), &module).passed());
        let cs: Vec<Scalar> = (0..n).map(|i| f.from_i64(((seed >> (i % 60)) & 7) as i64 - 3)).collect();
        for i in 0..n {
            // m·c* = Σ ⟨c*, m₋₁⟩ m₀
            let mut want = f.zeros(n);
            for (a, b, x) in c.terms(i) {
                want[b] += &(x * &cs[a]);
            }
            prop_assert_eq!(module.act(&f.unit_vector(n, i), &cs), want);
        }
    }

    #[test]
    fn trivial_right_coaction_gives_bicomodule_algebras(h in hopf()) {
        let a = LeftComoduleAlgebra::regular(&h);
        let b = BicomoduleAlgebra::trivial_right(&h, &a);
        prop_assert!(check_bicomodule_algebra(&h, &b).passed());
        prop_assert_eq!(b.left_algebra(), a);
        let x = h.basis_vector(h.dim() - 1);
        let mut want = h.field().zeros(h.dim() * h.dim());
        hopfkit::kernel::vector::add_kron(&mut want, &h.field().one(), &x, h.unit());
        prop_assert_eq!(b.coact_right(&x), want);
    }

    #[test]
    fn report_json_round_trips(entries in prop::collection::vec((any::<bool>(), "[a-z_]{1,8}", prop::collection::vec(0usize..5, 0..3), -9i64..9), 0..6)) {
        let q = Field::Rationals;
        let mut r = Report::new();
        for (ok, id, idx, v) in &entries {
            if *ok {
                r.push(Check::pass(id.clone(), "x = x", "checked"));
            } else {
                r.push(Check::fail(id.clone(), "x = y", Witness::new(idx.clone(), &[q.ratio(*v, 7)], &[q.one()]), "differs"));
            }
        }
        r.set_meta("rank", entries.len());
        let back = Report::from_json(&r.to_json()).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(r.summary.passed + r.summary.failed, entries.len());
        prop_assert_eq!(r.passed(), entries.iter().all(|e| e.0));
        prop_assert!(r.checks.iter().filter(|c| !c.passed()).all(|c| c.witness.is_some()));
    }

    #[test]
    fn merge_preserves_checks(a in 0usize..4, b in 0usize..4) {
        let mk = |n: usize, ok: bool| Report::from_checks((0..n).map(|i| if ok {
            Check::pass(format!("p{i}"), "", "")
        } else {
            Check::fail(format!("f{i}"), "", Witness::counts(0, 1), "")
        }));
        let m = Report::merge([mk(a, true), mk(b, false)]);
        prop_assert_eq!(m.checks.len(), a + b);
        prop_assert_eq!(m.passed(), b == 0);
        prop_assert_eq!(m.summary.failed, b);
    }
}

#[test]
fn empty_merge_is_empty() {
    let m = Report::merge(Vec::<Report>::new());
    assert!(m.checks.is_empty() && m.passed());
}

#[test]
fn vector_helpers() {
    let f = Field::Rationals;
    proptest!(|(x in vector(f, 4), y in vector(f, 4))| {
        let s = hopfkit::kernel::vector::add(&x, &y);
        prop_assert_eq!(hopfkit::kernel::vector::sub(&s, &y), x.clone());
        let k = hopfkit::kernel::vector::kron(&x, &y);
        prop_assert_eq!(k.len(), 16);
        prop_assert_eq!(k[5].clone(), &x[1] * &y[1]);
    });
}
