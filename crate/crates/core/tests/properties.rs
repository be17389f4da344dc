//! Randomized invariants over the exact arithmetic, the PBW algebra, the
//! Racah modules, the Leonard checker and the decompositions.

use proptest::prelude::*;

use racahlab::decompose::decompose_ln;
use racahlab::exact_linalg::modp::closure_dim_mod_p;
use racahlab::exact_linalg::{
    algebra_closure, eigen_split, inverse, minimal_polynomial, rational_roots, rref, Echelon, ExactMatrix, Poly,
    Subspace,
};
use racahlab::leonard::check;
use racahlab::rd_modules::{construct, iso_class, s_value, RdParams};
use racahlab::sl2_reps::{build_ln, sharp_pullback};
use racahlab::suite::{run_suite, IntRange, SuiteConfig, Target};
use racahlab::usl2_pbw::{component, d3_apply, is_even, sharp, PBWElement, RacahGen, D3};
use racahlab::{Rational, Q};

fn gq() -> impl Strategy<Value = Q> {
    (-6i64..=6, -2i64..=2, 1i64..=4).prop_map(|(re, im, den)| Q::new(Rational::new(re, den), Rational::new(im, den)))
}

fn small_int() -> impl Strategy<Value = Q> {
    (-2i64..=2).prop_map(Q::int)
}

fn matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(gq(), n * n).prop_map(move |v| ExactMatrix::from_flat(n, n, v))
}

fn any_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=4).prop_flat_map(matrix)
}

/// Upper triangular with a diagonal from a small set, so eigenvalues repeat
/// often and the minimal polynomial always splits.
fn triangular() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        (
            proptest::collection::vec(-1i64..=2, n),
            proptest::collection::vec(prop_oneof![3 => Just(Q::ZERO), 1 => gq()], n * n),
        )
            .prop_map(move |(diag, upper)| {
                ExactMatrix::from_fn(n, n, |r, c| match r.cmp(&c) {
                    std::cmp::Ordering::Equal => Q::int(diag[r]),
                    std::cmp::Ordering::Less => upper[r * n + c].clone(),
                    std::cmp::Ordering::Greater => Q::ZERO,
                })
            })
    })
}

/// Product of unit upper and unit lower integer triangles: invertible.
fn conjugator(n: usize) -> impl Strategy<Value = ExactMatrix> {
    (
        proptest::collection::vec(small_int(), n * n),
        proptest::collection::vec(small_int(), n * n),
    )
        .prop_map(move |(u, l)| {
            let tri = |v: &[Q], upper: bool| {
                ExactMatrix::from_fn(n, n, |r, c| {
                    if r == c {
                        Q::ONE
                    } else if (r < c) == upper {
                        v[r * n + c].clone()
                    } else {
                        Q::ZERO
                    }
                })
            };
            &tri(&u, true) * &tri(&l, false)
        })
}

fn monomial() -> impl Strategy<Value = PBWElement> {
    (0u32..=2, 0u32..=2, 0u32..=2, gq())
        .prop_filter("total degree at most 2", |(e, f, h, _)| e + f + h <= 2)
        .prop_map(|(e, f, h, c)| PBWElement::monomial((e, f, h), c))
}

fn element() -> impl Strategy<Value = PBWElement> {
    proptest::collection::vec(monomial(), 1..=3).prop_map(|ms| ms.iter().fold(PBWElement::zero(), |acc, m| &acc + m))
}

fn params(max_d: usize) -> impl Strategy<Value = RdParams> {
    (gq(), gq(), gq(), 0..=max_d).prop_map(|(a, b, c, d)| RdParams::new(a, b, c, d))
}

fn irreducible(max_d: usize) -> impl Strategy<Value = RdParams> {
    params(max_d).prop_filter("irreducible", RdParams::is_irreducible)
}

fn flat_rows(ms: &[ExactMatrix]) -> Echelon {
    let len = ms.first().map_or(0, |m| m.rows() * m.cols());
    let mut ech = Echelon::new(len);
    for m in ms {
        ech.insert(m.as_flat().to_vec());
    }
    ech
}

// exact linear algebra

proptest! {
    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let (r, k) = rref(&m);
        prop_assert_eq!(rref(&r), (r.clone(), k));
    }

    #[test]
    fn min_poly_annihilates_and_is_minimal(m in triangular(), pick in any::<prop::sample::Index>()) {
        let p = minimal_polynomial(&m);
        prop_assert!(p.eval_matrix(&m).is_zero());
        let roots = rational_roots(&p).unwrap();
        prop_assert!(roots.splits);
        let r = &roots.roots[pick.index(roots.roots.len())];
        let (divisor, rem) = p.div_rem(&Poly::linear(r));
        prop_assert!(rem.is_zero());
        prop_assert!(!divisor.monic().eval_matrix(&m).is_zero());
    }

    #[test]
    fn eigenspaces_fill_the_space_iff_squarefree(m in triangular()) {
        let p = minimal_polynomial(&m);
        let roots = rational_roots(&p).unwrap().roots;
        let split = eigen_split(&m, &roots).unwrap();
        let total: usize = split.dims().iter().sum();
        prop_assert!(total <= m.rows());
        prop_assert_eq!(total == m.rows(), p.is_squarefree());
        prop_assert_eq!(split.diagonalizable, p.is_squarefree());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_multiplicatively_closed(gens in (1usize..=3).prop_flat_map(|n| proptest::collection::vec(matrix(n), 1..=2))) {
        let cl = algebra_closure(&gens);
        prop_assert_eq!(cl.basis.len(), cl.dim);
        let ech = flat_rows(&cl.basis);
        prop_assert_eq!(ech.rank(), cl.dim);
        for x in &cl.basis {
            for y in &cl.basis {
                prop_assert!(ech.contains((x * y).as_flat()));
            }
        }
        for g in &gens {
            prop_assert!(ech.contains(g.as_flat()));
        }
        if let Some(k) = closure_dim_mod_p(&gens) {
            prop_assert!(k <= cl.dim);
        }
    }
}

// PBW algebra

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(x in monomial(), y in monomial(), z in monomial()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn multiplication_distributes(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn grading_is_multiplicative(x in element(), y in element()) {
        let xy = &x * &y;
        for n in -4i64..=4 {
            let expected = (-2i64..=2).fold(PBWElement::zero(), |acc, n1| {
                &acc + &(&component(&x, n1) * &component(&y, n - n1))
            });
            prop_assert_eq!(component(&xy, n), expected);
        }
    }

    #[test]
    fn d3_acts_by_algebra_maps(x in element(), y in element()) {
        for g in D3::all() {
            prop_assert_eq!(d3_apply(g, &(&x * &y)), &d3_apply(g, &x) * &d3_apply(g, &y));
            prop_assert_eq!(d3_apply(g, &(&x + &y)), &d3_apply(g, &x) + &d3_apply(g, &y));
        }
    }

    #[test]
    fn d3_relations_hold_elementwise(x in element()) {
        let twice = d3_apply(D3::SIGMA, &d3_apply(D3::SIGMA, &x));
        prop_assert_eq!(&twice, &x);
        let thrice = d3_apply(D3::TAU, &d3_apply(D3::TAU, &d3_apply(D3::TAU, &x)));
        prop_assert_eq!(&thrice, &x);
        let st = |v: &PBWElement| d3_apply(D3::SIGMA, &d3_apply(D3::TAU, v));
        prop_assert_eq!(st(&st(&x)), x);
    }

    #[test]
    fn products_of_images_stay_even(u in 0usize..4, v in 0usize..4) {
        let gens = [RacahGen::A, RacahGen::B, RacahGen::C, RacahGen::Delta];
        let prod = &sharp(gens[u]) * &sharp(gens[v]);
        prop_assert!(is_even(&prod));
    }
}

// Racah modules

fn trace_formula(s: &Q, d: usize) -> Q {
    let d_q = Q::int(d as i64);
    &Q::int(d as i64 + 1) * &(s + &(&(&d_q * &Q::int(d as i64 + 2)) / &Q::int(12)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructed_modules_satisfy_the_presentation(p in params(6)) {
        let r = construct(&p);
        prop_assert!(r.is_verified());
        prop_assert_eq!(r.central_values().scalars(), Some(p.central_scalars()));
        let traces = [r.a().trace(), r.b().trace(), r.c().trace()];
        let expected = [&p.a, &p.b, &p.c].map(|x| trace_formula(&s_value(x), p.d));
        prop_assert_eq!(traces, expected);
    }

    #[test]
    fn twists_of_verified_modules_are_verified(p in params(4)) {
        let r = construct(&p);
        for g in [D3::SIGMA, D3::TAU] {
            prop_assert!(r.twist(g).is_verified());
        }
    }

    #[test]
    fn casimirs_are_central(p in params(4)) {
        let r = construct(&p);
        let om = r.casimirs();
        for o in [&om.omega_a, &om.omega_b, &om.omega_c] {
            for y in r.generators() {
                prop_assert!(o.commutator(y).is_zero());
            }
        }
    }

    #[test]
    fn diagonalizability_matches_the_parameter_test(p in irreducible(5)) {
        let r = construct(&p);
        let flags = p.diagonalizable_flags();
        for (k, x) in [r.a(), r.b(), r.c()].into_iter().enumerate() {
            prop_assert_eq!(flags[k], minimal_polynomial(x).is_squarefree());
        }
    }

    #[test]
    fn class_is_unchanged_by_reflecting_a_parameter(p in irreducible(4)) {
        let reflect = |x: &Q| &(-x) - &Q::ONE;
        let q = RdParams::new(reflect(&p.a), p.b.clone(), reflect(&p.c), p.d);
        prop_assert!(q.is_irreducible());
        prop_assert_eq!(p.iso_class(), q.iso_class());
        prop_assert_eq!(iso_class(&construct(&q), q.d).unwrap(), p.iso_class());
    }
}

// Leonard checker

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_matches_criterion_and_ignores_order(p in irreducible(4)) {
        let r = construct(&p);
        let ops = [r.a(), r.b(), r.c()];
        let expected = p.leonard_criterion().unwrap();
        for [i, j, k] in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let verdict = check(ops[i], ops[j], ops[k], [None, None, None]).unwrap().verdict;
            prop_assert_eq!(verdict, expected);
        }
    }

    #[test]
    fn verdict_is_invariant_under_conjugation(
        (p, t) in irreducible(4).prop_flat_map(|p| { let n = p.d + 1; (Just(p), conjugator(n)) })
    ) {
        let r = construct(&p);
        let t_inv = inverse(&t).unwrap();
        let conj = |m: &ExactMatrix| &(&t * m) * &t_inv;
        let before = check(r.a(), r.b(), r.c(), [None, None, None]).unwrap().verdict;
        let after = check(&conj(r.a()), &conj(r.b()), &conj(r.c()), [None, None, None]).unwrap().verdict;
        prop_assert_eq!(before, after);
    }
}

// decompositions and the suite

proptest! {
    #![proptest_config(ProptestConfig::with_cases(7))]

    #[test]
    fn ln_decomposition_is_complete_and_invariant(n in 0usize..=6) {
        let report = decompose_ln(n).unwrap();
        prop_assert!(report.passes());
        let total: usize = report.summands.iter().map(|s| s.dim * s.multiplicity).sum();
        prop_assert_eq!(total, report.ambient_dim);
        let r = sharp_pullback(&build_ln(n));
        let mut span = Subspace::zero(report.ambient_dim);
        for s in &report.summands {
            for op in r.generators() {
                prop_assert!(s.witness.is_invariant_under(op));
            }
            span = span.sum(&s.witness);
        }
        prop_assert_eq!(span.dim(), report.ambient_dim);
        for s in &report.summands {
            prop_assert_eq!(s.leonard, Some(true));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn suite_reports_are_reproducible(seed in any::<u64>(), workers in 1usize..=4) {
        let cfg = SuiteConfig {
            targets: vec![Target::RdConstruct, Target::RdCriteria],
            d: IntRange::new(0, 2).unwrap(),
            samples: 3,
            seed,
            ..SuiteConfig::default()
        };
        let first = run_suite(&cfg).unwrap();
        let again = run_suite(&SuiteConfig { workers, ..cfg.clone() }).unwrap();
        prop_assert_eq!(first.to_json(), again.to_json());
        prop_assert_eq!(first.exit_code() == 0, first.pass);
    }
}
