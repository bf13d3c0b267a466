use sullivan_core::catalog::*;
use sullivan_core::emap::*;
use sullivan_core::graded::{q, Polynomial};
use sullivan_core::morphism::{exact_difference_homotopy, CdgaMorphism};

fn p(m: &sullivan_core::cdga::FreeCdga, text: &str) -> Polynomial {
    poly(m.context(), text).unwrap()
}

#[test]
fn hopf_post_square_has_no_solution() {
    for n in 1..=3 {
        let prob = SquareProblem::new(hopf_bridge(n).unwrap(), hopf_class_two(n).unwrap(), Direction::E).unwrap();
        let out = solve_post_square(&prob).unwrap();
        match out {
            SquareOutcome::NoSolution { residual, .. } => {
                let total = hopf_total(n).unwrap();
                assert_eq!(residual, p(&total, &format!("- y^{} v", n)));
            }
            other => panic!("n = {}: {:?}", n, other.verdict()),
        }
    }
}

#[test]
fn hopf_class_two_acts_by_two() {
    let f = hopf_class_two(2).unwrap();
    let m = hopf_total(2).unwrap();
    let top = p(&m, "w - y^2 v");
    assert_eq!(f.apply(&top).unwrap(), top.scale(&q(2)));
    assert!(m.is_cocycle(&top).unwrap());
    assert!(m.is_coboundary(&top).unwrap().is_none());
}

#[test]
fn hopf_pre_square_scales() {
    let n = 2;
    let base = hopf_base(n).unwrap();
    let known = CdgaMorphism::new(
        &base,
        &base,
        vec![("y".into(), p(&base, "2 y")), ("w".into(), p(&base, "8 w"))],
    )
    .unwrap();
    let prob = SquareProblem::new(hopf_bridge(n).unwrap(), known, Direction::CoE).unwrap();
    let out = solve_pre_square(&prob).unwrap();
    let sol = out.solution().expect("solution");
    let total = hopf_total(n).unwrap();
    assert_eq!(sol.unknown.image("v").unwrap(), &p(&total, "2 v"));
    assert_eq!(sol.unknown.image("y").unwrap(), &p(&total, "2 y"));
    assert_eq!(sol.unknown.image("w").unwrap(), &p(&total, "8 w"));
}

#[test]
fn su6_sign_square_fails() {
    let prob = SquareProblem::new(su3xsu3_su6().unwrap(), su3xsu3_sign_auto().unwrap(), Direction::E).unwrap();
    match solve_post_square(&prob).unwrap() {
        SquareOutcome::NoSolution { residual, .. } => {
            assert_eq!(residual, p(&su3xsu3().unwrap(), "-2 w1"));
        }
        other => panic!("{}", other.verdict()),
    }
}

#[test]
fn loop_divisor_square_fails() {
    let known = loop_divisor_auto(3, 5).unwrap();
    let bridge = free_loop_ev(&product_odd(3, 5).unwrap()).unwrap();
    let prob = SquareProblem::new(bridge, known, Direction::E).unwrap();
    assert_eq!(solve_post_square(&prob).unwrap().verdict(), "no_solution");
}

#[test]
fn orbit_swap_fails_and_mixed_solves() {
    let prob = SquareProblem::new(
        orbit_map(OrbitVariant::Swap, 1).unwrap(),
        orbit_auto(OrbitVariant::Swap, 1).unwrap(),
        Direction::CoE,
    )
    .unwrap();
    match solve_pre_square(&prob).unwrap() {
        SquareOutcome::NoSolution { residual, .. } => {
            let x = p(&orbit_fiber().unwrap(), "x");
            assert!(residual == x || residual == -&x);
        }
        other => panic!("{}", other.verdict()),
    }
    let prob = SquareProblem::new(
        orbit_map(OrbitVariant::Mixed, 2).unwrap(),
        orbit_auto(OrbitVariant::Mixed, 2).unwrap(),
        Direction::CoE,
    )
    .unwrap();
    let out = solve_pre_square(&prob).unwrap();
    let sol = out.solution().expect("solution");
    let (a, b) = prob.composites(&sol.unknown).unwrap();
    assert!(exact_difference_homotopy(&a, &b).unwrap().verdict.is_homotopic());
}

#[test]
fn homogeneous_projection_square_solves() {
    let prob = SquareProblem::new(
        homogeneous_projection(Homogeneous::U, 4, 2).unwrap(),
        homogeneous_u_auto(4, 2).unwrap(),
        Direction::CoE,
    )
    .unwrap();
    let out = solve_pre_square(&prob).unwrap();
    let sol = out.solution().expect("solution");
    let (a, b) = prob.composites(&sol.unknown).unwrap();
    assert!(exact_difference_homotopy(&a, &b).unwrap().verdict.is_homotopic());
}

#[test]
fn rigid_chain_composes() {
    let f = rigid_chain_f(53, 67).unwrap();
    let g = rigid_chain_g(53, 67).unwrap();
    let on_v = FamilyRule::new(&["a"]).scale("v", &[1]);
    let on_m = FamilyRule::new(&["a"]).scale("v", &[1]).scale("w", &[-1]);
    let on_w = FamilyRule::new(&["a"]).scale("w", &[-1]);
    let chain = [
        ChainLink {
            bridge: f,
            direction: Direction::E,
            rule: on_v,
            partner: on_m.clone(),
        },
        ChainLink {
            bridge: g,
            direction: Direction::CoE,
            rule: on_m,
            partner: on_w.clone(),
        },
    ];
    let r = verify_e_chain(&chain, &on_w, &default_samples(1)).unwrap();
    assert!(r.passed, "{:?}", r.failures);
}

#[test]
fn rigid_extension_forces_product_one() {
    let m = rigid_extension(53, 67).unwrap();
    assert!(m.is_minimal());
    let c = extension_scaling_constraint(&m, "z", "v", "w").unwrap();
    assert!(c.product_forced_one(1, 1));
    assert!(c.corrections_are_cocycles);
}

#[test]
fn odd_product_chain() {
    let (m, n) = (3, 5);
    let rule = FamilyRule::new(&["a", "b"]).scale("x", &[1, 0]).scale("y", &[0, 1]);
    let mid = rule.clone().scale("v1", &[1, 1]);
    let end = mid.clone().scale("v2", &[2, 1]);
    let chain = [
        ChainLink {
            bridge: e_projection(m, n).unwrap(),
            direction: Direction::CoE,
            rule,
            partner: mid.clone(),
        },
        ChainLink {
            bridge: e_prime_projection(m, n).unwrap(),
            direction: Direction::CoE,
            rule: mid,
            partner: end.clone(),
        },
    ];
    let r = verify_e_chain(&chain, &end, &default_samples(2)).unwrap();
    assert!(r.passed, "{:?}", r.failures);
}

#[test]
fn correction_table() {
    for ((m, n), dims) in [
        ((4, 3), (1, 0)),
        ((6, 5), (1, 0)),
        ((4, 7), (1, 1)),
        ((6, 11), (1, 1)),
        ((4, 9), (0, 0)),
    ] {
        let prod = correction_class_dimension(&product_ev(m, n).unwrap(), "z").unwrap().dimension;
        let wedge = correction_class_dimension(&wedge_trunc(m, n).unwrap(), "z").unwrap().dimension;
        assert_eq!((prod, wedge), dims, "(m, n) = ({}, {})", m, n);
    }
}

#[test]
fn nonuniversal_generator_map_is_valid() {
    let f = nonuniversal_generator_map().unwrap();
    assert!(f.validate().is_valid());
}
