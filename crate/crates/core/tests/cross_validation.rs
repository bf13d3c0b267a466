use sullivan_core::catalog::*;
use sullivan_core::emap::*;

fn pre_square_verdict(family: LieFamily, m: u32, n: u32) -> &'static str {
    let bridge = lie_inclusion(family, m, n).unwrap();
    let known = universal_perturbation(bridge.source()).unwrap();
    let prob = SquareProblem::new(bridge, known, Direction::CoE).unwrap();
    solve_pre_square(&prob).unwrap().verdict()
}

fn check_family(family: LieFamily, top: u32) {
    for n in 4..=top {
        for m in 3..n {
            let a = family.degrees(m);
            let b: Vec<u32> = family.degrees(n)[a.len()..].to_vec();
            let crit = co_e_subset_criterion(&a, &b).unwrap().verdict;
            let solved = pre_square_verdict(family, m, n);
            let expected = if crit == CriterionVerdict::Pass { "solution" } else { "no_solution" };
            assert_eq!(solved, expected, "{} m = {} n = {}", family.name(), m, n);
        }
    }
}

#[test]
fn unitary_agrees() {
    check_family(LieFamily::U, 10);
}

#[test]
fn special_unitary_agrees() {
    check_family(LieFamily::SU, 10);
}

#[test]
fn symplectic_agrees() {
    check_family(LieFamily::Sp, 20);
}
