use std::collections::BTreeMap;

use proptest::prelude::*;
use sullivan_core::catalog::{self, poly};
use sullivan_core::cdga::FreeCdga;
use sullivan_core::graded::{q, Context, Monomial, Polynomial, Scalar};
use sullivan_core::morphism::{exact_difference_homotopy, CdgaMorphism, HomotopyVerdict};

fn element(model: &FreeCdga, degree: u32, coeffs: &[i64]) -> Polynomial {
    let basis = model.context().monomial_basis(degree);
    let c: Vec<Scalar> = (0..basis.len()).map(|i| q(coeffs[i % coeffs.len()])).collect();
    Polynomial::from_coordinates(model.context(), &basis, &c)
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..10)
}

fn monomial(ctx: &Context, gens: &[usize]) -> Option<(i8, Monomial)> {
    let mut acc = (1i8, Monomial::one());
    for &g in gens {
        let (s, m) = ctx.multiply_monomials(&acc.1, &Monomial::generator(g % ctx.len())).unwrap()?;
        acc = (acc.0 * s, m);
    }
    Some(acc)
}

/// Mixed parities, non-minimal: `x : 2`, `v : 3`, `y : 4`, `w : 7`.
fn mixed() -> FreeCdga {
    catalog::cp_fib(2).unwrap()
}

/// `a, b : 2`, `u, v : 3`, `t : 4`, `s : 5` with `du = ab`, `dv = a²`,
/// `dt = a u - b v`.
fn two_stage() -> FreeCdga {
    FreeCdga::build(&[("a", 2), ("b", 2), ("u", 3), ("v", 3), ("t", 4), ("s", 5)], |ctx| {
        Ok(vec![
            ("u".into(), poly(ctx, "a b")?),
            ("v".into(), poly(ctx, "a^2")?),
            ("t".into(), poly(ctx, "a u - b v")?),
        ])
    })
    .unwrap()
}

fn hopf() -> FreeCdga {
    catalog::hopf_total(3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 600, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn monomial_koszul(a in prop::collection::vec(0usize..16, 0..5), b in prop::collection::vec(0usize..16, 0..5)) {
        let m = mixed();
        let ctx = m.context();
        if let (Some((_, ma)), Some((_, mb))) = (monomial(ctx, &a), monomial(ctx, &b)) {
            let ab = ctx.multiply_monomials(&ma, &mb).unwrap();
            let ba = ctx.multiply_monomials(&mb, &ma).unwrap();
            match (ab, ba) {
                (Some((s1, m1)), Some((s2, m2))) => {
                    prop_assert_eq!(&m1, &m2);
                    let parity = ctx.monomial_degree(&ma) * ctx.monomial_degree(&mb) % 2;
                    prop_assert_eq!(s1, if parity == 1 { -s2 } else { s2 });
                }
                (None, None) => {}
                other => prop_assert!(false, "asymmetric zero: {:?}", other),
            }
        }
    }

    #[test]
    fn associative_and_distributive(
        d in (0u32..=8, 0u32..=8, 0u32..=8),
        c in (coeffs(), coeffs(), coeffs()),
        e in 0u32..=8,
        ce in coeffs(),
    ) {
        let m = mixed();
        let x = element(&m, d.0, &c.0);
        let y = element(&m, d.1, &c.1);
        let z = element(&m, d.2, &c.2);
        let w = element(&m, e, &ce);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &w), &(&x * &y) + &(&x * &w));
        prop_assert_eq!(&(&y + &w) * &x, &(&y * &x) + &(&w * &x));
    }

    #[test]
    fn coboundary_round_trip(k in 0u32..=14, c in coeffs()) {
        let m = mixed();
        let target = m.d(&element(&m, k, &c)).unwrap();
        let eta = m.is_coboundary(&target).unwrap().expect("exact");
        prop_assert_eq!(m.d(&eta).unwrap(), target);
    }

    #[test]
    fn difference_relation_is_symmetric(c in prop::collection::vec(-2i64..=2, 5)) {
        // g(s) = s + c0 (a u - b v) + c1 s and g(t) = t + c2 a^2 + c3 a b + c4 b^2;
        // the difference is exact exactly when c1 = c4 = 0.
        let m = two_stage();
        let ctx = m.context();
        let p = |text: &str| poly(ctx, text).unwrap();
        let mut images: Vec<(String, Polynomial)> =
            m.generators().iter().map(|g| (g.name().to_string(), m.gen(g.name()).unwrap())).collect();
        let shift_s = &p("a u - b v").scale(&q(c[0])) + &p("s").scale(&q(c[1]));
        let shift_t = &(&p("a^2").scale(&q(c[2])) + &p("a b").scale(&q(c[3]))) + &p("b^2").scale(&q(c[4]));
        for (name, img) in images.iter_mut() {
            if name == "s" {
                *img = &*img + &shift_s;
            } else if name == "t" {
                *img = &*img + &shift_t;
            }
        }
        let f = CdgaMorphism::identity(&m);
        let g = CdgaMorphism::new(&m, &m, images).unwrap();
        let fg = exact_difference_homotopy(&f, &g).unwrap().verdict;
        let gf = exact_difference_homotopy(&g, &f).unwrap().verdict;
        let expected = c[1] == 0 && c[4] == 0;
        prop_assert_eq!(fg.is_homotopic(), expected, "{:?}", fg);
        prop_assert_eq!(gf.is_homotopic(), expected, "{:?}", gf);
        prop_assert_eq!(exact_difference_homotopy(&g, &g).unwrap().verdict, HomotopyVerdict::Identical);
    }

    #[test]
    fn zero_differential_never_homotopic_by_criterion(c in coeffs(), k in 1u32..=4) {
        let m = catalog::su(5).unwrap();
        let ctx = m.context();
        let gens: Vec<String> = m.generators().iter().map(|g| g.name().to_string()).collect();
        let target = &gens[gens.len() - 1];
        let deg = ctx.degree_of(ctx.lookup(target).unwrap());
        let shift = element(&m, deg, &c).scale(&q(k as i64));
        let images: Vec<(String, Polynomial)> = gens
            .iter()
            .map(|g| {
                let v = m.gen(g).unwrap();
                (g.clone(), if g == target { &v + &shift } else { v })
            })
            .collect();
        let f = CdgaMorphism::identity(&m);
        let g = CdgaMorphism::new(&m, &m, images).unwrap();
        let verdict = exact_difference_homotopy(&f, &g).unwrap().verdict;
        if shift.is_zero() {
            prop_assert_eq!(verdict, HomotopyVerdict::Identical);
        } else {
            prop_assert_eq!(verdict, HomotopyVerdict::DistinctOnCohomology);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn leibniz(p in 0u32..=12, r in 0u32..=12, cx in coeffs(), cy in coeffs()) {
        let m = hopf();
        let x = element(&m, p, &cx);
        let y = element(&m, r, &cy);
        let sign = if p % 2 == 1 { q(-1) } else { q(1) };
        let rhs = &(&m.d(&x).unwrap() * &y) + &(&x * &m.d(&y).unwrap()).scale(&sign);
        prop_assert_eq!(m.d(&(&x * &y)).unwrap(), rhs);
    }
}

/// Every exponent vector of total degree `≤ top`, bucketed by degree.
fn brute_basis(ctx: &Context, top: u32) -> BTreeMap<u32, Vec<Vec<(usize, u32)>>> {
    let vars = ctx.variables();
    let mut out: BTreeMap<u32, Vec<Vec<(usize, u32)>>> = BTreeMap::new();
    let mut exps = vec![0u32; vars.len()];
    loop {
        let degree: u32 = exps.iter().zip(vars).map(|(e, v)| e * v.degree()).sum();
        if degree <= top {
            let factors: Vec<(usize, u32)> = exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect();
            out.entry(degree).or_default().push(factors);
        }
        let mut i = 0;
        loop {
            if i == vars.len() {
                return out;
            }
            let cap = if vars[i].degree() % 2 == 1 { 1 } else { top / vars[i].degree() };
            if exps[i] < cap {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn monomial_basis_matches_enumeration() {
    let models = [
        catalog::al_rigid().unwrap(),
        catalog::u(6).unwrap(),
        catalog::sp(5).unwrap(),
        catalog::hopf_total(3).unwrap(),
        catalog::cpn(4).unwrap(),
        mixed(),
        two_stage(),
        catalog::rigid_extension(53, 67).unwrap(),
    ];
    for m in &models {
        let ctx = m.context();
        let brute = brute_basis(ctx, 140);
        for k in 0..=140 {
            let mut got: Vec<Vec<(usize, u32)>> = ctx.monomial_basis(k).iter().map(|m| m.factors().to_vec()).collect();
            let mut want = brute.get(&k).cloned().unwrap_or_default();
            got.sort();
            want.sort();
            assert_eq!(got, want, "degree {}", k);
        }
    }
}

#[test]
fn euler_characteristic_on_zero_differential_models() {
    for m in [
        catalog::u(4).unwrap(),
        catalog::sp(3).unwrap(),
        catalog::product_odd(3, 5).unwrap(),
        FreeCdga::free(&[("x", 2), ("y", 3), ("z", 4)]).unwrap(),
    ] {
        assert!(m.has_zero_differential());
        let bound = m.degree_bound().min(24);
        let from_cohomology: i64 = (0..=bound)
            .map(|k| {
                let dim = m.cohomology(k).unwrap().dimension as i64;
                if k % 2 == 0 {
                    dim
                } else {
                    -dim
                }
            })
            .sum();
        assert_eq!(from_cohomology, m.euler_characteristic_of_algebra(bound));
    }
}

#[test]
fn cohomology_representatives_are_cocycles() {
    for m in [catalog::cpn(3).unwrap(), hopf(), mixed(), catalog::al_rigid().unwrap()] {
        for k in 0..=m.degree_bound().min(30) {
            for r in m.cohomology(k).unwrap().representatives {
                assert!(m.is_cocycle(&r).unwrap());
                assert!(m.is_coboundary(&r).unwrap().is_none());
            }
        }
    }
}

#[test]
fn loop_models_square_to_zero() {
    for base in [catalog::cpn(3).unwrap(), catalog::sphere(4).unwrap(), catalog::product_odd(3, 5).unwrap(), mixed()] {
        let l = base.loop_model().unwrap();
        assert!(l.validate().is_valid());
        let s = base.loop_suspension(l.context()).unwrap();
        for g in l.generators() {
            let v = l.gen(g.name()).unwrap();
            assert!(s.apply(&s.apply(&v).unwrap()).unwrap().is_zero());
            assert!(l.d(&l.d(&v).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn rigid_differentials_are_cocycles() {
    for m in [catalog::al_rigid().unwrap(), catalog::al_nonuniversal().unwrap()] {
        for i in 0..m.generators().len() {
            assert!(m.is_cocycle(m.d_generator(i)).unwrap());
        }
    }
}
