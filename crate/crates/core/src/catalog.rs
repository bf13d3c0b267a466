//! Built-in models and morphisms, each validated when built.
//!
//! Typed builders live at module level; [`catalog_model`] and
//! [`catalog_morphism`] dispatch on an entry name with positional string
//! arguments, which is what the command line uses.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cdga::FreeCdga;
use crate::error::{AlgebraError, Result};
use crate::graded::{q, Context, Polynomial, Scalar, Variable};
use crate::morphism::CdgaMorphism;

// ---------------------------------------------------------------- helpers

/// Parses a whitespace-separated polynomial such as `"x1^4 y1 - 1/2 x2"`.
/// Factors are multiplied left to right.
pub fn poly(ctx: &Arc<Context>, text: &str) -> Result<Polynomial> {
    let mut total = Polynomial::zero(ctx);
    let mut term: Option<Polynomial> = None;
    let mut sign = q(1);
    let flush = |total: &mut Polynomial, term: &mut Option<Polynomial>, sign: &Scalar| {
        if let Some(t) = term.take() {
            *total = &*total + &t.scale(sign);
        }
    };
    for tok in text.split_whitespace() {
        match tok {
            "+" | "-" => {
                flush(&mut total, &mut term, &sign);
                sign = if tok == "-" { q(-1) } else { q(1) };
            }
            _ => {
                let (neg, tok) = match tok.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, tok),
                };
                let factor = if tok.starts_with(|c: char| c.is_ascii_digit()) {
                    Polynomial::constant(ctx, parse_rational(tok)?)
                } else {
                    let (name, exp) = match tok.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u32>()
                                .map_err(|_| AlgebraError::InvalidParameter(format!("bad exponent in {}", tok)))?,
                        ),
                        None => (tok, 1),
                    };
                    Polynomial::var(ctx, name)?.pow(exp)
                };
                let factor = if neg { -factor } else { factor };
                term = Some(match term {
                    Some(t) => &t * &factor,
                    None => factor,
                });
            }
        }
    }
    flush(&mut total, &mut term, &sign);
    Ok(total)
}

fn parse_rational(tok: &str) -> Result<Scalar> {
    let bad = || AlgebraError::InvalidParameter(format!("bad number {}", tok));
    match tok.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.parse().map_err(|_| bad())?;
            let b: i64 = b.parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(crate::graded::q_frac(a, b))
        }
        None => Ok(q(tok.parse().map_err(|_| bad())?)),
    }
}

fn model(gens: &[(String, u32)], diffs: &[(&str, String)]) -> Result<FreeCdga> {
    let ctx = Context::new(gens.iter().map(|(n, d)| Variable::new(n.clone(), *d)))?;
    let d = diffs
        .iter()
        .map(|(g, p)| Ok((g.to_string(), poly(&ctx, p)?)))
        .collect::<Result<Vec<_>>>()?;
    FreeCdga::new(&ctx, d)
}

fn g(name: &str, degree: u32) -> (String, u32) {
    (name.to_string(), degree)
}

fn morphism(source: &FreeCdga, target: &FreeCdga, images: &[(&str, &str)]) -> Result<CdgaMorphism> {
    let tctx = target.context();
    let imgs = images
        .iter()
        .map(|(n, p)| Ok((n.to_string(), poly(tctx, p)?)))
        .collect::<Result<Vec<_>>>()?;
    CdgaMorphism::new(source, target, imgs)
}

fn check(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(AlgebraError::InvalidParameter(msg.into()))
    }
}

fn check_range(name: &str, v: u32, lo: u32, hi: u32) -> Result<()> {
    check(lo <= v && v <= hi, format!("{} = {} outside {}..={}", name, v, lo, hi))
}

fn check_odd(name: &str, v: u32) -> Result<()> {
    check(v % 2 == 1, format!("{} = {} must be odd", name, v))
}

// ---------------------------------------------------------------- models

/// `S^n`: `Λ(w)` for odd `n`; `Λ(x, y)`, `dy = x²` for even `n`.
pub fn sphere(n: u32) -> Result<FreeCdga> {
    check_range("n", n, 1, 120)?;
    if n % 2 == 1 {
        model(&[g("w", n)], &[])
    } else {
        model(&[g("x", n), g("y", 2 * n - 1)], &[("y", "x^2".into())])
    }
}

/// `ℂP^n`: `Λ(x, v)`, `|x| = 2`, `dv = x^{n+1}`.
pub fn cpn(n: u32) -> Result<FreeCdga> {
    check_range("n", n, 1, 30)?;
    model(&[g("x", 2), g("v", 2 * n + 1)], &[("v", format!("x^{}", n + 1))])
}

/// `ℍP^n`: `Λ(x, v)`, `|x| = 4`, `dv = x^{n+1}`.
pub fn hpn(n: u32) -> Result<FreeCdga> {
    check_range("n", n, 1, 30)?;
    model(&[g("x", 4), g("v", 4 * n + 3)], &[("v", format!("x^{}", n + 1))])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieFamily {
    U,
    SU,
    Sp,
}

impl LieFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(LieFamily::U),
            "su" => Ok(LieFamily::SU),
            "sp" => Ok(LieFamily::Sp),
            _ => Err(AlgebraError::InvalidParameter(format!("unknown Lie family {}", s))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LieFamily::U => "u",
            LieFamily::SU => "su",
            LieFamily::Sp => "sp",
        }
    }

    pub fn max_rank(&self) -> u32 {
        match self {
            LieFamily::Sp => 30,
            _ => 20,
        }
    }

    /// Generator degrees of the group's model.
    pub fn degrees(&self, n: u32) -> Vec<u32> {
        match self {
            LieFamily::U => (1..=n).map(|i| 2 * i - 1).collect(),
            LieFamily::SU => (1..n).map(|i| 2 * i + 1).collect(),
            LieFamily::Sp => (1..=n).map(|i| 4 * i - 1).collect(),
        }
    }

    fn check(&self, n: u32) -> Result<()> {
        let lo = if *self == LieFamily::SU { 2 } else { 1 };
        check_range("n", n, lo, self.max_rank())
    }
}

/// `(Λ(v_1, …), 0)` with the family's degrees.
pub fn lie_group(family: LieFamily, n: u32) -> Result<FreeCdga> {
    family.check(n)?;
    let gens: Vec<(String, u32)> = family
        .degrees(n)
        .into_iter()
        .enumerate()
        .map(|(i, d)| (format!("v{}", i + 1), d))
        .collect();
    model(&gens, &[])
}

pub fn u(n: u32) -> Result<FreeCdga> {
    lie_group(LieFamily::U, n)
}

pub fn su(n: u32) -> Result<FreeCdga> {
    lie_group(LieFamily::SU, n)
}

pub fn sp(n: u32) -> Result<FreeCdga> {
    lie_group(LieFamily::Sp, n)
}

/// Minimal model of `G_n / G_m`: the generators of `G_n` beyond the first
/// `m - 1` (for SU) or `m` (otherwise), with zero differential.
pub fn lie_quotient(family: LieFamily, n: u32, m: u32) -> Result<FreeCdga> {
    family.check(n)?;
    check(m < n && m >= 1, "need 1 <= m < n")?;
    let skip = family.degrees(m).len();
    let gens: Vec<(String, u32)> = family
        .degrees(n)
        .into_iter()
        .enumerate()
        .skip(skip)
        .map(|(i, d)| (format!("v{}", i + 1), d))
        .collect();
    model(&gens, &[])
}

/// `Λ(u1, w1, u2, w2)` with `|u_i| = |w_i| = 2i + 1`.
pub fn su3xsu3() -> Result<FreeCdga> {
    model(&[g("u1", 3), g("w1", 3), g("u2", 5), g("w2", 5)], &[])
}

/// Base of the Hopf fibration: `Λ(y, w)`, `|y| = 2`, `dw = y^{n+1}`.
pub fn hopf_base(n: u32) -> Result<FreeCdga> {
    check_range("n", n, 1, 20)?;
    model(&[g("y", 2), g("w", 2 * n + 1)], &[("w", format!("y^{}", n + 1))])
}

/// Relative model of `S^{2n+1} → ℂP^n`: `Λ(y, w, v)`, `dw = y^{n+1}`, `dv = y`.
pub fn hopf_total(n: u32) -> Result<FreeCdga> {
    check_range("n", n, 1, 20)?;
    model(
        &[g("y", 2), g("w", 2 * n + 1), g("v", 1)],
        &[("w", format!("y^{}", n + 1)), ("v", "y".into())],
    )
}

fn check_odd_pair(m: u32, n: u32) -> Result<()> {
    check_range("m", m, 1, 61)?;
    check_range("n", n, 1, 61)?;
    check_odd("m", m)?;
    check_odd("n", n)
}

/// `Λ(w1, w2)`, `|w1| = m`, `|w2| = n`, both odd.
pub fn sphere_bundle_base(m: u32, n: u32) -> Result<FreeCdga> {
    check_odd_pair(m, n)?;
    model(&[g("w1", m), g("w2", n)], &[])
}

/// `Λ(w1, w2, u)`, `|u| = m + n - 1`, `Du = w1 w2`.
pub fn sphere_bundle(m: u32, n: u32) -> Result<FreeCdga> {
    check_odd_pair(m, n)?;
    model(&[g("w1", m), g("w2", n), g("u", m + n - 1)], &[("u", "w1 w2".into())])
}

/// `Λ(w)`, `|w| = n`.
pub fn odd_fib_base(m: u32, n: u32) -> Result<FreeCdga> {
    check_odd_pair(m, n)?;
    check(m != n, "need m != n")?;
    model(&[g("w", n)], &[])
}

/// `Λ(w, v, u)`, `|w| = n`, `|v| = m`, `|u| = m + n - 1`, `Du = w v`.
pub fn odd_fib(m: u32, n: u32) -> Result<FreeCdga> {
    check_odd_pair(m, n)?;
    check(m != n, "need m != n")?;
    model(&[g("w", n), g("v", m), g("u", m + n - 1)], &[("u", "w v".into())])
}

/// `Λ(y, w)`, `|y| = 2n`, `dw = y²`.
pub fn cp_fib_base(n: u32) -> Result<FreeCdga> {
    check_range("n", n, 1, 20)?;
    model(&[g("y", 2 * n), g("w", 4 * n - 1)], &[("w", "y^2".into())])
}

/// `Λ(y, w, x, v)`, `Dw = y²`, `Dv = y - x^n`.
pub fn cp_fib(n: u32) -> Result<FreeCdga> {
    check_range("n", n, 1, 20)?;
    model(
        &[g("y", 2 * n), g("w", 4 * n - 1), g("x", 2), g("v", 2 * n - 1)],
        &[("w", "y^2".into()), ("v", format!("y - x^{}", n))],
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneous {
    /// `U(n)/U(m)`
    U,
    /// `SU(n)/SU(m)`
    SU,
    /// `SU(2)/U(1)`
    Su2U1,
}

impl Homogeneous {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(Homogeneous::U),
            "su" => Ok(Homogeneous::SU),
            "su2_u1" => Ok(Homogeneous::Su2U1),
            _ => Err(AlgebraError::InvalidParameter(format!("unknown homogeneous space {}", s))),
        }
    }
}

fn homogeneous_check(kind: Homogeneous, n: u32, m: u32) -> Result<()> {
    match kind {
        Homogeneous::U => {
            check_range("n", n, 2, 12)?;
            check(m >= 1 && m < n, "need 1 <= m < n")
        }
        Homogeneous::SU => {
            check_range("n", n, 3, 12)?;
            check(m >= 2 && m < n, "need 2 <= m < n")
        }
        Homogeneous::Su2U1 => Ok(()),
    }
}

/// Non-minimal model `(ΛV_BH ⊗ ΛV_G, d)` with `d y_i` the restriction of the
/// matching universal class. For `U(n)/U(m)`: `x_i` (`i <= m`, degree `2i`),
/// `y_j` (`j <= n`, degree `2j - 1`), `dy_i = x_i` for `i <= m`.
/// For `SU(n)/SU(m)`: `x_i` (`2 <= i <= m`), `y_j` (`j < n`, degree `2j + 1`),
/// `dy_j = x_{j+1}`. For `SU(2)/U(1)`: `Λ(t, y)`, `dy = -t²`.
pub fn homogeneous(kind: Homogeneous, n: u32, m: u32) -> Result<FreeCdga> {
    homogeneous_check(kind, n, m)?;
    match kind {
        Homogeneous::U => {
            let mut gens: Vec<(String, u32)> = (1..=m).map(|i| (format!("x{}", i), 2 * i)).collect();
            gens.extend((1..=n).map(|j| (format!("y{}", j), 2 * j - 1)));
            let diffs: Vec<(String, String)> = (1..=m).map(|i| (format!("y{}", i), format!("x{}", i))).collect();
            let diffs: Vec<(&str, String)> = diffs.iter().map(|(a, b)| (a.as_str(), b.clone())).collect();
            model(&gens, &diffs)
        }
        Homogeneous::SU => {
            let mut gens: Vec<(String, u32)> = (2..=m).map(|i| (format!("x{}", i), 2 * i)).collect();
            gens.extend((1..n).map(|j| (format!("y{}", j), 2 * j + 1)));
            let diffs: Vec<(String, String)> = (1..m).map(|j| (format!("y{}", j), format!("x{}", j + 1))).collect();
            let diffs: Vec<(&str, String)> = diffs.iter().map(|(a, b)| (a.as_str(), b.clone())).collect();
            model(&gens, &diffs)
        }
        Homogeneous::Su2U1 => model(&[g("t", 2), g("y", 3)], &[("y", "- t^2".into())]),
    }
}

/// Model of `G` in [`homogeneous`]: the `y` generators with zero differential,
/// renamed `v`.
pub fn homogeneous_group(kind: Homogeneous, n: u32, m: u32) -> Result<FreeCdga> {
    homogeneous_check(kind, n, m)?;
    match kind {
        Homogeneous::U => u(n),
        Homogeneous::SU => su(n),
        Homogeneous::Su2U1 => su(2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitVariant {
    /// `Dy = x²`, `Dz = t²`
    Swap,
    /// `Dy = x² + a t²`, `Dz = x t`
    Mixed,
}

impl OrbitVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "swap" => Ok(OrbitVariant::Swap),
            "mixed" => Ok(OrbitVariant::Mixed),
            _ => Err(AlgebraError::InvalidParameter(format!("unknown orbit variant {}", s))),
        }
    }
}

/// Borel construction of a free circle action on `S² × S³`:
/// `Λ(t, x, y, z)` with `|t| = |x| = 2`, `|y| = |z| = 3`.
pub fn orbit_borel(variant: OrbitVariant, a: i64) -> Result<FreeCdga> {
    let gens = [g("t", 2), g("x", 2), g("y", 3), g("z", 3)];
    match variant {
        OrbitVariant::Swap => model(&gens, &[("y", "x^2".into()), ("z", "t^2".into())]),
        OrbitVariant::Mixed => {
            check(a != 0, "a must be nonzero")?;
            model(&gens, &[("y", format!("x^2 + {} t^2", a)), ("z", "x t".into())])
        }
    }
}

/// `S² × S³`: `Λ(x, y, z)`, `dy = x²`.
pub fn orbit_fiber() -> Result<FreeCdga> {
    model(&[g("x", 2), g("y", 3), g("z", 3)], &[("y", "x^2".into())])
}

const ALPHA_RIGID: &str = "x1^4 y1 x2 y2 x2 - x1^4 y1 x2 x1 y3 - x1^4 x1 y2 y2 x2 + x1^4 x1 y2 x1 y3 + x1^15 + x2^12";

fn rigid_gens(x1: u32, x2: u32, y1: u32, y2: u32, y3: u32) -> Vec<(String, u32)> {
    vec![g("x1", x1), g("x2", x2), g("y1", y1), g("y2", y2), g("y3", y3), g("z", 119)]
}

/// The rigid model with `|x1| = 8`, `|x2| = 10`, `dz = α`.
pub fn al_rigid() -> Result<FreeCdga> {
    model(
        &rigid_gens(8, 10, 33, 35, 37),
        &[
            ("y1", "x1^3 x2".into()),
            ("y2", "x1^2 x2^2".into()),
            ("y3", "x1 x2^3".into()),
            ("z", ALPHA_RIGID.into()),
        ],
    )
}

/// The model with `|x1| = 10`, `|x2| = 12` and
/// `dz = x2 (y1 x2 - x1 y2)(y2 x2 - x1 y3) + x1^12 + x2^10`.
pub fn al_nonuniversal() -> Result<FreeCdga> {
    model(
        &rigid_gens(10, 12, 41, 43, 45),
        &[
            ("y1", "x1^3 x2".into()),
            ("y2", "x1^2 x2^2".into()),
            ("y3", "x1 x2^3".into()),
            (
                "z",
                "x2 y1 x2 y2 x2 - x2 y1 x2 x1 y3 - x2 x1 y2 y2 x2 + x2 x1 y2 x1 y3 + x1^12 + x2^10".into(),
            ),
        ],
    )
}

/// The rigid model extended by odd `v`, `w` with `|v| + |w| = 120`,
/// `d'v = d'w = 0` and `d'z = α + v w`.
pub fn rigid_extension(dv: u32, dw: u32) -> Result<FreeCdga> {
    check(dv % 2 == 1 && dw % 2 == 1, "|v| and |w| must be odd")?;
    check(dv + dw == 120, "need |v| + |w| = 120")?;
    check(dv != dw, "need |v| != |w|")?;
    let base = al_rigid()?;
    let ext = base.context().extend([Variable::new("v", dv), Variable::new("w", dw)])?;
    let alpha = base.d_of("z")?.embed(&ext)?;
    let dz = &alpha + &poly(&ext, "v w")?;
    base.hirsch_extend(
        &[Variable::new("v", dv), Variable::new("w", dw)],
        vec![("z".into(), dz)],
    )
}

fn check_even_odd(m: u32, n: u32) -> Result<()> {
    check_range("m", m, 2, 30)?;
    check_range("n", n, 1, 61)?;
    check(m % 2 == 0, "m must be even")?;
    check_odd("n", n)
}

/// `S^m × S^n`, `m` even, `n` odd: `Λ(x, y, z)`, `dz = x²`.
pub fn product_ev(m: u32, n: u32) -> Result<FreeCdga> {
    check_even_odd(m, n)?;
    model(&[g("x", m), g("y", n), g("z", 2 * m - 1)], &[("z", "x^2".into())])
}

/// Degree through which [`wedge_trunc`] adds generators.
pub fn wedge_trunc_degree(m: u32, n: u32) -> u32 {
    (2 * m).max(m + n) + 1
}

/// `S^m ∨ S^n`, `m` even, `n` odd, truncated: starting from `Λ(x, y)`, for
/// each degree `k` up to `max(2m, m + n) + 1` a generator of degree `k` is
/// added for every class of degree `k + 1` beyond `x` and `y`, with the
/// class representative as differential. Generators killing `x²` and `xy`
/// are named `z` and `u`; the others `w1, w2, …`. The result is marked as
/// valid through degree `max(2m, m + n) + 2`.
pub fn wedge_trunc(m: u32, n: u32) -> Result<FreeCdga> {
    check_even_odd(m, n)?;
    let top = wedge_trunc_degree(m, n);
    let mut cur = model(&[g("x", m), g("y", n)], &[])?;
    let mut fresh = 0;
    for k in 1..=top {
        let h = cur.cohomology(k + 1)?;
        let ctx = cur.context().clone();
        let x = Polynomial::var(&ctx, "x")?;
        let y = Polynomial::var(&ctx, "y")?;
        let expected = [ctx.lookup("x")?, ctx.lookup("y")?];
        let mut new_gens = Vec::new();
        let mut diffs = Vec::new();
        for rep in h.representatives {
            let stripped = strip_generators(&rep, &ctx, &expected);
            if stripped.is_zero() {
                continue;
            }
            let lead = stripped.terms().next().map(|(_, c)| c.clone()).expect("nonzero");
            let normalized = stripped.scale(&(q(1) / lead));
            let name = if normalized == x.pow(2) {
                "z".to_string()
            } else if normalized == &x * &y {
                "u".to_string()
            } else {
                fresh += 1;
                format!("w{}", fresh)
            };
            new_gens.push(Variable::new(name.clone(), k));
            diffs.push((name, normalized));
        }
        if !new_gens.is_empty() {
            cur = cur.hirsch_extend(&new_gens, diffs)?;
        }
    }
    Ok(cur.with_truncation(top + 1))
}

/// Removes the linear terms in `x` and `y` (the expected classes).
fn strip_generators(p: &Polynomial, ctx: &Arc<Context>, expected: &[usize]) -> Polynomial {
    let mut out = Polynomial::zero(ctx);
    for (m, c) in p.terms() {
        let is_xy = m.word_length() == 1 && expected.iter().any(|&i| m.contains(i));
        if !is_xy {
            out = &out + &Polynomial::term(ctx, c.clone(), m.clone());
        }
    }
    out
}

fn check_odd_le(m: u32, n: u32) -> Result<()> {
    check_odd_pair(m, n)?;
    check(1 < m && m <= n, "need 1 < m <= n")
}

/// `S^m × S^n`, both odd: `Λ(x, y)`, `d = 0`.
pub fn product_odd(m: u32, n: u32) -> Result<FreeCdga> {
    check_odd_pair(m, n)?;
    model(&[g("x", m), g("y", n)], &[])
}

/// `Λ(x, y, v1)`, `dv1 = x y`.
pub fn e_model(m: u32, n: u32) -> Result<FreeCdga> {
    check_odd_le(m, n)?;
    model(&[g("x", m), g("y", n), g("v1", m + n - 1)], &[("v1", "x y".into())])
}

/// `Λ(x, y, v1, v2)`, `dv1 = x y`, `dv2 = x v1`.
pub fn e_prime(m: u32, n: u32) -> Result<FreeCdga> {
    check_odd_le(m, n)?;
    model(
        &[g("x", m), g("y", n), g("v1", m + n - 1), g("v2", 2 * m + n - 2)],
        &[("v1", "x y".into()), ("v2", "x v1".into())],
    )
}

// ---------------------------------------------------------------- morphisms

/// `M(G_n) → M(G_m)`: `v_i ↦ v_i` for the first generators, others to zero.
pub fn lie_inclusion(family: LieFamily, m: u32, n: u32) -> Result<CdgaMorphism> {
    check(m < n, "need m < n")?;
    let big = lie_group(family, n)?;
    let small = lie_group(family, m)?;
    let names: Vec<String> = small.generators().iter().map(|v| v.name().to_string()).collect();
    let images: Vec<(&str, &str)> = names.iter().map(|n| (n.as_str(), n.as_str())).collect();
    morphism(&big, &small, &images)
}

/// `M(G_n/G_m) → M(G_n)`: inclusion of the quotient generators.
pub fn lie_projection(family: LieFamily, n: u32, m: u32) -> Result<CdgaMorphism> {
    let quot = lie_quotient(family, n, m)?;
    let group = lie_group(family, n)?;
    let names: Vec<String> = quot.generators().iter().map(|v| v.name().to_string()).collect();
    let images: Vec<(&str, &str)> = names.iter().map(|n| (n.as_str(), n.as_str())).collect();
    morphism(&quot, &group, &images)
}

/// `M(SU(6)) → M(SU(3) × SU(3))`, `v_i ↦ u_i + w_i` (`i = 1, 2`).
pub fn su3xsu3_su6() -> Result<CdgaMorphism> {
    morphism(&su(6)?, &su3xsu3()?, &[("v1", "u1 + w1"), ("v2", "u2 + w2")])
}

/// `u_i ↦ u_i`, `w_i ↦ -w_i` on `M(SU(3) × SU(3))`.
pub fn su3xsu3_sign_auto() -> Result<CdgaMorphism> {
    let m = su3xsu3()?;
    morphism(&m, &m, &[("u1", "u1"), ("w1", "- w1"), ("u2", "u2"), ("w2", "- w2")])
}

/// Model of the collapse `ℂP^n → S^{2n}`: `y ↦ x^n`, `w ↦ x^{n-1} v`.
pub fn collapse_cpn(n: u32) -> Result<CdgaMorphism> {
    let w = if n == 1 { "v".to_string() } else { format!("x^{} v", n - 1) };
    morphism(&cp_fib_base(n)?, &cpn(n)?, &[("y", &format!("x^{}", n)), ("w", &w)])
}

/// `Λ(y, w) → Λ(y, w, v)`, the inclusion.
pub fn hopf_bridge(n: u32) -> Result<CdgaMorphism> {
    morphism(&hopf_base(n)?, &hopf_total(n)?, &[("y", "y"), ("w", "w")])
}

/// Automorphism of the Hopf total model multiplying the fundamental class
/// `[w - y^n v]` by 2: `y ↦ y`, `v ↦ v`, `w ↦ 2w - y^n v`.
pub fn hopf_class_two(n: u32) -> Result<CdgaMorphism> {
    let m = hopf_total(n)?;
    morphism(&m, &m, &[("y", "y"), ("v", "v"), ("w", &format!("2 w - y^{} v", n))])
}

pub fn cp_fib_bridge(n: u32) -> Result<CdgaMorphism> {
    morphism(&cp_fib_base(n)?, &cp_fib(n)?, &[("y", "y"), ("w", "w")])
}

pub fn sphere_bundle_bridge(m: u32, n: u32) -> Result<CdgaMorphism> {
    morphism(&sphere_bundle_base(m, n)?, &sphere_bundle(m, n)?, &[("w1", "w1"), ("w2", "w2")])
}

pub fn odd_fib_bridge(m: u32, n: u32) -> Result<CdgaMorphism> {
    morphism(&odd_fib_base(m, n)?, &odd_fib(m, n)?, &[("w", "w")])
}

/// `M → loop(M)`, the inclusion (model of the evaluation map).
pub fn free_loop_ev(base: &FreeCdga) -> Result<CdgaMorphism> {
    let lm = base.loop_model()?;
    let names: Vec<String> = base.generators().iter().map(|v| v.name().to_string()).collect();
    let images: Vec<(&str, &str)> = names.iter().map(|n| (n.as_str(), n.as_str())).collect();
    morphism(base, &lm, &images)
}

/// On the loop model of `S^m × S^n` (odd, `n - 1 = a(m - 1)`, `a > 1`):
/// `y ↦ y + x_bar^{a-1} x`, all else fixed.
pub fn loop_divisor_auto(m: u32, n: u32) -> Result<CdgaMorphism> {
    check_odd_le(m, n)?;
    check(m < n && (n - 1) % (m - 1) == 0, "need n - 1 = a (m - 1) with a > 1")?;
    let a = (n - 1) / (m - 1);
    let lm = product_odd(m, n)?.loop_model()?;
    let img = if a == 2 {
        "y + x_bar x".to_string()
    } else {
        format!("y + x_bar^{} x", a - 1)
    };
    morphism(
        &lm,
        &lm,
        &[("x", "x"), ("y", &img), ("x_bar", "x_bar"), ("y_bar", "y_bar")],
    )
}

/// `f*: M' → Λ(v)`: `v ↦ v`, everything else to zero.
pub fn rigid_chain_f(dv: u32, dw: u32) -> Result<CdgaMorphism> {
    let src = rigid_extension(dv, dw)?;
    let tgt = model(&[g("v", dv)], &[])?;
    morphism(&src, &tgt, &[("v", "v")])
}

/// `g*: M' → Λ(w)`: `w ↦ w`, everything else to zero.
pub fn rigid_chain_g(dv: u32, dw: u32) -> Result<CdgaMorphism> {
    let src = rigid_extension(dv, dw)?;
    let tgt = model(&[g("w", dw)], &[])?;
    morphism(&src, &tgt, &[("w", "w")])
}

/// Model of `S^m ∨ S^n → S^m × S^n`: the inclusion into the truncated wedge.
pub fn wedge_inclusion(m: u32, n: u32) -> Result<CdgaMorphism> {
    morphism(&product_ev(m, n)?, &wedge_trunc(m, n)?, &[("x", "x"), ("y", "y"), ("z", "z")])
}

pub fn e_projection(m: u32, n: u32) -> Result<CdgaMorphism> {
    morphism(&product_odd(m, n)?, &e_model(m, n)?, &[("x", "x"), ("y", "y")])
}

pub fn e_prime_projection(m: u32, n: u32) -> Result<CdgaMorphism> {
    morphism(&e_model(m, n)?, &e_prime(m, n)?, &[("x", "x"), ("y", "y"), ("v1", "v1")])
}

/// Orbit map `S² × S³ → (S² × S³)/S¹`: `t ↦ 0`, the rest fixed.
pub fn orbit_map(variant: OrbitVariant, a: i64) -> Result<CdgaMorphism> {
    morphism(&orbit_borel(variant, a)?, &orbit_fiber()?, &[("x", "x"), ("y", "y"), ("z", "z")])
}

/// Swap variant: `x ↔ t`, `y ↔ z`. Mixed variant: `x ↦ 2x`, `t ↦ -2t`,
/// `y ↦ 4y`, `z ↦ -4z`.
pub fn orbit_auto(variant: OrbitVariant, a: i64) -> Result<CdgaMorphism> {
    let m = orbit_borel(variant, a)?;
    match variant {
        OrbitVariant::Swap => morphism(&m, &m, &[("x", "t"), ("t", "x"), ("y", "z"), ("z", "y")]),
        OrbitVariant::Mixed => morphism(&m, &m, &[("x", "2 x"), ("t", "-2 t"), ("y", "4 y"), ("z", "-4 z")]),
    }
}

/// `G/H → G`'s model map: `x_i ↦ 0`, `y_j ↦ v_j`.
pub fn homogeneous_projection(kind: Homogeneous, n: u32, m: u32) -> Result<CdgaMorphism> {
    let src = homogeneous(kind, n, m)?;
    let tgt = homogeneous_group(kind, n, m)?;
    let names: Vec<(String, String)> = src
        .generators()
        .iter()
        .filter(|v| v.name().starts_with('y'))
        .map(|v| {
            let idx = &v.name()[1..];
            (v.name().to_string(), format!("v{}", if idx.is_empty() { "1" } else { idx }))
        })
        .collect();
    let images: Vec<(&str, &str)> = names.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    morphism(&src, &tgt, &images)
}

/// On the `U(n)/U(m)` model, `m >= 2`: `x2 ↦ x2 + x1²`, `y2 ↦ y2 + x1 y1`,
/// `y_n ↦ -y_n`.
pub fn homogeneous_u_auto(n: u32, m: u32) -> Result<CdgaMorphism> {
    check(m >= 2, "need m >= 2")?;
    let h = homogeneous(Homogeneous::U, n, m)?;
    let yn = format!("y{}", n);
    let neg = format!("- y{}", n);
    let mut images: Vec<(String, String)> = h
        .generators()
        .iter()
        .map(|v| (v.name().to_string(), v.name().to_string()))
        .collect();
    for (k, img) in images.iter_mut() {
        if k == "x2" {
            *img = "x2 + x1^2".into();
        } else if k == "y2" {
            *img = "y2 + x1 y1".into();
        } else if *k == yn {
            *img = neg.clone();
        }
    }
    let refs: Vec<(&str, &str)> = images.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    morphism(&h, &h, &refs)
}

/// `M(Y) → M(S^12)`: `x2 ↦ x`, `z ↦ x^8 y`, the rest to zero.
pub fn nonuniversal_generator_map() -> Result<CdgaMorphism> {
    morphism(&al_nonuniversal()?, &sphere(12)?, &[("x2", "x"), ("z", "x^8 y")])
}

// ---------------------------------------------------------------- listing

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Model,
    Morphism,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: EntryKind,
    /// Positional parameters with their ranges, e.g. `"n: 1..=30"`.
    pub params: &'static [&'static str],
    /// Default arguments used when validating the catalog and in listings.
    pub example: &'static [&'static str],
    pub citation: &'static str,
}

macro_rules! entry {
    ($name:expr, $kind:ident, [$($p:expr),*], [$($e:expr),*], $cite:expr) => {
        CatalogEntry {
            name: $name,
            kind: EntryKind::$kind,
            params: &[$($p),*],
            example: &[$($e),*],
            citation: $cite,
        }
    };
}

pub const ENTRIES: &[CatalogEntry] = &[
    entry!("sphere", Model, ["n: 1..=120 (dimension)"], ["3"], "model of a sphere: one odd generator, or x with dy = x^2"),
    entry!("cpn", Model, ["n: 1..=30"], ["3"], "complex projective space, dv = x^(n+1)"),
    entry!("hpn", Model, ["n: 1..=30"], ["2"], "quaternionic projective space, dv = x^(n+1)"),
    entry!("u", Model, ["n: 1..=20"], ["3"], "unitary group, exterior on degrees 2i-1"),
    entry!("su", Model, ["n: 2..=20"], ["4"], "special unitary group, exterior on degrees 2i+1"),
    entry!("sp", Model, ["n: 1..=30"], ["4"], "symplectic group, exterior on degrees 4i-1"),
    entry!("lie_quotient", Model, ["family: u|su|sp", "n", "m < n"], ["u", "5", "3"], "minimal model of G_n/G_m for the classical families"),
    entry!("su3xsu3", Model, [], [], "SU(3) x SU(3): u1, w1 in degree 3, u2, w2 in degree 5"),
    entry!("hopf_base", Model, ["n: 1..=20"], ["2"], "base of the Hopf fibration S^1 -> S^(2n+1) -> CP^n"),
    entry!("hopf_total", Model, ["n: 1..=20"], ["2"], "relative model of the Hopf fibration, Dv = y"),
    entry!("sphere_bundle_base", Model, ["m: odd", "n: odd"], ["3", "5"], "S^m x S^n, base of the pulled-back tangent sphere bundle"),
    entry!("sphere_bundle", Model, ["m: odd", "n: odd"], ["3", "5"], "pulled-back tangent sphere bundle over S^m x S^n, Du = w1 w2"),
    entry!("odd_fib_base", Model, ["m: odd", "n: odd, != m"], ["3", "5"], "odd sphere S^n"),
    entry!("odd_fib", Model, ["m: odd", "n: odd, != m"], ["3", "5"], "fibration S^m x S^(m+n-1) -> X -> S^n, Du = w v"),
    entry!("cp_fib_base", Model, ["n: 1..=20"], ["2"], "even sphere S^(2n) written as Lambda(y, w), dw = y^2"),
    entry!("cp_fib", Model, ["n: 1..=20"], ["2"], "fibration CP^(n-1) -> CP^(2n-1) -> S^(2n), Dv = y - x^n"),
    entry!("homogeneous", Model, ["space: u|su|su2_u1", "n", "m < n"], ["u", "4", "2"], "non-minimal model of G/H with dy_i the restricted universal class"),
    entry!("homogeneous_group", Model, ["space: u|su|su2_u1", "n", "m < n"], ["u", "4", "2"], "model of G for the homogeneous space entries"),
    entry!("orbit_borel", Model, ["variant: swap|mixed", "a: nonzero integer"], ["mixed", "2"], "Borel model of a free circle action on S^2 x S^3"),
    entry!("orbit_fiber", Model, [], [], "S^2 x S^3, dy = x^2"),
    entry!("al_rigid", Model, [], [], "rigid model with |x1| = 8, |x2| = 10, dz = alpha"),
    entry!("al_nonuniversal", Model, [], [], "non-universal model with |x1| = 10, |x2| = 12"),
    entry!("rigid_extension", Model, ["|v|: odd", "|w|: odd, |v| + |w| = 120, |v| != |w|"], ["53", "67"], "Hirsch extension of the rigid model by v, w with dz = alpha + v w"),
    entry!("product_ev", Model, ["m: even", "n: odd"], ["4", "3"], "S^m x S^n with m even, dz = x^2"),
    entry!("wedge_trunc", Model, ["m: even", "n: odd"], ["4", "3"], "S^m v S^n, truncated through degree max(2m, m+n)+1"),
    entry!("product_odd", Model, ["m: odd", "n: odd"], ["3", "5"], "S^m x S^n with both degrees odd"),
    entry!("e_model", Model, ["m: odd > 1", "n: odd >= m"], ["3", "5"], "total space of the nontrivial S^(m+n-1) fibration over S^m x S^n"),
    entry!("e_prime", Model, ["m: odd > 1", "n: odd >= m"], ["3", "5"], "total space of the next fibration, dv2 = x v1"),
    entry!("loop", Model, ["entry", "args..."], ["sphere", "2"], "free loop model, D(v_bar) = -s(dv)"),
    entry!("lie_inclusion", Morphism, ["family: u|su|sp", "m", "n > m"], ["u", "3", "5"], "inclusion G_m -> G_n, generators to generators or zero"),
    entry!("lie_projection", Morphism, ["family: u|su|sp", "n", "m < n"], ["u", "5", "3"], "projection G_n -> G_n/G_m"),
    entry!("su3xsu3_su6", Morphism, [], [], "blockwise inclusion SU(3) x SU(3) -> SU(6)"),
    entry!("su3xsu3_sign_auto", Morphism, [], [], "automorphism u_i -> u_i, w_i -> -w_i"),
    entry!("collapse_cpn", Morphism, ["n: 1..=20"], ["3"], "collapse of lower cells CP^n -> S^(2n)"),
    entry!("hopf_bridge", Morphism, ["n: 1..=20"], ["2"], "Hopf fibration S^(2n+1) -> CP^n"),
    entry!("hopf_class_two", Morphism, ["n: 1..=20"], ["1"], "automorphism of the Hopf total model of degree 2 on the top class"),
    entry!("cp_fib_bridge", Morphism, ["n: 1..=20"], ["2"], "fibration map CP^(2n-1) -> S^(2n)"),
    entry!("sphere_bundle_bridge", Morphism, ["m: odd", "n: odd"], ["3", "5"], "bundle projection onto S^m x S^n"),
    entry!("odd_fib_bridge", Morphism, ["m: odd", "n: odd, != m"], ["3", "5"], "fibration map onto S^n"),
    entry!("free_loop_ev", Morphism, ["entry", "args..."], ["sphere", "2"], "evaluation map LY -> Y"),
    entry!("loop_divisor_auto", Morphism, ["m: odd", "n: odd, n-1 = a(m-1)"], ["3", "5"], "automorphism y -> y + x_bar^(a-1) x of the loop model of S^m x S^n"),
    entry!("rigid_chain_f", Morphism, ["|v|", "|w|"], ["53", "67"], "f*: M' -> Lambda(v), v -> v"),
    entry!("rigid_chain_g", Morphism, ["|v|", "|w|"], ["53", "67"], "g*: M' -> Lambda(w), w -> w"),
    entry!("wedge_inclusion", Morphism, ["m: even", "n: odd"], ["4", "3"], "inclusion S^m v S^n -> S^m x S^n"),
    entry!("e_projection", Morphism, ["m", "n"], ["3", "5"], "fibration E -> S^m x S^n"),
    entry!("e_prime_projection", Morphism, ["m", "n"], ["3", "5"], "fibration E' -> E"),
    entry!("orbit_map", Morphism, ["variant: swap|mixed", "a"], ["mixed", "2"], "orbit map S^2 x S^3 -> (S^2 x S^3)/S^1"),
    entry!("orbit_auto", Morphism, ["variant: swap|mixed", "a"], ["swap", "1"], "swap x <-> t, y <-> z, or scaling on the mixed variant"),
    entry!("homogeneous_projection", Morphism, ["space: u|su|su2_u1", "n", "m"], ["u", "4", "2"], "projection G -> G/H, killing Lambda V_BH"),
    entry!("homogeneous_u_auto", Morphism, ["n", "m >= 2"], ["4", "2"], "automorphism x2 -> x2 + x1^2, y2 -> y2 + x1 y1, y_n -> -y_n"),
    entry!("nonuniversal_generator_map", Morphism, [], [], "homotopy generator S^12 -> Y of the non-universal model"),
];

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

fn int(args: &[&str], i: usize) -> Result<u32> {
    let s = args
        .get(i)
        .ok_or_else(|| AlgebraError::InvalidParameter(format!("missing argument {}", i + 1)))?;
    s.parse()
        .map_err(|_| AlgebraError::InvalidParameter(format!("argument {} is not a nonnegative integer: {}", i + 1, s)))
}

fn signed(args: &[&str], i: usize) -> Result<i64> {
    let s = args
        .get(i)
        .ok_or_else(|| AlgebraError::InvalidParameter(format!("missing argument {}", i + 1)))?;
    s.parse()
        .map_err(|_| AlgebraError::InvalidParameter(format!("argument {} is not an integer: {}", i + 1, s)))
}

fn word<'a>(args: &[&'a str], i: usize) -> Result<&'a str> {
    args.get(i)
        .copied()
        .ok_or_else(|| AlgebraError::InvalidParameter(format!("missing argument {}", i + 1)))
}

fn arity(args: &[&str], n: usize) -> Result<()> {
    check(args.len() == n, format!("expected {} arguments, got {}", n, args.len()))
}

pub fn catalog_model(name: &str, args: &[&str]) -> Result<FreeCdga> {
    if name == "loop" {
        let base = catalog_model(word(args, 0)?, &args[1..])?;
        return base.loop_model();
    }
    let entry = find(name).filter(|e| e.kind == EntryKind::Model);
    let Some(entry) = entry else {
        return Err(AlgebraError::InvalidParameter(format!("no catalog model named {}", name)));
    };
    arity(args, entry.params.len())?;
    match name {
        "sphere" => sphere(int(args, 0)?),
        "cpn" => cpn(int(args, 0)?),
        "hpn" => hpn(int(args, 0)?),
        "u" => u(int(args, 0)?),
        "su" => su(int(args, 0)?),
        "sp" => sp(int(args, 0)?),
        "lie_quotient" => lie_quotient(LieFamily::parse(word(args, 0)?)?, int(args, 1)?, int(args, 2)?),
        "su3xsu3" => su3xsu3(),
        "hopf_base" => hopf_base(int(args, 0)?),
        "hopf_total" => hopf_total(int(args, 0)?),
        "sphere_bundle_base" => sphere_bundle_base(int(args, 0)?, int(args, 1)?),
        "sphere_bundle" => sphere_bundle(int(args, 0)?, int(args, 1)?),
        "odd_fib_base" => odd_fib_base(int(args, 0)?, int(args, 1)?),
        "odd_fib" => odd_fib(int(args, 0)?, int(args, 1)?),
        "cp_fib_base" => cp_fib_base(int(args, 0)?),
        "cp_fib" => cp_fib(int(args, 0)?),
        "homogeneous" => homogeneous(Homogeneous::parse(word(args, 0)?)?, int(args, 1)?, int(args, 2)?),
        "homogeneous_group" => homogeneous_group(Homogeneous::parse(word(args, 0)?)?, int(args, 1)?, int(args, 2)?),
        "orbit_borel" => orbit_borel(OrbitVariant::parse(word(args, 0)?)?, signed(args, 1)?),
        "orbit_fiber" => orbit_fiber(),
        "al_rigid" => al_rigid(),
        "al_nonuniversal" => al_nonuniversal(),
        "rigid_extension" => rigid_extension(int(args, 0)?, int(args, 1)?),
        "product_ev" => product_ev(int(args, 0)?, int(args, 1)?),
        "wedge_trunc" => wedge_trunc(int(args, 0)?, int(args, 1)?),
        "product_odd" => product_odd(int(args, 0)?, int(args, 1)?),
        "e_model" => e_model(int(args, 0)?, int(args, 1)?),
        "e_prime" => e_prime(int(args, 0)?, int(args, 1)?),
        _ => unreachable!("listed model without builder"),
    }
}

pub fn catalog_morphism(name: &str, args: &[&str]) -> Result<CdgaMorphism> {
    if name == "free_loop_ev" {
        let base = catalog_model(word(args, 0)?, &args[1..])?;
        return free_loop_ev(&base);
    }
    let entry = find(name).filter(|e| e.kind == EntryKind::Morphism);
    let Some(entry) = entry else {
        return Err(AlgebraError::InvalidParameter(format!("no catalog morphism named {}", name)));
    };
    arity(args, entry.params.len())?;
    match name {
        "lie_inclusion" => lie_inclusion(LieFamily::parse(word(args, 0)?)?, int(args, 1)?, int(args, 2)?),
        "lie_projection" => lie_projection(LieFamily::parse(word(args, 0)?)?, int(args, 1)?, int(args, 2)?),
        "su3xsu3_su6" => su3xsu3_su6(),
        "su3xsu3_sign_auto" => su3xsu3_sign_auto(),
        "collapse_cpn" => collapse_cpn(int(args, 0)?),
        "hopf_bridge" => hopf_bridge(int(args, 0)?),
        "hopf_class_two" => hopf_class_two(int(args, 0)?),
        "cp_fib_bridge" => cp_fib_bridge(int(args, 0)?),
        "sphere_bundle_bridge" => sphere_bundle_bridge(int(args, 0)?, int(args, 1)?),
        "odd_fib_bridge" => odd_fib_bridge(int(args, 0)?, int(args, 1)?),
        "loop_divisor_auto" => loop_divisor_auto(int(args, 0)?, int(args, 1)?),
        "rigid_chain_f" => rigid_chain_f(int(args, 0)?, int(args, 1)?),
        "rigid_chain_g" => rigid_chain_g(int(args, 0)?, int(args, 1)?),
        "wedge_inclusion" => wedge_inclusion(int(args, 0)?, int(args, 1)?),
        "e_projection" => e_projection(int(args, 0)?, int(args, 1)?),
        "e_prime_projection" => e_prime_projection(int(args, 0)?, int(args, 1)?),
        "orbit_map" => orbit_map(OrbitVariant::parse(word(args, 0)?)?, signed(args, 1)?),
        "orbit_auto" => orbit_auto(OrbitVariant::parse(word(args, 0)?)?, signed(args, 1)?),
        "homogeneous_projection" => {
            homogeneous_projection(Homogeneous::parse(word(args, 0)?)?, int(args, 1)?, int(args, 2)?)
        }
        "homogeneous_u_auto" => homogeneous_u_auto(int(args, 0)?, int(args, 1)?),
        "nonuniversal_generator_map" => nonuniversal_generator_map(),
        _ => unreachable!("listed morphism without builder"),
    }
}

fn grid1(range: core::ops::RangeInclusive<u32>) -> Vec<Vec<String>> {
    range.map(|n| vec![n.to_string()]).collect()
}

fn odd_pairs(top: u32, keep: impl Fn(u32, u32) -> bool) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for m in (1..=top).step_by(2) {
        for n in (1..=top).step_by(2) {
            if keep(m, n) {
                out.push(vec![m.to_string(), n.to_string()]);
            }
        }
    }
    out
}

fn with_word(word: &str, rest: Vec<Vec<String>>) -> Vec<Vec<String>> {
    rest.into_iter()
        .map(|r| core::iter::once(word.to_string()).chain(r).collect())
        .collect()
}

fn below(lo_m: u32, lo_n: u32, top: u32) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for n in lo_n..=top {
        for m in lo_m..n {
            out.push(vec![n.to_string(), m.to_string()]);
        }
    }
    out
}

/// Documented parameter grid of a model entry (empty argument list for
/// entries without parameters). `loop` is not included; see
/// [`loop_bases`].
pub fn parameter_grid(name: &str) -> Vec<Vec<String>> {
    match name {
        "sphere" => grid1(1..=120),
        "cpn" | "hpn" | "sp" => grid1(1..=30),
        "u" | "hopf_base" | "hopf_total" | "cp_fib_base" | "cp_fib" => grid1(1..=20),
        "su" => grid1(2..=20),
        "lie_quotient" => {
            let mut g = with_word("u", below(1, 2, 10));
            g.extend(with_word("su", below(2, 3, 10)));
            g.extend(with_word("sp", below(1, 2, 20)));
            g
        }
        "sphere_bundle_base" | "sphere_bundle" => odd_pairs(15, |_, _| true),
        "odd_fib_base" | "odd_fib" => odd_pairs(15, |m, n| m != n),
        "homogeneous" | "homogeneous_group" => {
            let mut g = with_word("u", below(1, 2, 8));
            g.extend(with_word("su", below(2, 3, 8)));
            g.push(vec!["su2_u1".into(), "2".into(), "1".into()]);
            g
        }
        "orbit_borel" => ["-2", "-1", "1", "2", "3"]
            .iter()
            .flat_map(|a| [vec!["swap".to_string(), a.to_string()], vec!["mixed".to_string(), a.to_string()]])
            .collect(),
        "rigid_extension" => (1..120)
            .step_by(2)
            .filter(|&v| v != 60)
            .map(|v| vec![v.to_string(), (120 - v).to_string()])
            .collect(),
        "product_ev" => {
            let mut out = Vec::new();
            for m in (2..=12).step_by(2) {
                for n in (1..=13).step_by(2) {
                    out.push(vec![m.to_string(), n.to_string()]);
                }
            }
            out
        }
        "wedge_trunc" => [(2, 1), (2, 3), (4, 3), (4, 7), (4, 9), (6, 5), (6, 11)]
            .iter()
            .map(|(m, n)| vec![alloc::string::ToString::to_string(m), n.to_string()])
            .collect(),
        "product_odd" => odd_pairs(15, |_, _| true),
        "e_model" | "e_prime" => odd_pairs(15, |m, n| 1 < m && m <= n),
        _ => vec![Vec::new()],
    }
}

/// Whether models of the entry are minimal; `None` when it depends on the
/// parameters or is not asserted.
pub fn expected_minimal(name: &str) -> Option<bool> {
    match name {
        "hopf_total" | "cp_fib" => Some(false),
        "sphere" | "cpn" | "hpn" | "u" | "su" | "sp" | "lie_quotient" | "su3xsu3" | "hopf_base" | "sphere_bundle_base"
        | "sphere_bundle" | "odd_fib_base" | "odd_fib" | "cp_fib_base" | "homogeneous_group" | "orbit_borel" | "orbit_fiber" | "al_rigid"
        | "al_nonuniversal" | "rigid_extension" | "product_ev" | "wedge_trunc" | "product_odd" | "e_model" | "e_prime" => {
            Some(true)
        }
        _ => None,
    }
}

/// Base entries whose loop models are checked: all simply connected ones,
/// at their example parameters.
pub fn loop_bases() -> Vec<(&'static str, Vec<String>)> {
    let mut out = Vec::new();
    for e in ENTRIES.iter().filter(|e| e.kind == EntryKind::Model && e.name != "loop") {
        let args: Vec<String> = e.example.iter().map(|s| s.to_string()).collect();
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        if let Ok(m) = catalog_model(e.name, &refs) {
            if m.generators().iter().all(|v| v.degree() >= 2) {
                out.push((e.name, args));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_with_its_example() {
        for e in ENTRIES {
            match e.kind {
                EntryKind::Model => {
                    catalog_model(e.name, e.example).unwrap_or_else(|err| panic!("{}: {}", e.name, err));
                }
                EntryKind::Morphism => {
                    catalog_morphism(e.name, e.example).unwrap_or_else(|err| panic!("{}: {}", e.name, err));
                }
            }
        }
    }

    #[test]
    fn hopf_total_shape() {
        let m = hopf_total(2).unwrap();
        assert_eq!(format!("{}", m.d_of("w").unwrap()), "y^3");
        assert!(!m.is_minimal());
    }

    #[test]
    fn su4_degrees() {
        let m = su(4).unwrap();
        let d: Vec<u32> = m.generators().iter().map(|v| v.degree()).collect();
        assert_eq!(d, [3, 5, 7]);
    }

    #[test]
    fn collapse_images() {
        let f = collapse_cpn(3).unwrap();
        assert_eq!(format!("{}", f.image("y").unwrap()), "x^3");
        assert_eq!(format!("{}", f.image("w").unwrap()), "x^2 v");
    }

    #[test]
    fn wedge_generators() {
        let w = wedge_trunc(4, 3).unwrap();
        let c = w.context();
        let xy = &Polynomial::var(c, "x").unwrap() * &Polynomial::var(c, "y").unwrap();
        assert_eq!(w.d_of("u").unwrap(), &xy);
        assert_eq!(format!("{}", w.d_of("z").unwrap()), "x^2");
        assert_eq!(w.truncation(), Some(10));
    }

    #[test]
    fn parameter_errors() {
        assert!(rigid_extension(53, 65).is_err());
        assert!(rigid_extension(60, 60).is_err());
        assert!(catalog_model("sphere", &[]).is_err());
        assert!(catalog_model("nope", &[]).is_err());
        assert!(loop_divisor_auto(3, 7).is_ok());
        assert!(loop_divisor_auto(5, 7).is_err());
    }
}
