//! Parameterized automorphism families, checked on sample parameter values.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::cdga::FreeCdga;
use crate::error::{AlgebraError, Result};
use crate::graded::{q, q_frac, Polynomial, Scalar};
use crate::linalg::Matrix;
use crate::morphism::{exact_difference_homotopy, CdgaMorphism};

use super::square::{Direction, SquareProblem};

/// `coefficient · Π param_i^{powers_i} · monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleTerm {
    pub coefficient: Scalar,
    pub powers: Vec<i32>,
    pub monomial: Vec<(String, u32)>,
}

/// Generator images with coefficients that are Laurent monomials in the
/// parameters. Generators without an entry are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRule {
    params: Vec<String>,
    images: Vec<(String, Vec<RuleTerm>)>,
}

impl FamilyRule {
    pub fn new(params: &[&str]) -> Self {
        FamilyRule {
            params: params.iter().map(|s| s.to_string()).collect(),
            images: Vec::new(),
        }
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn images(&self) -> &[(String, Vec<RuleTerm>)] {
        &self.images
    }

    fn entry(&mut self, gen: &str) -> &mut Vec<RuleTerm> {
        if let Some(pos) = self.images.iter().position(|(g, _)| g == gen) {
            &mut self.images[pos].1
        } else {
            self.images.push((gen.to_string(), Vec::new()));
            &mut self.images.last_mut().expect("pushed").1
        }
    }

    /// `gen ↦ Π param_i^{powers_i} · gen`.
    pub fn scale(self, gen: &str, powers: &[i32]) -> Self {
        self.with_term(gen, q(1), powers, &[(gen, 1)])
    }

    /// Adds a term to the image of `gen` (which then no longer defaults to `gen`).
    pub fn with_term(mut self, gen: &str, coefficient: Scalar, powers: &[i32], monomial: &[(&str, u32)]) -> Self {
        let mut powers = powers.to_vec();
        powers.resize(self.params.len(), 0);
        self.entry(gen).push(RuleTerm {
            coefficient,
            powers,
            monomial: monomial.iter().map(|(n, e)| (n.to_string(), *e)).collect(),
        });
        self
    }

    pub fn instantiate(&self, model: &FreeCdga, values: &[Scalar]) -> Result<CdgaMorphism> {
        if values.len() != self.params.len() {
            return Err(AlgebraError::InvalidParameter(format!(
                "rule has {} parameters, {} values given",
                self.params.len(),
                values.len()
            )));
        }
        if values.iter().any(Zero::is_zero) {
            return Err(AlgebraError::InvalidParameter("parameters must be nonzero".into()));
        }
        let ctx = model.context();
        let mut images = Vec::new();
        for (gen, terms) in &self.images {
            let mut p = Polynomial::zero(ctx);
            for t in terms {
                let mut c = t.coefficient.clone();
                for (v, &e) in values.iter().zip(&t.powers) {
                    let base = if e < 0 { v.recip() } else { v.clone() };
                    for _ in 0..e.unsigned_abs() {
                        c *= &base;
                    }
                }
                let mut m = Polynomial::constant(ctx, c);
                for (name, e) in &t.monomial {
                    m = &m * &Polynomial::var(ctx, name)?.pow(*e);
                }
                p = &p + &m;
            }
            images.push((gen.clone(), p));
        }
        let mut all: Vec<(String, Polynomial)> = model
            .generators()
            .iter()
            .filter(|v| !self.images.iter().any(|(g, _)| g == v.name()))
            .map(|v| Ok((v.name().to_string(), Polynomial::var(ctx, v.name())?)))
            .collect::<Result<_>>()?;
        all.extend(images);
        CdgaMorphism::new_unchecked(model, model, all)
    }
}

impl fmt::Display for FamilyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return f.write_str("identity");
        }
        for (k, (gen, terms)) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} ↦ ", gen)?;
            if terms.is_empty() {
                f.write_str("0")?;
            }
            for (j, t) in terms.iter().enumerate() {
                if j > 0 {
                    f.write_str(" + ")?;
                }
                let mut parts: Vec<String> = Vec::new();
                if !t.coefficient.is_one() {
                    parts.push(format!("{}", t.coefficient));
                }
                for (p, &e) in self.params.iter().zip(&t.powers) {
                    match e {
                        0 => {}
                        1 => parts.push(p.clone()),
                        _ => parts.push(format!("{}^{}", p, e)),
                    }
                }
                for (n, e) in &t.monomial {
                    if *e == 1 {
                        parts.push(n.clone());
                    } else {
                        parts.push(format!("{}^{}", n, e));
                    }
                }
                if parts.is_empty() {
                    parts.push("1".into());
                }
                f.write_str(&parts.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Five sample tuples drawn from `{1, −1, 2, 3, 1/2}`, rotated per parameter.
pub fn default_samples(params: usize) -> Vec<Vec<Scalar>> {
    let base = [q(1), q(-1), q(2), q(3), q_frac(1, 2)];
    (0..base.len())
        .map(|j| (0..params).map(|i| base[(j + i) % base.len()].clone()).collect())
        .collect()
}

fn show_sample(s: &[Scalar]) -> String {
    let parts: Vec<String> = s.iter().map(|v| format!("{}", v)).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub passed: bool,
    pub failures: Vec<String>,
    pub samples_checked: usize,
    pub pairs_checked: usize,
}

/// `rule` acts on the model where the known automorphisms live (the target
/// of the bridge for E, its source for co-E); `partner` acts on the other
/// end. Each sample must give valid automorphisms and a homotopy-commutative
/// square, and both rules must be multiplicative on all sample pairs.
pub fn verify_family(
    bridge: &CdgaMorphism,
    direction: Direction,
    rule: &FamilyRule,
    partner: &FamilyRule,
    samples: &[Vec<Scalar>],
) -> Result<FamilyReport> {
    if rule.params() != partner.params() {
        return Err(AlgebraError::InvalidParameter("rule and partner use different parameters".into()));
    }
    let (known_home, unknown_home) = match direction {
        Direction::E => (bridge.target(), bridge.source()),
        Direction::CoE => (bridge.source(), bridge.target()),
    };
    let mut failures = Vec::new();
    for s in samples {
        let k = rule.instantiate(known_home, s)?;
        let u = partner.instantiate(unknown_home, s)?;
        for (label, m) in [("rule", &k), ("partner", &u)] {
            if let Some(v) = m.validate().violations.first() {
                failures.push(format!("sample {}: {} is not a DGA map: {}", show_sample(s), label, v));
            } else if !m.is_invertible() {
                failures.push(format!("sample {}: {} is not invertible", show_sample(s), label));
            }
        }
        let problem = SquareProblem {
            bridge: bridge.clone(),
            known: k,
            direction,
        };
        let (lhs, rhs) = problem.composites(&u)?;
        let verdict = exact_difference_homotopy(&lhs, &rhs)?.verdict;
        if !verdict.is_homotopic() {
            failures.push(format!("sample {}: square is {}", show_sample(s), verdict.as_str()));
        }
    }
    let mut pairs = 0;
    for s in samples {
        for t in samples {
            pairs += 1;
            let st: Vec<Scalar> = s.iter().zip(t).map(|(a, b)| a * b).collect();
            for (label, r, home) in [("rule", rule, known_home), ("partner", partner, unknown_home)] {
                let lhs = r.instantiate(home, s)?.then(&r.instantiate(home, t)?)?;
                if lhs != r.instantiate(home, &st)? {
                    failures.push(format!(
                        "{} is not multiplicative on {} · {}",
                        label,
                        show_sample(s),
                        show_sample(t)
                    ));
                }
            }
        }
    }
    Ok(FamilyReport {
        passed: failures.is_empty(),
        failures,
        samples_checked: samples.len(),
        pairs_checked: pairs,
    })
}

#[derive(Clone, Debug)]
pub struct ChainLink {
    pub bridge: CdgaMorphism,
    pub direction: Direction,
    pub rule: FamilyRule,
    pub partner: FamilyRule,
}

impl ChainLink {
    fn homes(&self) -> (&FreeCdga, &FreeCdga) {
        match self.direction {
            Direction::E => (self.bridge.target(), self.bridge.source()),
            Direction::CoE => (self.bridge.source(), self.bridge.target()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub passed: bool,
    pub links: Vec<FamilyReport>,
    pub failures: Vec<String>,
    /// Linear part of each bridge per degree (informational).
    pub linear_parts: Vec<BTreeMap<u32, Matrix>>,
}

/// Checks each link, that consecutive links hand over the same automorphism,
/// and that the last partner agrees with `claimed` on every sample.
pub fn verify_e_chain(chain: &[ChainLink], claimed: &FamilyRule, samples: &[Vec<Scalar>]) -> Result<ChainReport> {
    let last = chain
        .last()
        .ok_or_else(|| AlgebraError::InvalidParameter("empty chain".into()))?;
    let mut failures = Vec::new();
    let mut links = Vec::new();
    for (i, link) in chain.iter().enumerate() {
        let r = verify_family(&link.bridge, link.direction, &link.rule, &link.partner, samples)?;
        failures.extend(r.failures.iter().map(|f| format!("link {}: {}", i + 1, f)));
        links.push(r);
    }
    for (i, pair) in chain.windows(2).enumerate() {
        let (_, out_home) = pair[0].homes();
        let (in_home, _) = pair[1].homes();
        if out_home != in_home {
            return Err(AlgebraError::ModelMismatch);
        }
        for s in samples {
            if pair[0].partner.instantiate(out_home, s)? != pair[1].rule.instantiate(in_home, s)? {
                failures.push(format!(
                    "links {} and {} disagree at sample {}",
                    i + 1,
                    i + 2,
                    show_sample(s)
                ));
            }
        }
    }
    let (_, end) = last.homes();
    for s in samples {
        if last.partner.instantiate(end, s)? != claimed.instantiate(end, s)? {
            failures.push(format!("composite differs from the claim at sample {}", show_sample(s)));
        }
    }
    Ok(ChainReport {
        passed: failures.is_empty(),
        links,
        failures,
        linear_parts: chain.iter().map(|l| l.bridge.linear_part()).collect(),
    })
}

/// Rule with no parameters acting as the identity.
pub fn identity_rule() -> FamilyRule {
    FamilyRule::new(&[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn samples_rotate() {
        let s = default_samples(2);
        assert_eq!(s.len(), 5);
        assert_eq!(s[0], vec![q(1), q(-1)]);
        assert_eq!(default_samples(0), vec![Vec::<Scalar>::new(); 5]);
    }

    #[test]
    fn negative_powers() {
        let m = FreeCdga::free(&[("w", 3)]).unwrap();
        let r = FamilyRule::new(&["a"]).scale("w", &[-1]);
        let f = r.instantiate(&m, &[q(2)]).unwrap();
        assert_eq!(f.images()[0], Polynomial::var(m.context(), "w").unwrap().scale(&q_frac(1, 2)));
        assert_eq!(format!("{}", r), "w ↦ a^-1 w");
    }

    #[test]
    fn identity_family_on_a_bridge() {
        let b = FreeCdga::free(&[("w", 3)]).unwrap();
        let a = FreeCdga::free(&[("w", 3), ("u", 5)]).unwrap();
        let w = Polynomial::var(a.context(), "w").unwrap();
        let bridge = CdgaMorphism::new(&b, &a, vec![("w".into(), w)]).unwrap();
        let r = verify_family(&bridge, Direction::CoE, &identity_rule(), &identity_rule(), &default_samples(0)).unwrap();
        assert!(r.passed, "{:?}", r.failures);
    }
}
