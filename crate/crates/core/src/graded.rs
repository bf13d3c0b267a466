//! Free graded-commutative polynomial algebras over the rationals.
//!
//! Generators carry a positive cohomological degree. Even generators commute
//! with everything; odd generators anticommute with each other and square to
//! zero. Monomials are stored in a canonical order (degree, then name), so two
//! equal monomials are structurally equal and products only need the Koszul
//! sign of the sorting permutation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

/// Exact rational coefficient.
pub type Scalar = num_rational::BigRational;

/// Integer scalar.
pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `num / den`; `den` must be nonzero.
pub fn q_frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// A named generator of a free graded-commutative algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    name: String,
    degree: u32,
}

impl Variable {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Variable {
            name: name.into(),
            degree,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.degree, &self.name).cmp(&(other.degree, &other.name))
    }
}

/// The generator set an algebra is built on, kept in canonical order.
#[derive(Debug, PartialEq, Eq)]
pub struct Context {
    vars: Vec<Variable>,
    index: BTreeMap<String, usize>,
}

impl Context {
    pub fn new(vars: impl IntoIterator<Item = Variable>) -> Result<Arc<Context>> {
        let mut vars: Vec<Variable> = vars.into_iter().collect();
        vars.sort();
        let mut index = BTreeMap::new();
        for (i, v) in vars.iter().enumerate() {
            if v.degree == 0 {
                return Err(AlgebraError::ZeroDegree(v.name.clone()));
            }
            if index.insert(v.name.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(Arc::new(Context { vars, index }))
    }

    /// Generators in canonical order; a monomial's indices point into this slice.
    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn degree_of(&self, idx: usize) -> u32 {
        self.vars[idx].degree
    }

    pub fn max_degree(&self) -> u32 {
        self.vars.iter().map(|v| v.degree).max().unwrap_or(0)
    }

    /// A new context holding these generators plus `extra`.
    pub fn extend(&self, extra: impl IntoIterator<Item = Variable>) -> Result<Arc<Context>> {
        Context::new(self.vars.iter().cloned().chain(extra))
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.0.iter().map(|&(i, e)| self.vars[i].degree * e).sum()
    }

    /// Product of two monomials with its Koszul sign, or `None` when an odd
    /// generator would appear twice.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Option<(i8, Monomial)>> {
        let n = self.vars.len();
        if a.0.iter().chain(&b.0).any(|&(i, _)| i >= n) {
            return Err(AlgebraError::ContextMismatch);
        }
        // Moving each odd factor of `b` left past the odd factors of `a` that
        // sort after it costs one sign flip per crossing.
        let mut flips = 0usize;
        for &(j, _) in b.0.iter().filter(|&&(j, _)| self.vars[j].is_odd()) {
            for &(i, _) in a.0.iter().filter(|&&(i, _)| self.vars[i].is_odd()) {
                if i == j {
                    return Ok(None);
                }
                if i > j {
                    flips += 1;
                }
            }
        }
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(a.0.len() + b.0.len());
        let (mut x, mut y) = (0, 0);
        while x < a.0.len() || y < b.0.len() {
            match (a.0.get(x), b.0.get(y)) {
                (Some(&(i, e)), Some(&(j, f))) if i == j => {
                    out.push((i, e + f));
                    x += 1;
                    y += 1;
                }
                (Some(&(i, e)), Some(&(j, _))) if i < j => {
                    out.push((i, e));
                    x += 1;
                }
                (Some(&p), None) => {
                    out.push(p);
                    x += 1;
                }
                (_, Some(&p)) => {
                    out.push(p);
                    y += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        let sign = if flips % 2 == 0 { 1 } else { -1 };
        Ok(Some((sign, Monomial(out))))
    }

    /// Every canonical monomial of total degree `q`, in sorted order.
    pub fn monomial_basis(&self, q: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate(0, q, &mut current, &mut out);
        out.sort();
        out
    }

    /// Monomials of degree `q` lying in the ideal generated by `ideal`.
    pub fn monomial_basis_in_ideal(&self, q: u32, ideal: &[usize]) -> Vec<Monomial> {
        self.monomial_basis(q)
            .into_iter()
            .filter(|m| m.0.iter().any(|(i, _)| ideal.contains(i)))
            .collect()
    }

    fn enumerate(&self, from: usize, remaining: u32, current: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(Monomial(current.clone()));
            return;
        }
        for i in from..self.vars.len() {
            let deg = self.vars[i].degree;
            if deg > remaining {
                // Canonical order is by degree, so nothing later fits either.
                break;
            }
            let max_exp = if self.vars[i].is_odd() { 1 } else { remaining / deg };
            for e in 1..=max_exp {
                current.push((i, e));
                self.enumerate(i + 1, remaining - e * deg, current, out);
                current.pop();
            }
        }
    }
}

/// A product of generators, as sorted `(generator index, exponent)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(idx: usize) -> Self {
        Monomial(alloc::vec![(idx, 1)])
    }

    /// Build from arbitrary factor pairs. Duplicate indices are merged; the
    /// caller is responsible for odd exponents staying at 1.
    pub fn from_factors(factors: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut map: BTreeMap<usize, u32> = BTreeMap::new();
        for (i, e) in factors {
            if e > 0 {
                *map.entry(i).or_insert(0) += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(i, _)| i == idx)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.exponent(idx) > 0
    }
}

/// Tri-state answer of [`Polynomial::homogeneous_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Inhomogeneous,
}

/// An element of the free algebra on a [`Context`].
#[derive(Clone, Debug)]
pub struct Polynomial {
    ctx: Arc<Context>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub fn same_context(a: &Arc<Context>, b: &Arc<Context>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ctx: &Arc<Context>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<Context>, c: Scalar) -> Self {
        Self::term(ctx, c, Monomial::one())
    }

    pub fn one(ctx: &Arc<Context>) -> Self {
        Self::constant(ctx, Scalar::one())
    }

    pub fn term(ctx: &Arc<Context>, c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// The generator called `name`.
    pub fn var(ctx: &Arc<Context>, name: &str) -> Result<Self> {
        let idx = ctx.lookup(name)?;
        Ok(Self::term(ctx, Scalar::one(), Monomial::generator(idx)))
    }

    /// Sum of scalar multiples of named monomials, multiplied out in the
    /// written factor order (so signs follow the order given).
    pub fn from_terms<'a>(
        ctx: &Arc<Context>,
        terms: impl IntoIterator<Item = (Scalar, &'a [(&'a str, u32)])>,
    ) -> Result<Self> {
        let mut acc = Polynomial::zero(ctx);
        for (c, factors) in terms {
            let mut t = Polynomial::constant(ctx, c);
            for &(name, e) in factors {
                t = t.checked_mul(&Polynomial::var(ctx, name)?.pow(e))?;
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| self.ctx.monomial_degree(m));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Inhomogeneous,
        }
    }

    /// True when every term has word length at least two, i.e. the element
    /// lies in the square of the augmentation ideal.
    pub fn is_decomposable(&self) -> bool {
        self.terms.keys().all(|m| m.word_length() >= 2)
    }

    /// True when some term involves generator `idx`.
    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.contains(idx))
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Polynomial::zero(&self.ctx);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, m)) = self.ctx.multiply_monomials(a, b)? {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn neg_ref(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), -v)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by a single monomial on the right, with Koszul sign.
    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx);
        for (a, ca) in &self.terms {
            if let Some((sign, p)) = self.ctx.multiply_monomials(a, m).expect("same context") {
                let v = ca * c;
                out.add_term(p, if sign < 0 { -v } else { v });
            }
        }
        out
    }

    /// Re-express this element over a context that contains all of its
    /// generators (matched by name).
    pub fn embed(&self, ctx: &Arc<Context>) -> Result<Polynomial> {
        if same_context(&self.ctx, ctx) {
            return Ok(Polynomial {
                ctx: ctx.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<usize> = self
            .ctx
            .variables()
            .iter()
            .map(|v| ctx.lookup(v.name()))
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(ctx);
        for (m, c) in &self.terms {
            // Re-sorting can reorder odd factors, so rebuild by multiplication
            // in the old canonical order.
            let mut t = Polynomial::constant(ctx, c.clone());
            for &(i, e) in m.factors() {
                t = t.mul_monomial(&Monomial::from_factors([(map[i], e)]), &Scalar::one());
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Collect the coefficients of this polynomial along `basis`; returns
    /// `None` when some term is outside the basis.
    pub fn coordinates(&self, basis_index: &BTreeMap<Monomial, usize>) -> Option<Vec<Scalar>> {
        let mut v = alloc::vec![Scalar::zero(); basis_index.len()];
        for (m, c) in &self.terms {
            v[*basis_index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn from_coordinates(ctx: &Arc<Context>, basis: &[Monomial], coords: &[Scalar]) -> Polynomial {
        let mut out = Polynomial::zero(ctx);
        for (m, c) in basis.iter().zip(coords) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on mismatched contexts; use [`Polynomial::checked_add`] otherwise.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials over different contexts")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials over different contexts")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials over different contexts")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

/// Writes a monomial as `x1^2 y` using generator names.
pub fn write_monomial(f: &mut dyn fmt::Write, ctx: &Context, m: &Monomial) -> fmt::Result {
    if m.is_one() {
        return f.write_str("1");
    }
    for (k, &(i, e)) in m.factors().iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        f.write_str(ctx.variables()[i].name())?;
        if e > 1 {
            write!(f, "^{}", e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{} ", abs)?;
            }
            write_monomial(f, &self.ctx, m)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ctx() -> Arc<Context> {
        Context::new(vec![
            Variable::new("x", 2),
            Variable::new("v", 3),
            Variable::new("w", 5),
        ])
        .unwrap()
    }

    #[test]
    fn odd_generators_anticommute() {
        let c = ctx();
        let v = Polynomial::var(&c, "v").unwrap();
        let w = Polynomial::var(&c, "w").unwrap();
        assert_eq!(&v * &w, -(&w * &v));
        assert!((&w * &w).is_zero());
    }

    #[test]
    fn even_powers_commute() {
        let c = ctx();
        let x = Polynomial::var(&c, "x").unwrap();
        let (s, m) = c
            .multiply_monomials(&Monomial::from_factors([(0, 2)]), &Monomial::generator(0))
            .unwrap()
            .unwrap();
        assert_eq!(s, 1);
        assert_eq!(m, Monomial::from_factors([(0, 3)]));
        assert_eq!(x.pow(2) * x.clone(), x.pow(3));
    }

    #[test]
    fn additive_identity_and_zero_scaling() {
        let c = ctx();
        let p = Polynomial::var(&c, "x").unwrap().pow(3) + Polynomial::var(&c, "w").unwrap();
        assert_eq!(&p + &Polynomial::zero(&c), p);
        assert!(p.scale(&q(0)).is_zero());
    }

    #[test]
    fn homogeneity_states() {
        let c = Context::new(vec![Variable::new("x1", 8), Variable::new("x2", 10)]).unwrap();
        let x1 = Polynomial::var(&c, "x1").unwrap();
        let x2 = Polynomial::var(&c, "x2").unwrap();
        assert_eq!((x1.pow(3) * x2.clone()).homogeneous_degree(), Homogeneity::Degree(34));
        assert_eq!((x1 + x2).homogeneous_degree(), Homogeneity::Inhomogeneous);
        assert_eq!(Polynomial::zero(&c).homogeneous_degree(), Homogeneity::Zero);
    }

    #[test]
    fn rigid_bases_in_the_even_ideal() {
        let c = Context::new(vec![Variable::new("x1", 8), Variable::new("x2", 10)]).unwrap();
        let ideal = [0, 1];
        let b66 = c.monomial_basis_in_ideal(66, &ideal);
        let b52 = c.monomial_basis_in_ideal(52, &ideal);
        let b14 = c.monomial_basis_in_ideal(14, &ideal);
        assert_eq!(
            b66,
            vec![Monomial::from_factors([(0, 2), (1, 5)]), Monomial::from_factors([(0, 7), (1, 1)])]
        );
        assert_eq!(b52, vec![Monomial::from_factors([(0, 4), (1, 2)])]);
        assert!(b14.is_empty());
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let a = ctx();
        let b = Context::new(vec![Variable::new("y", 4)]).unwrap();
        let p = Polynomial::var(&a, "x").unwrap();
        let r = Polynomial::var(&b, "y").unwrap();
        assert_eq!(p.checked_mul(&r), Err(AlgebraError::ContextMismatch));
        assert!(Context::new(vec![Variable::new("x", 2), Variable::new("x", 3)]).is_err());
        assert!(Context::new(vec![Variable::new("x", 0)]).is_err());
    }

    #[test]
    fn display_is_readable() {
        let c = ctx();
        let x = Polynomial::var(&c, "x").unwrap();
        let v = Polynomial::var(&c, "v").unwrap();
        let p = x.pow(2).scale(&q_frac(3, 2)) - v.clone() * x.clone();
        assert_eq!(alloc::format!("{}", p), "-x v + 3/2 x^2");
    }
}
