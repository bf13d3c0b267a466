//! Perturbations `v ↦ v + ε` of a single generator.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cdga::{basis_index, Derivation, FreeCdga};
use crate::error::{AlgebraError, Result};
use crate::graded::{q, Monomial, Polynomial, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::morphism::CdgaMorphism;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionReport {
    pub generator: String,
    /// Dimension of admissible corrections modulo exact elements.
    pub dimension: usize,
    /// Admissible corrections whose classes form a basis of the quotient.
    pub class_basis: Vec<Polynomial>,
    pub admissible_dimension: usize,
    pub exact_dimension: usize,
}

/// Corrections `ε` of degree `|v|`, built from monomials other than `v`, such
/// that `dε = 0` and the derivation `θ` with `θ(v) = ε` (zero on the other
/// generators) kills `du` for every generator `u`; counted modulo exact
/// elements of that degree.
pub fn correction_class_dimension(model: &FreeCdga, generator: &str) -> Result<CorrectionReport> {
    let ctx = model.context();
    let vi = ctx.lookup(generator)?;
    let deg = ctx.degree_of(vi);
    let bound = model.degree_bound();
    if deg + 1 > bound {
        return Err(AlgebraError::TruncationExceeded { degree: deg + 1, bound });
    }
    let v_mono = Monomial::generator(vi);
    let basis: Vec<Monomial> = ctx.monomial_basis(deg);
    let candidates: Vec<usize> = (0..basis.len()).filter(|&i| basis[i] != v_mono).collect();
    let next = ctx.monomial_basis(deg + 1);
    let next_idx = basis_index(&next);

    // one block of rows for dε, one per generator u for θ(du)
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for &ci in &candidates {
        let eps = Polynomial::term(ctx, q(1), basis[ci].clone());
        let mut col = model.d(&eps)?.coordinates(&next_idx).expect("homogeneous");
        let mut images: Vec<Polynomial> = (0..ctx.len()).map(|_| Polynomial::zero(ctx)).collect();
        images[vi] = eps;
        let theta = Derivation::new(ctx, 0, images)?;
        for u in 0..ctx.len() {
            let du = model.d_generator(u);
            if du.is_zero() {
                continue;
            }
            let tdu = theta.apply(du)?;
            let ud = ctx.degree_of(u) + 1;
            let ub = ctx.monomial_basis(ud);
            col.extend(tdu.coordinates(&basis_index(&ub)).expect("homogeneous"));
        }
        columns.push(col);
    }
    let rows = columns.first().map_or(0, Vec::len);
    let admissible: Vec<Vec<Scalar>> = if candidates.is_empty() {
        Vec::new()
    } else {
        Matrix::from_columns(rows, &columns).kernel()
    };
    let embed = |k: &Vec<Scalar>| -> Vec<Scalar> {
        let mut full = vec![Scalar::zero(); basis.len()];
        for (j, &ci) in candidates.iter().enumerate() {
            full[ci] = k[j].clone();
        }
        full
    };
    let mut span = Subspace::new(basis.len());
    if deg > 0 {
        let (_, _, dm) = model.d_matrix(deg - 1);
        for j in 0..dm.cols() {
            let col: Vec<Scalar> = (0..dm.rows()).map(|i| dm.get(i, j).clone()).collect();
            span.insert(&col);
        }
    }
    let exact_dimension = span.rank();
    let mut class_basis = Vec::new();
    for k in &admissible {
        let full = embed(k);
        if span.insert(&full) {
            class_basis.push(Polynomial::from_coordinates(ctx, &basis, &full));
        }
    }
    Ok(CorrectionReport {
        generator: generator.to_string(),
        dimension: class_basis.len(),
        class_basis,
        admissible_dimension: admissible.len(),
        exact_dimension,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingConstraint {
    /// Exponent pairs `(i, j)` of `a^i b^j` occurring in `h(dz)`, and whether
    /// each such product is forced to equal 1.
    pub forced: Vec<((u32, u32), bool)>,
    pub kernel_dimension: usize,
    /// Every solution has `d(correction) = 0`.
    pub corrections_are_cocycles: bool,
}

impl ScalingConstraint {
    pub fn product_forced_one(&self, i: u32, j: u32) -> bool {
        self.forced.iter().any(|&(e, f)| e == (i, j) && f)
    }
}

/// For `h` fixing every generator except `v ↦ a v`, `w ↦ b w` and
/// `z ↦ z + Σ c_m m` (sum over the other degree-`|z|` monomials), solves
/// `d h(z) = h(dz)` with each product `a^i b^j` in `h(dz)` as its own unknown.
pub fn extension_scaling_constraint(model: &FreeCdga, z: &str, v: &str, w: &str) -> Result<ScalingConstraint> {
    let ctx = model.context();
    let (zi, vi, wi) = (ctx.lookup(z)?, ctx.lookup(v)?, ctx.lookup(w)?);
    for u in 0..ctx.len() {
        let du = model.d_generator(u);
        if u != zi && (du.involves(vi) || du.involves(wi) || du.involves(zi)) {
            return Err(AlgebraError::InvalidParameter(format!(
                "differential of {} involves the scaled generators",
                ctx.variables()[u].name()
            )));
        }
    }
    let deg = ctx.degree_of(zi);
    let z_mono = Monomial::generator(zi);
    let basis: Vec<Monomial> = ctx.monomial_basis(deg).into_iter().filter(|m| *m != z_mono).collect();
    let next = ctx.monomial_basis(deg + 1);
    let next_idx = basis_index(&next);
    // split dz by exponents of v and w
    let mut parts: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
    for (m, c) in model.d_generator(zi).terms() {
        let key = (m.exponent(vi), m.exponent(wi));
        let e = parts.entry(key).or_insert_with(|| Polynomial::zero(ctx));
        *e = &*e + &Polynomial::term(ctx, c.clone(), m.clone());
    }
    let keys: Vec<(u32, u32)> = parts.keys().copied().filter(|k| *k != (0, 0)).collect();
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(basis.len() + keys.len());
    for m in &basis {
        let p = Polynomial::term(ctx, q(1), m.clone());
        columns.push(model.d(&p)?.coordinates(&next_idx).expect("homogeneous"));
    }
    for k in &keys {
        let col = (-&parts[k]).coordinates(&next_idx).expect("homogeneous");
        columns.push(col);
    }
    let kernel = Matrix::from_columns(next.len(), &columns).kernel();
    let n = basis.len();
    let forced = keys
        .iter()
        .enumerate()
        .map(|(j, k)| (*k, kernel.iter().all(|x| x[n + j].is_zero())))
        .collect();
    let mut cocycles = true;
    for x in &kernel {
        let corr = Polynomial::from_coordinates(ctx, &basis, &x[..n]);
        if !model.d(&corr)?.is_zero() {
            cocycles = false;
        }
    }
    Ok(ScalingConstraint {
        forced,
        kernel_dimension: kernel.len(),
        corrections_are_cocycles: cocycles,
    })
}

/// The automorphism sending each generator to itself plus the sum of all
/// decomposable monomials of its degree. Only meaningful on models with
/// zero differential, where every such map commutes with `d`.
pub fn universal_perturbation(model: &FreeCdga) -> Result<CdgaMorphism> {
    if !model.has_zero_differential() {
        return Err(AlgebraError::InvalidModel("universal perturbation needs d = 0".into()));
    }
    let ctx = model.context();
    let images: Vec<Polynomial> = (0..ctx.len())
        .map(|i| {
            let mut p = Polynomial::term(ctx, q(1), Monomial::generator(i));
            for m in ctx.monomial_basis(ctx.degree_of(i)) {
                if m.word_length() >= 2 {
                    p = &p + &Polynomial::term(ctx, q(1), m);
                }
            }
            p
        })
        .collect();
    CdgaMorphism::from_images(model, model, images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(m: u32, n: u32) -> FreeCdga {
        FreeCdga::build(&[("x", m), ("y", n), ("z", 2 * m - 1)], |c| {
            Ok(vec![("z".into(), Polynomial::var(c, "x")?.pow(2))])
        })
        .unwrap()
    }

    #[test]
    fn product_corrections() {
        assert_eq!(correction_class_dimension(&product(4, 3), "z").unwrap().dimension, 1);
        assert_eq!(correction_class_dimension(&product(4, 7), "z").unwrap().dimension, 1);
        assert_eq!(correction_class_dimension(&product(4, 9), "z").unwrap().dimension, 0);
    }

    #[test]
    fn exact_correction_vanishes() {
        let m = FreeCdga::build(&[("x", 4), ("y", 3), ("v", 6)], |c| {
            Ok(vec![("v".into(), &Polynomial::var(c, "x")? * &Polynomial::var(c, "y")?)])
        })
        .unwrap();
        let r = correction_class_dimension(&m, "v").unwrap();
        assert_eq!(r.dimension, 0);
    }

    #[test]
    fn scaling_constraint_on_small_extension() {
        // d z = x^2 + v w with |v| = 3, |w| = 5, |x| = 4
        let m = FreeCdga::build(&[("x", 4), ("v", 3), ("w", 5), ("z", 7)], |c| {
            let x = Polynomial::var(c, "x")?;
            Ok(vec![(
                "z".into(),
                &x.pow(2) + &(&Polynomial::var(c, "v")? * &Polynomial::var(c, "w")?),
            )])
        })
        .unwrap();
        let r = extension_scaling_constraint(&m, "z", "v", "w").unwrap();
        assert!(r.product_forced_one(1, 1));
        assert!(r.corrections_are_cocycles);
    }
}
