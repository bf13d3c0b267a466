//! Solving for the missing automorphism in a homotopy-commutative square.
//!
//! With `bridge: B → A`, the E direction takes a known automorphism `g` of
//! `A` and looks for `h` on `B` with `bridge ∘ h ≃ g ∘ bridge`; the co-E
//! direction takes a known `h` on `B` and looks for `g` on `A`. In both cases
//! the unknown is written as `identity + offset`, one generator at a time in
//! dependency order, and every square condition is relaxed by an exactness
//! slack `d e`. Free variables are set to zero, offsets before slacks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cdga::{basis_index, FreeCdga};
use crate::error::{AlgebraError, Result};
use crate::graded::{Monomial, Polynomial, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::morphism::{exact_difference_homotopy, CdgaMorphism, HomotopyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    E,
    CoE,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::E => "e",
            Direction::CoE => "coe",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SquareProblem {
    pub bridge: CdgaMorphism,
    pub known: CdgaMorphism,
    pub direction: Direction,
}

impl SquareProblem {
    pub fn new(bridge: CdgaMorphism, known: CdgaMorphism, direction: Direction) -> Result<Self> {
        let home = match direction {
            Direction::E => bridge.target(),
            Direction::CoE => bridge.source(),
        };
        if known.source() != home || known.target() != home {
            return Err(AlgebraError::ModelMismatch);
        }
        for (label, m) in [("bridge", &bridge), ("known map", &known)] {
            if let Some(v) = m.validate().violations.first() {
                return Err(AlgebraError::InvalidMorphism(format!("{}: {}", label, v)));
            }
        }
        if !known.is_invertible() {
            return Err(AlgebraError::InvalidMorphism("known map is not invertible".into()));
        }
        Ok(SquareProblem {
            bridge,
            known,
            direction,
        })
    }

    /// The two composites `B → A` that should agree up to homotopy, given
    /// the unknown automorphism.
    pub fn composites(&self, unknown: &CdgaMorphism) -> Result<(CdgaMorphism, CdgaMorphism)> {
        match self.direction {
            Direction::E => Ok((unknown.then(&self.bridge)?, self.bridge.then(&self.known)?)),
            Direction::CoE => Ok((self.bridge.then(unknown)?, self.known.then(&self.bridge)?)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SquareSolution {
    pub unknown: CdgaMorphism,
    /// Exactness primitives `η(v)` with `δ(v) = d η(v)` per generator of `B`.
    pub primitives: Vec<(String, Polynomial)>,
    pub homotopy: HomotopyReport,
}

#[derive(Clone, Debug)]
pub enum SquareOutcome {
    Solved(SquareSolution),
    /// The linear system (with exactness slack) is infeasible; `residual` is
    /// the obstruction left over at `generator`.
    NoSolution {
        generator: String,
        residual: Polynomial,
        reason: String,
    },
    Unsupported {
        reason: String,
    },
}

impl SquareOutcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            SquareOutcome::Solved(_) => "solution",
            SquareOutcome::NoSolution { .. } => "no_solution",
            SquareOutcome::Unsupported { .. } => "unsupported",
        }
    }

    pub fn solution(&self) -> Option<&SquareSolution> {
        match self {
            SquareOutcome::Solved(s) => Some(s),
            _ => None,
        }
    }
}

pub fn solve_post_square(p: &SquareProblem) -> Result<SquareOutcome> {
    if p.direction != Direction::E {
        return Err(AlgebraError::InvalidParameter("post-square solver needs direction E".into()));
    }
    solve(p)
}

pub fn solve_pre_square(p: &SquareProblem) -> Result<SquareOutcome> {
    if p.direction != Direction::CoE {
        return Err(AlgebraError::InvalidParameter("pre-square solver needs direction coE".into()));
    }
    solve(p)
}

pub fn solve_square(p: &SquareProblem) -> Result<SquareOutcome> {
    solve(p)
}

/// One square condition `L(o) − d e = R` attached to an unknown generator.
struct Condition {
    source_gen: usize,
    /// Columns of `L` on the offset basis, as elements of `A`.
    columns: Vec<Polynomial>,
    rhs: Polynomial,
    /// The known composite, used to describe an obstruction.
    composite: Polynomial,
}

fn exact_space(a: &FreeCdga, degree: u32, dim: usize) -> (Subspace, Option<Matrix>) {
    if degree == 0 {
        return (Subspace::new(dim), None);
    }
    let (_, dst, m) = a.d_matrix(degree - 1);
    debug_assert_eq!(dst.len(), dim);
    let cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|j| (0..m.rows()).map(|i| m.get(i, j).clone()).collect()).collect();
    let space = Subspace::spanned_by(dim, &cols);
    if space.rank() == 0 {
        (space, None)
    } else {
        (space, Some(m))
    }
}

fn solve(p: &SquareProblem) -> Result<SquareOutcome> {
    let bridge = &p.bridge;
    let b_model = bridge.source();
    let a_model = bridge.target();
    let u_model = match p.direction {
        Direction::E => b_model,
        Direction::CoE => a_model,
    };
    let uctx = u_model.context();
    let n_u = u_model.generators().len();

    // relevant square conditions per unknown generator: (B generator, λ)
    let mut relevant: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n_u];
    let mut killed: Vec<usize> = Vec::new();
    match p.direction {
        Direction::E => {
            for (w, rel) in relevant.iter_mut().enumerate() {
                rel.push((w, Scalar::from_integer(1.into())));
            }
        }
        Direction::CoE => {
            for (v, img) in bridge.images().iter().enumerate() {
                if img.is_zero() {
                    killed.push(v);
                    continue;
                }
                let mut terms = img.terms();
                let (m, c) = terms.next().expect("nonzero");
                let single = terms.next().is_none() && m.word_length() == 1 && m.factors()[0].1 == 1;
                if !single {
                    return Ok(SquareOutcome::Unsupported {
                        reason: format!(
                            "nonlinear: bridge sends {} to {}, not a multiple of a generator",
                            b_model.generators()[v].name(),
                            img
                        ),
                    });
                }
                relevant[m.factors()[0].0].push((v, c.clone()));
            }
        }
    }

    // co-E: generators killed by the bridge must have exact images under h
    for &v in &killed {
        let composite = bridge.apply(&p.known.images()[v])?;
        if composite.is_zero() {
            continue;
        }
        let deg = b_model.context().degree_of(v);
        let basis = a_model.context().monomial_basis(deg);
        let idx = basis_index(&basis);
        let (exact, _) = exact_space(a_model, deg, basis.len());
        let coords = composite.coordinates(&idx).expect("homogeneous");
        let nf = exact.reduce(&coords);
        if nf.iter().any(|x| !x.is_zero()) {
            return Ok(SquareOutcome::NoSolution {
                generator: b_model.generators()[v].name().to_string(),
                residual: Polynomial::from_coordinates(a_model.context(), &basis, &nf),
                reason: format!(
                    "bridge kills {} but its image under the known map goes to the non-exact {}",
                    b_model.generators()[v].name(),
                    composite
                ),
            });
        }
    }

    let mut images: Vec<Option<Polynomial>> = vec![None; n_u];
    let mut has_free: Vec<bool> = vec![false; n_u];
    for w in u_model.generator_order() {
        let wname = u_model.generators()[w].name().to_string();
        let deg = uctx.degree_of(w);
        let offset_basis: Vec<Monomial> = uctx.monomial_basis(deg);
        let w_poly = Polynomial::term(uctx, Scalar::from_integer(1.into()), Monomial::generator(w));
        let mono = |m: &Monomial| Polynomial::term(uctx, Scalar::from_integer(1.into()), m.clone());

        let conditions: Vec<Condition> = relevant[w]
            .iter()
            .map(|(v, lambda)| -> Result<Condition> {
                Ok(match p.direction {
                    Direction::E => {
                        let composite = p.known.apply(&bridge.images()[*v])?;
                        let columns = offset_basis.iter().map(|m| bridge.apply(&mono(m))).collect::<Result<_>>()?;
                        let rhs = &composite - &bridge.apply(&w_poly)?;
                        Condition {
                            source_gen: *v,
                            columns,
                            rhs,
                            composite,
                        }
                    }
                    Direction::CoE => {
                        let composite = bridge.apply(&p.known.images()[*v])?;
                        let columns = offset_basis.iter().map(|m| mono(m).scale(lambda)).collect();
                        let rhs = &composite - &w_poly.scale(lambda);
                        Condition {
                            source_gen: *v,
                            columns,
                            rhs,
                            composite,
                        }
                    }
                })
            })
            .collect::<Result<_>>()?;

        let a_basis = a_model.context().monomial_basis(deg);
        let a_idx = basis_index(&a_basis);
        let na = a_basis.len();
        let (exact, d_prev) = exact_space(a_model, deg, na);
        let n_slack = d_prev.as_ref().map_or(0, Matrix::cols);
        let n_c = offset_basis.len();
        let n_cols = n_c + conditions.len() * n_slack;

        let build_square = |rows: &mut Vec<Vec<Scalar>>, rhs: &mut Vec<Scalar>| {
            for (ci, cond) in conditions.iter().enumerate() {
                let col_coords: Vec<Vec<Scalar>> = cond
                    .columns
                    .iter()
                    .map(|c| c.coordinates(&a_idx).expect("homogeneous"))
                    .collect();
                let r = cond.rhs.coordinates(&a_idx).expect("homogeneous");
                for i in 0..na {
                    let mut row = vec![Scalar::zero(); n_cols];
                    for (j, cc) in col_coords.iter().enumerate() {
                        row[j] = cc[i].clone();
                    }
                    if let Some(dm) = &d_prev {
                        for k in 0..n_slack {
                            row[n_c + ci * n_slack + k] = -dm.get(i, k).clone();
                        }
                    }
                    rows.push(row);
                    rhs.push(r[i].clone());
                }
            }
        };

        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        build_square(&mut rows, &mut rhs);
        let square_only = Matrix::from_rows(n_cols, rows.clone());
        let Some(x0) = square_only.solve(&rhs) else {
            return Ok(no_solution_square(&conditions, &exact, &a_idx, &a_basis, a_model, b_model, p.direction));
        };

        // d-commutation with already determined generators
        let dw = u_model.d_generator(w);
        if let Some(j) = (0..n_u).find(|&j| j != w && dw.involves(j) && images[j].is_none()) {
            return Ok(SquareOutcome::Unsupported {
                reason: format!(
                    "differential of {} involves the undetermined {}",
                    wname,
                    u_model.generators()[j].name()
                ),
            });
        }
        let current: Vec<Polynomial> = (0..n_u)
            .map(|j| images[j].clone().unwrap_or_else(|| Polynomial::zero(uctx)))
            .collect();
        let partial = CdgaMorphism::from_images(u_model, u_model, current)?;
        let lhs = partial.apply(dw)?;
        let nb = uctx.monomial_basis(deg + 1);
        let nb_idx = basis_index(&nb);
        let d_rhs = (&lhs - &u_model.d(&w_poly)?).coordinates(&nb_idx).expect("homogeneous");
        let d_cols: Vec<Vec<Scalar>> = offset_basis
            .iter()
            .map(|m| u_model.d(&mono(m)).map(|p| p.coordinates(&nb_idx).expect("homogeneous")))
            .collect::<Result<_>>()?;
        for i in 0..nb.len() {
            let mut row = vec![Scalar::zero(); n_cols];
            for (j, cc) in d_cols.iter().enumerate() {
                row[j] = cc[i].clone();
            }
            rows.push(row);
            rhs.push(d_rhs[i].clone());
        }
        let full = Matrix::from_rows(n_cols, rows);
        let offsets = match full.solve(&rhs) {
            Some(x) => x,
            None => {
                let trial = &w_poly + &Polynomial::from_coordinates(uctx, &offset_basis, &x0[..n_c]);
                let residual = &u_model.d(&trial)? - &lhs;
                let upstream: Vec<&str> = (0..n_u)
                    .filter(|&j| j != w && dw.involves(j) && has_free[j])
                    .map(|j| u_model.generators()[j].name())
                    .collect();
                if !upstream.is_empty() {
                    return Ok(SquareOutcome::Unsupported {
                        reason: format!(
                            "nonlinear: d-commutation at {} depends on free choices made for {}",
                            wname,
                            upstream.join(", ")
                        ),
                    });
                }
                return Ok(SquareOutcome::NoSolution {
                    generator: wname.clone(),
                    residual,
                    reason: format!("no image of {} satisfying the square also commutes with d", wname),
                });
            }
        };
        let mut pivots_probe = full.clone();
        let pivots = pivots_probe.rref();
        has_free[w] = (0..n_c).any(|c| !pivots.contains(&c));
        let img = &w_poly + &Polynomial::from_coordinates(uctx, &offset_basis, &offsets[..n_c]);
        images[w] = Some(img);
    }

    let images: Vec<Polynomial> = images.into_iter().map(|p| p.expect("all processed")).collect();
    let unknown = CdgaMorphism::from_images(u_model, u_model, images)?;
    if let Some(v) = unknown.validate().violations.first() {
        return Ok(SquareOutcome::Unsupported {
            reason: format!("solved map fails validation: {}", v),
        });
    }
    if !unknown.is_invertible() {
        return Ok(SquareOutcome::Unsupported {
            reason: "solved map has a singular linear part".into(),
        });
    }
    let (lhs, rhs) = p.composites(&unknown)?;
    let homotopy = exact_difference_homotopy(&lhs, &rhs)?;
    if !homotopy.verdict.is_homotopic() {
        return Ok(SquareOutcome::Unsupported {
            reason: format!(
                "square solved up to exact terms but the homotopy check returned {}",
                homotopy.verdict.as_str()
            ),
        });
    }
    let primitives = homotopy
        .differences
        .iter()
        .filter_map(|d| d.primitive.clone().map(|p| (d.generator.clone(), p)))
        .collect();
    Ok(SquareOutcome::Solved(SquareSolution {
        unknown,
        primitives,
        homotopy,
    }))
}

fn no_solution_square(
    conditions: &[Condition],
    exact: &Subspace,
    a_idx: &BTreeMap<Monomial, usize>,
    a_basis: &[Monomial],
    a_model: &FreeCdga,
    b_model: &FreeCdga,
    direction: Direction,
) -> SquareOutcome {
    let actx = a_model.context();
    let mut span = exact.clone();
    if direction == Direction::E {
        for c in &conditions[0].columns {
            span.insert(&c.coordinates(a_idx).expect("homogeneous"));
        }
        let nf = span.reduce(&conditions[0].composite.coordinates(a_idx).expect("homogeneous"));
        let v = conditions[0].source_gen;
        return SquareOutcome::NoSolution {
            generator: b_model.generators()[v].name().to_string(),
            residual: Polynomial::from_coordinates(actx, a_basis, &nf),
            reason: format!(
                "the known composite on {} is not the bridge image of any degree-{} element modulo exact terms",
                b_model.generators()[v].name(),
                b_model.context().degree_of(v)
            ),
        };
    }
    // co-E: the conditions all determine the same image; compare them pairwise
    let first = &conditions[0];
    let lambda0 = first.columns[0].terms().next().map(|(_, c)| c.clone());
    for other in &conditions[1..] {
        let lambda1 = other.columns[0].terms().next().map(|(_, c)| c.clone());
        if let (Some(l0), Some(l1)) = (&lambda0, &lambda1) {
            let diff = &other.composite.scale(&(l0 / l1)) - &first.composite;
            let nf = exact.reduce(&diff.coordinates(a_idx).expect("homogeneous"));
            if nf.iter().any(|x| !x.is_zero()) {
                return SquareOutcome::NoSolution {
                    generator: b_model.generators()[other.source_gen].name().to_string(),
                    residual: Polynomial::from_coordinates(actx, a_basis, &nf),
                    reason: format!(
                        "{} and {} map to the same generator with incompatible known images",
                        b_model.generators()[first.source_gen].name(),
                        b_model.generators()[other.source_gen].name()
                    ),
                };
            }
        }
    }
    SquareOutcome::NoSolution {
        generator: b_model.generators()[first.source_gen].name().to_string(),
        residual: first.composite.clone(),
        reason: "square conditions are jointly infeasible".into(),
    }
}
