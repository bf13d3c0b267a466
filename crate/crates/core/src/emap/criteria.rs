//! Subset-sum obstructions for generator-to-generator maps between
//! zero-differential models.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{AlgebraError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionVerdict {
    Pass,
    Obstructed,
}

impl CriterionVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            CriterionVerdict::Pass => "pass",
            CriterionVerdict::Obstructed => "obstructed",
        }
    }
}

/// `b[target] = Σ a[a_indices] + Σ b[b_indices]`. Indices are positions in
/// the input lists, sorted increasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetWitness {
    pub target: usize,
    pub target_degree: u32,
    pub a_indices: Vec<usize>,
    pub b_indices: Vec<usize>,
    pub a_degrees: Vec<u32>,
    pub b_degrees: Vec<u32>,
}

impl SubsetWitness {
    pub fn sum(&self) -> u32 {
        self.a_degrees.iter().chain(&self.b_degrees).sum()
    }
}

impl fmt::Display for SubsetWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.target_degree)?;
        for (k, d) in self.a_degrees.iter().chain(&self.b_degrees).enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", d)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub verdict: CriterionVerdict,
    /// At most one witness per obstructed target, in target order.
    pub witnesses: Vec<SubsetWitness>,
}

fn check_odd(list: &[u32], label: &str) -> Result<()> {
    match list.iter().find(|&&d| d % 2 == 0) {
        Some(d) => Err(AlgebraError::InvalidParameter(format!(
            "{} contains even degree {}",
            label, d
        ))),
        None => Ok(()),
    }
}

/// Reachable sums of sub-multisets of `items` (skipping `skip`), each with the
/// lexicographically first index set found. The empty subset gives sum 0.
fn subset_sums(items: &[u32], skip: Option<usize>, cap: u32) -> BTreeMap<u32, Vec<usize>> {
    let mut sums: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    sums.insert(0, Vec::new());
    for (i, &d) in items.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        let extended: Vec<(u32, Vec<usize>)> = sums
            .iter()
            .filter(|(s, _)| **s + d <= cap)
            .map(|(s, w)| {
                let mut w = w.clone();
                w.push(i);
                (s + d, w)
            })
            .collect();
        for (s, w) in extended {
            sums.entry(s).or_insert(w);
        }
    }
    sums
}

fn report(witnesses: Vec<SubsetWitness>) -> CriterionReport {
    CriterionReport {
        verdict: if witnesses.is_empty() {
            CriterionVerdict::Pass
        } else {
            CriterionVerdict::Obstructed
        },
        witnesses,
    }
}

fn witness(a: &[u32], b: &[u32], k: usize, ai: Vec<usize>, bi: Vec<usize>) -> SubsetWitness {
    SubsetWitness {
        target: k,
        target_degree: b[k],
        a_degrees: ai.iter().map(|&i| a[i]).collect(),
        b_degrees: bi.iter().map(|&i| b[i]).collect(),
        a_indices: ai,
        b_indices: bi,
    }
}

/// Co-E obstruction: some `b_k` is a sum of distinct `a`-generators.
pub fn co_e_subset_criterion(a: &[u32], b: &[u32]) -> Result<CriterionReport> {
    check_odd(a, "a")?;
    check_odd(b, "b")?;
    let cap = b.iter().copied().max().unwrap_or(0);
    let sums = subset_sums(a, None, cap);
    let witnesses = b
        .iter()
        .enumerate()
        .filter_map(|(k, &target)| {
            let ai = sums.get(&target).filter(|w| !w.is_empty())?;
            Some(witness(a, b, k, ai.clone(), Vec::new()))
        })
        .collect();
    Ok(report(witnesses))
}

/// E obstruction: some `b_k` is a sum of a nonempty set of distinct
/// `a`-generators plus a possibly empty set of other `b`-generators.
pub fn e_subset_criterion(a: &[u32], b: &[u32]) -> Result<CriterionReport> {
    check_odd(a, "a")?;
    check_odd(b, "b")?;
    let cap = b.iter().copied().max().unwrap_or(0);
    let a_sums = subset_sums(a, None, cap);
    let mut witnesses = Vec::new();
    for (k, &target) in b.iter().enumerate() {
        let b_sums = subset_sums(b, Some(k), target);
        let found = a_sums
            .iter()
            .filter(|(s, w)| !w.is_empty() && **s <= target)
            .find_map(|(s, w)| b_sums.get(&(target - s)).map(|bw| (w.clone(), bw.clone())));
        if let Some((ai, bi)) = found {
            witnesses.push(witness(a, b, k, ai, bi));
        }
    }
    Ok(report(witnesses))
}

/// Renders a witness list as `"9 = 1+3+5"` strings.
pub fn witness_strings(r: &CriterionReport) -> Vec<String> {
    r.witnesses.iter().map(|w| format!("{}", w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_obstruction() {
        let r = co_e_subset_criterion(&[1, 3, 5], &[7, 9]).unwrap();
        assert_eq!(r.verdict, CriterionVerdict::Obstructed);
        assert_eq!(witness_strings(&r), ["9 = 1+3+5"]);
    }

    #[test]
    fn repeated_degrees_are_distinct_generators() {
        let r = co_e_subset_criterion(&[3, 3, 3], &[9]).unwrap();
        assert_eq!(r.witnesses[0].a_indices, [0, 1, 2]);
    }

    #[test]
    fn symplectic_small_rank_passes() {
        let b: Vec<u32> = (5..=20).map(|i| 4 * i - 1).collect();
        let r = co_e_subset_criterion(&[3, 7, 11, 15], &b).unwrap();
        assert_eq!(r.verdict, CriterionVerdict::Pass);
    }

    #[test]
    fn e_criterion_cases() {
        assert_eq!(
            e_subset_criterion(&[1, 3, 5], &[7]).unwrap().verdict,
            CriterionVerdict::Pass
        );
        let r = e_subset_criterion(&[1, 3, 5], &[7, 9]).unwrap();
        assert_eq!(witness_strings(&r), ["9 = 1+3+5"]);
        let r = e_subset_criterion(&[3, 5, 7], &[9, 11, 13, 15, 17]).unwrap();
        let w17 = r.witnesses.iter().find(|w| w.target_degree == 17).unwrap();
        assert_eq!(w17.sum(), 17);
        assert!(!w17.a_indices.is_empty());
    }

    #[test]
    fn even_degree_rejected() {
        assert!(co_e_subset_criterion(&[2], &[3]).is_err());
        assert!(e_subset_criterion(&[1], &[4]).is_err());
    }
}
