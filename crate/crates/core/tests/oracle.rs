use proptest::prelude::*;
use sullivan_core::emap::{co_e_subset_criterion, e_subset_criterion, CriterionVerdict};

/// Exhaustive enumeration: for each target, every nonempty subset of `a`
/// and (for E) every subset of `b` avoiding the target.
fn enumerate(a: &[u32], b: &[u32], with_b: bool) -> Vec<usize> {
    let mut hits = Vec::new();
    for (k, &t) in b.iter().enumerate() {
        let b_masks: Vec<u32> = if with_b {
            (0..1u32 << b.len()).filter(|m| m & (1 << k) == 0).collect()
        } else {
            vec![0]
        };
        let found = (1..1u32 << a.len()).any(|am| {
            let sa: u32 = (0..a.len()).filter(|i| am & (1 << i) != 0).map(|i| a[i]).sum();
            b_masks.iter().any(|bm| {
                let sb: u32 = (0..b.len()).filter(|i| bm & (1 << i) != 0).map(|i| b[i]).sum();
                sa + sb == t
            })
        });
        if found {
            hits.push(k);
        }
    }
    hits
}

fn odd_lists() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (1usize..=7).prop_flat_map(|na| {
        (
            prop::collection::vec((0u32..=20).prop_map(|k| 2 * k + 1), na),
            prop::collection::vec((0u32..=20).prop_map(|k| 2 * k + 1), 1..=(12 - na).min(7)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn co_e_matches_enumeration((a, b) in odd_lists()) {
        let r = co_e_subset_criterion(&a, &b).unwrap();
        let targets: Vec<usize> = r.witnesses.iter().map(|w| w.target).collect();
        prop_assert_eq!(&targets, &enumerate(&a, &b, false));
        prop_assert_eq!(r.verdict == CriterionVerdict::Pass, targets.is_empty());
        for w in &r.witnesses {
            prop_assert_eq!(w.sum(), b[w.target]);
            prop_assert!(w.b_indices.is_empty());
        }
    }

    #[test]
    fn e_matches_enumeration((a, b) in odd_lists()) {
        let r = e_subset_criterion(&a, &b).unwrap();
        let targets: Vec<usize> = r.witnesses.iter().map(|w| w.target).collect();
        prop_assert_eq!(&targets, &enumerate(&a, &b, true));
        for w in &r.witnesses {
            prop_assert_eq!(w.sum(), b[w.target]);
            prop_assert!(!w.a_indices.is_empty());
            prop_assert!(!w.b_indices.contains(&w.target));
        }
    }

    #[test]
    fn co_e_obstruction_implies_e_obstruction((a, b) in odd_lists()) {
        let co = co_e_subset_criterion(&a, &b).unwrap().verdict;
        let e = e_subset_criterion(&a, &b).unwrap().verdict;
        if co == CriterionVerdict::Obstructed {
            prop_assert_eq!(e, CriterionVerdict::Obstructed);
        }
    }
}
