use serde_json::Value;
use sullivan::reproduce::{self, paper_report};
use sullivan_core::catalog;
use sullivan_core::emap::{
    co_e_subset_criterion, correction_class_dimension, e_subset_criterion, solve_post_square, solve_pre_square,
    witness_strings, Direction, SquareProblem,
};

fn degrees(v: &Value) -> Vec<u32> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as u32).collect()
}

fn catalog_morphism(spec: &str) -> Option<sullivan_core::morphism::CdgaMorphism> {
    let mut words = spec.split_whitespace();
    let name = words.next()?;
    let args: Vec<&str> = words.collect();
    catalog::catalog_morphism(name, &args).ok()
}

#[test]
fn json_is_deterministic_and_complete() {
    let a = paper_report().to_json();
    let b = paper_report().to_json();
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.len() > 300);
    for e in entries {
        for key in ["id", "operation", "inputs", "verdict", "witnesses", "citation"] {
            assert!(e.get(key).is_some(), "{} lacks {}", e["id"], key);
        }
    }
    assert!(v["mismatches"].as_array().unwrap().is_empty(), "{}", v["mismatches"]);
}

#[test]
fn text_mentions_required_results() {
    let text = paper_report().to_text();
    assert!(text.contains("Sp first obstruction: 3+7+11+15+19 = 55 at (m,n) = (5,14)"));
    assert!(text.contains("(1,0,1,0,1,0,1)"));
    for row in ["m-1=n", "2m-1=n", "other"] {
        assert!(text.contains(&format!("row={}", row)), "{}", row);
    }
}

#[test]
fn verdicts_match_direct_library_calls() {
    let report = paper_report();
    let mut checked = 0;
    for e in &report.entries {
        let inputs = &e.inputs;
        match e.operation.as_str() {
            "co_e_subset_criterion" | "e_subset_criterion" if inputs["a"].is_array() && inputs["b"].is_array() => {
                let (a, b) = (degrees(&inputs["a"]), degrees(&inputs["b"]));
                let r = if e.operation == "co_e_subset_criterion" {
                    co_e_subset_criterion(&a, &b)
                } else {
                    e_subset_criterion(&a, &b)
                }
                .unwrap();
                assert_eq!(e.verdict, r.verdict.as_str(), "{}", e.id);
                for w in witness_strings(&r) {
                    assert!(e.witnesses.contains(&w), "{}: {}", e.id, w);
                }
                checked += 1;
            }
            "correction_class_dimension" => {
                let m = inputs["m"].as_u64().unwrap() as u32;
                let n = inputs["n"].as_u64().unwrap() as u32;
                let prod = correction_class_dimension(&catalog::product_ev(m, n).unwrap(), "z").unwrap().dimension;
                let wedge = correction_class_dimension(&catalog::wedge_trunc(m, n).unwrap(), "z").unwrap().dimension;
                assert_eq!(e.verdict, format!("({},{})", prod, wedge), "{}", e.id);
                checked += 1;
            }
            "solve_post_square" | "solve_pre_square" => {
                let (Some(bridge), Some(known)) = (
                    inputs["bridge"].as_str().and_then(catalog_morphism),
                    inputs["auto"].as_str().and_then(catalog_morphism),
                ) else {
                    continue;
                };
                let verdict = if e.operation == "solve_post_square" {
                    solve_post_square(&SquareProblem::new(bridge, known, Direction::E).unwrap())
                } else {
                    solve_pre_square(&SquareProblem::new(bridge, known, Direction::CoE).unwrap())
                }
                .unwrap()
                .verdict();
                assert_eq!(e.verdict, verdict, "{}", e.id);
                checked += 1;
            }
            "validate_cdga" if inputs.get("entry").is_some() => {
                let (_, failures) = reproduce::validate_model_grid(inputs["entry"].as_str().unwrap());
                assert_eq!(e.verdict == "pass", failures.is_empty(), "{}", e.id);
                checked += 1;
            }
            _ => {}
        }
    }
    assert!(checked > 250, "{} entries rechecked", checked);
}
