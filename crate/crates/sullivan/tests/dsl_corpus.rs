use std::path::PathBuf;

use sullivan::cli::catalog_text;
use sullivan::dsl::{build_program, parse_source};
use sullivan_core::catalog;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

fn corpus() -> Vec<(String, String)> {
    let mut files: Vec<(String, String)> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "sl"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    files.sort();
    for e in catalog::ENTRIES {
        files.push((format!("catalog:{}", e.name), catalog_text(e.name, &[]).unwrap()));
    }
    files
}

#[test]
fn parse_print_parse_is_idempotent() {
    let files = corpus();
    assert!(files.len() >= 20, "{} files", files.len());
    for (name, text) in &files {
        let first = parse_source(text).unwrap_or_else(|d| panic!("{}: {}", name, d));
        let printed = first.to_string();
        let second = parse_source(&printed).unwrap_or_else(|d| panic!("{} reprint: {}\n{}", name, d, printed));
        assert_eq!(first, second, "{}", name);
        assert_eq!(printed, second.to_string(), "{}", name);
        build_program(&second).unwrap_or_else(|d| panic!("{}: {}", name, d));
    }
}

#[test]
fn catalog_exports_rebuild_to_the_same_models() {
    for e in catalog::ENTRIES.iter().filter(|e| e.kind == catalog::EntryKind::Model) {
        let text = catalog_text(e.name, &[]).unwrap();
        let prog = build_program(&parse_source(&text).unwrap()).unwrap();
        let rebuilt = &prog.models[e.name];
        let original = catalog::catalog_model(e.name, e.example).unwrap();
        assert_eq!(rebuilt.generators(), original.generators(), "{}", e.name);
        for (i, g) in original.generators().iter().enumerate() {
            assert_eq!(
                rebuilt.d_generator(i).to_string(),
                original.d_generator(i).to_string(),
                "{} d{}",
                e.name,
                g.name()
            );
        }
        assert!(rebuilt.validate().is_valid(), "{}", e.name);
    }
}

#[test]
fn transcribed_rigid_model_equals_catalog() {
    let text = std::fs::read_to_string(corpus_dir().join("rigid.sl")).unwrap();
    let prog = build_program(&parse_source(&text).unwrap()).unwrap();
    let model = &prog.models["al_rigid"];
    let report = model.validate();
    assert!(report.is_valid() && report.minimal);
    let original = catalog::al_rigid().unwrap();
    assert_eq!(model.generators(), original.generators());
    for i in 0..original.generators().len() {
        assert_eq!(model.d_generator(i), &original.d_generator(i).embed(model.context()).unwrap());
    }
}

#[test]
fn cp3_parses_and_validates() {
    let text = std::fs::read_to_string(corpus_dir().join("cp3.sl")).unwrap();
    let prog = build_program(&parse_source(&text).unwrap()).unwrap();
    let cp3 = &prog.models["CP3"];
    assert!(cp3.validate().is_valid());
    let dims: Vec<usize> = (0..=6).map(|k| cp3.cohomology(k).unwrap().dimension).collect();
    assert_eq!(dims, [1, 0, 1, 0, 1, 0, 1]);
}

#[test]
fn undeclared_identifier_is_reported_at_its_token() {
    let text = "model M {\n  gen x : 2;\n  gen w : 7;\n  d w = x^4 + y;\n}\n";
    let err = build_program(&parse_source(text).unwrap()).unwrap_err();
    assert_eq!((err.pos.line, err.pos.col), (4, 15));
    assert!(err.message.contains('y'), "{}", err.message);
}

#[test]
fn invalid_file_builds_but_fails_validation() {
    let text = std::fs::read_to_string(corpus_dir().join("invalid.sl")).unwrap();
    let prog = build_program(&parse_source(&text).unwrap()).unwrap();
    assert!(!prog.models["broken"].validate().is_valid());
}

#[test]
fn corpus_morphisms_are_valid() {
    for file in ["hopf.sl", "su6.sl", "rationals.sl"] {
        let text = std::fs::read_to_string(corpus_dir().join(file)).unwrap();
        let prog = build_program(&parse_source(&text).unwrap()).unwrap();
        for (name, f) in &prog.morphisms {
            assert!(f.validate().is_valid(), "{} {}", file, name);
        }
    }
}
