//! Bundled scenario files: golden text output, JSON round trips and the
//! parser's error reporting. Set `ORBIGEO_BLESS=1` to rewrite the goldens.

use std::path::PathBuf;

use orbigeo::scenario::{
    analyze, parse_scenario, parse_scenario_at, render_reports, AnalysisReport, AnalyzeOptions, Format, BUNDLED,
};
use orbigeo::{Error, Rational};

fn run(name: &str, text: &str) -> Vec<AnalysisReport> {
    parse_scenario(text).unwrap().iter().map(|inst| analyze(name, inst, &AnalyzeOptions::default()).unwrap()).collect()
}

fn bundled(name: &str) -> &'static str {
    BUNDLED.iter().find(|(n, _)| *n == name).unwrap().1
}

fn text_of(name: &str) -> String {
    render_reports(&run(name, bundled(name)), Format::Text)
}

#[test]
fn golden_text_is_stable() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("ORBIGEO_BLESS").is_some();
    for (name, _) in BUNDLED {
        let path = dir.join(name.replace(".orb", ".txt"));
        let actual = text_of(name);
        if bless {
            std::fs::write(&path, &actual).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(actual, expected, "{name} differs from {}", path.display());
    }
}

#[test]
fn rendering_is_deterministic() {
    for (name, _) in BUNDLED {
        assert_eq!(text_of(name), text_of(name));
        let rs = run(name, bundled(name));
        assert_eq!(render_reports(&rs, Format::Json), render_reports(&rs, Format::Json));
    }
}

#[test]
fn json_round_trips() {
    for (name, text) in BUNDLED {
        let rs = run(name, text);
        let json = render_reports(&rs, Format::Json);
        let back: Vec<AnalysisReport> = if rs.len() == 1 {
            vec![serde_json::from_str(&json).unwrap()]
        } else {
            serde_json::from_str(&json).unwrap()
        };
        assert_eq!(back, rs, "{name}");
        assert!(no_floats(&json), "{name} contains a floating-point number");
    }
}

fn no_floats(json: &str) -> bool {
    fn walk(v: &serde_json::Value) -> bool {
        match v {
            serde_json::Value::Number(n) => n.is_i64() || n.is_u64(),
            serde_json::Value::Array(xs) => xs.iter().all(walk),
            serde_json::Value::Object(m) => m.values().all(walk),
            _ => true,
        }
    }
    walk(&serde_json::from_str(json).unwrap())
}

#[test]
fn echo_round_trips() {
    for (name, text) in BUNDLED {
        for inst in parse_scenario(text).unwrap() {
            assert_eq!(parse_scenario(&inst.echo()).unwrap(), vec![inst.clone()], "{name}");
        }
    }
}

#[test]
fn persson_51_at_three() {
    let inst = parse_scenario_at(bundled("persson_51.orb"), 3).unwrap();
    let r = analyze("persson_51.orb", &inst, &AnalyzeOptions::default()).unwrap();
    let chern = r.chern.unwrap();
    assert_eq!(chern.c2, Rational::new(137.into(), 288.into()));
    assert_eq!(r.param, Some(3));
}

#[test]
fn param_override_needs_a_parameter() {
    let err = parse_scenario_at(bundled("steiner_octic.orb"), 3).unwrap_err();
    assert!(matches!(err, Error::Usage(_)), "{err}");
}

#[test]
fn bare_plane() {
    let rs = run("bare", "surface P2\nanalyze chern\n");
    let chern = rs[0].chern.clone().unwrap();
    assert_eq!(chern.c1sq, Rational::from_integer(9.into()));
    assert_eq!(chern.c2, Rational::from_integer(3.into()));
}

#[test]
fn untabulated_type_is_a_located_parse_error() {
    let text = "surface P2\ncomponent L class=1 mult=2\nsingular p type=E9 branches=L\n";
    match parse_scenario(text).unwrap_err() {
        Error::Parse { line, column, message } => {
            assert_eq!((line, column), (3, 17));
            assert!(message.contains("E9"), "{message}");
        }
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn unknown_key_names_the_token() {
    let text = "surface F1\ncomponent A class=(1,0) mult=2 colour=red\n";
    match parse_scenario(text).unwrap_err() {
        Error::Parse { line, message, .. } => {
            assert_eq!(line, 2);
            assert!(message.contains("colour"), "{message}");
        }
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn steiner_octic_text() {
    let t = text_of("steiner_octic.orb");
    assert!(t.contains("s2 = 21/32 > 0: quasi-hyperbolic (McQuillan)"), "{t}");
}

#[test]
fn quintic_text() {
    let t = text_of("quintic_5lines.orb");
    for needle in ["c1^2 = 5", "c2 = 7", "13c1^2-9c2 = 2 > 0"] {
        assert!(t.contains(needle), "missing `{needle}` in\n{t}");
    }
}

#[test]
fn only_the_f2_file_warns() {
    for (name, text) in BUNDLED {
        for r in run(name, text) {
            assert_eq!(r.warnings.is_empty(), *name != "persson_52.orb", "{name}: {:?}", r.warnings);
        }
    }
}

#[test]
fn incidence_check_is_opt_in() {
    let inst = &parse_scenario(bundled("persson_52.orb")).unwrap()[0];
    let quiet = analyze("persson_52.orb", inst, &AnalyzeOptions::default()).unwrap();
    let loud = analyze("persson_52.orb", inst, &AnalyzeOptions { check_incidence: true }).unwrap();
    assert!(loud.warnings.len() > quiet.warnings.len());
}

#[test]
fn every_expectation_holds() {
    for (name, text) in BUNDLED {
        for r in run(name, text) {
            let failed: Vec<_> = r.expectations.iter().filter(|e| !e.holds).collect();
            assert!(failed.is_empty(), "{name} k={:?}: {failed:?}", r.param);
        }
    }
}
