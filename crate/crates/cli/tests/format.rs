//! The presentation file format: bundled examples, diagnostics with their
//! codes and locations, and round trips through the canonical serialization.

use proptest::prelude::*;
use qha_cli::corpus::{find, CORPUS};
use qha_cli::format::{parse, serialize, FormatError, PresentationFile};
use qha_cli::Session;

fn bundled(name: &str) -> &'static str {
    find(name).unwrap().text
}

fn a1() -> String {
    bundled("a1_s1_witness").to_string()
}

/// Parses `text` expecting a diagnostic, returning its code and message.
fn diagnose(text: &str) -> (&'static str, String) {
    let e = parse(text).expect_err("input should be rejected");
    (e.code(), e.to_string())
}

#[test]
fn bundled_examples_parse() {
    let chain = parse(bundled("example_5_3_2")).unwrap();
    assert_eq!(chain.quiver().vertices().len(), 4);
    assert_eq!(chain.quiver().arrows().len(), 6);
    assert_eq!(chain.relations().len(), 5);
    assert_eq!(chain.order(), &[(0, 1), (1, 2), (2, 3)]);
    let d = chain.duality().unwrap();
    assert!(d.iter().enumerate().all(|(i, &j)| d[j] == i && i != j));

    let square = parse(bundled("example_5_3_3")).unwrap();
    assert_eq!(square.quiver().vertices().len(), 4);
    assert_eq!(square.quiver().arrows().len(), 10);
    let binomial = square.relations().iter().filter(|r| r.terms.len() == 2).count();
    assert_eq!(binomial, 2);

    let semisimple = parse(bundled("semisimple_4")).unwrap();
    assert!(semisimple.quiver().arrows().is_empty());
    assert!(semisimple.order().is_empty());
}

#[test]
fn corpus_lookup() {
    assert_eq!(CORPUS.len(), 4);
    assert_eq!(find("example_5_3_2.toml").unwrap().name, "example_5_3_2");
    assert!(find("missing").is_none());
}

#[test]
fn round_trip_is_stable() {
    for e in CORPUS {
        let p = parse(e.text).unwrap();
        let text = serialize(&p);
        let again = parse(&text).unwrap();
        assert_eq!(again, p, "{}", e.name);
        assert_eq!(serialize(&again), text, "{}", e.name);
    }
}

#[test]
fn syntax_errors_carry_a_line() {
    let (code, msg) = diagnose("field = \"rationals\"\nvertices = [\"0\"\n");
    assert_eq!(code, "E001");
    assert!(msg.starts_with("line "), "{msg}");
}

#[test]
fn unknown_keys_are_rejected() {
    let text = a1().replace("order =", "colour = \"red\"\norder =");
    let e = PresentationFile::from_toml(&text).unwrap_err();
    assert_eq!(e.code(), "E002");
    match e {
        FormatError::UnknownKey { line, message } => {
            assert_eq!(line, 7);
            assert!(message.contains("colour"), "{message}");
        }
        other => panic!("{other:?}"),
    }
    let text = a1().replace("{ name = \"a\",", "{ label = \"x\", name = \"a\",");
    assert_eq!(diagnose(&text).0, "E002");
}

#[test]
fn bad_coefficient_and_field() {
    let (code, msg) = diagnose(&a1().replace("coeff = \"1\"", "coeff = \"one\""));
    assert_eq!(code, "E003");
    assert!(msg.contains("relations[0][0].coeff"), "{msg}");
    assert_eq!(diagnose(&a1().replace("coeff = \"1\"", "coeff = \"1/0\"")).0, "E003");
    assert_eq!(diagnose(&a1().replace("field = \"rationals\"", "field = { prime = 4 }")).0, "E004");
    // Bare integers are accepted as coefficients.
    parse(&a1().replace("coeff = \"1\"", "coeff = 1")).unwrap();
}

#[test]
fn name_errors_point_at_keys() {
    let (code, msg) = diagnose(&a1().replace("vertices = [\"0\", \"1\"]", "vertices = [\"0\", \"0\"]"));
    assert_eq!(code, "E010");
    assert!(msg.starts_with("vertices"), "{msg}");
    let (code, msg) = diagnose(&a1().replace("to = \"1\" }, { name = \"b\"", "to = \"7\" }, { name = \"b\""));
    assert_eq!(code, "E011");
    assert!(msg.contains("arrows[0]") && msg.contains("\"7\""), "{msg}");
    let (code, msg) = diagnose(&a1().replace("path = [\"b\", \"a\"]", "path = [\"b\", \"z\"]"));
    assert_eq!(code, "E012");
    assert!(msg.contains("relations[0][0].path"), "{msg}");
}

#[test]
fn non_composable_path_is_located() {
    let text = bundled("example_5_3_2").replace(
        "[{ coeff = \"1\", path = [\"gamma1\", \"gamma0\"] }]",
        "[{ coeff = \"1\", path = [\"alpha0\", \"gamma0\"] }]",
    );
    let (code, msg) = diagnose(&text);
    assert_eq!(code, "E013");
    assert!(msg.contains("relations[1][0].path") && msg.contains("alpha0, gamma0"), "{msg}");
}

#[test]
fn inadmissible_relation() {
    let text = a1().replace("path = [\"b\", \"a\"]", "path = [\"b\"]");
    let (code, msg) = diagnose(&text);
    assert_eq!(code, "E014");
    assert!(msg.starts_with("relations[0]"), "{msg}");
}

#[test]
fn order_cycle() {
    let text = a1().replace("order = [[\"0\", \"1\"]]", "order = [[\"0\", \"1\"], [\"1\", \"0\"]]");
    assert_eq!(diagnose(&text).0, "E020");
}

#[test]
fn duality_errors() {
    let (code, msg) = diagnose(&a1().replace("a = \"b\"\nb = \"a\"", "a = \"a\"\nb = \"b\""));
    assert_eq!(code, "E030");
    assert!(msg.starts_with("duality."), "{msg}");
    assert_eq!(diagnose(&a1().replace("b = \"a\"", "")).0, "E030");
}

#[test]
fn relations_must_leave_a_finite_dimensional_algebra() {
    let text = a1().replace("relations = [[{ coeff = \"1\", path = [\"b\", \"a\"] }]]", "relations = []");
    // Parsing succeeds; the check happens when the algebra is built.
    parse(&text).unwrap();
    let e = Session::open("loop", &text).err().expect("infinite-dimensional");
    assert_eq!((e.code(), e.exit_code()), ("E040", 1));
}

/// A chain of `n` vertices with arrows both ways and all length-two
/// back-and-forth paths killed.
fn chain_text(n: usize, p: Option<u64>) -> String {
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    for i in 0..n.saturating_sub(1) {
        arrows.push(format!("{{ name = \"u{i}\", from = \"{i}\", to = \"{}\" }}", i + 1));
        arrows.push(format!("{{ name = \"d{i}\", from = \"{}\", to = \"{i}\" }}", i + 1));
        relations.push(format!("[{{ coeff = \"1\", path = [\"u{i}\", \"d{i}\"] }}]"));
        relations.push(format!("[{{ coeff = \"1\", path = [\"d{i}\", \"u{i}\"] }}]"));
    }
    let vertices: Vec<String> = (0..n).map(|i| format!("\"{i}\"")).collect();
    let field = p.map_or("\"rationals\"".to_string(), |p| format!("{{ prime = {p} }}"));
    format!(
        "field = {field}\nvertices = [{}]\narrows = [{}]\nrelations = [{}]\n",
        vertices.join(", "),
        arrows.join(", "),
        relations.join(", ")
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generated_presentations_round_trip(n in 1usize..6, p in prop::option::of(prop::sample::select(vec![2u64, 3, 7]))) {
        let parsed = parse(&chain_text(n, p)).unwrap();
        let text = serialize(&parsed);
        prop_assert_eq!(parse(&text).unwrap(), parsed);
    }
}

#[test]
fn duality_must_preserve_the_relations() {
    // Drops the dual partner of `beta1 alpha1`.
    let text = bundled("example_5_3_2").replace(",\n    [{ coeff = \"1\", path = [\"alpha0\", \"beta0\"] }]", "");
    let e = match parse(&text) {
        Err(e) => qha_cli::CliError::from(e),
        Ok(_) => Session::open("unstable", &text).err().expect("duality is not stable"),
    };
    assert_eq!(e.code(), "E031", "{e}");
}
