//! Presentations shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use num_traits::One;
use qha_core::exactlin::{FieldSpec, Scalar};
use qha_core::quiver::{build_algebra, PathAlgebra, Presentation, PresentationSpec};

fn s(x: &str) -> String {
    x.to_string()
}

fn arrows(list: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    list.iter().map(|(a, b, c)| (s(a), s(b), s(c))).collect()
}

fn mono(words: &[&[&str]]) -> Vec<Vec<(Scalar, Vec<String>)>> {
    words.iter().map(|w| vec![(Scalar::one(), w.iter().map(|x| s(x)).collect())]).collect()
}

fn chain(n: usize) -> Vec<(String, String)> {
    (1..n).map(|i| ((i - 1).to_string(), i.to_string())).collect()
}

fn swap(pairs: &[(&str, &str)]) -> Option<Vec<(String, String)>> {
    Some(pairs.iter().flat_map(|(a, b)| [(s(a), s(b)), (s(b), s(a))]).collect())
}

pub fn four_vertices() -> Vec<String> {
    (0..4).map(|i| i.to_string()).collect()
}

pub fn chain4_spec() -> PresentationSpec {
    PresentationSpec {
        vertices: four_vertices(),
        arrows: arrows(&[
            ("a0", "0", "1"),
            ("a1", "1", "0"),
            ("b0", "1", "2"),
            ("b1", "2", "1"),
            ("c0", "2", "3"),
            ("c1", "3", "2"),
        ]),
        relations: mono(&[&["a1", "a0"], &["c1", "c0"], &["b1", "a1"], &["b1", "b0"], &["a0", "b0"]]),
        order: chain(4),
        duality: swap(&[("a0", "a1"), ("b0", "b1"), ("c0", "c1")]),
    }
}

pub fn square_spec() -> PresentationSpec {
    let neg = || -Scalar::one();
    let mut relations = mono(&[
        &["a1", "d1"],
        &["a1", "e0"],
        &["a1", "a0"],
        &["c1", "c0"],
        &["b1", "b0"],
        &["d0", "d1"],
        &["d0", "e0"],
        &["d0", "a0"],
        &["e1", "d1"],
        &["e1", "a0"],
        &["e1", "e0"],
    ]);
    relations.push(vec![(Scalar::one(), vec![s("b1"), s("e1")]), (neg(), vec![s("c0"), s("d0")])]);
    relations.push(vec![(Scalar::one(), vec![s("e0"), s("b0")]), (neg(), vec![s("d1"), s("c1")])]);
    PresentationSpec {
        vertices: four_vertices(),
        arrows: arrows(&[
            ("a0", "0", "1"),
            ("e0", "0", "1"),
            ("a1", "1", "0"),
            ("e1", "1", "0"),
            ("b0", "1", "2"),
            ("b1", "2", "1"),
            ("c0", "2", "3"),
            ("c1", "3", "2"),
            ("d1", "0", "3"),
            ("d0", "3", "0"),
        ]),
        relations,
        order: chain(4),
        duality: swap(&[("a0", "a1"), ("e0", "e1"), ("b0", "b1"), ("c0", "c1"), ("d0", "d1")]),
    }
}

pub fn a1_spec() -> PresentationSpec {
    PresentationSpec {
        vertices: vec![s("0"), s("1")],
        arrows: arrows(&[("a", "0", "1"), ("b", "1", "0")]),
        relations: mono(&[&["b", "a"]]),
        order: chain(2),
        duality: swap(&[("a", "b")]),
    }
}

pub fn semisimple_spec() -> PresentationSpec {
    PresentationSpec { vertices: four_vertices(), duality: Some(Vec::new()), ..Default::default() }
}

pub fn presentation(spec: PresentationSpec) -> Presentation {
    Presentation::from_names(FieldSpec::Rationals, spec).unwrap()
}

pub fn build(spec: PresentationSpec) -> PathAlgebra {
    build_algebra(&presentation(spec)).unwrap()
}

pub fn all_specs() -> Vec<(&'static str, PresentationSpec)> {
    vec![
        ("chain4", chain4_spec()),
        ("square", square_spec()),
        ("a1", a1_spec()),
        ("semisimple", semisimple_spec()),
    ]
}

pub fn arc(pa: &PathAlgebra) -> Arc<qha_core::algebra::Algebra> {
    pa.algebra.clone()
}
