//! Path algebra dimensions against an independent brute-force count.

mod common;

use std::collections::HashMap;

use qha_core::exactlin::{FieldSpec, Scalar, Subspace};
use qha_core::quiver::{build_algebra, induced_duality, Presentation};

use common::*;

/// All arrow words of length `len` (any start vertex for len = 0 is skipped).
fn words(p: &Presentation, len: usize) -> Vec<Vec<usize>> {
    let arrows = p.quiver().arrows();
    let mut out: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for w in &out {
            let end = arrows[*w.last().unwrap()].target;
            for (a, arr) in arrows.iter().enumerate() {
                if arr.source == end {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// dim of the length-`len` part of kQ/I: all paths modulo the span of every
/// u·ρ·v, with u and v ranging over all paths.
fn brute_force_layer(p: &Presentation, len: usize) -> usize {
    let f = p.field();
    let arrows = p.quiver().arrows();
    let all = words(p, len);
    let index: HashMap<Vec<usize>, usize> = all.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut gens = Vec::new();
    for r in p.relations() {
        if r.length > len {
            continue;
        }
        for i in 0..=(len - r.length) {
            let j = len - r.length - i;
            let us: Vec<Vec<usize>> = if i == 0 { vec![vec![]] } else { words(p, i) };
            let vs: Vec<Vec<usize>> = if j == 0 { vec![vec![]] } else { words(p, j) };
            for u in &us {
                if let Some(&last) = u.last() {
                    if arrows[last].target != r.source {
                        continue;
                    }
                }
                for v in &vs {
                    if let Some(&first) = v.first() {
                        if arrows[first].source != r.target {
                            continue;
                        }
                    }
                    let mut vec = vec![Scalar::from_integer(0.into()); all.len()];
                    for (c, w) in &r.terms {
                        let full: Vec<usize> = u.iter().chain(w).chain(v).copied().collect();
                        let k = index[&full];
                        vec[k] = f.add(&vec[k], c);
                    }
                    gens.push(vec);
                }
            }
        }
    }
    all.len() - Subspace::from_spanning(f, all.len(), gens).dim()
}

fn brute_force_dims(p: &Presentation) -> Vec<usize> {
    let mut dims = vec![p.quiver().vertices().len()];
    loop {
        let d = brute_force_layer(p, dims.len());
        if d == 0 {
            return dims;
        }
        dims.push(d);
    }
}

/// Paths avoiding every relation as a subword (monomial presentations only).
fn monomial_count(p: &Presentation) -> Vec<usize> {
    let rels: Vec<&Vec<usize>> = p.relations().iter().map(|r| &r.terms[0].1).collect();
    let mut dims = vec![p.quiver().vertices().len()];
    for len in 1.. {
        let n = words(p, len)
            .into_iter()
            .filter(|w| !rels.iter().any(|r| w.windows(r.len()).any(|s| s == r.as_slice())))
            .count();
        if n == 0 {
            break;
        }
        dims.push(n);
    }
    dims
}

#[test]
fn chain4_dimension_matches_monomial_count() {
    let p = presentation(chain4_spec());
    let pa = build_algebra(&p).unwrap();
    assert_eq!(monomial_count(&p), vec![4, 6, 5, 2, 1]);
    assert_eq!(pa.layer_counts(), monomial_count(&p));
    assert_eq!(pa.algebra.dim(), 18);
    assert_eq!(pa.algebra.opposite().dim(), 18);
    // Layer sizes never grow past the longest relation.
    assert!(pa.layer_counts().windows(2).skip(1).all(|w| w[1] <= w[0]));
}

#[test]
fn square_dimension_matches_brute_force() {
    let p = presentation(square_spec());
    let pa = build_algebra(&p).unwrap();
    assert_eq!(pa.layer_counts(), brute_force_dims(&p));
    assert_eq!(pa.algebra.dim(), 44);
}

#[test]
fn a1_and_semisimple_dimensions() {
    let p = presentation(a1_spec());
    assert_eq!(build_algebra(&p).unwrap().layer_counts(), brute_force_dims(&p));
    assert_eq!(build(semisimple_spec()).algebra.dim(), 4);
}

#[test]
fn dualities_are_valid() {
    for (name, spec) in all_specs() {
        let pa = build(spec);
        assert!(induced_duality(&pa).is_ok(), "{name}");
    }
}

#[test]
fn prime_field_gives_same_dimensions() {
    let f2 = FieldSpec::prime(2).unwrap();
    for (name, spec) in all_specs() {
        let p = presentation(spec);
        let q = build_algebra(&p).unwrap();
        let r = build_algebra(&p.with_field(f2)).unwrap();
        assert_eq!(q.layer_counts(), r.layer_counts(), "{name}");
    }
}
