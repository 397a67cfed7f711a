//! Structural invariants checked across the corpus: orthogonality, BGG
//! reciprocity, transport under the duality, and agreement of independent
//! routes to the same number.

mod common;

use std::sync::Arc;

use proptest::prelude::*;
use qha_core::algebra::{AntiAutomorphism, Algebra};
use qha_core::exactlin::Scalar;
use qha_core::highest_weight::{HighestWeight, Poset};
use qha_core::homodim::ext_dims;
use qha_core::modcat::{injective, projective, simple, Module};
use qha_core::quiver::{induced_duality, PresentationSpec};

use common::*;

struct Setup {
    name: &'static str,
    a: Arc<Algebra>,
    hw: HighestWeight,
    sigma: AntiAutomorphism,
}

fn setup(name: &'static str, spec: PresentationSpec) -> Setup {
    let pa = build(spec);
    let sigma = induced_duality(&pa).unwrap();
    let a = arc(&pa);
    let order = pa.presentation().order().to_vec();
    let hw = HighestWeight::new(a.clone(), Poset::from_relations(a.num_weights(), &order).unwrap()).unwrap();
    assert!(hw.is_certified(), "{name}");
    Setup { name, a, hw, sigma }
}

fn corpus() -> Vec<Setup> {
    all_specs().into_iter().map(|(n, s)| setup(n, s)).collect()
}

/// Named modules per weight: simples, standards, costandards, projectives,
/// injectives, radicals, socle quotients and radical-square quotients.
fn sample(s: &Setup) -> Vec<(String, Module)> {
    let mut out = Vec::new();
    for l in 0..s.a.num_weights() {
        let p = projective(&s.a, l).unwrap();
        let i = injective(&s.a, l).unwrap();
        let (rad_p, inc) = p.submodule(&p.radical());
        let (_, inc2) = rad_p.submodule(&rad_p.radical());
        let top2 = p.quotient(&inc.compose(&inc2).image(&p)).0;
        out.push((format!("L({l})"), simple(&s.a, l).unwrap()));
        out.push((format!("Δ({l})"), s.hw.standard(l).clone()));
        out.push((format!("∇({l})"), s.hw.costandard(l).clone()));
        out.push((format!("P({l})"), p.clone()));
        out.push((format!("I({l})"), i.clone()));
        out.push((format!("rad P({l})"), rad_p));
        out.push((format!("I({l})/soc"), i.quotient(&i.socle()).0));
        out.push((format!("P({l})/rad²"), top2));
    }
    out.retain(|(_, m)| !m.is_zero());
    out
}

#[test]
fn standard_costandard_orthogonality() {
    for s in corpus() {
        let k = s.a.num_weights();
        for l in 0..k {
            for m in 0..k {
                let got = ext_dims(s.hw.standard(l), s.hw.costandard(m), 2 * k);
                let expected: Vec<usize> = (0..=2 * k).map(|i| usize::from(i == 0 && l == m)).collect();
                assert_eq!(got, expected, "{}: Ext(Δ({l}), ∇({m}))", s.name);
            }
        }
    }
}

#[test]
fn bgg_reciprocity() {
    for s in corpus() {
        let k = s.a.num_weights();
        let nabla = s.hw.costandard_factors();
        for l in 0..k {
            let p = projective(&s.a, l).unwrap();
            let mult = s.hw.delta_filtration_multiplicities(&p).unwrap().expect("P is Δ-filtered");
            for m in 0..k {
                assert_eq!(mult[m], nabla[m][l], "{}: (P({l}):Δ({m}))", s.name);
            }
        }
        assert!(s.hw.bgg_mismatches().unwrap().is_empty(), "{}", s.name);
    }
}

#[test]
fn duality_transport_on_sampled_modules() {
    let mut modules = 0;
    for s in corpus() {
        let family = sample(&s);
        let depth = s.hw.depth();
        let duals: Vec<Module> = family.iter().map(|(_, m)| m.dualize(&s.sigma).unwrap()).collect();
        modules += family.len();
        for ((name, m), md) in family.iter().zip(&duals) {
            assert_eq!(s.hw.gfd(m).unwrap(), s.hw.wfd(md).unwrap(), "{}: gfd({name})", s.name);
            assert_eq!(s.hw.wfd(m).unwrap(), s.hw.gfd(md).unwrap(), "{}: wfd({name})", s.name);
        }
        // Pairs with a simple or standard second argument keep this affordable.
        for ((mn, m), md) in family.iter().zip(&duals) {
            for ((nn, n), nd) in family.iter().zip(&duals).filter(|((n, _), _)| n.starts_with('L') || n.starts_with('Δ')) {
                assert_eq!(ext_dims(m, n, depth), ext_dims(nd, md, depth), "{}: Ext({mn}, {nn})", s.name);
            }
        }
    }
    assert!(modules >= 50, "only {modules} sampled modules");
}

#[test]
fn filtration_dimension_routes_agree() {
    for s in corpus() {
        let k = s.a.num_weights();
        let depth = s.hw.depth();
        let gfd_l: Vec<usize> = (0..k).map(|l| s.hw.gfd(&simple(&s.a, l).unwrap()).unwrap()).collect();
        for (name, m) in sample(&s) {
            let gfd = s.hw.gfd(&m).unwrap();
            let wfd = s.hw.wfd(&m).unwrap();
            // Direct route: top nonvanishing Ext(M, ∇(λ)) from a projective resolution of M.
            let direct = (0..k)
                .filter_map(|l| ext_dims(&m, s.hw.costandard(l), depth).iter().rposition(|&d| d > 0))
                .max()
                .unwrap_or(0);
            assert_eq!(wfd, direct, "{}: wfd({name})", s.name);
            // Long exact sequences bound gfd by the worst composition factor.
            let factors = m.composition_multiplicities();
            let bound = (0..k).filter(|&l| factors[l] > 0).map(|l| gfd_l[l]).max().unwrap_or(0);
            assert!(gfd <= bound, "{}: gfd({name}) = {gfd} > {bound}", s.name);
            assert_eq!(s.hw.has_delta_filtration(&m).unwrap(), wfd == 0, "{}: {name}", s.name);
            assert_eq!(s.hw.has_nabla_filtration(&m).unwrap(), gfd == 0, "{}: {name}", s.name);
            assert_eq!(
                s.hw.delta_filtration_multiplicities(&m).unwrap().is_some(),
                wfd == 0,
                "{}: Δ-filtration of {name}",
                s.name
            );
            assert_eq!(
                s.hw.nabla_filtration_multiplicities(&m).unwrap().is_some(),
                gfd == 0,
                "{}: ∇-filtration of {name}",
                s.name
            );
        }
    }
}

fn random_quotient(a: &Arc<Algebra>, lambda: usize, coeffs: &[i8]) -> Module {
    let p = projective(a, lambda).unwrap();
    let vectors: Vec<Vec<Scalar>> =
        coeffs.chunks(p.dim()).filter(|c| c.len() == p.dim()).map(|c| c.iter().map(|&x| Scalar::from_integer(x.into())).collect()).collect();
    p.quotient(&p.submodule_generated(&vectors)).0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_chain_quotients_transport(lambda in 0usize..4, coeffs in prop::collection::vec(-2i8..=2, 0..24)) {
        let s = setup("chain4", chain4_spec());
        let m = random_quotient(&s.a, lambda, &coeffs);
        let md = m.dualize(&s.sigma).unwrap();
        prop_assert_eq!(s.hw.gfd(&m).unwrap(), s.hw.wfd(&md).unwrap());
        let depth = s.hw.depth();
        for l in 0..4 {
            let lm = simple(&s.a, l).unwrap();
            prop_assert_eq!(ext_dims(&m, &lm, depth), ext_dims(&lm.dualize(&s.sigma).unwrap(), &md, depth));
        }
    }
}
