//! Tilting modules and Ringel duals on the corpus algebras.

mod common;

use qha_core::highest_weight::{HighestWeight, Poset};
use qha_core::modcat::{hom_space, simple};
use qha_core::quiver::PresentationSpec;
use qha_core::tilting::{
    fingerprint, ringel_dual, verify_truncation_duality, FunctorCheck, IdentityCheck, RingelDual,
};

use common::*;

fn hw_of(spec: PresentationSpec) -> HighestWeight {
    let pa = build(spec);
    let a = arc(&pa);
    let order = pa.presentation().order().to_vec();
    HighestWeight::new(a.clone(), Poset::from_relations(a.num_weights(), &order).unwrap()).unwrap()
}

fn dual_of(spec: PresentationSpec) -> RingelDual {
    ringel_dual(&hw_of(spec)).unwrap()
}

#[test]
fn identities_and_functor_on_corpus() {
    for (name, spec) in all_specs() {
        let rd = dual_of(spec);
        let failing: Vec<IdentityCheck> =
            rd.verify_identities(true).unwrap().into_iter().filter(|c| !c.holds()).collect();
        assert!(failing.is_empty(), "{name}: {failing:?}");
        let functor: Vec<FunctorCheck> = rd.verify_functor().unwrap().into_iter().filter(|c| !c.holds()).collect();
        assert!(functor.is_empty(), "{name}: {functor:?}");
        let back = ringel_dual(&rd.dual).unwrap();
        assert_eq!(fingerprint(&back.dual), fingerprint(&rd.source), "{name}");
    }
}

#[test]
fn tilting_summands_are_consistent() {
    for (name, spec) in all_specs() {
        let rd = dual_of(spec);
        let hw = &rd.source;
        let k = hw.num_weights();
        let mut dual_dim = 0;
        for l in 0..k {
            let t = &rd.tilting.summands[l];
            // (T(λ) : Δ(μ)) = dim Hom(T(λ), ∇(μ)).
            for mu in 0..k {
                let hom = hom_space(&t.module, hw.costandard(mu)).unwrap().dim();
                assert_eq!(t.delta_multiplicities[mu], hom, "{name}: T({l}) : Δ({mu})");
            }
            for mu in 0..k {
                dual_dim += hom_space(&t.module, rd.tilting.module(mu)).unwrap().dim();
            }
        }
        assert_eq!(rd.algebra().dim(), dual_dim, "{name}");
    }
}

#[test]
fn chain_values() {
    let rd = dual_of(chain4_spec());
    let d = &rd.dual;
    assert_eq!(d.gfd_algebra().unwrap(), 2);
    assert_eq!(d.wfd_algebra().unwrap(), 2);
    assert_eq!(d.proj_standard(2).unwrap(), 2);
    assert_eq!(rd.tilting.summands[3].module.dims()[3], 1);
    assert_eq!(rd.tilting_resolution_length(rd.source.costandard(2)).unwrap(), 2);
    assert_eq!(rd.tilting_resolution_length(rd.source.costandard(0)).unwrap(), 0);
    for bottom in 0..4 {
        let gamma: Vec<usize> = (bottom..4).collect();
        let t = verify_truncation_duality(&rd, &gamma).unwrap();
        assert!(t.matches(), "Γ = {gamma:?}: {t:#?}");
    }
}

#[test]
fn square_values() {
    let rd = dual_of(square_spec());
    assert_eq!(rd.dual.inj_costandard(3).unwrap(), 1);
    assert_eq!(rd.source.gfd(rd.source.standard(3)).unwrap(), 1);
}

#[test]
fn f_is_additive_on_nabla_filtered_modules() {
    for (name, spec) in all_specs() {
        let rd = dual_of(spec);
        let hw = &rd.source;
        let images: Vec<usize> = (0..hw.num_weights()).map(|l| rd.f_functor(hw.costandard(l)).unwrap().dim()).collect();
        let mut sample = Vec::new();
        for l in 0..hw.num_weights() {
            sample.push(qha_core::modcat::injective(hw.algebra(), l).unwrap());
            sample.push(rd.tilting.module(l).clone());
            sample.push(hw.costandard(l).clone());
        }
        for m in sample {
            let mult = hw.nabla_filtration_multiplicities(&m).unwrap().expect("∇-filtered");
            let expected: usize = mult.iter().zip(&images).map(|(a, b)| a * b).sum();
            assert_eq!(rd.f_functor(&m).unwrap().dim(), expected, "{name}");
        }
        let _ = simple(hw.algebra(), 0).unwrap();
    }
}
