//! Exit gate: one line per acceptance criterion.
//!
//! Runs without the libtest harness so each criterion reports on its own
//! line. Criteria listed in `EXPECTED_FAIL` are known to be unattainable as
//! stated; they still run in full and print FAIL, and the target only fails
//! if some other criterion fails or a listed one starts passing.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qha_cli::corpus::CORPUS;
use qha_cli::format::PresentationFile;
use qha_cli::Session;
use qha_core::algebra::Algebra;
use qha_core::highest_weight::Property;
use qha_core::homodim::ext_dims;
use qha_core::modcat::{hom_space, injective, projective, simple, Module};
use qha_core::schur::{d_lambda, is_regular, Partition};
use qha_core::tilting::verify_truncation_duality;

/// Ext²(∇(1)/L(1) dualized, ∇(1)/L(1)) ≠ 0 on A1: the quotient is L(0), which
/// has projective dimension 1.
const EXPECTED_FAIL: &[u32] = &[7];

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, expected: T) -> Outcome {
    ensure(got == expected, || format!("{what}: got {got:?}, expected {expected:?}"))
}

fn session(name: &str) -> Session {
    let entry = qha_cli::corpus::find(name).expect("bundled example");
    Session::open(name, entry.text).expect("bundled example loads")
}

fn sessions() -> Vec<Session> {
    CORPUS.iter().map(|e| session(e.name)).collect()
}

fn w(s: &Session, label: &str) -> usize {
    s.weight(label).expect("weight label")
}

/// Nonzero paths of a monomial presentation, counted by extending paths one
/// arrow at a time and discarding those that end in a relation.
fn path_count_oracle(text: &str) -> usize {
    let file = PresentationFile::from_toml(text).unwrap();
    let zero: BTreeSet<Vec<&str>> = file
        .relations
        .iter()
        .map(|r| {
            assert_eq!(r.len(), 1, "oracle handles monomial relations only");
            r[0].path.iter().map(String::as_str).collect()
        })
        .collect();
    let mut count = file.vertices.len();
    let mut frontier: Vec<Vec<&qha_cli::format::ArrowEntry>> = file.arrows.iter().map(|a| vec![a]).collect();
    while !frontier.is_empty() {
        count += frontier.len();
        let mut next = Vec::new();
        for path in &frontier {
            let last = path.last().unwrap();
            for a in file.arrows.iter().filter(|a| a.from == last.to) {
                let mut longer = path.clone();
                longer.push(a);
                let names: Vec<&str> = longer.iter().map(|a| a.name.as_str()).collect();
                if !(1..=names.len()).any(|k| zero.contains(&names[names.len() - k..])) {
                    next.push(longer);
                }
            }
        }
        frontier = next;
    }
    count
}

fn verdict_map(s: &Session) -> BTreeMap<&'static str, bool> {
    [Property::A, Property::B, Property::C, Property::D, Property::E]
        .into_iter()
        .map(|p| (p.name(), s.hw.check_property(p).unwrap().holds))
        .collect()
}

fn criterion_1() -> Outcome {
    let s = session("example_5_3_2");
    let text = qha_cli::corpus::find("example_5_3_2").unwrap().text;
    eq("dimension vs path count", s.algebra().dim(), path_count_oracle(text))?;
    eq("dimension", s.algebra().dim(), 18)?;
    eq(
        "∇ composition table",
        s.hw.costandard_factors(),
        vec![vec![1, 0, 0, 0], vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 1, 1, 1]],
    )?;
    let a = s.algebra();
    eq("gfd L(3)", s.hw.gfd(&simple(a, w(&s, "3")).unwrap()).unwrap(), 1)?;
    eq("gfd L(2)", s.hw.gfd(&simple(a, w(&s, "2")).unwrap()).unwrap(), 2)?;
    eq("wfd ∇(3)", s.hw.wfd(s.hw.costandard(w(&s, "3"))).unwrap(), 2)?;
    eq("wfd ∇(2)", s.hw.wfd(s.hw.costandard(w(&s, "2"))).unwrap(), 2)?;
    eq("inj ∇(2)", s.hw.inj_costandard(w(&s, "2")).unwrap(), 1)?;
    let expected: BTreeMap<&str, bool> = [("A", false), ("B", true), ("C", false), ("D", false), ("E", true)].into();
    eq("verdicts", verdict_map(&s), expected)
}

fn criterion_2() -> Outcome {
    let s = session("example_5_3_3");
    let a = s.algebra();
    let wfd_l: Vec<usize> = (0..4).map(|i| s.hw.wfd(&simple(a, i).unwrap()).unwrap()).collect();
    eq("wfd L", wfd_l, vec![0, 1, 2, 1])?;
    let gfd_d: Vec<usize> = (0..4).map(|i| s.hw.gfd(s.hw.standard(i)).unwrap()).collect();
    eq("gfd Δ", gfd_d, vec![0, 1, 2, 1])?;
    let d = |l: &str| s.hw.standard(w(&s, l));
    let e12 = ext_dims(d("1"), d("2"), 2);
    eq("Ext¹, Ext² (Δ(1), Δ(2))", (e12[1], e12[2]), (1, 0))?;
    let e02 = ext_dims(d("0"), d("2"), 2 * a.num_weights());
    eq("Hom, Ext¹, Ext² (Δ(0), Δ(2))", &e02[..3], &[1, 2, 1][..])?;
    let euler: i64 = e02.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
    eq("alternating sum", euler, 0)?;
    let v = verdict_map(&s);
    eq("A, D", (v["A"], v["D"]), (false, true))
}

fn criterion_3() -> Outcome {
    for s in sessions() {
        let k = s.algebra().num_weights();
        for l in 0..k {
            for m in 0..k {
                let got = ext_dims(s.hw.standard(l), s.hw.costandard(m), 2 * k);
                let expected: Vec<usize> = (0..=2 * k).map(|i| usize::from(i == 0 && l == m)).collect();
                eq(&format!("{}: Ext(Δ({l}), ∇({m}))", s.name), got, expected)?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for s in sessions().into_iter().filter(|s| s.sigma.is_some()) {
        let k = s.algebra().num_weights();
        let nabla = s.hw.costandard_factors();
        for l in 0..k {
            let p = projective(s.algebra(), l).unwrap();
            let mult = s.hw.delta_filtration_multiplicities(&p).unwrap().ok_or(format!("{}: P({l}) not Δ-filtered", s.name))?;
            for m in 0..k {
                eq(&format!("{}: (P({l}):Δ({m})) vs [∇({m}):L({l})]", s.name), mult[m], nabla[m][l])?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for s in sessions() {
        let rd = s.ringel().map_err(|e| e.to_string())?;
        for c in rd.verify_identities(s.sigma.is_some()).unwrap() {
            ensure(c.lhs == c.rhs, || format!("{}: {} at {:?}: {} ≠ {}", s.name, c.name, c.weight, c.lhs, c.rhs))?;
        }
        for f in rd.verify_functor().unwrap() {
            ensure(f.costandard_to_standard && f.tilting_to_projective && f.injective_to_tilting, || {
                format!("{}: functor check at weight {}", s.name, f.weight)
            })?;
        }
    }
    Ok(())
}

fn down_sets(s: &Session) -> Vec<Vec<usize>> {
    let k = s.algebra().num_weights();
    (1u32..1 << k)
        .map(|mask| (0..k).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|set| s.hw.poset().check_saturated(set).is_ok())
        .collect()
}

fn criterion_6() -> Outcome {
    let s = session("example_5_3_2");
    let k = s.algebra().num_weights();
    for pi in down_sets(&s) {
        // Construction re-checks Δ, ∇ and sampled Ext dimensions against the original.
        let t = s.hw.truncate_saturated(&pi).map_err(|e| format!("Π = {pi:?}: {e}"))?;
        ensure(t.ext_pairs_checked > 0, || format!("Π = {pi:?}: no Ext pairs compared"))?;
    }
    let rd = s.ringel().map_err(|e| e.to_string())?;
    for pi in down_sets(&s) {
        let gamma: Vec<usize> = (0..k).filter(|x| !pi.contains(x)).collect();
        if gamma.is_empty() {
            continue;
        }
        let t = s.hw.truncate_corner(&gamma).map_err(|e| format!("Γ = {gamma:?}: {e}"))?;
        let small = t.hw.algebra().weights();
        for &mu in &gamma {
            let i = small.iter().position(|x| *x == s.label(mu)).unwrap();
            eq(&format!("Γ = {gamma:?}: proj Δ({mu})"), t.hw.proj_standard(i).unwrap(), s.hw.proj_standard(mu).unwrap())?;
        }
        let x = verify_truncation_duality(rd, &gamma).map_err(|e| e.to_string())?;
        ensure(x.matches(), || format!("Γ = {gamma:?}: corner {:?} vs dual of quotient {:?}", x.corner, x.dual_of_quotient))?;
    }
    Ok(())
}

/// `Q = ∇(1)/L(1)` on A1 together with its dual.
fn a1_witness() -> (Session, Module, Module) {
    let s = session("a1_s1_witness");
    let n1 = s.hw.costandard(w(&s, "1"));
    let q = n1.quotient(&n1.socle()).0;
    let qd = q.dualize(s.sigma.as_ref().unwrap()).unwrap();
    (s, q, qd)
}

fn criterion_7() -> Outcome {
    let (s, q, qd) = a1_witness();
    ensure(s.hw.check_property(Property::StrongA).unwrap().holds, || "strong A fails".into())?;
    let n = s.hw.gfd_algebra().unwrap();
    eq("n = gfd(A1)", n, 1)?;
    eq("glob(A1)", s.hw.global_dimension().unwrap(), 2 * n)?;
    let ext = ext_dims(&qd, &q, 2);
    ensure(ext[2] != 0, || format!("Ext²(Q°, Q) = 0 for Q = ∇(1)/L(1) of dimension vector {:?}", q.dims()))
}

/// Nonvanishing in the degrees the chain actually uses: Ext² between the
/// simples at the top weight, Hom(Q°, Q), and the audit over gfd(Q) = n.
fn criterion_7_corrected() -> Outcome {
    let (s, q, qd) = a1_witness();
    let l1 = simple(s.algebra(), w(&s, "1")).unwrap();
    // 0 → P(1) → P(0) → P(1) → L(1) → 0 gives Ext²(L(1), L(1)) = 1.
    eq("Ext(L(1), L(1))", ext_dims(&l1, &l1, 3), vec![1, 0, 1, 0])?;
    ensure(hom_space(&qd, &q).unwrap().dim() > 0, || "Hom(Q°, Q) = 0".into())?;
    let audit = s.hw.audit_theorems(s.sigma.as_ref()).unwrap();
    ensure(audit.passed(), || format!("audit: {:?}", audit.failures()))
}

/// Simples, standards, costandards, projectives, injectives, radicals and
/// socle quotients per weight.
fn sample(a: &Arc<Algebra>, s: &Session) -> Vec<(String, Module)> {
    let mut out = Vec::new();
    for l in 0..a.num_weights() {
        let p = projective(a, l).unwrap();
        let i = injective(a, l).unwrap();
        out.push((format!("L({l})"), simple(a, l).unwrap()));
        out.push((format!("Δ({l})"), s.hw.standard(l).clone()));
        out.push((format!("∇({l})"), s.hw.costandard(l).clone()));
        out.push((format!("rad P({l})"), p.submodule(&p.radical()).0));
        out.push((format!("I({l})/soc"), i.quotient(&i.socle()).0));
        out.push((format!("P({l})"), p));
        out.push((format!("I({l})"), i));
    }
    out.retain(|(_, m)| !m.is_zero());
    out
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for s in sessions() {
        let Some(sigma) = s.sigma.as_ref() else { continue };
        let family = sample(s.algebra(), &s);
        let duals: Vec<Module> = family.iter().map(|(_, m)| m.dualize(sigma).unwrap()).collect();
        let depth = s.hw.depth();
        count += family.len();
        for ((name, m), md) in family.iter().zip(&duals) {
            eq(&format!("{}: gfd({name}) vs wfd(dual)", s.name), s.hw.gfd(m).unwrap(), s.hw.wfd(md).unwrap())?;
        }
        for ((mn, m), md) in family.iter().zip(&duals) {
            for ((nn, n), nd) in family.iter().zip(&duals).filter(|((n, _), _)| n.starts_with('L') || n.starts_with('Δ')) {
                eq(&format!("{}: Ext({mn}, {nn})", s.name), ext_dims(m, n, depth), ext_dims(nd, md, depth))?;
            }
        }
    }
    ensure(count >= 50, || format!("only {count} sampled modules"))
}

fn criterion_9() -> Outcome {
    let part = |x: &str| x.parse::<Partition>().unwrap();
    for a in 0..6 {
        eq(&format!("d({a},{a})"), d_lambda(&Partition::new(vec![a, a]).unwrap(), 3).unwrap(), 0)?;
    }
    eq("d(7,1), p = 3", d_lambda(&part("7,1"), 3).unwrap(), 2)?;
    eq("d(6,0,0), p = 2", d_lambda(&part("6,0,0"), 2).unwrap(), 6)?;
    eq("(3,0) 2-regular", is_regular(&part("3,0"), 2).unwrap(), false)?;
    eq("(2,0) 2-regular", is_regular(&part("2,0"), 2).unwrap(), true)?;
    eq("(1,0) 5-regular", is_regular(&part("1,0"), 5).unwrap(), true)?;
    let strategy = (
        prop::collection::vec(0u64..40, 1..7).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        }),
        0u64..50,
        prop::sample::select(vec![2u64, 3, 5]),
    );
    let mut runner = TestRunner::new(Config { cases: 100, failure_persistence: None, ..Config::default() });
    runner
        .run(&strategy, |(parts, c, p)| {
            let lam = Partition::new(parts).unwrap();
            let moved = lam.shifted(c);
            prop_assert_eq!(d_lambda(&lam, p).unwrap(), d_lambda(&moved, p).unwrap());
            prop_assert_eq!(is_regular(&lam, p).unwrap(), is_regular(&moved, p).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for entry in CORPUS {
        let mut reports = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{}-{run}.json", entry.name));
            let out = Command::new(env!("CARGO_BIN_EXE_qha"))
                .args(["--json", path.to_str().unwrap(), "analyze", entry.name])
                .output()
                .map_err(|e| e.to_string())?;
            eq(&format!("{}: exit status", entry.name), out.status.code(), Some(0))?;
            reports.push((std::fs::read(&path).map_err(|e| e.to_string())?, out.stdout));
        }
        ensure(reports[0] == reports[1], || format!("{}: reports differ between runs", entry.name))?;
    }
    Ok(())
}

fn main() {
    // Keep expected panics from cluttering the report; their messages are printed below.
    std::panic::set_hook(Box::new(|_| {}));
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "four-weight chain end to end", criterion_1),
        (2, "four-weight square end to end", criterion_2),
        (3, "standard/costandard Ext orthogonality", criterion_3),
        (4, "BGG reciprocity", criterion_4),
        (5, "Ringel dual identities and functor", criterion_5),
        (6, "saturated and corner truncations", criterion_6),
        (7, "A1 witness Ext²(Q°, Q) ≠ 0 for Q = ∇(1)/L(1)", criterion_7),
        (8, "duality transport on sampled modules", criterion_8),
        (9, "Schur partition combinatorics", criterion_9),
        (10, "deterministic analyze reports", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (id, title, check) in criteria {
        let started = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let expected_fail = EXPECTED_FAIL.contains(&id);
        match &result {
            Ok(()) => println!("criterion {id:>2} PASS {title} [{:.1}s]", started.elapsed().as_secs_f64()),
            Err(msg) => println!(
                "criterion {id:>2} FAIL {title}: {msg}{} [{:.1}s]",
                if expected_fail { " (expected)" } else { "" },
                started.elapsed().as_secs_f64()
            ),
        }
        if result.is_ok() == expected_fail {
            unexpected.push(id);
        }
        if id == 7 {
            let corrected = catch_unwind(AssertUnwindSafe(criterion_7_corrected)).unwrap_or_else(|_| Err("panicked".into()));
            match &corrected {
                Ok(()) => println!("criterion  7 PASS corrected chain: Ext²(L(1), L(1)) = 1, Hom(Q°, Q) ≠ 0, audit"),
                Err(msg) => println!("criterion  7 FAIL corrected chain: {msg}"),
            }
            if corrected.is_err() {
                unexpected.push(id);
            }
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected outcomes: {unexpected:?}");
        std::process::exit(1);
    }
}
