//! End-to-end acceptance checks, one test per shipped guarantee. Each test
//! prints a `[C#] ... PASS` line once its assertions hold.

use std::process::Command;
use std::time::Instant;

use bigcm_core::axioms::{self, gen_instances};
use bigcm_core::closure::{
    BModClosure, Closure, FrobeniusClosure, IdentityClosure, TightVerdict, TightWitnessClosure,
};
use bigcm_core::corpus;
use bigcm_core::modify::{run_chain, ParameterRelation};
use bigcm_core::module::{FPModule, Submodule};
use bigcm_core::VectorPoly;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bigcm"))
}

fn run_bin(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn c01_product_ring_relation_reduces_to_zero() {
    // Fresh process so the timing covers the kernel elimination itself.
    let start = Instant::now();
    let (code, stdout) = run_bin(&[
        "member",
        "--ring",
        "segre-7",
        "--ideal",
        "a - a",
        "c*g*(a - e) - c^2*d + g^2*b",
    ]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("normal form: 0"), "{stdout}");
    assert!(
        elapsed.as_secs() < 60,
        "took {elapsed:?}, budget is 60 s including the kernel elimination"
    );
    let t = corpus::segre_product(7).unwrap();
    let rel = t.ring.parse("c*g*(a - e) - c^2*d + g^2*b").unwrap();
    assert!(t.ring.is_zero_elem(&rel));
    println!("[C1] product-ring relation reduces to zero in {elapsed:?}: PASS");
}

#[test]
fn c02_sop_and_dimension() {
    let t = corpus::segre_product(7).unwrap();
    let sop = &t.sops[0];
    assert_eq!(sop.len(), 3);
    assert!(t.ring.is_partial_sop(sop).unwrap());
    assert_eq!(t.ring.krull_dim(), 3);
    println!("[C2] b, d, a-e is a partial sop and the ring has dimension 3: PASS");
}

#[test]
fn c03_colon_capturing_fails_for_frobenius() {
    let t = corpus::segre_product(7).unwrap();
    let r = &t.ring;
    let sop = t.sops[0].clone();
    let bd = Submodule::ideal(r, &sop[..2]).unwrap();
    let cg = VectorPoly::scalar(r.parse("c*g").unwrap());
    let colon = bd.colon(&sop[2]).unwrap();
    assert!(colon.contains(&cg), "c*g must lie in (b, d) : (a - e)");
    assert!(!bd.contains(&cg), "c*g must lie outside (b, d)");

    let frob = FrobeniusClosure::new(2);
    let free = FPModule::free(r, 1);
    let closed = frob.close(&bd, &free).unwrap();
    assert!(
        closed.witnesses.is_empty(),
        "frobenius closure must fix (b, d)"
    );

    let reports = axioms::check_colon_capturing(&frob, r, &sop).unwrap();
    let full = reports
        .iter()
        .find(|r| r.axiom == "colon-capture-3")
        .unwrap();
    assert_eq!(full.status, "fail");
    assert!(
        full.witness.as_deref().is_some_and(|w| w.contains("c*g")),
        "witness should name c*g, got {:?}",
        full.witness
    );
    println!("[C3] colon-capturing fails for frobenius closure with witness c*g: PASS");
}

#[test]
fn c04_fpurity_certificates() {
    let start = Instant::now();
    let seven = corpus::cubic_cone(7).unwrap();
    let two = corpus::cubic_cone(2).unwrap();
    assert!(corpus::fedder_is_fpure(&seven.ring).unwrap());
    assert!(!corpus::fedder_is_fpure(&two.ring).unwrap());
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "took {elapsed:?}, budget is 5 s");
    println!("[C4] F-purity certificates for the cubic cones in {elapsed:?}: PASS");
}

#[test]
fn c05_nontrivial_frobenius_closure() {
    let cone = corpus::cubic_cone(2).unwrap();
    let r = &cone.ring;
    let xy = Submodule::ideal(r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
    let z2 = VectorPoly::scalar(r.parse("z^2").unwrap());
    let free = FPModule::free(r, 1);
    assert!(FrobeniusClosure::new(1).contains(&z2, &xy, &free).unwrap());
    assert!(!xy.contains(&z2));
    println!("[C5] z^2 joins (x, y) under frobenius at level 1 but not the ideal: PASS");
}

#[test]
fn c06_axiom_suite_over_the_corpus() {
    let rings = ["poly2-7", "poly3-7", "cubic-cone-7"];
    for name in rings {
        let entry = corpus::by_name(name).unwrap();
        let identity = IdentityClosure;
        let reports =
            axioms::run_axiom_suite(&identity, &entry.ring, 6, 50, 4, true, false).unwrap();
        let fails: Vec<_> = reports.iter().filter(|r| r.status != "pass").collect();
        assert!(
            fails.is_empty(),
            "identity over {name}: {} non-pass reports, first: {:?} {:?}",
            fails.len(),
            fails.first().map(|r| &r.axiom),
            fails.first().and_then(|r| r.witness.as_ref())
        );

        let frob = FrobeniusClosure::new(2);
        let reports =
            axioms::run_axiom_suite(&frob, &entry.ring, 6, 50, 4, false, false).unwrap();
        let fails: Vec<_> = reports.iter().filter(|r| r.status == "fail").collect();
        assert!(
            fails.is_empty(),
            "frobenius over {name}: {} failures, first: {:?} {:?}",
            fails.len(),
            fails.first().map(|r| &r.axiom),
            fails.first().and_then(|r| r.witness.as_ref())
        );
    }
    println!("[C6] identity and frobenius pass the axiom suite on 50 instances x 3 rings: PASS");
}

#[test]
fn c07_colon_capturing_positive_control() {
    let entry = corpus::by_name("poly3-7").unwrap();
    let r = &entry.ring;
    let sop = vec![
        r.parse("x").unwrap(),
        r.parse("y").unwrap(),
        r.parse("z").unwrap(),
    ];
    let reports = axioms::check_colon_capturing(&IdentityClosure, r, &sop).unwrap();
    assert_eq!(reports.len(), 6, "three prefixes, direct and embedded");
    for rep in &reports {
        assert_eq!(rep.status, "pass", "{}: {:?}", rep.axiom, rep.witness);
    }
    println!("[C7] identity captures colons along x, y, z including the embedded variant: PASS");
}

#[test]
fn c08_modification_chain_runs_two_stages() {
    let start = Instant::now();
    let entry = corpus::by_name("poly3-7").unwrap();
    let r = &entry.ring;
    let m0 = FPModule::free(r, 1);
    let sop = vec![
        r.parse("x").unwrap(),
        r.parse("y").unwrap(),
        r.parse("z").unwrap(),
    ];
    let seed = ParameterRelation::new(
        &m0,
        vec![sop[0].clone(), sop[1].clone()],
        VectorPoly::scalar(sop[0].clone()),
        vec![VectorPoly::scalar(sop[1].clone())],
    )
    .unwrap();
    let report = run_chain(&m0, &sop, 2, &IdentityClosure, Some(seed)).unwrap();
    assert!(report.phantom_tracking_reliable);
    assert!(!report.persistence_violated);
    let modified_stages = report
        .stages
        .iter()
        .filter(|s| s.relation_found.is_some())
        .count();
    assert!(modified_stages >= 2, "chain must run two modifications");
    for s in &report.stages {
        assert!(s.injective, "stage {} injectivity", s.stage);
        assert!(s.diagram_ok, "stage {} diagram exactness", s.stage);
        assert!(s.phantom, "stage {} phantom", s.stage);
        assert!(s.alpha_generator_minimal, "stage {} minimal generator", s.stage);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}, budget is 30 s");
    println!("[C8] seeded modification chain runs 2 healthy stages in {elapsed:?}: PASS");
}

#[test]
fn c09_bmod_with_free_module_matches_identity() {
    let plane = corpus::by_name("poly2-7").unwrap();
    let bmod = BModClosure::new("R", FPModule::free(&plane.ring, 1));
    let identity = IdentityClosure;
    let instances = gen_instances(&plane.ring, 9, 20, 4).unwrap();
    for inst in &instances {
        let a = bmod.close(&inst.n, &inst.m).unwrap();
        let b = identity.close(&inst.n, &inst.m).unwrap();
        let sa = inst.m.span_in(&a.span(&plane.ring, inst.m.rank())).unwrap();
        let sb = inst.m.span_in(&b.span(&plane.ring, inst.m.rank())).unwrap();
        assert!(
            sa.span_equals(&sb),
            "instance {}: bmod(B=R) differs from identity",
            inst.id
        );
    }

    let cone = corpus::by_name("cubic-cone-7").unwrap();
    let bmod_cone = BModClosure::new("R", FPModule::free(&cone.ring, 1));
    let reports = axioms::run_axiom_suite(&bmod_cone, &cone.ring, 9, 20, 4, false, false).unwrap();
    let fails = reports.iter().filter(|r| r.status == "fail").count();
    assert_eq!(fails, 0, "bmod(B=R) must pass the axioms over the cone");
    println!("[C9] bmod with B = R matches identity and passes the axioms: PASS");
}

#[test]
fn c10_tight_closure_witness_verdicts() {
    let cone = corpus::cubic_cone(2).unwrap();
    let r = &cone.ring;
    let xy = Submodule::ideal(r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
    let free = FPModule::free(r, 1);
    let tw = TightWitnessClosure::new(r.parse("x^2").unwrap(), 3);
    let verdict = tw
        .verdict(&VectorPoly::scalar(r.parse("z^2").unwrap()), &xy, &free)
        .unwrap();
    assert_eq!(verdict, TightVerdict::Consistent(3));

    let plane = corpus::by_name("poly2-7").unwrap();
    let rp = &plane.ring;
    let tw = TightWitnessClosure::new(rp.one(), 3);
    let verdict = tw
        .verdict(
            &VectorPoly::scalar(rp.parse("y").unwrap()),
            &Submodule::ideal(rp, &[rp.parse("x").unwrap()]).unwrap(),
            &FPModule::free(rp, 1),
        )
        .unwrap();
    assert_eq!(verdict, TightVerdict::FailsAt(0));
    println!("[C10] tight-closure witness verdicts: consistent(3) and fails-at(0): PASS");
}

#[test]
fn c11_reports_are_byte_identical_across_runs() {
    let args = ["check-axioms", "--seed", "1", "--json"];
    let (code1, out1) = run_bin(&args);
    let (code2, out2) = run_bin(&args);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert!(!out1.is_empty());
    assert_eq!(out1, out2, "reports must be byte-identical");
    let parsed: serde_json::Value = serde_json::from_str(&out1).unwrap();
    assert_eq!(parsed["seed"], 1);
    println!("[C11] two runs of check-axioms --seed 1 agree byte for byte: PASS");
}
