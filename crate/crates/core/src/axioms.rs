//! Instance-based checking of the closure-operation axioms.
//!
//! The axioms quantify over all finitely generated modules, so the harness
//! is a falsifier, not a prover: it samples seeded pseudorandom instances,
//! evaluates each axiom clause, and reports pass/fail with self-certifying
//! witnesses. The clauses:
//!
//! 1. extension: N is contained in its closure;
//! 2. idempotence: closing twice changes nothing;
//! 3. order preservation: N inside M forces closure(N) inside closure(M);
//! 4. functoriality: maps carry the closure of N into the closure of the
//!    image of N;
//! 5. if N is closed, zero is closed in M/N;
//! 6. in the ring itself, the maximal ideal and zero are closed;
//! 7. colon capturing through a surjection onto R/J: anything in the
//!    closure of Rv that dies in R/J lies in the closure of Jv.
//!
//! The supplementary checks cover quotient compatibility, direct sums,
//! intersections, and sums of closures, plus colon-capturing along a system
//! of parameters, including the embedded variant that repairs a
//! non-surjective map by adjoining a free rank-one summand.

use std::collections::HashMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closure::{Capability, Closed, Closure};
use crate::error::Error;
use crate::module::{FPModule, ModuleMap, Submodule};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PresentedRing;
use crate::vecpoly::VectorPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub closure: String,
    pub instance_id: String,
    pub axiom: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub degree_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl AxiomReport {
    fn new(
        closure: &str,
        instance_id: &str,
        axiom: String,
        status: CheckStatus,
        degree_bound: Option<u32>,
    ) -> Self {
        let (status, witness, reason) = match status {
            CheckStatus::Pass => ("pass".to_string(), None, None),
            CheckStatus::Fail(w) => ("fail".to_string(), Some(w), None),
            CheckStatus::Skipped(r) => ("skipped".to_string(), None, Some(r)),
        };
        AxiomReport {
            closure: closure.to_string(),
            instance_id: instance_id.to_string(),
            axiom,
            status,
            witness,
            reason,
            degree_bound,
            elapsed_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn failed(&self) -> bool {
        self.status == "fail"
    }
}

/// Data for the colon-capturing clause: a module with a surjection onto
/// R/J and a designated element mapping to the pivot parameter.
#[derive(Clone, Debug)]
pub struct ColonInstance {
    /// x_1..x_{k+1}: the prefix generates J, the last entry is the pivot.
    pub sop: Vec<Polynomial>,
    pub module: FPModule,
    pub v: VectorPoly,
    pub map: ModuleMap,
}

#[derive(Clone, Debug)]
pub struct AxiomInstance {
    pub id: String,
    /// Ambient module.
    pub m: FPModule,
    /// Submodule chain n ⊆ mid inside m.
    pub n: Submodule,
    pub mid: Submodule,
    /// An independent second submodule for the two-submodule checks.
    pub n2: Submodule,
    /// A structurally well-defined map out of m.
    pub map: ModuleMap,
    /// Probe element for the quotient-compatibility check.
    pub u: VectorPoly,
    pub colon: Option<ColonInstance>,
}

/// Longest prefix of the coordinate variables forming part of a system of
/// parameters.
pub fn greedy_parameters(ring: &PresentedRing) -> Result<Vec<Polynomial>, Error> {
    let mut sop: Vec<Polynomial> = Vec::new();
    for i in 0..ring.nvars() {
        let mut cand = sop.clone();
        cand.push(ring.var(i));
        if ring.is_partial_sop(&cand)? {
            sop = cand;
        }
    }
    Ok(sop)
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    if nvars > 0 {
        for _ in 0..degree {
            exps[rng.gen_range(0..nvars)] += 1;
        }
    }
    Monomial::new(exps).expect("variable count within bounds")
}

/// Random form of degree exactly `d` (up to cancellation in the quotient).
fn random_form(rng: &mut ChaCha8Rng, ring: &PresentedRing, d: u32) -> Result<Polynomial, Error> {
    let field = ring.field();
    let terms = rng.gen_range(1..=2);
    let mut p = ring.zero();
    for _ in 0..terms {
        let m = random_monomial(rng, ring.nvars(), d);
        let c = rng.gen_range(1..field.modulus());
        p = p.checked_add(&Polynomial::monomial(field, m, c))?;
    }
    Ok(ring.nf(&p))
}

/// Random homogeneous polynomial of some degree up to `maxdeg`. Keeping
/// instances graded is what makes degree bounds certifiable.
fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &PresentedRing,
    maxdeg: u32,
) -> Result<Polynomial, Error> {
    let d = rng.gen_range(0..=maxdeg);
    random_form(rng, ring, d)
}

/// Random homogeneous vector: every nonzero component has the same degree.
fn random_vec(
    rng: &mut ChaCha8Rng,
    ring: &PresentedRing,
    rank: usize,
    maxdeg: u32,
) -> Result<VectorPoly, Error> {
    let d = rng.gen_range(0..=maxdeg);
    let mut comps = Vec::with_capacity(rank);
    for _ in 0..rank {
        if rng.gen_bool(0.7) {
            comps.push(random_form(rng, ring, d)?);
        } else {
            comps.push(ring.zero());
        }
    }
    Ok(VectorPoly::new(comps))
}

/// Deterministic pseudorandom axiom instances over a ring. Containments
/// hold by construction: n is generated by combinations of mid's
/// generators, and every map is a quotient map or a scaling into a
/// quotient.
pub fn gen_instances(
    ring: &PresentedRing,
    seed: u64,
    count: usize,
    degree_bound: u32,
) -> Result<Vec<AxiomInstance>, Error> {
    if count == 0 {
        return Err(Error::Unsupported(
            "instance generation needs a positive count".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sop = greedy_parameters(ring)?;
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let rank = rng.gen_range(1..=2usize);
        let nrels = rng.gen_range(0..=1usize);
        let mut rels = Vec::new();
        for _ in 0..nrels {
            let r = random_vec(&mut rng, ring, rank, degree_bound)?;
            if !r.is_zero() {
                rels.push(r);
            }
        }
        let m = FPModule::new(ring, rank, rels)?;
        let mut mid_gens = Vec::new();
        for _ in 0..rng.gen_range(1..=2usize) {
            mid_gens.push(random_vec(&mut rng, ring, rank, degree_bound)?);
        }
        let mid = Submodule::new(ring, rank, mid_gens.clone())?;
        let mut n_gens = Vec::new();
        for _ in 0..rng.gen_range(1..=2usize) {
            // Scalar-combine mid generators of one common degree, then scale
            // by a form small enough to stay inside the degree bound.
            let pick = rng.gen_range(0..mid_gens.len());
            let class = mid_gens[pick].total_degree();
            let mut v = VectorPoly::zero(ring.field(), ring.nvars(), rank);
            for g in &mid_gens {
                if g.total_degree() == class {
                    let c = rng.gen_range(1..ring.field().modulus());
                    let s = Polynomial::constant(ring.field(), ring.nvars(), c);
                    v = v.checked_add(&g.mul_poly(&s)?)?;
                }
            }
            let room = degree_bound.saturating_sub(v.total_degree().unwrap_or(0));
            let c = random_poly(&mut rng, ring, room.min(1))?;
            n_gens.push(v.mul_poly(&c)?);
        }
        let n = Submodule::new(ring, rank, n_gens)?;
        let n2 = Submodule::new(
            ring,
            rank,
            vec![random_vec(&mut rng, ring, rank, degree_bound)?],
        )?;
        let map = if rng.gen_bool(0.5) {
            // Projection onto the quotient by mid.
            let target = m.quotient_by(&mid)?;
            let cols = (0..rank)
                .map(|i| VectorPoly::unit(ring.field(), ring.nvars(), rank, i, ring.one()))
                .collect();
            ModuleMap::new(m.clone(), target, cols)?
        } else {
            // Scaling by a ring element into a further quotient.
            let extra = Submodule::new(
                ring,
                rank,
                vec![random_vec(&mut rng, ring, rank, degree_bound)?],
            )?;
            let target = m.quotient_by(&extra)?;
            let c = random_poly(&mut rng, ring, degree_bound.min(1))?;
            let cols = (0..rank)
                .map(|i| VectorPoly::unit(ring.field(), ring.nvars(), rank, i, c.clone()))
                .collect();
            ModuleMap::new(m.clone(), target, cols)?
        };
        let u = if rng.gen_bool(0.5) && !n.gens().is_empty() {
            let pick = rng.gen_range(0..n.gens().len());
            let g = &n.gens()[pick];
            let room = degree_bound.saturating_sub(g.total_degree().unwrap_or(0));
            let c = random_poly(&mut rng, ring, room.min(1))?;
            g.mul_poly(&c)?
        } else {
            random_vec(&mut rng, ring, rank, degree_bound)?
        };
        let colon = if sop.is_empty() {
            None
        } else {
            let k = rng.gen_range(0..sop.len());
            let prefix: Vec<Polynomial> = sop[..k].to_vec();
            let pivot = sop[k].clone();
            let crank = 2usize;
            let mut crels = Vec::new();
            for x in &prefix {
                crels.push(VectorPoly::unit(
                    ring.field(),
                    ring.nvars(),
                    crank,
                    1,
                    x.clone(),
                ));
            }
            let cmodule = FPModule::new(ring, crank, crels)?;
            let rj = FPModule::new(
                ring,
                1,
                prefix.iter().map(|x| VectorPoly::scalar(x.clone())).collect(),
            )?;
            let cols = vec![
                VectorPoly::scalar(ring.one()),
                VectorPoly::scalar(ring.zero()),
            ];
            let cmap = ModuleMap::new(cmodule.clone(), rj, cols)?;
            let tail = random_poly(&mut rng, ring, degree_bound)?;
            let v = VectorPoly::new(vec![pivot.clone(), tail]);
            let mut sop_used = prefix;
            sop_used.push(pivot);
            Some(ColonInstance {
                sop: sop_used,
                module: cmodule,
                v,
                map: cmap,
            })
        };
        out.push(AxiomInstance {
            id: format!("i{:03}", idx),
            m,
            n,
            mid,
            n2,
            map,
            u,
            colon,
        });
    }
    Ok(out)
}

/// Shared closure materializations, keyed structurally so repeated checks
/// on the same pair reuse one computation.
struct Materializer<'a> {
    cl: &'a dyn Closure,
    cache: HashMap<String, Closed>,
}

impl<'a> Materializer<'a> {
    fn new(cl: &'a dyn Closure) -> Self {
        Materializer {
            cl,
            cache: HashMap::new(),
        }
    }

    fn close(&mut self, n: &Submodule, m: &FPModule) -> Result<Closed, Error> {
        let vars = m.ring().vars();
        let mut key = String::new();
        for r in m.relations() {
            key.push_str(&r.display(vars));
            key.push(';');
        }
        key.push('|');
        for g in n.gens() {
            key.push_str(&g.display(vars));
            key.push(';');
        }
        key.push_str(&format!("|{}", m.rank()));
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let closed = self.cl.close(n, m)?;
        self.cache.insert(key.clone(), closed.clone());
        Ok(closed)
    }
}

fn gate(cl: &dyn Closure, needs_materialization: bool) -> Option<CheckStatus> {
    match cl.capability() {
        Capability::SemiDecision => Some(CheckStatus::Skipped(
            "semi-decision closure: only witness verdicts are available".into(),
        )),
        Capability::MembershipOnly if needs_materialization => Some(CheckStatus::Skipped(
            "membership-only closure cannot enumerate closure generators".into(),
        )),
        _ => None,
    }
}

/// A closure with a hard degree bound may be unable to certify a derived
/// instance (intersections and images raise degrees). Record that as a
/// skip with the reason instead of aborting the whole suite.
fn bound_skip(e: Error) -> Result<(CheckStatus, Option<u32>), Error> {
    match e {
        Error::DegreeBoundExceeded { degree, bound } => Ok((
            CheckStatus::Skipped(format!(
                "exceeded certified bound: needs degree {degree}, bound {bound}"
            )),
            Some(bound),
        )),
        other => Err(other),
    }
}

fn span_equal_in(m: &FPModule, a: &Submodule, b: &Submodule) -> Result<bool, Error> {
    Ok(m.span_in(a)?.span_equals(&m.span_in(b)?))
}

fn note_bound(c: &Closed, bound: &mut Option<u32>) {
    if let Some(b) = c.certified_bound {
        *bound = Some(bound.map_or(b, |x| x.max(b)));
    }
}

fn check_axiom_with(
    mat: &mut Materializer,
    inst: &AxiomInstance,
    k: u8,
) -> Result<(CheckStatus, Option<u32>), Error> {
    let cl = mat.cl;
    let ring = inst.m.ring().clone();
    let vars = ring.vars().to_vec();
    let needs_mat = matches!(k, 2 | 3 | 4 | 5 | 7);
    if let Some(s) = gate(cl, needs_mat) {
        return Ok((s, None));
    }
    let mut bound: Option<u32> = None;
    let note = note_bound;
    let status = match k {
        1 => {
            let mut bad = None;
            for g in inst.n.gens() {
                if !cl.contains(g, &inst.n, &inst.m)? {
                    bad = Some(g.display(&vars));
                    break;
                }
            }
            match bad {
                Some(w) => CheckStatus::Fail(w),
                None => CheckStatus::Pass,
            }
        }
        2 => {
            let c1 = mat.close(&inst.n, &inst.m)?;
            note(&c1, &mut bound);
            let s1 = c1.span(&ring, inst.m.rank());
            let c2 = mat.close(&s1, &inst.m)?;
            note(&c2, &mut bound);
            let s2 = c2.span(&ring, inst.m.rank());
            if span_equal_in(&inst.m, &s1, &s2)? {
                CheckStatus::Pass
            } else {
                let over = inst.m.span_in(&s1)?;
                let w = c2
                    .gens
                    .iter()
                    .find(|g| !over.contains(g))
                    .map(|g| g.display(&vars))
                    .unwrap_or_else(|| "(collapsed)".into());
                CheckStatus::Fail(w)
            }
        }
        3 => {
            let cn = mat.close(&inst.n, &inst.m)?;
            note(&cn, &mut bound);
            let mut bad = None;
            for g in &cn.gens {
                if !cl.contains(g, &inst.mid, &inst.m)? {
                    bad = Some(g.display(&vars));
                    break;
                }
            }
            match bad {
                Some(w) => CheckStatus::Fail(w),
                None => CheckStatus::Pass,
            }
        }
        4 => {
            let cn = mat.close(&inst.n, &inst.m)?;
            note(&cn, &mut bound);
            let target = inst.map.target().clone();
            let image_gens: Result<Vec<VectorPoly>, Error> =
                inst.n.gens().iter().map(|g| inst.map.apply(g)).collect();
            let fn_span = Submodule::new(&ring, target.rank(), image_gens?)?;
            let mut bad = None;
            for g in &cn.gens {
                let fg = inst.map.apply(g)?;
                if !cl.contains(&fg, &fn_span, &target)? {
                    bad = Some(g.display(&vars));
                    break;
                }
            }
            match bad {
                Some(w) => CheckStatus::Fail(w),
                None => CheckStatus::Pass,
            }
        }
        5 => {
            let cn = mat.close(&inst.n, &inst.m)?;
            note(&cn, &mut bound);
            let closed = span_equal_in(&inst.m, &inst.n, &cn.span(&ring, inst.m.rank()))?;
            if !closed {
                // Hypothesis fails; the clause is vacuous here.
                CheckStatus::Pass
            } else {
                let q = inst.m.quotient_by(&inst.n)?;
                let zero = Submodule::zero(&ring, q.rank());
                let cz = mat.close(&zero, &q)?;
                note(&cz, &mut bound);
                let mut bad = None;
                for g in &cz.gens {
                    if !q.element_is_zero(g) {
                        bad = Some(g.display(&vars));
                        break;
                    }
                }
                match bad {
                    Some(w) => CheckStatus::Fail(w),
                    None => CheckStatus::Pass,
                }
            }
        }
        6 => {
            let free = FPModule::free(&ring, 1);
            let m_span = Submodule::new(
                &ring,
                1,
                ring.max_ideal_gens()
                    .into_iter()
                    .map(VectorPoly::scalar)
                    .collect(),
            )?;
            let one = VectorPoly::scalar(ring.one());
            let mut verdict = CheckStatus::Pass;
            if cl.capability() == Capability::Full {
                let cm = mat.close(&m_span, &free)?;
                note(&cm, &mut bound);
                for g in &cm.gens {
                    if !free.span_in(&m_span)?.contains(g) {
                        verdict = CheckStatus::Fail(g.display(&vars));
                        break;
                    }
                }
                if verdict == CheckStatus::Pass {
                    let zero = Submodule::zero(&ring, 1);
                    let cz = mat.close(&zero, &free)?;
                    note(&cz, &mut bound);
                    for g in &cz.gens {
                        if !ring.is_zero_elem(g.comp(0)) {
                            verdict = CheckStatus::Fail(g.display(&vars));
                            break;
                        }
                    }
                }
            } else {
                // Probe form: the unit must stay outside the closed maximal
                // ideal, variables outside the closure of zero.
                if cl.contains(&one, &m_span, &free)? {
                    verdict = CheckStatus::Fail("1".into());
                } else {
                    let zero = Submodule::zero(&ring, 1);
                    for i in 0..ring.nvars() {
                        let x = VectorPoly::scalar(ring.var(i));
                        if !ring.is_zero_elem(x.comp(0)) && cl.contains(&x, &zero, &free)? {
                            verdict = CheckStatus::Fail(x.display(&vars));
                            break;
                        }
                    }
                }
            }
            verdict
        }
        7 => {
            let Some(colon) = &inst.colon else {
                return Ok((
                    CheckStatus::Skipped("no parameter data on this instance".into()),
                    None,
                ));
            };
            let m = &colon.module;
            let kk = colon.sop.len() - 1;
            let rv = Submodule::new(&ring, m.rank(), vec![colon.v.clone()])?;
            let crv = mat.close(&rv, m)?;
            note(&crv, &mut bound);
            let closure_span = m.span_in(&crv.span(&ring, m.rank()))?;
            let kernel = colon.map.kernel()?;
            let meet = closure_span.intersect(&kernel)?;
            let jv_gens: Result<Vec<VectorPoly>, Error> = colon.sop[..kk]
                .iter()
                .map(|x| colon.v.mul_poly(x))
                .collect();
            let jv = Submodule::new(&ring, m.rank(), jv_gens?)?;
            let mut bad = None;
            for g in meet.gens() {
                if !cl.contains(g, &jv, m)? {
                    bad = Some(g.display(&vars));
                    break;
                }
            }
            match bad {
                Some(w) => CheckStatus::Fail(w),
                None => CheckStatus::Pass,
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "axiom index {} out of range",
                k
            )))
        }
    };
    Ok((status, bound))
}

pub fn check_axiom(
    cl: &dyn Closure,
    inst: &AxiomInstance,
    k: u8,
) -> Result<AxiomReport, Error> {
    let mut mat = Materializer::new(cl);
    let (status, bound) = check_axiom_with(&mut mat, inst, k).or_else(bound_skip)?;
    Ok(AxiomReport::new(
        &cl.name(),
        &inst.id,
        k.to_string(),
        status,
        bound,
    ))
}

const SUPPLEMENT_LABELS: [&str; 5] = [
    "quotient-compatibility",
    "direct-sum",
    "intersection",
    "closed-intersection",
    "sum-closure",
];

fn check_supplement_with(
    mat: &mut Materializer,
    inst: &AxiomInstance,
    label: &str,
) -> Result<(CheckStatus, Option<u32>), Error> {
    let cl = mat.cl;
    let ring = inst.m.ring().clone();
    let vars = ring.vars().to_vec();
    let needs_mat = matches!(
        label,
        "direct-sum" | "intersection" | "closed-intersection" | "sum-closure"
    );
    if let Some(s) = gate(cl, needs_mat) {
        return Ok((s, None));
    }
    let mut bound: Option<u32> = None;
    let note = note_bound;
    let status = match label {
        "quotient-compatibility" => {
            // Membership in the closure of n is unchanged after passing to
            // the quotient by a submodule of n.
            let scale = if ring.nvars() > 0 {
                ring.var(0)
            } else {
                ring.one()
            };
            let sub_gen = inst.n.gens().first().cloned();
            match sub_gen {
                None => CheckStatus::Pass,
                Some(g) => {
                    let nsub = Submodule::new(&ring, inst.m.rank(), vec![g.mul_poly(&scale)?])?;
                    let lhs = cl.contains(&inst.u, &inst.n, &inst.m)?;
                    let q = inst.m.quotient_by(&nsub)?;
                    let rhs = cl.contains(&inst.u, &inst.n, &q)?;
                    if lhs == rhs {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Fail(inst.u.display(&vars))
                    }
                }
            }
        }
        "direct-sum" => {
            let sum_m = inst.m.direct_sum(&inst.m)?;
            let rank = inst.m.rank();
            let left = |v: &VectorPoly| v.pad(2 * rank);
            let right = |v: &VectorPoly| {
                let mut comps = vec![Polynomial::zero(ring.field(), ring.nvars()); rank];
                comps.extend(v.comps().iter().cloned());
                VectorPoly::new(comps)
            };
            let mut sum_gens: Vec<VectorPoly> = inst.n.gens().iter().map(&left).collect();
            sum_gens.extend(inst.n2.gens().iter().map(&right));
            let sum_n = Submodule::new(&ring, 2 * rank, sum_gens)?;
            let c_sum = mat.close(&sum_n, &sum_m)?;
            note(&c_sum, &mut bound);
            let c1 = mat.close(&inst.n, &inst.m)?;
            note(&c1, &mut bound);
            let c2 = mat.close(&inst.n2, &inst.m)?;
            note(&c2, &mut bound);
            let mut comp_gens: Vec<VectorPoly> = c1.gens.iter().map(&left).collect();
            comp_gens.extend(c2.gens.iter().map(&right));
            let comp = Submodule::new(&ring, 2 * rank, comp_gens)?;
            if span_equal_in(&sum_m, &c_sum.span(&ring, 2 * rank), &comp)? {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail("component-wise closure differs".into())
            }
        }
        "intersection" => {
            let meet = inst.n.intersect(&inst.n2)?;
            let c_meet = mat.close(&meet, &inst.m)?;
            note(&c_meet, &mut bound);
            let mut bad = None;
            for g in &c_meet.gens {
                if !cl.contains(g, &inst.n, &inst.m)? || !cl.contains(g, &inst.n2, &inst.m)? {
                    bad = Some(g.display(&vars));
                    break;
                }
            }
            match bad {
                Some(w) => CheckStatus::Fail(w),
                None => CheckStatus::Pass,
            }
        }
        "closed-intersection" => {
            let c1 = mat.close(&inst.n, &inst.m)?;
            note(&c1, &mut bound);
            let c2 = mat.close(&inst.n2, &inst.m)?;
            note(&c2, &mut bound);
            let n1_closed = span_equal_in(&inst.m, &inst.n, &c1.span(&ring, inst.m.rank()))?;
            let n2_closed = span_equal_in(&inst.m, &inst.n2, &c2.span(&ring, inst.m.rank()))?;
            if !(n1_closed && n2_closed) {
                CheckStatus::Pass
            } else {
                let meet = inst.n.intersect(&inst.n2)?;
                let c_meet = mat.close(&meet, &inst.m)?;
                note(&c_meet, &mut bound);
                if span_equal_in(&inst.m, &meet, &c_meet.span(&ring, inst.m.rank()))? {
                    CheckStatus::Pass
                } else {
                    let over = inst.m.span_in(&meet)?;
                    let w = c_meet
                        .gens
                        .iter()
                        .find(|g| !over.contains(g))
                        .map(|g| g.display(&vars))
                        .unwrap_or_else(|| "(collapsed)".into());
                    CheckStatus::Fail(w)
                }
            }
        }
        "sum-closure" => {
            let sum = inst.n.sum(&inst.n2)?;
            let c_sum = mat.close(&sum, &inst.m)?;
            note(&c_sum, &mut bound);
            let c1 = mat.close(&inst.n, &inst.m)?;
            note(&c1, &mut bound);
            let c2 = mat.close(&inst.n2, &inst.m)?;
            note(&c2, &mut bound);
            let base = c1
                .span(&ring, inst.m.rank())
                .sum(&c2.span(&ring, inst.m.rank()))?;
            let c_base = mat.close(&base, &inst.m)?;
            note(&c_base, &mut bound);
            if span_equal_in(
                &inst.m,
                &c_sum.span(&ring, inst.m.rank()),
                &c_base.span(&ring, inst.m.rank()),
            )? {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail("sum of closures re-closed differs".into())
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "unknown supplementary check {}",
                label
            )))
        }
    };
    Ok((status, bound))
}

/// All supplementary (non-axiom) checks on one instance.
pub fn check_supplements(
    cl: &dyn Closure,
    inst: &AxiomInstance,
) -> Result<Vec<AxiomReport>, Error> {
    let mut mat = Materializer::new(cl);
    let mut out = Vec::new();
    for label in SUPPLEMENT_LABELS {
        let (status, bound) = check_supplement_with(&mut mat, inst, label).or_else(bound_skip)?;
        out.push(AxiomReport::new(
            &cl.name(),
            &inst.id,
            label.to_string(),
            status,
            bound,
        ));
    }
    Ok(out)
}

/// Colon-capturing along a partial system of parameters: for each prefix,
/// the colon ideal (x_1..x_{t-1}) : x_t must land in the closure of the
/// prefix ideal; the embedded variant checks the same through a surjection
/// out of R + R built from the non-surjective multiplication map.
pub fn check_colon_capturing(
    cl: &dyn Closure,
    ring: &PresentedRing,
    sop: &[Polynomial],
) -> Result<Vec<AxiomReport>, Error> {
    if !ring.is_partial_sop(sop)? {
        return Err(Error::Unsupported(
            "colon-capturing requires part of a system of parameters".into(),
        ));
    }
    let mut mat = Materializer::new(cl);
    let vars = ring.vars().to_vec();
    let mut out = Vec::new();
    for t in 1..=sop.len() {
        let prefix = &sop[..t - 1];
        let pivot = &sop[t - 1];
        let label = format!("colon-capture-{}", t);
        if let Some(s) = gate(cl, false) {
            out.push(AxiomReport::new(&cl.name(), "sop", label, s, None));
            out.push(AxiomReport::new(
                &cl.name(),
                "sop",
                format!("colon-capture-embedded-{}", t),
                gate(cl, true).unwrap_or(CheckStatus::Pass),
                None,
            ));
            continue;
        }
        let free = FPModule::free(ring, 1);
        let prefix_span = Submodule::ideal(ring, prefix)?;
        let colon = prefix_span.colon(pivot)?;
        let mut status = CheckStatus::Pass;
        for g in colon.gens() {
            if !cl.contains(g, &prefix_span, &free)? {
                status = CheckStatus::Fail(g.display(&vars));
                break;
            }
        }
        out.push(AxiomReport::new(&cl.name(), "sop", label, status, None));

        // Embedded variant: multiplication by the pivot R -> R/J is not
        // surjective, so pass through (a, b) -> a*pivot + b out of R + R
        // with the designated element (1, 0).
        let label2 = format!("colon-capture-embedded-{}", t);
        if let Some(s) = gate(cl, true) {
            out.push(AxiomReport::new(&cl.name(), "sop", label2, s, None));
            continue;
        }
        let pair = FPModule::free(ring, 2);
        let rj = FPModule::new(
            ring,
            1,
            prefix.iter().map(|x| VectorPoly::scalar(x.clone())).collect(),
        )?;
        let phi = ModuleMap::new(
            pair.clone(),
            rj,
            vec![
                VectorPoly::scalar(pivot.clone()),
                VectorPoly::scalar(ring.one()),
            ],
        )?;
        let v = VectorPoly::unit(ring.field(), ring.nvars(), 2, 0, ring.one());
        let rv = Submodule::new(ring, 2, vec![v.clone()])?;
        let crv = mat.close(&rv, &pair)?;
        let meet = pair
            .span_in(&crv.span(ring, 2))?
            .intersect(&phi.kernel()?)?;
        let jv_gens: Result<Vec<VectorPoly>, Error> =
            prefix.iter().map(|x| v.mul_poly(x)).collect();
        let jv = Submodule::new(ring, 2, jv_gens?)?;
        let mut status2 = CheckStatus::Pass;
        for g in meet.gens() {
            if !cl.contains(g, &jv, &pair)? {
                status2 = CheckStatus::Fail(g.display(&vars));
                break;
            }
        }
        out.push(AxiomReport::new(
            &cl.name(),
            "sop",
            label2,
            status2,
            crv.certified_bound,
        ));
    }
    Ok(out)
}

/// Run axioms 1-6 and the supplementary checks over a generated instance
/// corpus. Reports come out in a fixed order: per instance, axioms first.
pub fn run_axiom_suite(
    cl: &dyn Closure,
    ring: &PresentedRing,
    seed: u64,
    count: usize,
    degree_bound: u32,
    with_supplements: bool,
    timings: bool,
) -> Result<Vec<AxiomReport>, Error> {
    let instances = gen_instances(ring, seed, count, degree_bound)?;
    let mut mat = Materializer::new(cl);
    let mut out = Vec::new();
    for inst in &instances {
        for k in 1..=6u8 {
            let start = Instant::now();
            let (status, bound) =
                check_axiom_with(&mut mat, inst, k).or_else(bound_skip)?;
            let mut rep = AxiomReport::new(&cl.name(), &inst.id, k.to_string(), status, bound);
            if timings {
                rep.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            out.push(rep);
        }
        if with_supplements {
            for label in SUPPLEMENT_LABELS {
                let start = Instant::now();
                let (status, bound) =
                    check_supplement_with(&mut mat, inst, label).or_else(bound_skip)?;
                let mut rep =
                    AxiomReport::new(&cl.name(), &inst.id, label.to_string(), status, bound);
                if timings {
                    rep.elapsed_ms = Some(start.elapsed().as_millis() as u64);
                }
                out.push(rep);
            }
        }
    }
    Ok(out)
}
