//! Closure operations on submodules.
//!
//! A closure operation assigns to each submodule N of a finitely presented
//! module M a larger submodule, the closure of N in M. Implementations here:
//! the identity closure, Frobenius closure (materialized degreewise by
//! F_p-linear algebra, membership decided exactly per level), closure induced
//! by tensoring with a fixed module B, a witness-style semi-decision for
//! tight-closure membership, and the total closure used as a negative
//! control in tests.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::module::{preimage_of_span, FPModule, Submodule};
use crate::monomial::{monomials_up_to_degree, Monomial};
use crate::linalg::MatFp;
use crate::poly::Polynomial;
use crate::vecpoly::VectorPoly;

/// What a closure implementation can deliver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Capability {
    /// Generators of the closure can be produced (possibly up to a certified
    /// degree bound) and membership is decidable.
    Full,
    /// Only membership queries are supported.
    MembershipOnly,
    /// Only a one-sided consistency check is supported.
    SemiDecision,
}

/// A closure element discovered during materialization, with the least
/// Frobenius level at which it enters (0 for elements of N itself).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureWitness {
    pub element: VectorPoly,
    pub min_level: u32,
}

/// Result of materializing a closure.
#[derive(Clone, Debug)]
pub struct Closed {
    /// Generators of the closure (the original generators come first).
    pub gens: Vec<VectorPoly>,
    /// Degree bound the generator search was certified up to, when the
    /// computation was bounded.
    pub certified_bound: Option<u32>,
    /// New generators beyond the original span, with minimal levels when the
    /// closure has a level structure.
    pub witnesses: Vec<ClosureWitness>,
}

impl Closed {
    pub fn span(&self, ring: &crate::ring::PresentedRing, rank: usize) -> Submodule {
        Submodule::new(ring, rank, self.gens.clone()).expect("closure gens are valid")
    }
}

/// Verdict of the witness-style tight-closure check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TightVerdict {
    /// The required memberships held at every level checked.
    Consistent(u32),
    /// The membership failed at this level.
    FailsAt(u32),
}

pub trait Closure {
    fn name(&self) -> String;
    fn capability(&self) -> Capability;
    /// Generators of the closure of N in M.
    fn close(&self, n: &Submodule, m: &FPModule) -> Result<Closed, Error>;
    /// Is u an element of the closure of N in M?
    fn contains(&self, u: &VectorPoly, n: &Submodule, m: &FPModule) -> Result<bool, Error>;
}

fn validate_pair(n: &Submodule, m: &FPModule) -> Result<(), Error> {
    if n.ring() != m.ring() {
        return Err(Error::RingMismatch(
            "submodule and module live over different rings".into(),
        ));
    }
    if n.rank() != m.rank() {
        return Err(Error::RankMismatch {
            expected: m.rank(),
            got: n.rank(),
        });
    }
    Ok(())
}

/// The identity closure: N closes to itself (inside M, so the relations of M
/// count as zero).
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityClosure;

impl Closure for IdentityClosure {
    fn name(&self) -> String {
        "identity".into()
    }

    fn capability(&self) -> Capability {
        Capability::Full
    }

    fn close(&self, n: &Submodule, m: &FPModule) -> Result<Closed, Error> {
        validate_pair(n, m)?;
        Ok(Closed {
            gens: n.gens().to_vec(),
            certified_bound: None,
            witnesses: Vec::new(),
        })
    }

    fn contains(&self, u: &VectorPoly, n: &Submodule, m: &FPModule) -> Result<bool, Error> {
        validate_pair(n, m)?;
        Ok(m.span_in(n)?.contains(u))
    }
}

/// Frobenius closure up to level e_max: u is in the closure when some
/// q = p^e power of u falls into the span of the q-th bracket of N inside
/// the Frobenius base change of M.
#[derive(Clone, Debug)]
pub struct FrobeniusClosure {
    pub e_max: u32,
    pub degree_bound: Option<u32>,
}

impl FrobeniusClosure {
    pub fn new(e_max: u32) -> Self {
        FrobeniusClosure {
            e_max,
            degree_bound: None,
        }
    }

    pub fn with_degree_bound(e_max: u32, degree_bound: u32) -> Self {
        FrobeniusClosure {
            e_max,
            degree_bound: Some(degree_bound),
        }
    }

    /// Span deciding level-e membership: brackets of N's generators plus the
    /// bracketed relations of M.
    fn level_span(n: &Submodule, m: &FPModule, e: u32) -> Result<Submodule, Error> {
        m.frobenius(e).span_in(&n.bracket(e))
    }

    /// Least level at which u enters the closure, if any up to e_max.
    pub fn min_level(
        &self,
        u: &VectorPoly,
        n: &Submodule,
        m: &FPModule,
    ) -> Result<Option<u32>, Error> {
        validate_pair(n, m)?;
        for e in 0..=self.e_max {
            if Self::level_span(n, m, e)?.contains(&u.frobenius_power(e)) {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    fn effective_bound(&self, n: &Submodule, m: &FPModule) -> u32 {
        self.degree_bound.unwrap_or_else(|| {
            let max_gen = n
                .gens()
                .iter()
                .chain(m.relations())
                .filter_map(VectorPoly::total_degree)
                .max()
                .unwrap_or(0);
            max_gen + 4
        })
    }
}

impl Closure for FrobeniusClosure {
    fn name(&self) -> String {
        match self.degree_bound {
            Some(d) => format!("frobenius:e_max={},degree_bound={}", self.e_max, d),
            None => format!("frobenius:e_max={}", self.e_max),
        }
    }

    fn capability(&self) -> Capability {
        Capability::Full
    }

    fn close(&self, n: &Submodule, m: &FPModule) -> Result<Closed, Error> {
        validate_pair(n, m)?;
        let ring = n.ring().clone();
        let rank = n.rank();
        let bound = self.effective_bound(n, m);
        // A bound below the generators of N cannot certify anything: the
        // certified slice of the closure must at least contain N. Module
        // relations are ambient structure handled by exact normal forms and
        // do not constrain the bound.
        let input_degree = n
            .gens()
            .iter()
            .filter_map(VectorPoly::total_degree)
            .max()
            .unwrap_or(0);
        if input_degree > bound {
            return Err(Error::DegreeBoundExceeded {
                degree: input_degree,
                bound,
            });
        }
        // Candidate elements: monomial vectors standard with respect to the
        // ring relators, up to the degree bound. They form an F_p basis of
        // the bounded part of R^rank, and u -> NF(u^[q]) is F_p-linear, so
        // the bounded part of the closure is the kernel of one matrix.
        let monos: Vec<Monomial> = monomials_up_to_degree(ring.nvars(), bound)
            .into_iter()
            .filter(|mo| ring.relator_basis().is_standard(0, mo))
            .collect();
        let mut candidates = Vec::with_capacity(monos.len() * rank);
        for i in 0..rank {
            for mo in &monos {
                candidates.push(VectorPoly::unit(
                    ring.field(),
                    ring.nvars(),
                    rank,
                    i,
                    Polynomial::monomial(ring.field(), mo.clone(), 1),
                ));
            }
        }
        let top_span = Self::level_span(n, m, self.e_max)?;
        let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        let mut nfs = Vec::with_capacity(candidates.len());
        for c in &candidates {
            let nf = top_span.normal_form(&c.frobenius_power(self.e_max));
            for (i, p) in nf.comps().iter().enumerate() {
                for (mo, _) in p.terms() {
                    let next = row_index.len();
                    row_index.entry((i, mo.clone())).or_insert(next);
                }
            }
            nfs.push(nf);
        }
        let mut mat = MatFp::zero(ring.field(), row_index.len(), candidates.len());
        for (j, nf) in nfs.iter().enumerate() {
            for (i, p) in nf.comps().iter().enumerate() {
                for (mo, c) in p.terms() {
                    mat.set(row_index[&(i, mo.clone())], j, *c);
                }
            }
        }
        let kernel = mat.nullspace();
        let base_span = m.span_in(n)?;
        let mut new_elems: Vec<VectorPoly> = Vec::new();
        for coeffs in &kernel {
            let mut v = VectorPoly::zero(ring.field(), ring.nvars(), rank);
            for (j, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    v = v.checked_add(&candidates[j].scale(c))?;
                }
            }
            let reduced = base_span.normal_form(&v);
            if !reduced.is_zero() {
                new_elems.push(reduced);
            }
        }
        new_elems.sort();
        new_elems.dedup();
        let mut witnesses = Vec::new();
        for v in &new_elems {
            let level = self
                .min_level(v, n, m)?
                .expect("kernel element must be in the closure");
            witnesses.push(ClosureWitness {
                element: v.clone(),
                min_level: level,
            });
        }
        let mut gens = n.gens().to_vec();
        gens.extend(new_elems);
        Ok(Closed {
            gens,
            certified_bound: Some(bound),
            witnesses,
        })
    }

    fn contains(&self, u: &VectorPoly, n: &Submodule, m: &FPModule) -> Result<bool, Error> {
        Ok(self.min_level(u, n, m)?.is_some())
    }
}

/// Closure induced by a module B: u is in the closure of N in M when for
/// every generator b of B, the element b (x) u of B (x) M lies in the image
/// of B (x) N.
#[derive(Clone, Debug)]
pub struct BModClosure {
    label: String,
    b: FPModule,
}

impl BModClosure {
    pub fn new(label: impl Into<String>, b: FPModule) -> Self {
        BModClosure {
            label: label.into(),
            b,
        }
    }

    pub fn module(&self) -> &FPModule {
        &self.b
    }

    /// The image of B (x) N inside B (x) M, as a working span in block
    /// coordinates (generator (i, j) of B (x) M at index i * m.rank + j).
    fn image_span(&self, n: &Submodule, m: &FPModule) -> Result<Submodule, Error> {
        let bm = self.b.tensor(m)?;
        let mut gens = Vec::new();
        for i in 0..self.b.rank() {
            for g in n.gens() {
                gens.push(block_embed(g, self.b.rank(), m.rank(), i));
            }
        }
        bm.span_in(&Submodule::new(n.ring(), bm.rank(), gens)?)
    }
}

/// Place v (of rank `inner`) into block `block` of a rank `outer * inner`
/// vector.
fn block_embed(v: &VectorPoly, outer: usize, inner: usize, block: usize) -> VectorPoly {
    let mut comps = Vec::with_capacity(outer * inner);
    for i in 0..outer {
        for j in 0..inner {
            comps.push(if i == block {
                v.comp(j).clone()
            } else {
                Polynomial::zero(v.field(), v.nvars())
            });
        }
    }
    VectorPoly::new(comps)
}

impl Closure for BModClosure {
    fn name(&self) -> String {
        format!("bmod:B={}", self.label)
    }

    fn capability(&self) -> Capability {
        Capability::Full
    }

    fn close(&self, n: &Submodule, m: &FPModule) -> Result<Closed, Error> {
        validate_pair(n, m)?;
        let ring = n.ring();
        if self.b.ring() != ring {
            return Err(Error::RingMismatch(
                "coefficient module lives over a different ring".into(),
            ));
        }
        let span = self.image_span(n, m)?;
        let span_gens = span.lifted_gens();
        let mut result: Option<Submodule> = None;
        for i in 0..self.b.rank() {
            // Preimage of the image span under u -> b_i (x) u.
            let cols: Vec<VectorPoly> = (0..m.rank())
                .map(|k| {
                    block_embed(
                        &VectorPoly::unit(ring.field(), ring.nvars(), m.rank(), k, ring.one()),
                        self.b.rank(),
                        m.rank(),
                        i,
                    )
                })
                .collect();
            let pre = preimage_of_span(ring, &cols, &span_gens)?;
            let sub = Submodule::new(ring, m.rank(), pre)?;
            result = Some(match result {
                None => sub,
                Some(acc) => acc.intersect(&sub)?,
            });
        }
        let closure = match result {
            Some(s) => s,
            // B has no generators: B = 0 and every element closes in.
            None => Submodule::full(ring, m.rank()),
        };
        let base_span = m.span_in(n)?;
        let mut witnesses = Vec::new();
        for g in closure.gens() {
            let reduced = base_span.normal_form(g);
            if !reduced.is_zero() {
                witnesses.push(ClosureWitness {
                    element: reduced,
                    min_level: 0,
                });
            }
        }
        witnesses.sort_by(|a, b| a.element.cmp(&b.element));
        witnesses.dedup();
        let mut gens = n.gens().to_vec();
        gens.extend(witnesses.iter().map(|w| w.element.clone()));
        Ok(Closed {
            gens,
            certified_bound: None,
            witnesses,
        })
    }

    fn contains(&self, u: &VectorPoly, n: &Submodule, m: &FPModule) -> Result<bool, Error> {
        validate_pair(n, m)?;
        let span = self.image_span(n, m)?;
        for i in 0..self.b.rank() {
            if !span.contains(&block_embed(u, self.b.rank(), m.rank(), i)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Witness-style tight-closure check: with a fixed multiplier c, test
/// c * u^[q] in (bracket of N) for every level e up to e_max. Consistent
/// answers do not certify membership; a failure refutes it when c is chosen
/// suitably.
#[derive(Clone, Debug)]
pub struct TightWitnessClosure {
    pub c: Polynomial,
    pub e_max: u32,
    label: Option<String>,
}

impl TightWitnessClosure {
    pub fn new(c: Polynomial, e_max: u32) -> Self {
        TightWitnessClosure {
            c,
            e_max,
            label: None,
        }
    }

    /// Report under this name (typically the selector string the caller
    /// parsed, which knows the variable names).
    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn verdict(
        &self,
        u: &VectorPoly,
        n: &Submodule,
        m: &FPModule,
    ) -> Result<TightVerdict, Error> {
        validate_pair(n, m)?;
        for e in 0..=self.e_max {
            let span = m.frobenius(e).span_in(&n.bracket(e))?;
            let powered = u.frobenius_power(e).mul_poly(&self.c)?;
            if !span.contains(&powered) {
                return Ok(TightVerdict::FailsAt(e));
            }
        }
        Ok(TightVerdict::Consistent(self.e_max))
    }
}

impl Closure for TightWitnessClosure {
    fn name(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            // Variable names are not known here; callers that have them
            // attach the selector string via `labeled`.
            None => format!("tight-witness:e_max={}", self.e_max),
        }
    }

    fn capability(&self) -> Capability {
        Capability::SemiDecision
    }

    fn close(&self, _n: &Submodule, _m: &FPModule) -> Result<Closed, Error> {
        Err(Error::SemiDecision {
            closure: "tight-witness".into(),
        })
    }

    fn contains(&self, _u: &VectorPoly, _n: &Submodule, _m: &FPModule) -> Result<bool, Error> {
        Err(Error::SemiDecision {
            closure: "tight-witness".into(),
        })
    }
}

/// Every submodule closes to all of M. Violates the axioms that pin the
/// closure of the maximal ideal and of zero; used as a negative control.
#[derive(Clone, Copy, Debug, Default)]
pub struct TotalClosure;

impl Closure for TotalClosure {
    fn name(&self) -> String {
        "total".into()
    }

    fn capability(&self) -> Capability {
        Capability::Full
    }

    fn close(&self, n: &Submodule, m: &FPModule) -> Result<Closed, Error> {
        validate_pair(n, m)?;
        let ring = n.ring();
        let full = Submodule::full(ring, m.rank());
        let base_span = m.span_in(n)?;
        let mut witnesses = Vec::new();
        for g in full.gens() {
            if !base_span.contains(g) {
                witnesses.push(ClosureWitness {
                    element: g.clone(),
                    min_level: 0,
                });
            }
        }
        let mut gens = n.gens().to_vec();
        gens.extend(witnesses.iter().map(|w| w.element.clone()));
        Ok(Closed {
            gens,
            certified_bound: None,
            witnesses,
        })
    }

    fn contains(&self, u: &VectorPoly, n: &Submodule, m: &FPModule) -> Result<bool, Error> {
        validate_pair(n, m)?;
        let _ = u;
        Ok(true)
    }
}

/// Parsed form of a closure selector string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureSpec {
    Identity,
    Frobenius { e_max: u32 },
    BMod { b: String },
    TightWitness { c: String, e_max: u32 },
    Total,
}

impl ClosureSpec {
    /// Grammar: `identity` | `frobenius:e_max=N` | `bmod:B=<name>` |
    /// `tight-witness:c=<poly>,e_max=N` | `total`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::parse(1, 1, format!("closure spec: {msg}"));
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        match head {
            "identity" => match rest {
                None => Ok(ClosureSpec::Identity),
                Some(_) => Err(bad("identity takes no arguments")),
            },
            "total" => match rest {
                None => Ok(ClosureSpec::Total),
                Some(_) => Err(bad("total takes no arguments")),
            },
            "frobenius" => {
                let args = rest.ok_or_else(|| bad("frobenius needs e_max=N"))?;
                let value = args
                    .strip_prefix("e_max=")
                    .ok_or_else(|| bad("frobenius needs e_max=N"))?;
                let e_max: u32 = value
                    .parse()
                    .map_err(|_| bad("e_max must be a nonnegative integer"))?;
                Ok(ClosureSpec::Frobenius { e_max })
            }
            "bmod" => {
                let args = rest.ok_or_else(|| bad("bmod needs B=<name>"))?;
                let name = args
                    .strip_prefix("B=")
                    .ok_or_else(|| bad("bmod needs B=<name>"))?;
                if name.is_empty() {
                    return Err(bad("bmod needs a nonempty module name"));
                }
                Ok(ClosureSpec::BMod { b: name.to_string() })
            }
            "tight-witness" => {
                let args = rest.ok_or_else(|| bad("tight-witness needs c=<poly>,e_max=N"))?;
                let (c_part, e_part) = args
                    .rsplit_once(",e_max=")
                    .ok_or_else(|| bad("tight-witness needs c=<poly>,e_max=N"))?;
                let c = c_part
                    .strip_prefix("c=")
                    .ok_or_else(|| bad("tight-witness needs c=<poly>"))?;
                if c.is_empty() {
                    return Err(bad("tight-witness needs a nonempty multiplier"));
                }
                let e_max: u32 = e_part
                    .parse()
                    .map_err(|_| bad("e_max must be a nonnegative integer"))?;
                Ok(ClosureSpec::TightWitness {
                    c: c.to_string(),
                    e_max,
                })
            }
            other => Err(bad(&format!("unknown closure `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PresentedRing;

    fn cone2() -> PresentedRing {
        let r = PresentedRing::polynomial_ring(2, &["x", "y", "z"]).unwrap();
        let rel = r.parse("x^3+y^3+z^3").unwrap();
        PresentedRing::new(2, &["x", "y", "z"], vec![rel]).unwrap()
    }

    fn plane7() -> PresentedRing {
        PresentedRing::polynomial_ring(7, &["x", "y"]).unwrap()
    }

    fn scalar(r: &PresentedRing, s: &str) -> VectorPoly {
        VectorPoly::scalar(r.parse(s).unwrap())
    }

    #[test]
    fn identity_closure_is_membership_in_span() {
        let r = plane7();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap()]).unwrap();
        let cl = IdentityClosure;
        assert!(cl.contains(&scalar(&r, "x*y"), &n, &m).unwrap());
        assert!(!cl.contains(&scalar(&r, "y"), &n, &m).unwrap());
        let closed = cl.close(&n, &m).unwrap();
        assert_eq!(closed.gens, n.gens());
        assert!(closed.witnesses.is_empty());
    }

    #[test]
    fn frobenius_closure_on_cubic_cone_in_char_two() {
        // z^2 squares to z^4 = z*x^3 + z*y^3 = x^2 (z x) + y^2 (z y), an
        // element of the bracket of (x, y), so z^2 enters the Frobenius
        // closure at level 1. z itself stays out through level 2.
        let r = cone2();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let cl = FrobeniusClosure::new(2);
        assert_eq!(
            cl.min_level(&scalar(&r, "z^2"), &n, &m).unwrap(),
            Some(1)
        );
        assert_eq!(cl.min_level(&scalar(&r, "z"), &n, &m).unwrap(), None);
        assert!(cl.contains(&scalar(&r, "z^2"), &n, &m).unwrap());
        assert!(!cl.contains(&scalar(&r, "z"), &n, &m).unwrap());
    }

    #[test]
    fn frobenius_materialization_finds_the_new_element() {
        let r = cone2();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let cl = FrobeniusClosure::new(2);
        let closed = cl.close(&n, &m).unwrap();
        assert_eq!(closed.certified_bound, Some(5));
        let found = closed
            .witnesses
            .iter()
            .find(|w| {
                let span = Submodule::ideal(&r, &[r.parse("z^2").unwrap()])
                    .unwrap()
                    .sum(&n)
                    .unwrap();
                span.contains(&w.element) && !m.span_in(&n).unwrap().contains(&w.element)
            })
            .expect("a witness congruent to z^2 mod (x, y)");
        assert_eq!(found.min_level, 1);
        // The closure span is exactly (x, y, z^2).
        let expected = Submodule::ideal(
            &r,
            &[
                r.parse("x").unwrap(),
                r.parse("y").unwrap(),
                r.parse("z^2").unwrap(),
            ],
        )
        .unwrap();
        assert!(closed.span(&r, 1).span_equals(&expected));
    }

    #[test]
    fn frobenius_closure_trivial_over_polynomial_ring() {
        let r = plane7();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y^2").unwrap()]).unwrap();
        let cl = FrobeniusClosure::new(1);
        let closed = cl.close(&n, &m).unwrap();
        assert!(
            closed.witnesses.is_empty(),
            "Frobenius closure adds nothing over a polynomial ring"
        );
    }

    #[test]
    fn frobenius_close_rejects_inputs_over_the_bound() {
        let r = plane7();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, &[r.parse("x^3").unwrap()]).unwrap();
        let cl = FrobeniusClosure::with_degree_bound(1, 2);
        match cl.close(&n, &m) {
            Err(Error::DegreeBoundExceeded { degree: 3, bound: 2 }) => {}
            other => panic!("expected a degree-bound error, got {other:?}"),
        }
    }

    #[test]
    fn frobenius_respects_module_relations() {
        // Base change raises module relations to bracket powers. Over the
        // characteristic-2 cone, M = R/(x,y) has z^4 = x^2*(x*z) + y^2*(y*z),
        // so z^2 falls into the closure of 0 at level 1 without lying in
        // (x,y) itself.
        let r = cone2();
        let m = FPModule::new(
            &r,
            1,
            vec![
                VectorPoly::scalar(r.parse("x").unwrap()),
                VectorPoly::scalar(r.parse("y").unwrap()),
            ],
        )
        .unwrap();
        let n = Submodule::zero(&r, 1);
        let cl = FrobeniusClosure::new(1);
        assert!(cl.contains(&scalar(&r, "z^2"), &n, &m).unwrap());
        assert!(!IdentityClosure.contains(&scalar(&r, "z^2"), &n, &m).unwrap());
        // Over a regular base the same bracketing keeps the closure trivial:
        // in R/(x^2) over F_2[x] the raised relation is x^4, which misses x.
        let line = PresentedRing::polynomial_ring(2, &["x"]).unwrap();
        let t =
            FPModule::new(&line, 1, vec![VectorPoly::scalar(line.parse("x^2").unwrap())]).unwrap();
        let z = Submodule::zero(&line, 1);
        assert!(!cl.contains(&scalar(&line, "x"), &z, &t).unwrap());
    }

    #[test]
    fn bmod_with_free_rank_one_matches_identity() {
        let r = plane7();
        let m = FPModule::free(&r, 2);
        let f = r.field();
        let n = Submodule::new(
            &r,
            2,
            vec![
                VectorPoly::unit(f, 2, 2, 0, r.parse("x").unwrap()),
                VectorPoly::unit(f, 2, 2, 1, r.parse("y^2").unwrap()),
            ],
        )
        .unwrap();
        let cl = BModClosure::new("R", FPModule::free(&r, 1));
        let u = VectorPoly::unit(f, 2, 2, 0, r.parse("x*y").unwrap());
        let v = VectorPoly::unit(f, 2, 2, 1, r.parse("y").unwrap());
        assert!(cl.contains(&u, &n, &m).unwrap());
        assert!(!cl.contains(&v, &n, &m).unwrap());
        let closed = cl.close(&n, &m).unwrap();
        assert!(closed.witnesses.is_empty());
        assert!(closed.span(&r, 2).span_equals(&n));
    }

    #[test]
    fn bmod_with_torsion_module_enlarges() {
        // B = R/(x): the image of (x^2) in B (x) R is zero, so anything
        // killed by the projection to B — the ideal (x) — closes in.
        let r = plane7();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, &[r.parse("x^2").unwrap()]).unwrap();
        let b = FPModule::new(&r, 1, vec![VectorPoly::scalar(r.parse("x").unwrap())]).unwrap();
        let cl = BModClosure::new("B", b);
        assert!(cl.contains(&scalar(&r, "x"), &n, &m).unwrap());
        assert!(!cl.contains(&scalar(&r, "1"), &n, &m).unwrap());
        let closed = cl.close(&n, &m).unwrap();
        let expected = Submodule::ideal(&r, &[r.parse("x").unwrap()]).unwrap();
        assert!(closed.span(&r, 1).span_equals(&expected));
    }

    #[test]
    fn tight_witness_verdicts() {
        let r = cone2();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let consistent = TightWitnessClosure::new(r.parse("x^2").unwrap(), 3);
        assert_eq!(
            consistent
                .verdict(&scalar(&r, "z^2"), &n, &m)
                .unwrap(),
            TightVerdict::Consistent(3)
        );
        let failing = TightWitnessClosure::new(r.parse("1").unwrap(), 3);
        assert_eq!(
            failing.verdict(&scalar(&r, "z"), &n, &m).unwrap(),
            TightVerdict::FailsAt(0)
        );
        assert!(matches!(
            consistent.close(&n, &m),
            Err(Error::SemiDecision { .. })
        ));
    }

    #[test]
    fn total_closure_swallows_everything() {
        let r = plane7();
        let m = FPModule::free(&r, 1);
        let n = Submodule::zero(&r, 1);
        let cl = TotalClosure;
        assert!(cl.contains(&scalar(&r, "1"), &n, &m).unwrap());
        let closed = cl.close(&n, &m).unwrap();
        assert!(closed.span(&r, 1).span_equals(&Submodule::full(&r, 1)));
    }

    #[test]
    fn closure_spec_parsing() {
        assert_eq!(ClosureSpec::parse("identity").unwrap(), ClosureSpec::Identity);
        assert_eq!(ClosureSpec::parse("total").unwrap(), ClosureSpec::Total);
        assert_eq!(
            ClosureSpec::parse("frobenius:e_max=2").unwrap(),
            ClosureSpec::Frobenius { e_max: 2 }
        );
        assert_eq!(
            ClosureSpec::parse("bmod:B=R").unwrap(),
            ClosureSpec::BMod { b: "R".into() }
        );
        assert_eq!(
            ClosureSpec::parse("tight-witness:c=x^2,e_max=3").unwrap(),
            ClosureSpec::TightWitness {
                c: "x^2".into(),
                e_max: 3
            }
        );
        assert!(ClosureSpec::parse("frobenius").is_err());
        assert!(ClosureSpec::parse("nope").is_err());
        assert!(ClosureSpec::parse("identity:x").is_err());
        assert!(ClosureSpec::parse("tight-witness:c=,e_max=1").is_err());
    }
}
