//! Submodules of free modules R^m and finitely presented modules over a
//! presented ring, together with module maps.
//!
//! Everything is computed in the ambient free module S^m over the polynomial
//! ring: a submodule's working basis is the span of its generators plus
//! J times the unit vectors, so normal forms decide membership over R = S/J.
//! Colons, intersections, kernels and preimages all reduce to one transporter
//! computation backed by the syzygy engine.

use std::sync::{Arc, OnceLock};

use crate::error::Error;
use crate::gb::{GroebnerBasis, Lifter};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PresentedRing;
use crate::vecpoly::VectorPoly;

fn unit_relators(ring: &PresentedRing, rank: usize) -> Vec<VectorPoly> {
    let mut out = Vec::new();
    for j in ring.relators() {
        for i in 0..rank {
            out.push(VectorPoly::unit(
                ring.field(),
                ring.nvars(),
                rank,
                i,
                j.clone(),
            ));
        }
    }
    out
}

/// A submodule of the free module R^rank, given by generators.
#[derive(Clone, Debug)]
pub struct Submodule {
    ring: PresentedRing,
    rank: usize,
    gens: Vec<VectorPoly>,
    lifted: Arc<OnceLock<Arc<GroebnerBasis>>>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.rank == other.rank && self.gens == other.gens
    }
}

impl Eq for Submodule {}

impl Submodule {
    pub fn new(ring: &PresentedRing, rank: usize, gens: Vec<VectorPoly>) -> Result<Self, Error> {
        let mut canon: Vec<VectorPoly> = Vec::with_capacity(gens.len());
        for g in &gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: g.rank(),
                });
            }
            if g.field() != ring.field() {
                return Err(Error::ModulusMismatch(
                    g.field().modulus(),
                    ring.modulus(),
                ));
            }
            if g.nvars() != ring.nvars() {
                return Err(Error::ArityMismatch(g.nvars(), ring.nvars()));
            }
            let reduced = VectorPoly::new(g.comps().iter().map(|p| ring.nf(p)).collect());
            if !reduced.is_zero() {
                canon.push(reduced);
            }
        }
        canon.sort();
        canon.dedup();
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            gens: canon,
            lifted: Arc::new(OnceLock::new()),
        })
    }

    pub fn zero(ring: &PresentedRing, rank: usize) -> Self {
        Submodule {
            ring: ring.clone(),
            rank,
            gens: Vec::new(),
            lifted: Arc::new(OnceLock::new()),
        }
    }

    /// Ideal of R viewed as a rank-1 submodule.
    pub fn ideal(ring: &PresentedRing, gens: &[Polynomial]) -> Result<Self, Error> {
        Submodule::new(
            ring,
            1,
            gens.iter().map(|p| VectorPoly::scalar(p.clone())).collect(),
        )
    }

    /// All of R^rank.
    pub fn full(ring: &PresentedRing, rank: usize) -> Self {
        let gens = (0..rank)
            .map(|i| VectorPoly::unit(ring.field(), ring.nvars(), rank, i, ring.one()))
            .collect();
        Submodule::new(ring, rank, gens).expect("units are valid")
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[VectorPoly] {
        &self.gens
    }

    pub fn is_zero_module(&self) -> bool {
        self.gens.is_empty()
    }

    /// Working basis of the lifted span: generators plus J times the units.
    pub fn lifted_basis(&self) -> &GroebnerBasis {
        let gb = self.lifted.get_or_init(|| {
            let mut all = self.gens.clone();
            all.extend(unit_relators(&self.ring, self.rank));
            Arc::new(GroebnerBasis::new(
                self.ring.field(),
                self.ring.nvars(),
                self.rank,
                MonomialOrder::GrevLex,
                &all,
            ))
        });
        gb
    }

    /// Full generator list defining the lifted span (before completion).
    pub fn lifted_gens(&self) -> Vec<VectorPoly> {
        let mut all = self.gens.clone();
        all.extend(unit_relators(&self.ring, self.rank));
        all
    }

    /// Generators with every member redundant in the span of the others
    /// dropped; zero generators are dropped first.
    pub fn minimal_gens(&self) -> Result<Vec<VectorPoly>, Error> {
        let mut kept: Vec<VectorPoly> =
            self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let mut i = 0;
        while i < kept.len() {
            let mut rest = kept.clone();
            rest.remove(i);
            let span = Submodule::new(&self.ring, self.rank, rest.clone())?;
            if span.contains(&kept[i]) {
                kept = rest;
            } else {
                i += 1;
            }
        }
        Ok(kept)
    }

    pub fn normal_form(&self, v: &VectorPoly) -> VectorPoly {
        self.lifted_basis().normal_form(v)
    }

    pub fn contains(&self, v: &VectorPoly) -> bool {
        self.lifted_basis().contains(v)
    }

    pub fn contains_all(&self, vs: &[VectorPoly]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    pub fn is_contained_in(&self, other: &Submodule) -> bool {
        other.contains_all(&self.gens)
    }

    pub fn span_equals(&self, other: &Submodule) -> bool {
        self.is_contained_in(other) && other.is_contained_in(self)
    }

    /// Span of self plus extra vectors.
    pub fn plus(&self, extra: &[VectorPoly]) -> Result<Submodule, Error> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Submodule::new(&self.ring, self.rank, gens)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule, Error> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        self.plus(&other.gens)
    }

    /// Componentwise q-th powers of the generators, q = p^e.
    pub fn bracket(&self, e: u32) -> Submodule {
        let gens = self.gens.iter().map(|g| g.frobenius_power(e)).collect();
        Submodule::new(&self.ring, self.rank, gens).expect("gens stay valid")
    }

    /// {u in R^rank : x u in self}; errors when x is zero in R.
    pub fn colon(&self, x: &Polynomial) -> Result<Submodule, Error> {
        if self.ring.is_zero_elem(x) {
            return Err(Error::ColonByZero);
        }
        let cols: Vec<VectorPoly> = (0..self.rank)
            .map(|i| {
                VectorPoly::unit(self.ring.field(), self.ring.nvars(), self.rank, i, x.clone())
            })
            .collect();
        let pre = preimage_of_span(&self.ring, &cols, &self.lifted_gens())?;
        Submodule::new(&self.ring, self.rank, pre)
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule, Error> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        let left = self.lifted_gens();
        let right = other.lifted_gens();
        let mut list = left.clone();
        list.extend(right.iter().cloned());
        let lifter = Lifter::new(
            self.ring.field(),
            self.ring.nvars(),
            self.rank,
            MonomialOrder::GrevLex,
            &list,
        );
        let mut gens = Vec::new();
        for s in lifter.syzygies() {
            // s = (a, b) with sum a_i left_i + sum b_j right_j = 0; the common
            // value sum a_i left_i lies in both spans.
            let mut v = VectorPoly::zero(self.ring.field(), self.ring.nvars(), self.rank);
            for (i, li) in left.iter().enumerate() {
                v = v.checked_add(&li.mul_poly(s.comp(i))?)?;
            }
            gens.push(v);
        }
        Submodule::new(&self.ring, self.rank, gens)
    }

    /// Scale every generator by a ring element.
    pub fn scaled(&self, c: &Polynomial) -> Result<Submodule, Error> {
        let gens: Result<Vec<_>, _> = self.gens.iter().map(|g| g.mul_poly(c)).collect();
        Submodule::new(&self.ring, self.rank, gens?)
    }

    /// Product I * self for an ideal given by generators.
    pub fn ideal_times(&self, ideal: &[Polynomial]) -> Result<Submodule, Error> {
        let mut gens = Vec::new();
        for c in ideal {
            for g in &self.gens {
                gens.push(g.mul_poly(c)?);
            }
        }
        Submodule::new(&self.ring, self.rank, gens)
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.display(self.ring.vars()))
            .collect();
        format!("({})", parts.join("; "))
    }
}

/// Generators of {u : sum u_i cols_i lies in span(span_gens)}, the transporter
/// computed from syzygies of the concatenated list.
pub fn preimage_of_span(
    ring: &PresentedRing,
    cols: &[VectorPoly],
    span_gens: &[VectorPoly],
) -> Result<Vec<VectorPoly>, Error> {
    let target_rank = cols
        .first()
        .map(VectorPoly::rank)
        .or_else(|| span_gens.first().map(VectorPoly::rank))
        .unwrap_or(1);
    let mut list: Vec<VectorPoly> = cols.to_vec();
    list.extend(span_gens.iter().cloned());
    let lifter = Lifter::new(
        ring.field(),
        ring.nvars(),
        target_rank,
        MonomialOrder::GrevLex,
        &list,
    );
    let mut out = Vec::new();
    for s in lifter.syzygies() {
        let u = s.slice(0, cols.len());
        if !u.is_zero() {
            out.push(u);
        }
    }
    Ok(out)
}

/// A finitely presented module: cokernel of the map defined by the relation
/// columns inside R^rank. The relation list order is preserved verbatim —
/// downstream constructions attach meaning to specific columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPModule {
    ring: PresentedRing,
    rank: usize,
    relations: Vec<VectorPoly>,
}

impl FPModule {
    pub fn new(
        ring: &PresentedRing,
        rank: usize,
        relations: Vec<VectorPoly>,
    ) -> Result<Self, Error> {
        for r in &relations {
            if r.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: r.rank(),
                });
            }
            if r.field() != ring.field() {
                return Err(Error::ModulusMismatch(r.field().modulus(), ring.modulus()));
            }
            if r.nvars() != ring.nvars() {
                return Err(Error::ArityMismatch(r.nvars(), ring.nvars()));
            }
        }
        Ok(FPModule {
            ring: ring.clone(),
            rank,
            relations,
        })
    }

    pub fn free(ring: &PresentedRing, rank: usize) -> Self {
        FPModule {
            ring: ring.clone(),
            rank,
            relations: Vec::new(),
        }
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[VectorPoly] {
        &self.relations
    }

    pub fn is_free_presentation(&self) -> bool {
        self.relations.is_empty()
    }

    /// The relation span as a submodule of the ambient free module.
    pub fn relation_span(&self) -> Submodule {
        Submodule::new(&self.ring, self.rank, self.relations.clone()).expect("validated")
    }

    /// Span of N's generators together with this module's relations: the
    /// working basis for membership of elements of M in the submodule N.
    pub fn span_in(&self, n: &Submodule) -> Result<Submodule, Error> {
        if n.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: n.rank(),
            });
        }
        n.plus(&self.relations)
    }

    pub fn submodule(&self, gens: Vec<VectorPoly>) -> Result<Submodule, Error> {
        Submodule::new(&self.ring, self.rank, gens)
    }

    pub fn element_is_zero(&self, v: &VectorPoly) -> bool {
        self.relation_span().contains(v)
    }

    pub fn elements_equal(&self, a: &VectorPoly, b: &VectorPoly) -> bool {
        self.element_is_zero(&a.checked_sub(b).expect("same rank"))
    }

    /// M / N: same generators, N's generators joined to the relations.
    pub fn quotient_by(&self, n: &Submodule) -> Result<FPModule, Error> {
        if n.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: n.rank(),
            });
        }
        let mut relations = self.relations.clone();
        relations.extend(n.gens().iter().cloned());
        FPModule::new(&self.ring, self.rank, relations)
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("direct sum over different rings".into()));
        }
        let rank = self.rank + other.rank;
        let mut relations: Vec<VectorPoly> = self
            .relations
            .iter()
            .map(|r| r.pad(rank))
            .collect();
        for r in &other.relations {
            let zero = VectorPoly::zero(self.ring.field(), self.ring.nvars(), self.rank);
            relations.push(zero.concat(r));
        }
        FPModule::new(&self.ring, rank, relations)
    }

    /// Tensor product over R; generator (i, j) of the result is b_i (x) w_j
    /// at index i * other.rank + j.
    pub fn tensor(&self, other: &FPModule) -> Result<FPModule, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("tensor over different rings".into()));
        }
        let rank = self.rank * other.rank;
        let field = self.ring.field();
        let nvars = self.ring.nvars();
        let mut relations = Vec::new();
        for r in &self.relations {
            for j in 0..other.rank {
                let mut v = VectorPoly::zero(field, nvars, rank);
                for i in 0..self.rank {
                    if !r.comp(i).is_zero() {
                        v = v.checked_add(&VectorPoly::unit(
                            field,
                            nvars,
                            rank,
                            i * other.rank + j,
                            r.comp(i).clone(),
                        ))?;
                    }
                }
                relations.push(v);
            }
        }
        for s in &other.relations {
            for i in 0..self.rank {
                let mut v = VectorPoly::zero(field, nvars, rank);
                for j in 0..other.rank {
                    if !s.comp(j).is_zero() {
                        v = v.checked_add(&VectorPoly::unit(
                            field,
                            nvars,
                            rank,
                            i * other.rank + j,
                            s.comp(j).clone(),
                        ))?;
                    }
                }
                relations.push(v);
            }
        }
        FPModule::new(&self.ring, rank, relations)
    }

    /// Base change along the e-th Frobenius: every relation entry is raised
    /// to the q-th power, q = p^e.
    pub fn frobenius(&self, e: u32) -> FPModule {
        FPModule {
            ring: self.ring.clone(),
            rank: self.rank,
            relations: self
                .relations
                .iter()
                .map(|r| r.frobenius_power(e))
                .collect(),
        }
    }

    /// Same generators present the same quotient: mutual containment of
    /// relation spans (rank must agree).
    pub fn same_quotient(&self, other: &FPModule) -> bool {
        self.rank == other.rank && self.relation_span().span_equals(&other.relation_span())
    }

    /// Nakayama pruning: repeatedly drop a generator expressible in the
    /// others, rewriting the relations through the expression. Deterministic:
    /// the lowest-index redundant generator goes first.
    pub fn minimize(&self) -> Result<FPModule, Error> {
        self.minimize_from(0)
    }

    /// Nakayama pruning that never drops generator 0, so a designated
    /// leading generator survives with its index intact.
    pub fn minimize_keeping_first(&self) -> Result<FPModule, Error> {
        self.minimize_from(1)
    }

    fn minimize_from(&self, start: usize) -> Result<FPModule, Error> {
        let mut current = self.clone();
        'outer: loop {
            if current.rank <= start {
                break;
            }
            for i in start..current.rank {
                if let Some(expr) = current.express_in_others(i)? {
                    current = current.drop_generator(i, &expr)?;
                    continue 'outer;
                }
            }
            break;
        }
        // Canonicalize the relation list for comparisons.
        let mut rels: Vec<VectorPoly> = current
            .relations
            .iter()
            .map(|r| VectorPoly::new(r.comps().iter().map(|p| current.ring.nf(p)).collect()))
            .filter(|r| !r.is_zero())
            .collect();
        rels.sort();
        rels.dedup();
        FPModule::new(&current.ring, current.rank, rels)
    }

    /// If generator i lies in the span of the others (mod relations), return
    /// coefficients c_j with e_i = sum_{j != i} c_j e_j in the module.
    fn express_in_others(&self, i: usize) -> Result<Option<Vec<Polynomial>>, Error> {
        let field = self.ring.field();
        let nvars = self.ring.nvars();
        let others: Vec<VectorPoly> = (0..self.rank)
            .filter(|&j| j != i)
            .map(|j| VectorPoly::unit(field, nvars, self.rank, j, self.ring.one()))
            .collect();
        let mut list = others.clone();
        list.extend(self.relations.iter().cloned());
        list.extend(unit_relators(&self.ring, self.rank));
        let lifter = Lifter::new(field, nvars, self.rank, MonomialOrder::GrevLex, &list);
        let e_i = VectorPoly::unit(field, nvars, self.rank, i, self.ring.one());
        Ok(lifter
            .lift(&e_i)
            .map(|coeffs| coeffs[..others.len()].to_vec()))
    }

    fn drop_generator(&self, i: usize, expr: &[Polynomial]) -> Result<FPModule, Error> {
        let new_rank = self.rank - 1;
        let field = self.ring.field();
        let nvars = self.ring.nvars();
        let mut relations = Vec::new();
        for r in &self.relations {
            // Substitute e_i := sum c_j e_j, then delete coordinate i.
            let mut comps: Vec<Polynomial> = Vec::with_capacity(new_rank);
            let mut expr_iter = 0usize;
            let ri = r.comp(i).clone();
            for j in 0..self.rank {
                if j == i {
                    continue;
                }
                let c = &expr[expr_iter];
                expr_iter += 1;
                comps.push(r.comp(j).checked_add(&ri.checked_mul(c)?)?);
            }
            let v = VectorPoly::new(if comps.is_empty() {
                vec![Polynomial::zero(field, nvars)]
            } else {
                comps
            });
            if !v.is_zero() && new_rank > 0 {
                relations.push(v);
            }
        }
        if new_rank == 0 {
            return FPModule::new(&self.ring, 0, Vec::new());
        }
        FPModule::new(&self.ring, new_rank, relations)
    }

    /// Generators of m*M + relations: the span deciding whether an element
    /// is part of a minimal generating set.
    pub fn irrelevant_span(&self) -> Result<Submodule, Error> {
        let field = self.ring.field();
        let nvars = self.ring.nvars();
        let mut gens = Vec::new();
        for x in self.ring.max_ideal_gens() {
            for i in 0..self.rank {
                gens.push(VectorPoly::unit(field, nvars, self.rank, i, x.clone()));
            }
        }
        gens.extend(self.relations.iter().cloned());
        Submodule::new(&self.ring, self.rank, gens)
    }
}

/// A map of finitely presented modules, stored as images of the source
/// generators in target coordinates. Construction checks well-definedness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    cols: Vec<VectorPoly>,
}

impl ModuleMap {
    pub fn new(
        source: FPModule,
        target: FPModule,
        cols: Vec<VectorPoly>,
    ) -> Result<Self, Error> {
        if cols.len() != source.rank() {
            return Err(Error::RankMismatch {
                expected: source.rank(),
                got: cols.len(),
            });
        }
        for c in &cols {
            if c.rank() != target.rank() {
                return Err(Error::RankMismatch {
                    expected: target.rank(),
                    got: c.rank(),
                });
            }
        }
        let map = ModuleMap {
            source,
            target,
            cols,
        };
        let rel_span = map.target.span_in(&Submodule::zero(map.target.ring(), map.target.rank()))?;
        for (index, r) in map.source.relations().iter().enumerate() {
            let img = map.apply_raw(r)?;
            if !rel_span.contains(&img) {
                return Err(Error::NotWellDefined { index });
            }
        }
        Ok(map)
    }

    pub fn identity(m: &FPModule) -> Self {
        let cols = (0..m.rank())
            .map(|i| VectorPoly::unit(m.ring().field(), m.ring().nvars(), m.rank(), i, m.ring().one()))
            .collect();
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            cols,
        }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn cols(&self) -> &[VectorPoly] {
        &self.cols
    }

    fn apply_raw(&self, v: &VectorPoly) -> Result<VectorPoly, Error> {
        let mut out = VectorPoly::zero(
            self.target.ring().field(),
            self.target.ring().nvars(),
            self.target.rank(),
        );
        for (i, c) in self.cols.iter().enumerate() {
            out = out.checked_add(&c.mul_poly(v.comp(i))?)?;
        }
        Ok(out)
    }

    pub fn apply(&self, v: &VectorPoly) -> Result<VectorPoly, Error> {
        if v.rank() != self.source.rank() {
            return Err(Error::RankMismatch {
                expected: self.source.rank(),
                got: v.rank(),
            });
        }
        self.apply_raw(v)
    }

    /// self then `next` (next o self).
    pub fn then(&self, next: &ModuleMap) -> Result<ModuleMap, Error> {
        if self.target.rank() != next.source.rank() {
            return Err(Error::RankMismatch {
                expected: next.source.rank(),
                got: self.target.rank(),
            });
        }
        let cols: Result<Vec<_>, _> = self.cols.iter().map(|c| next.apply_raw(c)).collect();
        ModuleMap::new(self.source.clone(), next.target.clone(), cols?)
    }

    /// Kernel as a submodule in source coordinates (the source relations are
    /// folded in: they map to zero by well-definedness).
    pub fn kernel(&self) -> Result<Submodule, Error> {
        let target_span = self.target.relation_span().lifted_gens();
        let mut pre = preimage_of_span(self.source.ring(), &self.cols, &target_span)?;
        pre.extend(self.source.relations().iter().cloned());
        Submodule::new(self.source.ring(), self.source.rank(), pre)
    }

    /// Image generators in target coordinates (a submodule of the target).
    pub fn image(&self) -> Result<Submodule, Error> {
        Submodule::new(self.target.ring(), self.target.rank(), self.cols.clone())
    }

    pub fn is_injective(&self) -> Result<bool, Error> {
        let kernel = self.kernel()?;
        let zero_span = self.source.relation_span();
        Ok(kernel.gens().iter().all(|g| zero_span.contains(g)))
    }

    pub fn is_surjective(&self) -> Result<bool, Error> {
        let span = self.target.span_in(&self.image()?)?;
        let field = self.target.ring().field();
        let nvars = self.target.ring().nvars();
        for i in 0..self.target.rank() {
            let e = VectorPoly::unit(field, nvars, self.target.rank(), i, self.target.ring().one());
            if !span.contains(&e) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::MatFp;

    fn poly_ring() -> PresentedRing {
        PresentedRing::polynomial_ring(7, &["x", "y"]).unwrap()
    }

    fn cone(p: u64) -> PresentedRing {
        let r = PresentedRing::polynomial_ring(p, &["x", "y", "z"]).unwrap();
        let rel = r.parse("x^3+y^3+z^3").unwrap();
        PresentedRing::new(p, &["x", "y", "z"], vec![rel]).unwrap()
    }

    #[test]
    fn ideal_membership_mod_relation() {
        let r = cone(7);
        let i = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        // z^3 = -(x^3 + y^3) lies in (x, y); z does not.
        assert!(i.contains(&VectorPoly::scalar(r.parse("z^3").unwrap())));
        assert!(!i.contains(&VectorPoly::scalar(r.parse("z").unwrap())));
    }

    #[test]
    fn degree_one_membership_matches_linear_algebra() {
        // Independent oracle: in the cone ring, the degree-1 piece of (x, y)
        // is spanned by x and y; solve for z in that span by row reduction.
        let r = cone(7);
        let f = r.field();
        let mut m = MatFp::zero(f, 3, 2);
        // Columns are x and y expressed in the monomial basis (x, y, z).
        m.set(0, 0, 1);
        m.set(1, 1, 1);
        let mut augmented = MatFp::zero(f, 3, 3);
        for row in 0..3 {
            for col in 0..2 {
                augmented.set(row, col, m.at(row, col));
            }
        }
        augmented.set(2, 2, 1); // z
        let rank_without = m.rank();
        let rank_with = augmented.rank();
        assert!(rank_with > rank_without, "z is independent of x, y in degree 1");
        let i = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        assert!(!i.contains(&VectorPoly::scalar(r.parse("z").unwrap())));
    }

    #[test]
    fn colon_of_principal_ideal() {
        let r = poly_ring();
        let x = r.parse("x").unwrap();
        let x2 = Submodule::ideal(&r, &[r.parse("x^2").unwrap()]).unwrap();
        let colon = x2.colon(&x).unwrap();
        let expected = Submodule::ideal(&r, std::slice::from_ref(&x)).unwrap();
        assert!(colon.span_equals(&expected));
    }

    #[test]
    fn colon_generators_multiply_back_in() {
        let r = cone(7);
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let z = r.parse("z").unwrap();
        let colon = n.colon(&z).unwrap();
        for g in colon.gens() {
            let prod = g.mul_poly(&z).unwrap();
            assert!(n.contains(&prod), "colon generator times z must land in N");
        }
    }

    #[test]
    fn colon_by_zero_rejected() {
        let r = poly_ring();
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap()]).unwrap();
        assert!(matches!(n.colon(&r.zero()), Err(Error::ColonByZero)));
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let r = poly_ring();
        let a = Submodule::ideal(&r, &[r.parse("x").unwrap()]).unwrap();
        let b = Submodule::ideal(&r, &[r.parse("y").unwrap()]).unwrap();
        let meet = a.intersect(&b).unwrap();
        let expected = Submodule::ideal(&r, &[r.parse("x*y").unwrap()]).unwrap();
        assert!(meet.span_equals(&expected));
    }

    #[test]
    fn bracket_power_compounds() {
        let r = cone(2);
        let n = Submodule::ideal(&r, &[r.parse("x").unwrap(), r.parse("y+z").unwrap()]).unwrap();
        let twice = n.bracket(1).bracket(2);
        let once = n.bracket(3);
        assert_eq!(twice.gens(), once.gens(), "bracket exponents add");
    }

    #[test]
    fn kernel_of_projection() {
        let r = poly_ring();
        let x = r.parse("x").unwrap();
        // R -> R/(x), generator to generator.
        let source = FPModule::free(&r, 1);
        let target = FPModule::new(&r, 1, vec![VectorPoly::scalar(x.clone())]).unwrap();
        let map = ModuleMap::new(
            source,
            target,
            vec![VectorPoly::scalar(r.one())],
        )
        .unwrap();
        let kernel = map.kernel().unwrap();
        let expected = Submodule::ideal(&r, &[x]).unwrap();
        assert!(kernel.span_equals(&expected));
        assert!(!map.is_injective().unwrap());
        assert!(map.is_surjective().unwrap());
    }

    #[test]
    fn ill_defined_map_rejected() {
        let r = poly_ring();
        let x = r.parse("x").unwrap();
        let source = FPModule::new(&r, 1, vec![VectorPoly::scalar(x)]).unwrap();
        let target = FPModule::free(&r, 1);
        // R/(x) -> R sending the generator to 1 is not well defined.
        let result = ModuleMap::new(source, target, vec![VectorPoly::scalar(r.one())]);
        assert!(matches!(result, Err(Error::NotWellDefined { index: 0 })));
    }

    #[test]
    fn tensor_with_free_rank_one_is_identity() {
        let r = poly_ring();
        let x = r.parse("x").unwrap();
        let m = FPModule::new(
            &r,
            2,
            vec![VectorPoly::new(vec![x.clone(), r.parse("y").unwrap()])],
        )
        .unwrap();
        let free = FPModule::free(&r, 1);
        let t = free.tensor(&m).unwrap();
        assert!(t.same_quotient(&m));
        let t2 = m.tensor(&free).unwrap();
        assert!(t2.same_quotient(&m));
    }

    #[test]
    fn tensor_of_cyclic_quotients() {
        // R/(x) tensor R/(y) = R/(x, y).
        let r = poly_ring();
        let x = r.parse("x").unwrap();
        let y = r.parse("y").unwrap();
        let a = FPModule::new(&r, 1, vec![VectorPoly::scalar(x.clone())]).unwrap();
        let b = FPModule::new(&r, 1, vec![VectorPoly::scalar(y.clone())]).unwrap();
        let t = a.tensor(&b).unwrap();
        let expected = FPModule::new(
            &r,
            1,
            vec![VectorPoly::scalar(x), VectorPoly::scalar(y)],
        )
        .unwrap();
        assert!(t.same_quotient(&expected));
    }

    #[test]
    fn minimize_drops_unit_relation_generator() {
        let r = poly_ring();
        let x = r.parse("x").unwrap();
        // coker[(x, 1)^t] = R: the second generator is -x times the first.
        let m = FPModule::new(
            &r,
            2,
            vec![VectorPoly::new(vec![x, r.one()])],
        )
        .unwrap();
        let min = m.minimize().unwrap();
        assert_eq!(min.rank(), 1);
        assert!(min.relations().is_empty(), "presentation of a free module");
    }

    #[test]
    fn quotient_and_direct_sum_shapes() {
        let r = poly_ring();
        let x = r.parse("x").unwrap();
        let m = FPModule::free(&r, 1);
        let n = Submodule::ideal(&r, std::slice::from_ref(&x)).unwrap();
        let q = m.quotient_by(&n).unwrap();
        assert!(q.element_is_zero(&VectorPoly::scalar(x.clone())));
        assert!(!q.element_is_zero(&VectorPoly::scalar(r.one())));
        let s = q.direct_sum(&m).unwrap();
        assert_eq!(s.rank(), 2);
        // (x, 0) dies, (0, x) survives.
        let f = r.field();
        let dead = VectorPoly::unit(f, 2, 2, 0, x.clone());
        let alive = VectorPoly::unit(f, 2, 2, 1, x.clone());
        assert!(s.element_is_zero(&dead));
        assert!(!s.element_is_zero(&alive));
    }

    #[test]
    fn frobenius_module_brackets_relations() {
        let r = cone(2);
        let x = r.parse("x").unwrap();
        let m = FPModule::new(&r, 1, vec![VectorPoly::scalar(x.clone())]).unwrap();
        let fm = m.frobenius(1);
        assert_eq!(
            fm.relations()[0],
            VectorPoly::scalar(r.parse("x^2").unwrap())
        );
    }

    #[test]
    fn irrelevant_span_detects_minimal_generators() {
        let r = poly_ring();
        let m = FPModule::free(&r, 1);
        let span = m.irrelevant_span().unwrap();
        assert!(!span.contains(&VectorPoly::scalar(r.one())));
        assert!(span.contains(&VectorPoly::scalar(r.parse("x").unwrap())));
    }
}
