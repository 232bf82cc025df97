//! Groebner engine over the ambient polynomial ring and over free modules.
//!
//! Works uniformly on vectors in S^r; ideals are the r = 1 case. Module terms
//! are compared position-over-term: lower component index dominates, ties are
//! broken by the active monomial order. That makes the tagged construction
//! below an elimination order on components, which is what the syzygy and
//! lift computations rely on.
//!
//! Completion is plain Buchberger with the normal selection strategy
//! (smallest lcm degree first, then lowest indices), the coprimality
//! criterion (rank 1 only, where it is valid) and the chain criterion.
//! Everything is deterministic: inputs are canonicalized and sorted before
//! completion, and the final reduced basis is sorted by lead term.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::vecpoly::VectorPoly;

/// A module term: component index, monomial, nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
struct MTerm {
    pos: u32,
    mono: Monomial,
    coeff: u64,
}

/// Internal element: terms sorted strictly descending under the active order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Elem {
    terms: Vec<MTerm>,
}

fn cmp_terms(ord: &MonomialOrder, a_pos: u32, a_mono: &Monomial, b_pos: u32, b_mono: &Monomial) -> Ordering {
    // Position-over-term: lower index is greater.
    match b_pos.cmp(&a_pos) {
        Ordering::Equal => ord.cmp(a_mono, b_mono),
        other => other,
    }
}

impl Elem {
    fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn to_elem(v: &VectorPoly, ord: &MonomialOrder) -> Elem {
    let mut terms: Vec<MTerm> = Vec::new();
    for (pos, p) in v.comps().iter().enumerate() {
        for (m, c) in p.terms() {
            terms.push(MTerm {
                pos: pos as u32,
                mono: m.clone(),
                coeff: *c,
            });
        }
    }
    terms.sort_by(|a, b| cmp_terms(ord, a.pos, &a.mono, b.pos, &b.mono).reverse());
    Elem { terms }
}

fn to_vector(e: &Elem, field: PrimeField, nvars: usize, rank: usize) -> VectorPoly {
    let mut comps: Vec<Vec<(Monomial, u64)>> = vec![Vec::new(); rank];
    for t in &e.terms {
        comps[t.pos as usize].push((t.mono.clone(), t.coeff));
    }
    VectorPoly::new(
        comps
            .into_iter()
            .map(|raw| Polynomial::from_terms(field, nvars, raw).expect("arity is uniform"))
            .collect(),
    )
}

/// `p - c * m * g`, both sorted; classic merge.
fn sub_mul(field: PrimeField, ord: &MonomialOrder, p: &Elem, g: &Elem, m: &Monomial, c: u64) -> Elem {
    let mut out = Vec::with_capacity(p.terms.len() + g.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < p.terms.len() && j < g.terms.len() {
        let a = &p.terms[i];
        let gj = &g.terms[j];
        let b_mono = gj.mono.mul(m);
        match cmp_terms(ord, a.pos, &a.mono, gj.pos, &b_mono) {
            Ordering::Greater => {
                out.push(a.clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(MTerm {
                    pos: gj.pos,
                    mono: b_mono,
                    coeff: field.neg(field.mul(c, gj.coeff)),
                });
                j += 1;
            }
            Ordering::Equal => {
                let k = field.sub(a.coeff, field.mul(c, gj.coeff));
                if k != 0 {
                    out.push(MTerm {
                        pos: a.pos,
                        mono: b_mono,
                        coeff: k,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&p.terms[i..]);
    while j < g.terms.len() {
        let gj = &g.terms[j];
        out.push(MTerm {
            pos: gj.pos,
            mono: gj.mono.mul(m),
            coeff: field.neg(field.mul(c, gj.coeff)),
        });
        j += 1;
    }
    Elem { terms: out }
}

fn make_monic(field: PrimeField, e: &mut Elem) {
    if let Some(lead) = e.terms.first() {
        let inv = field.inv(lead.coeff).expect("lead coefficient nonzero");
        if inv != 1 {
            for t in &mut e.terms {
                t.coeff = field.mul(t.coeff, inv);
            }
        }
    }
}

/// Full normal form: every term of the result is reducible by no basis lead.
fn nf(field: PrimeField, ord: &MonomialOrder, p: Elem, basis: &[Elem]) -> Elem {
    nf_skip(field, ord, p, basis, usize::MAX)
}

fn nf_skip(field: PrimeField, ord: &MonomialOrder, mut p: Elem, basis: &[Elem], skip: usize) -> Elem {
    let mut out: Vec<MTerm> = Vec::new();
    'outer: while let Some(t) = p.terms.first().cloned() {
        for (gi, g) in basis.iter().enumerate() {
            if gi == skip || g.is_zero() {
                continue;
            }
            let lg = g.lead().expect("checked nonzero");
            if lg.pos == t.pos && lg.mono.divides(&t.mono) {
                let m = lg.mono.quotient(&t.mono);
                // Basis is monic, so the multiplier is just the coefficient.
                p = sub_mul(field, ord, &p, g, &m, t.coeff);
                continue 'outer;
            }
        }
        out.push(t);
        p.terms.remove(0);
    }
    Elem { terms: out }
}

#[derive(Clone, PartialEq, Eq)]
struct Pair {
    degree: u32,
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; reverse for the normal strategy.
        (other.degree, other.i, other.j).cmp(&(self.degree, self.i, self.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn push_pairs(basis: &[Elem], new_index: usize, heap: &mut BinaryHeap<Pair>) {
    let lnew = basis[new_index].lead().unwrap();
    for (i, b) in basis.iter().enumerate().take(new_index) {
        let li = b.lead().unwrap();
        if li.pos != lnew.pos {
            continue;
        }
        let lcm = li.mono.lcm(&lnew.mono);
        heap.push(Pair {
            degree: lcm.degree(),
            i,
            j: new_index,
            lcm,
            pos: li.pos,
        });
    }
}

fn buchberger(field: PrimeField, ord: &MonomialOrder, rank: usize, input: Vec<Elem>) -> Vec<Elem> {
    let mut basis: Vec<Elem> = Vec::new();
    for mut e in input {
        if e.is_zero() {
            continue;
        }
        make_monic(field, &mut e);
        basis.push(e);
    }
    let mut heap = BinaryHeap::new();
    for k in 1..basis.len() {
        push_pairs(&basis, k, &mut heap);
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    while let Some(pair) = heap.pop() {
        if done.contains(&(pair.i, pair.j)) {
            continue;
        }
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (li, lj) = (fi.lead().unwrap(), fj.lead().unwrap());
        // Coprimality criterion; only valid in the ideal case.
        if rank == 1 && li.mono.is_coprime_with(&lj.mono) {
            done.insert((pair.i, pair.j));
            continue;
        }
        // Chain criterion: some g_k divides the lcm and both flanking pairs
        // are already settled.
        let chained = basis.iter().enumerate().any(|(k, gk)| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let lk = gk.lead().unwrap();
            lk.pos == pair.pos
                && lk.mono.divides(&pair.lcm)
                && done.contains(&(pair.i.min(k), pair.i.max(k)))
                && done.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chained {
            done.insert((pair.i, pair.j));
            continue;
        }
        let mi = li.mono.quotient(&pair.lcm);
        let mj = lj.mono.quotient(&pair.lcm);
        // Both are monic: spoly = lcm/lt(fi) * fi - lcm/lt(fj) * fj.
        let shifted = Elem {
            terms: fi
                .terms
                .iter()
                .map(|t| MTerm {
                    pos: t.pos,
                    mono: t.mono.mul(&mi),
                    coeff: t.coeff,
                })
                .collect(),
        };
        let spoly = sub_mul(field, ord, &shifted, fj, &mj, 1);
        let mut r = nf(field, ord, spoly, &basis);
        done.insert((pair.i, pair.j));
        if !r.is_zero() {
            make_monic(field, &mut r);
            basis.push(r);
            push_pairs(&basis, basis.len() - 1, &mut heap);
        }
    }
    reduce_basis(field, ord, basis)
}

fn reduce_basis(field: PrimeField, ord: &MonomialOrder, mut basis: Vec<Elem>) -> Vec<Elem> {
    // Drop elements whose lead is divisible by another surviving lead.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let la = basis[a].lead().unwrap();
            let lb = basis[b].lead().unwrap();
            if la.pos == lb.pos && lb.mono.divides(&la.mono) {
                // Equal leads: keep the earlier one.
                if la.mono == lb.mono && b > a {
                    continue;
                }
                keep[a] = false;
                break;
            }
        }
    }
    let mut pruned: Vec<Elem> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();
    // Tail-reduce every element against the others. Leads are untouched
    // (no surviving lead divides another), so this converges.
    loop {
        let mut changed = false;
        for i in 0..pruned.len() {
            let current = std::mem::take(&mut pruned[i]);
            let mut r = nf_skip(field, ord, current.clone(), &pruned, i);
            if r != current {
                make_monic(field, &mut r);
                changed = true;
            }
            pruned[i] = r;
        }
        pruned.retain(|e| !e.is_zero());
        if !changed {
            break;
        }
    }
    pruned.sort_by(|a, b| {
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        cmp_terms(ord, la.pos, &la.mono, lb.pos, &lb.mono)
    });
    pruned
}

/// A reduced Groebner basis of a submodule of S^rank, frozen with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    nvars: usize,
    rank: usize,
    order: MonomialOrder,
    elems: Vec<Elem>,
}

impl GroebnerBasis {
    /// Complete `gens` to a reduced basis. Zero generators are ignored.
    pub fn new(
        field: PrimeField,
        nvars: usize,
        rank: usize,
        order: MonomialOrder,
        gens: &[VectorPoly],
    ) -> GroebnerBasis {
        let mut sorted: Vec<VectorPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        sorted.sort();
        sorted.dedup();
        let input: Vec<Elem> = sorted.iter().map(|g| to_elem(g, &order)).collect();
        let elems = buchberger(field, &order, rank, input);
        GroebnerBasis {
            field,
            nvars,
            rank,
            order,
            elems,
        }
    }

    pub fn for_ideal(field: PrimeField, nvars: usize, order: MonomialOrder, gens: &[Polynomial]) -> GroebnerBasis {
        let vecs: Vec<VectorPoly> = gens.iter().map(|p| VectorPoly::scalar(p.clone())).collect();
        GroebnerBasis::new(field, nvars, 1, order, &vecs)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn basis(&self) -> Vec<VectorPoly> {
        self.elems
            .iter()
            .map(|e| to_vector(e, self.field, self.nvars, self.rank))
            .collect()
    }

    pub fn lead_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems
            .iter()
            .map(|e| {
                let l = e.lead().unwrap();
                (l.pos as usize, l.mono.clone())
            })
            .collect()
    }

    pub fn normal_form(&self, v: &VectorPoly) -> VectorPoly {
        debug_assert_eq!(v.rank(), self.rank);
        let e = to_elem(v, &self.order);
        let r = nf(self.field, &self.order, e, &self.elems);
        to_vector(&r, self.field, self.nvars, self.rank)
    }

    pub fn contains(&self, v: &VectorPoly) -> bool {
        let e = to_elem(v, &self.order);
        nf(self.field, &self.order, e, &self.elems).is_zero()
    }

    pub fn reduce_poly(&self, p: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.rank, 1);
        self.normal_form(&VectorPoly::scalar(p.clone())).comp(0).clone()
    }

    /// No basis lead divides (pos, mono): the image in the quotient of this
    /// module term is part of the standard monomial basis.
    pub fn is_standard(&self, pos: usize, mono: &Monomial) -> bool {
        !self.elems.iter().any(|e| {
            let l = e.lead().unwrap();
            l.pos as usize == pos && l.mono.divides(mono)
        })
    }

    /// Buchberger criterion, directly: every S-polynomial reduces to zero.
    pub fn certify(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                let li = self.elems[i].lead().unwrap();
                let lj = self.elems[j].lead().unwrap();
                if li.pos != lj.pos {
                    continue;
                }
                let lcm = li.mono.lcm(&lj.mono);
                let mi = li.mono.quotient(&lcm);
                let mj = lj.mono.quotient(&lcm);
                let shifted = Elem {
                    terms: self.elems[i]
                        .terms
                        .iter()
                        .map(|t| MTerm {
                            pos: t.pos,
                            mono: t.mono.mul(&mi),
                            coeff: t.coeff,
                        })
                        .collect(),
                };
                let spoly = sub_mul(self.field, &self.order, &shifted, &self.elems[j], &mj, 1);
                if !nf(self.field, &self.order, spoly, &self.elems).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Syzygies and membership lifts for a fixed generator list, via the tagged
/// module S^rank + S^t with the generators embedded as (g_i, e_i).
pub struct Lifter {
    rank: usize,
    count: usize,
    tagged: GroebnerBasis,
}

impl Lifter {
    pub fn new(field: PrimeField, nvars: usize, rank: usize, order: MonomialOrder, gens: &[VectorPoly]) -> Lifter {
        let count = gens.len();
        let total = rank + count;
        let tagged_gens: Vec<VectorPoly> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut v = g.pad(total);
                v = v
                    .checked_add(&VectorPoly::unit(
                        field,
                        nvars,
                        total,
                        rank + i,
                        Polynomial::one(field, nvars),
                    ))
                    .expect("ranks align");
                v
            })
            .collect();
        // Keep the generators in their given positions: the tag block must
        // line up with indices, so no canonical re-sort here.
        let input: Vec<Elem> = tagged_gens.iter().map(|g| to_elem(g, &order)).collect();
        let elems = buchberger(field, &order, total, input);
        Lifter {
            rank,
            count,
            tagged: GroebnerBasis {
                field,
                nvars,
                rank: total,
                order,
                elems,
            },
        }
    }

    /// Generators of the syzygy module of the generator list: the tagged
    /// basis elements supported entirely in the tag block.
    pub fn syzygies(&self) -> Vec<VectorPoly> {
        self.tagged
            .basis()
            .into_iter()
            .filter(|v| v.slice(0, self.rank).is_zero())
            .map(|v| v.slice(self.rank, self.count))
            .collect()
    }

    /// Coefficients c with v = sum c_i g_i, if v lies in the span.
    pub fn lift(&self, v: &VectorPoly) -> Option<Vec<Polynomial>> {
        if self.count == 0 {
            return v.is_zero().then(Vec::new);
        }
        let padded = v.pad(self.rank + self.count);
        let r = self.tagged.normal_form(&padded);
        if !r.slice(0, self.rank).is_zero() {
            return None;
        }
        // (v, 0) - reductions = (0, w) means (v, -w) is in the tagged span,
        // i.e. v = sum (-w_i) g_i.
        Some(
            r.slice(self.rank, self.count)
                .neg()
                .comps()
                .to_vec(),
        )
    }
}

/// Basis of the ideal obtained by eliminating the masked variables.
pub fn eliminate(
    field: PrimeField,
    nvars: usize,
    gens: &[Polynomial],
    eliminate_mask: &[bool],
) -> Vec<Polynomial> {
    assert_eq!(eliminate_mask.len(), nvars);
    let order = MonomialOrder::block(eliminate_mask.to_vec());
    let gb = GroebnerBasis::for_ideal(field, nvars, order, gens);
    let keep: Vec<bool> = eliminate_mask.iter().map(|b| !b).collect();
    let mut out: Vec<Polynomial> = gb
        .basis()
        .into_iter()
        .map(|v| v.comp(0).clone())
        .filter(|p| p.terms().iter().all(|(m, _)| m.supported_on(&keep)))
        .collect();
    out.sort_by(|a, b| VectorPoly::scalar(a.clone()).cmp(&VectorPoly::scalar(b.clone())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn setup(p: u64, vars: &[&str]) -> (PrimeField, Vec<String>) {
        (
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
        )
    }

    fn pp(src: &str, f: PrimeField, vars: &[String]) -> Polynomial {
        parse_polynomial(src, f, vars).unwrap()
    }

    #[test]
    fn membership_x4_in_x2_minus_y_y2() {
        let (f, vs) = setup(7, &["x", "y"]);
        let g1 = pp("x^2 - y", f, &vs);
        let g2 = pp("y^2", f, &vs);
        // Oracle first: x^4 = (x^2 - y)(x^2 + y) + y^2, checked by raw arithmetic.
        let x4 = pp("x^4", f, &vs);
        let rebuilt = g1
            .checked_mul(&pp("x^2 + y", f, &vs))
            .unwrap()
            .checked_add(&g2)
            .unwrap();
        assert_eq!(rebuilt, x4);
        let gb = GroebnerBasis::for_ideal(f, 2, MonomialOrder::GrevLex, &[g1, g2]);
        assert!(gb.contains(&VectorPoly::scalar(x4)));
        assert!(!gb.contains(&VectorPoly::scalar(pp("x^3", f, &vs))));
        assert!(gb.certify());
    }

    #[test]
    fn normal_form_is_idempotent_and_subtracts_to_membership() {
        let (f, vs) = setup(7, &["x", "y"]);
        let gens = [pp("x^2 - y", f, &vs), pp("x*y - 1", f, &vs)];
        let gb = GroebnerBasis::for_ideal(f, 2, MonomialOrder::GrevLex, &gens);
        assert!(gb.certify());
        for src in ["x^4 + x*y", "x^3*y^2 + 3*x + 2", "y^5 - x"] {
            let v = VectorPoly::scalar(pp(src, f, &vs));
            let r = gb.normal_form(&v);
            assert_eq!(gb.normal_form(&r), r, "NF is idempotent");
            let diff = v.checked_sub(&r).unwrap();
            assert!(gb.contains(&diff), "v - NF(v) is in the span");
        }
    }

    #[test]
    fn katsura_like_basis_certifies() {
        let (f, vs) = setup(7, &["x", "y", "z"]);
        let gens = [
            pp("x + 2*y + 2*z - 1", f, &vs),
            pp("x^2 + 2*y^2 + 2*z^2 - x", f, &vs),
            pp("2*x*y + 2*y*z - y", f, &vs),
        ];
        let gb = GroebnerBasis::for_ideal(f, 3, MonomialOrder::GrevLex, &gens);
        assert!(gb.certify());
        for g in gens {
            assert!(gb.contains(&VectorPoly::scalar(g)));
        }
    }

    #[test]
    fn deterministic_output() {
        let (f, vs) = setup(7, &["x", "y", "z"]);
        let gens = [
            pp("x^2*y - z", f, &vs),
            pp("x*z - y^2", f, &vs),
            pp("y^3 - x", f, &vs),
        ];
        let a = GroebnerBasis::for_ideal(f, 3, MonomialOrder::GrevLex, &gens);
        let rev: Vec<Polynomial> = gens.iter().rev().cloned().collect();
        let b = GroebnerBasis::for_ideal(f, 3, MonomialOrder::GrevLex, &rev);
        assert_eq!(a.basis(), b.basis(), "basis independent of input order");
    }

    #[test]
    fn syzygy_of_koszul_pair() {
        let (f, vs) = setup(7, &["x", "y"]);
        let x = pp("x", f, &vs);
        let y = pp("y", f, &vs);
        let gens = [VectorPoly::scalar(x.clone()), VectorPoly::scalar(y.clone())];
        let lifter = Lifter::new(f, 2, 1, MonomialOrder::GrevLex, &gens);
        let syz = lifter.syzygies();
        assert!(!syz.is_empty());
        // Every generator is an actual syzygy: dot with (x, y) gives zero.
        for s in &syz {
            let dot = s
                .comp(0)
                .checked_mul(&x)
                .unwrap()
                .checked_add(&s.comp(1).checked_mul(&y).unwrap())
                .unwrap();
            assert!(dot.is_zero());
        }
        // The Koszul relation (y, -x) lies in the computed syzygy module.
        let koszul = VectorPoly::new(vec![y.clone(), x.neg()]);
        let syz_gb = GroebnerBasis::new(f, 2, 2, MonomialOrder::GrevLex, &syz);
        assert!(syz_gb.contains(&koszul));
    }

    #[test]
    fn lift_recovers_coefficients() {
        let (f, vs) = setup(7, &["x", "y"]);
        let g1 = pp("x^2 - y", f, &vs);
        let g2 = pp("y^2", f, &vs);
        let gens = [VectorPoly::scalar(g1.clone()), VectorPoly::scalar(g2.clone())];
        let lifter = Lifter::new(f, 2, 1, MonomialOrder::GrevLex, &gens);
        let target = pp("x^4", f, &vs);
        let coeffs = lifter.lift(&VectorPoly::scalar(target.clone())).unwrap();
        let rebuilt = coeffs[0]
            .checked_mul(&g1)
            .unwrap()
            .checked_add(&coeffs[1].checked_mul(&g2).unwrap())
            .unwrap();
        assert_eq!(rebuilt, target);
        assert!(lifter.lift(&VectorPoly::scalar(pp("x", f, &vs))).is_none());
    }

    #[test]
    fn module_basis_same_position_reduction() {
        let (f, vs) = setup(7, &["x", "y"]);
        // Submodule of S^2 spanned by (x, y) and (y, x).
        let v1 = VectorPoly::new(vec![pp("x", f, &vs), pp("y", f, &vs)]);
        let v2 = VectorPoly::new(vec![pp("y", f, &vs), pp("x", f, &vs)]);
        let gb = GroebnerBasis::new(f, 2, 2, MonomialOrder::GrevLex, &[v1.clone(), v2.clone()]);
        assert!(gb.certify());
        let comb = v1
            .mul_poly(&pp("x + 3*y", f, &vs))
            .unwrap()
            .checked_add(&v2.mul_poly(&pp("y^2", f, &vs)).unwrap())
            .unwrap();
        assert!(gb.contains(&comb));
        let outside = VectorPoly::new(vec![pp("1", f, &vs), pp("0", f, &vs)]);
        assert!(!gb.contains(&outside));
    }

    #[test]
    fn eliminate_parametrized_curve() {
        // a = t^2, b = t^3: the relation ideal is (a^3 - b^2).
        let (f, vs) = setup(7, &["t", "a", "b"]);
        let gens = [pp("a - t^2", f, &vs), pp("b - t^3", f, &vs)];
        let out = eliminate(f, 3, &gens, &[true, false, false]);
        assert!(!out.is_empty());
        // Substitution oracle: every survivor vanishes at (a, b) = (t^2, t^3).
        let t = pp("t", f, &vs);
        let t2 = t.pow(2);
        let t3 = t.pow(3);
        for p in &out {
            let r = p.substitute(&[t.clone(), t2.clone(), t3.clone()]).unwrap();
            assert!(r.is_zero(), "{p:?} does not vanish under substitution");
        }
        // And a^3 - b^2 is in the eliminated ideal.
        let curve = pp("a^3 - b^2", f, &vs);
        let gb = GroebnerBasis::for_ideal(f, 3, MonomialOrder::GrevLex, &out);
        assert!(gb.contains(&VectorPoly::scalar(curve)));
    }

    #[test]
    fn empty_and_zero_inputs() {
        let (f, _vs) = setup(7, &["x"]);
        let gb = GroebnerBasis::for_ideal(f, 1, MonomialOrder::GrevLex, &[]);
        assert!(gb.is_empty());
        let v = VectorPoly::scalar(Polynomial::var(f, 1, 0));
        assert_eq!(gb.normal_form(&v), v);
        let zero = Polynomial::zero(f, 1);
        let gb2 = GroebnerBasis::for_ideal(f, 1, MonomialOrder::GrevLex, &[zero]);
        assert!(gb2.is_empty());
    }

    #[test]
    fn unit_ideal_reduces_everything() {
        let (f, vs) = setup(7, &["x", "y"]);
        let gb = GroebnerBasis::for_ideal(f, 2, MonomialOrder::GrevLex, &[pp("3", f, &vs)]);
        assert!(gb.contains(&VectorPoly::scalar(pp("x^5 + 1", f, &vs))));
    }
}
