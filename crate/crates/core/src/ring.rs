//! Finitely presented rings R = F_p[vars]/J with an eagerly cached Groebner
//! basis of J, combinatorial Krull dimension, parameter-sequence tests, and
//! kernels of ring maps via elimination.

use std::sync::Arc;

use crate::error::Error;
use crate::field::PrimeField;
use crate::gb::{eliminate, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::poly::Polynomial;
use crate::text::{format_polynomial, parse_polynomial};
use crate::vecpoly::VectorPoly;

#[derive(Debug)]
struct RingInner {
    field: PrimeField,
    vars: Vec<String>,
    j_gens: Vec<Polynomial>,
    j_gb: GroebnerBasis,
    graded: bool,
    name: Option<String>,
}

/// Shared handle to a presented ring. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct PresentedRing(Arc<RingInner>);

impl PartialEq for PresentedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.j_gens == other.0.j_gens)
    }
}

impl Eq for PresentedRing {}

impl PresentedRing {
    /// Quotient of F_p[vars] by the ideal generated by `j_gens`.
    pub fn new(p: u64, vars: &[&str], j_gens: Vec<Polynomial>) -> Result<Self, Error> {
        let field = PrimeField::new(p)?;
        Self::with_field(field, vars.iter().map(|s| s.to_string()).collect(), j_gens)
    }

    pub fn with_field(
        field: PrimeField,
        vars: Vec<String>,
        j_gens: Vec<Polynomial>,
    ) -> Result<Self, Error> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len(), MAX_VARS));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Unsupported(format!("duplicate variable {v}")));
            }
        }
        for g in &j_gens {
            if g.field() != field {
                return Err(Error::ModulusMismatch(g.field().modulus(), field.modulus()));
            }
            if g.nvars() != vars.len() {
                return Err(Error::ArityMismatch(g.nvars(), vars.len()));
            }
        }
        let graded = j_gens.iter().all(Polynomial::is_homogeneous);
        let j_gb = GroebnerBasis::for_ideal(field, vars.len(), MonomialOrder::GrevLex, &j_gens);
        Ok(PresentedRing(Arc::new(RingInner {
            field,
            vars,
            j_gens,
            j_gb,
            graded,
            name: None,
        })))
    }

    /// Free polynomial ring F_p[vars].
    pub fn polynomial_ring(p: u64, vars: &[&str]) -> Result<Self, Error> {
        Self::new(p, vars, Vec::new())
    }

    pub fn named(self, name: &str) -> Self {
        let inner = RingInner {
            field: self.0.field,
            vars: self.0.vars.clone(),
            j_gens: self.0.j_gens.clone(),
            j_gb: self.0.j_gb.clone(),
            graded: self.0.graded,
            name: Some(name.to_string()),
        };
        PresentedRing(Arc::new(inner))
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn modulus(&self) -> u64 {
        self.0.field.modulus()
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn relators(&self) -> &[Polynomial] {
        &self.0.j_gens
    }

    pub fn relator_basis(&self) -> &GroebnerBasis {
        &self.0.j_gb
    }

    pub fn is_graded(&self) -> bool {
        self.0.graded
    }

    pub fn is_free_polynomial_ring(&self) -> bool {
        self.0.j_gens.is_empty()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.0.field, self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.0.field, self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.0.field, self.nvars(), i)
    }

    /// The variables as ring elements: generators of the irrelevant ideal.
    pub fn max_ideal_gens(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial, Error> {
        parse_polynomial(src, self.0.field, &self.0.vars)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        format_polynomial(p, &self.0.vars)
    }

    /// Canonical representative modulo J.
    pub fn nf(&self, p: &Polynomial) -> Polynomial {
        if self.0.j_gens.is_empty() {
            return p.clone();
        }
        self.0.j_gb.reduce_poly(p)
    }

    pub fn is_zero_elem(&self, p: &Polynomial) -> bool {
        self.nf(p).is_zero()
    }

    pub fn elements_equal(&self, a: &Polynomial, b: &Polynomial) -> bool {
        self.is_zero_elem(&a.checked_sub(b).expect("same ring"))
    }

    /// Krull dimension via the combinatorial dimension of the lead-term
    /// ideal: the largest set of variables meeting no lead-term support.
    /// `None` for the zero ring.
    pub fn try_krull_dim(&self) -> Option<usize> {
        combinatorial_dim(self.nvars(), &self.0.j_gb)
    }

    pub fn krull_dim(&self) -> usize {
        self.try_krull_dim().expect("ring is nonzero")
    }

    /// Dimension of R modulo the extra elements; `None` if that quotient
    /// collapses to the zero ring.
    pub fn dim_modulo(&self, extra: &[Polynomial]) -> Option<usize> {
        let mut gens = self.0.j_gens.clone();
        gens.extend(extra.iter().cloned());
        let gb = GroebnerBasis::for_ideal(self.0.field, self.nvars(), MonomialOrder::GrevLex, &gens);
        combinatorial_dim(self.nvars(), &gb)
    }

    /// Each prefix (x_1..x_i) must drop the dimension by exactly one.
    pub fn is_partial_sop(&self, xs: &[Polynomial]) -> Result<bool, Error> {
        for x in xs {
            if x.field() != self.0.field {
                return Err(Error::ModulusMismatch(x.field().modulus(), self.modulus()));
            }
            if x.nvars() != self.nvars() {
                return Err(Error::ArityMismatch(x.nvars(), self.nvars()));
            }
            if self.is_zero_elem(x) {
                return Ok(false);
            }
        }
        let Some(dim) = self.try_krull_dim() else {
            return Ok(false);
        };
        if xs.len() > dim {
            return Ok(false);
        }
        for i in 1..=xs.len() {
            match self.dim_modulo(&xs[..i]) {
                Some(d) if d == dim - i => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Kernel of the ring map F_p[source_vars] -> R sending the i-th source
    /// variable to `images[i]`, computed by eliminating the target variables
    /// from the graph ideal. The result lives in the source polynomial ring.
    pub fn ring_kernel(
        &self,
        source_vars: &[&str],
        images: &[Polynomial],
    ) -> Result<Vec<Polynomial>, Error> {
        if images.len() != source_vars.len() {
            return Err(Error::ArityMismatch(images.len(), source_vars.len()));
        }
        let tn = self.nvars();
        let sn = source_vars.len();
        let total = tn + sn;
        if total > MAX_VARS {
            return Err(Error::TooManyVariables(total, MAX_VARS));
        }
        for im in images {
            if im.nvars() != tn {
                return Err(Error::ArityMismatch(im.nvars(), tn));
            }
            if im.field() != self.0.field {
                return Err(Error::ModulusMismatch(im.field().modulus(), self.modulus()));
            }
        }
        let target_positions: Vec<usize> = (0..tn).collect();
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in &self.0.j_gens {
            gens.push(g.embed(total, &target_positions)?);
        }
        for (i, im) in images.iter().enumerate() {
            let a = Polynomial::var(self.0.field, total, tn + i);
            gens.push(a.checked_sub(&im.embed(total, &target_positions)?)?);
        }
        let mut mask = vec![true; tn];
        mask.extend(std::iter::repeat_n(false, sn));
        let eliminated = eliminate(self.0.field, total, &gens, &mask);
        // Project down to the source ring: survivors only involve the tail.
        eliminated
            .iter()
            .map(|p| {
                let raw: Result<Vec<(Monomial, u64)>, Error> = p
                    .terms()
                    .iter()
                    .map(|(m, c)| Ok((Monomial::new(m.exps()[tn..].to_vec())?, *c)))
                    .collect();
                Polynomial::from_terms(self.0.field, sn, raw?)
            })
            .collect()
    }

    /// Lift a vector of ring elements into the ambient free module over the
    /// polynomial ring (identity on representatives).
    pub fn vector(&self, comps: Vec<Polynomial>) -> VectorPoly {
        VectorPoly::new(comps)
    }
}

fn combinatorial_dim(nvars: usize, gb: &GroebnerBasis) -> Option<usize> {
    let leads = gb.lead_terms();
    // A unit in the basis means the quotient is the zero ring.
    if leads.iter().any(|(_, m)| m.is_one()) {
        return None;
    }
    let masks: Vec<u32> = leads
        .iter()
        .map(|(_, m)| {
            m.exps()
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, &e)| if e > 0 { acc | 1 << i } else { acc })
        })
        .collect();
    let mut best = 0usize;
    for subset in 0u32..(1 << nvars) {
        if masks.iter().any(|m| m & !subset == 0) {
            continue; // some lead term is supported inside the subset
        }
        best = best.max(subset.count_ones() as usize);
    }
    Some(best)
}
