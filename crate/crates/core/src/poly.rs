//! Multivariate polynomials over F_p.
//!
//! Terms are kept sorted descending under the structural (lex-on-exponents)
//! order with no zero coefficients, so `==` is semantic equality and every
//! polynomial has exactly one representation. Monomial-order-sensitive work
//! (lead terms, reduction) happens in the Groebner engine, which re-sorts
//! under its active order.

use crate::error::Error;
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: u64) -> Self {
        let c = field.from_u64(c);
        let mut p = Self::zero(field, nvars);
        if c != 0 {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    pub fn var(field: PrimeField, nvars: usize, i: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: vec![(Monomial::var(nvars, i), 1)],
        }
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: u64) -> Self {
        let nvars = m.nvars();
        let c = field.from_u64(c);
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((m, c));
        }
        Polynomial {
            field,
            nvars,
            terms,
        }
    }

    /// Collect arbitrary (monomial, coefficient) pairs into canonical form.
    pub fn from_terms(
        field: PrimeField,
        nvars: usize,
        raw: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Result<Self, Error> {
        let mut terms: Vec<(Monomial, u64)> = Vec::new();
        for (m, c) in raw {
            if m.nvars() != nvars {
                return Err(Error::ArityMismatch(m.nvars(), nvars));
            }
            terms.push((m, field.from_u64(c)));
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Ok(Polynomial {
            field,
            nvars,
            terms: out,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> u64 {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    fn check_compat(&self, other: &Polynomial) -> Result<(), Error> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_compat(other)?;
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb).reverse() {
                std::cmp::Ordering::Less => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((mb.clone(), *cb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(*ca, *cb);
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            field: f,
            nvars: self.nvars,
            terms: out,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field;
        Polynomial {
            field: f,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let f = self.field;
        let c = f.from_u64(c);
        if c == 0 {
            return Polynomial::zero(f, self.nvars);
        }
        Polynomial {
            field: f,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), f.mul(*k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let f = self.field;
        let c = f.from_u64(c);
        if c == 0 {
            return Polynomial::zero(f, self.nvars);
        }
        // Multiplying every monomial by a fixed one preserves the structural
        // descending sort.
        Polynomial {
            field: f,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), f.mul(*k, c)))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_compat(other)?;
        let f = self.field;
        let mut raw: Vec<(Monomial, u64)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), f.mul(*ca, *cb)));
            }
        }
        Polynomial::from_terms(f, self.nvars, raw)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same ring");
            }
            base = base.checked_mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// `f^(p^e)`. Coefficients are fixed by Frobenius (a^p = a in F_p), so
    /// this is just exponent scaling, term by term.
    pub fn frobenius_power(&self, e: u32) -> Polynomial {
        let q64 = self.field.modulus().checked_pow(e).expect("q fits in u64");
        let q = u32::try_from(q64).expect("q fits in u32");
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.power(q), *c)).collect(),
        }
    }

    pub fn lead<'a>(&'a self, ord: &MonomialOrder) -> Option<(&'a Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, *c))
    }

    /// Remap variables: old variable `i` becomes `positions[i]` in a ring with
    /// `new_nvars` variables.
    pub fn embed(&self, new_nvars: usize, positions: &[usize]) -> Result<Polynomial, Error> {
        if positions.len() != self.nvars {
            return Err(Error::ArityMismatch(positions.len(), self.nvars));
        }
        let raw: Result<Vec<_>, Error> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; new_nvars];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[positions[i]] += e;
                }
                Ok((Monomial::new(exps)?, *c))
            })
            .collect();
        Polynomial::from_terms(self.field, new_nvars, raw?)
    }

    /// Substitute `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, Error> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch(images.len(), self.nvars));
        }
        let (field, nvars) = match images.first() {
            Some(p) => (p.field, p.nvars),
            None => (self.field, 0),
        };
        let mut acc = Polynomial::zero(field, nvars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(field, nvars, *c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.checked_mul(&images[i].pow(e))?;
                }
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Exponent-wise membership in the span of variables (degree >= 1 part).
    pub fn has_constant_term(&self) -> bool {
        self.constant_term() != 0
    }
}
