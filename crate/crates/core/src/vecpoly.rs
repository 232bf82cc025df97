//! Vectors of polynomials: elements of a free module S^r over the ambient
//! polynomial ring.

use crate::error::Error;
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::text::format_polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorPoly {
    comps: Vec<Polynomial>,
}

impl VectorPoly {
    pub fn new(comps: Vec<Polynomial>) -> Self {
        debug_assert!(!comps.is_empty());
        debug_assert!(comps.windows(2).all(|w| {
            w[0].field() == w[1].field() && w[0].nvars() == w[1].nvars()
        }));
        VectorPoly { comps }
    }

    pub fn zero(field: PrimeField, nvars: usize, rank: usize) -> Self {
        VectorPoly {
            comps: vec![Polynomial::zero(field, nvars); rank],
        }
    }

    /// Standard basis vector with `p` in position `pos`.
    pub fn unit(field: PrimeField, nvars: usize, rank: usize, pos: usize, p: Polynomial) -> Self {
        let mut v = Self::zero(field, nvars, rank);
        v.comps[pos] = p;
        v
    }

    /// Wrap a polynomial as a rank-1 vector.
    pub fn scalar(p: Polynomial) -> Self {
        VectorPoly { comps: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn field(&self) -> PrimeField {
        self.comps[0].field()
    }

    pub fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::total_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let degrees: Vec<u32> = self
            .comps
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| if p.is_homogeneous() { p.total_degree().unwrap() } else { u32::MAX })
            .collect();
        !degrees.contains(&u32::MAX) && degrees.windows(2).all(|w| w[0] == w[1])
    }

    fn check_rank(&self, other: &VectorPoly) -> Result<(), Error> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &VectorPoly) -> Result<VectorPoly, Error> {
        self.check_rank(other)?;
        let comps: Result<Vec<_>, _> = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.checked_add(b))
            .collect();
        Ok(VectorPoly { comps: comps? })
    }

    pub fn checked_sub(&self, other: &VectorPoly) -> Result<VectorPoly, Error> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().map(Polynomial::neg).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Result<VectorPoly, Error> {
        let comps: Result<Vec<_>, _> = self.comps.iter().map(|c| c.checked_mul(p)).collect();
        Ok(VectorPoly { comps: comps? })
    }

    pub fn mul_term(&self, m: &Monomial, c: u64) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    /// Component-wise Frobenius bracket power.
    pub fn frobenius_power(&self, e: u32) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().map(|p| p.frobenius_power(e)).collect(),
        }
    }

    /// Append zero components up to `rank`.
    pub fn pad(&self, rank: usize) -> VectorPoly {
        debug_assert!(rank >= self.rank());
        let mut comps = self.comps.clone();
        comps.resize(rank, Polynomial::zero(self.field(), self.nvars()));
        VectorPoly { comps }
    }

    /// Keep components `range`, producing a shorter vector.
    pub fn slice(&self, start: usize, len: usize) -> VectorPoly {
        VectorPoly {
            comps: self.comps[start..start + len].to_vec(),
        }
    }

    pub fn concat(&self, other: &VectorPoly) -> VectorPoly {
        let mut comps = self.comps.clone();
        comps.extend_from_slice(&other.comps);
        VectorPoly { comps }
    }

    pub fn display(&self, vars: &[String]) -> String {
        if self.rank() == 1 {
            return format_polynomial(&self.comps[0], vars);
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|p| format_polynomial(p, vars))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl PartialOrd for VectorPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VectorPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Structural, deterministic: degree, then rank, then component terms.
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.rank().cmp(&other.rank()))
            .then_with(|| {
                for (a, b) in self.comps.iter().zip(&other.comps) {
                    let c = a.terms().cmp(b.terms());
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
    }
}
