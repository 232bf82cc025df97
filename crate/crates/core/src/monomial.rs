//! Monomials as dense exponent vectors, and the monomial orders used by the
//! Groebner engine.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Hard cap on the number of variables; dense exponent vectors stay cheap.
pub const MAX_VARS: usize = 16;

/// A power product, stored densely. Two monomials are only comparable when
/// they have the same arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self, Error> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len(), MAX_VARS));
        }
        Ok(Monomial { exps })
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The i-th variable as a monomial.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Raise every exponent by the factor `q` (Frobenius bracket on monomials).
    pub fn power(&self, q: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * q).collect(),
        }
    }

    /// True when the support is contained in the masked variable set.
    pub fn supported_on(&self, keep: &[bool]) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || keep[i])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// Total orders on monomials of a fixed arity.
///
/// `Block` is the elimination order: the masked variables dominate (compared
/// grevlex among themselves), ties fall through to grevlex on the rest. A
/// Groebner basis under `Block` intersected with the unmasked subring is a
/// basis of the elimination ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block { eliminate: Arc<[bool]> },
}

impl MonomialOrder {
    pub fn block(eliminate: Vec<bool>) -> Self {
        MonomialOrder::Block {
            eliminate: eliminate.into(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::GrevLex => grevlex(a.exps(), b.exps()),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Block { eliminate } => {
                let proj = |m: &Monomial, flag: bool| -> Vec<u32> {
                    m.exps()
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| if eliminate[i] == flag { e } else { 0 })
                        .collect()
                };
                grevlex(&proj(a, true), &proj(b, true))
                    .then_with(|| grevlex(&proj(a, false), &proj(b, false)))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal degree: the one whose last nonzero difference is negative is larger.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

/// All monomials in `nvars` variables of total degree exactly `d`, in a
/// deterministic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, i: usize, remaining: u32) {
    if i + 1 == current.len() {
        current[i] = remaining;
        out.push(Monomial {
            exps: current.clone(),
        });
        current[i] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[i] = e;
        fill(out, current, i + 1, remaining - e);
    }
    current[i] = 0;
}

/// All monomials of total degree at most `d`.
pub fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    (0..=d)
        .flat_map(|k| monomials_of_degree(nvars, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec()).unwrap()
    }

    #[test]
    fn grevlex_prefers_higher_degree() {
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn grevlex_tie_break() {
        // x^2*y vs x*y^2: equal degree, last nonzero difference decides.
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.cmp(&m(&[2, 1, 0]), &m(&[1, 2, 0])), Ordering::Greater);
        // x*z vs y^2: x*z has the larger last exponent, so it is smaller.
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_ignores_degree() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates() {
        // Variables {0}: eliminated. Any monomial containing x0 dominates all
        // monomials in the remaining variables.
        let ord = MonomialOrder::block(vec![true, false]);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        let orders = [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::block(vec![true, false, false]),
        ];
        let pool = monomials_up_to_degree(3, 3);
        for ord in &orders {
            for a in &pool {
                for b in &pool {
                    let c = ord.cmp(a, b);
                    assert_eq!(ord.cmp(b, a), c.reverse());
                    if a != b {
                        assert_ne!(c, Ordering::Equal, "{a} vs {b}");
                    }
                    // Multiplying by a fixed monomial preserves the comparison.
                    let t = m(&[1, 2, 0]);
                    assert_eq!(ord.cmp(&a.mul(&t), &b.mul(&t)), c);
                }
            }
        }
    }

    #[test]
    fn one_is_minimum() {
        let one = Monomial::one(3);
        for ord in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            for mm in monomials_up_to_degree(3, 3) {
                assert_ne!(ord.cmp(&one, &mm), Ordering::Greater);
            }
        }
    }

    #[test]
    fn divide_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(m(&[1, 1]).quotient(&m(&[2, 3])), m(&[1, 2]));
        assert!(m(&[1, 0]).is_coprime_with(&m(&[0, 2])));
    }

    #[test]
    fn degree_enumeration_counts() {
        // C(d + n - 1, n - 1) monomials of degree d in n variables.
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_up_to_degree(2, 3).len(), 10);
        let all = monomials_of_degree(3, 4);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn arity_cap_enforced() {
        assert!(Monomial::new(vec![0; 17]).is_err());
        assert!(Monomial::new(vec![0; 16]).is_ok());
    }
}
