//! Resolution of `--ring`, `--closure` and polynomial-list arguments.

use std::collections::BTreeMap;
use std::path::Path;

use bigcm_core::closure::{
    BModClosure, Closure, ClosureSpec, FrobeniusClosure, IdentityClosure, TightWitnessClosure,
    TotalClosure,
};
use bigcm_core::module::FPModule;
use bigcm_core::{corpus, Error, Polynomial, PresentedRing};

use crate::session;

#[derive(Debug)]
pub struct Context {
    pub ring: PresentedRing,
    pub name: String,
    pub ideals: BTreeMap<String, Vec<Polynomial>>,
    pub modules: BTreeMap<String, FPModule>,
    /// Partial systems of parameters known for the ring, best first.
    pub sops: Vec<Vec<Polynomial>>,
}

/// A ring argument is either a built-in corpus name or a path to a session
/// file.
pub fn resolve_ring(arg: &str) -> Result<Context, Error> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Unsupported(format!("cannot read {arg}: {e}")))?;
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("session");
        let s = session::parse_session(&text, stem)?;
        let name = s.ring.name().unwrap_or(stem).to_string();
        return Ok(Context {
            ring: s.ring,
            name,
            ideals: s.ideals,
            modules: s.modules,
            sops: Vec::new(),
        });
    }
    match corpus::by_name(arg) {
        Ok(entry) => Ok(Context {
            name: entry.name,
            ring: entry.ring,
            ideals: BTreeMap::new(),
            modules: BTreeMap::new(),
            sops: entry.sops,
        }),
        Err(e) => Err(Error::Unsupported(format!(
            "--ring {arg}: not a corpus name ({e}) and no such file"
        ))),
    }
}

impl Context {
    /// Comma-separated polynomials, or the name of an ideal from the session
    /// file.
    pub fn ideal_arg(&self, arg: &str) -> Result<Vec<Polynomial>, Error> {
        if let Some(gens) = self.ideals.get(arg.trim()) {
            return Ok(gens.clone());
        }
        self.poly_list(arg)
    }

    pub fn poly_list(&self, arg: &str) -> Result<Vec<Polynomial>, Error> {
        let mut out = Vec::new();
        for piece in arg.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::parse(1, 1, "empty entry in polynomial list"));
            }
            out.push(self.ring.parse(piece)?);
        }
        Ok(out)
    }

    /// The sop to use when none was passed: the best known one for a corpus
    /// ring, otherwise a greedy prefix of the variables.
    pub fn default_sop(&self) -> Result<Vec<Polynomial>, Error> {
        if let Some(sop) = self.sops.first() {
            return Ok(sop.clone());
        }
        let sop = bigcm_core::axioms::greedy_parameters(&self.ring)?;
        if sop.is_empty() {
            return Err(Error::Unsupported(
                "no system of parameters available; pass --sop".into(),
            ));
        }
        Ok(sop)
    }

    /// Build the closure named by a selector string. A `--degree-bound`
    /// override tightens or widens the certified search range where the
    /// closure has one.
    pub fn resolve_closure(
        &self,
        spec: &str,
        degree_bound: Option<u32>,
    ) -> Result<Box<dyn Closure>, Error> {
        match ClosureSpec::parse(spec)? {
            ClosureSpec::Identity => Ok(Box::new(IdentityClosure)),
            ClosureSpec::Total => Ok(Box::new(TotalClosure)),
            ClosureSpec::Frobenius { e_max } => Ok(match degree_bound {
                Some(b) => Box::new(FrobeniusClosure::with_degree_bound(e_max, b)),
                None => Box::new(FrobeniusClosure::new(e_max)),
            }),
            ClosureSpec::BMod { b } => {
                let module = if b == "R" {
                    FPModule::free(&self.ring, 1)
                } else if let Some(m) = self.modules.get(&b) {
                    m.clone()
                } else {
                    return Err(Error::Unsupported(format!(
                        "bmod closure: no module named `{b}` (use B=R or a module from a session file)"
                    )));
                };
                Ok(Box::new(BModClosure::new(b, module)))
            }
            ClosureSpec::TightWitness { c, e_max } => {
                let c = self.ring.parse(&c)?;
                Ok(Box::new(TightWitnessClosure::new(c, e_max).labeled(spec)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_names_resolve() {
        let ctx = resolve_ring("cubic-cone-7").unwrap();
        assert_eq!(ctx.name, "cubic-cone-7");
        assert_eq!(ctx.ring.modulus(), 7);
        assert!(!ctx.sops.is_empty());
    }

    #[test]
    fn unknown_ring_is_an_error() {
        let err = resolve_ring("no-such-ring-99").unwrap_err();
        assert!(err.to_string().contains("no such file"), "{err}");
    }

    #[test]
    fn closure_selectors_build() {
        let ctx = resolve_ring("poly2-7").unwrap();
        assert_eq!(ctx.resolve_closure("identity", None).unwrap().name(), "identity");
        let f = ctx.resolve_closure("frobenius:e_max=2", None).unwrap();
        assert!(f.name().contains("e_max=2"), "{}", f.name());
        let t = ctx
            .resolve_closure("tight-witness:c=x^2,e_max=3", None)
            .unwrap();
        assert_eq!(t.name(), "tight-witness:c=x^2,e_max=3");
        assert!(ctx.resolve_closure("bmod:B=Q", None).is_err());
    }

    #[test]
    fn poly_lists_parse_against_the_ring() {
        let ctx = resolve_ring("segre-7").unwrap();
        let sop = ctx.poly_list("b, d, a - e").unwrap();
        assert_eq!(sop.len(), 3);
        assert!(ctx.poly_list("b,,d").is_err());
    }
}
