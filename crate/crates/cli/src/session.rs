//! Line-oriented input format for rings, ideals and modules.
//!
//! ```text
//! # comment
//! p: 7
//! vars: x y z
//! relations: x^3 + y^3 + z^3
//! ideal I: x, y
//! module M: rank 2
//! row: x, -y
//! ```
//!
//! `p:` and `vars:` must come before anything that needs them. A `module`
//! line opens a cokernel presentation; each following `row:` adds one
//! relation vector of length `rank`.

use std::collections::BTreeMap;

use bigcm_core::module::FPModule;
use bigcm_core::{Error, Polynomial, PresentedRing, VectorPoly};

#[derive(Debug)]
pub struct Session {
    pub ring: PresentedRing,
    pub ideals: BTreeMap<String, Vec<Polynomial>>,
    pub modules: BTreeMap<String, FPModule>,
}

struct PendingModule {
    name: String,
    rank: usize,
    rows: Vec<VectorPoly>,
    line: usize,
}

/// Parse a polynomial fragment, shifting any error position to where the
/// fragment sits in the session text.
fn parse_at(
    ring: &PresentedRing,
    frag: &str,
    line: usize,
    col_base: usize,
) -> Result<Polynomial, Error> {
    ring.parse(frag).map_err(|e| match e {
        Error::Parse { col, msg, .. } => Error::parse(line, col_base + col - 1, msg),
        other => other,
    })
}

/// Split a comma-separated list, keeping the 1-based column where each
/// piece starts.
fn split_list(tail: &str, tail_col: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut start = 0usize;
    let bytes = tail.as_bytes();
    for i in 0..=bytes.len() {
        if i == bytes.len() || bytes[i] == b',' {
            let raw = &tail[start..i];
            let lead = raw.len() - raw.trim_start().len();
            out.push((raw.trim().to_string(), tail_col + start + lead));
            start = i + 1;
        }
    }
    out
}

pub fn parse_session(text: &str, default_name: &str) -> Result<Session, Error> {
    let mut p: Option<(u64, usize, usize)> = None;
    let mut vars: Vec<String> = Vec::new();
    let mut name: Option<String> = None;
    let mut ambient: Option<PresentedRing> = None;
    let mut relators: Vec<Polynomial> = Vec::new();
    let mut ideals: BTreeMap<String, Vec<Polynomial>> = BTreeMap::new();
    let mut done_modules: Vec<PendingModule> = Vec::new();
    let mut open: Option<PendingModule> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end();
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let (head, tail) = trimmed
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, indent + 1, "expected `directive: value`"))?;
        let head = head.trim();
        let tail_col = indent + head.len() + 2 + (tail.len() - tail.trim_start().len());
        let tail = tail.trim();

        let need_ring = |ambient: &Option<PresentedRing>| -> Result<PresentedRing, Error> {
            ambient
                .clone()
                .ok_or_else(|| Error::parse(lineno, indent + 1, "`p:` and `vars:` must come first"))
        };

        if head == "p" {
            if p.is_some() {
                return Err(Error::parse(lineno, indent + 1, "`p:` given twice"));
            }
            let value: u64 = tail
                .parse()
                .map_err(|_| Error::parse(lineno, tail_col, "modulus must be an integer"))?;
            p = Some((value, lineno, tail_col));
        } else if head == "vars" {
            if ambient.is_some() {
                return Err(Error::parse(lineno, indent + 1, "`vars:` given twice"));
            }
            let (modulus, pline, pcol) =
                p.ok_or_else(|| Error::parse(lineno, indent + 1, "`p:` must come before `vars:`"))?;
            vars = tail.split_whitespace().map(|s| s.to_string()).collect();
            if vars.is_empty() {
                return Err(Error::parse(lineno, tail_col, "no variables given"));
            }
            let ring = PresentedRing::new(
                modulus,
                &vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                vec![],
            )
            .map_err(|e| match e {
                Error::NotPrime(n) => Error::parse(pline, pcol, format!("modulus not prime: {n}")),
                other => match other {
                    Error::Parse { col, msg, .. } => Error::parse(lineno, tail_col + col - 1, msg),
                    e => Error::parse(lineno, tail_col, e.to_string()),
                },
            })?;
            ambient = Some(ring);
        } else if head == "name" {
            name = Some(tail.to_string());
        } else if head == "relations" {
            let ring = need_ring(&ambient)?;
            for (frag, col) in split_list(tail, tail_col) {
                if frag.is_empty() {
                    return Err(Error::parse(lineno, col, "empty relation"));
                }
                relators.push(parse_at(&ring, &frag, lineno, col)?);
            }
        } else if let Some(ideal_name) = head.strip_prefix("ideal ") {
            let ring = need_ring(&ambient)?;
            let ideal_name = ideal_name.trim();
            if ideal_name.is_empty() {
                return Err(Error::parse(lineno, indent + 1, "ideal needs a name"));
            }
            if ideals.contains_key(ideal_name) {
                return Err(Error::parse(
                    lineno,
                    indent + 1,
                    format!("duplicate ideal name `{ideal_name}`"),
                ));
            }
            let mut gens = Vec::new();
            for (frag, col) in split_list(tail, tail_col) {
                if frag.is_empty() {
                    return Err(Error::parse(lineno, col, "empty generator"));
                }
                gens.push(parse_at(&ring, &frag, lineno, col)?);
            }
            ideals.insert(ideal_name.to_string(), gens);
        } else if let Some(module_name) = head.strip_prefix("module ") {
            need_ring(&ambient)?;
            let module_name = module_name.trim();
            if module_name.is_empty() {
                return Err(Error::parse(lineno, indent + 1, "module needs a name"));
            }
            let rank: usize = tail
                .strip_prefix("rank")
                .map(|s| s.trim())
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::parse(lineno, tail_col, "expected `rank N`"))?;
            if rank == 0 {
                return Err(Error::parse(lineno, tail_col, "rank must be positive"));
            }
            if let Some(m) = open.take() {
                done_modules.push(m);
            }
            if done_modules.iter().any(|m| m.name == module_name) {
                return Err(Error::parse(
                    lineno,
                    indent + 1,
                    format!("duplicate module name `{module_name}`"),
                ));
            }
            open = Some(PendingModule {
                name: module_name.to_string(),
                rank,
                rows: Vec::new(),
                line: lineno,
            });
        } else if head == "row" {
            let ring = need_ring(&ambient)?;
            let m = open
                .as_mut()
                .ok_or_else(|| Error::parse(lineno, indent + 1, "`row:` outside a module"))?;
            let mut comps = Vec::new();
            for (frag, col) in split_list(tail, tail_col) {
                if frag.is_empty() {
                    return Err(Error::parse(lineno, col, "empty entry"));
                }
                comps.push(parse_at(&ring, &frag, lineno, col)?);
            }
            if comps.len() != m.rank {
                return Err(Error::parse(
                    lineno,
                    tail_col,
                    format!("row has {} entries, module rank is {}", comps.len(), m.rank),
                ));
            }
            m.rows.push(VectorPoly::new(comps));
        } else {
            return Err(Error::parse(
                lineno,
                indent + 1,
                format!("unknown directive `{head}`"),
            ));
        }
    }

    if let Some(m) = open.take() {
        done_modules.push(m);
    }
    let ambient = ambient.ok_or_else(|| Error::parse(1, 1, "missing `p:` and `vars:` lines"))?;
    let ring_name = name.unwrap_or_else(|| default_name.to_string());
    let ring = PresentedRing::with_field(ambient.field(), vars, relators)?.named(&ring_name);

    let mut modules = BTreeMap::new();
    for m in done_modules {
        let built = FPModule::new(&ring, m.rank, m.rows).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::parse(m.line, 1, other.to_string()),
        })?;
        modules.insert(m.name, built);
    }
    Ok(Session {
        ring,
        ideals,
        modules,
    })
}
