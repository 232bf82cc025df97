//! Built-in named rings with verified metadata: polynomial rings, cubic
//! cones, and the Segre product of the cubic cone with a polynomial ring in
//! two variables, presented on six variables via elimination.
//!
//! Every entry carries the data the rest of the library needs (dimension,
//! systems of parameters, elements that must vanish), and a self-test
//! re-derives all of it from scratch so stale metadata cannot survive.

use std::sync::OnceLock;

use crate::closure::{Closure, FrobeniusClosure};
use crate::error::Error;
use crate::module::{FPModule, Submodule};
use crate::poly::Polynomial;
use crate::ring::PresentedRing;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: PresentedRing,
    pub dim: usize,
    /// Partial systems of parameters, each verified by the self-test.
    pub sops: Vec<Vec<Polynomial>>,
    /// Elements asserted to reduce to zero in the ring.
    pub vanishing: Vec<Polynomial>,
    /// F-purity: certified (true/false) or unknown.
    pub f_pure: Option<bool>,
    pub is_domain: bool,
}

/// F_p[x, y].
pub fn polynomial_plane(p: u64) -> Result<CorpusEntry, Error> {
    let ring = PresentedRing::polynomial_ring(p, &["x", "y"])?.named(&format!("poly2-{}", p));
    let sop = vec![ring.var(0), ring.var(1)];
    Ok(CorpusEntry {
        name: format!("poly2-{}", p),
        ring,
        dim: 2,
        sops: vec![sop],
        vanishing: Vec::new(),
        f_pure: Some(true),
        is_domain: true,
    })
}

/// F_p[x, y, z].
pub fn polynomial_space(p: u64) -> Result<CorpusEntry, Error> {
    let ring = PresentedRing::polynomial_ring(p, &["x", "y", "z"])?.named(&format!("poly3-{}", p));
    let sop = vec![ring.var(0), ring.var(1), ring.var(2)];
    Ok(CorpusEntry {
        name: format!("poly3-{}", p),
        ring,
        dim: 3,
        sops: vec![sop],
        vanishing: Vec::new(),
        f_pure: Some(true),
        is_domain: true,
    })
}

/// F_p[x, y, z]/(x^3 + y^3 + z^3). Rejects p = 3, where the cubic is a cube.
pub fn cubic_cone(p: u64) -> Result<CorpusEntry, Error> {
    if p == 3 {
        return Err(Error::Unsupported(
            "the cubic cone degenerates in characteristic 3".into(),
        ));
    }
    let name = format!("cubic-cone-{}", p);
    let pre = PresentedRing::polynomial_ring(p, &["x", "y", "z"])?;
    let f = pre
        .parse("x^3 + y^3 + z^3")
        .expect("fixed polynomial parses");
    let ring = PresentedRing::new(p, &["x", "y", "z"], vec![f.clone()])?.named(&name);
    let f_pure = fedder_is_fpure(&ring)?;
    let sop = vec![ring.var(0), ring.var(1)];
    Ok(CorpusEntry {
        name,
        ring,
        dim: 2,
        sops: vec![sop],
        vanishing: vec![f],
        f_pure: Some(f_pure),
        is_domain: true,
    })
}

fn build_segre(p: u64) -> Result<CorpusEntry, Error> {
    if p % 3 != 1 {
        return Err(Error::Unsupported(
            "the Segre product entry needs p congruent to 1 mod 3".into(),
        ));
    }
    let name = format!("segre-{}", p);
    let ambient = PresentedRing::new(p, &["x", "y", "z", "s", "t"], {
        let pre = PresentedRing::polynomial_ring(p, &["x", "y", "z", "s", "t"])?;
        vec![pre.parse("x^3 + y^3 + z^3").expect("fixed polynomial parses")]
    })?;
    // a = xs, b = ys, c = zs, d = xt, e = yt, g = zt.
    let images: Vec<Polynomial> = ["x*s", "y*s", "z*s", "x*t", "y*t", "z*t"]
        .iter()
        .map(|src| ambient.parse(src).expect("fixed polynomial parses"))
        .collect();
    let kernel = ambient.ring_kernel(&["a", "b", "c", "d", "e", "g"], &images)?;
    let ring = PresentedRing::new(p, &["a", "b", "c", "d", "e", "g"], kernel)?.named(&name);
    let parse = |s: &str| ring.parse(s).expect("fixed polynomial parses");
    let sop = vec![parse("b"), parse("d"), parse("a - e")];
    let vanishing = vec![
        // The product relation that breaks the regular sequence.
        parse("c*g*(a - e) - c^2*d + g^2*b"),
        // 2x2 minors of the generator matrix and the inherited cubic.
        parse("a*e - b*d"),
        parse("a*g - c*d"),
        parse("b*g - c*e"),
        parse("a^3 + b^3 + c^3"),
    ];
    Ok(CorpusEntry {
        name,
        ring,
        dim: 3,
        sops: vec![sop],
        vanishing,
        f_pure: Some(true),
        is_domain: true,
    })
}

/// The Segre product entry. The six-variable presentation comes from an
/// eleven-variable elimination, so the default p = 7 instance is cached.
pub fn segre_product(p: u64) -> Result<CorpusEntry, Error> {
    static SEGRE_7: OnceLock<CorpusEntry> = OnceLock::new();
    if p == 7 {
        return Ok(SEGRE_7
            .get_or_init(|| build_segre(7).expect("the default Segre entry builds"))
            .clone());
    }
    build_segre(p)
}

/// Fedder's criterion for a principal hypersurface R = k[X]/(f):
/// F-pure iff f^{p-1} stays outside (X_1^p, ..., X_n^p).
pub fn fedder_is_fpure(ring: &PresentedRing) -> Result<bool, Error> {
    let relators = ring.relators();
    if relators.len() != 1 {
        return Err(Error::Unsupported(
            "the hypersurface F-purity test needs a principal defining ideal".into(),
        ));
    }
    let p = ring.field().modulus();
    let f = &relators[0];
    if f.is_zero() {
        return Err(Error::Unsupported(
            "the defining polynomial must be nonzero".into(),
        ));
    }
    let gens: Vec<Polynomial> = (0..ring.nvars())
        .map(|i| {
            Polynomial::var(ring.field(), ring.nvars(), i).pow(u32::try_from(p).unwrap_or(u32::MAX))
        })
        .collect();
    let frobenius_powers = PresentedRing::with_field(ring.field(), ring.vars().to_vec(), gens)?;
    let power = f.pow(u32::try_from(p - 1).unwrap_or(u32::MAX));
    Ok(!frobenius_powers.nf(&power).is_zero())
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SelfTestLine {
    pub entry: String,
    pub check: String,
    pub ok: bool,
}

/// Re-derive an entry's metadata from scratch.
pub fn verify_entry(e: &CorpusEntry) -> Result<Vec<SelfTestLine>, Error> {
    let mut out = Vec::new();
    let mut push = |check: String, ok: bool| {
        out.push(SelfTestLine {
            entry: e.name.clone(),
            check,
            ok,
        });
    };
    push(
        format!("dim = {}", e.dim),
        e.ring.try_krull_dim() == Some(e.dim),
    );
    for sop in &e.sops {
        let display: Vec<String> = sop.iter().map(|x| e.ring.format(x)).collect();
        push(
            format!("parameters ({})", display.join(", ")),
            e.ring.is_partial_sop(sop)?,
        );
    }
    for v in &e.vanishing {
        push(
            format!("vanishes: {}", e.ring.format(v)),
            e.ring.is_zero_elem(v),
        );
    }
    match e.f_pure {
        Some(expected) if e.ring.relators().len() == 1 => {
            push(
                format!("hypersurface F-purity = {}", expected),
                fedder_is_fpure(&e.ring)? == expected,
            );
        }
        _ => {}
    }
    if e.f_pure == Some(true) {
        // Frobenius closure must fix the parameter-prefix ideals.
        let cl = FrobeniusClosure::new(2);
        let free = FPModule::free(&e.ring, 1);
        for sop in &e.sops {
            for t in 1..=sop.len() {
                let prefix = &sop[..t];
                let ideal = Submodule::ideal(&e.ring, prefix)?;
                let closed = cl.close(&ideal, &free)?;
                let same = free
                    .span_in(&closed.span(&e.ring, 1))?
                    .span_equals(&free.span_in(&ideal)?);
                let display: Vec<String> = prefix.iter().map(|x| e.ring.format(x)).collect();
                push(
                    format!("frobenius-closed ideal ({})", display.join(", ")),
                    same,
                );
            }
        }
    }
    Ok(out)
}

/// Verify the default corpus (p = 7, plus the non-F-pure cone at p = 2).
pub fn self_test() -> Result<Vec<SelfTestLine>, Error> {
    let mut out = Vec::new();
    for entry in [
        polynomial_plane(7)?,
        polynomial_space(7)?,
        cubic_cone(7)?,
        cubic_cone(2)?,
        segre_product(7)?,
    ] {
        out.extend(verify_entry(&entry)?);
    }
    Ok(out)
}

/// Look up an entry by CLI name, e.g. `cubic-cone-7` or `segre-7`.
pub fn by_name(name: &str) -> Result<CorpusEntry, Error> {
    let Some((kind, p_str)) = name.rsplit_once('-') else {
        return Err(Error::Unsupported(format!("unknown ring name {}", name)));
    };
    let p: u64 = p_str
        .parse()
        .map_err(|_| Error::Unsupported(format!("unknown ring name {}", name)))?;
    match kind {
        "poly2" => polynomial_plane(p),
        "poly3" => polynomial_space(p),
        "cubic-cone" => cubic_cone(p),
        "segre" => segre_product(p),
        _ => Err(Error::Unsupported(format!("unknown ring name {}", name))),
    }
}
