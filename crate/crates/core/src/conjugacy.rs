//! Sliding block codes, conjugacy certificates and the maps they induce on
//! the snapshot algebras, the correspondences and the generators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::algebra::{AlgebraElement, Atom, BasicSet, CylinderAlgebra, Level};
use crate::bratteli::{BratteliDiagram, Tower};
use crate::correspondence::{CorrElement, Correspondence};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::shift::Subshift;
use crate::star::{StarCalculus, StarElement};
use crate::verify::{Failure, Report, Section};
use crate::word::{Symbol, Word};

/// `ψ(x)_i = Φ(x_i … x_{i+m-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCode {
    window: usize,
    table: BTreeMap<Word, Symbol>,
}

impl BlockCode {
    /// Checks that the table is total on `L^m(X)` and lands in `Y`'s alphabet.
    pub fn new(
        source: &Subshift,
        target: &Subshift,
        window: usize,
        table: BTreeMap<Word, Symbol>,
    ) -> Result<Self> {
        if window == 0 {
            return Err(Error::InvalidCode("window must be at least 1".into()));
        }
        for (w, s) in &table {
            if w.len() != window {
                return Err(Error::InvalidCode(alloc::format!(
                    "entry {} has length {}, expected {window}",
                    source.alphabet().format_word(w),
                    w.len()
                )));
            }
            source.alphabet().check_word(w)?;
            target.alphabet().check_word(&Word::single(*s))?;
        }
        for w in source.enumerate_language(window) {
            if !table.contains_key(&w) {
                return Err(Error::InvalidCode(alloc::format!(
                    "no entry for {}",
                    source.alphabet().format_word(&w)
                )));
            }
        }
        Ok(BlockCode { window, table })
    }

    /// The identity code `x ↦ x` on one shift.
    pub fn identity(x: &Subshift) -> Self {
        let table = x
            .alphabet()
            .symbols()
            .map(|a| (Word::single(a), a))
            .collect();
        BlockCode { window: 1, table }
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn table(&self) -> &BTreeMap<Word, Symbol> {
        &self.table
    }

    /// Slides the window over `w`; `None` if some window has no entry.
    pub fn image(&self, w: &Word) -> Option<Word> {
        if w.len() < self.window {
            return Some(Word::empty());
        }
        (0..=w.len() - self.window)
            .map(|i| self.table.get(&w.slice(i, i + self.window)).copied())
            .collect()
    }
}

/// Images of `L^{k+m-1}(X)` lie in `L^k(Y)` for `k <= depth`.
pub fn verify_block_code(x: &Subshift, y: &Subshift, code: &BlockCode, depth: usize) -> Report {
    let mut sec = Section::new("images of legal words are legal");
    for k in 1..=depth {
        for w in x.enumerate_language(k + code.window - 1) {
            sec.checked += 1;
            let img = code.image(&w);
            let ok = img
                .as_ref()
                .is_some_and(|v| y.is_in_language(v).unwrap_or(false));
            if !ok {
                sec.failures.push(Failure {
                    identity: alloc::format!("image of {}", x.alphabet().format_word(&w)),
                    left: img.map_or_else(|| "undefined".into(), |v| y.alphabet().format_word(&v)),
                    right: "not in the target language".into(),
                });
            }
        }
    }
    let mut r = Report::new("block code", depth);
    r.sections.push(sec);
    r
}

/// A verified pair of mutually inverse block codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub forward: BlockCode,
    pub inverse: BlockCode,
    pub depth: usize,
}

impl ConjugacyCertificate {
    /// Wraps two codes without checking anything. Only meant for exercising
    /// the downstream verifiers on deliberately broken input.
    pub fn assume(forward: BlockCode, inverse: BlockCode, depth: usize) -> Self {
        ConjugacyCertificate {
            forward,
            inverse,
            depth,
        }
    }
}

fn composition_section(
    name: &str,
    x: &Subshift,
    y: &Subshift,
    f: &BlockCode,
    g: &BlockCode,
) -> Section {
    let mut sec = Section::new(name);
    let words = x.enumerate_language(f.window + g.window - 1);
    for w in &words {
        sec.checked += 1;
        let back = f.image(w).and_then(|v| g.image(&v));
        if back.as_ref().and_then(Word::first) != w.first() {
            // Look for a second word with the same image but another first symbol.
            let img = f.image(w);
            let twin = words
                .iter()
                .find(|w2| w2.first() != w.first() && f.image(w2) == img);
            let fmt_x = |v: &Word| x.alphabet().format_word(v);
            let (left, right) = match (twin, &img) {
                (Some(w2), Some(v)) => (
                    alloc::format!(
                        "{} and {} have the same image {}",
                        fmt_x(w),
                        fmt_x(w2),
                        y.alphabet().format_word(v)
                    ),
                    "forward code is not injective".into(),
                ),
                _ => (
                    alloc::format!(
                        "{} returns to {}",
                        fmt_x(w),
                        back.map_or_else(|| String::from("undefined"), |v| fmt_x(&v))
                    ),
                    alloc::format!(
                        "first symbol {}",
                        w.first().map_or("", |a| x.alphabet().token(a))
                    ),
                ),
            };
            sec.failures.push(Failure {
                identity: alloc::format!("round trip of {}", fmt_x(w)),
                left,
                right,
            });
        }
    }
    sec
}

/// Full report: both codes map legal words to legal words and both
/// compositions are the identity.
pub fn check_conjugacy(
    x: &Subshift,
    y: &Subshift,
    f: &BlockCode,
    g: &BlockCode,
    depth: usize,
) -> Report {
    let mut r = Report::new("conjugacy", depth);
    let mut fr = verify_block_code(x, y, f, depth);
    fr.sections[0].name = "forward images are legal".into();
    let mut gr = verify_block_code(y, x, g, depth);
    gr.sections[0].name = "inverse images are legal".into();
    r.merge(fr);
    r.merge(gr);
    r.sections.push(composition_section(
        "inverse after forward is the identity",
        x,
        y,
        f,
        g,
    ));
    r.sections.push(composition_section(
        "forward after inverse is the identity",
        y,
        x,
        g,
        f,
    ));
    r
}

/// Certificate if [`check_conjugacy`] passes, else the first witness.
pub fn verify_conjugacy(
    x: &Subshift,
    y: &Subshift,
    f: &BlockCode,
    g: &BlockCode,
    depth: usize,
) -> Result<ConjugacyCertificate> {
    let r = check_conjugacy(x, y, f, g, depth);
    if let Some((sec, fail)) = r
        .sections
        .iter()
        .find_map(|s| s.failures.first().map(|f| (s, f)))
    {
        return Err(Error::InvalidCode(alloc::format!(
            "{}: {}: {} ({})",
            sec.name,
            fail.identity,
            fail.left,
            fail.right
        )));
    }
    Ok(ConjugacyCertificate {
        forward: f.clone(),
        inverse: g.clone(),
        depth,
    })
}

type Lookup = RefCell<BTreeMap<usize, BTreeMap<BTreeSet<Word>, usize>>>;

/// `Ψ(f) = f ∘ ψ` along `code: dom → cod`, for `f` over `cod`.
fn pullback(
    dom: &CylinderAlgebra,
    cod: &CylinderAlgebra,
    code: &BlockCode,
    lookup: &Lookup,
    f: &AlgebraElement,
) -> Result<AlgebraElement> {
    let Level { k, l } = f.level();
    let m1 = code.window - 1;
    let target = Level {
        k: k + m1,
        l: l + m1,
    };
    if f.is_zero() {
        return Ok(AlgebraElement::zero(Level { k: 0, l: 0 }));
    }
    if !lookup.borrow().contains_key(&l) {
        let table = (0..cod.class_count(l))
            .map(|c| (cod.class_left_extensions(l, c), c))
            .collect();
        lookup.borrow_mut().insert(l, table);
    }
    let lookup = lookup.borrow();
    let classes = &lookup[&l];
    let mut coeffs = Vec::new();
    for atom in dom.atoms(target)?.iter() {
        let nu = code
            .image(&atom.nu)
            .ok_or_else(|| Error::InvalidCode("table not total on the language".into()))?;
        let u = atom.nu.drop_prefix(k);
        let t = dom
            .shift()
            .prepend_word(&u, dom.representative(target.l, atom.cls))
            .expect("atoms are nonempty");
        let p: BTreeSet<Word> = dom
            .shift()
            .left_extensions(t, l)
            .into_iter()
            .map(|beta| {
                code.image(&beta.concat(&u))
                    .expect("legal words have images")
            })
            .collect();
        let cls = *classes.get(&p).ok_or_else(|| {
            Error::InvalidCode(alloc::format!(
                "left extensions of an image tail match no class at level {l}; the code is not a conjugacy"
            ))
        })?;
        coeffs.push((atom.clone(), f.coeff(&Atom { nu, cls })));
    }
    dom.from_coeffs(target, coeffs.into_iter().filter(|(_, v)| !v.is_zero()))
}

/// `Ψ`, `Ψ^{-1}`, `T`, `S` and the generator images for a certificate
/// `ψ: X → Y`.
pub struct ConjugacyMaps<'a> {
    x: &'a CylinderAlgebra,
    y: &'a CylinderAlgebra,
    cert: &'a ConjugacyCertificate,
    y_classes: Lookup,
    x_classes: Lookup,
}

impl<'a> ConjugacyMaps<'a> {
    pub fn new(
        x: &'a CylinderAlgebra,
        y: &'a CylinderAlgebra,
        cert: &'a ConjugacyCertificate,
    ) -> Self {
        ConjugacyMaps {
            x,
            y,
            cert,
            y_classes: RefCell::new(BTreeMap::new()),
            x_classes: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn source(&self) -> &'a CylinderAlgebra {
        self.x
    }

    pub fn target(&self) -> &'a CylinderAlgebra {
        self.y
    }

    /// `Ψ(f)(x) = f(ψ(x))`, from `D̃_Y` to `D̃_X`.
    pub fn psi(&self, f: &AlgebraElement) -> Result<AlgebraElement> {
        self.x.coarsen(&pullback(
            self.x,
            self.y,
            &self.cert.forward,
            &self.y_classes,
            f,
        )?)
    }

    /// `Ψ^{-1}(g)(y) = g(ψ^{-1}(y))`, from `D̃_X` to `D̃_Y`.
    pub fn psi_inverse(&self, g: &AlgebraElement) -> Result<AlgebraElement> {
        self.y.coarsen(&pullback(
            self.y,
            self.x,
            &self.cert.inverse,
            &self.x_classes,
            g,
        )?)
    }

    /// `1_{ψ^{-1}(C_Y(μ))}` as a sum of `X`-cylinders.
    pub fn cylinder_preimage(&self, mu: &Word) -> Result<AlgebraElement> {
        let m = self.cert.forward.window;
        let mut acc = AlgebraElement::zero(Level { k: 0, l: 0 });
        for beta in self.x.shift().enumerate_language(mu.len() + m - 1) {
            if mu.is_empty() || self.cert.forward.image(&beta).as_ref() == Some(mu) {
                if mu.is_empty() {
                    return Ok(self.x.unit());
                }
                acc = self
                    .x
                    .add(&acc, &self.x.basic(&BasicSet::cylinder(beta))?)?;
            }
        }
        Ok(acc)
    }

    /// `Ψ(1_{C_Y(μ,ν)})` by the set calculus:
    /// `ψ^{-1}(C_Y(ν)) ∩ σ^{-|ν|}(σ^{|μ|}(ψ^{-1}(C_Y(μ))))`.
    pub fn psi_basic_by_sets(&self, mu: &Word, nu: &Word) -> Result<AlgebraElement> {
        let mut e = self.cylinder_preimage(mu)?;
        for _ in 0..mu.len() {
            e = self.x.set_sigma_forward(&e)?;
        }
        for _ in 0..nu.len() {
            e = self.x.set_sigma_backward(&e)?;
        }
        self.x
            .coarsen(&self.x.mul(&self.cylinder_preimage(nu)?, &e)?)
    }

    /// `T(f)_b = Σ_a λ̃_b(Ψ(1_{C_Y(a)})) Ψ(f_a)`, from `H_Y` to `H_X`.
    pub fn t(&self, xi: &CorrElement) -> Result<CorrElement> {
        let hx = Correspondence::new(self.x);
        let mut comps = Vec::new();
        for b in self.x.shift().alphabet().symbols() {
            let mut acc = AlgebraElement::zero(Level { k: 0, l: 0 });
            for a in self.y.shift().alphabet().symbols() {
                let fa = xi.component(a);
                if fa.is_zero() {
                    continue;
                }
                let ca = self.psi(&self.y.basic(&BasicSet::cylinder(Word::single(a)))?)?;
                let term = self.x.mul(&self.x.lambda(b, &ca)?, &self.psi(fa)?)?;
                acc = self.x.add(&acc, &term)?;
            }
            comps.push(self.x.coarsen(&acc)?);
        }
        hx.element(comps)
    }

    /// `S(g)_a = Σ_b λ̃_a(Ψ^{-1}(1_{C_X(b)})) Ψ^{-1}(g_b)`, from `H_X` to `H_Y`.
    pub fn s(&self, zeta: &CorrElement) -> Result<CorrElement> {
        let hy = Correspondence::new(self.y);
        let mut comps = Vec::new();
        for a in self.y.shift().alphabet().symbols() {
            let mut acc = AlgebraElement::zero(Level { k: 0, l: 0 });
            for b in self.x.shift().alphabet().symbols() {
                let gb = zeta.component(b);
                if gb.is_zero() {
                    continue;
                }
                let cb = self.psi_inverse(&self.x.basic(&BasicSet::cylinder(Word::single(b)))?)?;
                let term = self
                    .y
                    .mul(&self.y.lambda(a, &cb)?, &self.psi_inverse(gb)?)?;
                acc = self.y.add(&acc, &term)?;
            }
            comps.push(self.y.coarsen(&acc)?);
        }
        hy.element(comps)
    }

    /// `ρ(S_a^Y) = Σ_b S_b T(ξ_a)_b` as elements of the `X` calculus.
    pub fn generator_images(&self) -> Result<Vec<StarElement>> {
        let calc = StarCalculus::new(self.x);
        let hy = Correspondence::new(self.y);
        let mut out = Vec::new();
        for a in self.y.shift().alphabet().symbols() {
            let t = self.t(&hy.xi(a)?)?;
            let mut acc = StarElement::zero();
            for b in self.x.shift().alphabet().symbols() {
                let m = calc.monomial(&Word::single(b), t.component(b), &Word::empty())?;
                acc = calc.add(&acc, &m)?;
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// `{ξ_a 1_{C(μ,ν)} : |μ| + |ν| <= d}` over legal words.
fn generator_set(alg: &CylinderAlgebra, d: usize) -> Result<Vec<(String, usize, CorrElement)>> {
    let h = Correspondence::new(alg);
    let shift = alg.shift();
    let words = shift.language_up_to(d);
    let mut out = Vec::new();
    for a in shift.alphabet().symbols() {
        let xi = h.xi(a)?;
        for mu in &words {
            for nu in &words {
                if mu.len() + nu.len() > d {
                    continue;
                }
                let f = alg.basic(&BasicSet::new(mu.clone(), nu.clone()))?;
                let name = alloc::format!(
                    "xi_{} C({},{})",
                    shift.alphabet().token(a),
                    shift.alphabet().format_word(mu),
                    shift.alphabet().format_word(nu)
                );
                out.push((name, mu.len() + nu.len(), h.right_action(&xi, &f)?));
            }
        }
    }
    Ok(out)
}

fn basic_set(alg: &CylinderAlgebra, d: usize) -> Result<Vec<(String, usize, AlgebraElement)>> {
    let shift = alg.shift();
    let words = shift.language_up_to(d);
    let mut out = Vec::new();
    for mu in &words {
        for nu in &words {
            if mu.len() + nu.len() <= d {
                let name = alloc::format!(
                    "C({},{})",
                    shift.alphabet().format_word(mu),
                    shift.alphabet().format_word(nu)
                );
                out.push((
                    name,
                    mu.len() + nu.len(),
                    alg.basic(&BasicSet::new(mu.clone(), nu.clone()))?,
                ));
            }
        }
    }
    Ok(out)
}

fn show(alg: &CylinderAlgebra, f: &AlgebraElement) -> String {
    let terms: Vec<String> = f
        .terms()
        .map(|(a, c)| {
            alloc::format!(
                "{c}@{}·E{}.{}",
                alg.shift().alphabet().format_word(&a.nu),
                f.level().l,
                a.cls
            )
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        alloc::format!("[{}: {}]", f.level(), terms.join(" "))
    }
}

fn show_corr(alg: &CylinderAlgebra, x: &CorrElement) -> String {
    let parts: Vec<String> = alg
        .shift()
        .alphabet()
        .symbols()
        .map(|a| {
            alloc::format!(
                "{}:{}",
                alg.shift().alphabet().token(a),
                show(alg, x.component(a))
            )
        })
        .collect();
    parts.join(" ")
}

fn check_alg(
    sec: &mut Section,
    alg: &CylinderAlgebra,
    name: impl FnOnce() -> String,
    l: &AlgebraElement,
    r: &AlgebraElement,
) -> Result<()> {
    sec.checked += 1;
    if !alg.equal(l, r)? {
        sec.failures.push(Failure {
            identity: name(),
            left: show(alg, l),
            right: show(alg, r),
        });
    }
    Ok(())
}

fn check_corr(
    sec: &mut Section,
    alg: &CylinderAlgebra,
    name: impl FnOnce() -> String,
    l: &CorrElement,
    r: &CorrElement,
) -> Result<()> {
    sec.checked += 1;
    if !Correspondence::new(alg).equal(l, r)? {
        sec.failures.push(Failure {
            identity: name(),
            left: show_corr(alg, l),
            right: show_corr(alg, r),
        });
    }
    Ok(())
}

/// Turns a hard error inside a check into a recorded failure.
fn record<T>(sec: &mut Section, name: impl FnOnce() -> String, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            sec.checked += 1;
            sec.failures.push(Failure {
                identity: name(),
                left: alloc::format!("{e}"),
                right: "error".into(),
            });
            None
        }
    }
}

/// `Ψ` is a unital *-isomorphism on the atoms up to `(3,3)` (or `depth`),
/// agrees with the set calculus on generators, satisfies the `λ̃` identity,
/// `TS = ST = id`, and `(T, Ψ)` intertwines inner products and left actions.
pub fn verify_corr_isomorphism(maps: &ConjugacyMaps<'_>, depth: usize) -> Result<Report> {
    let (x, y) = (maps.x, maps.y);
    let hx = Correspondence::new(x);
    let hy = Correspondence::new(y);
    let mut report = Report::new("correspondence isomorphism", depth);

    // Atoms of D̃_Y at every level up to (3,3).
    let mut atoms_sec =
        Section::new("Psi on atoms: nonzero, orthogonal, summing to 1, inverted by Psi^-1");
    let top = depth.min(3);
    for l in 0..=top {
        for k in 0..=l {
            let level = Level { k, l };
            let mut images = Vec::new();
            for atom in y.atoms(level)?.iter() {
                let e = y.atom_indicator(level, atom.clone())?;
                let name = || {
                    alloc::format!(
                        "atom {}·E{l}.{} at {level}",
                        y.shift().alphabet().format_word(&atom.nu),
                        atom.cls
                    )
                };
                let Some(img) = record(&mut atoms_sec, name, maps.psi(&e)) else {
                    continue;
                };
                atoms_sec.checked += 1;
                if img.is_zero() || !img.is_indicator() {
                    atoms_sec.failures.push(Failure {
                        identity: name(),
                        left: show(x, &img),
                        right: "nonzero indicator".into(),
                    });
                }
                if let Some(back) = record(&mut atoms_sec, name, maps.psi_inverse(&img)) {
                    check_alg(
                        &mut atoms_sec,
                        y,
                        || alloc::format!("Psi^-1 Psi of {}", name()),
                        &back,
                        &e,
                    )?;
                }
                images.push(img);
            }
            let mut sum = AlgebraElement::zero(Level { k: 0, l: 0 });
            for (i, p) in images.iter().enumerate() {
                sum = x.add(&sum, p)?;
                for q in &images[i + 1..] {
                    check_alg(
                        &mut atoms_sec,
                        x,
                        || alloc::format!("orthogonality at {level}"),
                        &x.mul(p, q)?,
                        &AlgebraElement::zero(level),
                    )?;
                }
            }
            check_alg(
                &mut atoms_sec,
                x,
                || alloc::format!("atoms at {level} sum to 1"),
                &sum,
                &x.unit(),
            )?;
        }
    }
    report.sections.push(atoms_sec);

    // Generators: the window route against the set calculus, and products.
    let mut gen_sec = Section::new("Psi on generators agrees with the set calculus");
    let mut mul_sec = Section::new("Psi is multiplicative and *-preserving on generators");
    let gens = basic_set(y, depth)?;
    let words = y.shift().language_up_to(depth);
    for mu in &words {
        for nu in &words {
            if mu.len() + nu.len() > depth {
                continue;
            }
            let name = || {
                alloc::format!(
                    "C_Y({},{})",
                    y.shift().alphabet().format_word(mu),
                    y.shift().alphabet().format_word(nu)
                )
            };
            let f = y.basic(&BasicSet::new(mu.clone(), nu.clone()))?;
            let (Some(a), Some(b)) = (
                record(&mut gen_sec, name, maps.psi(&f)),
                record(&mut gen_sec, name, maps.psi_basic_by_sets(mu, nu)),
            ) else {
                continue;
            };
            check_alg(&mut gen_sec, x, name, &a, &b)?;
        }
    }
    let twist = Scalar::new(
        num_rational::Rational64::new(1, 2),
        num_rational::Rational64::new(1, 3),
    );
    let small: Vec<&(String, usize, AlgebraElement)> =
        gens.iter().filter(|(_, w, _)| *w < depth.max(1)).collect();
    for (n1, _, f) in &small {
        for (n2, _, g) in &small {
            let name = || alloc::format!("Psi({n1} {n2})");
            let (Some(pf), Some(pg), Some(pfg)) = (
                record(&mut mul_sec, name, maps.psi(f)),
                record(&mut mul_sec, name, maps.psi(g)),
                record(&mut mul_sec, name, maps.psi(&y.mul(f, g)?)),
            ) else {
                continue;
            };
            check_alg(&mut mul_sec, x, name, &pfg, &x.mul(&pf, &pg)?)?;
        }
        let h = f.scale(twist);
        if let Some(ph) = record(
            &mut mul_sec,
            || alloc::format!("Psi(c {n1})*"),
            maps.psi(&h.adjoint()),
        ) {
            check_alg(
                &mut mul_sec,
                x,
                || alloc::format!("Psi((c {n1})*) = Psi(c {n1})*"),
                &ph,
                &maps.psi(&h)?.adjoint(),
            )?;
        }
    }
    let unit_img = maps.psi(&y.unit())?;
    check_alg(
        &mut mul_sec,
        x,
        || "Psi(1) = 1".into(),
        &unit_img,
        &x.unit(),
    )?;
    report.sections.extend([gen_sec, mul_sec]);

    // Ψ^{-1}(λ̃_b(Ψ(1_{C_Y(a)}))) = λ̃_a(Ψ^{-1}(1_{C_X(b)})).
    let mut lam = Section::new("lambda identity");
    for a in y.shift().alphabet().symbols() {
        for b in x.shift().alphabet().symbols() {
            let name = || {
                alloc::format!(
                    "a={} b={}",
                    y.shift().alphabet().token(a),
                    x.shift().alphabet().token(b)
                )
            };
            let ca = y.basic(&BasicSet::cylinder(Word::single(a)))?;
            let cb = x.basic(&BasicSet::cylinder(Word::single(b)))?;
            let lhs = maps
                .psi(&ca)
                .and_then(|p| x.lambda(b, &p))
                .and_then(|p| maps.psi_inverse(&p));
            let rhs = maps.psi_inverse(&cb).and_then(|p| y.lambda(a, &p));
            let (Some(lhs), Some(rhs)) = (record(&mut lam, name, lhs), record(&mut lam, name, rhs))
            else {
                continue;
            };
            check_alg(&mut lam, y, name, &lhs, &rhs)?;
        }
    }
    report.sections.push(lam);

    // TS and ST on bases and generators.
    let mut inv = Section::new("TS = id and ST = id");
    let gx = generator_set(x, depth)?;
    let gy = generator_set(y, depth)?;
    let mut t_cache = Vec::new();
    for (name, _, xi) in &gy {
        let Some(t) = record(&mut inv, || alloc::format!("T({name})"), maps.t(xi)) else {
            t_cache.push(None);
            continue;
        };
        if let Some(st) = record(&mut inv, || alloc::format!("S T({name})"), maps.s(&t)) {
            check_corr(&mut inv, y, || alloc::format!("S T({name})"), &st, xi)?;
        }
        t_cache.push(Some(t));
    }
    let mut s_cache = Vec::new();
    for (name, _, zeta) in &gx {
        let Some(s) = record(&mut inv, || alloc::format!("S({name})"), maps.s(zeta)) else {
            s_cache.push(None);
            continue;
        };
        if let Some(ts) = record(&mut inv, || alloc::format!("T S({name})"), maps.t(&s)) {
            check_corr(&mut inv, x, || alloc::format!("T S({name})"), &ts, zeta)?;
        }
        s_cache.push(Some(s));
    }
    report.sections.push(inv);

    // Pairwise checks at one depth less.
    let d = depth.saturating_sub(1);
    let mut ip = Section::new("<T xi, zeta> = Psi(<xi, S zeta>)");
    for ((n1, w1, xi), t) in gy.iter().zip(&t_cache) {
        if *w1 > d {
            continue;
        }
        let Some(t) = t else { continue };
        for ((n2, w2, zeta), s) in gx.iter().zip(&s_cache) {
            if *w2 > d {
                continue;
            }
            let Some(s) = s else { continue };
            let lhs = hx.inner_product(t, zeta)?;
            let name = || alloc::format!("xi={n1} zeta={n2}");
            if let Some(rhs) = record(&mut ip, name, maps.psi(&hy.inner_product(xi, s)?)) {
                check_alg(&mut ip, x, name, &lhs, &rhs)?;
            }
        }
    }
    let mut left = Section::new("T(phi(f) xi) = phi(Psi f)(T xi)");
    for (nf, _, f) in gens.iter().filter(|(_, w, _)| *w <= d) {
        let Some(pf) = record(&mut left, || alloc::format!("Psi({nf})"), maps.psi(f)) else {
            continue;
        };
        for ((n1, w1, xi), t) in gy.iter().zip(&t_cache) {
            if *w1 > d {
                continue;
            }
            let Some(t) = t else { continue };
            let name = || alloc::format!("f={nf} xi={n1}");
            let Some(lhs) = record(&mut left, name, hy.phi(f, xi).and_then(|v| maps.t(&v))) else {
                continue;
            };
            let rhs = hx.phi(&pf, t)?;
            check_corr(&mut left, x, name, &lhs, &rhs)?;
        }
    }
    report.sections.extend([ip, left]);
    Ok(report)
}

/// The Cuntz relation, both commutation relations, the partial isometry
/// property and the identification `ρ_μ^* ρ_μ = Ψ(1_{σ^{|μ|}(C_Y(μ))})` for the
/// images of `Y`'s generators, plus homogeneity of degree one.
pub fn verify_generator_images(maps: &ConjugacyMaps<'_>, depth: usize) -> Result<Report> {
    let (x, y) = (maps.x, maps.y);
    let calc = StarCalculus::new(x);
    let images = maps.generator_images()?;
    let render = |e: &StarElement| calc.render_inline(e);
    let mut report = Report::new("generator images", depth);

    let mut deg = Section::new("images are homogeneous of degree 1");
    let mut pi = Section::new("images are partial isometries");
    let mut sum = StarElement::zero();
    for (a, img) in y.shift().alphabet().symbols().zip(&images) {
        deg.checked += 1;
        if img.homogeneous_degree() != Some(1) {
            deg.failures.push(Failure {
                identity: alloc::format!("rho(S_{})", y.shift().alphabet().token(a)),
                left: render(img)?,
                right: "degree 1".into(),
            });
        }
        let adj = calc.adjoint(img);
        let lhs = calc.product(&[img, &adj, img])?;
        pi.checked += 1;
        if !calc.equal(&lhs, img)? {
            pi.failures.push(Failure {
                identity: alloc::format!("rho(S_{})", y.shift().alphabet().token(a)),
                left: render(&lhs)?,
                right: render(img)?,
            });
        }
        sum = calc.add(&sum, &calc.mul(img, &adj)?)?;
    }
    let mut s1 = Section::new("sum of rho(S_a) rho(S_a)* is I");
    s1.checked += 1;
    let unit = calc.unit()?;
    if !calc.equal(&sum, &unit)? {
        s1.failures.push(Failure {
            identity: "sum".into(),
            left: render(&sum)?,
            right: "I".into(),
        });
    }

    let words = y.shift().language_up_to(depth);
    let rho = |w: &Word| -> Result<StarElement> {
        w.iter()
            .try_fold(unit.clone(), |acc, a| calc.mul(&acc, &images[a.index()]))
    };
    let mut a_mus = Vec::new();
    let mut ranges = Vec::new();
    let mut sc = Section::new("rho(S_mu)* rho(S_mu) = Psi(1_sigma^|mu|(C(mu)))");
    for mu in &words {
        let r = rho(mu)?;
        let a = calc.mul(&calc.adjoint(&r), &r)?;
        let expected = calc.diag(&maps.psi(&y.a_mu(mu)?)?)?;
        sc.checked += 1;
        if !calc.equal(&a, &expected)? {
            sc.failures.push(Failure {
                identity: alloc::format!("mu={}", y.shift().alphabet().format_word(mu)),
                left: render(&a)?,
                right: render(&expected)?,
            });
        }
        ranges.push(calc.mul(&r, &calc.adjoint(&r))?);
        a_mus.push(a);
    }
    let mut s2 = Section::new("A_mu commutes with rho(S_nu) rho(S_nu)*");
    let mut s3 = Section::new("A_mu commutes with A_nu");
    for (i, mu) in words.iter().enumerate() {
        for (j, nu) in words.iter().enumerate() {
            let name = alloc::format!(
                "mu={} nu={}",
                y.shift().alphabet().format_word(mu),
                y.shift().alphabet().format_word(nu)
            );
            for (sec, other) in [(&mut s2, &ranges[j]), (&mut s3, &a_mus[j])] {
                let l = calc.mul(&a_mus[i], other)?;
                let r = calc.mul(other, &a_mus[i])?;
                sec.checked += 1;
                if !calc.equal(&l, &r)? {
                    sec.failures.push(Failure {
                        identity: name.clone(),
                        left: render(&l)?,
                        right: render(&r)?,
                    });
                }
            }
        }
    }
    report.sections.extend([deg, pi, s1, s2, s3, sc]);
    Ok(report)
}

/// Side-by-side invariants of two shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InvariantComparison {
    pub depth: usize,
    pub lag: usize,
    pub class_counts: (Vec<usize>, Vec<usize>),
    pub diagonal_sizes: (Vec<usize>, Vec<usize>),
    pub a_tower_stable: (bool, bool),
    /// `m_X(l) = m_Y(l)` for `lag <= l <= depth`.
    pub class_counts_agree: bool,
    /// Present when a certificate was supplied.
    pub isomorphism: Option<Report>,
}

/// Compares invariants; with a certificate also runs the isomorphism checks.
pub fn compare_invariants(
    x: &CylinderAlgebra,
    y: &CylinderAlgebra,
    depth: usize,
    cert: Option<&ConjugacyCertificate>,
) -> Result<InvariantComparison> {
    let lag = cert.map_or(0, |c| c.forward.window + c.inverse.window);
    let ax = BratteliDiagram::build(x, Tower::A, depth.max(2))?;
    let ay = BratteliDiagram::build(y, Tower::A, depth.max(2))?;
    let dx = BratteliDiagram::build(x, Tower::Diagonal, depth)?;
    let dy = BratteliDiagram::build(y, Tower::Diagonal, depth)?;
    let cx: Vec<usize> = (0..=depth).map(|l| x.class_count(l)).collect();
    let cy: Vec<usize> = (0..=depth).map(|l| y.class_count(l)).collect();
    let from = lag.min(depth);
    let agree = cx[from..] == cy[from..];
    let isomorphism = match cert {
        Some(c) => {
            let maps = ConjugacyMaps::new(x, y, c);
            let mut r = check_conjugacy(x.shift(), y.shift(), &c.forward, &c.inverse, depth);
            r.merge(verify_corr_isomorphism(&maps, depth)?);
            r.merge(verify_generator_images(&maps, depth)?);
            r.title = "verified isomorphism".into();
            Some(r)
        }
        None => None,
    };
    Ok(InvariantComparison {
        depth,
        lag,
        class_counts: (cx, cy),
        diagonal_sizes: (dx.sizes, dy.sizes),
        a_tower_stable: (ax.stable, ay.stable),
        class_counts_agree: agree,
        isomorphism,
    })
}

/// Desk codes between the golden mean shift and its two-block presentation.
pub mod desk {
    use super::*;

    /// `x_0 x_1 ↦ [x_0 x_1]` with `a = [00]`, `b = [01]`, `c = [10]`.
    pub fn golden_to_two_block(x: &Subshift, y: &Subshift) -> BlockCode {
        let table = [("00", "a"), ("01", "b"), ("10", "c")]
            .iter()
            .map(|(w, s)| {
                (
                    x.alphabet().parse_word(w).expect("word"),
                    y.alphabet().symbol(s).expect("symbol"),
                )
            })
            .collect();
        BlockCode::new(x, y, 2, table).expect("valid code")
    }

    /// `[ij] ↦ i`.
    pub fn two_block_to_golden(y: &Subshift, x: &Subshift) -> BlockCode {
        let table = [("a", "0"), ("b", "0"), ("c", "1")]
            .iter()
            .map(|(w, s)| {
                (
                    y.alphabet().parse_word(w).expect("word"),
                    x.alphabet().symbol(s).expect("symbol"),
                )
            })
            .collect();
        BlockCode::new(y, x, 1, table).expect("valid code")
    }
}
