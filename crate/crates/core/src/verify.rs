//! Mechanical checks of the relations satisfied by the generators `S_a`,
//! each identity decided by comparing normal forms.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, Atom, CylinderAlgebra, Level};
use crate::error::Result;
use crate::star::{StarCalculus, StarElement};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Failure {
    pub identity: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Section {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section {
            name: name.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Report {
    pub title: String,
    pub depth: usize,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(title: &str, depth: usize) -> Self {
        Report {
            title: title.into(),
            depth,
            sections: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn checked(&self) -> usize {
        self.sections.iter().map(|s| s.checked).sum()
    }

    pub fn merge(&mut self, other: Report) {
        self.sections.extend(other.sections);
    }
}

/// Normal-form comparison helper shared by the suites.
pub struct Checker<'a> {
    pub calc: StarCalculus<'a>,
}

impl<'a> Checker<'a> {
    pub fn new(alg: &'a CylinderAlgebra) -> Self {
        Checker {
            calc: StarCalculus::new(alg),
        }
    }

    fn word(&self, w: &Word) -> String {
        self.calc.algebra().shift().alphabet().format_word(w)
    }

    /// Records one identity `left = right`.
    pub fn check(
        &self,
        section: &mut Section,
        identity: impl FnOnce() -> String,
        left: &StarElement,
        right: &StarElement,
    ) -> Result<()> {
        section.checked += 1;
        if !self.calc.equal(left, right)? {
            section.failures.push(Failure {
                identity: identity(),
                left: self.calc.render_inline(left)?,
                right: self.calc.render_inline(right)?,
            });
        }
        Ok(())
    }

    /// Records that every expression of a chain has the same normal form.
    fn check_chain(
        &self,
        section: &mut Section,
        identity: &dyn Fn() -> String,
        chain: &[StarElement],
    ) -> Result<()> {
        for pair in chain.windows(2) {
            self.check(section, identity, &pair[0], &pair[1])?;
        }
        Ok(())
    }

    fn s(&self, w: &Word) -> Result<StarElement> {
        self.calc.s_word(w)
    }

    fn s_adj(&self, w: &Word) -> Result<StarElement> {
        self.calc.s_word_adjoint(w)
    }

    fn range(&self, w: &Word) -> Result<StarElement> {
        let s = self.s(w)?;
        self.calc.mul(&s, &self.calc.adjoint(&s))
    }
}

/// The class indicator `E_i^l` of `Ã_l`.
pub fn class_projection(alg: &CylinderAlgebra, l: usize, cls: usize) -> Result<AlgebraElement> {
    alg.atom_indicator(
        Level { k: 0, l },
        Atom {
            nu: Word::empty(),
            cls,
        },
    )
}

/// The Cuntz relation `Σ_a S_a S_a^* = I`, the two commutation relations for
/// `A_μ = S_μ^* S_μ`, the identification `A_μ = 1_{σ^{|μ|}(C(μ))}`
/// and the partial isometry property of the generators, for legal words up
/// to `depth`.
pub fn verify_relations(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let c = Checker::new(alg);
    let calc = c.calc;
    let words = alg.shift().language_up_to(depth);
    let mut report = Report::new("relations", depth);

    let mut s1 = Section::new("sum of S_a S_a* is I");
    let mut sum = StarElement::zero();
    for a in alg.shift().alphabet().symbols() {
        sum = calc.add(&sum, &c.range(&Word::single(a))?)?;
    }
    c.check(&mut s1, || "sum_a S_a S_a* = I".into(), &sum, &calc.unit()?)?;

    let mut s_pi = Section::new("generators are partial isometries");
    for a in alg.shift().alphabet().symbols() {
        let g = calc.generator(a)?;
        let lhs = calc.product(&[&g, &calc.adjoint(&g), &g])?;
        c.check(
            &mut s_pi,
            || alloc::format!("S_{0} S_{0}* S_{0} = S_{0}", c.word(&Word::single(a))),
            &lhs,
            &g,
        )?;
    }

    let mut s2 = Section::new("A_mu commutes with S_nu S_nu*");
    let mut s3 = Section::new("A_mu commutes with A_nu");
    let mut sc = Section::new("A_mu is the indicator of sigma^|mu|(C(mu))");
    let a_mus: Vec<StarElement> = words.iter().map(|w| calc.a_mu(w)).collect::<Result<_>>()?;
    let ranges: Vec<StarElement> = words.iter().map(|w| c.range(w)).collect::<Result<_>>()?;
    for (i, mu) in words.iter().enumerate() {
        let diag = calc.diag(&alg.a_mu(mu)?)?;
        c.check(
            &mut sc,
            || alloc::format!("S_{0}* S_{0} = 1_sigma({0})", c.word(mu)),
            &a_mus[i],
            &diag,
        )?;
        for (j, nu) in words.iter().enumerate() {
            let lhs = calc.mul(&a_mus[i], &ranges[j])?;
            let rhs = calc.mul(&ranges[j], &a_mus[i])?;
            c.check(
                &mut s2,
                || alloc::format!("mu={} nu={}", c.word(mu), c.word(nu)),
                &lhs,
                &rhs,
            )?;
            let lhs = calc.mul(&a_mus[i], &a_mus[j])?;
            let rhs = calc.mul(&a_mus[j], &a_mus[i])?;
            c.check(
                &mut s3,
                || alloc::format!("mu={} nu={}", c.word(mu), c.word(nu)),
                &lhs,
                &rhs,
            )?;
        }
    }
    report.sections.extend([s1, s_pi, s2, s3, sc]);

    if alg.shift().alphabet().len() == 1 {
        let mut su = Section::new("single generator is unitary");
        let g = calc.generator(alg.shift().alphabet().symbols().next().expect("one symbol"))?;
        let unit = calc.unit()?;
        c.check(
            &mut su,
            || "S* S = I".into(),
            &calc.mul(&calc.adjoint(&g), &g)?,
            &unit,
        )?;
        c.check(
            &mut su,
            || "S S* = I".into(),
            &calc.mul(&g, &calc.adjoint(&g))?,
            &unit,
        )?;
        report.sections.push(su);
    }
    Ok(report)
}

/// `S_μ S_μ^* S_μ = S_μ` for all words up to `depth`.
pub fn verify_partial_isometries(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let c = Checker::new(alg);
    let mut sec = Section::new("S_mu is a partial isometry");
    for mu in alg.shift().alphabet().words_up_to(depth) {
        let s = c.s(&mu)?;
        let lhs = c.calc.product(&[&s, &c.calc.adjoint(&s), &s])?;
        c.check(&mut sec, || alloc::format!("mu={}", c.word(&mu)), &lhs, &s)?;
    }
    let mut report = Report::new("partial isometries", depth);
    report.sections.push(sec);
    Ok(report)
}

/// For `|μ| = |ν|`: `S_μ^* S_ν` is `A_μ` when `μ = ν` and zero otherwise.
pub fn verify_equal_length_products(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let c = Checker::new(alg);
    let mut sec = Section::new("S_mu* S_nu for |mu| = |nu|");
    let alphabet = alg.shift().alphabet();
    for n in 0..=depth {
        let words = alphabet.all_words(n);
        let s: Vec<StarElement> = words.iter().map(|w| c.s(w)).collect::<Result<_>>()?;
        for (i, mu) in words.iter().enumerate() {
            let mu_adj = c.calc.adjoint(&s[i]);
            for (j, nu) in words.iter().enumerate() {
                let lhs = c.calc.mul(&mu_adj, &s[j])?;
                let rhs = if i == j {
                    c.calc.diag(&alg.a_mu(mu)?)?
                } else {
                    StarElement::zero()
                };
                c.check(
                    &mut sec,
                    || alloc::format!("mu={} nu={}", c.word(mu), c.word(nu)),
                    &lhs,
                    &rhs,
                )?;
            }
        }
    }
    let mut report = Report::new("equal-length products", depth);
    report.sections.push(sec);
    Ok(report)
}

/// The projections `E_i^l` as star elements, each rebuilt from the
/// generators as `Π_{μ ∈ P} A_μ Π_{μ ∉ P} (I − A_μ)` over `μ ∈ 𝔞_l` and
/// compared against the class indicator.
fn projections(c: &Checker<'_>, l: usize, sec: &mut Section) -> Result<Vec<StarElement>> {
    let alg = c.calc.algebra();
    let words = alg.shift().alphabet().words_up_to(l);
    let unit = c.calc.unit()?;
    let a_mus: Vec<StarElement> = words
        .iter()
        .map(|w| c.calc.a_mu(w))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut total = StarElement::zero();
    for cls in 0..alg.class_count(l) {
        let p = alg.class_left_extensions(l, cls);
        let mut acc = unit.clone();
        for (w, a) in words.iter().zip(&a_mus) {
            let factor = if p.contains(w) {
                a.clone()
            } else {
                c.calc.sub(&unit, a)?
            };
            acc = c.calc.mul(&acc, &factor)?;
        }
        let e = c.calc.diag(&class_projection(alg, l, cls)?)?;
        c.check(sec, || alloc::format!("E{l}.{cls} from the A_mu"), &acc, &e)?;
        total = c.calc.add(&total, &e)?;
        out.push(e);
    }
    c.check(sec, || alloc::format!("sum of E{l}.i is I"), &total, &unit)?;
    Ok(out)
}

/// `S_μ E_i^l S_μ^* ≠ 0` iff `A_μ E_i^l ≠ 0`, for `1 ≤ |μ| ≤ l ≤ depth`.
pub fn verify_atom_projections(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let c = Checker::new(alg);
    let mut built = Section::new("E_i^l generated by the A_mu");
    let mut sec = Section::new("S_mu E S_mu* nonzero iff A_mu E nonzero");
    for l in 1..=depth {
        let es = projections(&c, l, &mut built)?;
        for k in 1..=l {
            for mu in alg.shift().alphabet().all_words(k) {
                let s = c.s(&mu)?;
                let a = c.calc.a_mu(&mu)?;
                for (i, e) in es.iter().enumerate() {
                    let conj = c.calc.product(&[&s, e, &c.calc.adjoint(&s)])?;
                    let cut = c.calc.mul(&a, e)?;
                    sec.checked += 1;
                    if conj.is_zero() != cut.is_zero() {
                        sec.failures.push(Failure {
                            identity: alloc::format!("mu={} E{l}.{i}", c.word(&mu)),
                            left: c.calc.render_inline(&conj)?,
                            right: c.calc.render_inline(&cut)?,
                        });
                    }
                }
            }
        }
    }
    let mut report = Report::new("atom projections", depth);
    report.sections.extend([built, sec]);
    Ok(report)
}

/// The `S_μ E_i^l S_μ^*`, `|μ| = k ≤ l ≤ depth`, are mutually orthogonal
/// self-adjoint idempotents.
pub fn verify_orthogonal_families(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let c = Checker::new(alg);
    let mut built = Section::new("E_i^l generated by the A_mu");
    let mut orth = Section::new("products of S_mu E S_mu*");
    let mut adj = Section::new("S_mu E S_mu* is self-adjoint");
    for l in 1..=depth {
        let es = projections(&c, l, &mut built)?;
        for k in 1..=l {
            let mut family: Vec<(String, StarElement)> = Vec::new();
            for mu in alg.shift().alphabet().all_words(k) {
                let s = c.s(&mu)?;
                for (i, e) in es.iter().enumerate() {
                    let p = c.calc.product(&[&s, e, &c.calc.adjoint(&s)])?;
                    let name = alloc::format!("S_{} E{l}.{i} S_{}*", c.word(&mu), c.word(&mu));
                    c.check(&mut adj, || name.clone(), &c.calc.adjoint(&p), &p)?;
                    family.push((name, p));
                }
            }
            for (i, (n1, p)) in family.iter().enumerate() {
                for (j, (n2, q)) in family.iter().enumerate() {
                    let lhs = c.calc.mul(p, q)?;
                    let rhs = if i == j {
                        p.clone()
                    } else {
                        StarElement::zero()
                    };
                    c.check(&mut orth, || alloc::format!("({n1})({n2})"), &lhs, &rhs)?;
                }
            }
        }
    }
    let mut report = Report::new("orthogonal families", depth);
    report.sections.extend([built, orth, adj]);
    Ok(report)
}

/// Partial isometries, equal-length products, the atom projections and
/// their conjugates.
pub fn verify_lemmas(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let mut report = Report::new("lemmas", depth);
    report.merge(verify_partial_isometries(alg, depth)?);
    report.merge(verify_equal_length_products(alg, depth)?);
    report.merge(verify_atom_projections(alg, depth)?);
    report.merge(verify_orthogonal_families(alg, depth)?);
    Ok(report)
}

/// `S_μ^* S_μ S_ν = S_ν S_{μν}^* S_{μν}` and the two derivations linking it
/// with the commutation of `A_μ` and `S_ν S_ν^*`.
pub fn verify_b_prime(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let c = Checker::new(alg);
    let calc = c.calc;
    let mut direct = Section::new("A_mu S_nu = S_nu A_{mu nu}");
    let mut forward = Section::new("b' implies b");
    let mut backward = Section::new("b implies b'");
    let words = alg.shift().language_up_to(depth);
    for mu in &words {
        let a_mu = calc.a_mu(mu)?;
        for nu in &words {
            let name = || alloc::format!("mu={} nu={}", c.word(mu), c.word(nu));
            let s_nu = c.s(nu)?;
            let s_nu_adj = c.s_adj(nu)?;
            let mn = mu.concat(nu);
            let a_mn = calc.mul(&c.s_adj(&mn)?, &c.s(&mn)?)?;
            let lhs = calc.mul(&a_mu, &s_nu)?;
            let rhs = calc.mul(&s_nu, &a_mn)?;
            c.check(&mut direct, name, &lhs, &rhs)?;

            // A_μ S_ν S_ν* = S_ν A_μν S_ν* = S_ν S_ν* A_μ S_ν S_ν*
            let range = calc.mul(&s_nu, &s_nu_adj)?;
            let sandwiched = calc.product(&[&range, &a_mu, &range])?;
            let chain1 = [
                calc.mul(&a_mu, &range)?,
                calc.product(&[&s_nu, &a_mn, &s_nu_adj])?,
                sandwiched.clone(),
            ];
            c.check_chain(&mut forward, &name, &chain1)?;
            // S_ν S_ν* A_μ = S_ν (A_μ S_ν)* = S_ν (S_ν A_μν)* = S_ν S_ν* A_μ S_ν S_ν*
            let chain2 = [
                calc.mul(&range, &a_mu)?,
                calc.mul(&s_nu, &calc.adjoint(&calc.mul(&a_mu, &s_nu)?))?,
                calc.mul(&s_nu, &calc.adjoint(&calc.mul(&s_nu, &a_mn)?))?,
                sandwiched,
            ];
            c.check_chain(&mut forward, &name, &chain2)?;
            // A_μ S_ν = A_μ S_ν S_ν* S_ν = S_ν S_ν* A_μ S_ν = S_ν A_μν
            let chain3 = [
                calc.mul(&a_mu, &s_nu)?,
                calc.product(&[&a_mu, &range, &s_nu])?,
                calc.product(&[&range, &a_mu, &s_nu])?,
                calc.mul(&s_nu, &a_mn)?,
            ];
            c.check_chain(&mut backward, &name, &chain3)?;
        }
    }
    let mut report = Report::new("b-prime", depth);
    report.sections.extend([direct, forward, backward]);
    Ok(report)
}

/// Every suite.
pub fn verify_all(alg: &CylinderAlgebra, depth: usize) -> Result<Report> {
    let mut report = Report::new("all", depth);
    report.merge(verify_relations(alg, depth)?);
    report.merge(verify_lemmas(alg, depth)?);
    report.merge(verify_b_prime(alg, depth)?);
    Ok(report)
}
