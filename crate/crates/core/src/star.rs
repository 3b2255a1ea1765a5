//! Normal forms `Σ S_ν f S_μ^*` for the dense *-subalgebra generated by the
//! partial isometries `S_a`.
//!
//! A term is keyed by `(ν, μ)` and carries a function `f ≤ A_ν A_μ` where
//! `A_μ = S_μ^* S_μ = 1_{σ^{|μ|}(C(μ))}`. Products are resolved with
//! `S_μ^* S_μ = A_μ`, `f S_w = S_w λ̃_w(f)` and orthogonality of the ranges;
//! afterwards every term `S_{νa} g S_{μa}^*` is folded into
//! `S_ν (S_a g S_a^*) S_μ^*`, so surviving keys have `ν = ε`, `μ = ε`, or
//! differing last letters.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, BasicSet, CylinderAlgebra};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::word::{Symbol, Word};

type Key = (Word, Word);

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StarElement {
    terms: BTreeMap<Key, AlgebraElement>,
}

impl StarElement {
    pub fn zero() -> Self {
        StarElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `((ν, μ), f)` in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &AlgebraElement)> {
        self.terms.iter().map(|((nu, mu), f)| (nu, mu, f))
    }

    pub fn term(&self, nu: &Word, mu: &Word) -> Option<&AlgebraElement> {
        self.terms.get(&(nu.clone(), mu.clone()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Gauge degrees `|ν| − |μ|` occurring in the element.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|(nu, mu)| degree(nu, mu)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Some(d)` if every term has degree `d`; zero is homogeneous of every
    /// degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }
}

fn degree(nu: &Word, mu: &Word) -> i64 {
    nu.len() as i64 - mu.len() as i64
}

/// Rewriting engine over one subshift.
#[derive(Clone, Copy, Debug)]
pub struct StarCalculus<'a> {
    alg: &'a CylinderAlgebra,
}

impl<'a> StarCalculus<'a> {
    pub fn new(alg: &'a CylinderAlgebra) -> Self {
        StarCalculus { alg }
    }

    pub fn algebra(&self) -> &'a CylinderAlgebra {
        self.alg
    }

    fn accumulate(
        &self,
        terms: &mut BTreeMap<Key, AlgebraElement>,
        key: Key,
        f: AlgebraElement,
    ) -> Result<()> {
        if f.is_zero() {
            return Ok(());
        }
        match terms.remove(&key) {
            Some(g) => {
                let s = self.alg.add(&g, &f)?;
                if !s.is_zero() {
                    terms.insert(key, s);
                }
            }
            None => {
                terms.insert(key, f);
            }
        }
        Ok(())
    }

    /// Contracts common last letters, coarsens and drops zero terms.
    fn normalize(&self, mut terms: BTreeMap<Key, AlgebraElement>) -> Result<StarElement> {
        loop {
            let next = terms
                .keys()
                .filter(|(nu, mu)| !nu.is_empty() && !mu.is_empty() && nu.last() == mu.last())
                .max_by_key(|(nu, mu)| (nu.len() + mu.len(), nu.clone(), mu.clone()))
                .cloned();
            let Some((nu, mu)) = next else { break };
            let f = terms
                .remove(&(nu.clone(), mu.clone()))
                .expect("key present");
            let a = nu.last().expect("nonempty");
            let lifted = self.alg.prefix_lift(a, &f)?;
            self.accumulate(&mut terms, (nu.drop_last(), mu.drop_last()), lifted)?;
        }
        let mut out = BTreeMap::new();
        for (key, f) in terms {
            let f = self.alg.coarsen(&f)?;
            if !f.is_zero() {
                out.insert(key, f);
            }
        }
        Ok(StarElement { terms: out })
    }

    /// `S_ν f S_μ^*`; `f` is cut down to `A_ν A_μ`.
    pub fn monomial(&self, nu: &Word, f: &AlgebraElement, mu: &Word) -> Result<StarElement> {
        let support = self.alg.mul(&self.alg.a_mu(nu)?, &self.alg.a_mu(mu)?)?;
        let f = self.alg.mul(f, &support)?;
        let mut terms = BTreeMap::new();
        self.accumulate(&mut terms, (nu.clone(), mu.clone()), f)?;
        self.normalize(terms)
    }

    /// `f` as a degree-zero element.
    pub fn diag(&self, f: &AlgebraElement) -> Result<StarElement> {
        self.monomial(&Word::empty(), f, &Word::empty())
    }

    pub fn unit(&self) -> Result<StarElement> {
        self.diag(&self.alg.unit())
    }

    /// `S_a`.
    pub fn generator(&self, a: Symbol) -> Result<StarElement> {
        let w = Word::single(a);
        self.alg.shift().alphabet().check_word(&w)?;
        self.monomial(&w, &self.alg.a_mu(&w)?, &Word::empty())
    }

    /// `S_a^*`.
    pub fn generator_adjoint(&self, a: Symbol) -> Result<StarElement> {
        Ok(self.adjoint(&self.generator(a)?))
    }

    /// `S_μ = S_{μ_1} ⋯ S_{μ_n}`, with `S_ε = I`.
    pub fn s_word(&self, mu: &Word) -> Result<StarElement> {
        mu.iter()
            .try_fold(self.unit()?, |acc, a| self.mul(&acc, &self.generator(a)?))
    }

    /// `S_μ^*`.
    pub fn s_word_adjoint(&self, mu: &Word) -> Result<StarElement> {
        Ok(self.adjoint(&self.s_word(mu)?))
    }

    /// `A_μ = S_μ^* S_μ` computed by rewriting.
    pub fn a_mu(&self, mu: &Word) -> Result<StarElement> {
        self.mul(&self.s_word_adjoint(mu)?, &self.s_word(mu)?)
    }

    /// `S_ν S_μ^* S_μ S_ν^*`.
    pub fn cylinder_projection(&self, mu: &Word, nu: &Word) -> Result<StarElement> {
        let snu = self.s_word(nu)?;
        let inner = self.a_mu(mu)?;
        self.product(&[&snu, &inner, &self.adjoint(&snu)])
    }

    /// `1_{C(μ,ν)}` as a degree-zero element.
    pub fn basic(&self, mu: &Word, nu: &Word) -> Result<StarElement> {
        self.diag(&self.alg.basic(&BasicSet::new(mu.clone(), nu.clone()))?)
    }

    fn monomial_product(
        &self,
        (nu, mu): &Key,
        f: &AlgebraElement,
        (nu2, mu2): &Key,
        g: &AlgebraElement,
    ) -> Result<Option<(Key, AlgebraElement)>> {
        if mu == nu2 {
            return Ok(Some(((nu.clone(), mu2.clone()), self.alg.mul(f, g)?)));
        }
        if nu2.starts_with(mu) {
            let w = nu2.drop_prefix(mu.len());
            let h = self.alg.mul(&self.alg.lambda_word(&w, f)?, g)?;
            return Ok(Some(((nu.concat(&w), mu2.clone()), h)));
        }
        if mu.starts_with(nu2) {
            let w = mu.drop_prefix(nu2.len());
            let h = self.alg.mul(f, &self.alg.lambda_word(&w, g)?)?;
            return Ok(Some(((nu.clone(), mu2.concat(&w)), h)));
        }
        Ok(None)
    }

    pub fn mul(&self, x: &StarElement, y: &StarElement) -> Result<StarElement> {
        let mut terms = BTreeMap::new();
        for (k1, f) in &x.terms {
            for (k2, g) in &y.terms {
                if let Some((key, h)) = self.monomial_product(k1, f, k2, g)? {
                    self.accumulate(&mut terms, key, h)?;
                }
            }
        }
        self.normalize(terms)
    }

    /// Left-to-right product of several factors.
    pub fn product(&self, factors: &[&StarElement]) -> Result<StarElement> {
        let mut acc = self.unit()?;
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn add(&self, x: &StarElement, y: &StarElement) -> Result<StarElement> {
        let mut terms = x.terms.clone();
        for (k, g) in &y.terms {
            self.accumulate(&mut terms, k.clone(), g.clone())?;
        }
        self.normalize(terms)
    }

    pub fn scale(&self, x: &StarElement, c: Scalar) -> StarElement {
        if c.is_zero() {
            return StarElement::zero();
        }
        StarElement {
            terms: x
                .terms
                .iter()
                .map(|(k, f)| (k.clone(), f.scale(c)))
                .collect(),
        }
    }

    pub fn sub(&self, x: &StarElement, y: &StarElement) -> Result<StarElement> {
        self.add(x, &self.scale(y, -Scalar::one()))
    }

    /// `(S_ν f S_μ^*)^* = S_μ f^* S_ν^*`.
    pub fn adjoint(&self, x: &StarElement) -> StarElement {
        StarElement {
            terms: x
                .terms
                .iter()
                .map(|((nu, mu), f)| ((mu.clone(), nu.clone()), f.adjoint()))
                .collect(),
        }
    }

    /// Equality of normal forms, comparing coefficients as functions.
    pub fn equal(&self, x: &StarElement, y: &StarElement) -> Result<bool> {
        if x.terms.len() != y.terms.len() {
            return Ok(false);
        }
        for ((k1, f), (k2, g)) in x.terms.iter().zip(&y.terms) {
            if k1 != k2 || !self.alg.equal(f, g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Homogeneous components by degree `|ν| − |μ|`.
    pub fn gauge_grade(&self, x: &StarElement) -> BTreeMap<i64, StarElement> {
        let mut out: BTreeMap<i64, StarElement> = BTreeMap::new();
        for ((nu, mu), f) in &x.terms {
            out.entry(degree(nu, mu))
                .or_default()
                .terms
                .insert((nu.clone(), mu.clone()), f.clone());
        }
        out
    }

    /// `γ_z`: the degree `d` part is scaled by `z^d`. `None` for `z = 0`.
    pub fn gauge_act(&self, x: &StarElement, z: Scalar) -> Option<StarElement> {
        let mut terms = BTreeMap::new();
        for ((nu, mu), f) in &x.terms {
            let c = z.pow(degree(nu, mu))?;
            terms.insert((nu.clone(), mu.clone()), f.scale(c));
        }
        Some(StarElement { terms })
    }

    /// One line per term and coefficient: `c * S(ν) [atoms] S*(μ)`.
    pub fn render(&self, x: &StarElement) -> Result<Vec<String>> {
        let alphabet = self.alg.shift().alphabet();
        if x.is_zero() {
            return Ok(alloc::vec![String::from("0")]);
        }
        let mut lines = Vec::new();
        for ((nu, mu), f) in &x.terms {
            let mut ends = (String::new(), String::new());
            if !nu.is_empty() {
                ends.0 = alloc::format!("S({}) ", alphabet.format_word(nu));
            }
            if !mu.is_empty() {
                ends.1 = alloc::format!(" S*({})", alphabet.format_word(mu));
            }
            let support = self.alg.mul(&self.alg.a_mu(nu)?, &self.alg.a_mu(mu)?)?;
            let mut by_coeff: BTreeMap<Scalar, Vec<String>> = BTreeMap::new();
            for (atom, c) in f.terms() {
                by_coeff.entry(*c).or_default().push(if atom.nu.is_empty() {
                    alloc::format!("E{}.{}", f.level().l, atom.cls)
                } else {
                    alloc::format!(
                        "{}·E{}.{}",
                        alphabet.format_word(&atom.nu),
                        f.level().l,
                        atom.cls
                    )
                });
            }
            if by_coeff.len() == 1 {
                let c = *by_coeff.keys().next().expect("nonempty");
                if self
                    .alg
                    .equal(&f.scale(c.inverse().expect("nonzero")), &support)?
                {
                    let body = alloc::format!("{}{}", ends.0.trim_end(), ends.1);
                    let body = if body.is_empty() {
                        String::from("I")
                    } else {
                        String::from(body.trim_start())
                    };
                    lines.push(if c.is_one() {
                        body
                    } else {
                        alloc::format!("{c} * {body}")
                    });
                    continue;
                }
            }
            for (c, atoms) in by_coeff {
                lines.push(alloc::format!(
                    "{c} * {}[k={},l={}: {}]{}",
                    ends.0,
                    f.level().k,
                    f.level().l,
                    atoms.join(" "),
                    ends.1
                ));
            }
        }
        Ok(lines)
    }

    /// [`render`](Self::render) joined with `" + "`.
    pub fn render_inline(&self, x: &StarElement) -> Result<String> {
        Ok(self.render(x)?.join(" + "))
    }
}
