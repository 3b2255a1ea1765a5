//! The correspondence `H_X = ⊕_a D̃_a` over the snapshot algebras, the maps
//! `λ̃_a(f)(x) = f(ax)` and `φ̃(f)(x) = f(σx)`, and the set calculus built on
//! them.

use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, Atom, BasicSet, CylinderAlgebra, Level};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{Symbol, Word};

impl CylinderAlgebra {
    /// `λ̃_a(f)(x) = f(ax)`, zero where `ax ∉ X`.
    pub fn lambda(&self, a: Symbol, f: &AlgebraElement) -> Result<AlgebraElement> {
        self.shift().alphabet().check_word(&Word::single(a))?;
        let lv = f.level();
        let target = if lv.k >= 1 {
            Level {
                k: lv.k - 1,
                l: lv.l,
            }
        } else {
            Level { k: 0, l: lv.l + 1 }
        };
        let mut coeffs = Vec::new();
        if !f.is_zero() {
            for atom in self.atoms(target)?.iter() {
                let tail = self.representative(target.l, atom.cls);
                let source = if lv.k >= 1 {
                    let nu = atom.nu.prepend(a);
                    match self.shift().prepend_word(&nu, tail) {
                        Some(_) => Atom { nu, cls: atom.cls },
                        None => continue,
                    }
                } else {
                    match self.shift().prepend(a, tail) {
                        Some(t) => Atom {
                            nu: Word::empty(),
                            cls: self.class_of(lv.l, t),
                        },
                        None => continue,
                    }
                };
                coeffs.push((atom.clone(), f.coeff(&source)));
            }
        }
        self.from_coeffs(target, coeffs)
    }

    /// `λ̃_w = λ̃_{w_n} ∘ … ∘ λ̃_{w_1}`, i.e. `f(wx)`.
    pub fn lambda_word(&self, w: &Word, f: &AlgebraElement) -> Result<AlgebraElement> {
        w.iter().try_fold(f.clone(), |g, a| self.lambda(a, &g))
    }

    /// `φ̃(f)(x) = f(σx)`.
    pub fn phi_tilde(&self, f: &AlgebraElement) -> Result<AlgebraElement> {
        let lv = f.level();
        let target = Level {
            k: lv.k + 1,
            l: lv.l.max(lv.k + 1),
        };
        let mut coeffs = Vec::new();
        if !f.is_zero() {
            for atom in self.atoms(target)?.iter() {
                let tail = self.representative(target.l, atom.cls);
                let source = Atom {
                    nu: atom.nu.drop_prefix(1),
                    cls: self.class_of(lv.l, tail),
                };
                coeffs.push((atom.clone(), f.coeff(&source)));
            }
        }
        self.from_coeffs(target, coeffs)
    }

    /// `y ↦ [y_0 = a] g(σy)`.
    pub fn prefix_lift(&self, a: Symbol, g: &AlgebraElement) -> Result<AlgebraElement> {
        let c = self.basic(&BasicSet::cylinder(Word::single(a)))?;
        self.mul(&c, &self.phi_tilde(g)?)
    }

    /// `1_{E ∪ F} = 1_E + 1_F − 1_E 1_F`.
    pub fn union(&self, e: &AlgebraElement, f: &AlgebraElement) -> Result<AlgebraElement> {
        if !e.is_indicator() || !f.is_indicator() {
            return Err(Error::NotIndicator);
        }
        self.sub(&self.add(e, f)?, &self.mul(e, f)?)
    }

    /// `1_{σ(E)}` as the union of the sets `{x : ax ∈ E}`.
    pub fn set_sigma_forward(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        if !e.is_indicator() {
            return Err(Error::NotIndicator);
        }
        let mut acc = AlgebraElement::zero(Level { k: 0, l: 0 });
        for a in self.shift().alphabet().symbols() {
            acc = self.union(&acc, &self.lambda(a, e)?)?;
        }
        self.coarsen(&acc)
    }

    /// `1_{σ^{-1}(E)} = φ̃(1_E)`.
    pub fn set_sigma_backward(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        if !e.is_indicator() {
            return Err(Error::NotIndicator);
        }
        self.phi_tilde(e)
    }
}

/// An element `(f_a)_a` of `H_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrElement {
    components: Vec<AlgebraElement>,
}

impl CorrElement {
    pub fn components(&self) -> &[AlgebraElement] {
        &self.components
    }

    pub fn component(&self, a: Symbol) -> &AlgebraElement {
        &self.components[a.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(AlgebraElement::is_zero)
    }
}

/// `H_X` over a [`CylinderAlgebra`].
#[derive(Clone, Copy, Debug)]
pub struct Correspondence<'a> {
    alg: &'a CylinderAlgebra,
}

impl<'a> Correspondence<'a> {
    pub fn new(alg: &'a CylinderAlgebra) -> Self {
        Correspondence { alg }
    }

    pub fn algebra(&self) -> &'a CylinderAlgebra {
        self.alg
    }

    fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.alg.shift().alphabet().symbols()
    }

    /// Checks `f_a = f_a 1_{σ(C(a))}` for every `a`.
    pub fn element(&self, components: Vec<AlgebraElement>) -> Result<CorrElement> {
        if components.len() != self.alg.shift().alphabet().len() {
            return Err(Error::InvalidPresentation(
                "one component per symbol is required".into(),
            ));
        }
        for (a, f) in self.symbols().zip(&components) {
            let support = self.alg.a_mu(&Word::single(a))?;
            if !self.alg.equal(&self.alg.mul(f, &support)?, f)? {
                return Err(Error::ComponentCondition(a.0));
            }
        }
        Ok(CorrElement { components })
    }

    pub fn zero(&self) -> CorrElement {
        let z = AlgebraElement::zero(Level { k: 0, l: 0 });
        CorrElement {
            components: self.symbols().map(|_| z.clone()).collect(),
        }
    }

    /// `ξ_a`: `1_{σ(C(a))}` in slot `a`.
    pub fn xi(&self, a: Symbol) -> Result<CorrElement> {
        let mut out = self.zero();
        out.components[a.index()] = self.alg.a_mu(&Word::single(a))?;
        Ok(out)
    }

    pub fn add(&self, x: &CorrElement, y: &CorrElement) -> Result<CorrElement> {
        let components = x
            .components
            .iter()
            .zip(&y.components)
            .map(|(f, g)| self.alg.add(f, g))
            .collect::<Result<_>>()?;
        Ok(CorrElement { components })
    }

    pub fn sub(&self, x: &CorrElement, y: &CorrElement) -> Result<CorrElement> {
        let components = x
            .components
            .iter()
            .zip(&y.components)
            .map(|(f, g)| self.alg.sub(f, g))
            .collect::<Result<_>>()?;
        Ok(CorrElement { components })
    }

    pub fn scale(&self, x: &CorrElement, c: Scalar) -> CorrElement {
        CorrElement {
            components: x.components.iter().map(|f| f.scale(c)).collect(),
        }
    }

    /// `⟨x, y⟩ = Σ_a f_a^* g_a`.
    pub fn inner_product(&self, x: &CorrElement, y: &CorrElement) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::zero(Level { k: 0, l: 0 });
        for (f, g) in x.components.iter().zip(&y.components) {
            acc = self.alg.add(&acc, &self.alg.mul(&f.adjoint(), g)?)?;
        }
        Ok(acc)
    }

    /// `(f_a f)_a`.
    pub fn right_action(&self, x: &CorrElement, f: &AlgebraElement) -> Result<CorrElement> {
        let components = x
            .components
            .iter()
            .map(|g| self.alg.mul(g, f))
            .collect::<Result<_>>()?;
        Ok(CorrElement { components })
    }

    /// `φ(f)(f_a)_a = (λ̃_a(f) f_a)_a`.
    pub fn phi(&self, f: &AlgebraElement, x: &CorrElement) -> Result<CorrElement> {
        let components = self
            .symbols()
            .zip(&x.components)
            .map(|(a, g)| self.alg.mul(&self.alg.lambda(a, f)?, g))
            .collect::<Result<_>>()?;
        Ok(CorrElement { components })
    }

    /// `θ_{z,y}(x) = z ⟨y, x⟩`.
    pub fn theta(&self, z: &CorrElement, y: &CorrElement, x: &CorrElement) -> Result<CorrElement> {
        self.right_action(z, &self.inner_product(y, x)?)
    }

    /// Pairs `(ξ_a λ̃_a(f), ξ_a)` whose rank-one operators sum to `φ(f)`.
    pub fn rank_one_decomposition(
        &self,
        f: &AlgebraElement,
    ) -> Result<Vec<(CorrElement, CorrElement)>> {
        self.symbols()
            .map(|a| {
                let xi = self.xi(a)?;
                Ok((self.right_action(&xi, &self.alg.lambda(a, f)?)?, xi))
            })
            .collect()
    }

    /// Equality as tuples of functions.
    pub fn equal(&self, x: &CorrElement, y: &CorrElement) -> Result<bool> {
        for (f, g) in x.components.iter().zip(&y.components) {
            if !self.alg.equal(f, g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coarsens every component.
    pub fn coarsen(&self, x: &CorrElement) -> Result<CorrElement> {
        let components = x
            .components
            .iter()
            .map(|f| self.alg.coarsen(f))
            .collect::<Result<_>>()?;
        Ok(CorrElement { components })
    }
}
