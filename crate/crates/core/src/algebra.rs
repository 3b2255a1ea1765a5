//! Finite snapshots `D̃_k^l` of the commutative algebra generated by the
//! conditioned cylinders `C(μ,ν) = {νx ∈ X : μx ∈ X}`.
//!
//! Tail types are grouped into classes by their length-`l` left extension
//! sets `P_l`; these classes are the atoms of `Ã_l`. An atom of `D̃_k^l` is a
//! pair `(ν, i)` with `|ν| = k` standing for `C(ν) ∩ σ^{-k}(ℰ_i^l)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::shift::{Subshift, TailId};
use crate::word::{Symbol, Word};

/// Default cap on the number of atoms of a single level.
pub const DEFAULT_MAX_ATOMS: usize = 1 << 16;

/// A snapshot level `(k,l)` with `k <= l`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Level {
    pub k: usize,
    pub l: usize,
}

impl Level {
    pub fn new(k: usize, l: usize) -> Result<Level> {
        if k > l {
            return Err(Error::InvalidLevel { k, l });
        }
        Ok(Level { k, l })
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

/// `C(nu) ∩ σ^{-|nu|}(ℰ_cls^l)` at some level `(|nu|, l)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Atom {
    pub nu: Word,
    pub cls: usize,
}

/// The conditioned cylinder `C(mu, nu)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasicSet {
    pub mu: Word,
    pub nu: Word,
}

impl BasicSet {
    pub fn new(mu: Word, nu: Word) -> Self {
        BasicSet { mu, nu }
    }

    /// `C(nu) = C(ε, nu)`.
    pub fn cylinder(nu: Word) -> Self {
        BasicSet {
            mu: Word::empty(),
            nu,
        }
    }

    /// `σ^{|mu|}(C(mu)) = C(mu, ε)`.
    pub fn shifted_cylinder(mu: Word) -> Self {
        BasicSet {
            mu,
            nu: Word::empty(),
        }
    }
}

/// A point given as `prefix · x` with `x` any point of tail type `tail`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub prefix: Word,
    pub tail: TailId,
}

/// A function on `X` that is constant on the atoms of its level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    level: Level,
    coeffs: BTreeMap<Atom, Scalar>,
}

impl AlgebraElement {
    pub fn zero(level: Level) -> Self {
        AlgebraElement {
            level,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, atom: &Atom) -> Scalar {
        self.coeffs.get(atom).copied().unwrap_or_default()
    }

    /// Nonzero coefficients in atom order.
    pub fn terms(&self) -> impl Iterator<Item = (&Atom, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Atom> {
        self.coeffs.keys()
    }

    /// All coefficients are `1`.
    pub fn is_indicator(&self) -> bool {
        self.coeffs.values().all(Scalar::is_one)
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let mut out = AlgebraElement::zero(self.level);
        if !c.is_zero() {
            for (a, v) in &self.coeffs {
                out.coeffs.insert(a.clone(), *v * c);
            }
        }
        out
    }

    /// Pointwise complex conjugate.
    pub fn adjoint(&self) -> Self {
        AlgebraElement {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .map(|(a, v)| (a.clone(), v.conj()))
                .collect(),
        }
    }

    fn insert(&mut self, atom: Atom, v: Scalar) {
        if !v.is_zero() {
            self.coeffs.insert(atom, v);
        }
    }
}

/// The tower of snapshot algebras of a subshift.
#[derive(Debug)]
pub struct CylinderAlgebra {
    shift: Subshift,
    /// `classes[l][t]` for `l <= l_stab`.
    classes: Vec<Vec<usize>>,
    /// `reps[l][i]`: smallest tail id in class `i`.
    reps: Vec<Vec<TailId>>,
    l_stab: usize,
    max_atoms: usize,
    atom_cache: RefCell<BTreeMap<Level, Rc<Vec<Atom>>>>,
}

impl Clone for CylinderAlgebra {
    fn clone(&self) -> Self {
        CylinderAlgebra {
            shift: self.shift.clone(),
            classes: self.classes.clone(),
            reps: self.reps.clone(),
            l_stab: self.l_stab,
            max_atoms: self.max_atoms,
            atom_cache: RefCell::new(BTreeMap::new()),
        }
    }
}

impl CylinderAlgebra {
    pub fn new(shift: Subshift) -> Self {
        Self::with_max_atoms(shift, DEFAULT_MAX_ATOMS)
    }

    pub fn with_max_atoms(shift: Subshift, max_atoms: usize) -> Self {
        let n = shift.tail_count();
        let letters: Vec<Symbol> = shift.alphabet().symbols().collect();
        let mut classes = alloc::vec![alloc::vec![0usize; n]];
        let mut reps = alloc::vec![alloc::vec![0usize]];
        loop {
            let prev = classes.last().expect("level 0 exists");
            let mut index: BTreeMap<(usize, Vec<Option<usize>>), usize> = BTreeMap::new();
            let mut next = Vec::with_capacity(n);
            let mut next_reps = Vec::new();
            for t in 0..n {
                let sig: Vec<Option<usize>> = letters
                    .iter()
                    .map(|a| shift.prepend(*a, t).map(|s| prev[s]))
                    .collect();
                let fresh = index.len();
                let c = *index.entry((prev[t], sig)).or_insert(fresh);
                if c == fresh {
                    next_reps.push(t);
                }
                next.push(c);
            }
            if next_reps.len() == reps.last().expect("level 0 exists").len() {
                break;
            }
            classes.push(next);
            reps.push(next_reps);
        }
        let l_stab = classes.len() - 1;
        CylinderAlgebra {
            shift,
            classes,
            reps,
            l_stab,
            max_atoms,
            atom_cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn shift(&self) -> &Subshift {
        &self.shift
    }

    pub fn max_atoms(&self) -> usize {
        self.max_atoms
    }

    /// First `l` from which the class partition no longer changes.
    pub fn stable_level(&self) -> usize {
        self.l_stab
    }

    /// `m(l)`, the number of atoms of `Ã_l`.
    pub fn class_count(&self, l: usize) -> usize {
        self.reps[l.min(self.l_stab)].len()
    }

    pub fn class_of(&self, l: usize, t: TailId) -> usize {
        self.classes[l.min(self.l_stab)][t]
    }

    pub fn representative(&self, l: usize, cls: usize) -> TailId {
        self.reps[l.min(self.l_stab)][cls]
    }

    /// Tail types belonging to class `cls` at level `l`.
    pub fn class_members(&self, l: usize, cls: usize) -> Vec<TailId> {
        let row = &self.classes[l.min(self.l_stab)];
        (0..row.len()).filter(|t| row[*t] == cls).collect()
    }

    /// `P_l` shared by the members of class `cls`.
    pub fn class_left_extensions(&self, l: usize, cls: usize) -> BTreeSet<Word> {
        self.shift.left_extensions(self.representative(l, cls), l)
    }

    /// Atoms of `Ã_l`, i.e. the level `(0,l)`.
    pub fn atoms_a(&self, l: usize) -> Vec<Atom> {
        (0..self.class_count(l))
            .map(|cls| Atom {
                nu: Word::empty(),
                cls,
            })
            .collect()
    }

    /// Nonempty atoms of `D̃_k^l`, ordered by `(nu, cls)`.
    pub fn atoms(&self, level: Level) -> Result<Rc<Vec<Atom>>> {
        Level::new(level.k, level.l)?;
        if let Some(a) = self.atom_cache.borrow().get(&level) {
            return Ok(a.clone());
        }
        let m = self.class_count(level.l);
        // Breadth-first over prepended words, tracking the tail type of νx.
        let mut frontier: Vec<(Word, Vec<Option<TailId>>)> = alloc::vec![(
            Word::empty(),
            (0..m)
                .map(|i| Some(self.representative(level.l, i)))
                .collect()
        )];
        for _ in 0..level.k {
            let mut next = Vec::new();
            for (w, tails) in &frontier {
                for a in self.shift.alphabet().symbols() {
                    let t2: Vec<Option<TailId>> = tails
                        .iter()
                        .map(|t| t.and_then(|t| self.shift.prepend(a, t)))
                        .collect();
                    if t2.iter().any(Option::is_some) {
                        next.push((w.prepend(a), t2));
                    }
                }
            }
            if next.len() > self.max_atoms {
                return Err(Error::LevelOverflow {
                    level,
                    atoms: next.len(),
                    cap: self.max_atoms,
                });
            }
            frontier = next;
        }
        let mut out = Vec::new();
        for (nu, tails) in frontier {
            for (cls, t) in tails.iter().enumerate() {
                if t.is_some() {
                    out.push(Atom {
                        nu: nu.clone(),
                        cls,
                    });
                }
            }
        }
        if out.len() > self.max_atoms {
            return Err(Error::LevelOverflow {
                level,
                atoms: out.len(),
                cap: self.max_atoms,
            });
        }
        out.sort();
        let out = Rc::new(out);
        self.atom_cache.borrow_mut().insert(level, out.clone());
        Ok(out)
    }

    /// Can an element of `from` be re-expressed at `to`?
    pub fn refines(&self, from: Level, to: Level) -> bool {
        to.k >= from.k && to.l >= to.k && to.l >= (from.l + to.k - from.k).min(self.l_stab)
    }

    /// Smallest common refinement of two levels.
    pub fn join(&self, a: Level, b: Level) -> Level {
        let k = a.k.max(b.k);
        let need = |x: Level| (x.l + k - x.k).min(self.l_stab);
        Level {
            k,
            l: k.max(need(a)).max(need(b)),
        }
    }

    /// The atom of `coarse` containing the atom `fine` of level `fine_level`.
    fn source_atom(&self, fine: &Atom, fine_level: Level, coarse: Level) -> Atom {
        let rest = fine.nu.drop_prefix(coarse.k);
        let t = self
            .shift
            .prepend_word(&rest, self.representative(fine_level.l, fine.cls))
            .expect("atoms are nonempty");
        Atom {
            nu: fine.nu.prefix(coarse.k),
            cls: self.class_of(coarse.l, t),
        }
    }

    /// Re-expresses `f` at a finer level.
    pub fn promote(&self, f: &AlgebraElement, to: Level) -> Result<AlgebraElement> {
        if f.level == to {
            return Ok(f.clone());
        }
        if !self.refines(f.level, to) {
            return Err(Error::LevelTooShallow {
                have: to,
                need: self.join(f.level, to),
            });
        }
        let mut out = AlgebraElement::zero(to);
        if f.is_zero() {
            return Ok(out);
        }
        for atom in self.atoms(to)?.iter() {
            let v = f.coeff(&self.source_atom(atom, to, f.level));
            out.insert(atom.clone(), v);
        }
        Ok(out)
    }

    /// `ι_k`: the same function at `(k+1, l+1)`.
    pub fn iota(&self, f: &AlgebraElement) -> Result<AlgebraElement> {
        self.promote(
            f,
            Level {
                k: f.level.k + 1,
                l: f.level.l + 1,
            },
        )
    }

    /// `Ã_l ⊆ Ã_{l+1}`.
    pub fn refine_a(&self, f: &AlgebraElement) -> Result<AlgebraElement> {
        if f.level.k != 0 {
            return Err(Error::LevelMismatch {
                left: f.level,
                right: Level { k: 0, l: f.level.l },
            });
        }
        self.promote(
            f,
            Level {
                k: 0,
                l: f.level.l + 1,
            },
        )
    }

    fn zip(
        &self,
        f: &AlgebraElement,
        g: &AlgebraElement,
        op: impl Fn(Scalar, Scalar) -> Scalar,
    ) -> Result<AlgebraElement> {
        let level = self.join(f.level, g.level);
        let (f, g) = (self.promote(f, level)?, self.promote(g, level)?);
        let mut out = AlgebraElement::zero(level);
        let keys: BTreeSet<&Atom> = f.coeffs.keys().chain(g.coeffs.keys()).collect();
        for a in keys {
            out.insert(a.clone(), op(f.coeff(a), g.coeff(a)));
        }
        Ok(out)
    }

    pub fn add(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
        self.zip(f, g, |x, y| x + y)
    }

    pub fn sub(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
        self.zip(f, g, |x, y| x - y)
    }

    pub fn mul(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
        if f.is_zero() || g.is_zero() {
            return Ok(AlgebraElement::zero(self.join(f.level, g.level)));
        }
        self.zip(f, g, |x, y| x * y)
    }

    /// Equality as functions on `X`.
    pub fn equal(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<bool> {
        Ok(self.sub(f, g)?.is_zero())
    }

    pub fn unit(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero(Level { k: 0, l: 0 });
        out.insert(
            Atom {
                nu: Word::empty(),
                cls: 0,
            },
            Scalar::one(),
        );
        out
    }

    /// Indicator of one atom.
    pub fn atom_indicator(&self, level: Level, atom: Atom) -> Result<AlgebraElement> {
        if !self.atoms(level)?.contains(&atom) {
            return Err(Error::InvalidPresentation(
                "atom does not belong to the level".into(),
            ));
        }
        let mut out = AlgebraElement::zero(level);
        out.insert(atom, Scalar::one());
        Ok(out)
    }

    /// Builds an element from explicit coefficients, dropping zeros.
    pub fn from_coeffs(
        &self,
        level: Level,
        coeffs: impl IntoIterator<Item = (Atom, Scalar)>,
    ) -> Result<AlgebraElement> {
        let atoms = self.atoms(level)?;
        let mut out = AlgebraElement::zero(level);
        for (a, v) in coeffs {
            if atoms.binary_search(&a).is_err() {
                return Err(Error::InvalidPresentation(
                    "atom does not belong to the level".into(),
                ));
            }
            out.insert(a, v);
        }
        Ok(out)
    }

    /// Smallest level at which `C(mu, nu)` is an atom union.
    pub fn natural_level(&self, b: &BasicSet) -> Level {
        let k = b.nu.len();
        Level {
            k,
            l: k.max((k + b.mu.len()).min(self.l_stab)),
        }
    }

    /// Indicator of `C(mu, nu)` at `level`.
    pub fn embed_basic(&self, b: &BasicSet, level: Level) -> Result<AlgebraElement> {
        Level::new(level.k, level.l)?;
        let need = self.natural_level(b);
        if !self.refines(need, level) {
            return Err(Error::LevelTooShallow {
                have: level,
                need: self.join(need, level),
            });
        }
        let mut out = AlgebraElement::zero(level);
        let j = b.nu.len();
        for atom in self.atoms(level)?.iter() {
            if !atom.nu.starts_with(&b.nu) {
                continue;
            }
            let w = b.mu.concat(&atom.nu.drop_prefix(j));
            if self
                .shift
                .prepend_word(&w, self.representative(level.l, atom.cls))
                .is_some()
            {
                out.insert(atom.clone(), Scalar::one());
            }
        }
        Ok(out)
    }

    /// Indicator of `C(mu, nu)` at its natural level.
    pub fn basic(&self, b: &BasicSet) -> Result<AlgebraElement> {
        self.embed_basic(b, self.natural_level(b))
    }

    /// `1_{σ^{|mu|}(C(mu))}`.
    pub fn a_mu(&self, mu: &Word) -> Result<AlgebraElement> {
        self.basic(&BasicSet::shifted_cylinder(mu.clone()))
    }

    /// `f(point)`.
    pub fn evaluate(&self, f: &AlgebraElement, p: &Point) -> Result<Scalar> {
        let level = f.level;
        if p.prefix.len() < level.k {
            return Err(Error::LevelTooShallow {
                have: Level {
                    k: p.prefix.len(),
                    l: level.l,
                },
                need: level,
            });
        }
        if self.shift.prepend_word(&p.prefix, p.tail).is_none() {
            return Err(Error::NotInLanguage(
                self.shift.alphabet().format_word(&p.prefix),
            ));
        }
        let rest = p.prefix.drop_prefix(level.k);
        let t = self
            .shift
            .prepend_word(&rest, p.tail)
            .expect("suffix of a legal point");
        Ok(f.coeff(&Atom {
            nu: p.prefix.prefix(level.k),
            cls: self.class_of(level.l, t),
        }))
    }

    /// Is `f` representable at `level`?
    pub fn representable_at(&self, f: &AlgebraElement, level: Level) -> Result<bool> {
        if level.k > level.l {
            return Ok(false);
        }
        let j = self.join(f.level, level);
        let fine = self.promote(f, j)?;
        let mut seen: BTreeMap<Atom, Scalar> = BTreeMap::new();
        for atom in self.atoms(j)?.iter() {
            let src = self.source_atom(atom, j, level);
            let v = fine.coeff(atom);
            match seen.get(&src) {
                Some(w) if *w != v => return Ok(false),
                Some(_) => {}
                None => {
                    seen.insert(src, v);
                }
            }
        }
        Ok(true)
    }

    /// Re-expresses `f` at the least level (smallest `k`, then smallest `l`)
    /// where it is representable. The result depends only on `f` as a
    /// function on `X`.
    pub fn coarsen(&self, f: &AlgebraElement) -> Result<AlgebraElement> {
        let level = f.level;
        if f.is_zero() {
            return Ok(AlgebraElement::zero(Level { k: 0, l: 0 }));
        }
        for k in 0..=level.k {
            for l in k..=k.max(level.l).max(self.l_stab) {
                let cand = Level { k, l };
                if cand == level {
                    return Ok(f.clone());
                }
                if self.representable_at(f, cand)? {
                    return self.restrict(f, cand);
                }
            }
        }
        Ok(f.clone())
    }

    /// Reads off the coefficients of `f` on the atoms of a coarser level at
    /// which it is known to be representable.
    fn restrict(&self, f: &AlgebraElement, to: Level) -> Result<AlgebraElement> {
        let j = self.join(f.level, to);
        let fine = self.promote(f, j)?;
        let mut out = AlgebraElement::zero(to);
        for atom in self.atoms(j)?.iter() {
            let v = fine.coeff(atom);
            if !v.is_zero() {
                out.coeffs.insert(self.source_atom(atom, j, to), v);
            }
        }
        Ok(out)
    }

    /// Every point of `X` restricted to its atom at `level`: one sample
    /// `Point` per atom.
    pub fn sample_points(&self, level: Level) -> Result<Vec<Point>> {
        Ok(self
            .atoms(level)?
            .iter()
            .map(|a| Point {
                prefix: a.nu.clone(),
                tail: self.representative(level.l, a.cls),
            })
            .collect())
    }
}
