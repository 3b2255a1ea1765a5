//! Finitely presented one-sided subshifts.
//!
//! Every presentation is reduced to a *tail automaton*: a finite list of
//! realizable [`TailType`]s together with a partial map
//! `prepend(a, t)` = tail type of `ax` for `x` of type `t` (undefined when
//! `ax ∉ X`). Whether `μx ∈ X` is then decided by prepending the letters of
//! `μ` right to left, which is all the operator-algebraic layers need.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::sofic::Graph;
use crate::word::{Alphabet, Symbol, Word};

/// Index into [`Subshift::realizable_tail_types`].
pub type TailId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub label: Symbol,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// Points avoid every listed word.
    ForbiddenWords(Vec<Word>),
    /// `matrix[a][b]` says whether `b` may follow `a`.
    VertexShift(Vec<Vec<bool>>),
    /// Labels of infinite paths.
    LabeledGraph {
        vertices: Vec<String>,
        edges: Vec<Edge>,
    },
}

/// Finite abstraction of a point `x`, enough to decide `μx ∈ X` for all `μ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TailType {
    /// The first `M` letters of `x` for a shift of finite type with memory `M`.
    SftWindow(Word),
    /// `{q : x is readable from q}`, sorted.
    SoficStateSet(Vec<usize>),
}

/// Result of [`Subshift::tail_type_of_window`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowTail {
    Determined(TailId),
    /// The window does not pin down the tail type yet; carries the current
    /// candidate (the window itself or the current start-state set).
    Indeterminate(TailType),
}

#[derive(Clone, Debug)]
enum Model {
    Sft {
        memory: usize,
        forbidden: Vec<Word>,
        live: BTreeSet<Word>,
    },
    Sofic(Graph),
}

#[derive(Clone, Debug)]
pub struct Subshift {
    alphabet: Alphabet,
    presentation: Presentation,
    model: Model,
    tails: Vec<TailType>,
    /// `prepend[t][a]`.
    prepend: Vec<Vec<Option<TailId>>>,
}

fn has_forbidden_factor(w: &Word, forbidden: &[Word]) -> bool {
    forbidden.iter().any(|f| w.contains_factor(f))
}

impl Subshift {
    pub fn new(alphabet: Alphabet, presentation: Presentation) -> Result<Self> {
        match &presentation {
            Presentation::ForbiddenWords(words) => {
                let words = words.clone();
                Self::sft(alphabet, presentation, words)
            }
            Presentation::VertexShift(matrix) => {
                let n = alphabet.len();
                if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidPresentation(alloc::format!(
                        "vertex shift matrix must be {n}x{n}"
                    )));
                }
                let mut forbidden = Vec::new();
                for a in alphabet.symbols() {
                    for b in alphabet.symbols() {
                        if !matrix[a.index()][b.index()] {
                            forbidden.push(Word::from_symbols(alloc::vec![a, b]));
                        }
                    }
                }
                Self::sft(alphabet, presentation, forbidden)
            }
            Presentation::LabeledGraph { vertices, edges } => {
                for e in edges {
                    if e.from >= vertices.len() || e.to >= vertices.len() {
                        return Err(Error::InvalidPresentation(
                            "edge endpoint out of range".to_string(),
                        ));
                    }
                    if !alphabet.contains(e.label) {
                        return Err(Error::ForeignSymbol(e.label.0));
                    }
                }
                let n = vertices.len();
                let graph = Graph::trimmed(n, alphabet.len(), edges);
                if graph.is_empty() {
                    return Err(Error::EmptyShift);
                }
                let sets = graph.realizable_state_sets();
                let mut tails: Vec<TailType> = sets
                    .iter()
                    .map(|s| TailType::SoficStateSet(s.iter().copied().collect()))
                    .collect();
                tails.sort();
                let mut prepend = Vec::with_capacity(tails.len());
                for t in &tails {
                    let TailType::SoficStateSet(q) = t else {
                        unreachable!()
                    };
                    let q = q.iter().copied().collect();
                    let mut row = Vec::with_capacity(alphabet.len());
                    for a in alphabet.symbols() {
                        let pre = graph.predecessors(a, &q);
                        if pre.is_empty() {
                            row.push(None);
                            continue;
                        }
                        let key = TailType::SoficStateSet(pre.into_iter().collect());
                        match tails.binary_search(&key) {
                            Ok(i) => row.push(Some(i)),
                            Err(_) => {
                                return Err(Error::InvalidPresentation(
                                    "realizable state sets not closed under prepending".to_string(),
                                ))
                            }
                        }
                    }
                    prepend.push(row);
                }
                Ok(Subshift {
                    alphabet,
                    presentation,
                    model: Model::Sofic(graph),
                    tails,
                    prepend,
                })
            }
        }
    }

    fn sft(alphabet: Alphabet, presentation: Presentation, forbidden: Vec<Word>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for f in &forbidden {
            if f.is_empty() {
                return Err(Error::InvalidPresentation(
                    "forbidden words must be nonempty".to_string(),
                ));
            }
            alphabet.check_word(f)?;
            if !seen.insert(f.clone()) {
                return Err(Error::InvalidPresentation(alloc::format!(
                    "duplicate forbidden word {}",
                    alphabet.format_word(f)
                )));
            }
        }
        let memory = forbidden.iter().map(Word::len).max().unwrap_or(1) - 1;

        let mut windows = alloc::vec![Word::empty()];
        for _ in 0..memory {
            let mut next = Vec::new();
            for w in &windows {
                for a in alphabet.symbols() {
                    let wa = w.append(a);
                    if !has_forbidden_factor(&wa, &forbidden) {
                        next.push(wa);
                    }
                }
            }
            windows = next;
        }
        let step = |w: &Word, a: Symbol| -> Option<Word> {
            let wa = w.append(a);
            if has_forbidden_factor(&wa, &forbidden) {
                None
            } else {
                Some(wa.drop_prefix(1))
            }
        };
        let mut live: BTreeSet<Word> = windows.iter().cloned().collect();
        loop {
            let dead: Vec<Word> = live
                .iter()
                .filter(|w| {
                    !alphabet
                        .symbols()
                        .any(|a| step(w, a).is_some_and(|n| live.contains(&n)))
                })
                .cloned()
                .collect();
            if dead.is_empty() {
                break;
            }
            for d in dead {
                live.remove(&d);
            }
        }
        if live.is_empty() {
            return Err(Error::EmptyShift);
        }
        let tails: Vec<TailType> = live.iter().cloned().map(TailType::SftWindow).collect();
        let window_list: Vec<Word> = live.iter().cloned().collect();
        let mut prepend = Vec::with_capacity(tails.len());
        for w in &window_list {
            let mut row = Vec::with_capacity(alphabet.len());
            for a in alphabet.symbols() {
                let aw = w.prepend(a);
                if has_forbidden_factor(&aw, &forbidden) {
                    row.push(None);
                } else {
                    row.push(window_list.binary_search(&aw.prefix(memory)).ok());
                }
            }
            prepend.push(row);
        }
        Ok(Subshift {
            alphabet,
            presentation,
            model: Model::Sft {
                memory,
                forbidden,
                live,
            },
            tails,
            prepend,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Memory `M` for shifts of finite type, `None` for sofic presentations.
    pub fn memory(&self) -> Option<usize> {
        match &self.model {
            Model::Sft { memory, .. } => Some(*memory),
            Model::Sofic(_) => None,
        }
    }

    pub fn is_sft(&self) -> bool {
        self.memory().is_some()
    }

    pub fn is_in_language(&self, w: &Word) -> Result<bool> {
        self.alphabet.check_word(w)?;
        Ok(match &self.model {
            Model::Sft {
                memory,
                forbidden,
                live,
            } => {
                if has_forbidden_factor(w, forbidden) {
                    false
                } else if w.len() >= *memory {
                    live.contains(&w.drop_prefix(w.len() - memory))
                } else {
                    live.iter().any(|v| v.starts_with(w))
                }
            }
            Model::Sofic(g) => w.is_empty() || g.reads(w),
        })
    }

    /// `L^k(X)` in lexicographic order.
    pub fn enumerate_language(&self, k: usize) -> Vec<Word> {
        let mut out = alloc::vec![Word::empty()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &out {
                for a in self.alphabet.symbols() {
                    let wa = w.append(a);
                    if self.is_in_language(&wa).unwrap_or(false) {
                        next.push(wa);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// `L_n(X)`: all legal words of length at most `n`, shortest first.
    pub fn language_up_to(&self, n: usize) -> Vec<Word> {
        (0..=n).flat_map(|k| self.enumerate_language(k)).collect()
    }

    pub fn realizable_tail_types(&self) -> &[TailType] {
        &self.tails
    }

    pub fn tail_count(&self) -> usize {
        self.tails.len()
    }

    pub fn tail_type(&self, t: TailId) -> &TailType {
        &self.tails[t]
    }

    /// Tail type of `ax` given the tail type of `x`; `None` if `ax ∉ X`.
    pub fn prepend(&self, a: Symbol, t: TailId) -> Option<TailId> {
        self.prepend[t][a.index()]
    }

    /// Tail type of `wx`; `None` if `wx ∉ X`.
    pub fn prepend_word(&self, w: &Word, t: TailId) -> Option<TailId> {
        w.iter().rev().try_fold(t, |t, a| self.prepend(a, t))
    }

    /// The tail type shared by all points with prefix `w`.
    pub fn tail_type_of_window(&self, w: &Word) -> Result<WindowTail> {
        if !self.is_in_language(w)? {
            return Err(Error::NotInLanguage(self.alphabet.format_word(w)));
        }
        match &self.model {
            Model::Sft { memory, .. } => {
                if w.len() < *memory {
                    return Ok(WindowTail::Indeterminate(TailType::SftWindow(w.clone())));
                }
                let key = TailType::SftWindow(w.prefix(*memory));
                let id = self
                    .tails
                    .binary_search(&key)
                    .expect("window of a legal word is live");
                Ok(WindowTail::Determined(id))
            }
            Model::Sofic(g) => match g.stable_start_set(w) {
                Ok(q) => {
                    let key = TailType::SoficStateSet(q.into_iter().collect());
                    let id = self
                        .tails
                        .binary_search(&key)
                        .expect("stable start set is realizable");
                    Ok(WindowTail::Determined(id))
                }
                Err(q) => Ok(WindowTail::Indeterminate(TailType::SoficStateSet(
                    q.into_iter().collect(),
                ))),
            },
        }
    }

    /// `P_l(t) = {μ : |μ| ≤ l, μx ∈ X}` for `x` of tail type `t`. Always
    /// contains the empty word.
    pub fn left_extensions(&self, t: TailId, l: usize) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        let mut frontier = alloc::vec![(Word::empty(), t)];
        out.insert(Word::empty());
        for _ in 0..l {
            let mut next = Vec::new();
            for (w, s) in &frontier {
                for a in self.alphabet.symbols() {
                    if let Some(s2) = self.prepend(a, *s) {
                        let aw = w.prepend(a);
                        out.insert(aw.clone());
                        next.push((aw, s2));
                    }
                }
            }
            frontier = next;
        }
        out
    }

    pub fn format_tail(&self, t: TailId) -> String {
        match &self.tails[t] {
            TailType::SftWindow(w) => alloc::format!("window {}", self.alphabet.format_word(w)),
            TailType::SoficStateSet(q) => {
                let names: Vec<String> = match &self.presentation {
                    Presentation::LabeledGraph { vertices, .. } => {
                        q.iter().map(|v| vertices[*v].clone()).collect()
                    }
                    _ => q.iter().map(|v| alloc::format!("{v}")).collect(),
                };
                alloc::format!("states {{{}}}", names.join(","))
            }
        }
    }
}

/// Small shifts used throughout the tests and documentation.
pub mod desk {
    use super::*;

    /// Full shift on `n` letters `0..n`.
    pub fn full_shift(n: usize) -> Subshift {
        let tokens: Vec<String> = (0..n).map(|i| alloc::format!("{i}")).collect();
        let alphabet = Alphabet::new(&tokens).expect("valid alphabet");
        Subshift::new(alphabet, Presentation::ForbiddenWords(Vec::new())).expect("full shift")
    }

    /// Binary sequences without two consecutive ones.
    pub fn golden_mean() -> Subshift {
        let alphabet = Alphabet::new(&["0", "1"]).expect("valid alphabet");
        let f = alphabet.parse_word("11").expect("word");
        Subshift::new(alphabet, Presentation::ForbiddenWords(alloc::vec![f])).expect("golden mean")
    }

    /// The even shift: between two ones an even number of zeros.
    /// Vertex `A` carries a `1`-loop and `A -0-> B -0-> A`.
    pub fn even_shift() -> Subshift {
        let alphabet = Alphabet::new(&["0", "1"]).expect("valid alphabet");
        let edges = alloc::vec![
            Edge {
                from: 0,
                label: Symbol(1),
                to: 0
            },
            Edge {
                from: 0,
                label: Symbol(0),
                to: 1
            },
            Edge {
                from: 1,
                label: Symbol(0),
                to: 0
            },
        ];
        Subshift::new(
            alphabet,
            Presentation::LabeledGraph {
                vertices: alloc::vec!["A".to_string(), "B".to_string()],
                edges,
            },
        )
        .expect("even shift")
    }

    /// The single point `aaa…`.
    pub fn one_point() -> Subshift {
        let alphabet = Alphabet::new(&["a"]).expect("valid alphabet");
        Subshift::new(alphabet, Presentation::ForbiddenWords(Vec::new())).expect("one point")
    }

    /// Two-block presentation of the golden mean shift as a vertex shift on
    /// the edges `a = [00]`, `b = [01]`, `c = [10]`.
    pub fn golden_mean_two_block() -> Subshift {
        let alphabet = Alphabet::new(&["a", "b", "c"]).expect("valid alphabet");
        let matrix = alloc::vec![
            alloc::vec![true, true, false],
            alloc::vec![false, false, true],
            alloc::vec![true, true, false],
        ];
        Subshift::new(alphabet, Presentation::VertexShift(matrix)).expect("two-block shift")
    }
}
