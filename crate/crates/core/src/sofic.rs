//! Labeled-graph machinery behind sofic presentations: trimming, the
//! finite monoid of transition relations, and detection of the state sets
//! `Q(x) = {q : x is readable from q}` that actually occur.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::shift::Edge;
use crate::word::{Symbol, Word};

pub(crate) type StateSet = BTreeSet<usize>;

/// `rows[p]` is the set of vertices reachable from `p` along a path with a
/// fixed label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub(crate) struct Relation {
    rows: Vec<StateSet>,
}

impl Relation {
    pub(crate) fn domain(&self) -> StateSet {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .map(|(p, _)| p)
            .collect()
    }

    fn compose(&self, next: &Relation) -> Relation {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .flat_map(|q| next.rows[*q].iter().copied())
                    .collect()
            })
            .collect();
        Relation { rows }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Graph {
    vertices: usize,
    /// `succ[v][a]`: targets of `a`-labelled edges leaving live vertex `v`.
    succ: Vec<Vec<Vec<usize>>>,
    live: Vec<bool>,
}

impl Graph {
    /// Builds the graph and removes vertices with no infinite forward path.
    /// Vertices without incoming edges are kept: one-sided points may start
    /// anywhere.
    pub(crate) fn trimmed(vertices: usize, alphabet: usize, edges: &[Edge]) -> Graph {
        let mut live = alloc::vec![true; vertices];
        loop {
            let mut changed = false;
            for v in 0..vertices {
                if live[v] && !edges.iter().any(|e| e.from == v && live[e.to]) {
                    live[v] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut succ = alloc::vec![alloc::vec![Vec::new(); alphabet]; vertices];
        for e in edges {
            if live[e.from] && live[e.to] {
                let slot: &mut Vec<usize> = &mut succ[e.from][e.label.index()];
                if !slot.contains(&e.to) {
                    slot.push(e.to);
                }
            }
        }
        for row in &mut succ {
            for targets in row.iter_mut() {
                targets.sort_unstable();
            }
        }
        Graph {
            vertices,
            succ,
            live,
        }
    }

    pub(crate) fn is_empty(&self) -> bool {
        !self.live.iter().any(|l| *l)
    }

    fn alphabet(&self) -> usize {
        self.succ.first().map_or(0, |r| r.len())
    }

    fn identity(&self) -> Relation {
        let rows = (0..self.vertices)
            .map(|p| {
                if self.live[p] {
                    core::iter::once(p).collect()
                } else {
                    StateSet::new()
                }
            })
            .collect();
        Relation { rows }
    }

    fn generator(&self, a: Symbol) -> Relation {
        let rows = (0..self.vertices)
            .map(|p| self.succ[p][a.index()].iter().copied().collect())
            .collect();
        Relation { rows }
    }

    pub(crate) fn relation(&self, w: &Word) -> Relation {
        w.iter()
            .fold(self.identity(), |r, a| r.compose(&self.generator(a)))
    }

    /// Is `w` the label of some path (hence of some infinite path)?
    pub(crate) fn reads(&self, w: &Word) -> bool {
        let mut current: StateSet = (0..self.vertices).filter(|v| self.live[*v]).collect();
        for a in w.iter() {
            current = current
                .iter()
                .flat_map(|p| self.succ[*p][a.index()].iter().copied())
                .collect();
            if current.is_empty() {
                return false;
            }
        }
        !current.is_empty()
    }

    /// `{p : some edge p -a-> q with q in targets}`.
    pub(crate) fn predecessors(&self, a: Symbol, targets: &StateSet) -> StateSet {
        (0..self.vertices)
            .filter(|p| self.succ[*p][a.index()].iter().any(|q| targets.contains(q)))
            .collect()
    }

    /// Elements of the transition monoid reachable from `start` by right
    /// multiplication, with their successor lists. Elements with empty domain
    /// (words outside the language) are dropped.
    fn explore(&self, start: Relation) -> (Vec<Relation>, Vec<Vec<usize>>) {
        let gens: Vec<Relation> = (0..self.alphabet() as u16)
            .map(|a| self.generator(Symbol(a)))
            .collect();
        let mut index: BTreeMap<Relation, usize> = BTreeMap::new();
        let mut nodes = Vec::new();
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        index.insert(start.clone(), 0);
        nodes.push(start);
        edges.push(Vec::new());
        queue.push_back(0usize);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = nodes[i].compose(g);
                if next.domain().is_empty() {
                    continue;
                }
                let j = match index.get(&next) {
                    Some(j) => *j,
                    None => {
                        let j = nodes.len();
                        index.insert(next.clone(), j);
                        nodes.push(next);
                        edges.push(Vec::new());
                        queue.push_back(j);
                        j
                    }
                };
                edges[i].push(j);
            }
        }
        (nodes, edges)
    }

    /// All nonempty `Q` with `Q = Q(x)` for some point `x`.
    ///
    /// `Q(x)` is the eventual value of the decreasing sequence
    /// `dom R(x[0..n))`; it is realised exactly when the monoid elements with
    /// domain `Q` contain a cycle, i.e. an infinite word can keep the domain
    /// fixed forever.
    pub(crate) fn realizable_state_sets(&self) -> Vec<StateSet> {
        let (nodes, edges) = self.explore(self.identity());
        let mut groups: BTreeMap<StateSet, Vec<usize>> = BTreeMap::new();
        for (i, r) in nodes.iter().enumerate() {
            groups.entry(r.domain()).or_default().push(i);
        }
        let mut out = Vec::new();
        for (dom, members) in groups {
            let inside: BTreeSet<usize> = members.iter().copied().collect();
            // Peel off members with no successor left inside the group.
            let mut alive = inside.clone();
            loop {
                let dead: Vec<usize> = alive
                    .iter()
                    .copied()
                    .filter(|i| !edges[*i].iter().any(|j| alive.contains(j)))
                    .collect();
                if dead.is_empty() {
                    break;
                }
                for d in dead {
                    alive.remove(&d);
                }
            }
            if !alive.is_empty() {
                out.push(dom);
            }
        }
        out
    }

    /// `Some(Q)` when every extension of `w` in the language keeps the start
    /// set `dom R(w)`; otherwise `Err(dom R(w))`.
    pub(crate) fn stable_start_set(&self, w: &Word) -> core::result::Result<StateSet, StateSet> {
        let start = self.relation(w);
        let dom = start.domain();
        let (nodes, _) = self.explore(start);
        if nodes.iter().all(|r| r.domain() == dom) {
            Ok(dom)
        } else {
            Err(dom)
        }
    }
}
