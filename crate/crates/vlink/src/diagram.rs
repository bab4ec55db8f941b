//! Combinatorial virtual link diagrams: a rotation system of real and virtual
//! crossings together with a perfect matching of ports, plus the splice
//! machinery that turns a state into a collection of closed curves.
//!
//! Conventions, fixed once here and relied on everywhere else:
//! slots 0..3 are counterclockwise around a crossing; at a real crossing the
//! strand through slots 0,2 is the under-strand; an A-splice pairs {0,1},{2,3},
//! a B-splice pairs {0,3},{1,2}; a virtual crossing passes through {0,2},{1,3}.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("slot {slot} of crossing {crossing} is out of range (slots are 0..=3)")]
    BadSlot { crossing: usize, slot: u8 },
    #[error("crossing {crossing} does not exist (diagram has {count} crossings)")]
    BadCrossing { crossing: usize, count: usize },
    #[error("port {port} is used twice in the matching")]
    DuplicatePort { port: Port },
    #[error("port {port} is matched to itself")]
    SelfMatchedPort { port: Port },
    #[error("port {port} is dangling (not matched)")]
    DanglingPort { port: Port },
    #[error("a diagram with no crossings must record at least one free loop")]
    Empty,
    #[error("crossing {0} is not a real crossing")]
    NotReal(usize),
    #[error("crossing {0} is not a virtual crossing")]
    NotVirtual(usize),
    #[error("state does not match the diagram's real crossings")]
    StateMismatch,
}

/// One of the four arc ends at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Port {
    pub crossing: usize,
    pub slot: u8,
}

impl Port {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Self { crossing, slot }
    }

    fn index(self) -> usize {
        4 * self.crossing + self.slot as usize
    }

    fn from_index(i: usize) -> Self {
        Self { crossing: i / 4, slot: (i % 4) as u8 }
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.crossing, self.slot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CrossingKind {
    Real,
    Virtual,
}

/// The two smoothings of a real crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Splice {
    A,
    B,
}

impl Splice {
    pub fn flipped(self) -> Self {
        match self {
            Splice::A => Splice::B,
            Splice::B => Splice::A,
        }
    }
}

/// Which transversal strand becomes the under-strand when a virtual crossing
/// is turned back into a real one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RealizeChoice {
    /// Keep the slot layout: the 0-2 strand goes under.
    Strand02Under,
    /// Rotate the slot labels one step so the old 1-3 strand goes under.
    Strand13Under,
}

/// A virtual link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    kinds: Vec<CrossingKind>,
    /// Involution on port indices; `matching[p]` is the other end of p's arc.
    matching: Vec<usize>,
    free_loops: u32,
    real_ids: Vec<usize>,
}

impl Diagram {
    /// Builds and validates a diagram from its crossings and arc list.
    pub fn new(
        kinds: Vec<CrossingKind>,
        arcs: &[(Port, Port)],
        free_loops: u32,
    ) -> Result<Self, DiagramError> {
        let n = kinds.len();
        if n == 0 && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let mut matching = vec![usize::MAX; 4 * n];
        for &(a, b) in arcs {
            for p in [a, b] {
                if p.slot > 3 {
                    return Err(DiagramError::BadSlot { crossing: p.crossing, slot: p.slot });
                }
                if p.crossing >= n {
                    return Err(DiagramError::BadCrossing { crossing: p.crossing, count: n });
                }
            }
            if a == b {
                return Err(DiagramError::SelfMatchedPort { port: a });
            }
            for p in [a, b] {
                if matching[p.index()] != usize::MAX {
                    return Err(DiagramError::DuplicatePort { port: p });
                }
            }
            matching[a.index()] = b.index();
            matching[b.index()] = a.index();
        }
        if let Some(i) = matching.iter().position(|&m| m == usize::MAX) {
            return Err(DiagramError::DanglingPort { port: Port::from_index(i) });
        }
        let real_ids = kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == CrossingKind::Real)
            .map(|(i, _)| i)
            .collect();
        Ok(Self { kinds, matching, free_loops, real_ids })
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let n = self.kinds.len();
        if n == 0 && self.free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        if self.matching.len() != 4 * n {
            return Err(DiagramError::DanglingPort {
                port: Port::from_index(self.matching.len().min(4 * n)),
            });
        }
        for (i, &m) in self.matching.iter().enumerate() {
            if m >= 4 * n {
                return Err(DiagramError::DanglingPort { port: Port::from_index(i) });
            }
            if m == i {
                return Err(DiagramError::SelfMatchedPort { port: Port::from_index(i) });
            }
            if self.matching[m] != i {
                return Err(DiagramError::DuplicatePort { port: Port::from_index(m) });
            }
        }
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds.len()
    }

    /// c(D): the number of real crossings.
    pub fn real_crossing_count(&self) -> usize {
        self.real_ids.len()
    }

    pub fn virtual_crossing_count(&self) -> usize {
        self.kinds.len() - self.real_ids.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn kind(&self, crossing: usize) -> Option<CrossingKind> {
        self.kinds.get(crossing).copied()
    }

    pub fn kinds(&self) -> &[CrossingKind] {
        &self.kinds
    }

    /// Real crossing ids in ascending order.
    pub fn real_crossing_ids(&self) -> &[usize] {
        &self.real_ids
    }

    pub fn virtual_crossing_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == CrossingKind::Virtual)
            .map(|(i, _)| i)
    }

    /// The other end of the arc at `port`.
    pub fn matched(&self, port: Port) -> Port {
        Port::from_index(self.matching[port.index()])
    }

    /// The all-A state s_A.
    pub fn state_all_a(&self) -> State {
        State { choice: self.real_ids.iter().map(|&i| (i, Splice::A)).collect() }
    }

    /// The all-B state s_B.
    pub fn state_all_b(&self) -> State {
        State { choice: self.real_ids.iter().map(|&i| (i, Splice::B)).collect() }
    }

    fn check_state(&self, state: &State) -> Result<(), DiagramError> {
        if state.choice.len() != self.real_ids.len()
            || !self.real_ids.iter().all(|i| state.choice.contains_key(i))
        {
            return Err(DiagramError::StateMismatch);
        }
        Ok(())
    }

    /// Local pairing of slots at `crossing` under `splice` (ignored for
    /// virtual crossings, which always pass through).
    fn local_pairs(&self, crossing: usize, splice: Splice) -> [(u8, u8); 2] {
        match (self.kinds[crossing], splice) {
            (CrossingKind::Virtual, _) => [(0, 2), (1, 3)],
            (CrossingKind::Real, Splice::A) => [(0, 1), (2, 3)],
            (CrossingKind::Real, Splice::B) => [(0, 3), (1, 2)],
        }
    }

    /// Traces the closed curves of D(s) where the splice at each real crossing
    /// is given by `choice`. Returns the port labeling; free loops contribute
    /// to the count but have no ports.
    fn trace_components(&self, choice: impl Fn(usize) -> Splice) -> SplicedCurves {
        let n_ports = self.matching.len();
        let mut pair = vec![0usize; n_ports];
        for c in 0..self.kinds.len() {
            for (x, y) in self.local_pairs(c, choice(c)) {
                let (px, py) = (4 * c + x as usize, 4 * c + y as usize);
                pair[px] = py;
                pair[py] = px;
            }
        }
        let mut component_of = vec![usize::MAX; n_ports];
        let mut count = 0usize;
        for start in 0..n_ports {
            if component_of[start] != usize::MAX {
                continue;
            }
            // Each cycle alternates splice pairings and matching arcs; mark
            // both ends of a pairing so the cycle is consumed whole.
            let mut cur = start;
            while component_of[cur] == usize::MAX {
                component_of[cur] = count;
                component_of[pair[cur]] = count;
                cur = self.matching[pair[cur]];
            }
            count += 1;
        }
        SplicedCurves { component_count: count + self.free_loops as usize, component_of }
    }

    /// D(s): the curves obtained by performing the state's splice at each real
    /// crossing and passing through each virtual one.
    pub fn splice(&self, state: &State) -> Result<SplicedCurves, DiagramError> {
        self.check_state(state)?;
        Ok(self.trace_components(|c| state.choice.get(&c).copied().unwrap_or(Splice::A)))
    }

    /// Component count of D(s) with splices supplied per real-crossing index
    /// (position in `real_crossing_ids`). Fast path for state sums.
    pub(crate) fn component_count_by_index(&self, choice_at: impl Fn(usize) -> Splice) -> usize {
        let mut index_of = vec![0usize; self.kinds.len()];
        for (idx, &id) in self.real_ids.iter().enumerate() {
            index_of[id] = idx;
        }
        self.trace_components(|c| choice_at(index_of[c])).component_count
    }

    /// Replaces real crossing `p` with a virtual crossing, discarding the
    /// over/under data. Crossing ids are untouched.
    pub fn virtualize(&self, p: usize) -> Result<Diagram, DiagramError> {
        match self.kind(p) {
            None => Err(DiagramError::BadCrossing { crossing: p, count: self.kinds.len() }),
            Some(CrossingKind::Virtual) => Err(DiagramError::NotReal(p)),
            Some(CrossingKind::Real) => {
                let mut d = self.clone();
                d.kinds[p] = CrossingKind::Virtual;
                d.real_ids.retain(|&i| i != p);
                Ok(d)
            }
        }
    }

    /// Turns virtual crossing `v` into a real one. `Strand02Under` keeps the
    /// slot layout (exact inverse of `virtualize`); `Strand13Under` rotates
    /// the slot labels one step counterclockwise so the other strand goes
    /// under.
    pub fn realize(&self, v: usize, choice: RealizeChoice) -> Result<Diagram, DiagramError> {
        match self.kind(v) {
            None => Err(DiagramError::BadCrossing { crossing: v, count: self.kinds.len() }),
            Some(CrossingKind::Real) => Err(DiagramError::NotVirtual(v)),
            Some(CrossingKind::Virtual) => {
                let mut d = self.clone();
                d.kinds[v] = CrossingKind::Real;
                d.real_ids.push(v);
                d.real_ids.sort_unstable();
                if choice == RealizeChoice::Strand13Under {
                    // New slot k takes the arc of old slot k+1; rewire the
                    // matching through a temporary copy of the old row.
                    let old: Vec<usize> = (0..4).map(|s| self.matching[4 * v + s]).collect();
                    let remap = |q: usize| -> usize {
                        if q / 4 == v {
                            4 * v + (q % 4 + 3) % 4
                        } else {
                            q
                        }
                    };
                    for new_slot in 0..4 {
                        let target = remap(old[(new_slot + 1) % 4]);
                        d.matching[4 * v + new_slot] = target;
                        d.matching[target] = 4 * v + new_slot;
                    }
                }
                Ok(d)
            }
        }
    }

    /// The component ids of the two local strands created at real crossing `p`
    /// by the state's splice — the curves carrying the endpoints of the
    /// connecting arc at `p`.
    pub fn connecting_arc_components(
        &self,
        state: &State,
        p: usize,
    ) -> Result<(usize, usize), DiagramError> {
        if self.kind(p) != Some(CrossingKind::Real) {
            return Err(DiagramError::NotReal(p));
        }
        let curves = self.splice(state)?;
        let splice = state.splice_at(p).ok_or(DiagramError::StateMismatch)?;
        let [(a0, _), (b0, _)] = self.local_pairs(p, splice);
        Ok((
            curves.component_of(Port::new(p, a0)),
            curves.component_of(Port::new(p, b0)),
        ))
    }

    /// The 1 or 2 components of D(s) passing through virtual crossing `v`.
    pub fn incident_components(
        &self,
        state: &State,
        v: usize,
    ) -> Result<BTreeSet<usize>, DiagramError> {
        if self.kind(v) != Some(CrossingKind::Virtual) {
            return Err(DiagramError::NotVirtual(v));
        }
        let curves = self.splice(state)?;
        Ok([0u8, 1]
            .iter()
            .map(|&s| curves.component_of(Port::new(v, s)))
            .collect())
    }
}

/// A state: the choice of A- or B-splice at every real crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    choice: BTreeMap<usize, Splice>,
}

impl State {
    pub fn splice_at(&self, crossing: usize) -> Option<Splice> {
        self.choice.get(&crossing).copied()
    }

    /// α(s): the number of crossings sent to A.
    pub fn alpha(&self) -> usize {
        self.choice.values().filter(|s| **s == Splice::A).count()
    }

    /// β(s): the number of crossings sent to B.
    pub fn beta(&self) -> usize {
        self.choice.len() - self.alpha()
    }

    pub fn crossing_count(&self) -> usize {
        self.choice.len()
    }

    pub fn choices(&self) -> impl Iterator<Item = (usize, Splice)> + '_ {
        self.choice.iter().map(|(&c, &s)| (c, s))
    }

    /// Swaps the splice at `p`, leaving every other crossing alone.
    pub fn flip(&self, p: usize) -> Result<State, DiagramError> {
        let mut choice = self.choice.clone();
        match choice.get_mut(&p) {
            Some(s) => *s = s.flipped(),
            None => return Err(DiagramError::NotReal(p)),
        }
        Ok(State { choice })
    }
}

/// The closed curves of a spliced diagram D(s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplicedCurves {
    component_count: usize,
    component_of: Vec<usize>,
}

impl SplicedCurves {
    /// ♯D(s): number of closed curves, free loops included.
    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// The id of the curve through `port`. Ids are contiguous from 0 in order
    /// of first discovery; free loops carry no ports and therefore no ids.
    pub fn component_of(&self, port: Port) -> usize {
        self.component_of[port.index()]
    }
}
