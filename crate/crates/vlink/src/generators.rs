//! Constructors for the test corpus: classical anchor diagrams, the necklace
//! family H_n / H'_n, and seeded random diagrams.
//!
//! The necklace H_n is a horizontal row of n+1 circles in which adjacent
//! circles meet twice: the bottom crossing is real (the right circle passing
//! over the left), the top crossing is virtual. H'_n is the same diagram with
//! the top crossing of the first pair made real (the right circle passing
//! under), so that virtualizing that crossing returns exactly H_n. Every state
//! of H_n has a single curve (each splice merges two circles of an open
//! chain), which is what drives its bracket (A + A^-1)^n and span 2n.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::diagram::{CrossingKind, Diagram, DiagramError, Port};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("family `{family}` needs parameter n >= {min}, got {got}")]
    BadParameter { family: &'static str, min: u32, got: u32 },
    #[error("a random diagram needs at least one crossing")]
    NoCrossings,
}

/// Chirality of a Reidemeister-I kink.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    /// Bracket -A^3.
    Positive,
    /// Bracket -A^-3.
    Negative,
}

/// The crossing-free unknot.
pub fn unknot() -> Diagram {
    Diagram::new(vec![], &[], 1).expect("unknot is valid")
}

/// A one-crossing unknot.
pub fn kink(hand: Handedness) -> Diagram {
    let arcs: [(Port, Port); 2] = match hand {
        Handedness::Positive => [
            (Port::new(0, 0), Port::new(0, 1)),
            (Port::new(0, 2), Port::new(0, 3)),
        ],
        Handedness::Negative => [
            (Port::new(0, 1), Port::new(0, 2)),
            (Port::new(0, 3), Port::new(0, 0)),
        ],
    };
    Diagram::new(vec![CrossingKind::Real], &arcs, 0).expect("kink is valid")
}

/// The standard 2-crossing Hopf link diagram.
pub fn hopf() -> Diagram {
    torus_2n(2).expect("n = 2")
}

/// The standard 3-crossing trefoil diagram.
pub fn trefoil() -> Diagram {
    torus_2n(3).expect("n = 3")
}

/// The closed 2-braid with n crossings (the (2,n) torus link diagram),
/// reduced alternating for n >= 2.
pub fn torus_2n(n: u32) -> Result<Diagram, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::BadParameter { family: "torus", min: 2, got: n });
    }
    let n = n as usize;
    let mut arcs = Vec::with_capacity(2 * n);
    for i in 0..n {
        let next = (i + 1) % n;
        arcs.push((Port::new(i, 3), Port::new(next, 0)));
        arcs.push((Port::new(i, 2), Port::new(next, 1)));
    }
    Ok(Diagram::new(vec![CrossingKind::Real; n], &arcs, 0).expect("torus closure is valid"))
}

/// The figure-eight knot: closure of the 3-braid (s1 s2^-1)^2.
pub fn figure_eight() -> Diagram {
    braid_closure(3, &[(1, true), (2, false), (1, true), (2, false)])
}

/// Closure of a braid word. `word` entries are (strand position i >= 1,
/// positive?) for the generator acting on positions i, i+1; a positive letter
/// sends the strand entering bottom-left under.
fn braid_closure(strands: usize, word: &[(usize, bool)]) -> Diagram {
    let mut edge_ports: BTreeMap<usize, Vec<Port>> = BTreeMap::new();
    let mut current: Vec<usize> = (0..strands).collect();
    let mut next_edge = strands;
    for (crossing, &(i, positive)) in word.iter().enumerate() {
        assert!(i >= 1 && i < strands, "braid letter out of range");
        let (bl, br) = (current[i - 1], current[i]);
        let (left, right) = (next_edge, next_edge + 1);
        next_edge += 2;
        // slots counterclockwise with the under-strand on 0,2
        let slot_edges = if positive {
            [bl, br, right, left]
        } else {
            [br, right, left, bl]
        };
        for (slot, &edge) in slot_edges.iter().enumerate() {
            edge_ports.entry(edge).or_default().push(Port::new(crossing, slot as u8));
        }
        current[i - 1] = left;
        current[i] = right;
    }
    let mut free_loops = 0u32;
    for (pos, &top) in current.iter().enumerate() {
        if top == pos {
            free_loops += 1; // strand untouched by the word
            continue;
        }
        let merged = edge_ports.remove(&top).unwrap_or_default();
        edge_ports.entry(pos).or_default().extend(merged);
    }
    let arcs: Vec<(Port, Port)> = edge_ports
        .values()
        .map(|ports| {
            assert_eq!(ports.len(), 2, "every closed edge has two ports");
            (ports[0], ports[1])
        })
        .collect();
    Diagram::new(vec![CrossingKind::Real; word.len()], &arcs, free_loops)
        .expect("braid closure is valid")
}

/// The id of the designated crossing of H'_n (the realized top crossing);
/// virtualizing it recovers H_n.
pub fn necklace_designated_crossing(n: u32) -> usize {
    n as usize
}

/// H_n: pseudo-adequate but not adequate, with n real and n virtual crossings.
pub fn necklace_hn(n: u32) -> Result<Diagram, GeneratorError> {
    necklace(n, false)
}

/// H'_n: the pseudo-adequate source diagram of H_n, with n+1 real and n-1
/// virtual crossings.
pub fn necklace_hprime_n(n: u32) -> Result<Diagram, GeneratorError> {
    necklace(n, true)
}

fn necklace(n: u32, realize_designated: bool) -> Result<Diagram, GeneratorError> {
    let family = if realize_designated { "hprime" } else { "hn" };
    if n < 2 {
        return Err(GeneratorError::BadParameter { family, min: 2, got: n });
    }
    let n = n as usize;
    // Crossing ids: bottom (real) crossing of pair i is i, top crossing of
    // pair i is n+i. Pair i sits between circles C_i and C_{i+1}.
    let bottom = |i: usize| i;
    let top = |i: usize| n + i;
    let mut kinds = vec![CrossingKind::Real; n];
    kinds.extend(vec![CrossingKind::Virtual; n]);
    if realize_designated {
        kinds[top(0)] = CrossingKind::Real;
    }

    let mut arcs = Vec::with_capacity(4 * n);
    for i in 0..n {
        // the two short arcs of the lens between C_i and C_{i+1}
        arcs.push((Port::new(top(i), 3), Port::new(bottom(i), 0))); // right side of C_i
        arcs.push((Port::new(top(i), 2), Port::new(bottom(i), 1))); // left side of C_{i+1}
    }
    for i in 0..n - 1 {
        // top and bottom arcs of the middle circle C_{i+1}
        arcs.push((Port::new(top(i), 0), Port::new(top(i + 1), 1)));
        arcs.push((Port::new(bottom(i), 3), Port::new(bottom(i + 1), 2)));
    }
    // the end circles C_0 and C_n close around the outside
    arcs.push((Port::new(bottom(0), 2), Port::new(top(0), 1)));
    arcs.push((Port::new(bottom(n - 1), 3), Port::new(top(n - 1), 0)));

    Ok(Diagram::new(kinds, &arcs, 0).expect("necklace is valid"))
}

/// Corpus-level alias for `Diagram::virtualize`.
pub fn virtualized(d: &Diagram, p: usize) -> Result<Diagram, DiagramError> {
    d.virtualize(p)
}

/// A valid diagram with the given crossing counts, deterministic in the seed
/// (ChaCha8 keyed by `seed`, ports paired by a Fisher-Yates shuffle).
pub fn random_diagram(seed: u64, c_real: u32, c_virtual: u32) -> Result<Diagram, GeneratorError> {
    let n = (c_real + c_virtual) as usize;
    if n == 0 {
        return Err(GeneratorError::NoCrossings);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ports: Vec<usize> = (0..4 * n).collect();
    ports.shuffle(&mut rng);
    let arcs: Vec<(Port, Port)> = ports
        .chunks_exact(2)
        .map(|pair| {
            (
                Port::new(pair[0] / 4, (pair[0] % 4) as u8),
                Port::new(pair[1] / 4, (pair[1] % 4) as u8),
            )
        })
        .collect();
    let mut kinds = vec![CrossingKind::Real; c_real as usize];
    kinds.extend(vec![CrossingKind::Virtual; c_virtual as usize]);
    Ok(Diagram::new(kinds, &arcs, 0).expect("shuffled matching is perfect"))
}
