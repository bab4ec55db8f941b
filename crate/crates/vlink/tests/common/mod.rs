//! Shared test fixtures: an independent oracle for component counts and
//! brackets, and the diagram corpus the property/acceptance suites run over.
//!
//! The oracle deliberately takes different routes from the library: components
//! are counted with a union-find instead of a cycle walk, and the bracket is
//! accumulated in a dense coefficient table via the binomial expansion of
//! (-A^2 - A^-2)^k instead of polynomial multiplication.

#![allow(dead_code)]

use vlink::diagram::{CrossingKind, Diagram, Port, Splice, State};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn port_index(p: Port) -> usize {
    4 * p.crossing + p.slot as usize
}

/// ♯D(s) by union-find over the splice pairings and the port matching.
pub fn oracle_component_count(d: &Diagram, s: &State) -> usize {
    let n = d.crossing_count();
    let mut uf = UnionFind::new(4 * n);
    for crossing in 0..n {
        let pairs: [(u8, u8); 2] = match d.kind(crossing).unwrap() {
            CrossingKind::Virtual => [(0, 2), (1, 3)],
            CrossingKind::Real => match s.splice_at(crossing).unwrap() {
                Splice::A => [(0, 1), (2, 3)],
                Splice::B => [(0, 3), (1, 2)],
            },
        };
        for (a, b) in pairs {
            uf.union(
                port_index(Port::new(crossing, a)),
                port_index(Port::new(crossing, b)),
            );
        }
    }
    for crossing in 0..n {
        for slot in 0..4u8 {
            let here = Port::new(crossing, slot);
            uf.union(port_index(here), port_index(d.matched(here)));
        }
    }
    let mut roots: Vec<usize> = (0..4 * n).map(|p| uf.find(p)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() + d.free_loops() as usize
}

/// The state whose splice at the i-th real crossing is B iff bit i of `mask`
/// is set, built through the public flip API.
pub fn state_from_mask(d: &Diagram, mask: u64) -> State {
    let mut s = d.state_all_a();
    for (i, &p) in d.real_crossing_ids().iter().enumerate() {
        if mask >> i & 1 == 1 {
            s = s.flip(p).unwrap();
        }
    }
    s
}

fn binomial(n: i64, k: i64) -> i64 {
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// ⟨D⟩ as ascending (exponent, coefficient) pairs, via the binomial expansion
/// of each state weight into a dense table.
pub fn oracle_bracket(d: &Diagram) -> Vec<(i64, i64)> {
    let c = d.real_crossing_count();
    assert!(c <= 16, "oracle is for small diagrams");
    let max_components = 2 * d.crossing_count() as i64 + d.free_loops() as i64 + 2;
    let offset = c as i64 + 2 * max_components;
    let mut dense = vec![0i64; (2 * offset + 1) as usize];
    for mask in 0u64..(1 << c) {
        let s = state_from_mask(d, mask);
        let k = oracle_component_count(d, &s) as i64 - 1;
        let beta = mask.count_ones() as i64;
        let alpha = c as i64 - beta;
        // (-A^2 - A^-2)^k = (-1)^k Σ_j C(k,j) A^(4j - 2k)
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for j in 0..=k {
            let exp = alpha - beta + 4 * j - 2 * k;
            dense[(exp + offset) as usize] += sign * binomial(k, j);
        }
    }
    dense
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(i, &v)| (i as i64 - offset, v))
        .collect()
}

pub fn oracle_span(d: &Diagram) -> u64 {
    let terms = oracle_bracket(d);
    assert!(!terms.is_empty(), "zero bracket");
    (terms.last().unwrap().0 - terms.first().unwrap().0) as u64
}

/// The named diagrams every cross-module suite runs over.
pub fn corpus() -> Vec<(String, Diagram)> {
    use vlink::generators::*;
    let mut out: Vec<(String, Diagram)> = vec![
        ("unknot".into(), unknot()),
        ("kink+".into(), kink(Handedness::Positive)),
        ("kink-".into(), kink(Handedness::Negative)),
        ("hopf".into(), hopf()),
        ("trefoil".into(), trefoil()),
        ("figure8".into(), figure_eight()),
        ("virt(trefoil,0)".into(), trefoil().virtualize(0).unwrap()),
        ("virt(figure8,2)".into(), figure_eight().virtualize(2).unwrap()),
    ];
    for n in 4..=8 {
        out.push((format!("torus{n}"), torus_2n(n).unwrap()));
    }
    for n in 2..=8 {
        out.push((format!("H{n}"), necklace_hn(n).unwrap()));
        out.push((format!("H'{n}"), necklace_hprime_n(n).unwrap()));
    }
    for seed in 0..30u64 {
        let c_real = 1 + (seed % 8) as u32;
        let c_virtual = (seed % 4) as u32;
        out.push((
            format!("random{seed}"),
            random_diagram(seed, c_real, c_virtual).unwrap(),
        ));
    }
    out
}

/// The classical generator anchors. These are planar by construction; a
/// random matching without virtual crossings need not be, so random diagrams
/// stay out of this list.
pub fn classical_corpus() -> Vec<(String, Diagram)> {
    use vlink::generators::*;
    let mut out: Vec<(String, Diagram)> = vec![
        ("kink+".into(), kink(Handedness::Positive)),
        ("kink-".into(), kink(Handedness::Negative)),
        ("hopf".into(), hopf()),
        ("trefoil".into(), trefoil()),
        ("figure8".into(), figure_eight()),
    ];
    for n in 4..=8 {
        out.push((format!("torus{n}"), torus_2n(n).unwrap()));
    }
    out
}
