//! The edge graph of a planar distributive lattice.
//!
//! An element embedded at `(i, j)` becomes the edge `{s_i, t_j}` of a
//! bipartite graph, and the monomial map `a ↦ s_i t_j` sends `I_L` into the
//! toric edge ideal of that graph. Even cycles of the graph give binomials in
//! the toric ideal: the product of alternate edges minus the product of the
//! others.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::birkhoff::PlanarEmbedding;
use crate::groebner::{buchberger, ReducedGroebnerBasis};
use crate::lattice::Lattice;
use crate::monomial::{Binomial, Monomial};
use crate::order::{MonomialOrder, OrderFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("lattice is not planar distributive (or the embedding does not fit it)")]
    NotPlanarDistributive,
}

/// A vertex of the bipartite graph: `S(i)` is `s_i`, `T(j)` is `t_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    S(usize),
    T(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub label: usize,
    pub s: usize,
    pub t: usize,
}

/// A bipartite graph whose edge `k` carries label `k` (a lattice element).
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: Vec<Edge>,
    by_endpoints: HashMap<(usize, usize), usize>,
}

impl BipartiteGraph {
    /// Edge `k` joins `s_{edges[k].0}` and `t_{edges[k].1}`. Panics on parallel edges.
    pub fn new(left: usize, right: usize, edges: &[(usize, usize)]) -> Self {
        let mut by_endpoints = HashMap::new();
        let edges: Vec<Edge> = edges
            .iter()
            .enumerate()
            .map(|(label, &(s, t))| {
                assert!(s < left && t < right, "edge endpoint out of range");
                assert!(by_endpoints.insert((s, t), label).is_none(), "parallel edge");
                Edge { label, s, t }
            })
            .collect();
        BipartiteGraph {
            left,
            right,
            edges,
            by_endpoints,
        }
    }

    pub fn parts(&self) -> (usize, usize) {
        (self.left, self.right)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_between(&self, s: usize, t: usize) -> Option<usize> {
        self.by_endpoints.get(&(s, t)).copied()
    }

    fn vertex_id(&self, v: Vertex) -> usize {
        match v {
            Vertex::S(i) => i,
            Vertex::T(j) => self.left + j,
        }
    }

    fn vertex(&self, id: usize) -> Vertex {
        if id < self.left {
            Vertex::S(id)
        } else {
            Vertex::T(id - self.left)
        }
    }

    fn neighbours(&self, id: usize) -> Vec<usize> {
        match self.vertex(id) {
            Vertex::S(i) => (0..self.right)
                .filter(|&j| self.edge_between(i, j).is_some())
                .map(|j| self.left + j)
                .collect(),
            Vertex::T(j) => (0..self.left)
                .filter(|&i| self.edge_between(i, j).is_some())
                .collect(),
        }
    }

    fn edge_of(&self, a: usize, b: usize) -> usize {
        let (s, t) = match (self.vertex(a), self.vertex(b)) {
            (Vertex::S(i), Vertex::T(j)) | (Vertex::T(j), Vertex::S(i)) => (i, j),
            _ => unreachable!("bipartite graph has no edge inside a part"),
        };
        self.edge_between(s, t).expect("consecutive cycle vertices are adjacent")
    }

    /// The monomial `∏ s_i t_j` over the edges of `m`, as exponent vectors on
    /// the two parts.
    pub fn phi(&self, m: &Monomial) -> (Vec<u32>, Vec<u32>) {
        let mut s = vec![0; self.left];
        let mut t = vec![0; self.right];
        for (label, e) in m.support() {
            let edge = self.edges[label];
            s[edge.s] += e;
            t[edge.t] += e;
        }
        (s, t)
    }

    /// All simple cycles, each once. Every cycle of a bipartite graph is even.
    pub fn even_cycles(&self) -> Vec<EvenCycle> {
        let n = self.left + self.right;
        let adjacency: Vec<Vec<usize>> = (0..n).map(|v| self.neighbours(v)).collect();
        let mut found = BTreeSet::new();
        for start in 0..n {
            let mut path = vec![start];
            let mut on_path = vec![false; n];
            on_path[start] = true;
            self.extend_cycles(&adjacency, start, &mut path, &mut on_path, &mut found);
        }
        found
            .into_iter()
            .map(|edges: Vec<usize>| {
                let vertices = self.cycle_vertices(&edges);
                EvenCycle { edges, vertices }
            })
            .collect()
    }

    fn extend_cycles(
        &self,
        adjacency: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &next in &adjacency[last] {
            if next == start && path.len() >= 4 && path[1] < last {
                let mut edges: Vec<usize> = path
                    .windows(2)
                    .map(|w| self.edge_of(w[0], w[1]))
                    .collect();
                edges.push(self.edge_of(last, start));
                found.insert(canonical_cycle(edges));
            } else if next > start && !on_path[next] {
                path.push(next);
                on_path[next] = true;
                self.extend_cycles(adjacency, start, path, on_path, found);
                on_path[next] = false;
                path.pop();
            }
        }
    }

    fn cycle_vertices(&self, edges: &[usize]) -> Vec<Vertex> {
        // Vertex k is shared by edges k-1 and k (cyclically).
        let len = edges.len();
        (0..len)
            .map(|k| {
                let a = self.edges[edges[(k + len - 1) % len]];
                let b = self.edges[edges[k]];
                if a.s == b.s {
                    Vertex::S(a.s)
                } else {
                    Vertex::T(a.t)
                }
            })
            .collect()
    }

    /// Labels of edges joining two non-consecutive vertices of `cycle`.
    pub fn chords(&self, cycle: &EvenCycle) -> Vec<usize> {
        let ids: BTreeSet<usize> = cycle.vertices.iter().map(|&v| self.vertex_id(v)).collect();
        let on_cycle: BTreeSet<usize> = cycle.edges.iter().copied().collect();
        self.edges
            .iter()
            .filter(|e| {
                !on_cycle.contains(&e.label)
                    && ids.contains(&self.vertex_id(Vertex::S(e.s)))
                    && ids.contains(&self.vertex_id(Vertex::T(e.t)))
            })
            .map(|e| e.label)
            .collect()
    }

    pub fn has_chord(&self, cycle: &EvenCycle) -> bool {
        !self.chords(cycle).is_empty()
    }

    /// Every even cycle of length at least six has a chord.
    pub fn long_cycles_chorded(&self) -> bool {
        self.even_cycles()
            .iter()
            .filter(|c| c.len() >= 6)
            .all(|c| self.has_chord(c))
    }

    /// Binomials of all even cycles, chorded or not.
    pub fn cycle_basis_gb(&self) -> Vec<Binomial> {
        self.even_cycles().iter().map(EvenCycle::binomial).collect()
    }

    pub fn chordless_cycle_binomials(&self) -> Vec<Binomial> {
        self.even_cycles()
            .iter()
            .filter(|c| !self.has_chord(c))
            .map(EvenCycle::binomial)
            .collect()
    }
}

/// Rotates and reflects a cyclic edge sequence so the smallest label comes
/// first and the second label is smaller than the last.
fn canonical_cycle(mut edges: Vec<usize>) -> Vec<usize> {
    let k = edges
        .iter()
        .enumerate()
        .min_by_key(|(_, &e)| e)
        .map(|(k, _)| k)
        .unwrap();
    edges.rotate_left(k);
    if edges[1] > edges[edges.len() - 1] {
        edges[1..].reverse();
    }
    edges
}

/// A simple cycle given by its edge labels in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCycle {
    edges: Vec<usize>,
    /// `vertices[k]` is the vertex shared by edges `k-1` and `k`.
    vertices: Vec<Vertex>,
}

impl EvenCycle {
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Product of the edges in even positions minus the product of the others.
    pub fn binomial(&self) -> Binomial {
        let even: Vec<usize> = self.edges.iter().step_by(2).copied().collect();
        let odd: Vec<usize> = self.edges.iter().skip(1).step_by(2).copied().collect();
        Binomial::new(Monomial::from_vars(&even), Monomial::from_vars(&odd))
    }
}

/// The edge graph of `lattice` under `embedding`: element `a` at `(i, j)`
/// becomes edge `{s_i, t_j}` labelled `a`.
pub fn lattice_to_graph(lattice: &Lattice, embedding: &PlanarEmbedding) -> BipartiteGraph {
    assert_eq!(embedding.coords.len(), lattice.len());
    BipartiteGraph::new(embedding.width + 1, embedding.height + 1, &embedding.coords)
}

/// Outcome of comparing `I_L` with the ideal of cycle binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identification {
    /// Basic binomials coincide with the 4-cycle binomials up to sign.
    pub basic_are_four_cycles: bool,
    /// The two reduced Gröbner bases are identical.
    pub bases_agree: bool,
    /// Standard monomial counts per degree for `I_L` and for the cycle ideal.
    pub lattice_counts: Vec<u64>,
    pub cycle_counts: Vec<u64>,
}

impl Identification {
    pub fn holds(&self) -> bool {
        self.basic_are_four_cycles && self.bases_agree && self.lattice_counts == self.cycle_counts
    }
}

fn unsigned_set(bs: &[Binomial]) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    bs.iter().map(Binomial::unsigned_key).collect()
}

/// Compares `I_L` against the ideal generated by all even-cycle binomials of
/// the edge graph: generators, reduced Gröbner bases under `order`, and
/// standard monomial counts in degrees `0..=degree_cap`.
pub fn verify_identification(
    lattice: &Lattice,
    embedding: &PlanarEmbedding,
    order: &MonomialOrder,
    degree_cap: u32,
) -> Result<Identification, ToricError> {
    if !lattice.is_distributive() || !embedding.is_valid_for(lattice) {
        return Err(ToricError::NotPlanarDistributive);
    }
    let graph = lattice_to_graph(lattice, embedding);
    let basic = lattice.basic_binomials();
    let cycles = graph.even_cycles();
    let four: Vec<Binomial> = cycles
        .iter()
        .filter(|c| c.len() == 4)
        .map(EvenCycle::binomial)
        .collect();
    let all: Vec<Binomial> = cycles.iter().map(EvenCycle::binomial).collect();

    let (lattice_gb, cycle_gb): (ReducedGroebnerBasis, ReducedGroebnerBasis) =
        rayon::join(|| buchberger(&basic, order), || buchberger(&all, order));
    let n = lattice.len();
    Ok(Identification {
        basic_are_four_cycles: basic.len() == four.len() && unsigned_set(&basic) == unsigned_set(&four),
        bases_agree: lattice_gb.elements() == cycle_gb.elements(),
        lattice_counts: lattice_gb.initial_ideal().standard_monomial_counts(n, degree_cap),
        cycle_counts: cycle_gb.initial_ideal().standard_monomial_counts(n, degree_cap),
    })
}

/// JSON shape of the `toric` command.
#[derive(Debug, Clone, Serialize)]
pub struct ToricReport {
    pub parts: [usize; 2],
    pub edges: Vec<EdgeReport>,
    pub cycles: Vec<CycleReport>,
    pub long_cycles_chorded: bool,
    pub cycle_binomials: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeReport {
    pub label: String,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleReport {
    pub edges: Vec<String>,
    pub length: usize,
    pub has_chord: bool,
}

pub fn toric_report(lattice: &Lattice, embedding: &PlanarEmbedding) -> ToricReport {
    let graph = lattice_to_graph(lattice, embedding);
    let names = lattice.names();
    let natural = MonomialOrder::new(OrderFamily::Lex, (0..lattice.len()).collect());
    let cycles = graph.even_cycles();
    ToricReport {
        parts: [graph.left, graph.right],
        edges: graph
            .edges()
            .iter()
            .map(|e| EdgeReport {
                label: names[e.label].clone(),
                i: e.s,
                j: e.t,
            })
            .collect(),
        cycles: cycles
            .iter()
            .map(|c| CycleReport {
                edges: c.edges().iter().map(|&e| names[e].clone()).collect(),
                length: c.len(),
                has_chord: graph.has_chord(c),
            })
            .collect(),
        long_cycles_chorded: cycles.iter().filter(|c| c.len() >= 6).all(|c| graph.has_chord(c)),
        cycle_binomials: cycles
            .iter()
            .map(|c| {
                let b = c.binomial();
                format!(
                    "{} - {}",
                    natural.render_monomial(&b.lhs, names),
                    natural.render_monomial(&b.rhs, names)
                )
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::planar_embedding;
    use crate::catalog::catalog;
    use crate::order::rank_revlex;

    fn graph_of(name: &str) -> (Lattice, BipartiteGraph) {
        let l = catalog(name).unwrap();
        let e = planar_embedding(&l).unwrap();
        let g = lattice_to_graph(&l, &e);
        (l, g)
    }

    fn labels(l: &Lattice, c: &EvenCycle) -> BTreeSet<String> {
        c.edges().iter().map(|&e| l.name(e).to_string()).collect()
    }

    #[test]
    fn divisor_of_two_times_power_of_three_is_complete_bipartite() {
        for (n, r) in [(6u64, 1usize), (18, 2), (54, 3)] {
            let (l, g) = graph_of(&format!("divisor:{n}"));
            assert_eq!(g.parts(), (2, r + 1));
            assert_eq!(g.edges().len(), l.len());
            assert_eq!(g.edges().len(), 2 * (r + 1));
        }
    }

    #[test]
    fn chain_is_a_star() {
        let (_, g) = graph_of("chain:4");
        assert!(g.edges().iter().all(|e| e.t == 0));
        assert!(g.even_cycles().is_empty());
    }

    #[test]
    fn k23_cycles() {
        let (_, g) = graph_of("grid:2x3");
        let cycles = g.even_cycles();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.len() == 4 && !g.has_chord(c)));
        assert!(g.long_cycles_chorded());
        let bs = g.cycle_basis_gb();
        assert_eq!(bs.len(), 3);
        assert!(bs.iter().all(|b| b.is_squarefree() && b.is_homogeneous() && b.lhs.degree() == 2));
    }

    #[test]
    fn square_has_one_cycle() {
        let (l, g) = graph_of("grid:2x2");
        let cycles = g.even_cycles();
        assert_eq!(cycles.len(), 1);
        assert!(!g.has_chord(&cycles[0]));
        let basic = l.basic_binomials();
        assert!(cycles[0].binomial().same_up_to_sign(&basic[0]));
    }

    #[test]
    fn c2_cycles_and_chord() {
        let (l, g) = graph_of("c2");
        let cycles = g.even_cycles();
        let sets: Vec<BTreeSet<String>> = cycles.iter().map(|c| labels(&l, c)).collect();
        let set = |s: &str| s.chars().map(|c| c.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(cycles.len(), 3);
        assert!(sets.contains(&set("gedf")));
        assert!(sets.contains(&set("dcab")));
        let six = cycles.iter().find(|c| c.len() == 6).unwrap();
        assert_eq!(labels(&l, six), set("gecabf"));
        assert_eq!(g.chords(six), vec![l.index_of("d").unwrap()]);
        assert!(g.long_cycles_chorded());

        let ix = |s: &str| s.chars().map(|c| l.index_of(&c.to_string()).unwrap()).collect::<Vec<_>>();
        let b = six.binomial();
        let expect = Binomial::new(Monomial::from_vars(&ix("bcg")), Monomial::from_vars(&ix("aef")));
        assert!(b.same_up_to_sign(&expect));
        assert_eq!(g.phi(&b.lhs), g.phi(&b.rhs));
        assert_eq!(g.phi(&b.lhs), (vec![1, 1, 1], vec![1, 1, 1]));

        let four = cycles.iter().find(|c| labels(&l, c) == set("dcab")).unwrap();
        let ad_bc = Binomial::new(Monomial::from_vars(&ix("ad")), Monomial::from_vars(&ix("bc")));
        assert!(four.binomial().same_up_to_sign(&ad_bc));
        assert_eq!(g.chordless_cycle_binomials().len(), 2);
    }

    #[test]
    fn plain_hexagon_has_unchorded_long_cycle() {
        let g = BipartiteGraph::new(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)]);
        let cycles = g.even_cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 6);
        assert!(!g.long_cycles_chorded());
    }

    #[test]
    fn k33_cycle_count() {
        // K_{3,3}: nine 4-cycles and six 6-cycles.
        let (_, g) = graph_of("grid:3x3");
        let cycles = g.even_cycles();
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 9);
        assert_eq!(cycles.iter().filter(|c| c.len() == 6).count(), 6);
        for c in &cycles {
            let b = c.binomial();
            assert_eq!(g.phi(&b.lhs), g.phi(&b.rhs));
        }
    }

    #[test]
    fn identification_examples() {
        let l = catalog("divisor:18").unwrap();
        let e = planar_embedding(&l).unwrap();
        let ord = rank_revlex::<&str>(&l, &[]).unwrap();
        assert!(verify_identification(&l, &e, &ord, 4).unwrap().holds());

        let c2 = catalog("c2").unwrap();
        let e = planar_embedding(&c2).unwrap();
        let ord = MonomialOrder::parse("lex:d,a,b,c,e,f,g", c2.names()).unwrap();
        let id = verify_identification(&c2, &e, &ord, 4).unwrap();
        assert!(id.holds());

        let d = catalog("diamond").unwrap();
        let fake = planar_embedding(&catalog("grid:2x2").unwrap()).unwrap();
        assert_eq!(
            verify_identification(&d, &fake, &ord, 4),
            Err(ToricError::NotPlanarDistributive)
        );
    }
}
