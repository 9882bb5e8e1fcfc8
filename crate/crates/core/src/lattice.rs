//! Finite lattices given by their cover relations.
//!
//! A [`Lattice`] is immutable once built. Construction derives the full
//! order relation, meet and join tables, and (for pure lattices) the rank
//! function, so every later query is a table lookup.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::monomial::{Binomial, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidName(String),
    #[error("cover references unknown element `{0}`")]
    UnknownElement(String),
    #[error("covers do not form a partial order (cycle through `{0}`)")]
    NotAPoset(String),
    #[error("cover `{0}` < `{1}` is implied by other covers")]
    RedundantCover(String, String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("lattice is not pure")]
    NotPure,
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),
}

/// How [`Lattice::build`] treats covers that are implied by other covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoverPolicy {
    /// Reject the input with [`LatticeError::RedundantCover`].
    #[default]
    Strict,
    /// Drop implied covers, logging a warning for each.
    Normalize,
}

/// A finite lattice.
#[derive(Clone)]
pub struct Lattice {
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    height: Vec<usize>,
    pure: bool,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Lattice {
    /// Builds a lattice from element names and `(lower, upper)` cover pairs.
    pub fn new<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self, LatticeError> {
        Self::build(elements, covers, CoverPolicy::Strict)
    }

    pub fn build<S: AsRef<str>>(
        elements: &[S],
        covers: &[(S, S)],
        policy: CoverPolicy,
    ) -> Result<Self, LatticeError> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(LatticeError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(LatticeError::DuplicateName(name.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            pairs.push((lookup(lo.as_ref())?, lookup(hi.as_ref())?));
        }
        Self::from_index_covers(names, &pairs, policy)
    }

    pub(crate) fn from_index_covers(
        names: Vec<String>,
        pairs: &[(usize, usize)],
        policy: CoverPolicy,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut seen = HashSet::new();
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(lo, hi) in pairs {
            if lo == hi {
                return Err(LatticeError::NotAPoset(names[lo].clone()));
            }
            if seen.insert((lo, hi)) {
                edges.push((lo, hi));
            }
        }

        // Kahn's algorithm; leftover vertices lie on a cycle.
        let mut indegree = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(lo, hi) in &edges {
            indegree[hi] += 1;
            succ[lo].push(hi);
        }
        let mut topo = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indegree[v] == 0).collect();
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if topo.len() < n {
            let culprit = (0..n).find(|&v| indegree[v] > 0).unwrap();
            return Err(LatticeError::NotAPoset(names[culprit].clone()));
        }

        let mut pred = vec![Vec::new(); n];
        for &(lo, hi) in &edges {
            pred[hi].push(lo);
        }
        let mut leq = vec![false; n * n];
        for &v in &topo {
            leq[v * n + v] = true;
            for &u in &pred[v] {
                for w in 0..n {
                    if leq[w * n + u] {
                        leq[w * n + v] = true;
                    }
                }
            }
        }

        let mut reduced = Vec::with_capacity(edges.len());
        for &(lo, hi) in &edges {
            let implied = pred[hi]
                .iter()
                .any(|&w| w != lo && leq[lo * n + w]);
            if implied {
                match policy {
                    CoverPolicy::Strict => {
                        return Err(LatticeError::RedundantCover(
                            names[lo].clone(),
                            names[hi].clone(),
                        ))
                    }
                    CoverPolicy::Normalize => {
                        log::warn!("dropping implied cover {} < {}", names[lo], names[hi]);
                    }
                }
            } else {
                reduced.push((lo, hi));
            }
        }
        reduced.sort_unstable();

        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b * n + x]))
            .ok_or_else(|| LatticeError::NotALattice("no least element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x * n + t]))
            .ok_or_else(|| LatticeError::NotALattice("no greatest element".into()))?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m = extremal_bound(n, &leq, a, b, false).ok_or_else(|| {
                    LatticeError::NotALattice(format!("{} and {} have no meet", names[a], names[b]))
                })?;
                let j = extremal_bound(n, &leq, a, b, true).ok_or_else(|| {
                    LatticeError::NotALattice(format!("{} and {} have no join", names[a], names[b]))
                })?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }

        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for &(lo, hi) in &reduced {
            lower_covers[hi].push(lo);
            upper_covers[lo].push(hi);
        }

        let mut height = vec![0usize; n];
        for &v in &topo {
            height[v] = lower_covers[v]
                .iter()
                .map(|&u| height[u] + 1)
                .max()
                .unwrap_or(0);
        }
        let pure = reduced.iter().all(|&(lo, hi)| height[hi] == height[lo] + 1);

        let index = names.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Lattice {
            names,
            index,
            covers: reduced,
            lower_covers,
            upper_covers,
            leq,
            meet,
            join,
            bottom,
            top,
            height,
            pure,
        })
    }

    /// Builds a lattice from a full reflexive order matrix (row-major, `leq[i*n+j]`).
    pub(crate) fn from_order_matrix(names: Vec<String>, leq: &[bool]) -> Result<Self, LatticeError> {
        let n = names.len();
        let lt = |i: usize, j: usize| i != j && leq[i * n + j];
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        Self::from_index_covers(names, &covers, CoverPolicy::Strict)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Cover pairs `(lower, upper)` sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    /// Longest-chain rank, present only when the lattice is pure.
    pub fn rank(&self) -> Option<&[usize]> {
        self.pure.then_some(self.height.as_slice())
    }

    pub fn rank_of(&self, x: usize) -> Option<usize> {
        self.pure.then(|| self.height[x])
    }

    fn ranks(&self) -> Result<&[usize], LatticeError> {
        self.rank().ok_or(LatticeError::NotPure)
    }

    /// Longest chain from the bottom to `x`, defined for every lattice.
    pub fn height_of(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn is_modular(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for b in 0..n {
                if !self.leq(x, b) {
                    continue;
                }
                for a in 0..n {
                    if self.join(x, self.meet(a, b)) != self.meet(self.join(x, a), b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The dual distributive law `x∨(y∧z) = (x∨y)∧(x∨z)`; equivalent to
    /// [`Lattice::is_distributive`] on every lattice.
    pub fn is_dual_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), self.join(x, z))
                })
            })
        })
    }

    /// Whether `rank(p) + rank(q) = rank(p∧q) + rank(p∨q)` for all pairs.
    pub fn modular_rank_law(&self) -> Result<bool, LatticeError> {
        let rank = self.ranks()?;
        let n = self.len();
        Ok((0..n).all(|p| {
            (0..n).all(|q| rank[p] + rank[q] == rank[self.meet(p, q)] + rank[self.join(p, q)])
        }))
    }

    /// Elements grouped by rank level.
    pub fn rank_levels(&self) -> Result<Vec<Vec<usize>>, LatticeError> {
        let rank = self.ranks()?;
        let max = rank.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); max + 1];
        for (x, &r) in rank.iter().enumerate() {
            levels[r].push(x);
        }
        Ok(levels)
    }

    /// Pairs `(a, b)` with `rank(b) = rank(a) + 1` where both rank levels are singletons.
    pub fn cut_edges(&self) -> Result<Vec<(usize, usize)>, LatticeError> {
        let levels = self.rank_levels()?;
        Ok(levels
            .windows(2)
            .filter(|w| w[0].len() == 1 && w[1].len() == 1)
            .map(|w| (w[0][0], w[1][0]))
            .collect())
    }

    /// `ab − (a∨b)(a∧b)` for every incomparable pair, ordered by `(a, b)` index.
    pub fn basic_binomials(&self) -> Vec<Binomial> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.comparable(a, b) {
                    continue;
                }
                let lhs = Monomial::var(a) * &Monomial::var(b);
                let rhs = Monomial::var(self.join(a, b)) * &Monomial::var(self.meet(a, b));
                out.push(Binomial::new(lhs, rhs));
            }
        }
        out
    }

    /// Whether `x` lies in the interval `[lo, hi]`.
    pub fn in_interval(&self, x: usize, lo: usize, hi: usize) -> bool {
        self.leq(lo, x) && self.leq(x, hi)
    }

    /// Searches for an embedding of `pattern` into `self` that preserves meets
    /// and joins. Returns `map[p] = image of pattern element p`.
    pub fn find_sublattice(&self, pattern: &Lattice) -> Option<Vec<usize>> {
        let k = pattern.len();
        if k > self.len() {
            return None;
        }
        // Assign pattern elements bottom-up so order constraints prune early.
        let mut sequence: Vec<usize> = (0..k).collect();
        sequence.sort_by_key(|&p| (pattern.height[p], p));
        let mut map = vec![usize::MAX; k];
        let mut used = vec![false; self.len()];
        if self.extend_embedding(pattern, &sequence, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_embedding(
        &self,
        pattern: &Lattice,
        sequence: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == sequence.len() {
            return true;
        }
        let p = sequence[depth];
        let assigned = &sequence[..depth];
        for x in 0..self.len() {
            if used[x] {
                continue;
            }
            // Pattern elements of lower height precede p, so they cannot be above it.
            let order_ok = assigned.iter().all(|&q| {
                let fx = map[q];
                pattern.leq(q, p) == self.leq(fx, x) && pattern.leq(p, q) == self.leq(x, fx)
            });
            if !order_ok {
                continue;
            }
            map[p] = x;
            let ops_ok = assigned.iter().all(|&q| {
                let (m, j) = (pattern.meet(p, q), pattern.join(p, q));
                (map[m] == usize::MAX || map[m] == self.meet(x, map[q]))
                    && (map[j] == usize::MAX || map[j] == self.join(x, map[q]))
            }) && assigned.iter().all(|&q| {
                // p may be the meet or join of two earlier elements.
                assigned.iter().all(|&r| {
                    (pattern.meet(q, r) != p || self.meet(map[q], map[r]) == x)
                        && (pattern.join(q, r) != p || self.join(map[q], map[r]) == x)
                })
            });
            if ops_ok {
                used[x] = true;
                if self.extend_embedding(pattern, sequence, depth + 1, map, used) {
                    return true;
                }
                used[x] = false;
            }
            map[p] = usize::MAX;
        }
        false
    }

    /// Cartesian product with the componentwise order; element `(a, b)` is named `a_b`.
    pub fn product(&self, other: &Lattice) -> Lattice {
        let (n1, n2) = (self.len(), other.len());
        let mut names = Vec::with_capacity(n1 * n2);
        for a in 0..n1 {
            for b in 0..n2 {
                names.push(format!("{}_{}", self.names[a], other.names[b]));
            }
        }
        let mut covers = Vec::new();
        for a in 0..n1 {
            for b in 0..n2 {
                for &a2 in &self.upper_covers[a] {
                    covers.push((a * n2 + b, a2 * n2 + b));
                }
                for &b2 in &other.upper_covers[b] {
                    covers.push((a * n2 + b, a * n2 + b2));
                }
            }
        }
        Lattice::from_index_covers(names, &covers, CoverPolicy::Strict)
            .expect("product of lattices is a lattice")
    }

    /// Same lattice with element `i` renamed to `names[i]`.
    pub fn renamed(&self, names: Vec<String>) -> Result<Lattice, LatticeError> {
        assert_eq!(names.len(), self.len());
        Lattice::from_index_covers(names, &self.covers, CoverPolicy::Strict)
    }

    /// Same lattice with elements listed in a new order: new element `i` is old `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Lattice {
        let n = self.len();
        assert_eq!(order.len(), n);
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let names = order.iter().map(|&old| self.names[old].clone()).collect();
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(lo, hi)| (position[lo], position[hi]))
            .collect();
        Lattice::from_index_covers(names, &covers, CoverPolicy::Strict)
            .expect("reordering preserves the lattice")
    }
}

fn extremal_bound(n: usize, leq: &[bool], a: usize, b: usize, upper: bool) -> Option<usize> {
    let is_bound = |k: usize| {
        if upper {
            leq[a * n + k] && leq[b * n + k]
        } else {
            leq[k * n + a] && leq[k * n + b]
        }
    };
    let bounds: Vec<usize> = (0..n).filter(|&k| is_bound(k)).collect();
    bounds.iter().copied().find(|&c| {
        bounds
            .iter()
            .all(|&k| if upper { leq[c * n + k] } else { leq[k * n + c] })
    })
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|&(lo, hi)| (self.names[lo].as_str(), self.names[hi].as_str()))
            .collect();
        f.debug_struct("Lattice")
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.covers == other.covers
    }
}

impl Eq for Lattice {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn diamond() -> Lattice {
        Lattice::new(
            &["a", "b", "c", "d", "e"],
            &[("e", "b"), ("e", "c"), ("e", "d"), ("b", "a"), ("c", "a"), ("d", "a")],
        )
        .unwrap()
    }

    #[test]
    fn diamond_meets_and_joins() {
        let l = diamond();
        let ix = |s| l.index_of(s).unwrap();
        assert_eq!(l.meet(ix("b"), ix("c")), ix("e"));
        assert_eq!(l.join(ix("b"), ix("c")), ix("a"));
        assert_eq!(l.bottom(), ix("e"));
        assert_eq!(l.top(), ix("a"));
    }

    #[test]
    fn chain_is_totally_ordered() {
        let l = Lattice::new(&["x0", "x1", "x2"], &[("x0", "x1"), ("x1", "x2")]).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert!(l.comparable(a, b));
            }
        }
        assert_eq!(l.rank(), Some(&[0, 1, 2][..]));
    }

    #[test]
    fn missing_join_is_rejected() {
        let err = Lattice::new(&["z", "x", "y"], &[("z", "x"), ("z", "y")]).unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice(_)));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Lattice::new(&["a", "a"], &[]).unwrap_err(),
            LatticeError::DuplicateName("a".into())
        );
        assert!(matches!(
            Lattice::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err(),
            LatticeError::NotAPoset(_)
        ));
        assert_eq!(
            Lattice::new(&["a", "b"], &[("a", "q")]).unwrap_err(),
            LatticeError::UnknownElement("q".into())
        );
        assert_eq!(
            Lattice::new(&["a b"], &[]).unwrap_err(),
            LatticeError::InvalidName("a b".into())
        );
        let empty: [&str; 0] = [];
        assert_eq!(Lattice::new(&empty, &[]).unwrap_err(), LatticeError::Empty);
    }

    #[test]
    fn redundant_covers_rejected_or_normalized() {
        let els = ["x0", "x1", "x2"];
        let covers = [("x0", "x1"), ("x1", "x2"), ("x0", "x2")];
        assert_eq!(
            Lattice::new(&els, &covers).unwrap_err(),
            LatticeError::RedundantCover("x0".into(), "x2".into())
        );
        let l = Lattice::build(&els, &covers, CoverPolicy::Normalize).unwrap();
        assert_eq!(l.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn single_element_lattice() {
        let l = Lattice::new(&["o"], &[]).unwrap();
        assert_eq!(l.bottom(), l.top());
        assert!(l.is_pure());
        assert!(l.basic_binomials().is_empty());
    }

    #[test]
    fn modularity_and_distributivity() {
        assert!(diamond().is_modular());
        assert!(!diamond().is_distributive());
        let pentagon = catalog("pentagon").unwrap();
        assert!(!pentagon.is_modular());
        assert!(!pentagon.is_distributive());
        assert!(catalog("grid:3x3").unwrap().is_modular());
        assert!(catalog("divisor:12").unwrap().is_distributive());
        assert!(catalog("chain:4").unwrap().is_distributive());
    }

    #[test]
    fn rank_law() {
        assert_eq!(diamond().modular_rank_law(), Ok(true));
        let pentagon = catalog("pentagon").unwrap();
        assert_eq!(pentagon.modular_rank_law(), Err(LatticeError::NotPure));
        assert!(!pentagon.is_pure());
    }

    #[test]
    fn pentagon_longest_chain_heights_break_rank_law() {
        // With longest-chain heights e=0, c=1, b=2, d=1, a=3 the pair (c, d)
        // gives 1 + 1 against 0 + 3.
        let p = catalog("pentagon").unwrap();
        let ix = |s| p.index_of(s).unwrap();
        let h: Vec<usize> = ["a", "b", "c", "d", "e"].iter().map(|s| p.height_of(ix(s))).collect();
        assert_eq!(h, vec![3, 2, 1, 1, 0]);
        let (c, d) = (ix("c"), ix("d"));
        assert_ne!(
            p.height_of(c) + p.height_of(d),
            p.height_of(p.meet(c, d)) + p.height_of(p.join(c, d))
        );
    }

    #[test]
    fn cut_edges_examples() {
        let chain = catalog("chain:2").unwrap();
        assert_eq!(chain.cut_edges().unwrap(), vec![(0, 1), (1, 2)]);
        assert!(catalog("divisor:18").unwrap().cut_edges().unwrap().is_empty());
        let l = Lattice::new(
            &["z", "x", "y", "o", "t"],
            &[("z", "x"), ("z", "y"), ("x", "o"), ("y", "o"), ("o", "t")],
        )
        .unwrap();
        assert_eq!(l.cut_edges().unwrap(), vec![(3, 4)]);
        assert_eq!(
            catalog("pentagon").unwrap().cut_edges(),
            Err(LatticeError::NotPure)
        );
    }

    #[test]
    fn sublattice_search() {
        let b3 = catalog("b3").unwrap();
        assert!(b3.find_sublattice(&diamond()).is_none());
        let boolean3 = catalog("boolean:3").unwrap();
        let map = boolean3.find_sublattice(&b3).expect("b3 inside boolean:3");
        let mut image = map.clone();
        image.sort_unstable();
        assert_eq!(image, (0..8).collect::<Vec<_>>());
        assert!(diamond().find_sublattice(&diamond()).is_some());
        // The diamond with a new top is still modular and non-distributive.
        let m3_top = Lattice::new(
            &["e", "b", "c", "d", "a", "t"],
            &[("e", "b"), ("e", "c"), ("e", "d"), ("b", "a"), ("c", "a"), ("d", "a"), ("a", "t")],
        )
        .unwrap();
        assert!(m3_top.is_modular() && !m3_top.is_distributive());
        assert!(m3_top.find_sublattice(&diamond()).is_some());
        assert!(catalog("pentagon").unwrap().find_sublattice(&diamond()).is_none());
    }

    #[test]
    fn sublattice_must_preserve_operations() {
        // In B3, {0, {1}, {2}, {1,2,3}} is a 2x2 square as a poset but the
        // join of the atoms is {1,2}, so it is not a sublattice.
        let b = catalog("boolean:3").unwrap();
        let grid = catalog("grid:2x2").unwrap();
        let map = b.find_sublattice(&grid).unwrap();
        let ix = |s| grid.index_of(s).unwrap();
        let (x, y) = (map[ix("p0_1")], map[ix("p1_0")]);
        assert_eq!(b.join(x, y), map[ix("p1_1")]);
        assert_eq!(b.meet(x, y), map[ix("p0_0")]);
    }

    fn render(l: &Lattice, m: &Monomial) -> String {
        m.support().map(|(v, _)| l.name(v)).collect::<String>()
    }

    #[test]
    fn basic_binomial_examples() {
        let l = diamond();
        let rendered: Vec<(String, String)> = l
            .basic_binomials()
            .iter()
            .map(|b| (render(&l, &b.lhs), render(&l, &b.rhs)))
            .collect();
        let expect = [("bc", "ae"), ("bd", "ae"), ("cd", "ae")];
        assert_eq!(rendered.len(), 3);
        for (got, want) in rendered.iter().zip(expect) {
            assert_eq!((got.0.as_str(), got.1.as_str()), want);
        }
        assert!(catalog("chain:5").unwrap().basic_binomials().is_empty());

        let c2 = catalog("c2").unwrap();
        let rendered: Vec<(String, String)> = c2
            .basic_binomials()
            .iter()
            .map(|b| (render(&c2, &b.lhs), render(&c2, &b.rhs)))
            .collect();
        assert_eq!(
            rendered,
            vec![("bc".to_string(), "ad".to_string()), ("ef".to_string(), "dg".to_string())]
        );
    }

    #[test]
    fn product_of_chains_is_grid() {
        let c = catalog("chain:1").unwrap();
        let sq = c.product(&c);
        assert_eq!(sq.len(), 4);
        assert!(sq.is_distributive());
        assert_eq!(sq.basic_binomials().len(), 1);
        let b4 = catalog("b3").unwrap().product(&c);
        assert_eq!(b4.len(), 16);
        assert!(b4.is_distributive());
    }
}
