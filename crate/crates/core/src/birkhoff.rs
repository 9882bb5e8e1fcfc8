//! Join-irreducibles, chain decompositions and planar embeddings of
//! distributive lattices.

use crate::lattice::{Lattice, LatticeError};

/// A finite poset on named elements, stored as a reflexive order matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// Index of each poset element in the lattice it came from.
    origin: Vec<usize>,
    leq: Vec<bool>,
}

impl Poset {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn is_antichain(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| a == b || !self.leq(a, b)))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Number of order ideals (down-sets), counted as antichains.
    pub fn count_order_ideals(&self) -> u64 {
        fn rec(p: &Poset, start: usize, chosen: &mut Vec<usize>) -> u64 {
            let mut total = 1;
            for x in start..p.len() {
                if chosen.iter().all(|&y| !p.leq(x, y) && !p.leq(y, x)) {
                    chosen.push(x);
                    total += rec(p, x + 1, chosen);
                    chosen.pop();
                }
            }
            total
        }
        rec(self, 0, &mut Vec::new())
    }

    /// A minimum chain partition, each chain listed bottom-up. By Dilworth the
    /// number of chains equals the width. Chains are ordered by their first
    /// element in poset order.
    pub fn chain_partition(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        // Maximum matching in the comparability graph x -> y (x < y).
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut match_left: Vec<Option<usize>> = vec![None; n];
        for x in 0..n {
            let mut seen = vec![false; n];
            self.augment(x, &mut seen, &mut match_left, &mut match_right);
        }
        let mut chains = Vec::new();
        for (start, matched) in match_right.iter().enumerate() {
            if matched.is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = match_left[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        chains.sort_by_key(|c| c.iter().copied().min());
        chains
    }

    fn augment(
        &self,
        x: usize,
        seen: &mut [bool],
        match_left: &mut [Option<usize>],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for y in 0..self.len() {
            if !self.lt(x, y) || seen[y] {
                continue;
            }
            seen[y] = true;
            let free = match match_right[y] {
                None => true,
                Some(x2) => self.augment(x2, seen, match_left, match_right),
            };
            if free {
                match_left[x] = Some(y);
                match_right[y] = Some(x);
                return true;
            }
        }
        false
    }

    pub fn width(&self) -> usize {
        self.chain_partition().len()
    }
}

fn is_join_irreducible(lattice: &Lattice, x: usize) -> bool {
    lattice.lower_covers(x).len() == 1
}

/// The join-irreducible elements of a distributive lattice, as an induced
/// poset in the lattice's element order.
///
/// Panics if the number of order ideals of the result differs from the size
/// of the lattice, which would contradict Birkhoff's representation theorem.
pub fn join_irreducibles(lattice: &Lattice) -> Result<Poset, LatticeError> {
    if !lattice.is_distributive() {
        return Err(LatticeError::NotDistributive);
    }
    let origin: Vec<usize> = (0..lattice.len())
        .filter(|&x| is_join_irreducible(lattice, x))
        .collect();
    let k = origin.len();
    let mut leq = vec![false; k * k];
    for (i, &a) in origin.iter().enumerate() {
        for (j, &b) in origin.iter().enumerate() {
            leq[i * k + j] = lattice.leq(a, b);
        }
    }
    let poset = Poset {
        names: origin.iter().map(|&x| lattice.name(x).to_string()).collect(),
        origin,
        leq,
    };
    assert_eq!(
        poset.count_order_ideals(),
        lattice.len() as u64,
        "order ideals of join-irreducibles must match the lattice size"
    );
    Ok(poset)
}

/// Coordinates of a lattice inside `{0..=width} × {0..=height}` with the
/// componentwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    pub coords: Vec<(usize, usize)>,
    pub width: usize,
    pub height: usize,
}

impl PlanarEmbedding {
    /// Checks injectivity, `0̂ ↦ (0,0)`, order agreement and that componentwise
    /// min/max reproduce meets and joins.
    pub fn is_valid_for(&self, lattice: &Lattice) -> bool {
        let n = lattice.len();
        if self.coords.len() != n || self.coords[lattice.bottom()] != (0, 0) {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                let (pa, pb) = (self.coords[a], self.coords[b]);
                if a != b && pa == pb {
                    return false;
                }
                let below = pa.0 <= pb.0 && pa.1 <= pb.1;
                if below != lattice.leq(a, b) {
                    return false;
                }
                let min = (pa.0.min(pb.0), pa.1.min(pb.1));
                let max = (pa.0.max(pb.0), pa.1.max(pb.1));
                if self.coords[lattice.meet(a, b)] != min || self.coords[lattice.join(a, b)] != max {
                    return false;
                }
            }
        }
        true
    }

    pub fn element_at(&self, point: (usize, usize)) -> Option<usize> {
        self.coords.iter().position(|&p| p == point)
    }
}

/// An embedding into `ℕ²` when the lattice is distributive with
/// join-irreducibles of width at most two; `None` otherwise.
pub fn planar_embedding(lattice: &Lattice) -> Option<PlanarEmbedding> {
    let ji = join_irreducibles(lattice).ok()?;
    let chains = ji.chain_partition();
    if chains.len() > 2 {
        return None;
    }
    let chain_of: Vec<usize> = (0..ji.len())
        .map(|j| chains.iter().position(|c| c.contains(&j)).unwrap())
        .collect();
    let coords: Vec<(usize, usize)> = (0..lattice.len())
        .map(|x| {
            let mut p = (0, 0);
            for (j, &orig) in ji.origin().iter().enumerate() {
                if lattice.leq(orig, x) {
                    if chain_of[j] == 0 {
                        p.0 += 1;
                    } else {
                        p.1 += 1;
                    }
                }
            }
            p
        })
        .collect();
    let embedding = PlanarEmbedding {
        width: coords.iter().map(|p| p.0).max().unwrap_or(0),
        height: coords.iter().map(|p| p.1).max().unwrap_or(0),
        coords,
    };
    debug_assert!(embedding.is_valid_for(lattice));
    Some(embedding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn join_irreducible_examples() {
        let b = join_irreducibles(&catalog("boolean:3").unwrap()).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.is_antichain());
        assert_eq!(b.width(), 3);

        let c = join_irreducibles(&catalog("chain:4").unwrap()).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.is_chain());

        let d = join_irreducibles(&catalog("divisor:18").unwrap()).unwrap();
        assert_eq!(d.names(), ["2", "3", "9"]);
        let chains: Vec<Vec<&str>> = d
            .chain_partition()
            .iter()
            .map(|c| c.iter().map(|&i| d.names()[i].as_str()).collect())
            .collect();
        assert_eq!(chains, vec![vec!["2"], vec!["3", "9"]]);

        assert_eq!(
            join_irreducibles(&catalog("diamond").unwrap()),
            Err(LatticeError::NotDistributive)
        );
    }

    #[test]
    fn divisor_18_embedding() {
        let l = catalog("divisor:18").unwrap();
        let e = planar_embedding(&l).unwrap();
        let expect = [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)];
        assert_eq!(e.coords, expect);
        assert_eq!((e.width, e.height), (1, 2));
        assert!(e.is_valid_for(&l));
    }

    #[test]
    fn chain_embeds_on_an_axis() {
        let l = catalog("chain:3").unwrap();
        let e = planar_embedding(&l).unwrap();
        assert_eq!(e.coords, [(0, 0), (1, 0), (2, 0), (3, 0)]);
    }

    #[test]
    fn non_planar_inputs() {
        assert!(planar_embedding(&catalog("boolean:3").unwrap()).is_none());
        assert!(planar_embedding(&catalog("b3").unwrap()).is_none());
        assert!(planar_embedding(&catalog("diamond").unwrap()).is_none());
        assert!(planar_embedding(&catalog("pentagon").unwrap()).is_none());
    }

    #[test]
    fn c2_embedding() {
        let l = catalog("c2").unwrap();
        let e = planar_embedding(&l).unwrap();
        assert!(e.is_valid_for(&l));
        assert_eq!((e.width, e.height), (2, 2));
        assert_eq!(e.coords[l.index_of("g").unwrap()], (0, 0));
        assert_eq!(e.coords[l.index_of("d").unwrap()], (1, 1));
        assert_eq!(e.coords[l.index_of("a").unwrap()], (2, 2));
    }
}
