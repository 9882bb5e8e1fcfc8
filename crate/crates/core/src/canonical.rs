//! Canonical forms of lattices up to isomorphism.
//!
//! Elements are first split into classes by isomorphism-invariant data
//! (longest chains to the bottom and top, cover counts) and the classes are
//! refined by the classes of covering neighbours until stable. Remaining ties
//! are broken by individualising each candidate in turn. The canonical form
//! is the smallest order matrix over all leaves of that search tree.

use sha2::{Digest, Sha256};

use crate::lattice::Lattice;

/// The order matrix of a lattice under its canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    leq: Vec<bool>,
}

impl CanonicalForm {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Hex digest identifying the isomorphism class.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.n as u64).to_le_bytes());
        let mut byte = 0u8;
        for (k, &b) in self.leq.iter().enumerate() {
            byte |= (b as u8) << (k % 8);
            if k % 8 == 7 {
                hasher.update([byte]);
                byte = 0;
            }
        }
        hasher.update([byte]);
        hex::encode(&hasher.finalize()[..16])
    }

    /// The representative lattice with elements `x0..` in canonical order.
    pub fn to_lattice(&self) -> Lattice {
        let names = (0..self.n).map(|i| format!("x{i}")).collect();
        Lattice::from_order_matrix(names, &self.leq).expect("canonical form of a lattice")
    }
}

fn initial_colors(l: &Lattice) -> Vec<usize> {
    let n = l.len();
    let mut by_height: Vec<usize> = (0..n).collect();
    by_height.sort_by_key(|&x| std::cmp::Reverse(l.height_of(x)));
    let mut depth = vec![0usize; n];
    for &x in &by_height {
        depth[x] = l.upper_covers(x).iter().map(|&y| depth[y] + 1).max().unwrap_or(0);
    }
    let sig: Vec<_> = (0..n)
        .map(|x| {
            let below = (0..n).filter(|&y| l.leq(y, x)).count();
            (
                l.height_of(x),
                depth[x],
                l.lower_covers(x).len(),
                l.upper_covers(x).len(),
                below,
            )
        })
        .collect();
    rank_signatures(&sig)
}

fn rank_signatures<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = sig.to_vec();
    distinct.sort();
    distinct.dedup();
    sig.iter()
        .map(|s| distinct.binary_search(s).unwrap())
        .collect()
}

fn cell_count(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&m| m + 1)
}

fn refine(l: &Lattice, colors: Vec<usize>) -> Vec<usize> {
    let mut colors = rank_signatures(&colors);
    loop {
        let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..l.len())
            .map(|x| {
                let mut down: Vec<usize> = l.lower_covers(x).iter().map(|&y| colors[y]).collect();
                let mut up: Vec<usize> = l.upper_covers(x).iter().map(|&y| colors[y]).collect();
                down.sort_unstable();
                up.sort_unstable();
                (colors[x], down, up)
            })
            .collect();
        let next = rank_signatures(&sig);
        if cell_count(&next) == cell_count(&colors) {
            return next;
        }
        colors = next;
    }
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let c = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(x, &k)| if k == c && x != v { 2 * k + 1 } else { 2 * k })
        .collect()
}

fn encode(l: &Lattice, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * n);
    for &a in order {
        for &b in order {
            bits.push(l.leq(a, b));
        }
    }
    bits
}

fn search(l: &Lattice, colors: Vec<usize>, best: &mut Option<(Vec<bool>, Vec<usize>)>) {
    let colors = refine(l, colors);
    let n = l.len();
    if cell_count(&colors) == n {
        let mut order = vec![0; n];
        for (x, &c) in colors.iter().enumerate() {
            order[c] = x;
        }
        let code = encode(l, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    }
    let mut sizes = vec![0usize; cell_count(&colors)];
    for &c in &colors {
        sizes[c] += 1;
    }
    let target = sizes.iter().position(|&s| s > 1).unwrap();
    for v in (0..n).filter(|&x| colors[x] == target) {
        search(l, individualize(&colors, v), best);
    }
}

/// `order[i]` is the element placed at canonical position `i`.
pub fn canonical_labeling(l: &Lattice) -> Vec<usize> {
    let mut best = None;
    search(l, initial_colors(l), &mut best);
    best.unwrap().1
}

pub fn canonical_form(l: &Lattice) -> CanonicalForm {
    let order = canonical_labeling(l);
    CanonicalForm {
        n: l.len(),
        leq: encode(l, &order),
    }
}

/// Digest of the canonical form; equal exactly for isomorphic lattices.
pub fn lattice_id(l: &Lattice) -> String {
    canonical_form(l).digest()
}

pub fn is_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use proptest::prelude::*;

    #[test]
    fn divisor_18_is_the_2x3_grid() {
        let d = catalog("divisor:18").unwrap();
        let g = catalog("grid:2x3").unwrap();
        assert!(is_isomorphic(&d, &g));
        assert_eq!(lattice_id(&d), lattice_id(&g));
        assert!(is_isomorphic(&catalog("b3").unwrap(), &catalog("boolean:3").unwrap()));
        assert!(is_isomorphic(&catalog("divisor:6").unwrap(), &catalog("grid:2x2").unwrap()));
    }

    #[test]
    fn distinguishes_small_lattices() {
        let names = ["diamond", "pentagon", "chain:4", "grid:2x3", "c2", "b3", "grid:3x3"];
        let ids: std::collections::HashSet<String> =
            names.iter().map(|n| lattice_id(&catalog(n).unwrap())).collect();
        assert_eq!(ids.len(), names.len());
        assert!(is_isomorphic(&catalog("grid:3x2").unwrap(), &catalog("divisor:12").unwrap()));
    }

    #[test]
    fn canonical_representative_round_trips() {
        for name in ["pentagon", "c2", "b3", "grid:3x3"] {
            let l = catalog(name).unwrap();
            let rep = canonical_form(&l).to_lattice();
            assert!(is_isomorphic(&l, &rep));
            assert_eq!(canonical_form(&rep), canonical_form(&l));
        }
    }

    proptest! {
        #[test]
        fn id_invariant_under_relabelling(
            name in prop::sample::select(vec!["diamond", "pentagon", "c2", "b3", "divisor:36", "grid:2x4", "boolean:4"]),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let l = catalog(name).unwrap();
            let mut order: Vec<usize> = (0..l.len()).collect();
            order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let shuffled = l.reordered(&order);
            let renamed = shuffled
                .renamed((0..l.len()).map(|i| format!("r{i}")).collect())
                .unwrap();
            prop_assert_eq!(lattice_id(&renamed), lattice_id(&l));
        }
    }
}
