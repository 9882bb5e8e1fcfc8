//! Lattices with at most eight elements, one per isomorphism class.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::lattice::Lattice;

pub const MAX_ENUMERATION_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("enumerating lattices with {requested} elements exceeds the limit of {limit}")]
pub struct EnumerationBudget {
    pub requested: usize,
    pub limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Grow each lattice of size `n-1` by a new coatom placed over a down-set.
    #[default]
    GrowByTop,
    /// Test every naturally labelled poset with a bottom and top for the lattice property.
    FilterPosets,
}

/// All lattices with `1..=max_elements` elements, up to isomorphism, ordered
/// by size and then canonical form. Each is the canonical representative with
/// elements named `x0, x1, …`.
pub fn enumerate_lattices(max_elements: usize, strategy: Strategy) -> Result<Vec<Lattice>, EnumerationBudget> {
    if max_elements > MAX_ENUMERATION_SIZE {
        return Err(EnumerationBudget {
            requested: max_elements,
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    let mut out = Vec::new();
    let mut previous: Vec<CanonicalForm> = Vec::new();
    for n in 1..=max_elements {
        let classes = match strategy {
            Strategy::GrowByTop => grow_by_top(n, &previous),
            Strategy::FilterPosets => filter_posets(n),
        };
        let forms: Vec<CanonicalForm> = classes.into_keys().collect();
        out.extend(forms.iter().map(CanonicalForm::to_lattice));
        previous = forms;
    }
    Ok(out)
}

/// Number of isomorphism classes of each size `1..=max_elements`.
pub fn class_counts(lattices: &[Lattice], max_elements: usize) -> Vec<usize> {
    (1..=max_elements)
        .map(|n| lattices.iter().filter(|l| l.len() == n).count())
        .collect()
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn insert(classes: &mut BTreeMap<CanonicalForm, ()>, n: usize, leq: &[bool]) {
    if let Ok(l) = Lattice::from_order_matrix(names(n), leq) {
        classes.insert(canonical_form(&l), ());
    }
}

fn small(n: usize) -> BTreeMap<CanonicalForm, ()> {
    let mut classes = BTreeMap::new();
    let leq: Vec<bool> = (0..n * n).map(|k| k / n <= k % n).collect();
    insert(&mut classes, n, &leq);
    classes
}

fn grow_by_top(n: usize, previous: &[CanonicalForm]) -> BTreeMap<CanonicalForm, ()> {
    if n <= 2 {
        return small(n);
    }
    let mut classes = BTreeMap::new();
    for form in previous {
        let base = form.to_lattice();
        let m = base.len();
        let top = base.top();
        let rest: Vec<usize> = (0..m).filter(|&x| x != top).collect();
        for mask in 1u32..(1 << rest.len()) {
            let down: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &x)| x)
                .collect();
            let closed = down
                .iter()
                .all(|&x| (0..m).all(|y| !base.leq(y, x) || down.contains(&y)));
            if !closed {
                continue;
            }
            // New element m sits above `down` and below the top.
            let mut leq = vec![false; n * n];
            for a in 0..m {
                for b in 0..m {
                    leq[a * n + b] = base.leq(a, b);
                }
            }
            leq[m * n + m] = true;
            leq[m * n + top] = true;
            for &x in &down {
                leq[x * n + m] = true;
            }
            insert(&mut classes, n, &leq);
        }
    }
    classes
}

fn filter_posets(n: usize) -> BTreeMap<CanonicalForm, ()> {
    if n <= 2 {
        return small(n);
    }
    // Interior elements 1..n-1; a relation i < j is only allowed for i < j.
    let interior: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = interior
        .iter()
        .flat_map(|&i| interior.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    let mut classes = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true;
            leq[x * n + n - 1] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                leq[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c]))
        });
        if transitive {
            insert(&mut classes, n, &leq);
        }
    }
    classes
}
