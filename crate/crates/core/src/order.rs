//! Monomial orders given by a family and a variable priority.
//!
//! The priority lists variable indices from largest to smallest. Lex compares
//! exponents along the priority; grlex compares degree first, then lex;
//! grevlex compares degree first, then scans the priority from the smallest
//! variable and lets the monomial with the smaller exponent win.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::lattice::Lattice;
use crate::monomial::Monomial;

/// Largest variable count for which a full permutation sweep runs unforced.
pub const MAX_UNFORCED_PERMUTATION_VARS: usize = 8;
/// Full sweeps are the default up to this many variables; sampling beyond.
pub const DEFAULT_FULL_SWEEP_VARS: usize = 6;
pub const DEFAULT_SAMPLE_COUNT: usize = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` listed twice")]
    DuplicateVariable(String),
    #[error("unknown order family `{0}` (expected lex, grlex or grevlex)")]
    UnknownFamily(String),
    #[error("malformed order `{0}` (expected <family>:<v1>,<v2>,...)")]
    Malformed(String),
    #[error("rank reverse lexicographic order needs a pure lattice")]
    NotPure,
    #[error("monomial uses variable {0}, outside the order's {1} variables")]
    OutOfRange(usize, usize),
    #[error("{count} permutations of {vars} variables exceeds the sweep budget; force it or sample")]
    Budget { vars: usize, count: u128 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderFamily {
    Lex,
    Grlex,
    Grevlex,
}

impl OrderFamily {
    pub const ALL: [OrderFamily; 3] = [OrderFamily::Lex, OrderFamily::Grlex, OrderFamily::Grevlex];

    pub fn name(self) -> &'static str {
        match self {
            OrderFamily::Lex => "lex",
            OrderFamily::Grlex => "grlex",
            OrderFamily::Grevlex => "grevlex",
        }
    }

    /// Parses a comma separated list such as `lex,grevlex`.
    pub fn parse_list(s: &str) -> Result<Vec<OrderFamily>, OrderError> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let f: OrderFamily = part.parse()?;
            if !out.contains(&f) {
                out.push(f);
            }
        }
        if out.is_empty() {
            return Err(OrderError::Malformed(s.to_string()));
        }
        Ok(out)
    }
}

impl fmt::Display for OrderFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderFamily {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OrderFamily::Lex),
            "grlex" => Ok(OrderFamily::Grlex),
            "grevlex" => Ok(OrderFamily::Grevlex),
            _ => Err(OrderError::UnknownFamily(s.to_string())),
        }
    }
}

/// A total multiplicative well-order on monomials in `priority.len()` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    family: OrderFamily,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// `priority` must be a permutation of `0..priority.len()`, largest first.
    pub fn new(family: OrderFamily, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            assert!(v < seen.len() && !seen[v], "priority is not a permutation");
            seen[v] = true;
        }
        MonomialOrder { family, priority }
    }

    /// Builds an order from variable names listed largest first. Variables not
    /// listed follow in their natural order.
    pub fn from_names<S: AsRef<str>>(
        family: OrderFamily,
        listed: &[S],
        names: &[String],
    ) -> Result<Self, OrderError> {
        let priority = complete_priority(listed, names)?;
        Ok(MonomialOrder { family, priority })
    }

    /// Parses `<family>:<v1>,<v2>,...` against the variable names.
    pub fn parse(spec: &str, names: &[String]) -> Result<Self, OrderError> {
        let (family, vars) = spec
            .split_once(':')
            .ok_or_else(|| OrderError::Malformed(spec.to_string()))?;
        let family: OrderFamily = family.trim().parse()?;
        let listed: Vec<&str> = vars
            .split(',')
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .collect();
        Self::from_names(family, &listed, names)
    }

    pub fn family(&self) -> OrderFamily {
        self.family
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn num_vars(&self) -> usize {
        self.priority.len()
    }

    /// Compares two monomials. Both must only use variables below `num_vars()`.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert!(a.span() <= self.num_vars() && b.span() <= self.num_vars());
        match self.family {
            OrderFamily::Lex => self.cmp_lex(a, b),
            OrderFamily::Grlex => a.degree().cmp(&b.degree()).then_with(|| self.cmp_lex(a, b)),
            OrderFamily::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.cmp_revlex(a, b)),
        }
    }

    /// Checked variant of [`MonomialOrder::cmp`].
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, OrderError> {
        for m in [a, b] {
            if m.span() > self.num_vars() {
                return Err(OrderError::OutOfRange(m.span() - 1, self.num_vars()));
            }
        }
        Ok(self.cmp(a, b))
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.priority {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn cmp_revlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.priority.iter().rev() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }

    pub fn greater(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }

    /// `family:v1,v2,...` with variables largest first.
    pub fn render(&self, names: &[String]) -> String {
        format!(
            "{}:{}",
            self.family,
            self.priority.iter().map(|&v| names[v].as_str()).join(",")
        )
    }

    /// Renders a monomial with variables in priority order and `^k` for
    /// exponents above one. Names are concatenated when every name is a
    /// single character and joined with `*` otherwise.
    pub fn render_monomial(&self, m: &Monomial, names: &[String]) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let compact = names.iter().all(|n| n.chars().count() == 1);
        let mut parts = self.priority.iter().filter_map(|&v| match m.exponent(v) {
            0 => None,
            1 => Some(names[v].clone()),
            e => Some(format!("{}^{e}", names[v])),
        });
        if compact {
            parts.collect()
        } else {
            parts.join("*")
        }
    }
}

fn complete_priority<S: AsRef<str>>(listed: &[S], names: &[String]) -> Result<Vec<usize>, OrderError> {
    let mut used = vec![false; names.len()];
    let mut priority = Vec::with_capacity(names.len());
    for v in listed {
        let v = v.as_ref();
        let i = names
            .iter()
            .position(|n| n == v)
            .ok_or_else(|| OrderError::UnknownVariable(v.to_string()))?;
        if used[i] {
            return Err(OrderError::DuplicateVariable(v.to_string()));
        }
        used[i] = true;
        priority.push(i);
    }
    priority.extend((0..names.len()).filter(|&i| !used[i]));
    Ok(priority)
}

/// Rank reverse lexicographic order: grevlex whose priority sorts elements by
/// rank, highest first. Elements of equal rank follow their position in
/// `tiebreak` (names, largest first); unlisted elements come after listed ones
/// in their natural order.
pub fn rank_revlex<S: AsRef<str>>(lattice: &Lattice, tiebreak: &[S]) -> Result<MonomialOrder, OrderError> {
    let rank = lattice.rank().ok_or(OrderError::NotPure)?;
    let base = complete_priority(tiebreak, lattice.names())?;
    let mut position = vec![0; base.len()];
    for (p, &v) in base.iter().enumerate() {
        position[v] = p;
    }
    let mut priority: Vec<usize> = (0..lattice.len()).collect();
    priority.sort_by_key(|&v| (std::cmp::Reverse(rank[v]), position[v]));
    Ok(MonomialOrder::new(OrderFamily::Grevlex, priority))
}

/// How order sweeps choose variable priorities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every permutation for every family. Refused above
    /// [`MAX_UNFORCED_PERMUTATION_VARS`] variables unless forced.
    AllPermutations { force: bool },
    /// `count` seeded random priorities, families taken round-robin.
    Sample { count: usize, seed: u64 },
    /// All permutations up to [`DEFAULT_FULL_SWEEP_VARS`] variables, otherwise
    /// [`DEFAULT_SAMPLE_COUNT`] samples.
    Default { seed: u64 },
}

impl SweepMode {
    pub fn resolve(self, num_vars: usize) -> SweepMode {
        match self {
            SweepMode::Default { .. } if num_vars <= DEFAULT_FULL_SWEEP_VARS => {
                SweepMode::AllPermutations { force: false }
            }
            SweepMode::Default { seed } => SweepMode::Sample {
                count: DEFAULT_SAMPLE_COUNT,
                seed,
            },
            other => other,
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Deterministic stream of orders over `num_vars` variables.
pub fn enumerate_order_specs(
    num_vars: usize,
    families: &[OrderFamily],
    mode: SweepMode,
) -> Result<Box<dyn Iterator<Item = MonomialOrder> + Send>, OrderError> {
    let families = families.to_vec();
    if families.is_empty() {
        return Ok(Box::new(std::iter::empty()));
    }
    match mode.resolve(num_vars) {
        SweepMode::AllPermutations { force } => {
            if num_vars > MAX_UNFORCED_PERMUTATION_VARS && !force {
                return Err(OrderError::Budget {
                    vars: num_vars,
                    count: factorial(num_vars) * families.len() as u128,
                });
            }
            Ok(Box::new(families.into_iter().flat_map(move |family| {
                (0..num_vars)
                    .permutations(num_vars)
                    .map(move |p| MonomialOrder::new(family, p))
            })))
        }
        SweepMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..count).map(move |i| {
                let mut p: Vec<usize> = (0..num_vars).collect();
                p.shuffle(&mut rng);
                MonomialOrder::new(families[i % families.len()], p)
            })))
        }
        SweepMode::Default { .. } => unreachable!("resolved above"),
    }
}
