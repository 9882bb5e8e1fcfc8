//! Named lattices.
//!
//! `diamond`, `pentagon`, `b3` and `c2` use the element names of the usual
//! figures (top element `a`). Parametrised families:
//!
//! * `chain:k`: `x0 < x1 < … < xk` (k+1 elements)
//! * `boolean:k`: subsets of `{1..k}`, named by their digits (`0` is the empty set)
//! * `divisor:n`: divisors of `n` under divisibility, named by value
//! * `grid:mxn`: `{0..m-1} × {0..n-1}` componentwise, element `(i, j)` named `p{i}_{j}`

use crate::lattice::{CoverPolicy, Lattice, LatticeError};

pub const FIXED_NAMES: [&str; 4] = ["diamond", "pentagon", "b3", "c2"];

pub fn catalog(name: &str) -> Result<Lattice, LatticeError> {
    let unknown = || LatticeError::UnknownName(name.to_string());
    match name {
        "diamond" => fixed(
            &["a", "b", "c", "d", "e"],
            &[("e", "b"), ("e", "c"), ("e", "d"), ("b", "a"), ("c", "a"), ("d", "a")],
        ),
        "pentagon" => fixed(
            &["a", "b", "c", "d", "e"],
            &[("e", "c"), ("c", "b"), ("b", "a"), ("e", "d"), ("d", "a")],
        ),
        "b3" => fixed(
            &["a", "b", "c", "d", "e", "f", "g", "h"],
            &[
                ("b", "a"),
                ("c", "a"),
                ("d", "a"),
                ("e", "b"),
                ("f", "b"),
                ("e", "c"),
                ("g", "c"),
                ("f", "d"),
                ("g", "d"),
                ("h", "e"),
                ("h", "f"),
                ("h", "g"),
            ],
        ),
        "c2" => fixed(
            &["a", "b", "c", "d", "e", "f", "g"],
            &[
                ("g", "e"),
                ("g", "f"),
                ("e", "d"),
                ("f", "d"),
                ("d", "b"),
                ("d", "c"),
                ("b", "a"),
                ("c", "a"),
            ],
        ),
        _ => {
            let (family, arg) = name.split_once(':').ok_or_else(unknown)?;
            match family {
                "chain" => chain(parse_arg(arg)?),
                "boolean" => boolean(parse_arg(arg)?),
                "divisor" => divisor(parse_arg(arg)?),
                "grid" => {
                    let (m, n) = arg.split_once('x').ok_or_else(|| {
                        LatticeError::InvalidParameter(format!("expected grid:mxn, got `{name}`"))
                    })?;
                    grid(parse_arg(m)?, parse_arg(n)?)
                }
                _ => Err(unknown()),
            }
        }
    }
}

fn fixed(elements: &[&str], covers: &[(&str, &str)]) -> Result<Lattice, LatticeError> {
    Lattice::build(elements, covers, CoverPolicy::Strict)
}

fn parse_arg(arg: &str) -> Result<u64, LatticeError> {
    arg.parse()
        .map_err(|_| LatticeError::InvalidParameter(format!("`{arg}` is not a nonnegative integer")))
}

pub fn chain(k: u64) -> Result<Lattice, LatticeError> {
    if k > 1024 {
        return Err(LatticeError::InvalidParameter(format!("chain:{k} is too long")));
    }
    let k = k as usize;
    let names = (0..=k).map(|i| format!("x{i}")).collect();
    let covers: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
    Lattice::from_index_covers(names, &covers, CoverPolicy::Strict)
}

pub fn boolean(k: u64) -> Result<Lattice, LatticeError> {
    if k > 6 {
        return Err(LatticeError::InvalidParameter(format!("boolean:{k} is too large (max 6)")));
    }
    let k = k as usize;
    let mut subsets: Vec<u32> = (0..1u32 << k).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let name = |s: u32| {
        if s == 0 {
            "0".to_string()
        } else {
            (0..k)
                .filter(|i| s & (1 << i) != 0)
                .map(|i| char::from(b'1' + i as u8))
                .collect()
        }
    };
    let position = |s: u32| subsets.iter().position(|&t| t == s).unwrap();
    let names = subsets.iter().map(|&s| name(s)).collect();
    let mut covers = Vec::new();
    for &s in &subsets {
        for i in 0..k {
            if s & (1 << i) == 0 {
                covers.push((position(s), position(s | (1 << i))));
            }
        }
    }
    Lattice::from_index_covers(names, &covers, CoverPolicy::Strict)
}

pub fn divisor(n: u64) -> Result<Lattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::InvalidParameter("divisor:0 has no finite divisor lattice".into()));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    if divisors.len() > 256 {
        return Err(LatticeError::InvalidParameter(format!("divisor:{n} is too large")));
    }
    let names = divisors.iter().map(u64::to_string).collect();
    let mut covers = Vec::new();
    for (i, &d) in divisors.iter().enumerate() {
        for (j, &e) in divisors.iter().enumerate() {
            // e covers d exactly when e/d is prime.
            if e % d == 0 && is_prime(e / d) {
                covers.push((i, j));
            }
        }
    }
    Lattice::from_index_covers(names, &covers, CoverPolicy::Strict)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn grid(m: u64, n: u64) -> Result<Lattice, LatticeError> {
    if m == 0 || n == 0 || m * n > 1024 {
        return Err(LatticeError::InvalidParameter(format!("grid:{m}x{n} is out of range")));
    }
    let (m, n) = (m as usize, n as usize);
    let names = (0..m)
        .flat_map(|i| (0..n).map(move |j| format!("p{i}_{j}")))
        .collect();
    let mut covers = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if i + 1 < m {
                covers.push((i * n + j, (i + 1) * n + j));
            }
            if j + 1 < n {
                covers.push((i * n + j, i * n + j + 1));
            }
        }
    }
    Lattice::from_index_covers(names, &covers, CoverPolicy::Strict)
}
