//! Order sweeps and scans over enumerated lattices.
//!
//! Scans produce evidence, not verdicts on the conjectures: a violation or a
//! counterexample candidate is a normal result and is reported as such.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::birkhoff::planar_embedding;
use crate::canonical::lattice_id;
use crate::enumerate::{enumerate_lattices, EnumerationBudget, Strategy};
use crate::lattice::Lattice;
use crate::order::{enumerate_order_specs, MonomialOrder, OrderError, OrderFamily, SweepMode};
use crate::report::lattice_ideal_report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExplorerError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationBudget),
}

impl ExplorerError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            ExplorerError::Enumeration(_) | ExplorerError::Order(OrderError::Budget { .. })
        )
    }
}

/// Outcome of one (lattice, order) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub lattice_id: String,
    pub order: String,
    pub squarefree: bool,
    pub quadratic: bool,
    pub max_degree: u32,
    pub gb_size: usize,
}

pub fn scan_record(lattice: &Lattice, id: &str, order: &MonomialOrder) -> ScanRecord {
    let report = lattice_ideal_report(lattice, order);
    ScanRecord {
        lattice_id: id.to_string(),
        order: order.render(lattice.names()),
        squarefree: report.squarefree,
        quadratic: report.quadratic,
        max_degree: report.max_degree,
        gb_size: report.gb.len(),
    }
}

/// One record per order of the sweep, in sweep order.
pub fn scan_orders(
    lattice: &Lattice,
    families: &[OrderFamily],
    mode: SweepMode,
) -> Result<Vec<ScanRecord>, ExplorerError> {
    let id = lattice_id(lattice);
    let orders: Vec<MonomialOrder> = enumerate_order_specs(lattice.len(), families, mode)?.collect();
    Ok(orders
        .par_iter()
        .map(|o| scan_record(lattice, &id, o))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lattice_id: String,
    pub order: String,
}

#[derive(Debug, Clone)]
pub struct ScannedLattice {
    pub lattice_id: String,
    pub lattice: Lattice,
}

#[derive(Debug, Clone)]
pub struct SquarefreeScan {
    /// Modular, pure, non-distributive lattices that were swept.
    pub candidates: Vec<ScannedLattice>,
    pub records: Vec<ScanRecord>,
    /// Orders under which a candidate's initial ideal is squarefree.
    pub violations: Vec<Violation>,
}

/// Sweeps every modular non-distributive lattice with at most `max_elements`
/// elements and reports orders with a squarefree initial ideal.
///
/// Panics if such a lattice lacks a diamond sublattice, which would contradict
/// the characterisation of distributivity among modular lattices.
pub fn squarefree_conjecture_scan(
    max_elements: usize,
    families: &[OrderFamily],
    mode: SweepMode,
) -> Result<SquarefreeScan, ExplorerError> {
    let diamond = crate::catalog::catalog("diamond").expect("catalog diamond");
    let mut candidates = Vec::new();
    let mut records = Vec::new();
    for lattice in enumerate_lattices(max_elements, Strategy::default())? {
        if !(lattice.is_modular() && lattice.is_pure()) || lattice.is_distributive() {
            continue;
        }
        assert!(
            lattice.find_sublattice(&diamond).is_some(),
            "modular non-distributive lattice without a diamond: {lattice:?}"
        );
        records.extend(scan_orders(&lattice, families, mode)?);
        candidates.push(ScannedLattice {
            lattice_id: lattice_id(&lattice),
            lattice,
        });
    }
    let violations = records
        .iter()
        .filter(|r| r.squarefree)
        .map(|r| Violation {
            lattice_id: r.lattice_id.clone(),
            order: r.order.clone(),
        })
        .collect();
    Ok(SquarefreeScan {
        candidates,
        records,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum QuadraticVerdict {
    /// Some order gives a reduced Gröbner basis of degree above two.
    NotQuadratic { order: String, witness: String },
    /// Quadratic under every scanned order and shaped like the divisor lattice of `2·3^r`.
    DivisorShape { r: usize },
    /// Quadratic under every scanned order; the generators of `I_L` use
    /// pairwise disjoint sets of variables (including `I_L = 0`).
    DisjointSupport,
    /// Quadratic under every scanned order but none of the shapes above.
    CounterexampleCandidate,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadraticFinding {
    pub lattice_id: String,
    pub size: usize,
    #[serde(flatten)]
    pub verdict: QuadraticVerdict,
}

#[derive(Debug, Clone)]
pub struct QuadraticScan {
    pub findings: Vec<QuadraticFinding>,
    pub records: Vec<ScanRecord>,
}

/// `Some(r)` when the lattice is the full grid `2 × (r+1)` with `r ≥ 1`, i.e.
/// the divisor lattice of `2·3^r`.
pub fn divisor_shape(lattice: &Lattice) -> Option<usize> {
    let e = planar_embedding(lattice)?;
    let (short, long) = (e.width.min(e.height), e.width.max(e.height));
    (short == 1 && long >= 1 && lattice.len() == 2 * (long + 1)).then_some(long)
}

fn disjoint_support(lattice: &Lattice) -> bool {
    let gens = lattice.basic_binomials();
    let mut seen = vec![false; lattice.len()];
    for g in &gens {
        let mut vars: Vec<usize> = g.lhs.support().chain(g.rhs.support()).map(|(v, _)| v).collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.iter().any(|&v| seen[v]) {
            return false;
        }
        for v in vars {
            seen[v] = true;
        }
    }
    true
}

/// Verdict for one lattice from its sweep records (which must cover `lattice`).
pub fn quadratic_verdict(lattice: &Lattice, records: &[ScanRecord]) -> QuadraticVerdict {
    if let Some(bad) = records.iter().find(|r| !r.quadratic) {
        let order = MonomialOrder::parse(&bad.order, lattice.names()).expect("rendered order parses");
        let report = lattice_ideal_report(lattice, &order);
        let witness = report
            .initial_ideal
            .min_gens()
            .iter()
            .find(|m| m.degree() > 2)
            .map(|m| order.render_monomial(m, lattice.names()))
            .unwrap_or_default();
        return QuadraticVerdict::NotQuadratic {
            order: bad.order.clone(),
            witness,
        };
    }
    if let Some(r) = divisor_shape(lattice) {
        QuadraticVerdict::DivisorShape { r }
    } else if disjoint_support(lattice) {
        QuadraticVerdict::DisjointSupport
    } else {
        QuadraticVerdict::CounterexampleCandidate
    }
}

/// Lattices without cut edges (cut edges are only defined for pure lattices,
/// so every non-pure lattice qualifies).
pub fn has_no_cut_edges(lattice: &Lattice) -> bool {
    lattice.cut_edges().map_or(true, |c| c.is_empty())
}

pub fn quadratic_conjecture_scan(
    max_elements: usize,
    families: &[OrderFamily],
    mode: SweepMode,
) -> Result<QuadraticScan, ExplorerError> {
    let mut findings = Vec::new();
    let mut records = Vec::new();
    for lattice in enumerate_lattices(max_elements, Strategy::default())? {
        if !has_no_cut_edges(&lattice) {
            continue;
        }
        let recs = scan_orders(&lattice, families, mode)?;
        findings.push(QuadraticFinding {
            lattice_id: lattice_id(&lattice),
            size: lattice.len(),
            verdict: quadratic_verdict(&lattice, &recs),
        });
        records.extend(recs);
    }
    Ok(QuadraticScan { findings, records })
}

/// Writes one JSON object per line followed by a `{"summary": ...}` footer.
pub fn write_report<W: Write, T: Serialize>(
    mut out: W,
    rows: &[T],
    summary: serde_json::Value,
) -> io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    serde_json::to_writer(&mut out, &serde_json::json!({ "summary": summary }))?;
    out.write_all(b"\n")?;
    out.flush()
}

pub fn record_summary(records: &[ScanRecord]) -> serde_json::Value {
    serde_json::json!({
        "records": records.len(),
        "squarefree": records.iter().filter(|r| r.squarefree).count(),
        "quadratic": records.iter().filter(|r| r.quadratic).count(),
        "max_degree": records.iter().map(|r| r.max_degree).max().unwrap_or(0),
    })
}
