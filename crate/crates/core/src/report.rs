//! Per-order summaries of `I_L`.

use serde::Serialize;

use crate::groebner::{buchberger, MonomialIdeal, ReducedGroebnerBasis};
use crate::lattice::Lattice;
use crate::order::MonomialOrder;

/// Printed in every rendered report so readers know how priorities are listed.
pub const ORDER_CONVENTION: &str = "order variables are listed from largest to smallest";

#[derive(Clone, Debug)]
pub struct LatticeIdealReport {
    pub gb: ReducedGroebnerBasis,
    pub initial_ideal: MonomialIdeal,
    pub squarefree: bool,
    pub quadratic: bool,
    pub max_degree: u32,
}

pub fn lattice_ideal_report(lattice: &Lattice, order: &MonomialOrder) -> LatticeIdealReport {
    let gb = buchberger(&lattice.basic_binomials(), order);
    LatticeIdealReport::from_basis(gb)
}

impl LatticeIdealReport {
    pub fn from_basis(gb: ReducedGroebnerBasis) -> Self {
        let initial_ideal = gb.initial_ideal();
        LatticeIdealReport {
            squarefree: initial_ideal.is_squarefree(),
            quadratic: gb.is_quadratic(),
            max_degree: gb.max_degree(),
            initial_ideal,
            gb,
        }
    }

    pub fn render(&self, names: &[String]) -> RenderedReport {
        let order = self.gb.order();
        RenderedReport {
            convention: ORDER_CONVENTION,
            order: order.render(names),
            gb: self.gb.render(names),
            min_gens: self
                .initial_ideal
                .min_gens()
                .iter()
                .map(|m| order.render_monomial(m, names))
                .collect(),
            squarefree: self.squarefree,
            quadratic: self.quadratic,
            max_degree: self.max_degree,
        }
    }
}

/// JSON shape of a report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RenderedReport {
    pub convention: &'static str,
    pub order: String,
    pub gb: Vec<String>,
    pub min_gens: Vec<String>,
    pub squarefree: bool,
    pub quadratic: bool,
    pub max_degree: u32,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::order::rank_revlex;

    #[test]
    fn c2_lex_d_largest() {
        let c2 = catalog("c2").unwrap();
        let ord = MonomialOrder::parse("lex:d,a,b,c,e,f,g", c2.names()).unwrap();
        let r = lattice_ideal_report(&c2, &ord).render(c2.names());
        assert!(r.min_gens.contains(&"aef".to_string()));
        assert!(!r.quadratic);
        assert!(r.squarefree);
        assert_eq!(r.max_degree, 3);
    }

    #[test]
    fn diamond_rank_revlex_not_squarefree() {
        let d = catalog("diamond").unwrap();
        let ord = rank_revlex(&d, &["b", "c", "d"]).unwrap();
        let r = lattice_ideal_report(&d, &ord).render(d.names());
        assert!(!r.squarefree);
        assert!(r.min_gens.contains(&"ad^2e".to_string()));
        assert!(r.gb.contains(&"ad^2e - a^2e^2".to_string()));
        let json = serde_json::to_value(&r).unwrap();
        for key in ["order", "gb", "min_gens", "squarefree", "quadratic", "max_degree"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn chain_zero_ideal() {
        let c = catalog("chain:4").unwrap();
        let ord = rank_revlex::<&str>(&c, &[]).unwrap();
        let r = lattice_ideal_report(&c, &ord);
        assert!(r.gb.is_empty() && r.squarefree && r.quadratic);
        assert_eq!(r.max_degree, 0);
    }
}
