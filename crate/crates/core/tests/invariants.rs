use latgb_core::canonical::lattice_id;
use latgb_core::enumerate::{enumerate_lattices, Strategy as Generation};
use latgb_core::explorer::scan_orders;
use latgb_core::io::{lattice_to_json, parse_lattice};
use latgb_core::{
    buchberger, catalog, lattice_ideal_report, CoverPolicy, Lattice, MonomialOrder, OrderFamily, SweepMode,
};
use proptest::prelude::*;

fn small_lattices() -> Vec<Lattice> {
    enumerate_lattices(6, Generation::GrowByTop).unwrap()
}

#[test]
fn scan_records_match_direct_reports() {
    for name in ["pentagon", "diamond", "c2", "divisor:12"] {
        let l = catalog(name).unwrap();
        let records = scan_orders(&l, &OrderFamily::ALL, SweepMode::Sample { count: 25, seed: 5 }).unwrap();
        assert_eq!(records.len(), 25);
        for r in &records {
            let order = MonomialOrder::parse(&r.order, l.names()).unwrap();
            let report = lattice_ideal_report(&l, &order);
            assert_eq!(r.lattice_id, lattice_id(&l));
            assert_eq!(r.squarefree, report.squarefree);
            assert_eq!(r.quadratic, report.quadratic);
            assert_eq!(r.max_degree, report.max_degree);
            assert_eq!(r.gb_size, report.gb.len());
        }
    }
}

#[test]
fn enumerated_lattices_round_trip_through_json() {
    for l in small_lattices() {
        let back = parse_lattice(&lattice_to_json(&l), CoverPolicy::Strict).unwrap();
        assert_eq!(back, l);
    }
}

fn priority_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn basis_is_reduced_and_spans_the_generators(
        (index, family, priority) in (0..25usize, prop::sample::select(OrderFamily::ALL.to_vec()))
            .prop_flat_map(|(i, f)| {
                let n = small_lattices()[i].len();
                (Just(i), Just(f), priority_strategy(n))
            })
    ) {
        let l = &small_lattices()[index];
        let order = MonomialOrder::new(family, priority);
        let gb = buchberger(&l.basic_binomials(), &order);
        for g in gb.elements() {
            prop_assert!(order.greater(&g.lead, &g.tail));
            for h in gb.elements() {
                prop_assert!(g == h || !h.lead.divides(&g.lead));
                prop_assert!(!h.lead.divides(&g.tail));
            }
        }
        for b in l.basic_binomials() {
            prop_assert!(gb.contains(&b));
        }
    }

    #[test]
    fn relabelling_preserves_the_basis(
        (name, perm, family) in prop::sample::select(vec!["pentagon", "diamond", "c2", "b3", "divisor:12"])
            .prop_flat_map(|name| {
                let n = catalog(name).unwrap().len();
                (Just(name), priority_strategy(n), prop::sample::select(OrderFamily::ALL.to_vec()))
            })
    ) {
        let l = catalog(name).unwrap();
        let names: Vec<String> = l.names().to_vec();
        let order = MonomialOrder::from_names(family, &names, &names).unwrap();
        let shuffled = l.reordered(&perm);
        let moved = MonomialOrder::from_names(family, &names, shuffled.names()).unwrap();
        let a = lattice_ideal_report(&l, &order).render(l.names());
        let b = lattice_ideal_report(&shuffled, &moved).render(shuffled.names());
        prop_assert_eq!(a, b);
    }
}
