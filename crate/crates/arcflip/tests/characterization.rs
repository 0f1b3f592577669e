//! Both directions of the configuration characterization, checked against
//! the brute-force clique-path oracle on every small instance: for a graph
//! without universal vertices, a clique K, and an interval derived graph,
//! an end-aligned clique path exists iff no configuration embeds.

use std::collections::BTreeMap;

use arcflip::aux_graph::build_aux_graph;
use arcflip::config::{find_config, verify_witness};
use arcflip::enumerate::connected_graphs;
use arcflip::oracle::oracle_star;
use arcflip::pq::is_interval;
use arcflip::star::{check_star, finder_fallbacks, StarOutcome};

#[test]
fn configurations_characterize_star_on_small_instances() {
    let mut instances = 0usize;
    let mut with_config = 0usize;
    let mut emitted: BTreeMap<&'static str, usize> = BTreeMap::new();
    for n in 2..=6 {
        for g in connected_graphs(n) {
            if g.vertices().any(|v| g.is_universal(v)) {
                continue;
            }
            for k in g.all_cliques().unwrap() {
                let aux = build_aux_graph(&g, &k).unwrap();
                if !is_interval(aux.derived()).unwrap() {
                    continue;
                }
                if aux.derived().maximal_cliques().unwrap().len() > 8 {
                    continue;
                }
                instances += 1;
                let star = oracle_star(&aux).unwrap();
                let found = find_config(&aux).unwrap();
                match &found {
                    Some(w) => {
                        verify_witness(&aux, w).unwrap();
                        with_config += 1;
                    }
                    None => {}
                }
                assert_eq!(
                    star,
                    found.is_none(),
                    "graph {:?} clique {} star={} config={:?}",
                    g,
                    g.set_to_string(&k),
                    star,
                    found.map(|w| w.config)
                );
                // the constructive solver agrees and emits verifying output
                match check_star(&aux).unwrap() {
                    StarOutcome::Path(p) => {
                        assert!(star, "solver found a path but the oracle says no: {g:?}");
                        p.validate_for(aux.derived()).unwrap();
                    }
                    StarOutcome::Witness(w) => {
                        assert!(!star, "solver emitted {:?} but a path exists: {g:?}", w.config);
                        verify_witness(&aux, &w).unwrap();
                        *emitted.entry(w.config.pattern().id.name()).or_default() += 1;
                    }
                }
            }
        }
    }
    println!("checked {instances} instances, {with_config} carried a configuration");
    println!("solver-emitted witnesses by configuration: {emitted:?}");
    println!("finder fallbacks: {}", finder_fallbacks());
    assert!(instances > 1000);
    assert!(with_config > 50);
    assert_eq!(finder_fallbacks(), 0, "case-built witnesses must verify");
}
