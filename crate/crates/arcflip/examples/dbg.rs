use arcflip::aux_graph::build_aux_graph;
use arcflip::enumerate::connected_graphs;
use arcflip::pq::is_interval;
use arcflip::star::{check_star, finder_fallbacks, StarOutcome};

fn main() {
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
                let before = finder_fallbacks();
                let out = check_star(&aux).unwrap();
                if finder_fallbacks() > before {
                    println!("FALLBACK on {:?} K={}", g, g.set_to_string(&k));
                    println!("derived: {:?}", aux.derived());
                    println!("pairs: {:?}", aux.pairs());
                    if let StarOutcome::Witness(w) = out {
                        println!("witness: {:?} map {:?} path {:?}", w.config, w.map, w.path);
                    }
                }
            }
        }
    }
}
