//! The auxiliary graph derived from a graph and a clique, and its dominance
//! pairs.
//!
//! For a graph `G` with no universal vertex and a clique `K`, the derived
//! graph lives on the same vertex set with edges
//!
//! * `u, u' ∉ K`: adjacent iff `uu' ∈ E(G)`;
//! * `v, v' ∈ K`: adjacent iff `N[v] ∪ N[v'] ≠ V(G)` or `vv'` lies on an
//!   induced four-cycle of `G`;
//! * `v ∈ K, u ∉ K`: adjacent iff `uv ∉ E(G)`, or `uv ∈ E(G)` and
//!   `N[u] ⊄ N[v]`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::models::edge_on_induced_c4;

/// A graph `G`, a clique `K`, the derived graph on the same vertex set, and
/// the dominance pairs, computed eagerly.
#[derive(Debug, Clone)]
pub struct AuxGraph {
    graph: Graph,
    clique: VertexSet,
    derived: Graph,
    pairs: BTreeSet<(usize, usize)>,
}

impl AuxGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn clique(&self) -> &VertexSet {
        &self.clique
    }

    pub fn derived(&self) -> &Graph {
        &self.derived
    }

    /// The dominance pairs `(v, u)`: `v ∈ K`, `u ∉ K`, `uv ∈ E(G)`, and the
    /// closed neighborhood of `u` in the derived graph is contained in that
    /// of `v`.
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn in_clique(&self, v: usize) -> bool {
        self.clique.contains(&v)
    }
}

/// Builds the derived graph. `K` must be a clique and `G` must have no
/// universal vertex.
pub fn build_aux_graph(g: &Graph, k: &VertexSet) -> Result<AuxGraph> {
    if !g.is_clique(k) {
        return Err(Error::NotAClique(g.set_to_string(k)));
    }
    if let Some(v) = g.vertices().find(|&v| g.is_universal(v)) {
        return Err(Error::UniversalVertex(g.label(v).to_string()));
    }
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let edge = match (k.contains(&u), k.contains(&v)) {
                (false, false) => g.adjacent(u, v),
                (true, true) => {
                    let mut union: VertexSet =
                        g.neighbors(u).union(g.neighbors(v)).copied().collect();
                    union.insert(u);
                    union.insert(v);
                    union.len() != n || edge_on_induced_c4(g, u, v)
                }
                (true, false) => cross_edge(g, u, v),
                (false, true) => cross_edge(g, v, u),
            };
            if edge {
                edges.push((u, v));
            }
        }
    }
    let derived = Graph::with_labels(g.labels().to_vec(), &edges)?;
    let pairs = dominance_pairs_of(g, k, &derived);
    Ok(AuxGraph {
        graph: g.clone(),
        clique: k.clone(),
        derived,
        pairs,
    })
}

// v in K, u outside
fn cross_edge(g: &Graph, v: usize, u: usize) -> bool {
    if !g.adjacent(u, v) {
        return true;
    }
    !g.closed_neighborhood(u)
        .is_subset(&g.closed_neighborhood(v))
}

fn dominance_pairs_of(g: &Graph, k: &VertexSet, derived: &Graph) -> BTreeSet<(usize, usize)> {
    let mut pairs = BTreeSet::new();
    for &v in k {
        for u in g.vertices().filter(|u| !k.contains(u)) {
            if g.adjacent(u, v)
                && derived
                    .closed_neighborhood(u)
                    .is_subset(&derived.closed_neighborhood(v))
            {
                pairs.insert((v, u));
            }
        }
    }
    pairs
}

/// The dominance pairs of an already-built auxiliary graph.
pub fn dominance_pairs(aux: &AuxGraph) -> &BTreeSet<(usize, usize)> {
    aux.pairs()
}

impl AuxGraph {
    /// Assembles an instance from hand-given parts, trusting `derived` as the
    /// derived graph. `build_aux_graph` is the normative constructor; this
    /// exists for catalog self-tests and tooling on literal instances.
    pub fn from_parts(graph: Graph, clique: VertexSet, derived: Graph) -> Result<AuxGraph> {
        if graph.n() != derived.n() {
            return Err(Error::InvalidGraph(
                "base and derived graphs must share the vertex set".into(),
            ));
        }
        if !graph.is_clique(&clique) {
            return Err(Error::NotAClique(graph.set_to_string(&clique)));
        }
        let pairs = dominance_pairs_of(&graph, &clique, &derived);
        Ok(AuxGraph {
            graph,
            clique,
            derived,
            pairs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn idx(g: &Graph, l: &str) -> usize {
        g.index_of_label(l).unwrap()
    }

    #[test]
    fn gm_derived_adjacency() {
        let g = fixtures::gm();
        let aux = build_aux_graph(&g, &fixtures::gm_clique()).unwrap();
        let d = aux.derived();
        let s = idx(&g, "s");
        assert!(g.vertices().filter(|&v| v != s).all(|v| d.adjacent(s, v)));
        let want: [(&str, &[&str]); 3] = [
            ("v1", &["u1", "u2", "u3", "u4"]),
            ("v2", &["u1", "u2"]),
            ("v3", &["u1", "u2", "u3"]),
        ];
        for (v, us) in want {
            for u in ["u1", "u2", "u3", "u4"] {
                assert_eq!(
                    d.adjacent(idx(&g, v), idx(&g, u)),
                    us.contains(&u),
                    "{v} vs {u}"
                );
            }
        }
        for (a, b) in [("v1", "v2"), ("v1", "v3"), ("v2", "v3")] {
            assert!(d.adjacent(idx(&g, a), idx(&g, b)));
        }
        // vertices outside the clique keep their edges
        for (a, b) in [("u1", "u2"), ("u2", "u3"), ("u3", "u4")] {
            assert!(d.adjacent(idx(&g, a), idx(&g, b)));
        }
        assert!(!d.adjacent(idx(&g, "u1"), idx(&g, "u3")));
    }

    #[test]
    fn gm_pairs() {
        let g = fixtures::gm();
        let aux = build_aux_graph(&g, &fixtures::gm_clique()).unwrap();
        let want: BTreeSet<(usize, usize)> = [
            (idx(&g, "v1"), idx(&g, "u1")),
            (idx(&g, "v1"), idx(&g, "u3")),
        ]
        .into();
        assert_eq!(*aux.pairs(), want);
    }

    #[test]
    fn gd_derived_and_pairs() {
        let g = fixtures::gd();
        let aux = build_aux_graph(&g, &fixtures::gd_clique()).unwrap();
        let d = aux.derived();
        for v in ["v1", "v2"] {
            for u in ["u1", "u2", "u3", "u4"] {
                assert!(d.adjacent(idx(&g, v), idx(&g, u)));
            }
        }
        assert!(d.adjacent(idx(&g, "v1"), idx(&g, "v2")));
        assert!(d.adjacent(idx(&g, "u1"), idx(&g, "u2")));
        assert!(d.adjacent(idx(&g, "u3"), idx(&g, "u4")));
        assert!(!d.adjacent(idx(&g, "u1"), idx(&g, "u3")));
        let want: BTreeSet<(usize, usize)> = [
            (idx(&g, "v1"), idx(&g, "u1")),
            (idx(&g, "v1"), idx(&g, "u3")),
            (idx(&g, "v2"), idx(&g, "u2")),
            (idx(&g, "v2"), idx(&g, "u4")),
        ]
        .into();
        assert_eq!(*aux.pairs(), want);
    }

    #[test]
    fn p4_single_vertex_clique() {
        let g = Graph::with_labels(
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            &[(0, 1), (1, 2), (2, 3)],
        )
        .unwrap();
        let aux = build_aux_graph(&g, &VertexSet::from([1])).unwrap();
        // derived graph: triangle {b,c,d} plus isolated a. The pair (b,a)
        // fails containment (a is isolated there), while (b,c) satisfies it
        // with equal closed neighborhoods.
        assert_eq!(*aux.pairs(), BTreeSet::from([(1, 2)]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = fixtures::gd();
        let not_clique = VertexSet::from([2, 3, 4]); // u1, u2, u3
        assert!(matches!(
            build_aux_graph(&g, &not_clique),
            Err(Error::NotAClique(_))
        ));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(
            build_aux_graph(&star, &VertexSet::from([0])),
            Err(Error::UniversalVertex(_))
        ));
    }

    #[test]
    fn containment_for_base_non_edges() {
        // for every v in K, u outside with uv ∉ E(G), the closed
        // neighborhood of u in the derived graph is inside that of v
        for (g, k) in [
            (fixtures::gm(), fixtures::gm_clique()),
            (fixtures::gd(), fixtures::gd_clique()),
        ] {
            let aux = build_aux_graph(&g, &k).unwrap();
            let d = aux.derived();
            for &v in &k {
                for u in g.vertices().filter(|u| !k.contains(u)) {
                    if !g.adjacent(u, v) {
                        assert!(d
                            .closed_neighborhood(u)
                            .is_subset(&d.closed_neighborhood(v)));
                    }
                }
            }
        }
    }
}
