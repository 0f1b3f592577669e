//! Obstruction witnesses for the interval layer: deletion-minimal
//! non-interval subgraphs with their classification, and the three shapes
//! blocking a vertex from the end clique of every clique path.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pq::{build_pq_tree, is_interval, PqNode, PqTree};

/// Classification of a deletion-minimal non-interval graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    #[serde(rename = "hole")]
    Hole,
    #[serde(rename = "long-claw")]
    LongClaw,
    #[serde(rename = "whipping-top")]
    WhippingTop,
    #[serde(rename = "dagger")]
    Dagger,
    #[serde(rename = "double-dagger")]
    DoubleDagger,
    #[serde(rename = "unclassified-minimal")]
    UnclassifiedMinimal,
}

/// A vertex set inducing a non-interval subgraph such that every single
/// deletion is interval again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonIntervalWitness {
    pub vertices: VertexSet,
    pub kind: WitnessKind,
}

/// Outcome of interval recognition.
#[derive(Debug, Clone)]
pub enum IntervalOutcome {
    Interval(PqTree),
    NotInterval(NonIntervalWitness),
}

/// Either a PQ-tree of `h` or a deletion-minimal non-interval witness.
pub fn recognize_interval(h: &Graph) -> Result<IntervalOutcome> {
    if is_interval(h)? {
        Ok(IntervalOutcome::Interval(build_pq_tree(h)?))
    } else {
        Ok(IntervalOutcome::NotInterval(extract_non_interval_witness(
            h,
        )?))
    }
}

/// Greedy minimization: repeatedly delete any vertex that keeps the induced
/// subgraph non-interval, then classify. `h` must not be interval.
pub fn extract_non_interval_witness(h: &Graph) -> Result<NonIntervalWitness> {
    let mut keep: VertexSet = h.vertices().collect();
    debug_assert!(!is_interval(h)?);
    loop {
        let mut shrunk = false;
        for &v in keep.clone().iter() {
            let mut cand = keep.clone();
            cand.remove(&v);
            let (sub, _) = h.induced(&cand);
            if !is_interval(&sub)? {
                keep = cand;
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            break;
        }
    }
    let (core, _) = h.induced(&keep);
    Ok(NonIntervalWitness {
        kind: classify_minimal(&core),
        vertices: keep,
    })
}

/// Best-effort classification of a deletion-minimal non-interval graph.
pub fn classify_minimal(g: &Graph) -> WitnessKind {
    let n = g.n();
    if n >= 4 && g.m() == n && g.vertices().all(|v| g.degree(v) == 2) && g.is_connected() {
        return WitnessKind::Hole;
    }
    if n == 7 && are_isomorphic(g, &crate::fixtures::long_claw()) {
        return WitnessKind::LongClaw;
    }
    if n == 7 && are_isomorphic(g, &crate::fixtures::whipping_top()) {
        return WitnessKind::WhippingTop;
    }
    if n >= 6 && are_isomorphic(g, &crate::fixtures::dagger(n - 4)) {
        return WitnessKind::Dagger;
    }
    if n >= 6 && are_isomorphic(g, &crate::fixtures::double_dagger(n - 5)) {
        return WitnessKind::DoubleDagger;
    }
    WitnessKind::UnclassifiedMinimal
}

/// Backtracking isomorphism test (small graphs only).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    // map vertices of a in descending-degree order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn go(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..b.n() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            let ok = order[..depth].iter().all(|&p| {
                let q = image[p].unwrap();
                a.adjacent(v, p) == b.adjacent(w, q)
            });
            if !ok {
                continue;
            }
            image[v] = Some(w);
            used[w] = true;
            if go(a, b, order, depth + 1, image, used) {
                return true;
            }
            image[v] = None;
            used[w] = false;
        }
        false
    }
    go(a, b, &order, 0, &mut image, &mut used)
}

/// The three shapes that pin a vertex away from every end clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EndShape {
    /// The blocked vertex is the center of an induced five-vertex path.
    A,
    /// The blocked vertex hangs off the center of an induced five-vertex path.
    B,
    /// A pendant-decorated triangle reached by a grown induced path.
    C,
}

/// Witness that `blocked` lies in no end clique of any clique path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndVertexWitness {
    pub shape: EndShape,
    /// Shape A: the path `[p0, p1, blocked, p3, p4]`.
    /// Shape B: the path `[p0, p1, p2, p3, p4]`; `blocked` hangs on `p2`.
    /// Shape C: `[t, c, w]`; `t` hangs on `c`, `w` on the far path end.
    pub vertices: Vec<usize>,
    /// Shape C: the induced path from `blocked` to the vertex carrying `w`,
    /// endpoints included; interior vertices all see `c`.
    pub path: Vec<usize>,
    pub blocked: usize,
}

impl EndVertexWitness {
    pub fn all_vertices(&self) -> VertexSet {
        let mut s: VertexSet = self.vertices.iter().copied().collect();
        s.extend(self.path.iter().copied());
        s.insert(self.blocked);
        s
    }
}

/// Decides whether some clique path puts `u` in an end clique; if not,
/// returns a witness shape. Decision is by bounded witness search; the PQ-tree
/// yields the same verdict (checked by the validation sweeps).
pub fn end_clique_feasible(h: &Graph, u: usize) -> Result<Option<EndVertexWitness>> {
    if let Some(w) = find_end_witness(h, u) {
        debug_assert!(!end_feasible_by_tree(&build_pq_tree(h)?, u));
        return Ok(Some(w));
    }
    debug_assert!(end_feasible_by_tree(&build_pq_tree(h)?, u));
    Ok(None)
}

/// PQ-tree route: `u` is end-feasible iff some clique containing it can be
/// the leftmost leaf of a frontier (every Q-ancestor crossed at an end child).
pub fn end_feasible_by_tree(tree: &PqTree, u: usize) -> bool {
    fn endable(tree: &PqTree, id: usize, out: &mut Vec<usize>) {
        match tree.node(id) {
            PqNode::Leaf(c) => out.push(*c),
            PqNode::P(ch) => {
                for &c in ch {
                    endable(tree, c, out);
                }
            }
            PqNode::Q(ch) => {
                endable(tree, ch[0], out);
                endable(tree, *ch.last().unwrap(), out);
            }
        }
    }
    let mut cliques = Vec::new();
    endable(tree, tree.root(), &mut cliques);
    cliques.into_iter().any(|c| tree.clique(c).contains(&u))
}

pub(crate) fn find_end_witness(h: &Graph, u: usize) -> Option<EndVertexWitness> {
    find_shape_a(h, u)
        .or_else(|| find_shape_b(h, u))
        .or_else(|| find_shape_c(h, u))
}

fn find_shape_a(h: &Graph, u: usize) -> Option<EndVertexWitness> {
    let nu = h.closed_neighborhood(u);
    for &a1 in h.neighbors(u) {
        for &a2 in h.neighbors(u) {
            if a2 <= a1 || h.adjacent(a1, a2) {
                continue;
            }
            for &b1 in h.neighbors(a1) {
                if nu.contains(&b1) || h.adjacent(b1, a2) {
                    continue;
                }
                for &b2 in h.neighbors(a2) {
                    if nu.contains(&b2) || b2 == b1 || h.adjacent(b2, a1) || h.adjacent(b2, b1) {
                        continue;
                    }
                    return Some(EndVertexWitness {
                        shape: EndShape::A,
                        vertices: vec![b1, a1, u, a2, b2],
                        path: vec![],
                        blocked: u,
                    });
                }
            }
        }
    }
    None
}

fn find_shape_b(h: &Graph, u: usize) -> Option<EndVertexWitness> {
    let nu = h.closed_neighborhood(u);
    for &p2 in h.neighbors(u) {
        for &p1 in h.neighbors(p2) {
            if nu.contains(&p1) {
                continue;
            }
            for &p3 in h.neighbors(p2) {
                if p3 <= p1 || nu.contains(&p3) || h.adjacent(p1, p3) {
                    continue;
                }
                for &p0 in h.neighbors(p1) {
                    if nu.contains(&p0) || h.adjacent(p0, p2) || h.adjacent(p0, p3) {
                        continue;
                    }
                    for &p4 in h.neighbors(p3) {
                        if nu.contains(&p4)
                            || p4 == p0
                            || h.adjacent(p4, p2)
                            || h.adjacent(p4, p1)
                            || h.adjacent(p4, p0)
                        {
                            continue;
                        }
                        return Some(EndVertexWitness {
                            shape: EndShape::B,
                            vertices: vec![p0, p1, p2, p3, p4],
                            path: vec![],
                            blocked: u,
                        });
                    }
                }
            }
        }
    }
    None
}

fn find_shape_c(h: &Graph, u: usize) -> Option<EndVertexWitness> {
    let nu = h.closed_neighborhood(u);
    for &c in h.neighbors(u) {
        // direct triangle c-u-v1 with pendants t (on c) and w (on v1)
        for &v1 in h.neighbors(u) {
            if v1 == c || !h.adjacent(c, v1) {
                continue;
            }
            for &t in h.neighbors(c) {
                if nu.contains(&t) || h.adjacent(t, v1) {
                    continue;
                }
                for &w in h.neighbors(v1) {
                    if nu.contains(&w) || h.adjacent(w, c) || w == t || h.adjacent(w, t) {
                        continue;
                    }
                    return Some(EndVertexWitness {
                        shape: EndShape::C,
                        vertices: vec![t, c, w],
                        path: vec![u, v1],
                        blocked: u,
                    });
                }
            }
        }
        // grown: v1 not adjacent to u, joined by an induced path whose
        // interior sees c and avoids t and w
        for &v1 in h.neighbors(c) {
            if nu.contains(&v1) {
                continue;
            }
            for &t in h.neighbors(c) {
                if nu.contains(&t) || h.adjacent(t, v1) || t == v1 {
                    continue;
                }
                for &w in h.neighbors(v1) {
                    if nu.contains(&w) || h.adjacent(w, c) || w == t || h.adjacent(w, t) {
                        continue;
                    }
                    let mut allowed: VertexSet = h
                        .neighbors(c)
                        .iter()
                        .copied()
                        .filter(|&x| {
                            x != t && x != w && x != c && !h.adjacent(x, t) && !h.adjacent(x, w)
                        })
                        .collect();
                    allowed.insert(u);
                    allowed.insert(v1);
                    if let Some(path) = h.shortest_path_within(u, v1, &allowed) {
                        if path.len() >= 3 {
                            return Some(EndVertexWitness {
                                shape: EndShape::C,
                                vertices: vec![t, c, w],
                                path,
                                blocked: u,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Structural check that an end-vertex witness is an induced copy of its
/// shape with the blocked vertex in the stated role.
pub fn verify_end_witness(h: &Graph, w: &EndVertexWitness) -> Result<()> {
    let fail = |msg: &str| Err(Error::MalformedWitness(msg.to_string()));
    let distinct = |vs: &[usize]| {
        let s: VertexSet = vs.iter().copied().collect();
        s.len() == vs.len()
    };
    match w.shape {
        EndShape::A => {
            let [p0, p1, c, p3, p4] = w.vertices[..] else {
                return fail("shape A needs five vertices");
            };
            if c != w.blocked || !distinct(&w.vertices) {
                return fail("blocked vertex must be the path center");
            }
            check_induced_path(h, &[p0, p1, c, p3, p4])
        }
        EndShape::B => {
            let [p0, p1, p2, p3, p4] = w.vertices[..] else {
                return fail("shape B needs five path vertices");
            };
            let u = w.blocked;
            let mut all = w.vertices.clone();
            all.push(u);
            if !distinct(&all) {
                return fail("repeated vertex");
            }
            check_induced_path(h, &[p0, p1, p2, p3, p4])?;
            for (x, want) in [(p0, false), (p1, false), (p2, true), (p3, false), (p4, false)] {
                if h.adjacent(u, x) != want {
                    return fail("pendant must see exactly the path center");
                }
            }
            Ok(())
        }
        EndShape::C => {
            let [t, c, wv] = w.vertices[..] else {
                return fail("shape C needs three fixed vertices");
            };
            let path = &w.path;
            if path.len() < 2 || path[0] != w.blocked {
                return fail("path must start at the blocked vertex");
            }
            let v1 = *path.last().unwrap();
            let mut all = vec![t, c, wv];
            all.extend_from_slice(path);
            if !distinct(&all) {
                return fail("repeated vertex");
            }
            check_induced_path(h, path)?;
            for &x in path {
                if !h.adjacent(c, x) {
                    return fail("hub must see the whole path");
                }
            }
            if !h.adjacent(t, c) || h.adjacent(t, v1) || !h.adjacent(wv, v1) || h.adjacent(wv, c) {
                return fail("pendant edges wrong");
            }
            if h.adjacent(t, wv) {
                return fail("pendants must not see each other");
            }
            for &x in &path[..path.len() - 1] {
                if h.adjacent(wv, x) {
                    return fail("far pendant sees the path");
                }
            }
            for &x in path {
                if x != path[0] && x != v1 && h.adjacent(t, x) {
                    return fail("near pendant sees the path interior");
                }
            }
            if h.adjacent(t, path[0]) || h.adjacent(t, v1) {
                return fail("near pendant sees a path end");
            }
            Ok(())
        }
    }
}

fn check_induced_path(h: &Graph, p: &[usize]) -> Result<()> {
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let want = j == i + 1;
            if h.adjacent(p[i], p[j]) != want {
                return Err(Error::MalformedWitness(format!(
                    "vertices {} and {} break the induced path",
                    p[i], p[j]
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::connected_graphs;
    use crate::fixtures;
    use crate::pq::build_pq_tree;

    #[test]
    fn classify_fixtures() {
        assert_eq!(classify_minimal(&fixtures::hole(5)), WitnessKind::Hole);
        assert_eq!(
            classify_minimal(&fixtures::long_claw()),
            WitnessKind::LongClaw
        );
        assert_eq!(
            classify_minimal(&fixtures::whipping_top()),
            WitnessKind::WhippingTop
        );
        assert_eq!(classify_minimal(&fixtures::dagger(2)), WitnessKind::Dagger);
        assert_eq!(classify_minimal(&fixtures::dagger(3)), WitnessKind::Dagger);
        assert_eq!(
            classify_minimal(&fixtures::double_dagger(1)),
            WitnessKind::DoubleDagger
        );
        assert_eq!(
            classify_minimal(&fixtures::double_dagger(2)),
            WitnessKind::DoubleDagger
        );
        // the 3-sun is the smallest double-dagger
        assert_eq!(
            classify_minimal(&fixtures::sun3()),
            WitnessKind::DoubleDagger
        );
    }

    #[test]
    fn witnesses_on_fixtures() {
        for (g, kind, size) in [
            (fixtures::hole(4), WitnessKind::Hole, 4),
            (fixtures::long_claw(), WitnessKind::LongClaw, 7),
            (fixtures::whipping_top(), WitnessKind::WhippingTop, 7),
            (fixtures::sun3(), WitnessKind::DoubleDagger, 6),
        ] {
            let w = extract_non_interval_witness(&g).unwrap();
            assert_eq!(w.kind, kind);
            assert_eq!(w.vertices.len(), size);
        }
    }

    #[test]
    fn minimality_holds() {
        for g in [fixtures::sun3(), fixtures::whipping_top(), fixtures::hole(6)] {
            let w = extract_non_interval_witness(&g).unwrap();
            let (sub, _) = g.induced(&w.vertices);
            assert!(!is_interval(&sub).unwrap());
            for &v in &w.vertices {
                let mut smaller = w.vertices.clone();
                smaller.remove(&v);
                let (s, _) = g.induced(&smaller);
                assert!(is_interval(&s).unwrap());
            }
        }
    }

    #[test]
    fn p5_center_blocked() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let w = end_clique_feasible(&p5, 2).unwrap().unwrap();
        assert_eq!(w.shape, EndShape::A);
        verify_end_witness(&p5, &w).unwrap();
        // endpoints of a path are always end-feasible
        assert!(end_clique_feasible(&p5, 0).unwrap().is_none());
        assert!(end_clique_feasible(&p5, 4).unwrap().is_none());
    }

    #[test]
    fn pendant_on_center_blocked() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        let w = end_clique_feasible(&g, 5).unwrap().unwrap();
        assert_eq!(w.shape, EndShape::B);
        verify_end_witness(&g, &w).unwrap();
    }

    #[test]
    fn triangle_with_pendants_blocked() {
        // triangle {0,1,2}, pendant 3 on 0, pendant 4 on 1: vertex 2 blocked
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        let w = end_clique_feasible(&g, 2).unwrap().unwrap();
        assert_eq!(w.shape, EndShape::C);
        verify_end_witness(&g, &w).unwrap();
        assert!(end_clique_feasible(&g, 3).unwrap().is_none());
    }

    #[test]
    fn search_agrees_with_tree_on_small_interval_graphs() {
        for n in 2..=6 {
            for g in connected_graphs(n) {
                if !is_interval(&g).unwrap() {
                    continue;
                }
                let tree = build_pq_tree(&g).unwrap();
                for u in g.vertices() {
                    let by_search = find_end_witness(&g, u).is_none();
                    let by_tree = end_feasible_by_tree(&tree, u);
                    assert_eq!(by_search, by_tree, "graph {g:?} vertex {u}");
                    if let Some(w) = find_end_witness(&g, u) {
                        verify_end_witness(&g, &w).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn tree_feasibility_matches_frontier_enumeration() {
        for n in 2..=6 {
            for g in connected_graphs(n) {
                if !is_interval(&g).unwrap() {
                    continue;
                }
                let tree = build_pq_tree(&g).unwrap();
                if tree.frontier_count() > 5000 {
                    continue;
                }
                let paths = tree.clique_paths(5000).unwrap();
                for u in g.vertices() {
                    let brute = paths.iter().any(|p| {
                        p.clique(0).contains(&u) || p.clique(p.len() - 1).contains(&u)
                    });
                    assert_eq!(end_feasible_by_tree(&tree, u), brute);
                }
            }
        }
    }
}
