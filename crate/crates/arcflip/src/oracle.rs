//! Independent brute-force deciders for small instances. These check the
//! constructive pipeline from the definitions alone: exhaustive clique-path
//! enumeration, endpoint interleavings on a line, and circular endpoint
//! arrangements.

use crate::aux_graph::{build_aux_graph, AuxGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::models::{verify_arc_model, ArcModel};

/// Whether some clique-path ordering of the derived graph's maximal cliques
/// satisfies the end-alignment condition for every dominance pair
/// (`lk(u) = lk(v)` or `rk(v) = rk(u)`). Guard: at most 8 maximal cliques.
pub fn oracle_star(aux: &AuxGraph) -> Result<bool> {
    let derived = aux.derived();
    let cliques = derived.maximal_cliques()?;
    let l = cliques.len();
    if l > 8 {
        return Err(Error::GuardExceeded {
            what: "clique-path enumeration",
            limit: 8,
        });
    }
    if l == 0 {
        return Ok(true);
    }
    let mut perm: Vec<usize> = (0..l).collect();
    loop {
        if path_is_consecutive(derived, &cliques, &perm)
            && star_holds(aux, &cliques, &perm)
        {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn path_is_consecutive(g: &Graph, cliques: &[VertexSet], perm: &[usize]) -> bool {
    (0..g.n()).all(|v| {
        let pos: Vec<usize> = perm
            .iter()
            .enumerate()
            .filter(|(_, &c)| cliques[c].contains(&v))
            .map(|(i, _)| i)
            .collect();
        pos.is_empty() || pos[pos.len() - 1] - pos[0] + 1 == pos.len()
    })
}

fn star_holds(aux: &AuxGraph, cliques: &[VertexSet], perm: &[usize]) -> bool {
    let place = |x: usize| -> (usize, usize) {
        let pos: Vec<usize> = perm
            .iter()
            .enumerate()
            .filter(|(_, &c)| cliques[c].contains(&x))
            .map(|(i, _)| i)
            .collect();
        (pos[0], pos[pos.len() - 1])
    };
    aux.pairs().iter().all(|&(v, u)| {
        let (lv, rv) = place(v);
        let (lu, ru) = place(u);
        lu == lv || rv == ru
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Whether some interval model of the derived graph satisfies the
/// double-extension biconditional, decided by pruned backtracking over
/// interleavings of the 2n endpoints. Guard: n <= 6.
pub fn oracle_sharp(g: &Graph, k: &VertexSet) -> Result<bool> {
    let n = g.n();
    if n > 6 {
        return Err(Error::GuardExceeded {
            what: "endpoint interleaving search",
            limit: 6,
        });
    }
    if n == 0 {
        return Ok(true);
    }
    let aux = build_aux_graph(g, k)?;
    let derived = aux.derived();
    let mut pos_l = vec![usize::MAX; n];
    let mut pos_r = vec![usize::MAX; n];
    let mut open: Vec<usize> = Vec::new();
    let mut done: Vec<usize> = Vec::new();

    fn place(
        g: &Graph,
        k: &VertexSet,
        derived: &Graph,
        p: usize,
        pos_l: &mut Vec<usize>,
        pos_r: &mut Vec<usize>,
        open: &mut Vec<usize>,
        done: &mut Vec<usize>,
    ) -> bool {
        let n = g.n();
        if p == 2 * n {
            return true;
        }
        for v in 0..n {
            if pos_l[v] == usize::MAX {
                // open the interval of v: every currently open interval meets it
                if open.iter().all(|&u| derived.adjacent(u, v))
                    && done.iter().all(|&u| !derived.adjacent(u, v))
                {
                    // completed intervals can never meet v again
                    pos_l[v] = p;
                    open.push(v);
                    if place(g, k, derived, p + 1, pos_l, pos_r, open, done) {
                        return true;
                    }
                    open.retain(|&u| u != v);
                    pos_l[v] = usize::MAX;
                }
            } else if pos_r[v] == usize::MAX {
                // close the interval of v and settle its extension constraints
                let ok = done.iter().all(|&u| check_pair_sharp(g, k, pos_l, v, u));
                if ok {
                    pos_r[v] = p;
                    open.retain(|&u| u != v);
                    done.push(v);
                    if place(g, k, derived, p + 1, pos_l, pos_r, open, done) {
                        return true;
                    }
                    done.pop();
                    open.push(v);
                    pos_r[v] = usize::MAX;
                }
            }
        }
        false
    }

    // at the moment `later` closes, `earlier` is already closed: `later`
    // cannot be doubly extended by `earlier`, and `earlier` sits inside
    // `later` exactly when it opened after it
    fn check_pair_sharp(
        g: &Graph,
        k: &VertexSet,
        pos_l: &[usize],
        later: usize,
        earlier: usize,
    ) -> bool {
        if k.contains(&later) && !k.contains(&earlier) {
            let doubly = pos_l[later] < pos_l[earlier];
            return doubly == !g.adjacent(later, earlier);
        }
        if k.contains(&earlier) && !k.contains(&later) {
            // not doubly extended, so the base edge must be present
            return g.adjacent(later, earlier);
        }
        true
    }

    Ok(place(
        g, k, derived, 0, &mut pos_l, &mut pos_r, &mut open, &mut done,
    ))
}

/// Whether the graph has a circular-arc model, by backtracking over circular
/// arrangements of the 2n arc endpoints; on success returns a realizing
/// model on a circle of circumference 2n. Guard: n <= 7.
pub fn oracle_circular_arc(g: &Graph) -> Result<Option<ArcModel>> {
    let n = g.n();
    if n > 7 {
        return Err(Error::GuardExceeded {
            what: "circular arrangement search",
            limit: 7,
        });
    }
    if n == 0 {
        return Ok(Some(ArcModel::new(1, vec![], 1)?));
    }
    let mut pos_l = vec![usize::MAX; n];
    let mut pos_r = vec![usize::MAX; n];
    // rotation normalization: the left endpoint of vertex 0 sits at 0
    pos_l[0] = 0;

    fn solve(
        g: &Graph,
        p: usize,
        pos_l: &mut Vec<usize>,
        pos_r: &mut Vec<usize>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = g.n();
        if p == 2 * n {
            return Some((pos_l.clone(), pos_r.clone()));
        }
        for v in 0..n {
            // try opening v normally (left endpoint first)
            if pos_l[v] == usize::MAX && pos_r[v] == usize::MAX && ok_open(g, v, pos_l, pos_r) {
                pos_l[v] = p;
                if let Some(sol) = solve(g, p + 1, pos_l, pos_r) {
                    return Some(sol);
                }
                pos_l[v] = usize::MAX;
            }
            // try placing the right endpoint first: the arc will wrap
            if pos_r[v] == usize::MAX && pos_l[v] == usize::MAX && ok_wrap_start(g, v, pos_l, pos_r)
            {
                pos_r[v] = p;
                if let Some(sol) = solve(g, p + 1, pos_l, pos_r) {
                    return Some(sol);
                }
                pos_r[v] = usize::MAX;
            }
            // close a normally-opened arc
            if pos_l[v] != usize::MAX && pos_r[v] == usize::MAX && pos_l[v] < p {
                if ok_close(g, v, p, pos_l, pos_r) {
                    pos_r[v] = p;
                    if let Some(sol) = solve(g, p + 1, pos_l, pos_r) {
                        return Some(sol);
                    }
                    pos_r[v] = usize::MAX;
                }
            }
            // finish a wrapping arc: from here it covers every later position
            if pos_r[v] != usize::MAX && pos_l[v] == usize::MAX {
                if ok_wrap_close(g, v, pos_l, pos_r) {
                    pos_l[v] = p;
                    if let Some(sol) = solve(g, p + 1, pos_l, pos_r) {
                        return Some(sol);
                    }
                    pos_l[v] = usize::MAX;
                }
            }
        }
        None
    }

    // v opens normally at the current position p: it will occupy [p, R_v]
    // with R_v < 2n, so it meets exactly the arcs covering some position >= p
    fn ok_open(g: &Graph, v: usize, pos_l: &[usize], pos_r: &[usize]) -> bool {
        for u in 0..g.n() {
            if u == v {
                continue;
            }
            let open = pos_l[u] != usize::MAX && pos_r[u] == usize::MAX;
            let closed = pos_l[u] != usize::MAX && pos_r[u] != usize::MAX;
            if open && !g.adjacent(u, v) {
                return false; // u still covers this position
            }
            if closed {
                let u_wraps = pos_r[u] < pos_l[u];
                if u_wraps && !g.adjacent(u, v) {
                    return false; // u's tail covers every later position
                }
                if !u_wraps && g.adjacent(u, v) {
                    return false; // u ended before p and can never meet v
                }
            }
        }
        true
    }

    // v's right endpoint comes first: the arc covers everything up to here
    // and everything from its future left endpoint on, so it meets every arc
    // with any endpoint already placed and every arc still awaiting one
    fn ok_wrap_start(g: &Graph, v: usize, pos_l: &[usize], pos_r: &[usize]) -> bool {
        for u in 0..g.n() {
            if u == v {
                continue;
            }
            let placed_any = pos_l[u] != usize::MAX || pos_r[u] != usize::MAX;
            if placed_any && !g.adjacent(u, v) {
                return false;
            }
        }
        true
    }

    // v closes normally: its arc is exactly [pos_l[v], p]
    fn ok_close(g: &Graph, v: usize, p: usize, pos_l: &[usize], pos_r: &[usize]) -> bool {
        let lv = pos_l[v];
        for u in 0..g.n() {
            if u == v {
                continue;
            }
            let closed = pos_l[u] != usize::MAX && pos_r[u] != usize::MAX;
            let wrap_pending = pos_r[u] != usize::MAX && pos_l[u] == usize::MAX;
            if closed {
                let u_wraps = pos_r[u] < pos_l[u];
                // a closed wrap covers [pos_l[u], 2n) ∪ [0, pos_r[u]] and
                // pos_l[u] < p, so it always meets [lv, p]
                let intersect = u_wraps || (pos_l[u] <= p && lv <= pos_r[u]);
                if intersect != g.adjacent(u, v) {
                    return false;
                }
            } else if wrap_pending {
                // u covers [0, pos_r[u]] now and resumes after p
                let intersect = lv <= pos_r[u];
                if intersect != g.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    // v finishes a wrap at position p: it covers [p, 2n) ∪ [0, pos_r[v]]
    fn ok_wrap_close(g: &Graph, v: usize, pos_l: &[usize], pos_r: &[usize]) -> bool {
        for u in 0..g.n() {
            if u == v {
                continue;
            }
            let closed = pos_l[u] != usize::MAX && pos_r[u] != usize::MAX;
            if !closed {
                // any remaining endpoint of u lands inside v's tail
                if !g.adjacent(u, v) {
                    return false;
                }
                continue;
            }
            let u_wraps = pos_r[u] < pos_l[u];
            let intersect = u_wraps || pos_l[u] <= pos_r[v];
            if intersect != g.adjacent(u, v) {
                return false;
            }
        }
        true
    }

    if let Some((l, r)) = solve(g, 1, &mut pos_l, &mut pos_r) {
        let arcs: Vec<(i64, i64)> = (0..n).map(|v| (l[v] as i64, r[v] as i64)).collect();
        let model = ArcModel::new(2 * n as i64, arcs, 1)?;
        verify_arc_model(g, &model)?;
        Ok(Some(model))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn c4_is_circular_arc() {
        let m = oracle_circular_arc(&fixtures::hole(4)).unwrap();
        assert!(m.is_some());
    }

    #[test]
    fn holes_are_circular_arc() {
        for k in 4..=7 {
            assert!(oracle_circular_arc(&fixtures::hole(k)).unwrap().is_some());
        }
    }

    #[test]
    fn gd_is_not_circular_arc() {
        assert!(oracle_circular_arc(&fixtures::gd()).unwrap().is_none());
    }

    #[test]
    fn sun3_is_circular_arc() {
        assert!(oracle_circular_arc(&fixtures::sun3()).unwrap().is_some());
    }

    #[test]
    fn net_is_circular_arc() {
        assert!(oracle_circular_arc(&fixtures::sun_complement(3))
            .unwrap()
            .is_some());
    }

    #[test]
    fn long_claw_is_not_circular_arc() {
        assert!(oracle_circular_arc(&fixtures::long_claw())
            .unwrap()
            .is_none());
    }

    #[test]
    fn gd_star_but_not_sharp() {
        let g = fixtures::gd();
        let k = fixtures::gd_clique();
        let aux = build_aux_graph(&g, &k).unwrap();
        assert!(oracle_star(&aux).unwrap());
        assert!(!oracle_sharp(&g, &k).unwrap());
    }

    #[test]
    fn p4_pendant_clique_is_sharp() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(oracle_sharp(&g, &VertexSet::from([1])).unwrap());
        assert!(oracle_sharp(&g, &VertexSet::new()).unwrap());
    }

    #[test]
    fn long_claw_star_fails() {
        let g = fixtures::long_claw();
        let c = g.index_of_label("c").unwrap();
        let aux = build_aux_graph(&g, &VertexSet::from([c])).unwrap();
        assert!(!oracle_star(&aux).unwrap());
    }

    #[test]
    fn p4_star_holds() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let aux = build_aux_graph(&g, &VertexSet::from([1])).unwrap();
        assert!(oracle_star(&aux).unwrap());
    }

    #[test]
    fn sun3_simplicial_clique_is_sharp() {
        let g = fixtures::sun3();
        // closed neighborhood of the simplicial vertex 1
        let k = g.closed_neighborhood(0);
        assert!(oracle_sharp(&g, &k).unwrap());
    }

    #[test]
    fn circular_arc_iff_some_clique_sharp() {
        // both sides of the flip correspondence on two small fixtures
        for g in [fixtures::sun3(), fixtures::gd()] {
            let ca = oracle_circular_arc(&g).unwrap().is_some();
            let mut any_sharp = false;
            for k in g.all_cliques().unwrap() {
                if oracle_sharp(&g, &k).unwrap() {
                    any_sharp = true;
                    break;
                }
            }
            assert_eq!(ca, any_sharp, "{g:?}");
        }
    }
}
