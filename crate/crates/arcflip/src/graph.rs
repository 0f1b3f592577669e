use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{guard_limit, Error, Result};

pub type VertexSet = BTreeSet<usize>;

/// An immutable simple graph with labeled vertices.
///
/// Vertices are dense indices `0..n`; labels are a parallel sequence and only
/// matter at I/O boundaries. Adjacency is symmetric and irreflexive by
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n(), self.m())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl Graph {
    /// Builds a graph on `n` vertices labeled `"1".."n"` with the given edges.
    /// Duplicate edges collapse; self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Graph::with_labels(labels, edges)
    }

    /// Builds a graph with explicit labels (must be pairwise distinct).
    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = labels.len();
        {
            let mut seen = BTreeSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(Error::InvalidGraph(format!("duplicate label {l:?}")));
                }
            }
        }
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { labels, adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Renders a vertex set as sorted labels, e.g. `{u1,u2,v1}`.
    pub fn set_to_string(&self, s: &VertexSet) -> String {
        let names: Vec<&str> = s.iter().map(|&v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|&u| s.iter().all(|&v| u == v || self.adjacent(u, v)))
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) == self.n() - 1
    }

    /// Induced subgraph on `keep` (ascending); labels carry over.
    /// Returns the subgraph and the map from new indices to old.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().copied().collect();
        let pos: BTreeMap<usize, usize> = old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in old.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Some(&j) = pos.get(&v) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        (Graph::with_labels(labels, &edges).unwrap(), old)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::with_labels(self.labels.clone(), &edges).unwrap()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Exactly the vertices whose closed neighborhood is a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| self.is_clique(&self.closed_neighborhood(v)))
            .collect()
    }

    /// Inclusion-maximal cliques, sorted lexicographically. Pivoting
    /// branch-and-bound with a result-count guard (default 10^6, overridable
    /// through `ARCFLIP_GUARD`).
    pub fn maximal_cliques(&self) -> Result<Vec<VertexSet>> {
        let n = self.n();
        if n == 0 {
            return Ok(vec![]);
        }
        if n > 128 {
            return Err(Error::Unsupported(format!(
                "clique enumeration supports up to 128 vertices, got {n}"
            )));
        }
        let limit = guard_limit(1_000_000);
        let masks: Vec<u128> = (0..n)
            .map(|v| self.adj[v].iter().fold(0u128, |m, &u| m | (1 << u)))
            .collect();
        let mut out: Vec<u128> = Vec::new();
        let all = if n == 128 { !0u128 } else { (1u128 << n) - 1 };
        bron_kerbosch(&masks, 0, all, 0, &mut out, limit as usize)?;
        let mut cliques: Vec<VertexSet> = out
            .into_iter()
            .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
            .collect();
        cliques.sort();
        Ok(cliques)
    }

    /// Every clique of the graph (including the empty one), deduplicated,
    /// enumerated against the same guard as `maximal_cliques`.
    pub fn all_cliques(&self) -> Result<Vec<VertexSet>> {
        let limit = guard_limit(1_000_000) as usize;
        let mut out: Vec<VertexSet> = vec![VertexSet::new()];
        // grow cliques by largest vertex
        let mut stack: Vec<VertexSet> = self.vertices().map(|v| VertexSet::from([v])).collect();
        while let Some(c) = stack.pop() {
            if out.len() >= limit {
                return Err(Error::GuardExceeded {
                    what: "clique enumeration",
                    limit: limit as u64,
                });
            }
            let &top = c.iter().next_back().unwrap();
            for v in top + 1..self.n() {
                if c.iter().all(|&u| self.adjacent(u, v)) {
                    let mut c2 = c.clone();
                    c2.insert(v);
                    stack.push(c2);
                }
            }
            out.push(c);
        }
        out.sort();
        Ok(out)
    }

    /// Finds an induced four-cycle, if any, as `(a, b, c, d)` with edges
    /// ab, bc, cd, da and non-edges ac, bd.
    pub fn find_c4(&self) -> Option<[usize; 4]> {
        let n = self.n();
        for a in 0..n {
            for c in a + 1..n {
                if self.adjacent(a, c) {
                    continue;
                }
                let common: Vec<usize> = self.adj[a].intersection(&self.adj[c]).copied().collect();
                for (i, &b) in common.iter().enumerate() {
                    for &d in &common[i + 1..] {
                        if !self.adjacent(b, d) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Finds an induced cycle of length >= 4, if any.
    pub fn find_hole(&self) -> Option<Vec<usize>> {
        // Chordal test by repeated simplicial deletion; on a stuck subgraph,
        // extract a hole through some vertex with two non-adjacent neighbors.
        let mut alive: VertexSet = self.vertices().collect();
        loop {
            let mut progressed = false;
            for &v in alive.clone().iter() {
                let nb: Vec<usize> = self.adj[v].intersection(&alive).copied().collect();
                let simplicial = nb
                    .iter()
                    .all(|&a| nb.iter().all(|&b| a == b || self.adjacent(a, b)));
                if simplicial {
                    alive.remove(&v);
                    progressed = true;
                }
            }
            if alive.is_empty() {
                return None;
            }
            if !progressed {
                break;
            }
        }
        // every remaining vertex is non-simplicial in G[alive]
        for &v in &alive {
            let nb: Vec<usize> = self.adj[v].intersection(&alive).copied().collect();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if self.adjacent(a, b) {
                        continue;
                    }
                    // shortest a-b path avoiding N[v] \ {a,b}, inside `alive`
                    let mut allowed = alive.clone();
                    allowed.remove(&v);
                    for &w in &self.adj[v] {
                        if w != a && w != b {
                            allowed.remove(&w);
                        }
                    }
                    if let Some(path) = self.shortest_path_within(a, b, &allowed) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        debug_assert!(cycle.len() >= 4);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    /// Shortest path from `a` to `b` using only vertices in `allowed`
    /// (endpoints included). Shortest paths are induced within the allowed set.
    pub fn shortest_path_within(
        &self,
        a: usize,
        b: usize,
        allowed: &VertexSet,
    ) -> Option<Vec<usize>> {
        if !allowed.contains(&a) || !allowed.contains(&b) {
            return None;
        }
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::from([a]);
        let mut seen = BTreeSet::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if allowed.contains(&w) && seen.insert(w) {
                    prev.insert(w, u);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn is_chordal(&self) -> bool {
        self.find_hole().is_none()
    }

    pub fn is_c4_free(&self) -> bool {
        self.find_c4().is_none()
    }

    /// The structural predicates every downstream module consumes.
    pub fn structure_report(&self) -> StructureReport {
        let universal_vertices: VertexSet =
            self.vertices().filter(|&v| self.is_universal(v)).collect();
        let mut classes: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
        for v in self.vertices() {
            classes
                .entry(self.closed_neighborhood(v))
                .or_default()
                .push(v);
        }
        let twin_classes: Vec<Vec<usize>> = classes.into_values().collect();
        let c4_witness = self.find_c4();
        let hole_witness = self.find_hole();
        StructureReport {
            universal_vertices,
            twin_classes,
            is_c4_free: c4_witness.is_none(),
            is_chordal: hole_witness.is_none(),
            c4_witness,
            hole_witness,
        }
    }
}

fn bron_kerbosch(
    masks: &[u128],
    r: u128,
    p: u128,
    x: u128,
    out: &mut Vec<u128>,
    limit: usize,
) -> Result<()> {
    if p == 0 && x == 0 {
        if out.len() >= limit {
            return Err(Error::GuardExceeded {
                what: "maximal-clique enumeration",
                limit: limit as u64,
            });
        }
        out.push(r);
        return Ok(());
    }
    if p == 0 {
        return Ok(());
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    let pivot = iter_bits(p | x)
        .max_by_key(|&v| (masks[v] & p).count_ones())
        .unwrap();
    let candidates = p & !masks[pivot];
    let mut p = p;
    let mut x = x;
    for v in iter_bits(candidates) {
        let bit = 1u128 << v;
        bron_kerbosch(masks, r | bit, p & masks[v], x & masks[v], out, limit)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}

fn iter_bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Structural facts about a graph: universal vertices, twin classes,
/// four-cycle and hole witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub universal_vertices: VertexSet,
    pub twin_classes: Vec<Vec<usize>>,
    pub is_c4_free: bool,
    pub is_chordal: bool,
    pub c4_witness: Option<[usize; 4]>,
    pub hole_witness: Option<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn k3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn k3_report() {
        let g = k3();
        let r = g.structure_report();
        assert_eq!(r.universal_vertices, VertexSet::from([0, 1, 2]));
        assert_eq!(r.twin_classes.len(), 1);
        assert!(r.is_c4_free && r.is_chordal);
    }

    #[test]
    fn k3_cliques() {
        assert_eq!(k3().maximal_cliques().unwrap(), vec![VertexSet::from([0, 1, 2])]);
    }

    #[test]
    fn sun3_structure() {
        let g = fixtures::sun3();
        let r = g.structure_report();
        assert!(r.is_chordal);
        assert!(r.universal_vertices.is_empty());
        // cliques: {2,4,6},{1,2,6},{2,3,4},{4,5,6} in 1-based labels
        let want: Vec<VertexSet> = vec![
            VertexSet::from([0, 1, 5]),
            VertexSet::from([1, 2, 3]),
            VertexSet::from([1, 3, 5]),
            VertexSet::from([3, 4, 5]),
        ];
        assert_eq!(g.maximal_cliques().unwrap(), want);
        assert_eq!(g.simplicial_vertices(), VertexSet::from([0, 2, 4]));
    }

    #[test]
    fn gd_has_c4() {
        let g = fixtures::gd();
        let r = g.structure_report();
        assert!(!r.is_c4_free);
        let w = r.c4_witness.unwrap();
        // the witness is an induced 4-cycle
        let [a, b, c, d] = w;
        assert!(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a));
        assert!(!g.adjacent(a, c) && !g.adjacent(b, d));
    }

    #[test]
    fn path_simplicial() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.simplicial_vertices(), VertexSet::from([0, 3]));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.simplicial_vertices().is_empty());
        assert_eq!(c5.find_hole().unwrap().len(), 5);
    }

    #[test]
    fn universal_iff_degree() {
        let g = fixtures::gm();
        let r = g.structure_report();
        for v in g.vertices() {
            assert_eq!(
                r.universal_vertices.contains(&v),
                g.degree(v) == g.n() - 1
            );
        }
    }

    #[test]
    fn brute_force_cliques_agree() {
        // maximal cliques agree with subset enumeration on small graphs
        let graphs = [fixtures::sun3(), fixtures::gm(), fixtures::gd(), k3()];
        for g in graphs {
            let n = g.n();
            let mut brute: Vec<VertexSet> = Vec::new();
            for mask in 0u32..(1 << n) {
                let s: VertexSet = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                if s.is_empty() || !g.is_clique(&s) {
                    continue;
                }
                let maximal = (0..n)
                    .filter(|v| !s.contains(v))
                    .all(|v| !s.iter().all(|&u| g.adjacent(u, v)));
                if maximal {
                    brute.push(s);
                }
            }
            brute.sort();
            assert_eq!(g.maximal_cliques().unwrap(), brute);
        }
    }
}
