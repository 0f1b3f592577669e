//! Interval-graph recognition, clique paths, and PQ-trees.
//!
//! The PQ-tree is built from one realized clique path by recursive block
//! decomposition: a block splits into overlap components (a P-node) or, when
//! it stays connected after discounting its spanning vertices, into the
//! finest partition into consecutive modules (a Q-node). Frontiers obtained
//! by permuting P-children and reversing Q-children are exactly the clique
//! paths.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{guard_limit, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::models::IntervalModel;

/// A linear order of the maximal cliques in which every vertex's cliques are
/// consecutive. Clique indices (`lk`, `rk`) are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePath {
    n: usize,
    cliques: Vec<VertexSet>,
}

impl CliquePath {
    pub fn new(n: usize, cliques: Vec<VertexSet>) -> Result<CliquePath> {
        let path = CliquePath { n, cliques };
        for v in 0..n {
            let positions: Vec<usize> = path.positions_of(v).collect();
            if let (Some(&first), Some(&last)) = (positions.first(), positions.last()) {
                if positions.len() != last - first + 1 {
                    return Err(Error::InvalidGraph(format!(
                        "cliques of vertex {v} are not consecutive"
                    )));
                }
            }
        }
        Ok(path)
    }

    fn positions_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.cliques
            .iter()
            .enumerate()
            .filter(move |(_, c)| c.contains(&v))
            .map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn clique(&self, i: usize) -> &VertexSet {
        &self.cliques[i]
    }

    /// 1-based index of the first clique containing `v`.
    pub fn lk(&self, v: usize) -> Option<usize> {
        self.positions_of(v).next().map(|i| i + 1)
    }

    /// 1-based index of the last clique containing `v`.
    pub fn rk(&self, v: usize) -> Option<usize> {
        self.positions_of(v).last().map(|i| i + 1)
    }

    /// Checks that the path's cliques are exactly the maximal cliques of `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        let mut mine: Vec<VertexSet> = self.cliques.clone();
        mine.sort();
        mine.dedup();
        if mine != g.maximal_cliques()? || mine.len() != self.cliques.len() {
            return Err(Error::InvalidGraph(
                "clique path does not list the maximal cliques exactly once".into(),
            ));
        }
        Ok(())
    }

    /// The interval model with `lp(v) = lk(v)` and `rp(v) = rk(v)`
    /// (stored at scale 3).
    pub fn to_model(&self) -> IntervalModel {
        clique_path_to_model(self)
    }
}

/// The interval model read off a clique path: `I(v) = [lk(v), rk(v)]`.
pub fn clique_path_to_model(path: &CliquePath) -> IntervalModel {
    let scale = 3;
    let mut lp = vec![0i64; path.n()];
    let mut rp = vec![0i64; path.n()];
    for v in 0..path.n() {
        let l = path.lk(v).expect("vertex missing from clique path") as i64;
        let r = path.rk(v).unwrap() as i64;
        lp[v] = scale * l;
        rp[v] = scale * r;
    }
    IntervalModel::new(lp, rp, scale).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PqNode {
    /// A maximal clique (index into `PqTree::cliques`).
    Leaf(usize),
    /// Children may be permuted arbitrarily.
    P(Vec<usize>),
    /// Ordered children; only full reversal is allowed.
    Q(Vec<usize>),
}

/// Rooted labeled tree over the maximal cliques of an interval graph.
#[derive(Debug, Clone)]
pub struct PqTree {
    graph: Graph,
    cliques: Vec<VertexSet>,
    nodes: Vec<PqNode>,
    root: usize,
}

impl PqTree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn clique(&self, id: usize) -> &VertexSet {
        &self.cliques[id]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, id: usize) -> &PqNode {
        &self.nodes[id]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn children(&self, id: usize) -> &[usize] {
        match &self.nodes[id] {
            PqNode::Leaf(_) => &[],
            PqNode::P(ch) | PqNode::Q(ch) => ch,
        }
    }

    /// Clique ids at the leaves below `id`, in stored frontier order.
    pub fn leaf_cliques(&self, id: usize) -> Vec<usize> {
        match &self.nodes[id] {
            PqNode::Leaf(c) => vec![*c],
            PqNode::P(ch) | PqNode::Q(ch) => {
                ch.iter().flat_map(|&c| self.leaf_cliques(c)).collect()
            }
        }
    }

    /// Vertices appearing in the cliques below `id`.
    pub fn vertex_set(&self, id: usize) -> VertexSet {
        self.leaf_cliques(id)
            .into_iter()
            .flat_map(|c| self.cliques[c].iter().copied())
            .collect()
    }

    /// Nested s-expression, e.g. `(P (P K1 K2) (P (Q K3 K4 K5) K6))`.
    pub fn to_sexpr(&self) -> String {
        self.sexpr_of(self.root)
    }

    fn sexpr_of(&self, id: usize) -> String {
        match &self.nodes[id] {
            PqNode::Leaf(c) => format!("K{}", c + 1),
            PqNode::P(ch) => format!(
                "(P {})",
                ch.iter()
                    .map(|&c| self.sexpr_of(c))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            PqNode::Q(ch) => format!(
                "(Q {})",
                ch.iter()
                    .map(|&c| self.sexpr_of(c))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
        }
    }

    /// Number of distinct frontiers (clique paths).
    pub fn frontier_count(&self) -> u128 {
        self.count_of(self.root)
    }

    fn count_of(&self, id: usize) -> u128 {
        match &self.nodes[id] {
            PqNode::Leaf(_) => 1,
            PqNode::P(ch) => {
                let mut total = factorial(ch.len());
                for &c in ch {
                    total = total.saturating_mul(self.count_of(c));
                }
                total
            }
            PqNode::Q(ch) => {
                let mut total = 2u128;
                for &c in ch {
                    total = total.saturating_mul(self.count_of(c));
                }
                total
            }
        }
    }

    /// All frontiers as clique-id sequences, provided their number does not
    /// exceed `limit`.
    pub fn frontiers(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let total = self.frontier_count();
        if total > limit as u128 {
            return Err(Error::LimitExceeded { total });
        }
        Ok(self.frontiers_of(self.root))
    }

    fn frontiers_of(&self, id: usize) -> Vec<Vec<usize>> {
        match &self.nodes[id] {
            PqNode::Leaf(c) => vec![vec![*c]],
            PqNode::P(ch) => {
                let per_child: Vec<Vec<Vec<usize>>> =
                    ch.iter().map(|&c| self.frontiers_of(c)).collect();
                let mut out = Vec::new();
                for perm in permutations(ch.len()) {
                    let ordered: Vec<&Vec<Vec<usize>>> =
                        perm.iter().map(|&i| &per_child[i]).collect();
                    cartesian_concat(&ordered, &mut out);
                }
                out
            }
            PqNode::Q(ch) => {
                let per_child: Vec<Vec<Vec<usize>>> =
                    ch.iter().map(|&c| self.frontiers_of(c)).collect();
                let mut out = Vec::new();
                let fwd: Vec<&Vec<Vec<usize>>> = per_child.iter().collect();
                cartesian_concat(&fwd, &mut out);
                let rev: Vec<&Vec<Vec<usize>>> = per_child.iter().rev().collect();
                cartesian_concat(&rev, &mut out);
                out
            }
        }
    }

    /// Clique paths generated by the tree, up to `limit`.
    pub fn clique_paths(&self, limit: usize) -> Result<Vec<CliquePath>> {
        let fronts = self.frontiers(limit)?;
        Ok(fronts
            .into_iter()
            .map(|ids| {
                CliquePath::new(
                    self.graph.n(),
                    ids.iter().map(|&c| self.cliques[c].clone()).collect(),
                )
                .expect("frontier is a clique path")
            })
            .collect())
    }

    /// The stored frontier as a clique path.
    pub fn canonical_path(&self) -> CliquePath {
        let ids = self.leaf_cliques(self.root);
        CliquePath::new(
            self.graph.n(),
            ids.iter().map(|&c| self.cliques[c].clone()).collect(),
        )
        .expect("stored frontier is a clique path")
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    heap_permute(&mut items, k, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn cartesian_concat(parts: &[&Vec<Vec<usize>>], out: &mut Vec<Vec<usize>>) {
    fn rec(parts: &[&Vec<Vec<usize>>], idx: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx == parts.len() {
            out.push(acc.clone());
            return;
        }
        for choice in parts[idx] {
            let len = acc.len();
            acc.extend_from_slice(choice);
            rec(parts, idx + 1, acc, out);
            acc.truncate(len);
        }
    }
    rec(parts, 0, &mut Vec::new(), out);
}

/// The three vertex sets attached to a PQ-tree node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSets {
    /// Vertices whose cliques all lie below the node.
    pub inner: VertexSet,
    /// Vertices of the node's subgraph whose cliques extend beyond it.
    pub encomp: VertexSet,
    /// Vertices universal in the subgraph induced by the node.
    pub univ: VertexSet,
}

/// Computes inner/encomp/univ for a node.
pub fn node_sets(tree: &PqTree, id: usize) -> NodeSets {
    let clique_ids: BTreeSet<usize> = tree.leaf_cliques(id).into_iter().collect();
    let vs = tree.vertex_set(id);
    let h = tree.graph();
    let mut inner = VertexSet::new();
    for &v in &vs {
        let mine: BTreeSet<usize> = (0..tree.cliques().len())
            .filter(|&c| tree.cliques()[c].contains(&v))
            .collect();
        if mine.is_subset(&clique_ids) {
            inner.insert(v);
        }
    }
    let encomp: VertexSet = vs.difference(&inner).copied().collect();
    let univ: VertexSet = vs
        .iter()
        .copied()
        .filter(|&v| vs.iter().all(|&u| u == v || h.adjacent(u, v)))
        .collect();
    NodeSets {
        inner,
        encomp,
        univ,
    }
}

/// Searches for a clique-path order of the given cliques by backtracking with
/// run-contiguity pruning. Returns clique indices, or `None` when no order
/// exists. Node budget defaults to 10^6 (`ARCFLIP_GUARD` overrides).
pub fn find_clique_path_order(n: usize, cliques: &[VertexSet]) -> Result<Option<Vec<usize>>> {
    let l = cliques.len();
    if l == 0 {
        return Ok(Some(vec![]));
    }
    if l > 64 {
        return Err(Error::Unsupported(format!(
            "clique-path search supports up to 64 cliques, got {l}"
        )));
    }
    let mut membership: Vec<u64> = vec![0; n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            membership[v] |= 1 << i;
        }
    }
    let limit = guard_limit(1_000_000);
    let mut nodes = 0u64;
    let mut order = Vec::with_capacity(l);
    let mut dead: HashSet<(u64, usize)> = HashSet::new();

    fn rec(
        cliques: &[VertexSet],
        membership: &[u64],
        order: &mut Vec<usize>,
        used: u64,
        nodes: &mut u64,
        limit: u64,
        dead: &mut HashSet<(u64, usize)>,
    ) -> Result<bool> {
        let l = cliques.len();
        if order.len() == l {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > limit {
            return Err(Error::GuardExceeded {
                what: "clique-path search",
                limit,
            });
        }
        let last = order.last().copied();
        if let Some(last) = last {
            if dead.contains(&(used, last)) {
                return Ok(false);
            }
        }
        for c in 0..l {
            if used & (1 << c) != 0 {
                continue;
            }
            // every vertex of c that has already appeared must still be open,
            // i.e. contained in the previous clique
            let ok = cliques[c].iter().all(|&v| {
                let seen = membership[v] & used;
                seen == 0 || last.is_some_and(|lc| cliques[lc].contains(&v))
            });
            if !ok {
                continue;
            }
            order.push(c);
            if rec(cliques, membership, order, used | (1 << c), nodes, limit, dead)? {
                return Ok(true);
            }
            order.pop();
        }
        if let Some(last) = last {
            dead.insert((used, last));
        }
        Ok(false)
    }

    let found = rec(cliques, &membership, &mut order, 0, &mut nodes, limit, &mut dead)?;
    Ok(found.then_some(order))
}

/// Whether the graph admits a clique path.
pub fn is_interval(h: &Graph) -> Result<bool> {
    if h.n() == 0 {
        return Ok(true);
    }
    let cliques = h.maximal_cliques()?;
    Ok(find_clique_path_order(h.n(), &cliques)?.is_some())
}

/// Builds the PQ-tree of an interval graph. Fails with `Error::NotInterval`
/// when no clique path exists (use `recognize_interval` for a witness).
pub fn build_pq_tree(h: &Graph) -> Result<PqTree> {
    let cliques = if h.n() == 0 {
        vec![VertexSet::new()]
    } else {
        h.maximal_cliques()?
    };
    let order = if h.n() == 0 {
        vec![0]
    } else {
        find_clique_path_order(h.n(), &cliques)?.ok_or(Error::NotInterval)?
    };
    // runs of every vertex over positions of the realized order
    let l = order.len();
    let mut run: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (pos, &c) in order.iter().enumerate() {
        for &v in &cliques[c] {
            let e = run.entry(v).or_insert((pos, pos));
            e.0 = e.0.min(pos);
            e.1 = e.1.max(pos);
        }
    }
    let mut nodes = Vec::new();
    let root = build_block(&order, &run, 0, l - 1, &mut nodes)?;
    let tree = PqTree {
        graph: h.clone(),
        cliques,
        nodes,
        root,
    };
    debug_assert!(validate_arities(&tree));
    Ok(tree)
}

fn validate_arities(tree: &PqTree) -> bool {
    (0..tree.node_count()).all(|id| match tree.node(id) {
        PqNode::Leaf(_) => true,
        PqNode::P(ch) => ch.len() >= 2,
        PqNode::Q(ch) => ch.len() >= 3,
    })
}

fn build_block(
    order: &[usize],
    run: &BTreeMap<usize, (usize, usize)>,
    lo: usize,
    hi: usize,
    nodes: &mut Vec<PqNode>,
) -> Result<usize> {
    if lo == hi {
        nodes.push(PqNode::Leaf(order[lo]));
        return Ok(nodes.len() - 1);
    }
    // positions belong to one overlap component when some non-spanning
    // vertex covers both
    let mut parent: Vec<usize> = (lo..=hi).collect();
    fn find(parent: &mut Vec<usize>, lo: usize, x: usize) -> usize {
        let mut x = x;
        while parent[x - lo] != x {
            parent[x - lo] = parent[parent[x - lo] - lo];
            x = parent[x - lo];
        }
        x
    }
    for (&_v, &(s, e)) in run.iter() {
        if s <= lo && e >= hi {
            continue; // spans the whole block
        }
        if e < lo || s > hi {
            continue;
        }
        if s < lo || e > hi {
            return Err(Error::InvalidGraph(
                "internal: vertex run crosses a block boundary".into(),
            ));
        }
        for p in s..e {
            let (a, b) = (find(&mut parent, lo, p), find(&mut parent, lo, p + 1));
            if a != b {
                parent[b - lo] = a;
            }
        }
    }
    let mut comp_ranges: Vec<(usize, usize)> = Vec::new();
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new(); // root -> index in comp_ranges
    for p in lo..=hi {
        let r = find(&mut parent, lo, p);
        match seen.get(&r) {
            Some(&i) => {
                comp_ranges[i].1 = comp_ranges[i].1.max(p);
            }
            None => {
                seen.insert(r, comp_ranges.len());
                comp_ranges.push((p, p));
            }
        }
    }
    // components of the realized order must be consecutive runs
    for w in comp_ranges.windows(2) {
        if w[0].1 >= w[1].0 {
            return Err(Error::InvalidGraph(
                "internal: interleaved overlap components".into(),
            ));
        }
    }
    if comp_ranges.len() >= 2 {
        let mut children = Vec::new();
        for &(a, b) in &comp_ranges {
            children.push(build_block(order, run, a, b, nodes)?);
        }
        nodes.push(PqNode::P(children));
        return Ok(nodes.len() - 1);
    }
    // connected: finest partition into consecutive proper modules
    let is_module = |a: usize, b: usize| -> bool {
        run.values().all(|&(s, e)| {
            let intersects = s <= b && e >= a;
            let contained = s >= a && e <= b;
            let contains = s <= a && e >= b;
            !intersects || contained || contains
        })
    };
    let mut children_ranges = Vec::new();
    let mut start = lo;
    while start <= hi {
        let mut best = start;
        for b in (start..=hi).rev() {
            if b - lo + 1 == hi - lo + 1 && start == lo {
                continue; // whole block is not a proper module
            }
            if is_module(start, b) {
                best = b;
                break;
            }
        }
        children_ranges.push((start, best));
        start = best + 1;
    }
    if children_ranges.len() < 3 {
        return Err(Error::InvalidGraph(
            "internal: connected block with fewer than three modules".into(),
        ));
    }
    let mut children = Vec::new();
    for &(a, b) in &children_ranges {
        children.push(build_block(order, run, a, b, nodes)?);
    }
    nodes.push(PqNode::Q(children));
    Ok(nodes.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_clique_graph() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let tree = build_pq_tree(&g).unwrap();
        assert_eq!(tree.to_sexpr(), "K1");
        assert_eq!(tree.frontier_count(), 1);
        assert_eq!(tree.clique_paths(10).unwrap().len(), 1);
    }

    #[test]
    fn p4_two_paths() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let tree = build_pq_tree(&g).unwrap();
        assert!(matches!(tree.node(tree.root()), PqNode::Q(ch) if ch.len() == 3));
        assert_eq!(tree.frontier_count(), 2);
        let paths = tree.clique_paths(10).unwrap();
        assert_eq!(paths.len(), 2);
        for p in &paths {
            p.validate_for(&g).unwrap();
        }
    }

    #[test]
    fn h16_tree_shape() {
        let g = fixtures::h16();
        let tree = build_pq_tree(&g).unwrap();
        assert_eq!(tree.to_sexpr(), "(P (P K1 K2) (P (Q K3 K4 K5) K6))");
        assert_eq!(tree.frontier_count(), 16);
        let paths = tree.clique_paths(16).unwrap();
        assert_eq!(paths.len(), 16);
        // all sixteen are distinct clique paths of the graph
        let mut seen = BTreeSet::new();
        for p in &paths {
            p.validate_for(&g).unwrap();
            seen.insert(format!("{p:?}"));
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn h16_node_sets() {
        let g = fixtures::h16();
        let tree = build_pq_tree(&g).unwrap();
        let q = (0..tree.node_count())
            .find(|&id| matches!(tree.node(id), PqNode::Q(_)))
            .unwrap();
        let ns = node_sets(&tree, q);
        let want_inner: VertexSet = [8, 9, 10, 11, 12, 13].iter().map(|v| v - 1).collect();
        let want_encomp: VertexSet = [1, 2, 7].iter().map(|v| v - 1).collect();
        let want_univ: VertexSet = [1, 2, 7, 8].iter().map(|v| v - 1).collect();
        assert_eq!(ns.inner, want_inner);
        assert_eq!(ns.encomp, want_encomp);
        assert_eq!(ns.univ, want_univ);
        // the root has no vertices above it
        assert!(node_sets(&tree, tree.root()).encomp.is_empty());
    }

    #[test]
    fn h16_model_values() {
        let g = fixtures::h16();
        let cliques = fixtures::h16_cliques();
        let path = CliquePath::new(g.n(), cliques).unwrap();
        path.validate_for(&g).unwrap();
        let m = path.to_model();
        m.realizes(&g).unwrap();
        // vertex 1 spans [1,6], vertex 10 sits at [3,3] (scale 3)
        assert_eq!((m.lp(0), m.rp(0)), (3, 18));
        assert_eq!((m.lp(9), m.rp(9)), (9, 9));
    }

    #[test]
    fn singleton_model() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let tree = build_pq_tree(&g).unwrap();
        let path = tree.canonical_path();
        let m = path.to_model();
        assert_eq!((m.lp(0), m.rp(0)), (3, 3));
    }

    #[test]
    fn frontier_set_matches_brute_force() {
        // every frontier is a clique path and every clique path is a frontier
        let graphs = [
            fixtures::h16(),
            // caterpillar: path with legs
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        for g in graphs {
            let cliques = g.maximal_cliques().unwrap();
            let l = cliques.len();
            if l > 7 {
                continue;
            }
            let tree = build_pq_tree(&g).unwrap();
            let mut frontiers: BTreeSet<Vec<usize>> =
                tree.frontiers(100_000).unwrap().into_iter().collect();
            // brute force: filter all permutations by consecutiveness
            let mut valid = BTreeSet::new();
            let mut perm: Vec<usize> = (0..l).collect();
            loop {
                let ok = (0..g.n()).all(|v| {
                    let pos: Vec<usize> = perm
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| cliques[c].contains(&v))
                        .map(|(i, _)| i)
                        .collect();
                    pos.is_empty() || pos[pos.len() - 1] - pos[0] + 1 == pos.len()
                });
                if ok {
                    valid.insert(perm.clone());
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            assert_eq!(frontiers, valid, "graph {g:?}");
            frontiers.clear();
        }
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

    #[test]
    fn hole_is_not_interval() {
        for k in 4..8 {
            assert!(!is_interval(&fixtures::hole(k)).unwrap());
        }
        assert!(!is_interval(&fixtures::long_claw()).unwrap());
        assert!(!is_interval(&fixtures::whipping_top()).unwrap());
        assert!(!is_interval(&fixtures::sun3()).unwrap());
        assert!(is_interval(&fixtures::h16()).unwrap());
    }
}
