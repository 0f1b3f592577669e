//! Constructive end-alignment solver: builds a clique path of the derived
//! graph in which every dominance pair shares a left or right clique index,
//! working bottom-up along the PQ-tree, or emits the forbidden configuration
//! dictated by the failing step. For four-cycle-free base graphs the path is
//! then realized as an interval model meeting the double-extension
//! biconditional.

use std::cell::Cell;
use std::collections::BTreeMap;

use crate::aux_graph::AuxGraph;
use crate::config::{find_config_bounded, verify_witness, ConfigId, ConfigWitness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::models::IntervalModel;
use crate::obstruction::{find_end_witness, EndShape};
use crate::pq::{build_pq_tree, node_sets, CliquePath, NodeSets, PqNode, PqTree};

/// An admissible clique path for a PQ-tree node: the boundary-forced
/// vertices sit in an end clique, and inner dominance pairs share an end
/// index.
#[derive(Debug, Clone)]
pub struct AdmissibleState {
    pub node: usize,
    /// Clique ids of the tree, in path order.
    pub path: Vec<usize>,
    /// Vertices outside the clique forced into an end clique by a pair with
    /// an encompassing clique vertex.
    pub extreme: VertexSet,
}

/// Result of the solver.
#[derive(Debug, Clone)]
pub enum StarOutcome {
    /// A clique path of the derived graph satisfying the end-alignment
    /// condition, verified before return.
    Path(CliquePath),
    /// A verifying configuration embedding.
    Witness(ConfigWitness),
}

thread_local! {
    static FALLBACKS: Cell<u64> = const { Cell::new(0) };
}

/// How many times witness emission had to fall back to the exhaustive
/// finder because a case-built witness failed verification. The sweeps pin
/// this to zero.
pub fn finder_fallbacks() -> u64 {
    FALLBACKS.with(|c| c.get())
}

/// Per-node data shared across the recursion.
pub struct StarContext<'a> {
    aux: &'a AuxGraph,
    tree: &'a PqTree,
    sets: Vec<NodeSets>,
}

impl<'a> StarContext<'a> {
    pub fn new(aux: &'a AuxGraph, tree: &'a PqTree) -> StarContext<'a> {
        let sets = (0..tree.node_count())
            .map(|id| node_sets(tree, id))
            .collect();
        StarContext { aux, tree, sets }
    }

    fn derived(&self) -> &Graph {
        self.aux.derived()
    }

    fn sets(&self, node: usize) -> &NodeSets {
        &self.sets[node]
    }

    /// extreme(A): inner non-clique vertices paired with an encompassing
    /// clique vertex.
    fn extreme_of(&self, node: usize) -> VertexSet {
        let ns = self.sets(node);
        self.aux
            .pairs()
            .iter()
            .filter(|&&(v, u)| {
                ns.inner.contains(&u)
                    && !self.aux.in_clique(u)
                    && ns.encomp.contains(&v)
                    && self.aux.in_clique(v)
            })
            .map(|&(_, u)| u)
            .collect()
    }

    fn clique(&self, id: usize) -> &VertexSet {
        self.tree.clique(id)
    }
}

enum Step {
    State(AdmissibleState),
    Witness(ConfigWitness),
}

/// Decides the end-alignment condition constructively. The derived graph
/// must be interval (callers recognize it first).
pub fn check_star(aux: &AuxGraph) -> Result<StarOutcome> {
    let tree = build_pq_tree(aux.derived())?;
    let ctx = StarContext::new(aux, &tree);
    match solve(&ctx, tree.root())? {
        Step::Witness(w) => {
            verify_witness(aux, &w)?;
            Ok(StarOutcome::Witness(w))
        }
        Step::State(state) => {
            let path = CliquePath::new(
                aux.derived().n(),
                state.path.iter().map(|&c| ctx.clique(c).clone()).collect(),
            )?;
            path.validate_for(aux.derived())?;
            if !path_is_admissible(&ctx, tree.root(), &state.path) {
                return Err(Error::InvalidGraph(
                    "internal: constructed path fails the alignment condition".into(),
                ));
            }
            Ok(StarOutcome::Path(path))
        }
    }
}

fn solve(ctx: &StarContext, node: usize) -> Result<Step> {
    let step = match ctx.tree.node(node) {
        PqNode::Leaf(c) => Step::State(AdmissibleState {
            node,
            path: vec![*c],
            extreme: ctx.extreme_of(node),
        }),
        PqNode::P(children) => {
            let mut states = Vec::with_capacity(children.len());
            for &c in children {
                match solve(ctx, c)? {
                    Step::Witness(w) => return Ok(Step::Witness(w)),
                    Step::State(s) => states.push(s),
                }
            }
            match p_node_combine(ctx, node, states)? {
                Ok(s) => Step::State(s),
                Err(w) => Step::Witness(w),
            }
        }
        PqNode::Q(children) => {
            let mut states = Vec::with_capacity(children.len());
            for &c in children {
                match solve(ctx, c)? {
                    Step::Witness(w) => return Ok(Step::Witness(w)),
                    Step::State(s) => states.push(s),
                }
            }
            let frame = QNodeFrame::new(ctx, node);
            match q_node_combine(ctx, &frame, states)? {
                Ok(s) => Step::State(s),
                Err(w) => Step::Witness(w),
            }
        }
    };
    if let Step::State(s) = &step {
        debug_assert!(
            path_is_admissible(ctx, node, &s.path),
            "inadmissible path at node {node}"
        );
    }
    Ok(step)
}

/// Both admissibility conditions for a node's path.
pub fn path_is_admissible(ctx: &StarContext, node: usize, path: &[usize]) -> bool {
    let ns = ctx.sets(node);
    let l = path.len();
    let place = |x: usize| -> Option<(usize, usize)> {
        let pos: Vec<usize> = path
            .iter()
            .enumerate()
            .filter(|(_, &c)| ctx.clique(c).contains(&x))
            .map(|(i, _)| i + 1)
            .collect();
        pos.first().map(|&f| (f, *pos.last().unwrap()))
    };
    ctx.aux.pairs().iter().all(|&(v, u)| {
        if ns.inner.contains(&u) && ns.inner.contains(&v) {
            let (lv, rv) = place(v).unwrap();
            let (lu, ru) = place(u).unwrap();
            lu == lv || rv == ru
        } else if ns.inner.contains(&u) && ns.encomp.contains(&v) {
            let (lu, ru) = place(u).unwrap();
            lu == 1 || ru == l
        } else {
            true
        }
    })
}

// ---------------------------------------------------------------------------
// witness helpers

fn emit(ctx: &StarContext, id: ConfigId, assign: &[(&str, usize)], path: Vec<usize>) -> Option<ConfigWitness> {
    let w = ConfigWitness {
        config: id,
        map: assign
            .iter()
            .map(|&(n, v)| (n.to_string(), v))
            .collect::<BTreeMap<_, _>>(),
        path,
    };
    verify_witness(ctx.aux, &w).ok().map(|_| w)
}

/// Exhaustive fallback, counted; sweeps assert it never fires.
fn fallback(ctx: &StarContext) -> Result<ConfigWitness> {
    FALLBACKS.with(|c| c.set(c.get() + 1));
    find_config_bounded(ctx.aux, ctx.derived().n())?.ok_or_else(|| {
        Error::InvalidGraph("internal: alignment failed but no configuration embeds".into())
    })
}

fn partners_in(
    ctx: &StarContext,
    u: usize,
    candidates: &VertexSet,
) -> Vec<usize> {
    ctx.aux
        .pairs()
        .iter()
        .filter(|&&(v, uu)| uu == u && candidates.contains(&v))
        .map(|&(v, _)| v)
        .collect()
}

fn in_pairs(ctx: &StarContext, v: usize, u: usize) -> bool {
    ctx.aux.pairs().contains(&(v, u))
}

// ---------------------------------------------------------------------------
// P-nodes

/// Concatenates the children's admissible paths, placing the at most two
/// extreme-bearing children at the ends; emits a configuration otherwise.
pub fn p_node_combine(
    ctx: &StarContext,
    node: usize,
    states: Vec<AdmissibleState>,
) -> Result<std::result::Result<AdmissibleState, ConfigWitness>> {
    let bearing: Vec<usize> = states
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.extreme.is_empty())
        .map(|(i, _)| i)
        .collect();
    if bearing.len() > 2 {
        return Ok(Err(three_children_witness(ctx, &states, &bearing)?));
    }
    // each bearing child must hold its extreme set in one end clique
    let mut orientations: Vec<Option<bool>> = vec![None; states.len()]; // Some(true) = keep
    for &i in &bearing {
        let s = &states[i];
        let first = ctx.clique(s.path[0]);
        let last = ctx.clique(*s.path.last().unwrap());
        if s.extreme.is_subset(first) {
            orientations[i] = Some(true);
        } else if s.extreme.is_subset(last) {
            orientations[i] = Some(false);
        } else {
            return Ok(Err(split_extreme_witness(ctx, node, &states, i)?));
        }
    }
    // assemble: first bearing child (extreme end outward), middle, second
    let mut order: Vec<usize> = Vec::new();
    if let Some(&i) = bearing.first() {
        order.push(i);
    }
    for i in 0..states.len() {
        if !bearing.contains(&i) {
            order.push(i);
        }
    }
    if bearing.len() == 2 {
        order.push(bearing[1]);
    }
    let mut path = Vec::new();
    for (slot, &i) in order.iter().enumerate() {
        let mut seg = states[i].path.clone();
        match orientations[i] {
            Some(keep) => {
                // extreme end outermost: at the left slot the extreme clique
                // comes first, at the right slot it comes last
                let at_left = slot == 0;
                if keep != at_left {
                    seg.reverse();
                }
            }
            None => {}
        }
        path.extend(seg);
    }
    Ok(Ok(AdmissibleState {
        node,
        path,
        extreme: ctx.extreme_of(node),
    }))
}

/// Three children demand an end each: a claw-like configuration exists.
fn three_children_witness(
    ctx: &StarContext,
    states: &[AdmissibleState],
    bearing: &[usize],
) -> Result<ConfigWitness> {
    let picks: Vec<(usize, Vec<(usize, usize)>)> = bearing[..3]
        .iter()
        .map(|&i| {
            let ns = ctx.sets(states[i].node);
            let pairs: Vec<(usize, usize)> = ctx
                .aux
                .pairs()
                .iter()
                .filter(|&&(v, u)| {
                    states[i].extreme.contains(&u)
                        && ns.encomp.contains(&v)
                        && ctx.aux.in_clique(v)
                })
                .copied()
                .collect();
            (i, pairs)
        })
        .collect();
    // one clique vertex serving all three children
    for &(v0, _) in &picks[0].1 {
        let u_for = |pairs: &[(usize, usize)]| {
            pairs
                .iter()
                .find(|&&(v, _)| v == v0)
                .map(|&(_, u)| u)
        };
        if let (Some(u1), Some(u2), Some(u3)) =
            (u_for(&picks[0].1), u_for(&picks[1].1), u_for(&picks[2].1))
        {
            if let Some(w) = emit(
                ctx,
                ConfigId::Claw,
                &[("v", v0), ("u1", u1), ("u2", u2), ("u3", u3)],
                vec![],
            ) {
                return Ok(w);
            }
        }
    }
    // one vertex serving two children, another serving the third
    for (solo, double_a, double_b) in [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ] {
        for &(v2, _) in &picks[double_a].1 {
            let u2 = picks[double_a].1.iter().find(|&&(v, _)| v == v2).map(|&(_, u)| u);
            let u3 = picks[double_b].1.iter().find(|&&(v, _)| v == v2).map(|&(_, u)| u);
            let (Some(u2), Some(u3)) = (u2, u3) else { continue };
            for &(v1, u1) in &picks[solo].1 {
                if v1 == v2 || in_pairs(ctx, v2, u1) || in_pairs(ctx, v1, u3) {
                    continue;
                }
                if let Some(w) = emit(
                    ctx,
                    ConfigId::DoubleClaw,
                    &[("v1", v1), ("v2", v2), ("u1", u1), ("u2", u2), ("u3", u3)],
                    vec![],
                ) {
                    return Ok(w);
                }
            }
        }
    }
    // three distinct servers with no cross pair
    for &(v1, u1) in &picks[0].1 {
        for &(v2, u2) in &picks[1].1 {
            for &(v3, u3) in &picks[2].1 {
                let vs = [v1, v2, v3];
                let us = [u1, u2, u3];
                let distinct = vs[0] != vs[1] && vs[0] != vs[2] && vs[1] != vs[2];
                let no_cross = (0..3).all(|i| {
                    (0..3).all(|j| i == j || !in_pairs(ctx, vs[i], us[j]))
                });
                if !distinct || !no_cross {
                    continue;
                }
                if let Some(w) = emit(
                    ctx,
                    ConfigId::TripleClaw,
                    &[
                        ("v1", v1),
                        ("v2", v2),
                        ("v3", v3),
                        ("u1", u1),
                        ("u2", u2),
                        ("u3", u3),
                    ],
                    vec![],
                ) {
                    return Ok(w);
                }
            }
        }
    }
    fallback(ctx)
}

/// A child's extreme vertices demand both ends at once.
fn split_extreme_witness(
    ctx: &StarContext,
    node: usize,
    states: &[AdmissibleState],
    child_idx: usize,
) -> Result<ConfigWitness> {
    let s = &states[child_idx];
    let child_node = s.node;
    let ns = ctx.sets(child_node);
    let first = ctx.clique(s.path[0]);
    let last = ctx.clique(*s.path.last().unwrap());
    let u1 = *s
        .extreme
        .iter()
        .find(|u| !last.contains(u))
        .expect("split demand");
    let u2 = *s
        .extreme
        .iter()
        .find(|u| !first.contains(u))
        .expect("split demand");
    let enc_k: VertexSet = ns
        .encomp
        .iter()
        .copied()
        .filter(|&v| ctx.aux.in_clique(v))
        .collect();
    let p1 = partners_in(ctx, u1, &enc_k);
    let p2 = partners_in(ctx, u2, &enc_k);
    // x0 from the inner set of any other child
    let x0 = states
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != child_idx)
        .find_map(|(_, other)| ctx.sets(other.node).inner.iter().next().copied())
        .expect("a P-node has a second child");
    let common: Vec<usize> = p1.iter().copied().filter(|v| p2.contains(v)).collect();
    let derived = ctx.derived();
    if !derived.adjacent(u1, u2) {
        // induced path through the child's inner vertices
        let mut allowed: VertexSet = ns.inner.clone();
        allowed.insert(u1);
        allowed.insert(u2);
        let path = derived
            .shortest_path_within(u1, u2, &allowed)
            .expect("inner connector exists");
        let interior = &path[1..path.len() - 1];
        if let Some(&v) = common.first() {
            if let Some(w) = emit(
                ctx,
                ConfigId::DagPlus2e,
                &[
                    ("a", v),
                    ("x0", x0),
                    ("u1", u1),
                    ("x1", interior[0]),
                    ("u2", u2),
                ],
                interior[1..].to_vec(),
            ) {
                return Ok(w);
            }
        }
        for &v1 in &p1 {
            for &v2 in &p2 {
                if v1 == v2 || in_pairs(ctx, v1, u2) || in_pairs(ctx, v2, u1) {
                    continue;
                }
                if let Some(w) = emit(
                    ctx,
                    ConfigId::DdagPlus2e,
                    &[
                        ("x0", x0),
                        ("v1", v1),
                        ("v2", v2),
                        ("x1", u2),
                        ("x2", u1),
                        ("u", interior[0]),
                    ],
                    interior[1..].to_vec(),
                ) {
                    return Ok(w);
                }
            }
        }
    } else {
        // both ends are maximal cliques: extend the pair into an induced path
        let x1 = first
            .iter()
            .copied()
            .find(|&x| ns.inner.contains(&x) && x != u1 && !derived.adjacent(x, u2));
        if let Some(x1) = x1 {
            let x2 = last.iter().copied().find(|&x| {
                ns.inner.contains(&x)
                    && x != u2
                    && x != x1
                    && !derived.adjacent(x, u1)
                    && !derived.adjacent(x, x1)
            });
            if let Some(x2) = x2 {
                if let Some(&v) = common.first() {
                    if let Some(w) = emit(
                        ctx,
                        ConfigId::P4P1Star1,
                        &[
                            ("x0", x0),
                            ("a", v),
                            ("x1", x1),
                            ("u1", u1),
                            ("u2", u2),
                            ("x2", x2),
                        ],
                        vec![],
                    ) {
                        return Ok(w);
                    }
                }
                for &v1 in &p1 {
                    for &v2 in &p2 {
                        if v1 == v2 || in_pairs(ctx, v1, u2) || in_pairs(ctx, v2, u1) {
                            continue;
                        }
                        if let Some(w) = emit(
                            ctx,
                            ConfigId::Add2,
                            &[
                                ("x0", x0),
                                ("x1", x1),
                                ("x2", x2),
                                ("v1", v1),
                                ("v2", v2),
                                ("u1", u1),
                                ("u2", u2),
                            ],
                            vec![],
                        ) {
                            return Ok(w);
                        }
                    }
                }
            }
        }
    }
    let _ = node;
    fallback(ctx)
}

// ---------------------------------------------------------------------------
// Q-nodes

/// Child layout of a Q-node: vertex sets per child with empty sentinels,
/// first/last child indices per vertex, and per-child clique counts.
pub struct QNodeFrame {
    pub node: usize,
    pub children: Vec<usize>,
    /// 1-based child vertex sets; index 0 and len+1 are empty sentinels.
    pub vsets: Vec<VertexSet>,
    pub lc: BTreeMap<usize, usize>,
    pub rc: BTreeMap<usize, usize>,
    pub sizes: Vec<usize>,
}

impl QNodeFrame {
    pub fn new(ctx: &StarContext, node: usize) -> QNodeFrame {
        let children = ctx.tree.children(node).to_vec();
        let l = children.len();
        let mut vsets = vec![VertexSet::new(); l + 2];
        for (i, &c) in children.iter().enumerate() {
            vsets[i + 1] = ctx.tree.vertex_set(c);
        }
        let mut lc = BTreeMap::new();
        let mut rc = BTreeMap::new();
        for i in 1..=l {
            for &v in &vsets[i] {
                lc.entry(v).or_insert(i);
                rc.insert(v, i);
            }
        }
        let sizes = children
            .iter()
            .map(|&c| ctx.tree.leaf_cliques(c).len())
            .collect();
        QNodeFrame {
            node,
            children,
            vsets,
            lc,
            rc,
            sizes,
        }
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    fn vset(&self, i: usize) -> &VertexSet {
        &self.vsets[i]
    }

    /// The frame read right-to-left.
    fn reversed(&self) -> QNodeFrame {
        let l = self.len();
        QNodeFrame {
            node: self.node,
            children: self.children.iter().rev().copied().collect(),
            vsets: {
                let mut v = self.vsets.clone();
                v[1..=l].reverse();
                v
            },
            lc: self.rc.iter().map(|(&v, &i)| (v, l + 1 - i)).collect(),
            rc: self.lc.iter().map(|(&v, &i)| (v, l + 1 - i)).collect(),
            sizes: self.sizes.iter().rev().copied().collect(),
        }
    }
}

/// Replaces each child by its admissible path, oriented so every demand from
/// a clique vertex entering the child from outside lands in the matching end
/// clique; emits the configuration dictated by the failing claim.
pub fn q_node_combine(
    ctx: &StarContext,
    frame: &QNodeFrame,
    states: Vec<AdmissibleState>,
) -> Result<std::result::Result<AdmissibleState, ConfigWitness>> {
    let node = frame.node;
    let ns = ctx.sets(node);
    let l = frame.len();
    // alignment of every pair confined to this subtree
    for &(v, u) in ctx.aux.pairs() {
        if !ns.inner.contains(&u) || !frame.lc.contains_key(&v) {
            continue;
        }
        let (lv, rv) = (frame.lc[&v], frame.rc[&v]);
        let (lu, ru) = (frame.lc[&u], frame.rc[&u]);
        debug_assert!(lv <= lu && ru <= rv);
        if lu != lv && rv != ru {
            return Ok(Err(misaligned_pair_witness(ctx, frame, v, u)?));
        }
    }
    // demands: u must sit in the first clique of child t when its partner
    // enters from the right, in the last when it leaves to the left
    let mut dem_left: Vec<VertexSet> = vec![VertexSet::new(); l + 1];
    let mut dem_right: Vec<VertexSet> = vec![VertexSet::new(); l + 1];
    for &(v, u) in ctx.aux.pairs() {
        if !ns.inner.contains(&u) || !frame.lc.contains_key(&v) {
            continue;
        }
        let (lu, ru) = (frame.lc[&u], frame.rc[&u]);
        if lu != ru {
            continue; // spans children; aligned automatically
        }
        let t = lu;
        let inner_t = &ctx.sets(states[t - 1].node).inner;
        if !inner_t.contains(&u) {
            continue; // u covers the whole child
        }
        let (lv, rv) = (frame.lc[&v], frame.rc[&v]);
        if lv == t && rv > t {
            dem_left[t].insert(u);
        } else if rv == t && lv < t {
            dem_right[t].insert(u);
        }
    }
    // claims about two demands meeting one child
    let mut orient: Vec<Option<bool>> = vec![None; l + 1]; // Some(true) = stored order
    for t in 1..=l {
        let state = &states[t - 1];
        let child_sets = ctx.sets(state.node);
        let univ = &child_sets.univ;
        let first = ctx.clique(state.path[0]);
        let last = ctx.clique(*state.path.last().unwrap());
        let sl: VertexSet = dem_left[t].difference(univ).copied().collect();
        let sr: VertexSet = dem_right[t].difference(univ).copied().collect();
        if let Some(&u) = sl.intersection(&sr).next() {
            return Ok(Err(opposite_demands_witness(ctx, frame, &states, t, u, u)?));
        }
        if let (Some(&u1), Some(&u2)) = (sl.iter().next(), sr.iter().next()) {
            let same_end = (first.contains(&u1) && first.contains(&u2) && !last.contains(&u1) && !last.contains(&u2))
                || (last.contains(&u1) && last.contains(&u2) && !first.contains(&u1) && !first.contains(&u2));
            if same_end {
                return Ok(Err(opposite_demands_witness(
                    ctx, frame, &states, t, u1, u2,
                )?));
            }
        }
        for (side, dem) in [(true, &sl), (false, &sr)] {
            let mut in_first = None;
            let mut in_last = None;
            for &u in dem.iter() {
                if first.contains(&u) && !last.contains(&u) {
                    in_first = Some(u);
                } else if last.contains(&u) && !first.contains(&u) {
                    in_last = Some(u);
                }
            }
            if let (Some(u1), Some(u2)) = (in_first, in_last) {
                return Ok(Err(same_side_demands_witness(
                    ctx, frame, &states, t, u1, u2, side,
                )?));
            }
        }
        // pick the child's orientation
        let want_first_left = sl.iter().next().map(|&u| first.contains(&u));
        let want_last_right = sr.iter().next().map(|&u| last.contains(&u));
        orient[t] = match (want_first_left, want_last_right) {
            (Some(a), _) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        };
        // consistency between the two sides
        if let (Some(a), Some(b)) = (want_first_left, want_last_right) {
            if a != b {
                // both claims passed, so this cannot happen
                return Ok(Err(fallback(ctx)?));
            }
        }
    }
    let mut path = Vec::new();
    for t in 1..=l {
        let mut seg = states[t - 1].path.clone();
        if orient[t] == Some(false) {
            seg.reverse();
        }
        path.extend(seg);
    }
    Ok(Ok(AdmissibleState {
        node,
        path,
        extreme: ctx.extreme_of(node),
    }))
}

/// A pair strictly nested at the child level: the outside vertex can never
/// share an end index with its partner.
fn misaligned_pair_witness(
    ctx: &StarContext,
    frame: &QNodeFrame,
    v: usize,
    u: usize,
) -> Result<ConfigWitness> {
    let l = frame.len();
    let derived = ctx.derived();
    if frame.lc[&v] == 1 && frame.rc[&v] == l {
        // the partner dominates the whole subtree; the inner vertex is
        // blocked from both end cliques
        let vs: VertexSet = (1..=l).flat_map(|i| frame.vset(i).iter().copied()).collect();
        let (sub, map) = derived.induced(&vs);
        let local_u = map.iter().position(|&x| x == u).unwrap();
        if let Some(wit) = find_end_witness(&sub, local_u) {
            let g = |i: usize| map[i];
            let attempt = match wit.shape {
                EndShape::A => {
                    let [p0, p1, _, p3, p4] = wit.vertices[..] else {
                        unreachable!()
                    };
                    emit(
                        ctx,
                        ConfigId::P5Times1,
                        &[
                            ("x1", g(p0)),
                            ("x2", g(p1)),
                            ("u", u),
                            ("x3", g(p3)),
                            ("x4", g(p4)),
                            ("v", v),
                        ],
                        vec![],
                    )
                }
                EndShape::B => {
                    let [p0, p1, p2, p3, p4] = wit.vertices[..] else {
                        unreachable!()
                    };
                    emit(
                        ctx,
                        ConfigId::BentWhippingTop,
                        &[
                            ("x1", g(p0)),
                            ("x2", g(p1)),
                            ("x3", g(p2)),
                            ("x4", g(p3)),
                            ("x5", g(p4)),
                            ("a", v),
                            ("u", u),
                        ],
                        vec![],
                    )
                }
                EndShape::C => {
                    let [t, c, wv] = wit.vertices[..] else {
                        unreachable!()
                    };
                    let p = &wit.path; // u .. far end
                    let far = *p.last().unwrap();
                    let interiors: Vec<usize> =
                        p[1..p.len() - 1].iter().rev().map(|&i| g(i)).collect();
                    emit(
                        ctx,
                        ConfigId::DdagPlusE,
                        &[
                            ("v", v),
                            ("x1", g(t)),
                            ("x2", g(c)),
                            ("x3", g(wv)),
                            ("x4", g(far)),
                            ("u", u),
                        ],
                        interiors,
                    )
                }
            };
            if let Some(w) = attempt {
                return Ok(w);
            }
        }
        return fallback(ctx);
    }
    // try the analysis left-to-right, then mirrored
    if let Some(w) = misaligned_sided(ctx, frame, v, u)? {
        return Ok(w);
    }
    if let Some(w) = misaligned_sided(ctx, &frame.reversed(), v, u)? {
        return Ok(w);
    }
    fallback(ctx)
}

fn least(set: impl IntoIterator<Item = usize>) -> Option<usize> {
    set.into_iter().min()
}

fn misaligned_sided(
    ctx: &StarContext,
    frame: &QNodeFrame,
    v: usize,
    u: usize,
) -> Result<Option<ConfigWitness>> {
    let derived = ctx.derived();
    let (lv, rv) = (frame.lc[&v], frame.rc[&v]);
    let (lu, ru) = (frame.lc[&u], frame.rc[&u]);
    let diff = |a: &VertexSet, b: &VertexSet| -> VertexSet {
        a.difference(b).copied().collect()
    };
    let inter = |a: &VertexSet, b: &VertexSet| -> VertexSet {
        a.intersection(b).copied().collect()
    };
    // neighbors entering the partner's range from the two sides
    let lset: VertexSet = diff(&inter(frame.vset(lv - 1), frame.vset(lv)), frame.vset(rv));
    let rset: VertexSet = diff(&inter(frame.vset(rv), frame.vset(rv + 1)), frame.vset(lv));
    let l_n: VertexSet = lset
        .iter()
        .copied()
        .filter(|&x| derived.adjacent(x, u))
        .collect();
    let r_n: VertexSet = rset
        .iter()
        .copied()
        .filter(|&x| derived.adjacent(x, u))
        .collect();
    if l_n.is_empty() && r_n.is_empty() {
        if !lset.is_empty() && !rset.is_empty() {
            let x1 = least(diff(frame.vset(lv - 1), frame.vset(lv))).unwrap();
            let x2 = least(lset.iter().copied()).unwrap();
            let x3 = least(rset.iter().copied()).unwrap();
            let x4 = least(diff(frame.vset(rv + 1), frame.vset(rv))).unwrap();
            return Ok(emit(
                ctx,
                ConfigId::P5Plus1,
                &[
                    ("x1", x1),
                    ("x2", x2),
                    ("v", v),
                    ("x3", x3),
                    ("x4", x4),
                    ("u", u),
                ],
                vec![],
            ));
        }
        if !lset.is_empty() && rset.is_empty() {
            // a grown one-sided pattern through the partner's range
            let x0 = least(diff(frame.vset(rv), frame.vset(rv - 1)));
            let x1 = least(diff(frame.vset(lv - 1), frame.vset(lv)));
            let (Some(x0), Some(x1)) = (x0, x1) else {
                return Ok(None);
            };
            let mut allowed: VertexSet = derived
                .vertices()
                .filter(|&x| {
                    frame.lc.contains_key(&x)
                        && !frame.vset(rv).contains(&x)
                        && derived.adjacent(x, v)
                        && !derived.adjacent(x, x0)
                        && x != u
                        && x != x1
                })
                .collect();
            allowed.insert(x1);
            allowed.insert(u);
            if let Some(p) = derived.shortest_path_within(x1, u, &allowed) {
                if p.len() >= 4 {
                    return Ok(emit(
                        ctx,
                        ConfigId::DagPlusE,
                        &[
                            ("x0", x0),
                            ("v", v),
                            ("x1", p[0]),
                            ("x2", p[1]),
                            ("x3", p[2]),
                            ("u", u),
                        ],
                        p[3..p.len() - 1].to_vec(),
                    ));
                }
            }
        }
        return Ok(None);
    }
    if l_n.is_empty() {
        return Ok(None); // mirrored orientation handles it
    }
    if !diff(&lset, &l_n).is_empty() {
        // a range neighbor and a range non-neighbor of u on the same side
        let x1 = least(diff(frame.vset(lv - 1), frame.vset(lv))).unwrap();
        let x2 = least(diff(&lset, &l_n)).unwrap();
        let x3 = least(l_n.iter().copied()).unwrap();
        let x4 = least(diff(frame.vset(rv), frame.vset(rv - 1))).unwrap();
        return Ok(emit(
            ctx,
            ConfigId::WhippingTop1,
            &[
                ("x1", x1),
                ("x2", x2),
                ("v", v),
                ("u", u),
                ("x3", x3),
                ("x4", x4),
            ],
            vec![],
        ));
    }
    // every left range neighbor sees u
    let outside_ru: VertexSet = l_n
        .iter()
        .copied()
        .filter(|&x| !frame.vset(ru).contains(&x))
        .collect();
    if !outside_ru.is_empty() {
        let after: VertexSet = diff(&inter(frame.vset(ru), frame.vset(ru + 1)), frame.vset(ru - 1));
        if !after.is_empty() {
            let x1 = least(diff(frame.vset(lu - 1), frame.vset(lu))).unwrap();
            let x2 = least(outside_ru.iter().copied()).unwrap();
            let x3 = least(after.iter().copied()).unwrap();
            let x4 = least(diff(frame.vset(ru + 1), frame.vset(ru))).unwrap();
            return Ok(emit(
                ctx,
                ConfigId::P5Times1,
                &[
                    ("x1", x1),
                    ("x2", x2),
                    ("u", u),
                    ("x3", x3),
                    ("x4", x4),
                    ("v", v),
                ],
                vec![],
            ));
        }
        let x0 = least(l_n.iter().copied()).unwrap();
        let x1 = least(diff(frame.vset(lv - 1), frame.vset(lv))).unwrap();
        let x2 = least(diff(frame.vset(lu - 1), frame.vset(lu))).unwrap();
        let x3 = least(diff(frame.vset(ru), frame.vset(ru - 1))).unwrap();
        let x4 = least(diff(frame.vset(rv), frame.vset(rv - 1))).unwrap();
        if ctx.aux.in_clique(x0) {
            if let Some(w) = emit(
                ctx,
                ConfigId::AbWheel,
                &[
                    ("x1", x1),
                    ("v1", x0),
                    ("v2", v),
                    ("x2", x4),
                    ("u", u),
                    ("x3", x2),
                ],
                vec![],
            ) {
                return Ok(Some(w));
            }
        } else if let Some(w) = emit(
            ctx,
            ConfigId::P4P1Star1,
            &[
                ("x0", x4),
                ("a", v),
                ("x1", x2),
                ("u1", x0),
                ("u2", u),
                ("x2", x3),
            ],
            vec![],
        ) {
            return Ok(Some(w));
        }
        return Ok(None);
    }
    // all left range neighbors stay within the partner's reach of u
    let x1 = least(diff(frame.vset(lv), frame.vset(lv + 1)));
    let x2 = least(l_n.iter().copied().min_by_key(|&x| frame.rc[&x]));
    let (Some(x1), Some(x2)) = (x1, x2) else {
        return Ok(None);
    };
    let rx2 = frame.rc[&x2];
    if rx2 + 1 > frame.len() {
        return Ok(None);
    }
    let x3 = least(diff(frame.vset(rx2 + 1), frame.vset(rx2)));
    let Some(x3) = x3 else {
        return Ok(None);
    };
    let mut allowed: VertexSet = derived
        .vertices()
        .filter(|&x| {
            frame.lc.contains_key(&x)
                && !frame.vset(lv).contains(&x)
                && derived.adjacent(x, x2)
                && derived.adjacent(x, v)
                && !derived.adjacent(x, x1)
                && x != u
                && x != x3
        })
        .collect();
    allowed.insert(u);
    allowed.insert(x3);
    if let Some(p) = derived.shortest_path_within(u, x3, &allowed) {
        if p.len() >= 3 {
            let x4 = p[p.len() - 2];
            let interiors: Vec<usize> = p[1..p.len() - 2].iter().rev().copied().collect();
            return Ok(emit(
                ctx,
                ConfigId::DdagPlusE,
                &[
                    ("v", v),
                    ("x1", x1),
                    ("x2", x2),
                    ("x3", x3),
                    ("x4", x4),
                    ("u", u),
                ],
                interiors,
            ));
        }
    }
    Ok(None)
}

/// One inner vertex is demanded at the first and the last clique at once,
/// or two demands from opposite directions land at one end.
fn opposite_demands_witness(
    ctx: &StarContext,
    frame: &QNodeFrame,
    states: &[AdmissibleState],
    t: usize,
    u1: usize,
    u2: usize,
) -> Result<ConfigWitness> {
    let derived = ctx.derived();
    let state = &states[t - 1];
    let left_partners: Vec<usize> = ctx
        .aux
        .pairs()
        .iter()
        .filter(|&&(v, u)| u == u1 && frame.lc.get(&v) == Some(&t) && frame.rc[&v] > t)
        .map(|&(v, _)| v)
        .collect();
    let right_partners: Vec<usize> = ctx
        .aux
        .pairs()
        .iter()
        .filter(|&&(v, u)| u == u2 && frame.rc.get(&v) == Some(&t) && frame.lc[&v] < t)
        .map(|&(v, _)| v)
        .collect();
    let x1 = least(
        frame
            .vset(t - 1)
            .difference(frame.vset(t))
            .copied()
            .collect::<Vec<_>>(),
    );
    let x2 = least(
        frame
            .vset(t + 1)
            .difference(frame.vset(t))
            .copied()
            .collect::<Vec<_>>(),
    );
    let (Some(x1), Some(x2)) = (x1, x2) else {
        return fallback(ctx);
    };
    // a vertex from the far end clique of the child's path, relative to the
    // single end holding the demands
    let first = ctx.clique(state.path[0]);
    let other_end = if first.contains(&u1) {
        state.path.last().copied().unwrap()
    } else {
        state.path[0]
    };
    let prev_to_other = if first.contains(&u1) {
        state.path[state.path.len() - 2]
    } else {
        state.path[1]
    };
    let x0 = least(
        ctx.clique(other_end)
            .difference(ctx.clique(prev_to_other))
            .copied()
            .collect::<Vec<_>>(),
    );
    let Some(x0) = x0 else {
        return fallback(ctx);
    };
    if u1 == u2 {
        for &vr in &right_partners {
            for &vl in &left_partners {
                if let Some(w) = emit(
                    ctx,
                    ConfigId::AbWheel,
                    &[
                        ("x1", x1),
                        ("v1", vr),
                        ("v2", vl),
                        ("x2", x2),
                        ("u", u1),
                        ("x3", x0),
                    ],
                    vec![],
                ) {
                    return Ok(w);
                }
            }
        }
        return fallback(ctx);
    }
    for &vl in &left_partners {
        for &vr in &right_partners {
            if vl == vr || in_pairs(ctx, vr, u1) || in_pairs(ctx, vl, u2) {
                continue;
            }
            let _ = derived;
            if let Some(w) = emit(
                ctx,
                ConfigId::Add1,
                &[
                    ("x0", x0),
                    ("x1", x1),
                    ("x2", x2),
                    ("v1", vr),
                    ("v2", vl),
                    ("u1", u1),
                    ("u2", u2),
                ],
                vec![],
            ) {
                return Ok(w);
            }
        }
    }
    fallback(ctx)
}

/// Two same-direction demands sit at opposite ends of the child's path.
fn same_side_demands_witness(
    ctx: &StarContext,
    frame: &QNodeFrame,
    states: &[AdmissibleState],
    t: usize,
    u1: usize,
    u2: usize,
    left_side: bool,
) -> Result<ConfigWitness> {
    // mirror the right-side case through the reversed frame
    if !left_side {
        let rev = frame.reversed();
        let mut rev_states: Vec<AdmissibleState> = states.to_vec();
        rev_states.reverse();
        return same_side_demands_witness(ctx, &rev, &rev_states, frame.len() + 1 - t, u1, u2, true);
    }
    let derived = ctx.derived();
    let state = &states[t - 1];
    let child_sets = ctx.sets(state.node);
    let partners = |u: usize| -> Vec<usize> {
        ctx.aux
            .pairs()
            .iter()
            .filter(|&&(v, uu)| uu == u && frame.lc.get(&v) == Some(&t) && frame.rc[&v] > t)
            .map(|&(v, _)| v)
            .collect()
    };
    let p1 = partners(u1);
    let p2 = partners(u2);
    let common: Vec<usize> = p1.iter().copied().filter(|v| p2.contains(v)).collect();
    let distinct_pairs: Vec<(usize, usize)> = p1
        .iter()
        .flat_map(|&v1| p2.iter().map(move |&v2| (v1, v2)))
        .filter(|&(v1, v2)| v1 != v2 && !in_pairs(ctx, v1, u2) && !in_pairs(ctx, v2, u1))
        .collect();
    if derived.adjacent(u1, u2) {
        // the ends of the child's path extend the pair into a path
        let first = ctx.clique(state.path[0]);
        let last = ctx.clique(*state.path.last().unwrap());
        let (end1, end2) = if first.contains(&u1) {
            (first, last)
        } else {
            (last, first)
        };
        let x1 = end1
            .iter()
            .copied()
            .find(|&x| child_sets.inner.contains(&x) && x != u1 && !derived.adjacent(x, u2));
        let x2c = end2.iter().copied().find(|&x| {
            child_sets.inner.contains(&x) && x != u2 && !derived.adjacent(x, u1)
        });
        if let (Some(x1), Some(x2c)) = (x1, x2c) {
            if !derived.adjacent(x1, x2c) && t < frame.len() {
                let x0 = least(ctx.sets(states[t].node).inner.iter().copied());
                if let Some(x0) = x0 {
                    if let Some(&v) = common.first() {
                        if let Some(w) = emit(
                            ctx,
                            ConfigId::P4P1Star1,
                            &[
                                ("x0", x0),
                                ("a", v),
                                ("x1", x1),
                                ("u1", u1),
                                ("u2", u2),
                                ("x2", x2c),
                            ],
                            vec![],
                        ) {
                            return Ok(w);
                        }
                    }
                    for &(v1, v2) in &distinct_pairs {
                        if let Some(w) = emit(
                            ctx,
                            ConfigId::Add2,
                            &[
                                ("x0", x0),
                                ("x1", x1),
                                ("x2", x2c),
                                ("v1", v1),
                                ("v2", v2),
                                ("u1", u1),
                                ("u2", u2),
                            ],
                            vec![],
                        ) {
                            return Ok(w);
                        }
                    }
                }
            }
        }
        return fallback(ctx);
    }
    // non-adjacent demands; compare the partners' reaches
    let reach = |vs: &[usize]| vs.iter().map(|&v| frame.rc[&v]).min();
    let (r1, r2) = (reach(&p1), reach(&p2));
    let r = match (r1, r2) {
        (Some(a), Some(b)) => a.min(b),
        _ => return fallback(ctx),
    };
    let enc_outside: VertexSet = child_sets
        .encomp
        .iter()
        .copied()
        .filter(|x| !frame.vset(r).contains(x))
        .collect();
    if let Some(x1) = least(enc_outside.iter().copied()) {
        let x0 = least(
            frame
                .vset(r)
                .difference(frame.vset(r - 1))
                .copied()
                .collect::<Vec<_>>(),
        );
        if let Some(x0) = x0 {
            if let Some(&v) = common.first() {
                if let Some(w) = emit(
                    ctx,
                    ConfigId::DagPlus2e,
                    &[("a", v), ("x0", x0), ("u1", u1), ("x1", x1), ("u2", u2)],
                    vec![],
                ) {
                    return Ok(w);
                }
            }
            for &(v1, v2) in &distinct_pairs {
                if let Some(w) = emit(
                    ctx,
                    ConfigId::DdagPlus2e,
                    &[
                        ("x0", x0),
                        ("v1", v1),
                        ("v2", v2),
                        ("x1", u2),
                        ("x2", u1),
                        ("u", x1),
                    ],
                    vec![],
                ) {
                    return Ok(w);
                }
            }
        }
        return fallback(ctx);
    }
    // the child's outward vertices all stay inside the partners' reach
    let x1 = least(
        frame
            .vset(r + 1)
            .difference(frame.vset(r))
            .copied()
            .collect::<Vec<_>>(),
    );
    let x2 = least(
        frame
            .vset(r)
            .intersection(frame.vset(r + 1))
            .copied()
            .filter(|x| !frame.vset(t).contains(x))
            .collect::<Vec<_>>(),
    );
    let (Some(x1), Some(x2)) = (x1, x2) else {
        return fallback(ctx);
    };
    if let Some(&v) = common.first() {
        if let Some(w) = emit(
            ctx,
            ConfigId::Fork,
            &[("x1", x1), ("x2", x2), ("v", v), ("u1", u1), ("u2", u2)],
            vec![],
        ) {
            return Ok(w);
        }
    }
    for &(v1, v2) in &distinct_pairs {
        let id = if derived.adjacent(v2, x1) {
            ConfigId::DoubleForkPlus1
        } else {
            ConfigId::DoubleFork
        };
        if let Some(w) = emit(
            ctx,
            id,
            &[
                ("x1", x1),
                ("x2", x2),
                ("v1", v1),
                ("v2", v2),
                ("u1", u1),
                ("u2", u2),
            ],
            vec![],
        ) {
            return Ok(w);
        }
    }
    fallback(ctx)
}

// ---------------------------------------------------------------------------
// realizing the path

/// Realizes an end-aligned clique path as an interval model meeting the
/// double-extension biconditional. The base graph must be four-cycle-free.
pub fn star_to_sharp(aux: &AuxGraph, path: &CliquePath) -> Result<IntervalModel> {
    let g = aux.graph();
    if let Some([a, b, c, d]) = g.find_c4() {
        return Err(Error::C4Present(format!(
            "({},{},{},{})",
            g.label(a),
            g.label(b),
            g.label(c),
            g.label(d)
        )));
    }
    path.validate_for(aux.derived())?;
    let n = g.n();
    let scale = 3 * (n as i64 + 1);
    let third = n as i64 + 1;
    let mut lp = vec![0i64; n];
    let mut rp = vec![0i64; n];
    let l = path.len();
    for i in 1..=l {
        let prev = if i >= 2 {
            path.clique(i - 2).clone()
        } else {
            VertexSet::new()
        };
        let next = if i < l {
            path.clique(i).clone()
        } else {
            VertexSet::new()
        };
        let here = path.clique(i - 1);
        let starters: Vec<usize> = here.difference(&prev).copied().collect();
        let enders: Vec<usize> = here.difference(&next).copied().collect();
        let left_order = endpoint_order(aux, &starters, true)?;
        for (rank, &x) in left_order.iter().enumerate() {
            lp[x] = i as i64 * scale - left_order.len() as i64 + rank as i64;
            debug_assert!(lp[x] > i as i64 * scale - third);
        }
        let right_order = endpoint_order(aux, &enders, false)?;
        for (rank, &x) in right_order.iter().enumerate() {
            rp[x] = i as i64 * scale + 1 + rank as i64;
            debug_assert!(rp[x] < i as i64 * scale + third);
        }
    }
    let model = IntervalModel::new(lp, rp, scale)?;
    crate::models::verify_sharp(g, aux.clique(), &model)?;
    Ok(model)
}

/// Orders the endpoints of one clique-group. On the left side a non-clique
/// member precedes exactly the clique members it sees in the base graph;
/// the right side mirrors this. The per-vertex neighbor sets form a chain
/// when the base graph has no induced four-cycle.
fn endpoint_order(aux: &AuxGraph, group: &[usize], left: bool) -> Result<Vec<usize>> {
    let g = aux.graph();
    let ks: Vec<usize> = group
        .iter()
        .copied()
        .filter(|v| aux.in_clique(*v))
        .collect();
    let others: Vec<usize> = group
        .iter()
        .copied()
        .filter(|v| !aux.in_clique(*v))
        .collect();
    let seen: BTreeMap<usize, VertexSet> = ks
        .iter()
        .map(|&v| {
            (
                v,
                others
                    .iter()
                    .copied()
                    .filter(|&u| g.adjacent(u, v))
                    .collect(),
            )
        })
        .collect();
    for (i, &v1) in ks.iter().enumerate() {
        for &v2 in &ks[i + 1..] {
            let s1 = &seen[&v1];
            let s2 = &seen[&v2];
            if !s1.is_subset(s2) && !s2.is_subset(s1) {
                let u1 = *s1.difference(s2).next().unwrap();
                let u2 = *s2.difference(s1).next().unwrap();
                return Err(Error::C4Present(format!(
                    "({},{},{},{})",
                    g.label(u1),
                    g.label(v1),
                    g.label(v2),
                    g.label(u2)
                )));
            }
        }
    }
    // key: clique vertices take twice their chain rank; an outside vertex
    // slots below the first clique vertex that sees it (left) or above the
    // last one (right)
    let mut sorted_ks = ks.clone();
    sorted_ks.sort_by_key(|&v| (seen[&v].len(), v));
    if !left {
        sorted_ks.reverse();
    }
    let key = |x: usize| -> (i64, usize) {
        if let Some(j) = sorted_ks.iter().position(|&v| v == x) {
            (2 * (j as i64 + 1), x)
        } else if left {
            let j = sorted_ks
                .iter()
                .position(|&v| seen[&v].contains(&x))
                .map(|j| j as i64 + 1)
                .unwrap_or(sorted_ks.len() as i64 + 1);
            (2 * j - 1, x)
        } else {
            let j = sorted_ks
                .iter()
                .rposition(|&v| seen[&v].contains(&x))
                .map(|j| j as i64 + 1)
                .unwrap_or(0);
            (2 * j + 1, x)
        }
    };
    let mut all = group.to_vec();
    all.sort_by_key(|&x| key(x));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aux_graph::build_aux_graph;
    use crate::fixtures;
    use crate::models::{flip_to_arcs, verify_arc_model, verify_sharp};
    use crate::oracle::oracle_star;

    #[test]
    fn gd_path_found() {
        let g = fixtures::gd();
        let aux = build_aux_graph(&g, &fixtures::gd_clique()).unwrap();
        match check_star(&aux).unwrap() {
            StarOutcome::Path(p) => {
                assert_eq!(p.len(), 2);
                // both cliques hold the two clique vertices and one rung
                for c in p.cliques() {
                    assert_eq!(c.len(), 4);
                }
            }
            StarOutcome::Witness(w) => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn long_claw_host_yields_claw() {
        let g = fixtures::long_claw();
        let c = g.index_of_label("c").unwrap();
        let aux = build_aux_graph(&g, &VertexSet::from([c])).unwrap();
        match check_star(&aux).unwrap() {
            StarOutcome::Witness(w) => {
                assert_eq!(w.config, ConfigId::Claw);
                verify_witness(&aux, &w).unwrap();
            }
            StarOutcome::Path(p) => panic!("unexpected path {p:?}"),
        }
    }

    #[test]
    fn gm_alignment_found_but_realization_refused() {
        // the 8-vertex fixture has induced four-cycles, so the alignment
        // condition holds and an end-aligned path is returned, but the
        // interval realization recipe refuses it; its published model is
        // checked directly in the model tests
        let g = fixtures::gm();
        let k = fixtures::gm_clique();
        let aux = build_aux_graph(&g, &k).unwrap();
        let StarOutcome::Path(p) = check_star(&aux).unwrap() else {
            panic!("expected a path");
        };
        let placed = |x: &str| {
            let v = g.index_of_label(x).unwrap();
            (p.lk(v).unwrap(), p.rk(v).unwrap())
        };
        // the two paired vertices sit at opposite ends, under a partner
        // spanning everything
        let (l1, _) = placed("u1");
        let (_, r3) = placed("u3");
        assert!(l1 == 1 || r3 == p.len());
        assert_eq!(placed("v1"), (1, p.len()));
        assert!(matches!(star_to_sharp(&aux, &p), Err(Error::C4Present(_))));
        // the published interval model realizes the extension condition that
        // the generic recipe cannot reach here
        let m = fixtures::gm_interval_model();
        verify_sharp(&g, &k, &m).unwrap();
        let arcs = flip_to_arcs(&m.translate(1), &k).unwrap();
        verify_arc_model(&g, &arcs).unwrap();
    }

    #[test]
    fn sun3_model() {
        let g = fixtures::sun3();
        let k = g.closed_neighborhood(0);
        let aux = build_aux_graph(&g, &k).unwrap();
        let StarOutcome::Path(p) = check_star(&aux).unwrap() else {
            panic!("expected a path");
        };
        let m = star_to_sharp(&aux, &p).unwrap();
        verify_sharp(&g, &k, &m).unwrap();
        let arcs = flip_to_arcs(&m, &k).unwrap();
        verify_arc_model(&g, &arcs).unwrap();
    }

    #[test]
    fn gd_to_sharp_rejected() {
        let g = fixtures::gd();
        let aux = build_aux_graph(&g, &fixtures::gd_clique()).unwrap();
        let StarOutcome::Path(p) = check_star(&aux).unwrap() else {
            panic!("expected a path");
        };
        assert!(matches!(
            star_to_sharp(&aux, &p),
            Err(Error::C4Present(_))
        ));
    }

    #[test]
    fn agrees_with_oracle_on_fixtures() {
        for (g, k) in [
            (fixtures::gd(), fixtures::gd_clique()),
            (fixtures::gm(), fixtures::gm_clique()),
            (fixtures::sun3(), fixtures::sun3().closed_neighborhood(0)),
            (fixtures::long_claw(), {
                let g = fixtures::long_claw();
                VertexSet::from([g.index_of_label("c").unwrap()])
            }),
        ] {
            let aux = build_aux_graph(&g, &k).unwrap();
            if aux.derived().maximal_cliques().unwrap().len() > 8 {
                continue;
            }
            let want = oracle_star(&aux).unwrap();
            let got = matches!(check_star(&aux).unwrap(), StarOutcome::Path(_));
            assert_eq!(want, got, "{g:?} K={}", g.set_to_string(&k));
        }
    }
}
