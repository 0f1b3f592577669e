//! Interval and circular-arc models with exact rational endpoints
//! (integers over a fixed scale), the flip constructions between them, and
//! the model verifiers.


use serde_json::{json, Value};

use crate::aux_graph::build_aux_graph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An interval model: `I(v) = [lp(v), rp(v)]`, endpoints exact rationals
/// `raw / scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModel {
    lp: Vec<i64>,
    rp: Vec<i64>,
    scale: i64,
}

impl IntervalModel {
    pub fn new(lp: Vec<i64>, rp: Vec<i64>, scale: i64) -> Result<IntervalModel> {
        if lp.len() != rp.len() {
            return Err(Error::InvalidGraph("endpoint arrays differ in length".into()));
        }
        if scale < 1 {
            return Err(Error::InvalidGraph("scale must be positive".into()));
        }
        for v in 0..lp.len() {
            if lp[v] > rp[v] {
                return Err(Error::InvalidGraph(format!(
                    "interval {v} has lp > rp"
                )));
            }
        }
        Ok(IntervalModel { lp, rp, scale })
    }

    pub fn n(&self) -> usize {
        self.lp.len()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn lp(&self, v: usize) -> i64 {
        self.lp[v]
    }

    pub fn rp(&self, v: usize) -> i64 {
        self.rp[v]
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        self.lp[u] <= self.rp[v] && self.lp[v] <= self.rp[u]
    }

    /// Strict double extension: `lp(v) < lp(u) <= rp(u) < rp(v)`.
    pub fn doubly_extends(&self, v: usize, u: usize) -> bool {
        self.lp[v] < self.lp[u] && self.rp[u] < self.rp[v]
    }

    /// Shifts all endpoints by `units` whole positions (units are semantic,
    /// i.e. multiplied by the scale).
    pub fn translate(&self, units: i64) -> IntervalModel {
        let d = units * self.scale;
        IntervalModel {
            lp: self.lp.iter().map(|x| x + d).collect(),
            rp: self.rp.iter().map(|x| x + d).collect(),
            scale: self.scale,
        }
    }

    /// First adjacency violation against `g`, if any: `Ok(())` when the
    /// intersection graph of the intervals equals `g`.
    pub fn realizes(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::ModelMismatch(format!(
                "model has {} intervals, graph has {} vertices",
                self.n(),
                g.n()
            )));
        }
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.intersects(u, v) != g.adjacent(u, v) {
                    return Err(Error::ModelMismatch(format!(
                        "pair ({},{}) {}",
                        g.label(u),
                        g.label(v),
                        if g.adjacent(u, v) {
                            "adjacent but intervals disjoint"
                        } else {
                            "non-adjacent but intervals intersect"
                        }
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        let mut map = serde_json::Map::new();
        for v in 0..self.n() {
            map.insert(g.label(v).to_string(), json!([self.lp[v], self.rp[v]]));
        }
        json!({ "scale": self.scale, "intervals": Value::Object(map) })
    }

    pub fn from_json(v: &Value, g: &Graph) -> Result<IntervalModel> {
        let scale = v["scale"].as_i64().unwrap_or(1);
        let obj = v["intervals"]
            .as_object()
            .ok_or_else(|| Error::MalformedWitness("missing `intervals`".into()))?;
        let mut lp = vec![0i64; g.n()];
        let mut rp = vec![0i64; g.n()];
        let mut seen = vec![false; g.n()];
        for (name, pair) in obj {
            let idx = g
                .index_of_label(name)
                .ok_or_else(|| Error::MalformedWitness(format!("unknown vertex {name}")))?;
            let arr = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::MalformedWitness(format!("bad interval for {name}")))?;
            lp[idx] = arr[0].as_i64().ok_or_else(|| bad_num(name))?;
            rp[idx] = arr[1].as_i64().ok_or_else(|| bad_num(name))?;
            seen[idx] = true;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::MalformedWitness(format!(
                "no interval for vertex {}",
                g.label(v)
            )));
        }
        IntervalModel::new(lp, rp, scale)
    }
}

fn bad_num(name: &str) -> Error {
    Error::MalformedWitness(format!("non-integer endpoint for {name}"))
}

/// A circular-arc model on a circle of the given circumference. Each arc runs
/// clockwise from `start` to `end`; `start > end` means it crosses 0.
/// Endpoints are exact rationals `raw / scale` in `[0, circumference)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcModel {
    circumference: i64,
    arcs: Vec<(i64, i64)>,
    scale: i64,
}

impl ArcModel {
    pub fn new(circumference: i64, arcs: Vec<(i64, i64)>, scale: i64) -> Result<ArcModel> {
        if circumference <= 0 || scale < 1 {
            return Err(Error::InvalidGraph("bad circumference or scale".into()));
        }
        for (v, &(s, e)) in arcs.iter().enumerate() {
            if s == e {
                return Err(Error::InvalidGraph(format!("arc {v} has zero length")));
            }
            if !(0..circumference).contains(&s) || !(0..circumference).contains(&e) {
                return Err(Error::InvalidGraph(format!(
                    "arc {v} endpoints outside [0, circumference)"
                )));
            }
        }
        Ok(ArcModel {
            circumference,
            arcs,
            scale,
        })
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn circumference(&self) -> i64 {
        self.circumference
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn arc(&self, v: usize) -> (i64, i64) {
        self.arcs[v]
    }

    /// Closed-arc point containment.
    pub fn contains_point(&self, v: usize, x: i64) -> bool {
        let (s, e) = self.arcs[v];
        if s < e {
            s <= x && x <= e
        } else {
            x >= s || x <= e
        }
    }

    pub fn arcs_intersect(&self, u: usize, v: usize) -> bool {
        self.contains_point(u, self.arcs[v].0) || self.contains_point(v, self.arcs[u].0)
    }

    fn len(&self, v: usize) -> i64 {
        let (s, e) = self.arcs[v];
        (e - s).rem_euclid(self.circumference)
    }

    /// Arc containment `A(u) ⊆ A(v)` (closed arcs).
    pub fn arc_contained(&self, u: usize, v: usize) -> bool {
        let offset = (self.arcs[u].0 - self.arcs[v].0).rem_euclid(self.circumference);
        offset + self.len(u) <= self.len(v)
    }

    /// Whether the union of the two closed arcs is the whole circle.
    pub fn arcs_cover_circle(&self, u: usize, v: usize) -> bool {
        // rotate so u starts at 0; its uncovered gap is the open (len(u), C)
        let gap_start = self.len(u);
        let b1 = (self.arcs[v].0 - self.arcs[u].0).rem_euclid(self.circumference);
        b1 <= gap_start && b1 + self.len(v) >= self.circumference
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        let mut map = serde_json::Map::new();
        for v in 0..self.n() {
            map.insert(g.label(v).to_string(), json!([self.arcs[v].0, self.arcs[v].1]));
        }
        json!({
            "circumference": self.circumference,
            "scale": self.scale,
            "arcs": Value::Object(map),
        })
    }

    pub fn from_json(v: &Value, g: &Graph) -> Result<ArcModel> {
        let circumference = v["circumference"]
            .as_i64()
            .ok_or_else(|| Error::MalformedWitness("missing `circumference`".into()))?;
        let scale = v["scale"].as_i64().unwrap_or(1);
        let obj = v["arcs"]
            .as_object()
            .ok_or_else(|| Error::MalformedWitness("missing `arcs`".into()))?;
        let mut arcs = vec![(0i64, 0i64); g.n()];
        let mut seen = vec![false; g.n()];
        for (name, pair) in obj {
            let idx = g
                .index_of_label(name)
                .ok_or_else(|| Error::MalformedWitness(format!("unknown vertex {name}")))?;
            let arr = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::MalformedWitness(format!("bad arc for {name}")))?;
            arcs[idx] = (
                arr[0].as_i64().ok_or_else(|| bad_num(name))?,
                arr[1].as_i64().ok_or_else(|| bad_num(name))?,
            );
            seen[idx] = true;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::MalformedWitness(format!(
                "no arc for vertex {}",
                g.label(v)
            )));
        }
        ArcModel::new(circumference, arcs, scale)
    }
}

/// True iff the intersection graph of the arcs equals `g`; the error carries
/// the first violating pair.
pub fn verify_arc_model(g: &Graph, m: &ArcModel) -> Result<()> {
    if m.n() != g.n() {
        return Err(Error::ModelMismatch(format!(
            "model has {} arcs, graph has {} vertices",
            m.n(),
            g.n()
        )));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if m.arcs_intersect(u, v) != g.adjacent(u, v) {
                return Err(Error::ModelMismatch(format!(
                    "pair ({},{}) {}",
                    g.label(u),
                    g.label(v),
                    if g.adjacent(u, v) {
                        "adjacent but arcs disjoint"
                    } else {
                        "non-adjacent but arcs intersect"
                    }
                )));
            }
        }
    }
    Ok(())
}

/// Checks that `m` realizes the derived graph of `(g, k)` and that for every
/// `v ∈ K`, `u ∉ K`: `I(v)` doubly extends `I(u)` iff `uv ∉ E(G)`.
pub fn verify_sharp(g: &Graph, k: &VertexSet, m: &IntervalModel) -> Result<()> {
    let aux = build_aux_graph(g, k)?;
    m.realizes(aux.derived())?;
    for &v in k {
        for u in g.vertices().filter(|u| !k.contains(u)) {
            let doubly = m.doubly_extends(v, u);
            let non_edge = !g.adjacent(u, v);
            if doubly != non_edge {
                return Err(Error::ModelMismatch(format!(
                    "pair ({},{}) {}",
                    g.label(v),
                    g.label(u),
                    if doubly {
                        "doubly extended despite an edge of the base graph"
                    } else {
                        "not doubly extended despite a non-edge of the base graph"
                    }
                )));
            }
        }
    }
    Ok(())
}

/// Per-condition report for the normalized-model definition.
#[derive(Debug, Clone)]
pub struct NormalizedReport {
    /// Arcs share an endpoint iff the vertices are twins.
    pub endpoints: std::result::Result<(), (usize, usize)>,
    /// Adjacent with one closed neighborhood inside the other implies arc containment.
    pub containment: std::result::Result<(), (usize, usize)>,
    /// Adjacent, jointly dominating, and not on an induced four-cycle implies
    /// the two arcs cover the circle.
    pub cover: std::result::Result<(), (usize, usize)>,
}

impl NormalizedReport {
    pub fn pass(&self) -> bool {
        self.endpoints.is_ok() && self.containment.is_ok() && self.cover.is_ok()
    }
}

/// Checks the three normalized-model conditions; `m` must realize `g`.
pub fn verify_normalized(g: &Graph, m: &ArcModel) -> Result<NormalizedReport> {
    verify_arc_model(g, m)?;
    let mut endpoints = Ok(());
    let mut containment = Ok(());
    let mut cover = Ok(());
    let n = g.n();
    'outer_e: for u in 0..n {
        for v in u + 1..n {
            let (su, eu) = m.arc(u);
            let (sv, ev) = m.arc(v);
            let share = su == sv || su == ev || eu == sv || eu == ev;
            let twins = g.closed_neighborhood(u) == g.closed_neighborhood(v);
            if share != twins {
                endpoints = Err((u, v));
                break 'outer_e;
            }
        }
    }
    'outer_c: for u in 0..n {
        for v in 0..n {
            if u == v || !g.adjacent(u, v) {
                continue;
            }
            if g.closed_neighborhood(u).is_subset(&g.closed_neighborhood(v))
                && !m.arc_contained(u, v)
            {
                containment = Err((u, v));
                break 'outer_c;
            }
        }
    }
    'outer_v: for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) {
                continue;
            }
            // N(u) ∪ N(v) = V(G); u and v are adjacent, so each lies in the
            // other's open neighborhood already.
            let dominating = g
                .neighbors(u)
                .union(g.neighbors(v))
                .copied()
                .collect::<VertexSet>()
                .len()
                == n;
            if !dominating {
                continue;
            }
            if edge_on_induced_c4(g, u, v) {
                continue;
            }
            if !m.arcs_cover_circle(u, v) {
                cover = Err((u, v));
                break 'outer_v;
            }
        }
    }
    Ok(NormalizedReport {
        endpoints,
        containment,
        cover,
    })
}

/// Whether edge `uv` lies on an induced four-cycle.
pub fn edge_on_induced_c4(g: &Graph, u: usize, v: usize) -> bool {
    debug_assert!(g.adjacent(u, v));
    let nu = g.closed_neighborhood(u);
    let nv = g.closed_neighborhood(v);
    for &a in g.neighbors(v) {
        if nu.contains(&a) {
            continue; // a must see v only
        }
        for &b in g.neighbors(u) {
            if nv.contains(&b) {
                continue;
            }
            if g.adjacent(a, b) {
                return true;
            }
        }
    }
    false
}

/// Flips the intervals of `K` around into arcs on a circle one unit longer
/// than the maximum endpoint. All endpoints of `m` must be strictly positive.
pub fn flip_to_arcs(m: &IntervalModel, k: &VertexSet) -> Result<ArcModel> {
    let scale = m.scale();
    let mut max_end = 0i64;
    for v in 0..m.n() {
        if m.lp(v) <= 0 {
            return Err(Error::NonpositiveEndpoint(format!("{v}")));
        }
        max_end = max_end.max(m.rp(v));
    }
    let circumference = max_end + scale;
    let mut arcs = Vec::with_capacity(m.n());
    for v in 0..m.n() {
        if k.contains(&v) {
            arcs.push((m.rp(v), m.lp(v)));
        } else {
            arcs.push((m.lp(v), m.rp(v)));
        }
    }
    ArcModel::new(circumference, arcs, scale)
}

/// Cuts the circle at `p` (which must not be an arc endpoint), flips the
/// arcs covering `p`, and returns the resulting interval model together with
/// the covering set `K`.
pub fn flip_to_intervals(m: &ArcModel, p: i64) -> Result<(IntervalModel, VertexSet)> {
    let c = m.circumference();
    let p = p.rem_euclid(c);
    for v in 0..m.n() {
        let (s, e) = m.arc(v);
        if s == p || e == p {
            return Err(Error::PointOnEndpoint(format!("{p} (vertex {v})")));
        }
    }
    let mut k = VertexSet::new();
    let mut lp = vec![0i64; m.n()];
    let mut rp = vec![0i64; m.n()];
    for v in 0..m.n() {
        let (s, e) = m.arc(v);
        let ps = (s - p).rem_euclid(c);
        let pe = (e - p).rem_euclid(c);
        if m.contains_point(v, p) {
            k.insert(v);
            debug_assert!(pe < ps);
            lp[v] = pe;
            rp[v] = ps;
        } else {
            debug_assert!(ps < pe);
            lp[v] = ps;
            rp[v] = pe;
        }
    }
    Ok((IntervalModel::new(lp, rp, m.scale())?, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn gm_model_realizes_derived_graph() {
        let g = fixtures::gm();
        let k = fixtures::gm_clique();
        let m = fixtures::gm_interval_model();
        verify_sharp(&g, &k, &m).unwrap();
    }

    #[test]
    fn gm_flip_realizes_base_graph() {
        let g = fixtures::gm();
        let k = fixtures::gm_clique();
        let m = fixtures::gm_interval_model().translate(1);
        let arcs = flip_to_arcs(&m, &k).unwrap();
        verify_arc_model(&g, &arcs).unwrap();
        let report = verify_normalized(&g, &arcs).unwrap();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn gm_flip_round_trip() {
        let g = fixtures::gm();
        let k = fixtures::gm_clique();
        let m = fixtures::gm_interval_model().translate(1);
        let arcs = flip_to_arcs(&m, &k).unwrap();
        let (back, k2) = flip_to_intervals(&arcs, 0).unwrap();
        assert_eq!(k, k2);
        back.realizes(build_aux_graph(&g, &k).unwrap().derived())
            .unwrap();
    }

    #[test]
    fn sun3_fixture_models_verify() {
        let g = fixtures::sun3();
        let covering = fixtures::sun3_arc_model_covering();
        verify_arc_model(&g, &covering).unwrap();
        let pointfree = fixtures::sun3_arc_model_pointfree();
        verify_arc_model(&g, &pointfree).unwrap();

        // in the covering model any two arcs of {2,4,6} cover the circle
        let idx = |l: &str| g.index_of_label(l).unwrap();
        for (a, b) in [("2", "4"), ("4", "6"), ("2", "6")] {
            assert!(covering.arcs_cover_circle(idx(a), idx(b)));
            assert!(!pointfree.arcs_cover_circle(idx(a), idx(b)));
        }
    }

    #[test]
    fn broken_edge_detected() {
        let g = fixtures::sun3();
        let m = fixtures::sun3_arc_model_covering();
        // shrink arc 1 so it misses arc 2
        let mut arcs: Vec<(i64, i64)> = (0..6).map(|v| m.arc(v)).collect();
        let one = g.index_of_label("1").unwrap();
        arcs[one] = (170, 190); // far from everything 1 used to touch
        let bad = ArcModel::new(360, arcs, 1).unwrap();
        assert!(verify_arc_model(&g, &bad).is_err());
    }

    #[test]
    fn empty_flip_set_keeps_intervals() {
        let m = IntervalModel::new(vec![3, 6], vec![9, 12], 3).unwrap();
        let arcs = flip_to_arcs(&m, &VertexSet::new()).unwrap();
        assert_eq!(arcs.arc(0), (3, 9));
        assert_eq!(arcs.arc(1), (6, 12));
        assert_eq!(arcs.circumference(), 15);
    }

    #[test]
    fn json_round_trip() {
        let g = fixtures::gm();
        let m = fixtures::gm_interval_model();
        let j = m.to_json(&g);
        let m2 = IntervalModel::from_json(&j, &g).unwrap();
        assert_eq!(m, m2);
        let arcs = flip_to_arcs(&m.translate(1), &fixtures::gm_clique()).unwrap();
        let j = arcs.to_json(&g);
        let a2 = ArcModel::from_json(&j, &g).unwrap();
        assert_eq!(arcs, a2);
    }
}
