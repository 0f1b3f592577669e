//! The catalog of eighteen annotated forbidden configurations, a witness
//! verifier, and an exhaustive finder for small instances.
//!
//! A configuration is a pattern graph whose vertices are annotated `in K`,
//! `not in K`, or `uncertain`, and whose edges between an `in K` vertex and a
//! `not in K` vertex are annotated `in G`, `not in G`, or `uncertain`. Edges
//! between two `in K` vertices or two `not in K` vertices are edges of the
//! base graph automatically, and edges incident to an `uncertain` vertex
//! carry no base-graph constraint. Four families grow by replacing one
//! dashed edge with an induced path whose interior vertices are uncertain
//! and see a fixed attachment set.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::aux_graph::AuxGraph;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexAnn {
    InK,
    NotInK,
    Uncertain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeAnn {
    InG,
    NotInG,
    Uncertain,
}

/// Growth rule: the dashed edge `from`–`to` may be replaced by an induced
/// path whose interior vertices are each adjacent to every vertex in
/// `attach` (indices into the pattern's vertex list) and to nothing else.
#[derive(Debug, Clone, Copy)]
pub struct Growth {
    pub from: usize,
    pub to: usize,
    pub attach: &'static [usize],
}

#[derive(Debug, Clone, Copy)]
pub struct ConfigPattern {
    pub id: ConfigId,
    pub vertex_names: &'static [&'static str],
    pub anns: &'static [VertexAnn],
    pub edges: &'static [(usize, usize, EdgeAnn)],
    pub growth: Option<Growth>,
    pub min_vertices: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigId {
    Claw,
    DoubleClaw,
    TripleClaw,
    P5Plus1,
    Fork,
    DoubleFork,
    DoubleForkPlus1,
    P5Times1,
    P4P1Star1,
    AbWheel,
    WhippingTop1,
    BentWhippingTop,
    DagPlus2e,
    DagPlusE,
    DdagPlusE,
    DdagPlus2e,
    Add1,
    Add2,
}

impl ConfigId {
    pub const ALL: [ConfigId; 18] = [
        ConfigId::Claw,
        ConfigId::DoubleClaw,
        ConfigId::TripleClaw,
        ConfigId::P5Plus1,
        ConfigId::Fork,
        ConfigId::DoubleFork,
        ConfigId::DoubleForkPlus1,
        ConfigId::P5Times1,
        ConfigId::P4P1Star1,
        ConfigId::AbWheel,
        ConfigId::WhippingTop1,
        ConfigId::BentWhippingTop,
        ConfigId::DagPlus2e,
        ConfigId::DagPlusE,
        ConfigId::DdagPlusE,
        ConfigId::DdagPlus2e,
        ConfigId::Add1,
        ConfigId::Add2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigId::Claw => "claw",
            ConfigId::DoubleClaw => "double-claw",
            ConfigId::TripleClaw => "triple-claw",
            ConfigId::P5Plus1 => "p5+1",
            ConfigId::Fork => "fork",
            ConfigId::DoubleFork => "double-fork",
            ConfigId::DoubleForkPlus1 => "double-fork+1",
            ConfigId::P5Times1 => "p5x1",
            ConfigId::P4P1Star1 => "(p4+p1)*1",
            ConfigId::AbWheel => "ab-wheel",
            ConfigId::WhippingTop1 => "whipping-top-1",
            ConfigId::BentWhippingTop => "bent-whipping-top",
            ConfigId::DagPlus2e => "dag+2e",
            ConfigId::DagPlusE => "dag+e",
            ConfigId::DdagPlusE => "ddag+e",
            ConfigId::DdagPlus2e => "ddag+2e",
            ConfigId::Add1 => "add-1",
            ConfigId::Add2 => "add-2",
        }
    }

    /// Letter a..r, following catalog order.
    pub fn letter(self) -> char {
        (b'a' + ConfigId::ALL.iter().position(|&c| c == self).unwrap() as u8) as char
    }

    pub fn from_name(s: &str) -> Option<ConfigId> {
        ConfigId::ALL.iter().copied().find(|c| c.name() == s)
    }

    pub fn pattern(self) -> &'static ConfigPattern {
        &CATALOG[ConfigId::ALL.iter().position(|&c| c == self).unwrap()]
    }
}

impl fmt::Display for ConfigId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

use EdgeAnn::{InG, NotInG, Uncertain as EU};
use VertexAnn::{InK, NotInK, Uncertain as VU};

/// The full catalog, in letter order a..r.
pub static CATALOG: [ConfigPattern; 18] = [
    // a: one clique vertex tied to three pairwise non-adjacent outsiders
    ConfigPattern {
        id: ConfigId::Claw,
        vertex_names: &["v", "u1", "u2", "u3"],
        anns: &[InK, NotInK, NotInK, NotInK],
        edges: &[(0, 1, InG), (0, 2, InG), (0, 3, InG)],
        growth: None,
        min_vertices: 4,
    },
    // b
    ConfigPattern {
        id: ConfigId::DoubleClaw,
        vertex_names: &["v1", "v2", "u1", "u2", "u3"],
        anns: &[InK, InK, NotInK, NotInK, NotInK],
        edges: &[
            (0, 1, EU),
            (0, 2, InG),
            (0, 3, EU),
            (0, 4, NotInG),
            (1, 2, NotInG),
            (1, 3, InG),
            (1, 4, InG),
        ],
        growth: None,
        min_vertices: 5,
    },
    // c
    ConfigPattern {
        id: ConfigId::TripleClaw,
        vertex_names: &["v1", "v2", "v3", "u1", "u2", "u3"],
        anns: &[InK, InK, InK, NotInK, NotInK, NotInK],
        edges: &[
            (0, 1, EU),
            (0, 2, EU),
            (1, 2, EU),
            (0, 3, InG),
            (0, 4, NotInG),
            (0, 5, NotInG),
            (1, 3, NotInG),
            (1, 4, InG),
            (1, 5, NotInG),
            (2, 3, NotInG),
            (2, 4, NotInG),
            (2, 5, InG),
        ],
        growth: None,
        min_vertices: 6,
    },
    // d: five-vertex path with a pendant outsider on the clique-vertex center
    ConfigPattern {
        id: ConfigId::P5Plus1,
        vertex_names: &["x1", "x2", "v", "x3", "x4", "u"],
        anns: &[VU, VU, InK, VU, VU, NotInK],
        edges: &[
            (0, 1, EU),
            (1, 2, EU),
            (2, 3, EU),
            (3, 4, EU),
            (2, 5, InG),
        ],
        growth: None,
        min_vertices: 6,
    },
    // e
    ConfigPattern {
        id: ConfigId::Fork,
        vertex_names: &["x1", "x2", "v", "u1", "u2"],
        anns: &[VU, VU, InK, NotInK, NotInK],
        edges: &[(0, 1, EU), (1, 2, EU), (2, 3, InG), (2, 4, InG)],
        growth: None,
        min_vertices: 5,
    },
    // f
    ConfigPattern {
        id: ConfigId::DoubleFork,
        vertex_names: &["x1", "x2", "v1", "v2", "u1", "u2"],
        anns: &[VU, VU, InK, InK, NotInK, NotInK],
        edges: &[
            (0, 1, EU),
            (1, 2, EU),
            (1, 3, EU),
            (2, 3, EU),
            (2, 4, InG),
            (2, 5, NotInG),
            (3, 4, EU),
            (3, 5, InG),
        ],
        growth: None,
        min_vertices: 6,
    },
    // g: the previous shape plus an edge from the path's far end to v2
    ConfigPattern {
        id: ConfigId::DoubleForkPlus1,
        vertex_names: &["x1", "x2", "v1", "v2", "u1", "u2"],
        anns: &[VU, VU, InK, InK, NotInK, NotInK],
        edges: &[
            (0, 1, EU),
            (0, 3, EU),
            (1, 2, EU),
            (1, 3, EU),
            (2, 3, EU),
            (2, 4, InG),
            (2, 5, NotInG),
            (3, 4, EU),
            (3, 5, InG),
        ],
        growth: None,
        min_vertices: 6,
    },
    // h: five-vertex path centered at an outsider, dominated by a clique vertex
    ConfigPattern {
        id: ConfigId::P5Times1,
        vertex_names: &["x1", "x2", "u", "x3", "x4", "v"],
        anns: &[VU, VU, NotInK, VU, VU, InK],
        edges: &[
            (0, 1, EU),
            (1, 2, EU),
            (2, 3, EU),
            (3, 4, EU),
            (5, 0, EU),
            (5, 1, EU),
            (5, 2, InG),
            (5, 3, EU),
            (5, 4, EU),
        ],
        growth: None,
        min_vertices: 6,
    },
    // i: four-vertex path dominated by a clique vertex with its own pendant
    ConfigPattern {
        id: ConfigId::P4P1Star1,
        vertex_names: &["x0", "a", "x1", "u1", "u2", "x2"],
        anns: &[VU, InK, VU, NotInK, NotInK, VU],
        edges: &[
            (0, 1, EU),
            (1, 2, EU),
            (1, 3, InG),
            (1, 4, InG),
            (1, 5, EU),
            (2, 3, EU),
            (3, 4, EU),
            (4, 5, EU),
        ],
        growth: None,
        min_vertices: 6,
    },
    // j
    ConfigPattern {
        id: ConfigId::AbWheel,
        vertex_names: &["x1", "v1", "v2", "x2", "u", "x3"],
        anns: &[VU, InK, InK, VU, NotInK, VU],
        edges: &[
            (0, 1, EU),
            (1, 2, EU),
            (2, 3, EU),
            (4, 1, InG),
            (4, 2, InG),
            (1, 5, EU),
            (2, 5, EU),
        ],
        growth: None,
        min_vertices: 6,
    },
    // k
    ConfigPattern {
        id: ConfigId::WhippingTop1,
        vertex_names: &["x1", "x2", "v", "u", "x3", "x4"],
        anns: &[VU, VU, InK, NotInK, VU, VU],
        edges: &[
            (0, 1, EU),
            (1, 2, EU),
            (2, 3, InG),
            (4, 0, EU),
            (4, 1, EU),
            (4, 2, EU),
            (4, 3, EU),
            (2, 5, EU),
        ],
        growth: None,
        min_vertices: 6,
    },
    // l
    ConfigPattern {
        id: ConfigId::BentWhippingTop,
        vertex_names: &["x1", "x2", "x3", "x4", "x5", "a", "u"],
        anns: &[VU, VU, VU, VU, VU, InK, NotInK],
        edges: &[
            (0, 1, EU),
            (1, 2, EU),
            (2, 3, EU),
            (3, 4, EU),
            (5, 0, EU),
            (5, 1, EU),
            (5, 2, EU),
            (5, 3, EU),
            (5, 4, EU),
            (5, 6, InG),
            (6, 2, EU),
        ],
        growth: None,
        min_vertices: 7,
    },
    // m: hub thick to both ends of a grown path, pendant on the hub
    ConfigPattern {
        id: ConfigId::DagPlus2e,
        vertex_names: &["a", "x0", "u1", "x1", "u2"],
        anns: &[InK, VU, NotInK, VU, NotInK],
        edges: &[
            (0, 1, EU),
            (0, 2, InG),
            (0, 3, EU),
            (0, 4, InG),
            (2, 3, EU),
        ],
        growth: Some(Growth {
            from: 3,
            to: 4,
            attach: &[0],
        }),
        min_vertices: 5,
    },
    // n: hub thick to one far path end only
    ConfigPattern {
        id: ConfigId::DagPlusE,
        vertex_names: &["x0", "v", "x1", "x2", "x3", "u"],
        anns: &[VU, InK, VU, VU, VU, NotInK],
        edges: &[
            (1, 0, EU),
            (2, 3, EU),
            (3, 4, EU),
            (1, 3, EU),
            (1, 4, EU),
            (1, 5, InG),
        ],
        growth: Some(Growth {
            from: 4,
            to: 5,
            attach: &[1],
        }),
        min_vertices: 6,
    },
    // o
    ConfigPattern {
        id: ConfigId::DdagPlusE,
        vertex_names: &["v", "x1", "x2", "x3", "x4", "u"],
        anns: &[InK, VU, VU, VU, VU, NotInK],
        edges: &[
            (0, 1, EU),
            (0, 2, EU),
            (0, 3, EU),
            (0, 4, EU),
            (0, 5, InG),
            (2, 1, EU),
            (2, 4, EU),
            (2, 5, EU),
            (3, 4, EU),
        ],
        growth: Some(Growth {
            from: 4,
            to: 5,
            attach: &[0, 2],
        }),
        min_vertices: 6,
    },
    // p
    ConfigPattern {
        id: ConfigId::DdagPlus2e,
        vertex_names: &["x0", "v1", "v2", "x1", "x2", "u"],
        anns: &[VU, InK, InK, NotInK, NotInK, VU],
        edges: &[
            (0, 1, EU),
            (0, 2, EU),
            (1, 2, EU),
            (1, 3, NotInG),
            (1, 4, InG),
            (2, 3, InG),
            (2, 4, NotInG),
            (5, 1, EU),
            (5, 2, EU),
            (5, 4, EU),
        ],
        growth: Some(Growth {
            from: 5,
            to: 3,
            attach: &[1, 2],
        }),
        min_vertices: 6,
    },
    // q
    ConfigPattern {
        id: ConfigId::Add1,
        vertex_names: &["x0", "x1", "x2", "v1", "v2", "u1", "u2"],
        anns: &[VU, VU, VU, InK, InK, NotInK, NotInK],
        edges: &[
            (1, 3, EU),
            (3, 0, EU),
            (2, 4, EU),
            (4, 0, EU),
            (3, 4, EU),
            (3, 5, InG),
            (4, 6, InG),
            (4, 5, NotInG),
            (3, 6, NotInG),
            (5, 6, EU),
        ],
        growth: None,
        min_vertices: 7,
    },
    // r
    ConfigPattern {
        id: ConfigId::Add2,
        vertex_names: &["x0", "x1", "x2", "v1", "v2", "u1", "u2"],
        anns: &[VU, VU, VU, InK, InK, NotInK, NotInK],
        edges: &[
            (0, 3, EU),
            (0, 4, EU),
            (3, 4, EU),
            (1, 5, EU),
            (5, 6, EU),
            (6, 2, EU),
            (3, 1, EU),
            (3, 2, EU),
            (4, 1, EU),
            (4, 2, EU),
            (3, 5, InG),
            (3, 6, NotInG),
            (4, 5, NotInG),
            (4, 6, InG),
        ],
        growth: None,
        min_vertices: 7,
    },
];

/// An embedding of a configuration into a derived graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigWitness {
    pub config: ConfigId,
    /// Pattern vertex name -> host vertex.
    pub map: BTreeMap<String, usize>,
    /// Interior vertices of the grown path, in order from the growth's
    /// `from` endpoint to its `to` endpoint; empty for the minimal instance.
    pub path: Vec<usize>,
}

impl ConfigWitness {
    pub fn host_vertices(&self) -> VertexSet {
        let mut s: VertexSet = self.map.values().copied().collect();
        s.extend(self.path.iter().copied());
        s
    }

    pub fn to_json(&self, aux: &AuxGraph) -> Value {
        let g = aux.graph();
        let mut map = serde_json::Map::new();
        for (name, &v) in &self.map {
            map.insert(name.clone(), json!(g.label(v)));
        }
        json!({
            "config": self.config.name(),
            "map": Value::Object(map),
            "path": self.path.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, aux: &AuxGraph) -> Result<ConfigWitness> {
        let g = aux.graph();
        let config = v["config"]
            .as_str()
            .and_then(ConfigId::from_name)
            .ok_or_else(|| Error::MalformedWitness("unknown or missing config name".into()))?;
        let mut map = BTreeMap::new();
        let obj = v["map"]
            .as_object()
            .ok_or_else(|| Error::MalformedWitness("missing `map`".into()))?;
        for (name, val) in obj {
            let label = val
                .as_str()
                .map(str::to_string)
                .or_else(|| val.as_i64().map(|x| x.to_string()))
                .ok_or_else(|| Error::MalformedWitness(format!("bad value for {name}")))?;
            let idx = g
                .index_of_label(&label)
                .ok_or_else(|| Error::MalformedWitness(format!("unknown vertex {label}")))?;
            map.insert(name.clone(), idx);
        }
        let mut path = Vec::new();
        if let Some(arr) = v["path"].as_array() {
            for val in arr {
                let label = val
                    .as_str()
                    .map(str::to_string)
                    .or_else(|| val.as_i64().map(|x| x.to_string()))
                    .ok_or_else(|| Error::MalformedWitness("bad path entry".into()))?;
                path.push(
                    g.index_of_label(&label)
                        .ok_or_else(|| Error::MalformedWitness(format!("unknown vertex {label}")))?,
                );
            }
        }
        Ok(ConfigWitness { config, map, path })
    }
}

/// Expected adjacency and annotations of a (possibly grown) pattern,
/// flattened over `fixed + interior` vertices.
struct Expanded {
    /// fixed-vertex count comes first, then interior vertices
    total: usize,
    adj: Vec<Vec<bool>>,
    anns: Vec<VertexAnn>,
    /// base-graph annotation per (i, j) pair, `EdgeAnn::Uncertain` when free
    gann: Vec<Vec<EdgeAnn>>,
}

fn expand(pattern: &ConfigPattern, interior: usize) -> Expanded {
    let nf = pattern.vertex_names.len();
    let total = nf + interior;
    let mut adj = vec![vec![false; total]; total];
    let mut gann = vec![vec![EU; total]; total];
    let mut anns: Vec<VertexAnn> = pattern.anns.to_vec();
    anns.extend(std::iter::repeat(VU).take(interior));
    let add = |a: usize, b: usize, ann: EdgeAnn, adj: &mut Vec<Vec<bool>>, gann: &mut Vec<Vec<EdgeAnn>>| {
        adj[a][b] = true;
        adj[b][a] = true;
        gann[a][b] = ann;
        gann[b][a] = ann;
    };
    for &(a, b, ann) in pattern.edges {
        add(a, b, ann, &mut adj, &mut gann);
    }
    if let Some(g) = pattern.growth {
        if interior == 0 {
            add(g.from, g.to, EU, &mut adj, &mut gann);
        } else {
            let first = nf;
            let last = nf + interior - 1;
            add(g.from, first, EU, &mut adj, &mut gann);
            add(last, g.to, EU, &mut adj, &mut gann);
            for i in 0..interior.saturating_sub(1) {
                add(nf + i, nf + i + 1, EU, &mut adj, &mut gann);
            }
            for i in 0..interior {
                for &att in g.attach {
                    add(nf + i, att, EU, &mut adj, &mut gann);
                }
            }
        }
    }
    Expanded {
        total,
        adj,
        anns,
        gann,
    }
}

/// Checks a witness clause by clause: induced pattern in the derived graph,
/// clique membership per vertex annotation, base-graph membership per edge
/// annotation. The error carries the first failing clause.
pub fn verify_witness(aux: &AuxGraph, w: &ConfigWitness) -> Result<()> {
    let pattern = w.config.pattern();
    let names = pattern.vertex_names;
    if w.map.len() != names.len()
        || !names.iter().all(|n| w.map.contains_key(*n))
    {
        return Err(Error::MalformedWitness(format!(
            "map must cover exactly the pattern vertices {:?}",
            names
        )));
    }
    if pattern.growth.is_none() && !w.path.is_empty() {
        return Err(Error::MalformedWitness(
            "this configuration does not grow".into(),
        ));
    }
    let mut hosts: Vec<usize> = names.iter().map(|n| w.map[*n]).collect();
    hosts.extend(w.path.iter().copied());
    {
        let set: VertexSet = hosts.iter().copied().collect();
        if set.len() != hosts.len() {
            return Err(Error::MalformedWitness("mapping is not injective".into()));
        }
        if let Some(&v) = set.iter().next_back() {
            if v >= aux.graph().n() {
                return Err(Error::MalformedWitness(format!(
                    "vertex {v} outside the host graph"
                )));
            }
        }
    }
    let ex = expand(pattern, w.path.len());
    let derived = aux.derived();
    let g = aux.graph();
    for i in 0..ex.total {
        for j in i + 1..ex.total {
            let want = ex.adj[i][j];
            let have = derived.adjacent(hosts[i], hosts[j]);
            if want != have {
                return Err(Error::MalformedWitness(format!(
                    "pattern {} the derived edge {}–{}",
                    if want { "requires" } else { "forbids" },
                    g.label(hosts[i]),
                    g.label(hosts[j]),
                )));
            }
        }
    }
    for i in 0..ex.total {
        match ex.anns[i] {
            InK if !aux.in_clique(hosts[i]) => {
                return Err(Error::MalformedWitness(format!(
                    "{} must lie in the clique",
                    g.label(hosts[i])
                )));
            }
            NotInK if aux.in_clique(hosts[i]) => {
                return Err(Error::MalformedWitness(format!(
                    "{} must lie outside the clique",
                    g.label(hosts[i])
                )));
            }
            _ => {}
        }
    }
    for i in 0..ex.total {
        for j in i + 1..ex.total {
            if !ex.adj[i][j] {
                continue;
            }
            match ex.gann[i][j] {
                InG if !g.adjacent(hosts[i], hosts[j]) => {
                    return Err(Error::MalformedWitness(format!(
                        "edge {}–{} must be an edge of the base graph",
                        g.label(hosts[i]),
                        g.label(hosts[j])
                    )));
                }
                NotInG if g.adjacent(hosts[i], hosts[j]) => {
                    return Err(Error::MalformedWitness(format!(
                        "edge {}–{} must be a non-edge of the base graph",
                        g.label(hosts[i]),
                        g.label(hosts[j])
                    )));
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Exhaustively searches for any verifying witness, anchored on cross pairs
/// that are edges of both graphs. `None` when no configuration embeds.
/// Instances beyond the bound are rejected (this finder is an oracle for
/// small hosts).
pub fn find_config(aux: &AuxGraph) -> Result<Option<ConfigWitness>> {
    find_config_bounded(aux, 12)
}

pub fn find_config_bounded(aux: &AuxGraph, bound: usize) -> Result<Option<ConfigWitness>> {
    let n = aux.derived().n();
    if n > bound {
        return Err(Error::GuardExceeded {
            what: "configuration search",
            limit: bound as u64,
        });
    }
    for id in ConfigId::ALL {
        if let Some(w) = find_one_config(aux, id)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Searches for an embedding of a single configuration.
pub fn find_one_config(aux: &AuxGraph, id: ConfigId) -> Result<Option<ConfigWitness>> {
    let pattern = id.pattern();
    let nf = pattern.vertex_names.len();
    // search order: a thick edge first, then breadth-first over the pattern
    let thick = pattern
        .edges
        .iter()
        .find(|&&(a, b, ann)| {
            ann == InG
                && ((pattern.anns[a] == InK && pattern.anns[b] == NotInK)
                    || (pattern.anns[a] == NotInK && pattern.anns[b] == InK))
        })
        .map(|&(a, b, _)| (a, b))
        .expect("every configuration carries a thick edge");
    let mut order = vec![thick.0, thick.1];
    while order.len() < nf {
        let next = (0..nf)
            .find(|i| {
                !order.contains(i)
                    && order
                        .iter()
                        .any(|&j| pattern.edges.iter().any(|&(a, b, _)| (a, b) == (*i, j) || (a, b) == (j, *i)))
            })
            .or_else(|| (0..nf).find(|i| !order.contains(i)))
            .unwrap();
        order.push(next);
    }
    let ex0 = expand(pattern, 0);
    let derived = aux.derived();
    let _g = aux.graph();
    let n = derived.n();
    let mut image: Vec<Option<usize>> = vec![None; nf];
    let mut used = vec![false; n];

    fn compatible(
        aux: &AuxGraph,
        ex0: &Expanded,
        pattern: &ConfigPattern,
        image: &[Option<usize>],
        pv: usize,
        host: usize,
    ) -> bool {
        let g = aux.graph();
        let derived = aux.derived();
        match ex0.anns[pv] {
            InK => {
                if !aux.in_clique(host) {
                    return false;
                }
            }
            NotInK => {
                if aux.in_clique(host) {
                    return false;
                }
            }
            VU => {}
        }
        for (qv, &im) in image.iter().enumerate() {
            let Some(h) = im else { continue };
            if qv == pv {
                continue;
            }
            // growth edges are not fixed constraints between fixed vertices,
            // except their endpoints in the minimal instance — handled later
            let (want_adj, gann) = (ex0.adj[pv][qv], ex0.gann[pv][qv]);
            if pattern
                .growth
                .map(|gr| (gr.from, gr.to) == (pv, qv) || (gr.from, gr.to) == (qv, pv))
                .unwrap_or(false)
            {
                continue; // decided by the growth phase
            }
            if derived.adjacent(host, h) != want_adj {
                return false;
            }
            if want_adj {
                match gann {
                    InG if !g.adjacent(host, h) => return false,
                    NotInG if g.adjacent(host, h) => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn rec(
        aux: &AuxGraph,
        pattern: &ConfigPattern,
        ex0: &Expanded,
        order: &[usize],
        depth: usize,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> Result<Option<ConfigWitness>> {
        let nf = pattern.vertex_names.len();
        if depth == order.len() {
            return finish(aux, pattern, image);
        }
        let pv = order[depth];
        let n = aux.derived().n();
        for host in 0..n {
            if used[host] {
                continue;
            }
            if !compatible(aux, ex0, pattern, image, pv, host) {
                continue;
            }
            image[pv] = Some(host);
            used[host] = true;
            if let Some(w) = rec(aux, pattern, ex0, order, depth + 1, image, used)? {
                return Ok(Some(w));
            }
            image[pv] = None;
            used[host] = false;
        }
        let _ = nf;
        Ok(None)
    }

    fn finish(
        aux: &AuxGraph,
        pattern: &ConfigPattern,
        image: &[Option<usize>],
    ) -> Result<Option<ConfigWitness>> {
        let map: BTreeMap<String, usize> = pattern
            .vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.to_string(), image[i].unwrap()))
            .collect();
        let make = |path: Vec<usize>| ConfigWitness {
            config: pattern.id,
            map: map.clone(),
            path,
        };
        match pattern.growth {
            None => {
                let w = make(vec![]);
                verify_witness(aux, &w)?;
                Ok(Some(w))
            }
            Some(gr) => {
                let derived = aux.derived();
                let a = image[gr.from].unwrap();
                let b = image[gr.to].unwrap();
                // minimal instance: the dashed edge is a direct edge
                if derived.adjacent(a, b) {
                    let w = make(vec![]);
                    if verify_witness(aux, &w).is_ok() {
                        return Ok(Some(w));
                    }
                    return Ok(None);
                }
                // grown instance: interior vertices see exactly the
                // attachment images plus their path neighbors
                let attach_hosts: Vec<usize> =
                    gr.attach.iter().map(|&i| image[i].unwrap()).collect();
                let mapped: VertexSet = image.iter().flatten().copied().collect();
                let mut allowed: VertexSet = derived
                    .vertices()
                    .filter(|&x| {
                        !mapped.contains(&x)
                            && attach_hosts.iter().all(|&h| derived.adjacent(x, h))
                            && mapped.iter().all(|&m| {
                                attach_hosts.contains(&m)
                                    || m == a
                                    || m == b
                                    || !derived.adjacent(x, m)
                            })
                    })
                    .collect();
                allowed.insert(a);
                allowed.insert(b);
                if let Some(path) = derived.shortest_path_within(a, b, &allowed) {
                    if path.len() >= 3 {
                        let w = make(path[1..path.len() - 1].to_vec());
                        if verify_witness(aux, &w).is_ok() {
                            return Ok(Some(w));
                        }
                    }
                }
                Ok(None)
            }
        }
    }

    rec(aux, pattern, &ex0, &order, 0, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aux_graph::build_aux_graph;
    use crate::graph::Graph;

    /// Host whose derived graph is the pattern literally: base edges realize
    /// the annotations, the derived graph is asserted as given.
    fn literal_host(pattern: &ConfigPattern, interior: usize) -> (AuxGraph, ConfigWitness) {
        let ex = expand(pattern, interior);
        let total = ex.total;
        let labels: Vec<String> = (0..total)
            .map(|i| {
                if i < pattern.vertex_names.len() {
                    pattern.vertex_names[i].to_string()
                } else {
                    format!("g{}", i - pattern.vertex_names.len())
                }
            })
            .collect();
        let mut derived_edges = Vec::new();
        let mut base_edges = Vec::new();
        for i in 0..total {
            for j in i + 1..total {
                if !ex.adj[i][j] {
                    continue;
                }
                derived_edges.push((i, j));
                let cross = matches!(
                    (ex.anns[i], ex.anns[j]),
                    (InK, NotInK) | (NotInK, InK)
                );
                let in_base = if cross {
                    ex.gann[i][j] == InG
                } else {
                    // edges not between clique and outside: put them in the
                    // base graph except when one endpoint is in the clique
                    // (the uncertain side is treated as outside)
                    !(matches!((ex.anns[i], ex.anns[j]), (InK, VU) | (VU, InK)))
                };
                if in_base {
                    base_edges.push((i, j));
                }
            }
        }
        // the clique must be a clique of the base graph
        for i in 0..total {
            for j in i + 1..total {
                if ex.anns[i] == InK && ex.anns[j] == InK && !base_edges.contains(&(i, j)) {
                    base_edges.push((i, j));
                }
            }
        }
        let base = Graph::with_labels(labels.clone(), &base_edges).unwrap();
        let derived = Graph::with_labels(labels, &derived_edges).unwrap();
        let clique: VertexSet = (0..total).filter(|&i| ex.anns[i] == InK).collect();
        let aux = AuxGraph::from_parts(base, clique, derived).unwrap();
        let map: BTreeMap<String, usize> = pattern
            .vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.to_string(), i))
            .collect();
        let path = (pattern.vertex_names.len()..total).collect();
        (
            aux,
            ConfigWitness {
                config: pattern.id,
                map,
                path,
            },
        )
    }

    #[test]
    fn catalog_self_test() {
        for pattern in &CATALOG {
            let (aux, w) = literal_host(pattern, 0);
            verify_witness(&aux, &w).unwrap_or_else(|e| {
                panic!("configuration {} rejects its own host: {e}", pattern.id)
            });
            assert_eq!(
                w.host_vertices().len(),
                pattern.min_vertices,
                "{}",
                pattern.id
            );
            if pattern.growth.is_some() {
                let (aux, w) = literal_host(pattern, 2);
                verify_witness(&aux, &w).unwrap_or_else(|e| {
                    panic!("grown configuration {} rejects its host: {e}", pattern.id)
                });
            }
        }
    }

    #[test]
    fn finder_finds_literal_hosts() {
        for pattern in &CATALOG {
            let (aux, _) = literal_host(pattern, 0);
            let found = find_one_config(&aux, pattern.id).unwrap();
            let w = found.unwrap_or_else(|| panic!("finder misses {}", pattern.id));
            verify_witness(&aux, &w).unwrap();
        }
    }

    #[test]
    fn long_claw_host_end_to_end() {
        // center v adjacent to u1,u2,u3, each with a private pendant; K = {v}
        let g = Graph::with_labels(
            ["v", "u1", "u2", "u3", "w1", "w2", "w3"]
                .map(String::from)
                .to_vec(),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)],
        )
        .unwrap();
        let aux = build_aux_graph(&g, &VertexSet::from([0])).unwrap();
        // the derived graph keeps v thick to all three arms
        let w = ConfigWitness {
            config: ConfigId::Claw,
            map: [("v", 0), ("u1", 1), ("u2", 2), ("u3", 3)]
                .map(|(n, v)| (n.to_string(), v))
                .into(),
            path: vec![],
        };
        verify_witness(&aux, &w).unwrap();

        // a membership contradiction is caught
        let mut bad = w.clone();
        bad.map.insert("u1".into(), 0);
        bad.map.insert("v".into(), 1);
        assert!(verify_witness(&aux, &bad).is_err());

        // an induced-subgraph violation is caught
        let mut bad2 = w.clone();
        bad2.map.insert("u2".into(), 4); // w1 is adjacent to u1 in the derived graph
        assert!(verify_witness(&aux, &bad2).is_err());

        // the finder locates a claw
        let found = find_config(&aux).unwrap().unwrap();
        assert_eq!(found.config, ConfigId::Claw);
        verify_witness(&aux, &found).unwrap();
    }

    #[test]
    fn gd_and_gm_have_no_configuration() {
        for (g, k) in [
            (crate::fixtures::gd(), crate::fixtures::gd_clique()),
            (crate::fixtures::gm(), crate::fixtures::gm_clique()),
        ] {
            let aux = build_aux_graph(&g, &k).unwrap();
            assert_eq!(find_config(&aux).unwrap(), None);
        }
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::with_labels(
            ["v", "u1", "u2", "u3", "w1", "w2", "w3"]
                .map(String::from)
                .to_vec(),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)],
        )
        .unwrap();
        let aux = build_aux_graph(&g, &VertexSet::from([0])).unwrap();
        let w = find_config(&aux).unwrap().unwrap();
        let j = w.to_json(&aux);
        let w2 = ConfigWitness::from_json(&j, &aux).unwrap();
        assert_eq!(w, w2);
    }

    #[test]
    fn names_round_trip() {
        for id in ConfigId::ALL {
            assert_eq!(ConfigId::from_name(id.name()), Some(id));
        }
        assert_eq!(ConfigId::Claw.letter(), 'a');
        assert_eq!(ConfigId::Add2.letter(), 'r');
    }
}
