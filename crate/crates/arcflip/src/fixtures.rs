//! The fixture corpus: small named graphs used throughout the tests, the
//! book, and the CLI, plus generators for the parametrized families.

use crate::graph::{Graph, VertexSet};
use crate::models::{ArcModel, IntervalModel};

fn g(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    let names: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let idx = |s: &str| names.iter().position(|l| l == s).unwrap();
    let e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Graph::with_labels(names, &e).unwrap()
}

/// 8 vertices, 16 edges: the running example with clique {s,v1,v2,v3}.
pub fn gm() -> Graph {
    g(
        &["u1", "u2", "u3", "u4", "v1", "v2", "v3", "s"],
        &[
            ("u1", "u2"),
            ("u2", "u3"),
            ("u3", "u4"),
            ("v1", "u1"),
            ("v1", "u3"),
            ("v2", "u2"),
            ("v2", "u3"),
            ("v2", "u4"),
            ("v3", "u3"),
            ("v3", "u4"),
            ("v1", "v2"),
            ("v1", "v3"),
            ("v2", "v3"),
            ("s", "v1"),
            ("s", "v2"),
            ("s", "v3"),
        ],
    )
}

/// The clique {s,v1,v2,v3} of `gm`, as indices.
pub fn gm_clique() -> VertexSet {
    let graph = gm();
    ["s", "v1", "v2", "v3"]
        .iter()
        .map(|l| graph.index_of_label(l).unwrap())
        .collect()
}

/// 6 vertices, 7 edges: the domino-like separating example with clique {v1,v2}.
pub fn gd() -> Graph {
    g(
        &["v1", "v2", "u1", "u2", "u3", "u4"],
        &[
            ("v1", "v2"),
            ("v1", "u1"),
            ("v1", "u3"),
            ("v2", "u2"),
            ("v2", "u4"),
            ("u1", "u2"),
            ("u3", "u4"),
        ],
    )
}

pub fn gd_clique() -> VertexSet {
    let graph = gd();
    ["v1", "v2"]
        .iter()
        .map(|l| graph.index_of_label(l).unwrap())
        .collect()
}

/// The 16-vertex interval graph whose clique path has six cliques K1..K6.
/// Vertex labels are "1".."16"; built from the published interval layout.
pub fn h16() -> Graph {
    // vertex -> clique range [lk, rk] over cliques 1..6
    let ranges: [(usize, usize); 16] = [
        (1, 6),
        (1, 6),
        (1, 2),
        (1, 1),
        (1, 1),
        (2, 2),
        (3, 6),
        (3, 5),
        (3, 4),
        (3, 3),
        (5, 5),
        (4, 5),
        (4, 5),
        (6, 6),
        (6, 6),
        (6, 6),
    ];
    let mut edges = Vec::new();
    for i in 0..16 {
        for j in i + 1..16 {
            let (a, b) = ranges[i];
            let (c, d) = ranges[j];
            if a.max(c) <= b.min(d) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(16, &edges).unwrap()
}

/// The six maximal cliques of `h16` in canonical path order (1-based labels).
pub fn h16_cliques() -> Vec<VertexSet> {
    let labels: [&[usize]; 6] = [
        &[1, 2, 3, 4, 5],
        &[1, 2, 3, 6],
        &[1, 2, 7, 8, 9, 10],
        &[1, 2, 7, 8, 9, 12, 13],
        &[1, 2, 7, 8, 11, 12, 13],
        &[1, 2, 7, 14, 15, 16],
    ];
    labels
        .iter()
        .map(|c| c.iter().map(|v| v - 1).collect())
        .collect()
}

/// The k-sun: a 2k-cycle 1..2k with all even-numbered vertices made a clique.
pub fn sun(k: usize) -> Graph {
    assert!(k >= 3);
    let n = 2 * k;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for a in (1..n).step_by(2) {
        for b in (a + 2..n).step_by(2) {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// The 3-sun.
pub fn sun3() -> Graph {
    sun(3)
}

/// Complement of the k-sun.
pub fn sun_complement(k: usize) -> Graph {
    sun(k).complement()
}

/// The long claw: a center with three attached paths of length two.
pub fn long_claw() -> Graph {
    g(
        &["c", "a1", "a2", "a3", "b1", "b2", "b3"],
        &[
            ("c", "a1"),
            ("c", "a2"),
            ("c", "a3"),
            ("a1", "b1"),
            ("a2", "b2"),
            ("a3", "b3"),
        ],
    )
}

/// The whipping top: a five-vertex path, a vertex adjacent to all of it,
/// and a pendant on the path's center.
pub fn whipping_top() -> Graph {
    g(
        &["x1", "x2", "x3", "x4", "x5", "w", "t"],
        &[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "x5"),
            ("w", "x1"),
            ("w", "x2"),
            ("w", "x3"),
            ("w", "x4"),
            ("w", "x5"),
            ("t", "x3"),
        ],
    )
}

/// The hole C_k (induced cycle), k >= 4.
pub fn hole(k: usize) -> Graph {
    assert!(k >= 4);
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges).unwrap()
}

/// Dagger family member with `j >= 2` middle vertices: a path
/// u1-m1-..-mj-u2, a hub adjacent to every middle vertex, and a pendant on
/// the hub. j = 2 is the net.
pub fn dagger(j: usize) -> Graph {
    assert!(j >= 2);
    let mut labels: Vec<String> = vec!["t".into(), "c".into(), "u1".into()];
    labels.extend((1..=j).map(|i| format!("m{i}")));
    labels.push("u2".into());
    let n = labels.len();
    let mut edges = vec![(0, 1)]; // t-c
    for i in 2..n - 1 {
        edges.push((i, i + 1)); // the bottom path
    }
    for i in 0..j {
        edges.push((1, 3 + i)); // c to each middle vertex
    }
    Graph::with_labels(labels, &edges).unwrap()
}

/// Double-dagger family member with `j >= 1` middle vertices: a path
/// u1-m1-..-mj-u2; c1 adjacent to u1 and all middles, c2 to all middles and
/// u2; edge c1c2 and an apex adjacent to c1, c2. j = 1 is the 3-sun.
pub fn double_dagger(j: usize) -> Graph {
    assert!(j >= 1);
    let mut labels: Vec<String> = vec!["x".into(), "c1".into(), "c2".into(), "u1".into()];
    labels.extend((1..=j).map(|i| format!("m{i}")));
    labels.push("u2".into());
    let n = labels.len();
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (1, 3)]; // apex + c1c2 + c1-u1
    for i in 3..n - 1 {
        edges.push((i, i + 1)); // bottom path
    }
    for i in 0..j {
        edges.push((1, 4 + i)); // c1 to middles
        edges.push((2, 4 + i)); // c2 to middles
    }
    edges.push((2, n - 1)); // c2-u2
    Graph::with_labels(labels, &edges).unwrap()
}

/// The octahedron (complement of three disjoint edges).
pub fn octahedron() -> Graph {
    let pairs = [(0, 1), (2, 3), (4, 5)];
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if !pairs.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(6, &edges).unwrap()
}

/// The published interval model of `gm`'s derived graph (endpoints at scale 1,
/// stored at the library's default scale of 3).
pub fn gm_interval_model() -> IntervalModel {
    let graph = gm();
    let pts: [(&str, i64, i64); 8] = [
        ("s", 0, 15),
        ("v1", 4, 13),
        ("v2", 2, 7),
        ("v3", 1, 10),
        ("u1", 3, 6),
        ("u2", 5, 9),
        ("u3", 8, 14),
        ("u4", 11, 12),
    ];
    let mut lp = vec![0i64; 8];
    let mut rp = vec![0i64; 8];
    for (name, l, r) in pts {
        let v = graph.index_of_label(name).unwrap();
        lp[v] = 3 * l;
        rp[v] = 3 * r;
    }
    IntervalModel::new(lp, rp, 3).unwrap()
}

/// A circular-arc model of the 3-sun in which any two arcs for the
/// even-numbered vertices cover the circle (degrees around a circle of
/// circumference 360).
pub fn sun3_arc_model_covering() -> ArcModel {
    let graph = sun3();
    let arcs: [(&str, i64, i64); 6] = [
        ("1", 40, 80),
        ("2", 240, 120),
        ("3", 280, 320),
        ("4", 100, 10),
        ("5", 160, 200),
        ("6", 350, 260),
    ];
    model_from_labeled_arcs(&graph, 360, &arcs)
}

/// A circular-arc model of the 3-sun in which the three arcs for the
/// even-numbered vertices share no common point.
pub fn sun3_arc_model_pointfree() -> ArcModel {
    let graph = sun3();
    let arcs: [(&str, i64, i64); 6] = [
        ("1", 80, 100),
        ("2", 300, 120),
        ("3", 320, 340),
        ("4", 180, 0),
        ("5", 200, 220),
        ("6", 60, 240),
    ];
    model_from_labeled_arcs(&graph, 360, &arcs)
}

fn model_from_labeled_arcs(graph: &Graph, circ: i64, arcs: &[(&str, i64, i64)]) -> ArcModel {
    let mut spans = vec![(0i64, 0i64); graph.n()];
    for &(name, s, e) in arcs {
        let v = graph.index_of_label(name).unwrap();
        spans[v] = (s, e);
    }
    ArcModel::new(circ, spans, 1).unwrap()
}

/// Names of all shipped fixtures, in listing order.
pub const FIXTURE_NAMES: [&str; 8] = [
    "gm",
    "gd",
    "h16",
    "sun3",
    "sun3-complement",
    "long-claw",
    "whipping-top",
    "octahedron",
];

/// Looks up a fixture graph by name. Parametrized families use the
/// `name:k` form, e.g. `hole:5`, `dagger:2`, `double-dagger:1`, `sun:4`,
/// `sun-complement:4`.
pub fn by_name(name: &str) -> Option<Graph> {
    if let Some((family, arg)) = name.split_once(':') {
        let k: usize = arg.parse().ok()?;
        return match family {
            "hole" if k >= 4 => Some(hole(k)),
            "dagger" if k >= 2 => Some(dagger(k)),
            "double-dagger" if k >= 1 => Some(double_dagger(k)),
            "sun" if k >= 3 => Some(sun(k)),
            "sun-complement" if k >= 3 => Some(sun_complement(k)),
            _ => None,
        };
    }
    match name {
        "gm" => Some(gm()),
        "gd" => Some(gd()),
        "h16" => Some(h16()),
        "sun3" => Some(sun3()),
        "sun3-complement" => Some(sun_complement(3)),
        "long-claw" => Some(long_claw()),
        "whipping-top" => Some(whipping_top()),
        "octahedron" => Some(octahedron()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gm_shape() {
        let graph = gm();
        assert_eq!((graph.n(), graph.m()), (8, 16));
        let s = graph.index_of_label("s").unwrap();
        assert_eq!(graph.degree(s), 3);
        assert!(graph.is_clique(&gm_clique()));
    }

    #[test]
    fn gd_shape() {
        let graph = gd();
        assert_eq!((graph.n(), graph.m()), (6, 7));
        assert!(graph.is_clique(&gd_clique()));
        assert!(graph.structure_report().universal_vertices.is_empty());
    }

    #[test]
    fn h16_cliques_match() {
        let graph = h16();
        let mut want = h16_cliques();
        want.sort();
        assert_eq!(graph.maximal_cliques().unwrap(), want);
    }

    #[test]
    fn sun_complement_is_net() {
        let net = sun_complement(3);
        let mut degs: Vec<usize> = net.vertices().map(|v| net.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 3, 3, 3]);
    }

    #[test]
    fn families_minimums() {
        assert_eq!(dagger(2).n(), 6);
        assert_eq!(double_dagger(1).n(), 6);
        assert_eq!(hole(4).n(), 4);
    }
}
