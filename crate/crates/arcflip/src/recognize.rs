//! End-to-end recognition pipelines: candidate-clique selection, per-clique
//! evaluation through the derived graph, and certificate assembly. Every
//! emitted model verifies against the input; every emitted witness verifies
//! clause by clause.

use std::fmt;

use serde_json::{json, Value};

use crate::aux_graph::build_aux_graph;
use crate::config::ConfigWitness;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::models::{flip_to_arcs, verify_arc_model, ArcModel};
use crate::obstruction::{recognize_interval, IntervalOutcome, NonIntervalWitness};
use crate::oracle::oracle_circular_arc;
use crate::star::{check_star, star_to_sharp, StarOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    C4Free,
    Chordal,
    Helly,
    Auto,
}

impl Mode {
    pub fn from_name(s: &str) -> Option<Mode> {
        match s {
            "c4free" => Some(Mode::C4Free),
            "chordal" => Some(Mode::Chordal),
            "helly" => Some(Mode::Helly),
            "auto" => Some(Mode::Auto),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::C4Free => "c4free",
            Mode::Chordal => "chordal",
            Mode::Helly => "helly",
            Mode::Auto => "auto",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    CircularArc,
    NotCircularArc,
    NotHelly,
    OutOfScope,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::CircularArc => "CIRCULAR_ARC",
            Verdict::NotCircularArc => "NOT_CIRCULAR_ARC",
            Verdict::NotHelly => "NOT_HELLY",
            Verdict::OutOfScope => "OUT_OF_SCOPE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// Why one candidate clique fails.
#[derive(Debug, Clone)]
pub enum KFailure {
    NonInterval(NonIntervalWitness),
    Config(ConfigWitness),
}

/// Tagged result of recognition: a verified model with its clique, or
/// per-clique obstruction witnesses, plus precondition notes.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub verdict: Verdict,
    pub mode: Mode,
    pub model: Option<(ArcModel, VertexSet)>,
    pub failures: Vec<(VertexSet, KFailure)>,
    pub stripped_universal: VertexSet,
    pub helly: bool,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::CircularArc => 0,
            Verdict::NotCircularArc | Verdict::NotHelly => 1,
            Verdict::OutOfScope | Verdict::Inconclusive => 2,
        }
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        let labels = |s: &VertexSet| -> Vec<String> {
            s.iter().map(|&v| g.label(v).to_string()).collect()
        };
        let mut out = json!({
            "verdict": self.verdict.name(),
            "mode": self.mode.name(),
            "stripped_universal": labels(&self.stripped_universal),
            "helly": self.helly,
            "notes": self.notes,
        });
        if let Some((model, k)) = &self.model {
            out["clique"] = json!(labels(k));
            out["model"] = model.to_json(g);
        }
        if !self.failures.is_empty() {
            out["failures"] = Value::Array(
                self.failures
                    .iter()
                    .map(|(k, f)| {
                        let mut entry = json!({ "clique": labels(k) });
                        match f {
                            KFailure::NonInterval(w) => {
                                entry["kind"] = json!("non-interval");
                                entry["witness"] = json!({
                                    "vertices": labels(&w.vertices),
                                    "shape": serde_json::to_value(w.kind).unwrap(),
                                });
                            }
                            KFailure::Config(w) => {
                                entry["kind"] = json!("configuration");
                                // rebuild against the stripped host is not
                                // possible here; emit labels directly
                                entry["witness"] = json!({
                                    "config": w.config.name(),
                                    "map": w
                                        .map
                                        .iter()
                                        .map(|(n, &v)| (n.clone(), json!(g.label(v))))
                                        .collect::<serde_json::Map<_, _>>(),
                                    "path": w
                                        .path
                                        .iter()
                                        .map(|&v| g.label(v))
                                        .collect::<Vec<_>>(),
                                });
                            }
                        }
                        entry
                    })
                    .collect(),
            );
        }
        out
    }
}

/// Candidate cliques per mode: closed neighborhoods of simplicial vertices,
/// maximal cliques, or every clique (maximal ones first).
pub fn candidate_cliques(g: &Graph, mode: Mode) -> Result<Vec<VertexSet>> {
    match mode {
        Mode::Chordal => {
            let mut ks: Vec<VertexSet> = g
                .simplicial_vertices()
                .iter()
                .map(|&s| g.closed_neighborhood(s))
                .collect();
            ks.sort();
            ks.dedup();
            Ok(ks)
        }
        Mode::Helly => g.maximal_cliques(),
        Mode::C4Free => {
            let maximal = g.maximal_cliques()?;
            let mut rest: Vec<VertexSet> = g
                .all_cliques()?
                .into_iter()
                .filter(|c| !maximal.contains(c))
                .collect();
            rest.sort_by_key(|c| (usize::MAX - c.len(), c.clone()));
            let mut out = maximal;
            out.extend(rest);
            Ok(out)
        }
        Mode::Auto => Err(Error::Unsupported(
            "candidate enumeration needs a concrete mode".into(),
        )),
    }
}

/// Runs one clique through the pipeline: derived graph, interval
/// recognition, end alignment, realization, flip.
pub fn evaluate_clique(
    g: &Graph,
    k: &VertexSet,
) -> Result<std::result::Result<ArcModel, KFailure>> {
    let aux = build_aux_graph(g, k)?;
    match recognize_interval(aux.derived())? {
        IntervalOutcome::NotInterval(w) => Ok(Err(KFailure::NonInterval(w))),
        IntervalOutcome::Interval(_tree) => match check_star(&aux)? {
            StarOutcome::Witness(w) => Ok(Err(KFailure::Config(w))),
            StarOutcome::Path(path) => {
                let model = star_to_sharp(&aux, &path)?;
                let arcs = flip_to_arcs(&model, k)?;
                verify_arc_model(g, &arcs)?;
                Ok(Ok(arcs))
            }
        },
    }
}

/// The recognition front end. Universal vertices are stripped first (their
/// arcs can always be grown to near-full circles) and re-added to any model.
pub fn recognize(g: &Graph, mode: Mode) -> Result<Certificate> {
    let mut notes = Vec::new();
    let universal: VertexSet = g.vertices().filter(|&v| g.is_universal(v)).collect();
    if !universal.is_empty() {
        notes.push(format!(
            "universal vertices {} stripped before recognition",
            g.set_to_string(&universal)
        ));
    }
    let keep: VertexSet = g.vertices().filter(|v| !universal.contains(v)).collect();
    let (work, embed) = g.induced(&keep);
    if work.n() == 0 {
        // complete input
        let model = complete_graph_model(g.n());
        verify_arc_model(g, &model)?;
        return Ok(Certificate {
            verdict: Verdict::CircularArc,
            mode,
            model: Some((model, VertexSet::new())),
            failures: vec![],
            stripped_universal: universal,
            helly: false,
            notes,
        });
    }

    let dispatched = match mode {
        Mode::Auto => {
            let report = work.structure_report();
            if report.is_chordal {
                notes.push("dispatched to the chordal pipeline".into());
                Mode::Chordal
            } else if report.is_c4_free {
                notes.push("dispatched to the four-cycle-free pipeline".into());
                Mode::C4Free
            } else {
                // outside both pipelines; exhaustive fallback on tiny inputs
                let c4 = report.c4_witness.unwrap();
                notes.push(format!(
                    "out of scope: induced four-cycle ({})",
                    c4.iter()
                        .map(|&v| work.label(v))
                        .collect::<Vec<_>>()
                        .join(",")
                ));
                if work.n() <= 7 && universal.is_empty() {
                    notes.push("exhaustive circular-arrangement fallback".into());
                    return match oracle_circular_arc(&work)? {
                        Some(model) => {
                            verify_arc_model(g, &model)?;
                            Ok(Certificate {
                                verdict: Verdict::CircularArc,
                                mode,
                                model: Some((model, VertexSet::new())),
                                failures: vec![],
                                stripped_universal: universal,
                                helly: false,
                                notes,
                            })
                        }
                        None => Ok(Certificate {
                            verdict: Verdict::NotCircularArc,
                            mode,
                            model: None,
                            failures: vec![],
                            stripped_universal: universal,
                            helly: false,
                            notes,
                        }),
                    };
                }
                return Ok(Certificate {
                    verdict: Verdict::OutOfScope,
                    mode,
                    model: None,
                    failures: vec![],
                    stripped_universal: universal,
                    helly: false,
                    notes,
                });
            }
        }
        m => m,
    };

    // mode preconditions
    let report = work.structure_report();
    match dispatched {
        Mode::Chordal if !report.is_chordal => {
            let hole = report.hole_witness.unwrap();
            notes.push(format!(
                "out of scope for the chordal pipeline: hole ({})",
                hole.iter()
                    .map(|&v| work.label(v))
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            return Ok(out_of_scope(mode, universal, notes));
        }
        Mode::C4Free | Mode::Helly if !report.is_c4_free => {
            let c4 = report.c4_witness.unwrap();
            notes.push(format!(
                "out of scope: induced four-cycle ({})",
                c4.iter()
                    .map(|&v| work.label(v))
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            return Ok(out_of_scope(mode, universal, notes));
        }
        _ => {}
    }

    let candidates = match candidate_cliques(&work, dispatched) {
        Ok(c) => c,
        Err(Error::GuardExceeded { what, limit }) => {
            notes.push(format!("{what} guard exceeded at {limit}"));
            return Ok(Certificate {
                verdict: Verdict::Inconclusive,
                mode,
                model: None,
                failures: vec![],
                stripped_universal: universal,
                helly: false,
                notes,
            });
        }
        Err(e) => return Err(e),
    };

    let embed_set = |s: &VertexSet| -> VertexSet { s.iter().map(|&v| embed[v]).collect() };

    match dispatched {
        Mode::C4Free => {
            let mut failures = Vec::new();
            for k in &candidates {
                match evaluate_clique(&work, k)? {
                    Ok(model) => {
                        let full = readd_universal(g, &work, &embed, model, &universal)?;
                        return Ok(Certificate {
                            verdict: Verdict::CircularArc,
                            mode,
                            model: Some((full, embed_set(k))),
                            failures: vec![],
                            stripped_universal: universal,
                            helly: false,
                            notes,
                        });
                    }
                    Err(f) => failures.push((embed_set(k), remap_failure(f, &embed))),
                }
            }
            Ok(Certificate {
                verdict: Verdict::NotCircularArc,
                mode,
                model: None,
                failures,
                stripped_universal: universal,
                helly: false,
                notes,
            })
        }
        Mode::Chordal | Mode::Helly => {
            let helly = dispatched == Mode::Helly;
            let mut first_model = None;
            for k in &candidates {
                match evaluate_clique(&work, k)? {
                    Ok(model) => {
                        if first_model.is_none() {
                            first_model = Some((model, k.clone()));
                        }
                    }
                    Err(f) => {
                        return Ok(Certificate {
                            verdict: if helly {
                                Verdict::NotHelly
                            } else {
                                Verdict::NotCircularArc
                            },
                            mode,
                            model: None,
                            failures: vec![(embed_set(k), remap_failure(f, &embed))],
                            stripped_universal: universal,
                            helly: false,
                            notes,
                        });
                    }
                }
            }
            let (model, k) = first_model.ok_or_else(|| {
                Error::InvalidGraph("no candidate clique available".into())
            })?;
            let full = readd_universal(g, &work, &embed, model, &universal)?;
            Ok(Certificate {
                verdict: Verdict::CircularArc,
                mode,
                model: Some((full, embed_set(&k))),
                failures: vec![],
                stripped_universal: universal,
                helly,
                notes,
            })
        }
        Mode::Auto => unreachable!("auto dispatches above"),
    }
}

fn out_of_scope(mode: Mode, universal: VertexSet, notes: Vec<String>) -> Certificate {
    Certificate {
        verdict: Verdict::OutOfScope,
        mode,
        model: None,
        failures: vec![],
        stripped_universal: universal,
        helly: false,
        notes,
    }
}

fn remap_failure(f: KFailure, embed: &[usize]) -> KFailure {
    match f {
        KFailure::NonInterval(w) => KFailure::NonInterval(NonIntervalWitness {
            vertices: w.vertices.iter().map(|&v| embed[v]).collect(),
            kind: w.kind,
        }),
        KFailure::Config(w) => KFailure::Config(ConfigWitness {
            config: w.config,
            map: w.map.iter().map(|(n, &v)| (n.clone(), embed[v])).collect(),
            path: w.path.iter().map(|&v| embed[v]).collect(),
        }),
    }
}

/// Pairwise-overlapping arcs for a complete graph.
fn complete_graph_model(n: usize) -> ArcModel {
    if n == 0 {
        return ArcModel::new(1, vec![], 1).unwrap();
    }
    if n == 1 {
        return ArcModel::new(2, vec![(0, 1)], 1).unwrap();
    }
    let c = 2 * n as i64;
    let arcs = (0..n as i64).map(|i| (i, (i + n as i64) % c)).collect();
    ArcModel::new(c, arcs, 1).unwrap()
}

/// Lifts a model of the stripped graph to the full one: scale everything up
/// and give each universal vertex a near-full arc missing a private unit gap.
fn readd_universal(
    g: &Graph,
    work: &Graph,
    embed: &[usize],
    model: ArcModel,
    universal: &VertexSet,
) -> Result<ArcModel> {
    if universal.is_empty() {
        verify_arc_model(g, &model)?;
        return Ok(model);
    }
    let u = universal.len() as i64;
    let factor = u + 2;
    let c = model.circumference() * factor;
    let mut arcs = vec![(0i64, 0i64); g.n()];
    for v in 0..work.n() {
        let (s, e) = model.arc(v);
        arcs[embed[v]] = (s * factor, e * factor);
    }
    for (j, &v) in universal.iter().enumerate() {
        let j = j as i64;
        arcs[v] = (j + 1, j);
    }
    let full = ArcModel::new(c, arcs, model.scale() * factor)?;
    verify_arc_model(g, &full)?;
    Ok(full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ConfigId;
    use crate::fixtures;
    use crate::obstruction::WitnessKind;

    #[test]
    fn sun3_chordal_pipeline() {
        let cert = recognize(&fixtures::sun3(), Mode::Chordal).unwrap();
        assert_eq!(cert.verdict, Verdict::CircularArc);
        assert!(cert.model.is_some());
    }

    #[test]
    fn sun3_candidates() {
        let g = fixtures::sun3();
        let ks = candidate_cliques(&g, Mode::Chordal).unwrap();
        let want: Vec<VertexSet> = vec![
            VertexSet::from([0, 1, 5]),
            VertexSet::from([1, 2, 3]),
            VertexSet::from([3, 4, 5]),
        ];
        assert_eq!(ks, want);
        assert_eq!(candidate_cliques(&g, Mode::Helly).unwrap().len(), 4);
    }

    #[test]
    fn p4_all_cliques() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // 4 vertices + 3 edges + the empty clique
        assert_eq!(candidate_cliques(&g, Mode::C4Free).unwrap().len(), 8);
    }

    #[test]
    fn gd_auto_fallback() {
        let cert = recognize(&fixtures::gd(), Mode::Auto).unwrap();
        assert_eq!(cert.verdict, Verdict::NotCircularArc);
        assert!(cert
            .notes
            .iter()
            .any(|n| n.contains("four-cycle")));
    }

    #[test]
    fn helly_fixtures() {
        let sun = recognize(&fixtures::sun3(), Mode::Helly).unwrap();
        assert_eq!(sun.verdict, Verdict::CircularArc);
        assert!(sun.helly);

        let net = fixtures::sun_complement(3);
        let cert = recognize(&net, Mode::Helly).unwrap();
        assert_eq!(cert.verdict, Verdict::NotHelly);
        let (k, f) = &cert.failures[0];
        // the failing clique is the triangle of high-degree vertices
        assert!(k.iter().all(|&v| net.degree(v) == 3));
        match f {
            KFailure::NonInterval(w) => {
                assert_eq!(w.kind, WitnessKind::DoubleDagger);
                assert_eq!(w.vertices.len(), 6);
            }
            other => panic!("expected a non-interval witness, got {other:?}"),
        }

        let c4free = recognize(&net, Mode::C4Free).unwrap();
        assert_eq!(c4free.verdict, Verdict::CircularArc);

        let oct = recognize(&fixtures::octahedron(), Mode::Helly).unwrap();
        assert_eq!(oct.verdict, Verdict::OutOfScope);
        assert!(oct.notes.iter().any(|n| n.contains("four-cycle")));
    }

    #[test]
    fn long_claw_not_circular_arc() {
        let cert = recognize(&fixtures::long_claw(), Mode::Chordal).unwrap();
        assert_eq!(cert.verdict, Verdict::NotCircularArc);
        let (_, f) = &cert.failures[0];
        assert!(matches!(
            f,
            KFailure::Config(w) if w.config == ConfigId::Claw
        ));
    }

    #[test]
    fn universal_vertices_handled() {
        // a wheel-ish graph: hub adjacent to everything on a path
        let g = Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        )
        .unwrap();
        let cert = recognize(&g, Mode::Auto).unwrap();
        assert_eq!(cert.verdict, Verdict::CircularArc);
        assert_eq!(cert.stripped_universal, VertexSet::from([4]));
        let (m, _) = cert.model.as_ref().unwrap();
        verify_arc_model(&g, m).unwrap();
    }

    #[test]
    fn complete_graph() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cert = recognize(&g, Mode::Auto).unwrap();
        assert_eq!(cert.verdict, Verdict::CircularArc);
    }

    #[test]
    fn certificate_json() {
        let g = fixtures::sun3();
        let cert = recognize(&g, Mode::Chordal).unwrap();
        let j = cert.to_json(&g);
        assert_eq!(j["verdict"], "CIRCULAR_ARC");
        assert!(j["model"]["arcs"].is_object());
    }
}
