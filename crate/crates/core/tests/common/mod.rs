//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use neutromaps::cognitive::CognitiveMap;
use neutromaps::dynamics::StateVector;
use neutromaps::mapfile::{ComponentBlock, EdgeDecl, EdgeOp, MapDocument, MapKind, Scenario};
use neutromaps::neutro::{NeutroValue, NodeState, ThresholdMode, ThresholdPolicy};
use neutromaps::ngraph::{Edge, Graph, NGraph};
use neutromaps::nmatrix::{DecimalValue, Matrix, NMatrix};
use neutromaps::relational::{RelationalMap, Side};

#[allow(unused_imports)]
pub use rand::SeedableRng;
pub type Rng64 = ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).expect("fixture exists")
}

pub fn doc(name: &str) -> MapDocument {
    neutromaps::mapfile::parse(&read_fixture(name)).expect("fixture parses")
}

pub fn bits(s: &str) -> StateVector {
    StateVector(
        s.split('∪')
            .map(|c| c.split_whitespace().map(|t| t.parse::<NodeState>().unwrap()).collect())
            .collect(),
    )
}

const POOL: [&str; 10] = ["v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"];

/// One random component on 2..=8 vertices drawn from a shared pool, so
/// components overlap often.
pub fn random_graph(rng: &mut Rng64, directed: bool) -> Graph {
    let n = rng.gen_range(2..=8);
    let mut verts: Vec<&str> = POOL.to_vec();
    verts.shuffle(rng);
    verts.truncate(n);
    let density = rng.gen_range(0.1..0.7);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || (!directed && j < i) || !rng.gen_bool(density) {
                continue;
            }
            let mut e = if directed {
                if edges.iter().any(|e: &Edge| e.from == verts[j] && e.to == verts[i]) {
                    continue;
                }
                Edge::directed(verts[i], verts[j])
            } else {
                Edge::undirected(verts[i], verts[j])
            };
            if rng.gen_bool(0.3) {
                e = e.indeterminate();
            }
            edges.push(e);
        }
    }
    Graph::new(verts, edges).expect("generated graph is simple")
}

/// A random n-graph with `k` components; retries until the components are
/// distinct.
pub fn random_ngraph(rng: &mut Rng64, k: usize, directed: bool) -> NGraph {
    loop {
        let comps = (0..k).map(|_| random_graph(rng, directed)).collect();
        if let Ok(g) = NGraph::new(comps) {
            return g;
        }
    }
}

pub fn random_weight(rng: &mut Rng64) -> NeutroValue {
    *[
        NeutroValue::NEG_ONE,
        NeutroValue::ZERO,
        NeutroValue::ZERO,
        NeutroValue::ONE,
        NeutroValue::I,
    ]
    .choose(rng)
    .unwrap()
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn random_policy(rng: &mut Rng64) -> ThresholdPolicy {
    let mode = if rng.gen_bool(0.5) {
        ThresholdMode::RealDominant
    } else {
        ThresholdMode::IndetDominant
    };
    ThresholdPolicy::new(rng.gen_range(1..=2), mode).unwrap()
}

pub fn random_cognitive(rng: &mut Rng64) -> CognitiveMap {
    let k = rng.gen_range(1..=3);
    let mut comps = Vec::new();
    let mut names = Vec::new();
    for c in 0..k {
        let n = rng.gen_range(1..=6);
        comps.push(Matrix::from_fn(n, n, |i, j| {
            if i == j {
                NeutroValue::ZERO
            } else {
                random_weight(rng)
            }
        }));
        names.push(labels(&format!("C{c}_"), n));
    }
    CognitiveMap::new(NMatrix::new(comps).unwrap(), names).unwrap()
}

pub fn random_relational(rng: &mut Rng64) -> RelationalMap {
    let k = rng.gen_range(1..=3);
    let mut comps = Vec::new();
    let (mut dom, mut ran) = (Vec::new(), Vec::new());
    for c in 0..k {
        let (n, m) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        comps.push(Matrix::from_fn(n, m, |_, _| random_weight(rng)));
        dom.push(labels(&format!("D{c}_"), n));
        ran.push(labels(&format!("R{c}_"), m));
    }
    RelationalMap::new(NMatrix::new(comps).unwrap(), dom, ran).unwrap()
}

pub fn random_binary(rng: &mut Rng64, lengths: &[usize]) -> StateVector {
    StateVector(
        lengths
            .iter()
            .map(|&n| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            NodeState::On
                        } else {
                            NodeState::Off
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

const LABELS: [&str; 12] = [
    "A", "B", "C1", "x'", "node_2", "Δ", "a-b", "nodes", "on", "v1'", "E9", "z.z",
];
const NAMES: [&str; 6] = ["expert 1", "say \"hi\"", "back\\slash", "Ω", "", "x"];
const DECIMALS: [&str; 8] = [".3", "-.6", ".2I", "1", "I", "0", "2+I", "1.5-.5I"];

fn pick_labels(rng: &mut Rng64, n: usize) -> Vec<String> {
    let mut v: Vec<String> = LABELS.iter().map(|s| s.to_string()).collect();
    v.shuffle(rng);
    v.truncate(n);
    v
}

fn maybe_weight(rng: &mut Rng64) -> Option<NeutroValue> {
    match rng.gen_range(0..4) {
        0 => None,
        1 => Some(NeutroValue::I),
        2 => Some(NeutroValue::new(rng.gen_range(-3..=3), rng.gen_range(-2..=2))),
        _ => Some(NeutroValue::NEG_ONE),
    }
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

/// A valid document in canonical form: sorted node lists and sorted
/// scenario on-sets.
pub fn random_document(rng: &mut Rng64) -> MapDocument {
    let kind = *[MapKind::Cognitive, MapKind::Relational, MapKind::Graph]
        .choose(rng)
        .unwrap();
    let k = rng.gen_range(1..=3);
    let mut components = Vec::new();
    for _ in 0..k {
        let n = rng.gen_range(2..=LABELS.len());
        let all = pick_labels(rng, n);
        let mut block = ComponentBlock {
            name: NAMES.choose(rng).unwrap().to_string(),
            ..ComponentBlock::default()
        };
        let mut edges = Vec::new();
        if kind == MapKind::Relational {
            let split = rng.gen_range(1..n);
            let (d, r) = all.split_at(split);
            for a in d {
                for b in r {
                    if rng.gen_bool(0.4) {
                        let (from, to) = if rng.gen_bool(0.8) { (a, b) } else { (b, a) };
                        let op = *[EdgeOp::Directed, EdgeOp::Undirected, EdgeOp::Indeterminate]
                            .choose(rng)
                            .unwrap();
                        edges.push(EdgeDecl {
                            from: from.clone(),
                            to: to.clone(),
                            op,
                            weight: maybe_weight(rng),
                        });
                    }
                }
            }
            block.domain = sorted(d.to_vec());
            block.range = sorted(r.to_vec());
        } else {
            for i in 0..n {
                for j in 0..n {
                    if i == j || !rng.gen_bool(0.25) {
                        continue;
                    }
                    let op = if kind == MapKind::Cognitive {
                        EdgeOp::Directed
                    } else {
                        *[EdgeOp::Directed, EdgeOp::Undirected, EdgeOp::Indeterminate]
                            .choose(rng)
                            .unwrap()
                    };
                    let clash = edges.iter().any(|e: &EdgeDecl| {
                        let same = e.from == all[i] && e.to == all[j];
                        let rev = e.from == all[j] && e.to == all[i];
                        same || (rev && (op != EdgeOp::Directed || e.op != EdgeOp::Directed))
                    });
                    if !clash {
                        edges.push(EdgeDecl {
                            from: all[i].clone(),
                            to: all[j].clone(),
                            op,
                            weight: maybe_weight(rng),
                        });
                    }
                }
            }
            block.nodes = sorted(all.clone());
        }
        if rng.gen_bool(0.5) {
            let mut order = all.clone();
            order.shuffle(rng);
            block.order = Some(order);
        }
        block.edges = edges;
        components.push(block);
    }
    let scenarios = (0..rng.gen_range(0..=3))
        .map(|s| {
            let side =
                (kind == MapKind::Relational).then(|| if rng.gen_bool(0.5) { Side::Domain } else { Side::Range });
            let on = components
                .iter()
                .map(|c| {
                    let pool: &[String] = match side {
                        Some(Side::Domain) => &c.domain,
                        Some(Side::Range) => &c.range,
                        None => &c.nodes,
                    };
                    sorted(pool.iter().filter(|_| rng.gen_bool(0.3)).cloned().collect())
                })
                .collect();
            Scenario {
                name: format!("{} {s}", NAMES.choose(rng).unwrap()),
                side,
                on,
            }
        })
        .collect();
    let matrix = (kind == MapKind::Graph && rng.gen_bool(0.5)).then(|| {
        let comps = (0..rng.gen_range(1..=3))
            .map(|_| {
                let (r, c) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
                (0..r)
                    .map(|_| {
                        (0..c)
                            .map(|_| DECIMALS.choose(rng).unwrap().parse::<DecimalValue>().unwrap())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        NMatrix::from_rows(comps).unwrap()
    });
    MapDocument {
        kind,
        policy: random_policy(rng),
        scenarios,
        components,
        matrix,
    }
}
