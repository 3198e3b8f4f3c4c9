//! The `.nmap` text format: one file per n-graph or map, with every
//! component, scenario and the threshold policy.
//!
//! ```text
//! # a cognitive bimap
//! kind cognitive
//! policy k=1 mode=real
//! scenario "start"
//!
//! [component "expert 1"]
//! nodes C1 C2 C3
//! order C1 C2 C3
//! C1 -> C2
//! C2 -> C3 : -1
//! C3 -> C1 : I
//! on "start" C1
//!
//! [component "expert 2"]
//! nodes E1 E2
//! E1 -> E2
//! on "start" E2
//! ```
//!
//! Relational documents use `domain` and `range` lines instead of `nodes`
//! and declare a side on each scenario (`scenario "s" range`). Graph
//! documents accept `--` (undirected) and `~~` (indeterminate undirected)
//! edges and an optional `[matrix]` block of literal rows, components
//! separated by `---`, whose entries may be decimals such as `.3` or `.2I`.

mod parse;
mod serialize;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cognitive::CognitiveMap;
use crate::dynamics::{MapError, StateVector};
use crate::neutro::{NeutroValue, NodeState, ThresholdPolicy};
use crate::ngraph::{Edge, EdgeKind, Graph, GraphError, NGraph};
use crate::nmatrix::{DecimalValue, NMatrix};
use crate::relational::{RelationalMap, RelationalState, Side};

pub use parse::parse;
pub use serialize::serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Cognitive,
    Relational,
    Graph,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapKind::Cognitive => "cognitive",
            MapKind::Relational => "relational",
            MapKind::Graph => "graph",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeOp {
    /// `A -> B`
    Directed,
    /// `A -- B`
    Undirected,
    /// `A ~~ B`
    Indeterminate,
}

impl EdgeOp {
    pub fn symbol(self) -> &'static str {
        match self {
            EdgeOp::Directed => "->",
            EdgeOp::Undirected => "--",
            EdgeOp::Indeterminate => "~~",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeDecl {
    pub from: String,
    pub to: String,
    pub op: EdgeOp,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<NeutroValue>,
}

impl EdgeDecl {
    /// `~~` edges, and edges whose weight has an `I` part, are
    /// indeterminate.
    pub fn to_edge(&self) -> Edge {
        let indeterminate = self.op == EdgeOp::Indeterminate || self.weight.is_some_and(|w| w.is_indeterminate());
        Edge {
            from: self.from.clone(),
            to: self.to.clone(),
            kind: if indeterminate {
                EdgeKind::Indeterminate
            } else {
                EdgeKind::Determinate
            },
            weight: self.weight,
            directed: self.op == EdgeOp::Directed,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBlock {
    pub name: String,
    /// Sorted; used by cognitive and graph documents.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nodes: Vec<String>,
    /// Sorted; used by relational documents.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub domain: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub range: Vec<String>,
    /// Explicit vertex order for matrix extraction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    #[serde(default)]
    pub edges: Vec<EdgeDecl>,
}

impl ComponentBlock {
    pub fn labels(&self) -> impl Iterator<Item = &String> {
        self.nodes.iter().chain(&self.domain).chain(&self.range)
    }

    /// The explicit order, or lexicographic order of every label.
    pub fn ordering(&self) -> Vec<String> {
        match &self.order {
            Some(o) => o.clone(),
            None => {
                let mut all: Vec<String> = self.labels().cloned().collect();
                all.sort();
                all
            }
        }
    }

    fn side_ordering(&self, side: &[String]) -> Vec<String> {
        self.ordering().into_iter().filter(|l| side.contains(l)).collect()
    }

    pub fn domain_ordering(&self) -> Vec<String> {
        self.side_ordering(&self.domain)
    }

    pub fn range_ordering(&self) -> Vec<String> {
        self.side_ordering(&self.range)
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let g = Graph::new(
            self.labels().cloned(),
            self.edges.iter().map(EdgeDecl::to_edge).collect(),
        )?;
        match &self.order {
            Some(o) => g.with_order(o.iter().cloned()),
            None => Ok(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    /// Start side; relational documents only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    /// Sorted on-labels per component.
    pub on: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDocument {
    pub kind: MapKind,
    #[serde(default)]
    pub policy: ThresholdPolicy,
    #[serde(default)]
    pub scenarios: Vec<Scenario>,
    #[serde(default)]
    pub components: Vec<ComponentBlock>,
    /// Literal n-matrix for classification; graph documents only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<NMatrix<DecimalValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("this operation needs a {expected} document, but the document is {found}")]
    WrongKind { expected: MapKind, found: MapKind },
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("label `{0}` does not name a node in any component")]
    UnresolvedLabel(String),
    #[error("component index in `{0}` is out of range")]
    BadComponent(String),
    #[error("scenario mixes domain and range labels")]
    MixedSides,
    #[error("the document has no components")]
    NoComponents,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a run picks its initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScenarioSpec {
    Named(String),
    /// Labels switched on. A bare label applies to every component that
    /// has it; `2:C1` restricts it to component 2 (1-based).
    Labels(Vec<String>),
}

/// A resolved initial state, with its side for relational documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialState {
    Cognitive(StateVector),
    Relational(RelationalState),
}

impl MapDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialise")
    }

    /// Reads the JSON mirror. The result is checked by the same rules as
    /// the text format.
    pub fn from_json(text: &str) -> Result<MapDocument, Diagnostics> {
        let doc: MapDocument = serde_json::from_str(text).map_err(|e| {
            Diagnostics(vec![Diagnostic {
                line: e.line(),
                column: e.column(),
                message: format!("invalid JSON document: {e}"),
            }])
        })?;
        parse(&serialize(&doc))
    }

    /// A document holding `map`, one `[component]` per matrix component
    /// with the given names. Unit weights are written without `: 1`.
    pub fn from_cognitive_map(map: &CognitiveMap, names: &[String]) -> MapDocument {
        let components = map
            .matrix()
            .components()
            .iter()
            .zip(map.labels())
            .enumerate()
            .map(|(c, (m, labels))| {
                let mut nodes = labels.clone();
                nodes.sort();
                ComponentBlock {
                    name: component_name(names, c),
                    nodes,
                    order: Some(labels.clone()),
                    edges: matrix_edges(m, labels, labels),
                    ..ComponentBlock::default()
                }
            })
            .collect();
        MapDocument {
            kind: MapKind::Cognitive,
            policy: ThresholdPolicy::default(),
            scenarios: vec![],
            components,
            matrix: None,
        }
    }

    pub fn from_relational_map(map: &RelationalMap, names: &[String]) -> MapDocument {
        let components = map
            .matrix()
            .components()
            .iter()
            .zip(map.domain_labels().iter().zip(map.range_labels()))
            .enumerate()
            .map(|(c, (m, (dom, ran)))| {
                let (mut domain, mut range) = (dom.clone(), ran.clone());
                domain.sort();
                range.sort();
                ComponentBlock {
                    name: component_name(names, c),
                    domain,
                    range,
                    order: Some(dom.iter().chain(ran).cloned().collect()),
                    edges: matrix_edges(m, dom, ran),
                    ..ComponentBlock::default()
                }
            })
            .collect();
        MapDocument {
            kind: MapKind::Relational,
            policy: ThresholdPolicy::default(),
            scenarios: vec![],
            components,
            matrix: None,
        }
    }

    pub fn to_ngraph(&self) -> Result<NGraph, DocError> {
        Ok(NGraph::new(self.graphs()?)?)
    }

    fn graphs(&self) -> Result<Vec<Graph>, DocError> {
        if self.components.is_empty() {
            return Err(DocError::NoComponents);
        }
        Ok(self
            .components
            .iter()
            .map(ComponentBlock::to_graph)
            .collect::<Result<Vec<_>, _>>()?)
    }

    fn require(&self, kind: MapKind) -> Result<(), DocError> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(DocError::WrongKind {
                expected: kind,
                found: self.kind,
            })
        }
    }

    pub fn to_cognitive_map(&self) -> Result<CognitiveMap, DocError> {
        self.require(MapKind::Cognitive)?;
        Ok(CognitiveMap::from_graphs(&self.graphs()?)?)
    }

    pub fn to_relational_map(&self) -> Result<RelationalMap, DocError> {
        self.require(MapKind::Relational)?;
        let parts: Vec<(Vec<String>, Vec<String>)> = self
            .components
            .iter()
            .map(|c| (c.domain_ordering(), c.range_ordering()))
            .collect();
        Ok(RelationalMap::from_graphs(&self.graphs()?, &parts)?)
    }

    /// The matrix `export-matrix` prints: the connection matrix of a map,
    /// or the adjacency n-matrix of a graph document.
    pub fn primary_matrix(&self) -> Result<NMatrix, DocError> {
        match self.kind {
            MapKind::Cognitive => Ok(self.to_cognitive_map()?.matrix().clone()),
            MapKind::Relational => Ok(self.to_relational_map()?.matrix().clone()),
            MapKind::Graph => Ok(self.to_ngraph()?.adjacency_nmatrix()),
        }
    }

    pub fn scenario(&self, name: &str) -> Option<&Scenario> {
        self.scenarios.iter().find(|s| s.name == name)
    }

    /// Node order per component on the side a state lives on.
    fn side_orderings(&self, side: Option<Side>) -> Vec<Vec<String>> {
        self.components
            .iter()
            .map(|c| match side {
                None => c.ordering(),
                Some(Side::Domain) => c.domain_ordering(),
                Some(Side::Range) => c.range_ordering(),
            })
            .collect()
    }

    fn state_from(&self, side: Option<Side>, on: &[Vec<String>]) -> StateVector {
        StateVector(
            self.side_orderings(side)
                .iter()
                .zip(on)
                .map(|(order, on)| {
                    order
                        .iter()
                        .map(|l| if on.contains(l) { NodeState::On } else { NodeState::Off })
                        .collect()
                })
                .collect(),
        )
    }

    fn wrap(&self, side: Option<Side>, state: StateVector) -> InitialState {
        match self.kind {
            MapKind::Relational => InitialState::Relational(RelationalState {
                side: side.unwrap_or(Side::Domain),
                state,
            }),
            _ => InitialState::Cognitive(state),
        }
    }

    pub fn initial_state(&self, spec: &ScenarioSpec) -> Result<InitialState, DocError> {
        match spec {
            ScenarioSpec::Named(name) => {
                let s = self
                    .scenario(name)
                    .ok_or_else(|| DocError::UnknownScenario(name.clone()))?;
                Ok(self.wrap(s.side, self.state_from(s.side, &s.on)))
            }
            ScenarioSpec::Labels(labels) => {
                let (side, on) = self.resolve_labels(labels)?;
                Ok(self.wrap(side, self.state_from(side, &on)))
            }
        }
    }

    fn resolve_labels(&self, labels: &[String]) -> Result<(Option<Side>, Vec<Vec<String>>), DocError> {
        let k = self.components.len();
        let mut on: Vec<Vec<String>> = vec![Vec::new(); k];
        let mut sides: BTreeMap<Side, ()> = BTreeMap::new();
        for raw in labels {
            let (targets, label): (Vec<usize>, &str) = match raw.split_once(':') {
                Some((idx, label)) if idx.parse::<usize>().is_ok() => {
                    let i: usize = idx.parse().expect("checked");
                    if i == 0 || i > k {
                        return Err(DocError::BadComponent(raw.clone()));
                    }
                    (vec![i - 1], label)
                }
                _ => ((0..k).collect(), raw.as_str()),
            };
            let mut found = false;
            for c in targets {
                let block = &self.components[c];
                let side = if block.domain.iter().any(|l| l == label) {
                    Some(Side::Domain)
                } else if block.range.iter().any(|l| l == label) {
                    Some(Side::Range)
                } else if block.nodes.iter().any(|l| l == label) {
                    None
                } else {
                    continue;
                };
                if let Some(s) = side {
                    sides.insert(s, ());
                }
                found = true;
                on[c].push(label.to_string());
            }
            if !found {
                return Err(DocError::UnresolvedLabel(raw.clone()));
            }
        }
        if sides.len() > 1 {
            return Err(DocError::MixedSides);
        }
        let side = match self.kind {
            MapKind::Relational => Some(sides.into_keys().next().unwrap_or(Side::Domain)),
            _ => None,
        };
        Ok((side, on))
    }
}

fn component_name(names: &[String], c: usize) -> String {
    names.get(c).cloned().unwrap_or_else(|| format!("component {}", c + 1))
}

fn matrix_edges(m: &crate::nmatrix::Matrix, rows: &[String], cols: &[String]) -> Vec<EdgeDecl> {
    let mut edges = Vec::new();
    for (i, from) in rows.iter().enumerate() {
        for (j, to) in cols.iter().enumerate() {
            let w = *m.get(i, j);
            if w.is_zero() {
                continue;
            }
            edges.push(EdgeDecl {
                from: from.clone(),
                to: to.clone(),
                op: EdgeOp::Directed,
                weight: (w != NeutroValue::ONE).then_some(w),
            });
        }
    }
    edges
}

#[cfg(test)]
mod tests;
