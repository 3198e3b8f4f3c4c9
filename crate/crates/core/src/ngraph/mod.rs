//! Graphs and n-graphs over a shared vertex-label namespace. Two components
//! share a vertex exactly when they use the same label.

mod matrices;
mod taxonomy;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::neutro::NeutroValue;

pub use matrices::Weight;
pub use taxonomy::{BipartiteReport, GluingClass, GluingVerdict, NeutroGraphClass, PartitionReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {from} -> {to} is a self-loop")]
    SelfLoop { from: String, to: String },
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownVertex(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("edge {from} -> {to} duplicates an earlier edge")]
    DuplicateEdge { from: String, to: String },
    #[error("vertex ordering must list every vertex exactly once")]
    BadOrdering,
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("an n-graph needs at least one component")]
    NoComponents,
    #[error("components {} and {} are not distinct (one is a subgraph of the other with the same edges)", .0 + 1, .1 + 1)]
    NotDistinct(usize, usize),
    /// `component` is zero-based; the message counts from 1.
    #[error("component {}: {message}", component + 1)]
    Precondition { component: usize, message: String },
    #[error("{0}")]
    Domain(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    #[default]
    Determinate,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    #[serde(default)]
    pub kind: EdgeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<NeutroValue>,
    #[serde(default)]
    pub directed: bool,
}

/// Identity of an edge for set comparisons: endpoints (sorted when
/// undirected), kind and direction. Weights are not part of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct EdgeKey {
    directed: bool,
    kind: EdgeKind,
    a: String,
    b: String,
}

impl Edge {
    pub fn undirected(u: impl Into<String>, v: impl Into<String>) -> Self {
        Self {
            from: u.into(),
            to: v.into(),
            kind: EdgeKind::Determinate,
            weight: None,
            directed: false,
        }
    }

    pub fn directed(u: impl Into<String>, v: impl Into<String>) -> Self {
        Self {
            directed: true,
            ..Self::undirected(u, v)
        }
    }

    pub fn indeterminate(mut self) -> Self {
        self.kind = EdgeKind::Indeterminate;
        self
    }

    pub fn weighted(mut self, w: NeutroValue) -> Self {
        self.weight = Some(w);
        self
    }

    pub fn is_indeterminate(&self) -> bool {
        self.kind == EdgeKind::Indeterminate
    }

    pub fn touches(&self, v: &str) -> bool {
        self.from == v || self.to == v
    }

    /// The weight used when the edge feeds a map: the declared weight, or
    /// `1` / `I` by kind.
    pub fn effective_weight(&self) -> NeutroValue {
        self.weight.unwrap_or(match self.kind {
            EdgeKind::Determinate => NeutroValue::ONE,
            EdgeKind::Indeterminate => NeutroValue::I,
        })
    }

    pub(crate) fn key(&self) -> EdgeKey {
        let (a, b) = if !self.directed && self.to < self.from {
            (self.to.clone(), self.from.clone())
        } else {
            (self.from.clone(), self.to.clone())
        };
        EdgeKey {
            directed: self.directed,
            kind: self.kind,
            a,
            b,
        }
    }

    /// Adjacency cells `(from, to)` this edge occupies.
    fn cells(&self) -> Vec<(&str, &str)> {
        if self.directed {
            vec![(&self.from, &self.to)]
        } else {
            vec![(&self.from, &self.to), (&self.to, &self.from)]
        }
    }
}

/// One component graph. Edges keep their declaration order, which is the
/// column order of the incidence matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    vertices: BTreeSet<String>,
    order: Option<Vec<String>>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<Vec<String>>,
    #[serde(default)]
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        let g = Graph::new(raw.vertices, raw.edges)?;
        match raw.order {
            Some(o) => g.with_order(o),
            None => Ok(g),
        }
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            vertices: g.vertices.into_iter().collect(),
            order: g.order,
            edges: g.edges,
        }
    }
}

impl Graph {
    pub fn new<S: Into<String>>(vertices: impl IntoIterator<Item = S>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for v in vertices {
            let v = v.into();
            if !set.insert(v.clone()) {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        if set.is_empty() {
            return Err(GraphError::NoVertices);
        }
        let mut cells = BTreeSet::new();
        for e in &edges {
            for end in [&e.from, &e.to] {
                if !set.contains(end) {
                    return Err(GraphError::UnknownVertex(end.clone()));
                }
            }
            if e.from == e.to {
                return Err(GraphError::SelfLoop {
                    from: e.from.clone(),
                    to: e.to.clone(),
                });
            }
            for cell in e.cells() {
                if !cells.insert(cell) {
                    return Err(GraphError::DuplicateEdge {
                        from: e.from.clone(),
                        to: e.to.clone(),
                    });
                }
            }
        }
        Ok(Self {
            vertices: set,
            order: None,
            edges,
        })
    }

    /// Fixes the vertex order used by matrix extraction.
    pub fn with_order<S: Into<String>>(mut self, order: impl IntoIterator<Item = S>) -> Result<Self, GraphError> {
        let order: Vec<String> = order.into_iter().map(Into::into).collect();
        let as_set: BTreeSet<&String> = order.iter().collect();
        if order.len() != self.vertices.len() || as_set.len() != order.len() {
            return Err(GraphError::BadOrdering);
        }
        if !order.iter().all(|v| self.vertices.contains(v)) {
            return Err(GraphError::BadOrdering);
        }
        self.order = Some(order);
        Ok(self)
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn explicit_order(&self) -> Option<&[String]> {
        self.order.as_deref()
    }

    /// Matrix row/column order: the explicit ordering if one was given,
    /// otherwise lexicographic.
    pub fn ordering(&self) -> Vec<String> {
        match &self.order {
            Some(o) => o.clone(),
            None => self.vertices.iter().cloned().collect(),
        }
    }

    pub(crate) fn index(&self) -> BTreeMap<String, usize> {
        self.ordering().into_iter().enumerate().map(|(i, v)| (v, i)).collect()
    }

    pub fn order_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_neutrosophic(&self) -> bool {
        self.edges.iter().any(Edge::is_indeterminate)
    }

    pub fn is_directed(&self) -> bool {
        self.edges.iter().all(|e| e.directed)
    }

    pub fn is_undirected(&self) -> bool {
        self.edges.iter().all(|e| !e.directed)
    }

    /// Number of edges incident to `v`, direction ignored.
    pub fn degree(&self, v: &str) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub(crate) fn edge_keys(&self) -> BTreeSet<EdgeKey> {
        self.edges.iter().map(Edge::key).collect()
    }

    /// Shared vertices, plus edges present in both with the same endpoints,
    /// kind and direction. Edge data is taken from `self`.
    pub fn common_subgraph(&self, other: &Graph) -> CommonSubgraph {
        let vertices: BTreeSet<String> = self.vertices.intersection(&other.vertices).cloned().collect();
        let theirs = other.edge_keys();
        let edges = self
            .edges
            .iter()
            .filter(|e| theirs.contains(&e.key()))
            .cloned()
            .collect();
        CommonSubgraph { vertices, edges }
    }

    /// Complement over this graph's own vertex set.
    pub fn complement(&self) -> Result<Graph, GraphError> {
        if self.edges.iter().any(|e| e.directed || e.is_indeterminate()) {
            return Err(GraphError::Precondition {
                component: 0,
                message: "complement needs undirected determinate edges".into(),
            });
        }
        let present: BTreeSet<EdgeKey> = self.edge_keys();
        let order = self.ordering();
        let mut edges = Vec::new();
        for (i, u) in order.iter().enumerate() {
            for v in &order[i + 1..] {
                let e = Edge::undirected(u.clone(), v.clone());
                if !present.contains(&e.key()) {
                    edges.push(e);
                }
            }
        }
        Ok(Graph {
            vertices: self.vertices.clone(),
            order: self.order.clone(),
            edges,
        })
    }

    /// Number of connected components, direction ignored.
    pub fn component_count(&self) -> usize {
        count_components(&self.vertices, &self.edges)
    }

    /// DOT text for this graph; indeterminate edges are dashed.
    pub fn to_dot(&self, name: &str) -> String {
        let directed = self.is_directed() && !self.edges.is_empty();
        let (keyword, arrow) = if directed { ("digraph", "->") } else { ("graph", "--") };
        let mut out = format!("{keyword} \"{}\" {{\n", escape(name));
        for v in self.ordering() {
            let _ = writeln!(out, "  \"{}\";", escape(&v));
        }
        for e in &self.edges {
            let mut attrs = Vec::new();
            if e.is_indeterminate() {
                attrs.push("style=dashed".to_string());
            }
            if let Some(w) = e.weight {
                attrs.push(format!("label=\"{w}\""));
            }
            if directed != e.directed {
                attrs.push(format!("dir={}", if e.directed { "forward" } else { "none" }));
            }
            let attrs = if attrs.is_empty() {
                String::new()
            } else {
                format!(" [{}]", attrs.join(", "))
            };
            let _ = writeln!(out, "  \"{}\" {arrow} \"{}\"{attrs};", escape(&e.from), escape(&e.to));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub(crate) fn count_components(vertices: &BTreeSet<String>, edges: &[Edge]) -> usize {
    let idx: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    let mut count = vertices.len();
    for e in edges {
        let (Some(&a), Some(&b)) = (idx.get(e.from.as_str()), idx.get(e.to.as_str())) else {
            continue;
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// The intersection of two component graphs. It may have no vertices, so it
/// is not a [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonSubgraph {
    pub vertices: BTreeSet<String>,
    pub edges: Vec<Edge>,
}

/// An ordered sequence of component graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Graph>", into = "Vec<Graph>")]
pub struct NGraph {
    components: Vec<Graph>,
}

impl TryFrom<Vec<Graph>> for NGraph {
    type Error = GraphError;
    fn try_from(c: Vec<Graph>) -> Result<Self, Self::Error> {
        NGraph::new(c)
    }
}

impl From<NGraph> for Vec<Graph> {
    fn from(g: NGraph) -> Self {
        g.components
    }
}

impl NGraph {
    /// For `k >= 2`, rejects a pair where one vertex set contains the other
    /// and the edge sets coincide.
    pub fn new(components: Vec<Graph>) -> Result<Self, GraphError> {
        if components.is_empty() {
            return Err(GraphError::NoComponents);
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                let (a, b) = (&components[i], &components[j]);
                let nested = a.vertices.is_subset(&b.vertices) || b.vertices.is_subset(&a.vertices);
                if nested && a.edge_keys() == b.edge_keys() {
                    return Err(GraphError::NotDistinct(i, j));
                }
            }
        }
        Ok(Self { components })
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Graph] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Graph {
        &self.components[i]
    }

    pub fn vertex_union(&self) -> BTreeSet<String> {
        self.components
            .iter()
            .flat_map(|g| g.vertices.iter().cloned())
            .collect()
    }

    /// All edges of all components, deduplicated by identity.
    pub fn union_edges(&self) -> Vec<Edge> {
        let mut seen = BTreeSet::new();
        self.components
            .iter()
            .flat_map(|g| g.edges.iter())
            .filter(|e| seen.insert(e.key()))
            .cloned()
            .collect()
    }

    /// Connected components of the union graph with `removed` deleted.
    pub fn union_component_count_without(&self, removed: &str) -> usize {
        let mut vertices = self.vertex_union();
        vertices.remove(removed);
        let edges: Vec<Edge> = self.union_edges().into_iter().filter(|e| !e.touches(removed)).collect();
        count_components(&vertices, &edges)
    }

    pub fn complement(&self) -> Result<NGraph, GraphError> {
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(c, g)| {
                g.complement().map_err(|e| match e {
                    GraphError::Precondition { message, .. } => GraphError::Precondition { component: c, message },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        NGraph::new(comps)
    }

    pub fn to_dot(&self) -> String {
        self.components
            .iter()
            .enumerate()
            .map(|(i, g)| g.to_dot(&format!("G{}", i + 1)))
            .collect()
    }
}
