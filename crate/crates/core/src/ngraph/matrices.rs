use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Edge, EdgeKind, Graph, GraphError, NGraph};
use crate::neutro::{NeutroValue, ParseValueError};
use crate::nmatrix::{Matrix, NMatrix};

/// A weighted-matrix cell: a weight, or absent (printed `∞`) when the
/// vertices are not adjacent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Option<NeutroValue>);

impl Weight {
    pub const ABSENT: Weight = Weight(None);
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("∞"),
        }
    }
}

impl FromStr for Weight {
    type Err = ParseValueError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "∞" || s == "inf" {
            Ok(Weight::ABSENT)
        } else {
            s.parse().map(|v| Weight(Some(v)))
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn labelled<T>(m: Matrix<T>, rows: Vec<String>, cols: Option<Vec<String>>) -> Matrix<T> {
    m.with_labels(Some(rows), cols)
        .expect("label lengths match by construction")
}

fn adjacency_of(g: &Graph) -> Matrix<NeutroValue> {
    let idx = g.index();
    let n = g.order_count();
    let mut cells = vec![NeutroValue::ZERO; n * n];
    for e in &g.edges {
        let v = match e.kind {
            EdgeKind::Determinate => NeutroValue::ONE,
            EdgeKind::Indeterminate => NeutroValue::I,
        };
        for (a, b) in e.cells() {
            cells[idx[a] * n + idx[b]] = v;
        }
    }
    let order = g.ordering();
    labelled(
        Matrix::from_fn(n, n, |i, j| cells[i * n + j]),
        order.clone(),
        Some(order),
    )
}

impl Graph {
    /// 0/1 adjacency with `I` for indeterminate edges; directed edges fill
    /// only their own cell.
    pub fn adjacency(&self) -> Matrix<NeutroValue> {
        adjacency_of(self)
    }

    /// Vertices by edges (declaration order), 1 where the vertex is an
    /// endpoint.
    pub fn incidence(&self) -> Matrix<NeutroValue> {
        let order = self.ordering();
        if self.edges.is_empty() {
            return labelled(Matrix::without_columns(order.len()), order, Some(Vec::new()));
        }
        let m = Matrix::from_fn(order.len(), self.edges.len(), |i, j| {
            if self.edges[j].touches(&order[i]) {
                NeutroValue::ONE
            } else {
                NeutroValue::ZERO
            }
        });
        let names = (1..=self.edges.len()).map(|j| format!("e{j}")).collect();
        labelled(m, order, Some(names))
    }

    pub fn weighted(&self) -> Result<Matrix<Weight>, GraphError> {
        if let Some(e) = self.edges.iter().find(|e| e.directed) {
            return Err(GraphError::Precondition {
                component: 0,
                message: format!("weighted matrix needs undirected edges ({} -> {})", e.from, e.to),
            });
        }
        if let Some(e) = self.edges.iter().find(|e| e.weight.is_none()) {
            return Err(GraphError::Precondition {
                component: 0,
                message: format!("edge {} -- {} has no weight", e.from, e.to),
            });
        }
        let idx = self.index();
        let n = self.order_count();
        let mut cells = vec![Weight::ABSENT; n * n];
        for e in &self.edges {
            for (a, b) in e.cells() {
                cells[idx[a] * n + idx[b]] = Weight(e.weight);
            }
        }
        let order = self.ordering();
        Ok(labelled(
            Matrix::from_fn(n, n, |i, j| cells[i * n + j]),
            order.clone(),
            Some(order),
        ))
    }

    /// Rebuilds an undirected weighted graph from a symmetric weighted
    /// matrix. Weights with an `I` part become indeterminate edges.
    pub fn from_weighted(m: &Matrix<Weight>, labels: &[String]) -> Result<Graph, GraphError> {
        if !m.is_square() || labels.len() != m.rows() {
            return Err(GraphError::Domain(
                "weighted matrix must be square and fully labelled".into(),
            ));
        }
        let mut edges = Vec::new();
        for i in 0..m.rows() {
            if m.get(i, i).0.is_some() {
                return Err(GraphError::SelfLoop {
                    from: labels[i].clone(),
                    to: labels[i].clone(),
                });
            }
            for j in i + 1..m.cols() {
                if m.get(i, j) != m.get(j, i) {
                    return Err(GraphError::Domain(format!(
                        "weighted matrix is not symmetric at ({}, {})",
                        labels[i], labels[j]
                    )));
                }
                if let Some(w) = m.get(i, j).0 {
                    let mut e = Edge::undirected(labels[i].clone(), labels[j].clone()).weighted(w);
                    if w.is_indeterminate() {
                        e.kind = EdgeKind::Indeterminate;
                    }
                    edges.push(e);
                }
            }
        }
        Graph::new(labels.iter().cloned(), edges)?.with_order(labels.iter().cloned())
    }

    /// Diagonal: the column sum of the adjacency matrix (the in-degree for
    /// determinate edges). Off-diagonal: negated adjacency.
    pub fn kirchhoff(&self) -> Result<Matrix<NeutroValue>, GraphError> {
        if let Some(e) = self.edges.iter().find(|e| !e.directed) {
            return Err(GraphError::Precondition {
                component: 0,
                message: format!("Kirchhoff matrix needs directed edges ({} -- {})", e.from, e.to),
            });
        }
        let x = self.adjacency();
        let n = x.rows();
        let indeg: Vec<NeutroValue> = (0..n).map(|j| (0..n).map(|i| *x.get(i, j)).sum()).collect();
        let order = self.ordering();
        let m = Matrix::from_fn(n, n, |i, j| if i == j { indeg[j] } else { -*x.get(i, j) });
        Ok(labelled(m, order.clone(), Some(order)))
    }
}

fn per_component<T>(g: &NGraph, f: impl Fn(&Graph) -> Result<Matrix<T>, GraphError>) -> Result<NMatrix<T>, GraphError> {
    let comps = g
        .components()
        .iter()
        .enumerate()
        .map(|(c, comp)| {
            f(comp).map_err(|e| match e {
                GraphError::Precondition { message, .. } => GraphError::Precondition { component: c, message },
                other => other,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NMatrix::new(comps).expect("n-graph has at least one component"))
}

impl NGraph {
    pub fn adjacency_nmatrix(&self) -> NMatrix<NeutroValue> {
        per_component(self, |g| Ok(g.adjacency())).expect("infallible")
    }

    pub fn incidence_nmatrix(&self) -> NMatrix<NeutroValue> {
        per_component(self, |g| Ok(g.incidence())).expect("infallible")
    }

    pub fn weighted_nmatrix(&self) -> Result<NMatrix<Weight>, GraphError> {
        per_component(self, Graph::weighted)
    }

    pub fn kirchhoff_nmatrix(&self) -> Result<NMatrix<NeutroValue>, GraphError> {
        per_component(self, Graph::kirchhoff)
    }
}
