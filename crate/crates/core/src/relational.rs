//! Relational maps (FRM, FRBM, FRTM, NRM, NRBM, ...): rectangular components
//! from a domain node set to a disjoint range node set, iterated forward
//! through the matrix and backward through its transpose.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cognitive::{check_labels, first_divergence};
use crate::dynamics::{classify_cycle, run_until_repeat, threshold_and_update, MapError, StateVector, Verdict};
use crate::neutro::{NeutroValue, ThresholdPolicy};
use crate::ngraph::{Graph, NGraph};
use crate::nmatrix::{Matrix, NMatrix, NMatrixError, NVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Domain,
    Range,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Domain => "domain",
            Side::Range => "range",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationalState {
    pub side: Side,
    pub state: StateVector,
}

impl RelationalState {
    pub fn domain(state: StateVector) -> Self {
        Self {
            side: Side::Domain,
            state,
        }
    }

    pub fn range(state: StateVector) -> Self {
        Self {
            side: Side::Range,
            state,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRelationalMap", into = "RawRelationalMap")]
pub struct RelationalMap {
    matrix: NMatrix,
    domain_labels: Vec<Vec<String>>,
    range_labels: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawRelationalMap {
    domain_labels: Vec<Vec<String>>,
    range_labels: Vec<Vec<String>>,
    matrix: NMatrix,
}

impl TryFrom<RawRelationalMap> for RelationalMap {
    type Error = MapError;
    fn try_from(raw: RawRelationalMap) -> Result<Self, Self::Error> {
        RelationalMap::new(raw.matrix, raw.domain_labels, raw.range_labels)
    }
}

impl From<RelationalMap> for RawRelationalMap {
    fn from(m: RelationalMap) -> Self {
        RawRelationalMap {
            domain_labels: m.domain_labels,
            range_labels: m.range_labels,
            matrix: m.matrix,
        }
    }
}

impl RelationalMap {
    pub fn new(
        matrix: NMatrix,
        domain_labels: Vec<Vec<String>>,
        range_labels: Vec<Vec<String>>,
    ) -> Result<Self, MapError> {
        for found in [domain_labels.len(), range_labels.len()] {
            if found != matrix.k() {
                return Err(MapError::ComponentCount {
                    expected: matrix.k(),
                    found,
                });
            }
        }
        let mut comps = Vec::with_capacity(matrix.k());
        for (c, m) in matrix.components().iter().enumerate() {
            let (d, r) = (&domain_labels[c], &range_labels[c]);
            check_labels(c, d, m.rows())?;
            check_labels(c, r, m.cols())?;
            let ds: BTreeSet<&String> = d.iter().collect();
            if let Some(shared) = r.iter().find(|l| ds.contains(l)) {
                return Err(MapError::SharedSide {
                    component: c,
                    label: shared.clone(),
                });
            }
            comps.push(m.clone().with_labels(Some(d.clone()), Some(r.clone()))?);
        }
        Ok(Self {
            matrix: NMatrix::new(comps)?,
            domain_labels,
            range_labels,
        })
    }

    /// Builds the map from an n-graph whose components are split into
    /// `(domain, range)` parts. Every edge must join the two parts; its
    /// direction does not matter.
    pub fn from_ngraph(g: &NGraph, parts: &[(Vec<String>, Vec<String>)]) -> Result<Self, MapError> {
        Self::from_graphs(g.components(), parts)
    }

    /// Like [`RelationalMap::from_ngraph`] without the n-graph
    /// distinctness requirement.
    pub fn from_graphs(graphs: &[Graph], parts: &[(Vec<String>, Vec<String>)]) -> Result<Self, MapError> {
        if parts.len() != graphs.len() {
            return Err(MapError::ComponentCount {
                expected: graphs.len(),
                found: parts.len(),
            });
        }
        let mut comps = Vec::with_capacity(graphs.len());
        for (c, (comp, (dom, ran))) in graphs.iter().zip(parts).enumerate() {
            let declared: BTreeSet<&String> = dom.iter().chain(ran).collect();
            let vertices: BTreeSet<&String> = comp.vertices().iter().collect();
            if declared != vertices || declared.len() != dom.len() + ran.len() {
                return Err(MapError::Structure {
                    component: c,
                    message: "domain and range parts must split the vertex set".into(),
                });
            }
            if dom.is_empty() || ran.is_empty() {
                return Err(MapError::Structure {
                    component: c,
                    message: "domain and range parts must both be non-empty".into(),
                });
            }
            let pos = |side: &[String], v: &str| side.iter().position(|x| x == v);
            let mut cells = vec![NeutroValue::ZERO; dom.len() * ran.len()];
            for e in comp.edges() {
                let (i, j) = match (pos(dom, &e.from), pos(ran, &e.to), pos(ran, &e.from), pos(dom, &e.to)) {
                    (Some(i), Some(j), _, _) | (_, _, Some(j), Some(i)) => (i, j),
                    _ => {
                        return Err(MapError::Structure {
                            component: c,
                            message: format!("edge {} - {} lies within one part", e.from, e.to),
                        })
                    }
                };
                cells[i * ran.len() + j] = e.effective_weight();
            }
            comps.push(Matrix::from_fn(dom.len(), ran.len(), |i, j| cells[i * ran.len() + j]));
        }
        Self::new(
            NMatrix::new(comps)?,
            parts.iter().map(|p| p.0.clone()).collect(),
            parts.iter().map(|p| p.1.clone()).collect(),
        )
    }

    pub fn matrix(&self) -> &NMatrix {
        &self.matrix
    }

    pub fn domain_labels(&self) -> &[Vec<String>] {
        &self.domain_labels
    }

    pub fn range_labels(&self) -> &[Vec<String>] {
        &self.range_labels
    }

    pub fn k(&self) -> usize {
        self.matrix.k()
    }

    pub fn domain_sizes(&self) -> Vec<usize> {
        self.matrix.components().iter().map(Matrix::rows).collect()
    }

    pub fn range_sizes(&self) -> Vec<usize> {
        self.matrix.components().iter().map(Matrix::cols).collect()
    }

    pub fn sizes(&self, side: Side) -> Vec<usize> {
        match side {
            Side::Domain => self.domain_sizes(),
            Side::Range => self.range_sizes(),
        }
    }

    pub fn component_map(&self, i: usize) -> RelationalMap {
        RelationalMap {
            matrix: NMatrix::new(vec![self.matrix.component(i).clone()]).expect("one component"),
            domain_labels: vec![self.domain_labels[i].clone()],
            range_labels: vec![self.range_labels[i].clone()],
        }
    }

    fn expect_side(s: &RelationalState, side: Side) -> Result<(), MapError> {
        if s.side == side {
            Ok(())
        } else {
            Err(MapError::WrongSide {
                expected: side,
                found: s.side,
            })
        }
    }

    /// `threshold(a * E)`, with initially-on range nodes forced on.
    pub fn step_forward(
        &self,
        a: &RelationalState,
        p: ThresholdPolicy,
        initial_range: Option<&StateVector>,
    ) -> Result<RelationalState, MapError> {
        Self::expect_side(a, Side::Domain)?;
        a.state.check_lengths(&self.domain_sizes())?;
        if let Some(init) = initial_range {
            init.check_lengths(&self.range_sizes())?;
        }
        let raw = self.matrix.vec_mul(&a.state.to_nvector())?;
        Ok(RelationalState::range(threshold_and_update(&raw, p, initial_range)))
    }

    /// `threshold(b * E^T)`, with initially-on domain nodes forced on.
    pub fn step_backward(
        &self,
        b: &RelationalState,
        p: ThresholdPolicy,
        initial_domain: Option<&StateVector>,
    ) -> Result<RelationalState, MapError> {
        Self::expect_side(b, Side::Range)?;
        b.state.check_lengths(&self.range_sizes())?;
        if let Some(init) = initial_domain {
            init.check_lengths(&self.domain_sizes())?;
        }
        let raw = self.transposed_product(&b.state)?;
        Ok(RelationalState::domain(threshold_and_update(&raw, p, initial_domain)))
    }

    fn transposed_product(&self, b: &StateVector) -> Result<NVector, MapError> {
        // b * E^T, row by row, without materialising the transpose.
        let mut out = Vec::with_capacity(self.k());
        for (c, (m, x)) in self.matrix.components().iter().zip(&b.0).enumerate() {
            let mut row = Vec::with_capacity(m.rows());
            for i in 0..m.rows() {
                let mut acc = NeutroValue::ZERO;
                for (&e, s) in m.row(i).iter().zip(x) {
                    acc = e
                        .checked_mul(s.value())
                        .and_then(|t| acc.checked_add(t))
                        .map_err(|_| NMatrixError::Overflow { component: c })?;
                }
                row.push(acc);
            }
            out.push(row);
        }
        Ok(NVector(out))
    }

    /// Alternates forward and backward steps from `start` until a
    /// `(domain, range)` round repeats. Updating applies on the start side.
    pub fn hidden_pattern(
        &self,
        start: &RelationalState,
        p: ThresholdPolicy,
    ) -> Result<RelationalHiddenPattern, MapError> {
        start.state.check_lengths(&self.sizes(start.side))?;
        start.state.check_binary()?;
        let init = Some(&start.state);
        let first = match start.side {
            Side::Domain => {
                let r = self.step_forward(start, p, None)?;
                (start.state.clone(), r.state)
            }
            Side::Range => {
                let d = self.step_backward(start, p, None)?;
                let r = self.step_forward(&d, p, init)?;
                (d.state, r.state)
            }
        };
        let (rounds, cycle_start) = run_until_repeat(first, |(_, r)| {
            let r = RelationalState::range(r.clone());
            let (dom_init, ran_init) = match start.side {
                Side::Domain => (init, None),
                Side::Range => (None, init),
            };
            let d = self.step_backward(&r, p, dom_init)?;
            let r = self.step_forward(&d, p, ran_init)?;
            Ok::<_, MapError>((d.state, r.state))
        })?;
        let cycle = &rounds[cycle_start..rounds.len() - 1];
        let domain: Vec<&StateVector> = cycle.iter().map(|(d, _)| d).collect();
        let range: Vec<&StateVector> = cycle.iter().map(|(_, r)| r).collect();
        Ok(RelationalHiddenPattern {
            start: start.clone(),
            domain: classify_cycle(&domain),
            range: classify_cycle(&range),
            iterations: rounds.len() - 1,
            cycle_start,
            rounds,
        })
    }

    pub fn combine(maps: &[RelationalMap]) -> Result<RelationalMap, MapError> {
        let (first, rest) = maps.split_first().ok_or(MapError::NothingToCombine)?;
        let mut sum = first.matrix.clone();
        for m in rest {
            if m.k() != first.k() {
                return Err(MapError::Alignment(format!(
                    "{} components against {}",
                    m.k(),
                    first.k()
                )));
            }
            for c in 0..first.k() {
                let diverge = first_divergence(c, "domain ", &first.domain_labels[c], &m.domain_labels[c])
                    .or_else(|| first_divergence(c, "range ", &first.range_labels[c], &m.range_labels[c]));
                if let Some(msg) = diverge {
                    return Err(MapError::Alignment(msg));
                }
            }
            sum = sum.try_add(&m.matrix)?;
        }
        RelationalMap::new(sum, first.domain_labels.clone(), first.range_labels.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationalHiddenPattern {
    pub start: RelationalState,
    pub domain: Vec<Verdict>,
    pub range: Vec<Verdict>,
    /// `(domain, range)` after each alternation, up to and including the
    /// first repeated round.
    pub rounds: Vec<(StateVector, StateVector)>,
    pub iterations: usize,
    pub cycle_start: usize,
}

impl RelationalHiddenPattern {
    pub fn cycle(&self) -> &[(StateVector, StateVector)] {
        &self.rounds[self.cycle_start..self.rounds.len() - 1]
    }
}
