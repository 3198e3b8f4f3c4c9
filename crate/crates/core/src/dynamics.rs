//! State vectors, hidden-pattern verdicts and the error type shared by the
//! cognitive and relational engines.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::neutro::{NeutroValue, NodeState, ThresholdPolicy};
use crate::ngraph::GraphError;
use crate::nmatrix::{NMatrixError, NVector};
use crate::relational::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Matrix(#[from] NMatrixError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("component {component}: matrix is {rows}x{cols}, cognitive maps must be square")]
    NotSquare { component: usize, rows: usize, cols: usize },
    #[error("component {component}: diagonal entry for `{label}` must be zero")]
    NonZeroDiagonal { component: usize, label: String },
    #[error("component {component}: {found} labels for {expected} nodes")]
    LabelCount {
        component: usize,
        expected: usize,
        found: usize,
    },
    #[error("component {component}: label `{label}` used twice")]
    DuplicateLabel { component: usize, label: String },
    #[error("component {component}: `{label}` is on both the domain and range side")]
    SharedSide { component: usize, label: String },
    #[error("maps do not align: {0}")]
    Alignment(String),
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("component {component}: state has length {found}, expected {expected}")]
    StateLength {
        component: usize,
        expected: usize,
        found: usize,
    },
    #[error("component {component}: initial states may only contain 0 and 1")]
    IndeterminateInitial { component: usize },
    #[error("expected a {expected} state, got a {found} state")]
    WrongSide { expected: Side, found: Side },
    #[error("component {component}: {message}")]
    Structure { component: usize, message: String },
    #[error("need at least one map to combine")]
    NothingToCombine,
}

/// One `{0, 1, I}` vector per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StateVector(pub Vec<Vec<NodeState>>);

impl StateVector {
    pub fn zeros(lengths: &[usize]) -> Self {
        StateVector(lengths.iter().map(|&n| vec![NodeState::Off; n]).collect())
    }

    /// Builds a binary state from 0/1 integers.
    pub fn from_bits(bits: &[&[u8]]) -> Self {
        StateVector(
            bits.iter()
                .map(|c| {
                    c.iter()
                        .map(|&b| if b == 0 { NodeState::Off } else { NodeState::On })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn component(&self, i: usize) -> &[NodeState] {
        &self.0[i]
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.0.iter().map(Vec::len).collect()
    }

    pub fn to_nvector(&self) -> NVector {
        NVector::from_states(&self.0)
    }

    pub fn contains_indeterminate(&self) -> bool {
        self.0.iter().flatten().any(|s| *s == NodeState::Indeterminate)
    }

    pub(crate) fn check_lengths(&self, expected: &[usize]) -> Result<(), MapError> {
        if self.k() != expected.len() {
            return Err(MapError::ComponentCount {
                expected: expected.len(),
                found: self.k(),
            });
        }
        for (c, (s, &n)) in self.0.iter().zip(expected).enumerate() {
            if s.len() != n {
                return Err(MapError::StateLength {
                    component: c,
                    expected: n,
                    found: s.len(),
                });
            }
        }
        Ok(())
    }

    pub(crate) fn check_binary(&self) -> Result<(), MapError> {
        match self.0.iter().position(|c| c.contains(&NodeState::Indeterminate)) {
            Some(c) => Err(MapError::IndeterminateInitial { component: c }),
            None => Ok(()),
        }
    }
}

pub(crate) fn format_states(states: &[NodeState]) -> String {
    states.iter().map(|s| s.symbol()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| format_states(c)).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}

/// Thresholds a raw product and forces initially-on coordinates back to 1.
pub(crate) fn threshold_and_update(raw: &NVector, p: ThresholdPolicy, initial: Option<&StateVector>) -> StateVector {
    StateVector(
        raw.0
            .iter()
            .enumerate()
            .map(|(c, comp)| {
                comp.iter()
                    .enumerate()
                    .map(|(j, &v): (usize, &NeutroValue)| {
                        let on = initial.is_some_and(|init| init.0[c][j] == NodeState::On);
                        if on {
                            NodeState::On
                        } else {
                            p.apply(v)
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Per-component outcome of an iteration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "states", rename_all = "snake_case")]
pub enum Verdict {
    FixedPoint(Vec<NodeState>),
    LimitCycle(Vec<Vec<NodeState>>),
}

impl Verdict {
    pub fn is_fixed(&self) -> bool {
        matches!(self, Verdict::FixedPoint(_))
    }

    /// The states visited, a single one for a fixed point.
    pub fn states(&self) -> Vec<&[NodeState]> {
        match self {
            Verdict::FixedPoint(s) => vec![s.as_slice()],
            Verdict::LimitCycle(c) => c.iter().map(Vec::as_slice).collect(),
        }
    }

    /// Classifies one component from its projection over the joint cycle.
    pub(crate) fn from_projection<'a>(mut states: impl Iterator<Item = &'a [NodeState]>) -> Self {
        let first = states.next().expect("cycle is non-empty").to_vec();
        let mut cycle = vec![first];
        for s in states {
            if s == cycle[0].as_slice() {
                break;
            }
            cycle.push(s.to_vec());
        }
        if cycle.len() == 1 {
            Verdict::FixedPoint(cycle.pop().expect("one state"))
        } else {
            Verdict::LimitCycle(cycle)
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::FixedPoint(s) => write!(f, "FIXED({})", format_states(s)),
            Verdict::LimitCycle(c) => {
                let inner: Vec<String> = c.iter().map(|s| format!("({})", format_states(s))).collect();
                write!(f, "CYCLE({})", inner.join(" "))
            }
        }
    }
}

/// Iterates `step` from `start` until a state repeats. Returns every state
/// visited (the repeated one last) and the index where the cycle begins.
pub(crate) fn run_until_repeat<S: Clone + Eq + Hash, E>(
    start: S,
    mut step: impl FnMut(&S) -> Result<S, E>,
) -> Result<(Vec<S>, usize), E> {
    let mut seen: HashMap<S, usize> = HashMap::new();
    let mut trace = vec![start];
    loop {
        let current = trace.last().expect("non-empty trace");
        if let Some(&at) = seen.get(current) {
            return Ok((trace, at));
        }
        seen.insert(current.clone(), trace.len() - 1);
        let next = step(current)?;
        trace.push(next);
    }
}

/// Per-component verdicts over the cycle `states`.
pub(crate) fn classify_cycle(states: &[&StateVector]) -> Vec<Verdict> {
    let k = states[0].k();
    (0..k)
        .map(|c| Verdict::from_projection(states.iter().map(|s| s.component(c))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rendering() {
        let on = NodeState::On;
        let off = NodeState::Off;
        assert_eq!(Verdict::FixedPoint(vec![on, off]).to_string(), "FIXED(1 0)");
        let c = Verdict::LimitCycle(vec![vec![on, on], vec![on, NodeState::Indeterminate]]);
        assert_eq!(c.to_string(), "CYCLE((1 1) (1 I))");
    }

    #[test]
    fn projection_period_shorter_than_joint_cycle() {
        let a = vec![NodeState::On];
        let b = vec![NodeState::Off];
        let v = Verdict::from_projection([a.as_slice(), b.as_slice(), a.as_slice(), b.as_slice()].into_iter());
        assert_eq!(v, Verdict::LimitCycle(vec![a, b]));
    }

    #[test]
    fn repeat_detection() {
        let (trace, at) = run_until_repeat::<u32, ()>(0, |&x| Ok(if x < 3 { x + 1 } else { 1 })).unwrap();
        assert_eq!(trace, [0, 1, 2, 3, 1]);
        assert_eq!(at, 1);
    }

    #[test]
    fn state_display_uses_union_separator() {
        let s = StateVector::from_bits(&[&[1, 0], &[0, 0, 1]]);
        assert_eq!(s.to_string(), "1 0 ∪ 0 0 1");
    }

    #[test]
    fn verdict_json_shape() {
        let v = Verdict::FixedPoint(vec![NodeState::On, NodeState::Indeterminate]);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"verdict":"fixed_point","states":["1","I"]}"#
        );
    }
}
