//! Cognitive maps over one or more square components (FCM, FCBM, FCTM and
//! their neutrosophic versions): stepping, hidden patterns, combination.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::dynamics::{classify_cycle, run_until_repeat, threshold_and_update, MapError, StateVector, Verdict};
use crate::neutro::{NeutroValue, ThresholdPolicy};
use crate::ngraph::{Graph, NGraph};
use crate::nmatrix::{Matrix, NMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCognitiveMap", into = "RawCognitiveMap")]
pub struct CognitiveMap {
    matrix: NMatrix,
    labels: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawCognitiveMap {
    labels: Vec<Vec<String>>,
    matrix: NMatrix,
}

impl TryFrom<RawCognitiveMap> for CognitiveMap {
    type Error = MapError;
    fn try_from(raw: RawCognitiveMap) -> Result<Self, Self::Error> {
        CognitiveMap::new(raw.matrix, raw.labels)
    }
}

impl From<CognitiveMap> for RawCognitiveMap {
    fn from(m: CognitiveMap) -> Self {
        RawCognitiveMap {
            labels: m.labels,
            matrix: m.matrix,
        }
    }
}

pub(crate) fn check_labels(component: usize, labels: &[String], expected: usize) -> Result<(), MapError> {
    if labels.len() != expected {
        return Err(MapError::LabelCount {
            component,
            expected,
            found: labels.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(MapError::DuplicateLabel {
                component,
                label: l.clone(),
            });
        }
    }
    Ok(())
}

/// Describes the first place where two label lists disagree.
pub(crate) fn first_divergence(component: usize, side: &str, a: &[String], b: &[String]) -> Option<String> {
    let n = a.len().max(b.len());
    (0..n).find_map(|i| match (a.get(i), b.get(i)) {
        (Some(x), Some(y)) if x == y => None,
        (x, y) => Some(format!(
            "component {}: {side}label {} is `{}` in one map and `{}` in another",
            component + 1,
            i + 1,
            x.map_or("<none>", String::as_str),
            y.map_or("<none>", String::as_str)
        )),
    })
}

impl CognitiveMap {
    /// Labels are attached to the matrix rows and columns as well.
    pub fn new(matrix: NMatrix, labels: Vec<Vec<String>>) -> Result<Self, MapError> {
        if labels.len() != matrix.k() {
            return Err(MapError::ComponentCount {
                expected: matrix.k(),
                found: labels.len(),
            });
        }
        let mut comps = Vec::with_capacity(matrix.k());
        for (c, (m, l)) in matrix.components().iter().zip(&labels).enumerate() {
            if !m.is_square() {
                return Err(MapError::NotSquare {
                    component: c,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            check_labels(c, l, m.rows())?;
            if let Some(i) = (0..m.rows()).find(|&i| !m.get(i, i).is_zero()) {
                return Err(MapError::NonZeroDiagonal {
                    component: c,
                    label: l[i].clone(),
                });
            }
            comps.push(m.clone().with_labels(Some(l.clone()), Some(l.clone()))?);
        }
        Ok(Self {
            matrix: NMatrix::new(comps)?,
            labels,
        })
    }

    /// Builds the map from a directed n-graph: `e_ij` is the weight of the
    /// edge `C_i -> C_j` (its declared weight, or 1 / I by kind).
    pub fn from_ngraph(g: &NGraph) -> Result<Self, MapError> {
        Self::from_graphs(g.components())
    }

    /// Like [`CognitiveMap::from_ngraph`] without the n-graph distinctness
    /// requirement, so two experts may draw the same picture.
    pub fn from_graphs(graphs: &[Graph]) -> Result<Self, MapError> {
        let mut comps = Vec::with_capacity(graphs.len());
        let mut labels = Vec::with_capacity(graphs.len());
        for (c, comp) in graphs.iter().enumerate() {
            if let Some(e) = comp.edges().iter().find(|e| !e.directed) {
                return Err(MapError::Structure {
                    component: c,
                    message: format!(
                        "edge {} -- {} is undirected; cognitive maps need directed edges",
                        e.from, e.to
                    ),
                });
            }
            let order = comp.ordering();
            let idx = |v: &str| order.iter().position(|x| x == v).expect("endpoint is a vertex");
            let n = order.len();
            let mut cells = vec![NeutroValue::ZERO; n * n];
            for e in comp.edges() {
                cells[idx(&e.from) * n + idx(&e.to)] = e.effective_weight();
            }
            comps.push(Matrix::from_fn(n, n, |i, j| cells[i * n + j]));
            labels.push(order);
        }
        Self::new(NMatrix::new(comps)?, labels)
    }

    pub fn matrix(&self) -> &NMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.matrix.k()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.matrix.components().iter().map(Matrix::rows).collect()
    }

    /// Component `i` as a map of its own.
    pub fn component_map(&self, i: usize) -> CognitiveMap {
        CognitiveMap {
            matrix: NMatrix::new(vec![self.matrix.component(i).clone()]).expect("one component"),
            labels: vec![self.labels[i].clone()],
        }
    }

    /// Entries limited to `{-1, 0, 1, I}`.
    pub fn is_simple(&self) -> bool {
        let allowed = [
            NeutroValue::NEG_ONE,
            NeutroValue::ZERO,
            NeutroValue::ONE,
            NeutroValue::I,
        ];
        self.matrix
            .components()
            .iter()
            .all(|m| m.entries().all(|v| allowed.contains(v)))
    }

    /// `s * M`, thresholded, with initially-on nodes forced back on.
    pub fn step(&self, s: &StateVector, p: ThresholdPolicy, initial: &StateVector) -> Result<StateVector, MapError> {
        let orders = self.orders();
        s.check_lengths(&orders)?;
        initial.check_lengths(&orders)?;
        let raw = self.matrix.vec_mul(&s.to_nvector())?;
        Ok(threshold_and_update(&raw, p, Some(initial)))
    }

    pub fn hidden_pattern(&self, initial: &StateVector, p: ThresholdPolicy) -> Result<HiddenPattern, MapError> {
        initial.check_lengths(&self.orders())?;
        initial.check_binary()?;
        let (trace, cycle_start) = run_until_repeat(initial.clone(), |s| self.step(s, p, initial))?;
        let cycle: Vec<&StateVector> = trace[cycle_start..trace.len() - 1].iter().collect();
        let verdicts = classify_cycle(&cycle);
        Ok(HiddenPattern {
            verdicts,
            iterations: trace.len() - 1,
            cycle_start,
            trace,
        })
    }

    /// Entrywise sum of aligned maps (same components, orders and labels).
    pub fn combine(maps: &[CognitiveMap]) -> Result<CognitiveMap, MapError> {
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
                if let Some(msg) = first_divergence(c, "", &first.labels[c], &m.labels[c]) {
                    return Err(MapError::Alignment(msg));
                }
            }
            sum = sum.try_add(&m.matrix)?;
        }
        CognitiveMap::new(sum, first.labels.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HiddenPattern {
    pub verdicts: Vec<Verdict>,
    /// Every state from the initial one up to and including the first
    /// repeated state.
    pub trace: Vec<StateVector>,
    pub iterations: usize,
    /// Index in `trace` where the repeating segment starts.
    pub cycle_start: usize,
}

impl HiddenPattern {
    /// The repeating segment of the trace.
    pub fn cycle(&self) -> &[StateVector] {
        &self.trace[self.cycle_start..self.trace.len() - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neutro::{NodeState, ThresholdMode};
    use crate::ngraph::{Edge, Graph};

    fn labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    fn map(text: &str) -> CognitiveMap {
        let m: NMatrix = text.parse().unwrap();
        let l = m.components().iter().map(|c| labels("C", c.rows())).collect();
        CognitiveMap::new(m, l).unwrap()
    }

    #[test]
    fn validation() {
        let m: NMatrix = "0 1\n1 1".parse().unwrap();
        assert!(matches!(
            CognitiveMap::new(m, vec![labels("C", 2)]),
            Err(MapError::NonZeroDiagonal { component: 0, .. })
        ));
        let m: NMatrix = "0 1 0\n1 0 0".parse().unwrap();
        assert!(matches!(
            CognitiveMap::new(m, vec![labels("C", 2)]),
            Err(MapError::NotSquare { .. })
        ));
        let m: NMatrix = "0 1\n1 0".parse().unwrap();
        assert!(matches!(
            CognitiveMap::new(m.clone(), vec![vec!["a".into(), "a".into()]]),
            Err(MapError::DuplicateLabel { .. })
        ));
        assert!(matches!(
            CognitiveMap::new(m, vec![labels("C", 3)]),
            Err(MapError::LabelCount { .. })
        ));
    }

    #[test]
    fn zero_state_stays_zero() {
        let m = map("0 1 -1\nI 0 1\n1 1 0");
        let z = StateVector::zeros(&[3]);
        let p = ThresholdPolicy::default();
        assert_eq!(m.step(&z, p, &z).unwrap(), z);
        let hp = m.hidden_pattern(&z, p).unwrap();
        assert_eq!(hp.verdicts, [Verdict::FixedPoint(vec![NodeState::Off; 3])]);
        assert_eq!(hp.iterations, 1);
    }

    #[test]
    fn update_overrides_indeterminate() {
        // C2 -> C1 is I, so C1 would threshold to I without updating.
        let m = map("0 1\nI 0");
        let init = StateVector::from_bits(&[&[1, 0]]);
        let s1 = m.step(&init, ThresholdPolicy::default(), &init).unwrap();
        assert_eq!(s1, StateVector::from_bits(&[&[1, 1]]));
        let raw_only = m
            .step(&s1, ThresholdPolicy::default(), &StateVector::zeros(&[2]))
            .unwrap();
        assert_eq!(raw_only.0[0][0], NodeState::Indeterminate);
    }

    #[test]
    fn rejects_indeterminate_initial() {
        let m = map("0 1\n1 0");
        let bad = StateVector(vec![vec![NodeState::Indeterminate, NodeState::Off]]);
        assert!(matches!(
            m.hidden_pattern(&bad, ThresholdPolicy::default()),
            Err(MapError::IndeterminateInitial { component: 0 })
        ));
        let short = StateVector::from_bits(&[&[1]]);
        assert!(matches!(
            m.hidden_pattern(&short, ThresholdPolicy::default()),
            Err(MapError::StateLength { .. })
        ));
    }

    #[test]
    fn pinned_ring_saturates() {
        let m = map("0 1 0\n0 0 1\n1 0 0");
        let init = StateVector::from_bits(&[&[1, 0, 0]]);
        let hp = m.hidden_pattern(&init, ThresholdPolicy::default()).unwrap();
        assert!(hp.verdicts[0].is_fixed());
        assert_eq!(hp.verdicts[0], Verdict::FixedPoint(vec![NodeState::On; 3]));
    }

    #[test]
    fn combination() {
        let a = map("0 1\n-1 0");
        let b = map("0 -1\n1 0");
        let sum = CognitiveMap::combine(&[a.clone(), b]).unwrap();
        assert_eq!(sum.matrix(), &"0 0\n0 0".parse::<NMatrix>().unwrap());
        let ones = map("0 1 0\n1 0 1\n0 0 0");
        let tripled = CognitiveMap::combine(&[ones.clone(), ones.clone(), ones]).unwrap();
        assert_eq!(tripled.matrix(), &"0 3 0\n3 0 3\n0 0 0".parse::<NMatrix>().unwrap());
        let zero = map("0 0\n0 0");
        assert_eq!(CognitiveMap::combine(&[a.clone(), zero]).unwrap(), a);
        let other = CognitiveMap::new(a.matrix().clone(), vec![vec!["C1".into(), "X".into()]]).unwrap();
        match CognitiveMap::combine(&[a, other]) {
            Err(MapError::Alignment(msg)) => assert!(msg.contains("`C2`") && msg.contains("`X`"), "{msg}"),
            other => panic!("{other:?}"),
        }
        assert_eq!(CognitiveMap::combine(&[]), Err(MapError::NothingToCombine));
    }

    #[test]
    fn from_ngraph_uses_weights_and_kind() {
        let g = Graph::new(
            ["A", "B", "C"],
            vec![
                Edge::directed("A", "B").weighted(NeutroValue::NEG_ONE),
                Edge::directed("B", "C").indeterminate(),
                Edge::directed("C", "A"),
            ],
        )
        .unwrap();
        let m = CognitiveMap::from_ngraph(&NGraph::new(vec![g]).unwrap()).unwrap();
        assert_eq!(m.matrix(), &"0 -1 0\n0 0 I\n1 0 0".parse::<NMatrix>().unwrap());
        assert_eq!(m.labels()[0], ["A", "B", "C"]);
        let edgeless = Graph::new(["A", "B"], vec![]).unwrap();
        let z = CognitiveMap::from_ngraph(&NGraph::new(vec![edgeless]).unwrap()).unwrap();
        assert!(z.matrix().component(0).is_zero());
        let undirected = Graph::new(["A", "B"], vec![Edge::undirected("A", "B")]).unwrap();
        assert!(matches!(
            CognitiveMap::from_ngraph(&NGraph::new(vec![undirected]).unwrap()),
            Err(MapError::Structure { .. })
        ));
    }

    #[test]
    fn indet_mode_is_selectable() {
        let m = map("0 I I\n1 0 0\n0 0 0");
        let p = ThresholdPolicy::default().with_mode(ThresholdMode::IndetDominant);
        let init = StateVector::from_bits(&[&[1, 1, 0]]);
        // raw for C2 is I + 0 = I; for C3 it is I.
        let s = m.step(&init, p, &init).unwrap();
        assert_eq!(s.0[0][2], NodeState::Indeterminate);
    }

    #[test]
    fn json_round_trip() {
        let m = map("0 1\nI 0\n---\n0 -1 0\n1 0 0\n0 0 0");
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<CognitiveMap>(&json).unwrap(), m);
    }
}
