use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CommonSubgraph, Graph, GraphError, NGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GluingVerdict {
    Disjoint,
    /// Shared vertices but no shared edge; carries the shared-vertex count.
    VertexGlued(usize),
    EdgeGlued,
    StrongSubgraphGlued,
}

impl fmt::Display for GluingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GluingVerdict::Disjoint => f.write_str("Disjoint"),
            GluingVerdict::VertexGlued(n) => write!(f, "VertexGlued({n})"),
            GluingVerdict::EdgeGlued => f.write_str("EdgeGlued"),
            GluingVerdict::StrongSubgraphGlued => f.write_str("StrongSubgraphGlued"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingClass {
    pub verdict: GluingVerdict,
    pub shared: CommonSubgraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NeutroGraphClass {
    FullyNeutrosophic,
    Weak,
    VeryWeak,
    NonNeutrosophic,
}

impl fmt::Display for NeutroGraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub valid: bool,
    pub cross_indeterminate: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteReport {
    /// Per component, the two colour classes if the component is bipartite.
    pub parts: Vec<Option<(Vec<String>, Vec<String>)>>,
    pub is_bipartite_ngraph: bool,
    pub is_strongly_biconnected: bool,
}

fn require_pair(g: &NGraph, op: &str) -> Result<(), GraphError> {
    if g.k() == 2 {
        Ok(())
    } else {
        Err(GraphError::Domain(format!(
            "{op} needs exactly two components, found {}",
            g.k()
        )))
    }
}

impl NGraph {
    pub fn gluing_classify(&self) -> Result<GluingClass, GraphError> {
        require_pair(self, "gluing classification")?;
        let shared = self.component(0).common_subgraph(self.component(1));
        let (nv, ne) = (shared.vertices.len(), shared.edges.len());
        let verdict = if nv == 0 {
            GluingVerdict::Disjoint
        } else if ne == 0 {
            GluingVerdict::VertexGlued(nv)
        } else if ne >= 2 && nv >= 2 {
            GluingVerdict::StrongSubgraphGlued
        } else {
            GluingVerdict::EdgeGlued
        };
        Ok(GluingClass { verdict, shared })
    }

    pub fn neutrosophic_classify(&self) -> NeutroGraphClass {
        let k = self.k();
        let n = self.components().iter().filter(|g| g.is_neutrosophic()).count();
        if n == 0 {
            NeutroGraphClass::NonNeutrosophic
        } else if n == k {
            NeutroGraphClass::FullyNeutrosophic
        } else if k >= 3 && n == 1 {
            NeutroGraphClass::VeryWeak
        } else {
            NeutroGraphClass::Weak
        }
    }

    /// `|V1| + |V2| - |V1 ∩ V2|`.
    pub fn order(&self) -> Result<usize, GraphError> {
        require_pair(self, "order")?;
        let (a, b) = (self.component(0), self.component(1));
        let shared = a.vertices().intersection(b.vertices()).count();
        Ok(a.order_count() + b.order_count() - shared)
    }

    pub fn bidegree(&self, v: &str) -> Result<usize, GraphError> {
        require_pair(self, "bidegree")?;
        let (a, b) = (self.component(0), self.component(1));
        if !(a.contains(v) && b.contains(v)) {
            return Err(GraphError::Domain(format!(
                "vertex `{v}` is not shared by both components"
            )));
        }
        // Edges incident at `v` in the union; an edge both components
        // share is one edge, not two.
        let incident: BTreeSet<_> = a.edges().iter().chain(b.edges()).filter(|e| e.touches(v)).map(|e| e.key()).collect();
        Ok(incident.len())
    }

    /// `(K1, K2)` when the components are K1- and K2-regular and every
    /// shared vertex has bidegree `K1 + K2`.
    pub fn is_biregular(&self) -> Result<Option<(usize, usize)>, GraphError> {
        require_pair(self, "biregularity")?;
        let (a, b) = (self.component(0), self.component(1));
        let shared: Vec<&String> = a.vertices().intersection(b.vertices()).collect();
        if shared.is_empty() {
            return Err(GraphError::Domain("no shared vertex, so no bidegree".into()));
        }
        let (Some(k1), Some(k2)) = (regularity(a), regularity(b)) else {
            return Ok(None);
        };
        for v in shared {
            if self.bidegree(v)? != k1 + k2 {
                return Ok(None);
            }
        }
        Ok(Some((k1, k2)))
    }

    /// Union graph minus `v` splits into at least two pieces.
    pub fn separates_union(&self, v: &str) -> bool {
        self.union_component_count_without(v) >= 2
    }

    pub fn bipartite_structure(&self) -> BipartiteReport {
        let colourings: Vec<Option<BTreeMap<String, bool>>> = self.components().iter().map(two_colouring).collect();
        let parts = colourings
            .iter()
            .zip(self.components())
            .map(|(c, g)| {
                c.as_ref().map(|colour| {
                    let order = g.ordering();
                    let left = order.iter().filter(|v| !colour[*v]).cloned().collect();
                    let right = order.iter().filter(|v| colour[*v]).cloned().collect();
                    (left, right)
                })
            })
            .collect();
        let is_bipartite_ngraph = colourings.iter().all(Option::is_some);
        let is_strongly_biconnected =
            is_bipartite_ngraph && self.k() == 2 && shares_a_part(self.component(0), self.component(1));
        BipartiteReport {
            parts,
            is_bipartite_ngraph,
            is_strongly_biconnected,
        }
    }
}

fn regularity(g: &Graph) -> Option<usize> {
    let mut degrees = g.vertices().iter().map(|v| g.degree(v));
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

fn neighbours(g: &Graph) -> BTreeMap<&str, Vec<&str>> {
    let mut adj: BTreeMap<&str, Vec<&str>> = g.vertices().iter().map(|v| (v.as_str(), Vec::new())).collect();
    for e in g.edges() {
        adj.get_mut(e.from.as_str()).expect("endpoint").push(&e.to);
        adj.get_mut(e.to.as_str()).expect("endpoint").push(&e.from);
    }
    adj
}

/// BFS colouring, direction ignored. Each connected piece starts from its
/// first vertex in the graph's ordering, which gets colour `false`.
fn two_colouring(g: &Graph) -> Option<BTreeMap<String, bool>> {
    let adj = neighbours(g);
    let mut colour: BTreeMap<String, bool> = BTreeMap::new();
    for start in g.ordering() {
        if colour.contains_key(&start) {
            continue;
        }
        colour.insert(start.clone(), false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[&u];
            for &w in &adj[u.as_str()] {
                match colour.get(w) {
                    Some(&cw) if cw == cu => return None,
                    Some(_) => {}
                    None => {
                        colour.insert(w.to_string(), !cu);
                        queue.push_back(w.to_string());
                    }
                }
            }
        }
    }
    Some(colour)
}

/// Connected pieces of `g`, as a vertex -> piece index map.
fn pieces(g: &Graph) -> BTreeMap<String, usize> {
    let adj = neighbours(g);
    let mut piece = BTreeMap::new();
    let mut next = 0;
    for start in g.vertices() {
        if piece.contains_key(start) {
            continue;
        }
        piece.insert(start.clone(), next);
        let mut queue = VecDeque::from([start.as_str()]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !piece.contains_key(w) {
                    piece.insert(w.to_string(), next);
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    piece
}

/// Union-find with parity over boolean variables; node 0 is the constant
/// `false`.
struct Parity {
    parent: Vec<usize>,
    flip: Vec<bool>,
}

impl Parity {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            flip: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.flip[x] ^= p;
        self.parent[x] = root;
        (root, self.flip[x])
    }

    /// Requires `x XOR y = parity`; false if that contradicts earlier facts.
    fn relate(&mut self, x: usize, y: usize, parity: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px ^ py == parity;
        }
        self.parent[rx] = ry;
        self.flip[rx] = px ^ py ^ parity;
        true
    }
}

/// Whether some 2-colouring of `a` and some 2-colouring of `b` have a
/// common non-empty colour class. Each connected piece of either graph may
/// swap its colours independently, so this is a parity constraint problem
/// over one swap variable per piece.
fn shares_a_part(a: &Graph, b: &Graph) -> bool {
    let (Some(ca), Some(cb)) = (two_colouring(a), two_colouring(b)) else {
        return false;
    };
    let (pa, pb) = (pieces(a), pieces(b));
    let na = pa.values().max().map_or(0, |m| m + 1);
    let nb = pb.values().max().map_or(0, |m| m + 1);
    // Variable 0 is constant false; then a's pieces, then b's pieces.
    let var_a = |v: &str| 1 + pa[v];
    let var_b = |v: &str| 1 + na + pb[v];
    let mut uf = Parity::new(1 + na + nb);
    // The shared class X is {v : colour(v) XOR swap(piece(v)) = true}.
    let all: BTreeSet<&String> = a.vertices().union(b.vertices()).collect();
    for v in &all {
        let ok = match (a.contains(v), b.contains(v)) {
            (true, true) => uf.relate(var_a(v), var_b(v), ca[*v] ^ cb[*v]),
            (true, false) => uf.relate(var_a(v), 0, ca[*v]),
            (false, true) => uf.relate(var_b(v), 0, cb[*v]),
            (false, false) => unreachable!(),
        };
        if !ok {
            return false;
        }
    }
    // X must be non-empty: some shared vertex can be put in X.
    a.vertices().intersection(b.vertices()).any(|v| {
        let (root, p) = uf.find(var_a(v));
        let (zero, pz) = uf.find(0);
        root != zero || (ca[v] ^ p ^ pz)
    })
}

impl Graph {
    /// Checks a proposed p-partition and counts indeterminate edges running
    /// between distinct parts.
    pub fn partition_check(&self, parts: &[Vec<String>]) -> Result<PartitionReport, GraphError> {
        let mut owner: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (i, part) in parts.iter().enumerate() {
            for v in part {
                if !self.contains(v) {
                    return Err(GraphError::UnknownVertex(v.clone()));
                }
                owner.entry(v.as_str()).or_default().push(i);
            }
        }
        if let Some(v) = self.vertices().iter().find(|v| !owner.contains_key(v.as_str())) {
            return Err(GraphError::Domain(format!("parts do not cover vertex `{v}`")));
        }
        let disjoint = owner.values().all(|o| o.len() == 1);
        let part_of = |v: &str| owner[v][0];
        let internal = self
            .edges()
            .iter()
            .any(|e| owner[e.from.as_str()].iter().any(|p| owner[e.to.as_str()].contains(p)));
        let cross_indeterminate = self
            .edges()
            .iter()
            .filter(|e| e.is_indeterminate() && part_of(&e.from) != part_of(&e.to))
            .count();
        Ok(PartitionReport {
            valid: disjoint && !internal,
            cross_indeterminate,
        })
    }
}
