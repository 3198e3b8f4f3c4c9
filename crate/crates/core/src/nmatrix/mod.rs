//! N-matrices: ordered sequences of component matrices (bimatrix for k = 2,
//! trimatrix for k = 3) with componentwise algebra and classification.

mod decimal;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::neutro::{NeutroValue, NodeState};

pub use decimal::DecimalValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NMatrixError {
    #[error("an n-matrix needs at least one component")]
    NoComponents,
    #[error("component {component} is empty")]
    EmptyComponent { component: usize },
    #[error("component {component}: row {row} has {found} entries, expected {expected}")]
    Ragged {
        component: usize,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("component {component}: {detail}")]
    Dimension { component: usize, detail: String },
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("{0}")]
    Label(String),
    #[error("line {line}: {message}")]
    Literal { line: usize, message: String },
    #[error("arithmetic overflow in component {component}")]
    Overflow { component: usize },
}

/// Entry-level predicates used by classification.
pub trait Entry: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn is_indeterminate(&self) -> bool;
    /// Real value in `[0, 1]` with no indeterminate part.
    fn is_fuzzy(&self) -> bool;
    /// Real part and `I` coefficient both in `[0, 1]`.
    fn is_fuzzy_neutrosophic(&self) -> bool;
}

impl Entry for NeutroValue {
    fn is_zero(&self) -> bool {
        NeutroValue::is_zero(*self)
    }
    fn is_indeterminate(&self) -> bool {
        self.indet != 0
    }
    fn is_fuzzy(&self) -> bool {
        self.indet == 0 && (0..=1).contains(&self.real)
    }
    fn is_fuzzy_neutrosophic(&self) -> bool {
        (0..=1).contains(&self.real) && (0..=1).contains(&self.indet)
    }
}

/// A dense row-major grid with optional row and column labels.
///
/// Equality compares shape and entries only; labels are metadata.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(
    try_from = "RawMatrix<T>",
    into = "RawMatrix<T>",
    bound(serialize = "T: Clone + Serialize", deserialize = "T: Deserialize<'de>")
)]
pub struct Matrix<T = NeutroValue> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    row_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col_labels: Option<Vec<String>>,
}

impl<T> TryFrom<RawMatrix<T>> for Matrix<T> {
    type Error = NMatrixError;
    fn try_from(raw: RawMatrix<T>) -> Result<Self, Self::Error> {
        let mut m = if raw.rows > 0 && raw.cols == 0 && raw.entries.iter().all(Vec::is_empty) {
            Matrix {
                rows: raw.rows,
                cols: 0,
                data: Vec::new(),
                row_labels: None,
                col_labels: None,
            }
        } else {
            Matrix::from_rows(raw.entries)?
        };
        if m.rows != raw.rows || m.cols != raw.cols {
            return Err(NMatrixError::Dimension {
                component: 0,
                detail: format!("declared {}x{}, entries give {}x{}", raw.rows, raw.cols, m.rows, m.cols),
            });
        }
        m = m.with_labels(raw.row_labels, raw.col_labels)?;
        Ok(m)
    }
}

impl<T: Clone> From<Matrix<T>> for RawMatrix<T> {
    fn from(m: Matrix<T>) -> Self {
        RawMatrix {
            rows: m.rows,
            cols: m.cols,
            entries: m.row_vecs(),
            row_labels: m.row_labels,
            col_labels: m.col_labels,
        }
    }
}

impl<T: PartialEq> PartialEq for Matrix<T> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<T: Eq> Eq for Matrix<T> {}

impl<T> Matrix<T> {
    /// Builds a matrix from rows. Needs at least one row; all rows must have
    /// the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, NMatrixError> {
        let n_rows = rows.len();
        let Some(first) = rows.first() else {
            return Err(NMatrixError::EmptyComponent { component: 0 });
        };
        let cols = first.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(NMatrixError::Ragged {
                    component: 0,
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        if cols == 0 {
            return Err(NMatrixError::EmptyComponent { component: 0 });
        }
        Ok(Self {
            rows: n_rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0, "matrix needs at least one row");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn with_labels(
        mut self,
        row_labels: Option<Vec<String>>,
        col_labels: Option<Vec<String>>,
    ) -> Result<Self, NMatrixError> {
        if let Some(r) = &row_labels {
            if r.len() != self.rows {
                return Err(NMatrixError::Label(format!(
                    "{} row labels for {} rows",
                    r.len(),
                    self.rows
                )));
            }
        }
        if let Some(c) = &col_labels {
            if c.len() != self.cols {
                return Err(NMatrixError::Label(format!(
                    "{} column labels for {} columns",
                    c.len(),
                    self.cols
                )));
            }
        }
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    /// A `rows x 0` matrix, as produced by the incidence matrix of an
    /// edgeless graph.
    pub fn without_columns(rows: usize) -> Self {
        assert!(rows > 0, "matrix needs at least one row");
        Self {
            rows,
            cols: 0,
            data: Vec::new(),
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Transposes entries and swaps labels. A `rows x 0` matrix has no
    /// representable transpose and is returned unchanged.
    pub fn transpose(&self) -> Self {
        if self.cols == 0 {
            return self.clone();
        }
        let mut t = Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone());
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }
}

impl<T: Entry> Matrix<T> {
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Entry::is_zero)
    }
}

impl Matrix<NeutroValue> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| NeutroValue::ZERO)
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| self.get(i, i).is_zero())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// A row vector per component, used as the raw input or output of a
/// vector-times-n-matrix product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NVector(pub Vec<Vec<NeutroValue>>);

impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, comp) in self.0.iter().enumerate() {
            if c > 0 {
                f.write_str(" ∪ ")?;
            }
            f.write_str("(")?;
            for (j, v) in comp.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl NVector {
    pub fn from_states(states: &[Vec<NodeState>]) -> Self {
        NVector(states.iter().map(|c| c.iter().map(|s| s.value()).collect()).collect())
    }

    pub fn components(&self) -> &[Vec<NeutroValue>] {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    Square,
    MixedSquare,
    Rectangular,
    MixedRectangular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Content {
    Real,
    Fuzzy,
    SemiFuzzy,
    Neutrosophic,
    SemiNeutrosophic,
    FuzzyNeutrosophic,
    SemiFuzzyNeutrosophic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NMatrixKind {
    pub shape: Shape,
    pub content: Content,
}

impl fmt::Display for NMatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.shape, self.content)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Ordered sequence of `k >= 1` component matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    try_from = "Vec<Matrix<T>>",
    into = "Vec<Matrix<T>>",
    bound(serialize = "T: Clone + Serialize", deserialize = "T: Deserialize<'de>")
)]
pub struct NMatrix<T = NeutroValue> {
    components: Vec<Matrix<T>>,
}

impl<T> TryFrom<Vec<Matrix<T>>> for NMatrix<T> {
    type Error = NMatrixError;
    fn try_from(components: Vec<Matrix<T>>) -> Result<Self, Self::Error> {
        NMatrix::new(components)
    }
}

impl<T> From<NMatrix<T>> for Vec<Matrix<T>> {
    fn from(m: NMatrix<T>) -> Self {
        m.components
    }
}

impl<T> NMatrix<T> {
    pub fn new(components: Vec<Matrix<T>>) -> Result<Self, NMatrixError> {
        if components.is_empty() {
            return Err(NMatrixError::NoComponents);
        }
        Ok(Self { components })
    }

    pub fn from_rows(components: Vec<Vec<Vec<T>>>) -> Result<Self, NMatrixError> {
        let comps = components
            .into_iter()
            .enumerate()
            .map(|(c, rows)| Matrix::from_rows(rows).map_err(|e| e.in_component(c)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(comps)
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Matrix<T>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Matrix<T> {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Matrix<T>> {
        self.components
    }

    pub fn shape(&self) -> Shape {
        let all_square = self.components.iter().all(Matrix::is_square);
        let first = self.components[0].dims();
        let same = self.components.iter().all(|m| m.dims() == first);
        match (all_square, same) {
            (true, true) => Shape::Square,
            (true, false) => Shape::MixedSquare,
            (false, true) => Shape::Rectangular,
            (false, false) => Shape::MixedRectangular,
        }
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> NMatrix<U> {
        NMatrix {
            components: self.components.iter().map(|m| m.map(&mut f)).collect(),
        }
    }
}

impl<T: Clone> NMatrix<T> {
    pub fn transpose(&self) -> Self {
        Self {
            components: self.components.iter().map(Matrix::transpose).collect(),
        }
    }
}

impl<T: Entry> NMatrix<T> {
    /// Pairs `(i, j)` of identical components. The all-zero n-matrix is
    /// allowed to repeat its components and is never reported.
    pub fn duplicate_components(&self) -> Vec<(usize, usize)> {
        if self.components.iter().all(Matrix::is_zero) {
            return Vec::new();
        }
        let mut dups = Vec::new();
        for i in 0..self.k() {
            for j in i + 1..self.k() {
                if self.components[i] == self.components[j] {
                    dups.push((i, j));
                }
            }
        }
        dups
    }

    pub fn classify(&self) -> NMatrixKind {
        NMatrixKind {
            shape: self.shape(),
            content: self.content(),
        }
    }

    pub fn content(&self) -> Content {
        let k = self.k();
        let mut n = 0;
        let mut fzy = 0;
        let mut fzn = 0;
        for m in &self.components {
            let neutro = m.entries().any(Entry::is_indeterminate);
            if neutro && m.entries().all(Entry::is_fuzzy_neutrosophic) {
                fzn += 1;
            } else if neutro {
                n += 1;
            } else if m.entries().all(Entry::is_fuzzy) {
                fzy += 1;
            }
        }
        if fzn == k {
            Content::FuzzyNeutrosophic
        } else if fzn > 0 {
            Content::SemiFuzzyNeutrosophic
        } else if n == k {
            Content::Neutrosophic
        } else if n > 0 {
            Content::SemiNeutrosophic
        } else if fzy == k {
            Content::Fuzzy
        } else if fzy > 0 {
            Content::SemiFuzzy
        } else {
            Content::Real
        }
    }
}

impl NMatrixError {
    fn in_component(self, component: usize) -> Self {
        match self {
            NMatrixError::EmptyComponent { .. } => NMatrixError::EmptyComponent { component },
            NMatrixError::Ragged {
                row, expected, found, ..
            } => NMatrixError::Ragged {
                component,
                row,
                expected,
                found,
            },
            NMatrixError::Dimension { detail, .. } => NMatrixError::Dimension { component, detail },
            other => other,
        }
    }
}

impl NMatrix<NeutroValue> {
    pub fn zeros_like(&self) -> Self {
        Self {
            components: self.components.iter().map(|m| m.map(|_| NeutroValue::ZERO)).collect(),
        }
    }

    pub fn scalar_mul(&self, lambda: NeutroValue) -> Self {
        self.map(|&v| lambda * v)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, NMatrixError> {
        if self.k() != other.k() {
            return Err(NMatrixError::ComponentCount {
                expected: self.k(),
                found: other.k(),
            });
        }
        let mut components = Vec::with_capacity(self.k());
        for (c, (a, b)) in self.components.iter().zip(&other.components).enumerate() {
            if a.dims() != b.dims() {
                return Err(NMatrixError::Dimension {
                    component: c,
                    detail: format!("cannot add {}x{} and {}x{}", a.rows, a.cols, b.rows, b.cols),
                });
            }
            let data = a
                .data
                .iter()
                .zip(&b.data)
                .map(|(x, y)| x.checked_add(*y))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| NMatrixError::Overflow { component: c })?;
            components.push(Matrix { data, ..a.clone() });
        }
        Ok(Self { components })
    }

    /// Row vector times matrix, component by component, without thresholding.
    pub fn vec_mul(&self, v: &NVector) -> Result<NVector, NMatrixError> {
        if v.0.len() != self.k() {
            return Err(NMatrixError::ComponentCount {
                expected: self.k(),
                found: v.0.len(),
            });
        }
        let mut out = Vec::with_capacity(self.k());
        for (c, (m, x)) in self.components.iter().zip(&v.0).enumerate() {
            if x.len() != m.rows {
                return Err(NMatrixError::Dimension {
                    component: c,
                    detail: format!("vector of length {} against {} rows", x.len(), m.rows),
                });
            }
            let mut acc = vec![NeutroValue::ZERO; m.cols];
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    let prod = xi
                        .checked_mul(*m.get(i, j))
                        .and_then(|p| slot.checked_add(p))
                        .map_err(|_| NMatrixError::Overflow { component: c })?;
                    *slot = prod;
                }
            }
            out.push(acc);
        }
        Ok(NVector(out))
    }
}

impl<T: fmt::Display> fmt::Display for NMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("---\n")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl<T: FromStr> NMatrix<T> {
    /// Reads the literal format: whitespace-separated rows, components
    /// separated by a `---` line, `#` comments and blank lines ignored.
    pub fn parse_literal(text: &str) -> Result<Self, NMatrixError> {
        let mut components: Vec<Vec<Vec<T>>> = vec![Vec::new()];
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line == "---" {
                components.push(Vec::new());
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<T>().map_err(|_| NMatrixError::Literal {
                        line: n + 1,
                        message: format!("malformed entry `{tok}`"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            components.last_mut().expect("non-empty").push(row);
        }
        Self::from_rows(components)
    }
}

impl FromStr for NMatrix<NeutroValue> {
    type Err = NMatrixError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_literal(s)
    }
}

impl FromStr for NMatrix<DecimalValue> {
    type Err = NMatrixError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_literal(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nm(s: &str) -> NMatrix {
        s.parse().unwrap()
    }

    fn dm(s: &str) -> NMatrix<DecimalValue> {
        s.parse().unwrap()
    }

    #[test]
    fn equality_is_ordered_and_entrywise() {
        let a = nm("3 2 0\n2 1 1\n---\n0 -1 2\n0 0 1");
        let c = nm("1 1 1\n0 0 0\n---\n2 0 1\n1 0 2");
        assert_ne!(a, c);
        assert_eq!(a, a.clone());
        let swapped = NMatrix::new(vec![a.component(1).clone(), a.component(0).clone()]).unwrap();
        assert_ne!(a, swapped);
    }

    #[test]
    fn scalar_multiples() {
        let a = nm("2 0 1\n3 3 -1\n---\n0 1 -1\n2 1 0");
        assert_eq!(
            a.scalar_mul(NeutroValue::real(3)),
            nm("6 0 3\n9 9 -3\n---\n0 3 -3\n6 3 0")
        );
        let row = nm("3 1 2 -4\n---\n0 1 -1 0");
        assert_eq!(row.scalar_mul(NeutroValue::real(-2)), nm("-6 -2 -4 8\n---\n0 -2 2 0"));
        assert_eq!(a.scalar_mul(NeutroValue::ZERO), a.zeros_like());
    }

    #[test]
    fn add_reports_offending_component() {
        let a = nm("1 0\n0 1\n---\n1 1");
        let b = nm("1 0\n0 1\n---\n1 1 1");
        match a.try_add(&b) {
            Err(NMatrixError::Dimension { component, .. }) => assert_eq!(component, 1),
            other => panic!("{other:?}"),
        }
        assert_eq!(a.try_add(&a.zeros_like()).unwrap(), a);
        let expert1 = nm("0 1 I\n1 0 0\n-1 I 0");
        let expert2 = nm("0 -1 I\n1 0 1\n0 0 0");
        assert_eq!(expert1.try_add(&expert2).unwrap(), nm("0 0 2I\n2 0 1\n-1 I 0"));
    }

    #[test]
    fn vec_mul_dimension_checked() {
        let a = nm("1 0\n0 1");
        let bad = NVector(vec![vec![NeutroValue::ONE; 3]]);
        assert!(matches!(
            a.vec_mul(&bad),
            Err(NMatrixError::Dimension { component: 0, .. })
        ));
        let zero = NVector(vec![vec![NeutroValue::ZERO; 2]]);
        assert_eq!(a.vec_mul(&zero).unwrap(), zero);
    }

    #[test]
    fn transpose_swaps_labels() {
        let m = Matrix::from_rows(vec![vec![NeutroValue::ONE, NeutroValue::I]])
            .unwrap()
            .with_labels(Some(vec!["D1".into()]), Some(vec!["R1".into(), "R2".into()]))
            .unwrap();
        let t = m.transpose();
        assert_eq!(t.dims(), (2, 1));
        assert_eq!(t.row_labels().unwrap(), ["R1", "R2"]);
        assert_eq!(t.col_labels().unwrap(), ["D1"]);
        assert_eq!(t.transpose(), m);
        let one = nm("I");
        assert_eq!(one.transpose(), one);
    }

    #[test]
    fn shape_classes() {
        assert_eq!(
            nm("0 I 0\n1 2 -1\n3 2 I\n---\n2 I 1\nI 0 I\n1 1 2").classify(),
            NMatrixKind {
                shape: Shape::Square,
                content: Content::Neutrosophic
            }
        );
        assert_eq!(
            nm("3 1 1\n2 2 2\n---\n-I 1 2\n0 I 3").classify(),
            NMatrixKind {
                shape: Shape::Rectangular,
                content: Content::SemiNeutrosophic
            }
        );
        let mixed = nm("3 1 1 1 I\nI 0 2 3 4\n---\nI 2 0 I\n3 1 2 1\n4 1 0 0\n3 3 1 1\n1 I 0 I");
        assert_eq!(
            mixed.classify(),
            NMatrixKind {
                shape: Shape::MixedRectangular,
                content: Content::Neutrosophic
            }
        );
        let tri = nm("3 0\n1 1\n---\n0 1\n0 1\n---\n-2 0\n0 0");
        assert_eq!(tri.shape(), Shape::Square);
        assert_eq!(nm("1 0\n0 1\n---\n1").shape(), Shape::MixedSquare);
    }

    #[test]
    fn fuzzy_content_classes() {
        let square_fuzzy = dm("0 .1 0\n.1 .2 .1\n.3 .2 .1\n---\n.2 .1 .1\n.1 0 .1\n.2 .1 .2");
        assert_eq!(
            square_fuzzy.classify(),
            NMatrixKind {
                shape: Shape::Square,
                content: Content::Fuzzy
            }
        );
        let semi = dm("3 1 1\n2 2 2\n---\n.5 .7 .2\n0 .1 .3");
        assert_eq!(
            semi.classify(),
            NMatrixKind {
                shape: Shape::Rectangular,
                content: Content::SemiFuzzy
            }
        );
        let column = dm("1 1 1 1\n0 0 0 0\n---\n0\n1\n1\n2\n3");
        assert_eq!(
            column.classify(),
            NMatrixKind {
                shape: Shape::MixedRectangular,
                content: Content::SemiFuzzy
            }
        );
        let fzn = dm("0 .2I 1\nI .7 0\n1 0 .1\n---\n.1 0\n.2 I\n1 .2I");
        assert_eq!(fzn.content(), Content::FuzzyNeutrosophic);
        let semi_fzn = [
            "2 0 1\n1 2 3\nI 0 I\n---\nI .2I .6 .1\n.3 1 0 I\n0 0 .2 1",
            "I .3I 0\n1 .2 .6\n---\n.6 0 .3 1\n1 1 .6 .2\n.3 0 0 .5",
            ".3\nI\n.2\n0\n---\nI\n7\n2\n1",
        ];
        for text in semi_fzn {
            assert_eq!(dm(text).content(), Content::SemiFuzzyNeutrosophic, "{text}");
        }
        // A negative fractional entry falls outside [0, 1], so that component
        // is neutrosophic but not fuzzy neutrosophic.
        let with_negative = dm("0 I .3\n.2I .4 1\n0 .3 -.6\n---\n1 I 0\nI 1 .8\n.6 1 .7I");
        assert_eq!(with_negative.content(), Content::SemiFuzzyNeutrosophic);
        assert_eq!(nm("2 3\n---\n4 5").content(), Content::Real);
    }

    #[test]
    fn duplicate_components_warn_except_zero() {
        assert_eq!(nm("1 2\n---\n1 2").duplicate_components(), vec![(0, 1)]);
        assert!(nm("0 0\n---\n0 0").duplicate_components().is_empty());
        assert!(nm("1 2\n---\n2 1").duplicate_components().is_empty());
    }

    #[test]
    fn literal_round_trip_and_errors() {
        let m = nm("1 -1 I\n2+I 0 2I\n---\n5");
        assert_eq!(m.to_string().parse::<NMatrix>().unwrap(), m);
        assert!(matches!(
            "1 2\n3".parse::<NMatrix>(),
            Err(NMatrixError::Ragged {
                component: 0,
                row: 1,
                ..
            })
        ));
        assert!(matches!(
            "1 x".parse::<NMatrix>(),
            Err(NMatrixError::Literal { line: 1, .. })
        ));
        assert!(matches!(
            "1\n---\n".parse::<NMatrix>(),
            Err(NMatrixError::EmptyComponent { component: 1 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let m = nm("1 I\n0 -1\n---\n2+I 3");
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<NMatrix>(&json).unwrap(), m);
        assert!(serde_json::from_str::<NMatrix>("[]").is_err());
    }

    fn value() -> impl Strategy<Value = NeutroValue> {
        (-3i64..=3, -3i64..=3).prop_map(|(r, i)| NeutroValue::new(r, i))
    }

    fn shapes() -> impl Strategy<Value = Vec<(usize, usize)>> {
        prop::collection::vec((1usize..=4, 1usize..=4), 1..=3)
    }

    fn matrix_with(shapes: Vec<(usize, usize)>) -> impl Strategy<Value = NMatrix> {
        shapes
            .into_iter()
            .map(|(r, c)| prop::collection::vec(prop::collection::vec(value(), c), r))
            .collect::<Vec<_>>()
            .prop_map(|rows| NMatrix::from_rows(rows).unwrap())
    }

    fn triple() -> impl Strategy<Value = (NMatrix, NMatrix, NMatrix, NeutroValue)> {
        shapes().prop_flat_map(|s| (matrix_with(s.clone()), matrix_with(s.clone()), matrix_with(s), value()))
    }

    fn vector_for(m: &NMatrix) -> impl Strategy<Value = NVector> {
        m.components()
            .iter()
            .map(|c| prop::collection::vec(value(), c.rows()))
            .collect::<Vec<_>>()
            .prop_map(NVector)
    }

    proptest! {
        #[test]
        fn componentwise_laws((a, b, c, lambda) in triple()) {
            let sum = a.try_add(&b).unwrap();
            prop_assert_eq!(&sum, &b.try_add(&a).unwrap());
            prop_assert_eq!(sum.try_add(&c).unwrap(), a.try_add(&b.try_add(&c).unwrap()).unwrap());
            let scaled = a.scalar_mul(lambda);
            for i in 0..a.k() {
                let single = NMatrix::new(vec![a.component(i).clone()]).unwrap();
                prop_assert_eq!(scaled.component(i), &single.scalar_mul(lambda).component(0).clone());
                let other = NMatrix::new(vec![b.component(i).clone()]).unwrap();
                prop_assert_eq!(sum.component(i), &single.try_add(&other).unwrap().component(0).clone());
            }
            prop_assert_eq!(a.transpose().transpose(), a.clone());
            let kind = a.classify();
            prop_assert_eq!(kind.shape, a.shape());
        }

        #[test]
        fn vec_mul_componentwise_and_transpose_contract(
            (a, v) in shapes().prop_flat_map(matrix_with).prop_flat_map(|m| {
                let v = vector_for(&m);
                (Just(m), v)
            })
        ) {
            let out = a.vec_mul(&v).unwrap();
            for i in 0..a.k() {
                let single = NMatrix::new(vec![a.component(i).clone()]).unwrap();
                let vi = NVector(vec![v.0[i].clone()]);
                prop_assert_eq!(&single.vec_mul(&vi).unwrap().0[0], &out.0[i]);
            }
            let back = a.transpose().vec_mul(&out).unwrap();
            for (b, x) in back.0.iter().zip(&v.0) {
                prop_assert_eq!(b.len(), x.len());
            }
        }
    }
}
